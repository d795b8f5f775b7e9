//! Graph views of codes: membership/containment DAGs, compression and
//! decoration (the Mostowski collapse), a digraph ↔ Nat bijection through
//! bit-merge pairing, and deterministic JSON / dot serializations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;

use crate::bitset::{self, Nat};
use crate::error::{Error, Result};
use crate::hfs::Ulimit;
use crate::pairing::{bitmerge_pair, bitmerge_unpair};

/// A directed edge between Nat-labeled vertices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub src: Nat,
    pub dst: Nat,
}

impl Edge {
    pub fn new(src: impl Into<Nat>, dst: impl Into<Nat>) -> Self {
        Edge {
            src: src.into(),
            dst: dst.into(),
        }
    }
}

impl From<(Nat, Nat)> for Edge {
    fn from((src, dst): (Nat, Nat)) -> Self {
        Edge { src, dst }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.src, self.dst)
    }
}

/// A digraph as a vertex-sorted adjacency structure with sorted neighbor
/// lists. The vertex set is exactly the endpoints of the edges plus any
/// explicitly isolated vertices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Digraph {
    adjacency: Vec<(Nat, Vec<Nat>)>,
}

impl Digraph {
    /// The graph with no vertices.
    pub fn empty() -> Self {
        Digraph::default()
    }

    /// Builds a graph from explicit vertices plus edges (whose endpoints are
    /// added as vertices too). A repeated edge is rejected.
    pub fn from_parts(
        vertices: impl IntoIterator<Item = Nat>,
        edges: impl IntoIterator<Item = Edge>,
    ) -> Result<Self> {
        let mut adj: BTreeMap<Nat, BTreeSet<Nat>> =
            vertices.into_iter().map(|v| (v, BTreeSet::new())).collect();
        for e in edges {
            adj.entry(e.dst.clone()).or_default();
            if !adj.entry(e.src.clone()).or_default().insert(e.dst.clone()) {
                return Err(Error::DuplicateEdge {
                    src: e.src,
                    dst: e.dst,
                });
            }
        }
        Ok(Self::build(adj))
    }

    /// Builds the graph spanned by `edges` alone.
    pub fn from_edges(edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        Self::from_parts([], edges)
    }

    fn build(adj: BTreeMap<Nat, BTreeSet<Nat>>) -> Self {
        Digraph {
            adjacency: adj
                .into_iter()
                .map(|(v, ns)| (v, ns.into_iter().collect()))
                .collect(),
        }
    }

    /// Vertices with their sorted out-neighbor lists, ascending by vertex.
    pub fn adjacency(&self) -> &[(Nat, Vec<Nat>)] {
        &self.adjacency
    }

    pub fn vertices(&self) -> impl Iterator<Item = &Nat> {
        self.adjacency.iter().map(|(v, _)| v)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|(_, ns)| ns.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    /// Out-neighbors of `v`, or `None` if `v` is not a vertex.
    pub fn neighbors(&self, v: &Nat) -> Option<&[Nat]> {
        self.adjacency
            .binary_search_by(|(w, _)| w.cmp(v))
            .ok()
            .map(|i| self.adjacency[i].1.as_slice())
    }

    /// Edges in lexicographic (src, dst) order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adjacency.iter().flat_map(|(v, ns)| {
            ns.iter().map(move |w| Edge {
                src: v.clone(),
                dst: w.clone(),
            })
        })
    }

    /// The graph with every edge reversed; the vertex set is unchanged.
    pub fn transpose(&self) -> Digraph {
        let mut adj: BTreeMap<Nat, BTreeSet<Nat>> = self
            .vertices()
            .map(|v| (v.clone(), BTreeSet::new()))
            .collect();
        for e in self.edges() {
            adj.get_mut(&e.dst)
                .expect("edge endpoints are vertices")
                .insert(e.src);
        }
        Self::build(adj)
    }

    /// Some vertex with neither outgoing nor incoming edges, if any.
    fn isolated_vertex(&self) -> Option<&Nat> {
        let mut targets: BTreeSet<&Nat> = BTreeSet::new();
        for (_, ns) in &self.adjacency {
            targets.extend(ns.iter());
        }
        self.adjacency
            .iter()
            .find(|(v, ns)| ns.is_empty() && !targets.contains(v))
            .map(|(v, _)| v)
    }
}

/// The transitive containment edges of `n`: an edge `v -> x` for every
/// element `x` of every set `v` reachable from `n` by iterated membership.
/// A code below the ulimit is an urelement and contributes nothing.
pub fn contains_edges(n: &Nat, ulimit: &Ulimit) -> Vec<Edge> {
    let mut edges: BTreeSet<(Nat, Nat)> = BTreeSet::new();
    let mut visited: BTreeSet<Nat> = BTreeSet::new();
    let mut stack = vec![n.clone()];
    while let Some(v) = stack.pop() {
        if ulimit.admits(&v) || !visited.insert(v.clone()) {
            continue;
        }
        let shifted = &v - ulimit.as_nat();
        for x in bitset::bit_elements(&shifted) {
            edges.insert((v.clone(), x.clone()));
            stack.push(x);
        }
    }
    edges.into_iter().map(Edge::from).collect()
}

/// The containment edges reversed: `x -> v` whenever `x` is an element of
/// `v`. Sorted like [`contains_edges`].
pub fn member_edges(n: &Nat, ulimit: &Ulimit) -> Vec<Edge> {
    let mut edges: Vec<Edge> = contains_edges(n, ulimit)
        .into_iter()
        .map(|e| Edge {
            src: e.dst,
            dst: e.src,
        })
        .collect();
    edges.sort_unstable();
    edges
}

/// Adjacency form of the containment view. The root `n` is always a vertex,
/// even when it has no edges.
pub fn contains_dag(n: &Nat, ulimit: &Ulimit) -> Digraph {
    Digraph::from_parts([n.clone()], contains_edges(n, ulimit))
        .expect("containment edges are deduplicated")
}

/// Adjacency form of the membership view; the transpose of [`contains_dag`].
pub fn member_dag(n: &Nat, ulimit: &Ulimit) -> Digraph {
    Digraph::from_parts([n.clone()], member_edges(n, ulimit))
        .expect("membership edges are deduplicated")
}

/// The containment DAG of `n` (pure universe) with vertices relabeled
/// compactly: original labels descending receive 0, 1, 2, ..., so the root
/// `n` becomes vertex 0 and the empty set becomes the largest label.
pub fn compress_dag(n: &Nat) -> Digraph {
    let ulimit = Ulimit::pure();
    let edges = contains_edges(n, &ulimit);
    let mut vertices: BTreeSet<Nat> = BTreeSet::new();
    vertices.insert(n.clone());
    for e in &edges {
        vertices.insert(e.src.clone());
        vertices.insert(e.dst.clone());
    }
    let remap: BTreeMap<Nat, Nat> = vertices
        .into_iter()
        .rev()
        .enumerate()
        .map(|(i, v)| (v, Nat::from(i)))
        .collect();
    let remapped = edges.into_iter().map(|e| Edge {
        src: remap[&e.src].clone(),
        dst: remap[&e.dst].clone(),
    });
    Digraph::from_parts(remap.values().cloned(), remapped)
        .expect("relabeling a deduplicated edge set cannot introduce duplicates")
}

/// Mostowski decoration of a DAG: a leaf decorates to 0 (the empty set) and
/// an inner vertex to the code of the set of its children's decorations
/// (deduplicated). Returns the decoration of the root, the smallest vertex
/// label — for the output of [`compress_dag`] this recovers the original
/// number. Cyclic input is reported, not looped over.
pub fn decorate(g: &Digraph) -> Result<Nat> {
    let Some((root, _)) = g.adjacency().first() else {
        return Ok(Nat::zero());
    };

    enum Mark {
        InProgress,
        Done(Nat),
    }

    let mut marks: BTreeMap<Nat, Mark> = BTreeMap::new();
    let mut stack: Vec<(&Nat, usize)> = vec![(root, 0)];
    marks.insert(root.clone(), Mark::InProgress);
    while let Some(&(v, child_idx)) = stack.last() {
        let neighbors = g.neighbors(v).expect("stack holds vertices of g");
        if child_idx < neighbors.len() {
            stack.last_mut().expect("just observed").1 += 1;
            let w = &neighbors[child_idx];
            match marks.get(w) {
                Some(Mark::InProgress) => {
                    return Err(Error::CycleDetected { vertex: w.clone() })
                }
                Some(Mark::Done(_)) => {}
                None => {
                    marks.insert(w.clone(), Mark::InProgress);
                    stack.push((w, 0));
                }
            }
        } else {
            let child_decorations: BTreeSet<&Nat> = neighbors
                .iter()
                .map(|w| match &marks[w] {
                    Mark::Done(d) => d,
                    Mark::InProgress => unreachable!("children are decorated first"),
                })
                .collect();
            let code = bitset::sum_of_exponents(child_decorations)?;
            stack.pop();
            marks.insert(v.clone(), Mark::Done(code));
        }
    }
    match marks.remove(root) {
        Some(Mark::Done(d)) => Ok(d),
        _ => unreachable!("the root is decorated when the stack drains"),
    }
}

/// Decodes `n` as an edge set: every bit position, bit-merge unpaired,
/// yields one `src -> dst` edge.
pub fn nat_to_digraph(n: &Nat) -> Digraph {
    let edges = bitset::bit_elements(n).map(|p| {
        let pair = bitmerge_unpair(&p);
        Edge {
            src: pair.first,
            dst: pair.second,
        }
    });
    Digraph::from_edges(edges).expect("distinct bit positions unpair to distinct edges")
}

/// Inverse of [`nat_to_digraph`]: pairs every edge and sums the powers of 2.
/// A vertex without any incident edge cannot be represented and is reported.
pub fn digraph_to_nat(g: &Digraph) -> Result<Nat> {
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex { vertex: v.clone() });
    }
    let mut codes: Vec<Nat> = g
        .edges()
        .map(|e| bitmerge_pair(&e.src, &e.dst))
        .collect();
    codes.sort_unstable();
    bitset::sum_of_exponents(codes.iter())
}

/// Reverses every edge of the digraph coded by `n` and re-encodes. An
/// involution on Nat.
pub fn transpose_nat(n: &Nat) -> Result<Nat> {
    digraph_to_nat(&nat_to_digraph(n).transpose())
}

/// Deterministic JSON rendering: `{"vertices":[...],"edges":[[src,dst],...]}`
/// with vertices ascending and edges in (src, dst) order. Numbers below 2^53
/// are emitted as JSON numbers, anything larger as a decimal string.
pub fn to_json(g: &Digraph) -> String {
    let vertices: Vec<serde_json::Value> = g.vertices().map(nat_to_json).collect();
    let edges: Vec<serde_json::Value> = g
        .edges()
        .map(|e| serde_json::Value::Array(vec![nat_to_json(&e.src), nat_to_json(&e.dst)]))
        .collect();
    format!(
        "{{\"vertices\":{},\"edges\":{}}}",
        serde_json::Value::Array(vertices),
        serde_json::Value::Array(edges)
    )
}

/// Inverse of [`to_json`]; accepts any vertex order and large values written
/// as decimal strings.
pub fn from_json(text: &str) -> Result<Digraph> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Json {
        message: e.to_string(),
    })?;
    let object = value.as_object().ok_or_else(|| Error::Json {
        message: "expected a JSON object".into(),
    })?;
    let field = |name: &str| -> Result<&Vec<serde_json::Value>> {
        object
            .get(name)
            .and_then(|v| v.as_array())
            .ok_or_else(|| Error::Json {
                message: format!("expected an array field {name:?}"),
            })
    };
    let vertices = field("vertices")?
        .iter()
        .map(nat_from_json)
        .collect::<Result<Vec<_>>>()?;
    let edges = field("edges")?
        .iter()
        .map(|e| {
            let pair = e.as_array().filter(|a| a.len() == 2).ok_or_else(|| Error::Json {
                message: "expected edges to be [src,dst] arrays".into(),
            })?;
            Ok(Edge {
                src: nat_from_json(&pair[0])?,
                dst: nat_from_json(&pair[1])?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Digraph::from_parts(vertices, edges)
}

fn nat_to_json(n: &Nat) -> serde_json::Value {
    match num_traits::ToPrimitive::to_u64(n) {
        Some(v) if v < (1 << 53) => serde_json::Value::from(v),
        _ => serde_json::Value::String(n.to_string()),
    }
}

fn nat_from_json(value: &serde_json::Value) -> Result<Nat> {
    if let Some(v) = value.as_u64() {
        return Ok(Nat::from(v));
    }
    if let Some(s) = value.as_str() {
        if let Some(n) = Nat::parse_bytes(s.as_bytes(), 10) {
            return Ok(n);
        }
    }
    Err(Error::Json {
        message: format!("expected a natural number, found {value}"),
    })
}

/// Deterministic Graphviz rendering: vertex lines ascending, then edge lines
/// in (src, dst) order. The empty graph renders as `digraph g {\n}\n`.
pub fn to_dot(g: &Digraph) -> String {
    let mut out = String::from("digraph g {\n");
    for v in g.vertices() {
        out.push_str(&format!("  {v};\n"));
    }
    for e in g.edges() {
        out.push_str(&format!("  {} -> {};\n", e.src, e.dst));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Nat {
        Nat::from(v)
    }

    fn edge(s: u64, d: u64) -> Edge {
        Edge::new(nat(s), nat(d))
    }

    fn adjacency_string(g: &Digraph) -> String {
        // compact fixture notation: "v-[n1,n2],w-[...]"
        g.adjacency()
            .iter()
            .map(|(v, ns)| {
                let ns: Vec<String> = ns.iter().map(|n| n.to_string()).collect();
                format!("{v}-[{}]", ns.join(","))
            })
            .collect::<Vec<_>>()
            .join(",")
    }

    fn edges_string(edges: &[Edge]) -> String {
        let parts: Vec<String> = edges
            .iter()
            .map(|e| format!("{}-{}", e.src, e.dst))
            .collect();
        format!("[{}]", parts.join(","))
    }

    #[test]
    fn contains_edges_of_42() {
        let got = edges_string(&contains_edges(&nat(42), &Ulimit::pure()));
        assert_eq!(got, "[1-0,2-1,3-0,3-1,5-0,5-2,42-1,42-3,42-5]");
    }

    #[test]
    fn member_edges_of_42() {
        let got = edges_string(&member_edges(&nat(42), &Ulimit::pure()));
        assert_eq!(got, "[0-1,0-3,0-5,1-2,1-3,1-42,2-5,3-42,5-42]");
    }

    #[test]
    fn urelements_make_shallower_views() {
        let u = Ulimit::from(1u32);
        assert_eq!(
            adjacency_string(&contains_dag(&nat(42), &u)),
            "0-[],1-[],2-[0],3-[1],5-[2],42-[0,3,5]"
        );
        assert_eq!(
            adjacency_string(&member_dag(&nat(42), &u)),
            "0-[2,42],1-[3],2-[5],3-[42],5-[42],42-[]"
        );
        // a pure urelement has no edges at all
        assert!(contains_edges(&nat(2), &Ulimit::from(3u32)).is_empty());
    }

    #[test]
    fn roots_without_edges_still_appear() {
        let g = contains_dag(&nat(0), &Ulimit::pure());
        assert_eq!(adjacency_string(&g), "0-[]");
        assert_eq!(g.vertex_count(), 1);
    }

    #[test]
    fn compression_relabels_descending() {
        assert_eq!(
            adjacency_string(&compress_dag(&nat(42))),
            "0-[1,2,4],1-[3,5],2-[4,5],3-[4],4-[5],5-[]"
        );
        assert_eq!(adjacency_string(&compress_dag(&nat(0))), "0-[]");
        assert_eq!(adjacency_string(&compress_dag(&nat(1))), "0-[1],1-[]");
    }

    #[test]
    fn decoration_inverts_compression() {
        for n in 0..=2000u64 {
            let n = nat(n);
            assert_eq!(decorate(&compress_dag(&n)).unwrap(), n);
        }
    }

    #[test]
    fn decoration_deduplicates_equal_children() {
        // vertices 1 and 2 both decorate to 0, so 0 decorates to {0} = 1
        let g = Digraph::from_edges([edge(0, 1), edge(0, 2)]).unwrap();
        assert_eq!(decorate(&g).unwrap(), nat(1));
    }

    #[test]
    fn decoration_of_a_larger_dag() {
        // two distinct vertices share a decoration deeper down as well
        let g = Digraph::from_edges([
            edge(0, 1),
            edge(0, 2),
            edge(0, 5),
            edge(0, 6),
            edge(0, 7),
            edge(1, 7),
            edge(1, 9),
            edge(2, 7),
            edge(2, 10),
            edge(3, 7),
            edge(4, 8),
            edge(4, 10),
            edge(5, 8),
            edge(5, 9),
            edge(6, 8),
            edge(7, 9),
            edge(8, 9),
            edge(9, 10),
        ])
        .unwrap();
        let n = decorate(&g).unwrap();
        assert_eq!(n, nat(116));
        // decoration is a fixpoint under compress-then-decorate
        assert_eq!(decorate(&compress_dag(&n)).unwrap(), n);
    }

    #[test]
    fn decoration_rejects_cycles() {
        let g = Digraph::from_edges([edge(0, 1), edge(1, 2), edge(2, 0)]).unwrap();
        assert_eq!(
            decorate(&g).unwrap_err(),
            Error::CycleDetected { vertex: nat(0) }
        );
        let g = Digraph::from_edges([edge(0, 0)]).unwrap();
        assert!(matches!(decorate(&g), Err(Error::CycleDetected { .. })));
    }

    #[test]
    fn digraph_of_255_and_2008() {
        assert_eq!(
            adjacency_string(&nat_to_digraph(&nat(255))),
            "0-[0,1],1-[0,1],2-[0,1],3-[0,1]"
        );
        assert_eq!(
            adjacency_string(&nat_to_digraph(&nat(2008))),
            "0-[2,3],1-[1,2],2-[0,1],3-[1]"
        );
    }

    #[test]
    fn digraph_roundtrips() {
        for n in 0..=5000u64 {
            let n = nat(n);
            assert_eq!(digraph_to_nat(&nat_to_digraph(&n)).unwrap(), n);
        }
    }

    #[test]
    fn isolated_vertices_cannot_be_encoded() {
        let g = Digraph::from_parts([nat(9)], [edge(0, 1)]).unwrap();
        assert_eq!(
            digraph_to_nat(&g).unwrap_err(),
            Error::IsolatedVertex { vertex: nat(9) }
        );
    }

    #[test]
    fn transpose_of_small_codes() {
        let expected = [0u64, 1, 4, 5, 2, 3, 6, 7];
        for (n, want) in expected.into_iter().enumerate() {
            assert_eq!(transpose_nat(&nat(n as u64)).unwrap(), nat(want), "n = {n}");
        }
        for n in 0..=2000u64 {
            let n = nat(n);
            assert_eq!(transpose_nat(&transpose_nat(&n).unwrap()).unwrap(), n);
        }
    }

    #[test]
    fn duplicate_edges_are_rejected() {
        assert_eq!(
            Digraph::from_edges([edge(1, 2), edge(1, 2)]).unwrap_err(),
            Error::DuplicateEdge {
                src: nat(1),
                dst: nat(2)
            }
        );
    }

    #[test]
    fn json_roundtrip_and_shape() {
        let g = nat_to_digraph(&nat(2008));
        let json = to_json(&g);
        assert_eq!(
            json,
            "{\"vertices\":[0,1,2,3],\"edges\":[[0,2],[0,3],[1,1],[1,2],[2,0],[2,1],[3,1]]}"
        );
        assert_eq!(from_json(&json).unwrap(), g);
        // empty graph
        assert_eq!(to_json(&Digraph::empty()), "{\"vertices\":[],\"edges\":[]}");
        // big labels downgrade to strings and still parse
        let big = Digraph::from_edges([Edge::new(Nat::from(1u128 << 60), nat(1))]).unwrap();
        let json = to_json(&big);
        assert!(json.contains("\"1152921504606846976\""));
        assert_eq!(from_json(&json).unwrap(), big);
        assert!(matches!(from_json("[]"), Err(Error::Json { .. })));
        assert!(matches!(
            from_json("{\"vertices\":[],\"edges\":[[1]]}"),
            Err(Error::Json { .. })
        ));
        assert!(matches!(
            from_json("{\"vertices\":[-1],\"edges\":[]}"),
            Err(Error::Json { .. })
        ));
    }

    #[test]
    fn dot_rendering_is_deterministic() {
        assert_eq!(to_dot(&Digraph::empty()), "digraph g {\n}\n");
        let g = Digraph::from_edges([edge(0, 1)]).unwrap();
        assert_eq!(to_dot(&g), "digraph g {\n  0;\n  1;\n  0 -> 1;\n}\n");
        let g = nat_to_digraph(&nat(255));
        let dot = to_dot(&g);
        let again = to_dot(&nat_to_digraph(&nat(255)));
        assert_eq!(dot, again);
        assert!(dot.starts_with("digraph g {\n"));
        assert!(dot.ends_with("}\n"));
        assert!(dot.contains("  3 -> 1;\n"));
    }
}
