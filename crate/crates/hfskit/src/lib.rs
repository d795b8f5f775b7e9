//! Bijective arithmetic encodings between natural numbers and finite,
//! hereditarily finite objects: sets with urelements, hypergraphs, and
//! directed graphs.
//!
//! Everything is built on one idea: a natural number codes a finite set of
//! naturals through its binary expansion (the exponents of 2 are the
//! elements), and iterating that codec in different ways yields codecs for
//! nested sets, hypergraphs, and edge sets. On top of the codecs sit pairing
//! functions, fold/transport combinators that move operations between the
//! number side and the set side, von Neumann ordinals and choice functions,
//! and DAG compression/decoration.
//!
//! All total codecs here are bijections, so `encode(decode(n)) == n` holds
//! for every natural `n`; the test suite leans on that heavily.

pub mod bitset;
pub mod cap;
mod error;
pub mod graphs;
pub mod hfs;
pub mod hypergraph;
pub mod notation;
pub mod ordinal;
pub mod pairing;
pub mod streams;
pub mod transport;

pub use bitset::{bit_elements, nat_to_set, set_to_nat, BitElements, Nat, NatSet};
pub use cap::{max_bits, set_max_bits, DEFAULT_MAX_BITS};
pub use error::{Error, Result};
pub use graphs::{
    compress_dag, contains_dag, contains_edges, decorate, digraph_to_nat, from_json,
    member_dag, member_edges, nat_to_digraph, to_dot, to_json, transpose_nat, Digraph, Edge,
};
pub use hfs::{hfs_to_nat, nat_to_hfs, Hfs, HfsView, Ulimit};
pub use hypergraph::{hypergraph_to_nat, nat_to_hypergraph, parse_hypergraph, Hypergraph};
pub use notation::{parse_hfs, print_hfs};
pub use ordinal::{hfs_ordinal, nat_choice_fun, nat_ordinal, nat_powset};
pub use pairing::{
    bitmerge_pair, bitmerge_unpair, cantor_pair, cantor_unpair, kuratowski_pair,
    kuratowski_unpair, pair_with, unpair_with, NatPair, PairScheme,
};
pub use streams::{hfs_level_stream, hfs_stream, nat_stream, powerset, HfsLevelStream};
pub use transport::{
    hfold, lift_to_hfs, lift_to_nat, nat_adduction, nat_difference, nat_fold,
    nat_intersection, nat_size, nat_union, DepthAlgebra, FoldAlgebra, SizeAlgebra,
};
