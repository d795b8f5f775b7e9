//! Infinite enumerations of HFS: by unranking codes, and by building
//! powerset stages directly.

use std::collections::HashSet;

use num_traits::{One, Zero};

use crate::bitset::Nat;
use crate::error::{Error, Result};
use crate::hfs::{nat_to_hfs, Hfs, Ulimit};

/// Limit on powerset enumeration input size (2^24 subsets).
pub const MAX_POWERSET_INPUT: usize = 24;

/// The naturals in order: 0, 1, 2, ...
pub fn nat_stream() -> impl Iterator<Item = Nat> {
    std::iter::successors(Some(Nat::zero()), |n| Some(n + Nat::one()))
}

/// Every HFS under the given urelement limit, in code order: element `n` of
/// the stream is `nat_to_hfs(n, ulimit)`.
pub fn hfs_stream(ulimit: Ulimit) -> impl Iterator<Item = Hfs> {
    nat_stream().map(move |n| nat_to_hfs(&n, &ulimit))
}

/// All subsets of `xs` in the order of the interleaving recursion: the
/// subsets of the tail, each one immediately followed by itself with the
/// head added. For an ascending input the output comes out in ascending
/// code order, counting in binary with the head as the least significant
/// position.
pub(crate) fn all_subsets<T: Clone>(xs: &[T]) -> Vec<Vec<T>> {
    match xs.split_first() {
        None => vec![Vec::new()],
        Some((head, tail)) => {
            let tail_subsets = all_subsets(tail);
            let mut out = Vec::with_capacity(tail_subsets.len() * 2);
            for ys in tail_subsets {
                let mut with_head = Vec::with_capacity(ys.len() + 1);
                with_head.push(head.clone());
                with_head.extend(ys.iter().cloned());
                out.push(ys);
                out.push(with_head);
            }
            out
        }
    }
}

/// The 2^|xs| subsets of a duplicate-free slice, as canonical sets, in
/// construction order. Inputs beyond [`MAX_POWERSET_INPUT`] elements are
/// refused.
pub fn powerset(xs: &[Hfs]) -> Result<Vec<Hfs>> {
    if xs.len() > MAX_POWERSET_INPUT {
        return Err(Error::PowersetTooLarge {
            len: xs.len(),
            max: MAX_POWERSET_INPUT,
        });
    }
    all_subsets(xs).into_iter().map(Hfs::set).collect()
}

/// Enumerates pure HFS stage by stage: stage k+1 is the powerset of stage k
/// (starting from the empty stage), and each step yields the sets of the new
/// stage that the previous stage lacked, in construction order.
///
/// Stages have sizes 1, 2, 4, 16, 65536, ...; the first stage that would
/// overrun [`MAX_POWERSET_INPUT`] input elements yields an error, after
/// which the stream is exhausted.
pub fn hfs_level_stream() -> HfsLevelStream {
    HfsLevelStream {
        stage: Vec::new(),
        seen: HashSet::new(),
        pending: Vec::new().into_iter(),
        refused: false,
    }
}

/// See [`hfs_level_stream`].
pub struct HfsLevelStream {
    stage: Vec<Hfs>,
    seen: HashSet<Hfs>,
    pending: std::vec::IntoIter<Hfs>,
    refused: bool,
}

impl Iterator for HfsLevelStream {
    type Item = Result<Hfs>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            if let Some(h) = self.pending.next() {
                return Some(Ok(h));
            }
            if self.refused {
                return None;
            }
            if self.stage.len() > MAX_POWERSET_INPUT {
                self.refused = true;
                return Some(Err(Error::PowersetTooLarge {
                    len: self.stage.len(),
                    max: MAX_POWERSET_INPUT,
                }));
            }
            let next_stage: Vec<Hfs> = all_subsets(&self.stage)
                .into_iter()
                .map(|ms| Hfs::set(ms).expect("subsets of a duplicate-free stage are duplicate-free"))
                .collect();
            let fresh: Vec<Hfs> = next_stage
                .iter()
                .filter(|h| !self.seen.contains(*h))
                .cloned()
                .collect();
            self.seen = next_stage.iter().cloned().collect();
            self.stage = next_stage;
            self.pending = fresh.into_iter();
        }
    }
}
