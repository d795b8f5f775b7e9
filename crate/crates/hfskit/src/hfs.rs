//! Hereditarily finite sets with urelements, and their bijection with Nat.
//!
//! With urelement limit `u`, the naturals below `u` are atoms and everything
//! else is a set. The code of an urelement is itself; the code of a set is
//! `u` plus the sum of 2^code over its members. At `u = 0` this is the
//! classical Ackermann bijection between naturals and pure hereditarily
//! finite sets.

use std::cmp::Ordering;

use crate::bitset::{self, Nat};
use crate::error::{Error, Result};

/// Number of urelements available in an encoding context. Urelements are the
/// naturals in `[0, ulimit)`; the default of 0 gives the pure set universe.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Ulimit(Nat);

impl Ulimit {
    /// The pure universe: no urelements at all.
    pub fn pure() -> Self {
        Ulimit::default()
    }

    pub fn as_nat(&self) -> &Nat {
        &self.0
    }

    /// Whether `k` names an urelement under this limit.
    pub fn admits(&self, k: &Nat) -> bool {
        k < &self.0
    }
}

impl From<Nat> for Ulimit {
    fn from(n: Nat) -> Self {
        Ulimit(n)
    }
}

impl From<u64> for Ulimit {
    fn from(n: u64) -> Self {
        Ulimit(Nat::from(n))
    }
}

impl From<u32> for Ulimit {
    fn from(n: u32) -> Self {
        Ulimit(Nat::from(n))
    }
}

/// A hereditarily finite set with urelements: either an atom (a natural
/// below the ulimit of the context it is used in) or a set of pairwise
/// distinct members held in canonical order.
///
/// Canonical order is ascending Ackermann code. The comparison implemented
/// on [`Hfs`] realizes it structurally, without computing codes, and does not
/// depend on the ulimit (urelements sort below sets because their codes lie
/// below every set code).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hfs {
    repr: Repr,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Urelement(Nat),
    Set(Vec<Hfs>),
}

/// Borrowed view of an [`Hfs`] node, for traversals.
#[derive(Debug, Clone, Copy)]
pub enum HfsView<'a> {
    Urelement(&'a Nat),
    Set(&'a [Hfs]),
}

impl Hfs {
    /// The empty set.
    pub fn empty() -> Self {
        Hfs {
            repr: Repr::Set(Vec::new()),
        }
    }

    /// The urelement `k`. Whether `k` is in range is decided by the ulimit
    /// of the operation the value is passed to.
    pub fn urelement(k: impl Into<Nat>) -> Self {
        Hfs {
            repr: Repr::Urelement(k.into()),
        }
    }

    /// A set with the given members, in any order. Structurally equal
    /// members are rejected as duplicates.
    pub fn set(mut members: Vec<Hfs>) -> Result<Self> {
        members.sort();
        for w in members.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateMember {
                    member: w[0].to_string(),
                });
            }
        }
        Ok(Hfs::from_sorted(members))
    }

    /// Wraps members already in strictly ascending canonical order.
    pub(crate) fn from_sorted(members: Vec<Hfs>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Hfs {
            repr: Repr::Set(members),
        }
    }

    pub fn view(&self) -> HfsView<'_> {
        match &self.repr {
            Repr::Urelement(k) => HfsView::Urelement(k),
            Repr::Set(ms) => HfsView::Set(ms),
        }
    }

    pub fn is_urelement(&self) -> bool {
        matches!(self.repr, Repr::Urelement(_))
    }

    pub fn is_set(&self) -> bool {
        matches!(self.repr, Repr::Set(_))
    }

    pub fn is_empty_set(&self) -> bool {
        matches!(&self.repr, Repr::Set(ms) if ms.is_empty())
    }

    /// Members of a set node, or `None` for an urelement.
    pub fn members(&self) -> Option<&[Hfs]> {
        match &self.repr {
            Repr::Urelement(_) => None,
            Repr::Set(ms) => Some(ms),
        }
    }
}

/// Members of a node decoded in the pure universe, where urelements cannot
/// occur.
pub(crate) fn pure_members(h: &Hfs) -> &[Hfs] {
    h.members()
        .expect("a pure (ulimit 0) decode never produces urelements")
}

impl Ord for Hfs {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.repr, &other.repr) {
            (Repr::Urelement(a), Repr::Urelement(b)) => a.cmp(b),
            // an urelement's code is below the ulimit, a set's is at least it
            (Repr::Urelement(_), Repr::Set(_)) => Ordering::Less,
            (Repr::Set(_), Repr::Urelement(_)) => Ordering::Greater,
            // sums of distinct powers of 2 compare by exponents, largest first
            (Repr::Set(xs), Repr::Set(ys)) => xs.iter().rev().cmp(ys.iter().rev()),
        }
    }
}

impl PartialOrd for Hfs {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Ackermann code of `h`: an urelement maps to itself, a set to `ulimit`
/// plus the sum of 2^code over its members.
pub fn hfs_to_nat(h: &Hfs, ulimit: &Ulimit) -> Result<Nat> {
    match h.view() {
        HfsView::Urelement(k) => {
            if ulimit.admits(k) {
                Ok(k.clone())
            } else {
                Err(Error::UrelementOutOfRange {
                    urelement: k.clone(),
                    ulimit: ulimit.as_nat().clone(),
                })
            }
        }
        HfsView::Set(members) => {
            let codes = members
                .iter()
                .map(|m| hfs_to_nat(m, ulimit))
                .collect::<Result<Vec<_>>>()?;
            Ok(bitset::sum_of_exponents(codes.iter())? + ulimit.as_nat())
        }
    }
}

/// Inverse of [`hfs_to_nat`]: a natural below the ulimit is an urelement,
/// anything else decodes `n - ulimit` bit position by bit position.
pub fn nat_to_hfs(n: &Nat, ulimit: &Ulimit) -> Hfs {
    if ulimit.admits(n) {
        Hfs::urelement(n.clone())
    } else {
        let shifted = n - ulimit.as_nat();
        let members = bitset::bit_elements(&shifted)
            .map(|x| nat_to_hfs(&x, ulimit))
            .collect();
        Hfs::from_sorted(members)
    }
}
