//! The base bijection between naturals and finite sets of naturals.
//!
//! A number codes the set of exponents appearing in its binary expansion:
//! `42 = 2^1 + 2^3 + 2^5` codes `{1,3,5}`, and `0` codes `{}`. Everything
//! else in this crate is obtained by iterating or restricting this codec.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::cap;
use crate::error::{Error, Result};

/// Unbounded non-negative integer, the universal code space.
pub type Nat = BigUint;

/// A finite set of naturals, kept strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct NatSet {
    elements: Vec<Nat>,
}

impl NatSet {
    /// Builds a set from elements given in any order. Duplicates are
    /// rejected, never silently merged.
    pub fn new(mut elements: Vec<Nat>) -> Result<Self> {
        elements.sort_unstable();
        for w in elements.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateMember {
                    member: w[0].to_string(),
                });
            }
        }
        Ok(NatSet { elements })
    }

    /// The empty set.
    pub fn empty() -> Self {
        NatSet::default()
    }

    /// Wraps a vector already known to be strictly increasing.
    pub(crate) fn from_ascending(elements: Vec<Nat>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        NatSet { elements }
    }

    /// Elements in increasing order.
    pub fn elements(&self) -> &[Nat] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, element: &Nat) -> bool {
        self.elements.binary_search(element).is_ok()
    }

    pub fn into_vec(self) -> Vec<Nat> {
        self.elements
    }
}

impl fmt::Display for NatSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Code of a finite set of naturals: the sum of 2^x over its elements.
/// The empty set maps to 0.
pub fn set_to_nat(s: &NatSet) -> Result<Nat> {
    sum_of_exponents(s.elements())
}

/// Shared kernel of every encoder: sum of 2^x over `elements`, which the
/// caller guarantees to be pairwise distinct. Each exponent is cap-checked.
pub(crate) fn sum_of_exponents<'a, I>(elements: I) -> Result<Nat>
where
    I: IntoIterator<Item = &'a Nat>,
{
    let mut n = Nat::zero();
    for e in elements {
        n.set_bit(cap::check_exponent(e)?, true);
    }
    Ok(n)
}

/// Inverse of [`set_to_nat`]: the set of bit positions of `n`, ascending.
pub fn nat_to_set(n: &Nat) -> NatSet {
    NatSet::from_ascending(bit_elements(n).collect())
}

/// Lazily yields the elements of the set coded by `n`, in increasing order.
pub fn bit_elements(n: &Nat) -> BitElements {
    BitElements {
        positions: bit_positions(n),
    }
}

/// Iterator over the set bit positions of a number, as machine words.
pub(crate) fn bit_positions(n: &Nat) -> BitPositions {
    let limbs: Vec<u64> = n.iter_u64_digits().collect();
    let current = limbs.first().copied().unwrap_or(0);
    BitPositions {
        limbs,
        limb_idx: 0,
        current,
    }
}

pub(crate) struct BitPositions {
    limbs: Vec<u64>,
    limb_idx: usize,
    current: u64,
}

impl Iterator for BitPositions {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        loop {
            if self.current != 0 {
                let tz = self.current.trailing_zeros() as u64;
                self.current &= self.current - 1;
                return Some(self.limb_idx as u64 * 64 + tz);
            }
            self.limb_idx += 1;
            if self.limb_idx >= self.limbs.len() {
                return None;
            }
            self.current = self.limbs[self.limb_idx];
        }
    }
}

/// See [`bit_elements`].
pub struct BitElements {
    positions: BitPositions,
}

impl Iterator for BitElements {
    type Item = Nat;

    fn next(&mut self) -> Option<Nat> {
        self.positions.next().map(Nat::from)
    }
}
