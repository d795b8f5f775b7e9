//! Powersets on codes, von Neumann ordinals, and choice functions.

use num_traits::{One, Zero};

use crate::bitset::{self, Nat};
use crate::cap;
use crate::error::{Error, Result};
use crate::hfs::{hfs_to_nat, pure_members, Hfs, Ulimit};
use crate::pairing::bitmerge_pair;
use crate::streams::powerset;
use crate::transport::lift_to_hfs;

/// Code of the powerset of the set coded by `n`. The popcount of `n` is the
/// cardinality of the decoded set, so it is bounded by the powerset
/// enumeration limit.
pub fn nat_powset(n: &Nat) -> Result<Nat> {
    lift_to_hfs(
        |hs| {
            let subsets = powerset(pure_members(&hs[0]))?;
            Hfs::set(subsets)
        },
        &[n.clone()],
    )
}

/// The von Neumann ordinal `k` as a set: `{ordinal 0, ..., ordinal k-1}`.
///
/// The code of ordinal `k+1` is `code(k) + 2^code(k)`, which doubles in bit
/// length at every step; the construction is refused as soon as the next
/// code would overrun the bit cap (`k >= 6` under the default cap).
pub fn hfs_ordinal(k: &Nat) -> Result<Hfs> {
    let steps = feasible_ordinal_steps(k)?;
    let mut smaller: Vec<Hfs> = Vec::new();
    for _ in 0..steps {
        let next = Hfs::from_sorted(smaller.clone());
        smaller.push(next);
    }
    Ok(Hfs::from_sorted(smaller))
}

/// Ackermann code of the von Neumann ordinal `k` in the pure universe.
pub fn nat_ordinal(k: &Nat) -> Result<Nat> {
    hfs_to_nat(&hfs_ordinal(k)?, &Ulimit::pure())
}

/// Runs the code-growth recurrence `c <- c + 2^c` for `k` steps, cap-checking
/// each shift, and returns `k` as a machine word. Since the codes grow as a
/// tower, any representable cap stops the recurrence within a few steps.
fn feasible_ordinal_steps(k: &Nat) -> Result<u64> {
    let mut code = Nat::zero();
    let mut i = Nat::zero();
    while &i < k {
        code = &code + (Nat::one() << cap::check_exponent(&code)?);
        i += Nat::one();
    }
    Ok(num_traits::ToPrimitive::to_u64(k).expect("a feasible ordinal index is tiny"))
}

/// Code of a choice function for the family coded by `n`: each member `e`
/// contributes the bit-merge pair of `e` with its smallest element. Only
/// even `n` qualify — an odd `n` has the member 0, the empty set, which
/// admits no choice.
pub fn nat_choice_fun(n: &Nat) -> Result<Nat> {
    if n.bit(0) {
        return Err(Error::EmptyChoiceMember { code: n.clone() });
    }
    let mut pair_codes: Vec<Nat> = Vec::new();
    for e in bitset::bit_elements(n) {
        let chosen = bitset::bit_elements(&e)
            .next()
            .expect("members of an even family are nonzero");
        pair_codes.push(bitmerge_pair(&e, &chosen));
    }
    pair_codes.sort_unstable();
    bitset::sum_of_exponents(pair_codes.iter())
}
