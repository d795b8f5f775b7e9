//! Pairing functions on Nat: Kuratowski (injective, set-theoretic), Cantor
//! and bit-merge (both bijective).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::bitset::bit_positions;
use crate::cap;
use crate::error::{Error, Result};

use crate::bitset::Nat;

/// An ordered pair of naturals.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NatPair {
    pub first: Nat,
    pub second: Nat,
}

impl NatPair {
    pub fn new(first: impl Into<Nat>, second: impl Into<Nat>) -> Self {
        NatPair {
            first: first.into(),
            second: second.into(),
        }
    }
}

impl From<(Nat, Nat)> for NatPair {
    fn from((first, second): (Nat, Nat)) -> Self {
        NatPair { first, second }
    }
}

impl fmt::Display for NatPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.first, self.second)
    }
}

/// Code of the Kuratowski pair `{{a},{a,b}}` under the set codec: the inner
/// sets code to `2^a` and `2^a | 2^b`, the outer set to the sum of 2 raised
/// to those. Injective but far from surjective, and the output size is
/// doubly exponential, so the cap bites early.
pub fn kuratowski_pair(a: &Nat, b: &Nat) -> Result<Nat> {
    let (singleton, pair_set) = kuratowski_inner_codes(a, b)?;
    let mut outer = Nat::one() << cap::check_exponent(&singleton)?;
    if pair_set != singleton {
        outer |= Nat::one() << cap::check_exponent(&pair_set)?;
    }
    Ok(outer)
}

/// The codes of the two inner sets `{a}` and `{a,b}` (equal when `a = b`).
/// These determine the pair code injectively and stay singly exponential,
/// which the tests exploit to check injectivity beyond feasible pair codes.
pub fn kuratowski_inner_codes(a: &Nat, b: &Nat) -> Result<(Nat, Nat)> {
    let singleton = Nat::one() << cap::check_exponent(a)?;
    let pair_set = &singleton | (Nat::one() << cap::check_exponent(b)?);
    Ok((singleton, pair_set))
}

/// Inverse of [`kuratowski_pair`] on its image; anything else reports
/// [`Error::NotAPair`].
pub fn kuratowski_unpair(z: &Nat) -> Result<NatPair> {
    let not_a_pair = || Error::NotAPair { code: z.clone() };
    let inner: Vec<Nat> = crate::bitset::bit_elements(z).collect();
    match inner.as_slice() {
        // {{a}}: the degenerate pair with a = b
        [single] => {
            if single.count_ones() != 1 {
                return Err(not_a_pair());
            }
            let a = Nat::from(single.trailing_zeros().expect("one bit is set"));
            Ok(NatPair::new(a.clone(), a))
        }
        // {{a},{a,b}}: the singleton is the smaller inner code
        [singleton, pair_set] => {
            if singleton.count_ones() != 1 || pair_set.count_ones() != 2 {
                return Err(not_a_pair());
            }
            if &(singleton & pair_set) != singleton {
                return Err(not_a_pair());
            }
            let a = Nat::from(singleton.trailing_zeros().expect("one bit is set"));
            let other = pair_set ^ singleton;
            let b = Nat::from(other.trailing_zeros().expect("one bit remains"));
            Ok(NatPair::new(a, b))
        }
        _ => Err(not_a_pair()),
    }
}

/// Cantor's diagonal pairing: `(k1 + k2)(k1 + k2 + 1)/2 + k2`. A bijection
/// Nat² → Nat.
pub fn cantor_pair(k1: &Nat, k2: &Nat) -> Nat {
    let s = k1 + k2;
    (&s * (&s + Nat::one())) / 2u8 + k2
}

/// Inverse of [`cantor_pair`], via an exact integer square root — floating
/// point would lose the bijection on wide inputs.
pub fn cantor_unpair(z: &Nat) -> NatPair {
    let i = (BigUint::sqrt(&(z * 8u8 + Nat::one())) - Nat::one()) / 2u8;
    let first = &i * (&i + 3u8) / 2u8 - z;
    let second = z - &i * (&i + Nat::one()) / 2u8;
    NatPair { first, second }
}

/// Interleaving pairing: the bits of `a` land on even positions, the bits of
/// `b` on odd positions. A bijection Nat² → Nat.
pub fn bitmerge_pair(a: &Nat, b: &Nat) -> Nat {
    let mut z = Nat::zero();
    for pos in bit_positions(a) {
        z.set_bit(2 * pos, true);
    }
    for pos in bit_positions(b) {
        z.set_bit(2 * pos + 1, true);
    }
    z
}

/// Inverse of [`bitmerge_pair`]: even bits rebuild the first component, odd
/// bits the second.
pub fn bitmerge_unpair(z: &Nat) -> NatPair {
    let mut first = Nat::zero();
    let mut second = Nat::zero();
    for pos in bit_positions(z) {
        if pos % 2 == 0 {
            first.set_bit(pos / 2, true);
        } else {
            second.set_bit(pos / 2, true);
        }
    }
    NatPair { first, second }
}

/// The pairing schemes, for callers that dispatch by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairScheme {
    Kuratowski,
    Cantor,
    BitMerge,
}

impl FromStr for PairScheme {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "kuratowski" => Ok(PairScheme::Kuratowski),
            "cantor" => Ok(PairScheme::Cantor),
            "bitmerge" => Ok(PairScheme::BitMerge),
            other => Err(format!(
                "unknown pairing scheme {other:?}; expected kuratowski, cantor, or bitmerge"
            )),
        }
    }
}

impl fmt::Display for PairScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairScheme::Kuratowski => "kuratowski",
            PairScheme::Cantor => "cantor",
            PairScheme::BitMerge => "bitmerge",
        })
    }
}

/// Pairs by the chosen scheme.
pub fn pair_with(scheme: PairScheme, a: &Nat, b: &Nat) -> Result<Nat> {
    match scheme {
        PairScheme::Kuratowski => kuratowski_pair(a, b),
        PairScheme::Cantor => Ok(cantor_pair(a, b)),
        PairScheme::BitMerge => Ok(bitmerge_pair(a, b)),
    }
}

/// Unpairs by the chosen scheme.
pub fn unpair_with(scheme: PairScheme, z: &Nat) -> Result<NatPair> {
    match scheme {
        PairScheme::Kuratowski => kuratowski_unpair(z),
        PairScheme::Cantor => Ok(cantor_unpair(z)),
        PairScheme::BitMerge => Ok(bitmerge_unpair(z)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn nat(v: u64) -> Nat {
        Nat::from(v)
    }

    fn pair(a: u64, b: u64) -> NatPair {
        NatPair::new(nat(a), nat(b))
    }

    #[test]
    fn kuratowski_4x4_table() {
        let expected = [
            2u64, 10, 34, 514, 12, 4, 68, 1028, 48, 80, 16, 4112, 768, 1280, 4352, 256,
        ];
        let mut got = Vec::new();
        for a in 0..4u64 {
            for b in 0..4u64 {
                got.push(kuratowski_pair(&nat(a), &nat(b)).unwrap());
            }
        }
        let expected: Vec<Nat> = expected.into_iter().map(Nat::from).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn kuratowski_unpair_inverts_small_pairs() {
        for a in 0..12u64 {
            for b in 0..12u64 {
                let z = kuratowski_pair(&nat(a), &nat(b)).unwrap();
                assert_eq!(kuratowski_unpair(&z).unwrap(), pair(a, b));
            }
        }
    }

    #[test]
    fn kuratowski_is_injective_but_not_surjective() {
        // compare the inner code pairs: they determine the output injectively
        // while staying representable far beyond feasible pair codes
        let mut seen = BTreeSet::new();
        for a in 0..=50u64 {
            for b in 0..=50u64 {
                let inner = kuratowski_inner_codes(&nat(a), &nat(b)).unwrap();
                assert!(seen.insert(inner), "collision at ({a},{b})");
            }
        }
        // 1 = 2^0 would need an inner code 0, but inner codes are powers of 2
        assert_eq!(
            kuratowski_unpair(&nat(1)).unwrap_err(),
            Error::NotAPair { code: nat(1) }
        );
        // 7 has three set bits, one too many for {{a},{a,b}}
        assert_eq!(
            kuratowski_unpair(&nat(7)).unwrap_err(),
            Error::NotAPair { code: nat(7) }
        );
        // 2^5: a single inner code that is not a power of two
        assert!(kuratowski_unpair(&nat(32)).is_err());
        assert!(kuratowski_unpair(&nat(0)).is_err());
    }

    #[test]
    fn kuratowski_caps_instead_of_exploding() {
        // 2^60 as an inner code would demand a 2^60-bit outer code
        assert!(matches!(
            kuratowski_pair(&nat(60), &nat(60)),
            Err(Error::BitCapExceeded { .. })
        ));
    }

    #[test]
    fn cantor_4x4_table() {
        let expected = [0u64, 2, 5, 9, 1, 4, 8, 13, 3, 7, 12, 18, 6, 11, 17, 24];
        let mut got = Vec::new();
        for a in 0..4u64 {
            for b in 0..4u64 {
                got.push(cantor_pair(&nat(a), &nat(b)));
            }
        }
        let expected: Vec<Nat> = expected.into_iter().map(Nat::from).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn cantor_unpair_examples() {
        assert_eq!(cantor_unpair(&nat(13)), pair(1, 3));
        assert_eq!(cantor_unpair(&nat(0)), pair(0, 0));
        assert_eq!(cantor_unpair(&nat(2)), pair(0, 1));
    }

    #[test]
    fn cantor_is_bijective_on_an_initial_segment() {
        // the 45·46/2 pairs with a + b <= 44 hit exactly [0, 1034]
        let mut outputs = BTreeSet::new();
        for a in 0..=44u64 {
            for b in 0..=44 - a {
                outputs.insert(cantor_pair(&nat(a), &nat(b)));
            }
        }
        assert_eq!(outputs.len(), 1035);
        assert_eq!(outputs.iter().next_back().unwrap(), &nat(1034));
        for z in 0..=1034u64 {
            let p = cantor_unpair(&nat(z));
            assert_eq!(cantor_pair(&p.first, &p.second), nat(z));
        }
    }

    #[test]
    fn bitmerge_examples() {
        assert_eq!(bitmerge_pair(&nat(3), &nat(1)), nat(7));
        assert_eq!(bitmerge_pair(&nat(0), &nat(0)), nat(0));
        assert_eq!(bitmerge_pair(&nat(60), &nat(26)), nat(2008));
        assert_eq!(bitmerge_unpair(&nat(2008)), pair(60, 26));
    }

    #[test]
    fn bitmerge_covers_an_initial_segment() {
        // 5-bit inputs tile [0, 1023] exactly
        let mut outputs = BTreeSet::new();
        for a in 0..32u64 {
            for b in 0..32u64 {
                outputs.insert(bitmerge_pair(&nat(a), &nat(b)));
            }
        }
        assert_eq!(outputs.len(), 1024);
        assert_eq!(outputs.iter().next_back().unwrap(), &nat(1023));
    }

    #[test]
    fn roundtrips_on_a_range() {
        for z in 0..=1000u64 {
            let z = nat(z);
            let c = cantor_unpair(&z);
            assert_eq!(cantor_pair(&c.first, &c.second), z);
            let m = bitmerge_unpair(&z);
            assert_eq!(bitmerge_pair(&m.first, &m.second), z);
        }
    }

    #[test]
    fn scheme_dispatch() {
        assert_eq!("cantor".parse::<PairScheme>().unwrap(), PairScheme::Cantor);
        assert!("diagonal".parse::<PairScheme>().is_err());
        let z = pair_with(PairScheme::BitMerge, &nat(60), &nat(26)).unwrap();
        assert_eq!(unpair_with(PairScheme::BitMerge, &z).unwrap(), pair(60, 26));
    }
}
