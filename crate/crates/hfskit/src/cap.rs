//! Process-wide bit-length cap.
//!
//! Several constructions exponentiate codes (`set_to_nat` turns elements into
//! exponents of 2, ordinals iterate that), so innocuous-looking inputs can
//! demand numbers far beyond physical memory. Every operation that is about
//! to use a value as a bit position checks it against the cap first and fails
//! with [`Error::BitCapExceeded`] rather than attempting the allocation.

use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};

/// Default maximum bit length of any constructed code: 2^20 bits.
pub const DEFAULT_MAX_BITS: u64 = 1 << 20;

static MAX_BITS: AtomicU64 = AtomicU64::new(DEFAULT_MAX_BITS);

/// Currently configured bit-length cap.
pub fn max_bits() -> u64 {
    MAX_BITS.load(Ordering::Relaxed)
}

/// Replace the bit-length cap for the whole process.
pub fn set_max_bits(bits: u64) {
    MAX_BITS.store(bits, Ordering::Relaxed);
}

/// Checks that `element` may serve as an exponent of 2, i.e. lies strictly
/// below the cap, and returns it as a machine word.
pub(crate) fn check_exponent(element: &BigUint) -> Result<u64> {
    let max = max_bits();
    match element.to_u64() {
        Some(e) if e < max => Ok(e),
        _ => Err(Error::BitCapExceeded {
            element: element.clone(),
            max_bits: max,
        }),
    }
}
