//! Deterministic fixed-point decimal formatting for exact rationals.
//!
//! Output never goes through floating point: rounding is done with integer
//! arithmetic, so the same value always renders to the same bytes.

use alloc::format;
use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Number of decimal fraction digits carried by an enclosure of width
/// `2^-bits`: `floor(bits * log10(2)) - 2`, at least one. The two-digit
/// haircut keeps the printed digits inside the certified enclosure width.
/// 60 bits give 16 digits.
pub fn digits_for_bits(bits: u32) -> usize {
    let exact = (bits as u64 * 30_103) / 100_000;
    (exact.saturating_sub(2) as usize).max(1)
}

/// Formats `x` with exactly `digits` fraction digits, rounding half to even.
/// The zero output is never signed.
pub fn format_fixed(x: &BigRational, digits: usize) -> String {
    let negative = x.is_negative();
    let scale = BigInt::from(10).pow(digits as u32);
    let scaled_numer = x.numer().abs() * &scale;
    let denom = x.denom();
    let (mut q, r) = scaled_numer.div_rem(denom);
    let twice_r: BigInt = &r * 2;
    let round_up = match twice_r.cmp(denom) {
        core::cmp::Ordering::Greater => true,
        core::cmp::Ordering::Less => false,
        core::cmp::Ordering::Equal => q.is_odd(),
    };
    if round_up {
        q += 1;
    }
    let (int_part, frac_part) = q.div_rem(&scale);
    let sign = if negative && !q.is_zero() { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{int_part}");
    }
    let frac_digits = frac_part.to_string();
    let pad = digits - frac_digits.len();
    let mut out = String::with_capacity(sign.len() + digits + 8);
    out.push_str(sign);
    out.push_str(&int_part.to_string());
    out.push('.');
    for _ in 0..pad {
        out.push('0');
    }
    out.push_str(&frac_digits);
    out
}

/// Lossy float view of a rational, for diagnostics and cross-checks.
pub fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}
