use alloc::vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A closed interval with rational endpoints.
///
/// Used as the enclosure type for constructible numbers: the exact value is
/// guaranteed to lie in `[lo, hi]`. All interval arithmetic here is outward
/// exact (endpoints are computed with rational arithmetic, so no rounding
/// slack is ever introduced).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatInterval {
    lo: BigRational,
    hi: BigRational,
}

impl RatInterval {
    pub(crate) fn new(lo: BigRational, hi: BigRational) -> Self {
        debug_assert!(lo <= hi);
        RatInterval { lo, hi }
    }

    pub(crate) fn point(x: BigRational) -> Self {
        RatInterval { lo: x.clone(), hi: x }
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    /// Sign of every value in the interval, if uniform: `1` when `lo > 0`,
    /// `-1` when `hi < 0`, `0` for the degenerate zero interval, `None` when
    /// the interval straddles zero.
    pub fn sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub(crate) fn add(&self, other: &Self) -> Self {
        RatInterval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub(crate) fn mul(&self, other: &Self) -> Self {
        let mut products = vec![
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        products.sort_unstable();
        let hi = products.pop().unwrap();
        let lo = products.swap_remove(0);
        RatInterval::new(lo, hi)
    }

}

/// `2^-bits` as a rational, the target width for decimal enclosures.
pub(crate) fn pow2_inverse(bits: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << bits)
}
