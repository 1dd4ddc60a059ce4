//! Constructible numbers: exact arithmetic in towers of real quadratic
//! extensions of the rationals.
//!
//! A [`Tower`] is a shared, extend-only context holding a chain of
//! square-root generators: generator `k` is the positive square root of a
//! radicand expressed over generators `0..k`. A [`ConstructibleNumber`] is a
//! coefficient vector over the products of generators, tied to its tower.
//! New generators appear only when [`ConstructibleNumber::sqrt`] is called on
//! a positive value that is not already a square anywhere in the current
//! tower, so radicands are guaranteed non-square in their subtower and every
//! nonzero element is invertible.
//!
//! Signs (and hence comparisons and decimal output) are decided by rational
//! interval arithmetic: each generator carries a rational enclosure of its
//! value, refined by bisection until the sign of the queried element is
//! unambiguous. Zero is decided structurally (all coefficients zero), never
//! numerically, so refinement always terminates for nonzero values.

mod element;
mod interval;

pub use interval::RatInterval;

use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::cmp::Ordering;
use core::fmt;
use core::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use element::Element;

/// Default bisection budget for sign determination and enclosure tightening.
pub const DEFAULT_REFINEMENT_CAP: u32 = 4096;

static NEXT_CONTEXT_ID: AtomicU64 = AtomicU64::new(1);

/// Errors from fallible field operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldError {
    DivisionByZero,
    NegativeRadicand,
    ContextMismatch { left: u64, right: u64 },
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::DivisionByZero => write!(f, "division by zero"),
            FieldError::NegativeRadicand => write!(f, "square root of a negative value"),
            FieldError::ContextMismatch { left, right } => {
                write!(f, "operands belong to different towers ({left} vs {right})")
            }
        }
    }
}

impl core::error::Error for FieldError {}

struct TowerContext {
    id: u64,
    radicands: Vec<Element>,
    enclosures: Vec<RatInterval>,
    refine_cap: u32,
}

impl TowerContext {
    fn rads(&self) -> &[Element] {
        &self.radicands
    }

    /// Rational enclosure of `e` from the current generator enclosures.
    fn interval(&self, e: &Element) -> RatInterval {
        let mut acc = RatInterval::point(BigRational::zero());
        for (i, c) in e.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut term = RatInterval::point(c.clone());
            let mut bits = i;
            let mut k = 0;
            while bits != 0 {
                if bits & 1 == 1 {
                    term = term.mul(&self.enclosures[k]);
                }
                bits >>= 1;
                k += 1;
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// One bottom-up bisection pass over all generator enclosures. For each
    /// generator the midpoint `m` of its enclosure is kept or discarded by
    /// comparing `m^2` against the (current) enclosure of its radicand; when
    /// the comparison is ambiguous the generator waits for the ones below it
    /// to tighten first.
    fn refine_round(&mut self) {
        for k in 0..self.radicands.len() {
            let rad = self.radicands[k].clone();
            let riv = self.interval(&rad);
            let enc = &self.enclosures[k];
            let m = enc.midpoint();
            let m2 = &m * &m;
            if m2 <= *riv.lo() {
                self.enclosures[k] = RatInterval::new(m, enc.hi().clone());
            } else if m2 >= *riv.hi() {
                self.enclosures[k] = RatInterval::new(enc.lo().clone(), m);
            }
        }
    }

    /// Exact sign of `e`: zero is structural, nonzero values are separated
    /// from zero by enclosure refinement.
    fn sign_elem(&mut self, e: &Element) -> i8 {
        if e.is_zero() {
            return 0;
        }
        for _ in 0..=self.refine_cap {
            if let Some(s) = self.interval(e).sign() {
                return s;
            }
            self.refine_round();
        }
        panic!("refinement cap exceeded while deciding the sign of a nonzero value");
    }

    /// Enclosure of `e` with width at most `2^-bits`.
    fn approx(&mut self, e: &Element, bits: u32) -> RatInterval {
        let target = interval::pow2_inverse(bits);
        let budget = self.refine_cap.saturating_add(2 * bits + 64);
        for _ in 0..=budget {
            let iv = self.interval(e);
            if iv.width() <= target {
                return iv;
            }
            self.refine_round();
        }
        panic!("refinement cap exceeded while tightening an enclosure");
    }

    /// Square root of a positive element: an exact root inside the current
    /// tower when one exists, otherwise a fresh generator. Before extending,
    /// the radicand is divided by the square part of its rational content so
    /// that e.g. `sqrt(5/4)` becomes `1/2 * sqrt(5)` rather than a generator
    /// with radicand `5/4`.
    fn sqrt_elem(&mut self, x: &Element) -> Element {
        let n = self.radicands.len();
        if let Some(y) = element::sqrt_in(self.rads(), x, n) {
            return if self.sign_elem(&y) < 0 { element::neg(&y) } else { y };
        }
        let c = element::content(x);
        let s = element::square_part(&c);
        let radicand = element::scale(x, &(&s * &s).recip());
        let riv = self.interval(&radicand);
        let upper = BigRational::one() + riv.hi().clone();
        self.radicands.push(radicand);
        self.enclosures.push(RatInterval::new(BigRational::zero(), upper));
        element::scale(&element::times_generator(&Element::one(), n), &s)
    }
}

/// A shared tower of real quadratic extensions of the rationals.
///
/// Cloning is cheap and shares the underlying context; numbers can only
/// combine when they come from the same tower (same context), which
/// [`ConstructibleNumber::checked_add`] and friends verify. The tower is
/// single-threaded by construction.
#[derive(Clone)]
pub struct Tower {
    inner: Rc<RefCell<TowerContext>>,
}

impl Default for Tower {
    fn default() -> Self {
        Tower::new()
    }
}

impl Tower {
    pub fn new() -> Self {
        let id = NEXT_CONTEXT_ID.fetch_add(1, AtomicOrdering::Relaxed);
        Tower {
            inner: Rc::new(RefCell::new(TowerContext {
                id,
                radicands: Vec::new(),
                enclosures: Vec::new(),
                refine_cap: DEFAULT_REFINEMENT_CAP,
            })),
        }
    }

    /// Stable identifier of the underlying context, for diagnostics.
    pub fn context_id(&self) -> u64 {
        self.inner.borrow().id
    }

    /// Number of square-root generators adjoined so far.
    pub fn generator_count(&self) -> usize {
        self.inner.borrow().radicands.len()
    }

    pub fn refinement_cap(&self) -> u32 {
        self.inner.borrow().refine_cap
    }

    pub fn set_refinement_cap(&self, cap: u32) {
        self.inner.borrow_mut().refine_cap = cap;
    }

    pub fn same_context(&self, other: &Tower) -> bool {
        Rc::ptr_eq(&self.inner, &other.inner)
    }

    pub fn constant(&self, q: BigRational) -> ConstructibleNumber {
        ConstructibleNumber { tower: self.clone(), elem: Element::from_rational(q) }
    }

    pub fn integer(&self, n: i64) -> ConstructibleNumber {
        ConstructibleNumber { tower: self.clone(), elem: Element::from_int(n) }
    }

    /// The rational `n / d`. Panics when `d` is zero.
    pub fn ratio(&self, n: i64, d: i64) -> ConstructibleNumber {
        assert!(d != 0, "zero denominator");
        self.constant(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn zero(&self) -> ConstructibleNumber {
        ConstructibleNumber { tower: self.clone(), elem: Element::zero() }
    }

    pub fn one(&self) -> ConstructibleNumber {
        ConstructibleNumber { tower: self.clone(), elem: Element::one() }
    }
}

impl fmt::Debug for Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ctx = self.inner.borrow();
        write!(f, "Tower(id={}, generators={})", ctx.id, ctx.radicands.len())
    }
}

/// An exact constructible number: an element of its tower's current field.
#[derive(Clone)]
pub struct ConstructibleNumber {
    tower: Tower,
    elem: Element,
}

impl ConstructibleNumber {
    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    /// Depth of this value's own coefficient vector (it may be smaller than
    /// the tower's generator count).
    pub fn depth(&self) -> usize {
        self.elem.depth()
    }

    /// Coefficients over the generator-product basis, lowest index first.
    pub fn coefficients(&self) -> &[BigRational] {
        self.elem.coeffs()
    }

    pub fn is_zero(&self) -> bool {
        self.elem.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.elem.is_one()
    }

    /// The value as a rational, when it lies in the ground field.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.elem.as_rational().cloned()
    }

    /// Exact sign: `-1`, `0` or `1`.
    pub fn sign(&self) -> i8 {
        self.tower.inner.borrow_mut().sign_elem(&self.elem)
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.sign() < 0
    }

    pub fn abs(&self) -> ConstructibleNumber {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn square(&self) -> ConstructibleNumber {
        self * self
    }

    pub fn double(&self) -> ConstructibleNumber {
        self + self
    }

    fn check_context(&self, other: &ConstructibleNumber) -> Result<(), FieldError> {
        if self.tower.same_context(&other.tower) {
            Ok(())
        } else {
            Err(FieldError::ContextMismatch {
                left: self.tower.context_id(),
                right: other.tower.context_id(),
            })
        }
    }

    fn wrap(&self, elem: Element) -> ConstructibleNumber {
        ConstructibleNumber { tower: self.tower.clone(), elem }
    }

    pub fn checked_add(&self, other: &ConstructibleNumber) -> Result<ConstructibleNumber, FieldError> {
        self.check_context(other)?;
        Ok(self.wrap(element::add(&self.elem, &other.elem)))
    }

    pub fn checked_sub(&self, other: &ConstructibleNumber) -> Result<ConstructibleNumber, FieldError> {
        self.check_context(other)?;
        Ok(self.wrap(element::sub(&self.elem, &other.elem)))
    }

    pub fn checked_mul(&self, other: &ConstructibleNumber) -> Result<ConstructibleNumber, FieldError> {
        self.check_context(other)?;
        let ctx = self.tower.inner.borrow();
        Ok(self.wrap(element::mul(ctx.rads(), &self.elem, &other.elem)))
    }

    pub fn checked_div(&self, other: &ConstructibleNumber) -> Result<ConstructibleNumber, FieldError> {
        self.check_context(other)?;
        let ctx = self.tower.inner.borrow();
        match element::div(ctx.rads(), &self.elem, &other.elem) {
            Some(e) => Ok(self.wrap(e)),
            None => Err(FieldError::DivisionByZero),
        }
    }

    /// Exact square root. Fails only on negative input; on success the result
    /// is the unique root with nonnegative sign, possibly extending the tower
    /// by one generator.
    pub fn sqrt(&self) -> Result<ConstructibleNumber, FieldError> {
        match self.sign() {
            -1 => Err(FieldError::NegativeRadicand),
            0 => Ok(self.wrap(Element::zero())),
            _ => {
                let elem = self.tower.inner.borrow_mut().sqrt_elem(&self.elem);
                Ok(self.wrap(elem))
            }
        }
    }

    /// Enclosure of the value with width at most `2^-precision_bits`.
    pub fn to_decimal(&self, precision_bits: u32) -> RatInterval {
        self.tower.inner.borrow_mut().approx(&self.elem, precision_bits)
    }

    /// Formats the value as a fixed-point decimal derived from
    /// `precision_bits` (see [`crate::decimal::digits_for_bits`]).
    pub fn to_decimal_string(&self, precision_bits: u32) -> String {
        let mid = self.to_decimal(precision_bits).midpoint();
        crate::decimal::format_fixed(&mid, crate::decimal::digits_for_bits(precision_bits))
    }
}

impl PartialEq for ConstructibleNumber {
    fn eq(&self, other: &Self) -> bool {
        assert!(
            self.tower.same_context(&other.tower),
            "compared constructible numbers from different towers"
        );
        self.elem == other.elem
    }
}

impl Eq for ConstructibleNumber {}

impl PartialOrd for ConstructibleNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ConstructibleNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.checked_sub(other).expect("compared numbers from different towers");
        match diff.sign() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident, $msg:expr) => {
        impl core::ops::$trait for &ConstructibleNumber {
            type Output = ConstructibleNumber;
            fn $method(self, rhs: &ConstructibleNumber) -> ConstructibleNumber {
                self.$checked(rhs).expect($msg)
            }
        }

        impl core::ops::$trait for ConstructibleNumber {
            type Output = ConstructibleNumber;
            fn $method(self, rhs: ConstructibleNumber) -> ConstructibleNumber {
                (&self).$method(&rhs)
            }
        }

        impl core::ops::$trait<&ConstructibleNumber> for ConstructibleNumber {
            type Output = ConstructibleNumber;
            fn $method(self, rhs: &ConstructibleNumber) -> ConstructibleNumber {
                (&self).$method(rhs)
            }
        }

        impl core::ops::$trait<ConstructibleNumber> for &ConstructibleNumber {
            type Output = ConstructibleNumber;
            fn $method(self, rhs: ConstructibleNumber) -> ConstructibleNumber {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add, "tower mismatch in +");
binop!(Sub, sub, checked_sub, "tower mismatch in -");
binop!(Mul, mul, checked_mul, "tower mismatch in *");
binop!(Div, div, checked_div, "invalid division");

impl core::ops::Neg for &ConstructibleNumber {
    type Output = ConstructibleNumber;
    fn neg(self) -> ConstructibleNumber {
        self.wrap(element::neg(&self.elem))
    }
}

impl core::ops::Neg for ConstructibleNumber {
    type Output = ConstructibleNumber;
    fn neg(self) -> ConstructibleNumber {
        -&self
    }
}

impl fmt::Display for ConstructibleNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ctx = self.tower.inner.borrow();
        fmt_element(ctx.rads(), &self.elem, f)
    }
}

impl fmt::Debug for ConstructibleNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ConstructibleNumber(")?;
        fmt::Display::fmt(self, f)?;
        write!(f, ")")
    }
}

/// Renders an element as a radical expression over the generator basis,
/// e.g. `3/2 - 1/2*sqrt(5)` or `1/4*sqrt(10 - 2*sqrt(5))`.
fn fmt_element(rads: &[Element], e: &Element, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    for (i, c) in e.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let negative = c < &BigRational::zero();
        if first {
            if negative {
                write!(f, "-")?;
            }
        } else if negative {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let mag = if negative { -c } else { c.clone() };
        if i == 0 {
            write!(f, "{mag}")?;
        } else {
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            let mut bits = i;
            let mut k = 0;
            let mut first_factor = true;
            while bits != 0 {
                if bits & 1 == 1 {
                    if !first_factor {
                        write!(f, "*")?;
                    }
                    write!(f, "sqrt(")?;
                    fmt_element(rads, &rads[k], f)?;
                    write!(f, ")")?;
                    first_factor = false;
                }
                bits >>= 1;
                k += 1;
            }
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rational_arithmetic() {
        let t = Tower::new();
        let a = t.ratio(2, 3);
        let b = t.ratio(1, 6);
        assert_eq!((&a + &b).as_rational(), Some(rat(5, 6)));
        assert_eq!((&a - &b).as_rational(), Some(rat(1, 2)));
        assert_eq!((&a * &b).as_rational(), Some(rat(1, 9)));
        assert_eq!((&a / &b).as_rational(), Some(rat(4, 1)));
        assert_eq!(t.generator_count(), 0);
    }

    #[test]
    fn sqrt_two_squares_back() {
        let t = Tower::new();
        let s = t.integer(2).sqrt().unwrap();
        assert_eq!(s.depth(), 1);
        assert_eq!(s.square(), t.integer(2));
        assert_eq!(s.square().depth(), 0);
        assert_eq!(t.generator_count(), 1);
    }

    #[test]
    fn sqrt_of_square_is_positive_root() {
        let t = Tower::new();
        let s = t.integer(2).sqrt().unwrap();
        let neg = -&s;
        assert_eq!(neg.square().sqrt().unwrap(), s);
    }

    #[test]
    fn denests_three_plus_two_sqrt_two() {
        let t = Tower::new();
        let s2 = t.integer(2).sqrt().unwrap();
        let x = t.integer(3) + s2.double();
        let r = x.sqrt().unwrap();
        assert_eq!(r, t.one() + &s2);
        assert_eq!(t.generator_count(), 1);
    }

    #[test]
    fn denests_six_plus_two_sqrt_five() {
        let t = Tower::new();
        let s5 = t.integer(5).sqrt().unwrap();
        let x = t.integer(6) + s5.double();
        assert_eq!(x.sqrt().unwrap(), t.one() + &s5);
        assert_eq!(t.generator_count(), 1);
    }

    #[test]
    fn six_is_square_in_sqrt2_sqrt3_tower() {
        let t = Tower::new();
        let s2 = t.integer(2).sqrt().unwrap();
        let s3 = t.integer(3).sqrt().unwrap();
        let s6 = t.integer(6).sqrt().unwrap();
        assert_eq!(s6, &s2 * &s3);
        assert_eq!(t.generator_count(), 2);
    }

    #[test]
    fn golden_identity_is_exact_zero() {
        let t = Tower::new();
        let s2 = t.integer(2).sqrt().unwrap();
        let s3 = t.integer(3).sqrt().unwrap();
        let inner = t.integer(5) + (&s2 * &s3).double();
        let x = &s2 + &s3 - inner.sqrt().unwrap();
        assert!(x.is_zero());
        assert_eq!(x.sign(), 0);
        assert_eq!(t.generator_count(), 2);
    }

    #[test]
    fn denests_against_nested_generator() {
        let t = Tower::new();
        let s2 = t.integer(2).sqrt().unwrap();
        let g = (t.integer(2) + &s2).sqrt().unwrap();
        assert_eq!(t.generator_count(), 2);
        let r = (t.integer(2) - &s2).sqrt().unwrap();
        assert_eq!(t.generator_count(), 2);
        assert_eq!(r, (&s2 - t.one()) * &g);
    }

    #[test]
    fn sqrt_extracts_rational_square_content() {
        let t = Tower::new();
        let r = t.ratio(5, 4).sqrt().unwrap();
        let s5 = t.integer(5).sqrt().unwrap();
        assert_eq!(r, t.ratio(1, 2) * &s5);
        assert_eq!(t.generator_count(), 1);
        assert_eq!(t.integer(8).sqrt().unwrap(), t.integer(2) * t.integer(2).sqrt().unwrap());
    }

    #[test]
    fn sqrt_of_zero_and_negative() {
        let t = Tower::new();
        assert!(t.zero().sqrt().unwrap().is_zero());
        assert_eq!(t.integer(-3).sqrt(), Err(FieldError::NegativeRadicand));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let t = Tower::new();
        assert_eq!(t.one().checked_div(&t.zero()), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn context_mismatch_is_an_error() {
        let t1 = Tower::new();
        let t2 = Tower::new();
        let r = t1.one().checked_add(&t2.one());
        assert!(matches!(r, Err(FieldError::ContextMismatch { .. })));
    }

    #[test]
    fn inverse_of_deep_element() {
        let t = Tower::new();
        let s2 = t.integer(2).sqrt().unwrap();
        let s3 = t.integer(3).sqrt().unwrap();
        let s7 = (t.integer(7) + &s2).sqrt().unwrap();
        let x = t.one() + &s2 + &s3 + &s7;
        let y = t.one() / &x;
        assert!((&x * &y).is_one());
    }

    #[test]
    fn signs_and_ordering() {
        let t = Tower::new();
        let s2 = t.integer(2).sqrt().unwrap();
        let s3 = t.integer(3).sqrt().unwrap();
        assert_eq!((&s2 - t.one()).sign(), 1);
        assert_eq!((t.ratio(3, 2) - &s2).sign(), 1);
        assert_eq!((t.ratio(7, 5) - &s2).sign(), -1);
        assert!(s2 < s3);
        let mut v = vec![s3.clone(), t.one(), s2.clone(), t.zero()];
        v.sort();
        assert_eq!(v, vec![t.zero(), t.one(), s2, s3]);
    }

    #[test]
    fn close_values_separate() {
        let t = Tower::new();
        let s2 = t.integer(2).sqrt().unwrap();
        let close = t.constant(rat(141_421_356_237, 100_000_000_000));
        assert_eq!((&s2 - &close).sign(), 1);
    }

    #[test]
    fn decimal_enclosure_contains_value() {
        let t = Tower::new();
        let s2 = t.integer(2).sqrt().unwrap();
        let iv = s2.to_decimal(60);
        assert!(iv.width() <= BigRational::new(BigInt::one(), BigInt::one() << 60));
        assert!(iv.lo() < iv.hi());
        let lo2 = iv.lo() * iv.lo();
        let hi2 = iv.hi() * iv.hi();
        assert!(lo2 < rat(2, 1) && rat(2, 1) < hi2);
    }

    #[test]
    fn decimal_string_of_sqrt2() {
        let t = Tower::new();
        let s2 = t.integer(2).sqrt().unwrap();
        assert_eq!(s2.to_decimal_string(60), "1.4142135623730950");
    }

    #[test]
    fn display_radical_expressions() {
        let t = Tower::new();
        let s5 = t.integer(5).sqrt().unwrap();
        let x = t.ratio(3, 2) - t.ratio(1, 2) * &s5;
        assert_eq!(x.to_string(), "3/2 - 1/2*sqrt(5)");
        let nested = (t.integer(10) - s5.double()).sqrt().unwrap();
        assert_eq!(nested.to_string(), "sqrt(10 - 2*sqrt(5))");
        assert_eq!(t.zero().to_string(), "0");
        assert_eq!((-(t.one() + &s5)).to_string(), "-1 - sqrt(5)");
    }

    #[test]
    fn product_of_conjugate_radicals_denests() {
        let t = Tower::new();
        let s5 = t.integer(5).sqrt().unwrap();
        let minus = (t.integer(10) - s5.double()).sqrt().unwrap();
        let gens_after_minus = t.generator_count();
        let plus = (t.integer(10) + s5.double()).sqrt().unwrap();
        assert_eq!(t.generator_count(), gens_after_minus);
        assert_eq!(&minus * &plus, s5.double().double());
    }

    #[test]
    fn large_prime_square_factor_stays_exact() {
        let t = Tower::new();
        let p = 1031_i64;
        let r = t.integer(2 * p * p).sqrt().unwrap();
        assert_eq!(r.square(), t.integer(2 * p * p));
        let s2 = t.integer(2).sqrt().unwrap();
        assert_eq!(&r / &s2, t.integer(p));
    }
}
