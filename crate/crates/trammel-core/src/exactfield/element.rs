//! Raw tower elements: coefficient vectors over the multiplicative basis of
//! generator products.
//!
//! An element of the depth-`n` tower is a vector of `2^n` rationals indexed
//! by subsets of the generators: entry `i` is the coefficient of the product
//! of all generators `k` with bit `k` set in `i`. Elements are kept in
//! canonical form — the vector is trimmed while its upper half is entirely
//! zero — so structural equality is value equality and the zero test is
//! "all coefficients zero".
//!
//! Everything here works on bare vectors plus a slice of generator radicands
//! (`rads[k]` is the radicand of generator `k`, itself an element of depth at
//! most `k`). Context bookkeeping, sign determination and the public API live
//! in the parent module.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Element {
    coeffs: Vec<BigRational>,
}

impl Element {
    pub(crate) fn zero() -> Self {
        Element { coeffs: vec![BigRational::zero()] }
    }

    pub(crate) fn one() -> Self {
        Element { coeffs: vec![BigRational::one()] }
    }

    pub(crate) fn from_rational(q: BigRational) -> Self {
        Element { coeffs: vec![q] }
    }

    pub(crate) fn from_int(n: i64) -> Self {
        Element::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds an element from a raw coefficient vector (length must be a
    /// power of two) and trims it to canonical form.
    pub(crate) fn from_raw(coeffs: Vec<BigRational>) -> Self {
        debug_assert!(coeffs.len().is_power_of_two());
        let mut e = Element { coeffs };
        e.trim();
        e
    }

    fn trim(&mut self) {
        while self.coeffs.len() > 1 {
            let half = self.coeffs.len() / 2;
            if self.coeffs[half..].iter().all(Zero::is_zero) {
                self.coeffs.truncate(half);
            } else {
                break;
            }
        }
    }

    /// Tower depth: `log2` of the coefficient vector length.
    pub(crate) fn depth(&self) -> usize {
        self.coeffs.len().trailing_zeros() as usize
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub(crate) fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub(crate) fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Rational value if the element lives at depth 0.
    pub(crate) fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs.len() == 1 {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// The coefficient vector padded with zeros to depth `d`.
    pub(crate) fn lifted(&self, d: usize) -> Vec<BigRational> {
        debug_assert!(self.depth() <= d);
        let mut v = self.coeffs.clone();
        v.resize(1 << d, BigRational::zero());
        v
    }
}

pub(crate) fn add(a: &Element, b: &Element) -> Element {
    let d = a.depth().max(b.depth());
    let av = a.lifted(d);
    let bv = b.lifted(d);
    Element::from_raw(av.iter().zip(&bv).map(|(x, y)| x + y).collect())
}

pub(crate) fn sub(a: &Element, b: &Element) -> Element {
    let d = a.depth().max(b.depth());
    let av = a.lifted(d);
    let bv = b.lifted(d);
    Element::from_raw(av.iter().zip(&bv).map(|(x, y)| x - y).collect())
}

pub(crate) fn neg(a: &Element) -> Element {
    Element::from_raw(a.coeffs.iter().map(|x| -x).collect())
}

pub(crate) fn scale(a: &Element, q: &BigRational) -> Element {
    Element::from_raw(a.coeffs.iter().map(|x| x * q).collect())
}

pub(crate) fn mul(rads: &[Element], a: &Element, b: &Element) -> Element {
    let d = a.depth().max(b.depth());
    let av = a.lifted(d);
    let bv = b.lifted(d);
    Element::from_raw(mul_raw(rads, d, &av, &bv))
}

/// Product of two depth-`d` coefficient vectors, using
/// `(a0 + a1 g)(b0 + b1 g) = (a0 b0 + a1 b1 r) + (a0 b1 + a1 b0) g`
/// where `g` is generator `d - 1` and `r` its radicand.
fn mul_raw(rads: &[Element], d: usize, a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if d == 0 {
        return vec![&a[0] * &b[0]];
    }
    let h = 1 << (d - 1);
    let (a0, a1) = a.split_at(h);
    let (b0, b1) = b.split_at(h);
    let rad = rads[d - 1].lifted(d - 1);
    let cross = mul_raw(rads, d - 1, &mul_raw(rads, d - 1, a1, b1), &rad);
    let mut lo = add_raw(&mul_raw(rads, d - 1, a0, b0), &cross);
    let hi = add_raw(
        &mul_raw(rads, d - 1, a0, b1),
        &mul_raw(rads, d - 1, a1, b0),
    );
    lo.extend(hi);
    lo
}

fn add_raw(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub_raw(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Multiplicative inverse, or `None` for zero.
pub(crate) fn inv(rads: &[Element], a: &Element) -> Option<Element> {
    if a.is_zero() {
        return None;
    }
    let v = inv_raw(rads, a.depth(), &a.coeffs)
        .expect("nonzero element has an inverse (non-square radicand invariant)");
    Some(Element::from_raw(v))
}

/// Inverse via the conjugate: `(x + y g)^-1 = (x - y g) / (x^2 - y^2 r)`.
/// The norm `x^2 - y^2 r` is nonzero for nonzero input because each radicand
/// `r` is a non-square in its subtower.
fn inv_raw(rads: &[Element], d: usize, a: &[BigRational]) -> Option<Vec<BigRational>> {
    if d == 0 {
        if a[0].is_zero() {
            return None;
        }
        return Some(vec![a[0].recip()]);
    }
    let h = 1 << (d - 1);
    let (x, y) = a.split_at(h);
    if y.iter().all(Zero::is_zero) {
        let mut v = inv_raw(rads, d - 1, x)?;
        v.resize(1 << d, BigRational::zero());
        return Some(v);
    }
    let rad = rads[d - 1].lifted(d - 1);
    let norm = sub_raw(
        &mul_raw(rads, d - 1, x, x),
        &mul_raw(rads, d - 1, &mul_raw(rads, d - 1, y, y), &rad),
    );
    let norm_inv = inv_raw(rads, d - 1, &norm)?;
    let mut lo = mul_raw(rads, d - 1, x, &norm_inv);
    let hi = mul_raw(rads, d - 1, y, &norm_inv);
    lo.extend(hi.iter().map(|c| -c));
    Some(lo)
}

pub(crate) fn div(rads: &[Element], a: &Element, b: &Element) -> Option<Element> {
    let binv = inv(rads, b)?;
    Some(mul(rads, a, &binv))
}

/// Exact square root of `x` within the depth-`m` tower, if one exists there.
///
/// The search must be parameterized by the tower level rather than by the
/// depth of `x` itself: a rational like 6 is a square in a tower containing
/// `sqrt(2)` and `sqrt(3)` even though it is not a rational square. Writing
/// `x = a + b g` with `g` the level-`m - 1` generator (radicand `r`):
///
/// - `b = 0`: a root of `a`, or `g` times a root of `a / r`, found one level
///   down.
/// - `b != 0`: any root `u + v g` forces `u^2 + v^2 r = a` and `2 u v = b`,
///   so `u^2` is a root of `U^2 - a U + b^2 r / 4`, whose discriminant
///   `a^2 - b^2 r` must itself be a square one level down.
///
/// The returned root is not sign-normalized.
pub(crate) fn sqrt_in(rads: &[Element], x: &Element, m: usize) -> Option<Element> {
    if x.is_zero() {
        return Some(Element::zero());
    }
    if m == 0 {
        debug_assert_eq!(x.depth(), 0);
        return rational_sqrt(&x.coeffs[0]).map(Element::from_rational);
    }
    let v = x.lifted(m);
    let h = 1 << (m - 1);
    let a = Element::from_raw(v[..h].to_vec());
    let b = Element::from_raw(v[h..].to_vec());
    let r = &rads[m - 1];
    if b.is_zero() {
        if let Some(u) = sqrt_in(rads, &a, m - 1) {
            return Some(u);
        }
        let quotient = div(rads, &a, r).expect("radicands are nonzero");
        if let Some(u) = sqrt_in(rads, &quotient, m - 1) {
            return Some(times_generator(&u, m - 1));
        }
        return None;
    }
    let disc = sub(&mul(rads, &a, &a), &mul(rads, &mul(rads, &b, &b), r));
    let s = sqrt_in(rads, &disc, m - 1)?;
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    for u_sq in [scale(&add(&a, &s), &half), scale(&sub(&a, &s), &half)] {
        if let Some(u) = sqrt_in(rads, &u_sq, m - 1) {
            if u.is_zero() {
                continue;
            }
            let two_u = scale(&u, &BigRational::from_integer(BigInt::from(2)));
            let w = div(rads, &b, &two_u).expect("u is nonzero");
            return Some(compose(m - 1, &u, &w));
        }
    }
    None
}

/// `lo + hi * g_k` as a depth-`k + 1` element.
fn compose(k: usize, lo: &Element, hi: &Element) -> Element {
    let mut v = lo.lifted(k);
    v.extend(hi.lifted(k));
    Element::from_raw(v)
}

/// `e * g_k` for `e` of depth at most `k`.
pub(crate) fn times_generator(e: &Element, k: usize) -> Element {
    compose(k, &Element::zero(), e)
}

/// Exact rational square root, if the radicand is a perfect square.
pub(crate) fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    if q.is_zero() {
        return Some(BigRational::zero());
    }
    let rn = q.numer().sqrt();
    let rd = q.denom().sqrt();
    if &(&rn * &rn) == q.numer() && &(&rd * &rd) == q.denom() {
        Some(BigRational::new(rn, rd))
    } else {
        None
    }
}

/// Positive rational content: the coefficients of `x / content(x)` are
/// integers with no common factor.
pub(crate) fn content(x: &Element) -> BigRational {
    debug_assert!(!x.is_zero());
    let mut denom_lcm = BigInt::one();
    for c in &x.coeffs {
        if !c.is_zero() {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
    }
    let mut numer_gcd = BigInt::zero();
    for c in &x.coeffs {
        if !c.is_zero() {
            let scaled = c.numer() * (&denom_lcm / c.denom());
            numer_gcd = numer_gcd.gcd(&scaled);
        }
    }
    BigRational::new(numer_gcd, denom_lcm)
}

/// Splits a positive rational as `c = s^2 * f` with `f` a positive integer
/// free of small square factors, returning `s`.
///
/// Square extraction is by trial division up to a fixed bound plus a perfect
/// square check on the remainder, so `f` is genuinely squarefree whenever its
/// square part has a factor below the bound or is a full square; larger
/// square factors are left in place, which costs canonicality nothing — the
/// radicand stays equivalent, just unreduced.
pub(crate) fn square_part(c: &BigRational) -> BigRational {
    debug_assert!(c.is_positive());
    let m = c.numer() * c.denom();
    let (s0, _f) = extract_square(m);
    BigRational::new(s0, c.denom().clone())
}

fn extract_square(mut n: BigInt) -> (BigInt, BigInt) {
    debug_assert!(n.is_positive());
    let mut s = BigInt::one();
    let mut d = BigInt::from(2);
    let bound = BigInt::from(1024);
    while d <= bound {
        let dd = &d * &d;
        if dd > n {
            break;
        }
        while (&n % &dd).is_zero() {
            n /= &dd;
            s *= &d;
        }
        d += 1;
    }
    let root = n.sqrt();
    if &root * &root == n {
        s *= &root;
        n = BigInt::one();
    }
    (s, n)
}
