//! Exact trigonometry for rational-turn angles, the polygon constructibility
//! test, and inscribed-chord lengths.
//!
//! Angles are carried as exact `(cos, sin)` pairs on the unit circle rather
//! than as symbolic degree values; every supported angle is assembled from
//! hard-coded base pairs for one third and one fifth of a turn, a Bezout
//! combination for one fifteenth, and exact half-angle steps for powers of
//! two. The supported denominators are exactly those whose odd part divides
//! 15; the 17-gon (and beyond) is recognized by [`is_constructible`] but has
//! no trig kernel here.

use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::exactfield::{ConstructibleNumber, Tower};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AngleError {
    /// Polygon sides / chord denominators start at 3.
    BelowThree { n: u64 },
    /// The denominator's odd part must divide 15.
    UnsupportedFactor { denominator: u64, factor: u64 },
    /// Half-angle is defined here only on the closed upper half plane.
    LowerHalfPlane,
    /// A direction must satisfy `c^2 + s^2 = 1` exactly.
    NotOnUnitCircle,
    /// Chord lengths need a positive squared radius.
    NonPositiveRadius,
    ZeroDenominator,
}

impl fmt::Display for AngleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AngleError::BelowThree { n } => write!(f, "n must be at least 3, got {n}"),
            AngleError::UnsupportedFactor { denominator, factor } => {
                write!(f, "denominator {denominator} has unsupported odd factor {factor}")
            }
            AngleError::LowerHalfPlane => {
                write!(f, "half-angle requires a direction in the closed upper half plane")
            }
            AngleError::NotOnUnitCircle => write!(f, "cos^2 + sin^2 must equal 1 exactly"),
            AngleError::NonPositiveRadius => write!(f, "squared radius must be positive"),
            AngleError::ZeroDenominator => write!(f, "turn denominator must be positive"),
        }
    }
}

impl core::error::Error for AngleError {}

/// A rational fraction of a full turn, reduced to lowest terms with a
/// positive denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RationalTurn {
    numerator: i64,
    denominator: u64,
}

impl RationalTurn {
    pub fn new(numerator: i64, denominator: i64) -> Result<RationalTurn, AngleError> {
        if denominator == 0 {
            return Err(AngleError::ZeroDenominator);
        }
        let (mut n, mut d) = (numerator as i128, denominator as i128);
        if d < 0 {
            n = -n;
            d = -d;
        }
        let g = n.unsigned_abs().gcd(&d.unsigned_abs()).max(1);
        Ok(RationalTurn {
            numerator: (n / g as i128) as i64,
            denominator: (d / g as i128) as u64,
        })
    }

    pub fn numerator(&self) -> i64 {
        self.numerator
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }
}

impl fmt::Display for RationalTurn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{} turn", self.numerator, self.denominator)
    }
}

/// An exact point on the unit circle: `c^2 + s^2 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitCircleDirection {
    c: ConstructibleNumber,
    s: ConstructibleNumber,
}

impl UnitCircleDirection {
    pub fn new(c: ConstructibleNumber, s: ConstructibleNumber) -> Result<Self, AngleError> {
        let one = c.tower().one();
        if c.square() + s.square() != one {
            return Err(AngleError::NotOnUnitCircle);
        }
        Ok(UnitCircleDirection { c, s })
    }

    fn unchecked(c: ConstructibleNumber, s: ConstructibleNumber) -> Self {
        UnitCircleDirection { c, s }
    }

    pub fn cos(&self) -> &ConstructibleNumber {
        &self.c
    }

    pub fn sin(&self) -> &ConstructibleNumber {
        &self.s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumKind {
    Add,
    Sub,
}

/// Exact angle addition/subtraction via the cosine and sine sum formulas.
pub fn angle_sum(
    a: &UnitCircleDirection,
    b: &UnitCircleDirection,
    kind: SumKind,
) -> UnitCircleDirection {
    match kind {
        SumKind::Add => UnitCircleDirection::unchecked(
            &a.c * &b.c - &a.s * &b.s,
            &a.s * &b.c + &a.c * &b.s,
        ),
        SumKind::Sub => UnitCircleDirection::unchecked(
            &a.c * &b.c + &a.s * &b.s,
            &a.s * &b.c - &a.c * &b.s,
        ),
    }
}

/// Exact half angle for directions in the closed upper half plane; the
/// result has nonnegative sine and cosine (the half angle lands in the first
/// quadrant). Doubling the result with [`angle_sum`] returns the input
/// exactly.
pub fn half_angle(a: &UnitCircleDirection) -> Result<UnitCircleDirection, AngleError> {
    if a.s.sign() < 0 {
        return Err(AngleError::LowerHalfPlane);
    }
    let t = a.c.tower().clone();
    let one = t.one();
    let two = t.integer(2);
    let half_cos_sq = (&one + &a.c) / &two;
    let c = half_cos_sq.sqrt().expect("1 + cos is nonnegative on the unit circle");
    let s = if c.is_zero() {
        // The 180 degree case: the half angle is exactly 90 degrees.
        t.one()
    } else {
        &a.s / c.double()
    };
    Ok(UnitCircleDirection::unchecked(c, s))
}

/// `n`-fold angle, by binary doubling of exact sums.
fn angle_multiple(base: &UnitCircleDirection, n: u64) -> UnitCircleDirection {
    let t = base.c.tower();
    let mut acc = UnitCircleDirection::unchecked(t.one(), t.zero());
    let mut sq = base.clone();
    let mut k = n;
    while k > 0 {
        if k & 1 == 1 {
            acc = angle_sum(&acc, &sq, SumKind::Add);
        }
        k >>= 1;
        if k > 0 {
            sq = angle_sum(&sq, &sq, SumKind::Add);
        }
    }
    acc
}

fn third_turn(t: &Tower) -> UnitCircleDirection {
    let s3 = t.integer(3).sqrt().expect("3 is positive");
    UnitCircleDirection::unchecked(t.ratio(-1, 2), t.ratio(1, 2) * s3)
}

fn fifth_turn(t: &Tower) -> UnitCircleDirection {
    let s5 = t.integer(5).sqrt().expect("5 is positive");
    let s = ((t.integer(10) + s5.double()) / t.integer(16))
        .sqrt()
        .expect("10 + 2*sqrt(5) is positive");
    let c = (s5 - t.one()) / t.integer(4);
    UnitCircleDirection::unchecked(c, s)
}

/// Exact `(cos, sin)` of a rational turn whose denominator's odd part
/// divides 15. The direction is assembled as: base pair for the odd part
/// (1, 1/3, 1/5, or 1/15 of a turn via `1/15 = 2/5 - 1/3`), then halvings
/// for the power of two, then the numerator as an exact multiple.
pub fn exact_cos_sin(tower: &Tower, turn: &RationalTurn) -> Result<UnitCircleDirection, AngleError> {
    let q = turn.denominator;
    let k = q.trailing_zeros();
    let m = q >> k;
    let base = match m {
        1 => {
            if k == 0 {
                // Whole turns land on (1, 0) regardless of the numerator.
                return Ok(UnitCircleDirection::unchecked(tower.one(), tower.zero()));
            }
            // Start at half a turn and halve k - 1 times.
            let mut d = UnitCircleDirection::unchecked(-tower.one(), tower.zero());
            for _ in 0..k - 1 {
                d = half_angle(&d).expect("halvings stay in the upper half plane");
            }
            d
        }
        3 | 5 | 15 => {
            let mut d = match m {
                3 => third_turn(tower),
                5 => fifth_turn(tower),
                _ => {
                    let d5 = fifth_turn(tower);
                    let d3 = third_turn(tower);
                    angle_sum(&angle_sum(&d5, &d5, SumKind::Add), &d3, SumKind::Sub)
                }
            };
            for _ in 0..k {
                d = half_angle(&d).expect("halvings stay in the upper half plane");
            }
            d
        }
        other => {
            let factor = smallest_unsupported_factor(other);
            return Err(AngleError::UnsupportedFactor { denominator: q, factor });
        }
    };
    let p = turn.numerator.rem_euclid(q as i64) as u64;
    Ok(angle_multiple(&base, p))
}

fn smallest_unsupported_factor(odd: u64) -> u64 {
    let mut m = odd;
    for f in [3u64, 5] {
        if m.is_multiple_of(f) {
            m /= f;
        }
    }
    let mut d = 3;
    while d * d <= m {
        if m.is_multiple_of(d) {
            return d;
        }
        d += 2;
    }
    m
}

const FERMAT_PRIMES: [u64; 5] = [3, 5, 17, 257, 65537];

/// Wantzel's criterion: a regular `n`-gon is constructible iff `n` is a
/// power of two times a product of distinct Fermat primes.
pub fn is_constructible(n: u64) -> Result<bool, AngleError> {
    if n < 3 {
        return Err(AngleError::BelowThree { n });
    }
    let mut m = n >> n.trailing_zeros();
    for f in FERMAT_PRIMES {
        if m.is_multiple_of(f) {
            m /= f;
            if m.is_multiple_of(f) {
                return Ok(false);
            }
        }
    }
    Ok(m == 1)
}

/// The factorization witnessing constructibility: `(a, primes)` with
/// `n = 2^a * product(primes)`, or `None` when `n` is not constructible.
pub fn constructible_factorization(n: u64) -> Result<Option<(u32, Vec<u64>)>, AngleError> {
    if !is_constructible(n)? {
        return Ok(None);
    }
    let a = n.trailing_zeros();
    let mut m = n >> a;
    let mut primes = Vec::new();
    for f in FERMAT_PRIMES {
        if m.is_multiple_of(f) {
            primes.push(f);
            m /= f;
        }
    }
    Ok(Some((a, primes)))
}

/// Whether the trig kernel covers the regular `n`-gon: `n >= 3` with odd
/// part dividing 15 (a strict subset of the constructible `n`).
pub fn supported_ngon(n: u64) -> bool {
    n >= 3 && matches!(n >> n.trailing_zeros(), 1 | 3 | 5 | 15)
}

/// Exact squared edge length of the regular `n`-gon inscribed in a circle
/// of squared radius `radius_sq`: `radius_sq * (2 - 2 cos(2 pi / n))`.
pub fn chord_sq(n: u64, radius_sq: &ConstructibleNumber) -> Result<ConstructibleNumber, AngleError> {
    if n < 3 {
        return Err(AngleError::BelowThree { n });
    }
    if radius_sq.sign() != 1 {
        return Err(AngleError::NonPositiveRadius);
    }
    let tower = radius_sq.tower().clone();
    let turn = RationalTurn::new(1, n as i64)?;
    let dir = exact_cos_sin(&tower, &turn)?;
    let two = tower.integer(2);
    Ok(radius_sq * (two - dir.cos().double()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decimal::to_f64;
    use alloc::vec;

    fn turn(p: i64, q: i64) -> RationalTurn {
        RationalTurn::new(p, q).unwrap()
    }

    fn dir(t: &Tower, p: i64, q: i64) -> UnitCircleDirection {
        exact_cos_sin(t, &turn(p, q)).unwrap()
    }

    fn approx(x: &ConstructibleNumber) -> f64 {
        to_f64(&x.to_decimal(60).midpoint())
    }

    #[test]
    fn quarter_and_whole_turns() {
        let t = Tower::new();
        let q = dir(&t, 1, 4);
        assert!(q.cos().is_zero() && q.sin().is_one());
        let w = dir(&t, 5, 1);
        assert!(w.cos().is_one() && w.sin().is_zero());
        let h = dir(&t, 1, 2);
        assert_eq!(h.cos(), &-t.one());
        assert!(h.sin().is_zero());
        let n = dir(&t, -1, 4);
        assert!(n.cos().is_zero());
        assert_eq!(n.sin(), &-t.one());
    }

    #[test]
    fn base_pairs_are_exact() {
        let t = Tower::new();
        let d3 = dir(&t, 1, 3);
        assert_eq!(d3.cos(), &t.ratio(-1, 2));
        assert_eq!(d3.sin().square(), t.ratio(3, 4));
        let d5 = dir(&t, 1, 5);
        let s5 = t.integer(5).sqrt().unwrap();
        assert_eq!(d5.cos(), &((&s5 - t.one()) / t.integer(4)));
        assert_eq!(d5.sin().square(), (t.integer(10) + s5.double()) / t.integer(16));
    }

    #[test]
    fn unit_circle_invariant_for_supported_denominators() {
        let t = Tower::new();
        for q in 1..=60u64 {
            if !matches!(q >> q.trailing_zeros(), 1 | 3 | 5 | 15) {
                continue;
            }
            let d = dir(&t, 1, q as i64);
            assert!(
                (d.cos().square() + d.sin().square()).is_one(),
                "c^2+s^2 != 1 for 1/{q}"
            );
        }
    }

    #[test]
    fn angle_sum_examples() {
        let t = Tower::new();
        let sixty = dir(&t, 1, 6);
        let thirty = dir(&t, 1, 12);
        let ninety = angle_sum(&sixty, &thirty, SumKind::Add);
        assert!(ninety.cos().is_zero() && ninety.sin().is_one());

        let d90 = dir(&t, 1, 4);
        let d36 = dir(&t, 1, 10);
        let d54 = angle_sum(&d90, &d36, SumKind::Sub);
        assert_eq!(&d54, &dir(&t, 3, 20));
        let s5 = t.integer(5).sqrt().unwrap();
        assert_eq!(d54.cos().square(), (t.integer(10) - s5.double()) / t.integer(16));

        let six = angle_sum(&sixty, &d54, SumKind::Sub);
        assert_eq!(&six, &dir(&t, 1, 60));
    }

    #[test]
    fn half_angle_round_trips() {
        let t = Tower::new();
        for (p, q) in [(1i64, 2i64), (1, 3), (1, 5), (1, 15), (1, 4), (1, 10)] {
            let d = dir(&t, p, q);
            let h = half_angle(&d).unwrap();
            assert_eq!(angle_sum(&h, &h, SumKind::Add), d, "doubling half of {p}/{q}");
            assert_eq!(&h, &dir(&t, p, q * 2));
        }
        let flat = dir(&t, 1, 2);
        let up = half_angle(&flat).unwrap();
        assert!(up.cos().is_zero() && up.sin().is_one());
    }

    #[test]
    fn half_angle_rejects_lower_half_plane() {
        let t = Tower::new();
        let down = dir(&t, 3, 4);
        assert_eq!(half_angle(&down), Err(AngleError::LowerHalfPlane));
    }

    #[test]
    fn pentadecagon_direction_matches_oracle() {
        let t = Tower::new();
        let d15 = dir(&t, 1, 15);
        assert!((approx(d15.cos()) - 0.913_545_457_642_601).abs() < 1e-12);
        assert!((approx(d15.sin()) - 0.406_736_643_075_800).abs() < 1e-12);
    }

    #[test]
    fn constructibility_oracle_sets() {
        for n in [3u64, 4, 5, 6, 8, 10, 12, 15, 16, 17, 20, 30, 60, 257, 65537, 2 * 3 * 5 * 17] {
            assert_eq!(is_constructible(n), Ok(true), "{n} should be constructible");
        }
        for n in [7u64, 9, 11, 13, 14, 18, 21, 25, 3 * 3 * 2, 17 * 17] {
            assert_eq!(is_constructible(n), Ok(false), "{n} should not be constructible");
        }
        assert!(matches!(is_constructible(2), Err(AngleError::BelowThree { n: 2 })));
    }

    #[test]
    fn constructibility_matches_brute_force() {
        for n in 3..=1000u64 {
            let mut m = n;
            let mut ok = true;
            while m % 2 == 0 {
                m /= 2;
            }
            let mut p = 3;
            while m > 1 {
                if m % p == 0 {
                    let mut count = 0;
                    while m % p == 0 {
                        m /= p;
                        count += 1;
                    }
                    let fermat = p >= 3 && (p - 1).is_power_of_two() && {
                        let k = (p - 1).trailing_zeros();
                        k.is_power_of_two() || k == 1
                    };
                    if count > 1 || !fermat {
                        ok = false;
                    }
                }
                p += 2;
                if p * p > m && m > 1 {
                    let q = m;
                    let fermat = (q - 1).is_power_of_two() && {
                        let k = (q - 1).trailing_zeros();
                        k.is_power_of_two() || k == 1
                    };
                    if !fermat {
                        ok = false;
                    }
                    m = 1;
                }
            }
            assert_eq!(is_constructible(n).unwrap(), ok, "disagreement at n = {n}");
        }
    }

    #[test]
    fn factorization_witness() {
        assert_eq!(constructible_factorization(15), Ok(Some((0, vec![3, 5]))));
        assert_eq!(constructible_factorization(60), Ok(Some((2, vec![3, 5]))));
        assert_eq!(constructible_factorization(64), Ok(Some((6, vec![]))));
        assert_eq!(constructible_factorization(7), Ok(None));
        assert_eq!(constructible_factorization(17), Ok(Some((0, vec![17]))));
    }

    #[test]
    fn chord_examples() {
        let t = Tower::new();
        let one = t.one();
        assert_eq!(chord_sq(6, &one), Ok(t.one()));
        assert_eq!(chord_sq(4, &one), Ok(t.integer(2)));
        assert_eq!(chord_sq(3, &one), Ok(t.integer(3)));
        let s5 = t.integer(5).sqrt().unwrap();
        assert_eq!(chord_sq(10, &one), Ok((t.integer(3) - s5) / t.integer(2)));
        let nine = t.integer(9);
        assert_eq!(chord_sq(6, &nine), Ok(t.integer(9)));
    }

    #[test]
    fn chord_errors() {
        let t = Tower::new();
        let one = t.one();
        assert!(matches!(chord_sq(2, &one), Err(AngleError::BelowThree { .. })));
        assert!(matches!(
            chord_sq(7, &one),
            Err(AngleError::UnsupportedFactor { denominator: 7, factor: 7 })
        ));
        assert!(matches!(
            chord_sq(9, &one),
            Err(AngleError::UnsupportedFactor { denominator: 9, factor: 3 })
        ));
        assert!(matches!(
            chord_sq(17, &one),
            Err(AngleError::UnsupportedFactor { denominator: 17, factor: 17 })
        ));
        assert!(matches!(chord_sq(6, &t.zero()), Err(AngleError::NonPositiveRadius)));
        assert!(matches!(chord_sq(6, &-t.one()), Err(AngleError::NonPositiveRadius)));
    }

    #[test]
    fn chords_decrease_with_n() {
        let t = Tower::new();
        let one = t.one();
        let supported: alloc::vec::Vec<u64> =
            (3..=60).filter(|&n| supported_ngon(n)).collect();
        assert_eq!(
            supported,
            vec![3, 4, 5, 6, 8, 10, 12, 15, 16, 20, 24, 30, 32, 40, 48, 60]
        );
        let mut prev: Option<ConstructibleNumber> = None;
        for n in supported {
            let c = chord_sq(n, &one).unwrap();
            if let Some(p) = &prev {
                assert!(c < *p, "chord_sq({n}) should be smaller");
            }
            prev = Some(c);
        }
    }

    #[test]
    fn chord_decimal_matches_float_trig() {
        let t = Tower::new();
        let one = t.one();
        for n in [3u64, 4, 5, 6, 8, 10, 12, 15, 16, 20, 24, 30, 40, 48, 60] {
            let c = chord_sq(n, &one).unwrap();
            let exact = approx(&c);
            let float = {
                let s = (core::f64::consts::PI / n as f64).sin();
                4.0 * s * s
            };
            assert!((exact - float).abs() < 1e-12, "n = {n}: {exact} vs {float}");
        }
    }

    #[test]
    fn direction_constructor_checks_invariant() {
        let t = Tower::new();
        assert!(UnitCircleDirection::new(t.one(), t.zero()).is_ok());
        assert_eq!(
            UnitCircleDirection::new(t.one(), t.one()),
            Err(AngleError::NotOnUnitCircle)
        );
    }
}
