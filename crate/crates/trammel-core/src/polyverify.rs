//! Bundled pentadecagon scenes plus exact verification of their
//! polygon-edge claims: every chord named in the summary table is
//! checked, with zero tolerance, to be an edge of the regular n-gon
//! inscribed in the main circle. Also: inverse chord lookup
//! ([`identify_ngon`]) and construction-cost tallies ([`op_count`]).

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::euclidplane::Point;
use crate::exactangle::{chord_sq, supported_ngon, AngleError};
use crate::exactfield::{ConstructibleNumber, Tower};
use crate::geoscript::{
    interpret, parse, Predicate, RadicalExpr, Scene, Script, Statement, StatementKind, StepKind,
};

/// Direct route to the pentadecagon edge; see `scenes/` for the text.
pub const PAPER_PENTADECAGON_GEO: &str = include_str!("../../../scenes/paper_pentadecagon.geo");

/// The classical variant that spends one extra circle on the point R.
pub const EUCLID_VARIANT_GEO: &str = include_str!("../../../scenes/euclid_variant.geo");

/// One row of the summary table: the chord from `p_name` to `q_name`
/// is claimed to be an edge of the inscribed regular `n`-gon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeClaim {
    pub n: u64,
    pub p_name: String,
    pub q_name: String,
    pub central_angle_degrees: BigRational,
}

impl EdgeClaim {
    pub fn new(n: u64, p_name: &str, q_name: &str) -> EdgeClaim {
        assert!(n >= 3, "polygons start at 3 sides");
        EdgeClaim {
            n,
            p_name: String::from(p_name),
            q_name: String::from(q_name),
            central_angle_degrees: BigRational::new(BigInt::from(360), BigInt::from(n)),
        }
    }
}

/// The ten claims of the summary table, in table order.
pub fn table_claims() -> Vec<EdgeClaim> {
    [
        (3, "E", "F"),
        (4, "H", "A"),
        (5, "H", "K"),
        (6, "E", "A"),
        (10, "H", "I"),
        (12, "H", "E"),
        (15, "E", "N"),
        (20, "I", "N"),
        (30, "L", "N"),
        (60, "E", "I"),
    ]
    .into_iter()
    .map(|(n, p, q)| EdgeClaim::new(n, p, q))
    .collect()
}

/// The three exact checks behind one claim. `passed` is their
/// conjunction; each is an exact field equality, never a tolerance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCheck {
    pub claim: EdgeClaim,
    pub on_circle_p: bool,
    pub on_circle_q: bool,
    pub chord_exact_match: bool,
}

impl EdgeCheck {
    pub fn passed(&self) -> bool {
        self.on_circle_p && self.on_circle_q && self.chord_exact_match
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub rows: Vec<EdgeCheck>,
    pub overall: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerifyError {
    /// The scene does not bind this name to a point.
    UnknownPoint(String),
    Angle(AngleError),
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyError::UnknownPoint(name) => {
                write!(f, "the scene has no point named '{name}'")
            }
            VerifyError::Angle(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for VerifyError {
    fn source(&self) -> Option<&(dyn core::error::Error + 'static)> {
        match self {
            VerifyError::Angle(e) => Some(e),
            _ => None,
        }
    }
}

impl From<AngleError> for VerifyError {
    fn from(e: AngleError) -> VerifyError {
        VerifyError::Angle(e)
    }
}

fn named_point<'a>(scene: &'a Scene, name: &str) -> Result<&'a Point, VerifyError> {
    scene.point(name).ok_or_else(|| VerifyError::UnknownPoint(String::from(name)))
}

/// Interprets the bundled direct construction in a fresh tower. The
/// script's own assertions replay during the build, so a returned
/// scene has already passed them.
pub fn build_paper_scene() -> Scene {
    let script = parse(PAPER_PENTADECAGON_GEO).expect("bundled scene is well formed");
    interpret(&script, &Tower::new()).expect("bundled scene replays without error")
}

/// Interprets the bundled classical variant (one extra circle, the
/// point R, and the exact pentadecagon-chord assertion) likewise.
pub fn build_euclid_variant() -> Scene {
    let script = parse(EUCLID_VARIANT_GEO).expect("bundled scene is well formed");
    interpret(&script, &Tower::new()).expect("bundled scene replays without error")
}

/// Checks one claim against a scene: both endpoints lie on the circle
/// about `center_name` through `radius_point_name`, and the squared
/// chord equals `chord_sq(claim.n, radius_sq)`. All exact.
pub fn verify_edge(
    scene: &Scene,
    claim: &EdgeClaim,
    center_name: &str,
    radius_point_name: &str,
) -> Result<EdgeCheck, VerifyError> {
    let center = named_point(scene, center_name)?;
    let radius_point = named_point(scene, radius_point_name)?;
    let p = named_point(scene, &claim.p_name)?;
    let q = named_point(scene, &claim.q_name)?;
    let radius_sq = center.dist_sq(radius_point);
    let expected = chord_sq(claim.n, &radius_sq)?;
    Ok(EdgeCheck {
        claim: claim.clone(),
        on_circle_p: center.dist_sq(p) == radius_sq,
        on_circle_q: center.dist_sq(q) == radius_sq,
        chord_exact_match: p.dist_sq(q) == expected,
    })
}

/// Runs all ten table claims against the circle centered at `O`
/// through `A`. `overall` is true iff every row passes every check.
pub fn verify_table(scene: &Scene) -> Result<VerificationReport, VerifyError> {
    let mut rows = Vec::new();
    for claim in table_claims() {
        rows.push(verify_edge(scene, &claim, "O", "A")?);
    }
    let overall = rows.iter().all(EdgeCheck::passed);
    Ok(VerificationReport { rows, overall })
}

/// Finds the unique supported `n <= n_max` whose inscribed-polygon
/// edge has exactly this squared length, if any. `chord_squared` and
/// `radius_sq` must live in one tower, and `radius_sq` must be
/// positive. Chord lengths are strictly decreasing in `n`, so at most
/// one `n` can match.
pub fn identify_ngon(
    chord_squared: &ConstructibleNumber,
    radius_sq: &ConstructibleNumber,
    n_max: u64,
) -> Option<u64> {
    for n in 3..=n_max {
        if !supported_ngon(n) {
            continue;
        }
        let candidate = chord_sq(n, radius_sq).expect("supported n cannot fail");
        if &candidate == chord_squared {
            return Some(n);
        }
    }
    None
}

/// Classical construction accounting: circles and lines drawn each
/// cost one operation, marking a point (free or intersection) is free
/// but tallied separately.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OpCount {
    pub circles_drawn: u64,
    pub lines_drawn: u64,
    pub points_marked: u64,
}

pub fn op_count(scene: &Scene) -> OpCount {
    let mut count = OpCount { circles_drawn: 0, lines_drawn: 0, points_marked: 0 };
    for step in scene.steps() {
        match &step.kind {
            StepKind::CircleDrawn { .. } => count.circles_drawn += 1,
            StepKind::LineDrawn { .. } => count.lines_drawn += 1,
            StepKind::FreePoint { .. } | StepKind::IntersectionPoint { .. } => {
                count.points_marked += 1
            }
            StepKind::Assertion { .. } => {}
        }
    }
    count
}

/// Rescales a script about the origin: free-point coordinates are
/// multiplied by `factor` and every squared-distance assertion
/// right-hand side by `factor`². Construction statements are
/// coordinate-free, so the scaled script replays the same figure at a
/// different size.
pub fn scale_script(script: &Script, factor: &BigRational) -> Script {
    assert!(factor.is_positive(), "scale factor must be positive");
    let factor_sq = factor * factor;
    let factor_sq_expr = if factor_sq.is_integer() {
        RadicalExpr::Rational(factor_sq.clone())
    } else {
        RadicalExpr::Div(
            RadicalExpr::Rational(BigRational::from_integer(factor_sq.numer().clone())).into(),
            RadicalExpr::Rational(BigRational::from_integer(factor_sq.denom().clone())).into(),
        )
    };
    let statements = script
        .statements
        .iter()
        .map(|stmt| {
            let kind = match &stmt.kind {
                StatementKind::FreePoint { name, x, y } => StatementKind::FreePoint {
                    name: name.clone(),
                    x: x * factor,
                    y: y * factor,
                },
                StatementKind::Assert { predicate: Predicate::DistSqEquals { p, q, expr } } => {
                    StatementKind::Assert {
                        predicate: Predicate::DistSqEquals {
                            p: p.clone(),
                            q: q.clone(),
                            expr: RadicalExpr::Mul(
                                factor_sq_expr.clone().into(),
                                expr.clone().into(),
                            ),
                        },
                    }
                }
                other => other.clone(),
            };
            Statement { kind, line: stmt.line, column: stmt.column }
        })
        .collect();
    Script { statements }
}

#[cfg(test)]
mod tests {
    use alloc::string::ToString;

    use super::*;

    #[test]
    fn paper_scene_lands_on_analytic_coordinates() {
        let scene = build_paper_scene();
        let t = scene.tower().clone();
        let h = scene.point("H").unwrap();
        assert_eq!(h.x, t.integer(0));
        assert_eq!(h.y, t.integer(1));

        let s5 = t.integer(5).sqrt().unwrap();
        let i = scene.point("I").unwrap();
        let ix = (t.integer(10) - s5.double()).sqrt().unwrap() / t.integer(4);
        let iy = (t.one() + &s5) / t.integer(4);
        assert_eq!(i.x, ix);
        assert_eq!(i.y, iy);
    }

    #[test]
    fn hj_identity_holds_symbolically() {
        let scene = build_paper_scene();
        let t = scene.tower().clone();
        let h = scene.point("H").unwrap();
        let j = scene.point("J").unwrap();
        let s5 = t.integer(5).sqrt().unwrap();
        let expected = (t.integer(3) - s5) / t.integer(2);
        assert_eq!(h.dist_sq(j), expected);
    }

    #[test]
    fn table_verifies_ten_for_ten() {
        let report = verify_table(&build_paper_scene()).unwrap();
        assert!(report.overall);
        assert_eq!(report.rows.len(), 10);
        let ns: Vec<u64> = report.rows.iter().map(|r| r.claim.n).collect();
        assert_eq!(ns, [3, 4, 5, 6, 10, 12, 15, 20, 30, 60]);
        for row in &report.rows {
            assert!(row.on_circle_p && row.on_circle_q && row.chord_exact_match);
        }
    }

    #[test]
    fn wrong_claim_fails_only_the_chord_check() {
        let scene = build_paper_scene();
        let check = verify_edge(&scene, &EdgeClaim::new(4, "E", "A"), "O", "A").unwrap();
        assert!(check.on_circle_p && check.on_circle_q);
        assert!(!check.chord_exact_match);
        assert!(!check.passed());
    }

    #[test]
    fn misselected_pentagon_vertex_fails_its_row() {
        let flipped = PAPER_PENTADECAGON_GEO
            .replace("point K = intersect(IK, X) farthest H", "point K = intersect(IK, X) nearest H");
        assert_ne!(flipped, PAPER_PENTADECAGON_GEO);
        let scene = interpret(&parse(&flipped).unwrap(), &Tower::new()).unwrap();
        let report = verify_table(&scene).unwrap();
        assert!(!report.overall);
        for row in &report.rows {
            assert_eq!(row.passed(), row.claim.n != 5);
        }
    }

    #[test]
    fn identify_ngon_round_trips_every_supported_n() {
        let t = Tower::new();
        let one = t.one();
        for n in 3..=64 {
            if !supported_ngon(n) {
                continue;
            }
            let c = chord_sq(n, &one).unwrap();
            assert_eq!(identify_ngon(&c, &one, 64), Some(n), "n = {n}");
        }
        let s5 = t.integer(5).sqrt().unwrap();
        let decagon = (t.integer(3) - s5) / t.integer(2);
        assert_eq!(identify_ngon(&decagon, &one, 64), Some(10));
        assert_eq!(identify_ngon(&t.ratio(7, 3), &one, 64), None);
    }

    #[test]
    fn op_counts_match_the_bundled_scripts() {
        let paper = op_count(&build_paper_scene());
        assert_eq!(paper, OpCount { circles_drawn: 10, lines_drawn: 4, points_marked: 15 });
        let variant = op_count(&build_euclid_variant());
        assert_eq!(variant, OpCount { circles_drawn: 11, lines_drawn: 4, points_marked: 16 });
        assert_eq!(variant.circles_drawn, paper.circles_drawn + 1);

        let empty = interpret(&parse("").unwrap(), &Tower::new()).unwrap();
        assert_eq!(op_count(&empty), OpCount { circles_drawn: 0, lines_drawn: 0, points_marked: 0 });
    }

    #[test]
    fn variant_pentadecagon_chord_is_exact() {
        let scene = build_euclid_variant();
        let r = scene.point("R").unwrap();
        let i = scene.point("I").unwrap();
        let radius_sq = scene.point("O").unwrap().dist_sq(scene.point("A").unwrap());
        assert_eq!(r.dist_sq(i), chord_sq(15, &radius_sq).unwrap());
        let main_circle = scene.object("X").unwrap().as_circle().unwrap();
        assert!(main_circle.contains(r));
    }

    #[test]
    fn scaling_by_three_preserves_the_table() {
        let script = parse(PAPER_PENTADECAGON_GEO).unwrap();
        let scaled = scale_script(&script, &BigRational::from_integer(BigInt::from(3)));
        let scene = interpret(&scaled, &Tower::new()).unwrap();
        let t = scene.tower().clone();
        let a = scene.point("A").unwrap();
        assert_eq!(a.x, t.integer(3));
        let report = verify_table(&scene).unwrap();
        assert!(report.overall);
    }

    #[test]
    fn missing_points_are_reported_by_name() {
        let empty = interpret(&parse("").unwrap(), &Tower::new()).unwrap();
        let err = verify_table(&empty).unwrap_err();
        assert_eq!(err, VerifyError::UnknownPoint("O".to_string()));
    }
}
