//! Exact interpreter. Executes a parsed script statement by statement
//! against the plane, producing a [`Scene`]: the named objects in
//! definition order plus a step log. Every intersection and predicate
//! is evaluated exactly; nothing in here approximates.
//!
//! Mixed line/circle intersections are always parameterized by the
//! line, whichever argument position it appears in, so
//! `intersect(k, X)` and `intersect(X, k)` list candidates in the same
//! order. Circle/circle intersections keep the argument order of the
//! statement.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::euclidplane::{
    collinear, intersect_circles, intersect_line_circle, intersect_lines, orientation, Circle,
    Line, Point,
};
use crate::exactfield::{ConstructibleNumber, FieldError, Tower};

use super::ast::{Predicate, RadicalExpr, Script, Selector, Statement, StatementKind};
use super::{NameKind, ScriptError, ScriptErrorKind};

/// A named object produced by a statement. Lines and circles remember
/// the point names they were built from, so a scene can be described
/// in the same vocabulary as its script.
#[derive(Clone, Debug)]
pub enum SceneObject {
    Point(Point),
    Line { geom: Line, p: String, q: String },
    CircleThrough { geom: Circle, center: String, on: String },
    CircleRadius { geom: Circle, center: String, from: String, to: String },
}

impl SceneObject {
    pub fn kind(&self) -> NameKind {
        match self {
            SceneObject::Point(_) => NameKind::Point,
            SceneObject::Line { .. } => NameKind::Line,
            SceneObject::CircleThrough { .. } | SceneObject::CircleRadius { .. } => {
                NameKind::Circle
            }
        }
    }

    pub fn as_point(&self) -> Option<&Point> {
        match self {
            SceneObject::Point(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_line(&self) -> Option<&Line> {
        match self {
            SceneObject::Line { geom, .. } => Some(geom),
            _ => None,
        }
    }

    pub fn as_circle(&self) -> Option<&Circle> {
        match self {
            SceneObject::CircleThrough { geom, .. } | SceneObject::CircleRadius { geom, .. } => {
                Some(geom)
            }
            _ => None,
        }
    }
}

/// One executed statement, for replaying what a script did.
#[derive(Clone, Debug)]
pub struct Step {
    pub line: u32,
    pub kind: StepKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepKind {
    FreePoint { name: String },
    LineDrawn { name: String },
    CircleDrawn { name: String },
    IntersectionPoint { name: String },
    Assertion { description: String },
}

/// The result of interpreting a script: named objects in definition
/// order, plus the step log. All coordinates live in one [`Tower`].
#[derive(Clone, Debug)]
pub struct Scene {
    tower: Tower,
    order: Vec<String>,
    objects: BTreeMap<String, SceneObject>,
    steps: Vec<Step>,
}

impl Scene {
    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    /// Object names in definition order.
    pub fn names(&self) -> &[String] {
        &self.order
    }

    pub fn object(&self, name: &str) -> Option<&SceneObject> {
        self.objects.get(name)
    }

    /// The named point, if `name` is bound to one.
    pub fn point(&self, name: &str) -> Option<&Point> {
        self.objects.get(name).and_then(SceneObject::as_point)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    fn point_named(&self, name: &str, stmt: &Statement) -> Result<&Point, ScriptError> {
        match self.objects.get(name) {
            Some(SceneObject::Point(p)) => Ok(p),
            Some(other) => Err(err_at(
                stmt,
                ScriptErrorKind::WrongKind {
                    name: name.to_string(),
                    expected: "a point".to_string(),
                    actual: other.kind(),
                },
            )),
            None => Err(err_at(stmt, ScriptErrorKind::UndefinedName(name.to_string()))),
        }
    }

    fn object_named(&self, name: &str, stmt: &Statement) -> Result<ObjRef<'_>, ScriptError> {
        match self.objects.get(name) {
            Some(SceneObject::Line { geom, .. }) => Ok(ObjRef::Line(geom)),
            Some(SceneObject::CircleThrough { geom, .. })
            | Some(SceneObject::CircleRadius { geom, .. }) => Ok(ObjRef::Circle(geom)),
            Some(other) => Err(err_at(
                stmt,
                ScriptErrorKind::WrongKind {
                    name: name.to_string(),
                    expected: "a line or a circle".to_string(),
                    actual: other.kind(),
                },
            )),
            None => Err(err_at(stmt, ScriptErrorKind::UndefinedName(name.to_string()))),
        }
    }

    fn insert(
        &mut self,
        name: &str,
        object: SceneObject,
        step: StepKind,
        stmt: &Statement,
    ) -> Result<(), ScriptError> {
        if self.objects.contains_key(name) {
            return Err(err_at(stmt, ScriptErrorKind::DuplicateBinding(name.to_string())));
        }
        self.order.push(name.to_string());
        self.objects.insert(name.to_string(), object);
        self.steps.push(Step { line: stmt.line, kind: step });
        Ok(())
    }
}

enum ObjRef<'a> {
    Line(&'a Line),
    Circle(&'a Circle),
}

fn err_at(stmt: &Statement, kind: ScriptErrorKind) -> ScriptError {
    ScriptError { line: stmt.line, column: stmt.column, kind }
}

/// Runs a script in the given tower. Statements execute in order;
/// the first failure aborts with its position.
pub fn interpret(script: &Script, tower: &Tower) -> Result<Scene, ScriptError> {
    let mut scene = Scene {
        tower: tower.clone(),
        order: Vec::new(),
        objects: BTreeMap::new(),
        steps: Vec::new(),
    };
    for stmt in &script.statements {
        execute(&mut scene, stmt)?;
    }
    Ok(scene)
}

fn execute(scene: &mut Scene, stmt: &Statement) -> Result<(), ScriptError> {
    match &stmt.kind {
        StatementKind::FreePoint { name, x, y } => {
            let point =
                Point::new(scene.tower.constant(x.clone()), scene.tower.constant(y.clone()));
            scene.insert(
                name,
                SceneObject::Point(point),
                StepKind::FreePoint { name: name.clone() },
                stmt,
            )
        }
        StatementKind::LineThrough { name, p, q } => {
            let pp = scene.point_named(p, stmt)?.clone();
            let qq = scene.point_named(q, stmt)?.clone();
            let geom = Line::through(pp, qq)
                .map_err(|e| err_at(stmt, ScriptErrorKind::Geometry(e)))?;
            scene.insert(
                name,
                SceneObject::Line { geom, p: p.clone(), q: q.clone() },
                StepKind::LineDrawn { name: name.clone() },
                stmt,
            )
        }
        StatementKind::CircleThrough { name, center, on } => {
            let c = scene.point_named(center, stmt)?.clone();
            let on_pt = scene.point_named(on, stmt)?.clone();
            let geom = Circle::center_through(c, &on_pt)
                .map_err(|e| err_at(stmt, ScriptErrorKind::Geometry(e)))?;
            scene.insert(
                name,
                SceneObject::CircleThrough { geom, center: center.clone(), on: on.clone() },
                StepKind::CircleDrawn { name: name.clone() },
                stmt,
            )
        }
        StatementKind::CircleRadius { name, center, from, to } => {
            let c = scene.point_named(center, stmt)?.clone();
            let f = scene.point_named(from, stmt)?.clone();
            let t = scene.point_named(to, stmt)?.clone();
            let geom = Circle::center_radius_from(c, &f, &t)
                .map_err(|e| err_at(stmt, ScriptErrorKind::Geometry(e)))?;
            scene.insert(
                name,
                SceneObject::CircleRadius {
                    geom,
                    center: center.clone(),
                    from: from.clone(),
                    to: to.clone(),
                },
                StepKind::CircleDrawn { name: name.clone() },
                stmt,
            )
        }
        StatementKind::Intersect { name, a, b, selector } => {
            let point = {
                let candidates = match (scene.object_named(a, stmt)?, scene.object_named(b, stmt)?)
                {
                    (ObjRef::Line(la), ObjRef::Line(lb)) => intersect_lines(la, lb)
                        .map_err(|e| err_at(stmt, ScriptErrorKind::Geometry(e)))?
                        .into_iter()
                        .collect::<Vec<_>>(),
                    (ObjRef::Line(l), ObjRef::Circle(c))
                    | (ObjRef::Circle(c), ObjRef::Line(l)) => intersect_line_circle(l, c),
                    (ObjRef::Circle(ca), ObjRef::Circle(cb)) => intersect_circles(ca, cb)
                        .map_err(|e| err_at(stmt, ScriptErrorKind::Geometry(e)))?,
                };
                if candidates.is_empty() {
                    return Err(err_at(stmt, ScriptErrorKind::EmptyIntersection));
                }
                select(scene, selector, candidates, stmt)?
            };
            scene.insert(
                name,
                SceneObject::Point(point),
                StepKind::IntersectionPoint { name: name.clone() },
                stmt,
            )
        }
        StatementKind::Assert { predicate } => {
            check_predicate(scene, predicate, stmt)?;
            scene.steps.push(Step {
                line: stmt.line,
                kind: StepKind::Assertion { description: predicate.to_string() },
            });
            Ok(())
        }
    }
}

fn select(
    scene: &Scene,
    selector: &Selector,
    mut candidates: Vec<Point>,
    stmt: &Statement,
) -> Result<Point, ScriptError> {
    match selector {
        Selector::Index(i) => {
            let i = *i as usize;
            if i < candidates.len() {
                Ok(candidates.remove(i))
            } else {
                Err(err_at(
                    stmt,
                    ScriptErrorKind::SelectorFailed(format!(
                        "index {i} is out of range for {} intersection point(s)",
                        candidates.len()
                    )),
                ))
            }
        }
        Selector::Nearest(anchor) | Selector::Farthest(anchor) => {
            let anchor_pt = scene.point_named(anchor, stmt)?;
            if candidates.len() == 1 {
                return Ok(candidates.remove(0));
            }
            let d0 = candidates[0].dist_sq(anchor_pt);
            let d1 = candidates[1].dist_sq(anchor_pt);
            if d0 == d1 {
                return Err(err_at(
                    stmt,
                    ScriptErrorKind::SelectorFailed(format!(
                        "both intersection points are exactly equidistant from '{anchor}'"
                    )),
                ));
            }
            let nearer_first = d0 < d1;
            let take_first = match selector {
                Selector::Nearest(_) => nearer_first,
                _ => !nearer_first,
            };
            Ok(candidates.remove(if take_first { 0 } else { 1 }))
        }
        Selector::LeftOf(a, b) | Selector::RightOf(a, b) => {
            let (want, side) = match selector {
                Selector::LeftOf(_, _) => (1, "left"),
                _ => (-1, "right"),
            };
            let pa = scene.point_named(a, stmt)?;
            let pb = scene.point_named(b, stmt)?;
            let matches: Vec<usize> = candidates
                .iter()
                .enumerate()
                .filter(|(_, cand)| orientation(pa, pb, cand) == want)
                .map(|(i, _)| i)
                .collect();
            match matches.as_slice() {
                [only] => Ok(candidates.remove(*only)),
                [] => Err(err_at(
                    stmt,
                    ScriptErrorKind::SelectorFailed(format!(
                        "no intersection point lies strictly {side} of the directed line {a} {b}"
                    )),
                )),
                _ => Err(err_at(
                    stmt,
                    ScriptErrorKind::SelectorFailed(format!(
                        "both intersection points lie strictly {side} of the directed line {a} {b}"
                    )),
                )),
            }
        }
    }
}

fn check_predicate(
    scene: &Scene,
    predicate: &Predicate,
    stmt: &Statement,
) -> Result<(), ScriptError> {
    match predicate {
        Predicate::DistSqEquals { p, q, expr } => {
            let lhs = scene.point_named(p, stmt)?.dist_sq(scene.point_named(q, stmt)?);
            let rhs = eval_radical(&scene.tower, expr)
                .map_err(|e| err_at(stmt, ScriptErrorKind::Field(e)))?;
            if lhs == rhs {
                Ok(())
            } else {
                Err(err_at(
                    stmt,
                    ScriptErrorKind::AssertionFailed(format!(
                        "{predicate}: left side is {lhs}, right side is {rhs}"
                    )),
                ))
            }
        }
        Predicate::On { point, object } => {
            let p = scene.point_named(point, stmt)?;
            let holds = match scene.object_named(object, stmt)? {
                ObjRef::Line(l) => l.contains(p),
                ObjRef::Circle(c) => c.contains(p),
            };
            if holds {
                Ok(())
            } else {
                Err(err_at(
                    stmt,
                    ScriptErrorKind::AssertionFailed(format!(
                        "{predicate}: the point does not lie on the object"
                    )),
                ))
            }
        }
        Predicate::Collinear { a, b, c } => {
            let pa = scene.point_named(a, stmt)?;
            let pb = scene.point_named(b, stmt)?;
            let pc = scene.point_named(c, stmt)?;
            if collinear(pa, pb, pc) {
                Ok(())
            } else {
                Err(err_at(
                    stmt,
                    ScriptErrorKind::AssertionFailed(format!(
                        "{predicate}: the points are not collinear"
                    )),
                ))
            }
        }
    }
}

fn eval_radical(tower: &Tower, expr: &RadicalExpr) -> Result<ConstructibleNumber, FieldError> {
    match expr {
        RadicalExpr::Rational(r) => Ok(tower.constant(r.clone())),
        RadicalExpr::Sqrt(inner) => eval_radical(tower, inner)?.sqrt(),
        RadicalExpr::Neg(inner) => Ok(-eval_radical(tower, inner)?),
        RadicalExpr::Add(a, b) => Ok(eval_radical(tower, a)? + eval_radical(tower, b)?),
        RadicalExpr::Sub(a, b) => Ok(eval_radical(tower, a)? - eval_radical(tower, b)?),
        RadicalExpr::Mul(a, b) => Ok(eval_radical(tower, a)? * eval_radical(tower, b)?),
        RadicalExpr::Div(a, b) => eval_radical(tower, a)?.checked_div(&eval_radical(tower, b)?),
    }
}

/// Renders the scene as one line per named object: the exact radical
/// form of every coordinate, followed by a decimal approximation
/// (interval midpoint at `precision_bits`) when a value is irrational.
pub fn format_scene(scene: &Scene, precision_bits: u32) -> String {
    let mut out = String::new();
    for name in scene.names() {
        let object = scene.object(name).expect("names and objects stay in sync");
        match object {
            SceneObject::Point(pt) => {
                let _ = write!(out, "{name} = ({}, {})", pt.x, pt.y);
                if pt.x.as_rational().is_none() || pt.y.as_rational().is_none() {
                    let _ = write!(
                        out,
                        " ~ ({}, {})",
                        pt.x.to_decimal_string(precision_bits),
                        pt.y.to_decimal_string(precision_bits)
                    );
                }
            }
            SceneObject::Line { p, q, .. } => {
                let _ = write!(out, "{name} = line({p}, {q})");
            }
            SceneObject::CircleThrough { geom, center, on } => {
                let _ = write!(out, "{name} = through({center}, {on}), r2 = {}", geom.radius_sq);
                if geom.radius_sq.as_rational().is_none() {
                    let _ = write!(out, " ~ {}", geom.radius_sq.to_decimal_string(precision_bits));
                }
            }
            SceneObject::CircleRadius { geom, center, from, to } => {
                let _ = write!(
                    out,
                    "{name} = radius({center}; {from}, {to}), r2 = {}",
                    geom.radius_sq
                );
                if geom.radius_sq.as_rational().is_none() {
                    let _ = write!(out, " ~ {}", geom.radius_sq.to_decimal_string(precision_bits));
                }
            }
        }
        out.push('\n');
    }
    out
}
