//! Script AST and its canonical text form.
//!
//! The canonical formatter is the inverse of the parser: formatting a script
//! and re-parsing it yields a structurally identical AST. Binary expressions
//! are fully parenthesized in canonical form so no precedence knowledge is
//! needed to read them back.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Script {
    pub statements: Vec<Statement>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Statement {
    pub kind: StatementKind,
    pub line: u32,
    pub column: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StatementKind {
    FreePoint { name: String, x: BigRational, y: BigRational },
    LineThrough { name: String, p: String, q: String },
    CircleThrough { name: String, center: String, on: String },
    CircleRadius { name: String, center: String, from: String, to: String },
    Intersect { name: String, a: String, b: String, selector: Selector },
    Assert { predicate: Predicate },
}

impl StatementKind {
    /// The name this statement binds, if any.
    pub fn binds(&self) -> Option<&str> {
        match self {
            StatementKind::FreePoint { name, .. }
            | StatementKind::LineThrough { name, .. }
            | StatementKind::CircleThrough { name, .. }
            | StatementKind::CircleRadius { name, .. }
            | StatementKind::Intersect { name, .. } => Some(name),
            StatementKind::Assert { .. } => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selector {
    Index(u8),
    Nearest(String),
    Farthest(String),
    LeftOf(String, String),
    RightOf(String, String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Predicate {
    DistSqEquals { p: String, q: String, expr: RadicalExpr },
    On { point: String, object: String },
    Collinear { a: String, b: String, c: String },
}

/// Right-hand side of a `dist2` assertion: rationals combined with the four
/// field operations and square roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RadicalExpr {
    Rational(BigRational),
    Sqrt(Box<RadicalExpr>),
    Neg(Box<RadicalExpr>),
    Add(Box<RadicalExpr>, Box<RadicalExpr>),
    Sub(Box<RadicalExpr>, Box<RadicalExpr>),
    Mul(Box<RadicalExpr>, Box<RadicalExpr>),
    Div(Box<RadicalExpr>, Box<RadicalExpr>),
}

impl fmt::Display for RadicalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RadicalExpr::Rational(q) => write!(f, "{q}"),
            RadicalExpr::Sqrt(e) => write!(f, "sqrt({e})"),
            RadicalExpr::Neg(e) => write!(f, "-{e}"),
            RadicalExpr::Add(a, b) => write!(f, "({a} + {b})"),
            RadicalExpr::Sub(a, b) => write!(f, "({a} - {b})"),
            RadicalExpr::Mul(a, b) => write!(f, "({a} * {b})"),
            RadicalExpr::Div(a, b) => write!(f, "({a} / {b})"),
        }
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selector::Index(i) => write!(f, "[{i}]"),
            Selector::Nearest(p) => write!(f, "nearest {p}"),
            Selector::Farthest(p) => write!(f, "farthest {p}"),
            Selector::LeftOf(a, b) => write!(f, "leftof {a} {b}"),
            Selector::RightOf(a, b) => write!(f, "rightof {a} {b}"),
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Predicate::DistSqEquals { p, q, expr } => write!(f, "dist2({p}, {q}) == {expr}"),
            Predicate::On { point, object } => write!(f, "on({point}, {object})"),
            Predicate::Collinear { a, b, c } => write!(f, "collinear({a}, {b}, {c})"),
        }
    }
}

impl fmt::Display for StatementKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StatementKind::FreePoint { name, x, y } => write!(f, "point {name} = ({x}, {y})"),
            StatementKind::LineThrough { name, p, q } => write!(f, "line {name} = line({p}, {q})"),
            StatementKind::CircleThrough { name, center, on } => {
                write!(f, "circle {name} = through({center}, {on})")
            }
            StatementKind::CircleRadius { name, center, from, to } => {
                write!(f, "circle {name} = radius({center}; {from}, {to})")
            }
            StatementKind::Intersect { name, a, b, selector } => {
                write!(f, "point {name} = intersect({a}, {b}) {selector}")
            }
            StatementKind::Assert { predicate } => write!(f, "assert {predicate}"),
        }
    }
}

/// Canonical source text: one statement per line, fully parenthesized
/// expressions. `parse(format_script(s))` is structurally identical to `s`.
pub fn format_script(script: &Script) -> String {
    use core::fmt::Write;
    let mut out = String::new();
    for stmt in &script.statements {
        let _ = writeln!(out, "{}", stmt.kind);
    }
    out
}
