//! Construction-script language: a small fixed-grammar DSL for
//! straightedge-and-compass scenes, with a parser, static checks, an
//! exact interpreter, and a canonical formatter.
//!
//! A script is a sequence of statements, one per line by convention
//! (the grammar itself is whitespace-insensitive; `#` starts a comment):
//!
//! ```text
//! point  P = (x, y)                    x, y rational: `-3`, `1/2`
//! line   l = line(P, Q)
//! circle c = through(C, P)             center C, passing through P
//! circle c = radius(C; P, Q)           center C, radius |PQ|
//! point  R = intersect(a, b) SELECTOR  a, b lines or circles
//! assert PREDICATE
//! ```
//!
//! Selectors pick one point out of an intersection: `[0]` / `[1]`
//! (construction order), `nearest P` / `farthest P` (distance to a
//! point, ties are an error), `leftof A B` / `rightof A B` (strict
//! side of the directed line A->B, exactly one candidate must match).
//!
//! Predicates: `dist2(P, Q) == EXPR` with `EXPR` a radical expression
//! built from integers, `+ - * /`, and `sqrt(...)`; `on(P, obj)`;
//! `collinear(P, Q, R)`. All evaluation is exact.

mod ast;
mod interp;
mod lexer;
mod parser;

pub use ast::{format_script, Predicate, RadicalExpr, Script, Selector, Statement, StatementKind};
pub use interp::{format_scene, interpret, Scene, SceneObject, Step, StepKind};
pub use parser::parse;

use alloc::string::String;
use core::fmt;

use crate::euclidplane::GeomError;
use crate::exactfield::FieldError;

/// The kind of object a script name is bound to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NameKind {
    Point,
    Line,
    Circle,
}

impl fmt::Display for NameKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NameKind::Point => f.write_str("point"),
            NameKind::Line => f.write_str("line"),
            NameKind::Circle => f.write_str("circle"),
        }
    }
}

/// An error in a script, located at the statement (or token) that
/// caused it. Lines and columns are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScriptError {
    pub line: u32,
    pub column: u32,
    pub kind: ScriptErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScriptErrorKind {
    /// Tokenization or grammar violation.
    Syntax(String),
    /// A name was bound twice.
    DuplicateBinding(String),
    /// A name was used before any statement bound it.
    UndefinedName(String),
    /// A name of the wrong kind was used (e.g. a circle where a point
    /// is required). `expected` is a phrase like "a point" or "a line
    /// or a circle".
    WrongKind { name: String, expected: String, actual: NameKind },
    /// An `intersect` produced no points.
    EmptyIntersection,
    /// A selector could not pick a unique point; the message says why.
    SelectorFailed(String),
    /// An `assert` evaluated to false; the message shows both sides.
    AssertionFailed(String),
    Geometry(GeomError),
    Field(FieldError),
}

impl fmt::Display for ScriptError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.kind)
    }
}

impl fmt::Display for ScriptErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScriptErrorKind::Syntax(msg) => write!(f, "syntax error: {msg}"),
            ScriptErrorKind::DuplicateBinding(name) => {
                write!(f, "name '{name}' is already bound")
            }
            ScriptErrorKind::UndefinedName(name) => write!(f, "name '{name}' is not defined"),
            ScriptErrorKind::WrongKind { name, expected, actual } => {
                write!(f, "'{name}' is a {actual}, expected {expected}")
            }
            ScriptErrorKind::EmptyIntersection => f.write_str("the objects do not intersect"),
            ScriptErrorKind::SelectorFailed(msg) => write!(f, "selector failed: {msg}"),
            ScriptErrorKind::AssertionFailed(msg) => write!(f, "assertion failed: {msg}"),
            ScriptErrorKind::Geometry(e) => write!(f, "{e}"),
            ScriptErrorKind::Field(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ScriptError {
    fn source(&self) -> Option<&(dyn core::error::Error + 'static)> {
        match &self.kind {
            ScriptErrorKind::Geometry(e) => Some(e),
            ScriptErrorKind::Field(e) => Some(e),
            _ => None,
        }
    }
}
