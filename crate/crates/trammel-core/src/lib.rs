//! Exact compass-and-straightedge construction engine.
//!
//! Everything in this crate is exact: numbers are elements of towers of real
//! quadratic extensions over the rationals, geometric predicates decide with
//! zero tolerance, and the bundled construction scenes are verified by exact
//! equality of squared lengths.
//!
//! Module map:
//!
//! - [`exactfield`]: constructible numbers (iterated real square roots over
//!   the rationals) with exact arithmetic, sign determination and decimal
//!   enclosures.
//! - [`euclidplane`]: points, lines and circles over constructible
//!   coordinates, with exact intersection operations.
//! - [`exactangle`]: exact (cos, sin) pairs for rational-turn angles, the
//!   polygon constructibility test, and inscribed chord lengths.
//! - [`geoscript`]: the `.geo` construction-script language — parser, static
//!   checks and interpreter producing a [`geoscript::Scene`].
//! - [`polyverify`]: the bundled pentadecagon scene, the edge-claim table and
//!   its exact verification, plus construction op-counting.
//!
//! The crate is `no_std` (with `alloc`); IO, CLI and rendering live in the
//! companion `trammel-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod decimal;
pub mod euclidplane;
pub mod exactangle;
pub mod exactfield;
pub mod geoscript;
pub mod polyverify;

pub use exactfield::{ConstructibleNumber, FieldError, RatInterval, Tower};
