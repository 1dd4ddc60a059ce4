//! Library half of the `trammel` binary: the SVG renderer lives here
//! so it can be exercised directly by tests.

pub mod svg;
