//! File formats, expression parsing, SVG output and a parallel audit runner
//! on top of `nullspace-core`.

pub mod expr;
pub mod formats;
pub mod runner;
pub mod svg;
pub mod table;
