//! File formats, reports and the command line for `hopfx-core`.

pub mod cli;
pub mod output;
pub mod schema;
