//! Front end for `quadrangle-core`: argument handling, parallel enumeration,
//! renderers for every stage and reference-data checks.

pub mod format;
pub mod golden;
pub mod parallel;
pub mod report;
mod run;

pub use report::Format;
pub use run::{run, Command, Outcome, RunConfig};
