//! Library side of the `spectra` command-line tool: input parsing, audit
//! suites and report rendering.

pub mod error;
pub mod input;
pub mod render;
pub mod suites;

pub use error::CliError;
pub use input::{parse_object, ParsedObject};
pub use suites::{run_suite, SuiteOutcome};
