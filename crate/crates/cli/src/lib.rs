//! Command-line front end for `fourspace`: reads matrices from CSV or JSON,
//! runs one library routine and emits a report.
//!
//! Exit status: 0 on success, 1 on a domain error (reported in the output),
//! 2 on a usage error.

pub mod commands;
pub mod input;
pub mod report;

pub use commands::{invoke, run_command, Invocation, UsageError};
pub use input::{parse_matrix, parse_vector, Format, InputError};
pub use report::{emit_report, EmitError, ErrorInfo, Field, Report};
