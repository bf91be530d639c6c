//! Command-line front end.
//!
//! Exit codes: 0 success, 1 input error, 2 numerical or certification
//! failure. Every float in machine-readable output carries 17 significant
//! digits.

mod commands;
mod format;
mod geometry;
mod spec;

pub use commands::{
    batch_report, cmd_batch, cmd_geometry, cmd_measures, cmd_sample, cmd_verify, run, Cli, Command, GeometryFormat,
    Outcome, EXIT_INPUT, EXIT_NUMERIC, EXIT_OK,
};
pub use format::{sig17, Num};
pub use geometry::{FacePlane, GeometryBundle, LabeledPoint, CSV_HEADER};
pub use spec::StateSpec;
