//! Front end shared by the `clonebound` binary and the examples: curve
//! sweeps to CSV, single cloner reports, and the randomized verification
//! suites.

pub mod format;
pub mod report;
pub mod sweep;
pub mod verify;

pub use format::sig9;
pub use report::{cmd_cloner, ClonerChoice, ClonerReport, ClonerRequest};
pub use sweep::{cmd_sweep, interior_maxima, run_sweep, SweepSpec, SweepTable, DEFAULT_STEPS};
pub use verify::{cmd_verify, reports_json, run_check, Check, Suite, SuiteReport, VerifySpec};
