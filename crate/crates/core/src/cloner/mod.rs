//! State-dependent `N -> L` cloners of a two-state set.
//!
//! No cloning unitary is ever built. A cloner is its pair of outputs
//! `V^(phi)`, `V^(psi)`, usually stored in [`PlaneVector`] coordinates of the
//! plane `span{|phi^L>, |psi^L>}`; [`canonical_plane`] gives the frame used
//! to expand them into the full `d^L`-dimensional space when needed.
//!
//! The input pair is always re-phased so that `<phi|psi> = z >= 0`, which
//! makes every in-plane construction a real rotation.

mod deviation;
mod ensemble;
mod machines;
mod plane;
mod search;
mod task;

pub use deviation::measurement_deviation_checks;
pub use ensemble::{mixed_machine_report, MachineEnsemble};
pub use machines::{
    asymmetric_cloner, error_report, error_report_full, split_cloner, symmetric_cloner, ClonerKind,
    ClonerResult, ErrorReport,
};
pub use plane::{
    canonical_plane, decompose_output, ideal_plane_vector, Decomposition, PlaneFrame, PlaneVector,
};
pub use search::{
    brute_force_min_re, brute_force_min_re_with, perturb_cloner, sample_gram_preserving_cloner,
    BruteForceConfig, BruteForceResult,
};
pub use task::{ideal_angle_floor, CloneTask, PairMember, PreparedPair};
