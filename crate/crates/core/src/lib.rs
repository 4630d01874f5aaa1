//! # clonebound
//!
//! A numerical laboratory for state-dependent `N -> L` cloning of a
//! two-state set `{|phi>, |psi>}` with overlap modulus `z = |<phi|psi>|`.
//!
//! The crate is organised bottom-up:
//!
//! - [`hilbert`]: dense complex vectors and operators, tensor products,
//!   partial traces, PSD square roots and seedable random sampling.
//! - [`geometry`]: the angle `arccos |<a|b>|` between pure states, Uhlmann
//!   fidelity and the probability-deviation inequalities built on them.
//! - [`cloner`]: ideal outputs, error sizes `X^(s)`, absolute and relative
//!   copying errors, the symmetric and optimal asymmetric cloners, machine
//!   ensembles and a brute-force search over cloners.
//! - [`bounds`]: closed-form lower bounds `F(z|N,L)`, the absolute-error
//!   bound, the symmetric cloner's relative error and `f(z|N,L)`.
//! - [`harness`]: CSV sweeps, single-point cloner reports and randomized
//!   verification suites, as used by the `clonebound` binary.
//!
//! See the `examples/` directory of this crate for one runnable program per
//! capability.

pub mod bounds;
pub mod cloner;
pub mod error;
pub mod geometry;
pub mod harness;
pub mod hilbert;

pub use error::{Error, Result};
