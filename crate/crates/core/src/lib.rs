//! Receding-horizon control with monotonically increasing stage-cost weights.
//!
//! The library solves box-constrained finite-horizon optimal control problems
//! whose stage costs are scaled by the profile `(i/N)^m`, runs the resulting
//! closed loop, and numerically verifies the inequalities that make the loop
//! stable: the local control-Lyapunov decrease near the origin, the geometric
//! bound on the optimal terminal stage cost, and the per-step descent of the
//! optimal cost.
//!
//! Modules:
//! - [`dynamics`]: system abstraction, rollouts, built-in benchmark systems.
//! - [`weights`]: the weight profile, the weighted cost, and the constants
//!   (`c`, `psi`, minimal exponent) derived from it.
//! - [`solver`]: multi-start projected-gradient solver plus an exhaustive
//!   grid oracle for validation.
//! - [`mpc`]: the closed loop with shifted-profile warm starting.
//! - [`certificates`]: reachability, CLF, terminal-bound and descent checks.
//! - [`harness`]: config-file driven experiment runner behind the `mwmpc` CLI.

pub mod certificates;
pub mod dynamics;
pub mod error;
pub mod harness;
pub mod mpc;
pub mod solver;
pub mod weights;

pub use error::{Error, Result};
