//! quflow: a desk-scale framework that solves power-system linear systems
//! with a simulated HHL quantum algorithm.
//!
//! The pipeline mirrors a hybrid classical/quantum workflow end to end:
//!
//! 1. [`powerflow`] parses MATPOWER-style case files, assembles the bus
//!    admittance matrix, and exposes the per-iteration linear systems of
//!    Newton-Raphson and fast-decoupled AC power flow.
//! 2. [`prep`] conditions a linear system for HHL: Gauss-Seidel
//!    preconditioning, power-of-two expansion, Hermitization, and right-hand
//!    side normalization, with all bookkeeping needed to undo the
//!    conditioning on the solution.
//! 3. [`hhl`] synthesizes the HHL circuit (amplitude-encoding state
//!    preparation, quantum phase estimation, eigenvalue-inversion rotation,
//!    inverse QPE) and estimates the qubit budget.
//! 4. [`sim`] executes circuits on a dense statevector engine with
//!    specialized per-gate kernels, and [`fusion`] shrinks circuits first by
//!    merging applicable gates.
//! 5. [`report`] collects sizes, condition numbers, qubit counts, timings,
//!    and solution errors for side-by-side comparison with classical solves.
//!
//! All numeric code is generic over the [`scalar::Real`] scalar; the aliases
//! below pin the default `f64` instantiation used by the CLI and tests.

pub mod circuit;
pub mod fusion;
pub mod hhl;
pub mod linalg;
pub mod mmio;
pub mod multiplex;
pub mod powerflow;
pub mod prep;
pub mod report;
pub mod scalar;
pub mod sim;
pub mod transpile;

pub use scalar::{Real, C};

// T0 doc
// T0 pub type Circuit = circuit::Circuit<f64>;
// T0 pub type Gate = circuit::Gate<f64>;
// T0 pub type StateVector = sim::StateVector<f64>;
// T0 pub type ResourcePlan = hhl::ResourcePlan<f64>;
// T0 pub type HhlSolution = hhl::HhlSolution<f64>;
// T0 pub type PreparedSystem = prep::PreparedSystem<f64>;
// T0 pub type PowerFlowCase = powerflow::PowerFlowCase<f64>;
// T0 pub type LinearStep = powerflow::LinearStep<f64>;

// T0 doc2
// T0 pub type Circuit32 = circuit::Circuit<f32>;
// T0 pub type StateVector32 = sim::StateVector<f32>;
