//! Stochastic dynamics of a two-level system coupled to a classical noise bath.
//!
//! The crate simulates a qubit whose level populations and coherence are driven
//! by a complex white-noise field. It provides:
//!
//! - [`density`]: the 2x2 density matrix, its angle parametrization
//!   `(theta, phi, r)`, the conserved mixing parameter `alpha`, and the
//!   closed-form von Neumann entropy `S(alpha)`.
//! - [`dynamics`]: trajectory integrators (exact per-step unitary propagation,
//!   the full three-variable Langevin system in Ito and Stratonovich readings,
//!   and the reduced two-variable Ito system) plus a deterministic, seedable
//!   ensemble runner.
//! - [`fpe`]: grid and spectral solvers for the associated Fokker-Planck
//!   equation on `(theta, phi)`, in two operator conventions that are kept
//!   deliberately distinct (see [`fpe::OperatorMode`]).
//! - [`observables`]: histogram density estimates, averaged density matrices,
//!   quenched vs. annealed entropy, and exponential decay-rate fits.
//! - [`twospin`]: two qubits driven by the same (or independent) noise,
//!   with correlation, extensivity, and entanglement diagnostics.
//! - [`config`] / [`validate`]: flat-text experiment configuration and the
//!   cross-validation suite wired into the `spinbath validate` subcommand.
//!
//! Everything downstream of a fixed seed is bit-reproducible regardless of
//! worker count; see [`rng`] for the counter-based noise streams that make
//! that hold.

pub mod config;
pub mod density;
pub mod dynamics;
pub mod fpe;
pub mod mat2;
pub mod observables;
pub mod output;
pub mod rng;
pub mod twospin;
pub mod validate;

pub use density::{AngleState, DensityMatrix, MixingParameter};
pub use dynamics::{BathParameters, Scheme, TrajectoryEnsemble};
pub use fpe::{GridField, GridSpec, OperatorMode};

/// Version string embedded in every output-file header.
pub const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");
