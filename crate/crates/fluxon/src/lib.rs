//! Numerical laboratory for two linearly coupled one-dimensional
//! Gross-Pitaevskii equations: closed-form soliton profiles, Newton
//! continuation of stationary branches, Bogoliubov-de Gennes stability
//! spectra, time evolution with soliton-core tracking, and the reduced
//! particle model for soliton interactions.
//!
//! The physics lives in a handful of modules:
//!
//! * [`grid`] / [`model`] — grids, fields, the equation of motion, observables
//! * [`ansatz`] — closed-form solutions and initial-condition constructors
//! * [`newton`] — stationary/travelling Newton solves and continuation in `k`
//! * [`bdg`] — linear-stability eigenproblem and stability sweeps
//! * [`evolve`] / [`track`] — time integration and density-dip tracking
//! * [`particle`] — the variational particle model and its frequencies
//!
//! Everything is generic over the scalar type via [`scalar::Real`]
//! (`f32` or `f64`); the `*64` aliases below fix `f64`.

pub mod ansatz;
pub mod banded;
pub mod bdg;
pub mod csvio;
pub mod error;
pub mod evolve;
pub mod grid;
pub mod model;
pub mod newton;
pub mod particle;
pub mod plot;
pub mod scalar;
pub mod track;

pub use error::{Error, Result};
pub use grid::{Grid, Stencil};
pub use model::{ModelParams, Observables, PairField};
pub use scalar::{Real, C};

/// `f64` concrete aliases.
pub type Grid64 = Grid<f64>;
pub type ModelParams64 = ModelParams<f64>;
pub type PairField64 = PairField<f64>;
pub type Observables64 = Observables<f64>;
pub type C64 = num_complex::Complex<f64>;


