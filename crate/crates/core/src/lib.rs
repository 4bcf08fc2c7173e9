//! Power-grid partitioning for parallel time-domain simulation, cast as QUBO.
//!
//! A MATPOWER case is turned into a simulation graph whose edges carry the
//! per-step FLOP cost of every component. The partitioning objective sums a
//! component-balance term, a weighted cut and a network-size balance term.
//! Exhaustive and annealing samplers minimize it; the evaluation module maps
//! solutions back to idle times and cut overheads.
//!
//! Numeric containers are generic over [`Scalar`] (`f32` or `f64`); the
//! aliases below fix the usual double-precision choice.

pub mod error;
pub mod evaluation;
pub mod grid_model;
pub mod metrics;
pub mod qubo;
pub mod scalar;
pub mod solvers;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub type Qubo = qubo::QuboProblem<f64>;
pub type QuboF32 = qubo::QuboProblem<f32>;
pub type Samples = solvers::SampleSet<f64>;
pub type SamplesF32 = solvers::SampleSet<f32>;
pub type PartTerms = qubo::PartTerms<f64>;
