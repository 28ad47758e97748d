//! Classical and quantum mechanics of a particle in a square box under a
//! constant gravitational field.
//!
//! The crate is split into four layers:
//!
//! * [`numerics`]: adaptive quadrature, bracketing root search and a small
//!   double-double type used by the Airy kernel.
//! * [`specialfn`]: Airy functions, their negative zeros, oscillatory
//!   approximants and closed-form antiderivatives of Airy products.
//! * [`classical`]: flight segments, event-driven simulation, periodic-orbit
//!   classification and the closed-form probability density and moments.
//! * [`quantum`]: infinite-well x modes, Airy y modes in the low- and
//!   high-energy regimes, the exact two-wall spectrum and position moments.
//!
//! The classical layer and the numerical helpers are generic over
//! [`Scalar`] (`f32` or `f64`); the Airy kernel and everything built on it
//! works in `f64`, which is what its accuracy targets are stated in.

pub mod classical;
pub mod error;
pub mod numerics;
pub mod quantum;
pub mod scalar;
pub mod specialfn;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Launch parameters in double precision.
pub type LaunchSpec = classical::LaunchSpec<f64>;
/// Launch parameters in single precision.
pub type LaunchSpec32 = classical::LaunchSpec<f32>;
/// Simulated trajectory in double precision.
pub type Trajectory = classical::Trajectory<f64>;
/// One flight segment in double precision.
pub type FlightSegment = classical::FlightSegment<f64>;
/// Classical y moments in double precision.
pub type ClassicalMomentsY = classical::ClassicalMomentsY<f64>;
/// Classical y moments in single precision.
pub type ClassicalMomentsY32 = classical::ClassicalMomentsY<f32>;
/// Classical x moments in double precision.
pub type ClassicalMomentsX = classical::ClassicalMomentsX<f64>;

pub use specialfn::{AiryEval, AntiderivKind};
pub use quantum::{ModeX, ModeY, MomentsReport, QuantumConfig};
