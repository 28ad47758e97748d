//! Numerical building blocks: adaptive quadrature, bracketing root search and
//! double-double accumulation.

pub mod dd;
pub mod quad;
pub mod roots;

pub use dd::DoubleDouble;
pub use quad::{AdaptiveSimpson, QuadResult};
pub use roots::{bisect, sign_change_brackets};
