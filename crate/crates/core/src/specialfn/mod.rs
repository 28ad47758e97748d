//! Airy functions and the quantities built directly on them.

mod airy;
mod antideriv;
mod zeros;

pub use airy::{
    airy_eval, airy_osc_approx, AiryEval, MAX_NEGATIVE_ARG, MAX_POSITIVE_ARG, SERIES_RADIUS,
};
pub use antideriv::{airy_antideriv, AntiderivKind};
pub use zeros::{ai_negative_zeros, ai_zero_asymptotic};
