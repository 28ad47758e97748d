//! Closed-form antiderivatives of z^n·Ai², z^n·Ai·Bi and z^n·Bi², n = 0, 1, 2.

use super::airy::{airy_eval, AiryEval};
use crate::Result;

/// The nine antiderivative identities, indexed as I1..I9.
///
/// | kind | integrand  |
/// |------|------------|
/// | I1   | Ai²        |
/// | I2   | Bi²        |
/// | I3   | Ai·Bi      |
/// | I4   | z·Ai²      |
/// | I5   | z·Ai·Bi    |
/// | I6   | z·Bi²      |
/// | I7   | z²·Ai²     |
/// | I8   | z²·Ai·Bi   |
/// | I9   | z²·Bi²     |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AntiderivKind {
    I1,
    I2,
    I3,
    I4,
    I5,
    I6,
    I7,
    I8,
    I9,
}

impl AntiderivKind {
    pub const ALL: [AntiderivKind; 9] = [
        AntiderivKind::I1,
        AntiderivKind::I2,
        AntiderivKind::I3,
        AntiderivKind::I4,
        AntiderivKind::I5,
        AntiderivKind::I6,
        AntiderivKind::I7,
        AntiderivKind::I8,
        AntiderivKind::I9,
    ];

    /// The integrand at `z`, given the Airy values there.
    pub fn integrand(self, z: f64, e: &AiryEval) -> f64 {
        use AntiderivKind::*;
        let (ai, bi) = (e.ai, e.bi);
        match self {
            I1 => ai * ai,
            I2 => bi * bi,
            I3 => ai * bi,
            I4 => z * ai * ai,
            I5 => z * ai * bi,
            I6 => z * bi * bi,
            I7 => z * z * ai * ai,
            I8 => z * z * ai * bi,
            I9 => z * z * bi * bi,
        }
    }

    /// The antiderivative at `z`, given the Airy values there.
    pub fn value_with(self, z: f64, e: &AiryEval) -> f64 {
        use AntiderivKind::*;
        let (ai, bi, aip, bip) = (e.ai, e.bi, e.ai_prime, e.bi_prime);
        let z2 = z * z;
        match self {
            I1 => z * ai * ai - aip * aip,
            I2 => z * bi * bi - bip * bip,
            I3 => z * ai * bi - aip * bip,
            I4 => (2.0 * z2 * ai * ai - 2.0 * z * aip * aip + 2.0 * ai * aip) / 6.0,
            I5 => (2.0 * z2 * ai * bi + ai * bip + aip * bi - 2.0 * z * aip * bip) / 6.0,
            I6 => (2.0 * z2 * bi * bi - 2.0 * z * bip * bip + 2.0 * bi * bip) / 6.0,
            I7 => ((z2 * z - 1.0) * ai * ai - z2 * aip * aip + 2.0 * z * ai * aip) / 5.0,
            I8 => {
                (ai * ((z2 * z - 1.0) * bi + z * bip) + z * aip * (bi - z * bip)) / 5.0
            }
            I9 => ((z2 * z - 1.0) * bi * bi - z2 * bip * bip + 2.0 * z * bi * bip) / 5.0,
        }
    }
}

/// Evaluates the antiderivative of `kind` at `z`.
pub fn airy_antideriv(kind: AntiderivKind, z: f64) -> Result<f64> {
    let e = airy_eval(z)?;
    Ok(kind.value_with(z, &e))
}
