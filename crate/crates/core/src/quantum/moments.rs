//! Position expectation values and uncertainties of quantum modes.

use std::f64::consts::PI;

use super::config::QuantumConfig;
use super::modes::{ji_plus_unchecked, ModeY, Walls};
use crate::numerics::AdaptiveSimpson;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MomentSource {
    ClosedForm,
    Quadrature,
}

impl MomentSource {
    pub fn as_str(self) -> &'static str {
        match self {
            MomentSource::ClosedForm => "closed_form",
            MomentSource::Quadrature => "quadrature",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentsReport {
    pub mean: f64,
    pub stddev: f64,
    /// Ji₊ of the mode, 0 where it does not apply.
    pub ji_plus: f64,
    pub source: MomentSource,
    /// ∫|Y|² over [0, L]; 1 for closed forms.
    pub norm: f64,
}

/// ⟨x⟩ = L/2 and Δx = L/(2√3)·√(1 − 6/(π²n²)) for the n-th well mode.
pub fn qm_moments_x(n: u32, side: f64) -> Result<MomentsReport> {
    if n == 0 {
        return Err(Error::domain("x mode index n must be >= 1"));
    }
    let nf = n as f64;
    Ok(MomentsReport {
        mean: side / 2.0,
        stddev: side / (2.0 * 3f64.sqrt()) * (1.0 - 6.0 / (PI * PI * nf * nf)).sqrt(),
        ji_plus: 0.0,
        source: MomentSource::ClosedForm,
        norm: 1.0,
    })
}

/// Closed-form ⟨y⟩ and Δy.
///
/// Floor-only modes follow the unbounded quantum bouncer, ⟨y⟩ = 2h/3 and
/// Δy = (2√5/15)·h with h = E_y/(mg). Two-wall modes use
/// ⟨y⟩ = 2h/3 − (L/3)·Ji₊ and
/// Var y = (4/45)h² + (8/45)·h·L·Ji₊ − (1/5)·L²·Ji₊ − (1/9)·L²·Ji₊²,
/// both exact whenever Y vanishes at y = 0 and y = L.
pub fn qm_moments_y(config: &QuantumConfig, mode: &ModeY) -> Result<MomentsReport> {
    let h = mode.height();
    let l = config.side;
    let (mean, var, ji) = match mode.walls {
        Walls::Floor => (2.0 / 3.0 * h, 4.0 / 45.0 * h * h, 0.0),
        Walls::FloorAndCeiling => {
            let j = ji_plus_unchecked(config, mode)?;
            let var = 4.0 / 45.0 * h * h + 8.0 / 45.0 * h * l * j - l * l * j / 5.0 - l * l * j * j / 9.0;
            (2.0 / 3.0 * h - l / 3.0 * j, var, j)
        }
    };
    Ok(MomentsReport {
        mean,
        stddev: var.max(0.0).sqrt(),
        ji_plus: ji,
        source: MomentSource::ClosedForm,
        norm: 1.0,
    })
}

/// Rough count of half-oscillations of the mode on [0, L], used to size the
/// initial quadrature panels.
fn oscillations(config: &QuantumConfig, eps: f64) -> f64 {
    let top = (eps - config.ceiling()).max(0.0);
    2.0 / (3.0 * PI) * (eps.powf(1.5) - top.powf(1.5))
}

/// Moments by adaptive Simpson quadrature of |Y|², y|Y|² and y²|Y|² over
/// [0, L] (absolute tolerance 1e−10), normalized by the zeroth moment.
pub fn qm_moments_quadrature(config: &QuantumConfig, mode: &ModeY) -> Result<MomentsReport> {
    let l = config.side;
    let panels = 16 + 4 * oscillations(config, mode.eps).ceil() as usize;
    let quad = AdaptiveSimpson::new(1e-10).panels(panels);
    // Airy errors cannot surface through the integrand closure, so evaluate
    // once up front and let the closure fall back to NaN.
    mode.value(0.0)?;
    mode.value(l)?;
    let dens = |y: f64| mode.density(y).unwrap_or(f64::NAN);
    let m0 = quad.integrate(dens, 0.0, l)?.value;
    let m1 = quad.integrate(|y| y * dens(y), 0.0, l)?.value;
    let m2 = quad.integrate(|y| y * y * dens(y), 0.0, l)?.value;
    if !(m0 > 0.0 && m0.is_finite()) {
        return Err(Error::domain(format!("mode has zeroth moment {m0}")));
    }
    let mean = m1 / m0;
    let var = m2 / m0 - mean * mean;
    let ji = match mode.walls {
        Walls::FloorAndCeiling => ji_plus_unchecked(config, mode)?,
        Walls::Floor => 0.0,
    };
    Ok(MomentsReport {
        mean,
        stddev: var.max(0.0).sqrt(),
        ji_plus: ji,
        source: MomentSource::Quadrature,
        norm: m0,
    })
}
