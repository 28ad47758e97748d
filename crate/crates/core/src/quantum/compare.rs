//! Coarse-grained comparison of a quantum y density with the classical one.

use super::config::QuantumConfig;
use super::modes::ModeY;
use crate::classical::cumulative;
use crate::numerics::AdaptiveSimpson;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Correspondence {
    /// Turning height h = E_y/(mg) used for the classical density.
    pub height: f64,
    pub edges: Vec<f64>,
    /// Probability mass per bin, each side summing to 1.
    pub quantum: Vec<f64>,
    pub classical: Vec<f64>,
    /// Σ |quantum − classical| over the bins.
    pub l1: f64,
}

/// Bins [0, L] into `bins` equal slices and compares the |Y|² mass in each
/// with the classical mass at the matched turning height.
pub fn coarse_grained_l1(config: &QuantumConfig, mode: &ModeY, bins: usize) -> Result<Correspondence> {
    if bins == 0 {
        return Err(Error::invalid("bins", "need at least one bin"));
    }
    let l = config.side;
    let h = mode.height();
    let edges: Vec<f64> = (0..=bins).map(|i| l * i as f64 / bins as f64).collect();
    mode.value(0.0)?;
    mode.value(l)?;
    let quad = AdaptiveSimpson::new(1e-12).panels(8);
    let mut quantum = Vec::with_capacity(bins);
    for w in edges.windows(2) {
        let q = quad.integrate(|y| mode.density(y).unwrap_or(f64::NAN), w[0], w[1])?;
        quantum.push(q.value);
    }
    let total: f64 = quantum.iter().sum();
    if !(total > 0.0) {
        return Err(Error::domain(format!("mode carries no probability on [0, L] ({total})")));
    }
    quantum.iter_mut().for_each(|q| *q /= total);
    let mut classical = Vec::with_capacity(bins);
    for w in edges.windows(2) {
        classical.push(cumulative(w[1], h, l)? - cumulative(w[0], h, l)?);
    }
    let l1 = quantum.iter().zip(&classical).map(|(q, c)| (q - c).abs()).sum();
    Ok(Correspondence {
        height: h,
        edges,
        quantum,
        classical,
        l1,
    })
}
