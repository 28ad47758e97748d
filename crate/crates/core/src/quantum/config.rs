//! Physical parameters of the quantum box and the infinite-well x modes.

use std::f64::consts::PI;

use crate::{Error, Result};

/// Physical constants of the quantum problem.
///
/// Everything downstream is expressed through the length scale
/// `R = (ħ²/(2m²g))^{1/3}` and the dimensionless energy `ε = 2mR²E/ħ²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantumConfig {
    pub hbar: f64,
    pub mass: f64,
    pub gravity: f64,
    pub side: f64,
}

fn positive(name: &'static str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::invalid(name, format!("must be finite and > 0, got {v}")))
    }
}

impl QuantumConfig {
    pub fn new(hbar: f64, mass: f64, gravity: f64, side: f64) -> Result<Self> {
        positive("hbar", hbar)?;
        positive("mass", mass)?;
        positive("gravity", gravity)?;
        positive("side", side)?;
        Ok(Self {
            hbar,
            mass,
            gravity,
            side,
        })
    }

    /// ħ = m = 1 with g chosen so that the length scale equals `scale`.
    pub fn from_scale(scale: f64, side: f64) -> Result<Self> {
        positive("scale", scale)?;
        Self::new(1.0, 1.0, 1.0 / (2.0 * scale.powi(3)), side)
    }

    /// Length scale R.
    pub fn scale(&self) -> f64 {
        (self.hbar * self.hbar / (2.0 * self.mass * self.mass * self.gravity)).cbrt()
    }

    /// Ground-state energy of the free infinite well, π²ħ²/(2mL²).
    pub fn e1(&self) -> f64 {
        PI * PI * self.hbar * self.hbar / (2.0 * self.mass * self.side * self.side)
    }

    /// Energy unit ħ²/(2mR²); E = unit·ε.
    pub fn energy_unit(&self) -> f64 {
        let r = self.scale();
        self.hbar * self.hbar / (2.0 * self.mass * r * r)
    }

    pub fn energy_of_eps(&self, eps: f64) -> f64 {
        self.energy_unit() * eps
    }

    pub fn eps_of_energy(&self, energy: f64) -> f64 {
        energy / self.energy_unit()
    }

    /// Classical turning height E/(mg) = R·ε.
    pub fn height_of_eps(&self, eps: f64) -> f64 {
        self.scale() * eps
    }

    /// L/R, the ceiling position in units of R.
    pub fn ceiling(&self) -> f64 {
        self.side / self.scale()
    }

    /// mgL/E1.
    pub fn gravity_ratio(&self) -> f64 {
        self.mass * self.gravity * self.side / self.e1()
    }
}

/// Infinite-well mode √(2/L)·sin(nπx/L).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeX {
    pub n: u32,
    pub energy: f64,
    pub side: f64,
}

impl ModeX {
    pub fn value(&self, x: f64) -> f64 {
        (2.0 / self.side).sqrt() * (self.n as f64 * PI * x / self.side).sin()
    }

    pub fn density(&self, x: f64) -> f64 {
        self.value(x).powi(2)
    }
}

pub fn x_mode(config: &QuantumConfig, n: u32) -> Result<ModeX> {
    if n == 0 {
        return Err(Error::domain("x mode index n must be >= 1"));
    }
    Ok(ModeX {
        n,
        energy: (n as f64).powi(2) * config.e1(),
        side: config.side,
    })
}
