//! Quantum particle in the box: separable x and y modes, spectra and
//! position moments.

mod compare;
mod config;
mod grid;
mod moments;
mod modes;

pub use compare::{coarse_grained_l1, Correspondence};
pub use config::{x_mode, ModeX, QuantumConfig};
pub use grid::{density_grid, DensityGrid};
pub use moments::{qm_moments_quadrature, qm_moments_x, qm_moments_y, MomentSource, MomentsReport};
pub use modes::{
    det_boundary, exact_eps_bound, exact_spectrum, high_mode, ji_plus, low_mode, min_taylor_index,
    taylor_high_eps, wkb_low_eps, Method, ModeY, Regime, Walls,
};
