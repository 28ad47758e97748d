//! Sampled two-dimensional probability density |X_n|²·|Y|².

use super::config::{x_mode, QuantumConfig};
use super::modes::ModeY;
use crate::{Error, Result};

/// Density on the uniform lattice x_i = i·L/(nx−1), y_j = j·L/(ny−1).
#[derive(Debug, Clone, PartialEq)]
pub struct DensityGrid {
    pub nx: usize,
    pub ny: usize,
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
    /// Row-major in y: `values[j * nx + i]` is ρ(x_i, y_j).
    pub values: Vec<f64>,
}

impl DensityGrid {
    pub fn at(&self, i: usize, j: usize) -> f64 {
        self.values[j * self.nx + i]
    }

    /// Sum of all samples times the cell area.
    pub fn riemann_sum(&self) -> f64 {
        let dx = self.xs[1] - self.xs[0];
        let dy = self.ys[1] - self.ys[0];
        self.values.iter().sum::<f64>() * dx * dy
    }

    /// Number of maxima along x and along y, counted on the marginals.
    pub fn lobes(&self) -> (usize, usize) {
        let col: Vec<f64> = (0..self.nx).map(|i| (0..self.ny).map(|j| self.at(i, j)).sum()).collect();
        let row: Vec<f64> = (0..self.ny).map(|j| (0..self.nx).map(|i| self.at(i, j)).sum()).collect();
        (local_maxima(&col), local_maxima(&row))
    }
}

fn local_maxima(v: &[f64]) -> usize {
    let n = v.len();
    (0..n)
        .filter(|&i| {
            let left = if i == 0 { f64::NEG_INFINITY } else { v[i - 1] };
            let right = if i + 1 == n { f64::NEG_INFINITY } else { v[i + 1] };
            v[i] > left && v[i] >= right
        })
        .count()
}

pub fn density_grid(config: &QuantumConfig, n: u32, mode: &ModeY, nx: usize, ny: usize) -> Result<DensityGrid> {
    if nx < 2 || ny < 2 {
        return Err(Error::invalid("grid", format!("need nx, ny >= 2, got {nx} x {ny}")));
    }
    let xm = x_mode(config, n)?;
    let l = config.side;
    let xs: Vec<f64> = (0..nx).map(|i| l * i as f64 / (nx - 1) as f64).collect();
    let ys: Vec<f64> = (0..ny).map(|j| l * j as f64 / (ny - 1) as f64).collect();
    let px: Vec<f64> = xs.iter().map(|&x| xm.density(x)).collect();
    let mut values = Vec::with_capacity(nx * ny);
    for &y in &ys {
        let py = mode.density(y)?;
        values.extend(px.iter().map(|&p| p * py));
    }
    Ok(DensityGrid {
        nx,
        ny,
        xs,
        ys,
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::{high_mode, low_mode, Method};

    #[test]
    fn lobe_counts_match_quantum_numbers() {
        let c = QuantumConfig::from_scale(0.1, 1.0).unwrap();
        let low = low_mode(&c, 3, Method::ExactRoot).unwrap();
        let g = density_grid(&c, 4, &low, 201, 201).unwrap();
        assert_eq!(g.lobes(), (4, 3));
        assert!(g.values.iter().all(|&v| v >= 0.0));
        let high = high_mode(&c, 12, Method::ExactRoot).unwrap();
        assert_eq!(density_grid(&c, 4, &high, 201, 401).unwrap().lobes(), (4, 12));
    }

    #[test]
    fn riemann_sum_converges() {
        let c = QuantumConfig::from_scale(0.1, 1.0).unwrap();
        let m = low_mode(&c, 3, Method::ExactRoot).unwrap();
        let coarse = density_grid(&c, 2, &m, 21, 21).unwrap().riemann_sum();
        let fine = density_grid(&c, 2, &m, 41, 41).unwrap().riemann_sum();
        assert!((coarse - 1.0).abs() <= 2.0 / 21.0);
        assert!((fine - 1.0).abs() <= 2.0 / 41.0);
        assert!((fine - 1.0).abs() <= (coarse - 1.0).abs());
    }

    #[test]
    fn rejects_tiny_grids() {
        let c = QuantumConfig::from_scale(0.1, 1.0).unwrap();
        let m = low_mode(&c, 1, Method::ExactRoot).unwrap();
        assert!(density_grid(&c, 1, &m, 1, 5).is_err());
        assert!(density_grid(&c, 0, &m, 5, 5).is_err());
    }
}
