#![allow(dead_code)]

use gravibox_core::classical::{advance_ratio, density, normalization, LaunchSpec};
use gravibox_core::numerics::{bisect, AdaptiveSimpson};

/// Natural-unit spec (m = g = L = 1) at angle `phi` whose advance ratio is
/// `rho`, below the ceiling when possible and above it otherwise.
///
/// Below the ceiling ρ = E·sin 2φ / (mgL) in closed form; above it ρ runs
/// from 2·cot φ down to cot φ as E grows, and E is found by bisection.
pub fn spec_with_ratio(x0: f64, phi: f64, rho: f64) -> Option<LaunchSpec<f64>> {
    let below = rho / (2.0 * phi).sin();
    if below * phi.sin().powi(2) < 1.0 {
        return LaunchSpec::natural(x0, below, phi).ok();
    }
    spec_above_ceiling(x0, phi, rho)
}

/// Like `spec_with_ratio` but always on the branch that reaches the ceiling,
/// which exists for cot φ < ρ < 2·cot φ.
pub fn spec_above_ceiling(x0: f64, phi: f64, rho: f64) -> Option<LaunchSpec<f64>> {
    let cot = 1.0 / phi.tan();
    if !(rho > cot && rho < 2.0 * cot) {
        return None;
    }
    let e_ceiling = 1.0 / phi.sin().powi(2);
    let f = |e: f64| Ok(advance_ratio(&LaunchSpec::natural(x0, e, phi)?) - rho);
    let e = bisect(f, e_ceiling * (1.0 + 1e-12), e_ceiling * 1e12, 1e-15).ok()?;
    LaunchSpec::natural(x0, e, phi).ok()
}

/// L·∫ρ dy over [0, min(h, L)] (ρ is per unit area and independent of x)
/// by adaptive quadrature of `density`. When the
/// turning point lies inside the box the last 1e−4·h below it, where the
/// integrand blows up, is added analytically as 2N·√δ.
pub fn density_mass(h: f64, side: f64) -> f64 {
    let quad = AdaptiveSimpson::new(1e-12).panels(16);
    let f = |y: f64| density(y, h, side).unwrap().value;
    if h > side {
        return side * quad.integrate(f, 0.0, side).unwrap().value;
    }
    let delta = 1e-4 * h;
    let body = quad.integrate(f, 0.0, h - delta).unwrap().value;
    side * (body + 2.0 * normalization(h, side).unwrap() * delta.sqrt())
}

/// First and second moments of the classical y density from y = h − w²,
/// under which ρ dy is proportional to dw, so m_k ∝ ∫ (h − w²)^k dw.
pub fn substituted_moments(h: f64, side: f64) -> (f64, f64) {
    let top = h.min(side);
    let (lo, hi) = ((h - top).sqrt(), h.sqrt());
    let quad = AdaptiveSimpson::new(1e-13).panels(16);
    let m = |k: i32| quad.integrate(|w| (h - w * w).powi(k), lo, hi).unwrap().value;
    let m0 = m(0);
    (m(1) / m0, m(2) / m0)
}
