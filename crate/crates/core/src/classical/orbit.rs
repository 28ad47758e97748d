//! Periodic-orbit classification through the unfolded picture.
//!
//! Between two floor bounces the particle advances by D = Δx(0) − Δx(L) in
//! the unfolded horizontal coordinate (Δx(L) = 0 when the ceiling is out of
//! reach). The folded motion repeats once the advance is a whole number of
//! double widths, i.e. when p·|D| = q·2L, and it hits a corner when a floor
//! or ceiling contact lands on a multiple of L:
//!
//! ```text
//! floor   contacts:  x0 + D·n          (corners A, B)
//! ceiling contacts:  x0 + D·(n + 1/2)  (corners C, D)
//! ```

use super::launch::{delta_x, delta_x_ceiling, LaunchSpec};
use crate::Scalar;

/// Box corners: A = (0, 0), B = (L, 0), C = (L, L), D = (0, L).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Corner {
    A,
    B,
    C,
    D,
}

impl Corner {
    /// The corner nearest to `(x, y)`.
    pub fn at<T: Scalar>(x: T, y: T, side: T) -> Corner {
        let half = side / T::lit(2.0);
        match (x > half, y > half) {
            (false, false) => Corner::A,
            (true, false) => Corner::B,
            (true, true) => Corner::C,
            (false, true) => Corner::D,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Corner::A => "A",
            Corner::B => "B",
            Corner::C => "C",
            Corner::D => "D",
        }
    }
}

/// Period type of a closed orbit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Period {
    /// After `p` floor bounces the particle has crossed `q` double widths.
    Commensurate { p: u64, q: u64 },
    /// Pure vertical bouncing (D = 0); one floor bounce per period.
    Vertical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrbitClass {
    Periodic(Period),
    /// No rational q/p with p ≤ the denominator cap matches the advance ratio.
    /// Floating point cannot certify irrationality; this is only the absence
    /// of an admissible rational.
    Aperiodic,
    /// The first corner contact, counted in floor-to-floor cycles from launch.
    CornerHit { corner: Corner, bounce_index: u64 },
}

/// Numeric relaxations used by [`classify_orbit_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrbitTolerances<T> {
    /// Accepted drift p·|ρ − q/p| over one period, relative to max(1, ρ).
    pub rational: T,
    /// Corner band as a fraction of the side.
    pub corner: T,
    /// Cycles scanned for corner contacts when the orbit is aperiodic.
    pub aperiodic_horizon: u64,
}

impl<T: Scalar> Default for OrbitTolerances<T> {
    fn default() -> Self {
        Self {
            rational: T::lit(1e-9),
            corner: T::lit(1e-9),
            aperiodic_horizon: 10_000,
        }
    }
}

/// Signed unfolded advance per floor-to-floor cycle, Δx(0) − Δx(L).
pub fn cycle_advance<T: Scalar>(spec: &LaunchSpec<T>) -> T {
    let d0 = delta_x(spec, T::zero()).unwrap_or_else(|_| T::zero());
    let dl = delta_x_ceiling(spec);
    d0 - dl
}

/// Advance ratio ρ = |D| / (2L).
pub fn advance_ratio<T: Scalar>(spec: &LaunchSpec<T>) -> T {
    cycle_advance(spec).abs() / (T::lit(2.0) * spec.side)
}

/// Classifies with the default tolerances.
pub fn classify_orbit<T: Scalar>(spec: &LaunchSpec<T>, max_denominator: u64) -> OrbitClass {
    classify_orbit_with(spec, max_denominator, &OrbitTolerances::default())
}

pub fn classify_orbit_with<T: Scalar>(
    spec: &LaunchSpec<T>,
    max_denominator: u64,
    tol: &OrbitTolerances<T>,
) -> OrbitClass {
    let max_denominator = max_denominator.max(1);
    let advance = cycle_advance(spec);
    let rho = advance_ratio(spec);

    if rho <= tol.rational {
        // Vertical: contacts stay at x0 forever.
        return match first_corner(spec, T::zero(), 1, tol.corner) {
            Some(hit) => hit,
            None => OrbitClass::Periodic(Period::Vertical),
        };
    }

    match rational_match(rho, max_denominator, tol.rational) {
        Some((p, q)) => match first_corner(spec, advance, p, tol.corner) {
            Some(hit) => hit,
            None => OrbitClass::Periodic(Period::Commensurate { p, q }),
        },
        None => match first_corner(spec, advance, tol.aperiodic_horizon.max(1), tol.corner) {
            Some(hit) => hit,
            None => OrbitClass::Aperiodic,
        },
    }
}

/// Smallest-denominator convergent q/p of `rho` with p ≤ `max_den`, q ≥ 1
/// and p·|rho − q/p| ≤ tol·max(1, rho). Returns `(p, q)`.
///
/// The tolerance bounds the drift accumulated over one full period rather
/// than the distance to q/p; with a plain distance test every real number
/// would match some convergent once `max_den` exceeds about `tol^{-1/2}`.
pub fn rational_match<T: Scalar>(rho: T, max_den: u64, tol: T) -> Option<(u64, u64)> {
    if !(rho.is_finite() && rho > T::zero()) {
        return None;
    }
    let band = tol * rho.max(T::one());
    // Convergent recurrences h_n = a_n h_{n-1} + h_{n-2}, k_n likewise.
    let (mut h_prev, mut h) = (0u128, 1u128);
    let (mut k_prev, mut k) = (1u128, 0u128);
    let mut x = rho;
    for _ in 0..64 {
        let a_f = x.floor();
        let a = a_f.to_u64()? as u128;
        let h_next = a.checked_mul(h)?.checked_add(h_prev)?;
        let k_next = a.checked_mul(k)?.checked_add(k_prev)?;
        if k_next > max_den as u128 {
            return None;
        }
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
        if h >= 1 {
            let approx = T::from_u128(h)? / T::from_u128(k)?;
            if (rho - approx).abs() * T::from_u128(k)? <= band {
                return Some((k as u64, h as u64));
            }
        }
        let frac = x - a_f;
        if frac <= T::min_positive_value() {
            return None;
        }
        x = frac.recip();
    }
    None
}

/// Scans cycles `0..cycles` for corner contacts. A floor contact that
/// returns to the launch point is the periodic closure, not a collision.
fn first_corner<T: Scalar>(spec: &LaunchSpec<T>, advance: T, cycles: u64, corner_tol: T) -> Option<OrbitClass> {
    let l = spec.side;
    let two_l = T::lit(2.0) * l;
    let band = corner_tol * l;
    let reaches_ceiling = spec.reaches_ceiling();
    let half = T::lit(0.5);

    let near_wall = |x_unfolded: T| -> Option<T> {
        let r = x_unfolded.modulo(l);
        if r <= band || l - r <= band {
            // Folded position: 0 or L.
            let u = x_unfolded.modulo(two_l);
            let folded = if u <= l { u } else { two_l - u };
            Some(if folded > l * half { l } else { T::zero() })
        } else {
            None
        }
    };
    let is_launch_return = |x_unfolded: T| {
        let d = (x_unfolded - spec.x0).modulo(two_l);
        d <= band || two_l - d <= band
    };

    for n in 0..cycles {
        let nf = T::from_u64(n).unwrap();
        if reaches_ceiling {
            let xc = spec.x0 + advance * (nf + half);
            if let Some(wall) = near_wall(xc) {
                return Some(OrbitClass::CornerHit {
                    corner: Corner::at(wall, l, l),
                    bounce_index: n,
                });
            }
        }
        let xf = spec.x0 + advance * (nf + T::one());
        if let Some(wall) = near_wall(xf) {
            if !is_launch_return(xf) {
                return Some(OrbitClass::CornerHit {
                    corner: Corner::at(wall, T::zero(), l),
                    bounce_index: n + 1,
                });
            }
        }
    }
    None
}
