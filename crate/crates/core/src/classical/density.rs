//! Time-averaged position density of the classical particle and its moments.
//!
//! The density is uniform in x and proportional to 1/v_y(y) in y:
//! ρ(y) = N/√(h − y) for y below min(h, L), with N fixed by ∫∫ρ = 1.
//! For h ≥ L the moments are written in terms of a = √h and b = √(h − L),
//! using a − b = L/(a + b), which keeps them free of cancellation however
//! large h/L gets.

use crate::{Error, Result, Scalar};

/// Density value plus a flag for samples within `1e-12·h` below the
/// integrable singularity at y = h.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensitySample<T> {
    pub value: T,
    pub near_turning_point: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassicalMomentsX<T> {
    pub mean: T,
    pub second_moment: T,
    pub stddev: T,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassicalMomentsY<T> {
    pub mean: T,
    pub second_moment: T,
    pub stddev: T,
    /// Ceiling correction to the variance relative to 4h²/45; zero for h ≤ L.
    pub j_correction: T,
}

fn check_positive<T: Scalar>(name: &'static str, v: T) -> Result<()> {
    if v.is_finite() && v > T::zero() {
        Ok(())
    } else {
        Err(Error::invalid(name, format!("must be finite and > 0, got {v}")))
    }
}

/// Normalization constant N of the area density.
pub fn normalization<T: Scalar>(h: T, side: T) -> Result<T> {
    check_positive("h", h)?;
    check_positive("side", side)?;
    let two = T::lit(2.0);
    Ok(if h < side {
        T::one() / (two * side * h.sqrt())
    } else {
        // 1/(2L(√h − √(h−L))) rationalized.
        (h.sqrt() + (h - side).sqrt()) / (two * side * side)
    })
}

/// Probability per unit area at height `y` (independent of x).
pub fn density<T: Scalar>(y: T, h: T, side: T) -> Result<DensitySample<T>> {
    let n = normalization(h, side)?;
    if !(y >= T::zero() && y <= side) {
        return Err(Error::domain(format!("density: y = {y} outside [0, {side}]")));
    }
    if y >= h {
        return Ok(DensitySample {
            value: T::zero(),
            near_turning_point: false,
        });
    }
    let gap = h - y;
    Ok(DensitySample {
        value: n / gap.sqrt(),
        near_turning_point: gap < T::lit(1e-12) * h,
    })
}

/// Probability of finding the particle below height `y`,
/// (√h − √(h − y)) / (√h − √(h − L)) with both ends clamped to h, written
/// without the subtraction.
pub fn cumulative<T: Scalar>(y: T, h: T, side: T) -> Result<T> {
    check_positive("h", h)?;
    check_positive("side", side)?;
    if y.is_nan() {
        return Err(Error::domain("cumulative: y is NaN"));
    }
    let part = |t: T| {
        let t = t.max(T::zero()).min(h);
        t / (h.sqrt() + (h - t).sqrt())
    };
    Ok((part(y.min(side)) / part(side)).min(T::one()))
}

/// Moments of the uniform x distribution on `[0, L]`.
pub fn moments_x<T: Scalar>(side: T) -> ClassicalMomentsX<T> {
    let two = T::lit(2.0);
    let three = T::lit(3.0);
    ClassicalMomentsX {
        mean: side / two,
        second_moment: side * side / three,
        stddev: side / (two * three.sqrt()),
    }
}

/// Closed-form ⟨y⟩ and Δy; dispatches to [`moments_y_below`] for h ≤ L and
/// to [`moments_y_above`] otherwise.
pub fn moments_y<T: Scalar>(h: T, side: T) -> Result<ClassicalMomentsY<T>> {
    if h <= side {
        moments_y_below(h, side)
    } else {
        moments_y_above(h, side)
    }
}

/// Ceiling out of reach: ⟨y⟩ = 2h/3, Var y = 4h²/45. Requires h ≤ L.
pub fn moments_y_below<T: Scalar>(h: T, side: T) -> Result<ClassicalMomentsY<T>> {
    check_positive("h", h)?;
    check_positive("side", side)?;
    if h > side {
        return Err(Error::domain("moments_y_below needs h <= L"));
    }
    let lit = T::lit;
    let var = lit(4.0) * h * h / lit(45.0);
    let mean = lit(2.0) * h / lit(3.0);
    Ok(ClassicalMomentsY {
        mean,
        second_moment: lit(8.0) * h * h / lit(15.0),
        stddev: var.sqrt(),
        j_correction: T::zero(),
    })
}

/// Ceiling in reach, h ≥ L. With a = √h, b = √(h − L), d = L/(a + b):
/// ⟨y⟩ = L·(1 + a/(a + b))/3 and Var y = d²(4a² + 7ab + 4b²)/45, both free
/// of the cancellation in √h − √(h − L).
pub fn moments_y_above<T: Scalar>(h: T, side: T) -> Result<ClassicalMomentsY<T>> {
    check_positive("h", h)?;
    check_positive("side", side)?;
    if h < side {
        return Err(Error::domain("moments_y_above needs h >= L"));
    }
    let lit = T::lit;
    let a = h.sqrt();
    let b = (h - side).sqrt();
    let d = side / (a + b);
    let mean = side * (T::one() + a / (a + b)) / lit(3.0);
    let var = d * d * (lit(4.0) * a * a + lit(7.0) * a * b + lit(4.0) * b * b) / lit(45.0);
    Ok(ClassicalMomentsY {
        mean,
        second_moment: var + mean * mean,
        stddev: var.sqrt(),
        j_correction: lit(45.0) * var / (lit(4.0) * h * h) - T::one(),
    })
}
