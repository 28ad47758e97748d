use crate::{Error, Result, Scalar};

/// Initial conditions of one billiard run: launch from `(x0, 0)` with total
/// energy `energy` at angle `angle` above the floor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaunchSpec<T> {
    pub x0: T,
    pub energy: T,
    pub angle: T,
    pub mass: T,
    pub gravity: T,
    pub side: T,
}

impl<T: Scalar> LaunchSpec<T> {
    pub fn new(x0: T, energy: T, angle: T, mass: T, gravity: T, side: T) -> Result<Self> {
        let spec = Self {
            x0,
            energy,
            angle,
            mass,
            gravity,
            side,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Natural units m = g = L = 1.
    pub fn natural(x0: T, energy: T, angle: T) -> Result<Self> {
        Self::new(x0, energy, angle, T::one(), T::one(), T::one())
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |name: &'static str, v: T| {
            if v.is_finite() && v > T::zero() {
                Ok(())
            } else {
                Err(Error::invalid(name, format!("must be finite and > 0, got {v}")))
            }
        };
        positive("energy", self.energy)?;
        positive("mass", self.mass)?;
        positive("gravity", self.gravity)?;
        positive("side", self.side)?;
        if !(self.x0 >= T::zero() && self.x0 <= self.side) {
            return Err(Error::invalid("x0", format!("must lie in [0, {}], got {}", self.side, self.x0)));
        }
        if !(self.angle > T::zero() && self.angle < T::PI()) {
            return Err(Error::invalid("angle", format!("must lie in (0, pi), got {}", self.angle)));
        }
        let pi_2 = T::FRAC_PI_2();
        if (self.x0 == T::zero() && self.angle > pi_2) || (self.x0 == self.side && self.angle < pi_2) {
            return Err(Error::invalid("angle", "launch from a side wall must point into the box"));
        }
        let h = h_max(self);
        if !(h.is_finite() && h > T::zero()) {
            return Err(Error::invalid("energy", format!("turning height {h} is not finite and positive")));
        }
        Ok(())
    }

    /// Launch speed √(2E/m).
    pub fn speed(&self) -> T {
        (T::lit(2.0) * self.energy / self.mass).sqrt()
    }

    /// Energy of the vertical motion, E·sin²φ.
    pub fn vertical_energy(&self) -> T {
        let s = self.angle.sin();
        self.energy * s * s
    }

    /// Whether the vertical motion reaches the ceiling (h > L).
    pub fn reaches_ceiling(&self) -> bool {
        h_max(self) > self.side
    }
}

/// Turning height ignoring the ceiling, E·sin²φ/(m·g). May exceed the side.
pub fn h_max<T: Scalar>(spec: &LaunchSpec<T>) -> T {
    spec.vertical_energy() / (spec.mass * spec.gravity)
}

/// Horizontal distance between the two crossings of height `y` on one free
/// parabola: (2E/mg)·sin 2φ·√(1 − y/h). Signed: negative for φ > π/2.
///
/// `y` above the turning height is a domain error, except for the
/// convention Δx(L) = 0 when h ≤ L.
pub fn delta_x<T: Scalar>(spec: &LaunchSpec<T>, y: T) -> Result<T> {
    let h = h_max(spec);
    if y < T::zero() || !y.is_finite() {
        return Err(Error::domain(format!("delta_x needs y >= 0, got {y}")));
    }
    if y > h {
        if y == spec.side {
            return Ok(T::zero());
        }
        return Err(Error::domain(format!("delta_x: y = {y} above turning height {h}")));
    }
    let full = T::lit(2.0) * spec.energy / (spec.mass * spec.gravity) * (T::lit(2.0) * spec.angle).sin();
    let frac = (T::one() - y / h).max(T::zero());
    Ok(full * frac.sqrt())
}

/// Δx(L), zero when the parabola never reaches the ceiling.
pub fn delta_x_ceiling<T: Scalar>(spec: &LaunchSpec<T>) -> T {
    if spec.reaches_ceiling() {
        delta_x(spec, spec.side).unwrap_or_else(|_| T::zero())
    } else {
        T::zero()
    }
}
