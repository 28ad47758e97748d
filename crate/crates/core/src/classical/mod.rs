//! Classical particle in the gravitational square.

mod density;
mod launch;
mod orbit;
mod simulate;

pub use density::{cumulative, density, moments_x, normalization, moments_y, moments_y_above, moments_y_below, ClassicalMomentsX, ClassicalMomentsY, DensitySample};
pub use launch::{delta_x, delta_x_ceiling, h_max, LaunchSpec};
pub use orbit::{advance_ratio, classify_orbit, classify_orbit_with, cycle_advance, rational_match, Corner, OrbitClass, OrbitTolerances, Period};
pub use simulate::{simulate, unfolded_state, FlightSegment, Trajectory, WallHit};
