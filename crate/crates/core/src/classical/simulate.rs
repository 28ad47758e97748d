//! Event-driven flight simulation and the unfolded closed-form motion.

use super::launch::{h_max, LaunchSpec};
use super::orbit::Corner;
use crate::{Error, Result, Scalar};

/// What ended a flight segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WallHit {
    Floor,
    Ceiling,
    LeftWall,
    RightWall,
    Corner,
}

impl WallHit {
    pub fn as_str(self) -> &'static str {
        match self {
            WallHit::Floor => "floor",
            WallHit::Ceiling => "ceiling",
            WallHit::LeftWall => "left",
            WallHit::RightWall => "right",
            WallHit::Corner => "corner",
        }
    }
}

/// One free parabolic flight between two wall events.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlightSegment<T> {
    pub start: (T, T),
    pub end: (T, T),
    /// Sign of the horizontal velocity along the segment: +1, −1 or 0.
    pub x_direction: i8,
    pub x_span: T,
    /// Highest point reached on the segment.
    pub apex_height: T,
    pub duration: T,
    /// Velocity at `start`.
    pub start_velocity: (T, T),
    /// Velocity just before the event at `end`.
    pub end_velocity: (T, T),
    pub wall_hit: WallHit,
}

/// The result of [`simulate`].
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory<T> {
    pub spec: LaunchSpec<T>,
    pub segments: Vec<FlightSegment<T>>,
    /// Corner that stopped the run, with the index of the offending segment.
    pub corner_hit: Option<(Corner, usize)>,
}

impl<T: Scalar> Trajectory<T> {
    /// Indices of the segments that end on the floor, including returns to a
    /// launch corner.
    pub fn floor_events(&self) -> Vec<usize> {
        self.segments
            .iter()
            .enumerate()
            .filter(|(i, s)| {
                s.wall_hit == WallHit::Floor
                    || (s.wall_hit == WallHit::Corner && self.corner_hit.map(|c| c.1) != Some(*i))
            })
            .map(|(i, _)| i)
            .collect()
    }

    /// Total mechanical energy at every event, starting with the launch.
    pub fn energies(&self) -> Vec<T> {
        let half = T::lit(0.5);
        let m = self.spec.mass;
        let g = self.spec.gravity;
        let energy = |(_, y): (T, T), (vx, vy): (T, T)| half * m * (vx * vx + vy * vy) + m * g * y;
        let mut out = Vec::with_capacity(self.segments.len() + 1);
        if let Some(first) = self.segments.first() {
            out.push(energy(first.start, first.start_velocity));
        }
        out.extend(self.segments.iter().map(|s| energy(s.end, s.end_velocity)));
        out
    }

    /// Elapsed time at the end of each segment.
    pub fn event_times(&self) -> Vec<T> {
        let mut t = T::zero();
        self.segments
            .iter()
            .map(|s| {
                t = t + s.duration;
                t
            })
            .collect()
    }
}

/// Runs the billiard for at most `max_events` wall events.
///
/// Velocities reflect specularly: the horizontal component flips at the side
/// walls, the vertical one at floor and ceiling. The vertical speed after each
/// event is re-derived from the conserved vertical energy, so the total energy
/// is exact up to rounding. An event within `1e-9·L` of a corner stops the run
/// with [`WallHit::Corner`], except a return to a launch point that is itself
/// a floor corner: there both components reverse, which closes the period.
pub fn simulate<T: Scalar>(spec: &LaunchSpec<T>, max_events: usize) -> Result<Trajectory<T>> {
    simulate_with(spec, max_events, T::lit(1e-9))
}

/// [`simulate`] with an explicit corner tolerance (fraction of the side).
pub fn simulate_with<T: Scalar>(spec: &LaunchSpec<T>, max_events: usize, corner_tol: T) -> Result<Trajectory<T>> {
    spec.validate()?;
    if max_events == 0 {
        return Err(Error::domain("simulate needs max_events >= 1"));
    }
    let zero = T::zero();
    let two = T::lit(2.0);
    let half = T::lit(0.5);
    let g = spec.gravity;
    let l = spec.side;
    let tol = corner_tol * l;

    let v = spec.speed();
    let (sin, cos) = spec.angle.sin_cos();
    let mut vx = if cos.abs() <= T::lit(4.0) * T::epsilon() { zero } else { v * cos };
    let mut vy = v * sin;
    // Vertical energy per unit mass; vy^2 = 2 (ey - g y).
    let ey = half * vy * vy;
    let vy_at = |y: T| (two * (ey - g * y)).max(zero).sqrt();
    let reaches_ceiling = h_max(spec) > l;
    let launch_corner = spec.x0 == zero || spec.x0 == l;

    let mut x = spec.x0;
    let mut y = zero;
    let mut segments = Vec::with_capacity(max_events);
    let mut corner_hit = None;

    while segments.len() < max_events {
        let t_floor = (vy + (vy * vy + two * g * y).sqrt()) / g;
        let t_ceiling = if reaches_ceiling && vy > zero && y < l {
            let disc = vy * vy - two * g * (l - y);
            if disc >= zero {
                two * (l - y) / (vy + disc.sqrt())
            } else {
                T::infinity()
            }
        } else {
            T::infinity()
        };
        let t_side = if vx > zero {
            (l - x) / vx
        } else if vx < zero {
            x / -vx
        } else {
            T::infinity()
        };

        let t = t_floor.min(t_ceiling).min(t_side);
        let y_free = y + vy * t - half * g * t * t;
        let vy_end = vy - g * t;
        let apex = if vy > zero && vy / g < t {
            y + vy * vy / (two * g)
        } else {
            y.max(y_free)
        };
        let start = (x, y);
        let start_velocity = (vx, vy);

        let (mut wall, mut nx, mut ny) = if t == t_side {
            let nx = if vx > zero { l } else { zero };
            let ny = y_free.max(zero).min(l);
            (if vx > zero { WallHit::RightWall } else { WallHit::LeftWall }, nx, ny)
        } else if t == t_ceiling {
            (WallHit::Ceiling, (x + vx * t).max(zero).min(l), l)
        } else {
            (WallHit::Floor, (x + vx * t).max(zero).min(l), zero)
        };

        let near_side = nx <= tol || l - nx <= tol;
        let near_floor_or_ceiling = ny <= tol || l - ny <= tol;
        let end_speed_y = vy_at(ny);
        let end_velocity = (vx, if vy_end >= zero { end_speed_y } else { -end_speed_y });

        let mut closes_period = false;
        if near_side && near_floor_or_ceiling {
            wall = WallHit::Corner;
            let on_floor = ny <= tol;
            nx = if nx <= tol { zero } else { l };
            ny = if on_floor { zero } else { l };
            closes_period = launch_corner && on_floor && (nx - spec.x0).abs() <= tol;
        }

        segments.push(FlightSegment {
            start,
            end: (nx, ny),
            x_direction: if vx > zero { 1 } else if vx < zero { -1 } else { 0 },
            x_span: (nx - x).abs(),
            apex_height: apex,
            duration: t,
            start_velocity,
            end_velocity,
            wall_hit: wall,
        });

        x = nx;
        y = ny;
        match wall {
            WallHit::Corner if closes_period => {
                x = spec.x0;
                y = zero;
                vx = -vx;
                vy = vy_at(zero);
            }
            WallHit::Corner => {
                corner_hit = Some((Corner::at(nx, ny, l), segments.len() - 1));
                break;
            }
            WallHit::LeftWall | WallHit::RightWall => {
                vx = -vx;
                vy = end_velocity.1;
            }
            WallHit::Floor => {
                y = zero;
                vy = vy_at(zero);
            }
            WallHit::Ceiling => {
                y = l;
                vy = -vy_at(l);
            }
        }
    }

    Ok(Trajectory {
        spec: *spec,
        segments,
        corner_hit,
    })
}

/// Position and velocity at time `t` from the unfolded picture: the
/// horizontal motion is a straight line folded back into `[0, L]` with period
/// `2L`, the vertical motion a periodic bounce between floor and (if reached)
/// ceiling. Returns `((x, y), (vx, vy))`.
pub fn unfolded_state<T: Scalar>(spec: &LaunchSpec<T>, t: T) -> ((T, T), (T, T)) {
    let zero = T::zero();
    let two = T::lit(2.0);
    let half = T::lit(0.5);
    let g = spec.gravity;
    let l = spec.side;
    let v = spec.speed();
    let (sin, cos) = spec.angle.sin_cos();
    let vx0 = if cos.abs() <= T::lit(4.0) * T::epsilon() { zero } else { v * cos };
    let vy0 = v * sin;

    let unfolded = spec.x0 + vx0 * t;
    let u = unfolded.modulo(two * l);
    let (x, vx) = if u <= l { (u, vx0) } else { (two * l - u, -vx0) };

    let (y, vy) = if h_max(spec) > l {
        let t_up = two * l / (vy0 + (vy0 * vy0 - two * g * l).max(zero).sqrt());
        let tau = t.modulo(two * t_up);
        if tau <= t_up {
            (vy0 * tau - half * g * tau * tau, vy0 - g * tau)
        } else {
            let back = two * t_up - tau;
            (vy0 * back - half * g * back * back, -(vy0 - g * back))
        }
    } else {
        let period = two * vy0 / g;
        let tau = t.modulo(period);
        (vy0 * tau - half * g * tau * tau, vy0 - g * tau)
    };
    ((x, y), (vx, vy))
}
