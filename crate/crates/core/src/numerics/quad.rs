//! Adaptive Simpson quadrature with Richardson extrapolation.

use crate::{Error, Result, Scalar};

/// Outcome of a successful integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult<T> {
    pub value: T,
    /// Sum of the local error estimates over all accepted panels.
    pub error_estimate: T,
    pub evaluations: usize,
}

/// Adaptive Simpson integrator.
///
/// The interval is first cut into `panels` equal pieces so that oscillatory
/// integrands are not accepted on the strength of five lucky samples; each
/// piece is then bisected until the local Richardson estimate meets its share
/// of the absolute tolerance (or the two estimates agree to rounding level)
/// or `max_depth` is reached. Reaching the depth cap
/// anywhere turns the whole integration into an [`Error::Quadrature`].
#[derive(Debug, Clone, Copy)]
pub struct AdaptiveSimpson<T> {
    pub abs_tol: T,
    pub max_depth: u32,
    pub panels: usize,
}

impl<T: Scalar> Default for AdaptiveSimpson<T> {
    fn default() -> Self {
        Self {
            abs_tol: T::lit(1e-10),
            max_depth: 40,
            panels: 8,
        }
    }
}

struct State<T> {
    evaluations: usize,
    error: T,
    converged: bool,
}

impl<T: Scalar> AdaptiveSimpson<T> {
    pub fn new(abs_tol: T) -> Self {
        Self {
            abs_tol,
            ..Self::default()
        }
    }

    pub fn panels(mut self, panels: usize) -> Self {
        self.panels = panels.max(1);
        self
    }

    pub fn max_depth(mut self, depth: u32) -> Self {
        self.max_depth = depth;
        self
    }

    /// Integrates `f` over `[a, b]`. `b < a` yields the negated integral.
    pub fn integrate<F>(&self, mut f: F, a: T, b: T) -> Result<QuadResult<T>>
    where
        F: FnMut(T) -> T,
    {
        if !(a.is_finite() && b.is_finite()) {
            return Err(Error::domain("quadrature bounds must be finite"));
        }
        if a == b {
            return Ok(QuadResult {
                value: T::zero(),
                error_estimate: T::zero(),
                evaluations: 0,
            });
        }
        if b < a {
            let r = self.integrate(f, b, a)?;
            return Ok(QuadResult {
                value: -r.value,
                ..r
            });
        }
        let n = T::from_usize(self.panels).unwrap();
        let width = (b - a) / n;
        let tol = self.abs_tol / n;
        let two = T::lit(2.0);

        let mut state = State {
            evaluations: 0,
            error: T::zero(),
            converged: true,
        };
        let mut total = T::zero();
        let mut left = a;
        let mut f_left = f(left);
        state.evaluations += 1;
        for i in 0..self.panels {
            let right = if i + 1 == self.panels {
                b
            } else {
                a + width * T::from_usize(i + 1).unwrap()
            };
            let mid = (left + right) / two;
            let f_mid = f(mid);
            let f_right = f(right);
            state.evaluations += 2;
            let whole = simpson(left, right, f_left, f_mid, f_right);
            total = total
                + self.refine(
                    &mut f,
                    &mut state,
                    [left, mid, right],
                    [f_left, f_mid, f_right],
                    whole,
                    tol,
                    self.max_depth,
                );
            left = right;
            f_left = f_right;
        }

        if !state.converged || !total.is_finite() {
            return Err(Error::Quadrature {
                a: a.as_f64(),
                b: b.as_f64(),
                estimate: state.error.as_f64(),
                tol: self.abs_tol.as_f64(),
                evaluations: state.evaluations,
            });
        }
        Ok(QuadResult {
            value: total,
            error_estimate: state.error,
            evaluations: state.evaluations,
        })
    }

    #[allow(clippy::too_many_arguments)]
    fn refine<F>(
        &self,
        f: &mut F,
        state: &mut State<T>,
        [a, m, b]: [T; 3],
        [fa, fm, fb]: [T; 3],
        whole: T,
        tol: T,
        depth: u32,
    ) -> T
    where
        F: FnMut(T) -> T,
    {
        let two = T::lit(2.0);
        let lm = (a + m) / two;
        let rm = (m + b) / two;
        let flm = f(lm);
        let frm = f(rm);
        state.evaluations += 2;
        let left = simpson(a, m, fa, flm, fm);
        let right = simpson(m, b, fm, frm, fb);
        let delta = left + right - whole;
        let fifteen = T::lit(15.0);

        // Stop when the interval is within ~1000 ulp of its own position
        // (samples there differ only by rounding of the abscissa), or when
        // the estimates already agree to rounding level.
        let resolution = T::lit(1024.0) * T::epsilon() * a.abs().max(b.abs());
        let degenerate = b - a <= resolution || lm <= a || m <= lm || rm <= m || b <= rm;
        let noise = T::lit(128.0) * T::epsilon() * (left.abs() + right.abs());
        if delta.abs() <= fifteen * tol || delta.abs() <= noise || degenerate {
            state.error = state.error + delta.abs() / fifteen;
            return left + right + delta / fifteen;
        }
        if depth == 0 {
            state.converged = false;
            state.error = state.error + delta.abs() / fifteen;
            return left + right + delta / fifteen;
        }
        let half = tol / two;
        self.refine(f, state, [a, lm, m], [fa, flm, fm], left, half, depth - 1)
            + self.refine(f, state, [m, rm, b], [fm, frm, fb], right, half, depth - 1)
    }
}

#[inline]
fn simpson<T: Scalar>(a: T, b: T, fa: T, fm: T, fb: T) -> T {
    (b - a) / T::lit(6.0) * (fa + T::lit(4.0) * fm + fb)
}
