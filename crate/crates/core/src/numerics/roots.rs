//! Bracketing root search.

use crate::{Error, Result, Scalar};

/// Bisection on `[a, b]` until the bracket is narrower than `xtol` or cannot
/// be split any further in `T`.
///
/// `f(a)` and `f(b)` must have opposite signs (a zero at either end point is
/// returned immediately).
pub fn bisect<T, F>(mut f: F, mut a: T, mut b: T, xtol: T) -> Result<T>
where
    T: Scalar,
    F: FnMut(T) -> Result<T>,
{
    if a > b {
        std::mem::swap(&mut a, &mut b);
    }
    let mut fa = f(a)?;
    let fb = f(b)?;
    if fa == T::zero() {
        return Ok(a);
    }
    if fb == T::zero() {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::NoSignChange {
            a: a.as_f64(),
            b: b.as_f64(),
            fa: fa.as_f64(),
            fb: fb.as_f64(),
        });
    }
    let two = T::lit(2.0);
    // 200 halvings exhaust any finite f64 bracket.
    for _ in 0..200 {
        let m = a + (b - a) / two;
        if b - a <= xtol || m <= a || m >= b {
            break;
        }
        let fm = f(m)?;
        if fm == T::zero() {
            return Ok(m);
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    Ok(a + (b - a) / two)
}

/// Scans `[start, end]` with a step supplied per position and returns every
/// sub-interval on which `f` changes sign, in scan order.
///
/// `step(x)` must be positive; the scan direction follows the sign of
/// `end - start`. A sample that is exactly zero produces a degenerate bracket
/// `(x, x)`.
pub fn sign_change_brackets<T, F, S>(mut f: F, start: T, end: T, mut step: S) -> Result<Vec<(T, T)>>
where
    T: Scalar,
    F: FnMut(T) -> Result<T>,
    S: FnMut(T) -> T,
{
    let dir = if end >= start { T::one() } else { -T::one() };
    let mut out = Vec::new();
    let mut x = start;
    let mut fx = f(x)?;
    if fx == T::zero() {
        out.push((x, x));
    }
    while (end - x) * dir > T::zero() {
        let h = step(x);
        if !(h > T::zero()) {
            return Err(Error::domain("scan step must be positive"));
        }
        let mut next = x + dir * h;
        if (end - next) * dir < T::zero() {
            next = end;
        }
        let fn_ = f(next)?;
        if fn_ == T::zero() {
            out.push((next, next));
        } else if fx != T::zero() && fx.signum() != fn_.signum() {
            out.push((x, next));
        }
        x = next;
        fx = fn_;
    }
    Ok(out)
}
