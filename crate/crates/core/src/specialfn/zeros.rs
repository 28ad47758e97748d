//! Zeros of Ai on the negative real axis.

use std::f64::consts::PI;

use super::airy::airy_eval;
use crate::numerics::{bisect, sign_change_brackets};
use crate::{Error, Result};

/// Leading asymptotic location of the j-th zero, −(3π(4j − 1)/8)^{2/3}.
pub fn ai_zero_asymptotic(j: usize) -> f64 {
    -(3.0 * PI * (4.0 * j as f64 - 1.0) / 8.0).powf(2.0 / 3.0)
}

/// The first `count` zeros of Ai, in decreasing order (−2.338…, −4.088…, …).
///
/// Ai is scanned from the origin with a step of at most 0.1 (tightened to a
/// quarter of the local zero spacing π/√|z| far out), every sign change is
/// bisected to 1e−12 and finished with one Newton step on Ai′.
pub fn ai_negative_zeros(count: usize) -> Result<Vec<f64>> {
    if count == 0 {
        return Err(Error::domain("ai_negative_zeros needs count >= 1"));
    }
    let end = 1.05 * ai_zero_asymptotic(count) - 1.0;
    let ai = |z: f64| airy_eval(z).map(|e| e.ai);
    let brackets = sign_change_brackets(ai, 0.0, end, |z: f64| {
        (0.1f64).min(0.25 * PI / z.abs().max(1.0).sqrt())
    })?;

    brackets
        .into_iter()
        .take(count)
        .map(|(a, b)| {
            let z = bisect(ai, a, b, 1e-12)?;
            let e = airy_eval(z)?;
            Ok(if e.ai_prime != 0.0 {
                z - e.ai / e.ai_prime
            } else {
                z
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_zero() {
        let z = ai_negative_zeros(1).unwrap();
        assert_eq!(z.len(), 1);
        assert!((z[0] + 2.338_107_410_459_767).abs() < 1e-12, "{}", z[0]);
        assert!(airy_eval(z[0]).unwrap().ai.abs() < 1e-15);
    }

    #[test]
    fn strictly_decreasing_and_separated() {
        let z = ai_negative_zeros(3).unwrap();
        assert_eq!(z.len(), 3);
        for w in z.windows(2) {
            assert!(w[0] - w[1] > 1.0);
        }
    }

    #[test]
    fn asymptotic_agreement_from_third_zero() {
        let z = ai_negative_zeros(40).unwrap();
        for (i, &zj) in z.iter().enumerate().skip(2) {
            let a = ai_zero_asymptotic(i + 1);
            assert!(((zj - a) / zj).abs() < 0.01);
        }
    }

    #[test]
    fn zero_count_rejected() {
        assert_eq!(ai_negative_zeros(0).unwrap_err().kind(), "domain");
    }

    #[test]
    fn dense_scan_finds_no_extra_zeros() {
        let zeros = ai_negative_zeros(25).unwrap();
        let last = *zeros.last().unwrap();
        let mut changes = 0;
        let mut prev = airy_eval(0.0).unwrap().ai;
        let n = 20_000;
        // Walk from 0 down to just past the last zero.
        let stop = last - 0.05;
        for i in 1..=n {
            let z = stop * i as f64 / n as f64;
            let v = airy_eval(z).unwrap().ai;
            if v.signum() != prev.signum() {
                changes += 1;
            }
            prev = v;
        }
        assert_eq!(changes, zeros.len());
    }
}
