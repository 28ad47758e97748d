//! Airy modes in y: floor-only low-energy modes, Taylor-approximated
//! high-energy modes and the exact two-wall spectrum.

use std::f64::consts::PI;

use super::config::QuantumConfig;
use crate::numerics::{bisect, sign_change_brackets};
use crate::specialfn::{ai_negative_zeros, airy_eval, AiryEval};
use crate::{Error, Result};

/// Quantum-number family of a y mode.
///
/// Modes from [`exact_spectrum`] carry their ordinal in the exact list and
/// are tagged `Low` while the turning point R·ε lies below the ceiling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Low(u32),
    High(u32),
}

impl Regime {
    pub fn index(self) -> u32 {
        match self {
            Regime::Low(k) | Regime::High(k) => k,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// WKB or Taylor eigenvalue with the closed-form normalization.
    PaperApprox,
    /// Root-found eigenvalue, normalized on [0, L].
    ExactRoot,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::PaperApprox => "paper",
            Method::ExactRoot => "exact",
        }
    }
}

/// Which walls the mode is built to vanish on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Walls {
    /// Pure Ai mode; the ceiling is ignored.
    Floor,
    /// Ai/Bi combination meant to vanish at y = 0 and y = L.
    FloorAndCeiling,
}

/// A y eigenmode Y(y) = norm·[Ai(y/R − ε) + coeff_ratio·Bi(y/R − ε)].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeY {
    pub regime: Regime,
    pub eps: f64,
    pub energy: f64,
    pub coeff_ratio: f64,
    pub norm: f64,
    pub method: Method,
    pub walls: Walls,
    pub scale: f64,
    pub side: f64,
}

impl ModeY {
    pub fn z(&self, y: f64) -> f64 {
        y / self.scale - self.eps
    }

    /// Unnormalized combination w(z) and w'(z).
    fn combo(&self, e: &AiryEval) -> (f64, f64) {
        (
            e.ai + self.coeff_ratio * e.bi,
            e.ai_prime + self.coeff_ratio * e.bi_prime,
        )
    }

    pub fn value(&self, y: f64) -> Result<f64> {
        let e = airy_eval(self.z(y))?;
        Ok(self.norm * self.combo(&e).0)
    }

    pub fn density(&self, y: f64) -> Result<f64> {
        self.value(y).map(|v| v * v)
    }

    /// dY/dz; dY/dy is this divided by R.
    pub fn derivative_z(&self, y: f64) -> Result<f64> {
        let e = airy_eval(self.z(y))?;
        Ok(self.norm * self.combo(&e).1)
    }

    /// Classical turning height R·ε = E_y/(mg).
    pub fn height(&self) -> f64 {
        self.scale * self.eps
    }

    /// Sign changes of Y on a uniform grid strictly inside (0, L).
    ///
    /// Exact zeros at interior grid points count once; the end points are
    /// excluded because the wall zeros are not interior.
    pub fn interior_zeros(&self, samples: usize) -> Result<usize> {
        let n = samples.max(3);
        let h = self.side / n as f64;
        let mut count = 0;
        let mut prev = self.value(h)?;
        for i in 2..n {
            let v = self.value(i as f64 * h)?;
            if v == 0.0 || (prev != 0.0 && v.signum() != prev.signum()) {
                count += 1;
            }
            prev = v;
        }
        Ok(count)
    }
}

/// ∫ w² dz = z·w² − w'² for any solution w of the Airy equation.
fn square_antideriv(z: f64, w: f64, wp: f64) -> f64 {
    z * w * w - wp * wp
}

/// Normalization on [0, L] for the combination Ai + c·Bi at energy ε.
fn normalize(config: &QuantumConfig, eps: f64, c: f64) -> Result<f64> {
    let r = config.scale();
    let (zm, zp) = (-eps, config.ceiling() - eps);
    let (em, ep) = (airy_eval(zm)?, airy_eval(zp)?);
    let (wm, wpm) = (em.ai + c * em.bi, em.ai_prime + c * em.bi_prime);
    let (wp, wpp) = (ep.ai + c * ep.bi, ep.ai_prime + c * ep.bi_prime);
    let mass = square_antideriv(zp, wp, wpp) - square_antideriv(zm, wm, wpm);
    if !(mass > 0.0) {
        return Err(Error::domain(format!("non-positive norm integral {mass} at eps = {eps}")));
    }
    Ok(1.0 / (r * mass).sqrt())
}

/// WKB eigenvalue (3π/2·(k − ¼))^{2/3} of the floor-only problem.
pub fn wkb_low_eps(k: u32) -> Result<f64> {
    if k == 0 {
        return Err(Error::domain("low-energy quantum number k must be >= 1"));
    }
    Ok((1.5 * PI * (k as f64 - 0.25)).powf(2.0 / 3.0))
}

/// Low-energy mode Y_k ∝ Ai(y/R − ε_k), valid while R·ε_k < L.
pub fn low_mode(config: &QuantumConfig, k: u32, method: Method) -> Result<ModeY> {
    let r = config.scale();
    let (eps, norm) = match method {
        Method::PaperApprox => {
            let eps = wkb_low_eps(k)?;
            check_below_ceiling(config, k, eps)?;
            let aip = airy_eval(-eps)?.ai_prime;
            (eps, 1.0 / (r * aip * aip).sqrt())
        }
        Method::ExactRoot => {
            if k == 0 {
                return Err(Error::domain("low-energy quantum number k must be >= 1"));
            }
            let eps = -ai_negative_zeros(k as usize)?[k as usize - 1];
            check_below_ceiling(config, k, eps)?;
            (eps, normalize(config, eps, 0.0)?)
        }
    };
    Ok(ModeY {
        regime: Regime::Low(k),
        eps,
        energy: config.energy_of_eps(eps),
        coeff_ratio: 0.0,
        norm,
        method,
        walls: Walls::Floor,
        scale: r,
        side: config.side,
    })
}

fn check_below_ceiling(config: &QuantumConfig, k: u32, eps: f64) -> Result<()> {
    let turning = config.height_of_eps(eps);
    if turning >= config.side {
        return Err(Error::Regime(format!(
            "low-energy mode k = {k} has turning point R*eps = {turning} >= L = {}; \
             use high_mode or exact_spectrum",
            config.side
        )));
    }
    Ok(())
}

/// Boundary determinant Ai(−ε)·Bi(L/R − ε) − Bi(−ε)·Ai(L/R − ε).
pub fn det_boundary(config: &QuantumConfig, eps: f64) -> Result<f64> {
    if !(eps.is_finite() && eps > 0.0) {
        return Err(Error::domain(format!("eps must be finite and > 0, got {eps}")));
    }
    det_raw(config.ceiling(), eps)
}

fn det_raw(ceiling: f64, eps: f64) -> Result<f64> {
    let (m, p) = (airy_eval(-eps)?, airy_eval(ceiling - eps)?);
    Ok(m.ai * p.bi - m.bi * p.ai)
}

/// Scan step that keeps at most one eigenvalue per step.
fn scan_step(config: &QuantumConfig) -> f64 {
    let w = PI * config.scale() / config.side;
    (0.05f64).min(w * w / 4.0)
}

/// Every root of the boundary determinant in (0, eps_max], ascending, as
/// normalized two-wall modes.
pub fn exact_spectrum(config: &QuantumConfig, eps_max: f64) -> Result<Vec<ModeY>> {
    if !(eps_max.is_finite() && eps_max > 0.0) {
        return Err(Error::domain(format!("eps_max must be finite and > 0, got {eps_max}")));
    }
    let ceiling = config.ceiling();
    let det = |e: f64| det_raw(ceiling, e);
    let step = scan_step(config);
    let brackets = sign_change_brackets(det, 0.0, eps_max, |_| step)?;
    let mut modes: Vec<ModeY> = Vec::with_capacity(brackets.len());
    for (a, b) in brackets {
        let eps = if a == b { a } else { bisect(det, a, b, 1e-13 * b.max(1.0))? };
        if eps <= 0.0 || modes.last().is_some_and(|m| m.eps >= eps) {
            continue;
        }
        let ordinal = modes.len() as u32 + 1;
        modes.push(two_wall_mode(config, eps, ordinal)?);
    }
    Ok(modes)
}

/// Normalized two-wall mode at a root of the boundary determinant.
///
/// The coefficient ratio is taken from the wall where |Bi| is larger so that
/// it stays well conditioned on either side of the turning point.
fn two_wall_mode(config: &QuantumConfig, eps: f64, ordinal: u32) -> Result<ModeY> {
    let (m, p) = (airy_eval(-eps)?, airy_eval(config.ceiling() - eps)?);
    let c = if m.bi.abs() >= p.bi.abs() {
        -m.ai / m.bi
    } else {
        -p.ai / p.bi
    };
    let regime = if config.height_of_eps(eps) < config.side {
        Regime::Low(ordinal)
    } else {
        Regime::High(ordinal)
    };
    Ok(ModeY {
        regime,
        eps,
        energy: config.energy_of_eps(eps),
        coeff_ratio: c,
        norm: normalize(config, eps, c)?,
        method: Method::ExactRoot,
        walls: Walls::FloorAndCeiling,
        scale: config.scale(),
        side: config.side,
    })
}

fn taylor_raw(config: &QuantumConfig, r: u32) -> f64 {
    let rr = config.scale();
    let l = config.side;
    let rf = r as f64;
    let a = rf * PI * rr / (2.0 * l);
    let inner = 1.0 + (1.0 + (l / rr).powi(3) / (PI * PI * rf * rf)).sqrt();
    a * a * inner * inner
}

fn taylor_admissible(config: &QuantumConfig, r: u32) -> bool {
    config.ceiling() - taylor_raw(config, r) < -1.0
}

/// Smallest r whose Taylor eigenvalue satisfies L/R − ε < −1.
pub fn min_taylor_index(config: &QuantumConfig) -> u32 {
    if taylor_admissible(config, 1) {
        return 1;
    }
    let mut hi = 2u32;
    while !taylor_admissible(config, hi) {
        if hi >= u32::MAX / 2 {
            return u32::MAX;
        }
        hi *= 2;
    }
    let mut lo = hi / 2;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if taylor_admissible(config, mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// Second-order Taylor eigenvalue
/// (r²π²R²/4L²)·[1 + √(1 + L³/(R³π²r²))]², valid for L/R − ε < −1.
pub fn taylor_high_eps(config: &QuantumConfig, r: u32) -> Result<f64> {
    if r == 0 {
        return Err(Error::domain("high-energy quantum number r must be >= 1"));
    }
    let eps = taylor_raw(config, r);
    if config.ceiling() - eps >= -1.0 {
        return Err(Error::Regime(format!(
            "taylor eigenvalue for r = {r} has L/R - eps = {} >= -1; smallest admissible r is {}",
            config.ceiling() - eps,
            min_taylor_index(config)
        )));
    }
    Ok(eps)
}

/// Upper bound on the r-th two-wall eigenvalue: free-well energy plus mgL.
pub fn exact_eps_bound(config: &QuantumConfig, r: u32) -> f64 {
    let w = PI * config.scale() * r as f64 / config.side;
    w * w + config.ceiling() + 1.0
}

/// High-energy mode for quantum number r.
///
/// `PaperApprox` evaluates the Taylor eigenvalue with c = −Ai₋/Bi₋ and the
/// closed-form normalization; `ExactRoot` takes the r-th root of the
/// boundary determinant, which must have its turning point at or above L.
pub fn high_mode(config: &QuantumConfig, r: u32, method: Method) -> Result<ModeY> {
    match method {
        Method::PaperApprox => {
            let eps = taylor_high_eps(config, r)?;
            let rr = config.scale();
            let (m, p) = (airy_eval(-eps)?, airy_eval(config.ceiling() - eps)?);
            let c = -m.ai / m.bi;
            let dm = m.ai_prime + c * m.bi_prime;
            let dp = p.ai_prime + c * p.bi_prime;
            let d = dm * dm - dp * dp;
            if !(d > 0.0) {
                return Err(Error::domain(format!(
                    "closed-form normalization is not positive ({d}) for r = {r}"
                )));
            }
            Ok(ModeY {
                regime: Regime::High(r),
                eps,
                energy: config.energy_of_eps(eps),
                coeff_ratio: c,
                norm: 1.0 / (rr * d).sqrt(),
                method,
                walls: Walls::FloorAndCeiling,
                scale: rr,
                side: config.side,
            })
        }
        Method::ExactRoot => {
            if r == 0 {
                return Err(Error::domain("high-energy quantum number r must be >= 1"));
            }
            let modes = exact_spectrum(config, exact_eps_bound(config, r))?;
            let mode = *modes.get(r as usize - 1).ok_or_else(|| {
                Error::domain(format!("only {} exact roots found below the r = {r} bound", modes.len()))
            })?;
            if mode.regime != Regime::High(r) {
                return Err(Error::Regime(format!(
                    "exact root {r} has turning point R*eps = {} < L = {}; use low_mode",
                    mode.height(),
                    config.side
                )));
            }
            Ok(mode)
        }
    }
}

/// Ji₊ = w'₊² / (w'₋² − w'₊²) for two-wall modes, where w = Ai + c·Bi and
/// the subscripts mark z = −ε and z = L/R − ε.
///
/// For a mode normalized in y this equals R·(dY/dz)² at the ceiling.
pub fn ji_plus(config: &QuantumConfig, mode: &ModeY) -> Result<f64> {
    if let Regime::Low(k) = mode.regime {
        return Err(Error::domain(format!(
            "Ji+ is defined for high-energy modes only (got low-energy k = {k})"
        )));
    }
    ji_plus_unchecked(config, mode)
}

pub(crate) fn ji_plus_unchecked(config: &QuantumConfig, mode: &ModeY) -> Result<f64> {
    let (m, p) = (airy_eval(-mode.eps)?, airy_eval(config.ceiling() - mode.eps)?);
    let dm = mode.combo(&m).1;
    let dp = mode.combo(&p).1;
    Ok(dp * dp / (dm * dm - dp * dp))
}
