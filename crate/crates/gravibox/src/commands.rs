//! One function per CLI command, each turning a resolved [`RunConfig`] into
//! a [`CsvTable`].

use gravibox_core::classical::{
    advance_ratio, classify_orbit, density, moments_y, simulate, LaunchSpec, OrbitClass, Period, Trajectory, WallHit,
};
use gravibox_core::quantum::{
    coarse_grained_l1, density_grid, exact_eps_bound, exact_spectrum, high_mode, low_mode, min_taylor_index,
    qm_moments_y, taylor_high_eps, wkb_low_eps, Method, ModeY, QuantumConfig, Regime,
};

use crate::config::{Mode, RunConfig};
use crate::csv::{format_real, Cell, CsvTable};
use crate::error::{HarnessError, Result};

/// Events listed for orbits that do not close.
const OPEN_ORBIT_EVENTS: u64 = 32;
/// Classical density samples closer than this fraction of h to the
/// turning point are clipped.
const CLIP_FRACTION: f64 = 1e-6;

pub fn run(config: &RunConfig) -> Result<CsvTable> {
    let mut table = match config.mode {
        Mode::Orbit => cmd_orbit(config),
        Mode::Cdensity => cmd_cdensity(config),
        Mode::Spectrum => cmd_spectrum(config),
        Mode::Wavefn => cmd_wavefn(config),
        Mode::Expect => cmd_expect(config),
        Mode::Compare => cmd_compare(config),
    }?;
    let mut meta = vec![("command".to_string(), config.mode.as_str().to_string())];
    meta.extend(config.metadata());
    meta.append(&mut table.metadata);
    table.metadata = meta;
    Ok(table)
}

fn invalid(msg: impl Into<String>) -> HarnessError {
    HarnessError::Config(msg.into())
}

fn sign(v: f64) -> i64 {
    if v > 0.0 {
        1
    } else if v < 0.0 {
        -1
    } else {
        0
    }
}

/// Evenly spaced points on [a, b], hitting both ends exactly.
fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![a];
    }
    (0..n)
        .map(|i| if i + 1 == n { b } else { a + (b - a) * i as f64 / (n - 1) as f64 })
        .collect()
}

fn grid_size(config: &RunConfig, key: &'static str) -> Result<usize> {
    let n = config.count(key);
    if n < 2 {
        return Err(invalid(format!("{key}: need at least 2 points, got {n}")));
    }
    Ok(n as usize)
}

pub fn launch_spec(config: &RunConfig) -> Result<LaunchSpec<f64>> {
    Ok(LaunchSpec::new(
        config.real("x0"),
        config.real("energy"),
        config.real("angle"),
        config.real("mass"),
        config.real("gravity"),
        config.real("side"),
    )?)
}

pub fn quantum_config(config: &RunConfig) -> Result<QuantumConfig> {
    let (hbar, mass, side) = (config.real("hbar"), config.real("mass"), config.real("side"));
    let gravity = match (config.opt_real("gravity"), config.opt_real("scale")) {
        (Some(g), _) => g,
        (None, Some(r)) => {
            if !(r > 0.0) {
                return Err(invalid(format!("scale: must be > 0, got {r}")));
            }
            hbar * hbar / (2.0 * mass * mass * r.powi(3))
        }
        (None, None) => unreachable!("resolve fills in a default scale"),
    };
    Ok(QuantumConfig::new(hbar, mass, gravity, side)?)
}

fn method(config: &RunConfig) -> Method {
    match config.text("method") {
        "paper" => Method::PaperApprox,
        _ => Method::ExactRoot,
    }
}

fn select_mode(qc: &QuantumConfig, regime: &str, index: u32, method: Method) -> Result<ModeY> {
    Ok(match regime {
        "low" => low_mode(qc, index, method)?,
        _ => high_mode(qc, index, method)?,
    })
}

fn describe_mode(qc: &QuantumConfig, mode: &ModeY) -> Vec<(String, String)> {
    let (tag, idx) = match mode.regime {
        Regime::Low(k) => ("low", k),
        Regime::High(r) => ("high", r),
    };
    [
        ("mode", format!("{tag}:{idx}")),
        ("eps", format_real(mode.eps)),
        ("energy_y", format_real(mode.energy)),
        ("turning_height", format_real(mode.height())),
        ("regime_flag", format_real(qc.ceiling() - mode.eps)),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v))
    .collect()
}

fn verdict_text(v: &OrbitClass) -> String {
    match v {
        OrbitClass::Periodic(Period::Commensurate { p, q }) => format!("periodic,p={p},q={q}"),
        OrbitClass::Periodic(Period::Vertical) => "periodic,vertical".into(),
        OrbitClass::Aperiodic => "aperiodic".into(),
        OrbitClass::CornerHit { corner, bounce_index } => {
            format!("corner_hit,corner={},bounce={bounce_index}", corner.as_str())
        }
    }
}

/// Velocity signs just after the event that ends segment `i`.
fn outgoing_signs(tr: &Trajectory<f64>, i: usize) -> (i64, i64) {
    if let Some(next) = tr.segments.get(i + 1) {
        return (next.x_direction as i64, sign(next.start_velocity.1));
    }
    let seg = &tr.segments[i];
    let (vx, vy) = (seg.x_direction as i64, sign(seg.end_velocity.1));
    match seg.wall_hit {
        WallHit::Floor => (vx, 1),
        WallHit::Ceiling => (vx, -1),
        WallHit::LeftWall | WallHit::RightWall => (-vx, vy),
        WallHit::Corner => (-vx, -vy),
    }
}

/// Wall events of one billiard run plus the orbit verdict.
///
/// Without `events`, a periodic orbit is listed for exactly one period and
/// a corner run up to the corner.
pub fn cmd_orbit(config: &RunConfig) -> Result<CsvTable> {
    let spec = launch_spec(config)?;
    let max_den = config.count("max_den");
    if max_den == 0 {
        return Err(invalid("max_den: must be >= 1"));
    }
    let verdict = classify_orbit(&spec, max_den);
    let (budget, period_floors) = match (config.opt_count("events"), verdict) {
        (Some(n), _) => (n, None),
        (None, OrbitClass::Periodic(Period::Commensurate { p, q })) => (4 * q + 6 * p + 8, Some(p as usize)),
        (None, OrbitClass::Periodic(Period::Vertical)) => (4, Some(1)),
        (None, _) => (OPEN_ORBIT_EVENTS, None),
    };
    let budget = usize::try_from(budget).map_err(|_| invalid("events: too large"))?;
    let mut tr = simulate(&spec, budget)?;
    if let Some(p) = period_floors {
        if let Some(&last) = tr.floor_events().get(p - 1) {
            tr.segments.truncate(last + 1);
        }
    }

    let mut table = CsvTable::new(&["event_index", "wall", "x", "y", "vx_sign", "vy_sign"]);
    table.meta("verdict", verdict_text(&verdict));
    table.meta("advance_ratio", format_real(advance_ratio(&spec)));
    let launch_vx = tr.segments.first().map_or(sign(spec.angle.cos()), |s| s.x_direction as i64);
    table.push(vec![0usize.into(), "launch".into(), spec.x0.into(), 0.0.into(), launch_vx.into(), 1i64.into()]);
    for (i, seg) in tr.segments.iter().enumerate() {
        let (vx, vy) = outgoing_signs(&tr, i);
        table.push(vec![
            (i + 1).into(),
            seg.wall_hit.as_str().into(),
            seg.end.0.into(),
            seg.end.1.into(),
            vx.into(),
            vy.into(),
        ]);
    }
    Ok(table)
}

/// Classical y density profile on [0, L]; samples within 1e-6·h below the
/// turning point are clipped there and flagged.
pub fn cmd_cdensity(config: &RunConfig) -> Result<CsvTable> {
    let (h, side) = (config.real("h"), config.real("side"));
    let ny = grid_size(config, "ny")?;
    let moments = moments_y(h, side)?;
    let mut table = CsvTable::new(&["y", "rho", "clipped"]);
    table.meta("mean_y", format_real(moments.mean));
    table.meta("stddev_y", format_real(moments.stddev));
    let clip_at = h - CLIP_FRACTION * h;
    for y in linspace(0.0, side, ny) {
        let clipped = y <= h && y > clip_at;
        let rho = density(if clipped { clip_at } else { y }, h, side)?.value;
        table.push(vec![y.into(), rho.into(), (clipped as i64).into()]);
    }
    Ok(table)
}

fn nearest(list: &[f64], x: f64) -> Option<f64> {
    list.iter().copied().min_by(|a, b| (a - x).abs().total_cmp(&(b - x).abs()))
}

/// Exact two-wall eigenvalues with WKB companions for modes below the
/// ceiling and Taylor companions wherever the expansion is admissible.
///
/// `eps_max`, when given, replaces `count`. Companion rows report their
/// relative distance to the nearest exact root.
pub fn cmd_spectrum(config: &RunConfig) -> Result<CsvTable> {
    let qc = quantum_config(config)?;
    let (exact, reference) = match config.opt_real("eps_max") {
        Some(eps_max) if eps_max <= 0.0 => (Vec::new(), Vec::new()),
        Some(eps_max) => {
            let modes = exact_spectrum(&qc, eps_max)?;
            let next = u32::try_from(modes.len() + 1).map_err(|_| invalid("eps_max: too many roots"))?;
            let reference = exact_spectrum(&qc, exact_eps_bound(&qc, next).max(eps_max))?;
            (modes, reference)
        }
        None => {
            let count = config.index("count")?;
            if count == 0 {
                (Vec::new(), Vec::new())
            } else {
                let reference = exact_spectrum(&qc, exact_eps_bound(&qc, count + 1))?;
                let mut modes = reference.clone();
                modes.truncate(count as usize);
                (modes, reference)
            }
        }
    };
    let roots: Vec<f64> = reference.iter().map(|m| m.eps).collect();

    let mut table = CsvTable::new(&["index", "method", "eps", "E_y", "regime_flag", "rel_diff_vs_exact"]);
    let min_taylor = min_taylor_index(&qc);
    table.meta("min_taylor_index", min_taylor);
    let row = |table: &mut CsvTable, m: u32, method: &str, eps: f64, against: f64| {
        table.push(vec![
            m.into(),
            method.into(),
            eps.into(),
            qc.energy_of_eps(eps).into(),
            (qc.ceiling() - eps).into(),
            ((eps - against) / against).abs().into(),
        ]);
    };
    for (i, mode) in exact.iter().enumerate() {
        let m = i as u32 + 1;
        row(&mut table, m, "exact", mode.eps, mode.eps);
        if let Regime::Low(_) = mode.regime {
            row(&mut table, m, "wkb", wkb_low_eps(m)?, mode.eps);
        }
        if m >= min_taylor {
            let eps = taylor_high_eps(&qc, m)?;
            row(&mut table, m, "taylor", eps, nearest(&roots, eps).unwrap_or(mode.eps));
        }
    }
    Ok(table)
}

/// |Y|² profile of one y mode, or with `n` set the full |X_n Y|² grid.
pub fn cmd_wavefn(config: &RunConfig) -> Result<CsvTable> {
    let qc = quantum_config(config)?;
    let ny = grid_size(config, "ny")?;
    let mode = select_mode(&qc, config.text("regime"), config.index("index")?, method(config))?;
    let mut table = match config.opt_count("n") {
        None => {
            let mut t = CsvTable::new(&["y", "psi", "rho"]);
            for y in linspace(0.0, qc.side, ny) {
                let psi = mode.value(y)?;
                t.push(vec![y.into(), psi.into(), (psi * psi).into()]);
            }
            t
        }
        Some(n) => {
            let n = u32::try_from(n).map_err(|_| invalid("n: too large"))?;
            let nx = grid_size(config, "nx")?;
            let grid = density_grid(&qc, n, &mode, nx, ny)?;
            let mut t = CsvTable::new(&["x", "y", "rho"]);
            let (lx, ly) = grid.lobes();
            t.meta("lobes", format!("{lx}x{ly}"));
            for j in 0..grid.ny {
                for i in 0..grid.nx {
                    t.push(vec![grid.xs[i].into(), grid.ys[j].into(), grid.at(i, j).into()]);
                }
            }
            t
        }
    };
    let mut meta = describe_mode(&qc, &mode);
    meta.append(&mut table.metadata);
    table.metadata = meta;
    Ok(table)
}

/// ⟨y⟩ and Δy along a sweep of turning heights or quantum numbers.
pub fn cmd_expect(config: &RunConfig) -> Result<CsvTable> {
    let mut table = CsvTable::new(&["sweep_value", "mean_y", "stddev_y", "mean_minus", "mean_plus", "source"]);
    let push = |table: &mut CsvTable, x: Cell, mean: f64, sd: f64, source: &str| {
        table.push(vec![x, mean.into(), sd.into(), (mean - sd).into(), (mean + sd).into(), source.into()]);
    };
    if config.text("sweep") == "classical" {
        let (lo, hi, side) = (config.real("h_min"), config.real("h_max"), config.real("side"));
        let steps = config.count("steps") as usize;
        if !(lo > 0.0 && hi >= lo) || steps == 0 {
            return Err(invalid(format!("classical sweep needs 0 < h_min <= h_max and steps >= 1, got [{lo}, {hi}] x {steps}")));
        }
        let hs = linspace(lo, hi, steps);
        let rows = hs.iter().map(|&h| moments_y(h, side)).collect::<Result<Vec<_>, _>>()?;
        for (h, m) in hs.into_iter().zip(rows) {
            push(&mut table, h.into(), m.mean, m.stddev, "classical");
        }
        return Ok(table);
    }
    let qc = quantum_config(config)?;
    let (lo, hi) = (config.index("index_min")?, config.index("index_max")?);
    if lo == 0 || hi < lo {
        return Err(invalid(format!("quantum sweep needs 1 <= index_min <= index_max, got {lo}..{hi}")));
    }
    let m = method(config);
    let mut reports = Vec::new();
    for idx in lo..=hi {
        let mode = select_mode(&qc, config.text("regime"), idx, m)?;
        reports.push((idx, qm_moments_y(&qc, &mode)?));
    }
    for (idx, r) in reports {
        push(&mut table, idx.into(), r.mean, r.stddev, r.source.as_str());
    }
    Ok(table)
}

/// Bin-wise quantum and classical y probabilities for one mode and the
/// classical motion with the same vertical energy.
pub fn cmd_compare(config: &RunConfig) -> Result<CsvTable> {
    let qc = quantum_config(config)?;
    let bins = config.count("bins") as usize;
    let mode = select_mode(&qc, config.text("regime"), config.index("index")?, method(config))?;
    let cmp = coarse_grained_l1(&qc, &mode, bins)?;
    let mut table = CsvTable::new(&["bin", "y_lo", "y_hi", "quantum", "classical", "abs_diff"]);
    table.metadata = describe_mode(&qc, &mode);
    table.meta("l1", format_real(cmp.l1));
    for (i, w) in cmp.edges.windows(2).enumerate() {
        let (q, c) = (cmp.quantum[i], cmp.classical[i]);
        table.push(vec![i.into(), w[0].into(), w[1].into(), q.into(), c.into(), (q - c).abs().into()]);
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linspace_hits_ends() {
        let v = linspace(0.05, 5.0, 100);
        assert_eq!((v[0], v[99]), (0.05, 5.0));
        assert!((v[19] - 1.0).abs() < 1e-15);
        assert_eq!(linspace(2.0, 3.0, 1), vec![2.0]);
    }

    #[test]
    fn scale_and_gravity_agree() {
        let flags = [("scale".to_string(), "0.1".to_string())];
        let c = RunConfig::resolve(Mode::Spectrum, &[], &flags, None).unwrap();
        let qc = quantum_config(&c).unwrap();
        assert!((qc.scale() - 0.1).abs() < 1e-15);
        assert!((qc.gravity - 500.0).abs() < 1e-12);
        let defaulted = RunConfig::resolve(Mode::Spectrum, &[], &[], None).unwrap();
        assert_eq!(defaulted.real("scale"), 0.1);
        let both = [flags[0].clone(), ("gravity".to_string(), "500".to_string())];
        assert!(RunConfig::resolve(Mode::Spectrum, &[], &both, None).is_err());
    }

    #[test]
    fn outgoing_signs_reflect_last_event() {
        let spec = LaunchSpec::natural(0.37, 0.5, std::f64::consts::FRAC_PI_4).unwrap();
        let tr = simulate(&spec, 3).unwrap();
        for i in 0..tr.segments.len() {
            let (vx, vy) = outgoing_signs(&tr, i);
            assert!(vx.abs() == 1 && vy.abs() == 1);
            if tr.segments[i].wall_hit == WallHit::Floor {
                assert_eq!(vy, 1);
            }
        }
    }
}
