use std::collections::BTreeMap;
use std::process::Command;

use gravibox::Mode;

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn gravibox(args: &[&str]) -> Output {
    let out = Command::new(env!("CARGO_BIN_EXE_gravibox")).args(args).output().unwrap();
    Output {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

struct Csv {
    version: String,
    meta: BTreeMap<String, String>,
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Csv {
    fn parse(text: &str) -> Csv {
        let mut lines = text.lines();
        let version = lines.next().unwrap().to_string();
        let mut meta = BTreeMap::new();
        let mut header = None;
        let mut rows = Vec::new();
        for line in lines {
            if let Some(kv) = line.strip_prefix("# ") {
                assert!(header.is_none(), "comment after the header: {line}");
                let (k, v) = kv.split_once('=').unwrap();
                meta.insert(k.to_string(), v.to_string());
            } else if header.is_none() {
                header = Some(line.split(',').map(String::from).collect::<Vec<_>>());
            } else {
                rows.push(line.split(',').map(String::from).collect::<Vec<_>>());
            }
        }
        let header = header.expect("header row");
        assert!(rows.iter().all(|r| r.len() == header.len()), "ragged table");
        Csv {
            version,
            meta,
            header,
            rows,
        }
    }

    fn col(&self, name: &str) -> usize {
        self.header.iter().position(|h| h == name).unwrap_or_else(|| panic!("no column {name}"))
    }

    fn reals(&self, name: &str) -> Vec<f64> {
        let c = self.col(name);
        self.rows.iter().map(|r| r[c].parse().unwrap()).collect()
    }

    fn texts(&self, name: &str) -> Vec<&str> {
        let c = self.col(name);
        self.rows.iter().map(|r| r[c].as_str()).collect()
    }

    fn meta_real(&self, key: &str) -> f64 {
        self.meta[key].parse().unwrap()
    }
}

fn run_ok(args: &[&str]) -> Csv {
    let out = gravibox(args);
    assert_eq!(out.code, 0, "{args:?} failed: {}", out.stderr);
    Csv::parse(&out.stdout)
}

fn error_kind(args: &[&str]) -> String {
    let out = gravibox(args);
    assert_ne!(out.code, 0);
    assert!(out.stdout.is_empty());
    assert_eq!(out.stderr.lines().count(), 1, "{}", out.stderr);
    let v: serde_json::Value = serde_json::from_str(out.stderr.trim()).unwrap();
    assert!(v["message"].as_str().is_some_and(|m| !m.is_empty()));
    v["error"].as_str().unwrap().to_string()
}

#[test]
fn preamble_and_number_format() {
    let csv = run_ok(&["cdensity", "--ny", "3"]);
    assert_eq!(csv.version, format!("# gravibox v{}", env!("CARGO_PKG_VERSION")));
    assert_eq!(csv.meta["command"], "cdensity");
    for cell in csv.texts("rho") {
        let mantissa = cell.split('e').next().unwrap().trim_start_matches('-');
        assert_eq!(mantissa.len(), 18, "{cell}");
    }
}

#[test]
fn diagonal_launch_closes_after_one_floor_bounce() {
    let csv = run_ok(&["orbit", "--angle", "0.78539816339744828", "--energy", "1", "--x0", "0"]);
    assert_eq!(csv.meta["verdict"], "periodic,p=1,q=1");
    assert_eq!(csv.texts("wall").first(), Some(&"launch"));
    let (x, y) = (csv.reals("x"), csv.reals("y"));
    assert!((x.last().unwrap() - 0.0).abs() < 1e-12 && *y.last().unwrap() == 0.0);
}

#[test]
fn vertical_launch_lists_two_events_per_period() {
    let csv = run_ok(&["orbit", "--angle", "1.5707963267948966", "--energy", "2", "--x0", "0.4"]);
    assert_eq!(csv.meta["verdict"], "periodic,vertical");
    assert_eq!(csv.texts("wall"), ["launch", "ceiling", "floor"]);
    assert!(csv.reals("x").iter().all(|&x| x == 0.4));
    let csv = run_ok(&["orbit", "--angle", "1.5707963267948966", "--energy", "2", "--x0", "0.4", "--events", "6"]);
    assert_eq!(csv.texts("wall")[1..], ["ceiling", "floor"].repeat(3));
    assert_eq!(csv.texts("vy_sign")[1..], ["-1", "1"].repeat(3));
}

#[test]
fn corner_aimed_launch_and_its_perturbation() {
    // range 2E·sin 2φ/(mg) = 0.75 carries x0 = 0.25 exactly onto the corner
    let csv = run_ok(&["orbit", "--x0", "0.25", "--energy", "0.375"]);
    assert_eq!(csv.meta["verdict"], "corner_hit,corner=B,bounce=1");
    assert_eq!(csv.texts("wall"), ["launch", "corner"]);
    for e in ["0.37500001", "0.37499999"] {
        let csv = run_ok(&["orbit", "--x0", "0.25", "--energy", e]);
        assert!(!csv.meta["verdict"].starts_with("corner_hit"), "{e}: {}", csv.meta["verdict"]);
    }
}

#[test]
fn orbit_rows_follow_the_trajectory() {
    let csv = run_ok(&["orbit", "--x0", "0.3", "--energy", "1.3", "--angle", "0.9"]);
    assert_eq!(csv.meta["verdict"], "aperiodic");
    assert_eq!(csv.rows.len(), 33);
    let walls = csv.texts("wall");
    let (x, y) = (csv.reals("x"), csv.reals("y"));
    for i in 1..walls.len() {
        match walls[i] {
            "floor" => assert_eq!(y[i], 0.0),
            "ceiling" => assert_eq!(y[i], 1.0),
            "left" => assert_eq!(x[i], 0.0),
            "right" => assert_eq!(x[i], 1.0),
            other => panic!("unexpected wall {other}"),
        }
    }
}

#[test]
fn invalid_input_gives_one_json_error_line() {
    assert_eq!(error_kind(&["orbit", "--energy", "-1"]), "invalid_parameter");
    assert_eq!(error_kind(&["orbit", "--angle", "4"]), "invalid_parameter");
    assert_eq!(error_kind(&["orbit", "--scale", "0.1"]), "config");
    assert_eq!(error_kind(&["orbit", "--energy"]), "usage");
    assert_eq!(error_kind(&["spectrum", "--scale", "0.1", "--gravity", "500"]), "config");
    assert_eq!(error_kind(&["wavefn", "--index", "5"]), "regime");
    assert_eq!(error_kind(&["cdensity", "--ny", "1"]), "config");
    assert_eq!(error_kind(&["orbit", "--config", "/nonexistent/gravibox.cfg"]), "io");
}

const REFERENCE_ROOTS: [f64; 15] = [
    2.3381074, 4.0879494, 5.5205605, 6.7867934, 7.9473772, 9.0646078, 10.2611499, 11.6483552, 13.2562411,
    15.0810801, 17.1166187, 19.3585805, 21.8042401, 24.4518270, 27.3001543,
];

fn rows_of<'a>(csv: &'a Csv, method: &str) -> Vec<&'a Vec<String>> {
    let c = csv.col("method");
    csv.rows.iter().filter(|r| r[c] == method).collect()
}

#[test]
fn spectrum_lists_exact_roots_with_companions() {
    let csv = run_ok(&["spectrum", "--scale", "0.1", "--side", "1"]);
    let (ie, ic, iflag, idiff) = (csv.col("eps"), csv.col("index"), csv.col("regime_flag"), csv.col("rel_diff_vs_exact"));
    let exact = rows_of(&csv, "exact");
    assert_eq!(exact.len(), 15);
    for (row, reference) in exact.iter().zip(REFERENCE_ROOTS) {
        let eps: f64 = row[ie].parse().unwrap();
        assert!((eps - reference).abs() < 1e-6, "{eps} vs {reference}");
        let flag: f64 = row[iflag].parse().unwrap();
        assert!((flag - (10.0 - eps)).abs() < 1e-9);
    }
    // WKB rows exist exactly while the turning point is below the ceiling
    let wkb: Vec<&str> = rows_of(&csv, "wkb").iter().map(|r| r[ic].as_str()).collect();
    assert_eq!(wkb, ["1", "2", "3", "4", "5", "6"]);
    let taylor = rows_of(&csv, "taylor");
    assert_eq!(taylor.first().unwrap()[ic], csv.meta["min_taylor_index"]);
    for row in taylor {
        let eps: f64 = row[ie].parse().unwrap();
        let nearest = REFERENCE_ROOTS
            .iter()
            .copied()
            .min_by(|a, b| (a - eps).abs().total_cmp(&(b - eps).abs()))
            .unwrap();
        let reported: f64 = row[idiff].parse().unwrap();
        assert!((reported - (eps - nearest).abs() / nearest).abs() < 1e-7);
    }
}

#[test]
#[ignore = "Taylor rows r = 9..15 at R = 0.1 sit 1.2% to 5.7% from the exact roots"]
fn taylor_rows_beyond_the_ceiling_within_one_percent() {
    let csv = run_ok(&["spectrum", "--scale", "0.1", "--side", "1"]);
    let (iflag, idiff) = (csv.col("regime_flag"), csv.col("rel_diff_vs_exact"));
    for row in rows_of(&csv, "taylor") {
        let flag: f64 = row[iflag].parse().unwrap();
        let diff: f64 = row[idiff].parse().unwrap();
        if flag < -2.0 {
            assert!(diff < 0.01, "r = {}: {diff}", row[0]);
        }
    }
}

#[test]
fn taylor_rows_converge_at_higher_order() {
    let csv = run_ok(&["spectrum", "--scale", "0.1", "--count", "60"]);
    let idiff = csv.col("rel_diff_vs_exact");
    let diffs: Vec<f64> = rows_of(&csv, "taylor").iter().map(|r| r[idiff].parse().unwrap()).collect();
    assert!(diffs.windows(2).all(|w| w[1] < w[0]));
    assert!(*diffs.last().unwrap() < 0.01);
}

#[test]
fn empty_spectrum_range_is_header_only() {
    for args in [["spectrum", "--eps_max", "1"], ["spectrum", "--count", "0"]] {
        let out = gravibox(&args);
        assert_eq!(out.code, 0);
        let csv = Csv::parse(&out.stdout);
        assert!(csv.rows.is_empty());
        assert_eq!(csv.header.len(), 6);
    }
}

#[test]
fn classical_expectation_peaks_at_the_ceiling() {
    let csv = run_ok(&["expect", "--h_min", "0.05", "--h_max", "5", "--side", "1"]);
    let (h, mean) = (csv.reals("sweep_value"), csv.reals("mean_y"));
    let top = (0..mean.len()).max_by(|&a, &b| mean[a].total_cmp(&mean[b])).unwrap();
    assert!((h[top] - 1.0).abs() < 1e-12);
    assert!((mean[top] - 2.0 / 3.0).abs() < 1e-12);
    let last = *mean.last().unwrap();
    assert!(last < 2.0 / 3.0 && (last - 0.5).abs() < 0.01);
    assert!(mean[top..].windows(2).all(|w| w[1] < w[0]));
    let (sd, lo, hi) = (csv.reals("stddev_y"), csv.reals("mean_minus"), csv.reals("mean_plus"));
    for i in 0..mean.len() {
        assert_eq!(lo[i], mean[i] - sd[i]);
        assert_eq!(hi[i], mean[i] + sd[i]);
    }
}

#[test]
fn quantum_expectation_approaches_half_the_box() {
    let csv = run_ok(&["expect", "--sweep", "quantum", "--scale", "0.1", "--index_min", "12", "--index_max", "40"]);
    let mean = csv.reals("mean_y");
    assert_eq!(mean.len(), 29);
    assert!((mean[0] - 0.5295358).abs() < 1e-6);
    assert!(mean.windows(2).all(|w| w[1] < w[0]));
    assert!((mean.last().unwrap() - 0.5).abs() < 5e-3);
    assert!(csv.texts("source").iter().all(|s| *s == "closed_form"));
}

#[test]
fn classical_profiles() {
    let csv = run_ok(&["cdensity", "--h", "0.5", "--side", "1", "--ny", "101"]);
    let (y, rho) = (csv.reals("y"), csv.reals("rho"));
    let clipped = csv.texts("clipped");
    let turn = y.iter().position(|&v| v == 0.5).unwrap();
    assert!(rho[..=turn].windows(2).all(|w| w[1] > w[0]));
    assert_eq!(clipped[turn], "1");
    assert!(rho[turn] > 100.0 * rho[0]);
    assert!(rho[turn + 1..].iter().all(|&r| r == 0.0));
    assert_eq!(clipped.iter().filter(|c| **c == "1").count(), 1);

    let flat = run_ok(&["cdensity", "--h", "1e8", "--side", "2", "--ny", "21"]);
    assert!(flat.reals("rho").iter().all(|r| (r - 0.25).abs() < 1e-7));
}

#[test]
fn wavefunction_profiles_and_grids() {
    let csv = run_ok(&["wavefn", "--index", "12", "--ny", "201"]);
    let (psi, rho) = (csv.reals("psi"), csv.reals("rho"));
    assert!(psi[0].abs() < 1e-10 && psi.last().unwrap().abs() < 1e-10);
    let step = 1.0 / 200.0;
    let mass: f64 = rho.iter().sum::<f64>() * step;
    assert!((mass - 1.0).abs() < 1e-3);

    let grid = run_ok(&["wavefn", "--index", "12", "--n", "4", "--nx", "201", "--ny", "401"]);
    assert_eq!(grid.meta["lobes"], "4x12");
    assert_eq!(grid.rows.len(), 201 * 401);
    let (x, y) = (grid.reals("x"), grid.reals("y"));
    assert_eq!((x[1], y[1]), (1.0 / 200.0, 0.0));
    assert_eq!((x[201], y[201]), (0.0, 1.0 / 400.0));

    let low = run_ok(&["wavefn", "--regime", "low", "--index", "3", "--n", "4", "--ny", "201"]);
    assert_eq!(low.meta["lobes"], "4x3");
    assert_eq!(low.meta["mode"], "low:3");
}

#[test]
fn correspondence_improves_with_quantum_number() {
    let l1 = |r: &str| {
        let csv = run_ok(&["compare", "--scale", "0.1", "--side", "1", "--bins", "10", "--index", r]);
        assert_eq!(csv.rows.len(), 10);
        let diffs: f64 = csv.reals("abs_diff").iter().sum();
        assert!((diffs - csv.meta_real("l1")).abs() < 1e-15);
        assert!((csv.reals("quantum").iter().sum::<f64>() - 1.0).abs() < 1e-12);
        csv.meta_real("l1")
    };
    assert!(l1("40") < l1("12"));
}

#[test]
fn identical_config_gives_identical_bytes() {
    for args in [
        &["orbit", "--x0", "0.3", "--energy", "1.3", "--angle", "0.9"][..],
        &["spectrum", "--count", "20"],
        &["compare", "--index", "20"],
        &["wavefn", "--n", "2", "--nx", "11", "--ny", "11"],
    ] {
        let a = gravibox(args);
        let b = gravibox(args);
        assert_eq!(a.code, 0);
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn config_file_out_file_and_rerun_from_preamble() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    std::fs::write(&cfg, "# diagonal launch\nenergy = 5\nx0=0.2\n").unwrap();
    let out = dir.path().join("orbit.csv");
    let cfg_s = cfg.to_str().unwrap();
    let out_s = out.to_str().unwrap();
    let res = gravibox(&["orbit", "--energy", "0.7", "--config", cfg_s, "--out", out_s]);
    assert_eq!(res.code, 0, "{}", res.stderr);
    assert!(res.stdout.is_empty());
    let written = std::fs::read_to_string(&out).unwrap();
    let csv = Csv::parse(&written);
    assert_eq!(csv.meta_real("energy"), 0.7);
    assert_eq!(csv.meta_real("x0"), 0.2);

    // parameter lines alone reproduce the run
    let keys: Vec<&str> = Mode::Orbit.params().iter().map(|p| p.key).collect();
    let params: String = csv
        .meta
        .iter()
        .filter(|(k, _)| keys.contains(&k.as_str()))
        .map(|(k, v)| format!("{k}={v}\n"))
        .collect();
    let again = dir.path().join("again.cfg");
    std::fs::write(&again, params).unwrap();
    let rerun = gravibox(&["orbit", "--config", again.to_str().unwrap()]);
    assert_eq!(rerun.stdout, written);
}
