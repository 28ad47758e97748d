//! Run configuration: a per-command parameter table filled from an optional
//! `key=value` file and then from `--key value` flags.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::ValueEnum;

use crate::error::{HarnessError, Result};
use crate::csv::format_real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Orbit,
    Cdensity,
    Spectrum,
    Wavefn,
    Expect,
    Compare,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Orbit => "orbit",
            Mode::Cdensity => "cdensity",
            Mode::Spectrum => "spectrum",
            Mode::Wavefn => "wavefn",
            Mode::Expect => "expect",
            Mode::Compare => "compare",
        }
    }

    pub fn params(self) -> &'static [Param] {
        match self {
            Mode::Orbit => ORBIT,
            Mode::Cdensity => CDENSITY,
            Mode::Spectrum => SPECTRUM,
            Mode::Wavefn => WAVEFN,
            Mode::Expect => EXPECT,
            Mode::Compare => COMPARE,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Kind {
    Real,
    Count,
    Choice(&'static [&'static str]),
}

/// One accepted key. `default: None` makes the key optional.
#[derive(Debug, Clone, Copy)]
pub struct Param {
    pub key: &'static str,
    pub kind: Kind,
    pub default: Option<&'static str>,
    pub help: &'static str,
}

const fn p(key: &'static str, kind: Kind, default: Option<&'static str>, help: &'static str) -> Param {
    Param {
        key,
        kind,
        default,
        help,
    }
}

use Kind::{Count, Real};

const REGIMES: &[&str] = &["low", "high"];
const METHODS: &[&str] = &["exact", "paper"];

const QUANTUM: [Param; 5] = [
    p("side", Real, Some("1"), "box side L"),
    p("scale", Real, None, "length scale R; sets gravity from hbar and mass (default 0.1 if gravity unset)"),
    p("hbar", Real, Some("1"), "reduced Planck constant"),
    p("mass", Real, Some("1"), "particle mass"),
    p("gravity", Real, None, "gravitational acceleration; excludes scale"),
];

const ORBIT: &[Param] = &[
    p("x0", Real, Some("0"), "launch position on the floor"),
    p("energy", Real, Some("1"), "total energy E"),
    p("angle", Real, Some("0.78539816339744828"), "launch angle above the floor, radians"),
    p("mass", Real, Some("1"), "particle mass"),
    p("gravity", Real, Some("1"), "gravitational acceleration"),
    p("side", Real, Some("1"), "box side L"),
    p("max_den", Count, Some("10000"), "largest period denominator tried"),
    p("events", Count, None, "wall events to list (default: one period, or 32)"),
];

const CDENSITY: &[Param] = &[
    p("h", Real, Some("0.5"), "turning height E sin^2(phi)/(mg)"),
    p("side", Real, Some("1"), "box side L"),
    p("ny", Count, Some("201"), "sample points on [0, L]"),
];

const SPECTRUM: &[Param] = &[
    QUANTUM[0],
    QUANTUM[1],
    QUANTUM[2],
    QUANTUM[3],
    QUANTUM[4],
    p("count", Count, Some("15"), "number of exact roots"),
    p("eps_max", Real, None, "list every exact root up to this eps instead of count"),
];

const WAVEFN: &[Param] = &[
    QUANTUM[0],
    QUANTUM[1],
    QUANTUM[2],
    QUANTUM[3],
    QUANTUM[4],
    p("regime", Kind::Choice(REGIMES), Some("high"), "low (floor mode k) or high (box mode r)"),
    p("index", Count, Some("12"), "quantum number k or r"),
    p("method", Kind::Choice(METHODS), Some("exact"), "exact roots or the closed-form approximations"),
    p("ny", Count, Some("401"), "sample points on [0, L]"),
    p("n", Count, None, "x quantum number; switches to an (x, y, rho) grid"),
    p("nx", Count, Some("201"), "grid points along x when n is set"),
];

const EXPECT: &[Param] = &[
    p("sweep", Kind::Choice(&["classical", "quantum"]), Some("classical"), "what to sweep"),
    p("side", Real, Some("1"), "box side L"),
    p("h_min", Real, Some("0.05"), "classical: first turning height"),
    p("h_max", Real, Some("5"), "classical: last turning height"),
    p("steps", Count, Some("100"), "classical: number of heights"),
    QUANTUM[1],
    QUANTUM[2],
    QUANTUM[3],
    QUANTUM[4],
    p("regime", Kind::Choice(REGIMES), Some("high"), "quantum: low or high modes"),
    p("method", Kind::Choice(METHODS), Some("exact"), "quantum: exact or approximate modes"),
    p("index_min", Count, Some("12"), "quantum: first quantum number"),
    p("index_max", Count, Some("40"), "quantum: last quantum number"),
];

const COMPARE: &[Param] = &[
    QUANTUM[0],
    QUANTUM[1],
    QUANTUM[2],
    QUANTUM[3],
    QUANTUM[4],
    p("regime", Kind::Choice(REGIMES), Some("high"), "low or high mode"),
    p("index", Count, Some("12"), "quantum number k or r"),
    p("method", Kind::Choice(METHODS), Some("exact"), "exact or approximate mode"),
    p("bins", Count, Some("10"), "equal bins on [0, L]"),
];

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Real(f64),
    Count(u64),
    Text(&'static str),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Real(v) => f.write_str(&format_real(*v)),
            Value::Count(n) => write!(f, "{n}"),
            Value::Text(s) => f.write_str(s),
        }
    }
}

impl Param {
    fn parse(&self, raw: &str) -> Result<Value> {
        let raw = raw.trim();
        let bad = |why: String| HarnessError::Config(format!("{}: {why}", self.key));
        match self.kind {
            Kind::Real => match f64::from_str(raw) {
                Ok(v) if v.is_finite() => Ok(Value::Real(v)),
                _ => Err(bad(format!("expected a finite number, got '{raw}'"))),
            },
            Kind::Count => u64::from_str(raw)
                .map(Value::Count)
                .map_err(|_| bad(format!("expected a non-negative integer, got '{raw}'"))),
            Kind::Choice(options) => options
                .iter()
                .find(|o| **o == raw)
                .map(|o| Value::Text(o))
                .ok_or_else(|| bad(format!("expected one of {}, got '{raw}'", options.join("|")))),
        }
    }
}

/// Fully resolved parameters for one command.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub mode: Mode,
    pub values: BTreeMap<&'static str, Value>,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    /// Defaults, then `file` entries, then `flags`; later sources win.
    /// Every key is checked against the command's table.
    pub fn resolve(mode: Mode, file: &[(String, String)], flags: &[(String, String)], out: Option<PathBuf>) -> Result<Self> {
        let table = mode.params();
        let mut raw: BTreeMap<&'static str, String> = BTreeMap::new();
        for param in table {
            if let Some(d) = param.default {
                raw.insert(param.key, d.to_string());
            }
        }
        for (key, value) in file.iter().chain(flags) {
            let param = table.iter().find(|p| p.key == key).ok_or_else(|| {
                let known: Vec<_> = table.iter().map(|p| p.key).collect();
                HarnessError::Config(format!(
                    "unknown key '{key}' for {}; accepted: {}",
                    mode.as_str(),
                    known.join(", ")
                ))
            })?;
            raw.insert(param.key, value.clone());
        }
        let mut values = BTreeMap::new();
        for (key, text) in raw {
            let param = table.iter().find(|p| p.key == key).expect("key from table");
            values.insert(key, param.parse(&text)?);
        }
        // quantum commands: R and g are two views of one parameter
        if table.iter().any(|p| p.key == "scale") {
            match (values.contains_key("scale"), values.contains_key("gravity")) {
                (true, true) => return Err(HarnessError::Config("give scale or gravity, not both".into())),
                (false, false) => {
                    values.insert("scale", Value::Real(0.1));
                }
                _ => {}
            }
        }
        Ok(Self { mode, values, out })
    }

    pub fn has(&self, key: &str) -> bool {
        self.values.contains_key(key)
    }

    pub fn real(&self, key: &str) -> f64 {
        match self.values.get(key) {
            Some(Value::Real(v)) => *v,
            other => panic!("parameter {key} is not a resolved real: {other:?}"),
        }
    }

    pub fn count(&self, key: &str) -> u64 {
        match self.values.get(key) {
            Some(Value::Count(n)) => *n,
            other => panic!("parameter {key} is not a resolved count: {other:?}"),
        }
    }

    pub fn text(&self, key: &str) -> &'static str {
        match self.values.get(key) {
            Some(Value::Text(s)) => s,
            other => panic!("parameter {key} is not a resolved choice: {other:?}"),
        }
    }

    pub fn opt_real(&self, key: &str) -> Option<f64> {
        self.has(key).then(|| self.real(key))
    }

    pub fn opt_count(&self, key: &str) -> Option<u64> {
        self.has(key).then(|| self.count(key))
    }

    /// Count narrowed to u32 for quantum numbers.
    pub fn index(&self, key: &'static str) -> Result<u32> {
        u32::try_from(self.count(key)).map_err(|_| HarnessError::Config(format!("{key}: too large")))
    }

    /// `key=value` lines in key order, as written to the CSV preamble.
    pub fn metadata(&self) -> Vec<(String, String)> {
        self.values.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
    }
}

/// Parses a config file of `key=value` lines; blank lines and lines starting
/// with '#' are skipped.
pub fn parse_config_text(text: &str) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| HarnessError::Config(format!("line {}: expected key=value, got '{line}'", n + 1)))?;
        out.push((k.trim().to_string(), v.trim().to_string()));
    }
    Ok(out)
}

pub fn read_config_file(path: &Path) -> Result<Vec<(String, String)>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| HarnessError::Io(format!("cannot read config {}: {e}", path.display())))?;
    parse_config_text(&text)
}

/// Splits `--key value` / `--key=value` pairs.
pub fn parse_flags(args: &[String]) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        let key = arg
            .strip_prefix("--")
            .ok_or_else(|| HarnessError::Usage(format!("expected --key value, got '{arg}'")))?;
        if let Some((k, v)) = key.split_once('=') {
            out.push((k.to_string(), v.to_string()));
            continue;
        }
        let value = it
            .next()
            .ok_or_else(|| HarnessError::Usage(format!("missing value for --{key}")))?;
        out.push((key.to_string(), value.clone()));
    }
    Ok(out)
}

/// Parameter reference for `--help`.
pub fn help_text() -> String {
    let mut s = String::from("Parameters (as --key value or key=value lines in --config FILE):\n");
    for mode in Mode::value_variants() {
        s.push_str(&format!("\n  {}\n", mode.as_str()));
        for param in mode.params() {
            let default = match param.default {
                Some(d) => format!(" [default {d}]"),
                None => String::new(),
            };
            s.push_str(&format!("    {:<10} {}{default}\n", param.key, param.help));
        }
    }
    s
}
