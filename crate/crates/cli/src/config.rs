//! Config files: TOML by default, JSON when the file ends in `.json` or starts with `{`.

use serde::{Deserialize, Serialize};

use kumcert::exact::parse_rational;
use kumcert::pipeline::Effort;
use kumcert::PolyQ;

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("bad TOML: {0}")]
    Toml(#[from] toml::de::Error),
    #[error("bad JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, ConfigError>;

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(ConfigError::Invalid(msg.into()))
}

/// A rational coefficient: an integer or a "num/den" string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Int(i64),
    Str(String),
}

/// A polynomial: coefficients from the constant term up, an expression such as
/// "x^5 - x - 1", or a bare integer for a constant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolyInput {
    Const(i64),
    Coeffs(Vec<Coeff>),
    Expr(String),
}

impl PolyInput {
    pub fn parse(&self, name: &str) -> Result<PolyQ> {
        let r = match self {
            PolyInput::Const(n) => Ok(PolyQ::new(vec![kumcert::exact::int(*n)])),
            PolyInput::Expr(s) => s.parse::<PolyQ>(),
            PolyInput::Coeffs(cs) => cs
                .iter()
                .map(|c| match c {
                    Coeff::Int(n) => Ok(kumcert::exact::int(*n)),
                    Coeff::Str(s) => parse_rational(s),
                })
                .collect::<kumcert::Result<Vec<_>>>()
                .map(PolyQ::new),
        };
        r.map_err(|e| ConfigError::Invalid(format!("{name}: {e}")))
    }
}

/// Effort overrides on top of a preset.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EffortConfig {
    pub preset: Option<String>,
    pub prime_budget: Option<u64>,
    pub lambda_budget: Option<u64>,
    pub local: Option<bool>,
    pub padic_depth: Option<u32>,
    pub hensel_precision: Option<u32>,
    pub real_samples: Option<usize>,
    pub plane_trials: Option<usize>,
    pub exhaustive_limit: Option<u64>,
    pub point_height: Option<i64>,
}

/// Command-line overrides.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub seed: Option<u64>,
    pub effort: Option<String>,
    pub keep_going: bool,
}

impl EffortConfig {
    pub fn resolve(&self, seed: Option<u64>, ov: &Overrides) -> Result<Effort> {
        let name = ov.effort.as_deref().or(self.preset.as_deref()).unwrap_or("default");
        let Some(mut e) = Effort::preset(name) else {
            return invalid(format!("unknown effort preset {name:?}; expected low, default or high"));
        };
        let le = &mut e.local_effort;
        macro_rules! set {
            ($dst:expr, $src:expr) => {
                if let Some(v) = $src {
                    $dst = v;
                }
            };
        }
        set!(e.prime_budget, self.prime_budget);
        set!(e.lambda_budget, self.lambda_budget);
        set!(e.local, self.local);
        set!(le.padic_depth, self.padic_depth);
        set!(le.hensel_precision, self.hensel_precision);
        set!(le.real_samples, self.real_samples);
        set!(le.plane_trials, self.plane_trials);
        set!(le.exhaustive_limit, self.exhaustive_limit);
        set!(le.point_height, self.point_height);
        set!(le.seed, ov.seed.or(seed));
        e.keep_going = ov.keep_going;
        Ok(e)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckAConfig {
    pub g1: PolyInput,
    pub g2: PolyInput,
    pub w1: u64,
    pub w2: u64,
    #[serde(default)]
    pub effort: EffortConfig,
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckBConfig {
    pub f: PolyInput,
    pub lambda: Option<PolyInput>,
    pub w: u64,
    #[serde(default)]
    pub effort: EffortConfig,
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaloisConfig {
    pub f: PolyInput,
    pub prime_budget: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CohomologyConfig {
    pub m: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KummerConfig {
    pub f: PolyInput,
    pub lambda: Option<PolyInput>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SurfaceKind {
    A,
    B,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LocsolConfig {
    pub surface: SurfaceKind,
    pub g1: Option<PolyInput>,
    pub g2: Option<PolyInput>,
    pub f: Option<PolyInput>,
    pub lambda: Option<PolyInput>,
    /// "real" or an odd prime; all places when omitted.
    pub place: Option<PlaceInput>,
    #[serde(default)]
    pub effort: EffortConfig,
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PlaceInput {
    Prime(u64),
    Named(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FindPrimeConfig {
    pub polys: Vec<PolyInput>,
    #[serde(default)]
    pub primes: Vec<u64>,
    pub targets: Vec<Vec<usize>>,
    #[serde(default = "default_bound")]
    pub bound: u64,
}

fn default_bound() -> u64 {
    100_000
}

/// Reads a config from a path, or from stdin for `-`.
pub fn load<T: serde::de::DeserializeOwned>(path: &str) -> Result<T> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)
            .map_err(|source| ConfigError::Io { path: path.into(), source })?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|source| ConfigError::Io { path: path.into(), source })?
    };
    parse(&text, path.ends_with(".json"))
}

pub fn parse<T: serde::de::DeserializeOwned>(text: &str, json: bool) -> Result<T> {
    if json || text.trim_start().starts_with('{') {
        Ok(serde_json::from_str(text)?)
    } else {
        Ok(toml::from_str(text)?)
    }
}
