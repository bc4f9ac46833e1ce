//! Run settings: command-line values first, then an optional `key = value`
//! file, then defaults.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use aalpha::enumeration::MAX_ORDER;
use aalpha::lab::Claim;
use aalpha::Alpha;

use crate::CliError;

pub const DEFAULT_ALPHAS: [f64; 4] = [0.5, 0.6, 0.75, 0.9];
pub const DEFAULT_SCAN_ALPHAS: [f64; 4] = [0.55, 0.6, 0.75, 0.9];
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

const KEYS: [&str; 7] = ["alpha", "n", "claims", "format", "output", "tolerance", "cache-dir"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Jsonl,
    Csv,
}

/// Flat `key = value` file; `#` starts a comment.
#[derive(Debug, Default)]
pub struct ConfigFile {
    values: BTreeMap<String, String>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut values = BTreeMap::new();
        for (no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(CliError::Usage(format!("config line {}: expected key = value", no + 1)));
            };
            let key = key.trim().replace('_', "-");
            if !KEYS.contains(&key.as_str()) {
                return Err(CliError::Usage(format!("config line {}: unknown key {key:?}", no + 1)));
            }
            values.insert(key, value.trim().to_owned());
        }
        Ok(Self { values })
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }
}

pub fn parse_alphas(s: &str) -> Result<Vec<Alpha>, CliError> {
    let alphas = s
        .split(',')
        .map(|t| {
            let t = t.trim();
            let v: f64 = t
                .parse()
                .map_err(|_| CliError::Usage(format!("alpha {t:?} is not a number")))?;
            Alpha::new(v).map_err(|_| CliError::Usage(format!("alpha {t} is outside [0, 1]")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if alphas.is_empty() {
        return Err(CliError::Usage("empty alpha list".into()));
    }
    Ok(alphas)
}

/// `"4"`, `"2..7"` or `"2..=7"`, inclusive either way.
pub fn parse_range(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("order range {s:?}: expected N or LO..HI"));
    let s = s.trim();
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo, hi.trim_start_matches('=')),
        None => (s, s),
    };
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

pub fn check_orders(range: (usize, usize), min: usize) -> Result<(), CliError> {
    if range.1 > MAX_ORDER {
        return Err(CliError::Usage(format!(
            "order {} exceeds the enumeration cap of {MAX_ORDER}",
            range.1
        )));
    }
    if range.0 < min {
        return Err(CliError::Usage(format!("orders start at {min}, got {}", range.0)));
    }
    Ok(())
}

pub fn parse_claims(s: &str) -> Result<Vec<Claim>, CliError> {
    if s.trim() == "all" {
        return Ok(Claim::ALL.to_vec());
    }
    let mut claims: Vec<Claim> = s
        .split(',')
        .map(|t| t.trim().parse::<Claim>().map_err(|e| CliError::Usage(e.to_string())))
        .collect::<Result<_, _>>()?;
    claims.dedup();
    Ok(claims)
}

pub fn parse_format(s: &str) -> Result<Format, CliError> {
    match s.trim() {
        "jsonl" => Ok(Format::Jsonl),
        "csv" => Ok(Format::Csv),
        other => Err(CliError::Usage(format!("unknown format {other:?} (jsonl or csv)"))),
    }
}

pub fn parse_tolerance(s: &str) -> Result<f64, CliError> {
    match s.trim().parse::<f64>() {
        Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
        _ => Err(CliError::Usage(format!("tolerance {s:?} must be a positive number"))),
    }
}

/// Resolves one setting from the flag, the config file, or a default.
pub fn pick<T>(
    flag: Option<&str>,
    config: &ConfigFile,
    key: &str,
    parse: impl Fn(&str) -> Result<T, CliError>,
    default: impl FnOnce() -> T,
) -> Result<T, CliError> {
    match flag.or_else(|| config.get(key)) {
        Some(s) => parse(s),
        None => Ok(default()),
    }
}

pub fn pick_path(flag: Option<&Path>, config: &ConfigFile, key: &str) -> Option<PathBuf> {
    flag.map(Path::to_path_buf)
        .or_else(|| config.get(key).map(PathBuf::from))
}
