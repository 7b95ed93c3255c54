//! Flat key=value experiment configuration: UTF-8 files with '#' comments,
//! overridable from the command line, hashed for stable output names.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

/// Keys any experiment may use; anything else is rejected.
pub const KNOWN_KEYS: &[&str] = &[
    "bump.hi",
    "bump.kind",
    "bump.lo",
    "cap",
    "chi.index",
    "chi.q",
    "grid.hi",
    "grid.lo",
    "grid.ppd",
    "lambda.limit",
    "m",
    "out.dir",
    "q",
    "qmax",
    "scale",
    "xi",
    "zeros.cache",
    "zeros.compute.from",
    "zeros.compute.to",
    "zeros.import",
];

#[derive(Debug, Clone, Default)]
pub struct Config {
    map: BTreeMap<String, String>,
}

impl Config {
    /// Read an optional config file, then apply key=value overrides.
    pub fn load(path: Option<&Path>, overrides: &[String]) -> Result<Self, String> {
        let mut map = BTreeMap::new();
        if let Some(path) = path {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
            for (idx, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let (k, v) = line
                    .split_once('=')
                    .ok_or_else(|| format!("config line {} is not key=value: {line:?}", idx + 1))?;
                map.insert(k.trim().to_string(), v.trim().to_string());
            }
        }
        for kv in overrides {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| format!("--set argument is not key=value: {kv:?}"))?;
            map.insert(k.trim().to_string(), v.trim().to_string());
        }
        for k in map.keys() {
            if !KNOWN_KEYS.contains(&k.as_str()) {
                return Err(format!("unknown config key {k:?}"));
            }
        }
        Ok(Config { map })
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.map.get(key).map(|s| s.as_str())
    }

    pub fn f64_or(&self, key: &str, default: f64) -> Result<f64, String> {
        match self.map.get(key) {
            None => Ok(default),
            Some(v) => v
                .parse()
                .map_err(|e| format!("config key {key}={v:?}: {e}")),
        }
    }

    pub fn usize_or(&self, key: &str, default: usize) -> Result<usize, String> {
        match self.map.get(key) {
            None => Ok(default),
            Some(v) => v
                .parse()
                .map_err(|e| format!("config key {key}={v:?}: {e}")),
        }
    }

    pub fn entries(&self) -> &BTreeMap<String, String> {
        &self.map
    }

    /// FNV-1a over the sorted key=value lines: stable across runs and
    /// platforms, so identical configs name identical files.
    pub fn hash(&self) -> String {
        let mut canonical = String::new();
        for (k, v) in &self.map {
            writeln!(canonical, "{k}={v}").unwrap();
        }
        let mut h: u64 = 0xcbf29ce484222325;
        for b in canonical.bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
        format!("{h:016x}")
    }
}
