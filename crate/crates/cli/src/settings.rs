//! Flat key/value settings merged from a TOML file and command-line flags.

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{bail, Context, Result};
use boundstate::{PotentialSpec, PresetCase, PresetKind, RadialProblem};

/// Every key the config file may contain.
pub const KNOWN_KEYS: &[&str] = &[
    "preset", "V1", "V2", "V3", "V4", "alpha", "V0", "b", "V1p", "phi0", "xi1", "xi2", "xi3", "sigma", "De", "re",
    "mass", "dim", "ell", "ell_max", "nmax", "format", "output", "n", "r_max", "points", "modes", "perturb",
];

const RAW_KEYS: &[&str] = &["V1", "V2", "V3", "V4", "alpha"];
const POTENTIAL_KEYS: &[&str] = &[
    "V1", "V2", "V3", "V4", "alpha", "V0", "b", "V1p", "phi0", "xi1", "xi2", "xi3", "sigma", "De", "re",
];

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Num(f64),
    Str(String),
}

impl Value {
    fn to_json(&self) -> serde_json::Value {
        match self {
            Value::Num(x) => serde_json::Number::from_f64(*x).map_or(serde_json::Value::Null, serde_json::Value::Number),
            Value::Str(s) => serde_json::Value::String(s.clone()),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Settings {
    values: BTreeMap<String, Value>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum PotentialSource {
    Raw(PotentialSpec),
    Preset(PresetCase),
}

impl PotentialSource {
    pub fn spec(&self) -> Result<(PotentialSpec, Vec<String>)> {
        match self {
            PotentialSource::Raw(p) => Ok((*p, Vec::new())),
            PotentialSource::Preset(case) => Ok(case.to_mixed()?),
        }
    }
}

impl Settings {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let table: toml::Table = text.parse().context("config file is not valid TOML")?;
        let mut values = BTreeMap::new();
        for (key, item) in table {
            if !KNOWN_KEYS.contains(&key.as_str()) {
                bail!("unknown config key '{key}'");
            }
            let value = match item {
                toml::Value::Integer(i) => Value::Num(i as f64),
                toml::Value::Float(x) => Value::Num(x),
                toml::Value::String(s) => Value::Str(s),
                toml::Value::Array(items) => {
                    let parts: Option<Vec<String>> =
                        items.into_iter().map(|v| v.as_str().map(str::to_owned)).collect();
                    match parts {
                        Some(parts) => Value::Str(parts.join(",")),
                        None => bail!("config key '{key}': arrays may only hold strings"),
                    }
                }
                other => bail!("config key '{key}': unsupported value {other}"),
            };
            values.insert(key, value);
        }
        Ok(Self { values })
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("cannot read config {}", path.display()))?;
        Self::from_toml_str(&text).with_context(|| format!("in config {}", path.display()))
    }

    pub fn set(&mut self, key: &str, value: Option<Value>) {
        if let Some(v) = value {
            self.values.insert(key.to_owned(), v);
        }
    }

    pub fn set_num(&mut self, key: &str, value: Option<f64>) {
        self.set(key, value.map(Value::Num));
    }

    pub fn set_str(&mut self, key: &str, value: Option<&str>) {
        self.set(key, value.map(|s| Value::Str(s.to_owned())));
    }

    pub fn contains(&self, key: &str) -> bool {
        self.values.contains_key(key)
    }

    pub fn num(&self, key: &str) -> Result<Option<f64>> {
        match self.values.get(key) {
            None => Ok(None),
            Some(Value::Num(x)) => Ok(Some(*x)),
            Some(Value::Str(s)) => s
                .trim()
                .parse()
                .map(Some)
                .with_context(|| format!("'{key}' must be a number, got '{s}'")),
        }
    }

    pub fn uint(&self, key: &str) -> Result<Option<u32>> {
        match self.num(key)? {
            None => Ok(None),
            Some(x) if x >= 0.0 && x.fract() == 0.0 && x <= f64::from(u32::MAX) => Ok(Some(x as u32)),
            Some(x) => bail!("'{key}' must be a non-negative integer, got {x}"),
        }
    }

    pub fn string(&self, key: &str) -> Result<Option<String>> {
        match self.values.get(key) {
            None => Ok(None),
            Some(Value::Str(s)) => Ok(Some(s.clone())),
            Some(Value::Num(x)) => bail!("'{key}' must be a string, got {x}"),
        }
    }

    pub fn has_potential(&self) -> bool {
        self.contains("preset") || POTENTIAL_KEYS.iter().any(|k| self.contains(k))
    }

    /// Exactly one of a preset (with its parameters) or raw V₁..V₄, α.
    pub fn potential(&self) -> Result<PotentialSource> {
        if let Some(name) = self.string("preset")? {
            let kind: PresetKind = name.parse()?;
            let allowed = kind.parameter_keys();
            for key in POTENTIAL_KEYS {
                if self.contains(key) && !allowed.contains(key) {
                    bail!("--{key} is not a parameter of preset {kind} (expects {})", allowed.join(", "));
                }
            }
            let mut params = BTreeMap::new();
            for key in allowed {
                if let Some(v) = self.num(key)? {
                    params.insert(*key, v);
                }
            }
            let case = PresetCase::from_named(kind, |k| params.get(k).copied())?;
            return Ok(PotentialSource::Preset(case));
        }
        for key in POTENTIAL_KEYS {
            if self.contains(key) && !RAW_KEYS.contains(key) {
                bail!("--{key} is a preset parameter; pass --preset as well");
            }
        }
        if !RAW_KEYS.iter().any(|k| self.contains(k)) {
            bail!("no potential given: pass --preset NAME or --V1..--V4 with --alpha");
        }
        let alpha = self.num("alpha")?.context("--alpha is required with a raw potential")?;
        let get = |k: &str| self.num(k).map(|v| v.unwrap_or(0.0));
        Ok(PotentialSource::Raw(PotentialSpec::new(
            get("V1")?,
            get("V2")?,
            get("V3")?,
            get("V4")?,
            alpha,
        )?))
    }

    /// Mass defaults to 1, dimension to 3, ℓ to 0.
    pub fn problem(&self) -> Result<RadialProblem> {
        let mass = self.num("mass")?.unwrap_or(1.0);
        let dim = self.uint("dim")?.unwrap_or(3);
        let ell = self.uint("ell")?.unwrap_or(0);
        Ok(RadialProblem::new(mass, dim, ell)?)
    }

    pub fn echo(&self) -> serde_json::Map<String, serde_json::Value> {
        self.values.iter().map(|(k, v)| (k.clone(), v.to_json())).collect()
    }

    pub fn header_lines(&self) -> Vec<String> {
        self.values
            .iter()
            .map(|(k, v)| match v {
                Value::Num(x) => format!("# {k} = {x}"),
                Value::Str(s) => format!("# {k} = {s}"),
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_flat_toml() {
        let s = Settings::from_toml_str("preset = \"hulthen\"\nV0 = 1\nb = 0.2\nmodes = [\"aim\", \"oracle\"]\n").unwrap();
        assert_eq!(s.num("V0").unwrap(), Some(1.0));
        assert_eq!(s.string("modes").unwrap().as_deref(), Some("aim,oracle"));
        assert!(matches!(s.potential().unwrap(), PotentialSource::Preset(_)));
    }

    #[test]
    fn rejects_unknown_keys() {
        let err = Settings::from_toml_str("V9 = 1").unwrap_err();
        assert!(err.to_string().contains("V9"));
    }

    #[test]
    fn flags_override_file_values() {
        let mut s = Settings::from_toml_str("alpha = 0.5\nV3 = -1").unwrap();
        s.set_num("alpha", Some(0.25));
        match s.potential().unwrap() {
            PotentialSource::Raw(p) => assert_eq!((p.alpha, p.v3), (0.25, -1.0)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn preset_and_foreign_parameter_conflict() {
        let s = Settings::from_toml_str("preset = \"hulthen\"\nV0 = 1\nb = 0.2\nV3 = 1").unwrap();
        let msg = s.potential().unwrap_err().to_string();
        assert!(msg.contains("V3"), "{msg}");
    }

    #[test]
    fn raw_potential_needs_alpha() {
        let s = Settings::from_toml_str("V2 = -1").unwrap();
        assert!(s.potential().unwrap_err().to_string().contains("alpha"));
    }

    #[test]
    fn integers_must_be_integral() {
        let s = Settings::from_toml_str("dim = 2.5").unwrap();
        assert!(s.problem().is_err());
    }
}
