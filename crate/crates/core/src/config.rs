//! Run configuration: truncation orders, parameters, test representations and
//! the selected check groups.
//!
//! The JSON file form has every field optional and writes exact scalars as
//! strings:
//!
//! ```json
//! {
//!   "order": 3,
//!   "k_max": 3,
//!   "p_max": 3,
//!   "params": { "k_plus": "q^2", "k_minus": "-q^-1", "eps_plus": "1", "eps_minus": "1" },
//!   "dress": [ { "spins": ["1/2", "1/2"], "v": ["1", "2"] } ],
//!   "groups": ["ybe", "fm"]
//! }
//! ```

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::FMParams;
use crate::reps::{parse_spin, DressConfig};
use crate::scalar::RatFuncQ;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    Ybe,
    Fm,
    Determinant,
    Reps,
    Classical,
    Dictionary,
    Pbw,
    Serre,
}

impl Group {
    pub const ALL: [Group; 8] = [
        Group::Ybe,
        Group::Fm,
        Group::Determinant,
        Group::Reps,
        Group::Classical,
        Group::Dictionary,
        Group::Pbw,
        Group::Serre,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Group::Ybe => "ybe",
            Group::Fm => "fm",
            Group::Determinant => "determinant",
            Group::Reps => "reps",
            Group::Classical => "classical",
            Group::Dictionary => "dictionary",
            Group::Pbw => "pbw",
            Group::Serre => "serre",
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Group {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Group::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::ConfigInvalid(format!("unknown check group {s:?}")))
    }
}

/// Validated configuration.
#[derive(Clone, Debug)]
pub struct RunConfig {
    /// Truncation order of the matrix presentations.
    pub order: u32,
    /// Largest relation index checked in representations.
    pub k_max: u32,
    /// Largest `p` in the linear relations.
    pub p_max: u32,
    /// Largest total degree of the PBW census.
    pub pbw_max_degree: u32,
    /// Largest relation index checked in the loop realization.
    pub loop_k_max: u32,
    /// Depth of the generator table specialized at `q = 1`.
    pub specialization_n_max: u32,
    pub params: FMParams,
    pub dress: Vec<DressConfig>,
    /// Sorted, without repetitions.
    pub groups: Vec<Group>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            order: 3,
            k_max: 3,
            p_max: 3,
            pbw_max_degree: 8,
            loop_k_max: 4,
            specialization_n_max: 3,
            params: FMParams::default(),
            dress: DressConfig::defaults(),
            groups: Group::ALL.to_vec(),
        }
    }
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawParams {
    k_plus: Option<String>,
    k_minus: Option<String>,
    eps_plus: Option<String>,
    eps_minus: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDress {
    spins: Vec<String>,
    v: Vec<String>,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    order: Option<u32>,
    k_max: Option<u32>,
    p_max: Option<u32>,
    pbw_max_degree: Option<u32>,
    loop_k_max: Option<u32>,
    specialization_n_max: Option<u32>,
    params: Option<RawParams>,
    dress: Option<Vec<RawDress>>,
    groups: Option<Vec<String>>,
}

fn scalar(field: &str, s: &str) -> Result<RatFuncQ> {
    s.parse()
        .map_err(|e| Error::ConfigInvalid(format!("{field}: {e}")))
}

impl RunConfig {
    /// Parse and validate a JSON configuration; absent fields take defaults.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawConfig =
            serde_json::from_str(text).map_err(|e| Error::ConfigInvalid(e.to_string()))?;
        let mut cfg = RunConfig::default();
        let p = raw.params.unwrap_or_default();
        let d = FMParams::default();
        let pick = |field: &str, v: &Option<String>, fallback: &RatFuncQ| match v {
            Some(s) => scalar(field, s),
            None => Ok(fallback.clone()),
        };
        cfg.params = FMParams::new(
            pick("k_plus", &p.k_plus, &d.k_plus)?,
            pick("k_minus", &p.k_minus, &d.k_minus)?,
            pick("eps_plus", &p.eps_plus, &d.eps_plus)?,
            pick("eps_minus", &p.eps_minus, &d.eps_minus)?,
        )?;
        cfg.order = raw.order.unwrap_or(cfg.order);
        cfg.k_max = raw.k_max.unwrap_or(cfg.k_max);
        cfg.p_max = raw.p_max.unwrap_or(cfg.p_max);
        cfg.pbw_max_degree = raw.pbw_max_degree.unwrap_or(cfg.pbw_max_degree);
        cfg.loop_k_max = raw.loop_k_max.unwrap_or(cfg.loop_k_max);
        cfg.specialization_n_max = raw.specialization_n_max.unwrap_or(cfg.specialization_n_max);
        cfg.dress = match raw.dress {
            Some(list) => list
                .iter()
                .map(|r| {
                    let spins = r.spins.iter().map(|s| parse_spin(s)).collect::<Result<Vec<_>>>()?;
                    let v = r.v.iter().map(|s| scalar("v", s)).collect::<Result<Vec<_>>>()?;
                    DressConfig::new(&spins, v, cfg.params.clone())
                })
                .collect::<Result<Vec<_>>>()?,
            None => DressConfig::defaults()
                .into_iter()
                .map(|c| {
                    let spins: Vec<u32> = c.sites.iter().map(|s| s.two_j()).collect();
                    DressConfig::new(&spins, c.v.clone(), cfg.params.clone())
                })
                .collect::<Result<Vec<_>>>()?,
        };
        if let Some(groups) = raw.groups {
            cfg.set_groups(&groups)?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    /// Replace the selected groups; `"all"` selects every group.
    pub fn set_groups<S: AsRef<str>>(&mut self, names: &[S]) -> Result<()> {
        let mut groups = Vec::new();
        for n in names {
            match n.as_ref() {
                "all" => groups.extend(Group::ALL),
                other => groups.push(other.parse()?),
            }
        }
        if groups.is_empty() {
            return Err(Error::ConfigInvalid("no check group selected".into()));
        }
        groups.sort();
        groups.dedup();
        self.groups = groups;
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        if self.order < 2 {
            return Err(Error::ConfigInvalid(format!("order {} is below 2", self.order)));
        }
        if self.dress.is_empty() && self.groups.contains(&Group::Reps) {
            return Err(Error::ConfigInvalid("reps group selected without representations".into()));
        }
        if self.dress.iter().any(|c| c.params != self.params) {
            return Err(Error::ConfigInvalid("representations must use the run parameters".into()));
        }
        Ok(())
    }
}
