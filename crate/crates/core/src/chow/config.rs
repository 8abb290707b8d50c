use std::path::Path;

use serde::Deserialize;

use super::{
    eval_str, mk_blowup3fold, mk_lattice_times_projective, mk_multiprojective, BlowupCenter, ChowError, Ring,
};

pub const BUILTIN_RINGS: [&str; 5] = ["P7xP1", "P2xP1", "P2xP1_blown4", "SxP1", "SxPencil"];

/// On-disk ring description, tagged by a `variant` field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingConfig {
    Multiprojective {
        factors: Vec<(String, u32)>,
    },
    Blowup3fold {
        ambient: Vec<(String, u32)>,
        canonical: String,
        centers: Vec<BlowupCenter>,
    },
    LatticeTimesProjective {
        dimension: u32,
        fiber: String,
    },
}

fn config_err(path: impl Into<String>, message: impl std::fmt::Display) -> ChowError {
    ChowError::Config {
        path: path.into(),
        message: message.to_string(),
    }
}

impl RingConfig {
    pub fn build(&self) -> Result<Ring, ChowError> {
        match self {
            RingConfig::Multiprojective { factors } => {
                let dims: Vec<(&str, u32)> = factors.iter().map(|(n, d)| (n.as_str(), *d)).collect();
                mk_multiprojective(&dims).map_err(|e| config_err("factors", e))
            }
            RingConfig::Blowup3fold {
                ambient,
                canonical,
                centers,
            } => {
                let dims: Vec<(&str, u32)> = ambient.iter().map(|(n, d)| (n.as_str(), *d)).collect();
                let amb = mk_multiprojective(&dims).map_err(|e| config_err("ambient", e))?;
                let k = eval_str(&amb, canonical).map_err(|e| config_err("canonical", e))?;
                for (i, c) in centers.iter().enumerate() {
                    if let Some(bad) = c.pairings.keys().find(|g| amb.generator_index(g).is_none()) {
                        return Err(config_err(
                            format!("centers[{i}].pairings.{bad}"),
                            "not an ambient generator",
                        ));
                    }
                }
                mk_blowup3fold(&amb, centers.clone(), &k).map_err(|e| match e {
                    ChowError::CanonicalNotDivisor(_) => config_err("canonical", e),
                    ChowError::AmbientDimension(_) => config_err("ambient", e),
                    other => config_err("centers", other),
                })
            }
            RingConfig::LatticeTimesProjective { dimension, fiber } => {
                mk_lattice_times_projective(*dimension, fiber).map_err(|e| match e {
                    ChowError::InvalidDimension { .. } => config_err("dimension", e),
                    other => config_err("fiber", other),
                })
            }
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MultiprojectiveDoc {
    #[allow(dead_code)]
    variant: String,
    factors: Vec<(String, u32)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BlowupDoc {
    #[allow(dead_code)]
    variant: String,
    ambient: Vec<(String, u32)>,
    canonical: String,
    centers: Vec<BlowupCenter>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LatticeDoc {
    #[allow(dead_code)]
    variant: String,
    dimension: u32,
    fiber: String,
}

fn with_path<T: serde::de::DeserializeOwned>(value: &serde_json::Value) -> Result<T, ChowError> {
    serde_path_to_error::deserialize(value).map_err(|e| {
        let path = e.path().to_string();
        config_err(path, e.into_inner())
    })
}

/// Parse a ring config from JSON text; schema errors name the offending field path.
pub fn parse_ring_config(text: &str) -> Result<RingConfig, ChowError> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| config_err(".", e))?;
    let variant = value
        .get("variant")
        .ok_or_else(|| config_err("variant", "missing field `variant`"))?
        .as_str()
        .ok_or_else(|| config_err("variant", "expected a string"))?;
    match variant {
        "multiprojective" => {
            let d: MultiprojectiveDoc = with_path(&value)?;
            Ok(RingConfig::Multiprojective { factors: d.factors })
        }
        "blowup3fold" => {
            let d: BlowupDoc = with_path(&value)?;
            Ok(RingConfig::Blowup3fold {
                ambient: d.ambient,
                canonical: d.canonical,
                centers: d.centers,
            })
        }
        "lattice_times_projective" => {
            let d: LatticeDoc = with_path(&value)?;
            Ok(RingConfig::LatticeTimesProjective {
                dimension: d.dimension,
                fiber: d.fiber,
            })
        }
        other => Err(config_err(
            "variant",
            format!("unknown variant `{other}`, expected multiprojective, blowup3fold or lattice_times_projective"),
        )),
    }
}

/// Load and build a ring from a JSON file.
pub fn load_ring_config(path: &Path) -> Result<Ring, ChowError> {
    let text = std::fs::read_to_string(path).map_err(|e| ChowError::Io(format!("{}: {e}", path.display())))?;
    parse_ring_config(&text)?.build()
}

fn section_centers() -> Vec<BlowupCenter> {
    let mut centers: Vec<BlowupCenter> = (1..=3)
        .map(|i| BlowupCenter::curve(&format!("E{i}"), &[("H1t", 0), ("H2t", 1)], 0))
        .collect();
    centers.push(BlowupCenter::curve("E4", &[("H1t", 1), ("H2t", 1)], 0));
    centers
}

/// The named rings used throughout the verification suites.
///
/// - `P7xP1`: generators `H1`, `H2`.
/// - `P2xP1`: generators `H1t`, `H2t`.
/// - `P2xP1_blown4`: `P2xP1` blown up along three constant sections and the
///   section `[λ+μ : λ : μ]`, exceptional divisors `E1..E4`.
/// - `SxP1`: quintic del Pezzo times ℙ¹, fiber generator `H2`.
/// - `SxPencil`: quintic del Pezzo times a pencil, fiber generator `h`.
pub fn builtin_ring(name: &str) -> Result<Ring, ChowError> {
    match name {
        "P7xP1" => mk_multiprojective(&[("H1", 7), ("H2", 1)]),
        "P2xP1" => mk_multiprojective(&[("H1t", 2), ("H2t", 1)]),
        "P2xP1_blown4" => {
            let amb = builtin_ring("P2xP1")?;
            let k = eval_str(&amb, "-3*H1t - 2*H2t")?;
            mk_blowup3fold(&amb, section_centers(), &k)
        }
        "SxP1" => mk_lattice_times_projective(1, "H2"),
        "SxPencil" => mk_lattice_times_projective(1, "h"),
        other => Err(ChowError::UnknownRing(other.to_string())),
    }
}

/// The `P2xP1_blown4` ring as a config document, handy as a template.
pub fn blown4_config() -> RingConfig {
    RingConfig::Blowup3fold {
        ambient: vec![("H1t".into(), 2), ("H2t".into(), 1)],
        canonical: "-3*H1t - 2*H2t".into(),
        centers: section_centers(),
    }
}
