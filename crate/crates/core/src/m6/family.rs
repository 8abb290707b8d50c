use std::path::Path;

use serde::{Deserialize, Serialize};

use super::M6Error;
use crate::exact::Rational;

/// Intersection numbers of a one-parameter family with `λ, δ₀…δ₃`, and
/// optionally with `φ*O(1)`. Omitted numbers are 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TestFamilyVector {
    pub name: String,
    #[serde(default)]
    pub lambda: Rational,
    #[serde(default)]
    pub delta0: Rational,
    #[serde(default)]
    pub delta1: Rational,
    #[serde(default)]
    pub delta2: Rational,
    #[serde(default)]
    pub delta3: Rational,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<Rational>,
}

impl TestFamilyVector {
    pub fn from_ints(name: &str, v: [i64; 5], phi: Option<i64>) -> Self {
        let [lambda, delta0, delta1, delta2, delta3] = v.map(Rational::from);
        TestFamilyVector {
            name: name.to_string(),
            lambda,
            delta0,
            delta1,
            delta2,
            delta3,
            phi: phi.map(Rational::from),
        }
    }

    /// `(t·λ, t·δ₀, t·δ₁, t·δ₂, t·δ₃)`.
    pub fn pairing_vector(&self) -> [Rational; 5] {
        [
            self.lambda.clone(),
            self.delta0.clone(),
            self.delta1.clone(),
            self.delta2.clone(),
            self.delta3.clone(),
        ]
    }
}

impl std::fmt::Display for TestFamilyVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({}, {}, {}, {}, {}",
            self.lambda, self.delta0, self.delta1, self.delta2, self.delta3
        )?;
        match &self.phi {
            Some(p) => write!(f, "; phi={p})"),
            None => f.write_str(")"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamiliesFile {
    pub families: Vec<TestFamilyVector>,
}

pub fn parse_families(text: &str) -> Result<Vec<TestFamilyVector>, M6Error> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let file: FamiliesFile = serde_path_to_error::deserialize(de).map_err(|e| M6Error::Schema {
        path: e.path().to_string(),
        message: e.into_inner().to_string(),
    })?;
    Ok(file.families)
}

pub fn load_families(path: &Path) -> Result<Vec<TestFamilyVector>, M6Error> {
    let text = std::fs::read_to_string(path).map_err(|e| M6Error::Io(format!("{}: {e}", path.display())))?;
    parse_families(&text)
}
