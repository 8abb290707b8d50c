use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{ChowError, Cycle};
use crate::delpezzo::PicardClass;
use crate::dsl::is_valid_generator_name;
use crate::exact::Rational;

/// Shared handle to an immutable ring presentation.
pub type Ring = Arc<RingSpec>;

/// Names of the surface basis in a lattice-times-projective ring.
pub const SURFACE_GENERATORS: [&str; 5] = ["H", "E1", "E2", "E3", "E4"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CenterKind {
    Point,
    Curve,
}

/// Center of a blowup of a threefold: a point or a smooth curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlowupCenter {
    pub name: String,
    pub kind: CenterKind,
    /// Degree of each ambient divisor generator on the curve; unused for points.
    #[serde(default)]
    pub pairings: BTreeMap<String, i64>,
    #[serde(default)]
    pub genus: u32,
}

impl BlowupCenter {
    pub fn curve(name: &str, pairings: &[(&str, i64)], genus: u32) -> Self {
        BlowupCenter {
            name: name.to_string(),
            kind: CenterKind::Curve,
            pairings: pairings.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            genus,
        }
    }

    pub fn point(name: &str) -> Self {
        BlowupCenter {
            name: name.to_string(),
            kind: CenterKind::Point,
            pairings: BTreeMap::new(),
            genus: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingKind {
    Multiprojective {
        factors: Vec<(String, u32)>,
    },
    Blowup3fold {
        ambient: Vec<(String, u32)>,
        centers: Vec<BlowupCenter>,
        /// Canonical class of the ambient, as coefficients on its generators.
        canonical: Vec<Rational>,
    },
    LatticeTimesProjective {
        fiber: String,
        fiber_dim: u32,
    },
}

/// Graded ring presented by degree-1 generators and monomial reduction rules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingSpec {
    kind: RingKind,
    generators: Vec<String>,
    /// Named linear combinations of generators (`K` in the lattice ring).
    aliases: BTreeMap<String, Vec<Rational>>,
}

fn check_names<'a>(names: impl IntoIterator<Item = &'a str>) -> Result<(), ChowError> {
    let mut seen = BTreeSet::new();
    for n in names {
        if !is_valid_generator_name(n) {
            return Err(ChowError::InvalidGeneratorName(n.to_string()));
        }
        if !seen.insert(n) {
            return Err(ChowError::DuplicateGenerator(n.to_string()));
        }
    }
    Ok(())
}

/// Product of projective spaces: relations `Hᵢ^(nᵢ+1) = 0`, point class `Π Hᵢ^nᵢ`.
pub fn mk_multiprojective(dims: &[(&str, u32)]) -> Result<Ring, ChowError> {
    check_names(dims.iter().map(|(n, _)| *n))?;
    if let Some((name, dim)) = dims.iter().find(|(_, d)| *d == 0) {
        return Err(ChowError::InvalidDimension {
            name: name.to_string(),
            dim: *dim,
        });
    }
    let factors: Vec<(String, u32)> = dims.iter().map(|(n, d)| (n.to_string(), *d)).collect();
    Ok(Arc::new(RingSpec {
        generators: factors.iter().map(|(n, _)| n.clone()).collect(),
        kind: RingKind::Multiprojective { factors },
        aliases: BTreeMap::new(),
    }))
}

/// Threefold blown up at disjoint points and curves, supporting degree-3 evaluation.
pub fn mk_blowup3fold(ambient: &Ring, centers: Vec<BlowupCenter>, canonical: &Cycle) -> Result<Ring, ChowError> {
    let RingKind::Multiprojective { factors } = &ambient.kind else {
        return Err(ChowError::AmbientNotMultiprojective);
    };
    let dim: u32 = factors.iter().map(|(_, d)| d).sum();
    if dim != 3 {
        return Err(ChowError::AmbientDimension(dim));
    }
    if !Arc::ptr_eq(canonical.ring(), ambient) && **canonical.ring() != **ambient {
        return Err(ChowError::RingMismatch);
    }
    let canonical_coeffs = canonical
        .linear_coefficients()
        .ok_or_else(|| ChowError::CanonicalNotDivisor(canonical.to_string()))?;
    check_names(
        factors
            .iter()
            .map(|(n, _)| n.as_str())
            .chain(centers.iter().map(|c| c.name.as_str())),
    )?;
    for c in &centers {
        if let Some(bad) = c.pairings.keys().find(|k| !factors.iter().any(|(n, _)| n == *k)) {
            return Err(ChowError::UnknownPairingGenerator {
                center: c.name.clone(),
                generator: bad.clone(),
            });
        }
    }
    let generators = factors
        .iter()
        .map(|(n, _)| n.clone())
        .chain(centers.iter().map(|c| c.name.clone()))
        .collect();
    Ok(Arc::new(RingSpec {
        kind: RingKind::Blowup3fold {
            ambient: factors.clone(),
            centers,
            canonical: canonical_coeffs,
        },
        generators,
        aliases: BTreeMap::new(),
    }))
}

/// Chow ring of S × ℙᵐ for the quintic del Pezzo surface S.
///
/// Generators are the lattice basis `H, E1..E4` and the fiber hyperplane; `K`
/// is accepted as an alias for `−3H + ΣEᵢ`. Two surface classes multiply
/// through the lattice pairing onto `H²`, the point class of S.
pub fn mk_lattice_times_projective(m: u32, fiber: &str) -> Result<Ring, ChowError> {
    if m == 0 {
        return Err(ChowError::InvalidDimension {
            name: fiber.to_string(),
            dim: m,
        });
    }
    check_names(SURFACE_GENERATORS.iter().copied().chain(["K", fiber]))?;
    let generators: Vec<String> = SURFACE_GENERATORS
        .iter()
        .map(|s| s.to_string())
        .chain([fiber.to_string()])
        .collect();
    let mut aliases = BTreeMap::new();
    aliases.insert("K".to_string(), lattice_coefficients(&PicardClass::K, 6));
    Ok(Arc::new(RingSpec {
        kind: RingKind::LatticeTimesProjective {
            fiber: fiber.to_string(),
            fiber_dim: m,
        },
        generators,
        aliases,
    }))
}

/// Coefficients of `d·H − Σ mᵢEᵢ` on the generators `H, E1..E4, …` (padded to `len`).
pub(crate) fn lattice_coefficients(class: &PicardClass, len: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); len];
    v[0] = Rational::from(class.d);
    for i in 0..4 {
        v[i + 1] = Rational::from(-class.m[i]);
    }
    v
}

fn surface_class_of_generator(i: usize) -> PicardClass {
    match i {
        0 => PicardClass::H,
        1..=4 => PicardClass::exceptional(i),
        _ => unreachable!("not a surface generator"),
    }
}

impl RingSpec {
    pub fn kind(&self) -> &RingKind {
        &self.kind
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Linear form for a generator or alias name.
    pub fn linear_form(&self, name: &str) -> Option<Vec<Rational>> {
        if let Some(i) = self.generator_index(name) {
            let mut v = vec![Rational::zero(); self.generators.len()];
            v[i] = Rational::one();
            return Some(v);
        }
        self.aliases.get(name).cloned()
    }

    pub fn dimension(&self) -> u32 {
        match &self.kind {
            RingKind::Multiprojective { factors } => factors.iter().map(|(_, d)| d).sum(),
            RingKind::Blowup3fold { .. } => 3,
            RingKind::LatticeTimesProjective { fiber_dim, .. } => 2 + fiber_dim,
        }
    }

    /// Monomial whose coefficient is the degree of a top-dimensional cycle.
    pub fn point_monomial(&self) -> Vec<u32> {
        let n = self.generators.len();
        match &self.kind {
            RingKind::Multiprojective { factors } => factors.iter().map(|(_, d)| *d).collect(),
            RingKind::Blowup3fold { ambient, .. } => {
                let mut v: Vec<u32> = ambient.iter().map(|(_, d)| *d).collect();
                v.resize(n, 0);
                v
            }
            RingKind::LatticeTimesProjective { fiber_dim, .. } => {
                let mut v = vec![0; n];
                v[0] = 2;
                v[n - 1] = *fiber_dim;
                v
            }
        }
    }

    /// Normal form of a monomial: `None` if it reduces to zero, else a scalar times a normal monomial.
    pub fn reduce(&self, exps: &[u32]) -> Option<(Rational, Vec<u32>)> {
        let total: u32 = exps.iter().sum();
        if total > self.dimension() {
            return None;
        }
        match &self.kind {
            RingKind::Multiprojective { factors } => {
                if exps.iter().zip(factors).any(|(e, (_, d))| e > d) {
                    return None;
                }
                Some((Rational::one(), exps.to_vec()))
            }
            RingKind::Blowup3fold {
                ambient,
                centers,
                canonical,
            } => self.reduce_blowup(exps, ambient, centers, canonical),
            RingKind::LatticeTimesProjective { fiber_dim, .. } => {
                let f = exps[5];
                if f > *fiber_dim {
                    return None;
                }
                let surface: u32 = exps[..5].iter().sum();
                match surface {
                    0 | 1 => Some((Rational::one(), exps.to_vec())),
                    2 => {
                        let mut factors = Vec::with_capacity(2);
                        for (i, &e) in exps[..5].iter().enumerate() {
                            for _ in 0..e {
                                factors.push(surface_class_of_generator(i));
                            }
                        }
                        let value = factors[0].pair(&factors[1]);
                        if value == 0 {
                            return None;
                        }
                        Some((Rational::from(value), vec![2, 0, 0, 0, 0, f]))
                    }
                    _ => None,
                }
            }
        }
    }

    fn reduce_blowup(
        &self,
        exps: &[u32],
        ambient: &[(String, u32)],
        centers: &[BlowupCenter],
        canonical: &[Rational],
    ) -> Option<(Rational, Vec<u32>)> {
        let na = ambient.len();
        let (amb, exc) = exps.split_at(na);
        let mut hit = exc.iter().enumerate().filter(|(_, &e)| e > 0);
        let Some((ci, &k)) = hit.next() else {
            // pure pullback from the ambient
            if amb.iter().zip(ambient).any(|(e, (_, d))| e > d) {
                return None;
            }
            return Some((Rational::one(), exps.to_vec()));
        };
        if hit.next().is_some() {
            // disjoint centers: Eᵢ·Eⱼ = 0
            return None;
        }
        let amb_deg: u32 = amb.iter().sum();
        if amb_deg >= 2 {
            // pulled-back curve or point classes can be moved off the center
            return None;
        }
        if amb_deg + k < 3 {
            return Some((Rational::one(), exps.to_vec()));
        }
        let center = &centers[ci];
        let value = match (k, center.kind) {
            // π*α·Eᵢ² = −(α·Σ) for a curve, 0 for a point
            (2, CenterKind::Curve) => {
                let j = amb.iter().position(|&e| e == 1).expect("one ambient factor");
                let name = &ambient[j].0;
                -Rational::from(center.pairings.get(name).copied().unwrap_or(0))
            }
            (2, CenterKind::Point) => Rational::zero(),
            // Eᵢ³ = K·Σ − (2g − 2) for a curve, 1 for a point
            (3, CenterKind::Curve) => {
                let k_dot_sigma: Rational = ambient
                    .iter()
                    .zip(canonical)
                    .map(|((name, _), c)| c * Rational::from(center.pairings.get(name).copied().unwrap_or(0)))
                    .sum();
                k_dot_sigma - Rational::from(2 * i64::from(center.genus) - 2)
            }
            (3, CenterKind::Point) => Rational::one(),
            _ => unreachable!("degree bookkeeping"),
        };
        if value.is_zero() {
            return None;
        }
        Some((value, self.point_monomial()))
    }

    pub fn monomial_name(&self, exps: &[u32]) -> String {
        let parts: Vec<String> = exps
            .iter()
            .zip(&self.generators)
            .filter(|(e, _)| **e > 0)
            .map(|(e, g)| if *e == 1 { g.clone() } else { format!("{g}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}
