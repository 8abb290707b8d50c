//! Divisor classes on the moduli space of stable genus-6 curves.
//!
//! A class is stored as `aλ − Σ bᵢδᵢ` so that the usual displays print directly.
//! `δ` on its own always means `δ₀ + δ₁ + δ₂ + δ₃`.

mod affine;
mod family;


use std::fmt;

use serde::Serialize;

pub use affine::{AffineClass, AffineRational};
pub use family::{load_families, parse_families, FamiliesFile, TestFamilyVector};

use crate::exact::{Matrix, Rational, Solution};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum M6Error {
    #[error("need 5 independent families: got {families} with pairing rank {rank}")]
    NotEnoughFamilies { families: usize, rank: usize },
    #[error("family `{0}` has no phi pairing")]
    MissingPhi(String),
    #[error("family pairings are inconsistent; residual {0:?}")]
    Inconsistent(Vec<Rational>),
    #[error("slope undefined for {0}: every coefficient must be positive")]
    UndefinedSlope(String),
    #[error("decomposition is inconsistent; residual {0}")]
    Decomposition(String),
    #[error("empty interval: lower bound {lower} is not below upper bound {upper}")]
    EmptyInterval { lower: String, upper: String },
    #[error("families file error at `{path}`: {message}")]
    Schema { path: String, message: String },
    #[error("{0}")]
    Io(String),
}

/// `aλ − b₀δ₀ − b₁δ₁ − b₂δ₂ − b₃δ₃`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DivisorClassM6 {
    pub a: Rational,
    pub b: [Rational; 4],
}

fn r(n: i64) -> Rational {
    Rational::from(n)
}

impl DivisorClassM6 {
    pub fn new(a: Rational, b: [Rational; 4]) -> Self {
        DivisorClassM6 { a, b }
    }

    pub fn from_ints(a: i64, b: [i64; 4]) -> Self {
        DivisorClassM6::new(r(a), b.map(r))
    }

    pub fn zero() -> Self {
        DivisorClassM6::from_ints(0, [0; 4])
    }

    pub fn lambda() -> Self {
        DivisorClassM6::from_ints(1, [0; 4])
    }

    /// The boundary class `δᵢ`.
    pub fn delta(i: usize) -> Self {
        let mut b = [0; 4];
        b[i] = -1;
        DivisorClassM6::from_ints(0, b)
    }

    /// Coefficients on `(λ, δ₀, δ₁, δ₂, δ₃)`.
    pub fn basis_coefficients(&self) -> [Rational; 5] {
        [
            self.a.clone(),
            -self.b[0].clone(),
            -self.b[1].clone(),
            -self.b[2].clone(),
            -self.b[3].clone(),
        ]
    }

    pub fn from_basis_coefficients(c: &[Rational]) -> Self {
        assert_eq!(c.len(), 5);
        DivisorClassM6::new(
            c[0].clone(),
            [-c[1].clone(), -c[2].clone(), -c[3].clone(), -c[4].clone()],
        )
    }

    pub fn scale(&self, k: &Rational) -> Self {
        DivisorClassM6::new(&self.a * k, self.b.clone().map(|x| x * k))
    }

    pub fn plus(&self, other: &Self) -> Self {
        DivisorClassM6::new(
            &self.a + &other.a,
            std::array::from_fn(|i| &self.b[i] + &other.b[i]),
        )
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scale(&r(-1)))
    }
}

impl fmt::Display for DivisorClassM6 {
    /// `102λ − 13δ₀ − 54δ₁ − 84δ₂ − 94δ₃`; unit coefficients and zero terms are omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 5] = ["λ", "δ₀", "δ₁", "δ₂", "δ₃"];
        let mut first = true;
        for (c, name) in self.basis_coefficients().iter().zip(NAMES) {
            if c.is_zero() {
                continue;
            }
            let sign = match (first, c.is_negative()) {
                (true, true) => "\u{2212}",
                (true, false) => "",
                (false, true) => " \u{2212} ",
                (false, false) => " + ",
            };
            let mag = c.abs();
            let coeff = if mag.is_one() {
                String::new()
            } else if mag.is_integer() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            write!(f, "{sign}{coeff}{name}")?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `a·(t·λ) − Σ bᵢ·(t·δᵢ)`.
pub fn pair(t: &TestFamilyVector, d: &DivisorClassM6) -> Rational {
    t.pairing_vector()
        .iter()
        .zip(d.basis_coefficients())
        .map(|(x, c)| x * &c)
        .sum()
}

/// Mumford: `δ = 12λ − κ`.
pub fn mumford_delta_from_kappa(lambda: &Rational, kappa: &Rational) -> Rational {
    r(12) * lambda - kappa
}

/// The class whose pairings with the given families equal their `phi` values.
pub fn solve_class(families: &[TestFamilyVector]) -> Result<DivisorClassM6, M6Error> {
    let rows: Vec<Vec<Rational>> = families.iter().map(|t| t.pairing_vector().to_vec()).collect();
    let rhs = families
        .iter()
        .map(|t| t.phi.clone().ok_or_else(|| M6Error::MissingPhi(t.name.clone())))
        .collect::<Result<Vec<_>, _>>()?;
    if families.len() < 5 {
        let rank = if rows.is_empty() { 0 } else { Matrix::from_rows(rows).rank() };
        return Err(M6Error::NotEnoughFamilies {
            families: families.len(),
            rank,
        });
    }
    match Matrix::from_rows(rows).solve(&rhs) {
        Solution::Unique(x) => Ok(DivisorClassM6::from_basis_coefficients(&x)),
        Solution::RankDeficient { rank } => Err(M6Error::NotEnoughFamilies {
            families: families.len(),
            rank,
        }),
        Solution::Inconsistent { residual } => Err(M6Error::Inconsistent(residual)),
    }
}

/// `a / min bᵢ`, defined only when every coefficient is positive.
pub fn slope(d: &DivisorClassM6) -> Result<Rational, M6Error> {
    if !d.a.is_positive() || d.b.iter().any(|b| !b.is_positive()) {
        return Err(M6Error::UndefinedSlope(d.to_string()));
    }
    let min = d.b.iter().min().expect("four coefficients");
    Ok(&d.a / min)
}

/// Degree `n` with `φ_* d = O(n)` on X₆: `λ ↦ 6`, `δ₀ ↦ 47`, `δ₁, δ₂, δ₃ ↦ 0`.
pub fn pushforward(d: &DivisorClassM6) -> Rational {
    r(6) * &d.a - r(47) * &d.b[0]
}

/// `13λ − 2δ`, the canonical class.
pub fn canonical_class() -> DivisorClassM6 {
    DivisorClassM6::from_ints(13, [2, 2, 2, 2])
}

/// `13λ − (2 − α)δ`.
pub fn log_canonical_class() -> AffineClass {
    let two_minus_alpha = AffineRational::new(r(2), r(-1));
    AffineClass::new(
        AffineRational::constant(r(13)),
        std::array::from_fn(|_| two_minus_alpha.clone()),
    )
}

/// Gieseker–Petri divisor `94λ − 12δ₀ − 50δ₁ − 78δ₂ − 88δ₃`.
pub fn gieseker_petri() -> DivisorClassM6 {
    DivisorClassM6::from_ints(94, [12, 50, 78, 88])
}

/// `φ*O(1) = 102λ − 13δ₀ − 54δ₁ − 84δ₂ − 94δ₃` as stated.
pub fn stated_phi_class() -> DivisorClassM6 {
    DivisorClassM6::from_ints(102, [13, 54, 84, 94])
}

/// Coefficients of `(13λ − (2−α)δ) − (47α−16)·φ*O(1)` on `[GP], δ₁, δ₂, δ₃`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcDecomposition {
    pub c_gp: AffineRational,
    pub c1: AffineRational,
    pub c2: AffineRational,
    pub c3: AffineRational,
}

impl LcDecomposition {
    pub fn coefficients(&self) -> [&AffineRational; 4] {
        [&self.c_gp, &self.c1, &self.c2, &self.c3]
    }

    /// `c_GP·[GP] + c₁δ₁ + c₂δ₂ + c₃δ₃`.
    pub fn recompose(&self) -> AffineClass {
        let mut acc = AffineClass::from_affine_multiple(&self.c_gp, &gieseker_petri());
        for (i, c) in [&self.c1, &self.c2, &self.c3].into_iter().enumerate() {
            acc = acc.plus(&AffineClass::from_affine_multiple(c, &DivisorClassM6::delta(i + 1)));
        }
        acc
    }
}

/// `(13λ − (2−α)δ) − (47α − 16)·φ*O(1)` for the given φ class.
pub fn lc_residual(phi: &DivisorClassM6) -> AffineClass {
    let lc = log_canonical_class();
    let p = lc.pushforward();
    lc.minus(&AffineClass::from_affine_multiple(&p, phi))
}

/// Solve the residual against `[GP], δ₁, δ₂, δ₃`, separately in the constant and `α` parts.
/// The system has five equations in four unknowns, so consistency is checked exactly.
pub fn lc_decomposition_for(phi: &DivisorClassM6) -> Result<LcDecomposition, M6Error> {
    let residual = lc_residual(phi);
    let columns = [
        gieseker_petri(),
        DivisorClassM6::delta(1),
        DivisorClassM6::delta(2),
        DivisorClassM6::delta(3),
    ]
    .map(|c| c.basis_coefficients());
    let m = Matrix::from_rows(
        (0..5)
            .map(|row| columns.iter().map(|c| c[row].clone()).collect())
            .collect(),
    );
    let solve_part = |rhs: [Rational; 5]| match m.solve(&rhs) {
        Solution::Unique(x) => Ok(x),
        Solution::Inconsistent { .. } | Solution::RankDeficient { .. } => {
            Err(M6Error::Decomposition(residual.to_string()))
        }
    };
    let constant = solve_part(residual.constant_part().basis_coefficients())?;
    let linear = solve_part(residual.alpha_part().basis_coefficients())?;
    let c: Vec<AffineRational> = constant
        .into_iter()
        .zip(linear)
        .map(|(k, l)| AffineRational::new(k, l))
        .collect();
    let out = LcDecomposition {
        c_gp: c[0].clone(),
        c1: c[1].clone(),
        c2: c[2].clone(),
        c3: c[3].clone(),
    };
    let left_over = residual.minus(&out.recompose());
    if !left_over.is_zero() {
        return Err(M6Error::Decomposition(left_over.to_string()));
    }
    Ok(out)
}

pub fn lc_decomposition() -> Result<LcDecomposition, M6Error> {
    lc_decomposition_for(&stated_phi_class())
}

/// `lower < α ≤ upper`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcInterval {
    pub lower: Rational,
    pub upper: Rational,
    /// Nonnegativity thresholds of `c_GP, c₁, c₂, c₃`, in that order.
    pub thresholds: [Rational; 4],
}

impl LcInterval {
    pub fn contains(&self, alpha: &Rational) -> bool {
        &self.lower < alpha && alpha <= &self.upper
    }
}

impl fmt::Display for LcInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}]", self.lower, self.upper)
    }
}

/// Lower end: where `47α − 16` turns positive. Upper end: the least root of the
/// decomposition coefficients, each of which decreases in `α`.
pub fn lc_interval() -> Result<LcInterval, M6Error> {
    let lower = log_canonical_class()
        .pushforward()
        .root()
        .expect("pushforward depends on alpha");
    let dec = lc_decomposition()?;
    let thresholds = dec
        .coefficients()
        .map(|c| c.root().expect("coefficient depends on alpha"));
    let upper = thresholds.iter().min().expect("four thresholds").clone();
    if lower >= upper {
        return Err(M6Error::EmptyInterval {
            lower: lower.to_string(),
            upper: upper.to_string(),
        });
    }
    Ok(LcInterval {
        lower,
        upper,
        thresholds,
    })
}
