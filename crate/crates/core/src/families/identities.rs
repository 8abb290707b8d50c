//! Polynomial identities behind the degenerations: the projected scroll, the
//! eight anticanonical forms over the pencil of four-point configurations, and
//! the base-change map `ψ`.

use std::fmt;

use super::FamilyError;
use crate::chow::{builtin_ring, Cycle};
use crate::exact::{bindings, Matrix, MultiPoly, Rational};

/// A polynomial identity `value = 0` (or, for witnesses, `value ≠ 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub label: String,
    pub value: MultiPoly,
    pub expect_zero: bool,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.value.is_zero() == self.expect_zero
    }
}

impl fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = if self.expect_zero { "=" } else { "≠" };
        write!(f, "{}: {} {rel} 0", self.label, self.value)
    }
}

fn first_failure(checks: &[IdentityCheck]) -> Result<(), FamilyError> {
    match checks.iter().find(|c| !c.holds()) {
        Some(c) => Err(FamilyError::Identity(c.to_string())),
        None => Ok(()),
    }
}

fn v(name: &str) -> MultiPoly {
    MultiPoly::var(name)
}

/// Coordinate list of a map into projective space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamSurface {
    pub components: Vec<MultiPoly>,
}

impl ParamSurface {
    pub fn new(components: Vec<MultiPoly>) -> Self {
        assert!(components.iter().any(|c| !c.is_zero()), "all components vanish");
        ParamSurface { components }
    }

    /// Bindings `x0 ↦ components[0]`, ….
    fn as_bindings(&self) -> std::collections::BTreeMap<String, MultiPoly> {
        self.components
            .iter()
            .enumerate()
            .map(|(i, c)| (format!("x{i}"), c.clone()))
            .collect()
    }
}

/// `φ₁ = [λ³ : 0 : λ²μ : λμ² : 0 : μ³]`.
pub fn scroll_phi1() -> ParamSurface {
    let (l, m) = (v("lambda"), v("mu"));
    ParamSurface::new(vec![
        l.pow(3),
        MultiPoly::zero(),
        &l.pow(2) * &m,
        &l * &m.pow(2),
        MultiPoly::zero(),
        m.pow(3),
    ])
}

/// `φ₂ = [0 : λ² : 0 : 0 : μ² : 0]`.
pub fn scroll_phi2() -> ParamSurface {
    let (l, m) = (v("lambda"), v("mu"));
    ParamSurface::new(vec![
        MultiPoly::zero(),
        l.pow(2),
        MultiPoly::zero(),
        MultiPoly::zero(),
        m.pow(2),
        MultiPoly::zero(),
    ])
}

/// Points `s·φ₁ + t·φ₂` on the rulings.
pub fn scroll_ruling() -> ParamSurface {
    let (s, t) = (v("s"), v("t"));
    let (a, b) = (scroll_phi1(), scroll_phi2());
    ParamSurface::new(
        a.components
            .iter()
            .zip(&b.components)
            .map(|(p, q)| &(&s * p) + &(&t * q))
            .collect(),
    )
}

fn minor(a: (usize, usize), b: (usize, usize)) -> (String, MultiPoly) {
    let x = |i: usize| v(&format!("x{i}"));
    let label = format!("x{}x{} - x{}x{}", a.0, b.1, a.1, b.0);
    (label, &(&x(a.0) * &x(b.1)) - &(&x(a.1) * &x(b.0)))
}

/// The six 2×2 minors of `(x0 x1 x2 / x3 x4 x5)` and `(x0 x2 x3 / x2 x3 x5)`.
pub fn scroll_minors() -> Vec<(String, MultiPoly)> {
    let mut out = Vec::new();
    for (top, bottom) in [([0, 1, 2], [3, 4, 5]), ([0, 2, 3], [2, 3, 5])] {
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            out.push(minor((top[i], top[j]), (bottom[i], bottom[j])));
        }
    }
    out
}

/// Every minor vanishes on the ruling parametrization; the quadric
/// `x1x4 − x0x5` does not.
pub fn scroll_identity_checks() -> Result<Vec<IdentityCheck>, FamilyError> {
    let b = scroll_ruling().as_bindings();
    let mut checks = Vec::new();
    for (label, m) in scroll_minors() {
        checks.push(IdentityCheck {
            label: format!("minor {label}"),
            value: m.substitute(&b)?,
            expect_zero: true,
        });
    }
    let quadric = &(&v("x1") * &v("x4")) - &(&v("x0") * &v("x5"));
    checks.push(IdentityCheck {
        label: "quadric x1x4 - x0x5".into(),
        value: quadric.substitute(&b)?,
        expect_zero: false,
    });
    first_failure(&checks)?;
    Ok(checks)
}

/// The eight `(3,1)`-forms in `x0, x1, x2` with coefficients linear in `λ, μ`.
pub fn anticanonical_forms() -> Vec<MultiPoly> {
    let (x0, x1, x2) = (v("x0"), v("x1"), v("x2"));
    let (l, m) = (v("lambda"), v("mu"));
    let lm = &l + &m;
    let a = &(&m * &x1) - &(&l * &x2);
    vec![
        &(&x0 * &x1) * &(&(&l * &x0) - &(&lm * &x1)),
        &x0.pow(2) * &a,
        &(&x0 * &x2) * &(&(&m * &x0) - &(&lm * &x2)),
        &(&x0 * &x2) * &a,
        &(&x0 * &x1) * &a,
        &x1.pow(2) * &(&(&m * &x0) - &(&lm * &x2)),
        &(&x1 * &x2) * &a,
        &x2.pow(2) * &(&(&l * &x0) - &(&lm * &x1)),
    ]
}

/// The sections `Σ₁ … Σ₄` as points of ℙ² over the base.
pub fn sections() -> Vec<(&'static str, [MultiPoly; 3])> {
    let (l, m) = (v("lambda"), v("mu"));
    let (o, z) = (MultiPoly::one(), MultiPoly::zero());
    vec![
        ("Sigma1", [o.clone(), z.clone(), z.clone()]),
        ("Sigma2", [z.clone(), o.clone(), z.clone()]),
        ("Sigma3", [z.clone(), z, o]),
        ("Sigma4", [&l + &m, l, m]),
    ]
}

pub const CUBIC_MONOMIALS: [[u32; 3]; 10] = [
    [3, 0, 0],
    [2, 1, 0],
    [2, 0, 1],
    [1, 2, 0],
    [1, 1, 1],
    [1, 0, 2],
    [0, 3, 0],
    [0, 2, 1],
    [0, 1, 2],
    [0, 0, 3],
];

/// Rank of the eight forms at `[λ:μ]`, as vectors in the space of cubics.
pub fn anticanonical_rank_at(lambda: &Rational, mu: &Rational) -> Result<usize, FamilyError> {
    let b = bindings([
        ("x0", v("x0")),
        ("x1", v("x1")),
        ("x2", v("x2")),
        ("lambda", MultiPoly::constant(lambda.clone())),
        ("mu", MultiPoly::constant(mu.clone())),
    ]);
    let mut rows = Vec::new();
    for f in anticanonical_forms() {
        let g = f.substitute(&b)?;
        rows.push(
            CUBIC_MONOMIALS
                .iter()
                .map(|e| g.coefficient(&[("x0", e[0]), ("x1", e[1]), ("x2", e[2])]))
                .collect(),
        );
    }
    Ok(Matrix::from_rows(rows).rank())
}

/// Outcome of the anticanonical-form checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnticanonicalReport {
    pub vanishing: Vec<IdentityCheck>,
    pub generic_rank: usize,
}

/// Each form vanishes on each section (32 identities) and the forms span a
/// 6-dimensional space at `[λ:μ] = [1:2]`.
pub fn anticanonical_form_checks() -> Result<AnticanonicalReport, FamilyError> {
    let mut vanishing = Vec::new();
    for (i, f) in anticanonical_forms().iter().enumerate() {
        for (name, point) in sections() {
            let [p0, p1, p2] = point;
            let b = bindings([
                ("x0", p0),
                ("x1", p1),
                ("x2", p2),
                ("lambda", v("lambda")),
                ("mu", v("mu")),
            ]);
            vanishing.push(IdentityCheck {
                label: format!("form {} at {name}", i + 1),
                value: f.substitute(&b)?,
                expect_zero: true,
            });
        }
    }
    first_failure(&vanishing)?;
    let generic_rank = anticanonical_rank_at(&Rational::one(), &Rational::from(2))?;
    if generic_rank != 6 {
        return Err(FamilyError::Rank {
            expected: 6,
            found: generic_rank,
        });
    }
    Ok(AnticanonicalReport {
        vanishing,
        generic_rank,
    })
}

/// The eight coordinate multipliers of `ψ`, polynomials in `λ, μ`.
pub fn psi_multipliers() -> Vec<MultiPoly> {
    let (l, m) = (v("lambda"), v("mu"));
    let lm = &l + &m;
    vec![
        &l.pow(2) * &lm.pow(2),
        &(&l * &m) * &lm.pow(2),
        &m.pow(2) * &lm.pow(2),
        &(&l * &m.pow(2)) * &lm,
        &(&l.pow(2) * &m) * &lm,
        &(&l.pow(2) * &m) * &lm,
        &l.pow(2) * &m.pow(2),
        &(&l * &m.pow(2)) * &lm,
    ]
}

/// Common degree of the multipliers in the base coordinates, i.e. the twist
/// `ψ*H1 = H1 + d·H2`.
pub fn psi_twist(multipliers: &[MultiPoly]) -> Result<u32, FamilyError> {
    let mut degree = None;
    for (i, p) in multipliers.iter().enumerate() {
        let d = p
            .homogeneous_degree_in(&["lambda", "mu"])
            .ok_or_else(|| FamilyError::Identity(format!("multiplier {} is not homogeneous: {p}", i + 1)))?;
        match degree {
            None => degree = Some(d),
            Some(e) if e != d => {
                return Err(FamilyError::Identity(format!(
                    "multiplier {} has degree {d}, expected {e}",
                    i + 1
                )))
            }
            Some(_) => {}
        }
    }
    degree.ok_or_else(|| FamilyError::Identity("no multipliers".into()))
}

/// `H1 ↦ H1 + d·H2`, `H2 ↦ H2` on divisors of ℙ⁷×ℙ¹, with `d` read off the multipliers.
pub fn psi_pullback(divisor: &Cycle) -> Result<Cycle, FamilyError> {
    let p7 = builtin_ring("P7xP1")?;
    let coeffs = divisor
        .linear_coefficients()
        .filter(|_| **divisor.ring() == *p7)
        .ok_or_else(|| FamilyError::Identity(format!("{divisor} is not a divisor on P7xP1")))?;
    let twist = Rational::from(psi_twist(&psi_multipliers())? as i64);
    let h1 = &coeffs[0];
    let h2 = &coeffs[1] + &(h1 * &twist);
    Ok(Cycle::linear(&p7, &[h1.clone(), h2]))
}
