//! Graded intersection rings and exact top-degree evaluation.
//!
//! Three presentations are supported: products of projective spaces,
//! threefolds blown up at disjoint points and curves (degree-3 numbers
//! only), and the quintic del Pezzo surface times a projective space.

mod config;
mod cycle;
mod ring;

pub use config::{blown4_config, builtin_ring, load_ring_config, parse_ring_config, RingConfig, BUILTIN_RINGS};
pub use cycle::Cycle;
pub use ring::{
    mk_blowup3fold, mk_lattice_times_projective, mk_multiprojective, BlowupCenter, CenterKind, Ring,
    RingKind, RingSpec, SURFACE_GENERATORS,
};

use crate::dsl::{parse_expr, Expr, ParseError};
use crate::exact::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChowError {
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("invalid generator name `{0}`")]
    InvalidGeneratorName(String),
    #[error("factor `{name}` has dimension {dim}; dimensions must be at least 1")]
    InvalidDimension { name: String, dim: u32 },
    #[error("blowup ambient must have dimension 3, got {0}")]
    AmbientDimension(u32),
    #[error("blowup ambient must be a product of projective spaces")]
    AmbientNotMultiprojective,
    #[error("center `{center}` pairs with unknown ambient generator `{generator}`")]
    UnknownPairingGenerator { center: String, generator: String },
    #[error("canonical class `{0}` is not a divisor class of the ambient")]
    CanonicalNotDivisor(String),
    #[error("cycles live in different rings")]
    RingMismatch,
    #[error("expected a cycle of top degree {expected}, found terms of degree {found:?}")]
    NotTopDegree { expected: u32, found: Vec<u32> },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("parse error {0}")]
    Parse(#[from] ParseError),
    #[error("ring config error at `{path}`: {message}")]
    Config { path: String, message: String },
    #[error("unknown ring `{0}` (built-in rings: P7xP1, P2xP1, P2xP1_blown4, SxP1, SxPencil)")]
    UnknownRing(String),
    #[error("{0}")]
    Io(String),
}

/// Evaluate an expression tree to a normal-form cycle.
pub fn evaluate(ring: &Ring, expr: &Expr) -> Result<Cycle, ChowError> {
    Ok(match expr {
        Expr::Sum(terms) => {
            let mut acc = Cycle::zero(ring);
            for t in terms {
                acc = acc.plus(&evaluate(ring, t)?)?;
            }
            acc
        }
        Expr::Product(factors) => {
            let mut acc = Cycle::constant(ring, Rational::one());
            for f in factors {
                acc = acc.multiply(&evaluate(ring, f)?)?;
            }
            acc
        }
        Expr::Power(base, e) => evaluate(ring, base)?.pow(*e),
        Expr::Neg(inner) => evaluate(ring, inner)?.neg(),
        Expr::Scalar(r) => Cycle::constant(ring, r.clone()),
        Expr::Generator(name) => Cycle::generator(ring, name)?,
    })
}

/// Parse and evaluate in one step.
pub fn eval_str(ring: &Ring, src: &str) -> Result<Cycle, ChowError> {
    evaluate(ring, &parse_expr(src)?)
}

/// Result of `eval`: a number for top-degree input, otherwise the normal-form cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalOutcome {
    Degree(Rational),
    Class(Cycle),
}

impl std::fmt::Display for EvalOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EvalOutcome::Degree(r) => write!(f, "{r}"),
            EvalOutcome::Class(c) => write!(f, "{c}"),
        }
    }
}

pub fn eval_outcome(ring: &Ring, src: &str) -> Result<EvalOutcome, ChowError> {
    let c = eval_str(ring, src)?;
    match c.degree() {
        Ok(d) => Ok(EvalOutcome::Degree(d)),
        Err(_) => Ok(EvalOutcome::Class(c)),
    }
}

/// Class `a·H1⁵ + b·H1⁴H2` in ℙ⁷×ℙ¹ of the image of a threefold embedded by
/// `pullback_h1` (with `H2` pulling back to the base): `a` is the degree of one
/// fiber surface and `b = (pullback_h1)³`.
pub fn image_class_in_p7xp1(pullback_h1: &Cycle, fiber_degree: Rational) -> Result<Cycle, ChowError> {
    if !matches!(pullback_h1.ring().kind(), RingKind::Blowup3fold { .. }) {
        return Err(ChowError::AmbientNotMultiprojective);
    }
    if pullback_h1.homogeneous_degree().is_some_and(|d| d != 1) {
        return Err(ChowError::CanonicalNotDivisor(pullback_h1.to_string()));
    }
    let b = pullback_h1.pow(3).degree()?;
    let p7 = builtin_ring("P7xP1")?;
    let a_term = Cycle::monomial(&p7, fiber_degree, &[("H1", 5)])?;
    let b_term = Cycle::monomial(&p7, b, &[("H1", 4), ("H2", 1)])?;
    a_term.plus(&b_term)
}
