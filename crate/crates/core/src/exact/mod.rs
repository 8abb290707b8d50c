//! Exact arithmetic: rationals, multivariate polynomials and rational linear algebra.

pub mod linalg;
pub mod poly;
pub mod rational;

pub use linalg::{Matrix, Solution};
pub use poly::{bindings, Monomial, MultiPoly};
pub use rational::{binomial, rat, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid rational literal {0:?}")]
    ParseRational(String),
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
}
