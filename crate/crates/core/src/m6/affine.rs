use std::fmt;

use super::DivisorClassM6;
use crate::exact::Rational;

/// `constant + alpha_coefficient·α`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineRational {
    pub constant: Rational,
    pub alpha_coefficient: Rational,
}

impl AffineRational {
    pub fn new(constant: Rational, alpha_coefficient: Rational) -> Self {
        AffineRational {
            constant,
            alpha_coefficient,
        }
    }

    pub fn constant(c: Rational) -> Self {
        AffineRational::new(c, Rational::zero())
    }

    /// Parses `c`, `k*alpha`, `c + k*alpha`, `c - k*alpha` and so on.
    pub fn parse(s: &str) -> Option<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut out = AffineRational::constant(Rational::zero());
        let mut rest = compact.as_str();
        if rest.is_empty() {
            return None;
        }
        while !rest.is_empty() {
            let (neg, body) = match rest.as_bytes()[0] {
                b'-' => (true, &rest[1..]),
                b'+' => (false, &rest[1..]),
                _ => (false, rest),
            };
            let end = body[1.min(body.len())..]
                .find(['+', '-'])
                .map_or(body.len(), |i| i + 1);
            let term = &body[..end];
            rest = &body[end..];
            let (value, is_alpha) = match term.strip_suffix("alpha") {
                Some("") => (Rational::one(), true),
                Some(c) => (c.strip_suffix('*')?.parse().ok()?, true),
                None => (term.parse().ok()?, false),
            };
            let value = if neg { -value } else { value };
            if is_alpha {
                out.alpha_coefficient += value;
            } else {
                out.constant += value;
            }
        }
        Some(out)
    }

    pub fn eval(&self, alpha: &Rational) -> Rational {
        &self.constant + &(&self.alpha_coefficient * alpha)
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.alpha_coefficient.is_zero()
    }

    /// The `α` where the form vanishes; `None` for constants.
    pub fn root(&self) -> Option<Rational> {
        if self.alpha_coefficient.is_zero() {
            return None;
        }
        Some(-(&self.constant / &self.alpha_coefficient))
    }

    pub fn plus(&self, o: &Self) -> Self {
        AffineRational::new(
            &self.constant + &o.constant,
            &self.alpha_coefficient + &o.alpha_coefficient,
        )
    }

    pub fn minus(&self, o: &Self) -> Self {
        AffineRational::new(
            &self.constant - &o.constant,
            &self.alpha_coefficient - &o.alpha_coefficient,
        )
    }

    pub fn scale(&self, k: &Rational) -> Self {
        AffineRational::new(&self.constant * k, &self.alpha_coefficient * k)
    }
}

impl fmt::Display for AffineRational {
    /// `35/2 - 51*alpha`, `47*alpha`, `-16`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = &self.alpha_coefficient;
        if k.is_zero() {
            return write!(f, "{}", self.constant);
        }
        let alpha = |f: &mut fmt::Formatter<'_>, m: Rational| {
            if m.is_one() {
                f.write_str("alpha")
            } else {
                write!(f, "{m}*alpha")
            }
        };
        if self.constant.is_zero() {
            if k.is_negative() {
                f.write_str("-")?;
            }
            return alpha(f, k.abs());
        }
        write!(f, "{} {} ", self.constant, if k.is_negative() { "-" } else { "+" })?;
        alpha(f, k.abs())
    }
}

/// A divisor class whose coefficients are affine in `α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineClass {
    pub a: AffineRational,
    pub b: [AffineRational; 4],
}

impl AffineClass {
    pub fn new(a: AffineRational, b: [AffineRational; 4]) -> Self {
        AffineClass { a, b }
    }

    /// `c·D` for an affine scalar `c`.
    pub fn from_affine_multiple(c: &AffineRational, d: &DivisorClassM6) -> Self {
        AffineClass::new(c.scale(&d.a), std::array::from_fn(|i| c.scale(&d.b[i])))
    }

    pub fn constant_part(&self) -> DivisorClassM6 {
        DivisorClassM6::new(self.a.constant.clone(), self.b.clone().map(|x| x.constant))
    }

    pub fn alpha_part(&self) -> DivisorClassM6 {
        DivisorClassM6::new(
            self.a.alpha_coefficient.clone(),
            self.b.clone().map(|x| x.alpha_coefficient),
        )
    }

    pub fn at(&self, alpha: &Rational) -> DivisorClassM6 {
        DivisorClassM6::new(self.a.eval(alpha), self.b.clone().map(|x| x.eval(alpha)))
    }

    pub fn plus(&self, o: &Self) -> Self {
        AffineClass::new(self.a.plus(&o.a), std::array::from_fn(|i| self.b[i].plus(&o.b[i])))
    }

    pub fn minus(&self, o: &Self) -> Self {
        AffineClass::new(self.a.minus(&o.a), std::array::from_fn(|i| self.b[i].minus(&o.b[i])))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.iter().all(AffineRational::is_zero)
    }

    /// `6a − 47b₀`.
    pub fn pushforward(&self) -> AffineRational {
        self.a.scale(&Rational::from(6)).minus(&self.b[0].scale(&Rational::from(47)))
    }
}

impl fmt::Display for AffineClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})λ − ({})δ₀ − ({})δ₁ − ({})δ₂ − ({})δ₃",
            self.a, self.b[0], self.b[1], self.b[2], self.b[3]
        )
    }
}
