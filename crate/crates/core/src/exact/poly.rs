use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{ExactError, Rational};

/// Exponent vector keyed by variable name. Zero exponents are never stored.
pub type Monomial = BTreeMap<String, u32>;

/// Multivariate polynomial over the rationals in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

fn mul_monomials(a: &Monomial, b: &Monomial) -> Monomial {
    let mut out = a.clone();
    for (v, e) in b {
        *out.entry(v.clone()).or_insert(0) += e;
    }
    out
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::new(), c);
        p
    }

    pub fn var(name: &str) -> Self {
        Self::monomial(Rational::one(), &[(name, 1)])
    }

    /// `coeff * Π name^exp`.
    pub fn monomial(coeff: Rational, powers: &[(&str, u32)]) -> Self {
        let mut m = Monomial::new();
        for &(v, e) in powers {
            if e > 0 {
                *m.entry(v.to_string()).or_insert(0) += e;
            }
        }
        let mut p = Self::zero();
        p.add_term(m, coeff);
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, powers: &[(&str, u32)]) -> Rational {
        let m = Self::monomial(Rational::one(), powers);
        match m.terms.keys().next() {
            Some(key) => self.terms.get(key).cloned().unwrap_or_else(Rational::zero),
            None => self
                .terms
                .get(&Monomial::new())
                .cloned()
                .unwrap_or_else(Rational::zero),
        }
    }

    pub fn variables(&self) -> BTreeSet<String> {
        self.terms
            .keys()
            .flat_map(|m| m.keys().cloned())
            .collect()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Total degree of the highest term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.values().sum()).max()
    }

    /// Degree in the given variables when every term has that same degree.
    pub fn homogeneous_degree_in(&self, vars: &[&str]) -> Option<u32> {
        let mut degrees = self
            .terms
            .keys()
            .map(|m| vars.iter().map(|v| m.get(*v).copied().unwrap_or(0)).sum::<u32>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Replace every variable by its bound polynomial.
    pub fn substitute(&self, bindings: &BTreeMap<String, MultiPoly>) -> Result<MultiPoly, ExactError> {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(c.clone());
            for (v, e) in m {
                let image = bindings
                    .get(v)
                    .ok_or_else(|| ExactError::UnboundVariable(v.clone()))?;
                term = &term * &image.pow(*e);
                if term.is_zero() {
                    break;
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Evaluate with every variable bound to a rational.
    pub fn evaluate(&self, values: &BTreeMap<String, Rational>) -> Result<Rational, ExactError> {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m {
                let x = values
                    .get(v)
                    .ok_or_else(|| ExactError::UnboundVariable(v.clone()))?;
                t *= &x.pow(*e);
            }
            acc += t;
        }
        Ok(acc)
    }
}

/// Shorthand for building binding maps in identity checks.
pub fn bindings<'a>(pairs: impl IntoIterator<Item = (&'a str, MultiPoly)>) -> BTreeMap<String, MultiPoly> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(mul_monomials(ma, mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl fmt::Display for MultiPoly {
    /// Terms in descending graded order, variables lexicographic within a term.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.values().sum();
            let db: u32 = b.values().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let vars: Vec<String> = m
                .iter()
                .map(|(v, e)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(name: &str) -> MultiPoly {
        MultiPoly::var(name)
    }

    #[test]
    fn difference_of_squares() {
        let p = &v("lambda") + &v("mu");
        let q = &v("lambda") - &v("mu");
        let expected = &v("lambda").pow(2) - &v("mu").pow(2);
        assert_eq!(&p * &q, expected);
    }

    #[test]
    fn binomial_coefficient_in_fourth_power() {
        let p = (&v("lambda") + &v("mu")).pow(4);
        assert_eq!(p.coefficient(&[("lambda", 2), ("mu", 2)]), Rational::from(6));
        assert_eq!(p.num_terms(), 5);
    }

    #[test]
    fn substitute_scroll_components() {
        let p = &v("x0") * &v("x5");
        let b = bindings([
            ("x0", MultiPoly::monomial(Rational::one(), &[("s", 1), ("lambda", 3)])),
            ("x5", MultiPoly::monomial(Rational::one(), &[("s", 1), ("mu", 3)])),
        ]);
        let out = p.substitute(&b).unwrap();
        assert_eq!(
            out,
            MultiPoly::monomial(Rational::one(), &[("s", 2), ("lambda", 3), ("mu", 3)])
        );
    }

    #[test]
    fn substitute_identity_and_zero() {
        let p = &(&v("a") * &v("b")).scale(&Rational::from(3)) + &v("c");
        let id = bindings([("a", v("a")), ("b", v("b")), ("c", v("c"))]);
        assert_eq!(p.substitute(&id).unwrap(), p);

        let mono = v("a").pow(3);
        let zero = bindings([("a", MultiPoly::zero())]);
        assert!(mono.substitute(&zero).unwrap().is_zero());
    }

    #[test]
    fn unbound_variable_is_named() {
        let p = &v("a") + &v("zeta");
        let err = p.substitute(&bindings([("a", v("a"))])).unwrap_err();
        assert_eq!(err, ExactError::UnboundVariable("zeta".into()));
    }

    #[test]
    fn homogeneity() {
        let p = &v("lambda").pow(2) * &(&v("lambda") + &v("mu")).pow(2);
        assert_eq!(p.homogeneous_degree_in(&["lambda", "mu"]), Some(4));
        let q = &v("lambda") + &MultiPoly::one();
        assert_eq!(q.homogeneous_degree_in(&["lambda", "mu"]), None);
    }

    #[test]
    fn display_is_canonical() {
        let p = &(&v("b") * &v("a")).scale(&Rational::from(-2)) + &MultiPoly::constant(Rational::from(5));
        assert_eq!(p.to_string(), "-2*a*b + 5");
        assert_eq!(MultiPoly::zero().to_string(), "0");
    }
}
