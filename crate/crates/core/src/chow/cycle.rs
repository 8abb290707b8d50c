use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::{ChowError, Ring};
use crate::exact::Rational;

/// Rational combination of normal-form monomials in a ring's generators.
#[derive(Clone, Debug)]
pub struct Cycle {
    ring: Ring,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl PartialEq for Cycle {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Cycle {}

fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Cycle {
    pub fn zero(ring: &Ring) -> Self {
        Cycle {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Ring, c: Rational) -> Self {
        let mut z = Self::zero(ring);
        let n = ring.generators().len();
        z.add_monomial(vec![0; n], c);
        z
    }

    /// A generator, or an alias such as `K` in the lattice ring.
    pub fn generator(ring: &Ring, name: &str) -> Result<Self, ChowError> {
        let form = ring
            .linear_form(name)
            .ok_or_else(|| ChowError::UnknownGenerator(name.to_string()))?;
        Ok(Self::linear(ring, &form))
    }

    /// `Σ coeffs[i]·gᵢ` over the ring's generators.
    pub fn linear(ring: &Ring, coeffs: &[Rational]) -> Self {
        let n = ring.generators().len();
        let mut z = Self::zero(ring);
        for (i, c) in coeffs.iter().enumerate() {
            let mut m = vec![0; n];
            m[i] = 1;
            z.add_monomial(m, c.clone());
        }
        z
    }

    /// Linear combination from `(name, coefficient)` pairs.
    pub fn from_terms(ring: &Ring, terms: &[(&str, i64)]) -> Result<Self, ChowError> {
        let mut acc = Self::zero(ring);
        for (name, c) in terms {
            let g = Self::generator(ring, name)?.scale(&Rational::from(*c));
            acc = acc.plus(&g)?;
        }
        Ok(acc)
    }

    /// `coeff · Π gᵢ^eᵢ`, reduced to normal form.
    pub fn monomial(ring: &Ring, coeff: Rational, powers: &[(&str, u32)]) -> Result<Self, ChowError> {
        let mut exps = vec![0; ring.generators().len()];
        for (name, e) in powers {
            let i = ring
                .generator_index(name)
                .ok_or_else(|| ChowError::UnknownGenerator(name.to_string()))?;
            exps[i] += e;
        }
        let mut z = Self::zero(ring);
        z.add_monomial(exps, coeff);
        Ok(z)
    }

    fn add_monomial(&mut self, exps: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let Some((k, normal)) = self.ring.reduce(&exps) else {
            return;
        };
        match self.terms.entry(normal) {
            Entry::Vacant(e) => {
                e.insert(c * k);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c * k;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    fn check_ring(&self, other: &Cycle) -> Result<(), ChowError> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(ChowError::RingMismatch)
        }
    }

    pub fn plus(&self, other: &Cycle) -> Result<Cycle, ChowError> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_monomial(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn minus(&self, other: &Cycle) -> Result<Cycle, ChowError> {
        self.plus(&other.neg())
    }

    pub fn neg(&self) -> Cycle {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Cycle {
        if c.is_zero() {
            return Cycle::zero(&self.ring);
        }
        Cycle {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Normal-form product.
    pub fn multiply(&self, other: &Cycle) -> Result<Cycle, ChowError> {
        self.check_ring(other)?;
        let mut out = Cycle::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m: Vec<u32> = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                out.add_monomial(m, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: u32) -> Cycle {
        let mut result = Cycle::constant(&self.ring, Rational::one());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.multiply(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.multiply(&base).expect("same ring");
                if base.is_zero() {
                    return Cycle::zero(&self.ring);
                }
            }
        }
        result
    }

    /// Set of total degrees among the nonzero terms.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(|m| m.iter().sum()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn homogeneous_degree(&self) -> Option<u32> {
        match self.degrees().as_slice() {
            [d] => Some(*d),
            _ => None,
        }
    }

    /// Degree of a top-dimensional cycle: the coefficient of the point class.
    pub fn degree(&self) -> Result<Rational, ChowError> {
        let top = self.ring.dimension();
        let degrees = self.degrees();
        if degrees.iter().any(|&d| d != top) {
            return Err(ChowError::NotTopDegree {
                expected: top,
                found: degrees,
            });
        }
        Ok(self
            .terms
            .get(&self.ring.point_monomial())
            .cloned()
            .unwrap_or_else(Rational::zero))
    }

    /// Coefficient of a named monomial (after normal-form reduction of the monomial).
    pub fn coefficient(&self, powers: &[(&str, u32)]) -> Result<Rational, ChowError> {
        let probe = Cycle::monomial(&self.ring, Rational::one(), powers)?;
        let Some((m, k)) = probe.terms.iter().next() else {
            return Ok(Rational::zero());
        };
        let c = self.terms.get(m).cloned().unwrap_or_else(Rational::zero);
        Ok(c / k)
    }

    /// Coefficients on the generators when this is a homogeneous degree-1 class (or zero).
    pub fn linear_coefficients(&self) -> Option<Vec<Rational>> {
        let n = self.ring.generators().len();
        let mut out = vec![Rational::zero(); n];
        for (m, c) in &self.terms {
            if m.iter().sum::<u32>() != 1 {
                return None;
            }
            let i = m.iter().position(|&e| e == 1)?;
            out[i] = c.clone();
        }
        Some(out)
    }
}

impl fmt::Display for Cycle {
    /// Terms in descending exponent order, e.g. `10*H1^6 + 28*H1^5*H2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let name = self.ring.monomial_name(m);
            if name == "1" {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&name)?;
            } else {
                write!(f, "{mag}*{name}")?;
            }
        }
        Ok(())
    }
}
