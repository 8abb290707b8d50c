use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::exact::Rational;

/// Class `d·H − Σ mᵢ·Eᵢ` in the Picard lattice of the plane blown up at four points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PicardClass {
    pub d: i64,
    pub m: [i64; 4],
}

impl PicardClass {
    pub const fn new(d: i64, m: [i64; 4]) -> Self {
        PicardClass { d, m }
    }

    pub const ZERO: PicardClass = PicardClass::new(0, [0; 4]);
    pub const H: PicardClass = PicardClass::new(1, [0; 4]);
    pub const K: PicardClass = PicardClass::new(-3, [-1; 4]);

    /// The exceptional class `Eᵢ` for `i` in `1..=4`.
    pub fn exceptional(i: usize) -> Self {
        assert!((1..=4).contains(&i), "exceptional index {i} out of range");
        let mut m = [0; 4];
        m[i - 1] = -1;
        PicardClass::new(0, m)
    }

    /// `H − Eᵢ − Eⱼ`, the proper transform of the line through two of the points.
    pub fn line_through(i: usize, j: usize) -> Self {
        PicardClass::H - PicardClass::exceptional(i) - PicardClass::exceptional(j)
    }

    pub fn anticanonical() -> Self {
        -PicardClass::K
    }

    /// Intersection pairing `d·d′ − Σ mᵢ·mᵢ′` (signature (1,4)).
    pub fn pair(&self, other: &PicardClass) -> i64 {
        self.d * other.d - self.m.iter().zip(&other.m).map(|(a, b)| a * b).sum::<i64>()
    }

    pub fn self_intersection(&self) -> i64 {
        self.pair(self)
    }

    pub fn to_vec(&self) -> [i64; 5] {
        [self.d, self.m[0], self.m[1], self.m[2], self.m[3]]
    }
}

impl Add for PicardClass {
    type Output = PicardClass;
    fn add(self, o: PicardClass) -> PicardClass {
        let mut m = self.m;
        m.iter_mut().zip(o.m).for_each(|(a, b)| *a += b);
        PicardClass::new(self.d + o.d, m)
    }
}

impl Sub for PicardClass {
    type Output = PicardClass;
    fn sub(self, o: PicardClass) -> PicardClass {
        self + (-o)
    }
}

impl Neg for PicardClass {
    type Output = PicardClass;
    fn neg(self) -> PicardClass {
        PicardClass::new(-self.d, self.m.map(|x| -x))
    }
}

impl Mul<i64> for PicardClass {
    type Output = PicardClass;
    fn mul(self, k: i64) -> PicardClass {
        PicardClass::new(self.d * k, self.m.map(|x| x * k))
    }
}

impl fmt::Display for PicardClass {
    /// Written in the basis, e.g. `H - E1 - E2` or `-3*H + E1 + E2 + E3 + E4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<(i64, String)> = vec![(self.d, "H".to_string())];
        for (i, &mi) in self.m.iter().enumerate() {
            parts.push((-mi, format!("E{}", i + 1)));
        }
        let mut first = true;
        for (c, name) in parts.into_iter().filter(|(c, _)| *c != 0) {
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if c.abs() == 1 {
                f.write_str(&name)?;
            } else {
                write!(f, "{}*{name}", c.abs())?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Euler characteristic `χ(D) = 1 + D·(D − K)/2`; equals h⁰ for the nef classes queried here.
pub fn rr_surface(class: &PicardClass) -> Rational {
    let dk = class.pair(&(*class - PicardClass::K));
    Rational::one() + Rational::from(dk) / Rational::from(2)
}

/// Arithmetic genus `1 + D·(D + K)/2` of a curve in the class.
pub fn adjunction_genus(class: &PicardClass) -> Rational {
    let dk = class.pair(&(*class + PicardClass::K));
    Rational::one() + Rational::from(dk) / Rational::from(2)
}
