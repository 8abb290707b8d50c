//! Picard lattice of the quintic del Pezzo surface and the combinatorics of its lines.

mod graph;
mod lattice;

pub use graph::{petersen_check, CurveGraph, PetersenReport};
pub use lattice::{adjunction_genus, rr_surface, PicardClass};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DelPezzoError {
    #[error("property `{property}` failed: expected {expected}, found {found}")]
    Property {
        property: &'static str,
        expected: String,
        found: String,
    },
    #[error("{0} is not four pairwise disjoint (-1)-classes")]
    NotAQuadruple(String),
}

/// Classes `C` with `C² = −1` and `C·K = −1` in the box `|d| ≤ d_max`, `|mᵢ| ≤ m_max`.
pub fn minus_one_classes_in_box(d_max: i64, m_max: i64) -> Vec<PicardClass> {
    let range = |b: i64| -b..=b;
    let mut out = Vec::new();
    for d in range(d_max) {
        for m1 in range(m_max) {
            for m2 in range(m_max) {
                for m3 in range(m_max) {
                    for m4 in range(m_max) {
                        let c = PicardClass::new(d, [m1, m2, m3, m4]);
                        if c.self_intersection() == -1 && c.pair(&PicardClass::K) == -1 {
                            out.push(c);
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// The ten (−1)-classes: `E₁…E₄` and `H − Eᵢ − Eⱼ`, sorted.
pub fn minus_one_curves() -> Vec<PicardClass> {
    minus_one_classes_in_box(3, 2)
}

/// All maximal sets of four pairwise disjoint (−1)-classes.
pub fn disjoint_quadruples() -> Vec<[PicardClass; 4]> {
    let curves = minus_one_curves();
    let n = curves.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let q = [curves[a], curves[b], curves[c], curves[d]];
                    if pairwise_disjoint(&q) {
                        out.push(q);
                    }
                }
            }
        }
    }
    out.retain(|q| {
        !curves
            .iter()
            .any(|c| !q.contains(c) && q.iter().all(|x| x.pair(c) == 0))
    });
    out
}

fn pairwise_disjoint(q: &[PicardClass]) -> bool {
    q.iter()
        .enumerate()
        .all(|(i, a)| q[i + 1..].iter().all(|b| a.pair(b) == 0))
}

/// Pullback of the line class under the blowdown contracting `quadruple`: `(−K + ΣFᵢ)/3`.
pub fn blowdown_line_class(quadruple: &[PicardClass; 4]) -> Result<PicardClass, DelPezzoError> {
    if !pairwise_disjoint(quadruple) || quadruple.iter().any(|c| c.self_intersection() != -1) {
        return Err(DelPezzoError::NotAQuadruple(format_quadruple(quadruple)));
    }
    let sum = quadruple
        .iter()
        .fold(PicardClass::anticanonical(), |acc, f| acc + *f);
    let v = sum.to_vec();
    if v.iter().any(|x| x % 3 != 0) {
        return Err(DelPezzoError::NotAQuadruple(format_quadruple(quadruple)));
    }
    Ok(PicardClass::new(v[0] / 3, [v[1] / 3, v[2] / 3, v[3] / 3, v[4] / 3]))
}

/// Conic-fibration class `2L − ΣFᵢ` of the blowdown contracting `quadruple`.
pub fn fiber_class(quadruple: &[PicardClass; 4]) -> Result<PicardClass, DelPezzoError> {
    let line = blowdown_line_class(quadruple)?;
    Ok(quadruple.iter().fold(line * 2, |acc, f| acc - *f))
}

/// Unordered pairs of (−1)-classes `{A, B}` with `A + B` the fiber class and `A·B = 1`.
pub fn reducible_fibers(quadruple: &[PicardClass; 4]) -> Result<Vec<(PicardClass, PicardClass)>, DelPezzoError> {
    let fiber = fiber_class(quadruple)?;
    let curves = minus_one_curves();
    let mut out = Vec::new();
    for (i, a) in curves.iter().enumerate() {
        for b in &curves[i + 1..] {
            if *a + *b == fiber && a.pair(b) == 1 {
                out.push((*a, *b));
            }
        }
    }
    Ok(out)
}

pub fn reducible_fiber_count(quadruple: &[PicardClass; 4]) -> Result<usize, DelPezzoError> {
    reducible_fibers(quadruple).map(|v| v.len())
}

pub fn format_quadruple(q: &[PicardClass; 4]) -> String {
    let parts: Vec<String> = q.iter().map(|c| c.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn standard() -> [PicardClass; 4] {
        [1, 2, 3, 4].map(PicardClass::exceptional)
    }

    #[test]
    fn ten_minus_one_curves() {
        let curves = minus_one_curves();
        assert_eq!(curves.len(), 10);
        assert!(curves.contains(&PicardClass::line_through(1, 2)));
        for i in 1..=4 {
            assert!(curves.contains(&PicardClass::exceptional(i)));
        }
        let anticanonical_degree: i64 = curves.iter().map(|c| c.pair(&PicardClass::anticanonical())).sum();
        assert_eq!(anticanonical_degree, 10);
    }

    #[test]
    fn wider_sweep_finds_nothing_new() {
        assert_eq!(minus_one_classes_in_box(6, 4), minus_one_curves());
    }

    #[test]
    fn five_quadruples_each_with_three_reducible_fibers() {
        let quads = disjoint_quadruples();
        assert_eq!(quads.len(), 5);
        let mut std_sorted = standard();
        std_sorted.sort();
        assert!(quads.contains(&std_sorted));
        for q in &quads {
            assert_eq!(reducible_fiber_count(q).unwrap(), 3);
            let f = fiber_class(q).unwrap();
            assert_eq!(f.self_intersection(), 0);
            assert_eq!(f.pair(&PicardClass::K), -2);
        }
    }

    #[test]
    fn standard_fibration() {
        let q = standard();
        assert_eq!(blowdown_line_class(&q).unwrap(), PicardClass::H);
        assert_eq!(fiber_class(&q).unwrap(), PicardClass::new(2, [1, 1, 1, 1]));
        let fibers = reducible_fibers(&q).unwrap();
        for (a, b) in fibers {
            assert_eq!(a.d, 1);
            assert_eq!(b.d, 1);
        }
    }

    #[test]
    fn complement_is_the_line_configuration() {
        let curves = minus_one_curves();
        for q in disjoint_quadruples() {
            let line = blowdown_line_class(&q).unwrap();
            let mut expected: Vec<PicardClass> = Vec::new();
            for i in 0..4 {
                for j in i + 1..4 {
                    expected.push(line - q[i] - q[j]);
                }
            }
            expected.sort();
            let mut rest: Vec<PicardClass> = curves.iter().copied().filter(|c| !q.contains(c)).collect();
            rest.sort();
            assert_eq!(rest, expected);
        }
    }

    #[test]
    fn rejects_non_quadruple() {
        let bad = [
            PicardClass::exceptional(1),
            PicardClass::line_through(1, 2),
            PicardClass::exceptional(3),
            PicardClass::exceptional(4),
        ];
        assert!(matches!(fiber_class(&bad), Err(DelPezzoError::NotAQuadruple(_))));
    }

    #[test]
    fn anticanonical_identities() {
        let mk = PicardClass::anticanonical();
        assert_eq!((mk * 2).pair(&mk), 10);
        // dim |−2K| = h⁰ − 1 = 15 = 3g − 3 for g = 6
        let h0 = rr_surface(&(mk * 2));
        let g = adjunction_genus(&(mk * 2));
        assert_eq!(h0 - crate::exact::Rational::one(), g * crate::exact::Rational::from(3) - crate::exact::Rational::from(3));
    }
}
