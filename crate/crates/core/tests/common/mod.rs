//! Strategies, brute-force oracles and property bodies shared by the property
//! and acceptance targets.

#![allow(dead_code)]

use chow_verify_core::chow::{builtin_ring, mk_multiprojective, Cycle, Ring};
use chow_verify_core::dsl::{parse_expr, print_expr, Expr};
use chow_verify_core::exact::{rat, Rational};
use chow_verify_core::m6::{pair, solve_class, DivisorClassM6, TestFamilyVector};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

pub fn q(n: i64) -> Rational {
    Rational::from(n)
}

/// Run `body` on `cases` inputs from `strategy`; returns the number of cases run.
pub fn run_cases<S: Strategy>(
    cases: u32,
    strategy: S,
    body: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<u32, String> {
    let mut runner = TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    });
    runner.run(&strategy, body).map_err(|e| e.to_string())?;
    Ok(cases)
}

// ---- degree oracle -------------------------------------------------------

/// A product of projective spaces with dimensions `dims`, and `Σ dims`
/// linear forms with small integer coefficients.
pub fn multiprojective_case() -> impl Strategy<Value = (Vec<u32>, Vec<Vec<i64>>)> {
    prop::collection::vec(1u32..=3, 1..=3)
        .prop_filter("total dimension at most 6", |d| d.iter().sum::<u32>() <= 6)
        .prop_flat_map(|dims| {
            let r = dims.len();
            let k = dims.iter().sum::<u32>() as usize;
            (
                Just(dims),
                prop::collection::vec(prop::collection::vec(-3i64..=3, r), k),
            )
        })
}

/// Degree of `Π_j (Σ_i c_ji H_i)` by expanding every choice of one generator
/// per factor and keeping the choices that hit `Π H_i^{n_i}` exactly.
pub fn brute_force_degree(dims: &[u32], forms: &[Vec<i64>]) -> i64 {
    let r = dims.len();
    let k = forms.len();
    let mut total = 0i64;
    let mut choice = vec![0usize; k];
    loop {
        let mut counts = vec![0u32; r];
        for &c in &choice {
            counts[c] += 1;
        }
        if counts == dims {
            total += choice.iter().enumerate().map(|(j, &i)| forms[j][i]).product::<i64>();
        }
        let mut pos = 0;
        loop {
            if pos == k {
                return total;
            }
            choice[pos] += 1;
            if choice[pos] < r {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

/// `k!/Π n_i! · Π c_i^{n_i}`: degree of `a^k` for `a = Σ c_i H_i`.
pub fn multinomial_power_degree(dims: &[u32], coeffs: &[i64]) -> Rational {
    let fact = |n: u32| (1..=n as i64).map(q).product::<Rational>();
    let k: u32 = dims.iter().sum();
    let mut out = fact(k);
    for (n, c) in dims.iter().zip(coeffs) {
        out = out / fact(*n) * q(*c).pow(*n);
    }
    out
}

pub fn names(r: usize) -> Vec<String> {
    (1..=r).map(|i| format!("G{i}")).collect()
}

pub fn ring_for(dims: &[u32]) -> Ring {
    let n = names(dims.len());
    let spec: Vec<(&str, u32)> = n.iter().map(String::as_str).zip(dims.iter().copied()).collect();
    mk_multiprojective(&spec).unwrap()
}

pub fn linear(ring: &Ring, coeffs: &[i64]) -> Cycle {
    Cycle::linear(ring, &coeffs.iter().map(|&c| q(c)).collect::<Vec<_>>())
}

pub fn degree_oracle_case((dims, forms): (Vec<u32>, Vec<Vec<i64>>)) -> Result<(), TestCaseError> {
    let ring = ring_for(&dims);
    let mut product = Cycle::constant(&ring, Rational::one());
    for f in &forms {
        product = product.multiply(&linear(&ring, f)).unwrap();
    }
    prop_assert_eq!(product.degree().unwrap(), q(brute_force_degree(&dims, &forms)));
    let a = linear(&ring, &forms[0]);
    let k: u32 = dims.iter().sum();
    prop_assert_eq!(a.pow(k).degree().unwrap(), multinomial_power_degree(&dims, &forms[0]));
    Ok(())
}

// ---- ring axioms ---------------------------------------------------------

const RING_NAMES: [&str; 3] = ["P7xP1", "P2xP1_blown4", "SxP1"];

/// A random cycle: a sum of up to four scaled monomials of degree at most 3.
pub fn cycle_in(ring: &Ring, terms: &[(i64, Vec<u32>)]) -> Cycle {
    let n = ring.generators().len();
    let mut acc = Cycle::zero(ring);
    for (c, exps) in terms {
        let powers: Vec<(&str, u32)> = exps
            .iter()
            .enumerate()
            .map(|(i, e)| (ring.generators()[i % n].as_str(), *e))
            .collect();
        acc = acc.plus(&Cycle::monomial(ring, q(*c), &powers).unwrap()).unwrap();
    }
    acc
}

type Terms = Vec<(i64, Vec<u32>)>;

fn terms() -> impl Strategy<Value = Terms> {
    prop::collection::vec((-4i64..=4, prop::collection::vec(0u32..=1, 0..=3)), 0..=4)
}

pub fn ring_axiom_case() -> impl Strategy<Value = (usize, Terms, Terms, Terms)> {
    (0..RING_NAMES.len(), terms(), terms(), terms())
}

pub fn ring_axioms((ri, ta, tb, tc): (usize, Terms, Terms, Terms)) -> Result<(), TestCaseError> {
    let ring = builtin_ring(RING_NAMES[ri]).unwrap();
    let (a, b, c) = (cycle_in(&ring, &ta), cycle_in(&ring, &tb), cycle_in(&ring, &tc));
    let one = Cycle::constant(&ring, Rational::one());
    let m = |x: &Cycle, y: &Cycle| x.multiply(y).unwrap();
    let p = |x: &Cycle, y: &Cycle| x.plus(y).unwrap();
    prop_assert_eq!(m(&a, &b), m(&b, &a));
    prop_assert_eq!(m(&m(&a, &b), &c), m(&a, &m(&b, &c)));
    prop_assert_eq!(m(&a, &p(&b, &c)), p(&m(&a, &b), &m(&a, &c)));
    prop_assert_eq!(p(&a, &b), p(&b, &a));
    prop_assert_eq!(m(&a, &one), a.clone());
    prop_assert!(p(&a, &a.neg()).is_zero());
    prop_assert_eq!(a.pow(3), m(&m(&a, &a), &a));
    Ok(())
}

// ---- solve / pair round trip ---------------------------------------------

/// Determinant by permutation expansion, independent of the elimination code.
pub fn leibniz_det(m: &[[i64; 5]; 5]) -> i128 {
    fn perms(k: usize, used: &mut [bool; 5], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                perms(k, used, cur, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut all = Vec::new();
    perms(5, &mut [false; 5], &mut Vec::new(), &mut all);
    all.iter()
        .map(|p| {
            let inversions = (0..5)
                .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            sign * (0..5).map(|i| m[i][p[i]] as i128).product::<i128>()
        })
        .sum()
}

pub fn solve_case() -> impl Strategy<Value = ([[i64; 5]; 5], [i64; 5])> {
    (
        prop::array::uniform5(prop::array::uniform5(-20i64..=20)),
        prop::array::uniform5(-50i64..=50),
    )
        .prop_filter("invertible", |(m, _)| leibniz_det(m) != 0)
}

pub fn solve_roundtrip((m, class): ([[i64; 5]; 5], [i64; 5])) -> Result<(), TestCaseError> {
    let d = DivisorClassM6::from_basis_coefficients(&class.map(q));
    let families: Vec<TestFamilyVector> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut t = TestFamilyVector::from_ints(&format!("F{i}"), *row, None);
            t.phi = Some(pair(&t, &d));
            t
        })
        .collect();
    let solved = solve_class(&families).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(&solved, &d);
    for t in &families {
        prop_assert_eq!(&pair(t, &solved), t.phi.as_ref().unwrap());
    }
    Ok(())
}

// ---- parser round trip ----------------------------------------------------

pub fn arb_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        prop::sample::select(vec!["H1", "H2", "E1", "K", "h", "x_2"]).prop_map(Expr::generator),
        (-30i64..=30, 1i64..=6).prop_map(|(n, d)| Expr::Scalar(rat(n, d).unwrap())),
    ];
    leaf.prop_recursive(5, 48, 4, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 2..=4).prop_map(Expr::Sum),
            prop::collection::vec(inner.clone(), 2..=4).prop_map(Expr::Product),
            (inner.clone(), 0u32..=5).prop_map(|(b, e)| Expr::Power(Box::new(b), e)),
            inner.prop_map(|e| Expr::Neg(Box::new(e))),
        ]
    })
}

pub fn parser_roundtrip(ast: Expr) -> Result<(), TestCaseError> {
    let text = print_expr(&ast);
    let back = parse_expr(&text).map_err(|e| TestCaseError::fail(format!("{text}: {e}")))?;
    prop_assert_eq!(&back, &ast.normalize(), "printed as {}", text);
    prop_assert_eq!(print_expr(&back), text);
    Ok(())
}
