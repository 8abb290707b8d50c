mod common;

use chow_verify_core::chow::{builtin_ring, eval_str, Cycle};
use chow_verify_core::dsl::parse_expr;
use chow_verify_core::exact::{binomial, bindings, Matrix, MultiPoly, Rational};
use common::*;
use proptest::prelude::*;

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-1000i64..=1000, 1i64..=50).prop_map(|(n, d)| chow_verify_core::exact::rat(n, d).unwrap())
}

fn arb_poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(
        (-5i64..=5, 0u32..=2, 0u32..=2, 0u32..=2),
        0..=4,
    )
    .prop_map(|terms| {
        terms.into_iter().fold(MultiPoly::zero(), |acc, (c, a, b, d)| {
            &acc + &MultiPoly::monomial(q(c), &[("x", a), ("y", b), ("z", d)])
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn degree_matches_brute_force(case in multiprojective_case()) {
        degree_oracle_case(case)?;
    }

    #[test]
    fn ring_axioms_hold(case in ring_axiom_case()) {
        ring_axioms(case)?;
    }

    #[test]
    fn rational_field_axioms(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Rational::zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.recip().unwrap(), Rational::one());
        }
        let back: Rational = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn polynomial_ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn substitution_identity_and_evaluation(p in arb_poly(), x in arb_rational(), y in arb_rational()) {
        let id = bindings([("x", MultiPoly::var("x")), ("y", MultiPoly::var("y")), ("z", MultiPoly::var("z"))]);
        prop_assert_eq!(p.substitute(&id).unwrap(), p.clone());
        let consts = bindings([
            ("x", MultiPoly::constant(x.clone())),
            ("y", MultiPoly::constant(y.clone())),
            ("z", MultiPoly::constant(q(2))),
        ]);
        let values = [("x", x), ("y", y), ("z", q(2))]
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect();
        prop_assert_eq!(p.substitute(&consts).unwrap().coefficient(&[]), p.evaluate(&values).unwrap());
    }

    #[test]
    fn parser_roundtrips(ast in arb_expr()) {
        parser_roundtrip(ast)?;
    }

    #[test]
    fn parser_never_panics(src in "[HE12K+*^()/ \\-0-9a-z_.]{0,40}") {
        let _ = parse_expr(&src);
    }

    #[test]
    fn solve_pair_roundtrip(case in solve_case()) {
        solve_roundtrip(case)?;
    }

    #[test]
    fn degree_is_linear(a in -5i64..=5, b in -5i64..=5, x in 0usize..4, y in 0usize..4) {
        let ring = builtin_ring("P2xP1_blown4").unwrap();
        let tops = ["H1t^2*H2t", "E4^3", "H2t*E1^2", "H1t*E4^2"];
        let cx = eval_str(&ring, tops[x]).unwrap();
        let cy = eval_str(&ring, tops[y]).unwrap();
        let combo = cx.scale(&q(a)).plus(&cy.scale(&q(b))).unwrap();
        prop_assert_eq!(
            combo.degree().unwrap(),
            q(a) * cx.degree().unwrap() + q(b) * cy.degree().unwrap()
        );
    }

    #[test]
    fn projection_formula(c1 in -4i64..=4, c2 in -4i64..=4, c3 in -4i64..=4, i in 1usize..=4) {
        // a pullback of ambient degree 2 meets an exceptional divisor in degree 0
        let ring = builtin_ring("P2xP1_blown4").unwrap();
        let gamma = eval_str(&ring, &format!("{c1}*H1t^2 + {c2}*H1t*H2t + {c3}*H2t*H1t")).unwrap();
        let e = Cycle::generator(&ring, &format!("E{i}")).unwrap();
        prop_assert_eq!(gamma.multiply(&e).unwrap().degree().unwrap(), q(0));
    }
}

#[test]
fn binomial_recurrence() {
    for n in 1..=30u64 {
        for k in 1..n {
            assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
        assert_eq!(binomial(n, 0), Rational::one());
        assert_eq!(binomial(n, n), Rational::one());
        assert_eq!(binomial(n, n + 1), Rational::zero());
    }
}

#[test]
fn blowup_cube_term_by_term() {
    // (A − ΣE)³ with A = 3H1t + H2t: A³ − 3A²ΣE + 3AΣE² − ΣE³
    let ring = builtin_ring("P2xP1_blown4").unwrap();
    let deg = |s: &str| eval_str(&ring, s).unwrap().degree().unwrap();
    let a3 = deg("(3*H1t + H2t)^3");
    let a2e = deg("-3*(3*H1t + H2t)^2*(E1 + E2 + E3 + E4)");
    let ae2 = deg("3*(3*H1t + H2t)*(E1^2 + E2^2 + E3^2 + E4^2)");
    let e3 = deg("-(E1^3 + E2^3 + E3^3 + E4^3)");
    assert_eq!([a3.clone(), a2e.clone(), ae2.clone(), e3.clone()], [q(27), q(0), q(-21), q(3)]);
    assert_eq!(a3 + a2e + ae2 + e3, q(9));
    // the stated grouping 27 − 12 + 3 − 9 has the same total
    assert_eq!(q(27 - 12 + 3 - 9), q(9));
}

#[test]
fn exceptional_cubes_from_normal_bundle() {
    // E³ = K·Σ − (2g − 2) for a section curve Σ of genus 0
    let ring = builtin_ring("P2xP1").unwrap();
    let k = eval_str(&ring, "-3*H1t - 2*H2t").unwrap();
    let constant_section = eval_str(&ring, "H1t^2").unwrap();
    let diagonal_section = eval_str(&ring, "H1t^2 + H1t*H2t").unwrap();
    let e_cubed = |s: &Cycle| k.multiply(s).unwrap().degree().unwrap() + q(2);
    let blown = builtin_ring("P2xP1_blown4").unwrap();
    assert_eq!(eval_str(&blown, "E1^3").unwrap().degree().unwrap(), e_cubed(&constant_section));
    assert_eq!(eval_str(&blown, "E4^3").unwrap().degree().unwrap(), e_cubed(&diagonal_section));
}

#[test]
fn matrix_rank_of_random_products() {
    // u·vᵀ has rank 1
    let u = [1, -2, 3, 0, 5];
    let v = [2, 7, -1, 4];
    let rows = u.iter().map(|&a| v.iter().map(|&b| q(a * b)).collect()).collect();
    assert_eq!(Matrix::from_rows(rows).rank(), 1);
}
