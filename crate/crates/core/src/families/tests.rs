use super::*;
use crate::chow::parse_ring_config;
use crate::exact::rat;
use crate::m6::{pair, stated_phi_class};

fn q(n: i64) -> Rational {
    Rational::from(n)
}

#[test]
fn t1_vector() {
    let d = t1_derive().unwrap();
    assert_eq!(d.number("kappa"), Some(&q(25)));
    assert_eq!(d.number("lambda"), Some(&q(6)));
    // 12·6 − 25
    assert_eq!(d.number("delta0"), Some(&q(12 * 6 - 25)));
    assert_eq!(d.vector, TestFamilyVector::from_ints("T1", [6, 47, 0, 0, 0], Some(1)));
}

#[test]
fn t2_t3_are_contracted() {
    let (t2, t3) = t2_t3_constants();
    assert_eq!(t2.to_string(), "(1, 12, -1, 0, 0; phi=0)");
    assert_eq!(t3.to_string(), "(3, 30, 0, -1, 0; phi=0)");
    assert_eq!(pair(&t2, &crate::m6::gieseker_petri()), q(0));
    assert_eq!(pair(&t2, &stated_phi_class()), q(0));
    assert_eq!(pair(&t3, &stated_phi_class()), q(0));
}

#[test]
fn euler_char_drop_values() {
    assert_eq!(euler_char_drop(4).unwrap(), q(4));
    assert_eq!(euler_char_drop(2).unwrap(), q(0));
    assert_eq!(euler_char_drop(0).unwrap(), q(0));
    assert_eq!(euler_char_drop(10).unwrap(), q(120));
}

#[test]
fn euler_char_drop_against_telescoping_oracle() {
    for k in 0..=20i64 {
        let telescoped: Rational = (0..k).map(|i| rat((i + 1) * (i + 2), 2).unwrap()).sum();
        assert_eq!(euler_char_drop(k as u32).unwrap(), telescoped - q(k * k));
    }
}

#[test]
fn t4_vector() {
    let d = t4_derive().unwrap();
    assert_eq!(d.number("chi_drop"), Some(&q(8)));
    assert_eq!(d.number("K2_drop"), Some(&q(32)));
    assert_eq!(d.number("c2_drop"), Some(&q(64)));
    assert_eq!(d.number("E_cubed"), Some(&q(1)));
    assert_eq!(d.vector, TestFamilyVector::from_ints("T4", [16, 118, 0, 0, 1], Some(4)));
}

#[test]
fn t5_vector_and_intermediates() {
    let d = t5_derive().unwrap();
    assert_eq!(d.number("deg"), Some(&q(9)));
    assert_eq!(d.class("S").unwrap().to_string(), "5*H1^5 + 9*H1^4*H2");
    assert_eq!(d.class("C").unwrap().to_string(), "10*H1^6 + 28*H1^5*H2");
    assert_eq!(d.class("omega").unwrap().to_string(), "H1 + 3*H2");
    assert_eq!(d.number("kappa"), Some(&q(88)));
    assert_eq!(d.number("chi"), Some(&q(16)));
    assert_eq!(d.number("lambda"), Some(&q(21)));
    assert_eq!(d.number("delta0"), Some(&q(164)));
    assert_eq!(d.class("psi*C").unwrap().to_string(), "2*H1 + 10*H2");
    assert_eq!(d.number("phi"), Some(&q(10)));
    assert_eq!(d.vector, TestFamilyVector::from_ints("T5", [21, 164, 0, 0, 0], Some(10)));
}

#[test]
fn t5_with_corrupted_ring_changes_image_class() {
    let bad = r#"{"variant":"blowup3fold","ambient":[["H1t",2],["H2t",1]],"canonical":"-3*H1t - 2*H2t",
      "centers":[
        {"name":"E1","kind":"curve","pairings":{"H1t":0,"H2t":1}},
        {"name":"E2","kind":"curve","pairings":{"H1t":0,"H2t":1}},
        {"name":"E3","kind":"curve","pairings":{"H1t":0,"H2t":1}},
        {"name":"E4","kind":"curve","pairings":{"H1t":2,"H2t":1}}]}"#;
    let ring = parse_ring_config(bad).unwrap().build().unwrap();
    let d = t5_derive_in(&ring).unwrap();
    assert_ne!(d.class("S").unwrap().to_string(), "5*H1^5 + 9*H1^4*H2");
}

#[test]
fn pipeline_reproduces_phi_class() {
    assert_eq!(derived_phi_class().unwrap(), stated_phi_class());
}

#[test]
fn psi_examples() {
    let p7 = builtin_ring("P7xP1").unwrap();
    let c = psi_pullback(&eval_str(&p7, "2*H1 + 2*H2").unwrap()).unwrap();
    assert_eq!(c, eval_str(&p7, "2*H1 + 10*H2").unwrap());
    let h2 = eval_str(&p7, "H2").unwrap();
    assert_eq!(psi_pullback(&h2).unwrap(), h2);
    for m in psi_multipliers() {
        assert_eq!(m.homogeneous_degree_in(&["lambda", "mu"]), Some(4));
    }
    assert!(psi_pullback(&eval_str(&p7, "H1^2").unwrap()).is_err());
    let mut bad = psi_multipliers();
    bad[3] = MultiPoly::var("lambda");
    assert!(psi_twist(&bad).is_err());
}

#[test]
fn scroll_minors_vanish() {
    let checks = scroll_identity_checks().unwrap();
    assert_eq!(checks.len(), 7);
    assert!(checks[..6].iter().all(|c| c.value.is_zero()));
    let labels: Vec<_> = checks.iter().map(|c| c.label.as_str()).collect();
    assert!(labels.contains(&"minor x0x4 - x1x3"));
    assert!(labels.contains(&"minor x2x5 - x3x3"));
    let witness = &checks[6].value;
    assert_eq!(witness.to_string(), "-lambda^3*mu^3*s^2 + lambda^2*mu^2*t^2");
    let at = [("lambda", q(1)), ("mu", q(1)), ("t", q(1)), ("s", q(0))]
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect();
    assert_eq!(witness.evaluate(&at).unwrap(), q(1));
}

#[test]
fn anticanonical_forms_vanish_on_sections() {
    let r = anticanonical_form_checks().unwrap();
    assert_eq!(r.vanishing.len(), 32);
    assert_eq!(r.generic_rank, 6);
    assert_eq!(
        r.generic_rank as i64,
        rr_surface(&PicardClass::anticanonical()).to_i64().unwrap()
    );
    // at Σ₁ the first form has the factor x1
    let f1 = &anticanonical_forms()[0];
    assert_eq!(f1.coefficient(&[("x0", 3)]), q(0));
}
