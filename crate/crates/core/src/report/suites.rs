use super::{CheckResult, Suite, VerifyOptions};
use crate::delpezzo::{
    adjunction_genus, disjoint_quadruples, minus_one_curves, petersen_check, reducible_fiber_count, rr_surface,
    CurveGraph, PicardClass,
};
use crate::exact::{binomial, Rational};
use crate::families::{
    anticanonical_form_checks, derived_phi_class, euler_char_drop, psi_twist, psi_multipliers,
    scroll_identity_checks, t1_derive, t2_t3_constants, t4_derive, t5_derive_in, t5_ring,
    FamilyDerivation, FamilyError,
};
use crate::m6::{
    gieseker_petri, lc_decomposition, lc_interval, lc_residual, log_canonical_class, pair, slope,
    stated_phi_class, AffineRational,
};

pub(super) fn run(suite: Suite, options: &VerifyOptions) -> Vec<CheckResult> {
    match suite {
        Suite::All => unreachable!("expanded by the caller"),
        Suite::T1 => t1(),
        Suite::T2T3 => t2t3(),
        Suite::T4 => t4(),
        Suite::T5 => t5(options),
        Suite::DelPezzo => delpezzo(),
        Suite::Scroll => scroll(),
        Suite::Lc => lc(),
        Suite::Solve => solve(),
    }
}

type Expect<'a> = (&'a str, &'a str, &'a str);

/// One check per `(label, expected, anchor)` against the derivation's intermediates,
/// plus the final vector; every check errors if the derivation does.
fn derivation_checks(
    prefix: &str,
    derived: Result<FamilyDerivation, FamilyError>,
    labels: &[Expect<'_>],
    vector: (&str, &str),
) -> Vec<CheckResult> {
    let mut out = Vec::new();
    match derived {
        Ok(d) => {
            for &(label, expected, anchor) in labels {
                let actual = d
                    .intermediates
                    .get(label)
                    .map(ToString::to_string)
                    .ok_or_else(|| format!("no intermediate `{label}`"));
                out.push(CheckResult::compare(&format!("{prefix}.{label}"), anchor, expected, actual));
            }
            out.push(CheckResult::compare::<String>(
                &format!("{prefix}.vector"),
                vector.1,
                vector.0,
                Ok(&d.vector),
            ));
        }
        Err(e) => {
            for &(label, expected, anchor) in labels {
                out.push(CheckResult::error(&format!("{prefix}.{label}"), anchor, expected, &e));
            }
            out.push(CheckResult::error(&format!("{prefix}.vector"), vector.1, vector.0, &e));
        }
    }
    out
}

fn t1() -> Vec<CheckResult> {
    let derived = t1_derive();
    let mut out = derivation_checks(
        "t1",
        derived.clone(),
        &[
            ("lambda", "6", "T1 pencil: lambda from h0(-K)"),
            ("kappa", "25", "T1 pencil: kappa pushforward O(25)"),
            ("delta0", "47", "T1 pencil: delta pushforward O(47)"),
        ],
        ("(6, 47, 0, 0, 0; phi=1)", "T1 pencil: stated intersection numbers"),
    );
    // the stated δ₀ against the Mumford relation on the derived λ, κ
    out.push(CheckResult::compare(
        "t1.mumford",
        "T1 pencil: kappa = 12 lambda - delta",
        "47",
        derived.map(|d| {
            crate::m6::mumford_delta_from_kappa(d.number("lambda").unwrap(), d.number("kappa").unwrap())
        }),
    ));
    out
}

fn t2t3() -> Vec<CheckResult> {
    let (t2, t3) = t2_t3_constants();
    let phi = stated_phi_class();
    vec![
        CheckResult::compare::<String>("t2.vector", "T2 elliptic tails: stated numbers", "(1, 12, -1, 0, 0; phi=0)", Ok(&t2)),
        CheckResult::compare::<String>("t3.vector", "T3 genus-2 tails: stated numbers", "(3, 30, 0, -1, 0; phi=0)", Ok(&t3)),
        CheckResult::compare::<String>("t2.gp_pairing", "T2 against the Gieseker-Petri class", 0, Ok(pair(&t2, &gieseker_petri()))),
        CheckResult::compare::<String>("t2.phi_pairing", "T2 is contracted by phi", 0, Ok(pair(&t2, &phi))),
        CheckResult::compare::<String>("t3.phi_pairing", "T3 is contracted by phi", 0, Ok(pair(&t3, &phi))),
    ]
}

fn t4() -> Vec<CheckResult> {
    let mut out = derivation_checks(
        "t4",
        t4_derive(),
        &[
            ("chi_drop", "8", "T4 family: chi drops by 2 C(4,3)"),
            ("K2_drop", "32", "T4 family: K^2 drops by 32"),
            ("c2_drop", "64", "T4 family: c2 drops by 64 (Noether)"),
            ("euler_correction", "6", "T4 family: topological Euler characteristic correction"),
            ("lambda", "16", "T4 family: lambda = 4*6 - 8"),
            ("delta0", "118", "T4 family: delta0 = 4*47 - 70"),
        ],
        ("(16, 118, 0, 0, 1; phi=4)", "T4 family: stated intersection numbers"),
    );
    let expected: Vec<String> = (0..=20u64).map(|k| binomial(k, 3).to_string()).collect();
    let actual: Result<Vec<String>, FamilyError> = (0..=20u32)
        .map(|k| euler_char_drop(k).map(|r| r.to_string()))
        .collect();
    out.push(CheckResult::compare(
        "t4.euler_char_drop",
        "Euler characteristic of a surface blown up at a k-fold point drops by C(k,3)",
        expected.join(","),
        actual.map(|v| v.join(",")),
    ));
    out
}

fn t5(options: &VerifyOptions) -> Vec<CheckResult> {
    let derived = match &options.t5_ring {
        Some(ring) => t5_derive_in(ring),
        None => t5_ring().and_then(|r| t5_derive_in(&r)),
    };
    let mut out = derivation_checks(
        "t5",
        derived,
        &[
            ("deg", "9", "T5 family: (3H1 - sum E + H2)^3 = 9"),
            ("S", "5*H1^5 + 9*H1^4*H2", "T5 family: class of the image surface"),
            ("C", "10*H1^6 + 28*H1^5*H2", "T5 family: class of the curve family"),
            ("omega", "H1 + 3*H2", "T5 family: relative dualizing sheaf by adjunction"),
            ("kappa", "88", "T5 family: kappa = 88"),
            ("chi", "16", "T5 family: chi(O_C) = 16"),
            ("lambda", "21", "T5 family: lambda = 21"),
            ("delta0", "164", "T5 family: delta0 = 12*21 - 88"),
            ("psi*C", "2*H1 + 10*H2", "T5 family: pullback of the curve class under psi"),
            ("phi", "10", "T5 family: phi pairing = 10"),
        ],
        ("(21, 164, 0, 0, 0; phi=10)", "T5 family: stated intersection numbers"),
    );
    // the surface class is the id the fault-injection run looks for
    for c in &mut out {
        if c.id == "t5.S" {
            c.id = "t5.image_class".into();
        }
    }
    out.push(CheckResult::compare(
        "t5.psi_twist",
        "T5 family: every multiplier of psi has degree 4",
        4,
        psi_twist(&psi_multipliers()),
    ));
    out
}

fn delpezzo() -> Vec<CheckResult> {
    let curves = minus_one_curves();
    let graph = CurveGraph::new(curves.clone());
    let report = graph.report();
    let quads = disjoint_quadruples();
    let fibers: Vec<String> = quads
        .iter()
        .map(|q| reducible_fiber_count(q).map_or_else(|e| e.to_string(), |n| n.to_string()))
        .collect();
    let minus_k = PicardClass::anticanonical();
    let minus_2k = minus_k * 2;
    let a = "quintic del Pezzo:";
    let ok = |id: &str, anchor: String, expected: &str, actual: String| {
        CheckResult::compare::<String>(id, &anchor, expected, Ok(actual))
    };
    vec![
        ok("delpezzo.minus_one_curves", format!("{a} ten (-1)-curves"), "10", curves.len().to_string()),
        ok(
            "delpezzo.graph.regular",
            format!("{a} intersection graph is 3-regular"),
            "3",
            report.regular_degree.map_or("irregular".into(), |d| d.to_string()),
        ),
        ok("delpezzo.graph.edges", format!("{a} intersection graph has 15 edges"), "15", report.edges.to_string()),
        ok(
            "delpezzo.graph.girth",
            format!("{a} intersection graph has girth 5"),
            "5",
            report.girth.map_or("acyclic".into(), |g| g.to_string()),
        ),
        ok(
            "delpezzo.graph.automorphisms",
            format!("{a} S5 symmetry of the Petersen graph"),
            "120",
            report.automorphisms.to_string(),
        ),
        ok(
            "delpezzo.graph.petersen",
            format!("{a} intersection graph is the Petersen graph"),
            "ok",
            petersen_check(&graph).map_or_else(|e| e.to_string(), |_| "ok".into()),
        ),
        ok("delpezzo.blowdowns", format!("{a} five blowdowns to the plane"), "5", quads.len().to_string()),
        ok(
            "delpezzo.reducible_fibers",
            format!("{a} each conic fibration has 3 reducible conics"),
            "3,3,3,3,3",
            fibers.join(","),
        ),
        ok("delpezzo.k_squared", format!("{a} K^2 = 5"), "5", PicardClass::K.self_intersection().to_string()),
        ok("delpezzo.h0_minus_k", format!("{a} h0(-K) = 6"), "6", rr_surface(&minus_k).to_string()),
        ok("delpezzo.h0_minus_2k", format!("{a} h0(-2K) = 16"), "16", rr_surface(&minus_2k).to_string()),
        ok(
            "delpezzo.genus_minus_2k",
            format!("{a} bicanonical curves have genus 6"),
            "6",
            adjunction_genus(&minus_2k).to_string(),
        ),
        ok(
            "delpezzo.minus_2k_dot_minus_k",
            format!("{a} (-2K).(-K) = 10"),
            "10",
            minus_2k.pair(&minus_k).to_string(),
        ),
    ]
}

fn scroll() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let anchor = "projected scroll: rank conditions on the ruling parametrization";
    match scroll_identity_checks() {
        Ok(checks) => {
            for c in checks {
                let id = if c.expect_zero {
                    format!("scroll.{}", c.label.replace(' ', "_"))
                } else {
                    "scroll.quadric_nonvanishing".to_string()
                };
                let expected = if c.expect_zero { "0" } else { "nonzero polynomial" };
                let ok = c.holds();
                out.push(CheckResult::predicate(&id, anchor, expected, c.value.to_string(), ok));
            }
        }
        Err(e) => out.push(CheckResult::error("scroll.minors", anchor, "all minors vanish", e)),
    }
    let a = "anticanonical (3,1)-forms: vanish on the four sections and span h0(-K)";
    match anticanonical_form_checks() {
        Ok(r) => {
            let holding = r.vanishing.iter().filter(|c| c.holds()).count();
            out.push(CheckResult::compare::<String>(
                "scroll.anticanonical.vanishing",
                a,
                "32/32",
                Ok(format!("{holding}/{}", r.vanishing.len())),
            ));
            out.push(CheckResult::compare::<String>("scroll.anticanonical.rank", a, 6, Ok(r.generic_rank)));
        }
        Err(e) => {
            out.push(CheckResult::error("scroll.anticanonical.vanishing", a, "32/32", &e));
            out.push(CheckResult::error("scroll.anticanonical.rank", a, "6", &e));
        }
    }
    out
}

fn lc() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let anchor = "log canonical models: decomposition of 13 lambda - (2 - alpha) delta";
    out.push(CheckResult::compare::<String>(
        "lc.pushforward",
        "log canonical models: pushforward is O(47 alpha - 16)",
        "-16 + 47*alpha",
        Ok(log_canonical_class().pushforward()),
    ));
    let residual = lc_residual(&stated_phi_class());
    out.push(CheckResult::compare::<String>(
        "lc.lambda_row",
        anchor,
        "1645 - 4794*alpha",
        Ok(&residual.a),
    ));
    // coefficients as printed alongside the decomposition
    let stated = [
        ("c_gp", "35/2 - 51*alpha"),
        ("c1", "9 - 11*alpha"),
        ("c2", "19 - 29*alpha"),
        ("c3", "34 - 96*alpha"),
    ];
    match lc_decomposition() {
        Ok(dec) => {
            for ((name, expected), c) in stated.iter().zip(dec.coefficients()) {
                out.push(CheckResult::compare::<String>(
                    &format!("lc.decomposition.{name}"),
                    anchor,
                    expected,
                    Ok(c),
                ));
            }
            let left = residual.minus(&dec.recompose());
            out.push(CheckResult::predicate(
                "lc.consistency",
                "log canonical models: all five basis equations hold identically in alpha",
                "0",
                if left.is_zero() { "0".into() } else { left.to_string() },
                left.is_zero(),
            ));
        }
        Err(e) => {
            for (name, expected) in stated {
                out.push(CheckResult::error(&format!("lc.decomposition.{name}"), anchor, expected, &e));
            }
        }
    }
    let ia = "log canonical models: isomorphic to X6 for 16/47 < alpha <= 35/102";
    out.push(CheckResult::compare("lc.interval", ia, "(16/47, 35/102]", lc_interval()));
    out.push(CheckResult::compare(
        "lc.interval.nondegenerate",
        ia,
        "16/47 < 35/102",
        lc_interval().map(|i| {
            let rel = if i.lower < i.upper { "<" } else { ">=" };
            format!("{} {rel} {}", i.lower, i.upper)
        }),
    ));
    out.push(CheckResult::compare(
        "lc.interval.upper_threshold",
        ia,
        "c_gp",
        lc_interval().map(|i| {
            let names = ["c_gp", "c1", "c2", "c3"];
            names[i.thresholds.iter().position(|t| *t == i.upper).expect("upper is a threshold")]
        }),
    ));
    out
}

fn solve() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let a = "phi*O(1) solved from the test families";
    out.push(CheckResult::compare(
        "solve.phi_class",
        a,
        "102λ − 13δ₀ − 54δ₁ − 84δ₂ − 94δ₃",
        derived_phi_class(),
    ));
    let families = crate::families::all_families();
    out.push(CheckResult::compare(
        "solve.roundtrip",
        a,
        "1,0,0,4,10",
        families.and_then(|fs| {
            let d = derived_phi_class()?;
            Ok(fs.iter().map(|t| pair(t, &d).to_string()).collect::<Vec<_>>().join(","))
        }),
    ));
    let gp = slope(&gieseker_petri());
    let phi = slope(&stated_phi_class());
    out.push(CheckResult::compare(
        "solve.slope_gp",
        "Gieseker-Petri divisor has slope 47/6",
        "47/6",
        gp.clone(),
    ));
    out.push(CheckResult::compare(
        "solve.slope_phi",
        "moving slope bound 102/13",
        "102/13",
        phi.clone(),
    ));
    let bound = gp.and_then(|g| phi.map(|p| (g, p)));
    out.push(CheckResult::compare(
        "solve.slope_bound",
        "moving slope: 47/6 <= s' <= 102/13",
        "47/6 ≤ s′ ≤ 102/13",
        bound.clone().map(|(g, p)| {
            let rel = if g <= p { "≤" } else { ">" };
            format!("{g} {rel} s′ ≤ {p}")
        }),
    ));
    let cap = Rational::from(65) / Rational::from(8);
    out.push(CheckResult::compare(
        "solve.below_65_8",
        "moving slope bound is strictly smaller than 65/8",
        "47/6 < 102/13 < 65/8",
        bound.map(|(g, p)| {
            let r1 = if g < p { "<" } else { ">=" };
            let r2 = if p < cap { "<" } else { ">=" };
            format!("{g} {r1} {p} {r2} {cap}")
        }),
    ));
    out.push(CheckResult::compare::<String>(
        "solve.lc_threshold_root",
        "log canonical models: c_gp vanishes at 35/102",
        "35/102",
        Ok(AffineRational::new(Rational::from(35) / Rational::from(2), Rational::from(-51))
            .root()
            .expect("depends on alpha")),
    ));
    out
}
