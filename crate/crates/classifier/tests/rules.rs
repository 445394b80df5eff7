use std::collections::BTreeSet;

use chow_kernel::CicyContext;
use classifier::*;
use serde_json::json;

#[test]
fn corpus_is_complete_and_cited() {
    let ids: BTreeSet<&str> = CORPUS.iter().map(|r| r.id).collect();
    assert_eq!(ids.len(), CORPUS.len());
    for id in [
        "R-genus-bound",
        "R-degree-cap",
        "R-ci-omega",
        "R-hirzebruch-F1",
        "R-hirzebruch-F3",
        "R-mu-d",
        "R-adjunction-28-40",
        "R-ruled-38",
        "R-ruled-58",
        "R-ruled-e2q20",
        "R-clifford",
        "R-union-genus",
        "R-liaison-18",
        "A-base-locus-surface-degree",
        "A-berzolari",
        "A-secant-dim",
        "A-no-plane",
        "A-spannedness-h0",
    ] {
        assert!(ids.contains(id), "{id}");
    }
    for r in CORPUS {
        assert!(!r.paper_ref.is_empty());
        assert_eq!(r.id.starts_with("A-"), r.kind == RuleKind::Axiom);
        assert!(anchor(r.id).is_some(), "{}", r.id);
    }
}

#[test]
fn anchors_reproduce() {
    for r in CORPUS {
        let (ctx, check, expected) = anchor(r.id).unwrap();
        assert_eq!(evaluate(&check, &ctx).pass, expected, "{}", r.id);
    }
}

#[test]
fn f1_polynomial_by_hand() {
    // on F_1 with H = h + 2f: b = 15 - a, and (ah+bf)(ah+bf+K) = -3a^2 + 31a - 30
    let x5 = CicyContext::quintic();
    let o = evaluate(&Check::Hirzebruch { e: 1, d: 15, g: 16, components: 1 }, &x5);
    assert!(!o.pass);
    assert_eq!(o.values["genus_polynomial"], json!([-30, 31, -3]));
    assert_eq!(o.values["roots"], json!([]));
    // 3a^2 - 31a + 60 = 0 has discriminant 241, not a square
    assert!((0..=16).all(|s: i64| s * s != 961 - 720));
}

#[test]
fn f3_unique_class() {
    let o = evaluate(&Check::Hirzebruch { e: 3, d: 15, g: 16, components: 1 }, &CicyContext::quintic());
    assert_eq!(o.values["classes"], json!(["5h+15f"]));
    assert_eq!(o.values["genera"], json!([26]));
    assert!(!o.pass);
    let o = evaluate(&Check::Hirzebruch { e: 3, d: 15, g: 26, components: 1 }, &CicyContext::quintic());
    assert!(o.pass);
}

#[test]
fn adjunction_values() {
    // (4h+8f)(2h+5f) on F_1 = -8 + 20 + 16
    let x24 = CicyContext::x24();
    let o = evaluate(&Check::ScrollAdjunction { surface_degree: 3, g: 13 }, &x24);
    assert_eq!(o.values["pairings"], json!([28, 28]));
    let o = evaluate(&Check::ScrollAdjunction { surface_degree: 4, g: 17 }, &x24);
    assert_eq!(o.values["pairings"], json!([40, 40, 40]));
    assert!(!o.pass);
}

#[test]
fn ruled_surface_constants() {
    let x33 = CicyContext::x33();
    let o = evaluate(&Check::Ruled38 { d: 17, g: 18 }, &x33);
    assert!(!o.pass);
    assert_eq!(o.values["required"], json!(34));
    let rows = o.values["e_q_pairing"].as_array().unwrap();
    assert!(!rows.is_empty() && rows.iter().all(|r| r[2] == json!(38)));

    let o = evaluate(&Check::Ruled58 { d: 16, g: 17 }, &x33);
    assert!(!o.pass);
    assert_eq!(o.values["printed_solutions"], json!([]));

    let o = evaluate(&Check::RuledE2q20 { d: 18, g: 19 }, &x33);
    assert!(!o.pass);
    assert_eq!(o.values["feasible"], json!([]));

    let o = evaluate(&Check::Clifford { d: 16, g: 17, cliff: 2 }, &x33);
    assert_eq!((o.values["h0"].clone(), o.values["pi"].clone()), (json!(8), json!(12)));
    assert!(!o.pass);
}

#[test]
fn small_arithmetic_checks() {
    let x5 = CicyContext::quintic();
    let x33 = CicyContext::x33();
    let o = evaluate(&Check::MuD { mu: 1, d: 15, product: 15 }, &x5);
    assert!(o.pass);
    assert_eq!(o.values["allowed_d"], json!([15]));
    assert!(!evaluate(&Check::MuD { mu: 3, d: 5, product: 15 }, &x5).pass);
    let o = evaluate(&Check::Liaison { d: 18, total: 24, omega_total: 3, omega_target: 2, cut: 3 }, &x33);
    assert!(o.pass);
    assert_eq!(o.values["liaison_d"], json!(18));
    // C_i ∪ L with p_a = 13 and g_i = 12 meets L twice; omega restricted to L then has degree 0, not 2
    let o = evaluate(&Check::UnionGenus { g: 12, meets: None, target: 13, twist: 2 }, &x33);
    assert_eq!(o.values["meets"], json!(2));
    assert!(!o.pass);
    let o = evaluate(&Check::QuadricBound { d: 10, quadrics: 3, ambient: 4, c1: 2 }, &x5);
    assert_eq!(o.values["effective_bound"], json!(7));
    let o = evaluate(&Check::QuadricBound { d: 16, quadrics: 4, ambient: 5, c1: 2 }, &x33);
    assert!(o.pass);
    let o = evaluate(&Check::CiOmega { degrees: vec![2, 2, 5], ambient: 4, c1: 2, d: None }, &x5);
    assert_eq!(o.values["omega_twist"], json!(4));
    assert_eq!(o.values["degree"], json!(20));
}

#[test]
fn report_contents() {
    let r = classify(&CicyContext::quintic(), 2, RankRegime::Rank2).unwrap();
    let rep = rule_report(&r);
    let f1 = rep.rules.iter().find(|e| e.id == "R-hirzebruch-F1").unwrap();
    assert_eq!(f1.values["genus_polynomial"], json!([-30, 31, -3]));
    assert_eq!(f1.values["classes"], json!([]));
    assert_eq!(f1.annotations.len(), 2);
    assert_eq!(f1.kind, RuleKind::Arithmetic);
    let order: Vec<usize> = rep
        .rules
        .iter()
        .map(|e| CORPUS.iter().position(|r| r.id == e.id).unwrap())
        .collect();
    assert!(order.windows(2).all(|w| w[0] < w[1]));

    let r = classify(&CicyContext::x33(), 2, RankRegime::Rank2).unwrap();
    let rep = rule_report(&r);
    let np = rep.rules.iter().find(|e| e.id == "A-no-plane").unwrap();
    assert_eq!(np.kind, RuleKind::Axiom);
    assert_eq!(np.values.keys().collect::<Vec<_>>(), vec!["claim"]);
    let json = rep.to_json();
    for key in ["\"threefold\"", "\"c1\"", "\"rank_regime\"", "\"admissible_c2\"", "\"witnesses\"", "\"unresolved\"", "\"rules\""] {
        assert!(json.contains(key), "{key}");
    }
}
