use std::collections::BTreeSet;

use chow_kernel::{CicyContext, Mode};
use classifier::*;
use serre_constructions::{published_c2_list, CurveComponent, QUINTIC_RANK2_PAIRS};

fn c2_set(ctx: &CicyContext, regime: RankRegime) -> Vec<i64> {
    classify(ctx, 2, regime).unwrap().admissible_c2
}

#[test]
fn quintic_rank2_pairs() {
    let r = classify(&CicyContext::quintic(), 2, RankRegime::Rank2).unwrap();
    assert_eq!(r.pairs, vec![(1, 0), (2, 0), (2, 5), (2, 10)]);
    assert_eq!(r.pairs, QUINTIC_RANK2_PAIRS.to_vec());
    assert_eq!(r.admissible_c2, vec![0, 5, 10]);
    assert!(r.unresolved.is_empty());
}

#[test]
fn quintic_all_ranks() {
    let r = classify(&CicyContext::quintic(), 2, RankRegime::HigherRank).unwrap();
    assert_eq!(r.admissible_c2, vec![0, 5, 10, 15, 20]);
    let windows: BTreeSet<(i64, i64)> = r.rank_windows.values().copied().collect();
    for w in [(3, 14), (3, 8), (3, 5)] {
        assert!(windows.contains(&w), "{w:?}");
    }
    assert_eq!(r.rank_windows["resolution:O(-2)->O^m"], (3, 14));
    assert_eq!(r.rank_windows["resolution:O(-1)+O(-1)->O^m"], (3, 8));
    assert_eq!(r.rank_windows["resolution:O(-1)->O^m+O(1)"], (3, 5));
    assert_eq!(published_c2_list(&CicyContext::quintic()).unwrap(), r.admissible_c2.as_slice());
}

#[test]
fn x24_and_x33() {
    let x24 = classify(&CicyContext::x24(), 2, RankRegime::Rank2).unwrap();
    assert_eq!(x24.admissible_c2, vec![0, 4, 8, 11, 16]);
    assert_eq!(x24.unresolved, vec![16]);
    let x33 = classify(&CicyContext::x33(), 2, RankRegime::Rank2).unwrap();
    assert_eq!(x33.admissible_c2, vec![0, 9, 12, 15, 16, 18]);
    assert_eq!(x33.unresolved, vec![16]);
    for ctx in [CicyContext::x24(), CicyContext::x33()] {
        assert_eq!(published_c2_list(&ctx).unwrap(), c2_set(&ctx, RankRegime::Rank2).as_slice());
    }
}

#[test]
fn witnesses_cover_nonzero_c2() {
    for ctx in [CicyContext::quintic(), CicyContext::x24(), CicyContext::x33()] {
        let r = classify(&ctx, 2, RankRegime::Rank2).unwrap();
        for c2 in &r.admissible_c2 {
            if *c2 != 0 && !r.unresolved.contains(c2) {
                assert!(!r.witnesses[c2].is_empty(), "{} c2={c2}", ctx.label());
            }
        }
    }
    let r = classify(&CicyContext::x24(), 2, RankRegime::Rank2).unwrap();
    assert!(r.witnesses[&11].contains(&"plane-cubic-extension".to_string()));
    assert!(r.witnesses[&8].contains(&"split:O(1)+O(1)".to_string()));
}

#[test]
fn c1_zero_is_trivial() {
    for ctx in CicyContext::all_five() {
        for regime in [RankRegime::Rank2, RankRegime::HigherRank] {
            let r = classify(&ctx, 0, regime).unwrap();
            assert_eq!(r.admissible_c2, vec![0], "{}", ctx.label());
        }
    }
}

#[test]
fn c1_one() {
    let r = classify(&CicyContext::x24(), 1, RankRegime::Rank2).unwrap();
    assert_eq!(r.pairs, vec![(1, 0), (1, 4)]);
    let r = classify(&CicyContext::x33(), 1, RankRegime::Rank2).unwrap();
    assert_eq!(r.pairs, vec![(1, 0)]);
    let r = classify(&CicyContext::quintic(), 1, RankRegime::Rank2).unwrap();
    assert_eq!(r.pairs, vec![(1, 0)]);
}

#[test]
fn unsupported_cases() {
    assert!(matches!(
        classify(&CicyContext::x223(), 2, RankRegime::Rank2),
        Err(ClassifyError::Unsupported { .. })
    ));
    assert!(matches!(
        classify(&CicyContext::x24(), 1, RankRegime::HigherRank),
        Err(ClassifyError::Unsupported { .. })
    ));
    assert_eq!(
        classify(&CicyContext::x24(), 3, RankRegime::Rank2).unwrap_err(),
        ClassifyError::C1OutOfRange(3)
    );
    let lax = CicyContext::new(&[1, 5], Mode::Lax).unwrap();
    assert!(classify(&lax, 2, RankRegime::Rank2).is_err());
    let bad: Toggles = ["R-nonexistent".to_string()].into();
    assert!(classify_with(&CicyContext::x24(), 2, RankRegime::Rank2, &bad).is_err());
}

#[test]
fn enumeration_examples() {
    let q = enumerate_candidates(&CicyContext::quintic(), 2, RankRegime::Rank2);
    let planes = serre_constructions::CurveCandidate::new(vec![CurveComponent::new(5, 6, 2); 2]);
    assert!(q.contains(&planes));
    let x24 = enumerate_candidates(&CicyContext::x24(), 1, RankRegime::Rank2);
    let has = |c: CurveComponent| x24.iter().any(|k| k.components() == [c]);
    assert!(has(CurveComponent::new(4, 3, 2)));
    assert!(!has(CurveComponent::new(6, 4, 3)));
    for ctx in CicyContext::all_five() {
        let z = enumerate_candidates(&ctx, 0, RankRegime::Rank2);
        assert_eq!(z.len(), 1);
        assert!(z[0].is_empty());
    }
    let mut sorted = q.clone();
    sorted.sort();
    assert_eq!(sorted, q);
}

#[test]
fn eliminated_quintic_cases() {
    let ctx = CicyContext::quintic();
    let r = classify(&ctx, 2, RankRegime::Rank2).unwrap();
    let find = |name: &str| r.verdicts.iter().find(|v| v.candidate.witness_name() == name).unwrap();
    // the cubic-scroll cases end with the Hirzebruch computations
    let v = find("curve:(15,16,4)");
    assert_eq!(v.status, Status::Eliminated);
    let rules = v.closing_rules();
    assert!(rules.contains("R-hirzebruch-F1") && rules.contains("R-hirzebruch-F3"));
    let v = find("curve:(5,6,2)+(5,6,2)+(5,6,2)");
    assert_eq!(v.status, Status::AxiomEliminated);
    assert!(v.closing_rules().contains("A-spannedness-h0"));
    let v = find("curve:(5,6,2)+(10,11,3)");
    assert!(v.closing_rules().contains("R-ci-omega"));
}

#[test]
fn x33_ruled_cases_fire() {
    let r = classify(&CicyContext::x33(), 2, RankRegime::Rank2).unwrap();
    let fired: BTreeSet<String> = r.verdicts.iter().flat_map(|v| v.trail_rules()).collect();
    for id in [
        "R-ruled-38",
        "R-ruled-58",
        "R-ruled-e2q20",
        "R-clifford",
        "R-union-genus",
        "R-liaison-18",
        "A-secant-dim",
        "A-berzolari",
        "A-no-plane",
    ] {
        assert!(fired.contains(id), "{id}");
    }
    let v = r
        .verdicts
        .iter()
        .find(|v| v.candidate.witness_name() == "curve:(17,18,5)")
        .unwrap();
    // the degree-7 surface branch closes only by an axiom
    assert_eq!(v.status, Status::AxiomEliminated);
    assert!(v.closing_rules().contains("R-ruled-38"));
}

#[test]
fn x24_adjunction_fires() {
    let r = classify(&CicyContext::x24(), 2, RankRegime::Rank2).unwrap();
    let v = r
        .verdicts
        .iter()
        .find(|v| v.candidate.witness_name() == "curve:(8,9,3)+(12,13,4)")
        .unwrap();
    assert_ne!(v.status, Status::Survives);
    assert!(v.closing_rules().contains("R-adjunction-28-40"));
}
