use ruled_surfaces::*;

fn f(e: i64) -> RuledSurface {
    RuledSurface::hirzebruch(e).unwrap()
}

#[test]
fn cubic_scroll_degree_fifteen_has_no_class() {
    let s = f(1);
    let c = GenusConstraint::new(DivisorClass::new(1, 2), 15).with_genus(16);
    assert!(eliminate_by_genus(&c, &s, &SearchBox::default()).unwrap().is_empty());
    // recomputed polynomial: 2g - 2 = -3a^2 + 31a - 30
    assert_eq!(genus_polynomial(DivisorClass::new(1, 2), 15, &s), Some([-30, 31, -3]));
    assert!(polynomial_roots([-30, 31, -3], 30, (-100, 100)).is_empty());
}

#[test]
fn weakened_inequality_is_satisfiable() {
    // 2g - 2 >= 30 on the same family: -3a^2 + 31a - 30 >= 30
    let hits: Vec<i64> = (-100..=100)
        .filter(|&a| 3 * a * a - 31 * a + 60 <= 0)
        .collect();
    assert_eq!(hits, vec![3, 4, 5, 6, 7]);
}

#[test]
fn cone_over_twisted_cubic() {
    let s = f(3);
    let c = GenusConstraint::new(DivisorClass::new(1, 3), 15)
        .with(SideConstraint::SlopeBand { k: 3, lo: 0, hi: 1 });
    let sols = eliminate_by_genus(&c, &s, &SearchBox::default()).unwrap();
    assert_eq!(sols, vec![DivisorClass::new(5, 15)]);
    assert_eq!(genera(&sols, &s).unwrap(), vec![26]);
}

#[test]
fn quadric_conics() {
    let s = f(0);
    let c = GenusConstraint::new(DivisorClass::new(1, 1), 2).with_genus(0);
    let sols = eliminate_by_genus(&c, &s, &SearchBox::default()).unwrap();
    assert!(sols.contains(&DivisorClass::new(1, 1)));
}

#[test]
fn quartic_scroll_adjunction_values() {
    let cases = [
        (1, (4, 8), 28),
        (3, (4, 12), 28),
        (0, (4, 8), 40),
        (2, (4, 12), 40),
        (4, (4, 16), 40),
    ];
    for (e, (a, b), expected) in cases {
        let s = f(e);
        let c = DivisorClass::new(a, b);
        assert_eq!(adjunction_pairing(c, &s), expected, "F_{e}");
        let k = canonical_class(&s);
        assert_eq!(intersect(c, c + k, &s), expected);
    }
}

#[test]
fn fiber_embedding_needs_b_range() {
    let s = f(2);
    let c = GenusConstraint::new(DivisorClass::fiber(), 3);
    let err = eliminate_by_genus(&c, &s, &SearchBox::default()).unwrap_err();
    assert!(err.to_string().contains("search not finite"));
    let ok = eliminate_by_genus(&c, &s, &SearchBox::new((-5, 5), Some((-5, 5)))).unwrap();
    assert_eq!(ok.len(), 11);
    assert!(ok.iter().all(|x| x.a == 3));
}
