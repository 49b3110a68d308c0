use depthlab::ree_sylow::*;

#[test]
fn exhaustive_at_q3() {
    let p = PModel::new(0).unwrap();
    let r = verify_p_structure(&p, true, 0, 0);
    assert!(r.passed(), "{r:?}");
    let count = |name: &str| r.check(name).unwrap().checked;
    assert_eq!(count("inverse_of_product"), 729);
    assert_eq!(count("closed_inverse"), 27);
    assert_eq!(count("closed_conjugation"), 729);
    for c in &r.checks {
        assert_eq!(c.mode, Mode::Exhaustive);
        assert_eq!(c.mismatches, 0);
    }
    let c = verify_centralizers(&p, true, 0, 0, 0);
    assert!(c.passed(), "{c:?}");
}

#[test]
fn sampled_at_q27_has_no_mismatches() {
    let p = PModel::new(1).unwrap();
    let r = verify_p_structure(&p, false, 100_000, 0);
    assert!(r.passed(), "{r:?}");
    for c in &r.checks {
        assert_eq!(c.mode, Mode::Sampled);
        assert_eq!(c.mismatches, 0, "{}", c.name);
    }
    assert_eq!(r.check("inverse_of_product").unwrap().checked, 100_000);
    assert_eq!(r.check("closed_conjugation").unwrap().checked, 100_000);
    let c = verify_centralizers(&p, false, 200, 200, 0);
    assert!(c.passed());
}

#[test]
fn sampling_is_deterministic() {
    let p = PModel::new(1).unwrap();
    assert_eq!(verify_p_structure(&p, false, 500, 7), verify_p_structure(&p, false, 500, 7));
}

#[test]
fn w_orbits_at_q27() {
    let p = PModel::new(1).unwrap();
    let w = p.field.primitive_element();
    let (r, s) = verify_w_orbits(&p, &DiagonalAction, w, 10_000, 0).unwrap();
    assert!(r.passed(), "{r:?}");
    let mut sizes = s.derived_quotient_orbit_sizes.clone();
    sizes.sort_unstable();
    assert_eq!(sizes, [1, 13, 13]);
    assert_eq!(s.center_orbit_sizes, [26]);
    assert_eq!(s.abelianization_orbit_sizes.iter().filter(|&&n| n == 1).count(), 1);
}

#[test]
fn out_of_domain_claims_at_q3() {
    let p = PModel::new(0).unwrap();
    let (r, _) = verify_w_orbits(&p, &DiagonalAction, FieldElt(2), 0, 0).unwrap();
    assert_eq!(r.check("three_orbits_on_derived_quotient").unwrap().mode, Mode::OutOfDomain);
    assert_eq!(r.check("one_fixed_point_on_abelianization").unwrap().mode, Mode::OutOfDomain);
}

#[test]
fn nominal_law_is_associative_only_at_q3() {
    let p = PModel::new(0).unwrap();
    let r = verify_p_structure(&p, true, 0, 0);
    let a = r.check("associativity").unwrap();
    assert_eq!((a.checked, a.mismatches), (19683, 0));

    let p = PModel::new(1).unwrap();
    let r = verify_p_structure(&p, false, 10_000, 0);
    assert!(r.passed());
    assert!(r.findings.iter().any(|c| c.name == "associativity" && c.mismatches > 0));
}

#[test]
fn associative_law_gives_a_group_at_q27() {
    let p = PModel::with_law(1, ProductLaw::Associative).unwrap();
    let r = verify_p_structure(&p, false, 100_000, 0);
    assert!(r.passed(), "{r:?}");
    assert_eq!(r.check("associativity").unwrap().mismatches, 0);
    assert!(verify_centralizers(&p, false, 100, 1000, 0).passed());
    let w = p.field.primitive_element();
    let (r, s) = verify_w_orbits(&p, &DiagonalAction, w, 10_000, 0).unwrap();
    assert!(r.passed());
    let mut sizes = s.derived_quotient_orbit_sizes;
    sizes.sort_unstable();
    assert_eq!(sizes, [1, 13, 13]);
}
