//! Depth algorithms against literal tuple enumeration and structural invariants.

use depthlab::depth::reference::{matrix_depth, naive_comb_depth};
use depthlab::depth::{comb_depth_indexed, DepthReport, DepthValue, Inclusion};
use depthlab::perm::lattice::subgroup_classes;
use depthlab::perm::{named, ElementSet, IndexedGroup, PermGroup, Permutation, Subgroup, DEFAULT_CAP};
use depthlab::ree3_model::build_r3;
use depthlab::perm::lattice::maximal_subgroup_classes;

struct Case {
    name: String,
    group: IndexedGroup,
    sub: ElementSet,
}

fn classes_of(name: &str, g: &PermGroup) -> Vec<Case> {
    let ig = IndexedGroup::new(g, DEFAULT_CAP).unwrap();
    subgroup_classes(&ig)
        .into_iter()
        .map(|c| Case {
            name: format!("{name} order {} ({} conjugates)", c.order, c.class_size),
            group: ig.clone(),
            sub: c.rep,
        })
        .collect()
}

fn corpus() -> Vec<Case> {
    let mut v = classes_of("S4", &named::symmetric(4));
    v.extend(classes_of("D8", &named::dihedral(4)));
    v.extend(classes_of("A5", &named::alternating(5)));
    let r = build_r3().unwrap();
    for c in maximal_subgroup_classes(&r.indexed) {
        v.push(Case {
            name: format!("PGammaL(2,8) order {}", c.order),
            group: r.indexed.clone(),
            sub: c.rep,
        });
    }
    v
}

#[test]
fn corpus_invariants() {
    let cases = corpus();
    assert!(cases.len() >= 20);
    for case in &cases {
        let inc = Inclusion {
            group: case.group.clone(),
            sub: case.sub.clone(),
        };
        let r = DepthReport::compute(&inc, 64).unwrap();
        let (dc, d) = (r.dc.value().unwrap(), r.d.value().unwrap());
        eprintln!("{:<36} dc={dc} d={d} core bound={}", case.name, r.core_bound.bound);
        assert_eq!(dc <= 2, r.normal, "{}", case.name);
        assert_eq!(d <= 2, r.normal, "{}", case.name);
        assert!(d <= dc, "{}", case.name);
        assert!(d <= r.core_bound.bound, "{}", case.name);
        let m = inc.multiplicities().unwrap();
        assert_eq!(d, matrix_depth(&m, 40).unwrap(), "{}", case.name);
    }
}

#[test]
fn decorated_pairs_match_tuple_enumeration() {
    let mut checked = 0;
    for case in corpus().into_iter().filter(|c| c.group.len() <= 200) {
        let fast = comb_depth_indexed(&case.group, &case.sub, 64).unwrap().dc;
        let slow = naive_comb_depth(&case.group, &case.sub, 20).unwrap();
        assert_eq!(fast, DepthValue::Exact(slow), "{}", case.name);
        checked += 1;
    }
    assert!(checked >= 20);
}

#[test]
fn c5_in_a5_has_a_disjoint_conjugate() {
    let a5 = named::alternating(5);
    let c5 = Subgroup::generated(&a5, vec![Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap()], DEFAULT_CAP)
        .unwrap();
    let inc = Inclusion::new(&a5, &c5, DEFAULT_CAP).unwrap();
    let r = DepthReport::compute(&inc, 64).unwrap();
    assert_eq!(r.d, DepthValue::Exact(3));
    assert!(r.core_bound.disjoint_conjugate);
}
