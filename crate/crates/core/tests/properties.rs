use depthlab::certificates::{check_by_name, ReeOrder, Verdict};
use depthlab::chars::{Cyclotomic, Rat};
use depthlab::perm::{IndexedGroup, PermGroup, Permutation, Subgroup};
use depthlab::ree_sylow::{PModel, ProductLaw};
use proptest::prelude::*;

fn perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn cyclotomic(conductor: u32) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec((0..conductor as i64, -5i128..=5, 1i128..=3), 0..6).prop_map(move |terms| {
        Cyclotomic::from_powers(conductor, terms.into_iter().map(|(k, a, b)| (k, Rat::new(a, b))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn chain_order_matches_enumeration(gens in prop::collection::vec(perm(6), 1..3)) {
        let g = PermGroup::new(6, gens).unwrap();
        let ig = IndexedGroup::new(&g, 720).unwrap();
        prop_assert_eq!(g.order(), ig.len().into());
        for p in ig.elements() {
            prop_assert!(g.contains(p));
        }
    }

    #[test]
    fn subgroup_laws(a in perm(5), b in perm(5), x in perm(5)) {
        let parent = PermGroup::new(5, vec![a.clone(), b.clone(), x.clone()]).unwrap();
        let h1 = Subgroup::generated(&parent, vec![a], 120).unwrap();
        let h2 = Subgroup::generated(&parent, vec![b], 120).unwrap();
        let order: usize = parent.order().try_into().unwrap();
        prop_assert_eq!(order % h1.order(), 0);
        let i12 = h1.intersect(&h2).unwrap();
        prop_assert_eq!(&i12, &h2.intersect(&h1).unwrap());
        prop_assert_eq!(&h1.intersect(&h1).unwrap(), &h1);
        prop_assert_eq!(h1.conjugate(&x).order(), h1.order());
        prop_assert_eq!(h1.order() % i12.order(), 0);
    }

    #[test]
    fn cyclotomic_ring_laws(a in cyclotomic(12), b in cyclotomic(12), c in cyclotomic(12)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!((&a * &b).galois(5), &a.galois(5) * &b.galois(5));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn cyclotomic_embedding_preserves_value(a in cyclotomic(15)) {
        let e = a.embed(60).unwrap();
        prop_assert_eq!(&e, &a);
        let (x, y) = a.to_complex();
        let (u, v) = e.to_complex();
        prop_assert!((x - u).abs() < 1e-9 && (y - v).abs() < 1e-9);
        let back = Cyclotomic::from_power_basis_coeffs(15, &a.power_basis_coeffs()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn associative_law_is_a_group(i in 0u64..19683, j in 0u64..19683, k in 0u64..19683) {
        let p = PModel::with_law(1, ProductLaw::Associative).unwrap();
        let (a, b, c) = (p.element(i), p.element(j), p.element(k));
        prop_assert_eq!(p.mul(&p.mul(&a, &b), &c), p.mul(&a, &p.mul(&b, &c)));
        prop_assert_eq!(p.mul(&a, &p.inv(&a)), p.identity());
    }

    #[test]
    fn closed_forms_match_definitions(i in 0u64..19683, j in 0u64..19683) {
        let p = PModel::new(1).unwrap();
        let (a, b) = (p.element(i), p.element(j));
        prop_assert_eq!(p.inv(&a), p.inv_by_powers(&a));
        prop_assert_eq!(p.conj_closed(&a, &b), p.conj(&a, &b));
    }

    #[test]
    fn certificates_hold_in_domain(n in 1u32..=10, name in prop::sample::select(vec!["b1", "ngm", "r3", "g0_final"])) {
        let q: u128 = ReeOrder::from_n(n).q.try_into().unwrap();
        let c = check_by_name(name, q, None).unwrap();
        prop_assert_eq!(c.verdict, Verdict::Pass);
    }
}
