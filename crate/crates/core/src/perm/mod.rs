//! Permutation groups small enough to enumerate.
//!
//! [`PermGroup`] carries a stabilizer chain for order and membership. Everything that
//! needs element lists goes through [`IndexedGroup`], which materializes the group once
//! (subject to a cap) and represents subsets as bitsets over sorted element indices.

mod chain;
mod classes;
mod group;
mod indexed;
pub mod lattice;
pub mod io;
pub mod named;
mod permutation;
mod subgroup;

pub use chain::StabChain;
pub use classes::{conjugacy_classes, ClassData, ClassPartition, ConjugacyClassInfo};
pub use group::{group_from_generators, PermGroup, DEFAULT_CAP};
pub use indexed::{ElementSet, IndexedGroup};
pub use permutation::{Permutation, MAX_DEGREE};
pub use subgroup::{centralizer, conjugate, intersect, normalizer, right_transversal, Subgroup};

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, cycles: &[&[u32]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn class_sizes_of_s3() {
        let classes = conjugacy_classes(&named::symmetric(3), DEFAULT_CAP).unwrap();
        let sizes: Vec<u32> = classes.iter().map(|c| (&c.size).try_into().unwrap()).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        assert!(classes[0].representative.is_identity());
        for c in &classes {
            assert_eq!(&c.size * &c.centralizer_order, 6u32.into());
        }
    }

    #[test]
    fn trivial_group_has_one_class() {
        let classes = conjugacy_classes(&PermGroup::trivial(4), DEFAULT_CAP).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].size, 1u32.into());
    }

    #[test]
    fn a4_meets_transposition_trivially() {
        let s4 = named::symmetric(4);
        let a4 = Subgroup::generated(&s4, named::alternating(4).generators().to_vec(), DEFAULT_CAP).unwrap();
        let t = Subgroup::generated(&s4, vec![p(4, &[&[0, 1]])], DEFAULT_CAP).unwrap();
        assert!(a4.intersect(&t).unwrap().is_trivial());
        assert_eq!(a4.intersect(&a4).unwrap(), a4);
    }

    #[test]
    fn centralizer_of_a4_in_s4_is_trivial() {
        let s4 = named::symmetric(4);
        let a4 = Subgroup::generated(&s4, named::alternating(4).generators().to_vec(), DEFAULT_CAP).unwrap();
        assert!(centralizer(&s4, &a4, DEFAULT_CAP).unwrap().is_trivial());
        assert_eq!(normalizer(&s4, &a4, DEFAULT_CAP).unwrap().order(), 24);
    }

    #[test]
    fn sylow5_of_a5() {
        let a5 = named::alternating(5);
        let c5 = Subgroup::generated(&a5, vec![p(5, &[&[0, 1, 2, 3, 4]])], DEFAULT_CAP).unwrap();
        assert_eq!(normalizer(&a5, &c5, DEFAULT_CAP).unwrap().order(), 10);
        let other = c5.conjugate(&p(5, &[&[0, 1, 2]]));
        assert_ne!(other, c5);
        assert!(c5.intersect(&other).unwrap().is_trivial());
        assert_eq!(c5.conjugate(&Permutation::identity(5)), c5);
    }

    #[test]
    fn transversal_starts_with_identity() {
        let s4 = named::symmetric(4);
        let d8 = Subgroup::generated(&s4, named::dihedral(4).generators().to_vec(), DEFAULT_CAP).unwrap();
        let t = right_transversal(&s4, &d8, DEFAULT_CAP).unwrap();
        assert_eq!(t.len(), 3);
        assert!(t[0].is_identity());
    }
}
