//! Combinatorial depth through intersection families.
//!
//! `U_i` is the set of intersections of `H` with `i` conjugates. The odd criterion
//! compares decorated pairs `(K, x₁ C_G(K))` where `K = H ∩ H^{x₁} ∩ … ∩ H^{x_i}`:
//! two tuples agree on `K` by conjugation exactly when their first conjugators lie in
//! the same left coset of `C_G(K)`.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use super::DepthValue;
use crate::error::{Error, Result};
use crate::perm::{ElementSet, IndexedGroup};

/// Interned subgroups of a materialized group.
#[derive(Default)]
pub(crate) struct Interner {
    ids: HashMap<ElementSet, u32>,
    sets: Vec<ElementSet>,
}

impl Interner {
    pub(crate) fn intern(&mut self, s: ElementSet) -> u32 {
        if let Some(&id) = self.ids.get(&s) {
            return id;
        }
        let id = self.sets.len() as u32;
        self.ids.insert(s.clone(), id);
        self.sets.push(s);
        id
    }

    pub(crate) fn get(&self, id: u32) -> &ElementSet {
        &self.sets[id as usize]
    }
}

/// The family `U_{i+1}` from `U_i`, realized by intersecting with every conjugate.
pub(crate) fn next_family(
    interner: &mut Interner,
    current: &BTreeSet<u32>,
    conjugates: &[u32],
) -> BTreeSet<u32> {
    let mut next = current.clone();
    for &a in current {
        for &c in conjugates {
            let mut k = interner.get(a).clone();
            k.intersect_with(interner.get(c));
            next.insert(interner.intern(k));
        }
    }
    next
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CombDepth {
    pub dc: DepthValue,
    pub normal: bool,
    /// `|U_0|, |U_1|, …` up to the level where the answer was decided.
    pub family_sizes: Vec<usize>,
    /// Number of decorated pairs at levels `1, 2, …` that were examined.
    pub pair_counts: Vec<usize>,
}

/// Combinatorial depth of `h` in the materialized group `g`.
pub fn comb_depth_indexed(g: &IndexedGroup, h: &ElementSet, max_level: usize) -> Result<CombDepth> {
    let normal = g.is_normal(h);
    let centralizer = g.centralizer(h);
    let depth_one = g.product_set(h, &centralizer).count_ones(..) == g.len();

    let mut interner = Interner::default();
    let h_id = interner.intern(h.clone());
    let transversal = g.right_transversal(&g.normalizer(h));
    let conjugates: Vec<u32> = transversal
        .iter()
        .map(|&x| interner.intern(g.conjugate_set(h, x)))
        .collect();
    // Conjugate of H by every element, via the transversal.
    let mut conj_of = vec![0u32; g.len()];
    let normalizer = g.normalizer(h);
    for (t, &x) in transversal.iter().enumerate() {
        for n in normalizer.ones() {
            conj_of[g.mul(n as u32, x) as usize] = conjugates[t];
        }
    }

    let mut families = vec![BTreeSet::from([h_id])];
    let mut report = CombDepth {
        dc: DepthValue::CapExceeded,
        normal,
        family_sizes: vec![1],
        pair_counts: Vec::new(),
    };
    if depth_one {
        report.dc = DepthValue::Exact(1);
        return Ok(report);
    }
    if normal {
        report.dc = DepthValue::Exact(2);
        return Ok(report);
    }

    let mut labels: HashMap<u32, Vec<u32>> = HashMap::new();
    let mut prev_pairs: Option<BTreeSet<(u32, u32)>> = None;
    for i in 1..=max_level {
        let next = next_family(&mut interner, &families[i - 1], &conjugates);
        families.push(next);
        report.family_sizes.push(families[i].len());

        if i > 1 {
            let pairs = decorated_pairs(g, &mut interner, &mut labels, &families[i - 1], &conj_of);
            report.pair_counts.push(pairs.len());
            let prev = prev_pairs.as_ref().expect("set at the previous level");
            if !prev.is_subset(&pairs) {
                return Err(Error::Inconsistency("decorated pairs are not monotone".into()));
            }
            if pairs.len() == prev.len() {
                report.dc = DepthValue::Exact(2 * i as u32 - 1);
                return Ok(report);
            }
            prev_pairs = Some(pairs);
        } else {
            let pairs = decorated_pairs(g, &mut interner, &mut labels, &families[0], &conj_of);
            report.pair_counts.push(pairs.len());
            prev_pairs = Some(pairs);
        }

        if families[i].len() == families[i - 1].len() {
            report.dc = DepthValue::Exact(2 * i as u32);
            return Ok(report);
        }
    }
    Ok(report)
}

/// Pairs `(K, label of x₁ C_G(K))` with `K = H^{x₁} ∩ A` for `A` in `family` and `x₁` in `G`.
fn decorated_pairs(
    g: &IndexedGroup,
    interner: &mut Interner,
    labels: &mut HashMap<u32, Vec<u32>>,
    family: &BTreeSet<u32>,
    conj_of: &[u32],
) -> BTreeSet<(u32, u32)> {
    let mut meet: HashMap<(u32, u32), u32> = HashMap::new();
    let mut pairs = BTreeSet::new();
    for x in 0..g.len() as u32 {
        let c = conj_of[x as usize];
        for &a in family {
            let k = *meet.entry((a, c)).or_insert_with(|| {
                let mut s = interner.get(a).clone();
                s.intersect_with(interner.get(c));
                interner.intern(s)
            });
            let label = labels.entry(k).or_insert_with(|| {
                let cent = g.centralizer(interner.get(k));
                g.left_coset_labels(&cent)
            });
            pairs.insert((k, label[x as usize]));
        }
    }
    pairs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{named, Permutation, Subgroup, DEFAULT_CAP};

    fn dc(g: &crate::perm::PermGroup, gens: Vec<Permutation>) -> u32 {
        let ig = IndexedGroup::new(g, DEFAULT_CAP).unwrap();
        let h = Subgroup::generated(g, gens, DEFAULT_CAP).unwrap();
        let hs = ig.subgroup_set(&h).unwrap();
        match comb_depth_indexed(&ig, &hs, 10).unwrap().dc {
            DepthValue::Exact(d) => d,
            DepthValue::CapExceeded => panic!("no answer"),
        }
    }

    fn p(n: usize, c: &[&[u32]]) -> Permutation {
        Permutation::from_cycles(n, c).unwrap()
    }

    #[test]
    fn textbook_values() {
        assert_eq!(dc(&named::symmetric(4), vec![]), 1);
        assert_eq!(dc(&named::symmetric(4), named::alternating(4).generators().to_vec()), 2);
        assert_eq!(dc(&named::alternating(5), vec![p(5, &[&[0, 1, 2, 3, 4]])]), 3);
    }
}
