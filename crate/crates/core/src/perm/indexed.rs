use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use super::{PermGroup, Permutation, Subgroup};
use crate::error::{Error, Result};

/// A subset of a materialized group, as a bitset over element indices.
pub type ElementSet = FixedBitSet;

const TABLE_LIMIT: usize = 2048;

/// A materialized group: elements in sorted order, addressed by index.
///
/// Index 0 is always the identity (it is the lexicographically least permutation).
#[derive(Clone, Debug)]
pub struct IndexedGroup {
    group: PermGroup,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    inverse: Vec<u32>,
    generator_ids: Vec<u32>,
    table: Option<Vec<u32>>,
}

impl IndexedGroup {
    pub fn new(group: &PermGroup, cap: usize) -> Result<Self> {
        let elements = group.elements(cap)?.to_vec();
        let index: HashMap<Permutation, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        let inverse = elements.iter().map(|p| index[&p.inverse()]).collect();
        let generator_ids = group
            .generators()
            .iter()
            .filter(|g| !g.is_identity())
            .map(|g| index[g])
            .collect();
        let n = elements.len();
        let table = (n <= TABLE_LIMIT).then(|| {
            let mut t = Vec::with_capacity(n * n);
            for a in &elements {
                for b in &elements {
                    t.push(index[&a.compose(b)]);
                }
            }
            t
        });
        Ok(IndexedGroup {
            group: group.clone(),
            elements,
            index,
            inverse,
            generator_ids,
            table,
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, i: u32) -> &Permutation {
        &self.elements[i as usize]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, p: &Permutation) -> Option<u32> {
        self.index.get(p).copied()
    }

    pub fn generator_ids(&self) -> &[u32] {
        &self.generator_ids
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.table {
            Some(t) => t[a as usize * self.elements.len() + b as usize],
            None => self.index[&self.elements[a as usize].compose(&self.elements[b as usize])],
        }
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inverse[a as usize]
    }

    /// `x^-1 h x`.
    #[inline]
    pub fn conj(&self, h: u32, x: u32) -> u32 {
        self.mul(self.mul(self.inverse[x as usize], h), x)
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        let mut acc = 0;
        for _ in 0..e {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn element_order(&self, a: u32) -> u64 {
        self.elements[a as usize].order()
    }

    pub fn empty_set(&self) -> ElementSet {
        FixedBitSet::with_capacity(self.elements.len())
    }

    pub fn full_set(&self) -> ElementSet {
        let mut s = self.empty_set();
        s.insert_range(..);
        s
    }

    pub fn trivial_set(&self) -> ElementSet {
        let mut s = self.empty_set();
        s.insert(0);
        s
    }

    pub fn set_of(&self, perms: &[Permutation]) -> Result<ElementSet> {
        let mut s = self.empty_set();
        for p in perms {
            let i = self
                .index_of(p)
                .ok_or_else(|| Error::input(format!("{p} is not an element of the group")))?;
            s.insert(i as usize);
        }
        Ok(s)
    }

    pub fn subgroup_set(&self, h: &Subgroup) -> Result<ElementSet> {
        self.set_of(h.elements())
    }

    /// Subgroup generated by the given elements.
    pub fn closure(&self, gens: &[u32]) -> ElementSet {
        let mut set = self.trivial_set();
        let mut members = vec![0u32];
        self.extend_closure(&mut set, &mut members, gens);
        set
    }

    fn extend_closure(&self, set: &mut ElementSet, members: &mut Vec<u32>, gens: &[u32]) {
        let mut k = 0;
        while k < members.len() {
            let x = members[k];
            for &g in gens {
                let y = self.mul(x, g);
                if !set.put(y as usize) {
                    members.push(y);
                }
            }
            k += 1;
        }
    }

    /// A small generating set, chosen greedily in index order.
    pub fn generators_of(&self, set: &ElementSet) -> Vec<u32> {
        let mut gens = Vec::new();
        let mut closure = self.trivial_set();
        for x in set.ones() {
            if !closure.contains(x) {
                gens.push(x as u32);
                closure = self.closure(&gens);
            }
        }
        gens
    }

    pub fn conjugate_set(&self, set: &ElementSet, x: u32) -> ElementSet {
        let mut out = self.empty_set();
        for h in set.ones() {
            out.insert(self.conj(h as u32, x) as usize);
        }
        out
    }

    /// Elements commuting with every element of `set`.
    pub fn centralizer(&self, set: &ElementSet) -> ElementSet {
        let gens = self.generators_of(set);
        let mut out = self.empty_set();
        for x in 0..self.len() as u32 {
            if gens.iter().all(|&h| self.mul(x, h) == self.mul(h, x)) {
                out.insert(x as usize);
            }
        }
        out
    }

    pub fn normalizer(&self, set: &ElementSet) -> ElementSet {
        let gens = self.generators_of(set);
        let mut out = self.empty_set();
        for x in 0..self.len() as u32 {
            if gens.iter().all(|&h| set.contains(self.conj(h, x) as usize)) {
                out.insert(x as usize);
            }
        }
        out
    }

    pub fn is_normal(&self, set: &ElementSet) -> bool {
        let gens = self.generators_of(set);
        self.generator_ids
            .iter()
            .all(|&x| gens.iter().all(|&h| set.contains(self.conj(h, x) as usize)))
    }

    /// Representatives of the right cosets `H x`, each the least element of its coset.
    pub fn right_transversal(&self, set: &ElementSet) -> Vec<u32> {
        let mut covered = self.empty_set();
        let mut reps = Vec::new();
        for x in 0..self.len() as u32 {
            if covered.contains(x as usize) {
                continue;
            }
            reps.push(x);
            for h in set.ones() {
                covered.insert(self.mul(h as u32, x) as usize);
            }
        }
        reps
    }

    /// For each element `g`, the least element of the left coset `g C`.
    pub fn left_coset_labels(&self, set: &ElementSet) -> Vec<u32> {
        let mut label = vec![u32::MAX; self.len()];
        let members: Vec<u32> = set.ones().map(|i| i as u32).collect();
        for x in 0..self.len() as u32 {
            if label[x as usize] != u32::MAX {
                continue;
            }
            for &c in &members {
                label[self.mul(x, c) as usize] = x;
            }
        }
        label
    }

    /// Product set `A B`.
    pub fn product_set(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        let mut out = self.empty_set();
        let bs: Vec<u32> = b.ones().map(|i| i as u32).collect();
        for x in a.ones() {
            for &y in &bs {
                out.insert(self.mul(x as u32, y) as usize);
            }
        }
        out
    }

    /// Intersection of all conjugates.
    pub fn core(&self, set: &ElementSet) -> ElementSet {
        let mut core = set.clone();
        for x in self.right_transversal(&self.normalizer(set)) {
            core.intersect_with(&self.conjugate_set(set, x));
        }
        core
    }

    pub fn center(&self) -> ElementSet {
        self.centralizer(&self.full_set())
    }

    pub fn to_subgroup(&self, set: &ElementSet) -> Subgroup {
        let generators = self
            .generators_of(set)
            .into_iter()
            .map(|i| self.elements[i as usize].clone())
            .collect();
        let elements = set.ones().map(|i| self.elements[i].clone()).collect();
        Subgroup::from_parts(self.group.degree(), generators, elements)
    }

    pub fn perms_of(&self, ids: &[u32]) -> Vec<Permutation> {
        ids.iter().map(|&i| self.elements[i as usize].clone()).collect()
    }
}
