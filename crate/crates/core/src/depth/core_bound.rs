use std::collections::BTreeSet;

use serde::Serialize;

use super::comb::{next_family, Interner};
use crate::error::Result;
use crate::perm::{ElementSet, IndexedGroup};

/// Upper bound on ordinary depth from the number of conjugates needed to cut out the core.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoreBound {
    /// Least number of conjugates of `H` whose intersection is `Core_G(H)`.
    pub m: u32,
    pub core_order: usize,
    pub core_central: bool,
    /// `2m`, or `2m - 1` when the core is central.
    pub bound: u32,
    /// `G` simple, `H` proper, and some conjugate of `H` meets `H` trivially, so `d = 3`.
    pub disjoint_conjugate: bool,
}

pub fn core_bound_indexed(g: &IndexedGroup, h: &ElementSet) -> Result<CoreBound> {
    let core = g.core(h);
    let center = g.center();
    let core_central = core.is_subset(&center);

    let mut interner = Interner::default();
    let core_id = interner.intern(core.clone());
    let h_id = interner.intern(h.clone());
    let transversal = g.right_transversal(&g.normalizer(h));
    let conjugates: Vec<u32> = transversal
        .iter()
        .map(|&x| interner.intern(g.conjugate_set(h, x)))
        .collect();
    let mut family = BTreeSet::from([h_id]);
    let mut j = 0u32;
    while !family.contains(&core_id) {
        let next = next_family(&mut interner, &family, &conjugates);
        assert!(next.len() > family.len() || next.contains(&core_id), "core is always reached");
        family = next;
        j += 1;
    }
    let m = j + 1;
    let bound = if core_central { 2 * m - 1 } else { 2 * m };

    let proper = h.count_ones(..) < g.len();
    let disjoint = conjugates
        .iter()
        .any(|&c| interner.get(c).intersection(h).count() == 1);
    let disjoint_conjugate = proper && disjoint && is_simple(g);

    Ok(CoreBound {
        m,
        core_order: core.count_ones(..),
        core_central,
        bound: bound.max(1),
        disjoint_conjugate,
    })
}

/// Simple and nontrivial: the normal closure of every nonidentity element is everything.
pub fn is_simple(g: &IndexedGroup) -> bool {
    if g.len() == 1 {
        return false;
    }
    let mut seen = g.trivial_set();
    for x in 1..g.len() as u32 {
        if seen.contains(x as usize) {
            continue;
        }
        let class: Vec<u32> = (0..g.len() as u32).map(|y| g.conj(x, y)).collect();
        for &c in &class {
            seen.insert(c as usize);
        }
        if g.closure(&class).count_ones(..) != g.len() {
            return false;
        }
    }
    true
}
