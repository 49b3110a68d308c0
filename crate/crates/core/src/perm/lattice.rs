//! Subgroup classes of a materialized group, by cyclic extension.

use std::collections::{BTreeMap, HashSet, VecDeque};

use super::{ElementSet, IndexedGroup};

/// One conjugacy class of subgroups. `rep` is the conjugate with the least element list.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub rep: ElementSet,
    pub order: usize,
    pub class_size: usize,
}

fn members(set: &ElementSet) -> Vec<usize> {
    set.ones().collect()
}

/// Distinct cyclic subgroups, each with a generator.
pub fn cyclic_subgroups(g: &IndexedGroup) -> Vec<(ElementSet, u32)> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for x in 0..g.len() as u32 {
        let c = g.closure(&[x]);
        if seen.insert(c.clone()) {
            out.push((c, x));
        }
    }
    out
}

/// `<H, x>`.
pub fn join(g: &IndexedGroup, h: &ElementSet, x: u32) -> ElementSet {
    let mut gens = g.generators_of(h);
    gens.push(x);
    g.closure(&gens)
}

/// All conjugates of a subgroup.
pub fn conjugates(g: &IndexedGroup, h: &ElementSet) -> Vec<ElementSet> {
    let n = g.normalizer(h);
    g.right_transversal(&n)
        .into_iter()
        .map(|x| g.conjugate_set(h, x))
        .collect()
}

/// Every conjugacy class of subgroups, sorted by order and then by representative.
pub fn subgroup_classes(g: &IndexedGroup) -> Vec<SubgroupClass> {
    let cyclics = cyclic_subgroups(g);
    let mut seen: HashSet<ElementSet> = HashSet::new();
    let mut classes = Vec::new();
    let mut queue = VecDeque::new();
    let mut add = |s: ElementSet, seen: &mut HashSet<ElementSet>, queue: &mut VecDeque<ElementSet>| {
        if seen.contains(&s) {
            return;
        }
        let conj = conjugates(g, &s);
        let rep = conj
            .iter()
            .min_by_key(|c| members(c))
            .expect("a class is nonempty")
            .clone();
        classes.push(SubgroupClass {
            order: rep.count_ones(..),
            class_size: conj.len(),
            rep: rep.clone(),
        });
        seen.extend(conj);
        queue.push_back(rep);
    };
    add(g.trivial_set(), &mut seen, &mut queue);
    while let Some(h) = queue.pop_front() {
        for (_, c) in &cyclics {
            if !h.contains(*c as usize) {
                add(join(g, &h, *c), &mut seen, &mut queue);
            }
        }
    }
    classes.sort_by_key(|a| (a.order, members(&a.rep)));
    classes
}

/// Proper subgroups `H` with `<H, x> = G` for every `x` outside `H`.
pub fn is_maximal(g: &IndexedGroup, h: &ElementSet) -> bool {
    let n = h.count_ones(..);
    n < g.len() && (0..g.len() as u32).all(|x| h.contains(x as usize) || join(g, h, x).count_ones(..) == g.len())
}

/// Classes of maximal subgroups, in the order of [`subgroup_classes`].
pub fn maximal_subgroup_classes(g: &IndexedGroup) -> Vec<SubgroupClass> {
    subgroup_classes(g)
        .into_iter()
        .filter(|c| is_maximal(g, &c.rep))
        .collect()
}

/// Subgroup generated by all commutators of elements of `h`.
pub fn derived_subgroup(g: &IndexedGroup, h: &ElementSet) -> ElementSet {
    let elems: Vec<u32> = h.ones().map(|i| i as u32).collect();
    let mut comms = g.trivial_set();
    for &a in &elems {
        for &b in &elems {
            let c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
            comms.insert(c as usize);
        }
    }
    let gens = g.generators_of(&comms);
    g.closure(&gens)
}

/// Elements of `h` commuting with all of `h`.
pub fn center_of(g: &IndexedGroup, h: &ElementSet) -> ElementSet {
    let mut c = g.centralizer(h);
    c.intersect_with(h);
    c
}

/// Number of elements of each order.
pub fn order_histogram(g: &IndexedGroup, h: &ElementSet) -> BTreeMap<u64, usize> {
    let mut m = BTreeMap::new();
    for x in h.ones() {
        *m.entry(g.element_order(x as u32)).or_default() += 1;
    }
    m
}

/// A Sylow `p`-subgroup, grown from the trivial group inside successive normalizers.
pub fn sylow_subgroup(g: &IndexedGroup, p: u64) -> ElementSet {
    let mut full = g.len();
    while full.is_multiple_of(p as usize) {
        full /= p as usize;
    }
    let target = g.len() / full;
    let is_p_power = |mut k: usize| {
        while k.is_multiple_of(p as usize) {
            k /= p as usize;
        }
        k == 1
    };
    let mut s = g.trivial_set();
    while s.count_ones(..) < target {
        let n = g.normalizer(&s);
        let grown = n.ones().find_map(|x| {
            if s.contains(x) || !is_p_power(g.element_order(x as u32) as usize) {
                return None;
            }
            let t = join(g, &s, x as u32);
            is_p_power(t.count_ones(..)).then_some(t)
        });
        s = grown.expect("a p-subgroup below Sylow order grows inside its normalizer");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{named, DEFAULT_CAP};

    fn indexed(g: &crate::perm::PermGroup) -> IndexedGroup {
        IndexedGroup::new(g, DEFAULT_CAP).unwrap()
    }

    #[test]
    fn s4_has_eleven_subgroup_classes() {
        let g = indexed(&named::symmetric(4));
        let classes = subgroup_classes(&g);
        assert_eq!(classes.len(), 11);
        assert_eq!(classes.iter().map(|c| c.class_size).sum::<usize>(), 30);
        let max: Vec<usize> = maximal_subgroup_classes(&g).iter().map(|c| c.order).collect();
        assert_eq!(max, vec![6, 8, 12]);
    }

    #[test]
    fn a5_subgroups() {
        let g = indexed(&named::alternating(5));
        let classes = subgroup_classes(&g);
        assert_eq!(classes.len(), 9);
        assert_eq!(classes.iter().map(|c| c.class_size).sum::<usize>(), 59);
        let max: Vec<usize> = maximal_subgroup_classes(&g).iter().map(|c| c.order).collect();
        assert_eq!(max, vec![6, 10, 12]);
        assert_eq!(derived_subgroup(&g, &g.full_set()).count_ones(..), 60);
    }

    #[test]
    fn sylow_orders() {
        let g = indexed(&named::symmetric(4));
        assert_eq!(sylow_subgroup(&g, 2).count_ones(..), 8);
        assert_eq!(sylow_subgroup(&g, 3).count_ones(..), 3);
        assert_eq!(sylow_subgroup(&g, 5).count_ones(..), 1);
        assert_eq!(derived_subgroup(&g, &g.full_set()).count_ones(..), 12);
        assert_eq!(center_of(&g, &sylow_subgroup(&g, 2)).count_ones(..), 2);
    }
}
