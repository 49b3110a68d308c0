//! Slow reference computations used to cross-check the main algorithms.
//!
//! Nothing here shares code with the transversal, interning or relation-graph
//! machinery: conjugation is done on permutations and the criteria are applied
//! literally.

use std::collections::{BTreeSet, HashSet};

use crate::chars::MultiplicityMatrix;
use crate::perm::{ElementSet, IndexedGroup};

/// `x h x^-1` computed on permutations.
fn act(g: &IndexedGroup, x: u32, h: u32) -> u32 {
    let p = g.element(x).compose(g.element(h)).compose(&g.element(x).inverse());
    g.index_of(&p).expect("closed under conjugation")
}

/// `x^-1 H x`.
fn conj(g: &IndexedGroup, h: &ElementSet, x: u32) -> ElementSet {
    let xi = g.element(x).inverse();
    let mut out = g.empty_set();
    for e in h.ones() {
        let p = xi.compose(g.element(e as u32)).compose(g.element(x));
        out.insert(g.index_of(&p).expect("closed under conjugation") as usize);
    }
    out
}

/// Combinatorial depth from the tuple criteria.
///
/// A tuple `(x_1, …, x_i)` matters only through `x_1` and the intersection
/// `H ∩ H^{x_1} ∩ … ∩ H^{x_i}`, so tuples are enumerated as those pairs. Returns `None`
/// when nothing stabilizes within `max_level`.
pub fn naive_comb_depth(g: &IndexedGroup, h: &ElementSet, max_level: u32) -> Option<u32> {
    let all: Vec<u32> = (0..g.len() as u32).collect();
    let hs: Vec<u32> = h.ones().map(|i| i as u32).collect();
    let depth_one = all
        .iter()
        .all(|&x| hs.iter().any(|&y| hs.iter().all(|&k| act(g, x, k) == act(g, y, k))));
    if depth_one {
        return Some(1);
    }
    if all.iter().all(|&x| conj(g, h, x) == *h) {
        return Some(2);
    }
    let conjs: Vec<ElementSet> = all.iter().map(|&x| conj(g, h, x)).collect();
    let decorate = |states: &HashSet<(u32, ElementSet)>| -> HashSet<(ElementSet, Vec<u32>)> {
        states
            .iter()
            .map(|(x1, k)| (k.clone(), k.ones().map(|e| act(g, *x1, e as u32)).collect()))
            .collect()
    };
    let family = |states: &HashSet<(u32, ElementSet)>| -> BTreeSet<Vec<usize>> {
        states.iter().map(|(_, k)| k.ones().collect()).collect()
    };
    let mut states: HashSet<(u32, ElementSet)> = all
        .iter()
        .map(|&x| {
            let mut k = h.clone();
            k.intersect_with(&conjs[x as usize]);
            (x, k)
        })
        .collect();
    let mut prev_family = BTreeSet::from([hs.iter().map(|&e| e as usize).collect::<Vec<_>>()]);
    let mut prev_decorated = decorate(&states);
    for i in 2..=max_level {
        let cur_family = family(&states);
        if cur_family == prev_family {
            return Some(2 * (i - 1));
        }
        let mut next = HashSet::new();
        for (x1, k) in &states {
            for c in &conjs {
                let mut m = k.clone();
                m.intersect_with(c);
                next.insert((*x1, m));
            }
        }
        let decorated = decorate(&next);
        if decorated.is_subset(&prev_decorated) {
            return Some(2 * i - 1);
        }
        prev_family = cur_family;
        prev_decorated = decorated;
        states = next;
    }
    None
}

fn mat_mul(a: &[Vec<u64>], b: &[Vec<u64>]) -> Vec<Vec<u64>> {
    a.iter()
        .map(|row| {
            (0..b[0].len())
                .map(|j| row.iter().zip(b).map(|(&x, r)| x * r[j]).sum::<u64>().min(1 << 20))
                .collect()
        })
        .collect()
}

fn support_within(a: &[Vec<u64>], b: &[Vec<u64>]) -> bool {
    a.iter()
        .zip(b)
        .all(|(x, y)| x.iter().zip(y).all(|(&u, &v)| u == 0 || v > 0))
}

/// Ordinary depth from the inclusion matrix: the least `n` such that the support of
/// `M^(n+1)` lies in that of `M^(n-1)`, with `M^(0) = I`, `M^(1) = M` and further
/// powers alternately multiplied by `M^T` and `M`.
pub fn matrix_depth(m: &MultiplicityMatrix, max_level: u32) -> Option<u32> {
    let m = &m.entries;
    let mt: Vec<Vec<u64>> = (0..m[0].len()).map(|j| m.iter().map(|r| r[j]).collect()).collect();
    let identity: Vec<Vec<u64>> = (0..m.len())
        .map(|i| (0..m.len()).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut powers = vec![identity, m.to_vec()];
    for n in 1..=max_level {
        let last = powers.last().expect("nonempty");
        let next = if n % 2 == 1 { mat_mul(last, &mt) } else { mat_mul(last, m) };
        powers.push(next);
        if support_within(&powers[n as usize + 1], &powers[n as usize - 1]) {
            return Some(n);
        }
    }
    None
}
