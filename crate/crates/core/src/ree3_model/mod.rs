//! `R(3) ≅ PΓL(2,8)` on the projective line over GF(8), and exhaustive checks of its
//! subgroup structure.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::depth::{DepthReport, Inclusion, DEFAULT_MAX_LEVEL};
use crate::error::{Error, Result};
use crate::perm::lattice::{
    center_of, conjugates, derived_subgroup, maximal_subgroup_classes, order_histogram, sylow_subgroup,
};
use crate::perm::{ElementSet, IndexedGroup, PermGroup, Permutation};

pub const ORDER: usize = 1512;
pub const MAXIMAL_ORDERS: [usize; 4] = [54, 168, 42, 504];

/// GF(8) modulo `x^3 + x + 1`, elements as bit vectors.
pub mod gf8 {
    pub const MODULUS: u8 = 0b1011;
    /// The residue of `x`, a generator of the multiplicative group.
    pub const OMEGA: u8 = 0b010;

    pub fn mul(a: u8, b: u8) -> u8 {
        let mut r = 0u8;
        for i in 0..3 {
            if b >> i & 1 == 1 {
                r ^= a << i;
            }
        }
        for i in (3..5).rev() {
            if r >> i & 1 == 1 {
                r ^= MODULUS << (i - 3);
            }
        }
        r
    }

    pub fn inv(a: u8) -> u8 {
        assert!(a != 0, "zero has no inverse");
        (1..8).find(|&b| mul(a, b) == 1).expect("GF(8) is a field")
    }
}

/// The point at infinity.
pub const INFINITY: u32 = 8;

fn line_map(f: impl Fn(u8) -> u32, at_infinity: u32) -> Permutation {
    let mut images: Vec<u32> = (0..8).map(f).collect();
    images.push(at_infinity);
    Permutation::from_images(images).expect("a bijection of the projective line")
}

/// `x+1`, `ωx`, `1/x`, `x^2`.
pub fn generators() -> Vec<Permutation> {
    vec![
        line_map(|x| (x ^ 1) as u32, INFINITY),
        line_map(|x| gf8::mul(gf8::OMEGA, x) as u32, INFINITY),
        line_map(|x| if x == 0 { INFINITY } else { gf8::inv(x) as u32 }, 0),
        line_map(|x| gf8::mul(x, x) as u32, INFINITY),
    ]
}

pub struct R3Group {
    pub group: PermGroup,
    pub indexed: IndexedGroup,
}

pub fn build_r3() -> Result<R3Group> {
    let group = PermGroup::new(9, generators())?;
    let indexed = IndexedGroup::new(&group, ORDER)?;
    if indexed.len() != ORDER {
        return Err(Error::Inconsistency(format!("constructed group has order {}", indexed.len())));
    }
    Ok(R3Group { group, indexed })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetAction {
    pub degree: usize,
    pub faithful: bool,
    pub two_transitive: bool,
    /// Order of the pointwise stabilizer of a 3-set, mapped to the number of 3-sets.
    pub three_point_stabilizers: BTreeMap<usize, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub order: usize,
    pub clauses: Vec<Clause>,
    pub maximal_orders: Vec<usize>,
    pub maximal_class_sizes: Vec<usize>,
    pub nhs_is_point_stabilizer: bool,
    pub coset_action: CosetAction,
}

impl StructureReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.holds)
    }

    pub fn clause(&self, name: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.name == name)
    }
}

fn size(s: &ElementSet) -> usize {
    s.count_ones(..)
}

fn singleton(g: &IndexedGroup, x: u32) -> ElementSet {
    let mut s = g.empty_set();
    s.insert(x as usize);
    s
}

/// Distinct conjugates meet trivially.
fn is_ti(g: &IndexedGroup, h: &ElementSet) -> (bool, usize) {
    let conj = conjugates(g, h);
    let ok = conj.iter().enumerate().all(|(i, a)| {
        conj[i + 1..]
            .iter()
            .all(|b| a.intersection(b).count() == 1)
    });
    (ok, conj.len())
}

/// Order 12 with one involution class of size 3 and eight elements of order 3.
fn looks_like_a4(g: &IndexedGroup, k: &ElementSet) -> bool {
    let h = order_histogram(g, k);
    size(k) == 12 && h == BTreeMap::from([(1, 1), (2, 3), (3, 8)])
}

fn clause(name: &str, holds: bool, detail: String) -> Clause {
    Clause {
        name: name.into(),
        holds,
        detail,
    }
}

pub fn verify_structure(r: &R3Group) -> StructureReport {
    let g = &r.indexed;
    let full = g.full_set();
    let mut clauses = Vec::new();

    clauses.push(clause("order", g.len() == ORDER, format!("|H| = {}", g.len())));

    let derived = derived_subgroup(g, &full);
    clauses.push(clause(
        "derived_subgroup",
        size(&derived) == 504 && g.is_normal(&derived),
        format!("|H'| = {}", size(&derived)),
    ));

    // Sylow 3.
    let p0 = sylow_subgroup(g, 3);
    let (ti3, n3) = is_ti(g, &p0);
    clauses.push(clause(
        "sylow3_ti",
        size(&p0) == 27 && ti3,
        format!("|P0| = {}, {n3} conjugates, TI = {ti3}", size(&p0)),
    ));
    let z = center_of(g, &p0);
    let p0_derived = derived_subgroup(g, &p0);
    clauses.push(clause(
        "center_is_derived",
        z == p0_derived && size(&z) == 3,
        format!("|Z(P0)| = {}, |P0'| = {}", size(&z), size(&p0_derived)),
    ));
    let low: Vec<u32> = p0
        .ones()
        .filter(|&x| 3 % g.element_order(x as u32) == 0)
        .map(|x| x as u32)
        .collect();
    let p1 = g.closure(&low);
    let outside_order9 = p0
        .ones()
        .filter(|&x| !p1.contains(x))
        .all(|x| g.element_order(x as u32) == 9);
    clauses.push(clause(
        "outside_p1_order9",
        size(&p1) == 9 && outside_order9,
        format!("|P0^1| = {}", size(&p1)),
    ));
    let n_p0 = g.normalizer(&p0);
    let i = n_p0
        .ones()
        .find(|&x| g.element_order(x as u32) == 2)
        .map(|x| x as u32);
    let (cp_i, meets_z) = match i {
        Some(i) => {
            let mut c = g.centralizer(&singleton(g, i));
            c.intersect_with(&p0);
            let meet = c.intersection(&z).count();
            (size(&c), meet)
        }
        None => (0, 0),
    };
    clauses.push(clause(
        "sylow3_normalizer",
        size(&n_p0) == 54 && i.is_some() && cp_i == 3 && meets_z == 1,
        format!("|N(P0)| = {}, |C_P0(i)| = {cp_i}, |C_P0(i) ∩ Z(P0)| = {meets_z}", size(&n_p0)),
    ));

    // Sylow 2 and involutions.
    let s = sylow_subgroup(g, 2);
    let elementary = s.ones().all(|x| g.element_order(x as u32) <= 2);
    let c_s = g.centralizer(&s);
    let n_s = g.normalizer(&s);
    clauses.push(clause(
        "sylow2",
        size(&s) == 8 && elementary && c_s == s && size(&n_s) == 168,
        format!(
            "|S| = {}, elementary abelian = {elementary}, |C(S)| = {}, |N(S)| = {}",
            size(&s),
            size(&c_s),
            size(&n_s)
        ),
    ));
    let involutions: Vec<u32> = (0..g.len() as u32).filter(|&x| g.element_order(x) == 2).collect();
    let centralizers_ok = involutions.iter().all(|&i| {
        let c = g.centralizer(&singleton(g, i));
        let threes: Vec<u32> = c
            .ones()
            .filter(|&x| g.element_order(x as u32) == 3)
            .map(|x| x as u32)
            .collect();
        let k = g.closure(&threes);
        size(&c) == 24 && !k.contains(i as usize) && looks_like_a4(g, &k)
    });
    clauses.push(clause(
        "involution_centralizer",
        !involutions.is_empty() && centralizers_ok,
        format!("{} involutions, each C(i) = <i> x A4 of order 24", involutions.len()),
    ));

    // Sylow 7.
    let s7 = sylow_subgroup(g, 7);
    let (ti7, n7) = is_ti(g, &s7);
    let n_s7 = g.normalizer(&s7);
    let complement = n_s7.ones().find(|&x| g.element_order(x as u32) == 6).map(|x| x as u32);
    let frobenius = complement.is_some()
        && s7
            .ones()
            .filter(|&x| x != 0)
            .all(|x| {
                let mut c = g.centralizer(&singleton(g, x as u32));
                c.intersect_with(&n_s7);
                c == s7
            });
    clauses.push(clause(
        "sylow7",
        size(&s7) == 7 && ti7 && size(&n_s7) == 42 && frobenius,
        format!("{n7} conjugates, TI = {ti7}, |N| = {}, Frobenius = {frobenius}", size(&n_s7)),
    ));

    // Maximal subgroups.
    let maximal = maximal_subgroup_classes(g);
    let maximal_orders: Vec<usize> = maximal.iter().map(|c| c.order).collect();
    let found: BTreeSet<usize> = maximal_orders.iter().copied().collect();
    let want: BTreeSet<usize> = MAXIMAL_ORDERS.into_iter().collect();
    clauses.push(clause(
        "maximal_subgroups",
        found == want && maximal_orders.len() == 4,
        format!("orders {maximal_orders:?}"),
    ));
    let stab9 = point_stabilizer(g, 0);
    let nhs_is_point_stabilizer = conjugates(g, &n_s).contains(&stab9);

    let coset_action = coset_action(g, &n_p0);
    let attained: BTreeSet<usize> = coset_action.three_point_stabilizers.keys().copied().collect();
    clauses.push(clause(
        "coset_action_28",
        coset_action.degree == 28
            && coset_action.faithful
            && coset_action.two_transitive
            && attained == BTreeSet::from([1, 2]),
        format!("3-point stabilizer orders {:?}", coset_action.three_point_stabilizers),
    ));

    StructureReport {
        order: g.len(),
        clauses,
        maximal_class_sizes: maximal.iter().map(|c| c.class_size).collect(),
        maximal_orders,
        nhs_is_point_stabilizer,
        coset_action,
    }
}

fn point_stabilizer(g: &IndexedGroup, point: u32) -> ElementSet {
    let mut s = g.empty_set();
    for (i, p) in g.elements().iter().enumerate() {
        if p.image(point) == point {
            s.insert(i);
        }
    }
    s
}

/// Action on right cosets of `n`, with point `k` the coset of the `k`-th transversal element.
pub fn coset_action(g: &IndexedGroup, n: &ElementSet) -> CosetAction {
    let reps = g.right_transversal(n);
    let mut coset = vec![0u32; g.len()];
    for (k, &r) in reps.iter().enumerate() {
        for h in n.ones() {
            coset[g.mul(h as u32, r) as usize] = k as u32;
        }
    }
    let degree = reps.len();
    let act = |x: u32| -> Vec<u32> { reps.iter().map(|&r| coset[g.mul(r, x) as usize]).collect() };
    let images: Vec<Vec<u32>> = (0..g.len() as u32).map(act).collect();
    let faithful = images.iter().skip(1).all(|im| im.iter().enumerate().any(|(k, &j)| k as u32 != j));

    let mut orbit = BTreeSet::new();
    for im in &images {
        if im[0] == 0 {
            orbit.insert(im[1]);
        }
    }
    let two_transitive = orbit.len() == degree - 1;

    let mut counts: BTreeMap<(u32, u32, u32), usize> = BTreeMap::new();
    for im in &images {
        let fixed: Vec<u32> = (0..degree as u32).filter(|&k| im[k as usize] == k).collect();
        for (a, &x) in fixed.iter().enumerate() {
            for (b, &y) in fixed.iter().enumerate().skip(a + 1) {
                for &z in &fixed[b + 1..] {
                    *counts.entry((x, y, z)).or_default() += 1;
                }
            }
        }
    }
    let total = degree * (degree - 1) * (degree - 2) / 6;
    let mut three_point_stabilizers = BTreeMap::new();
    for &c in counts.values() {
        *three_point_stabilizers.entry(c).or_default() += 1;
    }
    debug_assert_eq!(counts.len(), total);
    CosetAction {
        degree,
        faithful,
        two_transitive,
        three_point_stabilizers,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SurveyEntry {
    pub subgroup_order: usize,
    pub class_size: usize,
    pub report: DepthReport,
}

/// Depth data for one representative of each maximal subgroup class.
pub fn r3_depth_survey(r: &R3Group) -> Result<Vec<SurveyEntry>> {
    maximal_subgroup_classes(&r.indexed)
        .into_iter()
        .map(|c| {
            let inc = Inclusion {
                group: r.indexed.clone(),
                sub: c.rep,
            };
            let report = DepthReport::compute(&inc, DEFAULT_MAX_LEVEL)?;
            let normal_iff_shallow = report.normal == (report.dc.value() <= Some(2))
                && report.normal == (report.d.value() <= Some(2));
            if !normal_iff_shallow {
                return Err(Error::Inconsistency(format!(
                    "normality disagrees with depth for a subgroup of order {}",
                    c.order
                )));
            }
            Ok(SurveyEntry {
                subgroup_order: c.order,
                class_size: c.class_size,
                report,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf8_is_a_field() {
        for a in 1..8u8 {
            assert_eq!(gf8::mul(a, gf8::inv(a)), 1);
        }
        let mut x = 1u8;
        let mut seen = BTreeSet::new();
        for _ in 0..7 {
            seen.insert(x);
            x = gf8::mul(x, gf8::OMEGA);
        }
        assert_eq!(seen.len(), 7);
        assert_eq!(x, 1);
    }

    #[test]
    fn order_and_point_stabilizer() {
        let r = build_r3().unwrap();
        assert_eq!(r.group.order(), 1512u32.into());
        assert_eq!(size(&point_stabilizer(&r.indexed, 0)), 168);
        assert!(r.group.is_transitive());
    }
}
