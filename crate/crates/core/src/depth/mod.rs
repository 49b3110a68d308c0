//! Combinatorial and ordinary depth of subgroup inclusions, and the core bound.

mod comb;
mod core_bound;
mod ord;
pub mod reference;

use serde::{Serialize, Serializer};

pub use comb::{comb_depth_indexed, CombDepth};
pub use core_bound::{core_bound_indexed, is_simple, CoreBound};
pub use ord::{ord_depth_from_relations, OrdDepth, RelationData};

use crate::chars::{induce_restrict, table_of_indexed, ClassFusion, MultiplicityMatrix};
use crate::error::{Error, Result};
use crate::perm::{ClassPartition, ElementSet, IndexedGroup, PermGroup, Subgroup};

/// Levels explored before giving up. Stabilization always happens well before this.
pub const DEFAULT_MAX_LEVEL: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DepthValue {
    Exact(u32),
    CapExceeded,
}

impl DepthValue {
    pub fn value(self) -> Option<u32> {
        match self {
            DepthValue::Exact(d) => Some(d),
            DepthValue::CapExceeded => None,
        }
    }
}

impl Serialize for DepthValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            DepthValue::Exact(d) => s.serialize_u32(*d),
            DepthValue::CapExceeded => s.serialize_str("cap-exceeded"),
        }
    }
}

/// A subgroup inside a materialized parent.
pub struct Inclusion {
    pub group: IndexedGroup,
    pub sub: ElementSet,
}

impl Inclusion {
    pub fn new(g: &PermGroup, h: &Subgroup, cap: usize) -> Result<Self> {
        let group = IndexedGroup::new(g, cap)?;
        let sub = group.subgroup_set(h)?;
        Ok(Inclusion { group, sub })
    }

    pub fn sub_order(&self) -> usize {
        self.sub.count_ones(..)
    }

    pub fn is_normal(&self) -> bool {
        self.group.is_normal(&self.sub)
    }

    /// `G = H C_G(x)` for every `x ∈ H`.
    pub fn ordinary_depth_one(&self) -> bool {
        let g = &self.group;
        let h = self.sub_order();
        self.sub.ones().all(|x| {
            let mut single = g.empty_set();
            single.insert(x);
            let c = g.centralizer(&single);
            let meet = c.intersection(&self.sub).count();
            h * c.count_ones(..) / meet == g.len()
        })
    }

    pub fn comb_depth(&self, max_level: usize) -> Result<CombDepth> {
        comb_depth_indexed(&self.group, &self.sub, max_level)
    }

    pub fn core_bound(&self) -> Result<CoreBound> {
        core_bound_indexed(&self.group, &self.sub)
    }

    /// Exact multiplicity matrix from Dixon tables of both groups.
    pub fn multiplicities(&self) -> Result<MultiplicityMatrix> {
        let g = &self.group;
        let h_group = PermGroup::new(g.group().degree(), g.perms_of(&g.generators_of(&self.sub)))?;
        let ih = IndexedGroup::new(&h_group, g.len())?;
        let cg = ClassPartition::new(g);
        let ch = ClassPartition::new(&ih);
        let tg = table_of_indexed(g, &cg)?;
        let th = table_of_indexed(&ih, &ch)?;
        let fusion = ClassFusion::compute(&ih, &ch, g, &cg)?;
        fusion.validate(&th, &tg)?;
        induce_restrict(&th, &tg, &fusion)
    }

    pub fn ord_depth(&self) -> Result<OrdDepth> {
        let m = self.multiplicities()?;
        let data = RelationData::from_matrix(&m, self.is_normal(), self.ordinary_depth_one());
        ord_depth_from_relations(&data)
    }
}

/// Everything computed about one inclusion.
#[derive(Clone, Debug, Serialize)]
pub struct DepthReport {
    pub group_order: usize,
    pub subgroup_order: usize,
    pub normal: bool,
    pub dc: DepthValue,
    pub d: DepthValue,
    pub family_sizes: Vec<usize>,
    pub pair_counts: Vec<usize>,
    pub distances: Vec<Vec<Option<u32>>>,
    pub m_values: Vec<Option<u32>>,
    pub core_bound: CoreBound,
}

impl DepthReport {
    pub fn compute(inc: &Inclusion, max_level: usize) -> Result<Self> {
        let comb = inc.comb_depth(max_level)?;
        let ord = inc.ord_depth()?;
        let d = DepthValue::Exact(ord.exact()?);
        let report = DepthReport {
            group_order: inc.group.len(),
            subgroup_order: inc.sub_order(),
            normal: comb.normal,
            dc: comb.dc,
            d,
            family_sizes: comb.family_sizes,
            pair_counts: comb.pair_counts,
            distances: ord.distances,
            m_values: ord.m_values,
            core_bound: inc.core_bound()?,
        };
        if let (Some(d), Some(dc)) = (report.d.value(), report.dc.value()) {
            if d > dc {
                return Err(Error::Inconsistency(format!("ordinary depth {d} exceeds combinatorial depth {dc}")));
            }
            if d > report.core_bound.bound {
                return Err(Error::Inconsistency(format!(
                    "ordinary depth {d} exceeds the core bound {}",
                    report.core_bound.bound
                )));
            }
        }
        Ok(report)
    }
}

pub fn comb_depth(g: &PermGroup, h: &Subgroup, cap: usize, max_level: usize) -> Result<CombDepth> {
    Inclusion::new(g, h, cap)?.comb_depth(max_level)
}

pub fn ord_depth(g: &PermGroup, h: &Subgroup, cap: usize) -> Result<OrdDepth> {
    Inclusion::new(g, h, cap)?.ord_depth()
}

pub fn core_bound(g: &PermGroup, h: &Subgroup, cap: usize) -> Result<CoreBound> {
    Inclusion::new(g, h, cap)?.core_bound()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{named, Permutation, DEFAULT_CAP};

    fn inc(g: &PermGroup, gens: Vec<Permutation>) -> Inclusion {
        let h = Subgroup::generated(g, gens, DEFAULT_CAP).unwrap();
        Inclusion::new(g, &h, DEFAULT_CAP).unwrap()
    }

    #[test]
    fn a4_in_s4() {
        let i = inc(&named::symmetric(4), named::alternating(4).generators().to_vec());
        let r = DepthReport::compute(&i, 10).unwrap();
        assert_eq!((r.dc, r.d), (DepthValue::Exact(2), DepthValue::Exact(2)));
        assert_eq!(r.core_bound.m, 1);
        assert_eq!(r.core_bound.bound, 2);
    }

    #[test]
    fn c5_in_a5() {
        let c = Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap();
        let i = inc(&named::alternating(5), vec![c]);
        let r = DepthReport::compute(&i, 10).unwrap();
        assert_eq!((r.dc, r.d), (DepthValue::Exact(3), DepthValue::Exact(3)));
        assert_eq!((r.core_bound.m, r.core_bound.bound), (2, 3));
        assert!(r.core_bound.disjoint_conjugate);
    }

    #[test]
    fn whole_group_has_depth_one() {
        let g = named::symmetric(4);
        let i = inc(&g, g.generators().to_vec());
        let r = DepthReport::compute(&i, 10).unwrap();
        assert_eq!((r.dc, r.d), (DepthValue::Exact(1), DepthValue::Exact(1)));
        assert_eq!(r.core_bound.core_order, 24);
    }
}
