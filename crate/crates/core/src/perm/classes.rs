use num_bigint::BigUint;
use serde::Serialize;

use super::{IndexedGroup, PermGroup, Permutation};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugacyClassInfo {
    pub representative: Permutation,
    pub size: BigUint,
    pub centralizer_order: BigUint,
}

#[derive(Clone, Debug)]
pub struct ClassData {
    /// Least element of the class.
    pub rep: u32,
    pub members: Vec<u32>,
    pub element_order: u64,
}

impl ClassData {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Conjugacy classes of a materialized group, ordered by element order, then size,
/// then least representative. Class 0 is the identity.
#[derive(Clone, Debug)]
pub struct ClassPartition {
    pub class_of: Vec<u32>,
    pub classes: Vec<ClassData>,
}

impl ClassPartition {
    pub fn new(g: &IndexedGroup) -> Self {
        let n = g.len();
        let mut assigned = vec![false; n];
        let mut classes = Vec::new();
        for x in 0..n as u32 {
            if assigned[x as usize] {
                continue;
            }
            assigned[x as usize] = true;
            let mut members = vec![x];
            let mut k = 0;
            while k < members.len() {
                let y = members[k];
                for &s in g.generator_ids() {
                    let z = g.conj(y, s);
                    if !assigned[z as usize] {
                        assigned[z as usize] = true;
                        members.push(z);
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            classes.push(ClassData {
                rep: x,
                element_order: g.element_order(x),
                members,
            });
        }
        classes.sort_by_key(|c| (c.element_order, c.members.len(), c.rep));
        let mut class_of = vec![0u32; n];
        for (ci, c) in classes.iter().enumerate() {
            for &m in &c.members {
                class_of[m as usize] = ci as u32;
            }
        }
        ClassPartition { class_of, classes }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(ClassData::size).collect()
    }

    /// Class of `rep^e` for the representative of class `c`.
    pub fn power_class(&self, g: &IndexedGroup, c: usize, e: u64) -> usize {
        self.class_of[g.pow(self.classes[c].rep, e) as usize] as usize
    }

    /// Class containing the inverses of class `c`.
    pub fn inverse_class(&self, g: &IndexedGroup, c: usize) -> usize {
        self.class_of[g.inv(self.classes[c].rep) as usize] as usize
    }
}

/// Conjugacy classes of `g`, refusing groups above `cap`.
pub fn conjugacy_classes(g: &PermGroup, cap: usize) -> Result<Vec<ConjugacyClassInfo>> {
    let ig = IndexedGroup::new(g, cap)?;
    let part = ClassPartition::new(&ig);
    let order = BigUint::from(ig.len());
    Ok(part
        .classes
        .iter()
        .map(|c| {
            let size = BigUint::from(c.size());
            ConjugacyClassInfo {
                representative: ig.element(c.rep).clone(),
                centralizer_order: &order / &size,
                size,
            }
        })
        .collect())
}
