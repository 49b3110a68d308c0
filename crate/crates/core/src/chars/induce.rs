use num_rational::Ratio;
use serde::Serialize;

use super::cyclotomic::Cyclotomic;
use super::table::{inner_product, CharacterTable};
use crate::error::{Error, Result};
use crate::perm::{ClassPartition, IndexedGroup};

/// Map from the classes of a subgroup to the classes of the parent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassFusion {
    pub map: Vec<usize>,
}

impl ClassFusion {
    /// Fusion of `sub` into `parent`, where both act on the same points.
    pub fn compute(
        sub: &IndexedGroup,
        sub_classes: &ClassPartition,
        parent: &IndexedGroup,
        parent_classes: &ClassPartition,
    ) -> Result<Self> {
        let map = sub_classes
            .classes
            .iter()
            .map(|c| {
                let x = parent
                    .index_of(sub.element(c.rep))
                    .ok_or_else(|| Error::input("subgroup element outside the parent"))?;
                Ok(parent_classes.class_of[x as usize] as usize)
            })
            .collect::<Result<_>>()?;
        Ok(ClassFusion { map })
    }

    /// Checks element orders and that every parent class meets the subgroup in a
    /// union of subgroup classes no larger than itself.
    pub fn validate(&self, sub: &CharacterTable, parent: &CharacterTable) -> Result<()> {
        if self.map.len() != sub.num_classes() {
            return Err(Error::Inconsistency("fusion length differs from class count".into()));
        }
        let mut hit = vec![0u128; parent.num_classes()];
        for (h, &g) in self.map.iter().enumerate() {
            let Some(pc) = parent.classes.get(g) else {
                return Err(Error::Inconsistency(format!("fusion target {g} out of range")));
            };
            if pc.rep_order != sub.classes[h].rep_order {
                return Err(Error::Inconsistency(format!("fusion of class {h} changes element order")));
            }
            hit[g] += sub.classes[h].size;
        }
        if self.map.first() != Some(&0) {
            return Err(Error::Inconsistency("identity must fuse to identity".into()));
        }
        // |C_k ∩ H| |G| / (|C_k| |H|) counts fixed points of g_k on G/H, so it is integral.
        for (k, &n) in hit.iter().enumerate() {
            if n > parent.classes[k].size
                || !(n * parent.group_order).is_multiple_of(parent.classes[k].size * sub.group_order)
            {
                return Err(Error::Inconsistency(format!("class sizes incompatible at class {k}")));
            }
        }
        Ok(())
    }
}

/// `m[ψ][χ] = ⟨ψ^G, χ⟩`, rows indexed by `Irr(H)`, columns by `Irr(G)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityMatrix {
    pub entries: Vec<Vec<u64>>,
}

impl MultiplicityMatrix {
    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries.first().map_or(0, Vec::len)
    }

    pub fn get(&self, psi: usize, chi: usize) -> u64 {
        self.entries[psi][chi]
    }
}

pub fn restrict_character(chi: &[Cyclotomic], fusion: &ClassFusion) -> Vec<Cyclotomic> {
    fusion.map.iter().map(|&k| chi[k].clone()).collect()
}

/// Values of `ψ^G` on the classes of `G`.
pub fn induce_character(
    psi: &[Cyclotomic],
    sub: &CharacterTable,
    parent: &CharacterTable,
    fusion: &ClassFusion,
) -> Vec<Cyclotomic> {
    let mut out = vec![Cyclotomic::zero(1); parent.num_classes()];
    for (h, &k) in fusion.map.iter().enumerate() {
        let w = Ratio::new(sub.classes[h].size as i128, 1);
        out[k] = &out[k] + &psi[h].scale(w);
    }
    for (k, v) in out.iter_mut().enumerate() {
        // |C_G(g_k)| / |H| = |G| / (|C_k| |H|)
        let f = Ratio::new(
            parent.group_order as i128,
            parent.classes[k].size as i128 * sub.group_order as i128,
        );
        *v = v.scale(f);
    }
    out
}

/// Multiplicities through Frobenius reciprocity, each checked to be a nonnegative integer.
pub fn induce_restrict(
    sub: &CharacterTable,
    parent: &CharacterTable,
    fusion: &ClassFusion,
) -> Result<MultiplicityMatrix> {
    let sizes = sub.sizes();
    let restricted: Vec<Vec<Cyclotomic>> = parent
        .irreducibles
        .iter()
        .map(|chi| restrict_character(chi, fusion))
        .collect();
    let mut entries = vec![vec![0u64; parent.irreducibles.len()]; sub.irreducibles.len()];
    for (i, psi) in sub.irreducibles.iter().enumerate() {
        for (j, res) in restricted.iter().enumerate() {
            let ip = inner_product(psi, res, &sizes, sub.group_order);
            match ip.as_integer() {
                Some(m) if m >= 0 => entries[i][j] = m as u64,
                _ => {
                    return Err(Error::Inconsistency(format!(
                        "<psi_{i}, chi_{j}|_H> = {ip} is not a nonnegative integer"
                    )))
                }
            }
        }
    }
    Ok(MultiplicityMatrix { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::table_of_indexed;
    use crate::perm::{named, PermGroup};

    fn setup(g: &PermGroup, h: &PermGroup) -> (CharacterTable, CharacterTable, ClassFusion) {
        let ig = IndexedGroup::new(g, 1000).unwrap();
        let ih = IndexedGroup::new(h, 1000).unwrap();
        let cg = ClassPartition::new(&ig);
        let ch = ClassPartition::new(&ih);
        let f = ClassFusion::compute(&ih, &ch, &ig, &cg).unwrap();
        (table_of_indexed(&ih, &ch).unwrap(), table_of_indexed(&ig, &cg).unwrap(), f)
    }

    #[test]
    fn identity_fusion_gives_identity_matrix() {
        let s4 = named::symmetric(4);
        let (th, tg, f) = setup(&s4, &s4);
        f.validate(&th, &tg).unwrap();
        let m = induce_restrict(&th, &tg, &f).unwrap();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                assert_eq!(m.get(i, j), u64::from(i == j));
            }
        }
    }

    #[test]
    fn trivial_of_a4_induces_to_one_plus_sign() {
        let (th, tg, f) = setup(&named::symmetric(4), &named::alternating(4));
        f.validate(&th, &tg).unwrap();
        let m = induce_restrict(&th, &tg, &f).unwrap();
        // S4 rows sorted by degree: trivial then sign.
        assert_eq!(m.entries[0], vec![1, 1, 0, 0, 0]);
        let ind = induce_character(&th.irreducibles[0], &th, &tg, &f);
        let sum: Vec<Cyclotomic> = tg.irreducibles[0]
            .iter()
            .zip(&tg.irreducibles[1])
            .map(|(a, b)| a + b)
            .collect();
        assert_eq!(ind, sum);
    }

    #[test]
    fn bad_fusion_is_rejected() {
        let (th, tg, mut f) = setup(&named::symmetric(4), &named::alternating(4));
        f.map.swap(1, 2);
        assert!(f.validate(&th, &tg).is_err() || induce_restrict(&th, &tg, &f).is_err());
    }
}
