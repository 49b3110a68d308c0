use super::{IndexedGroup, PermGroup, Permutation};
use crate::error::{Error, Result};

/// A subgroup with its elements materialized in sorted order.
///
/// Two handles describe the same subgroup exactly when their element lists are equal.
#[derive(Clone, Debug)]
pub struct Subgroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl Subgroup {
    pub(crate) fn from_parts(degree: usize, generators: Vec<Permutation>, elements: Vec<Permutation>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Subgroup {
            degree,
            generators,
            elements,
        }
    }

    /// The subgroup of `parent` generated by `generators`.
    pub fn generated(parent: &PermGroup, generators: Vec<Permutation>, cap: usize) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| !parent.contains(g)) {
            return Err(Error::input(format!("generator {g} is not in the parent group")));
        }
        let group = PermGroup::new(parent.degree(), generators)?;
        let elements = group.elements(cap)?.to_vec();
        Ok(Subgroup {
            degree: parent.degree(),
            generators: group.generators().to_vec(),
            elements,
        })
    }

    pub fn whole(parent: &PermGroup, cap: usize) -> Result<Self> {
        Subgroup::generated(parent, parent.generators().to_vec(), cap)
    }

    pub fn trivial(degree: usize) -> Self {
        Subgroup {
            degree,
            generators: Vec::new(),
            elements: vec![Permutation::identity(degree)],
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn to_group(&self) -> PermGroup {
        PermGroup::new(self.degree, self.generators.clone()).expect("subgroup generators are valid")
    }

    /// `self ∩ other`, by merging the sorted element lists.
    pub fn intersect(&self, other: &Subgroup) -> Result<Subgroup> {
        if self.degree != other.degree {
            return Err(Error::input("subgroups act on different degrees"));
        }
        let mut elements = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.elements.len() && j < other.elements.len() {
            match self.elements[i].cmp(&other.elements[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    elements.push(self.elements[i].clone());
                    i += 1;
                    j += 1;
                }
            }
        }
        let generators = greedy_generators(self.degree, &elements);
        Ok(Subgroup {
            degree: self.degree,
            generators,
            elements,
        })
    }

    /// `x^-1 H x`.
    pub fn conjugate(&self, x: &Permutation) -> Subgroup {
        let mut elements: Vec<Permutation> = self.elements.iter().map(|h| h.conjugate_by(x)).collect();
        elements.sort_unstable();
        Subgroup {
            degree: self.degree,
            generators: self.generators.iter().map(|h| h.conjugate_by(x)).collect(),
            elements,
        }
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|h| other.contains(h))
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.degree.hash(state);
        self.elements.hash(state);
    }
}

fn greedy_generators(degree: usize, sorted: &[Permutation]) -> Vec<Permutation> {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut group = PermGroup::trivial(degree);
    for x in sorted {
        if !group.contains(x) {
            gens.push(x.clone());
            group = PermGroup::new(degree, gens.clone()).expect("valid generators");
        }
    }
    gens
}

pub fn intersect(h1: &Subgroup, h2: &Subgroup) -> Result<Subgroup> {
    h1.intersect(h2)
}

pub fn conjugate(h: &Subgroup, x: &Permutation) -> Subgroup {
    h.conjugate(x)
}

pub fn centralizer(g: &PermGroup, h: &Subgroup, cap: usize) -> Result<Subgroup> {
    let ig = IndexedGroup::new(g, cap)?;
    let hs = ig.subgroup_set(h)?;
    Ok(ig.to_subgroup(&ig.centralizer(&hs)))
}

pub fn normalizer(g: &PermGroup, h: &Subgroup, cap: usize) -> Result<Subgroup> {
    let ig = IndexedGroup::new(g, cap)?;
    let hs = ig.subgroup_set(h)?;
    Ok(ig.to_subgroup(&ig.normalizer(&hs)))
}

/// Right coset representatives of `h` in `g`; the first is the identity.
pub fn right_transversal(g: &PermGroup, h: &Subgroup, cap: usize) -> Result<Vec<Permutation>> {
    let ig = IndexedGroup::new(g, cap)?;
    let hs = ig.subgroup_set(h)?;
    Ok(ig.perms_of(&ig.right_transversal(&hs)))
}
