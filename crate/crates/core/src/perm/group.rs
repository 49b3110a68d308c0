use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::chain::StabChain;
use super::Permutation;
use crate::error::{Error, Result};

/// Default bound on the number of elements any operation will materialize.
pub const DEFAULT_CAP: usize = 10_000;

/// A permutation group given by generators, with a stabilizer chain built at construction.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabChain,
    elements: OnceLock<Vec<Permutation>>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 || degree > super::MAX_DEGREE {
            return Err(Error::input(format!("unsupported degree {degree}")));
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::input(format!(
                "generator {g} has degree {}, expected {degree}",
                g.degree()
            )));
        }
        let chain = StabChain::build(degree, &generators);
        Ok(PermGroup {
            degree,
            generators,
            chain,
            elements: OnceLock::new(),
        })
    }

    /// Validates raw image lists before building the group.
    pub fn from_images(degree: usize, generators: Vec<Vec<u32>>) -> Result<Self> {
        let gens = generators
            .into_iter()
            .map(Permutation::from_images)
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(degree, gens)
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, Vec::new()).expect("trivial group")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn order(&self) -> BigUint {
        self.chain.order()
    }

    /// Order as a `usize`, or a capacity error when it exceeds `cap`.
    pub fn order_within(&self, cap: usize) -> Result<usize> {
        let order = self.order();
        match order.to_usize() {
            Some(n) if n <= cap => Ok(n),
            _ => Err(Error::Capacity {
                what: "group".into(),
                order: order.to_string(),
                cap,
            }),
        }
    }

    pub fn base(&self) -> Vec<u32> {
        self.chain.base()
    }

    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.chain.transversal_sizes()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain.contains(g)
    }

    /// Sorted element list, materialized once.
    pub fn elements(&self, cap: usize) -> Result<&[Permutation]> {
        if let Some(e) = self.elements.get() {
            if e.len() <= cap {
                return Ok(e);
            }
        }
        self.order_within(cap)?;
        Ok(self.elements.get_or_init(|| {
            let mut e = self.chain.enumerate();
            e.sort_unstable();
            e
        }))
    }

    /// Orbit of a point, in discovery order.
    pub fn orbit(&self, point: u32) -> Vec<u32> {
        let mut seen = vec![false; self.degree];
        seen[point as usize] = true;
        let mut orbit = vec![point];
        let mut k = 0;
        while k < orbit.len() {
            let p = orbit[k];
            for g in &self.generators {
                let q = g.image(p);
                if !seen[q as usize] {
                    seen[q as usize] = true;
                    orbit.push(q);
                }
            }
            k += 1;
        }
        orbit
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0).len() == self.degree
    }
}

/// `group_from_generators` under its usual name.
pub fn group_from_generators(degree: usize, generators: Vec<Permutation>) -> Result<PermGroup> {
    PermGroup::new(degree, generators)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(n: usize, cycles: &[&[u32]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn s3_has_order_six() {
        let g = PermGroup::new(3, vec![perm(3, &[&[0, 1]]), perm(3, &[&[0, 1, 2]])]).unwrap();
        assert_eq!(g.order(), BigUint::from(6u32));
        assert_eq!(g.elements(DEFAULT_CAP).unwrap().len(), 6);
    }

    #[test]
    fn identity_generator_gives_trivial_group() {
        let g = PermGroup::new(4, vec![Permutation::identity(4)]).unwrap();
        assert_eq!(g.order(), BigUint::from(1u32));
        assert_eq!(g.elements(DEFAULT_CAP).unwrap(), &[Permutation::identity(4)]);
    }

    #[test]
    fn rejects_degree_mismatch() {
        assert!(PermGroup::new(4, vec![perm(3, &[&[0, 1]])]).is_err());
        assert!(PermGroup::from_images(3, vec![vec![0, 0, 1]]).is_err());
    }

    #[test]
    fn capacity_is_enforced() {
        let s6 = PermGroup::new(6, vec![perm(6, &[&[0, 1]]), perm(6, &[&[0, 1, 2, 3, 4, 5]])]).unwrap();
        assert_eq!(s6.order(), BigUint::from(720u32));
        assert!(matches!(s6.elements(100), Err(Error::Capacity { .. })));
        assert_eq!(s6.elements(1000).unwrap().len(), 720);
    }

    #[test]
    fn membership() {
        let a4 = PermGroup::new(4, vec![perm(4, &[&[0, 1, 2]]), perm(4, &[&[1, 2, 3]])]).unwrap();
        assert_eq!(a4.order(), BigUint::from(12u32));
        assert!(a4.contains(&perm(4, &[&[0, 1], &[2, 3]])));
        assert!(!a4.contains(&perm(4, &[&[0, 1]])));
    }
}
