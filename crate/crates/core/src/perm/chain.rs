use num_bigint::BigUint;
use num_traits::One;

use super::Permutation;

#[derive(Clone, Debug)]
struct Level {
    base: u32,
    gens: Vec<Permutation>,
    orbit: Vec<u32>,
    /// `transversal[p]` maps the base point to `p`.
    transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(degree: usize, base: u32) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base as usize] = Some(Permutation::identity(degree));
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            transversal,
        }
    }

    fn rebuild_orbit(&mut self) {
        let degree = self.transversal.len();
        self.transversal.iter_mut().for_each(|t| *t = None);
        self.transversal[self.base as usize] = Some(Permutation::identity(degree));
        self.orbit.clear();
        self.orbit.push(self.base);
        let mut k = 0;
        while k < self.orbit.len() {
            let p = self.orbit[k];
            for s in &self.gens {
                let ps = s.image(p);
                if self.transversal[ps as usize].is_none() {
                    let u = self.transversal[p as usize].as_ref().unwrap().compose(s);
                    self.transversal[ps as usize] = Some(u);
                    self.orbit.push(ps);
                }
            }
            k += 1;
        }
    }
}

/// Base and strong generating set built by deterministic Schreier-Sims.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn build(degree: usize, generators: &[Permutation]) -> Self {
        let gens: Vec<Permutation> = generators.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        let Some(first) = gens.first() else {
            return chain;
        };
        let mut top = Level::new(degree, first.first_moved_point().unwrap());
        top.gens = gens;
        top.rebuild_orbit();
        chain.levels.push(top);

        let mut i = 0usize;
        loop {
            match chain.failing_schreier_generator(i) {
                None => {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                }
                Some((stop, residue)) => {
                    if stop == chain.levels.len() {
                        let base = residue.first_moved_point().unwrap();
                        chain.levels.push(Level::new(degree, base));
                    }
                    for t in (i + 1)..=stop {
                        chain.levels[t].gens.push(residue.clone());
                        chain.levels[t].rebuild_orbit();
                    }
                    i = stop;
                }
            }
        }
        chain
    }

    /// First Schreier generator of level `i` that does not sift through the levels below.
    fn failing_schreier_generator(&self, i: usize) -> Option<(usize, Permutation)> {
        let level = &self.levels[i];
        for &p in &level.orbit {
            let up = level.transversal[p as usize].as_ref().unwrap();
            for s in &level.gens {
                let ps = s.image(p);
                let ups = level.transversal[ps as usize].as_ref().unwrap();
                let sg = up.compose(s).compose(&ups.inverse());
                if sg.is_identity() {
                    continue;
                }
                let (stop, residue) = self.sift_from(i + 1, sg);
                if !residue.is_identity() {
                    return Some((stop, residue));
                }
            }
        }
        None
    }

    fn sift_from(&self, start: usize, mut g: Permutation) -> (usize, Permutation) {
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let p = g.image(level.base);
            match &level.transversal[p as usize] {
                None => return (l, g),
                Some(u) => g = g.compose(&u.inverse()),
            }
        }
        (self.levels.len(), g)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift_from(0, g.clone()).1.is_identity()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Every element, as products of transversal representatives, unsorted.
    pub fn enumerate(&self) -> Vec<Permutation> {
        let mut acc = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(acc.len() * level.orbit.len());
            for x in &acc {
                for &p in &level.orbit {
                    next.push(x.compose(level.transversal[p as usize].as_ref().unwrap()));
                }
            }
            acc = next;
        }
        acc
    }
}
