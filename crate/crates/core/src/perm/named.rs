//! Small named groups used as test corpus and CLI conveniences.

use super::{PermGroup, Permutation};

fn cyc(n: usize, cycles: &[&[u32]]) -> Permutation {
    Permutation::from_cycles(n, cycles).expect("valid cycle literal")
}

fn long_cycle(n: usize) -> Permutation {
    Permutation::from_images_unchecked((0..n as u32).map(|i| (i + 1) % n as u32).collect())
}

pub fn symmetric(n: usize) -> PermGroup {
    if n < 2 {
        return PermGroup::trivial(n.max(1));
    }
    PermGroup::new(n, vec![cyc(n, &[&[0, 1]]), long_cycle(n)]).unwrap()
}

pub fn alternating(n: usize) -> PermGroup {
    if n < 3 {
        return PermGroup::trivial(n.max(1));
    }
    let gens = (2..n as u32).map(|k| cyc(n, &[&[0, 1, k]])).collect();
    PermGroup::new(n, gens).unwrap()
}

pub fn cyclic(n: usize) -> PermGroup {
    PermGroup::new(n, vec![long_cycle(n)]).unwrap()
}

/// Dihedral group of order `2n` acting on the vertices of an `n`-gon.
pub fn dihedral(n: usize) -> PermGroup {
    let reflection = Permutation::from_images_unchecked((0..n as u32).map(|i| (n as u32 - i) % n as u32).collect());
    PermGroup::new(n, vec![long_cycle(n), reflection]).unwrap()
}
