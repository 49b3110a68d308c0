//! Ordinary depth from the relation graph on `Irr(H)`.
//!
//! Two characters of `H` are related when they are constituents of one restricted
//! character of `G`. Depth `2m + 1` needs every distance at most `m`; depth `2m`
//! (for `m ≥ 2`) needs every `χ ∈ Irr(G)` to reach all of `Irr(H)` within `m - 1`
//! steps of its constituents.
//!
//! [`RelationData`] also accepts incomplete information: a set of known edges, and the
//! vertices whose whole neighbourhood is known. Distances are then bracketed between a
//! lower and an upper bound, and so is the depth.

use std::collections::VecDeque;

use serde::Serialize;

use crate::chars::MultiplicityMatrix;
use crate::error::{Error, Result};

/// What is known about the relation graph of an inclusion.
#[derive(Clone, Debug, Default, Serialize)]
pub struct RelationData {
    pub num_irr_h: usize,
    /// Known related pairs. Loops are implied and may be omitted.
    pub edges: Vec<(usize, usize)>,
    /// Vertices whose full neighbourhood appears in `edges`.
    pub complete_vertices: Vec<usize>,
    /// Constituent sets of the restrictions of the known characters of `G`.
    pub restrictions: Vec<Vec<usize>>,
    /// True when `restrictions` lists every irreducible of `G` and `edges` is complete.
    pub complete: bool,
    pub normal: Option<bool>,
    pub depth_one: Option<bool>,
}

impl RelationData {
    /// Full data from an exact multiplicity matrix.
    pub fn from_matrix(m: &MultiplicityMatrix, normal: bool, depth_one: bool) -> Self {
        let mut restrictions = vec![Vec::new(); m.cols()];
        for (psi, row) in m.entries.iter().enumerate() {
            for (chi, &e) in row.iter().enumerate() {
                if e > 0 {
                    restrictions[chi].push(psi);
                }
            }
        }
        let mut edges = Vec::new();
        for constituents in &restrictions {
            for &a in constituents {
                for &b in constituents {
                    if a < b {
                        edges.push((a, b));
                    }
                }
            }
        }
        edges.sort_unstable();
        edges.dedup();
        RelationData {
            num_irr_h: m.rows(),
            edges,
            complete_vertices: (0..m.rows()).collect(),
            restrictions,
            complete: true,
            normal: Some(normal),
            depth_one: Some(depth_one),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrdDepth {
    /// Least depth consistent with the data.
    pub lower: u32,
    /// Greatest depth consistent with the data, `None` when unbounded.
    pub upper: Option<u32>,
    /// Upper bounds on distances; `None` when no known path exists, which for complete
    /// data means the characters are unrelated.
    pub distances: Vec<Vec<Option<u32>>>,
    /// Lower bounds on distances.
    pub distance_lower: Vec<Vec<u32>>,
    /// `m(χ)` for each known restriction, computed from the upper distances.
    pub m_values: Vec<Option<u32>>,
    pub max_distance: Option<u32>,
}

impl OrdDepth {
    /// The depth when the data pins it down.
    pub fn exact(&self) -> Result<u32> {
        match self.upper {
            Some(u) if u == self.lower => Ok(u),
            Some(u) => Err(Error::Indeterminate(format!("depth lies in [{}, {u}]", self.lower))),
            None => Err(Error::Indeterminate(format!("depth is at least {}", self.lower))),
        }
    }
}

/// Least `v ≥ 3` allowed by the distance criteria given a maximal distance and maximal
/// `m(χ)`; `None` for either means unbounded.
fn least_depth(max_dist: Option<u32>, max_m: Option<u32>) -> Option<u32> {
    let mut best: Option<u32> = max_dist.map(|d| 2 * d.max(1) + 1);
    if let Some(m) = max_m {
        // 2k with k ≥ 2 and m ≤ k - 1
        let v = 2 * (m + 1).max(2);
        best = Some(best.map_or(v, |b| b.min(v)));
    }
    best
}

pub fn ord_depth_from_relations(data: &RelationData) -> Result<OrdDepth> {
    let n = data.num_irr_h;
    let mut adj = vec![vec![false; n]; n];
    for &(a, b) in &data.edges {
        if a >= n || b >= n {
            return Err(Error::input(format!("edge ({a}, {b}) outside {n} characters")));
        }
        adj[a][b] = true;
        adj[b][a] = true;
    }
    let mut complete = vec![data.complete; n];
    for &v in &data.complete_vertices {
        complete[v] = true;
    }

    let upper: Vec<Vec<Option<u32>>> = (0..n).map(|s| bfs(&adj, s)).collect();
    let mut lower = vec![vec![0u32; n]; n];
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            lower[a][b] = if (complete[a] || complete[b]) && !adj[a][b] {
                2
            } else {
                1
            };
        }
    }
    // A complete vertex reaches b only through its known neighbours.
    for _ in 0..n {
        let mut changed = false;
        for a in (0..n).filter(|&a| complete[a]) {
            for b in 0..n {
                if a == b || adj[a][b] {
                    continue;
                }
                let via = (0..n)
                    .filter(|&c| c != a && adj[a][c])
                    .map(|c| 1 + lower[c][b])
                    .min()
                    .unwrap_or(u32::MAX);
                if via > lower[a][b] && via != u32::MAX {
                    lower[a][b] = via;
                    lower[b][a] = lower[b][a].max(via);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    // With complete data, unconnected characters are at distance minus infinity and
    // never bound the depth.
    if data.complete {
        for a in 0..n {
            for b in 0..n {
                lower[a][b] = upper[a][b].unwrap_or(0);
            }
        }
    }

    let max_upper = if data.complete {
        Some(upper.iter().flatten().flatten().copied().max().unwrap_or(0))
    } else {
        upper
            .iter()
            .flatten()
            .try_fold(0u32, |acc, d| d.map(|d| acc.max(d)))
    };
    let max_lower = lower.iter().flatten().copied().max().unwrap_or(0);

    let m_of = |dist: &dyn Fn(usize, usize) -> Option<u32>, constituents: &[usize]| -> Option<u32> {
        (0..n).try_fold(0u32, |acc, a| {
            if data.complete && constituents.iter().any(|&c| dist(a, c).is_none()) {
                return Some(acc);
            }
            let best = constituents.iter().filter_map(|&c| dist(a, c)).min()?;
            Some(acc.max(best))
        })
    };
    let up = |a: usize, b: usize| upper[a][b];
    let lo = |a: usize, b: usize| Some(lower[a][b]);
    let m_values: Vec<Option<u32>> = data.restrictions.iter().map(|x| m_of(&up, x)).collect();
    let m_lower = data
        .restrictions
        .iter()
        .filter_map(|x| m_of(&lo, x))
        .max()
        .unwrap_or(0);
    let m_upper = if data.complete {
        m_values.iter().try_fold(0u32, |acc, m| m.map(|m| acc.max(m)))
    } else {
        None
    };

    let (mut lo_d, mut hi_d) = (
        least_depth(Some(max_lower), Some(m_lower)).unwrap(),
        least_depth(max_upper, m_upper),
    );
    match data.depth_one {
        Some(true) => {
            lo_d = 1;
            hi_d = Some(1);
        }
        _ => match data.normal {
            Some(true) => {
                lo_d = if data.depth_one == Some(false) { 2 } else { 1 };
                hi_d = Some(2);
            }
            Some(false) => {}
            None => lo_d = 1,
        },
    }

    Ok(OrdDepth {
        lower: lo_d,
        upper: hi_d,
        distances: upper,
        distance_lower: lower,
        m_values,
        max_distance: max_upper,
    })
}

fn bfs(adj: &[Vec<bool>], s: usize) -> Vec<Option<u32>> {
    let mut dist = vec![None; adj.len()];
    dist[s] = Some(0);
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap();
        for (w, &e) in adj[v].iter().enumerate() {
            if e && dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn least_depth_table() {
        assert_eq!(least_depth(Some(1), Some(1)), Some(3));
        assert_eq!(least_depth(Some(2), Some(1)), Some(4));
        assert_eq!(least_depth(Some(2), Some(2)), Some(5));
        assert_eq!(least_depth(Some(3), Some(2)), Some(6));
        assert_eq!(least_depth(None, Some(2)), Some(6));
        assert_eq!(least_depth(Some(2), None), Some(5));
    }

    #[test]
    fn path_graph_partial_bounds() {
        // 0 - 1 - 2 with vertex 0 complete and 1_G restricting to {0}
        let data = RelationData {
            num_irr_h: 3,
            edges: vec![(0, 1), (1, 2)],
            complete_vertices: vec![0],
            restrictions: vec![vec![0]],
            complete: false,
            normal: Some(false),
            depth_one: Some(false),
        };
        let r = ord_depth_from_relations(&data).unwrap();
        assert_eq!(r.distance_lower[0][2], 2);
        assert_eq!(r.max_distance, Some(2));
        assert_eq!(r.exact().unwrap(), 5);
    }
}
