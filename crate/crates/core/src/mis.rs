//! Maximal independent sets: greedy construction and exhaustive enumeration.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const DEFAULT_MIS_CAP: usize = 1_000_000;

/// Maximal independent sets of a graph in lexicographic order of their sorted
/// member lists. `complete` is false when enumeration stopped at the cap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MisList {
    pub sets: Vec<VertexSet>,
    pub complete: bool,
}

/// Scans `order` and keeps every vertex with no neighbour kept so far.
pub fn greedy_mis(g: &Graph, order: &[usize]) -> VertexSet {
    let mut blocked = FixedBitSet::with_capacity(g.n());
    let mut chosen = Vec::new();
    for &v in order {
        if !blocked.contains(v) {
            chosen.push(v);
            blocked.insert(v);
            blocked.union_with(g.neighbor_bits(v));
        }
    }
    chosen.into()
}

/// Greedy maximal independent set in vertex order.
pub fn first_mis(g: &Graph) -> VertexSet {
    let order: Vec<usize> = (0..g.n()).collect();
    greedy_mis(g, &order)
}

/// Bron–Kerbosch with pivoting, run on the complement implicitly: a vertex's
/// "neighbours" are the vertices it is not adjacent to.
struct Enumerator<'a> {
    g: &'a Graph,
    cap: usize,
    found: Vec<VertexSet>,
    overflow: bool,
}

impl Enumerator<'_> {
    fn expand(&mut self, chosen: &mut Vec<usize>, candidates: FixedBitSet, excluded: FixedBitSet) {
        if self.overflow {
            return;
        }
        if candidates.is_clear() {
            if excluded.is_clear() {
                if self.found.len() == self.cap {
                    self.overflow = true;
                } else {
                    self.found.push(chosen.clone().into());
                }
            }
            return;
        }

        // Pivot maximising |candidates \ N[u]|; only members of N[u] need branching.
        let pivot = candidates
            .ones()
            .chain(excluded.ones())
            .max_by_key(|&u| {
                let mut rest = candidates.clone();
                rest.difference_with(self.g.neighbor_bits(u));
                rest.set(u, false);
                rest.count_ones(..)
            })
            .expect("candidates nonempty");
        let mut branch = candidates.clone();
        let mut closed = self.g.neighbor_bits(pivot).clone();
        closed.insert(pivot);
        branch.intersect_with(&closed);

        let mut candidates = candidates;
        let mut excluded = excluded;
        for v in branch.ones() {
            let mut closed_v = self.g.neighbor_bits(v).clone();
            closed_v.insert(v);
            let mut next_candidates = candidates.clone();
            next_candidates.difference_with(&closed_v);
            let mut next_excluded = excluded.clone();
            next_excluded.difference_with(&closed_v);

            chosen.push(v);
            self.expand(chosen, next_candidates, next_excluded);
            chosen.pop();
            if self.overflow {
                return;
            }
            candidates.set(v, false);
            excluded.insert(v);
        }
    }
}

pub fn enumerate_mis(g: &Graph, cap: usize) -> MisList {
    assert!(cap >= 1, "enumeration cap must be positive");
    let mut e = Enumerator {
        g,
        cap,
        found: Vec::new(),
        overflow: false,
    };
    let mut chosen = Vec::new();
    e.expand(&mut chosen, g.full_set(), FixedBitSet::with_capacity(g.n()));
    let mut sets = e.found;
    sets.sort();
    MisList {
        sets,
        complete: !e.overflow,
    }
}

/// All maximal independent sets, or `CapExceeded`.
pub fn all_mis(g: &Graph, cap: usize) -> Result<Vec<VertexSet>> {
    let list = enumerate_mis(g, cap);
    if list.complete {
        Ok(list.sets)
    } else {
        Err(Error::CapExceeded { cap })
    }
}

/// A smallest and a largest maximal independent set when their sizes differ,
/// `None` when the graph is well-covered.
pub fn size_witness(g: &Graph, cap: usize) -> Result<Option<(VertexSet, VertexSet)>> {
    let sets = all_mis(g, cap)?;
    let smallest = sets.iter().min_by_key(|s| s.len());
    let largest = sets.iter().max_by_key(|s| s.len());
    Ok(match (smallest, largest) {
        (Some(a), Some(b)) if a.len() != b.len() => Some((a.clone(), b.clone())),
        _ => None,
    })
}

pub fn is_well_covered_bruteforce(g: &Graph, cap: usize) -> Result<bool> {
    Ok(size_witness(g, cap)?.is_none())
}

pub fn is_independent(g: &Graph, s: &VertexSet) -> bool {
    s.iter().all(|u| s.iter().all(|v| !g.has_edge(u, v)))
}

/// Independent, and every vertex outside has a neighbour inside.
pub fn is_maximal_independent(g: &Graph, s: &VertexSet) -> bool {
    is_independent(g, s)
        && (0..g.n())
            .filter(|&v| !s.contains(v))
            .all(|v| s.iter().any(|u| g.has_edge(u, v)))
}
