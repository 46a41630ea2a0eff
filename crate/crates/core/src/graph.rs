//! Simple undirected graphs over dense vertex indices `0..n`.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A set of vertices of some host graph, kept sorted and free of duplicates.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn from_bits(bits: &FixedBitSet) -> Self {
        VertexSet(bits.ones().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn to_bits(&self, n: usize) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(n);
        for &v in &self.0 {
            bits.insert(v);
        }
        bits
    }

    /// Applies `map` to every member.
    pub fn mapped(&self, map: &[usize]) -> VertexSet {
        self.0.iter().map(|&v| map[v]).collect()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.0.iter().chain(other.0.iter()).copied().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut members: Vec<usize> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(members: Vec<usize>) -> Self {
        members.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(members: [usize; N]) -> Self {
        members.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    /// Prints 1-indexed vertex names, e.g. `{v_1, v_4}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "v_{}", v + 1)?;
        }
        write!(f, "}}")
    }
}

/// Simple undirected graph with bitset adjacency rows.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(Error::VertexOutOfRange {
                vertex: u.max(v),
                n,
            });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.add_edge(u, v);
        Ok(())
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            g.adj[u].insert_range(..);
            g.adj[u].set(u, false);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// Cycle `0-1-…-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0);
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// P5 `v1..v5` plus the chord `v2v4`, 0-indexed.
    pub fn bull() -> Self {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)]).unwrap()
    }

    /// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i - i+5`.
    pub fn petersen() -> Self {
        let mut g = Graph::empty(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
            g.add_edge(i, i + 5);
        }
        g
    }

    pub fn claw() -> Self {
        Graph::complete_bipartite(1, 3)
    }

    /// Claw with one edge subdivided: centre 0, leaves 1, 2, 3, and 4 hanging off 3.
    pub fn fork() -> Self {
        Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap()
    }

    /// Vertex-disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.n();
        let mut g = Graph::empty(offset + other.n());
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + offset, v + offset);
        }
        g
    }

    /// Join: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let offset = self.n();
        let mut g = self.disjoint_union(other);
        for u in 0..offset {
            for v in offset..g.n() {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones(..)).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn neighbor_bits(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in self.adj[u].ones().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut adj = Vec::with_capacity(n);
        for (v, row) in self.adj.iter().enumerate() {
            let mut c = row.clone();
            c.toggle_range(..);
            c.set(v, false);
            adj.push(c);
        }
        Graph { adj }
    }

    pub(crate) fn full_set(&self) -> FixedBitSet {
        let mut all = FixedBitSet::with_capacity(self.n());
        all.insert_range(..);
        all
    }

    fn check_members(&self, s: &VertexSet) -> Result<()> {
        match s.iter().find(|&v| v >= self.n()) {
            Some(v) => Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            }),
            None => Ok(()),
        }
    }

    /// Subgraph induced by `s`, plus the old index of every new vertex.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_members(s)?;
        Ok(self.induced_unchecked(s.as_slice()))
    }

    pub(crate) fn induced_unchecked(&self, members: &[usize]) -> (Graph, Vec<usize>) {
        let k = members.len();
        let mut g = Graph::empty(k);
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.adj[u].contains(v) {
                    g.add_edge(i, j);
                }
            }
        }
        (g, members.to_vec())
    }

    /// The anti-neighbourhood `G - N[v]`.
    pub fn delete_closed_neighborhood(&self, v: usize) -> Result<(Graph, Vec<usize>)> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            });
        }
        let mut keep = self.adj[v].clone();
        keep.insert(v);
        keep.toggle_range(..);
        let members: Vec<usize> = keep.ones().collect();
        Ok(self.induced_unchecked(&members))
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(&self.full_set(), false)
            .iter()
            .map(VertexSet::from_bits)
            .collect()
    }

    pub fn co_components(&self) -> Vec<VertexSet> {
        self.components_within(&self.full_set(), true)
            .iter()
            .map(VertexSet::from_bits)
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components_within(&self.full_set(), false).len() <= 1
    }

    pub fn is_co_connected(&self) -> bool {
        self.components_within(&self.full_set(), true).len() <= 1
    }

    /// Components of `G[within]`, or of its complement when `co` is set.
    /// Blocks come out ordered by their smallest vertex.
    pub(crate) fn components_within(&self, within: &FixedBitSet, co: bool) -> Vec<FixedBitSet> {
        let n = self.n();
        let mut unvisited = within.clone();
        let mut blocks = Vec::new();
        while let Some(start) = unvisited.ones().next() {
            let mut block = FixedBitSet::with_capacity(n);
            let mut stack = vec![start];
            unvisited.set(start, false);
            block.insert(start);
            while let Some(v) = stack.pop() {
                let mut next = unvisited.clone();
                if co {
                    next.difference_with(&self.adj[v]);
                } else {
                    next.intersect_with(&self.adj[v]);
                }
                for u in next.ones() {
                    unvisited.set(u, false);
                    block.insert(u);
                    stack.push(u);
                }
            }
            blocks.push(block);
        }
        blocks
    }

    /// Whether some vertices `a, b, c` in `candidates` are pairwise non-adjacent.
    fn has_independent_triple(&self, candidates: &FixedBitSet) -> bool {
        for a in candidates.ones() {
            let mut rest = candidates.clone();
            rest.difference_with(&self.adj[a]);
            for b in rest.ones().filter(|&b| b > a) {
                let mut third = rest.clone();
                third.difference_with(&self.adj[b]);
                if third.ones().any(|c| c > b) {
                    return true;
                }
            }
        }
        false
    }

    /// No induced `K_{1,3}`.
    pub fn is_claw_free(&self) -> bool {
        (0..self.n()).all(|c| !self.has_independent_triple(&self.adj[c]))
    }

    /// No induced fork. A fork is a claw centred at `c` with leaves `a, b, d`
    /// plus a vertex `e` adjacent to `d` alone.
    pub fn is_fork_free(&self) -> bool {
        let n = self.n();
        for c in 0..n {
            for d in self.adj[c].ones() {
                // a, b: neighbours of c outside N[d], pairwise non-adjacent.
                let mut leaves = self.adj[c].clone();
                leaves.difference_with(&self.adj[d]);
                leaves.set(d, false);
                if leaves.count_ones(..) < 2 {
                    continue;
                }
                for e in self.adj[d].ones() {
                    if e == c || self.adj[c].contains(e) {
                        continue;
                    }
                    let mut ab = leaves.clone();
                    ab.difference_with(&self.adj[e]);
                    for a in ab.ones() {
                        let mut partner = ab.clone();
                        partner.difference_with(&self.adj[a]);
                        if partner.ones().any(|b| b > a) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// No induced four-vertex path. A graph is P4-free exactly when every induced
    /// subgraph on two or more vertices is disconnected or has a disconnected
    /// complement, which is what this checks recursively.
    pub fn is_p4_free(&self) -> bool {
        let mut pending = vec![self.full_set()];
        while let Some(set) = pending.pop() {
            if set.count_ones(..) < 2 {
                continue;
            }
            let parts = self.components_within(&set, false);
            if parts.len() > 1 {
                pending.extend(parts);
                continue;
            }
            let parts = self.components_within(&set, true);
            if parts.len() > 1 {
                pending.extend(parts);
                continue;
            }
            return false;
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.to_vec().into()
    }

    #[test]
    fn complement_of_c5_is_pentagram() {
        let c = Graph::cycle(5).complement();
        for u in 0..5 {
            for v in 0..5 {
                if u == v {
                    continue;
                }
                let d = (u as i64 - v as i64).rem_euclid(5);
                assert_eq!(c.has_edge(u, v), d == 2 || d == 3);
            }
        }
        assert_eq!(c.edge_count(), 5);
        assert!(c.is_connected());
    }

    #[test]
    fn complement_basics() {
        assert_eq!(Graph::complete(3).complement(), Graph::empty(3));
        assert_eq!(Graph::empty(4).complement(), Graph::complete(4));
        assert_eq!(Graph::empty(0).complement(), Graph::empty(0));
    }

    #[test]
    fn induced_subgraph_cases() {
        let bull = Graph::bull();
        let (p3, map) = bull.induced_subgraph(&set(&[0, 1, 2])).unwrap();
        assert_eq!(p3, Graph::path(3));
        assert_eq!(map, vec![0, 1, 2]);

        let all = set(&[0, 1, 2, 3, 4]);
        let (same, map) = bull.induced_subgraph(&all).unwrap();
        assert_eq!(same, bull);
        assert_eq!(map, vec![0, 1, 2, 3, 4]);

        let (none, map) = bull.induced_subgraph(&VertexSet::new()).unwrap();
        assert_eq!(none.n(), 0);
        assert!(map.is_empty());

        assert!(matches!(
            bull.induced_subgraph(&set(&[1, 7])),
            Err(Error::VertexOutOfRange { vertex: 7, n: 5 })
        ));
    }

    #[test]
    fn components() {
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            two_k2.connected_components(),
            vec![set(&[0, 1]), set(&[2, 3])]
        );
        assert_eq!(Graph::bull().connected_components().len(), 1);
        assert_eq!(Graph::empty(3).connected_components().len(), 3);
    }

    #[test]
    fn co_components_cases() {
        assert_eq!(Graph::complete(4).co_components().len(), 4);
        assert_eq!(
            Graph::complete_bipartite(2, 3).co_components(),
            vec![set(&[0, 1]), set(&[2, 3, 4])]
        );
        assert_eq!(Graph::empty(3).co_components(), vec![set(&[0, 1, 2])]);
    }

    #[test]
    fn anti_neighborhoods() {
        let (g, map) = Graph::bull().delete_closed_neighborhood(2).unwrap();
        assert_eq!(g, Graph::empty(2));
        assert_eq!(map, vec![0, 4]);

        let (g, _) = Graph::complete(5).delete_closed_neighborhood(3).unwrap();
        assert_eq!(g.n(), 0);

        let (g, map) = Graph::empty(4).delete_closed_neighborhood(0).unwrap();
        assert_eq!(g, Graph::empty(3));
        assert_eq!(map, vec![1, 2, 3]);

        assert!(Graph::empty(2).delete_closed_neighborhood(2).is_err());
    }

    #[test]
    fn forbidden_subgraphs() {
        let claw = Graph::claw();
        assert!(!claw.is_claw_free());
        assert!(claw.is_fork_free());

        let bull = Graph::bull();
        assert!(bull.is_claw_free());
        assert!(bull.is_fork_free());
        assert!(!bull.is_p4_free());

        let p4 = Graph::path(4);
        assert!(!p4.is_p4_free());
        assert!(p4.is_claw_free());
        assert!(p4.is_fork_free());

        let fork = Graph::fork();
        assert!(!fork.is_fork_free());
        assert!(!fork.is_claw_free());

        assert!(Graph::complete_bipartite(3, 3).is_p4_free());
        assert!(Graph::cycle(4).is_p4_free());
        assert!(!Graph::cycle(5).is_p4_free());
    }

    #[test]
    fn edge_construction_errors() {
        assert!(matches!(
            Graph::from_edges(2, &[(1, 1)]),
            Err(Error::SelfLoop(1))
        ));
        assert!(matches!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
        let g = Graph::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn petersen_is_cubic() {
        let p = Graph::petersen();
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
    }

    #[test]
    fn vertex_set_display() {
        assert_eq!(set(&[3, 0]).to_string(), "{v_1, v_4}");
    }
}
