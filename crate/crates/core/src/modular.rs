//! Modules, maximal strong modules, quotient graphs and the modular
//! decomposition tree.
//!
//! The decomposition follows the recursive definition directly. A node whose
//! graph is disconnected is split into its components (parallel), one whose
//! complement is disconnected into its co-components (series). Otherwise the
//! maximal proper modules are pairwise disjoint and strong; the one containing
//! `v` is found by growing, for each other vertex `u`, the smallest module
//! containing `{v, u}` and keeping those that stay proper.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Leaf,
    Parallel,
    Series,
    Prime,
}

impl NodeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            NodeKind::Leaf => "leaf",
            NodeKind::Parallel => "parallel",
            NodeKind::Series => "series",
            NodeKind::Prime => "prime",
        }
    }
}

/// A node of the modular decomposition tree.
///
/// Internal nodes carry the quotient graph over their children, with
/// `child_reps[i]` the lowest original vertex of child `i`. Children are
/// ordered by their lowest vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MdNode {
    pub kind: NodeKind,
    pub vertex: Option<usize>,
    pub children: Vec<MdNode>,
    pub quotient: Option<Graph>,
    pub child_reps: Vec<usize>,
    pub vertex_set: VertexSet,
}

impl MdNode {
    pub fn is_leaf(&self) -> bool {
        self.kind == NodeKind::Leaf
    }

    /// Pre-order traversal.
    pub fn nodes(&self) -> Vec<&MdNode> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(node) = stack.pop() {
            out.push(node);
            stack.extend(node.children.iter().rev());
        }
        out
    }

    pub fn leaf_count(&self) -> usize {
        self.nodes().iter().filter(|n| n.is_leaf()).count()
    }

    pub fn internal_count(&self) -> usize {
        self.nodes().iter().filter(|n| !n.is_leaf()).count()
    }

    pub fn tree_edge_count(&self) -> usize {
        self.nodes().len() - 1
    }

    fn write_indented(&self, f: &mut fmt::Formatter<'_>, depth: usize) -> fmt::Result {
        let pad = "  ".repeat(depth);
        match self.vertex {
            Some(v) => writeln!(f, "{pad}leaf v_{}", v + 1)?,
            None => {
                let q = self
                    .quotient
                    .as_ref()
                    .expect("internal node has a quotient");
                let edges: Vec<String> = q
                    .edges()
                    .iter()
                    .map(|(a, b)| format!("{}-{}", a + 1, b + 1))
                    .collect();
                writeln!(
                    f,
                    "{pad}{} {} quotient[{}]",
                    self.kind.as_str(),
                    self.vertex_set,
                    edges.join(" ")
                )?;
                for child in &self.children {
                    child.write_indented(f, depth + 1)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for MdNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_indented(f, 0)
    }
}

fn check_set(g: &Graph, m: &VertexSet) -> Result<()> {
    match m.iter().find(|&v| v >= g.n()) {
        Some(v) => Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        }),
        None => Ok(()),
    }
}

/// Whether `z` sees some but not all of `m`.
fn splits(g: &Graph, z: usize, m: &FixedBitSet, m_size: usize) -> bool {
    let seen = g.neighbor_bits(z).intersection_count(m);
    seen > 0 && seen < m_size
}

pub fn is_module(g: &Graph, m: &VertexSet) -> Result<bool> {
    if m.is_empty() {
        return Err(Error::EmptyModule);
    }
    check_set(g, m)?;
    let bits = m.to_bits(g.n());
    Ok((0..g.n())
        .filter(|&z| !bits.contains(z))
        .all(|z| !splits(g, z, &bits, m.len())))
}

/// Smallest module of `G[within]` containing `seed`.
fn module_closure(g: &Graph, within: &FixedBitSet, seed: FixedBitSet) -> FixedBitSet {
    let mut m = seed;
    let mut size = m.count_ones(..);
    loop {
        let mut outside = within.clone();
        outside.difference_with(&m);
        let splitters: Vec<usize> = outside.ones().filter(|&z| splits(g, z, &m, size)).collect();
        if splitters.is_empty() {
            return m;
        }
        for z in splitters {
            m.insert(z);
        }
        size = m.count_ones(..);
    }
}

/// Maximal proper modules of `G[within]`, assuming it is connected and
/// co-connected with at least two vertices.
fn prime_blocks(g: &Graph, within: &FixedBitSet) -> Vec<FixedBitSet> {
    let n = g.n();
    let total = within.count_ones(..);
    let mut unassigned = within.clone();
    let mut blocks = Vec::new();
    while let Some(v) = unassigned.ones().next() {
        let mut block = FixedBitSet::with_capacity(n);
        block.insert(v);
        let others: Vec<usize> = unassigned.ones().filter(|&u| u != v).collect();
        for u in others {
            if block.contains(u) {
                continue;
            }
            let mut seed = FixedBitSet::with_capacity(n);
            seed.insert(v);
            seed.insert(u);
            let closure = module_closure(g, within, seed);
            if closure.count_ones(..) < total {
                block.union_with(&closure);
            }
        }
        unassigned.difference_with(&block);
        blocks.push(block);
    }
    blocks.sort_by_key(|b| b.minimum());
    blocks
}

/// Node type and maximal strong modules of `G[within]`, `|within| >= 2`.
fn split_node(g: &Graph, within: &FixedBitSet) -> (NodeKind, Vec<FixedBitSet>) {
    let parts = g.components_within(within, false);
    if parts.len() > 1 {
        return (NodeKind::Parallel, parts);
    }
    let parts = g.components_within(within, true);
    if parts.len() > 1 {
        return (NodeKind::Series, parts);
    }
    (NodeKind::Prime, prime_blocks(g, within))
}

pub fn maximal_strong_modules(g: &Graph) -> Result<Vec<VertexSet>> {
    if g.n() < 2 {
        return Err(Error::TooFewVertices {
            needed: 2,
            n: g.n(),
        });
    }
    let (_, blocks) = split_node(g, &g.full_set());
    Ok(blocks.iter().map(VertexSet::from_bits).collect())
}

fn check_partition(n: usize, blocks: &[VertexSet]) -> Result<()> {
    let mut seen = vec![false; n];
    for (i, block) in blocks.iter().enumerate() {
        if block.is_empty() {
            return Err(Error::NotAPartition(format!("block {i} is empty")));
        }
        for v in block.iter() {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAPartition(format!("vertex {v} appears twice")));
            }
        }
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        return Err(Error::NotAPartition(format!("vertex {v} is not covered")));
    }
    Ok(())
}

/// Quotient of `g` by a partition into modules, realised as the subgraph
/// induced by the lowest vertex of every block.
pub fn quotient(g: &Graph, partition: &[VertexSet]) -> Result<(Graph, Vec<usize>)> {
    check_partition(g.n(), partition)?;
    for (i, block) in partition.iter().enumerate() {
        if !is_module(g, block)? {
            return Err(Error::NotAModule(i));
        }
    }
    let reps: Vec<usize> = partition.iter().map(|b| b.as_slice()[0]).collect();
    let (q, _) = g.induced_unchecked(&reps);
    Ok((q, reps))
}

/// Connected, co-connected, and every maximal strong module a singleton.
/// The one-vertex graph is not prime.
pub fn is_prime(g: &Graph) -> bool {
    if g.n() < 2 {
        return false;
    }
    let (kind, blocks) = split_node(g, &g.full_set());
    kind == NodeKind::Prime && blocks.len() == g.n()
}

pub fn md_tree(g: &Graph) -> Result<MdNode> {
    if g.n() == 0 {
        return Err(Error::TooFewVertices { needed: 1, n: 0 });
    }
    Ok(build_node(g, g.full_set()))
}

fn build_node(g: &Graph, within: FixedBitSet) -> MdNode {
    let vertex_set = VertexSet::from_bits(&within);
    if vertex_set.len() == 1 {
        let v = vertex_set.as_slice()[0];
        return MdNode {
            kind: NodeKind::Leaf,
            vertex: Some(v),
            children: Vec::new(),
            quotient: None,
            child_reps: Vec::new(),
            vertex_set,
        };
    }
    let (kind, blocks) = split_node(g, &within);
    let child_reps: Vec<usize> = blocks
        .iter()
        .map(|b| b.minimum().expect("blocks are nonempty"))
        .collect();
    let (quotient, _) = g.induced_unchecked(&child_reps);
    let children = blocks.into_iter().map(|b| build_node(g, b)).collect();
    MdNode {
        kind,
        vertex: None,
        children,
        quotient: Some(quotient),
        child_reps,
        vertex_set,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.to_vec().into()
    }

    #[test]
    fn module_checks() {
        let p4 = Graph::path(4);
        assert!(is_module(&p4, &set(&[0, 1, 2, 3])).unwrap());
        assert!(is_module(&p4, &set(&[2])).unwrap());
        assert!(!is_module(&p4, &set(&[1, 2])).unwrap());
        assert_eq!(is_module(&p4, &VertexSet::new()), Err(Error::EmptyModule));

        let k23 = Graph::complete_bipartite(2, 3);
        assert!(is_module(&k23, &set(&[0, 1])).unwrap());
        assert!(is_module(&k23, &set(&[2, 3, 4])).unwrap());
        assert!(is_module(&k23, &set(&[3, 4])).unwrap());
    }

    #[test]
    fn strong_module_examples() {
        let singletons = |n: usize| (0..n).map(|v| set(&[v])).collect::<Vec<_>>();
        assert_eq!(
            maximal_strong_modules(&Graph::empty(3)).unwrap(),
            singletons(3)
        );
        assert_eq!(
            maximal_strong_modules(&Graph::path(4)).unwrap(),
            singletons(4)
        );
        assert_eq!(
            maximal_strong_modules(&Graph::bull()).unwrap(),
            singletons(5)
        );
        assert!(maximal_strong_modules(&Graph::empty(1)).is_err());
    }

    #[test]
    fn nontrivial_prime_blocks() {
        // P4 with its second vertex replaced by the independent pair {1, 4}.
        let g = Graph::from_edges(5, &[(0, 1), (0, 4), (1, 2), (4, 2), (2, 3)]).unwrap();
        assert_eq!(
            maximal_strong_modules(&g).unwrap(),
            vec![set(&[0]), set(&[1, 4]), set(&[2]), set(&[3])]
        );
        let tree = md_tree(&g).unwrap();
        assert_eq!(tree.kind, NodeKind::Prime);
        assert_eq!(tree.quotient.as_ref().unwrap(), &Graph::path(4));
        assert_eq!(tree.children[1].kind, NodeKind::Parallel);
    }

    #[test]
    fn quotient_examples() {
        let k23 = Graph::complete_bipartite(2, 3);
        let (q, reps) = quotient(&k23, &[set(&[0, 1]), set(&[2, 3, 4])]).unwrap();
        assert_eq!(q, Graph::complete(2));
        assert_eq!(reps, vec![0, 2]);

        let bull = Graph::bull();
        let all: Vec<_> = (0..5).map(|v| set(&[v])).collect();
        assert_eq!(quotient(&bull, &all).unwrap().0, bull);

        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let (q, _) = quotient(&two_k2, &[set(&[0, 1]), set(&[2, 3])]).unwrap();
        assert_eq!(q, Graph::empty(2));

        let p4 = Graph::path(4);
        assert_eq!(
            quotient(&p4, &[set(&[0]), set(&[1, 2]), set(&[3])]),
            Err(Error::NotAModule(1))
        );
        assert!(matches!(
            quotient(&p4, &[set(&[0, 1]), set(&[1, 2, 3])]),
            Err(Error::NotAPartition(_))
        ));
    }

    #[test]
    fn primality() {
        assert!(is_prime(&Graph::path(4)));
        assert!(is_prime(&Graph::bull()));
        assert!(!is_prime(&Graph::cycle(4)));
        assert!(!is_prime(&Graph::empty(1)));
        assert!(!is_prime(&Graph::complete(2)));
        assert!(!is_prime(&Graph::empty(2)));
        assert!(is_prime(&Graph::cycle(5)));
    }

    #[test]
    fn tree_examples() {
        let leaf = md_tree(&Graph::empty(1)).unwrap();
        assert!(leaf.is_leaf());
        assert_eq!(leaf.vertex, Some(0));

        let k3 = md_tree(&Graph::complete(3)).unwrap();
        assert_eq!(k3.kind, NodeKind::Series);
        assert_eq!(k3.children.len(), 3);
        assert!(k3.children.iter().all(MdNode::is_leaf));
        assert_eq!(k3.quotient.as_ref().unwrap(), &Graph::complete(3));

        let bull = md_tree(&Graph::bull()).unwrap();
        assert_eq!(bull.kind, NodeKind::Prime);
        assert_eq!(bull.children.len(), 5);
        assert_eq!(bull.quotient.as_ref().unwrap(), &Graph::bull());

        assert!(md_tree(&Graph::empty(0)).is_err());
    }

    #[test]
    fn text_dump() {
        let tree = md_tree(&Graph::cycle(4)).unwrap();
        let text = tree.to_string();
        assert_eq!(
            text,
            "series {v_1, v_2, v_3, v_4} quotient[1-2]\n\
             \x20 parallel {v_1, v_3} quotient[]\n\
             \x20   leaf v_1\n\
             \x20   leaf v_3\n\
             \x20 parallel {v_2, v_4} quotient[]\n\
             \x20   leaf v_2\n\
             \x20   leaf v_4\n"
        );
    }
}
