//! Random graph families used by the property and acceptance tests.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;
use crate::modular;

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Random labelled tree: each vertex after the first attaches to a uniformly
/// chosen earlier vertex, then labels are shuffled.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let mut g = Graph::empty(n);
    for v in 1..n {
        let parent = rng.gen_range(0..v);
        g.add_edge(labels[v], labels[parent]);
    }
    g
}

/// Random cograph on exactly `n >= 1` vertices, built from a random cotree
/// whose internal nodes have two to four children.
pub fn random_cograph<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 1, "a cograph needs at least one vertex");
    let g = cotree(n, rng);
    relabel(&g, rng)
}

fn cotree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    if n == 1 {
        return Graph::empty(1);
    }
    let parts = rng.gen_range(2..=n.min(4));
    // Random composition of n into `parts` positive sizes.
    let mut cuts: Vec<usize> = (1..n).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts[..parts - 1].to_vec();
    cuts.sort_unstable();
    cuts.push(n);
    let mut prev = 0;
    let join = rng.gen_bool(0.5);
    let mut g = Graph::empty(0);
    for cut in cuts {
        let child = cotree(cut - prev, rng);
        g = if join {
            g.join(&child)
        } else {
            g.disjoint_union(&child)
        };
        prev = cut;
    }
    g
}

/// Applies a uniformly random vertex permutation.
pub fn relabel<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    let mut out = Graph::empty(g.n());
    for (u, v) in g.edges() {
        out.add_edge(perm[u], perm[v]);
    }
    out
}

/// Replaces vertex `v` of `g` by a copy of `h`; every vertex of the copy
/// inherits `v`'s neighbours. The copy takes `v`'s index and the indices
/// `g.n()..` for its remaining vertices.
pub fn substitute(g: &Graph, v: usize, h: &Graph) -> Graph {
    let n = g.n();
    let k = h.n();
    assert!(k >= 1, "cannot substitute an empty graph");
    let copy: Vec<usize> = std::iter::once(v).chain(n..n + k - 1).collect();
    let mut out = Graph::empty(n + k - 1);
    for (a, b) in g.edges() {
        out.add_edge(a, b);
    }
    for &c in &copy[1..] {
        for u in g.neighbors(v) {
            out.add_edge(c, u);
        }
    }
    for (a, b) in h.edges() {
        out.add_edge(copy[a], copy[b]);
    }
    out
}

/// Random prime claw-free graph on `n >= 4` vertices, by rejection.
pub fn random_prime_claw_free<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 4, "prime graphs have at least four vertices");
    loop {
        let p = rng.gen_range(0.3..0.7);
        let g = random_graph(n, p, rng);
        if g.is_claw_free() && modular::is_prime(&g) {
            return g;
        }
    }
}

/// Random fork-free graph on at most `max_n >= 4` vertices: a prime
/// claw-free seed with random cographs substituted into some of its vertices,
/// kept only when the result is fork-free.
pub fn random_forkfree<R: Rng + ?Sized>(max_n: usize, rng: &mut R) -> Graph {
    assert!(max_n >= 4, "seeds need at least four vertices");
    loop {
        let seed_n = rng.gen_range(4..=max_n.min(7));
        let mut g = random_prime_claw_free(seed_n, rng);
        for v in 0..seed_n {
            let room = max_n - g.n();
            if room == 0 || rng.gen_bool(0.5) {
                continue;
            }
            let size = rng.gen_range(2..=(room + 1).min(4));
            let h = random_cograph(size, rng);
            g = substitute(&g, v, &h);
        }
        if g.is_fork_free() {
            return relabel(&g, rng);
        }
    }
}

/// Random graph on `n` vertices with a nontrivial module partition: a random
/// skeleton with random graphs substituted into its vertices.
pub fn random_modular<R: Rng + ?Sized>(skeleton_n: usize, max_module: usize, rng: &mut R) -> Graph {
    let mut g = random_graph(skeleton_n, 0.5, rng);
    for v in 0..skeleton_n {
        let size = rng.gen_range(1..=max_module);
        if size > 1 {
            let h = random_graph(size, 0.5, rng);
            g = substitute(&g, v, &h);
        }
    }
    g
}
