//! Well-covering systems: linear systems whose solution space is exactly the
//! space of weightings under which all maximal independent sets weigh the same.
//!
//! Besides the brute-force construction from an explicit list of maximal
//! independent sets, systems are assembled compositionally:
//!
//! * a disconnected graph takes the union of its components' systems;
//! * a join additionally equates one maximal independent set per co-component;
//! * a graph partitioned into modules combines the modules' systems with the
//!   quotient's system, each quotient variable replaced by the sum over a
//!   maximal independent set of its module;
//! * any graph combines the systems of its anti-neighbourhoods `G - N[v]`
//!   with a chain equating `I_v ∪ {v}` across vertices.
//!
//! Walking the modular decomposition tree with these rules, and reducing to a
//! linearly independent subsystem at series and prime nodes, keeps every
//! intermediate system at no more rows than vertices.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::linalg::{Equation, LinearSystem, Rational, WeightVector};
use crate::mis::{self, DEFAULT_MIS_CAP};
use crate::modular::{self, MdNode, NodeKind};

/// Solver for the prime graphs at the bottom of the reductions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BaseSolver {
    /// Enumerate maximal independent sets.
    #[default]
    Bruteforce,
    /// Claw-free slot: rejects graphs with an induced claw, then enumerates.
    ClawFree,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    #[default]
    Auto,
    Bruteforce,
    Cograph,
    Modular,
    ForkFree,
}

impl Strategy {
    pub fn as_str(self) -> &'static str {
        match self {
            Strategy::Auto => "auto",
            Strategy::Bruteforce => "bruteforce",
            Strategy::Cograph => "cograph",
            Strategy::Modular => "modular",
            Strategy::ForkFree => "forkfree",
        }
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "auto" => Ok(Strategy::Auto),
            "bruteforce" => Ok(Strategy::Bruteforce),
            "cograph" => Ok(Strategy::Cograph),
            "modular" => Ok(Strategy::Modular),
            "forkfree" | "fork-free" => Ok(Strategy::ForkFree),
            other => Err(format!("unknown strategy `{other}`")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    pub base_solver: BaseSolver,
    pub mis_cap: usize,
    pub strategy: Strategy,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            base_solver: BaseSolver::Bruteforce,
            mis_cap: DEFAULT_MIS_CAP,
            strategy: Strategy::Auto,
        }
    }
}

impl SolverConfig {
    pub fn with_strategy(strategy: Strategy) -> Self {
        SolverConfig {
            strategy,
            ..SolverConfig::default()
        }
    }
}

impl BaseSolver {
    pub fn solve(self, g: &Graph, cap: usize) -> Result<LinearSystem> {
        if self == BaseSolver::ClawFree && !g.is_claw_free() {
            return Err(Error::StrategyInapplicable {
                strategy: "claw-free base solver",
                reason: "graph contains an induced claw".into(),
            });
        }
        bruteforce_system(g, cap)
    }
}

/// A well-covering system together with one maximal independent set of the
/// same graph, both over the graph's own vertex indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduced {
    pub system: LinearSystem,
    pub mis: VertexSet,
}

/// Consecutive differences `w(I_i) - w(I_{i+1}) = 0` over all maximal
/// independent sets in canonical order.
pub fn bruteforce_system(g: &Graph, cap: usize) -> Result<LinearSystem> {
    let sets = mis::all_mis(g, cap)?;
    let rows = sets
        .windows(2)
        .enumerate()
        .map(|(i, pair)| {
            Equation::set_difference(&pair[0], &pair[1], format!("mis I_{} - I_{}", i + 1, i + 2))
        })
        .collect();
    LinearSystem::from_rows(g.n(), rows)
}

fn check_map(map: &[usize], host_n: usize, used: &mut [bool]) -> Result<()> {
    for &v in map {
        if v >= host_n {
            return Err(Error::InvalidVertexMap(format!(
                "index {v} out of range for {host_n} host variables"
            )));
        }
        if std::mem::replace(&mut used[v], true) {
            return Err(Error::InvalidVertexMap(format!(
                "host index {v} used twice"
            )));
        }
    }
    Ok(())
}

fn check_covers(used: &[bool]) -> Result<()> {
    match used.iter().position(|&u| !u) {
        Some(v) => Err(Error::InvalidVertexMap(format!(
            "host index {v} not covered"
        ))),
        None => Ok(()),
    }
}

/// Re-indexes a system of an induced subgraph into host variables.
pub fn lift_subgraph_system(
    sub: &LinearSystem,
    vertex_map: &[usize],
    host_n: usize,
) -> Result<LinearSystem> {
    if sub.num_vars() != vertex_map.len() {
        return Err(Error::DimensionMismatch {
            expected: vertex_map.len(),
            found: sub.num_vars(),
        });
    }
    check_map(vertex_map, host_n, &mut vec![false; host_n])?;
    let rows = sub.rows().iter().map(|r| r.remapped(vertex_map)).collect();
    LinearSystem::from_rows(host_n, rows)
}

/// Union of the components' systems, each given over its own component.
pub fn combine_disjoint_union(
    parts: &[(LinearSystem, Vec<usize>)],
    host_n: usize,
) -> Result<LinearSystem> {
    let mut used = vec![false; host_n];
    let mut out = LinearSystem::new(host_n);
    for (system, map) in parts {
        check_map(map, host_n, &mut used)?;
        out.extend(lift_subgraph_system(system, map, host_n)?)?;
    }
    check_covers(&used)?;
    Ok(out)
}

/// One co-component of a join: its system over local indices, the local to
/// host map, and a maximal independent set of the co-component in host indices.
#[derive(Clone, Debug)]
pub struct JoinPart {
    pub system: LinearSystem,
    pub vertex_map: Vec<usize>,
    pub mis: VertexSet,
}

/// Union of the co-components' systems plus a chain equating their chosen
/// maximal independent sets.
pub fn combine_join(host: &Graph, parts: &[JoinPart]) -> Result<LinearSystem> {
    let host_n = host.n();
    if parts.len() < 2 {
        return Err(Error::InvalidVertexMap(format!(
            "a join needs at least two parts, got {}",
            parts.len()
        )));
    }
    let mut used = vec![false; host_n];
    let mut out = LinearSystem::new(host_n);
    for part in parts {
        check_map(&part.vertex_map, host_n, &mut used)?;
        let members: VertexSet = part.vertex_map.iter().copied().collect();
        let (local, _) = host.induced_unchecked(members.as_slice());
        let in_part = part.mis.iter().all(|v| members.contains(v));
        let local_mis: VertexSet = part
            .mis
            .iter()
            .filter_map(|v| members.as_slice().binary_search(&v).ok())
            .collect();
        if !in_part || !mis::is_maximal_independent(&local, &local_mis) {
            return Err(Error::NotMaximalIndependent(part.mis.to_string()));
        }
        out.extend(lift_subgraph_system(
            &part.system,
            &part.vertex_map,
            host_n,
        )?)?;
    }
    check_covers(&used)?;
    for (j, pair) in parts.windows(2).enumerate() {
        out.push(Equation::set_difference(
            &pair[0].mis,
            &pair[1].mis,
            format!("join j={}", j + 1),
        ))?;
    }
    Ok(out)
}

/// Replaces every quotient variable `x_j` by `Σ_{v ∈ module_mis[j]} x_v`.
pub fn lift_quotient_system(
    quotient_sys: &LinearSystem,
    module_mis: &[VertexSet],
    host_n: usize,
) -> Result<LinearSystem> {
    if quotient_sys.num_vars() != module_mis.len() {
        return Err(Error::DimensionMismatch {
            expected: module_mis.len(),
            found: quotient_sys.num_vars(),
        });
    }
    let mut out = LinearSystem::new(host_n);
    for row in quotient_sys.rows() {
        let terms = row
            .terms()
            .iter()
            .flat_map(|(j, c)| module_mis[*j].iter().map(move |v| (v, c.clone())));
        out.push(Equation::from_terms(terms, row.tag.clone()))?;
    }
    Ok(out)
}

/// Solves a prime quotient graph given over its own indices.
type PrimeHandler<'a> = dyn FnMut(&Graph) -> Result<LinearSystem> + 'a;

/// Bottom-up walk of the decomposition tree in host coordinates.
struct TreeWalk<'a, 'b> {
    g: &'a Graph,
    prime: &'a mut PrimeHandler<'b>,
    /// Reduce to an independent subsystem after series and prime nodes.
    eliminate: bool,
}

impl TreeWalk<'_, '_> {
    fn reduce(&mut self, node: &MdNode) -> Result<Reduced> {
        let n = self.g.n();
        if let Some(v) = node.vertex {
            return Ok(Reduced {
                system: LinearSystem::new(n),
                mis: VertexSet::from([v]),
            });
        }
        let children = node
            .children
            .iter()
            .map(|c| self.reduce(c))
            .collect::<Result<Vec<_>>>()?;
        let label = node.vertex_set.as_slice()[0] + 1;

        let mut system = LinearSystem::new(n);
        let mis = match node.kind {
            NodeKind::Parallel => {
                let mut mis = VertexSet::new();
                for child in children {
                    system.extend(child.system)?;
                    mis = mis.union(&child.mis);
                }
                return Ok(Reduced { system, mis });
            }
            NodeKind::Series => {
                for (j, pair) in children.windows(2).enumerate() {
                    system.push(Equation::set_difference(
                        &pair[0].mis,
                        &pair[1].mis,
                        format!("series@v_{label} j={}", j + 1),
                    ))?;
                }
                let mis = children[0].mis.clone();
                for child in children {
                    system.extend(child.system)?;
                }
                mis
            }
            NodeKind::Prime => {
                let quotient = node
                    .quotient
                    .as_ref()
                    .expect("internal node has a quotient");
                let quotient_sys = (self.prime)(quotient)?;
                let module_mis: Vec<VertexSet> = children.iter().map(|c| c.mis.clone()).collect();
                let lifted = lift_quotient_system(&quotient_sys, &module_mis, n)?;
                for row in lifted.into_rows() {
                    let tag = format!("prime@v_{label} {}", row.tag);
                    system.push(row.with_tag(tag))?;
                }
                let quotient_mis = mis::first_mis(quotient);
                let mut mis = VertexSet::new();
                for j in quotient_mis.iter() {
                    mis = mis.union(&module_mis[j]);
                }
                for child in children {
                    system.extend(child.system)?;
                }
                mis
            }
            NodeKind::Leaf => unreachable!("leaves handled above"),
        };
        if self.eliminate {
            system = system.extract_independent();
        }
        Ok(Reduced { system, mis })
    }
}

fn walk(g: &Graph, prime: &mut PrimeHandler<'_>, eliminate: bool) -> Result<Reduced> {
    if g.n() == 0 {
        return Ok(Reduced {
            system: LinearSystem::new(0),
            mis: VertexSet::new(),
        });
    }
    let tree = modular::md_tree(g)?;
    TreeWalk {
        g,
        prime,
        eliminate,
    }
    .reduce(&tree)
}

/// Modular-decomposition pipeline with an arbitrary solver for prime nodes.
/// Series and prime nodes are reduced to independent subsystems, so the
/// result has at most `n` rows whenever the prime solver's systems are valid.
pub fn modular_reduction(g: &Graph, prime: &mut PrimeHandler<'_>) -> Result<Reduced> {
    walk(g, prime, true)
}

/// Modular pipeline with the configured base solver at prime nodes.
pub fn modular_system(g: &Graph, cfg: &SolverConfig) -> Result<LinearSystem> {
    let mut base = |h: &Graph| cfg.base_solver.solve(h, cfg.mis_cap);
    Ok(modular_reduction(g, &mut base)?.system)
}

/// Cotree walk without elimination; at most `n - 1` unit rows for `n >= 1`.
pub fn cograph_reduction(g: &Graph) -> Result<Reduced> {
    let mut reject = |_: &Graph| -> Result<LinearSystem> {
        Err(Error::StrategyInapplicable {
            strategy: "cograph",
            reason:
                "graph has a prime node, so it contains an induced P4; use the modular strategy"
                    .into(),
        })
    };
    walk(g, &mut reject, false)
}

pub fn cograph_system(g: &Graph) -> Result<LinearSystem> {
    Ok(cograph_reduction(g)?.system)
}

/// Combines well-covering systems of every anti-neighbourhood `G - N[v]`
/// (computed by `sub_solver` over the subgraph's own indices) with the chain
/// `w(I_j ∪ {v_j}) = w(I_{j+1} ∪ {v_{j+1}})`.
pub fn anti_neighborhood_system(
    g: &Graph,
    sub_solver: &mut dyn FnMut(&Graph) -> Result<LinearSystem>,
) -> Result<LinearSystem> {
    let n = g.n();
    let mut system = LinearSystem::new(n);
    let mut anchors = Vec::with_capacity(n);
    for v in 0..n {
        let (sub, map) = g.delete_closed_neighborhood(v)?;
        let sub_sys = sub_solver(&sub)?;
        for row in lift_subgraph_system(&sub_sys, &map, n)?.into_rows() {
            let tag = format!("anti@v_{} {}", v + 1, row.tag);
            system.push(row.with_tag(tag))?;
        }
        let mut anchor: Vec<usize> = mis::first_mis(&sub).iter().map(|i| map[i]).collect();
        anchor.push(v);
        anchors.push(VertexSet::from(anchor));
    }
    for (j, pair) in anchors.windows(2).enumerate() {
        system.push(Equation::set_difference(
            &pair[0],
            &pair[1],
            format!("anti-chain v_{} - v_{}", j + 1, j + 2),
        ))?;
    }
    Ok(system)
}

/// Unit, linearly independent well-covering system of a fork-free graph with
/// at most `n` rows.
///
/// Prime nodes of the decomposition are handled through their
/// anti-neighbourhoods, each of which is decomposed again; the primes found
/// there are claw-free and go to the configured base solver.
pub fn forkfree_system(g: &Graph, cfg: &SolverConfig) -> Result<LinearSystem> {
    if !g.is_fork_free() {
        return Err(Error::StrategyInapplicable {
            strategy: "forkfree",
            reason: "graph contains an induced fork".into(),
        });
    }
    let mut base = |h: &Graph| cfg.base_solver.solve(h, cfg.mis_cap);
    let mut prime = |h: &Graph| -> Result<LinearSystem> {
        let mut sub = |s: &Graph| Ok(modular_reduction(s, &mut base)?.system);
        Ok(anti_neighborhood_system(h, &mut sub)?.extract_independent())
    };
    Ok(modular_reduction(g, &mut prime)?.system)
}

/// Which construction `Strategy::Auto` picks for `g`.
pub fn resolve_strategy(g: &Graph, strategy: Strategy) -> Strategy {
    match strategy {
        Strategy::Auto if g.is_p4_free() => Strategy::Cograph,
        Strategy::Auto if g.is_fork_free() => Strategy::ForkFree,
        Strategy::Auto => Strategy::Bruteforce,
        other => other,
    }
}

/// A well-covering system of `g` under the configured strategy, and the
/// strategy actually used.
pub fn solve(g: &Graph, cfg: &SolverConfig) -> Result<(LinearSystem, Strategy)> {
    let strategy = resolve_strategy(g, cfg.strategy);
    let system = match strategy {
        Strategy::Bruteforce => bruteforce_system(g, cfg.mis_cap)?,
        Strategy::Cograph => {
            if !g.is_p4_free() {
                return Err(Error::StrategyInapplicable {
                    strategy: "cograph",
                    reason: "graph contains an induced P4; use the modular strategy".into(),
                });
            }
            cograph_system(g)?
        }
        Strategy::Modular => modular_system(g, cfg)?,
        Strategy::ForkFree => forkfree_system(g, cfg)?,
        Strategy::Auto => unreachable!("resolved above"),
    };
    Ok((system, strategy))
}

pub fn well_covered_dimension(g: &Graph, cfg: &SolverConfig) -> Result<usize> {
    let (system, _) = solve(g, cfg)?;
    Ok(g.n() - system.rank())
}

pub fn is_w_well_covered(g: &Graph, w: &WeightVector, cfg: &SolverConfig) -> Result<bool> {
    if w.len() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            found: w.len(),
        });
    }
    let (system, _) = solve(g, cfg)?;
    system.satisfied_by(w)
}

pub fn is_well_covered(g: &Graph, cfg: &SolverConfig) -> Result<bool> {
    is_w_well_covered(g, &WeightVector::ones(g.n()), cfg)
}

/// Total weight of every maximal independent set; used for witnesses.
pub fn mis_weights(g: &Graph, w: &WeightVector, cap: usize) -> Result<Vec<(VertexSet, Rational)>> {
    Ok(mis::all_mis(g, cap)?
        .into_iter()
        .map(|s| {
            let weight = w.weight_of(&s);
            (s, weight)
        })
        .collect())
}
