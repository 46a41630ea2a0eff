use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use wellcover::generators::{random_cograph, random_forkfree, random_graph, random_modular};
use wellcover::mis::all_mis;
use wellcover::wcs::modular_reduction;
use wellcover::{
    anti_neighborhood_system, bruteforce_system, cograph_system, forkfree_system,
    is_well_covered_bruteforce, maximal_strong_modules, modular_system, null_space_basis, quotient,
    same_solution_space, BaseSolver, Graph, LinearSystem, SolverConfig, VertexSet, DEFAULT_MIS_CAP,
};

fn brute(g: &Graph) -> LinearSystem {
    bruteforce_system(g, DEFAULT_MIS_CAP).unwrap()
}

/// Every null-space vector gives all maximal independent sets equal weight.
fn assert_weighting_sound(g: &Graph, s: &LinearSystem) {
    let sets = all_mis(g, DEFAULT_MIS_CAP).unwrap();
    for v in null_space_basis(s).vectors {
        let first = v.weight_of(&sets[0]);
        for other in &sets[1..] {
            assert_eq!(v.weight_of(other), first, "{g:?}: {v}");
        }
    }
}

#[test]
fn modular_pipeline_matches_bruteforce() {
    let mut rng = StdRng::seed_from_u64(11);
    let cfg = SolverConfig::default();
    for _ in 0..200 {
        let n = rng.gen_range(1..=9);
        let g = random_graph(n, rng.gen_range(0.1..0.9), &mut rng);
        let s = modular_system(&g, &cfg).unwrap();
        assert!(s.len() <= n);
        assert_eq!(s.len(), s.rank());
        assert!(same_solution_space(&s, &brute(&g)).unwrap(), "{g:?}");
        assert_weighting_sound(&g, &s);
    }
}

#[test]
fn modular_pipeline_on_module_rich_graphs() {
    let mut rng = StdRng::seed_from_u64(12);
    let cfg = SolverConfig::default();
    for _ in 0..100 {
        let g = random_modular(rng.gen_range(2..=5), 3, &mut rng);
        let s = modular_system(&g, &cfg).unwrap();
        assert!(s.len() <= g.n());
        assert!(same_solution_space(&s, &brute(&g)).unwrap(), "{g:?}");
    }
}

#[test]
fn anti_neighborhood_matches_bruteforce() {
    let mut rng = StdRng::seed_from_u64(13);
    let mut sub = |h: &Graph| bruteforce_system(h, DEFAULT_MIS_CAP);
    for _ in 0..200 {
        let n = rng.gen_range(1..=9);
        let g = random_graph(n, rng.gen_range(0.1..0.9), &mut rng);
        let s = anti_neighborhood_system(&g, &mut sub).unwrap();
        assert!(same_solution_space(&s, &brute(&g)).unwrap(), "{g:?}");
        assert!(s.is_unit());
    }
}

#[test]
fn cograph_and_forkfree_agree_on_cographs() {
    let mut rng = StdRng::seed_from_u64(14);
    let cfg = SolverConfig::default();
    for _ in 0..100 {
        let g = random_cograph(rng.gen_range(1..=12), &mut rng);
        let c = cograph_system(&g).unwrap();
        let f = forkfree_system(&g, &cfg).unwrap();
        assert!(c.len() < g.n().max(1));
        assert!(c.is_unit() && f.is_unit());
        assert!(same_solution_space(&c, &f).unwrap());
        assert!(g.n() - c.rank() >= 1);
    }
}

#[test]
fn forkfree_pipeline_properties() {
    let mut rng = StdRng::seed_from_u64(15);
    let cfg = SolverConfig::default();
    let checked = SolverConfig {
        base_solver: BaseSolver::ClawFree,
        ..cfg
    };
    for _ in 0..100 {
        let g = random_forkfree(10, &mut rng);
        let s = forkfree_system(&g, &cfg).unwrap();
        assert!(s.is_unit());
        assert!(s.len() <= g.n());
        assert_eq!(s.len(), s.rank());
        assert!(same_solution_space(&s, &brute(&g)).unwrap(), "{g:?}");
        assert_weighting_sound(&g, &s);
        // Primes inside anti-neighbourhoods of prime fork-free graphs are claw-free,
        // so the claw-checking base never rejects.
        let t = forkfree_system(&g, &checked).unwrap();
        assert!(same_solution_space(&s, &t).unwrap());
    }
}

#[test]
fn fork_free_random_graphs_too() {
    let mut rng = StdRng::seed_from_u64(16);
    let cfg = SolverConfig {
        base_solver: BaseSolver::ClawFree,
        ..SolverConfig::default()
    };
    let mut tested = 0;
    while tested < 150 {
        let g = random_graph(rng.gen_range(1..=10), rng.gen_range(0.2..0.8), &mut rng);
        if !g.is_fork_free() {
            continue;
        }
        tested += 1;
        let s = forkfree_system(&g, &cfg).unwrap();
        assert!(s.is_unit() && s.len() <= g.n());
        assert!(same_solution_space(&s, &brute(&g)).unwrap(), "{g:?}");
    }
}

#[test]
fn reduction_returns_a_maximal_independent_set() {
    let mut rng = StdRng::seed_from_u64(17);
    let mut base = |h: &Graph| bruteforce_system(h, DEFAULT_MIS_CAP);
    for _ in 0..100 {
        let g = random_graph(rng.gen_range(1..=9), 0.5, &mut rng);
        let r = modular_reduction(&g, &mut base).unwrap();
        assert!(wellcover::mis::is_maximal_independent(&g, &r.mis), "{g:?}");
    }
}

/// Maximal independent sets assembled from a module partition: pick a maximal
/// independent set of the quotient, then one in every module it touches.
fn assembled_mis(g: &Graph, modules: &[VertexSet]) -> BTreeSet<VertexSet> {
    let (q, _) = quotient(g, modules).unwrap();
    let per_module: Vec<Vec<VertexSet>> = modules
        .iter()
        .map(|m| {
            let (sub, map) = g.induced_subgraph(m).unwrap();
            all_mis(&sub, DEFAULT_MIS_CAP)
                .unwrap()
                .iter()
                .map(|s| s.mapped(&map))
                .collect()
        })
        .collect();
    let mut out = BTreeSet::new();
    for top in all_mis(&q, DEFAULT_MIS_CAP).unwrap() {
        let mut partial = vec![VertexSet::new()];
        for j in top.iter() {
            partial = partial
                .iter()
                .flat_map(|p| per_module[j].iter().map(move |s| p.union(s)))
                .collect();
        }
        out.extend(partial);
    }
    out
}

#[test]
fn module_partition_mis_bijection() {
    let mut rng = StdRng::seed_from_u64(18);
    let mut checked = 0;
    while checked < 150 {
        let g = random_modular(rng.gen_range(2..=4), 3, &mut rng);
        let modules = maximal_strong_modules(&g).unwrap();
        if modules.iter().all(|m| m.len() == 1) {
            continue;
        }
        checked += 1;
        let direct: BTreeSet<VertexSet> =
            all_mis(&g, DEFAULT_MIS_CAP).unwrap().into_iter().collect();
        assert_eq!(assembled_mis(&g, &modules), direct, "{g:?}");
    }
}

#[test]
fn system_route_recognises_well_covered_graphs() {
    let mut rng = StdRng::seed_from_u64(19);
    let cfg = SolverConfig::default();
    for _ in 0..300 {
        let g = random_graph(rng.gen_range(0..=8), rng.gen_range(0.1..0.9), &mut rng);
        assert_eq!(
            wellcover::is_well_covered(&g, &cfg).unwrap(),
            is_well_covered_bruteforce(&g, DEFAULT_MIS_CAP).unwrap(),
            "{g:?}"
        );
    }
}
