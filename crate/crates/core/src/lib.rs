//! Well-covering systems of graphs.
//!
//! A weighting of the vertices of a graph is *well-covered* when all maximal
//! independent sets have the same total weight. These weightings form a
//! vector space; a *well-covering system* is a homogeneous linear system whose
//! solutions are exactly that space. This crate builds such systems, either by
//! enumerating maximal independent sets or through modular decomposition and
//! anti-neighbourhood reductions, and computes well-covered dimensions and
//! bases with exact rational elimination.
//!
//! ```
//! use wellcover::{Graph, SolverConfig, well_covered_dimension};
//!
//! let bull = Graph::bull();
//! assert_eq!(well_covered_dimension(&bull, &SolverConfig::default()).unwrap(), 3);
//! ```

pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod json;
pub mod linalg;
pub mod mis;
pub mod modular;
pub mod wcs;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use io::{parse_graph, GraphFormat};
pub use linalg::{
    evaluate, extract_independent_subsystem, null_space_basis, rank, same_solution_space, Basis,
    Equation, LinearSystem, Rational, WeightVector,
};
pub use mis::{enumerate_mis, greedy_mis, is_well_covered_bruteforce, MisList, DEFAULT_MIS_CAP};
pub use modular::{
    is_module, is_prime, maximal_strong_modules, md_tree, quotient, MdNode, NodeKind,
};
pub use wcs::{
    anti_neighborhood_system, bruteforce_system, cograph_system, combine_disjoint_union,
    combine_join, forkfree_system, is_w_well_covered, is_well_covered, lift_quotient_system,
    lift_subgraph_system, modular_system, solve, well_covered_dimension, BaseSolver, JoinPart,
    SolverConfig, Strategy,
};
