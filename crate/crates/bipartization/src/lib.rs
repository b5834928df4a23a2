//! Expansion of a graph into a bipartite "copy graph": the A side keeps the
//! host's vertices, the B side carries f(K) copies of each complete subgraph
//! K, and copy (K, i) is adjacent exactly to the vertices of K. The crate
//! provides the construction and its inversion, tree and block-structure
//! characterizations, exact domination and covering solvers, membership
//! tests for the family 𝓑 of bipartite graphs with γ = min(|A|, |B|), and
//! an exhaustive verification harness with graph6 tooling.

pub mod bipartize;
pub mod blocks;
pub mod cliques;
pub mod domination;
pub mod enumerate;
pub mod family;
pub mod format;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod verify;

pub use bipartize::{
    bipartize, invert_bipartization, is_induced_subgraph_by_weights, similarity_partition,
    BipartiteGraph, InversionResult, Side, SimilarityPartition,
};
pub use blocks::{
    block_decomposition, find_two_disjoint_f_paths, is_block_graph, is_tree_bipartization,
    restrict_to_support, tree_weighting_for, BlockDecomposition, FCompletePath, TreeViolation,
};
pub use cliques::{
    cliques_at, cliques_meeting, enumerate_cliques, enumerate_cliques_capped,
    unit_edge_weighting, Clique, CliqueWeighting, DEFAULT_CLIQUE_CAP,
};
pub use domination::{
    covering_number, domination_number, gamma, has_side_saturating_matching, is_dominating,
    max_matching_bipartite, DominatingSet, Matching, MAX_EXACT_N,
};
pub use enumerate::{
    enumerate_labeled_graphs, enumerate_labeled_trees, graph_from_mask, mask_count,
    random_connected_graph, tree_from_prufer,
};
pub use error::{Error, Result};
pub use format::{
    export_dot, export_dot_bipartite, parse_edge_list, parse_graph6, parse_graph6_corpus,
    parse_weighting, write_edge_list, write_graph6, write_weighting, MAX_GRAPH6_N,
};
pub use family::{
    check_corollary6, check_lemma5_conditions, check_theorem5_properties, classify,
    ClassificationReport, Corollary6Violation, Lemma5Violation, Theorem5Violation,
};
pub use graph::{Graph, SupportProfile, VertexSet};
pub use verify::{
    run_all, run_suite, Counterexample, HarnessReport, Suite, SuiteOutcome, VerifyConfig,
    WORKERS_ENV,
};
