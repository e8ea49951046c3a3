//! Castelnuovo-Mumford regularity of binomial edge ideals of trees.
//!
//! For a graph `G` on vertices `1..=n`, the binomial edge ideal `J_G` lives in
//! `k[x_1..x_n, y_1..y_n]` and is generated by `x_i y_j - x_j y_i` over the
//! edges `{i,j}`. This crate computes, for trees:
//!
//! * combinatorial lower/upper bounds on `reg(S/J_G)` from the jewel profile
//!   (counts of high-degree star configurations),
//! * exact values where closed-form rules apply (caterpillars, jewel-free
//!   trees, trees whose jewels satisfy a smallness condition),
//! * a composite estimate that decomposes a tree at degree-2 vertices and
//!   trims attached caterpillars before applying the rules,
//!
//! and, independently of all of the above, a brute-force oracle: the
//! squarefree lexicographic initial ideal of `J_G` is built from admissible
//! paths and its regularity is computed over `GF(p)` via reduced simplicial
//! homology of restricted Stanley-Reisner complexes (Hochster's formula).
//! Since the initial ideal is squarefree, `reg(S/J_G) = reg(S/in(J_G))`, so
//! the oracle checks the combinatorial results without sharing code with
//! them.

pub mod bounds;
pub mod dot;
pub mod encodings;
pub mod graph;
pub mod jewel;
pub mod oracle;
pub mod report;
pub mod tree;
pub mod verify;

pub use bounds::{
    estimate, exact_rules, family_gstm_member, family_gstm_reg, matsuda_murai_bounds, thm_lower,
    thm_upper, RegularityEstimate, TraceStep,
};
pub use dot::to_dot;
pub use encodings::{hub_family, jewel10, linked_centers_example, two_center_example};
pub use graph::{complete_graph, path_graph, star_graph, GraphError, ParseError, SimpleGraph};
pub use jewel::{
    is_caterpillar, jewel_degree, jewel_profile, jewel_subgraph, n_geq, trim_caterpillars,
    CaterpillarTrim, JewelProfile,
};
pub use oracle::{oracle_betti, oracle_reg, BettiEntry, BettiTable, OracleConfig, OracleError};
pub use report::{analyze, AnalyzeReport, BoundsSummary};
pub use tree::{
    all_trees, prufer_decode, prufer_encode, random_tree, LabeledTree, SpinePath, Tree,
};
pub use verify::{
    additivity_suite, check_against_oracle, check_betti_splitting, check_char_divergence,
    check_formulas, gluing_identity_suite, run_verify, Failure, Finding, VerifyOptions,
    VerifyReport,
};
