//! Cross-checks between the closed-form bounds and the brute-force oracle.
//!
//! A verify run streams trees (exhaustively by vertex count, randomly by
//! seed, or both), applies every invariant that should hold between the
//! formula layer and the oracle, and aggregates violations into a report.
//! When the requested tree size exceeds what the oracle can handle, the run
//! degrades to formula-only invariants.

use crate::bounds::{estimate, exact_rules, matsuda_murai_bounds, thm_lower, thm_upper};
use crate::graph::{complete_graph, path_graph, star_graph, SimpleGraph};
use crate::jewel::jewel_profile;
use crate::oracle::{oracle_reg, OracleConfig};
use crate::tree::{all_trees, random_tree, Tree};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

/// One violated relation: which tree, which check, and what was observed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Failure {
    pub tree: String,
    pub check: String,
    pub details: String,
}

/// A non-fatal observation, currently only characteristic divergence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Finding {
    pub tree: String,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub cases: usize,
    pub failures: Vec<Failure>,
    pub findings: Vec<Finding>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "checks run          {}", self.cases);
        let _ = writeln!(out, "failures            {}", self.failures.len());
        for f in &self.failures {
            let _ = writeln!(out, "  [{}] {}: {}", f.check, f.tree, f.details);
        }
        let _ = writeln!(out, "findings            {}", self.findings.len());
        for f in &self.findings {
            let _ = writeln!(out, "  {}: {}", f.tree, f.note);
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Check all labeled trees on 2..=k vertices.
    pub exhaustive_n: Option<usize>,
    /// Number of random trees to draw (0 to skip).
    pub random: usize,
    /// Largest vertex count for random trees.
    pub max_n: usize,
    pub seed: u64,
    pub oracle: OracleConfig,
    /// At most this many trees go through the pendant-edge recursion.
    pub splitting_cap: usize,
    /// At most this many trees are compared across characteristics.
    pub divergence_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            exhaustive_n: None,
            random: 200,
            max_n: 8,
            seed: 0,
            oracle: OracleConfig::default(),
            splitting_cap: 50,
            divergence_cap: 25,
        }
    }
}

fn encode_graph(g: &SimpleGraph) -> String {
    let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("n={} {}", g.n(), edges.join(" "))
}

fn fail(g: &SimpleGraph, check: &str, details: String) -> Failure {
    Failure {
        tree: encode_graph(g),
        check: check.to_string(),
        details,
    }
}

/// Invariants of the formula layer alone; cheap enough for any tree size.
pub fn check_formulas(t: &Tree) -> (usize, Vec<Failure>) {
    let mut fails = Vec::new();
    let g = t.graph();
    let (lo, hi) = (thm_lower(t), thm_upper(t));
    if lo > hi {
        fails.push(fail(g, "formula-order", format!("lower {lo} > upper {hi}")));
    }
    let est = estimate(t);
    if est.lower > est.upper {
        fails.push(fail(
            g,
            "estimate-order",
            format!("lower {} > upper {}", est.lower, est.upper),
        ));
    }
    let exact_consistent = match est.exact {
        Some(v) => v == est.lower && est.lower == est.upper,
        None => est.lower != est.upper,
    };
    if !exact_consistent {
        fails.push(fail(
            g,
            "estimate-exact-consistency",
            format!(
                "exact {:?} vs interval {}..{}",
                est.exact, est.lower, est.upper
            ),
        ));
    }
    let (mm_lo, _) = matsuda_murai_bounds(t);
    let iv_lo = if t.n() == 1 {
        0
    } else {
        jewel_profile(t).iv + 1
    };
    if mm_lo > hi || iv_lo > hi {
        fails.push(fail(
            g,
            "cross-bound",
            format!("spine {mm_lo}, internal {iv_lo}, upper {hi}"),
        ));
    }
    if let Some((v, rule)) = exact_rules(t) {
        if est.exact != Some(v) {
            fails.push(fail(
                g,
                "exact-rule-vs-estimate",
                format!("rule {rule} gives {v}, estimate {:?}", est.exact),
            ));
        }
    }
    (5, fails)
}

/// Sandwich and exactness relations between the formulas and the oracle.
pub fn check_against_oracle(t: &Tree, cfg: &OracleConfig) -> (usize, Vec<Failure>) {
    let g = t.graph();
    let r = match oracle_reg(g, cfg) {
        Ok(r) => r,
        Err(e) => return (1, vec![fail(g, "oracle-error", e.to_string())]),
    };
    let mut fails = Vec::new();
    let (lo, hi) = (thm_lower(t), thm_upper(t));
    if !(lo <= r && r <= hi) {
        fails.push(fail(
            g,
            "profile-sandwich",
            format!("lower {lo}, oracle {r}, upper {hi}"),
        ));
    }
    let est = estimate(t);
    if !(est.lower <= r && r <= est.upper) {
        fails.push(fail(
            g,
            "estimate-sandwich",
            format!("lower {}, oracle {r}, upper {}", est.lower, est.upper),
        ));
    }
    let (mm_lo, mm_hi) = matsuda_murai_bounds(t);
    if !(mm_lo <= r && r <= mm_hi) {
        fails.push(fail(
            g,
            "spine-sandwich",
            format!("spine {mm_lo}, oracle {r}, vertex bound {mm_hi}"),
        ));
    }
    if t.n() >= 2 {
        let prof = jewel_profile(t);
        if (r == prof.iv + 1) != (prof.s == 0) {
            fails.push(fail(
                g,
                "jewel-free-iff",
                format!("oracle {r}, iv+1 = {}, centers {}", prof.iv + 1, prof.s),
            ));
        }
    }
    if let Some((v, rule)) = exact_rules(t) {
        if v != r {
            fails.push(fail(
                g,
                "exact-rule",
                format!("rule {rule} gives {v}, oracle {r}"),
            ));
        }
    }
    (5, fails)
}

/// The pendant-edge regularity recursion: deleting a pendant edge `e` and
/// completing the deleted graph along `e` must reproduce the regularity as
/// `max(reg(G\e), reg((G\e)_e) + 1)`. Checks every pendant edge.
pub fn check_betti_splitting(t: &Tree, cfg: &OracleConfig) -> (usize, Vec<Failure>) {
    let g = t.graph();
    let rg = match oracle_reg(g, cfg) {
        Ok(r) => r,
        Err(e) => return (1, vec![fail(g, "oracle-error", e.to_string())]),
    };
    let mut cases = 0;
    let mut fails = Vec::new();
    for (u, v) in g.edges() {
        if g.degree(u) != 1 && g.degree(v) != 1 {
            continue;
        }
        cases += 1;
        let deleted = g.delete_edge(u, v);
        let completed = deleted.g_e_completion((u, v));
        match (oracle_reg(&deleted, cfg), oracle_reg(&completed, cfg)) {
            (Ok(r1), Ok(r2)) => {
                if rg != r1.max(r2 + 1) {
                    fails.push(fail(
                        g,
                        "betti-splitting",
                        format!("edge {u}-{v}: whole {rg}, deleted {r1}, completed {r2}"),
                    ));
                }
            }
            (a, b) => {
                let msg = [a.err(), b.err()]
                    .into_iter()
                    .flatten()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join("; ");
                fails.push(fail(g, "oracle-error", msg));
            }
        }
    }
    (cases.max(1), fails)
}

/// Runs the oracle in a second characteristic and reports any difference.
/// A difference is a finding, not a failure: none of the checked bounds
/// depend on the field.
pub fn check_char_divergence(
    t: &Tree,
    cfg: &OracleConfig,
) -> (usize, Option<Finding>, Vec<Failure>) {
    let g = t.graph();
    let other = OracleConfig {
        characteristic: if cfg.characteristic == 2 { 32003 } else { 2 },
        ..*cfg
    };
    match (oracle_reg(g, cfg), oracle_reg(g, &other)) {
        (Ok(a), Ok(b)) if a == b => (1, None, Vec::new()),
        (Ok(a), Ok(b)) => (
            1,
            Some(Finding {
                tree: encode_graph(g),
                note: format!(
                    "reg differs by characteristic: GF({}) gives {a}, GF({}) gives {b}",
                    cfg.characteristic, other.characteristic
                ),
            }),
            Vec::new(),
        ),
        (a, b) => {
            let msg = [a.err(), b.err()]
                .into_iter()
                .flatten()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join("; ");
            (1, None, vec![fail(g, "oracle-error", msg)])
        }
    }
}

/// Oracle confirmation of the two attachment identities on a fixed set of
/// small base graphs:
///
/// * attaching a star at `v` through one of its leaves adds exactly one to
///   the regularity of attaching a clique of the same size at `v`;
/// * attaching `s` pendant edges plus a clique `K_t` at a leaf `v` with
///   neighbor `w` adds exactly one to the regularity of attaching `K_{s+t}`
///   at `w` after removing `v`.
pub fn gluing_identity_suite(cfg: &OracleConfig) -> (usize, Vec<Failure>) {
    let bases: Vec<(SimpleGraph, usize)> = vec![
        (path_graph(2), 2),
        (path_graph(3), 3),
        (path_graph(4), 4),
        (star_graph(3), 2),
        (complete_graph(3), 1),
        (path_graph(5), 5),
    ];
    // Each job expects reg(lhs) == reg(rhs) + 1.
    let mut jobs: Vec<(String, SimpleGraph, SimpleGraph)> = Vec::new();
    for (g, v) in &bases {
        for s in [2usize, 3] {
            jobs.push((
                format!("star-vs-clique v={v} s={s}"),
                g.attach_star_via_leaf(*v, s),
                g.attach_clique(*v, s),
            ));
        }
    }
    for (g, v) in &bases {
        if g.degree(*v) != 1 {
            continue;
        }
        let w = *g.neighbors(*v).iter().next().unwrap();
        for s in [1usize, 2] {
            for t in [2usize, 3] {
                jobs.push((
                    format!("pendant-and-clique v={v} s={s} t={t}"),
                    g.attach_pendant_edges_and_clique(*v, s, t),
                    g.delete_vertex(*v).attach_clique(w, s + t),
                ));
            }
        }
    }
    let results: Vec<Option<Failure>> = jobs
        .par_iter()
        .map(
            |(label, lhs, rhs)| match (oracle_reg(lhs, cfg), oracle_reg(rhs, cfg)) {
                (Ok(a), Ok(b)) if a == b + 1 => None,
                (Ok(a), Ok(b)) => Some(fail(
                    lhs,
                    label,
                    format!("left {a}, right {b}, expected left = right + 1"),
                )),
                (a, b) => {
                    let msg = [a.err(), b.err()]
                        .into_iter()
                        .flatten()
                        .map(|e| e.to_string())
                        .collect::<Vec<_>>()
                        .join("; ");
                    Some(fail(lhs, "oracle-error", msg))
                }
            },
        )
        .collect();
    (jobs.len(), results.into_iter().flatten().collect())
}

/// Relabels `b` into `a`'s vertex namespace with `vb` identified with `va`,
/// producing the union graph on `a.n() + b.n() - 1` vertices.
fn join_at_vertex(a: &SimpleGraph, va: usize, b: &SimpleGraph, vb: usize) -> SimpleGraph {
    let shift = |w: usize| match w.cmp(&vb) {
        std::cmp::Ordering::Equal => va,
        std::cmp::Ordering::Less => a.n() + w,
        std::cmp::Ordering::Greater => a.n() + w - 1,
    };
    let edges: Vec<(usize, usize)> = a
        .edges()
        .chain(b.edges().map(|(u, w)| (shift(u), shift(w))))
        .collect();
    SimpleGraph::new(a.n() + b.n() - 1, edges).unwrap()
}

/// `b` placed next to `a` with disjoint vertex labels.
fn disjoint_union(a: &SimpleGraph, b: &SimpleGraph) -> SimpleGraph {
    let edges: Vec<(usize, usize)> = a
        .edges()
        .chain(b.edges().map(|(u, w)| (a.n() + u, a.n() + w)))
        .collect();
    SimpleGraph::new(a.n() + b.n(), edges).unwrap()
}

/// Oracle confirmation that regularity adds over pieces: gluing two graphs
/// at a vertex belonging to a single maximal clique in each (here: a leaf),
/// and placing two graphs side by side, both give the sum of the parts.
pub fn additivity_suite(cfg: &OracleConfig) -> (usize, Vec<Failure>) {
    // (graph, one of its free vertices)
    let parts: Vec<(SimpleGraph, usize)> = vec![
        (path_graph(2), 2),
        (path_graph(3), 3),
        (path_graph(4), 4),
        (path_graph(5), 5),
        (star_graph(3), 2),
        (star_graph(4), 5),
    ];
    let mut jobs: Vec<(String, SimpleGraph, SimpleGraph, SimpleGraph)> = Vec::new();
    for (i, (ga, va)) in parts.iter().enumerate() {
        for (gb, vb) in &parts[i..] {
            jobs.push((
                "vertex-join-additivity".into(),
                join_at_vertex(ga, *va, gb, *vb),
                ga.clone(),
                gb.clone(),
            ));
            jobs.push((
                "component-additivity".into(),
                disjoint_union(ga, gb),
                ga.clone(),
                gb.clone(),
            ));
        }
    }
    let results: Vec<Option<Failure>> = jobs
        .par_iter()
        .map(|(label, whole, ga, gb)| {
            match (
                oracle_reg(whole, cfg),
                oracle_reg(ga, cfg),
                oracle_reg(gb, cfg),
            ) {
                (Ok(r), Ok(ra), Ok(rb)) if r == ra + rb => None,
                (Ok(r), Ok(ra), Ok(rb)) => {
                    Some(fail(whole, label, format!("whole {r}, parts {ra} + {rb}")))
                }
                (a, b, c) => {
                    let msg = [a.err(), b.err(), c.err()]
                        .into_iter()
                        .flatten()
                        .map(|e| e.to_string())
                        .collect::<Vec<_>>()
                        .join("; ");
                    Some(fail(whole, "oracle-error", msg))
                }
            }
        })
        .collect();
    (jobs.len(), results.into_iter().flatten().collect())
}

/// Drives the full suite. Work is distributed across threads per tree;
/// failures and findings are sorted before emit so the report does not
/// depend on scheduling.
pub fn run_verify(opts: &VerifyOptions) -> VerifyReport {
    let cfg = &opts.oracle;
    let vertex_cap = cfg.max_vars / 2;

    let mut trees: Vec<Tree> = Vec::new();
    let mut requested_max = 0usize;
    if let Some(k) = opts.exhaustive_n {
        let k = k.max(2);
        for n in 2..=k {
            trees.extend(all_trees(n));
        }
        requested_max = requested_max.max(k);
    }
    if opts.random > 0 {
        let max_n = opts.max_n.max(2);
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        for _ in 0..opts.random {
            let n = rng.random_range(2..=max_n);
            trees.push(random_tree(n, rng.random()));
        }
        requested_max = requested_max.max(max_n);
    }
    let with_oracle = requested_max <= vertex_cap && !trees.is_empty();

    let mut cases = 0usize;
    let mut failures: Vec<Failure> = Vec::new();
    let mut findings: Vec<Finding> = Vec::new();
    let absorb =
        |batch: Vec<(usize, Vec<Failure>)>, cases: &mut usize, failures: &mut Vec<Failure>| {
            for (c, f) in batch {
                *cases += c;
                failures.extend(f);
            }
        };

    let formula: Vec<_> = trees.par_iter().map(check_formulas).collect();
    absorb(formula, &mut cases, &mut failures);

    if with_oracle {
        let oracle_checks: Vec<_> = trees
            .par_iter()
            .map(|t| check_against_oracle(t, cfg))
            .collect();
        absorb(oracle_checks, &mut cases, &mut failures);

        let split_targets: Vec<&Tree> = trees
            .iter()
            .filter(|t| t.n() <= 7)
            .take(opts.splitting_cap)
            .collect();
        let split: Vec<_> = split_targets
            .par_iter()
            .map(|t| check_betti_splitting(t, cfg))
            .collect();
        absorb(split, &mut cases, &mut failures);

        let div_targets: Vec<&Tree> = trees
            .iter()
            .filter(|t| t.n() <= 6)
            .take(opts.divergence_cap)
            .collect();
        let div: Vec<_> = div_targets
            .par_iter()
            .map(|t| check_char_divergence(t, cfg))
            .collect();
        for (c, finding, f) in div {
            cases += c;
            findings.extend(finding);
            failures.extend(f);
        }

        let (gc, gf) = gluing_identity_suite(cfg);
        cases += gc;
        failures.extend(gf);

        let (ac, af) = additivity_suite(cfg);
        cases += ac;
        failures.extend(af);
    }

    failures.sort();
    findings.sort();
    VerifyReport {
        cases,
        failures,
        findings,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_tiny_run_is_clean() {
        let opts = VerifyOptions {
            exhaustive_n: Some(4),
            random: 0,
            ..VerifyOptions::default()
        };
        let report = run_verify(&opts);
        assert!(report.ok(), "failures: {:?}", report.failures);
        assert!(report.findings.is_empty(), "{:?}", report.findings);
        // 20 trees, formula + oracle suites on each, plus the fixed suites.
        assert!(report.cases > 200, "cases = {}", report.cases);
    }

    #[test]
    fn random_run_is_deterministic() {
        let opts = VerifyOptions {
            random: 12,
            max_n: 6,
            seed: 5,
            splitting_cap: 3,
            divergence_cap: 3,
            ..VerifyOptions::default()
        };
        let a = run_verify(&opts);
        let b = run_verify(&opts);
        assert_eq!(a, b);
        assert!(a.ok(), "failures: {:?}", a.failures);
    }

    #[test]
    fn large_trees_fall_back_to_formula_checks() {
        let opts = VerifyOptions {
            random: 60,
            max_n: 40,
            seed: 9,
            ..VerifyOptions::default()
        };
        let report = run_verify(&opts);
        assert_eq!(report.cases, 60 * 5);
        assert!(report.ok(), "failures: {:?}", report.failures);
    }

    #[test]
    fn additivity_suite_is_clean() {
        let (cases, fails) = additivity_suite(&OracleConfig::default());
        assert_eq!(cases, 42);
        assert!(fails.is_empty(), "{fails:?}");
    }

    #[test]
    fn joining_two_short_paths_makes_a_longer_path() {
        let joined = join_at_vertex(&path_graph(3), 3, &path_graph(2), 1);
        assert_eq!(joined.n(), 4);
        assert_eq!(joined.degree(3), 2);
        assert_eq!(joined.edges().count(), 3);
    }

    #[test]
    fn splitting_check_accepts_small_trees() {
        let cfg = OracleConfig::default();
        for seed in 0..4 {
            let t = random_tree(6, seed);
            let (cases, fails) = check_betti_splitting(&t, &cfg);
            assert!(cases >= 2);
            assert!(fails.is_empty(), "{fails:?}");
        }
    }

    #[test]
    fn report_text_shape() {
        let report = VerifyReport {
            cases: 3,
            failures: vec![Failure {
                tree: "n=2 1-2".into(),
                check: "demo".into(),
                details: "example".into(),
            }],
            findings: Vec::new(),
        };
        let text = report.render_text();
        assert!(text.contains("checks run          3"));
        assert!(text.contains("[demo] n=2 1-2: example"));
    }
}
