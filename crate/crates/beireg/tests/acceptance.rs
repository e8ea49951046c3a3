//! End-to-end acceptance checks. Each check prints exactly one PASS or FAIL
//! line with its wall-clock time; the process exits nonzero if any check
//! fails its assertions or its time budget. Values are pinned as exact
//! integer equalities, budgets as constants next to each check.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use beireg::{
    all_trees, check_betti_splitting, complete_graph, estimate, exact_rules, family_gstm_member,
    family_gstm_reg, gluing_identity_suite, hub_family, jewel10, jewel_profile, oracle_reg,
    path_graph, random_tree, star_graph, thm_lower, thm_upper, two_center_example, OracleConfig,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn check(
    number: usize,
    name: &str,
    budget: Duration,
    body: impl FnOnce() -> Result<String, String>,
) -> bool {
    let start = Instant::now();
    let result = body();
    let elapsed = start.elapsed();
    let (verdict, detail) = match result {
        Ok(detail) if elapsed <= budget => ("PASS", detail),
        Ok(detail) => (
            "FAIL",
            format!("{detail}; over budget ({elapsed:.1?} > {budget:.1?})"),
        ),
        Err(why) => ("FAIL", why),
    };
    println!("{number}. {name:<26} {verdict}  [{elapsed:>8.1?}]  {detail}");
    verdict == "PASS"
}

fn two_center_exact() -> Result<String, String> {
    let t = two_center_example();
    let (lo, hi) = (thm_lower(&t), thm_upper(&t));
    let est = estimate(&t);
    if lo != 12 || hi != 12 || est.exact != Some(12) {
        return Err(format!(
            "expected lower = upper = exact = 12, got lower {lo}, upper {hi}, exact {:?}",
            est.exact
        ));
    }
    Ok("lower = upper = exact = 12".into())
}

fn hub_family_gap() -> Result<String, String> {
    let expected = [14usize, 19, 23, 28];
    let mut gaps = Vec::new();
    for d in 3..=6 {
        let up = thm_upper(&hub_family(d));
        let want = 5 * d - (d + 1) / 3;
        if up != want || up != expected[d - 3] {
            return Err(format!("d = {d}: upper {up}, expected {want}"));
        }
        gaps.push(5 * d - up);
    }
    if !gaps.windows(2).all(|w| w[0] <= w[1]) || gaps[3] <= gaps[0] {
        return Err(format!("gap to 5d must widen, got {gaps:?}"));
    }
    Ok(format!(
        "uppers {expected:?}, gap to 5d widens {} -> {}",
        gaps[0], gaps[3]
    ))
}

fn oracle_anchors(cfg: &OracleConfig) -> Result<String, String> {
    for n in 2..=6 {
        let r = oracle_reg(&path_graph(n), cfg).map_err(|e| e.to_string())?;
        if r != n - 1 {
            return Err(format!("path on {n}: oracle {r}, expected {}", n - 1));
        }
    }
    for r in 2..=4 {
        let got = oracle_reg(&star_graph(r), cfg).map_err(|e| e.to_string())?;
        if got != 2 {
            return Err(format!("star with {r} leaves: oracle {got}, expected 2"));
        }
    }
    for t in 3..=4 {
        let got = oracle_reg(&complete_graph(t), cfg).map_err(|e| e.to_string())?;
        if got != 1 {
            return Err(format!("complete graph on {t}: oracle {got}, expected 1"));
        }
    }
    Ok("5 paths, 3 stars, 2 complete graphs".into())
}

fn exhaustive_sandwich(cfg: &OracleConfig) -> Result<String, String> {
    let mut trees = 0usize;
    for n in 2..=7 {
        for t in all_trees(n) {
            trees += 1;
            let r = oracle_reg(t.graph(), cfg).map_err(|e| e.to_string())?;
            let (lo, hi) = (thm_lower(&t), thm_upper(&t));
            if !(lo <= r && r <= hi) {
                return Err(format!(
                    "{}: lower {lo}, oracle {r}, upper {hi}",
                    t.graph().to_edge_list().replace('\n', " ")
                ));
            }
            let prof = jewel_profile(&t);
            if (r == prof.iv + 1) != (prof.s == 0) {
                return Err(format!(
                    "{}: oracle {r}, iv+1 = {}, centers {}",
                    t.graph().to_edge_list().replace('\n', " "),
                    prof.iv + 1,
                    prof.s
                ));
            }
        }
    }
    Ok(format!("{trees} trees, 0 violations"))
}

fn jewel_exactness(cfg: &OracleConfig) -> Result<String, String> {
    let t = jewel10();
    let r = oracle_reg(t.graph(), cfg).map_err(|e| e.to_string())?;
    let prof = jewel_profile(&t);
    let formula = prof.iv + prof.centers[0].1 - 1;
    let rule = exact_rules(&t).map(|(v, _)| v);
    if r != 6 || formula != 6 || rule != Some(6) {
        return Err(format!(
            "oracle {r}, iv + D(c) - 1 = {formula}, exact rule {rule:?}, expected all 6"
        ));
    }
    Ok("oracle = iv + D(c) - 1 = 6".into())
}

fn pendant_recursion(cfg: &OracleConfig) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(20260825);
    let mut edges = 0usize;
    for _ in 0..50 {
        let n = rng.random_range(2..=7);
        let t = random_tree(n, rng.random());
        let (cases, fails) = check_betti_splitting(&t, cfg);
        edges += cases;
        if let Some(f) = fails.first() {
            return Err(format!("{}: {}", f.tree, f.details));
        }
    }
    Ok(format!("50 trees, {edges} pendant edges, 0 violations"))
}

fn gluing_identities(cfg: &OracleConfig) -> Result<String, String> {
    let (cases, fails) = gluing_identity_suite(cfg);
    if let Some(f) = fails.first() {
        return Err(format!("[{}] {}: {}", f.check, f.tree, f.details));
    }
    if cases != 32 {
        return Err(format!("expected 32 instances, ran {cases}"));
    }
    Ok("two identities, 32 instances, 0 violations".into())
}

fn family_minima(cfg: &OracleConfig) -> Result<String, String> {
    for (s, t) in [(0usize, 2usize), (1, 1), (2, 0), (1, 2)] {
        for m in 0..=1 {
            let g = family_gstm_member(s, t, m);
            let r = oracle_reg(&g, cfg).map_err(|e| e.to_string())?;
            let want = family_gstm_reg(s, t, m);
            if r != want || want != 2 * s + t {
                return Err(format!(
                    "(s, t, m) = ({s}, {t}, {m}): oracle {r}, formula {want}, expected {}",
                    2 * s + t
                ));
            }
        }
    }
    Ok("8 members match 2s + t".into())
}

fn bound_order_fuzz() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..10_000 {
        let n = rng.random_range(2..=40);
        let t = random_tree(n, rng.random());
        let (lo, hi) = (thm_lower(&t), thm_upper(&t));
        if lo > hi {
            return Err(format!(
                "{}: lower {lo} > upper {hi}",
                t.graph().to_edge_list().replace('\n', " ")
            ));
        }
    }
    Ok("10000 random trees up to 40 vertices".into())
}

fn main() -> ExitCode {
    let cfg = OracleConfig::default();
    let sec = Duration::from_secs;
    let mut ok = true;
    ok &= check(1, "two-center exact value", sec(1), two_center_exact);
    ok &= check(2, "hub family gap", sec(1), hub_family_gap);
    ok &= check(3, "oracle anchors", sec(30), || oracle_anchors(&cfg));
    ok &= check(4, "exhaustive sandwich n<=7", sec(600), || {
        exhaustive_sandwich(&cfg)
    });
    ok &= check(5, "ten-vertex jewel", sec(600), || jewel_exactness(&cfg));
    ok &= check(6, "pendant-edge recursion", sec(900), || {
        pendant_recursion(&cfg)
    });
    ok &= check(7, "gluing identities", sec(900), || gluing_identities(&cfg));
    ok &= check(8, "family minima", sec(900), || family_minima(&cfg));
    ok &= check(9, "bound order fuzz", sec(10), bound_order_fuzz);
    if ok {
        println!("acceptance: all 9 checks passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: FAILURES above");
        ExitCode::FAILURE
    }
}
