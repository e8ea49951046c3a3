//! Command-line front end: analysis, the brute-force oracle, verification
//! suites, built-in worked examples, tree generation, and DOT export.

use beireg::bounds::{exact_rules, family_gstm_member, family_gstm_reg, thm_upper};
use beireg::encodings::{hub_family, jewel10, two_center_example};
use beireg::graph::SimpleGraph;
use beireg::oracle::{oracle_betti, oracle_reg, OracleConfig, OracleError};
use beireg::report::analyze;
use beireg::tree::{prufer_decode, random_tree, Tree};
use beireg::verify::{run_verify, VerifyOptions};
use clap::{Parser, Subcommand, ValueEnum};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "beireg",
    version,
    about = "Regularity bounds and exact values for binomial edge ideals of trees"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report spine, jewel profile, bounds, and the composed estimate.
    Analyze {
        /// Edge-list file describing a tree.
        file: PathBuf,
        /// Emit the report as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Compute the exact regularity by brute force (Groebner + homology).
    Oracle {
        /// Edge-list file (any simple graph).
        file: PathBuf,
        /// Prime field characteristic.
        #[arg(long = "char", default_value_t = 32003)]
        characteristic: u64,
        /// Cap on ring variables (two per vertex); overrides BEIREG_MAX_VARS.
        #[arg(long)]
        max_vars: Option<usize>,
        /// Also print the nonzero graded Betti table as JSON.
        #[arg(long)]
        betti: bool,
    },
    /// Cross-check formulas against the oracle on streams of trees.
    Verify {
        /// Number of random trees to draw.
        #[arg(long)]
        random: Option<usize>,
        /// Largest random tree size.
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Seed for the random stream.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also check every labeled tree on 2..=K vertices.
        #[arg(long)]
        exhaustive_n: Option<usize>,
    },
    /// Recompute the built-in worked examples and compare.
    Examples {
        #[arg(long, value_enum)]
        which: Which,
    },
    /// Generate a tree and print its edge list.
    Gen {
        /// Random tree on this many vertices.
        #[arg(long)]
        random: Option<usize>,
        /// Seed for --random.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Decode a Pruefer sequence (space-separated; n = length + 2).
        #[arg(long)]
        prufer: Option<String>,
    },
    /// Print the tree in DOT format with jewel centers annotated.
    ExportDot {
        /// Edge-list file describing a tree.
        file: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Which {
    /// 20-vertex tree with two adjacent jewel centers; regularity 12.
    Fig2,
    /// Hub family where the profile upper bound beats the 5d bound.
    Gamma,
    /// 10-vertex one-jewel tree; oracle vs closed form.
    Jewel,
    /// Star-and-triangle family members; oracle vs 2s+t.
    Family,
}

struct Abort {
    code: u8,
    msg: String,
}

fn abort(code: u8, msg: impl Into<String>) -> Abort {
    Abort {
        code,
        msg: msg.into(),
    }
}

fn oracle_abort(e: OracleError) -> Abort {
    let code = match e {
        OracleError::NotPrime(_) | OracleError::CharacteristicTooLarge(_) => 2,
        OracleError::TooManyVariables { .. } | OracleError::LatticeTooLarge { .. } => 4,
    };
    abort(code, e.to_string())
}

fn load_graph(path: &Path) -> Result<SimpleGraph, Abort> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| abort(2, format!("cannot read {}: {e}", path.display())))?;
    SimpleGraph::parse(&text).map_err(|e| abort(2, format!("{}: {e}", path.display())))
}

fn load_tree(path: &Path) -> Result<Tree, Abort> {
    let g = load_graph(path)?;
    Tree::new(g).map_err(|e| abort(3, format!("{}: {e}", path.display())))
}

/// Flag beats environment beats default.
fn resolve_max_vars(flag: Option<usize>) -> Result<usize, Abort> {
    if let Some(v) = flag {
        return Ok(v);
    }
    match std::env::var("BEIREG_MAX_VARS") {
        Ok(s) => s
            .trim()
            .parse::<usize>()
            .map_err(|_| abort(2, format!("BEIREG_MAX_VARS must be a number, got {s:?}"))),
        Err(std::env::VarError::NotPresent) => Ok(OracleConfig::default().max_vars),
        Err(e) => Err(abort(2, format!("BEIREG_MAX_VARS: {e}"))),
    }
}

fn oracle_config(characteristic: u64, max_vars: Option<usize>) -> Result<OracleConfig, Abort> {
    Ok(OracleConfig {
        characteristic,
        max_vars: resolve_max_vars(max_vars)?,
        ..OracleConfig::default()
    })
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(a) => {
            eprintln!("error: {}", a.msg);
            ExitCode::from(a.code)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Abort> {
    match cli.command {
        Command::Analyze { file, json } => {
            let t = load_tree(&file)?;
            let report = analyze(&t);
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).map_err(|e| abort(2, e.to_string()))?
                );
            } else {
                print!("{}", report.render_text());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle {
            file,
            characteristic,
            max_vars,
            betti,
        } => {
            let g = load_graph(&file)?;
            let cfg = oracle_config(characteristic, max_vars)?;
            if betti {
                let table = oracle_betti(&g, &cfg).map_err(oracle_abort)?;
                println!("{}", table.regularity);
                println!(
                    "{}",
                    serde_json::to_string_pretty(&table).map_err(|e| abort(2, e.to_string()))?
                );
            } else {
                let r = oracle_reg(&g, &cfg).map_err(oracle_abort)?;
                println!("{r}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            random,
            max_n,
            seed,
            exhaustive_n,
        } => {
            let defaults = VerifyOptions::default();
            let random = match (random, exhaustive_n) {
                (Some(r), _) => r,
                (None, Some(_)) => 0,
                (None, None) => defaults.random,
            };
            let opts = VerifyOptions {
                exhaustive_n,
                random,
                max_n,
                seed,
                oracle: oracle_config(defaults.oracle.characteristic, None)?,
                ..defaults
            };
            let report = run_verify(&opts);
            print!("{}", report.render_text());
            if report.ok() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Examples { which } => run_examples(which),
        Command::Gen {
            random,
            seed,
            prufer,
        } => {
            let t = match (random, prufer) {
                (Some(n), None) => {
                    if n == 0 {
                        return Err(abort(2, "--random needs at least 1 vertex"));
                    }
                    random_tree(n, seed)
                }
                (None, Some(seq)) => {
                    let parsed: Result<Vec<usize>, _> =
                        seq.split_whitespace().map(str::parse::<usize>).collect();
                    let parsed = parsed
                        .map_err(|e| abort(2, format!("bad Pruefer sequence {seq:?}: {e}")))?;
                    let n = parsed.len() + 2;
                    prufer_decode(&parsed, n).map_err(|e| abort(2, e.to_string()))?
                }
                _ => {
                    return Err(abort(2, "gen needs exactly one of --random or --prufer"));
                }
            };
            print!("{}", t.graph().to_edge_list());
            Ok(ExitCode::SUCCESS)
        }
        Command::ExportDot { file } => {
            let t = load_tree(&file)?;
            print!("{}", beireg::dot::to_dot(&t));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn check_line(name: &str, computed: &str, expected: &str) -> bool {
    let ok = computed == expected;
    println!(
        "{name:<28} computed {computed:<10} expected {expected:<10} {}",
        if ok { "ok" } else { "MISMATCH" }
    );
    ok
}

fn run_examples(which: Which) -> Result<ExitCode, Abort> {
    let mut all_ok = true;
    match which {
        Which::Fig2 => {
            let r = analyze(&two_center_example());
            all_ok &= check_line("two-center lower", &r.bounds.thm_lower.to_string(), "12");
            all_ok &= check_line("two-center upper", &r.bounds.thm_upper.to_string(), "12");
            let exact = r
                .estimate
                .exact
                .map_or("none".to_string(), |v| v.to_string());
            all_ok &= check_line("two-center exact", &exact, "12");
        }
        Which::Gamma => {
            println!(
                "{:>2} {:>13} {:>8} {:>4}",
                "d", "profile upper", "5d bound", "gap"
            );
            let mut gaps = Vec::new();
            for d in 3..=6usize {
                let t = hub_family(d);
                let upper = thm_upper(&t);
                let reference = 5 * d - (d + 1) / 3;
                let coarse = 5 * d;
                let gap = coarse.saturating_sub(upper);
                gaps.push(gap);
                println!("{d:>2} {upper:>13} {coarse:>8} {gap:>4}");
                if upper != reference {
                    all_ok = false;
                    println!("   MISMATCH: expected profile upper {reference} at d={d}");
                }
            }
            let widening = gaps.windows(2).all(|w| w[0] <= w[1]) && gaps[gaps.len() - 1] > gaps[0];
            if widening {
                println!("gap widens from {} to {}", gaps[0], gaps[gaps.len() - 1]);
            } else {
                all_ok = false;
                println!("   MISMATCH: gap column should widen, got {gaps:?}");
            }
        }
        Which::Jewel => {
            let t = jewel10();
            let cfg = oracle_config(OracleConfig::default().characteristic, None)?;
            let r = oracle_reg(t.graph(), &cfg).map_err(oracle_abort)?;
            let (v, rule) = exact_rules(&t).expect("built-in jewel tree has a closed form");
            all_ok &= check_line("jewel oracle", &r.to_string(), "6");
            all_ok &= check_line(&format!("jewel formula ({rule})"), &v.to_string(), "6");
        }
        Which::Family => {
            let cfg = oracle_config(OracleConfig::default().characteristic, None)?;
            for (s, t) in [(0usize, 2usize), (1, 1), (2, 0), (1, 2)] {
                for m in [0usize, 1] {
                    let g = family_gstm_member(s, t, m);
                    let r = oracle_reg(&g, &cfg).map_err(oracle_abort)?;
                    let want = family_gstm_reg(s, t, m);
                    all_ok &= check_line(
                        &format!("family s={s} t={t} m={m}"),
                        &r.to_string(),
                        &want.to_string(),
                    );
                }
            }
        }
    }
    if all_ok {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}
