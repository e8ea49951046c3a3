//! Regularity and graded Betti numbers of a squarefree monomial ideal via
//! Hochster's formula.
//!
//! For a squarefree ideal `I`, the Betti number in homological index `i`
//! and squarefree degree `W` of `S/I` is the dimension of the reduced
//! homology `H~_{|W|-i-1}` of the Stanley-Reisner complex restricted to
//! `W`, and `reg(S/I)` is the largest `h+1` over all `W` with
//! `H~_h(restriction) != 0`. Only `W` in the lcm lattice (unions of
//! generator supports) can contribute.
//!
//! Two exact reductions keep this tractable:
//!
//! * the restriction to `W` splits as a join over the variable-connected
//!   blocks of the generators inside `W`, so homology polynomials (indexed
//!   by `c = h + 1`) multiply across blocks;
//! * `h + 1` for one block never exceeds `|block| - (minimum number of
//!   generators covering the block)`, which bounds the contribution of a
//!   candidate `W` before any homology is computed.

use super::homology::homology_dims_mask;
use super::paths::SquarefreeMonomialIdeal;
use super::{OracleConfig, OracleError};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap, HashSet};

/// One nonzero graded Betti number of `S/I`: homological index `i`,
/// degree `j = |support|`, and the squarefree degree itself as sorted
/// variable indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: usize,
    pub support: Vec<usize>,
    pub dim: usize,
}

/// All nonzero squarefree graded Betti numbers of `S/I` in homological
/// index at least 1, plus the regularity they imply.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub num_vars: usize,
    pub regularity: usize,
    pub entries: Vec<BettiEntry>,
}

fn to_mask(set: &BTreeSet<usize>) -> u64 {
    let mut m = 0u64;
    for &v in set {
        debug_assert!((1..=64).contains(&v));
        m |= 1u64 << (v - 1);
    }
    m
}

fn vars_of(mask: u64) -> Vec<usize> {
    (0..64)
        .filter(|&b| mask >> b & 1 == 1)
        .map(|b| b + 1)
        .collect()
}

/// Union closure of the generator supports, sorted by cardinality.
fn lcm_lattice(masks: &[u64], cap: usize) -> Result<Vec<u64>, OracleError> {
    let mut seen: HashSet<u64> = masks.iter().copied().collect();
    let mut frontier: Vec<u64> = seen.iter().copied().collect();
    while !frontier.is_empty() {
        let mut fresh = Vec::new();
        for &w in &frontier {
            for &m in masks {
                let union = w | m;
                if seen.insert(union) {
                    if seen.len() > cap {
                        return Err(OracleError::LatticeTooLarge { cap });
                    }
                    fresh.push(union);
                }
            }
        }
        frontier = fresh;
    }
    let mut all: Vec<u64> = seen.into_iter().collect();
    all.sort_unstable_by_key(|&w| (w.count_ones(), w));
    Ok(all)
}

fn bnb_cover(uncovered: u64, depth: usize, gens: &[u64], best: &mut usize) {
    if depth >= *best {
        return;
    }
    if uncovered == 0 {
        *best = depth;
        return;
    }
    let lowest = uncovered & uncovered.wrapping_neg();
    for &g in gens {
        if g & lowest != 0 {
            bnb_cover(uncovered & !g, depth + 1, gens, best);
        }
    }
}

/// Minimum number of generators (all lying inside `w`) whose union is `w`.
fn min_cover(w: u64, masks: &[u64], memo: &mut HashMap<u64, usize>) -> usize {
    if let Some(&c) = memo.get(&w) {
        return c;
    }
    let inside: Vec<u64> = masks.iter().copied().filter(|&g| g & !w == 0).collect();
    let mut best = inside.len() + 1;
    bnb_cover(w, 0, &inside, &mut best);
    memo.insert(w, best);
    best
}

/// Variable-connected blocks of the generators inside `w`; each block is
/// the union of the generator supports it groups. Blocks partition `w`
/// because `w` is a union of generator supports.
fn blocks_of(w: u64, masks: &[u64]) -> Vec<u64> {
    let mut pool: Vec<u64> = masks.iter().copied().filter(|&g| g & !w == 0).collect();
    let mut blocks = Vec::new();
    while let Some(mut current) = pool.pop() {
        loop {
            let before = pool.len();
            pool.retain(|&g| {
                if g & current != 0 {
                    current |= g;
                    false
                } else {
                    true
                }
            });
            if pool.len() == before {
                break;
            }
        }
        blocks.push(current);
    }
    blocks.sort_unstable();
    blocks
}

/// Homology polynomial of one block: entry `c` is `dim H~_{c-1}` of the
/// restriction to the block. A block spanned by a single generator is the
/// boundary of a simplex, a sphere of dimension `|g| - 2`. For exactly two
/// generators the resolution of their ideal is the two-step Taylor complex,
/// which is minimal because distinct minimal generators are incomparable;
/// the homology is one dimension sitting in degree `|block| - 3`.
fn block_dims(block: u64, masks: &[u64], p: u64) -> Vec<usize> {
    let inside = masks.iter().filter(|&&g| g & !block == 0).count();
    if inside <= 2 {
        let c = block.count_ones() as usize - inside;
        let mut dims = vec![0; c + 1];
        dims[c] = 1;
        return dims;
    }
    homology_dims_mask(block, masks, p)
}

fn convolve(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = vec![0usize; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn core(
    ideal: &SquarefreeMonomialIdeal,
    cfg: &OracleConfig,
    want_table: bool,
) -> Result<(usize, Vec<BettiEntry>), OracleError> {
    if ideal.generators.is_empty() {
        return Ok((0, Vec::new()));
    }
    assert!(ideal.num_vars <= 64, "more than 64 ring variables");
    assert!(
        ideal.generators.iter().all(|g| g.len() >= 2),
        "generators must have at least two variables"
    );
    let masks: Vec<u64> = {
        let unique: BTreeSet<u64> = ideal.generators.iter().map(to_mask).collect();
        unique.into_iter().collect()
    };
    let lattice = lcm_lattice(&masks, cfg.max_lattice)?;
    // any single generator support already realizes c = |g| - 1
    let mut best = masks
        .iter()
        .map(|g| g.count_ones() as usize - 1)
        .max()
        .unwrap();
    let mut entries = Vec::new();
    let mut poly_memo: HashMap<u64, Vec<usize>> = HashMap::new();
    let mut cover_memo: HashMap<u64, usize> = HashMap::new();

    let mut at = 0;
    while at < lattice.len() {
        let size = lattice[at].count_ones();
        let mut end = at;
        while end < lattice.len() && lattice[end].count_ones() == size {
            end += 1;
        }
        // candidates of this cardinality, with their blocks
        let candidates: Vec<(u64, Vec<u64>)> = lattice[at..end]
            .iter()
            .filter_map(|&w| {
                let blocks = blocks_of(w, &masks);
                if !want_table {
                    let potential: usize = blocks
                        .iter()
                        .map(|&u| u.count_ones() as usize - min_cover(u, &masks, &mut cover_memo))
                        .sum();
                    if potential <= best {
                        return None;
                    }
                }
                Some((w, blocks))
            })
            .collect();
        // compute the missing block homologies in parallel
        let needed: BTreeSet<u64> = candidates
            .iter()
            .flat_map(|(_, blocks)| blocks.iter().copied())
            .filter(|u| !poly_memo.contains_key(u))
            .collect();
        let computed: Vec<(u64, Vec<usize>)> = needed
            .into_par_iter()
            .map(|u| (u, block_dims(u, &masks, cfg.characteristic)))
            .collect();
        poly_memo.extend(computed);
        for (w, blocks) in candidates {
            let mut poly = vec![1usize];
            let mut contractible = false;
            for u in &blocks {
                let dims = &poly_memo[u];
                if dims.is_empty() {
                    contractible = true;
                    break;
                }
                poly = convolve(&poly, dims);
            }
            if contractible {
                continue;
            }
            if let Some(top) = poly.iter().rposition(|&v| v != 0) {
                best = best.max(top);
                if want_table {
                    let w_size = w.count_ones() as usize;
                    for (c, &dim) in poly.iter().enumerate() {
                        if dim != 0 && c >= 1 {
                            entries.push(BettiEntry {
                                i: w_size - c,
                                j: w_size,
                                support: vars_of(w),
                                dim,
                            });
                        }
                    }
                }
            }
        }
        at = end;
    }
    entries.sort_by(|a, b| (a.i, a.j, &a.support).cmp(&(b.i, b.j, &b.support)));
    Ok((best, entries))
}

/// `reg(S/I)` with lattice pruning (no Betti table).
pub fn ideal_regularity(
    ideal: &SquarefreeMonomialIdeal,
    cfg: &OracleConfig,
) -> Result<usize, OracleError> {
    cfg.validate()?;
    Ok(core(ideal, cfg, false)?.0)
}

/// The full nonzero Betti table of `S/I` (homological index >= 1) and the
/// regularity; runs without pruning, so it is slower than
/// [`ideal_regularity`].
pub fn ideal_betti_table(
    ideal: &SquarefreeMonomialIdeal,
    cfg: &OracleConfig,
) -> Result<BettiTable, OracleError> {
    cfg.validate()?;
    let (regularity, entries) = core(ideal, cfg, true)?;
    Ok(BettiTable {
        num_vars: ideal.num_vars,
        regularity,
        entries,
    })
}
