//! Admissible paths and the squarefree lexicographic initial ideal of a
//! binomial edge ideal.
//!
//! The ambient ring has `2n` variables indexed `1..=2n`: variable `i <= n`
//! is `x_i`, variable `n + i` is `y_i`. Under the lexicographic order with
//! `x_1 > ... > x_n > y_1 > ... > y_n`, the reduced Groebner basis of the
//! binomial edge ideal consists of one binomial per admissible path, whose
//! leading monomial is squarefree; the initial ideal is generated by those
//! monomials.

use crate::graph::SimpleGraph;
use std::collections::BTreeSet;

/// A path `i = v_0, ..., v_r = j` with `i < j` such that every interior
/// vertex is `< i` or `> j`, and no nonempty proper subsequence of the
/// interior yields an `i`-`j` path. Its leading monomial is
/// `x_i y_j * prod(x_k : interior k > j) * prod(y_k : interior k < i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissiblePath {
    pub vertices: Vec<usize>,
    /// Variable indices of the leading monomial, in `1..=2n`.
    pub monomial: BTreeSet<usize>,
}

impl AdmissiblePath {
    pub fn endpoints(&self) -> (usize, usize) {
        (self.vertices[0], *self.vertices.last().unwrap())
    }

    pub fn interior(&self) -> &[usize] {
        &self.vertices[1..self.vertices.len() - 1]
    }
}

/// A squarefree monomial ideal given by its minimal generators, each a set
/// of variable indices in `1..=num_vars`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeMonomialIdeal {
    pub num_vars: usize,
    pub generators: Vec<BTreeSet<usize>>,
}

/// Printable name of a ring variable: `x<i>` for `i <= n`, else `y<i-n>`.
pub fn var_symbol(idx: usize, n: usize) -> String {
    if idx <= n {
        format!("x{idx}")
    } else {
        format!("y{}", idx - n)
    }
}

fn path_monomial(path: &[usize], n: usize) -> BTreeSet<usize> {
    let (i, j) = (path[0], *path.last().unwrap());
    let mut m = BTreeSet::from([i, n + j]);
    for &k in &path[1..path.len() - 1] {
        if k > j {
            m.insert(k);
        } else {
            debug_assert!(k < i);
            m.insert(n + k);
        }
    }
    m
}

fn dfs_paths(
    g: &SimpleGraph,
    u: usize,
    i: usize,
    j: usize,
    visited: &mut [bool],
    acc: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if u == j {
        out.push(acc.clone());
        return;
    }
    for &w in g.neighbors(u) {
        if w == j || ((w < i || w > j) && !visited[w]) {
            visited[w] = true;
            acc.push(w);
            dfs_paths(g, w, i, j, visited, acc, out);
            acc.pop();
            visited[w] = false;
        }
    }
}

/// All admissible paths of the graph, endpoints `i < j`.
pub fn admissible_paths(g: &SimpleGraph) -> Vec<AdmissiblePath> {
    let n = g.n();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let mut raw = Vec::new();
            let mut visited = vec![false; n + 1];
            visited[i] = true;
            let mut acc = vec![i];
            dfs_paths(g, i, i, j, &mut visited, &mut acc, &mut raw);
            'paths: for path in raw {
                let interior = &path[1..path.len() - 1];
                let k = interior.len();
                // reject when some nonempty proper subsequence of the
                // interior, in order, already forms an i-j path
                for mask in 1..(1u64 << k).saturating_sub(1) {
                    let mut prev = i;
                    let mut chain_ok = true;
                    for (t, &v) in interior.iter().enumerate() {
                        if mask >> t & 1 == 1 {
                            if !g.has_edge(prev, v) {
                                chain_ok = false;
                                break;
                            }
                            prev = v;
                        }
                    }
                    if chain_ok && g.has_edge(prev, j) {
                        continue 'paths;
                    }
                }
                let monomial = path_monomial(&path, n);
                out.push(AdmissiblePath {
                    vertices: path,
                    monomial,
                });
            }
        }
    }
    out
}

/// Minimal generators of the initial ideal of the binomial edge ideal:
/// the admissible-path monomials, deduplicated and minimalized (no
/// generator contains another).
pub fn initial_ideal(g: &SimpleGraph) -> SquarefreeMonomialIdeal {
    let unique: BTreeSet<BTreeSet<usize>> = admissible_paths(g)
        .into_iter()
        .map(|p| p.monomial)
        .collect();
    let mut by_size: Vec<BTreeSet<usize>> = unique.into_iter().collect();
    by_size.sort_by_key(|m| m.len());
    let mut minimal: Vec<BTreeSet<usize>> = Vec::new();
    for m in by_size {
        if !minimal.iter().any(|kept| kept.is_subset(&m)) {
            minimal.push(m);
        }
    }
    minimal.sort();
    SquarefreeMonomialIdeal {
        num_vars: 2 * g.n(),
        generators: minimal,
    }
}
