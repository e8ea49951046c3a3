//! Jewel profiles and caterpillar structure.
//!
//! `D(v)` counts neighbors of `v` of degree at least 3. A vertex with
//! `D(v) >= 3` is a jewel center; the profile collects the statistics the
//! regularity formulas consume: the centers with their `D` values, the
//! components of the induced subgraph on centers, and the special degree-3
//! vertices sitting between two centers.

use crate::graph::SimpleGraph;
use crate::tree::Tree;
use serde::{Deserialize, Serialize};

/// Neighbors of `v` whose degree is at least `i`, sorted.
pub fn n_geq(g: &SimpleGraph, v: usize, i: usize) -> Vec<usize> {
    g.neighbors(v)
        .iter()
        .copied()
        .filter(|&u| g.degree(u) >= i)
        .collect()
}

/// `D(v)`: the number of neighbors of `v` of degree `>= 3`.
pub fn jewel_degree(g: &SimpleGraph, v: usize) -> usize {
    n_geq(g, v, 3).len()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JewelProfile {
    /// Number of internal (non-leaf) vertices.
    pub iv: usize,
    /// Jewel centers with their `D` values, sorted by vertex.
    pub centers: Vec<(usize, usize)>,
    /// Number of centers.
    pub s: usize,
    /// Sum of `D(c)` over centers.
    pub d_g: usize,
    /// Component sizes of the induced subgraph on centers, ordered by the
    /// smallest vertex in each component.
    pub component_sizes: Vec<usize>,
    /// Number of those components.
    pub p: usize,
    /// Number of two-vertex components.
    pub e_g: usize,
    /// Degree-3 vertices `v` with `D(v) = 2` whose two high-degree
    /// neighbors are both centers, sorted.
    pub c_g: Vec<usize>,
    /// `|c_g|`.
    pub mu: usize,
}

/// Profile of an arbitrary graph (the definitions do not need acyclicity).
pub(crate) fn profile_of_graph(g: &SimpleGraph) -> JewelProfile {
    let n = g.n();
    let iv = (1..=n).filter(|&v| g.degree(v) >= 2).count();
    let centers: Vec<(usize, usize)> = (1..=n)
        .filter_map(|v| {
            let d = jewel_degree(g, v);
            (d >= 3).then_some((v, d))
        })
        .collect();
    let s = centers.len();
    let d_g = centers.iter().map(|&(_, d)| d).sum();
    let center_set: Vec<usize> = centers.iter().map(|&(c, _)| c).collect();
    let (induced, _map) = g.induced_subgraph(&center_set);
    let mut comps = induced.connected_components();
    comps.sort_by_key(|c| c[0]);
    let component_sizes: Vec<usize> = comps.iter().map(|c| c.len()).collect();
    let p = component_sizes.len();
    let e_g = component_sizes.iter().filter(|&&x| x == 2).count();
    let c_g: Vec<usize> = (1..=n)
        .filter(|&v| {
            g.degree(v) == 3
                && jewel_degree(g, v) == 2
                && n_geq(g, v, 3)
                    .iter()
                    .all(|u| center_set.binary_search(u).is_ok())
        })
        .collect();
    let mu = c_g.len();
    JewelProfile {
        iv,
        centers,
        s,
        d_g,
        component_sizes,
        p,
        e_g,
        c_g,
        mu,
    }
}

pub fn jewel_profile(t: &Tree) -> JewelProfile {
    profile_of_graph(t.graph())
}

/// The induced subgraph on the union of closed neighborhoods of the
/// high-degree neighbors of a center `c`. Returns the relabeled subgraph
/// and its original-label map. Panics if `D(c) < 3`.
pub fn jewel_subgraph(t: &Tree, c: usize) -> (SimpleGraph, Vec<usize>) {
    let g = t.graph();
    let supports = n_geq(g, c, 3);
    assert!(supports.len() >= 3, "vertex {c} is not a jewel center");
    let mut span = std::collections::BTreeSet::new();
    for u in supports {
        span.extend(g.closed_neighborhood(u));
    }
    let span: Vec<usize> = span.into_iter().collect();
    g.induced_subgraph(&span)
}

/// `Some(spine length)` when the internal vertices induce the empty graph
/// or a path; `None` otherwise.
pub fn is_caterpillar(t: &Tree) -> Option<usize> {
    let internal = t.internal_vertices();
    if internal.is_empty() {
        // a single vertex or a single edge
        return Some(t.n() - 1);
    }
    let (ind, _) = t.graph().induced_subgraph(&internal);
    let is_path =
        ind.is_connected() && ind.is_forest() && (1..=ind.n()).all(|v| ind.degree(v) <= 2);
    is_path.then(|| internal.len() + 1)
}

/// Result of trimming attached caterpillars to a fixpoint.
#[derive(Debug, Clone)]
pub struct CaterpillarTrim {
    pub trimmed: Tree,
    /// Total spine length removed; the tree's regularity exceeds the
    /// trimmed tree's by exactly this credit.
    pub length_credit: usize,
    /// One `(attachment vertex, star size)` per replacement, in the labels
    /// of the tree current at the time of that replacement.
    pub replaced: Vec<(usize, usize)>,
}

/// An applicable trim site: the branch of `t` hanging at `v` toward `u`.
struct TrimSite {
    v: usize,
    u: usize,
    spine_len: usize,
    star_size: usize,
    branch: Vec<usize>, // vertices of the branch, not including v
}

fn find_trim_sites(t: &Tree) -> Vec<TrimSite> {
    let g = t.graph();
    let mut sites = Vec::new();
    for v in 1..=t.n() {
        for &u in g.neighbors(v) {
            // T = {v} + the component of t - v containing u
            let cut = g.delete_vertex(v);
            let comp = cut
                .connected_components()
                .into_iter()
                .find(|c| c.contains(&u))
                .unwrap();
            let mut tv: Vec<usize> = comp.clone();
            tv.push(v);
            tv.sort_unstable();
            let (sub, map) = g.induced_subgraph(&tv);
            let sub_t = Tree::new(sub).expect("branch plus attachment is a tree");
            let l = match is_caterpillar(&sub_t) {
                Some(l) => l,
                None => continue,
            };
            if l < 3 {
                continue;
            }
            // the spine must start at v: v's eccentricity in T equals l
            let v_local = map.binary_search(&v).unwrap() + 1;
            let ecc = sub_t
                .graph()
                .bfs_distances(v_local)
                .iter()
                .flatten()
                .copied()
                .max()
                .unwrap();
            if ecc != l {
                continue;
            }
            // internal vertices of T are the spine interior; each needs
            // degree >= 3 (in T = in the whole tree, they avoid v)
            let internal = sub_t.internal_vertices();
            debug_assert_eq!(internal.len(), l - 1);
            let degsum: usize = internal.iter().map(|&w| sub_t.degree(w)).sum();
            if internal.iter().any(|&w| sub_t.degree(w) < 3) {
                continue;
            }
            let star_size = degsum + 3 - 2 * l;
            sites.push(TrimSite {
                v,
                u,
                spine_len: l,
                star_size,
                branch: comp,
            });
        }
    }
    sites
}

/// Replaces every maximal attached caterpillar (spine length `l >= 3`
/// starting at the attachment vertex, all spine-interior degrees `>= 3`)
/// by a star `K_{1,t}` glued at the attachment vertex through a leaf,
/// where `t` is the interior degree sum minus `2l - 3`. Each replacement
/// earns a length credit of `l - 2`; iterates until no caterpillar
/// qualifies.
pub fn trim_caterpillars(t: &Tree) -> CaterpillarTrim {
    let mut current = t.clone();
    let mut credit = 0usize;
    let mut replaced = Vec::new();
    loop {
        let mut sites = find_trim_sites(&current);
        if sites.is_empty() {
            break;
        }
        sites.sort_by(|a, b| {
            b.spine_len
                .cmp(&a.spine_len)
                .then(a.v.cmp(&b.v))
                .then(a.u.cmp(&b.u))
        });
        let site = &sites[0];
        let g = current.graph();
        let keep: Vec<usize> = (1..=current.n())
            .filter(|w| !site.branch.contains(w))
            .collect();
        let mut edges: Vec<(usize, usize)> = g
            .edges()
            .filter(|&(a, b)| keep.binary_search(&a).is_ok() && keep.binary_search(&b).is_ok())
            .collect();
        // star K_{1,t} glued through a leaf: center c adjacent to v, plus
        // t-1 fresh leaves on c
        let base = current.n();
        let c = base + 1;
        edges.push((site.v, c));
        for leaf in c + 1..c + site.star_size {
            edges.push((c, leaf));
        }
        let widened = SimpleGraph::new(base + site.star_size, edges).unwrap();
        let live: Vec<usize> = keep.iter().copied().chain(c..c + site.star_size).collect();
        let (compact, _) = widened.induced_subgraph(&live);
        credit += site.spine_len - 2;
        replaced.push((site.v, site.star_size));
        current = Tree::new(compact).expect("trimmed graph is a tree");
    }
    CaterpillarTrim {
        trimmed: current,
        length_credit: credit,
        replaced,
    }
}
