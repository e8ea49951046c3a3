//! Trees: validation, spines, degree-2 decomposition, Pruefer codes.

use crate::graph::{GraphError, SimpleGraph};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A connected acyclic [`SimpleGraph`]. Constructed through `new`, which
/// validates connectivity and the edge count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    graph: SimpleGraph,
}

/// A longest path, listed from its smaller endpoint. `length` counts edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinePath {
    pub vertices: Vec<usize>,
    pub length: usize,
}

/// A piece of a decomposition, carrying its original labels:
/// vertex `i` of `tree` was `labels[i-1]` in the tree it came from.
#[derive(Debug, Clone)]
pub struct LabeledTree {
    pub tree: Tree,
    pub labels: Vec<usize>,
}

impl Tree {
    pub fn new(graph: SimpleGraph) -> Result<Self, GraphError> {
        let n = graph.n();
        if n == 0 {
            return Err(GraphError::NotATree("no vertices".into()));
        }
        if graph.edge_count() != n - 1 {
            return Err(GraphError::NotATree(format!(
                "{} edges on {} vertices",
                graph.edge_count(),
                n
            )));
        }
        if !graph.is_connected() {
            return Err(GraphError::NotATree("disconnected".into()));
        }
        Ok(Tree { graph })
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.graph.degree(v)
    }

    pub fn leaves(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Vertices that are not leaves. For the 1-vertex tree this is empty.
    pub fn internal_vertices(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&v| self.degree(v) >= 2).collect()
    }

    /// The unique path between two vertices.
    pub fn path_between(&self, u: usize, v: usize) -> Vec<usize> {
        let mut parent = vec![0usize; self.n() + 1];
        let mut seen = vec![false; self.n() + 1];
        seen[u] = true;
        let mut queue = std::collections::VecDeque::from([u]);
        while let Some(a) = queue.pop_front() {
            if a == v {
                break;
            }
            for &b in self.graph.neighbors(a) {
                if !seen[b] {
                    seen[b] = true;
                    parent[b] = a;
                    queue.push_back(b);
                }
            }
        }
        let mut path = vec![v];
        while *path.last().unwrap() != u {
            let last = *path.last().unwrap();
            path.push(parent[last]);
        }
        path.reverse();
        path
    }

    pub fn distance(&self, u: usize, v: usize) -> usize {
        self.path_between(u, v).len() - 1
    }

    /// A longest path (diametral path). Among all diametral endpoint pairs
    /// the lexicographically smallest `(min, max)` pair is chosen, which
    /// fixes the path uniquely since tree paths are unique.
    pub fn spine(&self) -> SpinePath {
        let n = self.n();
        if n == 1 {
            return SpinePath {
                vertices: vec![1],
                length: 0,
            };
        }
        let mut best: Option<(usize, usize, usize)> = None; // (dist, u, v)
        for u in 1..=n {
            let dist = self.graph.bfs_distances(u);
            for (v, dv) in dist.iter().enumerate().skip(u + 1) {
                let d = dv.expect("tree is connected");
                let cand = (d, u, v);
                best = Some(match best {
                    None => cand,
                    Some(cur) => {
                        if cand.0 > cur.0 || (cand.0 == cur.0 && (cand.1, cand.2) < (cur.1, cur.2))
                        {
                            cand
                        } else {
                            cur
                        }
                    }
                });
            }
        }
        let (d, u, v) = best.unwrap();
        SpinePath {
            vertices: self.path_between(u, v),
            length: d,
        }
    }

    /// Splits at every degree-2 vertex, repeatedly, until no piece has one.
    /// Splitting at `v` with neighbors `a,b` keeps a copy of `v` as a leaf
    /// in both halves. Pieces come back relabeled with their original-label
    /// maps; the piece order follows the smallest original label.
    pub fn split_at_degree_two(&self) -> Vec<LabeledTree> {
        let start = LabeledTree {
            tree: self.clone(),
            labels: (1..=self.n()).collect(),
        };
        let mut stack = vec![start];
        let mut done = Vec::new();
        while let Some(piece) = stack.pop() {
            let t = &piece.tree;
            let v = (1..=t.n()).find(|&v| t.degree(v) == 2);
            let v = match v {
                Some(v) => v,
                None => {
                    done.push(piece);
                    continue;
                }
            };
            let nbrs: Vec<usize> = t.graph.neighbors(v).iter().copied().collect();
            let cut = t.graph.delete_vertex(v);
            for &side in &nbrs {
                let comp = cut
                    .connected_components()
                    .into_iter()
                    .find(|c| c.contains(&side))
                    .unwrap();
                let mut keep = comp;
                keep.push(v);
                keep.sort_unstable();
                let mut edges = Vec::new();
                for (a, b) in t.graph.edges() {
                    let crosses_v = a == v || b == v;
                    if crosses_v && !(a == side || b == side) {
                        continue;
                    }
                    if keep.binary_search(&a).is_ok() && keep.binary_search(&b).is_ok() {
                        edges.push((a, b));
                    }
                }
                let sub = SimpleGraph::new(t.n(), edges).unwrap();
                let (g, map) = sub.induced_subgraph(&keep);
                let labels = map.iter().map(|&m| piece.labels[m - 1]).collect();
                stack.push(LabeledTree {
                    tree: Tree::new(g).expect("split piece is a tree"),
                    labels,
                });
            }
        }
        done.sort_by_key(|p| *p.labels.iter().min().unwrap());
        done
    }
}

/// Decodes a Pruefer sequence (`n-2` labels in `1..=n`, `n >= 2`) into the
/// labeled tree it encodes.
pub fn prufer_decode(seq: &[usize], n: usize) -> Result<Tree, GraphError> {
    assert!(n >= 2, "pruefer codes exist for n >= 2");
    assert_eq!(seq.len(), n - 2, "sequence length must be n-2");
    for &a in seq {
        if a == 0 || a > n {
            return Err(GraphError::LabelOutOfRange(a, n));
        }
    }
    let mut degree = vec![1usize; n + 1];
    for &a in seq {
        degree[a] += 1;
    }
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (1..=n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &a in seq {
        let std::cmp::Reverse(leaf) = leaves.pop().expect("leaf available");
        edges.push((leaf, a));
        degree[leaf] -= 1;
        degree[a] -= 1;
        if degree[a] == 1 {
            leaves.push(std::cmp::Reverse(a));
        }
    }
    let std::cmp::Reverse(u) = leaves.pop().unwrap();
    let std::cmp::Reverse(v) = leaves.pop().unwrap();
    edges.push((u, v));
    Tree::new(SimpleGraph::new(n, edges)?)
}

/// Encodes a tree on `n >= 2` vertices as its Pruefer sequence (inverse of
/// [`prufer_decode`]).
pub fn prufer_encode(t: &Tree) -> Vec<usize> {
    let n = t.n();
    assert!(n >= 2);
    let mut degree: Vec<usize> = (0..=n)
        .map(|v| if v == 0 { 0 } else { t.degree(v) })
        .collect();
    let mut adj: Vec<std::collections::BTreeSet<usize>> = (0..=n)
        .map(|v| {
            if v == 0 {
                Default::default()
            } else {
                t.graph().neighbors(v).clone()
            }
        })
        .collect();
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (1..=n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    let mut seq = Vec::with_capacity(n - 2);
    for _ in 0..n - 2 {
        let std::cmp::Reverse(leaf) = leaves.pop().unwrap();
        let &parent = adj[leaf].iter().next().unwrap();
        seq.push(parent);
        adj[parent].remove(&leaf);
        degree[parent] -= 1;
        degree[leaf] -= 1;
        if degree[parent] == 1 {
            leaves.push(std::cmp::Reverse(parent));
        }
    }
    seq
}

/// Uniform random labeled tree on `n` vertices, deterministic per seed.
pub fn random_tree(n: usize, seed: u64) -> Tree {
    assert!(n >= 1);
    if n == 1 {
        return Tree::new(SimpleGraph::new(1, []).unwrap()).unwrap();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n.saturating_sub(2))
        .map(|_| rng.random_range(1..=n))
        .collect();
    prufer_decode(&seq, n).unwrap()
}

/// All `n^(n-2)` labeled trees on `n >= 2` vertices, via Pruefer sequences.
pub fn all_trees(n: usize) -> impl Iterator<Item = Tree> {
    assert!(n >= 2);
    let total: u64 = if n == 2 {
        1
    } else {
        (n as u64).pow(n as u32 - 2)
    };
    (0..total).map(move |code| {
        let mut seq = vec![0usize; n - 2];
        let mut c = code;
        for slot in seq.iter_mut() {
            *slot = (c % n as u64) as usize + 1;
            c /= n as u64;
        }
        prufer_decode(&seq, n).unwrap()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{path_graph, star_graph};

    fn path_tree(n: usize) -> Tree {
        Tree::new(path_graph(n)).unwrap()
    }

    #[test]
    fn tree_validation() {
        assert!(Tree::new(path_graph(4)).is_ok());
        assert!(Tree::new(crate::graph::complete_graph(3)).is_err());
        let disconnected = path_graph(4).delete_edge(2, 3);
        assert!(Tree::new(disconnected).is_err());
    }

    #[test]
    fn spine_of_path_and_star() {
        let s = path_tree(4).spine();
        assert_eq!(s.length, 3);
        assert_eq!(s.vertices, vec![1, 2, 3, 4]);
        let s = Tree::new(star_graph(3)).unwrap().spine();
        assert_eq!(s.length, 2);
        assert_eq!(s.vertices, vec![2, 1, 3]);
    }

    #[test]
    fn spine_tie_break_is_lexicographic() {
        // two diametral pairs: (2,4) through 1-3 and (2,5), (4,5)...
        let g = SimpleGraph::new(5, [(1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        let s = Tree::new(g).unwrap().spine();
        assert_eq!(s.length, 3);
        assert_eq!(s.vertices, vec![2, 1, 3, 4]);
    }

    #[test]
    fn spine_single_vertex() {
        let t = Tree::new(SimpleGraph::new(1, []).unwrap()).unwrap();
        assert_eq!(
            t.spine(),
            SpinePath {
                vertices: vec![1],
                length: 0
            }
        );
    }

    #[test]
    fn split_p4_into_three_edges() {
        let pieces = path_tree(4).split_at_degree_two();
        assert_eq!(pieces.len(), 3);
        for p in &pieces {
            assert_eq!(p.tree.n(), 2);
        }
        let labels: Vec<Vec<usize>> = pieces.iter().map(|p| p.labels.clone()).collect();
        assert_eq!(labels, vec![vec![1, 2], vec![2, 3], vec![3, 4]]);
    }

    #[test]
    fn split_leaves_star_alone() {
        let pieces = Tree::new(star_graph(3)).unwrap().split_at_degree_two();
        assert_eq!(pieces.len(), 1);
        assert_eq!(pieces[0].tree.n(), 4);
    }

    #[test]
    fn split_piece_count_matches_degree_two_count() {
        // spider with three legs of length 2: three degree-2 vertices
        let g = SimpleGraph::new(7, [(1, 2), (2, 3), (1, 4), (4, 5), (1, 6), (6, 7)]).unwrap();
        let pieces = Tree::new(g).unwrap().split_at_degree_two();
        assert_eq!(pieces.len(), 4);
        let sizes: Vec<usize> = pieces.iter().map(|p| p.tree.n()).collect();
        let mut sorted = sizes.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![2, 2, 2, 4]);
    }

    #[test]
    fn prufer_decode_star() {
        let t = prufer_decode(&[1, 1], 4).unwrap();
        assert_eq!(t.graph(), &star_graph(3));
    }

    #[test]
    fn prufer_round_trip_exhaustive_n5() {
        for t in all_trees(5) {
            let seq = prufer_encode(&t);
            let back = prufer_decode(&seq, 5).unwrap();
            assert_eq!(&back, &t);
        }
    }

    #[test]
    fn random_tree_deterministic() {
        let a = random_tree(9, 42);
        let b = random_tree(9, 42);
        assert_eq!(a, b);
        assert_ne!(random_tree(9, 43), a);
    }

    #[test]
    fn all_trees_counts() {
        assert_eq!(all_trees(2).count(), 1);
        assert_eq!(all_trees(3).count(), 3);
        assert_eq!(all_trees(4).count(), 16);
        assert_eq!(all_trees(5).count(), 125);
    }
}
