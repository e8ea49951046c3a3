//! Simple undirected graphs on vertex labels `1..=n`, with the pure edit
//! operations used by the regularity reductions.

use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex label {0} out of range 1..={1}")]
    LabelOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {{{0},{1}}} already present")]
    DuplicateEdge(usize, usize),
    #[error("graph is not a tree: {0}")]
    NotATree(String),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected `u v`, got {text:?}")]
    Malformed { line: usize, text: String },
    #[error("line {line}: bad vertex count {text:?}")]
    BadHeader { line: usize, text: String },
    #[error("line {line}: vertex labels are 1-indexed, got {label}")]
    ZeroLabel { line: usize, label: String },
    #[error("line {line}: label {label} exceeds declared vertex count {n}")]
    LabelTooLarge { line: usize, label: usize, n: usize },
    #[error("line {line}: self-loop at vertex {v}")]
    SelfLoop { line: usize, v: usize },
    #[error("empty input")]
    Empty,
}

/// Immutable simple graph. Vertices are `1..=n`; edges are stored as
/// ordered pairs `(u,v)` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    adj: Vec<BTreeSet<usize>>,
}

impl SimpleGraph {
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(GraphError::LabelOutOfRange(w, n));
                }
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Self::from_edge_set(n, set))
    }

    fn from_edge_set(n: usize, edges: BTreeSet<(usize, usize)>) -> Self {
        let mut adj = vec![BTreeSet::new(); n + 1];
        for &(u, v) in &edges {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        SimpleGraph { n, edges, adj }
    }

    /// Parses the edge-list format: an optional first line `vertices: <n>`,
    /// then one `u v` pair per line. `#` starts a comment; blank lines are
    /// skipped; labels are 1-indexed.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut declared: Option<usize> = None;
        let mut pairs: Vec<(usize, usize, usize)> = Vec::new(); // (u, v, line)
        let mut saw_content = false;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            if !saw_content && content.starts_with("vertices:") {
                saw_content = true;
                let rest = content["vertices:".len()..].trim();
                declared = Some(rest.parse().map_err(|_| ParseError::BadHeader {
                    line,
                    text: content.to_string(),
                })?);
                continue;
            }
            saw_content = true;
            let mut it = content.split_whitespace();
            let (a, b, extra) = (it.next(), it.next(), it.next());
            let (a, b) = match (a, b, extra) {
                (Some(a), Some(b), None) => (a, b),
                _ => {
                    return Err(ParseError::Malformed {
                        line,
                        text: content.to_string(),
                    })
                }
            };
            let parse_label = |s: &str| -> Result<usize, ParseError> {
                let v: usize = s.parse().map_err(|_| ParseError::Malformed {
                    line,
                    text: content.to_string(),
                })?;
                if v == 0 {
                    return Err(ParseError::ZeroLabel {
                        line,
                        label: s.to_string(),
                    });
                }
                Ok(v)
            };
            let (u, v) = (parse_label(a)?, parse_label(b)?);
            if u == v {
                return Err(ParseError::SelfLoop { line, v: u });
            }
            pairs.push((u, v, line));
        }
        if !saw_content {
            return Err(ParseError::Empty);
        }
        let max_label = pairs.iter().map(|&(u, v, _)| u.max(v)).max().unwrap_or(0);
        let n = match declared {
            Some(n) => {
                for &(u, v, line) in &pairs {
                    let big = u.max(v);
                    if big > n {
                        return Err(ParseError::LabelTooLarge {
                            line,
                            label: big,
                            n,
                        });
                    }
                }
                n
            }
            None => max_label,
        };
        let set: BTreeSet<(usize, usize)> = pairs
            .iter()
            .map(|&(u, v, _)| (u.min(v), u.max(v)))
            .collect();
        Ok(Self::from_edge_set(n, set))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn closed_neighborhood(&self, v: usize) -> BTreeSet<usize> {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.n
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        for w in [u, v] {
            if w == 0 || w > self.n {
                return Err(GraphError::LabelOutOfRange(w, self.n));
            }
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        let mut edges = self.edges.clone();
        edges.insert((u.min(v), u.max(v)));
        Ok(Self::from_edge_set(self.n, edges))
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Self {
        let mut edges = self.edges.clone();
        edges.remove(&(u.min(v), u.max(v)));
        Self::from_edge_set(self.n, edges)
    }

    /// Removes every edge at `v`; the vertex itself stays (isolated), so
    /// labels and vertex count are preserved.
    pub fn delete_vertex(&self, v: usize) -> Self {
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|&(a, b)| a != v && b != v)
            .collect();
        Self::from_edge_set(self.n, edges)
    }

    /// Induced subgraph on `w`, relabeled to `1..=|w|`. The returned map
    /// sends new label `i` to `map[i-1]` in the original graph.
    pub fn induced_subgraph(&self, w: &[usize]) -> (Self, Vec<usize>) {
        let mut labels: Vec<usize> = w.to_vec();
        labels.sort_unstable();
        labels.dedup();
        let index = |v: usize| labels.binary_search(&v).ok().map(|i| i + 1);
        let mut edges = BTreeSet::new();
        for &(u, v) in &self.edges {
            if let (Some(a), Some(b)) = (index(u), index(v)) {
                edges.insert((a.min(b), a.max(b)));
            }
        }
        (Self::from_edge_set(labels.len(), edges), labels)
    }

    /// For a non-edge `e = {u,v}`: adds all edges `{k,l}` with `k,l` both in
    /// `N(u)` or both in `N(v)`, i.e. completes both open neighborhoods.
    pub fn g_e_completion(&self, e: (usize, usize)) -> Self {
        let mut edges = self.edges.clone();
        for a in [e.0, e.1] {
            let nb: Vec<usize> = self.adj[a].iter().copied().collect();
            for i in 0..nb.len() {
                for j in i + 1..nb.len() {
                    edges.insert((nb[i].min(nb[j]), nb[i].max(nb[j])));
                }
            }
        }
        Self::from_edge_set(self.n, edges)
    }

    /// Glues a complete graph `K_s` at `v`: `s-1` fresh vertices, all
    /// pairwise adjacent and adjacent to `v`. Requires `s >= 2`.
    pub fn attach_clique(&self, v: usize, s: usize) -> Self {
        assert!(s >= 2, "attach_clique needs s >= 2");
        assert!((1..=self.n).contains(&v));
        let mut edges = self.edges.clone();
        let mut members = vec![v];
        members.extend(self.n + 1..self.n + s);
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                edges.insert((members[i].min(members[j]), members[i].max(members[j])));
            }
        }
        Self::from_edge_set(self.n + s - 1, edges)
    }

    /// Glues a star `K_{1,s}` at `v` by identifying `v` with one of its
    /// leaves: a fresh center `c` adjacent to `v`, plus `s-1` fresh leaves
    /// on `c`. Requires `s >= 2`.
    pub fn attach_star_via_leaf(&self, v: usize, s: usize) -> Self {
        assert!(s >= 2, "attach_star_via_leaf needs s >= 2");
        assert!((1..=self.n).contains(&v));
        let c = self.n + 1;
        let mut edges = self.edges.clone();
        edges.insert((v.min(c), v.max(c)));
        for leaf in c + 1..c + s {
            edges.insert((c, leaf));
        }
        Self::from_edge_set(self.n + s, edges)
    }

    /// Glues `s` pendant edges and a clique `K_t` at `v` (`s >= 1`,
    /// `t >= 2`).
    pub fn attach_pendant_edges_and_clique(&self, v: usize, s: usize, t: usize) -> Self {
        assert!(s >= 1 && t >= 2);
        assert!((1..=self.n).contains(&v));
        let mut edges = self.edges.clone();
        for k in self.n + 1..=self.n + s {
            edges.insert((v.min(k), v.max(k)));
        }
        let base = self.n + s;
        let mut members = vec![v];
        members.extend(base + 1..base + t);
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                edges.insert((members[i].min(members[j]), members[i].max(members[j])));
            }
        }
        Self::from_edge_set(base + t - 1, edges)
    }

    /// The three graphs of the neighborhood-completion reduction at `v`:
    /// `completed` turns `N[v]` into a clique, `minus_v` drops `v`'s edges,
    /// and `reduced` drops `v` from the completed graph. All keep the vertex
    /// set (deleted vertices become isolated).
    pub fn ehh_transform(&self, v: usize) -> EhhTriple {
        let nb: Vec<usize> = self.closed_neighborhood(v).into_iter().collect();
        let mut edges = self.edges.clone();
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                edges.insert((nb[i].min(nb[j]), nb[i].max(nb[j])));
            }
        }
        let completed = Self::from_edge_set(self.n, edges);
        let minus_v = self.delete_vertex(v);
        let reduced = completed.delete_vertex(v);
        EhhTriple {
            completed,
            minus_v,
            reduced,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n + 1];
        let mut comps = Vec::new();
        for start in 1..=self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            let mut queue = vec![start];
            seen[start] = true;
            while let Some(u) = queue.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// True when the graph has no cycle.
    pub fn is_forest(&self) -> bool {
        let comps = self.connected_components();
        self.edges.len() + comps.len() == self.n
    }

    /// BFS distances from `v`; `None` for unreachable vertices. Index 0 is
    /// unused.
    pub fn bfs_distances(&self, v: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n + 1];
        dist[v] = Some(0);
        let mut queue = std::collections::VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Edge-list text in the same format `parse` accepts.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("vertices: {}\n", self.n);
        for &(u, v) in &self.edges {
            out.push_str(&format!("{} {}\n", u, v));
        }
        out
    }
}

impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} edges={:?}", self.n, self.edges)
    }
}

#[derive(Debug, Clone)]
pub struct EhhTriple {
    pub completed: SimpleGraph,
    pub minus_v: SimpleGraph,
    pub reduced: SimpleGraph,
}

/// Path graph `1-2-...-n`.
pub fn path_graph(n: usize) -> SimpleGraph {
    SimpleGraph::new(n, (1..n).map(|i| (i, i + 1))).unwrap()
}

/// Star `K_{1,r}` with center 1 and leaves `2..=r+1`.
pub fn star_graph(r: usize) -> SimpleGraph {
    SimpleGraph::new(r + 1, (2..=r + 1).map(|i| (1, i))).unwrap()
}

/// Complete graph `K_t`.
pub fn complete_graph(t: usize) -> SimpleGraph {
    SimpleGraph::new(t, (1..=t).flat_map(|i| (i + 1..=t).map(move |j| (i, j)))).unwrap()
}
