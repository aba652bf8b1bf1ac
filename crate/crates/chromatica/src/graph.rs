//! Simple undirected graphs on vertices `0..n` with the structural queries
//! the engine needs: deletion, contraction, components, bridges and cut
//! vertices, induced subgraphs, and the path-intersecting test.
//!
//! Graphs are immutable after construction; every operation returns a new
//! value, so sharing across threads is safe.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// A simple graph: no loops, no parallel edges, endpoints below `n`.
///
/// Edges are stored as ordered pairs `(u, v)` with `u < v` in a `BTreeSet`,
/// so iteration order is always lexicographic and computations are
/// reproducible.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// Build a graph on `n >= 1` vertices. Loops are rejected; duplicate
    /// edges collapse (set semantics).
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        if n == 0 {
            return Err(Error::Domain("graph must have at least one vertex".into()));
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidEdge(u, v));
            }
            if u >= n {
                return Err(Error::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v, n));
            }
            set.insert(ordered(u, v));
        }
        Ok(Graph { n, edges: set })
    }

    /// Edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Result<Graph> {
        Graph::new(n, [])
    }

    /// Complete graph `K_n`, `n >= 1`.
    pub fn complete(n: usize) -> Result<Graph> {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, edges)
    }

    /// Path on `n` vertices: `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Result<Graph> {
        Graph::new(n, (1..n).map(|v| (v - 1, v)))
    }

    /// Cycle on `n >= 3` vertices: `0 - 1 - ... - n-1 - 0`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::Domain(format!("cycle needs at least 3 vertices, got {n}")));
        }
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Graph::new(n, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order, each as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.contains(&ordered(u, v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Sorted adjacency lists.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Same vertex set, edge set minus `{u, v}`.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::EdgeAbsent(u, v));
        }
        let mut edges = self.edges.clone();
        edges.remove(&ordered(u, v));
        Ok(Graph { n: self.n, edges })
    }

    /// Contract the edge `{u, v}`: the two endpoints merge, parallel edges
    /// collapse, loops are discarded.
    ///
    /// Relabeling is deterministic: with `u < v`, vertex `v` is removed,
    /// surviving vertices above `v` shift down by one, and the merged vertex
    /// keeps label `u`.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::EdgeAbsent(u, v));
        }
        let (u, v) = ordered(u, v);
        let relabel = |x: usize| -> usize {
            if x == v {
                u
            } else if x > v {
                x - 1
            } else {
                x
            }
        };
        let mut edges = BTreeSet::new();
        for &(a, b) in &self.edges {
            if (a, b) == (u, v) {
                continue;
            }
            let (a, b) = (relabel(a), relabel(b));
            if a != b {
                edges.insert(ordered(a, b));
            }
        }
        Ok(Graph { n: self.n - 1, edges })
    }

    /// Add the new edge `{u, v}`.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u == v || self.has_edge(u, v) {
            return Err(Error::InvalidEdge(u, v));
        }
        if u >= self.n {
            return Err(Error::VertexOutOfRange(u, self.n));
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange(v, self.n));
        }
        let mut edges = self.edges.clone();
        edges.insert(ordered(u, v));
        Ok(Graph { n: self.n, edges })
    }

    /// Connected components as `(sorted vertex list, induced graph relabeled
    /// to 0..k)`, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<(Vec<usize>, Graph)> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            seen[start] = true;
            let mut verts = Vec::new();
            while let Some(v) = stack.pop() {
                verts.push(v);
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            verts.sort_unstable();
            let rank = |x: usize| verts.binary_search(&x).unwrap();
            let edges: Vec<_> = self
                .edges
                .iter()
                .filter(|&&(a, _)| verts.binary_search(&a).is_ok())
                .map(|&(a, b)| (rank(a), rank(b)))
                .collect();
            let g = Graph::new(verts.len(), edges).expect("component edges are valid");
            out.push((verts, g));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// Whether `u` and `v` lie in the same component.
    pub fn same_component(&self, u: usize, v: usize) -> bool {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut stack = vec![u];
        seen[u] = true;
        while let Some(x) = stack.pop() {
            if x == v {
                return true;
            }
            for &w in &adj[x] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        false
    }

    /// Whether `u` and `v` are still connected after removing vertex `w`.
    pub(crate) fn connected_avoiding(&self, u: usize, v: usize, w: usize) -> bool {
        if u == w || v == w {
            return false;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        seen[w] = true;
        let mut stack = vec![u];
        seen[u] = true;
        while let Some(x) = stack.pop() {
            if x == v {
                return true;
            }
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        false
    }

    /// Cut vertices: removal increases the number of components.
    pub fn cut_vertices(&self) -> BTreeSet<usize> {
        self.lowpoint().0
    }

    /// Bridges: edges whose removal increases the number of components.
    pub fn bridges(&self) -> BTreeSet<(usize, usize)> {
        self.lowpoint().1
    }

    /// One lowpoint DFS computing cut vertices and bridges together.
    fn lowpoint(&self) -> (BTreeSet<usize>, BTreeSet<(usize, usize)>) {
        struct State<'a> {
            adj: &'a [Vec<usize>],
            disc: Vec<usize>,
            low: Vec<usize>,
            timer: usize,
            cuts: BTreeSet<usize>,
            bridges: BTreeSet<(usize, usize)>,
        }
        const UNSEEN: usize = usize::MAX;
        fn dfs(s: &mut State, v: usize, parent: usize) {
            s.disc[v] = s.timer;
            s.low[v] = s.timer;
            s.timer += 1;
            let mut children = 0usize;
            for &w in &s.adj[v] {
                // Simple graph: the parent appears at most once.
                if w == parent {
                    continue;
                }
                if s.disc[w] == UNSEEN {
                    children += 1;
                    dfs(s, w, v);
                    s.low[v] = s.low[v].min(s.low[w]);
                    if s.low[w] > s.disc[v] {
                        s.bridges.insert(ordered(v, w));
                    }
                    if parent != UNSEEN && s.low[w] >= s.disc[v] {
                        s.cuts.insert(v);
                    }
                } else {
                    s.low[v] = s.low[v].min(s.disc[w]);
                }
            }
            if parent == UNSEEN && children >= 2 {
                s.cuts.insert(v);
            }
        }
        let adj = self.adjacency();
        let mut state = State {
            adj: &adj,
            disc: vec![UNSEEN; self.n],
            low: vec![0; self.n],
            timer: 0,
            cuts: BTreeSet::new(),
            bridges: BTreeSet::new(),
        };
        for v in 0..self.n {
            if state.disc[v] == UNSEEN {
                dfs(&mut state, v, UNSEEN);
            }
        }
        (state.cuts, state.bridges)
    }

    /// Induced subgraph on a vertex subset.
    pub fn induced_subgraph(&self, vertices: &BTreeSet<usize>) -> Result<Subgraph> {
        for &v in vertices {
            if v >= self.n {
                return Err(Error::VertexOutOfRange(v, self.n));
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| vertices.contains(&a) && vertices.contains(&b))
            .copied()
            .collect();
        Ok(Subgraph {
            vertices: vertices.clone(),
            edges,
        })
    }

    /// `m == n - 1` on a connected graph; includes the single vertex.
    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.n && self.is_connected()
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * (self.n - 1) / 2
    }

    /// Connected and 2-regular on at least 3 vertices.
    pub fn is_cycle_graph(&self) -> bool {
        self.n >= 3
            && self.edges.len() == self.n
            && (0..self.n).all(|v| self.degree(v) == 2)
            && self.is_connected()
    }

    /// Isomorphism-exact canonical key; see [`crate::canon`].
    pub fn canonical_key(&self) -> crate::canon::CanonKey {
        crate::canon::canonical_key(self)
    }
}

/// A subgraph of some parent [`Graph`]: a vertex subset plus a subset of the
/// parent's edges inside it. Not necessarily induced.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subgraph {
    vertices: BTreeSet<usize>,
    edges: BTreeSet<(usize, usize)>,
}

impl Subgraph {
    /// Build and validate against the parent graph.
    pub fn new(
        parent: &Graph,
        vertices: impl IntoIterator<Item = usize>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Subgraph> {
        let vertices: BTreeSet<usize> = vertices.into_iter().collect();
        for &v in &vertices {
            if v >= parent.n {
                return Err(Error::VertexOutOfRange(v, parent.n));
            }
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            let e = ordered(u, v);
            if !parent.has_edge(u, v) {
                return Err(Error::EdgeAbsent(u, v));
            }
            if !vertices.contains(&e.0) || !vertices.contains(&e.1) {
                return Err(Error::Domain(format!(
                    "subgraph edge {{{u}, {v}}} has an endpoint outside the vertex set"
                )));
            }
            set.insert(e);
        }
        Ok(Subgraph { vertices, edges: set })
    }

    pub fn vertices(&self) -> &BTreeSet<usize> {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.contains(&ordered(u, v))
    }

    /// Whether this subgraph is valid inside `g`.
    pub fn is_subgraph_of(&self, g: &Graph) -> bool {
        self.vertices.iter().all(|&v| v < g.n)
            && self.edges.iter().all(|&(u, v)| g.has_edge(u, v))
    }

    /// The subgraph as a standalone graph, with the sorted-vertex relabeling
    /// used (`labels[i]` is the original label of new vertex `i`).
    pub fn to_graph(&self) -> (Graph, Vec<usize>) {
        let labels: Vec<usize> = self.vertices.iter().copied().collect();
        let rank = |x: usize| labels.binary_search(&x).unwrap();
        let g = Graph::new(
            labels.len(),
            self.edges.iter().map(|&(u, v)| (rank(u), rank(v))),
        )
        .expect("subgraph edges are valid");
        (g, labels)
    }
}

/// The path-intersecting test.
///
/// `h` is path-intersecting in `g` when for every pair of `h`-vertices that
/// are non-adjacent *in `h`* there is no `g`-path between them that avoids
/// every other `h`-vertex and every `h`-edge. This is the hypothesis that
/// makes the chromatic polynomial of `h` divide the one of `g`.
pub fn is_path_intersecting(g: &Graph, h: &Subgraph) -> bool {
    debug_assert!(h.is_subgraph_of(g));
    let verts: Vec<usize> = h.vertices.iter().copied().collect();
    let adj = g.adjacency();
    for (i, &u) in verts.iter().enumerate() {
        for &v in &verts[i + 1..] {
            if h.has_edge(u, v) {
                continue;
            }
            // BFS from u to v through vertices outside h, never using an
            // h-edge. Finding such a path refutes the property.
            let mut seen = vec![false; g.n];
            for &x in &verts {
                if x != u && x != v {
                    seen[x] = true;
                }
            }
            let mut stack = vec![u];
            seen[u] = true;
            let mut reached = false;
            'bfs: while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if h.has_edge(x, y) {
                        continue;
                    }
                    if y == v {
                        reached = true;
                        break 'bfs;
                    }
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            if reached {
                return false;
            }
        }
    }
    true
}
