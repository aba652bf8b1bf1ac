//! Chromatic polynomials: closed forms, memoized deletion-contraction,
//! subgraph-sum factorization, and the inductive spanning-tree procedure
//! that grows a graph one edge at a time.
//!
//! The engine prefers structure to recursion. Components split into a
//! product; trees, complete graphs and cycles are closed forms; everything
//! else recurses on delete/contract with memoization keyed by exact
//! canonical forms. The inductive procedure instead starts from a spanning
//! tree and folds in the remaining edges, using two quotient rules that
//! multiply and exact-divide — so a misclassified edge surfaces as a
//! division error rather than a wrong polynomial.

use std::collections::HashMap;

use crate::canon::{canonical_key, CanonKey};
use crate::error::{Error, Result};
use crate::graph::{is_path_intersecting, Graph, Subgraph};
use crate::poly::Poly;

/// The three graph families with product closed forms.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClosedFormFamily {
    /// Any tree on `n >= 1` vertices.
    Tree { vertices: usize },
    /// The complete graph on `n >= 2` vertices.
    Complete { vertices: usize },
    /// The cycle on `n >= 3` vertices.
    Cycle { vertices: usize },
}

/// Closed-form chromatic polynomial of a family member, expanded.
pub fn closed_form(family: ClosedFormFamily) -> Result<Poly> {
    match family {
        ClosedFormFamily::Tree { vertices } => {
            if vertices < 1 {
                return Err(Error::Domain("tree needs at least 1 vertex".into()));
            }
            Ok(tree_chromatic(vertices))
        }
        ClosedFormFamily::Complete { vertices } => {
            if vertices < 2 {
                return Err(Error::Domain("complete family needs at least 2 vertices".into()));
            }
            Ok(complete_chromatic(vertices))
        }
        ClosedFormFamily::Cycle { vertices } => {
            if vertices < 3 {
                return Err(Error::Domain("cycle needs at least 3 vertices".into()));
            }
            Ok(cycle_chromatic(vertices))
        }
    }
}

/// `t (t-1)^(n-1)`.
pub(crate) fn tree_chromatic(n: usize) -> Poly {
    &Poly::t() * &Poly::t_minus(1).pow(n - 1)
}

/// `t (t-1) (t-2) ... (t-(n-1))`.
pub(crate) fn complete_chromatic(n: usize) -> Poly {
    let mut p = Poly::one();
    for i in 0..n {
        p = &p * &Poly::t_minus(i as i64);
    }
    p
}

/// `t (t-1) * sum_{i=0}^{n-2} (-1)^i (t-1)^(n-2-i)`, the alternating form
/// that powers the edge-addition quotient rule.
pub(crate) fn cycle_chromatic(n: usize) -> Poly {
    &(&Poly::t() * &Poly::t_minus(1)) * &cycle_quotient_sum(n)
}

/// `sum_{i=0}^{n-2} (-1)^i (t-1)^(n-2-i)`; equals `chi(C_n) / (t(t-1))`.
fn cycle_quotient_sum(n: usize) -> Poly {
    let mut sum = Poly::zero();
    let tm1 = Poly::t_minus(1);
    for i in 0..=(n - 2) {
        let term = tm1.pow(n - 2 - i);
        sum = if i % 2 == 0 { &sum + &term } else { &sum - &term };
    }
    sum
}

/// Instrumentation accumulated by the engines.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct ComputationTrace {
    /// Engine invocations on (sub)graphs, including the top-level call.
    pub recursion_nodes: u64,
    /// Memoization cache hits.
    pub memo_hits: u64,
    /// Edge additions resolved by the bridge rule.
    pub bridge_rules: u64,
    /// Edge additions resolved by the minimal-cycle rule, any length.
    pub minimal_cycle_rules: u64,
    /// Edge additions that fell back to deletion-contraction.
    pub fallbacks: u64,
}

/// Tuning knobs for the deletion-contraction engine.
#[derive(Clone, Copy, Debug)]
pub struct EngineOptions {
    /// Memoize on canonical keys. Disable for a blind-recursion baseline.
    pub memoize: bool,
    /// Canonical keys are computed only at or below this vertex count;
    /// above it the exact-canonical-form cost outweighs the cache hits.
    pub memo_threshold: usize,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions {
            memoize: true,
            memo_threshold: 12,
        }
    }
}

struct Engine {
    opts: EngineOptions,
    memo: HashMap<CanonKey, Poly>,
    trace: ComputationTrace,
}

impl Engine {
    fn new(opts: EngineOptions) -> Self {
        Engine {
            opts,
            memo: HashMap::new(),
            trace: ComputationTrace::default(),
        }
    }

    fn run(&mut self, g: &Graph) -> Poly {
        self.trace.recursion_nodes += 1;
        let comps = g.connected_components();
        if comps.len() > 1 {
            let mut p = Poly::one();
            for (_, comp) in &comps {
                p = &p * &self.run(comp);
            }
            return p;
        }
        self.run_connected(g)
    }

    fn run_connected(&mut self, g: &Graph) -> Poly {
        let n = g.vertex_count();
        if g.edge_count() + 1 == n {
            return tree_chromatic(n);
        }
        if g.is_complete() {
            return complete_chromatic(n);
        }
        if g.is_cycle_graph() {
            return cycle_chromatic(n);
        }
        let key = if self.opts.memoize && n <= self.opts.memo_threshold {
            let key = canonical_key(g);
            if let Some(p) = self.memo.get(&key) {
                self.trace.memo_hits += 1;
                return p.clone();
            }
            Some(key)
        } else {
            None
        };
        let (u, v) = pick_edge(g);
        let deleted = self.run(&g.delete_edge(u, v).expect("chosen edge exists"));
        let contracted = self.run(&g.contract_edge(u, v).expect("chosen edge exists"));
        let p = &deleted - &contracted;
        if let Some(key) = key {
            self.memo.insert(key, p.clone());
        }
        p
    }
}

/// Edge in the most triangles, breaking ties lexicographically. Contracting
/// such an edge collapses the most parallel pairs.
fn pick_edge(g: &Graph) -> (usize, usize) {
    let adj = g.adjacency();
    let mut best = (0, (0, 0));
    let mut found = false;
    for (u, v) in g.edges() {
        let common = adj[u].iter().filter(|w| adj[v].contains(w)).count();
        if !found || common > best.0 {
            best = (common, (u, v));
            found = true;
        }
    }
    debug_assert!(found, "pick_edge requires at least one edge");
    best.1
}

/// The chromatic polynomial of `g`, via the default engine.
pub fn chromatic(g: &Graph) -> Poly {
    chromatic_traced(g, EngineOptions::default()).0
}

/// Deletion-contraction with explicit options and instrumentation.
pub fn chromatic_traced(g: &Graph, opts: EngineOptions) -> (Poly, ComputationTrace) {
    let mut engine = Engine::new(opts);
    let p = engine.run(g);
    (p, engine.trace)
}

/// How a new edge can be folded into a graph whose polynomial is known.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EdgeAdditionRule {
    /// The endpoints lie in different components; the new edge closes no
    /// cycle. Multiplies by `(t-1)/t`.
    Bridge,
    /// The new edge closes a single minimal cycle of length `m` through a
    /// chain of separating vertices. Multiplies by `chi(C_m)/(t(t-1)^(m-1))`.
    MinimalCycle(usize),
    /// No quotient rule applies; recompute by deletion-contraction.
    Fallback,
}

/// Classify the addition of the new edge `{u, v}` to `g`.
///
/// `Bridge` when the endpoints are in different components. `MinimalCycle(m)`
/// when every internal vertex of some `u`-`v` path individually separates
/// `u` from `v` and the path is induced: those vertices are then exactly the
/// vertices common to every `u`-`v` path, the path together with the new
/// edge forms the unique minimal cycle `C_m`, and the quotient rule is valid.
/// Everything else is `Fallback`.
pub fn classify_edge_addition(g: &Graph, u: usize, v: usize) -> Result<EdgeAdditionRule> {
    let n = g.vertex_count();
    if u >= n {
        return Err(Error::VertexOutOfRange(u, n));
    }
    if v >= n {
        return Err(Error::VertexOutOfRange(v, n));
    }
    if u == v || g.has_edge(u, v) {
        return Err(Error::InvalidEdge(u, v));
    }
    if !g.same_component(u, v) {
        return Ok(EdgeAdditionRule::Bridge);
    }

    // Vertices whose removal separates u from v. Each lies on every u-v
    // path, so they are linearly ordered along any one of them.
    let separators: Vec<usize> = (0..n)
        .filter(|&w| w != u && w != v && !g.connected_avoiding(u, v, w))
        .collect();
    if separators.is_empty() {
        return Ok(EdgeAdditionRule::Fallback);
    }

    let path = bfs_path(g, u, v).expect("u and v are connected");
    let pos: HashMap<usize, usize> = path.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let mut chain = separators.clone();
    if chain.iter().any(|s| !pos.contains_key(s)) {
        // Cannot happen: a separator lies on every path.
        return Ok(EdgeAdditionRule::Fallback);
    }
    chain.sort_by_key(|s| pos[s]);

    // The candidate cycle is u - chain... - v plus the new edge. It must be
    // an actual induced path of g.
    let mut cycle_vertices = Vec::with_capacity(chain.len() + 2);
    cycle_vertices.push(u);
    cycle_vertices.extend_from_slice(&chain);
    cycle_vertices.push(v);
    for w in cycle_vertices.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return Ok(EdgeAdditionRule::Fallback);
        }
    }
    for (i, &a) in cycle_vertices.iter().enumerate() {
        for &b in cycle_vertices.iter().skip(i + 2) {
            if g.has_edge(a, b) {
                return Ok(EdgeAdditionRule::Fallback);
            }
        }
    }

    // Cross-check: the closed cycle must be path-intersecting in g + {u,v}.
    let extended = g.add_edge(u, v)?;
    let mut cycle_edges: Vec<(usize, usize)> =
        cycle_vertices.windows(2).map(|w| (w[0], w[1])).collect();
    cycle_edges.push((u, v));
    let h = Subgraph::new(&extended, cycle_vertices.iter().copied(), cycle_edges)?;
    if !is_path_intersecting(&extended, &h) {
        debug_assert!(false, "separating chain produced a non-path-intersecting cycle");
        return Ok(EdgeAdditionRule::Fallback);
    }

    Ok(EdgeAdditionRule::MinimalCycle(chain.len() + 2))
}

fn bfs_path(g: &Graph, u: usize, v: usize) -> Option<Vec<usize>> {
    let adj = g.adjacency();
    let mut parent = vec![usize::MAX; g.vertex_count()];
    let mut queue = std::collections::VecDeque::from([u]);
    parent[u] = u;
    while let Some(x) = queue.pop_front() {
        if x == v {
            let mut path = vec![v];
            let mut cur = v;
            while cur != u {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &y in &adj[x] {
            if parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

/// Apply a quotient rule to a known polynomial.
fn rule_quotient(chi: &Poly, rule: EdgeAdditionRule) -> Result<Poly> {
    match rule {
        EdgeAdditionRule::Bridge => (chi * &Poly::t_minus(1)).exact_div(&Poly::t()),
        EdgeAdditionRule::MinimalCycle(m) => {
            let numer = chi * &cycle_chromatic(m);
            let denom = &Poly::t() * &Poly::t_minus(1).pow(m - 1);
            numer.exact_div(&denom)
        }
        EdgeAdditionRule::Fallback => Err(Error::Domain(
            "no quotient rule for a fallback edge".into(),
        )),
    }
}

/// Add the edge `{u, v}` to `g`, producing the extended graph, its
/// chromatic polynomial, and the rule that was used.
///
/// `chi` must be the chromatic polynomial of `g` (checked in debug builds).
/// Both quotient rules go through [`Poly::exact_div`], so a misclassification
/// cannot corrupt the result silently: it raises [`Error::NonDivisible`].
pub fn extend_by_edge(
    g: &Graph,
    chi: &Poly,
    u: usize,
    v: usize,
) -> Result<(Graph, Poly, EdgeAdditionRule)> {
    debug_assert_eq!(chi, &chromatic(g), "caller must supply chi(g)");
    let rule = classify_edge_addition(g, u, v)?;
    let extended = g.add_edge(u, v)?;
    let poly = match rule {
        EdgeAdditionRule::Fallback => chromatic(&extended),
        other => rule_quotient(chi, other)?,
    };
    Ok((extended, poly, rule))
}

/// Grow each component from a spanning tree, folding in the remaining edges
/// greedily: any edge classified `Bridge` or `MinimalCycle` is applied by
/// its quotient rule; when no remaining edge qualifies, one edge is added by
/// full deletion-contraction and the scan resumes. The result equals
/// [`chromatic`] for every graph; the trace records how much of the work the
/// rules absorbed.
pub fn inductive_chromatic(g: &Graph) -> (Poly, ComputationTrace) {
    let mut trace = ComputationTrace {
        recursion_nodes: 1,
        ..ComputationTrace::default()
    };
    let mut result = Poly::one();
    for (_, comp) in g.connected_components() {
        result = &result * &inductive_component(&comp, &mut trace);
    }
    (result, trace)
}

fn inductive_component(g: &Graph, trace: &mut ComputationTrace) -> Poly {
    let n = g.vertex_count();
    let tree_edges = bfs_spanning_tree(g);
    let mut current = Graph::new(n, tree_edges.iter().copied()).expect("tree edges valid");
    let mut chi = tree_chromatic(n);
    let mut remaining: Vec<(usize, usize)> = g
        .edges()
        .filter(|e| !tree_edges.contains(e))
        .collect();

    while !remaining.is_empty() {
        let hit = remaining.iter().enumerate().find_map(|(i, &(u, v))| {
            match classify_edge_addition(&current, u, v).expect("valid new edge") {
                EdgeAdditionRule::Fallback => None,
                rule => Some((i, u, v, rule)),
            }
        });
        match hit {
            Some((i, u, v, rule)) => {
                match rule {
                    EdgeAdditionRule::Bridge => trace.bridge_rules += 1,
                    EdgeAdditionRule::MinimalCycle(_) => trace.minimal_cycle_rules += 1,
                    EdgeAdditionRule::Fallback => unreachable!(),
                }
                chi = rule_quotient(&chi, rule).expect("rule quotient divides exactly");
                current = current.add_edge(u, v).expect("new edge");
                remaining.remove(i);
            }
            None => {
                let (u, v) = remaining.remove(0);
                current = current.add_edge(u, v).expect("new edge");
                let (p, sub) = chromatic_traced(&current, EngineOptions::default());
                chi = p;
                trace.fallbacks += 1;
                trace.recursion_nodes += sub.recursion_nodes;
                trace.memo_hits += sub.memo_hits;
            }
        }
    }
    chi
}

/// BFS spanning tree edge set (deterministic: ascending neighbor order).
fn bfs_spanning_tree(g: &Graph) -> std::collections::BTreeSet<(usize, usize)> {
    let adj = g.adjacency();
    let mut seen = vec![false; g.vertex_count()];
    let mut tree = std::collections::BTreeSet::new();
    let mut queue = std::collections::VecDeque::from([0usize]);
    seen[0] = true;
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                tree.insert(if x < y { (x, y) } else { (y, x) });
                queue.push_back(y);
            }
        }
    }
    tree
}

/// Glue two graphs along isomorphic induced subgraphs.
///
/// `s1` and `s2` are equal-length vertex lists; the map `s2[i] -> s1[i]`
/// must be an isomorphism of the induced subgraphs `g1[s1] -> g2[s2]`
/// (verified). Vertices of `g2` outside `s2` are appended after `g1`'s in
/// ascending order.
pub fn subgraph_sum(g1: &Graph, s1: &[usize], g2: &Graph, s2: &[usize]) -> Result<Graph> {
    if s1.len() != s2.len() {
        return Err(Error::NotIsomorphicUnderMap);
    }
    for &v in s1 {
        if v >= g1.vertex_count() {
            return Err(Error::VertexOutOfRange(v, g1.vertex_count()));
        }
    }
    for &v in s2 {
        if v >= g2.vertex_count() {
            return Err(Error::VertexOutOfRange(v, g2.vertex_count()));
        }
    }
    let distinct = |s: &[usize]| {
        let mut t = s.to_vec();
        t.sort_unstable();
        t.dedup();
        t.len() == s.len()
    };
    if !distinct(s1) || !distinct(s2) {
        return Err(Error::NotIsomorphicUnderMap);
    }
    for i in 0..s1.len() {
        for j in i + 1..s1.len() {
            if g1.has_edge(s1[i], s1[j]) != g2.has_edge(s2[i], s2[j]) {
                return Err(Error::NotIsomorphicUnderMap);
            }
        }
    }

    let n1 = g1.vertex_count();
    let mut map2 = vec![usize::MAX; g2.vertex_count()];
    for (i, &w) in s2.iter().enumerate() {
        map2[w] = s1[i];
    }
    let mut next = n1;
    for w in 0..g2.vertex_count() {
        if map2[w] == usize::MAX {
            map2[w] = next;
            next += 1;
        }
    }
    let edges = g1
        .edges()
        .chain(g2.edges().map(|(a, b)| (map2[a], map2[b])));
    Graph::new(next, edges)
}

/// Chromatic polynomial of a subgraph sum without building the glued graph:
/// `chi(g1) chi(g2) / chi(h1)`.
///
/// `correspondence` pairs each vertex of `h1` with its image in `h2` and
/// must be a subgraph isomorphism. Both gluing subgraphs must be
/// path-intersecting in their hosts — the operation refuses with
/// [`Error::HypothesisViolated`] otherwise, because the quotient then need
/// not even be a polynomial.
pub fn chromatic_of_sum(
    g1: &Graph,
    h1: &Subgraph,
    g2: &Graph,
    h2: &Subgraph,
    correspondence: &[(usize, usize)],
) -> Result<Poly> {
    if !h1.is_subgraph_of(g1) || !h2.is_subgraph_of(g2) {
        return Err(Error::Domain("gluing subgraph does not live in its host".into()));
    }
    let s1: Vec<usize> = correspondence.iter().map(|&(a, _)| a).collect();
    let s2: Vec<usize> = correspondence.iter().map(|&(_, b)| b).collect();
    let covers = |s: &[usize], sub: &Subgraph| {
        let mut t = s.to_vec();
        t.sort_unstable();
        t.dedup();
        t.len() == s.len()
            && t.len() == sub.vertices().len()
            && t.iter().all(|v| sub.contains_vertex(*v))
    };
    if !covers(&s1, h1) || !covers(&s2, h2) {
        return Err(Error::NotIsomorphicUnderMap);
    }
    for i in 0..s1.len() {
        for j in i + 1..s1.len() {
            if h1.has_edge(s1[i], s1[j]) != h2.has_edge(s2[i], s2[j]) {
                return Err(Error::NotIsomorphicUnderMap);
            }
        }
    }
    if !is_path_intersecting(g1, h1) {
        return Err(Error::HypothesisViolated(
            "gluing subgraph is not path-intersecting in the first graph".into(),
        ));
    }
    if !is_path_intersecting(g2, h2) {
        return Err(Error::HypothesisViolated(
            "gluing subgraph is not path-intersecting in the second graph".into(),
        ));
    }
    let (hg, _) = h1.to_graph();
    (&chromatic(g1) * &chromatic(g2)).exact_div(&chromatic(&hg))
}
