//! Exact canonical forms for graph isomorphism, used as memoization keys.
//!
//! The key must be collision-free: a false merge would silently corrupt a
//! memoized polynomial, and a false split only costs time. So this is not a
//! hash. Iterative color refinement narrows the candidate orderings, and a
//! backtracking search over the remaining choices emits the
//! lexicographically minimal adjacency encoding. Two graphs get equal keys
//! exactly when they are isomorphic.

use crate::graph::Graph;

/// Opaque isomorphism-complete key. Equal iff the graphs are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonKey(Vec<u8>);

impl CanonKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

/// Refine vertex colors until stable.
///
/// Each round recolors by the pair (old color, sorted multiset of neighbor
/// colors) and renumbers the classes canonically by sorting the signatures,
/// so colors never depend on vertex labels. The partition only ever splits;
/// a round that keeps the class count is a fixed point.
fn refine(adj: &[Vec<usize>], colors: &mut [usize]) {
    let n = colors.len();
    loop {
        let before = distinct(colors);
        let mut sigs: Vec<(usize, Vec<usize>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut nc: Vec<usize> = adj[v].iter().map(|&u| colors[u]).collect();
            nc.sort_unstable();
            sigs.push((colors[v], nc));
        }
        let mut keys = sigs.clone();
        keys.sort();
        keys.dedup();
        for (v, sig) in sigs.iter().enumerate() {
            colors[v] = keys.binary_search(sig).unwrap();
        }
        if distinct(colors) == before {
            return;
        }
    }
}

fn distinct(colors: &[usize]) -> usize {
    let mut seen = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// Pack the upper-triangle adjacency bits of the graph under the given
/// position order (`perm[p]` = vertex at position `p`), row major, MSB first.
fn encode(adjmat: &[Vec<bool>], perm: &[usize]) -> Vec<u8> {
    let n = perm.len();
    let bits = n * (n - 1) / 2;
    let mut out = vec![0u8; (bits + 7) / 8];
    let mut idx = 0;
    for p in 0..n {
        for q in p + 1..n {
            if adjmat[perm[p]][perm[q]] {
                out[idx / 8] |= 0x80 >> (idx % 8);
            }
            idx += 1;
        }
    }
    out
}

fn search(adj: &[Vec<usize>], adjmat: &[Vec<bool>], colors: Vec<usize>, best: &mut Option<Vec<u8>>) {
    let n = colors.len();
    let mut colors = colors;
    refine(adj, &mut colors);

    if distinct(&colors) == n {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.sort_by_key(|&v| colors[v]);
        let bytes = encode(adjmat, &perm);
        if best.as_ref().map_or(true, |b| bytes < *b) {
            *best = Some(bytes);
        }
        return;
    }

    // Individualize every member of the first non-singleton class in turn.
    let mut counts = vec![0usize; n];
    for &c in &colors {
        counts[c] += 1;
    }
    let target = (0..n).find(|&c| counts[c] >= 2).expect("non-discrete");
    for v in 0..n {
        if colors[v] == target {
            let mut next = colors.clone();
            next[v] = usize::MAX;
            search(adj, adjmat, next, best);
        }
    }
}

/// Compute the canonical key of a graph.
///
/// Cost grows with the automorphism group, so callers memoizing
/// deletion-contraction only invoke this below a size threshold.
pub fn canonical_key(g: &Graph) -> CanonKey {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut adjmat = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        adjmat[u][v] = true;
        adjmat[v][u] = true;
    }
    let mut best = None;
    search(&adj, &adjmat, vec![0; n], &mut best);
    let mut bytes = Vec::with_capacity(4 + n * n / 16 + 1);
    bytes.extend_from_slice(&(n as u32).to_be_bytes());
    bytes.extend_from_slice(&best.expect("at least one leaf"));
    CanonKey(bytes)
}
