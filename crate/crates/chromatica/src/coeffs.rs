//! Combinatorial formulas for the four leading coefficients of a chromatic
//! polynomial, driven by counts of small subgraph patterns: triangles,
//! 4-cycles, 4-cliques and diamonds (K4 minus an edge).
//!
//! Counts are of not-necessarily-induced subgraphs: an occurrence is a
//! vertex subset together with an edge subset forming the pattern. The
//! coefficient cross-check against the expanded polynomial is what pins this
//! reading down.

use num_bigint::BigInt;

use crate::graph::Graph;

/// Pattern counts feeding the coefficient formulas.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PatternCounts {
    /// Edge count of the graph.
    pub edges: u64,
    /// Subgraphs isomorphic to the triangle.
    pub triangles: u64,
    /// Subgraphs isomorphic to the 4-cycle.
    pub four_cycles: u64,
    /// Subgraphs isomorphic to the 4-clique.
    pub cliques4: u64,
    /// Subgraphs isomorphic to the diamond (4-clique minus one edge).
    pub diamonds: u64,
}

/// Count the patterns by exhaustive enumeration over 3- and 4-vertex
/// subsets.
///
/// Per 4-subset: a 4-cycle occurrence is one of the three Hamiltonian cyclic
/// orders with all four edges present; a 4-clique needs all six pairs; a
/// diamond occurrence is a choice of one pair as the missing edge with the
/// other five present (so an induced 4-clique hosts six diamonds, an induced
/// diamond exactly one).
pub fn count_patterns(g: &Graph) -> PatternCounts {
    let n = g.vertex_count();
    let mut triangles = 0u64;
    for a in 0..n {
        for b in a + 1..n {
            if !g.has_edge(a, b) {
                continue;
            }
            for c in b + 1..n {
                if g.has_edge(a, c) && g.has_edge(b, c) {
                    triangles += 1;
                }
            }
        }
    }

    let mut four_cycles = 0u64;
    let mut cliques4 = 0u64;
    let mut diamonds = 0u64;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let quad = [a, b, c, d];
                    // The three cyclic orders of four vertices.
                    let cycles = [
                        [(a, b), (b, c), (c, d), (d, a)],
                        [(a, b), (b, d), (d, c), (c, a)],
                        [(a, c), (c, b), (b, d), (d, a)],
                    ];
                    for cyc in &cycles {
                        if cyc.iter().all(|&(u, v)| g.has_edge(u, v)) {
                            four_cycles += 1;
                        }
                    }
                    let pairs: Vec<(usize, usize)> = (0..4)
                        .flat_map(|i| (i + 1..4).map(move |j| (quad[i], quad[j])))
                        .collect();
                    let present = pairs.iter().filter(|&&(u, v)| g.has_edge(u, v)).count();
                    if present == 6 {
                        cliques4 += 1;
                    }
                    for &(u, v) in &pairs {
                        if pairs
                            .iter()
                            .all(|&(x, y)| (x, y) == (u, v) || g.has_edge(x, y))
                        {
                            diamonds += 1;
                        }
                    }
                }
            }
        }
    }
    PatternCounts {
        edges: g.edge_count() as u64,
        triangles,
        four_cycles,
        cliques4,
        diamonds,
    }
}

fn binomial(n: u64, k: u64) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * (n.saturating_sub(i)) / (i + 1);
    }
    if n < k {
        BigInt::from(0)
    } else {
        acc
    }
}

/// The coefficients of `t^n, t^(n-1), t^(n-2), t^(n-3)` of the chromatic
/// polynomial, from the pattern counts alone:
///
/// `1`, `-m`, `C(m,2) - triangles`,
/// `-[C(m,3) - (m-2) triangles - four_cycles - cliques4 + diamonds]`.
///
/// Returns only the prefix that exists for small `n` (degree `n`, constant
/// term lowest).
pub fn leading_coefficients(g: &Graph) -> Vec<BigInt> {
    let n = g.vertex_count() as u64;
    let c = count_patterns(g);
    let m = c.edges;
    let full = [
        BigInt::from(1),
        BigInt::from(-(m as i64)),
        binomial(m, 2) - c.triangles,
        -(binomial(m, 3) - BigInt::from((m as i64 - 2) * c.triangles as i64)
            - c.four_cycles
            - c.cliques4
            + c.diamonds),
    ];
    full.into_iter().take((n as usize) + 1).take(4).collect()
}
