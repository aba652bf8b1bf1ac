//! Independent brute-force oracles that validate every fast path: the
//! edge-subset expansion, direct coloring counts, bond-lattice Möbius sums,
//! and finite-field point counts. None of them share code with the engines
//! they check, and each refuses oversized input instead of running forever.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arrangement::{ProjLine, ProjLineArrangement};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::Poly;

/// Largest edge count accepted by [`whitney_chromatic`] (2^m subsets).
pub const WHITNEY_MAX_EDGES: usize = 25;
/// Largest vertex count accepted by [`BondLattice::build`].
pub const BOND_LATTICE_MAX_VERTICES: usize = 10;
/// Largest number of assignments accepted by the point-counting oracles.
pub const ENUMERATION_LIMIT: u128 = 100_000_000;

/// Edge-subset expansion: `sum over S subsets of E of (-1)^|S| t^c(S)`,
/// where `c(S)` counts the components of `(V, S)`.
pub fn whitney_chromatic(g: &Graph) -> Result<Poly> {
    let m = g.edge_count();
    if m > WHITNEY_MAX_EDGES {
        return Err(Error::TooLarge(format!(
            "{m} edges exceeds the {WHITNEY_MAX_EDGES}-edge subset-expansion limit"
        )));
    }
    let n = g.vertex_count();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut acc = vec![0i64; n + 1];
    let mut parent: Vec<usize> = Vec::with_capacity(n);
    for mask in 0u32..(1u32 << m) {
        parent.clear();
        parent.extend(0..n);
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut comps = n;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                if ru != rv {
                    parent[ru] = rv;
                    comps -= 1;
                }
            }
        }
        if mask.count_ones() % 2 == 0 {
            acc[comps] += 1;
        } else {
            acc[comps] -= 1;
        }
    }
    Ok(Poly::from_coeffs(acc.into_iter().map(BigInt::from).collect()))
}

/// Number of proper colorings of `g` with colors `0..k`, by direct
/// enumeration (partial colorings are abandoned at the first conflict).
pub fn coloring_count(g: &Graph, k: u64) -> Result<u64> {
    check_enumeration_size(k, g.vertex_count())?;
    let adj = g.adjacency();
    let mut colors = vec![0u64; g.vertex_count()];
    fn rec(adj: &[Vec<usize>], colors: &mut [u64], v: usize, k: u64) -> u64 {
        if v == colors.len() {
            return 1;
        }
        let mut total = 0;
        'next: for c in 0..k {
            for &w in &adj[v] {
                if w < v && colors[w] == c {
                    continue 'next;
                }
            }
            colors[v] = c;
            total += rec(adj, colors, v + 1, k);
        }
        total
    }
    Ok(rec(&adj, &mut colors, 0, k))
}

/// Number of points of `F_p^n` avoiding every hyperplane `x_i = x_j` of the
/// graphic arrangement: tuples with distinct coordinates across each edge.
pub fn fp_point_count(g: &Graph, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    check_enumeration_size(p, g.vertex_count())?;
    let adj = g.adjacency();
    let mut coords = vec![0u64; g.vertex_count()];
    fn rec(adj: &[Vec<usize>], coords: &mut [u64], i: usize, p: u64) -> u64 {
        if i == coords.len() {
            return 1;
        }
        let mut total = 0;
        'next: for x in 0..p {
            for &j in &adj[i] {
                if j < i && coords[j] == x {
                    continue 'next;
                }
            }
            coords[i] = x;
            total += rec(adj, coords, i + 1, p);
        }
        total
    }
    Ok(rec(&adj, &mut coords, 0, p))
}

fn check_enumeration_size(base: u64, exp: usize) -> Result<()> {
    let mut size: u128 = 1;
    for _ in 0..exp {
        size = size.saturating_mul(base.max(1) as u128);
        if size > ENUMERATION_LIMIT {
            return Err(Error::TooLarge(format!(
                "{base}^{exp} assignments exceed the enumeration limit"
            )));
        }
    }
    Ok(())
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// One element of the bond lattice: a partition of the vertices whose blocks
/// all induce connected subgraphs.
#[derive(Clone, Debug)]
pub struct BondElement {
    /// `block_id[v]` numbers the block of `v`; ids are smallest-member ranks.
    pub block_id: Vec<usize>,
    /// Number of blocks = dimension of the corresponding subspace.
    pub blocks: usize,
    /// Möbius value from the bottom of the lattice.
    pub mu: i64,
}

/// The intersection lattice of a graphic arrangement, realized as vertex
/// partitions with connected blocks ordered by refinement. The bottom is the
/// all-singletons partition (the whole space, `mu = 1`); every other Möbius
/// value comes from the defining recursion `mu(X) = -sum_{Y < X} mu(Y)`.
#[derive(Clone, Debug)]
pub struct BondLattice {
    vertex_count: usize,
    elements: Vec<BondElement>,
}

impl BondLattice {
    pub fn build(g: &Graph) -> Result<BondLattice> {
        let n = g.vertex_count();
        if n > BOND_LATTICE_MAX_VERTICES {
            return Err(Error::TooLarge(format!(
                "{n} vertices exceeds the {BOND_LATTICE_MAX_VERTICES}-vertex bond-lattice limit"
            )));
        }
        let adj_mask = adjacency_masks(g);
        let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        let mut connected = vec![false; 1 << n];
        for s in 1u32..=full {
            connected[s as usize] = mask_connected(&adj_mask, s);
        }

        // Enumerate partitions into connected blocks: the block containing
        // the lowest remaining vertex ranges over connected subsets.
        let mut partitions: Vec<Vec<u32>> = Vec::new();
        let mut blocks: Vec<u32> = Vec::new();
        enumerate_blocks(full, &connected, &mut blocks, &mut partitions);

        // Finer partitions first (more blocks), so the Möbius recursion can
        // run in one pass.
        partitions.sort_by(|a, b| b.len().cmp(&a.len()));

        let mut elements: Vec<BondElement> = Vec::with_capacity(partitions.len());
        for blocks in &partitions {
            let mut block_id = vec![0usize; n];
            let mut sorted = blocks.clone();
            sorted.sort_by_key(|b| b.trailing_zeros());
            for (id, b) in sorted.iter().enumerate() {
                for v in 0..n {
                    if b >> v & 1 == 1 {
                        block_id[v] = id;
                    }
                }
            }
            elements.push(BondElement {
                block_id,
                blocks: blocks.len(),
                mu: 0,
            });
        }

        // rep[v] = lowest vertex in v's block, for O(n) refinement tests.
        let reps: Vec<Vec<usize>> = elements
            .iter()
            .map(|e| {
                let mut rep = vec![usize::MAX; n];
                for v in 0..n {
                    let r = (0..n).find(|&w| e.block_id[w] == e.block_id[v]).unwrap();
                    rep[v] = r;
                }
                rep
            })
            .collect();

        for i in 0..elements.len() {
            if elements[i].blocks == n {
                elements[i].mu = 1; // bottom: all singletons
                continue;
            }
            let mut sum: i64 = 0;
            for j in 0..elements.len() {
                if elements[j].blocks <= elements[i].blocks {
                    continue;
                }
                // j strictly finer than i: every j-block sits inside an
                // i-block.
                let finer = (0..n).all(|v| {
                    elements[i].block_id[v] == elements[i].block_id[reps[j][v]]
                });
                if finer {
                    sum += elements[j].mu;
                }
            }
            elements[i].mu = -sum;
        }

        Ok(BondLattice {
            vertex_count: n,
            elements,
        })
    }

    pub fn elements(&self) -> &[BondElement] {
        &self.elements
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// `sum over elements of mu(X) t^dim(X)` with `dim(X)` = block count.
    pub fn characteristic(&self) -> Poly {
        let mut coeffs = vec![BigInt::zero(); self.vertex_count + 1];
        for e in &self.elements {
            coeffs[e.blocks] += e.mu;
        }
        Poly::from_coeffs(coeffs)
    }
}

/// Characteristic polynomial of the graphic arrangement of `g` via the
/// intersection-lattice Möbius sum. Equals the chromatic polynomial.
pub fn bond_lattice_characteristic(g: &Graph) -> Result<Poly> {
    Ok(BondLattice::build(g)?.characteristic())
}

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    let mut masks = vec![0u32; g.vertex_count()];
    for (u, v) in g.edges() {
        masks[u] |= 1 << v;
        masks[v] |= 1 << u;
    }
    masks
}

fn mask_connected(adj: &[u32], s: u32) -> bool {
    let start = s.trailing_zeros() as usize;
    let mut seen = 1u32 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u32;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v] & s & !seen;
        }
        seen |= next;
        frontier = next;
    }
    seen == s
}

fn enumerate_blocks(
    remaining: u32,
    connected: &[bool],
    blocks: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if remaining == 0 {
        out.push(blocks.clone());
        return;
    }
    let low = remaining & remaining.wrapping_neg();
    let rest = remaining & !low;
    // Every subset of `rest`, joined with the lowest vertex.
    let mut sub = rest;
    loop {
        let candidate = sub | low;
        if connected[candidate as usize] {
            blocks.push(candidate);
            enumerate_blocks(remaining & !candidate, connected, blocks, out);
            blocks.pop();
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & rest;
    }
}

/// Characteristic polynomial of a projective-line arrangement from its
/// rank-3 intersection data: `t^3 - m t^2 + sum_P (|A_P| - 1) t + mu(top)`,
/// with one rank-2 flat per intersection point `P` and a rank-3 top exactly
/// when the lines are not all concurrent.
///
/// This is the Möbius-sum route, independent of the incremental
/// line-addition construction it cross-checks.
pub fn line_lattice_characteristic(a: &ProjLineArrangement) -> Result<Poly> {
    let lines: Vec<&ProjLine> = a.lines().iter().collect();
    if lines.is_empty() {
        return Err(Error::EmptyArrangement);
    }
    let m = lines.len() as i64;
    use std::collections::{BTreeMap, BTreeSet};
    let mut through: BTreeMap<(i128, i128, i128), BTreeSet<usize>> = BTreeMap::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let p = lines[i].intersection(lines[j]);
            through.entry(p).or_default().extend([i, j]);
        }
    }
    // Each intersection point is a rank-2 flat with mu = (lines through) - 1.
    let rank2_mu_sum: i64 = through.values().map(|ls| ls.len() as i64 - 1).sum();
    let concurrent = through.len() == 1 && m >= 2;
    let mut coeffs = vec![BigInt::zero(); 4];
    coeffs[3] = BigInt::from(1);
    coeffs[2] = BigInt::from(-m);
    coeffs[1] = BigInt::from(rank2_mu_sum);
    if m >= 2 && !concurrent {
        // mu(bottom) + sum mu(hyperplanes) + sum mu(points) + mu(top) = 0.
        coeffs[0] = BigInt::from(-(1 - m + rank2_mu_sum));
    }
    Ok(Poly::from_coeffs(coeffs))
}
