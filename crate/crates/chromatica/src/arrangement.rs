//! Graphic arrangements and projective-line arrangements: characteristic
//! polynomials, chamber counts, and the incremental hyperplane / line
//! addition rules.
//!
//! Everything here is exact. Projective points and lines are normalized
//! integer triples; a single floating-point comparison in the intersection
//! count would silently break the line-addition formula.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::chromatic::{chromatic, classify_edge_addition, EdgeAdditionRule};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::Poly;

/// The arrangement `{x_i - x_j = 0 : {i,j} an edge}` in `K^n`, `n` the
/// vertex count. Its characteristic polynomial is the chromatic polynomial
/// of the graph.
#[derive(Clone, Debug)]
pub struct GraphicArrangement {
    graph: Graph,
}

impl GraphicArrangement {
    pub fn new(graph: Graph) -> Self {
        GraphicArrangement { graph }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Dimension of the ambient space: the vertex count.
    pub fn ambient_dim(&self) -> usize {
        self.graph.vertex_count()
    }

    /// One hyperplane per edge.
    pub fn hyperplane_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// Rank of the arrangement: vertices minus components.
    pub fn rank(&self) -> usize {
        self.graph.vertex_count() - self.graph.connected_components().len()
    }

    /// Graphic arrangements are never essential: the all-equal diagonal
    /// line lies on every hyperplane, so the rank stays below the dimension
    /// and `t` always divides the characteristic polynomial.
    pub fn is_essential(&self) -> bool {
        self.rank() == self.ambient_dim()
    }

    /// Characteristic polynomial; degree equals the ambient dimension.
    pub fn characteristic(&self) -> Poly {
        chromatic(&self.graph)
    }
}

/// Chamber totals of a real arrangement read off its characteristic
/// polynomial: `|chi(-1)|` chambers, `|chi(1)|` bounded chambers.
///
/// The bounded count is geometrically meaningful only for essential
/// arrangements; for the others this reports the raw evaluation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChamberCount {
    pub chambers: BigInt,
    pub bounded: BigInt,
}

/// Count chambers from a characteristic polynomial.
pub fn chambers(chi: &Poly) -> ChamberCount {
    ChamberCount {
        chambers: chi.eval_int(-1).abs(),
        bounded: chi.eval_int(1).abs(),
    }
}

/// Characteristic polynomial `t^2 - m t + (m - 1)` of any central rank-2
/// arrangement of `m >= 1` hyperplanes in the plane.
pub fn rank2_characteristic(m: usize) -> Result<Poly> {
    if m < 1 {
        return Err(Error::Domain("rank-2 arrangement needs at least one hyperplane".into()));
    }
    Ok(Poly::from_coeffs(vec![
        BigInt::from(m as i64 - 1),
        BigInt::from(-(m as i64)),
        BigInt::from(1),
    ]))
}

/// Chamber count of `A(g + {u,v})` from the chamber count of `A(g)`,
/// using the edge-addition multipliers: a bridge doubles the chambers, a
/// minimal cycle of length `m` multiplies them by `(2^(m-1) - 1) / 2^(m-2)`.
///
/// Refuses with [`Error::HypothesisViolated`] when the edge classifies as
/// `Fallback`; reports [`Error::NonIntegral`] if the multiplier fails its
/// exactness check, which would indicate a classification bug.
pub fn add_edge_chambers(g: &Graph, count: &BigInt, u: usize, v: usize) -> Result<BigInt> {
    match classify_edge_addition(g, u, v)? {
        EdgeAdditionRule::Bridge => Ok(count * 2),
        EdgeAdditionRule::MinimalCycle(m) => {
            let numer: BigInt = count * ((BigInt::from(1) << (m - 1)) - 1);
            let denom: BigInt = BigInt::from(1) << (m - 2);
            let (q, r) = numer.div_rem(&denom);
            if !r.is_zero() {
                return Err(Error::NonIntegral);
            }
            Ok(q)
        }
        EdgeAdditionRule::Fallback => Err(Error::HypothesisViolated(
            "edge addition closes more than one minimal cycle".into(),
        )),
    }
}

/// A projective line in `P^2` (equivalently a plane through the origin of
/// `R^3`) given by an integer coefficient triple, stored normalized: content
/// one, first nonzero coefficient positive.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ProjLine {
    coeffs: (i128, i128, i128),
}

impl ProjLine {
    pub fn new(a: i64, b: i64, c: i64) -> Result<ProjLine> {
        let triple = normalize_triple((a as i128, b as i128, c as i128))
            .ok_or_else(|| Error::Domain("line coefficients must not all be zero".into()))?;
        Ok(ProjLine { coeffs: triple })
    }

    pub fn coeffs(&self) -> (i128, i128, i128) {
        self.coeffs
    }

    /// The unique intersection point of two distinct lines, as a normalized
    /// projective triple (the cross product of the coefficient vectors).
    pub fn intersection(&self, other: &ProjLine) -> (i128, i128, i128) {
        let (a1, b1, c1) = self.coeffs;
        let (a2, b2, c2) = other.coeffs;
        let cross = (b1 * c2 - c1 * b2, c1 * a2 - a1 * c2, a1 * b2 - b1 * a2);
        normalize_triple(cross).expect("distinct projective lines always meet in one point")
    }
}

fn normalize_triple(t: (i128, i128, i128)) -> Option<(i128, i128, i128)> {
    let (a, b, c) = t;
    if a == 0 && b == 0 && c == 0 {
        return None;
    }
    let g = a.unsigned_abs().gcd(&b.unsigned_abs()).gcd(&c.unsigned_abs()) as i128;
    let (mut a, mut b, mut c) = (a / g, b / g, c / g);
    let first = if a != 0 { a } else if b != 0 { b } else { c };
    if first < 0 {
        a = -a;
        b = -b;
        c = -c;
    }
    Some((a, b, c))
}

/// A list of pairwise-distinct projective lines.
#[derive(Clone, Debug, Default)]
pub struct ProjLineArrangement {
    lines: Vec<ProjLine>,
}

impl ProjLineArrangement {
    pub fn new(lines: Vec<ProjLine>) -> Result<ProjLineArrangement> {
        let mut a = ProjLineArrangement::default();
        for l in lines {
            a.push(l)?;
        }
        Ok(a)
    }

    pub fn push(&mut self, line: ProjLine) -> Result<()> {
        if self.lines.contains(&line) {
            return Err(Error::LineAlreadyPresent);
        }
        self.lines.push(line);
        Ok(())
    }

    pub fn lines(&self) -> &[ProjLine] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }
}

/// Number of distinct points in which `l0` meets the union of the
/// arrangement's lines. Exact: cross products, normalized, deduplicated.
pub fn intersect_count(a: &ProjLineArrangement, l0: &ProjLine) -> Result<usize> {
    if a.lines.contains(l0) {
        return Err(Error::LineAlreadyPresent);
    }
    let mut points = std::collections::BTreeSet::new();
    for l in &a.lines {
        points.insert(l0.intersection(l));
    }
    Ok(points.len())
}

/// Fold one more line into a degree-3 characteristic polynomial:
/// `chi - (t^2 - k t + (k - 1))`, where `k` is the number of points the new
/// line meets on the old ones. Chambers accordingly grow by `2k`.
pub fn add_line_characteristic(chi: &Poly, k: usize) -> Result<Poly> {
    if chi.degree() != Some(3) {
        return Err(Error::Domain(
            "line-addition needs the degree-3 characteristic polynomial of a central arrangement in R^3".into(),
        ));
    }
    let correction = Poly::from_coeffs(vec![
        BigInt::from(k as i64 - 1),
        BigInt::from(-(k as i64)),
        BigInt::from(1),
    ]);
    Ok(chi - &correction)
}

/// Characteristic polynomial of a projective-line arrangement, built
/// incrementally: `t^3 - t^2` for the first line, then one intersection
/// count and one subtraction per remaining line. The result does not depend
/// on the input order.
pub fn characteristic_lines(a: &ProjLineArrangement) -> Result<Poly> {
    if a.lines.is_empty() {
        return Err(Error::EmptyArrangement);
    }
    let mut prefix = ProjLineArrangement::default();
    prefix.push(a.lines[0])?;
    let mut chi = Poly::from_int_coeffs(&[0, 0, -1, 1]);
    for l in &a.lines[1..] {
        let k = intersect_count(&prefix, l)?;
        chi = add_line_characteristic(&chi, k)?;
        prefix.push(*l)?;
    }
    Ok(chi)
}
