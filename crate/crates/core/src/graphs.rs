//! Simple undirected graphs: adjacency and Laplacian matrices, signings, matching
//! polynomials, 2-lifts, Ramanujan certification and spectral approximation.

use std::collections::HashMap;
use std::fmt::Write as _;

use nalgebra::{Cholesky, DMatrix, DVector, SymmetricEigen};
use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mixedchar::{sum_over_outcomes, DiscreteRandomVector};
use crate::realroot::{char_poly_berkowitz, largest_root, IntPoly, Poly, SymMatrix};

/// Largest vertex count accepted by [`matching_poly`].
pub const MATCHING_VERTEX_CAP: usize = 24;
/// Largest edge count accepted by [`godsil_gutman_check`].
pub const SIGNING_EDGE_CAP: usize = 20;
/// The matching-enumeration cross-check runs only up to this many edges.
pub const ENUMERATION_EDGE_CAP: usize = 40;
/// Slack for spectral threshold comparisons.
pub const SPECTRAL_TOL: f64 = 1e-9;

/// Simple undirected graph on vertices `0..n` with optional positive edge weights.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    weights: Option<Vec<f64>>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weights: Option<Vec<f64>>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;

    fn try_from(r: GraphRepr) -> Result<Self> {
        match r.weights {
            Some(w) => Graph::with_weights(r.n, r.edges, w),
            None => Graph::new(r.n, r.edges),
        }
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            n: g.n,
            edges: g.edges,
            weights: g.weights,
        }
    }
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for &(a, b) in &edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::DuplicateEdge(a, b));
            }
        }
        Ok(Graph {
            n,
            edges,
            weights: None,
        })
    }

    pub fn with_weights(n: usize, edges: Vec<(usize, usize)>, weights: Vec<f64>) -> Result<Self> {
        if weights.len() != edges.len() {
            return Err(Error::Dimension {
                expected: edges.len(),
                found: weights.len(),
            });
        }
        if let Some(w) = weights.iter().find(|w| !(**w > 0.0 && w.is_finite())) {
            return Err(Error::BadWeight(*w));
        }
        let mut g = Graph::new(n, edges)?;
        g.weights = Some(weights);
        Ok(g)
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            weights: None,
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|a| ((a + 1)..n).map(move |b| (a, b))).collect();
        Graph::new(n, edges).expect("complete graph is simple")
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
        Graph::new(a + b, edges).expect("complete bipartite graph is simple")
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|v| (v - 1, v)).collect();
        Graph::new(n, edges).expect("path is simple")
    }

    /// Cycle on `n ≥ 3` vertices.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("cycle needs n ≥ 3, got {n}")));
        }
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)).collect())
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::new(10, edges).expect("Petersen graph is simple")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn weights(&self) -> Option<&[f64]> {
        self.weights.as_deref()
    }

    pub fn weight(&self, e: usize) -> f64 {
        self.weights.as_ref().map_or(1.0, |w| w[e])
    }

    /// Same graph with every weight multiplied by `c > 0`.
    pub fn scaled(&self, c: f64) -> Result<Self> {
        let w = (0..self.num_edges()).map(|e| c * self.weight(e)).collect();
        Graph::with_weights(self.n, self.edges.clone(), w)
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let deg = self.degrees();
        let d = *deg.first()?;
        deg.iter().all(|x| *x == d).then_some(d)
    }

    fn components(&self) -> UnionFind<usize> {
        let mut uf = UnionFind::new(self.n);
        for &(a, b) in &self.edges {
            uf.union(a, b);
        }
        uf
    }

    /// Component label of each vertex, labelled by first appearance.
    pub fn component_labels(&self) -> Vec<usize> {
        let uf = self.components();
        let mut map = HashMap::new();
        (0..self.n)
            .map(|v| {
                let next = map.len();
                *map.entry(uf.find(v)).or_insert(next)
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_labels().iter().all(|c| *c == 0)
    }

    /// Two-colourability, via union-find on the doubled vertex set.
    pub fn is_bipartite(&self) -> bool {
        let n = self.n;
        let mut uf = UnionFind::new(2 * n);
        for &(a, b) in &self.edges {
            uf.union(a, b + n);
            uf.union(a + n, b);
        }
        (0..n).all(|v| !uf.equiv(v, v + n))
    }
}

/// Signs `±1` for the edges of a graph, in edge-list order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<i8>", into = "Vec<i8>")]
pub struct Signing {
    signs: Vec<i8>,
}

impl TryFrom<Vec<i8>> for Signing {
    type Error = Error;

    fn try_from(v: Vec<i8>) -> Result<Self> {
        Signing::new(v)
    }
}

impl From<Signing> for Vec<i8> {
    fn from(s: Signing) -> Self {
        s.signs
    }
}

impl Signing {
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        if let Some(s) = signs.iter().find(|s| **s != 1 && **s != -1) {
            return Err(Error::InvalidParameter(format!("sign must be ±1, got {s}")));
        }
        Ok(Signing { signs })
    }

    pub fn all_positive(m: usize) -> Self {
        Signing { signs: vec![1; m] }
    }

    pub fn all_negative(m: usize) -> Self {
        Signing { signs: vec![-1; m] }
    }

    /// Bit `e` of `bits` set means edge `e` is negative.
    pub fn from_bits(bits: u64, m: usize) -> Self {
        Signing {
            signs: (0..m).map(|e| if bits >> e & 1 == 1 { -1 } else { 1 }).collect(),
        }
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    fn check(&self, g: &Graph) -> Result<()> {
        if self.len() != g.num_edges() {
            return Err(Error::IncompleteSigning {
                expected: g.num_edges(),
                found: self.len(),
            });
        }
        Ok(())
    }
}

pub fn adjacency(g: &Graph) -> SymMatrix {
    let mut m = DMatrix::zeros(g.n, g.n);
    for &(a, b) in &g.edges {
        m[(a, b)] = 1.0;
        m[(b, a)] = 1.0;
    }
    SymMatrix::new(m).expect("symmetric by construction")
}

/// `Σ w_{ab} (e_a − e_b)(e_a − e_b)ᵀ`.
pub fn laplacian(g: &Graph) -> SymMatrix {
    let mut m = DMatrix::zeros(g.n, g.n);
    for (e, &(a, b)) in g.edges.iter().enumerate() {
        let w = g.weight(e);
        m[(a, a)] += w;
        m[(b, b)] += w;
        m[(a, b)] -= w;
        m[(b, a)] -= w;
    }
    SymMatrix::new(m).expect("symmetric by construction")
}

fn signed_adjacency_int(g: &Graph, signs: &[i8]) -> DMatrix<i128> {
    let mut m = DMatrix::zeros(g.n, g.n);
    for (&(a, b), &s) in g.edges.iter().zip(signs) {
        m[(a, b)] = s as i128;
        m[(b, a)] = s as i128;
    }
    m
}

/// `A_s = Σ s_{ab} A_{ab}`. For a d-regular graph also checks
/// `A_s = Σ (e_a + s e_b)(e_a + s e_b)ᵀ − dI`.
pub fn signed_adjacency(g: &Graph, s: &Signing) -> Result<SymMatrix> {
    s.check(g)?;
    let a = signed_adjacency_int(g, &s.signs);
    if let Some(d) = g.regular_degree() {
        let mut sum = DMatrix::<i128>::zeros(g.n, g.n);
        for (&(u, v), &sign) in g.edges.iter().zip(&s.signs) {
            let mut r = DVector::<i128>::zeros(g.n);
            r[u] = 1;
            r[v] = sign as i128;
            sum += &r * r.transpose();
        }
        for i in 0..g.n {
            sum[(i, i)] -= d as i128;
        }
        if sum != a {
            return Err(Error::Invariant("rank-one decomposition of A_s failed".into()));
        }
    }
    SymMatrix::new(a.map(|x| x as f64))
}

/// The random vectors `r_{ab} = e_a ± e_b`, each sign with probability 1/2.
pub fn signing_random_vectors(g: &Graph) -> Vec<DiscreteRandomVector> {
    g.edges
        .iter()
        .map(|&(a, b)| {
            let mut plus = DVector::zeros(g.n);
            plus[a] = 1.0;
            plus[b] = 1.0;
            let mut minus = plus.clone();
            minus[b] = -1.0;
            DiscreteRandomVector::two_point(0.5, plus, minus).expect("valid two-point distribution")
        })
        .collect()
}

fn check_matching_cap(g: &Graph) -> Result<()> {
    if g.n > MATCHING_VERTEX_CAP {
        return Err(Error::VertexCap {
            n: g.n,
            cap: MATCHING_VERTEX_CAP,
        });
    }
    Ok(())
}

fn poly_from_counts(n: usize, counts: &[u64]) -> IntPoly {
    let mut c = vec![0i128; n + 1];
    for (i, m) in counts.iter().enumerate() {
        let v = *m as i128;
        c[n - 2 * i] = if i % 2 == 0 { v } else { -v };
    }
    Poly::new(c)
}

/// `m_i`, the number of `i`-edge matchings, by exhaustive enumeration.
pub fn matching_counts(g: &Graph) -> Result<Vec<u64>> {
    check_matching_cap(g)?;
    fn rec(edges: &[(usize, usize)], start: usize, used: u64, size: usize, counts: &mut Vec<u64>) {
        if counts.len() <= size {
            counts.push(0);
        }
        counts[size] += 1;
        for (e, &(a, b)) in edges.iter().enumerate().skip(start) {
            let mask = (1u64 << a) | (1u64 << b);
            if used & mask == 0 {
                rec(edges, e + 1, used | mask, size + 1, counts);
            }
        }
    }
    let mut counts = Vec::new();
    rec(&g.edges, 0, 0, 0, &mut counts);
    Ok(counts)
}

/// `μ_G = Σ_i (−1)^i m_i x^{n−2i}` from enumerated matchings.
pub fn matching_poly_enumerate(g: &Graph) -> Result<IntPoly> {
    Ok(poly_from_counts(g.n, &matching_counts(g)?))
}

/// `μ_G = μ_{G−e} − μ_{G−a−b}` for `e = (a, b)`, memoized on (vertex set, edge index).
pub fn matching_poly_recurrence(g: &Graph) -> Result<IntPoly> {
    check_matching_cap(g)?;
    fn rec(
        edges: &[(usize, usize)],
        idx: usize,
        mask: u32,
        memo: &mut HashMap<(u32, usize), IntPoly>,
    ) -> IntPoly {
        let mut idx = idx;
        while idx < edges.len() {
            let (a, b) = edges[idx];
            if mask >> a & 1 == 1 && mask >> b & 1 == 1 {
                break;
            }
            idx += 1;
        }
        if idx == edges.len() {
            return Poly::monomial(1, mask.count_ones() as usize);
        }
        if let Some(p) = memo.get(&(mask, idx)) {
            return p.clone();
        }
        let (a, b) = edges[idx];
        let keep = rec(edges, idx + 1, mask, memo);
        let removed = rec(edges, idx + 1, mask & !(1 << a) & !(1 << b), memo);
        let p = &keep - &removed;
        memo.insert((mask, idx), p.clone());
        p
    }
    let full = (1u32 << g.n) - 1;
    let mut memo = HashMap::new();
    Ok(rec(&g.edges, 0, full, &mut memo))
}

/// Matching polynomial. Computed by the recurrence and, up to
/// [`ENUMERATION_EDGE_CAP`] edges, cross-checked against enumeration.
pub fn matching_poly(g: &Graph) -> Result<IntPoly> {
    let p = matching_poly_recurrence(g)?;
    if g.num_edges() <= ENUMERATION_EDGE_CAP && p != matching_poly_enumerate(g)? {
        return Err(Error::Invariant("matching polynomial paths disagree".into()));
    }
    Ok(p)
}

/// Exact check of `2^{−|E|} Σ_s χ(A_s) = μ_G` over all signings.
pub fn godsil_gutman_check(g: &Graph) -> Result<bool> {
    let m = g.num_edges();
    if m > SIGNING_EDGE_CAP {
        return Err(Error::BudgetExceeded {
            needed: 1u128 << m,
            budget: 1u64 << SIGNING_EDGE_CAP,
        });
    }
    let mu = matching_poly(g)?;
    let sizes = vec![2usize; m];
    let total = sum_over_outcomes(&sizes, 1u64 << m, |idx| {
        let signs: Vec<i8> = idx.iter().map(|i| if *i == 0 { 1 } else { -1 }).collect();
        char_poly_berkowitz(&signed_adjacency_int(g, &signs))
    });
    Ok(total == mu.scale(&(1i128 << m)))
}

/// `λ_max(μ_G) ≤ 2√(d−1)` with `d` the maximum degree, which must be at least 2.
pub fn heilmann_lieb_check(g: &Graph) -> Result<bool> {
    let d = g.max_degree();
    if d < 2 {
        return Err(Error::InvalidParameter(format!("maximum degree must be ≥ 2, got {d}")));
    }
    let root = largest_root(&matching_poly(g)?.to_f64())?;
    Ok(root <= 2.0 * ((d - 1) as f64).sqrt() + SPECTRAL_TOL)
}

fn sorted_union(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut u: Vec<f64> = a.iter().chain(b).copied().collect();
    u.sort_by(|x, y| y.total_cmp(x));
    u
}

/// The 2-lift of `g` along `s`: vertex `(v, layer)` is `v + layer·n`. Checks that the
/// lift spectrum is the union of the spectra of `A` and `A_s`.
pub fn two_lift(g: &Graph, s: &Signing) -> Result<Graph> {
    s.check(g)?;
    let n = g.n;
    let mut edges = Vec::with_capacity(2 * g.num_edges());
    let mut weights = Vec::with_capacity(2 * g.num_edges());
    for (e, (&(a, b), &sign)) in g.edges.iter().zip(&s.signs).enumerate() {
        if sign == 1 {
            edges.push((a, b));
            edges.push((a + n, b + n));
        } else {
            edges.push((a, b + n));
            edges.push((a + n, b));
        }
        weights.extend([g.weight(e); 2]);
    }
    let lift = match g.weights {
        Some(_) => Graph::with_weights(2 * n, edges, weights)?,
        None => Graph::new(2 * n, edges)?,
    };
    let expected = sorted_union(&adjacency(g).eigenvalues(), &signed_adjacency(g, s)?.eigenvalues());
    let actual = adjacency(&lift).eigenvalues();
    if expected.iter().zip(&actual).any(|(x, y)| (x - y).abs() > 1e-8) {
        return Err(Error::Invariant("lift spectrum differs from spec(A) ∪ spec(A_s)".into()));
    }
    Ok(lift)
}

fn regular_connected(g: &Graph) -> Result<usize> {
    let d = g.regular_degree().ok_or(Error::NotRegular)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(d)
}

/// Nontrivial adjacency eigenvalues: all but one copy of `d`, and of `−d` when bipartite.
pub fn nontrivial_eigenvalues(g: &Graph) -> Result<Vec<f64>> {
    regular_connected(g)?;
    let mut ev = adjacency(g).eigenvalues();
    ev.remove(0);
    if g.is_bipartite() {
        ev.pop();
    }
    Ok(ev)
}

fn within_ramanujan(ev: &[f64], d: usize) -> bool {
    let t = 2.0 * (d.saturating_sub(1) as f64).sqrt() + SPECTRAL_TOL;
    ev.iter().all(|x| x.abs() <= t)
}

/// Connected, d-regular, bipartite, every nontrivial `|λ| ≤ 2√(d−1)`.
pub fn is_ramanujan_bipartite(g: &Graph) -> Result<bool> {
    let d = regular_connected(g)?;
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    Ok(within_ramanujan(&nontrivial_eigenvalues(g)?, d))
}

/// Connected, d-regular, every nontrivial `|λ| ≤ 2√(d−1)`; bipartiteness optional.
pub fn is_ramanujan(g: &Graph) -> Result<bool> {
    let d = regular_connected(g)?;
    Ok(within_ramanujan(&nontrivial_eigenvalues(g)?, d))
}

/// `(κ₁, κ₂)`: the extreme values of `xᵀL_G x / xᵀL_H x` over vectors orthogonal to the
/// common null space of the two Laplacians.
pub fn spectral_approx_factors(h: &Graph, g: &Graph) -> Result<(f64, f64)> {
    if h.n != g.n {
        return Err(Error::Dimension {
            expected: h.n,
            found: g.n,
        });
    }
    if h.component_labels() != g.component_labels() {
        return Err(Error::NullSpaceMismatch);
    }
    let lh = laplacian(h);
    let lg = laplacian(g);
    let eig = SymmetricEigen::new(lh.as_matrix().clone());
    let scale = eig.eigenvalues.iter().fold(0.0f64, |m, x| m.max(x.abs())).max(1.0);
    let range: Vec<usize> = (0..h.n)
        .filter(|&i| eig.eigenvalues[i] > 1e-9 * scale)
        .collect();
    if range.is_empty() {
        return Err(Error::NullSpaceMismatch);
    }
    let u = DMatrix::from_fn(h.n, range.len(), |r, c| eig.eigenvectors[(r, range[c])]);
    let hr = u.transpose() * lh.as_matrix() * &u;
    let gr = u.transpose() * lg.as_matrix() * &u;
    let chol = Cholesky::new(hr).ok_or(Error::NotPositiveDefinite)?;
    let linv = chol.l().try_inverse().ok_or(Error::NotPositiveDefinite)?;
    let pencil = &linv * gr * linv.transpose();
    let vals = SymmetricEigen::new((&pencil + pencil.transpose()) * 0.5).eigenvalues;
    let lo = vals.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = vals.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    Ok((lo, hi))
}

/// Parses `u v [w]` lines, 0-indexed. Blank lines and `#` comments are skipped.
/// The vertex count is one more than the largest index. Weights must be given on
/// every line or on none.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut weights = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let bad = |what: &str| Error::Parse(format!("line {}: {what}", lineno + 1));
        if fields.len() != 2 && fields.len() != 3 {
            return Err(bad("expected `u v [w]`"));
        }
        let u = fields[0].parse::<usize>().map_err(|_| bad("bad vertex"))?;
        let v = fields[1].parse::<usize>().map_err(|_| bad("bad vertex"))?;
        edges.push((u, v));
        if let Some(w) = fields.get(2) {
            weights.push(w.parse::<f64>().map_err(|_| bad("bad weight"))?);
        }
    }
    if edges.is_empty() {
        return Err(Error::Parse("edge list is empty".into()));
    }
    let n = edges.iter().map(|&(a, b)| a.max(b)).max().unwrap() + 1;
    if weights.is_empty() {
        Graph::new(n, edges)
    } else if weights.len() == edges.len() {
        Graph::with_weights(n, edges, weights)
    } else {
        Err(Error::Parse("weights must be given on every line or none".into()))
    }
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut s = String::new();
    for (e, &(a, b)) in g.edges.iter().enumerate() {
        match g.weights {
            Some(ref w) => writeln!(s, "{a} {b} {}", w[e]),
            None => writeln!(s, "{a} {b}"),
        }
        .expect("writing to a string");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjacency_examples() {
        assert_eq!(
            adjacency(&Graph::complete(2)),
            SymMatrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap()
        );
        assert_eq!(adjacency(&Graph::empty(3)), SymMatrix::zeros(3));
        let k3 = adjacency(&Graph::complete(3));
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(k3.get(i, j), if i == j { 0.0 } else { 1.0 });
            }
        }
    }

    #[test]
    fn laplacian_examples() {
        assert_eq!(
            laplacian(&Graph::complete(2)),
            SymMatrix::from_rows(&[vec![1.0, -1.0], vec![-1.0, 1.0]]).unwrap()
        );
        let p = Graph::petersen();
        assert_eq!(laplacian(&p), SymMatrix::identity(10).scale(3.0).sub(&adjacency(&p)));
        let ev = laplacian(&Graph::complete(5)).eigenvalues();
        assert!(ev[..4].iter().all(|x| (x - 5.0).abs() < 1e-10));
        assert!(ev[4].abs() < 1e-10);
    }

    #[test]
    fn signed_adjacency_examples() {
        let k2 = Graph::complete(2);
        assert_eq!(signed_adjacency(&k2, &Signing::all_positive(1)).unwrap(), adjacency(&k2));
        let neg = signed_adjacency(&k2, &Signing::all_negative(1)).unwrap();
        assert_eq!(neg.get(0, 1), -1.0);
        assert_eq!(neg.eigenvalues(), vec![1.0, -1.0]);
        let k4 = Graph::complete(4);
        assert_eq!(
            signed_adjacency(&k4, &Signing::all_negative(6)).unwrap(),
            adjacency(&k4).scale(-1.0)
        );
        assert!(matches!(
            signed_adjacency(&k4, &Signing::all_negative(5)),
            Err(Error::IncompleteSigning { expected: 6, found: 5 })
        ));
    }

    #[test]
    fn matching_poly_examples() {
        assert_eq!(matching_poly(&Graph::complete(2)).unwrap(), Poly::new(vec![-1, 0, 1]));
        assert_eq!(matching_poly(&Graph::path(3)).unwrap(), Poly::new(vec![0, -2, 0, 1]));
        assert_eq!(matching_poly(&Graph::complete(4)).unwrap(), Poly::new(vec![3, 0, -6, 0, 1]));
        assert!(matches!(matching_poly(&Graph::empty(25)), Err(Error::VertexCap { .. })));
    }

    #[test]
    fn godsil_gutman_examples() {
        assert!(godsil_gutman_check(&Graph::complete(2)).unwrap());
        assert!(godsil_gutman_check(&Graph::complete(3)).unwrap());
        assert!(godsil_gutman_check(&Graph::complete(4)).unwrap());
    }

    #[test]
    fn heilmann_lieb_examples() {
        assert!(heilmann_lieb_check(&Graph::path(3)).unwrap());
        assert!(heilmann_lieb_check(&Graph::complete(4)).unwrap());
        assert!(heilmann_lieb_check(&Graph::complete_bipartite(3, 3)).unwrap());
        assert!(heilmann_lieb_check(&Graph::complete(2)).is_err());
    }

    #[test]
    fn two_lift_examples() {
        let k2 = Graph::complete(2);
        let plus = two_lift(&k2, &Signing::all_positive(1)).unwrap();
        assert_eq!(plus.edges(), &[(0, 1), (2, 3)]);
        assert!(!plus.is_connected());
        let minus = two_lift(&k2, &Signing::all_negative(1)).unwrap();
        assert_eq!(minus.edges(), &[(0, 3), (2, 1)]);
        let ev = adjacency(&minus).eigenvalues();
        assert!(ev.iter().zip([1.0, 1.0, -1.0, -1.0]).all(|(a, b)| (a - b).abs() < 1e-12));
    }

    #[test]
    fn ramanujan_examples() {
        for d in 2..5 {
            assert!(is_ramanujan_bipartite(&Graph::complete_bipartite(d, d)).unwrap());
        }
        assert!(is_ramanujan_bipartite(&Graph::cycle(6).unwrap()).unwrap());
        assert!(is_ramanujan(&Graph::petersen()).unwrap());
        assert_eq!(is_ramanujan_bipartite(&Graph::complete(4)), Err(Error::NotBipartite));
        assert_eq!(is_ramanujan_bipartite(&Graph::path(3)), Err(Error::NotRegular));
        let two_squares = Graph::new(8, vec![(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)]);
        assert_eq!(is_ramanujan(&two_squares.unwrap()), Err(Error::Disconnected));
    }

    #[test]
    fn spectral_approx_examples() {
        let g = Graph::petersen();
        let (lo, hi) = spectral_approx_factors(&g, &g).unwrap();
        assert!((lo - 1.0).abs() < 1e-10 && (hi - 1.0).abs() < 1e-10);
        let (lo, hi) = spectral_approx_factors(&g.scaled(2.0).unwrap(), &g).unwrap();
        assert!((lo - 0.5).abs() < 1e-10 && (hi - 0.5).abs() < 1e-10);
        assert!(spectral_approx_factors(&Graph::complete(4), &Graph::path(4)).is_ok());
        assert_eq!(
            spectral_approx_factors(&Graph::complete(4), &Graph::path(3)),
            Err(Error::Dimension { expected: 4, found: 3 })
        );
        let split = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(spectral_approx_factors(&Graph::complete(4), &split), Err(Error::NullSpaceMismatch));
    }

    #[test]
    fn validation() {
        assert_eq!(Graph::new(2, vec![(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(Graph::new(3, vec![(0, 1), (1, 0)]), Err(Error::DuplicateEdge(1, 0)));
        assert!(matches!(Graph::new(2, vec![(0, 2)]), Err(Error::VertexOutOfRange { .. })));
        assert_eq!(Graph::with_weights(2, vec![(0, 1)], vec![0.0]), Err(Error::BadWeight(0.0)));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::petersen();
        assert_eq!(parse_edge_list(&format_edge_list(&g)).unwrap(), g);
        let w = parse_edge_list("0 1 2.5\n# comment\n1 2 0.5\n").unwrap();
        assert_eq!(w.weights(), Some(&[2.5, 0.5][..]));
        assert!(matches!(parse_edge_list("0 1 2\n1 2\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_edge_list("0 x\n"), Err(Error::Parse(_))));
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(serde_json::from_str::<Graph>(&json).unwrap(), g);
    }
}
