//! Mixed characteristic polynomials and expected characteristic polynomials.
//!
//! `μ[A_1..A_m](x) = ∏(1 − ∂_{z_i}) det(xI + Σ z_i A_i) |_{z=0}` is computed by expanding the
//! determinant over a ring in which every `z_i² = 0`, then summing
//! `Σ_S (−1)^{|S|} [z^S]`. The expected characteristic polynomial of a sum of
//! independent finitely supported rank-one terms is computed by enumerating outcomes.

use std::collections::BTreeMap;
use std::ops::{Add, Mul};

use nalgebra::{DMatrix, DVector};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::realroot::{
    char_poly, char_poly_berkowitz, is_real_rooted, largest_root, rational_from_f64, Poly,
    Polynomial, RatPoly, Ring, SymMatrix,
};
use crate::Arithmetic;

/// Largest number of matrices accepted by [`mixed_char`].
pub const MAX_MATRICES: usize = 16;
/// Largest dimension accepted by [`mixed_char`].
pub const MAX_DIM: usize = 10;
/// Relative tolerance of the float identity check.
pub const IDENTITY_TOL: f64 = 1e-8;

const PSD_TOL: f64 = 1e-9;
const CHUNK: usize = 4096;

/// PSD matrices `A_1..A_m` of a shared dimension.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<SymMatrix>", into = "Vec<SymMatrix>")]
pub struct PsdList {
    matrices: Vec<SymMatrix>,
}

impl PsdList {
    pub fn new(matrices: Vec<SymMatrix>) -> Result<Self> {
        let d = matrices.first().ok_or(Error::Empty("matrix list"))?.dim();
        for (index, a) in matrices.iter().enumerate() {
            if a.dim() != d {
                return Err(Error::Dimension {
                    expected: d,
                    found: a.dim(),
                });
            }
            if !a.is_psd(PSD_TOL) {
                return Err(Error::NotPsd {
                    index,
                    min_eig: a.lambda_min(),
                });
            }
        }
        Ok(PsdList { matrices })
    }

    pub fn dim(&self) -> usize {
        self.matrices[0].dim()
    }

    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    pub fn matrices(&self) -> &[SymMatrix] {
        &self.matrices
    }

    pub fn sum(&self) -> SymMatrix {
        self.matrices
            .iter()
            .fold(SymMatrix::zeros(self.dim()), |acc, a| acc.add(a))
    }

    /// Largest trace among the matrices.
    pub fn max_trace(&self) -> f64 {
        self.matrices.iter().map(SymMatrix::trace).fold(0.0, f64::max)
    }
}

impl TryFrom<Vec<SymMatrix>> for PsdList {
    type Error = Error;

    fn try_from(v: Vec<SymMatrix>) -> Result<Self> {
        PsdList::new(v)
    }
}

impl From<PsdList> for Vec<SymMatrix> {
    fn from(l: PsdList) -> Self {
        l.matrices
    }
}

/// A finitely supported random vector: `(probability, vector)` pairs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<(f64, Vec<f64>)>", into = "Vec<(f64, Vec<f64>)>")]
pub struct DiscreteRandomVector {
    support: Vec<(f64, DVector<f64>)>,
}

impl DiscreteRandomVector {
    pub fn new(support: Vec<(f64, DVector<f64>)>) -> Result<Self> {
        let d = support
            .first()
            .ok_or(Error::Empty("distribution support"))?
            .1
            .len();
        let mut total = 0.0;
        for (p, v) in &support {
            if !(*p > 0.0 && p.is_finite()) {
                return Err(Error::Distribution(format!("probability {p} is not positive")));
            }
            if v.len() != d {
                return Err(Error::Dimension {
                    expected: d,
                    found: v.len(),
                });
            }
            if v.iter().any(|x| !x.is_finite()) {
                return Err(Error::Distribution("vector entry is not finite".into()));
            }
            total += p;
        }
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::Distribution(format!("probabilities sum to {total}")));
        }
        Ok(DiscreteRandomVector { support })
    }

    pub fn deterministic(v: DVector<f64>) -> Self {
        DiscreteRandomVector {
            support: vec![(1.0, v)],
        }
    }

    /// `a` with probability `p`, `b` with probability `1 − p`.
    pub fn two_point(p: f64, a: DVector<f64>, b: DVector<f64>) -> Result<Self> {
        DiscreteRandomVector::new(vec![(p, a), (1.0 - p, b)])
    }

    /// Uniform over the given vectors.
    pub fn uniform(vs: Vec<DVector<f64>>) -> Result<Self> {
        if vs.is_empty() {
            return Err(Error::Empty("distribution support"));
        }
        let p = 1.0 / vs.len() as f64;
        let support: Vec<_> = vs.into_iter().map(|v| (p, v)).collect();
        let total: f64 = support.iter().map(|(p, _)| p).sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::Distribution(format!("probabilities sum to {total}")));
        }
        DiscreteRandomVector::new(support)
    }

    pub fn dim(&self) -> usize {
        self.support[0].1.len()
    }

    pub fn support(&self) -> &[(f64, DVector<f64>)] {
        &self.support
    }

    pub fn support_size(&self) -> usize {
        self.support.len()
    }

    /// `E[r rᵀ]`.
    pub fn covariance(&self) -> SymMatrix {
        let mut m = SymMatrix::zeros(self.dim());
        for (p, v) in &self.support {
            m.add_outer(v, *p);
        }
        m
    }

    /// Probabilities rationalized and renormalized to sum to exactly 1, with exact vectors.
    pub fn to_rational(&self) -> Vec<(BigRational, Vec<BigRational>)> {
        let probs: Vec<BigRational> = self.support.iter().map(|(p, _)| rational_from_f64(*p)).collect();
        let total = probs.iter().fold(BigRational::zero(), |a, b| a + b);
        probs
            .into_iter()
            .zip(&self.support)
            .map(|(p, (_, v))| (p / total.clone(), v.iter().map(|x| rational_from_f64(*x)).collect()))
            .collect()
    }
}

impl TryFrom<Vec<(f64, Vec<f64>)>> for DiscreteRandomVector {
    type Error = Error;

    fn try_from(v: Vec<(f64, Vec<f64>)>) -> Result<Self> {
        DiscreteRandomVector::new(v.into_iter().map(|(p, x)| (p, DVector::from_vec(x))).collect())
    }
}

impl From<DiscreteRandomVector> for Vec<(f64, Vec<f64>)> {
    fn from(r: DiscreteRandomVector) -> Self {
        r.support
            .into_iter()
            .map(|(p, v)| (p, v.iter().copied().collect()))
            .collect()
    }
}

/// `Σ_S c_S(x) ∏_{i∈S} z_i` with every `z_i² = 0`. Subsets are bitmasks over `z_0..z_15`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedMultiAffine<T: Ring> {
    terms: BTreeMap<u32, Poly<T>>,
}

impl<T: Ring> TruncatedMultiAffine<T> {
    pub fn zero() -> Self {
        TruncatedMultiAffine {
            terms: BTreeMap::new(),
        }
    }

    /// The polynomial `p` times `∏_{i∈mask} z_i`.
    pub fn term(mask: u32, p: Poly<T>) -> Self {
        let mut t = Self::zero();
        t.add_term(mask, p);
        t
    }

    pub fn constant(p: Poly<T>) -> Self {
        Self::term(0, p)
    }

    pub fn add_term(&mut self, mask: u32, p: Poly<T>) {
        if p.is_zero() {
            return;
        }
        let entry = self.terms.entry(mask).or_insert_with(Poly::zero);
        *entry = &*entry + &p;
        if entry.is_zero() {
            self.terms.remove(&mask);
        }
    }

    /// Coefficient of `∏_{i∈mask} z_i`.
    pub fn coeff(&self, mask: u32) -> Poly<T> {
        self.terms.get(&mask).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Poly<T>)> {
        self.terms.iter().map(|(m, p)| (*m, p))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn neg(&self) -> Self {
        TruncatedMultiAffine {
            terms: self.terms.iter().map(|(m, p)| (*m, -p)).collect(),
        }
    }

    /// `Σ_S (−1)^{|S|} c_S`, i.e. `∏(1 − ∂_{z_i})` evaluated at `z = 0`.
    pub fn apply_shift_all(&self) -> Poly<T> {
        self.terms.iter().fold(Poly::zero(), |acc, (m, p)| {
            if m.count_ones() % 2 == 0 {
                &acc + p
            } else {
                &acc - p
            }
        })
    }
}

impl<T: Ring> Add for &TruncatedMultiAffine<T> {
    type Output = TruncatedMultiAffine<T>;

    fn add(self, rhs: Self) -> TruncatedMultiAffine<T> {
        let mut out = self.clone();
        for (m, p) in &rhs.terms {
            out.add_term(*m, p.clone());
        }
        out
    }
}

impl<T: Ring> Mul for &TruncatedMultiAffine<T> {
    type Output = TruncatedMultiAffine<T>;

    fn mul(self, rhs: Self) -> TruncatedMultiAffine<T> {
        let mut out = TruncatedMultiAffine::zero();
        for (s, p) in &self.terms {
            for (t, q) in &rhs.terms {
                if s & t == 0 {
                    out.add_term(s | t, p * q);
                }
            }
        }
        out
    }
}

/// `det(xI − B + Σ z_i A_i)` over the truncated ring, by a division-free expansion
/// along rows memoized on the set of columns already used. `B` defaults to zero.
pub fn truncated_determinant<T: Ring>(
    base: Option<&DMatrix<T>>,
    mats: &[DMatrix<T>],
    d: usize,
) -> TruncatedMultiAffine<T> {
    let entries: Vec<Vec<TruncatedMultiAffine<T>>> = (0..d)
        .map(|r| {
            (0..d)
                .map(|c| {
                    let b = base.map_or_else(T::zero, |b| b[(r, c)].clone());
                    let x = if r == c { T::one() } else { T::zero() };
                    let mut e = TruncatedMultiAffine::constant(Poly::new(vec![-b, x]));
                    for (i, a) in mats.iter().enumerate() {
                        if !a[(r, c)].is_zero() {
                            e.add_term(1 << i, Poly::constant(a[(r, c)].clone()));
                        }
                    }
                    e
                })
                .collect()
        })
        .collect();
    let full = (1usize << d) - 1;
    let mut dp: Vec<Option<TruncatedMultiAffine<T>>> = vec![None; full + 1];
    dp[0] = Some(TruncatedMultiAffine::constant(Poly::one()));
    for mask in 0..full {
        let Some(cur) = dp[mask].take() else { continue };
        if cur.is_zero() {
            continue;
        }
        let row = mask.count_ones() as usize;
        for c in 0..d {
            if mask & (1 << c) != 0 || entries[row][c].is_zero() {
                continue;
            }
            let mut prod = &cur * &entries[row][c];
            // Each already used column to the right of c is one inversion.
            if (mask >> (c + 1)).count_ones() % 2 == 1 {
                prod = prod.neg();
            }
            let next = mask | (1 << c);
            dp[next] = Some(match dp[next].take() {
                Some(acc) => &acc + &prod,
                None => prod,
            });
        }
    }
    dp[full].take().unwrap_or_else(TruncatedMultiAffine::zero)
}

fn check_caps(m: usize, d: usize) -> Result<()> {
    if m > MAX_MATRICES || d > MAX_DIM {
        return Err(Error::InvalidParameter(format!(
            "mixed characteristic polynomial is capped at m ≤ {MAX_MATRICES}, d ≤ {MAX_DIM}; got m={m}, d={d}"
        )));
    }
    Ok(())
}

fn mixed_char_generic<T: Ring>(base: Option<&DMatrix<T>>, mats: &[DMatrix<T>], d: usize) -> Poly<T> {
    truncated_determinant(base, mats, d).apply_shift_all()
}

/// Mixed characteristic polynomial in floating point.
pub fn mixed_char(a: &PsdList) -> Result<Polynomial> {
    check_caps(a.len(), a.dim())?;
    let mats: Vec<DMatrix<f64>> = a.matrices.iter().map(|m| m.as_matrix().clone()).collect();
    let p = mixed_char_generic(None, &mats, a.dim());
    debug_assert!(
        is_real_rooted(&p).unwrap_or(false),
        "mixed characteristic polynomial is not real-rooted: {p}"
    );
    Ok(p)
}

/// Mixed characteristic polynomial of the exact rationals equal to the input floats.
pub fn mixed_char_exact(a: &PsdList) -> Result<RatPoly> {
    check_caps(a.len(), a.dim())?;
    let mats: Vec<DMatrix<BigRational>> = a.matrices.iter().map(SymMatrix::to_rational).collect();
    Ok(mixed_char_generic(None, &mats, a.dim()))
}

/// Mixed characteristic polynomial of exact rational matrices.
pub fn mixed_char_rational(mats: &[DMatrix<BigRational>]) -> Result<RatPoly> {
    let d = mats.first().ok_or(Error::Empty("matrix list"))?.nrows();
    check_caps(mats.len(), d)?;
    Ok(mixed_char_generic(None, mats, d))
}

/// `∏(1 − ∂_{z_i}) det(xI − B + Σ z_i A_i) |_{z=0}`, which equals `E[χ(B + Σ r_i r_iᵀ)]`
/// when `A_i = E[r_i r_iᵀ]`.
pub fn mixed_char_given(base: &SymMatrix, a: &PsdList) -> Result<Polynomial> {
    check_caps(a.len(), a.dim())?;
    if base.dim() != a.dim() {
        return Err(Error::Dimension {
            expected: a.dim(),
            found: base.dim(),
        });
    }
    let mats: Vec<DMatrix<f64>> = a.matrices.iter().map(|m| m.as_matrix().clone()).collect();
    Ok(mixed_char_generic(Some(base.as_matrix()), &mats, a.dim()))
}

/// Exact counterpart of [`mixed_char_given`].
pub fn mixed_char_given_rational(
    base: &DMatrix<BigRational>,
    mats: &[DMatrix<BigRational>],
) -> Result<RatPoly> {
    let d = base.nrows();
    check_caps(mats.len(), d)?;
    Ok(mixed_char_generic(Some(base), mats, d))
}

fn check_family(rs: &[DiscreteRandomVector], budget: u64) -> Result<usize> {
    let d = rs.first().ok_or(Error::Empty("random vector list"))?.dim();
    for r in rs {
        if r.dim() != d {
            return Err(Error::Dimension {
                expected: d,
                found: r.dim(),
            });
        }
    }
    outcome_count(rs, budget)?;
    Ok(d)
}

/// Number of joint outcomes, failing when it exceeds `budget`.
pub fn outcome_count(rs: &[DiscreteRandomVector], budget: u64) -> Result<u64> {
    let mut needed: u128 = 1;
    for r in rs {
        needed = needed.saturating_mul(r.support_size() as u128);
    }
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(needed as u64)
}

/// Decodes a joint outcome index into per-vector support indices, first vector fastest.
pub fn decode_outcome(mut index: u64, sizes: &[usize], out: &mut [usize]) {
    for (slot, size) in out.iter_mut().zip(sizes) {
        *slot = (index % *size as u64) as usize;
        index /= *size as u64;
    }
}

/// `Σ_outcomes f(outcome)`, summed in fixed-size chunks in parallel and reduced in order.
pub(crate) fn sum_over_outcomes<T, F>(sizes: &[usize], total: u64, f: F) -> Poly<T>
where
    T: Ring,
    F: Fn(&[usize]) -> Poly<T> + Sync,
{
    let chunks = total.div_ceil(CHUNK as u64);
    let partial: Vec<Poly<T>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * CHUNK as u64;
            let end = (start + CHUNK as u64).min(total);
            let mut idx = vec![0usize; sizes.len()];
            let mut acc = Poly::zero();
            for i in start..end {
                decode_outcome(i, sizes, &mut idx);
                acc = &acc + &f(&idx);
            }
            acc
        })
        .collect();
    partial.iter().fold(Poly::zero(), |a, b| &a + b)
}

/// `E[χ(base + Σ r_i r_iᵀ)]` in floating point.
pub fn expected_char_poly_given(
    base: &SymMatrix,
    rs: &[DiscreteRandomVector],
    budget: u64,
) -> Result<Polynomial> {
    if rs.is_empty() {
        return Ok(char_poly(base));
    }
    let d = check_family(rs, budget)?;
    if d != base.dim() {
        return Err(Error::Dimension {
            expected: base.dim(),
            found: d,
        });
    }
    let total = outcome_count(rs, budget)?;
    let sizes: Vec<usize> = rs.iter().map(DiscreteRandomVector::support_size).collect();
    Ok(sum_over_outcomes(&sizes, total, |idx| {
        let mut m = base.clone();
        let mut w = 1.0;
        for (r, &j) in rs.iter().zip(idx) {
            let (p, v) = &r.support[j];
            m.add_outer(v, 1.0);
            w *= p;
        }
        char_poly(&m).scale(&w)
    }))
}

/// `E[χ(Σ r_i r_iᵀ)]` in floating point.
pub fn expected_char_poly(rs: &[DiscreteRandomVector], budget: u64) -> Result<Polynomial> {
    let d = check_family(rs, budget)?;
    expected_char_poly_given(&SymMatrix::zeros(d), rs, budget)
}

fn rational_outer_sum(base: &DMatrix<BigRational>, vs: &[&[BigRational]]) -> DMatrix<BigRational> {
    let mut m = base.clone();
    for v in vs {
        for i in 0..v.len() {
            for j in 0..v.len() {
                m[(i, j)] = m[(i, j)].clone() + v[i].clone() * v[j].clone();
            }
        }
    }
    m
}

/// `E[χ(base + Σ r_i r_iᵀ)]` exactly, with probabilities renormalized to sum to 1.
pub fn expected_char_poly_given_exact(
    base: &DMatrix<BigRational>,
    rs: &[DiscreteRandomVector],
    budget: u64,
) -> Result<RatPoly> {
    if rs.is_empty() {
        return Ok(char_poly_berkowitz(base));
    }
    let d = check_family(rs, budget)?;
    if d != base.nrows() {
        return Err(Error::Dimension {
            expected: base.nrows(),
            found: d,
        });
    }
    let total = outcome_count(rs, budget)?;
    let exact: Vec<_> = rs.iter().map(DiscreteRandomVector::to_rational).collect();
    let sizes: Vec<usize> = rs.iter().map(DiscreteRandomVector::support_size).collect();
    Ok(sum_over_outcomes(&sizes, total, |idx| {
        let mut w = BigRational::one();
        let mut vs = Vec::with_capacity(idx.len());
        for (r, &j) in exact.iter().zip(idx) {
            w *= r[j].0.clone();
            vs.push(r[j].1.as_slice());
        }
        char_poly_berkowitz(&rational_outer_sum(base, &vs)).scale(&w)
    }))
}

/// `E[χ(Σ r_i r_iᵀ)]` exactly.
pub fn expected_char_poly_exact(rs: &[DiscreteRandomVector], budget: u64) -> Result<RatPoly> {
    let d = check_family(rs, budget)?;
    expected_char_poly_given_exact(&DMatrix::zeros(d, d), rs, budget)
}

/// `E[r rᵀ]` from the renormalized exact distribution.
pub fn covariance_exact(r: &DiscreteRandomVector) -> DMatrix<BigRational> {
    let d = r.dim();
    let mut m: DMatrix<BigRational> = DMatrix::zeros(d, d);
    for (p, v) in r.to_rational() {
        for i in 0..d {
            for j in 0..d {
                m[(i, j)] = m[(i, j)].clone() + p.clone() * v[i].clone() * v[j].clone();
            }
        }
    }
    m
}

/// Whether `E[χ(Σ r_i r_iᵀ)] = μ[E r_1 r_1ᵀ, …, E r_m r_mᵀ]` coefficient-wise.
pub fn mixed_identity_check(rs: &[DiscreteRandomVector], mode: Arithmetic, budget: u64) -> Result<bool> {
    match mode {
        Arithmetic::Exact => {
            let lhs = expected_char_poly_exact(rs, budget)?;
            let covs: Vec<_> = rs.iter().map(covariance_exact).collect();
            Ok(lhs == mixed_char_rational(&covs)?)
        }
        Arithmetic::Float => {
            let lhs = expected_char_poly(rs, budget)?;
            let covs = PsdList::new(rs.iter().map(DiscreteRandomVector::covariance).collect())?;
            Ok(lhs.approx_eq(&mixed_char(&covs)?, IDENTITY_TOL))
        }
    }
}

/// `(1 + √ε)²` with `ε = max_i tr(A_i)`, for matrices summing to the identity.
pub fn mixed_char_root_bound(a: &PsdList) -> Result<f64> {
    let dev = a.sum().sub(&SymMatrix::identity(a.dim())).norm();
    if dev > 1e-8 {
        return Err(Error::NotIsotropic(dev));
    }
    Ok((1.0 + a.max_trace().sqrt()).powi(2))
}

/// Largest root of the mixed characteristic polynomial together with its bound.
pub fn mixed_char_largest_root(a: &PsdList) -> Result<(f64, f64)> {
    let bound = mixed_char_root_bound(a)?;
    Ok((largest_root(&mixed_char(a)?)?, bound))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realroot::laguerre_transform;
    use crate::DEFAULT_BUDGET;

    fn dv(v: &[f64]) -> DVector<f64> {
        DVector::from_row_slice(v)
    }

    #[test]
    fn rank_one_example() {
        let v = dv(&[1.0, 2.0, 2.0]);
        let a = PsdList::new(vec![SymMatrix::outer(&v)]).unwrap();
        let expect = Polynomial::from_roots(&[0.0, 0.0, 9.0]);
        assert!(mixed_char(&a).unwrap().approx_eq(&expect, 1e-12));
        assert_eq!(mixed_char_exact(&a).unwrap(), expect.to_rational());
    }

    #[test]
    fn identity_copies_give_laguerre() {
        for (k, n) in [(1, 2), (3, 3), (4, 2), (5, 4)] {
            let a = PsdList::new(vec![SymMatrix::identity(n); k]).unwrap();
            let scaled = laguerre_transform(k, n);
            assert_eq!(mixed_char_exact(&a).unwrap(), scaled.to_rational(), "k={k} n={n}");
        }
        let a = PsdList::new(vec![SymMatrix::identity(2)]).unwrap();
        assert_eq!(mixed_char(&a).unwrap(), Polynomial::new(vec![0.0, -2.0, 1.0]));
    }

    #[test]
    fn rank_two_identity_fails() {
        // A deterministic rank-2 term: E χ = (x − 1)², the differential formula gives x² − 2x.
        let a = PsdList::new(vec![SymMatrix::identity(2)]).unwrap();
        let expected = char_poly(&SymMatrix::identity(2));
        assert!(!mixed_char(&a).unwrap().approx_eq(&expected, 1e-6));
    }

    #[test]
    fn truncated_ring_drops_squares() {
        let z0 = TruncatedMultiAffine::term(1, Poly::<f64>::one());
        assert!((&z0 * &z0).is_zero());
        let z1 = TruncatedMultiAffine::term(2, Poly::<f64>::one());
        assert_eq!((&z0 * &z1).coeff(3), Poly::one());
    }

    #[test]
    fn expected_examples() {
        let v = dv(&[3.0, 4.0]);
        let r = DiscreteRandomVector::deterministic(v);
        let p = expected_char_poly(std::slice::from_ref(&r), DEFAULT_BUDGET).unwrap();
        assert!(p.approx_eq(&Polynomial::from_roots(&[0.0, 25.0]), 1e-12));
        assert!(mixed_identity_check(&[r.clone()], Arithmetic::Exact, DEFAULT_BUDGET).unwrap());
        assert!(mixed_identity_check(&[r], Arithmetic::Float, DEFAULT_BUDGET).unwrap());

        // K2 signing vectors: outcomes (e0 ± e1) each with probability 1/2.
        let r = DiscreteRandomVector::two_point(0.5, dv(&[1.0, 1.0]), dv(&[1.0, -1.0])).unwrap();
        let p = expected_char_poly_exact(&[r], DEFAULT_BUDGET).unwrap();
        assert_eq!(p, Polynomial::new(vec![0.0, -2.0, 1.0]).to_rational());
    }

    #[test]
    fn budget_is_enforced() {
        let r = DiscreteRandomVector::two_point(0.5, dv(&[1.0]), dv(&[0.0])).unwrap();
        let rs = vec![r; 5];
        assert_eq!(
            expected_char_poly(&rs, 16),
            Err(Error::BudgetExceeded { needed: 32, budget: 16 })
        );
    }

    #[test]
    fn distribution_validation() {
        assert!(DiscreteRandomVector::new(vec![(0.5, dv(&[1.0]))]).is_err());
        assert!(DiscreteRandomVector::new(vec![(0.5, dv(&[1.0])), (0.5, dv(&[1.0, 0.0]))]).is_err());
        assert!(DiscreteRandomVector::uniform(vec![dv(&[1.0]); 3]).is_ok());
        let json = r#"[[0.25,[1.0,0.0]],[0.75,[0.0,2.0]]]"#;
        let r: DiscreteRandomVector = serde_json::from_str(json).unwrap();
        assert_eq!(serde_json::to_string(&r).unwrap(), json);
    }

    #[test]
    fn psd_validation() {
        let neg = SymMatrix::identity(2).scale(-1.0);
        assert!(matches!(PsdList::new(vec![neg]), Err(Error::NotPsd { index: 0, .. })));
        assert!(matches!(
            PsdList::new(vec![SymMatrix::identity(2), SymMatrix::identity(3)]),
            Err(Error::Dimension { .. })
        ));
    }

    #[test]
    fn root_bound_examples() {
        let d = 3;
        let basis: Vec<SymMatrix> = (0..d)
            .map(|i| {
                let mut e = DVector::zeros(d);
                e[i] = 1.0;
                SymMatrix::outer(&e)
            })
            .collect();
        let a = PsdList::new(basis).unwrap();
        let (root, bound) = mixed_char_largest_root(&a).unwrap();
        assert_eq!(bound, 4.0);
        assert!(root <= bound + 1e-7);

        let m = 4;
        let a = PsdList::new(vec![SymMatrix::identity(1).scale(1.0 / m as f64); m]).unwrap();
        let bound = mixed_char_root_bound(&a).unwrap();
        assert!((bound - (1.0 + 0.5f64).powi(2)).abs() < 1e-12);

        let a = PsdList::new(vec![SymMatrix::identity(2).scale(0.5)]).unwrap();
        assert!(matches!(mixed_char_root_bound(&a), Err(Error::NotIsotropic(_))));
    }
}
