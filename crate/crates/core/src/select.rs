//! The interlacing-family greedy.
//!
//! Independent finitely supported random vectors are fixed one at a time. At each
//! level every realization of the next vector is scored by the `k`-th largest root of
//! its conditional expected characteristic polynomial, and the best child is kept.
//! Common interlacing of the children guarantees the realized matrix does at least as
//! well as the root of the initial expected polynomial.

use nalgebra::{DMatrix, DVector};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::{matching_poly, signed_adjacency, signing_random_vectors, Graph, Signing};
use crate::mixedchar::{
    covariance_exact, expected_char_poly_given, expected_char_poly_given_exact, mixed_char_given,
    mixed_char_given_rational, outcome_count, DiscreteRandomVector, PsdList,
};
use crate::realroot::{
    char_poly, char_poly_berkowitz, have_common_interlacing, kth_largest_root, largest_root,
    rational_from_f64, Poly, Polynomial, RatPoly, SymMatrix,
};
use crate::{Arithmetic, DEFAULT_BUDGET};

/// Slack in the achieved-versus-pledged comparison.
pub const CERTIFICATE_SLACK: f64 = 1e-7;
/// Tolerance for isotropy of input vector systems.
pub const ISOTROPY_TOL: f64 = 1e-8;
/// Largest outcome count for which the closed form is checked against enumeration.
pub const CROSS_CHECK_OUTCOMES: u64 = 1 << 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Maximize,
    Minimize,
}

/// Optimize the `k`-th largest root (1-based) in the given direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Objective {
    pub k: usize,
    pub direction: Direction,
}

impl Objective {
    fn better(&self, a: f64, b: f64) -> bool {
        match self.direction {
            Direction::Maximize => a > b,
            Direction::Minimize => a < b,
        }
    }
}

/// How conditional expected polynomials are computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    /// Average over every joint outcome of the remaining vectors.
    Enumerate,
    /// The mixed characteristic polynomial of the remaining covariances with the fixed sum as base.
    Differential,
    /// `(1 − (1/m)D)^r χ[Σ fixed]`, valid when each of the `r` remaining vectors is uniform
    /// over the same `m` vectors whose outer products sum to the identity.
    IsotropicClosedForm { m: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SelectConfig {
    pub budget: u64,
    pub mode: Arithmetic,
    /// Check that the children at every level have a common interlacing.
    pub verify_interlacing: bool,
    /// Compare the root-level polynomial against the [`Expectation::Differential`] path.
    pub cross_check: bool,
}

impl Default for SelectConfig {
    fn default() -> Self {
        SelectConfig {
            budget: DEFAULT_BUDGET,
            mode: Arithmetic::Float,
            verify_interlacing: true,
            cross_check: false,
        }
    }
}

/// Vectors fixed so far, the random vectors still to be fixed, and the objective.
#[derive(Clone, Debug, PartialEq)]
pub struct AssignmentState {
    dim: usize,
    fixed: Vec<DVector<f64>>,
    remaining: Vec<DiscreteRandomVector>,
    objective: Objective,
    expectation: Expectation,
}

impl AssignmentState {
    pub fn new(
        dim: usize,
        remaining: Vec<DiscreteRandomVector>,
        objective: Objective,
        expectation: Expectation,
    ) -> Result<Self> {
        for r in &remaining {
            if r.dim() != dim {
                return Err(Error::Dimension {
                    expected: dim,
                    found: r.dim(),
                });
            }
        }
        if objective.k == 0 || objective.k > dim {
            return Err(Error::RootIndex {
                k: objective.k,
                degree: dim,
            });
        }
        if let Expectation::IsotropicClosedForm { m } = expectation {
            if m == 0 {
                return Err(Error::InvalidParameter("closed form needs m ≥ 1".into()));
            }
        }
        Ok(AssignmentState {
            dim,
            fixed: Vec::new(),
            remaining,
            objective,
            expectation,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn fixed(&self) -> &[DVector<f64>] {
        &self.fixed
    }

    pub fn remaining(&self) -> &[DiscreteRandomVector] {
        &self.remaining
    }

    pub fn objective(&self) -> Objective {
        self.objective
    }

    /// The state after the next random vector takes its `j`-th support value.
    pub fn child(&self, j: usize) -> AssignmentState {
        let mut fixed = self.fixed.clone();
        fixed.push(self.remaining[0].support()[j].1.clone());
        AssignmentState {
            dim: self.dim,
            fixed,
            remaining: self.remaining[1..].to_vec(),
            objective: self.objective,
            expectation: self.expectation,
        }
    }

    pub fn fixed_sum(&self) -> SymMatrix {
        let mut m = SymMatrix::zeros(self.dim);
        for v in &self.fixed {
            m.add_outer(v, 1.0);
        }
        m
    }

    fn fixed_sum_exact(&self) -> DMatrix<BigRational> {
        let mut m: DMatrix<BigRational> = DMatrix::zeros(self.dim, self.dim);
        for v in &self.fixed {
            let v: Vec<BigRational> = v.iter().map(|x| rational_from_f64(*x)).collect();
            for i in 0..self.dim {
                for j in 0..self.dim {
                    m[(i, j)] = m[(i, j)].clone() + v[i].clone() * v[j].clone();
                }
            }
        }
        m
    }
}

/// `E[χ(Σ fixed + Σ remaining)]` using the state's expectation strategy.
pub fn conditional_expected_poly(state: &AssignmentState, config: &SelectConfig) -> Result<Polynomial> {
    conditional_with(state, state.expectation, config)
}

fn conditional_with(
    state: &AssignmentState,
    expectation: Expectation,
    config: &SelectConfig,
) -> Result<Polynomial> {
    match config.mode {
        Arithmetic::Float => conditional_float(state, expectation, config.budget),
        Arithmetic::Exact => Ok(conditional_exact(state, expectation, config.budget)?.to_f64()),
    }
}

fn conditional_float(state: &AssignmentState, expectation: Expectation, budget: u64) -> Result<Polynomial> {
    let base = state.fixed_sum();
    if state.remaining.is_empty() {
        return Ok(char_poly(&base));
    }
    match expectation {
        Expectation::Enumerate => expected_char_poly_given(&base, &state.remaining, budget),
        Expectation::Differential => {
            let covs = PsdList::new(state.remaining.iter().map(DiscreteRandomVector::covariance).collect())?;
            mixed_char_given(&base, &covs)
        }
        Expectation::IsotropicClosedForm { m } => {
            let c = 1.0 / m as f64;
            Ok((0..state.remaining.len()).fold(char_poly(&base), |p, _| p.shift_operator(&c)))
        }
    }
}

fn conditional_exact(state: &AssignmentState, expectation: Expectation, budget: u64) -> Result<RatPoly> {
    let base = state.fixed_sum_exact();
    if state.remaining.is_empty() {
        return Ok(char_poly_berkowitz(&base));
    }
    match expectation {
        Expectation::Enumerate => expected_char_poly_given_exact(&base, &state.remaining, budget),
        Expectation::Differential => {
            let covs: Vec<_> = state.remaining.iter().map(covariance_exact).collect();
            mixed_char_given_rational(&base, &covs)
        }
        Expectation::IsotropicClosedForm { m } => {
            let c = BigRational::one() / BigRational::from_integer(m.into());
            Ok((0..state.remaining.len()).fold(char_poly_berkowitz(&base), |p, _| p.shift_operator(&c)))
        }
    }
}

/// Outcome of a greedy walk.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SelectionCertificate {
    pub objective: Objective,
    /// Chosen support index for each random vector, in order.
    pub choices: Vec<usize>,
    /// Characteristic polynomial of the realized sum.
    pub final_poly: Polynomial,
    /// `λ_k` of the realized sum.
    pub achieved: f64,
    /// `λ_k` of the initial expected polynomial.
    pub pledged: f64,
    /// `λ_k` of the conditional polynomial along the chosen path, starting with `pledged`.
    pub trace: Vec<f64>,
}

impl SelectionCertificate {
    /// `achieved ≥ pledged` when maximizing, `≤` when minimizing, up to [`CERTIFICATE_SLACK`].
    pub fn is_sound(&self) -> bool {
        match self.objective.direction {
            Direction::Maximize => self.achieved >= self.pledged - CERTIFICATE_SLACK,
            Direction::Minimize => self.achieved <= self.pledged + CERTIFICATE_SLACK,
        }
    }

    /// Successive entries of the trace never move against the objective.
    pub fn is_monotone(&self) -> bool {
        self.trace.windows(2).all(|w| match self.objective.direction {
            Direction::Maximize => w[1] >= w[0] - CERTIFICATE_SLACK,
            Direction::Minimize => w[1] <= w[0] + CERTIFICATE_SLACK,
        })
    }
}

/// Walks the outcome tree, keeping at each level the child whose conditional polynomial
/// has the best `λ_k`. Ties go to the lowest support index.
pub fn greedy_walk(state: &AssignmentState, config: &SelectConfig) -> Result<SelectionCertificate> {
    let k = state.objective.k;
    let root_poly = conditional_expected_poly(state, config)?;
    if config.cross_check && state.expectation != Expectation::Differential && !state.remaining.is_empty() {
        let other = conditional_with(state, Expectation::Differential, config)?;
        if !root_poly.approx_eq(&other, 1e-8) {
            return Err(Error::Invariant(
                "conditional expectation paths disagree at the root".into(),
            ));
        }
    }
    let pledged = kth_largest_root(&root_poly, k)?;
    let mut trace = vec![pledged];
    let mut choices = Vec::with_capacity(state.remaining.len());
    let mut cur = state.clone();
    while !cur.remaining.is_empty() {
        if cur.expectation == Expectation::Enumerate {
            outcome_count(&cur.remaining, config.budget)?;
        }
        let size = cur.remaining[0].support_size();
        let children: Vec<Polynomial> = (0..size)
            .into_par_iter()
            .map(|j| conditional_expected_poly(&cur.child(j), config))
            .collect::<Result<_>>()?;
        if config.verify_interlacing && !have_common_interlacing(&children)? {
            return Err(Error::Invariant(format!(
                "children at level {} have no common interlacing",
                choices.len()
            )));
        }
        let mut best = 0;
        let mut best_val = kth_largest_root(&children[0], k)?;
        for (j, c) in children.iter().enumerate().skip(1) {
            let v = kth_largest_root(c, k)?;
            if state.objective.better(v, best_val) {
                best = j;
                best_val = v;
            }
        }
        choices.push(best);
        trace.push(best_val);
        cur = cur.child(best);
    }
    let realized = cur.fixed_sum();
    let achieved = realized.eigenvalues()[k - 1];
    Ok(SelectionCertificate {
        objective: state.objective,
        choices,
        final_poly: char_poly(&realized),
        achieved,
        pledged,
        trace,
    })
}

/// Finite list of vectors in `R^dim`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "VectorSystemRepr", into = "VectorSystemRepr")]
pub struct VectorSystem {
    dim: usize,
    vectors: Vec<DVector<f64>>,
}

#[derive(Serialize, Deserialize)]
struct VectorSystemRepr {
    dim: usize,
    vectors: Vec<Vec<f64>>,
}

impl TryFrom<VectorSystemRepr> for VectorSystem {
    type Error = Error;

    fn try_from(r: VectorSystemRepr) -> Result<Self> {
        VectorSystem::new(r.dim, r.vectors.into_iter().map(DVector::from_vec).collect())
    }
}

impl From<VectorSystem> for VectorSystemRepr {
    fn from(v: VectorSystem) -> Self {
        VectorSystemRepr {
            dim: v.dim,
            vectors: v.vectors.iter().map(|x| x.iter().copied().collect()).collect(),
        }
    }
}

impl VectorSystem {
    pub fn new(dim: usize, vectors: Vec<DVector<f64>>) -> Result<Self> {
        if vectors.is_empty() || dim == 0 {
            return Err(Error::Empty("vector system"));
        }
        for v in &vectors {
            if v.len() != dim {
                return Err(Error::Dimension {
                    expected: dim,
                    found: v.len(),
                });
            }
            if v.iter().any(|x| !x.is_finite()) {
                return Err(Error::InvalidParameter("vector entry is not finite".into()));
            }
        }
        Ok(VectorSystem { dim, vectors })
    }

    /// The standard basis of `R^n`.
    pub fn standard_basis(n: usize) -> Self {
        let vectors = (0..n).map(|i| unit(n, i, 1.0)).collect();
        VectorSystem { dim: n, vectors }
    }

    /// Every basis vector of `R^n` twice, scaled by `1/√2`.
    pub fn duplicated_basis(n: usize) -> Self {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let vectors = (0..2 * n).map(|i| unit(n, i / 2, s)).collect();
        VectorSystem { dim: n, vectors }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[DVector<f64>] {
        &self.vectors
    }

    /// `Σ v_i v_iᵀ`.
    pub fn frame_operator(&self) -> SymMatrix {
        self.subset_sum(0..self.len())
    }

    pub fn subset_sum(&self, idx: impl IntoIterator<Item = usize>) -> SymMatrix {
        let mut m = SymMatrix::zeros(self.dim);
        for i in idx {
            m.add_outer(&self.vectors[i], 1.0);
        }
        m
    }

    /// `‖Σ v_i v_iᵀ − I‖`.
    pub fn isotropy_deviation(&self) -> f64 {
        self.frame_operator().sub(&SymMatrix::identity(self.dim)).norm()
    }

    pub fn check_isotropic(&self) -> Result<()> {
        let dev = self.isotropy_deviation();
        if dev > ISOTROPY_TOL {
            return Err(Error::NotIsotropic(dev));
        }
        Ok(())
    }

    pub fn max_norm_sq(&self) -> f64 {
        self.vectors.iter().map(|v| v.norm_squared()).fold(0.0, f64::max)
    }
}

fn unit(n: usize, i: usize, s: f64) -> DVector<f64> {
    let mut e = DVector::zeros(n);
    e[i] = s;
    e
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RestrictedInvertibility {
    /// Chosen column indices, in the order picked.
    pub subset: Vec<usize>,
    /// `(1 − √(k/n))² n/m`.
    pub bound: f64,
    pub certificate: SelectionCertificate,
}

impl RestrictedInvertibility {
    pub fn holds(&self) -> bool {
        self.certificate.is_sound() && self.certificate.achieved >= self.bound - CERTIFICATE_SLACK
    }
}

/// Picks `k < n` columns of an isotropic system with `λ_k(Σ_{i∈S} v_i v_iᵀ) ≥ (1 − √(k/n))² n/m`.
/// Each of the `k` draws is uniform over the `m` vectors; conditional polynomials use the
/// closed form, cross-checked against enumeration at the root for small instances.
pub fn restricted_invertibility_select(
    v: &VectorSystem,
    k: usize,
    config: &SelectConfig,
) -> Result<RestrictedInvertibility> {
    v.check_isotropic()?;
    let n = v.dim();
    let m = v.len();
    if k == 0 || k >= n {
        return Err(Error::InvalidParameter(format!("need 1 ≤ k < n, got k={k}, n={n}")));
    }
    let draw = DiscreteRandomVector::uniform(v.vectors.clone())?;
    let objective = Objective {
        k,
        direction: Direction::Maximize,
    };
    let state = AssignmentState::new(n, vec![draw; k], objective, Expectation::IsotropicClosedForm { m })?;
    if outcome_count(&state.remaining, config.budget.min(CROSS_CHECK_OUTCOMES)).is_ok() {
        let closed = conditional_expected_poly(&state, config)?;
        let enumerated = conditional_with(&state, Expectation::Enumerate, config)?;
        if !closed.approx_eq(&enumerated, 1e-8) {
            return Err(Error::Invariant("closed form disagrees with enumeration".into()));
        }
    }
    let certificate = greedy_walk(&state, config)?;
    let subset = certificate.choices.clone();
    let mut sorted = subset.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != subset.len() {
        return Err(Error::Invariant(format!("greedy repeated a column: {subset:?}")));
    }
    let bound = (1.0 - (k as f64 / n as f64).sqrt()).powi(2) * n as f64 / m as f64;
    Ok(RestrictedInvertibility {
        subset,
        bound,
        certificate,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeaverPartition {
    pub s1: Vec<usize>,
    pub s2: Vec<usize>,
    /// `(‖Σ_{S1} v vᵀ‖, ‖Σ_{S2} v vᵀ‖)`.
    pub norms: (f64, f64),
    /// `(1 + √(2α))² / 2`.
    pub bound: f64,
    pub certificate: SelectionCertificate,
}

impl WeaverPartition {
    pub fn holds(&self) -> bool {
        self.certificate.is_sound() && self.norms.0.max(self.norms.1) <= self.bound + CERTIFICATE_SLACK
    }
}

/// Splits an isotropic system into two parts whose frame operators both have norm at most
/// `(1 + √(2α))²/2`, where `α ≥ max ‖v_i‖²`. Each `v_i` is lifted to `√2(v_i, 0)` or
/// `√2(0, v_i)` with probability 1/2 and the greedy minimizes the largest root in `R^{2d}`.
pub fn weaver_partition(v: &VectorSystem, alpha: f64, config: &SelectConfig) -> Result<WeaverPartition> {
    v.check_isotropic()?;
    let max = v.max_norm_sq();
    if !(alpha >= max - 1e-12) {
        return Err(Error::InvalidParameter(format!(
            "α = {alpha} is below the largest squared norm {max}"
        )));
    }
    let d = v.dim();
    let s = std::f64::consts::SQRT_2;
    let lifted: Vec<DiscreteRandomVector> = v
        .vectors
        .iter()
        .map(|x| {
            let mut a = DVector::zeros(2 * d);
            let mut b = DVector::zeros(2 * d);
            a.rows_mut(0, d).copy_from(&(x * s));
            b.rows_mut(d, d).copy_from(&(x * s));
            DiscreteRandomVector::two_point(0.5, a, b)
        })
        .collect::<Result<_>>()?;
    let objective = Objective {
        k: 1,
        direction: Direction::Minimize,
    };
    let state = AssignmentState::new(2 * d, lifted, objective, Expectation::Enumerate)?;
    let certificate = greedy_walk(&state, config)?;
    let (mut s1, mut s2) = (Vec::new(), Vec::new());
    for (i, c) in certificate.choices.iter().enumerate() {
        if *c == 0 {
            s1.push(i);
        } else {
            s2.push(i);
        }
    }
    let norm = |idx: &[usize]| {
        if idx.is_empty() {
            0.0
        } else {
            v.subset_sum(idx.iter().copied()).lambda_max()
        }
    };
    let norms = (norm(&s1), norm(&s2));
    Ok(WeaverPartition {
        s1,
        s2,
        norms,
        bound: (1.0 + (2.0 * alpha).sqrt()).powi(2) / 2.0,
        certificate,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SigningSelection {
    pub signing: Signing,
    /// `λ_max(A_s)`.
    pub lambda_max: f64,
    /// `λ_max(μ_G)`.
    pub matching_root: f64,
    /// `2√(d−1)`.
    pub ramanujan_bound: f64,
    pub certificate: SelectionCertificate,
}

impl SigningSelection {
    pub fn holds(&self) -> bool {
        self.certificate.is_sound()
            && self.lambda_max <= self.matching_root + CERTIFICATE_SLACK
            && self.matching_root <= self.ramanujan_bound + CERTIFICATE_SLACK
    }
}

/// Signs a d-regular graph so that `λ_max(A_s) ≤ λ_max(μ_G) ≤ 2√(d−1)`. Edge `(a, b)`
/// contributes `e_a + e_b` or `e_a − e_b`, and `Σ r rᵀ = A_s + dI`.
pub fn signing_select(g: &Graph, config: &SelectConfig) -> Result<SigningSelection> {
    let d = g.regular_degree().ok_or(Error::NotRegular)?;
    if g.num_edges() == 0 {
        return Err(Error::Empty("edge set"));
    }
    let rs = signing_random_vectors(g);
    outcome_count(&rs, config.budget)?;
    let objective = Objective {
        k: 1,
        direction: Direction::Minimize,
    };
    let state = AssignmentState::new(g.n(), rs, objective, Expectation::Enumerate)?;
    let certificate = greedy_walk(&state, config)?;
    let signs = certificate
        .choices
        .iter()
        .map(|c| if *c == 0 { 1 } else { -1 })
        .collect();
    let signing = Signing::new(signs)?;
    let lambda_max = signed_adjacency(g, &signing)?.lambda_max();
    let matching_root = largest_root(&matching_poly(g)?.to_f64())?;
    Ok(SigningSelection {
        signing,
        lambda_max,
        matching_root,
        ramanujan_bound: 2.0 * (d.saturating_sub(1) as f64).sqrt(),
        certificate,
    })
}

/// Exact expected polynomial `E[χ(A_s + dI)]` over all signings, shifted back by `d`;
/// equals the matching polynomial.
pub fn expected_signing_poly(g: &Graph, budget: u64) -> Result<RatPoly> {
    let d = g.regular_degree().ok_or(Error::NotRegular)?;
    let rs = signing_random_vectors(g);
    let p = expected_char_poly_given_exact(&DMatrix::zeros(g.n(), g.n()), &rs, budget)?;
    // p(x) = q(x − d); recover q(y) = p(y + d) by Taylor expansion around d.
    let shift = BigRational::from_integer((d as i64).into());
    let mut out = vec![BigRational::zero(); p.coeffs().len()];
    let mut cur = p.clone();
    let mut fact = BigRational::one();
    for (i, slot) in out.iter_mut().enumerate() {
        if i > 0 {
            fact *= BigRational::from_integer((i as i64).into());
        }
        *slot = cur.eval(&shift) / fact.clone();
        cur = cur.derivative();
    }
    Ok(Poly::new(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realroot::IntPoly;

    fn cfg() -> SelectConfig {
        SelectConfig {
            cross_check: true,
            ..SelectConfig::default()
        }
    }

    #[test]
    fn deterministic_inputs_are_forced() {
        let rs = vec![
            DiscreteRandomVector::deterministic(DVector::from_row_slice(&[1.0, 0.0])),
            DiscreteRandomVector::deterministic(DVector::from_row_slice(&[1.0, 1.0])),
        ];
        let obj = Objective {
            k: 1,
            direction: Direction::Maximize,
        };
        let state = AssignmentState::new(2, rs, obj, Expectation::Enumerate).unwrap();
        let cert = greedy_walk(&state, &cfg()).unwrap();
        assert_eq!(cert.choices, vec![0, 0]);
        assert!((cert.achieved - cert.pledged).abs() < 1e-12);
    }

    #[test]
    fn empty_remaining_is_char_poly() {
        let obj = Objective {
            k: 1,
            direction: Direction::Minimize,
        };
        let state = AssignmentState::new(3, vec![], obj, Expectation::Enumerate).unwrap();
        assert_eq!(
            conditional_expected_poly(&state, &cfg()).unwrap(),
            Polynomial::monomial(1.0, 3)
        );
    }

    #[test]
    fn closed_form_matches_laguerre() {
        let v = VectorSystem::standard_basis(3);
        let draw = DiscreteRandomVector::uniform(v.vectors().to_vec()).unwrap();
        let obj = Objective {
            k: 2,
            direction: Direction::Maximize,
        };
        let state =
            AssignmentState::new(3, vec![draw; 2], obj, Expectation::IsotropicClosedForm { m: 3 }).unwrap();
        let exact = SelectConfig {
            mode: Arithmetic::Exact,
            ..cfg()
        };
        let closed = conditional_exact(&state, state.expectation, exact.budget).unwrap();
        let enumerated = conditional_exact(&state, Expectation::Enumerate, exact.budget).unwrap();
        assert_eq!(closed, enumerated);
        // With m = n the closed form is (1 − D/n)^k xⁿ; rescaling by n gives (1 − D)^k xⁿ.
        let rescaled: Vec<f64> = conditional_expected_poly(&state, &cfg())
            .unwrap()
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| c * 3f64.powi(3 - i as i32))
            .collect();
        assert!(Polynomial::new(rescaled).approx_eq(&crate::realroot::laguerre_transform(2, 3), 1e-12));
    }

    #[test]
    fn restricted_invertibility_examples() {
        for n in 2..5 {
            for k in 1..n {
                let r = restricted_invertibility_select(&VectorSystem::standard_basis(n), k, &cfg()).unwrap();
                assert!(r.holds());
                assert!((r.certificate.achieved - 1.0).abs() < 1e-12);
            }
        }
        let r = restricted_invertibility_select(&VectorSystem::duplicated_basis(2), 1, &cfg()).unwrap();
        assert!((r.certificate.achieved - 0.5).abs() < 1e-12);
        assert!((r.bound - (1.0 - 0.5f64.sqrt()).powi(2) * 0.5).abs() < 1e-15);
        assert!(r.holds());
        assert!(restricted_invertibility_select(&VectorSystem::standard_basis(3), 3, &cfg()).is_err());
        let scaled = VectorSystem::new(2, vec![DVector::from_row_slice(&[2.0, 0.0])]).unwrap();
        assert!(matches!(
            restricted_invertibility_select(&scaled, 1, &cfg()),
            Err(Error::NotIsotropic(_))
        ));
    }

    #[test]
    fn weaver_examples() {
        let w = weaver_partition(&VectorSystem::duplicated_basis(3), 0.5, &cfg()).unwrap();
        assert!(w.holds());
        assert_eq!(w.bound, 2.0);
        assert!((w.norms.0 - 0.5).abs() < 1e-12 && (w.norms.1 - 0.5).abs() < 1e-12);
        assert!(weaver_partition(&VectorSystem::duplicated_basis(3), 0.4, &cfg()).is_err());

        let s = std::f64::consts::FRAC_1_SQRT_2;
        let scalars = VectorSystem::new(1, vec![DVector::from_element(1, s), DVector::from_element(1, -s)]).unwrap();
        let w = weaver_partition(&scalars, 0.5, &cfg()).unwrap();
        assert_eq!((w.s1.len(), w.s2.len()), (1, 1));
    }

    #[test]
    fn signing_examples() {
        let k2 = signing_select(&Graph::complete(2), &cfg()).unwrap();
        assert!((k2.lambda_max - 1.0).abs() < 1e-12);
        assert!(k2.certificate.is_sound());

        let k4 = signing_select(&Graph::complete(4), &cfg()).unwrap();
        let target = (3.0 + 6f64.sqrt()).sqrt();
        assert!((k4.matching_root - target).abs() < 1e-9);
        assert!(k4.lambda_max <= target + 1e-7);
        assert!(k4.holds());
        // The pledge is the matching root shifted by d.
        assert!((k4.certificate.pledged - 3.0 - target).abs() < 1e-9);
        assert!(signing_select(&Graph::path(3), &cfg()).is_err());
    }

    #[test]
    fn expected_signing_poly_is_matching_poly() {
        for g in [Graph::complete(4), Graph::complete_bipartite(2, 2), Graph::cycle(5).unwrap()] {
            let mu: IntPoly = matching_poly(&g).unwrap();
            assert_eq!(expected_signing_poly(&g, DEFAULT_BUDGET).unwrap(), mu.to_rational());
        }
    }

    #[test]
    fn certificate_serializes() {
        let r = restricted_invertibility_select(&VectorSystem::standard_basis(3), 2, &cfg()).unwrap();
        let json = serde_json::to_string(&r.certificate).unwrap();
        let back: SelectionCertificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back.choices, r.certificate.choices);
        let sys: VectorSystem = serde_json::from_str(r#"{"dim":2,"vectors":[[1,0],[0,1]]}"#).unwrap();
        assert_eq!(sys, VectorSystem::standard_basis(2));
    }
}
