//! Barrier functions and soft spectral edges.
//!
//! For a real-rooted `f` with roots `λ_i`, the lower barrier `Φ_f(b) = −f′(b)/f(b)`
//! equals `Σ 1/(λ_i − b)` below the roots, and the upper barrier
//! `Φ^f(b) = f′(b)/f(b) = Σ 1/(b − λ_i)` above them. The soft edges `smin_φ` and
//! `smax_φ` are the points where the barrier reaches the sensitivity `φ`.
//!
//! The multivariate barrier of `det(xI + Σ z_i A_i)` in direction `j` is evaluated in
//! closed form as `tr(M⁻¹ A_j)`.

use nalgebra::{Cholesky, DMatrix};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::realroot::{real_roots, Polynomial, SymMatrix};

/// Slack allowed when checking the shift inequalities.
pub const SHIFT_SLACK: f64 = 1e-7;

const BISECTION_ITERS: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Lower,
    Upper,
}

/// A sensitivity `φ > 0` for one side; the upper side additionally needs `φ < 1`
/// for the shift lemma.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BarrierQuery {
    phi: f64,
    side: Side,
}

impl BarrierQuery {
    pub fn new(phi: f64, side: Side) -> Result<Self> {
        check_phi(phi)?;
        if side == Side::Upper && phi >= 1.0 {
            return Err(Error::InvalidParameter(format!(
                "upper shift needs φ < 1, got {phi}"
            )));
        }
        Ok(BarrierQuery { phi, side })
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// `smin_φ` or `smax_φ` of `p` depending on the side.
    pub fn soft_edge(&self, p: &Polynomial) -> Result<f64> {
        match self.side {
            Side::Lower => smin(p, self.phi),
            Side::Upper => smax(p, self.phi),
        }
    }
}

fn check_phi(phi: f64) -> Result<()> {
    if !(phi > 0.0 && phi.is_finite()) {
        return Err(Error::InvalidParameter(format!("φ must be positive, got {phi}")));
    }
    Ok(())
}

fn roots_of(p: &Polynomial) -> Result<Vec<f64>> {
    let r = real_roots(p)?.into_vec();
    if r.is_empty() {
        return Err(Error::InvalidParameter("barrier of a constant polynomial".into()));
    }
    Ok(r)
}

/// `Φ_f(b) = −f′(b)/f(b) = Σ 1/(λ_i − b)` for `b` strictly below every root.
pub fn lower_barrier(p: &Polynomial, b: f64) -> Result<f64> {
    let roots = roots_of(p)?;
    let edge = *roots.last().unwrap();
    if b >= edge {
        return Err(Error::BarrierDomain {
            point: b,
            edge,
            side: "below",
        });
    }
    Ok(lower_sum(&roots, b))
}

/// `Φ^f(b) = f′(b)/f(b) = Σ 1/(b − λ_i)` for `b` strictly above every root.
pub fn upper_barrier(p: &Polynomial, b: f64) -> Result<f64> {
    let roots = roots_of(p)?;
    let edge = roots[0];
    if b <= edge {
        return Err(Error::BarrierDomain {
            point: b,
            edge,
            side: "above",
        });
    }
    Ok(upper_sum(&roots, b))
}

/// `(Φ_f(b), Φ_f′(b)) = (Σ 1/(λ_i − b), Σ 1/(λ_i − b)²)` from the roots.
pub fn lower_barrier_with_derivative(roots: &[f64], b: f64) -> (f64, f64) {
    roots.iter().fold((0.0, 0.0), |(v, d), l| {
        let t = 1.0 / (l - b);
        (v + t, d + t * t)
    })
}

fn lower_sum(roots: &[f64], b: f64) -> f64 {
    roots.iter().map(|l| 1.0 / (l - b)).sum()
}

fn upper_sum(roots: &[f64], b: f64) -> f64 {
    roots.iter().map(|l| 1.0 / (b - l)).sum()
}

/// `smin_φ(f) = min{x : Φ_f(x) = φ}`, found by bisection on
/// `[λ_min − deg/φ − 1, λ_min]` where `Φ_f` increases from below `φ` to `+∞`.
pub fn smin(p: &Polynomial, phi: f64) -> Result<f64> {
    check_phi(phi)?;
    let roots = roots_of(p)?;
    Ok(smin_from_roots(&roots, phi))
}

pub(crate) fn smin_from_roots(roots: &[f64], phi: f64) -> f64 {
    let edge = *roots.last().unwrap();
    let mut lo = edge - roots.len() as f64 / phi - 1.0;
    let mut hi = edge;
    for _ in 0..BISECTION_ITERS {
        if hi - lo < 1e-12 * (1.0 + edge.abs()) {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid >= edge || lower_sum(roots, mid) > phi {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    lo
}

/// `smax_φ(f) = max{x : Φ^f(x) = φ}`, mirror of [`smin`].
pub fn smax(p: &Polynomial, phi: f64) -> Result<f64> {
    check_phi(phi)?;
    let roots = roots_of(p)?;
    Ok(smax_from_roots(&roots, phi))
}

pub(crate) fn smax_from_roots(roots: &[f64], phi: f64) -> f64 {
    let edge = roots[0];
    let mut lo = edge;
    let mut hi = edge + roots.len() as f64 / phi + 1.0;
    for _ in 0..BISECTION_ITERS {
        if hi - lo < 1e-12 * (1.0 + edge.abs()) {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= edge || upper_sum(roots, mid) > phi {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    hi
}

/// `smin_φ((1−D)f) ≥ smin_φ(f) + 1/(1+φ)`, up to [`SHIFT_SLACK`].
pub fn lower_shift_check(p: &Polynomial, phi: f64) -> Result<bool> {
    let before = smin(p, phi)?;
    let after = smin(&p.shift_operator(&1.0), phi)?;
    Ok(after >= before + 1.0 / (1.0 + phi) - SHIFT_SLACK)
}

/// `smax_φ((1−D)f) ≤ smax_φ(f) + 1/(1−φ)` for `0 < φ < 1`, up to [`SHIFT_SLACK`].
pub fn upper_shift_check(p: &Polynomial, phi: f64) -> Result<bool> {
    BarrierQuery::new(phi, Side::Upper)?;
    let before = smax(p, phi)?;
    let after = smax(&p.shift_operator(&1.0), phi)?;
    Ok(after <= before + 1.0 / (1.0 - phi) + SHIFT_SLACK)
}

/// `(n(1−√(k/n))², n(1+√(k/n))²)`, the interval holding every root of `(1−D)^n x^k`.
pub fn laguerre_root_bounds(n: usize, k: usize) -> Result<(f64, f64)> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!("need 1 ≤ k ≤ n, got n={n}, k={k}")));
    }
    let nf = n as f64;
    let r = (k as f64 / nf).sqrt();
    Ok((nf * (1.0 - r).powi(2), nf * (1.0 + r).powi(2)))
}

/// PSD matrices `A_1..A_m` defining `det(xI + Σ z_i A_i)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DetPolyFamily {
    matrices: Vec<SymMatrix>,
}

impl DetPolyFamily {
    pub fn new(matrices: Vec<SymMatrix>) -> Result<Self> {
        let first = matrices.first().ok_or(Error::Empty("matrix family"))?;
        let d = first.dim();
        for (i, a) in matrices.iter().enumerate() {
            if a.dim() != d {
                return Err(Error::Dimension {
                    expected: d,
                    found: a.dim(),
                });
            }
            let min_eig = a.lambda_min();
            if min_eig < -1e-9 {
                return Err(Error::NotPsd { index: i, min_eig });
            }
        }
        Ok(DetPolyFamily { matrices })
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

    /// `M = xI + Σ z_i A_i` at `point = (x, z_1, …, z_m)`.
    pub fn matrix_at(&self, point: &[f64]) -> Result<DMatrix<f64>> {
        if point.len() != self.len() + 1 {
            return Err(Error::Dimension {
                expected: self.len() + 1,
                found: point.len(),
            });
        }
        let d = self.dim();
        let mut m = DMatrix::identity(d, d) * point[0];
        for (a, z) in self.matrices.iter().zip(&point[1..]) {
            m += a.as_matrix() * *z;
        }
        Ok(m)
    }

    fn inverse_at(&self, point: &[f64]) -> Result<DMatrix<f64>> {
        let m = self.matrix_at(point)?;
        Cholesky::new(m)
            .map(|c| c.inverse())
            .ok_or(Error::NotPositiveDefinite)
    }

    fn check_index(&self, j: usize) -> Result<()> {
        if j >= self.len() {
            return Err(Error::InvalidParameter(format!(
                "direction {j} out of range for {} matrices",
                self.len()
            )));
        }
        Ok(())
    }

    /// `log det(xI + Σ z_i A_i)`, for finite-difference cross-checks.
    pub fn log_det(&self, point: &[f64]) -> Result<f64> {
        let m = self.matrix_at(point)?;
        let c = Cholesky::new(m).ok_or(Error::NotPositiveDefinite)?;
        Ok(2.0 * c.l().diagonal().iter().map(|x| x.ln()).sum::<f64>())
    }
}

fn trace_product(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    a.component_mul(&b.transpose()).sum()
}

/// `Φ_j(z) = ∂_{z_j} f / f = tr(M⁻¹ A_j)` for `f = det(xI + Σ z_i A_i)`, with `j` 0-based
/// over the matrices and `point = (x, z_1, …, z_m)`. The point must make `M` positive definite.
pub fn multivariate_barrier(fam: &DetPolyFamily, j: usize, point: &[f64]) -> Result<f64> {
    fam.check_index(j)?;
    let inv = fam.inverse_at(point)?;
    Ok(trace_product(&inv, fam.matrices[j].as_matrix()))
}

/// Barrier in direction `i` of `(1 − ∂_{z_j}) f`:
/// `Φ_i − ∂_i Φ_j / (1 − Φ_j)` with `∂_i Φ_j = −tr(M⁻¹A_i M⁻¹A_j)`. Needs `Φ_j < 1`.
pub fn shifted_multivariate_barrier(
    fam: &DetPolyFamily,
    j: usize,
    i: usize,
    point: &[f64],
) -> Result<f64> {
    fam.check_index(j)?;
    fam.check_index(i)?;
    let inv = fam.inverse_at(point)?;
    let aj = fam.matrices[j].as_matrix();
    let ai = fam.matrices[i].as_matrix();
    let phi_j = trace_product(&inv, aj);
    if phi_j >= 1.0 {
        return Err(Error::InvalidParameter(format!(
            "(1 − ∂_j)f is not positive at the point (Φ_j = {phi_j})"
        )));
    }
    let phi_i = trace_product(&inv, ai);
    let dij = -trace_product(&(&inv * ai), &(&inv * aj));
    Ok(phi_i - dij / (1.0 - phi_j))
}

/// Given a φ-robust upper bound `z` of `f` (M positive definite and every `Φ_i(z) ≤ φ`),
/// checks that `z + e_j/(1−φ)` is a φ-robust upper bound of `(1 − ∂_{z_j}) f`.
/// The x-coordinate (`point[0]`) is held fixed.
pub fn smax_shift_witness(fam: &DetPolyFamily, j: usize, point: &[f64], phi: f64) -> Result<bool> {
    BarrierQuery::new(phi, Side::Upper)?;
    fam.check_index(j)?;
    for i in 0..fam.len() {
        let v = multivariate_barrier(fam, i, point)?;
        if v > phi {
            return Err(Error::InvalidParameter(format!(
                "point is not φ-robust: Φ_{i} = {v} > {phi}"
            )));
        }
    }
    let mut shifted = point.to_vec();
    shifted[j + 1] += 1.0 / (1.0 - phi);
    // Φ_j is nonincreasing in every coordinate, so Φ_j(shifted) < 1 keeps
    // (1 − ∂_j)f = f·(1 − Φ_j) positive on the whole orthant above `shifted`.
    if multivariate_barrier(fam, j, &shifted)? >= 1.0 {
        return Ok(false);
    }
    for i in 0..fam.len() {
        if shifted_multivariate_barrier(fam, j, i, &shifted)? > phi + SHIFT_SLACK {
            return Ok(false);
        }
    }
    Ok(true)
}
