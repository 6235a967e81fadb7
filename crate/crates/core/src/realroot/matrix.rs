use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_rational::BigRational;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::{rational_from_f64, Poly, Polynomial, Ring};
use crate::error::{Error, Result};

/// Dense real symmetric matrix. Symmetry is exact, checked on construction.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    inner: DMatrix<f64>,
}

impl SymMatrix {
    pub fn new(m: DMatrix<f64>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::Dimension {
                expected: m.nrows(),
                found: m.ncols(),
            });
        }
        for i in 0..m.nrows() {
            for j in (i + 1)..m.ncols() {
                if m[(i, j)] != m[(j, i)] {
                    return Err(Error::NotSymmetric(i, j));
                }
            }
        }
        Ok(SymMatrix { inner: m })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        for r in rows {
            if r.len() != n {
                return Err(Error::Dimension {
                    expected: n,
                    found: r.len(),
                });
            }
        }
        SymMatrix::new(DMatrix::from_fn(n, n, |i, j| rows[i][j]))
    }

    /// `(M + Mᵀ)/2`, for matrices that are symmetric up to rounding.
    pub fn symmetrize(m: &DMatrix<f64>) -> Self {
        SymMatrix {
            inner: (m + m.transpose()) * 0.5,
        }
    }

    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            inner: DMatrix::zeros(n, n),
        }
    }

    pub fn identity(n: usize) -> Self {
        SymMatrix {
            inner: DMatrix::identity(n, n),
        }
    }

    pub fn outer(v: &DVector<f64>) -> Self {
        SymMatrix {
            inner: v * v.transpose(),
        }
    }

    pub fn dim(&self) -> usize {
        self.inner.nrows()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.inner[(i, j)]
    }

    pub fn as_matrix(&self) -> &DMatrix<f64> {
        &self.inner
    }

    pub fn into_matrix(self) -> DMatrix<f64> {
        self.inner
    }

    pub fn add(&self, other: &SymMatrix) -> SymMatrix {
        SymMatrix {
            inner: &self.inner + &other.inner,
        }
    }

    pub fn sub(&self, other: &SymMatrix) -> SymMatrix {
        SymMatrix {
            inner: &self.inner - &other.inner,
        }
    }

    pub fn scale(&self, c: f64) -> SymMatrix {
        SymMatrix {
            inner: &self.inner * c,
        }
    }

    /// `self + c·vvᵀ`, accumulated entrywise so the result stays exactly symmetric.
    pub fn add_outer(&mut self, v: &DVector<f64>, c: f64) {
        let n = self.dim();
        for i in 0..n {
            let vi = c * v[i];
            for j in 0..n {
                self.inner[(i, j)] += vi * v[j];
            }
        }
    }

    pub fn trace(&self) -> f64 {
        self.inner.trace()
    }

    /// Eigenvalues sorted descending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        if self.dim() == 0 {
            return Vec::new();
        }
        let mut ev: Vec<f64> = SymmetricEigen::new(self.inner.clone())
            .eigenvalues
            .iter()
            .copied()
            .collect();
        ev.sort_by(|a, b| b.total_cmp(a));
        ev
    }

    pub fn lambda_max(&self) -> f64 {
        self.eigenvalues().first().copied().unwrap_or(0.0)
    }

    pub fn lambda_min(&self) -> f64 {
        self.eigenvalues().last().copied().unwrap_or(0.0)
    }

    /// Spectral norm.
    pub fn norm(&self) -> f64 {
        self.eigenvalues().iter().fold(0.0f64, |m, e| m.max(e.abs()))
    }

    /// Smallest eigenvalue ≥ −tol·max(trace, 1e−12).
    pub fn is_psd(&self, tol: f64) -> bool {
        self.lambda_min() >= -tol * self.trace().max(1e-12)
    }

    pub fn to_rational(&self) -> DMatrix<BigRational> {
        self.inner.map(rational_from_f64)
    }
}

#[derive(Serialize, Deserialize)]
struct SymMatrixRepr {
    n: usize,
    entries: Vec<Vec<f64>>,
}

impl Serialize for SymMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let n = self.dim();
        SymMatrixRepr {
            n,
            entries: (0..n)
                .map(|i| (0..n).map(|j| self.inner[(i, j)]).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = SymMatrixRepr::deserialize(d)?;
        if repr.entries.len() != repr.n {
            return Err(serde::de::Error::custom(format!(
                "dimension field {} but {} rows",
                repr.n,
                repr.entries.len()
            )));
        }
        SymMatrix::from_rows(&repr.entries).map_err(serde::de::Error::custom)
    }
}

/// Characteristic polynomial det(xI − M) from the symmetric eigenvalues.
pub fn char_poly(m: &SymMatrix) -> Polynomial {
    Poly::from_roots(&m.eigenvalues())
}

/// Division-free characteristic polynomial det(xI − M) (Berkowitz), valid over any commutative ring.
pub fn char_poly_berkowitz<T: Ring>(m: &DMatrix<T>) -> Poly<T> {
    let n = m.nrows();
    assert_eq!(n, m.ncols(), "square matrix required");
    // Coefficients highest degree first while building.
    let mut p: Vec<T> = vec![T::one()];
    for r in 0..n {
        // Toeplitz column: 1, −a_rr, −R·C, −R·A·C, …, −R·A^{r−1}·C
        let mut col = Vec::with_capacity(r + 2);
        col.push(T::one());
        col.push(-m[(r, r)].clone());
        let mut v: Vec<T> = (0..r).map(|i| m[(i, r)].clone()).collect();
        for _ in 0..r {
            let rc = (0..r).fold(T::zero(), |acc, j| acc + m[(r, j)].clone() * v[j].clone());
            col.push(-rc);
            v = (0..r)
                .map(|i| (0..r).fold(T::zero(), |acc, j| acc + m[(i, j)].clone() * v[j].clone()))
                .collect();
        }
        let mut next = vec![T::zero(); r + 2];
        for (i, out) in next.iter_mut().enumerate() {
            let mut acc = T::zero();
            for (j, pj) in p.iter().enumerate() {
                if i >= j {
                    acc = acc + col[i - j].clone() * pj.clone();
                }
            }
            *out = acc;
        }
        p = next;
    }
    p.reverse();
    Poly::new(p)
}
