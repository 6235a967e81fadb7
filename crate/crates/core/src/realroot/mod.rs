//! Univariate real-rooted polynomial core: arithmetic, the `(1 − cD)` operators,
//! root counting and extraction, interlacing predicates, characteristic polynomials.

mod interlace;
mod matrix;
mod poly;
mod roots;
mod sturm;

pub use interlace::{have_common_interlacing, interlaces, root_intervals_disjoint, INTERLACE_TOL};
pub use matrix::{char_poly, char_poly_berkowitz, SymMatrix};
pub use poly::{
    rational_from_f64, rational_to_f64, Field, IntPoly, Poly, Polynomial, RatPoly, Ring,
};
pub use roots::{
    is_real_rooted, is_real_rooted_with_tol, kth_largest_root, largest_root, real_roots,
    real_roots_with_tol, smallest_root, RootList, DEFAULT_TOL,
};
pub use sturm::{
    is_real_rooted_exact, real_root_count_exact, real_roots_by_bisection,
    square_free_decomposition, square_free_part, sturm_count_exact, sturm_root_count,
    sturm_sequence,
};

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::Arithmetic;

pub fn poly_eval(p: &Polynomial, x: f64) -> f64 {
    p.eval(&x)
}

/// `(1 − cD)p`. Negative `c` is allowed; real-rootedness is only preserved for `c ≥ 0`.
pub fn apply_shift_operator(p: &Polynomial, c: f64) -> Result<Polynomial> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(p.shift_operator(&c))
}

/// `(1 − D)^n x^k` in exact arithmetic.
pub fn laguerre_transform_exact(n: usize, k: usize) -> RatPoly {
    let one = BigRational::one();
    (0..n).fold(Poly::monomial(one.clone(), k), |p, _| p.shift_operator(&one))
}

/// `(1 − D)^n x^k`, a constant multiple of the associated Laguerre polynomial `L_k^{(n−k)}`.
pub fn laguerre_transform(n: usize, k: usize) -> Polynomial {
    laguerre_transform_exact(n, k).to_f64()
}

fn identity_sides<T: Ring>(n: usize, k: usize, one: T) -> (Poly<T>, Poly<T>) {
    let lhs = (0..k).fold(Poly::monomial(one.clone(), n), |p, _| p.shift_operator(&one));
    let inner = (0..n).fold(Poly::monomial(one.clone(), k), |p, _| p.shift_operator(&one));
    (lhs, inner.shift_up(n - k))
}

/// Checks `(1 − D)^k x^n = x^{n−k} (1 − D)^n x^k` coefficient by coefficient.
pub fn diagram_identity_check(n: usize, k: usize, mode: Arithmetic) -> Result<bool> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!("need 1 ≤ k ≤ n, got n={n}, k={k}")));
    }
    Ok(match mode {
        Arithmetic::Exact => {
            let (l, r) = identity_sides(n, k, BigRational::one());
            (&l - &r).is_zero()
        }
        Arithmetic::Float => {
            let (l, r) = identity_sides(n, k, 1.0f64);
            l.approx_eq(&r, DEFAULT_TOL)
        }
    })
}
