//! Exact root counting: square-free decomposition, Sturm sequences, bisection isolation.
//!
//! Floating-point inputs are converted to rationals exactly before any of this runs,
//! so the counts are exact for the coefficients as given.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{rational_from_f64, rational_to_f64, Field, Poly, Polynomial, RatPoly};
use crate::error::{Error, Result};

/// Yun's algorithm: `p = c·∏ f_i^{m_i}` with square-free, pairwise coprime, monic `f_i`.
pub fn square_free_decomposition<T: Field>(p: &Poly<T>) -> Vec<(Poly<T>, usize)> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let dp = p.derivative();
    let a0 = p.gcd(&dp);
    let mut b = p.div_rem(&a0).expect("gcd nonzero").0;
    let c = dp.div_rem(&a0).expect("gcd nonzero").0;
    let mut d = &c - &b.derivative();
    let mut mult = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        let b_next = b.div_rem(&a).expect("gcd nonzero").0;
        let c_next = d.div_rem(&a).expect("gcd nonzero").0;
        if a.degree().unwrap_or(0) > 0 {
            out.push((a, mult));
        }
        d = &c_next - &b_next.derivative();
        b = b_next;
        mult += 1;
    }
    out
}

pub fn sturm_sequence<T: Field>(p: &Poly<T>) -> Vec<Poly<T>> {
    let mut seq = vec![p.clone(), p.derivative()];
    while !seq.last().unwrap().is_zero() {
        let n = seq.len();
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]).expect("nonzero");
        seq.push(-r);
    }
    seq.pop();
    seq
}

fn sign_changes<T: Field>(seq: &[Poly<T>], x: &T) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for q in seq {
        let v = q.eval(x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Sign changes at +∞ (or −∞ when `neg`), read off leading coefficients.
fn sign_changes_at_infinity<T: Field>(seq: &[Poly<T>], neg: bool) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for q in seq {
        let lead = q.leading().expect("nonzero");
        let mut s = if lead.is_positive() { 1 } else { -1 };
        if neg && q.degree().unwrap() % 2 == 1 {
            s = -s;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Distinct real roots of a square-free `p` in `(a, b]`.
fn count_square_free<T: Field>(seq: &[Poly<T>], a: &T, b: &T) -> usize {
    sign_changes(seq, a).saturating_sub(sign_changes(seq, b))
}

/// Number of distinct real roots of `p` in `(a, b]`, exact.
pub fn sturm_count_exact<T: Field>(p: &Poly<T>, a: &T, b: &T) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if a >= b {
        return Ok(0);
    }
    let sf = square_free_part(p);
    if sf.degree() == Some(0) {
        return Ok(0);
    }
    Ok(count_square_free(&sturm_sequence(&sf), a, b))
}

/// Number of distinct real roots of `p` in `(a, b]` via Sturm sign changes.
pub fn sturm_root_count(p: &Polynomial, a: f64, b: f64) -> Result<usize> {
    sturm_count_exact(&p.to_rational(), &rational_from_f64(a), &rational_from_f64(b))
}

pub fn square_free_part<T: Field>(p: &Poly<T>) -> Poly<T> {
    let g = p.gcd(&p.derivative());
    p.div_rem(&g).expect("gcd nonzero").0.monic()
}

fn total_distinct_real<T: Field>(seq: &[Poly<T>]) -> usize {
    sign_changes_at_infinity(seq, true).saturating_sub(sign_changes_at_infinity(seq, false))
}

/// Real roots counted with multiplicity.
pub fn real_root_count_exact<T: Field>(p: &Poly<T>) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(square_free_decomposition(p)
        .iter()
        .map(|(f, m)| m * total_distinct_real(&sturm_sequence(f)))
        .sum())
}

pub fn is_real_rooted_exact<T: Field>(p: &Poly<T>) -> Result<bool> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    Ok(real_root_count_exact(p)? == deg)
}

/// Cauchy bound: all roots lie strictly inside (−B, B).
fn cauchy_bound(p: &RatPoly) -> BigRational {
    let lead = p.leading().unwrap().abs();
    let max = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .fold(BigRational::zero(), |m, c| {
            let r = c.abs() / lead.clone();
            if r > m {
                r
            } else {
                m
            }
        });
    max + BigRational::one()
}

/// All real roots of an exact polynomial, with multiplicity, sorted descending.
/// Isolation by Sturm counts, refinement by bisection to relative width `rel_width`.
pub fn real_roots_by_bisection(p: &RatPoly, rel_width: f64) -> Result<Vec<f64>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let two = BigRational::from_integer(2.into());
    let mut roots = Vec::new();
    for (factor, mult) in square_free_decomposition(p) {
        let seq = sturm_sequence(&factor);
        let bound = cauchy_bound(&factor);
        let mut stack = vec![(-bound.clone(), bound)];
        while let Some((lo, hi)) = stack.pop() {
            let n = count_square_free(&seq, &lo, &hi);
            if n == 0 {
                continue;
            }
            if n > 1 {
                let mid = (lo.clone() + hi.clone()) / two.clone();
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
                continue;
            }
            // Exactly one root in (lo, hi]; refine by sign of the square-free factor.
            let (mut lo, mut hi) = (lo, hi);
            if factor.eval(&hi).is_zero() {
                roots.extend(std::iter::repeat_n(rational_to_f64(&hi), mult));
                continue;
            }
            let hi_sign = factor.eval(&hi).is_positive();
            for _ in 0..2000 {
                let width = rational_to_f64(&(hi.clone() - lo.clone()));
                let mag = rational_to_f64(&hi).abs().max(rational_to_f64(&lo).abs());
                if width <= rel_width * (1.0 + mag) {
                    break;
                }
                let mid = (lo.clone() + hi.clone()) / two.clone();
                let v = factor.eval(&mid);
                if v.is_zero() {
                    lo = mid.clone();
                    hi = mid;
                    break;
                }
                if v.is_positive() == hi_sign {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            let r = rational_to_f64(&((lo + hi) / two.clone()));
            roots.extend(std::iter::repeat_n(r, mult));
        }
    }
    roots.sort_by(|a, b| b.total_cmp(a));
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[f64]) -> Polynomial {
        Poly::new(c.to_vec())
    }

    #[test]
    fn sturm_examples() {
        assert_eq!(sturm_root_count(&p(&[-1.0, 0.0, 1.0]), -2.0, 0.0).unwrap(), 1);
        assert_eq!(sturm_root_count(&p(&[1.0, 0.0, 1.0]), -10.0, 10.0).unwrap(), 0);
        assert_eq!(sturm_root_count(&p(&[0.0, -2.0, 0.0, 1.0]), -10.0, 10.0).unwrap(), 3);
    }

    #[test]
    fn half_open_interval_semantics() {
        let q = p(&[-1.0, 0.0, 1.0]);
        assert_eq!(sturm_root_count(&q, -1.0, 1.0).unwrap(), 1);
        assert_eq!(sturm_root_count(&q, -2.0, -1.0).unwrap(), 1);
        // Multiple roots count once.
        let cube = Polynomial::from_roots(&[3.0, 3.0, 3.0]);
        assert_eq!(sturm_root_count(&cube, 0.0, 3.0).unwrap(), 1);
        assert_eq!(sturm_root_count(&cube, 3.0, 4.0).unwrap(), 0);
        assert_eq!(sturm_root_count(&Polynomial::zero(), 0.0, 1.0), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn yun_recovers_multiplicities() {
        let q = Polynomial::from_roots(&[1.0, 1.0, 1.0, 2.0, -3.0, -3.0]).to_rational();
        let dec = square_free_decomposition(&q);
        let mults: Vec<usize> = dec.iter().map(|(_, m)| *m).collect();
        assert_eq!(mults, vec![1, 2, 3]);
        assert_eq!(dec[2].0, Polynomial::from_roots(&[1.0]).to_rational());
        assert_eq!(real_root_count_exact(&q).unwrap(), 6);
    }

    #[test]
    fn exact_real_rootedness() {
        assert!(!is_real_rooted_exact(&p(&[7.0, -5.0, 1.0]).to_rational()).unwrap());
        assert!(is_real_rooted_exact(&Polynomial::from_roots(&[1.0, 2.0]).to_rational()).unwrap());
        assert!(is_real_rooted_exact(&Polynomial::from_roots(&[1.0, 1.0]).to_rational()).unwrap());
    }

    #[test]
    fn bisection_roots() {
        let q = p(&[2.0, -4.0, 1.0]).to_rational();
        let r = real_roots_by_bisection(&q, 1e-15).unwrap();
        let s = 2f64.sqrt();
        assert!((r[0] - (2.0 + s)).abs() < 1e-13 && (r[1] - (2.0 - s)).abs() < 1e-13);
        let c = real_roots_by_bisection(&Polynomial::from_roots(&[3.0, 3.0, 3.0, -1.0]).to_rational(), 1e-15)
            .unwrap();
        assert_eq!(c, vec![3.0, 3.0, 3.0, -1.0]);
    }
}
