//! Root extraction for real-rooted `f64` polynomials.
//!
//! The critical points of `p` (roots of `p'`, found recursively) split the line
//! into intervals on which `p` is monotone. Each sign change gives a simple root by
//! bisection. When sign changes come up short, critical points where `p` nearly
//! vanishes are taken as roots of one higher multiplicity than they have in `p'`.
//! This reads multiple roots off the derivative, where they are simple. If the
//! count is still short, exact Sturm isolation decides.

use super::poly::Polynomial;
use super::sturm::{is_real_rooted_exact, real_roots_by_bisection};
use crate::error::{Error, Result};

/// Default relative tolerance for float-mode decisions.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Real roots with multiplicity, sorted descending.
#[derive(Clone, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct RootList {
    roots: Vec<f64>,
}

impl RootList {
    fn new(mut roots: Vec<f64>) -> Self {
        roots.sort_by(|a, b| b.total_cmp(a));
        RootList { roots }
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn max(&self) -> Option<f64> {
        self.roots.first().copied()
    }

    pub fn min(&self) -> Option<f64> {
        self.roots.last().copied()
    }

    /// k-th largest root, 1-based.
    pub fn kth(&self, k: usize) -> Option<f64> {
        k.checked_sub(1).and_then(|i| self.roots.get(i).copied())
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.roots
    }
}

/// `|c_n|(|x| + R)^n` with `R` a root bound: the size of a coefficient-wise
/// perturbation at `x`, also near zero where computed low coefficients are noise.
fn envelope(p: &Polynomial, x: f64, radius: f64) -> f64 {
    let c = p.coeffs();
    c[c.len() - 1].abs() * (x.abs() + radius).powi(c.len() as i32 - 1)
}

/// Fujiwara's bound on the modulus of every root.
fn root_radius(p: &Polynomial) -> f64 {
    let c = p.coeffs();
    let n = c.len() - 1;
    let lead = c[n].abs();
    (1..=n)
        .map(|i| {
            let q = c[n - i].abs() / lead;
            if i == n {
                (q / 2.0).powf(1.0 / i as f64)
            } else {
                q.powf(1.0 / i as f64)
            }
        })
        .fold(0.0, f64::max)
        * 2.0
}

/// Root of `p` in `[lo, hi]` given opposite signs at the ends.
fn bisect(p: &Polynomial, mut lo: f64, mut hi: f64) -> f64 {
    let lo_neg = p.eval(&lo) < 0.0;
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            return mid;
        }
        let v = p.eval(&mid);
        if v == 0.0 {
            return mid;
        }
        if (v < 0.0) == lo_neg {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

/// Distinct values of a descending list, with counts.
fn group(xs: &[f64]) -> Vec<(f64, usize)> {
    let mut out: Vec<(f64, usize)> = Vec::new();
    for &x in xs {
        match out.last_mut() {
            Some((y, k)) if *y == x => *k += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

/// Relative distance within which a near-vanishing critical point absorbs the
/// sign-change roots next to it, as a split multiple root.
const MERGE_RADIUS: f64 = 1e-4;

/// Roots of `p` (degree ≥ 1) by the derivative recursion, descending.
/// `None` when fewer than `deg p` are found.
fn derivative_roots(p: &Polynomial, tol: f64) -> Option<Vec<f64>> {
    let n = p.degree()?;
    let c = p.coeffs();
    if n == 1 {
        return Some(vec![-c[0] / c[1]]);
    }
    let crit = group(&derivative_roots(&p.derivative(), tol)?);
    let noise = 64.0 * n as f64 * f64::EPSILON;
    let radius = root_radius(p);

    // Sample points: above every root, critical points descending, below every root.
    let mut xs = vec![radius.max(crit[0].0 + 1.0)];
    xs.extend(crit.iter().map(|(x, _)| *x));
    xs.push((-radius).min(crit[crit.len() - 1].0 - 1.0));
    let vs: Vec<f64> = xs.iter().map(|x| p.eval(x)).collect();
    let rel: Vec<f64> = crit
        .iter()
        .map(|(x, _)| p.eval(x).abs() / envelope(p, *x, radius).max(f64::MIN_POSITIVE))
        .collect();

    // Interval i lies between xs[i] and xs[i+1]; critical point j is xs[j+1].
    let intervals: Vec<Option<f64>> = (0..xs.len() - 1)
        .map(|i| {
            let (a, b) = (vs[i], vs[i + 1]);
            (a != 0.0 && b != 0.0 && (a < 0.0) != (b < 0.0)).then(|| bisect(p, xs[i + 1], xs[i]))
        })
        .collect();
    let mut is_root: Vec<bool> = vs[1..vs.len() - 1].iter().map(|v| *v == 0.0).collect();
    let count = |is_root: &[bool]| {
        let zero = |i: usize| i >= 1 && i <= crit.len() && is_root[i - 1];
        let simple = (0..intervals.len())
            .filter(|&i| intervals[i].is_some() && !zero(i) && !zero(i + 1))
            .count();
        simple + crit.iter().zip(is_root).filter(|(_, r)| **r).map(|((_, k), _)| k + 1).sum::<usize>()
    };
    let absorbed = |j: usize| [intervals[j], intervals[j + 1]].into_iter().flatten();

    let mut order: Vec<usize> = (0..crit.len()).filter(|&j| !is_root[j] && rel[j] <= tol).collect();
    order.sort_by(|&a, &b| rel[a].total_cmp(&rel[b]));
    // Split multiple roots: the critical point sits at rounding level and any
    // neighbouring sign changes are within the merge radius.
    for &j in &order {
        let d = crit[j].0;
        if rel[j] > noise || absorbed(j).any(|r| (r - d).abs() > MERGE_RADIUS * (1.0 + d.abs())) {
            continue;
        }
        let mut trial = is_root.clone();
        trial[j] = true;
        if count(&trial) <= n {
            is_root = trial;
        }
    }
    // Roots lost to rounding: fill the deficit with the critical points closest to vanishing.
    for &j in &order {
        if count(&is_root) >= n {
            break;
        }
        if is_root[j] {
            continue;
        }
        let mut trial = is_root.clone();
        trial[j] = true;
        if count(&trial) <= n {
            is_root = trial;
        }
    }
    if count(&is_root) != n {
        return None;
    }
    let zero = |i: usize| i >= 1 && i <= crit.len() && is_root[i - 1];
    let mut roots: Vec<f64> = (0..intervals.len())
        .filter(|&i| !zero(i) && !zero(i + 1))
        .filter_map(|i| intervals[i])
        .collect();
    for ((x, k), r) in crit.iter().zip(&is_root) {
        if *r {
            roots.extend(std::iter::repeat_n(*x, k + 1));
        }
    }
    roots.sort_by(|a, b| b.total_cmp(a));
    Some(roots)
}

/// Roots of `p` with multiplicity, sorted descending, using relative tolerance `tol`.
pub fn real_roots_with_tol(p: &Polynomial, tol: f64) -> Result<RootList> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    // Exact zero roots come off first.
    let zeros = p.coeffs().iter().take_while(|c| **c == 0.0).count();
    let reduced = Polynomial::new(p.coeffs()[zeros..].to_vec());
    let mut roots = vec![0.0; zeros];
    if deg == zeros {
        return Ok(RootList::new(roots));
    }
    match derivative_roots(&reduced, tol) {
        Some(mut found) => roots.append(&mut found),
        None => {
            // Rounding can hide roots the exact coefficients still have.
            if !is_real_rooted_exact(&reduced.to_rational())? {
                return Err(Error::NotRealRooted);
            }
            roots.append(&mut real_roots_by_bisection(&reduced.to_rational(), 1e-15)?);
        }
    }
    Ok(RootList::new(roots))
}

/// Roots of a real-rooted `p`, with multiplicity, sorted descending.
pub fn real_roots(p: &Polynomial) -> Result<RootList> {
    real_roots_with_tol(p, DEFAULT_TOL)
}

/// Real-rootedness of the coefficients as given: either the float extraction finds
/// `deg p` real roots within `tol` (rounding splits multiple roots into tiny complex
/// clusters), or the exact Sturm count on the square-free decomposition does.
pub fn is_real_rooted_with_tol(p: &Polynomial, tol: f64) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    match real_roots_with_tol(p, tol) {
        Ok(_) => Ok(true),
        Err(Error::NotRealRooted) => Ok(false),
        Err(e) => Err(e),
    }
}

pub fn is_real_rooted(p: &Polynomial) -> Result<bool> {
    is_real_rooted_with_tol(p, DEFAULT_TOL)
}

/// k-th largest root, 1-based.
pub fn kth_largest_root(p: &Polynomial, k: usize) -> Result<f64> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    if k == 0 || k > deg {
        return Err(Error::RootIndex { k, degree: deg });
    }
    Ok(real_roots(p)?.kth(k).expect("index checked"))
}

pub fn largest_root(p: &Polynomial) -> Result<f64> {
    kth_largest_root(p, 1)
}

pub fn smallest_root(p: &Polynomial) -> Result<f64> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    kth_largest_root(p, deg)
}
