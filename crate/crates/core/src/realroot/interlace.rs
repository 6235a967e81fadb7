use super::poly::Polynomial;
use super::roots::{is_real_rooted, real_roots};
use crate::error::{Error, Result};

/// Slack for root comparisons: 1e−7·(1+|root|). Equality is permitted by the definition.
pub const INTERLACE_TOL: f64 = 1e-7;

/// Convex weights tried between every pair in [`have_common_interlacing`].
const GRID: usize = 8;

fn leq(a: f64, b: f64) -> bool {
    a <= b + INTERLACE_TOL * (1.0 + a.abs().max(b.abs()))
}

/// Whether `g` interlaces `f`: `β_n ≤ α_n ≤ β_{n−1} ≤ … ≤ β_1 ≤ α_1` where `α` are
/// the roots of `f` (degree n) and `β` those of `g` (degree n or n − 1).
pub fn interlaces(g: &Polynomial, f: &Polynomial) -> Result<bool> {
    let df = f.degree().ok_or(Error::ZeroPolynomial)?;
    let dg = g.degree().ok_or(Error::ZeroPolynomial)?;
    if dg != df && dg + 1 != df {
        return Err(Error::DegreeMismatch(format!(
            "interlacing needs deg g ∈ {{deg f, deg f − 1}}, got {dg} and {df}"
        )));
    }
    let alpha = real_roots(f)?;
    let beta = real_roots(g)?;
    let (alpha, beta) = (alpha.as_slice(), beta.as_slice());
    for i in 0..dg {
        // β_i ≤ α_i
        if !leq(beta[i], alpha[i]) {
            return Ok(false);
        }
        // α_{i+1} ≤ β_i
        if i + 1 < df && !leq(alpha[i + 1], beta[i]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Interval test on sorted roots: there are ordered closed intervals
/// `I_n ≤ … ≤ I_1` with the i-th root of every member inside `I_i`.
pub fn root_intervals_disjoint(roots: &[Vec<f64>]) -> bool {
    let n = roots[0].len();
    (0..n.saturating_sub(1)).all(|i| {
        let lowest_i = roots.iter().map(|r| r[i]).fold(f64::INFINITY, f64::min);
        let highest_next = roots.iter().map(|r| r[i + 1]).fold(f64::NEG_INFINITY, f64::max);
        leq(highest_next, lowest_i)
    })
}

fn positive_leading(p: &Polynomial) -> Polynomial {
    if p.leading().is_some_and(|l| *l < 0.0) {
        -p
    } else {
        p.clone()
    }
}

/// Whether the family has a common interlacing. Both characterizations must agree:
/// the interval test on sorted roots, and real-rootedness of `t·f + (1−t)·g` for every
/// pair on a grid of convex weights.
pub fn have_common_interlacing(fs: &[Polynomial]) -> Result<bool> {
    let first = fs.first().ok_or(Error::Empty("polynomial family"))?;
    let deg = first.degree().ok_or(Error::ZeroPolynomial)?;
    for f in fs {
        let d = f.degree().ok_or(Error::ZeroPolynomial)?;
        if d != deg {
            return Err(Error::DegreeMismatch(format!(
                "common interlacing needs equal degrees, got {deg} and {d}"
            )));
        }
    }
    let mut roots = Vec::with_capacity(fs.len());
    for f in fs {
        match real_roots(f) {
            Ok(r) => roots.push(r.into_vec()),
            Err(Error::NotRealRooted) => return Ok(false),
            Err(e) => return Err(e),
        }
    }
    if !root_intervals_disjoint(&roots) {
        return Ok(false);
    }
    let normalized: Vec<Polynomial> = fs.iter().map(positive_leading).collect();
    for i in 0..normalized.len() {
        for j in (i + 1)..normalized.len() {
            if normalized[i] == normalized[j] {
                continue;
            }
            for step in 1..GRID {
                let t = step as f64 / GRID as f64;
                let mix = &normalized[i].scale(&t) + &normalized[j].scale(&(1.0 - t));
                if !is_real_rooted(&mix)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
