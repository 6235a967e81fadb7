#![allow(dead_code)]

use interlace::graphs::Graph;
use interlace::mixedchar::{DiscreteRandomVector, PsdList};
use interlace::realroot::{Polynomial, SymMatrix};
use interlace::select::VectorSystem;
use nalgebra::{DMatrix, DVector, SymmetricEigen};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gaussian_vector(rng: &mut ChaCha8Rng, d: usize) -> DVector<f64> {
    DVector::from_fn(d, |_, _| rng.sample(StandardNormal))
}

pub fn gaussian_matrix(rng: &mut ChaCha8Rng, r: usize, c: usize) -> DMatrix<f64> {
    DMatrix::from_fn(r, c, |_, _| rng.sample(StandardNormal))
}

pub fn random_symmetric(rng: &mut ChaCha8Rng, d: usize) -> SymMatrix {
    SymMatrix::symmetrize(&gaussian_matrix(rng, d, d))
}

/// Product of random linear factors, with occasional repeated roots.
/// Distinct roots stay 0.25 apart: tighter clusters put the extrema of `p` below
/// the coefficient rounding noise, and then no float method can place the roots.
pub fn random_real_rooted(rng: &mut ChaCha8Rng, max_degree: usize) -> (Polynomial, Vec<f64>) {
    let deg = rng.random_range(1..=max_degree);
    let mut roots: Vec<f64> = Vec::with_capacity(deg);
    while roots.len() < deg {
        if !roots.is_empty() && rng.random_bool(0.15) {
            let r = roots[rng.random_range(0..roots.len())];
            roots.push(r);
        } else {
            let x: f64 = rng.random_range(-5.0..5.0);
            if roots.iter().all(|y| (x - y).abs() >= 0.25) {
                roots.push(x);
            }
        }
    }
    roots.sort_by(|a, b| b.total_cmp(a));
    (Polynomial::from_roots(&roots), roots)
}

/// `M^{-1/2}` of a positive definite matrix.
pub fn inv_sqrt(m: &DMatrix<f64>) -> DMatrix<f64> {
    let e = SymmetricEigen::new(m.clone());
    let d = DMatrix::from_diagonal(&e.eigenvalues.map(|x| 1.0 / x.sqrt()));
    &e.eigenvectors * d * e.eigenvectors.transpose()
}

/// `m` random vectors in `R^n` whose outer products sum to the identity.
pub fn random_isotropic(rng: &mut ChaCha8Rng, n: usize, m: usize) -> VectorSystem {
    let b = gaussian_matrix(rng, n, m);
    let s = inv_sqrt(&(&b * b.transpose()));
    let v = s * b;
    VectorSystem::new(n, (0..m).map(|j| v.column(j).into_owned()).collect()).unwrap()
}

/// Random PSD matrices `A_1..A_m` in dimension `d` with `Σ A_i = I`.
/// Ranks are random but the sum is kept well conditioned.
pub fn random_psd_decomposition(rng: &mut ChaCha8Rng, d: usize, m: usize) -> PsdList {
    let (raw, total) = loop {
        let raw: Vec<DMatrix<f64>> = (0..m)
            .map(|i| {
                let rank = if i == 0 && m == 1 { d } else { rng.random_range(1..=d) };
                let g = gaussian_matrix(rng, d, rank);
                &g * g.transpose()
            })
            .collect();
        let total = raw.iter().fold(DMatrix::zeros(d, d), |a, b| a + b);
        let ev = SymmetricEigen::new(total.clone()).eigenvalues;
        if ev.min() > 1e-3 * ev.max() {
            break (raw, total);
        }
    };
    let s = inv_sqrt(&total);
    PsdList::new(raw.iter().map(|c| SymMatrix::symmetrize(&(&s * c * &s))).collect()).unwrap()
}

/// `m ≤ max_m` independent two-point vectors in `R^d`, `d ≤ max_d`.
pub fn random_two_point_system(
    rng: &mut ChaCha8Rng,
    max_m: usize,
    max_d: usize,
) -> Vec<DiscreteRandomVector> {
    let m = rng.random_range(1..=max_m);
    let d = rng.random_range(1..=max_d);
    (0..m)
        .map(|_| {
            let p = rng.random_range(0.05..0.95);
            let a = gaussian_vector(rng, d);
            let b = gaussian_vector(rng, d);
            DiscreteRandomVector::two_point(p, a, b).unwrap()
        })
        .collect()
}

/// Random simple graph on `n` vertices with `m` edges.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| ((a + 1)..n).map(move |b| (a, b))).collect();
    pairs.shuffle(rng);
    pairs.truncate(m);
    Graph::new(n, pairs).unwrap()
}

/// Random simple graph with every degree at most `d`.
pub fn random_graph_max_degree(rng: &mut ChaCha8Rng, n: usize, d: usize) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| ((a + 1)..n).map(move |b| (a, b))).collect();
    pairs.shuffle(rng);
    let mut deg = vec![0; n];
    let mut edges = Vec::new();
    for (a, b) in pairs {
        if deg[a] < d && deg[b] < d && rng.random_bool(0.6) {
            deg[a] += 1;
            deg[b] += 1;
            edges.push((a, b));
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Calls `f` with every joint outcome index vector.
pub fn for_each_outcome(sizes: &[usize], mut f: impl FnMut(&[usize])) {
    let mut idx = vec![0usize; sizes.len()];
    loop {
        f(&idx);
        let mut i = 0;
        loop {
            if i == sizes.len() {
                return;
            }
            idx[i] += 1;
            if idx[i] < sizes[i] {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

/// Eigenvalues (descending) of `base + Σ v vᵀ` for every outcome of `rs`.
pub fn outcome_spectra(rs: &[DiscreteRandomVector]) -> Vec<Vec<f64>> {
    let sizes: Vec<usize> = rs.iter().map(|r| r.support_size()).collect();
    let d = rs[0].dim();
    let mut out = Vec::new();
    for_each_outcome(&sizes, |idx| {
        let mut m = DMatrix::zeros(d, d);
        for (r, &j) in rs.iter().zip(idx) {
            let v = &r.support()[j].1;
            m += v * v.transpose();
        }
        let mut ev: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
        ev.sort_by(|a, b| b.total_cmp(a));
        out.push(ev);
    });
    out
}

/// Matching counts by checking every edge subset.
pub fn matching_counts_brute(g: &Graph) -> Vec<u64> {
    let m = g.num_edges();
    let mut counts = vec![0u64; g.n() / 2 + 1];
    for mask in 0u64..(1 << m) {
        let mut used = vec![false; g.n()];
        let mut ok = true;
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            if mask >> e & 1 == 1 {
                if used[a] || used[b] {
                    ok = false;
                    break;
                }
                used[a] = true;
                used[b] = true;
            }
        }
        if ok {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    while counts.len() > 1 && *counts.last().unwrap() == 0 {
        counts.pop();
    }
    counts
}

/// `Σ (−1)^i m_i x^{n−2i}` as a float polynomial.
pub fn matching_poly_from_counts(n: usize, counts: &[u64]) -> Polynomial {
    let mut c = vec![0.0; n + 1];
    for (i, m) in counts.iter().enumerate() {
        c[n - 2 * i] = if i % 2 == 0 { *m as f64 } else { -(*m as f64) };
    }
    Polynomial::new(c)
}
