use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::cover::{lift_stratum, orbits, Permutation};
use crate::par::{sample_rng, Exec};
use crate::{Error, Result};

/// `(p(x), p′(x))` for ascending coefficients.
pub fn poly_eval(coeffs: &[Complex64], x: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * x + p;
        p = p * x + c;
    }
    (p, dp)
}

/// All complex roots by Aberth–Ehrlich iteration with a Newton polish.
pub fn poly_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    let mut coeffs = coeffs.to_vec();
    while coeffs.last().is_some_and(|c| c.norm() == 0.0) {
        coeffs.pop();
    }
    let n = coeffs.len().saturating_sub(1);
    if n == 0 {
        return Err(Error::Invalid("constant polynomial has no roots to find".into()));
    }
    let lead = coeffs[n];
    let radius = (1..=n)
        .map(|k| (coeffs[n - k] / lead).norm().powf(1.0 / k as f64))
        .fold(0.0, f64::max)
        .max(f64::MIN_POSITIVE.sqrt());
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 2.0 * PI * k as f64 / n as f64 + 0.4))
        .collect();
    let mut converged = false;
    for _ in 0..2000 {
        let mut biggest: f64 = 0.0;
        for i in 0..n {
            let (p, dp) = poly_eval(&coeffs, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let w = ratio / (1.0 - ratio * repulsion);
            if w.is_finite() {
                z[i] -= w;
                biggest = biggest.max(w.norm() / (1.0 + z[i].norm()));
            }
        }
        if biggest <= 1e-15 {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::Numerical(format!("root finder did not converge for degree {n}")));
    }
    for r in &mut z {
        for _ in 0..2 {
            let (p, dp) = poly_eval(&coeffs, *r);
            let step = p / dp;
            if step.is_finite() && poly_eval(&coeffs, *r - step).0.norm() < p.norm() {
                *r -= step;
            }
        }
    }
    Ok(z)
}

/// The model covering `f(x) = x^{n+1} − ε(n+1)x` as ascending coefficients.
fn model(n: usize, eps: f64) -> Vec<Complex64> {
    let mut c = vec![Complex64::new(0.0, 0.0); n + 2];
    c[1] = Complex64::new(-eps * (n + 1) as f64, 0.0);
    c[n + 1] = Complex64::new(1.0, 0.0);
    c
}

fn shifted(f: &[Complex64], w: Complex64) -> Vec<Complex64> {
    let mut g = f.to_vec();
    g[0] -= w;
    g
}

fn min_separation(z: &[Complex64]) -> f64 {
    let mut best = f64::INFINITY;
    for i in 0..z.len() {
        for j in i + 1..z.len() {
            best = best.min((z[i] - z[j]).norm());
        }
    }
    best
}

fn distinct(z: &[Complex64], tol: f64) -> usize {
    let mut kept: Vec<Complex64> = Vec::new();
    for &r in z {
        if kept.iter().all(|k| (k - r).norm() > tol) {
            kept.push(r);
        }
    }
    kept.len()
}

/// Carries the fiber over `from` to the fiber over `to` along the segment,
/// halving steps whenever Newton fails to keep the roots apart.
fn continue_segment(f: &[Complex64], roots: &mut [Complex64], from: Complex64, to: Complex64, depth: u32) -> Result<()> {
    let sep = min_separation(roots);
    let mut next = roots.to_vec();
    let mut ok = true;
    for r in &mut next {
        let start = *r;
        for _ in 0..40 {
            let (p, dp) = poly_eval(f, *r);
            let step = (p - to) / dp;
            *r -= step;
            if step.norm() <= 1e-15 * (1.0 + r.norm()) {
                break;
            }
        }
        if !r.is_finite() || (*r - start).norm() > sep / 3.0 || (poly_eval(f, *r).0 - to).norm() > 1e-9 * (1.0 + to.norm()) {
            ok = false;
            break;
        }
    }
    if ok && min_separation(&next) > 0.0 {
        roots.copy_from_slice(&next);
        return Ok(());
    }
    if depth == 0 {
        return Err(Error::Numerical("root continuation failed to separate sheets".into()));
    }
    let mid = 0.5 * (from + to);
    continue_segment(f, roots, from, mid, depth - 1)?;
    continue_segment(f, roots, mid, to, depth - 1)
}

fn continue_path(f: &[Complex64], start: &[Complex64], path: &[Complex64]) -> Result<Vec<Complex64>> {
    let mut roots = start.to_vec();
    for w in path.windows(2) {
        continue_segment(f, &mut roots, w[0], w[1], 24)?;
    }
    Ok(roots)
}

/// Direction from 0 bisecting the widest angular gap between branch values.
fn widest_gap(branch: &[Complex64]) -> f64 {
    let mut args: Vec<f64> = branch.iter().map(|b| b.arg().rem_euclid(2.0 * PI)).collect();
    args.sort_by(f64::total_cmp);
    let mut best = (0.0, 0.0);
    for (i, &a) in args.iter().enumerate() {
        let next = if i + 1 < args.len() { args[i + 1] } else { args[0] + 2.0 * PI };
        if next - a > best.0 {
            best = (next - a, 0.5 * (a + next));
        }
    }
    best.1
}

/// Loop based at 0: out to `center − ρ·center/|center|`, once around the
/// circle of radius `ρ` about `center`, and back.
fn lasso(center: Complex64, rho: f64, steps: usize) -> Vec<Complex64> {
    let dir = center / center.norm();
    let touch = center - rho * dir;
    let mut path: Vec<Complex64> = (0..=steps).map(|i| touch * (i as f64 / steps as f64)).collect();
    let phase0 = (-dir).arg();
    for i in 1..=4 * steps {
        let a = phase0 + 2.0 * PI * i as f64 / (4 * steps) as f64;
        path.push(center + Complex64::from_polar(rho, a));
    }
    path.extend((0..steps).rev().map(|i| touch * (i as f64 / steps as f64)));
    path
}

fn permutation_of(start: &[Complex64], end: &[Complex64]) -> Result<Permutation> {
    let images: Vec<usize> = end
        .iter()
        .map(|e| {
            (0..start.len())
                .min_by(|&a, &b| (start[a] - e).norm().total_cmp(&(start[b] - e).norm()))
                .expect("nonempty fiber")
        })
        .collect();
    Permutation::from_images(images).map_err(|_| Error::Numerical("continued fiber does not return to itself".into()))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolyCoverReport {
    pub n: usize,
    pub epsilon: f64,
    pub critical_points: Vec<[f64; 2]>,
    pub max_critical_error: f64,
    pub branch_values: Vec<[f64; 2]>,
    pub regular_samples: usize,
    pub min_sheets: usize,
    pub max_sheets: usize,
    /// Meridian transpositions, 1-based, in order of branch value argument.
    pub meridians: Vec<Option<[usize; 2]>>,
    pub simple: bool,
    pub transitive: bool,
    pub boundary_cycle_direct: Vec<usize>,
    pub boundary_cycle_product: Vec<usize>,
    pub lifted_euler: i64,
    pub lifted_components: usize,
    pub lifted_genus: i64,
    pub critical_tol: f64,
    pub passed: bool,
}

/// Checks the model covering `x ↦ x^{n+1} − ε(n+1)x` of the disk.
pub fn polynomial_cover_check(n: usize, eps: f64, regular_samples: usize, seed: u64, exec: Exec) -> Result<PolyCoverReport> {
    if n == 0 {
        return Err(Error::Invalid("model covering needs n ≥ 1".into()));
    }
    if !(eps.is_finite() && eps > 0.0) {
        return Err(Error::Invalid(format!("model covering needs ε > 0, got {eps}")));
    }
    const CRITICAL_TOL: f64 = 1e-10;
    let f = model(n, eps);
    let d = n + 1;

    // f′/(n+1) = x^n − ε.
    let mut df = vec![Complex64::new(0.0, 0.0); n + 1];
    df[0] = Complex64::new(-eps, 0.0);
    df[n] = Complex64::new(1.0, 0.0);
    let mut crit = poly_roots(&df)?;
    crit.sort_by(|a, b| a.arg().total_cmp(&b.arg()));
    let root = eps.powf(1.0 / n as f64);
    let max_critical_error = (0..n)
        .map(|k| {
            let exact = Complex64::from_polar(root, 2.0 * PI * k as f64 / n as f64);
            crit.iter().map(|c| (c - exact).norm()).fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max);
    let mut branch: Vec<Complex64> = crit.iter().map(|c| poly_eval(&f, *c).0).collect();
    branch.sort_by(|a, b| a.arg().rem_euclid(2.0 * PI).total_cmp(&b.arg().rem_euclid(2.0 * PI)));
    let big = branch.iter().map(|b| b.norm()).fold(0.0, f64::max);

    let counts = exec.map(regular_samples, |i| -> Result<usize> {
        let mut rng = sample_rng(seed, i as u64);
        let w = loop {
            let w = Complex64::from_polar(2.0 * big * rng.gen::<f64>().sqrt(), rng.gen_range(0.0..2.0 * PI));
            if branch.iter().all(|b| (b - w).norm() > 1e-6 * big) {
                break w;
            }
        };
        let roots = poly_roots(&shifted(&f, w))?;
        let scale = roots.iter().map(|r| r.norm()).fold(1e-300, f64::max);
        Ok(distinct(&roots, 1e-8 * scale))
    });
    let counts = counts.into_iter().collect::<Result<Vec<_>>>()?;

    let mut fiber0 = poly_roots(&f)?;
    fiber0.sort_by(|a, b| (a.arg(), a.norm()).partial_cmp(&(b.arg(), b.norm())).expect("finite roots"));
    let mut meridian_perms = Vec::with_capacity(n);
    for (k, &v) in branch.iter().enumerate() {
        let gap = branch
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, b)| (b - v).norm())
            .fold(f64::INFINITY, f64::min);
        let rho = (0.5 * gap).min(0.5 * v.norm());
        let end = continue_path(&f, &fiber0, &lasso(v, rho, 200))?;
        meridian_perms.push(permutation_of(&fiber0, &end)?);
    }
    let outer = Complex64::from_polar(2.0 * big, widest_gap(&branch));
    let mut big_loop: Vec<Complex64> = (0..=200).map(|i| outer * (i as f64 / 200.0)).collect();
    big_loop.extend((1..=2000).map(|i| outer * Complex64::from_polar(1.0, 2.0 * PI * i as f64 / 2000.0)));
    big_loop.extend((0..200).rev().map(|i| outer * (i as f64 / 200.0)));
    let direct = permutation_of(&fiber0, &continue_path(&f, &fiber0, &big_loop)?)?;
    let product = meridian_perms.iter().fold(Permutation::identity(d), |acc, p| acc.then(p));
    let cycle_lengths = |p: &Permutation| {
        let mut l: Vec<usize> = p.cycles().iter().map(Vec::len).collect();
        l.sort_unstable_by(|a, b| b.cmp(a));
        l
    };

    let simple = meridian_perms.iter().all(Permutation::is_transposition);
    let transitive = orbits(d, &meridian_perms).len() == 1;
    let (lifted_euler, lifted_components, lifted_genus) = if simple {
        let l = lift_stratum(1, &meridian_perms, &meridian_perms, d)?;
        let boundary = direct.cycle_count() as i64;
        (l.euler_char, l.components, (2 - boundary - l.euler_char) / 2)
    } else {
        (i64::MIN, 0, -1)
    };
    let min_sheets = counts.iter().copied().min().unwrap_or(0);
    let max_sheets = counts.iter().copied().max().unwrap_or(0);
    let passed = max_critical_error < CRITICAL_TOL
        && (regular_samples == 0 || (min_sheets == d && max_sheets == d))
        && simple
        && transitive
        && cycle_lengths(&direct) == vec![d]
        && cycle_lengths(&product) == vec![d]
        && lifted_euler == 1
        && lifted_components == 1
        && lifted_genus == 0;
    let pair = |z: &Complex64| [z.re, z.im];
    Ok(PolyCoverReport {
        n,
        epsilon: eps,
        critical_points: crit.iter().map(pair).collect(),
        max_critical_error,
        branch_values: branch.iter().map(pair).collect(),
        regular_samples,
        min_sheets,
        max_sheets,
        meridians: meridian_perms.iter().map(|p| p.as_transposition().map(|(a, b)| [a, b])).collect(),
        simple,
        transitive,
        boundary_cycle_direct: cycle_lengths(&direct),
        boundary_cycle_product: cycle_lengths(&product),
        lifted_euler,
        lifted_components,
        lifted_genus,
        critical_tol: CRITICAL_TOL,
        passed,
    })
}
