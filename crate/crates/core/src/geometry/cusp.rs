use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::par::{sample_rng, Exec};

/// Distinct real roots of `z³ − yz − x`, ascending.
///
/// A critical value within `1e−9` of the cubic's term scale counts as zero,
/// so fold points report their double root once.
pub fn fiber(x: f64, y: f64) -> Vec<f64> {
    let p = |z: f64| z * z * z - y * z - x;
    let bound = 1.0 + x.abs().max(y.abs());
    if y <= 0.0 {
        return vec![bisect(p, -bound, bound)];
    }
    let s = (y / 3.0).sqrt();
    let scale = x.abs() + 2.0 * y * s / 3.0;
    let tau = 1e-9 * scale;
    let (hi, lo) = (p(-s), p(s));
    let near = |v: f64| v.abs() <= tau;
    match (near(hi), near(lo)) {
        (true, true) => vec![0.0],
        (true, false) => vec![-s, bisect(p, s, bound)],
        (false, true) => vec![bisect(p, -bound, -s), s],
        _ if hi > 0.0 && lo < 0.0 => vec![bisect(p, -bound, -s), bisect(p, -s, s), bisect(p, s, bound)],
        _ if hi < 0.0 => vec![bisect(p, s, bound)],
        _ => vec![bisect(p, -bound, -s)],
    }
}

fn bisect(p: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let rising = p(b) > p(a);
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if m == a || m == b {
            break;
        }
        if (p(m) > 0.0) == rising {
            b = m;
        } else {
            a = m;
        }
    }
    0.5 * (a + b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CuspRegion {
    Interior,
    Exterior,
    Fold,
    CuspPoint,
}

impl CuspRegion {
    pub fn expected_fiber(self) -> usize {
        match self {
            CuspRegion::Interior => 3,
            CuspRegion::Exterior | CuspRegion::CuspPoint => 1,
            CuspRegion::Fold => 2,
        }
    }
}

/// Region by the sign of `Δ = 4y³ − 27x²`, with `|Δ| ≤ band·(4|y|³ + 27x²)`
/// treated as the fold.
pub fn classify(x: f64, y: f64, band: f64) -> CuspRegion {
    let scale = 4.0 * y.abs().powi(3) + 27.0 * x * x;
    if scale == 0.0 {
        return CuspRegion::CuspPoint;
    }
    let delta = 4.0 * y * y * y - 27.0 * x * x;
    if delta.abs() <= band * scale {
        CuspRegion::Fold
    } else if delta > 0.0 {
        CuspRegion::Interior
    } else {
        CuspRegion::Exterior
    }
}

/// Fold point over parameter `t`.
pub fn fold_point(t: f64) -> (f64, f64) {
    (-2.0 * t * t * t, 3.0 * t * t)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegionTally {
    pub samples: u64,
    /// Samples whose fiber had 1, 2 and 3 points.
    pub fibers: [u64; 3],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CuspReport {
    pub band: f64,
    pub box_samples: u64,
    pub interior: RegionTally,
    pub exterior: RegionTally,
    /// Box samples inside the band; never counted as interior or exterior.
    pub band_samples: u64,
    /// Samples on the parametrized fold `(−2t³, 3t²)`, `t ≠ 0`.
    pub fold: RegionTally,
    pub cusp_point_fiber: usize,
    pub misclassified: u64,
    pub passed: bool,
}

/// Fiber counts of the fold map `(z, y) ↦ (z³ − yz, y)` over random points
/// of `[−2, 2] × [−1, 3]` and along the fold curve.
pub fn cusp_analysis(samples: u64, fold_samples: u64, seed: u64, band: f64, exec: Exec) -> CuspReport {
    const CHUNK: u64 = 1024;
    let chunks = samples.div_ceil(CHUNK) as usize;
    let fiber_slot = |k: usize| k.clamp(1, 3) - 1;
    // interior 1..3, exterior 1..3, band, misclassified
    let t = exec.tally::<8, _>(chunks, |c| {
        let mut rng = sample_rng(seed, c as u64);
        let lo = c as u64 * CHUNK;
        let mut t = [0u64; 8];
        for _ in lo..(lo + CHUNK).min(samples) {
            let x = rng.gen_range(-2.0..=2.0);
            let y = rng.gen_range(-1.0..=3.0);
            let k = fiber(x, y).len();
            let region = classify(x, y, band);
            match region {
                CuspRegion::Interior => t[fiber_slot(k)] += 1,
                CuspRegion::Exterior => t[3 + fiber_slot(k)] += 1,
                _ => {
                    t[6] += 1;
                    continue;
                }
            }
            if k != region.expected_fiber() {
                t[7] += 1;
            }
        }
        t
    });
    let f = exec.tally::<4, _>(fold_samples as usize, |i| {
        let s = (i as f64 + 0.5) / fold_samples as f64;
        let param = -1.2 + 2.4 * s;
        let (x, y) = fold_point(param);
        let k = fiber(x, y).len();
        let mut t = [0u64; 4];
        t[fiber_slot(k)] += 1;
        if classify(x, y, band) != CuspRegion::Fold || k != 2 {
            t[3] += 1;
        }
        t
    });
    let cusp_point_fiber = fiber(0.0, 0.0).len();
    let misclassified = t[7] + f[3];
    CuspReport {
        band,
        box_samples: samples,
        interior: RegionTally {
            samples: t[0] + t[1] + t[2],
            fibers: [t[0], t[1], t[2]],
        },
        exterior: RegionTally {
            samples: t[3] + t[4] + t[5],
            fibers: [t[3], t[4], t[5]],
        },
        band_samples: t[6],
        fold: RegionTally {
            samples: fold_samples,
            fibers: [f[0], f[1], f[2]],
        },
        cusp_point_fiber,
        misclassified,
        passed: misclassified == 0 && cusp_point_fiber == 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &[f64], b: &[f64]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-9)
    }

    #[test]
    fn examples() {
        let s = 3f64.sqrt();
        assert!(close(&fiber(0.0, 3.0), &[-s, 0.0, s]));
        assert!(close(&fiber(0.0, -1.0), &[0.0]));
        assert!(close(&fiber(-2.0, 3.0), &[-2.0, 1.0]));
        assert!(close(&fiber(0.0, 0.0), &[0.0]));
        assert_eq!(classify(0.0, 3.0, 1e-7), CuspRegion::Interior);
        assert_eq!(classify(0.0, -1.0, 1e-7), CuspRegion::Exterior);
        assert_eq!(classify(-2.0, 3.0, 1e-7), CuspRegion::Fold);
        assert_eq!(classify(0.0, 0.0, 1e-7), CuspRegion::CuspPoint);
    }

    #[test]
    fn fold_curve_is_critical() {
        for t in [-1.1, -0.3, 0.2, 0.9] {
            let (x, y) = fold_point(t);
            // z = t is a double root: p(t) = p′(t) = 0.
            assert!((t * t * t - y * t - x).abs() < 1e-12);
            assert!((3.0 * t * t - y).abs() < 1e-12);
            assert_eq!(fiber(x, y).len(), 2);
        }
    }

    #[test]
    fn small_sweep() {
        let r = cusp_analysis(2000, 50, 5, 1e-7, Exec::default());
        assert!(r.passed, "{r:?}");
        assert_eq!(r, cusp_analysis(2000, 50, 5, 1e-7, Exec::Sequential));
        assert_eq!(r.interior.fibers[0] + r.interior.fibers[1], 0);
    }
}
