use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::point::{PointC2, PolyhedronQM};
use crate::par::{sample_rng, Exec};
use crate::Sector;

const SQRT3: f64 = 1.732_050_807_568_877_2;

/// The linear functional `φ_λ`, depending on `(x₁, x₂)` only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriFunctional(pub Sector);

impl TriFunctional {
    pub fn eval(self, p: &PointC2) -> f64 {
        phi(self.0, p.x1, p.x2)
    }

    /// Coefficients `(a, b)` with `φ = a·x₁ + b·x₂`.
    pub fn coefficients(self) -> (f64, f64) {
        match self.0.get() {
            1 => (0.0, 1.0),
            2 => (-SQRT3, -1.0),
            _ => (SQRT3, -1.0),
        }
    }
}

pub fn phi(s: Sector, x1: f64, x2: f64) -> f64 {
    let (a, b) = TriFunctional(s).coefficients();
    a * x1 + b * x2
}

pub fn phis(x1: f64, x2: f64) -> [f64; 3] {
    Sector::ALL.map(|s| phi(s, x1, x2))
}

/// Stratum of the standard trisection of `Q_M`.
///
/// `H(λ)` is `Z_λ ∩ Z_{λ−1}` and `Sigma` the triple intersection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Stratum {
    Z(Sector),
    H(Sector),
    Sigma,
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stratum::Z(s) => write!(f, "Z{s}"),
            Stratum::H(s) => write!(f, "H{s}"),
            Stratum::Sigma => write!(f, "Sigma"),
        }
    }
}

/// `Z_λ = {φ_λ ≤ 0, φ_{λ−1} ≥ 0}` widened by `tol`.
pub fn in_closed_sector(s: Sector, x1: f64, x2: f64, tol: f64) -> bool {
    phi(s, x1, x2) <= tol && phi(s.prev(), x1, x2) >= -tol
}

pub fn in_open_sector(s: Sector, x1: f64, x2: f64) -> bool {
    phi(s, x1, x2) < 0.0 && phi(s.prev(), x1, x2) > 0.0
}

pub fn candidates(p: &PointC2, tol: f64) -> [bool; 3] {
    Sector::ALL.map(|s| in_closed_sector(s, p.x1, p.x2, tol))
}

/// The stratum containing `p`, treating values of `φ` within `tol` of zero
/// as zero.
pub fn sector_of(p: &PointC2, tol: f64) -> Stratum {
    let c = candidates(p, tol);
    match c.iter().filter(|&&b| b).count() {
        3 => Stratum::Sigma,
        2 => {
            let missing = Sector::ALL
                .into_iter()
                .find(|s| !c[s.idx()])
                .expect("one sector missing");
            // The two present sectors are missing+1 and missing+2 = missing−1.
            Stratum::H(missing.prev())
        }
        _ => {
            let s = Sector::ALL.into_iter().find(|s| c[s.idx()]).unwrap_or({
                // Unreachable for finite input: the closed sectors cover the plane.
                Sector::ONE
            });
            Stratum::Z(s)
        }
    }
}

/// Tallies of a uniform sweep of `Q_M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverageReport {
    pub samples: u64,
    /// Samples labelled `Z₁, Z₂, Z₃`.
    pub sector_labels: [u64; 3],
    pub handlebody_labels: u64,
    pub sigma_labels: u64,
    /// Samples outside the band lying in exactly one closed sector.
    pub unique_closed: u64,
    /// Samples outside the band lying in exactly one open sector.
    pub unique_open: u64,
    /// Samples with some `|φ_λ| ≤ tol`.
    pub in_band: u64,
    /// Samples whose label disagrees with the exact closed-sector test.
    pub label_mismatches: u64,
}

impl CoverageReport {
    pub fn passed(&self) -> bool {
        let outside = self.samples - self.in_band;
        self.unique_closed == outside && self.unique_open == outside && self.label_mismatches == 0
    }
}

pub fn sector_coverage(q: &PolyhedronQM, samples: u64, seed: u64, tol: f64, exec: Exec) -> CoverageReport {
    const CHUNK: u64 = 4096;
    let chunks = samples.div_ceil(CHUNK);
    let r = q.real_bound();
    let m = q.m();
    let t = exec.tally::<9, _>(chunks as usize, |c| {
        let mut rng = sample_rng(seed, c as u64);
        let lo = c as u64 * CHUNK;
        let hi = (lo + CHUNK).min(samples);
        let mut t = [0u64; 9];
        for _ in lo..hi {
            let p = PointC2::new(
                rng.gen_range(-r..=r),
                rng.gen_range(-m..=m),
                rng.gen_range(-r..=r),
                rng.gen_range(-m..=m),
            );
            let label = sector_of(&p, tol);
            match label {
                Stratum::Z(s) => t[s.idx()] += 1,
                Stratum::H(_) => t[3] += 1,
                Stratum::Sigma => t[4] += 1,
            }
            if phis(p.x1, p.x2).iter().any(|v| v.abs() <= tol) {
                t[5] += 1;
                continue;
            }
            let closed = Sector::ALL.map(|s| in_closed_sector(s, p.x1, p.x2, 0.0));
            if closed.iter().filter(|&&b| b).count() == 1 {
                t[6] += 1;
            }
            if Sector::ALL.iter().filter(|&&s| in_open_sector(s, p.x1, p.x2)).count() == 1 {
                t[7] += 1;
            }
            if !matches!(label, Stratum::Z(s) if closed[s.idx()]) {
                t[8] += 1;
            }
        }
        t
    });
    CoverageReport {
        samples,
        sector_labels: [t[0], t[1], t[2]],
        handlebody_labels: t[3],
        sigma_labels: t[4],
        in_band: t[5],
        unique_closed: t[6],
        unique_open: t[7],
        label_mismatches: t[8],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels() {
        let tol = 1e-7;
        assert_eq!(sector_of(&PointC2::new(0.0, 3.0, 0.0, -2.0), tol), Stratum::Sigma);
        for s in [1.0, 0.5, 0.01] {
            let p = PointC2::new(0.001 * s, 0.0, -0.0005 * s, 0.0);
            assert_eq!(sector_of(&p, tol), Stratum::Z(Sector::ONE));
        }
        assert_eq!(sector_of(&PointC2::new(-0.001, 0.0, 0.0, 0.0), tol), Stratum::Z(Sector::THREE));
        // Positive x₁-axis is Z₁ ∩ Z₂.
        assert_eq!(sector_of(&PointC2::new(0.004, 0.0, 0.0, 0.0), tol), Stratum::H(Sector::TWO));
        // The ray at 120° is Z₂ ∩ Z₃, at 240° it is Z₃ ∩ Z₁.
        let (c, s) = (-0.5f64, 3f64.sqrt() / 2.0);
        assert_eq!(sector_of(&PointC2::new(c, 0.0, s, 0.0), tol), Stratum::H(Sector::THREE));
        assert_eq!(sector_of(&PointC2::new(c, 0.0, -s, 0.0), tol), Stratum::H(Sector::ONE));
    }

    #[test]
    fn sector_angles() {
        for deg in (0..360).map(|d| d as f64 + 0.5) {
            let a = deg.to_radians();
            let expect = if deg < 120.0 {
                Sector::TWO
            } else if deg < 240.0 {
                Sector::THREE
            } else {
                Sector::ONE
            };
            assert_eq!(sector_of(&PointC2::new(a.cos(), 0.0, a.sin(), 0.0), 1e-9), Stratum::Z(expect));
        }
    }

    #[test]
    fn small_sweep() {
        let q = PolyhedronQM::new(100.0).unwrap();
        let r = sector_coverage(&q, 20_000, 7, 1e-7, Exec::default());
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.sector_labels.iter().sum::<u64>() + r.handlebody_labels + r.sigma_labels, r.samples);
        assert_eq!(r, sector_coverage(&q, 20_000, 7, 1e-7, Exec::Sequential));
    }
}
