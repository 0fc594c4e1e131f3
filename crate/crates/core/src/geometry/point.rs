use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A point `(z₁, z₂) = (x₁ + i y₁, x₂ + i y₂)` of `C²`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct PointC2 {
    pub x1: f64,
    pub y1: f64,
    pub x2: f64,
    pub y2: f64,
}

impl PointC2 {
    pub const ORIGIN: PointC2 = PointC2::new(0.0, 0.0, 0.0, 0.0);

    pub const fn new(x1: f64, y1: f64, x2: f64, y2: f64) -> Self {
        PointC2 { x1, y1, x2, y2 }
    }

    pub fn from_complex(z1: Complex64, z2: Complex64) -> Self {
        PointC2::new(z1.re, z1.im, z2.re, z2.im)
    }

    pub fn z1(&self) -> Complex64 {
        Complex64::new(self.x1, self.y1)
    }

    pub fn z2(&self) -> Complex64 {
        Complex64::new(self.x2, self.y2)
    }

    pub fn coords(&self) -> [f64; 4] {
        [self.x1, self.y1, self.x2, self.y2]
    }

    pub fn is_finite(&self) -> bool {
        self.coords().iter().all(|c| c.is_finite())
    }

    pub fn distance(&self, other: &PointC2) -> f64 {
        self.coords()
            .iter()
            .zip(other.coords())
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }

    /// `p + ζ·v` along a complex direction `v`.
    pub fn along(&self, v: [Complex64; 2], zeta: Complex64) -> PointC2 {
        PointC2::from_complex(self.z1() + zeta * v[0], self.z2() + zeta * v[1])
    }
}

/// The polydisk-like box `Q_M = {|x_j| ≤ 1/M, |y_j| ≤ M}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PolyhedronQM {
    m: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Membership {
    pub inside: bool,
    /// Smallest slack over the four bounds; negative outside.
    pub margin: f64,
}

impl PolyhedronQM {
    pub fn new(m: f64) -> Result<Self> {
        if !(m.is_finite() && m > 1.0) {
            return Err(Error::Invalid(format!("Q_M needs M > 1, got {m}")));
        }
        Ok(PolyhedronQM { m })
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn real_bound(&self) -> f64 {
        1.0 / self.m
    }

    pub fn membership(&self, p: &PointC2) -> Membership {
        let r = self.real_bound();
        let margin = [
            r - p.x1.abs(),
            r - p.x2.abs(),
            self.m - p.y1.abs(),
            self.m - p.y2.abs(),
        ]
        .into_iter()
        .fold(f64::INFINITY, f64::min);
        Membership {
            inside: margin >= 0.0,
            margin,
        }
    }

    pub fn contains(&self, p: &PointC2) -> bool {
        self.membership(p).inside
    }

    /// Moduli of the eight holomorphic functions cutting out `Q_M` as an
    /// analytic polyhedron: `exp(±z_j − 1/M)` and `exp(∓i z_j − M)`.
    /// `p ∈ Q_M` exactly when all of them are at most 1.
    pub fn moduli(&self, p: &PointC2) -> [f64; 8] {
        let i = Complex64::i();
        let r = self.real_bound();
        let mut out = [0.0; 8];
        for (j, z) in [p.z1(), p.z2()].into_iter().enumerate() {
            out[4 * j] = (z - r).exp().norm();
            out[4 * j + 1] = (-z - r).exp().norm();
            out[4 * j + 2] = (-i * z - self.m).exp().norm();
            out[4 * j + 3] = (i * z - self.m).exp().norm();
        }
        out
    }

    /// Largest amount by which `log|f|` exceeds 0 over the defining
    /// functions; `max(0, ·)` of this vanishes exactly on `Q_M`.
    pub fn excess(&self, p: &PointC2) -> f64 {
        -self.membership(p).margin
    }
}

/// An affine complex line `{p + ζ v}` in `C²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexLine {
    pub base: PointC2,
    pub direction: [Complex64; 2],
}

impl ComplexLine {
    pub fn at(&self, zeta: Complex64) -> PointC2 {
        self.base.along(self.direction, zeta)
    }
}
