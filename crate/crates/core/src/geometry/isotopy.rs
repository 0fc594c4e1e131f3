use serde::{Deserialize, Serialize};

use super::graph::{GraphKind, GraphSurface};
use super::point::{PointC2, PolyhedronQM};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IsotopySample {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub point: PointC2,
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IsotopyReport {
    pub ok: bool,
    pub samples: usize,
    pub tol: f64,
    /// Largest `|y₂ − M|` over the `t = 1` samples.
    pub boundary_error: f64,
    pub first_violation: Option<IsotopySample>,
}

/// The straight-line isotopy pushing `G_k` onto the face `y₂ = M`:
/// `(y/M, (t − 1)x/M + kR, x, (1 − t)y + tM + (1 − t)kR)`.
pub fn isotopy_point(m: f64, kr: f64, t: f64, x: f64, y: f64) -> PointC2 {
    PointC2::new(y / m, (t - 1.0) * x / m + kr, x, (1.0 - t) * y + t * m + (1.0 - t) * kr)
}

/// Samples the isotopy of a linear family member over `|x|, |y| ≤ 1/M`,
/// `t ∈ [0, 1]` on a grid of about `samples` points, endpoints included.
pub fn isotopy_check(g: &GraphSurface, q: &PolyhedronQM, samples: usize, tol: f64) -> Result<IsotopyReport> {
    g.validate()?;
    let [re1, im1, re2, im2] = g.translation;
    let linear_member = g.kind == GraphKind::Linear
        && g.theta == 0.0
        && re1 == 0.0
        && re2 == 0.0
        && im1 == im2
        && (g.epsilon * q.m() - 1.0).abs() < 1e-12;
    if !linear_member {
        return Err(Error::Invalid(
            "isotopy is defined for unrotated linear members Γ_{1/M} + ⟨ikR, ikR⟩".into(),
        ));
    }
    let kr = im1;
    let m = q.m();
    let per_axis = ((samples.max(8) as f64).cbrt().ceil() as usize).max(2);
    let r = q.real_bound();
    let coord = |i: usize| -r + 2.0 * r * i as f64 / (per_axis - 1) as f64;
    let mut count = 0;
    let mut boundary_error: f64 = 0.0;
    let mut first_violation = None;
    'outer: for it in 0..per_axis {
        let t = it as f64 / (per_axis - 1) as f64;
        for ix in 0..per_axis {
            for iy in 0..per_axis {
                let (x, y) = (coord(ix), coord(iy));
                let p = isotopy_point(m, kr, t, x, y);
                let margin = q.membership(&p).margin;
                count += 1;
                let mut bad = margin < -tol;
                if it == per_axis - 1 {
                    let e = (p.y2 - m).abs();
                    boundary_error = boundary_error.max(e);
                    bad |= e > tol;
                }
                if bad {
                    first_violation = Some(IsotopySample { t, x, y, point: p, margin });
                    break 'outer;
                }
            }
        }
    }
    Ok(IsotopyReport {
        ok: first_violation.is_none(),
        samples: count,
        tol,
        boundary_error,
        first_violation,
    })
}
