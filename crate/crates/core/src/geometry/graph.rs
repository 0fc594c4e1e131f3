use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::point::PointC2;
use crate::{Error, Result, Sector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphKind {
    /// `Γ_ε(z) = (−iεz, z)`.
    Linear,
    /// `C(z) = (iε(z³ − z), z)`.
    Cubic,
}

/// A rotated, translated holomorphic graph over a parameter rectangle.
///
/// `z ↦ R(θ)·(g(z), z) + t` with `R(θ) = [cos θ, sin θ; −sin θ, cos θ]`
/// acting complex-linearly. Pleated members are certified on their window
/// directly; other members are clipped to `Q_M`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GraphSurface {
    pub kind: GraphKind,
    pub epsilon: f64,
    pub theta: f64,
    /// `[Re t₁, Im t₁, Re t₂, Im t₂]`.
    pub translation: [f64; 4],
    /// `[x_min, x_max, y_min, y_max]` in `z = x + iy`.
    pub domain: [f64; 4],
    #[serde(default)]
    pub pleated: bool,
}

/// Default pleat offset `ε′` and pleat amplitude.
pub const PLEAT_OFFSET: f64 = 0.01;
pub const PLEAT_EPSILON: f64 = 0.01;

impl GraphSurface {
    /// `G_k = Γ_{1/M, θ} + ⟨ikR, ikR⟩` on a window slightly larger than its
    /// intersection with `Q_M`.
    pub fn linear_member(k: u32, m: f64, r: f64, theta: f64) -> Self {
        let kr = f64::from(k) * r;
        GraphSurface {
            kind: GraphKind::Linear,
            epsilon: 1.0 / m,
            theta,
            translation: [0.0, kr, 0.0, kr],
            domain: [-1.5 / m, 1.5 / m, -1.5, 1.5],
            pleated: false,
        }
    }

    /// Cubic pleat of the `k`-th member whose extra patch lands in `target`.
    ///
    /// Unrotated, the pleat `C + ⟨0, 1 + ε′⟩` doubles the patch in `Z₃`;
    /// the rotation by `(3 − μ)·2π/3` moves the doubled patch to `Z_μ`.
    pub fn pleat_member(k: u32, r: f64, target: Sector, epsilon: f64, offset: f64) -> Self {
        let kr = f64::from(k) * r;
        let theta = pleat_angle(target);
        let a = 1.0 + offset;
        let (s, c) = theta.sin_cos();
        GraphSurface {
            kind: GraphKind::Cubic,
            epsilon,
            theta,
            translation: [s * a, kr, c * a, kr],
            domain: [-a - 0.1, -a + 0.1, -2.5, 2.5],
            pleated: true,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let finite = self.epsilon.is_finite()
            && self.theta.is_finite()
            && self.translation.iter().chain(&self.domain).all(|v| v.is_finite());
        if !finite {
            return Err(Error::Invalid("graph has non-finite data".into()));
        }
        if self.epsilon <= 0.0 {
            return Err(Error::Invalid(format!("epsilon must be positive, got {}", self.epsilon)));
        }
        let [x0, x1, y0, y1] = self.domain;
        if !(x0 < x1 && y0 < y1) {
            return Err(Error::Invalid(format!("empty parameter domain {:?}", self.domain)));
        }
        Ok(())
    }

    pub fn clipped(&self) -> bool {
        !self.pleated
    }

    /// `(g(z), g′(z))` for the first coordinate before rotation.
    fn profile(&self, z: Complex64) -> (Complex64, Complex64) {
        let e = self.epsilon;
        match self.kind {
            GraphKind::Linear => (Complex64::new(0.0, -e) * z, Complex64::new(0.0, -e)),
            GraphKind::Cubic => {
                let ie = Complex64::new(0.0, e);
                (ie * (z * z * z - z), ie * (3.0 * z * z - 1.0))
            }
        }
    }

    /// Evaluation without a domain check.
    pub fn eval(&self, x: f64, y: f64) -> PointC2 {
        let z = Complex64::new(x, y);
        let (g, _) = self.profile(z);
        let (s, c) = self.theta.sin_cos();
        let [a, b, cc, d] = self.translation;
        PointC2::from_complex(
            c * g + s * z + Complex64::new(a, b),
            -s * g + c * z + Complex64::new(cc, d),
        )
    }

    /// `(Re z₁, Re z₂)` and its Jacobian in `(x, y)`.
    pub fn real_parts(&self, x: f64, y: f64) -> ([f64; 2], [[f64; 2]; 2]) {
        let z = Complex64::new(x, y);
        let (_, dg) = self.profile(z);
        let (s, c) = self.theta.sin_cos();
        let p = self.eval(x, y);
        let d1 = c * dg + s;
        let d2 = -s * dg + c;
        ([p.x1, p.x2], [[d1.re, -d1.im], [d2.re, -d2.im]])
    }

    pub fn in_domain(&self, x: f64, y: f64) -> bool {
        let [x0, x1, y0, y1] = self.domain;
        let slack = 1e-12 * self.diameter();
        x >= x0 - slack && x <= x1 + slack && y >= y0 - slack && y <= y1 + slack
    }

    pub fn diameter(&self) -> f64 {
        let [x0, x1, y0, y1] = self.domain;
        (x1 - x0).hypot(y1 - y0)
    }
}

/// Rotation taking the unrotated pleat's doubled patch from `Z₃` to `Z_μ`.
pub fn pleat_angle(target: Sector) -> f64 {
    f64::from(3 - target.get()) * 2.0 * PI / 3.0
}

pub fn graph_point(g: &GraphSurface, x: f64, y: f64) -> Result<PointC2> {
    if !g.in_domain(x, y) {
        return Err(Error::Invalid(format!(
            "parameter ({x}, {y}) outside domain {:?}",
            g.domain
        )));
    }
    Ok(g.eval(x, y))
}

/// Branch locus scene: scales and the graphs making up the locus.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scene {
    #[serde(rename = "M")]
    pub m: f64,
    #[serde(rename = "R")]
    pub r: f64,
    pub graphs: Vec<GraphSurface>,
}

impl Scene {
    /// Members `k = 1, …, n`; member `k` is pleated when `targets[k−1]`
    /// names the sector receiving the extra patch.
    pub fn family(m: f64, r: f64, targets: &[Option<Sector>]) -> Self {
        let graphs = targets
            .iter()
            .zip(1u32..)
            .map(|(t, k)| match t {
                None => GraphSurface::linear_member(k, m, r, 0.0),
                Some(s) => GraphSurface::pleat_member(k, r, *s, PLEAT_EPSILON, PLEAT_OFFSET),
            })
            .collect();
        Scene { m, r, graphs }
    }
}
