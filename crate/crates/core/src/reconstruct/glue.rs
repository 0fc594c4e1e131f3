use serde::{Deserialize, Serialize};

use crate::geometry::{candidates, phi, PointC2, PolyhedronQM};
use crate::{Error, Result, Sector};

/// Values on a regular `nx × ny` grid over the `(x₁, x₂)` rectangle,
/// row-major in `x₂`, interpolated bilinearly.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampledField {
    pub x1: [f64; 2],
    pub x2: [f64; 2],
    pub nx: usize,
    pub ny: usize,
    pub values: Vec<f64>,
}

impl SampledField {
    pub fn validate(&self) -> Result<()> {
        if self.nx < 2 || self.ny < 2 {
            return Err(Error::Invalid(format!("grid {}×{} needs at least 2×2 nodes", self.nx, self.ny)));
        }
        if self.values.len() != self.nx * self.ny {
            return Err(Error::Mismatch(format!("{} values for a {}×{} grid", self.values.len(), self.nx, self.ny)));
        }
        if !(self.x1[0] < self.x1[1] && self.x2[0] < self.x2[1]) {
            return Err(Error::Invalid("grid rectangle is empty".into()));
        }
        if let Some(v) = self.values.iter().find(|v| !(v.is_finite() && **v >= 0.0)) {
            return Err(Error::Invalid(format!("glue values must be finite and non-negative, found {v}")));
        }
        Ok(())
    }

    pub fn eval(&self, x1: f64, x2: f64) -> Result<f64> {
        let u = (x1 - self.x1[0]) / (self.x1[1] - self.x1[0]) * (self.nx - 1) as f64;
        let v = (x2 - self.x2[0]) / (self.x2[1] - self.x2[0]) * (self.ny - 1) as f64;
        if !(u >= 0.0 && v >= 0.0 && u <= (self.nx - 1) as f64 && v <= (self.ny - 1) as f64) {
            return Err(Error::Invalid(format!("({x1}, {x2}) outside the sampled grid")));
        }
        let i = (u.floor() as usize).min(self.nx - 2);
        let j = (v.floor() as usize).min(self.ny - 2);
        let (s, t) = (u - i as f64, v - j as f64);
        let at = |i: usize, j: usize| self.values[j * self.nx + i];
        Ok((1.0 - s) * (1.0 - t) * at(i, j) + s * (1.0 - t) * at(i + 1, j) + (1.0 - s) * t * at(i, j + 1) + s * t * at(i + 1, j + 1))
    }
}

/// One sector's function `G_λ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum GlueField {
    /// `w·max(0, φ_λ, −φ_{λ−1}, excess_Q(p))`, vanishing exactly on `Z_λ ∩ Q_M`.
    Model { weight: f64 },
    Grid(SampledField),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShilovGlue {
    #[serde(rename = "M")]
    pub m: f64,
    pub band: f64,
    pub fields: [GlueField; 3],
}

impl ShilovGlue {
    pub fn qm_model(m: f64, band: f64) -> Self {
        Self::weighted(m, band, [1.0; 3])
    }

    pub fn weighted(m: f64, band: f64, weights: [f64; 3]) -> Self {
        ShilovGlue {
            m,
            band,
            fields: weights.map(|weight| GlueField::Model { weight }),
        }
    }

    pub fn validate(&self) -> Result<()> {
        PolyhedronQM::new(self.m)?;
        if !(self.band >= 0.0 && self.band.is_finite()) {
            return Err(Error::Invalid(format!("band must be non-negative, got {}", self.band)));
        }
        for f in &self.fields {
            match f {
                GlueField::Model { weight } if !(weight.is_finite() && *weight > 0.0) => {
                    return Err(Error::Invalid(format!("weight must be positive, got {weight}")))
                }
                GlueField::Grid(g) => g.validate()?,
                _ => {}
            }
        }
        Ok(())
    }

    /// `G_λ(p)` for a single sector.
    pub fn sector_value(&self, s: Sector, p: &PointC2) -> Result<f64> {
        match &self.fields[s.idx()] {
            GlueField::Model { weight } => {
                let q = PolyhedronQM::new(self.m)?;
                let v = 0.0f64
                    .max(phi(s, p.x1, p.x2))
                    .max(-phi(s.prev(), p.x1, p.x2))
                    .max(q.excess(p));
                Ok(weight * v)
            }
            GlueField::Grid(g) => g.eval(p.x1, p.x2),
        }
    }
}

/// `max G_λ(p)` over the sectors whose closure (widened by the band) holds `p`.
pub fn shilov_glue_eval(glue: &ShilovGlue, p: &PointC2) -> Result<f64> {
    let c = candidates(p, glue.band);
    let mut best = f64::NEG_INFINITY;
    for s in Sector::ALL.into_iter().filter(|s| c[s.idx()]) {
        best = best.max(glue.sector_value(s, p)?);
    }
    Ok(best)
}
