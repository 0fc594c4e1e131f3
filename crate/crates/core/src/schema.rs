//! Versioned JSON input formats (`"schema": "tw/1"`).
//!
//! Every file carries the schema tag; unknown fields are rejected so typos
//! surface as input errors with a location.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::bridge::BridgeSurfaceData;
use crate::cover::MonodromyWire;
use crate::geometry::GraphSurface;
use crate::reconstruct::{GlueField, SplittingData};
use crate::trisection::{CutSystem, Params, RelTrisectionParams, TrisectionDiagram, TrisectionParams};
use crate::{Error, Result, Sector};

pub const SCHEMA: &str = "tw/1";

/// Parses `text` as `T` after checking the schema tag.
pub fn parse<T: DeserializeOwned>(text: &str) -> Result<T> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(located)?;
    match value.get("schema") {
        Some(serde_json::Value::String(s)) if s == SCHEMA => {}
        Some(other) => {
            return Err(Error::Schema {
                location: "schema".into(),
                message: format!("expected \"{SCHEMA}\", found {other}"),
            })
        }
        None => {
            return Err(Error::Schema {
                location: "schema".into(),
                message: format!("missing schema tag \"{SCHEMA}\""),
            })
        }
    }
    serde_json::from_str(text).map_err(located)
}

fn located(e: serde_json::Error) -> Error {
    Error::Schema {
        location: format!("line {}, column {}", e.line(), e.column()),
        message: e.to_string(),
    }
}

/// Trisection parameters, optionally with a diagram. The file is relative
/// when `p` or `b` is present.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsFile {
    pub schema: String,
    pub genus: u32,
    pub k: [u32; 3],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cut_systems: Option<[CutSystem; 3]>,
}

impl ParamsFile {
    pub fn params(&self) -> Result<Params> {
        match (self.p, self.b) {
            (None, None) => Ok(TrisectionParams::new(self.genus, self.k).into()),
            (Some(p), Some(b)) => Ok(RelTrisectionParams::new(self.genus, self.k, p, b).into()),
            (p, _) => Err(Error::Schema {
                location: if p.is_some() { "b" } else { "p" }.into(),
                message: "relative parameters need both p and b".into(),
            }),
        }
    }

    pub fn diagram(&self) -> Option<TrisectionDiagram> {
        self.cut_systems.clone().map(|cut_systems| TrisectionDiagram {
            genus: self.genus,
            boundary_components: self.b.unwrap_or(0),
            cut_systems,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramWire {
    pub genus: u32,
    #[serde(default)]
    pub b: u32,
    pub cut_systems: [CutSystem; 3],
}

impl From<&DiagramWire> for TrisectionDiagram {
    fn from(w: &DiagramWire) -> Self {
        TrisectionDiagram {
            genus: w.genus,
            boundary_components: w.b,
            cut_systems: w.cut_systems.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelParamsWire {
    pub genus: u32,
    pub k: [u32; 3],
    pub p: u32,
    pub b: u32,
}

impl From<RelParamsWire> for RelTrisectionParams {
    fn from(w: RelParamsWire) -> Self {
        RelTrisectionParams::new(w.genus, w.k, w.p, w.b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BridgeFile {
    pub schema: String,
    pub bridge_surface: BridgeSurfaceData,
    /// Sectors of finger perturbations to apply in order.
    #[serde(default)]
    pub perturb: Vec<Sector>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverFile {
    pub schema: String,
    pub monodromy: MonodromyWire,
    /// Aggregate locus; extra bridges are placed on the first disk.
    #[serde(default)]
    pub bridge_surface: Option<BridgeSurfaceData>,
    /// Locus given disk by disk, one entry per meridian.
    #[serde(default)]
    pub components: Option<Vec<BridgeSurfaceData>>,
    #[serde(default)]
    pub base: Option<RelParamsWire>,
    /// `ε` of the model polynomial covering checked alongside.
    #[serde(default)]
    pub model_epsilon: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeometryFile {
    pub schema: String,
    #[serde(rename = "M")]
    pub m: f64,
    #[serde(rename = "R")]
    pub r: f64,
    pub graphs: Vec<GraphSurface>,
    #[serde(default)]
    pub declared: Option<BridgeSurfaceData>,
    #[serde(default)]
    pub grid: Option<usize>,
    #[serde(default)]
    pub isotopy_samples: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CuspFile {
    pub schema: String,
    #[serde(default)]
    pub samples: Option<u64>,
    #[serde(default)]
    pub fold_samples: Option<u64>,
    #[serde(default)]
    pub band: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PshFile {
    pub schema: String,
    #[serde(default, rename = "M")]
    pub m: Option<f64>,
    #[serde(default)]
    pub circles: Option<usize>,
    #[serde(default)]
    pub m_samples: Option<usize>,
    #[serde(default)]
    pub band: Option<f64>,
    #[serde(default)]
    pub weights: Option<[f64; 3]>,
    /// Per-sector glue functions; the built-in model when absent.
    #[serde(default)]
    pub fields: Option<[GlueField; 3]>,
    #[serde(default)]
    pub coverage_samples: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReconstructFile {
    pub schema: String,
    pub summands: [TrisectionParams; 2],
    pub splitting: SplittingData,
    pub base: RelParamsWire,
    pub z_spine: DiagramWire,
    pub b_spine: DiagramWire,
    /// Diagram and class for the homological reducibility test.
    #[serde(default)]
    pub diagram: Option<DiagramWire>,
    #[serde(default)]
    pub delta: Option<Vec<i64>>,
}

/// Settings of the Stein 4-ball pipeline.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct PipelineConfig {
    pub schema: String,
    /// `(n₁, n₂, n₃)`: interior stabilizations wanted in each sector.
    pub stabilizations: [u32; 3],
    #[serde(rename = "M")]
    pub m: f64,
    #[serde(rename = "R")]
    pub r: f64,
    pub epsilon_prime: f64,
    pub tol: f64,
    pub grid: usize,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            schema: SCHEMA.into(),
            stabilizations: [0; 3],
            m: 100.0,
            r: 10.0,
            epsilon_prime: crate::geometry::PLEAT_OFFSET,
            tol: crate::geometry::DEFAULT_RESIDUAL_TOL,
            grid: crate::geometry::DEFAULT_GRID,
        }
    }
}

impl PipelineConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |location: &str, message: String| {
            Err(Error::Schema {
                location: location.into(),
                message,
            })
        };
        if self.schema != SCHEMA {
            return bad("schema", format!("expected \"{SCHEMA}\""));
        }
        if !(self.m.is_finite() && self.r.is_finite() && 1.0 / self.m < 1.0 && 1.0 < self.r && self.r < self.m) {
            return bad("M", format!("scales must satisfy 1/M < 1 < R < M, got M = {}, R = {}", self.m, self.r));
        }
        if !(self.epsilon_prime.is_finite() && self.epsilon_prime > 0.0) {
            return bad("epsilon_prime", format!("must be positive, got {}", self.epsilon_prime));
        }
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return bad("tol", format!("must be positive, got {}", self.tol));
        }
        if self.grid < 64 {
            return bad("grid", format!("must be at least 64, got {}", self.grid));
        }
        Ok(())
    }
}
