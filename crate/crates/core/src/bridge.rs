//! Counts for surfaces in (relative) bridge position and the bridge
//! perturbation move.
//!
//! Arc bookkeeping for properly embedded surfaces: each of the `n` boundary
//! braid strands contributes one arc endpoint on the boundary of every
//! handlebody, so `2·a_λ = bridge_points + n`. Reports carry this convention
//! in [`ARC_CONVENTION`].

use serde::{Deserialize, Serialize};

use crate::{violation, Result, Sector, ValidationReport};

pub const ARC_CONVENTION: &str =
    "relative ambient: each braid strand contributes one boundary arc endpoint per handlebody (2a = points + n)";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BridgeSurfaceData {
    /// Braid index `n` of the boundary; zero for a closed ambient manifold.
    pub braid_index: u32,
    pub bridge_index: u32,
    pub bridge_points: u32,
    /// Arc counts `a_λ` of the tangle in each handlebody.
    pub arcs: [u32; 3],
    /// Disk counts `c_λ` of the disk-tangle in each sector.
    pub patches: [u32; 3],
    pub closed_ambient: bool,
}

/// A sector-`λ` finger perturbation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PerturbationMove {
    pub sector: Sector,
}

impl PerturbationMove {
    pub fn new(sector: Sector) -> Self {
        PerturbationMove { sector }
    }

    /// The sector whose disk count grows: the one opposite the handlebody
    /// the finger is pushed through.
    pub fn patch_sector(self) -> Sector {
        self.sector.next()
    }
}

impl BridgeSurfaceData {
    /// `n` trivial disks in `B⁴` meeting the central disk once each.
    pub fn trivial_disks(n: u32) -> Self {
        BridgeSurfaceData {
            braid_index: n,
            bridge_index: 0,
            bridge_points: n,
            arcs: [n; 3],
            patches: [n; 3],
            closed_ambient: false,
        }
    }

    /// Unknotted 2-sphere in 1-bridge position in a closed manifold.
    pub fn unknotted_sphere() -> Self {
        BridgeSurfaceData {
            braid_index: 0,
            bridge_index: 1,
            bridge_points: 2,
            arcs: [1; 3],
            patches: [1; 3],
            closed_ambient: true,
        }
    }

    /// Arc endpoints lying on the boundary of each handlebody.
    pub fn boundary_endpoints(&self) -> u32 {
        if self.closed_ambient {
            0
        } else {
            self.braid_index
        }
    }

    pub fn validate(&self) -> ValidationReport {
        let mut out = Vec::new();
        let n = u64::from(self.braid_index);
        let b = u64::from(self.bridge_index);
        let points = u64::from(self.bridge_points);
        if self.closed_ambient && n != 0 {
            out.push(violation(
                "closed braid index",
                format!("closed ambient with braid index {n}"),
            ));
        }
        let expected = if self.closed_ambient { 2 * b } else { 2 * b + n };
        if points != expected {
            let rule = if self.closed_ambient { "points = 2b" } else { "points = 2b + n" };
            out.push(violation(rule, format!("{points} bridge points, expected {expected}")));
        }
        let endpoints = points + u64::from(self.boundary_endpoints());
        for s in Sector::ALL {
            let a = u64::from(self.arcs[s.idx()]);
            if 2 * a != endpoints {
                out.push(violation(
                    format!("arc endpoints {s}"),
                    format!("2·a{s} = {} but {endpoints} endpoints", 2 * a),
                ));
            }
        }
        ValidationReport::from_violations(out)
    }
}

pub fn validate_bridge(s: &BridgeSurfaceData) -> ValidationReport {
    s.validate()
}

/// Applies a finger perturbation: one more bridge, two more bridge points,
/// one more arc in every handlebody and one more disk in sector `λ + 1`.
pub fn perturb(s: &BridgeSurfaceData, m: PerturbationMove) -> Result<BridgeSurfaceData> {
    s.validate().into_result("bridge surface")?;
    let mut out = *s;
    out.bridge_index += 1;
    out.bridge_points += 2;
    out.patches[m.patch_sector().idx()] += 1;
    let endpoints = out.bridge_points + out.boundary_endpoints();
    out.arcs = [endpoints / 2; 3];
    Ok(out)
}

/// `χ(K) = points − Σa_λ + Σc_λ`, inclusion–exclusion over the bridge
/// decomposition (points, contractible arcs, disks). No correction term is
/// needed on the boundary: the boundary arcs are counted inside `a_λ`.
pub fn surface_euler(s: &BridgeSurfaceData) -> Result<i64> {
    s.validate().into_result("bridge surface")?;
    let sum = |t: [u32; 3]| t.iter().map(|&x| i64::from(x)).sum::<i64>();
    Ok(i64::from(s.bridge_points) - sum(s.arcs) + sum(s.patches))
}
