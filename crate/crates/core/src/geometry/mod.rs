//! Explicit models in `C²`: the box `Q_M` with its trisecting functionals,
//! linear and cubic branch loci in bridge position, the model polynomial
//! covering, the cusp of a fold map and sub-mean-value sampling.

mod certify;
mod cusp;
mod graph;
mod isotopy;
mod point;
mod poly;
mod psh;
mod sectors;

pub use certify::{
    bridge_points, bridge_points_with, certify_bridge_position, certify_with, tangle_trace, BridgeCertificate,
    BridgePoint, BridgeSearch, CertifyOptions, GraphCounts, TangleTrace, Tolerances, DEDUP_FRACTION, DEFAULT_GRID,
    DEFAULT_RESIDUAL_TOL, DEFAULT_SEEDS,
};
pub use cusp::{classify, cusp_analysis, fiber, fold_point, CuspRegion, CuspReport, RegionTally};
pub use graph::{graph_point, pleat_angle, GraphKind, GraphSurface, Scene, PLEAT_EPSILON, PLEAT_OFFSET};
pub use isotopy::{isotopy_check, isotopy_point, IsotopyReport, IsotopySample};
pub use point::{ComplexLine, Membership, PointC2, PolyhedronQM};
pub use poly::{poly_eval, poly_roots, polynomial_cover_check, PolyCoverReport};
pub use psh::{circle_average, subharmonicity_check, SubharmonicReport};
pub use sectors::{
    candidates, in_closed_sector, in_open_sector, phi, phis, sector_coverage, sector_of, CoverageReport, Stratum,
    TriFunctional,
};

/// Default classification band around `φ_λ = 0` and the discriminant.
pub const DEFAULT_BAND: f64 = 1e-7;
