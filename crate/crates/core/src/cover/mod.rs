//! Simple branched covers: permutation monodromy, Riemann–Hurwitz lifting of
//! strata, and the pullback of the standard trisection of `B⁴` along a
//! branch locus in relative bridge position.

mod lift;
mod monodromy;
mod perm;
mod pullback;

pub use lift::{lift_stratum, StratumLift};
pub use monodromy::{standard_rho, MonodromyRep, MonodromyWire};
pub use perm::{orbits, Permutation};
pub use pullback::{
    perturbation_stabilization_check, perturbation_stabilization_check_at, pullback_components,
    pullback_detail, pullback_trisection, split_locus, PullbackDetail,
};
