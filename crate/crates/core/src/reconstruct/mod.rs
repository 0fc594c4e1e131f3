//! Reducible trisections, splittings of the sector handle counts, the
//! reconstruction of a piece from its spine, and the glued exhaustion
//! function built from per-sector functions.

mod glue;
mod reducible;

pub use glue::{shilov_glue_eval, GlueField, SampledField, ShilovGlue};
pub use reducible::{
    make_reducible, reconstruct_z, reducibility_necessary, ReconstructionResult, ReducibleTrisection,
    SplittingData, Verdict,
};
