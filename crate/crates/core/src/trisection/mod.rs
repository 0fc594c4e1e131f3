//! Parameter arithmetic and the homological diagram calculus for closed and
//! relative trisections.

mod diagram;
mod params;
pub mod smith;

pub use diagram::{
    heegaard_h1, unbalanced_s4_diagram, AbelianGroup, CutSystem, IntersectionForm,
    SpineEncoding, TrisectionDiagram,
};
pub use params::{
    connected_sum, euler_char_closed, euler_char_relative, stabilization_delta, stabilize,
    validate_params, Params, RelTrisectionParams, TrisectionParams,
};
