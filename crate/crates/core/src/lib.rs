//! Overlap representations of finite graphs: construction, verification and
//! certified bounds on the overlap number φ and the pure overlap number Φ.

pub mod bounds;
pub mod graph;
pub mod constructions;
pub mod exact;
pub mod families;
pub mod model;
pub mod planar;
pub mod tree;
mod parse;

pub use graph::{Graph, GraphError};
pub use model::{verify, Label, LabelSet, OverlapRep, PairRelation, Quantity, RepKind};
pub use parse::ParseError;
