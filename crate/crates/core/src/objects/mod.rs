//! Domain objects and the statistics defined on them.
//!
//! Every type validates at construction and is immutable afterwards, so the
//! statistic methods are total. Each type also has a canonical JSON form
//! (see the `*Json` structs) used by the command-line tool.

mod fishburn;
mod matrix;
mod paths;
mod sequence;
mod violation;

pub use fishburn::{FishburnMatrix, FishburnMatrixJson};
pub use matrix::{
    Cell, ParseMatrixError, PartitionMatrix, PartitionMatrixJson, StepEvent, StepKind,
};
pub use paths::{
    DyckStep, DyckWord, GridPath, GridPathJson, GridPathStats, GridStep, MotzkinStats, MotzkinStep,
    MotzkinWord, WeightedGridPath, WeightedGridPathJson, WordJson,
};
pub use sequence::{InversionSequence, InversionSequenceJson};
pub use violation::Violation;
