//! Exhaustive, deterministic generators for every family.
//!
//! Each generator is a lazy iterator; restarting means calling the
//! constructor again. Families with a structural construction also expose a
//! plain filter over a larger family, used as an oracle in tests.

mod dfs;
mod family;
mod matrices;
mod words;

use thiserror::Error;

pub use family::{FamilyId, Object, Strategy};
pub use matrices::{
    count_partition_matrices_parallel, fishburn_matrices, ippm, nondecreasing, partition_matrices,
    weighted_paths, FishburnMatrices, IppmStrategy, NondecreasingStrategy, PartitionMatrices,
};
pub use words::{
    compositions, dyck_words, grid_paths, inversion_sequences, motzkin_words, pattern_class,
    Compositions, DyckWords, GridPaths, InversionSequences, MotzkinWords,
};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("the size parameter must be at least 1")]
    ZeroParameter,
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("unknown strategy `{strategy}` for family `{family}`")]
    UnknownStrategy { family: String, strategy: String },
}
