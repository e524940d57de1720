//! Partition matrices, Fishburn matrices and the improper partition
//! matrices counted by the signed inversion polynomial at `q = -1`.
//!
//! * [`objects`]: the combinatorial types and their statistics.
//! * [`enumerate`]: exhaustive generators for every family.
//! * [`maps`]: the involution, the doubling construction, the CDK map,
//!   induced lattice paths and the Motzkin bijection.
//! * [`algebra`]: exact polynomials and truncated power series.
//! * [`verify`]: every identity as a runnable, bounded check.

pub mod algebra;
pub mod enumerate;
pub mod maps;
pub mod objects;
pub mod verify;
