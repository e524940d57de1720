//! Maps, involutions and bijections between the families.

mod append;
mod doubling;
mod eta;
mod lattice;
mod phi;
mod reduce;
mod theta;

use thiserror::Error;

use crate::objects::{FishburnMatrix, PartitionMatrix, Violation};

pub use append::{parity_append, parity_remove, seq_append, seq_remove};
pub use doubling::{double_contract, double_expand, double_expand_with, KeepVector};
pub use eta::{cdk_eta, cdk_eta_inverse, EtaInverseTable};
pub use lattice::{induced_path, matrix_from_weighted_path, weighted_path};
pub use phi::{phi, phi_inv, phi_inv_path, phi_path};
pub use reduce::{reduce, unreduce, ReducedMatrix, ReducedMatrixJson};
pub use theta::theta;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("the matrix has a proper descent or ascent")]
    NotImproper,
    #[error("the matrix is not nondecreasing")]
    NotNondecreasing,
    #[error("the object is not in the minus class: {0}")]
    NotMinusClass(&'static str),
    #[error("the object is not in the plus class: {0}")]
    NotPlusClass(&'static str),
    #[error("not an image of the doubling construction: {0}")]
    NotDoublingImage(String),
    #[error("keep vector has length {found}, expected {expected}")]
    KeepLength { found: usize, expected: usize },
    #[error(transparent)]
    Invalid(#[from] Violation),
}

/// Entrywise cardinalities of `p`.
pub fn natural_fishburn(p: &PartitionMatrix) -> FishburnMatrix {
    let dim = p.dim();
    let mut entries = vec![0u64; dim * dim];
    for (row, col) in p.positions() {
        entries[(row - 1) * dim + (col - 1)] += 1;
    }
    FishburnMatrix::from_entries_unchecked(dim, entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "({1},∅,{4,5},∅;{2,3},{6},∅;∅,{8};{7})";

    #[test]
    fn natural_fishburn_of_example() {
        let image = natural_fishburn(&EXAMPLE.parse().unwrap());
        assert_eq!(image.to_string(), "(1,0,2,0;0,2,1,0;0,0,0,1;0,0,0,1)");
        let single: PartitionMatrix = "({1,2,3})".parse().unwrap();
        assert_eq!(natural_fishburn(&single).to_string(), "(3)");
    }
}
