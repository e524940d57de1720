use serde::{Deserialize, Serialize};

use super::reduce::{reduce, unreduce, ReducedMatrix};
use super::MapError;
use crate::objects::PartitionMatrix;

/// One bit per column: whether the largest element of the doubled column
/// was kept. Serialized as a list of 0/1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<u8>", from = "Vec<u8>")]
pub struct KeepVector(pub Vec<bool>);

impl From<KeepVector> for Vec<u8> {
    fn from(k: KeepVector) -> Self {
        k.0.into_iter().map(u8::from).collect()
    }
}

impl From<Vec<u8>> for KeepVector {
    fn from(bits: Vec<u8>) -> Self {
        KeepVector(bits.into_iter().map(|b| b != 0).collect())
    }
}

/// Doubles every local element `k` of every column into `2k-1, 2k` (same
/// cell), drops the largest element of column `d` unless `keep[d]`, and
/// renumbers back. Panics if `keep` has the wrong length.
pub fn double_expand_with(p: &PartitionMatrix, keep: &[bool]) -> PartitionMatrix {
    assert_eq!(keep.len(), p.dim(), "one keep bit per column");
    let reduced = reduce(p);
    let columns = (1..=p.dim()).map(|d| {
        let mut doubled: Vec<usize> = reduced.column(d).iter().flat_map(|&r| [r, r]).collect();
        if !keep[d - 1] {
            doubled.pop();
        }
        doubled
    });
    unreduce(&ReducedMatrix::from_columns_unchecked(columns.collect()))
}

/// All `2^dim` images, keep bits ordered lexicographically with "keep"
/// first.
pub fn double_expand(p: &PartitionMatrix) -> Vec<PartitionMatrix> {
    let dim = p.dim();
    (0u64..1 << dim)
        .map(|mask| {
            let keep: Vec<bool> = (0..dim).map(|d| mask >> (dim - 1 - d) & 1 == 0).collect();
            double_expand_with(p, &keep)
        })
        .collect()
}

/// Inverse of [`double_expand_with`] on improper matrices.
pub fn double_contract(q: &PartitionMatrix) -> Result<(PartitionMatrix, KeepVector), MapError> {
    if !q.is_improper() {
        return Err(MapError::NotImproper);
    }
    let reduced = reduce(q);
    let mut keep = Vec::with_capacity(q.dim());
    let mut columns = Vec::with_capacity(q.dim());
    for d in 1..=q.dim() {
        let mut rows = reduced.column(d).to_vec();
        let kept = rows.len().is_multiple_of(2);
        if !kept {
            rows.push(*rows.last().expect("columns are nonempty"));
        }
        let mut halved = Vec::with_capacity(rows.len() / 2);
        for (k, pair) in rows.chunks(2).enumerate() {
            if pair[0] != pair[1] {
                return Err(MapError::NotDoublingImage(format!(
                    "local elements {} and {} of column {d} lie in different rows",
                    2 * k + 1,
                    2 * k + 2
                )));
            }
            halved.push(pair[0]);
        }
        keep.push(kept);
        columns.push(halved);
    }
    Ok((
        unreduce(&ReducedMatrix::from_columns_unchecked(columns)),
        KeepVector(keep),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::partition_matrices;
    use std::collections::HashSet;

    fn pm(text: &str) -> PartitionMatrix {
        text.parse().unwrap()
    }

    #[test]
    fn single_column() {
        let images = double_expand(&pm("({1,2})"));
        let shown: Vec<String> = images.iter().map(|q| q.to_string()).collect();
        assert_eq!(shown, vec!["({1,2,3,4})", "({1,2,3})"]);
        assert!(images
            .iter()
            .all(|q| q.is_improper() && q.semi_weight() == 2));
        let (p, keep) = double_contract(&pm("({1,2,3})")).unwrap();
        assert_eq!(p, pm("({1,2})"));
        assert_eq!(keep, KeepVector(vec![false]));
        assert_eq!(serde_json::to_string(&keep).unwrap(), "[0]");
    }

    #[test]
    fn contract_rejects_proper_matrices() {
        assert_eq!(
            double_contract(&pm("({1},{3};{2})")),
            Err(MapError::NotImproper)
        );
    }

    #[test]
    fn round_trip_and_disjoint_images() {
        let mut seen = HashSet::new();
        for m in 1..=5 {
            for p in partition_matrices(m).unwrap() {
                for q in double_expand(&p) {
                    assert!(q.validate().is_ok());
                    assert!(q.is_improper());
                    assert_eq!(q.semi_weight(), m);
                    let (back, keep) = double_contract(&q).unwrap();
                    assert_eq!(back, p);
                    assert_eq!(double_expand_with(&p, &keep.0), q);
                    assert!(seen.insert(q));
                }
            }
        }
    }
}
