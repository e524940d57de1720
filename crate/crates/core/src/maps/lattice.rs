use super::MapError;
use crate::objects::{GridPath, PartitionMatrix, WeightedGridPath};

/// The walk through the nonempty cells of a nondecreasing matrix in
/// row-major order.
pub fn induced_path(a: &PartitionMatrix) -> Result<GridPath, MapError> {
    Ok(weighted_path(a)?.path().clone())
}

/// [`induced_path`] with each node weighted by the size of its cell.
pub fn weighted_path(a: &PartitionMatrix) -> Result<WeightedGridPath, MapError> {
    if !a.is_nondecreasing() {
        return Err(MapError::NotNondecreasing);
    }
    let cells = a.cells();
    let nodes: Vec<(usize, usize)> = cells.iter().map(|c| (c.row, c.col)).collect();
    let weights = cells.iter().map(|c| c.set.len() as u64).collect();
    let path = GridPath::from_nodes(&nodes).expect("nondecreasing matrices induce grid paths");
    Ok(WeightedGridPath::new_unchecked(path, weights))
}

/// The nondecreasing matrix whose cells, in path order, hold consecutive
/// runs of the given sizes.
pub fn matrix_from_weighted_path(w: &WeightedGridPath) -> PartitionMatrix {
    let mut positions = Vec::with_capacity(w.total_weight() as usize);
    for (node, &weight) in w.path().nodes().into_iter().zip(w.weights()) {
        positions.extend(std::iter::repeat_n(node, weight as usize));
    }
    PartitionMatrix::from_positions_unchecked(w.path().dim(), &positions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{nondecreasing, NondecreasingStrategy};

    #[test]
    fn displayed_example() {
        let a: PartitionMatrix = "({1},{2,3},{4,5},∅;∅,{6},∅;∅,{7,8};{9,10})"
            .parse()
            .unwrap();
        let w = weighted_path(&a).unwrap();
        assert_eq!(w.path().to_string(), "EESXS");
        assert_eq!(w.weights(), &[1, 2, 2, 1, 2, 2]);
        let stats = w.path().stats();
        assert_eq!((stats.south, stats.east, stats.south_east), (2, 2, 1));
        assert_eq!((stats.diag_south, stats.diag_south_east), (1, 0));
        assert_eq!(a.block_count(), stats.diag_south_east + 1);
        assert_eq!(matrix_from_weighted_path(&w), a);
    }

    #[test]
    fn rejects_decreasing_matrices() {
        let p: PartitionMatrix = "({1},{3};{2})".parse().unwrap();
        assert_eq!(induced_path(&p), Err(MapError::NotNondecreasing));
    }

    #[test]
    fn round_trip_and_block_relation() {
        for n in 1..=6 {
            for a in nondecreasing(n, false, NondecreasingStrategy::Filter).unwrap() {
                let w = weighted_path(&a).unwrap();
                assert!(w.validate().is_ok());
                assert_eq!(w.total_weight() as usize, n);
                assert_eq!(matrix_from_weighted_path(&w), a);
                assert_eq!(a.block_count(), w.path().stats().diag_south_east + 1);
                assert_eq!(a.is_improper(), w.validate_improper().is_ok());
            }
        }
    }
}
