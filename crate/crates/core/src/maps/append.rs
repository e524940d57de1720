use super::MapError;
use crate::objects::{InversionSequence, PartitionMatrix};

fn last_cell_size(q: &PartitionMatrix) -> usize {
    let n = q.n();
    let last = (q.row(n), q.col(n));
    q.positions().filter(|pos| *pos == last).count()
}

/// Puts `n + 1` into the cell holding `n`. The input must be improper with
/// `n` in a cell of odd size.
pub fn parity_append(q: &PartitionMatrix) -> Result<PartitionMatrix, MapError> {
    if !q.is_improper() {
        return Err(MapError::NotImproper);
    }
    if last_cell_size(q).is_multiple_of(2) {
        return Err(MapError::NotMinusClass(
            "the largest element sits in a cell of even size",
        ));
    }
    let mut positions: Vec<(usize, usize)> = q.positions().collect();
    positions.push(*positions.last().expect("weight is positive"));
    Ok(PartitionMatrix::from_positions_unchecked(
        q.dim(),
        &positions,
    ))
}

/// Inverse of [`parity_append`]: removes the largest element, which must sit
/// in a cell of even size of an improper matrix.
pub fn parity_remove(q: &PartitionMatrix) -> Result<PartitionMatrix, MapError> {
    if !q.is_improper() {
        return Err(MapError::NotImproper);
    }
    if last_cell_size(q) % 2 == 1 {
        return Err(MapError::NotPlusClass(
            "the largest element sits in a cell of odd size",
        ));
    }
    let mut positions: Vec<(usize, usize)> = q.positions().collect();
    positions.pop();
    Ok(PartitionMatrix::from_positions_unchecked(
        q.dim(),
        &positions,
    ))
}

/// Appends a copy of the last entry. The input must avoid the pattern and
/// must not already end in a repeat; length 1 counts as not repeating.
pub fn seq_append(e: &InversionSequence) -> Result<InversionSequence, MapError> {
    if !e.in_pattern_class() {
        return Err(MapError::NotMinusClass(
            "the sequence has a separated repeat",
        ));
    }
    if e.ends_with_repeat() {
        return Err(MapError::NotMinusClass("the last two entries are equal"));
    }
    let mut entries = e.entries().to_vec();
    entries.push(*entries.last().expect("length is positive"));
    Ok(InversionSequence::new_unchecked(entries))
}

/// Inverse of [`seq_append`].
pub fn seq_remove(e: &InversionSequence) -> Result<InversionSequence, MapError> {
    if !e.in_pattern_class() {
        return Err(MapError::NotPlusClass(
            "the sequence has a separated repeat",
        ));
    }
    if !e.ends_with_repeat() {
        return Err(MapError::NotPlusClass("the last two entries differ"));
    }
    let mut entries = e.entries().to_vec();
    entries.pop();
    Ok(InversionSequence::new_unchecked(entries))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let q: PartitionMatrix = "({1,2,3})".parse().unwrap();
        let image = parity_append(&q).unwrap();
        assert_eq!(image.to_string(), "({1,2,3,4})");
        assert_eq!(image.semi_weight(), q.semi_weight());
        assert_eq!(parity_remove(&image).unwrap(), q);
        assert!(parity_append(&image).is_err());

        let e = InversionSequence::new(vec![0, 1, 2]).unwrap();
        let f = seq_append(&e).unwrap();
        assert_eq!(f.entries(), &[0, 1, 2, 2]);
        assert_eq!(f.dist(), 3);
        assert_eq!(seq_remove(&f).unwrap(), e);
        assert!(seq_append(&f).is_err());
    }
}
