use std::fmt;

use serde::{Deserialize, Serialize};

use super::Violation;

/// Upper-triangular nonnegative integer matrix whose every row and column
/// has a positive entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "FishburnMatrixJson", into = "FishburnMatrixJson")]
pub struct FishburnMatrix {
    dim: usize,
    /// Row-major, `dim * dim`, zero below the diagonal.
    entries: Vec<u64>,
}

/// Canonical JSON form: `{"dim":..,"rows":[[..],..]}` with `dim` rows of
/// `dim` entries each, zeros written out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FishburnMatrixJson {
    pub dim: usize,
    pub rows: Vec<Vec<u64>>,
}

impl FishburnMatrix {
    pub fn from_rows(rows: Vec<Vec<u64>>) -> Result<Self, Violation> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Violation::ZeroDimension);
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != dim {
                return Err(Violation::RowLength {
                    row: r + 1,
                    found: row.len(),
                    expected: dim,
                });
            }
            entries.extend(row);
        }
        let matrix = FishburnMatrix { dim, entries };
        matrix.validate()?;
        Ok(matrix)
    }

    pub(crate) fn from_entries_unchecked(dim: usize, entries: Vec<u64>) -> Self {
        debug_assert_eq!(entries.len(), dim * dim);
        FishburnMatrix { dim, entries }
    }

    pub fn validate(&self) -> Result<(), Violation> {
        let dim = self.dim;
        if dim == 0 {
            return Err(Violation::ZeroDimension);
        }
        for r in 1..=dim {
            for c in 1..r {
                if self.entry(r, c) != 0 {
                    return Err(Violation::BelowDiagonal { row: r, col: c });
                }
            }
        }
        for r in 1..=dim {
            if (r..=dim).all(|c| self.entry(r, c) == 0) {
                return Err(Violation::EmptyRow { row: r });
            }
        }
        for c in 1..=dim {
            if (1..=c).all(|r| self.entry(r, c) == 0) {
                return Err(Violation::EmptyColumn { col: c });
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// 1-based entry access.
    pub fn entry(&self, row: usize, col: usize) -> u64 {
        self.entries[(row - 1) * self.dim + (col - 1)]
    }

    pub fn weight(&self) -> u64 {
        self.entries.iter().sum()
    }

    /// Entries `(1, col) ..= (col, col)` of one column.
    pub fn column(&self, col: usize) -> Vec<u64> {
        (1..=col).map(|r| self.entry(r, col)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.entries.chunks(self.dim).map(<[u64]>::to_vec).collect()
    }
}

impl From<FishburnMatrix> for FishburnMatrixJson {
    fn from(m: FishburnMatrix) -> Self {
        FishburnMatrixJson {
            dim: m.dim,
            rows: m.rows(),
        }
    }
}

impl TryFrom<FishburnMatrixJson> for FishburnMatrix {
    type Error = Violation;

    fn try_from(raw: FishburnMatrixJson) -> Result<Self, Violation> {
        if raw.rows.len() != raw.dim {
            return Err(Violation::RowCount {
                found: raw.rows.len(),
                expected: raw.dim,
            });
        }
        FishburnMatrix::from_rows(raw.rows)
    }
}

impl fmt::Display for FishburnMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|row| row.iter().map(u64::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "({})", rows.join(";"))
    }
}
