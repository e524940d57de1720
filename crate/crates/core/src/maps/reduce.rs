use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::objects::{Cell, PartitionMatrix, Violation};

/// A partition matrix with each column renumbered from 1.
///
/// Column `d` is stored as the row of each of its local elements
/// `1..=n_d`, in order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ReducedMatrixJson", into = "ReducedMatrixJson")]
pub struct ReducedMatrix {
    columns: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedMatrixJson {
    pub dim: usize,
    pub cells: Vec<Cell>,
}

impl ReducedMatrix {
    /// Builds a reduced matrix from cells whose sets, column by column,
    /// partition `1..=n_d`.
    pub fn new(dim: usize, cells: Vec<Cell>) -> Result<Self, Violation> {
        if dim == 0 {
            return Err(Violation::ZeroDimension);
        }
        let mut columns: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); dim];
        for cell in &cells {
            let (row, col) = (cell.row, cell.col);
            if row == 0 || col == 0 || row > dim || col > dim {
                return Err(Violation::OutOfGrid { row, col, dim });
            }
            if row > col {
                return Err(Violation::BelowDiagonal { row, col });
            }
            if cell.set.is_empty() {
                return Err(Violation::EmptyCell { row, col });
            }
            if cell.set.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Violation::UnsortedCell { row, col });
            }
            for &local in &cell.set {
                if columns[col - 1].insert(local, row).is_some() {
                    return Err(Violation::DuplicateElement { element: local });
                }
            }
        }
        let mut out = Vec::with_capacity(dim);
        for (d, column) in columns.into_iter().enumerate() {
            let size = column.len();
            if column.keys().copied().ne(1..=size) {
                return Err(Violation::ReducedColumn { col: d + 1, size });
            }
            out.push(column.into_values().collect());
        }
        let reduced = ReducedMatrix { columns: out };
        unreduce(&reduced).validate()?;
        Ok(reduced)
    }

    pub(crate) fn from_columns_unchecked(columns: Vec<Vec<usize>>) -> Self {
        ReducedMatrix { columns }
    }

    pub fn dim(&self) -> usize {
        self.columns.len()
    }

    /// Rows of the local elements of column `col` (1-based).
    pub fn column(&self, col: usize) -> &[usize] {
        &self.columns[col - 1]
    }

    pub fn cells(&self) -> Vec<Cell> {
        let mut grouped: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (d, column) in self.columns.iter().enumerate() {
            for (k, &row) in column.iter().enumerate() {
                grouped.entry((row, d + 1)).or_default().push(k + 1);
            }
        }
        grouped
            .into_iter()
            .map(|((row, col), set)| Cell { row, col, set })
            .collect()
    }
}

pub fn reduce(p: &PartitionMatrix) -> ReducedMatrix {
    let mut columns = vec![Vec::new(); p.dim()];
    for (row, col) in p.positions() {
        columns[col - 1].push(row);
    }
    ReducedMatrix { columns }
}

pub fn unreduce(r: &ReducedMatrix) -> PartitionMatrix {
    let mut rows = Vec::new();
    let mut cols = Vec::new();
    for (d, column) in r.columns.iter().enumerate() {
        rows.extend_from_slice(column);
        cols.extend(std::iter::repeat_n(d + 1, column.len()));
    }
    PartitionMatrix::from_parts_unchecked(r.dim(), rows, cols)
}

impl From<ReducedMatrix> for ReducedMatrixJson {
    fn from(r: ReducedMatrix) -> Self {
        ReducedMatrixJson {
            dim: r.dim(),
            cells: r.cells(),
        }
    }
}

impl TryFrom<ReducedMatrixJson> for ReducedMatrix {
    type Error = Violation;

    fn try_from(raw: ReducedMatrixJson) -> Result<Self, Violation> {
        ReducedMatrix::new(raw.dim, raw.cells)
    }
}

impl fmt::Display for ReducedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // same layout as a partition matrix, local numbers in place
        let cells: BTreeMap<(usize, usize), Vec<usize>> = self
            .cells()
            .into_iter()
            .map(|c| ((c.row, c.col), c.set))
            .collect();
        let dim = self.dim();
        let rows: Vec<String> = (1..=dim)
            .map(|r| {
                (r..=dim)
                    .map(|c| match cells.get(&(r, c)) {
                        Some(set) => {
                            let items: Vec<String> = set.iter().map(usize::to_string).collect();
                            format!("{{{}}}", items.join(","))
                        }
                        None => "∅".to_string(),
                    })
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "({})", rows.join(";"))
    }
}
