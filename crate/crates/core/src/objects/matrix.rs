use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Violation;

/// One nonempty entry of a partition matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
    pub set: Vec<usize>,
}

/// An upper-triangular matrix of disjoint sets partitioning `1..=n`.
///
/// Stored as the `(row, col)` position of every element, which is a canonical
/// form: two matrices are equal exactly when every element sits in the same
/// cell. [`PartitionMatrix::cells`] materializes the sparse cell list.
///
/// Every row and column owns a nonempty cell, and `col` is weakly increasing
/// in the element, so each column holds a consecutive run of integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PartitionMatrixJson", into = "PartitionMatrixJson")]
pub struct PartitionMatrix {
    dim: usize,
    rows: Vec<usize>,
    cols: Vec<usize>,
}

/// Canonical JSON form: `{"n":..,"dim":..,"cells":[{"row","col","set"}..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionMatrixJson {
    pub n: usize,
    pub dim: usize,
    pub cells: Vec<Cell>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StepKind {
    Ascent,
    Descent,
}

/// A descent or ascent at `i`: `i` and `i + 1` share a column but not a row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StepEvent {
    pub i: usize,
    pub kind: StepKind,
    /// `i` has the same parity as the smallest element of its column.
    pub proper: bool,
}

impl PartitionMatrix {
    /// Builds a matrix from a sparse cell list, in any order.
    pub fn new(n: usize, dim: usize, cells: Vec<Cell>) -> Result<Self, Violation> {
        if dim == 0 {
            return Err(Violation::ZeroDimension);
        }
        if n == 0 {
            return Err(Violation::ZeroWeight);
        }
        let mut seen_cells = std::collections::BTreeSet::new();
        let mut position: Vec<Option<(usize, usize)>> = vec![None; n];
        for cell in &cells {
            let (row, col) = (cell.row, cell.col);
            if row == 0 || col == 0 || row > dim || col > dim {
                return Err(Violation::OutOfGrid { row, col, dim });
            }
            if row > col {
                return Err(Violation::BelowDiagonal { row, col });
            }
            if !seen_cells.insert((row, col)) {
                return Err(Violation::DuplicateCell { row, col });
            }
            if cell.set.is_empty() {
                return Err(Violation::EmptyCell { row, col });
            }
            if cell.set.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Violation::UnsortedCell { row, col });
            }
            for &element in &cell.set {
                if element == 0 || element > n {
                    return Err(Violation::ElementOutOfRange { element, n });
                }
                if position[element - 1].replace((row, col)).is_some() {
                    return Err(Violation::DuplicateElement { element });
                }
            }
        }
        let mut rows = Vec::with_capacity(n);
        let mut cols = Vec::with_capacity(n);
        for (index, slot) in position.into_iter().enumerate() {
            let (row, col) = slot.ok_or(Violation::MissingElement { element: index + 1 })?;
            rows.push(row);
            cols.push(col);
        }
        let matrix = PartitionMatrix { dim, rows, cols };
        matrix.validate()?;
        Ok(matrix)
    }

    /// Builds a matrix from the `(row, col)` of each element `1..=n` in turn.
    pub fn from_positions(dim: usize, positions: &[(usize, usize)]) -> Result<Self, Violation> {
        let matrix = Self::from_positions_unchecked(dim, positions);
        matrix.validate()?;
        Ok(matrix)
    }

    pub(crate) fn from_positions_unchecked(dim: usize, positions: &[(usize, usize)]) -> Self {
        PartitionMatrix {
            dim,
            rows: positions.iter().map(|p| p.0).collect(),
            cols: positions.iter().map(|p| p.1).collect(),
        }
    }

    pub(crate) fn from_parts_unchecked(dim: usize, rows: Vec<usize>, cols: Vec<usize>) -> Self {
        debug_assert_eq!(rows.len(), cols.len());
        PartitionMatrix { dim, rows, cols }
    }

    /// Re-checks every invariant; `Ok` for anything built through a constructor.
    pub fn validate(&self) -> Result<(), Violation> {
        let (n, dim) = (self.n(), self.dim);
        if dim == 0 {
            return Err(Violation::ZeroDimension);
        }
        if n == 0 {
            return Err(Violation::ZeroWeight);
        }
        let mut row_used = vec![false; dim];
        let mut col_used = vec![false; dim];
        for (&row, &col) in self.rows.iter().zip(&self.cols) {
            if row == 0 || col == 0 || row > dim || col > dim {
                return Err(Violation::OutOfGrid { row, col, dim });
            }
            if row > col {
                return Err(Violation::BelowDiagonal { row, col });
            }
            row_used[row - 1] = true;
            col_used[col - 1] = true;
        }
        if let Some(r) = row_used.iter().position(|used| !used) {
            return Err(Violation::EmptyRow { row: r + 1 });
        }
        if let Some(c) = col_used.iter().position(|used| !used) {
            return Err(Violation::EmptyColumn { col: c + 1 });
        }
        for k in 1..n {
            if self.cols[k] < self.cols[k - 1] {
                return Err(Violation::ColumnOrder {
                    smaller: k,
                    larger: k + 1,
                });
            }
        }
        Ok(())
    }

    /// The weight `n`.
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Row of element `k` (1-based). Panics when `k` is out of range.
    pub fn row(&self, k: usize) -> usize {
        self.rows[k - 1]
    }

    /// Column of element `k` (1-based). Panics when `k` is out of range.
    pub fn col(&self, k: usize) -> usize {
        self.cols[k - 1]
    }

    /// The `(row, col)` of the cell holding `k`.
    pub fn locate(&self, k: usize) -> Result<(usize, usize), Violation> {
        if k == 0 || k > self.n() {
            return Err(Violation::ElementOutOfRange {
                element: k,
                n: self.n(),
            });
        }
        Ok((self.row(k), self.col(k)))
    }

    /// `(row, col)` of elements `1..=n`, in element order.
    pub fn positions(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows.iter().copied().zip(self.cols.iter().copied())
    }

    /// Nonempty cells sorted by `(row, col)`.
    pub fn cells(&self) -> Vec<Cell> {
        let mut grouped: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (k, pos) in self.positions().enumerate() {
            grouped.entry(pos).or_default().push(k + 1);
        }
        grouped
            .into_iter()
            .map(|((row, col), set)| Cell { row, col, set })
            .collect()
    }

    /// Number of elements in each column.
    pub fn column_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.dim];
        for &c in &self.cols {
            sizes[c - 1] += 1;
        }
        sizes
    }

    /// Smallest element of each column.
    pub fn column_minima(&self) -> Vec<usize> {
        let mut minima = vec![0; self.dim];
        for (k, &c) in self.cols.iter().enumerate().rev() {
            minima[c - 1] = k + 1;
        }
        minima
    }

    /// Pairs `(i, j)` with `i > j` in one column and `row(i) < row(j)`,
    /// ordered by `(j, i)`.
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut pairs = Vec::new();
        for j in 1..=n {
            for i in j + 1..=n {
                if self.col(i) != self.col(j) {
                    break;
                }
                if self.row(i) < self.row(j) {
                    pairs.push((i, j));
                }
            }
        }
        pairs
    }

    pub fn inv(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for j in 0..n {
            for i in j + 1..n {
                if self.cols[i] != self.cols[j] {
                    break;
                }
                if self.rows[i] < self.rows[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Every descent and ascent, in increasing `i`.
    pub fn step_events(&self) -> Vec<StepEvent> {
        let minima = self.column_minima();
        (1..self.n())
            .filter_map(|i| self.event_at(i, &minima))
            .collect()
    }

    fn event_at(&self, i: usize, minima: &[usize]) -> Option<StepEvent> {
        let (here, next) = (i - 1, i);
        if self.cols[here] != self.cols[next] || self.rows[here] == self.rows[next] {
            return None;
        }
        let kind = if self.rows[here] > self.rows[next] {
            StepKind::Descent
        } else {
            StepKind::Ascent
        };
        let column_min = minima[self.cols[here] - 1];
        Some(StepEvent {
            i,
            kind,
            proper: i % 2 == column_min % 2,
        })
    }

    /// The smallest proper descent or ascent, if any.
    pub fn first_proper_event(&self) -> Option<StepEvent> {
        let minima = self.column_minima();
        (1..self.n())
            .filter_map(|i| self.event_at(i, &minima))
            .find(|e| e.proper)
    }

    /// No descent or ascent is proper.
    pub fn is_improper(&self) -> bool {
        self.first_proper_event().is_none()
    }

    /// Sum over columns of `ceil(size / 2)`.
    pub fn semi_weight(&self) -> usize {
        self.column_sizes().iter().map(|s| s.div_ceil(2)).sum()
    }

    /// Rows and columns both weakly increase with the element.
    pub fn is_nondecreasing(&self) -> bool {
        (1..self.n()).all(|k| self.rows[k - 1] <= self.rows[k] && self.cols[k - 1] <= self.cols[k])
    }

    /// Number of irreducible diagonal blocks.
    ///
    /// A cut after index `k < dim` exists when no nonempty cell has
    /// `row <= k < col`.
    pub fn block_count(&self) -> usize {
        let mut crossed = vec![false; self.dim];
        for (row, col) in self.positions() {
            for slot in &mut crossed[row - 1..col - 1] {
                *slot = true;
            }
        }
        1 + crossed[..self.dim - 1].iter().filter(|c| !**c).count()
    }

    /// Number of nonempty cells of odd cardinality.
    pub fn odd_count(&self) -> usize {
        self.cells().iter().filter(|c| c.set.len() % 2 == 1).count()
    }
}

impl From<PartitionMatrix> for PartitionMatrixJson {
    fn from(m: PartitionMatrix) -> Self {
        PartitionMatrixJson {
            n: m.n(),
            dim: m.dim,
            cells: m.cells(),
        }
    }
}

impl TryFrom<PartitionMatrixJson> for PartitionMatrix {
    type Error = Violation;

    fn try_from(raw: PartitionMatrixJson) -> Result<Self, Violation> {
        PartitionMatrix::new(raw.n, raw.dim, raw.cells)
    }
}

/// Row-wise notation `({1},∅,{4,5};{2,3},{6};{8};{7})`: rows separated by `;`,
/// row `r` listing columns `r..=dim`.
impl fmt::Display for PartitionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut grid = vec![vec![Vec::new(); self.dim]; self.dim];
        for (k, (row, col)) in self.positions().enumerate() {
            grid[row - 1][col - 1].push(k + 1);
        }
        f.write_str("(")?;
        for (r, row) in grid.iter().enumerate() {
            if r > 0 {
                f.write_str(";")?;
            }
            for (c, set) in row.iter().enumerate().skip(r) {
                if c > r {
                    f.write_str(",")?;
                }
                if set.is_empty() {
                    f.write_str("∅")?;
                } else {
                    let items: Vec<String> = set.iter().map(usize::to_string).collect();
                    write!(f, "{{{}}}", items.join(","))?;
                }
            }
        }
        f.write_str(")")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseMatrixError {
    #[error("malformed matrix text: {0}")]
    Syntax(String),
    #[error(transparent)]
    Invalid(#[from] Violation),
}

impl FromStr for PartitionMatrix {
    type Err = ParseMatrixError;

    /// Parses the [`Display`](fmt::Display) notation. The dimension is the
    /// number of rows; row `r` lists either `dim - r + 1` entries or all
    /// `dim` of them with `∅` below the diagonal.
    fn from_str(text: &str) -> Result<Self, ParseMatrixError> {
        let body = text.trim();
        let body = body
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .unwrap_or(body);
        let rows: Vec<&str> = body.split(';').collect();
        let dim = rows.len();
        let mut cells = Vec::new();
        let mut n = 0;
        for (r, row_text) in rows.iter().enumerate() {
            let mut entries = split_entries(row_text)?;
            if entries.len() == dim && r > 0 {
                // full square row: the part below the diagonal must be empty
                let below: Vec<&str> = entries.drain(..r).collect();
                if let Some(bad) = below.iter().find(|e| !matches!(e.trim(), "∅" | "{}")) {
                    return Err(ParseMatrixError::Syntax(format!(
                        "row {} has {bad:?} below the diagonal",
                        r + 1
                    )));
                }
            }
            if entries.len() != dim - r {
                return Err(ParseMatrixError::Syntax(format!(
                    "row {} has {} entries, expected {}",
                    r + 1,
                    entries.len(),
                    dim - r
                )));
            }
            for (offset, entry) in entries.iter().enumerate() {
                let entry = entry.trim();
                if entry == "∅" || entry == "{}" {
                    continue;
                }
                let inner = entry
                    .strip_prefix('{')
                    .and_then(|e| e.strip_suffix('}'))
                    .ok_or_else(|| ParseMatrixError::Syntax(format!("bad entry {entry:?}")))?;
                let set = inner
                    .split(',')
                    .map(|s| s.trim().parse::<usize>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| ParseMatrixError::Syntax(e.to_string()))?;
                n += set.len();
                cells.push(Cell {
                    row: r + 1,
                    col: r + 1 + offset,
                    set,
                });
            }
        }
        Ok(PartitionMatrix::new(n, dim, cells)?)
    }
}

fn split_entries(row: &str) -> Result<Vec<&str>, ParseMatrixError> {
    let mut entries = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, ch) in row.char_indices() {
        match ch {
            '{' => depth += 1,
            '}' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| ParseMatrixError::Syntax("unbalanced braces".into()))?
            }
            ',' if depth == 0 => {
                entries.push(&row[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(ParseMatrixError::Syntax("unbalanced braces".into()));
    }
    entries.push(&row[start..]);
    Ok(entries)
}
