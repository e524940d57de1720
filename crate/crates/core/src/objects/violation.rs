use thiserror::Error;

/// The first invariant a candidate object breaks, with its location.
///
/// Violations are ordinary data: every constructor in [`crate::objects`]
/// returns one instead of panicking, and `validate` re-derives them.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("weight must be at least 1")]
    ZeroWeight,
    #[error("cell ({row},{col}) is outside the {dim}x{dim} grid")]
    OutOfGrid { row: usize, col: usize, dim: usize },
    #[error("upper-triangular: cell ({row},{col}) lies below the diagonal")]
    BelowDiagonal { row: usize, col: usize },
    #[error("cell ({row},{col}) is listed twice")]
    DuplicateCell { row: usize, col: usize },
    #[error("cell ({row},{col}) is empty")]
    EmptyCell { row: usize, col: usize },
    #[error("cell ({row},{col}) is not strictly increasing")]
    UnsortedCell { row: usize, col: usize },
    #[error("element {element} is outside 1..={n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("element {element} appears in more than one cell")]
    DuplicateElement { element: usize },
    #[error("element {element} is missing")]
    MissingElement { element: usize },
    #[error("row {row} has no nonempty entry")]
    EmptyRow { row: usize },
    #[error("column {col} has no nonempty entry")]
    EmptyColumn { col: usize },
    #[error("column-monotone: col({larger}) < col({smaller}) although {smaller} < {larger}")]
    ColumnOrder { smaller: usize, larger: usize },
    #[error("row {row} has {found} entries, expected {expected}")]
    RowLength {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("expected {expected} rows, found {found}")]
    RowCount { found: usize, expected: usize },
    #[error("entry at position {position} is {value}, must be below {position}")]
    SequenceEntry { position: usize, value: usize },
    #[error("word must not be empty")]
    EmptyWord,
    #[error("unknown letter {letter:?} at position {position}")]
    BadLetter { position: usize, letter: char },
    #[error("path drops below its floor at step {position}")]
    BelowFloor { position: usize },
    #[error("path ends at height {height}, not on the axis")]
    UnbalancedEnd { height: usize },
    #[error("grid path leaves the region y >= x >= 1 at step {position}")]
    OffRegion { position: usize },
    #[error("grid path ends at ({x},{y}), expected ({dim},{dim})")]
    WrongEndpoint { x: usize, y: usize, dim: usize },
    #[error("{found} weights for {expected} nodes")]
    WeightCount { found: usize, expected: usize },
    #[error("weight of node {index} must be positive")]
    ZeroNodeWeight { index: usize },
    #[error("node {index} starts a south step but has odd weight {weight}")]
    OddSouthStart { index: usize, weight: u64 },
    #[error("column {col} of the reduced matrix does not partition 1..={size}")]
    ReducedColumn { col: usize, size: usize },
}
