use std::fmt;

use serde::{Deserialize, Serialize};

use super::Violation;

/// Motzkin step letters, declared in enumeration order `U < L < D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MotzkinStep {
    Up,
    Level,
    Down,
}

impl MotzkinStep {
    pub fn letter(self) -> char {
        match self {
            MotzkinStep::Up => 'U',
            MotzkinStep::Level => 'L',
            MotzkinStep::Down => 'D',
        }
    }

    fn from_letter(letter: char) -> Option<Self> {
        match letter {
            'U' => Some(MotzkinStep::Up),
            'L' => Some(MotzkinStep::Level),
            'D' => Some(MotzkinStep::Down),
            _ => None,
        }
    }
}

/// A nonempty word over `U`, `L`, `D` whose height never goes negative and
/// returns to zero at the end.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "WordJson", into = "WordJson")]
pub struct MotzkinWord {
    steps: Vec<MotzkinStep>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordJson {
    pub word: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MotzkinStats {
    pub len: usize,
    /// Steps ending on the axis, level steps on the axis included.
    pub comp: usize,
    pub level: usize,
    pub up: usize,
    pub down: usize,
}

impl MotzkinWord {
    pub fn new(steps: Vec<MotzkinStep>) -> Result<Self, Violation> {
        let word = MotzkinWord { steps };
        word.validate()?;
        Ok(word)
    }

    pub(crate) fn new_unchecked(steps: Vec<MotzkinStep>) -> Self {
        MotzkinWord { steps }
    }

    pub fn parse(text: &str) -> Result<Self, Violation> {
        let steps = text
            .chars()
            .enumerate()
            .map(|(i, ch)| {
                MotzkinStep::from_letter(ch).ok_or(Violation::BadLetter {
                    position: i + 1,
                    letter: ch,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(steps)
    }

    pub fn validate(&self) -> Result<(), Violation> {
        if self.steps.is_empty() {
            return Err(Violation::EmptyWord);
        }
        let mut height = 0usize;
        for (i, step) in self.steps.iter().enumerate() {
            match step {
                MotzkinStep::Up => height += 1,
                MotzkinStep::Level => {}
                MotzkinStep::Down => {
                    height = height
                        .checked_sub(1)
                        .ok_or(Violation::BelowFloor { position: i + 1 })?
                }
            }
        }
        if height != 0 {
            return Err(Violation::UnbalancedEnd { height });
        }
        Ok(())
    }

    pub fn steps(&self) -> &[MotzkinStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Height after each step.
    pub fn heights(&self) -> Vec<usize> {
        let mut height = 0usize;
        self.steps
            .iter()
            .map(|s| {
                match s {
                    MotzkinStep::Up => height += 1,
                    MotzkinStep::Level => {}
                    MotzkinStep::Down => height -= 1,
                }
                height
            })
            .collect()
    }

    pub fn stats(&self) -> MotzkinStats {
        let count = |kind| self.steps.iter().filter(|s| **s == kind).count();
        MotzkinStats {
            len: self.steps.len(),
            comp: self.heights().iter().filter(|h| **h == 0).count(),
            level: count(MotzkinStep::Level),
            up: count(MotzkinStep::Up),
            down: count(MotzkinStep::Down),
        }
    }

    /// Splits at every return to the axis: each factor is `L` or `U..D`.
    pub fn factors(&self) -> Vec<MotzkinWord> {
        let mut factors = Vec::new();
        let mut start = 0;
        for (i, h) in self.heights().into_iter().enumerate() {
            if h == 0 {
                factors.push(MotzkinWord::new_unchecked(self.steps[start..=i].to_vec()));
                start = i + 1;
            }
        }
        factors
    }
}

impl fmt::Display for MotzkinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.steps
            .iter()
            .try_for_each(|s| write!(f, "{}", s.letter()))
    }
}

impl From<MotzkinWord> for WordJson {
    fn from(w: MotzkinWord) -> Self {
        WordJson {
            word: w.to_string(),
        }
    }
}

impl TryFrom<WordJson> for MotzkinWord {
    type Error = Violation;

    fn try_from(raw: WordJson) -> Result<Self, Violation> {
        MotzkinWord::parse(&raw.word)
    }
}

/// Steps of the south/east lattice: south adds 1 to `x` (the row), east adds
/// 1 to `y` (the column), southeast adds 1 to both. Declared order `E < X < S`
/// mirrors `U < L < D` under the Motzkin correspondence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GridStep {
    East,
    SouthEast,
    South,
}

impl GridStep {
    pub fn letter(self) -> char {
        match self {
            GridStep::South => 'S',
            GridStep::East => 'E',
            GridStep::SouthEast => 'X',
        }
    }

    fn from_letter(letter: char) -> Option<Self> {
        match letter {
            'S' => Some(GridStep::South),
            'E' => Some(GridStep::East),
            'X' => Some(GridStep::SouthEast),
            _ => None,
        }
    }

    pub fn apply(self, (x, y): (usize, usize)) -> (usize, usize) {
        match self {
            GridStep::South => (x + 1, y),
            GridStep::East => (x, y + 1),
            GridStep::SouthEast => (x + 1, y + 1),
        }
    }

    /// The step joining two consecutive nodes, if they are adjacent.
    pub fn between(from: (usize, usize), to: (usize, usize)) -> Option<Self> {
        match (to.0.checked_sub(from.0)?, to.1.checked_sub(from.1)?) {
            (1, 0) => Some(GridStep::South),
            (0, 1) => Some(GridStep::East),
            (1, 1) => Some(GridStep::SouthEast),
            _ => None,
        }
    }
}

/// A lattice path from `(1,1)` to `(dim,dim)` inside `y >= x >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "GridPathJson", into = "GridPathJson")]
pub struct GridPath {
    dim: usize,
    steps: Vec<GridStep>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridPathJson {
    pub dim: usize,
    pub steps: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridPathStats {
    pub south: usize,
    pub east: usize,
    pub south_east: usize,
    /// South steps ending on the diagonal.
    pub diag_south: usize,
    /// Southeast steps ending on the diagonal.
    pub diag_south_east: usize,
}

impl GridPath {
    pub fn new(dim: usize, steps: Vec<GridStep>) -> Result<Self, Violation> {
        let path = GridPath { dim, steps };
        path.validate()?;
        Ok(path)
    }

    pub(crate) fn new_unchecked(dim: usize, steps: Vec<GridStep>) -> Self {
        GridPath { dim, steps }
    }

    pub fn parse(dim: usize, text: &str) -> Result<Self, Violation> {
        let steps = text
            .chars()
            .enumerate()
            .map(|(i, ch)| {
                GridStep::from_letter(ch).ok_or(Violation::BadLetter {
                    position: i + 1,
                    letter: ch,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(dim, steps)
    }

    /// Rebuilds a path from its node list; `None` unless consecutive nodes
    /// are adjacent and the result is a valid path.
    pub fn from_nodes(nodes: &[(usize, usize)]) -> Option<Self> {
        let (&first, &last) = (nodes.first()?, nodes.last()?);
        if first != (1, 1) || last.0 != last.1 {
            return None;
        }
        let steps = nodes
            .windows(2)
            .map(|w| GridStep::between(w[0], w[1]))
            .collect::<Option<Vec<_>>>()?;
        GridPath::new(last.0, steps).ok()
    }

    pub fn validate(&self) -> Result<(), Violation> {
        if self.dim == 0 {
            return Err(Violation::ZeroDimension);
        }
        let mut node = (1, 1);
        for (i, step) in self.steps.iter().enumerate() {
            node = step.apply(node);
            if node.1 < node.0 || node.1 > self.dim {
                return Err(Violation::OffRegion { position: i + 1 });
            }
        }
        if node != (self.dim, self.dim) {
            return Err(Violation::WrongEndpoint {
                x: node.0,
                y: node.1,
                dim: self.dim,
            });
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn steps(&self) -> &[GridStep] {
        &self.steps
    }

    /// Visited nodes `(x, y)` = `(row, col)`, starting at `(1,1)`.
    pub fn nodes(&self) -> Vec<(usize, usize)> {
        let mut node = (1, 1);
        let mut nodes = vec![node];
        for step in &self.steps {
            node = step.apply(node);
            nodes.push(node);
        }
        nodes
    }

    pub fn stats(&self) -> GridPathStats {
        let mut stats = GridPathStats::default();
        let mut node = (1, 1);
        for step in &self.steps {
            node = step.apply(node);
            let on_diagonal = node.0 == node.1;
            match step {
                GridStep::South => {
                    stats.south += 1;
                    stats.diag_south += usize::from(on_diagonal);
                }
                GridStep::East => stats.east += 1,
                GridStep::SouthEast => {
                    stats.south_east += 1;
                    stats.diag_south_east += usize::from(on_diagonal);
                }
            }
        }
        stats
    }

    /// The Motzkin word read off the steps (`E -> U`, `X -> L`, `S -> D`),
    /// or `None` for the single-node path.
    pub fn to_motzkin(&self) -> Option<MotzkinWord> {
        if self.steps.is_empty() {
            return None;
        }
        Some(MotzkinWord::new_unchecked(
            self.steps
                .iter()
                .map(|s| match s {
                    GridStep::East => MotzkinStep::Up,
                    GridStep::SouthEast => MotzkinStep::Level,
                    GridStep::South => MotzkinStep::Down,
                })
                .collect(),
        ))
    }

    /// Inverse of [`GridPath::to_motzkin`].
    pub fn from_motzkin(word: &MotzkinWord) -> GridPath {
        let steps: Vec<GridStep> = word
            .steps()
            .iter()
            .map(|s| match s {
                MotzkinStep::Up => GridStep::East,
                MotzkinStep::Level => GridStep::SouthEast,
                MotzkinStep::Down => GridStep::South,
            })
            .collect();
        let dim = 1 + steps.iter().filter(|s| **s != GridStep::East).count();
        GridPath { dim, steps }
    }
}

impl fmt::Display for GridPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.steps
            .iter()
            .try_for_each(|s| write!(f, "{}", s.letter()))
    }
}

impl From<GridPath> for GridPathJson {
    fn from(p: GridPath) -> Self {
        GridPathJson {
            dim: p.dim,
            steps: p.to_string(),
        }
    }
}

impl TryFrom<GridPathJson> for GridPath {
    type Error = Violation;

    fn try_from(raw: GridPathJson) -> Result<Self, Violation> {
        GridPath::parse(raw.dim, &raw.steps)
    }
}

/// A grid path with a positive weight on every node.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "WeightedGridPathJson", into = "WeightedGridPathJson")]
pub struct WeightedGridPath {
    path: GridPath,
    weights: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedGridPathJson {
    pub dim: usize,
    pub steps: String,
    pub weights: Vec<u64>,
}

impl WeightedGridPath {
    pub fn new(path: GridPath, weights: Vec<u64>) -> Result<Self, Violation> {
        let weighted = WeightedGridPath { path, weights };
        weighted.validate()?;
        Ok(weighted)
    }

    /// As [`WeightedGridPath::new`], additionally requiring an even weight at
    /// the start of every south step.
    pub fn new_improper(path: GridPath, weights: Vec<u64>) -> Result<Self, Violation> {
        let weighted = Self::new(path, weights)?;
        weighted.validate_improper()?;
        Ok(weighted)
    }

    pub(crate) fn new_unchecked(path: GridPath, weights: Vec<u64>) -> Self {
        WeightedGridPath { path, weights }
    }

    pub fn validate(&self) -> Result<(), Violation> {
        self.path.validate()?;
        let expected = self.path.steps().len() + 1;
        if self.weights.len() != expected {
            return Err(Violation::WeightCount {
                found: self.weights.len(),
                expected,
            });
        }
        if let Some(index) = self.weights.iter().position(|w| *w == 0) {
            return Err(Violation::ZeroNodeWeight { index: index + 1 });
        }
        Ok(())
    }

    pub fn validate_improper(&self) -> Result<(), Violation> {
        for (index, step) in self.path.steps().iter().enumerate() {
            let weight = self.weights[index];
            if *step == GridStep::South && weight % 2 == 1 {
                return Err(Violation::OddSouthStart {
                    index: index + 1,
                    weight,
                });
            }
        }
        Ok(())
    }

    pub fn path(&self) -> &GridPath {
        &self.path
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn total_weight(&self) -> u64 {
        self.weights.iter().sum()
    }

    /// Number of nodes carrying an odd weight.
    pub fn odd_nodes(&self) -> usize {
        self.weights.iter().filter(|w| *w % 2 == 1).count()
    }
}

impl fmt::Display for WeightedGridPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let weights: Vec<String> = self.weights.iter().map(u64::to_string).collect();
        write!(f, "{}[{}]", self.path, weights.join(","))
    }
}

impl From<WeightedGridPath> for WeightedGridPathJson {
    fn from(w: WeightedGridPath) -> Self {
        WeightedGridPathJson {
            dim: w.path.dim,
            steps: w.path.to_string(),
            weights: w.weights,
        }
    }
}

impl TryFrom<WeightedGridPathJson> for WeightedGridPath {
    type Error = Violation;

    fn try_from(raw: WeightedGridPathJson) -> Result<Self, Violation> {
        WeightedGridPath::new(GridPath::parse(raw.dim, &raw.steps)?, raw.weights)
    }
}

/// Dyck step letters: `A` (across, `x + 1`) before `D` (down, `y + 1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DyckStep {
    Across,
    Down,
}

/// A staircase walk from `(0,0)` to `(n,n)` that never crosses the diagonal:
/// every prefix has at least as many `A` as `D`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "WordJson", into = "WordJson")]
pub struct DyckWord {
    steps: Vec<DyckStep>,
}

impl DyckWord {
    pub fn new(steps: Vec<DyckStep>) -> Result<Self, Violation> {
        let word = DyckWord { steps };
        word.validate()?;
        Ok(word)
    }

    pub(crate) fn new_unchecked(steps: Vec<DyckStep>) -> Self {
        DyckWord { steps }
    }

    pub fn parse(text: &str) -> Result<Self, Violation> {
        let steps = text
            .chars()
            .enumerate()
            .map(|(i, ch)| match ch {
                'A' => Ok(DyckStep::Across),
                'D' => Ok(DyckStep::Down),
                _ => Err(Violation::BadLetter {
                    position: i + 1,
                    letter: ch,
                }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(steps)
    }

    pub fn validate(&self) -> Result<(), Violation> {
        if self.steps.is_empty() {
            return Err(Violation::EmptyWord);
        }
        let mut height = 0usize;
        for (i, step) in self.steps.iter().enumerate() {
            match step {
                DyckStep::Across => height += 1,
                DyckStep::Down => {
                    height = height
                        .checked_sub(1)
                        .ok_or(Violation::BelowFloor { position: i + 1 })?
                }
            }
        }
        if height != 0 {
            return Err(Violation::UnbalancedEnd { height });
        }
        Ok(())
    }

    pub fn semilen(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn steps(&self) -> &[DyckStep] {
        &self.steps
    }

    /// Returns to the diagonal, the origin excluded.
    pub fn touch(&self) -> usize {
        let mut height = 0i64;
        let mut touches = 0;
        for step in &self.steps {
            height += match step {
                DyckStep::Across => 1,
                DyckStep::Down => -1,
            };
            touches += usize::from(height == 0);
        }
        touches
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.steps.iter().try_for_each(|s| {
            f.write_str(match s {
                DyckStep::Across => "A",
                DyckStep::Down => "D",
            })
        })
    }
}

impl From<DyckWord> for WordJson {
    fn from(w: DyckWord) -> Self {
        WordJson {
            word: w.to_string(),
        }
    }
}

impl TryFrom<WordJson> for DyckWord {
    type Error = Violation;

    fn try_from(raw: WordJson) -> Result<Self, Violation> {
        DyckWord::parse(&raw.word)
    }
}
