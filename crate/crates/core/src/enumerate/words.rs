//! Inversion sequences, Motzkin and Dyck words, grid paths and node-weight
//! vectors.

use super::dfs::{Dfs, SearchTree};
use super::EnumError;
use crate::objects::{
    DyckStep, DyckWord, GridPath, GridStep, InversionSequence, MotzkinStep, MotzkinWord,
};

pub(crate) fn check_positive(n: usize) -> Result<(), EnumError> {
    if n == 0 {
        Err(EnumError::ZeroParameter)
    } else {
        Ok(())
    }
}

struct InversionTree(usize);

impl SearchTree for InversionTree {
    fn next_choice(&self, prefix: &[u32], from: u32) -> Option<u32> {
        (from as usize <= prefix.len()).then_some(from)
    }

    fn is_complete(&self, prefix: &[u32]) -> bool {
        prefix.len() == self.0
    }
}

/// All `n!` inversion sequences of length `n`, lexicographically.
pub struct InversionSequences(Dfs<InversionTree>);

impl Iterator for InversionSequences {
    type Item = InversionSequence;

    fn next(&mut self) -> Option<InversionSequence> {
        let leaf = self.0.advance()?;
        Some(InversionSequence::new_unchecked(
            leaf.iter().map(|&v| v as usize).collect(),
        ))
    }
}

pub fn inversion_sequences(n: usize) -> Result<InversionSequences, EnumError> {
    check_positive(n)?;
    Ok(InversionSequences(Dfs::new(InversionTree(n))))
}

/// Inversion sequences avoiding `e_i = e_k` for `i < j < k`, in the order
/// inherited from [`inversion_sequences`].
pub fn pattern_class(n: usize) -> Result<impl Iterator<Item = InversionSequence>, EnumError> {
    Ok(inversion_sequences(n)?.filter(InversionSequence::in_pattern_class))
}

struct MotzkinTree(usize);

impl SearchTree for MotzkinTree {
    fn next_choice(&self, prefix: &[u32], from: u32) -> Option<u32> {
        let height = prefix.iter().fold(0i64, |h, &c| h + step_delta(c));
        let left_after = (self.0 - prefix.len() - 1) as i64;
        (from..3).find(|&c| {
            let next = height + step_delta(c);
            next >= 0 && next <= left_after
        })
    }

    fn is_complete(&self, prefix: &[u32]) -> bool {
        prefix.len() == self.0
    }
}

/// Choice code to height change, in the order `U, L, D`.
fn step_delta(code: u32) -> i64 {
    match code {
        0 => 1,
        1 => 0,
        _ => -1,
    }
}

const MOTZKIN_CODES: [MotzkinStep; 3] = [MotzkinStep::Up, MotzkinStep::Level, MotzkinStep::Down];

/// Motzkin words of length `n`, lexicographic for `U < L < D`.
pub struct MotzkinWords(Dfs<MotzkinTree>);

impl Iterator for MotzkinWords {
    type Item = MotzkinWord;

    fn next(&mut self) -> Option<MotzkinWord> {
        let leaf = self.0.advance()?;
        Some(MotzkinWord::new_unchecked(
            leaf.iter().map(|&c| MOTZKIN_CODES[c as usize]).collect(),
        ))
    }
}

pub fn motzkin_words(n: usize) -> Result<MotzkinWords, EnumError> {
    check_positive(n)?;
    Ok(MotzkinWords(Dfs::new(MotzkinTree(n))))
}

struct DyckTree(usize);

impl SearchTree for DyckTree {
    fn next_choice(&self, prefix: &[u32], from: u32) -> Option<u32> {
        let height = prefix
            .iter()
            .fold(0i64, |h, &c| h + if c == 0 { 1 } else { -1 });
        let left_after = (2 * self.0 - prefix.len() - 1) as i64;
        (from..2).find(|&c| {
            let next = height + if c == 0 { 1 } else { -1 };
            next >= 0 && next <= left_after
        })
    }

    fn is_complete(&self, prefix: &[u32]) -> bool {
        prefix.len() == 2 * self.0
    }
}

/// Dyck words of semilength `n`, lexicographic for `A < D`.
pub struct DyckWords(Dfs<DyckTree>);

impl Iterator for DyckWords {
    type Item = DyckWord;

    fn next(&mut self) -> Option<DyckWord> {
        let leaf = self.0.advance()?;
        Some(DyckWord::new_unchecked(
            leaf.iter()
                .map(|&c| {
                    if c == 0 {
                        DyckStep::Across
                    } else {
                        DyckStep::Down
                    }
                })
                .collect(),
        ))
    }
}

pub fn dyck_words(n: usize) -> Result<DyckWords, EnumError> {
    check_positive(n)?;
    Ok(DyckWords(Dfs::new(DyckTree(n))))
}

struct GridTree {
    dim: usize,
    /// Total weight the nodes must be able to carry: one per node, two per
    /// node starting a south step when the flag is set.
    budget: Option<(usize, bool)>,
}

const GRID_CODES: [GridStep; 3] = [GridStep::East, GridStep::SouthEast, GridStep::South];

impl GridTree {
    fn node(prefix: &[u32]) -> (usize, usize) {
        prefix
            .iter()
            .fold((1, 1), |node, &c| GRID_CODES[c as usize].apply(node))
    }
}

impl SearchTree for GridTree {
    fn next_choice(&self, prefix: &[u32], from: u32) -> Option<u32> {
        let node = Self::node(prefix);
        (from..3).find(|&c| {
            let (x, y) = GRID_CODES[c as usize].apply(node);
            if y < x || y > self.dim {
                return false;
            }
            let Some((total, improper)) = self.budget else {
                return true;
            };
            let souths = prefix
                .iter()
                .chain([&c])
                .filter(|&&s| GRID_CODES[s as usize] == GridStep::South)
                .count();
            // nodes so far, doubled south starts, and at least dim - x nodes to go
            let least = prefix.len() + 2 + if improper { souths } else { 0 } + (self.dim - x);
            least <= total
        })
    }

    fn is_complete(&self, prefix: &[u32]) -> bool {
        Self::node(prefix) == (self.dim, self.dim)
    }
}

/// Paths from `(1,1)` to `(dim,dim)` in `y >= x`, lexicographic for
/// `E < X < S`.
pub struct GridPaths(Dfs<GridTree>);

impl Iterator for GridPaths {
    type Item = GridPath;

    fn next(&mut self) -> Option<GridPath> {
        let dim = self.0.tree().dim;
        let leaf = self.0.advance()?;
        Some(GridPath::new_unchecked(
            dim,
            leaf.iter().map(|&c| GRID_CODES[c as usize]).collect(),
        ))
    }
}

pub fn grid_paths(dim: usize) -> Result<GridPaths, EnumError> {
    check_positive(dim)?;
    Ok(GridPaths(Dfs::new(GridTree { dim, budget: None })))
}

/// The paths of [`grid_paths`] that can carry a weight vector summing to
/// `total`, positive and, with `improper`, even on nodes starting a south
/// step.
pub(crate) fn grid_paths_within(dim: usize, total: usize, improper: bool) -> GridPaths {
    GridPaths(Dfs::new(GridTree {
        dim,
        budget: Some((total, improper)),
    }))
}

/// Positive weight vectors with a fixed total; flagged slots must be even.
struct WeightTree {
    total: u32,
    even: Vec<bool>,
    /// `min_rest[i]` = least possible sum of slots `i..`.
    min_rest: Vec<u32>,
}

impl WeightTree {
    fn new(total: u32, even: Vec<bool>) -> Self {
        let mut min_rest = vec![0; even.len() + 1];
        for i in (0..even.len()).rev() {
            min_rest[i] = min_rest[i + 1] + if even[i] { 2 } else { 1 };
        }
        WeightTree {
            total,
            even,
            min_rest,
        }
    }
}

impl SearchTree for WeightTree {
    fn next_choice(&self, prefix: &[u32], from: u32) -> Option<u32> {
        let i = prefix.len();
        let used: u32 = prefix.iter().sum();
        let left = self.total.checked_sub(used)?;
        let max = left.checked_sub(self.min_rest[i + 1])?;
        let step = if self.even[i] { 2 } else { 1 };
        let mut v = from.max(step);
        if self.even[i] && v % 2 == 1 {
            v += 1;
        }
        if i + 1 == self.even.len() {
            // the last slot takes exactly what is left
            return (v <= left && (!self.even[i] || left % 2 == 0)).then_some(left);
        }
        (v <= max).then_some(v)
    }

    fn is_complete(&self, prefix: &[u32]) -> bool {
        prefix.len() == self.even.len()
    }
}

/// Weight vectors summing to `total`, lexicographic.
pub(crate) struct WeightVectors(Dfs<WeightTree>);

impl Iterator for WeightVectors {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let leaf = self.0.advance()?;
        Some(leaf.iter().map(|&v| u64::from(v)).collect())
    }
}

pub(crate) fn weight_vectors(total: usize, even: Vec<bool>) -> WeightVectors {
    WeightVectors(Dfs::new(WeightTree::new(total as u32, even)))
}

/// Compositions of `n` in lexicographic order, `(1,..,1)` first.
pub struct Compositions {
    current: Option<Vec<usize>>,
}

impl Iterator for Compositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let mut next = out.clone();
        if next.len() >= 2 {
            let last = next.pop().unwrap();
            *next.last_mut().unwrap() += 1;
            next.extend(std::iter::repeat_n(1, last - 1));
            self.current = Some(next);
        }
        Some(out)
    }
}

pub fn compositions(n: usize) -> Result<Compositions, EnumError> {
    check_positive(n)?;
    Ok(Compositions {
        current: Some(vec![1; n]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inversion_sequence_bounds() {
        let all: Vec<_> = inversion_sequences(3).unwrap().collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0].entries(), &[0, 0, 0]);
        assert_eq!(all[5].entries(), &[0, 1, 2]);
        assert_eq!(inversion_sequences(1).unwrap().count(), 1);
        assert_eq!(inversion_sequences(8).unwrap().count(), 40320);
        assert!(inversion_sequences(0).is_err());
    }

    #[test]
    fn pattern_class_small() {
        let listed: Vec<String> = pattern_class(3).unwrap().map(|e| e.to_string()).collect();
        assert_eq!(listed, vec!["(0,0,1)", "(0,0,2)", "(0,1,1)", "(0,1,2)"]);
        let counts: Vec<usize> = (1..=8).map(|n| pattern_class(n).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 2, 4, 10, 28, 88, 304, 1144]);
    }

    #[test]
    fn motzkin_small() {
        let words: Vec<String> = motzkin_words(3).unwrap().map(|w| w.to_string()).collect();
        assert_eq!(words, vec!["ULD", "UDL", "LUD", "LLL"]);
        let counts: Vec<usize> = (1..=8).map(|n| motzkin_words(n).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 2, 4, 9, 21, 51, 127, 323]);
    }

    #[test]
    fn dyck_counts_are_catalan() {
        let counts: Vec<usize> = (1..=10).map(|n| dyck_words(n).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]);
    }

    #[test]
    fn grid_paths_small() {
        let two: Vec<String> = grid_paths(2).unwrap().map(|p| p.to_string()).collect();
        assert_eq!(two, vec!["ES", "X"]);
        assert_eq!(
            grid_paths(1)
                .unwrap()
                .map(|p| p.to_string())
                .collect::<Vec<_>>(),
            vec![""]
        );
    }

    #[test]
    fn compositions_in_lex_order() {
        let four: Vec<Vec<usize>> = compositions(4).unwrap().collect();
        assert_eq!(
            four,
            vec![
                vec![1, 1, 1, 1],
                vec![1, 1, 2],
                vec![1, 2, 1],
                vec![1, 3],
                vec![2, 1, 1],
                vec![2, 2],
                vec![3, 1],
                vec![4],
            ]
        );
        assert_eq!(compositions(10).unwrap().count(), 512);
    }

    #[test]
    fn weight_vectors_respect_parity() {
        let all: Vec<Vec<u64>> = weight_vectors(5, vec![true, false]).collect();
        assert_eq!(all, vec![vec![2, 3], vec![4, 1]]);
        let free: Vec<Vec<u64>> = weight_vectors(3, vec![false, false]).collect();
        assert_eq!(free, vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(weight_vectors(2, vec![false, false, false]).count(), 0);
        assert_eq!(weight_vectors(3, vec![true]).count(), 0);
    }
}
