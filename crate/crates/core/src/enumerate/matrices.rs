//! Partition matrices, Fishburn matrices and their subfamilies.

use std::thread;

use super::dfs::{Dfs, SearchTree};
use super::words::{check_positive, compositions, grid_paths_within, weight_vectors, Compositions};
use super::EnumError;
use crate::maps::{double_expand_with, matrix_from_weighted_path};
use crate::objects::{FishburnMatrix, GridStep, PartitionMatrix, WeightedGridPath};

/// Row choices for elements whose columns are already fixed. Each element
/// in column `d` takes a row in `1..=d`; every row must end up used.
struct RowTree {
    cols: Vec<usize>,
    dim: usize,
}

impl SearchTree for RowTree {
    fn next_choice(&self, prefix: &[u32], from: u32) -> Option<u32> {
        let k = prefix.len();
        let mut covered = vec![false; self.dim];
        for &r in prefix {
            covered[r as usize] = true;
        }
        let uncovered = covered.iter().filter(|c| !**c).count();
        let left_after = self.cols.len() - k - 1;
        (from..self.cols[k] as u32).find(|&r| {
            let after = uncovered - usize::from(!covered[r as usize]);
            after <= left_after
        })
    }

    fn is_complete(&self, prefix: &[u32]) -> bool {
        prefix.len() == self.cols.len()
    }
}

/// Every partition matrix of weight `n` exactly once.
///
/// Column-monotonicity forces each column to hold a consecutive run of
/// integers, so a matrix is a composition `(n_1, .., n_D)` of `n` (the column
/// sizes) plus a row in `1..=d` for every element of column `d`, subject to
/// every row being used. Order: composition lexicographic, then the row
/// vector lexicographic.
pub struct PartitionMatrices {
    outer: Compositions,
    inner: Option<Dfs<RowTree>>,
}

impl Iterator for PartitionMatrices {
    type Item = PartitionMatrix;

    fn next(&mut self) -> Option<PartitionMatrix> {
        loop {
            if let Some(dfs) = &mut self.inner {
                if let Some((tree, rows)) = dfs.advance_with_tree() {
                    let rows = rows.iter().map(|&r| r as usize + 1).collect();
                    return Some(PartitionMatrix::from_parts_unchecked(
                        tree.dim,
                        rows,
                        tree.cols.clone(),
                    ));
                }
            }
            let sizes = self.outer.next()?;
            self.inner = Some(Dfs::new(row_tree(&sizes)));
        }
    }
}

fn row_tree(sizes: &[usize]) -> RowTree {
    let cols = sizes
        .iter()
        .enumerate()
        .flat_map(|(d, &size)| std::iter::repeat_n(d + 1, size))
        .collect();
    RowTree {
        cols,
        dim: sizes.len(),
    }
}

pub fn partition_matrices(n: usize) -> Result<PartitionMatrices, EnumError> {
    Ok(PartitionMatrices {
        outer: compositions(n)?,
        inner: None,
    })
}

/// Counts partition matrices of weight `n` on `threads` workers, splitting
/// the column-size compositions round robin. Agrees with the sequential count.
pub fn count_partition_matrices_parallel(n: usize, threads: usize) -> Result<u64, EnumError> {
    let sizes: Vec<Vec<usize>> = compositions(n)?.collect();
    let threads = threads.max(1);
    let total = thread::scope(|scope| {
        let workers: Vec<_> = (0..threads)
            .map(|w| {
                let sizes = &sizes;
                scope.spawn(move || {
                    sizes
                        .iter()
                        .skip(w)
                        .step_by(threads)
                        .map(|s| {
                            let mut dfs = Dfs::new(row_tree(s));
                            let mut count = 0u64;
                            while dfs.advance().is_some() {
                                count += 1;
                            }
                            count
                        })
                        .sum::<u64>()
                })
            })
            .collect();
        workers
            .into_iter()
            .map(|h| h.join().expect("counting worker panicked"))
            .sum()
    });
    Ok(total)
}

/// Upper-triangular fillings of one dimension, row-major, pruned on weight
/// and on row/column coverage.
struct FishburnTree {
    weight: u64,
    dim: usize,
    positions: Vec<(usize, usize)>,
}

impl FishburnTree {
    fn new(weight: u64, dim: usize) -> Self {
        let positions = (1..=dim)
            .flat_map(|r| (r..=dim).map(move |c| (r, c)))
            .collect();
        FishburnTree {
            weight,
            dim,
            positions,
        }
    }

    fn feasible(&self, prefix: &[u32], value: u32) -> bool {
        let k = prefix.len();
        let used: u64 = prefix.iter().map(|&v| u64::from(v)).sum::<u64>() + u64::from(value);
        let Some(left) = self.weight.checked_sub(used) else {
            return false;
        };
        if k + 1 == self.positions.len() && left != 0 {
            return false;
        }
        let mut row_hit = vec![false; self.dim + 1];
        let mut col_hit = vec![false; self.dim + 1];
        for (i, &v) in prefix.iter().chain(std::iter::once(&value)).enumerate() {
            if v > 0 {
                let (r, c) = self.positions[i];
                row_hit[r] = true;
                col_hit[c] = true;
            }
        }
        let (current_row, current_col) = self.positions[k];
        let mut open_rows = 0u64;
        for (r, &hit) in row_hit.iter().enumerate().skip(1) {
            // row r is finished once (r, dim) has been filled
            let closed = r < current_row || (r == current_row && current_col == self.dim);
            if !hit {
                if closed {
                    return false;
                }
                open_rows += 1;
            }
        }
        let mut open_cols = 0u64;
        for (c, &hit) in col_hit.iter().enumerate().skip(1) {
            // column c is finished once (c, c) has been filled
            let closed = c < current_row || (c == current_row && current_col >= c);
            if !hit {
                if closed {
                    return false;
                }
                open_cols += 1;
            }
        }
        left >= open_rows.max(open_cols)
    }
}

impl SearchTree for FishburnTree {
    fn next_choice(&self, prefix: &[u32], from: u32) -> Option<u32> {
        let used: u64 = prefix.iter().map(|&v| u64::from(v)).sum();
        let max = u32::try_from(self.weight.checked_sub(used)?).ok()?;
        (from..=max).find(|&v| self.feasible(prefix, v))
    }

    fn is_complete(&self, prefix: &[u32]) -> bool {
        prefix.len() == self.positions.len()
    }
}

/// Every Fishburn matrix of weight `n`: dimension `1..=n` ascending, then the
/// row-major entry vector lexicographically.
pub struct FishburnMatrices {
    weight: usize,
    dim: usize,
    dfs: Dfs<FishburnTree>,
}

impl Iterator for FishburnMatrices {
    type Item = FishburnMatrix;

    fn next(&mut self) -> Option<FishburnMatrix> {
        loop {
            if let Some((tree, values)) = self.dfs.advance_with_tree() {
                let mut entries = vec![0u64; tree.dim * tree.dim];
                for (&(r, c), &v) in tree.positions.iter().zip(values) {
                    entries[(r - 1) * tree.dim + (c - 1)] = u64::from(v);
                }
                return Some(FishburnMatrix::from_entries_unchecked(tree.dim, entries));
            }
            // a row needs a positive entry, so the dimension never exceeds n
            if self.dim >= self.weight {
                return None;
            }
            self.dim += 1;
            self.dfs = Dfs::new(FishburnTree::new(self.weight as u64, self.dim));
        }
    }
}

pub fn fishburn_matrices(n: usize) -> Result<FishburnMatrices, EnumError> {
    check_positive(n)?;
    Ok(FishburnMatrices {
        weight: n,
        dim: 1,
        dfs: Dfs::new(FishburnTree::new(n as u64, 1)),
    })
}

/// How the improper matrices of a weight are produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IppmStrategy {
    /// Filter all partition matrices by the improperness test.
    Filter,
    /// Double every matrix of weight `m` and keep `2m - n` column maxima out.
    Doubling,
}

pub fn ippm(
    n: usize,
    strategy: IppmStrategy,
) -> Result<Box<dyn Iterator<Item = PartitionMatrix>>, EnumError> {
    check_positive(n)?;
    match strategy {
        IppmStrategy::Filter => Ok(Box::new(
            partition_matrices(n)?.filter(PartitionMatrix::is_improper),
        )),
        IppmStrategy::Doubling => Ok(Box::new(ippm_by_doubling(n))),
    }
}

/// Images of the doubling construction with weight `n`. A source of weight
/// `m` and dimension `dim` yields weight `2m - drops`, so only sources with
/// `ceil(n/2) <= m <= n` and `dim >= 2m - n` contribute.
fn ippm_by_doubling(n: usize) -> impl Iterator<Item = PartitionMatrix> {
    (n.div_ceil(2)..=n).flat_map(move |m| {
        let drops = 2 * m - n;
        partition_matrices(m)
            .expect("m >= 1")
            .filter(move |p| p.dim() >= drops)
            .flat_map(move |p| {
                keep_vectors(p.dim(), drops)
                    .map(|keep| double_expand_with(&p, &keep))
                    .collect::<Vec<_>>()
            })
    })
}

/// Keep vectors of length `dim` with exactly `drops` entries false, listed
/// lexicographically with `true` before `false`.
fn keep_vectors(dim: usize, drops: usize) -> impl Iterator<Item = Vec<bool>> {
    (0u64..1 << dim)
        .filter(move |mask| mask.count_ones() as usize == drops)
        .map(move |mask| (0..dim).map(|d| mask >> (dim - 1 - d) & 1 == 0).collect())
}

/// How nondecreasing matrices are produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NondecreasingStrategy {
    /// Weighted grid paths turned into matrices.
    Paths,
    /// Filter all partition matrices.
    Filter,
}

/// Nondecreasing partition matrices of weight `n`; with `improper`, only
/// the improper ones.
pub fn nondecreasing(
    n: usize,
    improper: bool,
    strategy: NondecreasingStrategy,
) -> Result<Box<dyn Iterator<Item = PartitionMatrix>>, EnumError> {
    check_positive(n)?;
    match strategy {
        NondecreasingStrategy::Filter => {
            Ok(Box::new(partition_matrices(n)?.filter(move |p| {
                p.is_nondecreasing() && (!improper || p.is_improper())
            })))
        }
        NondecreasingStrategy::Paths => Ok(Box::new(
            weighted_paths(n, improper).map(|w| matrix_from_weighted_path(&w)),
        )),
    }
}

/// Weighted grid paths of total weight `n`: dimension ascending, then path
/// order, then weight vector lexicographically. With `improper`, nodes that
/// start a south step carry even weights.
pub fn weighted_paths(n: usize, improper: bool) -> impl Iterator<Item = WeightedGridPath> {
    (1..=n).flat_map(move |dim| {
        grid_paths_within(dim, n, improper).flat_map(move |path| {
            let mut even: Vec<bool> = path
                .steps()
                .iter()
                .map(|s| improper && *s == GridStep::South)
                .collect();
            even.push(false);
            weight_vectors(n, even).map(move |w| WeightedGridPath::new_unchecked(path.clone(), w))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::natural_fishburn;
    use std::collections::BTreeSet;

    #[test]
    fn partition_matrix_counts_are_factorials() {
        let mut factorial = 1;
        for n in 1..=8 {
            factorial *= n;
            assert_eq!(partition_matrices(n).unwrap().count(), factorial, "n = {n}");
        }
    }

    #[test]
    fn weight_two_listing() {
        let listed: Vec<String> = partition_matrices(2)
            .unwrap()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(listed, vec!["({1},∅;{2})", "({1,2})"]);
    }

    #[test]
    fn weight_three_is_the_six_listed() {
        let got: BTreeSet<PartitionMatrix> = partition_matrices(3).unwrap().collect();
        let listed: BTreeSet<PartitionMatrix> = [
            "({1,2,3})",
            "({1,2},∅;{3})",
            "({1},∅;{2,3})",
            "({1},∅,∅;{2},∅;{3})",
            "({1},{2};{3})",
            "({1},{3};{2})",
        ]
        .iter()
        .map(|t| t.parse().unwrap())
        .collect();
        assert_eq!(got, listed);
    }

    #[test]
    fn every_emitted_matrix_is_valid_and_distinct() {
        for n in 1..=6 {
            let all: Vec<PartitionMatrix> = partition_matrices(n).unwrap().collect();
            assert!(all.iter().all(|p| p.validate().is_ok()));
            let distinct: BTreeSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
        }
    }

    #[test]
    fn parallel_count_matches() {
        for n in 1..=8 {
            let sequential = partition_matrices(n).unwrap().count() as u64;
            for threads in [1, 3, 4] {
                assert_eq!(
                    count_partition_matrices_parallel(n, threads).unwrap(),
                    sequential
                );
            }
        }
    }

    #[test]
    fn fishburn_counts() {
        let counts: Vec<usize> = (1..=8)
            .map(|n| fishburn_matrices(n).unwrap().count())
            .collect();
        assert_eq!(counts, vec![1, 2, 5, 15, 53, 217, 1014, 5335]);
        let one: Vec<String> = fishburn_matrices(1)
            .unwrap()
            .map(|m| m.to_string())
            .collect();
        assert_eq!(one, vec!["(1)"]);
    }

    #[test]
    fn fishburn_matches_natural_image() {
        for n in 1..=6 {
            let direct: Vec<FishburnMatrix> = fishburn_matrices(n).unwrap().collect();
            assert!(direct.iter().all(|m| m.validate().is_ok()));
            let direct_set: BTreeSet<_> = direct.iter().cloned().collect();
            assert_eq!(direct_set.len(), direct.len());
            let image: BTreeSet<FishburnMatrix> = partition_matrices(n)
                .unwrap()
                .map(|p| natural_fishburn(&p))
                .collect();
            assert_eq!(direct_set, image, "n = {n}");
        }
        let image4: BTreeSet<FishburnMatrix> = partition_matrices(4)
            .unwrap()
            .map(|p| natural_fishburn(&p))
            .collect();
        assert_eq!(image4.len(), 15);
    }

    #[test]
    fn ippm_strategies_agree() {
        let filter3: BTreeSet<PartitionMatrix> = ippm(3, IppmStrategy::Filter).unwrap().collect();
        let first_line: BTreeSet<PartitionMatrix> = [
            "({1,2,3})",
            "({1,2},∅;{3})",
            "({1},∅;{2,3})",
            "({1},∅,∅;{2},∅;{3})",
        ]
        .iter()
        .map(|t| t.parse().unwrap())
        .collect();
        assert_eq!(filter3, first_line);
        for n in 1..=7 {
            let by_filter: Vec<PartitionMatrix> = ippm(n, IppmStrategy::Filter).unwrap().collect();
            let by_doubling: Vec<PartitionMatrix> =
                ippm(n, IppmStrategy::Doubling).unwrap().collect();
            let a: BTreeSet<_> = by_filter.iter().cloned().collect();
            let b: BTreeSet<_> = by_doubling.iter().cloned().collect();
            assert_eq!(b.len(), by_doubling.len(), "doubling repeats at n = {n}");
            assert_eq!(a, b, "n = {n}");
        }
        assert_eq!(ippm(6, IppmStrategy::Doubling).unwrap().count(), 88);
    }

    #[test]
    fn nondecreasing_strategies_agree() {
        for n in 1..=7 {
            for improper in [false, true] {
                let fast: Vec<PartitionMatrix> =
                    nondecreasing(n, improper, NondecreasingStrategy::Paths)
                        .unwrap()
                        .collect();
                let slow: BTreeSet<PartitionMatrix> =
                    nondecreasing(n, improper, NondecreasingStrategy::Filter)
                        .unwrap()
                        .collect();
                let fast_set: BTreeSet<_> = fast.iter().cloned().collect();
                assert_eq!(fast_set.len(), fast.len());
                assert_eq!(fast_set, slow, "n = {n}, improper = {improper}");
            }
        }
        let ndippm: Vec<usize> = (1..=6)
            .map(|n| {
                nondecreasing(n, true, NondecreasingStrategy::Paths)
                    .unwrap()
                    .count()
            })
            .collect();
        assert_eq!(ndippm, vec![1, 2, 4, 9, 21, 51]);
        assert_eq!(
            nondecreasing(3, false, NondecreasingStrategy::Paths)
                .unwrap()
                .count(),
            5
        );
    }
}
