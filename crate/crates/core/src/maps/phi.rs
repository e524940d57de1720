//! The recursive bijection from nondecreasing improper matrices to Motzkin
//! words, carried out on weighted grid paths.

use super::lattice::{matrix_from_weighted_path, weighted_path};
use super::MapError;
use crate::objects::{GridPath, MotzkinStep, MotzkinWord, PartitionMatrix, WeightedGridPath};

type Node = (usize, usize);

/// Nodes and weights of a weighted path, edited freely before rebuilding.
#[derive(Clone, Debug)]
struct Walk {
    nodes: Vec<Node>,
    weights: Vec<u64>,
}

impl Walk {
    fn from_weighted(w: &WeightedGridPath) -> Self {
        Walk {
            nodes: w.path().nodes(),
            weights: w.weights().to_vec(),
        }
    }

    fn into_weighted(self) -> WeightedGridPath {
        let path = GridPath::from_nodes(&self.nodes).expect("edits keep a valid grid path");
        WeightedGridPath::new_unchecked(path, self.weights)
    }

    fn dim(&self) -> usize {
        self.nodes.last().expect("walks are nonempty").0
    }

    fn total(&self) -> u64 {
        self.weights.iter().sum()
    }

    /// Indices `i` such that the step `nodes[i] -> nodes[i+1]` is a
    /// southeast step ending on the diagonal.
    fn diagonal_south_east(&self) -> impl Iterator<Item = usize> + '_ {
        self.nodes.windows(2).enumerate().filter_map(|(i, w)| {
            let (a, b) = (w[0], w[1]);
            (b.0 == a.0 + 1 && b.1 == a.1 + 1 && b.0 == b.1).then_some(i)
        })
    }

    /// Splits after node `i`; the tail is shifted back to start at `(1,1)`.
    fn split_after(mut self, i: usize) -> (Walk, Walk) {
        let tail_nodes = self.nodes.split_off(i + 1);
        let tail_weights = self.weights.split_off(i + 1);
        let shift = self.dim();
        let tail = Walk {
            nodes: tail_nodes
                .into_iter()
                .map(|(x, y)| (x - shift, y - shift))
                .collect(),
            weights: tail_weights,
        };
        (self, tail)
    }

    /// Block-diagonal sum: `other` attached by a southeast step.
    fn join(mut self, other: Walk) -> Walk {
        let shift = self.dim();
        self.nodes
            .extend(other.nodes.into_iter().map(|(x, y)| (x + shift, y + shift)));
        self.weights.extend(other.weights);
        self
    }
}

fn trivial_word(n: u64) -> Vec<MotzkinStep> {
    let m = (n / 2) as usize;
    let mut word = vec![MotzkinStep::Up; m];
    if n % 2 == 1 {
        word.push(MotzkinStep::Level);
    }
    word.extend(std::iter::repeat_n(MotzkinStep::Down, m));
    word
}

fn phi_walk(walk: Walk) -> Vec<MotzkinStep> {
    if walk.nodes.len() == 1 {
        return trivial_word(walk.weights[0]);
    }
    if let Some(last) = walk.diagonal_south_east().last() {
        let (head, tail) = walk.split_after(last);
        let mut word = phi_walk(head);
        word.extend(phi_walk(tail));
        return word;
    }
    let mut word = vec![MotzkinStep::Up];
    word.extend(phi_walk(shrink(walk)));
    word.push(MotzkinStep::Down);
    word
}

/// One irreducible block of dimension at least 2 to the walk of weight two
/// less, by the three cases on the node `(D-1, D)`.
fn shrink(mut walk: Walk) -> Walk {
    let len = walk.nodes.len();
    let d = walk.dim();
    debug_assert_eq!(walk.nodes[len - 2], (d - 1, d));
    let weight = walk.weights[len - 2];
    if weight >= 4 {
        walk.weights[len - 2] -= 2;
        return walk;
    }
    if walk.nodes[len - 3] == (d - 1, d - 1) {
        walk.nodes.remove(len - 2);
        walk.weights.remove(len - 2);
        return walk;
    }
    // slide the stretch from (s, s+1) to the node before (D-1, D) one row down
    let s_index = (0..len - 2)
        .rev()
        .find(|&i| {
            let (x, y) = walk.nodes[i];
            x == y && x <= d - 2 && walk.nodes[i + 1] == (x, x + 1)
        })
        .expect("an irreducible block starts with an east step");
    for node in &mut walk.nodes[s_index + 1..len - 2] {
        node.0 += 1;
    }
    walk.nodes.remove(len - 2);
    walk.weights.remove(len - 2);
    walk
}

fn phi_inv_walk(steps: &[MotzkinStep]) -> Walk {
    let word = MotzkinWord::new_unchecked(steps.to_vec());
    let factors = word.factors();
    if factors.len() > 1 {
        let split = steps.len() - factors.last().expect("nonempty").len();
        return phi_inv_walk(&steps[..split]).join(phi_inv_walk(&steps[split..]));
    }
    if steps == [MotzkinStep::Level] {
        return Walk {
            nodes: vec![(1, 1)],
            weights: vec![1],
        };
    }
    let inner = &steps[1..steps.len() - 1];
    if inner.is_empty() {
        return Walk {
            nodes: vec![(1, 1)],
            weights: vec![2],
        };
    }
    grow(phi_inv_walk(inner))
}

/// Inverse of [`shrink`], dispatched on the diagonal southeast steps.
fn grow(mut walk: Walk) -> Walk {
    let len = walk.nodes.len();
    if len == 1 {
        walk.weights[0] += 2;
        return walk;
    }
    let d = walk.dim();
    let first = walk.diagonal_south_east().next();
    match first {
        None => {
            walk.weights[len - 2] += 2;
        }
        Some(i) if walk.nodes[i] == (d - 1, d - 1) => {
            walk.nodes.insert(len - 1, (d - 1, d));
            walk.weights.insert(len - 1, 2);
        }
        Some(i) => {
            for node in &mut walk.nodes[i + 1..len - 1] {
                node.0 -= 1;
            }
            walk.nodes.insert(len - 1, (d - 1, d));
            walk.weights.insert(len - 1, 2);
        }
    }
    walk
}

/// The Motzkin word of a weighted path of a nondecreasing improper matrix.
pub fn phi_path(w: &WeightedGridPath) -> Result<MotzkinWord, MapError> {
    w.validate()?;
    w.validate_improper()?;
    Ok(MotzkinWord::new_unchecked(phi_walk(Walk::from_weighted(w))))
}

/// Inverse of [`phi_path`].
pub fn phi_inv_path(m: &MotzkinWord) -> WeightedGridPath {
    let walk = phi_inv_walk(m.steps());
    debug_assert_eq!(walk.total(), m.len() as u64);
    walk.into_weighted()
}

/// Sends weight, blocks and odd cells to length, components and level steps.
pub fn phi(b: &PartitionMatrix) -> Result<MotzkinWord, MapError> {
    if !b.is_improper() {
        return Err(MapError::NotImproper);
    }
    phi_path(&weighted_path(b)?)
}

pub fn phi_inv(m: &MotzkinWord) -> PartitionMatrix {
    matrix_from_weighted_path(&phi_inv_path(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{motzkin_words, nondecreasing, NondecreasingStrategy};
    use std::collections::BTreeSet;

    fn pm(text: &str) -> PartitionMatrix {
        text.parse().unwrap()
    }

    #[test]
    fn base_cases() {
        assert_eq!(phi(&pm("({1})")).unwrap().to_string(), "L");
        assert_eq!(phi(&pm("({1,2})")).unwrap().to_string(), "UD");
        assert_eq!(phi(&pm("({1},∅;{2})")).unwrap().to_string(), "LL");
        assert_eq!(phi(&pm("({1,2,3,4,5})")).unwrap().to_string(), "UULDD");
    }

    #[test]
    fn worked_cases() {
        let case_two = pm("({1},{2,3};{4})");
        assert_eq!(phi(&case_two).unwrap().to_string(), "ULLD");
        let nested = pm("({1},{2,3,4,5};{6})");
        assert_eq!(phi(&nested).unwrap().to_string(), "UULLDD");
        assert_eq!(phi_inv(&MotzkinWord::parse("UULLDD").unwrap()), nested);
    }

    #[test]
    fn rejects_proper_matrices() {
        assert_eq!(phi(&pm("({1},{3};{2})")), Err(MapError::NotImproper));
    }

    #[test]
    fn bijection_up_to_eight() {
        for n in 1..=8 {
            let mut images = BTreeSet::new();
            for b in nondecreasing(n, true, NondecreasingStrategy::Paths).unwrap() {
                let m = phi(&b).unwrap();
                let s = m.stats();
                assert_eq!(
                    (s.len, s.comp, s.level),
                    (n, b.block_count(), b.odd_count())
                );
                assert_eq!(phi_inv(&m), b, "{b} -> {m}");
                images.insert(m);
            }
            let all: BTreeSet<MotzkinWord> = motzkin_words(n).unwrap().collect();
            assert_eq!(images, all);
            for m in all {
                assert_eq!(phi(&phi_inv(&m)).unwrap(), m);
            }
        }
    }
}
