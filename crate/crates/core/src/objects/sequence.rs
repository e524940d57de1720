use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::Violation;

/// `(e_1, ..., e_n)` with `0 <= e_i < i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "InversionSequenceJson", into = "InversionSequenceJson")]
pub struct InversionSequence {
    e: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InversionSequenceJson {
    pub e: Vec<usize>,
}

impl InversionSequence {
    pub fn new(e: Vec<usize>) -> Result<Self, Violation> {
        let seq = InversionSequence { e };
        seq.validate()?;
        Ok(seq)
    }

    pub(crate) fn new_unchecked(e: Vec<usize>) -> Self {
        InversionSequence { e }
    }

    pub fn validate(&self) -> Result<(), Violation> {
        if self.e.is_empty() {
            return Err(Violation::ZeroWeight);
        }
        for (index, &value) in self.e.iter().enumerate() {
            if value > index {
                return Err(Violation::SequenceEntry {
                    position: index + 1,
                    value,
                });
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.e.len()
    }

    pub fn is_empty(&self) -> bool {
        self.e.is_empty()
    }

    pub fn entries(&self) -> &[usize] {
        &self.e
    }

    /// Number of distinct values, the ever-present 0 included.
    pub fn dist(&self) -> usize {
        self.e.iter().collect::<BTreeSet<_>>().len()
    }

    /// No `i < j < k` with `e_i = e_k`: a value may repeat only in adjacent
    /// positions, and at most twice.
    pub fn in_pattern_class(&self) -> bool {
        let mut last_seen = vec![None; self.e.len()];
        for (k, &value) in self.e.iter().enumerate() {
            if let Some(i) = last_seen[value] {
                if k >= i + 2 {
                    return false;
                }
            }
            last_seen[value] = Some(k);
        }
        // three adjacent equal values also contain a forbidden triple
        !self.e.windows(3).any(|w| w[0] == w[2])
    }

    pub fn is_nondecreasing(&self) -> bool {
        self.e.windows(2).all(|w| w[0] <= w[1])
    }

    /// The last two entries coincide (`n >= 2`).
    pub fn ends_with_repeat(&self) -> bool {
        let n = self.e.len();
        n >= 2 && self.e[n - 2] == self.e[n - 1]
    }
}

impl From<InversionSequence> for InversionSequenceJson {
    fn from(s: InversionSequence) -> Self {
        InversionSequenceJson { e: s.e }
    }
}

impl TryFrom<InversionSequenceJson> for InversionSequence {
    type Error = Violation;

    fn try_from(raw: InversionSequenceJson) -> Result<Self, Violation> {
        InversionSequence::new(raw.e)
    }
}

impl fmt::Display for InversionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.e.iter().map(usize::to_string).collect();
        write!(f, "({})", items.join(","))
    }
}
