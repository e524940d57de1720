use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::matrices::{
    count_partition_matrices_parallel, fishburn_matrices, ippm, nondecreasing, partition_matrices,
    IppmStrategy, NondecreasingStrategy,
};
use super::words::{dyck_words, grid_paths, inversion_sequences, motzkin_words, pattern_class};
use super::EnumError;
use crate::objects::{
    DyckWord, FishburnMatrix, GridPath, InversionSequence, MotzkinWord, PartitionMatrix,
};

/// A named family; the size parameter is a weight or length, or the
/// dimension for grid paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyId {
    InversionSequences,
    PatternClass,
    PartitionMatrices,
    FishburnMatrices,
    Improper,
    Nondecreasing,
    NondecreasingImproper,
    Motzkin,
    Dyck,
    GridPaths,
}

impl FamilyId {
    pub const ALL: [FamilyId; 10] = [
        FamilyId::InversionSequences,
        FamilyId::PatternClass,
        FamilyId::PartitionMatrices,
        FamilyId::FishburnMatrices,
        FamilyId::Improper,
        FamilyId::Nondecreasing,
        FamilyId::NondecreasingImproper,
        FamilyId::Motzkin,
        FamilyId::Dyck,
        FamilyId::GridPaths,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::InversionSequences => "is",
            FamilyId::PatternClass => "is-pattern",
            FamilyId::PartitionMatrices => "pm",
            FamilyId::FishburnMatrices => "fm",
            FamilyId::Improper => "ippm",
            FamilyId::Nondecreasing => "ndpm",
            FamilyId::NondecreasingImproper => "ndippm",
            FamilyId::Motzkin => "motzkin",
            FamilyId::Dyck => "dyck",
            FamilyId::GridPaths => "gridpath",
        }
    }

    /// Strategies accepted by [`FamilyId::stream`]; the first is the default.
    pub fn strategies(self) -> &'static [Strategy] {
        match self {
            FamilyId::Improper => &[Strategy::Filter, Strategy::Doubling],
            FamilyId::Nondecreasing | FamilyId::NondecreasingImproper => {
                &[Strategy::Paths, Strategy::Filter]
            }
            _ => &[Strategy::Default],
        }
    }

    fn resolve(self, strategy: Option<Strategy>) -> Result<Strategy, EnumError> {
        let allowed = self.strategies();
        match strategy {
            None | Some(Strategy::Default) => Ok(allowed[0]),
            Some(s) if allowed.contains(&s) => Ok(s),
            Some(s) => Err(EnumError::UnknownStrategy {
                family: self.name().to_string(),
                strategy: s.name().to_string(),
            }),
        }
    }

    /// All objects of size `n`, in the family's fixed order.
    pub fn stream(
        self,
        n: usize,
        strategy: Option<Strategy>,
    ) -> Result<Box<dyn Iterator<Item = Object>>, EnumError> {
        let strategy = self.resolve(strategy)?;
        Ok(match self {
            FamilyId::InversionSequences => Box::new(inversion_sequences(n)?.map(Object::Sequence)),
            FamilyId::PatternClass => Box::new(pattern_class(n)?.map(Object::Sequence)),
            FamilyId::PartitionMatrices => Box::new(partition_matrices(n)?.map(Object::Matrix)),
            FamilyId::FishburnMatrices => Box::new(fishburn_matrices(n)?.map(Object::Fishburn)),
            FamilyId::Improper => {
                let how = if strategy == Strategy::Doubling {
                    IppmStrategy::Doubling
                } else {
                    IppmStrategy::Filter
                };
                Box::new(ippm(n, how)?.map(Object::Matrix))
            }
            FamilyId::Nondecreasing | FamilyId::NondecreasingImproper => {
                let how = if strategy == Strategy::Filter {
                    NondecreasingStrategy::Filter
                } else {
                    NondecreasingStrategy::Paths
                };
                let improper = self == FamilyId::NondecreasingImproper;
                Box::new(nondecreasing(n, improper, how)?.map(Object::Matrix))
            }
            FamilyId::Motzkin => Box::new(motzkin_words(n)?.map(Object::Motzkin)),
            FamilyId::Dyck => Box::new(dyck_words(n)?.map(Object::Dyck)),
            FamilyId::GridPaths => Box::new(grid_paths(n)?.map(Object::Path)),
        })
    }

    /// Size of the family without keeping any object. Partition matrices
    /// accept [`Strategy::Parallel`].
    pub fn count(self, n: usize, strategy: Option<Strategy>) -> Result<u64, EnumError> {
        if self == FamilyId::PartitionMatrices && strategy == Some(Strategy::Parallel) {
            let threads = std::thread::available_parallelism().map_or(1, |t| t.get());
            return count_partition_matrices_parallel(n, threads);
        }
        Ok(self.stream(n, strategy)?.count() as u64)
    }

    /// Column names of the CSV summary rows of this family.
    pub fn csv_header(self) -> &'static [&'static str] {
        match self {
            FamilyId::InversionSequences | FamilyId::PatternClass => {
                &["e", "n", "dist", "pattern", "nondecreasing"]
            }
            FamilyId::PartitionMatrices
            | FamilyId::Improper
            | FamilyId::Nondecreasing
            | FamilyId::NondecreasingImproper => &[
                "matrix",
                "n",
                "dim",
                "inv",
                "v",
                "blk",
                "odd",
                "improper",
                "nondecreasing",
            ],
            FamilyId::FishburnMatrices => &["matrix", "n", "dim"],
            FamilyId::Motzkin => &["word", "len", "comp", "level", "up", "down"],
            FamilyId::Dyck => &["word", "semilen", "touch"],
            FamilyId::GridPaths => &[
                "steps",
                "dim",
                "south",
                "east",
                "south_east",
                "diag_south",
                "diag_south_east",
            ],
        }
    }
}

impl FromStr for FamilyId {
    type Err = EnumError;

    fn from_str(s: &str) -> Result<Self, EnumError> {
        FamilyId::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| EnumError::UnknownFamily(s.to_string()))
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// The family's first listed strategy.
    Default,
    Filter,
    Doubling,
    Paths,
    Parallel,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::Default => "default",
            Strategy::Filter => "filter",
            Strategy::Doubling => "doubling",
            Strategy::Paths => "paths",
            Strategy::Parallel => "parallel",
        }
    }
}

impl FromStr for Strategy {
    type Err = EnumError;

    fn from_str(s: &str) -> Result<Self, EnumError> {
        [
            Strategy::Default,
            Strategy::Filter,
            Strategy::Doubling,
            Strategy::Paths,
            Strategy::Parallel,
        ]
        .into_iter()
        .find(|st| st.name() == s)
        .ok_or_else(|| EnumError::UnknownStrategy {
            family: String::new(),
            strategy: s.to_string(),
        })
    }
}

/// Any enumerated object, serialized in its own canonical JSON form.
///
/// Deserialization tries the variants in order, so a `{"word"}` object is
/// read as a Motzkin word when its letters allow and as a Dyck word otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Object {
    Matrix(PartitionMatrix),
    Fishburn(FishburnMatrix),
    Sequence(InversionSequence),
    Motzkin(MotzkinWord),
    Dyck(DyckWord),
    Path(GridPath),
}

impl Object {
    /// One CSV row matching [`FamilyId::csv_header`].
    pub fn csv_fields(&self) -> Vec<String> {
        match self {
            Object::Sequence(e) => vec![
                e.to_string(),
                e.len().to_string(),
                e.dist().to_string(),
                e.in_pattern_class().to_string(),
                e.is_nondecreasing().to_string(),
            ],
            Object::Matrix(p) => vec![
                p.to_string(),
                p.n().to_string(),
                p.dim().to_string(),
                p.inv().to_string(),
                p.semi_weight().to_string(),
                p.block_count().to_string(),
                p.odd_count().to_string(),
                p.is_improper().to_string(),
                p.is_nondecreasing().to_string(),
            ],
            Object::Fishburn(m) => vec![m.to_string(), m.weight().to_string(), m.dim().to_string()],
            Object::Motzkin(w) => {
                let s = w.stats();
                vec![
                    w.to_string(),
                    s.len.to_string(),
                    s.comp.to_string(),
                    s.level.to_string(),
                    s.up.to_string(),
                    s.down.to_string(),
                ]
            }
            Object::Dyck(w) => vec![
                w.to_string(),
                w.semilen().to_string(),
                w.touch().to_string(),
            ],
            Object::Path(g) => {
                let s = g.stats();
                vec![
                    g.to_string(),
                    g.dim().to_string(),
                    s.south.to_string(),
                    s.east.to_string(),
                    s.south_east.to_string(),
                    s.diag_south.to_string(),
                    s.diag_south_east.to_string(),
                ]
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for family in FamilyId::ALL {
            assert_eq!(family.name().parse::<FamilyId>().unwrap(), family);
        }
        assert!("xyz".parse::<FamilyId>().is_err());
    }

    #[test]
    fn strategy_checks() {
        assert!(FamilyId::Motzkin
            .stream(3, Some(Strategy::Doubling))
            .is_err());
        assert_eq!(
            FamilyId::Improper
                .count(4, Some(Strategy::Doubling))
                .unwrap(),
            10
        );
        assert_eq!(
            FamilyId::PartitionMatrices
                .count(6, Some(Strategy::Parallel))
                .unwrap(),
            720
        );
        assert!(FamilyId::Dyck.count(0, None).is_err());
    }

    #[test]
    fn objects_round_trip_through_json() {
        for family in FamilyId::ALL {
            for object in family.stream(3, None).unwrap() {
                let text = serde_json::to_string(&object).unwrap();
                let back: Object = serde_json::from_str(&text).unwrap();
                assert_eq!(back, object, "{family}: {text}");
                assert_eq!(object.csv_fields().len(), family.csv_header().len());
            }
        }
    }
}
