use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::enumerate::partition_matrices;
use crate::objects::{InversionSequence, PartitionMatrix};

/// `e_j` = total size of the columns before `row(j)`.
pub fn cdk_eta(p: &PartitionMatrix) -> InversionSequence {
    let mut before = vec![0; p.dim() + 1];
    for (d, size) in p.column_sizes().iter().enumerate() {
        before[d + 1] = before[d] + size;
    }
    InversionSequence::new_unchecked(p.positions().map(|(row, _)| before[row - 1]).collect())
}

/// The image of every partition matrix of one weight, indexed by sequence.
///
/// Building it walks all `n!` matrices, so it is only practical for small `n`.
pub struct EtaInverseTable {
    n: usize,
    table: HashMap<InversionSequence, PartitionMatrix>,
}

impl EtaInverseTable {
    pub fn build(n: usize) -> Self {
        let table = match partition_matrices(n) {
            Ok(all) => all.map(|p| (cdk_eta(&p), p)).collect(),
            Err(_) => HashMap::new(),
        };
        EtaInverseTable { n, table }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn get(&self, e: &InversionSequence) -> Option<&PartitionMatrix> {
        self.table.get(e)
    }
}

fn cached_table(n: usize) -> Arc<EtaInverseTable> {
    static TABLES: OnceLock<Mutex<HashMap<usize, Arc<EtaInverseTable>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(Default::default);
    if let Some(table) = tables.lock().expect("table cache poisoned").get(&n) {
        return Arc::clone(table);
    }
    // built outside the lock; a concurrent build of the same n is harmless
    let built = Arc::new(EtaInverseTable::build(n));
    let mut guard = tables.lock().expect("table cache poisoned");
    Arc::clone(guard.entry(n).or_insert(built))
}

/// The unique matrix with `cdk_eta(p) == e`, looked up in a table built once
/// per length and kept for the life of the process.
pub fn cdk_eta_inverse(e: &InversionSequence) -> PartitionMatrix {
    cached_table(e.len())
        .get(e)
        .cloned()
        .expect("every inversion sequence has a preimage")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::inversion_sequences;
    use std::collections::HashSet;

    #[test]
    fn example_values() {
        let p: PartitionMatrix = "({1},∅,{4,5},∅;{2,3},{6},∅;∅,{8};{7})".parse().unwrap();
        assert_eq!(cdk_eta(&p).entries(), &[0, 1, 1, 0, 0, 1, 6, 3]);
        let single: PartitionMatrix = "({1,2,3})".parse().unwrap();
        assert_eq!(cdk_eta(&single).entries(), &[0, 0, 0]);
        let e = InversionSequence::new(vec![0, 0, 0]).unwrap();
        assert_eq!(cdk_eta_inverse(&e), single);
        let one = InversionSequence::new(vec![0]).unwrap();
        assert_eq!(cdk_eta_inverse(&one).to_string(), "({1})");
    }

    #[test]
    fn bijective_at_four() {
        let images: HashSet<InversionSequence> = partition_matrices(4)
            .unwrap()
            .map(|p| cdk_eta(&p))
            .collect();
        assert_eq!(images.len(), 24);
        assert!(images.iter().all(|e| e.validate().is_ok()));
    }

    #[test]
    fn inverse_round_trip_at_six() {
        for e in inversion_sequences(6).unwrap() {
            assert_eq!(cdk_eta(&cdk_eta_inverse(&e)), e);
        }
    }
}
