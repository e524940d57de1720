use crate::objects::PartitionMatrix;

/// Swaps `i` and `i + 1` at the smallest proper descent or ascent; improper
/// matrices are fixed.
pub fn theta(p: &PartitionMatrix) -> PartitionMatrix {
    let Some(event) = p.first_proper_event() else {
        return p.clone();
    };
    let mut positions: Vec<(usize, usize)> = p.positions().collect();
    positions.swap(event.i - 1, event.i);
    PartitionMatrix::from_positions_unchecked(p.dim(), &positions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::partition_matrices;
    use crate::objects::StepKind;

    #[test]
    fn example_swaps_seven_and_eight() {
        let p: PartitionMatrix = "({1},∅,{4,5},∅;{2,3},{6},∅;∅,{8};{7})".parse().unwrap();
        let q = theta(&p);
        assert_eq!(q.to_string(), "({1},∅,{4,5},∅;{2,3},{6},∅;∅,{7};{8})");
        assert_eq!((p.inv(), q.inv()), (1, 0));
    }

    #[test]
    fn involution_on_small_weights() {
        for n in 1..=6 {
            for p in partition_matrices(n).unwrap() {
                let q = theta(&p);
                assert!(q.validate().is_ok());
                assert_eq!(theta(&q), p);
                match p.first_proper_event() {
                    None => assert_eq!(q, p),
                    Some(e) => {
                        let expected = if e.kind == StepKind::Ascent {
                            p.inv() + 1
                        } else {
                            p.inv() - 1
                        };
                        assert_eq!(q.inv(), expected);
                    }
                }
            }
        }
    }
}
