use std::collections::BTreeSet;

use partmat::enumerate::{FamilyId, Object, Strategy};

fn as_set(family: FamilyId, n: usize, strategy: Strategy) -> BTreeSet<String> {
    let mut listed = Vec::new();
    for object in family.stream(n, Some(strategy)).unwrap() {
        match object {
            Object::Matrix(p) => listed.push(p.to_string()),
            other => panic!("{family} produced {other:?}"),
        }
    }
    let set: BTreeSet<String> = listed.iter().cloned().collect();
    assert_eq!(set.len(), listed.len(), "{family} repeats an object at n = {n}");
    set
}

#[test]
fn filter_and_construction_agree() {
    for family in FamilyId::ALL {
        let strategies = family.strategies();
        if strategies.len() < 2 {
            continue;
        }
        for n in 1..=8 {
            let first = as_set(family, n, strategies[0]);
            for &other in &strategies[1..] {
                assert_eq!(first, as_set(family, n, other), "{family} at n = {n}");
            }
        }
    }
}
