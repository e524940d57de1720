use std::sync::OnceLock;

use num_bigint::BigInt;

use crate::algebra::Poly;

const RAW: &str = include_str!("../../data/golden.txt");

/// Reference values shipped with the crate.
#[derive(Clone, Debug)]
pub struct Golden {
    /// `s_table[n - 1]` is `S_n(q)`.
    pub s_table: Vec<Poly>,
    /// `S_n(0)`.
    pub fishburn: Vec<u64>,
    /// `S_n(-1)`.
    pub signed: Vec<u64>,
    pub motzkin: Vec<u64>,
}

fn numbers(text: &str) -> Vec<u64> {
    text.split_whitespace()
        .map(|v| v.parse().expect("golden data holds integers"))
        .collect()
}

fn parse() -> Golden {
    let mut golden = Golden {
        s_table: Vec::new(),
        fishburn: Vec::new(),
        signed: Vec::new(),
        motzkin: Vec::new(),
    };
    for line in RAW.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, values) = line
            .split_once(':')
            .expect("golden lines are `key: values`");
        let values = numbers(values);
        match key.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["s", n] => {
                let n: usize = n.parse().expect("row index");
                assert_eq!(n, golden.s_table.len() + 1, "rows in order");
                golden.s_table.push(Poly::new(
                    'q',
                    values.into_iter().map(BigInt::from).collect(),
                ));
            }
            ["fishburn"] => golden.fishburn = values,
            ["signed"] => golden.signed = values,
            ["motzkin"] => golden.motzkin = values,
            other => panic!("unknown golden key {other:?}"),
        }
    }
    golden
}

pub fn golden() -> &'static Golden {
    static CELL: OnceLock<Golden> = OnceLock::new();
    CELL.get_or_init(parse)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        let g = golden();
        assert_eq!(g.s_table.len(), 8);
        assert_eq!(g.s_table[3].to_string(), "15+7q+2q²");
        assert_eq!(g.fishburn.len(), 8);
        assert_eq!(g.signed.len(), 8);
        assert_eq!(g.motzkin.len(), 8);
    }
}
