use num_bigint::BigInt;
use proptest::prelude::*;

use partmat::algebra::{q_multinomial, Monomial, TruncatedSeries, Var};
use partmat::maps::{
    cdk_eta, cdk_eta_inverse, double_contract, double_expand_with, natural_fishburn, phi, phi_inv,
    reduce, theta, unreduce,
};
use partmat::objects::{MotzkinStep, MotzkinWord, PartitionMatrix};

/// Column sizes, then a row for every element; rejected unless every row is
/// occupied.
fn matrix() -> impl Strategy<Value = PartitionMatrix> {
    (1usize..=4)
        .prop_flat_map(|dim| proptest::collection::vec(1usize..=3, dim))
        .prop_flat_map(|sizes| {
            let cols: Vec<usize> = sizes
                .iter()
                .enumerate()
                .flat_map(|(c, &s)| std::iter::repeat_n(c + 1, s))
                .collect();
            let rows: Vec<_> = cols.iter().map(|&c| 1..=c).collect();
            (Just(sizes.len()), Just(cols), rows)
        })
        .prop_filter_map("every row occupied", |(dim, cols, rows)| {
            let positions: Vec<_> = rows.into_iter().zip(cols).collect();
            PartitionMatrix::from_positions(dim, &positions).ok()
        })
}

/// Random steps, with a down step at height 0 read as level and the word
/// closed by down steps.
fn motzkin_word() -> impl Strategy<Value = MotzkinWord> {
    proptest::collection::vec(0u8..3, 1..30).prop_map(|codes| {
        let mut height = 0;
        let mut steps = Vec::new();
        for c in codes {
            let step = match (c, height) {
                (0, _) => MotzkinStep::Up,
                (2, h) if h > 0 => MotzkinStep::Down,
                _ => MotzkinStep::Level,
            };
            match step {
                MotzkinStep::Up => height += 1,
                MotzkinStep::Down => height -= 1,
                MotzkinStep::Level => {}
            }
            steps.push(step);
        }
        steps.extend(std::iter::repeat_n(MotzkinStep::Down, height));
        MotzkinWord::new(steps).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig { max_global_rejects: 100_000, ..ProptestConfig::default() })]

    #[test]
    fn text_and_json_round_trip(p in matrix()) {
        prop_assert_eq!(p.to_string().parse::<PartitionMatrix>().unwrap(), p.clone());
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<PartitionMatrix>(&json).unwrap(), p);
    }

    #[test]
    fn theta_is_an_involution(p in matrix()) {
        let image = theta(&p);
        prop_assert_eq!(theta(&image), p.clone());
        prop_assert_eq!(image.n(), p.n());
        if p.is_improper() {
            prop_assert_eq!(image, p);
        } else {
            prop_assert_eq!(p.inv().abs_diff(image.inv()), 1);
        }
    }

    #[test]
    fn reduce_round_trip(p in matrix()) {
        prop_assert_eq!(unreduce(&reduce(&p)), p);
    }

    #[test]
    fn doubling_round_trip(p in matrix(), bits in proptest::collection::vec(any::<bool>(), 4)) {
        let keep = &bits[..p.dim()];
        let q = double_expand_with(&p, keep);
        prop_assert!(q.is_improper());
        let (back, k) = double_contract(&q).unwrap();
        prop_assert_eq!(back, p);
        prop_assert_eq!(&k.0[..], keep);
    }

    #[test]
    fn eta_round_trip(p in matrix()) {
        let e = cdk_eta(&p);
        prop_assert!(e.validate().is_ok());
        if p.n() <= 7 {
            prop_assert_eq!(cdk_eta_inverse(&e), p.clone());
        }
        prop_assert_eq!(natural_fishburn(&p).weight(), p.n() as u64);
    }

    #[test]
    fn phi_on_long_words(m in motzkin_word()) {
        let b = phi_inv(&m);
        prop_assert!(b.is_improper() && b.is_nondecreasing());
        let s = m.stats();
        prop_assert_eq!((b.n(), b.block_count(), b.odd_count()), (s.len, s.comp, s.level));
        prop_assert_eq!(phi(&b).unwrap(), m);
    }

    #[test]
    fn q_multinomial_at_one(parts in proptest::collection::vec(0usize..4, 1..4)) {
        let p = q_multinomial(&parts);
        let total: usize = parts.iter().sum();
        let fact = |k: usize| (1..=k as u64).product::<u64>();
        let expected = parts.iter().fold(fact(total), |acc, &a| acc / fact(a));
        prop_assert_eq!(p.eval_i64(1), BigInt::from(expected));
        prop_assert!(p.coeffs().iter().all(|c| c >= &BigInt::from(0)));
    }

    #[test]
    fn reciprocal_and_root(coeffs in proptest::collection::vec(-3i64..=3, 1..5)) {
        let order = 8;
        let mut s = TruncatedSeries::one(order);
        for (k, &c) in coeffs.iter().enumerate() {
            let mono = Monomial::t_pow(k as u32 + 1).with(Var::X, (k % 2) as u32);
            s.add_term(mono, BigInt::from(c));
        }
        let r = s.reciprocal().unwrap();
        prop_assert_eq!(&r * &s, TruncatedSeries::one(order));
        let square = &s * &s;
        prop_assert_eq!(square.sqrt().unwrap(), s);
    }
}
