//! Generating-function identities, each as an enumerated series set against
//! an independent evaluation.

use num_bigint::BigInt;
use num_traits::One;

use super::combin::{dist_rhs_poly, factorial, stirling2};
use super::poly::Poly;
use super::series::{Monomial, SeriesError, TruncatedSeries, Var};
use crate::enumerate::{
    dyck_words, grid_paths, ippm, motzkin_words, nondecreasing, partition_matrices, IppmStrategy,
    NondecreasingStrategy,
};

fn n_of(order: u32) -> impl Iterator<Item = usize> {
    1..=order as usize
}

/// `G = 1/(1 - mu3 - mu1 mu2 G)`, then `F = 1/(1 - mu3 omega - mu1 mu2 nu G)`.
///
/// `mu1 mu2` and `mu3` must have no `t`-free part, so each round of the
/// fixed-point iteration fixes at least one more power of `t`.
pub fn motzkin_f(
    mu1: &TruncatedSeries,
    mu2: &TruncatedSeries,
    mu3: &TruncatedSeries,
    nu: &TruncatedSeries,
    omega: &TruncatedSeries,
) -> Result<TruncatedSeries, SeriesError> {
    let order = mu1.order();
    let one = TruncatedSeries::one(order);
    let mu12 = mu1 * mu2;
    let mut g = one.clone();
    for _ in 0..=order + 1 {
        let next = (&(&one - mu3) - &(&mu12 * &g)).reciprocal()?;
        if next == g {
            break;
        }
        g = next;
    }
    let denominator = &(&one - &(mu3 * omega)) - &(&(&mu12 * nu) * &g);
    denominator.reciprocal()
}

fn var(order: u32, v: Var) -> TruncatedSeries {
    TruncatedSeries::var(order, v)
}

fn t_mono(t: usize) -> Monomial {
    Monomial::t_pow(t as u32)
}

/// `sum x^comp y^level t^len` over Motzkin words of length `1..=order`.
pub fn motzkin_stat_enumerated(order: u32) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    for n in n_of(order) {
        for w in motzkin_words(n).expect("n >= 1") {
            let st = w.stats();
            let m = t_mono(n)
                .with(Var::X, st.comp as u32)
                .with(Var::Y, st.level as u32);
            s.add_term(m, BigInt::one());
        }
    }
    s
}

/// `F(t, t, yt, x, x) - 1`.
pub fn motzkin_stat_from_f(order: u32) -> Result<TruncatedSeries, SeriesError> {
    let t = TruncatedSeries::t(order);
    let x = var(order, Var::X);
    let yt = &var(order, Var::Y) * &t;
    let f = motzkin_f(&t, &t, &yt, &x, &x)?;
    Ok(&f - &TruncatedSeries::one(order))
}

/// Result of comparing two or more evaluations of one series.
#[derive(Clone, Debug)]
pub struct SeriesCheck {
    /// The enumerated series.
    pub series: TruncatedSeries,
    /// Named differences that must all vanish.
    pub residuals: Vec<(&'static str, TruncatedSeries)>,
}

impl SeriesCheck {
    pub fn passed(&self) -> bool {
        self.residuals.iter().all(|(_, r)| r.is_zero())
    }

    /// First residual that does not vanish.
    pub fn first_failure(&self) -> Option<&(&'static str, TruncatedSeries)> {
        self.residuals.iter().find(|(_, r)| !r.is_zero())
    }
}

/// Motzkin statistics by enumeration and by the continued fraction.
pub fn motzkin_stat_series(order: u32) -> Result<SeriesCheck, SeriesError> {
    let series = motzkin_stat_enumerated(order);
    let by_f = motzkin_stat_from_f(order)?;
    Ok(SeriesCheck {
        residuals: vec![("enumeration - continued fraction", &series - &by_f)],
        series,
    })
}

/// `sum x^blk y^odd t^w` over nondecreasing improper matrices, by
/// enumeration.
pub fn ndippm_enumerated(order: u32) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    for n in n_of(order) {
        for b in nondecreasing(n, true, NondecreasingStrategy::Paths).expect("n >= 1") {
            let m = t_mono(n)
                .with(Var::X, b.block_count() as u32)
                .with(Var::Y, b.odd_count() as u32);
            s.add_term(m, BigInt::one());
        }
    }
    s
}

fn int(order: u32, c: i64) -> TruncatedSeries {
    TruncatedSeries::constant(order, c)
}

/// The closed form for nondecreasing improper matrices, denominator cleared:
/// `den * E - num`, next to the substituted continued fraction and the
/// Motzkin side.
pub fn ndippm_gf_check(order: u32) -> Result<SeriesCheck, SeriesError> {
    let series = ndippm_enumerated(order);
    let t = TruncatedSeries::t(order);
    let x = var(order, Var::X);
    let y = var(order, Var::Y);
    let one = TruncatedSeries::one(order);
    let yt = &y * &t;
    let t2 = &t * &t;
    let x2 = &x * &x;

    let root = (&(&(&one - &yt) * &(&one - &yt)) - &t2.scale(&BigInt::from(4))).sqrt()?;
    let numerator = &(&(&(&x + &(&x * &yt)) - &(&(&x2 * &yt) * &int(order, 2)))
        - &(&(&x2 * &t2) * &int(order, 2)))
        - &(&x * &root);
    let denominator = &(&(&(&int(order, 2) - &x.scale(&BigInt::from(2)))
        - &(&x * &yt).scale(&BigInt::from(2)))
        + &(&x2 * &yt).scale(&BigInt::from(2)))
        + &(&x2 * &t2).scale(&BigInt::from(2));
    let closed = &(&denominator * &series) - &numerator;

    let inv = (&one - &t2).reciprocal()?;
    let a = &(&yt + &t2) * &inv;
    let b = &t2 * &inv;
    let by_f = &(&x * &a) * &motzkin_f(&b, &a, &a, &one, &x)?;

    let motzkin = motzkin_stat_from_f(order)?;
    Ok(SeriesCheck {
        residuals: vec![
            ("closed form, denominator cleared", closed),
            (
                "enumeration - substituted continued fraction",
                &series - &by_f,
            ),
            ("enumeration - Motzkin statistics", &series - &motzkin),
        ],
        series,
    })
}

/// `sum x^blk t^w` over nondecreasing matrices, by enumeration.
pub fn ndpm_enumerated(order: u32) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    for n in n_of(order) {
        for a in nondecreasing(n, false, NondecreasingStrategy::Paths).expect("n >= 1") {
            s.add_term(
                t_mono(n).with(Var::X, a.block_count() as u32),
                BigInt::one(),
            );
        }
    }
    s
}

/// `sum x^touch t^semilen` over Dyck words, by enumeration.
pub fn dyck_touch_enumerated(order: u32) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    for n in n_of(order) {
        for w in dyck_words(n).expect("n >= 1") {
            s.add_term(t_mono(n).with(Var::X, w.touch() as u32), BigInt::one());
        }
    }
    s
}

/// The closed form for nondecreasing matrices, denominator cleared, with the
/// Dyck side and both continued-fraction forms.
pub fn ndpm_gf_check(order: u32) -> Result<SeriesCheck, SeriesError> {
    let series = ndpm_enumerated(order);
    let t = TruncatedSeries::t(order);
    let x = var(order, Var::X);
    let one = TruncatedSeries::one(order);
    let x2 = &x * &x;
    let two = BigInt::from(2);

    let root = (&one - &t.scale(&BigInt::from(4))).sqrt()?;
    let numerator = &(&x - &(&x2 * &t).scale(&two)) - &(&x * &root);
    let denominator = &(&int(order, 2) - &x.scale(&two)) + &(&x2 * &t).scale(&two);
    let closed = &(&denominator * &series) - &numerator;

    let c = &t * &(&one - &t).reciprocal()?;
    let by_f = &(&x * &c) * &motzkin_f(&c, &c, &c, &one, &x)?;
    let zero = TruncatedSeries::zero(order);
    let dyck_f = &motzkin_f(&t, &one, &zero, &x, &one)? - &one;
    let dyck = dyck_touch_enumerated(order);
    Ok(SeriesCheck {
        residuals: vec![
            ("closed form, denominator cleared", closed),
            (
                "enumeration - substituted continued fraction",
                &series - &by_f,
            ),
            ("enumeration - Dyck touches", &series - &dyck),
            ("Dyck touches - continued fraction", &dyck - &dyck_f),
        ],
        series,
    })
}

/// Both sides of the doubling identity:
/// `sum_IPPM z^v t^w = sum_PM z^w t^(2w) (1 + 1/t)^dim`, up to `t^order`.
pub fn lemma31_check(order: u32) -> SeriesCheck {
    let mut lhs = TruncatedSeries::zero(order);
    for n in n_of(order) {
        for q in ippm(n, IppmStrategy::Filter).expect("n >= 1") {
            lhs.add_term(
                t_mono(n).with(Var::Z, q.semi_weight() as u32),
                BigInt::one(),
            );
        }
    }
    let mut rhs = TruncatedSeries::zero(order);
    // t^(2m) (1 + 1/t)^dim = sum_k C(dim, k) t^(2m - k), and 2m - dim >= m
    for m in n_of(order) {
        for p in partition_matrices(m).expect("m >= 1") {
            let dim = p.dim();
            let mut binom = BigInt::one();
            for k in 0..=dim {
                let exp = 2 * m - k;
                rhs.add_term(t_mono(exp).with(Var::Z, m as u32), binom.clone());
                binom = binom * BigInt::from(dim - k) / BigInt::from(k + 1);
            }
        }
    }
    SeriesCheck {
        residuals: vec![("left side - right side", &lhs - &rhs)],
        series: lhs,
    }
}

/// The grid-path sum with every step and diagonal count tracked, against
/// `F` with each step weight multiplied by `t`. Paths up to `order` steps.
pub fn path_sum_check(order: u32) -> Result<SeriesCheck, SeriesError> {
    let mut s = TruncatedSeries::zero(order);
    for dim in 1..=order as usize + 1 {
        for path in grid_paths(dim).expect("dim >= 1") {
            let steps = path.steps().len();
            if steps > order as usize {
                continue;
            }
            let st = path.stats();
            let m = t_mono(steps)
                .with(Var::Mu1, st.south as u32)
                .with(Var::Mu2, st.east as u32)
                .with(Var::Mu3, st.south_east as u32)
                .with(Var::Nu, st.diag_south as u32)
                .with(Var::Omega, st.diag_south_east as u32);
            s.add_term(m, BigInt::one());
        }
    }
    let t = TruncatedSeries::t(order);
    let f = motzkin_f(
        &(&t * &var(order, Var::Mu1)),
        &(&t * &var(order, Var::Mu2)),
        &(&t * &var(order, Var::Mu3)),
        &var(order, Var::Nu),
        &var(order, Var::Omega),
    )?;
    Ok(SeriesCheck {
        residuals: vec![("path sum - continued fraction", &s - &f)],
        series: s,
    })
}

/// The Stirling rearrangement behind the distinct-value formula:
/// `RHS(N) = sum_{j<N} j! S(N-j, j) z^(N-j) + sum_{j<=N} j! S(N+1-j, j) z^(N+1-j)`.
pub fn telescoping_residual(big_n: usize) -> Poly {
    let left = dist_rhs_poly(big_n);
    let mut right = Poly::zero('z');
    for j in 1..big_n {
        let c = factorial(j) * stirling2(big_n - j, j);
        right = &right + &Poly::monomial('z', c, big_n - j);
    }
    for j in 1..=big_n {
        let c = factorial(j) * stirling2(big_n + 1 - j, j);
        right = &right + &Poly::monomial('z', c, big_n + 1 - j);
    }
    &left - &right
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::series::grade_text;

    #[test]
    fn motzkin_coefficients() {
        let check = motzkin_stat_series(6).unwrap();
        assert!(check.passed());
        assert_eq!(grade_text(&check.series, 1), "xy");
        assert_eq!(grade_text(&check.series, 3), "xy+2x²y+x³y³");
        let counts: Vec<i64> = check
            .series
            .t_coefficients_at_one()
            .iter()
            .map(|c| c.try_into().unwrap())
            .collect();
        assert_eq!(counts, vec![0, 1, 2, 4, 9, 21, 51]);
    }

    #[test]
    fn closed_forms_small() {
        let ndippm = ndippm_gf_check(6).unwrap();
        assert!(ndippm.passed(), "{:?}", ndippm.first_failure());
        let ndpm = ndpm_gf_check(6).unwrap();
        assert!(ndpm.passed(), "{:?}", ndpm.first_failure());
        assert_eq!(grade_text(&ndpm.series, 3), "2x+2x²+x³");
    }

    #[test]
    fn lemma_small() {
        let check = lemma31_check(4);
        assert!(check.passed());
        assert_eq!(grade_text(&check.series, 1), "z");
        assert_eq!(grade_text(&check.series, 3), "3z²+z³");
    }

    #[test]
    fn path_sum_small() {
        assert!(path_sum_check(5).unwrap().passed());
    }

    #[test]
    fn telescoping() {
        for n in 1..=12 {
            assert!(telescoping_residual(n).is_zero(), "N = {n}");
        }
    }
}
