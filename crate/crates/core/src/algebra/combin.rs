//! Stirling and Eulerian numbers, q-multinomials and the polynomials built
//! from them.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::Poly;
use crate::enumerate::{fishburn_matrices, ippm, partition_matrices, pattern_class, IppmStrategy};

/// Stirling numbers of the second kind, `S(n, m) = m S(n-1, m) + S(n-1, m-1)`.
pub fn stirling2(n: usize, m: usize) -> BigInt {
    if m > n {
        return BigInt::zero();
    }
    // row[j] = S(i, j) for the current i
    let mut row = vec![BigInt::zero(); m + 1];
    row[0] = BigInt::one();
    for _ in 1..=n {
        for j in (1..=m).rev() {
            row[j] = &row[j] * BigInt::from(j) + &row[j - 1];
        }
        row[0] = BigInt::zero();
    }
    row[m].clone()
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// `E_n(x) = sum_j j! S(n, j) (x - 1)^(n - j)`.
pub fn eulerian_poly(n: usize) -> Poly {
    let x_minus_one = Poly::from_i64('x', &[-1, 1]);
    (1..=n).fold(Poly::zero('x'), |acc, j| {
        let c = factorial(j) * stirling2(n, j);
        &acc + &(&Poly::constant('x', c) * &x_minus_one.pow((n - j) as u32))
    })
}

/// `[k]_q = 1 + q + ... + q^(k-1)`.
pub fn q_integer(k: usize) -> Poly {
    Poly::new('q', vec![BigInt::one(); k])
}

pub fn q_factorial(k: usize) -> Poly {
    (1..=k).fold(Poly::one('q'), |acc, i| &acc * &q_integer(i))
}

/// `[a_1 + .. + a_k]_q! / ([a_1]_q! ... [a_k]_q!)`. Each division is exact;
/// a remainder means a bug and panics.
pub fn q_multinomial(parts: &[usize]) -> Poly {
    let total: usize = parts.iter().sum();
    parts.iter().fold(q_factorial(total), |acc, &a| {
        acc.div_exact(&q_factorial(a))
            .expect("q-factorials of the parts divide the q-factorial of the sum")
    })
}

/// `S_n(q)` as the sum over Fishburn matrices of the product of column
/// q-multinomials.
pub fn s_poly_fishburn(n: usize) -> Poly {
    let Ok(all) = fishburn_matrices(n) else {
        return Poly::zero('q');
    };
    all.fold(Poly::zero('q'), |acc, m| {
        let term = (1..=m.dim()).fold(Poly::one('q'), |p, c| {
            let column: Vec<usize> = m.column(c).iter().map(|&v| v as usize).collect();
            &p * &q_multinomial(&column)
        });
        &acc + &term
    })
}

/// `S_n(q)` as the sum of `q^inv` over partition matrices.
pub fn s_poly_inv(n: usize) -> Poly {
    let mut counts: Vec<u64> = Vec::new();
    if let Ok(all) = partition_matrices(n) {
        for p in all {
            let k = p.inv();
            if counts.len() <= k {
                counts.resize(k + 1, 0);
            }
            counts[k] += 1;
        }
    }
    Poly::new('q', counts.into_iter().map(BigInt::from).collect())
}

/// `sum_{j=1}^{n+1} (j-1)! S(n+2-j, j) z^(n+1-j)`.
pub fn dist_rhs_poly(n: usize) -> Poly {
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for j in 1..=n + 1 {
        coeffs[n + 1 - j] += factorial(j - 1) * stirling2(n + 2 - j, j);
    }
    Poly::new('z', coeffs)
}

fn tally(var: char, values: impl Iterator<Item = usize>) -> Poly {
    let mut counts: Vec<u64> = Vec::new();
    for k in values {
        if counts.len() <= k {
            counts.resize(k + 1, 0);
        }
        counts[k] += 1;
    }
    Poly::new(var, counts.into_iter().map(BigInt::from).collect())
}

/// `sum z^dist` over the pattern class of length `n`, by enumeration.
pub fn dist_poly(n: usize) -> Poly {
    match pattern_class(n) {
        Ok(all) => tally('z', all.map(|e| e.dist())),
        Err(_) => Poly::zero('z'),
    }
}

/// `sum z^v` over improper partition matrices of weight `n`, by enumeration.
pub fn v_poly(n: usize) -> Poly {
    match ippm(n, IppmStrategy::Filter) {
        Ok(all) => tally('z', all.map(|q| q.semi_weight())),
        Err(_) => Poly::zero('z'),
    }
}

/// `sum x^dim` over partition matrices of weight `n`, by enumeration.
pub fn dim_poly(n: usize) -> Poly {
    match partition_matrices(n) {
        Ok(all) => tally('x', all.map(|p| p.dim())),
        Err(_) => Poly::zero('x'),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stirling_values() {
        assert_eq!(stirling2(1, 1), BigInt::from(1));
        assert_eq!(stirling2(3, 2), BigInt::from(3));
        assert_eq!(stirling2(5, 3), BigInt::from(25));
        assert_eq!(stirling2(0, 0), BigInt::from(1));
        assert_eq!(stirling2(3, 0), BigInt::from(0));
        assert_eq!(stirling2(2, 3), BigInt::from(0));
        assert!((0..=20).all(|n| stirling2(n, n) == BigInt::from(1)));
    }

    #[test]
    fn eulerian_small() {
        assert_eq!(eulerian_poly(1), Poly::from_i64('x', &[1]));
        assert_eq!(eulerian_poly(2), Poly::from_i64('x', &[1, 1]));
        assert_eq!(eulerian_poly(4), Poly::from_i64('x', &[1, 11, 11, 1]));
        let x = Poly::from_i64('x', &[0, 1]);
        for n in 1..=6 {
            assert_eq!(dim_poly(n), &x * &eulerian_poly(n), "n = {n}");
        }
    }

    #[test]
    fn q_multinomial_values() {
        assert_eq!(q_multinomial(&[1, 1]), Poly::from_i64('q', &[1, 1]));
        assert_eq!(q_multinomial(&[4]), Poly::one('q'));
        assert_eq!(q_multinomial(&[2, 1]), Poly::from_i64('q', &[1, 1, 1]));
        assert_eq!(q_multinomial(&[2, 0, 1]), Poly::from_i64('q', &[1, 1, 1]));
        let p = q_multinomial(&[2, 3, 1]);
        assert_eq!(p.eval_i64(1), BigInt::from(60));
        assert_eq!(p.eval_i64(0), BigInt::from(1));
    }

    #[test]
    fn s_polynomials_agree() {
        assert_eq!(s_poly_inv(3), Poly::from_i64('q', &[5, 1]));
        assert_eq!(s_poly_fishburn(4), Poly::from_i64('q', &[15, 7, 2]));
        for n in 1..=6 {
            assert_eq!(s_poly_fishburn(n), s_poly_inv(n), "n = {n}");
        }
    }

    #[test]
    fn dist_polynomials() {
        assert_eq!(dist_rhs_poly(1), Poly::from_i64('z', &[0, 1]));
        assert_eq!(dist_rhs_poly(3), Poly::from_i64('z', &[0, 0, 3, 1]));
        for n in 1..=6 {
            assert_eq!(dist_poly(n), dist_rhs_poly(n));
            assert_eq!(v_poly(n), dist_rhs_poly(n));
        }
    }
}
