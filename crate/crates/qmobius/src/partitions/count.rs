//! Recurrence and generating-function counters, the analytic counterparts of
//! the enumeration oracle. No enumeration limit applies here.

use num::{BigInt, One, Zero};

use crate::arith::divisor_transform;

/// p(0..=n_max) by the Euler pentagonal-number recurrence
/// `p(n) = Σ_{k≥1} (−1)^{k+1} (p(n − k(3k−1)/2) + p(n − k(3k+1)/2))`.
pub fn partition_numbers(n_max: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); n_max + 1];
    p[0] = BigInt::one();
    for n in 1..=n_max {
        let mut acc = BigInt::zero();
        let mut k = 1usize;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            if k % 2 == 1 {
                acc += &p[n - g1];
                if g2 <= n {
                    acc += &p[n - g2];
                }
            } else {
                acc -= &p[n - g1];
                if g2 <= n {
                    acc -= &p[n - g2];
                }
            }
            k += 1;
        }
        p[n] = acc;
    }
    p
}

/// p(n) via the pentagonal recurrence.
pub fn count_partitions(n: u32) -> BigInt {
    partition_numbers(n as usize).pop().unwrap()
}

/// The table `p_a(n)` for `0 ≤ a ≤ a_max`, `0 ≤ n ≤ n_max`, by the
/// recurrence `p_a(n) = p_{a−1}(n−1) + p_a(n−a)` with `p_0(0) = 1`.
pub fn by_parts_table(a_max: usize, n_max: usize) -> Vec<Vec<BigInt>> {
    let mut t = vec![vec![BigInt::zero(); n_max + 1]; a_max + 1];
    t[0][0] = BigInt::one();
    for a in 1..=a_max {
        for n in a..=n_max {
            let v = &t[a - 1][n - 1] + &t[a][n - a];
            t[a][n] = v;
        }
    }
    t
}

/// p_a(n): partitions of `n` into exactly `a` parts, by recurrence.
pub fn count_by_parts(a: u32, n: u32) -> BigInt {
    assert!(a >= 1);
    if a > n {
        return BigInt::zero();
    }
    let t = by_parts_table(a as usize, n as usize);
    t[a as usize][n as usize].clone()
}

/// p̂_a(n) = Σ_{j≥1} p_{aj}(n), by recurrence; equals p(n) for a = 1.
pub fn count_by_parts_hat(a: u32, n: u32) -> BigInt {
    assert!(a >= 1);
    let t = by_parts_table(n as usize, n as usize);
    let mut acc = BigInt::zero();
    let mut parts = a;
    while parts <= n {
        acc += &t[parts as usize][n as usize];
        parts += a;
    }
    acc
}

/// Q(0..=n_max): distinct-part partition counts, as the coefficients of
/// `Π_{n≥1} (1+qⁿ)` computed by direct integer convolution. Entry 0 is 1
/// (the empty partition).
pub fn distinct_counts(n_max: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); n_max + 1];
    c[0] = BigInt::one();
    for part in 1..=n_max {
        for n in (part..=n_max).rev() {
            let add = c[n - part].clone();
            c[n] += add;
        }
    }
    c
}

/// Q̂(0..=n_max) = Σ_{d|n} Q(d): uniform-multiplicity partition counts via
/// the divisor-sum transform of [`distinct_counts`]. Entry 0 is 0.
pub fn uniform_multiplicity_counts(n_max: usize) -> Vec<BigInt> {
    divisor_transform(&distinct_counts(n_max))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn partition_numbers_prefix() {
        let p = partition_numbers(10);
        let expect: Vec<BigInt> = [1i64, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
            .iter()
            .map(|&x| big(x))
            .collect();
        assert_eq!(p, expect);
    }

    #[test]
    fn count_partitions_known_values() {
        assert_eq!(count_partitions(0), big(1));
        assert_eq!(count_partitions(4), big(5));
        assert_eq!(count_partitions(50), big(204_226));
    }

    #[test]
    fn by_parts_base_cases() {
        assert_eq!(count_by_parts(1, 7), big(1));
        assert_eq!(count_by_parts(7, 7), big(1));
        assert_eq!(count_by_parts(2, 4), big(2));
        assert_eq!(count_by_parts(5, 4), big(0));
    }

    #[test]
    fn by_parts_recurrence_consistency() {
        // p_a(n) = p_{a−1}(n−1) + p_a(n−a) across the whole 1..=100 range
        let t = by_parts_table(100, 100);
        for a in 1..=100usize {
            for n in a..=100usize {
                assert_eq!(t[a][n], &t[a - 1][n - 1] + &t[a][n - a], "a={a} n={n}");
            }
        }
    }

    #[test]
    fn by_parts_rows_sum_to_partition_count() {
        let t = by_parts_table(30, 30);
        let p = partition_numbers(30);
        for n in 1..=30usize {
            let mut acc = BigInt::zero();
            for row in t.iter().skip(1) {
                acc += &row[n];
            }
            assert_eq!(acc, p[n]);
        }
    }

    #[test]
    fn by_parts_hat_equals_partition_count_for_a_one() {
        for n in 1..=40u32 {
            assert_eq!(count_by_parts_hat(1, n), count_partitions(n));
        }
        assert_eq!(count_by_parts_hat(2, 6), big(6));
        assert_eq!(count_by_parts_hat(7, 6), big(0));
    }

    #[test]
    fn distinct_counts_prefix() {
        let q = distinct_counts(10);
        let expect: Vec<BigInt> = [1i64, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10]
            .iter()
            .map(|&x| big(x))
            .collect();
        assert_eq!(q, expect);
    }

    #[test]
    fn uniform_multiplicity_counts_prefix() {
        let qhat = uniform_multiplicity_counts(6);
        assert_eq!(
            &qhat[1..],
            &[big(1), big(2), big(3), big(4), big(4), big(8)]
        );
    }
}
