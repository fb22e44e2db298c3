//! Series builders for the partition generating functions: `P(q)` and the
//! parameterized families `P_a`, `P̂_a`, `B_a`, `B̂_a`, plus `F_Q`, `F_Q̂`
//! and the rational-exponent product `Ψ(Q;q) = Π (1−qⁿ)^{Q(n)/n}`.

use num::BigInt;

use super::count::{distinct_counts, uniform_multiplicity_counts};
use crate::fps::{int, pochhammer, prod_pow, Coefficient, ExponentSequence, Series};
use crate::{Error, Result};

fn require_positive(a: u32) -> Result<()> {
    if a < 1 {
        Err(Error::Domain("family parameter a must be ≥ 1".into()))
    } else {
        Ok(())
    }
}

fn series_from_bigints(values: &[BigInt]) -> Series {
    Series::from_coeffs(
        values
            .iter()
            .map(|v| Coefficient::from_integer(v.clone()))
            .collect(),
    )
}

/// `q^{n² + an} / (q)_n²`, the Durfee-square/rectangle building block.
fn durfee_term(n: u32, a: u32, order: usize) -> Series {
    let shift = (n as usize) * ((n + a) as usize);
    let inv = Series::one(order)
        .div(&pochhammer(n, order))
        .expect("(q)_n has constant term 1");
    (&inv * &inv).shifted(shift)
}

/// `P(q) = Σ p(n)qⁿ` via the Durfee-square identity `Σ_{n≥0} q^{n²}/(q)_n²`.
pub fn series_p(order: usize) -> Series {
    let mut out = Series::zero(order);
    let mut n = 0u32;
    while (n as usize) * (n as usize) <= order {
        out = &out + &durfee_term(n, 0, order);
        n += 1;
    }
    out
}

/// `P_a(q) = Σ p_a(n)qⁿ = q^a/(q)_a`, the exactly-`a`-parts generating
/// function.
pub fn series_pa(a: u32, order: usize) -> Result<Series> {
    require_positive(a)?;
    let inv = Series::one(order)
        .div(&pochhammer(a, order))
        .expect("(q)_a has constant term 1");
    Ok(inv.shifted(a as usize))
}

/// `P̂_a(q) = Σ_{j≥1} P_{aj}(q)`; terms with `aj > order` start beyond the
/// truncation and are omitted.
pub fn series_pa_hat(a: u32, order: usize) -> Result<Series> {
    require_positive(a)?;
    let mut out = Series::zero(order);
    let mut b = a;
    while (b as usize) <= order {
        out = &out + &series_pa(b, order)?;
        b += a;
    }
    Ok(out)
}

/// `F_Q(q) = Σ_{n≥1} Q(n)qⁿ`, distinct-part counts.
pub fn series_fq(order: usize) -> Series {
    let mut q = distinct_counts(order);
    q[0] = BigInt::from(0); // the sum starts at n = 1
    series_from_bigints(&q)
}

/// `F_Q̂(q) = Σ_{n≥1} Q̂(n)qⁿ`, uniform-multiplicity counts.
pub fn series_fq_hat(order: usize) -> Series {
    series_from_bigints(&uniform_multiplicity_counts(order))
}

/// `Ψ(Q;q) = Π_{n≥1} (1−qⁿ)^{Q(n)/n}`.
pub fn series_psi_q(order: usize) -> Series {
    let q = distinct_counts(order);
    let seq =
        ExponentSequence::new(move |n| Coefficient::new(q[n as usize].clone(), BigInt::from(n)));
    prod_pow(&seq, order)
}

/// `B_a(q) = Σ_{n≥1} q^{n²+an}/(q)_n²`.
pub fn series_b(a: u32, order: usize) -> Result<Series> {
    require_positive(a)?;
    let mut out = Series::zero(order);
    let mut n = 1u32;
    while (n as usize) * ((n + a) as usize) <= order {
        out = &out + &durfee_term(n, a, order);
        n += 1;
    }
    Ok(out)
}

/// `B̂_a(q) = Σ_{n≥1} q^{n²+an}/((q)_n²(1−q^{an}))`.
pub fn series_b_hat(a: u32, order: usize) -> Result<Series> {
    require_positive(a)?;
    let mut out = Series::zero(order);
    let mut n = 1u32;
    while (n as usize) * ((n + a) as usize) <= order {
        let geom = &Series::one(order) - &Series::monomial(int(1), (a * n) as usize, order);
        let term = durfee_term(n, a, order)
            .div(&geom)
            .expect("1 − q^{an} has constant term 1");
        out = &out + &term;
        n += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fps::rat;
    use crate::partitions::Oracle;

    #[test]
    fn series_p_matches_enumeration_prefix() {
        assert_eq!(series_p(6), Series::from_ints(&[1, 1, 2, 3, 5, 7, 11]));
    }

    #[test]
    fn series_pa_one_is_geometric() {
        // P₁(q) = q/(1−q)
        assert_eq!(
            series_pa(1, 5).unwrap(),
            Series::from_ints(&[0, 1, 1, 1, 1, 1])
        );
    }

    #[test]
    fn series_pa_rejects_zero() {
        assert!(series_pa(0, 5).is_err());
        assert!(series_pa_hat(0, 5).is_err());
        assert!(series_b(0, 5).is_err());
        assert!(series_b_hat(0, 5).is_err());
    }

    #[test]
    fn series_pa_beyond_order_is_zero() {
        assert_eq!(series_pa(7, 5).unwrap(), Series::zero(5));
    }

    #[test]
    fn series_psi_q_golden_prefix() {
        let expect = Series::from_coeffs(vec![
            int(1),
            int(-1),
            rat(-1, 2),
            rat(-1, 6),
            rat(1, 24),
            rat(43, 120),
            rat(-233, 720),
        ]);
        assert_eq!(series_psi_q(6), expect);
    }

    #[test]
    fn series_fq_hat_golden_prefix() {
        assert_eq!(series_fq_hat(6), Series::from_ints(&[0, 1, 2, 3, 4, 4, 8]));
    }

    #[test]
    fn series_fq_prefix() {
        assert_eq!(series_fq(6), Series::from_ints(&[0, 1, 1, 2, 2, 3, 4]));
    }

    #[test]
    fn series_b_prefix_matches_direct_expansion() {
        // b₁(1..6) = 0,1,2,3,4,6
        assert_eq!(
            series_b(1, 6).unwrap(),
            Series::from_ints(&[0, 0, 1, 2, 3, 4, 6])
        );
    }

    #[test]
    fn series_b_hat_prefix() {
        let bhat = series_b_hat(1, 6).unwrap();
        assert_eq!(bhat.coeff(2), int(1));
        assert_eq!(bhat.coeff(6), int(16));
    }

    #[test]
    fn series_b_agrees_with_durfee_enumeration() {
        let oracle = Oracle::default();
        for a in 1..=3u32 {
            let series = series_b(a, 18).unwrap();
            let hat = series_b_hat(a, 18).unwrap();
            for n in 1..=18u32 {
                let combinatorial = oracle.count_durfee(a, n).unwrap();
                assert_eq!(
                    series.coeff(n as usize),
                    Coefficient::from_integer(combinatorial),
                    "b_{a}({n})"
                );
                let combinatorial_hat = oracle.count_durfee_hat(a, n).unwrap();
                assert_eq!(
                    hat.coeff(n as usize),
                    Coefficient::from_integer(combinatorial_hat),
                    "b̂_{a}({n})"
                );
            }
        }
    }

    #[test]
    fn series_pa_agrees_with_by_parts_counts() {
        let oracle = Oracle::default();
        for a in 1..=4u32 {
            let series = series_pa(a, 16).unwrap();
            let hat = series_pa_hat(a, 16).unwrap();
            for n in 1..=16u32 {
                assert_eq!(
                    series.coeff(n as usize),
                    Coefficient::from_integer(oracle.count_by_parts(a, n).unwrap()),
                    "p_{a}({n})"
                );
                assert_eq!(
                    hat.coeff(n as usize),
                    Coefficient::from_integer(oracle.count_by_parts_hat(a, n).unwrap()),
                    "p̂_{a}({n})"
                );
            }
        }
    }
}
