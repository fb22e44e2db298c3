use std::collections::BTreeMap;
use std::time::Instant;

use num::{BigInt, One, Zero};

use super::report::{compare_series, compare_tables, Mismatch, VerificationReport};
use crate::arith::{divisor_transform, family_invert, mobius, mobius_invert};
use crate::fps::{int, log_deriv_of_product, prod_pow, Coefficient, ExponentSequence, Series};
use crate::partitions::{
    by_parts_table, distinct_counts, durfee_profile, series_b, series_b_hat, series_p, series_pa,
    series_pa_hat, Oracle,
};

fn report(
    name: &str,
    params: BTreeMap<String, String>,
    order: u32,
    mismatches: Vec<Mismatch>,
    combinatorial_limit: Option<u32>,
    started: Instant,
) -> VerificationReport {
    VerificationReport {
        name: name.to_string(),
        params,
        order,
        mismatches,
        combinatorial_limit,
        error: None,
        elapsed: started.elapsed(),
    }
}

fn a_params(a: u32) -> BTreeMap<String, String> {
    BTreeMap::from([("a".to_string(), a.to_string())])
}

/// Checks Lemma-style log-derivative agreement for one exponent sequence:
/// `logDerivative(Π (1−qⁿ)^{a(n)})`, computed through exp/log and series
/// division, against the direct divisor-sum series `−Σ_n Σ_{d|n} a(d)d qⁿ`.
pub fn verify_lemma1(seq: &ExponentSequence, label: &str, order: u32) -> VerificationReport {
    let started = Instant::now();
    let lhs = prod_pow(seq, order as usize)
        .log_derivative()
        .expect("products of (1−qⁿ)^a start at 1");
    let rhs = log_deriv_of_product(seq, order as usize);
    let mut mismatches = Vec::new();
    compare_series(
        "log-derivative of product vs divisor sums",
        &lhs,
        &rhs,
        order,
        &mut mismatches,
    );
    let params = BTreeMap::from([("sequence".to_string(), label.to_string())]);
    report("lemma1", params, order, mismatches, None, started)
}

/// Input tables for the Ψ(Q;q) identity check, exposed so tests can corrupt
/// entries and watch the verifier catch it.
pub struct Theorem1Inputs {
    /// Q(n), indexed by n (entry 0 unused by the claims).
    pub distinct: Vec<BigInt>,
    /// Q̂(n), indexed by n: counted by enumeration up to
    /// `combinatorial_limit`, divisor-transformed from `distinct` beyond.
    pub uniform: Vec<BigInt>,
    pub combinatorial_limit: u32,
}

pub fn theorem1_inputs(order: u32, oracle: &Oracle) -> Theorem1Inputs {
    let distinct = distinct_counts(order as usize);
    let mut uniform = divisor_transform(&distinct);
    let combinatorial_limit = order.min(oracle.limit());
    for n in 1..=combinatorial_limit {
        uniform[n as usize] = oracle
            .count_uniform_multiplicity(n)
            .expect("n is within the oracle limit");
    }
    Theorem1Inputs {
        distinct,
        uniform,
        combinatorial_limit,
    }
}

/// Both claims of the Ψ(Q;q) identity:
/// (i) `q·Ψ′(Q;q)/Ψ(Q;q) = −F_Q̂(q)` coefficientwise, with the left side
/// going through the product/exp/division route and the right side through
/// counting; (ii) `Q(n) = Σ_{d|n} μ(d)·Q̂(n/d)`.
pub fn check_theorem1(inputs: &Theorem1Inputs, order: u32) -> VerificationReport {
    let started = Instant::now();
    let mut mismatches = Vec::new();

    let q_table = inputs.distinct.clone();
    let exponents = ExponentSequence::new(move |n| {
        Coefficient::new(q_table[n as usize].clone(), BigInt::from(n))
    });
    let psi = prod_pow(&exponents, order as usize);
    let lhs = psi.log_derivative().expect("Ψ(Q;q) has constant term 1");
    let rhs = -&Series::from_coeffs(
        inputs.uniform[..=order as usize]
            .iter()
            .map(|v| Coefficient::from_integer(v.clone()))
            .collect(),
    );
    compare_series("q·dΨ/dq / Ψ vs −F_Q̂", &lhs, &rhs, order, &mut mismatches);

    let recovered = mobius_invert(&inputs.uniform);
    compare_tables(
        "Möbius inversion of Q̂ vs Q",
        &recovered,
        &inputs.distinct,
        order,
        &mut mismatches,
    );

    report(
        "theorem1",
        BTreeMap::new(),
        order,
        mismatches,
        Some(inputs.combinatorial_limit),
        started,
    )
}

pub fn verify_theorem1(order: u32, oracle: &Oracle) -> VerificationReport {
    check_theorem1(&theorem1_inputs(order, oracle), order)
}

/// Input tables for the exactly-`a`-parts identities.
pub struct Theorem2Inputs {
    /// p_b(n) recurrence table, `b, n ≤ order`.
    pub by_parts: Vec<Vec<BigInt>>,
    /// p̂_b(n) = Σ_j p_{bj}(n), materialized separately.
    pub by_parts_hat: Vec<Vec<BigInt>>,
}

pub fn theorem2_inputs(order: u32) -> Theorem2Inputs {
    let order = order as usize;
    let by_parts = by_parts_table(order, order);
    let mut by_parts_hat = vec![vec![BigInt::zero(); order + 1]; order + 1];
    for (b, row) in by_parts_hat.iter_mut().enumerate().skip(1) {
        for (n, slot) in row.iter_mut().enumerate().skip(1) {
            let mut acc = BigInt::zero();
            let mut parts = b;
            while parts <= n {
                acc += &by_parts[parts][n];
                parts += b;
            }
            *slot = acc;
        }
    }
    Theorem2Inputs {
        by_parts,
        by_parts_hat,
    }
}

/// Both claims of the parts-count identity for one `a`:
/// (i) `P_a(q) = Σ_n μ(n)·P̂_{an}(q)` with both sides from Pochhammer
/// quotients; (ii) `p_a(n) = Σ_j μ(j)·p̂_{aj}(n)` with both sides from the
/// recurrence tables. Sums truncate once `an` exceeds the order, where every
/// later summand starts beyond `q^order`.
pub fn check_theorem2(a: u32, inputs: &Theorem2Inputs, order: u32) -> VerificationReport {
    let started = Instant::now();
    let mut mismatches = Vec::new();

    match series_pa(a, order as usize) {
        Ok(lhs) => {
            let mut rhs = Series::zero(order as usize);
            let mut n = 1u32;
            while a * n <= order {
                let mu = mobius(n as u64).expect("n ≥ 1");
                if mu != 0 {
                    let hat = series_pa_hat(a * n, order as usize).expect("a·n ≥ 1");
                    rhs = &rhs + &hat.scaled(&int(mu as i64));
                }
                n += 1;
            }
            compare_series("P_a vs Σ μ(n)·P̂_{an}", &lhs, &rhs, order, &mut mismatches);
        }
        Err(e) => {
            return VerificationReport {
                name: "theorem2".into(),
                params: a_params(a),
                order,
                mismatches,
                combinatorial_limit: None,
                error: Some(e.to_string()),
                elapsed: started.elapsed(),
            }
        }
    }

    let hat = &inputs.by_parts_hat;
    let mut recovered = vec![BigInt::zero(); order as usize + 1];
    for n in 1..=order {
        recovered[n as usize] = family_invert(|b, m| hat[b as usize][m as usize].clone(), a, n);
    }
    let direct: Vec<BigInt> = (0..=order as usize)
        .map(|n| {
            if a as usize <= order as usize {
                inputs.by_parts[a as usize][n].clone()
            } else {
                BigInt::zero()
            }
        })
        .collect();
    compare_tables(
        "p_a vs Σ μ(j)·p̂_{aj}",
        &direct,
        &recovered,
        order,
        &mut mismatches,
    );

    report("theorem2", a_params(a), order, mismatches, None, started)
}

pub fn verify_theorem2(a: u32, order: u32) -> VerificationReport {
    check_theorem2(a, &theorem2_inputs(order), order)
}

/// Enumeration-side inputs for the Durfee-rectangle identities.
pub struct Theorem3Inputs {
    /// b_a(N) by enumeration, `N ≤ combinatorial_limit` (index N).
    pub durfee: Vec<BigInt>,
    /// b̂_a(N) by multiplicity-weighted enumeration, same range.
    pub durfee_hat: Vec<BigInt>,
    pub combinatorial_limit: u32,
}

pub fn theorem3_inputs(a: u32, order: u32, oracle: &Oracle) -> Theorem3Inputs {
    let limit = order.min(oracle.limit());
    let mut durfee = vec![BigInt::zero(); limit as usize + 1];
    let mut durfee_hat = vec![BigInt::zero(); limit as usize + 1];
    for n in 1..=limit {
        let (mut b, mut b_hat) = (0u64, 0u64);
        oracle
            .for_each_partition(n, |parts| {
                let profile = durfee_profile(parts);
                if profile.square >= 1 && profile.max_rectangle_height >= a {
                    b += 1;
                }
                b_hat += (profile.max_rectangle_height / a) as u64;
            })
            .expect("n is within the oracle limit");
        durfee[n as usize] = BigInt::from(b);
        durfee_hat[n as usize] = BigInt::from(b_hat);
    }
    Theorem3Inputs {
        durfee,
        durfee_hat,
        combinatorial_limit: limit,
    }
}

/// The three claims of the Durfee-rectangle identity for one `a`:
/// (i) `B̂_a(q) = Σ_j B_{aj}(q)`; (ii) `B_a(q) = Σ_n μ(n)·B̂_{an}(q)`;
/// (iii) within the enumeration limit, the series coefficients equal the
/// combinatorial counts b_a(N) and b̂_a(N). Series sums truncate once the
/// summand's lowest term `q^{1+an}` passes the order.
pub fn check_theorem3(a: u32, inputs: &Theorem3Inputs, order: u32) -> VerificationReport {
    let started = Instant::now();
    let mut mismatches = Vec::new();
    let failed =
        |e: crate::Error, mismatches: Vec<Mismatch>, started: Instant| VerificationReport {
            name: "theorem3".into(),
            params: a_params(a),
            order,
            mismatches,
            combinatorial_limit: None,
            error: Some(e.to_string()),
            elapsed: started.elapsed(),
        };

    let b_series = match series_b(a, order as usize) {
        Ok(s) => s,
        Err(e) => return failed(e, mismatches, started),
    };
    let b_hat_series = match series_b_hat(a, order as usize) {
        Ok(s) => s,
        Err(e) => return failed(e, mismatches, started),
    };

    // (i) hat sum
    let mut hat_sum = Series::zero(order as usize);
    let mut j = 1u32;
    while a * j < order {
        hat_sum = &hat_sum + &series_b(a * j, order as usize).expect("a·j ≥ 1");
        j += 1;
    }
    compare_series(
        "B̂_a vs Σ_j B_{aj}",
        &b_hat_series,
        &hat_sum,
        order,
        &mut mismatches,
    );

    // (ii) Möbius inversion at the series level
    let mut inverted = Series::zero(order as usize);
    let mut n = 1u32;
    while a * n < order {
        let mu = mobius(n as u64).expect("n ≥ 1");
        if mu != 0 {
            let hat = series_b_hat(a * n, order as usize).expect("a·n ≥ 1");
            inverted = &inverted + &hat.scaled(&int(mu as i64));
        }
        n += 1;
    }
    compare_series(
        "B_a vs Σ μ(n)·B̂_{an}",
        &b_series,
        &inverted,
        order,
        &mut mismatches,
    );

    // (iii) combinatorial cross-check within the enumeration limit
    for n in 1..=inputs.combinatorial_limit {
        let series_value = b_series.coeff(n as usize);
        let combinatorial = Coefficient::from_integer(inputs.durfee[n as usize].clone());
        if series_value != combinatorial {
            mismatches.push(Mismatch {
                claim: "b_a(N) series vs enumeration".into(),
                power: n,
                lhs: series_value,
                rhs: combinatorial,
            });
        }
        let series_hat = b_hat_series.coeff(n as usize);
        let combinatorial_hat = Coefficient::from_integer(inputs.durfee_hat[n as usize].clone());
        if series_hat != combinatorial_hat {
            mismatches.push(Mismatch {
                claim: "b̂_a(N) series vs enumeration".into(),
                power: n,
                lhs: series_hat,
                rhs: combinatorial_hat,
            });
        }
    }

    report(
        "theorem3",
        a_params(a),
        order,
        mismatches,
        Some(inputs.combinatorial_limit),
        started,
    )
}

pub fn verify_theorem3(a: u32, order: u32, oracle: &Oracle) -> VerificationReport {
    check_theorem3(a, &theorem3_inputs(a, order, oracle), order)
}

/// Sparse side of Euler's pentagonal identity:
/// `Σ_{k∈ℤ} (−1)^k q^{k(3k−1)/2}`.
pub fn pentagonal_series(order: usize) -> Series {
    let mut s = Series::zero(order);
    s.coeffs_mut()[0] = Coefficient::one();
    let mut k = 1usize;
    loop {
        let g1 = k * (3 * k - 1) / 2; // k > 0
        let g2 = k * (3 * k + 1) / 2; // mirror term, k < 0
        if g1 > order {
            break;
        }
        let sign = if k.is_multiple_of(2) { int(1) } else { int(-1) };
        s.coeffs_mut()[g1] = sign.clone();
        if g2 <= order {
            s.coeffs_mut()[g2] = sign;
        }
        k += 1;
    }
    s
}

/// Sparse side of the cube identity: `Σ_{n≥0} (−1)ⁿ(2n+1)q^{n(n+1)/2}`.
pub fn jacobi_series(order: usize) -> Series {
    let mut s = Series::zero(order);
    let mut n = 0usize;
    loop {
        let t = n * (n + 1) / 2;
        if t > order {
            break;
        }
        let c = (2 * n + 1) as i64;
        s.coeffs_mut()[t] = if n.is_multiple_of(2) { int(c) } else { int(-c) };
        n += 1;
    }
    s
}

/// `Π(1−qⁿ)` against the sparse pentagonal-number series.
pub fn verify_pentagonal(order: u32) -> VerificationReport {
    let started = Instant::now();
    let lhs = prod_pow(&ExponentSequence::constant(1), order as usize);
    let rhs = pentagonal_series(order as usize);
    let mut mismatches = Vec::new();
    compare_series(
        "Π(1−qⁿ) vs pentagonal series",
        &lhs,
        &rhs,
        order,
        &mut mismatches,
    );
    report(
        "pentagonal",
        BTreeMap::new(),
        order,
        mismatches,
        None,
        started,
    )
}

/// `Π(1−qⁿ)³` against the sparse triangular-number series.
pub fn verify_jacobi(order: u32) -> VerificationReport {
    let started = Instant::now();
    let lhs = prod_pow(&ExponentSequence::constant(3), order as usize);
    let rhs = jacobi_series(order as usize);
    let mut mismatches = Vec::new();
    compare_series(
        "Π(1−qⁿ)³ vs Jacobi series",
        &lhs,
        &rhs,
        order,
        &mut mismatches,
    );
    report("jacobi", BTreeMap::new(), order, mismatches, None, started)
}

/// `1/Π(1−qⁿ)` against the Durfee-square sum `Σ_{n≥0} q^{n²}/(q)_n²`.
pub fn verify_euler_durfee(order: u32) -> VerificationReport {
    let started = Instant::now();
    let product = prod_pow(&ExponentSequence::constant(1), order as usize);
    let lhs = Series::one(order as usize)
        .div(&product)
        .expect("the product has constant term 1");
    let rhs = series_p(order as usize);
    let mut mismatches = Vec::new();
    compare_series(
        "1/Π(1−qⁿ) vs Σ q^{n²}/(q)_n²",
        &lhs,
        &rhs,
        order,
        &mut mismatches,
    );
    report(
        "eulerDurfee",
        BTreeMap::new(),
        order,
        mismatches,
        None,
        started,
    )
}
