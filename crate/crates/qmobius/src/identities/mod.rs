//! A registry of named identities, each verified coefficientwise to a
//! requested order by computing both sides through independent code paths:
//! products go through exp/log and series division while their counterparts
//! come from divisor sums, recurrences, or outright enumeration. The sides
//! share no intermediate series. Failures carry the first mismatching power
//! with both exact coefficients.

mod checks;
mod report;

pub use checks::{
    check_theorem1, check_theorem2, check_theorem3, jacobi_series, pentagonal_series,
    theorem1_inputs, theorem2_inputs, theorem3_inputs, verify_euler_durfee, verify_jacobi,
    verify_lemma1, verify_pentagonal, verify_theorem1, verify_theorem2, verify_theorem3,
    Theorem1Inputs, Theorem2Inputs, Theorem3Inputs,
};
pub use report::{Mismatch, VerificationReport};

use num::BigInt;

use crate::arith::mobius;
use crate::fps::{int, Coefficient, ExponentSequence};
use crate::partitions::{distinct_counts, Oracle};

/// Canonical exponent sequences the log-derivative lemma is exercised on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SequenceKind {
    /// a(n) = 1
    One,
    /// a(n) = 3
    Three,
    /// a(n) = μ(n)
    Mobius,
    /// a(n) = Q(n)/n
    DistinctOverN,
}

impl SequenceKind {
    pub const ALL: [SequenceKind; 4] = [
        SequenceKind::One,
        SequenceKind::Three,
        SequenceKind::Mobius,
        SequenceKind::DistinctOverN,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            SequenceKind::One => "1",
            SequenceKind::Three => "3",
            SequenceKind::Mobius => "mu",
            SequenceKind::DistinctOverN => "Q/n",
        }
    }

    /// Materializes the sequence for use up to the given order.
    pub fn sequence(&self, order: u32) -> ExponentSequence {
        match self {
            SequenceKind::One => ExponentSequence::constant(1),
            SequenceKind::Three => ExponentSequence::constant(3),
            SequenceKind::Mobius => {
                ExponentSequence::new(|n| int(mobius(n as u64).expect("n ≥ 1") as i64))
            }
            SequenceKind::DistinctOverN => {
                let q = distinct_counts(order as usize);
                ExponentSequence::new(move |n| {
                    Coefficient::new(q[n as usize].clone(), BigInt::from(n))
                })
            }
        }
    }
}

/// One registered identity with its parameters pinned.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdentityCheck {
    Lemma1 { sequence: SequenceKind },
    Theorem1,
    Theorem2 { a: u32 },
    Theorem3 { a: u32 },
    Pentagonal,
    Jacobi,
    EulerDurfee,
}

impl IdentityCheck {
    /// Registry key, shared by all parameter instances of an identity.
    pub fn base_name(&self) -> &'static str {
        match self {
            IdentityCheck::Lemma1 { .. } => "lemma1",
            IdentityCheck::Theorem1 => "theorem1",
            IdentityCheck::Theorem2 { .. } => "theorem2",
            IdentityCheck::Theorem3 { .. } => "theorem3",
            IdentityCheck::Pentagonal => "pentagonal",
            IdentityCheck::Jacobi => "jacobi",
            IdentityCheck::EulerDurfee => "eulerDurfee",
        }
    }

    /// Runs the check to the given order. Combinatorial cross-checks cap at
    /// the oracle's enumeration limit and record that in the report.
    pub fn run(&self, order: u32, oracle: &Oracle) -> VerificationReport {
        match *self {
            IdentityCheck::Lemma1 { sequence } => {
                verify_lemma1(&sequence.sequence(order), sequence.label(), order)
            }
            IdentityCheck::Theorem1 => verify_theorem1(order, oracle),
            IdentityCheck::Theorem2 { a } => verify_theorem2(a, order),
            IdentityCheck::Theorem3 { a } => verify_theorem3(a, order, oracle),
            IdentityCheck::Pentagonal => verify_pentagonal(order),
            IdentityCheck::Jacobi => verify_jacobi(order),
            IdentityCheck::EulerDurfee => verify_euler_durfee(order),
        }
    }
}

/// Every registered identity, with parameterized families expanded over
/// `a_values`. The order is fixed, so report lists are deterministic.
pub fn registry(a_values: &[u32]) -> Vec<IdentityCheck> {
    let mut checks: Vec<IdentityCheck> = SequenceKind::ALL
        .iter()
        .map(|&sequence| IdentityCheck::Lemma1 { sequence })
        .collect();
    checks.push(IdentityCheck::Theorem1);
    checks.extend(a_values.iter().map(|&a| IdentityCheck::Theorem2 { a }));
    checks.extend(a_values.iter().map(|&a| IdentityCheck::Theorem3 { a }));
    checks.push(IdentityCheck::Pentagonal);
    checks.push(IdentityCheck::Jacobi);
    checks.push(IdentityCheck::EulerDurfee);
    checks
}

/// Runs the whole registry, collecting reports in registry order.
pub fn run_all(order: u32, a_values: &[u32], oracle: &Oracle) -> Vec<VerificationReport> {
    registry(a_values)
        .iter()
        .map(|check| check.run(order, oracle))
        .collect()
}
