use std::collections::BTreeMap;
use std::time::Duration;

use crate::fps::{Coefficient, Series};

/// One coefficient disagreement between the two sides of a claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    /// Which claim of the identity disagreed (an identity may check several).
    pub claim: String,
    /// Power of `q` (or index `n`) at which the sides first differ.
    pub power: u32,
    pub lhs: Coefficient,
    pub rhs: Coefficient,
}

/// Outcome of checking one identity to a given order.
///
/// Mismatches are listed in claim order, ascending power within a claim, so
/// reports are deterministic given (identity, parameters, order).
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub name: String,
    /// Identity parameters, e.g. `a` for the parameterized families.
    pub params: BTreeMap<String, String>,
    pub order: u32,
    pub mismatches: Vec<Mismatch>,
    /// Highest `n` covered by combinatorial (enumeration) cross-checks;
    /// `None` when the identity has none. Above this the check is
    /// series-only.
    pub combinatorial_limit: Option<u32>,
    /// Set when the check could not run at all.
    pub error: Option<String>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.error.is_none()
    }

    pub fn status(&self) -> &'static str {
        if self.passed() {
            "pass"
        } else {
            "fail"
        }
    }

    pub fn first_mismatch(&self) -> Option<&Mismatch> {
        self.mismatches.first()
    }

    /// Short human-readable label, e.g. `theorem2 a=3`.
    pub fn label(&self) -> String {
        let mut s = self.name.clone();
        for (k, v) in &self.params {
            s.push_str(&format!(" {k}={v}"));
        }
        s
    }
}

/// Records every coefficient of `q^0..q^upto` where the sides differ.
pub(super) fn compare_series(
    claim: &str,
    lhs: &Series,
    rhs: &Series,
    upto: u32,
    out: &mut Vec<Mismatch>,
) {
    for k in 0..=upto as usize {
        let (l, r) = (lhs.coeff(k), rhs.coeff(k));
        if l != r {
            out.push(Mismatch {
                claim: claim.to_string(),
                power: k as u32,
                lhs: l,
                rhs: r,
            });
        }
    }
}

/// Compares two `n`-indexed integer tables on `1..=upto`.
pub(super) fn compare_tables(
    claim: &str,
    lhs: &[num::BigInt],
    rhs: &[num::BigInt],
    upto: u32,
    out: &mut Vec<Mismatch>,
) {
    for n in 1..=upto as usize {
        if lhs[n] != rhs[n] {
            out.push(Mismatch {
                claim: claim.to_string(),
                power: n as u32,
                lhs: Coefficient::from_integer(lhs[n].clone()),
                rhs: Coefficient::from_integer(rhs[n].clone()),
            });
        }
    }
}
