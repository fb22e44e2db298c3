use num::Zero;

use super::{int, Coefficient, Series};

/// Exponent sequence `n ↦ a(n)` driving the infinite product `Π (1−qⁿ)^{a(n)}`.
///
/// Must be deterministic: the same `n` always yields the same value.
pub struct ExponentSequence {
    f: Box<dyn Fn(u32) -> Coefficient + Send + Sync>,
}

impl ExponentSequence {
    pub fn new(f: impl Fn(u32) -> Coefficient + Send + Sync + 'static) -> Self {
        ExponentSequence { f: Box::new(f) }
    }

    /// The constant sequence `a(n) = c`.
    pub fn constant(c: i64) -> Self {
        ExponentSequence::new(move |_| int(c))
    }

    /// `a(n)` for `n ≥ 1`.
    pub fn value(&self, n: u32) -> Coefficient {
        debug_assert!(n >= 1);
        (self.f)(n)
    }
}

/// The product `Π_{n=1}^{N} (1−qⁿ)^{a(n)}` truncated at order `N`.
///
/// Computed as `exp(Σ_n a(n)·log(1−qⁿ))` with `log(1−qⁿ) = −Σ_m q^{nm}/m`;
/// factors with `n > N` cannot touch coefficients ≤ N and are omitted.
pub fn prod_pow(a: &ExponentSequence, order: usize) -> Series {
    let mut log_sum = Series::zero(order);
    for n in 1..=order {
        let an = a.value(n as u32);
        if an.is_zero() {
            continue;
        }
        let mut m = 1usize;
        while n * m <= order {
            log_sum.coeffs_mut()[n * m] -= &an / int(m as i64);
            m += 1;
        }
    }
    log_sum.exp().expect("log sum has zero constant term")
}

/// Logarithmic derivative of `Π (1−qⁿ)^{a(n)}` by divisor sums alone:
/// the coefficient of `qⁿ` is `−Σ_{d|n} a(d)·d`, with constant term 0.
///
/// Shares no code with [`prod_pow`]'s exp/log/division route; identity
/// checks rely on the two routes being independent.
pub fn log_deriv_of_product(a: &ExponentSequence, order: usize) -> Series {
    let mut out = Series::zero(order);
    for n in 1..=order {
        let mut acc = Coefficient::zero();
        for d in 1..=n {
            if n % d == 0 {
                acc += a.value(d as u32) * int(d as i64);
            }
        }
        out.coeffs_mut()[n] = -acc;
    }
    out
}

/// The Pochhammer symbol `(q)_n = Π_{k=1}^{n} (1−q^k)` truncated at the given
/// order, with `(q)_0 = 1`.
pub fn pochhammer(n: u32, order: usize) -> Series {
    let mut out = Series::one(order);
    for k in 1..=n as usize {
        if k > order {
            break; // remaining factors are 1 + O(q^{order+1})
        }
        // out·(1−q^k) = out − q^k·out
        out = &out - &out.shifted(k);
    }
    out
}
