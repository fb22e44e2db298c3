use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use super::{int, Coefficient};
use crate::{Error, Result};

/// A dense truncated formal power series in `q`.
///
/// Order `N` means coefficients of `q⁰..q^N` are retained; the backing vector
/// always has exactly `N + 1` entries. Two series are equal iff their orders
/// and all coefficients agree.
#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Coefficient>,
}

impl Series {
    /// The zero series of the given order.
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![Coefficient::zero(); order + 1],
        }
    }

    /// The constant series 1 of the given order.
    pub fn one(order: usize) -> Self {
        Series::constant(Coefficient::one(), order)
    }

    /// A constant series.
    pub fn constant(c: Coefficient, order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The monomial `c·q^power`, or zero if `power` exceeds the order.
    pub fn monomial(c: Coefficient, power: usize, order: usize) -> Self {
        let mut s = Series::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    /// Builds a series from its coefficient vector; the order is `len - 1`.
    /// Panics on an empty vector.
    pub fn from_coeffs(coeffs: Vec<Coefficient>) -> Self {
        assert!(!coeffs.is_empty(), "a series has at least a constant term");
        Series { coeffs }
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Series::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// Highest retained power of `q`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^k`; zero beyond the truncation order.
    pub fn coeff(&self, k: usize) -> Coefficient {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(Coefficient::zero)
    }

    /// All coefficients, index `k` holding the coefficient of `q^k`.
    pub fn coeffs(&self) -> &[Coefficient] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [Coefficient] {
        &mut self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Truncation to `min(order, self.order())`. Never extends.
    pub fn truncated(&self, order: usize) -> Series {
        let keep = order.min(self.order());
        Series {
            coeffs: self.coeffs[..=keep].to_vec(),
        }
    }

    /// Multiplication by `q^k` at fixed order: coefficients shift up and the
    /// tail beyond the order is dropped.
    pub fn shifted(&self, k: usize) -> Series {
        let order = self.order();
        let mut out = Series::zero(order);
        for i in k..=order {
            out.coeffs[i] = self.coeffs[i - k].clone();
        }
        out
    }

    /// Scalar multiple `c·f`.
    pub fn scaled(&self, c: &Coefficient) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Quotient `self / g` to the common order.
    ///
    /// Uses the long-division recurrence `h_k = (f_k − Σ_{j=1..k} g_j·h_{k−j}) / g_0`.
    pub fn div(&self, g: &Series) -> Result<Series> {
        if g.coeffs[0].is_zero() {
            return Err(Error::DivisionByNonUnit);
        }
        let order = self.order().min(g.order());
        let g0 = &g.coeffs[0];
        let mut h = Series::zero(order);
        for k in 0..=order {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k {
                if !g.coeffs[j].is_zero() && !h.coeffs[k - j].is_zero() {
                    acc -= &g.coeffs[j] * &h.coeffs[k - j];
                }
            }
            h.coeffs[k] = acc / g0;
        }
        Ok(h)
    }

    /// The operator `q·d/dq`: coefficient of `q^k` becomes `k·f_k`.
    pub fn q_derivative(&self) -> Series {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * int(k as i64))
            .collect();
        Series { coeffs }
    }

    /// Logarithmic derivative `q·f′/f`. Requires a unit constant term.
    pub fn log_derivative(&self) -> Result<Series> {
        self.q_derivative().div(self)
    }

    /// Series logarithm: the `g` with `g_0 = 0` and `q·g′ = q·f′/f`.
    /// Requires constant term exactly 1.
    pub fn log(&self) -> Result<Series> {
        if !self.coeffs[0].is_one() {
            return Err(Error::LogOfNonOne);
        }
        let ld = self.log_derivative()?;
        let mut g = Series::zero(self.order());
        for k in 1..=self.order() {
            g.coeffs[k] = &ld.coeffs[k] / int(k as i64);
        }
        Ok(g)
    }

    /// Series exponential, inverse of [`Series::log`]. Requires constant term 0.
    ///
    /// From `g′ = f′·g` one gets `g_k = (1/k)·Σ_{j=1..k} j·f_j·g_{k−j}`, which
    /// stays in exact rationals with no factorials in intermediate form.
    pub fn exp(&self) -> Result<Series> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ExpOfNonZero);
        }
        let order = self.order();
        // jf[j] = j·f_j
        let jf: Vec<Coefficient> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| c * int(j as i64))
            .collect();
        let mut g = Series::one(order);
        for k in 1..=order {
            let mut acc = Coefficient::zero();
            for (a, b) in jf[1..=k].iter().zip(g.coeffs[..k].iter().rev()) {
                if !a.is_zero() && !b.is_zero() {
                    acc += a * b;
                }
            }
            g.coeffs[k] = acc / int(k as i64);
        }
        Ok(g)
    }
}

impl Add for &Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|k| &self.coeffs[k] + &rhs.coeffs[k])
            .collect();
        Series { coeffs }
    }
}

impl Sub for &Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|k| &self.coeffs[k] - &rhs.coeffs[k])
            .collect();
        Series { coeffs }
    }
}

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Series {
    type Output = Series;

    /// Cauchy product truncated to the minimum operand order.
    fn mul(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut out = Series::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Series {
    /// Human-readable polynomial form, e.g. `1 - q - 1/2*q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if wrote {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{k}")?;
                    }
                }
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fps::rat;

    #[test]
    fn add_cancels() {
        let f = Series::from_ints(&[1, 1]);
        let g = Series::from_ints(&[1, -1]);
        assert_eq!(&f + &g, Series::from_ints(&[2, 0]));
    }

    #[test]
    fn add_zero_truncates_to_min_order() {
        let f = Series::from_ints(&[3, 1, 4, 1]);
        let z = Series::zero(2);
        assert_eq!(&f + &z, Series::from_ints(&[3, 1, 4]));
    }

    #[test]
    fn add_componentwise() {
        let f = Series::from_ints(&[0, 1, 2]);
        let g = Series::from_ints(&[0, 1, 1]);
        assert_eq!(&f + &g, Series::from_ints(&[0, 2, 3]));
    }

    #[test]
    fn mul_difference_of_squares() {
        let f = Series::from_ints(&[1, 1, 0]);
        let g = Series::from_ints(&[1, -1, 0]);
        assert_eq!(&f * &g, Series::from_ints(&[1, 0, -1]));
    }

    #[test]
    fn mul_by_one_is_identity() {
        let f = Series::from_ints(&[2, -3, 5, 7]);
        assert_eq!(&f * &Series::one(3), f);
    }

    #[test]
    fn mul_telescopes_under_truncation() {
        // (1−q)(1+q+q²+q³) = 1−q⁴, which truncates to 1 at order 3.
        let f = Series::from_ints(&[1, -1, 0, 0]);
        let g = Series::from_ints(&[1, 1, 1, 1]);
        assert_eq!(&f * &g, Series::from_ints(&[1, 0, 0, 0]));
    }

    #[test]
    fn div_geometric() {
        let one = Series::one(5);
        let f = Series::from_ints(&[1, -1, 0, 0, 0, 0]);
        assert_eq!(one.div(&f).unwrap(), Series::from_ints(&[1, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn div_self_is_one() {
        let f = Series::from_coeffs(vec![rat(2, 3), int(5), rat(-1, 7), int(0), int(4)]);
        assert_eq!(f.div(&f).unwrap(), Series::one(4));
    }

    #[test]
    fn div_by_nonunit_fails() {
        let f = Series::one(3);
        let g = Series::from_ints(&[0, 1, 0, 0]);
        assert_eq!(f.div(&g), Err(Error::DivisionByNonUnit));
    }

    #[test]
    fn q_derivative_termwise() {
        assert_eq!(
            Series::from_ints(&[1, 1, 1]).q_derivative(),
            Series::from_ints(&[0, 1, 2])
        );
        assert_eq!(Series::constant(int(9), 4).q_derivative(), Series::zero(4));
        let q5 = Series::monomial(int(1), 5, 6);
        assert_eq!(q5.q_derivative(), Series::monomial(int(5), 5, 6));
    }

    #[test]
    fn log_derivative_of_one_minus_q() {
        let f = Series::from_ints(&[1, -1, 0, 0, 0]);
        assert_eq!(
            f.log_derivative().unwrap(),
            Series::from_ints(&[0, -1, -1, -1, -1])
        );
    }

    #[test]
    fn log_of_one_minus_q() {
        // log(1−q) = −q − q²/2 − q³/3 − q⁴/4
        let f = Series::from_ints(&[1, -1, 0, 0, 0]);
        let expect = Series::from_coeffs(vec![int(0), int(-1), rat(-1, 2), rat(-1, 3), rat(-1, 4)]);
        assert_eq!(f.log().unwrap(), expect);
    }

    #[test]
    fn log_of_one_is_zero() {
        assert_eq!(Series::one(6).log().unwrap(), Series::zero(6));
    }

    #[test]
    fn log_requires_unit_one() {
        let f = Series::from_ints(&[2, 1, 0]);
        assert_eq!(f.log(), Err(Error::LogOfNonOne));
    }

    #[test]
    fn exp_of_zero_is_one() {
        assert_eq!(Series::zero(5).exp().unwrap(), Series::one(5));
    }

    #[test]
    fn exp_of_q_is_factorial_series() {
        let f = Series::from_ints(&[0, 1, 0, 0, 0]);
        let expect = Series::from_coeffs(vec![int(1), int(1), rat(1, 2), rat(1, 6), rat(1, 24)]);
        assert_eq!(f.exp().unwrap(), expect);
    }

    #[test]
    fn exp_requires_zero_constant() {
        let f = Series::from_ints(&[1, 1]);
        assert_eq!(f.exp(), Err(Error::ExpOfNonZero));
    }

    #[test]
    fn log_exp_round_trips() {
        let f = Series::from_ints(&[0, 1, 1, 0, -2, 3]);
        assert_eq!(f.exp().unwrap().log().unwrap(), f);
        let g = Series::from_ints(&[1, -1, 0, 0, 0, 0]);
        assert_eq!(g.log().unwrap().exp().unwrap(), g);
    }

    #[test]
    fn long_division_oracle_q2_over_square() {
        // q²/(1−q)²: coefficient of q^{k+2} is k+1, checked against a
        // separately computed long division and a mul round-trip.
        let num = Series::monomial(int(1), 2, 8);
        let den_root = Series::from_ints(&[1, -1, 0, 0, 0, 0, 0, 0, 0]);
        let den = &den_root * &den_root;
        let h = num.div(&den).unwrap();
        let expect = Series::from_ints(&[0, 0, 1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(h, expect);
        assert_eq!(&h * &den, num);
    }

    #[test]
    fn shifted_drops_tail() {
        let f = Series::from_ints(&[1, 2, 3]);
        assert_eq!(f.shifted(1), Series::from_ints(&[0, 1, 2]));
        assert_eq!(f.shifted(4), Series::zero(2));
    }

    #[test]
    fn display_is_readable() {
        let f = Series::from_coeffs(vec![int(1), int(-1), rat(-1, 2)]);
        assert_eq!(f.to_string(), "1 - q - 1/2*q^2");
        assert_eq!(Series::zero(3).to_string(), "0");
    }
}
