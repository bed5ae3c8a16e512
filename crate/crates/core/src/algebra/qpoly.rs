use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Polynomial in `q` with exact integer coefficients.
///
/// `coeffs[i]` is the coefficient of `q^i`. Trailing zeros are stripped, so
/// the zero polynomial has no coefficients and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<BigInt>", into = "Vec<BigInt>")]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `q^degree`.
    pub fn monomial(degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = BigInt::one();
        QPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Value at `q = 1`, i.e. the sum of the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Exact division; a nonzero remainder is an error.
    pub fn div_exact(&self, divisor: &QPoly) -> Result<QPoly> {
        let (quot, rem) = self.div_rem(divisor)?;
        if !rem.is_zero() {
            return Err(Error::InexactPolynomialDivision);
        }
        Ok(quot)
    }

    /// Long division over the integers. The remainder is exact only when the
    /// leading coefficient of `divisor` divides each intermediate leading term;
    /// otherwise the division is reported as inexact.
    fn div_rem(&self, divisor: &QPoly) -> Result<(QPoly, QPoly)> {
        let dd = divisor.degree().ok_or(Error::InexactPolynomialDivision)?;
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((QPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            if !(top % lead).is_zero() {
                return Err(Error::InexactPolynomialDivision);
            }
            let c = top / lead;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quot[i] = c;
        }
        Ok((QPoly::new(quot), QPoly::new(rem)))
    }
}

impl From<Vec<BigInt>> for QPoly {
    fn from(coeffs: Vec<BigInt>) -> Self {
        QPoly::new(coeffs)
    }
}

impl From<QPoly> for Vec<BigInt> {
    fn from(p: QPoly) -> Self {
        p.coeffs
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QPoly {
            type Output = QPoly;
            fn $m(self, rhs: QPoly) -> QPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}")?;
                    }
                    if i == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

/// `1 - q^m`.
fn one_minus_q_pow(m: usize) -> QPoly {
    &QPoly::one() - &QPoly::monomial(m)
}

/// Gaussian binomial `[n over k]_q`, computed from the product form
/// `prod_{i=1..k} (1 - q^(n-k+i)) / (1 - q^i)`.
///
/// Every partial product is itself a Gaussian binomial, so each division
/// step is exact. Returns the zero polynomial for `k < 0` or `k > n`.
pub fn q_binomial(n: u64, k: i64) -> QPoly {
    if k < 0 || k as u64 > n {
        return QPoly::zero();
    }
    let k = k as u64;
    let mut acc = QPoly::one();
    for i in 1..=k {
        acc = &acc * &one_minus_q_pow((n - k + i) as usize);
        acc = acc
            .div_exact(&one_minus_q_pow(i as usize))
            .expect("partial products of a Gaussian binomial are polynomials");
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::binom;
    use proptest::prelude::*;

    /// Pascal-type recurrence `[n, k] = [n-1, k-1] + q^k [n-1, k]`.
    fn q_binomial_pascal(n: u64, k: u64) -> QPoly {
        let mut rows: Vec<Vec<QPoly>> = vec![vec![QPoly::one()]];
        for r in 1..=n as usize {
            let prev = &rows[r - 1];
            let mut row = vec![QPoly::one(); r + 1];
            for j in 1..r {
                row[j] = &prev[j - 1] + &(&QPoly::monomial(j) * &prev[j]);
            }
            rows.push(row);
        }
        rows[n as usize].get(k as usize).cloned().unwrap_or_default()
    }

    #[test]
    fn q_binomial_examples() {
        assert_eq!(q_binomial(2, 1), QPoly::from_i64s(&[1, 1]));
        assert_eq!(q_binomial(4, 2), QPoly::from_i64s(&[1, 1, 2, 1, 1]));
        for n in 0..8 {
            assert_eq!(q_binomial(n, n as i64), QPoly::one());
            assert_eq!(q_binomial(n, 0), QPoly::one());
        }
        assert!(q_binomial(3, 4).is_zero());
        assert!(q_binomial(3, -1).is_zero());
    }

    #[test]
    fn q_binomial_matches_pascal_and_is_palindromic() {
        for n in 0..=30u64 {
            for k in 0..=n {
                let p = q_binomial(n, k as i64);
                assert_eq!(p.eval_at_one(), binom(n, k), "n={n} k={k}");
                assert!(p.is_palindromic(), "n={n} k={k}");
                if n <= 14 {
                    assert_eq!(p, q_binomial_pascal(n, k));
                }
            }
        }
    }

    #[test]
    fn normalization_and_display() {
        let p = QPoly::from_i64s(&[0, 0, 0]);
        assert!(p.is_zero());
        assert_eq!(p.degree(), None);
        assert_eq!(QPoly::from_i64s(&[1, -1, 0, 2]).to_string(), "1 - q + 2q^3");
        assert_eq!(QPoly::from_i64s(&[0, 1, 1]).to_string(), "q + q^2");
    }

    #[test]
    fn inexact_division_is_an_error() {
        let p = QPoly::from_i64s(&[1, 0, 1]);
        let d = QPoly::from_i64s(&[1, 1]);
        assert_eq!(p.div_exact(&d), Err(Error::InexactPolynomialDivision));
        let d2 = QPoly::from_i64s(&[0, 2]);
        assert_eq!(QPoly::from_i64s(&[0, 1]).div_exact(&d2), Err(Error::InexactPolynomialDivision));
    }

    proptest! {
        #[test]
        fn product_then_divide_round_trips(
            a in proptest::collection::vec(-20i64..20, 0..6),
            b in proptest::collection::vec(-20i64..20, 1..6),
        ) {
            let a = QPoly::from_i64s(&a);
            let b = QPoly::from_i64s(&b);
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.div_exact(&b).unwrap(), a.clone());
            prop_assert_eq!(prod.eval_at_one(), a.eval_at_one() * b.eval_at_one());
        }
    }
}
