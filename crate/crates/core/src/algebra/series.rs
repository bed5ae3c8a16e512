use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Truncated power series in `x` with exact rational coefficients.
///
/// Holds exactly `order` known coefficients, for `x^0 .. x^(order-1)`.
/// Anything at or beyond `x^order` is unknown. Binary operations produce a
/// result whose order is the smaller of the two operand orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigRational>,
}

impl PowerSeries {
    /// Series of the given order from the leading coefficients of an exact
    /// expression. Missing coefficients below `order` are zero; extra
    /// coefficients are dropped.
    pub fn new(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order, BigRational::zero());
        PowerSeries { coeffs }
    }

    pub fn from_integers(coeffs: &[i64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect(), order)
    }

    pub fn constant(c: i64, order: usize) -> Self {
        Self::from_integers(&[c], order)
    }

    /// `x^power` (zero if `power >= order`).
    pub fn monomial(power: usize, order: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); order];
        if power < order {
            coeffs[power] = BigRational::one();
        }
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&BigRational> {
        self.coeffs.get(i)
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        PowerSeries { coeffs: self.coeffs[..order].to_vec() }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        PowerSeries { coeffs: (0..n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        PowerSeries { coeffs: (0..n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        PowerSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut out = vec![BigRational::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        PowerSeries { coeffs: out }
    }

    /// `self / rhs` where `rhs` has a nonzero constant term.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        let c0 = rhs.coeffs.first().filter(|c| !c.is_zero()).ok_or(Error::SeriesDivisorNotInvertible)?;
        let n = self.order().min(rhs.order());
        let mut out: Vec<BigRational> = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc = self.coeffs[i].clone();
            for j in 1..=i {
                acc -= &rhs.coeffs[j] * &out[i - j];
            }
            out.push(acc / c0);
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// Exact division by `x^power`. The `power` lowest coefficients must be
    /// zero; the result has order `order - power`.
    pub fn div_monomial(&self, power: usize) -> Result<Self> {
        if power > self.order() {
            return Err(Error::OutOfRange { name: "power", value: power as i64, expected: "power <= series order" });
        }
        if let Some((index, value)) = self.coeffs[..power].iter().enumerate().find(|(_, c)| !c.is_zero()) {
            return Err(Error::MonomialDivision { power, index, value: value.to_string() });
        }
        Ok(PowerSeries { coeffs: self.coeffs[power..].to_vec() })
    }

    /// Principal square root of a series with constant term 1.
    pub fn sqrt(&self) -> Result<Self> {
        match self.coeffs.first() {
            Some(c) if c.is_one() => {}
            Some(c) => return Err(Error::SqrtConstantTerm { found: c.to_string() }),
            None => return Ok(self.clone()),
        }
        // g_0 = 1 and 2 g_n = f_n - sum_{i=1}^{n-1} g_i g_{n-i}
        let two = BigRational::from_integer(2.into());
        let mut g: Vec<BigRational> = vec![BigRational::one()];
        for n in 1..self.order() {
            let mut acc = self.coeffs[n].clone();
            for i in 1..n {
                acc -= &g[i] * &g[n - i];
            }
            g.push(acc / &two);
        }
        Ok(PowerSeries { coeffs: g })
    }

    /// Coefficients as integers, failing on the first non-integral one.
    pub fn to_integers(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(index, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NonIntegralCoefficient { index, value: c.to_string() })
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(s: &PowerSeries) -> Vec<i64> {
        s.to_integers().unwrap().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    /// Newton iteration g <- (g + f/g) / 2, doubling precision each round.
    fn newton_sqrt(f: &PowerSeries) -> PowerSeries {
        let half = BigRational::new(1.into(), 2.into());
        let mut g = PowerSeries::constant(1, f.order());
        let mut prec = 1;
        while prec < f.order() {
            prec = (2 * prec).min(f.order());
            g = g.add(&f.div(&g).unwrap()).scale(&half);
        }
        g
    }

    #[test]
    fn sqrt_examples() {
        let one = PowerSeries::constant(1, 8);
        assert_eq!(one.sqrt().unwrap(), one);

        let f = PowerSeries::from_integers(&[1, -4], 6);
        let g = f.sqrt().unwrap();
        assert_eq!(ints(&g), vec![1, -2, -2, -4, -10, -28]);
        assert_eq!(g, newton_sqrt(&f));
        assert_eq!(g.mul(&g), f);
    }

    #[test]
    fn sqrt_rejects_bad_constant_term() {
        let f = PowerSeries::from_integers(&[4, 1], 4);
        assert!(matches!(f.sqrt(), Err(Error::SqrtConstantTerm { .. })));
        let f = PowerSeries::from_integers(&[0, 1], 4);
        assert!(f.sqrt().is_err());
    }

    #[test]
    fn arithmetic_examples() {
        let f = PowerSeries::from_integers(&[3, -1, 4, 1, 5], 5);
        assert!(f.sub(&f).coeffs().iter().all(Zero::is_zero));
        assert_eq!(f.sub(&f).order(), 5);

        let one_minus_x = PowerSeries::from_integers(&[1, -1], 10);
        let geometric = PowerSeries::from_integers(&[1; 10], 10);
        assert_eq!(one_minus_x.mul(&geometric), PowerSeries::constant(1, 10));
        assert_eq!(PowerSeries::constant(1, 10).div(&one_minus_x).unwrap(), geometric);

        let f = PowerSeries::from_integers(&[0, 0, 0, 2, 2], 8);
        let q = f.div_monomial(3).unwrap();
        assert_eq!(q.order(), 5);
        let two = BigRational::from_integer(2.into());
        assert_eq!(q.scale(&two.recip()), PowerSeries::from_integers(&[1, 1], 5));
    }

    #[test]
    fn monomial_division_guard() {
        let f = PowerSeries::from_integers(&[0, 1, 1], 6);
        assert!(matches!(f.div_monomial(2), Err(Error::MonomialDivision { index: 1, .. })));
        let g = PowerSeries::from_integers(&[1], 4);
        assert_eq!(g.div(&PowerSeries::from_integers(&[0, 1], 4)), Err(Error::SeriesDivisorNotInvertible));
    }

    #[test]
    fn orders_combine_to_minimum() {
        let a = PowerSeries::from_integers(&[1, 1], 4);
        let b = PowerSeries::from_integers(&[1, 1], 7);
        assert_eq!(a.add(&b).order(), 4);
        assert_eq!(a.mul(&b).order(), 4);
        assert_eq!(b.div(&a).unwrap().order(), 4);
    }

    #[test]
    fn non_integral_output_is_reported() {
        let f = PowerSeries::from_integers(&[1, 1], 3).sqrt().unwrap();
        assert!(matches!(f.to_integers(), Err(Error::NonIntegralCoefficient { index: 1, .. })));
    }

    proptest! {
        #[test]
        fn sqrt_squares_back(tail in proptest::collection::vec(-10i64..10, 11)) {
            let mut c = vec![1i64];
            c.extend(tail);
            let f = PowerSeries::from_integers(&c, 12);
            let g = f.sqrt().unwrap();
            prop_assert_eq!(g.mul(&g), f);
        }
    }
}
