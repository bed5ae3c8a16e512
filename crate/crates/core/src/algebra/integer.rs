use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::matrix::{det_exact, IntMatrix};
use crate::error::{Error, Result};

/// Arbitrary-precision signed integer used for every count in the crate.
pub type Integer = BigInt;

/// `C(n, k)` over the full integer domain used here.
///
/// Returns 0 for `k < 0` and for `k > n >= 0`. A negative `n` together with a
/// non-negative `k` is rejected.
pub fn binomial(n: i64, k: i64) -> Result<Integer> {
    if k < 0 {
        return Ok(Integer::zero());
    }
    if n < 0 {
        return Err(Error::NegativeBinomialTop { n, k });
    }
    Ok(binom(n as u64, k as u64))
}

/// `C(n, k)` for non-negative arguments; zero when `k > n`.
pub fn binom(n: u64, k: u64) -> Integer {
    if k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for i in 0..k {
        // acc * (n - i) is divisible by i + 1 at every step
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// The Catalan number `C(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> Integer {
    binom(2 * n, n) / (n + 1)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// Determinant of the `(n-1) x (n-1)` Hessenberg matrix with entries
/// `C(j+1, i-j+1)` (1-based), which equals the Catalan number `C_n`.
pub fn hessenberg_catalan_det(n: u64) -> Result<Integer> {
    if n == 0 {
        return Err(Error::OutOfRange { name: "n", value: 0, expected: "n >= 1" });
    }
    let dim = (n - 1) as usize;
    let rows = (1..=dim as i64)
        .map(|i| (1..=dim as i64).map(|j| binomial(j + 1, i - j + 1)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(det_exact(&IntMatrix::from_rows(rows)?))
}
