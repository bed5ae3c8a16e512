use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};

use super::qpoly::QPoly;
use crate::error::{Error, Result};

/// Integral domain operations needed by the determinant routines.
pub trait Ring: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Division known to be exact.
    fn div_exact(&self, rhs: &Self) -> Self;
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        let (q, r) = self.div_rem(rhs);
        assert!(Zero::is_zero(&r), "inexact integer division in fraction-free elimination");
        q
    }
}

impl Ring for QPoly {
    fn zero() -> Self {
        QPoly::zero()
    }
    fn one() -> Self {
        QPoly::one()
    }
    fn is_zero(&self) -> bool {
        QPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        QPoly::div_exact(self, rhs).expect("inexact polynomial division in fraction-free elimination")
    }
}

/// Square matrix over a [`Ring`]. Dimension 0 is allowed.
#[derive(Clone, Debug, PartialEq)]
pub struct SquareMatrix<T> {
    dim: usize,
    entries: Vec<T>,
}

pub type IntMatrix = SquareMatrix<BigInt>;
pub type QPolyMatrix = SquareMatrix<QPoly>;

/// Above this dimension determinants switch from cofactor expansion to
/// fraction-free elimination.
const COFACTOR_MAX_DIM: usize = 6;

impl<T: Ring> SquareMatrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != dim {
                return Err(Error::NonSquareMatrix { row, len: r.len(), expected: dim });
            }
            entries.extend(r);
        }
        Ok(SquareMatrix { dim, entries })
    }

    /// Builds the matrix from a 0-based entry function.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        SquareMatrix { dim, entries }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        self.entries.chunks(self.dim.max(1)).take(self.dim).map(<[T]>::to_vec).collect()
    }

    /// Exact determinant; the empty matrix has determinant 1.
    pub fn det(&self) -> T {
        if self.dim <= COFACTOR_MAX_DIM {
            self.det_cofactor()
        } else {
            self.det_bareiss()
        }
    }

    /// Laplace expansion along the first row.
    pub fn det_cofactor(&self) -> T {
        let cols: Vec<usize> = (0..self.dim).collect();
        cofactor(self, 0, &cols)
    }

    /// Bareiss fraction-free elimination with row swaps on zero pivots.
    pub fn det_bareiss(&self) -> T {
        let n = self.dim;
        if n == 0 {
            return T::one();
        }
        let mut a = self.rows();
        let mut prev = T::one();
        let mut negate = false;
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        negate = !negate;
                    }
                    None => return T::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                    a[i][j] = num.div_exact(&prev);
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if negate {
            d.neg()
        } else {
            d
        }
    }
}

fn cofactor<T: Ring>(m: &SquareMatrix<T>, row: usize, cols: &[usize]) -> T {
    if cols.is_empty() {
        return T::one();
    }
    let mut acc = T::zero();
    for (idx, &c) in cols.iter().enumerate() {
        let entry = m.get(row, c);
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry.mul(&cofactor(m, row + 1, &rest));
        acc = if idx % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

pub fn det_exact(m: &IntMatrix) -> BigInt {
    m.det()
}

pub fn det_qpoly(m: &QPolyMatrix) -> QPoly {
    m.det()
}
