//! Exact integer matrices: fraction-free determinants and rational solving.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::sign::Sign;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("basis matrix does not have full column rank")]
    SingularBasis,
    #[error("target vector is not in the span of the basis")]
    NotInSpan,
    #[error("shape mismatch: {0}")]
    Shape(String),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(x));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| i64::try_from(self.get(i, j)).expect("entry fits in i64"))
                    .collect()
            })
            .collect()
    }

    pub fn mul(&self, other: &IntegerMatrix) -> Result<IntegerMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::Shape(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * other.get(k, j);
                    let cell = &mut out.data[i * other.cols + j];
                    *cell += prod;
                }
            }
        }
        Ok(out)
    }

    /// Determinant by Bareiss fraction-free elimination; every intermediate
    /// value is an integer and each division is exact. The 0×0 determinant is 1.
    pub fn determinant(&self) -> BigInt {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        negate = !negate;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = num / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        if negate {
            -det
        } else {
            det
        }
    }

    /// Sign of the determinant as -1, 0 or +1.
    pub fn det_sign(&self) -> i8 {
        let d = self.determinant();
        if d.is_zero() {
            0
        } else if d.is_positive() {
            1
        } else {
            -1
        }
    }

    /// Solves `self · X = rhs` exactly over the rationals, where `self` has
    /// full column rank and every column of `rhs` lies in its column span.
    pub fn solve(&self, rhs: &IntegerMatrix) -> Result<Vec<Vec<BigRational>>, LinalgError> {
        if rhs.rows != self.rows {
            return Err(LinalgError::Shape(format!(
                "basis has {} rows, rhs has {}",
                self.rows, rhs.rows
            )));
        }
        let (m, n, k) = (self.rows, self.cols, rhs.cols);
        let to_q = |x: &BigInt| BigRational::from_integer(x.clone());
        let mut aug: Vec<Vec<BigRational>> = (0..m)
            .map(|i| {
                (0..n)
                    .map(|j| to_q(self.get(i, j)))
                    .chain((0..k).map(|j| to_q(rhs.get(i, j))))
                    .collect()
            })
            .collect();
        let mut row = 0;
        for col in 0..n {
            let pivot = (row..m).find(|&i| !aug[i][col].is_zero()).ok_or(LinalgError::SingularBasis)?;
            aug.swap(row, pivot);
            let inv = aug[row][col].recip();
            for x in aug[row].iter_mut() {
                *x *= &inv;
            }
            for i in 0..m {
                if i != row && !aug[i][col].is_zero() {
                    let factor = aug[i][col].clone();
                    for j in col..n + k {
                        let delta = &factor * &aug[row][j];
                        aug[i][j] -= delta;
                    }
                }
            }
            row += 1;
        }
        // rows below the pivots must be zero on the right-hand side
        if aug[n..].iter().any(|r| r[n..].iter().any(|x| !x.is_zero())) {
            return Err(LinalgError::NotInSpan);
        }
        Ok((0..n).map(|i| aug[i][n..].to_vec()).collect())
    }
}

pub fn det_sign(m: &IntegerMatrix) -> i8 {
    m.det_sign()
}

/// Sign of a determinant known to be nonzero.
pub fn unit_det_sign(m: &IntegerMatrix) -> Sign {
    match m.det_sign() {
        1 => Sign::Plus,
        -1 => Sign::Minus,
        _ => panic!("matrix is singular"),
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(";")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        f.write_str("]")
    }
}

impl Serialize for IntegerMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
