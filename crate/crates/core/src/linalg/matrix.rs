//! Dense square complex matrices.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use super::LinalgError;

pub type C64 = Complex64;

/// Dense `n x n` complex matrix stored row-major.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    n: usize,
    data: Vec<C64>,
}

impl ComplexMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![C64::new(0.0, 0.0); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    /// Builds a matrix from row-major data, rejecting non-square or non-finite input.
    pub fn from_row_major(n: usize, data: Vec<C64>) -> Result<Self, LinalgError> {
        if n == 0 {
            return Err(LinalgError::Empty);
        }
        if data.len() != n * n {
            return Err(LinalgError::NotSquare {
                rows: n,
                cols: data.len() / n.max(1),
            });
        }
        let m = Self { n, data };
        m.ensure_finite()?;
        Ok(m)
    }

    pub fn from_rows(rows: &[Vec<C64>]) -> Result<Self, LinalgError> {
        let n = rows.len();
        if n == 0 {
            return Err(LinalgError::Empty);
        }
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(LinalgError::NotSquare {
                    rows: n,
                    cols: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Self::from_row_major(n, data)
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self, LinalgError> {
        let rows: Vec<Vec<C64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| C64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn from_real_diag(d: &[f64]) -> Self {
        let mut m = Self::zeros(d.len());
        for (i, &x) in d.iter().enumerate() {
            m[(i, i)] = C64::new(x, 0.0);
        }
        m
    }

    /// Assembles `[[a, b], [c, d]]` from four equally sized blocks.
    pub fn from_blocks(
        a: &ComplexMatrix,
        b: &ComplexMatrix,
        c: &ComplexMatrix,
        d: &ComplexMatrix,
    ) -> Result<Self, LinalgError> {
        let n = a.n;
        for m in [b, c, d] {
            if m.n != n {
                return Err(LinalgError::DimMismatch { left: n, right: m.n });
            }
        }
        Ok(Self::from_fn(2 * n, |i, j| match (i < n, j < n) {
            (true, true) => a[(i, j)],
            (true, false) => b[(i, j - n)],
            (false, true) => c[(i - n, j)],
            (false, false) => d[(i - n, j - n)],
        }))
    }

    /// Extracts the `size x size` block whose top-left corner is `(row, col)`.
    pub fn block(&self, row: usize, col: usize, size: usize) -> Self {
        Self::from_fn(size, |i, j| self[(row + i, col + j)])
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub(crate) fn ensure_finite(&self) -> Result<(), LinalgError> {
        if self.is_finite() {
            Ok(())
        } else {
            Err(LinalgError::NonFinite)
        }
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].conj())
    }

    pub fn trace(&self) -> C64 {
        (0..self.n).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn try_matmul(&self, rhs: &ComplexMatrix) -> Result<Self, LinalgError> {
        if self.n != rhs.n {
            return Err(LinalgError::DimMismatch {
                left: self.n,
                right: rhs.n,
            });
        }
        let n = self.n;
        let mut out = vec![C64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                let row = &rhs.data[k * n..(k + 1) * n];
                let dst = &mut out[i * n..(i + 1) * n];
                for (d, b) in dst.iter_mut().zip(row) {
                    *d += a * b;
                }
            }
        }
        Ok(Self { n, data: out })
    }

    /// `‖self - other‖_F`.
    pub fn distance(&self, other: &ComplexMatrix) -> f64 {
        assert_eq!(self.n, other.n, "dimension mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// `‖M - M*‖_F`.
    pub fn hermitian_defect(&self) -> f64 {
        let mut acc = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                acc += (self[(i, j)] - self[(j, i)].conj()).norm_sqr();
            }
        }
        acc.sqrt()
    }

    /// Product of a sequence of matrices, left to right.
    pub fn product<'a>(factors: impl IntoIterator<Item = &'a ComplexMatrix>) -> Self {
        let mut it = factors.into_iter();
        let first = it.next().expect("product of an empty word").clone();
        it.fold(first, |acc, m| &acc * m)
    }

    pub(crate) fn column(&self, j: usize) -> Vec<C64> {
        (0..self.n).map(|i| self[(i, j)]).collect()
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.n + j]
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{})", self.n, self.n)?;
        for i in 0..self.n {
            write!(f, "  [")?;
            for j in 0..self.n {
                let z = self[(i, j)];
                write!(f, " {:+.6e}{:+.6e}i", z.re, z.im)?;
            }
            writeln!(f, " ]")?;
        }
        Ok(())
    }
}

macro_rules! elementwise {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&ComplexMatrix> for &ComplexMatrix {
            type Output = ComplexMatrix;

            fn $method(self, rhs: &ComplexMatrix) -> ComplexMatrix {
                assert_eq!(self.n, rhs.n, "dimension mismatch");
                ComplexMatrix {
                    n: self.n,
                    data: self.data.iter().zip(&rhs.data).map(|(a, b)| a $op b).collect(),
                }
            }
        }
    };
}

elementwise!(Add, add, +);
elementwise!(Sub, sub, -);

impl Mul<&ComplexMatrix> for &ComplexMatrix {
    type Output = ComplexMatrix;

    /// Panics on dimension mismatch; use [`ComplexMatrix::try_matmul`] for a fallible product.
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.try_matmul(rhs).expect("dimension mismatch")
    }
}

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn neg(self) -> ComplexMatrix {
        self.scale(-1.0)
    }
}

/// Matrix product `X Y`.
pub fn matmul(x: &ComplexMatrix, y: &ComplexMatrix) -> Result<ComplexMatrix, LinalgError> {
    x.try_matmul(y)
}

/// Conjugate transpose `X*`.
pub fn adjoint(x: &ComplexMatrix) -> ComplexMatrix {
    x.adjoint()
}

// JSON layout: {"n": 2, "entries": [[[re, im], re], ...]} with bare reals as [re, 0].

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    n: usize,
    entries: Vec<Vec<EntryRepr>>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum EntryRepr {
    Pair([f64; 2]),
    Real(f64),
}

impl Serialize for ComplexMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let entries = (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| {
                        let z = self[(i, j)];
                        EntryRepr::Pair([z.re, z.im])
                    })
                    .collect()
            })
            .collect();
        MatrixRepr { n: self.n, entries }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ComplexMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = MatrixRepr::deserialize(deserializer)?;
        if repr.entries.len() != repr.n {
            return Err(de::Error::custom(format!(
                "expected {} rows, found {}",
                repr.n,
                repr.entries.len()
            )));
        }
        let rows: Vec<Vec<C64>> = repr
            .entries
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|e| match e {
                        EntryRepr::Pair([re, im]) => C64::new(re, im),
                        EntryRepr::Real(re) => C64::new(re, 0.0),
                    })
                    .collect()
            })
            .collect();
        ComplexMatrix::from_rows(&rows).map_err(de::Error::custom)
    }
}
