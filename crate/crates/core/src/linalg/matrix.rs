use std::fmt;

use super::echelon::{sparse_from_dense, Echelon, SparseVec};
use super::{Field, LinalgError, Scalar, Vector};

/// Dense row-major matrix over a single field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { field, rows, cols, data }
    }

    pub fn from_rows(field: Field, rows: Vec<Vector>) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LinalgError::DimensionMismatch { expected: cols, found: row.len() });
            }
            for x in row {
                if x.field() != field {
                    return Err(LinalgError::MixedFields);
                }
                data.push(x);
            }
        }
        Ok(Matrix { field, rows: nrows, cols, data })
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(field: Field, rows: usize, columns: &[Vector]) -> Self {
        let cols = columns.len();
        let mut m = Matrix::zeros(field, rows, cols);
        for (c, v) in columns.iter().enumerate() {
            assert_eq!(v.len(), rows, "column length");
            for (r, x) in v.iter().enumerate() {
                m.data[r * cols + c] = x.clone();
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn sparse_column(&self, c: usize) -> SparseVec {
        (0..self.rows)
            .filter_map(|r| {
                let v = self.get(r, c);
                (!v.is_zero()).then(|| (r, v.clone()))
            })
            .collect()
    }

    pub fn sparse_columns(&self) -> Vec<SparseVec> {
        (0..self.cols).map(|c| self.sparse_column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimensions");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector dimensions");
        let mut out = vec![self.field.zero(); self.rows];
        for (k, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for i in 0..self.rows {
                let a = self.get(i, k);
                if !a.is_zero() {
                    out[i] += &(a * x);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * c).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    /// Kronecker product; entry `((i, k), (j, l))` is `self[i][j] * other[k][l]`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Matrix::zeros(self.field, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.field, self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub(crate) fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.field, self.cols);
        for r in 0..self.rows {
            e.insert(sparse_from_dense(self.row(r)));
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// Basis of `{x : self * x = 0}`, one vector per free column of the RREF.
    pub fn kernel(&self) -> Vec<Vector> {
        self.echelon().into_reduced().kernel_basis_reduced()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.field, n));
        let e = aug.echelon().into_reduced();
        if (0..n).any(|c| !e.is_pivot(c)) {
            return None;
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for c in 0..n {
            let row = e.pivot_row(c).unwrap();
            for (j, v) in row {
                if *j >= n {
                    inv.set(c, j - n, v.clone());
                }
            }
        }
        Some(inv)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
