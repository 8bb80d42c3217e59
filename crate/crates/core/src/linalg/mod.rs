//! Exact scalars and dense linear algebra.
//!
//! Everything above this module reduces to three questions about finite
//! systems of linear equations: is a vector in a span, what is a kernel, and
//! what is the quotient by a span. All of them go through [`Echelon`], a sparse
//! incremental row reduction with deterministic pivoting.

mod echelon;
mod matrix;
mod scalar;

pub use echelon::{dense_from_sparse, normalize_sparse, sparse_from_dense, Echelon, SparseVec};
pub use matrix::Matrix;
pub use scalar::{Field, Scalar};

use thiserror::Error;

pub type Vector = Vec<Scalar>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operands come from different fields")]
    MixedFields,
    #[error("cannot parse scalar {0:?}")]
    ParseScalar(String),
    #[error("cannot parse field {0:?}")]
    ParseField(String),
    #[error("{0} is not a supported prime")]
    NotPrime(u64),
}

pub mod vector {
    //! Helpers on dense coordinate vectors.
    use super::{Field, Scalar, Vector};

    pub fn zeros(field: Field, n: usize) -> Vector {
        vec![field.zero(); n]
    }

    pub fn unit(field: Field, n: usize, i: usize) -> Vector {
        let mut v = zeros(field, n);
        v[i] = field.one();
        v
    }

    /// `y += c * x`
    pub fn axpy(y: &mut [Scalar], c: &Scalar, x: &[Scalar]) {
        if c.is_zero() {
            return;
        }
        for (a, b) in y.iter_mut().zip(x) {
            if !b.is_zero() {
                *a += &(c * b);
            }
        }
    }

    pub fn add(x: &[Scalar], y: &[Scalar]) -> Vector {
        x.iter().zip(y).map(|(a, b)| a + b).collect()
    }

    pub fn sub(x: &[Scalar], y: &[Scalar]) -> Vector {
        x.iter().zip(y).map(|(a, b)| a - b).collect()
    }

    pub fn scale(c: &Scalar, x: &[Scalar]) -> Vector {
        x.iter().map(|a| c * a).collect()
    }

    pub fn is_zero(x: &[Scalar]) -> bool {
        x.iter().all(Scalar::is_zero)
    }

    pub fn dot(x: &[Scalar], y: &[Scalar]) -> Scalar {
        let mut acc = match x.first() {
            Some(s) => s.field().zero(),
            None => return Field::Rational.zero(),
        };
        for (a, b) in x.iter().zip(y) {
            if !a.is_zero() && !b.is_zero() {
                acc += &(a * b);
            }
        }
        acc
    }

    /// Outer product flattened as `x ⊗ y` with index `i * y.len() + j`.
    pub fn tensor(x: &[Scalar], y: &[Scalar]) -> Vector {
        let field = x.first().or(y.first()).map_or(Field::Rational, Scalar::field);
        let mut out = zeros(field, x.len() * y.len());
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if !b.is_zero() {
                    out[i * y.len() + j] = a * b;
                }
            }
        }
        out
    }

    pub fn format(x: &[Scalar]) -> String {
        let cells: Vec<String> = x.iter().map(ToString::to_string).collect();
        format!("({})", cells.join(", "))
    }
}

/// Result of a consistent linear solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub particular: Vector,
    pub kernel: Vec<Vector>,
}

fn check_field(field: Field, v: &[Scalar]) -> Result<(), LinalgError> {
    if v.iter().any(|x| x.field() != field) {
        return Err(LinalgError::MixedFields);
    }
    Ok(())
}

/// Solves `m * x = b`: a particular solution (free variables set to zero) and
/// a kernel basis, or `None` when the system is inconsistent.
pub fn solve(m: &Matrix, b: &[Scalar]) -> Result<Option<Solution>, LinalgError> {
    if b.len() != m.rows() {
        return Err(LinalgError::DimensionMismatch { expected: m.rows(), found: b.len() });
    }
    check_field(m.field(), b)?;
    let n = m.cols();
    let mut e = Echelon::new(m.field(), n + 1);
    for r in 0..m.rows() {
        let mut row = sparse_from_dense(m.row(r));
        if !b[r].is_zero() {
            row.push((n, b[r].clone()));
        }
        e.insert(row);
    }
    Ok(solution_from_echelon(e, n))
}

/// Shared back end for affine solves over `n` unknowns where the echelon has an
/// extra right-hand-side column at index `n`.
pub(crate) fn solution_from_echelon(e: Echelon, n: usize) -> Option<Solution> {
    if e.is_pivot(n) {
        return None;
    }
    let field = e.field();
    let e = e.into_reduced();
    let mut particular = vector::zeros(field, n);
    for row in e.rows() {
        let lead = row[0].0;
        if let Some((_, v)) = row.iter().find(|(c, _)| *c == n) {
            particular[lead] = v.clone();
        }
    }
    let kernel = e
        .kernel_basis_reduced()
        .into_iter()
        .filter(|v| v[n].is_zero())
        .map(|mut v| {
            v.truncate(n);
            v
        })
        .collect();
    Some(Solution { particular, kernel })
}

/// A sparse affine system `Σ_j a_ij x_j = b_i`, built one equation at a time.
#[derive(Clone, Debug)]
pub struct AffineSystem {
    nvars: usize,
    echelon: Echelon,
}

impl AffineSystem {
    pub fn new(field: Field, nvars: usize) -> Self {
        AffineSystem { nvars, echelon: Echelon::new(field, nvars + 1) }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Adds `Σ coeffs = rhs`; repeated variables are summed.
    pub fn add(&mut self, coeffs: SparseVec, rhs: &Scalar) {
        let mut row = coeffs;
        if !rhs.is_zero() {
            row.push((self.nvars, rhs.clone()));
        }
        let row = normalize_sparse(row);
        if !row.is_empty() {
            self.echelon.insert(row);
        }
    }

    pub fn add_homogeneous(&mut self, coeffs: SparseVec) {
        let row = normalize_sparse(coeffs);
        if !row.is_empty() {
            self.echelon.insert(row);
        }
    }

    pub fn is_consistent(&self) -> bool {
        !self.echelon.is_pivot(self.nvars)
    }

    pub fn solve(self) -> Option<Solution> {
        solution_from_echelon(self.echelon, self.nvars)
    }
}

/// Coordinates `c` with `Σ c_i g_i = target`, or `None` when the target lies
/// outside the span.
pub fn span_membership(generators: &[Vector], target: &[Scalar]) -> Result<Option<Vector>, LinalgError> {
    let field = match target.first() {
        Some(x) => x.field(),
        None => return Ok(Some(vec![])),
    };
    for g in generators {
        if g.len() != target.len() {
            return Err(LinalgError::DimensionMismatch { expected: target.len(), found: g.len() });
        }
        check_field(field, g)?;
    }
    if generators.is_empty() {
        return Ok(vector::is_zero(target).then(Vec::new));
    }
    let m = Matrix::from_columns(field, target.len(), generators);
    Ok(solve(&m, target)?.map(|s| s.particular))
}

/// A subspace of `field^ambient`, kept in reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Subspace {
    echelon: Echelon,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace { echelon: Echelon::new(field, ambient) }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Subspace::span(field, ambient, (0..ambient).map(|i| vector::unit(field, ambient, i)))
    }

    pub fn span(field: Field, ambient: usize, vectors: impl IntoIterator<Item = Vector>) -> Self {
        let mut e = Echelon::new(field, ambient);
        for v in vectors {
            debug_assert_eq!(v.len(), ambient);
            e.insert(sparse_from_dense(&v));
        }
        Subspace { echelon: e.into_reduced() }
    }

    pub fn field(&self) -> Field {
        self.echelon.field()
    }

    pub fn ambient(&self) -> usize {
        self.echelon.ncols()
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    /// The canonical (reduced echelon) basis.
    pub fn basis(&self) -> Vec<Vector> {
        self.echelon.dense_rows()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.echelon.contains(v)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(self.field(), self.ambient(), self.basis().into_iter().chain(other.basis()))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        intersect(&self.basis(), &other.basis(), self.ambient()).map(|b| Subspace::span(self.field(), self.ambient(), b))
    }
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient() == other.ambient() && self.dim() == other.dim() && self.contains_subspace(other)
    }
}

/// Basis of `span(u) ∩ span(v)` in `field^ambient`, in reduced echelon form.
pub fn intersect(u: &[Vector], v: &[Vector], ambient: usize) -> Result<Vec<Vector>, LinalgError> {
    for w in u.iter().chain(v) {
        if w.len() != ambient {
            return Err(LinalgError::DimensionMismatch { expected: ambient, found: w.len() });
        }
    }
    let field = match u.first().or(v.first()) {
        Some(w) => match w.first() {
            Some(x) => x.field(),
            None => return Ok(vec![]),
        },
        None => return Ok(vec![]),
    };
    if u.is_empty() || v.is_empty() {
        return Ok(vec![]);
    }
    // Solve Σ a_i u_i - Σ b_j v_j = 0 and map the a-part back.
    let mut cols: Vec<Vector> = u.to_vec();
    cols.extend(v.iter().map(|w| w.iter().map(|x| -x).collect()));
    let m = Matrix::from_columns(field, ambient, &cols);
    let kernel = m.kernel();
    let mut e = Echelon::new(field, ambient);
    for k in kernel {
        let mut w = vector::zeros(field, ambient);
        for (i, ui) in u.iter().enumerate() {
            vector::axpy(&mut w, &k[i], ui);
        }
        e.insert(sparse_from_dense(&w));
    }
    Ok(e.into_reduced().dense_rows())
}

/// Coordinates with respect to a fixed linearly independent family.
///
/// Built once by reducing the family with a tracking block; every later
/// lookup is a single sparse reduction.
#[derive(Clone, Debug)]
pub struct CoordinateMap {
    field: Field,
    ambient: usize,
    len: usize,
    echelon: Echelon,
}

impl CoordinateMap {
    /// Fails with the index of the first vector that depends on the earlier ones.
    pub fn new(field: Field, ambient: usize, basis: &[Vector]) -> Result<Self, usize> {
        let n = basis.len();
        let mut e = Echelon::new(field, ambient + n);
        for (i, b) in basis.iter().enumerate() {
            assert_eq!(b.len(), ambient, "basis vector length");
            let mut row = sparse_from_dense(b);
            row.push((ambient + i, field.one()));
            e.insert(row);
            if e.rows()[i][0].0 >= ambient {
                return Err(i);
            }
        }
        Ok(CoordinateMap { field, ambient, len: n, echelon: e })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Coordinates of `x`, or `None` when `x` is outside the span.
    pub fn coords(&self, x: &[Scalar]) -> Option<Vector> {
        debug_assert_eq!(x.len(), self.ambient);
        let mut y = x.to_vec();
        y.resize(self.ambient + self.len, self.field.zero());
        for col in 0..self.ambient {
            if y[col].is_zero() {
                continue;
            }
            let row = self.echelon.pivot_row(col)?;
            let c = y[col].clone();
            for (j, v) in row {
                y[*j] -= &(&c * v);
            }
        }
        Some(y[self.ambient..].iter().map(|v| -v).collect())
    }

    pub fn contains(&self, x: &[Scalar]) -> bool {
        self.coords(x).is_some()
    }
}
