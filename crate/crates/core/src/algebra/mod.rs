//! Finite-dimensional unital associative algebras given by structure
//! constants, together with subalgebras, module tensor products and
//! bimodule hom spaces.

mod group;
mod hom;
mod subalgebra;
mod tensor;

use thiserror::Error;

use crate::linalg::{
    dense_from_sparse, sparse_from_dense, vector, CoordinateMap, Echelon, Field, LinalgError, Matrix, Scalar,
    SparseVec, Vector,
};

pub use group::Group;
pub use hom::{bimodule_hom_space, commutant_maps, HomKind};
pub use subalgebra::Subalgebra;
pub use tensor::{RelativeTensorSquare, TensorProduct};
pub(crate) use tensor::add_tensor as tensor_add;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("structure constants have inconsistent shape: {0}")]
    Shape(String),
    #[error("associativity fails on basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("unit law fails on basis element {0}")]
    NotUnital(usize),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("vectors are linearly dependent (index {0})")]
    Dependent(usize),
    #[error("subspace is not closed under multiplication (basis pair ({0}, {1}))")]
    NotClosed(usize, usize),
    #[error("subspace does not contain the unit")]
    MissingUnit,
    #[error("unsupported characteristic: p = {p} does not exceed dimension {dim}")]
    UnsupportedCharacteristic { p: u64, dim: usize },
    #[error("map is not multiplicative on basis pair ({0}, {1})")]
    NotMultiplicative(usize, usize),
    #[error("map does not send unit to unit")]
    UnitNotPreserved,
    #[error("algebras are over different fields")]
    FieldMismatch,
    #[error("designated complement is not complementary to the relations")]
    BadComplement,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Finite-dimensional unital associative algebra over a field.
///
/// `e_i e_j` is stored sparsely at `table[i * dim + j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinDimAlgebra {
    field: Field,
    dim: usize,
    table: Vec<SparseVec>,
    unit: Vector,
}

impl FinDimAlgebra {
    /// Validated construction from a sparse multiplication table.
    pub fn from_table(field: Field, dim: usize, table: Vec<SparseVec>, unit: Vector) -> Result<Self, AlgebraError> {
        if table.len() != dim * dim {
            return Err(AlgebraError::Shape(format!("{} products for dimension {dim}", table.len())));
        }
        if unit.len() != dim {
            return Err(AlgebraError::Shape(format!("unit of length {} for dimension {dim}", unit.len())));
        }
        if table.iter().flatten().any(|(k, _)| *k >= dim) {
            return Err(AlgebraError::Shape("product index out of range".into()));
        }
        if table.iter().flatten().map(|(_, c)| c).chain(&unit).any(|c| c.field() != field) {
            return Err(LinalgError::MixedFields.into());
        }
        let alg = FinDimAlgebra { field, dim, table, unit };
        alg.check_unit()?;
        alg.check_associative()?;
        Ok(alg)
    }

    /// Construction without validation, for tables produced by trusted code.
    pub(crate) fn from_table_unchecked(field: Field, dim: usize, table: Vec<SparseVec>, unit: Vector) -> Self {
        FinDimAlgebra { field, dim, table, unit }
    }

    /// Validated construction from a dense cubic array `c[i][j][k]`.
    pub fn make_algebra(field: Field, constants: &[Vec<Vector>], unit: Vector) -> Result<Self, AlgebraError> {
        let dim = constants.len();
        let mut table = Vec::with_capacity(dim * dim);
        for (i, plane) in constants.iter().enumerate() {
            if plane.len() != dim {
                return Err(AlgebraError::Shape(format!("c[{i}] has {} entries, expected {dim}", plane.len())));
            }
            for (j, v) in plane.iter().enumerate() {
                if v.len() != dim {
                    return Err(AlgebraError::Shape(format!("c[{i}][{j}] has length {}, expected {dim}", v.len())));
                }
                table.push(sparse_from_dense(v));
            }
        }
        FinDimAlgebra::from_table(field, dim, table, unit)
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground(field: Field) -> Self {
        FinDimAlgebra { field, dim: 1, table: vec![vec![(0, field.one())]], unit: vec![field.one()] }
    }

    pub fn group_algebra(field: Field, group: &Group) -> Self {
        let n = group.order();
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                table.push(vec![(group.mul(i, j), field.one())]);
            }
        }
        FinDimAlgebra { field, dim: n, table, unit: vector::unit(field, n, group.identity()) }
    }

    /// `M_n(k)` on matrix units, `e_ij` at index `i * n + j`.
    pub fn matrix_algebra(field: Field, n: usize) -> Self {
        let d = n * n;
        let mut table = Vec::with_capacity(d * d);
        for a in 0..d {
            for b in 0..d {
                let (i, j) = (a / n, a % n);
                let (k, l) = (b / n, b % n);
                table.push(if j == k { vec![(i * n + l, field.one())] } else { Vec::new() });
            }
        }
        let mut unit = vector::zeros(field, d);
        for i in 0..n {
            unit[i * n + i] = field.one();
        }
        FinDimAlgebra { field, dim: d, table, unit }
    }

    /// The algebra spanned by a family of square matrices closed under
    /// composition and containing the identity. Also returns the coordinate
    /// map from flattened (row-major) matrices to the algebra basis.
    pub fn from_operator_basis(field: Field, ops: &[Matrix]) -> Result<(Self, CoordinateMap), AlgebraError> {
        let Some(first) = ops.first() else {
            return Err(AlgebraError::Shape("empty operator basis".into()));
        };
        let n = first.rows();
        let flat = |m: &Matrix| -> Vector { (0..n).flat_map(|r| m.row(r).to_vec()).collect() };
        let flats: Vec<Vector> = ops.iter().map(flat).collect();
        let coords = CoordinateMap::new(field, n * n, &flats).map_err(AlgebraError::Dependent)?;
        let dim = ops.len();
        let unit = coords.coords(&flat(&Matrix::identity(field, n))).ok_or(AlgebraError::MissingUnit)?;
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let c = coords.coords(&flat(&ops[i].mul(&ops[j]))).ok_or(AlgebraError::NotClosed(i, j))?;
                table.push(sparse_from_dense(&c));
            }
        }
        Ok((FinDimAlgebra { field, dim, table, unit }, coords))
    }

    /// Direct product `A × B`, basis of `A` first.
    pub fn direct_product(&self, other: &FinDimAlgebra) -> Result<Self, AlgebraError> {
        if self.field != other.field {
            return Err(AlgebraError::FieldMismatch);
        }
        let (m, n) = (self.dim, other.dim);
        let d = m + n;
        let mut table = vec![Vec::new(); d * d];
        for i in 0..m {
            for j in 0..m {
                table[i * d + j] = self.table[i * m + j].clone();
            }
        }
        for i in 0..n {
            for j in 0..n {
                table[(m + i) * d + m + j] = other.table[i * n + j].iter().map(|(k, c)| (m + k, c.clone())).collect();
            }
        }
        let mut unit = self.unit.clone();
        unit.extend(other.unit.iter().cloned());
        Ok(FinDimAlgebra { field: self.field, dim: d, table, unit })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        vector::unit(self.field, self.dim, i)
    }

    pub fn zero(&self) -> Vector {
        vector::zeros(self.field, self.dim)
    }

    /// `e_i e_j` as a sparse vector.
    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim + j]
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.basis_product(i, j)
            .iter()
            .find(|(c, _)| *c == k)
            .map_or_else(|| self.field.zero(), |(_, v)| v.clone())
    }

    /// Dense cubic array of structure constants.
    pub fn structure_constants(&self) -> Vec<Vec<Vector>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| dense_from_sparse(self.field, self.dim, self.basis_product(i, j))).collect())
            .collect()
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = self.zero();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.basis_product(i, j) {
                    out[*k] += &(&ab * c);
                }
            }
        }
        out
    }

    /// Product of several elements, left to right.
    pub fn mul_all(&self, xs: &[&[Scalar]]) -> Vector {
        xs.iter().fold(self.unit.clone(), |acc, x| self.mul(&acc, x))
    }

    /// Matrix of `y ↦ x y`.
    pub fn left_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Matrix of `y ↦ y x`.
    pub fn right_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(&self.basis_vector(j), x)).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    pub fn check_unit(&self) -> Result<(), AlgebraError> {
        for i in 0..self.dim {
            let e = self.basis_vector(i);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                return Err(AlgebraError::NotUnital(i));
            }
        }
        Ok(())
    }

    pub fn check_associative(&self) -> Result<(), AlgebraError> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let ij = dense_from_sparse(self.field, n, self.basis_product(i, j));
                for k in 0..n {
                    let left = self.mul(&ij, &self.basis_vector(k));
                    let mut right = self.zero();
                    for (l, c) in self.basis_product(j, k) {
                        for (m, d) in self.basis_product(i, *l) {
                            right[*m] += &(c * d);
                        }
                    }
                    if left != right {
                        return Err(AlgebraError::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn opposite(&self) -> FinDimAlgebra {
        let n = self.dim;
        let table = (0..n * n).map(|a| self.table[(a % n) * n + a / n].clone()).collect();
        FinDimAlgebra { field: self.field, dim: n, table, unit: self.unit.clone() }
    }

    /// `A ⊗_k B` with basis `e_i ⊗ f_j` at index `i * dim B + j`.
    pub fn tensor(&self, other: &FinDimAlgebra) -> Result<FinDimAlgebra, AlgebraError> {
        if self.field != other.field {
            return Err(AlgebraError::FieldMismatch);
        }
        let (m, n) = (self.dim, other.dim);
        let d = m * n;
        let mut table = Vec::with_capacity(d * d);
        for a in 0..d {
            let (i, j) = (a / n, a % n);
            for b in 0..d {
                let (k, l) = (b / n, b % n);
                let mut entry: SparseVec = Vec::new();
                for (p, c) in self.basis_product(i, k) {
                    for (q, e) in other.basis_product(j, l) {
                        entry.push((p * n + q, c * e));
                    }
                }
                entry.sort_by_key(|(idx, _)| *idx);
                table.push(entry);
            }
        }
        let unit = vector::tensor(&self.unit, &other.unit);
        Ok(FinDimAlgebra { field: self.field, dim: d, table, unit })
    }

    /// Solutions `z` of `z s = s z` for every `s` in the list.
    pub(crate) fn commuting_solutions(&self, elements: &[Vector]) -> Vec<Vector> {
        let mut e = Echelon::new(self.field, self.dim);
        for s in elements {
            let diff = self.left_mul_matrix(s).sub(&self.right_mul_matrix(s));
            for r in 0..self.dim {
                e.insert(sparse_from_dense(diff.row(r)));
            }
        }
        e.into_reduced().kernel_basis_reduced()
    }

    /// Centralizer of a set of elements (the span of `elements`).
    pub fn centralizer_of(self: &std::sync::Arc<Self>, elements: &[Vector]) -> Subalgebra {
        Subalgebra::from_trusted(self.clone(), self.commuting_solutions(elements))
    }

    pub fn center(self: &std::sync::Arc<Self>) -> Subalgebra {
        let basis: Vec<Vector> = (0..self.dim).map(|i| self.basis_vector(i)).collect();
        self.centralizer_of(&basis)
    }

    /// Matrix of the trace form `(a, b) ↦ tr(L_a L_b)` on basis elements.
    pub fn trace_form(&self) -> Matrix {
        let n = self.dim;
        Matrix::from_fn(self.field, n, n, |i, j| {
            let mut acc = self.field.zero();
            for k in 0..n {
                for (l, c1) in self.basis_product(j, k) {
                    for (m, c2) in self.basis_product(i, *l) {
                        if *m == k {
                            acc += &(c1 * c2);
                        }
                    }
                }
            }
            acc
        })
    }

    /// Jacobson radical as the kernel of the trace form. Only available in
    /// characteristic 0 or `p > dim`, where the two coincide.
    pub fn radical(&self) -> Result<Vec<Vector>, AlgebraError> {
        let p = self.field.characteristic();
        if p != 0 && p <= self.dim as u64 {
            return Err(AlgebraError::UnsupportedCharacteristic { p, dim: self.dim });
        }
        Ok(self.trace_form().kernel())
    }

    /// Radical zero and one-dimensional center.
    pub fn is_central_split_simple(self: &std::sync::Arc<Self>) -> Result<bool, AlgebraError> {
        Ok(self.radical()?.is_empty() && self.center().dim() == 1)
    }
}

/// A linear map between algebras that is claimed to be a homomorphism, or an
/// anti-homomorphism when `anti` is set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMorphism {
    pub matrix: Matrix,
    pub anti: bool,
}

impl AlgebraMorphism {
    pub fn new(matrix: Matrix) -> Self {
        AlgebraMorphism { matrix, anti: false }
    }

    pub fn anti(matrix: Matrix) -> Self {
        AlgebraMorphism { matrix, anti: true }
    }

    pub fn apply(&self, x: &[Scalar]) -> Vector {
        self.matrix.mul_vec(x)
    }

    /// Checks unit preservation and (anti-)multiplicativity on all basis pairs.
    pub fn verify(&self, source: &FinDimAlgebra, target: &FinDimAlgebra) -> Result<(), AlgebraError> {
        if self.matrix.rows() != target.dim() || self.matrix.cols() != source.dim() {
            return Err(LinalgError::DimensionMismatch { expected: source.dim(), found: self.matrix.cols() }.into());
        }
        if self.apply(source.unit()) != *target.unit() {
            return Err(AlgebraError::UnitNotPreserved);
        }
        let images = self.matrix.columns();
        for i in 0..source.dim() {
            for j in 0..source.dim() {
                let lhs = self.apply(&dense_from_sparse(source.field(), source.dim(), source.basis_product(i, j)));
                let rhs = if self.anti {
                    target.mul(&images[j], &images[i])
                } else {
                    target.mul(&images[i], &images[j])
                };
                if lhs != rhs {
                    return Err(AlgebraError::NotMultiplicative(i, j));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;

    fn q(n: i64) -> Scalar {
        Field::Rational.from_i64(n)
    }

    #[test]
    fn ground_field_from_constants() {
        let a = FinDimAlgebra::make_algebra(Field::Rational, &[vec![vec![q(1)]]], vec![q(1)]).unwrap();
        assert_eq!(a.dim(), 1);
        assert_eq!(a, FinDimAlgebra::ground(Field::Rational));
    }

    #[test]
    fn rejects_bad_constants() {
        // e0 is the unit, e1 e1 = e0 + e1 is fine, but make e1 e1 = e1 with
        // e0 not acting as identity.
        let c = vec![vec![vec![q(1), q(0)], vec![q(0), q(0)]], vec![vec![q(0), q(0)], vec![q(0), q(1)]]];
        assert_eq!(
            FinDimAlgebra::make_algebra(Field::Rational, &c, vec![q(1), q(0)]),
            Err(AlgebraError::NotUnital(1))
        );
        // Non-associative: unit e0, e1 e1 = e2, e1 e2 = 0, e2 e1 = e1, e2 e2 = 0.
        let mut c = vec![vec![vec![q(0); 3]; 3]; 3];
        for i in 0..3 {
            c[0][i][i] = q(1);
            c[i][0][i] = q(1);
        }
        c[1][1][2] = q(1);
        c[2][1][1] = q(1);
        let err = FinDimAlgebra::make_algebra(Field::Rational, &c, vec![q(1), q(0), q(0)]).unwrap_err();
        assert!(matches!(err, AlgebraError::NotAssociative(..)));
    }

    #[test]
    fn group_and_matrix_algebras() {
        let c2 = FinDimAlgebra::group_algebra(Field::Rational, &Group::cyclic(2));
        assert_eq!(c2.dim(), 2);
        c2.check_associative().unwrap();
        let m2 = FinDimAlgebra::matrix_algebra(Field::Rational, 2);
        assert_eq!(m2.dim(), 4);
        m2.check_associative().unwrap();
        m2.check_unit().unwrap();
        // e_12 e_21 = e_11, and in the opposite algebra e_12 * e_21 = e_22
        assert_eq!(m2.basis_product(1, 2), &vec![(0, q(1))]);
        assert_eq!(m2.opposite().basis_product(1, 2), &vec![(3, q(1))]);
        assert_eq!(m2.opposite().opposite(), m2);
        assert_eq!(c2.opposite(), c2);
    }

    #[test]
    fn centers() {
        let m2 = Arc::new(FinDimAlgebra::matrix_algebra(Field::Rational, 2));
        assert_eq!(m2.center().dim(), 1);
        let s3 = Group::symmetric(3);
        let a = Arc::new(FinDimAlgebra::group_algebra(Field::Rational, &s3));
        let z = a.center();
        assert_eq!(z.dim(), 3);
        let mut transpositions = a.zero();
        for name in ["(12)", "(13)", "(23)"] {
            transpositions[s3.index_of(name).unwrap()] = q(1);
        }
        assert!(z.contains(&transpositions));
        let c2 = Arc::new(FinDimAlgebra::group_algebra(Field::Rational, &Group::cyclic(2)));
        assert_eq!(c2.center().dim(), 2);
    }

    #[test]
    fn radical_and_simplicity() {
        let m2 = Arc::new(FinDimAlgebra::matrix_algebra(Field::Rational, 2));
        assert!(m2.radical().unwrap().is_empty());
        assert!(m2.is_central_split_simple().unwrap());

        // Q[x]/(x^2)
        let c = vec![vec![vec![q(1), q(0)], vec![q(0), q(1)]], vec![vec![q(0), q(1)], vec![q(0), q(0)]]];
        let dual = FinDimAlgebra::make_algebra(Field::Rational, &c, vec![q(1), q(0)]).unwrap();
        assert_eq!(dual.radical().unwrap(), vec![vec![q(0), q(1)]]);

        let gf2 = Field::prime(2).unwrap();
        let c2 = FinDimAlgebra::group_algebra(gf2, &Group::cyclic(2));
        assert_eq!(c2.radical(), Err(AlgebraError::UnsupportedCharacteristic { p: 2, dim: 2 }));
        assert!(c2.radical().unwrap_err().to_string().contains("unsupported characteristic"));

        let s3 = Arc::new(FinDimAlgebra::group_algebra(Field::Rational, &Group::symmetric(3)));
        assert!(!s3.is_central_split_simple().unwrap());
        let k = FinDimAlgebra::ground(Field::Rational);
        let qq = Arc::new(k.direct_product(&k).unwrap());
        assert!(!qq.is_central_split_simple().unwrap());
    }

    #[test]
    fn tensors_over_field() {
        let m2 = FinDimAlgebra::matrix_algebra(Field::Rational, 2);
        let k = FinDimAlgebra::ground(Field::Rational);
        assert_eq!(m2.tensor(&k).unwrap(), m2);
        let m4 = Arc::new(m2.tensor(&m2).unwrap());
        assert_eq!(m4.dim(), 16);
        m4.check_associative().unwrap();
        assert!(m4.is_central_split_simple().unwrap());
        let c2 = FinDimAlgebra::group_algebra(Field::Rational, &Group::cyclic(2));
        let v4 = c2.tensor(&c2).unwrap();
        assert!(v4.is_commutative());
        assert_eq!(v4.dim(), 4);
    }

    #[test]
    fn morphism_checks() {
        let m2 = FinDimAlgebra::matrix_algebra(Field::Rational, 2);
        let id = AlgebraMorphism::new(Matrix::identity(Field::Rational, 4));
        id.verify(&m2, &m2).unwrap();
        // transpose is an anti-automorphism
        let t = Matrix::from_fn(Field::Rational, 4, 4, |r, c| if r == (c % 2) * 2 + c / 2 { q(1) } else { q(0) });
        AlgebraMorphism::anti(t.clone()).verify(&m2, &m2).unwrap();
        assert!(AlgebraMorphism::new(t).verify(&m2, &m2).is_err());
    }

    #[test]
    fn operator_basis_algebra() {
        let m2 = FinDimAlgebra::matrix_algebra(Field::Rational, 2);
        let ops: Vec<Matrix> = (0..4).map(|i| m2.left_mul_matrix(&m2.basis_vector(i))).collect();
        let (alg, _) = FinDimAlgebra::from_operator_basis(Field::Rational, &ops).unwrap();
        assert_eq!(alg, m2);
    }
}
