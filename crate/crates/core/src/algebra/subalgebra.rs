use std::sync::Arc;

use super::{AlgebraError, FinDimAlgebra};
use crate::linalg::{sparse_from_dense, CoordinateMap, Echelon, Matrix, Scalar, Subspace, Vector};

/// A unital subalgebra given by an explicit basis of ambient coordinate vectors.
#[derive(Clone, Debug)]
pub struct Subalgebra {
    ambient: Arc<FinDimAlgebra>,
    basis: Vec<Vector>,
    coords: CoordinateMap,
}

impl Subalgebra {
    /// Validates independence, presence of the unit and closure.
    pub fn new(ambient: Arc<FinDimAlgebra>, basis: Vec<Vector>) -> Result<Self, AlgebraError> {
        let coords = CoordinateMap::new(ambient.field(), ambient.dim(), &basis).map_err(AlgebraError::Dependent)?;
        if !coords.contains(ambient.unit()) {
            return Err(AlgebraError::MissingUnit);
        }
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                if !coords.contains(&ambient.mul(x, y)) {
                    return Err(AlgebraError::NotClosed(i, j));
                }
            }
        }
        Ok(Subalgebra { ambient, basis, coords })
    }

    pub(crate) fn from_trusted(ambient: Arc<FinDimAlgebra>, basis: Vec<Vector>) -> Self {
        let coords = CoordinateMap::new(ambient.field(), ambient.dim(), &basis).expect("independent basis");
        Subalgebra { ambient, basis, coords }
    }

    /// Smallest subalgebra containing the generators.
    pub fn generated_by(ambient: Arc<FinDimAlgebra>, generators: &[Vector]) -> Result<Self, AlgebraError> {
        let field = ambient.field();
        let n = ambient.dim();
        let mut e = Echelon::new(field, n);
        let mut basis = Vec::new();
        for g in std::iter::once(ambient.unit()).chain(generators) {
            if g.len() != n {
                return Err(crate::linalg::LinalgError::DimensionMismatch { expected: n, found: g.len() }.into());
            }
            if e.insert(sparse_from_dense(g)) {
                basis.push(g.clone());
            }
        }
        let mut i = 0;
        while i < basis.len() {
            let mut j = 0;
            while j <= i {
                for p in [ambient.mul(&basis[i], &basis[j]), ambient.mul(&basis[j], &basis[i])] {
                    if e.insert(sparse_from_dense(&p)) {
                        basis.push(p);
                    }
                }
                j += 1;
            }
            i += 1;
        }
        Ok(Subalgebra::from_trusted(ambient, basis))
    }

    /// `k · 1`.
    pub fn unit_subalgebra(ambient: Arc<FinDimAlgebra>) -> Self {
        let basis = vec![ambient.unit().clone()];
        Subalgebra::from_trusted(ambient, basis)
    }

    pub fn full(ambient: Arc<FinDimAlgebra>) -> Self {
        let basis = (0..ambient.dim()).map(|i| ambient.basis_vector(i)).collect();
        Subalgebra::from_trusted(ambient, basis)
    }

    pub fn ambient(&self) -> &FinDimAlgebra {
        &self.ambient
    }

    pub fn ambient_arc(&self) -> &Arc<FinDimAlgebra> {
        &self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn contains(&self, x: &[Scalar]) -> bool {
        self.coords.contains(x)
    }

    /// Coordinates of an ambient element with respect to the subalgebra basis.
    pub fn coords(&self, x: &[Scalar]) -> Option<Vector> {
        self.coords.coords(x)
    }

    /// Ambient element with the given subalgebra coordinates.
    pub fn embed(&self, c: &[Scalar]) -> Vector {
        let mut out = self.ambient.zero();
        for (ci, b) in c.iter().zip(&self.basis) {
            crate::linalg::vector::axpy(&mut out, ci, b);
        }
        out
    }

    /// Inclusion as an `ambient.dim() × dim()` matrix.
    pub fn inclusion(&self) -> Matrix {
        Matrix::from_columns(self.ambient.field(), self.ambient.dim(), &self.basis)
    }

    pub fn subspace(&self) -> Subspace {
        Subspace::span(self.ambient.field(), self.ambient.dim(), self.basis.iter().cloned())
    }

    /// Same subspace of the same ambient algebra.
    pub fn same_as(&self, other: &Subalgebra) -> bool {
        self.dim() == other.dim() && other.basis.iter().all(|b| self.contains(b))
    }

    pub fn is_contained_in(&self, other: &Subalgebra) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    /// The subalgebra as an algebra in its own right, on its basis.
    pub fn to_algebra(&self) -> FinDimAlgebra {
        let d = self.dim();
        let mut table = Vec::with_capacity(d * d);
        for x in &self.basis {
            for y in &self.basis {
                let c = self.coords(&self.ambient.mul(x, y)).expect("closed subalgebra");
                table.push(sparse_from_dense(&c));
            }
        }
        let unit = self.coords(self.ambient.unit()).expect("unit in subalgebra");
        FinDimAlgebra::from_table_unchecked(self.ambient.field(), d, table, unit)
    }

    /// Centralizer of this subalgebra in the ambient algebra.
    pub fn centralizer(&self) -> Subalgebra {
        self.ambient.centralizer_of(&self.basis)
    }
}
