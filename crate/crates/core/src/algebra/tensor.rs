use std::sync::Arc;

use super::{AlgebraError, FinDimAlgebra, Subalgebra};
use crate::linalg::{normalize_sparse, sparse_from_dense, vector, Echelon, Field, Matrix, Scalar, SparseVec, Vector};

/// `M ⊗_R N` realized as a quotient of `M ⊗_k N` by the span of
/// `(m·r)⊗n − m⊗(r·n)`, index `i * dim N + j` for `m_i ⊗ n_j`.
///
/// Quotient coordinates are the entries on the non-pivot columns of the
/// reduced relations. The section defaults to the corresponding basis lift,
/// and can be replaced by any subspace complementary to the relations.
#[derive(Clone, Debug)]
pub struct TensorProduct {
    field: Field,
    left_dim: usize,
    right_dim: usize,
    relations: Echelon,
    free: Vec<usize>,
    /// Position of each ambient column among the free columns.
    free_pos: Vec<Option<u32>>,
    section: Option<Vec<SparseVec>>,
}

impl TensorProduct {
    /// Plain `M ⊗_k N`.
    pub fn over_field(field: Field, left_dim: usize, right_dim: usize) -> Self {
        TensorProduct::from_relations(field, left_dim, right_dim, std::iter::empty())
    }

    /// `right_actions[k]` is the matrix of `m ↦ m·r_k` on `M`, and
    /// `left_actions[k]` that of `n ↦ r_k·n` on `N`.
    pub fn new(field: Field, left_dim: usize, right_dim: usize, right_actions: &[Matrix], left_actions: &[Matrix]) -> Self {
        assert_eq!(right_actions.len(), left_actions.len(), "one action pair per base element");
        let n = right_dim;
        let mut rows = Vec::new();
        for (ra, la) in right_actions.iter().zip(left_actions) {
            let rcols = ra.sparse_columns();
            let lcols = la.sparse_columns();
            for (i, rc) in rcols.iter().enumerate() {
                for (j, lc) in lcols.iter().enumerate() {
                    let mut row: SparseVec = rc.iter().map(|(p, c)| (p * n + j, c.clone())).collect();
                    row.extend(lc.iter().map(|(q, d)| (i * n + q, -d)));
                    rows.push(normalize_sparse(row));
                }
            }
        }
        TensorProduct::from_relations(field, left_dim, right_dim, rows.into_iter())
    }

    pub fn from_relations(
        field: Field,
        left_dim: usize,
        right_dim: usize,
        relations: impl Iterator<Item = SparseVec>,
    ) -> Self {
        let mut e = Echelon::new(field, left_dim * right_dim);
        for r in relations {
            if !r.is_empty() {
                e.insert(r);
            }
        }
        let free = e.free_cols();
        let mut free_pos = vec![None; left_dim * right_dim];
        for (i, &f) in free.iter().enumerate() {
            free_pos[f] = Some(i as u32);
        }
        TensorProduct { field, left_dim, right_dim, relations: e, free, free_pos, section: None }
    }

    /// Replaces the section by the one whose image is the given complement.
    pub fn with_complement(mut self, complement: &[Vector]) -> Result<Self, AlgebraError> {
        let q = self.dim();
        if complement.len() != q {
            return Err(AlgebraError::BadComplement);
        }
        let cols: Vec<Vector> = complement.iter().map(|c| self.project(c)).collect();
        let p = Matrix::from_columns(self.field, q, &cols);
        let inv = p.inverse().ok_or(AlgebraError::BadComplement)?;
        let lifts = (0..q)
            .map(|i| {
                let mut v = vector::zeros(self.field, self.ambient_dim());
                for (j, c) in complement.iter().enumerate() {
                    vector::axpy(&mut v, inv.get(j, i), c);
                }
                sparse_from_dense(&v)
            })
            .collect();
        self.section = Some(lifts);
        Ok(self)
    }

    /// The same quotient with the basis-lift section.
    pub fn with_canonical_section(&self) -> Self {
        TensorProduct { section: None, ..self.clone() }
    }

    pub fn has_designated_section(&self) -> bool {
        self.section.is_some()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn left_dim(&self) -> usize {
        self.left_dim
    }

    pub fn right_dim(&self) -> usize {
        self.right_dim
    }

    pub fn ambient_dim(&self) -> usize {
        self.left_dim * self.right_dim
    }

    /// The pair of basis indices whose tensor is the basis lift of quotient
    /// basis vector `i`.
    pub fn legs(&self, i: usize) -> (usize, usize) {
        let f = self.free[i];
        (f / self.right_dim, f % self.right_dim)
    }

    pub fn project(&self, x: &[Scalar]) -> Vector {
        let mut y = x.to_vec();
        self.relations.reduce_dense(&mut y);
        self.free.iter().map(|&f| y[f].clone()).collect()
    }

    /// Projection of an unsorted sparse vector (repeated indices are summed).
    pub fn project_sparse(&self, x: SparseVec) -> Vector {
        let row = self.relations.reduce_sparse(normalize_sparse(x));
        let mut out = vector::zeros(self.field, self.dim());
        for (j, c) in row {
            let pos = self.free_pos[j].expect("reduced rows live on free columns");
            out[pos as usize] = c;
        }
        out
    }

    /// Class of `x ⊗ y`.
    pub fn pure(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut acc = Vec::new();
        push_tensor(&mut acc, &self.field.one(), x, y);
        self.project_sparse(acc)
    }

    pub fn is_zero_class(&self, x: &[Scalar]) -> bool {
        vector::is_zero(&self.project(x))
    }

    /// Representative in `M ⊗_k N` under the current section.
    pub fn lift(&self, q: &[Scalar]) -> Vector {
        let mut v = vector::zeros(self.field, self.ambient_dim());
        for (i, c) in q.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match &self.section {
                None => v[self.free[i]] += c,
                Some(lifts) => {
                    for (j, d) in &lifts[i] {
                        v[*j] += &(c * d);
                    }
                }
            }
        }
        v
    }

    /// The class `q` as a sum of pure basis tensors `c · e_a ⊗ e_b` (the
    /// canonical lift).
    pub fn terms<'a>(&'a self, q: &'a [Scalar]) -> impl Iterator<Item = (usize, usize, &'a Scalar)> + 'a {
        q.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| {
            let (a, b) = self.legs(i);
            (a, b, c)
        })
    }

    /// Applies `f ⊗ g` (given on basis vectors) to the basis lift of `q` and
    /// projects into `target`. Well defined whenever `f ⊗ g` maps relations
    /// into relations of `target`.
    pub fn map_legs(
        &self,
        q: &[Scalar],
        target: &TensorProduct,
        f: impl Fn(usize) -> Vector,
        g: impl Fn(usize) -> Vector,
    ) -> Vector {
        let mut acc = Vec::new();
        for (i, c) in q.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (a, b) = self.legs(i);
            let (x, y) = (f(a), g(b));
            push_tensor(&mut acc, c, &x, &y);
        }
        target.project_sparse(acc)
    }

    /// Matrix of the induced map `f ⊗ g` into `target`.
    pub fn induced(&self, f: &Matrix, g: &Matrix, target: &TensorProduct) -> Matrix {
        let fc = f.columns();
        let gc = g.columns();
        let cols: Vec<Vector> = (0..self.dim())
            .map(|i| {
                let (a, b) = self.legs(i);
                target.pure(&fc[a], &gc[b])
            })
            .collect();
        Matrix::from_columns(self.field, target.dim(), &cols)
    }

    /// Matrix of the map induced on the quotient by `f ⊗ id`.
    pub fn induced_left(&self, f: &Matrix) -> Matrix {
        self.induced(f, &Matrix::identity(self.field, self.right_dim), self)
    }

    /// Matrix of the map induced on the quotient by `id ⊗ g`.
    pub fn induced_right(&self, g: &Matrix) -> Matrix {
        self.induced(&Matrix::identity(self.field, self.left_dim), g, self)
    }
}

/// Appends the entries of `c · (x ⊗ y)` to an unsorted sparse accumulator.
pub(crate) fn push_tensor(acc: &mut SparseVec, c: &Scalar, x: &[Scalar], y: &[Scalar]) {
    let n = y.len();
    let ys: Vec<(usize, &Scalar)> = y.iter().enumerate().filter(|(_, v)| !v.is_zero()).collect();
    for (p, xp) in x.iter().enumerate() {
        if xp.is_zero() {
            continue;
        }
        let cx = c * xp;
        for (r, yr) in &ys {
            acc.push((p * n + r, &cx * *yr));
        }
    }
}

/// `acc += c · (x ⊗ y)`.
pub(crate) fn add_tensor(acc: &mut [Scalar], c: &Scalar, x: &[Scalar], y: &[Scalar]) {
    let n = y.len();
    for (p, xp) in x.iter().enumerate() {
        if xp.is_zero() {
            continue;
        }
        let cx = c * xp;
        for (r, yr) in y.iter().enumerate() {
            if !yr.is_zero() {
                acc[p * n + r] += &(&cx * yr);
            }
        }
    }
}

/// `A ⊗_B A` for a subalgebra `B ⊆ A`, with its `A`-bimodule structure.
#[derive(Clone, Debug)]
pub struct RelativeTensorSquare {
    algebra: Arc<FinDimAlgebra>,
    base: Subalgebra,
    tensor: TensorProduct,
}

impl RelativeTensorSquare {
    pub fn new(base: &Subalgebra) -> Self {
        let a = base.ambient_arc().clone();
        let right: Vec<Matrix> = base.basis().iter().map(|b| a.right_mul_matrix(b)).collect();
        let left: Vec<Matrix> = base.basis().iter().map(|b| a.left_mul_matrix(b)).collect();
        let tensor = TensorProduct::new(a.field(), a.dim(), a.dim(), &right, &left);
        RelativeTensorSquare { algebra: a, base: base.clone(), tensor }
    }

    pub fn algebra(&self) -> &FinDimAlgebra {
        &self.algebra
    }

    pub fn base(&self) -> &Subalgebra {
        &self.base
    }

    pub fn tensor(&self) -> &TensorProduct {
        &self.tensor
    }

    pub fn dim(&self) -> usize {
        self.tensor.dim()
    }

    pub fn pure(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.tensor.pure(x, y)
    }

    pub fn one_one(&self) -> Vector {
        self.pure(self.algebra.unit(), self.algebra.unit())
    }

    /// Basis-lift legs of quotient basis vector `i` as algebra elements.
    pub fn legs(&self, i: usize) -> (Vector, Vector) {
        let (a, b) = self.tensor.legs(i);
        (self.algebra.basis_vector(a), self.algebra.basis_vector(b))
    }

    /// `x · t · y`.
    pub fn sandwich(&self, x: &[Scalar], t: &[Scalar], y: &[Scalar]) -> Vector {
        let a = &self.algebra;
        self.tensor.map_legs(t, &self.tensor, |i| a.mul(x, &a.basis_vector(i)), |j| a.mul(&a.basis_vector(j), y))
    }

    pub fn left_mul(&self, x: &[Scalar], t: &[Scalar]) -> Vector {
        self.sandwich(x, t, self.algebra.unit())
    }

    pub fn right_mul(&self, t: &[Scalar], y: &[Scalar]) -> Vector {
        self.sandwich(self.algebra.unit(), t, y)
    }

    /// `t¹ t²`.
    pub fn multiply(&self, t: &[Scalar]) -> Vector {
        let a = &self.algebra;
        let mut out = a.zero();
        for (i, c) in t.iter().enumerate() {
            if !c.is_zero() {
                let (x, y) = self.tensor.legs(i);
                for (k, d) in a.basis_product(x, y) {
                    out[*k] += &(c * d);
                }
            }
        }
        out
    }

    pub fn left_action_matrix(&self, x: &[Scalar]) -> Matrix {
        self.tensor.induced_left(&self.algebra.left_mul_matrix(x))
    }

    pub fn right_action_matrix(&self, y: &[Scalar]) -> Matrix {
        self.tensor.induced_right(&self.algebra.right_mul_matrix(y))
    }

    /// Elements `t` with `x t = t x` for every listed `x`.
    pub fn centralizing(&self, elements: &[Vector]) -> Vec<Vector> {
        let mut e = Echelon::new(self.algebra.field(), self.dim());
        for x in elements {
            let d = self.left_action_matrix(x).sub(&self.right_action_matrix(x));
            for r in 0..d.rows() {
                e.insert(sparse_from_dense(d.row(r)));
            }
        }
        e.into_reduced().kernel_basis_reduced()
    }

    /// Basis of the `B`-central elements `(A ⊗_B A)^B`.
    pub fn b_central_elements(&self) -> Vec<Vector> {
        self.centralizing(self.base.basis())
    }

    /// Basis of the Casimir elements `(A ⊗_B A)^A`.
    pub fn casimir_elements(&self) -> Vec<Vector> {
        let basis: Vec<Vector> = (0..self.algebra.dim()).map(|i| self.algebra.basis_vector(i)).collect();
        self.centralizing(&basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Group;
    use crate::linalg::Subspace;

    fn s3_over_a3() -> (Group, Subalgebra) {
        let g = Group::symmetric(3);
        let a = Arc::new(FinDimAlgebra::group_algebra(Field::Rational, &g));
        let r = a.basis_vector(g.index_of("(123)").unwrap());
        (g, Subalgebra::generated_by(a, &[r]).unwrap())
    }

    #[test]
    fn tensor_square_dimensions() {
        let k = Arc::new(FinDimAlgebra::ground(Field::Rational));
        assert_eq!(RelativeTensorSquare::new(&Subalgebra::full(k)).dim(), 1);
        let (_, b) = s3_over_a3();
        let rts = RelativeTensorSquare::new(&b);
        assert_eq!(rts.dim(), 12);
        assert_eq!(rts.b_central_elements().len(), 8);
        let m2 = Arc::new(FinDimAlgebra::matrix_algebra(Field::Rational, 2));
        let rts = RelativeTensorSquare::new(&Subalgebra::unit_subalgebra(m2.clone()));
        assert_eq!(rts.dim(), 16);
        assert_eq!(rts.b_central_elements().len(), 16);
        // Σ_i e_ip ⊗ e_qi is Casimir for every (p, q), so the space has dimension 4
        let cas = Subspace::span(Field::Rational, 16, rts.casimir_elements());
        assert_eq!(cas.dim(), 4);
        for p in 0..2 {
            for q in 0..2 {
                let mut e = vector::zeros(Field::Rational, 16);
                for i in 0..2 {
                    e = vector::add(&e, &rts.pure(&m2.basis_vector(i * 2 + p), &m2.basis_vector(q * 2 + i)));
                }
                assert!(cas.contains(&e));
            }
        }
    }

    #[test]
    fn relations_vanish_and_actions_commute() {
        let (_, b) = s3_over_a3();
        let rts = RelativeTensorSquare::new(&b);
        let a = rts.algebra().clone();
        for bb in b.basis() {
            for i in 0..a.dim() {
                for j in 0..a.dim() {
                    let x = a.basis_vector(i);
                    let y = a.basis_vector(j);
                    let lhs = rts.pure(&a.mul(&x, bb), &y);
                    let rhs = rts.pure(&x, &a.mul(bb, &y));
                    assert_eq!(lhs, rhs);
                }
            }
        }
        let x = a.basis_vector(3);
        let y = a.basis_vector(5);
        let l = rts.left_action_matrix(&x);
        let r = rts.right_action_matrix(&y);
        assert_eq!(l.mul(&r), r.mul(&l));
    }

    #[test]
    fn casimir_of_group_algebra() {
        let c2 = Arc::new(FinDimAlgebra::group_algebra(Field::Rational, &Group::cyclic(2)));
        let rts = RelativeTensorSquare::new(&Subalgebra::unit_subalgebra(c2.clone()));
        let cas = Subspace::span(Field::Rational, 4, rts.casimir_elements());
        assert_eq!(cas.dim(), 2);
        let (one, g) = (c2.basis_vector(0), c2.basis_vector(1));
        assert!(cas.contains(&vector::add(&rts.pure(&one, &one), &rts.pure(&g, &g))));
        assert!(cas.contains(&vector::add(&rts.pure(&one, &g), &rts.pure(&g, &one))));
        // A ⊗_A A ≅ A: Casimir elements correspond to the center
        let s3 = Arc::new(FinDimAlgebra::group_algebra(Field::Rational, &Group::symmetric(3)));
        let rts = RelativeTensorSquare::new(&Subalgebra::full(s3.clone()));
        assert_eq!(rts.dim(), 6);
        assert_eq!(rts.casimir_elements().len(), s3.center().dim());
    }

    #[test]
    fn designated_section() {
        let tp = TensorProduct::from_relations(Field::Rational, 1, 2, std::iter::once(vec![
            (0, Field::Rational.one()),
            (1, Field::Rational.from_i64(-1)),
        ]));
        assert_eq!(tp.dim(), 1);
        let q = Field::Rational.one();
        assert_eq!(tp.lift(&[q.clone()]), vec![Field::Rational.zero(), q.clone()]);
        let half = Field::Rational.ratio(1, 2).unwrap();
        let tp = tp.with_complement(&[vec![q.clone(), q.clone()]]).unwrap();
        assert_eq!(tp.lift(&[q]), vec![half.clone(), half]);
    }
}
