//! Finite-dimensional Hopf algebras and the Hopf-Galois data of a comodule
//! algebra: Galois maps, the Miyashita-Ulbrich action, smash products, the
//! Drinfeld double and the Hopf algebroid on `R ⋊ H^op`.
//!
//! Elements of `H ⊗ H` use index `i·n + j`; `H*` is always presented on the
//! basis dual to that of `H`.

mod double;
mod galois;
mod smash;

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{AlgebraError, FinDimAlgebra, Group};
use crate::bialgebroid::BialgebroidError;
use crate::linalg::{sparse_from_dense, vector, Echelon, Field, Matrix, Scalar, Vector};
use crate::verify::{first_failure, first_pair_failure, Verification};

pub use double::{
    check_double_relation, check_quasitriangular, drinfeld_double, hgalois_top_hopf_algebroid, lu_theorem_hopf_algebroid,
    DoubleModuleAlgebra, TopHopfAlgebroid,
};
pub use galois::{ComoduleAlgebra, HopfGalois};
pub use smash::{check_module_algebra, iso_s_to_smash, iso_top_to_smash, smash_product, SmashIso};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HopfError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Bialgebroid(#[from] BialgebroidError),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("axiom fails: {0}")]
    Invalid(String),
    #[error("antipode is not invertible")]
    NotInvertible,
    #[error("not Hopf-Galois: {0}")]
    NotGalois(String),
    #[error("action is not a module-algebra action: {0}")]
    NotMeasuring(String),
    #[error("integrals pair to zero")]
    DegeneratePairing,
    #[error("pre-braided commutativity fails on basis pair {0:?}")]
    LuCondition((usize, usize)),
}

/// First failing identity of a verification, as an error.
pub(crate) fn require(v: &Verification, err: impl Fn(String) -> HopfError) -> Result<(), HopfError> {
    match v.failures().next() {
        None => Ok(()),
        Some(f) => Err(err(format!("{}: {}", f.name, f.witness))),
    }
}

/// A finite-dimensional Hopf algebra. `coproduct` is `n² × n`, `counit` a
/// row of length `n`, `antipode` `n × n`.
#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    algebra: Arc<FinDimAlgebra>,
    coproduct: Matrix,
    counit: Vector,
    antipode: Matrix,
    terms: Vec<Vec<(usize, usize, Scalar)>>,
}

impl HopfAlgebra {
    /// Validated construction; fails with the first violated axiom.
    pub fn new(algebra: Arc<FinDimAlgebra>, coproduct: Matrix, counit: Vector, antipode: Matrix) -> Result<Self, HopfError> {
        let n = algebra.dim();
        if coproduct.rows() != n * n || coproduct.cols() != n || counit.len() != n || antipode.rows() != n || antipode.cols() != n {
            return Err(HopfError::Shape(format!("structure maps do not fit dimension {n}")));
        }
        let h = HopfAlgebra::new_unchecked(algebra, coproduct, counit, antipode);
        require(&h.verify(), HopfError::Invalid)?;
        Ok(h)
    }

    pub(crate) fn new_unchecked(algebra: Arc<FinDimAlgebra>, coproduct: Matrix, counit: Vector, antipode: Matrix) -> Self {
        let n = algebra.dim();
        let terms = (0..n)
            .map(|k| {
                coproduct
                    .sparse_column(k)
                    .into_iter()
                    .map(|(idx, c)| (idx / n, idx % n, c))
                    .collect()
            })
            .collect();
        HopfAlgebra { algebra, coproduct, counit, antipode, terms }
    }

    /// `k[G]` with `Δ(g) = g ⊗ g`, `ε(g) = 1`, `S(g) = g⁻¹`.
    pub fn group(field: Field, group: &Group) -> Self {
        let n = group.order();
        let algebra = Arc::new(FinDimAlgebra::group_algebra(field, group));
        let coproduct = Matrix::from_fn(field, n * n, n, |r, g| if r == g * n + g { field.one() } else { field.zero() });
        let antipode = Matrix::from_fn(field, n, n, |r, g| if r == group.inverse(g) { field.one() } else { field.zero() });
        HopfAlgebra::new_unchecked(algebra, coproduct, vec![field.one(); n], antipode)
    }

    /// The ground field as a Hopf algebra.
    pub fn ground(field: Field) -> Self {
        let one = Matrix::identity(field, 1);
        HopfAlgebra::new_unchecked(Arc::new(FinDimAlgebra::ground(field)), one.clone(), vec![field.one()], one)
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn algebra(&self) -> &Arc<FinDimAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn coproduct(&self) -> &Matrix {
        &self.coproduct
    }

    pub fn counit(&self) -> &Vector {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    /// Nonzero terms `(i, j, c)` of `Δ(h_k) = Σ c h_i ⊗ h_j`.
    pub fn delta_terms(&self, k: usize) -> &[(usize, usize, Scalar)] {
        &self.terms[k]
    }

    pub fn delta(&self, x: &[Scalar]) -> Vector {
        self.coproduct.mul_vec(x)
    }

    pub fn eps(&self, x: &[Scalar]) -> Scalar {
        vector::dot(&self.counit, x)
    }

    pub fn s(&self, x: &[Scalar]) -> Vector {
        self.antipode.mul_vec(x)
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.algebra.mul(x, y)
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        self.algebra.basis_vector(i)
    }

    /// `h₁ ⊗ h₂ ⊗ h₃` as terms `(i, j, l, c)`.
    pub fn delta2_terms(&self, k: usize) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for (i, m, c) in &self.terms[k] {
            for (j, l, d) in &self.terms[*m] {
                out.push((*i, *j, *l, c * d));
            }
        }
        out
    }

    pub fn antipode_inverse(&self) -> Option<Matrix> {
        self.antipode.inverse()
    }

    /// Product in the algebra `H ⊗ H`.
    pub(crate) fn tensor_mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = vector::zeros(self.field(), n * n);
        for (p, xp) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (q, yq) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let c = xp * yq;
                let left = self.algebra.basis_product(p / n, q / n);
                let right = self.algebra.basis_product(p % n, q % n);
                for (a, ca) in left {
                    for (b, cb) in right {
                        out[a * n + b] += &(&(&c * ca) * cb);
                    }
                }
            }
        }
        out
    }

    pub fn verify(&self) -> Verification {
        let n = self.dim();
        let field = self.field();
        let a = &self.algebra;
        let mut v = Verification::new();
        v.record(
            "coassociative",
            first_failure(n, |k| {
                let mut lhs = vector::zeros(field, n * n * n);
                let mut rhs = vector::zeros(field, n * n * n);
                for (i, j, c) in &self.terms[k] {
                    for (x, y, d) in &self.terms[*i] {
                        lhs[(x * n + y) * n + j] += &(c * d);
                    }
                    for (x, y, d) in &self.terms[*j] {
                        rhs[(i * n + x) * n + y] += &(c * d);
                    }
                }
                lhs == rhs
            }),
        );
        v.record(
            "counit",
            first_failure(n, |k| {
                let mut left = vector::zeros(field, n);
                let mut right = vector::zeros(field, n);
                for (i, j, c) in &self.terms[k] {
                    left[*j] += &(c * &self.counit[*i]);
                    right[*i] += &(c * &self.counit[*j]);
                }
                left == a.basis_vector(k) && right == a.basis_vector(k)
            }),
        );
        let delta_basis: Vec<Vector> = (0..n).map(|k| self.coproduct.column(k)).collect();
        v.record(
            "coproduct multiplicative",
            first_pair_failure(n, n, |i, j| {
                let prod = crate::linalg::dense_from_sparse(field, n, a.basis_product(i, j));
                self.delta(&prod) == self.tensor_mul(&delta_basis[i], &delta_basis[j])
            }),
        );
        v.check("coproduct unital", self.delta(a.unit()) == vector::tensor(a.unit(), a.unit()), "Δ(1) = 1 ⊗ 1");
        v.record(
            "counit multiplicative",
            first_pair_failure(n, n, |i, j| {
                let prod = crate::linalg::dense_from_sparse(field, n, a.basis_product(i, j));
                self.eps(&prod) == &self.counit[i] * &self.counit[j]
            }),
        );
        v.check("counit unital", self.eps(a.unit()).is_one(), "ε(1) = 1");
        v.record(
            "antipode",
            first_failure(n, |k| {
                let mut left = a.zero();
                let mut right = a.zero();
                for (i, j, c) in &self.terms[k] {
                    vector::axpy(&mut left, c, &a.mul(&self.antipode.column(*i), &a.basis_vector(*j)));
                    vector::axpy(&mut right, c, &a.mul(&a.basis_vector(*i), &self.antipode.column(*j)));
                }
                let expected = vector::scale(&self.counit[k], a.unit());
                left == expected && right == expected
            }),
        );
        v
    }

    /// `H*` on the dual basis: `(pp')(h) = p(h₁)p'(h₂)`, `Δ(p)(h ⊗ h') =
    /// p(hh')`, unit `ε`, counit evaluation at `1`, antipode `S*`.
    pub fn dual(&self) -> HopfAlgebra {
        let n = self.dim();
        let field = self.field();
        let mut table = vec![Vec::new(); n * n];
        for k in 0..n {
            for (i, j, c) in &self.terms[k] {
                table[i * n + j].push((k, c.clone()));
            }
        }
        let table = table.into_iter().map(crate::linalg::normalize_sparse).collect();
        let algebra = Arc::new(FinDimAlgebra::from_table_unchecked(field, n, table, self.counit.clone()));
        let coproduct = Matrix::from_fn(field, n * n, n, |ij, k| self.algebra.constant(ij / n, ij % n, k));
        HopfAlgebra::new_unchecked(algebra, coproduct, self.algebra.unit().clone(), self.antipode.transpose())
    }

    /// `H^op`: opposite multiplication, same coalgebra, antipode `S⁻¹`.
    pub fn opposite(&self) -> Result<HopfAlgebra, HopfError> {
        let inv = self.antipode_inverse().ok_or(HopfError::NotInvertible)?;
        Ok(HopfAlgebra::new_unchecked(
            Arc::new(self.algebra.opposite()),
            self.coproduct.clone(),
            self.counit.clone(),
            inv,
        ))
    }

    /// Basis of the left integrals `{t : ht = ε(h)t}`.
    pub fn left_integrals(&self) -> Vec<Vector> {
        let n = self.dim();
        let mut e = Echelon::new(self.field(), n);
        for i in 0..n {
            let m = self.algebra.left_mul_matrix(&self.basis_vector(i));
            let d = m.sub(&Matrix::identity(self.field(), n).scale(&self.counit[i]));
            for r in 0..n {
                e.insert(sparse_from_dense(d.row(r)));
            }
        }
        e.into_reduced().kernel_basis_reduced()
    }

    /// A left integral, rescaled to `ε(t) = 1` when possible, and whether
    /// `H` is semisimple (`ε(t) ≠ 0`).
    pub fn integral(&self) -> IntegralReport {
        let mut t = self.left_integrals().into_iter().next().expect("finite-dimensional Hopf algebras have integrals");
        let e = self.eps(&t);
        let semisimple = !e.is_zero();
        let scale = if semisimple { e.inv() } else { t.iter().find(|c| !c.is_zero()).expect("nonzero").inv() };
        t = vector::scale(&scale, &t);
        IntegralReport { integral: t, semisimple }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntegralReport {
    pub integral: Vector,
    pub semisimple: bool,
}

/// `H` and `H*` on dual bases `{h_i}`, `{p_i}`.
#[derive(Clone, Debug)]
pub struct DualPairing {
    pub hopf: HopfAlgebra,
    pub dual: HopfAlgebra,
}

impl DualPairing {
    pub fn new(hopf: &HopfAlgebra) -> Self {
        DualPairing { hopf: hopf.clone(), dual: hopf.dual() }
    }

    /// `⟨p, h⟩` for coordinate vectors.
    pub fn pair(&self, p: &[Scalar], h: &[Scalar]) -> Scalar {
        vector::dot(p, h)
    }

    /// The structure maps of `H*` against the pairing: `⟨pp', h⟩ = ⟨p, h₁⟩⟨p',
    /// h₂⟩`, `⟨Δp, h ⊗ h'⟩ = ⟨p, hh'⟩`, `⟨1, h⟩ = ε(h)`, `ε(p) = ⟨p, 1⟩`,
    /// `⟨Sp, h⟩ = ⟨p, Sh⟩`.
    pub fn verify(&self) -> Verification {
        let (h, d) = (&self.hopf, &self.dual);
        let n = h.dim();
        let mut v = Verification::new();
        v.record(
            "product is dual to coproduct",
            first_pair_failure(n, n, |i, j| {
                let pp = d.mul(&d.basis_vector(i), &d.basis_vector(j));
                (0..n).all(|k| {
                    let mut rhs = h.field().zero();
                    for (x, y, c) in h.delta_terms(k) {
                        if *x == i && *y == j {
                            rhs += c;
                        }
                    }
                    self.pair(&pp, &h.basis_vector(k)) == rhs
                })
            }),
        );
        v.record(
            "coproduct is dual to product",
            first_failure(n, |k| {
                (0..n).all(|i| (0..n).all(|j| *d.coproduct().get(i * n + j, k) == h.algebra().constant(i, j, k)))
            }),
        );
        v.check("unit is the counit", *d.algebra().unit() == *h.counit(), "");
        v.check("counit is evaluation at 1", *d.counit() == *h.algebra().unit(), "");
        v.check("antipode is the transpose", *d.antipode() == h.antipode().transpose(), "");
        v
    }
}

/// `k[G]` as a Hopf algebra.
pub fn group_hopf(field: Field, group: &Group) -> HopfAlgebra {
    HopfAlgebra::group(field, group)
}
