//! Corings over a finite-dimensional base algebra: axiom checks, cointegrals,
//! cosplit elements and Frobenius structures.

pub mod correspondence;

use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{FinDimAlgebra, TensorProduct};
use crate::extension::{sweep, SearchOutcome, SweepConfig};
use crate::linalg::{normalize_sparse, vector, AffineSystem, Echelon, Field, Matrix, Scalar, SparseVec, Vector};
use crate::verify::{first_failure, first_pair_failure, Verification};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoringError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("coring fails its axioms: {0}")]
    Invalid(String),
}

/// A coring `(C, Δ, ε)` over `R`. The carrier has a basis of size `dim`; the
/// base acts through matrices `left[i]: c ↦ r_i·c` and `right[i]: c ↦ c·r_i`.
/// `Δ` is a matrix into the quotient basis of `C ⊗_R C`, `ε` a matrix into
/// base coordinates.
#[derive(Clone, Debug)]
pub struct Coring {
    base: Arc<FinDimAlgebra>,
    dim: usize,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
    square: TensorProduct,
    coproduct: Matrix,
    counit: Matrix,
}

impl Coring {
    /// The quotient `C ⊗_R C` for the given actions.
    pub fn square_for(field: Field, dim: usize, left: &[Matrix], right: &[Matrix]) -> TensorProduct {
        TensorProduct::new(field, dim, dim, right, left)
    }

    /// `coproduct` receives the square `C ⊗_R C` and returns the matrix of `Δ`.
    pub fn new(
        base: Arc<FinDimAlgebra>,
        left: Vec<Matrix>,
        right: Vec<Matrix>,
        coproduct: impl FnOnce(&TensorProduct) -> Matrix,
        counit: Matrix,
    ) -> Result<Self, CoringError> {
        let field = base.field();
        let r = base.dim();
        if left.len() != r || right.len() != r {
            return Err(CoringError::Shape(format!("expected {r} action matrices per side")));
        }
        let dim = counit.cols();
        if counit.rows() != r {
            return Err(CoringError::Shape("counit must land in the base".into()));
        }
        for m in left.iter().chain(&right) {
            if m.rows() != dim || m.cols() != dim || m.field() != field {
                return Err(CoringError::Shape("action matrices must be square on the carrier".into()));
            }
        }
        let square = Self::square_for(field, dim, &left, &right);
        let coproduct = coproduct(&square);
        if coproduct.rows() != square.dim() || coproduct.cols() != dim {
            return Err(CoringError::Shape("coproduct must map into C ⊗_R C".into()));
        }
        Ok(Coring { base, dim, left, right, square, coproduct, counit })
    }

    /// The trivial coring `R` over itself: `Δ(r) = r ⊗ 1`, `ε = id`.
    pub fn trivial(base: Arc<FinDimAlgebra>) -> Self {
        let n = base.dim();
        let left: Vec<Matrix> = (0..n).map(|i| base.left_mul_matrix(&base.basis_vector(i))).collect();
        let right: Vec<Matrix> = (0..n).map(|i| base.right_mul_matrix(&base.basis_vector(i))).collect();
        let b = base.clone();
        Coring::new(
            base.clone(),
            left,
            right,
            |sq| {
                let cols: Vec<Vector> = (0..n).map(|i| sq.pure(&b.basis_vector(i), b.unit())).collect();
                Matrix::from_columns(b.field(), sq.dim(), &cols)
            },
            Matrix::identity(base.field(), n),
        )
        .expect("consistent shapes")
    }

    pub fn with_coproduct(&self, coproduct: Matrix) -> Result<Self, CoringError> {
        if coproduct.rows() != self.square.dim() || coproduct.cols() != self.dim {
            return Err(CoringError::Shape("coproduct must map into C ⊗_R C".into()));
        }
        Ok(Coring { coproduct, ..self.clone() })
    }

    pub fn with_counit(&self, counit: Matrix) -> Result<Self, CoringError> {
        if counit.rows() != self.base.dim() || counit.cols() != self.dim {
            return Err(CoringError::Shape("counit must land in the base".into()));
        }
        Ok(Coring { counit, ..self.clone() })
    }

    pub fn field(&self) -> Field {
        self.base.field()
    }

    pub fn base(&self) -> &Arc<FinDimAlgebra> {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left_actions(&self) -> &[Matrix] {
        &self.left
    }

    pub fn right_actions(&self) -> &[Matrix] {
        &self.right
    }

    pub fn square(&self) -> &TensorProduct {
        &self.square
    }

    pub fn coproduct(&self) -> &Matrix {
        &self.coproduct
    }

    pub fn counit(&self) -> &Matrix {
        &self.counit
    }

    /// `r·c` for base coordinates `r`.
    pub fn act_left(&self, r: &[Scalar], c: &[Scalar]) -> Vector {
        let mut out = vector::zeros(self.field(), self.dim);
        for (k, rk) in r.iter().enumerate() {
            if !rk.is_zero() {
                vector::axpy(&mut out, rk, &self.left[k].mul_vec(c));
            }
        }
        out
    }

    /// `c·r` for base coordinates `r`.
    pub fn act_right(&self, c: &[Scalar], r: &[Scalar]) -> Vector {
        let mut out = vector::zeros(self.field(), self.dim);
        for (k, rk) in r.iter().enumerate() {
            if !rk.is_zero() {
                vector::axpy(&mut out, rk, &self.right[k].mul_vec(c));
            }
        }
        out
    }

    pub fn delta(&self, c: &[Scalar]) -> Vector {
        self.coproduct.mul_vec(c)
    }

    pub fn epsilon(&self, c: &[Scalar]) -> Vector {
        self.counit.mul_vec(c)
    }

    fn unit_vec(&self, i: usize) -> Vector {
        vector::unit(self.field(), self.dim, i)
    }

    /// `(C ⊗_R C) ⊗_R C`.
    pub fn triple(&self) -> TensorProduct {
        let right: Vec<Matrix> = self.right.iter().map(|m| self.square.induced_right(m)).collect();
        TensorProduct::new(self.field(), self.square.dim(), self.dim, &right, &self.left)
    }

    /// `(id ⊗ Δ)Δ(c)` written in `(C ⊗_R C) ⊗_R C`.
    fn right_coassoc(&self, triple: &TensorProduct, c: &[Scalar]) -> Vector {
        let mut acc = vector::zeros(self.field(), triple.ambient_dim());
        let d = self.delta(c);
        for (x, y, coef) in self.square.terms(&d) {
            let dy = self.delta(&self.unit_vec(y));
            for (y1, y2, c2) in self.square.terms(&dy) {
                let inner = self.square.pure(&self.unit_vec(x), &self.unit_vec(y1));
                let w = coef * c2;
                crate::algebra::tensor_add(&mut acc, &w, &inner, &self.unit_vec(y2));
            }
        }
        triple.project(&acc)
    }

    pub fn verify(&self) -> Verification {
        let mut v = Verification::new();
        let base = &self.base;
        let r = base.dim();
        let field = self.field();

        v.record(
            "bimodule",
            (|| {
                for i in 0..r {
                    for j in 0..r {
                        let prod = base.basis_product(i, j);
                        let mut lsum = Matrix::zeros(field, self.dim, self.dim);
                        let mut rsum = Matrix::zeros(field, self.dim, self.dim);
                        for (k, c) in prod.iter() {
                            lsum = lsum.add(&self.left[*k].scale(c));
                            rsum = rsum.add(&self.right[*k].scale(c));
                        }
                        if self.left[i].mul(&self.left[j]) != lsum || self.right[j].mul(&self.right[i]) != rsum {
                            return Err(format!("base pair ({i}, {j})"));
                        }
                        if self.left[i].mul(&self.right[j]) != self.right[j].mul(&self.left[i]) {
                            return Err(format!("actions of {i} and {j} do not commute"));
                        }
                    }
                }
                let one = Matrix::identity(field, self.dim);
                if (0..self.dim).any(|c| {
                        self.act_left(base.unit(), &self.unit_vec(c)) != one.column(c)
                            || self.act_right(&self.unit_vec(c), base.unit()) != one.column(c)
                    })
                {
                    return Err("unit does not act trivially".into());
                }
                Ok(format!("{r} base elements"))
            })(),
        );

        v.record(
            "coproduct bimodule map",
            first_pair_failure(self.dim, r, |c, i| {
                let d = self.delta(&self.unit_vec(c));
                let sq = &self.square;
                self.delta(&self.left[i].column(c)) == sq.map_legs(&d, sq, |x| self.left[i].column(x), |y| self.unit_vec(y))
                    && self.delta(&self.right[i].column(c))
                        == sq.map_legs(&d, sq, |x| self.unit_vec(x), |y| self.right[i].column(y))
            }),
        );

        v.record(
            "counit bimodule map",
            first_failure(r, |i| {
                let x = base.basis_vector(i);
                self.counit.mul(&self.left[i]) == base.left_mul_matrix(&x).mul(&self.counit)
                    && self.counit.mul(&self.right[i]) == base.right_mul_matrix(&x).mul(&self.counit)
            }),
        );

        v.record(
            "counit laws",
            first_failure(self.dim, |c| {
                let d = self.delta(&self.unit_vec(c));
                let mut left = vector::zeros(field, self.dim);
                let mut right = vector::zeros(field, self.dim);
                for (x, y, coef) in self.square.terms(&d) {
                    let ex = self.epsilon(&self.unit_vec(x));
                    let ey = self.epsilon(&self.unit_vec(y));
                    vector::axpy(&mut left, coef, &self.act_left(&ex, &self.unit_vec(y)));
                    vector::axpy(&mut right, coef, &self.act_right(&self.unit_vec(x), &ey));
                }
                left == self.unit_vec(c) && right == self.unit_vec(c)
            }),
        );

        let triple = self.triple();
        let lhs = self.square.induced(&self.coproduct, &Matrix::identity(field, self.dim), &triple).mul(&self.coproduct);
        v.record(
            "coassociativity",
            first_failure(self.dim, |c| lhs.column(c) == self.right_coassoc(&triple, &self.unit_vec(c))),
        );
        v
    }

    fn require_valid(&self) -> Result<(), CoringError> {
        let v = self.verify();
        let failure = v.failures().next().map(|f| format!("{}: {}", f.name, f.witness));
        failure.map_or(Ok(()), |f| Err(CoringError::Invalid(f)))
    }

    /// `[e_a ⊗ e_b]` for every pair of carrier basis elements.
    fn pure_classes(&self) -> Vec<Vec<Vector>> {
        let one = self.field().one();
        (0..self.dim)
            .map(|a| (0..self.dim).map(|b| self.square.project_sparse(vec![(a * self.dim + b, one.clone())])).collect())
            .collect()
    }

    /// Equations making `γ: C ⊗_R C → R` (variables `k * q + j`) a bimodule
    /// map with `c₍₁₎γ(c₍₂₎ ⊗ c') = γ(c ⊗ c'₍₁₎)c'₍₂₎`.
    fn gamma_system(&self, pure: &[Vec<Vector>]) -> AffineSystem {
        let field = self.field();
        let r = self.base.dim();
        let q = self.square.dim();
        let n = self.dim;
        let var = |k: usize, j: usize| k * q + j;
        let mut sys = AffineSystem::new(field, r * q);
        for i in 0..r {
            let x = self.base.basis_vector(i);
            for (act, base_act) in [
                (self.square.induced_left(&self.left[i]), self.base.left_mul_matrix(&x)),
                (self.square.induced_right(&self.right[i]), self.base.right_mul_matrix(&x)),
            ] {
                for j in 0..q {
                    for k in 0..r {
                        let mut row: SparseVec = Vec::new();
                        for m in 0..q {
                            let a = act.get(m, j);
                            if !a.is_zero() {
                                row.push((var(k, m), a.clone()));
                            }
                        }
                        for l in 0..r {
                            let b = base_act.get(k, l);
                            if !b.is_zero() {
                                row.push((var(l, j), -b));
                            }
                        }
                        sys.add_homogeneous(row);
                    }
                }
            }
        }
        let deltas: Vec<Vector> = (0..n).map(|c| self.delta(&self.unit_vec(c))).collect();
        for c in 0..n {
            for c2 in 0..n {
                let mut rows: Vec<SparseVec> = vec![Vec::new(); n];
                for (x, y, d) in self.square.terms(&deltas[c]) {
                    for (j, p) in pure[y][c2].iter().enumerate() {
                        if p.is_zero() {
                            continue;
                        }
                        let dp = d * p;
                        for k in 0..r {
                            for (m, row) in rows.iter_mut().enumerate() {
                                let a = self.right[k].get(m, x);
                                if !a.is_zero() {
                                    row.push((var(k, j), &dp * a));
                                }
                            }
                        }
                    }
                }
                for (y1, z, d) in self.square.terms(&deltas[c2]) {
                    for (j, p) in pure[c][y1].iter().enumerate() {
                        if p.is_zero() {
                            continue;
                        }
                        let dp = d * p;
                        for k in 0..r {
                            for (m, row) in rows.iter_mut().enumerate() {
                                let a = self.left[k].get(m, z);
                                if !a.is_zero() {
                                    row.push((var(k, j), -(&dp * a)));
                                }
                            }
                        }
                    }
                }
                for row in rows {
                    sys.add_homogeneous(row);
                }
            }
        }
        sys
    }

    fn gamma_from(&self, x: &[Scalar]) -> Matrix {
        let q = self.square.dim();
        Matrix::from_fn(self.field(), self.base.dim(), q, |k, j| x[k * q + j].clone())
    }

    /// A cointegral `γ: C ⊗_R C → R`, found by one linear solve.
    pub fn cointegral(&self) -> Result<SearchOutcome<Matrix>, CoringError> {
        self.require_valid()?;
        let pure = self.pure_classes();
        let mut sys = self.gamma_system(&pure);
        let q = self.square.dim();
        for c in 0..self.dim {
            let d = self.delta(&self.unit_vec(c));
            for k in 0..self.base.dim() {
                let row: SparseVec =
                    d.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(j, v)| (k * q + j, v.clone())).collect();
                sys.add(row, self.counit.get(k, c));
            }
        }
        Ok(match sys.solve() {
            Some(sol) => SearchOutcome::Found(self.gamma_from(&sol.particular)),
            None => SearchOutcome::NoneExists,
        })
    }

    /// Basis of `C^R = {c : rc = cr}`.
    pub fn central_elements(&self) -> Vec<Vector> {
        let mut e = Echelon::new(self.field(), self.dim);
        for (l, r) in self.left.iter().zip(&self.right) {
            let d = l.sub(r);
            for i in 0..self.dim {
                e.insert(normalize_sparse(crate::linalg::sparse_from_dense(d.row(i))));
            }
        }
        e.into_reduced().kernel_basis_reduced()
    }

    /// `e ∈ C^R` with `ε(e) = 1`.
    pub fn cosplit_element(&self) -> Result<SearchOutcome<Vector>, CoringError> {
        self.require_valid()?;
        let mut sys = AffineSystem::new(self.field(), self.dim);
        for (l, r) in self.left.iter().zip(&self.right) {
            let d = l.sub(r);
            for i in 0..self.dim {
                sys.add_homogeneous(crate::linalg::sparse_from_dense(d.row(i)));
            }
        }
        for k in 0..self.base.dim() {
            sys.add(crate::linalg::sparse_from_dense(self.counit.row(k)), &self.base.unit()[k]);
        }
        Ok(match sys.solve() {
            Some(sol) => SearchOutcome::Found(sol.particular),
            None => SearchOutcome::NoneExists,
        })
    }

    /// Searches for a Frobenius structure `(γ, e)`: `e` runs over the hints
    /// and then a bounded sweep of `C^R`; for each `e` the conditions on `γ`
    /// are linear.
    pub fn frobenius_structure(
        &self,
        config: &SweepConfig,
        hints: &[Vector],
    ) -> Result<SearchOutcome<FrobeniusStructure>, CoringError> {
        self.require_valid()?;
        let field = self.field();
        let central = self.central_elements();
        if central.is_empty() {
            return Ok(SearchOutcome::NoneExists);
        }
        let pure = self.pure_classes();
        let base_sys = self.gamma_system(&pure);
        if base_sys.clone().solve().is_none() {
            return Ok(SearchOutcome::NoneExists);
        }
        let central_space = crate::linalg::Subspace::span(field, self.dim, central.iter().cloned());
        let q = self.square.dim();
        let try_element = |e: &Vector| -> Option<FrobeniusStructure> {
            if vector::is_zero(e) {
                return None;
            }
            let mut sys = base_sys.clone();
            for c in 0..self.dim {
                // γ(c ⊗ e) = ε(c) = γ(e ⊗ c)
                let mut ce = vector::zeros(field, q);
                let mut ec = vector::zeros(field, q);
                for (a, ea) in e.iter().enumerate() {
                    if !ea.is_zero() {
                        vector::axpy(&mut ce, ea, &pure[c][a]);
                        vector::axpy(&mut ec, ea, &pure[a][c]);
                    }
                }
                for w in [&ce, &ec] {
                    for k in 0..self.base.dim() {
                        let row: SparseVec = w
                            .iter()
                            .enumerate()
                            .filter(|(_, v)| !v.is_zero())
                            .map(|(j, v)| (k * q + j, v.clone()))
                            .collect();
                        sys.add(row, self.counit.get(k, c));
                    }
                }
            }
            let sol = sys.solve()?;
            Some(FrobeniusStructure { gamma: self.gamma_from(&sol.particular), element: e.clone() })
        };
        for h in hints {
            if h.len() == self.dim && central_space.contains(h) {
                if let Some(s) = try_element(h) {
                    return Ok(SearchOutcome::Found(s));
                }
            }
        }
        for coeffs in sweep::candidates(central.len(), config) {
            let mut e = vector::zeros(field, self.dim);
            for (c, b) in coeffs.iter().zip(&central) {
                if *c != 0 {
                    vector::axpy(&mut e, &field.from_i64(*c), b);
                }
            }
            if let Some(s) = try_element(&e) {
                return Ok(SearchOutcome::Found(s));
            }
        }
        Ok(SearchOutcome::Inconclusive)
    }

    /// `γ(x)` for a class `x ∈ C ⊗_R C`.
    fn apply_gamma(&self, gamma: &Matrix, x: &[Scalar]) -> Vector {
        gamma.mul_vec(x)
    }

    fn gamma_bimodule(&self, gamma: &Matrix) -> Result<String, String> {
        first_failure(self.base.dim(), |i| {
            let x = self.base.basis_vector(i);
            gamma.mul(&self.square.induced_left(&self.left[i])) == self.base.left_mul_matrix(&x).mul(gamma)
                && gamma.mul(&self.square.induced_right(&self.right[i])) == self.base.right_mul_matrix(&x).mul(gamma)
        })
    }

    /// `c₍₁₎γ(c₍₂₎ ⊗ c') = γ(c ⊗ c'₍₁₎)c'₍₂₎` on basis pairs.
    fn gamma_balanced(&self, gamma: &Matrix) -> Result<String, String> {
        first_pair_failure(self.dim, self.dim, |c, c2| {
            let (ec, ec2) = (self.unit_vec(c), self.unit_vec(c2));
            let mut lhs = vector::zeros(self.field(), self.dim);
            for (x, y, d) in self.square.terms(&self.delta(&ec)) {
                let g = self.apply_gamma(gamma, &self.square.pure(&self.unit_vec(y), &ec2));
                vector::axpy(&mut lhs, d, &self.act_right(&self.unit_vec(x), &g));
            }
            let mut rhs = vector::zeros(self.field(), self.dim);
            for (y, z, d) in self.square.terms(&self.delta(&ec2)) {
                let g = self.apply_gamma(gamma, &self.square.pure(&ec, &self.unit_vec(y)));
                vector::axpy(&mut rhs, d, &self.act_left(&g, &self.unit_vec(z)));
            }
            lhs == rhs
        })
    }

    /// Checks the cointegral identities directly (independently of the solver).
    pub fn check_cointegral(&self, gamma: &Matrix) -> Verification {
        let mut v = Verification::new();
        v.record("bimodule map", self.gamma_bimodule(gamma));
        v.record(
            "γ∘Δ = ε",
            first_failure(self.dim, |c| {
                let ec = self.unit_vec(c);
                self.apply_gamma(gamma, &self.delta(&ec)) == self.epsilon(&ec)
            }),
        );
        v.record("balanced", self.gamma_balanced(gamma));
        v
    }

    pub fn check_cosplit(&self, e: &[Scalar]) -> Verification {
        let mut v = Verification::new();
        v.record(
            "central",
            first_failure(self.base.dim(), |i| self.left[i].mul_vec(e) == self.right[i].mul_vec(e)),
        );
        v.check("ε(e) = 1", self.epsilon(e) == self.base.unit().to_vec(), vector::format(&self.epsilon(e)));
        v
    }

    pub fn check_frobenius(&self, s: &FrobeniusStructure) -> Verification {
        let mut v = Verification::new();
        v.record("bimodule map", self.gamma_bimodule(&s.gamma));
        v.record(
            "central element",
            first_failure(self.base.dim(), |i| self.left[i].mul_vec(&s.element) == self.right[i].mul_vec(&s.element)),
        );
        v.record(
            "γ(c ⊗ e) = ε(c) = γ(e ⊗ c)",
            first_failure(self.dim, |c| {
                let ec = self.unit_vec(c);
                let eps = self.epsilon(&ec);
                self.apply_gamma(&s.gamma, &self.square.pure(&ec, &s.element)) == eps
                    && self.apply_gamma(&s.gamma, &self.square.pure(&s.element, &ec)) == eps
            }),
        );
        v.record("balanced", self.gamma_balanced(&s.gamma));
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusStructure {
    pub gamma: Matrix,
    pub element: Vector,
}
