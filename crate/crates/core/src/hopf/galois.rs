//! Right comodule algebras, their coinvariants and Galois maps, and the
//! Miyashita-Ulbrich action on the centralizer of a Hopf-Galois extension.

use std::sync::Arc;

use super::{require, DoubleModuleAlgebra, HopfAlgebra, HopfError};
use crate::algebra::{FinDimAlgebra, Group, Subalgebra};
use crate::extension::{QuasiBasis, RingExtension, Side};
use crate::linalg::{sparse_from_dense, vector, Echelon, Field, Matrix, Scalar, Vector};
use crate::verify::{first_failure, first_pair_failure, Verification};

/// A right `H`-comodule algebra `ρ: A → A ⊗ H`, `ρ(a) = a₍₀₎ ⊗ a₍₁₎`, stored
/// as a `(dim A · n) × dim A` matrix.
#[derive(Clone, Debug)]
pub struct ComoduleAlgebra {
    algebra: Arc<FinDimAlgebra>,
    hopf: HopfAlgebra,
    coaction: Matrix,
}

impl ComoduleAlgebra {
    pub fn new(algebra: Arc<FinDimAlgebra>, hopf: HopfAlgebra, coaction: Matrix) -> Result<Self, HopfError> {
        let (m, n) = (algebra.dim(), hopf.dim());
        if coaction.rows() != m * n || coaction.cols() != m {
            return Err(HopfError::Shape(format!("coaction must be {}×{m}", m * n)));
        }
        if algebra.field() != hopf.field() {
            return Err(crate::algebra::AlgebraError::FieldMismatch.into());
        }
        let ca = ComoduleAlgebra { algebra, hopf, coaction };
        require(&ca.verify(), HopfError::Invalid)?;
        Ok(ca)
    }

    /// `H` coacting on itself through `Δ`.
    pub fn regular(hopf: &HopfAlgebra) -> Self {
        ComoduleAlgebra { algebra: hopf.algebra().clone(), hopf: hopf.clone(), coaction: hopf.coproduct().clone() }
    }

    /// `k[G]` over `k[N]` with `H = k[G/N]` and `g ↦ g ⊗ gN`.
    pub fn group_quotient(field: Field, group: &Group, normal: &[usize]) -> Result<Self, HopfError> {
        let (quotient, coset_of) = group.quotient(normal)?;
        let algebra = Arc::new(FinDimAlgebra::group_algebra(field, group));
        let hopf = HopfAlgebra::group(field, &quotient);
        let n = quotient.order();
        let coaction =
            Matrix::from_fn(field, group.order() * n, group.order(), |r, g| if r == g * n + coset_of[g] { field.one() } else { field.zero() });
        Ok(ComoduleAlgebra { algebra, hopf, coaction })
    }

    /// `ρ(a) = a ⊗ 1`.
    pub fn trivial(algebra: Arc<FinDimAlgebra>, hopf: &HopfAlgebra) -> Self {
        let m = algebra.dim();
        let cols: Vec<Vector> = (0..m).map(|a| vector::tensor(&algebra.basis_vector(a), hopf.algebra().unit())).collect();
        let coaction = Matrix::from_columns(algebra.field(), m * hopf.dim(), &cols);
        ComoduleAlgebra { algebra, hopf: hopf.clone(), coaction }
    }

    pub fn algebra(&self) -> &Arc<FinDimAlgebra> {
        &self.algebra
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn coaction(&self) -> &Matrix {
        &self.coaction
    }

    pub fn rho(&self, a: &[Scalar]) -> Vector {
        self.coaction.mul_vec(a)
    }

    /// `a₍₀₎ ⊗ a₍₁₎` as a list `(a₍₀₎ ∈ A, h index, coefficient)` grouped by `h`.
    fn legs(&self, a: &[Scalar]) -> Vec<(Vector, usize)> {
        let (m, n) = (self.algebra.dim(), self.hopf.dim());
        let r = self.rho(a);
        (0..n)
            .map(|h| ((0..m).map(|x| r[x * n + h].clone()).collect::<Vector>(), h))
            .filter(|(x, _)| !vector::is_zero(x))
            .collect()
    }

    pub fn verify(&self) -> Verification {
        let a = &self.algebra;
        let h = &self.hopf;
        let (m, n) = (a.dim(), h.dim());
        let field = a.field();
        let mut v = Verification::new();
        v.record(
            "coassociative",
            first_failure(m, |x| {
                let mut lhs = vector::zeros(field, m * n * n);
                let mut rhs = vector::zeros(field, m * n * n);
                for (a0, g) in self.legs(&a.basis_vector(x)) {
                    for (a00, g2) in self.legs(&a0) {
                        for (z, c) in a00.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                            lhs[(z * n + g2) * n + g] += c;
                        }
                    }
                    for (i, j, c) in h.delta_terms(g) {
                        for (z, d) in a0.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                            rhs[(z * n + i) * n + j] += &(c * d);
                        }
                    }
                }
                lhs == rhs
            }),
        );
        v.record(
            "counital",
            first_failure(m, |x| {
                let mut out = a.zero();
                for (a0, g) in self.legs(&a.basis_vector(x)) {
                    vector::axpy(&mut out, &h.counit()[g], &a0);
                }
                out == a.basis_vector(x)
            }),
        );
        v.record(
            "coaction multiplicative",
            first_pair_failure(m, m, |x, y| {
                let lhs = self.rho(&a.mul(&a.basis_vector(x), &a.basis_vector(y)));
                let mut rhs = vector::zeros(field, m * n);
                for (x0, g) in self.legs(&a.basis_vector(x)) {
                    for (y0, g2) in self.legs(&a.basis_vector(y)) {
                        let hh = h.mul(&h.basis_vector(g), &h.basis_vector(g2));
                        crate::algebra::tensor_add(&mut rhs, &field.one(), &a.mul(&x0, &y0), &hh);
                    }
                }
                lhs == rhs
            }),
        );
        v.check("coaction unital", self.rho(a.unit()) == vector::tensor(a.unit(), h.algebra().unit()), "ρ(1) = 1 ⊗ 1");
        v
    }

    /// `B = {a : ρ(a) = a ⊗ 1}`.
    pub fn coinvariants(&self) -> Subalgebra {
        let (m, n) = (self.algebra.dim(), self.hopf.dim());
        let field = self.algebra.field();
        let one = self.hopf.algebra().unit();
        let mut e = Echelon::new(field, m);
        let diff = Matrix::from_fn(field, m * n, m, |r, a| {
            let expected = if r / n == a { one[r % n].clone() } else { field.zero() };
            self.coaction.get(r, a) - &expected
        });
        for r in 0..m * n {
            e.insert(sparse_from_dense(diff.row(r)));
        }
        Subalgebra::new(self.algebra.clone(), e.into_reduced().kernel_basis_reduced())
            .expect("coinvariants of a comodule algebra form a subalgebra")
    }

    /// The extension `A | B` over the coinvariants.
    pub fn extension(&self) -> RingExtension {
        RingExtension::new(self.coinvariants())
    }

    /// `p_i · a = a₍₀₎ p_i(a₍₁₎)` as matrices on `A`.
    pub fn dual_action(&self) -> Vec<Matrix> {
        let (m, n) = (self.algebra.dim(), self.hopf.dim());
        (0..n)
            .map(|i| Matrix::from_fn(self.algebra.field(), m, m, |x, a| self.coaction.get(x * n + i, a).clone()))
            .collect()
    }

    /// `β(a ⊗ a') = aa'₍₀₎ ⊗ a'₍₁₎` and `β'(a ⊗ a') = a₍₀₎a' ⊗ a₍₁₎`, from
    /// the quotient basis of `A ⊗_B A` into `A ⊗ H`.
    pub fn galois_maps(&self, ext: &RingExtension) -> (Matrix, Matrix) {
        let a = &self.algebra;
        let (m, n) = (a.dim(), self.hopf.dim());
        let field = a.field();
        let tp = ext.tensor_square().tensor();
        let mut beta = Vec::with_capacity(tp.dim());
        let mut beta_prime = Vec::with_capacity(tp.dim());
        for q in 0..tp.dim() {
            let (x, y) = tp.legs(q);
            let (ex, ey) = (a.basis_vector(x), a.basis_vector(y));
            let mut b = vector::zeros(field, m * n);
            for (y0, g) in self.legs(&ey) {
                crate::algebra::tensor_add(&mut b, &field.one(), &a.mul(&ex, &y0), &self.hopf.basis_vector(g));
            }
            let mut bp = vector::zeros(field, m * n);
            for (x0, g) in self.legs(&ex) {
                crate::algebra::tensor_add(&mut bp, &field.one(), &a.mul(&x0, &ey), &self.hopf.basis_vector(g));
            }
            beta.push(b);
            beta_prime.push(bp);
        }
        (Matrix::from_columns(field, m * n, &beta), Matrix::from_columns(field, m * n, &beta_prime))
    }

    /// `β` is bijective.
    pub fn is_hopf_galois(&self) -> bool {
        let ext = self.extension();
        let (beta, _) = self.galois_maps(&ext);
        beta.rows() == beta.cols() && beta.rank() == beta.cols()
    }
}

/// A Hopf-Galois extension `A | B` with `β` inverted once.
#[derive(Clone, Debug)]
pub struct HopfGalois {
    pub comodule: ComoduleAlgebra,
    pub ext: RingExtension,
    pub beta: Matrix,
    pub beta_prime: Matrix,
    beta_inv: Matrix,
    /// `H^op`, whose antipode is `S⁻¹`.
    pub hopf_op: HopfAlgebra,
    /// `H*` on the dual basis.
    pub dual: HopfAlgebra,
}

impl HopfGalois {
    pub fn new(comodule: ComoduleAlgebra) -> Result<Self, HopfError> {
        let ext = comodule.extension();
        let (beta, beta_prime) = comodule.galois_maps(&ext);
        if beta.rows() != beta.cols() {
            return Err(HopfError::NotGalois(format!("dim A ⊗_B A = {} but dim A ⊗ H = {}", beta.cols(), beta.rows())));
        }
        let beta_inv = beta.inverse().ok_or_else(|| HopfError::NotGalois(format!("β has rank {}", beta.rank())))?;
        let hopf_op = comodule.hopf().opposite()?;
        let dual = comodule.hopf().dual();
        Ok(HopfGalois { comodule, ext, beta, beta_prime, beta_inv, hopf_op, dual })
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        self.comodule.hopf()
    }

    pub fn algebra(&self) -> &FinDimAlgebra {
        self.comodule.algebra()
    }

    pub fn centralizer(&self) -> &Subalgebra {
        self.ext.centralizer()
    }

    /// `β⁻¹(x)` for `x ∈ A ⊗ H`, in quotient coordinates of `A ⊗_B A`.
    pub fn beta_inverse(&self, x: &[Scalar]) -> Vector {
        self.beta_inv.mul_vec(x)
    }

    /// `β⁻¹(1 ⊗ h)`.
    pub fn galois_lift(&self, h: &[Scalar]) -> Vector {
        self.beta_inverse(&vector::tensor(self.algebra().unit(), h))
    }

    /// Bijectivity of `β` and `β'`, and the module and comodule properties of `β`.
    pub fn galois_checks(&self) -> Verification {
        let a = self.algebra();
        let h = self.hopf();
        let (m, n) = (a.dim(), h.dim());
        let field = a.field();
        let rts = self.ext.tensor_square();
        let q = rts.dim();
        let mut v = Verification::new();
        v.check("β bijective", self.beta.rank() == q && q == m * n, format!("rank {} of {}×{}", self.beta.rank(), m * n, q));
        let rp = self.beta_prime.rank();
        v.check("β' bijective", rp == q && q == m * n, format!("rank {rp} of {}×{}", m * n, q));
        let basis: Vec<Vector> = (0..q).map(|i| vector::unit(field, q, i)).collect();
        v.record(
            "β left A-linear",
            first_pair_failure(m, q, |x, i| {
                let ex = a.basis_vector(x);
                let lhs = self.beta.mul_vec(&rts.left_mul(&ex, &basis[i]));
                lhs == a.left_mul_matrix(&ex).kron(&Matrix::identity(field, n)).mul_vec(&self.beta.column(i))
            }),
        );
        v.record(
            "β right B-linear",
            first_pair_failure(self.ext.base().dim(), q, |b, i| {
                let eb = &self.ext.base().basis()[b];
                let lhs = self.beta.mul_vec(&rts.right_mul(&basis[i], eb));
                lhs == a.right_mul_matrix(eb).kron(&Matrix::identity(field, n)).mul_vec(&self.beta.column(i))
            }),
        );
        v.record(
            "β comodule map",
            first_pair_failure(m, m, |x, y| {
                let ex = a.basis_vector(x);
                let mut lhs = vector::zeros(field, m * n * n);
                for (y0, g) in self.comodule.legs(&a.basis_vector(y)) {
                    let b = self.beta.mul_vec(&rts.pure(&ex, &y0));
                    crate::algebra::tensor_add(&mut lhs, &field.one(), &b, &h.basis_vector(g));
                }
                let b = self.beta.mul_vec(&rts.pure(&ex, &a.basis_vector(y)));
                let rhs = Matrix::identity(field, m).kron(h.coproduct()).mul_vec(&b);
                lhs == rhs
            }),
        );
        v
    }

    /// `γ_i = p_i · ?` and `u_i = β⁻¹(1 ⊗ h_i)`.
    pub fn right_quasibasis(&self) -> QuasiBasis {
        let n = self.hopf().dim();
        let field = self.algebra().field();
        QuasiBasis {
            side: Side::Right,
            tensors: (0..n).map(|i| self.galois_lift(&vector::unit(field, n, i))).collect(),
            maps: self.comodule.dual_action(),
        }
    }

    /// `t¹ x t²` for `t` in quotient coordinates; well defined for `x ∈ R`.
    fn insert(&self, t: &[Scalar], x: &[Scalar]) -> Vector {
        let a = self.algebra();
        let mut out = a.zero();
        for (p, q, c) in self.ext.tensor_square().tensor().terms(t) {
            vector::axpy(&mut out, c, &a.mul_all(&[&a.basis_vector(p), x, &a.basis_vector(q)]));
        }
        out
    }

    /// `r ◁ h = t¹ r t²` with `t = β⁻¹(1 ⊗ h)`, for `r ∈ R` in `A` coordinates.
    pub fn mu(&self, r: &[Scalar], h: &[Scalar]) -> Vector {
        self.insert(&self.galois_lift(h), r)
    }

    /// `r ↦ r ◁ h_i` as matrices in `R` coordinates.
    pub fn mu_matrices(&self) -> Vec<Matrix> {
        let rr = self.centralizer();
        let field = self.algebra().field();
        let n = self.hopf().dim();
        (0..n)
            .map(|i| {
                let t = self.galois_lift(&vector::unit(field, n, i));
                let cols: Vec<Vector> = rr
                    .basis()
                    .iter()
                    .map(|r| rr.coords(&self.insert(&t, r)).expect("the action preserves R"))
                    .collect();
                Matrix::from_columns(field, rr.dim(), &cols)
            })
            .collect()
    }

    /// `p_i · r = r₍₀₎ p_i(r₍₁₎)` restricted to `R`, in `R` coordinates.
    pub fn dual_action_on_r(&self) -> Vec<Matrix> {
        let rr = self.centralizer();
        let field = self.algebra().field();
        self.comodule
            .dual_action()
            .iter()
            .map(|p| {
                let cols: Vec<Vector> =
                    rr.basis().iter().map(|r| rr.coords(&p.mul_vec(r)).expect("the coaction preserves R")).collect();
                Matrix::from_columns(field, rr.dim(), &cols)
            })
            .collect()
    }

    /// The action lands in `R` and makes `R` a right `H`-module algebra.
    pub fn check_mu_action(&self) -> Verification {
        let a = self.algebra();
        let h = self.hopf();
        let rr = self.centralizer();
        let (d, n) = (rr.dim(), h.dim());
        let hb: Vec<Vector> = (0..n).map(|i| h.basis_vector(i)).collect();
        let mut v = Verification::new();
        v.record("lands in R", first_pair_failure(d, n, |r, i| rr.contains(&self.mu(&rr.basis()[r], &hb[i]))));
        if !v.passed() {
            return v;
        }
        v.record("unit acts trivially", first_failure(d, |r| self.mu(&rr.basis()[r], h.algebra().unit()) == rr.basis()[r]));
        v.record(
            "right module",
            first_pair_failure(d, n * n, |r, ij| {
                let (i, j) = (ij / n, ij % n);
                let x = &rr.basis()[r];
                self.mu(&self.mu(x, &hb[i]), &hb[j]) == self.mu(x, &h.mul(&hb[i], &hb[j]))
            }),
        );
        v.record(
            "measuring",
            first_pair_failure(d * d, n, |rs, i| {
                let (x, y) = (&rr.basis()[rs / d], &rr.basis()[rs % d]);
                let mut rhs = a.zero();
                for (p, q, c) in h.delta_terms(i) {
                    vector::axpy(&mut rhs, c, &a.mul(&self.mu(x, &hb[*p]), &self.mu(y, &hb[*q])));
                }
                self.mu(&a.mul(x, y), &hb[i]) == rhs
            }),
        );
        v.record(
            "unit preserved",
            first_failure(n, |i| self.mu(a.unit(), &hb[i]) == vector::scale(&h.counit()[i], a.unit())),
        );
        v
    }

    /// The Yetter-Drinfeld data on `R`: the coaction restricts to `R`, the
    /// compatibility `(r◁h₂)₀ ⊗ h₁(r◁h₂)₁ = r₀◁h₁ ⊗ r₁h₂`, pre-braided
    /// commutativity `r'r = r₀(r'◁r₁)`, and the `D(H^op)`-module algebra with
    /// Lu's condition.
    pub fn verify_yd_module(&self) -> Verification {
        let a = self.algebra();
        let h = self.hopf();
        let rr = self.centralizer();
        let (m, d, n) = (a.dim(), rr.dim(), h.dim());
        let field = a.field();
        let hb: Vec<Vector> = (0..n).map(|i| h.basis_vector(i)).collect();
        let mut v = Verification::new();
        v.record(
            "coaction restricts to R",
            first_failure(d, |r| self.comodule.legs(&rr.basis()[r]).iter().all(|(x, _)| rr.contains(x))),
        );
        if !v.passed() {
            return v;
        }
        v.record(
            "Yetter-Drinfeld condition",
            first_pair_failure(d, n, |r, k| {
                let x = &rr.basis()[r];
                let mut lhs = vector::zeros(field, m * n);
                let mut rhs = vector::zeros(field, m * n);
                for (i, j, c) in h.delta_terms(k) {
                    let w = self.mu(x, &hb[*j]);
                    for (w0, g) in self.comodule.legs(&w) {
                        crate::algebra::tensor_add(&mut lhs, c, &w0, &h.mul(&hb[*i], &hb[g]));
                    }
                    for (x0, g) in self.comodule.legs(x) {
                        crate::algebra::tensor_add(&mut rhs, c, &self.mu(&x0, &hb[*i]), &h.mul(&hb[g], &hb[*j]));
                    }
                }
                lhs == rhs
            }),
        );
        v.record(
            "pre-braided commutativity",
            first_pair_failure(d, d, |r, s| {
                let (x, y) = (&rr.basis()[r], &rr.basis()[s]);
                let mut rhs = a.zero();
                for (x0, g) in self.comodule.legs(x) {
                    vector::axpy(&mut rhs, &field.one(), &a.mul(&x0, &self.mu(y, &hb[g])));
                }
                a.mul(y, x) == rhs
            }),
        );
        let dm = self.double_module();
        v.extend("D(H^op)-module algebra: ", dm.verify());
        v.record("Lu's condition", dm.lu_condition().map_err(|(i, j)| format!("basis pair ({i}, {j})")));
        v
    }

    /// `R` as a left `D(H^op)`-module algebra: `H^op` by the Miyashita-Ulbrich
    /// action, `H*` by the dual of the coaction.
    pub fn double_module(&self) -> DoubleModuleAlgebra {
        DoubleModuleAlgebra {
            v: Arc::new(self.centralizer().to_algebra()),
            hopf: self.hopf_op.clone(),
            h_action: self.mu_matrices(),
            dual_action: self.dual_action_on_r(),
        }
    }

    /// `ρ(r)` for `r ∈ R` in `R ⊗ H` coordinates.
    pub fn coaction_on_r(&self, r: &[Scalar]) -> Vector {
        let rr = self.centralizer();
        let n = self.hopf().dim();
        let mut out = vector::zeros(self.algebra().field(), rr.dim() * n);
        for (x0, g) in self.comodule.legs(&rr.embed(r)) {
            let c = rr.coords(&x0).expect("the coaction preserves R");
            crate::algebra::tensor_add(&mut out, &self.algebra().field().one(), &c, &vector::unit(self.algebra().field(), n, g));
        }
        out
    }
}
