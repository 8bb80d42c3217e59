//! The two bialgebroids of a depth two extension `A | B` over `R = C_A(B)`:
//! `S = End_{B-B}(A)` (left) and `T = (A ⊗_B A)^B` (right).

use std::sync::Arc;

use serde::Serialize;

use super::{BialgebroidError, LeftBialgebroid, RightBialgebroid};
use crate::algebra::{bimodule_hom_space, commutant_maps, FinDimAlgebra, HomKind, Subalgebra, TensorProduct};
use crate::extension::{flatten_rows, QuasiBasis, RingExtension, Side};
use crate::linalg::{sparse_from_dense, vector, CoordinateMap, Echelon, Matrix, Scalar, Subspace, Vector};
use crate::verify::{first_failure, first_pair_failure, Verification};

fn check_quasibases(ext: &RingExtension, left: &QuasiBasis, right: &QuasiBasis) -> Result<(), BialgebroidError> {
    if left.side != Side::Left || right.side != Side::Right {
        return Err(BialgebroidError::Unverified("expected a left and a right quasibasis".into()));
    }
    left.verify(ext).map_err(BialgebroidError::BadQuasiBasis)?;
    right.verify(ext).map_err(BialgebroidError::BadQuasiBasis)?;
    Ok(())
}

fn basis(a: &FinDimAlgebra) -> Vec<Vector> {
    (0..a.dim()).map(|i| a.basis_vector(i)).collect()
}

/// `S` as a left bialgebroid, with its basis of operators on `A`.
#[derive(Clone, Debug)]
pub struct EndomorphismBialgebroid {
    pub bialgebroid: LeftBialgebroid,
    /// Basis of `S` as matrices on `A`.
    pub operators: Vec<Matrix>,
    coords: CoordinateMap,
    /// `R` inside `A`; its basis indexes the base algebra.
    pub centralizer: Subalgebra,
    /// `Δ` assembled from the right quasibasis.
    pub alt_coproduct: Matrix,
}

impl EndomorphismBialgebroid {
    /// Coordinates in `S` of a matrix on `A`, if it lies in `S`.
    pub fn coords_of(&self, op: &Matrix) -> Option<Vector> {
        self.coords.coords(&flatten_rows(op))
    }

    /// The operator on `A` with the given `S` coordinates.
    pub fn operator(&self, x: &[Scalar]) -> Matrix {
        let n = self.operators[0].rows();
        let mut out = Matrix::zeros(self.bialgebroid.field(), n, n);
        for (c, m) in x.iter().zip(&self.operators) {
            if !c.is_zero() {
                out = out.add(&m.scale(c));
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.operators.len()
    }
}

/// Assembles `S` with source `λ`, target `ρ`, `Δ(α) = Σ_i α(- t_i¹)t_i² ⊗ β_i`
/// and `ε(α) = α(1)`. The coproduct is also assembled from the right
/// quasibasis as `Σ_j γ_j ⊗ u_j¹ α(u_j² -)`; the two must agree.
pub fn build_s(ext: &RingExtension, left: &QuasiBasis, right: &QuasiBasis) -> Result<EndomorphismBialgebroid, BialgebroidError> {
    check_quasibases(ext, left, right)?;
    let field = ext.field();
    let a = ext.algebra();
    let ops = ext.s_basis().to_vec();
    let (total, coords) = FinDimAlgebra::from_operator_basis(field, &ops)?;
    let total = Arc::new(total);
    let centralizer = ext.centralizer().clone();
    let base = Arc::new(centralizer.to_algebra());
    let in_s = |m: &Matrix| coords.coords(&flatten_rows(m)).expect("operator lies in S");

    let rb = centralizer.basis();
    let source = Matrix::from_columns(field, ops.len(), &rb.iter().map(|r| in_s(&a.left_mul_matrix(r))).collect::<Vec<_>>());
    let target = Matrix::from_columns(field, ops.len(), &rb.iter().map(|r| in_s(&a.right_mul_matrix(r))).collect::<Vec<_>>());
    let counit = Matrix::from_columns(
        field,
        rb.len(),
        &ops.iter().map(|op| centralizer.coords(&op.mul_vec(a.unit())).expect("α(1) lies in R")).collect::<Vec<_>>(),
    );

    let lmul: Vec<Matrix> = basis(a).iter().map(|x| a.left_mul_matrix(x)).collect();
    let rmul: Vec<Matrix> = basis(a).iter().map(|x| a.right_mul_matrix(x)).collect();
    let rts = ext.tensor_square();
    let n = a.dim();
    let zero = || Matrix::zeros(field, n, n);
    let left_beta: Vec<Vector> = left.maps.iter().map(&in_s).collect();
    let right_gamma: Vec<Vector> = right.maps.iter().map(&in_s).collect();

    let eq3 = |sq: &TensorProduct| -> Matrix {
        let cols: Vec<Vector> = ops
            .iter()
            .map(|alpha| {
                let mut acc = vector::zeros(field, sq.dim());
                for (t, beta) in left.tensors.iter().zip(&left_beta) {
                    let mut m = zero();
                    for (x, y, c) in rts.tensor().terms(t) {
                        m = m.add(&rmul[y].mul(alpha).mul(&rmul[x]).scale(c));
                    }
                    acc = vector::add(&acc, &sq.pure(&in_s(&m), beta));
                }
                acc
            })
            .collect();
        Matrix::from_columns(field, sq.dim(), &cols)
    };
    let bialgebroid = LeftBialgebroid::new(total, base, source, target, eq3, counit)?;

    let sq = bialgebroid.square();
    let cols: Vec<Vector> = ops
        .iter()
        .map(|alpha| {
            let mut acc = vector::zeros(field, sq.dim());
            for (u, gamma) in right.tensors.iter().zip(&right_gamma) {
                let mut m = zero();
                for (x, y, c) in rts.tensor().terms(u) {
                    m = m.add(&lmul[x].mul(alpha).mul(&lmul[y]).scale(c));
                }
                acc = vector::add(&acc, &sq.pure(gamma, &in_s(&m)));
            }
            acc
        })
        .collect();
    let alt_coproduct = Matrix::from_columns(field, sq.dim(), &cols);
    if alt_coproduct != *bialgebroid.coproduct() {
        return Err(BialgebroidError::TheoremViolation("the two coproduct formulas for S disagree".into()));
    }
    Ok(EndomorphismBialgebroid { bialgebroid, operators: ops, coords, centralizer, alt_coproduct })
}

/// `T` as a right bialgebroid, with its basis inside `A ⊗_B A`.
#[derive(Clone, Debug)]
pub struct BCentralBialgebroid {
    pub bialgebroid: RightBialgebroid,
    /// Basis of `T` in quotient coordinates of `A ⊗_B A`.
    pub elements: Vec<Vector>,
    coords: CoordinateMap,
    /// `Δ` assembled from the right quasibasis.
    pub alt_coproduct: Matrix,
}

impl BCentralBialgebroid {
    pub fn coords_of(&self, t: &[Scalar]) -> Option<Vector> {
        self.coords.coords(t)
    }

    /// The element of `A ⊗_B A` with the given `T` coordinates.
    pub fn element(&self, x: &[Scalar]) -> Vector {
        let field = self.bialgebroid.total().field();
        let mut out = vector::zeros(field, self.coords.ambient());
        for (c, t) in x.iter().zip(&self.elements) {
            if !c.is_zero() {
                vector::axpy(&mut out, c, t);
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }
}

/// Assembles `T` with `tt' = t'¹t¹ ⊗ t²t'²`, source `r ↦ 1 ⊗ r`, target
/// `r ↦ r ⊗ 1`, `Δ(t) = Σ_i t_i ⊗ (β_i(t¹) ⊗ t²)` and `ε(t) = t¹t²`. The
/// coproduct is also assembled as `Σ_j (t¹ ⊗ γ_j(t²)) ⊗ u_j`.
pub fn build_t(ext: &RingExtension, left: &QuasiBasis, right: &QuasiBasis) -> Result<BCentralBialgebroid, BialgebroidError> {
    check_quasibases(ext, left, right)?;
    let field = ext.field();
    let a = ext.algebra();
    let rts = ext.tensor_square();
    let elements = ext.t_basis().to_vec();
    let m = elements.len();
    let coords = CoordinateMap::new(field, rts.dim(), &elements).expect("T basis is independent");
    let in_t = |t: &[Scalar]| coords.coords(t).expect("element lies in T");

    let abasis = basis(a);
    let mut table = Vec::with_capacity(m * m);
    for ti in &elements {
        for tj in &elements {
            let mut prod = vector::zeros(field, rts.dim());
            for (x, y, c) in rts.tensor().terms(tj) {
                vector::axpy(&mut prod, c, &rts.sandwich(&abasis[x], ti, &abasis[y]));
            }
            table.push(sparse_from_dense(&in_t(&prod)));
        }
    }
    let unit = in_t(&rts.one_one());
    let total = Arc::new(FinDimAlgebra::from_table_unchecked(field, m, table, unit));
    let centralizer = ext.centralizer();
    let base = Arc::new(centralizer.to_algebra());
    let rb = centralizer.basis();
    let source =
        Matrix::from_columns(field, m, &rb.iter().map(|r| in_t(&rts.pure(a.unit(), r))).collect::<Vec<_>>());
    let target =
        Matrix::from_columns(field, m, &rb.iter().map(|r| in_t(&rts.pure(r, a.unit()))).collect::<Vec<_>>());
    let counit = Matrix::from_columns(
        field,
        rb.len(),
        &elements.iter().map(|t| centralizer.coords(&rts.multiply(t)).expect("t¹t² lies in R")).collect::<Vec<_>>(),
    );

    let id = Matrix::identity(field, a.dim());
    let tp = rts.tensor();
    let left_t: Vec<Vector> = left.tensors.iter().map(|t| in_t(t)).collect();
    let left_maps: Vec<Matrix> = left.maps.iter().map(|b| tp.induced(b, &id, tp)).collect();
    let right_t: Vec<Vector> = right.tensors.iter().map(|t| in_t(t)).collect();
    let right_maps: Vec<Matrix> = right.maps.iter().map(|g| tp.induced(&id, g, tp)).collect();

    let eq14 = |sq: &TensorProduct| -> Matrix {
        let cols: Vec<Vector> = elements
            .iter()
            .map(|t| {
                let mut acc = vector::zeros(field, sq.dim());
                for (ti, bi) in left_t.iter().zip(&left_maps) {
                    acc = vector::add(&acc, &sq.pure(ti, &in_t(&bi.mul_vec(t))));
                }
                acc
            })
            .collect();
        Matrix::from_columns(field, sq.dim(), &cols)
    };
    let bialgebroid = RightBialgebroid::new(total, base, source, target, eq14, counit)?;

    let sq = bialgebroid.coring().square();
    let cols: Vec<Vector> = elements
        .iter()
        .map(|t| {
            let mut acc = vector::zeros(field, sq.dim());
            for (uj, gj) in right_t.iter().zip(&right_maps) {
                acc = vector::add(&acc, &sq.pure(&in_t(&gj.mul_vec(t)), uj));
            }
            acc
        })
        .collect();
    let alt_coproduct = Matrix::from_columns(field, sq.dim(), &cols);
    if alt_coproduct != *bialgebroid.coproduct() {
        return Err(BialgebroidError::TheoremViolation("the two coproduct formulas for T disagree".into()));
    }
    Ok(BCentralBialgebroid { bialgebroid, elements, coords, alt_coproduct })
}

/// `Θ(α ⊗ β)(a, a') = α(a)β(a')` on basis pairs, as a matrix from
/// `S ⊗_R S` into functions `A × A → A` (index `(a·n + a')·n + k`).
fn s_pairing(s: &EndomorphismBialgebroid, n: usize) -> Matrix {
    let field = s.bialgebroid.field();
    let sq = s.bialgebroid.square();
    let cols: Vec<Vector> = (0..sq.dim())
        .map(|i| {
            let (x, y) = sq.legs(i);
            let (f, g) = (&s.operators[x], &s.operators[y]);
            let mut out = Vec::with_capacity(n * n * n);
            for a in 0..n {
                for b in 0..n {
                    let (fa, gb) = (f.column(a), g.column(b));
                    out.extend(s_mul(s, &fa, &gb));
                }
            }
            out
        })
        .collect();
    Matrix::from_columns(field, n * n * n, &cols)
}

fn s_mul(s: &EndomorphismBialgebroid, x: &[Scalar], y: &[Scalar]) -> Vector {
    s.centralizer.ambient().mul(x, y)
}

/// Checks `S ⊗_R S ≅ Hom_{B-B}(A ⊗_B A, A)` under `α ⊗ β ↦ (a ⊗ a' ↦
/// α(a)β(a'))` and `Δ(α)(a ⊗ a') = α(aa')` on all basis triples.
pub fn check_lu_formula_s(s: &EndomorphismBialgebroid, ext: &RingExtension) -> Verification {
    let mut v = Verification::new();
    let a = ext.algebra();
    let field = ext.field();
    let n = a.dim();
    let theta = s_pairing(s, n);
    let q = s.bialgebroid.square().dim();
    let rank = theta.rank();
    v.check("identification injective", rank == q, format!("rank {rank} of {q}"));

    let rts = ext.tensor_square();
    let mut pairs = Vec::new();
    for b in ext.base().basis() {
        pairs.push((rts.left_action_matrix(b), a.left_mul_matrix(b)));
        pairs.push((rts.right_action_matrix(b), a.right_mul_matrix(b)));
    }
    let homs = commutant_maps(field, rts.dim(), n, &pairs, None);
    let pure: Vec<Vector> = (0..n * n).map(|i| rts.pure(&a.basis_vector(i / n), &a.basis_vector(i % n))).collect();
    let hom_fns = homs.iter().map(|h| pure.iter().flat_map(|p| h.mul_vec(p)).collect::<Vector>());
    let hom_space = Subspace::span(field, n * n * n, hom_fns);
    let image = Subspace::span(field, n * n * n, theta.columns());
    v.check(
        "identification onto bimodule maps",
        image == hom_space,
        format!("image dim {}, Hom_(B-B)(A ⊗_B A, A) dim {}", image.dim(), hom_space.dim()),
    );
    v.record(
        "Δ(α)(a ⊗ a') = α(aa')",
        first_failure(s.dim(), |k| {
            let lhs = theta.mul_vec(&s.bialgebroid.coproduct().column(k));
            let op = &s.operators[k];
            let rhs: Vector = (0..n * n)
                .flat_map(|i| op.mul_vec(&a.mul(&a.basis_vector(i / n), &a.basis_vector(i % n))))
                .collect();
            lhs == rhs
        }),
    );
    v
}

/// `(A ⊗_B A) ⊗_B A`.
fn triple_square(ext: &RingExtension) -> TensorProduct {
    let a = ext.algebra();
    let rts = ext.tensor_square();
    let right: Vec<Matrix> = ext.base().basis().iter().map(|b| rts.right_action_matrix(b)).collect();
    let left: Vec<Matrix> = ext.base().basis().iter().map(|b| a.left_mul_matrix(b)).collect();
    TensorProduct::new(ext.field(), rts.dim(), a.dim(), &right, &left)
}

/// Checks `T ⊗_R T ≅ (A ⊗_B A ⊗_B A)^B` under `t ⊗ t' ↦ t¹ ⊗ t²t'¹ ⊗ t'²` and
/// `Δ(t) = t¹ ⊗ 1 ⊗ t²` on every basis element.
pub fn check_lu_formula_t(t: &BCentralBialgebroid, ext: &RingExtension) -> Verification {
    let mut v = Verification::new();
    let a = ext.algebra();
    let field = ext.field();
    let rts = ext.tensor_square();
    let tp = rts.tensor();
    let triple = triple_square(ext);
    let sq = t.bialgebroid.coring().square();
    let abasis = basis(a);
    let theta_cols: Vec<Vector> = (0..sq.dim())
        .map(|i| {
            let (x, y) = sq.legs(i);
            let mut acc = vector::zeros(field, triple.dim());
            for (a1, a2, c) in tp.terms(&t.elements[x]) {
                for (b1, b2, d) in tp.terms(&t.elements[y]) {
                    let inner = rts.pure(&abasis[a1], &a.mul(&abasis[a2], &abasis[b1]));
                    vector::axpy(&mut acc, &(c * d), &triple.pure(&inner, &abasis[b2]));
                }
            }
            acc
        })
        .collect();
    let theta = Matrix::from_columns(field, triple.dim(), &theta_cols);
    let rank = theta.rank();
    v.check("identification injective", rank == sq.dim(), format!("rank {rank} of {}", sq.dim()));

    let mut e = Echelon::new(field, triple.dim());
    for b in ext.base().basis() {
        let d = triple.induced_left(&rts.left_action_matrix(b)).sub(&triple.induced_right(&a.right_mul_matrix(b)));
        for r in 0..d.rows() {
            e.insert(sparse_from_dense(d.row(r)));
        }
    }
    let central = Subspace::span(field, triple.dim(), e.into_reduced().kernel_basis_reduced());
    let image = Subspace::span(field, triple.dim(), theta_cols);
    v.check(
        "identification onto B-central elements",
        image == central,
        format!("image dim {}, (A ⊗_B A ⊗_B A)^B dim {}", image.dim(), central.dim()),
    );
    v.record(
        "Δ(t) = t¹ ⊗ 1 ⊗ t²",
        first_failure(t.dim(), |k| {
            let mut rhs = vector::zeros(field, triple.dim());
            for (a1, a2, c) in tp.terms(&t.elements[k]) {
                vector::axpy(&mut rhs, c, &triple.pure(&rts.pure(&abasis[a1], a.unit()), &abasis[a2]));
            }
            theta.mul_vec(&t.bialgebroid.coproduct().column(k)) == rhs
        }),
    );
    v
}

/// The evaluation action of `S` on `A` and its invariants.
#[derive(Clone, Debug, Serialize)]
pub struct ActionReport {
    /// Basis of `{a : α(a) = α(1)a for all α}`.
    #[serde(skip)]
    pub invariants: Vec<Vector>,
    pub invariants_dim: usize,
    pub invariants_equal_base: bool,
    pub balanced: bool,
    pub measuring: bool,
    pub measuring_witness: String,
}

pub fn s_action_and_invariants(s: &EndomorphismBialgebroid, ext: &RingExtension) -> ActionReport {
    let a = ext.algebra();
    let field = ext.field();
    let n = a.dim();
    let mut e = Echelon::new(field, n);
    for op in &s.operators {
        let d = op.sub(&a.left_mul_matrix(&op.mul_vec(a.unit())));
        for r in 0..n {
            e.insert(sparse_from_dense(d.row(r)));
        }
    }
    let invariants = e.into_reduced().kernel_basis_reduced();
    let inv_space = Subspace::span(field, n, invariants.iter().cloned());
    let equal = inv_space == ext.base().subspace();
    let sq = s.bialgebroid.square();
    let measuring = first_pair_failure(n * s.dim(), n, |ka, b| {
        let (k, i) = (ka / n, ka % n);
        let (x, y) = (a.basis_vector(i), a.basis_vector(b));
        let mut lhs = a.zero();
        for (p, q, c) in sq.terms(&s.bialgebroid.coproduct().column(k)) {
            vector::axpy(&mut lhs, c, &a.mul(&s.operators[p].mul_vec(&x), &s.operators[q].mul_vec(&y)));
        }
        lhs == s.operators[k].mul_vec(&a.mul(&x, &y))
    });
    ActionReport {
        invariants_dim: invariants.len(),
        invariants,
        invariants_equal_base: equal,
        balanced: ext.module_properties().balanced_right.holds,
        measuring: measuring.is_ok(),
        measuring_witness: measuring.unwrap_or_else(|w| w),
    }
}

/// Dimensions and checks for `A ⋊' S → End(A_B)`, `a ⊗ α ↦ λ_a α`.
#[derive(Clone, Debug, Serialize)]
pub struct SmashIsoReport {
    pub smash_dim: usize,
    pub endomorphism_dim: usize,
    pub bijective: bool,
    pub multiplicative: bool,
}

/// Verifies that `a ⊗_R α ↦ λ_a α` is a ring isomorphism from the smash
/// product `A ⋊' S` onto `End(A_B)`. A failure is a theorem violation.
pub fn smash_endomorphism_iso(s: &EndomorphismBialgebroid, ext: &RingExtension) -> Result<SmashIsoReport, BialgebroidError> {
    let a = ext.algebra();
    let field = ext.field();
    let n = a.dim();
    let salg = s.bialgebroid.total();
    let right_r: Vec<Matrix> = s.centralizer.basis().iter().map(|r| a.right_mul_matrix(r)).collect();
    let smash = TensorProduct::new(field, n, s.dim(), &right_r, s.bialgebroid.coring().left_actions());
    let lmul: Vec<Matrix> = basis(a).iter().map(|x| a.left_mul_matrix(x)).collect();
    let psi_pure = |x: usize, y: usize| lmul[x].mul(&s.operators[y]);
    let psi_of = |q: &[Scalar]| -> Matrix {
        let mut out = Matrix::zeros(field, n, n);
        for (x, y, c) in smash.terms(q) {
            out = out.add(&psi_pure(x, y).scale(c));
        }
        out
    };
    let psi = Matrix::from_columns(
        field,
        n * n,
        &(0..smash.dim()).map(|i| flatten_rows(&psi_of(&vector::unit(field, smash.dim(), i)))).collect::<Vec<_>>(),
    );
    let end = bimodule_hom_space(a, ext.base(), HomKind::RightModule);
    let image = Subspace::span(field, n * n, psi.columns());
    let end_space = Subspace::span(field, n * n, end.iter().map(flatten_rows));
    let bijective = psi.rank() == smash.dim() && image == end_space;
    if !bijective {
        return Err(BialgebroidError::TheoremViolation(format!(
            "λ_a α is not bijective onto End(A_B): rank {} of {}, End(A_B) dim {}",
            psi.rank(),
            smash.dim(),
            end_space.dim()
        )));
    }
    // (a ⊗ α)(a' ⊗ α') = a α₍₁₎(a') ⊗ α₍₂₎α'
    let sq = s.bialgebroid.square();
    let multiplicative = first_pair_failure(smash.dim(), smash.dim(), |i, j| {
        let (x, y) = smash.legs(i);
        let (x2, y2) = smash.legs(j);
        let mut prod = vector::zeros(field, smash.dim());
        for (p, q, c) in sq.terms(&s.bialgebroid.coproduct().column(y)) {
            let left = a.mul(&a.basis_vector(x), &s.operators[p].mul_vec(&a.basis_vector(x2)));
            let right = salg.mul(&salg.basis_vector(q), &salg.basis_vector(y2));
            vector::axpy(&mut prod, c, &smash.pure(&left, &right));
        }
        psi_of(&prod) == psi_pure(x, y).mul(&psi_pure(x2, y2))
    });
    if let Err(w) = multiplicative {
        return Err(BialgebroidError::TheoremViolation(format!("smash product not multiplicative at {w}")));
    }
    Ok(SmashIsoReport { smash_dim: smash.dim(), endomorphism_dim: end_space.dim(), bijective, multiplicative: true })
}
