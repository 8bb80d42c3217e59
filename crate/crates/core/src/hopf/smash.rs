//! Smash products `V ⋊ H` and the isomorphisms `S ≅ R ⋊ H*` and
//! `T^op ≅ R ⋊ H^op` of a Hopf-Galois extension.

use std::sync::Arc;

use super::{require, HopfAlgebra, HopfError, HopfGalois};
use crate::algebra::{tensor_add, FinDimAlgebra};
use crate::bialgebroid::{verify_bialgebroid_morphism, BCentralBialgebroid, EndomorphismBialgebroid, LeftBialgebroid};
use crate::linalg::{normalize_sparse, vector, Matrix, Scalar, SparseVec, Vector};
use crate::verify::{first_failure, first_pair_failure, Verification};

/// `Σ x_k · action[k]`.
pub(crate) fn act(action: &[Matrix], x: &[Scalar]) -> Matrix {
    let d = action[0].rows();
    let mut out = Matrix::zeros(x[0].field(), d, d);
    for (m, c) in action.iter().zip(x) {
        if !c.is_zero() {
            out = out.add(&m.scale(c));
        }
    }
    out
}

/// Checks that `h_i ↦ action[i]` makes `V` a left `H`-module algebra.
pub fn check_module_algebra(v: &FinDimAlgebra, h: &HopfAlgebra, action: &[Matrix]) -> Verification {
    let (d, n) = (v.dim(), h.dim());
    let field = v.field();
    let mut out = Verification::new();
    let shapes = action.len() == n && action.iter().all(|m| m.rows() == d && m.cols() == d);
    out.check("shapes", shapes, format!("{} matrices for dim H = {n}", action.len()));
    if !shapes {
        return out;
    }
    out.check("unit acts trivially", act(action, h.algebra().unit()) == Matrix::identity(field, d), "1 · v = v");
    out.record(
        "module",
        first_pair_failure(n, n, |i, j| act(action, &h.mul(&h.basis_vector(i), &h.basis_vector(j))) == action[i].mul(&action[j])),
    );
    out.record(
        "measuring",
        first_pair_failure(n, d * d, |k, uv| {
            let (u, w) = (v.basis_vector(uv / d), v.basis_vector(uv % d));
            let mut rhs = v.zero();
            for (i, j, c) in h.delta_terms(k) {
                vector::axpy(&mut rhs, c, &v.mul(&action[*i].mul_vec(&u), &action[*j].mul_vec(&w)));
            }
            action[k].mul_vec(&v.mul(&u, &w)) == rhs
        }),
    );
    out.record(
        "unit preserved",
        first_failure(n, |k| action[k].mul_vec(v.unit()) == vector::scale(&h.counit()[k], v.unit())),
    );
    out
}

/// `V ⋊ H` on `v_a ⊗ h_i` (index `a·n + i`) with `(v ⋊ h)(v' ⋊ h') =
/// v(h₁·v') ⋊ h₂h'`. The action must be a module-algebra action.
pub fn smash_product(v: &FinDimAlgebra, h: &HopfAlgebra, action: &[Matrix]) -> Result<FinDimAlgebra, HopfError> {
    require(&check_module_algebra(v, h, action), HopfError::NotMeasuring)?;
    let (d, n) = (v.dim(), h.dim());
    let field = v.field();
    let mut table: Vec<SparseVec> = Vec::with_capacity(d * d * n * n);
    for x in 0..d * n {
        let (a, i) = (x / n, x % n);
        for y in 0..d * n {
            let (b, j) = (y / n, y % n);
            let mut acc = vector::zeros(field, d * n);
            for (p, q, c) in h.delta_terms(i) {
                let left = v.mul(&v.basis_vector(a), &action[*p].mul_vec(&v.basis_vector(b)));
                let right = h.mul(&h.basis_vector(*q), &h.basis_vector(j));
                tensor_add(&mut acc, c, &left, &right);
            }
            table.push(normalize_sparse(crate::linalg::sparse_from_dense(&acc)));
        }
    }
    let unit = vector::tensor(v.unit(), h.algebra().unit());
    Ok(FinDimAlgebra::from_table(field, d * n, table, unit)?)
}

/// A verified isomorphism from a bialgebroid of the extension onto a smash
/// product carrying the displayed structure.
#[derive(Clone, Debug)]
pub struct SmashIso {
    pub matrix: Matrix,
    pub smash: LeftBialgebroid,
    pub checks: Verification,
}

/// Splits `x ∈ A ⊗ K` into `R ⊗ K` coordinates.
fn to_r_coords(hg: &HopfGalois, x: &[Scalar], n: usize) -> Option<Vector> {
    let rr = hg.centralizer();
    let m = hg.algebra().dim();
    let field = hg.algebra().field();
    let mut out = vector::zeros(field, rr.dim() * n);
    for k in 0..n {
        let slice: Vector = (0..m).map(|a| x[a * n + k].clone()).collect();
        let c = rr.coords(&slice)?;
        for (r, v) in c.into_iter().enumerate() {
            out[r * n + k] = v;
        }
    }
    Some(out)
}

/// `R ⋊ K` with source `r ⋊ 1`, the given target, `Δ(r ⋊ k) = (r ⋊ k₁) ⊗
/// (1 ⋊ k₂)` and `ε(r ⋊ k) = r ε(k)`.
fn displayed_bialgebroid(
    base: &Arc<FinDimAlgebra>,
    k: &HopfAlgebra,
    total: FinDimAlgebra,
    target: Matrix,
) -> Result<LeftBialgebroid, HopfError> {
    let (d, n) = (base.dim(), k.dim());
    let field = base.field();
    let one = k.algebra().unit();
    let source = Matrix::from_columns(field, d * n, &(0..d).map(|r| vector::tensor(&base.basis_vector(r), one)).collect::<Vec<_>>());
    let counit = Matrix::from_fn(field, d, d * n, |r, x| if x / n == r { k.counit()[x % n].clone() } else { field.zero() });
    let coproduct = |sq: &crate::algebra::TensorProduct| -> Matrix {
        let cols: Vec<Vector> = (0..d * n)
            .map(|x| {
                let (r, i) = (x / n, x % n);
                let mut acc = vector::zeros(field, sq.dim());
                for (p, q, c) in k.delta_terms(i) {
                    let left = vector::tensor(&base.basis_vector(r), &k.basis_vector(*p));
                    let right = vector::tensor(base.unit(), &k.basis_vector(*q));
                    vector::axpy(&mut acc, c, &sq.pure(&left, &right));
                }
                acc
            })
            .collect();
        Matrix::from_columns(field, sq.dim(), &cols)
    };
    Ok(LeftBialgebroid::new(Arc::new(total), base.clone(), source, target, coproduct, counit)?)
}

/// `Φ(α) = Σ_i (α(x_i) ⋊ T)(y_i ⋊ 1)` with `Σ x_i ⊗ y_i = β⁻¹(1 ⊗ t)` for
/// left integrals `t ∈ H`, `T ∈ H*` normalized to `T(t) = 1`. The target of
/// `R ⋊ H*` is the displayed `t̃(r) = Σ x_i r (T₁·y_i) ⋊ T₂`, compared
/// against `Φ(ρ(r))`.
pub fn iso_s_to_smash(hg: &HopfGalois, s: &EndomorphismBialgebroid) -> Result<SmashIso, HopfError> {
    let a = hg.algebra();
    let h = hg.hopf();
    let dual = &hg.dual;
    let (m, n) = (a.dim(), h.dim());
    let field = a.field();
    let rr = hg.centralizer();
    let base = s.bialgebroid.base().clone();

    let t = h.integral().integral;
    let big_t = dual.integral().integral;
    let pairing = vector::dot(&big_t, &t);
    if pairing.is_zero() {
        return Err(HopfError::DegeneratePairing);
    }
    let big_t = vector::scale(&pairing.inv(), &big_t);
    let xy: Vec<(usize, usize, Scalar)> =
        hg.ext.tensor_square().tensor().terms(&hg.galois_lift(&t)).map(|(x, y, c)| (x, y, c.clone())).collect();
    // T₁ ⊗ T₂
    let t_legs: Vec<(usize, usize, Scalar)> = big_t
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .flat_map(|(k, c)| dual.delta_terms(k).iter().map(move |(i, j, d)| (*i, *j, c * d)))
        .collect();
    let p_act = hg.comodule.dual_action();

    // Σ_i f(x_i) (T₁·y_i) ⊗ T₂ for an operator f on A
    let phi_of = |f: &dyn Fn(&[Scalar]) -> Vector| -> Vector {
        let mut out = vector::zeros(field, m * n);
        for (x, y, c) in &xy {
            let fx = f(&a.basis_vector(*x));
            for (i, j, d) in &t_legs {
                let left = a.mul(&fx, &p_act[*i].mul_vec(&a.basis_vector(*y)));
                tensor_add(&mut out, &(c * d), &left, &dual.basis_vector(*j));
            }
        }
        out
    };

    let mut checks = Verification::new();
    let mut cols = Vec::with_capacity(s.dim());
    for op in &s.operators {
        let image = phi_of(&|x: &[Scalar]| op.mul_vec(x));
        match to_r_coords(hg, &image, n) {
            Some(c) => cols.push(c),
            None => return Err(HopfError::Invalid("Φ(α) leaves R ⋊ H*".into())),
        }
    }
    let phi = Matrix::from_columns(field, rr.dim() * n, &cols);
    checks.check("Φ bijective", phi.rows() == phi.cols() && phi.rank() == phi.cols(), format!("rank {}", phi.rank()));

    let total = smash_product(&base, dual, &hg.dual_action_on_r())?;
    let displayed: Vec<Vector> = rr
        .basis()
        .iter()
        .map(|r| {
            let image = phi_of(&|x: &[Scalar]| a.mul(x, r));
            to_r_coords(hg, &image, n).expect("t̃(r) lies in R ⋊ H*")
        })
        .collect();
    let target = Matrix::from_columns(field, rr.dim() * n, &displayed);
    let transported: Vec<Vector> = rr
        .basis()
        .iter()
        .map(|r| phi.mul_vec(&s.coords_of(&a.right_mul_matrix(r)).expect("ρ(r) lies in S")))
        .collect();
    checks.record(
        "t̃(r) = Φ(ρ(r))",
        first_failure(rr.dim(), |r| transported[r] == target.column(r)),
    );
    let smash = displayed_bialgebroid(&base, dual, total, target)?;
    checks.extend("Φ: ", verify_bialgebroid_morphism(&phi, &Matrix::identity(field, base.dim()), &s.bialgebroid, &smash));
    Ok(SmashIso { matrix: phi, smash, checks })
}

/// `β` restricted to `T`, onto `R ⊗ H`: checks the transported product
/// `(r ⊗ h) ⋆ (r' ⊗ h') = r'(r ◁ h'₁) ⊗ hh'₂` and that `β` is a bialgebroid
/// isomorphism `T^op → R ⋊ H^op` for the displayed structure `t̃(r) = r₀ ⋊
/// r₁`, `Δ(r ⋊ h) = r ⋊ h₁ ⊗ h₂`, `ε(r ⋊ h) = rε(h)`.
pub fn iso_top_to_smash(hg: &HopfGalois, t: &BCentralBialgebroid) -> Result<SmashIso, HopfError> {
    let h = hg.hopf();
    let field = hg.algebra().field();
    let n = h.dim();
    let rr = hg.centralizer();
    let d = rr.dim();
    let base = t.bialgebroid.base().clone();
    let mut cols = Vec::with_capacity(t.dim());
    for e in &t.elements {
        match to_r_coords(hg, &hg.beta.mul_vec(e), n) {
            Some(c) => cols.push(c),
            None => return Err(HopfError::Invalid("β(T) leaves R ⊗ H".into())),
        }
    }
    let big_f = Matrix::from_columns(field, d * n, &cols);
    let mut checks = Verification::new();
    checks.check(
        "β: T → R ⊗ H bijective",
        big_f.rows() == big_f.cols() && big_f.rank() == big_f.cols(),
        format!("rank {} of {}×{}", big_f.rank(), big_f.rows(), big_f.cols()),
    );

    let mu = hg.mu_matrices();
    let star = |x: &[Scalar], y: &[Scalar]| -> Vector {
        let mut out = vector::zeros(field, d * n);
        for (p, cx) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let (r, hi) = (p / n, p % n);
            for (q, cy) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let (r2, hj) = (q / n, q % n);
                for (u, w, c) in h.delta_terms(hj) {
                    let left = base.mul(&base.basis_vector(r2), &mu[*u].mul_vec(&base.basis_vector(r)));
                    let right = h.mul(&h.basis_vector(hi), &h.basis_vector(*w));
                    tensor_add(&mut out, &(&(cx * cy) * c), &left, &right);
                }
            }
        }
        out
    };
    let tt = t.bialgebroid.total();
    checks.record(
        "β(tt') = β(t) ⋆ β(t')",
        first_pair_failure(t.dim(), t.dim(), |i, j| {
            let prod = tt.mul(&tt.basis_vector(i), &tt.basis_vector(j));
            big_f.mul_vec(&prod) == star(&big_f.column(i), &big_f.column(j))
        }),
    );

    let total = smash_product(&base, &hg.hopf_op, &mu)?;
    let target = Matrix::from_columns(field, d * n, &(0..d).map(|r| hg.coaction_on_r(&base.basis_vector(r))).collect::<Vec<_>>());
    let smash = displayed_bialgebroid(&base, &hg.hopf_op, total, target)?;
    let top = t.bialgebroid.to_left_opposite();
    checks.extend("β: ", verify_bialgebroid_morphism(&big_f, &Matrix::identity(field, d), &top, &smash));
    Ok(SmashIso { matrix: big_f, smash, checks })
}
