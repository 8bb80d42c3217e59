//! The Drinfeld double `D(H) = H*^cop ⋈ H`, module algebras over it, Lu's
//! Hopf algebroid on `V ⋊ H`, and its instance `R ⋊ H^op ≅ T^op`.

use std::sync::Arc;

use super::smash::{act, check_module_algebra, iso_top_to_smash, smash_product, SmashIso};
use super::{require, HopfAlgebra, HopfError, HopfGalois};
use crate::algebra::{tensor_add, FinDimAlgebra, TensorProduct};
use crate::bialgebroid::{BCentralBialgebroid, HopfAlgebroid, LeftBialgebroid};
use crate::linalg::{normalize_sparse, sparse_from_dense, vector, Matrix, Scalar, Vector};
use crate::verify::{first_failure, first_pair_failure, Verification};

/// `D(H)` on `p_f ⊗ h_a` (index `f·n + a`) with
/// `(p ⋈ h)(p' ⋈ h') = p (h₁ ⇀ p' ↼ S⁻¹h₃) ⋈ h₂h'`, where
/// `(h ⇀ p ↼ g)(x) = p(gxh)`; coalgebra `H*^cop ⊗ H`; antipode
/// `S(p ⋈ h) = (1 ⋈ Sh)(p∘S⁻¹ ⋈ 1)`.
pub fn drinfeld_double(h: &HopfAlgebra) -> Result<HopfAlgebra, HopfError> {
    let n = h.dim();
    let big = n * n;
    let field = h.field();
    let s_inv = h.antipode_inverse().ok_or(HopfError::NotInvertible)?;
    let dual = h.dual();
    let hb: Vec<Vector> = (0..n).map(|i| h.basis_vector(i)).collect();
    let mut table = Vec::with_capacity(big * big);
    for x in 0..big {
        let (f, a) = (x / n, x % n);
        let triples = h.delta2_terms(a);
        for y in 0..big {
            let (g, b) = (y / n, y % n);
            let mut acc = vector::zeros(field, big);
            for (i, j, l, c) in &triples {
                let left = s_inv.column(*l);
                let phi: Vector = (0..n).map(|z| h.algebra().mul_all(&[&left, &hb[z], &hb[*i]])[g].clone()).collect();
                let p = dual.mul(&dual.basis_vector(f), &phi);
                tensor_add(&mut acc, c, &p, &h.mul(&hb[*j], &hb[b]));
            }
            table.push(normalize_sparse(sparse_from_dense(&acc)));
        }
    }
    let unit = vector::tensor(h.counit(), h.algebra().unit());
    let algebra = Arc::new(FinDimAlgebra::from_table(field, big, table, unit)?);
    let mut coproduct = Matrix::zeros(field, big * big, big);
    for x in 0..big {
        let (f, a) = (x / n, x % n);
        for (i, j, c) in dual.delta_terms(f) {
            for (k, l, d) in h.delta_terms(a) {
                let row = (j * n + k) * big + (i * n + l);
                let cur = coproduct.get(row, x) + &(c * d);
                coproduct.set(row, x, cur);
            }
        }
    }
    let counit: Vector = (0..big).map(|x| &h.algebra().unit()[x / n] * &h.counit()[x % n]).collect();
    let cols: Vec<Vector> = (0..big)
        .map(|x| {
            let (f, a) = (x / n, x % n);
            let left = vector::tensor(h.counit(), &h.s(&hb[a]));
            let right = vector::tensor(s_inv.row(f), h.algebra().unit());
            algebra.mul(&left, &right)
        })
        .collect();
    let antipode = Matrix::from_columns(field, big, &cols);
    HopfAlgebra::new(algebra, coproduct, counit, antipode)
}

/// `(1 ⋈ h)(p ⋈ 1) = (h₁ ⇀ p₂) ⋈ (h₂ ↼ p₁)` on all basis pairs, with the
/// coadjoint actions `(h ⇀ p)(x) = p(S⁻¹(h₂) x h₁)` and
/// `h ↼ p = h₂ p(S⁻¹(h₃) h₁)`.
pub fn check_double_relation(h: &HopfAlgebra, d: &HopfAlgebra) -> Verification {
    let n = h.dim();
    let field = h.field();
    let mut v = Verification::new();
    let Some(s_inv) = h.antipode_inverse() else {
        v.check("anti-commutation relation", false, "antipode not invertible");
        return v;
    };
    let dual = h.dual();
    let hb: Vec<Vector> = (0..n).map(|i| h.basis_vector(i)).collect();
    let alg = h.algebra();
    let coad_left = |k: usize, p: usize| -> Vector {
        let mut out = vector::zeros(field, n);
        for (u, w, c) in h.delta_terms(k) {
            for (x, slot) in out.iter_mut().enumerate() {
                *slot += &(c * &alg.mul_all(&[&s_inv.column(*w), &hb[x], &hb[*u]])[p]);
            }
        }
        out
    };
    let coad_right = |k: usize, p: usize| -> Vector {
        let mut out = vector::zeros(field, n);
        for (u, m, w, c) in h.delta2_terms(k) {
            let coeff = &alg.mul(&s_inv.column(w), &hb[u])[p] * &c;
            vector::axpy(&mut out, &coeff, &hb[m]);
        }
        out
    };
    v.record(
        "anti-commutation relation",
        first_pair_failure(n, n, |a, f| {
            let lhs = d.mul(&vector::tensor(h.counit(), &hb[a]), &vector::tensor(&dual.basis_vector(f), alg.unit()));
            let mut rhs = vector::zeros(field, n * n);
            for (k, l, c) in h.delta_terms(a) {
                for (i, j, e) in dual.delta_terms(f) {
                    tensor_add(&mut rhs, &(c * e), &coad_left(*k, *j), &coad_right(*l, *i));
                }
            }
            lhs == rhs
        }),
    );
    v
}

/// Quasitriangularity of `R = Σ_i (1 ⋈ h_i) ⊗ (p_i ⋈ 1)` in `D(H)`.
pub fn check_quasitriangular(h: &HopfAlgebra, d: &HopfAlgebra) -> Verification {
    let n = h.dim();
    let big = d.dim();
    let field = h.field();
    let hb: Vec<Vector> = (0..n).map(|i| h.basis_vector(i)).collect();
    let legs: Vec<(Vector, Vector)> = (0..n)
        .map(|i| (vector::tensor(h.counit(), &hb[i]), vector::tensor(&vector::unit(field, n, i), h.algebra().unit())))
        .collect();
    let mut r = vector::zeros(field, big * big);
    for (x, y) in &legs {
        tensor_add(&mut r, &field.one(), x, y);
    }
    let swap = |x: &[Scalar], m: usize| -> Vector {
        let mut out = vector::zeros(field, m * m);
        for (idx, c) in x.iter().enumerate() {
            out[(idx % m) * m + idx / m] = c.clone();
        }
        out
    };
    let mut v = Verification::new();
    v.record(
        "Δ^cop(x) R = R Δ(x)",
        first_failure(big, |x| {
            let dx = d.coproduct().column(x);
            d.tensor_mul(&swap(&dx, big), &r) == d.tensor_mul(&r, &dx)
        }),
    );
    let mut lhs = vector::zeros(field, big * big * big);
    let mut rhs = vector::zeros(field, big * big * big);
    for (x, y) in &legs {
        tensor_add(&mut lhs, &field.one(), &d.delta(x), y);
        for (x2, y2) in &legs {
            tensor_add(&mut rhs, &field.one(), &vector::tensor(x, x2), &d.mul(y, y2));
        }
    }
    v.check("(Δ ⊗ id)R = R₁₃R₂₃", lhs == rhs, "");
    let mut lhs = vector::zeros(field, big * big * big);
    let mut rhs = vector::zeros(field, big * big * big);
    for (x, y) in &legs {
        tensor_add(&mut lhs, &field.one(), x, &d.delta(y));
        for (x2, y2) in &legs {
            tensor_add(&mut rhs, &field.one(), &d.mul(x, x2), &vector::tensor(y2, y));
        }
    }
    v.check("(id ⊗ Δ)R = R₁₃R₁₂", lhs == rhs, "");
    v
}

/// A left `D(H)`-module algebra `V`, given by the actions of `H`
/// (`h_action[i]` for `h_i`) and of `H*` (`dual_action[i]` for `p_i`); `p ⋈ h`
/// acts as `p · (h · v)`.
#[derive(Clone, Debug)]
pub struct DoubleModuleAlgebra {
    pub v: Arc<FinDimAlgebra>,
    pub hopf: HopfAlgebra,
    pub h_action: Vec<Matrix>,
    pub dual_action: Vec<Matrix>,
}

impl DoubleModuleAlgebra {
    /// `V = k` with the trivial actions `h · 1 = ε(h)`, `p · 1 = p(1)`.
    pub fn trivial(hopf: &HopfAlgebra) -> Self {
        let field = hopf.field();
        let n = hopf.dim();
        let scalar = |c: &Scalar| Matrix::from_fn(field, 1, 1, |_, _| c.clone());
        DoubleModuleAlgebra {
            v: Arc::new(FinDimAlgebra::ground(field)),
            hopf: hopf.clone(),
            h_action: (0..n).map(|i| scalar(&hopf.counit()[i])).collect(),
            dual_action: (0..n).map(|i| scalar(&hopf.algebra().unit()[i])).collect(),
        }
    }

    fn double_action(&self, x: usize) -> Matrix {
        let n = self.hopf.dim();
        self.dual_action[x / n].mul(&self.h_action[x % n])
    }

    pub fn verify(&self) -> Verification {
        let mut v = Verification::new();
        let d = match drinfeld_double(&self.hopf) {
            Ok(d) => d,
            Err(e) => {
                v.check("double", false, e.to_string());
                return v;
            }
        };
        let big = d.dim();
        let field = self.hopf.field();
        v.extend("H: ", check_module_algebra(&self.v, &self.hopf, &self.h_action));
        v.extend("H*: ", check_module_algebra(&self.v, &self.hopf.dual(), &self.dual_action));
        let acts: Vec<Matrix> = (0..big).map(|x| self.double_action(x)).collect();
        v.check("double unit acts trivially", act(&acts, d.algebra().unit()) == Matrix::identity(field, self.v.dim()), "");
        v.record(
            "double module",
            first_pair_failure(big, big, |x, y| {
                act(&acts, &d.mul(&d.basis_vector(x), &d.basis_vector(y))) == acts[x].mul(&acts[y])
            }),
        );
        v
    }

    /// `Σ_i (p_i · u)(h_i · v) = vu` on all basis pairs; the first failing
    /// pair `(u, v)` otherwise.
    pub fn lu_condition(&self) -> Result<String, (usize, usize)> {
        let vv = &self.v;
        let d = vv.dim();
        let n = self.hopf.dim();
        for u in 0..d {
            for w in 0..d {
                let (eu, ew) = (vv.basis_vector(u), vv.basis_vector(w));
                let mut lhs = vv.zero();
                for i in 0..n {
                    vector::axpy(&mut lhs, &self.hopf.field().one(), &vv.mul(&self.dual_action[i].mul_vec(&eu), &self.h_action[i].mul_vec(&ew)));
                }
                if lhs != vv.mul(&ew, &eu) {
                    return Err((u, w));
                }
            }
        }
        Ok(format!("{} basis pairs", d * d))
    }
}

/// Lu's Hopf algebroid on `V ⋊ H` over `V`: `s̃(v) = v ⋊ 1`, `t̃(v) = Σ_i (p_i
/// · v) ⋊ h_i`, `Δ(v ⋊ h) = v ⋊ h₁ ⊗ 1 ⋊ h₂`, `ε(v ⋊ h) = ε(h)v` and
/// `τ(v ⋊ h) = Σ_i (1 ⋊ Sh) t̃(S²(h_i) · p_i · v)`.
pub fn lu_theorem_hopf_algebroid(dm: &DoubleModuleAlgebra) -> Result<HopfAlgebroid, HopfError> {
    dm.lu_condition().map_err(HopfError::LuCondition)?;
    require(&dm.verify(), HopfError::NotMeasuring)?;
    let h = &dm.hopf;
    let v = &dm.v;
    let (d, n) = (v.dim(), h.dim());
    let field = h.field();
    let total = Arc::new(smash_product(v, h, &dm.h_action)?);
    let hb: Vec<Vector> = (0..n).map(|i| h.basis_vector(i)).collect();
    let t_of = |w: &[Scalar]| -> Vector {
        let mut out = vector::zeros(field, d * n);
        for i in 0..n {
            tensor_add(&mut out, &field.one(), &dm.dual_action[i].mul_vec(w), &hb[i]);
        }
        out
    };
    let source = Matrix::from_columns(field, d * n, &(0..d).map(|r| vector::tensor(&v.basis_vector(r), h.algebra().unit())).collect::<Vec<_>>());
    let target = Matrix::from_columns(field, d * n, &(0..d).map(|r| t_of(&v.basis_vector(r))).collect::<Vec<_>>());
    let counit = Matrix::from_fn(field, d, d * n, |r, x| if x / n == r { h.counit()[x % n].clone() } else { field.zero() });
    let coproduct = |sq: &TensorProduct| -> Matrix {
        let cols: Vec<Vector> = (0..d * n)
            .map(|x| {
                let (r, k) = (x / n, x % n);
                let mut acc = vector::zeros(field, sq.dim());
                for (i, j, c) in h.delta_terms(k) {
                    let left = vector::tensor(&v.basis_vector(r), &hb[*i]);
                    let right = vector::tensor(v.unit(), &hb[*j]);
                    vector::axpy(&mut acc, c, &sq.pure(&left, &right));
                }
                acc
            })
            .collect();
        Matrix::from_columns(field, sq.dim(), &cols)
    };
    let s2 = h.antipode().mul(h.antipode());
    let cols: Vec<Vector> = (0..d * n)
        .map(|x| {
            let (r, k) = (x / n, x % n);
            let mut w = v.zero();
            for i in 0..n {
                let inner = dm.dual_action[i].mul_vec(&v.basis_vector(r));
                vector::axpy(&mut w, &field.one(), &act(&dm.h_action, &s2.column(i)).mul_vec(&inner));
            }
            total.mul(&vector::tensor(v.unit(), &h.s(&hb[k])), &t_of(&w))
        })
        .collect();
    let antipode = Matrix::from_columns(field, d * n, &cols);
    let bialgebroid = LeftBialgebroid::new(total, v.clone(), source, target, coproduct, counit)?;
    Ok(HopfAlgebroid::new(bialgebroid, antipode))
}

/// The Hopf algebroid structure on `T^op` of a Hopf-Galois extension, in both
/// presentations.
#[derive(Clone, Debug)]
pub struct TopHopfAlgebroid {
    /// Lu's construction on `R ⋊ H^op`.
    pub smash: HopfAlgebroid,
    /// The antipode `τ(r ⋊ h) = (1 ⋊ S̄h)(r₀ ◁ S̄²r₁)₀ ⋊ (r₀ ◁ S̄²r₁)₁`.
    pub closed_form: Matrix,
    /// `β|_T` with the displayed bialgebroid on `R ⋊ H^op`.
    pub iso: SmashIso,
    /// `T^op` with the antipode pulled back along `β`.
    pub pulled_back: HopfAlgebroid,
    pub checks: Verification,
}

/// Lu's theorem applied to `V = R`, `H' = H^op`, compared with the closed
/// form of the antipode and transported to `T^op`.
pub fn hgalois_top_hopf_algebroid(hg: &HopfGalois, t: &BCentralBialgebroid) -> Result<TopHopfAlgebroid, HopfError> {
    let dm = hg.double_module();
    let smash = lu_theorem_hopf_algebroid(&dm)?;
    let iso = iso_top_to_smash(hg, t)?;
    let hop = &hg.hopf_op;
    let field = hop.field();
    let n = hop.dim();
    let base = smash.bialgebroid.base().clone();
    let d = base.dim();
    let total = smash.bialgebroid.total();
    let sbar = hop.antipode();
    let sbar2 = sbar.mul(sbar);
    let mu = &dm.h_action;

    let cols: Vec<Vector> = (0..d * n)
        .map(|x| {
            let (r, k) = (x / n, x % n);
            let mut w = base.zero();
            let rho = hg.coaction_on_r(&base.basis_vector(r));
            for (idx, c) in rho.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let (r0, g) = (idx / n, idx % n);
                vector::axpy(&mut w, c, &act(mu, &sbar2.column(g)).mul_vec(&base.basis_vector(r0)));
            }
            total.mul(&vector::tensor(base.unit(), &sbar.column(k)), &hg.coaction_on_r(&w))
        })
        .collect();
    let closed_form = Matrix::from_columns(field, d * n, &cols);

    let mut checks = Verification::new();
    checks.check("closed-form antipode equals Lu's antipode", closed_form == smash.antipode, "");
    let (lu, shown) = (&smash.bialgebroid, &iso.smash);
    checks.check("same smash product", **lu.total() == **shown.total(), "");
    checks.check("same source", lu.source() == shown.source(), "");
    checks.check("t̃(r) = Σ (p_i·r) ⋊ h_i = r₀ ⋊ r₁", lu.target() == shown.target(), "");
    checks.check("same coproduct", lu.coproduct() == shown.coproduct(), "");
    checks.check("same counit", lu.counit() == shown.counit(), "");

    let inv = iso.matrix.inverse().ok_or_else(|| HopfError::Invalid("β|_T is not invertible".into()))?;
    let pulled = inv.mul(&smash.antipode).mul(&iso.matrix);
    let pulled_back = HopfAlgebroid::new(t.bialgebroid.to_left_opposite(), pulled);
    Ok(TopHopfAlgebroid { smash, closed_form, iso, pulled_back, checks })
}
