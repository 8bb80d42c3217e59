//! Lu's bialgebroid `End_k C`, the enveloping Hopf algebroid `C ⊗ C^op`, and
//! tensor products of Hopf algebroids.

use std::sync::Arc;

use super::{BialgebroidError, HopfAlgebroid, LeftBialgebroid};
use crate::algebra::{FinDimAlgebra, TensorProduct};
use crate::linalg::{solve, vector, Matrix, Vector};

/// `End_k C` over `C`: source `λ`, target `ρ`, `ε(f) = f(1)` and `Δ` the
/// unique element with `Δ(f)(c ⊗ c') = f(cc')` under `f ⊗ g ↦ (c ⊗ c' ↦
/// f(c)g(c'))`. The basis is the matrix units `e_ij` at index `i·n + j`.
pub fn lu_endo_bialgebroid(c: &Arc<FinDimAlgebra>) -> Result<LeftBialgebroid, BialgebroidError> {
    let field = c.field();
    let n = c.dim();
    let total = Arc::new(FinDimAlgebra::matrix_algebra(field, n));
    let flat = |m: &Matrix| -> Vector { (0..n).flat_map(|r| m.row(r).to_vec()).collect() };
    let cb: Vec<Vector> = (0..n).map(|i| c.basis_vector(i)).collect();
    let source = Matrix::from_columns(field, n * n, &cb.iter().map(|x| flat(&c.left_mul_matrix(x))).collect::<Vec<_>>());
    let target = Matrix::from_columns(field, n * n, &cb.iter().map(|x| flat(&c.right_mul_matrix(x))).collect::<Vec<_>>());
    // ε(e_ij) = e_ij(1) = 1_j e_i
    let counit = Matrix::from_fn(field, n, n * n, |k, ij| if ij / n == k { c.unit()[ij % n].clone() } else { field.zero() });
    let coproduct = |sq: &TensorProduct| -> Matrix {
        // Θ(e_ij ⊗ e_kl)(c_a, c_b) = δ_ja δ_lb e_i e_k
        let theta = Matrix::from_columns(
            field,
            n * n * n,
            &(0..sq.dim())
                .map(|q| {
                    let (x, y) = sq.legs(q);
                    let (i, j, k, l) = (x / n, x % n, y / n, y % n);
                    let mut out = vector::zeros(field, n * n * n);
                    let prod = c.mul(&cb[i], &cb[k]);
                    for (m, v) in prod.into_iter().enumerate() {
                        out[(j * n + l) * n + m] = v;
                    }
                    out
                })
                .collect::<Vec<_>>(),
        );
        let cols: Vec<Vector> = (0..n * n)
            .map(|ij| {
                let (i, j) = (ij / n, ij % n);
                let mut rhs = vector::zeros(field, n * n * n);
                for a in 0..n {
                    for b in 0..n {
                        let ab = c.mul(&cb[a], &cb[b]);
                        // e_ij(ab) = (ab)_j e_i
                        rhs[(a * n + b) * n + i] = ab[j].clone();
                    }
                }
                solve(&theta, &rhs)
                    .expect("dimensions agree")
                    .expect("f(cc') lies in the image of End C ⊗_C End C")
                    .particular
            })
            .collect();
        Matrix::from_columns(field, sq.dim(), &cols)
    };
    LeftBialgebroid::new(total, c.clone(), source, target, coproduct, counit)
}

/// `C ⊗ C^op` over `C` with `s(c) = c ⊗ 1`, `t(c') = 1 ⊗ c'`, `Δ(c ⊗ c') =
/// (c ⊗ 1) ⊗ (1 ⊗ c')` and `ε(c ⊗ c') = cc'`.
pub fn lu_enveloping_bialgebroid(c: &Arc<FinDimAlgebra>) -> Result<LeftBialgebroid, BialgebroidError> {
    let field = c.field();
    let n = c.dim();
    let total = Arc::new(c.tensor(&c.opposite())?);
    let cb: Vec<Vector> = (0..n).map(|i| c.basis_vector(i)).collect();
    let one = c.unit();
    let source = Matrix::from_columns(field, n * n, &cb.iter().map(|x| vector::tensor(x, one)).collect::<Vec<_>>());
    let target = Matrix::from_columns(field, n * n, &cb.iter().map(|x| vector::tensor(one, x)).collect::<Vec<_>>());
    let counit = Matrix::from_columns(
        field,
        n,
        &(0..n * n).map(|ij| c.mul(&cb[ij / n], &cb[ij % n])).collect::<Vec<_>>(),
    );
    let coproduct = |sq: &TensorProduct| -> Matrix {
        let cols: Vec<Vector> =
            (0..n * n).map(|ij| sq.pure(&vector::tensor(&cb[ij / n], one), &vector::tensor(one, &cb[ij % n]))).collect();
        Matrix::from_columns(field, sq.dim(), &cols)
    };
    LeftBialgebroid::new(total, c.clone(), source, target, coproduct, counit)
}

/// The enveloping bialgebroid with the twist antipode `c ⊗ c' ↦ c' ⊗ c`. The
/// section for the third axiom is the complement spanned by
/// `(c ⊗ c') ⊗ (1 ⊗ c'')`.
pub fn lu_enveloping_hopf_algebroid(c: &Arc<FinDimAlgebra>) -> Result<HopfAlgebroid, BialgebroidError> {
    let field = c.field();
    let n = c.dim();
    let cb: Vec<Vector> = (0..n).map(|i| c.basis_vector(i)).collect();
    let one = c.unit();
    let bialgebroid = lu_enveloping_bialgebroid(c)?;
    let antipode = Matrix::from_fn(field, n * n, n * n, |r, col| {
        if r == (col % n) * n + col / n {
            field.one()
        } else {
            field.zero()
        }
    });
    let mut complement = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for b in 0..n {
            for d in 0..n {
                complement.push(vector::tensor(&vector::tensor(&cb[a], &cb[b]), &vector::tensor(one, &cb[d])));
            }
        }
    }
    Ok(HopfAlgebroid::new(bialgebroid, antipode).with_section(complement))
}

/// Lifts of the quotient basis of `H ⊗_R H` under the algebroid's section.
fn section_lifts(h: &HopfAlgebroid) -> Result<Vec<Vector>, BialgebroidError> {
    let sq = h.bialgebroid.square();
    let tensor = match &h.section {
        Some(w) => sq.clone().with_complement(w)?,
        None => sq.with_canonical_section(),
    };
    let field = h.bialgebroid.field();
    Ok((0..tensor.dim()).map(|i| tensor.lift(&vector::unit(field, tensor.dim(), i))).collect())
}

/// The tensor product Hopf algebroid over `R₁ ⊗ R₂`; the coproduct is
/// `(1 ⊗ σ ⊗ 1)(Δ₁ ⊗ Δ₂)` and the section is the tensor of the factors'
/// sections. Both inputs must verify.
pub fn tensor_hopf_algebroid(h1: &HopfAlgebroid, h2: &HopfAlgebroid) -> Result<HopfAlgebroid, BialgebroidError> {
    for (k, h) in [h1, h2].iter().enumerate() {
        let v = h.verify();
        let failure = v.failures().next().map(|f| format!("factor {}: {} ({})", k + 1, f.name, f.witness));
        if let Some(msg) = failure {
            return Err(BialgebroidError::Unverified(msg));
        }
    }
    let (b1, b2) = (&h1.bialgebroid, &h2.bialgebroid);
    if b1.field() != b2.field() {
        return Err(crate::algebra::AlgebraError::FieldMismatch.into());
    }
    let field = b1.field();
    let total = Arc::new(b1.total().tensor(b2.total())?);
    let base = Arc::new(b1.base().tensor(b2.base())?);
    let (n1, n2) = (b1.dim(), b2.dim());
    let coproduct = |sq: &TensorProduct| -> Matrix {
        let cols: Vec<Vector> = (0..n1 * n2)
            .map(|ij| {
                let (i, j) = (ij / n2, ij % n2);
                let d1 = b1.coproduct().column(i);
                let d2 = b2.coproduct().column(j);
                let mut acc = vector::zeros(field, sq.dim());
                for (x, y, c) in b1.square().terms(&d1) {
                    for (x2, y2, c2) in b2.square().terms(&d2) {
                        let left = vector::unit(field, n1 * n2, x * n2 + x2);
                        let right = vector::unit(field, n1 * n2, y * n2 + y2);
                        vector::axpy(&mut acc, &(c * c2), &sq.pure(&left, &right));
                    }
                }
                acc
            })
            .collect();
        Matrix::from_columns(field, sq.dim(), &cols)
    };
    let bialgebroid = LeftBialgebroid::new(
        total,
        base,
        b1.source().kron(b2.source()),
        b1.target().kron(b2.target()),
        coproduct,
        b1.counit().kron(b2.counit()),
    )?;
    let (w1, w2) = (section_lifts(h1)?, section_lifts(h2)?);
    let big = n1 * n2;
    let mut complement = Vec::with_capacity(w1.len() * w2.len());
    for u in &w1 {
        for w in &w2 {
            let mut out = vector::zeros(field, big * big);
            for (p, cu) in u.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let (x, y) = (p / n1, p % n1);
                for (p2, cw) in w.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    let (x2, y2) = (p2 / n2, p2 % n2);
                    out[(x * n2 + x2) * big + y * n2 + y2] = cu * cw;
                }
            }
            complement.push(out);
        }
    }
    Ok(HopfAlgebroid::new(bialgebroid, h1.antipode.kron(&h2.antipode)).with_section(complement))
}
