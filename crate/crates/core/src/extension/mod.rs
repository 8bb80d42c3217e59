//! Ring extensions `B ⊆ A`: depth-two quasibases, separability, split maps,
//! Frobenius systems, H-separability systems and module-theoretic checks.

pub mod sweep;

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{bimodule_hom_space, commutant_maps, FinDimAlgebra, HomKind, RelativeTensorSquare, Subalgebra};
use crate::linalg::{solve, sparse_from_dense, vector, CoordinateMap, Echelon, Field, Matrix, Scalar, Subspace, Vector};

pub use sweep::SweepConfig;

/// Result of a search that can prove absence, or give up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    /// The defining linear system is inconsistent (or a dimension count rules it out).
    NoneExists,
    /// A bounded sweep was exhausted without a hit.
    Inconclusive,
}

impl<T> SearchOutcome<T> {
    pub fn found(&self) -> Option<&T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn into_found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            SearchOutcome::Found(_) => "found",
            SearchOutcome::NoneExists => "none",
            SearchOutcome::Inconclusive => "inconclusive",
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> SearchOutcome<U> {
        match self {
            SearchOutcome::Found(t) => SearchOutcome::Found(f(t)),
            SearchOutcome::NoneExists => SearchOutcome::NoneExists,
            SearchOutcome::Inconclusive => SearchOutcome::Inconclusive,
        }
    }
}

impl<T> From<Option<T>> for SearchOutcome<T> {
    fn from(o: Option<T>) -> Self {
        o.map_or(SearchOutcome::NoneExists, SearchOutcome::Found)
    }
}

/// A subalgebra `B ⊆ A` together with `R = C_A(B)`, `A ⊗_B A`,
/// `T = (A ⊗_B A)^B` and `S = End_{B-B}(A)`, all computed up front.
#[derive(Clone, Debug)]
pub struct RingExtension {
    base: Subalgebra,
    centralizer: Subalgebra,
    rts: RelativeTensorSquare,
    t_basis: Vec<Vector>,
    s_basis: Vec<Matrix>,
}

impl RingExtension {
    pub fn new(base: Subalgebra) -> Self {
        let centralizer = base.centralizer();
        let rts = RelativeTensorSquare::new(&base);
        let t_basis = rts.b_central_elements();
        let s_basis = bimodule_hom_space(base.ambient(), &base, HomKind::Bimodule);
        RingExtension { base, centralizer, rts, t_basis, s_basis }
    }

    pub fn algebra(&self) -> &FinDimAlgebra {
        self.base.ambient()
    }

    pub fn algebra_arc(&self) -> &Arc<FinDimAlgebra> {
        self.base.ambient_arc()
    }

    pub fn field(&self) -> Field {
        self.algebra().field()
    }

    pub fn base(&self) -> &Subalgebra {
        &self.base
    }

    /// `R = C_A(B)`.
    pub fn centralizer(&self) -> &Subalgebra {
        &self.centralizer
    }

    pub fn tensor_square(&self) -> &RelativeTensorSquare {
        &self.rts
    }

    /// Basis of `T` in quotient coordinates of `A ⊗_B A`.
    pub fn t_basis(&self) -> &[Vector] {
        &self.t_basis
    }

    /// Basis of `S` as matrices on `A`.
    pub fn s_basis(&self) -> &[Matrix] {
        &self.s_basis
    }

    fn basis_elements(&self) -> Vec<Vector> {
        (0..self.algebra().dim()).map(|i| self.algebra().basis_vector(i)).collect()
    }

    /// Matrix (`dim A⊗_BA × dim A`) of `x ↦ t·x = t¹ ⊗ t²x`.
    fn t_times(&self, t: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = self.basis_elements().iter().map(|x| self.rts.right_mul(t, x)).collect();
        Matrix::from_columns(self.field(), self.rts.dim(), &cols)
    }

    /// Matrix of `x ↦ x·u = xu¹ ⊗ u²`.
    fn times_u(&self, u: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = self.basis_elements().iter().map(|x| self.rts.left_mul(x, u)).collect();
        Matrix::from_columns(self.field(), self.rts.dim(), &cols)
    }

    /// Left D2 quasibasis: `a ⊗ a' = Σ t_i β_i(a) a'`.
    ///
    /// Both sides are right `A`-linear in `a'`, so it suffices to express the
    /// map `a ↦ a ⊗ 1` in the span of the maps `a ↦ t·α(a)`.
    pub fn left_d2_quasibasis(&self) -> SearchOutcome<QuasiBasis> {
        let a = self.algebra();
        let target = flatten_cols(&Matrix::from_columns(
            self.field(),
            self.rts.dim(),
            &self.basis_elements().iter().map(|x| self.rts.pure(x, a.unit())).collect::<Vec<_>>(),
        ));
        let ns = self.s_basis.len();
        let blocks = self.t_basis.iter().enumerate().map(|(j, t)| {
            let p = self.t_times(t);
            self.s_basis.iter().enumerate().map(|(k, s)| (j * ns + k, flatten_cols(&p.mul(s)))).collect::<Vec<_>>()
        });
        let Some(coeffs) = expand_in_span(self.field(), target.len(), &target, blocks) else {
            return SearchOutcome::NoneExists;
        };
        SearchOutcome::Found(self.assemble(Side::Left, coeffs))
    }

    /// Right D2 quasibasis: `a ⊗ a' = Σ a γ_j(a') u_j`.
    pub fn right_d2_quasibasis(&self) -> SearchOutcome<QuasiBasis> {
        let a = self.algebra();
        let target = flatten_cols(&Matrix::from_columns(
            self.field(),
            self.rts.dim(),
            &self.basis_elements().iter().map(|x| self.rts.pure(a.unit(), x)).collect::<Vec<_>>(),
        ));
        let ns = self.s_basis.len();
        let blocks = self.t_basis.iter().enumerate().map(|(j, u)| {
            let p = self.times_u(u);
            self.s_basis.iter().enumerate().map(|(k, s)| (j * ns + k, flatten_cols(&p.mul(s)))).collect::<Vec<_>>()
        });
        let Some(coeffs) = expand_in_span(self.field(), target.len(), &target, blocks) else {
            return SearchOutcome::NoneExists;
        };
        SearchOutcome::Found(self.assemble(Side::Right, coeffs))
    }

    fn assemble(&self, side: Side, coeffs: Vec<(usize, Scalar)>) -> QuasiBasis {
        let ns = self.s_basis.len();
        let mut tensors = Vec::new();
        let mut maps: Vec<Matrix> = Vec::new();
        for (key, c) in coeffs {
            let (j, k) = (key / ns, key % ns);
            let t = &self.t_basis[j];
            let term = self.s_basis[k].scale(&c);
            match tensors.iter().position(|x| x == t) {
                Some(p) => maps[p] = maps[p].add(&term),
                None => {
                    tensors.push(t.clone());
                    maps.push(term);
                }
            }
        }
        let keep: Vec<usize> = (0..tensors.len()).filter(|&i| !maps[i].is_zero()).collect();
        QuasiBasis {
            side,
            tensors: keep.iter().map(|&i| tensors[i].clone()).collect(),
            maps: keep.iter().map(|&i| maps[i].clone()).collect(),
        }
    }

    /// Dual basis `(x_i, f_i)` of `A_B`, `f_i ∈ Hom(A_B, B_B)`, with
    /// `Σ x_i f_i(a) = a`; `None` when `A_B` is not finitely generated projective.
    pub fn right_dual_basis(&self) -> Option<DualBasis> {
        let a = self.algebra();
        let fs = bimodule_hom_space(a, &self.base, HomKind::RightToBase);
        let target = flatten_cols(&Matrix::identity(self.field(), a.dim()));
        let nf = fs.len();
        let blocks = self.basis_elements().into_iter().enumerate().map(|(i, x)| {
            let l = a.left_mul_matrix(&x);
            fs.iter().enumerate().map(|(j, f)| (i * nf + j, flatten_cols(&l.mul(f)))).collect::<Vec<_>>()
        });
        let coeffs = expand_in_span(self.field(), target.len(), &target, blocks)?;
        let mut elements: Vec<Vector> = Vec::new();
        let mut functionals: Vec<Matrix> = Vec::new();
        for (key, c) in coeffs {
            let (i, j) = (key / nf, key % nf);
            let x = a.basis_vector(i);
            let term = fs[j].scale(&c);
            match elements.iter().position(|e| *e == x) {
                Some(p) => functionals[p] = functionals[p].add(&term),
                None => {
                    elements.push(x);
                    functionals.push(term);
                }
            }
        }
        Some(DualBasis { elements, functionals })
    }

    pub fn module_properties(&self) -> ModuleProperties {
        let a = self.algebra();
        let field = self.field();
        let dual = self.right_dual_basis();
        let fg_projective_right = match &dual {
            Some(d) => Check::yes(format!("dual basis with {} elements", d.elements.len())),
            None => Check::no("identity not in the span of a·f(−)".to_string()),
        };

        let fs = bimodule_hom_space(a, &self.base, HomKind::RightToBase);
        let trace = Subspace::span(field, a.dim(), fs.iter().flat_map(|f| f.columns()));
        let generator_right = if trace.dim() == self.base.dim() {
            Check::yes(format!("trace ideal has dimension {}", trace.dim()))
        } else {
            Check::no(format!("trace ideal has dimension {} < {}", trace.dim(), self.base.dim()))
        };

        let ends = bimodule_hom_space(a, &self.base, HomKind::RightModule);
        let pairs: Vec<(Matrix, Matrix)> = ends.iter().map(|m| (m.clone(), m.clone())).collect();
        let commutant = commutant_maps(field, a.dim(), a.dim(), &pairs, None);
        let balanced_right = if commutant.len() == self.base.dim() {
            Check::yes(format!("commutant of End(A_B) has dimension {}", commutant.len()))
        } else {
            Check::no(format!("commutant of End(A_B) has dimension {} ≠ {}", commutant.len(), self.base.dim()))
        };

        let products = Subspace::span(
            field,
            a.dim(),
            self.base
                .basis()
                .iter()
                .flat_map(|b| self.centralizer.basis().iter().map(move |r| (b, r)))
                .map(|(b, r)| a.mul(b, r)),
        );
        let procesi = if products.dim() == a.dim() {
            Check::yes(format!("BR has dimension {}", products.dim()))
        } else {
            Check::no(format!("BR has dimension {} < {}", products.dim(), a.dim()))
        };

        let cc = self.centralizer.centralizer();
        let double_centralizer = if cc.same_as(&self.base) {
            Check::yes(format!("C_A(C_A(B)) has dimension {}", cc.dim()))
        } else {
            Check::no(format!("C_A(C_A(B)) has dimension {} ≠ {}", cc.dim(), self.base.dim()))
        };
        ModuleProperties { fg_projective_right, generator_right, balanced_right, procesi, double_centralizer }
    }

    /// Casimir element `e` with `e¹e² = 1`.
    pub fn separability_element(&self) -> SearchOutcome<Vector> {
        let cas = self.rts.casimir_elements();
        let images: Vec<Vector> = cas.iter().map(|c| self.rts.multiply(c)).collect();
        let m = Matrix::from_columns(self.field(), self.algebra().dim(), &images);
        match solve(&m, self.algebra().unit()).expect("dimensions agree") {
            Some(sol) => SearchOutcome::Found(combine(self.field(), self.rts.dim(), &sol.particular, &cas)),
            None => SearchOutcome::NoneExists,
        }
    }

    /// `E ∈ Hom_{B-B}(A, B)` with `E(1) = 1`. When possible the returned map
    /// also satisfies `E(ra) = E(ar)` for `r ∈ R` (the normalized trace for
    /// `M_n/k`, the coset projection for group algebras).
    pub fn split_map(&self) -> SearchOutcome<Matrix> {
        let a = self.algebra();
        let field = self.field();
        let homs = bimodule_hom_space(a, &self.base, HomKind::BimoduleToBase);
        let images: Vec<Vector> = homs.iter().map(|h| h.mul_vec(a.unit())).collect();
        let unital = Matrix::from_columns(field, a.dim(), &images);

        let mut rows: Vec<Vector> = (0..a.dim()).map(|i| unital.row(i).to_vec()).collect();
        let mut rhs = a.unit().to_vec();
        for r in self.centralizer.basis() {
            let comm = a.left_mul_matrix(r).sub(&a.right_mul_matrix(r));
            let cols: Vec<Matrix> = homs.iter().map(|h| h.mul(&comm)).collect();
            for i in 0..a.dim() {
                for j in 0..a.dim() {
                    rows.push(cols.iter().map(|m| m.get(i, j).clone()).collect());
                    rhs.push(field.zero());
                }
            }
        }
        let symmetric = Matrix::from_rows(field, rows).expect("rectangular");
        let sol = match solve(&symmetric, &rhs).expect("dimensions agree") {
            Some(sol) => Some(sol),
            None => solve(&unital, a.unit()).expect("dimensions agree"),
        };
        match sol {
            Some(sol) => SearchOutcome::Found(combine_maps(field, a.dim(), &sol.particular, &homs)),
            None => SearchOutcome::NoneExists,
        }
    }

    /// Searches for a Frobenius system. Candidates for `E` are the hints (when
    /// they are `B`-bimodule maps into `B`) followed by a bounded sweep over
    /// integer combinations of a basis of `Hom_{B-B}(A, B)`.
    pub fn frobenius_system(&self, config: &SweepConfig, hints: &[Matrix]) -> SearchOutcome<FrobeniusSystem> {
        let a = self.algebra();
        let field = self.field();
        let n = a.dim();
        let homs = bimodule_hom_space(a, &self.base, HomKind::BimoduleToBase);
        let fs = bimodule_hom_space(a, &self.base, HomKind::RightToBase);
        if homs.is_empty() || fs.len() != n {
            return SearchOutcome::NoneExists;
        }
        let Some(dual) = self.right_dual_basis() else {
            return SearchOutcome::NoneExists;
        };
        let hom_flat: Vec<Vector> = homs.iter().map(flatten_rows).collect();
        let hom_space = CoordinateMap::new(field, n * n, &hom_flat).expect("independent basis");
        let f_flat: Vec<Vector> = fs.iter().map(flatten_rows).collect();
        let f_coords = CoordinateMap::new(field, n * n, &f_flat).expect("independent basis");
        let lefts: Vec<Matrix> = self.basis_elements().iter().map(|x| a.left_mul_matrix(x)).collect();

        let try_candidate = |e: &Matrix| -> Option<FrobeniusSystem> {
            // Ψ(a) = E(a ·) expressed in the basis of Hom(A_B, B_B)
            let cols: Vec<Vector> =
                lefts.iter().map(|l| f_coords.coords(&flatten_rows(&e.mul(l))).expect("right B-linear")).collect();
            let psi = Matrix::from_columns(field, n, &cols);
            let inv = psi.inverse()?;
            let y: Vec<Vector> = dual
                .functionals
                .iter()
                .map(|f| {
                    let c = inv.mul_vec(&f_coords.coords(&flatten_rows(f)).expect("dual functional"));
                    c
                })
                .collect();
            let sys = FrobeniusSystem { e_map: e.clone(), x: dual.elements.clone(), y };
            sys.verify(a).is_ok().then_some(sys)
        };

        for h in hints {
            if h.rows() == n && h.cols() == n && hom_space.contains(&flatten_rows(h)) {
                if let Some(sys) = try_candidate(h) {
                    return SearchOutcome::Found(sys);
                }
            }
        }
        for coeffs in sweep::candidates(homs.len(), config) {
            let c: Vector = coeffs.iter().map(|&v| field.from_i64(v)).collect();
            let e = combine_maps(field, n, &c, &homs);
            if let Some(sys) = try_candidate(&e) {
                return SearchOutcome::Found(sys);
            }
        }
        SearchOutcome::Inconclusive
    }

    /// H-separability system `1 ⊗ 1 = Σ r_i e_i`.
    pub fn h_separability_system(&self) -> SearchOutcome<HSeparabilitySystem> {
        let cas = self.rts.casimir_elements();
        let rs = self.centralizer.basis();
        let nr = rs.len();
        let target = self.rts.one_one();
        let blocks = cas.iter().enumerate().map(|(k, e)| {
            rs.iter().enumerate().map(|(j, r)| (k * nr + j, self.rts.left_mul(r, e))).collect::<Vec<_>>()
        });
        let Some(coeffs) = expand_in_span(self.field(), target.len(), &target, blocks) else {
            return SearchOutcome::NoneExists;
        };
        let mut casimir: Vec<Vector> = Vec::new();
        let mut coefficients: Vec<Vector> = Vec::new();
        for (key, c) in coeffs {
            let (k, j) = (key / nr, key % nr);
            let r = vector::scale(&c, &rs[j]);
            match casimir.iter().position(|e| *e == cas[k]) {
                Some(p) => coefficients[p] = vector::add(&coefficients[p], &r),
                None => {
                    casimir.push(cas[k].clone());
                    coefficients.push(r);
                }
            }
        }
        SearchOutcome::Found(HSeparabilitySystem { casimir, coefficients })
    }
}

/// Which D2 identity a quasibasis satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// Pairs `(t_i, β_i)` (left) or `(u_j, γ_j)` (right), tensors in quotient
/// coordinates of `A ⊗_B A` and maps as matrices on `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiBasis {
    pub side: Side,
    pub tensors: Vec<Vector>,
    pub maps: Vec<Matrix>,
}

impl QuasiBasis {
    pub fn len(&self) -> usize {
        self.tensors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tensors.is_empty()
    }

    /// Checks the defining identity on every pair of basis elements; returns
    /// the first offending pair.
    pub fn verify(&self, ext: &RingExtension) -> Result<(), (usize, usize)> {
        let a = ext.algebra();
        let rts = ext.tensor_square();
        let n = a.dim();
        for i in 0..n {
            let x = a.basis_vector(i);
            for j in 0..n {
                let y = a.basis_vector(j);
                let mut rhs = vector::zeros(ext.field(), rts.dim());
                for (t, m) in self.tensors.iter().zip(&self.maps) {
                    let term = match self.side {
                        Side::Left => rts.right_mul(t, &a.mul(&m.mul_vec(&x), &y)),
                        Side::Right => rts.left_mul(&a.mul(&x, &m.mul_vec(&y)), t),
                    };
                    rhs = vector::add(&rhs, &term);
                }
                if rhs != rts.pure(&x, &y) {
                    return Err((i, j));
                }
            }
        }
        Ok(())
    }

    /// The quasibases carried by an H-separability system: `(e_i, ρ_{r_i})` on
    /// the left and `(e_i, λ_{r_i})` on the right.
    pub fn from_h_separability(ext: &RingExtension, sys: &HSeparabilitySystem) -> (QuasiBasis, QuasiBasis) {
        let a = ext.algebra();
        let left = QuasiBasis {
            side: Side::Left,
            tensors: sys.casimir.clone(),
            maps: sys.coefficients.iter().map(|r| a.right_mul_matrix(r)).collect(),
        };
        let right = QuasiBasis {
            side: Side::Right,
            tensors: sys.casimir.clone(),
            maps: sys.coefficients.iter().map(|r| a.left_mul_matrix(r)).collect(),
        };
        (left, right)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualBasis {
    pub elements: Vec<Vector>,
    pub functionals: Vec<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub holds: bool,
    pub witness: String,
}

impl Check {
    fn yes(witness: String) -> Self {
        Check { holds: true, witness }
    }

    fn no(witness: String) -> Self {
        Check { holds: false, witness }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleProperties {
    pub fg_projective_right: Check,
    pub generator_right: Check,
    pub balanced_right: Check,
    pub procesi: Check,
    pub double_centralizer: Check,
}

/// `E: A → B` with dual bases satisfying `a = Σ x_i E(y_i a) = Σ E(a x_i) y_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusSystem {
    pub e_map: Matrix,
    pub x: Vec<Vector>,
    pub y: Vec<Vector>,
}

impl FrobeniusSystem {
    /// Checks both dual-basis identities on every basis element.
    pub fn verify(&self, a: &FinDimAlgebra) -> Result<(), usize> {
        for i in 0..a.dim() {
            let e = a.basis_vector(i);
            let mut left = a.zero();
            let mut right = a.zero();
            for (x, y) in self.x.iter().zip(&self.y) {
                left = vector::add(&left, &a.mul(x, &self.e_map.mul_vec(&a.mul(y, &e))));
                right = vector::add(&right, &a.mul(&self.e_map.mul_vec(&a.mul(&e, x)), y));
            }
            if left != e || right != e {
                return Err(i);
            }
        }
        Ok(())
    }
}

/// Pairs `(e_i, r_i)`, `e_i` Casimir in quotient coordinates and `r_i ∈ R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HSeparabilitySystem {
    pub casimir: Vec<Vector>,
    pub coefficients: Vec<Vector>,
}

impl HSeparabilitySystem {
    pub fn verify(&self, ext: &RingExtension) -> bool {
        let rts = ext.tensor_square();
        let mut sum = vector::zeros(ext.field(), rts.dim());
        for (e, r) in self.casimir.iter().zip(&self.coefficients) {
            sum = vector::add(&sum, &rts.left_mul(r, e));
        }
        sum == rts.one_one()
            && self.coefficients.iter().all(|r| ext.centralizer().contains(r))
            && {
                let cas = Subspace::span(ext.field(), rts.dim(), rts.casimir_elements());
                self.casimir.iter().all(|e| cas.contains(e))
            }
    }
}

/// Column-major flattening: entry `(r, c)` at `c * rows + r`.
pub(crate) fn flatten_cols(m: &Matrix) -> Vector {
    (0..m.cols()).flat_map(|c| m.column(c)).collect()
}

/// Row-major flattening.
pub(crate) fn flatten_rows(m: &Matrix) -> Vector {
    (0..m.rows()).flat_map(|r| m.row(r).to_vec()).collect()
}

pub(crate) fn combine(field: Field, len: usize, coeffs: &[Scalar], vs: &[Vector]) -> Vector {
    let mut out = vector::zeros(field, len);
    for (c, v) in coeffs.iter().zip(vs) {
        vector::axpy(&mut out, c, v);
    }
    out
}

pub(crate) fn combine_maps(field: Field, n: usize, coeffs: &[Scalar], ms: &[Matrix]) -> Matrix {
    let mut out = Matrix::zeros(field, n, n);
    for (c, m) in coeffs.iter().zip(ms) {
        if !c.is_zero() {
            out = out.add(&m.scale(c));
        }
    }
    out
}

/// Writes `target` as a combination of generated vectors. Generators arrive in
/// blocks; generation stops after the first block whose span contains the
/// target. Returns `(key, coefficient)` pairs with nonzero coefficients.
pub(crate) fn expand_in_span(
    field: Field,
    len: usize,
    target: &[Scalar],
    blocks: impl Iterator<Item = Vec<(usize, Vector)>>,
) -> Option<Vec<(usize, Scalar)>> {
    let mut e = Echelon::new(field, len);
    let mut selected: Vec<(usize, Vector)> = Vec::new();
    let mut reached = vector::is_zero(target);
    if !reached {
        for block in blocks {
            for (key, g) in block {
                if e.insert(sparse_from_dense(&g)) {
                    selected.push((key, g));
                }
            }
            if e.contains(target) {
                reached = true;
                break;
            }
        }
    }
    if !reached {
        return None;
    }
    if selected.is_empty() {
        return Some(Vec::new());
    }
    let cols: Vec<Vector> = selected.iter().map(|(_, g)| g.clone()).collect();
    let m = Matrix::from_columns(field, len, &cols);
    let sol = solve(&m, target).expect("dimensions agree")?;
    Some(
        selected
            .iter()
            .zip(sol.particular)
            .filter(|(_, c)| !c.is_zero())
            .map(|((k, _), c)| (*k, c))
            .collect(),
    )
}
