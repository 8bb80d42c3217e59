//! Properties of a depth two extension read off from its `S`- and
//! `T`-corings, with each implication executed constructively where possible.

use serde::Serialize;

use super::{Coring, FrobeniusStructure};
use crate::bialgebroid::{BCentralBialgebroid, EndomorphismBialgebroid};
use crate::extension::{RingExtension, SearchOutcome, SweepConfig};
use crate::linalg::{vector, Matrix, Scalar, Subspace, Vector};
use crate::verify::Verification;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "snake_case")]
pub enum ImplicationStatus {
    /// Premise held; the conclusion was constructed and re-verified.
    Verified,
    /// Premise held but the constructed object failed its identities.
    Failed(String),
    /// Premise does not hold; nothing to convert.
    PremiseFalse,
    /// A precondition of the implication is not met.
    NotApplicable(String),
    /// No construction is available; both sides were decided independently
    /// and compared.
    Consistent(bool),
}

#[derive(Clone, Debug, Serialize)]
pub struct Implication {
    pub name: String,
    pub preconditions: Vec<(String, bool)>,
    #[serde(flatten)]
    pub status: ImplicationStatus,
}

impl Implication {
    pub fn holds(&self) -> bool {
        !matches!(self.status, ImplicationStatus::Failed(_) | ImplicationStatus::Consistent(false))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CorrespondenceReport {
    pub separable: bool,
    pub split: bool,
    pub frobenius: &'static str,
    pub s_coseparable: bool,
    pub s_cosplit: bool,
    pub t_coseparable: bool,
    pub t_cosplit: bool,
    pub t_frobenius: &'static str,
    pub implications: Vec<Implication>,
}

impl CorrespondenceReport {
    pub fn get(&self, name: &str) -> Option<&Implication> {
        self.implications.iter().find(|i| i.name == name)
    }

    pub fn all_hold(&self) -> bool {
        self.implications.iter().all(Implication::holds)
    }
}

fn status_of(v: Verification) -> ImplicationStatus {
    match v.failures().next() {
        None => ImplicationStatus::Verified,
        Some(f) => ImplicationStatus::Failed(format!("{}: {}", f.name, f.witness)),
    }
}

fn searched<T>(r: Result<SearchOutcome<T>, super::CoringError>) -> SearchOutcome<T> {
    r.unwrap_or(SearchOutcome::Inconclusive)
}

/// Checks that `e ∈ A ⊗_B A` is a separability element.
fn check_separability(ext: &RingExtension, e: &[Scalar]) -> Verification {
    let a = ext.algebra();
    let rts = ext.tensor_square();
    let mut v = Verification::new();
    let cas = Subspace::span(ext.field(), rts.dim(), rts.casimir_elements());
    v.check("Casimir", cas.contains(e), "ae = ea");
    v.check("e¹e² = 1", rts.multiply(e) == *a.unit(), vector::format(&rts.multiply(e)));
    v
}

/// `γ(α ⊗ β) = α(e¹)β(e²)` on the `S`-coring.
fn s_cointegral_from(s: &EndomorphismBialgebroid, ext: &RingExtension, e: &[Scalar]) -> Matrix {
    let a = ext.algebra();
    let sq = s.bialgebroid.square();
    let tp = ext.tensor_square().tensor();
    let cols: Vec<Vector> = (0..sq.dim())
        .map(|i| {
            let (x, y) = sq.legs(i);
            let mut out = a.zero();
            for (p, q, c) in tp.terms(e) {
                let term = a.mul(&s.operators[x].mul_vec(&a.basis_vector(p)), &s.operators[y].mul_vec(&a.basis_vector(q)));
                vector::axpy(&mut out, c, &term);
            }
            s.centralizer.coords(&out).expect("α(e¹)β(e²) lies in R")
        })
        .collect();
    Matrix::from_columns(ext.field(), s.centralizer.dim(), &cols)
}

/// `e = Σ_i t_i γ(β_i ⊗ I_A)` for a cointegral of the `S`-coring.
fn separability_from(s: &EndomorphismBialgebroid, ext: &RingExtension, gamma: &Matrix) -> Option<Vector> {
    let left = ext.left_d2_quasibasis().into_found()?;
    let rts = ext.tensor_square();
    let id = s.coords_of(&Matrix::identity(ext.field(), ext.algebra().dim()))?;
    let mut e = vector::zeros(ext.field(), rts.dim());
    for (t, beta) in left.tensors.iter().zip(&left.maps) {
        let b = s.coords_of(beta)?;
        let r = s.centralizer.embed(&gamma.mul_vec(&s.bialgebroid.square().pure(&b, &id)));
        e = vector::add(&e, &rts.right_mul(t, &r));
    }
    Some(e)
}

/// `γ(t ⊗ t') = t¹E(t²t'¹)t'²` on the `T`-coring.
fn t_pairing_from(t: &BCentralBialgebroid, ext: &RingExtension, e_map: &Matrix) -> Matrix {
    let a = ext.algebra();
    let sq = t.bialgebroid.coring().square();
    let tp = ext.tensor_square().tensor();
    let cols: Vec<Vector> = (0..sq.dim())
        .map(|i| {
            let (x, y) = sq.legs(i);
            let mut out = a.zero();
            for (p, q, c) in tp.terms(&t.elements[x]) {
                for (p2, q2, d) in tp.terms(&t.elements[y]) {
                    let mid = e_map.mul_vec(&a.mul(&a.basis_vector(q), &a.basis_vector(p2)));
                    let term = a.mul(&a.mul(&a.basis_vector(p), &mid), &a.basis_vector(q2));
                    vector::axpy(&mut out, &(c * d), &term);
                }
            }
            ext.centralizer().coords(&out).expect("t¹E(t²t'¹)t'² lies in R")
        })
        .collect();
    Matrix::from_columns(ext.field(), ext.centralizer().dim(), &cols)
}

fn imp(name: &str, preconditions: Vec<(String, bool)>, status: ImplicationStatus) -> Implication {
    Implication { name: name.to_string(), preconditions, status }
}

/// Runs every extension ↔ coring implication for which a construction
/// exists, and compares independent decisions for the rest.
pub fn extension_coring_report(
    ext: &RingExtension,
    s: &EndomorphismBialgebroid,
    t: &BCentralBialgebroid,
    config: &SweepConfig,
) -> CorrespondenceReport {
    let s_coring: &Coring = s.bialgebroid.coring();
    let t_coring: &Coring = t.bialgebroid.coring();
    let props = ext.module_properties();
    let mut out = Vec::new();

    let sep = ext.separability_element().into_found();
    let split = ext.split_map().into_found();
    let frob = ext.frobenius_system(config, split.as_slice());
    let s_coint = searched(s_coring.cointegral()).into_found();
    let s_cosplit = searched(s_coring.cosplit_element()).into_found();
    let t_coint = searched(t_coring.cointegral()).into_found();
    let t_cosplit = searched(t_coring.cosplit_element()).into_found();
    let t_frob = searched(t_coring.frobenius_structure(config, &[]));

    // separable ⟹ S coseparable
    out.push(imp(
        "separable ⟹ S coseparable",
        vec![],
        match &sep {
            None => ImplicationStatus::PremiseFalse,
            Some(e) => status_of(s_coring.check_cointegral(&s_cointegral_from(s, ext, e))),
        },
    ));
    // S coseparable ⟹ separable
    let fgp = ("A_B f.g. projective".to_string(), props.fg_projective_right.holds);
    out.push(imp(
        "S coseparable ⟹ separable",
        vec![fgp.clone()],
        match &s_coint {
            None => ImplicationStatus::PremiseFalse,
            Some(_) if !fgp.1 => ImplicationStatus::NotApplicable("A_B is not f.g. projective".into()),
            Some(g) => match separability_from(s, ext, g) {
                Some(e) => status_of(check_separability(ext, &e)),
                None => ImplicationStatus::Failed("no left quasibasis".into()),
            },
        },
    ));
    // split ⟹ S cosplit
    out.push(imp(
        "split ⟹ S cosplit",
        vec![],
        match &split {
            None => ImplicationStatus::PremiseFalse,
            Some(e_map) => match s.coords_of(e_map) {
                Some(c) => status_of(s_coring.check_cosplit(&c)),
                None => ImplicationStatus::Failed("split map is not a B-B endomorphism".into()),
            },
        },
    ));
    // S cosplit ⟹ split, needs C_A(R) = B
    let dc = ("C_A(R) = B".to_string(), props.double_centralizer.holds);
    out.push(imp(
        "S cosplit ⟹ split",
        vec![dc.clone()],
        match &s_cosplit {
            None => ImplicationStatus::PremiseFalse,
            Some(_) if !dc.1 => ImplicationStatus::NotApplicable("C_A(R) ≠ B".into()),
            Some(c) => {
                let op = s.operator(c);
                let a = ext.algebra();
                let mut v = Verification::new();
                v.check("E(1) = 1", op.mul_vec(a.unit()) == *a.unit(), "");
                v.check("image in B", op.columns().iter().all(|col| ext.base().contains(col)), "");
                status_of(v)
            }
        },
    ));
    // separable ⟹ T cosplit
    out.push(imp(
        "separable ⟹ T cosplit",
        vec![],
        match &sep {
            None => ImplicationStatus::PremiseFalse,
            Some(e) => match t.coords_of(e) {
                Some(c) => status_of(t_coring.check_cosplit(&c)),
                None => ImplicationStatus::Failed("separability element is not B-central".into()),
            },
        },
    ));
    // split ⟹ T coseparable
    out.push(imp(
        "split ⟹ T coseparable",
        vec![],
        match &split {
            None => ImplicationStatus::PremiseFalse,
            Some(e_map) => status_of(t_coring.check_cointegral(&t_pairing_from(t, ext, e_map))),
        },
    ));
    // T cosplit ⟹ separable, needs BR = A
    let procesi = ("BR = A".to_string(), props.procesi.holds);
    out.push(imp(
        "T cosplit ⟹ separable",
        vec![procesi.clone()],
        match &t_cosplit {
            None => ImplicationStatus::PremiseFalse,
            Some(_) if !procesi.1 => ImplicationStatus::NotApplicable("BR ≠ A".into()),
            Some(c) => status_of(check_separability(ext, &t.element(c))),
        },
    ));
    // Frobenius ⟹ T Frobenius
    out.push(imp(
        "Frobenius ⟹ T Frobenius",
        vec![],
        match frob.found() {
            None => ImplicationStatus::PremiseFalse,
            Some(fs) => {
                let rts = ext.tensor_square();
                let mut e = vector::zeros(ext.field(), rts.dim());
                for (x, y) in fs.x.iter().zip(&fs.y) {
                    e = vector::add(&e, &rts.pure(x, y));
                }
                match t.coords_of(&e) {
                    Some(c) => status_of(t_coring.check_frobenius(&FrobeniusStructure {
                        gamma: t_pairing_from(t, ext, &fs.e_map),
                        element: c,
                    })),
                    None => ImplicationStatus::Failed("Σ x_i ⊗ y_i is not B-central".into()),
                }
            }
        },
    ));
    // T Frobenius ⟹ Frobenius: no construction; compare the two searches
    let progen = ("A_B progenerator".to_string(), props.fg_projective_right.holds && props.generator_right.holds);
    out.push(imp(
        "T Frobenius ⟹ Frobenius",
        vec![progen.clone(), procesi.clone()],
        if !t_frob.is_found() {
            ImplicationStatus::PremiseFalse
        } else if !(progen.1 && procesi.1) {
            ImplicationStatus::NotApplicable("needs a progenerator Procesi extension".into())
        } else {
            ImplicationStatus::Consistent(frob.is_found())
        },
    ));

    CorrespondenceReport {
        separable: sep.is_some(),
        split: split.is_some(),
        frobenius: frob.label(),
        s_coseparable: s_coint.is_some(),
        s_cosplit: s_cosplit.is_some(),
        t_coseparable: t_coint.is_some(),
        t_cosplit: t_cosplit.is_some(),
        t_frobenius: t_frob.label(),
        implications: out,
    }
}
