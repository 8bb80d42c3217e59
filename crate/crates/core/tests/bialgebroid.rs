mod common;

use std::sync::Arc;

use algebroid::algebra::FinDimAlgebra;
use algebroid::bialgebroid::{
    build_s, build_t, check_lu_formula_s, check_lu_formula_t, lu_endo_bialgebroid, lu_enveloping_hopf_algebroid,
    s_action_and_invariants, smash_endomorphism_iso, tensor_hopf_algebroid, verify_bialgebroid_morphism,
    BCentralBialgebroid, EndomorphismBialgebroid, HopfAlgebroid,
};
use algebroid::extension::{QuasiBasis, RingExtension, Side};
use algebroid::linalg::{vector, Field, Matrix, Subspace, Vector};
use common::*;

fn quasibases(ext: &RingExtension) -> (QuasiBasis, QuasiBasis) {
    (ext.left_d2_quasibasis().into_found().unwrap(), ext.right_d2_quasibasis().into_found().unwrap())
}

fn s_of(ext: &RingExtension) -> EndomorphismBialgebroid {
    let (l, r) = quasibases(ext);
    build_s(ext, &l, &r).unwrap()
}

fn t_of(ext: &RingExtension) -> BCentralBialgebroid {
    let (l, r) = quasibases(ext);
    build_t(ext, &l, &r).unwrap()
}

/// Quasibases of a group algebra over the span of a normal subgroup `N`,
/// from coset representatives `g_i`: left `(g_i ⊗ g_i⁻¹, π_i)`, right
/// `(g_i⁻¹ ⊗ g_i, π_i)` with `π_i` the projection onto `B g_i`.
fn coset_quasibases(
    ext: &RingExtension,
    table: &[Vec<usize>],
    normal: &[usize],
    reps: &[usize],
) -> (QuasiBasis, QuasiBasis) {
    let a = ext.algebra();
    let field = ext.field();
    let n = a.dim();
    let inv = |g: usize| (0..n).find(|&h| table[g][h] == 0).unwrap();
    let rts = ext.tensor_square();
    let proj = |g: usize| {
        let coset: Vec<usize> = normal.iter().map(|&x| table[x][g]).collect();
        Matrix::from_fn(field, n, n, |r, c| if r == c && coset.contains(&c) { field.one() } else { field.zero() })
    };
    let e = |g: usize| a.basis_vector(g);
    let left = QuasiBasis {
        side: Side::Left,
        tensors: reps.iter().map(|&g| rts.pure(&e(g), &e(inv(g)))).collect(),
        maps: reps.iter().map(|&g| proj(g)).collect(),
    };
    let right = QuasiBasis {
        side: Side::Right,
        tensors: reps.iter().map(|&g| rts.pure(&e(inv(g)), &e(g))).collect(),
        maps: reps.iter().map(|&g| proj(g)).collect(),
    };
    (left, right)
}

fn second_quasibases(name: &str, ext: &RingExtension) -> (QuasiBasis, QuasiBasis) {
    match name {
        "e1" => {
            let t = vec![vec![0, 1], vec![1, 0]];
            coset_quasibases(ext, &t, &[0], &[0, 1])
        }
        "e2" => {
            let g = s3();
            let normal = g.subgroup_generated(&[g.index_of("(123)").unwrap()]);
            coset_quasibases(ext, g.table(), &normal, &[g.identity(), g.index_of("(12)").unwrap()])
        }
        _ => {
            let sys = ext.h_separability_system().into_found().unwrap();
            QuasiBasis::from_h_separability(ext, &sys)
        }
    }
}

fn named() -> Vec<(&'static str, RingExtension)> {
    vec![("e1", e1(q())), ("e2", e2(q())), ("e4", matrices(q(), 2))]
}

#[test]
fn s_and_t_satisfy_the_axioms() {
    for (name, ext) in named() {
        let s = s_of(&ext);
        assert_passes(&s.bialgebroid.verify(), &format!("S of {name}"));
        let t = t_of(&ext);
        assert_passes(&t.bialgebroid.verify(), &format!("T of {name}"));
        assert_eq!(s.alt_coproduct, *s.bialgebroid.coproduct());
        assert_eq!(t.alt_coproduct, *t.bialgebroid.coproduct());
        t.bialgebroid.total().check_associative().unwrap();
        t.bialgebroid.total().check_unit().unwrap();
    }
}

#[test]
fn dimensions() {
    let ext = e2(q());
    assert_eq!(ext.centralizer().dim(), 4);
    assert_eq!(s_of(&ext).dim(), 8);
    assert_eq!(t_of(&ext).dim(), 8);
    let ext = matrices(q(), 2);
    assert_eq!(s_of(&ext).dim(), 16);
    assert_eq!(t_of(&ext).dim(), 16);
    let ext = e1(q());
    assert_eq!(s_of(&ext).dim(), 4);
    assert_eq!(t_of(&ext).dim(), 4);
}

#[test]
fn identity_is_grouplike_and_counit_is_evaluation_at_one() {
    let ext = e1(q());
    let s = s_of(&ext);
    let id = s.coords_of(&Matrix::identity(q(), 2)).unwrap();
    assert_eq!(s.bialgebroid.coproduct().mul_vec(&id), s.bialgebroid.square().pure(&id, &id));
    let ext = e2(q());
    let s = s_of(&ext);
    let a = ext.algebra();
    for (k, op) in s.operators.iter().enumerate() {
        let eps = s.bialgebroid.counit().column(k);
        assert_eq!(ext.centralizer().embed(&eps), op.mul_vec(a.unit()));
    }
    let t = t_of(&ext);
    let one_one = t.coords_of(&ext.tensor_square().one_one()).unwrap();
    assert_eq!(t.bialgebroid.counit().mul_vec(&one_one), *t.bialgebroid.base().unit());
}

#[test]
fn s_is_the_composition_algebra() {
    let ext = matrices(q(), 2);
    let s = s_of(&ext);
    let h = s.bialgebroid.total();
    for i in 0..16 {
        for j in 0..16 {
            let prod = s.operator(&h.mul(&h.basis_vector(i), &h.basis_vector(j)));
            assert_eq!(prod, s.operators[i].mul(&s.operators[j]));
        }
    }
}

#[test]
fn coproducts_do_not_depend_on_the_quasibasis() {
    for (name, ext) in named() {
        let (l2, r2) = second_quasibases(name, &ext);
        assert_eq!(l2.verify(&ext), Ok(()), "{name} left");
        assert_eq!(r2.verify(&ext), Ok(()), "{name} right");
        let (l1, r1) = quasibases(&ext);
        assert_ne!((&l1.tensors, &l1.maps), (&l2.tensors, &l2.maps), "{name}: need distinct quasibases");
        let s1 = build_s(&ext, &l1, &r1).unwrap();
        let s2 = build_s(&ext, &l2, &r2).unwrap();
        assert_eq!(s1.bialgebroid.coproduct(), s2.bialgebroid.coproduct(), "{name}");
        let t1 = build_t(&ext, &l1, &r1).unwrap();
        let t2 = build_t(&ext, &l2, &r2).unwrap();
        assert_eq!(t1.bialgebroid.coproduct(), t2.bialgebroid.coproduct(), "{name}");
        // mixing the two pairs is also fine
        let s3 = build_s(&ext, &l1, &r2).unwrap();
        assert_eq!(s1.bialgebroid.coproduct(), s3.bialgebroid.coproduct(), "{name}");
    }
}

#[test]
fn broken_quasibasis_is_rejected() {
    let ext = e2(q());
    let (mut l, r) = quasibases(&ext);
    l.maps[0] = l.maps[0].scale(&q().from_i64(2));
    assert!(matches!(build_s(&ext, &l, &r), Err(algebroid::bialgebroid::BialgebroidError::BadQuasiBasis(_))));
    assert!(build_t(&ext, &r, &r).is_err());
}

#[test]
fn opposites_both_ways() {
    for (name, ext) in named() {
        let t = t_of(&ext);
        assert_passes(&t.bialgebroid.to_left_opposite().verify(), &format!("T^op of {name}"));
        let s = s_of(&ext);
        let right = s.bialgebroid.to_right_opposite();
        assert_passes(&right.verify(), &format!("S^op of {name}"));
        assert_eq!(right.to_left_opposite().total().structure_constants(), s.bialgebroid.total().structure_constants());
    }
}

#[test]
fn lu_formulas() {
    for (name, ext) in named() {
        assert_passes(&check_lu_formula_s(&s_of(&ext), &ext), &format!("S of {name}"));
        assert_passes(&check_lu_formula_t(&t_of(&ext), &ext), &format!("T of {name}"));
    }
}

#[test]
fn corrupted_t_fails_lu_formula() {
    let ext = e2(q());
    let mut t = t_of(&ext);
    let mut d = t.bialgebroid.coproduct().clone();
    let k = 1;
    for r in 0..d.rows() {
        let v = d.get(r, k).clone();
        d.set(r, k, &v + &v);
    }
    t.bialgebroid = t.bialgebroid.with_coproduct(d).unwrap();
    let v = check_lu_formula_t(&t, &ext);
    let f = v.get("Δ(t) = t¹ ⊗ 1 ⊗ t²").unwrap();
    assert!(!f.holds);
    assert!(f.witness.contains("basis element"));
}

#[test]
fn mutated_coproduct_breaks_an_axiom() {
    let ext = e2(q());
    let s = s_of(&ext);
    let unit = s.bialgebroid.total().unit().clone();
    let k = (0..s.dim()).find(|&k| vector::unit(q(), s.dim(), k) != unit).unwrap();
    let mut d = s.bialgebroid.coproduct().clone();
    for r in 0..d.rows() {
        let v = d.get(r, k).clone();
        d.set(r, k, &v + &v);
    }
    let bad = s.bialgebroid.with_coproduct(d).unwrap();
    let v = bad.verify();
    assert!(!v.holds("Takeuchi condition") || !v.holds("coproduct multiplicative"));
}

#[test]
fn action_invariants_and_measuring() {
    let ext = e2(q());
    let report = s_action_and_invariants(&s_of(&ext), &ext);
    assert_eq!(report.invariants_dim, 3);
    assert!(report.invariants_equal_base);
    assert!(report.balanced);
    assert!(report.measuring, "{}", report.measuring_witness);
    let ext = e1(q());
    let report = s_action_and_invariants(&s_of(&ext), &ext);
    assert_eq!(report.invariants_dim, 1);
    assert!(report.invariants_equal_base && report.measuring);
}

#[test]
fn smash_product_is_the_endomorphism_ring() {
    for (name, ext) in named() {
        let report = smash_endomorphism_iso(&s_of(&ext), &ext).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(report.bijective && report.multiplicative);
        assert_eq!(report.smash_dim, report.endomorphism_dim);
    }
    // End(A_B) for Q[S_3] over Q[A_3]: A_B is free of rank 2 over a 3-dimensional B
    let ext = e2(q());
    assert_eq!(smash_endomorphism_iso(&s_of(&ext), &ext).unwrap().smash_dim, 12);
}

/// `F`: S-coordinates to matrix units of `End_k A`, `f`: R-coordinates to `A`.
fn into_lu(s: &EndomorphismBialgebroid) -> (Matrix, Matrix) {
    let field = s.bialgebroid.field();
    let n = s.operators[0].rows();
    let cols: Vec<Vector> = s.operators.iter().map(|m| (0..n).flat_map(|r| m.row(r).to_vec()).collect()).collect();
    (Matrix::from_columns(field, n * n, &cols), s.centralizer.inclusion())
}

#[test]
fn lu_endomorphism_bialgebroid_matches_s() {
    let k = Arc::new(FinDimAlgebra::ground(q()));
    let lu = lu_endo_bialgebroid(&k).unwrap();
    assert_eq!(lu.dim(), 1);
    assert_passes(&lu.verify(), "End k");
    for ext in [e1(q()), matrices(q(), 2)] {
        let lu = lu_endo_bialgebroid(ext.algebra_arc()).unwrap();
        assert_passes(&lu.verify(), "End C");
        let s = s_of(&ext);
        let (big_f, f) = into_lu(&s);
        assert_eq!(big_f.rank(), lu.dim());
        assert_eq!(f.rank(), lu.base().dim());
        assert_passes(&verify_bialgebroid_morphism(&big_f, &f, &s.bialgebroid, &lu), "S → End C");
    }
}

#[test]
fn morphism_checks() {
    let ext = e2(q());
    let s = s_of(&ext);
    let b = &s.bialgebroid;
    let id = Matrix::identity(q(), b.dim());
    let idr = Matrix::identity(q(), b.base().dim());
    assert_passes(&verify_bialgebroid_morphism(&id, &idr, b, b), "identity");
    // swap two basis vectors
    let n = b.dim();
    let p = Matrix::from_fn(q(), n, n, |r, c| {
        let c2 = match c {
            0 => 1,
            1 => 0,
            x => x,
        };
        if r == c2 { q().one() } else { q().zero() }
    });
    assert!(!verify_bialgebroid_morphism(&p, &idr, b, b).passed());
}

fn enveloping(c: FinDimAlgebra) -> HopfAlgebroid {
    lu_enveloping_hopf_algebroid(&Arc::new(c)).unwrap()
}

#[test]
fn enveloping_hopf_algebroids() {
    for c in [FinDimAlgebra::ground(q()), FinDimAlgebra::matrix_algebra(q(), 2), FinDimAlgebra::group_algebra(q(), &s3())] {
        let h = enveloping(c);
        let v = h.verify();
        assert_passes(&v, "enveloping");
        assert!(h.is_involutive());
        assert!(v.get("canonical section (informational)").is_some());
        let base_basis: Vec<Vector> = (0..h.bialgebroid.base().dim()).map(|i| h.bialgebroid.base().basis_vector(i)).collect();
        assert!(h.bialgebroid.is_generated_over(&base_basis));
    }
}

#[test]
fn identity_antipode_is_not_anti_multiplicative() {
    let mut h = enveloping(FinDimAlgebra::matrix_algebra(q(), 2));
    h.antipode = Matrix::identity(q(), 16);
    assert!(!h.verify().holds("antipode anti-multiplicative"));
}

#[test]
fn tensor_hopf_algebroids() {
    let m2 = enveloping(FinDimAlgebra::matrix_algebra(q(), 2));
    let c2 = enveloping(FinDimAlgebra::group_algebra(q(), &algebroid::algebra::Group::cyclic(2)));
    let t = tensor_hopf_algebroid(&m2, &c2).unwrap();
    assert_eq!(t.bialgebroid.dim(), 64);
    assert_passes(&t.verify(), "M2 ⊗ C2");
    assert!(t.is_involutive());

    let k = enveloping(FinDimAlgebra::ground(q()));
    let kt = tensor_hopf_algebroid(&k, &c2).unwrap();
    assert_eq!(kt.bialgebroid.coproduct(), c2.bialgebroid.coproduct());
    assert_eq!(kt.antipode, c2.antipode);

    // leg order: Δ(x ⊗ y) = (x₁ ⊗ y₁) ⊗ (x₂ ⊗ y₂)
    let (n1, n2) = (m2.bialgebroid.dim(), c2.bialgebroid.dim());
    let (i, j) = (5, 3);
    let sq = t.bialgebroid.square();
    let mut expected = vector::zeros(q(), sq.dim());
    for (x, y, c) in m2.bialgebroid.square().terms(&m2.bialgebroid.coproduct().column(i)) {
        for (x2, y2, d) in c2.bialgebroid.square().terms(&c2.bialgebroid.coproduct().column(j)) {
            let l = vector::tensor(&vector::unit(q(), n1, x), &vector::unit(q(), n2, x2));
            let r = vector::tensor(&vector::unit(q(), n1, y), &vector::unit(q(), n2, y2));
            vector::axpy(&mut expected, &(c * d), &sq.pure(&l, &r));
        }
    }
    assert_eq!(t.bialgebroid.coproduct().column(i * n2 + j), expected);

    let mut bad = c2.clone();
    bad.antipode = Matrix::identity(q(), 4).scale(&q().from_i64(2));
    assert!(tensor_hopf_algebroid(&m2, &bad).is_err());
}

#[test]
fn generation_over_subalgebras() {
    let ext = matrices(q(), 2);
    let s = s_of(&ext);
    let r = s.bialgebroid.base();
    let all: Vec<Vector> = (0..r.dim()).map(|i| r.basis_vector(i)).collect();
    assert!(s.bialgebroid.is_generated_over(&all));
    let ext = e2(q());
    let s = s_of(&ext);
    let unit = vec![s.bialgebroid.base().unit().clone()];
    assert!(!s.bialgebroid.is_generated_over(&unit));
    let span = Subspace::span(Field::Rational, s.dim(), [s.bialgebroid.total().unit().clone()]);
    assert_eq!(span.dim(), 1);
}

#[test]
fn e5_builds() {
    let ext = e5(q());
    let sys = ext.h_separability_system().into_found().unwrap();
    let (l, r) = QuasiBasis::from_h_separability(&ext, &sys);
    let t0 = std::time::Instant::now();
    let s = build_s(&ext, &l, &r).unwrap();
    eprintln!("S built {:?}", t0.elapsed());
    assert_eq!(s.dim(), 256);
    let t = build_t(&ext, &l, &r).unwrap();
    eprintln!("T built {:?}", t0.elapsed());
    assert_eq!(t.dim(), 256);
}
