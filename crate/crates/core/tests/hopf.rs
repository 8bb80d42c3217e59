mod common;

use std::sync::Arc;

use algebroid::algebra::{FinDimAlgebra, Group};
use algebroid::bialgebroid::{build_s, build_t, BCentralBialgebroid, EndomorphismBialgebroid};
use algebroid::extension::RingExtension;
use algebroid::hopf::{
    check_double_relation, check_module_algebra, check_quasitriangular, drinfeld_double, hgalois_top_hopf_algebroid,
    iso_s_to_smash, iso_top_to_smash, lu_theorem_hopf_algebroid, smash_product, ComoduleAlgebra, DoubleModuleAlgebra,
    DualPairing, HopfAlgebra, HopfError, HopfGalois,
};
use algebroid::linalg::{vector, Field, Matrix};
use common::*;

fn s_of(ext: &RingExtension) -> EndomorphismBialgebroid {
    let (l, r) = (ext.left_d2_quasibasis().into_found().unwrap(), ext.right_d2_quasibasis().into_found().unwrap());
    build_s(ext, &l, &r).unwrap()
}

fn t_of(ext: &RingExtension) -> BCentralBialgebroid {
    let (l, r) = (ext.left_d2_quasibasis().into_found().unwrap(), ext.right_d2_quasibasis().into_found().unwrap());
    build_t(ext, &l, &r).unwrap()
}

fn galois(ca: ComoduleAlgebra) -> HopfGalois {
    HopfGalois::new(ca).unwrap()
}

fn unit_index(h: &HopfAlgebra) -> usize {
    h.algebra().unit().iter().position(|c| !c.is_zero()).unwrap()
}

mod hopf_algebras {
    use super::*;

    #[test]
    fn group_algebras_verify() {
        for g in [Group::cyclic(2), Group::cyclic(3), s3()] {
            let h = HopfAlgebra::group(q(), &g);
            assert_passes(&h.verify(), "k[G]");
            assert_eq!(h.antipode().mul(h.antipode()), Matrix::identity(q(), g.order()));
        }
        assert_passes(&HopfAlgebra::ground(q()).verify(), "k");
    }

    #[test]
    fn antipode_of_s3_inverts_elements() {
        let g = s3();
        let h = HopfAlgebra::group(q(), &g);
        for x in 0..g.order() {
            assert_eq!(h.s(&h.basis_vector(x)), h.basis_vector(g.inverse(x)));
        }
    }

    #[test]
    fn dual_of_group_algebra_is_pointwise() {
        let h = HopfAlgebra::group(q(), &Group::cyclic(2));
        let d = h.dual();
        assert_passes(&d.verify(), "k[C2]*");
        for i in 0..2 {
            for j in 0..2 {
                let expect = if i == j { d.basis_vector(i) } else { vector::zeros(q(), 2) };
                assert_eq!(d.mul(&d.basis_vector(i), &d.basis_vector(j)), expect);
            }
        }
        assert_eq!(*d.algebra().unit(), int(q(), &[1, 1]));
        assert_passes(&DualPairing::new(&h).verify(), "pairing");
    }

    #[test]
    fn dual_and_opposite_of_s3() {
        let h = HopfAlgebra::group(q(), &s3());
        assert_passes(&h.dual().verify(), "k[S3]*");
        assert!(h.dual().algebra().is_commutative());
        let op = h.opposite().unwrap();
        assert_passes(&op.verify(), "k[S3]^op");
        assert_passes(&DualPairing::new(&h).verify(), "pairing");
    }

    #[test]
    fn integrals() {
        let h = HopfAlgebra::group(q(), &Group::cyclic(2));
        let r = h.integral();
        assert_eq!(r.integral, vec![half(q()), half(q())]);
        assert!(r.semisimple);

        let f2 = Field::prime(2).unwrap();
        let h2 = HopfAlgebra::group(f2, &Group::cyclic(2));
        let r2 = h2.integral();
        assert_eq!(r2.integral, int(f2, &[1, 1]));
        assert!(!r2.semisimple);

        let k = HopfAlgebra::ground(q());
        assert_eq!(k.integral().integral, int(q(), &[1]));
        assert_eq!(HopfAlgebra::group(q(), &s3()).left_integrals().len(), 1);
    }

    #[test]
    fn broken_antipode_is_rejected() {
        let h = HopfAlgebra::group(q(), &s3());
        let id = Matrix::identity(q(), 6);
        let err = HopfAlgebra::new(h.algebra().clone(), h.coproduct().clone(), h.counit().clone(), id);
        assert!(matches!(err, Err(HopfError::Invalid(_))), "{err:?}");
    }
}

mod comodule_algebras {
    use super::*;

    #[test]
    fn builtins_verify() {
        for ca in [galois_e1(q()), galois_e2(q()), galois_e3(q())] {
            assert_passes(&ca.verify(), "comodule algebra");
        }
    }

    #[test]
    fn coinvariants() {
        assert_eq!(galois_e1(q()).coinvariants().dim(), 1);
        assert_eq!(galois_e3(q()).coinvariants().dim(), 1);
        let e2 = galois_e2(q());
        let b = e2.coinvariants();
        assert_eq!(b.dim(), 3);
        let g = s3();
        for name in ["e", "(123)", "(132)"] {
            assert!(b.contains(&e2.algebra().basis_vector(g.index_of(name).unwrap())));
        }
        let a = Arc::new(FinDimAlgebra::matrix_algebra(q(), 2));
        let triv = ComoduleAlgebra::trivial(a, &HopfAlgebra::group(q(), &Group::cyclic(2)));
        assert_passes(&triv.verify(), "trivial coaction");
        assert_eq!(triv.coinvariants().dim(), 4);
        assert!(!triv.is_hopf_galois());
    }

    #[test]
    fn galois_map_on_group_quotient() {
        let hg = galois(galois_e2(q()));
        assert_passes(&hg.galois_checks(), "β");
        let g = s3();
        let a = hg.algebra();
        let (_, coset_of) = g.quotient(&g.subgroup_generated(&[g.index_of("(123)").unwrap()])).unwrap();
        let rts = hg.ext.tensor_square();
        for x in 0..6 {
            for y in 0..6 {
                let lhs = hg.beta.mul_vec(&rts.pure(&a.basis_vector(x), &a.basis_vector(y)));
                let expect = vector::tensor(&a.basis_vector(g.mul(x, y)), &hg.hopf().basis_vector(coset_of[y]));
                assert_eq!(lhs, expect, "β({x} ⊗ {y})");
            }
        }
    }

    #[test]
    fn builtins_are_galois() {
        for ca in [galois_e1(q()), galois_e3(q())] {
            assert!(ca.is_hopf_galois());
            assert_passes(&galois(ca).galois_checks(), "β");
        }
    }

    #[test]
    fn right_quasibasis_from_galois_lift() {
        for ca in [galois_e1(q()), galois_e2(q()), galois_e3(q())] {
            let hg = galois(ca);
            hg.right_quasibasis().verify(&hg.ext).unwrap();
        }
        let hg = galois(galois_e2(q()));
        let g = s3();
        let a = hg.algebra();
        let rts = hg.ext.tensor_square();
        let t = g.index_of("(12)").unwrap();
        let u = hg.right_quasibasis();
        let h1 = 1 - unit_index(hg.hopf());
        assert_eq!(u.tensors[h1], rts.pure(&a.basis_vector(g.inverse(t)), &a.basis_vector(t)));
        assert_eq!(u.tensors[unit_index(hg.hopf())], rts.one_one());
    }
}

mod miyashita_ulbrich {
    use super::*;

    #[test]
    fn swaps_three_cycles_in_s3() {
        let hg = galois(galois_e2(q()));
        assert_passes(&hg.check_mu_action(), "MU");
        let g = s3();
        let a = hg.algebra();
        let el = |n: &str| a.basis_vector(g.index_of(n).unwrap());
        let sn = hg.hopf().basis_vector(1 - unit_index(hg.hopf()));
        assert_eq!(hg.mu(&el("(123)"), &sn), el("(132)"));
        assert_eq!(hg.mu(&el("(132)"), &sn), el("(123)"));
        assert_eq!(hg.mu(&el("e"), &sn), el("e"));
        let sum = vector::add(&vector::add(&el("(12)"), &el("(13)")), &el("(23)"));
        assert_eq!(hg.centralizer().dim(), 4);
        assert_eq!(hg.mu(&sum, &sn), sum);
    }

    #[test]
    fn regular_coaction_gives_adjoint_action() {
        let hg = galois(galois_e3(q()));
        assert_passes(&hg.check_mu_action(), "MU");
        let h = hg.hopf();
        for r in 0..2 {
            for x in 0..2 {
                // S(h₁) r h₂ for grouplike h
                let expect = h.mul(&h.mul(&h.s(&h.basis_vector(x)), &h.basis_vector(r)), &h.basis_vector(x));
                assert_eq!(hg.mu(&h.basis_vector(r), &h.basis_vector(x)), expect);
            }
        }
    }

    #[test]
    fn field_base_gives_trivial_action_on_center() {
        let hg = galois(galois_e1(q()));
        assert_passes(&hg.check_mu_action(), "MU");
        for m in hg.mu_matrices() {
            assert_eq!(m, Matrix::identity(q(), 2));
        }
    }

    #[test]
    fn yetter_drinfeld_structure() {
        for ca in [galois_e1(q()), galois_e2(q()), galois_e3(q())] {
            let hg = galois(ca);
            assert_passes(&hg.verify_yd_module(), "YD");
        }
    }
}

mod smash {
    use super::*;

    #[test]
    fn trivial_action_gives_tensor_algebra() {
        let h = HopfAlgebra::group(q(), &Group::cyclic(2));
        let v = FinDimAlgebra::matrix_algebra(q(), 2);
        let action: Vec<Matrix> = (0..2).map(|_| Matrix::identity(q(), 4)).collect();
        assert_passes(&check_module_algebra(&v, &h, &action), "trivial");
        let sm = smash_product(&v, &h, &action).unwrap();
        let tensor = v.tensor(h.algebra()).unwrap();
        assert_eq!(sm.structure_constants(), tensor.structure_constants());
    }

    #[test]
    fn non_measuring_action_is_rejected() {
        let h = HopfAlgebra::group(q(), &Group::cyclic(2));
        let v = FinDimAlgebra::matrix_algebra(q(), 2);
        let mut g = Matrix::identity(q(), 4);
        g.set(0, 0, q().from_i64(2));
        let action = vec![Matrix::identity(q(), 4), g];
        assert!(check_module_algebra(&v, &h, &action).failures().next().is_some());
        assert!(matches!(smash_product(&v, &h, &action), Err(HopfError::NotMeasuring(_))));
    }

    #[test]
    fn s_is_smash_with_dual() {
        for ca in [galois_e1(q()), galois_e2(q())] {
            let hg = galois(ca);
            let s = s_of(&hg.ext);
            let iso = iso_s_to_smash(&hg, &s).unwrap();
            assert_passes(&iso.checks, "Φ");
            assert_passes(&iso.smash.verify(), "R ⋊ H*");
        }
    }

    #[test]
    fn perturbed_phi_fails() {
        let hg = galois(galois_e2(q()));
        let s = s_of(&hg.ext);
        let iso = iso_s_to_smash(&hg, &s).unwrap();
        let mut m = iso.matrix.clone();
        let c = m.get(0, 0).clone();
        m.set(0, 0, &c + &q().one());
        let f = Matrix::identity(q(), hg.centralizer().dim());
        let v = algebroid::bialgebroid::verify_bialgebroid_morphism(&m, &f, &s.bialgebroid, &iso.smash);
        assert!(v.failures().next().is_some());
    }

    #[test]
    fn t_op_is_smash_with_opposite() {
        for ca in [galois_e1(q()), galois_e2(q()), galois_e3(q())] {
            let hg = galois(ca);
            let t = t_of(&hg.ext);
            let iso = iso_top_to_smash(&hg, &t).unwrap();
            assert_passes(&iso.checks, "β|T");
        }
    }
}

mod double {
    use super::*;

    #[test]
    fn double_of_c2() {
        let h = HopfAlgebra::group(q(), &Group::cyclic(2));
        let d = drinfeld_double(&h).unwrap();
        assert_eq!(d.dim(), 4);
        assert!(d.algebra().is_commutative());
        assert_passes(&check_double_relation(&h, &d), "relation");
        assert_passes(&check_quasitriangular(&h, &d), "R-matrix");
    }

    #[test]
    fn double_of_ground_field() {
        let k = HopfAlgebra::ground(q());
        let d = drinfeld_double(&k).unwrap();
        assert_eq!(d.dim(), 1);
    }

    #[test]
    fn double_of_s3() {
        let h = HopfAlgebra::group(q(), &s3());
        let d = drinfeld_double(&h).unwrap();
        assert_eq!(d.dim(), 36);
        assert!(!d.algebra().is_commutative());
        assert_passes(&check_double_relation(&h, &d), "relation");
        assert_passes(&check_quasitriangular(&h, &d), "R-matrix");
        let op = h.opposite().unwrap();
        assert_passes(&check_double_relation(&op, &drinfeld_double(&op).unwrap()), "relation for H^op");
    }

    #[test]
    fn lu_on_ground_field_recovers_hopf_algebra() {
        let h = HopfAlgebra::group(q(), &s3());
        let dm = DoubleModuleAlgebra::trivial(&h);
        assert_passes(&dm.verify(), "k as D(H)-module algebra");
        let ha = lu_theorem_hopf_algebroid(&dm).unwrap();
        assert_passes(&ha.verify(), "Lu");
        assert_eq!(ha.antipode, *h.antipode());
    }

    #[test]
    fn lu_condition_fails_on_noncommutative_trivial_module() {
        let h = HopfAlgebra::group(q(), &Group::cyclic(2));
        let v = Arc::new(FinDimAlgebra::matrix_algebra(q(), 2));
        let dm = DoubleModuleAlgebra {
            v,
            hopf: h.clone(),
            h_action: (0..2).map(|_| Matrix::identity(q(), 4)).collect(),
            dual_action: (0..2).map(|i| Matrix::identity(q(), 4).scale(&h.algebra().unit()[i])).collect(),
        };
        assert!(dm.lu_condition().is_err());
        assert!(matches!(lu_theorem_hopf_algebroid(&dm), Err(HopfError::LuCondition(_))));
    }

    #[test]
    fn top_hopf_algebroid_from_galois() {
        for (ca, dim) in [(galois_e1(q()), 4), (galois_e2(q()), 8), (galois_e3(q()), 4)] {
            let hg = galois(ca);
            let t = t_of(&hg.ext);
            let top = hgalois_top_hopf_algebroid(&hg, &t).unwrap();
            assert_eq!(top.smash.bialgebroid.dim(), dim);
            assert_passes(&top.checks, "closed form vs Lu");
            assert_passes(&top.smash.verify(), "R ⋊ H^op");
            assert_passes(&top.pulled_back.verify(), "T^op");
        }
    }

    #[test]
    fn pointwise_double_module_from_galois() {
        let hg = galois(galois_e2(q()));
        let dm = hg.double_module();
        assert_passes(&dm.verify(), "D(H^op)-module algebra");
        assert!(dm.lu_condition().is_ok());
    }
}
