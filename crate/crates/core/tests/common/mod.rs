#![allow(dead_code)]

use std::sync::Arc;

use algebroid::algebra::{FinDimAlgebra, Group, Subalgebra};
use algebroid::extension::RingExtension;
use algebroid::linalg::{Field, Scalar, Vector};

pub fn q() -> Field {
    Field::Rational
}

pub fn int(field: Field, v: &[i64]) -> Vector {
    v.iter().map(|&x| field.from_i64(x)).collect()
}

pub fn half(field: Field) -> Scalar {
    field.ratio(1, 2).unwrap()
}

/// k[C_2] over k.
pub fn e1(field: Field) -> RingExtension {
    let a = Arc::new(FinDimAlgebra::group_algebra(field, &Group::cyclic(2)));
    RingExtension::new(Subalgebra::unit_subalgebra(a))
}

pub fn s3() -> Group {
    Group::symmetric(3)
}

/// Q[S_3] over Q[A_3].
pub fn e2(field: Field) -> RingExtension {
    let g = s3();
    let a = Arc::new(FinDimAlgebra::group_algebra(field, &g));
    let r = a.basis_vector(g.index_of("(123)").unwrap());
    RingExtension::new(Subalgebra::generated_by(a, &[r]).unwrap())
}

/// M_n(k) over k.
pub fn matrices(field: Field, n: usize) -> RingExtension {
    let a = Arc::new(FinDimAlgebra::matrix_algebra(field, n));
    RingExtension::new(Subalgebra::unit_subalgebra(a))
}

/// M_2 ⊗ M_2 over k.
pub fn e5(field: Field) -> RingExtension {
    let m = FinDimAlgebra::matrix_algebra(field, 2);
    let a = Arc::new(m.tensor(&m).unwrap());
    RingExtension::new(Subalgebra::unit_subalgebra(a))
}

/// A over itself.
pub fn trivial(a: FinDimAlgebra) -> RingExtension {
    let a = Arc::new(a);
    RingExtension::new(Subalgebra::full(a))
}

/// `k[C_2]` over `k` coacted on by `k[C_2]`, as a group quotient by the trivial subgroup.
pub fn galois_e1(field: Field) -> algebroid::hopf::ComoduleAlgebra {
    let g = Group::cyclic(2);
    algebroid::hopf::ComoduleAlgebra::group_quotient(field, &g, &[g.identity()]).unwrap()
}

/// `Q[S_3]` over `Q[A_3]` with `g ↦ g ⊗ gA_3`.
pub fn galois_e2(field: Field) -> algebroid::hopf::ComoduleAlgebra {
    let g = s3();
    let r = g.index_of("(123)").unwrap();
    let a3 = g.subgroup_generated(&[r]);
    algebroid::hopf::ComoduleAlgebra::group_quotient(field, &g, &a3).unwrap()
}

/// `k[C_2]` coacting on itself.
pub fn galois_e3(field: Field) -> algebroid::hopf::ComoduleAlgebra {
    algebroid::hopf::ComoduleAlgebra::regular(&algebroid::hopf::HopfAlgebra::group(field, &Group::cyclic(2)))
}

pub fn assert_passes(v: &algebroid::verify::Verification, what: &str) {
    let failures: Vec<String> = v.failures().map(|f| format!("{}: {}", f.name, f.witness)).collect();
    assert!(failures.is_empty(), "{what}: {failures:?}");
}
