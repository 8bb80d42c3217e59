use super::{FinDimAlgebra, Subalgebra};
use crate::linalg::{normalize_sparse, Echelon, Field, Matrix, SparseVec, Vector};

/// Which space of `B`-linear maps out of `A` to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomKind {
    /// `Hom_{B-B}(A, A)`.
    Bimodule,
    /// `Hom_{B-B}(A, B)`.
    BimoduleToBase,
    /// `End(A_B)`: right `B`-module endomorphisms.
    RightModule,
    /// `Hom(A_B, B_B)`.
    RightToBase,
    /// `End(_B A)`: left `B`-module endomorphisms.
    LeftModule,
}

/// Basis of the requested space, every map given as a `dim A × dim A` matrix
/// on ambient coordinates (maps into `B` land in the span of `B`'s basis).
pub fn bimodule_hom_space(a: &FinDimAlgebra, b: &Subalgebra, kind: HomKind) -> Vec<Matrix> {
    let mut pairs = Vec::new();
    for x in b.basis() {
        let (l, r) = (a.left_mul_matrix(x), a.right_mul_matrix(x));
        match kind {
            HomKind::Bimodule | HomKind::BimoduleToBase => {
                pairs.push((l.clone(), l));
                pairs.push((r.clone(), r));
            }
            HomKind::RightModule | HomKind::RightToBase => pairs.push((r.clone(), r)),
            HomKind::LeftModule => pairs.push((l.clone(), l)),
        }
    }
    let image = matches!(kind, HomKind::BimoduleToBase | HomKind::RightToBase).then(|| b.basis());
    commutant_maps(a.field(), a.dim(), a.dim(), &pairs, image)
}

/// Basis of the maps `X` (`n_out × n_in`) with `X M = N X` for every pair
/// `(M, N)`, optionally with every column of `X` in the span of `image`.
pub fn commutant_maps(
    field: Field,
    n_in: usize,
    n_out: usize,
    pairs: &[(Matrix, Matrix)],
    image: Option<&[Vector]>,
) -> Vec<Matrix> {
    let var = |r: usize, c: usize| r * n_in + c;
    let mut e = Echelon::new(field, n_in * n_out);
    for (m, n) in pairs {
        let mcols = m.sparse_columns();
        for r in 0..n_out {
            let nrow: SparseVec = n
                .row(r)
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(k, v)| (k, v.clone()))
                .collect();
            for (c, mc) in mcols.iter().enumerate() {
                let mut row: SparseVec = mc.iter().map(|(k, v)| (var(r, *k), v.clone())).collect();
                row.extend(nrow.iter().map(|(k, v)| (var(*k, c), -v)));
                let row = normalize_sparse(row);
                if !row.is_empty() {
                    e.insert(row);
                }
            }
        }
    }
    if let Some(basis) = image {
        let mut img = Echelon::new(field, n_out);
        for v in basis {
            img.insert_dense(v);
        }
        let img = img.into_reduced();
        for f in img.free_cols() {
            // v ∈ span ⟺ v_f − Σ_p v_p row_p[f] = 0 for every free column f
            let mut functional: SparseVec = vec![(f, field.one())];
            for row in img.rows() {
                if let Some((_, v)) = row.iter().find(|(c, _)| *c == f) {
                    functional.push((row[0].0, -v));
                }
            }
            for c in 0..n_in {
                let row = normalize_sparse(functional.iter().map(|(r, v)| (var(*r, c), v.clone())).collect());
                e.insert(row);
            }
        }
    }
    e.into_reduced()
        .kernel_basis_reduced()
        .into_iter()
        .map(|v| Matrix::from_fn(field, n_out, n_in, |r, c| v[var(r, c)].clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::Group;

    #[test]
    fn hom_space_dimensions() {
        let g = Group::symmetric(3);
        let a = Arc::new(FinDimAlgebra::group_algebra(Field::Rational, &g));
        let r = a.basis_vector(g.index_of("(123)").unwrap());
        let b = Subalgebra::generated_by(a.clone(), &[r]).unwrap();
        assert_eq!(bimodule_hom_space(&a, &b, HomKind::Bimodule).len(), 8);
        let k = Subalgebra::unit_subalgebra(a.clone());
        assert_eq!(bimodule_hom_space(&a, &k, HomKind::Bimodule).len(), 36);

        let c2 = Arc::new(FinDimAlgebra::group_algebra(Field::Rational, &Group::cyclic(2)));
        let k = Subalgebra::unit_subalgebra(c2.clone());
        let maps = bimodule_hom_space(&c2, &k, HomKind::RightToBase);
        assert_eq!(maps.len(), 2);
        for m in &maps {
            for c in m.columns() {
                assert!(k.contains(&c));
            }
        }
    }

    #[test]
    fn split_maps_of_group_extension() {
        let g = Group::symmetric(3);
        let a = Arc::new(FinDimAlgebra::group_algebra(Field::Rational, &g));
        let r = a.basis_vector(g.index_of("(123)").unwrap());
        let b = Subalgebra::generated_by(a.clone(), &[r]).unwrap();
        // B itself contributes Hom_{B-B}(B, B) = B; the other coset only the
        // norm element 1 + r + r² (annihilator of r − r²)
        assert_eq!(bimodule_hom_space(&a, &b, HomKind::BimoduleToBase).len(), 4);
        assert_eq!(bimodule_hom_space(&a, &b, HomKind::RightToBase).len(), 6);
    }
}
