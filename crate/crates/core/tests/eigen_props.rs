mod common;

use common::*;
use proptest::prelude::*;
use supertropical::eigen::{self, is_generalized_eigenvector, vectors_dependent};
use supertropical::scalar::{vec_add, vec_is_ghost, vec_scale};
use supertropical::{Matrix, Scalar};

fn lambda_shift(a: &Matrix, lambda: &Scalar) -> Matrix {
    a.add(&Matrix::identity(a.rows()).scalar_mul(lambda)).unwrap()
}

proptest! {
    #[test]
    fn reported_eigenvectors_satisfy_the_relation(a in sized_matrix(4)) {
        let spec = eigen::spectrum(&a).unwrap();
        for e in &spec.eigenvectors {
            let av = a.apply(&e.vector).unwrap();
            let lv = vec_scale(&e.eigenvalue, &e.vector);
            for (x, y) in av.iter().zip(&lv) {
                prop_assert!(x.ghost_surpasses(y), "A v = {:?}, lambda v = {:?}", av, lv);
            }
            prop_assert!(e.vector.iter().all(|x| !x.is_ghost()));
            prop_assert!(e.vector.iter().any(|x| !x.is_zero()));
        }
    }

    #[test]
    fn eigenvalues_are_roots_of_the_char_poly(a in sized_matrix(4)) {
        let spec = eigen::eigenvalues(&a).unwrap();
        for ev in &spec.eigenvalues {
            prop_assert!(spec.char_report.poly.eval(&ev.value).is_ghost_or_zero());
        }
    }

    #[test]
    fn witnesses_combine_to_a_ghost(a in sized_matrix(4)) {
        let spec = eigen::spectrum(&a).unwrap();
        if let Some(w) = &spec.dependence.witness {
            let cols: Vec<Vec<Scalar>> = spec.basis.columns.iter().map(|c| c.vector.clone()).collect();
            prop_assert!(w.iter().any(Scalar::is_tangible));
            let sum = cols.iter().zip(w).fold(vec![Scalar::zero(); a.rows()], |acc, (c, k)| vec_add(&acc, &vec_scale(k, c)));
            prop_assert!(vec_is_ghost(&sum));
        }
    }

    #[test]
    fn small_matrices_with_distinct_eigenvalues_have_independent_eigenvectors(a in (2usize..=3).prop_flat_map(matrix)) {
        let spec = eigen::spectrum(&a).unwrap();
        if a.is_nonsingular().unwrap() && spec.char_report.is_tangible() && spec.has_distinct_eigenvalues() {
            prop_assert!(spec.basis.is_complete());
            prop_assert!(!spec.dependence.dependent);
        }
    }

    #[test]
    fn generalized_multiplicity_is_minimal(a in (1usize..=3).prop_flat_map(matrix)) {
        let spec = eigen::spectrum(&a).unwrap();
        for e in &spec.eigenvectors {
            let r = is_generalized_eigenvector(&a, &e.eigenvalue, &e.vector, None).unwrap();
            let b = lambda_shift(&a, &e.eigenvalue);
            let mut w = e.vector.clone();
            let mut first = None;
            for k in 1..=2 * a.rows() {
                w = b.apply(&w).unwrap();
                if vec_is_ghost(&w) {
                    first = Some(k);
                    break;
                }
            }
            prop_assert_eq!(r.multiplicity, first);
        }
    }

    #[test]
    fn tangible_multiples_keep_dependence(
        vs in proptest::collection::vec(proptest::collection::vec(scalar(), 3), 1..=3),
        c in tangible(),
    ) {
        let scaled: Vec<Vec<Scalar>> = vs.iter().map(|v| vec_scale(&c, v)).collect();
        prop_assert_eq!(vectors_dependent(&vs).unwrap().dependent, vectors_dependent(&scaled).unwrap().dependent);
    }
}

#[test]
fn difference_criterion_does_not_force_a_distinct_power_diagonal() {
    let a = m("19 7 -23\n7 11 0\n30 - -8");
    let spec = eigen::spectrum(&a).unwrap();
    assert_eq!(spec.char_report.poly.to_string(), "x^3 + 19x^2 + 30x + 37");
    let sets: Vec<_> = spec.eigenvalues.iter().map(|e| e.index_set.clone().unwrap()).collect();
    assert_eq!(sets, [vec![0], vec![1], vec![2]]);
    assert!(spec.difference_criterion);
    assert!(!spec.dependence.dependent);

    // A^6 by repeated multiplication in the integer oracle.
    let base = naive_matrix(&a);
    let mut p = base.clone();
    for _ in 1..6 {
        p = naive_mat_mul(&p, &base);
    }
    assert_eq!(p[1][1].map(|x| x.0), Some(94));
    assert_eq!(p[2][2].map(|x| x.0), Some(94));
    assert_eq!(naive_matrix(&a.pow(6).unwrap()), p);
    assert!(!eigen::diagonal_distinctness(&a, 6).unwrap());
}

#[test]
fn identity_eigenvectors_are_unit_columns() {
    let id = Matrix::identity(3);
    let spec = eigen::spectrum(&id).unwrap();
    assert_eq!(spec.eigenvalues.len(), 1);
    assert_eq!(spec.eigenvalues[0].multiplicity, 3);
    assert_eq!(eigen::eigenvector(&id, &Scalar::one(), 0).unwrap(), v("0 - -"));
    assert!(!spec.dependence.dependent);
}
