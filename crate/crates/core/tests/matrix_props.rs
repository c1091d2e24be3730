mod common;

use common::*;
use proptest::prelude::*;
use supertropical::{Matrix, Permutation, Scalar};

fn pair(n: usize) -> impl Strategy<Value = (Matrix, Matrix)> {
    (matrix(n), matrix(n))
}

fn ghost_or_zero(m: &Matrix) -> bool {
    m.entries().iter().all(Scalar::is_ghost_or_zero)
}

fn generalized_permutation(n: usize) -> impl Strategy<Value = Matrix> {
    (Just((0..n).collect::<Vec<_>>()).prop_shuffle(), proptest::collection::vec(tangible(), n))
        .prop_map(|(p, d)| Matrix::generalized_permutation(&Permutation::new(p), &d).unwrap())
}

proptest! {
    #[test]
    fn determinant_matches_brute_force(a in (1usize..=4).prop_flat_map(integer_matrix)) {
        prop_assert_eq!(to_naive(&a.determinant().unwrap().value), naive_det(&naive_matrix(&a)));
    }

    #[test]
    fn product_matches_brute_force((a, b) in (1usize..=4).prop_flat_map(|n| (integer_matrix(n), integer_matrix(n)))) {
        let got = naive_matrix(&a.mul(&b).unwrap());
        prop_assert_eq!(got, naive_mat_mul(&naive_matrix(&a), &naive_matrix(&b)));
    }

    #[test]
    fn row_expansion_agrees(a in sized_matrix(4), row in 0usize..4) {
        let row = row % a.rows();
        prop_assert_eq!(a.determinant_by_row_expansion(row).unwrap(), a.determinant().unwrap().value);
    }

    #[test]
    fn transpose_keeps_determinant_and_char_poly(a in sized_matrix(4)) {
        let t = a.transpose();
        prop_assert_eq!(t.determinant().unwrap().value, a.determinant().unwrap().value);
        prop_assert_eq!(t.char_poly().unwrap().poly, a.char_poly().unwrap().poly);
    }

    #[test]
    fn determinant_is_submultiplicative((a, b) in (1usize..=4).prop_flat_map(pair)) {
        let lhs = a.mul(&b).unwrap().determinant().unwrap().value;
        let rhs = &a.determinant().unwrap().value * &b.determinant().unwrap().value;
        prop_assert!(lhs.ghost_surpasses(&rhs), "{lhs} vs {rhs}");
    }

    #[test]
    fn adjoint_reverses_products((a, b) in (1usize..=4).prop_flat_map(pair)) {
        let lhs = a.mul(&b).unwrap().adjoint().unwrap();
        let rhs = b.adjoint().unwrap().mul(&a.adjoint().unwrap()).unwrap();
        prop_assert!(lhs.ghost_surpasses(&rhs));
    }

    #[test]
    fn adjoint_determinant_power(a in sized_matrix(4)) {
        let n = a.rows() as u64;
        let lhs = a.adjoint().unwrap().determinant().unwrap().value;
        prop_assert!(lhs.nu_equiv(&a.determinant().unwrap().value.pow(n - 1)));
    }

    #[test]
    fn adjoint_diagonal_gives_determinant(a in sized_matrix(4)) {
        let p = a.mul(&a.adjoint().unwrap()).unwrap();
        let det = a.determinant().unwrap().value;
        for i in 0..a.rows() {
            prop_assert!(p.get(i, i).nu_equiv(&det));
        }
    }

    #[test]
    fn cayley_hamilton(a in sized_matrix(4)) {
        let f = a.char_poly().unwrap().poly;
        prop_assert!(ghost_or_zero(&a.eval_poly(&f).unwrap()));
    }

    #[test]
    fn char_poly_coefficients(a in sized_matrix(4)) {
        let r = a.char_poly().unwrap();
        let n = a.rows();
        prop_assert_eq!(&r.coefficients[1], &a.trace().unwrap());
        prop_assert_eq!(&r.coefficients[n], &a.determinant().unwrap().value);
        prop_assert_eq!(r.coefficients[0].clone(), Scalar::one());
    }

    #[test]
    fn invertible_factors_are_exact((p, a) in (1usize..=4).prop_flat_map(|n| (generalized_permutation(n), matrix(n)))) {
        let n = p.rows();
        prop_assert!(p.is_invertible());
        let q = p.quasi_inverse().unwrap();
        prop_assert_eq!(p.mul(&q).unwrap(), Matrix::identity(n));
        let pa = p.mul(&a).unwrap();
        let det = &p.determinant().unwrap().value * &a.determinant().unwrap().value;
        prop_assert_eq!(pa.determinant().unwrap().value, det);
    }

    #[test]
    fn quasi_inverse_gives_quasi_identity(a in sized_matrix(4)) {
        if a.is_nonsingular().unwrap() {
            let q = a.quasi_inverse().unwrap();
            prop_assert!(a.mul(&q).unwrap().is_quasi_identity().unwrap());
            prop_assert!(q.mul(&a).unwrap().is_quasi_identity().unwrap());
        }
    }

    #[test]
    fn interchange_round_trips(a in sized_matrix(4)) {
        prop_assert_eq!(a.to_string().parse::<Matrix>().unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Matrix>(&json).unwrap(), a);
    }
}

#[test]
fn tied_permutations_make_a_ghost_determinant() {
    let d = m("1 1\n1 1").determinant().unwrap();
    assert_eq!(d.value, s("2v"));
    assert_eq!(d.dominant_count, 2);
}

#[test]
fn ragged_text_is_rejected() {
    assert!("1 2\n3".parse::<Matrix>().is_err());
    assert!("".parse::<Matrix>().is_err());
    assert!("1 x".parse::<Matrix>().is_err());
}
