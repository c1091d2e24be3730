#![allow(dead_code)]

use proptest::prelude::*;
use supertropical::{Layer, Matrix, Scalar};

pub fn s(t: &str) -> Scalar {
    t.parse().unwrap()
}

pub fn m(t: &str) -> Matrix {
    t.parse().unwrap()
}

pub fn v(t: &str) -> Vec<Scalar> {
    t.split_whitespace().map(s).collect()
}

/// Scalars with small integer or half-integer values on every layer.
pub fn scalar() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        1 => Just(Scalar::zero()),
        4 => (-12i64..=12).prop_map(Scalar::int),
        1 => (-24i64..=24).prop_map(|n| Scalar::ratio(n, 2)),
        2 => (-12i64..=12).prop_map(Scalar::ghost_int),
    ]
}

pub fn tangible() -> impl Strategy<Value = Scalar> {
    (-12i64..=12).prop_map(Scalar::int)
}

pub fn matrix(n: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(scalar(), n * n).prop_map(move |d| Matrix::new(n, n, d).unwrap())
}

pub fn sized_matrix(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max).prop_flat_map(matrix)
}

/// Integer oracle for layered max-plus values: `None` is `-inf`, the flag
/// marks a ghost.
pub type Naive = Option<(i64, bool)>;

pub fn to_naive(x: &Scalar) -> Naive {
    match x.layer() {
        Layer::Zero => None,
        layer => {
            let r = x.value().unwrap();
            assert!(r.is_integer(), "naive oracle only handles integers");
            Some((r.to_integer().try_into().unwrap(), layer == Layer::Ghost))
        }
    }
}

pub fn naive_add(a: Naive, b: Naive) -> Naive {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some((x, gx)), Some((y, gy))) => {
            if x > y {
                Some((x, gx))
            } else if y > x {
                Some((y, gy))
            } else {
                Some((x, true))
            }
        }
    }
}

pub fn naive_mul(a: Naive, b: Naive) -> Naive {
    match (a, b) {
        (Some((x, gx)), Some((y, gy))) => Some((x + y, gx || gy)),
        _ => None,
    }
}

fn heap_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    out.push(p.clone());
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            out.push(p.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Permanent in the layered max-plus sense, by brute force over integers.
pub fn naive_det(a: &[Vec<Naive>]) -> Naive {
    let n = a.len();
    heap_permutations(n).into_iter().fold(None, |acc, p| {
        let w = (0..n).try_fold((0, false), |w, i| naive_mul(Some(w), a[i][p[i]]));
        naive_add(acc, w)
    })
}

pub fn naive_matrix(a: &Matrix) -> Vec<Vec<Naive>> {
    (0..a.rows()).map(|i| a.row(i).iter().map(to_naive).collect()).collect()
}

pub fn naive_mat_mul(a: &[Vec<Naive>], b: &[Vec<Naive>]) -> Vec<Vec<Naive>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(None, |acc, k| naive_add(acc, naive_mul(a[i][k], b[k][j]))))
                .collect()
        })
        .collect()
}

pub fn integer_matrix(n: usize) -> impl Strategy<Value = Matrix> {
    let entry = prop_oneof![
        1 => Just(Scalar::zero()),
        4 => (-9i64..=9).prop_map(Scalar::int),
        1 => (-9i64..=9).prop_map(Scalar::ghost_int),
    ];
    proptest::collection::vec(entry, n * n).prop_map(move |d| Matrix::new(n, n, d).unwrap())
}
