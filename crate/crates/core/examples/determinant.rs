//! Permanent-style determinant, adjoint and quasi-inverse.
use supertropical::Matrix;

fn main() {
    let a: Matrix = "2 1 -\n0 3 1\n- 1 2".parse().unwrap();
    let det = a.determinant().unwrap();
    println!("A =\n{a}\ndet A = {} attained by {:?}", det.value, det.dominant_permutations.iter().map(|p| p.to_string()).collect::<Vec<_>>());
    println!("adj A =\n{}", a.adjoint().unwrap());
    let q = a.quasi_inverse().unwrap();
    println!("A^nabla =\n{q}");
    println!("A A^nabla =\n{}", a.mul(&q).unwrap());
    println!("quasi-identity: {}", a.mul(&q).unwrap().is_quasi_identity().unwrap());

    // Two permutations of equal weight make the determinant a ghost.
    let s: Matrix = "1 1\n1 1".parse().unwrap();
    let d = s.determinant().unwrap();
    println!("det of all-ones 2x2 = {} (singular: {})", d.value, !d.is_tangible());
}
