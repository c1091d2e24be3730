//! Generalized eigenvectors and the generators of each generalized
//! eigenspace for a strongly nonsingular matrix.
use supertropical::eigen::{self, generalized_subspace_generators, is_generalized_eigenvector};
use supertropical::report::vector_text;
use supertropical::Matrix;

fn main() {
    let a: Matrix = "5 0 -1\n- 2 1\n- - -3".parse().unwrap();
    println!("A =\n{a}");
    println!("strongly nonsingular: {:?}", a.strong_nonsingularity(None).unwrap());
    let spec = eigen::spectrum(&a).unwrap();
    for ev in &spec.eigenvalues {
        let sub = generalized_subspace_generators(&a, &ev.value).unwrap();
        println!("lambda = {}  cofactor {}", ev.value, sub.cofactor);
        if sub.ghost_free_generators.is_empty() {
            println!("  every generator column has a ghost entry");
        }
        for g in &sub.ghost_free_generators {
            let r = is_generalized_eigenvector(&a, &ev.value, g, None).unwrap();
            println!("  generator {} multiplicity {:?} degenerate {}", vector_text(g), r.multiplicity, r.degenerate);
        }
    }
}
