//! Spectrum of the adjoint of the dependent-eigenvector matrix. Its ghost
//! coefficient hides a monomial, a double eigenvalue appears and the
//! eigenvectors become independent.
use supertropical::eigen;
use supertropical::report::vector_text;
use supertropical::Matrix;

fn main() {
    let a: Matrix = include_str!("../data/pathological_4x4.txt").parse().unwrap();
    let adj = a.adjoint().unwrap();
    println!("adj(A) =\n{adj}");
    let spec = eigen::spectrum(&adj).unwrap();
    println!("f = {}\nessential = {}", spec.char_report.poly, spec.essential);
    for ev in &spec.eigenvalues {
        println!("lambda = {} multiplicity {}", ev.value, ev.multiplicity);
    }
    for v in &spec.eigenvectors {
        println!("column {} at {}: {}", v.column + 1, v.eigenvalue, vector_text(&v.vector));
    }
    println!(
        "{} of {} eigenvectors extracted, dependent: {}",
        spec.basis.columns.len(),
        spec.basis.needed,
        spec.dependence.dependent
    );
}
