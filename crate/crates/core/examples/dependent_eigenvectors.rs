//! A 4x4 matrix with four distinct eigenvalues whose eigenvectors are
//! tropically dependent, together with an explicit dependence witness.
use supertropical::eigen::{self, is_dependence_witness};
use supertropical::matrix::format_index_set;
use supertropical::Matrix;

fn main() {
    let a: Matrix = include_str!("../data/pathological_4x4.txt").parse().unwrap();
    let spec = eigen::spectrum(&a).unwrap();
    println!("f_A(x) = {}", spec.char_report.poly);
    for ev in &spec.eigenvalues {
        println!("lambda = {}  I = {}", ev.value, format_index_set(ev.index_set.as_deref().unwrap_or(&[])));
    }
    for v in &spec.basis.columns {
        println!("v[{}] from column {} = {:?}", v.eigenvalue, v.column + 1, v.vector.iter().map(|s| s.to_string()).collect::<Vec<_>>());
    }
    println!("W =\n{}", spec.w());
    let det = spec.dependence.determinant.as_ref().unwrap();
    println!("det W = {}", det.value);
    for p in &det.dominant_permutations {
        println!("  attained by {p}");
    }
    if let Some(w) = &spec.dependence.witness {
        let cols: Vec<_> = spec.basis.columns.iter().map(|c| c.vector.clone()).collect();
        println!("witness {:?} valid: {}", w.iter().map(|s| s.to_string()).collect::<Vec<_>>(), is_dependence_witness(&cols, w));
    }
    println!("difference criterion: {}", spec.difference_criterion);
}
