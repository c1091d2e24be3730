//! Corner roots, ghost stretches and primary factorization.
use supertropical::{expand_primary_product, Polynomial, Scalar};

fn show(text: &str) {
    let f: Polynomial = text.parse().expect("polynomial");
    let roots = f.roots();
    println!("f(x) = {f}");
    println!("  essential part: {}", f.essential());
    for r in &roots.roots {
        let flag = if r.ghost_flanked { " (ghost-flanked)" } else { "" };
        println!("  root {} multiplicity {}{flag}", r.value, r.multiplicity);
    }
    for i in &roots.ghost_intervals {
        println!("  every point of {i} is a root");
    }
    match f.primary_factorization() {
        Some(fac) if !fac.residue => println!("  factors back to {}", fac.expand()),
        Some(_) => println!("  factorization leaves a ghost residue"),
        None => println!("  no factorization"),
    }
}

fn main() {
    show("x^4 + 10x^3 + 19x^2 + 27x + 28");
    show("x^4 + 27x^3 + 47x^2 + 74v x + 84");
    show("x^2 + 2x + 4");
    let f = expand_primary_product(&[(Scalar::int(5), 2), (Scalar::int(-1), 1)]);
    println!("(x+5)^2 (x-1) = {f}, roots {:?}", f.roots().roots.iter().map(|r| r.value.to_string()).collect::<Vec<_>>());
    let g: Polynomial = "x^2 + 3x + 1".parse().unwrap();
    println!("g(4) = {}, g(1/2) = {}", g.eval(&Scalar::int(4)), g.eval(&Scalar::ratio(1, 2)));
}
