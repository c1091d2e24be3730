//! Layered max-plus arithmetic: ties in a sum become ghosts.
use supertropical::Scalar;

fn s(t: &str) -> Scalar {
    t.parse().expect("scalar token")
}

fn main() {
    let (a, b) = (s("3"), s("-3/2"));
    println!("{a} + {b} = {}", &a + &b);
    println!("{a} + {a} = {}", &a + &a);
    println!("{a} * {b} = {}", &a * &b);
    println!("{} * {a} = {}", s("2v"), &s("2v") * &a);
    println!("zero + {a} = {}", &Scalar::zero() + &a);
    println!("{a}^4 = {}, cube root of {a} = {}", a.pow(4), a.kth_root(3).unwrap());
    println!("inverse of {b} = {}", b.inv().unwrap());
    println!("inverse of 3v fails: {}", s("3v").inv().unwrap_err());
    let g = s("5v");
    println!("{g} ghost-surpasses 5: {}", g.ghost_surpasses(&s("5")));
    println!("{g} ghost-surpasses 4: {}", g.ghost_surpasses(&s("4")));
    println!("5 ghost-surpasses 4: {}", s("5").ghost_surpasses(&s("4")));
    println!("hat({g}) = {}, nu(5) = {}", g.hat(), s("5").nu());
}
