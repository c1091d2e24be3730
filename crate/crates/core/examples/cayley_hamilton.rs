use supertropical::laws::{check_cayley_hamilton, TrialConfig};
use supertropical::Matrix;

fn main() {
    let a: Matrix = "1 4 -\n2 0 3\n- 5 1v".parse().unwrap();
    let f = a.char_poly().unwrap().poly;
    println!("f_A = {f}\nf_A(A) =\n{}", a.eval_poly(&f).unwrap());

    let cfg = TrialConfig {
        n: 4,
        trials: 200,
        master_seed: 3,
        ..TrialConfig::default()
    };
    println!("{}", check_cayley_hamilton(&cfg));
}
