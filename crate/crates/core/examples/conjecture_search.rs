//! Random search for matrices with dependent eigenvectors and the
//! predicted behaviour of their quasi-inverse.
use supertropical::laws::{conjecture_experiment, conjecture_instance, Suite, TrialConfig};
use supertropical::Matrix;

fn main() {
    let a: Matrix = include_str!("../data/pathological_4x4.txt").parse().unwrap();
    println!("known instance: {:?}", conjecture_instance(&a).unwrap());

    let cfg = TrialConfig {
        trials: 5,
        attempts_per_trial: 4000,
        master_seed: 11,
        ..Suite::Conjecture.default_config(4)
    };
    let report = conjecture_experiment(&cfg);
    println!("{report}");
    for (k, v) in &report.counters {
        println!("  {k} = {v}");
    }
}
