//! Every theorem suite at its default sizes, as `supertrop verify` runs it.
use supertropical::laws::Suite;

fn main() {
    for suite in Suite::ALL.into_iter().filter(|s| *s != Suite::Conjecture) {
        for &n in suite.default_sizes() {
            let cfg = supertropical::laws::TrialConfig {
                trials: 50,
                master_seed: 42,
                ..suite.default_config(n)
            };
            for r in suite.run(&cfg) {
                println!("{r}");
            }
        }
    }
}
