use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use supertropical::laws::{conjecture_experiment, Suite, TrialConfig};
use supertropical::report::{self, AnalysisOptions, LawsDocument};
use supertropical::{Error, Matrix};

#[derive(Parser)]
#[command(name = "supertrop", version, about = "Supertropical matrix analysis and law checking")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze the matrix in a text file.
    Analyze {
        path: PathBuf,
        #[arg(long)]
        json: bool,
        /// Also report adj(A) and the quasi-inverse.
        #[arg(long)]
        adjoint: bool,
        /// Also report generalized eigenspaces.
        #[arg(long)]
        generalized: bool,
    },
    /// Run law suites on seeded random matrices.
    Verify {
        /// Suites to run; all but `conjecture` when omitted.
        suites: Vec<Suite>,
        #[command(flatten)]
        sampling: Sampling,
        #[arg(long)]
        json: bool,
    },
    /// Search for counterexamples to the conjectured properties of A^nabla.
    Experiment {
        #[command(flatten)]
        sampling: Sampling,
        /// Writes `experiment.json` and one matrix file per counterexample.
        #[arg(long)]
        out_dir: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct Sampling {
    /// Matrix sizes (repeatable).
    #[arg(long = "n")]
    sizes: Vec<usize>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long, env = "SUPERTROP_SEED", default_value_t = 0)]
    seed: u64,
    /// Inclusive entry range, `LO..HI`.
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    value_range: Option<(i64, i64)>,
    #[arg(long)]
    zero_density: Option<f64>,
    #[arg(long)]
    ghost_density: Option<f64>,
    #[arg(long)]
    m_max: Option<usize>,
    #[arg(long)]
    attempts_per_trial: Option<usize>,
}

impl Sampling {
    fn apply(&self, mut cfg: TrialConfig) -> TrialConfig {
        cfg.master_seed = self.seed;
        if let Some(t) = self.trials {
            cfg.trials = t;
        }
        if let Some(r) = self.value_range {
            cfg.value_range = r;
        }
        if let Some(p) = self.zero_density {
            cfg.zero_density = p;
        }
        if let Some(p) = self.ghost_density {
            cfg.ghost_density = p;
        }
        if let Some(a) = self.attempts_per_trial {
            cfg.attempts_per_trial = a;
        }
        if self.m_max.is_some() {
            cfg.m_max = self.m_max;
        }
        cfg
    }

    fn sizes<'a>(&'a self, defaults: &'a [usize]) -> &'a [usize] {
        if self.sizes.is_empty() {
            defaults
        } else {
            &self.sizes
        }
    }
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s.split_once("..").ok_or("expected LO..HI")?;
    let lo = lo.trim().parse().map_err(|e| format!("{e}"))?;
    let hi = hi.trim().parse().map_err(|e| format!("{e}"))?;
    Ok((lo, hi))
}

fn exit_for(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    match e {
        Error::SizeBound { .. } => ExitCode::from(3),
        _ => ExitCode::from(2),
    }
}

fn emit<T: serde::Serialize>(json: bool, value: &T, human: impl FnOnce() -> String) {
    let text = if json {
        serde_json::to_string_pretty(value).expect("reports serialize") + "\n"
    } else {
        human()
    };
    // A closed pipe is not an error for a report writer.
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn analyze(path: &PathBuf, json: bool, options: AnalysisOptions) -> ExitCode {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(2);
        }
    };
    let result = text.parse::<Matrix>().and_then(|a| report::analyze(&a, options));
    match result {
        Ok(r) => {
            emit(json, &r, || report::render(&r));
            ExitCode::SUCCESS
        }
        Err(e) => exit_for(&e),
    }
}

fn verify(suites: &[Suite], sampling: &Sampling, json: bool) -> ExitCode {
    let suites: Vec<Suite> = if suites.is_empty() {
        Suite::ALL.into_iter().filter(|s| *s != Suite::Conjecture).collect()
    } else {
        suites.to_vec()
    };
    let mut reports = Vec::new();
    for suite in suites {
        for &n in sampling.sizes(suite.default_sizes()) {
            let cfg = sampling.apply(suite.default_config(n));
            if let Err(e) = cfg.validate() {
                return exit_for(&e);
            }
            reports.extend(suite.run(&cfg));
        }
    }
    let doc = LawsDocument::new(sampling.seed, reports);
    emit(json, &doc, || report::render_laws(&doc));
    if doc.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn experiment(sampling: &Sampling, out_dir: Option<&PathBuf>, json: bool) -> ExitCode {
    let mut reports = Vec::new();
    for &n in sampling.sizes(&[4]) {
        let cfg = sampling.apply(TrialConfig {
            trials: 20,
            attempts_per_trial: 2500,
            ..Suite::Conjecture.default_config(n)
        });
        if let Err(e) = cfg.validate() {
            return exit_for(&e);
        }
        reports.push(conjecture_experiment(&cfg));
    }
    let doc = LawsDocument::new(sampling.seed, reports);
    if let Some(dir) = out_dir {
        if let Err(e) = write_experiment(dir, &doc) {
            eprintln!("error: {}: {e}", dir.display());
            return ExitCode::from(1);
        }
    }
    emit(json, &doc, || report::render_laws(&doc));
    ExitCode::SUCCESS
}

fn write_experiment(dir: &PathBuf, doc: &LawsDocument) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    let stats = serde_json::to_string_pretty(doc).expect("reports serialize");
    fs::write(dir.join("experiment.json"), stats + "\n")?;
    for r in &doc.reports {
        for v in &r.violations {
            let Some(a) = v.inputs.first() else { continue };
            let name = format!("counterexample-n{}-attempt{}.txt", r.config.n, v.attempt);
            let body = format!(
                "# {} fails: {}\n# seed {} attempt {}\n{a}\n",
                r.law, v.relation, doc.master_seed, v.attempt
            );
            fs::write(dir.join(name), body)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Analyze {
            path,
            json,
            adjoint,
            generalized,
        } => analyze(
            path,
            *json,
            AnalysisOptions {
                adjoint: *adjoint,
                generalized: *generalized,
            },
        ),
        Command::Verify { suites, sampling, json } => verify(suites, sampling, *json),
        Command::Experiment { sampling, out_dir, json } => experiment(sampling, out_dir.as_ref(), *json),
    }
}
