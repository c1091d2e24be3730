//! Randomized law suites.
//!
//! Every suite draws matrices from a seeded stream: attempt `j` of a suite
//! at size `n` uses a ChaCha8 generator keyed by the master seed, the suite
//! name and `n`, on stream `j`. Attempts are evaluated in parallel chunks and
//! consumed in index order, so reports do not depend on scheduling.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::eigen::{self, Spectrum};
use crate::error::{Error, Result};
use crate::matrix::{Matrix, CHAR_POLY_BOUND};
use crate::permutation::Permutation;
use crate::polynomial::{expand_primary_product, Polynomial};
use crate::scalar::Scalar;

/// Violations beyond this many are counted but not stored.
pub const MAX_RECORDED: usize = 25;
const CHUNK: usize = 64;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialConfig {
    pub n: usize,
    pub trials: usize,
    /// Inclusive bounds for random entry values.
    pub value_range: (i64, i64),
    pub zero_density: f64,
    pub ghost_density: f64,
    pub master_seed: u64,
    /// Rejection-sampling budget per requested trial.
    pub attempts_per_trial: usize,
    /// Power bound for strong nonsingularity and generalized eigenvectors.
    pub m_max: Option<usize>,
}

impl Default for TrialConfig {
    fn default() -> Self {
        TrialConfig {
            n: 3,
            trials: 100,
            value_range: (-10, 10),
            zero_density: 0.15,
            ghost_density: 0.1,
            master_seed: 0,
            attempts_per_trial: 200,
            m_max: None,
        }
    }
}

impl TrialConfig {
    pub fn validate(&self) -> Result<()> {
        let density = |p: f64| (0.0..=1.0).contains(&p);
        if !density(self.zero_density) || !density(self.ghost_density) {
            return Err(Error::Parse("densities must lie in [0, 1]".into()));
        }
        if self.value_range.0 > self.value_range.1 {
            return Err(Error::Parse("empty value range".into()));
        }
        if self.n == 0 || self.n > CHAR_POLY_BOUND {
            return Err(Error::SizeBound {
                what: "law suites",
                size: self.n,
                bound: CHAR_POLY_BOUND,
            });
        }
        Ok(())
    }

    pub fn rng(&self, law: &str, attempt: usize) -> ChaCha8Rng {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in law.bytes().chain((self.n as u64).to_le_bytes()) {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.master_seed ^ h);
        rng.set_stream(attempt as u64);
        rng
    }

    /// `0_R` with `zero_density`, otherwise an integer from `value_range`,
    /// ghosted with `ghost_density`.
    pub fn scalar(&self, rng: &mut impl Rng) -> Scalar {
        if rng.gen_bool(self.zero_density) {
            return Scalar::zero();
        }
        let v = rng.gen_range(self.value_range.0..=self.value_range.1);
        if rng.gen_bool(self.ghost_density) {
            Scalar::ghost_int(v)
        } else {
            Scalar::int(v)
        }
    }

    pub fn matrix(&self, rng: &mut impl Rng, n: usize) -> Matrix {
        let data = (0..n * n).map(|_| self.scalar(rng)).collect();
        Matrix::new(n, n, data).expect("n×n entries")
    }

    pub fn tangible(&self, rng: &mut impl Rng) -> Scalar {
        Scalar::int(rng.gen_range(self.value_range.0..=self.value_range.1))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LawKind {
    Theorem,
    Conjecture,
    /// Agreement between two independent computations.
    Oracle,
    /// A stated equivalence checked empirically; disagreements are
    /// reported, not failed.
    CrossCheck,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// Fewer qualifying inputs than requested within the attempt budget.
    Starved,
    CounterexampleFound,
    NoCounterexample,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub attempt: usize,
    pub inputs: Vec<Matrix>,
    pub relation: String,
    pub observed: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LawReport {
    pub law: String,
    pub kind: LawKind,
    pub status: Status,
    pub config: TrialConfig,
    /// Qualifying trials checked.
    pub trials: usize,
    pub attempts: usize,
    pub acceptance_rate: f64,
    pub violation_count: usize,
    pub violations: Vec<Violation>,
    pub counters: BTreeMap<String, u64>,
    pub notes: Vec<String>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        match self.kind {
            LawKind::Theorem | LawKind::Oracle => self.status == Status::Pass,
            LawKind::Conjecture | LawKind::CrossCheck => true,
        }
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = serde_json::to_value(self.status).unwrap();
        write!(
            f,
            "{:<28} n={} {:<20} trials={}/{} attempts={} violations={}",
            self.law,
            self.config.n,
            status.as_str().unwrap(),
            self.trials,
            self.config.trials,
            self.attempts,
            self.violation_count
        )
    }
}

/// The result of checking one qualifying input.
#[derive(Debug, Default)]
struct Outcome {
    violations: Vec<Violation>,
    counters: Vec<(&'static str, u64)>,
}

impl Outcome {
    fn violate(&mut self, inputs: &[&Matrix], relation: &str, observed: String) {
        self.violations.push(Violation {
            attempt: 0,
            inputs: inputs.iter().map(|m| (*m).clone()).collect(),
            relation: relation.to_string(),
            observed,
        });
    }

    fn check(&mut self, ok: bool, inputs: &[&Matrix], relation: &str, observed: impl FnOnce() -> String) {
        if !ok {
            self.violate(inputs, relation, observed());
        }
    }

    fn count(&mut self, key: &'static str) {
        self.counters.push((key, 1));
    }
}

fn run_law<F>(law: &str, kind: LawKind, cfg: &TrialConfig, attempt: F) -> LawReport
where
    F: Fn(&mut ChaCha8Rng) -> Option<Outcome> + Sync,
{
    let budget = cfg.trials.saturating_mul(cfg.attempts_per_trial.max(1));
    let mut report = LawReport {
        law: law.to_string(),
        kind,
        status: Status::Pass,
        config: cfg.clone(),
        trials: 0,
        attempts: 0,
        acceptance_rate: 0.0,
        violation_count: 0,
        violations: Vec::new(),
        counters: BTreeMap::new(),
        notes: Vec::new(),
    };
    let mut start = 0;
    'outer: while report.trials < cfg.trials && start < budget {
        let end = (start + CHUNK.max(cfg.trials - report.trials)).min(budget);
        let results: Vec<Option<Outcome>> = (start..end)
            .into_par_iter()
            .map(|j| attempt(&mut cfg.rng(law, j)))
            .collect();
        for (j, result) in (start..end).zip(results) {
            report.attempts = j + 1;
            let Some(outcome) = result else { continue };
            report.trials += 1;
            for (key, v) in outcome.counters {
                *report.counters.entry(key.to_string()).or_default() += v;
            }
            for mut v in outcome.violations {
                report.violation_count += 1;
                if report.violations.len() < MAX_RECORDED {
                    v.attempt = j;
                    report.violations.push(v);
                }
            }
            if report.trials == cfg.trials {
                break 'outer;
            }
        }
        start = end;
    }
    if report.attempts > 0 {
        report.acceptance_rate = report.trials as f64 / report.attempts as f64;
    }
    let starved = report.trials < cfg.trials;
    if starved {
        report.notes.push(format!(
            "only {} of {} qualifying inputs found in {} attempts",
            report.trials, cfg.trials, report.attempts
        ));
    }
    report.status = match kind {
        LawKind::Theorem | LawKind::Oracle if report.violation_count > 0 => Status::Fail,
        LawKind::Theorem | LawKind::Oracle if starved => Status::Starved,
        LawKind::Theorem | LawKind::Oracle => Status::Pass,
        LawKind::Conjecture | LawKind::CrossCheck if report.violation_count > 0 => Status::CounterexampleFound,
        LawKind::Conjecture | LawKind::CrossCheck => Status::NoCounterexample,
    };
    report
}

/// `f_A(A)` is ghost or `0_R` entry-wise.
pub fn check_cayley_hamilton(cfg: &TrialConfig) -> LawReport {
    run_law("cayley-hamilton", LawKind::Theorem, cfg, |rng| {
        let a = cfg.matrix(rng, cfg.n);
        let mut out = Outcome::default();
        let f = a.char_poly().ok()?.poly;
        let value = a.eval_poly(&f).ok()?;
        out.check(value.is_ghost(), &[&a], "f_A(A) ghost", || value.to_string());
        Some(out)
    })
}

/// `det(AB) ⊨gs det(A) ⊙ det(B)`.
pub fn check_det_mult(cfg: &TrialConfig) -> LawReport {
    run_law("det-mult", LawKind::Theorem, cfg, |rng| {
        let a = cfg.matrix(rng, cfg.n);
        let b = cfg.matrix(rng, cfg.n);
        let mut out = Outcome::default();
        let lhs = a.mul(&b).ok()?.determinant().ok()?.value;
        let rhs = &a.determinant().ok()?.value * &b.determinant().ok()?.value;
        if lhs != rhs {
            out.count("strict");
        }
        out.check(lhs.ghost_surpasses(&rhs), &[&a, &b], "det(AB) ⊨gs det(A)det(B)", || {
            format!("{lhs} vs {rhs}")
        });
        Some(out)
    })
}

/// `adj(AB) ⊨gs adj(B) ⊙ adj(A)`.
pub fn check_adj_antihom(cfg: &TrialConfig) -> LawReport {
    run_law("adj-antihom", LawKind::Theorem, cfg, |rng| {
        let a = cfg.matrix(rng, cfg.n);
        let b = cfg.matrix(rng, cfg.n);
        let mut out = Outcome::default();
        let lhs = a.mul(&b).ok()?.adjoint().ok()?;
        let rhs = b.adjoint().ok()?.mul(&a.adjoint().ok()?).ok()?;
        out.check(lhs.ghost_surpasses(&rhs), &[&a, &b], "adj(AB) ⊨gs adj(B)adj(A)", || {
            format!("{lhs}\nvs\n{rhs}")
        });
        Some(out)
    })
}

/// `det(adj(A)) ≅ν det(A)^{n-1}`; layer differences are counted.
pub fn check_det_adj(cfg: &TrialConfig) -> LawReport {
    run_law("det-adj", LawKind::Theorem, cfg, |rng| {
        let a = cfg.matrix(rng, cfg.n);
        let mut out = Outcome::default();
        let lhs = a.adjoint().ok()?.determinant().ok()?.value;
        let rhs = a.determinant().ok()?.value.pow((cfg.n - 1) as u64);
        if lhs.nu_equiv(&rhs) && lhs.layer() != rhs.layer() {
            out.count("layer_divergence");
        }
        out.check(lhs.nu_equiv(&rhs), &[&a], "det(adj A) ≅ν det(A)^(n-1)", || {
            format!("{lhs} vs {rhs}")
        });
        Some(out)
    })
}

fn random_invertible(cfg: &TrialConfig, rng: &mut impl Rng) -> Matrix {
    let mut images: Vec<usize> = (0..cfg.n).collect();
    for i in (1..cfg.n).rev() {
        images.swap(i, rng.gen_range(0..=i));
    }
    let entries: Vec<Scalar> = (0..cfg.n).map(|_| cfg.tangible(rng)).collect();
    Matrix::generalized_permutation(&Permutation::new(images), &entries).expect("tangible entries")
}

/// For invertible `P` and nonsingular `A`: `P^∇ = P^{-1}`,
/// `det(PA) = det(P) det(A)` and `(PA)^∇ = A^∇ P^∇`, all exactly.
pub fn check_invertible_exactness(cfg: &TrialConfig) -> LawReport {
    run_law("invertible-exact", LawKind::Theorem, cfg, |rng| {
        let a = cfg.matrix(rng, cfg.n);
        let p = random_invertible(cfg, rng);
        if !a.is_nonsingular().ok()? {
            return None;
        }
        let mut out = Outcome::default();
        let pn = p.quasi_inverse().ok()?;
        out.check(pn.mul(&p).ok()? == Matrix::identity(cfg.n), &[&p], "P^∇ = P^-1", || pn.to_string());
        let pa = p.mul(&a).ok()?;
        let lhs = pa.determinant().ok()?.value;
        let rhs = &p.determinant().ok()?.value * &a.determinant().ok()?.value;
        out.check(lhs == rhs, &[&p, &a], "det(PA) = det(P)det(A)", || format!("{lhs} vs {rhs}"));
        let lhs = pa.quasi_inverse().ok()?;
        let rhs = a.quasi_inverse().ok()?.mul(&pn).ok()?;
        out.check(lhs == rhs, &[&p, &a], "(PA)^∇ = A^∇ P^∇", || format!("{lhs}\nvs\n{rhs}"));
        Some(out)
    })
}

/// For nonsingular `A`, `A A^∇` and `A^∇ A` are quasi-identities (which
/// includes idempotence).
pub fn check_quasi_identity(cfg: &TrialConfig) -> LawReport {
    run_law("quasi-identity", LawKind::Theorem, cfg, |rng| {
        let a = cfg.matrix(rng, cfg.n);
        if !a.is_nonsingular().ok()? {
            return None;
        }
        let mut out = Outcome::default();
        let q = a.quasi_inverse().ok()?;
        for (name, i_a) in [("A A^∇", a.mul(&q).ok()?), ("A^∇ A", q.mul(&a).ok()?)] {
            let ok = i_a.is_quasi_identity().ok()?;
            out.check(ok, &[&a], &format!("{name} quasi-identity"), || i_a.to_string());
        }
        Some(out)
    })
}

/// Outcome of one `⊨gs` comparison of polynomials under both semantics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRelation {
    /// `⊨gs` between the functional normal forms, degree by degree.
    pub normal_form: bool,
    /// `⊨gs` of the values at every critical point.
    pub functional: bool,
    /// `⊨gs` of the raw coefficients.
    pub raw: bool,
    /// The normal forms differ, so the surpassing is strict.
    pub strict: bool,
}

pub fn relate(lhs: &Polynomial, rhs: &Polynomial) -> PolyRelation {
    let (l, r) = (lhs.functional_normal_form(), rhs.functional_normal_form());
    PolyRelation {
        normal_form: l.ghost_surpasses(&r),
        functional: lhs.ghost_surpasses_as_function(rhs),
        raw: lhs.ghost_surpasses(rhs),
        strict: l.strictly_ghost_surpasses(&r),
    }
}

/// `f_{A^m}(x^m)` and `f_A(x)^m`.
pub fn cpip_power_sides(a: &Matrix, m: usize) -> Result<(Polynomial, Polynomial)> {
    let lhs = a.pow(m as u64)?.char_poly()?.poly.substitute_power(m);
    let rhs = a.char_poly()?.poly.pow(m as u32);
    Ok((lhs, rhs))
}

/// `det(A) ⊙ f_{A^∇}(x)` and `x^n ⊙ f_A(x^{-1})`.
pub fn cpip_nabla_sides(a: &Matrix) -> Result<(Polynomial, Polynomial)> {
    let det = a.determinant()?.value;
    let lhs = a.quasi_inverse()?.char_poly()?.poly.scale(&det);
    let rhs = a.char_poly()?.poly.reverse_scale(&Scalar::one());
    Ok((lhs, rhs))
}

fn record_relation(out: &mut Outcome, a: &Matrix, name: &str, lhs: &Polynomial, rhs: &Polynomial) {
    let rel = relate(lhs, rhs);
    if !rel.raw {
        out.count("raw_coefficient_fail");
    }
    if rel.strict {
        out.count("strict");
    }
    if rel.normal_form != rel.functional {
        out.count("semantics_disagree");
    }
    out.check(rel.normal_form, &[a], &format!("{name} (coefficient-wise)"), || {
        format!("{lhs}  vs  {rhs}")
    });
    out.check(rel.functional, &[a], &format!("{name} (as functions)"), || {
        format!("{lhs}  vs  {rhs}")
    });
}

/// `f_{A^m}(x^m) ⊨gs f_A(x)^m` for nonsingular `A`.
pub fn check_cpip_power(cfg: &TrialConfig, m: usize) -> LawReport {
    let law = format!("cpip-power-m{m}");
    run_law(&law, LawKind::Theorem, cfg, |rng| {
        let a = cfg.matrix(rng, cfg.n);
        if !a.is_nonsingular().ok()? {
            return None;
        }
        let mut out = Outcome::default();
        let (lhs, rhs) = cpip_power_sides(&a, m).ok()?;
        record_relation(&mut out, &a, "f_{A^m}(x^m) ⊨gs f_A(x)^m", &lhs, &rhs);
        Some(out)
    })
}

/// `det(A) f_{A^∇}(x) ⊨gs x^n f_A(x^{-1})` for nonsingular `A`.
pub fn check_cpip_nabla(cfg: &TrialConfig) -> LawReport {
    run_law("cpip-nabla", LawKind::Theorem, cfg, |rng| {
        let a = cfg.matrix(rng, cfg.n);
        if !a.is_nonsingular().ok()? {
            return None;
        }
        let mut out = Outcome::default();
        let (lhs, rhs) = cpip_nabla_sides(&a).ok()?;
        record_relation(&mut out, &a, "det(A) f_{A^∇}(x) ⊨gs x^n f_A(x^-1)", &lhs, &rhs);
        Some(out)
    })
}

/// Nonsingular, tangible characteristic coefficients, `n` distinct
/// eigenvalues.
pub fn independence_hypotheses(a: &Matrix) -> Result<Option<Spectrum>> {
    if !a.is_nonsingular()? {
        return Ok(None);
    }
    let quick = eigen::eigenvalues(a)?;
    if !(quick.char_report.is_tangible() && quick.has_distinct_eigenvalues()) {
        return Ok(None);
    }
    eigen::spectrum(a).map(Some)
}

fn check_independent(out: &mut Outcome, a: &Matrix, spec: &Spectrum) {
    out.check(spec.basis.is_complete(), &[a], "n eigenvectors extracted", || {
        format!("{} of {}", spec.basis.columns.len(), spec.basis.needed)
    });
    let det = spec.dependence.determinant.as_ref().map(|d| d.value.clone());
    out.check(!spec.dependence.dependent, &[a], "det(W) tangible", || {
        format!("det(W) = {}", det.map_or("?".to_string(), |d| d.to_string()))
    });
}

/// Independence of eigenvectors for `n ∈ {2, 3}` without the difference
/// criterion.
pub fn check_independence_low_dim(cfg: &TrialConfig) -> LawReport {
    let mut report = run_law("independence-low-dim", LawKind::Theorem, cfg, |rng| {
        let a = cfg.matrix(rng, cfg.n);
        let spec = independence_hypotheses(&a).ok()??;
        let mut out = Outcome::default();
        if !spec.difference_criterion {
            out.count("difference_criterion_false");
        }
        check_independent(&mut out, &a, &spec);
        Some(out)
    });
    if cfg.n > 3 {
        report.notes.push("the low-dimension statement only covers n ∈ {2, 3}".into());
    }
    report
}

/// Independence under the difference criterion, plus the diagonal
/// normalization of `W`.
pub fn check_difference_criterion_theorem(cfg: &TrialConfig) -> LawReport {
    run_law("difference-criterion", LawKind::Theorem, cfg, |rng| {
        let a = cfg.matrix(rng, cfg.n);
        let spec = independence_hypotheses(&a).ok()??;
        if !spec.difference_criterion {
            return None;
        }
        let mut out = Outcome::default();
        check_independent(&mut out, &a, &spec);
        let diag = eigen::normalized_diagonal_holds(&spec);
        out.check(diag == Some(true), &[&a], "w_{j_k,k} ≅ν λ_1⋯λ_{k-1} λ_k^(n-k)", || {
            format!("{diag:?}\nW =\n{}", spec.w())
        });
        Some(out)
    })
}

/// Claims about the quasi-inverse of a matrix with dependent eigenvectors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureClaims {
    /// `det(A) f_{A^∇}` strictly surpasses `x^n f_A(x^{-1})`.
    pub strict_nabla: bool,
    /// `f_{A^∇}` differs from its essential part.
    pub nabla_inessential: bool,
    pub nabla_distinct_eigenvalues: usize,
    pub distinct_eigenvalues: usize,
    /// The eigenvectors of `A^∇` are independent.
    pub nabla_independent: bool,
}

impl ConjectureClaims {
    /// `A^∇` has fewer distinct eigenvalues, read unconditionally.
    pub fn fewer_eigenvalues(&self) -> bool {
        self.nabla_distinct_eigenvalues < self.distinct_eigenvalues
    }

    /// The same claim, only required when `f_{A^∇} ≠ f^es_{A^∇}`.
    pub fn fewer_eigenvalues_conditional(&self) -> bool {
        !self.nabla_inessential || self.fewer_eigenvalues()
    }
}

pub fn conjecture_claims(a: &Matrix, spec: &Spectrum) -> Result<ConjectureClaims> {
    let q = a.quasi_inverse()?;
    let qspec = eigen::spectrum(&q)?;
    let (lhs, rhs) = cpip_nabla_sides(a)?;
    Ok(ConjectureClaims {
        strict_nabla: relate(&lhs, &rhs).strict,
        nabla_inessential: qspec.char_report.poly != qspec.essential,
        nabla_distinct_eigenvalues: qspec.eigenvalues.len(),
        distinct_eigenvalues: spec.eigenvalues.len(),
        nabla_independent: !qspec.dependence.dependent,
    })
}

/// Samples nonsingular matrices with `n` distinct eigenvalues. Those with
/// dependent eigenvectors are the qualifying trials for the first family of
/// claims; the claim about `A^∇` having `n` distinct eigenvalues is checked
/// on every sample and tallied in the counters.
pub fn conjecture_experiment(cfg: &TrialConfig) -> LawReport {
    let mut report = run_law("conjecture", LawKind::Conjecture, cfg, |rng| {
        let a = cfg.matrix(rng, cfg.n);
        if !a.is_nonsingular().ok()? {
            return None;
        }
        let spec = eigen::spectrum(&a).ok()?;
        if !spec.has_distinct_eigenvalues() || !spec.basis.is_complete() || !spec.dependence.dependent {
            return None;
        }
        let claims = conjecture_claims(&a, &spec).ok()?;
        let mut out = Outcome::default();
        let observed = || serde_json::to_string(&claims).unwrap();
        out.check(claims.strict_nabla, &[&a], "strict nabla surpassing", observed);
        if claims.nabla_inessential {
            out.count("nabla_inessential");
        }
        if !claims.fewer_eigenvalues() {
            out.count("fewer_eigenvalues_unconditional_fails");
        }
        out.check(
            claims.fewer_eigenvalues(),
            &[&a],
            "fewer distinct eigenvalues of A^∇, read unconditionally",
            observed,
        );
        out.check(claims.fewer_eigenvalues_conditional(), &[&a], "fewer distinct eigenvalues of A^∇", observed);
        out.check(claims.nabla_independent, &[&a], "eigenvectors of A^∇ independent", observed);
        Some(out)
    });
    let second = second_conjecture_tally(cfg);
    report.counters.extend(second.counters);
    report.violation_count += second.violation_count;
    report.violations.extend(second.violations.into_iter().take(MAX_RECORDED));
    if report.violation_count > 0 {
        report.status = Status::CounterexampleFound;
    }
    report
        .notes
        .push("conjectures are reported as statistics, never as failures".into());
    report
}

/// If `A^∇` has `n` distinct eigenvalues, its eigenvectors are independent.
fn second_conjecture_tally(cfg: &TrialConfig) -> LawReport {
    let mut sub = cfg.clone();
    sub.attempts_per_trial = 1;
    let mut report = run_law("conjecture-nabla-distinct", LawKind::Conjecture, &sub, |rng| {
        let a = sub.matrix(rng, sub.n);
        let q = a.quasi_inverse().ok()?;
        let mut out = Outcome::default();
        out.count("second_sampled");
        let qspec = eigen::spectrum(&q).ok()?;
        if qspec.has_distinct_eigenvalues() {
            out.count("second_applicable");
            out.check(!qspec.dependence.dependent, &[&a], "A^∇ with n distinct eigenvalues has independent eigenvectors", || {
                format!("A^∇ =\n{q}")
            });
        }
        Some(out)
    });
    report.counters.insert("second_attempts".into(), report.attempts as u64);
    report
}

/// Strongly nonsingular `A`: one tangible generator per `V'_{λ_i}`, and the
/// chosen generators are independent. Also checks that no adjoint-derived
/// candidate is a degenerate generalized eigenvector.
pub fn check_generalized_independence(cfg: &TrialConfig) -> LawReport {
    run_law("generalized-independence", LawKind::Theorem, cfg, |rng| {
        let a = cfg.matrix(rng, cfg.n);
        let strong = a.strong_nonsingularity(cfg.m_max).ok()?;
        if !strong.holds {
            return None;
        }
        let fact = a.char_poly().ok()?.poly.primary_factorization()?;
        if fact.residue {
            return None;
        }
        let mut out = Outcome::default();
        if strong.truncated {
            out.count("strong_nonsingularity_truncated");
        }
        let mut chosen = Vec::new();
        for (lambda, _) in &fact.factors {
            let sub = eigen::generalized_subspace_generators(&a, lambda).ok()?;
            match sub.ghost_free_generators.first() {
                Some(g) => chosen.push(g.clone()),
                None => out.count("subspace_without_ghost_free_generator"),
            }
            for v in &sub.ghost_free_generators {
                let r = eigen::is_generalized_eigenvector(&a, lambda, v, cfg.m_max).ok()?;
                out.check(!r.degenerate, &[&a], "no degenerate generalized eigenvector", || {
                    crate::scalar::format_vector(v)
                });
                if r.multiplicity.is_none() {
                    out.count("generator_multiplicity_beyond_m_max");
                }
            }
        }
        let verdict = eigen::vectors_dependent(&chosen).ok()?;
        out.check(!verdict.dependent, &[&a], "V'_λ generators independent", || {
            chosen.iter().map(|v| crate::scalar::format_vector(v)).collect::<Vec<_>>().join(" ")
        });
        Some(out)
    })
}

/// Every extracted eigenvector satisfies `A v ⊨gs λ v`, the weakening
/// chain holds for `m = 1..=3`, powers stay eigenpairs, and generalized
/// eigenspaces are closed under `v ⊕ a u`.
pub fn check_eigen_hierarchy(cfg: &TrialConfig) -> LawReport {
    run_law("eigen-hierarchy", LawKind::Theorem, cfg, |rng| {
        let a = cfg.matrix(rng, cfg.n);
        let spec = eigen::spectrum(&a).ok()?;
        if spec.eigenvectors.is_empty() {
            return None;
        }
        let mut out = Outcome::default();
        for e in &spec.eigenvectors {
            let lambda = &e.eigenvalue;
            let ok = eigen::is_eigenpair(&a, lambda, &e.vector).ok()?;
            out.check(ok, &[&a], "A v ⊨gs λ v", || format!("λ = {lambda}, v = {:?}", e.vector));
            for m in 1..=3 {
                let h = eigen::eigen_hierarchy(&a, lambda, &e.vector, m).ok()?;
                out.check(h.is_consistent(), &[&a], "eigen hierarchy", || format!("m = {m}: {h:?}"));
                let p = eigen::check_power_eigenpair(&a, lambda, &e.vector, m).ok()?;
                out.check(p, &[&a], "A^i v ⊨gs λ^i v", || format!("λ = {lambda}, i = {m}"));
            }
        }
        for pair in spec.eigenvectors.windows(2) {
            let (v, u) = (&pair[0], &pair[1]);
            if v.eigenvalue != u.eigenvalue {
                continue;
            }
            let c = cfg.tangible(rng);
            let ok = eigen::generalized_closure_holds(&a, &v.eigenvalue, (&v.vector, 1), (&u.vector, 1), &c).ok()?;
            out.count("closure_checked");
            out.check(ok, &[&a], "V_λ closed under v ⊕ a u", || format!("a = {c}"));
        }
        Some(out)
    })
}

/// Difference criterion against distinct diagonal of `A^{n!}`, counted
/// over inputs satisfying the independence hypotheses.
pub fn check_difference_diagonal(cfg: &TrialConfig) -> LawReport {
    let fact: u64 = (1..=cfg.n as u64).product();
    run_law("difference-diagonal", LawKind::CrossCheck, cfg, |rng| {
        let a = cfg.matrix(rng, cfg.n);
        let spec = independence_hypotheses(&a).ok()??;
        let mut out = Outcome::default();
        let diag = a.diagonal_distinctness(fact).ok()?;
        out.count(match (spec.difference_criterion, diag) {
            (true, true) => "both_true",
            (false, false) => "both_false",
            (true, false) => "criterion_only",
            (false, true) => "diagonal_only",
        });
        out.check(spec.difference_criterion == diag, &[&a], "difference criterion ⇔ distinct diagonal of A^(n!)", || {
            format!("criterion {}, diagonal {diag}", spec.difference_criterion)
        });
        Some(out)
    })
}

/// Determinant by enumeration against Laplace expansion along a random row,
/// on sizes `1..=n`.
pub fn check_det_oracle(cfg: &TrialConfig) -> LawReport {
    run_law("oracle-det", LawKind::Oracle, cfg, |rng| {
        let size = rng.gen_range(1..=cfg.n);
        let a = cfg.matrix(rng, size);
        let row = rng.gen_range(0..size);
        let mut out = Outcome::default();
        let lhs = a.determinant().ok()?.value;
        let rhs = a.determinant_by_row_expansion(row).ok()?;
        out.check(lhs == rhs, &[&a], "enumeration = expansion", || format!("{lhs} vs {rhs}"));
        Some(out)
    })
}

/// Roots of an expanded primary product give back its factors, and the
/// primary factorization of a random tangible polynomial expands to the
/// same function. Degrees are at most `n`.
pub fn check_roots_oracle(cfg: &TrialConfig) -> LawReport {
    run_law("oracle-roots", LawKind::Oracle, cfg, |rng| {
        let mut out = Outcome::default();
        let dummy = Matrix::zeros(0, 0);
        let degree = rng.gen_range(0..=cfg.n);
        let zero = rng.gen_range(0..=degree.min(1));
        let mut remaining = degree - zero;
        let mut factors: Vec<(Scalar, usize)> = Vec::new();
        while remaining > 0 {
            let m = rng.gen_range(1..=remaining);
            let r = cfg.tangible(rng);
            match factors.iter_mut().find(|(x, _)| *x == r) {
                Some(f) => f.1 += m,
                None => factors.push((r, m)),
            }
            remaining -= m;
        }
        factors.sort_by(|a, b| b.0.nu_cmp(&a.0));
        let lead = cfg.tangible(rng);
        let f = expand_primary_product(&factors).mul(&Polynomial::monomial(lead, zero));
        let roots = f.roots();
        let got: Vec<(Scalar, usize)> = roots.roots.iter().map(|r| (r.value.clone(), r.multiplicity)).collect();
        out.check(got == factors && roots.zero_multiplicity == zero, &[&dummy], "roots ∘ expand = id", || {
            format!("{f}: {got:?} + 0^{}, expected {factors:?} + 0^{zero}", roots.zero_multiplicity)
        });
        let coeffs: Vec<Scalar> = (0..=degree).map(|_| cfg.tangible(rng)).collect();
        let g = Polynomial::from_descending(&coeffs);
        match g.primary_factorization() {
            Some(fac) if !fac.residue => {
                let e = fac.expand();
                out.check(e.equals_as_function(&g), &[&dummy], "expand ∘ factor = id as functions", || {
                    format!("{g} vs {e}")
                });
            }
            _ => out.violate(&[&dummy], "tangible polynomial factors", g.to_string()),
        }
        Some(out)
    })
}

/// Named collections of laws run by `verify`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    CayleyHamilton,
    DetMult,
    AdjAntihom,
    DetAdj,
    InvertibleExact,
    QuasiIdentity,
    CpipPower,
    CpipNabla,
    IndependenceLowDim,
    DifferenceCriterion,
    GeneralizedIndependence,
    EigenHierarchy,
    DifferenceDiagonal,
    OracleDet,
    OracleRoots,
    Conjecture,
}

impl Suite {
    pub const ALL: [Suite; 16] = [
        Suite::CayleyHamilton,
        Suite::DetMult,
        Suite::AdjAntihom,
        Suite::DetAdj,
        Suite::InvertibleExact,
        Suite::QuasiIdentity,
        Suite::CpipPower,
        Suite::CpipNabla,
        Suite::IndependenceLowDim,
        Suite::DifferenceCriterion,
        Suite::GeneralizedIndependence,
        Suite::EigenHierarchy,
        Suite::DifferenceDiagonal,
        Suite::OracleDet,
        Suite::OracleRoots,
        Suite::Conjecture,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::CayleyHamilton => "cayley-hamilton",
            Suite::DetMult => "det-mult",
            Suite::AdjAntihom => "adj-antihom",
            Suite::DetAdj => "det-adj",
            Suite::InvertibleExact => "invertible-exact",
            Suite::QuasiIdentity => "quasi-identity",
            Suite::CpipPower => "cpip-power",
            Suite::CpipNabla => "cpip-nabla",
            Suite::IndependenceLowDim => "independence-low-dim",
            Suite::DifferenceCriterion => "difference-criterion",
            Suite::GeneralizedIndependence => "generalized-independence",
            Suite::EigenHierarchy => "eigen-hierarchy",
            Suite::DifferenceDiagonal => "difference-diagonal",
            Suite::OracleDet => "oracle-det",
            Suite::OracleRoots => "oracle-roots",
            Suite::Conjecture => "conjecture",
        }
    }

    /// Sizes used when none are given.
    pub fn default_sizes(self) -> &'static [usize] {
        match self {
            Suite::IndependenceLowDim => &[2, 3],
            Suite::DifferenceCriterion => &[4, 5],
            Suite::OracleDet => &[5],
            Suite::OracleRoots => &[6],
            Suite::Conjecture | Suite::DifferenceDiagonal | Suite::GeneralizedIndependence => &[4],
            _ => &[2, 3, 4],
        }
    }

    /// Entry distribution tuned so that hypothesis filters accept often
    /// enough.
    pub fn default_config(self, n: usize) -> TrialConfig {
        let base = TrialConfig {
            n,
            ..TrialConfig::default()
        };
        match self {
            Suite::IndependenceLowDim
            | Suite::DifferenceCriterion
            | Suite::DifferenceDiagonal
            | Suite::Conjecture
            | Suite::GeneralizedIndependence => TrialConfig {
                value_range: (-30, 30),
                zero_density: 0.1,
                ghost_density: 0.0,
                ..base
            },
            Suite::OracleRoots => TrialConfig {
                zero_density: 0.0,
                ghost_density: 0.0,
                ..base
            },
            _ => base,
        }
    }

    pub fn run(self, cfg: &TrialConfig) -> Vec<LawReport> {
        match self {
            Suite::CayleyHamilton => vec![check_cayley_hamilton(cfg)],
            Suite::DetMult => vec![check_det_mult(cfg)],
            Suite::AdjAntihom => vec![check_adj_antihom(cfg)],
            Suite::DetAdj => vec![check_det_adj(cfg)],
            Suite::InvertibleExact => vec![check_invertible_exactness(cfg)],
            Suite::QuasiIdentity => vec![check_quasi_identity(cfg)],
            Suite::CpipPower => vec![check_cpip_power(cfg, 2), check_cpip_power(cfg, 3)],
            Suite::CpipNabla => vec![check_cpip_nabla(cfg)],
            Suite::IndependenceLowDim => vec![check_independence_low_dim(cfg)],
            Suite::DifferenceCriterion => vec![check_difference_criterion_theorem(cfg)],
            Suite::GeneralizedIndependence => vec![check_generalized_independence(cfg)],
            Suite::EigenHierarchy => vec![check_eigen_hierarchy(cfg)],
            Suite::DifferenceDiagonal => vec![check_difference_diagonal(cfg)],
            Suite::OracleDet => vec![check_det_oracle(cfg)],
            Suite::OracleRoots => vec![check_roots_oracle(cfg)],
            Suite::Conjecture => vec![conjecture_experiment(cfg)],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite '{s}'")))
    }
}

/// `f_A(A)` for the given matrix is ghost.
pub fn cayley_hamilton_holds(a: &Matrix) -> Result<bool> {
    Ok(a.eval_poly(&a.char_poly()?.poly)?.is_ghost())
}

/// Claims of the conjecture experiment evaluated on one matrix, if it has
/// `n` distinct eigenvalues and dependent eigenvectors.
pub fn conjecture_instance(a: &Matrix) -> Result<Option<ConjectureClaims>> {
    if !a.is_nonsingular()? {
        return Ok(None);
    }
    let spec = eigen::spectrum(a)?;
    if !spec.has_distinct_eigenvalues() || !spec.basis.is_complete() || !spec.dependence.dependent {
        return Ok(None);
    }
    conjecture_claims(a, &spec).map(Some)
}
