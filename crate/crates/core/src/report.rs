//! Analysis and verification reports.
//!
//! Reports carry scalars, polynomials and matrices in their text syntax and
//! index sets 1-based, so the structured and the human renderings hold the
//! same data.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::eigen::{self, DependenceRule, DependenceVerdict, Spectrum};
use crate::error::{Error, Result};
use crate::laws::LawReport;
use crate::matrix::{format_index_set, DetResult, Matrix, StrongNonsingularity};
use crate::scalar::{format_vector, Scalar};

pub const ANALYSIS_SCHEMA: &str = "supertrop.analysis";
pub const LAWS_SCHEMA: &str = "supertrop.laws";
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, Default)]
pub struct AnalysisOptions {
    pub adjoint: bool,
    pub generalized: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetSummary {
    pub value: String,
    pub tangible: bool,
    pub dominant_permutations: Vec<String>,
    pub dominant_count: usize,
}

impl From<&DetResult> for DetSummary {
    fn from(d: &DetResult) -> Self {
        DetSummary {
            value: d.value.to_string(),
            tangible: d.is_tangible(),
            dominant_permutations: d.dominant_permutations.iter().map(|p| p.to_string()).collect(),
            dominant_count: d.dominant_count,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenvalueSummary {
    pub value: String,
    pub multiplicity: usize,
    pub index_set: Option<Vec<usize>>,
    pub corner: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenvectorSummary {
    pub eigenvalue: String,
    pub column: usize,
    pub vector: Vec<String>,
    pub in_w: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DependenceSummary {
    pub dependent: bool,
    pub rule: DependenceRule,
    pub determinant: Option<DetSummary>,
    pub witness: Option<Vec<String>>,
}

impl From<&DependenceVerdict> for DependenceSummary {
    fn from(v: &DependenceVerdict) -> Self {
        DependenceSummary {
            dependent: v.dependent,
            rule: v.rule,
            determinant: v.determinant.as_ref().map(DetSummary::from),
            witness: v.witness.as_ref().map(|w| tokens(w)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubspaceSummary {
    pub eigenvalue: String,
    pub multiplicity: usize,
    pub cofactor: String,
    pub generators: Vec<String>,
    pub ghost_free_generators: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneralizedSummary {
    pub strong_nonsingularity: StrongNonsingularity,
    pub subspaces: Vec<SubspaceSummary>,
    /// Why the subspaces could not be formed, if they could not.
    pub unavailable: Option<String>,
    /// Generalized multiplicity of every eigenvector, in eigenvector order.
    pub eigenvector_multiplicities: Vec<Option<usize>>,
    pub degenerate_eigenvectors: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: String,
    pub schema_version: u32,
    pub size: usize,
    pub matrix: Vec<String>,
    pub determinant: DetSummary,
    pub char_poly: String,
    /// `α_0 .. α_n`.
    pub coefficients: Vec<String>,
    /// `Ind_0 .. Ind_n`, 1-based.
    pub index_sets: Vec<Option<Vec<usize>>>,
    pub essential_poly: String,
    pub eigenvalues: Vec<EigenvalueSummary>,
    pub ghost_intervals: Vec<String>,
    pub zero_multiplicity: usize,
    pub eigenvectors: Vec<EigenvectorSummary>,
    pub w: Vec<String>,
    pub w_complete: bool,
    pub dependence: DependenceSummary,
    pub difference_criterion: bool,
    pub adjoint: Option<Vec<String>>,
    pub quasi_inverse: Option<Vec<String>>,
    pub generalized: Option<GeneralizedSummary>,
}

fn tokens(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_string).collect()
}

fn one_based(set: &[usize]) -> Vec<usize> {
    set.iter().map(|i| i + 1).collect()
}

fn rows(m: &Matrix) -> Vec<String> {
    m.to_string().lines().map(str::to_string).collect()
}

pub fn analyze(a: &Matrix, options: AnalysisOptions) -> Result<AnalysisReport> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let determinant = a.determinant()?;
    let spec = eigen::spectrum(a)?;
    let (adjoint, quasi_inverse) = if options.adjoint {
        let q = a.quasi_inverse().ok().map(|q| rows(&q));
        (Some(rows(&a.adjoint()?)), q)
    } else {
        (None, None)
    };
    let generalized = options
        .generalized
        .then(|| generalized_summary(a, &spec))
        .transpose()?;
    Ok(AnalysisReport {
        schema: ANALYSIS_SCHEMA.into(),
        schema_version: SCHEMA_VERSION,
        size: a.rows(),
        matrix: rows(a),
        determinant: DetSummary::from(&determinant),
        char_poly: spec.char_report.poly.to_string(),
        coefficients: tokens(&spec.char_report.coefficients),
        index_sets: spec
            .char_report
            .index_sets
            .iter()
            .map(|s| s.as_deref().map(one_based))
            .collect(),
        essential_poly: spec.essential.to_string(),
        eigenvalues: spec
            .eigenvalues
            .iter()
            .map(|e| EigenvalueSummary {
                value: e.value.to_string(),
                multiplicity: e.multiplicity,
                index_set: e.index_set.as_deref().map(one_based),
                corner: e.is_corner,
            })
            .collect(),
        ghost_intervals: spec.ghost_intervals.iter().map(|i| i.to_string()).collect(),
        zero_multiplicity: spec.zero_multiplicity,
        eigenvectors: spec
            .eigenvectors
            .iter()
            .map(|e| EigenvectorSummary {
                eigenvalue: e.eigenvalue.to_string(),
                column: e.column + 1,
                vector: tokens(&e.vector),
                in_w: spec.basis.columns.contains(e),
            })
            .collect(),
        w: rows(&spec.w()),
        w_complete: spec.basis.is_complete(),
        dependence: DependenceSummary::from(&spec.dependence),
        difference_criterion: spec.difference_criterion,
        adjoint,
        quasi_inverse,
        generalized,
    })
}

fn generalized_summary(a: &Matrix, spec: &Spectrum) -> Result<GeneralizedSummary> {
    let strong_nonsingularity = a.strong_nonsingularity(None)?;
    let mut subspaces = Vec::new();
    let mut unavailable = None;
    for ev in &spec.eigenvalues {
        match eigen::generalized_subspace_generators(a, &ev.value) {
            Ok(sub) => subspaces.push(SubspaceSummary {
                eigenvalue: sub.eigenvalue.to_string(),
                multiplicity: sub.multiplicity,
                cofactor: sub.cofactor.to_string(),
                generators: rows(&sub.generators),
                ghost_free_generators: sub.ghost_free_generators.iter().map(|g| tokens(g)).collect(),
            }),
            Err(e) => {
                unavailable = Some(e.to_string());
                subspaces.clear();
                break;
            }
        }
    }
    let mut eigenvector_multiplicities = Vec::new();
    let mut degenerate_eigenvectors = 0;
    for e in &spec.eigenvectors {
        let r = eigen::is_generalized_eigenvector(a, &e.eigenvalue, &e.vector, None)?;
        eigenvector_multiplicities.push(r.multiplicity);
        degenerate_eigenvectors += usize::from(r.degenerate);
    }
    Ok(GeneralizedSummary {
        strong_nonsingularity,
        subspaces,
        unavailable,
        eigenvector_multiplicities,
        degenerate_eigenvectors,
    })
}

fn set_text(set: &Option<Vec<usize>>) -> String {
    match set {
        Some(s) => format_index_set(&s.iter().map(|i| i - 1).collect::<Vec<_>>()),
        None => "none".into(),
    }
}

fn det_text(d: &DetSummary) -> String {
    let layer = if d.tangible { "tangible" } else { "singular" };
    let mut text = format!("{} ({layer})", d.value);
    if !d.dominant_permutations.is_empty() {
        let _ = write!(text, " via {}", d.dominant_permutations.join(", "));
        if d.dominant_count > d.dominant_permutations.len() {
            let _ = write!(text, " (+{} more)", d.dominant_count - d.dominant_permutations.len());
        }
    }
    text
}

fn block(out: &mut String, title: &str, lines: &[String]) {
    let _ = writeln!(out, "{title}");
    for line in lines {
        let _ = writeln!(out, "  {line}");
    }
}

/// Stable plain-text rendering.
pub fn render(r: &AnalysisReport) -> String {
    let mut out = String::new();
    block(&mut out, &format!("matrix ({0}x{0})", r.size), &r.matrix);
    let _ = writeln!(out, "det = {}", det_text(&r.determinant));
    let _ = writeln!(out, "f_A(x) = {}", r.char_poly);
    for (k, set) in r.index_sets.iter().enumerate().skip(1) {
        let _ = writeln!(out, "  alpha_{k} = {}  Ind_{k} = {}", r.coefficients[k], set_text(set));
    }
    let _ = writeln!(out, "f_A^es(x) = {}", r.essential_poly);
    let _ = writeln!(out, "eigenvalues");
    for e in &r.eigenvalues {
        let kind = if e.corner { "corner" } else { "ghost-flanked" };
        let _ = writeln!(
            out,
            "  {}  multiplicity {}  I = {}  {kind}",
            e.value,
            e.multiplicity,
            set_text(&e.index_set)
        );
    }
    if r.zero_multiplicity > 0 {
        let _ = writeln!(out, "  -  multiplicity {}", r.zero_multiplicity);
    }
    if !r.ghost_intervals.is_empty() {
        let _ = writeln!(out, "ghost intervals: {}", r.ghost_intervals.join(" "));
    }
    let _ = writeln!(out, "eigenvectors");
    for e in &r.eigenvectors {
        let mark = if e.in_w { "  [W]" } else { "" };
        let _ = writeln!(out, "  {}  column {}  ({}){mark}", e.eigenvalue, e.column, e.vector.join(", "));
    }
    let complete = if r.w_complete { "" } else { " (incomplete)" };
    block(&mut out, &format!("W{complete}"), &r.w);
    let d = &r.dependence;
    let verdict = if d.dependent { "dependent" } else { "independent" };
    let rule = match d.rule {
        DependenceRule::Determinant => "determinant",
        DependenceRule::MaximalMinors => "maximal minors",
    };
    if let Some(det) = &d.determinant {
        let _ = writeln!(out, "det(W) = {}", det_text(det));
    }
    let _ = write!(out, "eigenvectors {verdict} ({rule} rule)");
    if let Some(w) = &d.witness {
        let _ = write!(out, ", witness ({})", w.join(", "));
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "difference criterion: {}", r.difference_criterion);
    if let Some(adj) = &r.adjoint {
        block(&mut out, "adj(A)", adj);
        match &r.quasi_inverse {
            Some(q) => block(&mut out, "A^nabla", q),
            None => {
                let _ = writeln!(out, "A^nabla: undefined (singular)");
            }
        }
    }
    if let Some(g) = &r.generalized {
        let s = &g.strong_nonsingularity;
        let _ = writeln!(
            out,
            "strongly nonsingular: {} (powers checked {}{})",
            s.holds,
            s.checked,
            if s.truncated { ", truncated" } else { "" }
        );
        if let Some(why) = &g.unavailable {
            let _ = writeln!(out, "generalized eigenspaces unavailable: {why}");
        }
        for sub in &g.subspaces {
            let _ = writeln!(out, "V'_{}  multiplicity {}  cofactor {}", sub.eigenvalue, sub.multiplicity, sub.cofactor);
            for line in &sub.generators {
                let _ = writeln!(out, "  {line}");
            }
            for gen in &sub.ghost_free_generators {
                let _ = writeln!(out, "  ghost-free ({})", gen.join(", "));
            }
        }
        let mults: Vec<String> = g
            .eigenvector_multiplicities
            .iter()
            .map(|m| m.map_or("?".into(), |m| m.to_string()))
            .collect();
        let _ = writeln!(
            out,
            "generalized multiplicities: [{}]  degenerate: {}",
            mults.join(", "),
            g.degenerate_eigenvectors
        );
    }
    out
}

/// Aggregated law reports for one `verify` or `experiment` run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LawsDocument {
    pub schema: String,
    pub schema_version: u32,
    pub master_seed: u64,
    pub passed: bool,
    pub reports: Vec<LawReport>,
}

impl LawsDocument {
    pub fn new(master_seed: u64, reports: Vec<LawReport>) -> Self {
        LawsDocument {
            schema: LAWS_SCHEMA.into(),
            schema_version: SCHEMA_VERSION,
            master_seed,
            passed: reports.iter().all(LawReport::passed),
            reports,
        }
    }
}

pub fn render_laws(doc: &LawsDocument) -> String {
    let mut out = String::new();
    for r in &doc.reports {
        let _ = writeln!(out, "{r}");
        if !r.counters.is_empty() {
            let counters: Vec<String> = r.counters.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = writeln!(out, "    {}", counters.join(" "));
        }
        for note in &r.notes {
            let _ = writeln!(out, "    note: {note}");
        }
        for v in &r.violations {
            let _ = writeln!(out, "    attempt {}: {} observed {}", v.attempt, v.relation, v.observed.replace('\n', " / "));
        }
    }
    let _ = writeln!(out, "{}", if doc.passed { "all theorem suites pass" } else { "theorem suites FAILED" });
    out
}

/// A vector in the text syntax, for examples and logs.
pub fn vector_text(v: &[Scalar]) -> String {
    format_vector(v)
}
