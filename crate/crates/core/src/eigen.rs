//! Eigenvalues, adjoint-column eigenvectors and dependence tests.
//!
//! Eigenvalues are the roots of the characteristic polynomial. For a root
//! `λ` flanked by the essential coefficients `α_{k_lo}` and `α_{k_hi}`, the
//! index set `I_λ = Ind_{k_hi} \ Ind_{k_lo}` names the columns of
//! `adj(A ⊕ λI)` whose tangible lifts are eigenvectors.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{CharPolyReport, DetResult, Matrix};
use crate::polynomial::{expand_primary_product, NuInterval, Polynomial};
use crate::scalar::{vec_add, vec_ghost_surpasses, vec_is_ghost, vec_scale, Scalar};

/// Nodes visited by the dependence witness search before giving up.
pub const WITNESS_SEARCH_BUDGET: usize = 200_000;
/// Largest number of vectors for which a witness is searched.
pub const WITNESS_SEARCH_MAX_VECTORS: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Eigenvalue {
    pub value: Scalar,
    pub multiplicity: usize,
    /// `I_λ` (0-based, sorted); absent when either flanking index set is.
    pub index_set: Option<Vec<usize>>,
    /// Both flanking essential coefficients are tangible.
    pub is_corner: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Eigenvector {
    pub eigenvalue: Scalar,
    /// 0-based column of `adj(A ⊕ λI)`.
    pub column: usize,
    pub vector: Vec<Scalar>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DependenceRule {
    /// `k = n`: dependent iff the determinant is ghost or `0_R`.
    Determinant,
    /// `k < n`: dependent iff every `k×k` row-selected minor is ghost or
    /// `0_R`. An extension of the square criterion.
    MaximalMinors,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DependenceVerdict {
    pub dependent: bool,
    pub rule: DependenceRule,
    /// Present under [`DependenceRule::Determinant`].
    pub determinant: Option<DetResult>,
    /// Tangible `a_1..a_k` with `⊕ a_i v_i` ghost, when one was found.
    pub witness: Option<Vec<Scalar>>,
}

/// The eigenvector columns chosen for `W`, one per eigenvalue instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Eigenbasis {
    pub columns: Vec<Eigenvector>,
    /// `n`, the number of eigenvalue instances a full basis needs.
    pub needed: usize,
}

impl Eigenbasis {
    pub fn is_complete(&self) -> bool {
        self.columns.len() == self.needed
    }

    pub fn matrix(&self) -> Matrix {
        let cols: Vec<Vec<Scalar>> = self.columns.iter().map(|e| e.vector.clone()).collect();
        if cols.is_empty() {
            return Matrix::zeros(self.needed, 0);
        }
        Matrix::from_columns(&cols).expect("eigenvectors share a length")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Spectrum {
    pub char_report: CharPolyReport,
    pub essential: Polynomial,
    /// ν-decreasing.
    pub eigenvalues: Vec<Eigenvalue>,
    pub ghost_intervals: Vec<NuInterval>,
    pub zero_multiplicity: usize,
    /// Every column in every `I_λ`.
    pub eigenvectors: Vec<Eigenvector>,
    pub basis: Eigenbasis,
    pub dependence: DependenceVerdict,
    pub difference_criterion: bool,
}

impl Spectrum {
    pub fn w(&self) -> Matrix {
        self.basis.matrix()
    }

    /// `n` eigenvalues of multiplicity one.
    pub fn has_distinct_eigenvalues(&self) -> bool {
        let n = self.char_report.size();
        self.zero_multiplicity == 0
            && self.eigenvalues.len() == n
            && self.eigenvalues.iter().all(|e| e.multiplicity == 1)
    }

    pub fn eigenvalue(&self, lambda: &Scalar) -> Option<&Eigenvalue> {
        self.eigenvalues.iter().find(|e| e.value == *lambda)
    }
}

/// Eigenvalues and index sets only; eigenvectors are left empty.
pub fn eigenvalues(a: &Matrix) -> Result<Spectrum> {
    let char_report = a.char_poly()?;
    let n = char_report.size();
    let roots = char_report.poly.roots();
    let list = collect_eigenvalues(&char_report, &roots.roots);
    let difference_criterion = difference_from(&list);
    Ok(Spectrum {
        essential: char_report.poly.essential(),
        eigenvalues: list,
        ghost_intervals: roots.ghost_intervals,
        zero_multiplicity: roots.zero_multiplicity,
        eigenvectors: Vec::new(),
        basis: Eigenbasis {
            columns: Vec::new(),
            needed: n,
        },
        dependence: DependenceVerdict {
            dependent: false,
            rule: DependenceRule::MaximalMinors,
            determinant: None,
            witness: None,
        },
        difference_criterion,
        char_report,
    })
}

/// Full spectral analysis: eigenvalues, every eigenvector, `W` and the
/// dependence verdict.
pub fn spectrum(a: &Matrix) -> Result<Spectrum> {
    let mut spec = eigenvalues(a)?;
    let n = spec.char_report.size();
    let mut columns = Vec::new();
    for ev in &spec.eigenvalues {
        let Some(set) = &ev.index_set else { continue };
        if set.is_empty() {
            continue;
        }
        let adj = eigenmatrix(a, &ev.value)?.adjoint()?;
        let mut chosen: Vec<Vec<Scalar>> = Vec::new();
        for &t in set {
            let vector = hat_vector(&adj.column(t));
            spec.eigenvectors.push(Eigenvector {
                eigenvalue: ev.value.clone(),
                column: t,
                vector: vector.clone(),
            });
            if chosen.len() < ev.multiplicity
                && !chosen.iter().any(|c| projectively_equal(c, &vector))
            {
                chosen.push(vector.clone());
                columns.push(Eigenvector {
                    eigenvalue: ev.value.clone(),
                    column: t,
                    vector,
                });
            }
        }
    }
    spec.basis = Eigenbasis { columns, needed: n };
    let vectors: Vec<Vec<Scalar>> = spec.basis.columns.iter().map(|e| e.vector.clone()).collect();
    spec.dependence = vectors_dependent_in(n, &vectors)?;
    Ok(spec)
}

fn collect_eigenvalues(report: &CharPolyReport, roots: &[crate::polynomial::Root]) -> Vec<Eigenvalue> {
    let n = report.size();
    roots
        .iter()
        .map(|root| {
            let k_lo = n - root.high_degree;
            let k_hi = n - root.low_degree;
            let index_set = match (&report.index_sets[k_lo], &report.index_sets[k_hi]) {
                (Some(lo), Some(hi)) => Some(hi.iter().copied().filter(|i| !lo.contains(i)).collect()),
                _ => None,
            };
            Eigenvalue {
                value: root.value.clone(),
                multiplicity: root.multiplicity,
                index_set,
                is_corner: !root.ghost_flanked,
            }
        })
        .collect()
}

fn difference_from(list: &[Eigenvalue]) -> bool {
    let mut seen = Vec::new();
    for ev in list {
        let Some(set) = &ev.index_set else { return false };
        for i in set {
            if seen.contains(i) {
                return false;
            }
            seen.push(*i);
        }
    }
    true
}

/// `A ⊕ λI`.
pub fn eigenmatrix(a: &Matrix, lambda: &Scalar) -> Result<Matrix> {
    let n = square(a)?;
    a.add(&Matrix::identity(n).scalar_mul(lambda))
}

fn square(a: &Matrix) -> Result<usize> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    Ok(a.rows())
}

fn hat_vector(v: &[Scalar]) -> Vec<Scalar> {
    v.iter().map(Scalar::hat).collect()
}

/// `u = c ⊙ v` for a tangible `c`.
pub fn projectively_equal(u: &[Scalar], v: &[Scalar]) -> bool {
    if u.len() != v.len() {
        return false;
    }
    let mut shift = None;
    for (x, y) in u.iter().zip(v) {
        match (x.value(), y.value()) {
            (None, None) => continue,
            (Some(a), Some(b)) if x.layer() == y.layer() => {
                let d = a - b;
                match &shift {
                    None => shift = Some(d),
                    Some(s) if *s == d => {}
                    Some(_) => return false,
                }
            }
            _ => return false,
        }
    }
    true
}

/// Tangible lift of column `t` (0-based) of `adj(A ⊕ λI)`.
pub fn eigenvector(a: &Matrix, lambda: &Scalar, t: usize) -> Result<Vec<Scalar>> {
    let spec = eigenvalues(a)?;
    let ev = spec
        .eigenvalue(lambda)
        .ok_or_else(|| Error::NotAnEigenvalue(lambda.to_string()))?;
    let set = ev
        .index_set
        .as_ref()
        .ok_or_else(|| Error::NotAnEigenvalue(lambda.to_string()))?;
    if !set.contains(&t) {
        return Err(Error::ColumnNotInIndexSet {
            column: t + 1,
            eigenvalue: lambda.to_string(),
        });
    }
    Ok(hat_vector(&eigenmatrix(a, lambda)?.adjoint()?.column(t)))
}

/// `A ⊙ v ⊨gs λ ⊙ v`.
pub fn is_eigenpair(a: &Matrix, lambda: &Scalar, v: &[Scalar]) -> Result<bool> {
    Ok(vec_ghost_surpasses(&a.apply(v)?, &vec_scale(lambda, v)))
}

/// `W`, or [`Error::IncompleteEigenbasis`] when fewer than `n` columns exist.
pub fn eigenvector_matrix(a: &Matrix) -> Result<Matrix> {
    let spec = spectrum(a)?;
    complete(&spec)?;
    Ok(spec.w())
}

fn complete(spec: &Spectrum) -> Result<()> {
    if spec.basis.is_complete() {
        Ok(())
    } else {
        Err(Error::IncompleteEigenbasis {
            found: spec.basis.columns.len(),
            needed: spec.basis.needed,
        })
    }
}

/// `det(W)`; dependent iff ghost or `0_R`.
pub fn dependence_verdict(a: &Matrix) -> Result<DetResult> {
    let spec = spectrum(a)?;
    complete(&spec)?;
    spec.w().determinant()
}

/// Pairwise disjointness of the eigenvalue index sets; false when any set
/// is missing.
pub fn difference_criterion(a: &Matrix) -> Result<bool> {
    Ok(eigenvalues(a)?.difference_criterion)
}

/// Distinct ν-values on the diagonal of `A^m`, `n! | m`.
pub fn diagonal_distinctness(a: &Matrix, m: u64) -> Result<bool> {
    a.diagonal_distinctness(m)
}

/// Supertropical dependence of `k ≤ n` tangible `n`-vectors.
pub fn vectors_dependent(vectors: &[Vec<Scalar>]) -> Result<DependenceVerdict> {
    let n = vectors.first().map_or(0, Vec::len);
    vectors_dependent_in(n, vectors)
}

fn vectors_dependent_in(n: usize, vectors: &[Vec<Scalar>]) -> Result<DependenceVerdict> {
    let k = vectors.len();
    if vectors.iter().any(|v| v.len() != n) {
        return Err(Error::DimensionMismatch("vectors of different lengths".into()));
    }
    if k > n {
        return Err(Error::DimensionMismatch(format!("{k} vectors in dimension {n}")));
    }
    let (dependent, rule, determinant) = if k == 0 {
        (false, DependenceRule::MaximalMinors, None)
    } else {
        let m = Matrix::from_columns(vectors)?;
        if k == n {
            let det = m.determinant()?;
            (!det.is_tangible(), DependenceRule::Determinant, Some(det))
        } else {
            let any_tangible = (0..n).combinations(k).any(|rows| {
                let sub: Vec<Vec<Scalar>> = rows.iter().map(|&r| m.row(r)).collect();
                Matrix::from_rows(sub)
                    .and_then(|s| s.determinant())
                    .is_ok_and(|d| d.is_tangible())
            });
            (!any_tangible, DependenceRule::MaximalMinors, None)
        }
    };
    let witness = if dependent && k <= WITNESS_SEARCH_MAX_VECTORS {
        find_witness(vectors)
    } else {
        None
    };
    Ok(DependenceVerdict {
        dependent,
        rule,
        determinant,
        witness,
    })
}

/// `⊕ a_i v_i` ghost.
pub fn is_dependence_witness(vectors: &[Vec<Scalar>], coeffs: &[Scalar]) -> bool {
    if vectors.is_empty() || coeffs.len() != vectors.len() || !coeffs.iter().all(Scalar::is_tangible) {
        return false;
    }
    let n = vectors[0].len();
    let sum = vectors
        .iter()
        .zip(coeffs)
        .fold(vec![Scalar::zero(); n], |acc, (v, a)| vec_add(&acc, &vec_scale(a, v)));
    vec_is_ghost(&sum)
}

/// Searches coefficient tuples built from entry-difference critical values:
/// one vector is pinned at `0`, and every other coefficient aligns some entry
/// with an already placed vector. Any returned tuple has been verified.
fn find_witness(vectors: &[Vec<Scalar>]) -> Option<Vec<Scalar>> {
    let k = vectors.len();
    let mut budget = WITNESS_SEARCH_BUDGET;
    for pinned in 0..k {
        let mut coeffs: Vec<Option<Scalar>> = vec![None; k];
        coeffs[pinned] = Some(Scalar::one());
        let order: Vec<usize> = (0..k).filter(|&i| i != pinned).collect();
        if let Some(found) = witness_dfs(vectors, &order, 0, &mut coeffs, &mut budget) {
            return Some(found);
        }
        if budget == 0 {
            break;
        }
    }
    None
}

fn witness_dfs(
    vectors: &[Vec<Scalar>],
    order: &[usize],
    depth: usize,
    coeffs: &mut Vec<Option<Scalar>>,
    budget: &mut usize,
) -> Option<Vec<Scalar>> {
    if *budget == 0 {
        return None;
    }
    *budget -= 1;
    if depth == order.len() {
        let tuple: Vec<Scalar> = coeffs.iter().map(|c| c.clone().unwrap()).collect();
        return is_dependence_witness(vectors, &tuple).then_some(tuple);
    }
    let i = order[depth];
    let mut candidates: Vec<Scalar> = Vec::new();
    for (j, c) in coeffs.iter().enumerate() {
        let Some(c) = c else { continue };
        for (x, y) in vectors[j].iter().zip(&vectors[i]) {
            if let (Some(x), Some(y)) = (x.value(), y.value()) {
                let cand = c * &Scalar::tangible(x - y);
                if !candidates.contains(&cand) {
                    candidates.push(cand);
                }
            }
        }
    }
    if candidates.is_empty() {
        candidates.push(Scalar::one());
    }
    for cand in candidates {
        coeffs[i] = Some(cand);
        if let Some(found) = witness_dfs(vectors, order, depth + 1, coeffs, budget) {
            return Some(found);
        }
    }
    coeffs[i] = None;
    None
}

/// Under the independence theorem's hypotheses every `I_λ` is a singleton
/// `{j_k}` and row `j_k` of the `k`-th column of `W` is ν-equal to
/// `λ_1 ⋯ λ_{k-1} λ_k^{n-k}`. `None` when some `I_λ` is not a singleton or
/// the basis is incomplete.
pub fn normalized_diagonal_holds(spec: &Spectrum) -> Option<bool> {
    let n = spec.char_report.size();
    if !spec.has_distinct_eigenvalues() || !spec.basis.is_complete() {
        return None;
    }
    let mut prefix = Scalar::one();
    for (k, (ev, col)) in spec.eigenvalues.iter().zip(&spec.basis.columns).enumerate() {
        let set = ev.index_set.as_ref()?;
        if set.len() != 1 || col.column != set[0] {
            return None;
        }
        let expected = &prefix * &ev.value.pow((n - k - 1) as u64);
        if !col.vector[set[0]].nu_equiv(&expected) {
            return Some(false);
        }
        prefix = &prefix * &ev.value;
    }
    Some(true)
}

/// Verifies `A^i ⊙ v ⊨gs λ^i ⊙ v`.
pub fn check_power_eigenpair(a: &Matrix, lambda: &Scalar, v: &[Scalar], i: u64) -> Result<bool> {
    Ok(vec_ghost_surpasses(&a.pow(i)?.apply(v)?, &vec_scale(&lambda.pow(i), v)))
}

/// The chain of weakenings of the eigenvector condition at exponent `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenHierarchy {
    /// `A v ⊨gs λ v`.
    pub eigen: bool,
    /// `A^m v ⊨gs λ^m v`.
    pub power: bool,
    /// `A^m v ⊕ λ^m v` ghost.
    pub ghost_sum: bool,
    /// `(A ⊕ λI)^m v` ghost.
    pub generalized: bool,
}

impl EigenHierarchy {
    pub fn is_consistent(&self) -> bool {
        (!self.eigen || self.power) && (!self.power || self.ghost_sum) && (!self.ghost_sum || self.generalized)
    }
}

pub fn eigen_hierarchy(a: &Matrix, lambda: &Scalar, v: &[Scalar], m: u64) -> Result<EigenHierarchy> {
    let am_v = a.pow(m)?.apply(v)?;
    let lm_v = vec_scale(&lambda.pow(m), v);
    Ok(EigenHierarchy {
        eigen: is_eigenpair(a, lambda, v)?,
        power: vec_ghost_surpasses(&am_v, &lm_v),
        ghost_sum: vec_is_ghost(&vec_add(&am_v, &lm_v)),
        generalized: vec_is_ghost(&eigenmatrix(a, lambda)?.pow(m)?.apply(v)?),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneralizedEigenReport {
    pub eigenvalue: Scalar,
    pub vector: Vec<Scalar>,
    /// Least `m` with `(A ⊕ λI)^m ⊙ v` ghost, if any up to `m_max`.
    pub multiplicity: Option<usize>,
    /// `A^m ⊙ v` ghost for some `m ≤ m_max`.
    pub degenerate: bool,
    pub degenerate_power: Option<usize>,
    pub m_max: usize,
}

/// `m_max` defaults to `2n`.
pub fn is_generalized_eigenvector(
    a: &Matrix,
    lambda: &Scalar,
    v: &[Scalar],
    m_max: Option<usize>,
) -> Result<GeneralizedEigenReport> {
    let n = square(a)?;
    let m_max = m_max.unwrap_or(2 * n);
    let b = eigenmatrix(a, lambda)?;
    let multiplicity = first_ghost_power(&b, v, m_max)?;
    let degenerate_power = first_ghost_power(a, v, m_max)?.filter(|&m| m > 0);
    Ok(GeneralizedEigenReport {
        eigenvalue: lambda.clone(),
        vector: v.to_vec(),
        multiplicity,
        degenerate: degenerate_power.is_some(),
        degenerate_power,
        m_max,
    })
}

fn first_ghost_power(b: &Matrix, v: &[Scalar], m_max: usize) -> Result<Option<usize>> {
    let mut w = v.to_vec();
    for m in 0..=m_max {
        if vec_is_ghost(&w) {
            return Ok(Some(m));
        }
        w = b.apply(&w)?;
    }
    Ok(None)
}

/// `(A ⊕ λI)^{m+t} ⊙ (v ⊕ c ⊙ u)` ghost.
pub fn generalized_closure_holds(
    a: &Matrix,
    lambda: &Scalar,
    (v, m): (&[Scalar], usize),
    (u, t): (&[Scalar], usize),
    c: &Scalar,
) -> Result<bool> {
    let combined = vec_add(v, &vec_scale(c, u));
    let b = eigenmatrix(a, lambda)?.pow((m + t) as u64)?;
    Ok(vec_is_ghost(&b.apply(&combined)?))
}

/// Generators of `V'_{λ_i}`: the matrix `f̃_i(A)`, where `f̃_i` is the
/// product of the primary factors of `f_A` other than `(x ⊕ λ_i)^{m_i}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneralizedSubspace {
    pub eigenvalue: Scalar,
    pub multiplicity: usize,
    pub cofactor: Polynomial,
    pub generators: Matrix,
    /// Tangible lifts of the nonzero columns of `generators`.
    pub tangible_generators: Vec<Vec<Scalar>>,
    /// Nonzero columns of `generators` with no ghost entry, as they are.
    pub ghost_free_generators: Vec<Vec<Scalar>>,
}

pub fn generalized_subspace_generators(a: &Matrix, lambda: &Scalar) -> Result<GeneralizedSubspace> {
    let report = a.char_poly()?;
    let fact = report.poly.primary_factorization().ok_or(Error::NotFactorizable)?;
    if fact.residue {
        return Err(Error::NotFactorizable);
    }
    let i = fact
        .factors
        .iter()
        .position(|(r, _)| r == lambda)
        .ok_or_else(|| Error::NotAnEigenvalue(lambda.to_string()))?;
    let others: Vec<(Scalar, usize)> = fact
        .factors
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, f)| f.clone())
        .collect();
    let cofactor = expand_primary_product(&others)
        .mul(&Polynomial::monomial(fact.leading.clone(), fact.zero_multiplicity));
    let generators = a.eval_poly(&cofactor)?;
    let nonzero: Vec<Vec<Scalar>> = (0..generators.cols())
        .map(|j| generators.column(j))
        .filter(|c| c.iter().any(|x| !x.is_zero()))
        .collect();
    let tangible_generators = nonzero.iter().map(|c| hat_vector(c)).collect();
    let ghost_free_generators = nonzero
        .into_iter()
        .filter(|c| !c.iter().any(Scalar::is_ghost))
        .collect();
    Ok(GeneralizedSubspace {
        eigenvalue: lambda.clone(),
        multiplicity: fact.factors[i].1,
        cofactor,
        generators,
        tangible_generators,
        ghost_free_generators,
    })
}
