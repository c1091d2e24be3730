//! Dense supertropical matrices.
//!
//! The determinant is the supertropical permanent `⊕_σ ⊙_i a_{i,σ(i)}`,
//! evaluated by exhaustive enumeration with every ν-maximal permutation
//! recorded. Everything spectral is built on top of it: adjoints,
//! quasi-inverses and characteristic polynomials with their index sets.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::polynomial::Polynomial;
use crate::scalar::Scalar;

/// Largest size accepted by [`Matrix::determinant`].
pub const DET_BOUND: usize = 10;
/// Largest size accepted by [`Matrix::char_poly`].
pub const CHAR_POLY_BOUND: usize = 8;
/// Dominant permutations beyond this many are counted but not stored.
pub const DOMINANT_RECORD_LIMIT: usize = 4096;
/// Ceiling for the number of powers checked for strong nonsingularity.
pub const STRONG_NONSINGULAR_CAP: usize = 720;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Result of a determinant evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetResult {
    pub value: Scalar,
    /// Permutations whose weight is ν-equal to the determinant (at most
    /// [`DOMINANT_RECORD_LIMIT`] stored). Empty when the value is `0_R`.
    pub dominant_permutations: Vec<Permutation>,
    pub dominant_count: usize,
    /// Exactly one dominant permutation and its weight is tangible.
    pub unique_tangible: bool,
}

impl DetResult {
    pub fn is_tangible(&self) -> bool {
        self.value.is_tangible()
    }
}

/// Characteristic polynomial `f_A(x) = det(xI ⊕ A)` with its coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharPolyReport {
    pub poly: Polynomial,
    /// `α_0 .. α_n`; `α_k` multiplies `x^(n-k)`.
    pub coefficients: Vec<Scalar>,
    /// `Ind_k` (0-based, sorted): the unique `k`-subset carrying every
    /// dominant permutation of `α_k`. Always present when `α_k` is tangible.
    pub index_sets: Vec<Option<Vec<usize>>>,
}

impl CharPolyReport {
    pub fn size(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Every coefficient tangible.
    pub fn is_tangible(&self) -> bool {
        self.coefficients.iter().all(Scalar::is_tangible)
    }
}

/// Outcome of checking `A^m` nonsingular for `m = 1..=checked`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrongNonsingularity {
    pub holds: bool,
    pub checked: usize,
    /// Fewer powers than `n!` were examined because of the cap.
    pub truncated: bool,
    pub first_singular_power: Option<usize>,
}

struct DetCore {
    value: Scalar,
    best: Scalar,
    count: usize,
    perms: Vec<Vec<usize>>,
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "ragged rows: expected {cols} entries, found {}",
                bad.len()
            )));
        }
        let n = rows.len();
        Matrix::new(n, cols, rows.into_iter().flatten().collect())
    }

    /// Builds from columns, e.g. eigenvectors.
    pub fn from_columns(columns: &[Vec<Scalar>]) -> Result<Self> {
        let rows = columns.first().map_or(0, Vec::len);
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::DimensionMismatch("columns of unequal length".into()));
        }
        let data = (0..rows)
            .flat_map(|i| columns.iter().map(move |c| c[i].clone()))
            .collect();
        Matrix::new(rows, columns.len(), data)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    /// `p_{i,π(i)} = 1`.
    pub fn permutation_matrix(pi: &Permutation) -> Self {
        let n = pi.len();
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, pi.apply(i))] = Scalar::one();
        }
        m
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, d) in entries.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    /// `d_{i,π(i)} = a_i`; invertible when every `a_i` is tangible.
    pub fn generalized_permutation(pi: &Permutation, entries: &[Scalar]) -> Result<Self> {
        if entries.len() != pi.len() {
            return Err(Error::DimensionMismatch("one entry per row required".into()));
        }
        let n = pi.len();
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, pi.apply(i))] = entries[i].clone();
        }
        Ok(m)
    }

    fn check_index(index: usize, n: usize) -> Result<()> {
        if index < n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index, size: n })
        }
    }

    /// Identity with rows `i` and `j` swapped.
    pub fn transposition(i: usize, j: usize, n: usize) -> Result<Self> {
        Self::check_index(i, n)?;
        Self::check_index(j, n)?;
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, j);
        Ok(Self::permutation_matrix(&Permutation::new(images)))
    }

    /// Identity with row `i` multiplied by the tangible `alpha`.
    pub fn diagonal_multiplier(i: usize, alpha: &Scalar, n: usize) -> Result<Self> {
        Self::check_index(i, n)?;
        if !alpha.is_tangible() {
            return Err(Error::NotInvertible(alpha.to_string()));
        }
        let mut m = Self::identity(n);
        m[(i, i)] = alpha.clone();
        Ok(m)
    }

    /// Identity plus `alpha` at `(i, j)`: adds `alpha ⊙ row j` to row `i`.
    pub fn gaussian(i: usize, j: usize, alpha: &Scalar, n: usize) -> Result<Self> {
        Self::check_index(i, n)?;
        Self::check_index(j, n)?;
        if i == j {
            return Err(Error::DimensionMismatch(
                "a Gaussian matrix needs an off-diagonal position".into(),
            ));
        }
        let mut m = Self::identity(n);
        m[(i, j)] = alpha.clone();
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    fn square_size(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let term = a * other.get(k, j);
                    let cell = &mut out.data[i * other.cols + j];
                    if term.nu_cmp(cell) != Ordering::Less {
                        *cell = &*cell + &term;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `A ⊙ v` for a column vector `v`.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                (0..self.cols).fold(Scalar::zero(), |acc, j| &acc + &(self.get(i, j) * &v[j]))
            })
            .collect())
    }

    pub fn scalar_mul(&self, c: &Scalar) -> Matrix {
        self.map(|a| c * a)
    }

    /// `A^m` by repeated squaring; `A^0 = I`.
    pub fn pow(&self, m: u64) -> Result<Matrix> {
        let n = self.square_size()?;
        let mut result = Matrix::identity(n);
        let mut base = self.clone();
        let mut e = m;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn trace(&self) -> Result<Scalar> {
        let n = self.square_size()?;
        Ok((0..n).fold(Scalar::zero(), |acc, i| &acc + self.get(i, i)))
    }

    pub fn nu_of(&self) -> Matrix {
        self.map(Scalar::nu)
    }

    pub fn hat_of(&self) -> Matrix {
        self.map(Scalar::hat)
    }

    /// Every entry ghost or `0_R`.
    pub fn is_ghost(&self) -> bool {
        self.data.iter().all(Scalar::is_ghost_or_zero)
    }

    /// Entry-wise `⊨gs`.
    pub fn ghost_surpasses(&self, other: &Matrix) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data.iter().zip(&other.data).all(|(a, b)| a.ghost_surpasses(b))
    }

    /// Entry-wise `≅ν`.
    pub fn nu_equiv(&self, other: &Matrix) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data.iter().zip(&other.data).all(|(a, b)| a.nu_equiv(b))
    }

    /// Delete row `r` and column `c`.
    pub fn minor(&self, r: usize, c: usize) -> Result<Matrix> {
        Self::check_index(r, self.rows)?;
        Self::check_index(c, self.cols)?;
        let data = (0..self.rows)
            .filter(|&i| i != r)
            .flat_map(|i| (0..self.cols).filter(move |&j| j != c).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        Matrix::new(self.rows - 1, self.cols - 1, data)
    }

    /// Enumerates the bijections `rows -> cols` depth first, skipping `0_R`
    /// entries. Permutations are recorded as positions into `cols`.
    fn det_core(&self, rows: &[usize], cols: &[usize], record: bool) -> DetCore {
        #[allow(clippy::too_many_arguments)]
        fn walk(
            m: &Matrix,
            rows: &[usize],
            cols: &[usize],
            depth: usize,
            used: u64,
            weight: Scalar,
            chosen: &mut Vec<usize>,
            record: bool,
            out: &mut DetCore,
        ) {
            if depth == rows.len() {
                match weight.nu_cmp(&out.best) {
                    Ordering::Greater => {
                        out.count = 1;
                        out.perms.clear();
                        if record {
                            out.perms.push(chosen.clone());
                        }
                        out.value = weight.clone();
                        out.best = weight;
                    }
                    Ordering::Equal => {
                        out.count += 1;
                        if record && out.perms.len() < DOMINANT_RECORD_LIMIT {
                            out.perms.push(chosen.clone());
                        }
                        out.value = &out.value + &weight;
                    }
                    Ordering::Less => {}
                }
                return;
            }
            let i = rows[depth];
            for (pos, &j) in cols.iter().enumerate() {
                if used & (1 << pos) != 0 {
                    continue;
                }
                let a = m.get(i, j);
                if a.is_zero() {
                    continue;
                }
                chosen.push(pos);
                walk(
                    m,
                    rows,
                    cols,
                    depth + 1,
                    used | (1 << pos),
                    &weight * a,
                    chosen,
                    record,
                    out,
                );
                chosen.pop();
            }
        }

        let mut out = DetCore {
            value: Scalar::zero(),
            best: Scalar::zero(),
            count: 0,
            perms: Vec::new(),
        };
        if rows.is_empty() {
            out.value = Scalar::one();
            out.best = Scalar::one();
            out.count = 1;
            if record {
                out.perms.push(Vec::new());
            }
            return out;
        }
        walk(
            self,
            rows,
            cols,
            0,
            0,
            Scalar::one(),
            &mut Vec::with_capacity(rows.len()),
            record,
            &mut out,
        );
        out
    }

    fn check_bound(&self, what: &'static str, bound: usize) -> Result<usize> {
        let n = self.square_size()?;
        if n > bound {
            return Err(Error::SizeBound {
                what,
                size: n,
                bound,
            });
        }
        Ok(n)
    }

    /// Supertropical determinant with its dominant permutations.
    pub fn determinant(&self) -> Result<DetResult> {
        self.determinant_bounded(DET_BOUND)
    }

    pub fn determinant_bounded(&self, bound: usize) -> Result<DetResult> {
        let n = self.check_bound("determinant", bound.min(63))?;
        let idx: Vec<usize> = (0..n).collect();
        let core = self.det_core(&idx, &idx, true);
        let unique_tangible = core.count == 1 && core.value.is_tangible();
        Ok(DetResult {
            value: core.value,
            dominant_permutations: core.perms.into_iter().map(Permutation::new).collect(),
            dominant_count: core.count,
            unique_tangible,
        })
    }

    fn det_value(&self, rows: &[usize], cols: &[usize]) -> Scalar {
        self.det_core(rows, cols, false).value
    }

    /// Determinant by cofactor expansion along `row`, recursing on minors.
    /// Shares no code with the enumeration in [`Matrix::determinant`].
    pub fn determinant_by_row_expansion(&self, row: usize) -> Result<Scalar> {
        let n = self.square_size()?;
        if n == 0 {
            return Ok(Scalar::one());
        }
        Self::check_index(row, n)?;
        fn expand(m: &Matrix) -> Scalar {
            match m.rows {
                0 => Scalar::one(),
                1 => m.get(0, 0).clone(),
                _ => (0..m.cols).fold(Scalar::zero(), |acc, j| {
                    let a = m.get(0, j);
                    if a.is_zero() {
                        acc
                    } else {
                        &acc + &(a * &expand(&m.minor(0, j).unwrap()))
                    }
                }),
            }
        }
        Ok((0..n).fold(Scalar::zero(), |acc, j| {
            let a = self.get(row, j);
            if a.is_zero() {
                acc
            } else {
                &acc + &(a * &expand(&self.minor(row, j).unwrap()))
            }
        }))
    }

    /// `adj(A)_{i,j} = det(A_{j,i})`.
    pub fn adjoint(&self) -> Result<Matrix> {
        let n = self.check_bound("adjoint", DET_BOUND + 1)?;
        let mut out = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
                let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
                out[(i, j)] = self.det_value(&rows, &cols);
            }
        }
        Ok(out)
    }

    /// `A^∇ = det(A)^{-1} ⊙ adj(A)`; requires a tangible determinant.
    pub fn quasi_inverse(&self) -> Result<Matrix> {
        let det = self.determinant()?.value;
        let inv = det
            .inv()
            .map_err(|_| Error::NotInvertible(format!("matrix with determinant {det}")))?;
        Ok(self.adjoint()?.scalar_mul(&inv))
    }

    /// `f_A(x) = det(xI ⊕ A)`, coefficient by coefficient from the principal
    /// minors of each size.
    pub fn char_poly(&self) -> Result<CharPolyReport> {
        let n = self.check_bound("characteristic polynomial", CHAR_POLY_BOUND)?;
        let mut coefficients = vec![Scalar::one()];
        let mut index_sets = vec![Some(Vec::new())];
        for k in 1..=n {
            let mut alpha = Scalar::zero();
            let mut dominant_subsets: Vec<Vec<usize>> = Vec::new();
            for subset in (0..n).combinations(k) {
                let core = self.det_core(&subset, &subset, false);
                if core.value.is_zero() {
                    continue;
                }
                match core.value.nu_cmp(&alpha) {
                    Ordering::Greater => dominant_subsets = vec![subset],
                    Ordering::Equal => dominant_subsets.push(subset),
                    Ordering::Less => {}
                }
                alpha = &alpha + &core.value;
            }
            index_sets.push(match dominant_subsets.len() {
                1 => dominant_subsets.pop(),
                _ => None,
            });
            coefficients.push(alpha);
        }
        let poly = Polynomial::from_descending(&coefficients);
        Ok(CharPolyReport {
            poly,
            coefficients,
            index_sets,
        })
    }

    /// `⊕_d c_d ⊙ A^d`.
    pub fn eval_poly(&self, f: &Polynomial) -> Result<Matrix> {
        let n = self.square_size()?;
        let mut out = Matrix::zeros(n, n);
        let mut power = Matrix::identity(n);
        let mut current = 0;
        for (d, c) in f.terms() {
            while current < d {
                power = power.mul(self)?;
                current += 1;
            }
            out = out.add(&power.scalar_mul(c))?;
        }
        Ok(out)
    }

    /// Tangible determinant.
    pub fn is_nonsingular(&self) -> Result<bool> {
        Ok(self.determinant()?.value.is_tangible())
    }

    pub fn is_strictly_singular(&self) -> Result<bool> {
        Ok(self.determinant()?.value.is_zero())
    }

    /// Nonsingular with `det(A) = 1 = a_{i,i}` for all `i`.
    pub fn is_definite(&self) -> Result<bool> {
        let n = self.square_size()?;
        if !(0..n).all(|i| *self.get(i, i) == Scalar::one()) {
            return Ok(false);
        }
        Ok(self.determinant()?.value == Scalar::one())
    }

    /// Nonsingular with the identity as its dominant permutation.
    pub fn is_diagonally_dominant(&self) -> Result<bool> {
        let n = self.square_size()?;
        let det = self.determinant()?;
        Ok(det.value.is_tangible() && det.dominant_permutations == vec![Permutation::identity(n)])
    }

    /// Diagonally dominant with every off-diagonal entry ghost or `0_R`.
    pub fn is_quasi_diagonally_dominant(&self) -> Result<bool> {
        Ok(self.is_diagonally_dominant()? && self.off_diagonal_ghost())
    }

    fn off_diagonal_ghost(&self) -> bool {
        (0..self.rows)
            .flat_map(|i| (0..self.cols).map(move |j| (i, j)))
            .filter(|(i, j)| i != j)
            .all(|(i, j)| self.get(i, j).is_ghost_or_zero())
    }

    /// `0_R` on the diagonal, ghost or `0_R` elsewhere.
    pub fn is_quasi_zero(&self) -> Result<bool> {
        let n = self.square_size()?;
        Ok((0..n).all(|i| self.get(i, i).is_zero()) && self.off_diagonal_ghost())
    }

    /// Nonsingular, idempotent, and of the form `I ⊕ Z` with `Z` quasi-zero.
    pub fn is_quasi_identity(&self) -> Result<bool> {
        let n = self.square_size()?;
        let shape = (0..n).all(|i| *self.get(i, i) == Scalar::one()) && self.off_diagonal_ghost();
        Ok(shape && self.is_nonsingular()? && self.mul(self)? == *self)
    }

    /// A generalized permutation matrix: exactly one tangible entry in each
    /// row and column, `0_R` elsewhere.
    pub fn is_invertible(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let n = self.rows;
        let mut col_hits = vec![0usize; n];
        for i in 0..n {
            let mut row_hits = 0;
            #[allow(clippy::needless_range_loop)]
            for j in 0..n {
                let a = self.get(i, j);
                if a.is_ghost() {
                    return false;
                }
                if a.is_tangible() {
                    row_hits += 1;
                    col_hits[j] += 1;
                }
            }
            if row_hits != 1 {
                return false;
            }
        }
        col_hits.iter().all(|&c| c == 1)
    }

    /// Checks `A^m` nonsingular for `m = 1..=m_max`, where `m_max` defaults
    /// to `n!` capped at [`STRONG_NONSINGULAR_CAP`].
    pub fn strong_nonsingularity(&self, m_max: Option<usize>) -> Result<StrongNonsingularity> {
        let n = self.check_bound("strong nonsingularity", DET_BOUND)?;
        let full = usize::try_from(factorial(n)).unwrap_or(usize::MAX);
        let limit = m_max.unwrap_or_else(|| full.min(STRONG_NONSINGULAR_CAP));
        let mut power = Matrix::identity(n);
        for m in 1..=limit {
            power = power.mul(self)?;
            if !power.is_nonsingular()? {
                return Ok(StrongNonsingularity {
                    holds: false,
                    checked: m,
                    truncated: false,
                    first_singular_power: Some(m),
                });
            }
        }
        Ok(StrongNonsingularity {
            holds: true,
            checked: limit,
            truncated: limit < full,
            first_singular_power: None,
        })
    }

    pub fn is_strongly_nonsingular(&self, m_max: Option<usize>) -> Result<bool> {
        Ok(self.strong_nonsingularity(m_max)?.holds)
    }

    /// `n!` must divide `m`; compares ν-values on the diagonal of `A^m`.
    pub fn diagonal_distinctness(&self, m: u64) -> Result<bool> {
        let n = self.square_size()?;
        let fact = factorial(n);
        if m == 0 || !m.is_multiple_of(fact) {
            return Err(Error::NotFactorialMultiple {
                exponent: m,
                n,
                factorial: fact,
            });
        }
        let power = self.pow(m)?;
        let diagonal: Vec<&Scalar> = (0..n).map(|i| power.get(i, i)).collect();
        Ok(diagonal
            .iter()
            .tuple_combinations()
            .all(|(a, b)| !a.nu_equiv(b)))
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;

    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

/// One row per line, single-space separated tokens.
impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("\n")?;
            }
            let tokens: Vec<String> = self.row(i).iter().map(Scalar::to_string).collect();
            f.write_str(&tokens.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let tokens: Vec<String> = self.row(i).iter().map(Scalar::to_string).collect();
            write!(f, "[{}]", tokens.join(" "))?;
        }
        f.write_str("]")
    }
}

/// Whitespace-separated tokens, one row per line. Blank lines and lines
/// starting with `#` are skipped.
impl FromStr for Matrix {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let rows: Vec<Vec<Scalar>> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| l.split_whitespace().map(str::parse).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        if rows.is_empty() {
            return Err(Error::Parse("empty matrix".into()));
        }
        Matrix::from_rows(rows).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Scalar>>,
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixRepr {
            rows: self.rows,
            cols: self.cols,
            entries: self.to_rows(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = MatrixRepr::deserialize(deserializer)?;
        if repr.entries.len() != repr.rows || repr.entries.iter().any(|r| r.len() != repr.cols) {
            return Err(D::Error::custom("entries do not match rows/cols"));
        }
        Matrix::new(repr.rows, repr.cols, repr.entries.into_iter().flatten().collect())
            .map_err(D::Error::custom)
    }
}

/// Formats a 0-based index set 1-based, e.g. `{1,3,4}`.
pub fn format_index_set(set: &[usize]) -> String {
    let items: Vec<String> = set.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", items.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(text: &str) -> Matrix {
        text.parse().unwrap()
    }

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    fn pathological() -> Matrix {
        m("10 10 9 -\n9 1 - -\n- - - 9\n9 - - -")
    }

    #[test]
    fn arithmetic_basics() {
        let a = pathological();
        assert_eq!(Matrix::identity(4).mul(&a).unwrap(), a);
        assert_eq!(a.mul(&Matrix::identity(4)).unwrap(), a);
        assert_eq!(a.trace().unwrap(), s("10"));
        assert_eq!(a.add(&a).unwrap(), a.nu_of());
        assert_eq!(a.pow(0).unwrap(), Matrix::identity(4));
        assert_eq!(a.pow(3).unwrap(), a.mul(&a).unwrap().mul(&a).unwrap());
        assert_eq!(a.transpose().transpose(), a);
        assert!(a.add(&Matrix::identity(3)).is_err());
        assert!(a.mul(&Matrix::zeros(3, 3)).is_err());
    }

    #[test]
    fn determinant_examples() {
        let det = pathological().determinant().unwrap();
        assert_eq!(det.value, s("28"));
        assert!(det.unique_tangible);
        assert_eq!(
            det.dominant_permutations,
            vec![Permutation::from_cycles(4, &[&[1, 3, 4], &[2]])]
        );

        let det = Matrix::identity(3).determinant().unwrap();
        assert_eq!(det.value, Scalar::one());
        assert_eq!(det.dominant_permutations, vec![Permutation::identity(3)]);

        let det = m("0 0\n0 0").determinant().unwrap();
        assert_eq!(det.value, s("0v"));
        assert_eq!(det.dominant_count, 2);
        assert!(!det.unique_tangible);

        assert!(matches!(
            Matrix::identity(11).determinant(),
            Err(Error::SizeBound { size: 11, .. })
        ));
        assert!(Matrix::zeros(2, 3).determinant().is_err());
    }

    #[test]
    fn ghost_weight_makes_determinant_ghost() {
        let det = m("3v -\n- 4").determinant().unwrap();
        assert_eq!(det.value, s("7v"));
        assert_eq!(det.dominant_count, 1);
        assert!(!det.unique_tangible);
        assert!(m("- 1\n- 2").is_strictly_singular().unwrap());
    }

    #[test]
    fn expansion_matches_enumeration() {
        let a = pathological();
        for row in 0..4 {
            assert_eq!(a.determinant_by_row_expansion(row).unwrap(), s("28"));
        }
    }

    #[test]
    fn adjoint_examples() {
        let adj = pathological().adjoint().unwrap();
        assert_eq!(adj, m("- - - 19\n- 27 - 27\n19 28 - 28\n- - 19 -"));
        assert_eq!(Matrix::identity(3).adjoint().unwrap(), Matrix::identity(3));
        assert_eq!(m("5").adjoint().unwrap(), Matrix::identity(1));
    }

    #[test]
    fn quasi_inverse_of_generalized_permutation_is_inverse() {
        let pi = Permutation::from_cycles(3, &[&[1, 2, 3]]);
        let p = Matrix::generalized_permutation(&pi, &[s("2"), s("-1"), s("7/2")]).unwrap();
        assert!(p.is_invertible());
        let inv = p.quasi_inverse().unwrap();
        assert_eq!(p.mul(&inv).unwrap(), Matrix::identity(3));
        assert_eq!(inv.mul(&p).unwrap(), Matrix::identity(3));
        assert!(matches!(
            m("0 0\n0 0").quasi_inverse(),
            Err(Error::NotInvertible(_))
        ));
    }

    #[test]
    fn char_poly_examples() {
        let report = pathological().char_poly().unwrap();
        assert_eq!(report.poly.to_string(), "x^4 + 10x^3 + 19x^2 + 27x + 28");
        assert_eq!(
            report.index_sets,
            vec![
                Some(vec![]),
                Some(vec![0]),
                Some(vec![0, 1]),
                Some(vec![0, 2, 3]),
                Some(vec![0, 1, 2, 3])
            ]
        );

        let adj = pathological().adjoint().unwrap().char_poly().unwrap();
        assert_eq!(adj.poly.to_string(), "x^4 + 27x^3 + 47x^2 + 74v x + 84");
        assert_eq!(
            adj.index_sets,
            vec![
                Some(vec![]),
                Some(vec![1]),
                Some(vec![2, 3]),
                Some(vec![1, 2, 3]),
                Some(vec![0, 1, 2, 3])
            ]
        );

        let diag = Matrix::diagonal(&[s("5"), s("3"), s("-2")]).char_poly().unwrap();
        assert_eq!(diag.coefficients, vec![s("0"), s("5"), s("8"), s("6")]);
        assert_eq!(diag.index_sets[2], Some(vec![0, 1]));
    }

    #[test]
    fn char_poly_ends_are_trace_and_determinant() {
        let a = m("1 4 -\n2v 0 3\n- 5 -1");
        let report = a.char_poly().unwrap();
        assert_eq!(report.coefficients[1], a.trace().unwrap());
        assert_eq!(report.coefficients[3], a.determinant().unwrap().value);
    }

    #[test]
    fn ghost_coefficient_without_unique_subset() {
        // both 1x1 principal minors tie
        let report = m("2 -\n- 2").char_poly().unwrap();
        assert_eq!(report.coefficients[1], s("2v"));
        assert_eq!(report.index_sets[1], None);
        assert_eq!(report.index_sets[2], Some(vec![0, 1]));
    }

    #[test]
    fn predicates() {
        let id = Matrix::identity(3);
        assert!(id.is_nonsingular().unwrap());
        assert!(id.is_definite().unwrap());
        assert!(id.is_quasi_identity().unwrap());
        assert!(id.is_diagonally_dominant().unwrap());
        let tie = m("0 0\n0 0");
        assert!(!tie.is_nonsingular().unwrap());
        assert!(!tie.is_strictly_singular().unwrap());
        assert!(m("- 1v\n2v -").is_quasi_zero().unwrap());
        assert!(!m("0 1v\n2v -").is_quasi_zero().unwrap());
        assert!(m("0 -1v\n-3v 0").is_quasi_identity().unwrap());
        // the off-diagonal cycle 3v + -1v outweighs the diagonal
        assert!(!m("0 -1v\n3v 0").is_quasi_identity().unwrap());
        assert!(Matrix::diagonal(&[s("1"), s("2")]).is_nonsingular().unwrap());
    }

    #[test]
    fn quasi_identities_from_quasi_inverse() {
        let a = pathological();
        let nabla = a.quasi_inverse().unwrap();
        let left = a.mul(&nabla).unwrap();
        let right = nabla.mul(&a).unwrap();
        assert!(left.is_quasi_identity().unwrap(), "{left}");
        assert!(right.is_quasi_identity().unwrap(), "{right}");
    }

    #[test]
    fn elementary_matrices() {
        let e = Matrix::transposition(0, 1, 2).unwrap();
        assert_eq!(e.mul(&e).unwrap(), Matrix::identity(2));
        let d = Matrix::diagonal_multiplier(1, &s("4"), 3).unwrap();
        let d_inv = Matrix::diagonal_multiplier(1, &s("-4"), 3).unwrap();
        assert_eq!(d.mul(&d_inv).unwrap(), Matrix::identity(3));
        assert!(Matrix::diagonal_multiplier(1, &s("4v"), 3).is_err());
        let g = Matrix::gaussian(0, 2, &s("1"), 3).unwrap();
        assert!(!g.is_invertible());
        assert!(Matrix::gaussian(0, 0, &s("1"), 3).is_err());
        assert!(matches!(
            Matrix::transposition(0, 3, 3),
            Err(Error::IndexOutOfRange { index: 3, size: 3 })
        ));
        let pi = Permutation::from_cycles(4, &[&[1, 3, 4]]);
        let p = Matrix::permutation_matrix(&pi);
        let p_inv = Matrix::permutation_matrix(&pi.inverse());
        assert_eq!(p.mul(&p_inv).unwrap(), Matrix::identity(4));
    }

    #[test]
    fn cayley_hamilton_small_case() {
        let a = m("1 0\n0 0");
        let f = a.char_poly().unwrap().poly;
        assert_eq!(f.to_string(), "x^2 + 1x + 1");
        assert_eq!(a.eval_poly(&f).unwrap(), m("2v 1v\n1v 1v"));
        assert_eq!(a.eval_poly(&"x".parse().unwrap()).unwrap(), a);
        let f = pathological().char_poly().unwrap().poly;
        assert!(pathological().eval_poly(&f).unwrap().is_ghost());
    }

    #[test]
    fn strong_nonsingularity_and_diagonal_distinctness() {
        let d = Matrix::diagonal(&[s("3"), s("2"), s("1")]);
        let report = d.strong_nonsingularity(None).unwrap();
        assert!(report.holds);
        assert_eq!(report.checked, 6);
        assert!(!report.truncated);
        assert!(d.diagonal_distinctness(6).unwrap());
        assert!(matches!(
            d.diagonal_distinctness(4),
            Err(Error::NotFactorialMultiple { .. })
        ));
        let a = pathological();
        assert!(!a.diagonal_distinctness(24).unwrap());
        // det(A) = 5 but A^2 has two dominant permutations of weight 11
        let report = m("0 0\n1 5").strong_nonsingularity(None).unwrap();
        assert!(!report.holds);
        assert_eq!(report.first_singular_power, Some(2));
    }

    #[test]
    fn text_and_json_formats() {
        let a = m("10 -3/2v -\n47/2 0 1v");
        assert_eq!(a.to_string(), "10 -3/2v -\n47/2 0 1v");
        assert_eq!(m(&a.to_string()), a);
        let json = serde_json::to_string(&a).unwrap();
        let back: Matrix = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
        assert!("1 2\n3".parse::<Matrix>().is_err());
        assert!("".parse::<Matrix>().is_err());
        assert!("1 x".parse::<Matrix>().is_err());
        assert_eq!(m("# comment\n1 2\n\n3 4\n"), m("1 2\n3 4"));
    }
}
