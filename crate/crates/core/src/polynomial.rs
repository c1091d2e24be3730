//! Univariate supertropical polynomials viewed as functions.
//!
//! A polynomial is a sparse map from exponent to non-zero coefficient. The
//! function it defines is the upper envelope of the lines `c_d + d·x`, so the
//! essential monomials are the points `(d, ν(c_d))` on the upper concave hull
//! and the corner roots are the slopes between neighbouring hull points.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A tropical polynomial `⊕_d c_d x^d`; absent exponents are `0_R`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Polynomial {
    coeffs: BTreeMap<usize, Scalar>,
}

fn rat(value: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(value))
}

impl Polynomial {
    /// The zero polynomial.
    pub fn new() -> Self {
        Self::default()
    }

    /// `c x^d`.
    pub fn monomial(coeff: Scalar, degree: usize) -> Self {
        let mut poly = Self::new();
        poly.set(degree, coeff);
        poly
    }

    /// `x ⊕ r`, with `r` allowed to be `0_R`.
    pub fn linear(root: Scalar) -> Self {
        let mut poly = Self::monomial(Scalar::one(), 1);
        poly.set(0, root);
        poly
    }

    /// Builds from exponent/coefficient pairs; repeated exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (usize, Scalar)>>(terms: I) -> Self {
        let mut poly = Self::new();
        for (degree, coeff) in terms {
            let merged = &poly.coeff(degree) + &coeff;
            poly.set(degree, merged);
        }
        poly
    }

    /// Builds from coefficients listed from the leading term down to the
    /// constant, so `[a0, a1, .., an]` is `a0 x^n ⊕ a1 x^(n-1) ⊕ .. ⊕ an`.
    pub fn from_descending(coeffs: &[Scalar]) -> Self {
        let n = coeffs.len().saturating_sub(1);
        Self::from_terms(coeffs.iter().enumerate().map(|(k, c)| (n - k, c.clone())))
    }

    fn set(&mut self, degree: usize, coeff: Scalar) {
        if coeff.is_zero() {
            self.coeffs.remove(&degree);
        } else {
            self.coeffs.insert(degree, coeff);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    /// Lowest exponent carrying a non-zero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.keys().next().copied()
    }

    pub fn coeff(&self, degree: usize) -> Scalar {
        self.coeffs.get(&degree).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Present monomials in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (usize, &Scalar)> {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    /// Every coefficient tangible.
    pub fn is_tangible(&self) -> bool {
        self.coeffs.values().all(Scalar::is_tangible)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .fold(Scalar::zero(), |acc, (d, c)| &acc + &(c * &x.pow(*d as u64)))
    }

    /// `f(r)` is ghost or `0_R`.
    pub fn is_root(&self, r: &Scalar) -> bool {
        self.eval(r).is_ghost_or_zero()
    }

    /// Whether the monomial of exponent `degree` dominates for some tangible `x`.
    fn dominates_somewhere(&self, degree: usize, value: &BigRational) -> bool {
        let mut lower: Option<BigRational> = None;
        let mut upper: Option<BigRational> = None;
        for (e, c) in &self.coeffs {
            if *e == degree {
                continue;
            }
            let other = c.value().expect("stored coefficients are non-zero");
            if *e < degree {
                // value + d x >= other + e x  <=>  x >= (other - value) / (d - e)
                let bound = (other - value) / rat(degree - e);
                if lower.as_ref().is_none_or(|l| bound > *l) {
                    lower = Some(bound);
                }
            } else {
                let bound = (value - other) / rat(e - degree);
                if upper.as_ref().is_none_or(|u| bound < *u) {
                    upper = Some(bound);
                }
            }
        }
        match (lower, upper) {
            (Some(l), Some(u)) => l <= u,
            _ => true,
        }
    }

    /// `f^es`: the monomials that dominate for some `x`. A monomial meeting
    /// the envelope at a single point is kept.
    pub fn essential(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .filter(|(d, c)| self.dominates_somewhere(**d, c.value().unwrap()))
            .map(|(d, c)| (*d, c.clone()))
            .collect();
        Polynomial { coeffs }
    }

    pub fn is_essential(&self) -> bool {
        self.essential() == *self
    }

    /// Corner roots (merged across collinear essential monomials), ghost
    /// dominated stretches, and the multiplicity of the root `0_R`.
    pub fn roots(&self) -> RootSet {
        let essential = self.essential();
        let terms: Vec<(usize, &Scalar)> = essential.terms().rev().collect();
        let zero_multiplicity = essential.low_degree().unwrap_or(0);

        let mut roots: Vec<Root> = Vec::new();
        for pair in terms.windows(2) {
            let (d_hi, c_hi) = pair[0];
            let (d_lo, c_lo) = pair[1];
            let value = (c_lo.value().unwrap() - c_hi.value().unwrap()) / rat(d_hi - d_lo);
            match roots.last_mut() {
                Some(last) if last.value.value() == Some(&value) => {
                    last.multiplicity += d_hi - d_lo;
                    last.low_degree = d_lo;
                    last.ghost_flanked = essential.coeff(last.high_degree).is_ghost() || c_lo.is_ghost();
                }
                _ => roots.push(Root {
                    value: Scalar::tangible(value),
                    multiplicity: d_hi - d_lo,
                    high_degree: d_hi,
                    low_degree: d_lo,
                    ghost_flanked: c_hi.is_ghost() || c_lo.is_ghost(),
                }),
            }
        }

        // A ghost hull vertex dominates between the roots on either side of it.
        let mut ghost_intervals = Vec::new();
        for (d, c) in essential.terms() {
            if !c.is_ghost() {
                continue;
            }
            let above = roots.iter().find(|r| r.low_degree == d);
            let below = roots.iter().find(|r| r.high_degree == d);
            if roots.iter().any(|r| r.low_degree < d && d < r.high_degree) {
                continue;
            }
            ghost_intervals.push(NuInterval {
                low: below.map(|r| r.value.clone()),
                high: above.map(|r| r.value.clone()),
            });
        }
        ghost_intervals.sort_by(|a, b| match (&a.high, &b.high) {
            (None, None) => std::cmp::Ordering::Equal,
            (None, Some(_)) => std::cmp::Ordering::Less,
            (Some(_), None) => std::cmp::Ordering::Greater,
            (Some(x), Some(y)) => y.nu_cmp(x),
        });

        RootSet {
            roots,
            ghost_intervals,
            zero_multiplicity,
        }
    }

    /// Factors `f` as a function into `c ⊙ x^z ⊙ Π (x ⊕ r)^m`.
    pub fn primary_factorization(&self) -> Option<Factorization> {
        let leading = self.coeff(self.degree()?);
        let roots = self.roots();
        let residue = !roots.ghost_intervals.is_empty()
            || roots.roots.iter().any(|r| r.ghost_flanked)
            || self.essential().coeffs.values().any(Scalar::is_ghost);
        Some(Factorization {
            leading,
            factors: roots
                .roots
                .iter()
                .map(|r| (r.value.clone(), r.multiplicity))
                .collect(),
            zero_multiplicity: roots.zero_multiplicity,
            residue,
        })
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut sum = self.clone();
        for (d, c) in &other.coeffs {
            let merged = &sum.coeff(*d) + c;
            sum.set(*d, merged);
        }
        sum
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut product = Polynomial::new();
        for (d1, c1) in &self.coeffs {
            for (d2, c2) in &other.coeffs {
                let merged = &product.coeff(d1 + d2) + &(c1 * c2);
                product.set(d1 + d2, merged);
            }
        }
        product
    }

    /// `c ⊙ f`.
    pub fn scale(&self, c: &Scalar) -> Polynomial {
        Polynomial::from_terms(self.coeffs.iter().map(|(d, a)| (*d, c * a)))
    }

    /// `f^m` as a supertropical product; `f^0 = 1`.
    pub fn pow(&self, m: u32) -> Polynomial {
        (0..m).fold(Polynomial::monomial(Scalar::one(), 0), |acc, _| acc.mul(self))
    }

    /// `f(x^m)`.
    pub fn substitute_power(&self, m: usize) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|(d, c)| (d * m, c.clone())).collect(),
        }
    }

    /// `c ⊙ x^n ⊙ f(x^-1)` with `n = deg f`.
    pub fn reverse_scale(&self, c: &Scalar) -> Polynomial {
        let Some(n) = self.degree() else {
            return Polynomial::new();
        };
        Polynomial::from_terms(self.coeffs.iter().map(|(d, a)| (n - d, c * a)))
    }

    /// Coefficient-wise `⊨gs` over every exponent (absent = `0_R`).
    pub fn ghost_surpasses(&self, other: &Polynomial) -> bool {
        let degrees: std::collections::BTreeSet<usize> =
            self.coeffs.keys().chain(other.coeffs.keys()).copied().collect();
        degrees
            .into_iter()
            .all(|d| self.coeff(d).ghost_surpasses(&other.coeff(d)))
    }

    /// Coefficient-wise `⊨gs` with at least one exponent where the two differ.
    pub fn strictly_ghost_surpasses(&self, other: &Polynomial) -> bool {
        self.ghost_surpasses(other) && self != other
    }

    /// Interpolated value of the upper ν-envelope at exponent `degree`, if
    /// `degree` lies within the exponent range.
    pub fn envelope_at(&self, degree: usize) -> Option<BigRational> {
        let essential = self.essential();
        if let Some(c) = essential.coeffs.get(&degree) {
            return c.value().cloned();
        }
        let (lo_d, lo_c) = essential.coeffs.range(..degree).next_back()?;
        let (hi_d, hi_c) = essential.coeffs.range(degree..).next()?;
        let (lo_v, hi_v) = (lo_c.value().unwrap(), hi_c.value().unwrap());
        Some(lo_v + (hi_v - lo_v) * rat(degree - lo_d) / rat(hi_d - lo_d))
    }

    /// The canonical representative of `f` as a function: every vertex of
    /// the upper envelope keeps its coefficient, every other exponent in
    /// range holds the ghost of the envelope value. A monomial strictly
    /// inside an envelope edge only ever ties, so ghosting it is harmless.
    /// Function-equal polynomials share the same normal form.
    pub fn functional_normal_form(&self) -> Polynomial {
        let (Some(low), Some(high)) = (self.low_degree(), self.degree()) else {
            return Polynomial::new();
        };
        let essential = self.essential();
        let hull: Vec<(usize, &Scalar)> = essential.terms().collect();
        let slope = |a: (usize, &Scalar), b: (usize, &Scalar)| {
            (b.1.value().unwrap() - a.1.value().unwrap()) / rat(b.0 - a.0)
        };
        let mut vertices = BTreeMap::new();
        for (i, &(d, c)) in hull.iter().enumerate() {
            let interior = i > 0 && i + 1 < hull.len() && slope(hull[i - 1], (d, c)) == slope((d, c), hull[i + 1]);
            if !interior {
                vertices.insert(d, c.clone());
            }
        }
        let coeffs = (low..=high)
            .map(|d| match vertices.get(&d) {
                Some(c) => (d, c.clone()),
                None => (d, Scalar::ghost(self.envelope_at(d).unwrap())),
            })
            .collect();
        Polynomial { coeffs }
    }

    /// Tangible points where both functions can change behaviour: every
    /// breakpoint, midpoints between consecutive ones, and one point beyond
    /// each end. Together with `0_R` this decides functional relations.
    pub fn critical_points(polys: &[&Polynomial]) -> Vec<Scalar> {
        let mut breaks: Vec<BigRational> = polys
            .iter()
            .flat_map(|p| p.breakpoints())
            .collect();
        breaks.sort();
        breaks.dedup();
        let mut points = vec![Scalar::zero()];
        match (breaks.first(), breaks.last()) {
            (Some(first), Some(last)) => {
                points.push(Scalar::tangible(first - rat(1)));
                for pair in breaks.windows(2) {
                    points.push(Scalar::tangible(pair[0].clone()));
                    points.push(Scalar::tangible((&pair[0] + &pair[1]) / rat(2)));
                }
                points.push(Scalar::tangible(last.clone()));
                points.push(Scalar::tangible(last + rat(1)));
            }
            _ => points.push(Scalar::one()),
        }
        points
    }

    /// Every pairwise crossing of two present monomials.
    fn breakpoints(&self) -> Vec<BigRational> {
        let terms: Vec<(usize, &BigRational)> = self
            .coeffs
            .iter()
            .map(|(d, c)| (*d, c.value().unwrap()))
            .collect();
        let mut out = Vec::new();
        for (i, (d1, v1)) in terms.iter().enumerate() {
            for (d2, v2) in &terms[i + 1..] {
                out.push((*v1 - *v2) / rat(d2 - d1));
            }
        }
        out
    }

    /// `f(x) ⊨gs g(x)` for every `x`, decided on the critical points.
    pub fn ghost_surpasses_as_function(&self, other: &Polynomial) -> bool {
        Polynomial::critical_points(&[self, other])
            .iter()
            .all(|x| self.eval(x).ghost_surpasses(&other.eval(x)))
    }

    /// `f(x) = g(x)` for every `x`, decided on the critical points.
    pub fn equals_as_function(&self, other: &Polynomial) -> bool {
        Polynomial::critical_points(&[self, other])
            .iter()
            .all(|x| self.eval(x) == other.eval(x))
    }
}

/// `Π (x ⊕ r)^m` over the given primary factors.
pub fn expand_primary_product(factors: &[(Scalar, usize)]) -> Polynomial {
    factors
        .iter()
        .fold(Polynomial::monomial(Scalar::one(), 0), |acc, (r, m)| {
            acc.mul(&Polynomial::linear(r.clone()).pow(*m as u32))
        })
}

/// A root where two essential monomials exchange dominance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Root {
    pub value: Scalar,
    pub multiplicity: usize,
    /// Exponent of the essential monomial dominating just above the root.
    pub high_degree: usize,
    /// Exponent of the essential monomial dominating just below the root.
    pub low_degree: usize,
    /// One of the two flanking monomials is a ghost, so this root borders a
    /// non-corner stretch.
    pub ghost_flanked: bool,
}

/// A ν-interval, closed at finite ends; `None` means unbounded.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NuInterval {
    pub low: Option<Scalar>,
    pub high: Option<Scalar>,
}

impl NuInterval {
    pub fn contains(&self, x: &Scalar) -> bool {
        if x.is_zero() {
            return self.low.is_none();
        }
        self.low.as_ref().is_none_or(|l| l.nu_cmp(x).is_le())
            && self.high.as_ref().is_none_or(|h| x.nu_cmp(h).is_le())
    }
}

impl fmt::Display for NuInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let end = |v: &Option<Scalar>, inf: &str| match v {
            Some(v) => v.to_string(),
            None => inf.to_string(),
        };
        write!(f, "[{}, {}]", end(&self.low, "-inf"), end(&self.high, "+inf"))
    }
}

/// Roots of a polynomial, listed ν-decreasing from the leading monomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSet {
    pub roots: Vec<Root>,
    /// Stretches on which a ghost essential monomial dominates alone; every
    /// point in them is a non-corner root.
    pub ghost_intervals: Vec<NuInterval>,
    /// Multiplicity of `0_R` as a root (the lowest present exponent).
    pub zero_multiplicity: usize,
}

impl RootSet {
    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum::<usize>() + self.zero_multiplicity
    }
}

/// `leading ⊙ x^zero_multiplicity ⊙ Π (x ⊕ r)^m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    pub leading: Scalar,
    pub factors: Vec<(Scalar, usize)>,
    pub zero_multiplicity: usize,
    /// Set when a ghost essential coefficient prevents an exact primary
    /// decomposition; the factors then only describe the corner structure.
    pub residue: bool,
}

impl Factorization {
    pub fn expand(&self) -> Polynomial {
        expand_primary_product(&self.factors)
            .mul(&Polynomial::monomial(self.leading.clone(), self.zero_multiplicity))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("-");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let var = match d {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{d}"),
            };
            if *d == 0 {
                write!(f, "{c}")?;
            } else if *c == Scalar::one() {
                f.write_str(&var)?;
            } else if c.is_ghost() {
                write!(f, "{c} {var}")?;
            } else {
                write!(f, "{c}{var}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "-" {
            return Ok(Polynomial::new());
        }
        let mut terms = Vec::new();
        for raw in text.split('+') {
            let term = raw.trim();
            if term.is_empty() {
                return Err(Error::Parse(format!("empty term in `{text}`")));
            }
            let (coeff, degree) = match term.split_once('x') {
                None => (term.parse::<Scalar>()?, 0),
                Some((coeff, power)) => {
                    let coeff = coeff.trim();
                    let coeff = if coeff.is_empty() {
                        Scalar::one()
                    } else {
                        coeff.parse()?
                    };
                    let power = power.trim();
                    let degree = if power.is_empty() {
                        1
                    } else {
                        power
                            .strip_prefix('^')
                            .and_then(|p| p.trim().parse::<usize>().ok())
                            .ok_or_else(|| Error::Parse(format!("bad exponent in `{term}`")))?
                    };
                    (coeff, degree)
                }
            };
            terms.push((degree, coeff));
        }
        Ok(Polynomial::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> Polynomial {
        text.parse().unwrap()
    }

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    #[test]
    fn eval_examples() {
        let f = p("x^4 + 10x^3 + 19x^2 + 27x + 28");
        assert_eq!(f.eval(&s("9")), s("37v"));
        assert_eq!(p("x + 5").eval(&s("7")), s("7"));
        assert_eq!(f.eval(&Scalar::zero()), s("28"));
        assert_eq!(p("x^2 + 3x").eval(&Scalar::zero()), Scalar::zero());
    }

    #[test]
    fn essential_examples() {
        let f = p("x^4 + 10x^3 + 19x^2 + 27x + 28");
        assert_eq!(f.essential(), f);
        assert_eq!(
            p("x^4 + 27x^3 + 47x^2 + 74v x + 84").essential(),
            p("x^4 + 27x^3 + 74v x + 84")
        );
        assert_eq!(p("x^2 + 0x + 10").essential(), p("x^2 + 10"));
        // collinear point touching the envelope at a single x is essential
        assert_eq!(p("x^2 + 5x + 10").essential(), p("x^2 + 5x + 10"));
    }

    #[test]
    fn corner_roots_of_tangible_char_poly() {
        let roots = p("x^4 + 10x^3 + 19x^2 + 27x + 28").roots();
        let values: Vec<(Scalar, usize)> = roots
            .roots
            .iter()
            .map(|r| (r.value.clone(), r.multiplicity))
            .collect();
        assert_eq!(
            values,
            vec![(s("10"), 1), (s("9"), 1), (s("8"), 1), (s("1"), 1)]
        );
        assert!(roots.ghost_intervals.is_empty());
        assert_eq!(roots.zero_multiplicity, 0);
    }

    #[test]
    fn corner_roots_with_ghost_coefficient() {
        let roots = p("x^4 + 27x^3 + 74v x + 84").roots();
        let values: Vec<(Scalar, usize, bool)> = roots
            .roots
            .iter()
            .map(|r| (r.value.clone(), r.multiplicity, r.ghost_flanked))
            .collect();
        assert_eq!(
            values,
            vec![(s("27"), 1, false), (s("47/2"), 2, true), (s("10"), 1, true)]
        );
        assert_eq!(
            roots.ghost_intervals,
            vec![NuInterval {
                low: Some(s("10")),
                high: Some(s("47/2")),
            }]
        );
        assert_eq!(roots.total_multiplicity(), 4);
        // the whole stretch consists of non-corner roots
        let f = p("x^4 + 27x^3 + 74v x + 84");
        assert!(f.is_root(&s("15")));
        assert!(!f.is_root(&s("25")));
    }

    #[test]
    fn primary_power_has_single_root() {
        let f = expand_primary_product(&[(s("3"), 3)]);
        assert_eq!(f, p("x^3 + 3v x^2 + 6v x + 9"));
        let roots = f.roots();
        assert_eq!(roots.roots.len(), 1);
        assert_eq!(roots.roots[0].value, s("3"));
        assert_eq!(roots.roots[0].multiplicity, 3);
        assert!(!roots.roots[0].ghost_flanked);
        assert!(roots.ghost_intervals.is_empty());
    }

    #[test]
    fn zero_root_and_leading_ghost() {
        let roots = p("x^3 + 4x^2").roots();
        assert_eq!(roots.zero_multiplicity, 2);
        assert_eq!(roots.roots.len(), 1);
        let roots = p("5v x + 2").roots();
        assert_eq!(
            roots.ghost_intervals,
            vec![NuInterval {
                low: Some(s("-3")),
                high: None
            }]
        );
    }

    #[test]
    fn is_root_examples() {
        let f = p("x^4 + 10x^3 + 19x^2 + 27x + 28");
        assert!(f.is_root(&s("9")));
        assert!(!f.is_root(&s("7")));
        assert!(p("x + 5").is_root(&s("5")));
    }

    #[test]
    fn factorization_examples() {
        let f = p("x^4 + 10x^3 + 19x^2 + 27x + 28");
        let fac = f.primary_factorization().unwrap();
        assert_eq!(
            fac.factors,
            vec![(s("10"), 1), (s("9"), 1), (s("8"), 1), (s("1"), 1)]
        );
        assert!(!fac.residue);
        assert_eq!(
            expand_primary_product(&fac.factors),
            p("x^4 + 10x^3 + 19x^2 + 27x + 28")
        );
        assert_eq!(expand_primary_product(&[(s("4"), 1)]), p("x + 4"));
        assert!(p("x^4 + 27x^3 + 74v x + 84").primary_factorization().unwrap().residue);
        assert_eq!(
            p("3x^2 + 5x").primary_factorization().unwrap().expand(),
            p("3x^2 + 5x")
        );
    }

    #[test]
    fn power_and_substitution() {
        assert_eq!(p("x + 3").pow(2), p("x^2 + 3v x + 6"));
        assert_eq!(p("x^2 + 1x + 5").substitute_power(3), p("x^6 + 1x^3 + 5"));
        // x^2 (x^-2 + 1 x^-1 + 5) = 5x^2 + 1x + 0, then scaled by 5
        assert_eq!(p("x^2 + 1x + 5").reverse_scale(&s("5")), p("10x^2 + 6x + 5"));
    }

    #[test]
    fn ghost_surpassing_polynomials() {
        let f = p("x^2 + 3v x + 6");
        assert!(f.ghost_surpasses(&f));
        assert!(f.ghost_surpasses(&p("x^2 + 2x + 6")));
        assert!(!p("x^2 + 6").ghost_surpasses(&f));
        assert!(p("x^2 + 6").ghost_surpasses_as_function(&f));
        assert!(f.strictly_ghost_surpasses(&p("x^2 + 6")));
    }

    #[test]
    fn normal_form_identifies_functions() {
        let a = p("x^2 + 6");
        let b = p("x^2 + 3v x + 6");
        let c = p("x^2 + 1x + 6");
        assert!(a.equals_as_function(&b));
        assert!(a.equals_as_function(&c));
        assert_eq!(a.functional_normal_form(), b);
        assert_eq!(c.functional_normal_form(), b);
        assert_eq!(p("x^3 + 5").functional_normal_form(), p("x^3 + 5/3v x^2 + 10/3v x + 5"));
    }

    #[test]
    fn text_round_trip() {
        for text in [
            "x^4 + 10x^3 + 19x^2 + 27x + 28",
            "x^4 + 27x^3 + 74v x + 84",
            "-3/2x^2 + 0v x^1 + -",
            "x",
            "5v",
            "-",
        ] {
            let once = p(text).to_string();
            assert_eq!(p(&once).to_string(), once);
        }
        assert_eq!(p("x^4 + 27x^3 + 74v x + 84").to_string(), "x^4 + 27x^3 + 74v x + 84");
        assert_eq!(p("0v x^2 + 1").to_string(), "0v x^2 + 1");
        assert!("x^ + 1".parse::<Polynomial>().is_err());
        assert!("x + + 1".parse::<Polynomial>().is_err());
    }
}
