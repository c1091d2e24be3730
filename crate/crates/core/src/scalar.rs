//! Supertropical scalars in additive (max-plus) notation.
//!
//! An element is either tangible, a ghost, or the zero `0_R = -inf`. Addition
//! returns the larger argument and ghosts ties; multiplication adds values.
//!
//! | op      | result                                   |
//! |---------|------------------------------------------|
//! | `a ⊕ b` | larger of `a`, `b`; ghost on a ν-tie     |
//! | `a ⊙ b` | `a + b`; ghost if either factor is ghost |
//! | `0_R`   | neutral for ⊕, annihilates ⊙             |
//! | `1`     | tangible `0`                             |
//!
//! Values are exact rationals so every tie is decided exactly.
//!
//! ```
//! use supertropical::Scalar;
//!
//! let five: Scalar = "5".parse().unwrap();
//! assert_eq!(&five + &five, "5v".parse().unwrap());
//! assert_eq!(&five * &"3".parse().unwrap(), "8".parse().unwrap());
//! ```

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Which part of `R = T ∪ G ∪ {0_R}` an element lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Layer {
    Tangible,
    Ghost,
    Zero,
}

/// An element of the standard supertropical semiring.
///
/// The stored value of `0_R` is canonically `0`, so derived equality is
/// structural equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    value: BigRational,
    layer: Layer,
}

impl Scalar {
    /// `0_R`, the additive identity (`-inf`).
    pub fn zero() -> Self {
        Scalar {
            value: BigRational::zero(),
            layer: Layer::Zero,
        }
    }

    /// The multiplicative identity: tangible `0`.
    pub fn one() -> Self {
        Self::tangible(BigRational::zero())
    }

    pub fn tangible(value: BigRational) -> Self {
        Scalar {
            value,
            layer: Layer::Tangible,
        }
    }

    pub fn ghost(value: BigRational) -> Self {
        Scalar {
            value,
            layer: Layer::Ghost,
        }
    }

    pub fn int(value: i64) -> Self {
        Self::tangible(BigRational::from_integer(value.into()))
    }

    pub fn ghost_int(value: i64) -> Self {
        Self::ghost(BigRational::from_integer(value.into()))
    }

    /// Tangible `numer / denom`. Panics if `denom == 0`.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        Self::tangible(BigRational::new(numer.into(), denom.into()))
    }

    pub fn layer(&self) -> Layer {
        self.layer
    }

    /// The max-plus magnitude, or `None` for `0_R`.
    pub fn value(&self) -> Option<&BigRational> {
        match self.layer {
            Layer::Zero => None,
            _ => Some(&self.value),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.layer == Layer::Zero
    }

    pub fn is_ghost(&self) -> bool {
        self.layer == Layer::Ghost
    }

    pub fn is_tangible(&self) -> bool {
        self.layer == Layer::Tangible
    }

    /// Ghost or zero, i.e. `self ⊨gs 0_R`.
    pub fn is_ghost_or_zero(&self) -> bool {
        self.layer != Layer::Tangible
    }

    fn with_layer(&self, layer: Layer) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Scalar {
            value: self.value.clone(),
            layer,
        }
    }

    /// ν-projection onto the ghost layer. Fixes ghosts and `0_R`.
    pub fn nu(&self) -> Self {
        self.with_layer(Layer::Ghost)
    }

    /// Tangible lift keeping the value. Fixes tangibles and `0_R`.
    pub fn hat(&self) -> Self {
        self.with_layer(Layer::Tangible)
    }

    /// `self^k`, i.e. `k · value`. `a^0` is the multiplicative identity.
    pub fn pow(&self, k: u64) -> Self {
        if k == 0 {
            return Self::one();
        }
        if self.is_zero() {
            return Self::zero();
        }
        Scalar {
            value: &self.value * BigRational::from_integer(BigInt::from(k)),
            layer: self.layer,
        }
    }

    /// The `k`-th root, i.e. `value / k`, layer preserved.
    pub fn kth_root(&self, k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidRootOrder(k));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        Ok(Scalar {
            value: &self.value / BigRational::from_integer(BigInt::from(k)),
            layer: self.layer,
        })
    }

    /// Multiplicative inverse of a tangible element.
    pub fn inv(&self) -> Result<Self> {
        match self.layer {
            Layer::Tangible => Ok(Self::tangible(-&self.value)),
            _ => Err(Error::NotInvertible(self.to_string())),
        }
    }

    /// Total order on ν-values with `0_R` minimal.
    pub fn nu_cmp(&self, other: &Self) -> Ordering {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            (false, false) => self.value.cmp(&other.value),
        }
    }

    /// `a ≅ν b`.
    pub fn nu_equiv(&self, other: &Self) -> bool {
        self.nu_cmp(other) == Ordering::Equal
    }

    /// `a ⊨gs b`: `a = b`, or `a` is a ghost with `a^ν ≥ b^ν`.
    pub fn ghost_surpasses(&self, other: &Self) -> bool {
        self == other || (self.is_ghost() && self.nu_cmp(other) != Ordering::Less)
    }

    /// `⊕` over an iterator; `0_R` when empty.
    pub fn sum<'a, I: IntoIterator<Item = &'a Scalar>>(items: I) -> Scalar {
        items.into_iter().fold(Scalar::zero(), |acc, x| &acc + x)
    }

    /// `⊙` over an iterator; the identity when empty.
    pub fn product<'a, I: IntoIterator<Item = &'a Scalar>>(items: I) -> Scalar {
        items.into_iter().fold(Scalar::one(), |acc, x| &acc * x)
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Add for &Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        match self.nu_cmp(rhs) {
            Ordering::Greater => self.clone(),
            Ordering::Less => rhs.clone(),
            Ordering::Equal => self.nu(),
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;

    fn add(self, rhs: Scalar) -> Scalar {
        match self.nu_cmp(&rhs) {
            Ordering::Greater => self,
            Ordering::Less => rhs,
            Ordering::Equal => self.nu(),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        let layer = if self.is_ghost() || rhs.is_ghost() {
            Layer::Ghost
        } else {
            Layer::Tangible
        };
        Scalar {
            value: &self.value + &rhs.value,
            layer,
        }
    }
}

impl Mul for Scalar {
    type Output = Scalar;

    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

fn format_rational(value: &BigRational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.layer {
            Layer::Zero => f.write_str("-"),
            Layer::Tangible => f.write_str(&format_rational(&self.value)),
            Layer::Ghost => write!(f, "{}v", format_rational(&self.value)),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses an exact rational: `7`, `-3/2` or a finite decimal such as `23.5`.
pub(crate) fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("invalid number `{text}`"));
    if let Some((numer, denom)) = text.split_once('/') {
        let numer: BigInt = numer.parse().map_err(|_| bad())?;
        let denom: BigInt = denom.parse().map_err(|_| bad())?;
        if denom.is_zero() || denom.is_negative() {
            return Err(bad());
        }
        return Ok(BigRational::new(numer, denom));
    }
    if let Some((whole, frac)) = text.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        if !whole_digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits: BigInt = format!("{whole_digits}{frac}").parse().map_err(|_| bad())?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let magnitude = BigRational::new(digits, scale);
        return Ok(if negative { -magnitude } else { magnitude });
    }
    let numer: BigInt = text.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(numer))
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "-" {
            return Ok(Scalar::zero());
        }
        match text.strip_suffix('v') {
            Some(body) => Ok(Scalar::ghost(parse_rational(body)?)),
            None => Ok(Scalar::tangible(parse_rational(text)?)),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    num: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    den: Option<String>,
    layer: Layer,
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = match self.layer {
            Layer::Zero => ScalarRepr {
                num: None,
                den: None,
                layer: Layer::Zero,
            },
            layer => ScalarRepr {
                num: Some(self.value.numer().to_string()),
                den: Some(self.value.denom().to_string()),
                layer,
            },
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = ScalarRepr::deserialize(deserializer)?;
        if repr.layer == Layer::Zero {
            return Ok(Scalar::zero());
        }
        let numer: BigInt = repr
            .num
            .as_deref()
            .ok_or_else(|| D::Error::missing_field("num"))?
            .parse()
            .map_err(D::Error::custom)?;
        let denom: BigInt = match repr.den.as_deref() {
            Some(d) => d.parse().map_err(D::Error::custom)?,
            None => BigInt::one(),
        };
        if denom.is_zero() {
            return Err(D::Error::custom("zero denominator"));
        }
        Ok(Scalar {
            value: BigRational::new(numer, denom),
            layer: repr.layer,
        })
    }
}

/// Component-wise `⊕` of two equal-length vectors.
pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `c ⊙ v`.
pub fn vec_scale(c: &Scalar, v: &[Scalar]) -> Vec<Scalar> {
    v.iter().map(|x| c * x).collect()
}

/// Every entry ghost or `0_R`.
pub fn vec_is_ghost(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_ghost_or_zero)
}

/// Component-wise `⊨gs`.
pub fn vec_ghost_surpasses(a: &[Scalar], b: &[Scalar]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.ghost_surpasses(y))
}

pub fn format_vector(v: &[Scalar]) -> String {
    let items: Vec<String> = v.iter().map(Scalar::to_string).collect();
    format!("({})", items.join(", "))
}
