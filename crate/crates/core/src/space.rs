//! Sparse vectors and functionals over an unbounded coordinate set, with the
//! ℓᵖ family of norms and their duals.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A finitely supported point of the model sequence space.
///
/// Entries are kept in canonical form: no stored coordinate is zero, so
/// structural equality is vector equality.
#[derive(Clone, Default, PartialEq)]
pub struct Vector {
    entries: BTreeMap<usize, f64>,
}

/// A finitely supported continuous linear functional, acting by dot product.
#[derive(Clone, Default, PartialEq)]
pub struct Functional {
    coefficients: Vector,
}

fn canonical<I: IntoIterator<Item = (usize, f64)>>(pairs: I) -> BTreeMap<usize, f64> {
    let mut entries = BTreeMap::new();
    for (i, v) in pairs {
        *entries.entry(i).or_insert(0.0) += v;
    }
    entries.retain(|_, v| *v != 0.0);
    entries
}

impl Vector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Builds a vector from `(index, value)` pairs; repeated indices are summed.
    pub fn from_pairs<I: IntoIterator<Item = (usize, f64)>>(pairs: I) -> Self {
        Self {
            entries: canonical(pairs),
        }
    }

    /// Dense constructor: coordinate `i` takes `values[i]`.
    pub fn from_dense(values: &[f64]) -> Self {
        Self::from_pairs(values.iter().copied().enumerate())
    }

    /// The unit vector at `index`.
    pub fn basis(index: usize) -> Self {
        Self::from_pairs([(index, 1.0)])
    }

    pub fn get(&self, index: usize) -> f64 {
        self.entries.get(&index).copied().unwrap_or(0.0)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, f64)> + Clone + '_ {
        self.entries.iter().map(|(&i, &v)| (i, v))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self::from_pairs(self.iter().map(|(i, v)| (i, v * factor)))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_pairs(self.iter().chain(other.iter()))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::from_pairs(self.iter().chain(other.iter().map(|(i, v)| (i, -v))))
    }

    /// `a·self + b·other`.
    pub fn combine(&self, a: f64, other: &Self, b: f64) -> Self {
        Self::from_pairs(
            self.iter()
                .map(|(i, v)| (i, a * v))
                .chain(other.iter().map(|(i, v)| (i, b * v))),
        )
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.entries.iter()).finish()
    }
}

impl Serialize for Vector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.entries.iter().map(|(&i, &v)| (i, v)))
    }
}

impl<'de> Deserialize<'de> for Vector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let pairs: Vec<(usize, f64)> = Vec::deserialize(deserializer)?;
        if pairs.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(D::Error::custom("vector indices must be strictly increasing"));
        }
        if pairs.iter().any(|&(_, v)| !v.is_finite()) {
            return Err(D::Error::custom("vector entries must be finite"));
        }
        Ok(Vector::from_pairs(pairs))
    }
}

impl Functional {
    pub fn from_pairs<I: IntoIterator<Item = (usize, f64)>>(pairs: I) -> Self {
        Self {
            coefficients: Vector::from_pairs(pairs),
        }
    }

    pub fn from_dense(values: &[f64]) -> Self {
        Self {
            coefficients: Vector::from_dense(values),
        }
    }

    /// The coordinate functional `e_index*`.
    pub fn coordinate(index: usize) -> Self {
        Self::from_pairs([(index, 1.0)])
    }

    pub fn coefficients(&self) -> &Vector {
        &self.coefficients
    }

    pub fn get(&self, index: usize) -> f64 {
        self.coefficients.get(index)
    }

    pub fn negate(&self) -> Self {
        Self {
            coefficients: self.coefficients.scale(-1.0),
        }
    }

    /// Σ fᵢ·vᵢ over the common support.
    pub fn evaluate(&self, v: &Vector) -> f64 {
        let (small, large) = if self.coefficients.nnz() <= v.nnz() {
            (&self.coefficients, v)
        } else {
            (v, &self.coefficients)
        };
        small
            .iter()
            .filter_map(|(i, a)| large.entries.get(&i).map(|b| a * b))
            .sum()
    }
}

impl fmt::Debug for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Functional")?;
        self.coefficients.fmt(f)
    }
}

impl Serialize for Functional {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coefficients.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Functional {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Ok(Self {
            coefficients: Vector::deserialize(deserializer)?,
        })
    }
}

/// Coordinate differences `x - y` over the union of supports, in index order.
#[derive(Clone)]
struct MergeDiff<'a> {
    left: std::iter::Peekable<std::collections::btree_map::Iter<'a, usize, f64>>,
    right: std::iter::Peekable<std::collections::btree_map::Iter<'a, usize, f64>>,
}

impl Iterator for MergeDiff<'_> {
    type Item = f64;

    fn next(&mut self) -> Option<f64> {
        match (self.left.peek(), self.right.peek()) {
            (None, None) => None,
            (Some(_), None) => self.left.next().map(|(_, &a)| a),
            (None, Some(_)) => self.right.next().map(|(_, &b)| -b),
            (Some((&i, &a)), Some((&j, &b))) => {
                if i < j {
                    self.left.next();
                    Some(a)
                } else if j < i {
                    self.right.next();
                    Some(-b)
                } else {
                    self.left.next();
                    self.right.next();
                    Some(a - b)
                }
            }
        }
    }
}

/// Evaluates `f` at `v`.
pub fn evaluate(f: &Functional, v: &Vector) -> f64 {
    f.evaluate(v)
}

/// Exponent of an ℓᵖ norm, `1 ≤ p ≤ ∞`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NormSpec {
    p: f64,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("invalid norm exponent {0}: expected a real in [1, inf]")]
pub struct InvalidExponent(pub String);

impl NormSpec {
    pub fn new(p: f64) -> Result<Self, InvalidExponent> {
        if p.is_nan() || p < 1.0 {
            return Err(InvalidExponent(p.to_string()));
        }
        Ok(Self { p })
    }

    pub fn euclidean() -> Self {
        Self { p: 2.0 }
    }

    pub fn l1() -> Self {
        Self { p: 1.0 }
    }

    pub fn sup() -> Self {
        Self { p: f64::INFINITY }
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    /// Conjugate exponent q with 1/p + 1/q = 1.
    pub fn dual_exponent(&self) -> f64 {
        if self.p == 1.0 {
            f64::INFINITY
        } else if self.p.is_infinite() {
            1.0
        } else {
            self.p / (self.p - 1.0)
        }
    }

    pub fn dual(&self) -> Self {
        Self {
            p: self.dual_exponent(),
        }
    }

    /// The unit sphere contains no nontrivial segment.
    pub fn is_rotund(&self) -> bool {
        self.p > 1.0 && self.p.is_finite()
    }

    pub fn is_smooth(&self) -> bool {
        self.is_rotund()
    }

    /// Norm of a coefficient sequence.
    fn of<I: Iterator<Item = f64> + Clone>(&self, values: I) -> f64 {
        let p = self.p;
        if p.is_infinite() {
            return values.fold(0.0, |m, v| m.max(v.abs()));
        }
        if p == 1.0 {
            return values.map(f64::abs).sum();
        }
        let direct = if p == 2.0 {
            values.clone().map(|v| v * v).sum::<f64>()
        } else {
            values.clone().map(|v| v.abs().powf(p)).sum::<f64>()
        };
        if direct.is_normal() && direct.is_finite() {
            return if p == 2.0 { direct.sqrt() } else { direct.powf(1.0 / p) };
        }
        // underflow or overflow of the powers: rescale by the largest entry
        let scale = values.clone().fold(0.0f64, |m, v| m.max(v.abs()));
        if scale == 0.0 {
            return 0.0;
        }
        scale * values.map(|v| (v.abs() / scale).powf(p)).sum::<f64>().powf(1.0 / p)
    }

    pub fn norm(&self, v: &Vector) -> f64 {
        self.of(v.iter().map(|(_, x)| x))
    }

    pub fn distance(&self, x: &Vector, y: &Vector) -> f64 {
        self.of(MergeDiff {
            left: x.entries.iter().peekable(),
            right: y.entries.iter().peekable(),
        })
    }

    /// Operator norm of `f`: the ℓ^q norm of its coefficients.
    pub fn dual_norm(&self, f: &Functional) -> f64 {
        self.dual().of(f.coefficients.iter().map(|(_, a)| a))
    }

    /// A norming functional μ at `x`: ‖μ‖ = 1 and μ(x) = ‖x‖.
    ///
    /// For p = ∞ the subdifferential is a face; the lowest index attaining
    /// the max is used. At x = 0 the coordinate functional e₀* is returned.
    pub fn support_functional(&self, x: &Vector) -> Functional {
        if x.is_zero() {
            return Functional::coordinate(0);
        }
        let p = self.p;
        if p.is_infinite() {
            let mut best: Option<(usize, f64)> = None;
            for (i, v) in x.iter() {
                match best {
                    Some((_, b)) if v.abs() <= b.abs() => {}
                    _ => best = Some((i, v)),
                }
            }
            let (j, v) = best.expect("nonzero vector has an entry");
            Functional::from_pairs([(j, v.signum())])
        } else if p == 1.0 {
            Functional::from_pairs(x.iter().map(|(i, v)| (i, v.signum())))
        } else {
            let norm = self.norm(x);
            Functional::from_pairs(
                x.iter()
                    .map(|(i, v)| (i, v.signum() * (v.abs() / norm).powf(p - 1.0))),
            )
        }
    }
}

impl fmt::Display for NormSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_infinite() {
            write!(f, "inf")
        } else {
            write!(f, "{}", self.p)
        }
    }
}

impl std::str::FromStr for NormSpec {
    type Err = InvalidExponent;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t.eq_ignore_ascii_case("infinity") {
            return Ok(Self::sup());
        }
        let p: f64 = t.parse().map_err(|_| InvalidExponent(t.to_string()))?;
        Self::new(p)
    }
}

pub fn norm(v: &Vector, spec: NormSpec) -> f64 {
    spec.norm(v)
}

pub fn dual_norm(f: &Functional, spec: NormSpec) -> f64 {
    spec.dual_norm(f)
}

pub fn support_functional(x: &Vector, spec: NormSpec) -> Functional {
    spec.support_functional(x)
}
