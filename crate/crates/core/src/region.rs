//! Point-cloud models of the players' sets and the weakly open sets used to
//! cut them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::space::{Functional, NormSpec, Vector};

/// A finite point cloud, optionally carrying a declared supremum of norms
/// that no point needs to attain.
///
/// Points keep insertion order; every tie-break downstream uses it.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Region {
    points: Vec<Vector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    sup_hint: Option<f64>,
}

impl Region {
    pub fn new(points: Vec<Vector>) -> Self {
        Self {
            points,
            sup_hint: None,
        }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn singleton(point: Vector) -> Self {
        Self::new(vec![point])
    }

    /// Attaches a declared supremum; it must dominate every attained norm.
    pub fn with_hint(points: Vec<Vector>, hint: f64, spec: NormSpec) -> Result<Self> {
        let attained = points.iter().map(|x| spec.norm(x)).fold(0.0, f64::max);
        if !(hint >= attained) || !hint.is_finite() {
            return Err(Error::HintBelowAttained { hint, attained });
        }
        Ok(Self {
            points,
            sup_hint: Some(hint),
        })
    }

    /// Re-attaches `hint` to this region's points.
    pub fn rehinted(&self, hint: f64, spec: NormSpec) -> Result<Self> {
        Self::with_hint(self.points.clone(), hint, spec)
    }

    pub fn without_hint(&self) -> Self {
        Self::new(self.points.clone())
    }

    pub fn points(&self) -> &[Vector] {
        &self.points
    }

    pub fn into_points(self) -> Vec<Vector> {
        self.points
    }

    pub fn sup_hint(&self) -> Option<f64> {
        self.sup_hint
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, x: &Vector) -> bool {
        self.points.iter().any(|p| p == x)
    }

    /// Supremum of norms over the region and the lowest-index point attaining it.
    pub fn sup_norm(&self, spec: NormSpec) -> Result<(f64, Option<Vector>)> {
        let mut best: Option<(f64, usize)> = None;
        for (i, x) in self.points.iter().enumerate() {
            let r = spec.norm(x);
            if best.map_or(true, |(b, _)| r > b) {
                best = Some((r, i));
            }
        }
        match (self.sup_hint, best) {
            (None, None) => Err(Error::SupOfEmpty),
            (None, Some((r, i))) => Ok((r, Some(self.points[i].clone()))),
            (Some(hint), Some((r, i))) if r == hint => Ok((hint, Some(self.points[i].clone()))),
            (Some(hint), _) => Ok((hint, None)),
        }
    }

    fn filtered<F: Fn(&Vector) -> bool>(&self, keep: F) -> Self {
        Self::new(self.points.iter().filter(|x| keep(x)).cloned().collect())
    }

    /// `{x ∈ A : f(x) > t}`. The hint is dropped.
    pub fn slice(&self, f: &Functional, t: f64) -> Self {
        self.filtered(|x| f.evaluate(x) > t)
    }

    /// `{x ∈ A : ‖x‖ > r}`, i.e. A minus the closed ball of radius r.
    pub fn shell(&self, spec: NormSpec, r: f64) -> Self {
        self.filtered(|x| spec.norm(x) > r)
    }

    pub fn restrict(&self, w: &WeakOpenSet, spec: NormSpec) -> Self {
        self.filtered(|x| w.contains(x, spec))
    }

    /// Indices of the lowest-index pair realizing the diameter, with the
    /// diameter itself. `None` for an empty region; `(0, 0, 0.0)` for a
    /// singleton.
    pub fn farthest_pair(&self, spec: NormSpec) -> Option<(usize, usize, f64)> {
        if self.points.is_empty() {
            return None;
        }
        let mut best = (0, 0, 0.0);
        for i in 0..self.points.len() {
            for j in i + 1..self.points.len() {
                let d = spec.distance(&self.points[i], &self.points[j]);
                if d > best.2 {
                    best = (i, j, d);
                }
            }
        }
        Some(best)
    }

    pub fn diameter(&self, spec: NormSpec) -> Result<f64> {
        self.farthest_pair(spec)
            .map(|(_, _, d)| d)
            .ok_or(Error::DiameterOfEmpty)
    }

    /// Every point of `self` is a point of `other` (exact equality).
    pub fn subset_of(&self, other: &Region) -> bool {
        self.points.iter().all(|x| other.contains(x))
    }

    /// Same points in the same order.
    pub fn same_points(&self, other: &Region) -> bool {
        self.points == other.points
    }
}

/// A strict halfspace constraint `f(x) > threshold`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Halfspace {
    pub f: Functional,
    pub t: f64,
}

/// Finite intersection of open halfspaces and complements of closed balls,
/// all of which are weakly open.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct WeakOpenSet {
    pub halfspaces: Vec<Halfspace>,
    pub shells: Vec<f64>,
}

impl WeakOpenSet {
    /// The whole space.
    pub fn everything() -> Self {
        Self::default()
    }

    pub fn halfspace(f: Functional, t: f64) -> Self {
        Self {
            halfspaces: vec![Halfspace { f, t }],
            shells: Vec::new(),
        }
    }

    pub fn shell(r: f64) -> Self {
        Self {
            halfspaces: Vec::new(),
            shells: vec![r],
        }
    }

    pub fn with_halfspace(mut self, f: Functional, t: f64) -> Self {
        self.halfspaces.push(Halfspace { f, t });
        self
    }

    pub fn with_shell(mut self, r: f64) -> Self {
        self.shells.push(r);
        self
    }

    pub fn intersect(mut self, other: &WeakOpenSet) -> Self {
        self.halfspaces.extend(other.halfspaces.iter().cloned());
        self.shells.extend(other.shells.iter().copied());
        self
    }

    pub fn is_unconstrained(&self) -> bool {
        self.halfspaces.is_empty() && self.shells.is_empty()
    }

    pub fn contains(&self, x: &Vector, spec: NormSpec) -> bool {
        self.halfspaces.iter().all(|h| h.f.evaluate(x) > h.t)
            && (self.shells.is_empty() || {
                let r = spec.norm(x);
                self.shells.iter().all(|&s| r > s)
            })
    }
}
