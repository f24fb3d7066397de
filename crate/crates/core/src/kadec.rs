//! Kadec witnesses: for a point x and a radius ε, a number α > 0 and a weakly
//! open set W ∋ x such that every y ∈ W with |‖y‖ − ‖x‖| ≤ α lies within ε of
//! x. Also the countable cover indexed by (k, n) built from those witnesses.
//!
//! The neighborhood G of x is always a supporting-halfspace slice
//! `{y : μ(y) > ‖x‖ − δ}`, so that `W = (x + G)/2` is again a halfspace,
//! `{y : μ(y) > ‖x‖ − δ/2}`. The depth δ is certified by sampling the slice
//! of the sphere of radius ‖x‖.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::region::WeakOpenSet;
use crate::space::{Functional, NormSpec, Vector};

/// Fraction of ε/2 the sampled slice diameter must stay under.
pub const SAFETY_MARGIN: f64 = 0.1;
/// Shrink factor applied to α so every witness inequality is strict.
pub const ALPHA_SHRINK: f64 = 0.9;
pub const DEFAULT_SLICE_SAMPLES: usize = 512;
pub const DEFAULT_K_MAX: u64 = 1_000_000;
/// Rejection budget for [`verify_witness`] before giving up as vacuous.
pub const VERIFY_ATTEMPTS: usize = 1_000_000;
const MIN_DELTA: f64 = 1e-12;
/// Unused coordinates added to every sampling frame, standing in for the
/// rest of the sequence space.
const FRESH_COORDINATES: usize = 2;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KadecWitness {
    pub x: Vector,
    pub epsilon: f64,
    pub alpha: f64,
    pub delta: f64,
    pub mu: Functional,
    pub w: WeakOpenSet,
}

impl KadecWitness {
    /// α < ε/2, α < ‖x‖ (x ≠ 0), α < δ/2 and x ∈ W.
    pub fn bounds_hold(&self, spec: NormSpec) -> bool {
        let r = spec.norm(&self.x);
        self.alpha > 0.0
            && self.alpha < self.epsilon / 2.0
            && (self.x.is_zero() || self.alpha < r)
            && self.alpha < self.delta / 2.0
            && self.w.contains(&self.x, spec)
    }
}

/// Dense coordinates for sampling around a point.
struct Frame {
    coords: Vec<usize>,
    spec: NormSpec,
}

impl Frame {
    fn around(x: &Vector, spec: NormSpec) -> Self {
        let mut coords: Vec<usize> = x.support().collect();
        let next = coords.last().map_or(0, |&i| i + 1);
        coords.extend(next..next + FRESH_COORDINATES);
        if x.is_zero() {
            coords.push(next + FRESH_COORDINATES);
        }
        Self { coords, spec }
    }

    fn dim(&self) -> usize {
        self.coords.len()
    }

    fn dense(&self, v: &Vector) -> Vec<f64> {
        self.coords.iter().map(|&i| v.get(i)).collect()
    }

    fn vector(&self, z: &[f64]) -> Vector {
        Vector::from_pairs(self.coords.iter().copied().zip(z.iter().copied()))
    }

    fn norm(&self, z: &[f64]) -> f64 {
        let p = self.spec.p();
        if p.is_infinite() {
            z.iter().fold(0.0, |m, v| m.max(v.abs()))
        } else if p == 1.0 {
            z.iter().map(|v| v.abs()).sum()
        } else if p == 2.0 {
            z.iter().map(|v| v * v).sum::<f64>().sqrt()
        } else {
            z.iter().map(|v| v.abs().powf(p)).sum::<f64>().powf(1.0 / p)
        }
    }

    fn distance(&self, a: &[f64], b: &[f64]) -> f64 {
        let p = self.spec.p();
        let diffs = a.iter().zip(b).map(|(u, v)| u - v);
        if p.is_infinite() {
            diffs.fold(0.0, |m, v| m.max(v.abs()))
        } else if p == 1.0 {
            diffs.map(f64::abs).sum()
        } else if p == 2.0 {
            diffs.map(|v| v * v).sum::<f64>().sqrt()
        } else {
            diffs.map(|v| v.abs().powf(p)).sum::<f64>().powf(1.0 / p)
        }
    }

    fn dot(a: &[f64], b: &[f64]) -> f64 {
        a.iter().zip(b).map(|(u, v)| u * v).sum()
    }

    /// Uniform point of the Euclidean ball of radius `scale` within a random
    /// coordinate subspace, so lower-dimensional faces of the sphere get hit
    /// as often as its smooth parts.
    fn ball_perturbation<R: Rng>(&self, rng: &mut R, scale: f64) -> Vec<f64> {
        let dim = self.dim();
        let mut active: Vec<bool> = (0..dim).map(|_| rng.gen_bool(0.5)).collect();
        if !active.iter().any(|&a| a) {
            active[rng.gen_range(0..dim)] = true;
        }
        let k = active.iter().filter(|&&a| a).count();
        let mut g: Vec<f64> = active
            .iter()
            .map(|&a| if a { rng.sample(StandardNormal) } else { 0.0 })
            .collect();
        let len = g.iter().map(|v| v * v).sum::<f64>().sqrt();
        let radius = scale * rng.gen::<f64>().powf(1.0 / k as f64);
        if len > 0.0 {
            g.iter_mut().for_each(|v| *v *= radius / len);
        }
        g
    }

    fn box_perturbation<R: Rng>(&self, rng: &mut R, half_width: f64) -> Vec<f64> {
        (0..self.dim())
            .map(|_| rng.gen_range(-half_width..=half_width))
            .collect()
    }
}

fn diameter_of(frame: &Frame, pts: &[Vec<f64>]) -> f64 {
    let mut d = 0.0f64;
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            d = d.max(frame.distance(&pts[i], &pts[j]));
        }
    }
    d
}

/// Sampled points of `{z : ‖z‖ = ‖x‖, μ(z) > ‖x‖ − δ}`, always including x.
///
/// Perturbations of x are drawn from a ball whose radius doubles while a
/// noticeable share of the outermost draws still lands in the slice, so the
/// sampled cloud reaches the rim of the slice.
fn sample_slice<R: Rng>(
    frame: &Frame,
    x: &[f64],
    mu: &[f64],
    delta: f64,
    n_samples: usize,
    rng: &mut R,
) -> Vec<Vec<f64>> {
    let r = frame.norm(x);
    let threshold = r - delta;
    let mut scale = 3.0 * (delta * r).sqrt() + delta;
    loop {
        let mut inside = vec![x.to_vec()];
        let mut outer = 0usize;
        let mut outer_inside = 0usize;
        for _ in 0..n_samples {
            let pert = frame.ball_perturbation(rng, scale);
            let mut z: Vec<f64> = x.iter().zip(&pert).map(|(a, b)| a + b).collect();
            let len = frame.norm(&z);
            if len == 0.0 {
                continue;
            }
            z.iter_mut().for_each(|v| *v *= r / len);
            let is_outer = frame.norm(&pert) >= 0.75 * scale;
            let hit = Frame::dot(mu, &z) > threshold;
            if is_outer {
                outer += 1;
                outer_inside += hit as usize;
            }
            if hit {
                inside.push(z);
            }
        }
        let spilling = outer > 0 && outer_inside * 20 > outer;
        if !spilling || scale >= 4.0 * r {
            return inside;
        }
        scale = (scale * 2.0).min(4.0 * r);
    }
}

/// Largest δ on the halving ladder ‖x‖/2, ‖x‖/4, … whose sampled slice of
/// the sphere of radius ‖x‖ has diameter below (1 − margin)·ε/2.
pub fn slice_delta(
    x: &Vector,
    epsilon: f64,
    spec: NormSpec,
    n_samples: usize,
    rng_seed: u64,
) -> Result<f64> {
    if x.is_zero() {
        return Err(Error::InvalidParameter("slice_delta needs x != 0".into()));
    }
    if !(epsilon > 0.0) {
        return Err(Error::InvalidParameter(format!("epsilon must be positive, got {epsilon}")));
    }
    let frame = Frame::around(x, spec);
    let xd = frame.dense(x);
    let mu = frame.dense(spec.support_functional(x).coefficients());
    let target = (1.0 - SAFETY_MARGIN) * epsilon / 2.0;
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut delta = spec.norm(x) / 2.0;
    while delta >= MIN_DELTA {
        let pts = sample_slice(&frame, &xd, &mu, delta, n_samples, &mut rng);
        if diameter_of(&frame, &pts) < target {
            return Ok(delta);
        }
        delta /= 2.0;
    }
    Err(Error::NoShrinkingSlice)
}

pub fn kadec_witness(x: &Vector, epsilon: f64, spec: NormSpec, rng_seed: u64) -> Result<KadecWitness> {
    kadec_witness_with(x, epsilon, spec, DEFAULT_SLICE_SAMPLES, rng_seed)
}

pub fn kadec_witness_with(
    x: &Vector,
    epsilon: f64,
    spec: NormSpec,
    n_samples: usize,
    rng_seed: u64,
) -> Result<KadecWitness> {
    if !(epsilon > 0.0) || !epsilon.is_finite() {
        return Err(Error::InvalidParameter(format!("epsilon must be positive, got {epsilon}")));
    }
    if x.is_zero() {
        // W is the whole space; any α < ε/2 works since ‖y‖ ≤ α < ε.
        return Ok(KadecWitness {
            x: x.clone(),
            epsilon,
            alpha: epsilon / 4.0,
            delta: epsilon,
            mu: Functional::coordinate(0),
            w: WeakOpenSet::everything(),
        });
    }
    let r = spec.norm(x);
    let mu = spec.support_functional(x);
    let delta = slice_delta(x, epsilon, spec, n_samples, rng_seed)?;
    let alpha = ALPHA_SHRINK * (epsilon / 2.0).min(r).min(delta / 2.0);
    Ok(KadecWitness {
        x: x.clone(),
        epsilon,
        alpha,
        delta,
        w: WeakOpenSet::halfspace(mu.clone(), r - delta / 2.0),
        mu,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verification {
    pub samples: usize,
    pub attempts: usize,
    pub violations: usize,
    /// No admissible point was found within the attempt budget.
    pub vacuous: bool,
    pub max_distance: f64,
}

/// Samples y ∈ W with |‖y‖ − ‖x‖| ≤ α and counts those with ‖y − x‖ ≥ ε.
///
/// Candidates are perturbations of x, pushed radially to a norm drawn
/// uniformly from the admissible band before the W test. The wide box of
/// half-width 2‖x‖ + 1 covers the whole admissible set. Boxes sized by ε and
/// by the slice depth, and a ball of the cap's tangential radius, concentrate
/// draws near x.
pub fn verify_witness(wit: &KadecWitness, spec: NormSpec, n_samples: usize, rng_seed: u64) -> Verification {
    let frame = Frame::around(&wit.x, spec);
    let x = frame.dense(&wit.x);
    let r = frame.norm(&x);
    let lo = (r - wit.alpha).max(0.0);
    let hi = r + wit.alpha;
    let widths = [
        2.0 * r + 1.0,
        wit.epsilon,
        (2.0 * wit.delta * r.max(wit.delta)).sqrt() + wit.alpha,
    ];
    let budget = VERIFY_ATTEMPTS.max(100 * n_samples);
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut out = Verification {
        samples: 0,
        attempts: 0,
        violations: 0,
        vacuous: false,
        max_distance: 0.0,
    };
    let cap = (wit.delta * r.max(wit.delta)).sqrt() + wit.alpha;
    while out.samples < n_samples && out.attempts < budget {
        let slot = out.attempts % (widths.len() + 1);
        out.attempts += 1;
        let pert = match widths.get(slot) {
            Some(&width) => frame.box_perturbation(&mut rng, width),
            None => frame.ball_perturbation(&mut rng, cap),
        };
        let z: Vec<f64> = x.iter().zip(&pert).map(|(a, b)| a + b).collect();
        let len = frame.norm(&z);
        if len == 0.0 {
            continue;
        }
        let target = rng.gen_range(lo..=hi);
        let y: Vec<f64> = z.iter().map(|v| v * target / len).collect();
        let yv = frame.vector(&y);
        if (spec.norm(&yv) - r).abs() > wit.alpha || !wit.w.contains(&yv, spec) {
            continue;
        }
        out.samples += 1;
        let d = frame.distance(&y, &x);
        out.max_distance = out.max_distance.max(d);
        if !(d < wit.epsilon) {
            out.violations += 1;
        }
    }
    out.vacuous = out.samples == 0;
    out
}

/// The cover cell `X_kn = {x : α_{ε,x} > 2/k, n/k ≤ ‖x‖ ≤ (n+1)/k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CoverIndex {
    pub k: u64,
    pub n: u64,
}

/// Smallest k ≤ `k_max` with `alpha > 2/k`, and the shell n containing `norm`.
pub fn cover_index_for(alpha: f64, norm: f64, k_max: u64) -> Result<CoverIndex> {
    let too_small = Error::AlphaTooSmall { k_max, alpha };
    if !(alpha > 0.0) {
        return Err(too_small);
    }
    let guess = 2.0 / alpha;
    if guess >= k_max as f64 + 1.0 {
        return Err(too_small);
    }
    let mut k = (guess.floor() as u64).max(1);
    while k > 1 && alpha > 2.0 / (k - 1) as f64 {
        k -= 1;
    }
    while !(alpha > 2.0 / k as f64) {
        k += 1;
    }
    if k > k_max {
        return Err(too_small);
    }
    let kf = k as f64;
    let mut n = (kf * norm).floor().max(0.0) as u64;
    while n > 0 && n as f64 / kf > norm {
        n -= 1;
    }
    while ((n + 1) as f64 / kf) < norm {
        n += 1;
    }
    Ok(CoverIndex { k, n })
}

/// Every witness has α < ε/2, so `ε/2 ≤ 2/k_max` rules out all k ≤ k_max
/// before any sampling.
fn epsilon_exhausts(epsilon: f64, k_max: u64) -> Option<Error> {
    (epsilon / 2.0 <= 2.0 / k_max as f64).then(|| Error::AlphaTooSmall {
        k_max,
        alpha: epsilon / 2.0,
    })
}

pub fn cover_index(x: &Vector, epsilon: f64, spec: NormSpec, k_max: u64, rng_seed: u64) -> Result<CoverIndex> {
    if let Some(e) = epsilon_exhausts(epsilon, k_max) {
        return Err(e);
    }
    let wit = kadec_witness(x, epsilon, spec, rng_seed)?;
    cover_index_for(wit.alpha, spec.norm(x), k_max)
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct CoverReport {
    /// Group sizes keyed by cover cell.
    pub groups: BTreeMap<CoverIndex, usize>,
    /// Ordered same-group pairs (x, y) with y ∈ W_{ε,x}.
    pub pairs_checked: usize,
    /// Pairs above with ‖y − x‖ > ε.
    pub violations: usize,
    /// Same-group pairs where |‖y‖ − ‖x‖| ≤ 1/k < α_{ε,x} failed.
    pub implication_failures: usize,
    /// Points that could not be indexed, with the reason.
    pub unindexed: Vec<(usize, String)>,
}

impl CoverReport {
    pub fn group_count(&self) -> usize {
        self.groups.len()
    }
}

/// Seed for the witness of the `i`-th point of a batch.
pub fn point_seed(rng_seed: u64, i: usize) -> u64 {
    rng_seed ^ (i as u64).wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

pub fn cover_check(points: &[Vector], epsilon: f64, spec: NormSpec, rng_seed: u64) -> CoverReport {
    cover_check_with(points, epsilon, spec, DEFAULT_K_MAX, rng_seed)
}

pub fn cover_check_with(points: &[Vector], epsilon: f64, spec: NormSpec, k_max: u64, rng_seed: u64) -> CoverReport {
    let mut report = CoverReport::default();
    let mut members: BTreeMap<CoverIndex, Vec<(usize, KadecWitness)>> = BTreeMap::new();
    for (i, x) in points.iter().enumerate() {
        if let Some(e) = epsilon_exhausts(epsilon, k_max) {
            report.unindexed.push((i, e.to_string()));
            continue;
        }
        let indexed = kadec_witness(x, epsilon, spec, point_seed(rng_seed, i))
            .and_then(|wit| cover_index_for(wit.alpha, spec.norm(x), k_max).map(|c| (c, wit)));
        match indexed {
            Ok((cell, wit)) => members.entry(cell).or_default().push((i, wit)),
            Err(e) => report.unindexed.push((i, e.to_string())),
        }
    }
    for (cell, group) in &members {
        report.groups.insert(*cell, group.len());
        let width = 1.0 / cell.k as f64;
        for (_, wx) in group {
            let nx = spec.norm(&wx.x);
            for (_, wy) in group {
                let ny = spec.norm(&wy.x);
                if !((ny - nx).abs() <= width && width < wx.alpha) {
                    report.implication_failures += 1;
                }
                if wx.w.contains(&wy.x, spec) {
                    report.pairs_checked += 1;
                    if spec.distance(&wy.x, &wx.x) > epsilon {
                        report.violations += 1;
                    }
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[f64]) -> Vector {
        Vector::from_dense(xs)
    }

    /// Diameter of `{z : ‖z‖ = 1, z₀ > 1 − δ}` on the Euclidean unit sphere.
    fn circle_chord(delta: f64) -> f64 {
        2.0 * (2.0 * delta - delta * delta).sqrt()
    }

    #[test]
    fn circle_slice_depth_matches_chord_oracle() {
        let eps = 0.8;
        let delta = slice_delta(&v(&[1.0, 0.0]), eps, NormSpec::euclidean(), 512, 7).unwrap();
        assert!(delta > 0.0 && delta <= 0.02, "delta = {delta}");
        // the true slice is under ε/2 and the next rung up is not under the target
        assert!(circle_chord(delta) < eps / 2.0);
        assert!(circle_chord(2.0 * delta) >= (1.0 - SAFETY_MARGIN) * eps / 2.0);
        assert_eq!(delta, 0.015625);
    }

    #[test]
    fn large_epsilon_accepts_first_rung() {
        let spec = NormSpec::euclidean();
        // whole sphere already under the target: 2‖x‖ < 0.9·ε/2
        for x in [v(&[1.0, 0.0]), v(&[0.3, -0.4, 0.1])] {
            let r = spec.norm(&x);
            let delta = slice_delta(&x, 5.0 * r + 1.0, spec, 256, 1).unwrap();
            assert_eq!(delta, r / 2.0);
        }
        // ε = 2‖x‖ + 1 suffices once the first-rung chord √3·‖x‖ is under 0.9·ε/2
        let x = v(&[0.3, 0.0, -0.1]);
        let r = spec.norm(&x);
        assert!(3f64.sqrt() * r < 0.9 * (2.0 * r + 1.0) / 2.0);
        assert_eq!(slice_delta(&x, 2.0 * r + 1.0, spec, 256, 1).unwrap(), r / 2.0);
    }

    #[test]
    fn sup_norm_face_point_has_no_shrinking_slice() {
        let err = slice_delta(&v(&[1.0, 0.0]), 0.5, NormSpec::sup(), 256, 3).unwrap_err();
        assert_eq!(err, Error::NoShrinkingSlice);
        // face points (1, ±0.3) pass every slice constraint with μ = e₀*
        let mu = NormSpec::sup().support_functional(&v(&[1.0, 0.0]));
        for t in [-0.3, 0.3] {
            assert!(mu.evaluate(&v(&[1.0, t])) > 1.0 - 1e-9);
        }
        assert!(matches!(
            kadec_witness(&v(&[1.0, 0.0]), 0.5, NormSpec::sup(), 3),
            Err(Error::NoShrinkingSlice)
        ));
    }

    #[test]
    fn l1_vertex_slices_do_shrink() {
        assert!(slice_delta(&v(&[1.0, 0.0]), 0.5, NormSpec::l1(), 256, 3).is_ok());
    }

    #[test]
    fn zero_witness() {
        let wit = kadec_witness(&Vector::zero(), 1.0, NormSpec::euclidean(), 0).unwrap();
        assert_eq!(wit.alpha, 0.25);
        assert!(wit.w.is_unconstrained());
        assert!(wit.bounds_hold(NormSpec::euclidean()));
        let check = verify_witness(&wit, NormSpec::euclidean(), 2_000, 5);
        assert_eq!(check.violations, 0);
        assert!(!check.vacuous);
        assert!(check.max_distance <= 0.25);
    }

    #[test]
    fn circle_witness() {
        let spec = NormSpec::euclidean();
        let wit = kadec_witness(&v(&[1.0, 0.0]), 0.8, spec, 11).unwrap();
        assert_eq!(wit.alpha, 0.9 * (0.4f64).min(1.0).min(wit.delta / 2.0));
        assert!(wit.bounds_hold(spec));
        let check = verify_witness(&wit, spec, 10_000, 12);
        assert_eq!(check.samples, 10_000);
        assert_eq!(check.violations, 0);
    }

    #[test]
    fn witness_is_permutation_symmetric() {
        let spec = NormSpec::euclidean();
        let a = kadec_witness(&v(&[1.0, 0.0]), 0.8, spec, 11).unwrap();
        let b = kadec_witness(&Vector::basis(7), 0.8, spec, 11).unwrap();
        assert_eq!(a.alpha, b.alpha);
        assert_eq!(b.mu, Functional::coordinate(7));
    }

    #[test]
    fn corrupted_witness_is_caught() {
        let spec = NormSpec::euclidean();
        let mut wit = kadec_witness(&v(&[1.0, 0.0]), 0.2, spec, 2).unwrap();
        wit.alpha *= 100.0;
        let check = verify_witness(&wit, spec, 10_000, 3);
        assert!(check.violations > 0, "{check:?}");
    }

    #[test]
    fn witness_bounds_across_exponents() {
        for p in [1.5, 2.0, 3.0, 6.0] {
            let spec = NormSpec::new(p).unwrap();
            for (i, x) in [v(&[0.6, 0.2]), v(&[0.1, -0.5, 0.3]), v(&[0.05])].iter().enumerate() {
                let wit = kadec_witness(x, 0.5, spec, i as u64).unwrap();
                assert!(wit.bounds_hold(spec), "p={p} x={x:?} {wit:?}");
                let check = verify_witness(&wit, spec, 2_000, 100 + i as u64);
                assert_eq!(check.violations, 0, "p={p} x={x:?} {check:?}");
            }
        }
    }

    #[test]
    fn cover_index_arithmetic() {
        assert_eq!(cover_index_for(0.25, 0.0, DEFAULT_K_MAX).unwrap(), CoverIndex { k: 9, n: 0 });
        assert_eq!(cover_index_for(0.25, 1.0, DEFAULT_K_MAX).unwrap(), CoverIndex { k: 9, n: 9 });
        assert!(matches!(
            cover_index_for(1e-9, 0.5, 1_000_000),
            Err(Error::AlphaTooSmall { .. })
        ));
        // α exactly 2/k needs k + 1
        assert_eq!(cover_index_for(0.5, 0.3, 100).unwrap().k, 5);
        let c = cover_index_for(0.01, 0.777, 1000).unwrap();
        assert!(0.01 > 2.0 / c.k as f64 && 0.01 <= 2.0 / (c.k - 1) as f64);
        assert!(c.n as f64 / c.k as f64 <= 0.777 && 0.777 <= (c.n + 1) as f64 / c.k as f64);
    }

    #[test]
    fn cover_index_of_zero() {
        let c = cover_index(&Vector::zero(), 1.0, NormSpec::euclidean(), DEFAULT_K_MAX, 0).unwrap();
        assert_eq!(c, CoverIndex { k: 9, n: 0 });
    }

    #[test]
    fn cover_of_repeated_point() {
        let pts = vec![v(&[0.3, 0.4]); 5];
        let report = cover_check(&pts, 0.3, NormSpec::euclidean(), 1);
        assert_eq!(report.group_count(), 1);
        assert_eq!(report.violations, 0);
        assert_eq!(report.pairs_checked, 25);
        assert_eq!(report.implication_failures, 0);
    }

    #[test]
    fn antipodal_points_do_not_see_each_other() {
        let spec = NormSpec::euclidean();
        let x = v(&[0.6, 0.8]);
        let y = x.scale(-1.0);
        let wx = kadec_witness(&x, 0.3, spec, 0).unwrap();
        assert!(!wx.w.contains(&y, spec));
        let report = cover_check(&[x, y], 0.3, spec, 0);
        assert_eq!(report.violations, 0);
        let self_pairs: usize = report.groups.values().sum();
        assert_eq!(report.pairs_checked, self_pairs);
    }

    #[test]
    fn tiny_epsilon_exhausts_k_max() {
        let report = cover_check(&[v(&[0.5, 0.0])], 1e-12, NormSpec::euclidean(), 0);
        assert_eq!(report.unindexed.len(), 1);
        assert!(report.unindexed[0].1.starts_with("alpha too small"));
        assert!(report.groups.is_empty());
    }
}
