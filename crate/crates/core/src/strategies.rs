//! Ω strategies (naive box, rotund slicing, Kadec shells) and Σ adversaries.
//!
//! Every Ω move returns the chosen region together with the weakly open set
//! that cuts it out of the input, so relative openness can be re-checked
//! from the trace alone.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kadec::{kadec_witness, point_seed, KadecWitness};
use crate::region::{Region, WeakOpenSet};
use crate::space::{Functional, NormSpec, Vector};

/// Starting ε budget of the Kadec strategy.
pub const KADEC_INITIAL_EPSILON: f64 = 1.0;
/// Tolerance for the face adversary's equality test.
pub const FACE_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KadecCase {
    /// Some point comes within its own α of the supremum.
    Case1,
    /// No point does; only the outer shell is kept.
    Case2,
}

impl fmt::Display for KadecCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KadecCase::Case1 => "case1",
            KadecCase::Case2 => "case2",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RotundRound {
    pub rho: f64,
    pub x: Vector,
    pub mu: Functional,
}

/// Bookkeeping carried by Ω between rounds.
#[derive(Clone, Debug, PartialEq)]
pub enum OmegaState {
    Rotund { rounds: Vec<RotundRound> },
    Kadec {
        epsilon: f64,
        cases: Vec<KadecCase>,
        witnesses: Vec<KadecWitness>,
    },
    Naive { rounds: usize },
}

impl OmegaState {
    pub fn initial(kind: OmegaKind) -> Self {
        match kind {
            OmegaKind::Rotund => OmegaState::Rotund { rounds: Vec::new() },
            OmegaKind::Kadec => OmegaState::Kadec {
                epsilon: KADEC_INITIAL_EPSILON,
                cases: Vec::new(),
                witnesses: Vec::new(),
            },
            OmegaKind::Naive => OmegaState::Naive { rounds: 0 },
        }
    }

    /// Current ε budget of the Kadec strategy.
    pub fn epsilon(&self) -> Option<f64> {
        match self {
            OmegaState::Kadec { epsilon, .. } => Some(*epsilon),
            _ => None,
        }
    }
}

/// What Ω records about a move, echoed into the trace.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct MoveNotes {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<KadecCase>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<Vector>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<Functional>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threshold: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shell_radius: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OmegaMove {
    pub b: Region,
    pub open_set: WeakOpenSet,
    pub notes: MoveNotes,
}

fn cut(a: &Region, open_set: WeakOpenSet, spec: NormSpec, notes: MoveNotes) -> Result<OmegaMove> {
    let b = a.restrict(&open_set, spec);
    if b.is_empty() && a.sup_hint().is_some() {
        return Err(Error::HintStarves);
    }
    Ok(OmegaMove { b, open_set, notes })
}

/// Slice by the norming functional of a near-maximal point.
///
/// Round n keeps `{x ∈ A : μₙ(x) > ρₙ − 1/(n+1)}` where ρₙ is the supremum
/// of norms over A and μₙ norms xₙ. The argmax is used as xₙ when attained.
pub fn rotund_move(state: &OmegaState, a: &Region, round: usize, spec: NormSpec) -> Result<(OmegaState, OmegaMove)> {
    let OmegaState::Rotund { rounds } = state else {
        return Err(Error::InvalidParameter("rotund move on a non-rotund state".into()));
    };
    let (rho, argmax) = a.sup_norm(spec)?;
    let margin = 1.0 / (round as f64 + 1.0);
    let threshold = rho - margin;
    let x = match argmax {
        Some(x) => x,
        None => a
            .points()
            .iter()
            .find(|x| spec.norm(x) > threshold)
            .cloned()
            .ok_or(Error::HintStarves)?,
    };
    let mu = spec.support_functional(&x);
    let notes = MoveNotes {
        rho: Some(rho),
        x: Some(x.clone()),
        mu: Some(mu.clone()),
        threshold: Some(threshold),
        ..MoveNotes::default()
    };
    let mv = cut(a, WeakOpenSet::halfspace(mu.clone(), threshold), spec, notes)?;
    let mut rounds = rounds.clone();
    rounds.push(RotundRound { rho, x, mu });
    Ok((OmegaState::Rotund { rounds }, mv))
}

/// Shell radius of a case-2 round: ρ/2 at round 1, (1 − 1/(n+1))·ρ after.
pub fn case2_radius(rho: f64, round: usize) -> f64 {
    if round <= 1 {
        0.5 * rho
    } else {
        (1.0 - 1.0 / (round as f64 + 1.0)) * rho
    }
}

fn witness_seed(rng_seed: u64, round: usize, index: usize) -> u64 {
    point_seed(rng_seed.rotate_left(17) ^ round as u64, index)
}

/// Kadec shell strategy with the current ε budget.
///
/// Case 1: some x ∈ A has α_{ε,x} + ‖x‖ > ρ; keep `W_{ε,x} ∩ {‖y‖ > ‖x‖ − α}`
/// and halve ε. Case 2: keep the outer shell and leave ε unchanged.
pub fn kadec_move(
    state: &OmegaState,
    a: &Region,
    round: usize,
    spec: NormSpec,
    rng_seed: u64,
) -> Result<(OmegaState, OmegaMove)> {
    let OmegaState::Kadec {
        epsilon,
        cases,
        witnesses,
    } = state
    else {
        return Err(Error::InvalidParameter("kadec move on a non-kadec state".into()));
    };
    let epsilon = *epsilon;
    let (rho, argmax) = a.sup_norm(spec)?;
    let argmax_index = argmax
        .as_ref()
        .and_then(|m| a.points().iter().position(|p| p == m));
    let order = argmax_index
        .into_iter()
        .chain((0..a.len()).filter(|&i| Some(i) != argmax_index));

    let mut found = None;
    for i in order {
        let x = &a.points()[i];
        let wit = kadec_witness(x, epsilon, spec, witness_seed(rng_seed, round, i))?;
        if wit.alpha + spec.norm(x) > rho {
            found = Some(wit);
            break;
        }
    }

    let mut cases = cases.clone();
    let mut witnesses = witnesses.clone();
    match found {
        Some(wit) => {
            let radius = spec.norm(&wit.x) - wit.alpha;
            let open_set = wit.w.clone().with_shell(radius);
            let notes = MoveNotes {
                rho: Some(rho),
                epsilon: Some(epsilon),
                case: Some(KadecCase::Case1),
                x: Some(wit.x.clone()),
                mu: Some(wit.mu.clone()),
                alpha: Some(wit.alpha),
                threshold: wit.w.halfspaces.first().map(|h| h.t),
                shell_radius: Some(radius),
            };
            let mv = cut(a, open_set, spec, notes)?;
            cases.push(KadecCase::Case1);
            witnesses.push(wit);
            let next = OmegaState::Kadec {
                epsilon: epsilon / 2.0,
                cases,
                witnesses,
            };
            Ok((next, mv))
        }
        None => {
            let radius = case2_radius(rho, round);
            let notes = MoveNotes {
                rho: Some(rho),
                epsilon: Some(epsilon),
                case: Some(KadecCase::Case2),
                shell_radius: Some(radius),
                ..MoveNotes::default()
            };
            let mv = cut(a, WeakOpenSet::shell(radius), spec, notes)?;
            cases.push(KadecCase::Case2);
            let next = OmegaState::Kadec {
                epsilon,
                cases,
                witnesses,
            };
            Ok((next, mv))
        }
    }
}

/// Box of coordinate half-width 1/(4n(1+d)) around the first point, over the
/// d coordinates used by the region. Its ℓᵖ diameter is below 1/n.
pub fn naive_move(state: &OmegaState, a: &Region, round: usize, spec: NormSpec) -> Result<(OmegaState, OmegaMove)> {
    let OmegaState::Naive { rounds } = state else {
        return Err(Error::InvalidParameter("naive move on a non-naive state".into()));
    };
    let x = a.points().first().ok_or(Error::SupOfEmpty)?;
    let coords: BTreeSet<usize> = a.points().iter().flat_map(|p| p.support()).collect();
    let half_width = 1.0 / (4.0 * round as f64 * (1.0 + coords.len() as f64));
    let mut open_set = WeakOpenSet::everything();
    for &c in &coords {
        let e = Functional::coordinate(c);
        open_set = open_set
            .with_halfspace(e.clone(), x.get(c) - half_width)
            .with_halfspace(e.negate(), -x.get(c) - half_width);
    }
    let notes = MoveNotes {
        x: Some(x.clone()),
        ..MoveNotes::default()
    };
    let mv = cut(a, open_set, spec, notes)?;
    Ok((OmegaState::Naive { rounds: rounds + 1 }, mv))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OmegaKind {
    Rotund,
    Kadec,
    Naive,
}

impl OmegaKind {
    pub fn play(
        self,
        state: &OmegaState,
        a: &Region,
        round: usize,
        spec: NormSpec,
        rng_seed: u64,
    ) -> Result<(OmegaState, OmegaMove)> {
        match self {
            OmegaKind::Rotund => rotund_move(state, a, round, spec),
            OmegaKind::Kadec => kadec_move(state, a, round, spec, rng_seed),
            OmegaKind::Naive => naive_move(state, a, round, spec),
        }
    }
}

impl fmt::Display for OmegaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OmegaKind::Rotund => "rotund",
            OmegaKind::Kadec => "kadec",
            OmegaKind::Naive => "naive",
        })
    }
}

impl FromStr for OmegaKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "rotund" => Ok(OmegaKind::Rotund),
            "kadec" => Ok(OmegaKind::Kadec),
            "naive" => Ok(OmegaKind::Naive),
            other => Err(Error::InvalidParameter(format!("unknown omega strategy '{other}'"))),
        }
    }
}

pub fn sigma_identity(b: &Region) -> Region {
    b.clone()
}

/// Uniform subset of ⌈fraction·|b|⌉ points, kept in their original order.
pub fn sigma_random<R: Rng>(b: &Region, fraction: f64, rng: &mut R) -> Region {
    let keep = ((fraction * b.len() as f64).ceil() as usize).clamp(1, b.len().max(1));
    if keep >= b.len() {
        return b.clone();
    }
    let mut picked = rand::seq::index::sample(rng, b.len(), keep).into_vec();
    picked.sort_unstable();
    Region::new(picked.into_iter().map(|i| b.points()[i].clone()).collect())
}

/// Points on the face `{f = value}`; falls back to `b` when none are.
pub fn sigma_face(b: &Region, face_functional: &Functional, face_value: f64) -> Region {
    let on_face: Vec<Vector> = b
        .points()
        .iter()
        .filter(|x| (face_functional.evaluate(x) - face_value).abs() <= FACE_TOLERANCE)
        .cloned()
        .collect();
    if on_face.is_empty() {
        b.clone()
    } else {
        Region::new(on_face)
    }
}

pub fn sigma_farthest_pair(b: &Region, spec: NormSpec) -> Region {
    match b.farthest_pair(spec) {
        Some((i, j, _)) if i != j => Region::new(vec![b.points()[i].clone(), b.points()[j].clone()]),
        _ => b.clone(),
    }
}

/// Re-declares an unattained supremum `hint` on the whole of `b`.
pub fn sigma_asymptote(b: &Region, hint: f64, spec: NormSpec) -> Region {
    b.rehinted(hint, spec).unwrap_or_else(|_| b.clone())
}

#[derive(Clone, Debug, PartialEq)]
pub enum SigmaKind {
    Identity,
    Random(f64),
    Face { index: usize, value: f64 },
    FarthestPair,
    Asymptote(f64),
}

impl SigmaKind {
    pub fn play<R: Rng>(&self, b: &Region, spec: NormSpec, rng: &mut R) -> Region {
        match self {
            SigmaKind::Identity => sigma_identity(b),
            SigmaKind::Random(fraction) => sigma_random(b, *fraction, rng),
            SigmaKind::Face { index, value } => sigma_face(b, &Functional::coordinate(*index), *value),
            SigmaKind::FarthestPair => sigma_farthest_pair(b, spec),
            SigmaKind::Asymptote(hint) => sigma_asymptote(b, *hint, spec),
        }
    }
}

impl fmt::Display for SigmaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SigmaKind::Identity => write!(f, "identity"),
            SigmaKind::Random(fraction) => write!(f, "random:{fraction}"),
            SigmaKind::Face { index, value } => write!(f, "face:{index}:{value}"),
            SigmaKind::FarthestPair => write!(f, "farthest-pair"),
            SigmaKind::Asymptote(hint) => write!(f, "asymptote:{hint}"),
        }
    }
}

impl FromStr for SigmaKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("unknown sigma strategy '{s}'"));
        let parts: Vec<&str> = s.trim().split(':').collect();
        let num = |t: &str| t.parse::<f64>().map_err(|_| bad());
        match parts.as_slice() {
            ["identity"] => Ok(SigmaKind::Identity),
            ["farthest-pair"] => Ok(SigmaKind::FarthestPair),
            ["random", fraction] => {
                let fraction = num(fraction)?;
                if !(fraction > 0.0 && fraction <= 1.0) {
                    return Err(Error::InvalidParameter(format!(
                        "random fraction must lie in (0, 1], got {fraction}"
                    )));
                }
                Ok(SigmaKind::Random(fraction))
            }
            ["face", index, value] => Ok(SigmaKind::Face {
                index: index.parse().map_err(|_| bad())?,
                value: num(value)?,
            }),
            ["asymptote", hint] => Ok(SigmaKind::Asymptote(num(hint)?)),
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn v(xs: &[f64]) -> Vector {
        Vector::from_dense(xs)
    }

    fn face_cloud(n: usize) -> Region {
        Region::new(
            (0..n)
                .map(|i| v(&[1.0, -1.0 + 2.0 * i as f64 / (n - 1) as f64]))
                .collect(),
        )
    }

    fn rotund(a: &Region, round: usize, spec: NormSpec) -> OmegaMove {
        rotund_move(&OmegaState::initial(OmegaKind::Rotund), a, round, spec)
            .unwrap()
            .1
    }

    #[test]
    fn rotund_first_round() {
        let spec = NormSpec::euclidean();
        let a = Region::new(vec![v(&[1.0, 0.0]), v(&[0.0, 1.0]), v(&[0.4, 0.4])]);
        let (state, mv) = rotund_move(&OmegaState::initial(OmegaKind::Rotund), &a, 1, spec).unwrap();
        assert_eq!(mv.notes.rho, Some(1.0));
        assert_eq!(mv.notes.x, Some(v(&[1.0, 0.0])));
        assert_eq!(mv.notes.mu, Some(Functional::from_dense(&[1.0, 0.0])));
        assert_eq!(mv.notes.threshold, Some(0.5));
        assert_eq!(mv.b.points(), &[v(&[1.0, 0.0])]);
        assert_eq!(a.restrict(&mv.open_set, spec), mv.b);
        let OmegaState::Rotund { rounds } = state else { unreachable!() };
        assert_eq!(rounds.len(), 1);
    }

    #[test]
    fn rotund_singleton() {
        for spec in [NormSpec::euclidean(), NormSpec::sup(), NormSpec::l1()] {
            let a = Region::singleton(v(&[0.2, -0.7]));
            assert!(rotund(&a, 1, spec).b.same_points(&a));
        }
    }

    #[test]
    fn rotund_stalls_on_sup_face() {
        let spec = NormSpec::sup();
        let a = face_cloud(41);
        let mv = rotund(&a, 1, spec);
        assert_eq!(mv.notes.rho, Some(1.0));
        assert_eq!(mv.notes.x, Some(v(&[1.0, -1.0])));
        assert_eq!(mv.notes.mu, Some(Functional::from_dense(&[1.0, 0.0])));
        assert_eq!(mv.b.len(), 41);
        assert_eq!(mv.b.diameter(spec).unwrap(), 2.0);
    }

    #[test]
    fn rotund_with_hint_picks_first_qualifier() {
        let spec = NormSpec::euclidean();
        let a = Region::with_hint(vec![v(&[0.2, 0.0]), v(&[0.0, 0.9]), v(&[0.95, 0.0])], 1.0, spec).unwrap();
        let mv = rotund(&a, 1, spec);
        assert_eq!(mv.notes.x, Some(v(&[0.0, 0.9])));
        assert_eq!(mv.notes.rho, Some(1.0));
        // round 20 needs ‖x‖ > 1 − 1/21, nothing qualifies
        let err = rotund_move(&OmegaState::initial(OmegaKind::Rotund), &a, 20, spec).unwrap_err();
        assert_eq!(err, Error::HintStarves);
    }

    #[test]
    fn kadec_first_round_case1() {
        let spec = NormSpec::euclidean();
        let a = Region::new(vec![v(&[1.0, 0.0]), v(&[0.2, 0.0])]);
        let (state, mv) = kadec_move(&OmegaState::initial(OmegaKind::Kadec), &a, 1, spec, 5).unwrap();
        assert_eq!(mv.notes.case, Some(KadecCase::Case1));
        assert_eq!(mv.notes.x, Some(v(&[1.0, 0.0])));
        assert_eq!(mv.b.points(), &[v(&[1.0, 0.0])]);
        assert_eq!(state.epsilon(), Some(0.5));
        let alpha = mv.notes.alpha.unwrap();
        assert!(alpha > 0.0 && alpha < 0.5);
        assert_eq!(mv.notes.shell_radius, Some(1.0 - alpha));
    }

    #[test]
    fn kadec_singleton() {
        let spec = NormSpec::euclidean();
        let a = Region::singleton(v(&[0.3, -0.1, 0.2]));
        let (_, mv) = kadec_move(&OmegaState::initial(OmegaKind::Kadec), &a, 1, spec, 9).unwrap();
        assert_eq!(mv.notes.case, Some(KadecCase::Case1));
        assert!(mv.b.same_points(&a));
    }

    #[test]
    fn kadec_case2_under_hint() {
        let spec = NormSpec::euclidean();
        let a = Region::with_hint(vec![v(&[0.9, 0.0]), v(&[0.0, 0.95])], 1.0, spec).unwrap();
        let (state, mv) = kadec_move(&OmegaState::initial(OmegaKind::Kadec), &a, 1, spec, 1).unwrap();
        assert_eq!(mv.notes.case, Some(KadecCase::Case2));
        assert_eq!(mv.notes.shell_radius, Some(0.5));
        assert_eq!(mv.b.len(), 2);
        assert_eq!(state.epsilon(), Some(1.0));
        // later rounds use (1 - 1/(n+1))·ρ
        assert_eq!(case2_radius(1.0, 2), 1.0 - 1.0 / 3.0);
    }

    #[test]
    fn kadec_rejects_faces() {
        let a = face_cloud(5);
        let err = kadec_move(&OmegaState::initial(OmegaKind::Kadec), &a, 1, NormSpec::sup(), 0).unwrap_err();
        assert_eq!(err, Error::NoShrinkingSlice);
    }

    #[test]
    fn naive_examples() {
        let spec = NormSpec::euclidean();
        let single = Region::singleton(v(&[0.5, 0.5]));
        for n in 1..5 {
            let (_, mv) = naive_move(&OmegaState::initial(OmegaKind::Naive), &single, n, spec).unwrap();
            assert!(mv.b.same_points(&single));
        }
        let a = Region::new(vec![Vector::zero(), v(&[1.0, 0.0])]);
        let (_, mv) = naive_move(&OmegaState::initial(OmegaKind::Naive), &a, 2, spec).unwrap();
        assert_eq!(mv.b.points(), &[Vector::zero()]);

        let n = 3;
        let x = v(&[0.2, 0.1]);
        let near = 1.0 / (8.0 * n as f64);
        let cluster = vec![
            x.clone(),
            v(&[0.2 + near / 4.0, 0.1]),
            v(&[0.2, 0.1 - near / 4.0]),
        ];
        let mut pts = cluster.clone();
        pts.extend([v(&[0.9, 0.1]), v(&[0.2, -0.6])]);
        let (_, mv) = naive_move(&OmegaState::initial(OmegaKind::Naive), &Region::new(pts), n, spec).unwrap();
        assert_eq!(mv.b.points(), cluster.as_slice());
        assert!(mv.b.diameter(spec).unwrap() < 1.0 / n as f64);
    }

    #[test]
    fn sigma_random_keeps_ceiling() {
        let b = face_cloud(10);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        assert!(sigma_random(&b, 1.0, &mut rng).same_points(&b));
        let half = sigma_random(&b, 0.25, &mut rng);
        assert_eq!(half.len(), 3);
        assert!(half.subset_of(&b));
        assert_eq!(sigma_random(&b, 1e-9, &mut rng).len(), 1);
        let again = sigma_random(&b, 0.5, &mut ChaCha8Rng::seed_from_u64(8));
        assert_eq!(again, sigma_random(&b, 0.5, &mut ChaCha8Rng::seed_from_u64(8)));
    }

    #[test]
    fn sigma_face_examples() {
        let b = face_cloud(41);
        let e0 = Functional::coordinate(0);
        assert!(sigma_face(&b, &e0, 1.0).same_points(&b));
        let circle = Region::new(vec![v(&[1.0, 0.0]), v(&[0.0, 1.0]), v(&[0.6, 0.8])]);
        assert_eq!(sigma_face(&circle, &e0, 1.0).points(), &[v(&[1.0, 0.0])]);
        assert!(sigma_face(&circle, &e0, 7.0).same_points(&circle));
    }

    #[test]
    fn sigma_farthest_pair_examples() {
        let spec = NormSpec::euclidean();
        let single = Region::singleton(v(&[0.1]));
        assert!(sigma_farthest_pair(&single, spec).same_points(&single));
        let b = Region::new(vec![v(&[1.0, 0.0]), v(&[0.0, 1.0]), v(&[0.5, 0.5])]);
        assert_eq!(sigma_farthest_pair(&b, spec).points(), &[v(&[1.0, 0.0]), v(&[0.0, 1.0])]);
        let square = Region::new(vec![v(&[0.0, 0.0]), v(&[1.0, 0.0]), v(&[0.0, 1.0]), v(&[1.0, 1.0])]);
        // both diagonals tie in ℓ∞; the lowest pair wins
        assert_eq!(
            sigma_farthest_pair(&square, NormSpec::sup()).points(),
            &[v(&[0.0, 0.0]), v(&[1.0, 0.0])]
        );
    }

    #[test]
    fn sigma_asymptote_reattaches_hint() {
        let spec = NormSpec::euclidean();
        let b = Region::new(vec![v(&[0.9, 0.0])]);
        assert_eq!(sigma_asymptote(&b, 1.0, spec).sup_hint(), Some(1.0));
        // a hint below the attained norm cannot be declared
        assert_eq!(sigma_asymptote(&b, 0.5, spec).sup_hint(), None);
    }

    #[test]
    fn strategy_names_roundtrip() {
        for name in ["identity", "random:0.5", "face:0:1", "farthest-pair", "asymptote:1"] {
            assert_eq!(name.parse::<SigmaKind>().unwrap().to_string(), name);
        }
        for name in ["rotund", "kadec", "naive"] {
            assert_eq!(name.parse::<OmegaKind>().unwrap().to_string(), name);
        }
        assert!("random:0".parse::<SigmaKind>().is_err());
        assert!("random:1.5".parse::<SigmaKind>().is_err());
        assert!("face:x:1".parse::<SigmaKind>().is_err());
        assert!("greedy".parse::<OmegaKind>().is_err());
    }
}
