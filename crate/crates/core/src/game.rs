//! The play loop: Σ proposes Aₙ, Ω answers with Bₙ ⊂ Aₙ, repeat.
//!
//! Plays run inside the closed unit ball. Nesting and nonemptiness are
//! checked as each move is made. Since the infinite intersection cannot be
//! observed, a play ends with one of four verdicts decided from the last
//! Bₙ and the horizon.

use std::io::{self, BufRead, Write};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::region::{Region, WeakOpenSet};
use crate::space::{NormSpec, Vector};
use crate::strategies::{KadecCase, MoveNotes, OmegaKind, OmegaState, SigmaKind};

pub const DEFAULT_TOL: f64 = 1e-6;
pub const DEFAULT_STALL_BOUND: f64 = 1e-2;
pub const DEFAULT_MAX_ROUNDS: usize = 200;

#[derive(Clone, Debug, PartialEq)]
pub struct PlayConfig {
    pub spec: NormSpec,
    pub omega: OmegaKind,
    pub sigma: SigmaKind,
    pub max_rounds: usize,
    pub tol: f64,
    pub stall_bound: f64,
    pub rng_seed: u64,
}

impl PlayConfig {
    pub fn new(spec: NormSpec, omega: OmegaKind, sigma: SigmaKind) -> Self {
        Self {
            spec,
            omega,
            sigma,
            max_rounds: DEFAULT_MAX_ROUNDS,
            tol: DEFAULT_TOL,
            stall_bound: DEFAULT_STALL_BOUND,
            rng_seed: 0,
        }
    }

    pub fn seed(mut self, rng_seed: u64) -> Self {
        self.rng_seed = rng_seed;
        self
    }

    pub fn max_rounds(mut self, max_rounds: usize) -> Self {
        self.max_rounds = max_rounds;
        self
    }

    pub fn tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn stall_bound(mut self, stall_bound: f64) -> Self {
        self.stall_bound = stall_bound;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Outcome {
    /// An Ω move left nothing: the intersection is empty.
    OmegaWinEmpty,
    /// The last Bₙ is a single point or has diameter below `tol`.
    OmegaWinSingleton,
    /// Horizon reached with diameter at least `stall_bound`.
    SigmaStall,
    /// Horizon reached in between.
    Undetermined,
}

impl Outcome {
    pub fn is_omega_win(self) -> bool {
        matches!(self, Outcome::OmegaWinEmpty | Outcome::OmegaWinSingleton)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlayVerdict {
    pub outcome: Outcome,
    pub final_diameter: f64,
    pub rounds_played: usize,
}

/// One completed round.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub round: usize,
    pub size_a: usize,
    pub size_b: usize,
    pub diam_b: f64,
    #[serde(flatten)]
    pub notes: MoveNotes,
    pub open_set: WeakOpenSet,
    pub a: Region,
    pub b: Region,
}

impl TraceRecord {
    pub fn rho(&self) -> Option<f64> {
        self.notes.rho
    }

    pub fn epsilon(&self) -> Option<f64> {
        self.notes.epsilon
    }

    pub fn case(&self) -> Option<KadecCase> {
        self.notes.case
    }

    /// Re-applies the recorded open set to Aₙ and compares with Bₙ.
    pub fn reproduces(&self, spec: NormSpec) -> bool {
        self.a.restrict(&self.open_set, spec).same_points(&self.b)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PlayResult {
    pub verdict: PlayVerdict,
    pub trace: Vec<TraceRecord>,
}

/// Plays Ω against Σ from `initial` = A₁.
pub fn run_play(config: &PlayConfig, initial: &Region) -> Result<PlayResult> {
    let spec = config.spec;
    if initial.is_empty() {
        return Err(Error::EmptyInitial);
    }
    if initial.points().iter().any(|x| !(spec.norm(x) <= 1.0)) {
        return Err(Error::NotInUnitBall);
    }
    if initial.sup_hint().is_some_and(|h| h > 1.0) {
        return Err(Error::NotInUnitBall);
    }
    if config.max_rounds == 0 {
        return Err(Error::InvalidParameter("max_rounds must be at least 1".into()));
    }
    if !(config.tol > 0.0 && config.tol < config.stall_bound) {
        return Err(Error::InvalidParameter(format!(
            "need 0 < tol < stall_bound, got tol = {} and stall_bound = {}",
            config.tol, config.stall_bound
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(config.rng_seed);
    let mut state = OmegaState::initial(config.omega);
    let mut a = initial.clone();
    let mut trace = Vec::new();

    for round in 1..=config.max_rounds {
        let (next_state, mv) = config
            .omega
            .play(&state, &a, round, spec, config.rng_seed)
            .map_err(|e| e.at_round(round))?;
        state = next_state;
        if !mv.b.subset_of(&a) {
            return Err(Error::NestingViolated { round });
        }
        let diam_b = if mv.b.is_empty() { 0.0 } else { mv.b.diameter(spec)? };
        trace.push(TraceRecord {
            round,
            size_a: a.len(),
            size_b: mv.b.len(),
            diam_b,
            notes: mv.notes,
            open_set: mv.open_set,
            a: a.clone(),
            b: mv.b.clone(),
        });
        let finished = |outcome| PlayVerdict {
            outcome,
            final_diameter: diam_b,
            rounds_played: round,
        };
        if mv.b.is_empty() {
            return Ok(PlayResult {
                verdict: finished(Outcome::OmegaWinEmpty),
                trace,
            });
        }
        if mv.b.len() <= 1 || diam_b < config.tol {
            return Ok(PlayResult {
                verdict: finished(Outcome::OmegaWinSingleton),
                trace,
            });
        }
        if round == config.max_rounds {
            let outcome = if diam_b >= config.stall_bound {
                Outcome::SigmaStall
            } else {
                Outcome::Undetermined
            };
            return Ok(PlayResult {
                verdict: finished(outcome),
                trace,
            });
        }
        let next = config.sigma.play(&mv.b, spec, &mut rng);
        if next.is_empty() {
            return Err(Error::IllegalSigmaMove {
                round: round + 1,
                reason: "empty set".into(),
            });
        }
        if !next.subset_of(&mv.b) {
            return Err(Error::IllegalSigmaMove {
                round: round + 1,
                reason: "not contained in the previous omega move".into(),
            });
        }
        a = next;
    }
    unreachable!("the horizon round always returns")
}

/// Norm-diameter decay on a finished trace: the play emptied the set, or
/// ended at diameter 0, or its last `window` diameters strictly decrease to
/// below `tol`.
pub fn condition_iv_check(trace: &[TraceRecord], window: usize, tol: f64) -> bool {
    let Some(last) = trace.last() else {
        return false;
    };
    if last.size_b == 0 || last.diam_b == 0.0 {
        return true;
    }
    let start = trace.len().saturating_sub(window.max(1));
    let tail = &trace[start..];
    tail.windows(2).all(|w| w[1].diam_b < w[0].diam_b) && last.diam_b < tol
}

/// Convergence of picks yₙ ∈ Bₙ to the surviving point x̂: the last pick is
/// within `tol` of x̂, and at the final round both ‖(x̂ + yₙ)/2‖ and ‖yₙ‖ are
/// within `tol` of ρₙ. Norm convergence stands in for weak convergence in
/// this finite-dimensional model.
pub fn condition_v_check(
    verdict: &PlayVerdict,
    trace: &[TraceRecord],
    picks: &[Vector],
    spec: NormSpec,
    tol: f64,
) -> Result<bool> {
    if verdict.outcome != Outcome::OmegaWinSingleton {
        return Err(Error::NotSingleton);
    }
    let last = trace.last().ok_or(Error::NotSingleton)?;
    let x_hat = last.b.points().first().ok_or(Error::NotSingleton)?;
    if picks.len() != trace.len() {
        return Err(Error::InvalidParameter(format!(
            "need one pick per round: {} picks for {} rounds",
            picks.len(),
            trace.len()
        )));
    }
    if let Some(round) = trace.iter().zip(picks).position(|(rec, y)| !rec.b.contains(y)) {
        return Err(Error::InvalidParameter(format!(
            "pick {} is not a point of B_{}",
            round + 1,
            round + 1
        )));
    }
    let y = picks.last().expect("nonempty trace");
    let rho = match last.rho() {
        Some(r) => r,
        None => last.a.sup_norm(spec)?.0,
    };
    let mid = spec.norm(&x_hat.combine(0.5, y, 0.5));
    Ok(spec.distance(y, x_hat) < tol && (mid - rho).abs() < tol && (spec.norm(y) - rho).abs() < tol)
}

/// A line of a trace file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum TraceLine {
    Header { config: serde_json::Map<String, serde_json::Value> },
    Round(TraceRecord),
    Verdict(PlayVerdict),
}

pub fn write_trace<W: Write>(
    out: &mut W,
    config: &serde_json::Map<String, serde_json::Value>,
    result: &PlayResult,
) -> io::Result<()> {
    let line = |out: &mut W, l: &TraceLine| -> io::Result<()> {
        serde_json::to_writer(&mut *out, l)?;
        out.write_all(b"\n")
    };
    line(out, &TraceLine::Header { config: config.clone() })?;
    for rec in &result.trace {
        line(out, &TraceLine::Round(rec.clone()))?;
    }
    line(out, &TraceLine::Verdict(result.verdict.clone()))
}

/// Parses a trace file back into its header, records and verdict.
pub fn read_trace<R: BufRead>(input: R) -> io::Result<Vec<TraceLine>> {
    input
        .lines()
        .filter(|l| l.as_ref().map_or(true, |s| !s.trim().is_empty()))
        .map(|l| {
            let l = l?;
            serde_json::from_str(&l).map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e))
        })
        .collect()
}
