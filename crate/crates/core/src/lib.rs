//! Simulator for the fragmentability game on ℓᵖ model spaces.
//!
//! Σ and Ω alternately choose nested nonempty sets A₁ ⊃ B₁ ⊃ A₂ ⊃ …, with
//! every Bₙ relatively weakly open in Aₙ. Ω wins a play when the intersection
//! holds at most one point. The crate implements Ω strategies for rotund and
//! for Kadec norms, a naive box strategy, several Σ adversaries, and checks
//! for the inequalities those strategies rely on.

pub mod cli;
pub mod cloud;
pub mod error;
pub mod game;
pub mod kadec;
pub mod region;
pub mod space;
pub mod strategies;

pub use error::{Error, Result};
pub use game::{run_play, Outcome, PlayConfig, PlayResult, PlayVerdict, TraceRecord};
pub use region::{Region, WeakOpenSet};
pub use space::{Functional, NormSpec, Vector};
pub use strategies::{OmegaKind, SigmaKind};
