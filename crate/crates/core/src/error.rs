use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("sup over empty set")]
    SupOfEmpty,

    #[error("diameter of empty set")]
    DiameterOfEmpty,

    #[error("sup_hint {hint} is below the attained norm {attained}")]
    HintBelowAttained { hint: f64, attained: f64 },

    #[error("no shrinking slice at face point")]
    NoShrinkingSlice,

    #[error("alpha too small for k_max = {k_max} (alpha = {alpha})")]
    AlphaTooSmall { k_max: u64, alpha: f64 },

    #[error("hint starves strategy")]
    HintStarves,

    #[error("initial set not in unit ball")]
    NotInUnitBall,

    #[error("initial set is empty")]
    EmptyInitial,

    #[error("illegal sigma move at round {round}: {reason}")]
    IllegalSigmaMove { round: usize, reason: String },

    #[error("omega move at round {round} is not nested in its input")]
    NestingViolated { round: usize },

    #[error("round {round}: {source}")]
    AtRound {
        round: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("play did not end with a singleton verdict")]
    NotSingleton,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    pub fn at_round(self, round: usize) -> Self {
        match self {
            e @ Error::AtRound { .. } => e,
            e => Error::AtRound {
                round,
                source: Box::new(e),
            },
        }
    }

    /// The error with any round context stripped.
    pub fn root(&self) -> &Error {
        match self {
            Error::AtRound { source, .. } => source.root(),
            e => e,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
