use thiserror::Error;

use crate::model::ValidationReport;

/// Crate-wide error type. Variants map onto the CLI exit codes: invalid
/// input exits 2, cap overruns exit 3.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("game failed validation")]
    Validation(ValidationReport),

    #[error("{what} needs {needed} but the cap is {cap}")]
    CapExceeded {
        what: &'static str,
        needed: u128,
        cap: u128,
    },

    #[error("operation requires a finite horizon")]
    UnsupportedHorizon,

    #[error("no stage Nash equilibrium could be computed for stage {stage_time}: {reason}")]
    NoStageNashFound { stage_time: usize, reason: String },

    #[error("ambiguous subtree isomorphism: player {player} at roots {site_a} / {site_b} differ only up to a nontrivial automorphism")]
    AmbiguousIsomorphism {
        player: String,
        site_a: String,
        site_b: String,
    },

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}

/// Enumeration and verification size limits. All limits are hard: caps on
/// verification are errors, caps on enumeration set a `truncated` flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Maximum number of histories in a finite game's tree.
    pub history_nodes: usize,
    /// Maximum number of pure profiles of a single stage game.
    pub stage_profiles: usize,
    /// Maximum equilibrium objects per enumeration level / tree.
    pub equilibria: usize,
    /// Maximum joint automaton states.
    pub joint_states: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            history_nodes: 1_000_000,
            stage_profiles: 1_000_000,
            equilibria: 100_000,
            joint_states: 10_000,
        }
    }
}

impl Caps {
    /// One knob for everything, used by the CLI `--cap` flag.
    pub fn uniform(cap: usize) -> Self {
        Caps {
            history_nodes: cap,
            stage_profiles: cap,
            equilibria: cap,
            joint_states: cap,
        }
    }
}
