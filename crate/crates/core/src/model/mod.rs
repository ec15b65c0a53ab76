//! Game representations: stage games, multi-stage games, histories, and
//! behavior profiles, plus exact payoff evaluation over them.

mod behavior;
mod game;
mod history;
mod payoff;
mod stage;

pub use behavior::{histories_by_time, BehaviorProfile, CyclicProfile};
pub use game::{Horizon, MultiStageGame, ValidationReport, Violation};
pub use history::History;
pub use payoff::{
    discounted_payoff, expected_stage_payoff, subgames_equivalent, validate_history, value_table,
};
pub use stage::{MixedProfile, ProfileIter, PureProfile, StageGame};
