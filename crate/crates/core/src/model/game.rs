use std::fmt;

use serde::Serialize;

use crate::model::StageGame;
use crate::rat::Rat;

/// Stage schedule of a multi-stage game.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Horizon {
    /// Exactly `stages.len()` periods.
    Finite(Vec<StageGame>),
    /// `prefix` once, then `cycle` forever.
    Infinite {
        prefix: Vec<StageGame>,
        cycle: Vec<StageGame>,
    },
}

/// A discounted sequence of stage games over a common player set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiStageGame {
    delta: Rat,
    horizon: Horizon,
}

/// One structural problem found while validating a game.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Violation {
    pub location: String,
    pub message: String,
}

/// Everything wrong with a candidate game; empty means valid.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, location: impl Into<String>, message: impl Into<String>) {
        self.violations.push(Violation {
            location: location.into(),
            message: message.into(),
        });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            return write!(f, "ok");
        }
        for v in &self.violations {
            writeln!(f, "{}: {}", v.location, v.message)?;
        }
        Ok(())
    }
}

/// Structural checks shared by both constructors. Stage-internal problems
/// (partial payoff tables, bad dimensions) are caught earlier when each
/// `StageGame` is built; this layer checks the pieces against each other.
fn validate(delta: &Rat, horizon: &Horizon) -> ValidationReport {
    let mut report = ValidationReport::default();
    if delta.is_negative() || delta > &Rat::one() {
        report.push("delta", format!("discount factor {delta} outside [0,1]"));
    }
    let stages: Vec<(String, &StageGame)> = match horizon {
        Horizon::Finite(stages) => {
            if stages.is_empty() {
                report.push("horizon", "finite horizon needs at least one stage");
            }
            stages
                .iter()
                .enumerate()
                .map(|(i, g)| (format!("stage {}", i + 1), g))
                .collect()
        }
        Horizon::Infinite { prefix, cycle } => {
            if delta >= &Rat::one() {
                report.push("delta", "infinite horizon requires delta < 1");
            }
            if cycle.is_empty() {
                report.push("horizon", "infinite horizon needs a nonempty cycle");
            }
            prefix
                .iter()
                .enumerate()
                .map(|(i, g)| (format!("prefix stage {}", i + 1), g))
                .chain(
                    cycle
                        .iter()
                        .enumerate()
                        .map(|(i, g)| (format!("cycle stage {}", i + 1), g)),
                )
                .collect()
        }
    };
    if let Some((_, first)) = stages.first() {
        for (loc, g) in &stages {
            if g.players() != first.players() {
                report.push(
                    loc.clone(),
                    format!(
                        "player set {:?} differs from {:?}",
                        g.players(),
                        first.players()
                    ),
                );
            }
        }
    }
    report
}

impl MultiStageGame {
    pub fn finite(delta: Rat, stages: Vec<StageGame>) -> Result<Self, ValidationReport> {
        let horizon = Horizon::Finite(stages);
        let report = validate(&delta, &horizon);
        if report.ok() {
            Ok(MultiStageGame { delta, horizon })
        } else {
            Err(report)
        }
    }

    pub fn infinite(
        delta: Rat,
        prefix: Vec<StageGame>,
        cycle: Vec<StageGame>,
    ) -> Result<Self, ValidationReport> {
        let horizon = Horizon::Infinite { prefix, cycle };
        let report = validate(&delta, &horizon);
        if report.ok() {
            Ok(MultiStageGame { delta, horizon })
        } else {
            Err(report)
        }
    }

    /// Validation as a report, for callers that want the full list of
    /// problems rather than a constructed game.
    pub fn validate_parts(delta: &Rat, horizon: &Horizon) -> ValidationReport {
        validate(delta, horizon)
    }

    pub fn delta(&self) -> &Rat {
        &self.delta
    }

    pub fn horizon(&self) -> &Horizon {
        &self.horizon
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.horizon, Horizon::Finite(_))
    }

    /// Number of stages, for finite games.
    pub fn horizon_len(&self) -> Option<usize> {
        match &self.horizon {
            Horizon::Finite(stages) => Some(stages.len()),
            Horizon::Infinite { .. } => None,
        }
    }

    pub fn players(&self) -> &[String] {
        match &self.horizon {
            Horizon::Finite(stages) => stages[0].players(),
            Horizon::Infinite { prefix, cycle } => prefix
                .first()
                .map(StageGame::players)
                .unwrap_or_else(|| cycle[0].players()),
        }
    }

    pub fn num_players(&self) -> usize {
        self.players().len()
    }

    /// Stage game at 1-based `time`; `None` past a finite horizon.
    pub fn stage(&self, time: usize) -> Option<&StageGame> {
        assert!(time >= 1, "time indices are 1-based");
        match &self.horizon {
            Horizon::Finite(stages) => stages.get(time - 1),
            Horizon::Infinite { prefix, cycle } => {
                if time <= prefix.len() {
                    Some(&prefix[time - 1])
                } else {
                    Some(&cycle[(time - prefix.len() - 1) % cycle.len()])
                }
            }
        }
    }

    /// Every structurally distinct stage game, labeled by the first time
    /// it is played. Finitely many even for infinite horizons.
    pub fn distinct_stages(&self) -> Vec<(usize, &StageGame)> {
        let all: Vec<&StageGame> = match &self.horizon {
            Horizon::Finite(stages) => stages.iter().collect(),
            Horizon::Infinite { prefix, cycle } => prefix.iter().chain(cycle.iter()).collect(),
        };
        let mut out: Vec<(usize, &StageGame)> = Vec::new();
        for (i, g) in all.into_iter().enumerate() {
            if !out.iter().any(|(_, seen)| *seen == g) {
                out.push((i + 1, g));
            }
        }
        out
    }

    /// All stage positions in schedule order: times `1..=T` when finite,
    /// `1..=prefix+cycle` when infinite.
    pub fn schedule_positions(&self) -> Vec<usize> {
        match &self.horizon {
            Horizon::Finite(stages) => (1..=stages.len()).collect(),
            Horizon::Infinite { prefix, cycle } => (1..=prefix.len() + cycle.len()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pd() -> StageGame {
        let r = Rat::int;
        StageGame::two_player(
            ["row", "col"],
            &["C", "D"],
            &["C", "D"],
            &[(r(3), r(3)), (r(0), r(5)), (r(5), r(0)), (r(1), r(1))],
        )
    }

    #[test]
    fn infinite_delta_one_rejected() {
        let err = MultiStageGame::infinite(Rat::one(), vec![], vec![pd()]).unwrap_err();
        assert!(err
            .violations
            .iter()
            .any(|v| v.message.contains("delta < 1")));
    }

    #[test]
    fn finite_delta_one_allowed() {
        assert!(MultiStageGame::finite(Rat::one(), vec![pd(), pd()]).is_ok());
    }

    #[test]
    fn mismatched_players_rejected() {
        let other = StageGame::two_player(
            ["left", "right"],
            &["A"],
            &["A"],
            &[(Rat::zero(), Rat::zero())],
        );
        let err = MultiStageGame::finite(Rat::one(), vec![pd(), other]).unwrap_err();
        assert!(err.violations.iter().any(|v| v.message.contains("differs")));
    }

    #[test]
    fn infinite_schedule_wraps() {
        let g = MultiStageGame::infinite(Rat::frac(1, 2), vec![], vec![pd()]).unwrap();
        assert_eq!(g.stage(1), g.stage(17));
        assert_eq!(g.distinct_stages().len(), 1);
        assert!(g.stage(5).is_some());
        assert_eq!(g.horizon_len(), None);
    }

    #[test]
    fn delta_out_of_range() {
        let err = MultiStageGame::finite(Rat::frac(3, 2), vec![pd()]).unwrap_err();
        assert!(err.violations.iter().any(|v| v.location == "delta"));
    }
}
