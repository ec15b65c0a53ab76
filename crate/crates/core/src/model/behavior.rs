use std::collections::BTreeMap;

use crate::error::{Caps, Error};
use crate::model::{History, MixedProfile, MultiStageGame};

/// Enumerate every history of a finite game, grouped by time: the result's
/// `[t-1]` entry holds all histories at time `t` in canonical order.
///
/// Fails with `CapExceeded` once the running node count passes
/// `caps.history_nodes`.
pub fn histories_by_time(
    game: &MultiStageGame,
    caps: &Caps,
) -> Result<Vec<Vec<History>>, Error> {
    let horizon = game.horizon_len().ok_or(Error::UnsupportedHorizon)?;
    let mut levels: Vec<Vec<History>> = Vec::with_capacity(horizon);
    let mut level = vec![History::root()];
    let mut total: u128 = 0;
    for t in 1..=horizon {
        total += level.len() as u128;
        if total > caps.history_nodes as u128 {
            return Err(Error::CapExceeded {
                what: "history tree nodes",
                needed: total,
                cap: caps.history_nodes as u128,
            });
        }
        let stage = game.stage(t).expect("stage within horizon");
        let next = if t < horizon {
            let mut next = Vec::with_capacity(level.len() * stage.profile_count());
            for h in &level {
                for p in stage.profiles() {
                    next.push(h.child(p));
                }
            }
            next
        } else {
            Vec::new()
        };
        levels.push(std::mem::replace(&mut level, next));
    }
    Ok(levels)
}

/// A total map from histories of a finite game to mixed stage actions.
/// Keys iterate in canonical (time, then moves) order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct BehaviorProfile {
    assignment: BTreeMap<History, MixedProfile>,
}

impl BehaviorProfile {
    /// Wrap a prebuilt assignment, checking totality and per-stage
    /// dimensions against the game.
    pub fn from_map(
        game: &MultiStageGame,
        assignment: BTreeMap<History, MixedProfile>,
        caps: &Caps,
    ) -> Result<Self, Error> {
        let levels = histories_by_time(game, caps)?;
        let expected: usize = levels.iter().map(Vec::len).sum();
        for level in &levels {
            for h in level {
                let stage = game.stage(h.time()).expect("within horizon");
                match assignment.get(h) {
                    None => {
                        return Err(Error::invalid(format!(
                            "profile is not total: no play for history {} at time {}",
                            h.render(game),
                            h.time()
                        )))
                    }
                    Some(m) if !m.matches(stage) => {
                        return Err(Error::invalid(format!(
                            "play at history {} does not match stage {}'s action sets",
                            h.render(game),
                            h.time()
                        )))
                    }
                    Some(_) => {}
                }
            }
        }
        if assignment.len() != expected {
            return Err(Error::invalid(format!(
                "profile has {} entries but the game tree has {expected} histories",
                assignment.len()
            )));
        }
        Ok(BehaviorProfile { assignment })
    }

    /// Materialize from a function over histories.
    pub fn from_fn(
        game: &MultiStageGame,
        caps: &Caps,
        mut f: impl FnMut(&History) -> MixedProfile,
    ) -> Result<Self, Error> {
        let levels = histories_by_time(game, caps)?;
        let mut assignment = BTreeMap::new();
        for level in &levels {
            for h in level {
                assignment.insert(h.clone(), f(h));
            }
        }
        Ok(BehaviorProfile { assignment })
    }

    /// History-independent profile: play `per_stage[t-1]` at every time-`t`
    /// history.
    pub fn constant(
        game: &MultiStageGame,
        per_stage: &[MixedProfile],
        caps: &Caps,
    ) -> Result<Self, Error> {
        let horizon = game.horizon_len().ok_or(Error::UnsupportedHorizon)?;
        if per_stage.len() != horizon {
            return Err(Error::invalid(format!(
                "expected {horizon} stage profiles, got {}",
                per_stage.len()
            )));
        }
        Self::from_fn(game, caps, |h| per_stage[h.time() - 1].clone())
    }

    pub fn play_at(&self, h: &History) -> Option<&MixedProfile> {
        self.assignment.get(h)
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&History, &MixedProfile)> {
        self.assignment.iter()
    }

    /// True when every prescribed mixture is degenerate.
    pub fn is_pure(&self) -> bool {
        self.assignment.values().all(|m| m.as_pure().is_some())
    }
}

/// A history-independent profile for infinite-horizon games: one mixed
/// stage action per prefix position, then one per cycle position forever.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CyclicProfile {
    pub prefix: Vec<MixedProfile>,
    pub cycle: Vec<MixedProfile>,
}

impl CyclicProfile {
    pub fn play_at_time(&self, time: usize) -> &MixedProfile {
        assert!(time >= 1);
        if time <= self.prefix.len() {
            &self.prefix[time - 1]
        } else {
            &self.cycle[(time - self.prefix.len() - 1) % self.cycle.len()]
        }
    }
}
