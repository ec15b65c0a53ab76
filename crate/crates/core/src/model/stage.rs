use std::fmt;

use crate::error::Error;
use crate::rat::Rat;

/// One action index per player.
pub type PureProfile = Vec<usize>;

/// A finite normal-form game played at a single time index.
///
/// Payoffs live in a flat table indexed player-major: profile `(a_0, …,
/// a_{n-1})` maps to `((a_0 · |A_1| + a_1) · |A_2| + a_2) …`, and every
/// entry is a full per-player payoff vector. Construction guarantees the
/// table is total.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StageGame {
    players: Vec<String>,
    actions: Vec<Vec<String>>,
    payoffs: Vec<Vec<Rat>>,
}

impl StageGame {
    pub fn new(
        players: Vec<String>,
        actions: Vec<Vec<String>>,
        payoffs: Vec<Vec<Rat>>,
    ) -> Result<Self, Error> {
        if players.is_empty() {
            return Err(Error::invalid("a stage game needs at least one player"));
        }
        if actions.len() != players.len() {
            return Err(Error::invalid(format!(
                "expected {} action lists, got {}",
                players.len(),
                actions.len()
            )));
        }
        for (i, acts) in actions.iter().enumerate() {
            if acts.is_empty() {
                return Err(Error::invalid(format!(
                    "player `{}` has an empty action list",
                    players[i]
                )));
            }
            for (j, a) in acts.iter().enumerate() {
                if acts[..j].contains(a) {
                    return Err(Error::invalid(format!(
                        "player `{}` has duplicate action label `{a}`",
                        players[i]
                    )));
                }
            }
        }
        let count: usize = actions.iter().map(Vec::len).product();
        if payoffs.len() != count {
            return Err(Error::invalid(format!(
                "payoff map not total: expected {count} profiles, got {}",
                payoffs.len()
            )));
        }
        if payoffs.iter().any(|v| v.len() != players.len()) {
            return Err(Error::invalid(
                "every payoff entry needs one value per player",
            ));
        }
        Ok(StageGame {
            players,
            actions,
            payoffs,
        })
    }

    /// Convenience constructor for a 2-player game from payoff matrices
    /// `(row payoff, col payoff)` in row-major order.
    pub fn two_player(
        players: [&str; 2],
        row_actions: &[&str],
        col_actions: &[&str],
        table: &[(Rat, Rat)],
    ) -> Self {
        let payoffs = table
            .iter()
            .map(|(a, b)| vec![a.clone(), b.clone()])
            .collect();
        StageGame::new(
            players.iter().map(|s| s.to_string()).collect(),
            vec![
                row_actions.iter().map(|s| s.to_string()).collect(),
                col_actions.iter().map(|s| s.to_string()).collect(),
            ],
            payoffs,
        )
        .expect("two_player: inconsistent table")
    }

    pub fn num_players(&self) -> usize {
        self.players.len()
    }

    pub fn players(&self) -> &[String] {
        &self.players
    }

    pub fn actions(&self, player: usize) -> &[String] {
        &self.actions[player]
    }

    pub fn action_counts(&self) -> Vec<usize> {
        self.actions.iter().map(Vec::len).collect()
    }

    pub fn profile_count(&self) -> usize {
        self.actions.iter().map(Vec::len).product()
    }

    pub fn profile_index(&self, profile: &[usize]) -> usize {
        debug_assert_eq!(profile.len(), self.actions.len());
        let mut idx = 0;
        for (i, &a) in profile.iter().enumerate() {
            debug_assert!(a < self.actions[i].len());
            idx = idx * self.actions[i].len() + a;
        }
        idx
    }

    pub fn payoff(&self, profile: &[usize]) -> &[Rat] {
        &self.payoffs[self.profile_index(profile)]
    }

    pub fn payoff_by_index(&self, idx: usize) -> &[Rat] {
        &self.payoffs[idx]
    }

    /// Iterate all pure profiles in canonical (player-major index) order.
    pub fn profiles(&self) -> ProfileIter {
        ProfileIter::new(self.action_counts())
    }

    pub fn is_valid_profile(&self, profile: &[usize]) -> bool {
        profile.len() == self.actions.len()
            && profile.iter().zip(&self.actions).all(|(&a, acts)| a < acts.len())
    }

    pub fn action_index(&self, player: usize, label: &str) -> Option<usize> {
        self.actions[player].iter().position(|a| a == label)
    }

    /// Render a pure profile with its action labels, e.g. `(C,D)`.
    pub fn profile_label(&self, profile: &[usize]) -> String {
        let labels: Vec<&str> = profile
            .iter()
            .enumerate()
            .map(|(i, &a)| self.actions[i][a].as_str())
            .collect();
        format!("({})", labels.join(","))
    }
}

/// Mixed-radix odometer over per-player action counts.
#[derive(Clone, Debug)]
pub struct ProfileIter {
    counts: Vec<usize>,
    next: Option<PureProfile>,
}

impl ProfileIter {
    pub fn new(counts: Vec<usize>) -> Self {
        let next = if counts.iter().any(|&c| c == 0) {
            None
        } else {
            Some(vec![0; counts.len()])
        };
        ProfileIter { counts, next }
    }
}

impl Iterator for ProfileIter {
    type Item = PureProfile;

    fn next(&mut self) -> Option<PureProfile> {
        let current = self.next.clone()?;
        let mut bumped = current.clone();
        let mut done = true;
        for i in (0..bumped.len()).rev() {
            bumped[i] += 1;
            if bumped[i] < self.counts[i] {
                done = false;
                break;
            }
            bumped[i] = 0;
        }
        self.next = if done || bumped.is_empty() {
            None
        } else {
            Some(bumped)
        };
        Some(current)
    }
}

/// One mixed stage action per player: `weights[i][a]` is the probability
/// player `i` puts on their `a`-th action. Rows sum to exactly one.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MixedProfile {
    weights: Vec<Vec<Rat>>,
}

impl MixedProfile {
    pub fn new(weights: Vec<Vec<Rat>>) -> Result<Self, Error> {
        for (i, row) in weights.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::invalid(format!("player {i} has an empty mixture")));
            }
            if row.iter().any(Rat::is_negative) {
                return Err(Error::invalid(format!(
                    "player {i} has a negative probability"
                )));
            }
            let total = row.iter().fold(Rat::zero(), |acc, w| acc + w);
            if total != Rat::one() {
                return Err(Error::invalid(format!(
                    "player {i}'s weights sum to {total}, not 1"
                )));
            }
        }
        Ok(MixedProfile { weights })
    }

    /// The degenerate mixture concentrated on one pure profile.
    pub fn pure(game: &StageGame, profile: &[usize]) -> Self {
        debug_assert!(game.is_valid_profile(profile));
        let weights = profile
            .iter()
            .enumerate()
            .map(|(i, &a)| {
                let mut row = vec![Rat::zero(); game.actions(i).len()];
                row[a] = Rat::one();
                row
            })
            .collect();
        MixedProfile { weights }
    }

    pub fn num_players(&self) -> usize {
        self.weights.len()
    }

    pub fn weight(&self, player: usize, action: usize) -> &Rat {
        &self.weights[player][action]
    }

    pub fn player_weights(&self, player: usize) -> &[Rat] {
        &self.weights[player]
    }

    pub fn matches(&self, game: &StageGame) -> bool {
        self.weights.len() == game.num_players()
            && self
                .weights
                .iter()
                .enumerate()
                .all(|(i, row)| row.len() == game.actions(i).len())
    }

    /// Probability of a pure profile under the product distribution.
    pub fn profile_prob(&self, profile: &[usize]) -> Rat {
        profile
            .iter()
            .enumerate()
            .fold(Rat::one(), |acc, (i, &a)| acc * &self.weights[i][a])
    }

    pub fn support(&self, player: usize) -> Vec<usize> {
        self.weights[player]
            .iter()
            .enumerate()
            .filter(|(_, w)| !w.is_zero())
            .map(|(a, _)| a)
            .collect()
    }

    /// `Some(profile)` when every player plays a single action.
    pub fn as_pure(&self) -> Option<PureProfile> {
        self.weights
            .iter()
            .map(|row| {
                let support: Vec<usize> = row
                    .iter()
                    .enumerate()
                    .filter(|(_, w)| !w.is_zero())
                    .map(|(a, _)| a)
                    .collect();
                (support.len() == 1).then(|| support[0])
            })
            .collect()
    }

    /// Render with action labels, e.g. `(D, 3/4 D + 1/4 E)`.
    pub fn render(&self, game: &StageGame) -> String {
        let parts: Vec<String> = self
            .weights
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let terms: Vec<String> = row
                    .iter()
                    .enumerate()
                    .filter(|(_, w)| !w.is_zero())
                    .map(|(a, w)| {
                        if *w == Rat::one() {
                            game.actions(i)[a].clone()
                        } else {
                            format!("{w} {}", game.actions(i)[a])
                        }
                    })
                    .collect();
                terms.join(" + ")
            })
            .collect();
        format!("({})", parts.join(","))
    }
}

impl fmt::Display for MixedProfile {
    /// Label-free rendering (weights keyed by action index); use
    /// [`MixedProfile::render`] when a game is at hand.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .weights
            .iter()
            .map(|row| {
                let terms: Vec<String> = row
                    .iter()
                    .enumerate()
                    .filter(|(_, w)| !w.is_zero())
                    .map(|(a, w)| format!("{w}@{a}"))
                    .collect();
                terms.join("+")
            })
            .collect();
        write!(f, "({})", parts.join(";"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn cde_game() -> StageGame {
        let r = Rat::int;
        StageGame::two_player(
            ["row", "col"],
            &["C", "D", "E"],
            &["C", "D", "E"],
            &[
                (r(4), r(4)),
                (r(0), r(0)),
                (r(0), r(5)),
                (r(0), r(0)),
                (r(1), r(1)),
                (r(0), r(0)),
                (r(5), r(0)),
                (r(0), r(0)),
                (r(3), r(3)),
            ],
        )
    }

    #[test]
    fn profile_indexing_roundtrip() {
        let g = cde_game();
        for (k, p) in g.profiles().enumerate() {
            assert_eq!(g.profile_index(&p), k);
        }
        assert_eq!(g.profiles().count(), 9);
        assert_eq!(g.payoff(&[2, 2]), &[Rat::int(3), Rat::int(3)]);
        assert_eq!(g.profile_label(&[0, 1]), "(C,D)");
    }

    #[test]
    fn rejects_partial_payoff_table() {
        let err = StageGame::new(
            vec!["a".into(), "b".into()],
            vec![vec!["X".into(), "Y".into()], vec!["X".into(), "Y".into()]],
            vec![vec![Rat::zero(), Rat::zero()]; 3],
        );
        assert!(matches!(err, Err(Error::Invalid(msg)) if msg.contains("not total")));
    }

    #[test]
    fn mixed_profile_validation() {
        assert!(MixedProfile::new(vec![vec![Rat::frac(1, 2), Rat::frac(1, 2)]]).is_ok());
        assert!(MixedProfile::new(vec![vec![Rat::frac(1, 2), Rat::frac(1, 3)]]).is_err());
        assert!(MixedProfile::new(vec![vec![Rat::frac(3, 2), Rat::frac(-1, 2)]]).is_err());
    }

    #[test]
    fn pure_helpers() {
        let g = cde_game();
        let m = MixedProfile::pure(&g, &[1, 1]);
        assert_eq!(m.as_pure(), Some(vec![1, 1]));
        assert_eq!(m.profile_prob(&[1, 1]), Rat::one());
        assert_eq!(m.profile_prob(&[0, 1]), Rat::zero());
        assert_eq!(m.support(0), vec![1]);
    }
}
