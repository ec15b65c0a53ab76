use std::collections::BTreeMap;

use crate::error::{Caps, Error};
use crate::model::{
    histories_by_time, BehaviorProfile, History, MixedProfile, MultiStageGame, StageGame,
};
use crate::rat::Rat;

/// Exact expected payoff vector of `m` in `g` under the product
/// distribution of the players' mixtures.
pub fn expected_stage_payoff(g: &StageGame, m: &MixedProfile) -> Result<Vec<Rat>, Error> {
    if !m.matches(g) {
        return Err(Error::invalid(
            "mixed profile does not match the stage game's action sets",
        ));
    }
    let mut out = vec![Rat::zero(); g.num_players()];
    for profile in g.profiles() {
        let prob = m.profile_prob(&profile);
        if prob.is_zero() {
            continue;
        }
        for (i, u) in g.payoff(&profile).iter().enumerate() {
            out[i] += &prob * u;
        }
    }
    Ok(out)
}

/// Check `h` against the game: every move must be a valid pure profile of
/// its stage, and the history must not run past a finite horizon.
pub fn validate_history(game: &MultiStageGame, h: &History) -> Result<(), Error> {
    if let Some(t_max) = game.horizon_len() {
        if h.time() > t_max {
            return Err(Error::invalid(format!(
                "history at time {} lies beyond the horizon T={t_max}",
                h.time()
            )));
        }
    }
    for (t, profile) in h.moves().iter().enumerate() {
        let stage = game.stage(t + 1).expect("validated above");
        if !stage.is_valid_profile(profile) {
            return Err(Error::invalid(format!(
                "history move {profile:?} is not a pure profile of stage {}",
                t + 1
            )));
        }
    }
    Ok(())
}

/// The paper's subgame equivalence: two subgames of the same multi-stage
/// game are equivalent exactly when they start at the same time.
pub fn subgames_equivalent(
    game: &MultiStageGame,
    h: &History,
    h_other: &History,
) -> Result<bool, Error> {
    validate_history(game, h)?;
    validate_history(game, h_other)?;
    Ok(h.time() == h_other.time())
}

/// Discounted expected payoff vector of the subgame rooted at `root`,
/// normalized so the discount exponent is 0 at the root itself.
pub fn discounted_payoff(
    game: &MultiStageGame,
    profile: &BehaviorProfile,
    root: &History,
) -> Result<Vec<Rat>, Error> {
    let t_max = game.horizon_len().ok_or(Error::UnsupportedHorizon)?;
    validate_history(game, root)?;
    let n = game.num_players();
    let mut memo: BTreeMap<History, Vec<Rat>> = BTreeMap::new();
    fn walk(
        game: &MultiStageGame,
        profile: &BehaviorProfile,
        h: &History,
        t_max: usize,
        n: usize,
        memo: &mut BTreeMap<History, Vec<Rat>>,
    ) -> Result<Vec<Rat>, Error> {
        if h.time() > t_max {
            return Ok(vec![Rat::zero(); n]);
        }
        if let Some(v) = memo.get(h) {
            return Ok(v.clone());
        }
        let stage = game.stage(h.time()).expect("within horizon");
        let play = profile.play_at(h).ok_or_else(|| {
            Error::invalid(format!("profile is not total at history {}", h.render(game)))
        })?;
        let mut value = expected_stage_payoff(stage, play)?;
        if h.time() < t_max {
            for pure in stage.profiles() {
                let prob = play.profile_prob(&pure);
                if prob.is_zero() {
                    continue;
                }
                let child = h.child(pure);
                let cont = walk(game, profile, &child, t_max, n, memo)?;
                for (acc, c) in value.iter_mut().zip(&cont) {
                    *acc += game.delta() * &prob * c;
                }
            }
        }
        memo.insert(h.clone(), value.clone());
        Ok(value)
    }
    walk(game, profile, root, t_max, n, &mut memo)
}

/// Continuation values at every history of the tree, root-normalized at
/// each history. `table[h] = E[u(h)] + delta * E[table[h + a]]`.
pub fn value_table(
    game: &MultiStageGame,
    profile: &BehaviorProfile,
    caps: &Caps,
) -> Result<BTreeMap<History, Vec<Rat>>, Error> {
    let levels = histories_by_time(game, caps)?;
    let mut table: BTreeMap<History, Vec<Rat>> = BTreeMap::new();
    for level in levels.iter().rev() {
        for h in level {
            let stage = game.stage(h.time()).expect("within horizon");
            let play = profile.play_at(h).ok_or_else(|| {
                Error::invalid(format!("profile is not total at history {}", h.render(game)))
            })?;
            let mut value = expected_stage_payoff(stage, play)?;
            for pure in stage.profiles() {
                let prob = play.profile_prob(&pure);
                if prob.is_zero() {
                    continue;
                }
                if let Some(cont) = table.get(&h.child(pure)) {
                    for (acc, c) in value.iter_mut().zip(cont) {
                        *acc += game.delta() * &prob * c;
                    }
                }
            }
            table.insert(h.clone(), value);
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Caps;

    fn r(n: i64) -> Rat {
        Rat::int(n)
    }

    fn cde() -> StageGame {
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

    fn fig1_game() -> MultiStageGame {
        let stage1 = StageGame::two_player(
            ["row", "col"],
            &["A", "B"],
            &["A", "B"],
            &[(r(0), r(0)), (r(0), r(0)), (r(1), r(3)), (r(4), r(2))],
        );
        let stage2 = StageGame::two_player(
            ["row", "col"],
            &["A", "B"],
            &["A", "B"],
            &[(r(1), r(1)), (r(1), r(1)), (r(1), r(3)), (r(1), r(3))],
        );
        MultiStageGame::finite(Rat::one(), vec![stage1, stage2]).unwrap()
    }

    /// Row: B, then B after (B,B) else A. Col: always B.
    fn fig1_profile(game: &MultiStageGame) -> BehaviorProfile {
        BehaviorProfile::from_fn(game, &Caps::default(), |h| {
            let stage = game.stage(h.time()).unwrap();
            if h.is_root() {
                MixedProfile::pure(stage, &[1, 1])
            } else if h.moves()[0] == vec![1, 1] {
                MixedProfile::pure(stage, &[1, 1])
            } else {
                MixedProfile::pure(stage, &[0, 1])
            }
        })
        .unwrap()
    }

    #[test]
    fn pure_profile_expectation_is_table_row() {
        let g = cde();
        let m = MixedProfile::pure(&g, &[2, 2]);
        assert_eq!(expected_stage_payoff(&g, &m).unwrap(), vec![r(3), r(3)]);
    }

    #[test]
    fn mixed_expectation_matches_hand_expansion() {
        // Both players mix (0, 3/4, 1/4) over (C, D, E):
        // E[u] = (9/16)*1 + (3/16)*0 + (3/16)*0 + (1/16)*3 = 3/4 each.
        let g = cde();
        let mix = vec![Rat::zero(), Rat::frac(3, 4), Rat::frac(1, 4)];
        let m = MixedProfile::new(vec![mix.clone(), mix]).unwrap();
        assert_eq!(
            expected_stage_payoff(&g, &m).unwrap(),
            vec![Rat::frac(3, 4), Rat::frac(3, 4)]
        );
    }

    /// Brute-force oracle: weight every pure profile by its probability.
    #[test]
    fn expectation_equals_bruteforce_enumeration() {
        let g = cde();
        let m = MixedProfile::new(vec![
            vec![Rat::frac(1, 2), Rat::frac(1, 3), Rat::frac(1, 6)],
            vec![Rat::frac(1, 5), Rat::zero(), Rat::frac(4, 5)],
        ])
        .unwrap();
        let mut oracle = vec![Rat::zero(); 2];
        for p in g.profiles() {
            let prob = m.weight(0, p[0]) * m.weight(1, p[1]);
            for (i, u) in g.payoff(&p).iter().enumerate() {
                oracle[i] += &prob * u;
            }
        }
        assert_eq!(expected_stage_payoff(&g, &m).unwrap(), oracle);
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let g = cde();
        let m = MixedProfile::new(vec![vec![Rat::one()], vec![Rat::one()]]).unwrap();
        assert!(expected_stage_payoff(&g, &m).is_err());
    }

    #[test]
    fn fig1_total_payoff() {
        let game = fig1_game();
        let p = fig1_profile(&game);
        // Stage 1 (B,B) gives (4,2); stage 2 after (B,B) gives (1,3).
        assert_eq!(
            discounted_payoff(&game, &p, &History::root()).unwrap(),
            vec![r(5), r(5)]
        );
        // Subgame after (B,A): profile plays (A,B) -> (1,1).
        assert_eq!(
            discounted_payoff(&game, &p, &History::new(vec![vec![1, 0]])).unwrap(),
            vec![r(1), r(1)]
        );
    }

    /// Independent oracle: enumerate realized pure paths with their
    /// probabilities and sum discounted payoffs directly.
    #[test]
    fn discounted_payoff_matches_path_enumeration() {
        let game = fig1_game();
        let stage = game.stage(1).unwrap();
        let mix = MixedProfile::new(vec![
            vec![Rat::frac(1, 3), Rat::frac(2, 3)],
            vec![Rat::frac(1, 4), Rat::frac(3, 4)],
        ])
        .unwrap();
        let p = BehaviorProfile::from_fn(&game, &Caps::default(), |_| mix.clone()).unwrap();

        let mut oracle = vec![Rat::zero(); 2];
        for first in stage.profiles() {
            let p1 = mix.profile_prob(&first);
            for (i, u) in game.stage(1).unwrap().payoff(&first).iter().enumerate() {
                oracle[i] += &p1 * u;
            }
            for second in game.stage(2).unwrap().profiles() {
                let p2 = &p1 * mix.profile_prob(&second);
                for (i, u) in game.stage(2).unwrap().payoff(&second).iter().enumerate() {
                    oracle[i] += &p2 * game.delta() * u;
                }
            }
        }
        assert_eq!(
            discounted_payoff(&game, &p, &History::root()).unwrap(),
            oracle
        );
    }

    #[test]
    fn single_stage_reduces_to_stage_payoff() {
        let g = cde();
        let game = MultiStageGame::finite(Rat::frac(1, 2), vec![g.clone()]).unwrap();
        let m = MixedProfile::pure(&g, &[1, 1]);
        let p = BehaviorProfile::from_fn(&game, &Caps::default(), |_| m.clone()).unwrap();
        assert_eq!(
            discounted_payoff(&game, &p, &History::root()).unwrap(),
            expected_stage_payoff(&g, &m).unwrap()
        );
    }

    #[test]
    fn root_beyond_horizon_errors() {
        let game = fig1_game();
        let p = fig1_profile(&game);
        let deep = History::new(vec![vec![0, 0], vec![0, 0]]);
        assert!(discounted_payoff(&game, &p, &deep).is_err());
    }

    #[test]
    fn equivalence_is_same_time() {
        let game = fig1_game();
        let h_a = History::new(vec![vec![0, 0]]);
        let h_b = History::new(vec![vec![0, 1]]);
        assert!(subgames_equivalent(&game, &h_a, &h_b).unwrap());
        assert!(subgames_equivalent(&game, &h_a, &h_a).unwrap());
        assert!(!subgames_equivalent(&game, &History::root(), &h_a).unwrap());
        let bad = History::new(vec![vec![7, 7]]);
        assert!(subgames_equivalent(&game, &h_a, &bad).is_err());
    }

    #[test]
    fn value_table_agrees_with_discounted_payoff() {
        let game = fig1_game();
        let p = fig1_profile(&game);
        let table = value_table(&game, &p, &Caps::default()).unwrap();
        for (h, v) in &table {
            assert_eq!(&discounted_payoff(&game, &p, h).unwrap(), v);
        }
        assert_eq!(table.len(), 5);
    }
}
