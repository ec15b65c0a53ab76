//! Nash equilibrium computation for stage games: pure enumeration for any
//! number of players, exact support enumeration for two players, and the
//! uniqueness test the multi-stage analysis relies on.

use crate::error::{Caps, Error};
use crate::linalg::{solve_square, Solve};
use crate::model::{MixedProfile, PureProfile, StageGame};
use crate::rat::Rat;
use crate::verdict::{Verdict, Witness, WitnessKind};

/// Census of a stage game's equilibria. `mixed` is populated only by the
/// 2-player support enumeration; `degenerate` reports that some support
/// system was singular or produced a zero weight, in which case the census
/// may be incomplete (never silently: the flag travels with the set).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct NashSet {
    pub pure: Vec<PureProfile>,
    pub mixed: Vec<MixedProfile>,
    pub degenerate: bool,
}

impl NashSet {
    /// Pure and mixed equilibria merged in canonical order
    /// (lexicographic by support, then by weight vectors).
    pub fn census(&self, game: &StageGame) -> Vec<MixedProfile> {
        let mut all: Vec<MixedProfile> = self
            .pure
            .iter()
            .map(|p| MixedProfile::pure(game, p))
            .chain(self.mixed.iter().cloned())
            .collect();
        all.sort_by_key(canonical_key);
        all.dedup();
        all
    }
}

/// Outcome of the uniqueness test.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Uniqueness {
    Unique(MixedProfile),
    Multiple(MixedProfile, MixedProfile),
    Unknown { reason: String },
}

fn canonical_key(m: &MixedProfile) -> (Vec<Vec<usize>>, Vec<Vec<Rat>>) {
    let supports = (0..m.num_players()).map(|i| m.support(i)).collect();
    let weights = (0..m.num_players())
        .map(|i| m.player_weights(i).to_vec())
        .collect();
    (supports, weights)
}

/// Player `i`'s expected payoff from the pure action `action` against the
/// other players' mixtures in `m`.
fn deviation_payoff(g: &StageGame, m: &MixedProfile, player: usize, action: usize) -> Rat {
    let mut total = Rat::zero();
    for profile in g.profiles() {
        if profile[player] != action {
            continue;
        }
        let mut prob = Rat::one();
        for (j, &a) in profile.iter().enumerate() {
            if j != player {
                prob *= m.weight(j, a);
            }
        }
        if !prob.is_zero() {
            total += prob * &g.payoff(&profile)[player];
        }
    }
    total
}

/// Is `m` a Nash equilibrium of `g`? Checking pure deviations suffices:
/// a player's expected payoff is linear in their own mixture, so any
/// profitable mixed deviation contains a profitable pure one.
pub fn is_nash(g: &StageGame, m: &MixedProfile) -> Result<Verdict, Error> {
    if !m.matches(g) {
        return Err(Error::invalid(
            "mixed profile does not match the stage game's action sets",
        ));
    }
    let base = crate::model::expected_stage_payoff(g, m)?;
    let mut witnesses = Vec::new();
    for i in 0..g.num_players() {
        for a in 0..g.actions(i).len() {
            let dev = deviation_payoff(g, m, i, a);
            if dev > base[i] {
                let gap = &dev - &base[i];
                witnesses.push(Witness {
                    kind: WitnessKind::NashFailure,
                    player: g.players()[i].clone(),
                    site: m.render(g),
                    site_other: None,
                    action: Some(g.actions(i)[a].clone()),
                    payoffs: [base[i].clone(), dev],
                    detail: format!("deviating to {} gains {gap}", g.actions(i)[a]),
                });
            }
        }
    }
    Ok(Verdict { witnesses })
}

/// All pure Nash equilibria in canonical (profile index) order.
pub fn enumerate_pure_nash(g: &StageGame, caps: &Caps) -> Result<Vec<PureProfile>, Error> {
    let count = g.profile_count();
    if count > caps.stage_profiles {
        return Err(Error::CapExceeded {
            what: "stage pure profiles",
            needed: count as u128,
            cap: caps.stage_profiles as u128,
        });
    }
    let mut out = Vec::new();
    'profiles: for profile in g.profiles() {
        for i in 0..g.num_players() {
            let here = &g.payoff(&profile)[i];
            let mut alt = profile.clone();
            for a in 0..g.actions(i).len() {
                if a == profile[i] {
                    continue;
                }
                alt[i] = a;
                if &g.payoff(&alt)[i] > here {
                    continue 'profiles;
                }
            }
        }
        out.push(profile);
    }
    Ok(out)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

/// Solve one player's indifference system: find the OPPONENT's mixture over
/// `opp_support` that makes `player` indifferent across `own_support`, and
/// normalize. Returns `None` when the system is singular.
fn indifference_mixture(
    g: &StageGame,
    player: usize,
    own_support: &[usize],
    opp_support: &[usize],
) -> Option<Vec<Rat>> {
    let opp = 1 - player;
    let k = opp_support.len();
    debug_assert_eq!(own_support.len(), k);
    let payoff = |own: usize, theirs: usize| -> &Rat {
        let profile = if player == 0 {
            vec![own, theirs]
        } else {
            vec![theirs, own]
        };
        &g.payoff(&profile)[player]
    };
    let _ = opp;
    let mut a: Vec<Vec<Rat>> = Vec::with_capacity(k);
    let mut b: Vec<Rat> = Vec::with_capacity(k);
    for w in 1..own_support.len() {
        let row = opp_support
            .iter()
            .map(|&t| payoff(own_support[0], t) - payoff(own_support[w], t))
            .collect();
        a.push(row);
        b.push(Rat::zero());
    }
    a.push(vec![Rat::one(); k]);
    b.push(Rat::one());
    match solve_square(&a, &[b]) {
        Solve::Unique(mut sols) => Some(sols.pop().unwrap()),
        Solve::Singular => None,
    }
}

/// Exact support enumeration over all equal-size support pairs of a
/// 2-player game.
pub fn enumerate_mixed_nash_2p(g: &StageGame) -> Result<NashSet, Error> {
    if g.num_players() != 2 {
        return Err(Error::invalid(
            "support enumeration is only implemented for 2-player games",
        ));
    }
    let n0 = g.actions(0).len();
    let n1 = g.actions(1).len();
    let mut degenerate = false;
    let mut found: Vec<MixedProfile> = Vec::new();

    for k in 1..=n0.min(n1) {
        for s0 in combinations(n0, k) {
            for s1 in combinations(n1, k) {
                // Player 0's indifference over s0 pins down player 1's
                // mixture on s1, and vice versa.
                let y = indifference_mixture(g, 0, &s0, &s1);
                let x = indifference_mixture(g, 1, &s1, &s0);
                let (Some(x), Some(y)) = (x, y) else {
                    degenerate = true;
                    continue;
                };
                if x.iter().chain(y.iter()).any(Rat::is_negative) {
                    continue;
                }
                let zero_on_support = x.iter().chain(y.iter()).any(Rat::is_zero);
                let mut w0 = vec![Rat::zero(); n0];
                for (idx, &a) in s0.iter().enumerate() {
                    w0[a] = x[idx].clone();
                }
                let mut w1 = vec![Rat::zero(); n1];
                for (idx, &b) in s1.iter().enumerate() {
                    w1[b] = y[idx].clone();
                }
                let Ok(candidate) = MixedProfile::new(vec![w0, w1]) else {
                    continue;
                };
                // Keep only exact equilibria: support indifference holds by
                // construction, this also rules out profitable off-support
                // deviations.
                if is_nash(g, &candidate)?.pass() {
                    if zero_on_support {
                        // An equilibrium whose true support is smaller than
                        // the guess: equal-size enumeration no longer
                        // certifies completeness.
                        degenerate = true;
                    }
                    found.push(candidate);
                }
            }
        }
    }

    found.sort_by_key(canonical_key);
    found.dedup();
    let mut set = NashSet {
        degenerate,
        ..NashSet::default()
    };
    for m in found {
        match m.as_pure() {
            Some(p) => set.pure.push(p),
            None => set.mixed.push(m),
        }
    }
    set.pure.sort();
    set.pure.dedup();
    Ok(set)
}

/// Uniqueness certification.
///
/// - 2 players: the full support-enumeration census decides, unless it ran
///   degenerate, in which case the answer is `Unknown`.
/// - 1 player: the argmax set decides exactly.
/// - 3+ players: two pure equilibria certify `Multiple`; anything else is
///   `Unknown`, because mixed equilibria are not enumerated.
pub fn has_unique_nash(g: &StageGame, caps: &Caps) -> Result<Uniqueness, Error> {
    match g.num_players() {
        1 => {
            let best = enumerate_pure_nash(g, caps)?;
            match best.len() {
                0 => unreachable!("a 1-player game always has a maximizing action"),
                1 => Ok(Uniqueness::Unique(MixedProfile::pure(g, &best[0]))),
                _ => Ok(Uniqueness::Multiple(
                    MixedProfile::pure(g, &best[0]),
                    MixedProfile::pure(g, &best[1]),
                )),
            }
        }
        2 => {
            let set = enumerate_mixed_nash_2p(g)?;
            if set.degenerate {
                return Ok(Uniqueness::Unknown {
                    reason: "support enumeration hit a degenerate system".into(),
                });
            }
            // Witness pairs prefer pure equilibria when two exist.
            if set.pure.len() >= 2 {
                return Ok(Uniqueness::Multiple(
                    MixedProfile::pure(g, &set.pure[0]),
                    MixedProfile::pure(g, &set.pure[1]),
                ));
            }
            let census = set.census(g);
            match census.len() {
                1 => Ok(Uniqueness::Unique(census[0].clone())),
                0 => Ok(Uniqueness::Unknown {
                    reason: "no equilibrium found despite a nondegenerate census".into(),
                }),
                _ => Ok(Uniqueness::Multiple(census[0].clone(), census[1].clone())),
            }
        }
        _ => {
            let pure = enumerate_pure_nash(g, caps)?;
            if pure.len() >= 2 {
                Ok(Uniqueness::Multiple(
                    MixedProfile::pure(g, &pure[0]),
                    MixedProfile::pure(g, &pure[1]),
                ))
            } else {
                Ok(Uniqueness::Unknown {
                    reason: "mixed equilibria are not enumerated for 3+ players".into(),
                })
            }
        }
    }
}

/// The canonically-first equilibrium of `g`, used by the credible
/// equilibrium construction. Pure equilibria are found for any player
/// count; mixed ones only for two players.
pub fn first_equilibrium(g: &StageGame, caps: &Caps) -> Result<MixedProfile, Error> {
    let pure = enumerate_pure_nash(g, caps)?;
    if g.num_players() == 2 {
        let set = enumerate_mixed_nash_2p(g)?;
        let census = set.census(g);
        if let Some(first) = census.first() {
            return Ok(first.clone());
        }
        return Err(Error::NoStageNashFound {
            stage_time: 0,
            reason: if set.degenerate {
                "degenerate support enumeration found no equilibrium".into()
            } else {
                "support enumeration found no equilibrium".into()
            },
        });
    }
    match pure.first() {
        Some(p) => Ok(MixedProfile::pure(g, p)),
        None => Err(Error::NoStageNashFound {
            stage_time: 0,
            reason: format!(
                "no pure equilibrium and mixed enumeration is unsupported for {} players",
                g.num_players()
            ),
        }),
    }
}
