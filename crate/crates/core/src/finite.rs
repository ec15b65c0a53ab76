//! Subgame perfect and credible equilibria of finite-horizon multi-stage
//! games: verification, enumeration over pure behavior tables,
//! construction, and the stage-uniqueness analysis (which also covers
//! infinite prefix+cycle games).

use std::collections::{BTreeMap, HashMap};

use crate::error::{Caps, Error};
use crate::model::{
    histories_by_time, value_table, BehaviorProfile, CyclicProfile, History, MixedProfile,
    MultiStageGame, PureProfile, StageGame,
};
use crate::nash::{self, Uniqueness};
use crate::rat::Rat;
use crate::verdict::{Verdict, Witness, WitnessKind};

/// A set of pure-action equilibrium behavior tables. `truncated` reports
/// that some enumeration level hit `cap` and the set may be incomplete.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EquilibriumSet {
    pub profiles: Vec<BehaviorProfile>,
    pub truncated: bool,
    pub cap: usize,
}

/// Output of the credible-equilibrium construction: a full behavior table
/// for finite games, a prefix+cycle schedule for infinite ones.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CredibleProfile {
    Table(BehaviorProfile),
    Cyclic(CyclicProfile),
}

/// Outcome of the stage-uniqueness analysis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum UniquenessReport {
    /// Every stage game has a certified unique Nash equilibrium; the unique
    /// credible equilibrium plays it at every history.
    Unique(CredibleProfile),
    /// Some stage has at least two equilibria, so the hypothesis fails.
    NotApplicable {
        stage_time: usize,
        first: MixedProfile,
        second: MixedProfile,
    },
    /// Some stage's census could not be certified.
    Unknown { stage_time: usize, reason: String },
}

/// One-shot deviation check at every history of the tree. Valid as an SPNE
/// test because discounted payoffs over a finite horizon are additive: any
/// profitable contingent deviation contains a profitable one-shot one.
pub fn verify_spne(
    game: &MultiStageGame,
    profile: &BehaviorProfile,
    caps: &Caps,
) -> Result<Verdict, Error> {
    let levels = histories_by_time(game, caps)?;
    let values = value_table(game, profile, caps)?;
    let n = game.num_players();
    let mut witnesses = Vec::new();
    for level in &levels {
        for h in level {
            let stage = game.stage(h.time()).expect("within horizon");
            let play = profile
                .play_at(h)
                .ok_or_else(|| Error::invalid("profile not total"))?;
            let here = &values[h];
            for i in 0..n {
                for a in 0..stage.actions(i).len() {
                    let dev = one_shot_value(game, stage, h, play, &values, i, a);
                    if dev > here[i] {
                        witnesses.push(Witness {
                            kind: WitnessKind::NashFailure,
                            player: stage.players()[i].clone(),
                            site: h.render(game),
                            site_other: None,
                            action: Some(stage.actions(i)[a].clone()),
                            payoffs: [here[i].clone(), dev],
                            detail: format!(
                                "one-shot deviation at time {} improves player {}",
                                h.time(),
                                stage.players()[i]
                            ),
                        });
                    }
                }
            }
        }
    }
    Ok(Verdict { witnesses })
}

/// Value of deviating once to `action` at `h` and following `profile`'s
/// continuation afterwards (along the realized, deviated history).
fn one_shot_value(
    game: &MultiStageGame,
    stage: &StageGame,
    h: &History,
    play: &MixedProfile,
    values: &BTreeMap<History, Vec<Rat>>,
    player: usize,
    action: usize,
) -> Rat {
    let mut total = Rat::zero();
    for pure in stage.profiles() {
        if pure[player] != action {
            continue;
        }
        let mut prob = Rat::one();
        for (j, &a) in pure.iter().enumerate() {
            if j != player {
                prob *= play.weight(j, a);
            }
        }
        if prob.is_zero() {
            continue;
        }
        let mut value = stage.payoff(&pure)[player].clone();
        if let Some(cont) = values.get(&h.child(pure)) {
            value += game.delta() * &cont[player];
        }
        total += prob * value;
    }
    total
}

/// Classes of per-player restricted sub-tables at each time level,
/// interned bottom-up: two histories at the same time share a class for
/// player `i` exactly when `i`'s prescribed play agrees at every
/// corresponding continuation history.
fn restriction_classes(
    game: &MultiStageGame,
    profile: &BehaviorProfile,
    levels: &[Vec<History>],
    player: usize,
) -> HashMap<History, u32> {
    let mut class_of: HashMap<History, u32> = HashMap::new();
    let mut intern: HashMap<(Vec<Rat>, Vec<u32>), u32> = HashMap::new();
    for (idx, level) in levels.iter().enumerate().rev() {
        let t = idx + 1;
        let stage = game.stage(t).expect("within horizon");
        for h in level {
            let play = profile.play_at(h).expect("profile is total");
            let own = play.player_weights(player).to_vec();
            let children: Vec<u32> = if idx + 1 < levels.len() {
                stage.profiles().map(|p| class_of[&h.child(p)]).collect()
            } else {
                Vec::new()
            };
            let next_id = intern.len() as u32;
            let id = *intern.entry((own, children)).or_insert(next_id);
            class_of.insert(h.clone(), id);
        }
    }
    class_of
}

/// Witnesses against the credibility condition: for every pair of
/// same-time histories where player `i`'s restricted sub-table differs,
/// `i`'s continuation payoff must coincide exactly.
///
/// Histories with identical sub-tables form one class, so only the class
/// structure is compared; with two or more classes at a time level, all of
/// that level's payoffs for `i` must agree (pairwise equality across
/// classes forces it transitively).
pub fn condition_ii_witnesses(
    game: &MultiStageGame,
    profile: &BehaviorProfile,
    caps: &Caps,
) -> Result<Vec<Witness>, Error> {
    let levels = histories_by_time(game, caps)?;
    let values = value_table(game, profile, caps)?;
    let n = game.num_players();
    let mut witnesses = Vec::new();
    for i in 0..n {
        let class_of = restriction_classes(game, profile, &levels, i);
        for level in &levels {
            if level.len() < 2 {
                continue;
            }
            let ids: Vec<u32> = level.iter().map(|h| class_of[h]).collect();
            if ids.iter().all(|&c| c == ids[0]) {
                continue;
            }
            // Canonically first cross-class pair with unequal payoffs.
            let mut found = None;
            'outer: for (a, ha) in level.iter().enumerate() {
                for (b, hb) in level.iter().enumerate().skip(a + 1) {
                    if ids[a] != ids[b] && values[ha][i] != values[hb][i] {
                        found = Some((ha, hb));
                        break 'outer;
                    }
                }
            }
            if let Some((ha, hb)) = found {
                witnesses.push(Witness {
                    kind: WitnessKind::CredibilityFailure,
                    player: game.players()[i].clone(),
                    site: ha.render(game),
                    site_other: Some(hb.render(game)),
                    action: None,
                    payoffs: [values[ha][i].clone(), values[hb][i].clone()],
                    detail: format!(
                        "strategy differs across equivalent subgames at time {} with unequal payoffs",
                        ha.time()
                    ),
                });
            }
        }
    }
    Ok(witnesses)
}

/// Credible equilibrium verification: subgame perfection plus the
/// equal-payoff condition over equivalent subgames.
pub fn verify_credible(
    game: &MultiStageGame,
    profile: &BehaviorProfile,
    caps: &Caps,
) -> Result<Verdict, Error> {
    let spne = verify_spne(game, profile, caps)?;
    let cred = condition_ii_witnesses(game, profile, caps)?;
    Ok(spne.merge(Verdict { witnesses: cred }))
}

/// One equilibrium object in the backward set recursion: a pure stage
/// profile plus, below the last stage, a continuation selector mapping
/// every realized pure profile to an object one level deeper.
#[derive(Clone, Debug)]
struct SpneObject {
    profile_idx: usize,
    selector: Vec<usize>,
    value: Vec<Rat>,
}

/// Complete enumeration of pure-action SPNE behavior tables by backward
/// set recursion: at the last stage the objects are the stage's pure Nash
/// profiles; one level up, an object pairs a stage profile with a
/// continuation selector such that the profile is a pure Nash equilibrium
/// of the selector-augmented stage game.
pub fn enumerate_pure_spne(game: &MultiStageGame, caps: &Caps) -> Result<EquilibriumSet, Error> {
    let t_max = game.horizon_len().ok_or(Error::UnsupportedHorizon)?;
    let n = game.num_players();
    let mut truncated = false;
    let mut levels_objs: Vec<Vec<SpneObject>> = vec![Vec::new(); t_max];

    for t in (1..=t_max).rev() {
        let stage = game.stage(t).expect("within horizon");
        let profile_count = stage.profile_count();
        if profile_count > caps.stage_profiles {
            return Err(Error::CapExceeded {
                what: "stage pure profiles",
                needed: profile_count as u128,
                cap: caps.stage_profiles as u128,
            });
        }
        let profiles: Vec<PureProfile> = stage.profiles().collect();
        let mut objs = Vec::new();
        if t == t_max {
            for p in nash::enumerate_pure_nash(stage, caps)? {
                objs.push(SpneObject {
                    profile_idx: stage.profile_index(&p),
                    selector: Vec::new(),
                    value: stage.payoff(&p).to_vec(),
                });
            }
        } else {
            let next_count = levels_objs[t].len();
            if next_count == 0 {
                // No continuation equilibria (only possible after
                // truncation); nothing can be built on top.
                levels_objs[t - 1] = objs;
                continue;
            }
            let selector_total = (next_count as u128).checked_pow(profile_count as u32);
            match selector_total {
                Some(total) if total <= caps.equilibria as u128 => {}
                _ => {
                    return Err(Error::CapExceeded {
                        what: "continuation selectors",
                        needed: selector_total.unwrap_or(u128::MAX),
                        cap: caps.equilibria as u128,
                    })
                }
            }
            let mut selector = vec![0usize; profile_count];
            'selectors: loop {
                // Augmented payoffs: current stage plus the discounted
                // value of the selected continuation after each profile.
                let aug: Vec<Vec<Rat>> = (0..profile_count)
                    .map(|b| {
                        let cont = &levels_objs[t][selector[b]].value;
                        stage
                            .payoff_by_index(b)
                            .iter()
                            .zip(cont)
                            .map(|(u, v)| u + game.delta() * v)
                            .collect()
                    })
                    .collect();
                'candidates: for (b, p) in profiles.iter().enumerate() {
                    for i in 0..n {
                        let here = &aug[b][i];
                        let mut alt = p.clone();
                        for a in 0..stage.actions(i).len() {
                            if a == p[i] {
                                continue;
                            }
                            alt[i] = a;
                            if &aug[stage.profile_index(&alt)][i] > here {
                                continue 'candidates;
                            }
                        }
                    }
                    if objs.len() >= caps.equilibria {
                        truncated = true;
                        break 'selectors;
                    }
                    objs.push(SpneObject {
                        profile_idx: b,
                        selector: selector.clone(),
                        value: aug[b].clone(),
                    });
                }
                // Odometer over selectors.
                let mut pos = profile_count;
                loop {
                    if pos == 0 {
                        break 'selectors;
                    }
                    pos -= 1;
                    selector[pos] += 1;
                    if selector[pos] < next_count {
                        break;
                    }
                    selector[pos] = 0;
                }
            }
        }
        levels_objs[t - 1] = objs;
    }

    let mut profiles = Vec::with_capacity(levels_objs[0].len());
    for root in &levels_objs[0] {
        profiles.push(materialize(game, &levels_objs, root, caps)?);
    }
    profiles.sort();
    Ok(EquilibriumSet {
        profiles,
        truncated,
        cap: caps.equilibria,
    })
}

fn materialize(
    game: &MultiStageGame,
    levels_objs: &[Vec<SpneObject>],
    root: &SpneObject,
    caps: &Caps,
) -> Result<BehaviorProfile, Error> {
    let t_max = levels_objs.len();
    fn fill(
        game: &MultiStageGame,
        levels_objs: &[Vec<SpneObject>],
        obj: &SpneObject,
        h: History,
        t_max: usize,
        map: &mut BTreeMap<History, MixedProfile>,
    ) {
        let t = h.time();
        let stage = game.stage(t).expect("within horizon");
        let profiles: Vec<PureProfile> = stage.profiles().collect();
        map.insert(
            h.clone(),
            MixedProfile::pure(stage, &profiles[obj.profile_idx]),
        );
        if t < t_max {
            for (b, p) in profiles.iter().enumerate() {
                let child = &levels_objs[t][obj.selector[b]];
                fill(game, levels_objs, child, h.child(p.clone()), t_max, map);
            }
        }
    }
    let mut map = BTreeMap::new();
    fill(game, levels_objs, root, History::root(), t_max, &mut map);
    BehaviorProfile::from_map(game, map, caps)
}

/// The SPNE set filtered by the equal-payoff condition over equivalent
/// subgames.
pub fn enumerate_pure_credible(
    game: &MultiStageGame,
    caps: &Caps,
) -> Result<EquilibriumSet, Error> {
    let spne = enumerate_pure_spne(game, caps)?;
    let mut profiles = Vec::new();
    for p in spne.profiles {
        if condition_ii_witnesses(game, &p, caps)?.is_empty() {
            profiles.push(p);
        }
    }
    Ok(EquilibriumSet {
        profiles,
        truncated: spne.truncated,
        cap: spne.cap,
    })
}

/// The existence construction: play one fixed stage Nash equilibrium per
/// stage game, independent of history. The equal-payoff condition is
/// vacuous for the result, and subgame perfection holds stage by stage.
pub fn construct_credible(game: &MultiStageGame, caps: &Caps) -> Result<CredibleProfile, Error> {
    let pick = |time: usize| -> Result<MixedProfile, Error> {
        let stage = game.stage(time).expect("within schedule");
        nash::first_equilibrium(stage, caps).map_err(|e| match e {
            Error::NoStageNashFound { reason, .. } => Error::NoStageNashFound {
                stage_time: time,
                reason,
            },
            other => other,
        })
    };
    match game.horizon_len() {
        Some(t_max) => {
            let per_stage: Vec<MixedProfile> = (1..=t_max).map(pick).collect::<Result<_, _>>()?;
            Ok(CredibleProfile::Table(BehaviorProfile::constant(
                game, &per_stage, caps,
            )?))
        }
        None => {
            let (prefix_len, cycle_len) = match game.horizon() {
                crate::model::Horizon::Infinite { prefix, cycle } => (prefix.len(), cycle.len()),
                crate::model::Horizon::Finite(_) => unreachable!(),
            };
            let prefix: Vec<MixedProfile> =
                (1..=prefix_len).map(&pick).collect::<Result<_, _>>()?;
            let cycle: Vec<MixedProfile> = (prefix_len + 1..=prefix_len + cycle_len)
                .map(&pick)
                .collect::<Result<_, _>>()?;
            Ok(CredibleProfile::Cyclic(CyclicProfile { prefix, cycle }))
        }
    }
}

/// Uniqueness analysis: when every stage game has a certified unique Nash
/// equilibrium, the credible equilibrium is unique and plays those
/// equilibria, for finite and infinite horizons alike.
pub fn analyze_uniqueness(game: &MultiStageGame, caps: &Caps) -> Result<UniquenessReport, Error> {
    // Identical stage games share one census computation.
    let mut cache: Vec<(&StageGame, Uniqueness)> = Vec::new();
    let mut per_position: Vec<MixedProfile> = Vec::new();
    for t in game.schedule_positions() {
        let stage = game.stage(t).expect("within schedule");
        let result = match cache.iter().find(|(g, _)| *g == stage) {
            Some((_, r)) => r.clone(),
            None => {
                let r = nash::has_unique_nash(stage, caps)?;
                cache.push((stage, r.clone()));
                r
            }
        };
        match result {
            Uniqueness::Unique(m) => per_position.push(m),
            Uniqueness::Multiple(first, second) => {
                return Ok(UniquenessReport::NotApplicable {
                    stage_time: t,
                    first,
                    second,
                })
            }
            Uniqueness::Unknown { reason } => {
                return Ok(UniquenessReport::Unknown {
                    stage_time: t,
                    reason,
                })
            }
        }
    }
    let profile = match game.horizon() {
        crate::model::Horizon::Finite(_) => {
            CredibleProfile::Table(BehaviorProfile::constant(game, &per_position, caps)?)
        }
        crate::model::Horizon::Infinite { prefix, .. } => {
            let cycle = per_position.split_off(prefix.len());
            CredibleProfile::Cyclic(CyclicProfile {
                prefix: per_position,
                cycle,
            })
        }
    };
    Ok(UniquenessReport::Unique(profile))
}

#[cfg(test)]
mod tests {
    use super::*;

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

    fn pd() -> StageGame {
        StageGame::two_player(
            ["row", "col"],
            &["C", "D"],
            &["C", "D"],
            &[(r(3), r(3)), (r(0), r(5)), (r(5), r(0)), (r(1), r(1))],
        )
    }

    fn pennies() -> StageGame {
        StageGame::two_player(
            ["row", "col"],
            &["H", "T"],
            &["H", "T"],
            &[(r(1), r(-1)), (r(-1), r(1)), (r(-1), r(1)), (r(1), r(-1))],
        )
    }

    fn twice(g: StageGame) -> MultiStageGame {
        MultiStageGame::finite(Rat::one(), vec![g.clone(), g]).unwrap()
    }

    /// Stage 1: (C,C); after (C,C): (E,E); otherwise (D,D).
    fn p_star(game: &MultiStageGame) -> BehaviorProfile {
        BehaviorProfile::from_fn(game, &Caps::default(), |h| {
            let stage = game.stage(h.time()).unwrap();
            if h.is_root() {
                MixedProfile::pure(stage, &[0, 0])
            } else if h.moves()[0] == vec![0, 0] {
                MixedProfile::pure(stage, &[2, 2])
            } else {
                MixedProfile::pure(stage, &[1, 1])
            }
        })
        .unwrap()
    }

    #[test]
    fn p_star_is_spne() {
        let game = twice(cde());
        let v = verify_spne(&game, &p_star(&game), &Caps::default()).unwrap();
        assert!(v.pass(), "{:?}", v.witnesses);
    }

    #[test]
    fn p_star_is_not_credible() {
        let game = twice(cde());
        let v = verify_credible(&game, &p_star(&game), &Caps::default()).unwrap();
        assert!(!v.pass());
        let w = &v.witnesses[0];
        assert_eq!(w.kind, WitnessKind::CredibilityFailure);
        assert_eq!(w.player, "row");
        assert_eq!(w.site, "[(C,C)]");
        assert_eq!(w.site_other.as_deref(), Some("[(C,D)]"));
        assert_eq!(w.payoffs, [r(3), r(1)]);
    }

    #[test]
    fn repeating_cc_fails_spne_at_stage_two() {
        let game = twice(cde());
        let caps = Caps::default();
        let stage = game.stage(1).unwrap().clone();
        let all_cc =
            BehaviorProfile::from_fn(&game, &caps, |_| MixedProfile::pure(&stage, &[0, 0]))
                .unwrap();
        let v = verify_spne(&game, &all_cc, &caps).unwrap();
        assert!(!v.pass());
        assert!(v.witnesses.iter().any(|w| w.site != "[]"));
    }

    #[test]
    fn single_stage_reduces_to_nash_check() {
        let game = MultiStageGame::finite(Rat::one(), vec![cde()]).unwrap();
        let caps = Caps::default();
        let stage = game.stage(1).unwrap().clone();
        for p in [[0usize, 0], [1, 1], [2, 2]] {
            let m = MixedProfile::pure(&stage, &p);
            let table = BehaviorProfile::from_fn(&game, &caps, |_| m.clone()).unwrap();
            assert_eq!(
                verify_spne(&game, &table, &caps).unwrap().pass(),
                nash::is_nash(&stage, &m).unwrap().pass()
            );
        }
    }

    #[test]
    fn constant_stage_nash_is_credible() {
        let game = twice(cde());
        let caps = Caps::default();
        let stage = game.stage(1).unwrap().clone();
        let table =
            BehaviorProfile::from_fn(&game, &caps, |_| MixedProfile::pure(&stage, &[1, 1]))
                .unwrap();
        assert!(verify_credible(&game, &table, &caps).unwrap().pass());
    }

    #[test]
    fn twice_pd_has_unique_spne() {
        let game = twice(pd());
        let caps = Caps::default();
        let set = enumerate_pure_spne(&game, &caps).unwrap();
        assert_eq!(set.profiles.len(), 1);
        assert!(!set.truncated);
        for (_, m) in set.profiles[0].iter() {
            assert_eq!(m.as_pure(), Some(vec![1, 1]));
        }
        let credible = enumerate_pure_credible(&game, &caps).unwrap();
        assert_eq!(credible.profiles, set.profiles);
    }

    #[test]
    fn twice_cde_spne_census() {
        let game = twice(cde());
        let caps = Caps::default();
        let set = enumerate_pure_spne(&game, &caps).unwrap();
        assert!(!set.truncated);
        let pstar = p_star(&game);
        assert!(set.profiles.contains(&pstar));
        let stage = game.stage(1).unwrap().clone();
        for target in [[1usize, 1], [2, 2]] {
            let constant = BehaviorProfile::from_fn(&game, &caps, |_| {
                MixedProfile::pure(&stage, &target)
            })
            .unwrap();
            assert!(set.profiles.contains(&constant));
        }
        for p in &set.profiles {
            assert!(verify_spne(&game, p, &caps).unwrap().pass());
        }

        let credible = enumerate_pure_credible(&game, &caps).unwrap();
        assert!(!credible.profiles.contains(&pstar));
        for target in [[1usize, 1], [2, 2]] {
            let constant = BehaviorProfile::from_fn(&game, &caps, |_| {
                MixedProfile::pure(&stage, &target)
            })
            .unwrap();
            assert!(credible.profiles.contains(&constant));
        }
        for p in &credible.profiles {
            assert!(set.profiles.contains(p));
            assert!(verify_credible(&game, p, &caps).unwrap().pass());
        }
    }

    #[test]
    fn construct_picks_canonical_stage_nash() {
        let game = twice(cde());
        let caps = Caps::default();
        match construct_credible(&game, &caps).unwrap() {
            CredibleProfile::Table(t) => {
                for (_, m) in t.iter() {
                    assert_eq!(m.as_pure(), Some(vec![1, 1]));
                }
                assert!(verify_credible(&game, &t, &caps).unwrap().pass());
            }
            CredibleProfile::Cyclic(_) => panic!("finite game"),
        }
    }

    #[test]
    fn construct_on_infinite_pd_is_always_defect() {
        let game = MultiStageGame::infinite(Rat::frac(9, 10), vec![], vec![pd()]).unwrap();
        match construct_credible(&game, &Caps::default()).unwrap() {
            CredibleProfile::Cyclic(c) => {
                assert!(c.prefix.is_empty());
                assert_eq!(c.cycle.len(), 1);
                assert_eq!(c.cycle[0].as_pure(), Some(vec![1, 1]));
            }
            CredibleProfile::Table(_) => panic!("infinite game"),
        }
    }

    #[test]
    fn construct_handles_mixed_only_stages() {
        let game = twice(pennies());
        let caps = Caps::default();
        match construct_credible(&game, &caps).unwrap() {
            CredibleProfile::Table(t) => {
                let half = Rat::frac(1, 2);
                for (_, m) in t.iter() {
                    assert!(m.as_pure().is_none());
                    assert_eq!(m.weight(0, 0), &half);
                }
                assert!(verify_credible(&game, &t, &caps).unwrap().pass());
            }
            CredibleProfile::Cyclic(_) => panic!("finite game"),
        }
    }

    #[test]
    fn uniqueness_of_infinite_pd() {
        let game = MultiStageGame::infinite(Rat::frac(9, 10), vec![], vec![pd()]).unwrap();
        match analyze_uniqueness(&game, &Caps::default()).unwrap() {
            UniquenessReport::Unique(CredibleProfile::Cyclic(c)) => {
                assert_eq!(c.cycle[0].as_pure(), Some(vec![1, 1]));
            }
            other => panic!("expected Unique, got {other:?}"),
        }
    }

    #[test]
    fn uniqueness_not_applicable_for_cde() {
        let game = twice(cde());
        match analyze_uniqueness(&game, &Caps::default()).unwrap() {
            UniquenessReport::NotApplicable {
                stage_time,
                first,
                second,
            } => {
                assert_eq!(stage_time, 1);
                assert_eq!(first.as_pure(), Some(vec![1, 1]));
                assert_eq!(second.as_pure(), Some(vec![2, 2]));
            }
            other => panic!("expected NotApplicable, got {other:?}"),
        }
    }

    #[test]
    fn uniqueness_of_repeated_pennies() {
        let game = MultiStageGame::infinite(Rat::frac(1, 2), vec![], vec![pennies()]).unwrap();
        match analyze_uniqueness(&game, &Caps::default()).unwrap() {
            UniquenessReport::Unique(CredibleProfile::Cyclic(c)) => {
                assert_eq!(c.cycle[0].weight(0, 0), &Rat::frac(1, 2));
            }
            other => panic!("expected Unique, got {other:?}"),
        }
    }

    #[test]
    fn enumeration_rejects_infinite_horizon() {
        let game = MultiStageGame::infinite(Rat::frac(1, 2), vec![], vec![pd()]).unwrap();
        assert!(matches!(
            enumerate_pure_spne(&game, &Caps::default()),
            Err(Error::UnsupportedHorizon)
        ));
    }

    #[test]
    fn selector_cap_is_hard() {
        let game = twice(cde());
        let caps = Caps {
            equilibria: 100,
            ..Caps::default()
        };
        // 2 continuation objects over 9 profiles = 512 selectors > 100.
        assert!(matches!(
            enumerate_pure_spne(&game, &caps),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn t1_enumeration_matches_stage_nash() {
        let game = MultiStageGame::finite(Rat::one(), vec![cde()]).unwrap();
        let caps = Caps::default();
        let set = enumerate_pure_spne(&game, &caps).unwrap();
        let stage = game.stage(1).unwrap().clone();
        let expected: Vec<BehaviorProfile> = nash::enumerate_pure_nash(&stage, &caps)
            .unwrap()
            .into_iter()
            .map(|p| {
                BehaviorProfile::from_fn(&game, &caps, |_| MixedProfile::pure(&stage, &p)).unwrap()
            })
            .collect();
        assert_eq!(set.profiles.len(), expected.len());
        for e in &expected {
            assert!(set.profiles.contains(e));
        }
    }
}
