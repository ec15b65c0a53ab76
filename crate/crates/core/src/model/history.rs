use std::cmp::Ordering;
use std::fmt;

use crate::model::{MultiStageGame, PureProfile};

/// A play history: the pure action profiles realized before the current
/// time. `time()` is always `moves.len() + 1`, so the invariant linking
/// the two cannot be violated.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct History {
    moves: Vec<PureProfile>,
}

impl History {
    /// The empty history at time 1.
    pub fn root() -> Self {
        History { moves: Vec::new() }
    }

    pub fn new(moves: Vec<PureProfile>) -> Self {
        History { moves }
    }

    /// 1-based time index of the stage this history points at.
    pub fn time(&self) -> usize {
        self.moves.len() + 1
    }

    pub fn moves(&self) -> &[PureProfile] {
        &self.moves
    }

    pub fn is_root(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn child(&self, profile: PureProfile) -> Self {
        let mut moves = self.moves.clone();
        moves.push(profile);
        History { moves }
    }

    /// Render with the game's action labels, e.g. `[(C,C) (D,E)]`.
    pub fn render(&self, game: &MultiStageGame) -> String {
        let parts: Vec<String> = self
            .moves
            .iter()
            .enumerate()
            .map(|(t, p)| match game.stage(t + 1) {
                Some(stage) => stage.profile_label(p),
                None => format!("{p:?}"),
            })
            .collect();
        format!("[{}]", parts.join(" "))
    }
}

/// Canonical order: by time first, then lexicographically by moves.
impl Ord for History {
    fn cmp(&self, other: &Self) -> Ordering {
        self.moves
            .len()
            .cmp(&other.moves.len())
            .then_with(|| self.moves.cmp(&other.moves))
    }
}

impl PartialOrd for History {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for History {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .moves
            .iter()
            .map(|p| {
                let items: Vec<String> = p.iter().map(usize::to_string).collect();
                format!("({})", items.join(","))
            })
            .collect();
        write!(f, "[{}]", parts.join(" "))
    }
}
