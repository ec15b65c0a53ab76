use serde::Serialize;

use crate::rat::Rat;

/// What a witness demonstrates.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    /// Some player has a profitable unilateral deviation.
    NashFailure,
    /// A player's strategy differs across two equivalent subgames whose
    /// payoffs for that player differ.
    CredibilityFailure,
}

/// A machine-checkable counterexample. `payoffs` is `(achieved, deviation)`
/// for Nash failures and `(u_i(g), u_i(g'))` for credibility failures;
/// `site` names the history, joint state, or subtree root involved, with
/// `site_other` carrying the second member of a pair.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Witness {
    pub kind: WitnessKind,
    pub player: String,
    pub site: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub site_other: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub action: Option<String>,
    pub payoffs: [Rat; 2],
    pub detail: String,
}

/// Structured pass/fail. Passing verdicts carry no witnesses; failing ones
/// carry enough to recompute every violation by hand.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct Verdict {
    pub witnesses: Vec<Witness>,
}

impl Verdict {
    pub fn passing() -> Self {
        Verdict::default()
    }

    pub fn pass(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn merge(mut self, other: Verdict) -> Verdict {
        self.witnesses.extend(other.witnesses);
        self
    }
}
