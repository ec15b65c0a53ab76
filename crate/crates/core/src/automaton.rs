//! Infinitely repeated games with finite-automaton (Moore machine)
//! strategies: exact discounted values by linear solve, subgame perfection
//! by one-shot deviations over jointly reachable states, and the
//! credibility condition over time-indexed reachable state sets.

use std::collections::HashMap;

use crate::error::{Caps, Error};
use crate::linalg::{solve_square, Solve};
use crate::model::StageGame;
use crate::rat::Rat;
use crate::verdict::{Verdict, Witness, WitnessKind};
