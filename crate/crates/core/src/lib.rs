//! Equilibrium analysis for multi-stage games with an emphasis on
//! credibility: a refinement of subgame perfection under which a player
//! whose strategy differs across equivalent subgames must receive the same
//! payoff in both.
//!
//! Everything is exact: payoffs, probabilities, and discount factors are
//! arbitrary-precision rationals, and every verdict is decided by exact
//! comparison.
//!
//! The crate covers four settings:
//! - stage games: Nash census by pure enumeration and, for two players,
//!   support enumeration ([`nash`]);
//! - finite-horizon multi-stage games: verification, enumeration, and
//!   construction of subgame perfect and credible equilibria ([`finite`]);
//! - infinitely repeated games with finite-automaton strategies
//!   ([`automaton`]);
//! - perfect-information game trees ([`tree`]).

pub mod automaton;
pub mod error;
pub mod finite;
pub mod format;
pub mod linalg;
pub mod model;
pub mod nash;
pub mod rat;
pub mod report;
pub mod selftest;
pub mod tree;
pub mod verdict;

pub use error::{Caps, Error};
pub use rat::Rat;
pub use verdict::{Verdict, Witness, WitnessKind};
