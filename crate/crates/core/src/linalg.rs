//! Exact solving of square rational linear systems.
//!
//! Uses fraction-free (Bareiss) Gaussian elimination: rows are first scaled
//! to integers, and every intermediate entry stays an exactly-divisible
//! integer, so coefficient growth is polynomial instead of exponential.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rat::Rat;

/// Outcome of a square solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solve {
    /// One solution per right-hand-side column.
    Unique(Vec<Vec<Rat>>),
    /// Coefficient matrix is rank-deficient (system underdetermined or
    /// inconsistent; callers that need the distinction must not).
    Singular,
}

/// Solve `a · x = b_k` for every column `b_k` of `rhs` at once.
///
/// `a` is `n × n` in row-major order, each rhs column has length `n`.
pub fn solve_square(a: &[Vec<Rat>], rhs: &[Vec<Rat>]) -> Solve {
    let n = a.len();
    debug_assert!(a.iter().all(|row| row.len() == n));
    debug_assert!(rhs.iter().all(|col| col.len() == n));
    let m = rhs.len();
    if n == 0 {
        return Solve::Unique(vec![Vec::new(); m]);
    }

    // Augmented integer matrix: clear denominators row by row.
    let width = n + m;
    let mut t: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut lcm = BigInt::one();
        for x in a[i].iter().chain(rhs.iter().map(|col| &col[i])) {
            lcm = lcm.lcm(x.denom());
        }
        let mut row = Vec::with_capacity(width);
        for x in a[i].iter().chain(rhs.iter().map(|col| &col[i])) {
            row.push(x.numer() * (&lcm / x.denom()));
        }
        t.push(row);
    }

    // Bareiss elimination with row pivoting on the first nonzero entry.
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !t[i][k].is_zero()) else {
            return Solve::Singular;
        };
        t.swap(k, p);
        for i in k + 1..n {
            for j in k + 1..width {
                let num = &t[i][j] * &t[k][k] - &t[i][k] * &t[k][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                t[i][j] = q;
            }
            t[i][k] = BigInt::zero();
        }
        prev = t[k][k].clone();
    }

    // Back substitution over rationals.
    let mut solutions = vec![vec![Rat::zero(); n]; m];
    for (c, solution) in solutions.iter_mut().enumerate() {
        for i in (0..n).rev() {
            let mut acc = Rat::from_big(t[i][n + c].clone(), BigInt::one());
            for j in i + 1..n {
                acc -= Rat::from_big(t[i][j].clone(), BigInt::one()) * &solution[j];
            }
            solution[i] = acc / Rat::from_big(t[i][i].clone(), BigInt::one());
        }
    }
    Solve::Unique(solutions)
}
