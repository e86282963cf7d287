//! The fixed order in which the black checkers degenerate.
//!
//! The moves are elementary transpositions e_i (swap the occupants of rows i
//! and i+1).  The full schedule for board size n is n-1 passes; pass j plays
//! e_{n-j}, ..., e_{n-1}, carrying one black checker from row n-j to the
//! bottom row while everything it passes bumps up one row.  The whole
//! schedule has n(n-1)/2 moves and takes the antidiagonal configuration to
//! the diagonal one.

use crate::board::{BlackConfig, Square};
use crate::error::{Error, Result};

/// One black move: the descending checker (row i, moving down) and the rising
/// checker (row i+1, strictly further left, moving up).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlackMove {
    pub letter: usize,
    pub n: usize,
    pub descending: Square,
    pub rising: Square,
}

impl BlackMove {
    /// Squares of the critical row: the descending checker's row, from its
    /// column rightwards.
    pub fn in_critical_row(&self, sq: Square) -> bool {
        sq.row == self.descending.row && sq.col >= self.descending.col
    }

    /// Squares of the critical diagonal: down-right from the rising checker's
    /// own square.
    pub fn in_critical_diagonal(&self, sq: Square) -> bool {
        sq.row >= self.rising.row
            && sq.col >= self.rising.col
            && sq.row - self.rising.row == sq.col - self.rising.col
    }
}

/// The move schedule together with every intermediate black configuration
/// (`black_states[s]` is the position before move `s`).
#[derive(Clone, Debug)]
pub struct SpecializationOrder {
    pub n: usize,
    pub letters: Vec<usize>,
    pub black_states: Vec<BlackConfig>,
}

impl SpecializationOrder {
    pub fn moves(&self) -> usize {
        self.letters.len()
    }
}

pub fn specialization_sequence(n: usize) -> SpecializationOrder {
    let mut letters = vec![];
    for j in 1..n {
        for i in (n - j)..n {
            letters.push(i);
        }
    }
    let mut black_states = vec![BlackConfig::initial(n)];
    for &letter in &letters {
        let next = apply_black_move(black_states.last().unwrap(), letter);
        black_states.push(next);
    }
    debug_assert_eq!(black_states.last().unwrap(), &BlackConfig::terminal(n));
    SpecializationOrder {
        n,
        letters,
        black_states,
    }
}

/// Identify the descending and rising checkers for letter e_i, checking that
/// the configuration actually admits the move (the row-i checker must be
/// strictly right of the row-(i+1) checker).
pub fn describe_move(black: &BlackConfig, letter: usize) -> Result<BlackMove> {
    let n = black.n();
    if letter < 1 || letter >= n {
        return Err(Error::NotInSpecializationOrder {
            letter,
            msg: format!("letter must lie in 1..={}", n - 1),
        });
    }
    let desc_col = black.col_of_row(letter);
    let rise_col = black.col_of_row(letter + 1);
    if rise_col >= desc_col {
        return Err(Error::NotInSpecializationOrder {
            letter,
            msg: format!(
                "rising checker (column {rise_col}) must be strictly left of the descending one (column {desc_col})"
            ),
        });
    }
    Ok(BlackMove {
        letter,
        n,
        descending: Square::new(letter, desc_col),
        rising: Square::new(letter + 1, rise_col),
    })
}

/// Swap the occupants of rows `letter` and `letter + 1`.
pub fn apply_black_move(black: &BlackConfig, letter: usize) -> BlackConfig {
    let n = black.n();
    let rows: Vec<usize> = (1..=n)
        .map(|c| {
            let r = black.row_of_col(c);
            if r == letter {
                letter + 1
            } else if r == letter + 1 {
                letter
            } else {
                r
            }
        })
        .collect();
    BlackConfig::new(rows).expect("swapping two rows preserves the permutation property")
}
