//! Translating a checker game into a puzzle.
//!
//! The puzzle is built one row of triangles at a time; row m records the pass
//! of the game in which the black checker of column m descends.  The link is
//! a boundary invariant: after that pass, the lower boundary of the partial
//! puzzle (the bottom of row m, with "teeth" where a piece dips into row m+1)
//! spells out the white checker configuration.  Reading the boundary path
//! left to right,
//!
//! * the edges other than tooth-descents (remaining NW edges, horizontals,
//!   tooth ascents, in that order) correspond to board rows 1..n, and carry
//!   label 1 exactly when that row holds a white checker;
//! * the edges other than tooth-ascents (horizontals, tooth descents,
//!   remaining NE edges) correspond to board columns 1..n, and carry label 1
//!   exactly when that column holds a white checker.
//!
//! A horizontal edge is read in both lists, so position i of row m's bottom
//! line is: label 1 if row n-m+i and column i both hold whites, label 0 if
//! neither does, and a tooth if the row does but the column does not (the
//! fourth combination cannot occur).  Teeth demand a vertical rhombus — or,
//! when the descent into the dip starts one cell later than a vertical
//! rhombus allows, the K-piece, which is exactly the sub-swap move.  Given
//! its top edges and this bottom line, the filling of the row is forced one
//! cell at a time, so the whole puzzle is determined; any contradiction
//! along the way surfaces as a `TranslationGap`.

use crate::board::{initial_white, InitialWhite, Square, SubsetK, WhiteConfig};
use crate::error::{Error, Result};
use crate::game::GameOutcome;
use crate::puzzles::{board_to_puzzle, subset_to_boundary, Board, PieceKind, Puzzle};

/// The bottom-line demand at one position of a row.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Demand {
    Flat(u8),
    Tooth,
}

fn gap(msg: impl Into<String>) -> Error {
    Error::TranslationGap(msg.into())
}

/// Bottom-line demands for row m, read off a white configuration: position i
/// pairs row n-m+i with column i.
fn row_demands(whites: &WhiteConfig, n: usize, m: usize) -> Result<Vec<Demand>> {
    let in_row = |r: usize| whites.iter().any(|w| w.row == r);
    let in_col = |c: usize| whites.iter().any(|w| w.col == c);
    (1..=m)
        .map(|i| match (in_row(n - m + i), in_col(i)) {
            (true, true) => Ok(Demand::Flat(1)),
            (false, false) => Ok(Demand::Flat(0)),
            (true, false) => Ok(Demand::Tooth),
            (false, true) => Err(gap(format!(
                "row {} position {}: white in column {} but none in row {}",
                m,
                i,
                i,
                n - m + i
            ))),
        })
        .collect()
}

/// Check the parts of the white configuration that the fixed boundary
/// strings are supposed to pin down at this stage.
fn check_fixed_boundary(
    whites: &WhiteConfig,
    alpha: &[u8],
    beta: &[u8],
    n: usize,
    m: usize,
) -> Result<()> {
    for r in 1..=(n - m) {
        let has = whites.iter().any(|w| w.row == r);
        if has != (alpha[r - 1] == 1) {
            return Err(gap(format!(
                "after the pass for row {}, white presence in row {} disagrees with the NW string",
                m, r
            )));
        }
    }
    for c in (m + 1)..=n {
        let has = whites.iter().any(|w| w.col == c);
        if has != (beta[c - 1] == 1) {
            return Err(gap(format!(
                "after the pass for row {}, white presence in column {} disagrees with the NE string",
                m, c
            )));
        }
    }
    Ok(())
}

/// Fill puzzle row m so that its bottom line meets `demands`.  Every piece is
/// forced by the labels already present and the demand at hand.
fn fill_row(board: &mut Board, m: usize, demands: &[Demand]) -> Result<()> {
    let n = board.n;
    for i in 1..=m {
        if !board.up_filled[m - 1][i - 1] {
            let l = board.l[m - 1][i - 1]
                .ok_or_else(|| gap(format!("row {} cell {}: left edge unknown", m, i)))?;
            let kind = match (demands[i - 1], l) {
                (Demand::Tooth, 1) if m < n => PieceKind::RhombusV,
                (Demand::Tooth, _) => {
                    return Err(gap(format!(
                        "row {} cell {}: tooth demanded but left edge is {}",
                        m, i, l
                    )))
                }
                (Demand::Flat(1), 1) => PieceKind::Up1,
                (Demand::Flat(1), 0) if i < m => PieceKind::RhombusA,
                (Demand::Flat(0), 0) => PieceKind::Up0,
                (d, l) => {
                    return Err(gap(format!(
                        "row {} cell {}: no piece fits demand {:?} with left edge {}",
                        m, i, d, l
                    )))
                }
            };
            if !board.place(kind, m, i) {
                return Err(gap(format!(
                    "row {} cell {}: {:?} contradicts existing labels",
                    m, i, kind
                )));
            }
        }
        // The down cell right of position i.
        if i < m && !board.down_filled[m - 1][i - 1] {
            let t = board.h[m - 2][i - 1]
                .ok_or_else(|| gap(format!("row {} down cell {}: top edge unknown", m, i)))?;
            let l = board.r[m - 1][i - 1]
                .ok_or_else(|| gap(format!("row {} down cell {}: left edge unknown", m, i)))?;
            let kind = match (t, l) {
                (0, 0) => PieceKind::Down0,
                (1, 1) => PieceKind::Down1,
                (0, 1) => {
                    // A dip one position further right is the K-piece's
                    // signature; a flat 0 there means the plain rhombus.
                    match demands[i] {
                        Demand::Tooth if i + 1 < m && m < n => PieceKind::KPiece,
                        Demand::Flat(0) => PieceKind::RhombusB,
                        d => {
                            return Err(gap(format!(
                                "row {} down cell {}: labels (0,1) incompatible with demand {:?}",
                                m, i, d
                            )))
                        }
                    }
                }
                (t, l) => {
                    return Err(gap(format!(
                        "row {} down cell {}: no piece fits top {} left {}",
                        m, i, t, l
                    )))
                }
            };
            if !board.place(kind, m, i) {
                return Err(gap(format!(
                    "row {} down cell {}: {:?} contradicts existing labels",
                    m, i, kind
                )));
            }
        }
    }
    // The bottom line must now agree with the demands everywhere, including
    // under cells that were pre-filled by teeth of the previous row.
    for i in 1..=m {
        let dipped = m < n && board.down_filled[m][i - 1];
        match demands[i - 1] {
            Demand::Tooth => {
                if !dipped {
                    return Err(gap(format!(
                        "row {} position {}: tooth demanded but absent",
                        m, i
                    )));
                }
            }
            Demand::Flat(v) => {
                if dipped || board.h[m - 1][i - 1] != Some(v) {
                    return Err(gap(format!(
                        "row {} position {}: bottom label disagrees with the game state",
                        m, i
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Translate one finished game into a puzzle with NW side `a`, NE side `b`
/// and bottom spelling the game's final subset.
pub fn game_to_puzzle(a: &SubsetK, b: &SubsetK, n: usize, outcome: &GameOutcome) -> Result<Puzzle> {
    let alpha = subset_to_boundary(a, n);
    let beta = subset_to_boundary(b, n);
    let InitialWhite::Config(start) = initial_white(a, b, n)? else {
        return Err(gap("inputs admit no game".to_string()));
    };

    // White configuration after each pass; row m is governed by the state
    // after pass m-1 (row 1 by the starting position).  A pass ends with the
    // letter n-1.
    let mut configs = vec![start];
    for rec in &outcome.trace {
        if rec.letter == n - 1 {
            let squares = rec
                .white_after
                .iter()
                .map(|&(r, c)| Square::new(r, c))
                .collect();
            configs.push(WhiteConfig::new(squares)?);
        }
    }
    if configs.len() != n.max(1) {
        return Err(gap(format!(
            "expected {} pass boundaries in the trace, found {}",
            n.max(1) - 1,
            configs.len() - 1
        )));
    }

    let mut board = Board::new(n, &alpha, &beta, None);
    for m in 1..=n {
        let whites = &configs[m - 1];
        check_fixed_boundary(whites, &alpha, &beta, n, m)?;
        let demands = row_demands(whites, n, m)?;
        fill_row(&mut board, m, &demands)?;
    }
    let puzzle = board_to_puzzle(&board);
    if puzzle.sign() != outcome.sign {
        return Err(gap(format!(
            "sign mismatch: {} K-pieces against game sign {}",
            puzzle.k_piece_count(),
            outcome.sign
        )));
    }
    if puzzle.gamma_subset() != outcome.subset {
        return Err(gap(
            "bottom boundary disagrees with the game's final subset",
        ));
    }
    Ok(puzzle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{play_all_games, Mode};
    use crate::puzzles::{enumerate_puzzles, PuzzleMode};
    use std::collections::BTreeSet;

    fn subset(v: &[usize]) -> SubsetK {
        SubsetK::new(v.to_vec()).unwrap()
    }

    #[test]
    fn g24_games_translate_onto_the_puzzles() {
        let a = subset(&[2, 4]);
        let games = play_all_games(&a, &a, 4, Mode::Cohomology).unwrap();
        let translated: BTreeSet<Puzzle> = games
            .iter()
            .map(|g| game_to_puzzle(&a, &a, 4, g).unwrap())
            .collect();
        assert_eq!(
            translated.len(),
            games.len(),
            "translation must be injective"
        );
        let all: BTreeSet<Puzzle> = enumerate_puzzles(&a, &a, None, 4, PuzzleMode::Cohomology)
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(translated, all);
    }

    #[test]
    fn g24_k_theory_games_translate_onto_the_k_puzzles() {
        let a = subset(&[2, 4]);
        let games = play_all_games(&a, &a, 4, Mode::KTheory).unwrap();
        let translated: BTreeSet<Puzzle> = games
            .iter()
            .map(|g| game_to_puzzle(&a, &a, 4, g).unwrap())
            .collect();
        assert_eq!(translated.len(), games.len());
        let all: BTreeSet<Puzzle> = enumerate_puzzles(&a, &a, None, 4, PuzzleMode::KTheory)
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(translated, all);
        assert_eq!(
            translated.iter().filter(|p| p.k_piece_count() > 0).count(),
            1
        );
    }
}
