//! White checker responses to a black move: the phase-1 decision table and
//! the phase-2 relocation of unhappy checkers.

use crate::board::{is_happy, BlackConfig, Square, WhiteConfig};
use crate::error::{Error, Result};
use crate::specialization::BlackMove;

/// What phase 1 allows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Phase1Kind {
    /// No choice: the whites keep their squares (phase 2 may still slide them).
    StayOnly,
    /// No choice: the distinguished pair swaps rows.
    SwapOnly,
    /// Both branches are games; in the K-theory variant a third (sub-swap)
    /// branch opens here as well.
    StayOrSwap,
}

/// Outcome of the phase-1 table for one black move.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Phase1Decision {
    pub kind: Phase1Kind,
    /// Index (into the column-sorted white list) of the white checker in the
    /// critical row, if any.
    pub critical_row_white: Option<usize>,
    /// Index of the highest white checker on the critical diagonal, if any.
    pub top_diagonal_white: Option<usize>,
    /// True exactly when the top diagonal white sits on the rising checker's
    /// square and the critical row holds no white checker; such a stay move
    /// lifts that checker one row and is the tableau-recording event.
    pub dagger: bool,
}

/// A white checker strictly inside the rectangle spanned by the critical-row
/// white `w1` and the diagonal white `w2` blocks their swap.
pub fn has_blocker(white: &WhiteConfig, w1: Square, w2: Square) -> bool {
    let (rlo, rhi) = (w1.row.min(w2.row), w1.row.max(w2.row));
    let (clo, chi) = (w1.col.min(w2.col), w1.col.max(w2.col));
    white
        .iter()
        .any(|s| s.row > rlo && s.row < rhi && s.col > clo && s.col < chi)
}

/// The decision table.  Rows: where the top critical-diagonal white sits
/// (rising checker's square / elsewhere on the diagonal / absent).  Columns:
/// where the critical-row white sits (descending checker's square / elsewhere
/// in the row / absent).
pub fn phase1_decision(white: &WhiteConfig, mv: &BlackMove) -> Phase1Decision {
    let critical_row_white = white.checkers().iter().position(|&s| mv.in_critical_row(s));
    let top_diagonal_white = white
        .checkers()
        .iter()
        .enumerate()
        .filter(|(_, s)| mv.in_critical_diagonal(**s))
        .min_by_key(|(_, s)| s.row)
        .map(|(i, _)| i);

    let mut dagger = false;
    let kind = match top_diagonal_white {
        None => Phase1Kind::StayOnly,
        Some(td) => {
            let on_rising = white.checkers()[td] == mv.rising;
            match critical_row_white {
                None => {
                    dagger = on_rising;
                    Phase1Kind::StayOnly
                }
                Some(cr) => {
                    let cr_sq = white.checkers()[cr];
                    if on_rising || cr_sq == mv.descending {
                        Phase1Kind::SwapOnly
                    } else if has_blocker(white, cr_sq, white.checkers()[td]) {
                        Phase1Kind::StayOnly
                    } else {
                        Phase1Kind::StayOrSwap
                    }
                }
            }
        }
    };

    Phase1Decision {
        kind,
        critical_row_white,
        top_diagonal_white,
        dagger,
    }
}

/// A branch actually taken.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum WhiteAction {
    Stay,
    Swap,
    SubSwap,
}

/// Result of a white phase: the new configuration plus, for each old checker
/// index, its index in the new (column-sorted) configuration.
pub type WhiteStep = (WhiteConfig, Vec<usize>);

fn rebuild(list: Vec<(Square, usize)>) -> Result<WhiteStep> {
    let mut list = list;
    list.sort_by_key(|(s, _)| s.col);
    let config = WhiteConfig::new(list.iter().map(|(s, _)| *s).collect())?;
    let mut perm = vec![0; list.len()];
    for (new_idx, (_, old_idx)) in list.iter().enumerate() {
        perm[*old_idx] = new_idx;
    }
    Ok((config, perm))
}

/// Swap the rows of the critical-row white and the diagonal white.
pub fn apply_swap(white: &WhiteConfig, cr: usize, td: usize) -> Result<WhiteStep> {
    let mut list: Vec<(Square, usize)> = white.iter().zip(0..).collect();
    let (r1, r2) = (list[cr].0.row, list[td].0.row);
    list[cr].0.row = r2;
    list[td].0.row = r1;
    rebuild(list)
}

/// K-theory branch: like the swap, but the critical-row checker stops one row
/// short.  With the diagonal white at (r1, c1) and the row white at (r2, c2),
/// r1 > r2 and c1 < c2, the pair moves to (r2, c1) and (r1 - 1, c2).
pub fn apply_subswap(white: &WhiteConfig, cr: usize, td: usize) -> Result<WhiteStep> {
    let mut list: Vec<(Square, usize)> = white.iter().zip(0..).collect();
    let (r1, r2) = (list[td].0.row, list[cr].0.row);
    debug_assert!(r1 > r2 && list[td].0.col < list[cr].0.col);
    list[td].0.row = r2;
    list[cr].0.row = r1 - 1;
    rebuild(list)
}

/// Slide every unhappy white checker to its nearest happy square, purely left
/// or purely up.  Exactly one of the two directions must offer a happy
/// square; anything else is a `UniquenessViolation`.
///
/// Happiness depends only on the black configuration, so the checkers can be
/// processed in any order; we process by increasing row (and in debug builds
/// confirm that decreasing row gives the same answer).
pub fn apply_phase2(white: &WhiteConfig, black_after: &BlackConfig) -> Result<WhiteStep> {
    let result = phase2_in_order(white, black_after, false)?;
    #[cfg(debug_assertions)]
    {
        let reversed = phase2_in_order(white, black_after, true)?;
        debug_assert_eq!(result.0, reversed.0, "phase 2 must be order-independent");
    }
    Ok(result)
}

fn phase2_in_order(
    white: &WhiteConfig,
    black_after: &BlackConfig,
    reverse: bool,
) -> Result<WhiteStep> {
    let mut list: Vec<(Square, usize)> = white.iter().zip(0..).collect();
    let mut order: Vec<usize> = (0..list.len()).collect();
    order.sort_by_key(|&i| list[i].0.row);
    if reverse {
        order.reverse();
    }
    for i in order {
        let sq = list[i].0;
        if is_happy(sq, black_after) {
            continue;
        }
        let up = (1..sq.row)
            .rev()
            .map(|r| Square::new(r, sq.col))
            .find(|&s| is_happy(s, black_after));
        let left = (1..sq.col)
            .rev()
            .map(|c| Square::new(sq.row, c))
            .find(|&s| is_happy(s, black_after));
        let target = match (up, left) {
            (Some(t), None) | (None, Some(t)) => t,
            (Some(u), Some(l)) => {
                return Err(Error::UniquenessViolation(format!(
                    "checker at {sq:?} could move up to {u:?} or left to {l:?}"
                )))
            }
            (None, None) => {
                return Err(Error::UniquenessViolation(format!(
                    "checker at {sq:?} has no happy square to its left or above"
                )))
            }
        };
        list[i].0 = target;
    }
    rebuild(list)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::WhiteConfig;
    use crate::specialization::{apply_black_move, describe_move, specialization_sequence};

    fn whites(v: &[(usize, usize)]) -> WhiteConfig {
        WhiteConfig::new(v.iter().map(|&(r, c)| Square::new(r, c)).collect()).unwrap()
    }

    #[test]
    fn first_move_of_g24_game_is_forced_stay() {
        let order = specialization_sequence(4);
        let mv = describe_move(&order.black_states[0], 3).unwrap();
        // Whites for A = B = {2,4}.
        let w = whites(&[(4, 2), (2, 4)]);
        let d = phase1_decision(&w, &mv);
        assert_eq!(d.kind, Phase1Kind::StayOnly);
        assert!(!d.dagger);
        // No checker in critical row 3; (4,1) holds no white, but the
        // diagonal through (4,1) contains no white either.
        assert_eq!(d.critical_row_white, None);
        assert_eq!(d.top_diagonal_white, None);
    }

    #[test]
    fn choice_cell_detected() {
        // n = 4, move e3 on the initial configuration: descending (3,2),
        // rising (4,1).  Put whites at (3,3) (critical row, not on the
        // descending square) and (4,1) -- on the rising square, so the swap
        // is forced.
        let order = specialization_sequence(4);
        let mv = describe_move(&order.black_states[0], 3).unwrap();
        let w = whites(&[(4, 1), (3, 3)]);
        let d = phase1_decision(&w, &mv);
        assert_eq!(d.kind, Phase1Kind::SwapOnly);
    }

    #[test]
    fn dagger_flag() {
        let order = specialization_sequence(4);
        let mv = describe_move(&order.black_states[0], 3).unwrap();
        // White on the rising square, none in the critical row.
        let w = whites(&[(4, 1), (1, 4)]);
        let d = phase1_decision(&w, &mv);
        assert_eq!(d.kind, Phase1Kind::StayOnly);
        assert!(d.dagger);
    }

    #[test]
    fn phase2_dagger_slide() {
        // After the stay on a dagger move the white on the risen checker's
        // old square slides up one row onto it.
        let order = specialization_sequence(4);
        let black_after = apply_black_move(&order.black_states[0], 3);
        let w = whites(&[(4, 1), (1, 4)]);
        let (next, perm) = apply_phase2(&w, &black_after).unwrap();
        assert_eq!(next.checkers(), &[Square::new(3, 1), Square::new(1, 4)]);
        assert_eq!(perm, vec![0, 1]);
    }

    #[test]
    fn blocker_is_strict() {
        let w = whites(&[(4, 1), (3, 4), (2, 6)]);
        // Rectangle between (2,6) and (4,1): only (3,4) is strictly inside.
        assert!(has_blocker(&w, Square::new(2, 6), Square::new(4, 1)));
        // Rectangle between (3,4) and (4,1): nothing strictly inside.
        assert!(!has_blocker(&w, Square::new(3, 4), Square::new(4, 1)));
    }
}
