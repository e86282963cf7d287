//! Triangular-board puzzles.
//!
//! A puzzle of size n tiles an upward triangle (n rows of unit triangles)
//! with edge-labelled pieces so that adjacent labels agree:
//!
//! * 0-triangle and 1-triangle (all edges alike, either orientation),
//! * a rhombus (two triangles glued; of its four boundary edges the two
//!   parallel to one axis carry 1, the other two carry 0; all three rotations
//!   occur, the interior edge is marked 2),
//! * in K-theory mode only, a single non-rotatable K-piece: a size-2
//!   downward triangle (four unit cells) whose boundary reads, top edges left
//!   to right 0 then 1; left side top to bottom 1 then 0; right side top to
//!   bottom 0 then 1.
//!
//! Boundary: each side spells the indicator string of a subset, read left to
//! right in the plane — the NW side from the bottom-left corner up to the
//! apex spells alpha, the NE side from the apex down spells beta, and the
//! bottom spells gamma.  (Reading the NW side top-down instead provably kills
//! nonzero coefficients already for n = 2; the left-to-right convention is
//! the one under which fillings count Littlewood-Richardson coefficients.)
//! Counting each puzzle with sign (-1)^(number of K-pieces) gives the
//! Grothendieck structure constant.

use crate::board::SubsetK;
use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// Indicator string of a subset of {1..n}.
pub fn subset_to_boundary(s: &SubsetK, n: usize) -> Vec<u8> {
    let mut out = vec![0u8; n];
    for &e in s.elems() {
        out[e - 1] = 1;
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PieceKind {
    Up0,
    Up1,
    Down0,
    Down1,
    /// U(m,i) + D(m,i): horizontals 1, slants 0.
    RhombusA,
    /// D(m,i) + U(m,i+1): horizontals 0, backslants 1.
    RhombusB,
    /// U(m,i) + D(m+1,i): forward slants 1, backslants 0.
    RhombusV,
    /// Anchored at D(m,i); also covers U(m,i+1), D(m,i+1), D(m+1,i+1).
    KPiece,
}

/// A piece at its anchor cell (the first of its cells in row-major scan
/// order).  `up` tells whether the anchor is the upward cell U(m,i).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlacedPiece {
    pub kind: PieceKind,
    pub m: usize,
    pub i: usize,
}

/// A complete filling.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Puzzle {
    pub n: usize,
    pub pieces: Vec<PlacedPiece>,
    /// h[m-1][i-1]: horizontal edge below U(m,i) (so h[n-1] is gamma).
    pub h: Vec<Vec<u8>>,
    /// l[m-1][i-1]: forward-slant edge left of U(m,i) (l[m-1][0] is alpha_m).
    pub l: Vec<Vec<u8>>,
    /// r[m-1][i-1]: backslant edge right of U(m,i) (r[m-1][m-1] is beta_m).
    pub r: Vec<Vec<u8>>,
}

impl Puzzle {
    pub fn gamma_string(&self) -> Vec<u8> {
        self.h[self.n - 1]
            .iter()
            .map(|&x| if x == 1 { 1 } else { 0 })
            .collect()
    }

    pub fn gamma_subset(&self) -> SubsetK {
        let elems = self
            .gamma_string()
            .iter()
            .enumerate()
            .filter(|&(_, &x)| x == 1)
            .map(|(i, _)| i + 1)
            .collect();
        SubsetK::new(elems).expect("positions are distinct")
    }

    pub fn k_piece_count(&self) -> usize {
        self.pieces
            .iter()
            .filter(|p| p.kind == PieceKind::KPiece)
            .count()
    }

    pub fn sign(&self) -> i64 {
        if self.k_piece_count().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PuzzleMode {
    Cohomology,
    KTheory,
}

/// Aggregated counts per bottom boundary.
#[derive(Clone, Debug, Default)]
pub struct PuzzleCounts {
    /// gamma string -> (number of puzzles, signed count).
    pub by_gamma: BTreeMap<Vec<u8>, (u64, i64)>,
}

impl PuzzleCounts {
    pub fn count(&self, gamma: &[u8]) -> u64 {
        self.by_gamma.get(gamma).map_or(0, |v| v.0)
    }

    pub fn signed(&self, gamma: &[u8]) -> i64 {
        self.by_gamma.get(gamma).map_or(0, |v| v.1)
    }
}

pub(crate) struct Board {
    pub(crate) n: usize,
    // Option labels; h[m][i] for m in 0..n, i in 0..=m etc. (0-based).
    pub(crate) h: Vec<Vec<Option<u8>>>,
    pub(crate) l: Vec<Vec<Option<u8>>>,
    pub(crate) r: Vec<Vec<Option<u8>>>,
    pub(crate) up_filled: Vec<Vec<bool>>,
    pub(crate) down_filled: Vec<Vec<bool>>,
    pub(crate) pieces: Vec<PlacedPiece>,
}

/// An edge reference: which array, and the (m, i) position (1-based).
#[derive(Clone, Copy)]
pub(crate) enum E {
    H(usize, usize),
    L(usize, usize),
    R(usize, usize),
}

impl Board {
    /// Empty board with the NW side spelling `alpha` bottom-to-top, the NE
    /// side spelling `beta` top-to-bottom, and optionally the bottom spelling
    /// `gamma` left-to-right.
    pub(crate) fn new(n: usize, alpha: &[u8], beta: &[u8], gamma: Option<&[u8]>) -> Self {
        let mut board = Board {
            n,
            h: (1..=n).map(|m| vec![None; m]).collect(),
            l: (1..=n).map(|m| vec![None; m]).collect(),
            r: (1..=n).map(|m| vec![None; m]).collect(),
            up_filled: (1..=n).map(|m| vec![false; m]).collect(),
            down_filled: (1..=n).map(|m| vec![false; m.saturating_sub(1)]).collect(),
            pieces: vec![],
        };
        for m in 1..=n {
            board.l[m - 1][0] = Some(alpha[n - m]);
            board.r[m - 1][m - 1] = Some(beta[m - 1]);
        }
        if let Some(g) = gamma {
            for i in 1..=n {
                board.h[n - 1][i - 1] = Some(g[i - 1]);
            }
        }
        board
    }

    /// Place a piece at its anchor: checks the covered cells are free and the
    /// edge labels compatible, then commits.
    pub(crate) fn place(&mut self, kind: PieceKind, m: usize, i: usize) -> bool {
        let cells = piece_cells(kind, m, i);
        if cells.iter().any(|&(cm, ci, up)| {
            if up {
                self.up_filled[cm - 1][ci - 1]
            } else {
                self.down_filled[cm - 1][ci - 1]
            }
        }) {
            return false;
        }
        if self.assign(&piece_edges(kind, m, i)).is_none() {
            return false;
        }
        for &(cm, ci, up) in &cells {
            if up {
                self.up_filled[cm - 1][ci - 1] = true;
            } else {
                self.down_filled[cm - 1][ci - 1] = true;
            }
        }
        self.pieces.push(PlacedPiece { kind, m, i });
        true
    }

    pub(crate) fn get(&self, e: E) -> Option<u8> {
        match e {
            E::H(m, i) => self.h[m - 1][i - 1],
            E::L(m, i) => self.l[m - 1][i - 1],
            E::R(m, i) => self.r[m - 1][i - 1],
        }
    }

    pub(crate) fn set(&mut self, e: E, v: Option<u8>) {
        match e {
            E::H(m, i) => self.h[m - 1][i - 1] = v,
            E::L(m, i) => self.l[m - 1][i - 1] = v,
            E::R(m, i) => self.r[m - 1][i - 1] = v,
        }
    }

    /// Try to place labels on the given edges; on success returns the edges
    /// that were newly assigned (for rollback).
    pub(crate) fn assign(&mut self, wanted: &[(E, u8)]) -> Option<Vec<E>> {
        let mut newly = vec![];
        for &(e, v) in wanted {
            match self.get(e) {
                Some(existing) => {
                    if existing != v {
                        for &u in &newly {
                            self.set(u, None);
                        }
                        return None;
                    }
                }
                None => {
                    self.set(e, Some(v));
                    newly.push(e);
                }
            }
        }
        Some(newly)
    }
}

/// The cells a piece covers, given its anchor.
pub(crate) fn piece_cells(kind: PieceKind, m: usize, i: usize) -> Vec<(usize, usize, bool)> {
    // (m, i, is_up)
    match kind {
        PieceKind::Up0 | PieceKind::Up1 => vec![(m, i, true)],
        PieceKind::Down0 | PieceKind::Down1 => vec![(m, i, false)],
        PieceKind::RhombusA => vec![(m, i, true), (m, i, false)],
        PieceKind::RhombusB => vec![(m, i, false), (m, i + 1, true)],
        PieceKind::RhombusV => vec![(m, i, true), (m + 1, i, false)],
        PieceKind::KPiece => vec![
            (m, i, false),
            (m, i + 1, true),
            (m, i + 1, false),
            (m + 1, i + 1, false),
        ],
    }
}

/// The edge labels a piece requires.  Up cell U(m,i) edges: L(m,i), H(m,i),
/// R(m,i).  Down cell D(m,i) edges: top H(m-1,i), left R(m,i), right L(m,i+1).
pub(crate) fn piece_edges(kind: PieceKind, m: usize, i: usize) -> Vec<(E, u8)> {
    match kind {
        PieceKind::Up0 => vec![(E::L(m, i), 0), (E::H(m, i), 0), (E::R(m, i), 0)],
        PieceKind::Up1 => vec![(E::L(m, i), 1), (E::H(m, i), 1), (E::R(m, i), 1)],
        PieceKind::Down0 => vec![(E::H(m - 1, i), 0), (E::R(m, i), 0), (E::L(m, i + 1), 0)],
        PieceKind::Down1 => vec![(E::H(m - 1, i), 1), (E::R(m, i), 1), (E::L(m, i + 1), 1)],
        PieceKind::RhombusA => vec![
            (E::L(m, i), 0),
            (E::H(m, i), 1),
            (E::R(m, i), 2),
            (E::H(m - 1, i), 1),
            (E::L(m, i + 1), 0),
        ],
        PieceKind::RhombusB => vec![
            (E::H(m - 1, i), 0),
            (E::R(m, i), 1),
            (E::L(m, i + 1), 2),
            (E::H(m, i + 1), 0),
            (E::R(m, i + 1), 1),
        ],
        PieceKind::RhombusV => vec![
            (E::L(m, i), 1),
            (E::R(m, i), 0),
            (E::H(m, i), 2),
            (E::R(m + 1, i), 0),
            (E::L(m + 1, i + 1), 1),
        ],
        PieceKind::KPiece => vec![
            // boundary of the size-2 downward triangle
            (E::H(m - 1, i), 0),
            (E::H(m - 1, i + 1), 1),
            (E::R(m, i), 1),
            (E::R(m + 1, i + 1), 0),
            (E::L(m, i + 2), 0),
            (E::L(m + 1, i + 2), 1),
            // interior
            (E::L(m, i + 1), 2),
            (E::H(m, i + 1), 2),
            (E::R(m, i + 1), 2),
        ],
    }
}

fn candidate_pieces(m: usize, i: usize, is_up: bool, n: usize, mode: PuzzleMode) -> Vec<PieceKind> {
    let mut out = vec![];
    if is_up {
        out.push(PieceKind::Up0);
        out.push(PieceKind::Up1);
        if i < m {
            out.push(PieceKind::RhombusA);
        }
        if m < n {
            out.push(PieceKind::RhombusV);
        }
    } else {
        out.push(PieceKind::Down0);
        out.push(PieceKind::Down1);
        out.push(PieceKind::RhombusB);
        if mode == PuzzleMode::KTheory && i + 1 < m && m < n {
            out.push(PieceKind::KPiece);
        }
    }
    out
}

fn scan_order(n: usize) -> Vec<(usize, usize, bool)> {
    let mut out = vec![];
    for m in 1..=n {
        for i in 1..=m {
            out.push((m, i, true));
            if i < m {
                out.push((m, i, false));
            }
        }
    }
    out
}

fn enumerate_impl(
    alpha: &[u8],
    beta: &[u8],
    gamma: Option<&[u8]>,
    n: usize,
    mode: PuzzleMode,
    collect: bool,
    mut on_puzzle: impl FnMut(&Board),
) -> Result<()> {
    let _ = collect;
    if alpha.len() != n || beta.len() != n || gamma.is_some_and(|g| g.len() != n) {
        return Err(Error::InvariantViolation(
            "boundary strings must have length n".into(),
        ));
    }
    let mut board = Board::new(n, alpha, beta, gamma);
    let order = scan_order(n);

    fn rec(
        pos: usize,
        order: &[(usize, usize, bool)],
        board: &mut Board,
        mode: PuzzleMode,
        on_puzzle: &mut impl FnMut(&Board),
    ) {
        if pos == order.len() {
            on_puzzle(board);
            return;
        }
        let (m, i, is_up) = order[pos];
        let filled = if is_up {
            board.up_filled[m - 1][i - 1]
        } else {
            board.down_filled[m - 1][i - 1]
        };
        if filled {
            rec(pos + 1, order, board, mode, on_puzzle);
            return;
        }
        for kind in candidate_pieces(m, i, is_up, board.n, mode) {
            let cells = piece_cells(kind, m, i);
            if cells.iter().any(|&(cm, ci, up)| {
                if up {
                    board.up_filled[cm - 1][ci - 1]
                } else {
                    board.down_filled[cm - 1][ci - 1]
                }
            }) {
                continue;
            }
            let edges = piece_edges(kind, m, i);
            let Some(newly) = board.assign(&edges) else {
                continue;
            };
            for &(cm, ci, up) in &cells {
                if up {
                    board.up_filled[cm - 1][ci - 1] = true;
                } else {
                    board.down_filled[cm - 1][ci - 1] = true;
                }
            }
            board.pieces.push(PlacedPiece { kind, m, i });
            rec(pos + 1, order, board, mode, on_puzzle);
            board.pieces.pop();
            for &(cm, ci, up) in &cells {
                if up {
                    board.up_filled[cm - 1][ci - 1] = false;
                } else {
                    board.down_filled[cm - 1][ci - 1] = false;
                }
            }
            for e in newly {
                board.set(e, None);
            }
        }
    }

    rec(0, &order, &mut board, mode, &mut on_puzzle);
    Ok(())
}

pub(crate) fn board_to_puzzle(board: &Board) -> Puzzle {
    let unwrap = |v: &Vec<Vec<Option<u8>>>| {
        v.iter()
            .map(|row| row.iter().map(|x| x.expect("complete filling")).collect())
            .collect()
    };
    Puzzle {
        n: board.n,
        pieces: board.pieces.clone(),
        h: unwrap(&board.h),
        l: unwrap(&board.l),
        r: unwrap(&board.r),
    }
}

/// Enumerate all puzzles with the given sides; when `gamma` is `None` the
/// bottom is left free and puzzles for every gamma are produced.
pub fn enumerate_puzzles(
    alpha: &SubsetK,
    beta: &SubsetK,
    gamma: Option<&SubsetK>,
    n: usize,
    mode: PuzzleMode,
) -> Result<Vec<Puzzle>> {
    let a = subset_to_boundary(alpha, n);
    let b = subset_to_boundary(beta, n);
    let g = gamma.map(|g| subset_to_boundary(g, n));
    let mut out = vec![];
    enumerate_impl(&a, &b, g.as_deref(), n, mode, true, |board| {
        out.push(board_to_puzzle(board))
    })?;
    Ok(out)
}

/// Counts per bottom boundary, without keeping the fillings.
pub fn puzzle_counts(
    alpha: &SubsetK,
    beta: &SubsetK,
    n: usize,
    mode: PuzzleMode,
) -> Result<PuzzleCounts> {
    let a = subset_to_boundary(alpha, n);
    let b = subset_to_boundary(beta, n);
    let mut counts = PuzzleCounts::default();
    enumerate_impl(&a, &b, None, n, mode, false, |board| {
        let gamma: Vec<u8> = board.h[n - 1]
            .iter()
            .map(|x| if x.expect("complete") == 1 { 1 } else { 0 })
            .collect();
        let k_pieces = board
            .pieces
            .iter()
            .filter(|p| p.kind == PieceKind::KPiece)
            .count();
        let sign = if k_pieces % 2 == 0 { 1 } else { -1 };
        let entry = counts.by_gamma.entry(gamma).or_insert((0, 0));
        entry.0 += 1;
        entry.1 += sign;
    })?;
    Ok(counts)
}
