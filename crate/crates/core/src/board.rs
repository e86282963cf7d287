//! Board primitives: squares, checker configurations, and the dictionary
//! between subsets, partitions and board positions.
//!
//! Convention: squares are 1-based `(row, col)` with row 1 at the top and
//! column 1 at the left.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Square {
    pub row: usize,
    pub col: usize,
}

impl Square {
    pub fn new(row: usize, col: usize) -> Self {
        Square { row, col }
    }
}

/// `p` dominates `q` when `p` is weakly south-east of `q`.
pub fn dominates(p: Square, q: Square) -> bool {
    p.row >= q.row && p.col >= q.col
}

/// Positions of the n black checkers: one per row and per column.
///
/// Stored as `row_of_col[c-1] = r`.  The corresponding permutation sends
/// `n+1-c` to `r`, so the initial (antidiagonal) configuration is the
/// identity and the final (diagonal) configuration is the longest word.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BlackConfig {
    row_of_col: Vec<usize>,
}

impl BlackConfig {
    pub fn new(row_of_col: Vec<usize>) -> Result<Self> {
        let n = row_of_col.len();
        let mut seen = vec![false; n + 1];
        for &r in &row_of_col {
            if r < 1 || r > n || seen[r] {
                return Err(Error::InvariantViolation(format!(
                    "rows of black checkers must be a permutation of 1..={n}"
                )));
            }
            seen[r] = true;
        }
        Ok(BlackConfig { row_of_col })
    }

    /// Antidiagonal: column c at row n+1-c.
    pub fn initial(n: usize) -> Self {
        BlackConfig {
            row_of_col: (1..=n).map(|c| n + 1 - c).collect(),
        }
    }

    /// Diagonal: column c at row c.
    pub fn terminal(n: usize) -> Self {
        BlackConfig {
            row_of_col: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.row_of_col.len()
    }

    pub fn row_of_col(&self, c: usize) -> usize {
        self.row_of_col[c - 1]
    }

    pub fn col_of_row(&self, r: usize) -> usize {
        1 + self
            .row_of_col
            .iter()
            .position(|&x| x == r)
            .expect("row occupied by exactly one black checker")
    }

    pub fn squares(&self) -> impl Iterator<Item = Square> + '_ {
        self.row_of_col
            .iter()
            .enumerate()
            .map(|(i, &r)| Square::new(r, i + 1))
    }

    pub fn has_checker(&self, sq: Square) -> bool {
        sq.col >= 1 && sq.col <= self.n() && self.row_of_col[sq.col - 1] == sq.row
    }

    /// One-line notation of the permutation recorded by the checkers.
    pub fn to_permutation(&self) -> Vec<usize> {
        let n = self.n();
        let mut pi = vec![0; n];
        for c in 1..=n {
            pi[n - c] = self.row_of_col(c);
        }
        pi
    }

    /// Entry (i, j) counts black checkers dominated by the square (i, j).
    pub fn rank_table(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut table = vec![vec![0; n]; n];
        for (i, row) in table.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                let here = Square::new(i + 1, j + 1);
                *entry = self.squares().filter(|&b| dominates(here, b)).count();
            }
        }
        table
    }

    /// Number of ordered pairs of distinct checkers where one dominates the
    /// other.  Ranges from 0 (antidiagonal) to n(n-1)/2 (diagonal); each
    /// specialization move raises it by exactly one.
    pub fn codim(&self) -> usize {
        let sqs: Vec<Square> = self.squares().collect();
        let mut count = 0;
        for &a in &sqs {
            for &b in &sqs {
                if a != b && dominates(a, b) {
                    count += 1;
                }
            }
        }
        count
    }
}

/// A white checker is happy when some black checker sits weakly above it in
/// its column and some black checker sits weakly left of it in its row.
pub fn is_happy(w: Square, black: &BlackConfig) -> bool {
    let above = black.row_of_col(w.col) <= w.row;
    let left = black.col_of_row(w.row) <= w.col;
    above && left
}

/// Positions of the k white checkers, in distinct rows and columns, kept
/// sorted by column.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WhiteConfig {
    checkers: Vec<Square>,
}

impl WhiteConfig {
    pub fn new(mut checkers: Vec<Square>) -> Result<Self> {
        checkers.sort_by_key(|s| s.col);
        for pair in checkers.windows(2) {
            if pair[0].col == pair[1].col {
                return Err(Error::InvariantViolation(
                    "white checkers must occupy distinct columns".into(),
                ));
            }
        }
        let mut rows: Vec<usize> = checkers.iter().map(|s| s.row).collect();
        rows.sort_unstable();
        rows.dedup();
        if rows.len() != checkers.len() {
            return Err(Error::InvariantViolation(
                "white checkers must occupy distinct rows".into(),
            ));
        }
        Ok(WhiteConfig { checkers })
    }

    pub fn k(&self) -> usize {
        self.checkers.len()
    }

    pub fn checkers(&self) -> &[Square] {
        &self.checkers
    }

    pub fn iter(&self) -> impl Iterator<Item = Square> + '_ {
        self.checkers.iter().copied()
    }

    /// Rows occupied, sorted increasingly.
    pub fn rows_sorted(&self) -> Vec<usize> {
        let mut rows: Vec<usize> = self.checkers.iter().map(|s| s.row).collect();
        rows.sort_unstable();
        rows
    }

    /// 1-based rank of the checker at `idx` when checkers are ordered by row.
    pub fn rank_by_row(&self, idx: usize) -> usize {
        let r = self.checkers[idx].row;
        1 + self.checkers.iter().filter(|s| s.row < r).count()
    }

    /// 1-based rank of the checker at `idx` when ordered by column.
    pub fn rank_by_col(&self, idx: usize) -> usize {
        let c = self.checkers[idx].col;
        1 + self.checkers.iter().filter(|s| s.col < c).count()
    }
}

/// With the descending black checker in column `c`, white checkers sorted by
/// column must have rows increasing while columns stay strictly left of c and
/// decreasing from column c on.  (The split is pinned empirically: of the
/// plausible inclusive/exclusive variants, this is the strongest one that
/// holds at every state of every game for n <= 5.)
pub fn is_mid_sort(white: &WhiteConfig, descending_col: usize) -> bool {
    let left: Vec<usize> = white
        .iter()
        .filter(|s| s.col < descending_col)
        .map(|s| s.row)
        .collect();
    let right: Vec<usize> = white
        .iter()
        .filter(|s| s.col >= descending_col)
        .map(|s| s.row)
        .collect();
    left.windows(2).all(|p| p[0] < p[1]) && right.windows(2).all(|p| p[0] > p[1])
}

/// A k-element subset of {1..n}, sorted increasingly.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct SubsetK {
    elems: Vec<usize>,
}

impl SubsetK {
    pub fn new(mut elems: Vec<usize>) -> Result<Self> {
        elems.sort_unstable();
        let distinct = elems.windows(2).all(|p| p[0] < p[1]);
        if !distinct || elems.contains(&0) {
            return Err(Error::InvariantViolation(
                "subset elements must be distinct positive integers".into(),
            ));
        }
        Ok(SubsetK { elems })
    }

    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    pub fn k(&self) -> usize {
        self.elems.len()
    }
}

/// A partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::InvariantViolation(
                "partition parts must be weakly decreasing".into(),
            ));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn fits(&self, k: usize, width: usize) -> bool {
        self.len() <= k && self.part(0) <= width
    }

    /// Complement in the k x width rectangle, read backwards.
    pub fn dual(&self, k: usize, width: usize) -> Result<Partition> {
        if !self.fits(k, width) {
            return Err(Error::OutOfRectangle {
                k,
                width,
                msg: format!("{:?}", self.parts),
            });
        }
        let parts = (0..k).rev().map(|i| width - self.part(i)).collect();
        Partition::new(parts)
    }

    /// `self` contains `other` as Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// All partitions fitting in a k x width rectangle.
    pub fn all_in_rectangle(k: usize, width: usize) -> Vec<Partition> {
        let mut out = vec![];
        fn rec(k: usize, width: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition::new(prefix.clone()).unwrap());
            if prefix.len() == k {
                return;
            }
            let cap = prefix.last().copied().unwrap_or(width);
            for next in (1..=cap).rev() {
                prefix.push(next);
                rec(k, width, prefix, out);
                prefix.pop();
            }
        }
        rec(k, width, &mut vec![], &mut out);
        out.sort_by(|a, b| a.parts.cmp(&b.parts));
        out
    }
}

/// lambda_i = (n-k) + i - s_i for the i-th smallest subset element.
pub fn subset_to_partition(s: &SubsetK, k: usize, n: usize) -> Result<Partition> {
    if s.k() != k || s.elems.iter().any(|&e| e > n) {
        return Err(Error::InvariantViolation(format!(
            "subset {:?} is not a {k}-subset of 1..={n}",
            s.elems
        )));
    }
    let parts: Vec<usize> = (0..k)
        .map(|i| {
            let v = (n - k) + (i + 1);
            v.saturating_sub(s.elems[i])
        })
        .collect();
    // Elements are increasing, so parts come out weakly decreasing.
    Partition::new(parts)
}

/// Inverse of `subset_to_partition`; fails when the partition leaves the
/// k x (n-k) rectangle.
pub fn partition_to_subset(p: &Partition, k: usize, n: usize) -> Result<SubsetK> {
    if !p.fits(k, n - k) {
        return Err(Error::OutOfRectangle {
            k,
            width: n - k,
            msg: format!("{:?}", p.parts),
        });
    }
    let elems = (0..k).map(|i| (n - k) + (i + 1) - p.part(i)).collect();
    SubsetK::new(elems)
}

/// Starting white configuration for a pair of subsets, or the verdict that no
/// game exists (some required square has no black checker weakly above and
/// weakly left under the initial antidiagonal).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InitialWhite {
    Config(WhiteConfig),
    NoGame,
}

/// Whites go at (a_i, b_{k+1-i}).  The square (r, c) admits a happy white
/// under the antidiagonal blacks exactly when r + c > n.
pub fn initial_white(a: &SubsetK, b: &SubsetK, n: usize) -> Result<InitialWhite> {
    let k = a.k();
    if b.k() != k {
        return Err(Error::InvariantViolation(
            "both subsets must have the same size".into(),
        ));
    }
    if a.elems.iter().chain(b.elems.iter()).any(|&e| e > n) {
        return Err(Error::InvariantViolation(format!(
            "subset elements must lie in 1..={n}"
        )));
    }
    let mut checkers = Vec::with_capacity(k);
    for i in 0..k {
        let row = a.elems[i];
        let col = b.elems[k - 1 - i];
        if row + col <= n {
            return Ok(InitialWhite::NoGame);
        }
        checkers.push(Square::new(row, col));
    }
    Ok(InitialWhite::Config(WhiteConfig::new(checkers)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn subset(v: &[usize]) -> SubsetK {
        SubsetK::new(v.to_vec()).unwrap()
    }

    #[test]
    fn domination_examples() {
        assert!(dominates(Square::new(3, 4), Square::new(2, 2)));
        assert!(dominates(Square::new(3, 4), Square::new(3, 4)));
        assert!(!dominates(Square::new(2, 2), Square::new(3, 1)));
    }

    #[test]
    fn black_permutation_endpoints() {
        assert_eq!(BlackConfig::initial(4).to_permutation(), vec![1, 2, 3, 4]);
        assert_eq!(BlackConfig::terminal(4).to_permutation(), vec![4, 3, 2, 1]);
    }

    #[test]
    fn codim_endpoints() {
        assert_eq!(BlackConfig::initial(5).codim(), 0);
        assert_eq!(BlackConfig::terminal(5).codim(), 10);
    }

    #[test]
    fn rank_table_initial() {
        // Antidiagonal for n = 2: checkers at (2,1), (1,2).
        let t = BlackConfig::initial(2).rank_table();
        assert_eq!(t, vec![vec![0, 1], vec![1, 2]]);
    }

    #[test]
    fn happiness() {
        let black = BlackConfig::initial(4);
        // Black checkers at (4,1) (3,2) (2,3) (1,4).
        assert!(is_happy(Square::new(2, 4), &black));
        assert!(is_happy(Square::new(4, 2), &black));
        assert!(!is_happy(Square::new(1, 1), &black));
    }

    #[test]
    fn subset_partition_roundtrip_examples() {
        // {2,5} in G(2,5) is the single row (2).
        let p = subset_to_partition(&subset(&[2, 5]), 2, 5).unwrap();
        assert_eq!(p.parts(), &[2]);
        // {1,4} in G(2,4) is (2); {2,3} is (1,1).
        let p = subset_to_partition(&subset(&[1, 4]), 2, 4).unwrap();
        assert_eq!(p.parts(), &[2]);
        let p = subset_to_partition(&subset(&[2, 3]), 2, 4).unwrap();
        assert_eq!(p.parts(), &[1, 1]);
        let s = partition_to_subset(&Partition::new(vec![1, 1]).unwrap(), 2, 4).unwrap();
        assert_eq!(s.elems(), &[2, 3]);
    }

    #[test]
    fn duals() {
        let p = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(p.dual(2, 2).unwrap().parts(), &[1]);
        assert_eq!(Partition::empty().dual(2, 3).unwrap().parts(), &[3, 3]);
    }

    #[test]
    fn initial_white_examples() {
        // k=1, n=2, A=B={1}: square (1,1) has 1+1 <= 2, no game.
        assert_eq!(
            initial_white(&subset(&[1]), &subset(&[1]), 2).unwrap(),
            InitialWhite::NoGame
        );
        // G(2,4), A=B={2,4}: whites at (2,4) and (4,2).
        match initial_white(&subset(&[2, 4]), &subset(&[2, 4]), 4).unwrap() {
            InitialWhite::Config(w) => {
                assert_eq!(w.checkers(), &[Square::new(4, 2), Square::new(2, 4)]);
            }
            InitialWhite::NoGame => panic!("expected a game"),
        }
    }

    #[test]
    fn mid_sort() {
        // Whites at (4,1), (2,3) with descending column 2: left part rows [4],
        // right part rows [2]; both monotone.
        let w = WhiteConfig::new(vec![Square::new(4, 1), Square::new(2, 3)]).unwrap();
        assert!(is_mid_sort(&w, 2));
        // Descending column 1: rows right of it must decrease, but [2, 4] rises.
        let w = WhiteConfig::new(vec![Square::new(2, 1), Square::new(4, 3)]).unwrap();
        assert!(!is_mid_sort(&w, 1));
    }
}
