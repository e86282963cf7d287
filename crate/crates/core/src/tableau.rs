//! Plain and set-valued tableaux produced by games and by the oracles.

use serde::{Deserialize, Serialize};

/// A filling with one positive integer per cell, stored row by row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tableau {
    pub rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new() -> Self {
        Tableau { rows: vec![] }
    }

    pub fn push(&mut self, row: usize, entry: usize) {
        while self.rows.len() < row {
            self.rows.push(vec![]);
        }
        self.rows[row - 1].push(entry);
    }

    /// Canonical form for set comparisons: each row sorted, trailing empty
    /// rows dropped.
    pub fn canonical(mut self) -> Self {
        for row in &mut self.rows {
            row.sort_unstable();
        }
        while self.rows.last().is_some_and(|r| r.is_empty()) {
            self.rows.pop();
        }
        self
    }
}

impl Default for Tableau {
    fn default() -> Self {
        Self::new()
    }
}

/// A filling with a nonempty set of positive integers per cell.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SetValuedTableau {
    pub rows: Vec<Vec<Vec<usize>>>,
}

impl SetValuedTableau {
    pub fn new() -> Self {
        SetValuedTableau { rows: vec![] }
    }

    pub fn push(&mut self, row: usize, cell: Vec<usize>) {
        while self.rows.len() < row {
            self.rows.push(vec![]);
        }
        self.rows[row - 1].push(cell);
    }

    /// Total number of entries over all cells.
    pub fn weight(&self) -> usize {
        self.rows.iter().flatten().map(|c| c.len()).sum()
    }

    pub fn canonical(mut self) -> Self {
        for row in &mut self.rows {
            for cell in row.iter_mut() {
                cell.sort_unstable();
            }
            row.sort();
        }
        while self.rows.last().is_some_and(|r| r.is_empty()) {
            self.rows.pop();
        }
        self
    }
}

impl Default for SetValuedTableau {
    fn default() -> Self {
        Self::new()
    }
}
