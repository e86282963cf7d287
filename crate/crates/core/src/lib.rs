//! Schubert calculus on Grassmannians by degeneration.
//!
//! The central object is a *checker game*: a pair of checker configurations on
//! an n x n board (n black checkers recording a degenerating flag pair, k
//! white checkers recording a Schubert problem) evolved through a fixed
//! sequence of elementary moves.  Counting the games that end at a given
//! position computes the Littlewood-Richardson coefficient; a signed variant
//! computes structure constants for the K-theory (Grothendieck ring) basis of
//! structure sheaves.
//!
//! The crate also enumerates triangular-board puzzles (an independent rule
//! for the same numbers), translates games to puzzles and to tableaux, and
//! carries two tableau-based oracles (classical LR fillings and set-valued
//! tableaux via stable Grothendieck polynomials) used throughout the test
//! suite to cross-validate every route.

pub mod board;
pub mod error;
pub mod game;
pub mod moves;
pub mod oracle;
pub mod puzzles;
pub mod render;
pub mod schur;
pub mod specialization;
pub mod tableau;
pub mod translate;

pub use board::{
    dominates, initial_white, is_happy, is_mid_sort, partition_to_subset, subset_to_partition,
    BlackConfig, InitialWhite, Partition, Square, SubsetK, WhiteConfig,
};
pub use error::Error;
pub use game::{
    dim_y, expansion, game_to_set_valued_tableau, game_to_tableau, k_expansion, lr_coefficient,
    play_all_games, tournament, Expansion, GameOutcome, GameState, Mode, MoveRecord,
};
pub use moves::{phase1_decision, Phase1Decision, Phase1Kind, WhiteAction};
pub use oracle::{companion, count_lr_tableaux, count_set_valued, lr_tableaux, SkewTableau};
pub use puzzles::{enumerate_puzzles, subset_to_boundary, Puzzle, PuzzleCounts, PuzzleMode};
pub use schur::{multiply_schur, multiply_schur_stable, pieri_check, SchurExpansion};
pub use specialization::{
    apply_black_move, describe_move, specialization_sequence, BlackMove, SpecializationOrder,
};
pub use tableau::{SetValuedTableau, Tableau};
pub use translate::game_to_puzzle;
