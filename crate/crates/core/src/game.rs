//! The game engine: branching evolution of white checkers along the black
//! specialization schedule, and the counts/expansions read off at the end.

use crate::board::{
    initial_white, is_happy, is_mid_sort, partition_to_subset, subset_to_partition, BlackConfig,
    InitialWhite, Partition, SubsetK, WhiteConfig,
};
use crate::error::{Error, Result};
use crate::moves::{
    apply_phase2, apply_subswap, apply_swap, phase1_decision, Phase1Kind, WhiteAction,
};
use crate::specialization::{describe_move, specialization_sequence, SpecializationOrder};
use crate::tableau::{SetValuedTableau, Tableau};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Which ring the games compute in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Cohomology: stay/swap branches only, all games count +1.
    Cohomology,
    /// Grothendieck ring: the choice cell opens a third, sign-flipping
    /// sub-swap branch.
    KTheory,
}

/// One step of a game, as serialized in `--trace` output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveRecord {
    /// Index of the move in the specialization schedule, starting at 0.
    pub stage: usize,
    /// The letter i of the elementary move e_i.
    pub letter: usize,
    /// "stay" / "swap" where a genuine choice existed, "subswap" for the
    /// K-theory branch, "forced" for moves with no choice.
    pub decision: String,
    pub dagger: bool,
    /// For dagger moves: rank of the rising white checker counting by row,
    /// taken on the configuration before the black move.
    #[serde(rename = "daggerRow", skip_serializing_if = "Option::is_none", default)]
    pub dagger_row: Option<usize>,
    /// For dagger moves: rank counting by column.
    #[serde(rename = "daggerCol", skip_serializing_if = "Option::is_none", default)]
    pub dagger_col: Option<usize>,
    /// For dagger moves in K-theory games: the rising checker's accumulated
    /// row ranks (its memory plus the current rank).
    #[serde(rename = "daggerSet", skip_serializing_if = "Option::is_none", default)]
    pub dagger_set: Option<Vec<usize>>,
    /// White positions after the move, sorted by column.
    #[serde(rename = "whiteAfter")]
    pub white_after: Vec<(usize, usize)>,
    /// Cumulative sign of the game after this move.
    pub sign: i64,
}

/// A game in progress.
#[derive(Clone, Debug)]
pub struct GameState {
    pub stage: usize,
    pub whites: WhiteConfig,
    /// Per-checker memory (parallel to `whites`): row ranks recorded at
    /// sub-swaps, consumed by the next dagger of that checker.
    pub memories: Vec<Vec<usize>>,
    /// Per-checker flag (parallel to `whites`): set on the checker a sub-swap
    /// parks one row short of the critical-diagonal white's row; while set,
    /// the checker cannot re-enter a swap or sub-swap as the critical-row
    /// white.  Cleared when the current pass of the specialization schedule
    /// ends.
    pub parked: Vec<bool>,
    pub sign: i64,
    pub trace: Vec<MoveRecord>,
}

/// A finished game.
#[derive(Clone, Debug)]
pub struct GameOutcome {
    pub subset: SubsetK,
    pub sign: i64,
    pub trace: Vec<MoveRecord>,
}

/// Dimension of the variety encoded by a checker pair: for each white
/// checker, count the black checkers it dominates minus the white checkers
/// it dominates (itself included), summed.
pub fn dim_y(white: &WhiteConfig, black: &BlackConfig) -> i64 {
    let mut total: i64 = 0;
    for w in white.iter() {
        let blacks = black
            .squares()
            .filter(|&b| crate::board::dominates(w, b))
            .count() as i64;
        let whites = white
            .iter()
            .filter(|&v| crate::board::dominates(w, v))
            .count() as i64;
        total += blacks - whites;
    }
    total
}

fn branch(
    state: &GameState,
    order: &SpecializationOrder,
    action: WhiteAction,
    decision_label: &str,
    dec: &crate::moves::Phase1Decision,
    check: bool,
) -> Result<GameState> {
    let stage = state.stage;
    let letter = order.letters[stage];
    let black_before = &order.black_states[stage];
    let black_after = &order.black_states[stage + 1];

    let mut sign = state.sign;
    let mut dagger_row = None;
    let mut dagger_col = None;
    let mut dagger_set = None;
    let mut memories = state.memories.clone();
    let mut parked = state.parked.clone();

    if dec.dagger {
        let idx = dec
            .top_diagonal_white
            .expect("dagger implies a diagonal white");
        let r = state.whites.rank_by_row(idx);
        let c = state.whites.rank_by_col(idx);
        dagger_row = Some(r);
        dagger_col = Some(c);
        let mut set = vec![r];
        set.extend(memories[idx].iter().copied());
        set.sort_unstable();
        set.dedup();
        dagger_set = Some(set);
        memories[idx].clear();
    }

    let (mid, perm1) = match action {
        WhiteAction::Stay => (state.whites.clone(), (0..state.whites.k()).collect()),
        WhiteAction::Swap => apply_swap(
            &state.whites,
            dec.critical_row_white
                .expect("swap needs a critical-row white"),
            dec.top_diagonal_white.expect("swap needs a diagonal white"),
        )?,
        WhiteAction::SubSwap => {
            sign = -sign;
            let td = dec
                .top_diagonal_white
                .expect("sub-swap needs a diagonal white");
            let cr = dec
                .critical_row_white
                .expect("sub-swap needs a critical-row white");
            memories[td].push(state.whites.rank_by_row(td));
            parked[cr] = true;
            apply_subswap(&state.whites, cr, td)?
        }
    };
    let (next_whites, perm2) = apply_phase2(&mid, black_after)?;

    let mut next_memories = vec![vec![]; memories.len()];
    let mut next_parked = vec![false; parked.len()];
    for (old, mem) in memories.into_iter().enumerate() {
        next_memories[perm2[perm1[old]]] = mem;
    }
    // A pass of the schedule ends after the letter n-1 move; the parked flags
    // only constrain moves within the pass that created them.
    if letter != order.n - 1 {
        for (old, flag) in parked.into_iter().enumerate() {
            next_parked[perm2[perm1[old]]] = flag;
        }
    }

    if check {
        check_state_invariants(
            state,
            &next_whites,
            black_before,
            black_after,
            action,
            order,
        )?;
    }

    let record = MoveRecord {
        stage,
        letter,
        decision: decision_label.to_string(),
        dagger: dec.dagger,
        dagger_row,
        dagger_col,
        dagger_set,
        white_after: next_whites.iter().map(|s| (s.row, s.col)).collect(),
        sign,
    };
    let mut trace = state.trace.clone();
    trace.push(record);

    Ok(GameState {
        stage: stage + 1,
        whites: next_whites,
        memories: next_memories,
        parked: next_parked,
        sign,
        trace,
    })
}

fn check_state_invariants(
    state: &GameState,
    next_whites: &WhiteConfig,
    black_before: &BlackConfig,
    black_after: &BlackConfig,
    action: WhiteAction,
    order: &SpecializationOrder,
) -> Result<()> {
    // Every white checker is happy after phase 2.
    for w in next_whites.iter() {
        if !is_happy(w, black_after) {
            return Err(Error::InvariantViolation(format!(
                "white checker at {w:?} unhappy after phase 2"
            )));
        }
    }
    // Black codimension rises by exactly one per move.
    if black_after.codim() != black_before.codim() + 1 {
        return Err(Error::InvariantViolation(
            "black codimension did not increase by 1".into(),
        ));
    }
    // Mid-sort with respect to the next descending column, when mid-pass.
    if state.stage + 1 < order.moves() {
        let next_letter = order.letters[state.stage + 1];
        if let Ok(mv) = describe_move(black_after, next_letter) {
            if !is_mid_sort(next_whites, mv.descending.col) {
                return Err(Error::InvariantViolation(format!(
                    "whites {:?} not mid-sorted around column {}",
                    next_whites.checkers(),
                    mv.descending.col
                )));
            }
        }
    }
    // Stay and swap preserve the dimension; a sub-swap drops it by one.
    let before = dim_y(&state.whites, black_before);
    let after = dim_y(next_whites, black_after);
    let expected = match action {
        WhiteAction::SubSwap => before - 1,
        _ => before,
    };
    if after != expected {
        return Err(Error::InvariantViolation(format!(
            "dimension moved from {before} to {after} on a {action:?}"
        )));
    }
    Ok(())
}

/// All continuations of `state` by one move, in the branch order
/// stay, swap, sub-swap.
pub fn successors(
    state: &GameState,
    order: &SpecializationOrder,
    mode: Mode,
    check: bool,
) -> Result<Vec<GameState>> {
    if state.stage >= order.moves() {
        return Ok(vec![]);
    }
    let black_before = &order.black_states[state.stage];
    let mv = describe_move(black_before, order.letters[state.stage])?;
    let dec = phase1_decision(&state.whites, &mv);
    let mut out = vec![];
    match dec.kind {
        Phase1Kind::StayOnly => {
            out.push(branch(
                state,
                order,
                WhiteAction::Stay,
                "forced",
                &dec,
                check,
            )?);
        }
        Phase1Kind::SwapOnly => {
            out.push(branch(
                state,
                order,
                WhiteAction::Swap,
                "swap",
                &dec,
                check,
            )?);
        }
        Phase1Kind::StayOrSwap => {
            let cr = dec
                .critical_row_white
                .expect("choice cell has a critical-row white");
            if state.parked[cr] {
                out.push(branch(
                    state,
                    order,
                    WhiteAction::Stay,
                    "forced",
                    &dec,
                    check,
                )?);
            } else {
                out.push(branch(
                    state,
                    order,
                    WhiteAction::Stay,
                    "stay",
                    &dec,
                    check,
                )?);
                out.push(branch(
                    state,
                    order,
                    WhiteAction::Swap,
                    "swap",
                    &dec,
                    check,
                )?);
                if mode == Mode::KTheory {
                    out.push(branch(
                        state,
                        order,
                        WhiteAction::SubSwap,
                        "subswap",
                        &dec,
                        check,
                    )?);
                }
            }
        }
    }
    Ok(out)
}

/// Play every game for the Schubert problem (A, B) on an n-board and collect
/// the outcomes.  `check` enables the per-move structural invariant checks.
pub fn play_all_games_checked(
    a: &SubsetK,
    b: &SubsetK,
    n: usize,
    mode: Mode,
    check: bool,
) -> Result<Vec<GameOutcome>> {
    let start = match initial_white(a, b, n)? {
        InitialWhite::NoGame => return Ok(vec![]),
        InitialWhite::Config(w) => w,
    };
    let order = specialization_sequence(n);
    let k = start.k();
    let root = GameState {
        stage: 0,
        whites: start,
        memories: vec![vec![]; k],
        parked: vec![false; k],
        sign: 1,
        trace: vec![],
    };
    let mut outcomes = vec![];
    let mut stack = vec![root];
    while let Some(state) = stack.pop() {
        if state.stage == order.moves() {
            let terminal = &order.black_states[order.moves()];
            for w in state.whites.iter() {
                if !terminal.has_checker(w) {
                    return Err(Error::InvariantViolation(format!(
                        "final white checker at {w:?} is not on a black checker"
                    )));
                }
            }
            let subset = SubsetK::new(state.whites.rows_sorted())?;
            outcomes.push(GameOutcome {
                subset,
                sign: state.sign,
                trace: state.trace,
            });
            continue;
        }
        let mut next = successors(&state, &order, mode, check)?;
        // Reverse so the stay branch is explored (and reported) first.
        next.reverse();
        stack.extend(next);
    }
    outcomes.reverse();
    Ok(outcomes)
}

pub fn play_all_games(a: &SubsetK, b: &SubsetK, n: usize, mode: Mode) -> Result<Vec<GameOutcome>> {
    play_all_games_checked(a, b, n, mode, cfg!(debug_assertions))
}

/// A signed sum of Schubert classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub k: usize,
    pub n: usize,
    pub terms: BTreeMap<Partition, i64>,
}

impl Expansion {
    pub fn coefficient(&self, gamma: &Partition) -> i64 {
        self.terms.get(gamma).copied().unwrap_or(0)
    }
}

/// Expand the product of two Schubert (or structure-sheaf) classes by playing
/// all games.
pub fn expansion(
    alpha: &Partition,
    beta: &Partition,
    k: usize,
    n: usize,
    mode: Mode,
) -> Result<Expansion> {
    let a = partition_to_subset(alpha, k, n)?;
    let b = partition_to_subset(beta, k, n)?;
    let mut terms: BTreeMap<Partition, i64> = BTreeMap::new();
    for outcome in play_all_games(&a, &b, n, mode)? {
        let gamma = subset_to_partition(&outcome.subset, k, n)?;
        *terms.entry(gamma).or_insert(0) += outcome.sign;
    }
    terms.retain(|_, v| *v != 0);
    Ok(Expansion { k, n, terms })
}

/// The Littlewood-Richardson coefficient c_{alpha,beta}^gamma in G(k,n).
pub fn lr_coefficient(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    k: usize,
    n: usize,
) -> Result<u64> {
    let exp = expansion(alpha, beta, k, n, Mode::Cohomology)?;
    Ok(exp.coefficient(gamma) as u64)
}

/// Signed expansion in the Grothendieck ring.
pub fn k_expansion(alpha: &Partition, beta: &Partition, k: usize, n: usize) -> Result<Expansion> {
    expansion(alpha, beta, k, n, Mode::KTheory)
}

/// Chain games for an l-fold Schubert problem whose codimensions sum to the
/// dimension of G(k,n); the result is the number of solutions.
pub fn tournament(classes: &[Partition], k: usize, n: usize) -> Result<u64> {
    if classes.len() < 2 {
        return Err(Error::InvariantViolation(
            "a tournament needs at least two classes".into(),
        ));
    }
    let expected = k * (n - k);
    let got: usize = classes.iter().map(|p| p.size()).sum();
    if got != expected {
        return Err(Error::DimensionMismatch { expected, got });
    }
    let mut current: BTreeMap<Partition, u64> = BTreeMap::new();
    current.insert(classes[0].clone(), 1);
    for beta in &classes[1..] {
        let mut next: BTreeMap<Partition, u64> = BTreeMap::new();
        for (gamma, mult) in &current {
            let exp = expansion(gamma, beta, k, n, Mode::Cohomology)?;
            for (delta, c) in exp.terms {
                *next.entry(delta).or_insert(0) += mult * c as u64;
            }
        }
        current = next;
    }
    let point = Partition::new(vec![n - k; k])?;
    Ok(current.get(&point).copied().unwrap_or(0))
}

/// Read the tableau recorded by the dagger moves of a trace: a dagger with
/// row rank r and column rank c places an r in tableau row c.
pub fn game_to_tableau(trace: &[MoveRecord]) -> Tableau {
    let mut t = Tableau::new();
    for rec in trace {
        if rec.dagger {
            t.push(
                rec.dagger_col.expect("dagger record carries ranks"),
                rec.dagger_row.expect("dagger record carries ranks"),
            );
        }
    }
    t
}

/// Set-valued variant: each dagger contributes the rising checker's memory
/// set (for cohomology games every set is a singleton).
pub fn game_to_set_valued_tableau(trace: &[MoveRecord]) -> SetValuedTableau {
    let mut t = SetValuedTableau::new();
    for rec in trace {
        if rec.dagger {
            let set = rec
                .dagger_set
                .clone()
                .unwrap_or_else(|| vec![rec.dagger_row.expect("dagger record carries ranks")]);
            t.push(rec.dagger_col.expect("dagger record carries ranks"), set);
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn g24_two_games() {
        // sigma_1 * sigma_1 = sigma_2 + sigma_{1,1} in G(2,4).
        let exp = expansion(&p(&[1]), &p(&[1]), 2, 4, Mode::Cohomology).unwrap();
        assert_eq!(exp.coefficient(&p(&[2])), 1);
        assert_eq!(exp.coefficient(&p(&[1, 1])), 1);
        assert_eq!(exp.terms.len(), 2);
    }

    #[test]
    fn g24_tableaux() {
        let a = partition_to_subset(&p(&[1]), 2, 4).unwrap();
        let games = play_all_games(&a, &a, 4, Mode::Cohomology).unwrap();
        assert_eq!(games.len(), 2);
        let mut seen: Vec<(Vec<usize>, Tableau)> = games
            .iter()
            .map(|g| {
                (
                    g.subset.elems().to_vec(),
                    game_to_tableau(&g.trace).canonical(),
                )
            })
            .collect();
        seen.sort();
        // {1,4} = (2) records the tableau [1]; {2,3} = (1,1) records [2].
        assert_eq!(seen[0].0, vec![1, 4]);
        assert_eq!(seen[0].1.rows, vec![vec![1]]);
        assert_eq!(seen[1].0, vec![2, 3]);
        assert_eq!(seen[1].1.rows, vec![vec![2]]);
    }

    #[test]
    fn g24_k_theory() {
        let exp = k_expansion(&p(&[1]), &p(&[1]), 2, 4).unwrap();
        assert_eq!(exp.coefficient(&p(&[2])), 1);
        assert_eq!(exp.coefficient(&p(&[1, 1])), 1);
        assert_eq!(exp.coefficient(&p(&[2, 1])), -1);
        assert_eq!(exp.terms.len(), 3);
        // The extra game records the one-cell set-valued tableau {1,2}.
        let a = partition_to_subset(&p(&[1]), 2, 4).unwrap();
        let games = play_all_games(&a, &a, 4, Mode::KTheory).unwrap();
        let svts: Vec<SetValuedTableau> = games
            .iter()
            .filter(|g| g.sign == -1)
            .map(|g| game_to_set_valued_tableau(&g.trace).canonical())
            .collect();
        assert_eq!(svts.len(), 1);
        assert_eq!(svts[0].rows, vec![vec![vec![1, 2]]]);
    }

    #[test]
    fn mult2_outputs() {
        // G(3,6): sigma_{2,1} * sigma_{2,1} has c = 2 on (3,2,1); three games
        // land on {2,3,4} (once), {1,3,5} (twice... as distinct games) and
        // {1,2,6}.
        let a = partition_to_subset(&p(&[2, 1]), 3, 6).unwrap();
        let games = play_all_games(&a, &a, 6, Mode::Cohomology).unwrap();
        let mut outputs: Vec<Vec<usize>> =
            games.iter().map(|g| g.subset.elems().to_vec()).collect();
        outputs.sort();
        assert_eq!(
            outputs,
            vec![vec![1, 2, 6], vec![1, 3, 5], vec![1, 3, 5], vec![2, 3, 4],]
        );
        assert_eq!(
            lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1]), 3, 6).unwrap(),
            2
        );
    }

    #[test]
    fn parked_checker_cannot_rejoin_within_its_pass() {
        // G(3,5): O_(1) * O_(1,1) = O_(2,1) + O_(1,1,1) - O_(2,1,1).  Without
        // the parked-checker restriction the checker a sub-swap leaves one row
        // short re-enters a later choice in the same pass and produces
        // spurious (2,2) and (2,2,1) terms.
        let exp = k_expansion(&p(&[1]), &p(&[1, 1]), 3, 5).unwrap();
        assert_eq!(exp.coefficient(&p(&[2, 1])), 1);
        assert_eq!(exp.coefficient(&p(&[1, 1, 1])), 1);
        assert_eq!(exp.coefficient(&p(&[2, 1, 1])), -1);
        assert_eq!(exp.terms.len(), 3);
    }

    #[test]
    fn no_game_case() {
        let a = SubsetK::new(vec![1]).unwrap();
        assert!(play_all_games(&a, &a, 2, Mode::Cohomology)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn initial_dimension() {
        // dim Y at the start is k(n-k) - |alpha| - |beta|.
        let alpha = p(&[2, 1]);
        let beta = p(&[1, 1]);
        let (k, n) = (3, 6);
        let a = partition_to_subset(&alpha, k, n).unwrap();
        let b = partition_to_subset(&beta, k, n).unwrap();
        match initial_white(&a, &b, n).unwrap() {
            InitialWhite::Config(w) => {
                let d = dim_y(&w, &BlackConfig::initial(n));
                assert_eq!(d, (k * (n - k)) as i64 - 3 - 2);
            }
            InitialWhite::NoGame => panic!(),
        }
    }

    #[test]
    fn tournament_examples() {
        // Four lines meeting a line in P^3: 2 solutions.
        let classes = vec![p(&[1]), p(&[1]), p(&[1]), p(&[1])];
        assert_eq!(tournament(&classes, 2, 4).unwrap(), 2);
        // Dual pairs always meet in one point.
        let alpha = p(&[2, 1]);
        let dual = alpha.dual(2, 3).unwrap();
        assert_eq!(tournament(&[alpha, dual], 2, 5).unwrap(), 1);
        // Dimension mismatch is rejected.
        assert!(matches!(
            tournament(&[p(&[1]), p(&[1])], 2, 4),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
