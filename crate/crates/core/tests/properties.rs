//! Randomized structural properties, cross-checking the conversion helpers,
//! the game engine, and the puzzle enumerator against each other.

use lrcheckers::board::{partition_to_subset, subset_to_partition, SubsetK};
use lrcheckers::game::{expansion, Mode};
use lrcheckers::puzzles::{puzzle_counts, subset_to_boundary, PuzzleMode};
use proptest::prelude::*;

/// A random (k, n) pair with 1 <= k < n <= 7.
fn dims() -> impl Strategy<Value = (usize, usize)> {
    (2usize..=7).prop_flat_map(|n| (1usize..n, Just(n)))
}

/// A random k-subset of {1..n} for the given dimensions.
fn subset(k: usize, n: usize) -> impl Strategy<Value = SubsetK> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(move |mut v| {
            v.truncate(k);
            SubsetK::new(v).unwrap()
        })
}

fn problem() -> impl Strategy<Value = (usize, usize, SubsetK, SubsetK)> {
    dims().prop_flat_map(|(k, n)| (subset(k, n), subset(k, n)).prop_map(move |(a, b)| (k, n, a, b)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// subset -> partition -> subset is the identity, and the partition fits
    /// the k x (n-k) rectangle.
    #[test]
    fn subset_partition_roundtrip((k, n, a, _b) in problem()) {
        let p = subset_to_partition(&a, k, n).unwrap();
        prop_assert!(p.fits(k, n - k));
        let back = partition_to_subset(&p, k, n).unwrap();
        prop_assert_eq!(back, a);
    }

    /// Dualizing twice within the rectangle is the identity.
    #[test]
    fn dual_is_an_involution((k, n, a, _b) in problem()) {
        let p = subset_to_partition(&a, k, n).unwrap();
        let dd = p.dual(k, n - k).unwrap().dual(k, n - k).unwrap();
        prop_assert_eq!(dd, p);
    }

    /// Cohomology expansions are homogeneous: every output partition has size
    /// |alpha| + |beta|, and all coefficients are positive.
    #[test]
    fn cohomology_expansion_is_homogeneous((k, n, a, b) in problem()) {
        let alpha = subset_to_partition(&a, k, n).unwrap();
        let beta = subset_to_partition(&b, k, n).unwrap();
        let exp = expansion(&alpha, &beta, k, n, Mode::Cohomology).unwrap();
        for (gamma, c) in &exp.terms {
            prop_assert!(*c > 0);
            prop_assert_eq!(gamma.size(), alpha.size() + beta.size());
        }
    }

    /// K-theory expansions start at degree |alpha| + |beta|, their
    /// degree-matching layer equals the cohomology expansion, and each
    /// coefficient has sign (-1)^(|gamma| - |alpha| - |beta|).
    #[test]
    fn k_expansion_extends_cohomology((k, n, a, b) in problem()) {
        let alpha = subset_to_partition(&a, k, n).unwrap();
        let beta = subset_to_partition(&b, k, n).unwrap();
        let coh = expansion(&alpha, &beta, k, n, Mode::Cohomology).unwrap();
        let kt = expansion(&alpha, &beta, k, n, Mode::KTheory).unwrap();
        let base = alpha.size() + beta.size();
        for (gamma, c) in &kt.terms {
            prop_assert!(gamma.size() >= base);
            let parity = if (gamma.size() - base).is_multiple_of(2) { 1 } else { -1 };
            prop_assert!(c.signum() == parity);
            if gamma.size() == base {
                prop_assert_eq!(*c, coh.coefficient(gamma));
            }
        }
        for (gamma, c) in &coh.terms {
            prop_assert_eq!(*c, kt.coefficient(gamma));
        }
    }

    /// Commutativity of the game rule, in both modes.
    #[test]
    fn expansion_commutes((k, n, a, b) in problem()) {
        let alpha = subset_to_partition(&a, k, n).unwrap();
        let beta = subset_to_partition(&b, k, n).unwrap();
        for mode in [Mode::Cohomology, Mode::KTheory] {
            let ab = expansion(&alpha, &beta, k, n, mode).unwrap();
            let ba = expansion(&beta, &alpha, k, n, mode).unwrap();
            prop_assert_eq!(ab.terms, ba.terms);
        }
    }

    /// Puzzle boundaries conserve 1-edges: every puzzle's bottom side has
    /// exactly k ones, and signed K counts refine the cohomology counts.
    #[test]
    fn puzzle_boundaries_conserve_ones((k, n, a, b) in problem()) {
        let counts = puzzle_counts(&a, &b, n, PuzzleMode::Cohomology).unwrap();
        for gamma in counts.by_gamma.keys() {
            prop_assert_eq!(gamma.iter().filter(|&&x| x == 1).count(), k);
        }
        let kcounts = puzzle_counts(&a, &b, n, PuzzleMode::KTheory).unwrap();
        for (gamma, (count, _)) in &counts.by_gamma {
            // Degree-matching gammas keep their unsigned count in K mode.
            let (kc, ks) = kcounts.by_gamma.get(gamma).copied().unwrap_or((0, 0));
            prop_assert!(kc >= *count);
            let _ = ks;
        }
    }

    /// Games and puzzles agree, per bottom boundary, in both modes.
    #[test]
    fn games_match_puzzles((k, n, a, b) in problem()) {
        use std::collections::BTreeMap;
        use lrcheckers::game::play_all_games;
        let _ = k;
        for (mode, pmode) in [
            (Mode::Cohomology, PuzzleMode::Cohomology),
            (Mode::KTheory, PuzzleMode::KTheory),
        ] {
            let mut by: BTreeMap<Vec<u8>, i64> = BTreeMap::new();
            for g in play_all_games(&a, &b, n, mode).unwrap() {
                *by.entry(subset_to_boundary(&g.subset, n)).or_default() += g.sign;
            }
            by.retain(|_, v| *v != 0);
            let counts = puzzle_counts(&a, &b, n, pmode).unwrap();
            let puzzles: BTreeMap<Vec<u8>, i64> = counts
                .by_gamma
                .iter()
                .map(|(g, &(_, signed))| (g.clone(), signed))
                .filter(|(_, s)| *s != 0)
                .collect();
            prop_assert_eq!(by, puzzles);
        }
    }
}
