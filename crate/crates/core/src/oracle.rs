//! Independent tableau-based computations used to cross-check the games and
//! puzzles.
//!
//! Cohomology: classical Littlewood-Richardson fillings of a skew shape
//! (semistandard, content beta, reverse reading word a lattice word).
//!
//! K-theory: coefficients of products of stable Grothendieck polynomials,
//! computed straight from their set-valued-tableau generating function and
//! linear algebra in the polynomial ring.  This route shares no code with the
//! game engine or the puzzle enumerator.

use crate::board::Partition;
use crate::tableau::Tableau;
use std::collections::{BTreeMap, HashMap};

/// A filling of the cells of `outer/inner`; `entries[i][j]` fills the cell in
/// row i at column `inner_i + j` (0-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewTableau {
    pub outer: Partition,
    pub inner: Partition,
    pub entries: Vec<Vec<usize>>,
}

/// All LR fillings of gamma/alpha with content beta.
pub fn lr_tableaux(gamma: &Partition, alpha: &Partition, beta: &Partition) -> Vec<SkewTableau> {
    let mut out = vec![];
    if !gamma.contains(alpha) {
        return out;
    }
    let cells: usize = gamma.size() - alpha.size();
    if cells != beta.size() {
        return out;
    }
    let rows = gamma.len();
    let letters = beta.len();
    if cells == 0 {
        out.push(SkewTableau {
            outer: gamma.clone(),
            inner: alpha.clone(),
            entries: vec![vec![]; rows],
        });
        return out;
    }

    // grid[i][j] = entry at (row i, col j), 0 when empty/absent.
    let width = gamma.part(0);
    let mut grid = vec![vec![0usize; width]; rows];
    let mut counts = vec![0usize; letters + 1];

    // Reading order: rows top to bottom, cells right to left.
    let mut order: Vec<(usize, usize)> = vec![];
    for i in 0..rows {
        let (lo, hi) = (alpha.part(i), gamma.part(i));
        for j in (lo..hi).rev() {
            order.push((i, j));
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn rec(
        pos: usize,
        order: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        counts: &mut Vec<usize>,
        gamma: &Partition,
        alpha: &Partition,
        beta: &Partition,
        out: &mut Vec<SkewTableau>,
    ) {
        if pos == order.len() {
            let entries = (0..gamma.len())
                .map(|i| grid[i][alpha.part(i)..gamma.part(i)].to_vec())
                .collect();
            out.push(SkewTableau {
                outer: gamma.clone(),
                inner: alpha.clone(),
                entries,
            });
            return;
        }
        let (i, j) = order[pos];
        for e in 1..=beta.len() {
            if counts[e] >= beta.part(e - 1) {
                continue;
            }
            // Lattice: after placing e, #(e-1) must still be >= #e.
            if e > 1 && counts[e - 1] <= counts[e] {
                continue;
            }
            // Row: weakly increasing left to right (right neighbour is filled).
            if j + 1 < gamma.part(i) && e > grid[i][j + 1] {
                continue;
            }
            // Column: strictly increasing downward (cell above is filled when
            // it belongs to the shape).
            if i > 0 && j >= alpha.part(i - 1) && j < gamma.part(i - 1) && grid[i - 1][j] >= e {
                continue;
            }
            grid[i][j] = e;
            counts[e] += 1;
            rec(pos + 1, order, grid, counts, gamma, alpha, beta, out);
            counts[e] -= 1;
            grid[i][j] = 0;
        }
    }

    rec(
        0,
        &order,
        &mut grid,
        &mut counts,
        gamma,
        alpha,
        beta,
        &mut out,
    );
    out
}

pub fn count_lr_tableaux(gamma: &Partition, alpha: &Partition, beta: &Partition) -> u64 {
    lr_tableaux(gamma, alpha, beta).len() as u64
}

/// Companion form of an LR filling: row e of the result lists the (1-based)
/// rows of the cells containing e, sorted.  This is the shape the game
/// recorder produces (an entry r in row c for each dagger), so equality of
/// tableau sets is checked in this common form.
pub fn companion(skew: &SkewTableau) -> Tableau {
    let mut t = Tableau::new();
    for (i, row) in skew.entries.iter().enumerate() {
        for &e in row {
            t.push(e, i + 1);
        }
    }
    t.canonical()
}

// ---------------------------------------------------------------------------
// Symmetric-polynomial route (used for K-theory, and as a second independent
// cohomology check).
// ---------------------------------------------------------------------------

/// Sparse polynomial in m variables: exponent vector -> coefficient.
type Poly = HashMap<Vec<u8>, i64>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out: Poly = HashMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u8> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let v = out.entry(e).or_insert(0);
            *v += ca * cb;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

fn poly_sub_scaled(p: &mut Poly, q: &Poly, c: i64) {
    for (e, v) in q {
        let entry = p.entry(e.clone()).or_insert(0);
        *entry -= c * v;
    }
    p.retain(|_, v| *v != 0);
}

/// Stable Grothendieck polynomial G_lambda in m variables: the signed
/// generating function of set-valued semistandard tableaux of shape lambda
/// with entries in {1..m}.  Its lowest-degree part is the Schur polynomial.
fn grothendieck_poly(lambda: &Partition, m: usize) -> Poly {
    let mut out: Poly = HashMap::new();
    if lambda.len() > m {
        return out; // no fillings: columns would repeat an entry
    }
    if lambda.is_empty() {
        out.insert(vec![0; m], 1);
        return out;
    }
    // cells in row-major order with (row, col)
    let mut cells = vec![];
    for i in 0..lambda.len() {
        for j in 0..lambda.part(i) {
            cells.push((i, j));
        }
    }
    let width = lambda.part(0);
    // max of the chosen set per cell, for the semistandard constraints
    let mut max_of = vec![vec![0usize; width]; lambda.len()];
    let mut expo = vec![0u8; m];
    let size = lambda.size();

    #[allow(clippy::too_many_arguments)]
    fn rec(
        pos: usize,
        cells: &[(usize, usize)],
        m: usize,
        max_of: &mut Vec<Vec<usize>>,
        expo: &mut Vec<u8>,
        total: usize,
        size: usize,
        out: &mut Poly,
    ) {
        if pos == cells.len() {
            let sign = if (total - size).is_multiple_of(2) {
                1
            } else {
                -1
            };
            *out.entry(expo.clone()).or_insert(0) += sign;
            return;
        }
        let (i, j) = cells[pos];
        let mut lo = 1usize;
        if j > 0 {
            lo = lo.max(max_of[i][j - 1]); // row: weakly increasing
        }
        if i > 0 {
            lo = lo.max(max_of[i - 1][j] + 1); // column: strictly increasing
        }
        if lo > m {
            return;
        }
        // choose any nonempty subset of {lo..=m}
        let range: Vec<usize> = (lo..=m).collect();
        let subsets = 1usize << range.len();
        for mask in 1..subsets {
            let mut last = 0usize;
            let mut count = 0usize;
            for (b, &e) in range.iter().enumerate() {
                if mask & (1 << b) != 0 {
                    last = e;
                    count += 1;
                    expo[e - 1] += 1;
                }
            }
            max_of[i][j] = last;
            rec(pos + 1, cells, m, max_of, expo, total + count, size, out);
            for (b, &e) in range.iter().enumerate() {
                if mask & (1 << b) != 0 {
                    expo[e - 1] -= 1;
                }
            }
        }
    }

    rec(0, &cells, m, &mut max_of, &mut expo, 0, size, &mut out);
    out
}

/// Schur polynomial: the degree-|lambda| part of G_lambda.
fn schur_poly(lambda: &Partition, m: usize) -> Poly {
    let d = lambda.size() as u32;
    let mut g = grothendieck_poly(lambda, m);
    g.retain(|e, _| e.iter().map(|&x| x as u32).sum::<u32>() == d);
    g
}

fn partitions_of(d: usize, max_parts: usize) -> Vec<Partition> {
    // lex-descending: a linear extension of dominance order from the top.
    let mut out = vec![];
    fn rec(
        rem: usize,
        cap: usize,
        slots: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if rem == 0 {
            out.push(Partition::new(prefix.clone()).unwrap());
            return;
        }
        if slots == 0 {
            return;
        }
        for next in (1..=cap.min(rem)).rev() {
            prefix.push(next);
            rec(rem - next, next, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    rec(d, d, max_parts, &mut vec![], &mut out);
    out
}

fn min_degree(p: &Poly) -> Option<usize> {
    p.keys()
        .map(|e| e.iter().map(|&x| x as usize).sum::<usize>())
        .min()
}

fn coeff_of_partition(p: &Poly, nu: &Partition, m: usize) -> i64 {
    let mut e = vec![0u8; m];
    for (i, &part) in nu.parts().iter().enumerate() {
        e[i] = part as u8;
    }
    p.get(&e).copied().unwrap_or(0)
}

/// Expand a symmetric polynomial in the G_nu basis.  Works degree by degree:
/// within a degree, coefficients are read off monomials x^nu in a linear
/// extension of dominance order, then c * G_nu is subtracted (its tail
/// corrects higher degrees).
fn expand_in_g_basis(mut p: Poly, m: usize) -> BTreeMap<Partition, i64> {
    let mut result = BTreeMap::new();
    let mut cache: HashMap<Partition, Poly> = HashMap::new();
    while let Some(d) = min_degree(&p) {
        for nu in partitions_of(d, m) {
            let c = coeff_of_partition(&p, &nu, m);
            if c != 0 {
                let g = cache
                    .entry(nu.clone())
                    .or_insert_with(|| grothendieck_poly(&nu, m))
                    .clone();
                poly_sub_scaled(&mut p, &g, c);
                result.insert(nu, c);
            }
        }
        // The whole degree-d slice is now gone.
        debug_assert!(min_degree(&p).is_none_or(|d2| d2 > d));
    }
    result
}

/// Full expansion of G_alpha * G_beta: partition -> signed coefficient.
/// Coefficients for partitions with at most `m` rows are stable in m.
pub fn k_product_expansion(
    alpha: &Partition,
    beta: &Partition,
    m: usize,
) -> BTreeMap<Partition, i64> {
    let p = poly_mul(&grothendieck_poly(alpha, m), &grothendieck_poly(beta, m));
    expand_in_g_basis(p, m)
}

/// Signed count of set-valued LR tableaux: the coefficient of the gamma term
/// in the product of the corresponding stable Grothendieck polynomials,
/// whose sign is (-1)^(|gamma| - |alpha| - |beta|).
pub fn count_set_valued(gamma: &Partition, alpha: &Partition, beta: &Partition) -> i64 {
    let m = gamma.len().max(alpha.len() + beta.len()).max(1);
    k_product_expansion(alpha, beta, m)
        .get(gamma)
        .copied()
        .unwrap_or(0)
}

/// Second, independent cohomology route: the coefficient of s_gamma in
/// s_alpha * s_beta, via straight polynomial algebra.
pub fn schur_product_coefficient(gamma: &Partition, alpha: &Partition, beta: &Partition) -> i64 {
    if gamma.size() != alpha.size() + beta.size() {
        return 0;
    }
    let m = gamma.len().max(alpha.len() + beta.len()).max(1);
    let mut p = poly_mul(&schur_poly(alpha, m), &schur_poly(beta, m));
    // Single homogeneous degree: peel off Schur terms top-down.
    let d = gamma.size();
    let mut result = 0;
    for nu in partitions_of(d, m) {
        let c = coeff_of_partition(&p, &nu, m);
        if c != 0 {
            if nu == *gamma {
                result = c;
                break;
            }
            poly_sub_scaled(&mut p, &schur_poly(&nu, m), c);
        }
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn pieri_counts() {
        assert_eq!(count_lr_tableaux(&p(&[2]), &p(&[1]), &p(&[1])), 1);
        assert_eq!(count_lr_tableaux(&p(&[1, 1]), &p(&[1]), &p(&[1])), 1);
        assert_eq!(count_lr_tableaux(&p(&[2, 1]), &p(&[1]), &p(&[1])), 0);
    }

    #[test]
    fn classic_two() {
        assert_eq!(
            count_lr_tableaux(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])),
            2
        );
    }

    #[test]
    fn companions_of_classic_two() {
        let mut companions: Vec<Tableau> = lr_tableaux(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1]))
            .iter()
            .map(companion)
            .collect();
        companions.sort();
        assert_eq!(companions[0].rows, vec![vec![1, 2], vec![3]]);
        assert_eq!(companions[1].rows, vec![vec![1, 3], vec![2]]);
    }

    #[test]
    fn schur_route_agrees() {
        assert_eq!(
            schur_product_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])),
            2
        );
        assert_eq!(
            schur_product_coefficient(&p(&[1, 1]), &p(&[1]), &p(&[1])),
            1
        );
        assert_eq!(schur_product_coefficient(&p(&[2]), &p(&[1]), &p(&[1])), 1);
        assert_eq!(
            schur_product_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[1])),
            0
        );
    }

    #[test]
    fn k_product_basics() {
        // G_1 * G_1 = G_2 + G_11 - G_21.
        let exp = k_product_expansion(&p(&[1]), &p(&[1]), 2);
        assert_eq!(exp.get(&p(&[2])), Some(&1));
        assert_eq!(exp.get(&p(&[1, 1])), Some(&1));
        assert_eq!(exp.get(&p(&[2, 1])), Some(&-1));
        assert_eq!(exp.len(), 3);
        assert_eq!(count_set_valued(&p(&[2, 1]), &p(&[1]), &p(&[1])), -1);
    }
}
