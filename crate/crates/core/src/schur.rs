//! Partition-level products: Schur-basis expansions driven by the game
//! engine, with stable (rectangle-free) variants and a Pieri-rule check.

use crate::board::Partition;
use crate::error::Result;
use crate::game::{expansion, Expansion, Mode};

pub type SchurExpansion = Expansion;

/// sigma_alpha * sigma_beta in H*(G(k,n)).
pub fn multiply_schur(
    alpha: &Partition,
    beta: &Partition,
    k: usize,
    n: usize,
) -> Result<SchurExpansion> {
    expansion(alpha, beta, k, n, Mode::Cohomology)
}

/// Product in a rectangle large enough that nothing is truncated, so the
/// coefficients are the universal Littlewood-Richardson numbers.
pub fn multiply_schur_stable(alpha: &Partition, beta: &Partition) -> Result<SchurExpansion> {
    let k = (alpha.len() + beta.len()).max(1);
    let width = (alpha.part(0) + beta.part(0)).max(1);
    multiply_schur(alpha, beta, k, k + width)
}

/// All partitions obtained from `alpha` by adding a horizontal strip of `p`
/// boxes, clipped to the k x width rectangle.
fn horizontal_strip_additions(
    alpha: &Partition,
    p: usize,
    k: usize,
    width: usize,
) -> Vec<Partition> {
    let mut out = vec![];
    let rows = alpha.len() + 1;
    // additions[i] boxes appended to row i
    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        rows: usize,
        left: usize,
        alpha: &Partition,
        k: usize,
        width: usize,
        acc: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if i == rows {
            if left == 0 {
                let parts: Vec<usize> = (0..rows).map(|r| alpha.part(r) + acc[r]).collect();
                if let Ok(p) = Partition::new(parts) {
                    if p.fits(k, width) {
                        out.push(p);
                    }
                }
            }
            return;
        }
        // A horizontal strip: row i may grow at most to the length row i-1
        // had *before* growing.
        let cap = if i == 0 { width } else { alpha.part(i - 1) };
        let lo = alpha.part(i);
        for add in 0..=left {
            if lo + add > cap {
                break;
            }
            acc[i] = add;
            rec(i + 1, rows, left - add, alpha, k, width, acc, out);
            acc[i] = 0;
        }
    }
    let mut acc = vec![0; rows];
    rec(0, rows, p, alpha, k, width, &mut acc, &mut out);
    out.retain(|q| q.len() <= k);
    out.sort();
    out.dedup();
    out
}

/// Check the Pieri rule: sigma_alpha * sigma_(p) must be the multiplicity-one
/// sum over horizontal-strip additions of p boxes inside the rectangle.
pub fn pieri_check(alpha: &Partition, p: usize, k: usize, n: usize) -> Result<bool> {
    let row = Partition::new(vec![p])?;
    let exp = multiply_schur(alpha, &row, k, n)?;
    let mut expected = horizontal_strip_additions(alpha, p, k, n - k);
    expected.sort();
    let mut got: Vec<Partition> = exp
        .terms
        .iter()
        .filter(|&(_, &c)| c != 0)
        .map(|(q, _)| q.clone())
        .collect();
    got.sort();
    let multiplicity_one = exp.terms.values().all(|&c| c == 1);
    Ok(multiplicity_one && got == expected)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn stable_product_classic() {
        let exp = multiply_schur_stable(&p(&[2, 1]), &p(&[2, 1])).unwrap();
        assert_eq!(exp.coefficient(&p(&[3, 2, 1])), 2);
        assert_eq!(exp.coefficient(&p(&[2, 2, 1, 1])), 1);
        assert_eq!(exp.coefficient(&p(&[4, 2])), 1);
        // Sum of coefficients for (2,1)^2 is 8.
        let total: i64 = exp.terms.values().sum();
        assert_eq!(total, 8);
    }

    #[test]
    fn pieri_small() {
        for palpha in Partition::all_in_rectangle(2, 2) {
            for q in 1..=2 {
                assert!(pieri_check(&palpha, q, 2, 4).unwrap());
            }
        }
    }
}
