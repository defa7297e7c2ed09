//! Smith normal form over the integers.

use crate::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Result of a Smith normal form computation.
///
/// `invariant_factors` are the nonzero diagonal entries `d_1 | d_2 | ...`,
/// all positive; `rank` is their count. When requested, `row_transform` (U)
/// and `col_transform` (V) are unimodular with `U * M * V` equal to the
/// diagonal matrix of invariant factors padded with zeros.
#[derive(Debug, Clone)]
pub struct SnfResult {
    pub invariant_factors: Vec<BigInt>,
    pub rank: usize,
    pub row_transform: Option<IntMatrix>,
    pub col_transform: Option<IntMatrix>,
}

/// Smith normal form without transforms.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    snf_impl(m, false)
}

/// Smith normal form carrying the unimodular row and column transforms.
pub fn smith_normal_form_with_transforms(m: &IntMatrix) -> SnfResult {
    snf_impl(m, true)
}

fn snf_impl(m: &IntMatrix, want_transforms: bool) -> SnfResult {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.clone();
    let mut u = want_transforms.then(|| IntMatrix::identity(rows));
    let mut v = want_transforms.then(|| IntMatrix::identity(cols));

    let mut t = 0;
    while t < rows.min(cols) {
        // Move a nonzero entry of smallest magnitude in the trailing
        // submatrix to the pivot position; smallest-first keeps the division
        // chains short.
        let Some((pr, pc)) = smallest_nonzero(&a, t) else {
            break; // trailing submatrix is zero
        };
        a.swap_rows(t, pr);
        a.swap_cols(t, pc);
        if let Some(u) = u.as_mut() {
            u.swap_rows(t, pr);
        }
        if let Some(v) = v.as_mut() {
            v.swap_cols(t, pc);
        }

        'reduce: loop {
            // Clear the pivot column with division steps; a nonzero
            // remainder becomes the new, strictly smaller pivot.
            for i in t + 1..rows {
                if a.at(i, t).is_zero() {
                    continue;
                }
                let q = -(a.at(i, t) / a.at(t, t));
                a.add_row_multiple(i, t, &q);
                if let Some(u) = u.as_mut() {
                    u.add_row_multiple(i, t, &q);
                }
                if !a.at(i, t).is_zero() {
                    a.swap_rows(t, i);
                    if let Some(u) = u.as_mut() {
                        u.swap_rows(t, i);
                    }
                    continue 'reduce;
                }
            }
            for j in t + 1..cols {
                if a.at(t, j).is_zero() {
                    continue;
                }
                let q = -(a.at(t, j) / a.at(t, t));
                a.add_col_multiple(j, t, &q);
                if let Some(v) = v.as_mut() {
                    v.add_col_multiple(j, t, &q);
                }
                if !a.at(t, j).is_zero() {
                    a.swap_cols(t, j);
                    if let Some(v) = v.as_mut() {
                        v.swap_cols(t, j);
                    }
                    continue 'reduce;
                }
            }
            // Pivot row and column are clear. Enforce that the pivot divides
            // the whole trailing submatrix so the diagonal comes out as a
            // divisibility chain.
            match find_nondivisible(&a, t) {
                None => break 'reduce,
                Some(i) => {
                    let one = BigInt::from(1);
                    a.add_row_multiple(t, i, &one);
                    if let Some(u) = u.as_mut() {
                        u.add_row_multiple(t, i, &one);
                    }
                }
            }
        }

        if a.at(t, t).is_negative() {
            a.negate_row(t);
            if let Some(u) = u.as_mut() {
                u.negate_row(t);
            }
        }
        t += 1;
    }

    let invariant_factors: Vec<BigInt> = (0..t).map(|i| a.at(i, i).clone()).collect();
    SnfResult {
        rank: invariant_factors.len(),
        invariant_factors,
        row_transform: u,
        col_transform: v,
    }
}

/// Position of a nonzero entry of minimal absolute value in the trailing
/// submatrix starting at `(t, t)`, if any.
fn smallest_nonzero(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            if a.at(i, j).is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if a.at(bi, bj).abs() <= a.at(i, j).abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// A row `i > t` containing an entry not divisible by the pivot `a[t][t]`.
fn find_nondivisible(a: &IntMatrix, t: usize) -> Option<usize> {
    let pivot = a.at(t, t);
    for i in t + 1..a.rows() {
        for j in t + 1..a.cols() {
            if !a.at(i, j).is_multiple_of(pivot) {
                return Some(i);
            }
        }
    }
    None
}
