//! Fraction-free determinants and exact solves.

use crate::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Determinant by Bareiss fraction-free elimination.
///
/// Every intermediate value is an exact integer (a minor of the input), so
/// there is no coefficient blow-up beyond the size of the minors themselves.
/// The determinant of the empty `0 x 0` matrix is 1.
///
/// # Panics
/// Panics if the matrix is not square.
pub fn determinant(m: &IntMatrix) -> BigInt {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign_negative = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a.at(k, k).is_zero() {
            match (k + 1..n).find(|&r| !a.at(r, k).is_zero()) {
                Some(r) => {
                    a.swap_rows(k, r);
                    sign_negative = !sign_negative;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                a.set(i, j, q);
            }
            a.set(i, k, BigInt::zero());
        }
        prev = a.at(k, k).clone();
    }
    let det = a.at(n - 1, n - 1).clone();
    if sign_negative {
        -det
    } else {
        det
    }
}

/// The adjugate (transposed cofactor matrix): `m * adjugate(m) = det(m) * I`.
///
/// # Panics
/// Panics if the matrix is not square.
pub fn adjugate(m: &IntMatrix) -> IntMatrix {
    assert!(m.is_square(), "adjugate of a non-square matrix");
    let n = m.rows();
    IntMatrix::from_fn(n, n, |r, c| {
        // Cofactor C_{c,r} (note the transpose).
        let rows: Vec<usize> = (0..n).filter(|&i| i != c).collect();
        let cols: Vec<usize> = (0..n).filter(|&j| j != r).collect();
        let minor = determinant(&m.submatrix(&rows, &cols));
        if (r + c) % 2 == 0 {
            minor
        } else {
            -minor
        }
    })
}

/// Solves `a * x = b` exactly over the rationals and returns the solution if
/// it is integral, `None` otherwise (Cramer's rule on exact determinants).
///
/// # Panics
/// Panics if `a` is not square, if `b` has the wrong length, or if `a` is
/// singular (callers use this for nonsingular systems such as reduced
/// Laplacians).
pub fn solve_integer(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert!(a.is_square(), "solve requires a square matrix");
    let n = a.rows();
    assert_eq!(b.len(), n, "right-hand side has wrong length");
    let det = determinant(a);
    assert!(!det.is_zero(), "solve requires a nonsingular matrix");
    let mut x = Vec::with_capacity(n);
    for col in 0..n {
        let replaced = IntMatrix::from_fn(n, n, |r, c| {
            if c == col {
                b[r].clone()
            } else {
                a.at(r, c).clone()
            }
        });
        let num = determinant(&replaced);
        let (q, r) = num.div_rem(&det);
        if !r.is_zero() {
            return None;
        }
        x.push(q);
    }
    Some(x)
}
