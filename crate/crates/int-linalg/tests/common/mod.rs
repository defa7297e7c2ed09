//! Shared helpers for the integration tests: independent naive oracles that
//! deliberately avoid the library's own elimination routines.

// Each test binary compiles this module separately and uses a subset of it.
#![allow(dead_code)]

use int_linalg::IntMatrix;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Cofactor-expansion determinant. Exponential; fine for the small matrices
/// used as cross-checks.
pub fn naive_determinant(m: &IntMatrix) -> BigInt {
    assert!(m.is_square());
    let n = m.rows();
    if n == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return m.at(0, 0).clone();
    }
    let mut acc = BigInt::zero();
    let rest: Vec<usize> = (1..n).collect();
    for j in 0..n {
        if m.at(0, j).is_zero() {
            continue;
        }
        let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
        let minor = m.submatrix(&rest, &cols);
        let term = m.at(0, j) * naive_determinant(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

pub fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn bigs(vs: &[i64]) -> Vec<BigInt> {
    vs.iter().map(|&v| BigInt::from(v)).collect()
}
