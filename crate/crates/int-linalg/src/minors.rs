//! Determinantal divisors: gcds of all minors of a fixed size.

use crate::{determinant, IntMatrix};
use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Gcd of all `k x k` minors (the k-th determinantal divisor).
///
/// Conventions: `k = 0` gives 1 (the empty minor); if every `k x k` minor
/// vanishes the result is 0. Stops early once the running gcd reaches 1.
///
/// # Panics
/// Panics if `k` exceeds `min(rows, cols)`.
pub fn minor_gcd(m: &IntMatrix, k: usize) -> BigInt {
    assert!(
        k <= m.rows().min(m.cols()),
        "minor size {k} exceeds matrix shape {}x{}",
        m.rows(),
        m.cols()
    );
    if k == 0 {
        return BigInt::one();
    }
    let mut acc = BigInt::zero();
    for rows in (0..m.rows()).combinations(k) {
        for cols in (0..m.cols()).combinations(k) {
            let d = determinant(&m.submatrix(&rows, &cols));
            acc = acc.gcd(&d);
            if acc.is_one() {
                return acc;
            }
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_divisor_is_entry_gcd() {
        let m = IntMatrix::from_i64_rows(&[vec![6, 10], vec![15, 4]]);
        assert_eq!(minor_gcd(&m, 1), BigInt::from(1));
        let m = IntMatrix::from_i64_rows(&[vec![6, 10], vec![14, 4]]);
        assert_eq!(minor_gcd(&m, 1), BigInt::from(2));
    }
}
