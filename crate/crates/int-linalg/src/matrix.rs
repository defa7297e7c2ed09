//! Dense integer matrices.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;
use std::str::FromStr;

/// Dense, row-major matrix of arbitrary-precision integers.
///
/// The plain text format used by [`fmt::Display`] and [`FromStr`] is a header
/// line `rows cols` followed by one whitespace-separated line per row:
///
/// ```
/// use int_linalg::IntMatrix;
/// let m: IntMatrix = "2 2\n1 2\n3 4\n".parse().unwrap();
/// assert_eq!(m.to_string(), "2 2\n1 2\n3 4\n");
/// ```
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    /// All-zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    /// The `n x n` identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix by evaluating `f(row, col)` at every position.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        IntMatrix { rows, cols, entries }
    }

    /// Builds a matrix from machine-integer rows.
    ///
    /// # Panics
    /// Panics if the rows have unequal lengths.
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
        }
        IntMatrix::from_fn(rows.len(), cols, |r, c| BigInt::from(rows[r][c]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Borrow the entry at `(r, c)`.
    ///
    /// # Panics
    /// Panics if the position is out of range.
    pub fn at(&self, r: usize, c: usize) -> &BigInt {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        &self.entries[r * self.cols + c]
    }

    /// Overwrite the entry at `(r, c)`.
    ///
    /// # Panics
    /// Panics if the position is out of range.
    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        self.entries[r * self.cols + c] = v;
    }

    /// The submatrix selecting the given rows and columns, in the given order.
    ///
    /// # Panics
    /// Panics if any index is out of range.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        IntMatrix::from_fn(rows.len(), cols.len(), |r, c| self.at(rows[r], cols[c]).clone())
    }

    /// Matrix product `self * other`.
    ///
    /// # Panics
    /// Panics on a shape mismatch.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        IntMatrix::from_fn(self.rows, other.cols, |r, c| {
            (0..self.cols).map(|k| self.at(r, k) * other.at(k, c)).sum()
        })
    }

    /// Matrix-vector product `self * v`.
    ///
    /// # Panics
    /// Panics if `v` has the wrong length.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "shape mismatch in matrix-vector product");
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.at(r, c) * &v[c]).sum())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        IntMatrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[target] += factor * row[source]
    pub(crate) fn add_row_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let add = factor * &self.entries[source * self.cols + c];
            self.entries[target * self.cols + c] += add;
        }
    }

    /// col[target] += factor * col[source]
    pub(crate) fn add_col_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let add = factor * &self.entries[r * self.cols + source];
            self.entries[r * self.cols + target] += add;
        }
    }

    pub(crate) fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = std::mem::take(&mut self.entries[r * self.cols + c]);
            self.entries[r * self.cols + c] = -v;
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.rows, self.cols)?;
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix({}x{})\n{}", self.rows, self.cols, self)
    }
}

/// Error produced when parsing the plain text matrix format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixParseError(pub String);

impl fmt::Display for MatrixParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "matrix parse error: {}", self.0)
    }
}

impl std::error::Error for MatrixParseError {}

impl FromStr for IntMatrix {
    type Err = MatrixParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut lines = s.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| MatrixParseError("empty input".into()))?;
        let mut dims = header.split_whitespace();
        let rows: usize = dims
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| MatrixParseError(format!("bad header line {header:?}")))?;
        let cols: usize = dims
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| MatrixParseError(format!("bad header line {header:?}")))?;
        if dims.next().is_some() {
            return Err(MatrixParseError(format!("bad header line {header:?}")));
        }
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            let line = lines
                .next()
                .ok_or_else(|| MatrixParseError(format!("missing row {r}")))?;
            let mut count = 0;
            for tok in line.split_whitespace() {
                let v: BigInt = tok
                    .parse()
                    .map_err(|_| MatrixParseError(format!("bad entry {tok:?} in row {r}")))?;
                entries.push(v);
                count += 1;
            }
            if count != cols {
                return Err(MatrixParseError(format!(
                    "row {r} has {count} entries, expected {cols}"
                )));
            }
        }
        if lines.next().is_some() {
            return Err(MatrixParseError("trailing content after last row".into()));
        }
        Ok(IntMatrix { rows, cols, entries })
    }
}
