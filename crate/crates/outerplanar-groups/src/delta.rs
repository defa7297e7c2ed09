//! Invariant-factor data of an outerplane graph, read off its weak dual tree
//! and interior-face lengths without building the graph.
//!
//! The generalized Laplacian `diag(lengths) − A(tree)` carries the whole
//! story: the k-th invariant is the gcd of the principal minors indexed by
//! the minimal loop sets of size-k 2-matchings, and consecutive quotients of
//! the sequence are the cyclic orders of the group decomposition.

use graph_core::Tree;
use int_linalg::{determinant, GroupStructure, IntMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::OuterplanarError;
use crate::matching::{ensure_enumerable, loop_set_capacity, minimal_loop_masks};

/// The matrix `diag(lengths) − A(tree)`: face lengths on the diagonal, −1 for
/// each tree adjacency.
///
/// Panics if `lengths` does not have one entry per vertex.
pub fn polygon_matrix(tree: &Tree, lengths: &[usize]) -> IntMatrix {
    let n = tree.vertex_count();
    assert_eq!(
        lengths.len(),
        n,
        "need one polygon length per tree vertex ({} for {})",
        lengths.len(),
        n
    );
    IntMatrix::from_fn(n, n, |i, j| {
        if i == j {
            BigInt::from(lengths[i] as u64)
        } else if tree.neighbors(i).binary_search(&j).is_ok() {
            -BigInt::one()
        } else {
            BigInt::zero()
        }
    })
}

/// The chain of divisors `Δ_1 | Δ_2 | … | Δ_n` of an outerplane graph, with
/// `Δ_n` equal to its spanning-tree count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaSequence {
    deltas: Vec<BigInt>,
}

impl DeltaSequence {
    /// The divisor chain, one entry per tree vertex.
    pub fn deltas(&self) -> &[BigInt] {
        &self.deltas
    }

    /// The last divisor: the determinant of the polygon matrix, which counts
    /// spanning trees of the underlying outerplane graph.
    pub fn tau(&self) -> &BigInt {
        self.deltas.last().expect("a tree has at least one vertex")
    }

    /// The abelian group with cyclic orders `Δ_1, Δ_2/Δ_1, …, Δ_n/Δ_{n−1}`.
    pub fn group(&self) -> GroupStructure {
        let mut factors = Vec::with_capacity(self.deltas.len());
        let mut previous = BigInt::one();
        for delta in &self.deltas {
            factors.push(delta / &previous);
            previous = delta.clone();
        }
        GroupStructure::from_invariant_factors(factors)
    }
}

fn validate_lengths(tree: &Tree, lengths: &[usize]) -> Result<(), OuterplanarError> {
    let n = tree.vertex_count();
    if lengths.len() != n {
        return Err(OuterplanarError::InvalidSpec(format!(
            "need one polygon length per tree vertex ({} for {})",
            lengths.len(),
            n
        )));
    }
    for (v, &k) in lengths.iter().enumerate() {
        if k < 2 {
            return Err(OuterplanarError::InvalidSpec(format!(
                "polygon length {k} at vertex {v} is below 2"
            )));
        }
        let degree = tree.degree(v);
        if k < degree {
            return Err(OuterplanarError::InvalidSpec(format!(
                "polygon length {k} at vertex {v} is below its degree {degree}"
            )));
        }
    }
    Ok(())
}

/// The divisor chain of the outerplane graph whose weak dual is `tree` with
/// interior faces of the given `lengths`.
///
/// Each length must be at least 2 and at least the degree of its vertex, or
/// no outerplane graph realizes the data.
pub fn delta_sequence(tree: &Tree, lengths: &[usize]) -> Result<DeltaSequence, OuterplanarError> {
    ensure_enumerable(tree)?;
    validate_lengths(tree, lengths)?;
    let n = tree.vertex_count();
    let matrix = polygon_matrix(tree, lengths);
    let capacity = loop_set_capacity(tree);
    let mut deltas = Vec::with_capacity(n);
    let mut previous = BigInt::one();
    for size in 1..=n {
        let mut gcd = BigInt::zero();
        for mask in minimal_loop_masks(&capacity, n, size) {
            let looped: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
            let minor = determinant(&matrix.submatrix(&looped, &looped)).abs();
            gcd = gcd.gcd(&minor);
            if gcd.is_one() {
                break;
            }
        }
        assert!(
            gcd.is_positive(),
            "principal minors of a realizable polygon matrix cannot all vanish"
        );
        assert!(
            gcd.is_multiple_of(&previous),
            "divisor chain must be a chain: {gcd} not a multiple of {previous}"
        );
        previous = gcd.clone();
        deltas.push(gcd);
    }
    Ok(DeltaSequence { deltas })
}

/// The sandpile group of the outerplane graph realizing `(tree, lengths)`,
/// straight from the divisor chain.
pub fn group_of_outerplane(
    tree: &Tree,
    lengths: &[usize],
) -> Result<GroupStructure, OuterplanarError> {
    Ok(delta_sequence(tree, lengths)?.group())
}
