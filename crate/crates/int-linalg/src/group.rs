//! Finite abelian groups in invariant-factor form.

use crate::{smith_normal_form, IntMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use std::fmt;

/// A finite abelian group `Z_{d_1} + Z_{d_2} + ...` with `d_1 | d_2 | ...`
/// and every `d_i >= 2` (trivial cyclic factors are dropped).
#[derive(Clone, PartialEq, Eq)]
pub struct GroupStructure {
    invariant_factors: Vec<BigInt>,
    order: BigInt,
}

impl GroupStructure {
    /// The trivial group.
    pub fn trivial() -> Self {
        GroupStructure {
            invariant_factors: Vec::new(),
            order: BigInt::one(),
        }
    }

    /// Normalizes a divisibility chain into a group: factors equal to 1 are
    /// dropped, the rest are kept in order.
    ///
    /// # Panics
    /// Panics if a factor is nonpositive or the divisibility chain is broken;
    /// callers pass invariant factors from a Smith normal form or quantities
    /// proved to form a chain.
    pub fn from_invariant_factors(factors: impl IntoIterator<Item = BigInt>) -> Self {
        let mut kept = Vec::new();
        let mut order = BigInt::one();
        for d in factors {
            assert!(d > BigInt::ZERO, "nonpositive invariant factor {d}");
            if let Some(prev) = kept.last() {
                assert!(
                    d.is_multiple_of(prev),
                    "broken divisibility chain: {prev} does not divide {d}"
                );
            }
            if d.is_one() {
                continue;
            }
            order *= &d;
            kept.push(d);
        }
        GroupStructure {
            invariant_factors: kept,
            order,
        }
    }

    /// The invariant factors, all `>= 2`, in divisibility order.
    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    /// The group order (product of the invariant factors; 1 for trivial).
    pub fn order(&self) -> &BigInt {
        &self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// Cyclic means at most one invariant factor.
    pub fn is_cyclic(&self) -> bool {
        self.invariant_factors.len() <= 1
    }
}

impl fmt::Display for GroupStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "trivial");
        }
        for (i, d) in self.invariant_factors.iter().enumerate() {
            if i > 0 {
                write!(f, " \u{2295} ")?;
            }
            write!(f, "Z_{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GroupStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupStructure({self})")
    }
}

/// The torsion part of the cokernel of an integer matrix: `Z^rows / im(M)`
/// with any free summands discarded, presented in invariant-factor form.
pub fn cokernel_torsion(m: &IntMatrix) -> GroupStructure {
    let snf = smith_normal_form(m);
    GroupStructure::from_invariant_factors(snf.invariant_factors)
}
