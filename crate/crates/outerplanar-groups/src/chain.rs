//! Polygon chains: polygons glued edge-to-edge along a path, whose
//! spanning-tree counts follow a three-term recurrence and whose sandpile
//! groups are always cyclic.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::OuterplanarError;

/// Largest chain the subset-sum route will expand; the recurrence has no
/// such limit.
pub const MAX_MATCHING_POLYGONS: usize = 20;

/// A chain of polygons described by their side counts, first to last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonChainSpec {
    lengths: Vec<usize>,
}

impl PolygonChainSpec {
    /// Wraps a side-count sequence; every polygon needs at least 2 sides and
    /// the chain at least one polygon.
    pub fn new(lengths: Vec<usize>) -> Result<Self, OuterplanarError> {
        if lengths.is_empty() {
            return Err(OuterplanarError::InvalidSpec(
                "a chain needs at least one polygon".to_string(),
            ));
        }
        if let Some(&k) = lengths.iter().find(|&&k| k < 2) {
            return Err(OuterplanarError::InvalidSpec(format!(
                "polygon length {k} is below 2"
            )));
        }
        Ok(PolygonChainSpec { lengths })
    }

    /// Reads either a comma list of side counts (`"3,4,5"`) or a uniform
    /// shorthand `"<k>x<n>"` (`"4x5"` = five squares).
    pub fn parse(text: &str) -> Result<Self, OuterplanarError> {
        let text = text.trim();
        if text.is_empty() {
            return Err(OuterplanarError::Parse("empty chain spec".to_string()));
        }
        if let Some((sides, count)) = text.split_once('x') {
            let sides: usize = sides.trim().parse().map_err(|_| {
                OuterplanarError::Parse(format!("bad side count {:?}", sides.trim()))
            })?;
            let count: usize = count.trim().parse().map_err(|_| {
                OuterplanarError::Parse(format!("bad polygon count {:?}", count.trim()))
            })?;
            return PolygonChainSpec::new(vec![sides; count]);
        }
        let lengths = text
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<usize>()
                    .map_err(|_| OuterplanarError::Parse(format!("bad side count {:?}", part.trim())))
            })
            .collect::<Result<Vec<usize>, _>>()?;
        PolygonChainSpec::new(lengths)
    }

    /// Side counts, first polygon to last.
    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    /// Number of polygons in the chain.
    pub fn polygon_count(&self) -> usize {
        self.lengths.len()
    }
}

/// Spanning-tree count of the chain via the recurrence
/// `τ_i = k_i·τ_{i−1} − τ_{i−2}` with `τ_0 = 1`, `τ_{−1} = 0`.
pub fn tau_polygon_chain(spec: &PolygonChainSpec) -> BigInt {
    chain_tau_recurrence(spec.lengths())
}

pub(crate) fn chain_tau_recurrence(lengths: &[usize]) -> BigInt {
    let mut before = BigInt::zero();
    let mut current = BigInt::one();
    for &k in lengths {
        let next = BigInt::from(k as u64) * &current - &before;
        before = current;
        current = next;
    }
    current
}

/// Spanning-tree count of the chain as a signed sum over matchings of the
/// gluing path: each matching `μ` contributes `(−1)^{|μ|}` times the product
/// of the side counts of the polygons it leaves uncovered.
pub fn tau_polygon_chain_by_matchings(
    spec: &PolygonChainSpec,
) -> Result<BigInt, OuterplanarError> {
    let n = spec.polygon_count();
    if n > MAX_MATCHING_POLYGONS {
        return Err(OuterplanarError::EnumerationBound(format!(
            "chains beyond {MAX_MATCHING_POLYGONS} polygons are not expanded over matchings (got {n})"
        )));
    }
    let lengths = spec.lengths();
    let mut total = BigInt::zero();
    // Path edge i joins polygons i and i+1; a subset is a matching exactly
    // when no two chosen edges are consecutive.
    for subset in 0..1u32 << (n - 1) {
        if subset & (subset >> 1) != 0 {
            continue;
        }
        let mut term = BigInt::one();
        for (v, &k) in lengths.iter().enumerate() {
            let covered = (v < n - 1 && subset & (1 << v) != 0)
                || (v > 0 && subset & (1 << (v - 1)) != 0);
            if !covered {
                term *= BigInt::from(k as u64);
            }
        }
        if subset.count_ones() % 2 == 1 {
            total -= term;
        } else {
            total += term;
        }
    }
    Ok(total)
}

/// Closed form for the uniform chain of `n` polygons with `k` sides each:
/// the alternating binomial sum `Σ_i (−1)^i·C(n−i, i)·k^(n−2i)`.
pub fn ladder_tau_binomial(sides: usize, polygons: usize) -> BigInt {
    let k = BigInt::from(sides as u64);
    let mut total = BigInt::zero();
    for i in 0..=polygons / 2 {
        let term = binomial(polygons - i, i) * k.pow((polygons - 2 * i) as u32);
        if i % 2 == 1 {
            total -= term;
        } else {
            total += term;
        }
    }
    total
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut value = BigInt::one();
    for i in 0..k {
        value = value * BigInt::from((n - i) as u64) / BigInt::from((i + 1) as u64);
    }
    value
}
