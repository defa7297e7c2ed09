//! Exhaustive checks over all stable piles: counting recurrent ones and
//! finding the best stable pile in a class by brute force. These walk the
//! full product of per-site ranges, so they guard against large state spaces.

use crate::{Configuration, Representative, SandpileError, SandpileModel};
use int_linalg::{adjugate, determinant};
use num_bigint::BigInt;
use num_traits::Zero;

/// Default cap on the number of stable piles the exhaustive walks will visit.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 4_000_000;

/// Number of stable piles, or an error if it exceeds `bound`.
fn checked_state_count(m: &SandpileModel, bound: u64) -> Result<u64, SandpileError> {
    let mut count: u64 = 1;
    for i in 0..m.site_count() {
        count = count
            .checked_mul(m.site_degree(i) as u64)
            .filter(|&c| c <= bound)
            .ok_or_else(|| {
                SandpileError::EnumerationBound(format!(
                    "more than {bound} stable piles to visit"
                ))
            })?;
    }
    Ok(count)
}

/// Walks every stable pile in lexicographic order, invoking `visit` with the
/// chip counts.
fn each_stable(
    m: &SandpileModel,
    bound: u64,
    mut visit: impl FnMut(&[u64]),
) -> Result<(), SandpileError> {
    checked_state_count(m, bound)?;
    let k = m.site_count();
    let mut counters = vec![0u64; k];
    loop {
        visit(&counters);
        // Odometer step; the last site varies fastest.
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            counters[i] += 1;
            if counters[i] < m.site_degree(i) as u64 {
                break;
            }
            counters[i] = 0;
        }
    }
}

/// All stable piles, in lexicographic order. Errors out if there would be
/// more than `bound`.
pub fn stable_configurations(
    m: &SandpileModel,
    bound: u64,
) -> Result<Vec<Configuration>, SandpileError> {
    let mut out = Vec::new();
    each_stable(m, bound, |counters| {
        out.push(m.config(counters.iter().map(|&x| BigInt::from(x)).collect()));
    })?;
    Ok(out)
}

/// Counts the recurrent piles by running the burning test on every stable
/// one. Agrees with the model's group order.
pub fn recurrent_count(m: &SandpileModel) -> Result<u64, SandpileError> {
    let mut count = 0u64;
    let mut failure = None;
    each_stable(m, DEFAULT_ENUMERATION_BOUND, |counters| {
        if failure.is_some() {
            return;
        }
        let pile = m.config(counters.iter().map(|&x| BigInt::from(x)).collect());
        match m.is_recurrent(&pile) {
            Ok(true) => count += 1,
            Ok(false) => {}
            Err(e) => failure = Some(e),
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(count),
    }
}

/// Finds, among all stable piles in the same class as `c` (differing from it
/// by the reduced Laplacian's column space), the one whose certificate has
/// the largest coordinate sum. That maximizer is the class's recurrent pile,
/// so this is an independent route to [`SandpileModel::recurrent_representative`].
pub fn extremal_equivalent_stable(
    m: &SandpileModel,
    c: &Configuration,
) -> Result<Representative, SandpileError> {
    let l = m.reduced_laplacian();
    let tau = determinant(&l);
    let adj = adjugate(&l);
    let mut best: Option<(BigInt, Vec<u64>, Vec<BigInt>)> = None;
    each_stable(m, DEFAULT_ENUMERATION_BOUND, |counters| {
        // x = L^{-1} (t - c) must be integral: test via adjugate and tau.
        let diff: Vec<BigInt> = counters
            .iter()
            .zip(c.values())
            .map(|(&t, v)| BigInt::from(t) - v)
            .collect();
        let scaled = adj.mul_vec(&diff);
        if !scaled.iter().all(|y| (y % &tau).is_zero()) {
            return;
        }
        let x: Vec<BigInt> = scaled.into_iter().map(|y| y / &tau).collect();
        let score: BigInt = x.iter().sum();
        let better = match &best {
            None => true,
            Some((s, _, _)) => score > *s,
        };
        if better {
            best = Some((score, counters.to_vec(), x));
        }
    })?;
    let (_, counters, certificate) =
        best.expect("every class contains at least one stable pile");
    Ok(Representative {
        config: m.config(counters.into_iter().map(BigInt::from).collect()),
        certificate,
    })
}
