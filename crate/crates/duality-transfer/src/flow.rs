//! Integer flow solving against an oriented incidence matrix.

use int_linalg::IntMatrix;
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::VecDeque;

use crate::error::DualityError;
use crate::orientation::edges_of_incidence;

/// Finds an integer vector `f` with `boundary · f = demand`.
///
/// The solver zeroes every edge outside a deterministic spanning forest
/// (breadth-first from vertex 0 and then from each later unreached vertex,
/// always taking the lowest edge id), assigns the forest edges leaf-upward,
/// and verifies the result by multiplication; if the product misses the
/// demand — some component's balances do not cancel — the system has no
/// solution and [`DualityError::Infeasible`] is returned.
pub fn solve_flow(boundary: &IntMatrix, demand: &[BigInt]) -> Result<Vec<BigInt>, DualityError> {
    let n = boundary.rows();
    let m = boundary.cols();
    assert_eq!(demand.len(), n, "one demand entry per vertex row");
    let ends = edges_of_incidence(boundary)?;

    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (e, &(t, h)) in ends.iter().enumerate() {
        incident[t].push(e);
        incident[h].push(e);
    }

    // Breadth-first spanning forest, lowest edge id first; `order` records
    // discovery so that reversing it visits children before parents.
    let mut parent_edge: Vec<Option<usize>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        order.push(root);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &e in &incident[v] {
                let (t, h) = ends[e];
                let w = if v == t { h } else { t };
                if !seen[w] {
                    seen[w] = true;
                    parent_edge[w] = Some(e);
                    order.push(w);
                    queue.push_back(w);
                }
            }
        }
    }

    // Each vertex settles its remaining balance onto its parent edge.
    let mut flow = vec![BigInt::zero(); m];
    let mut residual = demand.to_vec();
    for &v in order.iter().rev() {
        if let Some(e) = parent_edge[v] {
            let (t, h) = ends[e];
            let value = if v == h {
                residual[v].clone()
            } else {
                -residual[v].clone()
            };
            let other = if v == t { h } else { t };
            // Fixing f_e consumes +f at the head and −f at the tail of e.
            if other == h {
                residual[other] -= &value;
            } else {
                residual[other] += &value;
            }
            residual[v] = BigInt::zero();
            flow[e] = value;
        }
    }

    if boundary.mul_vec(&flow) != demand {
        return Err(DualityError::Infeasible);
    }
    Ok(flow)
}
