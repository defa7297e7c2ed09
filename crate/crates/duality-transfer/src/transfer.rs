//! Carrying a configuration from a plane graph to its dual.
//!
//! The route: extend the configuration to a balanced demand by charging the
//! sink with the negated total, solve for an integer flow meeting that
//! demand, read the same flow on the dual edges (each dual edge crossing one
//! primal edge), and spread it back into a vertex vector on the dual.  The
//! result is equivalent to the sought configuration, and the recurrent
//! representative pins the class to its unique recurrent element.

use graph_core::{dual, PlaneGraph};
use num_bigint::BigInt;
use num_traits::Zero;
use sandpile::{Configuration, Representative, SandpileModel};

use crate::error::DualityError;
use crate::flow::solve_flow;
use crate::orientation::{incidence_matrix, right_left_orientation, Orientation};

/// Outcome of a configuration transfer.
#[derive(Debug, Clone)]
pub struct Transfer {
    /// The integer flow on the primal edges meeting the configuration's
    /// demand.
    pub flow: Vec<BigInt>,
    /// The raw vector the flow spreads onto the dual's non-sink vertices:
    /// some element of the transferred equivalence class.
    pub class_vector: Configuration,
    /// The unique recurrent element of that class, with its firing
    /// certificate.
    pub representative: Representative,
}

/// Transfers `config`, living on the sandpile model of `pg` with the given
/// `sink`, to the dual model sunk at the outer face's vertex.
pub fn transfer_config(
    pg: &PlaneGraph,
    sink: usize,
    config: &Configuration,
) -> Result<Transfer, DualityError> {
    let model = SandpileModel::new(pg.graph().clone(), sink)?;
    assert_eq!(
        config.values().len(),
        model.site_count(),
        "configuration must match the model's non-sink vertices"
    );

    // Balanced demand over all vertices: the sink absorbs the total.
    let n = pg.graph().vertex_count();
    let mut demand = vec![BigInt::zero(); n];
    let mut total = BigInt::zero();
    for (i, value) in config.values().iter().enumerate() {
        demand[model.vertex_of_site(i)] = value.clone();
        total += value;
    }
    demand[sink] = -total;

    let orientation = Orientation::forward(pg.graph());
    let boundary = incidence_matrix(pg.graph(), &orientation)?;
    let flow = solve_flow(&boundary, &demand)?;

    let dual_orientation = right_left_orientation(pg, &orientation)?;
    let dual_pg = dual(pg)?;
    let dual_boundary = incidence_matrix(dual_pg.graph(), &dual_orientation)?;
    let spread = dual_boundary.mul_vec(&flow);

    let dual_sink = pg.outer_face();
    let dual_model = SandpileModel::new(dual_pg.graph().clone(), dual_sink)?;
    let class_vector = dual_model.config(
        (0..dual_pg.graph().vertex_count())
            .filter(|&v| v != dual_sink)
            .map(|v| spread[v].clone())
            .collect(),
    );
    let representative = dual_model.recurrent_representative(&class_vector)?;
    Ok(Transfer {
        flow,
        class_vector,
        representative,
    })
}
