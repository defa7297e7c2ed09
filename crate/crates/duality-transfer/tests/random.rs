//! Seeded randomized properties: incidence-column structure, uniqueness of
//! tree flows, transfer against directly computed dual identities,
//! independence from the chosen flow, and the double application of the
//! right-left rule.

mod common;

use common::example_plane_graph;
use duality_transfer::{
    incidence_matrix, right_left_orientation, solve_flow, transfer_config, Orientation,
};
use graph_core::{build_outerplane, dual, MultiGraph, PlaneGraph, Tree};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use sandpile::SandpileModel;
use std::collections::HashMap;

fn random_tree(rng: &mut StdRng, n: usize) -> Tree {
    if n == 1 {
        return Tree::from_edges(1, &[]).unwrap();
    }
    if n == 2 {
        return Tree::from_edges(2, &[(0, 1)]).unwrap();
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &code {
        degree[v] += 1;
    }
    let mut edges = Vec::new();
    let mut leaves: std::collections::BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    for &v in &code {
        let leaf = *leaves.iter().next().unwrap();
        leaves.remove(&leaf);
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.insert(v);
        }
    }
    let mut rest = leaves.into_iter();
    let (a, b) = (rest.next().unwrap(), rest.next().unwrap());
    edges.push((a, b));
    Tree::from_edges(n, &edges).unwrap()
}

fn random_outerplane(rng: &mut StdRng, max_faces: usize) -> PlaneGraph {
    let n = rng.gen_range(1..=max_faces);
    let tree = random_tree(rng, n);
    let lengths: Vec<usize> = (0..n)
        .map(|v| rng.gen_range(tree.degree(v).max(2)..=6))
        .collect();
    build_outerplane(&tree, &lengths).unwrap()
}

#[test]
fn incidence_columns_sum_to_zero() {
    let mut rng = StdRng::seed_from_u64(0x5eed_4001);
    for _ in 0..50 {
        let n = rng.gen_range(2..=8);
        let m = rng.gen_range(1..=12);
        let edges: Vec<(usize, usize)> = (0..m)
            .map(|_| {
                let u = rng.gen_range(0..n);
                let mut v = rng.gen_range(0..n);
                while v == u {
                    v = rng.gen_range(0..n);
                }
                (u, v)
            })
            .collect();
        let g = MultiGraph::new(n, edges).unwrap();
        let mut o = Orientation::forward(&g);
        for e in 0..m {
            if rng.gen_bool(0.5) {
                o = o.with_edge_reversed(e);
            }
        }
        let boundary = incidence_matrix(&g, &o).unwrap();
        for e in 0..m {
            let mut sum = BigInt::zero();
            let mut nonzero = 0;
            for v in 0..n {
                let entry = boundary.at(v, e);
                if !entry.is_zero() {
                    nonzero += 1;
                }
                sum += entry;
            }
            assert!(sum.is_zero());
            assert_eq!(nonzero, 2);
        }
    }
}

#[test]
fn tree_flows_are_unique_and_verified() {
    let mut rng = StdRng::seed_from_u64(0x5eed_4002);
    for _ in 0..40 {
        let n = rng.gen_range(2..=9);
        let tree = random_tree(&mut rng, n);
        let g = MultiGraph::new(n, tree.edges().to_vec()).unwrap();
        let mut o = Orientation::forward(&g);
        for e in 0..g.edge_count() {
            if rng.gen_bool(0.5) {
                o = o.with_edge_reversed(e);
            }
        }
        let boundary = incidence_matrix(&g, &o).unwrap();
        let mut demand: Vec<BigInt> = (1..n).map(|_| BigInt::from(rng.gen_range(-5..=5))).collect();
        let balance: BigInt = -demand.iter().sum::<BigInt>();
        demand.insert(0, balance);

        let solved = solve_flow(&boundary, &demand).unwrap();
        assert_eq!(boundary.mul_vec(&solved), demand);

        // A tree's flow is unique, so an independent leaf-stripping pass
        // must land on exactly the same values.
        let mut flow = vec![BigInt::zero(); g.edge_count()];
        let mut residual = demand.clone();
        let mut alive: Vec<bool> = vec![true; n];
        let mut remaining_degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
        let mut used = vec![false; g.edge_count()];
        for _ in 0..n - 1 {
            let leaf = (0..n)
                .find(|&v| alive[v] && remaining_degree[v] == 1)
                .unwrap();
            let e = g
                .incident_edges(leaf)
                .into_iter()
                .find(|&e| !used[e])
                .unwrap();
            let (_, head) = (o.tail(e), o.head(e));
            flow[e] = if head == leaf {
                residual[leaf].clone()
            } else {
                -residual[leaf].clone()
            };
            let other = g.other_end(e, leaf);
            let delta = residual[leaf].clone();
            residual[other] += delta;
            residual[leaf] = BigInt::zero();
            alive[leaf] = false;
            used[e] = true;
            remaining_degree[leaf] -= 1;
            remaining_degree[other] -= 1;
        }
        assert_eq!(solved, flow);
    }
}

#[test]
fn corpus_identity_transfer_matches_dual_identity() {
    let mut rng = StdRng::seed_from_u64(0x5eed_4003);
    for round in 0..12 {
        let pg = random_outerplane(&mut rng, 5);
        let model = SandpileModel::new(pg.graph().clone(), 0).unwrap();
        let identity = model.identity().unwrap();
        let transfer = transfer_config(&pg, 0, &identity).unwrap();

        let dual_pg = dual(&pg).unwrap();
        let dual_model = SandpileModel::new(dual_pg.graph().clone(), pg.outer_face()).unwrap();
        assert_eq!(
            transfer.representative.config,
            dual_model.identity().unwrap(),
            "round {round}"
        );
        assert_eq!(model.group_order(), dual_model.group_order());
    }
}

#[test]
fn alternative_flows_land_on_the_same_representative() {
    let mut rng = StdRng::seed_from_u64(0x5eed_4004);
    for round in 0..12 {
        let pg = random_outerplane(&mut rng, 4);
        let model = SandpileModel::new(pg.graph().clone(), 0).unwrap();
        let config = model.config(
            (0..model.site_count())
                .map(|i| BigInt::from(rng.gen_range(0..model.site_degree(i) as i64)))
                .collect(),
        );
        let transfer = transfer_config(&pg, 0, &config).unwrap();

        // Perturb the flow by circulations around interior faces; the
        // demand is untouched, so the class on the dual side must be too.
        let mut flow = transfer.flow.clone();
        for &f in &pg.interior_face_indices() {
            if rng.gen_bool(0.5) {
                continue;
            }
            let turns = BigInt::from(rng.gen_range(1..=2));
            for step in pg.faces()[f].walk() {
                if step.forward {
                    flow[step.edge] += &turns;
                } else {
                    flow[step.edge] -= &turns;
                }
            }
        }
        let o = Orientation::forward(pg.graph());
        let boundary = incidence_matrix(pg.graph(), &o).unwrap();
        assert_eq!(
            boundary.mul_vec(&flow),
            boundary.mul_vec(&transfer.flow),
            "round {round}: circulations must not change the demand"
        );

        let dual_pg = dual(&pg).unwrap();
        let dual_o = right_left_orientation(&pg, &o).unwrap();
        let dual_boundary = incidence_matrix(dual_pg.graph(), &dual_o).unwrap();
        let spread = dual_boundary.mul_vec(&flow);
        let dual_model = SandpileModel::new(dual_pg.graph().clone(), pg.outer_face()).unwrap();
        let class = dual_model.config(
            (0..dual_pg.graph().vertex_count())
                .filter(|&v| v != pg.outer_face())
                .map(|v| spread[v].clone())
                .collect(),
        );
        let representative = dual_model.recurrent_representative(&class).unwrap();
        assert_eq!(
            representative.config, transfer.representative.config,
            "round {round}"
        );
    }
}

#[test]
fn double_right_left_reverses_every_edge() {
    let mut rng = StdRng::seed_from_u64(0x5eed_4005);
    let mut corpus = vec![example_plane_graph()];
    while corpus.len() < 9 {
        let pg = random_outerplane(&mut rng, 5);
        // On two vertices every labeling question degenerates: both share
        // all edges, so the edge-set matching below cannot tell them apart.
        if pg.graph().vertex_count() >= 3 {
            corpus.push(pg);
        }
    }
    for pg in corpus {
        let o = Orientation::forward(pg.graph());
        let dual_o = right_left_orientation(&pg, &o).unwrap();
        let dual_pg = dual(&pg).unwrap();
        let double_o = right_left_orientation(&dual_pg, &dual_o).unwrap();

        // Faces of the dual stand for the original vertices; match them by
        // their edge sets.
        let mut vertex_of_edge_set: HashMap<Vec<usize>, usize> = HashMap::new();
        for v in 0..pg.graph().vertex_count() {
            let mut ids = pg.graph().incident_edges(v);
            ids.sort();
            vertex_of_edge_set.insert(ids, v);
        }
        let back: Vec<usize> = dual_pg
            .faces()
            .iter()
            .map(|f| {
                let mut ids = f.edge_ids();
                ids.sort();
                ids.dedup();
                *vertex_of_edge_set
                    .get(&ids)
                    .unwrap_or_else(|| panic!("no vertex with boundary {ids:?}"))
            })
            .collect();

        for e in 0..pg.graph().edge_count() {
            assert_eq!(
                (back[double_o.tail(e)], back[double_o.head(e)]),
                (o.head(e), o.tail(e)),
                "edge {e}"
            );
        }
    }
}
