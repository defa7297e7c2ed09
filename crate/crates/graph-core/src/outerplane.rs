//! Tree-driven constructions: a fan of polygons glued edge-to-edge along a
//! tree (`build_outerplane`), and the cone over a tree with prescribed
//! degrees (`build_g_tc`).

use crate::{trace_faces, GraphError, MultiGraph, PlaneGraph, Tree};

/// Glues one convex polygon per tree vertex, one shared side per tree edge,
/// into a drawing whose bounded faces are exactly the polygons and whose
/// outer boundary passes through every vertex.
///
/// `lengths[v]` is the side count of polygon `v`. Each polygon needs at least
/// two sides, and at least one side per tree neighbor; two-sided polygons are
/// allowed and merge their endpoints with the neighboring polygon's.
///
/// The drawing is produced directly as a rotation system: every polygon
/// contributes its counterclockwise boundary walk, the outer region walks the
/// unshared sides clockwise, and the circular edge order at each vertex is
/// assembled from the corners of those walks.
pub fn build_outerplane(tree: &Tree, lengths: &[usize]) -> Result<PlaneGraph, GraphError> {
    let nt = tree.vertex_count();
    if lengths.len() != nt {
        return Err(GraphError::InfeasibleLengths(format!(
            "{} side counts for {nt} polygons",
            lengths.len()
        )));
    }
    for v in 0..nt {
        let need = tree.degree(v).max(2);
        if lengths[v] < need {
            return Err(GraphError::InfeasibleLengths(format!(
                "polygon {v} has {} sides but needs at least {need}",
                lengths[v]
            )));
        }
    }

    // Root the tree at 0; children in ascending label order.
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); nt];
    {
        let mut queue = std::collections::VecDeque::from([0usize]);
        let mut seen = vec![false; nt];
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &w in tree.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    children[u].push(w);
                    queue.push_back(w);
                }
            }
        }
    }

    let mut edges: Vec<(usize, usize)> = Vec::new();
    // Counterclockwise boundary walk of each polygon: (edge id, forward?).
    let mut polygon_walks: Vec<Vec<(usize, bool)>> = vec![Vec::new(); nt];
    // Unshared sides in counterclockwise order around the whole drawing,
    // each stored pointing counterclockwise.
    let mut outer_walk: Vec<usize> = Vec::new();
    let mut next_vertex = 0usize;

    // One frame per polygon being laid down. `corners` lists the polygon's
    // vertices so that consecutive entries span the sides still to create:
    // the root polygon owns all `lengths[0]` sides cyclically, every other
    // polygon starts at the first endpoint of its shared side and creates
    // `lengths[v] - 1` sides ending at the second.
    struct Frame {
        v: usize,
        corners: Vec<usize>,
        entry_edge: Option<usize>,
        side: usize,
    }

    let root_corners: Vec<usize> = (0..lengths[0]).collect();
    next_vertex += lengths[0];
    let mut stack = vec![Frame {
        v: 0,
        corners: root_corners,
        entry_edge: None,
        side: 0,
    }];

    while !stack.is_empty() {
        let top = stack.len() - 1;
        let v = stack[top].v;
        let entry_edge = stack[top].entry_edge;
        let sides_to_create = if entry_edge.is_none() {
            lengths[v]
        } else {
            lengths[v] - 1
        };
        if stack[top].side == sides_to_create {
            // All sides placed: close the walk with the shared entry side,
            // which this polygon traverses against its stored direction.
            if let Some(e) = entry_edge {
                polygon_walks[v].push((e, false));
            }
            stack.pop();
            continue;
        }
        let s = stack[top].side;
        stack[top].side += 1;
        let (a, b) = if entry_edge.is_none() {
            (stack[top].corners[s], stack[top].corners[(s + 1) % lengths[v]])
        } else {
            (stack[top].corners[s], stack[top].corners[s + 1])
        };
        let hosted_child = children[v].get(s).copied();
        let e = edges.len();
        edges.push((a, b));
        polygon_walks[v].push((e, true));
        match hosted_child {
            None => outer_walk.push(e),
            Some(w) => {
                // The child's boundary runs from `a` around the outside to
                // `b`, then back along the shared side.
                let mut corners = Vec::with_capacity(lengths[w]);
                corners.push(a);
                for _ in 0..lengths[w] - 2 {
                    corners.push(next_vertex);
                    next_vertex += 1;
                }
                corners.push(b);
                stack.push(Frame {
                    v: w,
                    corners,
                    entry_edge: Some(e),
                    side: 0,
                });
            }
        }
    }

    let graph = MultiGraph::new(next_vertex, edges)?;

    // Assemble rotations from the face walks: whenever a walk enters a vertex
    // by one directed edge and leaves by the next, the leaving edge's
    // counterclockwise successor at that vertex is the entering edge.
    let mut successor: Vec<std::collections::HashMap<usize, usize>> =
        vec![std::collections::HashMap::new(); next_vertex];
    {
        let mut chain = |walk: &[(usize, bool)]| {
            for i in 0..walk.len() {
                let (e_in, fwd_in) = walk[i];
                let (e_out, _) = walk[(i + 1) % walk.len()];
                let (t, h) = graph.endpoints(e_in);
                let corner = if fwd_in { h } else { t };
                let previous = successor[corner].insert(e_out, e_in);
                debug_assert!(previous.is_none(), "two faces claim one corner");
            }
        };
        for walk in &polygon_walks {
            chain(walk);
        }
        let outer_directed: Vec<(usize, bool)> =
            outer_walk.iter().rev().map(|&e| (e, false)).collect();
        chain(&outer_directed);
    }
    let mut rotation: Vec<Vec<usize>> = Vec::with_capacity(next_vertex);
    for v in 0..next_vertex {
        let map = &successor[v];
        let start = *map.keys().min().expect("every vertex lies on a polygon");
        let mut list = vec![start];
        let mut cur = map[&start];
        while cur != start {
            list.push(cur);
            cur = map[&cur];
        }
        debug_assert_eq!(list.len(), graph.degree(v));
        rotation.push(list);
    }

    // Identify the outer face among the traced ones and finish.
    let (_, face_of) = trace_faces(&graph, &rotation)?;
    let outer_index = face_of[2 * outer_walk[0] + 1];
    PlaneGraph::new(graph, rotation, outer_index)
}

/// The cone over a tree: keeps the tree's edges and joins every vertex `v` to
/// a new apex by `lengths[v] - degree(v)` parallel edges, so that `v` ends up
/// with degree `lengths[v]`. Returns the graph and the apex index.
///
/// Requires `lengths[v] >= degree(v)` everywhere and at least one cone edge
/// overall. The apex-deleted Laplacian of the result is `diag(lengths)` minus
/// the tree's adjacency matrix.
pub fn build_g_tc(tree: &Tree, lengths: &[usize]) -> Result<(MultiGraph, usize), GraphError> {
    let nt = tree.vertex_count();
    if lengths.len() != nt {
        return Err(GraphError::InfeasibleLengths(format!(
            "{} degree targets for {nt} vertices",
            lengths.len()
        )));
    }
    for v in 0..nt {
        if lengths[v] < tree.degree(v) {
            return Err(GraphError::InfeasibleLengths(format!(
                "vertex {v} already has degree {}, cannot reduce to {}",
                tree.degree(v),
                lengths[v]
            )));
        }
    }
    let apex = nt;
    let mut edges = tree.edges().to_vec();
    for v in 0..nt {
        for _ in 0..lengths[v] - tree.degree(v) {
            edges.push((v, apex));
        }
    }
    if edges.len() == tree.edges().len() {
        return Err(GraphError::InfeasibleLengths(
            "no slack anywhere: the apex would be isolated".into(),
        ));
    }
    Ok((MultiGraph::new(nt + 1, edges)?, apex))
}
