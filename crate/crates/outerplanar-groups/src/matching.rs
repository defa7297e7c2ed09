//! 2-matchings of a tree with a loop added at every vertex.
//!
//! A 2-matching is a set of edges (loops included) touching each vertex at
//! most twice, a loop counting as both incidences at its vertex.  The sets
//! that matter downstream are the *minimal* ones of a given size: those whose
//! loop set cannot be shrunk to a proper subset by trading loops for tree
//! edges while keeping the size fixed.

use graph_core::Tree;

use crate::error::OuterplanarError;

/// Largest tree the exhaustive routines accept; beyond this the per-subset
/// tables no longer fit in a reasonable budget.
pub const MAX_ENUMERATION_VERTICES: usize = 14;

/// A 2-matching of a tree with loops, stored as sorted id lists.
///
/// `loops` holds the vertices whose loop is used; `tree_edges` holds indices
/// into [`Tree::edges`].  The derived ordering sorts by loop set first, which
/// is also the order enumeration results come back in.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TwoMatching {
    /// Vertices contributing their loop (each uses both incidences).
    pub loops: Vec<usize>,
    /// Indices of the tree edges used (each uses one incidence per endpoint).
    pub tree_edges: Vec<usize>,
}

impl TwoMatching {
    /// Total number of edges in the matching, loops included.
    pub fn size(&self) -> usize {
        self.loops.len() + self.tree_edges.len()
    }
}

pub(crate) fn ensure_enumerable(tree: &Tree) -> Result<(), OuterplanarError> {
    let n = tree.vertex_count();
    if n > MAX_ENUMERATION_VERTICES {
        return Err(OuterplanarError::EnumerationBound(format!(
            "trees beyond {MAX_ENUMERATION_VERTICES} vertices are not enumerated (got {n})"
        )));
    }
    Ok(())
}

/// All 2-matchings of `tree` (with a loop at every vertex) that have exactly
/// `size` edges, sorted by loop set and then by tree-edge set.
pub fn enumerate_2matchings(
    tree: &Tree,
    size: usize,
) -> Result<Vec<TwoMatching>, OuterplanarError> {
    ensure_enumerable(tree)?;
    let n = tree.vertex_count();
    let edges = tree.edges();
    let mut capacity = vec![2u8; n];
    let mut loops = Vec::new();
    let mut tree_edges = Vec::new();
    let mut found = Vec::new();
    let total_items = n + edges.len();

    // Depth-first include/exclude over the items (loops first, then edges),
    // pruning branches that can no longer reach the requested size.
    fn descend(
        item: usize,
        total_items: usize,
        size: usize,
        n: usize,
        edges: &[(usize, usize)],
        capacity: &mut [u8],
        loops: &mut Vec<usize>,
        tree_edges: &mut Vec<usize>,
        found: &mut Vec<TwoMatching>,
    ) {
        let chosen = loops.len() + tree_edges.len();
        if chosen + (total_items - item) < size {
            return;
        }
        if item == total_items {
            if chosen == size {
                found.push(TwoMatching {
                    loops: loops.clone(),
                    tree_edges: tree_edges.clone(),
                });
            }
            return;
        }
        if chosen < size {
            if item < n {
                let v = item;
                if capacity[v] == 2 {
                    capacity[v] = 0;
                    loops.push(v);
                    descend(
                        item + 1,
                        total_items,
                        size,
                        n,
                        edges,
                        capacity,
                        loops,
                        tree_edges,
                        found,
                    );
                    loops.pop();
                    capacity[v] = 2;
                }
            } else {
                let e = item - n;
                let (u, v) = edges[e];
                if capacity[u] >= 1 && capacity[v] >= 1 {
                    capacity[u] -= 1;
                    capacity[v] -= 1;
                    tree_edges.push(e);
                    descend(
                        item + 1,
                        total_items,
                        size,
                        n,
                        edges,
                        capacity,
                        loops,
                        tree_edges,
                        found,
                    );
                    tree_edges.pop();
                    capacity[u] += 1;
                    capacity[v] += 1;
                }
            }
        }
        descend(
            item + 1,
            total_items,
            size,
            n,
            edges,
            capacity,
            loops,
            tree_edges,
            found,
        );
    }

    descend(
        0,
        total_items,
        size,
        n,
        edges,
        &mut capacity,
        &mut loops,
        &mut tree_edges,
        &mut found,
    );
    found.sort();
    Ok(found)
}

/// Maximum loopless 2-matching of the forest left after deleting the vertices
/// in `excluded`, returned as tree-edge indices.
///
/// Deterministic: ties between children are broken toward the smaller vertex
/// id, and the returned set is sorted.
fn max_two_matching_edges(tree: &Tree, excluded: usize) -> Vec<usize> {
    let n = tree.vertex_count();
    let mut incident: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (e, &(u, v)) in tree.edges().iter().enumerate() {
        incident[u].push((v, e));
        incident[v].push((u, e));
    }
    for list in &mut incident {
        list.sort();
    }

    // Returns (best set with v free for up to two child edges,
    //          best set with one incidence at v reserved for the parent).
    fn descend(
        v: usize,
        parent: usize,
        incident: &[Vec<(usize, usize)>],
        excluded: usize,
    ) -> (Vec<usize>, Vec<usize>) {
        // Per child, in ascending vertex order: the child's parent-free
        // optimum, and the strictly better alternative (child's reserved
        // optimum plus the connecting edge) when taking the edge gains one.
        let mut options: Vec<(Vec<usize>, Option<Vec<usize>>)> = Vec::new();
        for &(c, e) in &incident[v] {
            if c == parent || excluded & (1 << c) != 0 {
                continue;
            }
            let (child_free, child_reserved) = descend(c, v, incident, excluded);
            let with_edge = if child_reserved.len() + 1 > child_free.len() {
                let mut set = child_reserved;
                set.push(e);
                Some(set)
            } else {
                None
            };
            options.push((child_free, with_edge));
        }
        let assemble = |edge_budget: usize| -> Vec<usize> {
            let mut taken = 0;
            let mut set = Vec::new();
            for (child_free, with_edge) in &options {
                match with_edge {
                    Some(better) if taken < edge_budget => {
                        taken += 1;
                        set.extend(better.iter().copied());
                    }
                    _ => set.extend(child_free.iter().copied()),
                }
            }
            set
        };
        (assemble(2), assemble(1))
    }

    let mut visited = vec![false; n];
    let mut result = Vec::new();
    for root in 0..n {
        if excluded & (1 << root) != 0 || visited[root] {
            continue;
        }
        // Mark the whole component so each is rooted once.
        let mut stack = vec![root];
        visited[root] = true;
        while let Some(v) = stack.pop() {
            for &(c, _) in &incident[v] {
                if excluded & (1 << c) == 0 && !visited[c] {
                    visited[c] = true;
                    stack.push(c);
                }
            }
        }
        let (free, _) = descend(root, usize::MAX, &incident, excluded);
        result.extend(free);
    }
    result.sort();
    result
}

/// For every subset of vertices (as a bitmask), the largest 2-matching whose
/// loop set is exactly that subset: the loops plus a maximum loopless
/// 2-matching of the remaining forest.
pub(crate) fn loop_set_capacity(tree: &Tree) -> Vec<usize> {
    let n = tree.vertex_count();
    (0..1usize << n)
        .map(|mask| (mask.count_ones() as usize) + max_two_matching_edges(tree, mask).len())
        .collect()
}

/// Bitmasks of the loop sets of minimal 2-matchings of the given size, in
/// ascending mask order.
pub(crate) fn minimal_loop_masks(capacity: &[usize], n: usize, size: usize) -> Vec<usize> {
    let member: Vec<bool> = (0..1usize << n)
        .map(|mask| {
            let loops = mask.count_ones() as usize;
            loops <= size && capacity[mask] >= size
        })
        .collect();
    // Close membership downward-into-supersets: reachable[mask] says some
    // subset of `mask` is the loop set of a 2-matching of the given size.
    let mut reachable = member.clone();
    for bit in 0..n {
        for mask in 0..1usize << n {
            if mask & (1 << bit) != 0 && reachable[mask ^ (1 << bit)] {
                reachable[mask] = true;
            }
        }
    }
    (0..1usize << n)
        .filter(|&mask| {
            member[mask]
                && (0..n).all(|bit| mask & (1 << bit) == 0 || !reachable[mask ^ (1 << bit)])
        })
        .collect()
}

/// One minimal 2-matching of the given `size` per minimal loop set, sorted by
/// loop set.
///
/// Minimality is over loop sets: no 2-matching of the same size has a loop
/// set that is a proper subset.  The tree edges returned are a witness — the
/// smallest-id edges of a maximum loopless 2-matching on the unlooped part.
pub fn minimal_2matchings(tree: &Tree, size: usize) -> Result<Vec<TwoMatching>, OuterplanarError> {
    ensure_enumerable(tree)?;
    let n = tree.vertex_count();
    let capacity = loop_set_capacity(tree);
    let mut found = Vec::new();
    for mask in minimal_loop_masks(&capacity, n, size) {
        let loops: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        let need = size - loops.len();
        let mut tree_edges = max_two_matching_edges(tree, mask);
        debug_assert!(tree_edges.len() >= need);
        tree_edges.truncate(need);
        found.push(TwoMatching { loops, tree_edges });
    }
    found.sort();
    Ok(found)
}
