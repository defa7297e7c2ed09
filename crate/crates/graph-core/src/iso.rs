//! Isomorphism tests: canonical codes for (weighted) trees and a small
//! backtracking matcher for multigraphs.

use crate::{MultiGraph, Tree};

/// Canonical code of the subtree at `v` looking away from `parent`.
fn rooted_code(t: &Tree, weights: &[usize], v: usize, parent: Option<usize>) -> String {
    let mut child_codes: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&&w| Some(w) != parent)
        .map(|&w| rooted_code(t, weights, w, Some(v)))
        .collect();
    child_codes.sort();
    format!("({}{})", weights[v], child_codes.concat())
}

/// The one or two middle vertices of the tree, found by stripping leaves.
fn centers(t: &Tree) -> Vec<usize> {
    let n = t.vertex_count();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for &w in t.neighbors(v) {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    (0..n).filter(|&v| !removed[v]).collect()
}

/// Canonical form of the whole tree with vertex weights: the smallest rooted
/// code over its centers.
fn canonical_code(t: &Tree, weights: &[usize]) -> String {
    centers(t)
        .into_iter()
        .map(|c| rooted_code(t, weights, c, None))
        .min()
        .expect("a tree has at least one center")
}

/// Whether an isomorphism of trees exists that also carries `wa` to `wb`.
pub fn trees_isomorphic_weighted(a: &Tree, wa: &[usize], b: &Tree, wb: &[usize]) -> bool {
    assert_eq!(wa.len(), a.vertex_count(), "one weight per vertex");
    assert_eq!(wb.len(), b.vertex_count(), "one weight per vertex");
    a.vertex_count() == b.vertex_count() && canonical_code(a, wa) == canonical_code(b, wb)
}

/// Whether the two trees have the same shape.
pub fn trees_isomorphic(a: &Tree, b: &Tree) -> bool {
    let wa = vec![0; a.vertex_count()];
    let wb = vec![0; b.vertex_count()];
    trees_isomorphic_weighted(a, &wa, b, &wb)
}

/// Whether the two multigraphs are isomorphic, respecting parallel-edge
/// multiplicities. Backtracking search; intended for small graphs.
pub fn graphs_isomorphic(a: &MultiGraph, b: &MultiGraph) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    if n == 0 {
        return true;
    }
    let deg_a: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let deg_b: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    {
        let mut sa = deg_a.clone();
        let mut sb = deg_b.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return false;
        }
    }
    let mult = |g: &MultiGraph| -> Vec<Vec<usize>> {
        let mut m = vec![vec![0; n]; n];
        for &(u, v) in g.edges() {
            m[u][v] += 1;
            m[v][u] += 1;
        }
        m
    };
    let ma = mult(a);
    let mb = mult(b);

    // Match high-degree vertices first to prune early.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(deg_a[v]));

    fn extend(
        pos: usize,
        order: &[usize],
        ma: &[Vec<usize>],
        mb: &[Vec<usize>],
        deg_a: &[usize],
        deg_b: &[usize],
        image: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        for w in 0..used.len() {
            if used[w] || deg_a[v] != deg_b[w] {
                continue;
            }
            let consistent = order[..pos]
                .iter()
                .all(|&u| ma[v][u] == mb[w][image[u].unwrap()]);
            if !consistent {
                continue;
            }
            image[v] = Some(w);
            used[w] = true;
            if extend(pos + 1, order, ma, mb, deg_a, deg_b, image, used) {
                return true;
            }
            image[v] = None;
            used[w] = false;
        }
        false
    }

    let mut image = vec![None; n];
    let mut used = vec![false; n];
    extend(0, &order, &ma, &mb, &deg_a, &deg_b, &mut image, &mut used)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn centers_of_paths_and_stars() {
        let p5 = Tree::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(centers(&p5), vec![2]);
        let p4 = Tree::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(centers(&p4), vec![1, 2]);
        let star = Tree::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(centers(&star), vec![0]);
    }

    #[test]
    fn weighted_code_distinguishes_leaf_weights() {
        let t = Tree::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(trees_isomorphic_weighted(&t, &[4, 9, 5], &t, &[5, 9, 4]));
        assert!(!trees_isomorphic_weighted(&t, &[4, 9, 5], &t, &[9, 4, 5]));
    }
}
