//! Biconnected blocks via depth-first search with an edge stack.

use crate::MultiGraph;

/// Splits the edge set into biconnected blocks: maximal sets of edges in
/// which every pair lies on a common cycle. Bridges come out as single-edge
/// blocks. Each edge id appears in exactly one block; isolated vertices
/// contribute nothing.
pub fn biconnected_blocks(g: &MultiGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    const UNSET: usize = usize::MAX;
    let mut disc = vec![UNSET; n];
    let mut low = vec![UNSET; n];
    let mut clock = 0usize;
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();

    // Iterative DFS frames: vertex, the edge id used to enter it, and the
    // cursor into its incident-edge list.
    struct Frame {
        v: usize,
        entry_edge: Option<usize>,
        cursor: usize,
    }

    for root in 0..n {
        if disc[root] != UNSET {
            continue;
        }
        disc[root] = clock;
        low[root] = clock;
        clock += 1;
        let mut stack = vec![Frame {
            v: root,
            entry_edge: None,
            cursor: 0,
        }];
        while let Some(frame) = stack.last_mut() {
            let v = frame.v;
            let incident = g.incident_edges(v);
            if frame.cursor < incident.len() {
                let e = incident[frame.cursor];
                frame.cursor += 1;
                if frame.entry_edge == Some(e) {
                    continue; // skip the tree edge we came in by, once
                }
                let w = g.other_end(e, v);
                if disc[w] == UNSET {
                    // Tree edge: descend.
                    edge_stack.push(e);
                    disc[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    stack.push(Frame {
                        v: w,
                        entry_edge: Some(e),
                        cursor: 0,
                    });
                } else if disc[w] < disc[v] {
                    // Back edge to an ancestor.
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
                // Edges to already-finished descendants were pushed from the
                // other side and are skipped here.
            } else {
                // v is finished: fold its low value into the parent and close
                // a block if v cannot reach above its parent.
                let entry = frame.entry_edge;
                stack.pop();
                if let Some(e) = entry {
                    let parent = stack.last().expect("entered from somewhere").v;
                    low[parent] = low[parent].min(low[v]);
                    if low[v] >= disc[parent] {
                        let mut block = Vec::new();
                        loop {
                            let top = edge_stack.pop().expect("the entry edge is below");
                            block.push(top);
                            if top == e {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}
