//! Integrity checks on the built-in catalog: the frozen data must stay
//! internally consistent no matter how it is edited.

use graph_core::{trees_isomorphic, Tree};
use sandgroup::catalog::{
    tree_by_key, FULLY_JOINED_ROWS, LADDER_COLUMNS, LEAF_JOINED_ROWS, TREES,
};

#[test]
fn catalog_covers_every_tree_shape_once() {
    let trees: Vec<Tree> = TREES
        .iter()
        .map(|entry| Tree::from_edges(entry.vertex_count, entry.edges).unwrap())
        .collect();
    assert_eq!(trees.len(), 47);

    // One representative per isomorphism class on 2..=8 vertices.
    let mut per_size = [0usize; 9];
    for tree in &trees {
        per_size[tree.vertex_count()] += 1;
    }
    assert_eq!(per_size, [0, 0, 1, 1, 2, 3, 6, 11, 23]);
    for (i, a) in trees.iter().enumerate() {
        for b in trees.iter().skip(i + 1) {
            assert!(!trees_isomorphic(a, b), "duplicate tree shape in catalog");
        }
    }

    // Keys are `{size}_{index}` in catalog order and resolvable.
    let mut index_within_size = 0;
    let mut size = 0;
    for entry in TREES {
        if entry.vertex_count != size {
            size = entry.vertex_count;
            index_within_size = 0;
        }
        assert_eq!(entry.key, format!("{size}_{index_within_size}"));
        assert_eq!(tree_by_key(entry.key).unwrap().key, entry.key);
        index_within_size += 1;
    }
    assert!(tree_by_key("9_0").is_none());
}

#[test]
fn identity_rows_follow_the_cone_degree_rules() {
    for (rows, leaves_only) in [(LEAF_JOINED_ROWS, true), (FULLY_JOINED_ROWS, false)] {
        assert_eq!(rows.len(), TREES.len());
        for (row, entry) in rows.iter().zip(TREES) {
            assert_eq!(row.key, entry.key);
            let tree = Tree::from_edges(entry.vertex_count, entry.edges).unwrap();
            for (degrees, step) in [(row.first_degrees, 1), (row.second_degrees, 2)] {
                assert_eq!(degrees.len(), tree.vertex_count());
                for v in 0..tree.vertex_count() {
                    let joins = if !leaves_only || tree.degree(v) == 1 {
                        step
                    } else {
                        0
                    };
                    assert_eq!(
                        degrees[v],
                        tree.degree(v) + joins,
                        "tree {}, vertex {v}",
                        row.key
                    );
                }
            }
            // Identities are stable piles: strictly below the degree everywhere.
            for (degrees, identity) in [
                (row.first_degrees, row.first_identity),
                (row.second_degrees, row.second_identity),
            ] {
                assert_eq!(identity.len(), degrees.len());
                for (value, degree) in identity.iter().zip(degrees) {
                    assert!(0 <= *value && (*value as usize) < *degree);
                }
            }
        }
    }
}

#[test]
fn ladder_columns_are_strictly_increasing() {
    assert_eq!(LADDER_COLUMNS.len(), 3);
    for &(sides, column) in LADDER_COLUMNS {
        assert!(matches!(sides, 4 | 6 | 8));
        assert_eq!(column[0] as usize, sides);
        assert!(column.windows(2).all(|w| w[0] < w[1]));
    }
}
