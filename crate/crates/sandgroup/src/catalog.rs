//! Built-in reference data: a catalog of the trees on 2 through 8 vertices,
//! spanning-tree counts of uniform polygon chains, and the identity
//! elements of cone graphs built over the cataloged trees.

/// One cataloged tree, keyed `{vertex count}_{index}`, with a fixed
/// vertex numbering that the identity tables below depend on.
#[derive(Debug, Clone, Copy)]
pub struct CatalogTree {
    pub key: &'static str,
    pub vertex_count: usize,
    pub edges: &'static [(usize, usize)],
}

/// Every tree on 2 through 8 vertices, one representative per isomorphism
/// class, in catalog order.
pub const TREES: &[CatalogTree] = &[
    CatalogTree { key: "2_0", vertex_count: 2, edges: &[(0, 1)] },
    CatalogTree { key: "3_0", vertex_count: 3, edges: &[(0, 1), (0, 2)] },
    CatalogTree { key: "4_0", vertex_count: 4, edges: &[(0, 1), (0, 3), (1, 2)] },
    CatalogTree { key: "4_1", vertex_count: 4, edges: &[(0, 1), (0, 2), (0, 3)] },
    CatalogTree { key: "5_0", vertex_count: 5, edges: &[(0, 1), (0, 3), (1, 2), (3, 4)] },
    CatalogTree { key: "5_1", vertex_count: 5, edges: &[(0, 1), (0, 3), (0, 4), (1, 2)] },
    CatalogTree { key: "5_2", vertex_count: 5, edges: &[(0, 1), (0, 2), (0, 3), (0, 4)] },
    CatalogTree { key: "6_0", vertex_count: 6, edges: &[(0, 1), (0, 4), (1, 2), (2, 3), (4, 5)] },
    CatalogTree { key: "6_1", vertex_count: 6, edges: &[(0, 1), (0, 4), (1, 2), (1, 3), (4, 5)] },
    CatalogTree { key: "6_2", vertex_count: 6, edges: &[(0, 1), (0, 4), (0, 5), (1, 2), (1, 3)] },
    CatalogTree { key: "6_3", vertex_count: 6, edges: &[(0, 1), (0, 3), (0, 5), (1, 2), (3, 4)] },
    CatalogTree { key: "6_4", vertex_count: 6, edges: &[(0, 1), (0, 3), (0, 4), (0, 5), (1, 2)] },
    CatalogTree { key: "6_5", vertex_count: 6, edges: &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)] },
    CatalogTree { key: "7_0", vertex_count: 7, edges: &[(0, 1), (0, 4), (1, 2), (2, 3), (4, 5), (5, 6)] },
    CatalogTree { key: "7_1", vertex_count: 7, edges: &[(0, 1), (0, 4), (1, 2), (2, 3), (4, 5), (4, 6)] },
    CatalogTree { key: "7_2", vertex_count: 7, edges: &[(0, 1), (0, 4), (0, 6), (1, 2), (2, 3), (4, 5)] },
    CatalogTree { key: "7_3", vertex_count: 7, edges: &[(0, 1), (0, 5), (1, 2), (1, 3), (1, 4), (5, 6)] },
    CatalogTree { key: "7_4", vertex_count: 7, edges: &[(0, 1), (0, 4), (1, 2), (1, 3), (4, 5), (4, 6)] },
    CatalogTree { key: "7_5", vertex_count: 7, edges: &[(0, 1), (0, 4), (0, 6), (1, 2), (1, 3), (4, 5)] },
    CatalogTree { key: "7_6", vertex_count: 7, edges: &[(0, 1), (0, 4), (0, 5), (0, 6), (1, 2), (1, 3)] },
    CatalogTree { key: "7_7", vertex_count: 7, edges: &[(0, 1), (0, 3), (0, 5), (1, 2), (3, 4), (5, 6)] },
    CatalogTree { key: "7_8", vertex_count: 7, edges: &[(0, 1), (0, 3), (0, 5), (0, 6), (1, 2), (3, 4)] },
    CatalogTree { key: "7_9", vertex_count: 7, edges: &[(0, 1), (0, 3), (0, 4), (0, 5), (0, 6), (1, 2)] },
    CatalogTree { key: "7_10", vertex_count: 7, edges: &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6)] },
    CatalogTree { key: "8_0", vertex_count: 8, edges: &[(0, 1), (0, 5), (1, 2), (2, 3), (3, 4), (5, 6), (6, 7)] },
    CatalogTree { key: "8_1", vertex_count: 8, edges: &[(0, 1), (0, 5), (1, 2), (2, 3), (2, 4), (5, 6), (6, 7)] },
    CatalogTree { key: "8_2", vertex_count: 8, edges: &[(0, 1), (0, 5), (1, 2), (2, 3), (2, 4), (5, 6), (5, 7)] },
    CatalogTree { key: "8_3", vertex_count: 8, edges: &[(0, 1), (0, 5), (1, 2), (1, 4), (2, 3), (5, 6), (6, 7)] },
    CatalogTree { key: "8_4", vertex_count: 8, edges: &[(0, 1), (0, 5), (1, 2), (1, 4), (2, 3), (5, 6), (5, 7)] },
    CatalogTree { key: "8_5", vertex_count: 8, edges: &[(0, 1), (0, 5), (0, 7), (1, 2), (1, 4), (2, 3), (5, 6)] },
    CatalogTree { key: "8_6", vertex_count: 8, edges: &[(0, 1), (0, 4), (0, 7), (1, 2), (2, 3), (4, 5), (5, 6)] },
    CatalogTree { key: "8_7", vertex_count: 8, edges: &[(0, 1), (0, 4), (1, 2), (2, 3), (4, 5), (4, 6), (4, 7)] },
    CatalogTree { key: "8_8", vertex_count: 8, edges: &[(0, 1), (0, 4), (0, 7), (1, 2), (2, 3), (4, 5), (4, 6)] },
    CatalogTree { key: "8_9", vertex_count: 8, edges: &[(0, 1), (0, 4), (0, 6), (1, 2), (2, 3), (4, 5), (6, 7)] },
    CatalogTree { key: "8_10", vertex_count: 8, edges: &[(0, 1), (0, 4), (0, 6), (0, 7), (1, 2), (2, 3), (4, 5)] },
    CatalogTree { key: "8_11", vertex_count: 8, edges: &[(0, 1), (0, 6), (1, 2), (1, 3), (1, 4), (1, 5), (6, 7)] },
    CatalogTree { key: "8_12", vertex_count: 8, edges: &[(0, 1), (0, 5), (1, 2), (1, 3), (1, 4), (5, 6), (5, 7)] },
    CatalogTree { key: "8_13", vertex_count: 8, edges: &[(0, 1), (0, 5), (0, 7), (1, 2), (1, 3), (1, 4), (5, 6)] },
    CatalogTree { key: "8_14", vertex_count: 8, edges: &[(0, 1), (0, 5), (0, 6), (0, 7), (1, 2), (1, 3), (1, 4)] },
    CatalogTree { key: "8_15", vertex_count: 8, edges: &[(0, 1), (0, 4), (0, 7), (1, 2), (1, 3), (4, 5), (4, 6)] },
    CatalogTree { key: "8_16", vertex_count: 8, edges: &[(0, 1), (0, 4), (0, 6), (1, 2), (1, 3), (4, 5), (6, 7)] },
    CatalogTree { key: "8_17", vertex_count: 8, edges: &[(0, 1), (0, 4), (0, 6), (0, 7), (1, 2), (1, 3), (4, 5)] },
    CatalogTree { key: "8_18", vertex_count: 8, edges: &[(0, 1), (0, 4), (0, 5), (0, 6), (0, 7), (1, 2), (1, 3)] },
    CatalogTree { key: "8_19", vertex_count: 8, edges: &[(0, 1), (0, 3), (0, 5), (0, 7), (1, 2), (3, 4), (5, 6)] },
    CatalogTree { key: "8_20", vertex_count: 8, edges: &[(0, 1), (0, 3), (0, 5), (0, 6), (0, 7), (1, 2), (3, 4)] },
    CatalogTree { key: "8_21", vertex_count: 8, edges: &[(0, 1), (0, 3), (0, 4), (0, 5), (0, 6), (0, 7), (1, 2)] },
    CatalogTree { key: "8_22", vertex_count: 8, edges: &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (0, 7)] },
];

/// Looks a tree up by its catalog key.
pub fn tree_by_key(key: &str) -> Option<&'static CatalogTree> {
    TREES.iter().find(|t| t.key == key)
}

/// Spanning-tree counts of the uniform polygon chains with `k`-sided
/// polygons, for chains of 1 through 11 polygons: one `(k, counts)` pair
/// per column.
pub const LADDER_COLUMNS: &[(usize, [u64; 11])] = &[
    (4, [4, 15, 56, 209, 780, 2911, 10864, 40545, 151316, 564719, 2107560]),
    (6, [6, 35, 204, 1189, 6930, 40391, 235416, 1372105, 7997214, 46611179, 271669860]),
    (8, [8, 63, 496, 3905, 30744, 242047, 1905632, 15003009, 118118440, 929944511, 7321437648]),
];

/// A cone-identity catalog row: two degree vectors over one cataloged
/// tree, each with the identity element of the sandpile group of the
/// graph that cones the tree to those degrees (apex as sink).
#[derive(Debug, Clone, Copy)]
pub struct IdentityRow {
    pub key: &'static str,
    pub first_degrees: &'static [usize],
    pub first_identity: &'static [i64],
    pub second_degrees: &'static [usize],
    pub second_identity: &'static [i64],
}

/// Identity elements where the apex is joined to each leaf of the tree
/// once (first column) or twice (second column).
pub const LEAF_JOINED_ROWS: &[IdentityRow] = &[
    IdentityRow {
        key: "2_0",
        first_degrees: &[2, 2],
        first_identity: &[1, 1],
        second_degrees: &[3, 3],
        second_identity: &[2, 2],
    },
    IdentityRow {
        key: "3_0",
        first_degrees: &[2, 2, 2],
        first_identity: &[0, 1, 1],
        second_degrees: &[2, 3, 3],
        second_identity: &[0, 2, 2],
    },
    IdentityRow {
        key: "4_0",
        first_degrees: &[2, 2, 2, 2],
        first_identity: &[1, 1, 1, 1],
        second_degrees: &[2, 2, 3, 3],
        second_identity: &[1, 1, 1, 1],
    },
    IdentityRow {
        key: "4_1",
        first_degrees: &[3, 2, 2, 2],
        first_identity: &[0, 1, 1, 1],
        second_degrees: &[3, 3, 3, 3],
        second_identity: &[0, 2, 2, 2],
    },
    IdentityRow {
        key: "5_0",
        first_degrees: &[2, 2, 2, 2, 2],
        first_identity: &[0, 1, 1, 1, 1],
        second_degrees: &[2, 2, 3, 2, 3],
        second_identity: &[0, 1, 1, 1, 1],
    },
    IdentityRow {
        key: "5_1",
        first_degrees: &[3, 2, 2, 2, 2],
        first_identity: &[2, 1, 1, 1, 1],
        second_degrees: &[3, 2, 3, 3, 3],
        second_identity: &[2, 1, 1, 1, 1],
    },
    IdentityRow {
        key: "5_2",
        first_degrees: &[4, 2, 2, 2, 2],
        first_identity: &[0, 1, 1, 1, 1],
        second_degrees: &[4, 3, 3, 3, 3],
        second_identity: &[0, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "6_0",
        first_degrees: &[2, 2, 2, 2, 2, 2],
        first_identity: &[1, 1, 1, 1, 1, 1],
        second_degrees: &[2, 2, 2, 3, 2, 3],
        second_identity: &[1, 1, 1, 2, 1, 2],
    },
    IdentityRow {
        key: "6_1",
        first_degrees: &[2, 3, 2, 2, 2, 2],
        first_identity: &[0, 2, 1, 1, 1, 1],
        second_degrees: &[2, 3, 3, 3, 2, 3],
        second_identity: &[0, 2, 1, 1, 1, 1],
    },
    IdentityRow {
        key: "6_2",
        first_degrees: &[3, 3, 2, 2, 2, 2],
        first_identity: &[2, 2, 1, 1, 1, 1],
        second_degrees: &[3, 3, 3, 3, 3, 3],
        second_identity: &[2, 2, 1, 1, 1, 1],
    },
    IdentityRow {
        key: "6_3",
        first_degrees: &[3, 2, 2, 2, 2, 2],
        first_identity: &[1, 1, 1, 1, 1, 1],
        second_degrees: &[3, 2, 3, 2, 3, 3],
        second_identity: &[1, 1, 1, 1, 1, 1],
    },
    IdentityRow {
        key: "6_4",
        first_degrees: &[4, 2, 2, 2, 2, 2],
        first_identity: &[3, 1, 1, 1, 1, 1],
        second_degrees: &[4, 2, 3, 3, 3, 3],
        second_identity: &[3, 1, 1, 1, 1, 1],
    },
    IdentityRow {
        key: "6_5",
        first_degrees: &[5, 2, 2, 2, 2, 2],
        first_identity: &[0, 1, 1, 1, 1, 1],
        second_degrees: &[5, 3, 3, 3, 3, 3],
        second_identity: &[0, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "7_0",
        first_degrees: &[2, 2, 2, 2, 2, 2, 2],
        first_identity: &[0, 1, 1, 1, 1, 1, 1],
        second_degrees: &[2, 2, 2, 3, 2, 2, 3],
        second_identity: &[0, 1, 1, 2, 1, 1, 2],
    },
    IdentityRow {
        key: "7_1",
        first_degrees: &[2, 2, 2, 2, 3, 2, 2],
        first_identity: &[1, 1, 0, 1, 1, 1, 1],
        second_degrees: &[2, 2, 2, 3, 3, 3, 3],
        second_identity: &[1, 1, 0, 1, 1, 1, 1],
    },
    IdentityRow {
        key: "7_2",
        first_degrees: &[3, 2, 2, 2, 2, 2, 2],
        first_identity: &[1, 0, 1, 1, 1, 1, 1],
        second_degrees: &[3, 2, 2, 3, 2, 3, 3],
        second_identity: &[1, 0, 1, 1, 1, 1, 1],
    },
    IdentityRow {
        key: "7_3",
        first_degrees: &[2, 4, 2, 2, 2, 2, 2],
        first_identity: &[0, 3, 1, 1, 1, 1, 1],
        second_degrees: &[2, 4, 3, 3, 3, 2, 3],
        second_identity: &[0, 3, 1, 1, 1, 1, 1],
    },
    IdentityRow {
        key: "7_4",
        first_degrees: &[2, 3, 2, 2, 3, 2, 2],
        first_identity: &[0, 2, 1, 1, 2, 1, 1],
        second_degrees: &[2, 3, 3, 3, 3, 3, 3],
        second_identity: &[0, 2, 1, 1, 2, 1, 1],
    },
    IdentityRow {
        key: "7_5",
        first_degrees: &[3, 3, 2, 2, 2, 2, 2],
        first_identity: &[1, 2, 1, 1, 1, 1, 1],
        second_degrees: &[3, 3, 3, 3, 2, 3, 3],
        second_identity: &[1, 2, 1, 1, 1, 1, 1],
    },
    IdentityRow {
        key: "7_6",
        first_degrees: &[4, 3, 2, 2, 2, 2, 2],
        first_identity: &[3, 2, 1, 1, 1, 1, 1],
        second_degrees: &[4, 3, 3, 3, 3, 3, 3],
        second_identity: &[3, 2, 1, 1, 1, 1, 1],
    },
    IdentityRow {
        key: "7_7",
        first_degrees: &[3, 2, 2, 2, 2, 2, 2],
        first_identity: &[0, 1, 1, 1, 1, 1, 1],
        second_degrees: &[3, 2, 3, 2, 3, 2, 3],
        second_identity: &[0, 1, 1, 1, 1, 1, 1],
    },
    IdentityRow {
        key: "7_8",
        first_degrees: &[4, 2, 2, 2, 2, 2, 2],
        first_identity: &[2, 1, 1, 1, 1, 1, 1],
        second_degrees: &[4, 2, 3, 2, 3, 3, 3],
        second_identity: &[2, 1, 1, 1, 1, 1, 1],
    },
    IdentityRow {
        key: "7_9",
        first_degrees: &[5, 2, 2, 2, 2, 2, 2],
        first_identity: &[4, 1, 1, 1, 1, 1, 1],
        second_degrees: &[5, 2, 3, 3, 3, 3, 3],
        second_identity: &[4, 1, 1, 1, 1, 1, 1],
    },
    IdentityRow {
        key: "7_10",
        first_degrees: &[6, 2, 2, 2, 2, 2, 2],
        first_identity: &[0, 1, 1, 1, 1, 1, 1],
        second_degrees: &[6, 3, 3, 3, 3, 3, 3],
        second_identity: &[0, 2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "8_0",
        first_degrees: &[2, 2, 2, 2, 2, 2, 2, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[2, 2, 2, 2, 3, 2, 2, 3],
        second_identity: &[1, 1, 1, 1, 1, 1, 1, 1],
    },
    IdentityRow {
        key: "8_1",
        first_degrees: &[2, 2, 3, 2, 2, 2, 2, 2],
        first_identity: &[1, 1, 0, 1, 1, 1, 1, 1],
        second_degrees: &[2, 2, 3, 3, 3, 2, 2, 3],
        second_identity: &[1, 1, 0, 1, 1, 1, 1, 2],
    },
    IdentityRow {
        key: "8_2",
        first_degrees: &[2, 2, 3, 2, 2, 3, 2, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[2, 2, 3, 3, 3, 3, 3, 3],
        second_identity: &[1, 1, 1, 1, 1, 1, 1, 1],
    },
    IdentityRow {
        key: "8_3",
        first_degrees: &[2, 3, 2, 2, 2, 2, 2, 2],
        first_identity: &[1, 2, 1, 0, 1, 1, 1, 1],
        second_degrees: &[2, 3, 2, 3, 3, 2, 2, 3],
        second_identity: &[1, 2, 1, 0, 2, 1, 1, 2],
    },
    IdentityRow {
        key: "8_4",
        first_degrees: &[2, 3, 2, 2, 2, 3, 2, 2],
        first_identity: &[0, 1, 1, 1, 1, 2, 1, 1],
        second_degrees: &[2, 3, 2, 3, 3, 3, 3, 3],
        second_identity: &[0, 1, 1, 1, 1, 2, 1, 1],
    },
    IdentityRow {
        key: "8_5",
        first_degrees: &[3, 3, 2, 2, 2, 2, 2, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[3, 3, 2, 3, 3, 2, 3, 3],
        second_identity: &[1, 1, 1, 1, 1, 1, 1, 1],
    },
    IdentityRow {
        key: "8_6",
        first_degrees: &[3, 2, 2, 2, 2, 2, 2, 2],
        first_identity: &[2, 1, 1, 0, 1, 1, 0, 1],
        second_degrees: &[3, 2, 2, 3, 2, 2, 3, 3],
        second_identity: &[2, 1, 1, 0, 1, 1, 0, 2],
    },
    IdentityRow {
        key: "8_7",
        first_degrees: &[2, 2, 2, 2, 4, 2, 2, 2],
        first_identity: &[1, 1, 0, 1, 2, 1, 1, 1],
        second_degrees: &[2, 2, 2, 3, 4, 3, 3, 3],
        second_identity: &[1, 1, 0, 1, 2, 1, 1, 1],
    },
    IdentityRow {
        key: "8_8",
        first_degrees: &[3, 2, 2, 2, 3, 2, 2, 2],
        first_identity: &[1, 0, 1, 1, 2, 1, 1, 1],
        second_degrees: &[3, 2, 2, 3, 3, 3, 3, 3],
        second_identity: &[1, 0, 1, 1, 2, 1, 1, 1],
    },
    IdentityRow {
        key: "8_9",
        first_degrees: &[3, 2, 2, 2, 2, 2, 2, 2],
        first_identity: &[2, 1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[3, 2, 2, 3, 2, 3, 2, 3],
        second_identity: &[2, 1, 1, 2, 1, 2, 1, 2],
    },
    IdentityRow {
        key: "8_10",
        first_degrees: &[4, 2, 2, 2, 2, 2, 2, 2],
        first_identity: &[2, 0, 1, 1, 1, 1, 1, 1],
        second_degrees: &[4, 2, 2, 3, 2, 3, 3, 3],
        second_identity: &[2, 0, 1, 1, 1, 1, 1, 1],
    },
    IdentityRow {
        key: "8_11",
        first_degrees: &[2, 5, 2, 2, 2, 2, 2, 2],
        first_identity: &[0, 4, 1, 1, 1, 1, 1, 1],
        second_degrees: &[2, 5, 3, 3, 3, 3, 2, 3],
        second_identity: &[0, 4, 1, 1, 1, 1, 1, 1],
    },
    IdentityRow {
        key: "8_12",
        first_degrees: &[2, 4, 2, 2, 2, 3, 2, 2],
        first_identity: &[0, 3, 1, 1, 1, 2, 1, 1],
        second_degrees: &[2, 4, 3, 3, 3, 3, 3, 3],
        second_identity: &[0, 3, 1, 1, 1, 2, 1, 1],
    },
    IdentityRow {
        key: "8_13",
        first_degrees: &[3, 4, 2, 2, 2, 2, 2, 2],
        first_identity: &[1, 3, 1, 1, 1, 1, 1, 1],
        second_degrees: &[3, 4, 3, 3, 3, 2, 3, 3],
        second_identity: &[1, 3, 1, 1, 1, 1, 1, 1],
    },
    IdentityRow {
        key: "8_14",
        first_degrees: &[4, 4, 2, 2, 2, 2, 2, 2],
        first_identity: &[3, 3, 1, 1, 1, 1, 1, 1],
        second_degrees: &[4, 4, 3, 3, 3, 3, 3, 3],
        second_identity: &[3, 3, 1, 1, 1, 1, 1, 1],
    },
    IdentityRow {
        key: "8_15",
        first_degrees: &[3, 3, 2, 2, 3, 2, 2, 2],
        first_identity: &[1, 2, 1, 1, 2, 1, 1, 1],
        second_degrees: &[3, 3, 3, 3, 3, 3, 3, 3],
        second_identity: &[1, 2, 1, 1, 2, 1, 1, 1],
    },
    IdentityRow {
        key: "8_16",
        first_degrees: &[3, 3, 2, 2, 2, 2, 2, 2],
        first_identity: &[0, 2, 1, 1, 1, 1, 1, 1],
        second_degrees: &[3, 3, 3, 3, 2, 3, 2, 3],
        second_identity: &[0, 2, 1, 1, 1, 1, 1, 1],
    },
    IdentityRow {
        key: "8_17",
        first_degrees: &[4, 3, 2, 2, 2, 2, 2, 2],
        first_identity: &[2, 2, 1, 1, 1, 1, 1, 1],
        second_degrees: &[4, 3, 3, 3, 2, 3, 3, 3],
        second_identity: &[2, 2, 1, 1, 1, 1, 1, 1],
    },
    IdentityRow {
        key: "8_18",
        first_degrees: &[5, 3, 2, 2, 2, 2, 2, 2],
        first_identity: &[4, 2, 1, 1, 1, 1, 1, 1],
        second_degrees: &[5, 3, 3, 3, 3, 3, 3, 3],
        second_identity: &[4, 2, 1, 1, 1, 1, 1, 1],
    },
    IdentityRow {
        key: "8_19",
        first_degrees: &[4, 2, 2, 2, 2, 2, 2, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[4, 2, 3, 2, 3, 2, 3, 3],
        second_identity: &[1, 1, 1, 1, 1, 1, 1, 1],
    },
    IdentityRow {
        key: "8_20",
        first_degrees: &[5, 2, 2, 2, 2, 2, 2, 2],
        first_identity: &[3, 1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[5, 2, 3, 2, 3, 3, 3, 3],
        second_identity: &[3, 1, 1, 1, 1, 1, 1, 1],
    },
    IdentityRow {
        key: "8_21",
        first_degrees: &[6, 2, 2, 2, 2, 2, 2, 2],
        first_identity: &[5, 1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[6, 2, 3, 3, 3, 3, 3, 3],
        second_identity: &[5, 1, 1, 1, 1, 1, 1, 1],
    },
    IdentityRow {
        key: "8_22",
        first_degrees: &[7, 2, 2, 2, 2, 2, 2, 2],
        first_identity: &[0, 1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[7, 3, 3, 3, 3, 3, 3, 3],
        second_identity: &[0, 2, 2, 2, 2, 2, 2, 2],
    },
];

/// Identity elements where the apex is joined to every vertex of the tree
/// once (first column) or twice (second column).
pub const FULLY_JOINED_ROWS: &[IdentityRow] = &[
    IdentityRow {
        key: "2_0",
        first_degrees: &[2, 2],
        first_identity: &[1, 1],
        second_degrees: &[3, 3],
        second_identity: &[2, 2],
    },
    IdentityRow {
        key: "3_0",
        first_degrees: &[3, 2, 2],
        first_identity: &[1, 1, 1],
        second_degrees: &[4, 3, 3],
        second_identity: &[2, 2, 2],
    },
    IdentityRow {
        key: "4_0",
        first_degrees: &[3, 3, 2, 2],
        first_identity: &[1, 1, 1, 1],
        second_degrees: &[4, 4, 3, 3],
        second_identity: &[2, 2, 2, 2],
    },
    IdentityRow {
        key: "4_1",
        first_degrees: &[4, 2, 2, 2],
        first_identity: &[1, 1, 1, 1],
        second_degrees: &[5, 3, 3, 3],
        second_identity: &[2, 2, 2, 2],
    },
    IdentityRow {
        key: "5_0",
        first_degrees: &[3, 3, 2, 3, 2],
        first_identity: &[1, 1, 1, 1, 1],
        second_degrees: &[4, 4, 3, 4, 3],
        second_identity: &[2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "5_1",
        first_degrees: &[4, 3, 2, 2, 2],
        first_identity: &[1, 1, 1, 1, 1],
        second_degrees: &[5, 4, 3, 3, 3],
        second_identity: &[2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "5_2",
        first_degrees: &[5, 2, 2, 2, 2],
        first_identity: &[1, 1, 1, 1, 1],
        second_degrees: &[6, 3, 3, 3, 3],
        second_identity: &[2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "6_0",
        first_degrees: &[3, 3, 3, 2, 3, 2],
        first_identity: &[1, 1, 1, 1, 1, 1],
        second_degrees: &[4, 4, 4, 3, 4, 3],
        second_identity: &[2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "6_1",
        first_degrees: &[3, 4, 2, 2, 3, 2],
        first_identity: &[1, 1, 1, 1, 1, 1],
        second_degrees: &[4, 5, 3, 3, 4, 3],
        second_identity: &[2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "6_2",
        first_degrees: &[4, 4, 2, 2, 2, 2],
        first_identity: &[1, 1, 1, 1, 1, 1],
        second_degrees: &[5, 5, 3, 3, 3, 3],
        second_identity: &[2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "6_3",
        first_degrees: &[4, 3, 2, 3, 2, 2],
        first_identity: &[1, 1, 1, 1, 1, 1],
        second_degrees: &[5, 4, 3, 4, 3, 3],
        second_identity: &[2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "6_4",
        first_degrees: &[5, 3, 2, 2, 2, 2],
        first_identity: &[1, 1, 1, 1, 1, 1],
        second_degrees: &[6, 4, 3, 3, 3, 3],
        second_identity: &[2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "6_5",
        first_degrees: &[6, 2, 2, 2, 2, 2],
        first_identity: &[1, 1, 1, 1, 1, 1],
        second_degrees: &[7, 3, 3, 3, 3, 3],
        second_identity: &[2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "7_0",
        first_degrees: &[3, 3, 3, 2, 3, 3, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[4, 4, 4, 3, 4, 4, 3],
        second_identity: &[2, 2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "7_1",
        first_degrees: &[3, 3, 3, 2, 4, 2, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[4, 4, 4, 3, 5, 3, 3],
        second_identity: &[2, 2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "7_2",
        first_degrees: &[4, 3, 3, 2, 3, 2, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[5, 4, 4, 3, 4, 3, 3],
        second_identity: &[2, 2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "7_3",
        first_degrees: &[3, 5, 2, 2, 2, 3, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[4, 6, 3, 3, 3, 4, 3],
        second_identity: &[2, 2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "7_4",
        first_degrees: &[3, 4, 2, 2, 4, 2, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[4, 5, 3, 3, 5, 3, 3],
        second_identity: &[2, 2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "7_5",
        first_degrees: &[4, 4, 2, 2, 3, 2, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[5, 5, 3, 3, 4, 3, 3],
        second_identity: &[2, 2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "7_6",
        first_degrees: &[5, 4, 2, 2, 2, 2, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[6, 5, 3, 3, 3, 3, 3],
        second_identity: &[2, 2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "7_7",
        first_degrees: &[4, 3, 2, 3, 2, 3, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[5, 4, 3, 4, 3, 4, 3],
        second_identity: &[2, 2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "7_8",
        first_degrees: &[5, 3, 2, 3, 2, 2, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[6, 4, 3, 4, 3, 3, 3],
        second_identity: &[2, 2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "7_9",
        first_degrees: &[6, 3, 2, 2, 2, 2, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[7, 4, 3, 3, 3, 3, 3],
        second_identity: &[2, 2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "7_10",
        first_degrees: &[7, 2, 2, 2, 2, 2, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[8, 3, 3, 3, 3, 3, 3],
        second_identity: &[2, 2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "8_0",
        first_degrees: &[3, 3, 3, 3, 2, 3, 3, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[4, 4, 4, 4, 3, 4, 4, 3],
        second_identity: &[2, 2, 2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "8_1",
        first_degrees: &[3, 3, 4, 2, 2, 3, 3, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[4, 4, 5, 3, 3, 4, 4, 3],
        second_identity: &[2, 2, 2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "8_2",
        first_degrees: &[3, 3, 4, 2, 2, 4, 2, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[4, 4, 5, 3, 3, 5, 3, 3],
        second_identity: &[2, 2, 2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "8_3",
        first_degrees: &[3, 4, 3, 2, 2, 3, 3, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[4, 5, 4, 3, 3, 4, 4, 3],
        second_identity: &[2, 2, 2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "8_4",
        first_degrees: &[3, 4, 3, 2, 2, 4, 2, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[4, 5, 4, 3, 3, 5, 3, 3],
        second_identity: &[2, 2, 2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "8_5",
        first_degrees: &[4, 4, 3, 2, 2, 3, 2, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[5, 5, 4, 3, 3, 4, 3, 3],
        second_identity: &[2, 2, 2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "8_6",
        first_degrees: &[4, 3, 3, 2, 3, 3, 2, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[5, 4, 4, 3, 4, 4, 3, 3],
        second_identity: &[2, 2, 2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "8_7",
        first_degrees: &[3, 3, 3, 2, 5, 2, 2, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[4, 4, 4, 3, 6, 3, 3, 3],
        second_identity: &[2, 2, 2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "8_8",
        first_degrees: &[4, 3, 3, 2, 4, 2, 2, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[5, 4, 4, 3, 5, 3, 3, 3],
        second_identity: &[2, 2, 2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "8_9",
        first_degrees: &[4, 3, 3, 2, 3, 2, 3, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[5, 4, 4, 3, 4, 3, 4, 3],
        second_identity: &[2, 2, 2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "8_10",
        first_degrees: &[5, 3, 3, 2, 3, 2, 2, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[6, 4, 4, 3, 4, 3, 3, 3],
        second_identity: &[2, 2, 2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "8_11",
        first_degrees: &[3, 6, 2, 2, 2, 2, 3, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[4, 7, 3, 3, 3, 3, 4, 3],
        second_identity: &[2, 2, 2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "8_12",
        first_degrees: &[3, 5, 2, 2, 2, 4, 2, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[4, 6, 3, 3, 3, 5, 3, 3],
        second_identity: &[2, 2, 2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "8_13",
        first_degrees: &[4, 5, 2, 2, 2, 3, 2, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[5, 6, 3, 3, 3, 4, 3, 3],
        second_identity: &[2, 2, 2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "8_14",
        first_degrees: &[5, 5, 2, 2, 2, 2, 2, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[6, 6, 3, 3, 3, 3, 3, 3],
        second_identity: &[2, 2, 2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "8_15",
        first_degrees: &[4, 4, 2, 2, 4, 2, 2, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[5, 5, 3, 3, 5, 3, 3, 3],
        second_identity: &[2, 2, 2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "8_16",
        first_degrees: &[4, 4, 2, 2, 3, 2, 3, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[5, 5, 3, 3, 4, 3, 4, 3],
        second_identity: &[2, 2, 2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "8_17",
        first_degrees: &[5, 4, 2, 2, 3, 2, 2, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[6, 5, 3, 3, 4, 3, 3, 3],
        second_identity: &[2, 2, 2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "8_18",
        first_degrees: &[6, 4, 2, 2, 2, 2, 2, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[7, 5, 3, 3, 3, 3, 3, 3],
        second_identity: &[2, 2, 2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "8_19",
        first_degrees: &[5, 3, 2, 3, 2, 3, 2, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[6, 4, 3, 4, 3, 4, 3, 3],
        second_identity: &[2, 2, 2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "8_20",
        first_degrees: &[6, 3, 2, 3, 2, 2, 2, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[7, 4, 3, 4, 3, 3, 3, 3],
        second_identity: &[2, 2, 2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "8_21",
        first_degrees: &[7, 3, 2, 2, 2, 2, 2, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[8, 4, 3, 3, 3, 3, 3, 3],
        second_identity: &[2, 2, 2, 2, 2, 2, 2, 2],
    },
    IdentityRow {
        key: "8_22",
        first_degrees: &[8, 2, 2, 2, 2, 2, 2, 2],
        first_identity: &[1, 1, 1, 1, 1, 1, 1, 1],
        second_degrees: &[9, 3, 3, 3, 3, 3, 3, 3],
        second_identity: &[2, 2, 2, 2, 2, 2, 2, 2],
    },
];
