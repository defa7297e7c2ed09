//! Shared helpers for the graph tests: small independent oracles that avoid
//! the library's own linear-algebra path.

use num_bigint::BigInt;

/// Union-find over `n` elements, used to check subsets of edges for acyclicity.
struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    /// Merges the classes of `a` and `b`; returns false if they were already equal.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Counts spanning trees of a loop-free multigraph by enumerating all
/// (n-1)-edge subsets. Exponential; only for small fixtures.
pub fn spanning_tree_count_bruteforce(n: usize, edges: &[(usize, usize)]) -> BigInt {
    if n == 0 {
        return BigInt::from(0);
    }
    if n == 1 {
        return BigInt::from(1);
    }
    let k = n - 1;
    if edges.len() < k {
        return BigInt::from(0);
    }
    let mut count: u64 = 0;
    // Iterate over k-subsets of edge indices in lexicographic order.
    let mut pick: Vec<usize> = (0..k).collect();
    loop {
        let mut dsu = Dsu::new(n);
        let mut ok = true;
        for &i in &pick {
            let (u, v) = edges[i];
            if !dsu.union(u, v) {
                ok = false;
                break;
            }
        }
        if ok {
            count += 1;
        }
        // Advance to the next k-subset of {0, .., edges.len()-1}.
        let mut i = k;
        loop {
            if i == 0 {
                return BigInt::from(count);
            }
            i -= 1;
            if pick[i] != i + edges.len() - k {
                pick[i] += 1;
                for j in i + 1..k {
                    pick[j] = pick[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Multiset equality on small vectors, ignoring order.
pub fn same_multiset<T: Ord + Clone>(a: &[T], b: &[T]) -> bool {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort();
    b.sort();
    a == b
}
