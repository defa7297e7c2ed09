//! Shared helpers: an independent spanning-tree oracle and integer shorthands.

// Each test binary compiles this module separately and uses a subset of it.
#![allow(dead_code)]

use num_bigint::BigInt;

pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

pub fn bigs(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

/// Counts spanning trees by checking every (n-1)-subset of edges for
/// connectivity and acyclicity. Exponential; for small graphs only.
pub fn spanning_tree_count_bruteforce(n: usize, edges: &[(usize, usize)]) -> u64 {
    if n == 0 {
        return 0;
    }
    if n == 1 {
        return 1;
    }
    let want = n - 1;
    if edges.len() < want {
        return 0;
    }
    let mut count = 0u64;
    let mut pick: Vec<usize> = (0..want).collect();
    loop {
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut merged = 0;
        for &i in &pick {
            let (u, v) = edges[i];
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru] = rv;
                merged += 1;
            }
        }
        if merged == want {
            count += 1;
        }
        // Next lexicographic (n-1)-subset.
        let mut i = want;
        loop {
            if i == 0 {
                return count;
            }
            i -= 1;
            if pick[i] < edges.len() - (want - i) {
                pick[i] += 1;
                for j in i + 1..want {
                    pick[j] = pick[j - 1] + 1;
                }
                break;
            }
        }
    }
}
