use crate::SandpileError;
use graph_core::{GraphError, MultiGraph};
use int_linalg::{adjugate, cokernel_torsion, determinant, GroupStructure, IntMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::collections::BTreeSet;
use std::fmt;

/// Total firings allowed in one stabilization before giving up.
pub const DEFAULT_FIRING_BUDGET: u64 = 100_000_000;

/// Chips on the non-sink vertices of a model, ordered by ascending vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    values: Vec<BigInt>,
}

impl Configuration {
    pub(crate) fn new(values: Vec<BigInt>) -> Self {
        Configuration { values }
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Outcome of playing a pile to rest: the stable configuration reached and
/// how many times each site fired.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stabilization {
    pub config: Configuration,
    pub firings: Vec<BigInt>,
}

/// A recurrent class representative together with its certificate: the
/// integer vector `x` with `reduced_laplacian * x = config - input`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representative {
    pub config: Configuration,
    pub certificate: Vec<BigInt>,
}

/// A chip-firing model: a connected loop-free multigraph with one vertex
/// marked as the sink. Chips sit on the other vertices (the sites); a site
/// holding at least as many chips as its degree may fire, sending one chip
/// along every incident edge. Chips arriving at the sink vanish.
#[derive(Debug, Clone)]
pub struct SandpileModel {
    graph: MultiGraph,
    sink: usize,
    sites: Vec<usize>,
    site_of: Vec<Option<usize>>,
    degrees: Vec<usize>,
    degrees_big: Vec<BigInt>,
    /// Per site: `(receiving site, parallel edge count)` for non-sink
    /// neighbors.
    transfers: Vec<Vec<(usize, usize)>>,
    /// Per site: number of edges to the sink.
    sink_edges: Vec<usize>,
}

impl SandpileModel {
    pub fn new(graph: MultiGraph, sink: usize) -> Result<Self, GraphError> {
        if sink >= graph.vertex_count() {
            return Err(GraphError::InvalidGraph(format!(
                "sink {sink} out of range for {} vertices",
                graph.vertex_count()
            )));
        }
        if !graph.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let n = graph.vertex_count();
        let sites: Vec<usize> = (0..n).filter(|&v| v != sink).collect();
        let mut site_of = vec![None; n];
        for (i, &v) in sites.iter().enumerate() {
            site_of[v] = Some(i);
        }
        let degrees: Vec<usize> = sites.iter().map(|&v| graph.degree(v)).collect();
        let degrees_big = degrees.iter().map(|&d| BigInt::from(d as u64)).collect();
        let mut transfers = vec![Vec::new(); sites.len()];
        let mut sink_edges = vec![0usize; sites.len()];
        for (i, &v) in sites.iter().enumerate() {
            let mut counts: std::collections::BTreeMap<usize, usize> = Default::default();
            for e in graph.incident_edges(v) {
                let w = graph.other_end(e, v);
                if w == sink {
                    sink_edges[i] += 1;
                } else {
                    *counts.entry(site_of[w].unwrap()).or_insert(0) += 1;
                }
            }
            transfers[i] = counts.into_iter().collect();
        }
        Ok(SandpileModel {
            graph,
            sink,
            sites,
            site_of,
            degrees,
            degrees_big,
            transfers,
            sink_edges,
        })
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    /// Number of non-sink vertices.
    pub fn site_count(&self) -> usize {
        self.sites.len()
    }

    /// The non-sink vertex ids, ascending; configurations follow this order.
    pub fn sites(&self) -> &[usize] {
        &self.sites
    }

    pub fn site_of_vertex(&self, v: usize) -> Option<usize> {
        self.site_of[v]
    }

    pub fn vertex_of_site(&self, i: usize) -> usize {
        self.sites[i]
    }

    pub fn site_degree(&self, i: usize) -> usize {
        self.degrees[i]
    }

    /// The graph Laplacian with the sink's row and column removed.
    pub fn reduced_laplacian(&self) -> IntMatrix {
        self.graph.reduced_laplacian(self.sink)
    }

    /// Order of the addition group on recurrent piles: the number of spanning
    /// trees, as a determinant.
    pub fn group_order(&self) -> BigInt {
        determinant(&self.reduced_laplacian())
    }

    /// Structure of the addition group, as invariant factors.
    pub fn group(&self) -> GroupStructure {
        cokernel_torsion(&self.reduced_laplacian())
    }

    pub fn zero(&self) -> Configuration {
        Configuration::new(vec![BigInt::zero(); self.site_count()])
    }

    /// The largest stable pile: degree minus one everywhere.
    pub fn max_stable(&self) -> Configuration {
        Configuration::new(
            self.degrees
                .iter()
                .map(|&d| BigInt::from(d as u64) - 1)
                .collect(),
        )
    }

    /// Wraps raw values as a pile. Panics on a length mismatch.
    pub fn config(&self, values: Vec<BigInt>) -> Configuration {
        assert_eq!(
            values.len(),
            self.site_count(),
            "one value per non-sink vertex"
        );
        Configuration::new(values)
    }

    pub fn config_from_i64(&self, values: &[i64]) -> Configuration {
        self.config(values.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// Whether every site holds at least zero and fewer chips than its
    /// degree.
    pub fn is_stable(&self, c: &Configuration) -> bool {
        c.values
            .iter()
            .zip(&self.degrees_big)
            .all(|(v, d)| !v.is_negative() && v < d)
    }

    fn require_nonnegative(&self, c: &Configuration) -> Result<(), SandpileError> {
        if c.values.iter().any(|v| v.is_negative()) {
            return Err(SandpileError::NegativeChips);
        }
        Ok(())
    }

    fn fire(&self, i: usize, values: &mut [BigInt], firings: &mut [u64]) {
        values[i] -= &self.degrees_big[i];
        for &(j, mult) in &self.transfers[i] {
            values[j] += mult as u64;
        }
        firings[i] += 1;
    }

    /// Plays the pile to rest, firing the lowest-index unstable site first.
    pub fn stabilize(&self, c: &Configuration) -> Result<Stabilization, SandpileError> {
        self.stabilize_with_budget(c, DEFAULT_FIRING_BUDGET)
    }

    pub fn stabilize_with_budget(
        &self,
        c: &Configuration,
        budget: u64,
    ) -> Result<Stabilization, SandpileError> {
        self.require_nonnegative(c)?;
        let mut values = c.values.clone();
        let mut firings = vec![0u64; self.site_count()];
        let mut unstable: BTreeSet<usize> = (0..self.site_count())
            .filter(|&i| values[i] >= self.degrees_big[i])
            .collect();
        let mut total = 0u64;
        while let Some(&i) = unstable.iter().next() {
            total += 1;
            if total > budget {
                return Err(SandpileError::BoundExceeded(format!(
                    "{budget} firings were not enough to reach a stable pile"
                )));
            }
            self.fire(i, &mut values, &mut firings);
            if values[i] < self.degrees_big[i] {
                unstable.remove(&i);
            }
            for &(j, _) in &self.transfers[i] {
                if values[j] >= self.degrees_big[j] {
                    unstable.insert(j);
                }
            }
        }
        Ok(Stabilization {
            config: Configuration::new(values),
            firings: firings.into_iter().map(BigInt::from).collect(),
        })
    }

    /// Plays the pile to rest letting `pick` choose which unstable site fires
    /// next: it receives the ascending list of unstable site indices and
    /// returns a position in that list. The result never depends on the
    /// choices.
    pub fn stabilize_with<F>(
        &self,
        c: &Configuration,
        mut pick: F,
    ) -> Result<Stabilization, SandpileError>
    where
        F: FnMut(&[usize]) -> usize,
    {
        self.require_nonnegative(c)?;
        let mut values = c.values.clone();
        let mut firings = vec![0u64; self.site_count()];
        let mut total = 0u64;
        loop {
            let unstable: Vec<usize> = (0..self.site_count())
                .filter(|&i| values[i] >= self.degrees_big[i])
                .collect();
            if unstable.is_empty() {
                break;
            }
            total += 1;
            if total > DEFAULT_FIRING_BUDGET {
                return Err(SandpileError::BoundExceeded(format!(
                    "{DEFAULT_FIRING_BUDGET} firings were not enough to reach a stable pile"
                )));
            }
            let i = unstable[pick(&unstable)];
            self.fire(i, &mut values, &mut firings);
        }
        Ok(Stabilization {
            config: Configuration::new(values),
            firings: firings.into_iter().map(BigInt::from).collect(),
        })
    }

    /// Adds two piles and plays the sum to rest.
    pub fn combine(
        &self,
        a: &Configuration,
        b: &Configuration,
    ) -> Result<Configuration, SandpileError> {
        let sum: Vec<BigInt> = a
            .values
            .iter()
            .zip(&b.values)
            .map(|(x, y)| x + y)
            .collect();
        Ok(self.stabilize(&Configuration::new(sum))?.config)
    }

    /// Burning test: starting from a stable pile, drop one chip per sink edge
    /// and play to rest; the pile is recurrent exactly when every site fires
    /// exactly once.
    pub fn is_recurrent(&self, c: &Configuration) -> Result<bool, SandpileError> {
        self.require_nonnegative(c)?;
        if !self.is_stable(c) {
            return Err(SandpileError::Unstable);
        }
        let seeded: Vec<BigInt> = c
            .values
            .iter()
            .zip(&self.sink_edges)
            .map(|(v, &s)| v + BigInt::from(s as u64))
            .collect();
        let played = self.stabilize(&Configuration::new(seeded))?;
        Ok(played.firings.iter().all(|f| f == &BigInt::from(1)))
    }

    /// The neutral recurrent pile: with `m` the largest stable pile, this is
    /// `stabilize(2m - stabilize(2m))`.
    pub fn identity(&self) -> Result<Configuration, SandpileError> {
        let m = self.max_stable();
        let doubled: Vec<BigInt> = m.values.iter().map(|v| v * 2u32).collect();
        let doubled = Configuration::new(doubled);
        let settled = self.stabilize(&doubled)?;
        let diff: Vec<BigInt> = doubled
            .values
            .iter()
            .zip(&settled.config.values)
            .map(|(a, b)| a - b)
            .collect();
        Ok(self.stabilize(&Configuration::new(diff))?.config)
    }

    /// The recurrent pile equivalent to `c` modulo the reduced Laplacian's
    /// column space, together with the certificate `x` satisfying
    /// `reduced_laplacian * x = result - c`. Entries of `c` may be negative.
    pub fn recurrent_representative(
        &self,
        c: &Configuration,
    ) -> Result<Representative, SandpileError> {
        let tau = self.group_order();
        assert!(tau.is_positive(), "connected models have spanning trees");

        // Shift by a multiple of tau in every coordinate: tau * ones is in
        // the Laplacian's column space, and enough of it dominates the
        // largest stable pile, after which stabilization lands on a
        // recurrent pile.
        let mut shift = BigInt::zero();
        for (i, v) in c.values.iter().enumerate() {
            let target = BigInt::from(self.degrees[i] as u64) - 1;
            let deficit: BigInt = &target - v;
            if deficit.is_positive() {
                // ceil(deficit / tau)
                let k = (&deficit + &tau - BigInt::from(1)).div_floor(&tau);
                if k > shift {
                    shift = k;
                }
            }
        }
        let raised: Vec<BigInt> = c.values.iter().map(|v| v + &shift * &tau).collect();
        let played = self.stabilize(&Configuration::new(raised))?;

        // raised - config = L * firings and raised - c = shift * tau * ones
        // = L * (shift * adjugate(L) * ones), so the certificate is
        // shift * adjugate(L) * ones - firings.
        let adj = adjugate(&self.reduced_laplacian());
        let ones = vec![BigInt::from(1); self.site_count()];
        let adj_ones = adj.mul_vec(&ones);
        let certificate: Vec<BigInt> = adj_ones
            .into_iter()
            .zip(&played.firings)
            .map(|(a, f)| a * &shift - f)
            .collect();
        Ok(Representative {
            config: played.config,
            certificate,
        })
    }
}
