//! Polygon flowers: a central polygon with one polygon chain grafted onto
//! each of its sides.  The spanning-tree count and the full invariant-factor
//! decomposition follow from the chains' counts alone.

use graph_core::{build_outerplane, PlaneGraph, Tree};
use int_linalg::GroupStructure;
use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::chain::{
    chain_tau_recurrence, tau_polygon_chain, tau_polygon_chain_by_matchings,
    PolygonChainSpec, MAX_MATCHING_POLYGONS,
};
use crate::error::OuterplanarError;

/// Which end polygon of a chain is glued to the central polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Attachment {
    /// The chain's first polygon sits on the center.
    First,
    /// The chain's last polygon sits on the center.
    Last,
}

/// A central polygon of `central_length` sides with one chain per side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonFlowerSpec {
    central_length: usize,
    chains: Vec<(PolygonChainSpec, Attachment)>,
}

impl PolygonFlowerSpec {
    /// Wraps a central side count and one `(chain, attachment)` pair per
    /// side.  The center needs at least 3 sides, exactly one chain per side,
    /// and each attached end polygon at least 3 sides — shrinking a 2-sided
    /// attachment by the shared edge would leave nothing to count.
    pub fn new(
        central_length: usize,
        chains: Vec<(PolygonChainSpec, Attachment)>,
    ) -> Result<Self, OuterplanarError> {
        if central_length < 3 {
            return Err(OuterplanarError::InvalidSpec(format!(
                "central polygon needs at least 3 sides (got {central_length})"
            )));
        }
        if chains.len() != central_length {
            return Err(OuterplanarError::InvalidSpec(format!(
                "a {central_length}-sided center needs exactly {central_length} chains (got {})",
                chains.len()
            )));
        }
        for (chain, attachment) in &chains {
            if chain.lengths()[attachment_index(chain, *attachment)] < 3 {
                return Err(OuterplanarError::ContractionUndefined);
            }
        }
        Ok(PolygonFlowerSpec {
            central_length,
            chains,
        })
    }

    /// Reads `"<l>; <chain>; <chain>; …"` with one chain spec per central
    /// side.  A chain spec may end in `@first` or `@last` to pick the
    /// attached end; the default is the first polygon.
    pub fn parse(text: &str) -> Result<Self, OuterplanarError> {
        let mut parts = text.split(';');
        let head = parts.next().expect("split yields at least one part").trim();
        let central_length: usize = head
            .parse()
            .map_err(|_| OuterplanarError::Parse(format!("bad central side count {head:?}")))?;
        let mut chains = Vec::new();
        for part in parts {
            let part = part.trim();
            let (spec_text, attachment) = if let Some(rest) = part.strip_suffix("@last") {
                (rest, Attachment::Last)
            } else if let Some(rest) = part.strip_suffix("@first") {
                (rest, Attachment::First)
            } else {
                (part, Attachment::First)
            };
            chains.push((PolygonChainSpec::parse(spec_text)?, attachment));
        }
        PolygonFlowerSpec::new(central_length, chains)
    }

    /// Side count of the central polygon.
    pub fn central_length(&self) -> usize {
        self.central_length
    }

    /// The attached chains in central-side order.
    pub fn chains(&self) -> &[(PolygonChainSpec, Attachment)] {
        &self.chains
    }

    /// Spanning-tree count of each chain on its own.
    pub fn chain_taus(&self) -> Vec<BigInt> {
        self.chains
            .iter()
            .map(|(chain, _)| tau_polygon_chain(chain))
            .collect()
    }

    /// Spanning-tree count of each chain after contracting the edge it
    /// shares with the center: the recurrence run with the attached end's
    /// side count lowered by one.
    pub fn contraction_taus(&self) -> Vec<BigInt> {
        self.chains
            .iter()
            .map(|(chain, attachment)| {
                let mut lengths = chain.lengths().to_vec();
                lengths[attachment_index(chain, *attachment)] -= 1;
                chain_tau_recurrence(&lengths)
            })
            .collect()
    }

    /// The flower's weak dual: a spider with the center as vertex 0 and one
    /// leg per chain, numbered consecutively leg by leg.
    pub fn spider_tree(&self) -> Tree {
        let mut edges = Vec::new();
        let mut next = 1;
        for (chain, _) in &self.chains {
            edges.push((0, next));
            for _ in 1..chain.polygon_count() {
                edges.push((next, next + 1));
                next += 1;
            }
            next += 1;
        }
        Tree::from_edges(next, &edges).expect("a spider with consecutive leg numbering is a tree")
    }

    /// Face lengths matching [`Self::spider_tree`]: the center first, then
    /// each chain's side counts walking inward from its attached end.
    pub fn spider_lengths(&self) -> Vec<usize> {
        let mut lengths = vec![self.central_length];
        for (chain, attachment) in &self.chains {
            match attachment {
                Attachment::First => lengths.extend(chain.lengths().iter().copied()),
                Attachment::Last => lengths.extend(chain.lengths().iter().rev().copied()),
            }
        }
        lengths
    }
}

fn attachment_index(chain: &PolygonChainSpec, attachment: Attachment) -> usize {
    match attachment {
        Attachment::First => 0,
        Attachment::Last => chain.polygon_count() - 1,
    }
}

/// Spanning-tree count of the flower:
/// `Σ_i contraction_i · Π_{j≠i} τ_j` over the attached chains.
pub fn flower_tau(spec: &PolygonFlowerSpec) -> BigInt {
    let taus = spec.chain_taus();
    let contractions = spec.contraction_taus();
    let mut total = BigInt::zero();
    for (i, contraction) in contractions.iter().enumerate() {
        let mut term = contraction.clone();
        for (j, tau) in taus.iter().enumerate() {
            if j != i {
                term *= tau;
            }
        }
        total += term;
    }
    total
}

/// The divisor chain `Δ_1, …, Δ_{l−2}` of the flower: `Δ_j` is the gcd of
/// all products of `j` distinct chain counts.
pub fn flower_deltas(spec: &PolygonFlowerSpec) -> Vec<BigInt> {
    let taus = spec.chain_taus();
    // The side computation over matchings must tell the same story wherever
    // it is in range.
    for ((chain, _), tau) in spec.chains().iter().zip(&taus) {
        if chain.polygon_count() <= MAX_MATCHING_POLYGONS {
            let by_matchings = tau_polygon_chain_by_matchings(chain)
                .expect("chain length checked against the expansion bound");
            assert_eq!(
                &by_matchings, tau,
                "matching expansion disagrees with the recurrence"
            );
        }
    }
    let l = spec.central_length();
    (1..=l - 2)
        .map(|j| {
            let mut gcd = BigInt::zero();
            for subset in (0..l).combinations(j) {
                let product = subset.iter().fold(BigInt::one(), |acc, &i| acc * &taus[i]);
                gcd = gcd.gcd(&product);
                if gcd.is_one() {
                    break;
                }
            }
            gcd
        })
        .collect()
}

/// The sandpile group of the flower: cyclic orders `Δ_1, Δ_2/Δ_1, …,
/// τ/Δ_{l−2}`.
pub fn flower_group(spec: &PolygonFlowerSpec) -> GroupStructure {
    let deltas = flower_deltas(spec);
    let tau = flower_tau(spec);
    let mut factors = Vec::with_capacity(deltas.len() + 1);
    let mut previous = BigInt::one();
    for delta in &deltas {
        assert!(
            delta.is_multiple_of(&previous),
            "divisor chain must be a chain"
        );
        factors.push(delta / &previous);
        previous = delta.clone();
    }
    assert!(
        tau.is_multiple_of(&previous),
        "the spanning-tree count closes the divisor chain"
    );
    factors.push(&tau / &previous);
    GroupStructure::from_invariant_factors(factors)
}

/// The flower as a plane graph, built from its weak dual spider and face
/// lengths.
pub fn build_flower_graph(spec: &PolygonFlowerSpec) -> PlaneGraph {
    build_outerplane(&spec.spider_tree(), &spec.spider_lengths())
        .expect("a validated flower spec is realizable")
}
