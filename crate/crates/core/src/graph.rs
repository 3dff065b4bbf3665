//! Simple undirected graphs and `G(n, p)` sampling.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use rand::distributions::{Bernoulli, Distribution};
use rand::Rng;

use crate::rng::{SeedSequence, StreamDomain};
use crate::{Error, Result};

/// A simple undirected graph together with its degree vector.
///
/// Edges are stored as `(i, j)` with `i < j`. The degree vector is filled in
/// at construction and the value is immutable afterwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    degrees: Vec<u32>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops, duplicate
    /// edges and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 || n > u32::MAX as usize {
            return Err(Error::InvalidParameter("node count must be in 1..=u32::MAX"));
        }
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        let mut degrees = alloc::vec![0u32; n];
        for (i, j) in edges {
            if i >= n || j >= n {
                return Err(Error::InvalidParameter("edge endpoint out of range"));
            }
            if i == j {
                return Err(Error::InvalidParameter("self-loops are not allowed"));
            }
            let e = if i < j { (i as u32, j as u32) } else { (j as u32, i as u32) };
            if !seen.insert(e) {
                return Err(Error::InvalidParameter("duplicate edge"));
            }
            degrees[i] += 1;
            degrees[j] += 1;
            out.push(e);
        }
        Ok(Graph { n, edges: out, degrees })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Number of unordered node pairs, `C(n, 2)`.
    pub fn max_edges(&self) -> u64 {
        let n = self.n as u64;
        n * (n - 1) / 2
    }
}

fn check_np(n: usize, p: f64) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameter("n must be at least 2"));
    }
    if n > u32::MAX as usize {
        return Err(Error::InvalidParameter("n too large"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter("p must lie in [0, 1]"));
    }
    Ok(())
}

/// Samples `G(n, p)`: one Bernoulli(p) draw per unordered pair `i < j`, in
/// lexicographic pair order.
pub fn generate_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    check_np(n, p)?;
    let coin = Bernoulli::new(p).map_err(|_| Error::InvalidParameter("p must lie in [0, 1]"))?;
    let mut edges = Vec::new();
    let mut degrees = alloc::vec![0u32; n];
    for i in 0..n {
        for j in (i + 1)..n {
            if coin.sample(rng) {
                edges.push((i as u32, j as u32));
                degrees[i] += 1;
                degrees[j] += 1;
            }
        }
    }
    Ok(Graph { n, edges, degrees })
}

/// Edge fraction `|E| / C(n, 2)`.
pub fn estimate_p(g: &Graph) -> f64 {
    g.edge_count() as f64 / g.max_edges() as f64
}

/// Parameters of a reproducible `G(n, p)` ensemble.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GraphEnsembleSpec {
    pub n: usize,
    pub p: f64,
    pub replicates: usize,
    pub seed: u64,
}

impl GraphEnsembleSpec {
    pub fn new(n: usize, p: f64, replicates: usize, seed: u64) -> Result<Self> {
        check_np(n, p)?;
        if replicates == 0 {
            return Err(Error::InvalidParameter("replicates must be at least 1"));
        }
        Ok(Self { n, p, replicates, seed })
    }

    /// Replicate `r`, drawn from its own sub-stream.
    pub fn graph(&self, r: usize) -> Graph {
        let mut rng = SeedSequence::new(self.seed).stream(StreamDomain::Graph, r as u64);
        generate_graph(self.n, self.p, &mut rng).expect("parameters validated at construction")
    }

    pub fn graphs(&self) -> impl Iterator<Item = Graph> + '_ {
        (0..self.replicates).map(move |r| self.graph(r))
    }
}

/// Degrees of nodes `i` and `j` in every replicate of the ensemble.
pub fn degree_pair_samples(spec: &GraphEnsembleSpec, i: usize, j: usize) -> Result<Vec<(u32, u32)>> {
    if i == j {
        return Err(Error::InvalidParameter("degree pair needs two distinct nodes"));
    }
    if i >= spec.n || j >= spec.n {
        return Err(Error::InvalidParameter("node index out of range"));
    }
    if spec.replicates == 0 {
        return Err(Error::InvalidParameter("replicates must be at least 1"));
    }
    Ok(spec
        .graphs()
        .map(|g| (g.degrees()[i], g.degrees()[j]))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::StreamRng;
    use proptest::prelude::*;
    use rand::SeedableRng;

    fn rng(seed: u64) -> StreamRng {
        StreamRng::seed_from_u64(seed)
    }

    #[test]
    fn empty_graph_when_p_is_zero() {
        let g = generate_graph(10, 0.0, &mut rng(1)).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert!(g.degrees().iter().all(|&d| d == 0));
        assert_eq!(estimate_p(&g), 0.0);
    }

    #[test]
    fn complete_graph_when_p_is_one() {
        let g = generate_graph(5, 1.0, &mut rng(1)).unwrap();
        assert_eq!(g.edge_count(), 10);
        assert!(g.degrees().iter().all(|&d| d == 4));
        assert_eq!(estimate_p(&g), 1.0);
    }

    #[test]
    fn hand_counted_edge_fraction() {
        // nodes 1..=5 in the text, 0-indexed here
        let g = Graph::from_edges(5, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(estimate_p(&g), 0.2);
        assert_eq!(g.degrees(), &[1, 1, 1, 1, 0]);
    }

    #[test]
    fn parameter_errors() {
        assert!(generate_graph(1, 0.5, &mut rng(0)).is_err());
        assert!(generate_graph(5, -0.1, &mut rng(0)).is_err());
        assert!(generate_graph(5, 1.5, &mut rng(0)).is_err());
        assert!(generate_graph(5, f64::NAN, &mut rng(0)).is_err());
        assert!(GraphEnsembleSpec::new(5, 0.5, 0, 0).is_err());
    }

    #[test]
    fn from_edges_rejects_non_simple_input() {
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert!(Graph::from_edges(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
    }

    #[test]
    fn degree_pairs() {
        let spec = GraphEnsembleSpec::new(6, 0.4, 1, 9).unwrap();
        assert_eq!(degree_pair_samples(&spec, 0, 1).unwrap().len(), 1);
        assert!(degree_pair_samples(&spec, 2, 2).is_err());
        assert!(degree_pair_samples(&spec, 2, 6).is_err());
    }

    #[test]
    fn replicate_independent_of_replicate_count() {
        let a = GraphEnsembleSpec::new(20, 0.3, 5, 11).unwrap();
        let b = GraphEnsembleSpec::new(20, 0.3, 50, 11).unwrap();
        assert_eq!(a.graph(4), b.graph(4));
        assert_ne!(a.graph(3), a.graph(4));
    }

    #[test]
    fn mean_degree_converges() {
        let spec = GraphEnsembleSpec::new(61, 0.1, 10_000, 2024).unwrap();
        let reps = spec.replicates as f64;
        let mut sums = [0.0f64; 61];
        for g in spec.graphs() {
            for (s, &d) in sums.iter_mut().zip(g.degrees()) {
                *s += d as f64;
            }
        }
        let tol = 5.0 * (60.0 * 0.1 * 0.9 / reps).sqrt();
        for s in sums {
            assert!((s / reps - 6.0).abs() < tol, "node mean {} too far from 6", s / reps);
        }
    }

    proptest! {
        #[test]
        fn handshake_and_degree_bounds(n in 2usize..40, p in 0.0f64..=1.0, seed in any::<u64>()) {
            let g = generate_graph(n, p, &mut rng(seed)).unwrap();
            let total: u64 = g.degrees().iter().map(|&d| d as u64).sum();
            prop_assert_eq!(total, 2 * g.edge_count() as u64);
            prop_assert!(g.degrees().iter().all(|&d| (d as usize) < n));
            prop_assert!(g.edges().iter().all(|&(i, j)| i < j));
            let rebuilt = Graph::from_edges(n, g.edges().iter().map(|&(i, j)| (i as usize, j as usize))).unwrap();
            prop_assert_eq!(rebuilt, g);
        }

        #[test]
        fn identical_seeds_identical_graphs(seed in any::<u64>()) {
            let a = generate_graph(30, 0.2, &mut rng(seed)).unwrap();
            let b = generate_graph(30, 0.2, &mut rng(seed)).unwrap();
            prop_assert_eq!(a, b);
        }
    }
}
