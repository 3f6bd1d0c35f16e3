//! Majorana interaction graphs and block-connectivity profiles.
//!
//! Vertices are Majorana indices `0..n`, kept even so the spin representation
//! on `n/2` qubits exists. The block connectivity `g_k` counts, per unit of
//! average degree, the edges leaving the canonical block `{0, .., k-1}`; the
//! canonical block matches the Jordan-Wigner support of the battery operators
//! (the size-`k` operator occupies the lowest `k` Majorana indices).

use crate::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::fmt::Write as _;

/// Maximum redraw attempts for one Watts-Strogatz rewiring before the edge is
/// kept in place.
const REWIRE_RETRIES: usize = 64;

/// How a graph was built.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Construction {
    Complete,
    Ring { kappa: usize },
    WattsStrogatz { kappa: usize, p: f64 },
    Star,
    /// Loaded from an edge-list file.
    External,
}

/// Undirected simple graph on an even number of Majorana vertices.
///
/// Edges are stored once as ordered pairs `(i, j)` with `i < j`, sorted
/// lexicographically, so equal graphs compare equal structurally.
#[derive(Debug, Clone, PartialEq)]
pub struct MajoranaGraph {
    n_vertices: usize,
    edges: Vec<(u32, u32)>,
    construction: Construction,
    seed: Option<u64>,
}

/// Average degree together with the block connectivities `g_1..=g_N`.
#[derive(Debug, Clone)]
pub struct ConnectivityProfile {
    /// Average degree `2 n_E / N`.
    pub d: f64,
    /// Boundary edge count of the canonical block `{0..k-1}`, index `k - 1`.
    pub boundary_counts: Vec<usize>,
    /// `g_k = boundary_counts[k-1] / d`, index `k - 1`.
    pub g: Vec<f64>,
}

impl ConnectivityProfile {
    /// `g_k` for `1 <= k <= N`.
    pub fn g_k(&self, k: usize) -> Result<f64> {
        if k == 0 || k > self.g.len() {
            return Err(Error::BlockOutOfRange {
                k,
                n: self.g.len(),
            });
        }
        Ok(self.g[k - 1])
    }

    pub fn n_vertices(&self) -> usize {
        self.g.len()
    }
}

fn check_even_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::TooFewVertices { min: 2, got: n });
    }
    if n % 2 != 0 {
        return Err(Error::OddMajoranaCount(n));
    }
    Ok(())
}

impl MajoranaGraph {
    fn from_parts(
        n_vertices: usize,
        mut edges: Vec<(u32, u32)>,
        construction: Construction,
        seed: Option<u64>,
    ) -> Self {
        edges.sort_unstable();
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]), "duplicate edge");
        debug_assert!(edges.iter().all(|&(i, j)| i < j && (j as usize) < n_vertices));
        Self {
            n_vertices,
            edges,
            construction,
            seed,
        }
    }

    /// Complete graph on `n` vertices: all `n(n-1)/2` edges.
    pub fn complete(n: usize) -> Result<Self> {
        check_even_n(n)?;
        let mut edges = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n as u32 {
            for j in (i + 1)..n as u32 {
                edges.push((i, j));
            }
        }
        Ok(Self::from_parts(n, edges, Construction::Complete, None))
    }

    /// Circulant ring: vertex `i` connects to `i +- 1, .., i +- kappa/2` mod `n`.
    pub fn ring(n: usize, kappa: usize) -> Result<Self> {
        check_even_n(n)?;
        if kappa < 2 || kappa >= n || kappa % 2 != 0 {
            return Err(Error::InvalidRingDegree { n, kappa });
        }
        let mut edges = Vec::with_capacity(n * kappa / 2);
        for i in 0..n {
            for o in 1..=kappa / 2 {
                let j = (i + o) % n;
                let (a, b) = (i.min(j) as u32, i.max(j) as u32);
                edges.push((a, b));
            }
        }
        Ok(Self::from_parts(n, edges, Construction::Ring { kappa }, None))
    }

    /// Watts-Strogatz small-world graph.
    ///
    /// Starts from [`MajoranaGraph::ring`] and visits each ring edge once in
    /// canonical order (offset-major, then base vertex). With probability `p`
    /// the far endpoint is replaced by a uniformly random vertex; draws that
    /// would create a self-loop or duplicate edge, or disconnect the graph,
    /// are redrawn up to a bounded retry count, after which the edge is kept
    /// unrewired. The edge count `n kappa / 2` is preserved exactly and the
    /// output is a deterministic function of `(n, kappa, p, seed)`.
    pub fn watts_strogatz(n: usize, kappa: usize, p: f64, seed: u64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) || p.is_nan() {
            return Err(Error::InvalidProbability(p));
        }
        let ring = Self::ring(n, kappa)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut edge_set: BTreeSet<(u32, u32)> = ring.edges.iter().copied().collect();

        for o in 1..=kappa / 2 {
            for u in 0..n {
                let v = (u + o) % n;
                let old = (u.min(v) as u32, u.max(v) as u32);
                if !rng.random_bool(p) {
                    continue;
                }
                for _ in 0..REWIRE_RETRIES {
                    let w = rng.random_range(0..n);
                    if w == u {
                        continue;
                    }
                    let new = (u.min(w) as u32, u.max(w) as u32);
                    if edge_set.contains(&new) {
                        continue;
                    }
                    edge_set.remove(&old);
                    edge_set.insert(new);
                    if is_connected(n, &edge_set) {
                        break;
                    }
                    // undo: this rewiring would disconnect the graph
                    edge_set.remove(&new);
                    edge_set.insert(old);
                }
            }
        }

        let edges: Vec<(u32, u32)> = edge_set.into_iter().collect();
        debug_assert_eq!(edges.len(), n * kappa / 2);
        Ok(Self::from_parts(
            n,
            edges,
            Construction::WattsStrogatz { kappa, p },
            Some(seed),
        ))
    }

    /// Star graph: vertex 0 is the hub, edges `(0, j)` for `j = 1..n`.
    pub fn star(n: usize) -> Result<Self> {
        check_even_n(n)?;
        let edges = (1..n as u32).map(|j| (0, j)).collect();
        Ok(Self::from_parts(n, edges, Construction::Star, None))
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    /// Ordered edge list, pairs `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn construction(&self) -> Construction {
        self.construction
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    /// Average degree `2 n_E / N`.
    pub fn average_degree(&self) -> f64 {
        2.0 * self.n_edges() as f64 / self.n_vertices as f64
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(i, j)| i as usize == v || j as usize == v)
            .count()
    }

    /// Number of edges with exactly one endpoint in the canonical block
    /// `{0, .., k-1}`.
    pub fn boundary_edge_count(&self, k: usize) -> Result<usize> {
        if k == 0 || k > self.n_vertices {
            return Err(Error::BlockOutOfRange {
                k,
                n: self.n_vertices,
            });
        }
        let k = k as u32;
        Ok(self
            .edges
            .iter()
            .filter(|&&(i, j)| (i < k) != (j < k))
            .count())
    }

    /// Block connectivity `g_k`: boundary edge count divided by the average
    /// degree.
    pub fn block_connectivity(&self, k: usize) -> Result<f64> {
        Ok(self.boundary_edge_count(k)? as f64 / self.average_degree())
    }

    /// `g_k` for every `k = 1..=N`, plus the average degree.
    pub fn connectivity_profile(&self) -> ConnectivityProfile {
        let d = self.average_degree();
        let n = self.n_vertices;
        // One sweep: an edge (i, j) crosses the block boundary for i < k <= j.
        let mut counts = vec![0isize; n + 1];
        for &(i, j) in &self.edges {
            counts[i as usize + 1] += 1;
            counts[j as usize + 1] -= 1;
        }
        let mut boundary_counts = Vec::with_capacity(n);
        let mut running = 0isize;
        for k in 1..=n {
            running += counts[k];
            boundary_counts.push(running as usize);
        }
        let g = boundary_counts.iter().map(|&c| c as f64 / d).collect();
        ConnectivityProfile {
            d,
            boundary_counts,
            g,
        }
    }

    pub fn is_connected(&self) -> bool {
        let set: BTreeSet<(u32, u32)> = self.edges.iter().copied().collect();
        is_connected(self.n_vertices, &set)
    }

    /// Edge-list text format: header `N n_E`, then one `i j` pair per line.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {}", self.n_vertices, self.edges.len());
        for &(i, j) in &self.edges {
            let _ = writeln!(s, "{} {}", i, j);
        }
        s
    }

    /// Parse the edge-list text format produced by [`MajoranaGraph::to_edge_list`].
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::GraphParse("empty file".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::GraphParse("bad header".into()))?;
        let n_e: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::GraphParse("bad header".into()))?;
        check_even_n(n)?;
        let mut seen = BTreeSet::new();
        for line in lines {
            let mut it = line.split_whitespace();
            let i: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::GraphParse(format!("bad edge line: {line:?}")))?;
            let j: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::GraphParse(format!("bad edge line: {line:?}")))?;
            if i == j {
                return Err(Error::GraphParse(format!("self-loop at vertex {i}")));
            }
            if i >= n || j >= n {
                return Err(Error::GraphParse(format!("vertex out of range: {i} {j}")));
            }
            if !seen.insert((i.min(j) as u32, i.max(j) as u32)) {
                return Err(Error::GraphParse(format!("duplicate edge {i} {j}")));
            }
        }
        if seen.len() != n_e {
            return Err(Error::GraphParse(format!(
                "header says {n_e} edges, found {}",
                seen.len()
            )));
        }
        Ok(Self::from_parts(
            n,
            seen.into_iter().collect(),
            Construction::External,
            None,
        ))
    }
}

fn is_connected(n: usize, edges: &BTreeSet<(u32, u32)>) -> bool {
    if n == 0 {
        return true;
    }
    let mut adj = vec![Vec::new(); n];
    for &(i, j) in edges {
        adj[i as usize].push(j as usize);
        adj[j as usize].push(i as usize);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

/// Generator specification, usable as a pure function of `(params, seed)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GraphSpec {
    Complete { n: usize },
    Ring { n: usize, kappa: usize },
    WattsStrogatz { n: usize, kappa: usize, p: f64 },
    Star { n: usize },
}

impl GraphSpec {
    pub fn n(&self) -> usize {
        match *self {
            GraphSpec::Complete { n }
            | GraphSpec::Ring { n, .. }
            | GraphSpec::WattsStrogatz { n, .. }
            | GraphSpec::Star { n } => n,
        }
    }

    /// Whether repeated draws differ (only the rewired construction does).
    pub fn is_random(&self) -> bool {
        matches!(self, GraphSpec::WattsStrogatz { .. })
    }

    pub fn generate(&self, seed: u64) -> Result<MajoranaGraph> {
        match *self {
            GraphSpec::Complete { n } => MajoranaGraph::complete(n),
            GraphSpec::Ring { n, kappa } => MajoranaGraph::ring(n, kappa),
            GraphSpec::WattsStrogatz { n, kappa, p } => {
                MajoranaGraph::watts_strogatz(n, kappa, p, seed)
            }
            GraphSpec::Star { n } => MajoranaGraph::star(n),
        }
    }

    /// Resize the spec to a different vertex count (used by scaling probes).
    pub fn with_n(&self, n: usize) -> GraphSpec {
        match *self {
            GraphSpec::Complete { .. } => GraphSpec::Complete { n },
            GraphSpec::Ring { kappa, .. } => GraphSpec::Ring { n, kappa },
            GraphSpec::WattsStrogatz { kappa, p, .. } => GraphSpec::WattsStrogatz { n, kappa, p },
            GraphSpec::Star { .. } => GraphSpec::Star { n },
        }
    }
}

/// Sample mean and standard error of `g_k` over independent graph draws.
///
/// Draw `r` uses [`crate::split_seed`]`(seed, r)`, so the estimate is a
/// deterministic function of the arguments.
pub fn ensemble_connectivity(
    spec: GraphSpec,
    k: usize,
    n_samples: usize,
    seed: u64,
) -> Result<(f64, f64)> {
    if n_samples < 1 {
        return Err(Error::TooFewSamples {
            min: 1,
            got: n_samples,
        });
    }
    let samples = crate::util::map_indexed(n_samples, |r| {
        let g = spec.generate(crate::split_seed(seed, r as u64))?;
        g.block_connectivity(k)
    })
    .into_iter()
    .collect::<Result<Vec<f64>>>()?;
    Ok(crate::util::mean_stderr(&samples))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force boundary count through the dense adjacency matrix:
    /// `sum_{m <= k} sum_{l > k} A_{lm}` with 1-based block `{1..k}`.
    fn boundary_oracle(g: &MajoranaGraph, k: usize) -> usize {
        let n = g.n_vertices();
        let mut a = vec![vec![0usize; n]; n];
        for &(i, j) in g.edges() {
            a[i as usize][j as usize] = 1;
            a[j as usize][i as usize] = 1;
        }
        let mut count = 0;
        for m in 0..k {
            for l in k..n {
                count += a[l][m];
            }
        }
        count
    }

    #[test]
    fn complete_graph_edge_counts() {
        assert_eq!(MajoranaGraph::complete(4).unwrap().n_edges(), 6);
        let g = MajoranaGraph::complete(10).unwrap();
        assert_eq!(g.n_edges(), 45);
        assert_eq!(g.average_degree(), 9.0);
        let g2 = MajoranaGraph::complete(2).unwrap();
        assert_eq!(g2.edges(), &[(0, 1)]);
    }

    #[test]
    fn complete_graph_rejects_bad_n() {
        assert!(MajoranaGraph::complete(5).is_err());
        assert!(MajoranaGraph::complete(0).is_err());
        assert!(MajoranaGraph::complete(1).is_err());
    }

    #[test]
    fn ring_graph_structure() {
        let g = MajoranaGraph::ring(12, 4).unwrap();
        assert_eq!(g.n_edges(), 24);
        assert!((0..12).all(|v| g.degree(v) == 4));

        let c8 = MajoranaGraph::ring(8, 2).unwrap();
        assert_eq!(c8.n_edges(), 8);
        assert!((0..8).all(|v| c8.degree(v) == 2));
        assert!(c8.edges().contains(&(0, 7)));
    }

    #[test]
    fn ring_graph_rejects_bad_params() {
        assert!(MajoranaGraph::ring(11, 4).is_err()); // odd n
        assert!(MajoranaGraph::ring(12, 3).is_err()); // odd kappa
        assert!(MajoranaGraph::ring(12, 12).is_err()); // kappa >= n
        assert!(MajoranaGraph::ring(12, 0).is_err());
    }

    #[test]
    fn star_graph_structure() {
        let g = MajoranaGraph::star(4).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (0, 3)]);
        let g10 = MajoranaGraph::star(10).unwrap();
        assert_eq!(g10.degree(0), 9);
        assert!((1..10).all(|v| g10.degree(v) == 1));
        assert_eq!(g10.average_degree(), 2.0 * 9.0 / 10.0);
        assert!(MajoranaGraph::star(1).is_err());
    }

    #[test]
    fn watts_strogatz_p0_equals_ring() {
        let ws = MajoranaGraph::watts_strogatz(12, 4, 0.0, 99).unwrap();
        let ring = MajoranaGraph::ring(12, 4).unwrap();
        assert_eq!(ws.edges(), ring.edges());
    }

    #[test]
    fn watts_strogatz_p1_preserves_edges_and_connectivity() {
        let g = MajoranaGraph::watts_strogatz(30, 4, 1.0, 5).unwrap();
        assert_eq!(g.n_edges(), 60);
        assert!(g.is_connected());
    }

    #[test]
    fn watts_strogatz_deterministic() {
        let a = MajoranaGraph::watts_strogatz(12, 4, 0.5, 1234).unwrap();
        let b = MajoranaGraph::watts_strogatz(12, 4, 0.5, 1234).unwrap();
        assert_eq!(a.edges(), b.edges());
        let c = MajoranaGraph::watts_strogatz(12, 4, 0.5, 1235).unwrap();
        assert_ne!(a.edges(), c.edges());
    }

    #[test]
    fn watts_strogatz_rejects_bad_p() {
        assert!(MajoranaGraph::watts_strogatz(12, 4, -0.1, 0).is_err());
        assert!(MajoranaGraph::watts_strogatz(12, 4, 1.5, 0).is_err());
        assert!(MajoranaGraph::watts_strogatz(11, 4, 0.5, 0).is_err());
    }

    /// Rewiring preserves the edge count and connectivity over many random
    /// parameter draws.
    #[test]
    fn watts_strogatz_invariants_random_draws() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
        for _ in 0..10_000 {
            let n = 2 * rng.random_range(3..16usize);
            let max_half = (n - 1) / 2;
            let kappa = 2 * rng.random_range(1..=max_half.max(1));
            let p: f64 = rng.random_range(0.0..=1.0);
            let seed: u64 = rng.random();
            let g = MajoranaGraph::watts_strogatz(n, kappa, p, seed).unwrap();
            assert_eq!(g.n_edges(), n * kappa / 2, "n={n} kappa={kappa} p={p}");
            assert!(g.is_connected(), "n={n} kappa={kappa} p={p} seed={seed}");
        }
    }

    #[test]
    fn block_connectivity_complete() {
        let g = MajoranaGraph::complete(10).unwrap();
        // crossing edges k(N-k) = 21, d = 9
        assert_eq!(g.boundary_edge_count(3).unwrap(), boundary_oracle(&g, 3));
        assert_eq!(g.boundary_edge_count(3).unwrap(), 21);
        assert!((g.block_connectivity(3).unwrap() - 7.0 / 3.0).abs() < 1e-14);
        assert_eq!(g.block_connectivity(10).unwrap(), 0.0);
        assert!(g.block_connectivity(0).is_err());
        assert!(g.block_connectivity(11).is_err());
    }

    #[test]
    fn block_connectivity_ring() {
        let g = MajoranaGraph::ring(12, 4).unwrap();
        assert_eq!(g.boundary_edge_count(6).unwrap(), boundary_oracle(&g, 6));
        assert!((g.block_connectivity(6).unwrap() - 1.5).abs() < 1e-14);
    }

    #[test]
    fn profile_matches_per_k_and_oracle() {
        for g in [
            MajoranaGraph::complete(8).unwrap(),
            MajoranaGraph::ring(12, 4).unwrap(),
            MajoranaGraph::star(10).unwrap(),
            MajoranaGraph::watts_strogatz(14, 4, 0.7, 3).unwrap(),
        ] {
            let prof = g.connectivity_profile();
            for k in 1..=g.n_vertices() {
                assert_eq!(prof.boundary_counts[k - 1], boundary_oracle(&g, k));
                assert_eq!(prof.boundary_counts[k - 1], g.boundary_edge_count(k).unwrap());
                assert_eq!(prof.g_k(k).unwrap(), g.block_connectivity(k).unwrap());
            }
            assert_eq!(prof.g_k(g.n_vertices()).unwrap(), 0.0);
            // d * g_k must be integral
            for k in 1..=g.n_vertices() {
                let x = prof.g_k(k).unwrap() * prof.d;
                assert!((x - x.round()).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn complete_profile_closed_form_up_to_64() {
        for n in (2..=64usize).step_by(2) {
            let prof = MajoranaGraph::complete(n).unwrap().connectivity_profile();
            for k in 1..=n {
                let expect = (k * (n - k)) as f64 / (n - 1) as f64;
                assert!(
                    (prof.g_k(k).unwrap() - expect).abs() < 1e-12,
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn ring_profile_flat_in_bulk() {
        for n in [16usize, 32, 64] {
            let prof = MajoranaGraph::ring(n, 4).unwrap().connectivity_profile();
            for k in 4..=(n - 4) {
                assert!((prof.g_k(k).unwrap() - 1.5).abs() < 1e-14, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn star_profile_hub_first() {
        let g = MajoranaGraph::star(10).unwrap();
        let prof = g.connectivity_profile();
        // all 9 edges cross the {0} boundary
        assert_eq!(prof.boundary_counts[0], 9);
        assert!((prof.g_k(1).unwrap() - 9.0 / g.average_degree()).abs() < 1e-14);
    }

    #[test]
    fn handshake_lemma() {
        for g in [
            MajoranaGraph::complete(10).unwrap(),
            MajoranaGraph::ring(12, 6).unwrap(),
            MajoranaGraph::star(8).unwrap(),
            MajoranaGraph::watts_strogatz(20, 4, 0.9, 11).unwrap(),
        ] {
            let total: usize = (0..g.n_vertices()).map(|v| g.degree(v)).sum();
            assert_eq!(total, 2 * g.n_edges());
        }
    }

    #[test]
    fn ensemble_connectivity_deterministic_generator() {
        let (mean, stderr) =
            ensemble_connectivity(GraphSpec::Complete { n: 10 }, 3, 8, 42).unwrap();
        assert!((mean - 7.0 / 3.0).abs() < 1e-14);
        assert_eq!(stderr, 0.0);
    }

    #[test]
    fn ensemble_connectivity_ws_scales_with_n() {
        let spec30 = GraphSpec::WattsStrogatz {
            n: 30,
            kappa: 4,
            p: 1.0,
        };
        let (m30, _) = ensemble_connectivity(spec30, 15, 64, 7).unwrap();
        let (m60, _) = ensemble_connectivity(spec30.with_n(60), 30, 64, 7).unwrap();
        assert!(m60 > 1.5 * m30, "m30={m30} m60={m60}");
    }

    #[test]
    fn ensemble_connectivity_p0_flat() {
        let spec = GraphSpec::WattsStrogatz {
            n: 24,
            kappa: 4,
            p: 0.0,
        };
        let (mean, stderr) = ensemble_connectivity(spec, 12, 16, 3).unwrap();
        assert!((mean - 1.5).abs() < 1e-14);
        assert_eq!(stderr, 0.0);
        assert!(ensemble_connectivity(spec, 12, 0, 3).is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = MajoranaGraph::watts_strogatz(16, 4, 0.6, 8).unwrap();
        let text = g.to_edge_list();
        let back = MajoranaGraph::from_edge_list(&text).unwrap();
        assert_eq!(back.n_vertices(), g.n_vertices());
        assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn edge_list_rejects_malformed() {
        assert!(MajoranaGraph::from_edge_list("").is_err());
        assert!(MajoranaGraph::from_edge_list("4 1\n0 0\n").is_err()); // self-loop
        assert!(MajoranaGraph::from_edge_list("4 2\n0 1\n0 1\n").is_err()); // dup
        assert!(MajoranaGraph::from_edge_list("4 1\n0 9\n").is_err()); // range
        assert!(MajoranaGraph::from_edge_list("4 3\n0 1\n").is_err()); // count
        assert!(MajoranaGraph::from_edge_list("5 1\n0 1\n").is_err()); // odd n
    }
}
