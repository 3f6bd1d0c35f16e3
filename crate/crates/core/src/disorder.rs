//! Gaussian coupling disorder with reproducible seeding.
//!
//! All randomness flows through `ChaCha8` streams seeded with 64-bit values;
//! normals come from `rand_distr::StandardNormal`. Realization `r` of any
//! ensemble uses [`split_seed`]`(root_seed, r)`, so runs are reproducible
//! bit-for-bit and realizations can be sampled concurrently without stream
//! overlap. The generator choice is part of the output contract: changing it
//! changes every CSV this crate writes.

use crate::graph::MajoranaGraph;
use crate::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use std::fmt::Write as _;

/// Derive the seed for realization `index` from a root seed.
///
/// SplitMix64 finalizer applied to `root + (index + 1) * golden_gamma`. For a
/// fixed root this is injective in `index`, so distinct realizations get
/// distinct streams.
pub fn split_seed(root: u64, index: u64) -> u64 {
    let mut z = root.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// One Gaussian coupling per graph edge, variance `N / (2 n_E)`.
///
/// Only the ordered pair `(i, j)` with `i < j` is stored; the antisymmetric
/// partner `J_ji = -J_ij` is implied. The Hamiltonian term built from an edge
/// is `i J_ij gamma_i gamma_j` with `i < j` (unordered edge sum, one Gaussian
/// per edge).
#[derive(Debug, Clone)]
pub struct EdgeCouplings {
    graph: MajoranaGraph,
    values: Vec<f64>,
    seed: u64,
}

impl EdgeCouplings {
    /// Coupling variance for a graph with `n` vertices and `n_edges` edges.
    pub fn variance(n: usize, n_edges: usize) -> f64 {
        n as f64 / (2.0 * n_edges as f64)
    }

    /// Sample one disorder realization. Values follow the sorted edge order
    /// of the graph.
    pub fn sample(graph: &MajoranaGraph, seed: u64) -> Result<Self> {
        if graph.n_edges() == 0 {
            return Err(Error::EmptyEdgeSet);
        }
        let sigma = Self::variance(graph.n_vertices(), graph.n_edges()).sqrt();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let values = (0..graph.n_edges())
            .map(|_| sigma * rng.sample::<f64, _>(StandardNormal))
            .collect();
        Ok(Self {
            graph: graph.clone(),
            values,
            seed,
        })
    }

    pub fn graph(&self) -> &MajoranaGraph {
        &self.graph
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// `(edge, J_edge)` pairs in sorted edge order.
    pub fn iter(&self) -> impl Iterator<Item = ((u32, u32), f64)> + '_ {
        self.graph.edges().iter().copied().zip(self.values.iter().copied())
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Text dump: one `i j value` line per edge, 17 significant digits.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for ((i, j), v) in self.iter() {
            let _ = writeln!(s, "{} {} {:.16e}", i, j, v);
        }
        s
    }
}

/// Dense rank-`q` couplings: one Gaussian of variance `(q-1)!/N^(q-1)` per
/// strictly increasing index tuple (energy constant `J = 1`).
///
/// Tuples use 1-based Majorana indices `1..=n` and are stored in
/// lexicographic order; the fully antisymmetric tensor follows by permutation
/// sign and is never materialized.
#[derive(Debug, Clone)]
pub struct DenseCouplingTensor {
    n: usize,
    q: usize,
    values: Vec<f64>,
    seed: u64,
}

/// Strictly increasing `q`-tuples over `1..=n`, lexicographic order.
pub fn increasing_tuples(n: usize, q: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(q);
    fn rec(start: usize, n: usize, q: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == q {
            out.push(current.clone());
            return;
        }
        let remaining = q - current.len();
        for i in start..=(n + 1 - remaining) {
            current.push(i);
            rec(i + 1, n, q, current, out);
            current.pop();
        }
    }
    rec(1, n, q, &mut current, &mut out);
    out
}

impl DenseCouplingTensor {
    /// Coupling variance `(q-1)!/n^(q-1)` with `J = 1`.
    pub fn variance(n: usize, q: usize) -> f64 {
        let fact: f64 = (1..q).map(|x| x as f64).product();
        fact / (n as f64).powi(q as i32 - 1)
    }

    pub fn sample(n: usize, q: usize, seed: u64) -> Result<Self> {
        if n < 2 || n % 2 != 0 {
            return Err(Error::OddMajoranaCount(n));
        }
        if q < 2 || q > n || q % 2 != 0 {
            return Err(Error::InvalidInteractionOrder { n, q });
        }
        let sigma = Self::variance(n, q).sqrt();
        let count = binomial(n, q);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let values = (0..count)
            .map(|_| sigma * rng.sample::<f64, _>(StandardNormal))
            .collect();
        Ok(Self { n, q, values, seed })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// `(tuple, J_tuple)` pairs in lexicographic tuple order.
    pub fn iter(&self) -> impl Iterator<Item = (Vec<usize>, f64)> + '_ {
        increasing_tuples(self.n, self.q)
            .into_iter()
            .zip(self.values.iter().copied())
    }

    /// Text dump: one `i1 .. iq value` line per tuple, 17 significant digits.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (tuple, v) in self.iter() {
            for i in &tuple {
                let _ = write!(s, "{} ", i);
            }
            let _ = writeln!(s, "{:.16e}", v);
        }
        s
    }
}

fn binomial(n: usize, k: usize) -> usize {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}
