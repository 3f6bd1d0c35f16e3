//! Execution plumbing shared across modules.
//!
//! All parallel entry points here produce results whose floating-point
//! summation order is independent of thread count: maps collect in index
//! order and reductions combine fixed-size chunk partials sequentially.
//! The sequential build (`--no-default-features`) runs the same chunking.

/// Chunk size for data-parallel sweeps over state vectors.
pub(crate) const PAR_CHUNK: usize = 1 << 12;

/// Map `f` over `0..n`, collecting results in index order.
#[cfg(feature = "parallel")]
pub(crate) fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).map(f).collect()
}

/// Run `f(base_index, chunk)` over fixed-size chunks of `data`.
#[cfg(feature = "parallel")]
pub(crate) fn for_each_chunk_mut<T, F>(data: &mut [T], f: F)
where
    T: Send,
    F: Fn(usize, &mut [T]) + Sync,
{
    use rayon::prelude::*;
    data.par_chunks_mut(PAR_CHUNK)
        .enumerate()
        .for_each(|(c, chunk)| f(c * PAR_CHUNK, chunk));
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn for_each_chunk_mut<T, F>(data: &mut [T], f: F)
where
    T: Send,
    F: Fn(usize, &mut [T]) + Sync,
{
    for (c, chunk) in data.chunks_mut(PAR_CHUNK).enumerate() {
        f(c * PAR_CHUNK, chunk);
    }
}

/// Chunked reduction over `0..n`: `partial(lo, hi)` computes one chunk's
/// contribution, partials are summed in chunk order.
pub(crate) fn sum_chunked<A, F>(n: usize, partial: F) -> A
where
    A: Send + std::iter::Sum<A>,
    F: Fn(usize, usize) -> A + Sync + Send,
{
    let chunks = n.div_ceil(PAR_CHUNK);
    map_indexed(chunks, |c| {
        let lo = c * PAR_CHUNK;
        partial(lo, (lo + PAR_CHUNK).min(n))
    })
    .into_iter()
    .sum()
}

/// FNV-1a over bytes; used to fingerprint configs in output files.
pub(crate) fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Sample mean and standard error of the mean (0 for fewer than two samples).
pub(crate) fn mean_stderr(samples: &[f64]) -> (f64, f64) {
    let n = samples.len();
    if n == 0 {
        return (0.0, 0.0);
    }
    let mean = samples.iter().sum::<f64>() / n as f64;
    if n < 2 {
        return (mean, 0.0);
    }
    let var = samples.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1) as f64;
    (mean, (var / n as f64).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_indexed_preserves_order() {
        let v = map_indexed(1000, |i| i * i);
        assert!(v.iter().enumerate().all(|(i, &x)| x == i * i));
    }

    #[test]
    fn sum_chunked_matches_sequential() {
        let n = 3 * PAR_CHUNK + 17;
        let s: f64 = sum_chunked(n, |lo, hi| (lo..hi).map(|i| i as f64).sum::<f64>());
        assert_eq!(s, (0..n).map(|i| i as f64).sum::<f64>());
    }

    #[test]
    fn mean_stderr_basics() {
        let (m, e) = mean_stderr(&[2.0]);
        assert_eq!((m, e), (2.0, 0.0));
        let (m, e) = mean_stderr(&[1.0, 3.0]);
        assert_eq!(m, 2.0);
        assert!((e - 1.0).abs() < 1e-15);
    }
}
