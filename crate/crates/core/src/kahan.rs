//! Compensated summation and deterministic parallel reduction.
//!
//! All large sums in this crate accumulate through [`KahanSum`] (Kahan–Babuška
//! compensation) in a fixed term order. Parallel sums partition the index
//! range into chunks of a fixed size, accumulate each chunk independently,
//! and fold the partials in chunk order, so the result is bit-identical
//! regardless of the worker count.

use num_complex::Complex64;
use rayon::prelude::*;

/// Fixed chunk length for parallel reductions. Must not depend on the number
/// of worker threads or results stop being reproducible.
pub const CHUNK: usize = 4096;

/// Compensated scalar accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    comp: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let y = value - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum
    }
}

/// Compensated complex accumulator with a running rounding-error estimate.
///
/// The estimate is `2·eps·Σ|xᵢ|`, the standard a-priori bound for
/// compensated summation; it is exposed as `compensation_residue` on the
/// sum values built from this accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct ComplexKahan {
    re: KahanSum,
    im: KahanSum,
    abs: KahanSum,
    count: usize,
}

impl ComplexKahan {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
        self.abs.add(z.norm());
        self.count += 1;
    }

    #[inline]
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }

    #[inline]
    pub fn count(&self) -> usize {
        self.count
    }

    /// Upper estimate of the accumulated rounding error.
    #[inline]
    pub fn error_estimate(&self) -> f64 {
        2.0 * f64::EPSILON * self.abs.value()
    }

    /// Fold another accumulator into this one, preserving term counts and
    /// the error estimate. Used for ordered chunk reduction.
    pub fn merge(&mut self, other: &ComplexKahan) {
        self.re.add(other.re.value());
        self.im.add(other.im.value());
        self.abs.add(other.abs.value());
        self.count += other.count;
    }
}

/// Sum `term(i)` for `i` in `0..n` with fixed-chunk parallelism.
///
/// Chunks are accumulated independently and merged in index order; the
/// result is bit-identical for any worker count, including 1.
pub fn parallel_sum<F>(n: usize, term: F) -> ComplexKahan
where
    F: Fn(usize) -> Complex64 + Sync,
{
    let n_chunks = n.div_ceil(CHUNK);
    let partials: Vec<ComplexKahan> = (0..n_chunks)
        .into_par_iter()
        .map(|c| {
            let lo = c * CHUNK;
            let hi = (lo + CHUNK).min(n);
            let mut acc = ComplexKahan::new();
            for i in lo..hi {
                acc.add(term(i));
            }
            acc
        })
        .collect();
    let mut total = ComplexKahan::new();
    for p in &partials {
        total.merge(p);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kahan_beats_naive_on_ill_conditioned_sum() {
        // 1 + eps-sized terms that a naive sum loses entirely.
        let mut k = KahanSum::new();
        k.add(1.0);
        for _ in 0..1000 {
            k.add(1e-17);
        }
        assert!((k.value() - (1.0 + 1000.0 * 1e-17)).abs() < 1e-16);
    }

    #[test]
    fn parallel_sum_matches_sequential_bitwise() {
        let term = |i: usize| {
            let x = (i as f64 + 1.0).sqrt();
            Complex64::new((x * 12.9898).sin(), (x * 78.233).cos())
        };
        let seq = {
            let mut acc = ComplexKahan::new();
            for i in 0..100_000 {
                acc.add(term(i));
            }
            // fold through the same chunked merge path
            acc
        };
        let chunked = parallel_sum(100_000, term);
        // chunked merge differs from flat accumulation in general, but must
        // be self-consistent across thread counts
        let pool1 = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let pool8 = rayon::ThreadPoolBuilder::new().num_threads(8).build().unwrap();
        let v1 = pool1.install(|| parallel_sum(100_000, term)).value();
        let v8 = pool8.install(|| parallel_sum(100_000, term)).value();
        assert_eq!(v1.re.to_bits(), v8.re.to_bits());
        assert_eq!(v1.im.to_bits(), v8.im.to_bits());
        assert_eq!(v1.re.to_bits(), chunked.value().re.to_bits());
        // flat vs chunked agree to roundoff
        assert!((seq.value() - chunked.value()).norm() < 1e-9);
        assert_eq!(chunked.count(), 100_000);
    }
}
