//! Execution strategy for sampling sweeps.
//!
//! Every sweep in the crate is expressed as "evaluate `f(i)` for `i` in
//! `0..n`" followed by an order-independent reduction or an in-order
//! collection, so results are identical whichever strategy runs them.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// Runs on the rayon pool; degrades to [`Exec::Sequential`] when the
    /// `parallel` feature is off.
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// `(0..n).map(f).collect()` with results in index order.
    pub fn map<T, F>(self, n: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            return (0..n).into_par_iter().map(f).collect();
        }
        (0..n).map(f).collect()
    }

    /// Sums integer-valued tallies; exact, so order does not matter.
    pub fn tally<const K: usize, F>(self, n: usize, f: F) -> [u64; K]
    where
        F: Fn(usize) -> [u64; K] + Sync + Send,
    {
        let add = |mut a: [u64; K], b: [u64; K]| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        };
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            return (0..n).into_par_iter().map(f).reduce(|| [0; K], add);
        }
        (0..n).map(f).fold([0; K], add)
    }

    /// First index (smallest) for which `f` returns `Some`, if any.
    pub fn find_first<T, F>(self, n: usize, f: F) -> Option<(usize, T)>
    where
        T: Send,
        F: Fn(usize) -> Option<T> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            return (0..n).into_par_iter().find_map_first(|i| f(i).map(|t| (i, t)));
        }
        (0..n).find_map(|i| f(i).map(|t| (i, t)))
    }
}

/// Independent, reproducible generator for chunk `stream` of a sweep seeded
/// with `seed`.
pub fn sample_rng(seed: u64, stream: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}
