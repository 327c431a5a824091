//! Execution strategy for the data-parallel loops (group closure, coset
//! filtering, conjugacy orbits, exhaustive checks).
//!
//! With the `parallel` feature (on by default) [`Exec::Parallel`] runs the
//! loops on the rayon pool. Without it only [`Exec::Sequential`] exists.
//! Both strategies return results in index order, so outputs are identical.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Defaults to [`Exec::Parallel`] when it exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Exec {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

impl Exec {
    /// `(0..n).map(f)` collected in order.
    pub fn map<T, F>(self, n: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self {
            Exec::Sequential => (0..n).map(f).collect(),
            #[cfg(feature = "parallel")]
            Exec::Parallel => (0..n).into_par_iter().map(f).collect(),
        }
    }

    pub fn map_slice<I, T, F>(self, items: &[I], f: F) -> Vec<T>
    where
        I: Sync,
        T: Send,
        F: Fn(&I) -> T + Sync + Send,
    {
        match self {
            Exec::Sequential => items.iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.par_iter().map(f).collect(),
        }
    }

    /// Indices in `0..n` satisfying `pred`, ascending.
    pub fn filter<F>(self, n: usize, pred: F) -> Vec<usize>
    where
        F: Fn(usize) -> bool + Sync + Send,
    {
        match self {
            Exec::Sequential => (0..n).filter(|&i| pred(i)).collect(),
            #[cfg(feature = "parallel")]
            Exec::Parallel => (0..n).into_par_iter().filter(|&i| pred(i)).collect(),
        }
    }

    pub fn all<F>(self, n: usize, pred: F) -> bool
    where
        F: Fn(usize) -> bool + Sync + Send,
    {
        match self {
            Exec::Sequential => (0..n).all(pred),
            #[cfg(feature = "parallel")]
            Exec::Parallel => (0..n).into_par_iter().all(pred),
        }
    }

    /// Smallest index satisfying `pred`.
    pub fn find_first<F>(self, n: usize, pred: F) -> Option<usize>
    where
        F: Fn(usize) -> bool + Sync + Send,
    {
        match self {
            Exec::Sequential => (0..n).find(|&i| pred(i)),
            #[cfg(feature = "parallel")]
            Exec::Parallel => (0..n).into_par_iter().find_first(|&i| pred(i)),
        }
    }
}
