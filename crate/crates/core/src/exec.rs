//! Execution strategy for the data-parallel loops (raster rows, randomized
//! trials). Both strategies produce identical results; without the
//! `parallel` feature, [`Exec::Parallel`] runs sequentially.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// Fills `out` row by row; `f(j, row)` must only depend on `j`.
    pub fn for_each_row<T, F>(self, out: &mut [T], width: usize, f: F)
    where
        T: Send,
        F: Fn(usize, &mut [T]) + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => out
                .par_chunks_mut(width)
                .enumerate()
                .for_each(|(j, row)| f(j, row)),
            _ => out
                .chunks_mut(width)
                .enumerate()
                .for_each(|(j, row)| f(j, row)),
        }
    }

    /// `(0..n).map(f).collect()`, in index order regardless of strategy.
    pub fn map_indices<R, F>(self, n: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => (0..n).into_par_iter().map(f).collect(),
            _ => (0..n).map(f).collect(),
        }
    }
}
