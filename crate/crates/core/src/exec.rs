//! Per-`n` fan-out.
//!
//! With the `parallel` feature (on by default) [`Exec::Parallel`] maps over
//! a rayon pool; without it every mode runs sequentially. Results always come
//! back in ascending `n`, so output does not depend on the mode.

use std::ops::RangeInclusive;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// Global rayon pool, one thread per core.
    #[default]
    Parallel,
    /// Dedicated pool with this many threads.
    Threads(usize),
}

impl Exec {
    /// `--jobs` semantics: `None` for all cores, `Some(1)` for sequential.
    pub fn from_jobs(jobs: Option<usize>) -> Self {
        match jobs {
            None => Exec::Parallel,
            Some(0 | 1) => Exec::Sequential,
            Some(k) => Exec::Threads(k),
        }
    }

    pub fn map_range<T, F>(self, range: RangeInclusive<u64>, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(u64) -> T + Send + Sync,
    {
        match self {
            Exec::Sequential => range.map(f).collect(),
            Exec::Parallel | Exec::Threads(_) => par_map(self, range, f),
        }
    }
}

#[cfg(feature = "parallel")]
fn par_map<T, F>(exec: Exec, range: RangeInclusive<u64>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Send + Sync,
{
    use rayon::prelude::*;

    let ns: Vec<u64> = range.collect();
    let run = || ns.par_iter().map(|&n| f(n)).collect();
    match exec {
        Exec::Threads(k) => match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
            Ok(pool) => pool.install(run),
            Err(_) => run(),
        },
        _ => run(),
    }
}

#[cfg(not(feature = "parallel"))]
fn par_map<T, F>(_exec: Exec, range: RangeInclusive<u64>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Send + Sync,
{
    range.map(f).collect()
}
