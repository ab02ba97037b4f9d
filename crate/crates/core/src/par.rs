//! Chunked execution with a sequential fallback. Results are always merged
//! in chunk order, so both paths produce identical output.

/// How the exhaustive and sampled loops are scheduled.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Execution {
    /// Rayon work-stealing over chunks (sequential when the `parallel`
    /// feature is disabled).
    #[default]
    Parallel,
    Sequential,
}

impl Execution {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// `f(0), f(1), ..., f(count - 1)`, in order.
pub(crate) fn map_chunks<T, F>(count: usize, exec: Execution, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return (0..count).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (0..count).map(f).collect()
}

/// First `Some` in chunk order.
pub(crate) fn find_first_chunk<T, F>(count: usize, exec: Execution, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return (0..count).into_par_iter().find_map_first(f);
    }
    let _ = exec;
    (0..count).find_map(f)
}
