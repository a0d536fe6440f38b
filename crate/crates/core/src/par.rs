//! Map helpers that fan out over rayon or stay on the current thread.

use crate::config::Execution;

/// Applies `f` to every item, keeping input order in the output.
pub fn map_vec<T, R, F>(execution: Execution, items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if execution.is_parallel() {
        use rayon::prelude::*;
        return items.into_par_iter().map(f).collect();
    }
    let _ = execution;
    items.into_iter().map(f).collect()
}

/// Maps over `0..n` in order.
pub fn map_range<R, F>(execution: Execution, n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if execution.is_parallel() {
        use rayon::prelude::*;
        return (0..n).into_par_iter().map(f).collect();
    }
    let _ = execution;
    (0..n).map(f).collect()
}
