//! Data-parallel helpers. With the `parallel` feature these run on the rayon
//! pool; without it, or with [`Execution::Sequential`], they run in order on
//! the calling thread.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How a sweep or exhaustive check is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Falls back to sequential when built without the `parallel` feature.
    #[default]
    Parallel,
}

impl Execution {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// `true` iff `pred(i)` holds for every `i` in `0..n`.
pub fn all_indices<P>(exec: Execution, n: usize, pred: P) -> bool
where
    P: Fn(usize) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (0..n).into_par_iter().all(pred);
    }
    let _ = exec;
    (0..n).all(pred)
}

/// First index (lowest) whose predicate fails, if any.
pub fn find_failure<P>(exec: Execution, n: usize, pred: P) -> Option<usize>
where
    P: Fn(usize) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (0..n).into_par_iter().find_first(|&i| !pred(i));
    }
    let _ = exec;
    (0..n).find(|&i| !pred(i))
}

/// Maps `f` over `items`, preserving order.
pub fn map<T, R, F>(exec: Execution, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_agree() {
        let items: Vec<u64> = (0..1000).collect();
        for exec in [Execution::Sequential, Execution::Parallel] {
            assert_eq!(map(exec, &items, |x| x * x)[999], 998_001);
            assert!(all_indices(exec, 100, |i| i < 100));
            assert_eq!(find_failure(exec, 100, |i| i % 37 != 36), Some(36));
            assert_eq!(find_failure(exec, 100, |_| true), None);
        }
    }
}
