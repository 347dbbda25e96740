//! Data-parallel map used by scans. With the `parallel` feature off, or
//! with [`Execution::Sequential`], everything runs on the calling thread.
//! Output order always follows input order.

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// `jobs = None` uses the global rayon pool.
    #[default]
    Parallel,
}

impl Execution {
    pub fn is_parallel_available() -> bool {
        cfg!(feature = "parallel")
    }
}

/// Maps `f` over `items`, keeping input order.
pub fn map_ordered<T, R, F>(exec: Execution, jobs: Option<usize>, items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    match exec {
        Execution::Sequential => items.into_iter().map(f).collect(),
        Execution::Parallel => parallel_map(jobs, items, f),
    }
}

#[cfg(feature = "parallel")]
fn parallel_map<T, R, F>(jobs: Option<usize>, items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    let run = || items.into_par_iter().map(&f).collect();
    match jobs {
        Some(j) if j > 0 => match rayon::ThreadPoolBuilder::new().num_threads(j).build() {
            Ok(pool) => pool.install(run),
            Err(_) => run(),
        },
        _ => run(),
    }
}

#[cfg(not(feature = "parallel"))]
fn parallel_map<T, R, F>(_jobs: Option<usize>, items: Vec<T>, f: F) -> Vec<R>
where
    F: Fn(T) -> R,
{
    items.into_iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let items: Vec<u64> = (0..500).collect();
        let want: Vec<u64> = items.iter().map(|x| x * x).collect();
        for exec in [Execution::Sequential, Execution::Parallel] {
            for jobs in [None, Some(1), Some(3)] {
                assert_eq!(map_ordered(exec, jobs, items.clone(), |x| x * x), want);
            }
        }
    }
}
