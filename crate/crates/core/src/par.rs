//! Sequential/parallel execution of embarrassingly parallel sample loops.
//!
//! With the `parallel` feature (default) the work runs on rayon; without it
//! only the sequential mode exists. Both modes are bit-identical: samples are
//! independent, and reductions are order-insensitive (`f64::max`; failures
//! reduced to the lowest sample index).

/// How to run a sample loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel,
}

impl Default for ExecMode {
    #[cfg(feature = "parallel")]
    fn default() -> Self {
        ExecMode::Parallel
    }

    #[cfg(not(feature = "parallel"))]
    fn default() -> Self {
        ExecMode::Sequential
    }
}

/// Lowest-index failure of `f` over `0..n`, or `None` if every sample passes.
pub fn first_failure<F>(mode: ExecMode, n: usize, f: F) -> Option<(usize, String)>
where
    F: Fn(usize) -> Result<(), String> + Sync + Send,
{
    match mode {
        ExecMode::Sequential => (0..n).find_map(|i| f(i).err().map(|e| (i, e))),
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => {
            use rayon::prelude::*;
            (0..n)
                .into_par_iter()
                .filter_map(|i| f(i).err().map(|e| (i, e)))
                .min_by_key(|(i, _)| *i)
        }
    }
}

/// Maximum of `f` over `0..n` (0.0 for an empty range).
pub fn max_residual<F>(mode: ExecMode, n: usize, f: F) -> f64
where
    F: Fn(usize) -> f64 + Sync + Send,
{
    match mode {
        ExecMode::Sequential => (0..n).map(f).fold(0.0, f64::max),
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => {
            use rayon::prelude::*;
            (0..n).into_par_iter().map(f).reduce(|| 0.0, f64::max)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequential_finds_lowest_index() {
        let res = first_failure(ExecMode::Sequential, 10, |i| {
            if i % 3 == 2 {
                Err(format!("sample {i}"))
            } else {
                Ok(())
            }
        });
        assert_eq!(res, Some((2, "sample 2".to_string())));
        assert_eq!(first_failure(ExecMode::Sequential, 10, |_| Ok(())), None);
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn modes_agree() {
        let f = |i: usize| {
            if i >= 37 {
                Err(format!("bad {i}"))
            } else {
                Ok(())
            }
        };
        assert_eq!(
            first_failure(ExecMode::Sequential, 100, f),
            first_failure(ExecMode::Parallel, 100, f)
        );
        let g = |i: usize| ((i * 7919) % 1000) as f64 / 1000.0;
        assert_eq!(
            max_residual(ExecMode::Sequential, 500, g),
            max_residual(ExecMode::Parallel, 500, g)
        );
    }
}
