//! Execution-mode selection for the exhaustive scanners.
//!
//! Tuple scans (standard-identity sweeps, Jacobi checks, axiom
//! enumerations) are embarrassingly parallel.  [`Exec::Par`] runs them on a
//! rayon pool when the `parallel` feature is enabled and silently falls
//! back to the sequential path otherwise, so callers never need feature
//! gates.  Both modes return the *first* witness in enumeration order, which
//! keeps reports deterministic.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How to drive an exhaustive scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    /// Single-threaded, in enumeration order.
    Seq,
    /// Data-parallel when the `parallel` feature is on; otherwise `Seq`.
    Par,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Par
        } else {
            Exec::Seq
        }
    }
}

/// Applies `f` to every item and returns the first `Some` in item order,
/// scanning in parallel when requested and available.
pub fn scan_find<T, R, F>(exec: Exec, items: &[T], f: F) -> Option<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync,
{
    match exec {
        Exec::Seq => items.iter().find_map(f),
        Exec::Par => {
            #[cfg(feature = "parallel")]
            {
                items.par_iter().find_map_first(|t| f(t))
            }
            #[cfg(not(feature = "parallel"))]
            {
                items.iter().find_map(f)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_witness_is_deterministic() {
        let items: Vec<u32> = (0..10_000).collect();
        let f = |x: &u32| if *x % 997 == 0 && *x > 0 { Some(*x) } else { None };
        assert_eq!(scan_find(Exec::Seq, &items, f), Some(997));
        assert_eq!(scan_find(Exec::Par, &items, f), Some(997));
        assert_eq!(
            scan_find(Exec::Par, &items, |x: &u32| if *x > 20_000 {
                Some(*x)
            } else {
                None
            }),
            None
        );
    }
}
