//! Exact combinatorics of the priority lattice: priority-first search on
//! ordered forests, partial parking functions, the lattice of priority
//! forests, and its enumerative invariants.

pub mod bijections;
pub mod enumeration;
pub mod error;
pub mod forest;
pub mod lattice;
pub mod parking;
pub mod perm;
pub mod poset;

pub mod verify;

pub use error::{Error, Result};

/// Number of ordered forests with `n + 1` nodes and `m` labeled non-roots:
/// `(n - m + 1)(n + 1)^{m - 1}`, with the empty case counting one forest.
pub fn cayley_forest_count(m: usize, n: usize) -> usize {
    assert!(m <= n);
    if m == 0 {
        1
    } else {
        (n - m + 1) * (n + 1).pow((m - 1) as u32)
    }
}
