//! Engel graphs, commuting graphs and prime graphs of finite permutation
//! groups.
//!
//! The crate enumerates small permutation groups element by element and
//! builds the directed graphs whose arcs record Engel-word identities
//! `[x,_n y] = 1`, together with the structural subgroups (hypercenter,
//! Fitting subgroup, Sylow subgroups, Frobenius kernels) that control
//! connectivity and diameter of those graphs.
//!
//! Everything is organized around three deliberately plain representations:
//!
//! * [`Permutation`]: an image array on the points `0..n`, composed left to
//!   right;
//! * [`Group`]: the full, indexed element table of a finite permutation
//!   group, with id-level multiplication;
//! * [`digraph::Digraph`]: dense bitset adjacency over a list of element
//!   ids, with bit-parallel BFS and iterative SCC on top.
//!
//! Subgroups are sorted id sets ([`SubgroupHandle`]), so every predicate in
//! the structure layer reduces to scans and set operations.

pub mod arith;
pub mod bitset;
pub mod catalog;
pub mod digraph;
pub mod engel;
mod error;
pub mod group;
pub mod perm;
pub mod structure;

pub use error::{Error, Result};
pub use group::{ElementId, Group, SubgroupHandle};
pub use perm::{Permutation, Point};
