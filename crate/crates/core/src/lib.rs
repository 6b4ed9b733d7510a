//! Exact computations with posets of p-subgroups of finite permutation groups.

pub mod group;
pub mod perm;

pub use group::{PermGroup, Subgroup};
pub use perm::Perm;
pub mod checkers;
pub mod homology;
pub mod poset;
pub mod quillen;
pub mod reproduce;
