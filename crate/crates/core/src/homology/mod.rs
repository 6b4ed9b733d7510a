//! Exact rational homology of order complexes and induced maps.

mod basis;
mod chain;
mod checks;
mod maps;
mod sparse;

use serde::Serialize;

pub use basis::{homology_basis, induced_matrix, HomologyBasis};
pub use chain::{induced_ranks, mapping_cone, ChainComplex, ChainMap};
pub use checks::{kunneth_check, mv_rank_audit, KunnethReport, MvReport};
pub use maps::{
    induced_map, induced_map_simplicial, poset_betti, HomologyMapReport, MapOptions, MapSummary,
    DEFAULT_BASIS_CAP,
};
pub use sparse::{reduce, Reduction, SparseMatrix};

use crate::poset::PosetError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HomologyError {
    #[error("matrix cap exceeded: {cells} cells over cap {cap}")]
    MatrixCapExceeded { cells: usize, cap: usize },
    #[error("vertex map does not send simplices to simplices")]
    NotSimplicial,
    #[error("union is not covered by the two parts")]
    NotACover,
    #[error(transparent)]
    Poset(#[from] PosetError),
}

/// Reduced Betti numbers `b_{-1}, b_0, b_1, ...` with trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BettiVector {
    minus_one: u64,
    values: Vec<u64>,
}

impl BettiVector {
    /// From values indexed by `degree + 1`.
    pub fn from_degrees(mut all: Vec<u64>) -> Self {
        while all.len() > 1 && *all.last().unwrap() == 0 {
            all.pop();
        }
        let minus_one = all.first().copied().unwrap_or(0);
        let values = if all.len() > 1 {
            all[1..].to_vec()
        } else {
            Vec::new()
        };
        BettiVector { minus_one, values }
    }

    pub fn minus_one(&self) -> u64 {
        self.minus_one
    }

    /// Betti numbers from degree 0 on.
    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn get(&self, d: isize) -> u64 {
        match d {
            -1 => self.minus_one,
            d if d >= 0 => self.values.get(d as usize).copied().unwrap_or(0),
            _ => 0,
        }
    }

    /// Largest degree with a nonzero entry, or `-2` when acyclic.
    pub fn top(&self) -> isize {
        if !self.values.is_empty() {
            self.values.len() as isize - 1
        } else if self.minus_one > 0 {
            -1
        } else {
            -2
        }
    }

    pub fn is_acyclic(&self) -> bool {
        self.top() == -2
    }

    pub fn euler(&self) -> i64 {
        let mut chi = -(self.minus_one as i64);
        for (d, &b) in self.values.iter().enumerate() {
            if d % 2 == 0 {
                chi += b as i64;
            } else {
                chi -= b as i64;
            }
        }
        chi
    }
}

impl std::fmt::Display for BettiVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.values.is_empty() && self.minus_one > 0 {
            return write!(f, "b-1={}", self.minus_one);
        }
        let parts: Vec<String> = self.values.iter().map(|b| b.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn betti_vector_trims_and_sums() {
        let b = BettiVector::from_degrees(vec![0, 0, 16, 0, 0]);
        assert_eq!(b.values(), &[0, 16]);
        assert_eq!(b.euler(), -16);
        assert_eq!(b.top(), 1);
        assert_eq!(b.to_string(), "(0, 16)");
        let e = BettiVector::from_degrees(vec![1]);
        assert_eq!(e.euler(), -1);
        assert_eq!(e.top(), -1);
        assert!(BettiVector::from_degrees(vec![0, 0]).is_acyclic());
    }
}
