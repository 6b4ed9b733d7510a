//! Subgroup posets attached to a group and a prime, and the maps between them.

mod bouc;
mod context;
mod joinx;
mod outer;
mod subposet;

pub use bouc::{bouc_poset, is_radical};
pub use context::{diagonal_ids, ContextReport, DiagonalRule, OrbitContext};
pub use joinx::{Decomposition, DecompositionFlags, JoinSummary, JoinX};
pub use outer::{image_poset, image_union_over_outers, p_outer_poset, ImagePoset, OuterPoset};
pub use subposet::{ap_poset, inflation, Inflation, SubgroupPoset};

use crate::group::GroupError;
use crate::homology::HomologyError;
use crate::poset::PosetError;

/// Default bound on the number of enumerated subgroups.
pub const DEFAULT_SUBGROUP_CAP: usize = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuillenError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Homology(HomologyError),
    #[error("the centre of the component has elements of order p")]
    CenterHasPTorsion,
    #[error("factor {index} of the join is empty")]
    EmptyFactor { index: usize },
    #[error("components do not form a single conjugation orbit")]
    NotSingleOrbit,
    #[error("invalid orbit context: {0}")]
    InvalidContext(String),
    #[error("index out of range")]
    IndexOutOfRange,
    #[error("subgroup family is not closed under taking subgroups")]
    NotDownClosed,
    #[error("elements are missing from the target poset")]
    NotASubposet,
}
