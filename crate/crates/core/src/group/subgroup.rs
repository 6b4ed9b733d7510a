use std::hash::{Hash, Hasher};

use super::PermGroup;

/// A subgroup of a [`PermGroup`], canonically stored as its sorted member indices.
#[derive(Clone, Debug)]
pub struct Subgroup {
    group_id: u64,
    members: Vec<u32>,
    generators: Vec<u32>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.group_id == other.group_id && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.group_id.hash(state);
        self.members.hash(state);
    }
}

impl Subgroup {
    pub(crate) fn from_sorted(group: &PermGroup, members: Vec<u32>, generators: Vec<u32>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Subgroup {
            group_id: group.id(),
            members,
            generators,
        }
    }

    pub(crate) fn from_unsorted(
        group: &PermGroup,
        mut members: Vec<u32>,
        generators: Vec<u32>,
    ) -> Self {
        members.sort_unstable();
        Subgroup {
            group_id: group.id(),
            members,
            generators,
        }
    }

    pub fn group_id(&self) -> u64 {
        self.group_id
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn contains(&self, e: u32) -> bool {
        self.members.binary_search(&e).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.group_id == other.group_id
            && self.order() <= other.order()
            && other.order().is_multiple_of(self.order())
            && self.generators.iter().all(|&g| other.contains(g))
    }

    /// Non-identity members.
    pub fn nontrivial_members(&self) -> impl Iterator<Item = u32> + '_ {
        self.members.iter().copied().filter(|&x| x != 0)
    }
}
