//! Posets whose elements are subgroups, ordered by inclusion.

use std::sync::Arc;

use fixedbitset::FixedBitSet;
use rustc_hash::FxHashMap;

use super::QuillenError;
use crate::group::{elementary_abelian_subgroups, PermGroup, Subgroup};
use crate::poset::{Poset, PosetMap, Tag};

/// Subgroups of one [`PermGroup`] with the inclusion order. Identifiers are
/// sorted by order, then by member list.
#[derive(Clone, Debug)]
pub struct SubgroupPoset {
    poset: Arc<Poset>,
    subgroups: Vec<Subgroup>,
    index: FxHashMap<Vec<u32>, u32>,
}

/// An independent generating set of an elementary abelian group.
pub(crate) fn basis(group: &PermGroup, e: &Subgroup) -> Vec<u32> {
    let mut basis = Vec::new();
    let mut span = vec![0u32];
    for &m in e.members() {
        if span.contains(&m) {
            continue;
        }
        basis.push(m);
        let mut next = Vec::with_capacity(span.len() * 2);
        let mut power = 0u32;
        loop {
            next.extend(span.iter().map(|&s| group.mul(s, power)));
            power = group.mul(power, m);
            if power == 0 {
                break;
            }
        }
        span = next;
        if span.len() == e.order() {
            break;
        }
    }
    basis
}

/// Member lists of the index-`p` subgroups of the elementary abelian `e`.
fn hyperplanes(group: &PermGroup, e: &Subgroup, p: u32) -> Vec<Vec<u32>> {
    let b = basis(group, e);
    let m = b.len();
    // element with coordinates c sits at sum c_i p^i
    let mut elems = vec![0u32];
    for &g in &b {
        let mut next = Vec::with_capacity(elems.len() * p as usize);
        let mut power = 0u32;
        for _ in 0..p {
            next.extend(elems.iter().map(|&x| group.mul(x, power)));
            power = group.mul(power, g);
        }
        elems = next;
    }
    let coords = |mut idx: usize| -> Vec<u32> {
        (0..m)
            .map(|_| {
                let c = (idx % p as usize) as u32;
                idx /= p as usize;
                c
            })
            .collect()
    };
    let mut out = Vec::new();
    for f in 1..elems.len() {
        let fc = coords(f);
        if fc.iter().find(|&&c| c != 0) != Some(&1) {
            continue;
        }
        let mut members: Vec<u32> = (0..elems.len())
            .filter(|&i| coords(i).iter().zip(&fc).map(|(a, b)| a * b).sum::<u32>() % p == 0)
            .map(|i| elems[i])
            .collect();
        if members.len() > 1 {
            members.sort_unstable();
            out.push(members);
        }
    }
    out
}

fn sort_family(mut subs: Vec<Subgroup>) -> Vec<Subgroup> {
    subs.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.members().cmp(b.members()))
    });
    subs.dedup_by(|a, b| a.members() == b.members());
    subs
}

fn closed_up_sets(n: usize, uppers: &[Vec<u32>]) -> Vec<FixedBitSet> {
    let mut up = vec![FixedBitSet::with_capacity(n); n];
    for x in (0..n).rev() {
        let mut row = FixedBitSet::with_capacity(n);
        for &y in &uppers[x] {
            row.insert(y as usize);
            row.union_with(&up[y as usize]);
        }
        up[x] = row;
    }
    up
}

impl SubgroupPoset {
    fn assemble(subgroups: Vec<Subgroup>, up: Vec<FixedBitSet>) -> Self {
        let tags = (0..subgroups.len() as u32)
            .map(|id| Tag::Subgroup { id })
            .collect();
        let index = subgroups
            .iter()
            .enumerate()
            .map(|(i, s)| (s.members().to_vec(), i as u32))
            .collect();
        SubgroupPoset {
            poset: Arc::new(Poset::from_strict_up(tags, up)),
            subgroups,
            index,
        }
    }

    /// A family of elementary abelian p-subgroups that contains every
    /// nontrivial subgroup of each member.
    pub fn from_down_closed(
        group: &PermGroup,
        subs: Vec<Subgroup>,
        p: u64,
    ) -> Result<Self, QuillenError> {
        let subgroups = sort_family(subs);
        let index: FxHashMap<&[u32], u32> = subgroups
            .iter()
            .enumerate()
            .map(|(i, s)| (s.members(), i as u32))
            .collect();
        let mut uppers = vec![Vec::new(); subgroups.len()];
        for (i, e) in subgroups.iter().enumerate() {
            for h in hyperplanes(group, e, p as u32) {
                let j = *index.get(h.as_slice()).ok_or(QuillenError::NotDownClosed)?;
                uppers[j as usize].push(i as u32);
            }
        }
        let up = closed_up_sets(subgroups.len(), &uppers);
        Ok(Self::assemble(subgroups, up))
    }

    /// Any family of subgroups; inclusion is tested pairwise.
    pub fn from_family(subs: Vec<Subgroup>) -> Self {
        let subgroups = sort_family(subs);
        let n = subgroups.len();
        let up = (0..n)
            .map(|i| {
                let mut row = FixedBitSet::with_capacity(n);
                for j in i + 1..n {
                    if subgroups[j].order() > subgroups[i].order()
                        && subgroups[i].is_subset_of(&subgroups[j])
                    {
                        row.insert(j);
                    }
                }
                row
            })
            .collect();
        Self::assemble(subgroups, up)
    }

    pub fn poset(&self) -> &Arc<Poset> {
        &self.poset
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn subgroup(&self, x: u32) -> &Subgroup {
        &self.subgroups[x as usize]
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    /// Identifier of the element with these sorted members.
    pub fn find_members(&self, members: &[u32]) -> Option<u32> {
        self.index.get(members).copied()
    }

    pub fn find(&self, s: &Subgroup) -> Option<u32> {
        self.find_members(s.members())
    }

    /// The induced subposet on `keep` (sorted identifiers).
    pub fn restrict(&self, keep: &[u32]) -> SubgroupPoset {
        let subgroups: Vec<Subgroup> = keep
            .iter()
            .map(|&x| self.subgroups[x as usize].clone())
            .collect();
        let tags = (0..keep.len() as u32)
            .map(|id| Tag::Subgroup { id })
            .collect();
        let poset = self.poset.induced(keep).with_tags(tags);
        let index = subgroups
            .iter()
            .enumerate()
            .map(|(i, s)| (s.members().to_vec(), i as u32))
            .collect();
        SubgroupPoset {
            poset: Arc::new(poset),
            subgroups,
            index,
        }
    }

    /// Identifiers of the elements satisfying `keep`.
    pub fn select(&self, keep: impl Fn(&Subgroup) -> bool) -> Vec<u32> {
        (0..self.len() as u32)
            .filter(|&x| keep(&self.subgroups[x as usize]))
            .collect()
    }

    /// Elements contained in `h`.
    pub fn below(&self, h: &Subgroup) -> Vec<u32> {
        self.select(|e| e.is_subset_of(h))
    }

    /// Inclusion of the elements of `self` into `other`, as a poset map.
    pub fn inclusion_into(&self, other: &SubgroupPoset) -> Result<PosetMap, QuillenError> {
        let table = self
            .subgroups
            .iter()
            .map(|s| other.find(s).ok_or(QuillenError::NotASubposet))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PosetMap::new(
            self.poset.clone(),
            other.poset.clone(),
            table,
        )?)
    }
}

/// `A_p` of `ambient`: nontrivial elementary abelian p-subgroups.
pub fn ap_poset(
    group: &PermGroup,
    ambient: &Subgroup,
    p: u64,
    cap: usize,
) -> Result<SubgroupPoset, QuillenError> {
    let subs = elementary_abelian_subgroups(group, ambient, p, cap)?;
    SubgroupPoset::from_down_closed(group, subs, p)
}

/// The elements of `b` meeting `h` nontrivially, with the retraction
/// `E -> E ∩ h` onto the elements of `b` inside `h`.
#[derive(Clone, Debug)]
pub struct Inflation {
    pub inflated: SubgroupPoset,
    /// Identifiers in `b` of the inflated elements.
    pub kept: Vec<u32>,
    /// Elements of `b` contained in `h`.
    pub base: SubgroupPoset,
    pub retraction: PosetMap,
}

pub fn inflation(
    group: &PermGroup,
    b: &SubgroupPoset,
    h: &Subgroup,
) -> Result<Inflation, QuillenError> {
    if b.subgroups
        .first()
        .is_some_and(|e| e.group_id() != group.id())
        || h.group_id() != group.id()
    {
        return Err(QuillenError::Group(
            crate::group::GroupError::ParentMismatch,
        ));
    }
    let kept = b.select(|e| e.nontrivial_members().any(|x| h.contains(x)));
    let inflated = b.restrict(&kept);
    let base = b.restrict(&b.below(h));
    let table = inflated
        .subgroups
        .iter()
        .map(|e| {
            let meet: Vec<u32> = e
                .members()
                .iter()
                .copied()
                .filter(|&x| h.contains(x))
                .collect();
            base.find_members(&meet).ok_or(QuillenError::NotDownClosed)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let retraction = PosetMap::new(inflated.poset.clone(), base.poset.clone(), table)?;
    Ok(Inflation {
        inflated,
        kept,
        base,
        retraction,
    })
}
