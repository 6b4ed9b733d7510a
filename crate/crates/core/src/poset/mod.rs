//! Finite posets, order complexes, beat-point cores and poset maps.

mod beat;
mod complex;
mod export;
mod fixed;
mod map;

pub use beat::{beat_point_core, BeatCore};
pub use complex::{order_complex, SimplicialComplex, DEFAULT_SIMPLEX_CAP};
pub use export::{complex_json, cover_edge_list, tags_json};
pub use fixed::{fixed_subposet, FixedSubposet, PosetAction};
pub use map::PosetMap;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("relation is not antisymmetric at elements {0} and {1}")]
    NotAntisymmetric(u32, u32),
    #[error("transitive closure of the relation contains a cycle")]
    NotTransitiveAfterClosure,
    #[error("order complex exceeds {cap} simplices")]
    SimplexCapExceeded { cap: usize },
    #[error("action is not by poset automorphisms")]
    NotAnActionByAutomorphisms,
    #[error("map is not order preserving: {0} < {1} but images are incomparable or reversed")]
    NotOrderPreserving(u32, u32),
    #[error("element index out of range")]
    IndexOutOfRange,
}

/// Where a poset element came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Tag {
    Subgroup { id: u32 },
    QuotientImage { id: u32 },
    JoinPart { part: u32, inner: u32 },
    Plain { id: u32 },
}

/// A finite poset whose identifiers form a linear extension: `x < y` implies
/// `x` has the smaller identifier.
#[derive(Clone, Debug)]
pub struct Poset {
    tags: Vec<Tag>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    covers: Vec<Vec<u32>>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.tags == other.tags && self.up == other.up
    }
}

fn linear_extension(n: usize, lt: &[FixedBitSet]) -> Vec<usize> {
    let mut indegree = vec![0usize; n];
    for row in lt {
        for y in row.ones() {
            indegree[y] += 1;
        }
    }
    let mut ready: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&x| indegree[x] == 0)
        .map(std::cmp::Reverse)
        .collect();
    let mut order = Vec::with_capacity(n);
    while let Some(std::cmp::Reverse(x)) = ready.pop() {
        order.push(x);
        for y in lt[x].ones() {
            indegree[y] -= 1;
            if indegree[y] == 0 {
                ready.push(std::cmp::Reverse(y));
            }
        }
    }
    order
}

impl Poset {
    /// Builds from strict upper sets that are already transitive and compatible
    /// with identifier order.
    pub(crate) fn from_strict_up(tags: Vec<Tag>, up: Vec<FixedBitSet>) -> Self {
        let n = tags.len();
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (x, row) in up.iter().enumerate() {
            debug_assert!(row.ones().all(|y| y > x));
            for y in row.ones() {
                down[y].insert(x);
            }
        }
        let covers = (0..n)
            .map(|x| {
                up[x]
                    .ones()
                    .filter(|&y| up[x].is_disjoint(&down[y]))
                    .map(|y| y as u32)
                    .collect()
            })
            .collect();
        Poset {
            tags,
            up,
            down,
            covers,
        }
    }

    /// Builds a poset from a reflexive-or-not comparison oracle `leq(i, j)`.
    ///
    /// The transitive closure is taken; elements are renumbered into a linear
    /// extension that keeps the input order wherever it is already compatible.
    pub fn build(tags: Vec<Tag>, leq: impl Fn(usize, usize) -> bool) -> Result<Self, PosetError> {
        let n = tags.len();
        let mut lt = vec![FixedBitSet::with_capacity(n); n];
        for i in 0..n {
            for j in 0..n {
                if i != j && leq(i, j) {
                    if j < i && lt[j].contains(i) {
                        return Err(PosetError::NotAntisymmetric(j as u32, i as u32));
                    }
                    lt[i].insert(j);
                }
            }
        }
        Self::from_relation(tags, lt)
    }

    /// Builds from strict relation rows (not necessarily transitive).
    pub fn from_relation(tags: Vec<Tag>, mut lt: Vec<FixedBitSet>) -> Result<Self, PosetError> {
        let n = tags.len();
        for k in 0..n {
            let row_k = lt[k].clone();
            for i in 0..n {
                if lt[i].contains(k) {
                    lt[i].union_with(&row_k);
                }
            }
        }
        if (0..n).any(|i| lt[i].contains(i)) {
            return Err(PosetError::NotTransitiveAfterClosure);
        }
        let order = linear_extension(n, &lt);
        let mut new_id = vec![0usize; n];
        for (new, &old) in order.iter().enumerate() {
            new_id[old] = new;
        }
        let new_tags = order.iter().map(|&old| tags[old]).collect();
        let up = order
            .iter()
            .map(|&old| {
                let mut row = FixedBitSet::with_capacity(n);
                for y in lt[old].ones() {
                    row.insert(new_id[y]);
                }
                row
            })
            .collect();
        Ok(Self::from_strict_up(new_tags, up))
    }

    /// Builds from cover (or any generating) pairs `(lower, upper)`.
    pub fn from_pairs(tags: Vec<Tag>, pairs: &[(u32, u32)]) -> Result<Self, PosetError> {
        let n = tags.len();
        let mut lt = vec![FixedBitSet::with_capacity(n); n];
        for &(a, b) in pairs {
            if a as usize >= n || b as usize >= n {
                return Err(PosetError::IndexOutOfRange);
            }
            if a == b {
                continue;
            }
            lt[a as usize].insert(b as usize);
        }
        Self::from_relation(tags, lt)
    }

    pub fn len(&self) -> usize {
        self.tags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tags.is_empty()
    }

    pub fn tag(&self, x: u32) -> Tag {
        self.tags[x as usize]
    }

    pub fn tags(&self) -> &[Tag] {
        &self.tags
    }

    pub fn lt(&self, x: u32, y: u32) -> bool {
        self.up[x as usize].contains(y as usize)
    }

    pub fn le(&self, x: u32, y: u32) -> bool {
        x == y || self.lt(x, y)
    }

    pub fn comparable(&self, x: u32, y: u32) -> bool {
        self.le(x, y) || self.lt(y, x)
    }

    /// Elements strictly above `x`.
    pub fn up(&self, x: u32) -> &FixedBitSet {
        &self.up[x as usize]
    }

    /// Elements strictly below `x`.
    pub fn down(&self, x: u32) -> &FixedBitSet {
        &self.down[x as usize]
    }

    pub fn upper_covers(&self, x: u32) -> &[u32] {
        &self.covers[x as usize]
    }

    /// Cover pairs `(lower, upper)` in identifier order.
    pub fn cover_edges(&self) -> Vec<(u32, u32)> {
        self.covers
            .iter()
            .enumerate()
            .flat_map(|(x, ys)| ys.iter().map(move |&y| (x as u32, y)))
            .collect()
    }

    pub fn relation_count(&self) -> usize {
        self.up.iter().map(|r| r.count_ones(..)).sum()
    }

    pub fn minimal_elements(&self) -> Vec<u32> {
        (0..self.len() as u32)
            .filter(|&x| self.down(x).is_clear())
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<u32> {
        (0..self.len() as u32)
            .filter(|&x| self.up(x).is_clear())
            .collect()
    }

    /// Whether no two elements are comparable.
    pub fn is_antichain(&self) -> bool {
        self.up.iter().all(|r| r.is_clear())
    }

    /// Length of the longest chain minus one (`-1` for the empty poset).
    pub fn height(&self) -> isize {
        let mut h = vec![0isize; self.len()];
        for x in (0..self.len()).rev() {
            h[x] = self.up[x].ones().map(|y| h[y] + 1).max().unwrap_or(0);
        }
        h.into_iter().max().unwrap_or(-1)
    }

    /// The subposet on `keep` (sorted, distinct), renumbered in the same order.
    pub fn induced(&self, keep: &[u32]) -> Poset {
        let m = keep.len();
        let mut pos = vec![u32::MAX; self.len()];
        for (i, &x) in keep.iter().enumerate() {
            pos[x as usize] = i as u32;
        }
        let tags = keep.iter().map(|&x| self.tags[x as usize]).collect();
        let up = keep
            .iter()
            .map(|&x| {
                let mut row = FixedBitSet::with_capacity(m);
                for y in self.up[x as usize].ones() {
                    let p = pos[y];
                    if p != u32::MAX {
                        row.insert(p as usize);
                    }
                }
                row
            })
            .collect();
        Poset::from_strict_up(tags, up)
    }

    /// Same order with replaced tags.
    pub fn with_tags(mut self, tags: Vec<Tag>) -> Poset {
        assert_eq!(tags.len(), self.len());
        self.tags = tags;
        self
    }

    /// Ordinal sum: every element of an earlier part lies below every element
    /// of a later part. Tags become `JoinPart { part, inner }`.
    pub fn join_many(parts: &[&Poset]) -> Poset {
        let n: usize = parts.iter().map(|p| p.len()).sum();
        let mut tags = Vec::with_capacity(n);
        let mut up = Vec::with_capacity(n);
        let mut offset = 0;
        for (k, part) in parts.iter().enumerate() {
            let end = offset + part.len();
            for x in 0..part.len() {
                tags.push(Tag::JoinPart {
                    part: k as u32,
                    inner: x as u32,
                });
                let mut row = FixedBitSet::with_capacity(n);
                for y in part.up[x].ones() {
                    row.insert(offset + y);
                }
                row.insert_range(end..n);
                up.push(row);
            }
            offset = end;
        }
        Poset::from_strict_up(tags, up)
    }

    pub fn join(p: &Poset, q: &Poset) -> Poset {
        Poset::join_many(&[p, q])
    }

    /// Offsets of the parts inside [`Poset::join_many`].
    pub fn join_offsets(parts: &[&Poset]) -> Vec<u32> {
        let mut out = Vec::with_capacity(parts.len() + 1);
        let mut acc = 0;
        out.push(0);
        for p in parts {
            acc += p.len() as u32;
            out.push(acc);
        }
        out
    }

    /// A poset with plain tags from cover pairs; used by tests and importers.
    pub fn from_plain_pairs(n: usize, pairs: &[(u32, u32)]) -> Result<Self, PosetError> {
        Self::from_pairs((0..n as u32).map(|id| Tag::Plain { id }).collect(), pairs)
    }

    /// An antichain of `n` plain elements.
    pub fn antichain(n: usize) -> Self {
        Self::from_plain_pairs(n, &[]).expect("antichain")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_closes_and_renumbers() {
        // 2 < 0 < 1 given as non-transitive pairs
        let p = Poset::from_plain_pairs(3, &[(2, 0), (0, 1)]).unwrap();
        assert_eq!(p.tags()[0], Tag::Plain { id: 2 });
        assert!(p.lt(0, 2));
        assert_eq!(p.cover_edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(p.height(), 2);
    }

    #[test]
    fn detects_cycles() {
        let tags: Vec<Tag> = (0..2).map(|id| Tag::Plain { id }).collect();
        assert_eq!(
            Poset::build(tags.clone(), |_, _| true).unwrap_err(),
            PosetError::NotAntisymmetric(0, 1)
        );
        let tags3: Vec<Tag> = (0..3).map(|id| Tag::Plain { id }).collect();
        assert_eq!(
            Poset::from_pairs(tags3, &[(0, 1), (1, 2), (2, 0)]).unwrap_err(),
            PosetError::NotTransitiveAfterClosure
        );
    }

    #[test]
    fn join_puts_first_below_second() {
        let p = Poset::from_plain_pairs(2, &[(0, 1)]).unwrap();
        let q = Poset::antichain(2);
        let j = Poset::join(&p, &q);
        assert_eq!(j.len(), 4);
        assert!(j.lt(0, 1) && j.lt(1, 2) && j.lt(0, 3) && !j.comparable(2, 3));
        assert_eq!(j.tag(3), Tag::JoinPart { part: 1, inner: 1 });
        assert_eq!(
            Poset::join(&Poset::antichain(0), &q).cover_edges(),
            q.cover_edges()
        );
    }

    #[test]
    fn induced_subposet() {
        let p = Poset::from_plain_pairs(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let s = p.induced(&[0, 2, 3]);
        assert!(s.lt(0, 1) && s.lt(1, 2));
        assert_eq!(s.cover_edges(), vec![(0, 1), (1, 2)]);
    }
}
