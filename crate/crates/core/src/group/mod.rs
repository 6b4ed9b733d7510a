//! Finite permutation groups with a fully enumerated element table.

mod action;
mod components;
mod elementary;
mod normal;
mod spec;
mod subgroup;
mod sylow;

pub use action::ConjugationAction;
pub use components::{component_orbits, detect_components, validate_components};
pub use elementary::{elementary_abelian_subgroups, hyperelementary_check, p_rank};
pub use normal::{conjugacy_classes, normal_subgroups};
pub use spec::{BuiltGroup, Construction, GroupSpec};
pub use subgroup::Subgroup;

use std::sync::atomic::{AtomicU64, Ordering};

use rustc_hash::FxHashMap;
use thiserror::Error;

use crate::perm::{Perm, Point};

/// Default ceiling on the number of enumerated elements.
pub const DEFAULT_ORDER_CAP: usize = 500_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("generator is not a permutation: {0}")]
    NonPermutationGenerator(String),
    #[error("group order exceeds cap {cap} ({partial} elements enumerated)")]
    OrderCapExceeded { cap: usize, partial: usize },
    #[error("malformed group spec: {0}")]
    MalformedSpec(String),
    #[error("element or subgroup is not contained in the parent group")]
    SubgroupNotContained,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("acting subgroup does not normalize the target")]
    ActorDoesNotNormalize,
    #[error("components cannot be detected; declare them in the spec")]
    ComponentsUndetectable,
    #[error("enumeration exceeds cap {cap}")]
    EnumerationCapExceeded { cap: usize },
    #[error("subgroups belong to different parent groups")]
    ParentMismatch,
}

static NEXT_GROUP_ID: AtomicU64 = AtomicU64::new(1);

enum ElementIndex {
    Packed(FxHashMap<u128, u32>),
    Wide(FxHashMap<Box<[Point]>, u32>),
}

const PACK_BITS: usize = 5;
const PACK_LIMIT: usize = 25;

fn pack(images: impl Iterator<Item = Point>) -> u128 {
    let mut key = 0u128;
    for (x, y) in images.enumerate() {
        key |= (y as u128) << (PACK_BITS * x);
    }
    key
}

/// A permutation group with every element listed. Element 0 is the identity.
pub struct PermGroup {
    id: u64,
    name: String,
    degree: usize,
    generators: Vec<Perm>,
    generator_indices: Vec<u32>,
    points: Vec<Point>,
    index: ElementIndex,
    inverse: Vec<u32>,
    element_order: Vec<u32>,
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermGroup")
            .field("name", &self.name)
            .field("degree", &self.degree)
            .field("order", &self.order())
            .finish()
    }
}

impl PermGroup {
    /// Enumerates the group generated by `generators` on `degree` points.
    pub fn new(
        name: impl Into<String>,
        degree: usize,
        generators: Vec<Perm>,
        cap: usize,
    ) -> Result<Self, GroupError> {
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::NonPermutationGenerator(format!(
                    "{g} has degree {} but the group has degree {degree}",
                    g.degree()
                )));
            }
        }
        let index = if degree <= PACK_LIMIT {
            ElementIndex::Packed(FxHashMap::default())
        } else {
            ElementIndex::Wide(FxHashMap::default())
        };
        let mut group = PermGroup {
            id: NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed),
            name: name.into(),
            degree,
            generators,
            generator_indices: Vec::new(),
            points: Vec::new(),
            index,
            inverse: Vec::new(),
            element_order: Vec::new(),
        };
        group.push(Perm::identity(degree).images());
        let mut buf = vec![0 as Point; degree];
        let mut i = 0;
        while i < group.len() {
            for g in 0..group.generators.len() {
                {
                    let src = group.element_points(i as u32);
                    let gen = group.generators[g].images();
                    for x in 0..degree {
                        buf[x] = gen[src[x] as usize];
                    }
                }
                if group.lookup(&buf).is_none() {
                    if group.len() >= cap {
                        return Err(GroupError::OrderCapExceeded {
                            cap,
                            partial: group.len(),
                        });
                    }
                    group.push(&buf);
                }
            }
            i += 1;
        }
        group.generator_indices = group
            .generators
            .iter()
            .map(|g| group.lookup(g.images()).expect("generator enumerated"))
            .collect();
        let n = group.len();
        let mut inverse = vec![0u32; n];
        let mut orders = vec![0u32; n];
        for e in 0..n as u32 {
            let p = group.perm(e);
            inverse[e as usize] = group
                .lookup(p.inverse().images())
                .expect("closed under inverse");
            orders[e as usize] = p.order() as u32;
        }
        group.inverse = inverse;
        group.element_order = orders;
        Ok(group)
    }

    fn push(&mut self, images: &[Point]) {
        let idx = if self.degree == 0 {
            0
        } else {
            (self.points.len() / self.degree) as u32
        };
        self.points.extend_from_slice(images);
        match &mut self.index {
            ElementIndex::Packed(m) => {
                m.insert(pack(images.iter().copied()), idx);
            }
            ElementIndex::Wide(m) => {
                m.insert(images.to_vec().into_boxed_slice(), idx);
            }
        }
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.len()
    }

    fn len(&self) -> usize {
        if self.degree == 0 {
            1
        } else {
            self.points.len() / self.degree
        }
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// Element indices of the defining generators.
    pub fn generator_indices(&self) -> &[u32] {
        &self.generator_indices
    }

    pub fn element_points(&self, e: u32) -> &[Point] {
        let s = e as usize * self.degree;
        &self.points[s..s + self.degree]
    }

    pub fn perm(&self, e: u32) -> Perm {
        Perm::from_images_unchecked(self.element_points(e).to_vec())
    }

    /// Index of a permutation given by its images, if it lies in the group.
    pub fn lookup(&self, images: &[Point]) -> Option<u32> {
        if images.len() != self.degree {
            return None;
        }
        match &self.index {
            ElementIndex::Packed(m) => m.get(&pack(images.iter().copied())).copied(),
            ElementIndex::Wide(m) => m.get(images).copied(),
        }
    }

    pub fn index_of(&self, p: &Perm) -> Result<u32, GroupError> {
        self.lookup(p.images())
            .ok_or(GroupError::SubgroupNotContained)
    }

    /// Product `a` then `b`.
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let pa = self.element_points(a);
        let pb = self.element_points(b);
        match &self.index {
            ElementIndex::Packed(m) => {
                let key = pack(pa.iter().map(|&x| pb[x as usize]));
                m[&key]
            }
            ElementIndex::Wide(m) => {
                let img: Vec<Point> = pa.iter().map(|&x| pb[x as usize]).collect();
                m[img.as_slice()]
            }
        }
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.inverse[a as usize]
    }

    /// `g^-1 x g`.
    pub fn conj(&self, x: u32, g: u32) -> u32 {
        let px = self.element_points(x);
        let pg = self.element_points(g);
        // x^g sends pg[i] to pg[px[i]]
        let mut img = vec![0 as Point; self.degree];
        for i in 0..self.degree {
            img[pg[i] as usize] = pg[px[i] as usize];
        }
        self.lookup(&img).expect("group closed under conjugation")
    }

    pub fn commute(&self, a: u32, b: u32) -> bool {
        let pa = self.element_points(a);
        let pb = self.element_points(b);
        (0..self.degree).all(|x| pb[pa[x] as usize] == pa[pb[x] as usize])
    }

    pub fn element_order(&self, e: u32) -> u32 {
        self.element_order[e as usize]
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_sorted(
            self,
            (0..self.len() as u32).collect(),
            self.generator_indices.clone(),
        )
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup::from_sorted(self, vec![0], Vec::new())
    }

    /// The subgroup generated by the given elements.
    pub fn generate(&self, gens: &[u32]) -> Subgroup {
        let mut gens: Vec<u32> = gens.iter().copied().filter(|&g| g != 0).collect();
        gens.dedup();
        let members = self.closure(&[0], &gens);
        Subgroup::from_unsorted(self, members, gens)
    }

    pub fn generate_perms(&self, perms: &[Perm]) -> Result<Subgroup, GroupError> {
        let idx = perms
            .iter()
            .map(|p| self.index_of(p))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.generate(&idx))
    }

    /// Closure of `start` (which must contain the identity) under right multiplication.
    fn closure(&self, start: &[u32], gens: &[u32]) -> Vec<u32> {
        let mut seen = rustc_hash::FxHashSet::default();
        let mut out: Vec<u32> = Vec::with_capacity(start.len());
        for &s in start {
            if seen.insert(s) {
                out.push(s);
            }
        }
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            for &g in gens {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    out.push(y);
                }
            }
            i += 1;
        }
        out
    }

    fn check_parent(&self, s: &Subgroup) -> Result<(), GroupError> {
        if s.group_id() == self.id {
            Ok(())
        } else {
            Err(GroupError::ParentMismatch)
        }
    }

    /// `<a, b>`.
    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Result<Subgroup, GroupError> {
        self.check_parent(a)?;
        self.check_parent(b)?;
        if b.is_subset_of(a) {
            return Ok(a.clone());
        }
        if a.is_subset_of(b) {
            return Ok(b.clone());
        }
        let mut gens = a.generators().to_vec();
        let mut members = a.members().to_vec();
        for &g in b.generators() {
            if a.contains(g) {
                continue;
            }
            gens.push(g);
        }
        members = self.closure(&members, &gens);
        Ok(Subgroup::from_unsorted(self, members, gens))
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Result<Subgroup, GroupError> {
        self.check_parent(a)?;
        self.check_parent(b)?;
        let members: Vec<u32> = if a.order() <= b.order() {
            a.members()
                .iter()
                .copied()
                .filter(|&x| b.contains(x))
                .collect()
        } else {
            b.members()
                .iter()
                .copied()
                .filter(|&x| a.contains(x))
                .collect()
        };
        Ok(self.subgroup_from_members(members))
    }

    /// Wraps a sorted member list that is already known to be a subgroup.
    pub fn subgroup_from_members(&self, members: Vec<u32>) -> Subgroup {
        let gens = self.greedy_generators(&members);
        Subgroup::from_sorted(self, members, gens)
    }

    fn greedy_generators(&self, members: &[u32]) -> Vec<u32> {
        let mut gens = Vec::new();
        let mut span: rustc_hash::FxHashSet<u32> = std::iter::once(0).collect();
        let mut span_list = vec![0u32];
        for &m in members {
            if span.contains(&m) {
                continue;
            }
            gens.push(m);
            span_list = self.closure(&span_list, &gens);
            span = span_list.iter().copied().collect();
            if span_list.len() == members.len() {
                break;
            }
        }
        gens
    }

    /// `S^g`.
    pub fn conjugate(&self, s: &Subgroup, g: u32) -> Subgroup {
        let mut members: Vec<u32> = s.members().iter().map(|&x| self.conj(x, g)).collect();
        members.sort_unstable();
        let gens = s.generators().iter().map(|&x| self.conj(x, g)).collect();
        Subgroup::from_sorted(self, members, gens)
    }

    /// Elements of `ambient` commuting with every element of `elements`.
    pub fn centralizer_of_elements(&self, ambient: &Subgroup, elements: &[u32]) -> Subgroup {
        use rayon::prelude::*;
        let members: Vec<u32> = ambient
            .members()
            .par_iter()
            .copied()
            .filter(|&g| elements.iter().all(|&x| self.commute(g, x)))
            .collect();
        self.subgroup_from_members(members)
    }

    /// `C_ambient(s)`.
    pub fn centralizer(&self, ambient: &Subgroup, s: &Subgroup) -> Result<Subgroup, GroupError> {
        self.check_parent(ambient)?;
        self.check_parent(s)?;
        Ok(self.centralizer_of_elements(ambient, s.generators()))
    }

    /// `N_ambient(s)`.
    pub fn normalizer(&self, ambient: &Subgroup, s: &Subgroup) -> Result<Subgroup, GroupError> {
        use rayon::prelude::*;
        self.check_parent(ambient)?;
        self.check_parent(s)?;
        let members: Vec<u32> = ambient
            .members()
            .par_iter()
            .copied()
            .filter(|&g| s.generators().iter().all(|&x| s.contains(self.conj(x, g))))
            .collect();
        Ok(self.subgroup_from_members(members))
    }

    /// Whether `s` is normalized by every element of `by`.
    pub fn normalizes(&self, by: &Subgroup, s: &Subgroup) -> bool {
        by.generators()
            .iter()
            .all(|&g| s.generators().iter().all(|&x| s.contains(self.conj(x, g))))
    }

    pub fn is_abelian(&self, s: &Subgroup) -> bool {
        let g = s.generators();
        g.iter()
            .enumerate()
            .all(|(i, &a)| g[i + 1..].iter().all(|&b| self.commute(a, b)))
    }

    /// Whether the subgroup is cyclic.
    pub fn is_cyclic(&self, s: &Subgroup) -> bool {
        let n = s.order() as u32;
        s.members().iter().any(|&x| self.element_order(x) == n)
    }

    /// Centre of a subgroup.
    pub fn center(&self, s: &Subgroup) -> Subgroup {
        self.centralizer_of_elements(s, s.generators())
    }

    /// Derived subgroup `[s, s]`.
    pub fn derived_subgroup(&self, s: &Subgroup) -> Subgroup {
        let g = s.generators();
        let mut comms = Vec::new();
        for (i, &a) in g.iter().enumerate() {
            for &b in &g[i + 1..] {
                let c = self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b));
                if c != 0 {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(s, &comms)
    }

    pub fn is_solvable(&self, s: &Subgroup) -> bool {
        let mut cur = s.clone();
        loop {
            if cur.order() == 1 {
                return true;
            }
            let next = self.derived_subgroup(&cur);
            if next.order() == cur.order() {
                return false;
            }
            cur = next;
        }
    }

    pub fn is_perfect(&self, s: &Subgroup) -> bool {
        self.derived_subgroup(s).order() == s.order()
    }

    /// The smallest subgroup of `ambient` containing `elements` and normalized by `ambient`.
    pub fn normal_closure(&self, ambient: &Subgroup, elements: &[u32]) -> Subgroup {
        let mut gens: Vec<u32> = elements.iter().copied().filter(|&x| x != 0).collect();
        gens.sort_unstable();
        gens.dedup();
        let mut members = self.closure(&[0], &gens);
        let mut set: rustc_hash::FxHashSet<u32> = members.iter().copied().collect();
        loop {
            let mut added = false;
            let current = gens.clone();
            for &x in &current {
                for &g in ambient.generators() {
                    let y = self.conj(x, g);
                    if !set.contains(&y) {
                        gens.push(y);
                        members = self.closure(&members, &gens);
                        set = members.iter().copied().collect();
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
        Subgroup::from_unsorted(self, members, gens)
    }

    /// Product `a b` of two subgroups with `a` normalizing `b` or vice versa.
    pub fn product(&self, a: &Subgroup, b: &Subgroup) -> Result<Subgroup, GroupError> {
        self.join(a, b)
    }
}

/// Whether `n` is prime.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn require_prime(p: u64) -> Result<(), GroupError> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(GroupError::NotPrime(p))
    }
}

/// Whether `n` is a power of `p` (including `p^0 = 1`).
pub fn is_power_of(mut n: u64, p: u64) -> bool {
    if n == 0 {
        return false;
    }
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// Constructors for the standard families.
impl PermGroup {
    pub fn symmetric(n: usize) -> Result<Self, GroupError> {
        spec::build_construction(&Construction::Sym { n }, DEFAULT_ORDER_CAP).map(|(g, _)| g)
    }

    pub fn alternating(n: usize) -> Result<Self, GroupError> {
        spec::build_construction(&Construction::Alt { n }, DEFAULT_ORDER_CAP).map(|(g, _)| g)
    }

    pub fn from_cycles(name: &str, degree: usize, gens: &[&str]) -> Result<Self, GroupError> {
        let perms = gens
            .iter()
            .map(|s| Perm::parse_cycles(s, degree))
            .collect::<Result<Vec<_>, _>>()?;
        PermGroup::new(name, degree, perms, DEFAULT_ORDER_CAP)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a5() -> PermGroup {
        PermGroup::alternating(5).unwrap()
    }

    #[test]
    fn enumerates_orders() {
        assert_eq!(PermGroup::symmetric(4).unwrap().order(), 24);
        assert_eq!(a5().order(), 60);
        assert_eq!(PermGroup::symmetric(1).unwrap().order(), 1);
    }

    #[test]
    fn identity_is_element_zero() {
        let g = a5();
        assert!(g.perm(0).is_identity());
        for e in 0..60 {
            assert_eq!(g.mul(e, g.inv(e)), 0);
            assert_eq!(g.mul(0, e), e);
        }
    }

    #[test]
    fn order_cap_reports_partial_count() {
        let err = PermGroup::new(
            "s6",
            6,
            vec![
                Perm::parse_cycles("(1 2)", 6).unwrap(),
                Perm::parse_cycles("(1 2 3 4 5 6)", 6).unwrap(),
            ],
            100,
        )
        .unwrap_err();
        assert!(
            matches!(err, GroupError::OrderCapExceeded { cap: 100, partial } if partial >= 100)
        );
    }

    #[test]
    fn centralizer_of_double_transposition_in_a5() {
        let g = a5();
        let x = g
            .index_of(&Perm::parse_cycles("(1 2)(3 4)", 5).unwrap())
            .unwrap();
        let s = g.generate(&[x]);
        let c = g.centralizer(&g.whole(), &s).unwrap();
        assert_eq!(c.order(), 4);
        // brute force
        let brute = (0..60u32).filter(|&y| g.mul(x, y) == g.mul(y, x)).count();
        assert_eq!(brute, 4);
    }

    #[test]
    fn normalizers() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let c3 = s4
            .generate_perms(&[Perm::parse_cycles("(1 2 3)", 4).unwrap()])
            .unwrap();
        assert_eq!(s4.normalizer(&s4.whole(), &c3).unwrap().order(), 6);
        let g = a5();
        let v4 = g
            .generate_perms(&[
                Perm::parse_cycles("(1 2)(3 4)", 5).unwrap(),
                Perm::parse_cycles("(1 3)(2 4)", 5).unwrap(),
            ])
            .unwrap();
        assert_eq!(v4.order(), 4);
        let n = g.normalizer(&g.whole(), &v4).unwrap();
        assert_eq!(n.order(), 12);
        let brute = (0..60u32)
            .filter(|&h| v4.members().iter().all(|&x| v4.contains(g.conj(x, h))))
            .count();
        assert_eq!(brute, 12);
    }

    #[test]
    fn parent_mismatch_is_reported() {
        let g = a5();
        let h = a5();
        assert_eq!(
            g.centralizer(&g.whole(), &h.whole()).unwrap_err(),
            GroupError::ParentMismatch
        );
    }

    #[test]
    fn join_intersection_and_derived() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let a = s4
            .generate_perms(&[Perm::parse_cycles("(1 2)", 4).unwrap()])
            .unwrap();
        let b = s4
            .generate_perms(&[Perm::parse_cycles("(3 4)", 4).unwrap()])
            .unwrap();
        let j = s4.join(&a, &b).unwrap();
        assert_eq!(j.order(), 4);
        assert_eq!(s4.intersection(&a, &b).unwrap().order(), 1);
        assert_eq!(s4.derived_subgroup(&s4.whole()).order(), 12);
        assert!(s4.is_solvable(&s4.whole()));
        assert!(!a5().is_solvable(&a5().whole()));
        assert!(a5().is_perfect(&a5().whole()));
    }

    #[test]
    fn primes() {
        assert!(is_prime(2) && is_prime(5) && !is_prime(1) && !is_prime(9));
        assert!(is_power_of(8, 2) && is_power_of(1, 3) && !is_power_of(12, 2));
    }
}
