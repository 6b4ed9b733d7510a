//! Conjugacy classes, normal closures and characteristic cores.

use rustc_hash::{FxHashMap, FxHashSet};

use super::{is_power_of, require_prime, GroupError, PermGroup, Subgroup};

/// Conjugacy classes of `ambient`, each sorted, ordered by smallest member.
pub fn conjugacy_classes(group: &PermGroup, ambient: &Subgroup) -> Vec<Vec<u32>> {
    let mut assigned: FxHashSet<u32> = FxHashSet::default();
    let mut classes = Vec::new();
    for &x in ambient.members() {
        if assigned.contains(&x) {
            continue;
        }
        let mut class = vec![x];
        assigned.insert(x);
        let mut i = 0;
        while i < class.len() {
            let y = class[i];
            for &g in ambient.generators() {
                let z = group.conj(y, g);
                if assigned.insert(z) {
                    class.push(z);
                }
            }
            i += 1;
        }
        class.sort_unstable();
        classes.push(class);
    }
    classes
}

/// Normal closures of the nontrivial classes, deduplicated.
pub(crate) fn class_closures(group: &PermGroup, ambient: &Subgroup) -> Vec<Subgroup> {
    let mut seen: FxHashSet<Vec<u32>> = FxHashSet::default();
    let mut out = Vec::new();
    for class in conjugacy_classes(group, ambient) {
        if class == [0] {
            continue;
        }
        let n = group.normal_closure(ambient, &class[..1]);
        if seen.insert(n.members().to_vec()) {
            out.push(n);
        }
    }
    out
}

/// Every normal subgroup of `ambient`, from products of class closures.
///
/// Returns `EnumerationCapExceeded` once more than `cap` are found.
pub fn normal_subgroups(
    group: &PermGroup,
    ambient: &Subgroup,
    cap: usize,
) -> Result<Vec<Subgroup>, GroupError> {
    let closures = class_closures(group, ambient);
    let mut found: FxHashMap<Vec<u32>, Subgroup> = FxHashMap::default();
    let trivial = group.trivial();
    found.insert(trivial.members().to_vec(), trivial.clone());
    let mut frontier = vec![trivial];
    while let Some(n) = frontier.pop() {
        for c in &closures {
            if c.is_subset_of(&n) {
                continue;
            }
            let m = group.join(&n, c)?;
            if !found.contains_key(m.members()) {
                if found.len() >= cap {
                    return Err(GroupError::EnumerationCapExceeded { cap });
                }
                found.insert(m.members().to_vec(), m.clone());
                frontier.push(m);
            }
        }
    }
    let mut all: Vec<Subgroup> = found.into_values().collect();
    all.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.members().cmp(b.members()))
    });
    Ok(all)
}

/// Product of the class closures accepted by `keep`, which must be closed
/// under taking normal subgroups and products.
fn largest_normal_with(
    group: &PermGroup,
    ambient: &Subgroup,
    keep: impl Fn(&Subgroup) -> bool,
) -> Subgroup {
    let mut acc = group.trivial();
    for c in class_closures(group, ambient) {
        if keep(&c) && !c.is_subset_of(&acc) {
            acc = group.join(&acc, &c).expect("same parent");
        }
    }
    acc
}

impl PermGroup {
    /// `O_p(ambient)`, the largest normal p-subgroup.
    pub fn o_p(&self, ambient: &Subgroup, p: u64) -> Result<Subgroup, GroupError> {
        require_prime(p)?;
        Ok(largest_normal_with(self, ambient, |n| {
            is_power_of(n.order() as u64, p)
        }))
    }

    /// `O_{p'}(ambient)`, the largest normal subgroup of order prime to `p`.
    pub fn o_p_prime(&self, ambient: &Subgroup, p: u64) -> Result<Subgroup, GroupError> {
        require_prime(p)?;
        Ok(largest_normal_with(self, ambient, |n| {
            !(n.order() as u64).is_multiple_of(p)
        }))
    }

    /// Largest subgroup of `sub` normalized by `ambient`.
    pub fn core(&self, ambient: &Subgroup, sub: &Subgroup) -> Subgroup {
        let mut cur = sub.clone();
        loop {
            let mut next = cur.clone();
            for &g in ambient.generators() {
                let c = self.conjugate(&cur, g);
                next = self.intersection(&next, &c).expect("same parent");
            }
            if next.order() == cur.order() {
                return cur;
            }
            cur = next;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;

    #[test]
    fn class_counts() {
        let s4 = PermGroup::symmetric(4).unwrap();
        assert_eq!(conjugacy_classes(&s4, &s4.whole()).len(), 5);
        let a5 = PermGroup::alternating(5).unwrap();
        let sizes: Vec<usize> = {
            let mut v: Vec<usize> = conjugacy_classes(&a5, &a5.whole())
                .iter()
                .map(|c| c.len())
                .collect();
            v.sort();
            v
        };
        assert_eq!(sizes, vec![1, 12, 12, 15, 20]);
    }

    #[test]
    fn normal_lattice_of_s4() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let orders: Vec<usize> = normal_subgroups(&s4, &s4.whole(), 100)
            .unwrap()
            .iter()
            .map(|n| n.order())
            .collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
    }

    #[test]
    fn cores_match_lattice_oracle() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let a5 = PermGroup::alternating(5).unwrap();
        assert_eq!(s4.o_p(&s4.whole(), 2).unwrap().order(), 4);
        assert_eq!(a5.o_p(&a5.whole(), 2).unwrap().order(), 1);
        assert_eq!(s4.o_p_prime(&s4.whole(), 2).unwrap().order(), 1);
        for (g, p) in [(&s4, 2u64), (&s4, 3), (&a5, 2), (&a5, 5)] {
            let lattice = normal_subgroups(g, &g.whole(), 100).unwrap();
            let best_p = lattice
                .iter()
                .filter(|n| is_power_of(n.order() as u64, p))
                .map(|n| n.order())
                .max()
                .unwrap();
            let best_pp = lattice
                .iter()
                .filter(|n| !(n.order() as u64).is_multiple_of(p))
                .map(|n| n.order())
                .max()
                .unwrap();
            assert_eq!(g.o_p(&g.whole(), p).unwrap().order(), best_p);
            assert_eq!(g.o_p_prime(&g.whole(), p).unwrap().order(), best_pp);
        }
        assert_eq!(s4.o_p(&s4.whole(), 4).unwrap_err(), GroupError::NotPrime(4));
    }

    #[test]
    fn core_of_point_stabilizer() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let stab = s4
            .generate_perms(&[
                Perm::parse_cycles("(1 2)", 4).unwrap(),
                Perm::parse_cycles("(1 2 3)", 4).unwrap(),
            ])
            .unwrap();
        assert_eq!(s4.core(&s4.whole(), &stab).order(), 1);
        let d8 = s4
            .generate_perms(&[
                Perm::parse_cycles("(1 2 3 4)", 4).unwrap(),
                Perm::parse_cycles("(1 3)", 4).unwrap(),
            ])
            .unwrap();
        assert_eq!(s4.core(&s4.whole(), &d8).order(), 4);
    }
}
