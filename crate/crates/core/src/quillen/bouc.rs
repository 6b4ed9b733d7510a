//! Radical p-subgroups.

use rustc_hash::FxHashSet;

use super::subposet::SubgroupPoset;
use super::QuillenError;
use crate::group::{GroupError, PermGroup, Subgroup};

/// Whether `r` equals `O_p(N_ambient(r))`.
pub fn is_radical(
    group: &PermGroup,
    ambient: &Subgroup,
    r: &Subgroup,
    p: u64,
) -> Result<bool, QuillenError> {
    let norm = group.normalizer(ambient, r)?;
    let s = group.sylow(&norm, p)?;
    Ok(group.core(&norm, &s).order() == r.order())
}

/// Nontrivial radical p-subgroups of `ambient`.
///
/// Candidates are the intersections of Sylow p-subgroups; radicality is
/// tested once per conjugacy class.
pub fn bouc_poset(
    group: &PermGroup,
    ambient: &Subgroup,
    p: u64,
    cap: usize,
) -> Result<SubgroupPoset, QuillenError> {
    let mut sylows = group.sylow_subgroups(ambient, p)?;
    sylows.retain(|s| !s.is_trivial());
    let mut seen: FxHashSet<Vec<u32>> = sylows.iter().map(|s| s.members().to_vec()).collect();
    let mut family = sylows.clone();
    let mut i = 0;
    while i < family.len() {
        for s in &sylows {
            let meet: Vec<u32> = family[i]
                .members()
                .iter()
                .copied()
                .filter(|&x| s.contains(x))
                .collect();
            if meet.len() > 1 && !seen.contains(&meet) {
                if family.len() >= cap {
                    return Err(GroupError::EnumerationCapExceeded { cap }.into());
                }
                seen.insert(meet.clone());
                family.push(group.subgroup_from_members(meet));
            }
        }
        i += 1;
    }
    family.sort_by(|a, b| a.members().cmp(b.members()));
    let mut decided: FxHashSet<Vec<u32>> = FxHashSet::default();
    let mut radical = Vec::new();
    for r in &family {
        if decided.contains(r.members()) {
            continue;
        }
        let mut class = vec![r.clone()];
        decided.insert(r.members().to_vec());
        let mut k = 0;
        while k < class.len() {
            for &g in ambient.generators() {
                let c = group.conjugate(&class[k], g);
                if decided.insert(c.members().to_vec()) {
                    class.push(c);
                }
            }
            k += 1;
        }
        if is_radical(group, ambient, r, p)? {
            radical.extend(class);
        }
    }
    Ok(SubgroupPoset::from_family(radical))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::elementary_abelian_subgroups;

    /// All p-subgroups, by closing cyclic p-subgroups under joins that stay p-groups.
    fn all_p_subgroups(g: &PermGroup, p: u64) -> Vec<Subgroup> {
        let cyclic: Vec<Subgroup> = g
            .whole()
            .members()
            .iter()
            .filter(|&&x| x != 0 && crate::group::is_power_of(g.element_order(x) as u64, p))
            .map(|&x| g.generate(&[x]))
            .collect();
        let mut seen: FxHashSet<Vec<u32>> = FxHashSet::default();
        let mut out = Vec::new();
        let mut stack = cyclic.clone();
        while let Some(s) = stack.pop() {
            if !seen.insert(s.members().to_vec()) {
                continue;
            }
            for c in &cyclic {
                let j = g.join(&s, c).unwrap();
                if g.is_p_group(&j, p) && !seen.contains(j.members()) {
                    stack.push(j);
                }
            }
            out.push(s);
        }
        out
    }

    #[test]
    fn s4_matches_brute_force() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let b = bouc_poset(&s4, &s4.whole(), 2, 1000).unwrap();
        let mut brute: Vec<Vec<u32>> = all_p_subgroups(&s4, 2)
            .into_iter()
            .filter(|r| {
                let n = s4.normalizer(&s4.whole(), r).unwrap();
                s4.o_p(&n, 2).unwrap().order() == r.order()
            })
            .map(|r| r.members().to_vec())
            .collect();
        brute.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let got: Vec<Vec<u32>> = b.subgroups().iter().map(|s| s.members().to_vec()).collect();
        assert_eq!(got, brute);
        let o2 = s4.o_p(&s4.whole(), 2).unwrap();
        assert!(b.find(&o2).is_some());
        assert_eq!(b.subgroups().iter().filter(|s| s.order() == 8).count(), 3);
    }

    #[test]
    fn p_group_has_only_itself() {
        let d8 = PermGroup::from_cycles("d8", 4, &["(1 2 3 4)", "(1 3)"]).unwrap();
        let b = bouc_poset(&d8, &d8.whole(), 2, 100).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b.subgroup(0).order(), 8);
        assert!(!elementary_abelian_subgroups(&d8, &d8.whole(), 2, 100)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn coprime_prime_gives_empty_poset() {
        let s4 = PermGroup::symmetric(4).unwrap();
        assert!(bouc_poset(&s4, &s4.whole(), 5, 100).unwrap().is_empty());
    }
}
