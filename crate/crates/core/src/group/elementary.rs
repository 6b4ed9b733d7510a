//! Elementary abelian p-subgroups, p-rank and hyperelementary tests.

use rustc_hash::FxHashSet;

use super::{require_prime, GroupError, PermGroup, Subgroup};

/// Adds `x` (of order p, centralizing `e`) to the elementary abelian group `e`.
fn extend(group: &PermGroup, e: &Subgroup, x: u32, p: u32) -> Subgroup {
    let mut members = Vec::with_capacity(e.order() * p as usize);
    let mut power = 0u32;
    for _ in 0..p {
        for &m in e.members() {
            members.push(group.mul(m, power));
        }
        power = group.mul(power, x);
    }
    let mut gens = e.generators().to_vec();
    gens.push(x);
    members.sort_unstable();
    Subgroup::from_sorted(group, members, gens)
}

/// Every nontrivial elementary abelian p-subgroup of `ambient`, sorted by
/// order and then by members. Fails once more than `cap` are found.
pub fn elementary_abelian_subgroups(
    group: &PermGroup,
    ambient: &Subgroup,
    p: u64,
    cap: usize,
) -> Result<Vec<Subgroup>, GroupError> {
    require_prime(p)?;
    if ambient.group_id() != group.id() {
        return Err(GroupError::ParentMismatch);
    }
    let p32 = p as u32;
    let order_p: Vec<u32> = ambient
        .members()
        .iter()
        .copied()
        .filter(|&x| group.element_order(x) == p32)
        .collect();
    let mut all: Vec<Subgroup> = Vec::new();
    let mut seen: FxHashSet<Vec<u32>> = FxHashSet::default();
    let mut level: Vec<Subgroup> = Vec::new();
    for &x in &order_p {
        let e = extend(group, &group.trivial(), x, p32);
        if seen.insert(e.members().to_vec()) {
            level.push(e);
        }
    }
    while !level.is_empty() {
        if all.len() + level.len() > cap {
            return Err(GroupError::EnumerationCapExceeded { cap });
        }
        let mut next = Vec::new();
        for e in &level {
            for &x in &order_p {
                if e.contains(x) || !e.generators().iter().all(|&g| group.commute(g, x)) {
                    continue;
                }
                let f = extend(group, e, x, p32);
                if !seen.contains(f.members()) {
                    seen.insert(f.members().to_vec());
                    next.push(f);
                }
            }
        }
        all.append(&mut level);
        level = next;
    }
    all.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.members().cmp(b.members()))
    });
    Ok(all)
}

/// The largest rank of an elementary abelian p-subgroup of `ambient`.
pub fn p_rank(group: &PermGroup, ambient: &Subgroup, p: u64) -> Result<u32, GroupError> {
    let all = elementary_abelian_subgroups(group, ambient, p, usize::MAX)?;
    let mut order = all.last().map_or(1, |e| e.order() as u64);
    let mut rank = 0;
    while order > 1 {
        order /= p;
        rank += 1;
    }
    Ok(rank)
}

/// Whether `s` is q-hyperelementary: the subgroup generated by its
/// q'-elements is cyclic.
pub fn hyperelementary_check(group: &PermGroup, s: &Subgroup, q: u64) -> Result<bool, GroupError> {
    require_prime(q)?;
    let qprime: Vec<u32> = s
        .nontrivial_members()
        .filter(|&x| !(group.element_order(x) as u64).is_multiple_of(q))
        .collect();
    let residual = group.generate(&qprime);
    Ok(group.is_cyclic(&residual))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count_by_order(v: &[Subgroup]) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for s in v {
            match out.last_mut() {
                Some((o, c)) if *o == s.order() => *c += 1,
                _ => out.push((s.order(), 1)),
            }
        }
        out
    }

    /// Brute-force oracle: subgroups generated by subsets of order-p elements.
    fn brute_force(group: &PermGroup, p: u32) -> usize {
        let xs: Vec<u32> = (0..group.order() as u32)
            .filter(|&x| group.element_order(x) == p)
            .collect();
        let mut seen: FxHashSet<Vec<u32>> = FxHashSet::default();
        let mut frontier: Vec<Subgroup> = xs.iter().map(|&x| group.generate(&[x])).collect();
        while let Some(s) = frontier.pop() {
            if !seen.insert(s.members().to_vec()) {
                continue;
            }
            for &x in &xs {
                if !s.contains(x) {
                    let t = group.join(&s, &group.generate(&[x])).unwrap();
                    let elementary = group.is_abelian(&t)
                        && t.nontrivial_members().all(|y| group.element_order(y) == p);
                    if elementary && !seen.contains(t.members()) {
                        frontier.push(t);
                    }
                }
            }
        }
        seen.len()
    }

    #[test]
    fn a5_has_fifteen_lines_and_five_planes() {
        let g = PermGroup::alternating(5).unwrap();
        let e = elementary_abelian_subgroups(&g, &g.whole(), 2, 1000).unwrap();
        assert_eq!(count_by_order(&e), vec![(2, 15), (4, 5)]);
        assert_eq!(e.len(), brute_force(&g, 2));
    }

    #[test]
    fn small_cases() {
        let d10 = PermGroup::from_cycles("d10", 5, &["(1 2 3 4 5)", "(2 5)(3 4)"]).unwrap();
        assert_eq!(d10.order(), 10);
        assert_eq!(
            elementary_abelian_subgroups(&d10, &d10.whole(), 2, 100)
                .unwrap()
                .len(),
            5
        );
        let c3 = PermGroup::from_cycles("c3", 3, &["(1 2 3)"]).unwrap();
        assert!(elementary_abelian_subgroups(&c3, &c3.whole(), 2, 100)
            .unwrap()
            .is_empty());
        let s4 = PermGroup::symmetric(4).unwrap();
        let e = elementary_abelian_subgroups(&s4, &s4.whole(), 2, 100).unwrap();
        assert_eq!(e.len(), brute_force(&s4, 2));
        assert_eq!(p_rank(&s4, &s4.whole(), 2).unwrap(), 2);
        let s6 = PermGroup::symmetric(6).unwrap();
        assert_eq!(p_rank(&s6, &s6.whole(), 2).unwrap(), 3);
        assert_eq!(p_rank(&s6, &s6.whole(), 3).unwrap(), 2);
        let e = elementary_abelian_subgroups(&s6, &s6.whole(), 3, 1000).unwrap();
        assert_eq!(e.len(), brute_force(&s6, 3));
    }

    #[test]
    fn cap_is_enforced() {
        let s4 = PermGroup::symmetric(4).unwrap();
        assert_eq!(
            elementary_abelian_subgroups(&s4, &s4.whole(), 2, 3).unwrap_err(),
            GroupError::EnumerationCapExceeded { cap: 3 }
        );
    }

    #[test]
    fn hyperelementary() {
        let c5 = PermGroup::from_cycles("c5", 5, &["(1 2 3 4 5)"]).unwrap();
        assert!(hyperelementary_check(&c5, &c5.whole(), 5).unwrap());
        let v4 = PermGroup::from_cycles("v4", 4, &["(1 2)(3 4)", "(1 3)(2 4)"]).unwrap();
        assert!(!hyperelementary_check(&v4, &v4.whole(), 3).unwrap());
        let s3 = PermGroup::symmetric(3).unwrap();
        assert!(hyperelementary_check(&s3, &s3.whole(), 2).unwrap());
    }
}
