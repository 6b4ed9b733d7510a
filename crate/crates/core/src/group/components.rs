//! Components (subnormal quasisimple subgroups).

use rustc_hash::FxHashSet;

use super::normal::class_closures;
use super::{GroupError, PermGroup, Subgroup};

fn minimal_among(subs: Vec<Subgroup>) -> Vec<Subgroup> {
    subs.iter()
        .filter(|s| {
            !subs
                .iter()
                .any(|t| t.order() < s.order() && t.is_subset_of(s))
        })
        .cloned()
        .collect()
}

/// Components of `group`.
///
/// Exact when the group is solvable (no components) or when every minimal
/// normal subgroup is nonabelian, in which case the components are the simple
/// factors of the socle. Anything else is `ComponentsUndetectable`.
pub fn detect_components(group: &PermGroup) -> Result<Vec<Subgroup>, GroupError> {
    let whole = group.whole();
    if group.is_solvable(&whole) {
        return Ok(Vec::new());
    }
    let minimal = minimal_among(class_closures(group, &whole));
    if minimal.iter().any(|n| group.is_abelian(n)) {
        return Err(GroupError::ComponentsUndetectable);
    }
    let mut out = Vec::new();
    for n in minimal {
        let factors = minimal_among(class_closures(group, &n));
        let product: usize = factors.iter().map(|f| f.order()).product();
        debug_assert_eq!(product, n.order());
        out.extend(factors);
    }
    out.sort_by_key(|c| c.members().get(1).copied());
    Ok(out)
}

/// Checks user-declared components: nontrivial, perfect and pairwise commuting.
pub fn validate_components(group: &PermGroup, comps: &[Subgroup]) -> Result<(), GroupError> {
    for (i, c) in comps.iter().enumerate() {
        if c.group_id() != group.id() {
            return Err(GroupError::ParentMismatch);
        }
        if c.is_trivial() || !group.is_perfect(c) {
            return Err(GroupError::MalformedSpec(format!(
                "declared component {i} is not perfect"
            )));
        }
        for d in &comps[i + 1..] {
            let commute = c
                .generators()
                .iter()
                .all(|&x| d.generators().iter().all(|&y| group.commute(x, y)));
            if !commute {
                return Err(GroupError::MalformedSpec(
                    "declared components do not commute".into(),
                ));
            }
        }
    }
    Ok(())
}

/// Groups components into orbits under conjugation by `ambient`.
pub fn component_orbits(
    group: &PermGroup,
    ambient: &Subgroup,
    comps: &[Subgroup],
) -> Vec<Vec<usize>> {
    let mut assigned: FxHashSet<usize> = FxHashSet::default();
    let mut orbits = Vec::new();
    for start in 0..comps.len() {
        if assigned.contains(&start) {
            continue;
        }
        assigned.insert(start);
        let mut orbit = vec![start];
        let mut i = 0;
        while i < orbit.len() {
            for &g in ambient.generators() {
                let c = group.conjugate(&comps[orbit[i]], g);
                if let Some(j) = comps.iter().position(|d| d.members() == c.members()) {
                    if assigned.insert(j) {
                        orbit.push(j);
                    }
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_components_in_a5_squared() {
        let g = PermGroup::from_cycles(
            "a5xa5",
            10,
            &["(1 2 3 4 5)", "(1 2 3)", "(6 7 8 9 10)", "(6 7 8)"],
        )
        .unwrap();
        let c = detect_components(&g).unwrap();
        assert_eq!(c.len(), 2);
        assert!(c.iter().all(|l| l.order() == 60));
        assert_eq!(component_orbits(&g, &g.whole(), &c), vec![vec![0], vec![1]]);
        validate_components(&g, &c).unwrap();
    }

    #[test]
    fn wreath_swaps_components() {
        let g = PermGroup::from_cycles(
            "a5wr2",
            10,
            &[
                "(1 2 3 4 5)",
                "(1 2 3)",
                "(6 7 8 9 10)",
                "(6 7 8)",
                "(1 6)(2 7)(3 8)(4 9)(5 10)",
            ],
        )
        .unwrap();
        let c = detect_components(&g).unwrap();
        assert_eq!(component_orbits(&g, &g.whole(), &c), vec![vec![0, 1]]);
    }

    #[test]
    fn s4_has_none_and_s5_has_a5() {
        let s4 = PermGroup::symmetric(4).unwrap();
        assert!(detect_components(&s4).unwrap().is_empty());
        let s5 = PermGroup::symmetric(5).unwrap();
        let c = detect_components(&s5).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].order(), 60);
    }

    #[test]
    fn nonsolvable_with_abelian_socle_is_undetectable() {
        // A5 x C2
        let g = PermGroup::from_cycles("a5xc2", 7, &["(1 2 3 4 5)", "(1 2 3)", "(6 7)"]).unwrap();
        assert_eq!(
            detect_components(&g).unwrap_err(),
            GroupError::ComponentsUndetectable
        );
    }
}
