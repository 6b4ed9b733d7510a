//! Conjugation action of a subgroup on a normalized subgroup.

use rustc_hash::{FxHashMap, FxHashSet};

use super::{GroupError, PermGroup, Subgroup, DEFAULT_ORDER_CAP};
use crate::perm::{Perm, Point};

/// The action of `actor` on `target` by conjugation, with its image realised
/// as a permutation group on an actor-invariant generating set of `target`.
pub struct ConjugationAction {
    actor: Subgroup,
    target: Subgroup,
    domain: Vec<u32>,
    position: FxHashMap<u32, Point>,
    image: PermGroup,
    kernel: Subgroup,
}

impl std::fmt::Debug for ConjugationAction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ConjugationAction")
            .field("actor_order", &self.actor.order())
            .field("target_order", &self.target.order())
            .field("domain", &self.domain.len())
            .field("image_order", &self.image.order())
            .finish()
    }
}

impl ConjugationAction {
    pub fn new(group: &PermGroup, actor: &Subgroup, target: &Subgroup) -> Result<Self, GroupError> {
        if actor.group_id() != group.id() || target.group_id() != group.id() {
            return Err(GroupError::ParentMismatch);
        }
        if !group.normalizes(actor, target) {
            return Err(GroupError::ActorDoesNotNormalize);
        }
        let mut assigned: FxHashSet<u32> = FxHashSet::default();
        let mut orbits: Vec<Vec<u32>> = Vec::new();
        for x in target.nontrivial_members() {
            if !assigned.insert(x) {
                continue;
            }
            let mut orbit = vec![x];
            let mut i = 0;
            while i < orbit.len() {
                for &g in actor.generators() {
                    let y = group.conj(orbit[i], g);
                    if assigned.insert(y) {
                        orbit.push(y);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a[0].cmp(&b[0])));
        let mut domain: Vec<u32> = Vec::new();
        let mut span = group.trivial();
        for orbit in orbits {
            if span.order() == target.order() {
                break;
            }
            if orbit.iter().all(|&x| span.contains(x)) {
                continue;
            }
            domain.extend_from_slice(&orbit);
            let mut gens = span.generators().to_vec();
            gens.extend(orbit.iter().copied().filter(|&x| !span.contains(x)));
            span = group.generate(&gens);
        }
        domain.sort_unstable();
        let position: FxHashMap<u32, Point> = domain
            .iter()
            .enumerate()
            .map(|(i, &x)| (x, i as Point))
            .collect();
        let gens: Vec<Perm> = actor
            .generators()
            .iter()
            .map(|&g| Self::domain_perm(group, &domain, &position, g))
            .collect();
        let image = PermGroup::new(
            format!("Aut({})", group.name()),
            domain.len(),
            gens,
            DEFAULT_ORDER_CAP,
        )?;
        let kernel = group.centralizer(actor, target)?;
        Ok(ConjugationAction {
            actor: actor.clone(),
            target: target.clone(),
            domain,
            position,
            image,
            kernel,
        })
    }

    fn domain_perm(
        group: &PermGroup,
        domain: &[u32],
        position: &FxHashMap<u32, Point>,
        g: u32,
    ) -> Perm {
        let images = domain
            .iter()
            .map(|&x| position[&group.conj(x, g)])
            .collect();
        Perm::from_images_unchecked(images)
    }

    pub fn actor(&self) -> &Subgroup {
        &self.actor
    }

    pub fn target(&self) -> &Subgroup {
        &self.target
    }

    /// The automizer `actor / C_actor(target)` as a permutation group.
    pub fn image(&self) -> &PermGroup {
        &self.image
    }

    /// `C_actor(target)`.
    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    /// Size of the set on which the image acts.
    pub fn domain_size(&self) -> usize {
        self.domain.len()
    }

    /// Image of an actor element.
    pub fn project(&self, group: &PermGroup, g: u32) -> Result<u32, GroupError> {
        if !self.actor.contains(g) {
            return Err(GroupError::SubgroupNotContained);
        }
        let p = Self::domain_perm(group, &self.domain, &self.position, g);
        Ok(self
            .image
            .lookup(p.images())
            .expect("projection lands in the image"))
    }

    /// Image of a subgroup of the actor.
    pub fn project_subgroup(
        &self,
        group: &PermGroup,
        s: &Subgroup,
    ) -> Result<Subgroup, GroupError> {
        let gens = s
            .generators()
            .iter()
            .map(|&g| self.project(group, g))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.image.generate(&gens))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s5_on_a5() {
        let s5 = PermGroup::symmetric(5).unwrap();
        let a5 = s5.derived_subgroup(&s5.whole());
        let act = ConjugationAction::new(&s5, &s5.whole(), &a5).unwrap();
        assert_eq!(act.image().order(), 120);
        assert_eq!(act.kernel().order(), 1);
        let inner = act.project_subgroup(&s5, &a5).unwrap();
        assert_eq!(inner.order(), 60);
    }

    #[test]
    fn kernel_is_preimage_of_identity() {
        let g = PermGroup::from_cycles(
            "a5xa5",
            10,
            &["(1 2 3 4 5)", "(1 2 3)", "(6 7 8 9 10)", "(6 7 8)"],
        )
        .unwrap();
        let l1 = g.generate_perms(&[
            Perm::parse_cycles("(1 2 3 4 5)", 10).unwrap(),
            Perm::parse_cycles("(1 2 3)", 10).unwrap(),
        ]);
        let l1 = l1.unwrap();
        let act = ConjugationAction::new(&g, &g.whole(), &l1).unwrap();
        assert_eq!(act.image().order(), 60);
        let brute: Vec<u32> = g
            .whole()
            .members()
            .iter()
            .copied()
            .filter(|&x| act.project(&g, x).unwrap() == 0)
            .collect();
        assert_eq!(brute, act.kernel().members());
        assert_eq!(act.kernel().order(), 60);
    }

    #[test]
    fn rejects_non_normalizing_actor() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let c2 = s4
            .generate_perms(&[Perm::parse_cycles("(1 2)", 4).unwrap()])
            .unwrap();
        assert_eq!(
            ConjugationAction::new(&s4, &s4.whole(), &c2).unwrap_err(),
            GroupError::ActorDoesNotNormalize
        );
    }
}
