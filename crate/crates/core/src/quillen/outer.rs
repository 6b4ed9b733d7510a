//! p-outer subgroups and image posets.

use rustc_hash::FxHashSet;

use super::subposet::{ap_poset, basis, SubgroupPoset};
use super::QuillenError;
use crate::group::{elementary_abelian_subgroups, ConjugationAction, PermGroup, Subgroup};

/// Elementary abelian p-subgroups of `N_ambient(l)` meeting `l C_ambient(l)`
/// trivially.
#[derive(Clone, Debug)]
pub struct OuterPoset {
    pub outers: SubgroupPoset,
    /// Nonempty and every member has order p.
    pub cyclic_only: bool,
}

pub fn p_outer_poset(
    group: &PermGroup,
    ambient: &Subgroup,
    l: &Subgroup,
    p: u64,
    cap: usize,
) -> Result<OuterPoset, QuillenError> {
    let norm = group.normalizer(ambient, l)?;
    let cent = group.centralizer(ambient, l)?;
    let inner = group.join(l, &cent)?;
    let ap = ap_poset(group, &norm, p, cap)?;
    let keep = ap.select(|a| a.nontrivial_members().all(|x| !inner.contains(x)));
    let outers = ap.restrict(&keep);
    let cyclic_only =
        !outers.is_empty() && outers.subgroups().iter().all(|a| a.order() as u64 == p);
    Ok(OuterPoset {
        outers,
        cyclic_only,
    })
}

/// Nontrivial images of `A_p(N_ambient(l))` in the automizer of `l`.
pub struct ImagePoset {
    pub action: ConjugationAction,
    /// `A_p(N_ambient(l))`.
    pub source: SubgroupPoset,
    /// Subgroups of `action.image()`.
    pub images: SubgroupPoset,
    /// Image identifier of each source element, `None` when the image is trivial.
    pub projection: Vec<Option<u32>>,
    /// Images of the elements of `A_p(l)`, which map injectively.
    pub inner: Vec<u32>,
}

impl std::fmt::Debug for ImagePoset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ImagePoset")
            .field("source", &self.source.len())
            .field("images", &self.images.len())
            .field("inner", &self.inner.len())
            .finish()
    }
}

/// The image of `e` under the action, as a subgroup with an independent
/// generating set.
pub(crate) fn project(
    group: &PermGroup,
    action: &ConjugationAction,
    e: &Subgroup,
) -> Result<Subgroup, QuillenError> {
    let img = action.project_subgroup(group, e)?;
    let image_group = action.image();
    let gens = basis(image_group, &img);
    Ok(image_group.generate(&gens))
}

pub fn image_poset(
    group: &PermGroup,
    ambient: &Subgroup,
    l: &Subgroup,
    p: u64,
    cap: usize,
) -> Result<ImagePoset, QuillenError> {
    if (group.center(l).order() as u64).is_multiple_of(p) {
        return Err(QuillenError::CenterHasPTorsion);
    }
    let norm = group.normalizer(ambient, l)?;
    let action = ConjugationAction::new(group, &norm, l)?;
    let source = ap_poset(group, &norm, p, cap)?;
    let mut found: Vec<Subgroup> = Vec::new();
    let mut seen: FxHashSet<Vec<u32>> = FxHashSet::default();
    let mut raw = Vec::with_capacity(source.len());
    for e in source.subgroups() {
        let img = project(group, &action, e)?;
        if img.is_trivial() {
            raw.push(None);
            continue;
        }
        if seen.insert(img.members().to_vec()) {
            found.push(img.clone());
        }
        raw.push(Some(img));
    }
    let images = SubgroupPoset::from_down_closed(action.image(), found, p)?;
    let projection: Vec<Option<u32>> = raw
        .iter()
        .map(|img| img.as_ref().map(|s| images.find(s).expect("image listed")))
        .collect();
    let mut inner = Vec::new();
    for x in source.below(l) {
        let y = projection[x as usize].ok_or(QuillenError::CenterHasPTorsion)?;
        if source.subgroup(x).order() != images.subgroup(y).order() {
            return Err(QuillenError::CenterHasPTorsion);
        }
        inner.push(y);
    }
    inner.sort_unstable();
    inner.dedup();
    Ok(ImagePoset {
        action,
        source,
        images,
        projection,
        inner,
    })
}

/// The union over `E` in the p-outers of `l` (and `E = 1`) of
/// `A_p(Inn(l) Ē)` inside the automizer; member lists, sorted.
pub fn image_union_over_outers(
    group: &PermGroup,
    image: &ImagePoset,
    outers: &OuterPoset,
    p: u64,
    cap: usize,
) -> Result<Vec<Vec<u32>>, QuillenError> {
    let aut = image.action.image();
    let inner = project(group, &image.action, image.action.target())?;
    let mut tops = vec![inner.clone()];
    for e in outers.outers.subgroups() {
        tops.push(aut.join(&inner, &project(group, &image.action, e)?)?);
    }
    let mut all: FxHashSet<Vec<u32>> = FxHashSet::default();
    for t in tops {
        for s in elementary_abelian_subgroups(aut, &t, p, cap)? {
            all.insert(s.members().to_vec());
        }
    }
    let mut out: Vec<Vec<u32>> = all.into_iter().collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::poset_betti;
    use crate::Perm;

    fn s5_a5() -> (PermGroup, Subgroup) {
        let s5 = PermGroup::symmetric(5).unwrap();
        let a5 = s5.derived_subgroup(&s5.whole());
        (s5, a5)
    }

    #[test]
    fn outers_of_a5_in_s5_are_transpositions() {
        let (s5, a5) = s5_a5();
        let o = p_outer_poset(&s5, &s5.whole(), &a5, 2, 1000).unwrap();
        // oracle: involutions outside A5 each generate an outer subgroup
        let brute: Vec<u32> = s5
            .whole()
            .members()
            .iter()
            .copied()
            .filter(|&x| s5.element_order(x) == 2 && !a5.contains(x))
            .collect();
        assert_eq!(brute.len(), 10);
        assert_eq!(o.outers.len(), 10);
        for x in brute {
            assert!(o.outers.find(&s5.generate(&[x])).is_some());
        }
        assert!(o.cyclic_only);
        let none = p_outer_poset(&s5, &a5, &a5, 2, 1000).unwrap();
        assert!(none.outers.is_empty() && !none.cyclic_only);
    }

    #[test]
    fn image_poset_of_simple_group_is_its_quillen_poset() {
        let a5 = PermGroup::alternating(5).unwrap();
        let img = image_poset(&a5, &a5.whole(), &a5.whole(), 2, 1000).unwrap();
        assert_eq!(img.images.len(), 20);
        assert_eq!(img.inner.len(), 20);
        assert_eq!(
            poset_betti(img.images.poset(), 1000).unwrap().values(),
            &[4]
        );
    }

    #[test]
    fn image_poset_of_a5_in_s5_and_outer_union() {
        let (s5, a5) = s5_a5();
        let img = image_poset(&s5, &s5.whole(), &a5, 2, 1000).unwrap();
        assert_eq!(
            poset_betti(img.images.poset(), 100_000).unwrap().values(),
            &[0, 16]
        );
        let outers = p_outer_poset(&s5, &s5.whole(), &a5, 2, 1000).unwrap();
        let union = image_union_over_outers(&s5, &img, &outers, 2, 10_000).unwrap();
        let direct: Vec<Vec<u32>> = img
            .images
            .subgroups()
            .iter()
            .map(|s| s.members().to_vec())
            .collect();
        let mut direct = direct;
        direct.sort();
        assert_eq!(union, direct);
    }

    #[test]
    fn central_p_torsion_is_rejected() {
        let g = PermGroup::from_cycles("c2", 2, &["(1 2)"]).unwrap();
        let c = g
            .generate_perms(&[Perm::parse_cycles("(1 2)", 2).unwrap()])
            .unwrap();
        assert_eq!(
            image_poset(&g, &g.whole(), &c, 2, 10).unwrap_err(),
            QuillenError::CenterHasPTorsion
        );
    }
}
