//! A conjugation orbit of components and its centralizer filtration.

use std::sync::Arc;

use serde::Serialize;

use super::subposet::SubgroupPoset;
use super::QuillenError;
use crate::group::{component_orbits, detect_components, validate_components, PermGroup, Subgroup};

/// A single `G`-orbit `L_1, ..., L_t` of components with the kernel
/// `H = ∩ N_G(L_i)`, the product `N = L_1 ... L_t` and the series
/// `C_i(H) = C_H(L_{i+1} ... L_t)`.
#[derive(Clone, Debug)]
pub struct OrbitContext {
    pub group: Arc<PermGroup>,
    pub p: u64,
    pub orbit: Vec<Subgroup>,
    pub kernel: Subgroup,
    pub product: Subgroup,
    /// `C_0(H), ..., C_t(H)`.
    pub filtration: Vec<Subgroup>,
    /// Whether the order was given by the caller rather than canonical.
    pub user_ordered: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ContextReport {
    pub group: String,
    pub group_order: usize,
    pub p: u64,
    pub kernel_kind: &'static str,
    pub orbit_ordering: &'static str,
    /// Smallest nontrivial element index of each component, in orbit order.
    pub orbit: Vec<u32>,
    pub component_orders: Vec<usize>,
    pub kernel_order: usize,
    pub filtration_orders: Vec<usize>,
}

fn canonical_key(l: &Subgroup) -> u32 {
    l.members().get(1).copied().unwrap_or(0)
}

impl OrbitContext {
    /// Validates an orbit. With `keep_order` false the components are sorted
    /// by their smallest nontrivial element.
    pub fn new(
        group: Arc<PermGroup>,
        p: u64,
        mut orbit: Vec<Subgroup>,
        keep_order: bool,
    ) -> Result<Self, QuillenError> {
        crate::group::require_prime(p)?;
        if orbit.is_empty() {
            return Err(QuillenError::InvalidContext("empty orbit".into()));
        }
        validate_components(&group, &orbit)?;
        if !keep_order {
            orbit.sort_by_key(canonical_key);
        }
        let g = &*group;
        for l in &orbit {
            for &x in g.generator_indices() {
                let c = g.conjugate(l, x);
                if !orbit.iter().any(|m| m.members() == c.members()) {
                    return Err(QuillenError::NotSingleOrbit);
                }
            }
        }
        if component_orbits(g, &g.whole(), &orbit).len() != 1 {
            return Err(QuillenError::NotSingleOrbit);
        }
        let whole = g.whole();
        let mut kernel = whole.clone();
        for l in &orbit {
            kernel = g.intersection(&kernel, &g.normalizer(&whole, l)?)?;
        }
        let mut product = g.trivial();
        for l in &orbit {
            product = g.join(&product, l)?;
        }
        let t = orbit.len();
        let mut filtration = Vec::with_capacity(t + 1);
        for i in 0..=t {
            let mut c = kernel.clone();
            for l in &orbit[i..] {
                c = g.centralizer(&c, l)?;
            }
            filtration.push(c);
        }
        for i in 1..=t {
            let ci = &filtration[i];
            if !orbit[i - 1].is_subset_of(ci)
                || g.centralizer(ci, &orbit[i - 1])? != filtration[i - 1]
            {
                return Err(QuillenError::InvalidContext(format!(
                    "filtration fails at step {i}"
                )));
            }
        }
        if filtration[0] != g.centralizer(&whole, &product)? {
            return Err(QuillenError::InvalidContext(
                "C_0(H) differs from C_G(N)".into(),
            ));
        }
        Ok(OrbitContext {
            group,
            p,
            orbit,
            kernel,
            product,
            filtration,
            user_ordered: keep_order,
        })
    }

    /// Orbits of the components of `group`, canonically ordered, each as a
    /// context. Declared components replace detection when given.
    pub fn all(
        group: Arc<PermGroup>,
        p: u64,
        declared: Option<Vec<Subgroup>>,
    ) -> Result<Vec<Self>, QuillenError> {
        let comps = match declared {
            Some(c) => c,
            None => detect_components(&group)?,
        };
        let orbits = component_orbits(&group, &group.whole(), &comps);
        let mut out = Vec::new();
        for o in orbits {
            let ls = o.iter().map(|&i| comps[i].clone()).collect();
            out.push(OrbitContext::new(group.clone(), p, ls, false)?);
        }
        out.sort_by_key(|c| canonical_key(&c.orbit[0]));
        Ok(out)
    }

    pub fn t(&self) -> usize {
        self.orbit.len()
    }

    /// Whether `p` divides every component order.
    pub fn p_divides_components(&self) -> bool {
        (self.orbit[0].order() as u64).is_multiple_of(self.p)
    }

    pub fn report(&self) -> ContextReport {
        ContextReport {
            group: self.group.name().to_string(),
            group_order: self.group.order(),
            p: self.p,
            kernel_kind: "local",
            orbit_ordering: if self.user_ordered {
                "user"
            } else {
                "canonical"
            },
            orbit: self.orbit.iter().map(canonical_key).collect(),
            component_orders: self.orbit.iter().map(|l| l.order()).collect(),
            kernel_order: self.kernel.order(),
            filtration_orders: self.filtration.iter().map(|c| c.order()).collect(),
        }
    }
}

/// Which membership rule to use for the diagonal poset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiagonalRule {
    /// Some `J` with `|J| >= 2` on which `C_A(L_J) = C_A(L_i)` for all `i` in `J`.
    EqualCentralizers,
    /// Members of `A_p(H)` lying in no `A_p(L_i)`.
    OutsideComponents,
}

/// Identifiers in `ap_h` (which must be `A_p(H)`) of the diagonal poset.
pub fn diagonal_ids(ctx: &OrbitContext, ap_h: &SubgroupPoset, rule: DiagonalRule) -> Vec<u32> {
    let g = &*ctx.group;
    let t = ctx.t();
    match rule {
        DiagonalRule::OutsideComponents => {
            ap_h.select(|a| !ctx.orbit.iter().any(|l| a.is_subset_of(l)))
        }
        DiagonalRule::EqualCentralizers => {
            if t < 2 {
                return Vec::new();
            }
            ap_h.select(|a| {
                let cents: Vec<Vec<u32>> = ctx
                    .orbit
                    .iter()
                    .map(|l| {
                        a.members()
                            .iter()
                            .copied()
                            .filter(|&x| l.generators().iter().all(|&y| g.commute(x, y)))
                            .collect()
                    })
                    .collect();
                (0u64..1 << t).filter(|j| j.count_ones() >= 2).any(|j| {
                    let idx: Vec<usize> = (0..t).filter(|&i| j >> i & 1 == 1).collect();
                    let joint: Vec<u32> = cents[idx[0]]
                        .iter()
                        .copied()
                        .filter(|x| idx.iter().all(|&i| cents[i].contains(x)))
                        .collect();
                    idx.iter().all(|&i| cents[i] == joint)
                })
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quillen::ap_poset;
    use crate::Perm;

    pub(crate) fn a5a5_e() -> (Arc<PermGroup>, Vec<Subgroup>) {
        let g = PermGroup::from_cycles(
            "a5a5e",
            10,
            &[
                "(1 2 3 4 5)",
                "(1 2 3)",
                "(6 7 8 9 10)",
                "(6 7 8)",
                "(1 2)(6 7)",
            ],
        )
        .unwrap();
        let l1 = g
            .generate_perms(&[
                Perm::parse_cycles("(1 2 3 4 5)", 10).unwrap(),
                Perm::parse_cycles("(1 2 3)", 10).unwrap(),
            ])
            .unwrap();
        let l2 = g
            .generate_perms(&[
                Perm::parse_cycles("(6 7 8 9 10)", 10).unwrap(),
                Perm::parse_cycles("(6 7 8)", 10).unwrap(),
            ])
            .unwrap();
        (Arc::new(g), vec![l1, l2])
    }

    #[test]
    fn filtration_of_a5_squared() {
        let (g, ls) = a5a5_e();
        assert_eq!(g.order(), 7200);
        // E normalizes each factor, so {L1} and {L2} are separate orbits
        assert_eq!(
            OrbitContext::new(g.clone(), 2, ls.clone(), false).unwrap_err(),
            QuillenError::NotSingleOrbit
        );
        let ctx = OrbitContext::new(g.clone(), 2, vec![ls[0].clone()], true).unwrap();
        assert_eq!(
            ctx.filtration.iter().map(|c| c.order()).collect::<Vec<_>>(),
            vec![60, 7200]
        );
        let all = OrbitContext::all(g, 2, None).unwrap();
        assert_eq!(all.len(), 2);
    }

    #[test]
    fn simple_group_context() {
        let a6 = Arc::new(PermGroup::alternating(6).unwrap());
        let ctx = OrbitContext::all(a6.clone(), 2, None).unwrap().remove(0);
        assert_eq!(ctx.t(), 1);
        assert_eq!(ctx.filtration[0].order(), 1);
        let ap = ap_poset(&a6, &a6.whole(), 2, 10_000).unwrap();
        assert!(diagonal_ids(&ctx, &ap, DiagonalRule::EqualCentralizers).is_empty());
    }
}
