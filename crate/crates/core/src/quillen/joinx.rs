//! The join `X` of the factor posets and the maps into it.

use std::sync::Arc;

use rustc_hash::{FxHashMap, FxHashSet};
use serde::Serialize;

use super::context::OrbitContext;
use super::outer::{image_poset, ImagePoset};
use super::subposet::{ap_poset, inflation, SubgroupPoset};
use super::QuillenError;
use crate::homology::{ChainComplex, HomologyError};
use crate::poset::{order_complex, Poset, PosetMap, SimplicialComplex};

/// Factors `A_0 = A_p(C_H(N))` and `A_i` (image posets of `(C_i(H), L_i)`),
/// the posets `A_p(C_i(H))`, and the joins built from them. Join parts are
/// numbered by factor index, with part 0 present (possibly empty) everywhere.
pub struct JoinX {
    pub ctx: OrbitContext,
    /// `A_p(C_i(H))` for `i = 0..=t`.
    pub ap_filtration: Vec<SubgroupPoset>,
    /// `A_1, ..., A_t` at positions `1..=t`; position 0 is unused.
    pub images: Vec<Option<ImagePoset>>,
    /// `X = A_0 * A_1 * ... * A_t`.
    pub x: Arc<Poset>,
    /// Offset of each factor inside every prefix join.
    pub offsets: Vec<u32>,
    /// Factor index of each element of `X`.
    pub factor_of: Vec<usize>,
    /// Factors that are nonempty.
    pub present: Vec<usize>,
    /// Minimal-identifier vertex of each present factor, as `X` elements.
    pub base_vertices: Vec<u32>,
    joins: std::sync::Mutex<FxHashMap<(usize, usize), Arc<Poset>>>,
}

impl std::fmt::Debug for JoinX {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("JoinX")
            .field("factor_sizes", &self.factor_sizes())
            .finish()
    }
}

/// Sizes and acyclicity facts of a [`JoinX`].
#[derive(Clone, Debug, Serialize)]
pub struct JoinSummary {
    pub factor_sizes: Vec<usize>,
    pub present: Vec<usize>,
    pub x_size: usize,
    pub k0_simplices: usize,
    pub k_hat0_simplices: usize,
    pub k_hat0_acyclic: bool,
}

impl JoinX {
    pub fn build(ctx: &OrbitContext, cap: usize) -> Result<Self, QuillenError> {
        let g = &*ctx.group;
        let t = ctx.t();
        let ap_h = ap_poset(g, &ctx.kernel, ctx.p, cap)?;
        let ap_filtration: Vec<SubgroupPoset> = ctx
            .filtration
            .iter()
            .map(|c| ap_h.restrict(&ap_h.below(c)))
            .collect();
        let mut images = vec![None];
        for i in 1..=t {
            let img = image_poset(g, &ctx.filtration[i], &ctx.orbit[i - 1], ctx.p, cap)?;
            if img.images.is_empty() {
                return Err(QuillenError::EmptyFactor { index: i });
            }
            images.push(Some(img));
        }
        let mut parts: Vec<&Poset> = vec![ap_filtration[0].poset()];
        for img in images.iter().flatten() {
            parts.push(img.images.poset());
        }
        let offsets = Poset::join_offsets(&parts);
        let x = Arc::new(Poset::join_many(&parts));
        let mut factor_of = Vec::with_capacity(x.len());
        for (i, part) in parts.iter().enumerate() {
            factor_of.extend(std::iter::repeat_n(i, part.len()));
        }
        let present: Vec<usize> = (0..parts.len()).filter(|&i| !parts[i].is_empty()).collect();
        let base_vertices = present.iter().map(|&i| offsets[i]).collect();
        let joins = std::sync::Mutex::new(FxHashMap::default());
        Ok(JoinX {
            ctx: ctx.clone(),
            ap_filtration,
            images,
            x,
            offsets,
            factor_of,
            present,
            base_vertices,
            joins,
        })
    }

    pub fn t(&self) -> usize {
        self.ctx.t()
    }

    fn image(&self, i: usize) -> &ImagePoset {
        self.images[i].as_ref().expect("factor index at least 1")
    }

    pub fn factor_sizes(&self) -> Vec<usize> {
        let mut v = vec![self.ap_filtration[0].len()];
        v.extend(self.images.iter().flatten().map(|m| m.images.len()));
        v
    }

    /// `A_p(C_i(H)) * A_{i+1} * ... * A_j`; for `i = 0` this is the prefix join `W_j`.
    pub fn partial_join(&self, i: usize, j: usize) -> Arc<Poset> {
        let mut cache = self.joins.lock().expect("join cache");
        cache
            .entry((i, j))
            .or_insert_with(|| {
                let mut parts: Vec<&Poset> = vec![self.ap_filtration[i].poset()];
                parts.extend((i + 1..=j).map(|k| self.image(k).images.poset().as_ref()));
                Arc::new(Poset::join_many(&parts))
            })
            .clone()
    }

    pub fn prefix(&self, i: usize) -> Arc<Poset> {
        self.partial_join(0, i)
    }

    /// `π_i(E)` for `E` in `A_p(C_i(H))`, as an element of `A_i`.
    fn pi(&self, i: usize, e: &crate::Subgroup) -> Option<u32> {
        let img = self.image(i);
        let x = img.source.find(e).expect("element of A_p(C_i(H))");
        img.projection[x as usize]
    }

    /// Smallest `k` with `E <= C_k(H)`.
    fn level(&self, e: &crate::Subgroup) -> usize {
        self.ctx
            .filtration
            .iter()
            .position(|c| e.is_subset_of(c))
            .expect("E lies in H")
    }

    /// `ψ_i : A_p(C_i(H)) -> W_i`.
    pub fn psi(&self, i: usize) -> Result<PosetMap, QuillenError> {
        if i > self.t() {
            return Err(QuillenError::IndexOutOfRange);
        }
        let src = &self.ap_filtration[i];
        let table = src
            .subgroups()
            .iter()
            .map(|e| {
                let k = self.level(e);
                if k == 0 {
                    self.ap_filtration[0].find(e).expect("in A_0")
                } else {
                    self.offsets[k]
                        + self
                            .pi(k, e)
                            .expect("outside C_{k-1}(H) the image is nontrivial")
                }
            })
            .collect();
        Ok(PosetMap::new(src.poset().clone(), self.prefix(i), table)?)
    }

    /// `ψ_H = ψ_t`.
    pub fn psi_h(&self) -> Result<PosetMap, QuillenError> {
        self.psi(self.t())
    }

    /// `φ_i : A_p(C_i(H)) -> A_p(C_{i-1}(H)) * A_i`.
    pub fn phi(&self, i: usize) -> Result<PosetMap, QuillenError> {
        self.big_phi(i, i)
    }

    /// `Φ_{i,j} = φ_i * id`, from `A_p(C_i(H)) * A_{i+1} * ... * A_j` to
    /// `A_p(C_{i-1}(H)) * A_i * ... * A_j`.
    pub fn big_phi(&self, i: usize, j: usize) -> Result<PosetMap, QuillenError> {
        if i == 0 || i > j || j > self.t() {
            return Err(QuillenError::IndexOutOfRange);
        }
        let src = &self.ap_filtration[i];
        let lower = &self.ap_filtration[i - 1];
        let below = &self.ctx.filtration[i - 1];
        let mut table: Vec<u32> = src
            .subgroups()
            .iter()
            .map(|e| {
                if e.is_subset_of(below) {
                    lower.find(e).expect("in A_p(C_{i-1}(H))")
                } else {
                    lower.len() as u32 + self.pi(i, e).expect("nontrivial image")
                }
            })
            .collect();
        let shift = lower.len() as u32 + self.image(i).images.len() as u32;
        let rest: usize = (i + 1..=j).map(|k| self.image(k).images.len()).sum();
        table.extend((0..rest as u32).map(|y| shift + y));
        Ok(PosetMap::new(
            self.partial_join(i, j),
            self.partial_join(i - 1, j),
            table,
        )?)
    }

    /// Checks `ψ_i = Φ_{1,i} ∘ ... ∘ Φ_{i,i}` elementwise.
    pub fn composition_holds(&self, i: usize) -> Result<bool, QuillenError> {
        let psi = self.psi(i)?;
        if i == 0 {
            return Ok(true);
        }
        let mut acc = self.big_phi(i, i)?;
        for k in (1..i).rev() {
            acc = acc.then(&self.big_phi(k, i)?)?;
        }
        Ok(acc.table() == psi.table())
    }

    /// Factor mask of each `X` element's chain membership.
    fn mask(&self, x: u32) -> u64 {
        1 << self.factor_of[x as usize]
    }

    fn all_mask(&self) -> u64 {
        self.present.iter().map(|&i| 1u64 << i).sum()
    }

    pub fn complex(&self, cap: usize) -> Result<SimplicialComplex, QuillenError> {
        Ok(order_complex(&self.x, cap)?)
    }

    /// `K_0`: chains of `X` missing at least one present factor.
    pub fn k0(&self, k: &SimplicialComplex) -> SimplicialComplex {
        let all = self.all_mask();
        k.filter(|s| s.iter().fold(0, |m, &x| m | self.mask(x)) != all)
    }

    /// `K̂_0`: union of the closed stars of the base vertices.
    pub fn k_hat0(&self, k: &SimplicialComplex) -> SimplicialComplex {
        k.filter(|s| {
            self.base_vertices
                .iter()
                .any(|&v| s.iter().all(|&y| self.x.comparable(v, y)))
        })
    }

    pub fn summary(&self, cap: usize) -> Result<JoinSummary, QuillenError> {
        let k = self.complex(cap)?;
        let k0 = self.k0(&k);
        let kh = self.k_hat0(&k);
        let acyclic = ChainComplex::from_simplicial(&kh).betti().is_acyclic();
        Ok(JoinSummary {
            factor_sizes: self.factor_sizes(),
            present: self.present.clone(),
            x_size: self.x.len(),
            k0_simplices: k0.total(),
            k_hat0_simplices: kh.total(),
            k_hat0_acyclic: acyclic,
        })
    }

    /// Whether `ψ_H` sends every chain of the subposet `ids` of `A_p(H)` into `K_0`.
    pub fn psi_h_chains_in_k0(&self, ids: &[u32]) -> Result<bool, QuillenError> {
        let psi = self.psi_h()?;
        let sub = self.ap_filtration[self.t()].poset().induced(ids);
        let all = self.all_mask();
        let n = sub.len();
        // factor masks reachable along saturated chains starting at each element
        let mut reach: Vec<FxHashSet<u64>> = vec![FxHashSet::default(); n];
        for x in (0..n).rev() {
            let own = self.mask(psi.apply(ids[x]));
            let covers = sub.upper_covers(x as u32);
            let mut set = FxHashSet::default();
            if covers.is_empty() {
                set.insert(own);
            }
            for &y in covers {
                for &m in &reach[y as usize] {
                    set.insert(own | m);
                }
            }
            reach[x] = set;
        }
        Ok(reach.iter().all(|s| !s.contains(&all)))
    }
}

/// `A_p(G) = Y ∪ Z` with `Y` the inflation of `A_p(H)`, `Z` the elements not
/// in `H`, `Y_0 = Y ∩ Z` and `V_0 = r(Y_0)`. Identifiers of `y`, `z`, `y0`
/// refer to `ap_g`; those of `v0` to `ap_h`.
pub struct Decomposition {
    pub ap_g: SubgroupPoset,
    pub ap_h: SubgroupPoset,
    pub y: Vec<u32>,
    pub z: Vec<u32>,
    pub y0: Vec<u32>,
    pub v0: Vec<u32>,
    /// `a : Y_0 -> Y`.
    pub a: PosetMap,
    /// `b : V_0 -> A_p(H)`.
    pub b: PosetMap,
    /// `r : Y -> A_p(H)`.
    pub r: PosetMap,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionFlags {
    pub y_nonempty: bool,
    pub z_nonempty: bool,
    pub y0_nonempty: bool,
    pub v0_nonempty: bool,
    pub trivial: bool,
    pub sizes: [usize; 5],
}

impl Decomposition {
    pub fn build(ctx: &OrbitContext, cap: usize) -> Result<Self, QuillenError> {
        let g = &*ctx.group;
        let ap_g = ap_poset(g, &g.whole(), ctx.p, cap)?;
        let inf = inflation(g, &ap_g, &ctx.kernel)?;
        let ap_h = inf.base;
        let y = inf.kept;
        let z = ap_g.select(|e| !e.is_subset_of(&ctx.kernel));
        let zset: FxHashSet<u32> = z.iter().copied().collect();
        let y0: Vec<u32> = y.iter().copied().filter(|x| zset.contains(x)).collect();
        let y_pos: FxHashMap<u32, u32> =
            y.iter().enumerate().map(|(i, &x)| (x, i as u32)).collect();
        let mut v0: Vec<u32> = y0.iter().map(|x| inf.retraction.apply(y_pos[x])).collect();
        v0.sort_unstable();
        v0.dedup();
        let y_poset = inf.retraction.source().clone();
        let a_table = y0.iter().map(|x| y_pos[x]).collect();
        let a = PosetMap::new(Arc::new(ap_g.poset().induced(&y0)), y_poset, a_table)?;
        let b = PosetMap::inclusion(ap_h.poset().clone(), &v0);
        Ok(Decomposition {
            ap_g,
            ap_h,
            y,
            z,
            y0,
            v0,
            a,
            b,
            r: inf.retraction,
        })
    }

    /// `r ∘ a : Y_0 -> A_p(H)`.
    pub fn ra(&self) -> Result<PosetMap, QuillenError> {
        Ok(self.a.then(&self.r)?)
    }

    pub fn flags(&self) -> DecompositionFlags {
        DecompositionFlags {
            y_nonempty: !self.y.is_empty(),
            z_nonempty: !self.z.is_empty(),
            y0_nonempty: !self.y0.is_empty(),
            v0_nonempty: !self.v0.is_empty(),
            trivial: self.z.is_empty(),
            sizes: [
                self.ap_g.len(),
                self.y.len(),
                self.z.len(),
                self.y0.len(),
                self.v0.len(),
            ],
        }
    }
}

impl From<HomologyError> for QuillenError {
    fn from(e: HomologyError) -> Self {
        QuillenError::Homology(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::PermGroup;
    use crate::homology::{induced_map, poset_betti, MapOptions};
    use crate::Perm;

    fn worked_example() -> OrbitContext {
        let g = PermGroup::from_cycles(
            "a5a5er",
            10,
            &[
                "(1 2 3 4 5)",
                "(1 2 3)",
                "(6 7 8 9 10)",
                "(6 7 8)",
                "(1 2)(6 7)",
                "(1 6)(2 7)(3 8)(4 9)(5 10)",
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
        OrbitContext::new(Arc::new(g), 2, vec![l1, l2], true).unwrap()
    }

    #[test]
    fn worked_example_join_and_maps() {
        let ctx = worked_example();
        assert_eq!(ctx.group.order(), 14400);
        assert_eq!(
            ctx.filtration.iter().map(|c| c.order()).collect::<Vec<_>>(),
            vec![1, 60, 7200]
        );
        let jx = JoinX::build(&ctx, 1_000_000).unwrap();
        assert_eq!(jx.factor_sizes()[0], 0);
        assert_eq!(jx.present, vec![1, 2]);
        let b1 = poset_betti(jx.image(1).images.poset(), 1 << 20).unwrap();
        let b2 = poset_betti(jx.image(2).images.poset(), 1 << 20).unwrap();
        assert_eq!(b1.values(), &[4]);
        assert_eq!(b2.values(), &[0, 16]);
        assert_eq!(poset_betti(&jx.x, 1 << 22).unwrap().values(), &[0, 0, 64]);
        let phi1 = jx.phi(1).unwrap();
        let mut image = phi1.table().to_vec();
        image.sort_unstable();
        assert_eq!(image, (0..phi1.target().len() as u32).collect::<Vec<_>>());
        let src = phi1.source();
        for x in 0..src.len() as u32 {
            for y in 0..src.len() as u32 {
                assert_eq!(src.le(x, y), phi1.target().le(phi1.apply(x), phi1.apply(y)));
            }
        }
        for i in 0..=2 {
            assert!(jx.composition_holds(i).unwrap());
        }
        let s = jx.summary(1 << 22).unwrap();
        assert!(s.k_hat0_acyclic);
        let phi2 = induced_map(&jx.phi(2).unwrap(), &MapOptions::default()).unwrap();
        assert!(phi2
            .reports
            .iter()
            .filter(|r| r.degree <= 2)
            .all(|r| r.surjective));
    }

    #[test]
    fn single_simple_factor() {
        let a5 = Arc::new(PermGroup::alternating(5).unwrap());
        let ctx = OrbitContext::all(a5, 2, None).unwrap().remove(0);
        let jx = JoinX::build(&ctx, 10_000).unwrap();
        assert_eq!(jx.x.len(), 20);
        let k = jx.complex(10_000).unwrap();
        assert_eq!(jx.k0(&k).total(), 0);
        assert!(jx.summary(10_000).unwrap().k_hat0_acyclic);
        assert!(jx.composition_holds(1).unwrap());
    }
}
