use rustc_hash::FxHashSet;

use super::{is_power_of, require_prime, GroupError, PermGroup, Subgroup};

impl PermGroup {
    /// A Sylow p-subgroup of `ambient`, grown one p-element of the normalizer at a time.
    pub fn sylow(&self, ambient: &Subgroup, p: u64) -> Result<Subgroup, GroupError> {
        require_prime(p)?;
        let mut target = ambient.order() as u64;
        while target.is_multiple_of(p) {
            target /= p;
        }
        let target = ambient.order() as u64 / target;
        let mut cur = self.trivial();
        while (cur.order() as u64) < target {
            let norm = self.normalizer(ambient, &cur)?;
            let x = norm
                .members()
                .iter()
                .copied()
                .find(|&x| !cur.contains(x) && is_power_of(self.element_order(x) as u64, p))
                .expect("a non-Sylow p-subgroup has p-elements outside it in its normalizer");
            let grown = self.join(&cur, &self.generate(&[x]))?;
            cur = grown;
        }
        Ok(cur)
    }

    /// All Sylow p-subgroups of `ambient`.
    pub fn sylow_subgroups(&self, ambient: &Subgroup, p: u64) -> Result<Vec<Subgroup>, GroupError> {
        let first = self.sylow(ambient, p)?;
        let mut seen: FxHashSet<Vec<u32>> = FxHashSet::default();
        seen.insert(first.members().to_vec());
        let mut out = vec![first];
        let mut i = 0;
        while i < out.len() {
            for &g in ambient.generators() {
                let c = self.conjugate(&out[i], g);
                if seen.insert(c.members().to_vec()) {
                    out.push(self.subgroup_from_members(c.members().to_vec()));
                }
            }
            i += 1;
        }
        out.sort_by(|a, b| a.members().cmp(b.members()));
        Ok(out)
    }

    /// Whether the order of `s` is a power of `p`.
    pub fn is_p_group(&self, s: &Subgroup, p: u64) -> bool {
        is_power_of(s.order() as u64, p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sylow_orders_and_counts() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let w = s4.whole();
        assert_eq!(s4.sylow(&w, 2).unwrap().order(), 8);
        assert_eq!(s4.sylow(&w, 3).unwrap().order(), 3);
        assert_eq!(s4.sylow(&w, 5).unwrap().order(), 1);
        assert_eq!(s4.sylow_subgroups(&w, 2).unwrap().len(), 3);
        assert_eq!(s4.sylow_subgroups(&w, 3).unwrap().len(), 4);
        let a5 = PermGroup::alternating(5).unwrap();
        assert_eq!(a5.sylow_subgroups(&a5.whole(), 2).unwrap().len(), 5);
        assert_eq!(a5.sylow_subgroups(&a5.whole(), 5).unwrap().len(), 6);
    }

    #[test]
    fn o_p_is_intersection_of_sylows() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let w = s4.whole();
        let syl = s4.sylow_subgroups(&w, 2).unwrap();
        let mut inter = syl[0].clone();
        for s in &syl[1..] {
            inter = s4.intersection(&inter, s).unwrap();
        }
        assert_eq!(inter, s4.o_p(&w, 2).unwrap());
    }
}
