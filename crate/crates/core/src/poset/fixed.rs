use super::{Poset, PosetError};

/// A group acting on the elements of a poset, given on generators.
pub trait PosetAction {
    fn generator_count(&self) -> usize;
    /// Image of element `x` under generator `g`.
    fn act(&self, g: usize, x: u32) -> u32;
}

/// The fixed-point subposet and the identifiers it came from.
#[derive(Clone, Debug)]
pub struct FixedSubposet {
    pub poset: Poset,
    pub kept: Vec<u32>,
}

/// Elements fixed by every generator, after checking that each generator acts
/// as a poset automorphism.
pub fn fixed_subposet(p: &Poset, action: &impl PosetAction) -> Result<FixedSubposet, PosetError> {
    let n = p.len();
    for g in 0..action.generator_count() {
        let images: Vec<u32> = (0..n as u32).map(|x| action.act(g, x)).collect();
        let mut hit = vec![false; n];
        for &y in &images {
            if y as usize >= n || std::mem::replace(&mut hit[y as usize], true) {
                return Err(PosetError::NotAnActionByAutomorphisms);
            }
        }
        for (x, y) in p.cover_edges() {
            if !p.lt(images[x as usize], images[y as usize]) {
                return Err(PosetError::NotAnActionByAutomorphisms);
            }
        }
    }
    let kept: Vec<u32> = (0..n as u32)
        .filter(|&x| (0..action.generator_count()).all(|g| action.act(g, x) == x))
        .collect();
    Ok(FixedSubposet {
        poset: p.induced(&kept),
        kept,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Swap(Vec<u32>);
    impl PosetAction for Swap {
        fn generator_count(&self) -> usize {
            1
        }
        fn act(&self, _: usize, x: u32) -> u32 {
            self.0[x as usize]
        }
    }

    #[test]
    fn fixed_points_of_a_swap() {
        // 0,1 < 2
        let p = Poset::from_plain_pairs(3, &[(0, 2), (1, 2)]).unwrap();
        let f = fixed_subposet(&p, &Swap(vec![1, 0, 2])).unwrap();
        assert_eq!(f.kept, vec![2]);
        assert_eq!(
            fixed_subposet(&p, &Swap(vec![2, 1, 0])).unwrap_err(),
            PosetError::NotAnActionByAutomorphisms
        );
    }
}
