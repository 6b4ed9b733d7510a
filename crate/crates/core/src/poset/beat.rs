use fixedbitset::FixedBitSet;

use super::Poset;

/// Result of stripping beat points: the core, the surviving identifiers and
/// a retraction sending every element to a core element.
#[derive(Clone, Debug)]
pub struct BeatCore {
    pub core: Poset,
    pub kept: Vec<u32>,
    /// For each element of the original poset, its image in `core`.
    pub retraction: Vec<u32>,
}

/// Repeatedly removes up-beat points (the strict upper set has a minimum) and
/// down-beat points (the strict lower set has a maximum).
pub fn beat_point_core(p: &Poset) -> BeatCore {
    let n = p.len();
    let mut alive = FixedBitSet::with_capacity(n);
    alive.insert_range(..);
    let mut target = vec![u32::MAX; n];
    let mut scratch = FixedBitSet::with_capacity(n);
    loop {
        let mut removed = false;
        for x in 0..n {
            if !alive.contains(x) {
                continue;
            }
            scratch.clone_from(p.up(x as u32));
            scratch.intersect_with(&alive);
            if let Some(y) = scratch.minimum() {
                scratch.set(y, false);
                if scratch.is_subset(p.up(y as u32)) {
                    alive.set(x, false);
                    target[x] = y as u32;
                    removed = true;
                    continue;
                }
            }
            scratch.clone_from(p.down(x as u32));
            scratch.intersect_with(&alive);
            if let Some(y) = scratch.maximum() {
                scratch.set(y, false);
                if scratch.is_subset(p.down(y as u32)) {
                    alive.set(x, false);
                    target[x] = y as u32;
                    removed = true;
                }
            }
        }
        if !removed {
            break;
        }
    }
    let kept: Vec<u32> = alive.ones().map(|x| x as u32).collect();
    let mut pos = vec![u32::MAX; n];
    for (i, &x) in kept.iter().enumerate() {
        pos[x as usize] = i as u32;
    }
    let mut retraction = vec![u32::MAX; n];
    for x in 0..n {
        let mut y = x;
        while pos[y] == u32::MAX {
            y = target[y] as usize;
        }
        retraction[x] = pos[y];
    }
    BeatCore {
        core: p.induced(&kept),
        kept,
        retraction,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_collapses_to_point() {
        let p = Poset::from_plain_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        let c = beat_point_core(&p);
        assert_eq!(c.core.len(), 1);
        assert!(c.retraction.iter().all(|&r| r == 0));
    }

    #[test]
    fn circle_is_its_own_core() {
        // two minima below two maxima: a 4-cycle
        let p = Poset::from_plain_pairs(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let c = beat_point_core(&p);
        assert_eq!(c.kept, vec![0, 1, 2, 3]);
    }

    #[test]
    fn retraction_is_order_preserving() {
        let p = Poset::from_plain_pairs(
            7,
            &[
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (2, 4),
                (3, 4),
                (5, 0),
                (6, 1),
            ],
        )
        .unwrap();
        let c = beat_point_core(&p);
        for (x, y) in p.cover_edges() {
            assert!(c
                .core
                .le(c.retraction[x as usize], c.retraction[y as usize]));
        }
        for (i, &k) in c.kept.iter().enumerate() {
            assert_eq!(c.retraction[k as usize], i as u32);
        }
    }
}
