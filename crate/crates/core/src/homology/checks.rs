//! Join formula and Mayer-Vietoris audits.

use serde::Serialize;

use super::chain::{induced_ranks, ChainComplex, ChainMap};
use super::maps::poset_betti;
use super::{BettiVector, HomologyError};
use crate::poset::{beat_point_core, order_complex, BeatCore, Poset, SimplicialComplex};

#[derive(Clone, Debug, Serialize)]
pub struct KunnethReport {
    pub left_betti: BettiVector,
    pub right_betti: BettiVector,
    /// Betti numbers of the join, computed directly.
    pub join_betti: BettiVector,
    /// The same numbers from the factors.
    pub predicted: BettiVector,
    pub holds: bool,
}

/// Compares the homology of `p * q` with the sum over `i + j = n - 1` of
/// `b_i(p) b_j(q)`.
pub fn kunneth_check(p: &Poset, q: &Poset, cap: usize) -> Result<KunnethReport, HomologyError> {
    let bp = poset_betti(p, cap)?;
    let bq = poset_betti(q, cap)?;
    let join_betti = poset_betti(&Poset::join(p, q), cap)?;
    let top = bp.top().max(-1) + bq.top().max(-1) + 1;
    let predicted: Vec<u64> = (-1..=top)
        .map(|n| (-1..=bp.top()).map(|i| bp.get(i) * bq.get(n - 1 - i)).sum())
        .collect();
    let predicted = BettiVector::from_degrees(predicted);
    Ok(KunnethReport {
        holds: predicted == join_betti,
        left_betti: bp,
        right_betti: bq,
        join_betti,
        predicted,
    })
}

/// Ranks of the maps in the Mayer-Vietoris sequence of `union = Y ∪ Z`.
#[derive(Clone, Debug, Serialize)]
pub struct MvReport {
    pub overlap_size: usize,
    pub overlap_betti: BettiVector,
    pub y_betti: BettiVector,
    pub z_betti: BettiVector,
    pub union_betti: BettiVector,
    /// Per degree from `-1`: rank of `H(Y0) -> H(Y) ⊕ H(Z)`.
    pub alpha_ranks: Vec<u64>,
    /// Per degree from `-1`: rank of `H(Y) ⊕ H(Z) -> H(union)`.
    pub beta_ranks: Vec<u64>,
    /// Per degree from `-1`: rank of `H_k(union) -> H_{k-1}(Y0)`, from exactness at `H(Y0)`.
    pub connecting_ranks: Vec<i64>,
    /// Per degree from `-1`: rank of `H(Y0) -> H(Y)`.
    pub overlap_into_y_ranks: Vec<u64>,
    pub alternating_sum: i64,
    pub exact: bool,
}

impl MvReport {
    pub fn overlap_into_y_surjective(&self) -> bool {
        self.overlap_into_y_ranks
            .iter()
            .enumerate()
            .all(|(i, &r)| r == self.y_betti.get(i as isize - 1))
    }
}

struct Piece {
    ids: Vec<u32>,
    core: BeatCore,
    complex: SimplicialComplex,
    chains: ChainComplex,
}

fn piece(union: &Poset, ids: Vec<u32>, cap: usize) -> Result<Piece, HomologyError> {
    let sub = union.induced(&ids);
    let core = beat_point_core(&sub);
    let complex = order_complex(&core.core, cap)?;
    let chains = ChainComplex::from_simplicial(&complex);
    Ok(Piece {
        ids,
        core,
        complex,
        chains,
    })
}

/// Chain map of the inclusion `s ⊆ t`, moved to the cores.
fn inclusion(s: &Piece, t: &Piece) -> ChainMap {
    let table: Vec<u32> = s
        .core
        .kept
        .iter()
        .map(|&x| {
            let id = s.ids[x as usize];
            let pos = t.ids.binary_search(&id).expect("subset");
            t.core.retraction[pos]
        })
        .collect();
    ChainMap::from_vertex_map(&s.complex, &t.complex, &table)
        .expect("order-preserving maps are simplicial")
}

/// Audits the Mayer-Vietoris sequence of `union = Y ∪ Z` for element sets
/// `y` and `z` of `union`.
pub fn mv_rank_audit(
    union: &Poset,
    y: &[u32],
    z: &[u32],
    cap: usize,
) -> Result<MvReport, HomologyError> {
    let n = union.len();
    let mut in_y = vec![false; n];
    let mut in_z = vec![false; n];
    for &a in y {
        in_y[a as usize] = true;
    }
    for &a in z {
        in_z[a as usize] = true;
    }
    if (0..n).any(|a| !in_y[a] && !in_z[a]) {
        return Err(HomologyError::NotACover);
    }
    for a in 0..n as u32 {
        if in_y[a as usize]
            && !in_z[a as usize]
            && union
                .up(a)
                .ones()
                .chain(union.down(a).ones())
                .any(|b| in_z[b] && !in_y[b])
        {
            return Err(HomologyError::NotACover);
        }
    }
    let ids = |f: &dyn Fn(usize) -> bool| {
        (0..n as u32)
            .filter(|&a| f(a as usize))
            .collect::<Vec<u32>>()
    };
    let y0 = piece(union, ids(&|a| in_y[a] && in_z[a]), cap)?;
    let yp = piece(union, ids(&|a| in_y[a]), cap)?;
    let zp = piece(union, ids(&|a| in_z[a]), cap)?;
    let up = piece(union, (0..n as u32).collect(), cap)?;

    let a = inclusion(&y0, &yp);
    let c = inclusion(&y0, &zp);
    let sum = yp.chains.direct_sum(&zp.chains);
    let alpha = a.pair(&c, &yp.chains);
    let beta = inclusion(&yp, &up).hstack(&inclusion(&zp, &up), true, &yp.chains);
    let (b0, bsum, alpha_ranks) = induced_ranks(&y0.chains, &sum, &alpha);
    let (_, bu, beta_ranks) = induced_ranks(&sum, &up.chains, &beta);
    let (_, by, a_ranks) = induced_ranks(&y0.chains, &yp.chains, &a);
    let bz = zp.chains.betti();

    let top = [b0.top(), bsum.top(), bu.top()].into_iter().max().unwrap() + 1;
    let at = |v: &[u64], d: isize| {
        if d < -1 {
            0
        } else {
            v.get((d + 1) as usize).copied().unwrap_or(0) as i64
        }
    };
    let mut exact = true;
    let mut connecting = Vec::new();
    let mut alternating = 0i64;
    for d in -1..=top {
        // im alpha = ker beta
        exact &= at(&alpha_ranks, d) == bsum.get(d) as i64 - at(&beta_ranks, d);
        // ker alpha = im delta, and im beta = ker delta
        let delta = b0.get(d - 1) as i64 - at(&alpha_ranks, d - 1);
        exact &= bu.get(d) as i64 - at(&beta_ranks, d) == delta;
        connecting.push(delta);
        let term = b0.get(d) as i64 - bsum.get(d) as i64 + bu.get(d) as i64;
        alternating += if d.rem_euclid(2) == 0 { term } else { -term };
    }
    exact &= alternating == 0;
    Ok(MvReport {
        overlap_size: y0.ids.len(),
        overlap_betti: b0,
        y_betti: by,
        z_betti: bz,
        union_betti: bu,
        alpha_ranks,
        beta_ranks,
        connecting_ranks: connecting,
        overlap_into_y_ranks: a_ranks,
        alternating_sum: alternating,
        exact,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn join_of_two_zero_spheres() {
        let r = kunneth_check(&Poset::antichain(2), &Poset::antichain(2), 1000).unwrap();
        assert!(r.holds);
        assert_eq!(r.join_betti.values(), &[0, 1]);
        let e = kunneth_check(&Poset::antichain(3), &Poset::antichain(0), 1000).unwrap();
        assert!(e.holds);
        assert_eq!(e.join_betti.values(), &[2]);
    }

    #[test]
    fn circle_from_two_arcs() {
        // 0,1 minimal; 2,3 maximal; Y = {0,1,2}, Z = {0,1,3}, overlap two points
        let u = Poset::from_plain_pairs(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let r = mv_rank_audit(&u, &[0, 1, 2], &[0, 1, 3], 1000).unwrap();
        assert!(r.exact);
        assert_eq!(r.overlap_betti.values(), &[1]);
        assert_eq!(r.union_betti.values(), &[0, 1]);
        assert_eq!(r.connecting_ranks[2], 1);
        assert!(!r.overlap_into_y_surjective() || r.y_betti.is_acyclic());
    }

    #[test]
    fn trivial_split_and_bad_cover() {
        let u = Poset::from_plain_pairs(3, &[(0, 1), (0, 2)]).unwrap();
        let r = mv_rank_audit(&u, &[0, 1, 2], &[], 1000).unwrap();
        assert!(r.exact);
        assert_eq!(
            mv_rank_audit(&u, &[0], &[1], 1000).unwrap_err(),
            HomologyError::NotACover
        );
        assert_eq!(
            mv_rank_audit(&u, &[1], &[0, 2], 1000).unwrap_err(),
            HomologyError::NotACover
        );
    }
}
