//! Finite simplicial complexes and order complexes.

use serde::Serialize;

use super::{Poset, PosetError};

/// Default ceiling on the number of simplices of an order complex.
pub const DEFAULT_SIMPLEX_CAP: usize = 50_000_000;

/// A simplicial complex stored per dimension as lexicographically sorted
/// lists of strictly increasing vertex tuples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicialComplex {
    vertices: usize,
    faces: Vec<Vec<u32>>,
}

impl SimplicialComplex {
    pub fn empty(vertices: usize) -> Self {
        SimplicialComplex {
            vertices,
            faces: Vec::new(),
        }
    }

    /// Builds from arbitrary simplices, adding all their faces.
    pub fn from_facets(vertices: usize, facets: &[Vec<u32>]) -> Self {
        let mut by_dim: Vec<std::collections::BTreeSet<Vec<u32>>> = Vec::new();
        for f in facets {
            let mut f = f.clone();
            f.sort_unstable();
            f.dedup();
            if f.is_empty() {
                continue;
            }
            let k = f.len();
            for mask in 1u64..(1u64 << k) {
                let s: Vec<u32> = (0..k)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| f[i])
                    .collect();
                let d = s.len() - 1;
                if by_dim.len() <= d {
                    by_dim.resize_with(d + 1, Default::default);
                }
                by_dim[d].insert(s);
            }
        }
        let faces = by_dim
            .into_iter()
            .map(|set| set.into_iter().flatten().collect())
            .collect();
        SimplicialComplex { vertices, faces }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    /// Top dimension, `-1` when there are no simplices.
    pub fn dim(&self) -> isize {
        self.faces.len() as isize - 1
    }

    pub fn count(&self, d: usize) -> usize {
        self.faces.get(d).map_or(0, |f| f.len() / (d + 1))
    }

    pub fn counts(&self) -> Vec<usize> {
        (0..self.faces.len()).map(|d| self.count(d)).collect()
    }

    pub fn total(&self) -> usize {
        self.counts().iter().sum()
    }

    pub fn simplex(&self, d: usize, i: usize) -> &[u32] {
        &self.faces[d][i * (d + 1)..(i + 1) * (d + 1)]
    }

    pub fn simplices(&self, d: usize) -> impl Iterator<Item = &[u32]> {
        self.faces
            .get(d)
            .map(|f| f.chunks_exact(d + 1))
            .into_iter()
            .flatten()
    }

    /// Position of a sorted simplex, by binary search.
    pub fn index_of(&self, s: &[u32]) -> Option<usize> {
        let d = s.len().checked_sub(1)?;
        let faces = self.faces.get(d)?;
        let n = faces.len() / (d + 1);
        let (mut lo, mut hi) = (0usize, n);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match faces[mid * (d + 1)..(mid + 1) * (d + 1)].cmp(s) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    /// Reduced Euler characteristic `sum (-1)^d f_d - 1`.
    pub fn reduced_euler(&self) -> i64 {
        let mut chi = -1i64;
        for (d, c) in self.counts().into_iter().enumerate() {
            if d % 2 == 0 {
                chi += c as i64;
            } else {
                chi -= c as i64;
            }
        }
        chi
    }

    /// The simplices satisfying `keep`. The caller guarantees face closure.
    pub fn filter(&self, keep: impl Fn(&[u32]) -> bool) -> SimplicialComplex {
        let mut faces: Vec<Vec<u32>> = Vec::new();
        for d in 0..self.faces.len() {
            let kept: Vec<u32> = self
                .simplices(d)
                .filter(|s| keep(s))
                .flatten()
                .copied()
                .collect();
            if kept.is_empty() {
                break;
            }
            faces.push(kept);
        }
        SimplicialComplex {
            vertices: self.vertices,
            faces,
        }
    }

    /// Whether every face of every simplex is present.
    pub fn is_face_closed(&self) -> bool {
        for d in 1..self.faces.len() {
            for s in self.simplices(d) {
                for skip in 0..=d {
                    let face: Vec<u32> = s
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != skip)
                        .map(|(_, &v)| v)
                        .collect();
                    if self.index_of(&face).is_none() {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        (0..self.faces.len()).all(|d| self.simplices(d).all(|s| other.index_of(s).is_some()))
    }
}

/// The complex of nonempty chains of `p`.
pub fn order_complex(p: &Poset, cap: usize) -> Result<SimplicialComplex, PosetError> {
    let mut faces: Vec<Vec<u32>> = Vec::new();
    let mut total = 0usize;
    let mut chain: Vec<u32> = Vec::new();
    fn extend(
        p: &Poset,
        chain: &mut Vec<u32>,
        faces: &mut Vec<Vec<u32>>,
        total: &mut usize,
        cap: usize,
    ) -> Result<(), PosetError> {
        let d = chain.len() - 1;
        if faces.len() <= d {
            faces.push(Vec::new());
        }
        faces[d].extend_from_slice(chain);
        *total += 1;
        if *total > cap {
            return Err(PosetError::SimplexCapExceeded { cap });
        }
        let last = *chain.last().expect("nonempty chain");
        for y in p.up(last).ones() {
            chain.push(y as u32);
            extend(p, chain, faces, total, cap)?;
            chain.pop();
        }
        Ok(())
    }
    for x in 0..p.len() as u32 {
        chain.push(x);
        extend(p, &mut chain, &mut faces, &mut total, cap)?;
        chain.pop();
    }
    Ok(SimplicialComplex {
        vertices: p.len(),
        faces,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chains_of_a_diamond() {
        let p = Poset::from_plain_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let k = order_complex(&p, 100).unwrap();
        assert_eq!(k.counts(), vec![4, 5, 2]);
        assert_eq!(k.reduced_euler(), 0);
        assert!(k.is_face_closed());
        assert_eq!(k.index_of(&[0, 1, 3]), Some(0));
        assert_eq!(k.index_of(&[1, 2]), None);
    }

    #[test]
    fn cap_and_empty() {
        let p = Poset::from_plain_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            order_complex(&p, 5).unwrap_err(),
            PosetError::SimplexCapExceeded { cap: 5 }
        );
        let e = order_complex(&Poset::antichain(0), 5).unwrap();
        assert_eq!(e.dim(), -1);
        assert_eq!(e.reduced_euler(), -1);
    }

    #[test]
    fn facets_generate_faces() {
        let k = SimplicialComplex::from_facets(4, &[vec![2, 0, 1], vec![3]]);
        assert_eq!(k.counts(), vec![4, 3, 1]);
        assert!(k.is_face_closed());
        let sub = k.filter(|s| !s.contains(&3));
        assert!(sub.is_subcomplex_of(&k));
        assert_eq!(sub.counts(), vec![3, 3, 1]);
    }
}
