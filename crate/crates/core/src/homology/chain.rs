//! Augmented chain complexes, chain maps and mapping cones.

use fixedbitset::FixedBitSet;

use super::sparse::{reduce, SparseMatrix};
use super::{BettiVector, HomologyError};
use crate::poset::SimplicialComplex;

/// An augmented chain complex `C_top -> ... -> C_0 -> C_{-1}`.
///
/// Cell counts and boundaries are indexed by `degree + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    dims: Vec<usize>,
    boundary: Vec<SparseMatrix>,
}

impl ChainComplex {
    /// Builds from cell counts (from degree -1) and boundaries `d_k` for k >= 0.
    pub fn new(dims: Vec<usize>, boundaries: Vec<SparseMatrix>) -> Self {
        assert_eq!(dims.len(), boundaries.len() + 1);
        let mut boundary = vec![SparseMatrix::zero(0, dims.first().copied().unwrap_or(0))];
        for (k, b) in boundaries.into_iter().enumerate() {
            assert_eq!(b.rows, dims[k]);
            assert_eq!(b.ncols(), dims[k + 1]);
            boundary.push(b);
        }
        ChainComplex { dims, boundary }
    }

    /// The augmented simplicial chain complex of `k`, with simplices oriented
    /// by increasing vertex order.
    pub fn from_simplicial(k: &SimplicialComplex) -> Self {
        let counts = k.counts();
        let mut dims = vec![1];
        dims.extend(counts.iter().copied());
        let mut boundaries = Vec::new();
        if !counts.is_empty() {
            boundaries.push(SparseMatrix {
                rows: 1,
                cols: vec![vec![(0, 1)]; counts[0]],
            });
        }
        for d in 1..counts.len() {
            let cols = k
                .simplices(d)
                .map(|s| {
                    let mut col: Vec<(u32, i64)> = (0..=d)
                        .map(|skip| {
                            let face: Vec<u32> = s
                                .iter()
                                .enumerate()
                                .filter(|&(i, _)| i != skip)
                                .map(|(_, &v)| v)
                                .collect();
                            let row = k.index_of(&face).expect("complex is face closed");
                            (row as u32, if skip % 2 == 0 { 1 } else { -1 })
                        })
                        .collect();
                    col.sort_unstable();
                    col
                })
                .collect();
            boundaries.push(SparseMatrix {
                rows: counts[d - 1],
                cols,
            });
        }
        ChainComplex::new(dims, boundaries)
    }

    /// Highest degree carrying a cell slot.
    pub fn top(&self) -> isize {
        self.dims.len() as isize - 2
    }

    /// Number of cells in degree `d` (zero outside the range).
    pub fn dim(&self, d: isize) -> usize {
        if d < -1 {
            return 0;
        }
        self.dims.get((d + 1) as usize).copied().unwrap_or(0)
    }

    /// `d_k : C_k -> C_{k-1}` for `k >= 0`.
    pub fn boundary(&self, k: isize) -> Option<&SparseMatrix> {
        if k < 0 {
            return None;
        }
        self.boundary.get((k + 1) as usize)
    }

    /// Whether every `d_{k-1} d_k` vanishes.
    pub fn boundary_squared_is_zero(&self) -> bool {
        (1..=self.top()).all(|k| {
            let (a, b) = (self.boundary(k - 1).unwrap(), self.boundary(k).unwrap());
            a.mul(b).is_zero()
        })
    }

    /// Ranks of `d_k` for `k = 0..=top`, computed top-down with clearing.
    pub fn boundary_ranks(&self) -> Vec<usize> {
        let top = self.top();
        let mut ranks = vec![0usize; (top + 1).max(0) as usize];
        let mut cleared: Option<FixedBitSet> = None;
        for k in (0..=top).rev() {
            let m = self.boundary(k).unwrap();
            let r = reduce(m, cleared.as_ref());
            ranks[k as usize] = r.rank;
            let mut next = FixedBitSet::with_capacity(m.rows);
            for row in r.pivot_rows {
                next.insert(row as usize);
            }
            cleared = Some(next);
        }
        ranks
    }

    /// Reduced Betti numbers (the homology of the augmented complex).
    pub fn betti(&self) -> BettiVector {
        let ranks = self.boundary_ranks();
        let rank = |k: isize| -> usize {
            if k < 0 {
                0
            } else {
                ranks.get(k as usize).copied().unwrap_or(0)
            }
        };
        let values: Vec<u64> = (-1..=self.top())
            .map(|d| (self.dim(d) - rank(d) - rank(d + 1)) as u64)
            .collect();
        BettiVector::from_degrees(values)
    }

    /// Alternating cell count, equal to the reduced Euler characteristic.
    pub fn euler(&self) -> i64 {
        (-1..=self.top())
            .map(|d| {
                if d.rem_euclid(2) == 0 {
                    self.dim(d) as i64
                } else {
                    -(self.dim(d) as i64)
                }
            })
            .sum()
    }

    /// Direct sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &ChainComplex) -> ChainComplex {
        let top = self.top().max(other.top());
        let dims: Vec<usize> = (-1..=top).map(|d| self.dim(d) + other.dim(d)).collect();
        let boundaries = (0..=top)
            .map(|k| {
                let rows = self.dim(k - 1) + other.dim(k - 1);
                let off = self.dim(k - 1) as u32;
                let mut cols: Vec<Vec<(u32, i64)>> = match self.boundary(k) {
                    Some(b) => b.cols.clone(),
                    None => Vec::new(),
                };
                if let Some(b) = other.boundary(k) {
                    cols.extend(
                        b.cols
                            .iter()
                            .map(|c| c.iter().map(|&(r, v)| (r + off, v)).collect()),
                    );
                }
                SparseMatrix { rows, cols }
            })
            .collect();
        ChainComplex::new(dims, boundaries)
    }
}

/// A chain map between augmented complexes, matrices indexed by `degree + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    maps: Vec<SparseMatrix>,
}

impl ChainMap {
    pub fn new(maps: Vec<SparseMatrix>) -> Self {
        ChainMap { maps }
    }

    /// The map in degree `d`; a zero matrix outside the stored range.
    pub fn at(&self, d: isize) -> Option<&SparseMatrix> {
        if d < -1 {
            return None;
        }
        self.maps.get((d + 1) as usize)
    }

    /// Chain map of a vertex map between simplicial complexes.
    pub fn from_vertex_map(
        source: &SimplicialComplex,
        target: &SimplicialComplex,
        vertex_map: &[u32],
    ) -> Result<Self, HomologyError> {
        let mut maps = vec![SparseMatrix {
            rows: 1,
            cols: vec![vec![(0, 1)]],
        }];
        for d in 0..source.counts().len() {
            let mut cols = Vec::with_capacity(source.count(d));
            for s in source.simplices(d) {
                let mut img: Vec<u32> = s.iter().map(|&v| vertex_map[v as usize]).collect();
                let mut sign = 1i64;
                // insertion sort, tracking the parity
                for i in 1..img.len() {
                    let mut j = i;
                    while j > 0 && img[j - 1] > img[j] {
                        img.swap(j - 1, j);
                        sign = -sign;
                        j -= 1;
                    }
                }
                if img.windows(2).any(|w| w[0] == w[1]) {
                    cols.push(Vec::new());
                    continue;
                }
                let row = target.index_of(&img).ok_or(HomologyError::NotSimplicial)?;
                cols.push(vec![(row as u32, sign)]);
            }
            maps.push(SparseMatrix {
                rows: target.count(d),
                cols,
            });
        }
        Ok(ChainMap { maps })
    }

    /// Whether `f d = d f` in every degree.
    pub fn commutes(&self, source: &ChainComplex, target: &ChainComplex) -> bool {
        (0..=source.top()).all(|k| {
            let f_k = self
                .at(k)
                .cloned()
                .unwrap_or_else(|| SparseMatrix::zero(target.dim(k), source.dim(k)));
            let lhs = self.at(k - 1).unwrap().mul(source.boundary(k).unwrap());
            let rhs = match target.boundary(k) {
                Some(b) => b.mul(&f_k),
                None => SparseMatrix::zero(target.dim(k - 1), source.dim(k)),
            };
            lhs == rhs
        })
    }

    /// `(f, g)` into a direct sum.
    pub fn pair(&self, other: &ChainMap, target_first: &ChainComplex) -> ChainMap {
        let n = self.maps.len().max(other.maps.len());
        let maps = (0..n)
            .map(|i| {
                let d = i as isize - 1;
                let off = target_first.dim(d) as u32;
                let a = self.maps.get(i);
                let b = other.maps.get(i);
                let ncols = a.map_or(0, |m| m.ncols()).max(b.map_or(0, |m| m.ncols()));
                let rows = a.map_or(target_first.dim(d), |m| m.rows) + b.map_or(0, |m| m.rows);
                let cols = (0..ncols)
                    .map(|j| {
                        let mut c: Vec<(u32, i64)> =
                            a.and_then(|m| m.cols.get(j)).cloned().unwrap_or_default();
                        if let Some(col) = b.and_then(|m| m.cols.get(j)) {
                            c.extend(col.iter().map(|&(r, v)| (r + off, v)));
                        }
                        c
                    })
                    .collect();
                SparseMatrix { rows, cols }
            })
            .collect();
        ChainMap { maps }
    }
}

impl ChainMap {
    /// `f - g` out of a direct sum `X ⊕ X'`, or `f + g` when `negate` is false.
    pub fn hstack(&self, other: &ChainMap, negate: bool, first_source: &ChainComplex) -> ChainMap {
        let n = self.maps.len().max(other.maps.len());
        let sign = if negate { -1 } else { 1 };
        let maps = (0..n)
            .map(|i| {
                let d = i as isize - 1;
                let mut cols = match self.maps.get(i) {
                    Some(m) => m.cols.clone(),
                    None => vec![Vec::new(); first_source.dim(d)],
                };
                let mut rows = self.maps.get(i).map_or(0, |m| m.rows);
                if let Some(m) = other.maps.get(i) {
                    rows = rows.max(m.rows);
                    cols.extend(
                        m.cols
                            .iter()
                            .map(|c| c.iter().map(|&(r, v)| (r, sign * v)).collect()),
                    );
                }
                SparseMatrix { rows, cols }
            })
            .collect();
        ChainMap { maps }
    }
}

/// Mapping cone of `f : X -> Y`, with `C_d = Y_d ⊕ X_{d-1}` and
/// `d(y, x) = (d y + f x, -d x)`.
pub fn mapping_cone(x: &ChainComplex, y: &ChainComplex, f: &ChainMap) -> ChainComplex {
    let top = y.top().max(x.top() + 1);
    let dims: Vec<usize> = (-1..=top).map(|d| y.dim(d) + x.dim(d - 1)).collect();
    let boundaries = (0..=top)
        .map(|k| {
            let rows = y.dim(k - 1) + x.dim(k - 2);
            let off = y.dim(k - 1) as u32;
            let mut cols: Vec<Vec<(u32, i64)>> = match y.boundary(k) {
                Some(b) if y.dim(k) > 0 => b.cols.clone(),
                _ => vec![Vec::new(); y.dim(k)],
            };
            for j in 0..x.dim(k - 1) {
                let mut col: Vec<(u32, i64)> = f
                    .at(k - 1)
                    .and_then(|m| m.cols.get(j))
                    .cloned()
                    .unwrap_or_default();
                if let Some(b) = x.boundary(k - 1) {
                    col.extend(b.cols[j].iter().map(|&(r, v)| (r + off, -v)));
                }
                cols.push(col);
            }
            SparseMatrix { rows, cols }
        })
        .collect();
    ChainComplex::new(dims, boundaries)
}

/// Ranks of `f_*` in reduced homology for degrees `-1..=top`, read off the
/// long exact sequence of the mapping cone.
pub fn induced_ranks(
    x: &ChainComplex,
    y: &ChainComplex,
    f: &ChainMap,
) -> (BettiVector, BettiVector, Vec<u64>) {
    let bx = x.betti();
    let by = y.betti();
    let cone = mapping_cone(x, y, f);
    let bc = cone.betti();
    let top = x.top().max(y.top());
    let mut ranks = Vec::new();
    let mut prev = 0i64;
    for d in -1..=top {
        let r = by.get(d) as i64 + bx.get(d - 1) as i64 - prev - bc.get(d) as i64;
        debug_assert!(r >= 0);
        ranks.push(r as u64);
        prev = r;
    }
    (bx, by, ranks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{order_complex, Poset};

    fn complex(n: usize, pairs: &[(u32, u32)]) -> SimplicialComplex {
        order_complex(&Poset::from_plain_pairs(n, pairs).unwrap(), 1000).unwrap()
    }

    #[test]
    fn circle_and_point() {
        let circle = ChainComplex::from_simplicial(&complex(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]));
        assert!(circle.boundary_squared_is_zero());
        assert_eq!(circle.betti().values(), &[0, 1]);
        assert_eq!(circle.euler(), -1);
        let empty = ChainComplex::from_simplicial(&SimplicialComplex::empty(0));
        assert_eq!(empty.betti().minus_one(), 1);
        let two = ChainComplex::from_simplicial(&complex(2, &[]));
        assert_eq!(two.betti().values(), &[1]);
    }

    #[test]
    fn cone_ranks_of_inclusions() {
        // two points into a circle and into an interval
        let circle_k = complex(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]);
        let pts_k = complex(2, &[]);
        let circle = ChainComplex::from_simplicial(&circle_k);
        let pts = ChainComplex::from_simplicial(&pts_k);
        let f = ChainMap::from_vertex_map(&pts_k, &circle_k, &[0, 1]).unwrap();
        assert!(f.commutes(&pts, &circle));
        let (_, _, ranks) = induced_ranks(&pts, &circle, &f);
        assert_eq!(ranks, vec![0, 0, 0]);
        let id = ChainMap::from_vertex_map(&circle_k, &circle_k, &[0, 1, 2, 3]).unwrap();
        let (_, _, ranks) = induced_ranks(&circle, &circle, &id);
        assert_eq!(ranks, vec![0, 0, 1]);
        let empty_k = SimplicialComplex::empty(0);
        let empty = ChainComplex::from_simplicial(&empty_k);
        let e = ChainMap::from_vertex_map(&empty_k, &empty_k, &[]).unwrap();
        let (_, _, ranks) = induced_ranks(&empty, &empty, &e);
        assert_eq!(ranks, vec![1]);
    }

    #[test]
    fn direct_sum_adds_betti() {
        let c = ChainComplex::from_simplicial(&complex(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]));
        let s = c.direct_sum(&c);
        assert!(s.boundary_squared_is_zero());
        assert_eq!(s.betti().values(), &[0, 2]);
    }
}
