//! Explicit homology bases over the rationals, for small complexes.

use num::{BigRational, One, Zero};

use super::chain::{ChainComplex, ChainMap};
use super::sparse::SparseMatrix;
use super::HomologyError;

type Q = BigRational;

fn q(v: i64) -> Q {
    Q::from_integer(v.into())
}

/// Incremental echelon form that remembers each stored vector as a
/// combination of the accepted generators.
#[derive(Clone, Debug, Default)]
struct Echelon {
    rows: Vec<(usize, Vec<Q>, Vec<Q>)>,
    generators: usize,
}

impl Echelon {
    fn residual(&self, v: &[Q]) -> (Vec<Q>, Vec<Q>) {
        let mut r = v.to_vec();
        let mut combo = vec![Q::zero(); self.generators];
        for (pivot, s, c) in &self.rows {
            if r[*pivot].is_zero() {
                continue;
            }
            let a = r[*pivot].clone();
            for (x, y) in r.iter_mut().zip(s) {
                if !y.is_zero() {
                    *x -= &a * y;
                }
            }
            for (x, y) in combo.iter_mut().zip(c) {
                if !y.is_zero() {
                    *x += &a * y;
                }
            }
        }
        (r, combo)
    }

    /// Adds `v` as a generator if independent; returns whether it was.
    fn insert(&mut self, v: &[Q]) -> bool {
        let (r, combo) = self.residual(v);
        let Some(pivot) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = r[pivot].clone();
        let k = self.generators;
        self.generators += 1;
        for (_, _, c) in self.rows.iter_mut() {
            c.push(Q::zero());
        }
        let mut c: Vec<Q> = combo.into_iter().map(|x| -x / &lead).collect();
        c.push(Q::one() / &lead);
        debug_assert_eq!(c.len(), k + 1);
        let s = r.into_iter().map(|x| x / &lead).collect();
        self.rows.push((pivot, s, c));
        true
    }

    /// Coordinates of `v` over the generators, if it lies in their span.
    fn express(&self, v: &[Q]) -> Option<Vec<Q>> {
        let (r, combo) = self.residual(v);
        r.iter().all(|x| x.is_zero()).then_some(combo)
    }
}

fn dense_column(col: &[(u32, i64)], len: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); len];
    for &(r, x) in col {
        v[r as usize] = q(x);
    }
    v
}

/// Null space of a sparse matrix, one vector per free column of its reduced
/// row echelon form.
fn null_space(m: &SparseMatrix) -> Vec<Vec<Q>> {
    let n = m.ncols();
    let mut rows: Vec<Vec<Q>> = vec![vec![Q::zero(); n]; m.rows];
    for (j, col) in m.cols.iter().enumerate() {
        for &(r, x) in col {
            rows[r as usize][j] = q(x);
        }
    }
    let mut pivots = Vec::new();
    let mut rank = 0;
    for j in 0..n {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][j].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let lead = rows[rank][j].clone();
        for x in rows[rank].iter_mut() {
            *x /= &lead;
        }
        let pivot_row = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && !row[j].is_zero() {
                let a = row[j].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &a * y;
                    }
                }
            }
        }
        pivots.push(j);
        rank += 1;
    }
    let mut basis = Vec::new();
    let mut is_pivot = vec![false; n];
    for &j in &pivots {
        is_pivot[j] = true;
    }
    for free in (0..n).filter(|&j| !is_pivot[j]) {
        let mut v = vec![Q::zero(); n];
        v[free] = Q::one();
        for (i, &pj) in pivots.iter().enumerate() {
            v[pj] = -rows[i][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// A basis of reduced homology in one degree: cycle representatives plus a
/// solver expressing any cycle in that basis.
#[derive(Clone, Debug)]
pub struct HomologyBasis {
    degree: isize,
    representatives: Vec<Vec<Q>>,
    boundaries: usize,
    solver: Echelon,
}

impl HomologyBasis {
    pub fn degree(&self) -> isize {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.representatives.len()
    }

    pub fn representatives(&self) -> &[Vec<Q>] {
        &self.representatives
    }

    /// Coordinates of the class of the cycle `z`.
    pub fn coordinates(&self, z: &[Q]) -> Vec<Q> {
        let combo = self.solver.express(z).expect("argument is a cycle");
        combo[self.boundaries..].to_vec()
    }
}

/// Deterministic homology basis of `c` in degree `d`; `cap` bounds the dense
/// matrix sizes.
pub fn homology_basis(
    c: &ChainComplex,
    d: isize,
    cap: usize,
) -> Result<HomologyBasis, HomologyError> {
    let n = c.dim(d);
    let cells = n * (c.dim(d - 1) + c.dim(d + 1)).max(1);
    if cells > cap {
        return Err(HomologyError::MatrixCapExceeded { cells, cap });
    }
    let cycles = match c.boundary(d) {
        Some(b) => null_space(b),
        None => (0..n).map(|i| dense_column(&[(i as u32, 1)], n)).collect(),
    };
    let mut solver = Echelon::default();
    if let Some(b) = c.boundary(d + 1) {
        for col in &b.cols {
            solver.insert(&dense_column(col, n));
        }
    }
    let boundaries = solver.generators;
    let mut representatives = Vec::new();
    for z in cycles {
        if solver.insert(&z) {
            representatives.push(z);
        }
    }
    Ok(HomologyBasis {
        degree: d,
        representatives,
        boundaries,
        solver,
    })
}

/// Matrix of `f_*` in degree `d`, rows indexed by the target basis.
pub fn induced_matrix(source: &HomologyBasis, target: &HomologyBasis, f: &ChainMap) -> Vec<Vec<Q>> {
    let d = source.degree;
    let mut m = vec![vec![Q::zero(); source.rank()]; target.rank()];
    let Some(fd) = f.at(d) else {
        return m;
    };
    for (j, z) in source.representatives.iter().enumerate() {
        let mut image = vec![Q::zero(); fd.rows];
        for (k, x) in z.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for &(r, v) in &fd.cols[k] {
                image[r as usize] += x * q(v);
            }
        }
        for (i, y) in target.coordinates(&image).into_iter().enumerate() {
            m[i][j] = y;
        }
    }
    m
}

/// Rank of a dense rational matrix.
pub fn dense_rank(m: &[Vec<Q>]) -> usize {
    let mut e = Echelon::default();
    let mut rank = 0;
    for row in m {
        if e.insert(row) {
            rank += 1;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{order_complex, Poset};

    #[test]
    fn circle_basis_and_identity() {
        let k = order_complex(
            &Poset::from_plain_pairs(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap(),
            100,
        )
        .unwrap();
        let c = ChainComplex::from_simplicial(&k);
        let h1 = homology_basis(&c, 1, 1 << 20).unwrap();
        assert_eq!(h1.rank(), 1);
        assert_eq!(homology_basis(&c, 0, 1 << 20).unwrap().rank(), 0);
        assert_eq!(homology_basis(&c, -1, 1 << 20).unwrap().rank(), 0);
        let id = ChainMap::from_vertex_map(&k, &k, &[0, 1, 2, 3]).unwrap();
        assert_eq!(induced_matrix(&h1, &h1, &id), vec![vec![Q::one()]]);
        // reflection swapping the two minimal points reverses orientation
        let flip = ChainMap::from_vertex_map(&k, &k, &[1, 0, 2, 3]).unwrap();
        assert_eq!(induced_matrix(&h1, &h1, &flip), vec![vec![-Q::one()]]);
    }

    #[test]
    fn empty_complex_has_minus_one_class() {
        let c = ChainComplex::from_simplicial(&crate::poset::SimplicialComplex::empty(0));
        assert_eq!(homology_basis(&c, -1, 10).unwrap().rank(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        let k = order_complex(&Poset::antichain(50), 100).unwrap();
        let c = ChainComplex::from_simplicial(&k);
        assert!(matches!(
            homology_basis(&c, 0, 10),
            Err(HomologyError::MatrixCapExceeded { .. })
        ));
    }
}
