//! Induced maps in reduced homology and Betti numbers of posets.

use num::{BigRational, ToPrimitive, Zero};
use serde::Serialize;
use serde_json::Value;

use super::basis::{dense_rank, homology_basis, induced_matrix};
use super::chain::{induced_ranks, ChainComplex, ChainMap};
use super::{BettiVector, HomologyError};
use crate::poset::{
    beat_point_core, order_complex, Poset, PosetMap, SimplicialComplex, DEFAULT_SIMPLEX_CAP,
};

/// Default bound on dense matrix cells for explicit homology bases.
pub const DEFAULT_BASIS_CAP: usize = 4_000_000;

#[derive(Clone, Debug)]
pub struct MapOptions {
    /// Replace source and target by their beat-point cores first.
    pub use_cores: bool,
    pub simplex_cap: usize,
    /// Dense cell bound for explicit bases; `0` disables matrices.
    pub basis_cap: usize,
}

impl Default for MapOptions {
    fn default() -> Self {
        MapOptions {
            use_cores: true,
            simplex_cap: DEFAULT_SIMPLEX_CAP,
            basis_cap: DEFAULT_BASIS_CAP,
        }
    }
}

/// `f_*` in one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyMapReport {
    pub degree: isize,
    pub rank: u64,
    pub source_betti: u64,
    pub target_betti: u64,
    pub zero: bool,
    pub nonzero: bool,
    pub injective: bool,
    pub surjective: bool,
    pub bijective: bool,
    /// Sparse `[row, col, numerator, denominator]` entries in the chosen bases.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<[Value; 4]>>,
}

impl HomologyMapReport {
    fn new(degree: isize, rank: u64, source_betti: u64, target_betti: u64) -> Self {
        HomologyMapReport {
            degree,
            rank,
            source_betti,
            target_betti,
            zero: rank == 0,
            nonzero: rank != 0,
            injective: rank == source_betti,
            surjective: rank == target_betti,
            bijective: rank == source_betti && rank == target_betti,
            matrix: None,
        }
    }
}

/// All degrees of `f_*`, plus the homological `n`-equivalence summary.
#[derive(Clone, Debug, Serialize)]
pub struct MapSummary {
    pub source_betti: BettiVector,
    pub target_betti: BettiVector,
    pub reports: Vec<HomologyMapReport>,
    /// Largest `n` with `f_*` bijective below `n` and surjective at `n`;
    /// `None` when `f_*` is bijective in every degree.
    pub n_equivalence: Option<isize>,
    pub n_equivalence_note: &'static str,
    pub used_cores: bool,
    pub explicit_bases: bool,
}

impl MapSummary {
    pub fn degree(&self, d: isize) -> Option<&HomologyMapReport> {
        self.reports.iter().find(|r| r.degree == d)
    }

    pub fn rank(&self, d: isize) -> u64 {
        self.degree(d).map_or(0, |r| r.rank)
    }

    pub fn is_zero(&self) -> bool {
        self.reports.iter().all(|r| r.zero)
    }
}

fn rational_json(x: &BigRational) -> Value {
    let conv = |v: &num::BigInt| match v.to_i64() {
        Some(i) => Value::from(i),
        None => Value::from(v.to_string()),
    };
    Value::Array(vec![conv(x.numer()), conv(x.denom())])
}

fn matrix_triplets(m: &[Vec<BigRational>]) -> Vec<[Value; 4]> {
    let mut out = Vec::new();
    for (i, row) in m.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if !x.is_zero() {
                let pair = rational_json(x);
                out.push([
                    Value::from(i),
                    Value::from(j),
                    pair[0].clone(),
                    pair[1].clone(),
                ]);
            }
        }
    }
    out
}

/// `f_*` for a simplicial vertex map between complexes.
pub fn induced_map_simplicial(
    source: &SimplicialComplex,
    target: &SimplicialComplex,
    vertex_map: &[u32],
    opts: &MapOptions,
) -> Result<MapSummary, HomologyError> {
    let x = ChainComplex::from_simplicial(source);
    let y = ChainComplex::from_simplicial(target);
    let f = ChainMap::from_vertex_map(source, target, vertex_map)?;
    let (bx, by, ranks) = induced_ranks(&x, &y, &f);
    let top = x.top().max(y.top());
    let mut reports: Vec<HomologyMapReport> = (-1..=top)
        .zip(ranks.iter())
        .map(|(d, &r)| HomologyMapReport::new(d, r, bx.get(d), by.get(d)))
        .collect();
    let mut explicit = opts.basis_cap > 0;
    if explicit {
        let mut matrices = Vec::new();
        for d in -1..=top {
            match (
                homology_basis(&x, d, opts.basis_cap),
                homology_basis(&y, d, opts.basis_cap),
            ) {
                (Ok(hx), Ok(hy)) => matrices.push(induced_matrix(&hx, &hy, &f)),
                _ => {
                    explicit = false;
                    break;
                }
            }
        }
        if explicit {
            for (rep, m) in reports.iter_mut().zip(&matrices) {
                assert_eq!(
                    dense_rank(m) as u64,
                    rep.rank,
                    "explicit and cone ranks disagree"
                );
                rep.matrix = Some(matrix_triplets(m));
            }
        }
    }
    let n_equivalence = reports.iter().find(|r| !r.bijective).map(|r| {
        if r.surjective {
            r.degree
        } else {
            r.degree - 1
        }
    });
    let shown_top = bx.top().max(by.top()).max(0);
    let keep_minus_one = bx.minus_one() + by.minus_one() > 0;
    reports.retain(|r| (r.degree >= 0 || keep_minus_one) && r.degree <= shown_top);
    Ok(MapSummary {
        source_betti: bx,
        target_betti: by,
        reports,
        n_equivalence,
        n_equivalence_note:
            "homological: bijective on reduced rational homology below n, surjective at n",
        used_cores: false,
        explicit_bases: explicit,
    })
}

/// `f_*` for an order-preserving map, computed on the order complexes.
pub fn induced_map(f: &PosetMap, opts: &MapOptions) -> Result<MapSummary, HomologyError> {
    let cored;
    let map = if opts.use_cores {
        cored = f.between_cores().0;
        &cored
    } else {
        f
    };
    let kx = order_complex(map.source(), opts.simplex_cap)?;
    let ky = order_complex(map.target(), opts.simplex_cap)?;
    let mut summary = induced_map_simplicial(&kx, &ky, map.table(), opts)?;
    summary.used_cores = opts.use_cores;
    Ok(summary)
}

/// Reduced rational Betti numbers of the order complex of `p`, computed on
/// its beat-point core.
pub fn poset_betti(p: &Poset, simplex_cap: usize) -> Result<BettiVector, HomologyError> {
    let core = beat_point_core(p);
    let k = order_complex(&core.core, simplex_cap)?;
    Ok(ChainComplex::from_simplicial(&k).betti())
}
