use std::sync::Arc;

use super::{beat_point_core, BeatCore, Poset, PosetError};

/// A validated order-preserving map between two posets.
#[derive(Clone, Debug)]
pub struct PosetMap {
    source: Arc<Poset>,
    target: Arc<Poset>,
    table: Vec<u32>,
}

impl PosetMap {
    pub fn new(
        source: Arc<Poset>,
        target: Arc<Poset>,
        table: Vec<u32>,
    ) -> Result<Self, PosetError> {
        if table.len() != source.len() || table.iter().any(|&y| y as usize >= target.len()) {
            return Err(PosetError::IndexOutOfRange);
        }
        for (x, y) in source.cover_edges() {
            if !target.le(table[x as usize], table[y as usize]) {
                return Err(PosetError::NotOrderPreserving(x, y));
            }
        }
        Ok(PosetMap {
            source,
            target,
            table,
        })
    }

    pub fn identity(p: Arc<Poset>) -> Self {
        let table = (0..p.len() as u32).collect();
        PosetMap {
            source: p.clone(),
            target: p,
            table,
        }
    }

    /// Inclusion of the subposet on `keep` (sorted) into `p`.
    pub fn inclusion(p: Arc<Poset>, keep: &[u32]) -> Self {
        PosetMap {
            source: Arc::new(p.induced(keep)),
            target: p,
            table: keep.to_vec(),
        }
    }

    pub fn source(&self) -> &Arc<Poset> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Poset> {
        &self.target
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.table[x as usize]
    }

    /// `other` after `self`.
    pub fn then(&self, other: &PosetMap) -> Result<PosetMap, PosetError> {
        if !Arc::ptr_eq(&self.target, &other.source) && *self.target != *other.source {
            return Err(PosetError::IndexOutOfRange);
        }
        Ok(PosetMap {
            source: self.source.clone(),
            target: other.target.clone(),
            table: self
                .table
                .iter()
                .map(|&y| other.table[y as usize])
                .collect(),
        })
    }

    /// The same map between beat-point cores: restrict to the source core and
    /// follow with the target retraction.
    pub fn between_cores(&self) -> (PosetMap, BeatCore, BeatCore) {
        let sc = beat_point_core(&self.source);
        let tc = beat_point_core(&self.target);
        let table = sc
            .kept
            .iter()
            .map(|&x| tc.retraction[self.table[x as usize] as usize])
            .collect();
        let map = PosetMap {
            source: Arc::new(sc.core.clone()),
            target: Arc::new(tc.core.clone()),
            table,
        };
        (map, sc, tc)
    }

    /// Ordinal sum of maps, one per part.
    pub fn join_many(maps: &[&PosetMap]) -> PosetMap {
        let sources: Vec<&Poset> = maps.iter().map(|m| m.source.as_ref()).collect();
        let targets: Vec<&Poset> = maps.iter().map(|m| m.target.as_ref()).collect();
        let offsets = Poset::join_offsets(&targets);
        let mut table = Vec::new();
        for (k, m) in maps.iter().enumerate() {
            table.extend(m.table.iter().map(|&y| y + offsets[k]));
        }
        PosetMap {
            source: Arc::new(Poset::join_many(&sources)),
            target: Arc::new(Poset::join_many(&targets)),
            table,
        }
    }
}
