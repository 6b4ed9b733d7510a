//! Hypothesis checks that end in certificates with exact evidence.

mod local;
mod normal_case;

pub use local::{
    check_prop68, euler_formula, hqc_witness, robinson_certificate, ComplexRoute, EulerReport,
};
pub use normal_case::{
    check_conditions, check_cor51, check_cor52, check_prop_em, check_thm41, check_thm410,
    inapplicable_conditions, ConditionsReport, Cor51Variant,
};

use serde::Serialize;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

use crate::group::{GroupError, PermGroup};
use crate::homology::{HomologyError, MapSummary, DEFAULT_BASIS_CAP};
use crate::poset::{PosetError, DEFAULT_SIMPLEX_CAP};
use crate::quillen::{QuillenError, DEFAULT_SUBGROUP_CAP};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CheckError {
    #[error(transparent)]
    Quillen(#[from] QuillenError),
    #[error("the acting subgroup is not {q}-hyperelementary")]
    NotHyperelementary { q: u64 },
    #[error("variant needs an automorphism group, none supplied")]
    VariantUnavailable,
    #[error("expected {expected} subgroups, got {got}")]
    WrongArity { expected: usize, got: usize },
}

impl From<GroupError> for CheckError {
    fn from(e: GroupError) -> Self {
        CheckError::Quillen(e.into())
    }
}

impl From<HomologyError> for CheckError {
    fn from(e: HomologyError) -> Self {
        CheckError::Quillen(e.into())
    }
}

impl From<PosetError> for CheckError {
    fn from(e: PosetError) -> Self {
        CheckError::Quillen(e.into())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails,
    Inapplicable,
}

/// Outcome of one check.
#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub tag: String,
    pub verdict: Verdict,
    /// The violated precondition, for inapplicable verdicts.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub precondition: Option<String>,
    pub evidence: Map<String, Value>,
    /// Degrees that witnessed the verdict.
    pub degrees: Vec<isize>,
    /// Hypotheses asserted by the caller and not verified.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub assumed: Vec<String>,
    pub digest: String,
}

impl Certificate {
    pub fn new(tag: impl Into<String>, verdict: Verdict, digest: String) -> Self {
        Certificate {
            tag: tag.into(),
            verdict,
            precondition: None,
            evidence: Map::new(),
            degrees: Vec::new(),
            assumed: Vec::new(),
            digest,
        }
    }

    pub fn inapplicable(tag: impl Into<String>, why: impl Into<String>, digest: String) -> Self {
        let mut c = Certificate::new(tag, Verdict::Inapplicable, digest);
        c.precondition = Some(why.into());
        c
    }

    pub fn with(mut self, key: &str, value: impl Serialize) -> Self {
        self.evidence.insert(
            key.to_string(),
            serde_json::to_value(value).expect("serializable evidence"),
        );
        self
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }
}

/// Caps and switches shared by the checks.
#[derive(Clone, Debug)]
pub struct CheckOptions {
    pub subgroup_cap: usize,
    pub simplex_cap: usize,
    /// Dense cell bound for explicit homology bases; `0` keeps ranks only.
    pub basis_cap: usize,
    /// Caller-asserted hypotheses such as `H1` or `HL(p)`.
    pub assumed: Vec<String>,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            subgroup_cap: DEFAULT_SUBGROUP_CAP,
            simplex_cap: DEFAULT_SIMPLEX_CAP,
            basis_cap: 0,
            assumed: Vec::new(),
        }
    }
}

impl CheckOptions {
    pub fn with_matrices(mut self) -> Self {
        self.basis_cap = DEFAULT_BASIS_CAP;
        self
    }

    pub(crate) fn map_options(&self) -> crate::homology::MapOptions {
        crate::homology::MapOptions {
            use_cores: true,
            simplex_cap: self.simplex_cap,
            basis_cap: self.basis_cap,
        }
    }
}

/// SHA-256 over the group's generators, the prime and extra parameters.
pub fn input_digest(group: &PermGroup, p: u64, extra: &str) -> String {
    let mut h = Sha256::new();
    h.update(format!(
        "degree={};order={};p={p};",
        group.degree(),
        group.order()
    ));
    for g in group.generators() {
        h.update(g.to_cycle_string());
        h.update(";");
    }
    h.update(extra);
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

/// Per-degree ranks and Betti numbers of a map, as evidence.
pub(crate) fn map_evidence(s: &MapSummary) -> Value {
    let rows: Vec<Value> = s
        .reports
        .iter()
        .map(|r| {
            serde_json::json!({
                "degree": r.degree,
                "rank": r.rank,
                "source": r.source_betti,
                "target": r.target_betti,
            })
        })
        .collect();
    Value::Array(rows)
}

/// Degrees where the map is not surjective.
pub(crate) fn non_surjective_degrees(s: &MapSummary) -> Vec<isize> {
    s.reports
        .iter()
        .filter(|r| !r.surjective)
        .map(|r| r.degree)
        .collect()
}

pub(crate) fn nonzero_degrees(s: &MapSummary) -> Vec<isize> {
    s.reports
        .iter()
        .filter(|r| r.nonzero)
        .map(|r| r.degree)
        .collect()
}
