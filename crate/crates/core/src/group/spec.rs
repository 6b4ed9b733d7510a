//! JSON group specifications.

use serde::{Deserialize, Serialize};

use super::{GroupError, PermGroup, Subgroup, DEFAULT_ORDER_CAP};
use crate::perm::{Perm, Point};

/// How a group is built.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Construction {
    Sym {
        n: usize,
    },
    Alt {
        n: usize,
    },
    /// Dihedral group of the given order `2n`, acting on `n` points.
    Dihedral {
        order: usize,
    },
    Cyclic {
        n: usize,
    },
    Explicit {
        degree: usize,
        generators: Vec<String>,
    },
    /// Factors act on consecutive blocks of points.
    DirectProduct {
        factors: Vec<Construction>,
    },
    /// The base extended by explicit permutations of its points that normalize it.
    SemidirectByPermutingFactors {
        base: Box<Construction>,
        top: Vec<String>,
    },
    SubgroupOf {
        parent: Box<Construction>,
        generators: Vec<String>,
    },
}

/// A group file: a name, a construction (or explicit generators), optional
/// declared components and an optional order cap.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub construction: Option<Construction>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap: Option<usize>,
}

fn parse_all(gens: &[String], degree: usize) -> Result<Vec<Perm>, GroupError> {
    gens.iter().map(|s| Perm::parse_cycles(s, degree)).collect()
}

fn cycle(points: impl Iterator<Item = usize>, degree: usize) -> Perm {
    let pts: Vec<usize> = points.collect();
    let mut images: Vec<Point> = (0..degree as Point).collect();
    for (i, &x) in pts.iter().enumerate() {
        images[x] = pts[(i + 1) % pts.len()] as Point;
    }
    Perm::from_images_unchecked(images)
}

/// Degree and generators described by a construction.
fn generators_of(c: &Construction, cap: usize) -> Result<(usize, Vec<Perm>), GroupError> {
    Ok(match c {
        Construction::Sym { n } => {
            let n = *n;
            let mut gens = Vec::new();
            if n >= 2 {
                gens.push(cycle(0..2, n));
            }
            if n >= 3 {
                gens.push(cycle(0..n, n));
            }
            (n, gens)
        }
        Construction::Alt { n } => {
            let n = *n;
            let gens = (2..n).map(|k| cycle([0, 1, k].into_iter(), n)).collect();
            (n, gens)
        }
        Construction::Dihedral { order } => {
            if *order < 6 || order % 2 != 0 {
                return Err(GroupError::MalformedSpec(format!("dihedral order {order}")));
            }
            let n = order / 2;
            let mut refl: Vec<Point> = Vec::with_capacity(n);
            for x in 0..n {
                refl.push(((n - x) % n) as Point);
            }
            (n, vec![cycle(0..n, n), Perm::from_images_unchecked(refl)])
        }
        Construction::Cyclic { n } => {
            if *n == 0 {
                return Err(GroupError::MalformedSpec("cyclic group of order 0".into()));
            }
            (
                *n,
                if *n >= 2 {
                    vec![cycle(0..*n, *n)]
                } else {
                    Vec::new()
                },
            )
        }
        Construction::Explicit { degree, generators } => (*degree, parse_all(generators, *degree)?),
        Construction::DirectProduct { factors } => {
            let parts = factors
                .iter()
                .map(|f| generators_of(f, cap))
                .collect::<Result<Vec<_>, _>>()?;
            let degree: usize = parts.iter().map(|(d, _)| d).sum();
            let mut gens = Vec::new();
            let mut offset = 0;
            for (d, fg) in parts {
                for g in fg {
                    let mut images: Vec<Point> = (0..degree as Point).collect();
                    for x in 0..d {
                        images[offset + x] = (offset + g.image(x)) as Point;
                    }
                    gens.push(Perm::from_images_unchecked(images));
                }
                offset += d;
            }
            (degree, gens)
        }
        Construction::SemidirectByPermutingFactors { base, top } => {
            let (degree, base_gens) = generators_of(base, cap)?;
            let base_group = PermGroup::new("base", degree, base_gens.clone(), cap)?;
            let top = parse_all(top, degree)?;
            for t in &top {
                let tinv = t.inverse();
                for b in &base_gens {
                    let c = tinv.then(b).then(t);
                    if base_group.lookup(c.images()).is_none() {
                        return Err(GroupError::MalformedSpec(format!(
                            "{t} does not normalize the base group"
                        )));
                    }
                }
            }
            let mut gens = base_gens;
            gens.extend(top);
            (degree, gens)
        }
        Construction::SubgroupOf { parent, generators } => {
            let (degree, parent_gens) = generators_of(parent, cap)?;
            let parent_group = PermGroup::new("parent", degree, parent_gens, cap)?;
            let gens = parse_all(generators, degree)?;
            for g in &gens {
                parent_group.index_of(g)?;
            }
            (degree, gens)
        }
    })
}

pub(crate) fn build_construction(
    c: &Construction,
    cap: usize,
) -> Result<(PermGroup, usize), GroupError> {
    let (degree, gens) = generators_of(c, cap)?;
    let name = match c {
        Construction::Sym { n } => format!("Sym({n})"),
        Construction::Alt { n } => format!("Alt({n})"),
        Construction::Dihedral { order } => format!("Dihedral({order})"),
        Construction::Cyclic { n } => format!("Cyclic({n})"),
        _ => "group".to_string(),
    };
    Ok((PermGroup::new(name, degree, gens, cap)?, degree))
}

/// A built group together with any declared components.
#[derive(Debug)]
pub struct BuiltGroup {
    pub group: PermGroup,
    pub declared_components: Option<Vec<Subgroup>>,
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<Self, GroupError> {
        serde_json::from_str(text).map_err(|e| GroupError::MalformedSpec(e.to_string()))
    }

    pub fn load(path: &std::path::Path) -> Result<Self, GroupError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| GroupError::MalformedSpec(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec serializes")
    }

    fn construction(&self) -> Result<Construction, GroupError> {
        match (&self.construction, self.degree) {
            (Some(c), _) => Ok(c.clone()),
            (None, Some(degree)) => Ok(Construction::Explicit {
                degree,
                generators: self.generators.clone(),
            }),
            (None, None) => Err(GroupError::MalformedSpec(
                "spec needs a construction or a degree with generators".into(),
            )),
        }
    }

    /// Enumerates the group and resolves declared components.
    pub fn build(&self) -> Result<BuiltGroup, GroupError> {
        self.build_with_cap(self.cap.unwrap_or(DEFAULT_ORDER_CAP))
    }

    pub fn build_with_cap(&self, cap: usize) -> Result<BuiltGroup, GroupError> {
        let (degree, gens) = generators_of(&self.construction()?, cap)?;
        let group = PermGroup::new(self.name.clone(), degree, gens, cap)?;
        let declared_components = match &self.components {
            None => None,
            Some(lists) => {
                let mut comps = Vec::new();
                for list in lists {
                    let perms = parse_all(list, degree)?;
                    comps.push(group.generate_perms(&perms)?);
                }
                super::validate_components(&group, &comps)?;
                Some(comps)
            }
        };
        Ok(BuiltGroup {
            group,
            declared_components,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_families() {
        for (c, order) in [
            (Construction::Sym { n: 5 }, 120),
            (Construction::Alt { n: 6 }, 360),
            (Construction::Dihedral { order: 10 }, 10),
            (Construction::Cyclic { n: 7 }, 7),
            (Construction::Sym { n: 1 }, 1),
            (Construction::Alt { n: 3 }, 3),
        ] {
            assert_eq!(
                build_construction(&c, 1000).unwrap().0.order(),
                order,
                "{c:?}"
            );
        }
    }

    #[test]
    fn json_round_trip_and_products() {
        let text = r#"{
            "name": "a5_wr",
            "construction": {
                "kind": "semidirect_by_permuting_factors",
                "base": {"kind": "direct_product", "factors": [{"kind": "alt", "n": 5}, {"kind": "alt", "n": 5}]},
                "top": ["(1 6)(2 7)(3 8)(4 9)(5 10)"]
            }
        }"#;
        let spec = GroupSpec::parse(text).unwrap();
        assert_eq!(GroupSpec::parse(&spec.to_json()).unwrap(), spec);
        assert_eq!(spec.build().unwrap().group.order(), 7200);
    }

    #[test]
    fn explicit_with_components() {
        let text = r#"{"name": "s5", "degree": 5, "generators": ["(1 2)", "(1 2 3 4 5)"],
                       "components": [["(1 2 3)", "(1 2 3 4 5)"]]}"#;
        let built = GroupSpec::parse(text).unwrap().build().unwrap();
        assert_eq!(built.group.order(), 120);
        assert_eq!(built.declared_components.unwrap()[0].order(), 60);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            GroupSpec::parse("{"),
            Err(GroupError::MalformedSpec(_))
        ));
        let bad = r#"{"name": "x", "degree": 3, "generators": ["(1 2)(2 3)"]}"#;
        assert!(matches!(
            GroupSpec::parse(bad).unwrap().build(),
            Err(GroupError::NonPermutationGenerator(_))
        ));
        let not_sub = r#"{"name": "x", "construction": {"kind": "subgroup_of",
            "parent": {"kind": "alt", "n": 4}, "generators": ["(1 2)"]}}"#;
        assert_eq!(
            GroupSpec::parse(not_sub).unwrap().build().unwrap_err(),
            GroupError::SubgroupNotContained
        );
        let capped = r#"{"name": "s7", "construction": {"kind": "sym", "n": 7}, "cap": 1000}"#;
        assert!(matches!(
            GroupSpec::parse(capped).unwrap().build(),
            Err(GroupError::OrderCapExceeded { cap: 1000, .. })
        ));
        let not_normal = r#"{"name": "x", "construction": {"kind": "semidirect_by_permuting_factors",
            "base": {"kind": "explicit", "degree": 3, "generators": ["(1 2)"]}, "top": ["(1 3)"]}}"#;
        assert!(matches!(
            GroupSpec::parse(not_normal).unwrap().build(),
            Err(GroupError::MalformedSpec(_))
        ));
    }
}
