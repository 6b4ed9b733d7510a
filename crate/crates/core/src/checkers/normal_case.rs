//! Checks built on an orbit of components: conditions (A)-(E), the join
//! criterion, properties E(n)/M(n), the diagonal criterion and the two
//! component corollaries.

use std::sync::Arc;

use serde::Serialize;

use super::{
    input_digest, map_evidence, non_surjective_degrees, nonzero_degrees, Certificate, CheckError,
    CheckOptions, Verdict,
};
use crate::group::{elementary_abelian_subgroups, ConjugationAction, PermGroup, Subgroup};
use crate::homology::{induced_map, induced_map_simplicial, poset_betti, BettiVector, MapSummary};
use crate::poset::PosetMap;
use crate::quillen::{
    ap_poset, diagonal_ids, image_poset, Decomposition, DecompositionFlags, DiagonalRule, JoinX,
    OrbitContext, SubgroupPoset,
};

fn digest(ctx: &OrbitContext, extra: &str) -> String {
    input_digest(
        &ctx.group,
        ctx.p,
        &format!("orbit={:?};{extra}", ctx.report().orbit),
    )
}

fn ap_g_betti(ctx: &OrbitContext, opts: &CheckOptions) -> Result<BettiVector, CheckError> {
    let g = &*ctx.group;
    let ap = ap_poset(g, &g.whole(), ctx.p, opts.subgroup_cap)?;
    Ok(poset_betti(ap.poset(), opts.simplex_cap)?)
}

fn op_trivial(ctx: &OrbitContext) -> Result<bool, CheckError> {
    let g = &*ctx.group;
    Ok(g.o_p(&g.whole(), ctx.p)?.is_trivial())
}

/// Certificates for (A), (A′), (B), (C), (D), (E) and their consistency with
/// the homology of `A_p(G)`.
#[derive(Clone, Debug, Serialize)]
pub struct ConditionsReport {
    pub kernel: &'static str,
    pub certificates: Vec<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flags: Option<DecompositionFlags>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ap_g_betti: Option<BettiVector>,
    /// False only if (C), (D), (E) all hold while `A_p(G)` is acyclic.
    pub consistent: bool,
}

const CONDITION_TAGS: [&str; 6] = ["A", "A'", "B", "C", "D", "E"];

fn verdict(b: bool) -> Verdict {
    if b {
        Verdict::Holds
    } else {
        Verdict::Fails
    }
}

fn surjectivity_certificate(tag: &str, s: &MapSummary, digest: String) -> Certificate {
    let degrees = non_surjective_degrees(s);
    let mut c =
        Certificate::new(tag, verdict(!degrees.is_empty()), digest).with("map", map_evidence(s));
    c.degrees = degrees;
    c
}

/// All six conditions marked inapplicable for the stated reason.
pub fn inapplicable_conditions(digest: &str, why: &str) -> ConditionsReport {
    ConditionsReport {
        kernel: "local",
        certificates: CONDITION_TAGS
            .iter()
            .map(|t| Certificate::inapplicable(*t, why, digest.to_string()))
            .collect(),
        flags: None,
        ap_g_betti: None,
        consistent: true,
    }
}

pub fn check_conditions(
    ctx: &OrbitContext,
    opts: &CheckOptions,
) -> Result<ConditionsReport, CheckError> {
    let dg = digest(ctx, "conditions");
    if !op_trivial(ctx)? {
        return Ok(inapplicable_conditions(&dg, "O_p(G) is nontrivial"));
    }
    let mo = opts.map_options();
    let d = Decomposition::build(ctx, opts.subgroup_cap)?;
    let flags = d.flags();
    let a = induced_map(&d.a, &mo)?;
    let ra = induced_map(&d.ra()?, &mo)?;
    let b = induced_map(&d.b, &mo)?;
    let mut certs = vec![
        surjectivity_certificate("A", &a, dg.clone()),
        surjectivity_certificate("A'", &ra, dg.clone()),
        surjectivity_certificate("B", &b, dg.clone()),
    ];

    let jx = JoinX::build(ctx, opts.subgroup_cap)?;
    let c_holds = jx.psi_h_chains_in_k0(&d.v0)?;
    certs.push(
        Certificate::new("C", verdict(c_holds), dg.clone())
            .with("v0_size", d.v0.len())
            .with("factors_present", &jx.present),
    );
    let psi = induced_map(&jx.psi_h()?, &mo)?;
    let mut dc =
        Certificate::new("D", verdict(!psi.is_zero()), dg.clone()).with("map", map_evidence(&psi));
    dc.degrees = nonzero_degrees(&psi);
    certs.push(dc);
    let k = jx.complex(opts.simplex_cap)?;
    let k0 = jx.k0(&k);
    let identity: Vec<u32> = (0..k.vertex_count() as u32).collect();
    let c = induced_map_simplicial(&k0, &k, &identity, &mo)?;
    let kh = jx.summary(opts.simplex_cap)?;
    certs.push(
        Certificate::new("E", verdict(c.is_zero()), dg)
            .with("map", map_evidence(&c))
            .with("k0_simplices", k0.total())
            .with("k_hat0_acyclic", kh.k_hat0_acyclic),
    );
    for cert in certs.iter_mut() {
        cert.evidence
            .insert("trivial_decomposition".into(), flags.trivial.into());
    }
    let betti = poset_betti(d.ap_g.poset(), opts.simplex_cap)?;
    let cde = certs[3].holds() && certs[4].holds() && certs[5].holds();
    Ok(ConditionsReport {
        kernel: "local",
        consistent: !(cde && betti.is_acyclic()),
        certificates: certs,
        flags: Some(flags),
        ap_g_betti: Some(betti),
    })
}

/// `(ψ_H|_B)_* ≠ 0` for the subposet `restrict` of `A_p(H)` (all of it when
/// `None`), with the homology of `A_p(G)` recomputed when it holds.
pub fn check_thm41(
    ctx: &OrbitContext,
    restrict: Option<&[u32]>,
    opts: &CheckOptions,
) -> Result<Certificate, CheckError> {
    let dg = digest(ctx, &format!("thm41;restrict={restrict:?}"));
    if !ctx.p_divides_components() {
        return Ok(Certificate::inapplicable(
            "psi-nonzero",
            "p does not divide the component order",
            dg,
        ));
    }
    let jx = JoinX::build(ctx, opts.subgroup_cap)?;
    let psi = jx.psi_h()?;
    let map = match restrict {
        None => psi,
        Some(ids) => {
            let src = jx.ap_filtration[ctx.t()].poset().induced(ids);
            let table = ids.iter().map(|&x| psi.apply(x)).collect();
            PosetMap::new(Arc::new(src), psi.target().clone(), table)?
        }
    };
    let s = induced_map(&map, &opts.map_options())?;
    let x_betti = poset_betti(&jx.x, opts.simplex_cap)?;
    let mut c = Certificate::new("psi-nonzero", verdict(!s.is_zero()), dg)
        .with("map", map_evidence(&s))
        .with("source_size", map.source().len())
        .with("x_betti", &x_betti)
        .with("factor_sizes", jx.factor_sizes());
    c.degrees = nonzero_degrees(&s);
    if c.holds() {
        let b = ap_g_betti(ctx, opts)?;
        c = c
            .with("ap_g_betti", &b)
            .with("conclusion_nonzero", !b.is_acyclic());
    }
    Ok(c)
}

/// Whether `𝒟_p(H) -> A_p(H)` fails to be surjective in homology.
pub fn check_thm410(
    ctx: &OrbitContext,
    rule: DiagonalRule,
    opts: &CheckOptions,
) -> Result<Certificate, CheckError> {
    let dg = digest(ctx, &format!("thm410;rule={rule:?}"));
    if !ctx.p_divides_components() {
        return Ok(Certificate::inapplicable(
            "diagonal-not-surjective",
            "p does not divide the component order",
            dg,
        ));
    }
    let g = &*ctx.group;
    let ap_h = ap_poset(g, &ctx.kernel, ctx.p, opts.subgroup_cap)?;
    let ids = diagonal_ids(ctx, &ap_h, rule);
    let inc = PosetMap::inclusion(ap_h.poset().clone(), &ids);
    let s = induced_map(&inc, &opts.map_options())?;
    let mut c = surjectivity_certificate("diagonal-not-surjective", &s, dg)
        .with("rule", rule)
        .with("diagonal_size", ids.len())
        .with("ap_h_size", ap_h.len())
        .with("diagonal_betti", &s.source_betti)
        .with("ap_h_betti", &s.target_betti);
    if c.holds() {
        let b = ap_g_betti(ctx, opts)?;
        c = c
            .with("ap_g_betti", &b)
            .with("conclusion_nonzero", !b.is_acyclic());
    }
    Ok(c)
}

fn property_holds(s: &MapSummary, bound: isize, mono: bool) -> bool {
    s.reports.iter().filter(|r| r.degree <= bound).all(|r| {
        if mono {
            r.injective
        } else {
            r.surjective
        }
    })
}

/// Routes M(n) and E(n): each `φ_i` mono (resp. epi) up to degree
/// `n - t + i`, with `b_n(A_p(H))` (resp. `b_n(X)`) nonzero.
pub fn check_prop_em(
    ctx: &OrbitContext,
    n: isize,
    opts: &CheckOptions,
) -> Result<Vec<Certificate>, CheckError> {
    let t = ctx.t() as isize;
    let jx = JoinX::build(ctx, opts.subgroup_cap)?;
    let mo = opts.map_options();
    let phis = (1..=ctx.t())
        .map(|i| induced_map(&jx.phi(i)?, &mo).map_err(CheckError::from))
        .collect::<Result<Vec<_>, _>>()?;
    let bh = poset_betti(jx.ap_filtration[ctx.t()].poset(), opts.simplex_cap)?;
    let bx = poset_betti(&jx.x, opts.simplex_cap)?;
    let mut out = Vec::new();
    for (tag, mono, side) in [("phi-mono", true, &bh), ("phi-epi", false, &bx)] {
        let tag = format!("{tag}({n})");
        let dg = digest(ctx, &tag.to_string());
        if side.get(n) == 0 {
            let what = if mono {
                "b_n(A_p(H)) is zero"
            } else {
                "b_n(X) is zero"
            };
            out.push(Certificate::inapplicable(tag, what, dg).with("betti", side));
            continue;
        }
        let per: Vec<bool> = phis
            .iter()
            .enumerate()
            .map(|(k, s)| property_holds(s, n - t + k as isize + 1, mono))
            .collect();
        let evidence: Vec<_> = phis.iter().map(map_evidence).collect();
        let mut c = Certificate::new(tag, verdict(per.iter().all(|&b| b)), dg)
            .with("per_factor", &per)
            .with("phi_maps", evidence)
            .with("betti", side);
        c.degrees = vec![n];
        if c.holds() {
            let psi = induced_map(&jx.psi_h()?, &mo)?;
            c = c.with("psi_h_rank_at_n", psi.rank(n));
        }
        out.push(c);
    }
    Ok(out)
}

/// Which target poset the corollary compares `A_p(L_i)` with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Cor51Variant {
    /// `A_i`, the image poset of `(C_i(H), L_i)`.
    Factor,
    ImageH,
    ImageG,
    AutH,
    AutG,
    /// `A_p(Aut(L))` for a caller-supplied automorphism group.
    Aut,
}

pub(super) fn image_map(
    g: &PermGroup,
    ambient: &Subgroup,
    l: &Subgroup,
    ap_l: &SubgroupPoset,
    opts: &CheckOptions,
    p: u64,
) -> Result<MapSummary, CheckError> {
    let img = image_poset(g, ambient, l, p, opts.subgroup_cap)?;
    let table = ap_l
        .subgroups()
        .iter()
        .map(|e| {
            img.projection[img.source.find(e).expect("in A_p(N(L))") as usize]
                .expect("injective on L")
        })
        .collect();
    let map = PosetMap::new(ap_l.poset().clone(), img.images.poset().clone(), table)?;
    Ok(induced_map(&map, &opts.map_options())?)
}

fn automizer_map(
    g: &PermGroup,
    ambient: &Subgroup,
    l: &Subgroup,
    ap_l: &SubgroupPoset,
    opts: &CheckOptions,
    p: u64,
) -> Result<MapSummary, CheckError> {
    let norm = g.normalizer(ambient, l)?;
    let action = ConjugationAction::new(g, &norm, l)?;
    let aut = action.image();
    let ap_aut = ap_poset(aut, &aut.whole(), p, opts.subgroup_cap)?;
    let table = ap_l
        .subgroups()
        .iter()
        .map(|e| {
            let img = action.project_subgroup(g, e)?;
            Ok(ap_aut
                .find(&aut.subgroup_from_members(img.members().to_vec()))
                .expect("elementary image"))
        })
        .collect::<Result<Vec<u32>, CheckError>>()?;
    let map = PosetMap::new(ap_l.poset().clone(), ap_aut.poset().clone(), table)?;
    Ok(induced_map(&map, &opts.map_options())?)
}

/// Whether `A_p(L_i) -> A` is nonzero in homology for every component.
/// `aut` is an automorphism group of `L` together with its copy of `L`.
pub fn check_cor51(
    ctx: &OrbitContext,
    variant: Cor51Variant,
    aut: Option<(&PermGroup, &Subgroup)>,
    opts: &CheckOptions,
) -> Result<Certificate, CheckError> {
    let g = &*ctx.group;
    let p = ctx.p;
    let dg = digest(ctx, &format!("cor51;variant={variant:?}"));
    let mut maps = Vec::new();
    if variant == Cor51Variant::Aut {
        let (a, l) = aut.ok_or(CheckError::VariantUnavailable)?;
        if l.order() != ctx.orbit[0].order() {
            return Ok(Certificate::inapplicable(
                "component-map-nonzero",
                "supplied copy of L has the wrong order",
                dg,
            ));
        }
        let ap_l = ap_poset(a, l, p, opts.subgroup_cap)?;
        let ap_a = ap_poset(a, &a.whole(), p, opts.subgroup_cap)?;
        let s = induced_map(&ap_l.inclusion_into(&ap_a)?, &opts.map_options())?;
        maps.extend(std::iter::repeat_n(s, ctx.t()));
    } else {
        for (i, l) in ctx.orbit.iter().enumerate() {
            let ap_l = ap_poset(g, l, p, opts.subgroup_cap)?;
            let s = match variant {
                Cor51Variant::Factor => image_map(g, &ctx.filtration[i + 1], l, &ap_l, opts, p)?,
                Cor51Variant::ImageH => image_map(g, &ctx.kernel, l, &ap_l, opts, p)?,
                Cor51Variant::ImageG => image_map(g, &g.whole(), l, &ap_l, opts, p)?,
                Cor51Variant::AutH => automizer_map(g, &ctx.kernel, l, &ap_l, opts, p)?,
                Cor51Variant::AutG => automizer_map(g, &g.whole(), l, &ap_l, opts, p)?,
                Cor51Variant::Aut => unreachable!(),
            };
            maps.push(s);
        }
    }
    let per: Vec<bool> = maps.iter().map(|s| !s.is_zero()).collect();
    let mut c = Certificate::new("component-map-nonzero", verdict(per.iter().all(|&b| b)), dg)
        .with("variant", variant)
        .with("per_component", &per)
        .with("maps", maps.iter().map(map_evidence).collect::<Vec<_>>());
    c.degrees = maps.first().map(nonzero_degrees).unwrap_or_default();
    c.assumed = opts.assumed.clone();
    Ok(c)
}

/// Clauses (i)-(iii) for subgroups `F_1, ..., F_t`.
pub fn check_cor52(
    ctx: &OrbitContext,
    fs: &[Subgroup],
    opts: &CheckOptions,
) -> Result<Certificate, CheckError> {
    if fs.len() != ctx.t() {
        return Err(CheckError::WrongArity {
            expected: ctx.t(),
            got: fs.len(),
        });
    }
    let g = &*ctx.group;
    let whole = g.whole();
    let p = ctx.p;
    let dg = digest(
        ctx,
        &format!(
            "cor52;{:?}",
            fs.iter()
                .map(|f| f.members().get(1).copied())
                .collect::<Vec<_>>()
        ),
    );
    let mut clause1 = Vec::new();
    let mut clause2 = Vec::new();
    for (l, f) in ctx.orbit.iter().zip(fs) {
        let norm = g.normalizer(&whole, l)?;
        let cent = g.centralizer(&whole, l)?;
        let meet = g.intersection(f, &cent)?;
        let commute = f
            .generators()
            .iter()
            .all(|&x| cent.generators().iter().all(|&y| g.commute(x, y)));
        clause1.push(
            l.is_subset_of(f)
                && f.is_subset_of(&norm)
                && commute
                && !(meet.order() as u64).is_multiple_of(p),
        );
        let fc = g.join(f, &cent)?;
        let in_norm = elementary_abelian_subgroups(g, &norm, p, opts.subgroup_cap)?;
        let in_fc = elementary_abelian_subgroups(g, &fc, p, opts.subgroup_cap)?;
        clause2.push(
            in_norm.len() == in_fc.len()
                && in_norm
                    .iter()
                    .zip(&in_fc)
                    .all(|(a, b)| a.members() == b.members()),
        );
    }
    let mut clause3 = true;
    for (i, a) in fs.iter().enumerate() {
        for b in &fs[i + 1..] {
            clause3 &= a
                .generators()
                .iter()
                .all(|&x| b.generators().iter().all(|&y| g.commute(x, y)));
        }
    }
    let all = clause1.iter().all(|&b| b) && clause2.iter().all(|&b| b) && clause3;
    let mut c = Certificate::new("separated-subgroups", verdict(all), dg)
        .with("clause_i", &clause1)
        .with("clause_ii", &clause2)
        .with("clause_iii", clause3)
        .with("f_orders", fs.iter().map(|f| f.order()).collect::<Vec<_>>());
    c.assumed = opts.assumed.clone();
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Perm;

    fn worked(with_swap: bool) -> (Arc<PermGroup>, Vec<Subgroup>) {
        let mut gens = vec![
            "(1 2 3 4 5)",
            "(1 2 3)",
            "(6 7 8 9 10)",
            "(6 7 8)",
            "(1 2)(6 7)",
        ];
        if with_swap {
            gens.push("(1 6)(2 7)(3 8)(4 9)(5 10)");
        }
        let g = PermGroup::from_cycles("w", 10, &gens).unwrap();
        let l = |a: &str, b: &str| {
            g.generate_perms(&[
                Perm::parse_cycles(a, 10).unwrap(),
                Perm::parse_cycles(b, 10).unwrap(),
            ])
            .unwrap()
        };
        let ls = vec![l("(1 2 3 4 5)", "(1 2 3)"), l("(6 7 8 9 10)", "(6 7 8)")];
        (Arc::new(g), ls)
    }

    fn worked_ctx() -> OrbitContext {
        let (g, ls) = worked(true);
        OrbitContext::new(g, 2, ls, true).unwrap()
    }

    #[test]
    fn conditions_on_worked_example() {
        let r = check_conditions(&worked_ctx(), &CheckOptions::default()).unwrap();
        let by_tag = |t: &str| r.certificates.iter().find(|c| c.tag == t).unwrap();
        assert!(by_tag("C").holds());
        assert!(by_tag("E").holds());
        assert!(by_tag("D").holds());
        assert!(by_tag("D").degrees.contains(&2));
        assert!(r.consistent);
        assert!(!r.ap_g_betti.unwrap().is_acyclic());
    }

    #[test]
    fn thm41_and_diagonal_on_worked_example() {
        let ctx = worked_ctx();
        let opts = CheckOptions::default();
        let ap_h = ap_poset(&ctx.group, &ctx.kernel, 2, 1_000_000).unwrap();
        let ids = ap_h.below(&ctx.product);
        // homology of A_2(L1 L2) sits in degree 1, that of X in degree 2
        let c = check_thm41(&ctx, Some(&ids), &opts).unwrap();
        assert_eq!(c.verdict, Verdict::Fails);
        assert_eq!(c.evidence["map"][1]["source"], 16);
        let c = check_thm41(&ctx, None, &opts).unwrap();
        assert!(c.holds());
        assert_eq!(c.degrees, vec![2]);
        assert_eq!(
            c.evidence["x_betti"],
            serde_json::json!({"minus_one": 0, "values": [0, 0, 64]})
        );
        assert_eq!(c.evidence["conclusion_nonzero"], true);
        let d = check_thm410(&ctx, DiagonalRule::OutsideComponents, &opts).unwrap();
        assert!(d.holds() && d.degrees.contains(&2));
        assert_eq!(
            d.evidence["diagonal_betti"]["values"],
            serde_json::json!([0, 212, 36])
        );
        assert_eq!(
            d.evidence["ap_h_betti"]["values"],
            serde_json::json!([0, 0, 384])
        );
    }

    #[test]
    fn prop_em_routes() {
        let ctx = worked_ctx();
        let certs = check_prop_em(&ctx, 2, &CheckOptions::default()).unwrap();
        assert!(certs[1].holds(), "{:?}", certs[1]);
        assert!(certs[1].evidence["psi_h_rank_at_n"].as_u64().unwrap() > 0);
        let low = check_prop_em(&ctx, 0, &CheckOptions::default()).unwrap();
        assert_eq!(low[1].verdict, Verdict::Inapplicable);
    }

    #[test]
    fn cor51_variants() {
        let ctx = worked_ctx();
        let opts = CheckOptions::default();
        let c = check_cor51(&ctx, Cor51Variant::ImageH, None, &opts).unwrap();
        assert_eq!(c.verdict, Verdict::Fails);
        assert_eq!(
            check_cor51(&ctx, Cor51Variant::Aut, None, &opts).unwrap_err(),
            CheckError::VariantUnavailable
        );
        let a5 = Arc::new(PermGroup::alternating(5).unwrap());
        let simple = OrbitContext::all(a5, 2, None).unwrap().remove(0);
        assert!(check_cor51(&simple, Cor51Variant::ImageG, None, &opts)
            .unwrap()
            .holds());
    }

    #[test]
    fn cor52_cases() {
        let opts = CheckOptions::default();
        let s5s5 = PermGroup::from_cycles(
            "s5xs5",
            10,
            &["(1 2 3 4 5)", "(1 2)", "(6 7 8 9 10)", "(6 7)"],
        )
        .unwrap();
        let g = Arc::new(s5s5);
        let l = |a: &str, b: &str| {
            g.generate_perms(&[
                Perm::parse_cycles(a, 10).unwrap(),
                Perm::parse_cycles(b, 10).unwrap(),
            ])
            .unwrap()
        };
        let ls = vec![l("(1 2 3 4 5)", "(1 2 3)"), l("(6 7 8 9 10)", "(6 7 8)")];
        let fs = [l("(1 2 3 4 5)", "(1 2)"), l("(6 7 8 9 10)", "(6 7)")];
        let ctxs = OrbitContext::all(g.clone(), 2, Some(ls)).unwrap();
        for ctx in &ctxs {
            let i = if ctx.orbit[0].contains(fs[0].generators()[0])
                || ctx.orbit[0].is_subset_of(&fs[0])
            {
                0
            } else {
                1
            };
            assert!(check_cor52(ctx, &fs[i..=i], &opts).unwrap().holds());
        }
        let ctx = worked_ctx();
        let c = check_cor52(&ctx, &ctx.orbit.clone(), &opts).unwrap();
        assert_eq!(c.verdict, Verdict::Fails);
        assert_eq!(c.evidence["clause_ii"], serde_json::json!([false, false]));
        assert_eq!(
            check_cor52(&ctx, &[], &opts).unwrap_err(),
            CheckError::WrongArity {
                expected: 2,
                got: 0
            }
        );
    }
}
