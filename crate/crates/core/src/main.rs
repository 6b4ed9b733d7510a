use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use quillen::checkers::{
    check_conditions, check_cor51, check_cor52, check_prop68, check_prop_em, check_thm41,
    check_thm410, euler_formula, hqc_witness, inapplicable_conditions, input_digest,
    robinson_certificate, CheckOptions, ComplexRoute, Cor51Variant,
};
use quillen::group::{detect_components, BuiltGroup, GroupSpec, PermGroup, Subgroup};
use quillen::homology::poset_betti;
use quillen::poset::{beat_point_core, order_complex, DEFAULT_SIMPLEX_CAP};
use quillen::quillen::{
    ap_poset, bouc_poset, diagonal_ids, image_poset, image_union_over_outers, p_outer_poset,
    ContextReport, DiagonalRule, OrbitContext, SubgroupPoset, DEFAULT_SUBGROUP_CAP,
};
use quillen::reproduce;
use quillen::Perm;

type Error = Box<dyn std::error::Error>;

#[derive(Parser)]
#[command(
    name = "quillen",
    version,
    about = "p-subgroup posets of permutation groups and their homology"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Args, Clone)]
struct Output {
    /// Write the report here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Clone)]
struct Common {
    /// Group file, or the name of a bundled group such as `alt5.spec`.
    #[arg(long)]
    group: String,
    #[arg(long, default_value_t = 2)]
    p: u64,
    #[command(flatten)]
    out: Output,
    #[arg(long)]
    order_cap: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_SUBGROUP_CAP)]
    subgroup_cap: usize,
    #[arg(long, default_value_t = DEFAULT_SIMPLEX_CAP)]
    simplex_cap: usize,
    /// Export induced-map matrices in explicit bases.
    #[arg(long)]
    matrices: bool,
    /// Hypotheses asserted without verification, such as `H1` or `HL(p)`.
    #[arg(long = "assume")]
    assume: Vec<String>,
}

#[derive(Args, Clone)]
struct Orbit {
    /// A component as comma-separated generators; repeat for each component.
    #[arg(long = "component")]
    components: Vec<String>,
    /// Which orbit of components, in canonical order.
    #[arg(long, default_value_t = 0)]
    orbit: usize,
    /// Positions (from 1) of the orbit's components in the desired order.
    #[arg(long, value_delimiter = ',')]
    order: Option<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Rule {
    EqualCentralizers,
    OutsideComponents,
}

impl From<Rule> for DiagonalRule {
    fn from(r: Rule) -> Self {
        match r {
            Rule::EqualCentralizers => DiagonalRule::EqualCentralizers,
            Rule::OutsideComponents => DiagonalRule::OutsideComponents,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Route {
    Quillen,
    Bouc,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Variant {
    Factor,
    ImageH,
    ImageG,
    AutH,
    AutG,
    Aut,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Betti numbers of A_p(G).
    Betti(Common),
    /// Reduced Euler characteristic of the order complex of A_p(G).
    Euler(Common),
    /// The Euler sum over elementary abelian subgroups against a complex.
    EulerFormula {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Route::Bouc)]
        route: Route,
    },
    /// The poset A_p(G).
    Ap {
        #[command(flatten)]
        common: Common,
        /// List every element by generators.
        #[arg(long)]
        list: bool,
    },
    /// Nontrivial radical p-subgroups.
    Bouc(Common),
    /// Image posets of the components of an orbit.
    ImagePoset {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        orbit: Orbit,
    },
    /// p-outers of the components of an orbit.
    Outers {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        orbit: Orbit,
    },
    /// The diagonal poset of the kernel under both rules or one.
    Diagonal {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        orbit: Orbit,
        #[arg(long, value_enum)]
        rule: Option<Rule>,
    },
    /// Conditions (A), (A'), (B), (C), (D), (E).
    Conditions {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        orbit: Orbit,
    },
    /// Nonvanishing of psi_H in homology.
    Thm41 {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        orbit: Orbit,
        /// Restrict to A_p of the product of the components.
        #[arg(long)]
        restrict_to_product: bool,
    },
    /// Non-surjectivity of the diagonal inclusion.
    Thm410 {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        orbit: Orbit,
        #[arg(long, value_enum, default_value_t = Rule::OutsideComponents)]
        rule: Rule,
    },
    /// A_p(L_i) into an image or automizer poset.
    Cor51 {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        orbit: Orbit,
        #[arg(long, value_enum, default_value_t = Variant::Factor)]
        variant: Variant,
        /// Group file of Aut(L), for the `aut` variant.
        #[arg(long)]
        aut: Option<String>,
        /// Generators of L inside the Aut(L) group; defaults to its first component.
        #[arg(long)]
        aut_component: Option<String>,
    },
    /// Clauses (i)-(iii) for subgroups F_1, ..., F_t.
    Cor52 {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        orbit: Orbit,
        /// Generators of F_i, comma separated; repeat in orbit order.
        #[arg(long = "f")]
        fs: Vec<String>,
    },
    /// Properties M(n) and E(n) of the maps phi_i.
    PropEm {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        orbit: Orbit,
        #[arg(long)]
        n: isize,
    },
    /// Outer-centralizer criterion for the first component of an orbit.
    Prop68 {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        orbit: Orbit,
        #[arg(long)]
        k: Option<isize>,
    },
    /// Fixed points of a hyperelementary subgroup on A_p(G).
    Robinson {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        q: u64,
        /// Generators of the acting subgroup; a Sylow q-subgroup by default.
        #[arg(long)]
        acting: Option<String>,
    },
    /// Nonvanishing of the homology of A_p(G) when O_p(G) = 1.
    Hqc(Common),
    /// Every acceptance criterion.
    ReproducePaper {
        #[command(flatten)]
        out: Output,
        /// Run only these criteria.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<u32>>,
    },
}

#[derive(Serialize)]
struct GroupInfo {
    name: String,
    degree: usize,
    order: usize,
    digest: String,
}

#[derive(Serialize)]
struct Report {
    schema: &'static str,
    command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    group: Option<GroupInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    context: Option<ContextReport>,
    result: Value,
}

fn load_group(c: &Common) -> Result<BuiltGroup, Error> {
    let path = std::path::Path::new(&c.group);
    let spec = if path.exists() {
        GroupSpec::load(path)?
    } else if let Some(text) = reproduce::bundled_spec(&c.group) {
        GroupSpec::parse(text)?
    } else {
        return Err(format!("no group file or bundled group named {}", c.group).into());
    };
    Ok(match c.order_cap {
        Some(cap) => spec.build_with_cap(cap)?,
        None => spec.build()?,
    })
}

fn parse_subgroup(g: &PermGroup, gens: &str) -> Result<Subgroup, Error> {
    let perms = gens
        .split(',')
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .map(|s| Perm::parse_cycles(s, g.degree()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(g.generate_perms(&perms)?)
}

fn options(c: &Common) -> CheckOptions {
    let opts = CheckOptions {
        subgroup_cap: c.subgroup_cap,
        simplex_cap: c.simplex_cap,
        basis_cap: 0,
        assumed: c.assume.clone(),
    };
    if c.matrices {
        opts.with_matrices()
    } else {
        opts
    }
}

fn components(built: &BuiltGroup, o: &Orbit) -> Result<Vec<Subgroup>, Error> {
    if !o.components.is_empty() {
        return o
            .components
            .iter()
            .map(|s| parse_subgroup(&built.group, s))
            .collect();
    }
    Ok(match &built.declared_components {
        Some(c) => c.clone(),
        None => detect_components(&built.group)?,
    })
}

fn context(built: BuiltGroup, p: u64, o: &Orbit) -> Result<OrbitContext, Error> {
    let comps = components(&built, o)?;
    let g = Arc::new(built.group);
    let mut all = OrbitContext::all(g.clone(), p, Some(comps))?;
    if o.orbit >= all.len() {
        return Err(format!("orbit {} requested, {} available", o.orbit, all.len()).into());
    }
    let ctx = all.swap_remove(o.orbit);
    match &o.order {
        None => Ok(ctx),
        Some(order) => {
            let t = ctx.t();
            let mut seen = vec![false; t];
            let mut orbit = Vec::with_capacity(t);
            for &i in order {
                if i == 0 || i > t || std::mem::replace(&mut seen[i - 1], true) {
                    return Err(format!("--order must be a permutation of 1..={t}").into());
                }
                orbit.push(ctx.orbit[i - 1].clone());
            }
            if orbit.len() != t {
                return Err(format!("--order must be a permutation of 1..={t}").into());
            }
            Ok(OrbitContext::new(g, p, orbit, true)?)
        }
    }
}

fn cycles(g: &PermGroup, s: &Subgroup) -> Vec<String> {
    s.generators()
        .iter()
        .map(|&x| g.perm(x).to_cycle_string())
        .collect()
}

fn order_counts(ap: &SubgroupPoset) -> Vec<[usize; 2]> {
    let mut out: Vec<[usize; 2]> = Vec::new();
    for s in ap.subgroups() {
        match out.last_mut() {
            Some([o, c]) if *o == s.order() => *c += 1,
            _ => out.push([s.order(), 1]),
        }
    }
    out
}

fn run(command: Command) -> Result<(Report, Output), Error> {
    let mut context_report = None;
    let (name, common, result): (&'static str, Common, Value) = match command {
        Command::ReproducePaper { out, only } => {
            let ids: Vec<u32> =
                only.unwrap_or_else(|| reproduce::CRITERIA.iter().map(|(i, _)| *i).collect());
            let mut outcomes = Vec::new();
            for id in ids {
                let o = reproduce::run_criterion(id);
                eprintln!("criterion {id}: {} ms", o.millis);
                outcomes.push(o);
            }
            let all = outcomes.iter().all(|o| o.passed);
            let result = json!({"all_passed": all, "criteria": outcomes});
            let report = Report {
                schema: SCHEMA,
                command: "reproduce-paper",
                group: None,
                p: None,
                context: None,
                result,
            };
            return Ok((report, out));
        }
        Command::Betti(c) => {
            let g = load_group(&c)?.group;
            let ap = ap_poset(&g, &g.whole(), c.p, c.subgroup_cap)?;
            let b = poset_betti(ap.poset(), c.simplex_cap)?;
            let core = beat_point_core(ap.poset());
            let r = json!({"size": ap.len(), "core_size": core.core.len(), "betti": b, "reduced_euler": b.euler(), "acyclic": b.is_acyclic()});
            ("betti", c, r)
        }
        Command::Euler(c) => {
            let g = load_group(&c)?.group;
            let ap = ap_poset(&g, &g.whole(), c.p, c.subgroup_cap)?;
            let core = beat_point_core(ap.poset());
            let k = order_complex(&core.core, c.simplex_cap)?;
            let r = json!({"size": ap.len(), "core_size": core.core.len(), "core_face_counts": k.counts(), "reduced_euler": k.reduced_euler()});
            ("euler", c, r)
        }
        Command::EulerFormula { common: c, route } => {
            let g = load_group(&c)?.group;
            let route = match route {
                Route::Quillen => ComplexRoute::Quillen,
                Route::Bouc => ComplexRoute::Bouc,
            };
            let r = euler_formula(&g, c.p, route, &options(&c))?;
            ("euler-formula", c, serde_json::to_value(r)?)
        }
        Command::Ap { common: c, list } => {
            let g = load_group(&c)?.group;
            let ap = ap_poset(&g, &g.whole(), c.p, c.subgroup_cap)?;
            let p = ap.poset();
            let mut r = json!({
                "size": ap.len(),
                "order_counts": order_counts(&ap),
                "relations": p.relation_count(),
                "height": p.height(),
                "minimal": p.minimal_elements().len(),
                "maximal": p.maximal_elements().len(),
            });
            if list {
                let elements: Vec<Vec<String>> =
                    ap.subgroups().iter().map(|s| cycles(&g, s)).collect();
                r["elements"] = json!(elements);
            }
            ("ap", c, r)
        }
        Command::Bouc(c) => {
            let g = load_group(&c)?.group;
            let b = bouc_poset(&g, &g.whole(), c.p, c.subgroup_cap)?;
            let k = order_complex(b.poset(), c.simplex_cap)?;
            let betti = poset_betti(b.poset(), c.simplex_cap)?;
            let r = json!({"size": b.len(), "order_counts": order_counts(&b), "dimension": k.dim(), "reduced_euler": k.reduced_euler(), "betti": betti});
            ("bouc", c, r)
        }
        Command::ImagePoset { common: c, orbit } => {
            let ctx = context(load_group(&c)?, c.p, &orbit)?;
            let g = &*ctx.group;
            let mut rows = Vec::new();
            for l in &ctx.orbit {
                let img = image_poset(g, &g.whole(), l, c.p, c.subgroup_cap)?;
                let outers = p_outer_poset(g, &g.whole(), l, c.p, c.subgroup_cap)?;
                let union = image_union_over_outers(g, &img, &outers, c.p, c.subgroup_cap)?;
                let mut direct: Vec<&[u32]> =
                    img.images.subgroups().iter().map(|s| s.members()).collect();
                direct.sort();
                let identity = union.len() == direct.len()
                    && union.iter().zip(&direct).all(|(a, b)| a.as_slice() == *b);
                rows.push(json!({
                    "component_order": l.order(),
                    "automizer_order": img.action.image().order(),
                    "size": img.images.len(),
                    "inner": img.inner.len(),
                    "betti": poset_betti(img.images.poset(), c.simplex_cap)?,
                    "outer_union_identity": identity,
                }));
            }
            context_report = Some(ctx.report());
            ("image-poset", c, json!({ "components": rows }))
        }
        Command::Outers { common: c, orbit } => {
            let ctx = context(load_group(&c)?, c.p, &orbit)?;
            let g = &*ctx.group;
            let mut rows = Vec::new();
            for l in &ctx.orbit {
                let o = p_outer_poset(g, &g.whole(), l, c.p, c.subgroup_cap)?;
                rows.push(json!({
                    "component_order": l.order(),
                    "outers": o.outers.len(),
                    "order_counts": order_counts(&o.outers),
                    "cyclic_only": o.cyclic_only,
                }));
            }
            context_report = Some(ctx.report());
            ("outers", c, json!({ "components": rows }))
        }
        Command::Diagonal {
            common: c,
            orbit,
            rule,
        } => {
            let ctx = context(load_group(&c)?, c.p, &orbit)?;
            let ap_h = ap_poset(&ctx.group, &ctx.kernel, c.p, c.subgroup_cap)?;
            let rules = match rule {
                Some(r) => vec![r],
                None => vec![Rule::OutsideComponents, Rule::EqualCentralizers],
            };
            let mut rows = Vec::new();
            for r in rules {
                let ids = diagonal_ids(&ctx, &ap_h, r.into());
                let b = poset_betti(&ap_h.poset().induced(&ids), c.simplex_cap)?;
                rows.push(json!({"rule": DiagonalRule::from(r), "size": ids.len(), "betti": b}));
            }
            let r = json!({"ap_h_size": ap_h.len(), "ap_h_betti": poset_betti(ap_h.poset(), c.simplex_cap)?, "rules": rows});
            context_report = Some(ctx.report());
            ("diagonal", c, r)
        }
        Command::Conditions { common: c, orbit } => {
            let built = load_group(&c)?;
            let g = &built.group;
            let why = if !g.o_p(&g.whole(), c.p)?.is_trivial() {
                Some("O_p(G) is nontrivial")
            } else if components(&built, &orbit)?.is_empty() {
                Some("G has no components")
            } else {
                None
            };
            if let Some(why) = why {
                let r = inapplicable_conditions(&input_digest(g, c.p, "conditions"), why);
                ("conditions", c, serde_json::to_value(r)?)
            } else {
                let ctx = context(built, c.p, &orbit)?;
                let r = check_conditions(&ctx, &options(&c))?;
                context_report = Some(ctx.report());
                ("conditions", c, serde_json::to_value(r)?)
            }
        }
        Command::Thm41 {
            common: c,
            orbit,
            restrict_to_product,
        } => {
            let ctx = context(load_group(&c)?, c.p, &orbit)?;
            let ids = if restrict_to_product {
                let ap_h = ap_poset(&ctx.group, &ctx.kernel, c.p, c.subgroup_cap)?;
                Some(ap_h.below(&ctx.product))
            } else {
                None
            };
            let r = check_thm41(&ctx, ids.as_deref(), &options(&c))?;
            context_report = Some(ctx.report());
            ("thm41", c, serde_json::to_value(r)?)
        }
        Command::Thm410 {
            common: c,
            orbit,
            rule,
        } => {
            let ctx = context(load_group(&c)?, c.p, &orbit)?;
            let r = check_thm410(&ctx, rule.into(), &options(&c))?;
            context_report = Some(ctx.report());
            ("thm410", c, serde_json::to_value(r)?)
        }
        Command::Cor51 {
            common: c,
            orbit,
            variant,
            aut,
            aut_component,
        } => {
            let ctx = context(load_group(&c)?, c.p, &orbit)?;
            let variant = match variant {
                Variant::Factor => Cor51Variant::Factor,
                Variant::ImageH => Cor51Variant::ImageH,
                Variant::ImageG => Cor51Variant::ImageG,
                Variant::AutH => Cor51Variant::AutH,
                Variant::AutG => Cor51Variant::AutG,
                Variant::Aut => Cor51Variant::Aut,
            };
            let aut_group = match &aut {
                Some(path) => {
                    let spec = Common {
                        group: path.clone(),
                        ..c.clone()
                    };
                    let built = load_group(&spec)?;
                    let l = match &aut_component {
                        Some(gens) => parse_subgroup(&built.group, gens)?,
                        None => components(
                            &built,
                            &Orbit {
                                components: Vec::new(),
                                orbit: 0,
                                order: None,
                            },
                        )?
                        .into_iter()
                        .next()
                        .ok_or("the Aut(L) group has no component")?,
                    };
                    Some((built.group, l))
                }
                None => None,
            };
            let r = check_cor51(
                &ctx,
                variant,
                aut_group.as_ref().map(|(g, l)| (g, l)),
                &options(&c),
            )?;
            context_report = Some(ctx.report());
            ("cor51", c, serde_json::to_value(r)?)
        }
        Command::Cor52 {
            common: c,
            orbit,
            fs,
        } => {
            let ctx = context(load_group(&c)?, c.p, &orbit)?;
            let fs = fs
                .iter()
                .map(|s| parse_subgroup(&ctx.group, s))
                .collect::<Result<Vec<_>, _>>()?;
            let r = check_cor52(&ctx, &fs, &options(&c))?;
            context_report = Some(ctx.report());
            ("cor52", c, serde_json::to_value(r)?)
        }
        Command::PropEm {
            common: c,
            orbit,
            n,
        } => {
            if n < 0 {
                return Err("--n must be nonnegative".into());
            }
            let ctx = context(load_group(&c)?, c.p, &orbit)?;
            let r = check_prop_em(&ctx, n, &options(&c))?;
            context_report = Some(ctx.report());
            ("prop-em", c, json!({ "certificates": r }))
        }
        Command::Prop68 {
            common: c,
            orbit,
            k,
        } => {
            let built = load_group(&c)?;
            let comps = components(&built, &orbit)?;
            let l = comps.first().ok_or("the group has no component")?;
            let r = check_prop68(&built.group, l, c.p, k, &options(&c))?;
            ("prop68", c, serde_json::to_value(r)?)
        }
        Command::Robinson {
            common: c,
            q,
            acting,
        } => {
            let g = load_group(&c)?.group;
            let s = match &acting {
                Some(gens) => parse_subgroup(&g, gens)?,
                None => g.sylow(&g.whole(), q)?,
            };
            let y = ap_poset(&g, &g.whole(), c.p, c.subgroup_cap)?;
            let r = robinson_certificate(&g, &y, &s, q, &options(&c))?;
            ("robinson", c, serde_json::to_value(r)?)
        }
        Command::Hqc(c) => {
            let g = load_group(&c)?.group;
            let r = hqc_witness(&g, c.p, &options(&c))?;
            ("hqc", c, serde_json::to_value(r)?)
        }
    };
    let g = load_group(&common)?.group;
    let group = GroupInfo {
        name: g.name().to_string(),
        degree: g.degree(),
        order: g.order(),
        digest: input_digest(&g, common.p, ""),
    };
    let report = Report {
        schema: SCHEMA,
        command: name,
        group: Some(group),
        p: Some(common.p),
        context: context_report,
        result,
    };
    Ok((report, common.out))
}

const SCHEMA: &str = "quillen-report/1";

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match x {
                    Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(x, indent + 1, out);
                    }
                    Value::Array(items) if items.iter().any(|i| i.is_object() || i.is_array()) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        for i in items {
                            out.push_str(&format!("{pad}  -\n"));
                            render_text(i, indent + 2, out);
                        }
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", scalar(x))),
                }
            }
        }
        Value::Array(items) => {
            for i in items {
                render_text(i, indent, out);
            }
        }
        x => out.push_str(&format!("{pad}{}\n", scalar(x))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!(
            "[{}]",
            items.iter().map(scalar).collect::<Vec<_>>().join(", ")
        ),
        other => other.to_string(),
    }
}

fn emit(report: &Report, out: &Output) -> Result<(), Error> {
    let text = match out.format {
        Format::Structured => serde_json::to_string_pretty(report)? + "\n",
        Format::Text => {
            let mut s = String::new();
            render_text(&serde_json::to_value(report)?, 0, &mut s);
            s
        }
    };
    match &out.output {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    if let Some(n) = std::env::var("QG_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    let cli = Cli::parse();
    let reproduce_all = matches!(cli.command, Command::ReproducePaper { .. });
    match run(cli.command).and_then(|(report, out)| emit(&report, &out).map(|_| report)) {
        Ok(report) => {
            if reproduce_all && report.result["all_passed"] != Value::Bool(true) {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
