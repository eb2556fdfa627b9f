use std::path::Path;

use rayon::prelude::*;
use serde_json::json;

use sepgraph_core::asdim::{
    asdim_cut, f_h, grid_cover, k_of_m, sep_upper_asdim, GridPatch, GrowthModel,
};
use sepgraph_core::expansion::{
    auto_certify, cheeger_exact, cheeger_spectral_lower, cut_bounds, cut_exact, extract_expander,
    largest_component_after, Budget,
};
use sepgraph_core::families::{
    bits_from_seed, build_family, builtin_cages, builtin_names, distinguish, index_set,
    out_of_range, sparsify_for_girth, ComponentRecord, IndexEncoding, SparsifiedSequence, Verdict,
};
use sepgraph_core::graph::{connected_components, girth, is_forest};
use sepgraph_core::separation::{
    compare_profiles, sep_exact_profile, sep_lower_estimate, PointKind, ProfilePoint, SepHost,
    SeparationProfile, MAX_EXACT_HOST,
};
use sepgraph_core::{Error, Graph, GraphFamily, Result};

use crate::cli::*;
use crate::input::{load_graph, parse_grid, parse_n_list};
use crate::report::{extract_profile, Outcome};

pub fn run(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::ParseCheck(a) => parse_check(a),
        Command::Girth(a) => girth_cmd(a),
        Command::Cheeger(a) => cheeger(a),
        Command::Cut(a) => cut(a),
        Command::ExtractExpander(a) => expander(a),
        Command::Sep(a) => sep(a),
        Command::ProfileCompare(a) => compare(a),
        Command::Family(FamilyCommand::Build(a)) => family_build(a),
        Command::Family(FamilyCommand::Distinguish(a)) => family_distinguish(a),
        Command::AsdimCut(a) => asdim(a),
        Command::SepUpper(a) => sep_upper(a),
    }
}

fn budget(out: &OutputArgs) -> Budget {
    Budget {
        exhaustive_n: out.budget as usize,
        seed: out.seed,
        ..Budget::default()
    }
}

fn parse_check(a: &GraphArgs) -> Result<Outcome> {
    let g = load_graph(&a.input)?;
    let comps = connected_components(&g);
    Outcome::new(json!({
        "vertex_count": g.vertex_count(),
        "edge_count": g.edge_count(),
        "max_degree": g.max_degree(),
        "regular_degree": g.regular_degree(),
        "components": comps.len(),
        "largest_component": comps.iter().map(Vec::len).max().unwrap_or(0),
        "forest": is_forest(&g),
    }))
}

fn girth_cmd(a: &GraphArgs) -> Result<Outcome> {
    let g = load_graph(&a.input)?;
    Ok(Outcome::new(json!({ "girth": girth(&g) }))?.method("girth", "exhaustive"))
}

fn cheeger(a: &CheegerArgs) -> Result<Outcome> {
    let g = load_graph(&a.graph.input)?;
    let limit = a.graph.out.budget as usize;
    let exhaustive = match a.method {
        CheegerMethod::Exhaustive => true,
        CheegerMethod::Spectral => false,
        CheegerMethod::Auto => g.vertex_count() <= limit,
    };
    if exhaustive {
        let r = cheeger_exact(&g, limit)?;
        Ok(Outcome::new(json!({
            "value": sepgraph_core::rational::format(&r.value),
            "bound": "exact",
            "witness": r.witness,
            "budget_used": r.budget_used,
        }))?
        .method("value", "exhaustive"))
    } else {
        let s = cheeger_spectral_lower(&g)?;
        Ok(Outcome::new(json!({
            "value": sepgraph_core::rational::format(&s.value),
            "bound": "lower",
            "degree": s.degree,
            "lambda2": s.lambda2,
            "exact_lambda2": s.exact_lambda2,
        }))?
        .method("value", "spectral"))
    }
}

fn cut(a: &GraphArgs) -> Result<Outcome> {
    let g = load_graph(&a.input)?;
    let b = budget(&a.out);
    if g.vertex_count() <= b.exhaustive_n {
        let r = cut_exact(&g, b.exhaustive_n)?;
        Ok(Outcome::new(json!({
            "value": r.value,
            "bound": "exact",
            "witness": r.witness,
            "largest_component_size": r.largest_component_size,
            "budget_used": r.budget_used,
        }))?
        .method("value", "exhaustive"))
    } else {
        let r = cut_bounds(&g, &b);
        let methods = (
            r.lower_method.clone(),
            format!("{:?}", r.upper_method).to_lowercase(),
        );
        Ok(Outcome::new(json!({
            "lower": r.lower,
            "upper": r.upper,
            "bound": "bracket",
            "cheeger_lower": r.cheeger_lower.map(|x| sepgraph_core::rational::format(&x)),
            "witness": r.witness,
            "budget_used": b.exhaustive_n,
        }))?
        .method("lower", methods.0)
        .method("upper", methods.1))
    }
}

fn expander(a: &GraphArgs) -> Result<Outcome> {
    let g = load_graph(&a.input)?;
    let cert = extract_expander(&g, a.out.budget as usize)?;
    let tag = cert.method.to_string();
    Ok(Outcome::new(json!({
        "subgraph_size": cert.subgraph.len(),
        "vertex_count": g.vertex_count(),
        "certificate": cert,
    }))?
    .method("epsilon", "cut-ratio")
    .method("verified_cheeger", tag))
}

fn load_family(path: &Path) -> Result<GraphFamily> {
    GraphFamily::load_manifest(path)
}

fn union_graph(f: &GraphFamily) -> Graph {
    f.components()
        .iter()
        .fold(Graph::empty(0), |acc, c| acc.disjoint_union(&c.graph))
}

fn sep(a: &SepArgs) -> Result<Outcome> {
    let ns = parse_n_list(&a.n_list)?;
    let b = budget(&a.out);
    let (source, graph, family) = match (&a.input, &a.family) {
        (Some(spec), _) => (spec.clone(), Some(load_graph(spec)?), None),
        (None, Some(path)) => (path.display().to_string(), None, Some(load_family(path)?)),
        (None, None) => return Err(Error::Precondition("sep needs --in or --family".into())),
    };
    let exact_host = match (&graph, &family) {
        (Some(g), _) => g.clone(),
        (None, Some(f)) => union_graph(f),
        _ => unreachable!(),
    };
    let exact = match a.kind {
        SepKind::Exact => true,
        SepKind::Lower => false,
        SepKind::Auto => exact_host.vertex_count() <= MAX_EXACT_HOST,
    };
    let mut profile = SeparationProfile::new(source).with_seed(a.out.seed);
    if exact {
        let max_n = *ns.last().expect("n-list nonempty");
        let all = sep_exact_profile(&exact_host, max_n)?;
        for n in &ns {
            profile.insert(all[*n].clone());
        }
    } else {
        let host = match (&graph, &family) {
            (Some(g), _) => SepHost::Graph(g),
            (None, Some(f)) => SepHost::Family(f),
            _ => unreachable!(),
        };
        let points: Vec<ProfilePoint> = ns
            .par_iter()
            .map(|&n| sep_lower_estimate(host, n, &b))
            .collect();
        for p in points {
            profile.insert(p);
        }
    }
    let csv = profile.to_csv()?;
    Ok(Outcome::new(json!({ "profile": profile }))?
        .method(
            "profile",
            if exact {
                "exhaustive"
            } else {
                "witness-search"
            },
        )
        .with_csv(csv))
}

fn read_profile(path: &Path) -> Result<SeparationProfile> {
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    Ok(serde_json::from_value(extract_profile(doc))?)
}

fn compare(a: &CompareArgs) -> Result<Outcome> {
    let f = read_profile(&a.f)?;
    let g = read_profile(&a.g)?;
    let c = compare_profiles(&f, &g)?;
    let mut w = String::from("n,f,f_kind,g,g_kind,required\n");
    for r in &c.evidence {
        w.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.n, r.f, r.f_kind, r.g, r.g_kind, r.required
        ));
    }
    Ok(
        Outcome::new(json!({ "f": f.source, "g": g.source, "comparison": c }))?
            .method("relation", "sampled-range")
            .with_csv(w),
    )
}

fn encoding(e: Encoding) -> IndexEncoding {
    match e {
        Encoding::Membership => IndexEncoding::Membership,
        Encoding::Prefix => IndexEncoding::PrefixCode,
    }
}

/// The base sequence: the embedded cages, or the records of a manifest,
/// greedily thinned to a girth chain.
fn load_base(base: &str) -> Result<SparsifiedSequence> {
    if base == "cages" {
        return sparsify_for_girth(builtin_cages()?);
    }
    let path = Path::new(base);
    let fam = load_family(path)?;
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    let records = fam
        .components()
        .par_iter()
        .map(|c| {
            let name = match c.name.strip_prefix("builtin:") {
                Some(_) => c.name.clone(),
                None => dir.join(&c.name).display().to_string(),
            };
            let epsilon = match c.epsilon {
                Some(e) => e,
                None => auto_certify(&c.graph)?,
            };
            Ok(ComponentRecord {
                name,
                size: c.size(),
                girth: c.girth,
                epsilon,
                degree: c.max_degree,
                graph: c.graph.clone(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    sparsify_for_girth(records)
}

fn base_summary(base: &SparsifiedSequence) -> serde_json::Value {
    json!({
        "terms": base.records().iter().enumerate().map(|(i, r)| json!({
            "index": i + 1,
            "name": r.name,
            "size": r.size,
            "girth": r.girth,
            "epsilon": sepgraph_core::rational::format(&r.epsilon.value),
            "method": r.epsilon.method,
        })).collect::<Vec<_>>(),
        "size_ratios": base.ratios,
    })
}

fn manifest_source(name: &str) -> String {
    if builtin_names().contains(&name) {
        format!("builtin:{name}")
    } else {
        name.to_string()
    }
}

fn family_build(a: &FamilyBuildArgs) -> Result<Outcome> {
    let base = load_base(&a.base.base)?;
    let bits = match &a.bits {
        Some(b) => b.clone(),
        None => bits_from_seed(a.out.seed, a.base.depth.max(1)),
    };
    let m = index_set(&bits, a.base.depth, encoding(a.base.encoding))?;
    let fam = build_family(&base, &m)?;
    let mut manifest = fam.to_manifest();
    for e in &mut manifest {
        e.source = manifest_source(&e.source);
    }
    if let Some(path) = &a.manifest {
        std::fs::write(path, serde_json::to_string_pretty(&manifest)? + "\n")?;
    }
    Ok(Outcome::new(json!({
        "base": base_summary(&base),
        "index_set": m,
        "dropped": out_of_range(&base, &m),
        "components": manifest,
        "epsilon": fam.epsilon().map(|e| sepgraph_core::rational::format(&e)),
        "max_degree": fam.max_degree(),
        "total_vertices": fam.total_vertices(),
    }))?
    .method("epsilon", "minimum-of-certificates"))
}

fn family_distinguish(a: &DistinguishArgs) -> Result<Outcome> {
    let base = load_base(&a.base.base)?;
    let enc = encoding(a.base.encoding);
    let m = index_set(&a.m_bits, a.base.depth, enc)?;
    let n = index_set(&a.n_bits, a.base.depth, enc)?;
    let r = distinguish(&base, &m, &n, a.c)?;
    let relation = if r.verdict == Verdict::Gap { ">" } else { "<=" };
    let summary = format!("{} {relation} {}", r.lower_at_c, r.upper_at_c);
    let cut_method = r.cut_method.clone();
    let upper_method = r.upper_method.clone();
    Ok(Outcome::new(json!({
        "summary": summary,
        "verdict": r.verdict,
        "lower_at_c": r.lower_at_c,
        "upper_at_c": r.upper_at_c,
        "report": r,
    }))?
    .method("lower_at_c", cut_method)
    .method("upper_at_c", upper_method))
}

fn asdim(a: &AsdimArgs) -> Result<Outcome> {
    let (d, s) = parse_grid(&a.grid)?;
    let patch = GridPatch::cube(d, s)?;
    let n = patch.vertex_count();
    let m = 1usize << d;
    let model = GrowthModel::grid(d);
    let (r, r_source) = if a.r == "auto" {
        let r = f_h(&model, (n / (2 * m)) as u128);
        if r == 0 {
            return Err(Error::Degenerate(format!(
                "f_h(n/2m) = 0 for a side-{s} patch in dimension {d}; the patch is too small"
            )));
        }
        (r, "auto")
    } else {
        let r: usize = a.r.parse().ok().filter(|&r| r >= 1).ok_or_else(|| {
            Error::Precondition(format!(
                "--r expects auto or a positive integer, got {:?}",
                a.r
            ))
        })?;
        (r, "given")
    };
    let cover = grid_cover(&patch, r)?;
    let all = sepgraph_core::SubgraphRef::of_graph((0..n).collect());
    let (res, trace) = asdim_cut(&all, &cover)?;
    let largest = largest_component_after(&cover.host, &res.witness);
    let k = k_of_m(m)?;
    let mut csv = String::from("iteration,n_cur,class,u_size,level,shell_size,largest_after\n");
    for (i, it) in trace.iterations.iter().enumerate() {
        csv.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            i + 1,
            it.n_cur,
            it.class,
            it.u.len(),
            it.level,
            it.shell.len(),
            it.component_sizes.first().copied().unwrap_or(0)
        ));
    }
    Ok(Outcome::new(json!({
        "grid": { "dimension": d, "side": s },
        "n": n,
        "m": m,
        "r": r,
        "r_source": r_source,
        "cut": res,
        "trace": trace,
        "recheck": {
            "largest_component": largest,
            "balanced": 2 * largest <= n,
            "shells_within_pigeonhole": trace.iterations.iter().all(|it| r * it.shell.len() <= it.n_cur),
            "iterations_within_k": trace.iterations.len() <= k,
            "total_within_bound": r * res.value <= k * n,
        },
    }))?
    .method("cut", "cover")
    .with_csv(csv))
}

fn parse_model(text: &str, input: Option<&str>) -> Result<GrowthModel> {
    let bad = || Error::Precondition(format!("unknown growth model {text:?}"));
    let parts: Vec<&str> = text.split(':').collect();
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
    match parts.as_slice() {
        ["grid", d] => Ok(GrowthModel::grid(num(d)?)),
        ["grid", d, c] => Ok(GrowthModel::Grid {
            dim: num(d)?,
            coefficient: num(c)?,
        }),
        ["exp", b] => Ok(GrowthModel::Exponential {
            base: num(b)? as u64,
            coefficient: 1,
        }),
        ["exp", b, c] => Ok(GrowthModel::Exponential {
            base: num(b)? as u64,
            coefficient: num(c)?,
        }),
        ["empirical", rest @ ..] if rest.len() <= 1 => {
            let spec = input
                .ok_or_else(|| Error::Precondition("the empirical model needs --in".into()))?;
            let c = rest.first().map(|c| num(c)).transpose()?.unwrap_or(1);
            GrowthModel::empirical(&load_graph(spec)?, c)
        }
        _ => Err(bad()),
    }
}

fn sep_upper(a: &SepUpperArgs) -> Result<Outcome> {
    let model = parse_model(&a.model, a.input.as_deref())?;
    let ns = parse_n_list(&a.n_list)?;
    let mut profile = SeparationProfile::new(a.model.clone());
    let mut degenerate = Vec::new();
    for n in ns {
        match sep_upper_asdim(&model, a.m, n) {
            Ok(value) => profile.insert(ProfilePoint {
                n,
                value,
                kind: PointKind::Upper,
                witness: None,
                method: "cover-bound".into(),
            }),
            Err(Error::Degenerate(_)) => degenerate.push(n),
            Err(e) => return Err(e),
        }
    }
    let csv = profile.to_csv()?;
    Ok(Outcome::new(json!({
        "model": model,
        "m": a.m,
        "k_of_m": k_of_m(a.m)?,
        "profile": profile,
        "degenerate": degenerate,
    }))?
    .method("profile", "formula")
    .with_csv(csv))
}
