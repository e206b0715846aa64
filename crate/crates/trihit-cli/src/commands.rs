use crate::{emit, load_input, load_scene, read, write, Ctx, InputArgs, OracleQuery};
use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use serde_json::json;
use std::path::{Path, PathBuf};
use trihit::gadgets::{crenellate, preprocess_formula, sat_to_2dir, verify_reduction, ReductionOutput};
use trihit::geometry::{build_graph_with, Rational};
use trihit::io::{object_line, parse_cnf, parse_rational, write_cnf, write_graph, write_scene, write_vertex_list};
use trihit::oracle::{brute_matching_size, brute_max_clique, brute_min_hitting_with};
use trihit::pipeline::{solve_pipeline, PipelineConfig};
use trihit::random::{random_2dir_scene, random_3sat, random_contact_scene, random_dir_scene, random_graph, random_squares, rng};
use trihit::treewidth::{exact_decomposition_small, DP_MAX_BAG};
use trihit::ProblemProfile;

fn alpha(s: &str) -> std::result::Result<Rational, String> {
    let a = parse_rational(s, 0).map_err(|_| format!("malformed rational '{s}'"))?;
    if a <= Rational::from_integer(0.into()) || a >= Rational::from_integer(1.into()) {
        return Err("alpha must lie strictly between 0 and 1".into());
    }
    Ok(a)
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long)]
    k: usize,
    /// Exponent of the clique threshold, as `p/q`.
    #[arg(long, default_value = "1/3", value_parser = alpha)]
    alpha: Rational,
    /// th, fvs, pseudoforest or pt.
    #[arg(long, default_value = "th")]
    profile: String,
    /// Path length for `--profile pt`.
    #[arg(long, default_value_t = 3)]
    t: usize,
    /// Largest tree-decomposition width the DP may use.
    #[arg(long, default_value_t = DP_MAX_BAG - 1)]
    width_budget: usize,
    /// Solution file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

pub fn build_graph(ctx: &Ctx, scene: &Path, out: Option<&Path>, map: Option<&Path>) -> Result<u8> {
    let s = load_scene(scene)?;
    let g = build_graph_with(&s, ctx.exec);
    let text = write_graph(&g);
    let map_text: String = (0..s.len()).map(|i| format!("{i}\t{}\n", object_line(&s, i))).collect();
    match out {
        Some(path) => {
            write(path, &text)?;
            let map_path = map.map(Path::to_path_buf).unwrap_or_else(|| {
                let mut p = path.as_os_str().to_owned();
                p.push(".map");
                PathBuf::from(p)
            });
            write(&map_path, &map_text)?;
            emit(ctx, json!({"n": g.n(), "m": g.m(), "graph": path, "map": map_path}), || format!("n {} m {}\n", g.n(), g.m()));
        }
        None => {
            if let Some(map) = map {
                write(map, &map_text)?;
            }
            print!("{text}");
        }
    }
    Ok(0)
}

pub fn solve(ctx: &Ctx, args: &SolveArgs) -> Result<u8> {
    let (g, scene) = load_input(&args.input, ctx.exec)?;
    let profile = ProblemProfile::parse(&args.profile, args.t)?;
    let cfg = PipelineConfig { alpha: args.alpha.clone(), width_budget: args.width_budget, oracle_cap: ctx.oracle_cap, exec: ctx.exec };
    let rep = solve_pipeline(&g, scene.as_ref(), args.k, &profile, &cfg)?;
    ctx.note(format!("p {} instances {} dummy {} max width {}", rep.p, rep.instances, rep.dummy_instances, rep.max_width));
    if let Some(sol) = &rep.solution {
        if !profile.is_solution(&g, sol) || sol.len() > args.k {
            bail!("internal error: solution failed re-verification");
        }
        if let Some(out) = &args.out {
            write(out, &write_vertex_list(sol))?;
        }
    }
    let answer = if rep.solution.is_some() { "yes" } else { "no" };
    emit(
        ctx,
        json!({
            "answer": answer,
            "k": args.k,
            "profile": profile.name(),
            "size": rep.solution.as_ref().map(Vec::len),
            "solution": rep.solution,
            "p": rep.p,
            "instances": rep.instances,
            "dummy_instances": rep.dummy_instances,
            "max_width": rep.max_width,
            "max_merged": rep.max_merged,
            "mu_star_within_bound": rep.mu_star.iter().all(|m| m.within_bound),
        }),
        || match (&rep.solution, &args.out) {
            (Some(sol), None) => write_vertex_list(sol),
            (Some(sol), Some(_)) => format!("yes {}\n", sol.len()),
            (None, _) => "no\n".into(),
        },
    );
    Ok(if rep.solution.is_some() { 0 } else { 1 })
}

fn reduction_json(r: &ReductionOutput) -> serde_json::Value {
    json!({"k": r.k, "k_per_variable": r.k_per_variable(), "segments": r.scene.len()})
}

pub fn gen_sat2dir(ctx: &Ctx, cnf: &Path, out: &Path, t: Option<usize>, verify: bool) -> Result<u8> {
    let f = parse_cnf(&read(cnf)?).with_context(|| format!("parsing {}", cnf.display()))?;
    if verify {
        let (r, rep) = verify_reduction(&f, t)?;
        write(out, &write_scene(&r.scene))?;
        let mut v = reduction_json(&r);
        v["sat"] = json!(rep.sat);
        v["th_at_k"] = json!(rep.th_at_k);
        v["agree"] = json!(rep.agree);
        v["decoded_satisfies"] = json!(rep.decoded_satisfies);
        v["max_degree"] = json!(rep.max_degree);
        v["slopes"] = json!(rep.slopes);
        emit(ctx, v, || {
            format!(
                "k {}\nsegments {}\nsat {}\nth_at_k {}\nagree {}\nmax_degree {}\nslopes {}\n",
                r.k,
                r.scene.len(),
                rep.sat,
                rep.th_at_k,
                rep.agree,
                rep.max_degree,
                rep.slopes
            )
        });
        return Ok(if rep.agree { 0 } else { 1 });
    }
    let pre = preprocess_formula(&f)?;
    let mut r = sat_to_2dir(&pre.formula)?;
    if let Some(t) = t {
        r = crenellate(&r, t)?;
    }
    write(out, &write_scene(&r.scene))?;
    emit(ctx, reduction_json(&r), || {
        let ks: Vec<String> = r.k_per_variable().iter().map(ToString::to_string).collect();
        format!("k {}\nsegments {}\nk_per_variable {}\n", r.k, r.scene.len(), ks.join(" "))
    });
    Ok(0)
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum RandomKind {
    Graph,
    #[value(name = "2dir")]
    TwoDir,
    Dir,
    Squares,
    Contact,
    #[value(name = "3sat")]
    ThreeSat,
}

#[derive(Args, Debug)]
pub struct RandomArgs {
    #[arg(value_enum)]
    kind: RandomKind,
    /// Vertices, objects, or variables for `3sat`.
    #[arg(long)]
    n: usize,
    /// Edge probability for `graph`.
    #[arg(long, default_value_t = 0.3)]
    p: f64,
    /// Number of slopes for `dir`.
    #[arg(long, default_value_t = 3)]
    d: usize,
    /// Coordinate range; defaults to `n / 2`.
    #[arg(long)]
    grid: Option<i64>,
    #[arg(long, default_value_t = 4)]
    max_side: i64,
    /// Clauses for `3sat`.
    #[arg(long, default_value_t = 10)]
    clauses: usize,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

pub fn gen_random(ctx: &Ctx, a: &RandomArgs) -> Result<u8> {
    let mut r = rng(ctx.seed);
    let grid = a.grid.unwrap_or((a.n as i64 / 2).max(2));
    if !(0.0..=1.0).contains(&a.p) {
        bail!("--p must lie in [0, 1]");
    }
    let text = match a.kind {
        RandomKind::Graph => write_graph(&random_graph(&mut r, a.n, a.p)),
        RandomKind::TwoDir => write_scene(&random_2dir_scene(&mut r, a.n, grid)),
        RandomKind::Dir => write_scene(&random_dir_scene(&mut r, a.n, a.d, grid)),
        RandomKind::Squares => write_scene(&random_squares(&mut r, a.n, grid, a.max_side)),
        RandomKind::Contact => write_scene(&random_contact_scene(&mut r, a.n, grid)),
        RandomKind::ThreeSat => {
            if a.n < 3 {
                bail!("3sat needs at least 3 variables");
            }
            write_cnf(&random_3sat(&mut r, a.n, a.clauses))
        }
    };
    match &a.out {
        Some(p) => write(p, &text)?,
        None => print!("{text}"),
    }
    Ok(0)
}

pub fn oracle(ctx: &Ctx, query: OracleQuery, input: &InputArgs, t: usize) -> Result<u8> {
    let (g, _) = load_input(input, ctx.exec)?;
    let cap = ctx.oracle_cap;
    if g.n() > cap {
        return Err(trihit::Error::OracleTooLarge { n: g.n(), cap }.into());
    }
    let hitting = |name: &str| -> Result<(String, serde_json::Value, String)> {
        let profile = ProblemProfile::parse(name, t)?;
        let s = brute_min_hitting_with(&g, &profile, cap, ctx.exec)?;
        let text = format!("{} {}\n{}", profile.name(), s.len(), write_vertex_list(&s));
        Ok((profile.name(), json!({"size": s.len(), "solution": s}), text))
    };
    let (name, value, text) = match query {
        OracleQuery::Th => hitting("th")?,
        OracleQuery::Fvs => hitting("fvs")?,
        OracleQuery::Pseudoforest => hitting("pseudoforest")?,
        OracleQuery::Pt => hitting("pt")?,
        OracleQuery::Matching => {
            let m = brute_matching_size(&g);
            ("matching".into(), json!({"size": m}), format!("matching {m}\n"))
        }
        OracleQuery::Clique => {
            let c = brute_max_clique(&g, cap)?;
            let text = format!("clique {}\n{}", c.len(), write_vertex_list(&c));
            ("clique".into(), json!({"size": c.len(), "clique": c}), text)
        }
        OracleQuery::Treewidth => {
            let mut w = 0;
            while exact_decomposition_small(&g, w)?.is_none() {
                w += 1;
            }
            ("treewidth".into(), json!({"width": w}), format!("treewidth {w}\n"))
        }
    };
    let mut value = value;
    value["query"] = json!(name);
    value["n"] = json!(g.n());
    emit(ctx, value, || text);
    Ok(0)
}
