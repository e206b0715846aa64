use crate::{emit, load_input, load_scene, read, write, Ctx, InputArgs};
use anyhow::{bail, Result};
use clap::Subcommand;
use serde_json::json;
use std::fmt::Write as _;
use std::path::PathBuf;
use trihit::arrangement::local_radius_stats_with;
use trihit::clique::max_clique;
use trihit::geometry::{
    build_graph_with, contact_max_clique, contact_report, mu_star_values, occurrence_counts, perturb_squares, square_max_clique,
    subneighborhoods, validate_contact, Scene, Subnbhd,
};
use trihit::io::parse_vertex_list;
use trihit::reduce::{complexity_sweep, neighborhood_complexity, SweepRow};

#[derive(Subcommand, Debug)]
pub enum AnalyzeCommand {
    /// Local radius per square: `v |V_S(v)| |X(v)| lr_S(v)`, tab-separated.
    Lr {
        #[arg(long)]
        scene: PathBuf,
    },
    /// Distinct traces `N(v) ∩ M` over `v ∉ M`.
    Ncomplexity {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        m_file: PathBuf,
    },
    /// Maximum clique, using the representation when there is one.
    Clique {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Subneighborhood sizes and occurrence counts.
    Occurrence {
        #[arg(long)]
        scene: PathBuf,
    },
    /// `μ*(v)` per vertex.
    Mustar {
        #[arg(long)]
        scene: PathBuf,
    },
    /// Contact classification per segment: `v |E| |ICP| |NT| |T| μ*`.
    Contact {
        #[arg(long)]
        scene: PathBuf,
    },
    /// Neighborhood complexity of random d-DIR scenes as CSV.
    Sweep {
        #[arg(long, value_delimiter = ',', default_value = "1,2,3,4")]
        d: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "20,40")]
        n: Vec<usize>,
        /// Scenes per (d, n) cell.
        #[arg(long, default_value_t = 5)]
        per_cell: usize,
        /// Anchor sets sampled per scene.
        #[arg(long, default_value_t = 5)]
        anchors: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Square scenes are perturbed first; the graph is unchanged by it.
fn generic(scene: Scene) -> Result<Scene> {
    Ok(match scene {
        s @ Scene::Squares(_) => perturb_squares(&s)?,
        s => s,
    })
}

fn subnbhd_scene(scene: Scene) -> Result<Scene> {
    let s = generic(scene)?;
    if matches!(s, Scene::Segments(_)) && !validate_contact(&s) {
        bail!("subneighborhoods need a square scene or a contact-segment scene");
    }
    Ok(s)
}

pub fn run(ctx: &Ctx, cmd: &AnalyzeCommand) -> Result<u8> {
    match cmd {
        AnalyzeCommand::Lr { scene } => {
            let s = generic(load_scene(scene)?)?;
            let st = local_radius_stats_with(&s, ctx.exec)?;
            let rows: Vec<_> = st.rows.iter().map(|r| json!({"v": r.vertex, "regions": r.regions, "x": r.x, "lr": r.lr, "diameter": r.diameter})).collect();
            emit(ctx, json!({"rows": rows, "min_lr": st.min, "max_lr": st.max}), || {
                let mut out = String::from("v\tregions\tx\tlr\n");
                for r in &st.rows {
                    let _ = writeln!(out, "{}\t{}\t{}\t{}", r.vertex, r.regions, r.x, r.lr);
                }
                let _ = writeln!(out, "aggregate\tmin_lr={}\tmax_lr={}\tn={}", st.min, st.max, st.rows.len());
                out
            });
        }
        AnalyzeCommand::Ncomplexity { input, m_file } => {
            let (g, _) = load_input(input, ctx.exec)?;
            let m = parse_vertex_list(&read(m_file)?)?;
            if let Some(&v) = m.iter().find(|&&v| v >= g.n()) {
                bail!("anchor vertex {v} out of range for {} vertices", g.n());
            }
            let distinct = neighborhood_complexity(&g, &m);
            let ratio = if m.is_empty() { None } else { Some(distinct as f64 / m.len() as f64) };
            emit(ctx, json!({"m": m.len(), "distinct": distinct, "ratio": ratio}), || match ratio {
                Some(r) => format!("m {}\ndistinct {}\nratio {:.4}\n", m.len(), distinct, r),
                None => format!("m 0\ndistinct {distinct}\nratio undefined\n"),
            });
        }
        AnalyzeCommand::Clique { input } => {
            let (g, scene) = load_input(input, ctx.exec)?;
            let (clique, method, maximal) = match scene.map(generic).transpose()? {
                Some(s @ Scene::Squares(_)) => (square_max_clique(&s)?, "point-stabbing", None),
                Some(s) if validate_contact(&s) => {
                    let (c, count) = contact_max_clique(&s, &g)?;
                    (c, "maximal-clique-enumeration", Some(count))
                }
                _ => (max_clique(&g), "exact-search", None),
            };
            emit(ctx, json!({"size": clique.len(), "clique": clique, "method": method, "maximal_cliques": maximal}), || {
                let mut out = format!("clique {} {}\n", clique.len(), method);
                if let Some(c) = maximal {
                    let _ = writeln!(out, "maximal_cliques {c}");
                }
                let ids: Vec<String> = clique.iter().map(ToString::to_string).collect();
                let _ = writeln!(out, "{}", ids.join(" "));
                out
            });
        }
        AnalyzeCommand::Occurrence { scene } => {
            let s = subnbhd_scene(load_scene(scene)?)?;
            let g = build_graph_with(&s, ctx.exec);
            let kind = Subnbhd::for_scene(&s);
            let sets = subneighborhoods(&s, &g, kind)?;
            let counts = occurrence_counts(&sets, g.n());
            let bound = counts.iter().copied().max().unwrap_or(0);
            let rows: Vec<_> = (0..g.n()).map(|v| json!({"v": v, "size": sets[v].len(), "occurrences": counts[v]})).collect();
            emit(ctx, json!({"kind": format!("{kind:?}"), "rows": rows, "occurrence_bound": bound}), || {
                let mut out = String::from("v\tsize\toccurrences\n");
                for v in 0..g.n() {
                    let _ = writeln!(out, "{v}\t{}\t{}", sets[v].len(), counts[v]);
                }
                let _ = writeln!(out, "aggregate\tkind={kind:?}\toccurrence_bound={bound}");
                out
            });
        }
        AnalyzeCommand::Mustar { scene } => {
            let s = subnbhd_scene(load_scene(scene)?)?;
            let g = build_graph_with(&s, ctx.exec);
            let sets = subneighborhoods(&s, &g, Subnbhd::for_scene(&s))?;
            let mu = mu_star_values(&g, &sets, ctx.exec);
            let max = mu.iter().copied().max().unwrap_or(0);
            emit(ctx, json!({"mu_star": mu, "max": max}), || {
                let mut out = String::from("v\tmu_star\n");
                for (v, m) in mu.iter().enumerate() {
                    let _ = writeln!(out, "{v}\t{m}");
                }
                let _ = writeln!(out, "aggregate\tmax={max}");
                out
            });
        }
        AnalyzeCommand::Contact { scene } => {
            let s = load_scene(scene)?;
            let rep = contact_report(&s)?;
            let g = build_graph_with(&s, ctx.exec);
            let sets = subneighborhoods(&s, &g, Subnbhd::NStarContact)?;
            let mu = mu_star_values(&g, &sets, ctx.exec);
            let rows: Vec<_> = rep
                .segments
                .iter()
                .enumerate()
                .map(|(v, c)| json!({"v": v, "e": c.endpoints.len(), "icp": c.icp.len(), "nt": c.nt.len(), "t": c.t.len(), "mu_star": mu[v]}))
                .collect();
            let ok = rep.segments.iter().zip(&mu).all(|(c, &m)| c.nt.len() <= m);
            emit(ctx, json!({"rows": rows, "nt_within_mu_star": ok}), || {
                let mut out = String::from("v\tE\tICP\tNT\tT\tmu_star\n");
                for (v, c) in rep.segments.iter().enumerate() {
                    let _ = writeln!(out, "{v}\t{}\t{}\t{}\t{}\t{}", c.endpoints.len(), c.icp.len(), c.nt.len(), c.t.len(), mu[v]);
                }
                let _ = writeln!(out, "aggregate\tnt_within_mu_star={ok}");
                out
            });
        }
        AnalyzeCommand::Sweep { d, n, per_cell, anchors, out } => {
            let rows = complexity_sweep(ctx.seed, d, n, *per_cell, *anchors, ctx.exec)?;
            let mut csv = format!("{}\n", SweepRow::CSV_HEADER);
            for r in &rows {
                let _ = writeln!(csv, "{}", r.csv());
            }
            match out {
                Some(p) => {
                    write(p, &csv)?;
                    emit(ctx, json!({"rows": rows.len(), "out": p}), || format!("rows {}\n", rows.len()));
                }
                None if ctx.json => {
                    let rows: Vec<_> = rows
                        .iter()
                        .map(|r| json!({"d": r.d, "n": r.n, "seed": r.seed, "t": r.t, "m": r.m_size, "distinct": r.distinct, "ratio": r.ratio, "shape": r.shape}))
                        .collect();
                    emit(ctx, json!({"rows": rows}), String::new);
                }
                None => print!("{csv}"),
            }
        }
    }
    Ok(0)
}
