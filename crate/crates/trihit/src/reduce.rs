//! Twin merging into weighted instances and neighborhood complexity.

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::geometry::build_graph;
use crate::graph::{is_ktt_free, list_triangles, Graph, KTT_MAX_T};
use crate::random::{random_dir_scene, rng};
use rand::seq::index::sample;
use std::collections::{BTreeMap, BTreeSet};

/// Weighted triangle-hitting instance. Vertex `i` stands for the input
/// vertices `classes[i]`; its weight is their total weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedInstance {
    pub graph: Graph,
    pub weights: Vec<u64>,
    pub budget: u64,
    pub classes: Vec<Vec<usize>>,
}

impl WeightedInstance {
    /// Unit weights, one class per vertex.
    pub fn unit(g: &Graph, budget: u64) -> Self {
        WeightedInstance {
            graph: g.clone(),
            weights: vec![1; g.n()],
            budget,
            classes: (0..g.n()).map(|v| vec![v]).collect(),
        }
    }

    pub fn weight_of(&self, set: &[usize]) -> u64 {
        set.iter().map(|&v| self.weights[v]).sum()
    }

    /// Input vertices of the chosen instance vertices, sorted.
    pub fn lift(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().flat_map(|&v| self.classes[v].iter().copied()).collect();
        out.sort_unstable();
        out
    }
}

/// Merges the vertices outside `M` by their neighborhood in `M`. Every
/// triangle of `g` must have at least two vertices in `M`. Vertices outside
/// `M` without neighbors in `M` are dropped, and edges with both ends
/// outside `M` (which lie on no triangle) are not kept.
pub fn twin_merge(g: &Graph, m: &[usize], weights: &[u64], budget: u64) -> Result<WeightedInstance> {
    if weights.len() != g.n() {
        return Err(Error::InvalidArgument("one weight per vertex required".into()));
    }
    let mut in_m = vec![false; g.n()];
    for &v in m {
        in_m[v] = true;
    }
    for (a, b, c) in list_triangles(g) {
        let outside: Vec<usize> = [a, b, c].into_iter().filter(|&v| !in_m[v]).collect();
        if outside.len() >= 2 {
            return Err(Error::Precondition(format!(
                "triangle ({a},{b},{c}) has two vertices outside M, offending vertex {}",
                outside[0]
            )));
        }
    }
    let mut ids: Vec<usize> = (0..g.n()).filter(|&v| in_m[v]).collect();
    let mut classes: Vec<Vec<usize>> = ids.iter().map(|&v| vec![v]).collect();
    let mut by_trace: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for v in (0..g.n()).filter(|&v| !in_m[v]) {
        let trace: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| in_m[u]).collect();
        if trace.is_empty() {
            continue;
        }
        match by_trace.get(&trace) {
            Some(&i) => classes[i].push(v),
            None => {
                by_trace.insert(trace, classes.len());
                ids.push(v);
                classes.push(vec![v]);
            }
        }
    }
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in ids.iter().enumerate() {
        pos[v] = i;
    }
    let mut edges = Vec::new();
    for (a, b) in g.edges() {
        if (in_m[a] || in_m[b]) && pos[a] != usize::MAX && pos[b] != usize::MAX {
            edges.push((pos[a], pos[b]));
        }
    }
    let graph = Graph::from_edges(ids.len(), &edges)?;
    let weights = classes.iter().map(|c| c.iter().map(|&v| weights[v]).sum()).collect();
    Ok(WeightedInstance { graph, weights, budget, classes })
}

/// Number of distinct sets `N(v) ∩ M` over `v ∉ M`.
pub fn neighborhood_complexity(g: &Graph, m: &[usize]) -> usize {
    let mut in_m = vec![false; g.n()];
    for &v in m {
        in_m[v] = true;
    }
    let traces: BTreeSet<Vec<usize>> = (0..g.n())
        .filter(|&v| !in_m[v])
        .map(|v| g.neighbors(v).iter().copied().filter(|&u| in_m[u]).collect())
        .collect();
    traces.len()
}

/// One scene of a neighborhood-complexity sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub d: usize,
    pub n: usize,
    pub seed: u64,
    /// Smallest `t` with the graph `K_{t,t}`-free.
    pub t: usize,
    pub m_size: usize,
    /// Largest distinct-trace count over the sampled anchor sets of size `m_size`.
    pub distinct: usize,
    pub ratio: f64,
    /// `d t^3 log2 t` with `t` raised to at least 2.
    pub shape: f64,
}

impl SweepRow {
    pub const CSV_HEADER: &'static str = "d,n,seed,t,m,distinct,ratio,shape,ratio_over_shape";

    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{:.4},{:.4},{:.6}",
            self.d,
            self.n,
            self.seed,
            self.t,
            self.m_size,
            self.distinct,
            self.ratio,
            self.shape,
            self.ratio / self.shape
        )
    }
}

/// Random `d`-DIR scenes for every `d` in `ds` and `n` in `ns`, `per_cell`
/// scenes each; anchor sets of size `n/4` are sampled `anchors` times per
/// scene. Scenes containing `K_{t,t}` for every `t <= KTT_MAX_T` are skipped.
pub fn complexity_sweep(seed: u64, ds: &[usize], ns: &[usize], per_cell: usize, anchors: usize, exec: Exec) -> Result<Vec<SweepRow>> {
    let mut jobs = Vec::new();
    for &d in ds {
        for &n in ns {
            for i in 0..per_cell {
                jobs.push((d, n, seed.wrapping_add((d * 1_000_003 + n * 1009 + i) as u64)));
            }
        }
    }
    let rows: Vec<Result<Option<SweepRow>>> = exec.map(&jobs, |&(d, n, s)| {
        let mut r = rng(s);
        let grid = 2 * n as i64;
        let g = build_graph(&random_dir_scene(&mut r, n, d, grid));
        let mut t = None;
        for cand in 1..=KTT_MAX_T {
            if is_ktt_free(&g, cand)? {
                t = Some(cand);
                break;
            }
        }
        let Some(t) = t else { return Ok(None) };
        let m_size = (n / 4).max(1);
        let distinct = (0..anchors.max(1))
            .map(|_| {
                let m: Vec<usize> = sample(&mut r, n, m_size).into_vec();
                neighborhood_complexity(&g, &m)
            })
            .max()
            .unwrap_or(0);
        let tt = t.max(2) as f64;
        Ok(Some(SweepRow { d, n, seed: s, t, m_size, distinct, ratio: distinct as f64 / m_size as f64, shape: d as f64 * tt.powi(3) * tt.log2() }))
    });
    Ok(rows.into_iter().collect::<Result<Vec<_>>>()?.into_iter().flatten().collect())
}
