//! Arrangement graphs of square scenes and local radius.

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::geometry::{build_graph, hix, is_generic, Rational, Scene};
use crate::graph::Graph;
use crate::profile::UnionFind;
use std::collections::VecDeque;

/// One face of the arrangement, given by a representative grid cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    pub x0: Rational,
    pub y0: Rational,
    pub x1: Rational,
    pub y1: Rational,
    /// Number of grid cells merged into this region.
    pub cells: usize,
}

#[derive(Debug, Clone)]
pub struct ArrangementGraph {
    pub regions: Vec<Region>,
    /// Regions sharing a boundary arc of positive length.
    pub adjacency: Graph,
    /// `membership[v]`: regions contained in square `v`, sorted.
    pub membership: Vec<Vec<usize>>,
}

fn coordinates(values: impl Iterator<Item = Rational>) -> Vec<Rational> {
    let mut v: Vec<Rational> = values.collect();
    v.sort();
    v.dedup();
    v
}

fn index_of(sorted: &[Rational], x: &Rational) -> usize {
    sorted.binary_search(x).expect("coordinate present")
}

/// Exact arrangement of a perturbed square scene over the coordinate grid.
/// Cells with the same covering set that share a grid edge are merged; cells
/// covered by no square are dropped.
pub fn build_square_arrangement(scene: &Scene) -> Result<ArrangementGraph> {
    let squares = scene
        .squares()
        .ok_or_else(|| Error::InvalidArgument("arrangement needs a square scene".into()))?;
    if !is_generic(squares) {
        return Err(Error::Unperturbed("arrangement needs a perturbed scene".into()));
    }
    let n = squares.len();
    let xs = coordinates(squares.iter().flat_map(|s| [s.x.clone(), s.right()]));
    let ys = coordinates(squares.iter().flat_map(|s| [s.y.clone(), s.top()]));
    let (cx, cy) = (xs.len().saturating_sub(1), ys.len().saturating_sub(1));
    let words = n.div_ceil(64).max(1);
    let mut cover = vec![0u64; cx * cy * words];
    for (k, s) in squares.iter().enumerate() {
        let (i0, i1) = (index_of(&xs, &s.x), index_of(&xs, &s.right()));
        let (j0, j1) = (index_of(&ys, &s.y), index_of(&ys, &s.top()));
        for i in i0..i1 {
            for j in j0..j1 {
                cover[(i * cy + j) * words + k / 64] |= 1 << (k % 64);
            }
        }
    }
    let sig = |c: usize| &cover[c * words..(c + 1) * words];
    let covered = |c: usize| sig(c).iter().any(|&w| w != 0);
    let mut uf = UnionFind::new(cx * cy);
    let mut side_pairs = Vec::new();
    for i in 0..cx {
        for j in 0..cy {
            let c = i * cy + j;
            let mut nbrs = Vec::with_capacity(2);
            if i + 1 < cx {
                nbrs.push(c + cy);
            }
            if j + 1 < cy {
                nbrs.push(c + 1);
            }
            for d in nbrs {
                if !covered(c) || !covered(d) {
                    continue;
                }
                if sig(c) == sig(d) {
                    uf.union(c, d);
                } else {
                    side_pairs.push((c, d));
                }
            }
        }
    }
    let mut region_of = vec![usize::MAX; cx * cy];
    let mut root_region = vec![usize::MAX; cx * cy];
    let mut regions = Vec::new();
    #[allow(clippy::needless_range_loop)]
    for c in 0..cx * cy {
        if !covered(c) {
            continue;
        }
        let r = uf.find(c);
        if root_region[r] == usize::MAX {
            root_region[r] = regions.len();
            let (i, j) = (c / cy, c % cy);
            regions.push(Region {
                x0: xs[i].clone(),
                y0: ys[j].clone(),
                x1: xs[i + 1].clone(),
                y1: ys[j + 1].clone(),
                cells: 0,
            });
        }
        region_of[c] = root_region[r];
        regions[root_region[r]].cells += 1;
    }
    let mut edges: Vec<(usize, usize)> = side_pairs
        .into_iter()
        .map(|(c, d)| {
            let (a, b) = (region_of[c], region_of[d]);
            (a.min(b), a.max(b))
        })
        .filter(|(a, b)| a != b)
        .collect();
    edges.sort_unstable();
    edges.dedup();
    let adjacency = Graph::from_edges(regions.len(), &edges)?;
    let mut membership = vec![Vec::new(); n];
    for (r, reg) in regions.iter().enumerate() {
        let (i, j) = (index_of(&xs, &reg.x0), index_of(&ys, &reg.y0));
        let s = sig(i * cy + j);
        for (v, m) in membership.iter_mut().enumerate() {
            if s[v / 64] >> (v % 64) & 1 == 1 {
                m.push(r);
            }
        }
    }
    Ok(ArrangementGraph { regions, adjacency, membership })
}

fn eccentricities(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::with_capacity(n);
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        dist[s] = 0;
        let mut q = VecDeque::from([s]);
        let mut seen = 1;
        let mut ecc = 0;
        while let Some(u) = q.pop_front() {
            ecc = ecc.max(dist[u]);
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    seen += 1;
                    q.push_back(w);
                }
            }
        }
        if seen < n {
            return None;
        }
        out.push(ecc);
    }
    Some(out)
}

/// Radius and diameter of `A_S(v)`.
pub fn radius_diameter(arr: &ArrangementGraph, v: usize) -> Result<(usize, usize)> {
    let regs = arr
        .membership
        .get(v)
        .filter(|m| !m.is_empty())
        .ok_or_else(|| Error::InvalidArgument(format!("vertex {v} has no regions")))?;
    let (sub, _) = arr.adjacency.induced(regs);
    let ecc = eccentricities(&sub).ok_or(Error::DisconnectedRegions(v))?;
    Ok((*ecc.iter().min().unwrap(), *ecc.iter().max().unwrap()))
}

/// `lr_S(v)`: radius of the arrangement graph restricted to the regions of `v`.
pub fn local_radius_vertex(arr: &ArrangementGraph, v: usize) -> Result<usize> {
    radius_diameter(arr, v).map(|(r, _)| r)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LrRow {
    pub vertex: usize,
    /// `|V_S(v)|`.
    pub regions: usize,
    /// `|X(v)|`.
    pub x: usize,
    pub lr: usize,
    pub diameter: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LrStats {
    pub min: usize,
    pub max: usize,
    pub rows: Vec<LrRow>,
}

pub fn local_radius_stats(scene: &Scene) -> Result<LrStats> {
    local_radius_stats_with(scene, Exec::default())
}

pub fn local_radius_stats_with(scene: &Scene, exec: Exec) -> Result<LrStats> {
    let arr = build_square_arrangement(scene)?;
    let g = build_graph(scene);
    let rows: Vec<Result<LrRow>> = exec.map_range(g.n(), |v| {
        let (lr, diameter) = radius_diameter(&arr, v)?;
        Ok(LrRow { vertex: v, regions: arr.membership[v].len(), x: hix(scene, &g, v)?.x.len(), lr, diameter })
    });
    let rows = rows.into_iter().collect::<Result<Vec<_>>>()?;
    let min = rows.iter().map(|r| r.lr).min().unwrap_or(0);
    let max = rows.iter().map(|r| r.lr).max().unwrap_or(0);
    Ok(LrStats { min, max, rows })
}
