use super::contact::contact_report;
use super::squares::n_minus;
use super::Scene;
use crate::error::Result;
use crate::exec::Exec;
use crate::graph::{max_matching_size, Graph};

/// Subneighborhood function selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subnbhd {
    /// `N⁻(v)`, square scenes.
    NMinus,
    /// `N*(v)`, contact-segment scenes.
    NStarContact,
}

impl Subnbhd {
    /// The natural choice for a scene kind.
    pub fn for_scene(scene: &Scene) -> Subnbhd {
        match scene {
            Scene::Squares(_) => Subnbhd::NMinus,
            Scene::Segments(_) => Subnbhd::NStarContact,
        }
    }
}

/// The subneighborhood of every vertex.
pub fn subneighborhoods(scene: &Scene, g: &Graph, kind: Subnbhd) -> Result<Vec<Vec<usize>>> {
    match kind {
        Subnbhd::NMinus => (0..g.n()).map(|v| n_minus(scene, g, v)).collect(),
        Subnbhd::NStarContact => {
            let report = contact_report(scene)?;
            Ok((0..g.n()).map(|v| report.n_star(scene, g, v)).collect())
        }
    }
}

/// `counts[u] = |{v : u ∈ sets[v]}|`.
pub fn occurrence_counts(sets: &[Vec<usize>], n: usize) -> Vec<usize> {
    let mut counts = vec![0; n];
    for s in sets {
        for &u in s {
            counts[u] += 1;
        }
    }
    counts
}

pub fn occurrence_bound(scene: &Scene, g: &Graph, kind: Subnbhd) -> Result<usize> {
    let sets = subneighborhoods(scene, g, kind)?;
    Ok(occurrence_counts(&sets, g.n()).into_iter().max().unwrap_or(0))
}

/// `μ*(v)` for every `v`: maximum matching size in `G[sets[v]]`.
pub fn mu_star_values(g: &Graph, sets: &[Vec<usize>], exec: Exec) -> Vec<usize> {
    exec.map(sets, |s| max_matching_size(&g.induced(s).0))
}

/// `μ*(G)`.
pub fn mu_star(g: &Graph, sets: &[Vec<usize>]) -> usize {
    mu_star_values(g, sets, Exec::default()).into_iter().max().unwrap_or(0)
}
