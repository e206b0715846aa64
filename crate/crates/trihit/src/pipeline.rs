//! Branch, merge twins, decompose, solve the leaves.

use crate::branching::{both_branchings, remove_big_mu_star, BranchInstance, CliqueFinder, ContactCliques, ExactCliques, MuStarRemoval, SquareCliques};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::geometry::{frac, perturb_squares, subneighborhoods, validate_contact, Rational, Scene, Subnbhd};
use crate::graph::Graph;
use crate::oracle::{brute_hitting_within, DEFAULT_ORACLE_CAP};
use crate::profile::{LeafSolver, ProblemProfile};
use crate::reduce::twin_merge;
use crate::treewidth::{heuristic_decomposition, weighted_th_dp, DP_MAX_BAG};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone)]
pub struct PipelineConfig {
    /// Exponent of the clique threshold `p = ceil(k^alpha)`, in `(0, 1)`.
    pub alpha: Rational,
    /// Largest decomposition width the DP may use.
    pub width_budget: usize,
    pub oracle_cap: usize,
    pub exec: Exec,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig { alpha: frac(1, 3), width_budget: DP_MAX_BAG - 1, oracle_cap: DEFAULT_ORACLE_CAP, exec: Exec::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineReport {
    /// A verified minimum solution if one of size at most `k` exists.
    pub solution: Option<Vec<usize>>,
    pub p: usize,
    pub instances: usize,
    pub dummy_instances: usize,
    /// Largest decomposition width over the DP leaves.
    pub max_width: usize,
    /// Largest twin-merged graph.
    pub max_merged: usize,
    /// `μ*` removal audit per non-dummy instance, when the scene has a
    /// subneighborhood function.
    pub mu_star: Vec<MuStarRemoval>,
}

/// Smallest `p >= 0` with `p >= k^alpha`, computed exactly.
pub fn ceil_pow(k: usize, alpha: &Rational) -> Result<usize> {
    if alpha.is_negative() || *alpha > Rational::one() {
        return Err(Error::InvalidArgument("alpha must lie in [0, 1]".into()));
    }
    let num = alpha.numer().to_u32().ok_or_else(|| Error::InvalidArgument("alpha numerator too large".into()))?;
    let den = alpha.denom().to_u32().ok_or_else(|| Error::InvalidArgument("alpha denominator too large".into()))?;
    let target = BigInt::from(k).pow(num);
    let mut p = 0usize;
    while BigInt::from(p).pow(den) < target {
        p += 1;
    }
    Ok(p)
}

/// The clique threshold used for budget `k`.
pub fn clique_threshold(k: usize, alpha: &Rational, profile: &ProblemProfile, finder_alpha: usize) -> Result<usize> {
    Ok(ceil_pow(k, alpha)?.max(6 * finder_alpha * profile.c_pi))
}

/// Clique finder matching the scene: point stabbing for squares, maximal
/// clique enumeration for contact segments, exact search otherwise.
pub fn finder_for(scene: Option<&Scene>) -> Result<Box<dyn CliqueFinder>> {
    Ok(match scene {
        Some(s @ Scene::Squares(_)) => Box::new(SquareCliques::new(perturb_squares(s)?)?),
        Some(s) if validate_contact(s) => Box::new(ContactCliques::new(s)?),
        _ => Box::new(ExactCliques),
    })
}

fn restrict_sets(sets: &[Vec<usize>], inst: &BranchInstance, n_orig: usize) -> Vec<Vec<usize>> {
    let mut pos = vec![usize::MAX; n_orig];
    for (i, &v) in inst.map.iter().enumerate() {
        pos[v] = i;
    }
    inst.map
        .iter()
        .map(|&v| {
            let mut s: Vec<usize> = sets[v].iter().filter(|&&u| pos[u] != usize::MAX).map(|&u| pos[u]).collect();
            s.sort_unstable();
            s
        })
        .collect()
}

struct Leaf {
    solution: Option<Vec<usize>>,
    width: usize,
    merged: usize,
}

fn solve_leaf(g: &Graph, inst: &BranchInstance, profile: &ProblemProfile, cfg: &PipelineConfig) -> Result<Leaf> {
    if inst.dummy_no {
        return Ok(Leaf { solution: None, width: 0, merged: 0 });
    }
    let (local, width, merged) = match profile.leaf_solver {
        LeafSolver::TreewidthDp => {
            let w = twin_merge(&inst.graph, &inst.m, &vec![1; inst.graph.n()], inst.k_residual as u64)?;
            let td = heuristic_decomposition(&w.graph);
            if td.width() > cfg.width_budget {
                return Err(Error::WidthOverflow { width: td.width(), budget: cfg.width_budget });
            }
            let found = weighted_th_dp(&w, &td)?;
            (found.map(|(s, _)| w.lift(&s)), td.width(), w.graph.n())
        }
        LeafSolver::BruteForce => (brute_hitting_within(&inst.graph, profile, inst.k_residual, cfg.oracle_cap)?, 0, 0),
    };
    let solution = local.map(|s| {
        let mut full: Vec<usize> = s.iter().map(|&i| inst.map[i]).chain(inst.d_total.iter().copied()).collect();
        full.sort_unstable();
        full.dedup();
        full
    });
    if let Some(s) = &solution {
        if !profile.is_solution(g, s) {
            return Err(Error::Precondition(format!("leaf solution {s:?} fails verification")));
        }
    }
    Ok(Leaf { solution, width, merged })
}

/// Decides whether `g` has a solution of size at most `k` and returns a
/// minimum one. `scene`, when given, must be the representation of `g`.
pub fn solve_pipeline(
    g: &Graph,
    scene: Option<&Scene>,
    k: usize,
    profile: &ProblemProfile,
    cfg: &PipelineConfig,
) -> Result<PipelineReport> {
    if cfg.alpha.is_zero() || cfg.alpha >= Rational::one() || cfg.alpha.is_negative() {
        return Err(Error::InvalidArgument("alpha must lie in (0, 1)".into()));
    }
    if scene.is_some_and(|s| s.len() != g.n()) {
        return Err(Error::InvalidArgument("scene and graph sizes differ".into()));
    }
    let finder = finder_for(scene)?;
    let p = clique_threshold(k, &cfg.alpha, profile, finder.alpha())?;
    let instances = both_branchings(g, k, p, profile, finder.as_ref(), cfg.exec)?;
    let leaves: Vec<Result<Leaf>> = cfg.exec.map(&instances, |inst| solve_leaf(g, inst, profile, cfg));
    let mut best: Option<Vec<usize>> = None;
    let (mut max_width, mut max_merged) = (0, 0);
    for leaf in leaves {
        let leaf = leaf?;
        max_width = max_width.max(leaf.width);
        max_merged = max_merged.max(leaf.merged);
        if let Some(s) = leaf.solution {
            if s.len() <= k && best.as_ref().is_none_or(|b| (s.len(), &s) < (b.len(), b)) {
                best = Some(s);
            }
        }
    }
    let mut mu_star = Vec::new();
    if let Some(sets) = scene_subneighborhoods(scene, g) {
        for inst in instances.iter().filter(|i| !i.dummy_no) {
            let local = restrict_sets(&sets, inst, g.n());
            mu_star.push(remove_big_mu_star(&inst.graph, &inst.m, &local, p, profile, cfg.exec)?);
        }
    }
    Ok(PipelineReport {
        solution: best,
        p,
        instances: instances.len(),
        dummy_instances: instances.iter().filter(|i| i.dummy_no).count(),
        max_width,
        max_merged,
        mu_star,
    })
}

/// Subneighborhoods for square scenes (after perturbation) and contact
/// segment scenes; `None` for other inputs.
fn scene_subneighborhoods(scene: Option<&Scene>, g: &Graph) -> Option<Vec<Vec<usize>>> {
    let scene = match scene? {
        s @ Scene::Squares(_) => perturb_squares(s).ok()?,
        s if validate_contact(s) => s.clone(),
        _ => return None,
    };
    subneighborhoods(&scene, g, Subnbhd::for_scene(&scene)).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::make_k_polygon;
    use crate::geometry::{build_graph, int, Point};

    #[test]
    fn exact_ceil_pow() {
        assert_eq!(ceil_pow(0, &frac(1, 3)).unwrap(), 0);
        assert_eq!(ceil_pow(8, &frac(1, 3)).unwrap(), 2);
        assert_eq!(ceil_pow(9, &frac(1, 3)).unwrap(), 3);
        assert_eq!(ceil_pow(27, &frac(2, 3)).unwrap(), 9);
    }

    #[test]
    fn polygon_answers() {
        let s = make_k_polygon(3, &Point::ints(0, 0), &int(1)).unwrap();
        let g = build_graph(&s);
        let cfg = PipelineConfig::default();
        let yes = solve_pipeline(&g, Some(&s), 3, &ProblemProfile::th(), &cfg).unwrap();
        assert_eq!(yes.solution.map(|s| s.len()), Some(3));
        let no = solve_pipeline(&g, Some(&s), 2, &ProblemProfile::th(), &cfg).unwrap();
        assert_eq!(no.solution, None);
        let tight = PipelineConfig { width_budget: 0, ..PipelineConfig::default() };
        assert!(matches!(solve_pipeline(&g, Some(&s), 3, &ProblemProfile::th(), &tight), Err(Error::WidthOverflow { .. })));
    }
}
