use super::build::build_graph;
use super::{Rational, Scene, Square};
use crate::error::{Error, Result};
use crate::graph::{min_vertex_cover, Graph};
use num_traits::One;
use std::collections::BTreeSet;

pub fn squares_intersect(a: &Square, b: &Square) -> bool {
    a.x <= b.right() && b.x <= a.right() && a.y <= b.top() && b.y <= a.top()
}

fn all_distinct(mut v: Vec<Rational>) -> bool {
    let n = v.len();
    v.sort();
    v.dedup();
    v.len() == n
}

/// Pairwise distinct sides and no two aligned sides (all `2n` x-values
/// distinct, all `2n` y-values distinct).
pub fn is_generic(squares: &[Square]) -> bool {
    all_distinct(squares.iter().map(|s| s.side.clone()).collect())
        && all_distinct(squares.iter().flat_map(|s| [s.x.clone(), s.right()]).collect())
        && all_distinct(squares.iter().flat_map(|s| [s.y.clone(), s.top()]).collect())
}

fn min_gap(values: impl Iterator<Item = Rational>) -> Option<Rational> {
    let set: BTreeSet<Rational> = values.collect();
    let v: Vec<&Rational> = set.iter().collect();
    v.windows(2).map(|w| w[1] - w[0]).min()
}

const PERTURB_ATTEMPTS: usize = 64;

/// Makes side lengths pairwise distinct and removes aligned sides while
/// keeping the intersection graph identical. Square `i` grows by
/// `e_i = g (i+1) / (4 (n+1) q)` on every side, where `g` is the smallest
/// positive gap among coordinates and sides; `q` increases until the
/// result verifies.
pub fn perturb_squares(scene: &Scene) -> Result<Scene> {
    let squares = scene
        .squares()
        .ok_or_else(|| Error::InvalidArgument("perturb_squares needs a square scene".into()))?;
    if is_generic(squares) {
        return Ok(scene.clone());
    }
    let n = squares.len();
    let gaps = [
        min_gap(squares.iter().flat_map(|s| [s.x.clone(), s.right()])),
        min_gap(squares.iter().flat_map(|s| [s.y.clone(), s.top()])),
        min_gap(squares.iter().map(|s| s.side.clone())),
        squares.iter().map(|s| s.side.clone()).min(),
    ];
    let g = gaps.into_iter().flatten().min().unwrap_or_else(Rational::one);
    let target = build_graph(scene);
    for q in 1..=PERTURB_ATTEMPTS {
        let out: Vec<Square> = squares
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let e = &g * Rational::new((i as i64 + 1).into(), (4 * (n as i64 + 1) * q as i64).into());
                Square::new(&s.x - &e, &s.y - &e, &s.side + &e + &e)
            })
            .collect();
        let cand = Scene::Squares(out);
        if is_generic(cand.squares().unwrap()) && build_graph(&cand) == target {
            return Ok(cand);
        }
    }
    Err(Error::PerturbationFailed(PERTURB_ATTEMPTS))
}

fn require_distinct_sides(squares: &[Square]) -> Result<()> {
    if !all_distinct(squares.iter().map(|s| s.side.clone()).collect()) {
        return Err(Error::Unperturbed("duplicate side lengths".into()));
    }
    Ok(())
}

/// Neighbors with strictly smaller side.
pub fn n_minus(scene: &Scene, g: &Graph, v: usize) -> Result<Vec<usize>> {
    let squares = scene.squares().ok_or_else(|| Error::InvalidArgument("n_minus needs a square scene".into()))?;
    require_distinct_sides(squares)?;
    Ok(g.neighbors(v).iter().copied().filter(|&u| squares[u].side < squares[v].side).collect())
}

/// H/I/X decomposition of `N(v)`: `h` is a minimum vertex cover of
/// `G[N⁻(v)]`, `i = N⁻(v) \ h`, `x = h ∪ N⁺(v)`. All sets sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hix {
    pub h: Vec<usize>,
    pub i: Vec<usize>,
    pub x: Vec<usize>,
}

pub fn hix(scene: &Scene, g: &Graph, v: usize) -> Result<Hix> {
    let nm = n_minus(scene, g, v)?;
    let (sub, map) = g.induced(&nm);
    let h: Vec<usize> = min_vertex_cover(&sub).into_iter().map(|i| map[i]).collect();
    let i: Vec<usize> = nm.iter().copied().filter(|u| h.binary_search(u).is_err()).collect();
    let x: Vec<usize> = g.neighbors(v).iter().copied().filter(|u| i.binary_search(u).is_err()).collect();
    Ok(Hix { h, i, x })
}

/// Maximum clique of a square scene, exact. Axis-parallel boxes have the
/// Helly property, so a clique is exactly the set of squares containing
/// some point; the optimum is attained at (max left side, max bottom side)
/// of the clique. Lexicographically smallest among maximum cliques.
pub fn square_max_clique(scene: &Scene) -> Result<Vec<usize>> {
    let squares = scene
        .squares()
        .ok_or_else(|| Error::InvalidArgument("square_max_clique needs a square scene".into()))?;
    let xs: BTreeSet<&Rational> = squares.iter().map(|s| &s.x).collect();
    let mut best: Vec<usize> = Vec::new();
    for x in xs {
        let active: Vec<usize> = (0..squares.len()).filter(|&i| &squares[i].x <= x && x <= &squares[i].right()).collect();
        if active.len() < best.len() {
            continue;
        }
        let ys: BTreeSet<&Rational> = active.iter().map(|&i| &squares[i].y).collect();
        for y in ys {
            let set: Vec<usize> =
                active.iter().copied().filter(|&i| &squares[i].y <= y && y <= &squares[i].top()).collect();
            if set.len() > best.len() || (set.len() == best.len() && set < best) {
                best = set;
            }
        }
    }
    Ok(best)
}
