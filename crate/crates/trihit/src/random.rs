//! Seeded generators for test corpora and the `gen-random` command.

use crate::gadgets::CnfFormula;
use crate::geometry::{frac, int, intersection, Intersection, Point, Scene, Segment, Square};
use crate::graph::Graph;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi graph with edge probability `p`.
pub fn random_graph(rng: &mut SeededRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("edges are in range")
}

/// Axis-parallel segments with integer endpoints in `[0, grid]^2`; about one
/// in eight is a point.
pub fn random_2dir_scene(rng: &mut SeededRng, n: usize, grid: i64) -> Scene {
    let segs = (0..n)
        .map(|_| {
            let (x, y) = (rng.gen_range(0..=grid), rng.gen_range(0..=grid));
            if rng.gen_ratio(1, 8) {
                return Segment::ints(x, y, x, y);
            }
            let len = rng.gen_range(1..=grid.max(1));
            if rng.gen_bool(0.5) {
                Segment::ints(x, y, (x + len).min(grid).max(x + 1), y)
            } else {
                Segment::ints(x, y, x, (y + len).min(grid).max(y + 1))
            }
        })
        .collect();
    Scene::Segments(segs)
}

/// Direction vectors of the first `d` slopes used by [`random_dir_scene`].
pub const DIRECTIONS: [(i64, i64); 6] = [(1, 0), (0, 1), (1, 1), (1, -1), (2, 1), (1, 2)];

/// Segments using at most `d <= 6` slopes, integer endpoints.
pub fn random_dir_scene(rng: &mut SeededRng, n: usize, d: usize, grid: i64) -> Scene {
    let d = d.clamp(1, DIRECTIONS.len());
    let segs = (0..n)
        .map(|_| {
            let (dx, dy) = DIRECTIONS[rng.gen_range(0..d)];
            let (x, y) = (rng.gen_range(0..=grid), rng.gen_range(0..=grid));
            let len = rng.gen_range(1..=(grid / 2).max(1));
            Segment::ints(x, y, x + dx * len, y + dy * len)
        })
        .collect();
    Scene::Segments(segs)
}

/// Squares with integer corners in `[0, grid]^2` and sides in `1..=max_side`.
pub fn random_squares(rng: &mut SeededRng, n: usize, grid: i64, max_side: i64) -> Scene {
    let sq = (0..n)
        .map(|_| Square::ints(rng.gen_range(0..=grid), rng.gen_range(0..=grid), rng.gen_range(1..=max_side.max(1))))
        .collect();
    Scene::Squares(sq)
}

fn touches_only(s: &Segment, others: &[Segment]) -> bool {
    others.iter().all(|o| match intersection(s, o) {
        Intersection::Empty => true,
        Intersection::Point(p) => p == s.a || p == s.b || p == o.a || p == o.b,
        Intersection::Overlap(..) => false,
    })
}

/// Contact segment scene grown by attaching new segments to points of
/// existing ones. Gives up on a segment after a bounded number of tries, so
/// the result may have fewer than `n` segments.
pub fn random_contact_scene(rng: &mut SeededRng, n: usize, grid: i64) -> Scene {
    let mut segs: Vec<Segment> = Vec::with_capacity(n);
    let dirs: Vec<(i64, i64)> = vec![(1, 0), (0, 1), (1, 1), (1, -1), (-1, 0), (0, -1), (-1, -1), (-1, 1), (2, 1), (1, 3)];
    for _ in 0..n {
        for _ in 0..50 {
            let start = if segs.is_empty() || rng.gen_ratio(1, 5) {
                Point::ints(rng.gen_range(0..=grid), rng.gen_range(0..=grid))
            } else {
                let host = segs.choose(rng).unwrap();
                let t = frac(rng.gen_range(0..=4), 4);
                Point::new(&host.a.x + (&host.b.x - &host.a.x) * &t, &host.a.y + (&host.b.y - &host.a.y) * &t)
            };
            let (dx, dy) = *dirs.choose(rng).unwrap();
            let len = int(rng.gen_range(1..=(grid / 3).max(1)));
            let end = Point::new(&start.x + &len * int(dx), &start.y + &len * int(dy));
            let s = Segment::new(start, end);
            if touches_only(&s, &segs) {
                segs.push(s);
                break;
            }
        }
    }
    Scene::Segments(segs)
}

/// Formula with `m` clauses over `n >= 3` variables, each clause on three
/// distinct variables with random signs.
pub fn random_3sat(rng: &mut SeededRng, n: usize, m: usize) -> CnfFormula {
    let vars: Vec<i32> = (1..=n as i32).collect();
    let clauses = (0..m)
        .map(|_| {
            vars.choose_multiple(rng, 3.min(n))
                .map(|&v| if rng.gen_bool(0.5) { v } else { -v })
                .collect()
        })
        .collect();
    CnfFormula { num_vars: n, clauses }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{slope_count, validate_contact};

    #[test]
    fn deterministic() {
        let a = random_2dir_scene(&mut rng(7), 20, 10);
        let b = random_2dir_scene(&mut rng(7), 20, 10);
        assert_eq!(a, b);
        assert!(slope_count(&a) <= 2);
        assert_eq!(random_graph(&mut rng(3), 10, 0.4), random_graph(&mut rng(3), 10, 0.4));
    }

    #[test]
    fn contact_scenes_valid() {
        for seed in 0..10 {
            let s = random_contact_scene(&mut rng(seed), 30, 12);
            assert!(validate_contact(&s));
            assert!(s.len() >= 20);
        }
    }

    #[test]
    fn dir_scene_slopes() {
        assert!(slope_count(&random_dir_scene(&mut rng(1), 40, 3, 20)) <= 3);
    }
}
