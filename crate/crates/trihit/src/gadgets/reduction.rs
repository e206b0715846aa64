use super::cnf::CnfFormula;
use super::layout::{PolyCycle, PolygonIds};
use crate::error::{Error, Result};
use crate::geometry::{build_graph, frac, intersection, on_segment, Intersection, Point, Rational, Scene, Segment};
use crate::graph::list_triangles;
use std::collections::BTreeSet;

/// A 2-DIR scene whose triangle hitting number reaches `k` iff the formula
/// is satisfiable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutput {
    pub scene: Scene,
    /// Sum of the polygon sizes.
    pub k: usize,
    /// Polygon of variable `v` at index `v - 1`.
    pub polygons: Vec<PolygonIds>,
    pub clause_points: Vec<Point>,
    /// Zero-length segment at the clause point of every 2-literal clause.
    pub clause_extra: Vec<Option<usize>>,
    pub cycles: Vec<PolyCycle>,
}

impl ReductionOutput {
    pub fn k_per_variable(&self) -> Vec<usize> {
        self.polygons.iter().map(PolygonIds::k).collect()
    }

    /// Renders `cycles` and the clause points into a scene.
    pub fn render(cycles: Vec<PolyCycle>, clause_points: Vec<Point>, pairs: &[bool]) -> Self {
        let mut segs = Vec::new();
        let polygons: Vec<PolygonIds> = cycles.iter().map(|c| c.render_into(&mut segs)).collect();
        let clause_extra = clause_points
            .iter()
            .zip(pairs)
            .map(|(z, &pair)| {
                pair.then(|| {
                    segs.push(Segment::point(z.clone()));
                    segs.len() - 1
                })
            })
            .collect();
        let k = polygons.iter().map(PolygonIds::k).sum();
        ReductionOutput { scene: Scene::Segments(segs), k, polygons, clause_points, clause_extra, cycles }
    }

    /// Variable owning each segment (`None` for clause points).
    pub fn owners(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.scene.len()];
        for (v, p) in self.polygons.iter().enumerate() {
            for &id in p.horizontal.iter().chain(&p.vertical).chain(&p.corners) {
                out[id] = Some(v);
            }
        }
        out
    }
}

/// Extension of every edge past its corners in the base layout.
pub fn base_eps() -> Rational {
    frac(1, 16)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Role {
    /// First positive literal: vertical arm ending at `z` from below.
    Below,
    /// Second positive literal: vertical arm ending at `z` from above.
    Above,
    /// First negative literal: horizontal arm ending at `z` from the left.
    Left,
    /// Second negative literal: horizontal arm ending at `z` from the right.
    Right,
}

fn pt(x: i64, y: i64) -> Point {
    Point::ints(x, y)
}

/// Tab corners from the right foot to the left foot, and the edge (index
/// into the tab corners) ending at `z` with whether `z` replaces its start.
fn tab(role: Role, x0: i64, top: i64, ybase: i64) -> (Vec<Point>, usize, bool) {
    let y = ybase;
    match role {
        Role::Below => (vec![pt(x0 + 6, top), pt(x0 + 6, y - 1), pt(x0 + 4, y - 1), pt(x0 + 4, top)], 2, true),
        Role::Above => (
            vec![
                pt(x0 + 8, top),
                pt(x0 + 8, y + 1),
                pt(x0 + 4, y + 1),
                pt(x0 + 4, y + 2),
                pt(x0 + 1, y + 2),
                pt(x0 + 1, top),
            ],
            2,
            true,
        ),
        Role::Left => (vec![pt(x0 + 3, top), pt(x0 + 3, y), pt(x0 + 2, y), pt(x0 + 2, top)], 1, true),
        Role::Right => (vec![pt(x0 + 7, top), pt(x0 + 7, y), pt(x0 + 5, y), pt(x0 + 5, top)], 1, false),
    }
}

/// Concentric rectangles, variable `i` spanning `[-i, 10m+i] x [-i, i]`,
/// with one tab per occurrence on the top side routed to the clause point
/// `(10c + 5, n + 3)` of clause `c`.
pub fn sat_to_2dir(f: &CnfFormula) -> Result<ReductionOutput> {
    if !f.is_preprocessed() {
        return Err(Error::Precondition("formula must be preprocessed".into()));
    }
    let n = f.num_vars as i64;
    let m = f.clauses.len() as i64;
    let w = 10 * m;
    let ybase = n + 3;
    let mut roles: Vec<Vec<(i64, Role)>> = vec![Vec::new(); f.num_vars];
    for (c, clause) in f.clauses.iter().enumerate() {
        let (mut pos, mut neg) = (0, 0);
        for &l in clause {
            let role = if l > 0 {
                pos += 1;
                if pos == 1 { Role::Below } else { Role::Above }
            } else {
                neg += 1;
                if neg == 1 { Role::Left } else { Role::Right }
            };
            roles[l.unsigned_abs() as usize - 1].push((c as i64, role));
        }
    }
    let eps = base_eps();
    let clause_points: Vec<Point> = (0..m).map(|c| pt(10 * c + 5, ybase)).collect();
    let mut cycles = Vec::with_capacity(f.num_vars);
    for (vi, tabs) in roles.iter_mut().enumerate() {
        let i = vi as i64 + 1;
        tabs.sort_by_key(|&(c, _)| std::cmp::Reverse(c));
        let mut corners = vec![pt(-i, -i), pt(w + i, -i), pt(w + i, i)];
        let mut overrides = Vec::new();
        for &(c, role) in tabs.iter() {
            let (pts, edge, at_start) = tab(role, 10 * c + 1, i, ybase);
            overrides.push((corners.len() + edge, at_start, clause_points[c as usize].clone()));
            corners.extend(pts);
        }
        corners.push(pt(-i, i));
        let mut cycle = PolyCycle::new(corners, eps.clone());
        for (e, at_start, z) in overrides {
            if at_start {
                cycle.start_override[e] = Some(z);
            } else {
                cycle.end_override[e] = Some(z);
            }
        }
        debug_assert!(cycle.is_alternating());
        cycles.push(cycle);
    }
    let pairs: Vec<bool> = f.clauses.iter().map(|c| c.len() == 2).collect();
    let out = ReductionOutput::render(cycles, clause_points, &pairs);
    check_reduction(&out)?;
    Ok(out)
}

fn common_point(a: &Segment, b: &Segment) -> Option<Point> {
    match intersection(a, b) {
        Intersection::Point(p) => Some(p),
        _ => None,
    }
}

/// Structural checks on a reduction scene: every polygon is a valid
/// `k`-polygon, same-direction segments of distinct polygons meet only at
/// clause points, and every triangle has a common corner or clause point.
pub fn check_reduction(r: &ReductionOutput) -> Result<()> {
    let fail = |msg: String| Err(Error::Precondition(msg));
    let segs = r.scene.segments().ok_or_else(|| Error::InvalidArgument("segment scene expected".into()))?;
    let g = build_graph(&r.scene);
    let owners = r.owners();
    let zs: BTreeSet<&Point> = r.clause_points.iter().collect();
    for (v, p) in r.polygons.iter().enumerate() {
        if p.horizontal.len() != p.vertical.len() || p.corners.len() != 2 * p.k() || p.k() < 2 {
            return fail(format!("polygon {v} has inconsistent sizes"));
        }
        let mut ids: Vec<usize> = p.horizontal.iter().chain(&p.vertical).chain(&p.corners).copied().collect();
        ids.sort_unstable();
        let (sub, _) = g.induced(&ids);
        if sub.components().len() != 1 {
            return fail(format!("polygon {v} is disconnected"));
        }
        let corner_pts: BTreeSet<&Point> = p.corners.iter().map(|&c| &segs[c].a).collect();
        for &s in p.horizontal.iter().chain(&p.vertical) {
            if segs[s].is_point() {
                return fail(format!("polygon {v} has a zero-length side {s}"));
            }
            let mut perpendicular = 0;
            for &t in g.neighbors(s) {
                if owners[t] != Some(v) || segs[t].is_point() {
                    continue;
                }
                if segs[t].is_horizontal() == segs[s].is_horizontal() {
                    return fail(format!("parallel sides of polygon {v} meet at segment {s}"));
                }
                perpendicular += 1;
                if !common_point(&segs[s], &segs[t]).is_some_and(|x| corner_pts.contains(&x)) {
                    return fail(format!("sides {s} and {t} of polygon {v} meet away from a corner"));
                }
            }
            if perpendicular != 2 {
                return fail(format!("side {s} of polygon {v} meets {perpendicular} perpendicular sides"));
            }
        }
    }
    for (a, b) in g.edges() {
        let (sa, sb) = (&segs[a], &segs[b]);
        if sa.is_point() || sb.is_point() || owners[a] == owners[b] {
            continue;
        }
        if sa.is_horizontal() == sb.is_horizontal() {
            let ok = common_point(sa, sb).is_some_and(|p| zs.contains(&p));
            if !ok {
                return fail(format!("parallel segments {a} and {b} of distinct polygons meet off a clause point"));
            }
        }
    }
    let anchors: BTreeSet<&Point> =
        segs.iter().filter(|s| s.is_point()).map(|s| &s.a).chain(r.clause_points.iter()).collect();
    for (a, b, c) in list_triangles(&g) {
        let anchored = [(a, b, c), (a, c, b), (b, c, a)].iter().any(|&(x, y, z)| {
            common_point(&segs[x], &segs[y]).is_some_and(|p| anchors.contains(&p) && on_segment(&p, &segs[z]))
        });
        if !anchored {
            return fail(format!("triangle ({a},{b},{c}) has no common corner or clause point"));
        }
    }
    Ok(())
}

/// Largest degree in the scene graph.
pub fn max_degree(r: &ReductionOutput) -> usize {
    build_graph(&r.scene).max_degree()
}
