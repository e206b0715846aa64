use super::layout::PolyCycle;
use super::reduction::{check_reduction, ReductionOutput};
use crate::error::{Error, Result};
use crate::geometry::{build_graph, frac, BBox, int, intersection, segments_intersect, Intersection, Point, Rational, Segment};
use std::collections::BTreeSet;

/// Halvings tried per side before a bump placement fails.
const PLACEMENT_ATTEMPTS: usize = 8;

/// Axis frame of one cycle edge: points are `origin + s * dir + h * normal`.
struct Frame {
    origin: Point,
    horizontal: bool,
    /// Direction sign from the start corner to the end corner.
    dir: Rational,
}

impl Frame {
    fn at(&self, s: &Rational, h: &Rational) -> Point {
        let along = &self.dir * s;
        if self.horizontal {
            Point::new(&self.origin.x + along, &self.origin.y + h)
        } else {
            Point::new(&self.origin.x + h, &self.origin.y + along)
        }
    }

    fn param(&self, p: &Point) -> Rational {
        if self.horizontal {
            (&p.x - &self.origin.x) * &self.dir
        } else {
            (&p.y - &self.origin.y) * &self.dir
        }
    }
}

/// Corners of one bump and the extension of its sides.
type Bump = (Vec<Point>, Rational);

/// The bump between parameters `lo` and `hi`.
fn bump(frame: &Frame, lo: &Rational, hi: &Rational, scale: &Rational, side: &Rational) -> Bump {
    let gap = hi - lo;
    let mid = (lo + hi) / int(2);
    let width = &gap / int(3) * scale;
    let height = side * width.clone().min(frac(1, 4) * scale);
    let (u, w) = (&mid - &width / int(2), &mid + &width / int(2));
    let zero = int(0);
    let pts = vec![frame.at(&u, &zero), frame.at(&u, &height), frame.at(&w, &height), frame.at(&w, &zero)];
    (pts, width / int(8))
}

fn bump_segments(pts: &[Point], ext: &Rational) -> Vec<Segment> {
    let mut cyc = PolyCycle::new(pts.to_vec(), ext.clone());
    cyc.corners.push(pts[0].clone());
    cyc.ext.push(ext.clone());
    cyc.start_override.push(None);
    cyc.end_override.push(None);
    (0..3).map(|e| cyc.edge_segment(e)).collect()
}

/// Splits every polygon side crossed too often with small bumps placed in
/// gaps between consecutive crossings, so that each side is crossed by at
/// most `t` segments (at most `t - 2` for sides ending at a clause point)
/// and the maximum degree is at most `t + 4`.
pub fn crenellate(r: &ReductionOutput, t: usize) -> Result<ReductionOutput> {
    if t < 2 {
        return Err(Error::InvalidArgument(format!("crenellation needs t >= 2, got {t}")));
    }
    let segs = r.scene.segments().ok_or_else(|| Error::InvalidArgument("segment scene expected".into()))?;
    let g = build_graph(&r.scene);
    let zs: BTreeSet<&Point> = r.clause_points.iter().collect();
    let boxes: Vec<BBox> = segs.iter().map(BBox::segment).collect();
    let mut obstacles: Vec<(Segment, BBox)> = Vec::new();
    let mut cycles = r.cycles.clone();
    for (v, cycle) in r.cycles.iter().enumerate() {
        let ids = &r.polygons[v];
        let len = cycle.len();
        let mut plan: Vec<(usize, Vec<Bump>)> = Vec::new();
        for e in 0..len {
            let sid = ids.edges[e];
            let (prev, next) = (ids.edges[(e + len - 1) % len], ids.edges[(e + 1) % len]);
            let (a, b) = cycle.edge_ends(e);
            let horizontal = cycle.is_horizontal(e);
            let delta = if horizontal { &b.x - &a.x } else { &b.y - &a.y };
            let frame = Frame { origin: a.clone(), horizontal, dir: if delta > int(0) { int(1) } else { int(-1) } };
            let length = frame.param(b);
            let mut partners = 0;
            let mut crossings = Vec::new();
            for &u in g.neighbors(sid) {
                if segs[u].is_point() || u == prev || u == next {
                    continue;
                }
                match intersection(&segs[sid], &segs[u]) {
                    Intersection::Point(p) if zs.contains(&p) => partners += 1,
                    Intersection::Point(p) => crossings.push(frame.param(&p)),
                    _ => return Err(Error::Placement(format!("segments {sid} and {u} overlap"))),
                }
            }
            if partners > 0 {
                partners += g.neighbors(sid).iter().filter(|&&u| segs[u].is_point() && zs.contains(&segs[u].a)).count();
            }
            if crossings.len() + partners <= t {
                continue;
            }
            if crossings.iter().any(|c| *c <= int(0) || *c >= length) {
                return Err(Error::Placement(format!("side {sid} is crossed beyond its corners")));
            }
            crossings.sort();
            // Fill pieces starting from the clause end, if any.
            let clause_at_end = cycle.end_override[e].is_some();
            let mut order: Vec<Rational> = crossings.clone();
            let mut corner = int(0);
            if clause_at_end {
                order.reverse();
                corner = length.clone();
            }
            let mut allowance = t - partners.min(t);
            let mut count = 0;
            let mut prev_pos = corner;
            let mut gaps = Vec::new();
            for q in order {
                if count == allowance {
                    gaps.push(if prev_pos < q { (prev_pos.clone(), q.clone()) } else { (q.clone(), prev_pos.clone()) });
                    count = 0;
                    allowance = t;
                }
                count += 1;
                prev_pos = q;
            }
            gaps.sort();
            let mut bumps = Vec::new();
            for (lo, hi) in gaps {
                let placed = place(&frame, &lo, &hi, segs, &boxes, sid, &obstacles)
                    .ok_or_else(|| Error::Placement(format!("no room for a bump on side {sid}")))?;
                obstacles.extend(bump_segments(&placed.0, &placed.1).into_iter().map(|s| {
                    let b = BBox::segment(&s);
                    (s, b)
                }));
                bumps.push(placed);
            }
            plan.push((e, bumps));
        }
        let target = &mut cycles[v];
        for (e, bumps) in plan.into_iter().rev() {
            let end = target.end_override[e].take();
            let mut corners = Vec::new();
            let mut ext = Vec::new();
            for (pts, x) in bumps {
                ext.extend(std::iter::repeat_n(x, pts.len()));
                corners.extend(pts);
            }
            let added = corners.len();
            target.corners.splice(e + 1..e + 1, corners);
            target.ext.splice(e + 1..e + 1, ext);
            target.start_override.splice(e + 1..e + 1, std::iter::repeat_n(None, added));
            target.end_override.splice(e + 1..e + 1, std::iter::repeat_n(None, added));
            target.end_override[e + added] = end;
        }
    }
    let pairs: Vec<bool> = r.clause_extra.iter().map(Option::is_some).collect();
    let out = ReductionOutput::render(cycles, r.clause_points.clone(), &pairs);
    check_reduction(&out)?;
    let deg = build_graph(&out.scene).max_degree();
    if deg > t + 4 {
        return Err(Error::Placement(format!("maximum degree {deg} exceeds {}", t + 4)));
    }
    Ok(out)
}

fn place(
    frame: &Frame,
    lo: &Rational,
    hi: &Rational,
    segs: &[Segment],
    boxes: &[BBox],
    host: usize,
    obstacles: &[(Segment, BBox)],
) -> Option<(Vec<Point>, Rational)> {
    for side in [int(1), int(-1)] {
        let mut scale = int(1);
        for _ in 0..PLACEMENT_ATTEMPTS {
            let (pts, ext) = bump(frame, lo, hi, &scale, &side);
            let new = bump_segments(&pts, &ext);
            let clear = new.iter().all(|s| {
                let b = BBox::segment(s);
                segs.iter()
                    .zip(boxes)
                    .enumerate()
                    .all(|(i, (o, ob))| i == host || !b.overlaps(ob) || !segments_intersect(s, o))
                    && obstacles.iter().all(|(o, ob)| !b.overlaps(ob) || !segments_intersect(s, o))
            });
            if clear {
                return Some((pts, ext));
            }
            scale /= int(2);
        }
    }
    None
}
