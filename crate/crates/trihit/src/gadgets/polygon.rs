use super::layout::PolyCycle;
use crate::error::{Error, Result};
use crate::geometry::{frac, int, Point, Rational, Scene, Segment};

/// Staircase corners `(0,0), (k-1,0), (k-1,1), (k-2,1), ..., (0,k-1)`.
fn staircase(k: usize) -> Vec<(i64, i64)> {
    let k = k as i64;
    let mut pts = vec![(0, 0)];
    for i in 0..k - 1 {
        pts.push((k - 1 - i, i));
        pts.push((k - 1 - i, i + 1));
    }
    pts.push((0, k - 1));
    pts.dedup();
    pts
}

/// A `k`-polygon: `k` horizontal and `k` vertical segments forming a
/// staircase cycle, each extended a quarter unit past its corners so that
/// corners are crossings, plus a zero-length segment at every corner.
/// Ids: horizontal segments, then vertical ones, then corners.
pub fn make_k_polygon(k: usize, anchor: &Point, scale: &Rational) -> Result<Scene> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("a k-polygon needs k >= 2, got {k}")));
    }
    if *scale <= int(0) {
        return Err(Error::InvalidArgument("scale must be positive".into()));
    }
    let corners: Vec<Point> = staircase(k)
        .into_iter()
        .map(|(x, y)| Point::new(&anchor.x + scale * int(x), &anchor.y + scale * int(y)))
        .collect();
    let cycle = PolyCycle::new(corners, scale * frac(1, 4));
    debug_assert!(cycle.is_alternating());
    let mut segs = Vec::with_capacity(4 * k);
    cycle.render_into(&mut segs);
    Ok(Scene::Segments(segs))
}

/// The 3-polygon drawn in the usual illustration, with exact coordinates.
pub fn figure_three_polygon() -> Scene {
    let s = |a: (Rational, Rational), b: (Rational, Rational)| Segment::new(Point::new(a.0, a.1), Point::new(b.0, b.1));
    let p = |x: Rational, y: Rational| Segment::point(Point::new(x, y));
    Scene::Segments(vec![
        s((int(0), int(1)), (int(7), int(1))),
        s((int(1), int(3)), (int(4), int(3))),
        s((int(2), int(4)), (int(6), int(4))),
        s((frac(6, 5), frac(3, 5)), (frac(6, 5), int(4))),
        s((int(3), frac(5, 2)), (int(3), frac(21, 5))),
        s((int(5), int(5)), (int(5), frac(7, 10))),
        p(frac(6, 5), int(1)),
        p(frac(6, 5), int(3)),
        p(int(5), int(1)),
        p(int(5), int(4)),
        p(int(3), int(4)),
        p(int(3), int(3)),
    ])
}
