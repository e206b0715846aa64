use super::{Point, Rational, Segment};
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

/// Sign of the cross product `(b - a) x (c - a)`.
pub fn orientation(a: &Point, b: &Point, c: &Point) -> Ordering {
    let lhs = (&b.x - &a.x) * (&c.y - &a.y);
    let rhs = (&b.y - &a.y) * (&c.x - &a.x);
    lhs.cmp(&rhs)
}

fn between(v: &Rational, p: &Rational, q: &Rational) -> bool {
    if p <= q {
        p <= v && v <= q
    } else {
        q <= v && v <= p
    }
}

/// Whether `p` lies on the closed segment `s`.
pub fn on_segment(p: &Point, s: &Segment) -> bool {
    if s.is_point() {
        return *p == s.a;
    }
    orientation(&s.a, &s.b, p) == Ordering::Equal && between(&p.x, &s.a.x, &s.b.x) && between(&p.y, &s.a.y, &s.b.y)
}

fn bbox_disjoint(s: &Segment, t: &Segment) -> bool {
    let (sx0, sx1) = if s.a.x <= s.b.x { (&s.a.x, &s.b.x) } else { (&s.b.x, &s.a.x) };
    let (tx0, tx1) = if t.a.x <= t.b.x { (&t.a.x, &t.b.x) } else { (&t.b.x, &t.a.x) };
    if sx1 < tx0 || tx1 < sx0 {
        return true;
    }
    let (sy0, sy1) = if s.a.y <= s.b.y { (&s.a.y, &s.b.y) } else { (&s.b.y, &s.a.y) };
    let (ty0, ty1) = if t.a.y <= t.b.y { (&t.a.y, &t.b.y) } else { (&t.b.y, &t.a.y) };
    sy1 < ty0 || ty1 < sy0
}

/// Closed-segment intersection test, exact.
pub fn segments_intersect(s: &Segment, t: &Segment) -> bool {
    if bbox_disjoint(s, t) {
        return false;
    }
    if s.is_point() {
        return on_segment(&s.a, t);
    }
    if t.is_point() {
        return on_segment(&t.a, s);
    }
    let o1 = orientation(&s.a, &s.b, &t.a);
    let o2 = orientation(&s.a, &s.b, &t.b);
    let o3 = orientation(&t.a, &t.b, &s.a);
    let o4 = orientation(&t.a, &t.b, &s.b);
    let strictly = |x: Ordering, y: Ordering| x != Ordering::Equal && y != Ordering::Equal && x != y;
    if strictly(o1, o2) && strictly(o3, o4) {
        return true;
    }
    on_segment(&t.a, s) || on_segment(&t.b, s) || on_segment(&s.a, t) || on_segment(&s.b, t)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Intersection {
    Empty,
    Point(Point),
    /// Collinear overlap of positive length, endpoints in order.
    Overlap(Point, Point),
}

/// The exact intersection set of two closed segments.
pub fn intersection(s: &Segment, t: &Segment) -> Intersection {
    if !segments_intersect(s, t) {
        return Intersection::Empty;
    }
    if s.is_point() {
        return Intersection::Point(s.a.clone());
    }
    if t.is_point() {
        return Intersection::Point(t.a.clone());
    }
    let o1 = orientation(&s.a, &s.b, &t.a);
    let o2 = orientation(&s.a, &s.b, &t.b);
    if o1 == Ordering::Equal && o2 == Ordering::Equal {
        let mut pts = [s.a.clone(), s.b.clone(), t.a.clone(), t.b.clone()];
        pts.sort();
        let (p, q) = (pts[1].clone(), pts[2].clone());
        return if p == q { Intersection::Point(p) } else { Intersection::Overlap(p, q) };
    }
    let dx = &s.b.x - &s.a.x;
    let dy = &s.b.y - &s.a.y;
    let ex = &t.b.x - &t.a.x;
    let ey = &t.b.y - &t.a.y;
    let denom = &dx * &ey - &dy * &ex;
    debug_assert!(!denom.is_zero());
    let wx = &t.a.x - &s.a.x;
    let wy = &t.a.y - &s.a.y;
    let num = &wx * &ey - &wy * &ex;
    let u = num / denom;
    debug_assert!(!u.is_negative());
    Intersection::Point(Point::new(&s.a.x + &u * &dx, &s.a.y + &u * &dy))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{frac, Point, Segment};

    #[test]
    fn examples() {
        assert!(segments_intersect(&Segment::ints(0, 0, 1, 0), &Segment::ints(0, 0, 1, 0)));
        assert!(segments_intersect(&Segment::ints(0, 0, 2, 0), &Segment::ints(1, 0, 3, 0)));
        assert!(!segments_intersect(&Segment::ints(0, 0, 1, 0), &Segment::ints(0, 1, 1, 1)));
        let a = Segment::ints(0, 0, 2, 2);
        let b = Segment::ints(0, 2, 2, 0);
        assert!(segments_intersect(&a, &b));
        assert_eq!(intersection(&a, &b), Intersection::Point(Point::ints(1, 1)));
        assert!(!segments_intersect(&Segment::ints(0, 0, 1, 1), &Segment::ints(2, 0, 3, -1)));
    }

    #[test]
    fn degenerate_cases() {
        let p = Segment::point(Point::ints(1, 1));
        assert!(segments_intersect(&p, &Segment::ints(0, 0, 2, 2)));
        assert!(!segments_intersect(&p, &Segment::ints(0, 0, 2, 1)));
        assert!(segments_intersect(&p, &p.clone()));
        // Collinear, touching at one point.
        assert_eq!(
            intersection(&Segment::ints(0, 0, 1, 0), &Segment::ints(1, 0, 3, 0)),
            Intersection::Point(Point::ints(1, 0))
        );
        // Non-integral crossing.
        let x = intersection(&Segment::ints(0, 0, 3, 1), &Segment::ints(0, 1, 3, 0));
        assert_eq!(x, Intersection::Point(Point::new(frac(3, 2), frac(1, 2))));
        // T-junction: endpoint interior to the other.
        assert_eq!(
            intersection(&Segment::ints(0, 0, 4, 0), &Segment::ints(2, 0, 2, 3)),
            Intersection::Point(Point::ints(2, 0))
        );
    }
}
