use super::{Rational, Segment, Square};
use num_traits::ToPrimitive;

/// Floating-point bounding box widened to absorb conversion error, used only
/// to skip exact tests that cannot succeed.
#[derive(Debug, Clone, Copy)]
pub(crate) struct BBox {
    pub x0: f64,
    pub x1: f64,
    pub y0: f64,
    pub y1: f64,
}

fn lo(v: &Rational) -> f64 {
    let f = v.to_f64().unwrap_or(f64::NEG_INFINITY);
    f - 1e-9 * (1.0 + f.abs())
}

fn hi(v: &Rational) -> f64 {
    let f = v.to_f64().unwrap_or(f64::INFINITY);
    f + 1e-9 * (1.0 + f.abs())
}

impl BBox {
    pub fn segment(s: &Segment) -> Self {
        let (xa, xb) = if s.a.x <= s.b.x { (&s.a.x, &s.b.x) } else { (&s.b.x, &s.a.x) };
        let (ya, yb) = if s.a.y <= s.b.y { (&s.a.y, &s.b.y) } else { (&s.b.y, &s.a.y) };
        BBox { x0: lo(xa), x1: hi(xb), y0: lo(ya), y1: hi(yb) }
    }

    pub fn square(q: &Square) -> Self {
        BBox { x0: lo(&q.x), x1: hi(&q.right()), y0: lo(&q.y), y1: hi(&q.top()) }
    }

    pub fn overlaps(&self, o: &BBox) -> bool {
        self.x0 <= o.x1 && o.x0 <= self.x1 && self.y0 <= o.y1 && o.y0 <= self.y1
    }
}
