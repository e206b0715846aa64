use crate::geometry::{Point, Rational, Segment};
use num_traits::Signed;

/// Rectilinear cycle of corners. Edge `e` joins `corners[e]` and
/// `corners[e + 1]` (cyclically) and consecutive edges alternate between
/// horizontal and vertical. When rendered, each edge extends past its
/// corners by the corner's `ext`, unless an endpoint override is set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyCycle {
    pub corners: Vec<Point>,
    pub ext: Vec<Rational>,
    pub start_override: Vec<Option<Point>>,
    pub end_override: Vec<Option<Point>>,
}

/// Segment ids of one rendered polygon.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PolygonIds {
    pub horizontal: Vec<usize>,
    pub vertical: Vec<usize>,
    pub corners: Vec<usize>,
    /// Segment id of every cycle edge, in cycle order.
    pub edges: Vec<usize>,
}

impl PolygonIds {
    pub fn k(&self) -> usize {
        self.horizontal.len()
    }
}

impl PolyCycle {
    pub fn new(corners: Vec<Point>, ext: Rational) -> Self {
        let n = corners.len();
        PolyCycle { corners, ext: vec![ext; n], start_override: vec![None; n], end_override: vec![None; n] }
    }

    pub fn len(&self) -> usize {
        self.corners.len()
    }

    pub fn is_empty(&self) -> bool {
        self.corners.is_empty()
    }

    pub fn edge_ends(&self, e: usize) -> (&Point, &Point) {
        (&self.corners[e], &self.corners[(e + 1) % self.len()])
    }

    pub fn is_horizontal(&self, e: usize) -> bool {
        let (a, b) = self.edge_ends(e);
        a.y == b.y
    }

    pub fn edge_segment(&self, e: usize) -> Segment {
        let j = (e + 1) % self.len();
        let (a, b) = (&self.corners[e], &self.corners[j]);
        let (dx, dy) = (sign(&(&b.x - &a.x)), sign(&(&b.y - &a.y)));
        let start = self.start_override[e].clone().unwrap_or_else(|| {
            Point::new(&a.x - &dx * &self.ext[e], &a.y - &dy * &self.ext[e])
        });
        let end = self.end_override[e].clone().unwrap_or_else(|| {
            Point::new(&b.x + &dx * &self.ext[j], &b.y + &dy * &self.ext[j])
        });
        Segment::new(start, end)
    }

    /// Appends the rendered segments (horizontal edges, vertical edges,
    /// corner points) and returns their ids.
    pub fn render_into(&self, out: &mut Vec<Segment>) -> PolygonIds {
        let mut ids = PolygonIds { edges: vec![0; self.len()], ..Default::default() };
        for horizontal in [true, false] {
            for e in (0..self.len()).filter(|&e| self.is_horizontal(e) == horizontal) {
                ids.edges[e] = out.len();
                if horizontal {
                    ids.horizontal.push(out.len());
                } else {
                    ids.vertical.push(out.len());
                }
                out.push(self.edge_segment(e));
            }
        }
        for c in &self.corners {
            ids.corners.push(out.len());
            out.push(Segment::point(c.clone()));
        }
        ids
    }

    /// Whether the corners form an alternating rectilinear cycle.
    pub fn is_alternating(&self) -> bool {
        let n = self.len();
        n >= 4
            && n.is_multiple_of(2)
            && (0..n).all(|e| {
                let (a, b) = self.edge_ends(e);
                (a.x == b.x) != (a.y == b.y) && self.is_horizontal(e) != self.is_horizontal((e + 1) % n)
            })
    }
}

fn sign(v: &Rational) -> Rational {
    v.signum()
}
