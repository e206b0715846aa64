//! Exact rational geometry for segment and square scenes.

mod bbox;
mod build;
mod contact;
mod predicates;
mod squares;
mod subnbhd;

pub(crate) use bbox::BBox;
pub use build::{build_graph, build_graph_with, slope_count, validate_contact, Slope};
pub(crate) use contact::contact_max_clique_unchecked;
pub use contact::{contact_max_clique, contact_report, n_star_contact, ContactReport, SegmentContacts, CONTACT_CLIQUE_FACTOR};
pub use predicates::{intersection, on_segment, orientation, segments_intersect, Intersection};
pub use squares::{hix, is_generic, n_minus, perturb_squares, square_max_clique, squares_intersect, Hix};
pub use subnbhd::{mu_star, mu_star_values, occurrence_bound, occurrence_counts, subneighborhoods, Subnbhd};

use num_bigint::BigInt;
use num_rational::BigRational;

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn ints(x: i64, y: i64) -> Self {
        Point { x: int(x), y: int(y) }
    }
}

/// Closed segment; the endpoints may coincide (a point).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Self {
        Segment { a, b }
    }

    pub fn ints(x1: i64, y1: i64, x2: i64, y2: i64) -> Self {
        Segment { a: Point::ints(x1, y1), b: Point::ints(x2, y2) }
    }

    pub fn point(p: Point) -> Self {
        Segment { a: p.clone(), b: p }
    }

    pub fn is_point(&self) -> bool {
        self.a == self.b
    }

    pub fn is_horizontal(&self) -> bool {
        !self.is_point() && self.a.y == self.b.y
    }

    pub fn is_vertical(&self) -> bool {
        !self.is_point() && self.a.x == self.b.x
    }

    /// Endpoint set (one point for zero-length segments).
    pub fn endpoints(&self) -> Vec<Point> {
        if self.is_point() {
            vec![self.a.clone()]
        } else {
            vec![self.a.clone(), self.b.clone()]
        }
    }
}

/// Closed axis-parallel square given by its lower-left corner and side.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Square {
    pub x: Rational,
    pub y: Rational,
    pub side: Rational,
}

impl Square {
    pub fn new(x: Rational, y: Rational, side: Rational) -> Self {
        Square { x, y, side }
    }

    pub fn ints(x: i64, y: i64, side: i64) -> Self {
        Square { x: int(x), y: int(y), side: int(side) }
    }

    pub fn right(&self) -> Rational {
        &self.x + &self.side
    }

    pub fn top(&self) -> Rational {
        &self.y + &self.side
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.x <= p.x && p.x <= self.right() && self.y <= p.y && p.y <= self.top()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SceneKind {
    Segments,
    Squares,
}

/// Homogeneous scene; object ids are positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scene {
    Segments(Vec<Segment>),
    Squares(Vec<Square>),
}

impl Scene {
    pub fn kind(&self) -> SceneKind {
        match self {
            Scene::Segments(_) => SceneKind::Segments,
            Scene::Squares(_) => SceneKind::Squares,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Scene::Segments(v) => v.len(),
            Scene::Squares(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn segments(&self) -> Option<&[Segment]> {
        match self {
            Scene::Segments(v) => Some(v),
            Scene::Squares(_) => None,
        }
    }

    pub fn squares(&self) -> Option<&[Square]> {
        match self {
            Scene::Squares(v) => Some(v),
            Scene::Segments(_) => None,
        }
    }

    /// Objects with the given ids, renumbered densely in the given order.
    pub fn subscene(&self, ids: &[usize]) -> Scene {
        match self {
            Scene::Segments(v) => Scene::Segments(ids.iter().map(|&i| v[i].clone()).collect()),
            Scene::Squares(v) => Scene::Squares(ids.iter().map(|&i| v[i].clone()).collect()),
        }
    }
}
