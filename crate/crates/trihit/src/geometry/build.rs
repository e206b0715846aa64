use super::bbox::BBox;
use super::predicates::{intersection, segments_intersect, Intersection};
use super::squares::squares_intersect;
use super::{Rational, Scene};
use crate::exec::Exec;
use crate::graph::Graph;
use std::collections::BTreeSet;

/// Intersection graph of the scene; vertex `i` is object `i`.
pub fn build_graph(scene: &Scene) -> Graph {
    build_graph_with(scene, Exec::default())
}

pub fn build_graph_with(scene: &Scene, exec: Exec) -> Graph {
    let n = scene.len();
    let boxes: Vec<BBox> = match scene {
        Scene::Segments(s) => s.iter().map(BBox::segment).collect(),
        Scene::Squares(q) => q.iter().map(BBox::square).collect(),
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| boxes[a].x0.total_cmp(&boxes[b].x0));
    let rows: Vec<Vec<(usize, usize)>> = exec.map_range(n, |p| {
        let i = order[p];
        order[p + 1..]
            .iter()
            .take_while(|&&j| boxes[j].x0 <= boxes[i].x1)
            .filter(|&&j| boxes[i].overlaps(&boxes[j]))
            .filter(|&&j| match scene {
                Scene::Segments(s) => segments_intersect(&s[i], &s[j]),
                Scene::Squares(q) => squares_intersect(&q[i], &q[j]),
            })
            .map(|&j| (i.min(j), i.max(j)))
            .collect()
    });
    let edges: Vec<(usize, usize)> = rows.into_iter().flatten().collect();
    Graph::from_edges(n, &edges).expect("pairs are distinct and in range")
}

/// First pair violating the contact condition, if any.
pub(crate) fn contact_violation(scene: &Scene) -> Option<(usize, usize)> {
    let segs = scene.segments()?;
    for i in 0..segs.len() {
        for j in i + 1..segs.len() {
            let (s, t) = (&segs[i], &segs[j]);
            match intersection(s, t) {
                Intersection::Empty => {}
                Intersection::Overlap(..) => return Some((i, j)),
                Intersection::Point(p) => {
                    if p != s.a && p != s.b && p != t.a && p != t.b {
                        return Some((i, j));
                    }
                }
            }
        }
    }
    None
}

/// True iff every common point of two segments is an endpoint of one of them.
/// Square scenes are never contact scenes.
pub fn validate_contact(scene: &Scene) -> bool {
    scene.segments().is_some() && contact_violation(scene).is_none()
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Slope {
    Vertical,
    Finite(Rational),
}

/// Number of distinct slopes among non-degenerate segments (0 for squares).
pub fn slope_count(scene: &Scene) -> usize {
    let Some(segs) = scene.segments() else { return 0 };
    let set: BTreeSet<Slope> = segs
        .iter()
        .filter(|s| !s.is_point())
        .map(|s| {
            let dx = &s.b.x - &s.a.x;
            if dx == Rational::from_integer(0.into()) {
                Slope::Vertical
            } else {
                Slope::Finite((&s.b.y - &s.a.y) / dx)
            }
        })
        .collect();
    set.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Point, Segment, Square};

    #[test]
    fn graph_from_squares() {
        let s = Scene::Squares(vec![Square::ints(0, 0, 1), Square::ints(5, 5, 1)]);
        let g = build_graph(&s);
        assert_eq!((g.n(), g.m()), (2, 0));
        // Closed squares: containment and corner touching both intersect.
        let s = Scene::Squares(vec![Square::ints(0, 0, 10), Square::ints(2, 2, 1), Square::ints(10, 10, 3)]);
        assert_eq!(build_graph(&s).edges(), vec![(0, 1), (0, 2)]);
        assert_eq!(build_graph_with(&s, Exec::Sequential), build_graph(&s));
    }

    #[test]
    fn contact_checks() {
        let cross = Scene::Segments(vec![Segment::ints(0, 0, 2, 2), Segment::ints(0, 2, 2, 0)]);
        assert!(!validate_contact(&cross));
        let tee = Scene::Segments(vec![Segment::ints(0, 0, 4, 0), Segment::ints(2, 0, 2, 3)]);
        assert!(validate_contact(&tee));
        let overlap = Scene::Segments(vec![Segment::ints(0, 0, 4, 0), Segment::ints(2, 0, 6, 0)]);
        assert!(!validate_contact(&overlap));
        let dot = Scene::Segments(vec![Segment::ints(0, 0, 4, 0), Segment::point(Point::ints(1, 0))]);
        assert!(validate_contact(&dot));
    }

    #[test]
    fn slopes() {
        assert_eq!(slope_count(&Scene::Segments(vec![])), 0);
        let s = Scene::Segments(vec![
            Segment::ints(0, 0, 1, 0),
            Segment::ints(0, 0, 0, 1),
            Segment::ints(0, 0, 1, 1),
            Segment::ints(5, 5, 7, 7),
            Segment::point(Point::ints(3, 3)),
        ]);
        assert_eq!(slope_count(&s), 3);
    }
}
