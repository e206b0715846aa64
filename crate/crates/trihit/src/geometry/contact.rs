use super::build::contact_violation;
use super::predicates::{on_segment, orientation};
use super::{Point, Scene};
use crate::clique::maximal_cliques;
use crate::error::{Error, Result};
use crate::graph::Graph;
use std::cmp::Ordering;
use std::collections::BTreeMap;

/// Contact classification of one segment. All point lists are sorted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SegmentContacts {
    /// E(s): the endpoints (one point for a zero-length segment).
    pub endpoints: Vec<Point>,
    /// ICP(s): relative-interior points of s that are endpoints of other segments.
    pub icp: Vec<Point>,
    /// NT(s): ICP points with touching segments on both sides of s.
    pub nt: Vec<Point>,
    /// T(s) = ICP(s) \ NT(s).
    pub t: Vec<Point>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContactReport {
    pub segments: Vec<SegmentContacts>,
}

fn require_contact(scene: &Scene) -> Result<()> {
    if scene.segments().is_none() {
        return Err(Error::NotContact("square scene".into()));
    }
    if let Some((i, j)) = contact_violation(scene) {
        return Err(Error::NotContact(format!("segments {i} and {j} cross or overlap")));
    }
    Ok(())
}

pub fn contact_report(scene: &Scene) -> Result<ContactReport> {
    require_contact(scene)?;
    let segs = scene.segments().unwrap();
    let mut out = Vec::with_capacity(segs.len());
    for (i, s) in segs.iter().enumerate() {
        let mut rec = SegmentContacts { endpoints: s.endpoints(), ..Default::default() };
        rec.endpoints.sort();
        if s.is_point() {
            out.push(rec);
            continue;
        }
        // point -> (left toucher seen, right toucher seen)
        let mut sides: BTreeMap<Point, (bool, bool)> = BTreeMap::new();
        for (j, u) in segs.iter().enumerate() {
            if i == j {
                continue;
            }
            for e in u.endpoints() {
                if e == s.a || e == s.b || !on_segment(&e, s) {
                    continue;
                }
                let entry = sides.entry(e.clone()).or_insert((false, false));
                if !u.is_point() {
                    let other = if u.a == e { &u.b } else { &u.a };
                    match orientation(&s.a, &s.b, other) {
                        Ordering::Greater => entry.0 = true,
                        Ordering::Less => entry.1 = true,
                        Ordering::Equal => {}
                    }
                }
            }
        }
        for (p, (l, r)) in sides {
            rec.icp.push(p.clone());
            if l && r {
                rec.nt.push(p);
            } else {
                rec.t.push(p);
            }
        }
        out.push(rec);
    }
    Ok(ContactReport { segments: out })
}

impl ContactReport {
    /// N*(v): neighbors with an endpoint in NT(v).
    pub fn n_star(&self, scene: &Scene, g: &Graph, v: usize) -> Vec<usize> {
        let segs = scene.segments().expect("contact report implies a segment scene");
        let nt = &self.segments[v].nt;
        if nt.is_empty() {
            return Vec::new();
        }
        g.neighbors(v)
            .iter()
            .copied()
            .filter(|&u| segs[u].endpoints().iter().any(|e| nt.binary_search(e).is_ok()))
            .collect()
    }
}

pub fn n_star_contact(scene: &Scene, g: &Graph, v: usize) -> Result<Vec<usize>> {
    Ok(contact_report(scene)?.n_star(scene, g, v))
}

/// Bound factor `C` on the number of maximal cliques (`C * n^2`) accepted
/// before the input is declared non-contact.
pub const CONTACT_CLIQUE_FACTOR: usize = 4;

/// Exact maximum clique of a contact-segment graph by maximal-clique
/// enumeration. Returns the lexicographically smallest maximum clique and
/// the number of maximal cliques seen.
pub fn contact_max_clique(scene: &Scene, g: &Graph) -> Result<(Vec<usize>, usize)> {
    require_contact(scene)?;
    contact_max_clique_unchecked(g, CONTACT_CLIQUE_FACTOR)
}

pub(crate) fn contact_max_clique_unchecked(g: &Graph, factor: usize) -> Result<(Vec<usize>, usize)> {
    let n = g.n().max(1);
    let cliques = maximal_cliques(g, factor * n * n)?;
    let count = cliques.len();
    let best = cliques
        .into_iter()
        .min_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)))
        .unwrap_or_default();
    Ok((best, count))
}
