use crate::error::{Error, Result};
use crate::matching;

/// Simple undirected graph on vertices `0..n` with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!("edge ({u},{v}) out of range for n={n}")));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for l in &mut adj {
            l.sort_unstable();
            l.dedup();
        }
        Ok(Graph { adj })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for (u, l) in self.adj.iter().enumerate() {
            for &v in l {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Induced subgraph on `vertices` (any order, duplicates ignored).
    /// Returns the subgraph and the map from new ids to original ids,
    /// which is sorted ascending.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| self.adj[v].iter().filter_map(|&u| (pos[u] != usize::MAX).then_some(pos[u])).collect())
            .collect();
        (Graph { adj }, keep)
    }

    /// `g - removed`, with the new-to-old id map.
    pub fn without(&self, removed: &[usize]) -> (Graph, Vec<usize>) {
        let mut gone = vec![false; self.n()];
        for &v in removed {
            gone[v] = true;
        }
        let keep: Vec<usize> = (0..self.n()).filter(|&v| !gone[v]).collect();
        self.induced(&keep)
    }

    /// Adjacency bitmasks; only valid for `n <= 64`.
    pub fn adj_masks(&self) -> Vec<u64> {
        assert!(self.n() <= 64, "adj_masks requires n <= 64");
        self.adj.iter().map(|l| l.iter().fold(0u64, |m, &v| m | (1 << v))).collect()
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| self.has_edge(a, b)))
    }

    pub fn is_independent(&self, vs: &[usize]) -> bool {
        vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| !self.has_edge(a, b)))
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

/// A `t`-bundle: a matching of size `t` plus a center adjacent to all
/// `2t` matched vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bundle {
    pub center: usize,
    pub matching: Vec<(usize, usize)>,
}

impl Bundle {
    pub fn t(&self) -> usize {
        self.matching.len()
    }

    /// Sorted vertex set (center and matched vertices).
    pub fn vertices(&self) -> Vec<usize> {
        let mut vs = vec![self.center];
        for &(a, b) in &self.matching {
            vs.push(a);
            vs.push(b);
        }
        vs.sort_unstable();
        vs
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut vs = self.vertices();
        let len = vs.len();
        vs.dedup();
        len == vs.len()
            && self.matching.iter().all(|&(a, b)| {
                g.has_edge(a, b) && g.has_edge(self.center, a) && g.has_edge(self.center, b)
            })
    }
}

/// Maximum matching cardinality.
pub fn max_matching_size(g: &Graph) -> usize {
    matching::max_matching(g).len()
}

/// Maximum matching size of `g[vs]`.
pub fn induced_matching_size(g: &Graph, vs: &[usize]) -> usize {
    let (h, _) = g.induced(vs);
    max_matching_size(&h)
}

/// Some `t`-bundle of `g`, preferring the smallest center.
pub fn find_bundle(g: &Graph, t: usize) -> Result<Option<Bundle>> {
    if t == 0 {
        return Err(Error::InvalidArgument("bundle size t must be >= 1".into()));
    }
    Ok(find_bundle_alive(g, t, &vec![true; g.n()]))
}

pub(crate) fn find_bundle_alive(g: &Graph, t: usize, alive: &[bool]) -> Option<Bundle> {
    for v in 0..g.n() {
        if !alive[v] {
            continue;
        }
        let nb: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| alive[u]).collect();
        if nb.len() < 2 * t {
            continue;
        }
        let (h, map) = g.induced(&nb);
        let m = matching::max_matching(&h);
        if m.len() >= t {
            let matching = m.into_iter().take(t).map(|(a, b)| (map[a], map[b])).collect();
            return Some(Bundle { center: v, matching });
        }
    }
    None
}

/// Vertices of a maximal vertex-disjoint packing of `t`-bundles. The
/// result hits every `t`-bundle and is within a factor `2t+1` of optimal.
pub fn greedy_bundle_hitting(g: &Graph, t: usize) -> Result<Vec<usize>> {
    if t == 0 {
        return Err(Error::InvalidArgument("bundle size t must be >= 1".into()));
    }
    let mut alive = vec![true; g.n()];
    let mut out = Vec::new();
    while let Some(b) = find_bundle_alive(g, t, &alive) {
        for v in b.vertices() {
            alive[v] = false;
            out.push(v);
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// All triangles `(a, b, c)` with `a < b < c`, sorted.
pub fn list_triangles(g: &Graph) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for a in 0..g.n() {
        let na = g.neighbors(a);
        for (i, &b) in na.iter().enumerate() {
            if b < a {
                continue;
            }
            for &c in &na[i + 1..] {
                if g.has_edge(b, c) {
                    out.push((a, b, c));
                }
            }
        }
    }
    out
}

pub const KTT_MAX_T: usize = 4;

/// True iff `g` has no `K_{t,t}` subgraph (not necessarily induced).
pub fn is_ktt_free(g: &Graph, t: usize) -> Result<bool> {
    if t == 0 {
        return Err(Error::InvalidArgument("t must be >= 1".into()));
    }
    if t > KTT_MAX_T {
        return Err(Error::SizeCap(format!("K_{{t,t}} test limited to t <= {KTT_MAX_T}, got {t}")));
    }
    // Grow side A in increasing id order while tracking the common
    // neighborhood; side B is any t vertices of it outside A.
    fn grow(g: &Graph, t: usize, a: &mut Vec<usize>, common: &[usize]) -> bool {
        let outside = common.iter().filter(|v| !a.contains(v)).count();
        if a.len() == t {
            return outside >= t;
        }
        let start = a.last().map_or(0, |&l| l + 1);
        for v in start..g.n() {
            let next: Vec<usize> = if a.is_empty() {
                g.neighbors(v).to_vec()
            } else {
                intersect(common, g.neighbors(v))
            };
            if next.iter().filter(|u| !a.contains(u) && **u != v).count() < t {
                continue;
            }
            a.push(v);
            if grow(g, t, a, &next) {
                return true;
            }
            a.pop();
        }
        false
    }
    Ok(!grow(g, t, &mut Vec::new(), &[]))
}

pub(crate) fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Two-colouring if the graph is bipartite.
pub fn bipartition(g: &Graph) -> Option<Vec<bool>> {
    let mut side: Vec<Option<bool>> = vec![None; g.n()];
    for s in 0..g.n() {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            let sv = side[v].unwrap();
            for &u in g.neighbors(v) {
                match side[u] {
                    None => {
                        side[u] = Some(!sv);
                        stack.push(u);
                    }
                    Some(su) if su == sv => return None,
                    _ => {}
                }
            }
        }
    }
    Some(side.into_iter().map(Option::unwrap).collect())
}

/// Exact minimum vertex cover, sorted. Bipartite graphs use König's
/// construction from a maximum matching; other graphs use iterative
/// deepening from the matching lower bound.
pub fn min_vertex_cover(g: &Graph) -> Vec<usize> {
    let m = matching::max_matching(g);
    if let Some(side) = bipartition(g) {
        let mut mate = vec![usize::MAX; g.n()];
        for &(a, b) in &m {
            mate[a] = b;
            mate[b] = a;
        }
        // Z: vertices reachable from unmatched left vertices by alternating paths.
        let mut z = vec![false; g.n()];
        let mut stack: Vec<usize> = (0..g.n()).filter(|&v| !side[v] && mate[v] == usize::MAX).collect();
        for &v in &stack {
            z[v] = true;
        }
        while let Some(v) = stack.pop() {
            for &u in g.neighbors(v) {
                if !z[u] && mate[v] != u {
                    z[u] = true;
                    let w = mate[u];
                    if w != usize::MAX && !z[w] {
                        z[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        return (0..g.n()).filter(|&v| (!side[v] && !z[v]) || (side[v] && z[v])).collect();
    }
    fn cover(g: &Graph, taken: &mut Vec<bool>, k: usize) -> bool {
        let pick = (0..g.n())
            .filter(|&v| !taken[v])
            .map(|v| (g.neighbors(v).iter().filter(|&&u| !taken[u]).count(), v))
            .filter(|&(d, _)| d > 0)
            .max_by_key(|&(d, v)| (d, usize::MAX - v));
        let Some((d, v)) = pick else { return true };
        if k == 0 {
            return false;
        }
        taken[v] = true;
        if cover(g, taken, k - 1) {
            return true;
        }
        taken[v] = false;
        if d <= k {
            let nb: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| !taken[u]).collect();
            for &u in &nb {
                taken[u] = true;
            }
            if cover(g, taken, k - d) {
                return true;
            }
            for &u in &nb {
                taken[u] = false;
            }
        }
        false
    }
    let mut k = m.len();
    loop {
        let mut taken = vec![false; g.n()];
        if cover(g, &mut taken, k) {
            return (0..g.n()).filter(|&v| taken[v]).collect();
        }
        k += 1;
    }
}

/// Small named graphs used across tests and examples.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                e.push((a, b));
            }
        }
        Graph::from_edges(n, &e).unwrap()
    }

    /// Wheel with hub 0 and rim `1..=r`.
    pub fn wheel(r: usize) -> Graph {
        let mut e: Vec<_> = (1..=r).map(|i| (0, i)).collect();
        e.extend((1..=r).map(|i| (i, i % r + 1)));
        Graph::from_edges(r + 1, &e).unwrap()
    }

    pub fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edges(10, &e).unwrap()
    }

    pub fn grid(r: usize, c: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..r {
            for j in 0..c {
                let v = i * c + j;
                if j + 1 < c {
                    e.push((v, v + 1));
                }
                if i + 1 < r {
                    e.push((v, v + c));
                }
            }
        }
        Graph::from_edges(r * c, &e).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn basic_counts() {
        let g = petersen();
        assert_eq!((g.n(), g.m()), (10, 15));
        assert!(g.neighbors(0).windows(2).all(|w| w[0] < w[1]));
        assert!(Graph::from_edges(2, &[(1, 1)]).is_err());
    }

    #[test]
    fn matching_examples() {
        assert_eq!(max_matching_size(&Graph::new(0)), 0);
        assert_eq!(max_matching_size(&path(2)), 1);
        assert_eq!(max_matching_size(&petersen()), 5);
    }

    #[test]
    fn bundles() {
        let b = find_bundle(&complete(3), 1).unwrap().unwrap();
        assert!(b.is_valid_in(&complete(3)));
        assert_eq!(find_bundle(&path(4), 1).unwrap(), None);
        let w = wheel(5);
        let b = find_bundle(&w, 2).unwrap().unwrap();
        assert_eq!(b.center, 0);
        assert!(b.is_valid_in(&w));
        assert!(find_bundle(&w, 0).is_err());
    }

    #[test]
    fn greedy_hitting_examples() {
        assert!(greedy_bundle_hitting(&path(5), 1).unwrap().is_empty());
        assert_eq!(greedy_bundle_hitting(&complete(3), 1).unwrap(), vec![0, 1, 2]);
        let two = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(greedy_bundle_hitting(&two, 1).unwrap(), vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn triangles_and_ktt() {
        assert_eq!(list_triangles(&complete(4)).len(), 4);
        assert!(list_triangles(&cycle(6)).is_empty());
        assert!(!is_ktt_free(&cycle(4), 2).unwrap());
        assert!(is_ktt_free(&path(7), 2).unwrap());
        assert!(is_ktt_free(&cycle(5), 2).unwrap());
        assert!(!is_ktt_free(&complete(8), 4).unwrap());
        assert!(is_ktt_free(&complete(7), 4).unwrap());
        assert!(is_ktt_free(&path(3), 5).is_err());
    }

    #[test]
    fn vertex_covers() {
        let covers = |g: &Graph| {
            let c = min_vertex_cover(g);
            assert!(g.edges().iter().all(|(a, b)| c.contains(a) || c.contains(b)));
            c.len()
        };
        assert_eq!(covers(&grid(3, 3)), 4);
        assert_eq!(covers(&cycle(6)), 3);
        assert_eq!(covers(&cycle(5)), 3);
        assert_eq!(covers(&petersen()), 6);
        assert_eq!(covers(&complete(5)), 4);
        assert_eq!(covers(&Graph::new(3)), 0);
    }
}
