use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Problem {
    TriangleHitting,
    Fvs,
    PseudoForestDeletion,
    /// Hitting all paths on `t` vertices, `2 <= t <= 5`.
    PtHitting(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeafSolver {
    /// Weighted triangle-hitting DP over a tree decomposition.
    TreewidthDp,
    /// Exhaustive search, capped by the oracle size limit.
    BruteForce,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProblemProfile {
    pub problem: Problem,
    pub c_pi: usize,
    pub leaf_solver: LeafSolver,
}

impl ProblemProfile {
    pub fn th() -> Self {
        ProblemProfile { problem: Problem::TriangleHitting, c_pi: 1, leaf_solver: LeafSolver::TreewidthDp }
    }

    pub fn fvs() -> Self {
        ProblemProfile { problem: Problem::Fvs, c_pi: 1, leaf_solver: LeafSolver::BruteForce }
    }

    pub fn pseudoforest() -> Self {
        ProblemProfile { problem: Problem::PseudoForestDeletion, c_pi: 2, leaf_solver: LeafSolver::BruteForce }
    }

    pub fn pt(t: usize) -> Result<Self> {
        if !(2..=5).contains(&t) {
            return Err(Error::InvalidArgument(format!("P_t hitting supports 2 <= t <= 5, got {t}")));
        }
        Ok(ProblemProfile { problem: Problem::PtHitting(t), c_pi: 2, leaf_solver: LeafSolver::BruteForce })
    }

    /// Parses `th`, `fvs`, `pseudoforest`, `pt` (with `t`) or `pt<t>`.
    pub fn parse(name: &str, t: usize) -> Result<Self> {
        match name {
            "th" => Ok(Self::th()),
            "fvs" => Ok(Self::fvs()),
            "pseudoforest" => Ok(Self::pseudoforest()),
            "pt" => Self::pt(t),
            s if s.starts_with("pt") => {
                let t = s[2..].parse().map_err(|_| Error::InvalidArgument(format!("bad profile {s}")))?;
                Self::pt(t)
            }
            s => Err(Error::InvalidArgument(format!("unknown profile {s}"))),
        }
    }

    pub fn name(&self) -> String {
        match self.problem {
            Problem::TriangleHitting => "th".into(),
            Problem::Fvs => "fvs".into(),
            Problem::PseudoForestDeletion => "pseudoforest".into(),
            Problem::PtHitting(t) => format!("pt{t}"),
        }
    }

    /// Whether `g` minus the deleted vertices has the target property.
    pub fn is_satisfied(&self, g: &Graph, deleted: &[bool]) -> bool {
        let alive = |v: usize| !deleted[v];
        match self.problem {
            Problem::TriangleHitting => {
                for a in (0..g.n()).filter(|&v| alive(v)) {
                    let na = g.neighbors(a);
                    for (i, &b) in na.iter().enumerate() {
                        if b < a || !alive(b) {
                            continue;
                        }
                        if na[i + 1..].iter().any(|&c| alive(c) && g.has_edge(b, c)) {
                            return false;
                        }
                    }
                }
                true
            }
            Problem::Fvs | Problem::PseudoForestDeletion => {
                let mut uf = UnionFind::new(g.n());
                let mut edges_in = vec![0usize; g.n()];
                for (u, v) in g.edges() {
                    if !alive(u) || !alive(v) {
                        continue;
                    }
                    if !uf.union(u, v) && self.problem == Problem::Fvs {
                        return false;
                    }
                }
                if self.problem == Problem::Fvs {
                    return true;
                }
                let mut verts = vec![0usize; g.n()];
                for v in (0..g.n()).filter(|&v| alive(v)) {
                    verts[uf.find(v)] += 1;
                }
                for (u, v) in g.edges() {
                    if alive(u) && alive(v) {
                        edges_in[uf.find(u)] += 1;
                    }
                }
                (0..g.n()).all(|r| edges_in[r] <= verts[r])
            }
            Problem::PtHitting(t) => !has_path(g, t, deleted),
        }
    }

    pub fn is_solution(&self, g: &Graph, set: &[usize]) -> bool {
        let mut deleted = vec![false; g.n()];
        for &v in set {
            deleted[v] = true;
        }
        self.is_satisfied(g, &deleted)
    }

    /// Bitmask version for `n <= 64`; `alive` marks surviving vertices.
    pub(crate) fn satisfied_mask(&self, adj: &[u64], alive: u64) -> bool {
        match self.problem {
            Problem::TriangleHitting => {
                let mut rest = alive;
                while rest != 0 {
                    let u = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    let mut nb = adj[u] & alive & !((2u64 << u) - 1);
                    while nb != 0 {
                        let v = nb.trailing_zeros() as usize;
                        nb &= nb - 1;
                        if adj[u] & adj[v] & alive != 0 {
                            return false;
                        }
                    }
                }
                true
            }
            Problem::Fvs | Problem::PseudoForestDeletion => {
                // Per component: count vertices and edges via BFS on masks.
                let mut todo = alive;
                while todo != 0 {
                    let s = todo.trailing_zeros() as usize;
                    let mut comp = 1u64 << s;
                    let mut frontier = comp;
                    while frontier != 0 {
                        let v = frontier.trailing_zeros() as usize;
                        frontier &= frontier - 1;
                        let new = adj[v] & alive & !comp;
                        comp |= new;
                        frontier |= new;
                    }
                    todo &= !comp;
                    let nv = comp.count_ones() as usize;
                    let mut deg = 0usize;
                    let mut c = comp;
                    while c != 0 {
                        let v = c.trailing_zeros() as usize;
                        c &= c - 1;
                        deg += (adj[v] & comp).count_ones() as usize;
                    }
                    let ne = deg / 2;
                    let limit = if self.problem == Problem::Fvs { nv - 1 } else { nv };
                    if ne > limit {
                        return false;
                    }
                }
                true
            }
            Problem::PtHitting(t) => {
                fn ext(adj: &[u64], alive: u64, v: usize, used: u64, left: usize) -> bool {
                    if left == 0 {
                        return true;
                    }
                    let mut nb = adj[v] & alive & !used;
                    while nb != 0 {
                        let u = nb.trailing_zeros() as usize;
                        nb &= nb - 1;
                        if ext(adj, alive, u, used | (1 << u), left - 1) {
                            return true;
                        }
                    }
                    false
                }
                let mut rest = alive;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    if ext(adj, alive, v, 1 << v, t - 1) {
                        return false;
                    }
                }
                true
            }
        }
    }
}

fn has_path(g: &Graph, t: usize, deleted: &[bool]) -> bool {
    fn ext(g: &Graph, deleted: &[bool], v: usize, used: &mut Vec<bool>, left: usize) -> bool {
        if left == 0 {
            return true;
        }
        for &u in g.neighbors(v) {
            if !deleted[u] && !used[u] {
                used[u] = true;
                let found = ext(g, deleted, u, used, left - 1);
                used[u] = false;
                if found {
                    return true;
                }
            }
        }
        false
    }
    let mut used = vec![false; g.n()];
    for v in 0..g.n() {
        if deleted[v] {
            continue;
        }
        used[v] = true;
        let found = ext(g, deleted, v, &mut used, t - 1);
        used[v] = false;
        if found {
            return true;
        }
    }
    false
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    /// Returns false if already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}
