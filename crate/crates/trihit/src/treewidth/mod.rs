//! Tree decompositions and the weighted triangle-hitting DP.

mod dp;

pub use dp::{weighted_th_dp, NiceDecomposition, NiceKind, NiceNode, DP_MAX_BAG};

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::{BTreeSet, VecDeque};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    /// Sorted bags.
    pub bags: Vec<Vec<usize>>,
    /// Tree edges between bag indices.
    pub edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    /// Largest bag size minus one (0 when every bag is empty).
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0).saturating_sub(1)
    }

    /// Adjacency lists of the tree.
    pub fn tree_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }
}

/// Decomposition induced by eliminating vertices in `order`.
pub fn from_elimination_order(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.n();
    if n == 0 {
        return TreeDecomposition { bags: vec![Vec::new()], edges: Vec::new() };
    }
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut bags = vec![Vec::new(); n];
    let mut parent = vec![usize::MAX; n];
    for &v in order {
        let later: Vec<usize> = adj[v].iter().copied().filter(|&u| pos[u] > pos[v]).collect();
        for (i, &a) in later.iter().enumerate() {
            for &b in &later[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        parent[v] = later.iter().copied().min_by_key(|&u| pos[u]).unwrap_or(usize::MAX);
        let mut bag = later;
        bag.push(v);
        bag.sort_unstable();
        bags[v] = bag;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut last_root = None;
    for &v in order {
        if parent[v] != usize::MAX {
            edges.push((v, parent[v]));
        } else {
            if let Some(r) = last_root {
                edges.push((r, v));
            }
            last_root = Some(v);
        }
    }
    TreeDecomposition { bags, edges }
}

fn greedy_order(g: &Graph, fill: bool) -> Vec<usize> {
    let n = g.n();
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let score = |v: usize| -> usize {
            if !fill {
                return adj[v].len();
            }
            let nb: Vec<usize> = adj[v].iter().copied().collect();
            let mut missing = 0;
            for (i, &a) in nb.iter().enumerate() {
                missing += nb[i + 1..].iter().filter(|&&b| !adj[a].contains(&b)).count();
            }
            missing
        };
        let v = (0..n).filter(|&v| !done[v]).min_by_key(|&v| (score(v), adj[v].len(), v)).unwrap();
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        for &a in &nb {
            adj[a].remove(&v);
        }
        done[v] = true;
        order.push(v);
    }
    order
}

/// Best of the min-fill and min-degree elimination heuristics.
pub fn heuristic_decomposition(g: &Graph) -> TreeDecomposition {
    let a = from_elimination_order(g, &greedy_order(g, true));
    let b = from_elimination_order(g, &greedy_order(g, false));
    let best = if b.width() < a.width() { b } else { a };
    debug_assert!(validate_decomposition(g, &best));
    best
}

pub const EXACT_TW_MAX_N: usize = 16;

/// Minimum-width decomposition if its width is at most `max_width`, by
/// dynamic programming over vertex subsets.
pub fn exact_decomposition_small(g: &Graph, max_width: usize) -> Result<Option<TreeDecomposition>> {
    let n = g.n();
    if n > EXACT_TW_MAX_N {
        return Err(Error::SizeCap(format!("exact treewidth supports n <= {EXACT_TW_MAX_N}, got {n}")));
    }
    if n == 0 {
        return Ok(Some(from_elimination_order(g, &[])));
    }
    let adj: Vec<u32> = g.adj_masks().into_iter().map(|m| m as u32).collect();
    // |Q(s, v)|: vertices outside s + v reachable from v through s.
    let q = |s: u32, v: usize| -> usize {
        let mut seen = 1u32 << v;
        let mut frontier = 1u32 << v;
        let mut outside = 0u32;
        while frontier != 0 {
            let u = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let nb = adj[u] & !seen;
            seen |= nb;
            outside |= nb & !s;
            frontier |= nb & s;
        }
        outside.count_ones() as usize
    };
    let full = (1u32 << n) - 1;
    let mut tw = vec![usize::MAX; 1 << n];
    let mut choice = vec![0u8; 1 << n];
    tw[0] = 0;
    for s in 1..=full {
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let prev = s & !(1 << v);
            let val = tw[prev as usize].max(q(prev, v));
            if val < tw[s as usize] {
                tw[s as usize] = val;
                choice[s as usize] = v as u8;
            }
        }
    }
    if tw[full as usize] > max_width {
        return Ok(None);
    }
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let v = choice[s as usize] as usize;
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    Ok(Some(from_elimination_order(g, &order)))
}

/// Reason the decomposition is invalid, if any.
pub fn check_decomposition(g: &Graph, td: &TreeDecomposition) -> std::result::Result<(), String> {
    let nb = td.bags.len();
    if nb == 0 {
        return if g.n() == 0 { Ok(()) } else { Err("no bags".into()) };
    }
    if td.edges.len() != nb - 1 {
        return Err(format!("{} tree edges for {nb} bags", td.edges.len()));
    }
    if td.edges.iter().any(|&(a, b)| a >= nb || b >= nb || a == b) {
        return Err("tree edge out of range".into());
    }
    let tadj = td.tree_adjacency();
    let mut seen = vec![false; nb];
    seen[0] = true;
    let mut q = VecDeque::from([0]);
    while let Some(t) = q.pop_front() {
        for &s in &tadj[t] {
            if !seen[s] {
                seen[s] = true;
                q.push_back(s);
            }
        }
    }
    if seen.contains(&false) {
        return Err("tree is disconnected".into());
    }
    let mut holders = vec![Vec::new(); g.n()];
    for (i, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            if v >= g.n() {
                return Err(format!("bag {i} holds out-of-range vertex {v}"));
            }
            holders[v].push(i);
        }
    }
    let contains = |i: usize, v: usize| td.bags[i].binary_search(&v).is_ok();
    if td.bags.iter().any(|b| b.windows(2).any(|w| w[0] >= w[1])) {
        return Err("bags must be sorted without repeats".into());
    }
    for (v, h) in holders.iter().enumerate() {
        if h.is_empty() {
            return Err(format!("vertex {v} is in no bag"));
        }
        let internal = td.edges.iter().filter(|&&(a, b)| contains(a, v) && contains(b, v)).count();
        if internal + 1 != h.len() {
            return Err(format!("bags holding vertex {v} are not connected"));
        }
    }
    for (a, b) in g.edges() {
        if !holders[a].iter().any(|&i| contains(i, b)) {
            return Err(format!("edge ({a},{b}) is in no bag"));
        }
    }
    Ok(())
}

pub fn validate_decomposition(g: &Graph, td: &TreeDecomposition) -> bool {
    check_decomposition(g, td).is_ok()
}
