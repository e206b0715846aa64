use super::{check_decomposition, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reduce::WeightedInstance;
use std::collections::VecDeque;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NiceKind {
    Leaf,
    Introduce { v: usize, child: usize },
    Forget { v: usize, child: usize },
    Join { left: usize, right: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceNode {
    pub bag: Vec<usize>,
    pub kind: NiceKind,
}

/// Nice decomposition; children precede parents and the root, last, has
/// an empty bag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceDecomposition {
    pub nodes: Vec<NiceNode>,
}

impl NiceDecomposition {
    pub fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    fn push(&mut self, bag: Vec<usize>, kind: NiceKind) -> usize {
        self.nodes.push(NiceNode { bag, kind });
        self.nodes.len() - 1
    }

    fn forget(&mut self, child: usize, v: usize) -> usize {
        let bag = self.nodes[child].bag.iter().copied().filter(|&u| u != v).collect();
        self.push(bag, NiceKind::Forget { v, child })
    }

    fn introduce(&mut self, child: usize, v: usize) -> usize {
        let mut bag = self.nodes[child].bag.clone();
        let at = bag.binary_search(&v).unwrap_err();
        bag.insert(at, v);
        self.push(bag, NiceKind::Introduce { v, child })
    }

    /// Normalizes a valid decomposition rooted at bag 0.
    pub fn from_decomposition(td: &TreeDecomposition) -> Self {
        let mut nice = NiceDecomposition { nodes: Vec::new() };
        if td.bags.is_empty() {
            nice.push(Vec::new(), NiceKind::Leaf);
            return nice;
        }
        let tadj = td.tree_adjacency();
        let mut parent = vec![usize::MAX; td.bags.len()];
        let mut order = Vec::with_capacity(td.bags.len());
        let mut seen = vec![false; td.bags.len()];
        seen[0] = true;
        let mut q = VecDeque::from([0]);
        while let Some(t) = q.pop_front() {
            order.push(t);
            for &s in &tadj[t] {
                if !seen[s] {
                    seen[s] = true;
                    parent[s] = t;
                    q.push_back(s);
                }
            }
        }
        let mut top = vec![usize::MAX; td.bags.len()];
        for &t in order.iter().rev() {
            let target = &td.bags[t];
            let mut parts = Vec::new();
            for &c in &tadj[t] {
                if c == parent[t] {
                    continue;
                }
                let mut cur = top[c];
                for v in td.bags[c].clone() {
                    if target.binary_search(&v).is_err() {
                        cur = nice.forget(cur, v);
                    }
                }
                for &v in target {
                    if nice.nodes[cur].bag.binary_search(&v).is_err() {
                        cur = nice.introduce(cur, v);
                    }
                }
                parts.push(cur);
            }
            if parts.is_empty() {
                let mut cur = nice.push(Vec::new(), NiceKind::Leaf);
                for &v in target {
                    cur = nice.introduce(cur, v);
                }
                parts.push(cur);
            }
            let mut acc = parts[0];
            for &p in &parts[1..] {
                acc = nice.push(target.clone(), NiceKind::Join { left: acc, right: p });
            }
            top[t] = acc;
        }
        let mut cur = top[0];
        for v in td.bags[0].clone() {
            cur = nice.forget(cur, v);
        }
        debug_assert_eq!(cur, nice.root());
        nice
    }
}

/// Largest bag the DP accepts.
pub const DP_MAX_BAG: usize = 26;

const INF: u64 = u64::MAX;

/// Removes bit `i`, shifting higher bits down.
fn drop_bit(mask: u64, i: usize) -> u64 {
    (mask & ((1 << i) - 1)) | ((mask >> (i + 1)) << i)
}

/// Inserts bit `i` with value `bit`.
fn insert_bit(mask: u64, i: usize, bit: u64) -> u64 {
    (mask & ((1 << i) - 1)) | (bit << i) | ((mask >> i) << (i + 1))
}

fn bag_adjacency(g: &Graph, bag: &[usize]) -> Vec<u64> {
    bag.iter()
        .map(|&a| bag.iter().enumerate().filter(|&(_, &b)| g.has_edge(a, b)).fold(0, |m, (j, _)| m | 1 << j))
        .collect()
}

/// Minimum-weight triangle hitting set of weight at most the budget.
pub fn weighted_th_dp(w: &WeightedInstance, td: &TreeDecomposition) -> Result<Option<(Vec<usize>, u64)>> {
    let g = &w.graph;
    check_decomposition(g, td).map_err(Error::InvalidDecomposition)?;
    if td.width() + 1 > DP_MAX_BAG {
        return Err(Error::WidthOverflow { width: td.width(), budget: DP_MAX_BAG - 1 });
    }
    let nice = NiceDecomposition::from_decomposition(td);
    let mut tables: Vec<Vec<u64>> = Vec::with_capacity(nice.nodes.len());
    for node in &nice.nodes {
        let size = 1usize << node.bag.len();
        let table = match node.kind {
            NiceKind::Leaf => vec![0],
            NiceKind::Introduce { v, child } => {
                let i = node.bag.binary_search(&v).unwrap();
                let adj = bag_adjacency(g, &node.bag);
                let full = (size - 1) as u64;
                let ct = &tables[child];
                (0..size as u64)
                    .map(|mask| {
                        let prev = ct[drop_bit(mask, i) as usize];
                        if prev == INF {
                            return INF;
                        }
                        if mask >> i & 1 == 1 {
                            return prev.saturating_add(w.weights[v]);
                        }
                        let kept = !mask & full & adj[i];
                        let mut rest = kept;
                        while rest != 0 {
                            let a = rest.trailing_zeros() as usize;
                            rest &= rest - 1;
                            if adj[a] & kept != 0 {
                                return INF;
                            }
                        }
                        prev
                    })
                    .collect()
            }
            NiceKind::Forget { v, child } => {
                let i = nice.nodes[child].bag.binary_search(&v).unwrap();
                let ct = &tables[child];
                (0..size as u64)
                    .map(|mask| ct[insert_bit(mask, i, 0) as usize].min(ct[insert_bit(mask, i, 1) as usize]))
                    .collect()
            }
            NiceKind::Join { left, right } => {
                let (lt, rt) = (&tables[left], &tables[right]);
                (0..size)
                    .map(|mask| {
                        if lt[mask] == INF || rt[mask] == INF {
                            return INF;
                        }
                        let twice: u64 = node
                            .bag
                            .iter()
                            .enumerate()
                            .filter(|&(j, _)| mask >> j & 1 == 1)
                            .map(|(_, &u)| w.weights[u])
                            .sum();
                        lt[mask] + rt[mask] - twice
                    })
                    .collect()
            }
        };
        tables.push(table);
    }
    let best = tables[nice.root()][0];
    if best == INF || best > w.budget {
        return Ok(None);
    }
    let mut chosen = vec![false; g.n()];
    let mut stack = vec![(nice.root(), 0u64)];
    while let Some((t, mask)) = stack.pop() {
        let node = &nice.nodes[t];
        match node.kind {
            NiceKind::Leaf => {}
            NiceKind::Introduce { v, child } => {
                let i = node.bag.binary_search(&v).unwrap();
                if mask >> i & 1 == 1 {
                    chosen[v] = true;
                }
                stack.push((child, drop_bit(mask, i)));
            }
            NiceKind::Forget { v, child } => {
                let i = nice.nodes[child].bag.binary_search(&v).unwrap();
                let (m0, m1) = (insert_bit(mask, i, 0), insert_bit(mask, i, 1));
                let pick = if tables[child][m0 as usize] == tables[t][mask as usize] { m0 } else { m1 };
                stack.push((child, pick));
            }
            NiceKind::Join { left, right } => {
                stack.push((left, mask));
                stack.push((right, mask));
            }
        }
    }
    let solution: Vec<usize> = (0..g.n()).filter(|&v| chosen[v]).collect();
    debug_assert_eq!(w.weight_of(&solution), best);
    Ok(Some((solution, best)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::treewidth::heuristic_decomposition;

    #[test]
    fn bit_helpers() {
        assert_eq!(drop_bit(0b1011, 1), 0b101);
        assert_eq!(insert_bit(0b101, 1, 1), 0b1011);
        assert_eq!(insert_bit(0b101, 0, 0), 0b1010);
    }

    #[test]
    fn triangles() {
        let g = named::complete(3);
        let td = heuristic_decomposition(&g);
        let w = WeightedInstance::unit(&g, 1);
        assert_eq!(weighted_th_dp(&w, &td).unwrap().unwrap().1, 1);
        let mut w = WeightedInstance::unit(&g, 2);
        w.weights = vec![5, 1, 3];
        assert_eq!(weighted_th_dp(&w, &td).unwrap(), Some((vec![1], 1)));
        w.budget = 0;
        assert_eq!(weighted_th_dp(&w, &td).unwrap(), None);
    }

    #[test]
    fn wheel_and_nice_shape() {
        let g = named::wheel(5);
        let td = heuristic_decomposition(&g);
        let nice = NiceDecomposition::from_decomposition(&td);
        assert!(nice.nodes[nice.root()].bag.is_empty());
        let w = WeightedInstance::unit(&g, 10);
        let (sol, wt) = weighted_th_dp(&w, &td).unwrap().unwrap();
        assert_eq!(wt, 1);
        assert_eq!(sol, vec![0]);
    }

    #[test]
    fn rejects_invalid_decomposition() {
        let g = named::path(3);
        let bad = TreeDecomposition { bags: vec![vec![0, 1]], edges: vec![] };
        assert!(matches!(
            weighted_th_dp(&WeightedInstance::unit(&g, 1), &bad),
            Err(Error::InvalidDecomposition(_))
        ));
    }
}
