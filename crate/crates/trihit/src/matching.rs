//! Maximum cardinality matching in general graphs (Edmonds' blossom
//! algorithm, BFS variant, O(n^3)).

use crate::graph::Graph;
use std::collections::VecDeque;

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_path(&mut self, root: usize) -> usize {
        let n = self.g.n();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return to;
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        NONE
    }
}

/// A maximum matching as pairs `(a, b)` with `a < b`, sorted.
pub fn max_matching(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.n();
    let mut st = Blossom {
        g,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        in_blossom: vec![false; n],
        queue: VecDeque::new(),
    };
    // Greedy warm start.
    for v in 0..n {
        if st.mate[v] == NONE {
            if let Some(&u) = g.neighbors(v).iter().find(|&&u| st.mate[u] == NONE) {
                st.mate[v] = u;
                st.mate[u] = v;
            }
        }
    }
    for v in 0..n {
        if st.mate[v] != NONE {
            continue;
        }
        let mut u = st.find_path(v);
        while u != NONE {
            let pv = st.parent[u];
            let ppv = st.mate[pv];
            st.mate[u] = pv;
            st.mate[pv] = u;
            u = ppv;
        }
    }
    (0..n).filter(|&v| st.mate[v] != NONE && v < st.mate[v]).map(|v| (v, st.mate[v])).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn check(g: &Graph) -> usize {
        let m = max_matching(g);
        let mut used = vec![false; g.n()];
        for &(a, b) in &m {
            assert!(g.has_edge(a, b));
            assert!(!used[a] && !used[b]);
            used[a] = true;
            used[b] = true;
        }
        m.len()
    }

    #[test]
    fn odd_cycles_need_blossoms() {
        assert_eq!(check(&named::cycle(5)), 2);
        assert_eq!(check(&named::cycle(9)), 4);
        // Two triangles joined by a path: blossom contraction required.
        let g = Graph::from_edges(8, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 5)]).unwrap();
        assert_eq!(check(&g), 4);
        assert_eq!(check(&named::petersen()), 5);
        assert_eq!(check(&named::complete(7)), 3);
    }
}
