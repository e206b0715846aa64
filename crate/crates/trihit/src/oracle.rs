//! Exhaustive reference solvers used as ground truth.

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::Graph;
use crate::profile::ProblemProfile;

pub const DEFAULT_ORACLE_CAP: usize = 20;

fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    if g.n() > cap || g.n() > 64 {
        return Err(Error::OracleTooLarge { n: g.n(), cap: cap.min(64) });
    }
    Ok(())
}

fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Lexicographically first `s`-subset starting with `first` that passes `ok`.
fn first_with_prefix<F: Fn(u64) -> bool>(n: usize, s: usize, first: usize, ok: &F) -> Option<Vec<usize>> {
    if s == 0 || first + s > n {
        return None;
    }
    let mut idx: Vec<usize> = (first..first + s).collect();
    loop {
        let mask = idx.iter().fold(0u64, |m, &v| m | (1 << v));
        if ok(mask) {
            return Some(idx);
        }
        // Advance positions 1..s, keeping idx[0] fixed.
        let mut i = s;
        loop {
            if i <= 1 {
                return None;
            }
            i -= 1;
            if idx[i] < n - (s - i) {
                idx[i] += 1;
                for j in i + 1..s {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Lexicographically smallest minimum-size solution.
pub fn brute_min_hitting(g: &Graph, profile: &ProblemProfile) -> Result<Vec<usize>> {
    brute_min_hitting_with(g, profile, DEFAULT_ORACLE_CAP, Exec::default())
}

pub fn brute_min_hitting_with(g: &Graph, profile: &ProblemProfile, cap: usize, exec: Exec) -> Result<Vec<usize>> {
    check_cap(g, cap)?;
    Ok(search(g, profile, g.n(), exec).expect("deleting every vertex is always a solution"))
}

/// Lexicographically smallest minimum solution if its size is at most `k`.
pub fn brute_hitting_within(g: &Graph, profile: &ProblemProfile, k: usize, cap: usize) -> Result<Option<Vec<usize>>> {
    check_cap(g, cap)?;
    Ok(search(g, profile, k.min(g.n()), Exec::Sequential))
}

fn search(g: &Graph, profile: &ProblemProfile, max_size: usize, exec: Exec) -> Option<Vec<usize>> {
    let n = g.n();
    let adj = g.adj_masks();
    let all = full(n);
    let ok = |deleted: u64| profile.satisfied_mask(&adj, all & !deleted);
    if ok(0) {
        return Some(Vec::new());
    }
    for s in 1..=max_size {
        let found = exec.map_range(n, |first| first_with_prefix(n, s, first, &ok));
        if let Some(sol) = found.into_iter().flatten().next() {
            return Some(sol);
        }
    }
    None
}

/// All solutions of size at most `k`, sorted by (size, lexicographic).
pub fn enumerate_solutions(g: &Graph, profile: &ProblemProfile, k: usize, cap: usize) -> Result<Vec<Vec<usize>>> {
    check_cap(g, cap)?;
    let n = g.n();
    let adj = g.adj_masks();
    let all = full(n);
    let mut out = Vec::new();
    fn rec(
        n: usize,
        start: usize,
        left: usize,
        cur: &mut Vec<usize>,
        mask: u64,
        f: &mut dyn FnMut(&[usize], u64),
    ) {
        f(cur, mask);
        if left == 0 {
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(n, v + 1, left - 1, cur, mask | 1 << v, f);
            cur.pop();
        }
    }
    rec(n, 0, k.min(n), &mut Vec::new(), 0, &mut |s, mask| {
        if profile.satisfied_mask(&adj, all & !mask) {
            out.push(s.to_vec());
        }
    });
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// Minimum-weight triangle hitting set; ties broken by size then
/// lexicographic order.
pub fn brute_min_weighted_th(g: &Graph, weights: &[u64], cap: usize) -> Result<(Vec<usize>, u64)> {
    check_cap(g, cap)?;
    let n = g.n();
    let adj = g.adj_masks();
    let all = full(n);
    let th = ProblemProfile::th();
    let mut best: Option<(u64, Vec<usize>)> = None;
    for mask in 0..=all {
        if !th.satisfied_mask(&adj, all & !mask) {
            continue;
        }
        let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let w: u64 = set.iter().map(|&v| weights[v]).sum();
        let better = match &best {
            None => true,
            Some((bw, bs)) => (w, set.len(), &set) < (*bw, bs.len(), bs),
        };
        if better {
            best = Some((w, set));
        }
        if mask == all {
            break;
        }
    }
    let (w, s) = best.expect("full deletion is always feasible");
    Ok((s, w))
}

/// Maximum clique by subset enumeration; lexicographically smallest among maxima.
pub fn brute_max_clique(g: &Graph, cap: usize) -> Result<Vec<usize>> {
    check_cap(g, cap)?;
    let n = g.n();
    let adj = g.adj_masks();
    let mut best: Vec<usize> = Vec::new();
    for mask in 1..=full(n) {
        let mut ok = true;
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            if adj[v] & mask != mask & !(1 << v) {
                ok = false;
                break;
            }
        }
        if ok {
            let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if set.len() > best.len() || (set.len() == best.len() && set < best) {
                best = set;
            }
        }
        if mask == full(n) {
            break;
        }
    }
    Ok(best)
}

/// Maximum matching size by exhaustive edge-subset search (tiny graphs only).
pub fn brute_matching_size(g: &Graph) -> usize {
    fn rec(edges: &[(usize, usize)], i: usize, used: u64) -> usize {
        if i == edges.len() {
            return 0;
        }
        let skip = rec(edges, i + 1, used);
        let (a, b) = edges[i];
        if used >> a & 1 == 0 && used >> b & 1 == 0 {
            skip.max(1 + rec(edges, i + 1, used | 1 << a | 1 << b))
        } else {
            skip
        }
    }
    rec(&g.edges(), 0, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn small_examples() {
        assert_eq!(brute_min_hitting(&named::complete(3), &ProblemProfile::th()).unwrap(), vec![0]);
        assert_eq!(brute_min_hitting(&named::cycle(4), &ProblemProfile::fvs()).unwrap().len(), 1);
        assert_eq!(brute_min_hitting(&named::complete(5), &ProblemProfile::th()).unwrap(), vec![0, 1, 2]);
        let big = named::path(21);
        assert!(matches!(
            brute_min_hitting(&big, &ProblemProfile::th()),
            Err(Error::OracleTooLarge { n: 21, .. })
        ));
    }

    #[test]
    fn lexicographic_tie_break() {
        // Two disjoint triangles: the lex-min pair is {0, 3}.
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(brute_min_hitting(&g, &ProblemProfile::th()).unwrap(), vec![0, 3]);
        let seq = brute_min_hitting_with(&g, &ProblemProfile::th(), 20, Exec::Sequential).unwrap();
        assert_eq!(seq, vec![0, 3]);
    }

    #[test]
    fn weighted_and_clique() {
        let tri = named::complete(3);
        assert_eq!(brute_min_weighted_th(&tri, &[5, 1, 3], 20).unwrap(), (vec![1], 1));
        assert_eq!(brute_max_clique(&named::petersen(), 20).unwrap().len(), 2);
        assert_eq!(brute_max_clique(&named::wheel(5), 20).unwrap(), vec![0, 1, 2]);
        assert_eq!(brute_matching_size(&named::petersen()), 5);
    }

    #[test]
    fn enumeration_counts() {
        let sols = enumerate_solutions(&named::complete(3), &ProblemProfile::th(), 3, 20).unwrap();
        // Any nonempty subset of a triangle hits it.
        assert_eq!(sols.len(), 7);
    }
}
