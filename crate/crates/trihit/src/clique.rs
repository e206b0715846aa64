//! Clique enumeration and exact maximum clique on abstract graphs.

use crate::error::{Error, Result};
use crate::graph::{intersect, Graph};

/// All maximal cliques (sorted, each sorted) via pivoted Bron–Kerbosch.
/// Aborts with `CliqueOverflow` once more than `limit` cliques are found.
pub fn maximal_cliques(g: &Graph, limit: usize) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let p: Vec<usize> = (0..g.n()).collect();
    bk(g, &mut Vec::new(), p, Vec::new(), &mut out, limit)?;
    out.sort();
    Ok(out)
}

fn bk(g: &Graph, r: &mut Vec<usize>, p: Vec<usize>, x: Vec<usize>, out: &mut Vec<Vec<usize>>, limit: usize) -> Result<()> {
    if p.is_empty() {
        if x.is_empty() {
            if out.len() >= limit {
                return Err(Error::CliqueOverflow { count: out.len() + 1, limit });
            }
            let mut c = r.clone();
            c.sort_unstable();
            out.push(c);
        }
        return Ok(());
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .copied()
        .max_by_key(|&u| (intersect(&p, g.neighbors(u)).len(), usize::MAX - u))
        .unwrap();
    let candidates: Vec<usize> = p.iter().copied().filter(|v| !g.has_edge(pivot, *v)).collect();
    let mut p = p;
    let mut x = x;
    for v in candidates {
        let np = intersect(&p, g.neighbors(v));
        let nx = intersect(&x, g.neighbors(v));
        r.push(v);
        bk(g, r, np, nx, out, limit)?;
        r.pop();
        p.retain(|&u| u != v);
        let pos = x.binary_search(&v).unwrap_or_else(|e| e);
        x.insert(pos, v);
    }
    Ok(())
}

/// Exact maximum clique; lexicographically smallest among maximum ones.
pub fn max_clique(g: &Graph) -> Vec<usize> {
    let mut best = Vec::new();
    let p: Vec<usize> = (0..g.n()).collect();
    mc(g, &mut Vec::new(), p, &mut best);
    best
}

fn mc(g: &Graph, r: &mut Vec<usize>, p: Vec<usize>, best: &mut Vec<usize>) {
    if p.is_empty() {
        let mut c = r.clone();
        c.sort_unstable();
        if c.len() > best.len() || (c.len() == best.len() && c < *best) {
            *best = c;
        }
        return;
    }
    // Ties are resolved lexicographically, so only prune strictly smaller.
    if r.len() + p.len() < best.len() {
        return;
    }
    for (i, &v) in p.iter().enumerate() {
        if r.len() + p.len() - i < best.len() {
            return;
        }
        let np = intersect(&p[i + 1..], g.neighbors(v));
        r.push(v);
        mc(g, r, np, best);
        r.pop();
    }
    // The clique `r` itself may be maximal only when extended by nothing.
    if r.len() > best.len() {
        let mut c = r.clone();
        c.sort_unstable();
        *best = c;
    }
}
