//! Text formats.
//!
//! Graph: `p edge <n> <m>` then `e <u> <v>` lines, 0-based; `c` comments.
//!
//! Scene: `scene segments|squares <n>` then `SEG x1 y1 x2 y2` or
//! `SQR x y side` lines; coordinates are integers or `p/q`; `#` comments.
//!
//! Tree decomposition (PACE `.td`): `s td <bags> <width+1> <n>`, then
//! `b <id> <v...>` with 1-based bag ids and vertices, then tree edges
//! `<id> <id>`; `c` comments.
//!
//! CNF: DIMACS `p cnf <n> <m>` with 0-terminated clauses; `c` comments.
//!
//! Vertex lists (solutions, anchor sets): whitespace-separated ids.

use crate::error::{Error, Result};
use crate::gadgets::CnfFormula;
use crate::geometry::{Point, Rational, Scene, Segment, Square};
use crate::graph::Graph;
use crate::treewidth::TreeDecomposition;
use num_bigint::BigInt;
use std::fmt::Write;
use std::str::FromStr;

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn num<T: FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| perr(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| perr(line, format!("bad {what} '{tok}'")))
}

/// Non-empty, non-comment lines with their 1-based numbers.
fn content_lines<'a>(text: &'a str, comment: &'a str) -> impl Iterator<Item = (usize, &'a str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(move |(_, l)| !l.is_empty() && !l.starts_with(comment))
}

pub fn parse_rational(tok: &str, line: usize) -> Result<Rational> {
    let bad = || perr(line, format!("malformed rational '{tok}'"));
    let (p, q) = match tok.split_once('/') {
        Some((p, q)) => (p, q),
        None => (tok, "1"),
    };
    let p = BigInt::from_str(p).map_err(|_| bad())?;
    let q = BigInt::from_str(q).map_err(|_| bad())?;
    if q == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

pub fn format_rational(v: &Rational) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (ln, l) in content_lines(text, "c") {
        let mut t = l.split_whitespace();
        match t.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(perr(ln, "duplicate header"));
                }
                if t.next() != Some("edge") {
                    return Err(perr(ln, "expected 'p edge <n> <m>'"));
                }
                header = Some((num(t.next(), ln, "vertex count")?, num(t.next(), ln, "edge count")?));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| perr(ln, "edge before header"))?;
                let u: usize = num(t.next(), ln, "endpoint")?;
                let v: usize = num(t.next(), ln, "endpoint")?;
                if u >= n || v >= n || u == v {
                    return Err(perr(ln, format!("invalid edge ({u},{v}) for n={n}")));
                }
                edges.push((u, v));
            }
            Some(other) => return Err(perr(ln, format!("unknown line type '{other}'"))),
            None => {}
        }
    }
    let (n, m) = header.ok_or_else(|| perr(0, "missing 'p edge' header"))?;
    if edges.len() != m {
        return Err(perr(0, format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, &edges)
}

pub fn write_graph(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("p edge {} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

pub fn parse_scene(text: &str) -> Result<Scene> {
    let mut lines = content_lines(text, "#");
    let (ln, head) = lines.next().ok_or_else(|| perr(0, "missing 'scene' header"))?;
    let mut t = head.split_whitespace();
    if t.next() != Some("scene") {
        return Err(perr(ln, "expected 'scene segments|squares <n>'"));
    }
    let kind = t.next().ok_or_else(|| perr(ln, "missing scene kind"))?.to_string();
    if kind != "squares" && kind != "segments" {
        return Err(perr(ln, format!("unknown scene kind '{kind}'")));
    }
    let n: usize = num(t.next(), ln, "object count")?;
    let mut segs = Vec::new();
    let mut sqs = Vec::new();
    for (ln, l) in lines {
        let mut t = l.split_whitespace();
        let tag = t.next().unwrap_or_default();
        let vals: Vec<Rational> = t.map(|tok| parse_rational(tok, ln)).collect::<Result<_>>()?;
        match (kind.as_str(), tag) {
            ("segments", "SEG") if vals.len() == 4 => segs.push(Segment::new(
                Point::new(vals[0].clone(), vals[1].clone()),
                Point::new(vals[2].clone(), vals[3].clone()),
            )),
            ("squares", "SQR") if vals.len() == 3 => {
                if vals[2] <= Rational::from_integer(0.into()) {
                    return Err(perr(ln, "square side must be positive"));
                }
                sqs.push(Square::new(vals[0].clone(), vals[1].clone(), vals[2].clone()));
            }
            ("segments", "SEG") | ("squares", "SQR") => return Err(perr(ln, format!("wrong number of values for {tag}"))),
            _ => return Err(perr(ln, format!("unexpected object '{tag}' in {kind} scene"))),
        }
    }
    let scene = if kind == "squares" { Scene::Squares(sqs) } else { Scene::Segments(segs) };
    if scene.len() != n {
        return Err(perr(0, format!("header announces {n} objects, found {}", scene.len())));
    }
    Ok(scene)
}

pub fn object_line(scene: &Scene, i: usize) -> String {
    let f = format_rational;
    match scene {
        Scene::Segments(s) => format!("SEG {} {} {} {}", f(&s[i].a.x), f(&s[i].a.y), f(&s[i].b.x), f(&s[i].b.y)),
        Scene::Squares(q) => format!("SQR {} {} {}", f(&q[i].x), f(&q[i].y), f(&q[i].side)),
    }
}

pub fn write_scene(scene: &Scene) -> String {
    let kind = match scene {
        Scene::Segments(_) => "segments",
        Scene::Squares(_) => "squares",
    };
    let mut out = format!("scene {kind} {}\n", scene.len());
    for i in 0..scene.len() {
        out.push_str(&object_line(scene, i));
        out.push('\n');
    }
    out
}

pub fn parse_td(text: &str) -> Result<(TreeDecomposition, usize)> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut bags: Vec<Option<Vec<usize>>> = Vec::new();
    let mut edges = Vec::new();
    for (ln, l) in content_lines(text, "c") {
        let mut t = l.split_whitespace();
        match t.next() {
            Some("s") => {
                if t.next() != Some("td") {
                    return Err(perr(ln, "expected 's td <bags> <width+1> <n>'"));
                }
                let nb: usize = num(t.next(), ln, "bag count")?;
                header = Some((nb, num(t.next(), ln, "bag size")?, num(t.next(), ln, "vertex count")?));
                bags = vec![None; nb];
            }
            Some("b") => {
                let (nb, _, n) = header.ok_or_else(|| perr(ln, "bag before header"))?;
                let id: usize = num(t.next(), ln, "bag id")?;
                if id == 0 || id > nb {
                    return Err(perr(ln, format!("bag id {id} out of range")));
                }
                let mut bag = Vec::new();
                for tok in t {
                    let v: usize = num(Some(tok), ln, "vertex")?;
                    if v == 0 || v > n {
                        return Err(perr(ln, format!("vertex {v} out of range")));
                    }
                    bag.push(v - 1);
                }
                bag.sort_unstable();
                bag.dedup();
                bags[id - 1] = Some(bag);
            }
            Some(a) => {
                let (nb, _, _) = header.ok_or_else(|| perr(ln, "edge before header"))?;
                let a: usize = num(Some(a), ln, "bag id")?;
                let b: usize = num(t.next(), ln, "bag id")?;
                if a == 0 || b == 0 || a > nb || b > nb {
                    return Err(perr(ln, "tree edge out of range"));
                }
                edges.push((a - 1, b - 1));
            }
            None => {}
        }
    }
    let (_, width1, n) = header.ok_or_else(|| perr(0, "missing 's td' header"))?;
    let bags: Vec<Vec<usize>> =
        bags.into_iter().enumerate().map(|(i, b)| b.ok_or_else(|| perr(0, format!("bag {} missing", i + 1)))).collect::<Result<_>>()?;
    let td = TreeDecomposition { bags, edges };
    if td.bags.iter().map(Vec::len).max().unwrap_or(0) != width1 {
        return Err(perr(0, "announced bag size does not match the bags"));
    }
    Ok((td, n))
}

pub fn write_td(td: &TreeDecomposition, n: usize) -> String {
    let width1 = td.bags.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = format!("s td {} {} {}\n", td.bags.len(), width1, n);
    for (i, b) in td.bags.iter().enumerate() {
        write!(out, "b {}", i + 1).unwrap();
        for v in b {
            write!(out, " {}", v + 1).unwrap();
        }
        out.push('\n');
    }
    for &(a, b) in &td.edges {
        writeln!(out, "{} {}", a + 1, b + 1).unwrap();
    }
    out
}

pub fn parse_cnf(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    for (ln, l) in content_lines(text, "c") {
        if l.starts_with('%') {
            break;
        }
        let mut t = l.split_whitespace().peekable();
        if t.peek() == Some(&"p") {
            t.next();
            if t.next() != Some("cnf") {
                return Err(perr(ln, "expected 'p cnf <n> <m>'"));
            }
            header = Some((num(t.next(), ln, "variable count")?, num(t.next(), ln, "clause count")?));
            continue;
        }
        let (n, _) = header.ok_or_else(|| perr(ln, "clause before header"))?;
        for tok in t {
            let l: i32 = num(Some(tok), ln, "literal")?;
            if l == 0 {
                if current.is_empty() {
                    return Err(perr(ln, "empty clause"));
                }
                clauses.push(std::mem::take(&mut current));
            } else if l.unsigned_abs() as usize > n {
                return Err(perr(ln, format!("literal {l} exceeds {n} variables")));
            } else {
                current.push(l);
            }
        }
    }
    if !current.is_empty() {
        clauses.push(current);
    }
    let (n, m) = header.ok_or_else(|| perr(0, "missing 'p cnf' header"))?;
    if clauses.len() != m {
        return Err(perr(0, format!("header announces {m} clauses, found {}", clauses.len())));
    }
    CnfFormula::new(n, clauses)
}

pub fn write_cnf(f: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", f.num_vars, f.clauses.len());
    for c in &f.clauses {
        for l in c {
            write!(out, "{l} ").unwrap();
        }
        out.push_str("0\n");
    }
    out
}

pub fn parse_vertex_list(text: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (ln, l) in content_lines(text, "#") {
        for tok in l.split_whitespace() {
            out.push(num(Some(tok), ln, "vertex id")?);
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

pub fn write_vertex_list(vs: &[usize]) -> String {
    vs.iter().map(|v| format!("{v}\n")).collect()
}
