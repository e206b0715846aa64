use crate::error::{Error, Result};
use std::collections::BTreeSet;

/// CNF formula over variables `1..=num_vars`; literal `v` or `-v`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CnfFormula {
    pub num_vars: usize,
    pub clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        for (i, c) in clauses.iter().enumerate() {
            if c.is_empty() {
                return Err(Error::InvalidArgument(format!("clause {i} is empty")));
            }
            if let Some(&l) = c.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize > num_vars) {
                return Err(Error::InvalidArgument(format!("clause {i} has literal {l} outside 1..={num_vars}")));
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    /// `assignment[v - 1]` is the value of variable `v`.
    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0)))
    }

    /// Ready for the 2-DIR reduction: clauses of size 2 or 3, no repeated
    /// variable in a clause, and no 3-clause with uniform signs.
    pub fn is_preprocessed(&self) -> bool {
        self.clauses.iter().all(|c| {
            let vars: BTreeSet<u32> = c.iter().map(|l| l.unsigned_abs()).collect();
            let pos = c.iter().filter(|&&l| l > 0).count();
            (2..=3).contains(&c.len()) && vars.len() == c.len() && !(c.len() == 3 && (pos == 0 || pos == 3))
        })
    }
}

pub const SAT_MAX_VARS: usize = 24;

/// Lexicographically first satisfying assignment (false < true, variable 1
/// most significant), by exhaustive search.
pub fn brute_sat(f: &CnfFormula) -> Result<Option<Vec<bool>>> {
    if f.num_vars > SAT_MAX_VARS {
        return Err(Error::SizeCap(format!("brute-force SAT supports <= {SAT_MAX_VARS} variables")));
    }
    let n = f.num_vars;
    for bits in 0u64..1 << n {
        let a: Vec<bool> = (0..n).map(|i| bits >> (n - 1 - i) & 1 == 1).collect();
        if f.is_satisfied_by(&a) {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

/// Satisfying assignment by DPLL with unit propagation; unassigned
/// variables are set to false.
pub fn dpll(f: &CnfFormula) -> Option<Vec<bool>> {
    let mut assign: Vec<Option<bool>> = vec![None; f.num_vars];
    dpll_rec(&f.clauses, &mut assign).then(|| assign.iter().map(|a| a.unwrap_or(false)).collect())
}

fn lit_value(assign: &[Option<bool>], l: i32) -> Option<bool> {
    assign[l.unsigned_abs() as usize - 1].map(|v| v == (l > 0))
}

fn dpll_rec(clauses: &[Vec<i32>], assign: &mut Vec<Option<bool>>) -> bool {
    let mut trail = Vec::new();
    let ok = loop {
        let mut unit = None;
        let mut conflict = false;
        for c in clauses {
            if c.iter().any(|&l| lit_value(assign, l) == Some(true)) {
                continue;
            }
            let mut open = c.iter().filter(|&&l| lit_value(assign, l).is_none());
            match (open.next(), open.next()) {
                (None, _) => {
                    conflict = true;
                    break;
                }
                (Some(&l), None) => {
                    unit = Some(l);
                    break;
                }
                _ => {}
            }
        }
        if conflict {
            break false;
        }
        let Some(l) = unit else { break true };
        assign[l.unsigned_abs() as usize - 1] = Some(l > 0);
        trail.push(l.unsigned_abs() as usize - 1);
    };
    if ok {
        let branch = clauses
            .iter()
            .filter(|c| !c.iter().any(|&l| lit_value(assign, l) == Some(true)))
            .flat_map(|c| c.iter())
            .find(|&&l| lit_value(assign, l).is_none());
        let Some(&l) = branch else { return true };
        let v = l.unsigned_abs() as usize - 1;
        for value in [l > 0, l < 0] {
            assign[v] = Some(value);
            if dpll_rec(clauses, assign) {
                return true;
            }
        }
        assign[v] = None;
    }
    for v in trail {
        assign[v] = None;
    }
    false
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Preprocessed {
    pub formula: CnfFormula,
    /// Values fixed by unit propagation, per input variable.
    pub fixed: Vec<Option<bool>>,
    /// Unit propagation derived the empty clause; `formula` is then a fixed
    /// unsatisfiable stand-in.
    pub trivially_unsat: bool,
}

impl Preprocessed {
    /// Extends an assignment of the processed formula to the input variables.
    pub fn restore(&self, assignment: &[bool]) -> Vec<bool> {
        self.fixed.iter().enumerate().map(|(i, f)| f.unwrap_or_else(|| assignment.get(i).copied().unwrap_or(false))).collect()
    }
}

/// The four 2-clauses over two variables.
pub fn unsat_standin() -> CnfFormula {
    CnfFormula { num_vars: 2, clauses: vec![vec![1, 2], vec![1, -2], vec![-1, 2], vec![-1, -2]] }
}

/// Equisatisfiable formula accepted by the reduction. Literals are
/// deduplicated, tautologies dropped, unit clauses propagated, and uniform
/// 3-clauses split with a fresh variable: `a ∨ b ∨ c` becomes
/// `(a ∨ b ∨ ¬y) ∧ (c ∨ y)`, and dually for all-negative clauses.
pub fn preprocess_formula(f: &CnfFormula) -> Result<Preprocessed> {
    let n = f.num_vars;
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    for (i, c) in f.clauses.iter().enumerate() {
        let mut lits: Vec<i32> = c.clone();
        lits.sort_by_key(|l| (l.unsigned_abs(), *l));
        lits.dedup();
        if lits.is_empty() || lits.len() > 3 {
            return Err(Error::InvalidArgument(format!("clause {i} must have 1 to 3 literals")));
        }
        if lits.windows(2).any(|w| w[0] == -w[1]) {
            continue;
        }
        clauses.push(lits);
    }
    let mut fixed: Vec<Option<bool>> = vec![None; n];
    while let Some(unit) = clauses.iter().find(|c| c.len() == 1).map(|c| c[0]) {
        fixed[unit.unsigned_abs() as usize - 1] = Some(unit > 0);
        let mut next = Vec::with_capacity(clauses.len());
        for c in clauses {
            if c.contains(&unit) {
                continue;
            }
            let reduced: Vec<i32> = c.into_iter().filter(|&l| l != -unit).collect();
            if reduced.is_empty() {
                return Ok(Preprocessed { formula: unsat_standin(), fixed, trivially_unsat: true });
            }
            next.push(reduced);
        }
        clauses = next;
    }
    let mut num_vars = n;
    let mut out = Vec::with_capacity(clauses.len());
    for c in clauses {
        let pos = c.iter().filter(|&&l| l > 0).count();
        if c.len() == 3 && (pos == 3 || pos == 0) {
            num_vars += 1;
            let y = num_vars as i32;
            let s = if pos == 3 { 1 } else { -1 };
            out.push(vec![c[0], c[1], -s * y]);
            out.push(vec![c[2], s * y]);
        } else {
            out.push(c);
        }
    }
    Ok(Preprocessed { formula: CnfFormula { num_vars, clauses: out }, fixed, trivially_unsat: false })
}
