use super::cnf::{brute_sat, dpll, preprocess_formula, CnfFormula};
use super::crenellate::crenellate;
use super::reduction::{sat_to_2dir, ReductionOutput};
use crate::error::{Error, Result};
use crate::geometry::{build_graph, slope_count};
use crate::graph::{list_triangles, Graph};
use crate::reduce::WeightedInstance;
use crate::treewidth::{heuristic_decomposition, weighted_th_dp, DP_MAX_BAG};
use std::collections::BTreeSet;

pub const VERIFY_MAX_VARS: usize = 10;
pub const VERIFY_MAX_CLAUSES: usize = 15;
/// Largest scene graph on which the DP cross-check is attempted.
pub const VERIFY_DP_MAX_N: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub sat: bool,
    /// A triangle hitting set of size at most `k` exists.
    pub th_at_k: bool,
    pub agree: bool,
    /// Assignment of the input variables decoded from the hitting set,
    /// when one exists.
    pub assignment: Option<Vec<bool>>,
    pub decoded_satisfies: bool,
    /// Answer of the tree-decomposition DP, when the width allows it.
    pub dp_th_at_k: Option<bool>,
    pub k: usize,
    pub size: usize,
    pub max_degree: usize,
    pub slopes: usize,
    /// Heuristic decomposition width, computed for graphs up to
    /// [`VERIFY_DP_MAX_N`] vertices.
    pub width: Option<usize>,
}

/// Variable `v` is true iff the solution takes more vertical than
/// horizontal sides of polygon `v`.
pub fn decode_assignment(r: &ReductionOutput, solution: &[usize]) -> Vec<bool> {
    let mut taken = vec![false; r.scene.len()];
    for &s in solution {
        taken[s] = true;
    }
    r.polygons
        .iter()
        .map(|p| {
            let v = p.vertical.iter().filter(|&&s| taken[s]).count();
            let h = p.horizontal.iter().filter(|&&s| taken[s]).count();
            v > h
        })
        .collect()
}

fn sorted3(a: usize, b: usize, c: usize) -> (usize, usize, usize) {
    let mut t = [a, b, c];
    t.sort_unstable();
    (t[0], t[1], t[2])
}

/// Exact decision of "triangle hitting set of size `r.k`" for a reduction
/// scene. Each polygon's own triangles are checked to be exactly its corner
/// triangles, so any hitting set needs `k_i` sides of polygon `i` and one of
/// size `k` takes all horizontal or all vertical sides of every polygon. The
/// remaining triangles become clauses over that choice (true = vertical).
/// A found set is checked directly on `g`.
pub fn th_at_k_structural(r: &ReductionOutput, g: &Graph) -> Result<Option<Vec<usize>>> {
    let owners = r.owners();
    let mut side: Vec<Option<(usize, bool)>> = vec![None; g.n()];
    let mut expected = BTreeSet::new();
    for (v, (p, cyc)) in r.polygons.iter().zip(&r.cycles).enumerate() {
        for &h in &p.horizontal {
            side[h] = Some((v, false));
        }
        for &u in &p.vertical {
            side[u] = Some((v, true));
        }
        let len = cyc.len();
        for e in 0..len {
            expected.insert(sorted3(p.edges[e], p.edges[(e + 1) % len], p.corners[(e + 1) % len]));
        }
    }
    let mut internal = BTreeSet::new();
    let mut clauses = BTreeSet::new();
    let mut always_unhit = false;
    for (a, b, c) in list_triangles(g) {
        let o = owners[a];
        if o.is_some() && owners[b] == o && owners[c] == o {
            internal.insert((a, b, c));
            continue;
        }
        let mut lits: Vec<i32> = [a, b, c]
            .iter()
            .filter_map(|&x| side[x].map(|(v, vert)| if vert { v as i32 + 1 } else { -(v as i32 + 1) }))
            .collect();
        lits.sort_unstable();
        lits.dedup();
        if lits.iter().any(|l| lits.contains(&-l)) {
            continue;
        }
        if lits.is_empty() {
            always_unhit = true;
        }
        clauses.insert(lits);
    }
    if internal != expected {
        return Err(Error::Precondition("polygon triangles are not exactly the corner triangles".into()));
    }
    if always_unhit {
        return Ok(None);
    }
    let polarity = CnfFormula { num_vars: r.polygons.len(), clauses: clauses.into_iter().collect() };
    let Some(choice) = dpll(&polarity) else { return Ok(None) };
    let mut sol: Vec<usize> = r
        .polygons
        .iter()
        .zip(&choice)
        .flat_map(|(p, &vert)| if vert { p.vertical.clone() } else { p.horizontal.clone() })
        .collect();
    sol.sort_unstable();
    let (rest, _) = g.without(&sol);
    if sol.len() != r.k || !list_triangles(&rest).is_empty() {
        return Err(Error::Precondition("decoded hitting set fails the direct check".into()));
    }
    Ok(Some(sol))
}

/// Builds the reduction scene of `f` (crenellated with parameter `t` if
/// given) and compares satisfiability of `f` with whether the scene has a
/// triangle hitting set of size `k`.
pub fn verify_reduction(f: &CnfFormula, t: Option<usize>) -> Result<(ReductionOutput, VerifyReport)> {
    if f.num_vars > VERIFY_MAX_VARS || f.clauses.len() > VERIFY_MAX_CLAUSES {
        return Err(Error::SizeCap(format!(
            "verification supports <= {VERIFY_MAX_VARS} variables and <= {VERIFY_MAX_CLAUSES} clauses"
        )));
    }
    let sat = brute_sat(f)?.is_some();
    let pre = preprocess_formula(f)?;
    let mut r = sat_to_2dir(&pre.formula)?;
    if let Some(t) = t {
        r = crenellate(&r, t)?;
    }
    let g = build_graph(&r.scene);
    let found = th_at_k_structural(&r, &g)?;
    let td = (g.n() <= VERIFY_DP_MAX_N).then(|| heuristic_decomposition(&g));
    let width = td.as_ref().map(|td| td.width());
    let dp_th_at_k = match &td {
        Some(td) if td.width() < DP_MAX_BAG => Some(weighted_th_dp(&WeightedInstance::unit(&g, r.k as u64), td)?.is_some()),
        _ => None,
    };
    let assignment = found.as_ref().filter(|_| !pre.trivially_unsat).map(|sol| {
        let mut a = pre.restore(&decode_assignment(&r, sol));
        a.truncate(f.num_vars);
        a
    });
    let decoded_satisfies = assignment.as_ref().is_some_and(|a| f.is_satisfied_by(a));
    let th_at_k = found.is_some();
    let report = VerifyReport {
        sat,
        th_at_k,
        agree: sat == th_at_k && dp_th_at_k.is_none_or(|d| d == th_at_k),
        assignment,
        decoded_satisfies,
        dp_th_at_k,
        k: r.k,
        size: g.n(),
        max_degree: g.max_degree(),
        slopes: slope_count(&r.scene),
        width,
    };
    Ok((r, report))
}
