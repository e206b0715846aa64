//! Clique branching, bundle branching and their composition.

use crate::clique::max_clique;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::geometry::{
    contact_max_clique_unchecked, mu_star_values, occurrence_counts, square_max_clique, validate_contact, Scene,
    CONTACT_CLIQUE_FACTOR,
};
use crate::graph::{greedy_bundle_hitting, max_matching_size, Graph};
use crate::matching::max_matching;
use crate::profile::ProblemProfile;

/// Finds a large clique among the `alive` vertices of `g`. The result is
/// within a factor `alpha` of the maximum and uses ids of `g`.
pub trait CliqueFinder: Sync {
    fn alpha(&self) -> usize {
        1
    }
    fn find(&self, g: &Graph, alive: &[usize]) -> Result<Vec<usize>>;
}

/// Exact search on the graph alone.
#[derive(Debug, Clone, Copy, Default)]
pub struct ExactCliques;

impl CliqueFinder for ExactCliques {
    fn find(&self, g: &Graph, alive: &[usize]) -> Result<Vec<usize>> {
        let (h, map) = g.induced(alive);
        Ok(max_clique(&h).into_iter().map(|i| map[i]).collect())
    }
}

/// Point stabbing over a square scene whose ids match the graph.
#[derive(Debug, Clone)]
pub struct SquareCliques {
    scene: Scene,
}

impl SquareCliques {
    pub fn new(scene: Scene) -> Result<Self> {
        if scene.squares().is_none() {
            return Err(Error::InvalidArgument("square clique finder needs a square scene".into()));
        }
        Ok(SquareCliques { scene })
    }
}

impl CliqueFinder for SquareCliques {
    fn find(&self, _g: &Graph, alive: &[usize]) -> Result<Vec<usize>> {
        let sub = self.scene.subscene(alive);
        Ok(square_max_clique(&sub)?.into_iter().map(|i| alive[i]).collect())
    }
}

/// Maximal-clique enumeration, valid for contact-segment scenes.
#[derive(Debug, Clone, Copy)]
pub struct ContactCliques {
    factor: usize,
}

impl ContactCliques {
    pub fn new(scene: &Scene) -> Result<Self> {
        if !validate_contact(scene) {
            return Err(Error::NotContact("contact clique finder needs a contact scene".into()));
        }
        Ok(ContactCliques { factor: CONTACT_CLIQUE_FACTOR })
    }
}

impl CliqueFinder for ContactCliques {
    fn find(&self, g: &Graph, alive: &[usize]) -> Result<Vec<usize>> {
        let (h, map) = g.induced(alive);
        let (c, _) = contact_max_clique_unchecked(&h, self.factor)?;
        Ok(c.into_iter().map(|i| map[i]).collect())
    }
}

/// `D` is deleted (in the solution), `U` is kept (outside it).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BranchPair {
    pub d: Vec<usize>,
    pub u: Vec<usize>,
}

impl BranchPair {
    /// Whether `solution` (sorted) is represented by this pair.
    pub fn represents(&self, solution: &[usize]) -> bool {
        self.d.iter().all(|v| solution.binary_search(v).is_ok())
            && self.u.iter().all(|v| solution.binary_search(v).is_err())
    }
}

fn union_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = a.iter().chain(b).copied().collect();
    v.sort_unstable();
    v.dedup();
    v
}

fn subsets_up_to(items: &[usize], max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &x in items {
        let grown: Vec<Vec<usize>> =
            out.iter().filter(|s| s.len() < max).map(|s| s.iter().copied().chain([x]).collect()).collect();
        out.extend(grown);
    }
    out
}

/// Branches until no clique larger than `p` survives in `g - D`. Every
/// solution of size at most `k` is represented by exactly one pair.
pub fn clique_branch(
    g: &Graph,
    k: usize,
    p: usize,
    profile: &ProblemProfile,
    finder: &dyn CliqueFinder,
    exec: Exec,
) -> Result<Vec<BranchPair>> {
    let c = profile.c_pi;
    if p < 6 * finder.alpha() * c {
        return Err(Error::InvalidArgument(format!("clique branching needs p >= {}, got {p}", 6 * finder.alpha() * c)));
    }
    let mut out = clique_rec(g, k, p, 2 * c, finder, exec, BranchPair::default())?;
    out.sort();
    Ok(out)
}

fn clique_rec(
    g: &Graph,
    k: usize,
    p: usize,
    keep: usize,
    finder: &dyn CliqueFinder,
    exec: Exec,
    pair: BranchPair,
) -> Result<Vec<BranchPair>> {
    let alive: Vec<usize> = (0..g.n()).filter(|v| pair.d.binary_search(v).is_err()).collect();
    let clique = finder.find(g, &alive)?;
    if clique.len() <= p {
        return Ok(vec![pair]);
    }
    let required: Vec<usize> = clique.iter().copied().filter(|v| pair.u.binary_search(v).is_ok()).collect();
    if required.len() > keep {
        return Ok(Vec::new());
    }
    let free: Vec<usize> = clique.iter().copied().filter(|v| pair.u.binary_search(v).is_err()).collect();
    let children: Vec<BranchPair> = subsets_up_to(&free, keep - required.len())
        .into_iter()
        .filter_map(|extra| {
            let kept = union_sorted(&required, &extra);
            let gone: Vec<usize> = clique.iter().copied().filter(|v| kept.binary_search(v).is_err()).collect();
            let d = union_sorted(&pair.d, &gone);
            (d.len() <= k).then(|| BranchPair { d, u: union_sorted(&pair.u, &kept) })
        })
        .collect();
    let results = exec.map(&children, |child| clique_rec(g, k, p, keep, finder, exec, child.clone()));
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

/// Whether `g - x` has no `c`-bundle.
pub fn is_bundle_hitting(g: &Graph, x: &[usize], c: usize) -> bool {
    let mut out = vec![false; g.n()];
    for &v in x {
        out[v] = true;
    }
    (0..g.n()).filter(|&v| !out[v]).all(|v| {
        let nb: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| !out[u]).collect();
        max_matching_size(&g.induced(&nb).0) < c
    })
}

/// Maximum matching of `g[N(v) \ blocked]` in ids of `g`.
fn nbhd_matching(g: &Graph, v: usize, blocked: &[bool]) -> Vec<(usize, usize)> {
    let nb: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| !blocked[u]).collect();
    let (h, map) = g.induced(&nb);
    max_matching(&h).into_iter().map(|(a, b)| (map[a], map[b])).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BundleBranch {
    pub pair: BranchPair,
    /// Matched neighborhood vertices collected for `X \ D`, outside `X`.
    pub z: Vec<usize>,
}

/// Branches on vertices of the bundle hitting set `x` whose neighborhood
/// outside `X ∪ Z` holds a matching of size at least `p`, then fills `Z`
/// so that every `v ∈ X \ D` has `μ(g[N(v) \ (X ∪ Z)]) < c`.
pub fn bundle_branch(
    g: &Graph,
    k: usize,
    p: usize,
    profile: &ProblemProfile,
    x: &[usize],
    exec: Exec,
) -> Result<Vec<BundleBranch>> {
    let c = profile.c_pi;
    if p < 2 * c {
        return Err(Error::InvalidArgument(format!("bundle branching needs p >= {}, got {p}", 2 * c)));
    }
    let mut x = x.to_vec();
    x.sort_unstable();
    x.dedup();
    if !is_bundle_hitting(g, &x, c) {
        return Err(Error::Precondition(format!("X is not a {c}-bundle hitting set")));
    }
    let mut blocked = vec![false; g.n()];
    for &v in &x {
        blocked[v] = true;
    }
    let ctx = BundleCtx { g, p, c, x: &x, exec };
    let state = BundleState { pair: BranchPair::default(), blocked, budget: k as i64 };
    let mut out = ctx.rec(0, state);
    out.sort();
    Ok(out)
}

struct BundleCtx<'a> {
    g: &'a Graph,
    p: usize,
    c: usize,
    x: &'a [usize],
    exec: Exec,
}

#[derive(Clone)]
struct BundleState {
    pair: BranchPair,
    /// `X ∪ Z`.
    blocked: Vec<bool>,
    /// `k - |D|` minus certified solution vertices inside `Z`.
    budget: i64,
}

impl BundleCtx<'_> {
    fn rec(&self, mut idx: usize, state: BundleState) -> Vec<BundleBranch> {
        while idx < self.x.len() {
            let v = self.x[idx];
            let m = nbhd_matching(self.g, v, &state.blocked);
            if m.len() >= self.p {
                let mut a = state.clone();
                a.pair.d = union_sorted(&a.pair.d, &[v]);
                a.budget -= 1;
                let mut b = state;
                b.pair.u = union_sorted(&b.pair.u, &[v]);
                for &(s, t) in &m {
                    b.blocked[s] = true;
                    b.blocked[t] = true;
                }
                b.budget -= (m.len() + 1 - self.c) as i64;
                let kids: Vec<BundleState> = [a, b].into_iter().filter(|s| s.budget >= 0).collect();
                return self.exec.map(&kids, |s| self.rec(idx + 1, s.clone())).into_iter().flatten().collect();
            }
            idx += 1;
        }
        vec![self.fill(state)]
    }

    fn fill(&self, mut state: BundleState) -> BundleBranch {
        for &v in self.x {
            if state.pair.d.binary_search(&v).is_ok() {
                continue;
            }
            let m = nbhd_matching(self.g, v, &state.blocked);
            if m.len() >= self.c {
                for (s, t) in m {
                    state.blocked[s] = true;
                    state.blocked[t] = true;
                }
            }
        }
        let z = (0..self.g.n()).filter(|&v| state.blocked[v] && self.x.binary_search(&v).is_err()).collect();
        BundleBranch { pair: state.pair, z }
    }
}

/// Outcome of [`remove_big_mu_star`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuStarRemoval {
    /// `B = {v : μ*(v) >= τ}`.
    pub b: Vec<usize>,
    /// Measured occurrence bound of the subneighborhood function.
    pub occurrence: usize,
    /// `μ*` of `g - B` with every subneighborhood restricted to `g - B`.
    pub mu_star_after: usize,
    /// `|B| (τ - c + 1) <= occurrence |M|`.
    pub within_bound: bool,
}

/// Vertices whose subneighborhood holds a matching of size at least `tau`.
/// `sets[v]` is the subneighborhood of `v` in `g`.
pub fn remove_big_mu_star(
    g: &Graph,
    m: &[usize],
    sets: &[Vec<usize>],
    tau: usize,
    profile: &ProblemProfile,
    exec: Exec,
) -> Result<MuStarRemoval> {
    let c = profile.c_pi;
    if tau < c {
        return Err(Error::Precondition(format!("tau >= c fails: {tau} < {c}")));
    }
    if sets.len() != g.n() {
        return Err(Error::InvalidArgument("one subneighborhood per vertex required".into()));
    }
    if !is_bundle_hitting(g, m, c) {
        return Err(Error::Precondition("M is not a bundle hitting set".into()));
    }
    let mut in_m = vec![false; g.n()];
    for &v in m {
        in_m[v] = true;
    }
    for &v in m {
        if nbhd_matching(g, v, &in_m).len() >= c {
            return Err(Error::Precondition(format!("mu(g[N({v}) - M]) < c fails")));
        }
    }
    let values = mu_star_values(g, sets, exec);
    let b: Vec<usize> = (0..g.n()).filter(|&v| values[v] >= tau).collect();
    let occurrence = occurrence_counts(sets, g.n()).into_iter().max().unwrap_or(0);
    let mut gone = vec![false; g.n()];
    for &v in &b {
        gone[v] = true;
    }
    let restricted: Vec<Vec<usize>> = (0..g.n())
        .filter(|&v| !gone[v])
        .map(|v| sets[v].iter().copied().filter(|&u| !gone[u]).collect())
        .collect();
    let mu_star_after = mu_star_values(g, &restricted, exec).into_iter().max().unwrap_or(0);
    let within_bound = b.len() * (tau + 1 - c) <= occurrence * m.len();
    Ok(MuStarRemoval { b, occurrence, mu_star_after, within_bound })
}

/// One reduced instance produced by [`both_branchings`].
#[derive(Debug, Clone)]
pub struct BranchInstance {
    pub graph: Graph,
    /// Instance vertex to original vertex.
    pub map: Vec<usize>,
    /// Bundle hitting set with `μ(graph[N(v) \ M]) < c` on `M`; instance ids.
    pub m: Vec<usize>,
    pub k_residual: usize,
    pub d_total: Vec<usize>,
    pub u_total: Vec<usize>,
    /// Size of the greedy bundle hitting set on the post-clique graph.
    pub x_size: usize,
    /// The greedy packing already proves the instance negative.
    pub dummy_no: bool,
}

impl BranchInstance {
    pub fn pair(&self) -> BranchPair {
        BranchPair { d: self.d_total.clone(), u: self.u_total.clone() }
    }

    /// Original ids of `M`.
    pub fn m_original(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.m.iter().map(|&i| self.map[i]).collect();
        v.sort_unstable();
        v
    }
}

fn dummy_no(pair: BranchPair, x_size: usize) -> BranchInstance {
    BranchInstance {
        graph: Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).expect("triangle"),
        map: Vec::new(),
        m: Vec::new(),
        k_residual: 0,
        d_total: pair.d,
        u_total: pair.u,
        x_size,
        dummy_no: true,
    }
}

/// Clique branching, then bundle branching on every resulting graph.
/// `(g, k)` is positive iff some non-dummy instance `(graph, k_residual)` is.
pub fn both_branchings(
    g: &Graph,
    k: usize,
    p: usize,
    profile: &ProblemProfile,
    finder: &dyn CliqueFinder,
    exec: Exec,
) -> Result<Vec<BranchInstance>> {
    let c = profile.c_pi;
    let lo = 6 * finder.alpha() * c;
    if p < lo || p > k.max(lo) {
        return Err(Error::InvalidArgument(format!("p must lie in [{lo}, {}], got {p}", k.max(lo))));
    }
    let pairs = clique_branch(g, k, p, profile, finder, exec)?;
    let per_pair: Vec<Result<Vec<BranchInstance>>> = exec.map(&pairs, |pair| {
        let k1 = k - pair.d.len();
        let (g1, map1) = g.without(&pair.d);
        let x = greedy_bundle_hitting(&g1, c)?;
        if x.len() > (2 * c + 1) * k1 {
            return Ok(vec![dummy_no(pair.clone(), x.len())]);
        }
        let branches = bundle_branch(&g1, k1, p, profile, &x, exec)?;
        Ok(branches
            .into_iter()
            .map(|b| {
                let (g2, map2) = g1.without(&b.pair.d);
                let mut pos = vec![usize::MAX; g1.n()];
                for (i, &v) in map2.iter().enumerate() {
                    pos[v] = i;
                }
                let mut m: Vec<usize> = x
                    .iter()
                    .filter(|v| b.pair.d.binary_search(v).is_err())
                    .chain(&b.z)
                    .map(|&v| pos[v])
                    .collect();
                m.sort_unstable();
                let lift = |s: &[usize]| -> Vec<usize> { s.iter().map(|&v| map1[v]).collect() };
                BranchInstance {
                    map: map2.iter().map(|&v| map1[v]).collect(),
                    graph: g2,
                    m,
                    k_residual: k1 - b.pair.d.len(),
                    d_total: union_sorted(&pair.d, &lift(&b.pair.d)),
                    u_total: union_sorted(&pair.u, &lift(&b.pair.u)),
                    x_size: x.len(),
                    dummy_no: false,
                }
            })
            .collect())
    });
    let mut out = Vec::new();
    for r in per_pair {
        out.extend(r?);
    }
    out.sort_by(|a, b| (&a.d_total, &a.u_total).cmp(&(&b.d_total, &b.u_total)));
    Ok(out)
}
