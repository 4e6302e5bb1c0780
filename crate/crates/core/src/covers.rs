//! Perfect matching covers, the perfect matching index and quasi-bipartite graphs.

use crate::budget::Budget;
use crate::colouring::graph_is_colourable;
use crate::constructions::{three_sum, Wiring};
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{bridges, components, contract, delete_vertices, is_two_connected, CubicGraph};
use crate::matching::{perfect_matchings, pole_perfect_matchings, PerfectMatching};
use serde::Serialize;
use std::time::Duration;

/// A list of perfect matchings with per-edge multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingCover {
    pub matchings: Vec<PerfectMatching>,
    pub multiplicity: Vec<usize>,
}

impl MatchingCover {
    pub fn new(g: &CubicGraph, matchings: Vec<PerfectMatching>) -> Self {
        let mut multiplicity = vec![0; g.edge_count()];
        for m in &matchings {
            for e in m.0.iter() {
                multiplicity[e] += 1;
            }
        }
        MatchingCover { matchings, multiplicity }
    }

    pub fn covers_all(&self) -> bool {
        self.multiplicity.iter().all(|&k| k > 0)
    }

    pub fn is_berge(&self) -> bool {
        self.matchings.len() == 5 && self.covers_all()
    }

    pub fn is_fulkerson(&self) -> bool {
        self.matchings.len() == 6 && self.multiplicity.iter().all(|&k| k == 2)
    }
}

/// Minimum cover size, or a statement that it exceeds the cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum CoverIndex {
    Exact(usize),
    AboveCap(usize),
}

impl CoverIndex {
    pub fn value(self) -> Option<usize> {
        match self {
            CoverIndex::Exact(k) => Some(k),
            CoverIndex::AboveCap(_) => None,
        }
    }

    pub fn at_least(self, k: usize) -> bool {
        match self {
            CoverIndex::Exact(v) => v >= k,
            CoverIndex::AboveCap(c) => c + 1 >= k,
        }
    }
}

/// Exact set cover by iterative deepening. Branches on the uncovered element
/// with the fewest covering sets.
struct CoverSearch<'a> {
    sets: &'a [u128],
    by_elem: Vec<Vec<usize>>,
    budget: Budget,
    steps: u32,
}

impl CoverSearch<'_> {
    fn cover(&mut self, left: u128, k: usize, chosen: &mut Vec<usize>) -> Result<bool> {
        if left == 0 {
            return Ok(true);
        }
        if k == 0 {
            return Ok(false);
        }
        self.steps = self.steps.wrapping_add(1);
        if self.steps.is_multiple_of(4096) {
            self.budget.check()?;
        }
        let mut best_gain = 0;
        let mut pick = usize::MAX;
        let mut pick_len = usize::MAX;
        let mut rest = left;
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let cands = &self.by_elem[e];
            if cands.len() < pick_len {
                pick_len = cands.len();
                pick = e;
            }
        }
        for &s in self.sets {
            best_gain = best_gain.max((s & left).count_ones() as usize);
        }
        if best_gain * k < left.count_ones() as usize {
            return Ok(false);
        }
        let cands = self.by_elem[pick].clone();
        for s in cands {
            chosen.push(s);
            if self.cover(left & !self.sets[s], k - 1, chosen)? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }
}

fn min_cover(universe: u128, sets: &[u128], cap: usize, budget: Budget) -> Result<(CoverIndex, Vec<usize>)> {
    let mut by_elem = vec![Vec::new(); 128];
    for (i, &s) in sets.iter().enumerate() {
        let mut r = s & universe;
        while r != 0 {
            by_elem[r.trailing_zeros() as usize].push(i);
            r &= r - 1;
        }
    }
    let mut rest = universe;
    while rest != 0 {
        if by_elem[rest.trailing_zeros() as usize].is_empty() {
            return Ok((CoverIndex::AboveCap(cap), Vec::new()));
        }
        rest &= rest - 1;
    }
    let mut search = CoverSearch { sets, by_elem, budget, steps: 0 };
    for k in 0..=cap {
        let mut chosen = Vec::new();
        if search.cover(universe, k, &mut chosen)? {
            return Ok((CoverIndex::Exact(k), chosen));
        }
    }
    Ok((CoverIndex::AboveCap(cap), Vec::new()))
}

fn check_bridgeless(g: &CubicGraph) -> Result<Vec<PerfectMatching>> {
    g.require_closed()?;
    if !bridges(g).is_empty() {
        return Err(Error::Bridged);
    }
    let pms = perfect_matchings(g)?;
    if pms.is_empty() {
        return Err(Error::NoPerfectMatching);
    }
    Ok(pms)
}

/// Smallest number of perfect matchings covering every edge, up to `cap`.
pub fn perfect_matching_index(g: &CubicGraph, cap: usize) -> Result<CoverIndex> {
    perfect_matching_index_within(g, cap, Budget::unlimited())
}

pub fn perfect_matching_index_within(g: &CubicGraph, cap: usize, budget: Budget) -> Result<CoverIndex> {
    let pms = check_bridgeless(g)?;
    let sets: Vec<u128> = pms.iter().map(|m| m.0 .0).collect();
    Ok(min_cover(EdgeSet::full(g.edge_count()).0, &sets, cap, budget)?.0)
}

/// The index of a multipole: dangling edges must be covered too and may
/// be used to match their single end.
pub fn pole_matching_index(g: &CubicGraph, cap: usize) -> Result<CoverIndex> {
    let pms = pole_perfect_matchings(g)?;
    let sets: Vec<u128> = pms.iter().map(|m| m.0 .0).collect();
    Ok(min_cover(EdgeSet::full(g.edge_count()).0, &sets, cap, Budget::unlimited())?.0)
}

/// Five perfect matchings covering every edge, repeating members if fewer suffice.
pub fn berge_cover(g: &CubicGraph) -> Result<Option<MatchingCover>> {
    let pms = check_bridgeless(g)?;
    let sets: Vec<u128> = pms.iter().map(|m| m.0 .0).collect();
    let (idx, chosen) = min_cover(EdgeSet::full(g.edge_count()).0, &sets, 5, Budget::unlimited())?;
    if idx.value().is_none() {
        return Ok(None);
    }
    let mut ms: Vec<PerfectMatching> = chosen.iter().map(|&i| pms[i]).collect();
    while ms.len() < 5 {
        ms.push(ms[0]);
    }
    Ok(Some(MatchingCover::new(g, ms)))
}

/// An independent set whose complementary components contract to a simple
/// cubic bipartite graph with the set as one side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiBipartiteWitness {
    pub u_set: Vec<usize>,
    pub contracted: CubicGraph,
}

/// Largest order the quasi-bipartite search accepts.
pub const QUASI_BIPARTITE_MAX_ORDER: usize = 40;

pub fn is_quasi_bipartite(g: &CubicGraph) -> Result<Option<QuasiBipartiteWitness>> {
    quasi_bipartite_within(g, Budget::within(Duration::from_secs(2)), |_| true)
}

/// Searches independent sets in vertex order and returns the first witness
/// accepted by `accept`. `Err(Timeout)` when the budget runs out.
pub fn quasi_bipartite_within(
    g: &CubicGraph,
    budget: Budget,
    mut accept: impl FnMut(&QuasiBipartiteWitness) -> bool,
) -> Result<Option<QuasiBipartiteWitness>> {
    g.require_closed()?;
    if g.vertex_count() > QUASI_BIPARTITE_MAX_ORDER {
        return Err(Error::TooLarge(g.vertex_count()));
    }
    if !bridges(g).is_empty() {
        return Err(Error::Bridged);
    }
    let n = g.vertex_count();
    let mut state = vec![Choice::Open; n];
    let mut found = None;
    let mut steps = 0u32;
    qb_rec(g, 0, &mut state, &budget, &mut steps, &mut |u| {
        if let Some(w) = qb_witness(g, u) {
            if accept(&w) {
                found = Some(w);
                return true;
            }
        }
        false
    })?;
    Ok(found)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Choice {
    Open,
    In,
    Out,
}

fn qb_rec(
    g: &CubicGraph,
    v: usize,
    state: &mut [Choice],
    budget: &Budget,
    steps: &mut u32,
    leaf: &mut dyn FnMut(&[usize]) -> bool,
) -> Result<bool> {
    *steps = steps.wrapping_add(1);
    if (*steps).is_multiple_of(1024) {
        budget.check()?;
    }
    if v == state.len() {
        let u: Vec<usize> = (0..v).filter(|&x| state[x] == Choice::In).collect();
        return Ok(!u.is_empty() && leaf(&u));
    }
    let can_in = g.neighbours(v).into_iter().all(|w| w.is_some_and(|w| w != v && state[w] != Choice::In));
    if can_in {
        state[v] = Choice::In;
        if qb_rec(g, v + 1, state, budget, steps, leaf)? {
            return Ok(true);
        }
    }
    state[v] = Choice::Out;
    let r = qb_rec(g, v + 1, state, budget, steps, leaf)?;
    state[v] = Choice::Open;
    Ok(r)
}

fn qb_witness(g: &CubicGraph, u: &[usize]) -> Option<QuasiBipartiteWitness> {
    let n = g.vertex_count();
    let mut in_u = vec![false; n];
    for &x in u {
        in_u[x] = true;
    }
    let rest: Vec<usize> = (0..n).filter(|&x| !in_u[x]).collect();
    let c = contract(g, &rest).ok()?;
    let h = c.graph;
    if h.vertex_count() != 2 * u.len() || !h.is_simple() {
        return None;
    }
    // every edge must join a set vertex to a contracted component
    for e in 0..h.edge_count() {
        let (a, b) = h.full_endpoints(e)?;
        let side = |x: usize| u.iter().any(|&y| c.vertex_map[y] == x);
        if side(a) == side(b) {
            return None;
        }
    }
    Some(QuasiBipartiteWitness { u_set: u.to_vec(), contracted: h })
}

fn distinguished_ok(g: &CubicGraph, v: usize) -> Result<()> {
    g.check_vertex(v)?;
    if g.incident_edges(v).iter().any(|&e| g.is_loop(e)) {
        return Err(Error::Precondition(format!("vertex {v} carries a loop")));
    }
    Ok(())
}

/// Whether `h` has a quasi-bipartite witness in which `v` is a contracted
/// component on its own, so that inflating a vertex by `h - v` keeps the
/// bipartite skeleton.
pub fn is_correct_3sum(g: &CubicGraph, u: usize, h: &CubicGraph, v: usize, wiring: Wiring) -> Result<bool> {
    distinguished_ok(g, u)?;
    distinguished_ok(h, v)?;
    three_sum(g, u, h, v, wiring)?;
    if is_quasi_bipartite(h)?.is_none() {
        return Err(Error::Precondition("summand is not quasi-bipartite".into()));
    }
    let w = quasi_bipartite_within(h, Budget::within(Duration::from_secs(2)), |w| {
        h.neighbours(v).into_iter().flatten().all(|x| w.u_set.contains(&x))
    })?;
    Ok(w.is_some())
}

/// Both sides of the 3-sum characterisation for one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SumIndexReport {
    pub sum_index: CoverIndex,
    pub quasi_bipartite: bool,
    pub correct: bool,
    pub agree: bool,
}

/// Checks that the sum needs five matchings exactly when `h` is
/// quasi-bipartite and the sum is correct.
///
/// Requires `g` to need at least five matchings, the 3-pole `g - u` to be
/// coverable by four, and `h` to be colourable and 2-connected.
pub fn check_sum_index(g: &CubicGraph, u: usize, h: &CubicGraph, v: usize, wiring: Wiring) -> Result<SumIndexReport> {
    distinguished_ok(g, u)?;
    distinguished_ok(h, v)?;
    if !is_two_connected(g) || !is_two_connected(h) {
        return Err(Error::NotTwoConnected);
    }
    if !perfect_matching_index(g, 5)?.at_least(5) {
        return Err(Error::Precondition("first summand is coverable by four matchings".into()));
    }
    let minus = delete_vertices(g, &[u])?.pole.into_graph();
    if pole_matching_index(&minus, 4)? != CoverIndex::Exact(4) {
        return Err(Error::Precondition("first summand minus the vertex does not have index 4".into()));
    }
    if !graph_is_colourable(h) {
        return Err(Error::Precondition("second summand is not colourable".into()));
    }
    let sum = three_sum(g, u, h, v, wiring)?;
    let sum_index = perfect_matching_index(&sum, 5)?;
    let quasi_bipartite = is_quasi_bipartite(h)?.is_some();
    let correct = quasi_bipartite && is_correct_3sum(g, u, h, v, wiring)?;
    let agree = sum_index.at_least(5) == (quasi_bipartite && correct);
    Ok(SumIndexReport { sum_index, quasi_bipartite, correct, agree })
}

/// Connected components of `g` minus `u_set`, for inspecting witnesses.
pub fn witness_components(g: &CubicGraph, u_set: &[usize]) -> Result<Vec<Vec<usize>>> {
    let sub = delete_vertices(g, u_set)?;
    let back: Vec<usize> = {
        let mut b = vec![0; sub.pole.graph().vertex_count()];
        for (old, new) in sub.vertex_map.iter().enumerate() {
            if let Some(n) = new {
                b[*n] = old;
            }
        }
        b
    };
    Ok(components(sub.pole.graph()).into_iter().map(|c| c.into_iter().map(|x| back[x]).collect()).collect())
}
