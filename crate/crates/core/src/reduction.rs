//! Reducing defect-3 snarks along small cuts and quadrilaterals.

use crate::clusters::circuits;
use crate::colouring::graph_is_colourable;
use crate::error::{Error, Result};
use crate::graph::{
    components, contract, cycle_separating_cuts, cyclic_edge_connectivity, delete_vertices, edge_cut, girth,
    join_semiedges, CubicGraph, Cycle,
};
use crate::matching::{defect_exhaustive, defect_is_three, hexagon_arrays, hexagonal_cores, HexagonWitness};
use serde::Serialize;
use std::fmt::Write as _;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    TwoCut,
    ThreeCut,
    FourCycleDisjoint,
    FourCycleMeeting,
    TriangleContraction,
}

impl StepKind {
    pub fn as_str(self) -> &'static str {
        match self {
            StepKind::TwoCut => "two_cut",
            StepKind::ThreeCut => "three_cut",
            StepKind::FourCycleDisjoint => "four_cycle_disjoint",
            StepKind::FourCycleMeeting => "four_cycle_meeting",
            StepKind::TriangleContraction => "triangle_contraction",
        }
    }
}

/// One reduction. Edge ids refer to the graph before the step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub kind: StepKind,
    pub edges: Vec<usize>,
    pub before: CubicGraph,
    pub after: CubicGraph,
    pub core_inherited: bool,
}

impl ReductionStep {
    fn line(&self) -> String {
        format!(
            "{} edges={:?} order {}->{} core_inherited={}",
            self.kind.as_str(),
            self.edges,
            self.before.vertex_count(),
            self.after.vertex_count(),
            self.core_inherited
        )
    }
}

/// A reduced graph together with the hexagonal core followed through the step.
#[derive(Clone, Debug)]
pub struct Reduced {
    pub graph: CubicGraph,
    pub kind: StepKind,
    pub core_inherited: bool,
    /// Edges of the reducing structure in the input graph.
    pub edges: Vec<usize>,
}

#[derive(Clone, Debug)]
pub enum ThreeCutOutcome {
    Reduced(Reduced),
    /// The side cut off is an essential triangle, given by its vertices.
    EssentialTriangle([usize; 3]),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NormalStatus {
    NontrivialDefect3,
    EssentialTriangleForm,
}

#[derive(Clone, Debug)]
pub struct NormalForm {
    pub graph: CubicGraph,
    pub status: NormalStatus,
    pub essential_triangle: Option<[usize; 3]>,
    pub trace: Vec<ReductionStep>,
}

/// How each intermediate graph is re-checked to have defect 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Verification {
    /// Uncolourable with a hexagon witness.
    #[default]
    Hexagon,
    /// Full enumeration of triples of perfect matchings.
    Exhaustive,
}

impl Verification {
    fn defect_is_three(self, g: &CubicGraph) -> Result<bool> {
        match self {
            Verification::Hexagon => Ok(!graph_is_colourable(g) && defect_is_three(g)?.is_some()),
            Verification::Exhaustive => Ok(defect_exhaustive(g)?.value == 3),
        }
    }
}

/// Line-oriented rendering of a trace.
pub fn format_trace(trace: &[ReductionStep]) -> String {
    let mut s = String::new();
    for (i, st) in trace.iter().enumerate() {
        let _ = writeln!(s, "step {i} {}", st.line());
    }
    s
}

fn require_defect_three(g: &CubicGraph) -> Result<Vec<HexagonWitness>> {
    g.require_closed()?;
    if graph_is_colourable(g) {
        return Err(Error::Colourable);
    }
    let cores = hexagonal_cores(g)?;
    if cores.is_empty() {
        return Err(Error::Precondition("snark does not have defect 3".into()));
    }
    Ok(cores)
}

fn consistency(msg: String) -> Error {
    Error::Reduction { msg, trace: String::new() }
}

/// Vertex sets of all triangles, each sorted, in lexicographic order.
pub fn triangles(g: &CubicGraph) -> Vec<[usize; 3]> {
    let mut out: Vec<[usize; 3]> = circuits(g, 3)
        .into_iter()
        .map(|es| {
            let mut vs: Vec<usize> = es
                .iter()
                .flat_map(|&e| {
                    let (a, b) = g.full_endpoints(e).expect("closed");
                    [a, b]
                })
                .collect();
            vs.sort_unstable();
            vs.dedup();
            [vs[0], vs[1], vs[2]]
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Triangles whose contraction leaves a snark of defect other than 3.
pub fn essential_triangles(g: &CubicGraph) -> Result<Vec<[usize; 3]>> {
    require_defect_three(g)?;
    let mut out = Vec::new();
    for t in triangles(g) {
        let k = contract(g, &t)?.graph;
        if defect_is_three(&k)?.is_none() {
            out.push(t);
        }
    }
    if out.len() > 1 {
        return Err(consistency(format!("two essential triangles {:?} and {:?}", out[0], out[1])));
    }
    Ok(out)
}

fn cycle_edges(c: &Cycle) -> Vec<usize> {
    c.edges.clone()
}

/// Checks the structure of hexagonal cores around triangles: a core meets a
/// triangle in one uncovered edge, and meets at most one triangle.
pub fn check_triangle_lemmas(g: &CubicGraph, cores: &[HexagonWitness]) -> Result<()> {
    let ts = triangles(g);
    for w in cores {
        let unc = w.array.uncovered();
        let mut met = 0;
        for t in &ts {
            let shared_v: Vec<usize> = w.cycle.vertices.iter().copied().filter(|v| t.contains(v)).collect();
            if shared_v.is_empty() {
                continue;
            }
            met += 1;
            let shared_e: Vec<usize> = cycle_edges(&w.cycle)
                .into_iter()
                .filter(|&e| {
                    let (a, b) = g.full_endpoints(e).expect("closed");
                    t.contains(&a) && t.contains(&b)
                })
                .collect();
            if shared_v.len() != 2 || shared_e.len() != 1 || !unc.contains(shared_e[0]) {
                return Err(consistency(format!(
                    "core {:?} meets triangle {t:?} in something other than one uncovered edge",
                    w.cycle.vertices
                )));
            }
        }
        if met > 1 {
            return Err(consistency(format!("core {:?} meets {met} triangles", w.cycle.vertices)));
        }
    }
    Ok(())
}

fn core_avoids(w: &HexagonWitness, edges: &[usize]) -> bool {
    !w.cycle.edges.iter().any(|e| edges.contains(e))
}

fn is_core_hexagon(g: &CubicGraph, c: &Cycle) -> bool {
    matches!(hexagon_arrays(g, c), Ok([a, b]) if a.is_some() || b.is_some())
}

fn map_cycle(c: &Cycle, vmap: impl Fn(usize) -> Option<usize>, emap: impl Fn(usize) -> Option<usize>) -> Option<Cycle> {
    let vertices = c.vertices.iter().map(|&v| vmap(v)).collect::<Option<Vec<_>>>()?;
    let edges = c.edges.iter().map(|&e| emap(e)).collect::<Option<Vec<_>>>()?;
    Some(Cycle { vertices, edges })
}

fn two_sides(g: &CubicGraph, edges: &[usize]) -> Result<(Vec<usize>, Vec<usize>)> {
    let cut = edge_cut(g, edges)?;
    let Some((a, b)) = cut.sides else {
        return Err(Error::Precondition(format!("{edges:?} is not an edge cut")));
    };
    let n = g.vertex_count();
    let mut left = vec![false; n];
    for &v in &a {
        left[v] = true;
    }
    for &e in edges {
        let (x, y) = g.full_endpoints(e).expect("closed");
        if left[x] == left[y] {
            return Err(Error::Precondition(format!("{edges:?} is not a minimal edge cut")));
        }
    }
    if components(&delete_vertices(g, &b)?.pole.into_graph()).len() != 1
        || components(&delete_vertices(g, &a)?.pole.into_graph()).len() != 1
    {
        return Err(Error::Precondition(format!("{edges:?} leaves more than two components")));
    }
    Ok((a, b))
}

/// Keeps the side holding a hexagonal core and closes its two dangling edges
/// into one edge.
pub fn reduce_two_cut(g: &CubicGraph, cut: &[usize]) -> Result<Reduced> {
    if cut.len() != 2 {
        return Err(Error::Precondition("a 2-edge-cut needs two edges".into()));
    }
    let cores = require_defect_three(g)?;
    let (a, b) = two_sides(g, cut)?;
    for w in &cores {
        if !core_avoids(w, cut) {
            return Err(consistency(format!("core {:?} crosses the 2-edge-cut {cut:?}", w.cycle.vertices)));
        }
    }
    let core = &cores[0];
    let drop = if core.cycle.vertices.iter().all(|v| a.contains(v)) { b } else { a };
    let sub = delete_vertices(g, &drop)?;
    let semi = sub.pole.semiedges();
    let j = join_semiedges(&sub.pole, &[(semi[0], semi[1])])?;
    let graph = j.pole.graph().clone();
    let img = map_cycle(&core.cycle, |v| sub.vertex_map[v], |e| sub.edge_map[e].and_then(|x| j.edge_image(x)));
    let core_inherited = img.is_some_and(|c| is_core_hexagon(&graph, &c));
    Ok(Reduced { graph, kind: StepKind::TwoCut, core_inherited, edges: sorted(cut) })
}

fn sorted(xs: &[usize]) -> Vec<usize> {
    let mut v = xs.to_vec();
    v.sort_unstable();
    v
}

/// Contracts `side` to a vertex and follows `core` into the result.
fn contract_side(g: &CubicGraph, side: &[usize], core: &Cycle, kind: StepKind, edges: &[usize]) -> Result<Reduced> {
    let c = contract(g, side)?;
    let img = map_cycle(core, |v| Some(c.vertex_map[v]), |e| c.edge_map[e]);
    let core_inherited = img.is_some_and(|cy| is_core_hexagon(&c.graph, &cy));
    Ok(Reduced { graph: c.graph, kind, core_inherited, edges: sorted(edges) })
}

/// Reduces along a cycle-separating 3-edge-cut, unless the side it cuts off
/// is an essential triangle.
pub fn reduce_three_cut(g: &CubicGraph, cut: &[usize]) -> Result<ThreeCutOutcome> {
    if cut.len() != 3 {
        return Err(Error::Precondition("a 3-edge-cut needs three edges".into()));
    }
    let cores = require_defect_three(g)?;
    let (a, b) = two_sides(g, cut)?;
    // Some core avoids the cut: contract the side without it.
    if let Some(w) = cores.iter().find(|w| core_avoids(w, cut)) {
        let other = if w.cycle.vertices.iter().all(|v| a.contains(v)) { &b } else { &a };
        let r = contract_side(g, other, &w.cycle, StepKind::ThreeCut, cut)?;
        return Ok(ThreeCutOutcome::Reduced(r));
    }
    // Every core crosses the cut. The side meeting the core in a single
    // uncovered edge is the one to shrink.
    let w = &cores[0];
    let crossing: Vec<usize> = cut.iter().copied().filter(|e| w.cycle.edges.contains(e)).collect();
    let doubly = w.array.covered_exactly(2);
    if crossing.len() != 2 || !crossing.iter().all(|&e| doubly.contains(e)) {
        return Err(consistency(format!("core {:?} crosses {cut:?} without two doubly covered edges", w.cycle.vertices)));
    }
    let inside = |side: &[usize]| w.cycle.edges.iter().filter(|&&e| {
        let (x, y) = g.full_endpoints(e).expect("closed");
        side.contains(&x) && side.contains(&y)
    }).count();
    let q = if inside(&a) == 1 { a } else if inside(&b) == 1 { b } else {
        return Err(consistency(format!("no side of {cut:?} meets core {:?} in one edge", w.cycle.vertices)));
    };
    let e1 = *w
        .cycle
        .edges
        .iter()
        .find(|&&e| {
            let (x, y) = g.full_endpoints(e).expect("closed");
            q.contains(&x) && q.contains(&y)
        })
        .expect("counted above");
    if !w.array.uncovered().contains(e1) {
        return Err(consistency(format!("edge {e1} shared by core and cut side is covered")));
    }
    if q.len() == 3 {
        let t = [q[0], q[1], q[2]];
        let k = contract(g, &q)?.graph;
        if defect_is_three(&k)?.is_none() {
            return Ok(ThreeCutOutcome::EssentialTriangle(t));
        }
        return Ok(ThreeCutOutcome::Reduced(Reduced {
            graph: k,
            kind: StepKind::TriangleContraction,
            core_inherited: false,
            edges: sorted(cut),
        }));
    }
    // Shift the cut past the ends of the shared edge and contract the rest of q.
    let (u, v) = g.full_endpoints(e1).expect("closed");
    let rest: Vec<usize> = q.iter().copied().filter(|&x| x != u && x != v).collect();
    let shifted: Vec<usize> = {
        let mut s: Vec<usize> = [u, v]
            .iter()
            .flat_map(|&x| g.incident_edges(x))
            .filter(|&e| e != e1 && !cut.contains(&e))
            .collect();
        s.extend(cut.iter().copied().filter(|e| !w.cycle.edges.contains(e)));
        s.sort_unstable();
        s
    };
    let r = contract_side(g, &rest, &w.cycle, StepKind::ThreeCut, &shifted)?;
    Ok(ThreeCutOutcome::Reduced(r))
}

/// Edges leaving the vertex set of `d`, one per vertex, in the order of `d`.
fn boundary(g: &CubicGraph, d: &Cycle) -> Vec<usize> {
    d.vertices
        .iter()
        .flat_map(|&x| g.incident_edges(x).into_iter().filter(|e| !d.edges.contains(e)))
        .collect()
}

/// Cycle through the given edges, if they form one.
pub fn cycle_from_edges(g: &CubicGraph, edges: &[usize]) -> Option<Cycle> {
    let l = edges.len();
    let (s, mut cur) = g.full_endpoints(edges[0])?;
    let mut vertices = vec![s];
    let mut order = vec![edges[0]];
    while order.len() < l {
        vertices.push(cur);
        let next = edges.iter().copied().find(|&e| !order.contains(&e) && g.endpoints(e).contains(&Some(cur)))?;
        cur = g.opposite(next, cur)?;
        order.push(next);
    }
    (cur == s).then_some(Cycle { vertices, edges: order })
}

/// Removes a quadrilateral whose boundary edges are independent.
pub fn reduce_four_cycle(g: &CubicGraph, d: &Cycle) -> Result<Reduced> {
    if d.len() != 4 || d.edges.len() != 4 || cycle_from_edges(g, &d.edges).is_none() {
        return Err(Error::Precondition(format!("{:?} is not a 4-cycle", d.vertices)));
    }
    let cores = require_defect_three(g)?;
    let r = boundary(g, d);
    let mut far: Vec<usize> = r
        .iter()
        .zip(&d.vertices)
        .filter_map(|(&e, &x)| g.opposite(e, x))
        .collect();
    far.sort_unstable();
    far.dedup();
    if r.len() != 4 || far.len() != 4 || far.iter().any(|x| d.vertices.contains(x)) {
        return Err(Error::Precondition(format!("edges leaving {:?} are not independent", d.vertices)));
    }
    check_quadrilateral_lemma(g, d, &r, &cores)?;
    // A core missing the quadrilateral: join the four dangling edges in
    // equally coloured pairs.
    if let Some(w) = cores.iter().find(|w| !w.cycle.vertices.iter().any(|v| d.vertices.contains(v))) {
        let colour = |e: usize| -> Result<usize> {
            let l = w.array.colour_list(e);
            if l.len() != 1 {
                return Err(consistency(format!("edge {e} leaving the quadrilateral is not simply covered")));
            }
            Ok(l[0] as usize)
        };
        let cols = r.iter().map(|&e| colour(e)).collect::<Result<Vec<_>>>()?;
        let sub = delete_vertices(g, &d.vertices)?;
        let dart = |e: usize| -> usize {
            let ne = sub.edge_map[e].expect("boundary edge survives");
            let [x, _] = sub.pole.graph().endpoints(ne);
            if x.is_none() {
                2 * ne
            } else {
                2 * ne + 1
            }
        };
        let mut pairs = Vec::new();
        let mut used = [false; 4];
        for i in 0..4 {
            if used[i] {
                continue;
            }
            let j = (i + 1..4).find(|&j| !used[j] && cols[j] == cols[i]).ok_or_else(|| {
                consistency(format!("colours {cols:?} leaving the quadrilateral do not pair up"))
            })?;
            used[i] = true;
            used[j] = true;
            pairs.push((dart(r[i]), dart(r[j])));
        }
        let j = join_semiedges(&sub.pole, &pairs)?;
        let graph = j.pole.graph().clone();
        let img = map_cycle(&w.cycle, |v| sub.vertex_map[v], |e| sub.edge_map[e].and_then(|x| j.edge_image(x)));
        let core_inherited = img.is_some_and(|c| is_core_hexagon(&graph, &c));
        return Ok(Reduced { graph, kind: StepKind::FourCycleDisjoint, core_inherited, edges: sorted(&d.edges) });
    }
    meeting_reduction(g, d, &cores[0])
}

/// Every core meets the quadrilateral in one uncovered edge ab. Removes the
/// other two vertices and cross-joins their dangling edges.
fn meeting_reduction(g: &CubicGraph, d: &Cycle, w: &HexagonWitness) -> Result<Reduced> {
    let e1 = *d.edges.iter().find(|e| w.cycle.edges.contains(e)).expect("checked by the quadrilateral lemma");
    let (a, b) = g.full_endpoints(e1).expect("closed");
    let d_next = |x: usize, not: usize| -> usize {
        d.edges
            .iter()
            .filter(|&&e| e != e1)
            .find_map(|&e| {
                let (p, q) = g.full_endpoints(e).expect("closed");
                if p == x && q != not {
                    Some((q, e))
                } else if q == x && p != not {
                    Some((p, e))
                } else {
                    None
                }
            })
            .expect("quadrilateral vertex")
            .0
    };
    let u1 = d_next(a, b);
    let u2 = d_next(b, a);
    let sub = delete_vertices(g, &[u1, u2])?;
    let pole = &sub.pole;
    let conn1 = pole.connector(&format!("v{u1}")).expect("connector").darts.clone();
    let conn2 = pole.connector(&format!("v{u2}")).expect("connector").darts.clone();
    let touches = |dart: usize, x: usize| pole.graph().endpoints(dart / 2).contains(&sub.vertex_map[x]);
    let (f1, r3) = if touches(conn1[0], a) { (conn1[0], conn1[1]) } else { (conn1[1], conn1[0]) };
    let (f2, r4) = if touches(conn2[0], b) { (conn2[0], conn2[1]) } else { (conn2[1], conn2[0]) };
    let j = join_semiedges(pole, &[(f1, r4), (f2, r3)])?;
    let graph = j.pole.graph().clone();
    let img = map_cycle(&w.cycle, |v| sub.vertex_map[v], |e| sub.edge_map[e].and_then(|x| j.edge_image(x)));
    let core_inherited = img.is_some_and(|c| is_core_hexagon(&graph, &c));
    Ok(Reduced { graph, kind: StepKind::FourCycleMeeting, core_inherited, edges: sorted(&d.edges) })
}

/// A core meeting a quadrilateral shares exactly one uncovered edge with it,
/// and of the edges leaving it two are doubly and two simply covered.
fn check_quadrilateral_lemma(g: &CubicGraph, d: &Cycle, r: &[usize], cores: &[HexagonWitness]) -> Result<()> {
    let _ = g;
    for w in cores {
        if !w.cycle.vertices.iter().any(|v| d.vertices.contains(v)) {
            continue;
        }
        let shared: Vec<usize> = d.edges.iter().copied().filter(|e| w.cycle.edges.contains(e)).collect();
        let bad = || consistency(format!("core {:?} meets quadrilateral {:?} irregularly", w.cycle.vertices, d.vertices));
        if shared.len() != 1 || !w.array.uncovered().contains(shared[0]) {
            return Err(bad());
        }
        let weights: Vec<usize> = r.iter().map(|&e| w.array.weight(e)).collect();
        if weights.iter().filter(|&&k| k == 2).count() != 2 || weights.iter().filter(|&&k| k == 1).count() != 2 {
            return Err(bad());
        }
    }
    Ok(())
}

/// Quadrilaterals of `g` with independent boundary, in lexicographic order
/// of their edge sets.
pub fn reducible_quadrilaterals(g: &CubicGraph) -> Vec<Cycle> {
    circuits(g, 4)
        .into_iter()
        .filter_map(|es| cycle_from_edges(g, &es))
        .filter(|d| {
            let r = boundary(g, d);
            let mut far: Vec<usize> = r.iter().zip(&d.vertices).filter_map(|(&e, &x)| g.opposite(e, x)).collect();
            far.sort_unstable();
            far.dedup();
            r.len() == 4 && far.len() == 4 && !far.iter().any(|x| d.vertices.contains(x))
        })
        .collect()
}

/// Options for `normalize`.
#[derive(Clone, Copy, Debug, Default)]
pub struct NormalizeOptions {
    pub verification: Verification,
    /// Recheck the core lemmas on every graph of the trace.
    pub check_lemmas: bool,
}

pub fn normalize(g: &CubicGraph) -> Result<NormalForm> {
    normalize_with(g, NormalizeOptions { verification: Verification::Hexagon, check_lemmas: true })
}

/// Applies 2-cut, then 3-cut, then quadrilateral reductions, smallest
/// witness first, until none applies.
pub fn normalize_with(g: &CubicGraph, opts: NormalizeOptions) -> Result<NormalForm> {
    let v = opts.verification;
    if !v.defect_is_three(g)? {
        return Err(Error::Precondition("input does not have defect 3".into()));
    }
    let mut cur = g.clone();
    let mut trace: Vec<ReductionStep> = Vec::new();
    let fail = |msg: String, trace: &[ReductionStep]| Error::Reduction { msg, trace: format_trace(trace) };
    let with_trace = |e: Error, trace: &[ReductionStep]| match e {
        Error::Reduction { msg, .. } => fail(msg, trace),
        other => other,
    };
    let limit = g.vertex_count() / 2 + 1;
    loop {
        if trace.len() > limit {
            return Err(fail("reduction does not terminate".into(), &trace));
        }
        if opts.check_lemmas {
            let cores = hexagonal_cores(&cur)?;
            check_triangle_lemmas(&cur, &cores).map_err(|e| with_trace(e, &trace))?;
        }
        let step = next_step(&cur).map_err(|e| with_trace(e, &trace))?;
        let Some(r) = step else { break };
        if r.graph.vertex_count() >= cur.vertex_count() {
            return Err(fail(format!("{} step did not shrink the graph", r.kind.as_str()), &trace));
        }
        let expect_core = r.kind != StepKind::TriangleContraction;
        let st = ReductionStep { kind: r.kind, edges: r.edges, before: cur.clone(), after: r.graph.clone(), core_inherited: r.core_inherited };
        trace.push(st);
        if !v.defect_is_three(&r.graph)? {
            return Err(fail("reduced graph does not have defect 3".into(), &trace));
        }
        if expect_core && !r.core_inherited {
            return Err(fail("hexagonal core was not inherited".into(), &trace));
        }
        cur = r.graph;
    }
    finish(cur, trace, &fail)
}

fn finish(
    cur: CubicGraph,
    trace: Vec<ReductionStep>,
    fail: &dyn Fn(String, &[ReductionStep]) -> Error,
) -> Result<NormalForm> {
    let nontrivial = girth(&cur).is_some_and(|x| x >= 5) && cyclic_edge_connectivity(&cur, 4)?.at_least(4);
    if nontrivial {
        return Ok(NormalForm { graph: cur, status: NormalStatus::NontrivialDefect3, essential_triangle: None, trace });
    }
    let ts = essential_triangles(&cur).map_err(|e| match e {
        Error::Reduction { msg, .. } => fail(msg, &trace),
        other => other,
    })?;
    let Some(&t) = ts.first() else {
        return Err(fail("no reduction applies but the graph is not nontrivial".into(), &trace));
    };
    let k = contract(&cur, &t)?.graph;
    let ok = girth(&k).is_some_and(|x| x >= 5)
        && cyclic_edge_connectivity(&k, 4)?.at_least(4)
        && !graph_is_colourable(&k)
        && defect_is_three(&k)?.is_none();
    if !ok {
        return Err(fail("contracting the essential triangle does not give a nontrivial snark of defect at least 4".into(), &trace));
    }
    Ok(NormalForm { graph: cur, status: NormalStatus::EssentialTriangleForm, essential_triangle: Some(t), trace })
}

/// The first applicable reduction in the fixed order, if any.
fn next_step(g: &CubicGraph) -> Result<Option<Reduced>> {
    if let Some(cut) = cycle_separating_cuts(g, 2).first() {
        return reduce_two_cut(g, &cut.edges).map(Some);
    }
    for cut in cycle_separating_cuts(g, 3) {
        if let ThreeCutOutcome::Reduced(r) = reduce_three_cut(g, &cut.edges)? {
            return Ok(Some(r));
        }
    }
    if let Some(d) = reducible_quadrilaterals(g).first() {
        return reduce_four_cycle(g, d).map(Some);
    }
    Ok(None)
}
