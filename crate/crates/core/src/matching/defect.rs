use super::{perfect_matchings, PerfectMatching, ThreeArray};
use crate::colouring::{find_colouring, graph_is_colourable, BoundaryCondition, Colour};
use crate::covers::MatchingCover;
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{bridges, delete_vertices, girth, induced_cycles, CubicGraph, Cycle};

/// Exact defect with its lexicographically least optimal array.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Defect {
    pub value: usize,
    pub witness: ThreeArray,
}

fn check_input(g: &CubicGraph) -> Result<Vec<PerfectMatching>> {
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

/// Scans multisets `i <= j <= k` in index order for the first array with
/// fewer than `below` uncovered edges, improving until `floor` is reached.
fn search(pms: &[PerfectMatching], m: usize, floor: usize, below: usize) -> Option<(usize, [usize; 3])> {
    let all = EdgeSet::full(m).0;
    let mut best = below;
    let mut arg = None;
    let p = pms.len();
    for i in 0..p {
        let a = pms[i].0 .0;
        for j in i..p {
            let b = pms[j].0 .0;
            // Whatever the third matching, at least |Mi & Mj| edges stay uncovered.
            if (a & b).count_ones() as usize >= best {
                continue;
            }
            let ab = a | b;
            for (k, pk) in pms.iter().enumerate().skip(j) {
                let unc = (all & !(ab | pk.0 .0)).count_ones() as usize;
                if unc < best {
                    best = unc;
                    arg = Some([i, j, k]);
                    if best <= floor {
                        return arg.map(|x| (best, x));
                    }
                }
            }
        }
    }
    arg.map(|x| (best, x))
}

fn array_of(pms: &[PerfectMatching], m: usize, idx: [usize; 3]) -> ThreeArray {
    ThreeArray::from_sets(idx.map(|i| pms[i].0), m)
}

/// Oddness computed over the given perfect matchings.
pub fn oddness_from(g: &CubicGraph, pms: &[PerfectMatching]) -> Result<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    for pm in pms {
        let mut seen = vec![false; n];
        let mut odd = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut size = 0;
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(v) = stack.pop() {
                size += 1;
                for e in g.incident_edges(v) {
                    if pm.0.contains(e) {
                        continue;
                    }
                    let w = g.opposite(e, v).expect("closed");
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            odd += size % 2;
        }
        best = Some(best.map_or(odd, |b: usize| b.min(odd)));
        if best == Some(0) {
            break;
        }
    }
    best.ok_or(Error::NoPerfectMatching)
}

pub fn oddness(g: &CubicGraph) -> Result<usize> {
    g.require_closed()?;
    oddness_from(g, &perfect_matchings(g)?)
}

/// `max(3, ceil(girth / 2), ceil(3 * oddness / 2))` for snarks, zero otherwise.
pub fn defect_lower_bound(g: &CubicGraph, pms: &[PerfectMatching]) -> Result<usize> {
    if graph_is_colourable(g) {
        return Ok(0);
    }
    let gi = girth(g).unwrap_or(0);
    let w = oddness_from(g, pms)?;
    Ok(3.max(gi.div_ceil(2)).max((3 * w).div_ceil(2)))
}

/// Exact defect. Uses lower bounds and the hexagon test to stop early.
pub fn defect(g: &CubicGraph) -> Result<Defect> {
    let pms = check_input(g)?;
    let m = g.edge_count();
    let lb = defect_lower_bound(g, &pms)?;
    let below = if lb == 3 && defect_is_three(g)?.is_some() { 4 } else { usize::MAX };
    let (value, idx) = search(&pms, m, lb, below).ok_or_else(|| Error::Consistency("no array found".into()))?;
    if value < lb || (below == 4 && value != 3) {
        return Err(Error::Consistency(format!("defect {value} contradicts lower bound {lb}")));
    }
    Ok(Defect { value, witness: array_of(&pms, m, idx) })
}

/// Defect by plain enumeration of all multisets, without shortcuts.
pub fn defect_exhaustive(g: &CubicGraph) -> Result<Defect> {
    let pms = check_input(g)?;
    let m = g.edge_count();
    let (value, idx) = search(&pms, m, 0, usize::MAX).ok_or_else(|| Error::Consistency("no array found".into()))?;
    Ok(Defect { value, witness: array_of(&pms, m, idx) })
}

/// Every optimal array as a sorted multiset, in lexicographic order.
pub fn optimal_arrays(g: &CubicGraph, value: usize) -> Result<Vec<ThreeArray>> {
    let pms = check_input(g)?;
    let m = g.edge_count();
    let all = EdgeSet::full(m).0;
    let mut out = Vec::new();
    for i in 0..pms.len() {
        for j in i..pms.len() {
            let ab = pms[i].0 .0 | pms[j].0 .0;
            if (pms[i].0 .0 & pms[j].0 .0).count_ones() as usize > value {
                continue;
            }
            for k in j..pms.len() {
                if (all & !(ab | pms[k].0 .0)).count_ones() as usize == value {
                    out.push(array_of(&pms, m, [i, j, k]));
                }
            }
        }
    }
    Ok(out)
}

/// Which alternate pairs of boundary edges of a hexagon share a colour.
///
/// With hexagon vertices `c0..c5` and `r_i` the edge leaving `c_i`, `A` pairs
/// `r0r1, r2r3, r4r5` and `B` pairs `r1r2, r3r4, r5r0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Pairing {
    A,
    B,
}

impl Pairing {
    fn offset(self) -> usize {
        match self {
            Pairing::A => 0,
            Pairing::B => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum HexagonClass {
    Removable,
    NonCore,
    SingleCore,
    DoubleCore,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HexagonWitness {
    pub cycle: Cycle,
    pub pairing: Pairing,
    pub array: ThreeArray,
}

fn check_hexagon(g: &CubicGraph, c: &Cycle) -> Result<()> {
    let ok = c.len() == 6 && induced_cycles_contains(g, c);
    if ok {
        Ok(())
    } else {
        Err(Error::NotInducedCycle(format!("{:?}", c.vertices)))
    }
}

fn induced_cycles_contains(g: &CubicGraph, c: &Cycle) -> bool {
    let vs = &c.vertices;
    let l = vs.len();
    if c.edges.len() != l {
        return false;
    }
    let mut sorted = vs.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != l {
        return false;
    }
    for i in 0..l {
        let (a, b) = (vs[i], vs[(i + 1) % l]);
        match g.full_endpoints(c.edges[i]) {
            Some((x, y)) if (x, y) == (a, b) || (x, y) == (b, a) => {}
            _ => return false,
        }
        if g.edges_between(a, b).len() != 1 {
            return false;
        }
        for j in i + 2..l {
            if !(i == 0 && j == l - 1) && g.adjacent(vs[i], vs[j]) {
                return false;
            }
        }
    }
    true
}

/// Arrays for the two boundary pairings of an induced hexagon; an entry is
/// present when that pairing extends to a colouring outside the hexagon.
pub fn hexagon_arrays(g: &CubicGraph, c: &Cycle) -> Result<[Option<ThreeArray>; 2]> {
    check_hexagon(g, c)?;
    let sub = delete_vertices(g, &c.vertices)?;
    let pole = &sub.pole;
    let r: Vec<usize> = c
        .vertices
        .iter()
        .map(|v| {
            let d = &pole.connector(&format!("v{v}")).expect("hexagon vertex connector").darts;
            debug_assert_eq!(d.len(), 1);
            d[0]
        })
        .collect();
    let mut out = [None, None];
    for (slot, p) in [Pairing::A, Pairing::B].into_iter().enumerate() {
        let o = p.offset();
        let mut bc = BoundaryCondition::empty();
        for t in 0..3 {
            let col = Colour::ALL[t];
            bc.fixed.insert(r[(o + 2 * t) % 6], col);
            bc.fixed.insert(r[(o + 2 * t + 1) % 6], col);
        }
        let Some(phi) = find_colouring(pole, &bc)? else { continue };
        let mut members = [EdgeSet::EMPTY; 3];
        let mut on_cycle = vec![None; g.edge_count()];
        for t in 0..3 {
            // edge between the equally coloured pair is doubly covered
            on_cycle[c.edges[(o + 2 * t) % 6]] = Some(Some(t));
            on_cycle[c.edges[(o + 2 * t + 1) % 6]] = Some(None);
        }
        for e in 0..g.edge_count() {
            match on_cycle[e] {
                Some(Some(t)) => {
                    for (i, m) in members.iter_mut().enumerate() {
                        if i != t {
                            m.insert(e);
                        }
                    }
                }
                Some(None) => {}
                None => {
                    let ne = sub.edge_map[e].expect("edge off the hexagon survives");
                    members[phi.colour(ne).get() as usize - 1].insert(e);
                }
            }
        }
        let arr = ThreeArray::new(g, PerfectMatching(members[0]), PerfectMatching(members[1]), PerfectMatching(members[2]))?;
        if arr.uncovered().len() != 3 {
            return Err(Error::Consistency("hexagon array leaves other than three edges uncovered".into()));
        }
        out[slot] = Some(arr);
    }
    Ok(out)
}

/// First induced hexagon admitting a defect-3 array, if any.
pub fn defect_is_three(g: &CubicGraph) -> Result<Option<HexagonWitness>> {
    for c in induced_cycles(g, 6) {
        let arrays = hexagon_arrays(g, &c)?;
        for (p, a) in [Pairing::A, Pairing::B].into_iter().zip(arrays) {
            if let Some(array) = a {
                return Ok(Some(HexagonWitness { cycle: c, pairing: p, array }));
            }
        }
    }
    Ok(None)
}

/// Every induced hexagon and pairing that extends, with its array.
pub fn hexagonal_cores(g: &CubicGraph) -> Result<Vec<HexagonWitness>> {
    let mut out = Vec::new();
    for c in induced_cycles(g, 6) {
        let arrays = hexagon_arrays(g, &c)?;
        for (p, a) in [Pairing::A, Pairing::B].into_iter().zip(arrays) {
            if let Some(array) = a {
                out.push(HexagonWitness { cycle: c.clone(), pairing: p, array });
            }
        }
    }
    Ok(out)
}

pub fn classify_hexagon(g: &CubicGraph, c: &Cycle) -> Result<HexagonClass> {
    let [a, b] = hexagon_arrays(g, c)?;
    Ok(match (a.is_some(), b.is_some()) {
        (true, true) => HexagonClass::DoubleCore,
        (true, false) | (false, true) => HexagonClass::SingleCore,
        (false, false) => {
            let pole = delete_vertices(g, &c.vertices)?.pole;
            if crate::colouring::is_colourable(&pole, &BoundaryCondition::empty())? {
                HexagonClass::NonCore
            } else {
                HexagonClass::Removable
            }
        }
    })
}

/// Six perfect matchings covering every edge twice, from a double-core hexagon.
pub fn fulkerson_from_double_core(g: &CubicGraph, c: &Cycle) -> Result<MatchingCover> {
    let [a, b] = hexagon_arrays(g, c)?;
    let (Some(a), Some(b)) = (a, b) else {
        return Err(Error::Precondition("hexagon is not double-core".into()));
    };
    let matchings: Vec<PerfectMatching> = a.members().into_iter().chain(b.members()).map(PerfectMatching).collect();
    let cover = MatchingCover::new(g, matchings);
    if !cover.is_fulkerson() {
        return Err(Error::Consistency("double-core arrays do not cover every edge twice".into()));
    }
    Ok(cover)
}
