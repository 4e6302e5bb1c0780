//! Perfect matchings, 3-arrays, their characteristic flows and cores.

mod defect;

pub use defect::{
    classify_hexagon, defect, defect_exhaustive, defect_is_three, defect_lower_bound, fulkerson_from_double_core,
    hexagon_arrays, hexagonal_cores, oddness, oddness_from, optimal_arrays, Defect, HexagonClass, HexagonWitness, Pairing,
};

use crate::edgeset::{EdgeSet, MAX_EDGES};
use crate::error::{Error, Result};
use crate::graph::CubicGraph;

/// Edge set meeting every vertex exactly once.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PerfectMatching(pub EdgeSet);

impl PerfectMatching {
    pub fn edges(self) -> EdgeSet {
        self.0
    }

    pub fn is_valid(self, g: &CubicGraph) -> bool {
        let mut hit = vec![0u8; g.vertex_count()];
        for e in self.0.iter() {
            match g.full_endpoints(e) {
                Some((a, b)) if a != b => {
                    hit[a] += 1;
                    hit[b] += 1;
                }
                _ => return false,
            }
        }
        hit.iter().all(|&h| h == 1)
    }
}

pub(crate) fn require_bitset_size(g: &CubicGraph) -> Result<()> {
    g.require_closed()?;
    if g.edge_count() > MAX_EDGES || g.vertex_count() > 128 {
        return Err(Error::TooLarge(g.edge_count()));
    }
    Ok(())
}

/// All perfect matchings, sorted by edge-set order.
pub fn perfect_matchings(g: &CubicGraph) -> Result<Vec<PerfectMatching>> {
    require_bitset_size(g)?;
    Ok(enumerate(g))
}

/// Perfect matchings of a multipole: edge sets meeting every vertex once,
/// where a dangling edge may be used to match its single end.
pub fn pole_perfect_matchings(g: &CubicGraph) -> Result<Vec<PerfectMatching>> {
    if g.edge_count() > MAX_EDGES || g.vertex_count() > 128 {
        return Err(Error::TooLarge(g.edge_count()));
    }
    Ok(enumerate(g))
}

fn enumerate(g: &CubicGraph) -> Vec<PerfectMatching> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let full: u128 = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    fn rec(g: &CubicGraph, covered: u128, full: u128, chosen: EdgeSet, out: &mut Vec<PerfectMatching>) {
        if covered == full {
            out.push(PerfectMatching(chosen));
            return;
        }
        let v = (!covered).trailing_zeros() as usize;
        let edges = g.incident_edges(v);
        for (i, &e) in edges.iter().enumerate() {
            if edges[..i].contains(&e) {
                continue;
            }
            let hit = match g.opposite(e, v) {
                Some(w) if w == v || covered >> w & 1 == 1 => continue,
                Some(w) => 1u128 << v | 1 << w,
                None => 1u128 << v,
            };
            let mut next = chosen;
            next.insert(e);
            rec(g, covered | hit, full, next, out);
        }
    }
    if n > 0 {
        rec(g, 0, full, EdgeSet::EMPTY, &mut out);
    } else {
        out.push(PerfectMatching(EdgeSet::EMPTY));
    }
    out.sort();
    out
}

/// Three perfect matchings, not necessarily distinct.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThreeArray {
    members: [EdgeSet; 3],
    edge_count: usize,
}

impl ThreeArray {
    pub fn new(g: &CubicGraph, m1: PerfectMatching, m2: PerfectMatching, m3: PerfectMatching) -> Result<Self> {
        for m in [m1, m2, m3] {
            if !m.is_valid(g) {
                return Err(Error::Precondition(format!("{:?} is not a perfect matching", m.0)));
            }
        }
        Ok(ThreeArray { members: [m1.0, m2.0, m3.0], edge_count: g.edge_count() })
    }

    pub(crate) fn from_sets(members: [EdgeSet; 3], edge_count: usize) -> Self {
        ThreeArray { members, edge_count }
    }

    pub fn members(&self) -> [EdgeSet; 3] {
        self.members
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn weight(&self, e: usize) -> usize {
        self.members.iter().filter(|m| m.contains(e)).count()
    }

    /// Member indices (1-based) containing `e`, ascending.
    pub fn colour_list(&self, e: usize) -> Vec<u8> {
        (0..3).filter(|&i| self.members[i].contains(e)).map(|i| i as u8 + 1).collect()
    }

    /// Edges of weight exactly `k`.
    pub fn covered_exactly(&self, k: usize) -> EdgeSet {
        let [a, b, c] = self.members;
        let all = EdgeSet::full(self.edge_count);
        match k {
            0 => all.difference(a.union(b).union(c)),
            1 => EdgeSet((a.0 ^ b.0 ^ c.0) & !(a.0 & b.0 & c.0)),
            2 => EdgeSet((a.0 & b.0 | a.0 & c.0 | b.0 & c.0) & !(a.0 & b.0 & c.0)),
            3 => a.intersection(b).intersection(c),
            _ => EdgeSet::EMPTY,
        }
    }

    pub fn uncovered(&self) -> EdgeSet {
        self.covered_exactly(0)
    }

    /// Edges covered at least twice.
    pub fn multiply_covered(&self) -> EdgeSet {
        self.covered_exactly(2).union(self.covered_exactly(3))
    }

    /// The members sorted, which is the canonical form of the multiset.
    pub fn sorted(&self) -> ThreeArray {
        let mut m = self.members;
        m.sort();
        ThreeArray { members: m, edge_count: self.edge_count }
    }
}

/// Value of the characteristic flow: bit `i` set when the edge is not in `M_{i+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FanoPoint(pub u8);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanoColouring {
    pub flow: Vec<FanoPoint>,
}

impl FanoColouring {
    pub fn is_nowhere_zero(&self) -> bool {
        self.flow.iter().all(|p| p.0 != 0)
    }

    pub fn satisfies_kirchhoff(&self, g: &CubicGraph) -> bool {
        (0..g.vertex_count()).all(|v| g.incident_edges(v).iter().fold(0u8, |acc, &e| acc ^ self.flow[e].0) == 0)
    }

    /// Flow values around `v` as sorted colour lists.
    pub fn vertex_line(&self, g: &CubicGraph, v: usize) -> [u8; 3] {
        let mut l = g.incident_edges(v).map(|e| self.flow[e].0);
        l.sort();
        l
    }
}

/// Point sets of the four lines that can occur around a vertex, written as
/// sorted triples of flow values.
pub fn f4_lines() -> [[u8; 3]; 4] {
    // complements of colour lists {1},{2},{3} / {12},{3},{} / {13},{2},{} / {23},{1},{}
    let pt = |list: &[u8]| -> u8 { 0b111 & !list.iter().fold(0, |acc, &i| acc | 1 << (i - 1)) };
    let mut out = [
        [pt(&[1]), pt(&[2]), pt(&[3])],
        [pt(&[1, 2]), pt(&[3]), pt(&[])],
        [pt(&[1, 3]), pt(&[2]), pt(&[])],
        [pt(&[2, 3]), pt(&[1]), pt(&[])],
    ];
    for l in out.iter_mut() {
        l.sort();
    }
    out
}

pub fn characteristic_flow(a: &ThreeArray) -> FanoColouring {
    let flow = (0..a.edge_count)
        .map(|e| FanoPoint((0..3).filter(|&i| !a.members[i].contains(e)).fold(0, |acc, i| acc | 1 << i)))
        .collect();
    FanoColouring { flow }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoreComponent {
    /// Even circuit alternating uncovered and doubly covered edges.
    Circuit { vertices: Vec<usize>, edges: Vec<usize> },
    /// Piece with 3-valent vertices, a subdivision of a cubic graph.
    Subdivided { vertices: Vec<usize>, edges: Vec<usize> },
}

impl CoreComponent {
    pub fn edges(&self) -> &[usize] {
        match self {
            CoreComponent::Circuit { edges, .. } | CoreComponent::Subdivided { edges, .. } => edges,
        }
    }

    pub fn vertices(&self) -> &[usize] {
        match self {
            CoreComponent::Circuit { vertices, .. } | CoreComponent::Subdivided { vertices, .. } => vertices,
        }
    }
}

/// Subgraph formed by the edges that are not simply covered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreSubgraph {
    pub edges: EdgeSet,
    pub components: Vec<CoreComponent>,
    pub regular: bool,
}

impl CoreSubgraph {
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// The vertex set when the core is a single circuit of length `len`.
    pub fn single_circuit(&self, len: usize) -> Option<&[usize]> {
        match self.components.as_slice() {
            [CoreComponent::Circuit { vertices, .. }] if vertices.len() == len => Some(vertices),
            _ => None,
        }
    }
}

pub fn core_of(g: &CubicGraph, a: &ThreeArray) -> Result<CoreSubgraph> {
    let e0 = a.covered_exactly(0);
    let e2 = a.covered_exactly(2);
    let e3 = a.covered_exactly(3);
    let core = e0.union(e2).union(e3);
    if e0.len() != e2.len() + 2 * e3.len() {
        return Err(Error::Consistency("uncovered count differs from |E2| + 2|E3|".into()));
    }
    let n = g.vertex_count();
    let mut deg = vec![0usize; n];
    for e in core.iter() {
        let (x, y) = g.full_endpoints(e).ok_or(Error::HasSemiedges)?;
        deg[x] += 1;
        deg[y] += 1;
    }
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for s in 0..n {
        if deg[s] == 0 || seen[s] {
            continue;
        }
        let mut vs = vec![s];
        let mut es = EdgeSet::EMPTY;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for e in g.incident_edges(v) {
                if !core.contains(e) {
                    continue;
                }
                es.insert(e);
                let w = g.opposite(e, v).expect("closed");
                if !seen[w] {
                    seen[w] = true;
                    vs.push(w);
                    stack.push(w);
                }
            }
        }
        if vs.iter().all(|&v| deg[v] == 2) {
            // Walk the circuit from its least vertex toward the smaller neighbour.
            let start = *vs.iter().min().expect("nonempty");
            let (vertices, edges) = walk_circuit(g, core, start);
            for (i, &e) in edges.iter().enumerate() {
                let want = if i % 2 == 0 { a.weight(edges[0]) } else { 2 - a.weight(edges[0]) };
                if a.weight(e) != want || a.weight(e) == 1 || a.weight(e) == 3 {
                    return Err(Error::Consistency("core circuit does not alternate weights 0 and 2".into()));
                }
            }
            components.push(CoreComponent::Circuit { vertices, edges });
        } else {
            vs.sort_unstable();
            components.push(CoreComponent::Subdivided { vertices: vs, edges: es.to_vec() });
        }
    }
    let regular = e3.is_empty();
    if regular != components.iter().all(|c| matches!(c, CoreComponent::Circuit { .. })) {
        return Err(Error::Consistency("core regularity disagrees with its component shapes".into()));
    }
    Ok(CoreSubgraph { edges: core, components, regular })
}

fn walk_circuit(g: &CubicGraph, core: EdgeSet, start: usize) -> (Vec<usize>, Vec<usize>) {
    let mut at_start: Vec<usize> = g.incident_edges(start).into_iter().filter(|&e| core.contains(e)).collect();
    at_start.sort_by_key(|&e| (g.opposite(e, start), e));
    let mut vertices = vec![start];
    let mut edges = Vec::new();
    let mut e = at_start[0];
    let mut v = start;
    loop {
        edges.push(e);
        let w = g.opposite(e, v).expect("closed");
        if w == start {
            break;
        }
        vertices.push(w);
        e = g.incident_edges(w).into_iter().find(|&f| core.contains(f) && f != e).expect("degree two");
        v = w;
    }
    (vertices, edges)
}
