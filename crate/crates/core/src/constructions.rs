//! Vertex inflation, 2- and 3-sums, and the heavy-cluster snark family.

use crate::colouring::{classify_4pole, classify_snark, kaszonyi, FourPoleClass};
use crate::error::{Error, Result};
use crate::graph::{
    cyclic_edge_connectivity, delete_vertices, disjoint_union, girth, join_semiedges, junction, Connector,
    CubicGraph, CyclicConnectivity, GraphBuilder, Multipole,
};
use crate::matching::{defect, optimal_arrays, Defect};
use crate::named;
use serde::Serialize;

/// How the three dangling edges of `g - u` meet those of `h - v`:
/// the `i`-th edge of `g - u` is joined to edge `perm[i]` of `h - v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Wiring(pub [usize; 3]);

impl Wiring {
    pub const IDENTITY: Wiring = Wiring([0, 1, 2]);

    /// The six wirings in lexicographic order.
    pub fn all() -> [Wiring; 6] {
        [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]].map(Wiring)
    }
}

fn three_pole(g: &CubicGraph, v: usize) -> Result<(Multipole, Vec<usize>)> {
    g.require_closed()?;
    g.check_vertex(v)?;
    if g.incident_edges(v).iter().any(|&e| g.is_loop(e)) {
        return Err(Error::Precondition(format!("vertex {v} carries a loop")));
    }
    let pole = delete_vertices(g, &[v])?.pole;
    let darts = pole.connector(&format!("v{v}")).expect("deleted vertex connector").darts.clone();
    Ok((pole, darts))
}

/// Replaces `u` in `g` by `h - v`. Vertices of `g - u` come first.
pub fn three_sum(g: &CubicGraph, u: usize, h: &CubicGraph, v: usize, wiring: Wiring) -> Result<CubicGraph> {
    let mut p = wiring.0;
    p.sort_unstable();
    if p != [0, 1, 2] {
        return Err(Error::Precondition(format!("{:?} is not a permutation", wiring.0)));
    }
    let (a, da) = three_pole(g, u)?;
    let (b, db) = three_pole(h, v)?;
    let pairs: Vec<(usize, usize)> = (0..3).map(|i| (da[i], db[wiring.0[i]])).collect();
    Ok(junction(&a, &b, &pairs)?.pole.into_graph())
}

/// Replaces `v` by a triangle; the new vertices are the last three.
pub fn inflate_vertex(g: &CubicGraph, v: usize) -> Result<CubicGraph> {
    three_sum(g, v, &named::k4(), 0, Wiring::IDENTITY)
}

fn edges_without(g: &CubicGraph, drop: &[usize]) -> Vec<(usize, usize)> {
    g.edge_list().into_iter().enumerate().filter(|(i, _)| !drop.contains(i)).map(|(_, p)| p).collect()
}

/// Subdivides `e` and `f` twice each and joins the new vertices into a
/// quadrilateral. The four new vertices are the last ones.
pub fn insert_quadrilateral(g: &CubicGraph, e: usize, f: usize) -> Result<CubicGraph> {
    g.require_closed()?;
    g.check_edge(e)?;
    g.check_edge(f)?;
    let (x, y) = g.full_endpoints(e).expect("closed");
    let (z, w) = g.full_endpoints(f).expect("closed");
    if e == f || [x, y].iter().any(|v| [z, w].contains(v)) {
        return Err(Error::Precondition(format!("edges {e} and {f} are not disjoint")));
    }
    let n = g.vertex_count();
    let (p1, p2, q1, q2) = (n, n + 1, n + 2, n + 3);
    let mut edges = edges_without(g, &[e, f]);
    edges.extend([(x, p1), (p1, p2), (p2, y), (z, q1), (q1, q2), (q2, w), (p1, q1), (p2, q2)]);
    CubicGraph::from_edges(n + 4, &edges)
}

/// Grows a quadrilateral on the edge `ab`: the edges `a x` and `b y` leaving
/// it through `leave_a` and `leave_b` are replaced by a path `a u1 y`, `b u2 x`
/// with `u1 u2` an edge. The new vertices are the last two.
pub fn grow_quadrilateral(g: &CubicGraph, ab: usize, leave_a: usize, leave_b: usize) -> Result<CubicGraph> {
    g.require_closed()?;
    for e in [ab, leave_a, leave_b] {
        g.check_edge(e)?;
    }
    let (a, b) = g.full_endpoints(ab).expect("closed");
    let x = g.opposite(leave_a, a).filter(|_| leave_a != ab && g.endpoints(leave_a).contains(&Some(a)));
    let y = g.opposite(leave_b, b).filter(|_| leave_b != ab && g.endpoints(leave_b).contains(&Some(b)));
    let (Some(x), Some(y)) = (x, y) else {
        return Err(Error::Precondition(format!("edges {leave_a}, {leave_b} do not leave edge {ab}")));
    };
    let n = g.vertex_count();
    let (u1, u2) = (n, n + 1);
    let mut edges = edges_without(g, &[leave_a, leave_b]);
    edges.extend([(a, u1), (u1, y), (u1, u2), (u2, b), (u2, x)]);
    CubicGraph::from_edges(n + 2, &edges)
}

/// Deletes `e` from `g` and `f` from `h` and reconnects the four 2-valent
/// vertices across; `crossed` swaps the two new edges.
pub fn two_sum(g: &CubicGraph, e: usize, h: &CubicGraph, f: usize, crossed: bool) -> Result<CubicGraph> {
    g.require_closed()?;
    h.require_closed()?;
    g.check_edge(e)?;
    h.check_edge(f)?;
    if g.is_loop(e) || h.is_loop(f) {
        return Err(Error::Precondition("2-sum along a loop".into()));
    }
    let n = g.vertex_count();
    let mut b = GraphBuilder::new(n + h.vertex_count());
    for x in 0..g.edge_count() {
        if x != e {
            let (p, q) = g.full_endpoints(x).expect("closed");
            b.edge(p, q)?;
        }
    }
    for x in 0..h.edge_count() {
        if x != f {
            let (p, q) = h.full_endpoints(x).expect("closed");
            b.edge(p + n, q + n)?;
        }
    }
    let (a1, a2) = g.full_endpoints(e).expect("closed");
    let (b1, b2) = h.full_endpoints(f).expect("closed");
    let (b1, b2) = if crossed { (b2, b1) } else { (b1, b2) };
    b.edge(a1, b1 + n)?;
    b.edge(a2, b2 + n)?;
    b.build()
}

/// The Petersen graph with three independent edges of a 6-cycle severed,
/// as a (2,2,2)-pole.
///
/// Vertex 0 is the centre, vertices `1..=9` run around the 9-cycle with
/// edge `i` joining cycle vertices `i` and `i+1`. Edges 9, 10, 11 join the
/// centre to cycle positions 0, 3, 6. Connector `S<j>` holds the two halves
/// of the `j`-th severed edge.
pub fn build_z_hexapole() -> Multipole {
    let mut b = GraphBuilder::new(10);
    let c = |i: usize| 1 + i % 9;
    for i in 0..9 {
        b.edge(c(i), c(i + 1)).expect("in range");
    }
    for i in [0, 3, 6] {
        b.edge(0, c(i)).expect("in range");
    }
    let halves = [[7, 2], [1, 5], [4, 8]];
    let mut connectors = Vec::new();
    for (j, pair) in halves.iter().enumerate() {
        let darts = pair.iter().map(|&i| b.dangling(c(i)).expect("in range")).collect();
        connectors.push(Connector { name: format!("S{j}"), darts });
    }
    Multipole::new(b.build().expect("cubic"), connectors).expect("partition")
}

/// Vertices of `build_z_hexapole` adjacent to the centre, in spoke order.
pub const Z_SPOKE_ENDS: [usize; 3] = [1, 4, 7];

/// Pairing of the six output semiedges `2j + i` (second connector of pole
/// `j`, semiedge `i`), each pair joining different poles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OutputWiring(pub [(usize, usize); 3]);

impl OutputWiring {
    /// Every pairing in which the two semiedges of each output connector go
    /// to the two other connectors, in lexicographic order.
    pub fn all() -> Vec<OutputWiring> {
        let mut out = Vec::new();
        for a in 1..6 {
            let rest: Vec<usize> = (1..6).filter(|&x| x != a).collect();
            for b in 1..4 {
                let r: Vec<usize> = rest[1..].iter().copied().filter(|&x| x != rest[b]).collect();
                let w = OutputWiring([(0, a), (rest[0], rest[b]), (r[0], r[1])]);
                if w.validate().is_ok() {
                    out.push(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    fn validate(&self) -> Result<()> {
        let mut seen = [false; 6];
        let mut met = [[false; 3]; 3];
        for &(x, y) in &self.0 {
            for z in [x, y] {
                if z >= 6 || seen[z] {
                    return Err(Error::Precondition(format!("{:?} is not a perfect matching of 6 semiedges", self.0)));
                }
                seen[z] = true;
            }
            let (px, py) = (x / 2, y / 2);
            if px == py {
                return Err(Error::Precondition(format!("output connector {px} wired to itself")));
            }
            met[px][py] = true;
            met[py][px] = true;
        }
        if !(met[0][1] && met[1][2] && met[0][2]) {
            return Err(Error::Precondition("each output connector must meet both others".into()));
        }
        Ok(())
    }
}

/// A member of the heavy-cluster family with the location of its hexapole.
#[derive(Clone, Debug)]
pub struct HeavyClusterSnark {
    pub graph: CubicGraph,
    /// Vertices of the hexapole, centre first.
    pub z_vertices: Vec<usize>,
    pub wiring: OutputWiring,
}

/// Joins the first connector of each isochromatic 4-pole to the hexapole and
/// pairs the second connectors by `wiring`.
pub fn build_heavy_cluster_snark(poles: [&Multipole; 3], wiring: OutputWiring) -> Result<HeavyClusterSnark> {
    wiring.validate()?;
    for p in poles {
        let shape = p.shape();
        if shape != vec![2, 2] {
            return Err(Error::Precondition(format!("expected a (2,2)-pole, got shape {shape:?}")));
        }
        let c = p.connectors();
        let along = [(c[0].darts[0], c[0].darts[1]), (c[1].darts[0], c[1].darts[1])];
        match classify_4pole(p)? {
            FourPoleClass::Isochromatic { pairs } if pairs == along => {}
            other => return Err(Error::Precondition(format!("pole is not isochromatic along its connectors: {other:?}"))),
        }
    }
    let z = build_z_hexapole();
    let mut acc = z.clone();
    let mut inputs = Vec::new();
    let mut outputs = Vec::new();
    for p in poles {
        let (u, off) = disjoint_union(&acc, p);
        inputs.push(p.connectors()[0].darts.iter().map(|d| d + off).collect::<Vec<_>>());
        outputs.extend(p.connectors()[1].darts.iter().map(|d| d + off));
        acc = u;
    }
    let mut pairs = Vec::new();
    for j in 0..3 {
        let s = &z.connectors()[j].darts;
        pairs.push((s[0], inputs[j][0]));
        pairs.push((s[1], inputs[j][1]));
    }
    for &(x, y) in &wiring.0 {
        pairs.push((outputs[x], outputs[y]));
    }
    let joined = join_semiedges(&acc, &pairs)?;
    let graph = joined.pole.into_graph();
    graph.require_closed()?;
    Ok(HeavyClusterSnark { graph, z_vertices: (0..10).collect(), wiring })
}

/// Petersen minus two adjacent vertices, connectors by deleted vertex.
pub fn petersen_isochromatic_pole() -> Multipole {
    delete_vertices(&named::petersen(), &[0, 1]).expect("valid vertices").pole
}

/// Computed properties used to validate a heavy-cluster snark.
#[derive(Clone, Debug, Serialize)]
pub struct HeavyClusterReport {
    pub snark: bool,
    pub girth: Option<usize>,
    pub cyclic_connectivity: Option<usize>,
    pub defect: usize,
    pub core_inside_z: bool,
    pub z_heavy: bool,
}

impl HeavyClusterReport {
    pub fn nontrivial(&self) -> bool {
        self.snark && self.girth.is_some_and(|g| g >= 5) && self.cyclic_connectivity.is_some_and(|c| c >= 4)
    }

    /// Snark, nontrivial, no optimal core inside the hexapole, defect at
    /// least four and a heavy hexapole.
    pub fn passes(&self) -> bool {
        self.nontrivial() && !self.core_inside_z && self.defect >= 4 && self.z_heavy
    }
}

pub fn validate_heavy_cluster_snark(s: &HeavyClusterSnark) -> Result<(HeavyClusterReport, Defect)> {
    let g = &s.graph;
    let snark = classify_snark(g)?.is_snark();
    let cc = match cyclic_edge_connectivity(g, 6)? {
        CyclicConnectivity::Exact { value, .. } => Some(value),
        CyclicConnectivity::AboveCap(_) => None,
    };
    let d = defect(g)?;
    let mut in_z = vec![false; g.vertex_count()];
    for &v in &s.z_vertices {
        in_z[v] = true;
    }
    let mut core_inside_z = false;
    for a in optimal_arrays(g, d.value)? {
        let core = a.uncovered().union(a.multiply_covered());
        if core.iter().all(|e| {
            let (x, y) = g.full_endpoints(e).expect("closed");
            in_z[x] && in_z[y]
        }) {
            core_inside_z = true;
            break;
        }
    }
    let centre = s.z_vertices[0];
    let spoke = g.incident_edges(centre)[0];
    let z_heavy = kaszonyi(g, spoke)? > 0;
    let report = HeavyClusterReport { snark, girth: girth(g), cyclic_connectivity: cc, defect: d.value, core_inside_z, z_heavy };
    Ok((report, d))
}

/// The 34-vertex snark assembled from three copies of Petersen minus an
/// edge, using the first wiring that passes validation.
pub fn example_34() -> Result<(HeavyClusterSnark, HeavyClusterReport)> {
    let p = petersen_isochromatic_pole();
    for w in OutputWiring::all() {
        let s = build_heavy_cluster_snark([&p, &p, &p], w)?;
        let (r, _) = validate_heavy_cluster_snark(&s)?;
        if r.passes() {
            return Ok((s, r));
        }
    }
    Err(Error::Consistency("no output wiring yields a valid heavy-cluster snark".into()))
}
