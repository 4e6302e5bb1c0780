//! Dart-based cubic multigraphs and multipoles.
//!
//! Every edge owns two darts, `2e` and `2e + 1`. A dart is either attached to
//! a vertex or free; free darts are the semiedges of a multipole. Loops,
//! parallel edges, dangling edges (one free dart) and isolated edges (two free
//! darts) are all representable.

mod graph6;
mod native;
mod ops;
mod structure;

pub use graph6::{parse_graph6, parse_graph6_list, to_graph6};
pub use native::{parse_native, to_native};
pub use ops::{contract, delete_vertices, disjoint_union, join_semiedges, junction, Contraction, JoinResult, Subpole};
pub use structure::{
    bridges, components, cycle_separating_cuts, cyclic_edge_connectivity, edge_cut, girth, has_two_disjoint_cycles,
    induced_cycles, is_connected, is_two_connected, CyclicConnectivity, Cycle, EdgeCut,
};

use crate::error::{Error, Result};

/// Cubic multigraph, possibly with semiedges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubicGraph {
    ends: Vec<Option<usize>>,
    rotation: Vec<[usize; 3]>,
}

#[inline]
pub fn mate(dart: usize) -> usize {
    dart ^ 1
}

#[inline]
pub fn edge_of(dart: usize) -> usize {
    dart >> 1
}

impl CubicGraph {
    /// Builds a closed cubic graph from an edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut b = GraphBuilder::new(n);
        for &(u, v) in edges {
            b.edge(u, v)?;
        }
        b.build()
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.ends.len() / 2
    }

    pub fn dart_count(&self) -> usize {
        self.ends.len()
    }

    /// Vertex holding `dart`, or `None` for a free end.
    #[inline]
    pub fn dart_vertex(&self, dart: usize) -> Option<usize> {
        self.ends[dart]
    }

    #[inline]
    pub fn vertex_darts(&self, v: usize) -> [usize; 3] {
        self.rotation[v]
    }

    #[inline]
    pub fn incident_edges(&self, v: usize) -> [usize; 3] {
        self.rotation[v].map(edge_of)
    }

    #[inline]
    pub fn endpoints(&self, e: usize) -> [Option<usize>; 2] {
        [self.ends[2 * e], self.ends[2 * e + 1]]
    }

    /// Both endpoints of a full edge.
    pub fn full_endpoints(&self, e: usize) -> Option<(usize, usize)> {
        match self.endpoints(e) {
            [Some(a), Some(b)] => Some((a, b)),
            _ => None,
        }
    }

    /// Neighbours of `v` in rotation order; `None` marks a free end.
    pub fn neighbours(&self, v: usize) -> [Option<usize>; 3] {
        self.rotation[v].map(|d| self.ends[mate(d)])
    }

    /// The other endpoint of edge `e` seen from `v`.
    pub fn opposite(&self, e: usize, v: usize) -> Option<usize> {
        let [a, b] = self.endpoints(e);
        if a == Some(v) {
            b
        } else {
            a
        }
    }

    /// Free darts in dart order.
    pub fn semiedges(&self) -> Vec<usize> {
        (0..self.ends.len()).filter(|&d| self.ends[d].is_none()).collect()
    }

    pub fn semiedge_count(&self) -> usize {
        self.ends.iter().filter(|x| x.is_none()).count()
    }

    pub fn is_closed(&self) -> bool {
        self.ends.iter().all(Option::is_some)
    }

    pub fn require_closed(&self) -> Result<()> {
        if self.is_closed() {
            Ok(())
        } else {
            Err(Error::HasSemiedges)
        }
    }

    pub fn is_loop(&self, e: usize) -> bool {
        matches!(self.endpoints(e), [Some(a), Some(b)] if a == b)
    }

    pub fn has_loop(&self) -> bool {
        (0..self.edge_count()).any(|e| self.is_loop(e))
    }

    /// True when there are no loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        if self.has_loop() {
            return false;
        }
        let mut seen = std::collections::HashSet::new();
        for e in 0..self.edge_count() {
            if let Some((a, b)) = self.full_endpoints(e) {
                if !seen.insert((a.min(b), a.max(b))) {
                    return false;
                }
            }
        }
        true
    }

    /// Edges joining `u` and `v`.
    pub fn edges_between(&self, u: usize, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .incident_edges(u)
            .into_iter()
            .filter(|&e| match self.full_endpoints(e) {
                Some((a, b)) => (a == u && b == v) || (a == v && b == u),
                None => false,
            })
            .collect();
        out.dedup();
        out
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.neighbours(u).contains(&Some(v))
    }

    /// Edge list of a closed graph as `(u, v)` pairs in edge order.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        (0..self.edge_count()).filter_map(|e| self.full_endpoints(e)).collect()
    }

    pub(crate) fn from_parts(ends: Vec<Option<usize>>, n: usize) -> Result<Self> {
        let mut rot: Vec<Vec<usize>> = vec![Vec::with_capacity(3); n];
        for (d, end) in ends.iter().enumerate() {
            if let Some(v) = *end {
                if v >= n {
                    return Err(Error::VertexOutOfRange(v));
                }
                rot[v].push(d);
            }
        }
        let mut rotation = Vec::with_capacity(n);
        for (v, r) in rot.into_iter().enumerate() {
            if r.len() != 3 {
                return Err(Error::NonCubic { vertex: v, degree: r.len() });
            }
            rotation.push([r[0], r[1], r[2]]);
        }
        Ok(CubicGraph { ends, rotation })
    }

    pub(crate) fn ends(&self) -> &[Option<usize>] {
        &self.ends
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange(v))
        }
    }

    pub fn check_edge(&self, e: usize) -> Result<()> {
        if e < self.edge_count() {
            Ok(())
        } else {
            Err(Error::EdgeOutOfRange(e))
        }
    }
}

/// Incremental constructor; vertex rotations follow dart insertion order.
#[derive(Clone, Debug, Default)]
pub struct GraphBuilder {
    n: usize,
    ends: Vec<Option<usize>>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder { n, ends: Vec::new() }
    }

    pub fn add_vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    pub fn edge(&mut self, u: usize, v: usize) -> Result<usize> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange(x));
            }
        }
        self.ends.push(Some(u));
        self.ends.push(Some(v));
        Ok(self.ends.len() / 2 - 1)
    }

    /// Edge with one end at `u` and the other end free; returns the free dart.
    pub fn dangling(&mut self, u: usize) -> Result<usize> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange(u));
        }
        self.ends.push(Some(u));
        self.ends.push(None);
        Ok(self.ends.len() - 1)
    }

    /// Edge with both ends free; returns its two darts.
    pub fn isolated(&mut self) -> (usize, usize) {
        self.ends.push(None);
        self.ends.push(None);
        (self.ends.len() - 2, self.ends.len() - 1)
    }

    pub fn build(self) -> Result<CubicGraph> {
        CubicGraph::from_parts(self.ends, self.n)
    }
}

/// Named group of semiedges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Connector {
    pub name: String,
    pub darts: Vec<usize>,
}

/// A cubic graph together with an ordered partition of its semiedges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multipole {
    graph: CubicGraph,
    connectors: Vec<Connector>,
}

impl Multipole {
    pub fn new(graph: CubicGraph, connectors: Vec<Connector>) -> Result<Self> {
        let mut seen = vec![false; graph.dart_count()];
        let mut total = 0;
        for c in &connectors {
            for &d in &c.darts {
                if d >= graph.dart_count() || graph.dart_vertex(d).is_some() {
                    return Err(Error::Precondition(format!("connector {} holds dart {d}, which is not free", c.name)));
                }
                if std::mem::replace(&mut seen[d], true) {
                    return Err(Error::Precondition(format!("dart {d} appears in two connectors")));
                }
                total += 1;
            }
        }
        if total != graph.semiedge_count() {
            return Err(Error::Precondition("connectors do not cover every semiedge".into()));
        }
        Ok(Multipole { graph, connectors })
    }

    /// All semiedges in a single connector named `S`.
    pub fn single_connector(graph: CubicGraph) -> Self {
        let darts = graph.semiedges();
        let connectors = if darts.is_empty() {
            Vec::new()
        } else {
            vec![Connector { name: "S".into(), darts }]
        };
        Multipole { graph, connectors }
    }

    pub fn graph(&self) -> &CubicGraph {
        &self.graph
    }

    pub fn into_graph(self) -> CubicGraph {
        self.graph
    }

    pub fn connectors(&self) -> &[Connector] {
        &self.connectors
    }

    pub fn connector(&self, name: &str) -> Option<&Connector> {
        self.connectors.iter().find(|c| c.name == name)
    }

    /// Connector sizes `(n_1, ..., n_k)`.
    pub fn shape(&self) -> Vec<usize> {
        self.connectors.iter().map(|c| c.darts.len()).collect()
    }

    /// Semiedges in connector order.
    pub fn semiedges(&self) -> Vec<usize> {
        self.connectors.iter().flat_map(|c| c.darts.iter().copied()).collect()
    }

    pub fn with_connectors(self, connectors: Vec<Connector>) -> Result<Self> {
        Multipole::new(self.graph, connectors)
    }
}

impl From<CubicGraph> for Multipole {
    fn from(g: CubicGraph) -> Self {
        Multipole::single_connector(g)
    }
}
