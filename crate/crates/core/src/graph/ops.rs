use super::{edge_of, mate, Connector, CubicGraph, Multipole};
use crate::error::{Error, Result};

/// Result of deleting a vertex set.
#[derive(Clone, Debug)]
pub struct Subpole {
    pub pole: Multipole,
    /// Old vertex id to new vertex id.
    pub vertex_map: Vec<Option<usize>>,
    /// Old edge id to new edge id; edges inside the deleted set vanish.
    pub edge_map: Vec<Option<usize>>,
}

/// Removes `s`. Edges leaving `s` become dangling, with one connector `v<id>`
/// per deleted vertex. Semiedges already present in `g` go to connector `S`.
pub fn delete_vertices(g: &CubicGraph, s: &[usize]) -> Result<Subpole> {
    let n = g.vertex_count();
    let mut gone = vec![false; n];
    for &v in s {
        g.check_vertex(v)?;
        gone[v] = true;
    }
    let mut vertex_map = vec![None; n];
    let mut next = 0;
    for v in 0..n {
        if !gone[v] {
            vertex_map[v] = Some(next);
            next += 1;
        }
    }
    let mut ends = Vec::with_capacity(g.dart_count());
    let mut edge_map = vec![None; g.edge_count()];
    let mut new_dart = vec![None; g.dart_count()];
    for e in 0..g.edge_count() {
        let [a, b] = g.endpoints(e);
        let dead = |x: Option<usize>| x.is_some_and(|v| gone[v]);
        if dead(a) && dead(b) {
            continue;
        }
        edge_map[e] = Some(ends.len() / 2);
        for (d, x) in [(2 * e, a), (2 * e + 1, b)] {
            new_dart[d] = Some(ends.len());
            ends.push(x.and_then(|v| vertex_map[v]));
        }
    }
    let graph = CubicGraph::from_parts(ends, next)?;
    let mut connectors = Vec::new();
    let old_free: Vec<usize> = g.semiedges().into_iter().filter_map(|d| new_dart[d]).collect();
    if !old_free.is_empty() {
        connectors.push(Connector { name: "S".into(), darts: old_free });
    }
    let mut order: Vec<usize> = s.to_vec();
    order.sort_unstable();
    order.dedup();
    for v in order {
        let darts: Vec<usize> = g.vertex_darts(v).into_iter().filter_map(|d| new_dart[d]).collect();
        if !darts.is_empty() {
            connectors.push(Connector { name: format!("v{v}"), darts });
        }
    }
    Ok(Subpole { pole: Multipole::new(graph, connectors)?, vertex_map, edge_map })
}

/// Places `b` after `a`; returns the union and the dart offset of `b`.
pub fn disjoint_union(a: &Multipole, b: &Multipole) -> (Multipole, usize) {
    let (ga, gb) = (a.graph(), b.graph());
    let n = ga.vertex_count();
    let offset = ga.dart_count();
    let mut ends = ga.ends().to_vec();
    ends.extend(gb.ends().iter().map(|x| x.map(|v| v + n)));
    let graph = CubicGraph::from_parts(ends, n + gb.vertex_count()).expect("union of cubic graphs is cubic");
    let mut connectors = a.connectors().to_vec();
    connectors.extend(b.connectors().iter().map(|c| Connector {
        name: c.name.clone(),
        darts: c.darts.iter().map(|d| d + offset).collect(),
    }));
    (Multipole::new(graph, connectors).expect("connectors stay a partition"), offset)
}

/// Outcome of a junction.
#[derive(Clone, Debug)]
pub struct JoinResult {
    pub pole: Multipole,
    /// Old dart to new dart, for darts that survive as edge ends.
    pub dart_map: Vec<Option<usize>>,
    /// Old edges merged into each new edge, in walk order.
    pub edge_origin: Vec<Vec<usize>>,
    /// Closed chains of paired isolated edges; they carry no vertex and vanish.
    pub free_loops: usize,
}

impl JoinResult {
    /// New edge containing old edge `e`, if it survived.
    pub fn edge_image(&self, e: usize) -> Option<usize> {
        self.dart_map[2 * e].or(self.dart_map[2 * e + 1]).map(edge_of).or_else(|| {
            self.edge_origin.iter().position(|chain| chain.contains(&e))
        })
    }
}

/// Identifies pairs of free darts of one multipole.
///
/// Joining `s` and `t` merges their edges into one. Pairing the two ends of an
/// isolated edge deletes it.
pub fn join_semiedges(m: &Multipole, pairs: &[(usize, usize)]) -> Result<JoinResult> {
    let g = m.graph();
    let nd = g.dart_count();
    let mut partner = vec![None; nd];
    for &(s, t) in pairs {
        for d in [s, t] {
            if d >= nd || g.dart_vertex(d).is_some() {
                return Err(Error::InvalidJunction(format!("dart {d} is not a semiedge")));
            }
            if partner[d].is_some() {
                return Err(Error::InvalidJunction(format!("semiedge {d} paired twice")));
            }
        }
        if s == t {
            return Err(Error::InvalidJunction(format!("semiedge {s} paired with itself")));
        }
        partner[s] = Some(t);
        partner[t] = Some(s);
    }
    let mut ends = Vec::new();
    let mut dart_map = vec![None; nd];
    let mut edge_origin = Vec::new();
    let mut seen_edge = vec![false; g.edge_count()];
    for t in 0..nd {
        if partner[t].is_some() || dart_map[t].is_some() {
            continue;
        }
        let mut chain = Vec::new();
        let mut cur = t;
        let end = loop {
            let e = edge_of(cur);
            seen_edge[e] = true;
            chain.push(e);
            let other = mate(cur);
            match partner[other] {
                Some(p) => cur = p,
                None => break other,
            }
        };
        dart_map[t] = Some(ends.len());
        ends.push(g.dart_vertex(t));
        dart_map[end] = Some(ends.len());
        ends.push(g.dart_vertex(end));
        edge_origin.push(chain);
    }
    // Whatever is left consists of closed chains of isolated edges.
    let mut free_loops = 0;
    for e in 0..g.edge_count() {
        if seen_edge[e] {
            continue;
        }
        free_loops += 1;
        let mut cur = 2 * e;
        loop {
            seen_edge[edge_of(cur)] = true;
            let p = partner[mate(cur)].expect("closed chain");
            if edge_of(p) == e {
                break;
            }
            cur = p;
        }
    }
    let graph = CubicGraph::from_parts(ends, g.vertex_count())?;
    let connectors = m
        .connectors()
        .iter()
        .map(|c| Connector {
            name: c.name.clone(),
            darts: c.darts.iter().filter(|&&d| partner[d].is_none()).map(|&d| dart_map[d].expect("terminal")).collect(),
        })
        .filter(|c| !c.darts.is_empty())
        .collect();
    Ok(JoinResult { pole: Multipole::new(graph, connectors)?, dart_map, edge_origin, free_loops })
}

/// Junction of two multipoles along `pairs` of (semiedge of `a`, semiedge of `b`).
///
/// Darts of `b` are renumbered by the union offset before joining; the
/// returned `dart_map` is indexed by union darts.
pub fn junction(a: &Multipole, b: &Multipole, pairs: &[(usize, usize)]) -> Result<JoinResult> {
    let (u, off) = disjoint_union(a, b);
    for &(x, y) in pairs {
        if x >= a.graph().dart_count() || y >= b.graph().dart_count() {
            return Err(Error::InvalidJunction(format!("pair ({x}, {y}) out of range")));
        }
    }
    let shifted: Vec<_> = pairs.iter().map(|&(x, y)| (x, y + off)).collect();
    join_semiedges(&u, &shifted)
}

/// Result of contracting the components of an induced subgraph.
#[derive(Clone, Debug)]
pub struct Contraction {
    pub graph: CubicGraph,
    pub vertex_map: Vec<usize>,
    pub edge_map: Vec<Option<usize>>,
}

/// Contracts every component of the subgraph induced by `h` to one vertex.
///
/// Fails with a degree error unless each component has exactly three
/// outgoing edge ends.
pub fn contract(g: &CubicGraph, h: &[usize]) -> Result<Contraction> {
    let n = g.vertex_count();
    let mut inside = vec![false; n];
    for &v in h {
        g.check_vertex(v)?;
        inside[v] = true;
    }
    let mut comp = vec![usize::MAX; n];
    for &s in h {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = s;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for w in g.neighbours(v).into_iter().flatten() {
                if inside[w] && comp[w] == usize::MAX {
                    comp[w] = s;
                    stack.push(w);
                }
            }
        }
    }
    let mut vertex_map = vec![usize::MAX; n];
    let mut next = 0;
    for v in 0..n {
        if inside[v] {
            let root = comp[v];
            if vertex_map[root] == usize::MAX {
                vertex_map[root] = next;
                next += 1;
            }
            vertex_map[v] = vertex_map[root];
        } else {
            vertex_map[v] = next;
            next += 1;
        }
    }
    let mut ends = Vec::new();
    let mut edge_map = vec![None; g.edge_count()];
    for (e, slot) in edge_map.iter_mut().enumerate() {
        if let Some((a, b)) = g.full_endpoints(e) {
            if inside[a] && inside[b] {
                continue;
            }
        }
        *slot = Some(ends.len() / 2);
        for x in g.endpoints(e) {
            ends.push(x.map(|v| vertex_map[v]));
        }
    }
    let graph = CubicGraph::from_parts(ends, next)?;
    Ok(Contraction { graph, vertex_map, edge_map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::girth;
    use crate::named;

    #[test]
    fn delete_nothing_is_identity() {
        let g = named::petersen();
        let s = delete_vertices(&g, &[]).unwrap();
        assert_eq!(s.pole.graph(), &g);
        assert!(s.pole.connectors().is_empty());
    }

    #[test]
    fn k4_minus_vertex_is_triangle_pole() {
        let s = delete_vertices(&named::k4(), &[0]).unwrap();
        let g = s.pole.graph();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.semiedge_count(), 3);
        assert_eq!(s.pole.shape(), vec![3]);
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn petersen_minus_adjacent_pair() {
        let g = named::petersen();
        let (u, v) = g.full_endpoints(0).unwrap();
        let s = delete_vertices(&g, &[u, v]).unwrap();
        assert_eq!(s.pole.graph().vertex_count(), 8);
        assert_eq!(s.pole.shape(), vec![2, 2]);
    }

    #[test]
    fn rejoin_restores_petersen() {
        let g = named::petersen();
        let (u, v) = g.full_endpoints(0).unwrap();
        let s = delete_vertices(&g, &[u, v]).unwrap();
        // Put u and v back as fresh vertices joined by an edge.
        let mut b = super::super::GraphBuilder::new(2);
        b.edge(0, 1).unwrap();
        let a0 = b.dangling(0).unwrap();
        let a1 = b.dangling(0).unwrap();
        let b0 = b.dangling(1).unwrap();
        let b1 = b.dangling(1).unwrap();
        let pair = Multipole::single_connector(b.build().unwrap());
        let cu = &s.pole.connector(&format!("v{u}")).unwrap().darts;
        let cv = &s.pole.connector(&format!("v{v}")).unwrap().darts;
        let j = junction(&s.pole, &pair, &[(cu[0], a0), (cu[1], a1), (cv[0], b0), (cv[1], b1)]).unwrap();
        let h = j.pole.graph();
        assert!(h.is_closed());
        assert_eq!((h.vertex_count(), h.edge_count()), (10, 15));
        assert_eq!(girth(h), Some(5));
    }

    #[test]
    fn isolated_edge_self_join_deletes_it() {
        let mut b = super::super::GraphBuilder::new(0);
        let (x, y) = b.isolated();
        let m = Multipole::single_connector(b.build().unwrap());
        let j = join_semiedges(&m, &[(x, y)]).unwrap();
        assert_eq!(j.pole.graph().edge_count(), 0);
        assert_eq!(j.free_loops, 1);
    }

    fn subdivided_k4_one_pole() -> (Multipole, usize) {
        // K_4 with edge 01 subdivided by vertex 4, which carries the dangling edge.
        let mut b = super::super::GraphBuilder::new(5);
        for (u, v) in [(0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)] {
            b.edge(u, v).unwrap();
        }
        let s = b.dangling(4).unwrap();
        (Multipole::single_connector(b.build().unwrap()), s)
    }

    #[test]
    fn two_one_poles_make_a_bridged_graph() {
        let (m, s) = subdivided_k4_one_pole();
        let j = junction(&m, &m, &[(s, s)]).unwrap();
        let g = j.pole.graph();
        assert!(g.is_closed());
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(crate::graph::bridges(g).len(), 1);
    }

    #[test]
    fn invalid_pairings() {
        let s = delete_vertices(&named::k4(), &[0]).unwrap().pole;
        let d = s.semiedges();
        assert!(join_semiedges(&s, &[(d[0], d[0])]).is_err());
        assert!(join_semiedges(&s, &[(d[0], d[1]), (d[1], d[2])]).is_err());
        assert!(join_semiedges(&s, &[(0, d[1])]).is_err() || s.graph().dart_vertex(0).is_none());
    }

    #[test]
    fn contract_single_vertex_is_identity() {
        let g = named::petersen();
        let c = contract(&g, &[3]).unwrap();
        assert_eq!(c.graph, g);
    }

    #[test]
    fn contract_non_cubic_is_flagged() {
        let g = named::petersen();
        let (u, v) = g.full_endpoints(0).unwrap();
        assert!(matches!(contract(&g, &[u, v]), Err(Error::NonCubic { .. })));
    }
}
