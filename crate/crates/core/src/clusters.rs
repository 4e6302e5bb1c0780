//! Clusters of 5-cycles and the inflation test around them.

use crate::colouring::{classify_snark, graph_is_colourable, smooth_edge};
use crate::constructions::inflate_vertex;
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::CubicGraph;
use crate::matching::defect_is_three;
use serde::Serialize;

/// Maximal connected union of 5-cycles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiveCluster {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
    /// Edge lists of the constituent 5-cycles.
    pub cycles: Vec<Vec<usize>>,
    pub heavy: bool,
}

/// Every circuit of length `len` as an edge list, each circuit once.
pub fn circuits(g: &CubicGraph, len: usize) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut path_v = Vec::with_capacity(len);
    let mut path_e = Vec::with_capacity(len);
    for s in 0..n {
        path_v.clear();
        path_e.clear();
        path_v.push(s);
        extend(g, s, len, &mut path_v, &mut path_e, &mut out);
    }
    out.sort();
    out.dedup();
    out
}

fn extend(g: &CubicGraph, s: usize, len: usize, vs: &mut Vec<usize>, es: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let v = *vs.last().expect("non-empty path");
    for e in g.incident_edges(v) {
        if g.is_loop(e) || es.contains(&e) {
            continue;
        }
        let Some(w) = g.opposite(e, v) else { continue };
        if es.len() + 1 == len {
            // close the circuit, counting each direction once
            if w == s && es.first().is_some_and(|&f| f < e) {
                let mut c = es.clone();
                c.push(e);
                c.sort_unstable();
                out.push(c);
            }
            continue;
        }
        if w <= s || vs.contains(&w) {
            continue;
        }
        vs.push(w);
        es.push(e);
        extend(g, s, len, vs, es, out);
        vs.pop();
        es.pop();
    }
}

/// Whether `g` with `e` smoothed is colourable, which is `kaszonyi(g, e) > 0`
/// for snarks and also makes sense for colourable graphs.
fn smoothing_colourable(g: &CubicGraph, e: usize) -> Result<bool> {
    let (h, loops) = smooth_edge(g, e)?;
    Ok(loops == 0 && graph_is_colourable(&h))
}

/// The 5-clusters of `g`, ordered by least vertex. Heaviness is read off
/// one edge per cluster; clusters of colourable graphs are never heavy.
pub fn five_clusters(g: &CubicGraph) -> Result<Vec<FiveCluster>> {
    g.require_closed()?;
    let cycles = circuits(g, 5);
    let snark = !cycles.is_empty() && !graph_is_colourable(g);
    let k = cycles.len();
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nx = p[y];
            p[y] = r;
            y = nx;
        }
        r
    }
    let verts = |c: &[usize]| -> u128 {
        c.iter().fold(0u128, |acc, &e| {
            let (a, b) = g.full_endpoints(e).expect("closed");
            acc | 1 << a | 1 << b
        })
    };
    if g.vertex_count() > 128 {
        return Err(Error::TooLarge(g.vertex_count()));
    }
    let vsets: Vec<u128> = cycles.iter().map(|c| verts(c)).collect();
    for i in 0..k {
        for j in i + 1..k {
            if vsets[i] & vsets[j] != 0 {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..k {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    let mut out = Vec::new();
    for members in groups.values() {
        let mut es = EdgeSet::EMPTY;
        let mut vs = 0u128;
        for &i in members {
            es = es.union(EdgeSet::from_edges(cycles[i].iter().copied()));
            vs |= vsets[i];
        }
        let edges = es.to_vec();
        let heavy = snark && smoothing_colourable(g, edges[0])?;
        debug_assert!(
            !snark || edges.iter().all(|&e| smoothing_colourable(g, e).ok() == Some(heavy)),
            "heaviness differs inside a cluster"
        );
        let vertices: Vec<usize> = (0..g.vertex_count()).filter(|&v| vs >> v & 1 == 1).collect();
        out.push(FiveCluster { vertices, edges, cycles: members.iter().map(|&i| cycles[i].clone()).collect(), heavy });
    }
    out.sort_by_key(|c| c.vertices[0]);
    Ok(out)
}

/// Whether the vertex lies in a heavy cluster, and whether inflating it to
/// a triangle brings the defect down to 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InflationCheck {
    pub predicted: bool,
    pub actual: bool,
}

impl InflationCheck {
    pub fn agrees(self) -> bool {
        self.predicted == self.actual
    }
}

fn require_high_defect_snark(k: &CubicGraph) -> Result<()> {
    if !classify_snark(k)?.is_snark() {
        return Err(Error::Colourable);
    }
    if defect_is_three(k)?.is_some() {
        return Err(Error::Precondition("snark has defect 3".into()));
    }
    Ok(())
}

pub fn heavy_inflation_check(k: &CubicGraph, v: usize) -> Result<InflationCheck> {
    k.check_vertex(v)?;
    require_high_defect_snark(k)?;
    let clusters = five_clusters(k)?;
    inflation_check_with(k, v, &clusters)
}

/// The check for every vertex, sharing one cluster computation.
pub fn heavy_inflation_survey(k: &CubicGraph) -> Result<Vec<InflationCheck>> {
    require_high_defect_snark(k)?;
    let clusters = five_clusters(k)?;
    (0..k.vertex_count()).map(|v| inflation_check_with(k, v, &clusters)).collect()
}

fn inflation_check_with(k: &CubicGraph, v: usize, clusters: &[FiveCluster]) -> Result<InflationCheck> {
    let predicted = clusters.iter().any(|c| c.heavy && c.vertices.contains(&v));
    let actual = defect_is_three(&inflate_vertex(k, v)?)?.is_some();
    Ok(InflationCheck { predicted, actual })
}
