//! Fixtures and brute-force oracles shared by the integration tests. The
//! oracles only use the edge list of a graph.

#![allow(dead_code)]

use defect_lab::graph::{parse_graph6_list, CubicGraph};
use petgraph::graph::UnGraph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use std::path::PathBuf;

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data/census")
}

pub fn census_path(order: usize) -> PathBuf {
    data_dir().join(format!("snarks_g5_{order}.g6"))
}

/// Snarks of girth at least 5 of one order, when the file is present.
pub fn census(order: usize) -> Option<Vec<CubicGraph>> {
    let text = std::fs::read_to_string(census_path(order)).ok()?;
    Some(parse_graph6_list(&text).expect("fixture parses"))
}

pub fn census_upto(max: usize) -> Vec<(usize, Vec<CubicGraph>)> {
    (10..=max).step_by(2).filter_map(|n| census(n).map(|gs| (n, gs))).collect()
}

/// Vertices are weight 0; each free end of an edge becomes a leaf of weight 1.
fn to_petgraph(g: &CubicGraph) -> UnGraph<u8, ()> {
    let mut h = UnGraph::new_undirected();
    let nodes: Vec<_> = (0..g.vertex_count()).map(|_| h.add_node(0)).collect();
    for e in 0..g.edge_count() {
        let [a, b] = g.endpoints(e).map(|x| x.map_or_else(|| h.add_node(1), |v| nodes[v]));
        h.add_edge(a, b, ());
    }
    h
}

/// Isomorphism of the underlying multigraphs, semiedges included.
pub fn isomorphic(a: &CubicGraph, b: &CubicGraph) -> bool {
    petgraph::algo::is_isomorphic_matching(&to_petgraph(a), &to_petgraph(b), |x, y| x == y, |_, _| true)
}

/// Perfect matchings as sorted edge-id lists, by backtracking on the least
/// unmatched vertex.
pub fn oracle_perfect_matchings(g: &CubicGraph) -> Vec<Vec<usize>> {
    let edges = g.edge_list();
    let n = g.vertex_count();
    let mut out = Vec::new();
    fn rec(edges: &[(usize, usize)], used: &mut Vec<bool>, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some(v) = used.iter().position(|&u| !u) else {
            let mut c = chosen.clone();
            c.sort_unstable();
            out.push(c);
            return;
        };
        for (i, &(a, b)) in edges.iter().enumerate() {
            if a == b || (a != v && b != v) {
                continue;
            }
            let w = if a == v { b } else { a };
            if used[w] {
                continue;
            }
            used[v] = true;
            used[w] = true;
            chosen.push(i);
            rec(edges, used, chosen, out);
            chosen.pop();
            used[v] = false;
            used[w] = false;
        }
    }
    rec(&edges, &mut vec![false; n], &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    out
}

/// Fewest uncovered edges over all multisets of three perfect matchings.
pub fn oracle_defect(g: &CubicGraph) -> Option<usize> {
    let m = g.edge_count();
    let pms: Vec<Vec<bool>> = oracle_perfect_matchings(g)
        .into_iter()
        .map(|p| {
            let mut v = vec![false; m];
            for e in p {
                v[e] = true;
            }
            v
        })
        .collect();
    let mut best = None;
    for i in 0..pms.len() {
        for j in i..pms.len() {
            for k in j..pms.len() {
                let unc = (0..m).filter(|&e| !pms[i][e] && !pms[j][e] && !pms[k][e]).count();
                if best.is_none_or(|b| unc < b) {
                    best = Some(unc);
                }
            }
        }
    }
    best
}

/// Proper 3-edge-colourings with labelled colours.
pub fn oracle_colourings(g: &CubicGraph) -> u64 {
    let edges = g.edge_list();
    let mut col = vec![0u8; edges.len()];
    fn ok(edges: &[(usize, usize)], col: &[u8], upto: usize) -> bool {
        let (a, b) = edges[upto];
        if a == b {
            return false;
        }
        (0..upto).all(|f| {
            let (x, y) = edges[f];
            col[f] != col[upto] || (x != a && x != b && y != a && y != b)
        })
    }
    fn rec(edges: &[(usize, usize)], col: &mut [u8], i: usize) -> u64 {
        if i == edges.len() {
            return 1;
        }
        let mut s = 0;
        for c in 1..=3 {
            col[i] = c;
            if ok(edges, col, i) {
                s += rec(edges, col, i + 1);
            }
        }
        s
    }
    rec(&edges, &mut col, 0)
}

/// Fewest odd circuits in a 2-factor, over complements of perfect matchings.
pub fn oracle_oddness(g: &CubicGraph) -> Option<usize> {
    let edges = g.edge_list();
    let n = g.vertex_count();
    oracle_perfect_matchings(g)
        .into_iter()
        .map(|pm| {
            let mut parent: Vec<usize> = (0..n).collect();
            fn find(p: &mut [usize], x: usize) -> usize {
                if p[x] != x {
                    let r = find(p, p[x]);
                    p[x] = r;
                }
                p[x]
            }
            for (i, &(a, b)) in edges.iter().enumerate() {
                if !pm.contains(&i) {
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    parent[ra] = rb;
                }
            }
            let mut size = vec![0usize; n];
            for v in 0..n {
                size[find(&mut parent, v)] += 1;
            }
            size.iter().filter(|&&s| s % 2 == 1).count()
        })
        .min()
}

/// Shortest circuit length by breadth-first search from every vertex.
pub fn oracle_girth(g: &CubicGraph) -> Option<usize> {
    let edges = g.edge_list();
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    for (i, &(a, b)) in edges.iter().enumerate() {
        if a == b {
            return Some(1);
        }
        // shortest a-b path avoiding edge i, plus the edge itself
        let mut dist = vec![usize::MAX; n];
        dist[a] = 0;
        let mut queue = std::collections::VecDeque::from([a]);
        while let Some(x) = queue.pop_front() {
            for (j, &(p, q)) in edges.iter().enumerate() {
                if j == i || (p != x && q != x) {
                    continue;
                }
                let y = if p == x { q } else { p };
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if dist[b] != usize::MAX {
            let c = dist[b] + 1;
            best = Some(best.map_or(c, |x| x.min(c)));
        }
    }
    best
}

/// Random cubic multigraph on `n` vertices by pairing darts; may contain
/// loops and parallel edges.
pub fn random_cubic_multigraph(n: usize, seed: u64) -> CubicGraph {
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let mut darts: Vec<usize> = (0..3 * n).map(|d| d / 3).collect();
    darts.shuffle(&mut rng);
    let edges: Vec<(usize, usize)> = darts.chunks(2).map(|c| (c[0], c[1])).collect();
    CubicGraph::from_edges(n, &edges).expect("pairing is cubic")
}

/// Random connected simple cubic graph, by rejection.
pub fn random_simple_cubic(n: usize, seed: u64) -> CubicGraph {
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    loop {
        let g = random_cubic_multigraph(n, rng.random());
        if g.is_simple() && defect_lab::graph::is_connected(&g) {
            return g;
        }
    }
}

/// Defect-3 graphs to grow reduction inputs from: Petersen and the
/// nontrivial fixtures of order 18.
pub fn defect_three_seeds() -> Vec<CubicGraph> {
    let mut out = vec![defect_lab::named::petersen()];
    out.extend(census(18).unwrap_or_default().into_iter().filter(|g| oracle_defect(g) == Some(3)));
    out
}

/// One or two random gadget insertions on a seed: quadrilaterals, triangles
/// and 2- or 3-sums with small colourable graphs. The result need not have
/// defect 3.
pub fn synthesize(seeds: &[CubicGraph], rng: &mut impl Rng) -> CubicGraph {
    use defect_lab::constructions::{grow_quadrilateral, inflate_vertex, insert_quadrilateral, three_sum, two_sum, Wiring};
    use defect_lab::named;
    let mut g = seeds[rng.random_range(0..seeds.len())].clone();
    for _ in 0..rng.random_range(1..=2) {
        let m = g.edge_count();
        let n = g.vertex_count();
        let next = match rng.random_range(0..5) {
            0 => insert_quadrilateral(&g, rng.random_range(0..m), rng.random_range(0..m)),
            1 => {
                let ab = rng.random_range(0..m);
                let (a, b) = g.full_endpoints(ab).expect("closed");
                let pick = |v: usize, rng: &mut dyn rand::RngCore| {
                    let others: Vec<usize> = g.incident_edges(v).into_iter().filter(|&e| e != ab).collect();
                    others[(rng.next_u32() % 2) as usize]
                };
                let (ea, eb) = (pick(a, rng), pick(b, rng));
                grow_quadrilateral(&g, ab, ea, eb)
            }
            2 => inflate_vertex(&g, rng.random_range(0..n)),
            3 => {
                let h = if rng.random_bool(0.5) { named::k4() } else { named::k33() };
                let f = rng.random_range(0..h.edge_count());
                two_sum(&g, rng.random_range(0..m), &h, f, rng.random_bool(0.5))
            }
            _ => {
                let h = if rng.random_bool(0.5) { named::k33() } else { named::prism() };
                let w = Wiring::all()[rng.random_range(0..6)];
                three_sum(&g, rng.random_range(0..n), &h, rng.random_range(0..h.vertex_count()), w)
            }
        };
        if let Ok(x) = next {
            g = x;
        }
    }
    g
}
