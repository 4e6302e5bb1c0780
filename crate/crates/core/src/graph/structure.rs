use std::collections::VecDeque;

use super::CubicGraph;
use crate::error::{Error, Result};

/// A set of edges, with the two sides when its removal splits the graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct EdgeCut {
    pub edges: Vec<usize>,
    pub sides: Option<(Vec<usize>, Vec<usize>)>,
}

/// Circuit given by its vertices in cyclic order and the edges between them;
/// `edges[i]` joins `vertices[i]` and `vertices[(i + 1) % len]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CyclicConnectivity {
    Exact { value: usize, witness: EdgeCut },
    AboveCap(usize),
}

impl CyclicConnectivity {
    pub fn value(&self) -> Option<usize> {
        match self {
            CyclicConnectivity::Exact { value, .. } => Some(*value),
            CyclicConnectivity::AboveCap(_) => None,
        }
    }

    /// True when no cycle-separating cut has fewer than `k` edges.
    pub fn at_least(&self, k: usize) -> bool {
        match self {
            CyclicConnectivity::Exact { value, .. } => *value >= k,
            CyclicConnectivity::AboveCap(cap) => *cap + 1 >= k,
        }
    }
}

/// Length of a shortest circuit over full edges; `None` for a forest.
pub fn girth(g: &CubicGraph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best = usize::MAX;
    for e in 0..g.edge_count() {
        if g.is_loop(e) {
            return Some(1);
        }
    }
    let mut dist = vec![usize::MAX; n];
    let mut parent_edge = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.fill(usize::MAX);
        dist[root] = 0;
        queue.clear();
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            if 2 * dist[v] + 1 >= best {
                break;
            }
            for e in g.incident_edges(v) {
                if e == parent_edge[v] && dist[v] > 0 {
                    continue;
                }
                let Some(w) = g.opposite(e, v) else { continue };
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent_edge[w] = e;
                    queue.push_back(w);
                } else {
                    best = best.min(dist[v] + dist[w] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

/// Connected components over full edges, each sorted, ordered by least vertex.
pub fn components(g: &CubicGraph) -> Vec<Vec<usize>> {
    components_without(g, &[])
}

fn components_without(g: &CubicGraph, removed: &[usize]) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut skip = vec![false; g.edge_count()];
    for &e in removed {
        skip[e] = true;
    }
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        comp[s] = id;
        let mut members = vec![s];
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for e in g.incident_edges(v) {
                if skip[e] {
                    continue;
                }
                if let Some(w) = g.opposite(e, v) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

pub fn is_connected(g: &CubicGraph) -> bool {
    components(g).len() <= 1
}

/// Bridges among full edges, ascending.
pub fn bridges(g: &CubicGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut out = Vec::new();
    let mut time = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // (vertex, edge used to enter, next rotation slot)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        disc[root] = time;
        low[root] = time;
        time += 1;
        while let Some(top) = stack.last_mut() {
            let (v, via) = (top.0, top.1);
            if top.2 < 3 {
                let e = g.incident_edges(v)[top.2];
                top.2 += 1;
                if e == via {
                    continue;
                }
                let Some(w) = g.opposite(e, v) else { continue };
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, e, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] > disc[p] {
                        out.push(via);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Connected, loopless and bridgeless. For cubic graphs this is the same as
/// 2-connectedness.
pub fn is_two_connected(g: &CubicGraph) -> bool {
    g.vertex_count() >= 2 && is_connected(g) && !g.has_loop() && bridges(g).is_empty()
}

/// Sides of `edges` when removing them splits the graph.
pub fn edge_cut(g: &CubicGraph, edges: &[usize]) -> Result<EdgeCut> {
    for &e in edges {
        g.check_edge(e)?;
    }
    let comps = components_without(g, edges);
    let sides = if comps.len() >= 2 {
        let first = comps[0].clone();
        let mut rest: Vec<usize> = comps[1..].concat();
        rest.sort_unstable();
        Some((first, rest))
    } else {
        None
    };
    let mut edges = edges.to_vec();
    edges.sort_unstable();
    Ok(EdgeCut { edges, sides })
}

struct Dsu {
    parent: Vec<usize>,
    edges: Vec<usize>,
    size: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect(), edges: vec![0; n], size: vec![1; n] }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn add_edge(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            self.edges[ra] += 1;
        } else {
            let (big, small) = if self.size[ra] >= self.size[rb] { (ra, rb) } else { (rb, ra) };
            self.parent[small] = big;
            self.size[big] += self.size[small];
            self.edges[big] += self.edges[small] + 1;
        }
    }
}

/// Number of components of `g - removed` that contain a circuit.
fn cyclic_components(g: &CubicGraph, skip: &[bool], dsu: &mut Dsu) -> usize {
    let n = g.vertex_count();
    for i in 0..n {
        dsu.parent[i] = i;
        dsu.edges[i] = 0;
        dsu.size[i] = 1;
    }
    for e in 0..g.edge_count() {
        if skip[e] {
            continue;
        }
        if let Some((a, b)) = g.full_endpoints(e) {
            dsu.add_edge(a, b);
        }
    }
    (0..n).filter(|&v| dsu.parent[v] == v && dsu.edges[v] >= dsu.size[v]).count()
}

fn next_combination(idx: &mut [usize], m: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < m - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// All edge sets of size exactly `k` whose removal leaves exactly two
/// components, each containing a circuit, in lexicographic order.
pub fn cycle_separating_cuts(g: &CubicGraph, k: usize) -> Vec<EdgeCut> {
    let m = g.edge_count();
    let mut out = Vec::new();
    if k == 0 || k > m {
        return out;
    }
    let candidates: Vec<usize> = (0..m).filter(|&e| !g.is_loop(e) && g.full_endpoints(e).is_some()).collect();
    let mc = candidates.len();
    if k > mc {
        return out;
    }
    let mut dsu = Dsu::new(g.vertex_count());
    let mut skip = vec![false; m];
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        for &i in &idx {
            skip[candidates[i]] = true;
        }
        if cyclic_components(g, &skip, &mut dsu) >= 2 {
            let edges: Vec<usize> = idx.iter().map(|&i| candidates[i]).collect();
            let cut = edge_cut(g, &edges).expect("edges in range");
            let exact = cut.sides.as_ref().is_some_and(|(a, _)| {
                let n = g.vertex_count();
                let mut left = vec![false; n];
                for &v in a {
                    left[v] = true;
                }
                components_without(g, &edges).len() == 2
                    && edges.iter().all(|&e| {
                        let (x, y) = g.full_endpoints(e).expect("full edge");
                        left[x] != left[y]
                    })
            });
            if exact {
                out.push(cut);
            }
        }
        for &i in &idx {
            skip[candidates[i]] = false;
        }
        if !next_combination(&mut idx, mc) {
            break;
        }
    }
    out
}

/// True when some two circuits share no vertex.
pub fn has_two_disjoint_cycles(g: &CubicGraph) -> bool {
    let n = g.vertex_count();
    let rest_has_cycle = |removed: &[usize]| -> bool {
        let mut gone = vec![false; n];
        for &v in removed {
            gone[v] = true;
        }
        let mut dsu = Dsu::new(n);
        for e in 0..g.edge_count() {
            if let Some((a, b)) = g.full_endpoints(e) {
                if !gone[a] && !gone[b] {
                    dsu.add_edge(a, b);
                }
            }
        }
        (0..n).any(|v| !gone[v] && dsu.parent[v] == v && dsu.edges[v] >= dsu.size[v])
    };
    for e in 0..g.edge_count() {
        if let Some((a, b)) = g.full_endpoints(e) {
            if a == b && rest_has_cycle(&[a]) {
                return true;
            }
            if a != b && g.edges_between(a, b).len() >= 2 && rest_has_cycle(&[a, b]) {
                return true;
            }
        }
    }
    // Depth-first enumeration of circuits by least vertex; exits at the first
    // circuit whose complement still has one.
    let mut path = Vec::new();
    let mut on_path = vec![false; n];
    fn dfs(
        g: &CubicGraph,
        s: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        check: &dyn Fn(&[usize]) -> bool,
    ) -> bool {
        let v = *path.last().expect("nonempty path");
        for w in g.neighbours(v).into_iter().flatten() {
            if w == s && path.len() >= 3 && check(path) {
                return true;
            }
            if w > s && !on_path[w] {
                on_path[w] = true;
                path.push(w);
                if dfs(g, s, path, on_path, check) {
                    return true;
                }
                path.pop();
                on_path[w] = false;
            }
        }
        false
    }
    for s in 0..n {
        path.clear();
        path.push(s);
        on_path[s] = true;
        if dfs(g, s, &mut path, &mut on_path, &rest_has_cycle) {
            return true;
        }
        on_path[s] = false;
    }
    false
}

/// Size of a smallest cycle-separating edge cut, searched up to `cap` edges.
pub fn cyclic_edge_connectivity(g: &CubicGraph, cap: usize) -> Result<CyclicConnectivity> {
    g.require_closed()?;
    if !is_connected(g) {
        return Err(Error::Precondition("graph must be connected".into()));
    }
    for k in 1..=cap {
        if let Some(w) = first_cycle_separating_cut(g, k) {
            return Ok(CyclicConnectivity::Exact { value: k, witness: w });
        }
    }
    if has_two_disjoint_cycles(g) {
        Ok(CyclicConnectivity::AboveCap(cap))
    } else {
        Err(Error::NoCycleSeparatingCut)
    }
}

fn first_cycle_separating_cut(g: &CubicGraph, k: usize) -> Option<EdgeCut> {
    // A smallest separating set is always a bond with two cyclic sides, so the
    // first hit of the minimal size is exact.
    let m = g.edge_count();
    let candidates: Vec<usize> = (0..m).filter(|&e| !g.is_loop(e)).collect();
    if k > candidates.len() {
        return None;
    }
    let mut dsu = Dsu::new(g.vertex_count());
    let mut skip = vec![false; m];
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        for &i in &idx {
            skip[candidates[i]] = true;
        }
        let hit = cyclic_components(g, &skip, &mut dsu) >= 2;
        for &i in &idx {
            skip[candidates[i]] = false;
        }
        if hit {
            let edges: Vec<usize> = idx.iter().map(|&i| candidates[i]).collect();
            return Some(edge_cut(g, &edges).expect("edges in range"));
        }
        if !next_combination(&mut idx, candidates.len()) {
            return None;
        }
    }
}

/// All induced circuits of exactly `len` vertices.
///
/// Each circuit starts at its least vertex and runs toward the smaller of its
/// two neighbours on the circuit; the list is sorted by vertex sequence.
pub fn induced_cycles(g: &CubicGraph, len: usize) -> Vec<Cycle> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if len < 3 || len > n {
        return out;
    }
    let mut path = Vec::with_capacity(len);
    let mut on_path = vec![false; n];
    fn extend(g: &CubicGraph, len: usize, path: &mut Vec<usize>, on_path: &mut [bool], out: &mut Vec<Cycle>) {
        let s = path[0];
        let v = *path.last().expect("nonempty");
        if path.len() == len {
            if path[1] < path[len - 1] && g.adjacent(v, s) {
                if let Some(c) = as_induced(g, path) {
                    out.push(c);
                }
            }
            return;
        }
        let mut nbrs: Vec<usize> = g.neighbours(v).into_iter().flatten().filter(|&w| w > s && !on_path[w]).collect();
        nbrs.sort_unstable();
        nbrs.dedup();
        for w in nbrs {
            // Any earlier path vertex other than the predecessor adjacent to w
            // would be a chord, except the start when closing the circuit.
            let chord = path[..path.len() - 1]
                .iter()
                .enumerate()
                .any(|(i, &x)| g.adjacent(x, w) && !(i == 0 && path.len() + 1 == len));
            if chord {
                continue;
            }
            on_path[w] = true;
            path.push(w);
            extend(g, len, path, on_path, out);
            path.pop();
            on_path[w] = false;
        }
    }
    for s in 0..n {
        path.clear();
        path.push(s);
        on_path[s] = true;
        extend(g, len, &mut path, &mut on_path, &mut out);
        on_path[s] = false;
    }
    out.sort();
    out
}

fn as_induced(g: &CubicGraph, vs: &[usize]) -> Option<Cycle> {
    let l = vs.len();
    let mut edges = Vec::with_capacity(l);
    for i in 0..l {
        let between = g.edges_between(vs[i], vs[(i + 1) % l]);
        if between.len() != 1 {
            return None;
        }
        edges.push(between[0]);
    }
    for i in 0..l {
        for j in i + 2..l {
            if i == 0 && j == l - 1 {
                continue;
            }
            if g.adjacent(vs[i], vs[j]) {
                return None;
            }
        }
    }
    Some(Cycle { vertices: vs.to_vec(), edges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::CubicGraph;
    use crate::named;
    use proptest::prelude::*;

    fn all_cycles_brute(g: &CubicGraph, len: usize) -> usize {
        // Enumerate vertex sequences directly; divide out rotations and reflections.
        let n = g.vertex_count();
        let mut count = 0;
        let mut seq = vec![0; len];
        fn rec(g: &CubicGraph, seq: &mut Vec<usize>, pos: usize, n: usize, count: &mut usize) {
            let len = seq.len();
            if pos == len {
                if !g.adjacent(seq[len - 1], seq[0]) {
                    return;
                }
                for i in 0..len {
                    for j in i + 2..len {
                        if !(i == 0 && j == len - 1) && g.adjacent(seq[i], seq[j]) {
                            return;
                        }
                    }
                }
                *count += 1;
                return;
            }
            for v in 0..n {
                if seq[..pos].contains(&v) {
                    continue;
                }
                if pos > 0 && !g.adjacent(seq[pos - 1], v) {
                    continue;
                }
                seq[pos] = v;
                rec(g, seq, pos + 1, n, count);
            }
        }
        rec(g, &mut seq, 0, n, &mut count);
        count / (2 * len)
    }

    #[test]
    fn girth_of_named_graphs() {
        assert_eq!(girth(&named::petersen()), Some(5));
        assert_eq!(girth(&named::k4()), Some(3));
        assert_eq!(girth(&named::k33()), Some(4));
        assert_eq!(girth(&named::theta()), Some(2));
    }

    #[test]
    fn petersen_cycles() {
        let p = named::petersen();
        assert_eq!(induced_cycles(&p, 5).len(), 12);
        assert_eq!(induced_cycles(&p, 3).len(), 0);
        assert_eq!(induced_cycles(&p, 6).len(), 10);
        assert_eq!(all_cycles_brute(&p, 5), 12);
        assert_eq!(all_cycles_brute(&p, 6), 10);
        for c in induced_cycles(&p, 6) {
            assert_eq!(c.vertices[0], *c.vertices.iter().min().unwrap());
            assert!(c.vertices[1] < c.vertices[5]);
        }
    }

    #[test]
    fn cyclic_connectivity_small() {
        let p = named::petersen();
        assert_eq!(cyclic_edge_connectivity(&p, 6).unwrap().value(), Some(5));
        assert_eq!(cyclic_edge_connectivity(&p, 4).unwrap(), CyclicConnectivity::AboveCap(4));
        assert_eq!(cyclic_edge_connectivity(&named::k4(), 6), Err(Error::NoCycleSeparatingCut));
        assert_eq!(cyclic_edge_connectivity(&named::k33(), 6), Err(Error::NoCycleSeparatingCut));
        // Prism: two triangles joined by a perfect matching.
        let prism = CubicGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).unwrap();
        match cyclic_edge_connectivity(&prism, 6).unwrap() {
            CyclicConnectivity::Exact { value, witness } => {
                assert_eq!(value, 3);
                let (a, b) = witness.sides.unwrap();
                assert_eq!((a.len(), b.len()), (3, 3));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bridges_and_two_connectivity() {
        assert!(bridges(&named::petersen()).is_empty());
        assert!(is_two_connected(&named::petersen()));
    }

    proptest! {
        #[test]
        fn handshake_parity(mask in any::<u16>()) {
            let g = named::petersen();
            let inside: Vec<bool> = (0..10).map(|v| mask >> v & 1 == 1).collect();
            let size = inside.iter().filter(|&&b| b).count();
            let cut = g.edge_list().iter().filter(|&&(a, b)| inside[a] != inside[b]).count();
            prop_assert_eq!(cut % 2, size % 2);
        }
    }

    #[test]
    fn girth_matches_shortest_induced_cycle() {
        for g in [named::petersen(), named::k4(), named::k33(), named::blanusa_first()] {
            let gi = girth(&g).unwrap();
            assert!(!induced_cycles(&g, gi).is_empty());
            assert!((3..gi).all(|l| induced_cycles(&g, l).is_empty()));
        }
    }
}
