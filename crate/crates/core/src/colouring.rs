//! Proper 3-edge-colourings of cubic multipoles.
//!
//! Colours are the nonzero elements of `Z2 x Z2`, encoded as `1 = 01`,
//! `2 = 10`, `3 = 11`, so three colours meet properly at a vertex exactly when
//! they XOR to zero.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{delete_vertices, is_two_connected, join_semiedges, CubicGraph, Multipole};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub struct Colour(u8);

impl Colour {
    pub const ONE: Colour = Colour(1);
    pub const TWO: Colour = Colour(2);
    pub const THREE: Colour = Colour(3);
    pub const ALL: [Colour; 3] = [Colour::ONE, Colour::TWO, Colour::THREE];

    pub fn new(c: u8) -> Option<Colour> {
        (1..=3).contains(&c).then_some(Colour(c))
    }

    pub fn get(self) -> u8 {
        self.0
    }

    /// The colour completing `self` and `other` at a vertex.
    pub fn third(self, other: Colour) -> Colour {
        debug_assert_ne!(self, other);
        Colour(self.0 ^ other.0)
    }

    fn bit(self) -> u8 {
        1 << (self.0 - 1)
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Colours fixed on some semiedges, keyed by free dart.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BoundaryCondition {
    pub fixed: BTreeMap<usize, Colour>,
}

impl BoundaryCondition {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, Colour)>>(pairs: I) -> Self {
        BoundaryCondition { fixed: pairs.into_iter().collect() }
    }

    /// False when every semiedge is fixed and some colour appears with the
    /// wrong parity.
    pub fn parity_feasible(&self, semiedges: &[usize]) -> bool {
        if !semiedges.iter().all(|d| self.fixed.contains_key(d)) {
            return true;
        }
        let sum = semiedges.iter().fold(0u8, |acc, d| acc ^ self.fixed[d].0);
        sum == 0
    }
}

/// Colour per edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeColouring(pub Vec<Colour>);

impl EdgeColouring {
    pub fn colour(&self, e: usize) -> Colour {
        self.0[e]
    }

    /// True when the colours at every vertex are distinct.
    pub fn is_proper(&self, g: &CubicGraph) -> bool {
        (0..g.vertex_count()).all(|v| {
            let [a, b, c] = g.incident_edges(v).map(|e| self.0[e].0);
            a ^ b ^ c == 0 && a != b
        })
    }
}

const FULL: u8 = 0b111;

struct Search<'a> {
    g: &'a CubicGraph,
    dom: Vec<u8>,
    trail: Vec<(usize, u8)>,
    assigned: Vec<bool>,
    order: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(g: &'a CubicGraph) -> Option<Self> {
        if g.has_loop() {
            return None;
        }
        let m = g.edge_count();
        Some(Search { g, dom: vec![FULL; m], trail: Vec::new(), assigned: vec![false; m], order: bfs_edge_order(g) })
    }

    fn set_domain(&mut self, e: usize, d: u8) {
        self.trail.push((e, self.dom[e]));
        self.dom[e] = d;
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (e, d) = self.trail.pop().expect("trail");
            self.dom[e] = d;
            self.assigned[e] = false;
        }
    }

    /// Restricts `e` to `mask` and propagates; false on a wipe-out.
    fn restrict(&mut self, e: usize, mask: u8) -> bool {
        let mut queue = vec![(e, mask)];
        while let Some((e, mask)) = queue.pop() {
            let nd = self.dom[e] & mask;
            if nd == 0 {
                return false;
            }
            if nd == self.dom[e] && (nd.count_ones() != 1 || self.assigned[e]) {
                continue;
            }
            self.set_domain(e, nd);
            if nd.count_ones() == 1 && !self.assigned[e] {
                self.assigned[e] = true;
                for v in self.g.endpoints(e).into_iter().flatten() {
                    for f in self.g.incident_edges(v) {
                        if f != e {
                            queue.push((f, !nd & FULL));
                        }
                    }
                }
            }
        }
        true
    }

    fn pick(&self) -> Option<usize> {
        let mut best: Option<(u32, usize)> = None;
        for &e in &self.order {
            if self.assigned[e] {
                continue;
            }
            let size = self.dom[e].count_ones();
            if best.is_none_or(|(s, _)| size < s) {
                best = Some((size, e));
                if size == 2 {
                    break;
                }
            }
        }
        best.map(|(_, e)| e)
    }

    fn count(&mut self, limit: u64) -> u64 {
        let Some(e) = self.pick() else {
            return 1;
        };
        let mut total = 0;
        let d = self.dom[e];
        for c in Colour::ALL {
            if d & c.bit() == 0 {
                continue;
            }
            let mark = self.trail.len();
            if self.restrict(e, c.bit()) {
                total += self.count(limit - total);
            }
            self.undo(mark);
            if total >= limit {
                break;
            }
        }
        total
    }

    fn find(&mut self) -> bool {
        let Some(e) = self.pick() else {
            return true;
        };
        let d = self.dom[e];
        for c in Colour::ALL {
            if d & c.bit() == 0 {
                continue;
            }
            let mark = self.trail.len();
            if self.restrict(e, c.bit()) && self.find() {
                return true;
            }
            self.undo(mark);
        }
        false
    }

    fn each(&mut self, out: &mut dyn FnMut(&[u8])) {
        let Some(e) = self.pick() else {
            out(&self.dom);
            return;
        };
        let d = self.dom[e];
        for c in Colour::ALL {
            if d & c.bit() == 0 {
                continue;
            }
            let mark = self.trail.len();
            if self.restrict(e, c.bit()) {
                self.each(out);
            }
            self.undo(mark);
        }
    }

    fn colouring(&self) -> EdgeColouring {
        EdgeColouring(self.dom.iter().map(|&d| Colour(d.trailing_zeros() as u8 + 1)).collect())
    }

    /// Applies `bc`; false when it already conflicts.
    fn apply(&mut self, bc: &BoundaryCondition) -> Result<bool> {
        for (&d, &c) in &bc.fixed {
            if d >= self.g.dart_count() || self.g.dart_vertex(d).is_some() {
                return Err(Error::Precondition(format!("boundary dart {d} is not a semiedge")));
            }
            if !self.restrict(d >> 1, c.bit()) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Edges in breadth-first order from vertex 0, so constraints close early.
fn bfs_edge_order(g: &CubicGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut seen_v = vec![false; n];
    let mut seen_e = vec![false; m];
    let mut order = Vec::with_capacity(m);
    for s in 0..n {
        if seen_v[s] {
            continue;
        }
        seen_v[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for e in g.incident_edges(v) {
                if !seen_e[e] {
                    seen_e[e] = true;
                    order.push(e);
                }
                if let Some(w) = g.opposite(e, v) {
                    if !seen_v[w] {
                        seen_v[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    order.extend((0..m).filter(|&e| !seen_e[e]));
    order
}

fn check_bc(m: &Multipole, bc: &BoundaryCondition) -> bool {
    bc.parity_feasible(&m.graph().semiedges())
}

/// Number of proper colourings extending `bc`, colours labelled.
pub fn count_colourings(m: &Multipole, bc: &BoundaryCondition) -> Result<u64> {
    count_colourings_up_to(m, bc, u64::MAX)
}

/// As [`count_colourings`] but stops once `limit` colourings are seen.
pub fn count_colourings_up_to(m: &Multipole, bc: &BoundaryCondition, limit: u64) -> Result<u64> {
    let g = m.graph();
    if !check_bc(m, bc) {
        return Ok(0);
    }
    let Some(mut s) = Search::new(g) else { return Ok(0) };
    if !s.apply(bc)? {
        return Ok(0);
    }
    // On a closed graph the six colour permutations act freely, so fix the
    // colours around one vertex.
    if bc.fixed.is_empty() && g.is_closed() && g.vertex_count() > 0 && limit == u64::MAX {
        let [a, b, c] = g.incident_edges(0);
        if a != b && b != c && a != c {
            let ok = s.restrict(a, Colour::ONE.bit()) && s.restrict(b, Colour::TWO.bit()) && s.restrict(c, Colour::THREE.bit());
            return Ok(if ok { 6 * s.count(u64::MAX) } else { 0 });
        }
    }
    Ok(s.count(limit))
}

pub fn find_colouring(m: &Multipole, bc: &BoundaryCondition) -> Result<Option<EdgeColouring>> {
    let g = m.graph();
    if !check_bc(m, bc) {
        return Ok(None);
    }
    let Some(mut s) = Search::new(g) else { return Ok(None) };
    if !s.apply(bc)? {
        return Ok(None);
    }
    if s.find() {
        let c = s.colouring();
        debug_assert!(c.is_proper(g));
        debug_assert!(parity_holds(g, &c));
        Ok(Some(c))
    } else {
        Ok(None)
    }
}

pub fn is_colourable(m: &Multipole, bc: &BoundaryCondition) -> Result<bool> {
    Ok(find_colouring(m, bc)?.is_some())
}

/// Convenience for closed graphs.
pub fn graph_is_colourable(g: &CubicGraph) -> bool {
    let Some(mut s) = Search::new(g) else { return false };
    s.find()
}

/// Visits every colouring extending `bc`.
pub fn for_each_colouring(m: &Multipole, bc: &BoundaryCondition, mut f: impl FnMut(&EdgeColouring)) -> Result<()> {
    let g = m.graph();
    if !check_bc(m, bc) {
        return Ok(());
    }
    let Some(mut s) = Search::new(g) else { return Ok(()) };
    if !s.apply(bc)? {
        return Ok(());
    }
    s.each(&mut |dom| {
        let c = EdgeColouring(dom.iter().map(|&d| Colour(d.trailing_zeros() as u8 + 1)).collect());
        f(&c)
    });
    Ok(())
}

fn parity_holds(g: &CubicGraph, c: &EdgeColouring) -> bool {
    g.semiedges().iter().fold(0u8, |acc, &d| acc ^ c.0[d >> 1].0) == 0
}

/// The graph obtained by deleting edge `e` and suppressing both endpoints,
/// together with the number of free loops left behind.
pub fn smooth_edge(g: &CubicGraph, e: usize) -> Result<(CubicGraph, usize)> {
    g.require_closed()?;
    g.check_edge(e)?;
    let (u, v) = g.full_endpoints(e).expect("closed graph");
    if u == v {
        return Err(Error::Precondition(format!("edge {e} is a loop")));
    }
    let sub = delete_vertices(g, &[u, v])?;
    let pole = &sub.pole;
    let cu = pole.connector(&format!("v{u}")).map(|c| c.darts.clone()).unwrap_or_default();
    let cv = pole.connector(&format!("v{v}")).map(|c| c.darts.clone()).unwrap_or_default();
    let pairs = match (cu.len(), cv.len()) {
        (2, 2) => vec![(cu[0], cu[1]), (cv[0], cv[1])],
        (1, 1) => vec![(cu[0], cv[0])],
        (0, 0) => vec![],
        _ => return Err(Error::Consistency("unexpected dangling edges while smoothing".into())),
    };
    let j = join_semiedges(pole, &pairs)?;
    let extra = usize::from(cu.is_empty());
    Ok((j.pole.into_graph(), j.free_loops + extra))
}

/// Colourings of `g` with `e` smoothed, divided by 18.
pub fn kaszonyi(g: &CubicGraph, e: usize) -> Result<u64> {
    let (h, loops) = smooth_edge(g, e)?;
    let count = if loops > 0 { 0 } else { count_colourings(&Multipole::from(h), &BoundaryCondition::empty())? };
    if count % 18 != 0 {
        return Err(Error::KaszonyiNotDivisible { count });
    }
    Ok(count / 18)
}

/// True when deleting `h` leaves an uncolourable multipole.
pub fn is_removable(g: &CubicGraph, h: &[usize]) -> Result<bool> {
    if graph_is_colourable(g) {
        return Err(Error::Colourable);
    }
    Ok(!pole_colourable(g, h)?)
}

fn pole_colourable(g: &CubicGraph, h: &[usize]) -> Result<bool> {
    let p = delete_vertices(g, h)?.pole;
    is_colourable(&p, &BoundaryCondition::empty())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum SnarkClass {
    Colourable,
    Snark { critical: bool, bicritical: bool },
}

impl SnarkClass {
    pub fn is_snark(self) -> bool {
        matches!(self, SnarkClass::Snark { .. })
    }

    pub fn critical(self) -> bool {
        matches!(self, SnarkClass::Snark { critical: true, .. })
    }

    pub fn bicritical(self) -> bool {
        matches!(self, SnarkClass::Snark { bicritical: true, .. })
    }

    /// Irreducible and bicritical snarks coincide.
    pub fn irreducible(self) -> bool {
        self.bicritical()
    }
}

pub fn classify_snark(g: &CubicGraph) -> Result<SnarkClass> {
    g.require_closed()?;
    if !is_two_connected(g) {
        return Err(Error::NotTwoConnected);
    }
    if graph_is_colourable(g) {
        return Ok(SnarkClass::Colourable);
    }
    let mut critical = true;
    for (u, v) in g.edge_list() {
        if !pole_colourable(g, &[u, v])? {
            critical = false;
            break;
        }
    }
    let mut bicritical = critical;
    if critical {
        'outer: for u in 0..g.vertex_count() {
            for v in u + 1..g.vertex_count() {
                if !g.adjacent(u, v) && !pole_colourable(g, &[u, v])? {
                    bicritical = false;
                    break 'outer;
                }
            }
        }
    }
    Ok(SnarkClass::Snark { critical, bicritical })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FourPoleClass {
    Uncolourable,
    /// Two pairs of semiedges that receive equal colours in every colouring.
    Isochromatic { pairs: [(usize, usize); 2] },
    Heterochromatic,
}

/// Boundary colour tuples, in semiedge order, that extend to a colouring.
pub fn boundary_patterns(m: &Multipole) -> Result<Vec<Vec<Colour>>> {
    let semi = m.semiedges();
    let k = semi.len();
    let mut out = Vec::new();
    let total = 3usize.pow(k as u32);
    for code in 0..total {
        let mut x = code;
        let mut tuple = Vec::with_capacity(k);
        for _ in 0..k {
            tuple.push(Colour::ALL[x % 3]);
            x /= 3;
        }
        tuple.reverse();
        let bc = BoundaryCondition::from_pairs(semi.iter().copied().zip(tuple.iter().copied()));
        if is_colourable(m, &bc)? {
            out.push(tuple);
        }
    }
    Ok(out)
}

pub fn classify_4pole(m: &Multipole) -> Result<FourPoleClass> {
    let semi = m.semiedges();
    if semi.len() != 4 {
        return Err(Error::Precondition(format!("expected 4 semiedges, found {}", semi.len())));
    }
    let patterns = boundary_patterns(m)?;
    if patterns.is_empty() {
        return Ok(FourPoleClass::Uncolourable);
    }
    // With a (2,2) split the connector pairing comes first.
    for p in [[(0, 1), (2, 3)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]] {
        if patterns.iter().all(|t| t[p[0].0] == t[p[0].1] && t[p[1].0] == t[p[1].1]) {
            return Ok(FourPoleClass::Isochromatic {
                pairs: [(semi[p[0].0], semi[p[0].1]), (semi[p[1].0], semi[p[1].1])],
            });
        }
    }
    Ok(FourPoleClass::Heterochromatic)
}
