//! Small named cubic graphs.

use crate::graph::{parse_graph6, CubicGraph};

/// Outer 5-cycle `0..5`, spokes `i - i+5`, inner pentagram.
pub fn petersen() -> CubicGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    CubicGraph::from_edges(10, &edges).expect("Petersen graph is cubic")
}

pub fn k4() -> CubicGraph {
    CubicGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).expect("cubic")
}

/// Parts `{0, 1, 2}` and `{3, 4, 5}`.
pub fn k33() -> CubicGraph {
    let mut edges = Vec::new();
    for a in 0..3 {
        for b in 3..6 {
            edges.push((a, b));
        }
    }
    CubicGraph::from_edges(6, &edges).expect("cubic")
}

/// Two vertices joined by three parallel edges.
pub fn theta() -> CubicGraph {
    CubicGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).expect("cubic")
}

/// Triangular prism.
pub fn prism() -> CubicGraph {
    CubicGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).expect("cubic")
}

/// The 3-cube.
pub fn cube() -> CubicGraph {
    let mut edges = Vec::new();
    for v in 0..8usize {
        for bit in [1, 2, 4] {
            if v & bit == 0 {
                edges.push((v, v | bit));
            }
        }
    }
    CubicGraph::from_edges(8, &edges).expect("cubic")
}

/// First Blanuša snark, 18 vertices.
pub fn blanusa_first() -> CubicGraph {
    parse_graph6(BLANUSA_1).expect("valid graph6")
}

/// Second Blanuša snark, 18 vertices.
pub fn blanusa_second() -> CubicGraph {
    parse_graph6(BLANUSA_2).expect("valid graph6")
}

const BLANUSA_1: &str = "Q???C@?GCoOoDO[?CcAO_?k?J??";
const BLANUSA_2: &str = "Q??CA?_CCOW_Q_M?AD@A_@K?F??";

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{girth, is_two_connected};

    #[test]
    fn orders() {
        assert_eq!(petersen().vertex_count(), 10);
        assert_eq!(cube().edge_count(), 12);
        assert_eq!(girth(&cube()), Some(4));
        assert_eq!(girth(&prism()), Some(3));
        for g in [blanusa_first(), blanusa_second()] {
            assert_eq!(g.vertex_count(), 18);
            assert_eq!(girth(&g), Some(5));
            assert!(is_two_connected(&g));
        }
        assert_ne!(blanusa_first(), blanusa_second());
    }
}
