//! A handful of small named graphs used throughout the docs and tests.

use crate::graph::{Graph, RawGraph};

/// One vertex carrying one loop.
pub fn loop_graph() -> Graph {
    Graph::new(2, &[(0, 1)], &[&[0, 1]]).unwrap()
}

/// Two vertices joined by one edge.
pub fn single_edge() -> Graph {
    Graph::new(2, &[(0, 1)], &[&[0], &[1]]).unwrap()
}

/// The 3-cycle `halfedges=6; edges=(0 1)(2 3)(4 5); vertices={0 5}{1 2}{3 4}`.
pub fn triangle() -> Graph {
    Graph::new(6, &[(0, 1), (2, 3), (4, 5)], &[&[5, 0], &[1, 2], &[3, 4]]).unwrap()
}

/// Two vertices joined by two parallel edges.
pub fn double_edge() -> Graph {
    Graph::new(4, &[(0, 1), (2, 3)], &[&[0, 2], &[1, 3]]).unwrap()
}

/// Two vertices joined by three parallel edges.
pub fn theta_graph() -> Graph {
    Graph::new(6, &[(0, 1), (2, 3), (4, 5)], &[&[0, 2, 4], &[1, 3, 5]]).unwrap()
}

/// Path with `edges` edges.
pub fn path(edges: usize) -> Graph {
    let mut raw = RawGraph {
        half_edge_count: 2 * edges,
        edges: (0..edges).map(|i| vec![2 * i, 2 * i + 1]).collect(),
        vertices: Vec::new(),
    };
    if edges > 0 {
        raw.vertices.push(vec![0]);
        for i in 1..edges {
            raw.vertices.push(vec![2 * i - 1, 2 * i]);
        }
        raw.vertices.push(vec![2 * edges - 1]);
    }
    Graph::validate(raw).unwrap()
}

/// Cycle with `n ≥ 1` edges; `cycle(1)` is the loop and `cycle(2)` the double edge.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 1);
    let raw = RawGraph {
        half_edge_count: 2 * n,
        edges: (0..n).map(|i| vec![2 * i, 2 * i + 1]).collect(),
        vertices: (0..n).map(|i| vec![2 * i, (2 * i + 2 * n - 1) % (2 * n)]).collect(),
    };
    Graph::validate(raw).unwrap()
}

/// One vertex carrying `loops` loops.
pub fn bouquet(loops: usize) -> Graph {
    let raw = RawGraph {
        half_edge_count: 2 * loops,
        edges: (0..loops).map(|i| vec![2 * i, 2 * i + 1]).collect(),
        vertices: if loops == 0 {
            Vec::new()
        } else {
            vec![(0..2 * loops).collect()]
        },
    };
    Graph::validate(raw).unwrap()
}

/// The complete graph on `n` vertices (the 1-skeleton of the `(n-1)`-simplex).
pub fn complete_graph(n: usize) -> Graph {
    let mut edges = Vec::new();
    let mut vertices = vec![Vec::new(); n];
    for u in 0..n {
        for w in u + 1..n {
            let h = 2 * edges.len();
            edges.push(vec![h, h + 1]);
            vertices[u].push(h);
            vertices[w].push(h + 1);
        }
    }
    if n == 1 {
        vertices.clear();
    }
    Graph::validate(RawGraph {
        half_edge_count: 2 * edges.len(),
        edges,
        vertices,
    })
    .unwrap()
}

pub fn k4() -> Graph {
    complete_graph(4)
}
