//! Fundamental cycle bases of the oriented edge space and the action of an
//! automorphism on them.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::arrows::{epsilon_map, ArrowArrangement};
use crate::aut::{induced_actions, Automorphism};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::linalg::{IntegerMatrix, LinalgError};

/// A BFS spanning forest.
#[derive(Clone, Debug)]
pub struct SpanningForest {
    /// Edge joining each vertex to its parent; `None` at roots.
    parent_edge: Vec<Option<EdgeId>>,
    parent: Vec<Option<VertexId>>,
    depth: Vec<usize>,
    tree_edge: Vec<bool>,
}

impl SpanningForest {
    /// BFS from vertex 0, then from the next unvisited vertex, and so on.
    /// Vertex 0 holds the lowest half-edge id, so each component is rooted at
    /// the vertex containing its lowest half-edge.
    pub fn default_for(g: &Graph) -> Self {
        let roots: Vec<VertexId> = (0..g.vertex_count()).collect();
        Self::bfs(g, &roots)
    }

    /// BFS where new trees are started from the first unvisited vertex of
    /// `root_order`. Neighbours are scanned in half-edge order.
    pub fn bfs(g: &Graph, root_order: &[VertexId]) -> Self {
        let n = g.vertex_count();
        let mut parent_edge = vec![None; n];
        let mut parent = vec![None; n];
        let mut depth = vec![0; n];
        let mut tree_edge = vec![false; g.edge_count()];
        let mut seen = vec![false; n];
        for &root in root_order {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &h in g.vertex(u) {
                    let w = g.vertex_of(g.mate(h));
                    if !seen[w] {
                        seen[w] = true;
                        let e = g.edge_of(h);
                        parent_edge[w] = Some(e);
                        parent[w] = Some(u);
                        depth[w] = depth[u] + 1;
                        tree_edge[e] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        assert!(seen.iter().all(|&s| s), "root order must list every vertex");
        SpanningForest {
            parent_edge,
            parent,
            depth,
            tree_edge,
        }
    }

    pub fn is_tree_edge(&self, e: EdgeId) -> bool {
        self.tree_edge[e]
    }

    pub fn non_tree_edges(&self) -> Vec<EdgeId> {
        (0..self.tree_edge.len()).filter(|&e| !self.tree_edge[e]).collect()
    }
}

/// Cycle basis as the columns of an `|E| × β₁` matrix.
#[derive(Clone, Debug)]
pub struct CycleBasis {
    pub matrix: IntegerMatrix,
    /// The non-tree edge that generates each column.
    pub generators: Vec<EdgeId>,
}

pub fn cycle_basis(g: &Graph, arrows: &ArrowArrangement) -> CycleBasis {
    cycle_basis_with(g, arrows, &SpanningForest::default_for(g))
}

/// One fundamental cycle per non-tree edge, in edge order. The non-tree edge
/// is traversed tail to head and the cycle closes through the tree; a tree
/// edge gets `+1` when traversed along its arrow and `-1` against it.
pub fn cycle_basis_with(g: &Graph, arrows: &ArrowArrangement, forest: &SpanningForest) -> CycleBasis {
    let generators = forest.non_tree_edges();
    let mut matrix = IntegerMatrix::zeros(g.edge_count(), generators.len());
    for (col, &e) in generators.iter().enumerate() {
        let mut coeff = vec![0i64; g.edge_count()];
        coeff[e] += 1;
        let tail = g.vertex_of(arrows.tail(e));
        let head = g.vertex_of(arrows.head(g, e));
        // walk head -> lca -> tail
        let (mut up, mut down) = (head, tail);
        let mut descending = Vec::new();
        while up != down {
            if forest.depth[up] >= forest.depth[down] {
                let f = forest.parent_edge[up].expect("non-root");
                // moving from child `up` to its parent
                coeff[f] += if g.vertex_of(arrows.tail(f)) == up { 1 } else { -1 };
                up = forest.parent[up].unwrap();
            } else {
                let f = forest.parent_edge[down].expect("non-root");
                descending.push((f, down));
                down = forest.parent[down].unwrap();
            }
        }
        for (f, child) in descending {
            // moving from the parent down to `child`
            coeff[f] += if g.vertex_of(arrows.tail(f)) == child { -1 } else { 1 };
        }
        for (row, &c) in coeff.iter().enumerate() {
            if c != 0 {
                matrix.set(row, col, BigInt::from(c));
            }
        }
    }
    CycleBasis { matrix, generators }
}

/// The signed edge-permutation matrix: column `e` has the single entry
/// `ε_φ(π(e))` in row `π(e)`.
pub fn signed_edge_matrix(g: &Graph, arrows: &ArrowArrangement, a: &Automorphism) -> IntegerMatrix {
    let pi = induced_actions(g, a).edge_perm;
    let eps = epsilon_map(g, arrows, a);
    let mut m = IntegerMatrix::zeros(g.edge_count(), g.edge_count());
    for e in 0..g.edge_count() {
        let target = pi.apply(e);
        m.set(target, e, BigInt::from(eps[target].to_i8()));
    }
    m
}

pub fn induced_cycle_matrix(
    g: &Graph,
    arrows: &ArrowArrangement,
    a: &Automorphism,
) -> Result<IntegerMatrix, LinalgError> {
    induced_cycle_matrix_with(g, arrows, &cycle_basis(g, arrows), a)
}

/// Matrix of the automorphism on the cycle space in the given basis,
/// obtained by solving `B·A = P·B` exactly.
pub fn induced_cycle_matrix_with(
    g: &Graph,
    arrows: &ArrowArrangement,
    basis: &CycleBasis,
    a: &Automorphism,
) -> Result<IntegerMatrix, LinalgError> {
    let b = &basis.matrix;
    let image = signed_edge_matrix(g, arrows, a).mul(b)?;
    let coords = b.solve(&image)?;
    let k = b.cols();
    let mut out = IntegerMatrix::zeros(k, k);
    for (i, row) in coords.iter().enumerate() {
        for (j, q) in row.iter().enumerate() {
            if !q.is_integer() {
                return Err(LinalgError::Shape(format!("non-integral entry {q} in cycle action")));
            }
            if !q.is_zero() {
                out.set(i, j, q.to_integer());
            }
        }
    }
    debug_assert!({
        let d = out.determinant();
        d == BigInt::one() || d == -BigInt::one()
    });
    Ok(out)
}
