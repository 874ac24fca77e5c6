//! Canonical forms for small half-edge graphs.
//!
//! Up to isomorphism a half-edge graph is the same thing as a multigraph with
//! loops: relabelings of half-edges inside a vertex or inside an edge never
//! change the isomorphism class. The canonical form is therefore computed on
//! the vertex adjacency matrix (loop counts on the diagonal): it is the
//! lexicographically least lower-triangular row code over all vertex
//! orderings that list vertices by ascending refined colour. The search is a
//! plain branch-and-bound backtrack.

use std::cmp::Ordering;

use crate::graph::{Graph, GraphError, RawGraph, VertexId};
use crate::limits::Limits;

/// Adjacency counts; `adj[u][u]` is the number of loops at `u`.
pub(crate) fn adjacency(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.vertex_count();
    let mut adj = vec![vec![0u32; n]; n];
    for &[a, b] in g.edges() {
        let (u, w) = (g.vertex_of(a), g.vertex_of(b));
        adj[u][w] += 1;
        if u != w {
            adj[w][u] += 1;
        }
    }
    adj
}

/// Isomorphism-invariant vertex colours by iterated neighbourhood refinement.
/// Colours are ranks of sorted signatures, so equal structure gives equal
/// colours in every labeling.
pub(crate) fn refined_colors(g: &Graph, adj: &[Vec<u32>]) -> Vec<usize> {
    let n = g.vertex_count();
    let initial: Vec<(usize, u32)> = (0..n).map(|v| (g.degree(v), adj[v][v])).collect();
    let mut colors = rank(&initial);
    loop {
        let signatures: Vec<(usize, Vec<(usize, u32)>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<(usize, u32)> = (0..n)
                    .filter(|&w| w != v && adj[v][w] > 0)
                    .map(|w| (colors[w], adj[v][w]))
                    .collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let next = rank(&signatures);
        let classes = |c: &[usize]| c.iter().max().map_or(0, |m| m + 1);
        if classes(&next) == classes(&colors) {
            return next;
        }
        colors = next;
    }
}

fn rank<T: Ord + Clone>(items: &[T]) -> Vec<usize> {
    let mut sorted: Vec<T> = items.to_vec();
    sorted.sort();
    sorted.dedup();
    items
        .iter()
        .map(|x| sorted.binary_search(x).expect("present"))
        .collect()
}

struct Search<'a> {
    adj: &'a [Vec<u32>],
    colors: &'a [usize],
    target: Vec<usize>,
    used: Vec<bool>,
    order: Vec<VertexId>,
    code: Vec<u32>,
    best_code: Option<Vec<u32>>,
    best_order: Vec<VertexId>,
}

impl Search<'_> {
    fn prefix_cmp(&self) -> Ordering {
        match &self.best_code {
            Some(best) => self.code.as_slice().cmp(&best[..self.code.len()]),
            None => Ordering::Less,
        }
    }

    fn run(&mut self) {
        let p = self.order.len();
        if p == self.target.len() {
            if self.prefix_cmp() == Ordering::Less {
                self.best_code = Some(self.code.clone());
                self.best_order = self.order.clone();
            }
            return;
        }
        for v in 0..self.used.len() {
            if self.used[v] || self.colors[v] != self.target[p] {
                continue;
            }
            let start = self.code.len();
            self.code.extend(self.order.iter().map(|&u| self.adj[v][u]));
            self.code.push(self.adj[v][v]);
            if self.prefix_cmp() != Ordering::Greater {
                self.used[v] = true;
                self.order.push(v);
                self.run();
                self.order.pop();
                self.used[v] = false;
            }
            self.code.truncate(start);
        }
    }
}

/// Result of canonical labeling: the canonical graph and, for each canonical
/// vertex position, the original vertex placed there.
#[derive(Clone, Debug)]
pub struct CanonicalLabeling {
    pub graph: Graph,
    pub vertex_order: Vec<VertexId>,
}

pub fn canonical_labeling_with(g: &Graph, limits: &Limits) -> Result<CanonicalLabeling, GraphError> {
    limits.check(g)?;
    let adj = adjacency(g);
    let colors = refined_colors(g, &adj);
    let mut target = colors.clone();
    target.sort_unstable();
    let n = g.vertex_count();
    let mut search = Search {
        adj: &adj,
        colors: &colors,
        target,
        used: vec![false; n],
        order: Vec::with_capacity(n),
        code: Vec::new(),
        best_code: None,
        best_order: Vec::new(),
    };
    search.run();
    let order = search.best_order;

    let mut edges = Vec::new();
    let mut vertices = vec![Vec::new(); n];
    for i in 0..n {
        for j in i..n {
            for _ in 0..adj[order[i]][order[j]] {
                let h = 2 * edges.len();
                edges.push(vec![h, h + 1]);
                vertices[i].push(h);
                vertices[j].push(h + 1);
            }
        }
    }
    let graph = Graph::validate(RawGraph {
        half_edge_count: 2 * edges.len(),
        edges,
        vertices,
    })?;
    Ok(CanonicalLabeling {
        graph,
        vertex_order: order,
    })
}

pub fn canonical_graph(g: &Graph) -> Result<Graph, GraphError> {
    Ok(canonical_labeling_with(g, &Limits::from_env())?.graph)
}

/// Canonical byte string: the text form of the canonical graph.
pub fn canonical_form_with(g: &Graph, limits: &Limits) -> Result<Vec<u8>, GraphError> {
    Ok(canonical_labeling_with(g, limits)?
        .graph
        .to_string()
        .into_bytes())
}

pub fn canonical_form(g: &Graph) -> Result<Vec<u8>, GraphError> {
    canonical_form_with(g, &Limits::from_env())
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool, GraphError> {
    if a.half_edge_count() != b.half_edge_count() || a.vertex_count() != b.vertex_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}
