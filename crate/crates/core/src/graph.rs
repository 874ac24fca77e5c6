//! Graphs in the half-edge language.
//!
//! A graph is a set of `2n` half-edges `0..2n` together with two partitions:
//! the edges (blocks of size two) and the vertices (non-empty blocks). Every
//! [`Graph`] value is validated and kept in normal form: each block is sorted
//! ascending and both block lists are sorted by their smallest member.

use thiserror::Error;

use crate::perm::{PermError, Permutation};

pub type HalfEdgeId = usize;
pub type EdgeId = usize;
pub type VertexId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("half-edge count {0} is odd")]
    OddHalfEdgeCount(usize),
    #[error("edge block {edge} has {size} half-edges, expected 2")]
    BadEdgeArity { edge: usize, size: usize },
    #[error("half-edge {half_edge} is out of range 0..{count}")]
    IdOutOfRange { half_edge: usize, count: usize },
    #[error("half-edge {half_edge} appears in two {partition} blocks")]
    Overlap {
        half_edge: HalfEdgeId,
        partition: &'static str,
    },
    #[error("half-edge {half_edge} is not covered by the {partition} partition")]
    Coverage {
        half_edge: HalfEdgeId,
        partition: &'static str,
    },
    #[error("vertex block {0} is empty")]
    EmptyVertex(usize),
    #[error("edge {edge} out of range ({count} edges)")]
    EdgeOutOfRange { edge: EdgeId, count: usize },
    #[error("graph has {half_edges} half-edges, above the limit of {limit}")]
    SizeLimitExceeded { half_edges: usize, limit: usize },
    #[error("permutation {0} is not an automorphism")]
    NotAnAutomorphism(String),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// An unchecked graph description, as read from text or built by hand.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawGraph {
    pub half_edge_count: usize,
    pub edges: Vec<Vec<HalfEdgeId>>,
    pub vertices: Vec<Vec<HalfEdgeId>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    half_edge_count: usize,
    edges: Vec<[HalfEdgeId; 2]>,
    vertices: Vec<Vec<HalfEdgeId>>,
    edge_of: Vec<EdgeId>,
    vertex_of: Vec<VertexId>,
}

fn check_partition(
    count: usize,
    blocks: &[Vec<HalfEdgeId>],
    partition: &'static str,
) -> Result<Vec<usize>, GraphError> {
    let mut owner = vec![usize::MAX; count];
    for (b, block) in blocks.iter().enumerate() {
        for &h in block {
            if h >= count {
                return Err(GraphError::IdOutOfRange { half_edge: h, count });
            }
            if owner[h] != usize::MAX {
                return Err(GraphError::Overlap {
                    half_edge: h,
                    partition,
                });
            }
            owner[h] = b;
        }
    }
    if let Some(h) = owner.iter().position(|&o| o == usize::MAX) {
        return Err(GraphError::Coverage {
            half_edge: h,
            partition,
        });
    }
    Ok(owner)
}

impl Graph {
    pub fn validate(raw: RawGraph) -> Result<Graph, GraphError> {
        let count = raw.half_edge_count;
        if count % 2 == 1 {
            return Err(GraphError::OddHalfEdgeCount(count));
        }
        for (e, block) in raw.edges.iter().enumerate() {
            if block.len() != 2 {
                return Err(GraphError::BadEdgeArity {
                    edge: e,
                    size: block.len(),
                });
            }
        }
        check_partition(count, &raw.edges, "edge")?;
        if let Some(v) = raw.vertices.iter().position(Vec::is_empty) {
            return Err(GraphError::EmptyVertex(v));
        }
        check_partition(count, &raw.vertices, "vertex")?;

        let mut edges: Vec<[HalfEdgeId; 2]> = raw
            .edges
            .iter()
            .map(|b| [b[0].min(b[1]), b[0].max(b[1])])
            .collect();
        edges.sort_unstable();
        let mut vertices = raw.vertices;
        for block in &mut vertices {
            block.sort_unstable();
        }
        vertices.sort_unstable_by_key(|b| b[0]);

        let mut edge_of = vec![0; count];
        for (e, pair) in edges.iter().enumerate() {
            edge_of[pair[0]] = e;
            edge_of[pair[1]] = e;
        }
        let mut vertex_of = vec![0; count];
        for (v, block) in vertices.iter().enumerate() {
            for &h in block {
                vertex_of[h] = v;
            }
        }
        Ok(Graph {
            half_edge_count: count,
            edges,
            vertices,
            edge_of,
            vertex_of,
        })
    }

    /// Convenience constructor from edge pairs and vertex blocks.
    pub fn new(
        half_edge_count: usize,
        edges: &[(HalfEdgeId, HalfEdgeId)],
        vertices: &[&[HalfEdgeId]],
    ) -> Result<Graph, GraphError> {
        Graph::validate(RawGraph {
            half_edge_count,
            edges: edges.iter().map(|&(a, b)| vec![a, b]).collect(),
            vertices: vertices.iter().map(|v| v.to_vec()).collect(),
        })
    }

    pub fn empty() -> Graph {
        Graph::validate(RawGraph::default()).expect("empty graph is valid")
    }

    pub fn to_raw(&self) -> RawGraph {
        RawGraph {
            half_edge_count: self.half_edge_count,
            edges: self.edges.iter().map(|p| p.to_vec()).collect(),
            vertices: self.vertices.clone(),
        }
    }

    pub fn half_edge_count(&self) -> usize {
        self.half_edge_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> &[[HalfEdgeId; 2]] {
        &self.edges
    }

    pub fn vertices(&self) -> &[Vec<HalfEdgeId>] {
        &self.vertices
    }

    pub fn edge(&self, e: EdgeId) -> [HalfEdgeId; 2] {
        self.edges[e]
    }

    pub fn vertex(&self, v: VertexId) -> &[HalfEdgeId] {
        &self.vertices[v]
    }

    pub fn edge_of(&self, h: HalfEdgeId) -> EdgeId {
        self.edge_of[h]
    }

    pub fn vertex_of(&self, h: HalfEdgeId) -> VertexId {
        self.vertex_of[h]
    }

    /// The other half-edge of the edge containing `h`.
    pub fn mate(&self, h: HalfEdgeId) -> HalfEdgeId {
        let [a, b] = self.edges[self.edge_of[h]];
        if a == h {
            b
        } else {
            a
        }
    }

    /// Valence of `v` (loops count twice).
    pub fn degree(&self, v: VertexId) -> usize {
        self.vertices[v].len()
    }

    pub fn check_edge(&self, e: EdgeId) -> Result<(), GraphError> {
        if e >= self.edges.len() {
            return Err(GraphError::EdgeOutOfRange {
                edge: e,
                count: self.edges.len(),
            });
        }
        Ok(())
    }

    pub fn is_loop(&self, e: EdgeId) -> Result<bool, GraphError> {
        self.check_edge(e)?;
        let [a, b] = self.edges[e];
        Ok(self.vertex_of[a] == self.vertex_of[b])
    }

    pub fn has_loop(&self) -> bool {
        self.edges
            .iter()
            .any(|&[a, b]| self.vertex_of[a] == self.vertex_of[b])
    }

    pub fn loop_count_at(&self, v: VertexId) -> usize {
        self.vertices[v]
            .iter()
            .filter(|&&h| h < self.mate(h) && self.vertex_of[self.mate(h)] == v)
            .count()
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex id.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let mut comp = vec![usize::MAX; self.vertex_count()];
        let mut out: Vec<Vec<VertexId>> = Vec::new();
        for start in 0..self.vertex_count() {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &h in &self.vertices[v] {
                    let w = self.vertex_of[self.mate(h)];
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() > 0 && self.connected_components().len() == 1
    }

    /// Rank of the first homology group: `|E| - |V| + #components`.
    pub fn first_betti(&self) -> usize {
        self.edge_count() + self.connected_components().len() - self.vertex_count()
    }

    /// True iff `p` maps edge blocks onto edge blocks and vertex blocks onto
    /// vertex blocks.
    pub fn is_automorphism(&self, p: &Permutation) -> Result<bool, GraphError> {
        if p.len() != self.half_edge_count {
            return Err(PermError::DomainMismatch {
                left: p.len(),
                right: self.half_edge_count,
            }
            .into());
        }
        let edges_ok = self
            .edges
            .iter()
            .all(|&[a, b]| self.mate(p.apply(a)) == p.apply(b));
        let vertices_ok = self.vertices.iter().all(|block| {
            let target = self.vertex_of[p.apply(block[0])];
            self.vertices[target].len() == block.len()
                && block.iter().all(|&h| self.vertex_of[p.apply(h)] == target)
        });
        Ok(edges_ok && vertices_ok)
    }

    /// Renames half-edge `h` to `relabel(h)`.
    pub fn relabel(&self, relabel: &Permutation) -> Result<Graph, GraphError> {
        if relabel.len() != self.half_edge_count {
            return Err(PermError::DomainMismatch {
                left: relabel.len(),
                right: self.half_edge_count,
            }
            .into());
        }
        let raw = RawGraph {
            half_edge_count: self.half_edge_count,
            edges: self
                .edges
                .iter()
                .map(|p| p.iter().map(|&h| relabel.apply(h)).collect())
                .collect(),
            vertices: self
                .vertices
                .iter()
                .map(|b| b.iter().map(|&h| relabel.apply(h)).collect())
                .collect(),
        };
        Graph::validate(raw)
    }

    /// `self ⊔ other`, with `other`'s half-edges shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.half_edge_count;
        let mut raw = self.to_raw();
        raw.half_edge_count += other.half_edge_count;
        raw.edges
            .extend(other.edges.iter().map(|p| vec![p[0] + shift, p[1] + shift]));
        raw.vertices.extend(
            other
                .vertices
                .iter()
                .map(|b| b.iter().map(|&h| h + shift).collect()),
        );
        Graph::validate(raw).expect("union of valid graphs is valid")
    }

    /// Contracts a single edge; a loop is simply deleted.
    pub fn contract_edge(&self, e: EdgeId) -> Result<Contraction, GraphError> {
        self.check_edge(e)?;
        Ok(self.contract_edges(&[e]))
    }

    /// Contracts every edge in `set` at once. Endpoints of each non-loop edge
    /// are merged, all listed half-edges are removed, and merged vertex
    /// classes that end up without half-edges are dropped from the graph and
    /// listed in [`Contraction::residual`].
    pub fn contract_edges(&self, set: &[EdgeId]) -> Contraction {
        let mut removed = vec![false; self.half_edge_count];
        let mut uf = UnionFind::new(self.vertex_count());
        for &e in set {
            let [a, b] = self.edges[e];
            removed[a] = true;
            removed[b] = true;
            uf.union(self.vertex_of[a], self.vertex_of[b]);
        }

        let mut half_edge_map = vec![None; self.half_edge_count];
        let mut next = 0;
        for h in 0..self.half_edge_count {
            if !removed[h] {
                half_edge_map[h] = Some(next);
                next += 1;
            }
        }

        // class representative -> surviving half-edges (new ids)
        let mut class_blocks: Vec<Vec<HalfEdgeId>> = vec![Vec::new(); self.vertex_count()];
        for v in 0..self.vertex_count() {
            let root = uf.find(v);
            class_blocks[root].extend(self.vertices[v].iter().filter_map(|&h| half_edge_map[h]));
        }
        let raw = RawGraph {
            half_edge_count: next,
            edges: self
                .edges
                .iter()
                .filter(|p| !removed[p[0]])
                .map(|p| vec![half_edge_map[p[0]].unwrap(), half_edge_map[p[1]].unwrap()])
                .collect(),
            vertices: class_blocks.iter().filter(|b| !b.is_empty()).cloned().collect(),
        };
        let graph = Graph::validate(raw).expect("contraction preserves validity");

        let mut residual: Vec<Vec<VertexId>> = Vec::new();
        let mut residual_of_root = vec![usize::MAX; self.vertex_count()];
        let mut vertex_map = vec![VertexImage::Residual(0); self.vertex_count()];
        for v in 0..self.vertex_count() {
            let root = uf.find(v);
            if let Some(&h) = class_blocks[root].first() {
                vertex_map[v] = VertexImage::Vertex(graph.vertex_of(h));
            } else {
                if residual_of_root[root] == usize::MAX {
                    residual_of_root[root] = residual.len();
                    residual.push(Vec::new());
                }
                residual[residual_of_root[root]].push(v);
                vertex_map[v] = VertexImage::Residual(residual_of_root[root]);
            }
        }
        Contraction {
            graph,
            half_edge_map,
            vertex_map,
            residual,
        }
    }

    /// Contracts the whole orbit of edge `e` under the automorphism `phi` and
    /// returns the induced automorphism of the contracted graph.
    pub fn contract_edge_orbit(
        &self,
        phi: &Permutation,
        e: EdgeId,
    ) -> Result<OrbitContraction, GraphError> {
        self.check_edge(e)?;
        if !self.is_automorphism(phi)? {
            return Err(GraphError::NotAnAutomorphism(phi.to_string()));
        }
        let mut orbit = vec![e];
        let mut cur = self.edge_of[phi.apply(self.edges[e][0])];
        while cur != e {
            orbit.push(cur);
            cur = self.edge_of[phi.apply(self.edges[cur][0])];
        }
        let mut sorted_orbit = orbit.clone();
        sorted_orbit.sort_unstable();
        let contraction = self.contract_edges(&sorted_orbit);

        let mut induced = vec![0; contraction.graph.half_edge_count()];
        for h in 0..self.half_edge_count {
            if let Some(new) = contraction.half_edge_map[h] {
                induced[new] = contraction.half_edge_map[phi.apply(h)]
                    .expect("orbit is invariant under phi");
            }
        }
        let induced = Permutation::from_images(induced)?;

        let mut residual_images = vec![0; contraction.residual.len()];
        for (r, class) in contraction.residual.iter().enumerate() {
            let v = class[0];
            let image = self.vertex_of[phi.apply(self.vertices[v][0])];
            match contraction.vertex_map[image] {
                VertexImage::Residual(s) => residual_images[r] = s,
                VertexImage::Vertex(_) => unreachable!("phi maps residual classes to residual classes"),
            }
        }
        let residual_perm = Permutation::from_images(residual_images)?;
        debug_assert!(contraction.graph.is_automorphism(&induced).unwrap());

        Ok(OrbitContraction {
            orbit,
            phi: induced,
            residual_perm,
            contraction,
        })
    }
}

/// Where an old vertex ends up after a contraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexImage {
    Vertex(VertexId),
    /// Index into [`Contraction::residual`]: the merged class lost all its half-edges.
    Residual(usize),
}

#[derive(Clone, Debug)]
pub struct Contraction {
    pub graph: Graph,
    /// Old half-edge id -> new compact id, `None` for deleted half-edges.
    pub half_edge_map: Vec<Option<HalfEdgeId>>,
    pub vertex_map: Vec<VertexImage>,
    /// Classes of old vertices that were merged into a vertex with no
    /// surviving half-edges. Topologically these are isolated points.
    pub residual: Vec<Vec<VertexId>>,
}

#[derive(Clone, Debug)]
pub struct OrbitContraction {
    /// The orbit in traversal order starting from the chosen edge.
    pub orbit: Vec<EdgeId>,
    /// Induced automorphism of the contracted graph.
    pub phi: Permutation,
    /// Action of the automorphism on the residual (isolated) vertices.
    pub residual_perm: Permutation,
    pub contraction: Contraction,
}

impl OrbitContraction {
    pub fn graph(&self) -> &Graph {
        &self.contraction.graph
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // smaller root wins so classes are keyed by their smallest vertex
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }
}
