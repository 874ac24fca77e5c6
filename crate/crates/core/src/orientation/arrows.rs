use rand::Rng;

use crate::aut::{induced_actions, Automorphism};
use crate::graph::{EdgeId, Graph, GraphError, HalfEdgeId};
use crate::sign::Sign;

/// A direction on every edge, recorded as the tail half-edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowArrangement {
    tails: Vec<HalfEdgeId>,
}

impl ArrowArrangement {
    /// Every arrow starts at the smaller half-edge id of its edge.
    pub fn default_for(g: &Graph) -> Self {
        ArrowArrangement {
            tails: g.edges().iter().map(|pair| pair[0]).collect(),
        }
    }

    pub fn from_tails(g: &Graph, tails: Vec<HalfEdgeId>) -> Result<Self, GraphError> {
        if tails.len() != g.edge_count() {
            return Err(GraphError::EdgeOutOfRange {
                edge: tails.len(),
                count: g.edge_count(),
            });
        }
        for (e, &t) in tails.iter().enumerate() {
            if !g.edge(e).contains(&t) {
                return Err(GraphError::IdOutOfRange {
                    half_edge: t,
                    count: g.half_edge_count(),
                });
            }
        }
        Ok(ArrowArrangement { tails })
    }

    pub fn random<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Self {
        ArrowArrangement {
            tails: g.edges().iter().map(|pair| pair[rng.gen_range(0..2)]).collect(),
        }
    }

    pub fn tail(&self, e: EdgeId) -> HalfEdgeId {
        self.tails[e]
    }

    pub fn head(&self, g: &Graph, e: EdgeId) -> HalfEdgeId {
        g.mate(self.tails[e])
    }

    pub fn tails(&self) -> &[HalfEdgeId] {
        &self.tails
    }
}

pub fn default_arrows(g: &Graph) -> ArrowArrangement {
    ArrowArrangement::default_for(g)
}

/// `ε_φ(e)`: `+1` when the arrow on `e` agrees with the image under `φ` of
/// the arrow on `φ⁻¹(e)`, `-1` otherwise. Indexed by edge.
pub fn epsilon_map(g: &Graph, arrows: &ArrowArrangement, a: &Automorphism) -> Vec<Sign> {
    let pi = induced_actions(g, a).edge_perm;
    let mut eps = vec![Sign::Plus; g.edge_count()];
    for source in 0..g.edge_count() {
        let target = pi.apply(source);
        let moved_tail = a.perm().apply(arrows.tail(source));
        eps[target] = Sign::from_parity(moved_tail != arrows.tail(target));
    }
    eps
}
