//! Automorphism groups of half-edge graphs and their induced actions on
//! edges and vertices.

use serde::Serialize;

use crate::canon::{adjacency, refined_colors};
use crate::graph::{Graph, GraphError};
use crate::limits::Limits;
use crate::perm::Permutation;

/// A half-edge permutation known to preserve both partitions of its graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism(Permutation);

impl Automorphism {
    pub fn new(g: &Graph, perm: Permutation) -> Result<Self, GraphError> {
        if g.is_automorphism(&perm)? {
            Ok(Automorphism(perm))
        } else {
            Err(GraphError::NotAnAutomorphism(perm.to_string()))
        }
    }

    pub fn identity(g: &Graph) -> Self {
        Automorphism(Permutation::identity(g.half_edge_count()))
    }

    pub(crate) fn new_unchecked(perm: Permutation) -> Self {
        Automorphism(perm)
    }

    pub fn perm(&self) -> &Permutation {
        &self.0
    }

    pub fn into_perm(self) -> Permutation {
        self.0
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism(self.0.compose(&other.0).expect("same graph"))
    }

    pub fn inverse(&self) -> Automorphism {
        Automorphism(self.0.inverse())
    }

    pub fn power(&self, n: u64) -> Automorphism {
        Automorphism(self.0.power(n))
    }
}

impl std::fmt::Display for Automorphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

pub fn is_automorphism(g: &Graph, p: &Permutation) -> Result<bool, GraphError> {
    g.is_automorphism(p)
}

/// The permutations `π_φ` of edges and `σ_φ` of vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedActions {
    pub edge_perm: Permutation,
    pub vertex_perm: Permutation,
}

pub fn induced_actions(g: &Graph, a: &Automorphism) -> InducedActions {
    let p = a.perm();
    let edge_perm = g
        .edges()
        .iter()
        .map(|pair| g.edge_of(p.apply(pair[0])))
        .collect();
    let vertex_perm = g
        .vertices()
        .iter()
        .map(|block| g.vertex_of(p.apply(block[0])))
        .collect();
    InducedActions {
        edge_perm: Permutation::from_images_unchecked(edge_perm),
        vertex_perm: Permutation::from_images_unchecked(vertex_perm),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleData {
    pub half_edges: Vec<usize>,
    pub edges: Vec<usize>,
    pub vertices: Vec<usize>,
}

pub fn automorphism_cycle_data(g: &Graph, a: &Automorphism) -> CycleData {
    let induced = induced_actions(g, a);
    CycleData {
        half_edges: a.perm().cycle_lengths(),
        edges: induced.edge_perm.cycle_lengths(),
        vertices: induced.vertex_perm.cycle_lengths(),
    }
}

pub fn enumerate_automorphisms(g: &Graph) -> Result<Vec<Automorphism>, GraphError> {
    enumerate_automorphisms_with(g, &Limits::from_env())
}

/// Every automorphism of `g`, sorted lexicographically by image list.
///
/// Backtracks over half-edge images. Assigning `h ↦ h'` forces the mate of
/// `h` onto the mate of `h'` and fixes the vertex of `h` onto the vertex of
/// `h'`; vertices may only be matched when their refined colours agree.
pub fn enumerate_automorphisms_with(
    g: &Graph,
    limits: &Limits,
) -> Result<Vec<Automorphism>, GraphError> {
    limits.check(g)?;
    let adj = adjacency(g);
    let colors = refined_colors(g, &adj);

    // visit half-edges vertex by vertex in BFS order so that most choices
    // land on an already matched vertex
    let mut order = Vec::with_capacity(g.half_edge_count());
    let mut seen = vec![false; g.vertex_count()];
    for root in 0..g.vertex_count() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &h in g.vertex(v) {
                order.push(h);
                let w = g.vertex_of(g.mate(h));
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }

    let n = g.vertex_count();
    let mut search = AutSearch {
        g,
        colors: &colors,
        order: &order,
        image: vec![None; g.half_edge_count()],
        used: vec![false; g.half_edge_count()],
        vmap: vec![None; n],
        vused: vec![false; n],
        out: Vec::new(),
    };
    search.run(0);
    let mut out = search.out;
    out.sort();
    Ok(out)
}

struct AutSearch<'a> {
    g: &'a Graph,
    colors: &'a [usize],
    order: &'a [usize],
    image: Vec<Option<usize>>,
    used: Vec<bool>,
    vmap: Vec<Option<usize>>,
    vused: Vec<bool>,
    out: Vec<Automorphism>,
}

enum Undo {
    Half(usize),
    Vertex(usize),
}

impl AutSearch<'_> {
    fn bind_vertex(&mut self, v: usize, w: usize, trail: &mut Vec<Undo>) -> bool {
        match self.vmap[v] {
            Some(t) => t == w,
            None => {
                if self.vused[w] || self.colors[v] != self.colors[w] {
                    return false;
                }
                self.vmap[v] = Some(w);
                self.vused[w] = true;
                trail.push(Undo::Vertex(v));
                true
            }
        }
    }

    fn bind_half(&mut self, h: usize, t: usize, trail: &mut Vec<Undo>) -> bool {
        match self.image[h] {
            Some(x) => return x == t,
            None if self.used[t] => return false,
            None => {}
        }
        if !self.bind_vertex(self.g.vertex_of(h), self.g.vertex_of(t), trail) {
            return false;
        }
        self.image[h] = Some(t);
        self.used[t] = true;
        trail.push(Undo::Half(h));
        true
    }

    fn undo(&mut self, trail: Vec<Undo>) {
        for u in trail.into_iter().rev() {
            match u {
                Undo::Half(h) => {
                    let t = self.image[h].take().unwrap();
                    self.used[t] = false;
                }
                Undo::Vertex(v) => {
                    let w = self.vmap[v].take().unwrap();
                    self.vused[w] = false;
                }
            }
        }
    }

    fn run(&mut self, mut pos: usize) {
        while pos < self.order.len() && self.image[self.order[pos]].is_some() {
            pos += 1;
        }
        if pos == self.order.len() {
            let images = self.image.iter().map(|x| x.unwrap()).collect();
            self.out
                .push(Automorphism::new_unchecked(Permutation::from_images_unchecked(images)));
            return;
        }
        let h = self.order[pos];
        let candidates: Vec<usize> = match self.vmap[self.g.vertex_of(h)] {
            Some(w) => self.g.vertex(w).to_vec(),
            None => (0..self.g.half_edge_count()).collect(),
        };
        for t in candidates {
            if self.used[t] {
                continue;
            }
            let mut trail = Vec::new();
            if self.bind_half(h, t, &mut trail)
                && self.bind_half(self.g.mate(h), self.g.mate(t), &mut trail)
            {
                self.run(pos + 1);
            }
            self.undo(trail);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::*;
    use std::collections::HashSet;

    fn all_perms(n: usize) -> Vec<Permutation> {
        fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if prefix.len() == used.len() {
                out.push(Permutation::from_images(prefix.clone()).unwrap());
                return;
            }
            for i in 0..used.len() {
                if !used[i] {
                    used[i] = true;
                    prefix.push(i);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[i] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    fn brute_force_group(g: &Graph) -> Vec<Automorphism> {
        all_perms(g.half_edge_count())
            .into_iter()
            .filter(|p| g.is_automorphism(p).unwrap())
            .map(Automorphism::new_unchecked)
            .collect()
    }

    #[test]
    fn group_orders_match_brute_force() {
        assert_eq!(enumerate_automorphisms(&loop_graph()).unwrap().len(), 2);
        assert_eq!(enumerate_automorphisms(&double_edge()).unwrap().len(), 4);
        assert_eq!(enumerate_automorphisms(&triangle()).unwrap().len(), 6);
        for g in [
            loop_graph(),
            single_edge(),
            double_edge(),
            triangle(),
            theta_graph(),
            path(3),
            bouquet(2),
            bouquet(3),
            loop_graph().disjoint_union(&single_edge()),
            single_edge().disjoint_union(&single_edge()),
            Graph::new(6, &[(0, 1), (2, 3), (4, 5)], &[&[0, 1, 2], &[3, 4], &[5]]).unwrap(),
        ] {
            let fast = enumerate_automorphisms(&g).unwrap();
            let mut brute = brute_force_group(&g);
            brute.sort();
            assert_eq!(fast, brute, "{g}");
        }
    }

    #[test]
    fn known_orders() {
        assert_eq!(enumerate_automorphisms(&k4()).unwrap().len(), 24);
        assert_eq!(enumerate_automorphisms(&bouquet(4)).unwrap().len(), 384);
        assert_eq!(enumerate_automorphisms(&cycle(5)).unwrap().len(), 10);
        assert_eq!(enumerate_automorphisms(&Graph::empty()).unwrap().len(), 1);
        let k5 = complete_graph(5);
        assert!(enumerate_automorphisms(&k5).is_err());
        assert_eq!(enumerate_automorphisms_with(&k5, &Limits::new(20)).unwrap().len(), 120);
    }

    #[test]
    fn group_is_closed() {
        for g in [k4(), theta_graph(), bouquet(3), double_edge().disjoint_union(&loop_graph())] {
            let auts = enumerate_automorphisms(&g).unwrap();
            let set: HashSet<_> = auts.iter().cloned().collect();
            assert!(set.contains(&Automorphism::identity(&g)));
            for a in &auts {
                assert!(set.contains(&a.inverse()));
                for b in &auts {
                    assert!(set.contains(&a.compose(b)));
                }
            }
        }
    }

    #[test]
    fn is_automorphism_examples() {
        let swap = Permutation::from_images(vec![1, 0]).unwrap();
        assert!(is_automorphism(&loop_graph(), &swap).unwrap());
        assert!(is_automorphism(&single_edge(), &swap).unwrap());
        let partial = Permutation::from_images(vec![1, 0, 2, 3, 4, 5]).unwrap();
        assert!(!is_automorphism(&triangle(), &partial).unwrap());
        assert!(Automorphism::new(&triangle(), partial).is_err());
    }

    #[test]
    fn induced_action_examples() {
        let t = triangle();
        let rho = Automorphism::new(&t, Permutation::from_images(vec![2, 3, 4, 5, 0, 1]).unwrap()).unwrap();
        let ind = induced_actions(&t, &rho);
        assert_eq!(ind.edge_perm.cycle_lengths(), vec![3]);
        assert_eq!(ind.vertex_perm.cycle_lengths(), vec![3]);

        let l = loop_graph();
        let swap = Automorphism::new(&l, Permutation::from_images(vec![1, 0]).unwrap()).unwrap();
        let ind = induced_actions(&l, &swap);
        assert!(ind.edge_perm.is_identity());
        assert!(ind.vertex_perm.is_identity());

        let d = double_edge();
        let flip = Automorphism::new(&d, Permutation::from_images(vec![1, 0, 3, 2]).unwrap()).unwrap();
        let ind = induced_actions(&d, &flip);
        assert!(ind.edge_perm.is_identity());
        assert_eq!(ind.vertex_perm, Permutation::from_images(vec![1, 0]).unwrap());
    }

    #[test]
    fn induced_actions_are_homomorphic() {
        for g in [k4(), theta_graph(), bouquet(3), path(4)] {
            let auts = enumerate_automorphisms(&g).unwrap();
            for a in &auts {
                for b in &auts {
                    let ab = induced_actions(&g, &a.compose(b));
                    let (ia, ib) = (induced_actions(&g, a), induced_actions(&g, b));
                    assert_eq!(ab.edge_perm, ia.edge_perm.compose(&ib.edge_perm).unwrap());
                    assert_eq!(ab.vertex_perm, ia.vertex_perm.compose(&ib.vertex_perm).unwrap());
                }
            }
        }
    }

    #[test]
    fn odd_power_normalization_stays_in_group() {
        for g in [k4(), cycle(6), bouquet(3)] {
            let auts: HashSet<_> = enumerate_automorphisms(&g).unwrap().into_iter().collect();
            for a in &auts {
                let (_, p) = a.perm().odd_power_normalize();
                assert!(auts.contains(&Automorphism::new_unchecked(p)));
            }
        }
    }

    #[test]
    fn cycle_data_examples() {
        let t = triangle();
        let rho = Automorphism::new(&t, Permutation::from_images(vec![2, 3, 4, 5, 0, 1]).unwrap()).unwrap();
        let data = automorphism_cycle_data(&t, &rho);
        assert_eq!(data.half_edges, vec![3, 3]);
        assert_eq!(data.edges, vec![3]);
        assert_eq!(data.vertices, vec![3]);
        let id = automorphism_cycle_data(&t, &Automorphism::identity(&t));
        assert_eq!(id.half_edges, vec![1; 6]);
        assert_eq!(id.edges, vec![1; 3]);
        let l = loop_graph();
        let swap = Automorphism::new(&l, Permutation::from_images(vec![1, 0]).unwrap()).unwrap();
        let data = automorphism_cycle_data(&l, &swap);
        assert_eq!((data.half_edges, data.edges, data.vertices), (vec![2], vec![1], vec![1]));
    }
}
