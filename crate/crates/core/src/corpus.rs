//! Exhaustive small-graph corpus and the Θ_K = Θ_S sweep over it.

use std::collections::BTreeMap;
use std::thread;

use serde::Serialize;

use crate::aut::enumerate_automorphisms_with;
use crate::canon::canonical_labeling_with;
use crate::error::Result;
use crate::graph::{Graph, GraphError, RawGraph};
use crate::limits::{Limits, DEFAULT_MAX_HALF_EDGES};
use crate::orientation::{orientability_over, Kontsevich, OrientationHom, Shoikhet, Verdict};
use crate::perm::Permutation;
use crate::sign::Sign;
use crate::text::format_graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusSpec {
    pub max_edges: usize,
    pub allow_loops: bool,
    pub connected_only: bool,
    pub max_half_edges: usize,
}

impl CorpusSpec {
    /// Connected graphs with loops allowed, under the environment's size cap.
    pub fn new(max_edges: usize) -> Self {
        CorpusSpec {
            max_edges,
            allow_loops: true,
            connected_only: true,
            max_half_edges: Limits::from_env().max_half_edges,
        }
    }

    pub fn allow_loops(mut self, yes: bool) -> Self {
        self.allow_loops = yes;
        self
    }

    pub fn connected_only(mut self, yes: bool) -> Self {
        self.connected_only = yes;
        self
    }

    pub fn limits(&self) -> Limits {
        Limits::new(self.max_half_edges)
    }

    fn accepts(&self, g: &Graph) -> bool {
        (self.allow_loops || !g.has_loop()) && (!self.connected_only || g.is_connected())
    }
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            max_edges: 3,
            allow_loops: true,
            connected_only: true,
            max_half_edges: DEFAULT_MAX_HALF_EDGES,
        }
    }
}

/// Maps `f` over `items` on all available cores, preserving order.
pub(crate) fn par_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let workers = thread::available_parallelism().map_or(1, |n| n.get());
    if workers <= 1 || items.len() < 64 {
        return items.iter().map(f).collect();
    }
    let chunk = items.len().div_ceil(workers);
    thread::scope(|s| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|part| s.spawn(|| part.iter().map(&f).collect::<Vec<R>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("worker panicked"))
            .collect()
    })
}

/// Restricted growth strings of length `n`: every set partition exactly once.
fn set_partitions(n: usize) -> Vec<Vec<u8>> {
    fn rec(prefix: &mut Vec<u8>, max: u8, n: usize, out: &mut Vec<Vec<u8>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for b in 0..=max + 1 {
            prefix.push(b);
            rec(prefix, max.max(b), n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
    } else {
        let mut prefix = vec![0];
        rec(&mut prefix, 0, n, &mut out);
    }
    out
}

fn graph_from_blocks(edges: usize, labels: &[u8]) -> Graph {
    let blocks = labels.iter().copied().max().map_or(0, |m| m as usize + 1);
    let mut vertices = vec![Vec::new(); blocks];
    for (h, &b) in labels.iter().enumerate() {
        vertices[b as usize].push(h);
    }
    Graph::validate(RawGraph {
        half_edge_count: 2 * edges,
        edges: (0..edges).map(|i| vec![2 * i, 2 * i + 1]).collect(),
        vertices,
    })
    .expect("every set partition of paired half-edges is a graph")
}

/// One representative per isomorphism class with `|E| ≤ max_edges`, in the
/// canonical labelling, sorted by `(|E|, canonical text)`.
pub fn enumerate_graphs(spec: &CorpusSpec) -> Result<Vec<Graph>> {
    if 2 * spec.max_edges > spec.max_half_edges {
        return Err(GraphError::SizeLimitExceeded {
            half_edges: 2 * spec.max_edges,
            limit: spec.max_half_edges,
        }
        .into());
    }
    let limits = spec.limits();
    let mut out = Vec::new();
    for edges in 0..=spec.max_edges {
        let partitions = set_partitions(2 * edges);
        let found = par_map(&partitions, |labels| -> Result<Option<(Vec<u8>, Graph)>> {
            let g = graph_from_blocks(edges, labels);
            if !spec.accepts(&g) {
                return Ok(None);
            }
            let canon = canonical_labeling_with(&g, &limits)?.graph;
            Ok(Some((format_graph(&canon).into_bytes(), canon)))
        });
        let mut classes = BTreeMap::new();
        for item in found {
            if let Some((key, g)) = item? {
                classes.entry(key).or_insert(g);
            }
        }
        out.extend(classes.into_values());
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub canon: String,
    pub v: usize,
    pub e: usize,
    pub b1: usize,
    pub aut: usize,
    pub orientable_k: bool,
    pub orientable_s: bool,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub canon: String,
    pub automorphism: Permutation,
    pub theta_k: Sign,
    pub theta_s: Sign,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub graphs: usize,
    pub automorphisms: usize,
    pub orientable_k: usize,
    pub orientable_s: usize,
    pub violations: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub spec: CorpusSpec,
    pub rows: Vec<SweepRow>,
    pub violations: Vec<Violation>,
    pub totals: Totals,
}

impl SweepReport {
    pub fn empty(spec: CorpusSpec) -> Self {
        SweepReport {
            spec,
            rows: Vec::new(),
            violations: Vec::new(),
            totals: Totals::default(),
        }
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn sweep_theorem(spec: &CorpusSpec) -> Result<SweepReport> {
    sweep_with(spec, &Kontsevich::default(), &Shoikhet::default())
}

/// Compares `lhs` and `rhs` on every automorphism of every corpus graph.
/// The `orientable_k` column uses `lhs` and `orientable_s` uses `rhs`.
pub fn sweep_with(
    spec: &CorpusSpec,
    lhs: &dyn OrientationHom,
    rhs: &dyn OrientationHom,
) -> Result<SweepReport> {
    let graphs = enumerate_graphs(spec)?;
    sweep_graphs(spec, &graphs, lhs, rhs)
}

/// [`sweep_with`] over an explicit graph list.
pub fn sweep_graphs(
    spec: &CorpusSpec,
    graphs: &[Graph],
    lhs: &dyn OrientationHom,
    rhs: &dyn OrientationHom,
) -> Result<SweepReport> {
    let limits = spec.limits();
    let results = par_map(graphs, |g| -> Result<(SweepRow, Vec<Violation>)> {
        let group = enumerate_automorphisms_with(g, &limits)?;
        let canon = format_graph(g);
        let mut violations = Vec::new();
        for a in &group {
            let (k, s) = (lhs.eval(g, a), rhs.eval(g, a));
            if k != s {
                violations.push(Violation {
                    canon: canon.clone(),
                    automorphism: a.perm().clone(),
                    theta_k: k,
                    theta_s: s,
                });
            }
        }
        let row = SweepRow {
            canon,
            v: g.vertex_count(),
            e: g.edge_count(),
            b1: g.first_betti(),
            aut: group.len(),
            orientable_k: orientability_over(g, lhs, &group).verdict == Verdict::Orientable,
            orientable_s: orientability_over(g, rhs, &group).verdict == Verdict::Orientable,
            agree: violations.is_empty(),
        };
        Ok((row, violations))
    });
    let mut report = SweepReport::empty(*spec);
    for item in results {
        let (row, violations) = item?;
        report.totals.graphs += 1;
        report.totals.automorphisms += row.aut;
        report.totals.orientable_k += usize::from(row.orientable_k);
        report.totals.orientable_s += usize::from(row.orientable_s);
        report.rows.push(row);
        report.violations.extend(violations);
    }
    report.totals.violations = report.violations.len();
    Ok(report)
}
