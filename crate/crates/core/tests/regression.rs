//! Frozen corpus sizes. Counts per edge number, `|E| = 0..=5`.

use orientkit::corpus::{enumerate_graphs, sweep_theorem, CorpusSpec};
use orientkit::report::{render, ReportFormat};

fn counts(spec: CorpusSpec) -> Vec<usize> {
    let mut out = vec![0; spec.max_edges + 1];
    for g in enumerate_graphs(&spec).unwrap() {
        out[g.edge_count()] += 1;
    }
    out
}

#[test]
fn connected_with_loops() {
    assert_eq!(counts(CorpusSpec::new(5)), [0, 2, 4, 11, 30, 95]);
}

#[test]
fn connected_without_loops() {
    assert_eq!(counts(CorpusSpec::new(5).allow_loops(false)), [0, 1, 2, 5, 12, 33]);
}

#[test]
fn all_with_loops() {
    assert_eq!(counts(CorpusSpec::new(5).connected_only(false)), [1, 2, 7, 23, 79, 274]);
}

#[test]
fn all_without_loops() {
    assert_eq!(
        counts(CorpusSpec::new(5).connected_only(false).allow_loops(false)),
        [1, 1, 3, 8, 23, 66]
    );
}

#[test]
fn sweep_totals() {
    let r = sweep_theorem(&CorpusSpec::new(4)).unwrap();
    assert_eq!((r.totals.graphs, r.totals.automorphisms, r.totals.violations), (47, 800, 0));
    // exactly the loop-free graphs are orientable
    assert_eq!(r.totals.orientable_k, 20);
    assert_eq!(r.totals.orientable_s, 20);
    for row in &r.rows {
        let g = orientkit::parse_graph(&row.canon).unwrap();
        assert_eq!(row.orientable_k, !g.has_loop(), "{}", row.canon);
        assert_eq!(row.orientable_k, row.orientable_s);
    }
}

#[test]
fn disconnected_sweep_disagrees_on_component_swaps() {
    let r = sweep_theorem(&CorpusSpec::new(4).connected_only(false)).unwrap();
    assert_eq!(r.totals.graphs, 112);
    assert_eq!(r.totals.violations, 800);
    assert!(r.rows.iter().filter(|row| !row.agree).all(|row| row.v >= 2));
}

#[test]
fn reports_are_deterministic() {
    let spec = CorpusSpec::new(3);
    for format in [ReportFormat::Json, ReportFormat::Csv] {
        let a = render(&sweep_theorem(&spec).unwrap(), format).unwrap();
        let b = render(&sweep_theorem(&spec).unwrap(), format).unwrap();
        assert_eq!(a, b);
    }
}
