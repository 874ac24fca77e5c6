//! Acceptance checks. Each test prints one `PASS`/`FAIL` line with the
//! quantity it measured, then asserts.

use std::collections::HashMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use orientkit::aut::{enumerate_automorphisms, enumerate_automorphisms_with};
use orientkit::catalog::complete_graph;
use orientkit::corpus::{enumerate_graphs, sweep_theorem, sweep_with, CorpusSpec};
use orientkit::families::{build_family, eq1_sweep, legal_params, proof_case_values, ProofCase};
use orientkit::orientation::{
    default_arrows, epsilon_map, or_orbits_bruteforce, orientability, orientability_with,
    or_orbits_bruteforce_with, signed_edge_matrix, theta_k_with, theta_s_with, ArrowArrangement,
    Kontsevich, OrientationHom, Shoikhet, SpanningForest, ThetaKind, ThetaRegistry, Verdict,
    VertexParity,
};
use orientkit::{induced_actions, Automorphism, Graph, Limits, Permutation, Sign};

fn report(id: u32, ok: bool, detail: &str) {
    println!("criterion {id:>2}: {}  {detail}", if ok { "PASS" } else { "FAIL" });
}

/// Every graph with at most five edges, connected or not, loops allowed.
fn corpus5() -> &'static [(Graph, Vec<Automorphism>)] {
    static CORPUS: OnceLock<Vec<(Graph, Vec<Automorphism>)>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let spec = CorpusSpec::new(5).connected_only(false);
        enumerate_graphs(&spec)
            .unwrap()
            .into_iter()
            .map(|g| {
                let group = enumerate_automorphisms(&g).unwrap();
                (g, group)
            })
            .collect()
    })
}

fn corpus_up_to(edges: usize) -> impl Iterator<Item = &'static (Graph, Vec<Automorphism>)> {
    corpus5().iter().filter(move |(g, _)| g.edge_count() <= edges)
}

#[test]
fn criterion_01_kontsevich_equals_shoikhet_on_connected_graphs() {
    let r = sweep_theorem(&CorpusSpec::new(5)).unwrap();
    let ok = r.violations.is_empty() && r.rows.iter().all(|row| row.agree) && r.totals.graphs == 142;
    report(
        1,
        ok,
        &format!(
            "{} automorphisms of {} connected graphs with |E| <= 5, {} disagreements (exact)",
            r.totals.automorphisms, r.totals.graphs, r.totals.violations
        ),
    );
    assert!(ok, "{:?}", r.violations.first());
}

#[test]
fn criterion_02_graphs_with_loops_are_non_orientable() {
    let mut checked = 0;
    let mut bad = Vec::new();
    for (g, group) in corpus_up_to(5) {
        if !g.has_loop() {
            continue;
        }
        checked += 1;
        for theta in [&Kontsevich::default() as &dyn OrientationHom, &Shoikhet::default()] {
            let r = orientability(g, theta).unwrap();
            let witness_fixes_vertices = r.witness.as_ref().is_some_and(|w| {
                induced_actions(g, &Automorphism::new(g, w.clone()).unwrap())
                    .vertex_perm
                    .is_identity()
            });
            if r.verdict != Verdict::NonOrientable || !witness_fixes_vertices {
                bad.push(format!("{g} under {}", theta.name()));
            }
            assert_eq!(r.per_automorphism_theta.len(), group.len());
        }
    }
    let ok = bad.is_empty() && checked > 0;
    report(
        2,
        ok,
        &format!("{checked} graphs with a loop (|E| <= 5) non-orientable under k and s with a vertex-fixing witness; {} failures", bad.len()),
    );
    assert!(ok, "{bad:?}");
}

#[test]
fn criterion_03_simplex_skeletons_under_vertex_parity() {
    let limits = Limits::new(20);
    let mut lines = Vec::new();
    let mut ok = true;
    for n in 2..=4 {
        let g = complete_graph(n + 1);
        let verdict = orientability_with(&g, &VertexParity, &limits).unwrap().verdict;
        let orbits = or_orbits_bruteforce_with(&g, &VertexParity, &limits).unwrap();
        ok &= verdict == Verdict::Orientable && orbits.orbit_count == 2 && orbits.z2_free;
        lines.push(format!("K{}: {verdict}, {} orbits", n + 1, orbits.orbit_count));
    }
    report(3, ok, &lines.join("; "));
    assert!(ok);
}

#[test]
fn criterion_04_independence_of_arrows_and_forest() {
    let mut evaluations = 0usize;
    let mut bad = 0usize;
    for (g, group) in corpus_up_to(4) {
        let arrows = default_arrows(g);
        let forest = SpanningForest::default_for(g);
        let base_s: Vec<Sign> = group.iter().map(|a| theta_s_with(g, &arrows, a)).collect();
        let base_k: Vec<Sign> = group.iter().map(|a| theta_k_with(g, &arrows, &forest, a)).collect();
        for seed in 0..100u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let random_arrows = ArrowArrangement::random(g, &mut rng);
            let mut roots: Vec<usize> = (0..g.vertex_count()).collect();
            roots.shuffle(&mut rng);
            let random_forest = SpanningForest::bfs(g, &roots);
            for (i, a) in group.iter().enumerate() {
                evaluations += 1;
                bad += usize::from(theta_s_with(g, &random_arrows, a) != base_s[i]);
                bad += usize::from(theta_k_with(g, &arrows, &random_forest, a) != base_k[i]);
                bad += usize::from(theta_k_with(g, &random_arrows, &random_forest, a) != base_k[i]);
            }
        }
    }
    let ok = bad == 0;
    report(
        4,
        ok,
        &format!("{evaluations} (graph, automorphism, seed) triples with |E| <= 4, 100 seeds; {bad} changed values"),
    );
    assert!(ok);
}

fn is_power_of_two_lengths(p: &Permutation) -> bool {
    p.cycle_lengths().iter().all(|l| l.is_power_of_two())
}

#[test]
fn criterion_05_homomorphism_and_odd_powers() {
    let registry = ThetaRegistry::with_defaults();
    let (mut pairs, mut powers, mut bad) = (0usize, 0usize, Vec::new());
    for (g, group) in corpus_up_to(4) {
        for kind in ThetaKind::ALL {
            let theta = registry.require(kind.key()).unwrap();
            let values: HashMap<&Permutation, Sign> =
                group.iter().map(|a| (a.perm(), theta.eval(g, a))).collect();
            for a in group {
                for b in group {
                    pairs += 1;
                    let ab = a.compose(b);
                    match values.get(ab.perm()) {
                        Some(&v) if v == values[a.perm()] * values[b.perm()] => {}
                        _ => bad.push(format!("{kind} product on {g}")),
                    }
                }
                for n in [3u64, 5, 7] {
                    powers += 1;
                    if theta.eval(g, &a.power(n)) != values[a.perm()] {
                        bad.push(format!("{kind} power {n} on {g}"));
                    }
                }
                let (_, normal) = a.perm().odd_power_normalize();
                if !is_power_of_two_lengths(&normal) || !values.contains_key(&normal) {
                    bad.push(format!("normalization of {} on {g}", a.perm()));
                }
            }
        }
    }
    let ok = bad.is_empty();
    report(
        5,
        ok,
        &format!("{pairs} products and {powers} odd powers over k, s, parity (|E| <= 4); {} failures", bad.len()),
    );
    assert!(ok, "{:?}", &bad[..bad.len().min(5)]);
}

#[test]
fn criterion_06_proof_case_factors() {
    let mut got = Vec::new();
    let mut ok = true;
    for n in 1..=4u32 {
        let case = proof_case_values(n).unwrap();
        // -(-1)^(2^n) for the two sign factors
        let two_pow = Sign::product((0..(1u64 << n)).map(|_| Sign::Minus));
        let expected = ProofCase {
            sign_pi: -two_pow,
            det_sign_a: -two_pow,
            eps_product: Sign::Plus,
            sigma_ratio: Sign::Plus,
        };
        ok &= case == expected;
        got.push(format!(
            "n={n}: ({}, {}, {}, {})",
            case.sign_pi, case.det_sign_a, case.eps_product, case.sigma_ratio
        ));
    }
    report(6, ok, &got.join(" "));
    assert!(ok);
}

#[test]
fn criterion_07_contraction_ratio_identity_on_families() {
    let (mut checks, mut instances, mut bad) = (0usize, 0usize, Vec::new());
    for params in legal_params(3, None) {
        let inst = build_family(params).unwrap();
        instances += 1;
        for (k, e, rec) in eq1_sweep(&inst).unwrap() {
            checks += 1;
            if !rec.equal {
                bad.push(format!("{params} k={k} e={e}"));
            }
        }
    }
    let ok = bad.is_empty();
    report(
        7,
        ok,
        &format!("{checks} (instance, power, edge) checks over {instances} family instances with n <= 3; {} unequal", bad.len()),
    );
    assert!(ok, "{bad:?}");
}

#[test]
fn criterion_08_fast_criterion_matches_orbit_computation() {
    let (mut graphs, mut bad) = (0usize, Vec::new());
    for (g, group) in corpus_up_to(5) {
        if g.vertex_count() > 6 {
            continue;
        }
        graphs += 1;
        for kind in ThetaKind::ALL {
            let theta = kind.hom();
            let fast = orientability(g, theta.as_ref()).unwrap();
            let slow = or_orbits_bruteforce(g, theta.as_ref()).unwrap();
            let pairs: usize = slow.orbits.iter().map(Vec::len).sum();
            let factorial: usize = (1..=g.vertex_count()).product();
            if (fast.verdict == Verdict::Orientable) != slow.z2_free || pairs != 2 * factorial {
                bad.push(format!("{kind} on {g}"));
            }
            assert_eq!(fast.per_automorphism_theta.len(), group.len());
        }
    }
    let ok = bad.is_empty();
    report(
        8,
        ok,
        &format!("{graphs} graphs with |V| <= 6, |E| <= 5, three homomorphisms; {} disagreements", bad.len()),
    );
    assert!(ok, "{bad:?}");
}

/// Leibniz expansion over all permutations.
fn leibniz_det(rows: &[Vec<i64>]) -> i64 {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }
    let n = rows.len();
    perms(n)
        .into_iter()
        .map(|p| {
            let sign = Permutation::from_images(p.clone()).unwrap().sign().to_i8() as i64;
            sign * (0..n).map(|i| rows[i][p[i]]).product::<i64>()
        })
        .sum()
}

#[test]
fn criterion_09_signed_edge_matrix_determinant() {
    let (mut checked, mut oracle, mut bad) = (0usize, 0usize, 0usize);
    for (g, group) in corpus_up_to(5) {
        let arrows = default_arrows(g);
        for a in group {
            checked += 1;
            let m = signed_edge_matrix(g, &arrows, a);
            let expected = induced_actions(g, a).edge_perm.sign() * Sign::product(epsilon_map(g, &arrows, a));
            let det = m.determinant();
            bad += usize::from(det != BigInt::from(expected.to_i8()));
            if g.edge_count() <= 4 {
                oracle += 1;
                bad += usize::from(BigInt::from(leibniz_det(&m.to_i64_rows())) != det);
            }
        }
    }
    let ok = bad == 0;
    report(
        9,
        ok,
        &format!("{checked} automorphisms with |E| <= 5 ({oracle} also by Leibniz expansion); {bad} mismatches"),
    );
    assert!(ok);
}

#[test]
fn criterion_10_mutants_are_detected() {
    let registry = ThetaRegistry::with_mutants();
    let spec = CorpusSpec::new(3);
    let k = registry.require("k").unwrap();
    let s = registry.require("s").unwrap();
    let mutants: [(&str, &dyn OrientationHom, &dyn OrientationHom); 3] = [
        ("s-flip-eps", k, registry.require("s-flip-eps").unwrap()),
        ("k-flip-pi", registry.require("k-flip-pi").unwrap(), s),
        ("k-flip-det", registry.require("k-flip-det").unwrap(), s),
    ];
    let mut counts = Vec::new();
    let mut ok = true;
    for (name, lhs, rhs) in mutants {
        let n = sweep_with(&spec, lhs, rhs).unwrap().violations.len();
        ok &= n >= 1;
        counts.push(format!("{name}: {n} violations"));
    }
    let clean = sweep_with(&spec, k, s).unwrap().violations.len();
    ok &= clean == 0;
    report(10, ok, &format!("|E| <= 3 sweep, {}; unmutated: {clean}", counts.join(", ")));
    assert!(ok);
}

#[test]
fn simplex_group_needs_a_raised_cap() {
    let k5 = complete_graph(5);
    assert!(enumerate_automorphisms_with(&k5, &Limits::default()).is_err());
    assert_eq!(enumerate_automorphisms_with(&k5, &Limits::new(20)).unwrap().len(), 120);
}
