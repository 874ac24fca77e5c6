//! The three families of pairs `(G, ψ)` where `G` has `2ⁿ` edges and the
//! cyclic group generated by `ψ` is transitive on edges, together with the
//! checks that tie them to the contraction argument.
//!
//! Encodings are indexed by `t ∈ ℤ_{2ⁿ}` (or `ℤ_{2ⁿ⁺¹}`), where `t` reads the
//! double index `(i, j)` in mixed radix with `j` advancing first:
//! `t = (i-1)·2^c + (j-1)`. Then `ψ` is always `t ↦ t+1`.
//!
//! * I(n, c): half-edges `t ∈ ℤ_{2ⁿ⁺¹}`, edges `{t, t+2ⁿ}`, vertex `j` is
//!   `{t ≡ j mod 2^c}`. Every edge is a loop.
//! * II(n, c, m): half-edges `a_t = 2t`, `b_t = 2t+1`, edges `{a_t, b_t}`;
//!   `a`-vertices group `t mod 2^c`, `b`-vertices group `t mod 2^{c+m}`.
//! * III(n, c, m): same half-edges and edges; vertex `r ∈ ℤ_{2^{c+m}}` is
//!   `{a_t : t ≡ r} ∪ {b_t : t ≡ r - 2^c}`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::aut::{induced_actions, Automorphism};
use crate::error::Result;
use crate::graph::{EdgeId, Graph, RawGraph};
use crate::orientation::{
    cycle_basis, default_arrows, epsilon_map, induced_cycle_matrix, theta_k, theta_s,
    ArrowArrangement,
};
use crate::linalg::unit_det_sign;
use crate::perm::Permutation;
use crate::sign::Sign;

/// Largest `n` accepted by the constructors (`2^{n+1}` half-edges).
pub const MAX_FAMILY_N: u32 = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("invalid family parameters: {0}")]
    ParamRange(String),
    #[error("unknown family {0:?} (expected I, II or III)")]
    UnknownFamily(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FamilyKind {
    I,
    II,
    III,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 3] = [FamilyKind::I, FamilyKind::II, FamilyKind::III];
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::I => "I",
            FamilyKind::II => "II",
            FamilyKind::III => "III",
        })
    }
}

impl FromStr for FamilyKind {
    type Err = FamilyError;
    fn from_str(s: &str) -> std::result::Result<Self, FamilyError> {
        match s.to_ascii_uppercase().as_str() {
            "I" | "1" => Ok(FamilyKind::I),
            "II" | "2" => Ok(FamilyKind::II),
            "III" | "3" => Ok(FamilyKind::III),
            _ => Err(FamilyError::UnknownFamily(s.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FamilyParams {
    pub family: FamilyKind,
    pub n: u32,
    pub c: u32,
    pub m: u32,
}

impl FamilyParams {
    pub fn new(family: FamilyKind, n: u32, c: u32, m: u32) -> std::result::Result<Self, FamilyError> {
        let p = FamilyParams { family, n, c, m };
        p.check()?;
        Ok(p)
    }

    pub fn check(&self) -> std::result::Result<(), FamilyError> {
        if self.n > MAX_FAMILY_N {
            return Err(FamilyError::ParamRange(format!("n = {} exceeds {MAX_FAMILY_N}", self.n)));
        }
        match self.family {
            FamilyKind::I if self.m != 0 => {
                Err(FamilyError::ParamRange("family I takes no m".into()))
            }
            FamilyKind::I if self.c > self.n => {
                Err(FamilyError::ParamRange(format!("c = {} > n = {}", self.c, self.n)))
            }
            FamilyKind::II | FamilyKind::III if self.c + self.m > self.n => Err(
                FamilyError::ParamRange(format!("c + m = {} > n = {}", self.c + self.m, self.n)),
            ),
            _ => Ok(()),
        }
    }

    pub fn edge_count(&self) -> usize {
        1 << self.n
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            FamilyKind::I => write!(f, "I(n={}, c={})", self.n, self.c),
            kind => write!(f, "{kind}(n={}, c={}, m={})", self.n, self.c, self.m),
        }
    }
}

/// Every legal parameter triple with `n ≤ max_n`, optionally for one family.
pub fn legal_params(max_n: u32, only: Option<FamilyKind>) -> Vec<FamilyParams> {
    let mut out = Vec::new();
    for family in FamilyKind::ALL {
        if only.is_some_and(|k| k != family) {
            continue;
        }
        for n in 0..=max_n.min(MAX_FAMILY_N) {
            for c in 0..=n {
                let max_m = if family == FamilyKind::I { 0 } else { n - c };
                for m in 0..=max_m {
                    out.push(FamilyParams { family, n, c, m });
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct FamilyInstance {
    /// `None` for hand-built pairs.
    pub params: Option<FamilyParams>,
    pub graph: Graph,
    /// Half-edge permutation; checked by [`verify_family`], not here.
    pub psi: Permutation,
}

impl FamilyInstance {
    pub fn from_parts(graph: Graph, psi: Permutation) -> Self {
        FamilyInstance {
            params: None,
            graph,
            psi,
        }
    }

    pub fn psi_automorphism(&self) -> Result<Automorphism> {
        Ok(Automorphism::new(&self.graph, self.psi.clone())?)
    }
}

fn instance(params: FamilyParams, raw: RawGraph, psi: Vec<usize>) -> FamilyInstance {
    let graph = Graph::validate(raw).expect("family encodings are valid graphs");
    let psi = Permutation::from_images(psi).expect("shift is a bijection");
    debug_assert!(graph.is_automorphism(&psi).unwrap());
    FamilyInstance {
        params: Some(params),
        graph,
        psi,
    }
}

pub fn build_family_i(n: u32, c: u32) -> std::result::Result<FamilyInstance, FamilyError> {
    let params = FamilyParams::new(FamilyKind::I, n, c, 0)?;
    let edges = 1usize << n;
    let half = 2 * edges;
    let classes = 1usize << c;
    let raw = RawGraph {
        half_edge_count: half,
        edges: (0..edges).map(|t| vec![t, t + edges]).collect(),
        vertices: (0..classes)
            .map(|j| (j..half).step_by(classes).collect())
            .collect(),
    };
    let psi = (0..half).map(|t| (t + 1) % half).collect();
    Ok(instance(params, raw, psi))
}

fn shift_ab(edges: usize) -> Vec<usize> {
    (0..2 * edges)
        .map(|h| {
            let (t, side) = (h / 2, h % 2);
            2 * ((t + 1) % edges) + side
        })
        .collect()
}

pub fn build_family_ii(n: u32, c: u32, m: u32) -> std::result::Result<FamilyInstance, FamilyError> {
    let params = FamilyParams::new(FamilyKind::II, n, c, m)?;
    let edges = 1usize << n;
    let a_classes = 1usize << c;
    let b_classes = 1usize << (c + m);
    let mut vertices: Vec<Vec<usize>> = (0..a_classes)
        .map(|j| (j..edges).step_by(a_classes).map(|t| 2 * t).collect())
        .collect();
    vertices.extend((0..b_classes).map(|k| (k..edges).step_by(b_classes).map(|t| 2 * t + 1).collect()));
    let raw = RawGraph {
        half_edge_count: 2 * edges,
        edges: (0..edges).map(|t| vec![2 * t, 2 * t + 1]).collect(),
        vertices,
    };
    Ok(instance(params, raw, shift_ab(edges)))
}

pub fn build_family_iii(n: u32, c: u32, m: u32) -> std::result::Result<FamilyInstance, FamilyError> {
    let params = FamilyParams::new(FamilyKind::III, n, c, m)?;
    let edges = 1usize << n;
    let classes = 1usize << (c + m);
    let offset = 1usize << c;
    let vertices = (0..classes)
        .map(|r| {
            let mut block: Vec<usize> = (0..edges)
                .filter(|t| t % classes == r)
                .map(|t| 2 * t)
                .collect();
            let b_class = (r + classes - offset % classes) % classes;
            block.extend((0..edges).filter(|t| t % classes == b_class).map(|t| 2 * t + 1));
            block
        })
        .collect();
    let raw = RawGraph {
        half_edge_count: 2 * edges,
        edges: (0..edges).map(|t| vec![2 * t, 2 * t + 1]).collect(),
        vertices,
    };
    Ok(instance(params, raw, shift_ab(edges)))
}

pub fn build_family(params: FamilyParams) -> std::result::Result<FamilyInstance, FamilyError> {
    match params.family {
        FamilyKind::I => {
            if params.m != 0 {
                return Err(FamilyError::ParamRange("family I takes no m".into()));
            }
            build_family_i(params.n, params.c)
        }
        FamilyKind::II => build_family_ii(params.n, params.c, params.m),
        FamilyKind::III => build_family_iii(params.n, params.c, params.m),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyCheck {
    pub is_automorphism: bool,
    pub edge_transitive: bool,
    pub edge_cycle_length: usize,
    pub power_of_two_cycles: bool,
    pub failures: Vec<String>,
}

impl FamilyCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn verify_family(inst: &FamilyInstance) -> FamilyCheck {
    let g = &inst.graph;
    let mut failures = Vec::new();
    let is_automorphism = g.is_automorphism(&inst.psi).unwrap_or(false);
    if !is_automorphism {
        failures.push(format!("psi {} is not an automorphism", inst.psi));
        return FamilyCheck {
            is_automorphism,
            edge_transitive: false,
            edge_cycle_length: 0,
            power_of_two_cycles: false,
            failures,
        };
    }
    let a = Automorphism::new_unchecked(inst.psi.clone());
    let induced = induced_actions(g, &a);
    let edge_cycles = induced.edge_perm.cycle_lengths();
    let edge_transitive = edge_cycles.len() <= 1;
    if !edge_transitive {
        failures.push(format!("<psi> has {} edge orbits", edge_cycles.len()));
    }
    let edge_cycle_length = edge_cycles.iter().copied().max().unwrap_or(0);
    let expected = inst
        .params
        .map(|p| p.edge_count())
        .unwrap_or_else(|| g.edge_count());
    if edge_cycle_length != expected || !expected.is_power_of_two() {
        failures.push(format!(
            "edge cycle length {edge_cycle_length}, expected a power of two equal to {expected}"
        ));
    }
    let power_of_two_cycles = [
        inst.psi.cycle_lengths(),
        edge_cycles,
        induced.vertex_perm.cycle_lengths(),
    ]
    .iter()
    .all(|lens| lens.iter().all(|l| l.is_power_of_two()));
    if !power_of_two_cycles {
        failures.push("some cycle length is not a power of two".into());
    }
    FamilyCheck {
        is_automorphism,
        edge_transitive,
        edge_cycle_length,
        power_of_two_cycles,
        failures,
    }
}

/// Both sides of the ratio identity for one automorphism and one edge orbit.
#[derive(Clone, Debug, Serialize)]
pub struct Eq1Record {
    pub orbit_len: usize,
    pub theta_k: Sign,
    pub theta_s: Sign,
    pub theta_k_contracted: Sign,
    /// Θ_S of the induced automorphism on the contracted graph, including
    /// the permutation of vertices that lost all their half-edges.
    pub theta_s_contracted: Sign,
    pub residual_sign: Sign,
    pub lhs: Sign,
    pub rhs: Sign,
    pub equal: bool,
}

/// Contracts the `φ`-orbit of `e` and compares `Θ_K(φ)/Θ_K(φ')` with
/// `Θ_S(φ)/Θ_S(φ')` (ratios in `{±1}` are products).
///
/// Vertices emptied by the contraction are isolated points of the contracted
/// space: they carry no edges and no cycles but still take part in the
/// vertex permutation, so their permutation sign enters `Θ_S(φ')`.
pub fn eq1_check(g: &Graph, phi: &Automorphism, e: EdgeId) -> Result<Eq1Record> {
    let oc = g.contract_edge_orbit(phi.perm(), e)?;
    let contracted = oc.graph();
    let phi_prime = Automorphism::new_unchecked(oc.phi.clone());
    let residual_sign = oc.residual_perm.sign();
    let tk = theta_k(g, phi);
    let ts = theta_s(g, phi);
    let tk2 = theta_k(contracted, &phi_prime);
    let ts2 = theta_s(contracted, &phi_prime) * residual_sign;
    let lhs = tk * tk2;
    let rhs = ts * ts2;
    Ok(Eq1Record {
        orbit_len: oc.orbit.len(),
        theta_k: tk,
        theta_s: ts,
        theta_k_contracted: tk2,
        theta_s_contracted: ts2,
        residual_sign,
        lhs,
        rhs,
        equal: lhs == rhs,
    })
}

/// Runs [`eq1_check`] for `φ = ψᵏ`, `k = 1..=2ⁿ`, and every edge.
pub fn eq1_sweep(inst: &FamilyInstance) -> Result<Vec<(u64, EdgeId, Eq1Record)>> {
    let psi = inst.psi_automorphism()?;
    let period = inst.graph.edge_count().max(1) as u64;
    let mut out = Vec::new();
    for k in 1..=period {
        let phi = psi.power(k);
        for e in 0..inst.graph.edge_count() {
            out.push((k, e, eq1_check(&inst.graph, &phi, e)?));
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ProofCase {
    pub sign_pi: Sign,
    pub det_sign_a: Sign,
    pub eps_product: Sign,
    pub sigma_ratio: Sign,
}

/// The four factors of the ratio identity on III(n, 0, 0) with arrows `a → b`.
pub fn proof_case_values(n: u32) -> Result<ProofCase> {
    if n == 0 {
        return Err(FamilyError::ParamRange("proof case needs n >= 1".into()).into());
    }
    let inst = build_family_iii(n, 0, 0)?;
    let g = &inst.graph;
    let psi = inst.psi_automorphism()?;
    // a_t = 2t is the smaller id of each edge, so the default arrows run a -> b
    let arrows = ArrowArrangement::from_tails(g, (0..g.edge_count()).map(|t| 2 * t).collect())?;
    debug_assert_eq!(arrows, default_arrows(g));
    let induced = induced_actions(g, &psi);
    debug_assert_eq!(cycle_basis(g, &arrows).matrix.cols(), g.edge_count());
    let action = induced_cycle_matrix(g, &arrows, &psi)?;
    let oc = g.contract_edge_orbit(psi.perm(), 0)?;
    let contracted_sigma = induced_actions(oc.graph(), &Automorphism::new_unchecked(oc.phi.clone()))
        .vertex_perm
        .sign()
        * oc.residual_perm.sign();
    Ok(ProofCase {
        sign_pi: induced.edge_perm.sign(),
        det_sign_a: unit_det_sign(&action),
        eps_product: Sign::product(epsilon_map(g, &arrows, &psi)),
        sigma_ratio: induced.vertex_perm.sign() * contracted_sigma,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::*;
    use crate::canon::is_isomorphic;

    fn orbit_classes(p: &Permutation) -> usize {
        p.cycles().len()
    }

    #[test]
    fn family_i_examples() {
        let inst = build_family_i(0, 0).unwrap();
        assert_eq!(inst.graph, loop_graph());
        assert_eq!(inst.psi, Permutation::from_images(vec![1, 0]).unwrap());

        let inst = build_family_i(1, 0).unwrap();
        assert_eq!(inst.graph.vertex_count(), 1);
        assert_eq!(inst.graph.edge_count(), 2);
        assert_eq!(inst.psi.cycle_lengths(), vec![4]);
        assert!(verify_family(&inst).passed());

        let inst = build_family_i(2, 1).unwrap();
        assert_eq!(inst.graph.vertex_count(), 2);
        assert!((0..2).all(|v| inst.graph.loop_count_at(v) == 2));
        assert!(verify_family(&inst).passed());
    }

    #[test]
    fn family_ii_examples() {
        let inst = build_family_ii(1, 0, 0).unwrap();
        assert_eq!(inst.graph, double_edge());
        assert_eq!(induced_actions(&inst.graph, &inst.psi_automorphism().unwrap()).edge_perm.cycle_lengths(), vec![2]);

        let inst = build_family_ii(1, 0, 1).unwrap();
        assert_eq!(inst.graph.vertex_count(), 3);
        assert!(is_isomorphic(&inst.graph, &path(2)).unwrap());
        assert!(verify_family(&inst).passed());

        let inst = build_family_ii(2, 1, 1).unwrap();
        assert_eq!((inst.graph.vertex_count(), inst.graph.edge_count()), (6, 4));
        assert!(!inst.graph.has_loop());
        assert!(verify_family(&inst).passed());
    }

    #[test]
    fn family_iii_examples() {
        let inst = build_family_iii(1, 0, 0).unwrap();
        assert_eq!(inst.graph, bouquet(2));
        assert_eq!(inst.psi.cycle_lengths(), vec![2, 2]);
        let edge_perm = induced_actions(&inst.graph, &inst.psi_automorphism().unwrap()).edge_perm;
        assert!(edge_perm.power(2).is_identity());

        let inst = build_family_iii(2, 0, 2).unwrap();
        assert!(is_isomorphic(&inst.graph, &cycle(4)).unwrap());
        assert_eq!(induced_actions(&inst.graph, &inst.psi_automorphism().unwrap()).vertex_perm.cycle_lengths(), vec![4]);

        let inst = build_family_iii(1, 1, 0).unwrap();
        assert_eq!(inst.graph.vertex_count(), 2);
        assert!((0..2).all(|v| inst.graph.loop_count_at(v) == 1));
    }

    #[test]
    fn parameter_ranges() {
        assert!(build_family_i(1, 2).is_err());
        assert!(build_family_ii(2, 2, 1).is_err());
        assert!(build_family_iii(1, 0, 2).is_err());
        assert!(build_family(FamilyParams { family: FamilyKind::I, n: 2, c: 0, m: 1 }).is_err());
        assert!(build_family_i(MAX_FAMILY_N + 1, 0).is_err());
        assert!("iv".parse::<FamilyKind>().is_err());
        assert_eq!("ii".parse::<FamilyKind>().unwrap(), FamilyKind::II);
    }

    #[test]
    fn every_constructor_output_verifies() {
        for p in legal_params(4, None) {
            let inst = build_family(p).unwrap();
            let check = verify_family(&inst);
            assert!(check.passed(), "{p}: {:?}", check.failures);
            assert_eq!(check.edge_cycle_length, 1 << p.n);
            match p.family {
                FamilyKind::I => assert_eq!(orbit_classes(&inst.psi), 1),
                FamilyKind::III if p.m == 0 => {
                    assert_eq!(orbit_classes(&inst.psi), 2);
                    assert!(inst.graph.has_loop());
                }
                _ => assert!(!inst.graph.has_loop() || p.family == FamilyKind::III),
            }
            if p.family == FamilyKind::III && p.m > 0 {
                assert!(!inst.graph.has_loop());
            }
            if p.family == FamilyKind::II {
                assert!(!inst.graph.has_loop());
            }
        }
    }

    #[test]
    fn non_transitive_pair_fails() {
        let inst = FamilyInstance::from_parts(double_edge(), Permutation::identity(4));
        let check = verify_family(&inst);
        assert!(!check.edge_transitive);
        assert!(!check.passed());

        let bad = FamilyInstance::from_parts(triangle(), Permutation::from_images(vec![1, 0, 2, 3, 4, 5]).unwrap());
        assert!(!verify_family(&bad).is_automorphism);
    }

    #[test]
    fn eq1_examples() {
        let inst = build_family_iii(1, 0, 0).unwrap();
        let psi = inst.psi_automorphism().unwrap();
        for e in 0..2 {
            assert!(eq1_check(&inst.graph, &psi, e).unwrap().equal);
        }
        let t = triangle();
        for e in 0..3 {
            let rec = eq1_check(&t, &Automorphism::identity(&t), e).unwrap();
            assert!(rec.equal);
            assert_eq!((rec.lhs, rec.rhs), (Sign::Plus, Sign::Plus));
        }
        let rho = Automorphism::new(&t, Permutation::from_images(vec![2, 3, 4, 5, 0, 1]).unwrap()).unwrap();
        let rec = eq1_check(&t, &rho, 0).unwrap();
        assert_eq!(rec.orbit_len, 3);
        assert!(rec.equal);
    }

    #[test]
    fn eq1_needs_residual_vertices_for_split_families() {
        // I(1,1): two one-loop vertices swapped by psi. Both vertices vanish.
        let inst = build_family_i(1, 1).unwrap();
        let psi = inst.psi_automorphism().unwrap();
        let rec = eq1_check(&inst.graph, &psi, 0).unwrap();
        assert_eq!(rec.residual_sign, Sign::Minus);
        assert_ne!(rec.theta_k, rec.theta_s);
        assert!(rec.equal);
    }

    #[test]
    fn proof_cases() {
        for n in 1..=4 {
            let case = proof_case_values(n).unwrap();
            assert_eq!(
                case,
                ProofCase {
                    sign_pi: Sign::Minus,
                    det_sign_a: Sign::Minus,
                    eps_product: Sign::Plus,
                    sigma_ratio: Sign::Plus
                }
            );
        }
        assert!(proof_case_values(0).is_err());
    }
}
