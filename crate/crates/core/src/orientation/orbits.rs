//! Orientability verdicts: the fast fixed-vertex witness criterion and the
//! brute-force orbit computation on pairs (enumeration, sign).

use std::collections::HashMap;

use serde::Serialize;

use super::theta::OrientationHom;
use crate::aut::{enumerate_automorphisms_with, induced_actions, Automorphism};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;
use crate::perm::Permutation;
use crate::sign::Sign;

pub const MAX_BRUTEFORCE_VERTICES: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Orientable,
    NonOrientable,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Orientable => "ORIENTABLE",
            Verdict::NonOrientable => "NON_ORIENTABLE",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ThetaValue {
    pub automorphism: Permutation,
    pub theta: Sign,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrientationReport {
    pub theta: String,
    pub verdict: Verdict,
    /// An automorphism fixing every vertex with `Θ = -1`, when non-orientable.
    pub witness: Option<Permutation>,
    pub orbit_count: Option<usize>,
    pub per_automorphism_theta: Vec<ThetaValue>,
}

/// Verdict over an already enumerated group. Non-orientable iff some `φ` has
/// `σ_φ = id` and `Θ(φ) = -1`: such `φ` fixes every enumeration `τ` and so
/// identifies `(τ, +1)` with `(τ, -1)`.
pub fn orientability_over(
    g: &Graph,
    theta: &dyn OrientationHom,
    group: &[Automorphism],
) -> OrientationReport {
    let mut witness = None;
    let per_automorphism_theta: Vec<ThetaValue> = group
        .iter()
        .map(|a| {
            let value = theta.eval(g, a);
            if witness.is_none()
                && value == Sign::Minus
                && induced_actions(g, a).vertex_perm.is_identity()
            {
                witness = Some(a.perm().clone());
            }
            ThetaValue {
                automorphism: a.perm().clone(),
                theta: value,
            }
        })
        .collect();
    OrientationReport {
        theta: theta.name().to_string(),
        verdict: if witness.is_some() {
            Verdict::NonOrientable
        } else {
            Verdict::Orientable
        },
        witness,
        orbit_count: None,
        per_automorphism_theta,
    }
}

pub fn orientability(g: &Graph, theta: &dyn OrientationHom) -> Result<OrientationReport> {
    orientability_with(g, theta, &Limits::from_env())
}

pub fn orientability_with(
    g: &Graph,
    theta: &dyn OrientationHom,
    limits: &Limits,
) -> Result<OrientationReport> {
    let group = enumerate_automorphisms_with(g, limits)?;
    Ok(orientability_over(g, theta, &group))
}

/// An enumeration `τ` of the vertices by `1..=|V|` together with a sign.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct EnumerationPair {
    /// `tau[v]` is the number given to vertex `v`.
    pub tau: Vec<usize>,
    pub eps: Sign,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitSummary {
    pub orbit_count: usize,
    /// True iff `(τ, ε)` and `(τ, -ε)` never share an orbit.
    pub z2_free: bool,
    pub orbits: Vec<Vec<EnumerationPair>>,
}

fn all_enumerations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i + 1);
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

pub fn or_orbits_bruteforce(g: &Graph, theta: &dyn OrientationHom) -> Result<OrbitSummary> {
    or_orbits_bruteforce_with(g, theta, &Limits::from_env())
}

/// Orbits of `Aut(Γ)` on all pairs `(τ, ε)` under
/// `φ(τ, ε) = (φ(τ), Θ(φ)·ε)`, where `φ(τ)` gives `σ_φ(v)` the number `τ(v)`.
pub fn or_orbits_bruteforce_with(
    g: &Graph,
    theta: &dyn OrientationHom,
    limits: &Limits,
) -> Result<OrbitSummary> {
    let nv = g.vertex_count();
    if nv > MAX_BRUTEFORCE_VERTICES {
        return Err(Error::TooManyVertices {
            vertices: nv,
            limit: MAX_BRUTEFORCE_VERTICES,
        });
    }
    let group = enumerate_automorphisms_with(g, limits)?;
    let taus = all_enumerations(nv);
    let index: HashMap<&[usize], usize> = taus.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
    // node 2i is (tau_i, +1), node 2i+1 is (tau_i, -1)
    let mut uf: Vec<usize> = (0..2 * taus.len()).collect();
    fn find(uf: &mut [usize], mut x: usize) -> usize {
        while uf[x] != x {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        x
    }
    let mut image = vec![0; nv];
    for a in &group {
        let sigma = induced_actions(g, a).vertex_perm;
        let flip = usize::from(theta.eval(g, a) == Sign::Minus);
        for (i, tau) in taus.iter().enumerate() {
            for v in 0..nv {
                image[sigma.apply(v)] = tau[v];
            }
            let j = index[image.as_slice()];
            for eps in 0..2 {
                let (x, y) = (find(&mut uf, 2 * i + eps), find(&mut uf, 2 * j + (eps ^ flip)));
                if x != y {
                    uf[x.max(y)] = x.min(y);
                }
            }
        }
    }
    let mut z2_free = true;
    let mut orbit_of_root: HashMap<usize, usize> = HashMap::new();
    let mut orbits: Vec<Vec<EnumerationPair>> = Vec::new();
    for (i, tau) in taus.iter().enumerate() {
        if find(&mut uf, 2 * i) == find(&mut uf, 2 * i + 1) {
            z2_free = false;
        }
        for (eps, sign) in [(0, Sign::Plus), (1, Sign::Minus)] {
            let root = find(&mut uf, 2 * i + eps);
            let slot = *orbit_of_root.entry(root).or_insert_with(|| {
                orbits.push(Vec::new());
                orbits.len() - 1
            });
            orbits[slot].push(EnumerationPair {
                tau: tau.clone(),
                eps: sign,
            });
        }
    }
    Ok(OrbitSummary {
        orbit_count: orbits.len(),
        z2_free,
        orbits,
    })
}
