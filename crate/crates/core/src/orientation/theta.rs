//! Orientation homomorphisms `Θ: Aut(Γ) → {±1}` behind a common trait, and a
//! name-keyed registry for selecting them at runtime.

use std::fmt;
use std::str::FromStr;

use super::arrows::{epsilon_map, ArrowArrangement};
use super::cycles::{cycle_basis_with, induced_cycle_matrix_with, SpanningForest};
use crate::aut::{induced_actions, Automorphism};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::unit_det_sign;
use crate::perm::Permutation;
use crate::sign::Sign;

/// Shoikhet: `sign(σ_φ) · ∏_e ε_φ(e)` for a given arrow arrangement.
pub fn theta_s_with(g: &Graph, arrows: &ArrowArrangement, a: &Automorphism) -> Sign {
    let sigma = induced_actions(g, a).vertex_perm;
    sigma.sign() * Sign::product(epsilon_map(g, arrows, a))
}

pub fn theta_s(g: &Graph, a: &Automorphism) -> Sign {
    theta_s_with(g, &ArrowArrangement::default_for(g), a)
}

/// Kontsevich: `sign(π_φ) · sign(det A_φ)` computed in the fundamental
/// cycle basis of `forest` with arrows `arrows`.
pub fn theta_k_with(
    g: &Graph,
    arrows: &ArrowArrangement,
    forest: &SpanningForest,
    a: &Automorphism,
) -> Sign {
    let (pi_sign, det_sign) = kontsevich_factors(g, arrows, forest, a);
    pi_sign * det_sign
}

pub fn theta_k(g: &Graph, a: &Automorphism) -> Sign {
    theta_k_with(g, &ArrowArrangement::default_for(g), &SpanningForest::default_for(g), a)
}

/// `(sign(π_φ), sign(det A_φ))`.
pub fn kontsevich_factors(
    g: &Graph,
    arrows: &ArrowArrangement,
    forest: &SpanningForest,
    a: &Automorphism,
) -> (Sign, Sign) {
    let pi = induced_actions(g, a).edge_perm;
    let basis = cycle_basis_with(g, arrows, forest);
    let action = induced_cycle_matrix_with(g, arrows, &basis, a)
        .expect("fundamental cycles form a basis of the cycle space");
    (pi.sign(), unit_det_sign(&action))
}

/// Parity of the induced vertex permutation.
pub fn theta_parity(g: &Graph, a: &Automorphism) -> Sign {
    induced_actions(g, a).vertex_perm.sign()
}

/// An orientation homomorphism. Implementations evaluate to `±1`; the
/// homomorphism law is checked by the test suite, not assumed.
pub trait OrientationHom: Send + Sync {
    /// Registry key.
    fn name(&self) -> &str;

    fn eval(&self, g: &Graph, a: &Automorphism) -> Sign;
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Kontsevich {
    /// Test hook: negate `sign(π_φ)`.
    pub flip_edge_sign: bool,
    /// Test hook: negate `sign(det A_φ)`.
    pub flip_det_sign: bool,
}

impl OrientationHom for Kontsevich {
    fn name(&self) -> &str {
        match (self.flip_edge_sign, self.flip_det_sign) {
            (false, false) => "k",
            (true, false) => "k-flip-pi",
            (false, true) => "k-flip-det",
            (true, true) => "k-flip-pi-det",
        }
    }

    fn eval(&self, g: &Graph, a: &Automorphism) -> Sign {
        let (mut pi, mut det) = kontsevich_factors(
            g,
            &ArrowArrangement::default_for(g),
            &SpanningForest::default_for(g),
            a,
        );
        if self.flip_edge_sign {
            pi = -pi;
        }
        if self.flip_det_sign {
            det = -det;
        }
        pi * det
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Shoikhet {
    /// Test hook: use `ε = +1` for disagreeing arrows and `-1` for agreeing ones.
    pub flip_epsilon: bool,
}

impl OrientationHom for Shoikhet {
    fn name(&self) -> &str {
        if self.flip_epsilon {
            "s-flip-eps"
        } else {
            "s"
        }
    }

    fn eval(&self, g: &Graph, a: &Automorphism) -> Sign {
        if !self.flip_epsilon {
            return theta_s(g, a);
        }
        let sigma = induced_actions(g, a).vertex_perm;
        let eps = epsilon_map(g, &ArrowArrangement::default_for(g), a);
        sigma.sign() * Sign::product(eps.into_iter().map(|s| -s))
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct VertexParity;

impl OrientationHom for VertexParity {
    fn name(&self) -> &str {
        "parity"
    }

    fn eval(&self, g: &Graph, a: &Automorphism) -> Sign {
        theta_parity(g, a)
    }
}

/// Test hook: `inner` with its value negated on one chosen half-edge permutation.
pub struct FlipAt {
    pub inner: Box<dyn OrientationHom>,
    pub target: Permutation,
    name: String,
}

impl FlipAt {
    pub fn new(inner: Box<dyn OrientationHom>, target: Permutation) -> Self {
        let name = format!("{}-flip-at-{}", inner.name(), target);
        FlipAt { inner, target, name }
    }
}

impl OrientationHom for FlipAt {
    fn name(&self) -> &str {
        &self.name
    }

    fn eval(&self, g: &Graph, a: &Automorphism) -> Sign {
        let value = self.inner.eval(g, a);
        if *a.perm() == self.target {
            -value
        } else {
            value
        }
    }
}

/// The three selectors exposed on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ThetaKind {
    Kontsevich,
    Shoikhet,
    VertexParity,
}

impl ThetaKind {
    pub const ALL: [ThetaKind; 3] = [ThetaKind::Kontsevich, ThetaKind::Shoikhet, ThetaKind::VertexParity];

    pub fn key(self) -> &'static str {
        match self {
            ThetaKind::Kontsevich => "k",
            ThetaKind::Shoikhet => "s",
            ThetaKind::VertexParity => "parity",
        }
    }

    pub fn hom(self) -> Box<dyn OrientationHom> {
        match self {
            ThetaKind::Kontsevich => Box::new(Kontsevich::default()),
            ThetaKind::Shoikhet => Box::new(Shoikhet::default()),
            ThetaKind::VertexParity => Box::new(VertexParity),
        }
    }
}

impl fmt::Display for ThetaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for ThetaKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "k" | "kontsevich" => Ok(ThetaKind::Kontsevich),
            "s" | "shoikhet" => Ok(ThetaKind::Shoikhet),
            "parity" | "vertex-parity" => Ok(ThetaKind::VertexParity),
            _ => Err(Error::UnknownTheta(s.to_string())),
        }
    }
}

/// Orientation homomorphisms registered by name, in registration order.
#[derive(Default)]
pub struct ThetaRegistry {
    entries: Vec<Box<dyn OrientationHom>>,
}

impl ThetaRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// `k`, `s` and `parity`.
    pub fn with_defaults() -> Self {
        let mut reg = Self::new();
        for kind in ThetaKind::ALL {
            reg.register(kind.hom());
        }
        reg
    }

    /// The defaults plus the sign-flipped variants used for mutation testing.
    pub fn with_mutants() -> Self {
        let mut reg = Self::with_defaults();
        reg.register(Box::new(Kontsevich {
            flip_edge_sign: true,
            flip_det_sign: false,
        }));
        reg.register(Box::new(Kontsevich {
            flip_edge_sign: false,
            flip_det_sign: true,
        }));
        reg.register(Box::new(Shoikhet { flip_epsilon: true }));
        reg
    }

    /// Registers `hom`, replacing any entry with the same name.
    pub fn register(&mut self, hom: Box<dyn OrientationHom>) {
        if let Some(slot) = self.entries.iter_mut().find(|h| h.name() == hom.name()) {
            *slot = hom;
        } else {
            self.entries.push(hom);
        }
    }

    pub fn get(&self, name: &str) -> Option<&dyn OrientationHom> {
        let key = name
            .parse::<ThetaKind>()
            .map(|k| k.key().to_string())
            .unwrap_or_else(|_| name.to_string());
        self.entries
            .iter()
            .find(|h| h.name() == key)
            .map(|h| h.as_ref())
    }

    pub fn require(&self, name: &str) -> Result<&dyn OrientationHom> {
        self.get(name).ok_or_else(|| Error::UnknownTheta(name.to_string()))
    }

    pub fn names(&self) -> Vec<&str> {
        self.entries.iter().map(|h| h.name()).collect()
    }
}
