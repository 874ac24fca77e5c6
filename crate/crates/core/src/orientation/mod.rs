//! Orientation homomorphisms and orientability.
//!
//! * [`theta_k`] computes `sign(π_φ) · sign(det A_φ)`, with `A_φ` the action on the
//!   cycle space computed exactly in a fundamental cycle basis.
//! * [`theta_s`] computes `sign(σ_φ) · ∏ ε_φ(e)` for an arrow arrangement.
//! * [`theta_parity`] computes `sign(σ_φ)`.
//!
//! All three implement [`OrientationHom`] and live in a [`ThetaRegistry`].

mod arrows;
mod cycles;
mod orbits;
mod theta;

pub use arrows::{default_arrows, epsilon_map, ArrowArrangement};
pub use cycles::{
    cycle_basis, cycle_basis_with, induced_cycle_matrix, induced_cycle_matrix_with,
    signed_edge_matrix, CycleBasis, SpanningForest,
};
pub use orbits::{
    or_orbits_bruteforce, or_orbits_bruteforce_with, orientability, orientability_over,
    orientability_with, EnumerationPair, OrbitSummary, OrientationReport, ThetaValue, Verdict,
    MAX_BRUTEFORCE_VERTICES,
};
pub use theta::{
    kontsevich_factors, theta_k, theta_k_with, theta_parity, theta_s, theta_s_with, FlipAt,
    Kontsevich, OrientationHom, Shoikhet, ThetaKind, ThetaRegistry, VertexParity,
};
