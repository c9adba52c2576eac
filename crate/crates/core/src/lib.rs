//! Bound states of the D-dimensional radial Schrödinger equation for the mixed
//! potential
//!
//! ```text
//! V(r) = V₁/r² + V₂ e^{−αr}/r + V₃ coth(αr) + V₄
//! ```
//!
//! in the Pekeris approximation. The closed-form spectrum lives in
//! [`spectrum`], eigenfunctions in [`wavefunction`]. [`aim`] recovers the same
//! levels from the asymptotic iteration method without the closed form, and
//! [`oracle`] solves the radial equation by finite differences for either the
//! approximated or the exact potential.

pub mod aim;
pub mod error;
pub mod model;
pub mod oracle;
pub mod presets;
pub mod spectrum;
pub mod wavefunction;

pub use aim::{AimConfig, RationalFn};
pub use error::{Error, Result};
pub use model::{PotentialSpec, QuantumNumbers, RadialProblem, ReducedParams, DEFAULT_SMALL_ALPHA};
pub use oracle::{GridSpec, OracleResult, PekerisErrorRow, PotentialForm};
pub use presets::{PresetCase, PresetKind};
pub use spectrum::BoundState;
pub use wavefunction::RadialWavefunction;
