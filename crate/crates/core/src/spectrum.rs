//! Closed-form energy spectrum of the Pekeris-form mixed potential.

use crate::error::{Error, Result};
use crate::model::{self, PotentialSpec, QuantumNumbers, RadialProblem, ReducedParams};

/// Upper bound on the number of levels enumerated per ℓ.
pub const MAX_LEVELS: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundState {
    pub dim: u32,
    pub n: u32,
    pub ell: u32,
    pub energy: f64,
    /// Decay exponent c of s = e^{−2αr}.
    pub c: f64,
    pub gamma: f64,
    /// Set when the level lies above E = 0 (possible for V₄ > 0). It is still
    /// below the continuum threshold V₃ + V₄.
    pub positive_energy: bool,
}

impl BoundState {
    pub fn quantum_numbers(&self) -> QuantumNumbers {
        QuantumNumbers::new(self.n, self.ell)
    }
}

/// (γ+n)² + A + 2B < 0, i.e. c_n > 0.
pub fn admissible_reduced(reduced: &ReducedParams, n: u32) -> bool {
    let x = reduced.gamma + f64::from(n);
    x * x + reduced.binding() < 0.0
}

pub fn admissible(pot: &PotentialSpec, problem: &RadialProblem, n: u32) -> Result<bool> {
    let reduced = model::reduce(pot, problem)?;
    Ok(admissible_reduced(&reduced, n))
}

/// E_{nℓ} = V₄ − (1/2M)[α²(γ+n)² + 2MV₂α + M²(V₂+V₃/α)²/(γ+n)²].
///
/// Evaluated as V₃ + V₄ − 2α²c_n²/M, the same value without the cancellation
/// between the expanded terms for weakly bound levels.
pub fn energy(pot: &PotentialSpec, problem: &RadialProblem, q: QuantumNumbers) -> Result<f64> {
    let problem = problem.with_ell(q.ell);
    let reduced = model::reduce(pot, &problem)?;
    if !admissible_reduced(&reduced, q.n) {
        return Err(Error::NotBound {
            n: q.n,
            c: model::raw_decay_exponent(&reduced, q.n),
        });
    }
    Ok(closed_form_energy(pot, problem.mass, &reduced, q.n))
}

fn closed_form_energy(pot: &PotentialSpec, mass: f64, reduced: &ReducedParams, n: u32) -> f64 {
    model::energy_from_decay(pot, mass, model::raw_decay_exponent(reduced, n))
}

/// The expanded form V₄ − (1/2M)[α²x² + 2MV₂α + M²(V₂+V₃/α)²/x²], x = γ+n,
/// without admissibility checks.
pub fn energy_expanded(pot: &PotentialSpec, mass: f64, gamma: f64, n: u32) -> f64 {
    let x = gamma + f64::from(n);
    let a = pot.alpha;
    let tail = pot.v2 + pot.v3 / a;
    pot.v4 - (a * a * x * x + 2.0 * mass * pot.v2 * a + mass * mass * tail * tail / (x * x)) / (2.0 * mass)
}

pub fn bound_state(pot: &PotentialSpec, problem: &RadialProblem, n: u32) -> Result<BoundState> {
    let reduced = model::reduce(pot, problem)?;
    state_from_reduced(pot, problem, &reduced, n)
}

fn state_from_reduced(
    pot: &PotentialSpec,
    problem: &RadialProblem,
    reduced: &ReducedParams,
    n: u32,
) -> Result<BoundState> {
    let c = model::decay_exponent(reduced, n)?;
    let energy = closed_form_energy(pot, problem.mass, reduced, n);
    Ok(BoundState {
        dim: problem.dim,
        n,
        ell: problem.ell,
        energy,
        c,
        gamma: reduced.gamma,
        positive_energy: energy > 0.0,
    })
}

/// Number of admissible levels for the given reduced parameters.
pub fn level_count(reduced: &ReducedParams) -> Result<u64> {
    let k = reduced.binding();
    if k >= 0.0 {
        return Ok(0);
    }
    let bound = (-k).sqrt() - reduced.gamma;
    if bound <= 0.0 {
        return Ok(0);
    }
    if bound > MAX_LEVELS as f64 {
        return Err(Error::TooManyLevels { cap: MAX_LEVELS });
    }
    // n < sqrt(−(A+2B)) − γ; fix up the float floor against the exact test
    let mut count = bound.ceil() as u64;
    while count > 0 && !admissible_reduced(reduced, (count - 1) as u32) {
        count -= 1;
    }
    while admissible_reduced(reduced, count as u32) {
        count += 1;
    }
    Ok(count)
}

/// All bound states for ℓ = 0..=ell_max, sorted by (ℓ, n). `problem.ell` is ignored.
pub fn enumerate_bound_states(
    pot: &PotentialSpec,
    problem: &RadialProblem,
    ell_max: u32,
) -> Result<Vec<BoundState>> {
    let mut states = Vec::new();
    for ell in 0..=ell_max {
        let problem = problem.with_ell(ell);
        let reduced = model::reduce(pot, &problem)?;
        for n in 0..level_count(&reduced)? {
            states.push(state_from_reduced(pot, &problem, &reduced, n as u32)?);
        }
    }
    Ok(states)
}
