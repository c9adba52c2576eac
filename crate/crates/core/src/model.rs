//! Problem definition and the reduction from physical parameters
//! (V₁..V₄, α, M, D, ℓ) to the dimensionless bundle used by every solver.
//!
//! Units are ħ = 1 throughout. With s = e^{−2αr} the Pekeris-form radial
//! equation becomes
//!
//! ```text
//! R'' + R'/s + [−ε²/s² − γ(γ−1)/(s(1−s)²) − A/(s(1−s)) − B(1+s)/(s²(1−s))] R = 0
//! ```
//!
//! with ε² = M(V₄−E)/(2α²), γ(γ−1) = 2MV₁ + N_D^ℓ, A = MV₂/α, B = MV₃/(2α²).

use crate::error::{Error, Result};

/// Screening parameter used for the α → 0 limits (Coulomb, Mie, Kratzer-Fues).
pub const DEFAULT_SMALL_ALPHA: f64 = 1e-8;

/// V(r) = V₁/r² + V₂e^{−αr}/r + V₃coth(αr) + V₄.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialSpec {
    pub v1: f64,
    pub v2: f64,
    pub v3: f64,
    pub v4: f64,
    pub alpha: f64,
}

impl PotentialSpec {
    pub fn new(v1: f64, v2: f64, v3: f64, v4: f64, alpha: f64) -> Result<Self> {
        let pot = Self {
            v1,
            v2,
            v3,
            v4,
            alpha,
        };
        pot.validate()?;
        Ok(pot)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, value) in [
            ("V1", self.v1),
            ("V2", self.v2),
            ("V3", self.v3),
            ("V4", self.v4),
            ("alpha", self.alpha),
        ] {
            if !value.is_finite() {
                return Err(Error::InvalidParams(format!("{name} must be finite, got {value}")));
            }
        }
        if self.alpha <= 0.0 {
            return Err(Error::InvalidParams(format!(
                "alpha must be > 0, got {}",
                self.alpha
            )));
        }
        Ok(())
    }

    /// Limit of V(r) as r → ∞ (coth → 1): the continuum threshold.
    pub fn asymptote(&self) -> f64 {
        self.v3 + self.v4
    }

    pub fn with_alpha(self, alpha: f64) -> Self {
        Self { alpha, ..self }
    }
}

/// Particle mass, spatial dimension and orbital quantum number.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialProblem {
    pub mass: f64,
    pub dim: u32,
    pub ell: u32,
}

impl RadialProblem {
    pub fn new(mass: f64, dim: u32, ell: u32) -> Result<Self> {
        if !(mass.is_finite() && mass > 0.0) {
            return Err(Error::InvalidParams(format!("mass must be > 0, got {mass}")));
        }
        if dim < 1 {
            return Err(Error::InvalidParams("dim must be >= 1".into()));
        }
        Ok(Self { mass, dim, ell })
    }

    pub fn with_ell(self, ell: u32) -> Self {
        Self { ell, ..self }
    }

    pub fn with_dim(self, dim: u32) -> Self {
        Self { dim, ..self }
    }

    /// D + 2ℓ − 2. Every radial quantity depends on (D, ℓ) only through this.
    pub fn shifted_index(&self) -> i64 {
        i64::from(self.dim) + 2 * i64::from(self.ell) - 2
    }

    pub fn centrifugal_constant(&self) -> f64 {
        centrifugal_constant(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuantumNumbers {
    pub n: u32,
    pub ell: u32,
}

impl QuantumNumbers {
    pub fn new(n: u32, ell: u32) -> Self {
        Self { n, ell }
    }
}

/// Dimensionless parameters of the reduced radial equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedParams {
    /// N_D^ℓ = (D+2ℓ−1)(D+2ℓ−3)/4.
    pub n_d_ell: f64,
    /// Positive root of γ(γ−1) = 2MV₁ + N_D^ℓ.
    pub gamma: f64,
    /// A = MV₂/α.
    pub a_coef: f64,
    /// B = MV₃/(2α²).
    pub b_coef: f64,
}

impl ReducedParams {
    /// β = 2c + 2γ + 1.
    pub fn beta(&self, c: f64) -> f64 {
        2.0 * c + 2.0 * self.gamma + 1.0
    }

    /// δ = 2c + 1.
    pub fn delta(&self, c: f64) -> f64 {
        2.0 * c + 1.0
    }

    /// η = γ² + 2cγ + A + 2B.
    pub fn eta(&self, c: f64) -> f64 {
        self.gamma * self.gamma + 2.0 * c * self.gamma + self.a_coef + 2.0 * self.b_coef
    }

    /// A + 2B, the combination that controls binding.
    pub fn binding(&self) -> f64 {
        self.a_coef + 2.0 * self.b_coef
    }

    /// ε_n² = [(γ+n)⁴ + 2(γ+n)²A + (A+2B)²] / (4(γ+n)²).
    pub fn epsilon_sq(&self, n: u32) -> f64 {
        let x = self.gamma + f64::from(n);
        let x2 = x * x;
        let k = self.binding();
        (x2 * x2 + 2.0 * x2 * self.a_coef + k * k) / (4.0 * x2)
    }
}

/// (D+2ℓ−1)(D+2ℓ−3)/4, evaluated in integers before the single division.
pub fn centrifugal_constant(problem: &RadialProblem) -> f64 {
    let m = problem.shifted_index();
    // (m+1)(m−1) = m² − 1
    ((m + 1) * (m - 1)) as f64 / 4.0
}

/// γ = [1 + sqrt(8MV₁ + (D+2ℓ−2)²)]/2.
pub fn gamma_root(mass: f64, v1: f64, shifted_index: i64) -> Result<f64> {
    let m = shifted_index as f64;
    let discriminant = 8.0 * mass * v1 + m * m;
    if discriminant < 0.0 {
        return Err(Error::FallToCenter { discriminant });
    }
    Ok(0.5 * (1.0 + discriminant.sqrt()))
}

pub fn reduce(pot: &PotentialSpec, problem: &RadialProblem) -> Result<ReducedParams> {
    pot.validate()?;
    let mass = problem.mass;
    Ok(ReducedParams {
        n_d_ell: centrifugal_constant(problem),
        gamma: gamma_root(mass, pot.v1, problem.shifted_index())?,
        a_coef: mass * pot.v2 / pot.alpha,
        b_coef: mass * pot.v3 / (2.0 * pot.alpha * pot.alpha),
    })
}

/// c_n = −[(γ+n)² + A + 2B] / (2(γ+n)); the level is bound iff c_n > 0.
pub fn decay_exponent(reduced: &ReducedParams, n: u32) -> Result<f64> {
    let c = raw_decay_exponent(reduced, n);
    if c > 0.0 {
        Ok(c)
    } else {
        Err(Error::NotBound { n, c })
    }
}

/// c_n without the sign check.
pub(crate) fn raw_decay_exponent(reduced: &ReducedParams, n: u32) -> f64 {
    let x = reduced.gamma + f64::from(n);
    -(x * x + reduced.binding()) / (2.0 * x)
}

/// E = V₃ + V₄ − 2α²c²/M, equivalently V₄ − 2α²(c² − B)/M.
pub fn energy_from_decay(pot: &PotentialSpec, mass: f64, c: f64) -> f64 {
    pot.asymptote() - 2.0 * pot.alpha * pot.alpha * c * c / mass
}

/// Inverse of [`energy_from_decay`].
pub fn decay_from_energy(pot: &PotentialSpec, mass: f64, energy: f64) -> f64 {
    (mass * (pot.asymptote() - energy) / (2.0 * pot.alpha * pot.alpha)).sqrt()
}
