//! Normalized radial eigenfunctions
//!
//! ```text
//! R_{nℓ}(r) = K_{nℓ} s^c (1−s)^γ ₂F₁(−n, 2(c+γ)+n; 1+2c; s),   s = e^{−2αr}
//! ```
//!
//! The (−1)^n Γ(n+2c+1)/Γ(2c+1) prefactor of the generated polynomial is
//! absorbed into K, so the stored polynomial is the bare ₂F₁ with constant
//! term 1.

mod hypergeometric;
mod quadrature;

pub use hypergeometric::{hypergeometric_2f1_terminating, terminating_coefficients};
pub use quadrature::{integrate_half_line, GaussLegendre};

use hypergeometric::{horner, horner_with_derivatives};
use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};
use crate::model::{PotentialSpec, RadialProblem, ReducedParams};
use crate::spectrum::{self, BoundState};

/// Convergence target for the normalization quadrature.
pub const QUADRATURE_REL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct RadialWavefunction {
    pub state: BoundState,
    pub alpha: f64,
    /// Coefficients of ₂F₁(−n, 2(c+γ)+n; 1+2c; s) in ascending powers of s.
    pub coefficients: Vec<f64>,
    pub k_norm: f64,
}

impl RadialWavefunction {
    pub fn new(pot: &PotentialSpec, problem: &RadialProblem, n: u32) -> Result<Self> {
        let state = spectrum::bound_state(pot, problem, n)?;
        Self::from_state(state, pot.alpha)
    }

    pub fn from_state(state: BoundState, alpha: f64) -> Result<Self> {
        let (b, c) = series_parameters(&state);
        let coefficients = terminating_coefficients(state.n, b, c)?;
        let k_norm = normalization_constant(&state, alpha)?;
        Ok(Self {
            state,
            alpha,
            coefficients,
            k_norm,
        })
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// R(s) on s ∈ [0, 1].
    pub fn eval_s(&self, s: f64) -> f64 {
        if s <= 0.0 || s >= 1.0 {
            return 0.0;
        }
        let log_envelope = self.state.c * s.ln() + self.state.gamma * (-s).ln_1p();
        self.k_norm * log_envelope.exp() * horner(&self.coefficients, s)
    }

    /// R_{nℓ}(r). Vanishes at both ends of (0, ∞).
    pub fn eval(&self, r: f64) -> f64 {
        if r <= 0.0 || !r.is_finite() {
            return 0.0;
        }
        let t = 2.0 * self.alpha * r;
        // 1 − e^{−t} without cancellation at small t
        let log_envelope = -self.state.c * t + self.state.gamma * (-(-t).exp_m1()).ln();
        self.k_norm * log_envelope.exp() * horner(&self.coefficients, (-t).exp())
    }

    /// r^{−(D−1)/2} R(r): the radial part of the full D-dimensional eigenfunction.
    pub fn full_radial_factor(&self, dim: u32, r: f64) -> f64 {
        let exponent = -0.5 * (f64::from(dim) - 1.0);
        r.powf(exponent) * self.eval(r)
    }

    /// Sign changes of R over the grid.
    ///
    /// Values below 1e−14 of the grid maximum (underflowed tails) are skipped.
    /// Two consecutive exact zeros between resolved values mean the grid
    /// cannot resolve the nodes.
    pub fn count_nodes(&self, grid: &[f64]) -> Result<usize> {
        let values: Vec<f64> = grid.iter().map(|&r| self.eval(r)).collect();
        count_sign_changes(&values)
    }

    /// ∫₀^∞ |R(r)|² dr by composite Gauss–Legendre quadrature in t = 2αr.
    pub fn norm_integral(&self) -> f64 {
        let c = self.state.c;
        let gamma = self.state.gamma;
        let k2 = self.k_norm * self.k_norm;
        let integral = integrate_half_line(
            |t| {
                if t <= 0.0 {
                    return 0.0;
                }
                let f = horner(&self.coefficients, (-t).exp());
                (-2.0 * c * t + 2.0 * gamma * (-(-t).exp_m1()).ln()).exp() * f * f
            },
            2.0 * c,
            QUADRATURE_REL_TOL,
        );
        k2 * integral / (2.0 * self.alpha)
    }

    /// Relative residual of the s-form radial equation at s ∈ (0, 1).
    ///
    /// R is substituted with its analytic derivatives; the residual is divided
    /// by the sum of magnitudes of the individual terms, so a value near 1e−16
    /// means exact cancellation.
    pub fn ode_residual(&self, reduced: &ReducedParams, s: f64) -> f64 {
        let c = self.state.c;
        let gamma = self.state.gamma;
        let (f, df, ddf) = horner_with_derivatives(&self.coefficients, s);
        let u = 1.0 - s;
        let dphi = c / s - gamma / u;
        let ddphi = -c / (s * s) - gamma / (u * u);

        let eps_sq = c * c - reduced.b_coef;
        let q_terms = [
            -eps_sq / (s * s),
            -gamma * (gamma - 1.0) / (s * u * u),
            -reduced.a_coef / (s * u),
            -reduced.b_coef * (1.0 + s) / (s * s * u),
        ];

        let terms = [
            ddf,
            2.0 * dphi * df,
            ddphi * f,
            dphi * dphi * f,
            df / s,
            dphi * f / s,
            q_terms[0] * f,
            q_terms[1] * f,
            q_terms[2] * f,
            q_terms[3] * f,
        ];
        let sum: f64 = terms.iter().sum();
        let scale: f64 = terms.iter().map(|t| t.abs()).sum();
        if scale == 0.0 {
            0.0
        } else {
            sum.abs() / scale
        }
    }

    /// Radius beyond which s^c < 1e−10: (10/c)(1/2α) ln 10.
    pub fn decay_radius(&self) -> f64 {
        10.0 / self.state.c / (2.0 * self.alpha) * std::f64::consts::LN_10
    }
}

/// (b, c) arguments of ₂F₁(−n, b; c; s) for a bound state.
fn series_parameters(state: &BoundState) -> (f64, f64) {
    (
        2.0 * (state.c + state.gamma) + f64::from(state.n),
        1.0 + 2.0 * state.c,
    )
}

pub(crate) fn count_sign_changes(values: &[f64]) -> Result<usize> {
    count_sign_changes_above(values, 1e-14)
}

/// Sign changes, ignoring values below `relative_floor` of the peak.
pub fn count_sign_changes_above(values: &[f64], relative_floor: f64) -> Result<usize> {
    let peak = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if peak == 0.0 {
        return Ok(0);
    }
    let floor = relative_floor * peak;
    let mut changes = 0;
    let mut last_sign = 0.0f64;
    let mut zero_run = 0usize;
    for &v in values {
        if v == 0.0 {
            zero_run += 1;
            continue;
        }
        if v.abs() <= floor {
            zero_run = 0;
            continue;
        }
        if zero_run >= 2 && last_sign != 0.0 {
            return Err(Error::GridTooCoarse(
                "consecutive exact zeros inside the resolved region".into(),
            ));
        }
        zero_run = 0;
        let sign = v.signum();
        if last_sign != 0.0 && sign != last_sign {
            changes += 1;
        }
        last_sign = sign;
    }
    Ok(changes)
}

/// ln of ∫₀¹ s^{2a−1}(1−s)^{2(b+1)} [₂F₁(−n, 2(a+b+1)+n; 1+2a; s)]² ds
/// = (n+b+1) n! Γ(n+2b+2) Γ(2a) Γ(2a+1) / ((n+a+b+1) Γ(n+2a+1) Γ(n+2(a+b+1))).
pub fn ln_overlap_integral(n: u32, a: f64, b: f64) -> f64 {
    let nf = f64::from(n);
    (nf + b + 1.0).ln() + ln_gamma(nf + 1.0) + ln_gamma(nf + 2.0 * b + 2.0)
        + ln_gamma(2.0 * a)
        + ln_gamma(2.0 * a + 1.0)
        - (nf + a + b + 1.0).ln()
        - ln_gamma(nf + 2.0 * a + 1.0)
        - ln_gamma(nf + 2.0 * (a + b + 1.0))
}

/// Quadrature value of the same integral, for checking the closed form.
pub fn overlap_integral_quadrature(n: u32, a: f64, b: f64) -> Result<f64> {
    let coeffs = terminating_coefficients(n, 2.0 * (a + b + 1.0) + f64::from(n), 1.0 + 2.0 * a)?;
    Ok(integrate_half_line(
        |t| {
            if t <= 0.0 {
                return 0.0;
            }
            let f = horner(&coeffs, (-t).exp());
            (-2.0 * a * t + 2.0 * (b + 1.0) * (-(-t).exp_m1()).ln()).exp() * f * f
        },
        2.0 * a,
        QUADRATURE_REL_TOL,
    ))
}

/// ln K_{nℓ}, with
/// K² = 2α(n+c+γ)Γ(n+2c+1)Γ(n+2(c+γ)) / (n!(n+γ)Γ(n+2γ)Γ(2c)Γ(2c+1)).
pub fn ln_normalization_constant(state: &BoundState, alpha: f64) -> Result<f64> {
    if !(state.c > 0.0) || !(state.gamma > 0.0) {
        return Err(Error::Domain(format!(
            "normalization needs c > 0 and gamma > 0 (c = {}, gamma = {})",
            state.c, state.gamma
        )));
    }
    let ln_k2 = (2.0 * alpha).ln() - ln_overlap_integral(state.n, state.c, state.gamma - 1.0);
    Ok(0.5 * ln_k2)
}

pub fn normalization_constant(state: &BoundState, alpha: f64) -> Result<f64> {
    let log_value = ln_normalization_constant(state, alpha)?;
    let k = log_value.exp();
    if !k.is_finite() || k == 0.0 {
        return Err(Error::Overflow { log_value });
    }
    Ok(k)
}
