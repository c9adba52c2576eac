//! Asymptotic iteration method for the s-form radial equation
//!
//! With R = s^c (1−s)^γ f(s) the polynomial factor obeys
//! f″ = λ₀ f′ + s₀ f with
//!
//! ```text
//! λ₀ = (βs − δ) / (s(1−s)),   s₀ = η / (s(1−s))
//! β = 2c + 2γ + 1,  δ = 2c + 1,  η = γ² + 2cγ + A + 2B
//! ```
//!
//! The iterates are λ_k = λ′_{k−1} + s_{k−1} + λ₀λ_{k−1},
//! s_k = s′_{k−1} + s₀λ_{k−1}, and the spectrum is read off the zeros of
//! Δ_k = λ_k s_{k−1} − λ_{k−1} s_k as a function of c. No closed-form energy
//! is used here.

mod rational;

pub use rational::RationalFn;

use num_traits::{FromPrimitive, Num};

use crate::error::{Error, Result};
use crate::model::ReducedParams;

/// Coefficient magnitude that aborts an iteration step.
pub const SCALE_LIMIT: f64 = 1e300;

/// Threshold on the normalized Δ numerator for the polynomial theorem.
pub const POLYNOMIAL_THEOREM_TOL: f64 = 1e-8;

const MIN_SCAN_SAMPLES: usize = 512;
const MAX_SCAN_SAMPLES: usize = 200_000;
const NOISE_FACTOR: f64 = 64.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AimConfig {
    pub s0: f64,
    pub k_max: usize,
    /// Search interval for c. `None` derives it from the reduced parameters.
    pub c_bracket: Option<(f64, f64)>,
    pub root_tol: f64,
    pub stability_tol: f64,
}

impl Default for AimConfig {
    fn default() -> Self {
        Self {
            s0: 0.5,
            k_max: 30,
            c_bracket: None,
            root_tol: 1e-12,
            stability_tol: 1e-8,
        }
    }
}

impl AimConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.s0 > 0.0 && self.s0 < 1.0) {
            return Err(Error::InvalidParams(format!("s0 = {} outside (0, 1)", self.s0)));
        }
        if self.k_max < 2 {
            return Err(Error::InvalidParams(format!("k_max = {} < 2", self.k_max)));
        }
        if !(self.root_tol > 0.0) || !(self.stability_tol > 0.0) {
            return Err(Error::InvalidParams("tolerances must be positive".into()));
        }
        if let Some((lo, hi)) = self.c_bracket {
            if !(lo > 0.0 && hi > lo && hi.is_finite()) {
                return Err(Error::InvalidParams(format!("bad c bracket ({lo}, {hi})")));
            }
        }
        Ok(())
    }

    /// Explicit bracket, or (root_tol, max(−(A+2B), 1)/(2γ) + γ + 1).
    pub fn bracket_for(&self, reduced: &ReducedParams) -> (f64, f64) {
        self.c_bracket.unwrap_or_else(|| {
            let hi = (-reduced.binding()).max(1.0) / (2.0 * reduced.gamma) + reduced.gamma + 1.0;
            (self.root_tol, hi)
        })
    }
}

/// λ₀ and s₀ from β, δ, η in any exact or floating field.
pub fn seed_from_coefficients<T: Clone + Num + FromPrimitive>(
    beta: T,
    delta: T,
    eta: T,
) -> (RationalFn<T>, RationalFn<T>) {
    let lam0 = RationalFn::new(vec![T::zero() - delta, beta], 1, 1);
    let s0 = RationalFn::new(vec![eta], 1, 1);
    (lam0, s0)
}

pub fn seed(reduced: &ReducedParams, c: f64) -> (RationalFn<f64>, RationalFn<f64>) {
    seed_from_coefficients(reduced.beta(c), reduced.delta(c), reduced.eta(c))
}

/// One recurrence step without overflow checks.
pub fn iterate_exact<T: Clone + Num + FromPrimitive>(
    lam_prev: &RationalFn<T>,
    s_prev: &RationalFn<T>,
    lam0: &RationalFn<T>,
    s0: &RationalFn<T>,
) -> (RationalFn<T>, RationalFn<T>) {
    let lam = lam_prev.derivative().add(s_prev).add(&lam0.mul(lam_prev));
    let s = s_prev.derivative().add(&s0.mul(lam_prev));
    (lam, s)
}

pub fn iterate(
    lam_prev: &RationalFn<f64>,
    s_prev: &RationalFn<f64>,
    lam0: &RationalFn<f64>,
    s0: &RationalFn<f64>,
) -> Result<(RationalFn<f64>, RationalFn<f64>)> {
    let (lam, s) = iterate_exact(lam_prev, s_prev, lam0, s0);
    let big = lam.max_abs_coefficient().max(s.max_abs_coefficient());
    if !lam.is_finite() || !s.is_finite() || big > SCALE_LIMIT {
        return Err(Error::ScaleError {
            k: lam.p().saturating_sub(1) as usize,
        });
    }
    Ok((lam, s))
}

pub fn delta_k<T: Clone + Num + FromPrimitive>(
    lam_k: &RationalFn<T>,
    s_k: &RationalFn<T>,
    lam_prev: &RationalFn<T>,
    s_prev: &RationalFn<T>,
) -> RationalFn<T> {
    lam_k.mul(s_prev).sub(&lam_prev.mul(s_k))
}

/// (λ_j, s_j) for j = 0..=k, each pair after λ₀ divided by its largest
/// coefficient. A common positive factor on a pair leaves the zeros of every
/// Δ_j unchanged.
pub fn ladder(reduced: &ReducedParams, c: f64, k: usize) -> Result<Vec<(RationalFn<f64>, RationalFn<f64>)>> {
    let (lam0, s0) = seed(reduced, c);
    let mut out = Vec::with_capacity(k + 1);
    out.push((lam0.clone(), s0.clone()));
    for _ in 0..k {
        let (lp, sp) = out.last().expect("seeded");
        let (lam, s) = iterate(lp, sp, &lam0, &s0)?;
        let scale = lam.max_abs_coefficient().max(s.max_abs_coefficient());
        if scale > 0.0 {
            out.push((lam.scaled(&scale.recip()), s.scaled(&scale.recip())));
        } else {
            out.push((lam, s));
        }
    }
    Ok(out)
}

/// Scale for Δ_k: max|coef λ_k| · max|coef λ_{k−1}|. The s_j themselves
/// shrink with η near an eigenvalue, so they are left out.
fn term_scale(lam_k: &RationalFn<f64>, lam_prev: &RationalFn<f64>) -> f64 {
    lam_k.max_abs_coefficient() * lam_prev.max_abs_coefficient()
}

/// Δ_j(s0) and its rounding floor for j = 1..=k at one trial c.
fn delta_samples(reduced: &ReducedParams, c: f64, s0: f64, k: usize) -> Vec<(f64, f64)> {
    let Ok(steps) = ladder(reduced, c, k) else {
        return Vec::new();
    };
    steps
        .windows(2)
        .enumerate()
        .map(|(i, w)| {
            let (lp, sp) = &w[0];
            let (lk, sk) = &w[1];
            let value = lk.eval_numer(&s0) * sp.eval_numer(&s0) - lp.eval_numer(&s0) * sk.eval_numer(&s0);
            let magnitude = lk.eval_numer_abs(s0) * sp.eval_numer_abs(s0)
                + lp.eval_numer_abs(s0) * sk.eval_numer_abs(s0);
            let floor = NOISE_FACTOR * (i + 1) as f64 * f64::EPSILON * magnitude;
            (value, floor)
        })
        .collect()
}

fn delta_at(reduced: &ReducedParams, c: f64, s0: f64, k: usize) -> f64 {
    delta_samples(reduced, c, s0, k)
        .last()
        .map_or(f64::NAN, |&(v, _)| v)
}

fn bisect(reduced: &ReducedParams, cfg: &AimConfig, k: usize, mut a: f64, mut b: f64, fa: f64) -> f64 {
    let sign_a = fa.signum();
    while b - a > cfg.root_tol {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let fm = delta_at(reduced, mid, cfg.s0, k);
        if fm == 0.0 {
            return mid;
        }
        if fm.signum() == sign_a {
            a = mid;
        } else {
            b = mid;
        }
    }
    0.5 * (a + b)
}

fn scan_grid(lo: f64, hi: f64) -> Vec<f64> {
    let samples = ((8.0 * (hi - lo)).ceil() as usize).clamp(MIN_SCAN_SAMPLES, MAX_SCAN_SAMPLES);
    (0..=samples)
        .map(|i| lo + (hi - lo) * i as f64 / samples as f64)
        .collect()
}

/// Sign-change roots of c ↦ Δ_k(s0; c) from precomputed samples.
fn roots_from_samples(
    reduced: &ReducedParams,
    cfg: &AimConfig,
    k: usize,
    grid: &[f64],
    samples: &[Vec<(f64, f64)>],
) -> Vec<f64> {
    let mut roots = Vec::new();
    let mut last: Option<(f64, f64)> = None;
    for (&c, row) in grid.iter().zip(samples) {
        let Some(&(v, floor)) = row.get(k - 1) else {
            continue;
        };
        if !v.is_finite() || v.abs() <= floor {
            continue;
        }
        if let Some((c_prev, v_prev)) = last {
            if v.signum() != v_prev.signum() {
                roots.push(bisect(reduced, cfg, k, c_prev, c, v_prev));
            }
        }
        last = Some((c, v));
    }
    roots.sort_by(|a, b| b.total_cmp(a));
    roots
}

/// All sign-change roots of Δ_k inside the bracket, descending in c.
pub fn roots_at_k(reduced: &ReducedParams, cfg: &AimConfig, k: usize) -> Result<Vec<f64>> {
    cfg.validate()?;
    let (lo, hi) = cfg.bracket_for(reduced);
    let grid = scan_grid(lo, hi);
    let samples: Vec<_> = grid.iter().map(|&c| delta_samples(reduced, c, cfg.s0, k)).collect();
    Ok(roots_from_samples(reduced, cfg, k.max(1), &grid, &samples))
}

fn matches(root: f64, others: &[f64], tol: f64) -> bool {
    others
        .iter()
        .any(|&o| (root - o).abs() <= tol * root.abs().max(o.abs()))
}

/// Decay exponents c₀ > c₁ > … of the first `n_levels` states.
///
/// A root is accepted once it reappears in three consecutive iterations.
pub fn solve_spectrum(reduced: &ReducedParams, cfg: &AimConfig, n_levels: usize) -> Result<Vec<f64>> {
    cfg.validate()?;
    if n_levels == 0 {
        return Ok(Vec::new());
    }
    let (lo, hi) = cfg.bracket_for(reduced);
    let grid = scan_grid(lo, hi);
    let samples: Vec<_> = grid
        .iter()
        .map(|&c| delta_samples(reduced, c, cfg.s0, cfg.k_max))
        .collect();

    let mut history: Vec<Vec<f64>> = Vec::new();
    let mut best: Vec<f64> = Vec::new();
    for k in 1..=cfg.k_max {
        history.push(roots_from_samples(reduced, cfg, k, &grid, &samples));
        if history.len() < 3 {
            continue;
        }
        let [a, b, current] = &history[history.len() - 3..] else {
            unreachable!()
        };
        let stable: Vec<f64> = current
            .iter()
            .copied()
            .filter(|&r| matches(r, a, cfg.stability_tol) && matches(r, b, cfg.stability_tol))
            .collect();
        if stable.len() >= n_levels {
            return Ok(stable[..n_levels].to_vec());
        }
        if stable.len() > best.len() {
            best = stable;
        }
    }
    Err(Error::NoConvergence {
        found: best,
        requested: n_levels,
    })
}

/// Δ_k numerator (rescaled ladder) together with the magnitude of its two products.
fn normalized_delta(reduced: &ReducedParams, c: f64, k: usize) -> Result<(RationalFn<f64>, f64)> {
    let k = k.max(1);
    let steps = ladder(reduced, c, k)?;
    let (lk, sk) = &steps[k];
    let (lp, sp) = &steps[k - 1];
    Ok((delta_k(lk, sk, lp, sp), term_scale(lk, lp)))
}

/// max over the sample points of |Δ_k numerator|, relative to
/// max|coef λ_k| · max|coef λ_{k−1}|.
pub fn s_independence_check(reduced: &ReducedParams, c_root: f64, k: usize, sample_points: &[f64]) -> Result<f64> {
    let (delta, scale) = normalized_delta(reduced, c_root, k)?;
    if scale == 0.0 {
        return Ok(0.0);
    }
    let worst = sample_points
        .iter()
        .map(|s| delta.eval_numer(s).abs())
        .fold(0.0, f64::max);
    Ok(worst / scale)
}

/// Largest Δ numerator coefficient relative to max|coef λ_n| · max|coef λ_{n−1}|.
pub fn theorem_residual(
    lam_n: &RationalFn<f64>,
    s_n: &RationalFn<f64>,
    lam_prev: &RationalFn<f64>,
    s_prev: &RationalFn<f64>,
) -> f64 {
    let scale = term_scale(lam_n, lam_prev);
    if scale == 0.0 {
        return 0.0;
    }
    delta_k(lam_n, s_n, lam_prev, s_prev).max_abs_coefficient() / scale
}

/// True iff [`theorem_residual`] is below 1e−8.
pub fn polynomial_theorem_check(
    lam_n: &RationalFn<f64>,
    s_n: &RationalFn<f64>,
    lam_prev: &RationalFn<f64>,
    s_prev: &RationalFn<f64>,
) -> bool {
    theorem_residual(lam_n, s_n, lam_prev, s_prev) < POLYNOMIAL_THEOREM_TOL
}

/// [`theorem_residual`] for level n, using k = n + 1 iterations at decay exponent c.
pub fn polynomial_theorem_residual(reduced: &ReducedParams, c: f64, n: u32) -> Result<f64> {
    let k = n as usize + 1;
    let steps = ladder(reduced, c, k)?;
    let (lk, sk) = &steps[k];
    let (lp, sp) = &steps[k - 1];
    Ok(theorem_residual(lk, sk, lp, sp))
}

pub fn polynomial_theorem_at(reduced: &ReducedParams, c: f64, n: u32) -> Result<bool> {
    Ok(polynomial_theorem_residual(reduced, c, n)? < POLYNOMIAL_THEOREM_TOL)
}
