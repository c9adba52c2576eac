//! Finite-difference eigensolver for the radial equation.
//!
//! The equation is discretized on a uniform grid in x = ln r with
//! R = r^{1/2} u, which turns it into the symmetric pencil
//!
//! ```text
//! −u″ + (1/4 + 2M r² V_eff(r)) u = E · 2M r² u
//! ```
//!
//! Near the origin u ~ r^{γ−1/2}, imposed as u′ = (γ − 1/2) u on the first
//! half cell; u vanishes at r_max. Eigenvalues come from Sturm counts and
//! bisection, errors from Richardson extrapolation over grid doublings.

mod tridiagonal;

pub use tridiagonal::TridiagonalPencil;

use crate::error::{Error, Result};
use crate::model::{self, PotentialSpec, RadialProblem};
use crate::spectrum;
use crate::wavefunction::count_sign_changes_above;

/// Richardson estimate above this fraction of |E| is rejected.
pub const MAX_RELATIVE_GRID_ERROR: f64 = 1e-4;

/// Decay coverage α · r_max required unless overridden.
pub const MIN_COVERAGE: f64 = 5.0;

const DEFAULT_POINTS: usize = 4000;
const DEFAULT_REFINEMENTS: usize = 2;
const DECAY_LENGTHS: f64 = 40.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PotentialForm {
    /// 1/r² and e^{−αr}/r replaced by their exponential approximants.
    Pekeris,
    Exact,
}

impl PotentialForm {
    pub fn name(self) -> &'static str {
        match self {
            PotentialForm::Pekeris => "pekeris",
            PotentialForm::Exact => "exact",
        }
    }
}

/// V_eff(r) = V(r) + N/(2Mr²) in the requested form.
pub fn effective_potential(pot: &PotentialSpec, problem: &RadialProblem, form: PotentialForm, r: f64) -> f64 {
    r2_effective_potential(pot, problem, form, r) / (r * r)
}

/// r² V_eff(r), finite as r → 0.
fn r2_effective_potential(pot: &PotentialSpec, problem: &RadialProblem, form: PotentialForm, r: f64) -> f64 {
    let a = pot.alpha;
    let inv_sq_coef = pot.v1 + problem.centrifugal_constant() / (2.0 * problem.mass);
    match form {
        PotentialForm::Exact => {
            let ar = a * r;
            inv_sq_coef + pot.v2 * (-ar).exp() * r + pot.v3 * r * r / ar.tanh() + pot.v4 * r * r
        }
        PotentialForm::Pekeris => {
            let t = 2.0 * a * r;
            let s = (-t).exp();
            let one_minus = -(-t).exp_m1();
            let ratio = r / one_minus;
            inv_sq_coef * 4.0 * a * a * s * ratio * ratio
                + pot.v2 * 2.0 * a * s * r * ratio
                + pot.v3 * (1.0 + s) * r * ratio
                + pot.v4 * r * r
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub r_min: f64,
    pub r_max: f64,
    /// Node count of the coarsest grid, both ends included.
    pub points: usize,
    /// Number of grid doublings after the coarsest grid.
    pub refinement_levels: usize,
    /// Skips the α·r_max ≥ 5 coverage requirement (small-α limits).
    pub coverage_override: bool,
}

impl GridSpec {
    pub fn validate(&self, alpha: f64) -> Result<()> {
        if !(self.r_min > 0.0 && self.r_max > self.r_min && self.r_max.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "grid needs 0 < r_min < r_max (r_min = {}, r_max = {})",
                self.r_min, self.r_max
            )));
        }
        if self.points < 200 {
            return Err(Error::InvalidParams(format!("grid points = {} < 200", self.points)));
        }
        if self.refinement_levels < 1 {
            return Err(Error::InvalidParams("at least one grid refinement is needed".into()));
        }
        if !self.coverage_override && alpha * self.r_max < MIN_COVERAGE {
            return Err(Error::InvalidParams(format!(
                "alpha * r_max = {} < {MIN_COVERAGE}",
                alpha * self.r_max
            )));
        }
        Ok(())
    }

    /// Grid sized from the closed-form Pekeris levels: r_max covers 40 decay
    /// lengths of the highest requested state, r_min sits 1e−6 below the
    /// shortest physical length.
    pub fn for_states(pot: &PotentialSpec, problem: &RadialProblem, n_states: usize) -> Self {
        let m = problem.mass;
        let threshold = pot.asymptote();
        let kappas: Vec<f64> = model::reduce(pot, problem)
            .ok()
            .and_then(|reduced| {
                let count = spectrum::level_count(&reduced).ok()? as usize;
                let top = n_states.clamp(1, count.max(1));
                Some(
                    (0..top.min(count))
                        .filter_map(|n| spectrum::bound_state(pot, problem, n as u32).ok())
                        .map(|st| (2.0 * m * (threshold - st.energy)).sqrt())
                        .collect(),
                )
            })
            .unwrap_or_default();

        let (kappa_min, kappa_max) = match (kappas.last(), kappas.first()) {
            (Some(&lo), Some(&hi)) if lo > 0.0 => (lo, hi),
            _ => (pot.alpha, pot.alpha),
        };
        let n_extra = n_states.saturating_sub(1) as f64;
        let r_max = (DECAY_LENGTHS + 4.0 * n_extra) / kappa_min;
        let short = (1.0 / kappa_max).min(1.0 / pot.alpha);
        let r_min = 1e-6 * short;
        Self {
            r_min,
            r_max,
            points: DEFAULT_POINTS,
            refinement_levels: DEFAULT_REFINEMENTS,
            coverage_override: pot.alpha * r_max < MIN_COVERAGE,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleResult {
    /// Richardson-extrapolated eigenvalues, ascending.
    pub eigenvalues: Vec<f64>,
    /// |E_fine − E_coarse| / 3 per eigenvalue.
    pub grid_error_estimate: Vec<f64>,
    pub form: PotentialForm,
    /// Raw eigenvalues on each grid, coarsest first.
    pub level_eigenvalues: Vec<Vec<f64>>,
    /// Sign changes of each eigenvector on the finest grid.
    pub node_counts: Vec<usize>,
}

struct Discretization {
    pencil: TridiagonalPencil,
    lower: f64,
}

fn discretize(pot: &PotentialSpec, problem: &RadialProblem, form: PotentialForm, grid: &GridSpec, intervals: usize) -> Result<Discretization> {
    let reduced = model::reduce(pot, problem)?;
    let kappa = (reduced.gamma - 0.5).max(0.0);
    let x0 = grid.r_min.ln();
    let h = (grid.r_max.ln() - x0) / intervals as f64;
    let inv_h2 = 1.0 / (h * h);
    let two_m = 2.0 * problem.mass;

    // unknowns at nodes 0..intervals−1; u = 0 at the last node
    let mut diag = Vec::with_capacity(intervals);
    let mut weight = Vec::with_capacity(intervals);
    let mut lower = f64::INFINITY;
    for i in 0..intervals {
        let r = (x0 + h * i as f64).exp();
        let p = 0.25 + two_m * r2_effective_potential(pot, problem, form, r);
        let w = two_m * r * r;
        if !p.is_finite() {
            return Err(Error::InvalidParams(format!("potential not finite at r = {r}")));
        }
        lower = lower.min(p / w);
        if i == 0 {
            diag.push(inv_h2 + 0.5 * p + kappa / h);
            weight.push(0.5 * w);
        } else {
            diag.push(2.0 * inv_h2 + p);
            weight.push(w);
        }
    }
    Ok(Discretization {
        pencil: TridiagonalPencil {
            diag,
            off: vec![-inv_h2; intervals - 1],
            weight,
        },
        lower,
    })
}

/// Lowest `n_states` eigenvalues below the asymptote V₃ + V₄.
pub fn solve(
    pot: &PotentialSpec,
    problem: &RadialProblem,
    form: PotentialForm,
    grid: &GridSpec,
    n_states: usize,
) -> Result<OracleResult> {
    pot.validate()?;
    grid.validate(pot.alpha)?;
    let threshold = pot.asymptote();
    let base = grid.points - 1;

    let mut level_eigenvalues: Vec<Vec<f64>> = Vec::new();
    let mut finest: Option<Discretization> = None;
    for level in 0..=grid.refinement_levels {
        let disc = discretize(pot, problem, form, grid, base << level)?;
        let lo = disc.lower - 1.0 - disc.lower.abs() * 1e-12;
        let available = disc.pencil.count_below(threshold);
        let count = available.min(n_states);
        let values: Vec<f64> = (0..count).map(|k| disc.pencil.eigenvalue(k, lo, threshold)).collect();
        level_eigenvalues.push(values);
        finest = Some(disc);
    }

    let common = level_eigenvalues.iter().map(Vec::len).min().unwrap_or(0);
    if common == 0 {
        return Err(Error::NoBoundStates { threshold });
    }

    let fine = &level_eigenvalues[grid.refinement_levels];
    let coarse = &level_eigenvalues[grid.refinement_levels - 1];
    let mut eigenvalues = Vec::with_capacity(common);
    let mut grid_error_estimate = Vec::with_capacity(common);
    for k in 0..common {
        let diff = fine[k] - coarse[k];
        let estimate = (diff.abs() / 3.0).max(f64::EPSILON * fine[k].abs());
        if estimate > MAX_RELATIVE_GRID_ERROR * fine[k].abs() {
            return Err(Error::GridTooCoarse(format!(
                "state {k}: Richardson estimate {estimate:e} exceeds {MAX_RELATIVE_GRID_ERROR:e}·|E|"
            )));
        }
        eigenvalues.push(fine[k] + diff / 3.0);
        grid_error_estimate.push(estimate);
    }

    let pencil = &finest.expect("at least one level").pencil;
    let node_counts = fine[..common]
        .iter()
        .map(|&e| {
            let v = pencil.eigenvector(e);
            count_sign_changes_above(&v, 1e-8)
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(OracleResult {
        eigenvalues,
        grid_error_estimate,
        form,
        level_eigenvalues,
        node_counts,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PekerisErrorRow {
    pub n: u32,
    pub exact_oracle: f64,
    pub pekeris_closed_form: f64,
    pub rel_diff: f64,
}

/// Exact-potential oracle levels against the closed-form Pekeris levels, paired by index.
pub fn pekeris_error_report(
    pot: &PotentialSpec,
    problem: &RadialProblem,
    grid: &GridSpec,
    n_states: usize,
) -> Result<Vec<PekerisErrorRow>> {
    let exact = solve(pot, problem, PotentialForm::Exact, grid, n_states)?;
    let reduced = model::reduce(pot, problem)?;
    let closed_count = spectrum::level_count(&reduced)? as usize;
    if closed_count == 0 {
        return Err(Error::NoBoundStates {
            threshold: pot.asymptote(),
        });
    }
    exact
        .eigenvalues
        .iter()
        .take(closed_count)
        .enumerate()
        .map(|(n, &e_exact)| {
            let st = spectrum::bound_state(pot, problem, n as u32)?;
            Ok(PekerisErrorRow {
                n: n as u32,
                exact_oracle: e_exact,
                pekeris_closed_form: st.energy,
                rel_diff: (e_exact - st.energy).abs() / e_exact.abs(),
            })
        })
        .collect()
}
