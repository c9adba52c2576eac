//! Acceptance criteria. Each criterion prints one PASS/FAIL line; the binary
//! exits non-zero if any fails.

mod common;

use std::process::ExitCode;

use boundstate::aim::{self, AimConfig};
use boundstate::model::{self, energy_from_decay};
use boundstate::oracle::{self, GridSpec, PotentialForm};
use boundstate::presets::{PresetCase, PresetKind};
use boundstate::spectrum;
use boundstate::wavefunction::RadialWavefunction;
use boundstate::{PotentialSpec, QuantumNumbers, RadialProblem, DEFAULT_SMALL_ALPHA};
use common::{admissible_sample, rel, Sample};
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5eed_a11e;
const SWEEP: usize = 20;

struct Outcome {
    pass: bool,
    detail: String,
}

fn sweep() -> Vec<Sample> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..SWEEP).map(|_| admissible_sample(&mut rng)).collect()
}

/// Random admissible (sample, n) pairs with n ≤ 3.
fn random_states(count: usize, seed: u64) -> Vec<(Sample, u32)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let s = admissible_sample(&mut rng);
            (s, rng.random_range(0..=3u32))
        })
        .collect()
}

fn aim_vs_closed_form() -> Outcome {
    let mut worst_c = 0.0f64;
    let mut worst_e = 0.0f64;
    let mut failures = Vec::new();
    for (i, s) in sweep().iter().enumerate() {
        let reduced = model::reduce(&s.pot, &s.problem).unwrap();
        match aim::solve_spectrum(&reduced, &AimConfig::default(), 4) {
            Ok(roots) => {
                for (n, &c) in roots.iter().enumerate() {
                    let want = model::decay_exponent(&reduced, n as u32).unwrap();
                    let e_closed = spectrum::energy(&s.pot, &s.problem, QuantumNumbers::new(n as u32, s.problem.ell)).unwrap();
                    let e_aim = energy_from_decay(&s.pot, s.problem.mass, c);
                    worst_c = worst_c.max(rel(c, want));
                    worst_e = worst_e.max(rel(e_aim, e_closed));
                }
            }
            Err(e) => failures.push(format!("set {i}: {e}")),
        }
    }
    Outcome {
        pass: failures.is_empty() && worst_c < 1e-9 && worst_e < 1e-9,
        detail: format!("max rel c {worst_c:.2e}, max rel E {worst_e:.2e} (tol 1e-9) {}", failures.join("; ")),
    }
}

fn oracle_vs_closed_form() -> Outcome {
    let mut worst_ratio = 0.0f64;
    let mut worst_est = 0.0f64;
    let mut failures = Vec::new();
    for (i, s) in sweep().iter().enumerate() {
        let grid = GridSpec::for_states(&s.pot, &s.problem, 3);
        match oracle::solve(&s.pot, &s.problem, PotentialForm::Pekeris, &grid, 3) {
            Ok(res) if res.eigenvalues.len() == 3 => {
                for n in 0..3 {
                    let closed = spectrum::energy(&s.pot, &s.problem, QuantumNumbers::new(n as u32, s.problem.ell)).unwrap();
                    let diff = (res.eigenvalues[n] - closed).abs();
                    let est = res.grid_error_estimate[n];
                    worst_ratio = worst_ratio.max(diff / est);
                    worst_est = worst_est.max(est / closed.abs());
                }
            }
            Ok(res) => failures.push(format!("set {i}: only {} states", res.eigenvalues.len())),
            Err(e) => failures.push(format!("set {i}: {e}")),
        }
    }
    Outcome {
        pass: failures.is_empty() && worst_ratio <= 1.0 && worst_est < 1e-5,
        detail: format!(
            "max |dE|/estimate {worst_ratio:.3}, max estimate/|E| {worst_est:.2e} (tol 1e-5) {}",
            failures.join("; ")
        ),
    }
}

fn pekeris_trend() -> Outcome {
    // Hulthén-shaped coth well with a fixed Coulomb tail −1/r, D = 4 so the
    // centrifugal approximation is active
    let problem = RadialProblem::new(1.0, 4, 0).unwrap();
    let mut diffs = Vec::new();
    for alpha in [0.2, 0.1, 0.05, 0.025] {
        let pot = PotentialSpec::new(0.0, 0.0, -alpha, alpha, alpha).unwrap();
        let grid = GridSpec::for_states(&pot, &problem, 1);
        match oracle::pekeris_error_report(&pot, &problem, &grid, 1) {
            Ok(rows) => diffs.push(rows[0].rel_diff),
            Err(e) => {
                return Outcome {
                    pass: false,
                    detail: format!("alpha {alpha}: {e}"),
                }
            }
        }
    }
    let decreasing = diffs.windows(2).all(|w| w[1] < w[0]);
    let last = *diffs.last().unwrap();
    Outcome {
        pass: decreasing && last < 1e-3,
        detail: format!(
            "rel diffs {:?}, strictly decreasing {decreasing}, at 0.025 {last:.2e} (tol 1e-3)",
            diffs.iter().map(|d| format!("{d:.3e}")).collect::<Vec<_>>()
        ),
    }
}

fn coulomb_limit() -> Outcome {
    let case = PresetCase::Coulomb { v2: -1.0, alpha: DEFAULT_SMALL_ALPHA };
    let (pot, _) = case.to_mixed().unwrap();
    let problem = RadialProblem::new(1.0, 3, 0).unwrap();
    let mut worst = 0.0f64;
    for (n, ell) in [(0, 0), (1, 0), (0, 1)] {
        let e = spectrum::energy(&pot, &problem, QuantumNumbers::new(n, ell)).unwrap();
        let want = -1.0 / (2.0 * f64::from(n + ell + 1).powi(2));
        worst = worst.max((e - want).abs());
    }
    Outcome {
        pass: worst < 1e-6,
        detail: format!("max abs error {worst:.2e} (tol 1e-6)"),
    }
}

fn normalization() -> Outcome {
    let mut worst = 0.0f64;
    for (s, n) in random_states(10, SEED + 5) {
        let wf = RadialWavefunction::new(&s.pot, &s.problem, n).unwrap();
        worst = worst.max((wf.norm_integral() - 1.0).abs());
    }
    Outcome {
        pass: worst < 1e-8,
        detail: format!("max |norm - 1| {worst:.2e} (tol 1e-8)"),
    }
}

fn node_theorem() -> Outcome {
    let mut failures = Vec::new();
    for (i, (s, n)) in random_states(10, SEED + 5).into_iter().enumerate() {
        let wf = RadialWavefunction::new(&s.pot, &s.problem, n).unwrap();
        let r_max = wf.decay_radius();
        let grid: Vec<f64> = (1..=8000).map(|j| r_max * f64::from(j) / 8000.0).collect();
        let analytic = wf.count_nodes(&grid);
        let spec = GridSpec::for_states(&s.pot, &s.problem, n as usize + 1);
        let numeric = oracle::solve(&s.pot, &s.problem, PotentialForm::Pekeris, &spec, n as usize + 1)
            .map(|r| r.node_counts.get(n as usize).copied());
        match (analytic, numeric) {
            (Ok(a), Ok(Some(b))) if a == n as usize && b == n as usize => {}
            (a, b) => failures.push(format!("state {i} (n={n}): analytic {a:?}, oracle {b:?}")),
        }
    }
    Outcome {
        pass: failures.is_empty(),
        detail: if failures.is_empty() {
            "10 states: analytic and oracle node counts equal n".into()
        } else {
            failures.join("; ")
        },
    }
}

fn ode_residual() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
    let mut worst = 0.0f64;
    for (s, n) in random_states(10, SEED + 5) {
        let reduced = model::reduce(&s.pot, &s.problem).unwrap();
        let wf = RadialWavefunction::new(&s.pot, &s.problem, n).unwrap();
        for _ in 0..100 {
            let x: f64 = rng.random_range(1e-6..1.0 - 1e-6);
            worst = worst.max(wf.ode_residual(&reduced, x));
        }
    }
    Outcome {
        pass: worst < 1e-8,
        detail: format!("max normalized residual {worst:.2e} (tol 1e-8)"),
    }
}

/// Random valid parameters for a preset, redrawn until level n is bound.
///
/// Small-α cases carry a truncation error ≈ 2α(γ+n)²/(M|V₂|) relative to E;
/// their ranges (D ≤ 4, ℓ, n ≤ 2, V₁ ≤ 2, M|V₂| ≥ 1, V₄ ≤ 0) keep it below 8e−7.
fn draw_preset(kind: PresetKind, rng: &mut ChaCha8Rng) -> (PresetCase, RadialProblem, QuantumNumbers) {
    loop {
        let mass = rng.random_range(0.5..=2.0);
        let dims: &[u32] = if kind.is_sentinel() { &[2, 3, 4] } else { &[2, 3, 4, 5, 6] };
        let dim = dims[rng.random_range(0..dims.len())];
        let ell = rng.random_range(0..=2u32);
        let n = rng.random_range(0..=2u32);
        let mut u = |lo: f64, hi: f64| rng.random_range(lo..=hi);
        let case = match kind {
            PresetKind::Yukawa => PresetCase::Yukawa { v2: u(-20.0, -1.0), alpha: u(0.01, 0.3) },
            PresetKind::Coulomb => PresetCase::Coulomb { v2: u(-5.0, -2.0), alpha: DEFAULT_SMALL_ALPHA },
            PresetKind::Mie => PresetCase::Mie {
                v1: u(0.0, 2.0),
                v2: u(-5.0, -2.0),
                v4: u(-2.0, 0.0),
                alpha: DEFAULT_SMALL_ALPHA,
            },
            PresetKind::KratzerFues => PresetCase::KratzerFues {
                v1: u(0.0, 2.0),
                v2: u(-5.0, -2.0),
                alpha: DEFAULT_SMALL_ALPHA,
            },
            PresetKind::ManningRosen => PresetCase::ManningRosen { v1p: u(0.0, 0.1), v3: u(-10.0, -1.0), alpha: u(0.05, 0.5) },
            PresetKind::Eckart => PresetCase::Eckart { v1p: u(0.0, 0.1), v3: u(1.0, 10.0), alpha: u(0.05, 0.5) },
            PresetKind::Hulthen => PresetCase::Hulthen { v0: u(0.5, 10.0), b: u(0.05, 1.0) },
            PresetKind::YukawaHulthen => PresetCase::YukawaHulthen { v2: u(-3.0, 0.0), v0: u(0.5, 10.0), b: u(0.05, 1.0) },
            PresetKind::YukawaInverseSquare => {
                PresetCase::YukawaInverseSquare { v1: u(0.0, 2.0), v2: u(-20.0, -1.0), alpha: u(0.01, 0.3) }
            }
            PresetKind::QuadraticExponential => PresetCase::QuadraticExponential {
                phi0: u(0.5, 10.0),
                xi1: u(0.5, 2.0),
                xi2: u(-6.0, -1.0),
                xi3: u(2.0, 6.0),
                sigma: u(0.1, 1.0),
            },
            PresetKind::DengFan => PresetCase::DengFan { de: u(1.0, 20.0), sigma: u(0.2, 1.5), re: u(0.5, 2.5) },
        };
        let problem = RadialProblem::new(mass, dim, ell).unwrap();
        let (pot, _) = case.to_mixed().unwrap();
        if spectrum::admissible(&pot, &problem, n).unwrap_or(false) {
            return (case, problem, QuantumNumbers::new(n, ell));
        }
    }
}

fn special_cases() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 8);
    let mut failures = Vec::new();
    let mut worst_finite = 0.0f64;
    let mut worst_sentinel = 0.0f64;
    for kind in PresetKind::ALL {
        for _ in 0..50 {
            let (case, problem, q) = draw_preset(kind, &mut rng);
            match case.consistency_check(&problem, q) {
                Ok(d) => {
                    if kind.is_sentinel() {
                        worst_sentinel = worst_sentinel.max(d);
                    } else {
                        worst_finite = worst_finite.max(d);
                    }
                    if d >= case.consistency_tolerance() {
                        failures.push(format!("{kind}: {d:.2e}"));
                    }
                }
                Err(e) => failures.push(format!("{kind}: {e}")),
            }
        }
    }
    Outcome {
        pass: failures.is_empty(),
        detail: format!(
            "11 presets x 50 draws: max finite-alpha {worst_finite:.2e} (tol 1e-12), max sentinel {worst_sentinel:.2e} (tol 1e-6) {}",
            failures.join("; ")
        ),
    }
}

fn aim_structure() -> Outcome {
    type Q = Ratio<i64>;
    let mut notes = Vec::new();
    let mut ok = true;

    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 9);
    for _ in 0..20 {
        let beta = Q::from_integer(rng.random_range(-20..=20));
        let delta = Q::from_integer(rng.random_range(-20..=20));
        let eta = Q::from_integer(rng.random_range(-20..=20));
        let (lam0, s0) = aim::seed_from_coefficients(beta, delta, eta);
        let (lam1, s1) = aim::iterate_exact(&lam0, &s0, &lam0, &s0);
        let two = Q::from_integer(2);
        let want = [delta * delta + delta, eta - two * delta - two * beta * delta, beta * beta + beta - eta];
        let want = aim::RationalFn::new(want.to_vec(), 2, 2);
        let d1 = aim::delta_k(&lam1, &s1, &lam0, &s0).cancel_common_factors();
        let want_d1 = aim::RationalFn::new(vec![eta * (eta + beta)], 2, 2);
        let want_d1 = if want_d1.is_zero() { d1.clone() } else { want_d1 };
        ok &= lam1 == want && d1 == want_d1;
    }
    notes.push(format!("exact one-step and delta_1 identities {}", if ok { "hold" } else { "FAIL" }));

    let pts: Vec<f64> = (1..10).map(|i| f64::from(i) / 10.0).collect();
    let mut worst_flat = 0.0f64;
    let mut theorem = true;
    for s in sweep() {
        let reduced = model::reduce(&s.pot, &s.problem).unwrap();
        for n in 0..=3u32 {
            let c = model::decay_exponent(&reduced, n).unwrap();
            worst_flat = worst_flat.max(aim::s_independence_check(&reduced, c, n as usize + 1, &pts).unwrap());
            theorem &= aim::polynomial_theorem_at(&reduced, c, n).unwrap();
        }
    }
    notes.push(format!("s-independence max {worst_flat:.2e} (tol 1e-8), polynomial theorem n<=3 {theorem}"));
    Outcome {
        pass: ok && worst_flat < 1e-8 && theorem,
        detail: notes.join(", "),
    }
}

fn interdimensional_degeneracy() -> Outcome {
    let mut worst = 0.0f64;
    let mut bitwise = true;
    let mut pairs = 0;
    for s in sweep() {
        let ell = s.problem.ell;
        for shift in 1..=ell {
            let lower = s.problem.with_ell(ell - shift).with_dim(s.problem.dim + 2 * shift);
            for n in 0..4 {
                let a = spectrum::energy(&s.pot, &s.problem, QuantumNumbers::new(n, ell));
                let b = spectrum::energy(&s.pot, &lower, QuantumNumbers::new(n, ell - shift));
                if let (Ok(a), Ok(b)) = (a, b) {
                    pairs += 1;
                    bitwise &= a.to_bits() == b.to_bits();
                    worst = worst.max(rel(a, b));
                }
            }
        }
    }
    Outcome {
        pass: pairs > 0 && (bitwise || worst < 1e-14),
        detail: format!("{pairs} pairs, bitwise identical {bitwise}, max rel {worst:.1e}"),
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("1 closed form vs AIM", aim_vs_closed_form),
        ("2 closed form vs Pekeris-form oracle", oracle_vs_closed_form),
        ("3 Pekeris fidelity trend", pekeris_trend),
        ("4 Coulomb limit", coulomb_limit),
        ("5 normalization", normalization),
        ("6 node theorem", node_theorem),
        ("7 ODE residual", ode_residual),
        ("8 special-case identities", special_cases),
        ("9 AIM structure", aim_structure),
        ("10 interdimensional degeneracy", interdimensional_degeneracy),
    ];
    let mut all = true;
    for (name, check) in criteria {
        let start = std::time::Instant::now();
        let outcome = check();
        all &= outcome.pass;
        println!(
            "criterion {name}: {} [{:.1}s] {}",
            if outcome.pass { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64(),
            outcome.detail
        );
    }
    if all {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: FAILURES present");
        ExitCode::FAILURE
    }
}
