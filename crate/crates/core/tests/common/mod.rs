#![allow(dead_code)]

use boundstate::{PotentialSpec, RadialProblem};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const DIMS: [u32; 4] = [2, 3, 4, 6];

#[derive(Debug, Clone, Copy)]
pub struct Sample {
    pub pot: PotentialSpec,
    pub problem: RadialProblem,
}

/// Random admissible parameter set with at least four levels (n ≤ 3).
///
/// The binding K = A + 2B is chosen so that c₃ lands in [0.3, 2], then split
/// between the Yukawa and coth channels.
pub fn admissible_sample(rng: &mut ChaCha8Rng) -> Sample {
    let alpha = rng.random_range(0.05..=0.5);
    let mass = rng.random_range(0.5..=2.0);
    let dim = DIMS[rng.random_range(0..DIMS.len())];
    let ell = rng.random_range(0..=2u32);
    let v1 = rng.random_range(0.0..=1.0);
    let v4 = rng.random_range(-1.0..=0.0);
    let problem = RadialProblem::new(mass, dim, ell).unwrap();
    let gamma = boundstate::model::gamma_root(mass, v1, problem.shifted_index()).unwrap();

    let c3 = rng.random_range(0.3..=2.0);
    let x = gamma + 3.0;
    let k = -(x * x + 2.0 * x * c3);
    let frac = rng.random_range(0.0..=1.0);
    let a = frac * k;
    let b = 0.5 * (1.0 - frac) * k;
    let pot = PotentialSpec::new(v1, a * alpha / mass, 2.0 * alpha * alpha * b / mass, v4, alpha).unwrap();
    Sample { pot, problem }
}

pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}
