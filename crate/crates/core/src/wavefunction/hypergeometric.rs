//! Terminating Gauss series ₂F₁(−n, b; c; s).

use crate::error::{Error, Result};

/// Coefficients a_j of ₂F₁(−n, b; c; s) = Σ_{j=0..n} a_j s^j.
///
/// a₀ = 1 and a_{j+1} = a_j (j−n)(b+j) / ((c+j)(j+1)).
pub fn terminating_coefficients(n: u32, b: f64, c: f64) -> Result<Vec<f64>> {
    let mut coeffs = Vec::with_capacity(n as usize + 1);
    coeffs.push(1.0);
    let nf = f64::from(n);
    for j in 0..n {
        let jf = f64::from(j);
        let denom = c + jf;
        if denom == 0.0 {
            return Err(Error::Domain(format!(
                "(c)_j vanishes: c = {c} is a non-positive integer within the first {n} terms"
            )));
        }
        let prev = coeffs[j as usize];
        coeffs.push(prev * (jf - nf) * (b + jf) / (denom * (jf + 1.0)));
    }
    Ok(coeffs)
}

pub fn hypergeometric_2f1_terminating(n: u32, b: f64, c: f64, s: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&s) {
        return Err(Error::Domain(format!("s = {s} outside [0, 1]")));
    }
    let coeffs = terminating_coefficients(n, b, c)?;
    Ok(horner(&coeffs, s))
}

pub(crate) fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &a| acc * x + a)
}

/// Value, first and second derivative of a polynomial at x.
pub(crate) fn horner_with_derivatives(coeffs: &[f64], x: f64) -> (f64, f64, f64) {
    let mut p = 0.0;
    let mut dp = 0.0;
    let mut ddp = 0.0;
    for &a in coeffs.iter().rev() {
        ddp = ddp * x + 2.0 * dp;
        dp = dp * x + p;
        p = p * x + a;
    }
    (p, dp, ddp)
}
