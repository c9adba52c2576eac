//! Named special cases of the mixed potential and their own energy formulas.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::model::{self, PotentialSpec, QuantumNumbers, RadialProblem, DEFAULT_SMALL_ALPHA};
use crate::spectrum;

/// Denominator floor of [`PresetCase::consistency_check`].
pub const CONSISTENCY_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PresetKind {
    Yukawa,
    Coulomb,
    Mie,
    KratzerFues,
    ManningRosen,
    Eckart,
    Hulthen,
    YukawaHulthen,
    YukawaInverseSquare,
    QuadraticExponential,
    DengFan,
}

impl PresetKind {
    pub const ALL: [PresetKind; 11] = [
        PresetKind::Yukawa,
        PresetKind::Coulomb,
        PresetKind::Mie,
        PresetKind::KratzerFues,
        PresetKind::ManningRosen,
        PresetKind::Eckart,
        PresetKind::Hulthen,
        PresetKind::YukawaHulthen,
        PresetKind::YukawaInverseSquare,
        PresetKind::QuadraticExponential,
        PresetKind::DengFan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PresetKind::Yukawa => "yukawa",
            PresetKind::Coulomb => "coulomb",
            PresetKind::Mie => "mie",
            PresetKind::KratzerFues => "kratzer_fues",
            PresetKind::ManningRosen => "manning_rosen",
            PresetKind::Eckart => "eckart",
            PresetKind::Hulthen => "hulthen",
            PresetKind::YukawaHulthen => "yukawa_hulthen",
            PresetKind::YukawaInverseSquare => "yukawa_inverse_square",
            PresetKind::QuadraticExponential => "quadratic_exponential",
            PresetKind::DengFan => "deng_fan",
        }
    }

    /// Parameter keys, required ones first. `alpha` is optional for the
    /// small-α cases.
    pub fn parameter_keys(self) -> &'static [&'static str] {
        match self {
            PresetKind::Yukawa => &["V2", "alpha"],
            PresetKind::Coulomb => &["V2", "alpha"],
            PresetKind::Mie => &["V1", "V2", "V4", "alpha"],
            PresetKind::KratzerFues => &["V1", "V2", "alpha"],
            PresetKind::ManningRosen | PresetKind::Eckart => &["V1p", "V3", "alpha"],
            PresetKind::Hulthen => &["V0", "b"],
            PresetKind::YukawaHulthen => &["V2", "V0", "b"],
            PresetKind::YukawaInverseSquare => &["V1", "V2", "alpha"],
            PresetKind::QuadraticExponential => &["phi0", "xi1", "xi2", "xi3", "sigma"],
            PresetKind::DengFan => &["De", "sigma", "re"],
        }
    }

    /// Uses the small-α sentinel in place of the α → 0 limit.
    pub fn is_sentinel(self) -> bool {
        matches!(self, PresetKind::Coulomb | PresetKind::Mie | PresetKind::KratzerFues)
    }

    /// Label of the case's decay shorthand.
    pub fn decay_label(self) -> &'static str {
        match self {
            PresetKind::Yukawa | PresetKind::Coulomb => "c1",
            PresetKind::Mie | PresetKind::KratzerFues => "c2",
            PresetKind::ManningRosen | PresetKind::Eckart => "c3",
            PresetKind::Hulthen | PresetKind::YukawaHulthen => "c4",
            PresetKind::YukawaInverseSquare => "c5",
            PresetKind::QuadraticExponential => "c6",
            PresetKind::DengFan => "c7",
        }
    }
}

impl fmt::Display for PresetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PresetKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        PresetKind::ALL
            .into_iter()
            .find(|k| k.name() == key)
            .ok_or_else(|| Error::InvalidParams(format!("unknown preset '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PresetCase {
    /// V₂e^{−αr}/r
    Yukawa { v2: f64, alpha: f64 },
    /// V₂/r at the small-α sentinel
    Coulomb { v2: f64, alpha: f64 },
    /// V₁/r² + V₂/r + V₄
    Mie { v1: f64, v2: f64, v4: f64, alpha: f64 },
    /// V₁/r² + V₂/r
    KratzerFues { v1: f64, v2: f64, alpha: f64 },
    /// 4V₁′s/(1−s)² + V₃(1+s)/(1−s) with V₁′ = V₁α²
    ManningRosen { v1p: f64, v3: f64, alpha: f64 },
    /// Manning–Rosen with V₃ ↦ −V₃
    Eckart { v1p: f64, v3: f64, alpha: f64 },
    /// −V₀′e^{−br}/(1−e^{−br})
    Hulthen { v0: f64, b: f64 },
    YukawaHulthen { v2: f64, v0: f64, b: f64 },
    /// V₁/r² + V₂e^{−αr}/r
    YukawaInverseSquare { v1: f64, v2: f64, alpha: f64 },
    /// φ₀(ξ₁e^{2σr} + ξ₂e^{σr} + ξ₃)/(e^{σr} − 1)²
    QuadraticExponential { phi0: f64, xi1: f64, xi2: f64, xi3: f64, sigma: f64 },
    /// D_e(1 − δ₀/(e^{σr} − 1))², δ₀ = e^{σr_e} − 1
    DengFan { de: f64, sigma: f64, re: f64 },
}

fn finite(name: &str, v: f64) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::InvalidParams(format!("{name} must be finite, got {v}")))
    }
}

fn positive(name: &str, v: f64) -> Result<f64> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(Error::InvalidParams(format!("{name} must be positive and finite, got {v}")))
    }
}

impl PresetCase {
    /// Builds a case from named parameters (keys as in [`PresetKind::parameter_keys`]).
    pub fn from_named(kind: PresetKind, get: impl Fn(&str) -> Option<f64>) -> Result<Self> {
        let req = |key: &str| {
            get(key).ok_or_else(|| Error::InvalidParams(format!("preset {kind} needs parameter {key}")))
        };
        let alpha_or_sentinel = || get("alpha").unwrap_or(DEFAULT_SMALL_ALPHA);
        let case = match kind {
            PresetKind::Yukawa => PresetCase::Yukawa { v2: req("V2")?, alpha: req("alpha")? },
            PresetKind::Coulomb => PresetCase::Coulomb { v2: req("V2")?, alpha: alpha_or_sentinel() },
            PresetKind::Mie => PresetCase::Mie {
                v1: req("V1")?,
                v2: req("V2")?,
                v4: req("V4")?,
                alpha: alpha_or_sentinel(),
            },
            PresetKind::KratzerFues => PresetCase::KratzerFues {
                v1: req("V1")?,
                v2: req("V2")?,
                alpha: alpha_or_sentinel(),
            },
            PresetKind::ManningRosen => PresetCase::ManningRosen {
                v1p: req("V1p")?,
                v3: req("V3")?,
                alpha: req("alpha")?,
            },
            PresetKind::Eckart => PresetCase::Eckart {
                v1p: req("V1p")?,
                v3: req("V3")?,
                alpha: req("alpha")?,
            },
            PresetKind::Hulthen => PresetCase::Hulthen { v0: req("V0")?, b: req("b")? },
            PresetKind::YukawaHulthen => PresetCase::YukawaHulthen {
                v2: req("V2")?,
                v0: req("V0")?,
                b: req("b")?,
            },
            PresetKind::YukawaInverseSquare => PresetCase::YukawaInverseSquare {
                v1: req("V1")?,
                v2: req("V2")?,
                alpha: req("alpha")?,
            },
            PresetKind::QuadraticExponential => PresetCase::QuadraticExponential {
                phi0: req("phi0")?,
                xi1: req("xi1")?,
                xi2: req("xi2")?,
                xi3: req("xi3")?,
                sigma: req("sigma")?,
            },
            PresetKind::DengFan => PresetCase::DengFan {
                de: req("De")?,
                sigma: req("sigma")?,
                re: req("re")?,
            },
        };
        case.validate()?;
        Ok(case)
    }

    pub fn kind(&self) -> PresetKind {
        match self {
            PresetCase::Yukawa { .. } => PresetKind::Yukawa,
            PresetCase::Coulomb { .. } => PresetKind::Coulomb,
            PresetCase::Mie { .. } => PresetKind::Mie,
            PresetCase::KratzerFues { .. } => PresetKind::KratzerFues,
            PresetCase::ManningRosen { .. } => PresetKind::ManningRosen,
            PresetCase::Eckart { .. } => PresetKind::Eckart,
            PresetCase::Hulthen { .. } => PresetKind::Hulthen,
            PresetCase::YukawaHulthen { .. } => PresetKind::YukawaHulthen,
            PresetCase::YukawaInverseSquare { .. } => PresetKind::YukawaInverseSquare,
            PresetCase::QuadraticExponential { .. } => PresetKind::QuadraticExponential,
            PresetCase::DengFan { .. } => PresetKind::DengFan,
        }
    }

    /// Named parameter values, in [`PresetKind::parameter_keys`] order.
    pub fn params(&self) -> Vec<(&'static str, f64)> {
        match *self {
            PresetCase::Yukawa { v2, alpha } | PresetCase::Coulomb { v2, alpha } => {
                vec![("V2", v2), ("alpha", alpha)]
            }
            PresetCase::Mie { v1, v2, v4, alpha } => vec![("V1", v1), ("V2", v2), ("V4", v4), ("alpha", alpha)],
            PresetCase::KratzerFues { v1, v2, alpha } | PresetCase::YukawaInverseSquare { v1, v2, alpha } => {
                vec![("V1", v1), ("V2", v2), ("alpha", alpha)]
            }
            PresetCase::ManningRosen { v1p, v3, alpha } | PresetCase::Eckart { v1p, v3, alpha } => {
                vec![("V1p", v1p), ("V3", v3), ("alpha", alpha)]
            }
            PresetCase::Hulthen { v0, b } => vec![("V0", v0), ("b", b)],
            PresetCase::YukawaHulthen { v2, v0, b } => vec![("V2", v2), ("V0", v0), ("b", b)],
            PresetCase::QuadraticExponential { phi0, xi1, xi2, xi3, sigma } => vec![
                ("phi0", phi0),
                ("xi1", xi1),
                ("xi2", xi2),
                ("xi3", xi3),
                ("sigma", sigma),
            ],
            PresetCase::DengFan { de, sigma, re } => vec![("De", de), ("sigma", sigma), ("re", re)],
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (key, value) in self.params() {
            finite(key, value)?;
        }
        match *self {
            PresetCase::Yukawa { alpha, .. }
            | PresetCase::Coulomb { alpha, .. }
            | PresetCase::Mie { alpha, .. }
            | PresetCase::KratzerFues { alpha, .. }
            | PresetCase::ManningRosen { alpha, .. }
            | PresetCase::Eckart { alpha, .. }
            | PresetCase::YukawaInverseSquare { alpha, .. } => {
                positive("alpha", alpha)?;
            }
            PresetCase::Hulthen { b, .. } | PresetCase::YukawaHulthen { b, .. } => {
                positive("b", b)?;
            }
            PresetCase::QuadraticExponential { sigma, .. } => {
                positive("sigma", sigma)?;
            }
            PresetCase::DengFan { de, sigma, re } => {
                positive("De", de)?;
                positive("sigma", sigma)?;
                positive("re", re)?;
            }
        }
        Ok(())
    }

    /// Deng–Fan δ₀ = e^{σr_e} − 1.
    pub fn deng_fan_delta0(sigma: f64, re: f64) -> f64 {
        (sigma * re).exp_m1()
    }

    /// Deng–Fan as a quadratic-exponential case: φ₀ = D_e, ξ = (1, −2(1+δ₀), (1+δ₀)²).
    pub fn deng_fan_as_quadratic(de: f64, sigma: f64, re: f64) -> PresetCase {
        let d0 = Self::deng_fan_delta0(sigma, re);
        PresetCase::QuadraticExponential {
            phi0: de,
            xi1: 1.0,
            xi2: -2.0 * (1.0 + d0),
            xi3: (1.0 + d0) * (1.0 + d0),
            sigma,
        }
    }

    /// Mixed-potential parameters, plus human-readable notes on the mapping.
    pub fn to_mixed(&self) -> Result<(PotentialSpec, Vec<String>)> {
        self.validate()?;
        let mut notes = Vec::new();
        let spec = match *self {
            PresetCase::Yukawa { v2, alpha } => PotentialSpec::new(0.0, v2, 0.0, 0.0, alpha)?,
            PresetCase::Coulomb { v2, alpha } => {
                notes.push(format!("alpha = {alpha:e} stands in for the alpha -> 0 limit"));
                PotentialSpec::new(0.0, v2, 0.0, 0.0, alpha)?
            }
            PresetCase::Mie { v1, v2, v4, alpha } => {
                notes.push(format!("alpha = {alpha:e} stands in for the alpha -> 0 limit"));
                PotentialSpec::new(v1, v2, 0.0, v4, alpha)?
            }
            PresetCase::KratzerFues { v1, v2, alpha } => {
                notes.push(format!("alpha = {alpha:e} stands in for the alpha -> 0 limit"));
                PotentialSpec::new(v1, v2, 0.0, 0.0, alpha)?
            }
            PresetCase::ManningRosen { v1p, v3, alpha } => {
                notes.push("V1 = V1p / alpha^2".into());
                PotentialSpec::new(v1p / (alpha * alpha), 0.0, v3, 0.0, alpha)?
            }
            PresetCase::Eckart { v1p, v3, alpha } => {
                notes.push("V1 = V1p / alpha^2, V3 enters with flipped sign".into());
                PotentialSpec::new(v1p / (alpha * alpha), 0.0, -v3, 0.0, alpha)?
            }
            PresetCase::Hulthen { v0, b } => PotentialSpec::new(0.0, 0.0, -0.5 * v0, 0.5 * v0, 0.5 * b)?,
            PresetCase::YukawaHulthen { v2, v0, b } => PotentialSpec::new(0.0, v2, -0.5 * v0, 0.5 * v0, 0.5 * b)?,
            PresetCase::YukawaInverseSquare { v1, v2, alpha } => PotentialSpec::new(v1, v2, 0.0, 0.0, alpha)?,
            PresetCase::QuadraticExponential { phi0, xi1, xi2, xi3, sigma } => {
                notes.push("alpha = sigma / 2 with s = exp(-sigma r)".into());
                PotentialSpec::new(
                    (xi1 + xi2 + xi3) * phi0 / (sigma * sigma),
                    -(xi1 + xi3) * phi0 / sigma,
                    xi1 * phi0,
                    0.0,
                    0.5 * sigma,
                )?
            }
            PresetCase::DengFan { de, sigma, re } => {
                let (spec, mut inner) = Self::deng_fan_as_quadratic(de, sigma, re).to_mixed()?;
                notes.push(format!("delta0 = {:e}", Self::deng_fan_delta0(sigma, re)));
                notes.append(&mut inner);
                spec
            }
        };
        Ok((spec, notes))
    }

    /// The case's own energy formula.
    pub fn direct_energy(&self, problem: &RadialProblem, q: QuantumNumbers) -> Result<f64> {
        self.validate()?;
        let problem = problem.with_ell(q.ell);
        let m = problem.mass;
        let n = f64::from(q.n);
        let x_free = || free_gamma(&problem).map(|g| g + n);
        let x_root = |v1: f64| model::gamma_root(m, v1, problem.shifted_index()).map(|g| g + n);
        let e = match *self {
            PresetCase::Yukawa { v2, alpha } => {
                let x = x_free()?;
                let t = alpha * x + m * v2 / x;
                -t * t / (2.0 * m)
            }
            PresetCase::Coulomb { v2, .. } => {
                let x = x_free()?;
                -m * v2 * v2 / (2.0 * x * x)
            }
            PresetCase::Mie { v1, v2, v4, .. } => {
                let x = x_root(v1)?;
                v4 - m * v2 * v2 / (2.0 * x * x)
            }
            PresetCase::KratzerFues { v1, v2, .. } => {
                let x = x_root(v1)?;
                -m * v2 * v2 / (2.0 * x * x)
            }
            PresetCase::ManningRosen { v1p, v3, alpha } | PresetCase::Eckart { v1p, v3, alpha } => {
                let x = x_root(v1p / (alpha * alpha))?;
                let sign = if matches!(self, PresetCase::Eckart { .. }) { -1.0 } else { 1.0 };
                let b_coef = m * sign * v3 / (2.0 * alpha * alpha);
                -alpha * alpha / (2.0 * m) * (x * x + 4.0 * b_coef * b_coef / (x * x))
            }
            PresetCase::Hulthen { v0, b } => {
                let x = x_free()?;
                let t = b * x / 2.0 - m * v0 / (b * x);
                -t * t / (2.0 * m)
            }
            PresetCase::YukawaHulthen { v2, v0, b } => {
                let x = x_free()?;
                let t = b * x / 2.0 + m * (b * v2 - v0) / (b * x);
                -t * t / (2.0 * m)
            }
            PresetCase::YukawaInverseSquare { v1, v2, alpha } => {
                let x = x_root(v1)?;
                let t = alpha * x + m * v2 / x;
                -t * t / (2.0 * m)
            }
            PresetCase::QuadraticExponential { phi0, xi1, xi2, xi3, sigma } => {
                let x = x_root((xi1 + xi2 + xi3) * phi0 / (sigma * sigma))?;
                let t = sigma * x / 2.0 + m * phi0 * (xi1 - xi3) / (sigma * x);
                phi0 * xi1 - t * t / (2.0 * m)
            }
            PresetCase::DengFan { de, sigma, re } => {
                let d0 = Self::deng_fan_delta0(sigma, re);
                let x = x_root(de * d0 * d0 / (sigma * sigma))?;
                let t = sigma * x / 2.0 - m * de * d0 * (2.0 + d0) / (sigma * x);
                de - t * t / (2.0 * m)
            }
        };
        Ok(e)
    }

    /// The case's decay shorthand c_i = sqrt(2M(V(∞) − E)), equal to 2αc.
    pub fn derived_decay(&self, problem: &RadialProblem, q: QuantumNumbers) -> Result<f64> {
        let e = self.direct_energy(problem, q)?;
        let (spec, _) = self.to_mixed()?;
        let arg = 2.0 * problem.mass * (spec.asymptote() - e);
        if arg < 0.0 {
            return Err(Error::NotBound { n: q.n, c: f64::NAN });
        }
        Ok(arg.sqrt())
    }

    /// |direct − general| / max(|direct|, 1e−12).
    pub fn consistency_check(&self, problem: &RadialProblem, q: QuantumNumbers) -> Result<f64> {
        let direct = self.direct_energy(problem, q)?;
        let (spec, _) = self.to_mixed()?;
        let general = spectrum::energy(&spec, problem, q)?;
        Ok((direct - general).abs() / direct.abs().max(CONSISTENCY_FLOOR))
    }

    /// Tolerance for [`Self::consistency_check`]: exact algebra for finite α,
    /// the O(α) truncation for sentinel cases.
    pub fn consistency_tolerance(&self) -> f64 {
        if self.kind().is_sentinel() {
            1e-6
        } else {
            1e-12
        }
    }
}

/// γ = D/2 + ℓ − 1/2 used by the V₁ = 0 formulas; needs D + 2ℓ ≥ 2.
fn free_gamma(problem: &RadialProblem) -> Result<f64> {
    let m = problem.shifted_index();
    if m < 0 {
        return Err(Error::InvalidParams(format!(
            "D + 2l = {} < 2: the V1 = 0 formula needs D + 2l >= 2",
            m + 2
        )));
    }
    Ok(0.5 * f64::from(problem.dim) + f64::from(problem.ell) - 0.5)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{effective_potential, PotentialForm};

    fn prob() -> RadialProblem {
        RadialProblem::new(1.0, 3, 0).unwrap()
    }

    #[test]
    fn names_round_trip() {
        for k in PresetKind::ALL {
            assert_eq!(k.name().parse::<PresetKind>().unwrap(), k);
        }
        assert_eq!("Kratzer-Fues".parse::<PresetKind>().unwrap(), PresetKind::KratzerFues);
        assert!("morse".parse::<PresetKind>().is_err());
    }

    #[test]
    fn hulthen_mapping() {
        let (spec, _) = PresetCase::Hulthen { v0: 1.0, b: 0.5 }.to_mixed().unwrap();
        assert_eq!((spec.v1, spec.v2, spec.v3, spec.v4, spec.alpha), (0.0, 0.0, -0.5, 0.5, 0.25));
    }

    #[test]
    fn hulthen_direct_energy() {
        let case = PresetCase::Hulthen { v0: 1.0, b: 0.2 };
        let e = case.direct_energy(&prob(), QuantumNumbers::new(0, 0)).unwrap();
        assert!((e + 12.005).abs() < 1e-12);
        assert!(case.consistency_check(&prob(), QuantumNumbers::new(0, 0)).unwrap() < 1e-12);
    }

    #[test]
    fn coulomb_direct_energy() {
        let case = PresetCase::Coulomb { v2: -1.0, alpha: DEFAULT_SMALL_ALPHA };
        let e = case.direct_energy(&prob(), QuantumNumbers::new(0, 0)).unwrap();
        assert_eq!(e, -0.5);
        assert!(case.consistency_check(&prob(), QuantumNumbers::new(1, 1)).unwrap() < 1e-6);
    }

    #[test]
    fn deng_fan_mapping() {
        let e = std::f64::consts::E;
        match PresetCase::deng_fan_as_quadratic(2.0, 1.0, 1.0) {
            PresetCase::QuadraticExponential { phi0, xi1, xi2, xi3, .. } => {
                assert_eq!((phi0, xi1), (2.0, 1.0));
                assert!((xi2 + 2.0 * e).abs() < 1e-14);
                assert!((xi3 - e * e).abs() < 1e-13);
            }
            other => panic!("{other:?}"),
        }
        assert!((PresetCase::deng_fan_delta0(1.0, 1.0) - 1.718281828459045).abs() < 1e-15);
    }

    #[test]
    fn deng_fan_formula_equals_quadratic_formula() {
        let p = RadialProblem::new(3.0, 3, 1).unwrap();
        let df = PresetCase::DengFan { de: 4.0, sigma: 0.8, re: 1.3 };
        let qe = PresetCase::deng_fan_as_quadratic(4.0, 0.8, 1.3);
        for n in 0..3 {
            let q = QuantumNumbers::new(n, 1);
            let a = df.direct_energy(&p, q).unwrap();
            let b = qe.direct_energy(&p, q).unwrap();
            assert!((a - b).abs() < 1e-12 * a.abs());
        }
    }

    #[test]
    fn quadratic_exponential_matches_its_shape_pointwise() {
        let (phi0, xi1, xi2, xi3, sigma) = (1.7, 0.8, -2.5, 1.9, 0.6);
        let case = PresetCase::QuadraticExponential { phi0, xi1, xi2, xi3, sigma };
        let (spec, _) = case.to_mixed().unwrap();
        // D = 3, ℓ = 0 removes the centrifugal term
        let p = prob();
        for i in 1..=10 {
            let r = 0.35 * f64::from(i);
            let y = (sigma * r).exp();
            let want = phi0 * (xi1 * y * y + xi2 * y + xi3) / ((y - 1.0) * (y - 1.0));
            let got = effective_potential(&spec, &p, PotentialForm::Pekeris, r);
            assert!((got - want).abs() < 1e-11 * want.abs().max(1.0), "r={r}: {got} vs {want}");
        }
    }

    #[test]
    fn quadratic_exponential_inversion() {
        let (phi0, xi1, xi2, xi3, sigma) = (2.5, 1.1, -3.0, 2.2, 0.9);
        let (s, _) = PresetCase::QuadraticExponential { phi0, xi1, xi2, xi3, sigma }.to_mixed().unwrap();
        let recovered = (
            s.v3 / phi0,
            (sigma * sigma * s.v1 + sigma * s.v2) / phi0,
            (-sigma * s.v2 - s.v3) / phi0,
        );
        assert!((recovered.0 - xi1).abs() < 1e-14);
        assert!((recovered.1 - xi2).abs() < 1e-13);
        assert!((recovered.2 - xi3).abs() < 1e-13);
    }

    #[test]
    fn eckart_is_manning_rosen_with_flipped_v3() {
        let p = RadialProblem::new(1.0, 3, 0).unwrap();
        let q = QuantumNumbers::new(0, 0);
        let mr = PresetCase::ManningRosen { v1p: 0.02, v3: -1.5, alpha: 0.3 };
        let ek = PresetCase::Eckart { v1p: 0.02, v3: 1.5, alpha: 0.3 };
        assert_eq!(mr.to_mixed().unwrap().0, ek.to_mixed().unwrap().0);
        let c_mr = mr.derived_decay(&p, q).unwrap();
        let c_ek = ek.derived_decay(&p, q).unwrap();
        assert!((c_mr - c_ek).abs() < 1e-14);
        let e = ek.direct_energy(&p, q).unwrap();
        assert!((c_ek - (-2.0 * 1.5 - 2.0 * e).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn hulthen_is_yukawa_hulthen_without_v2() {
        let p = RadialProblem::new(1.3, 4, 2).unwrap();
        for n in 0..3 {
            let q = QuantumNumbers::new(n, 2);
            let a = PresetCase::Hulthen { v0: 3.0, b: 0.4 }.direct_energy(&p, q).unwrap();
            let b = PresetCase::YukawaHulthen { v2: 0.0, v0: 3.0, b: 0.4 }.direct_energy(&p, q).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn decay_shorthand_is_two_alpha_c() {
        let p = RadialProblem::new(1.0, 3, 1).unwrap();
        let q = QuantumNumbers::new(0, 1);
        let cases = [
            PresetCase::Yukawa { v2: -2.0, alpha: 0.1 },
            PresetCase::ManningRosen { v1p: 0.05, v3: -2.0, alpha: 0.2 },
            PresetCase::YukawaHulthen { v2: -0.5, v0: 2.0, b: 0.3 },
            PresetCase::QuadraticExponential { phi0: 3.0, xi1: 1.0, xi2: -4.0, xi3: 4.0, sigma: 0.5 },
            PresetCase::DengFan { de: 6.0, sigma: 0.7, re: 1.2 },
        ];
        for case in cases {
            let (spec, _) = case.to_mixed().unwrap();
            let st = spectrum::bound_state(&spec, &p, 0).unwrap();
            let ci = case.derived_decay(&p, q).unwrap();
            assert!((ci - 2.0 * spec.alpha * st.c).abs() < 1e-10 * ci, "{case:?}");
        }
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        assert!(PresetCase::DengFan { de: -1.0, sigma: 1.0, re: 1.0 }.to_mixed().is_err());
        assert!(PresetCase::QuadraticExponential { phi0: 1.0, xi1: 1.0, xi2: 1.0, xi3: 1.0, sigma: -1.0 }
            .to_mixed()
            .is_err());
        assert!(PresetCase::Hulthen { v0: 1.0, b: 0.0 }.to_mixed().is_err());
        assert!(PresetCase::from_named(PresetKind::Hulthen, |k| (k == "V0").then_some(1.0)).is_err());
    }

    #[test]
    fn free_gamma_needs_two_dimensions() {
        let p = RadialProblem::new(1.0, 1, 0).unwrap();
        assert!(PresetCase::Hulthen { v0: 1.0, b: 0.2 }
            .direct_energy(&p, QuantumNumbers::new(0, 0))
            .is_err());
    }

    #[test]
    fn sentinel_defaults() {
        let c = PresetCase::from_named(PresetKind::Coulomb, |k| (k == "V2").then_some(-1.0)).unwrap();
        assert_eq!(c, PresetCase::Coulomb { v2: -1.0, alpha: DEFAULT_SMALL_ALPHA });
    }
}
