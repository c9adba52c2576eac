//! Command-line front end: `spectrum`, `wavefunction` and `verify`.
//!
//! Exit codes: 0 success, 1 input error, 2 no bound state, 3 verification failure.

mod settings;
mod spectrum;
mod verify;
mod wavefunction;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

pub use settings::{PotentialSource, Settings, Value, KNOWN_KEYS};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_NOT_BOUND: u8 = 2;
pub const EXIT_VERIFY_FAILED: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "boundstate", version, about = "Bound-state spectra of the mixed screened potential")]
pub struct Cli {
    /// Flat TOML file with default values for any flag (flags win).
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form energy levels for ℓ = 0..=ell-max.
    #[command(allow_negative_numbers = true)]
    Spectrum(SpectrumArgs),
    /// Normalized radial eigenfunction on a uniform grid.
    #[command(allow_negative_numbers = true)]
    Wavefunction(WavefunctionArgs),
    /// Cross-checks against the iteration method, the oracle and quadrature.
    #[command(allow_negative_numbers = true)]
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Default, Args)]
pub struct PotentialArgs {
    /// Named special case (yukawa, coulomb, mie, kratzer_fues, manning_rosen,
    /// eckart, hulthen, yukawa_hulthen, yukawa_inverse_square,
    /// quadratic_exponential, deng_fan).
    #[arg(long)]
    pub preset: Option<String>,
    #[arg(long = "V1")]
    pub v1: Option<f64>,
    #[arg(long = "V2")]
    pub v2: Option<f64>,
    #[arg(long = "V3")]
    pub v3: Option<f64>,
    #[arg(long = "V4")]
    pub v4: Option<f64>,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long = "V0")]
    pub v0: Option<f64>,
    #[arg(long)]
    pub b: Option<f64>,
    #[arg(long = "V1p")]
    pub v1p: Option<f64>,
    #[arg(long)]
    pub phi0: Option<f64>,
    #[arg(long)]
    pub xi1: Option<f64>,
    #[arg(long)]
    pub xi2: Option<f64>,
    #[arg(long)]
    pub xi3: Option<f64>,
    #[arg(long)]
    pub sigma: Option<f64>,
    #[arg(long = "De")]
    pub de: Option<f64>,
    #[arg(long)]
    pub re: Option<f64>,
    /// Particle mass (default 1).
    #[arg(long)]
    pub mass: Option<f64>,
    /// Spatial dimension D (default 3).
    #[arg(long)]
    pub dim: Option<u32>,
    /// Angular momentum ℓ (default 0).
    #[arg(long)]
    pub ell: Option<u32>,
}

impl PotentialArgs {
    fn apply(&self, s: &mut Settings) {
        s.set_str("preset", self.preset.as_deref());
        for (key, v) in [
            ("V1", self.v1),
            ("V2", self.v2),
            ("V3", self.v3),
            ("V4", self.v4),
            ("alpha", self.alpha),
            ("V0", self.v0),
            ("b", self.b),
            ("V1p", self.v1p),
            ("phi0", self.phi0),
            ("xi1", self.xi1),
            ("xi2", self.xi2),
            ("xi3", self.xi3),
            ("sigma", self.sigma),
            ("De", self.de),
            ("re", self.re),
            ("mass", self.mass),
        ] {
            s.set_num(key, v);
        }
        s.set_num("dim", self.dim.map(f64::from));
        s.set_num("ell", self.ell.map(f64::from));
    }
}

#[derive(Debug, Clone, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub potential: PotentialArgs,
    /// Largest ℓ listed (default: --ell, else 0).
    #[arg(long)]
    pub ell_max: Option<u32>,
    /// Largest radial quantum number listed.
    #[arg(long)]
    pub nmax: Option<u32>,
    /// csv or json.
    #[arg(long)]
    pub format: Option<String>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct WavefunctionArgs {
    #[command(flatten)]
    pub potential: PotentialArgs,
    /// Radial quantum number (default 0).
    #[arg(long)]
    pub n: Option<u32>,
    /// Grid end (default: radius where s^c falls below 1e-10).
    #[arg(long)]
    pub r_max: Option<f64>,
    /// Grid points, at least 16 (default 512).
    #[arg(long)]
    pub points: Option<u32>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub potential: PotentialArgs,
    /// Comma-separated subset of aim,oracle,pekeris,normalization.
    #[arg(long)]
    pub modes: Option<String>,
    /// Relative shift applied to the closed-form decay exponents (test hook).
    #[arg(long)]
    pub perturb: Option<f64>,
    /// Largest radial quantum number checked (default 2).
    #[arg(long)]
    pub nmax: Option<u32>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

fn load_settings(config: Option<&PathBuf>) -> Result<Settings> {
    match config {
        Some(path) => Settings::from_file(path),
        None => Ok(Settings::default()),
    }
}

/// Writes to the output file if given, else stdout.
pub(crate) fn emit(output: Option<&str>, text: &str) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, text).with_context(|| format!("cannot write {path}")),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

/// 17 significant digits in scientific notation.
pub(crate) fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

fn dispatch(cli: Cli) -> Result<u8> {
    let mut settings = load_settings(cli.config.as_ref())?;
    match cli.command {
        Command::Spectrum(args) => {
            args.potential.apply(&mut settings);
            settings.set_num("ell_max", args.ell_max.map(f64::from));
            settings.set_num("nmax", args.nmax.map(f64::from));
            settings.set_str("format", args.format.as_deref());
            settings.set_str("output", args.output.as_ref().and_then(|p| p.to_str()));
            spectrum::run(&settings)
        }
        Command::Wavefunction(args) => {
            args.potential.apply(&mut settings);
            settings.set_num("n", args.n.map(f64::from));
            settings.set_num("r_max", args.r_max);
            settings.set_num("points", args.points.map(f64::from));
            settings.set_str("output", args.output.as_ref().and_then(|p| p.to_str()));
            wavefunction::run(&settings)
        }
        Command::Verify(args) => {
            args.potential.apply(&mut settings);
            settings.set_str("modes", args.modes.as_deref());
            settings.set_num("perturb", args.perturb);
            settings.set_num("nmax", args.nmax.map(f64::from));
            settings.set_str("output", args.output.as_ref().and_then(|p| p.to_str()));
            verify::run(&settings)
        }
    }
}

fn exit_code_for(err: &anyhow::Error) -> u8 {
    let not_bound = err.chain().any(|cause| {
        matches!(
            cause.downcast_ref::<boundstate::Error>(),
            Some(boundstate::Error::NotBound { .. } | boundstate::Error::NoBoundStates { .. })
        )
    });
    if not_bound {
        EXIT_NOT_BOUND
    } else {
        EXIT_INPUT
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            exit_code_for(&e)
        }
    }
}
