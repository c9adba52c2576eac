use anyhow::{bail, Result};
use boundstate::RadialWavefunction;

use crate::settings::Settings;
use crate::{emit, fmt_float, EXIT_OK};

pub const DEFAULT_POINTS: u32 = 512;
pub const MIN_POINTS: u32 = 16;

pub fn run(settings: &Settings) -> Result<u8> {
    let (pot, notes) = settings.potential()?.spec()?;
    let problem = settings.problem()?;
    let n = settings.uint("n")?.unwrap_or(0);
    let points = settings.uint("points")?.unwrap_or(DEFAULT_POINTS);
    if points < MIN_POINTS {
        bail!("--points must be at least {MIN_POINTS}, got {points}");
    }
    let wf = RadialWavefunction::new(&pot, &problem, n)?;
    let r_max = match settings.num("r_max")? {
        Some(r) if r.is_finite() && r > 0.0 => r,
        Some(r) => bail!("--r-max must be positive and finite, got {r}"),
        None => wf.decay_radius(),
    };

    let mut out = String::new();
    for line in settings.header_lines() {
        out.push_str(&line);
        out.push('\n');
    }
    for note in &notes {
        out.push_str(&format!("# note: {note}\n"));
    }
    let st = &wf.state;
    out.push_str(&format!("# dim = {}, ell = {}, n = {}\n", st.dim, st.ell, st.n));
    out.push_str(&format!("# K = {}\n", fmt_float(wf.k_norm)));
    out.push_str(&format!("# c = {}\n", fmt_float(st.c)));
    out.push_str(&format!("# gamma = {}\n", fmt_float(st.gamma)));
    out.push_str(&format!("# energy = {}\n", fmt_float(st.energy)));
    out.push_str("r,R,full_radial_factor\n");
    for i in 1..=points {
        let r = r_max * f64::from(i) / f64::from(points);
        out.push_str(&format!(
            "{},{},{}\n",
            fmt_float(r),
            fmt_float(wf.eval(r)),
            fmt_float(wf.full_radial_factor(st.dim, r))
        ));
    }
    emit(settings.string("output")?.as_deref(), &out)?;
    Ok(EXIT_OK)
}
