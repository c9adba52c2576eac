use anyhow::{bail, Result};
use boundstate::spectrum::{self, BoundState};
use serde_json::json;

use crate::settings::Settings;
use crate::{emit, fmt_float, EXIT_NOT_BOUND, EXIT_OK};

const COLUMNS: &str = "dim,ell,n,energy,c,gamma,admissible,positive_energy";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Csv,
    Json,
}

fn format_of(settings: &Settings) -> Result<Format> {
    match settings.string("format")?.as_deref() {
        None | Some("csv") => Ok(Format::Csv),
        Some("json") => Ok(Format::Json),
        Some(other) => bail!("--format must be csv or json, got '{other}'"),
    }
}

pub fn run(settings: &Settings) -> Result<u8> {
    let format = format_of(settings)?;
    let (pot, notes) = settings.potential()?.spec()?;
    let problem = settings.problem()?;
    let ell_max = match settings.uint("ell_max")? {
        Some(l) => l,
        None => problem.ell,
    };
    let nmax = settings.uint("nmax")?;
    let states: Vec<BoundState> = spectrum::enumerate_bound_states(&pot, &problem, ell_max)?
        .into_iter()
        .filter(|s| nmax.is_none_or(|m| s.n <= m))
        .collect();

    let text = match format {
        Format::Csv => csv(settings, &notes, &states),
        Format::Json => json_table(settings, &notes, &states)?,
    };
    emit(settings.string("output")?.as_deref(), &text)?;
    if states.is_empty() {
        eprintln!("no bound states below the continuum threshold {}", pot.asymptote());
        return Ok(EXIT_NOT_BOUND);
    }
    Ok(EXIT_OK)
}

fn csv(settings: &Settings, notes: &[String], states: &[BoundState]) -> String {
    let mut out = String::new();
    for line in settings.header_lines() {
        out.push_str(&line);
        out.push('\n');
    }
    for note in notes {
        out.push_str(&format!("# note: {note}\n"));
    }
    out.push_str(COLUMNS);
    out.push('\n');
    for s in states {
        out.push_str(&format!(
            "{},{},{},{},{},{},true,{}\n",
            s.dim,
            s.ell,
            s.n,
            fmt_float(s.energy),
            fmt_float(s.c),
            fmt_float(s.gamma),
            s.positive_energy
        ));
    }
    out
}

fn json_table(settings: &Settings, notes: &[String], states: &[BoundState]) -> Result<String> {
    let rows: Vec<_> = states
        .iter()
        .map(|s| {
            json!({
                "dim": s.dim,
                "ell": s.ell,
                "n": s.n,
                "energy": s.energy,
                "c": s.c,
                "gamma": s.gamma,
                "admissible": true,
                "positive_energy": s.positive_energy,
            })
        })
        .collect();
    let doc = json!({
        "states": rows,
        "notes": notes,
        "config_echo": settings.echo(),
    });
    Ok(serde_json::to_string_pretty(&doc)? + "\n")
}
