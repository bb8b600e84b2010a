// Copyright 2026 the classa Authors
// SPDX-License-Identifier: Apache-2.0

//! Command-line front end. [`run`] is the whole program minus process exit.
//!
//! Exit codes: 0 success, 1 no certificate holds, 2 unreadable or invalid
//! input (and unknown example id), 3 degenerate line, 4 a held certificate
//! disagrees with the numerical oracle, 5 numerical failure while sampling.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::audit::{self, class_a_report, negative_witness, subdivision_sv_profile, zhao_ratio};
use crate::certify::{certify, monotonicity_of_model, MIN_GRID};
use crate::closed_form::build_model;
use crate::curve::CurveSpec;
use crate::document::{AuditDocument, Scalar, SpecDocument};
use crate::error::Error;
use crate::export::{curve_csv, curve_svg, polygon_csv, sample_curve, DEFAULT_SAMPLES};
use crate::registry::{records_for, registry};
use crate::small::{MatN, VecN};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO_CERTIFICATE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;
pub const EXIT_ALARM: i32 = 4;
pub const EXIT_NUMERIC: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "classa", version, about = "Matrix-generated Bézier curves and their curvature")]
struct Cli {
    /// Sample count for the monotonicity oracle and the f(t) table.
    #[arg(long, global = true, default_value_t = 2001, value_parser = clap::value_parser!(u32).range(MIN_GRID as i64..))]
    grid: u32,
    /// Output file (defaults to the input path with a new extension).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Svg,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sample a curve to CSV (control points go to <stem>.polygon.csv).
    Generate { input: PathBuf },
    /// Evaluate every monotonicity certificate and the numerical oracle.
    Certify { input: PathBuf },
    /// Replay the worked examples against their published verdicts.
    Examples { id: Option<String> },
    /// Audit the singular-value matrix conditions.
    FarinAudit {
        input: Option<PathBuf>,
        #[arg(long, requires = "sigma_max", conflicts_with = "input")]
        sigma_min: Option<f64>,
        #[arg(long, requires = "sigma_min", conflicts_with = "input")]
        sigma_max: Option<f64>,
    },
    /// Draw the curve, its control polygon and its curvature as SVG.
    Plot { input: PathBuf },
}

/// Failure carrying its exit code; the message goes to standard error.
struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::DegenerateLine => EXIT_DEGENERATE,
            Error::VanishingSpeed { .. } | Error::SingularSubdivision { .. } | Error::CollinearPair { .. } => {
                EXIT_NUMERIC
            }
            _ => EXIT_INPUT,
        };
        Failure(code, e.to_string())
    }
}

type CliResult = Result<i32, Failure>;

/// Parse `args` (including the program name) and execute.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{text}");
            } else {
                let _ = write!(stdout, "{text}");
            }
            return e.exit_code();
        }
    };
    match dispatch(&cli, stdout) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            code
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> CliResult {
    let grid = cli.grid as usize;
    match &cli.command {
        Command::Generate { input } => match cli.format.unwrap_or(Format::Csv) {
            Format::Csv => generate(input, cli.out.as_deref(), out),
            Format::Svg => plot(input, cli.out.as_deref(), out),
        },
        Command::Plot { input } => plot(input, cli.out.as_deref(), out),
        Command::Certify { input } => certify_cmd(input, grid, out),
        Command::Examples { id } => examples(id.as_deref(), grid, out),
        Command::FarinAudit {
            input,
            sigma_min,
            sigma_max,
        } => match (input, sigma_min, sigma_max) {
            (Some(path), _, _) => audit_document(path, grid, out),
            (None, Some(lo), Some(hi)) => audit_sigmas(*lo, *hi, grid, out),
            _ => Err(Failure(EXIT_INPUT, "give a matrix document or --sigma-min and --sigma-max".into())),
        },
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(EXIT_INPUT, format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure(EXIT_INPUT, format!("cannot write {}: {e}", path.display())))
}

fn load_spec(path: &Path) -> Result<CurveSpec, Failure> {
    Ok(SpecDocument::parse(&read(path)?)?.to_spec()?)
}

fn emit(line: &str, out: &mut dyn Write) {
    let _ = writeln!(out, "{line}");
}

/// `dir/stem.polygon.csv` next to `dir/stem.csv`.
pub fn polygon_path(curve_csv: &Path) -> PathBuf {
    let stem = curve_csv.file_stem().unwrap_or_default().to_string_lossy();
    curve_csv.with_file_name(format!("{stem}.polygon.csv"))
}

fn generate(input: &Path, dest: Option<&Path>, out: &mut dyn Write) -> CliResult {
    let spec = load_spec(input)?;
    if build_model(&spec)?.degenerate {
        return Err(Error::DegenerateLine.into());
    }
    let curve = sample_curve(&spec, DEFAULT_SAMPLES)?;
    let path = dest.map_or_else(|| input.with_extension("csv"), Path::to_path_buf);
    let poly = polygon_path(&path);
    write_file(&path, &curve_csv(&curve))?;
    write_file(&poly, &polygon_csv(&curve))?;
    emit(&format!("wrote {} and {}", path.display(), poly.display()), out);
    Ok(EXIT_OK)
}

fn plot(input: &Path, dest: Option<&Path>, out: &mut dyn Write) -> CliResult {
    let spec = load_spec(input)?;
    let curve = sample_curve(&spec, DEFAULT_SAMPLES)?;
    let path = dest.map_or_else(|| input.with_extension("svg"), Path::to_path_buf);
    write_file(&path, &curve_svg(&curve))?;
    emit(&format!("wrote {}", path.display()), out);
    Ok(EXIT_OK)
}

fn certify_cmd(input: &Path, grid: usize, out: &mut dyn Write) -> CliResult {
    let spec = load_spec(input)?;
    let model = build_model(&spec)?;
    if model.degenerate {
        return Err(Error::DegenerateLine.into());
    }
    emit(&format!("generator: {}", model.spectral.variant_name()), out);
    emit(&format!("kappa(0) = {:e}", model.kappa0), out);
    let certs = certify(&spec);
    for c in &certs {
        let mut line = format!("{}: {}", c.name, if c.holds { "holds" } else { "fails" });
        if c.holds {
            line.push_str(&format!(" ({})", c.direction.as_str()));
        }
        for (k, v) in &c.details {
            line.push_str(&format!(" {k}={v}"));
        }
        if let Some(r) = &c.reason {
            line.push_str(&format!(" [{r}]"));
        }
        emit(&line, out);
    }
    let verdict = monotonicity_of_model(&model, grid)?;
    let mut line = format!("oracle: {} (grid {})", verdict.kind, verdict.grid_size);
    if !verdict.extrema_locations.is_empty() {
        let ts: Vec<_> = verdict.extrema_locations.iter().map(|t| format!("{t:.10}")).collect();
        line.push_str(&format!(" extrema at t = {}", ts.join(", ")));
    }
    emit(&line, out);

    let held: Vec<_> = certs.iter().filter(|c| c.holds).collect();
    if held.is_empty() {
        emit("result: no certificate holds", out);
        return Ok(EXIT_NO_CERTIFICATE);
    }
    let contradicted: Vec<_> = held
        .iter()
        .filter(|c| c.direction.implied_kind(model.kappa0) != Some(verdict.kind))
        .map(|c| c.name.as_str())
        .collect();
    if !contradicted.is_empty() {
        emit(&format!("ALARM: oracle contradicts {}", contradicted.join(", ")), out);
        return Ok(EXIT_ALARM);
    }
    emit("result: certified, oracle agrees", out);
    Ok(EXIT_OK)
}

fn examples(filter: Option<&str>, grid: usize, out: &mut dyn Write) -> CliResult {
    let records = match filter {
        None => registry(),
        Some(f) => {
            let found = match f.parse::<u32>() {
                Ok(id) => records_for(id),
                Err(_) => registry().into_iter().filter(|r| r.label == f).collect(),
            };
            if found.is_empty() {
                return Err(Failure(EXIT_INPUT, format!("unknown example id `{f}`")));
            }
            found
        }
    };
    emit(&format!("{:<6} {:>6} {:<14} {:<20} {:<10} result", "id", "degree", "expected", "oracle", "figure"), out);
    let mut failures = 0;
    for rec in &records {
        let spec = rec.spec.to_spec()?;
        let verdict = build_model(&spec).and_then(|m| monotonicity_of_model(&m, grid));
        let (oracle, pass) = match &verdict {
            Ok(v) => (v.kind.to_string(), rec.matches(v.kind)),
            Err(e) => (format!("error: {e}"), false),
        };
        if !pass {
            failures += 1;
        }
        let expected = if rec.expected_monotone { "monotone" } else { "non-monotone" };
        emit(
            &format!(
                "{:<6} {:>6} {:<14} {:<20} {:<10} {}",
                rec.label,
                spec.degree,
                expected,
                oracle,
                rec.figure_ref,
                if pass { "PASS" } else { "FAIL" }
            ),
            out,
        );
    }
    emit(&format!("{} of {} verdicts reproduced", records.len() - failures, records.len()), out);
    Ok(if failures == 0 { EXIT_OK } else { EXIT_NO_CERTIFICATE })
}

fn report_profile(sigma_min: f64, sigma_max: f64, grid: usize, out: &mut dyn Write) -> Result<(), Failure> {
    let profile = subdivision_sv_profile(sigma_min, sigma_max, grid)?;
    let (tmin, fmin) = profile
        .points
        .iter()
        .copied()
        .fold((0.0, f64::INFINITY), |acc, p| if p.1 < acc.1 { p } else { acc });
    emit(&format!("f'(0) = {}", profile.f_prime_at_zero), out);
    emit(&format!("min f on [0,1] (grid {grid}) = {fmin:e} at t = {tmin}"), out);
    match negative_witness(sigma_min, sigma_max) {
        Some(t) => emit(
            &format!(
                "witness: f({t:e}) = {:e} < 0; the condition is lost under subdivision",
                audit::subdivision_f(sigma_min, sigma_max, t)
            ),
            out,
        ),
        None if fmin >= 0.0 => emit("corrected condition survives subdivision (min f >= 0)", out),
        None => emit("f is negative away from t in (0, 0.1]", out),
    }
    Ok(())
}

fn audit_sigmas(sigma_min: f64, sigma_max: f64, grid: usize, out: &mut dyn Write) -> CliResult {
    emit(&format!("sigma_min = {sigma_min}, sigma_max = {sigma_max}"), out);
    emit(
        &format!(
            "corrected condition sigma_min^3 >= sigma_max: {} ({} vs {})",
            sigma_min.powi(3) >= sigma_max,
            sigma_min.powi(3),
            sigma_max
        ),
        out,
    );
    emit(
        &format!(
            "misprinted condition sigma_min^2 >= sigma_max: {} ({} vs {})",
            sigma_min.powi(2) >= sigma_max,
            sigma_min.powi(2),
            sigma_max
        ),
        out,
    );
    report_profile(sigma_min, sigma_max, grid, out)?;
    Ok(EXIT_OK)
}

fn audit_document(path: &Path, grid: usize, out: &mut dyn Write) -> CliResult {
    let doc = AuditDocument::parse(&read(path)?)?;
    let values: Vec<f64> = doc.matrix.iter().copied().map(Scalar::value).collect();
    let vector: Option<Vec<f64>> = doc.vector.as_ref().map(|v| v.iter().copied().map(Scalar::value).collect());
    let degree = doc.degree.unwrap_or(3);
    if doc.dimension() == 3 {
        let m = MatN([
            [values[0], values[1], values[2]],
            [values[3], values[4], values[5]],
            [values[6], values[7], values[8]],
        ]);
        let v = vector.map(|v| VecN([v[0], v[1], v[2]]));
        audit_matrix(&m, v.as_ref(), degree, grid, out)
    } else {
        let m = MatN([[values[0], values[1]], [values[2], values[3]]]);
        let v = vector.map(|v| VecN([v[0], v[1]]));
        audit_matrix(&m, v.as_ref(), degree, grid, out)
    }
}

fn audit_matrix<const N: usize>(
    m: &MatN<N>,
    v: Option<&VecN<N>>,
    degree: usize,
    grid: usize,
    out: &mut dyn Write,
) -> CliResult {
    let report = class_a_report(m, None, grid)?;
    emit(
        &format!(
            "expansion condition: {} (min eigenvalue of symmetric part = {})",
            report.expansion_holds, report.min_symmetric_eigenvalue
        ),
        out,
    );
    let sv: Vec<_> = report.sv.iter().map(|s| s.to_string()).collect();
    emit(&format!("singular values: {}", sv.join(" ")), out);
    emit(&format!("corrected condition sigma_min^3 >= sigma_max: {}", report.sv_condition_holds), out);
    emit(&format!("misprinted condition sigma_min^2 >= sigma_max: {}", report.misprint_condition_holds), out);
    let (smax, smin) = (report.sv[0], report.sv[N - 1]);
    if smin > 0.0 {
        report_profile(smin, smax, grid, out)?;
    }
    if let Some(v) = v {
        emit(&format!("v.Mv / v.v = {}", zhao_ratio(m, v)?), out);
        match audit::proposition1(m, v, degree) {
            Ok(p) => {
                emit(
                    &format!(
                        "proposition 1 (n = {}): hypothesis {} ({:e} vs {:e}), conclusion {}",
                        p.n, p.hypothesis_holds, p.lhs, p.rhs, p.conclusion_holds
                    ),
                    out,
                );
            }
            Err(e) => emit(&format!("proposition 1 not evaluated: {e}"), out),
        }
    }
    Ok(EXIT_OK)
}
