//! Command-line front end: spectrum tables, Frobenius multiplicities and the
//! `verify-all` invariant suite.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on usage
//! errors.

mod report;
mod suite;

use std::ffi::OsString;
use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

pub use report::{Check, Parameter, RunReport};
pub use suite::{run_suite, schur_weyl_prediction, SuiteBounds, CHECK_NAMES};

use crate::combinatorics::{partitions_of, removed_cell, Partition};
use crate::error::Error;
use crate::induction::{
    branching_multiplicities, build_u, frobenius_multiplicities_characters, reduce_induced,
};
use crate::rational::render;
use crate::rational::{integer, Rational};
use crate::spectra::{
    jm_spectrum_table, pbt_spectrum_table, JmMode, SpectrumContext, SpectrumTable,
};
use crate::tensorlab::{
    jm_tensor, pair_projector, partial_transpose_last, pbt_operator, verify_pbt_spectrum, DimCap,
};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "prirlab",
    version,
    about = "Jucys-Murphy and PBT spectra, Frobenius reciprocity via PRIRs, and brute-force tensor checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Eigenvalues of the Jucys-Murphy element J_m
    JmSpectrum(JmArgs),
    /// Eigenvalues of the port-based teleportation operator
    Pbt(PbtArgs),
    /// Multiplicities of Ind(β) from S(m-1) to S(m), by reduction and by characters
    Frobenius(FrobeniusArgs),
    /// Run every invariant check
    VerifyAll(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Irrep,
    Regular,
}

#[derive(Debug, Args)]
struct JmArgs {
    #[arg(long)]
    m: usize,
    /// Defaults to irrep when --mu is given, regular otherwise
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    /// Irrep label as comma-separated parts, e.g. 2,1
    #[arg(long)]
    mu: Option<Partition>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Debug, Args)]
struct PbtArgs {
    /// Number of ports N
    #[arg(long)]
    ports: usize,
    /// Local dimension d
    #[arg(long)]
    dim: usize,
    /// Diagonalise the operator and compare with the table
    #[arg(long)]
    verify: bool,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Debug, Args)]
struct FrobeniusArgs {
    #[arg(long)]
    m: usize,
    /// Partition of m-1, comma-separated
    #[arg(long, allow_hyphen_values = true)]
    beta: Partition,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 5)]
    m_max: usize,
    #[arg(long, default_value_t = 2)]
    d_max: usize,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[arg(long, hide = true)]
    inject_fault: Option<String>,
}

/// Why a command did not produce a report.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Runtime(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Runtime(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(Error::Inconsistent(format!("output: {e}")))
    }
}

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let code = run(args, &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(code)
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_PASS,
                _ => EXIT_USAGE,
            };
            let text = e.render().to_string();
            let _ = if code == EXIT_PASS {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let started = Instant::now();
    let result = match cli.command {
        Command::JmSpectrum(a) => jm_spectrum(a, started, out),
        Command::Pbt(a) => pbt(a, started, out),
        Command::Frobenius(a) => frobenius(a, started, out),
        Command::VerifyAll(a) => verify_all(a, started, out),
    };
    match result {
        Ok(report) if report.passed() => EXIT_PASS,
        Ok(report) => {
            let _ = writeln!(err, "failed checks: {}", report.failed_checks().join(", "));
            EXIT_CHECK_FAILED
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Runtime(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_CHECK_FAILED
        }
    }
}

fn finish(report: &mut RunReport, started: Instant) {
    report.elapsed_ms = started.elapsed().as_millis() as u64;
}

#[derive(Serialize)]
struct TableOutput<'a> {
    report: &'a RunReport,
    table: &'a SpectrumTable,
}

fn table_checks(table: &SpectrumTable) -> Result<Vec<Check>, Failure> {
    let mut checks = vec![Check::exact(
        "total_multiplicity",
        table.total_multiplicity() == table.expected_total(),
    )
    .with_detail(format!(
        "{} of {}",
        table.total_multiplicity(),
        table.expected_total()
    ))];
    match &table.context {
        SpectrumContext::Pbt { ports, dim } => {
            let expected = integer((*ports as i64) * (*dim as i64).pow(*ports as u32));
            checks.push(
                Check::exact("trace", table.trace() == expected)
                    .with_detail(render(&table.trace())),
            );
        }
        _ => {
            let mut ok = true;
            for r in &table.records {
                ok &= r.eigenvalue == integer(removed_cell(&r.mu, &r.alpha)?.content());
            }
            checks.push(Check::exact("gamma_content", ok));
        }
    }
    Ok(checks)
}

fn emit_table(
    table: &SpectrumTable,
    report: &RunReport,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &TableOutput { report, table })
                .map_err(json_error)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record([
                "mu",
                "alpha",
                "eigenvalue_num",
                "eigenvalue_den",
                "multiplicity",
            ])
            .map_err(csv_error)?;
            for r in &table.records {
                w.write_record([
                    r.mu.to_string(),
                    r.alpha.to_string(),
                    r.eigenvalue.numer().to_string(),
                    r.eigenvalue.denom().to_string(),
                    r.multiplicity.to_string(),
                ])
                .map_err(csv_error)?;
            }
            if let Some(z) = table.zero_fill {
                w.write_record(["", "", "0", "1", &z.to_string()])
                    .map_err(csv_error)?;
            }
            w.flush()?;
        }
        Format::Table => {
            writeln!(out, "{}", header(report))?;
            writeln!(
                out,
                "{:<14}{:<14}{:>12}{:>14}",
                "mu", "alpha", "eigenvalue", "multiplicity"
            )?;
            for r in &table.records {
                writeln!(
                    out,
                    "{:<14}{:<14}{:>12}{:>14}",
                    r.mu.to_string(),
                    r.alpha.to_string(),
                    render(&r.eigenvalue),
                    r.multiplicity
                )?;
            }
            if let Some(z) = table.zero_fill {
                writeln!(
                    out,
                    "{:<14}{:<14}{:>12}{:>14}",
                    "zero_fill",
                    "",
                    render(&Rational::from_integer(0.into())),
                    z
                )?;
            }
            write_checks(report, out)?;
        }
    }
    Ok(())
}

fn header(report: &RunReport) -> String {
    let params: Vec<String> = report
        .parameters
        .iter()
        .map(|p| format!("{}={}", p.key, p.value))
        .collect();
    format!("{} {}", report.command, params.join(" "))
}

fn write_checks(report: &RunReport, out: &mut dyn Write) -> io::Result<()> {
    for c in &report.checks {
        write!(out, "[{}] {} {}", c.status(), c.name, c.measure())?;
        if let Some(d) = &c.detail {
            write!(out, " ({d})")?;
        }
        writeln!(out)?;
    }
    writeln!(out, "elapsed_ms={}", report.elapsed_ms)
}

fn json_error(e: serde_json::Error) -> Failure {
    Failure::Runtime(Error::Inconsistent(format!("json: {e}")))
}

fn csv_error(e: csv::Error) -> Failure {
    Failure::Runtime(Error::Inconsistent(format!("csv: {e}")))
}

fn jm_spectrum(a: JmArgs, started: Instant, out: &mut dyn Write) -> Result<RunReport, Failure> {
    if !(2..=10).contains(&a.m) {
        return usage(format!("--m must be between 2 and 10, got {}", a.m));
    }
    let mode = match (a.mode, a.mu) {
        (Some(Mode::Regular), Some(_)) => {
            return usage("--mu is only meaningful with --mode irrep")
        }
        (Some(Mode::Regular), None) | (None, None) => JmMode::Regular,
        (Some(Mode::Irrep), None) => return usage("--mode irrep requires --mu"),
        (_, Some(mu)) if mu.size() != a.m => {
            return usage(format!("--mu {mu} is not a partition of {}", a.m))
        }
        (_, Some(mu)) => JmMode::Irrep(mu),
    };
    let table = jm_spectrum_table(a.m, &mode)?;
    let mut report = RunReport::new("jm-spectrum");
    report.param("m", a.m);
    match &mode {
        JmMode::Irrep(mu) => {
            report.param("mode", "irrep");
            report.param("mu", mu);
        }
        JmMode::Regular => report.param("mode", "regular"),
    }
    report.checks = table_checks(&table)?;
    finish(&mut report, started);
    emit_table(&table, &report, a.format, out)?;
    Ok(report)
}

fn pbt(a: PbtArgs, started: Instant, out: &mut dyn Write) -> Result<RunReport, Failure> {
    if a.ports < 1 {
        return usage("--ports must be at least 1");
    }
    if a.dim < 2 {
        return usage(format!("--dim must be at least 2, got {}", a.dim));
    }
    let cap = DimCap::from_env();
    if a.verify {
        if let Err(e) = cap.space_dim(a.dim, a.ports + 1) {
            return usage(format!("{e}; raise PRIRLAB_DIM_CAP or drop --verify"));
        }
    }
    let table = pbt_spectrum_table(a.ports, a.dim)?;
    let mut report = RunReport::new("pbt");
    report.param("ports", a.ports);
    report.param("dim", a.dim);
    report.param("verify", a.verify);
    report.checks = table_checks(&table)?;
    if a.verify {
        let v = verify_pbt_spectrum(a.ports, a.dim, cap)?;
        let mut c = Check::residual("pbt_brute_force", v.max_deviation, 1e-8);
        if !v.passed() {
            c = Check { passed: false, ..c }.with_detail(v.mismatches.join("; "));
        }
        report.checks.push(c);
        let rho = if a.ports == 1 {
            pair_projector(a.dim, 2, 1, 2, cap)?
        } else {
            pbt_operator(a.ports, a.dim, 1, cap)?
        };
        let pt = partial_transpose_last(&jm_tensor(a.ports + 1, a.dim, cap)?);
        report.checks.push(Check::exact(
            "rho_partial_transpose",
            pt.to_dense() == rho.to_dense(),
        ));
    }
    finish(&mut report, started);
    emit_table(&table, &report, a.format, out)?;
    Ok(report)
}

#[derive(Debug, Serialize)]
struct FrobeniusRow {
    mu: Partition,
    reduction: u64,
    characters: u64,
    restriction: u64,
    branching: u64,
}

#[derive(Serialize)]
struct FrobeniusOutput<'a> {
    report: &'a RunReport,
    m: usize,
    beta: &'a Partition,
    rows: &'a [FrobeniusRow],
    agree: bool,
}

fn frobenius(
    a: FrobeniusArgs,
    started: Instant,
    out: &mut dyn Write,
) -> Result<RunReport, Failure> {
    if !(1..=6).contains(&a.m) {
        return usage(format!("--m must be between 1 and 6, got {}", a.m));
    }
    if a.beta.size() + 1 != a.m {
        return usage(format!(
            "--beta {} is not a partition of m-1 = {}",
            a.beta,
            a.m - 1
        ));
    }
    let beta = a.beta;
    let reduction = reduce_induced(&beta, a.m)?;
    let chars = frobenius_multiplicities_characters(&beta, a.m)?;
    let branching = branching_multiplicities(&beta, a.m)?;
    let rows: Vec<FrobeniusRow> = partitions_of(a.m)
        .into_iter()
        .enumerate()
        .map(|(i, mu)| FrobeniusRow {
            mu,
            reduction: reduction.multiplicities[i].1,
            characters: chars.induced[i].1,
            restriction: chars.restricted[i].1,
            branching: branching[i].1,
        })
        .collect();
    let agree = rows.iter().all(|r| {
        r.reduction == r.characters && r.characters == r.restriction && r.restriction == r.branching
    });

    let mut report = RunReport::new("frobenius");
    report.param("m", a.m);
    report.param("beta", &beta);
    report.checks = vec![
        Check::residual(
            "u_unitarity",
            build_u(&beta, a.m)?.unitarity_residual(),
            1e-10,
        ),
        Check::residual(
            "reduction_blocks",
            reduction.off_block_residual.max(reduction.block_residual),
            1e-8,
        ),
        Check::exact("frobenius_agreement", agree),
    ];
    finish(&mut report, started);

    match a.format {
        Format::Json => {
            let doc = FrobeniusOutput {
                report: &report,
                m: a.m,
                beta: &beta,
                rows: &rows,
                agree,
            };
            serde_json::to_writer_pretty(&mut *out, &doc).map_err(json_error)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["mu", "reduction", "characters", "restriction", "branching"])
                .map_err(csv_error)?;
            for r in &rows {
                w.write_record([
                    r.mu.to_string(),
                    r.reduction.to_string(),
                    r.characters.to_string(),
                    r.restriction.to_string(),
                    r.branching.to_string(),
                ])
                .map_err(csv_error)?;
            }
            w.flush()?;
        }
        Format::Table => {
            writeln!(out, "{}", header(&report))?;
            writeln!(
                out,
                "{:<14}{:>11}{:>12}{:>13}{:>11}",
                "mu", "reduction", "characters", "restriction", "branching"
            )?;
            for r in rows
                .iter()
                .filter(|r| r.reduction + r.characters + r.restriction + r.branching > 0)
            {
                writeln!(
                    out,
                    "{:<14}{:>11}{:>12}{:>13}{:>11}",
                    r.mu.to_string(),
                    r.reduction,
                    r.characters,
                    r.restriction,
                    r.branching
                )?;
            }
            writeln!(out, "agree={agree}")?;
            write_checks(&report, out)?;
        }
    }
    Ok(report)
}

fn verify_all(a: VerifyArgs, started: Instant, out: &mut dyn Write) -> Result<RunReport, Failure> {
    if !(2..=7).contains(&a.m_max) {
        return usage(format!("--m-max must be between 2 and 7, got {}", a.m_max));
    }
    if a.d_max < 2 {
        return usage(format!("--d-max must be at least 2, got {}", a.d_max));
    }
    if let Some(f) = &a.inject_fault {
        if !CHECK_NAMES.contains(&f.as_str()) {
            return usage(format!(
                "unknown check {f:?}; expected one of {}",
                CHECK_NAMES.join(", ")
            ));
        }
    }
    let bounds = SuiteBounds {
        m_max: a.m_max,
        d_max: a.d_max,
        cap: DimCap::from_env(),
    };
    let mut report = RunReport::new("verify-all");
    report.param("m_max", a.m_max);
    report.param("d_max", a.d_max);
    report.param("dim_cap", bounds.cap.0);
    report.checks = run_suite(bounds, a.inject_fault.as_deref())?;
    finish(&mut report, started);
    match a.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                report: &'a RunReport,
            }
            serde_json::to_writer_pretty(&mut *out, &Doc { report: &report })
                .map_err(json_error)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["name", "passed", "residual", "exact"])
                .map_err(csv_error)?;
            for c in &report.checks {
                w.write_record([
                    c.name.clone(),
                    c.passed.to_string(),
                    c.residual.map(|r| format!("{r:e}")).unwrap_or_default(),
                    c.exact.map(|e| e.to_string()).unwrap_or_default(),
                ])
                .map_err(csv_error)?;
            }
            w.flush()?;
        }
        Format::Table => {
            writeln!(out, "{}", header(&report))?;
            write_checks(&report, out)?;
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (u8, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let argv = std::iter::once("prirlab").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_capture(&["jm-spectrum", "--m", "1"]).0, EXIT_USAGE);
        assert_eq!(
            run_capture(&["jm-spectrum", "--m", "3", "--mode", "irrep"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            run_capture(&["jm-spectrum", "--m", "3", "--mu", "2"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            run_capture(&["pbt", "--ports", "2", "--dim", "1"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            run_capture(&["frobenius", "--m", "3", "--beta", "3"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            run_capture(&["frobenius", "--m", "3", "--beta", "x"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            run_capture(&["verify-all", "--inject-fault", "nope"]).0,
            EXIT_USAGE
        );
        assert_eq!(run_capture(&["bogus"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["--help"]).0, EXIT_PASS);
    }

    #[test]
    fn table_output() {
        let (code, out, _) =
            run_capture(&["jm-spectrum", "--m", "3", "--mode", "irrep", "--mu", "2,1"]);
        assert_eq!(code, EXIT_PASS);
        assert!(out.contains("-1/1"));
        assert!(out.contains("[PASS] total_multiplicity"));
        let (code, out, _) = run_capture(&["frobenius", "--m", "3", "--beta", "2"]);
        assert_eq!(code, EXIT_PASS);
        assert!(out.contains("agree=true"));
    }

    #[test]
    fn every_check_has_a_name() {
        let checks = run_suite(
            SuiteBounds {
                m_max: 3,
                d_max: 2,
                cap: DimCap::default(),
            },
            None,
        )
        .unwrap();
        let names: Vec<&str> = checks.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, CHECK_NAMES);
        assert!(checks.iter().all(|c| c.passed), "{checks:?}");
    }
}
