// SPDX-License-Identifier: Apache-2.0

//! Command-line front end. The `periodic` binary is a thin wrapper around
//! [`run`], which writes to caller-supplied streams and returns the exit code.
//!
//! Exit codes: 0 success/pass, 1 verification failure, 2 usage, parse or
//! unsupported-period errors, 3 search budget exhausted.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::analysis::classify;
use crate::bundled::Database;
use crate::circuit::Circuit;
use crate::error::Error;
use crate::export;
use crate::search::{
    certify_lower_bound, conjecture_scan_with, SearchBudget, SearchOutcome, SearchReport,
};
use crate::spectral::{dft, postselect_input_state, verify_periodicity, DEFAULT_PEAK_THRESHOLD};
use crate::synthesis::synth_with;
use crate::text;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Widest bit length for which `scan --with-search` runs the exact search.
pub const SEARCH_SCAN_BITS: usize = 3;

#[derive(Parser, Debug)]
#[command(
    name = "periodic",
    version,
    about = "Reversible circuits for simple periodic functions"
)]
struct Cli {
    /// Directory holding the bundled `.rev` circuits and their manifest.
    #[arg(long, global = true)]
    data_dir: Option<PathBuf>,

    /// Suppress informational output.
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Synthesize a circuit for period p.
    Synth {
        p: u64,
        /// Fall back to exact search, e.g. `toffoli=2,gates=20,states=1000000`.
        #[arg(long)]
        search_budget: Option<SearchBudget>,
        /// Write the circuit here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the truth table of a circuit file.
    Table {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Check a circuit against a claimed period.
    Verify {
        file: PathBuf,
        #[arg(long)]
        period: u64,
        /// Also run the Fourier peak-mass check.
        #[arg(long)]
        spectral: bool,
        #[arg(long, default_value_t = DEFAULT_PEAK_THRESHOLD)]
        threshold: f64,
    },
    /// Type A/B conjecture scan over odd periods.
    Scan {
        #[arg(long)]
        max_bits: usize,
        /// Append exact-search certificates for rows with n <= 3.
        #[arg(long)]
        with_search: bool,
        #[arg(long)]
        json: bool,
    },
    /// Render a circuit file.
    Export {
        file: PathBuf,
        #[arg(long, value_enum)]
        format: ExportFormat,
    },
    /// Fourier spectrum of the input register postselected on output y.
    Spectrum {
        file: PathBuf,
        /// Output value to condition on (default: the output for x = 0).
        #[arg(long)]
        y: Option<u64>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExportFormat {
    Qasm,
    Json,
    Ascii,
}

struct Ctx<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    quiet: bool,
}

type CmdResult = Result<i32, Error>;

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExhausted(_) => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let mut ctx = Ctx {
        out,
        err,
        quiet: cli.quiet,
    };
    let result =
        load_db(cli.data_dir.as_deref()).and_then(|db| dispatch(&mut ctx, &db, cli.command));
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(ctx.err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn load_db(dir: Option<&Path>) -> Result<Database, Error> {
    match dir {
        Some(d) => Database::load_dir(d),
        None => Ok(Database::embedded().clone()),
    }
}

fn read_circuit(path: &Path) -> Result<Circuit, Error> {
    let src = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
    text::parse(&src).map_err(|e| match e {
        Error::Parse { .. } => Error::InvalidArgument(format!("{}: {e}", path.display())),
        other => other,
    })
}

fn dispatch(ctx: &mut Ctx<'_>, db: &Database, command: Command) -> CmdResult {
    match command {
        Command::Synth {
            p,
            search_budget,
            out,
        } => cmd_synth(ctx, db, p, search_budget.as_ref(), out.as_deref()),
        Command::Table { file, json } => cmd_table(ctx, &file, json),
        Command::Verify {
            file,
            period,
            spectral,
            threshold,
        } => cmd_verify(ctx, &file, period, spectral, threshold),
        Command::Scan {
            max_bits,
            with_search,
            json,
        } => cmd_scan(ctx, db, max_bits, with_search, json),
        Command::Export { file, format } => cmd_export(ctx, &file, format),
        Command::Spectrum { file, y, json } => cmd_spectrum(ctx, &file, y, json),
    }
}

fn cmd_synth(
    ctx: &mut Ctx<'_>,
    db: &Database,
    p: u64,
    budget: Option<&SearchBudget>,
    out: Option<&Path>,
) -> CmdResult {
    let circuit = synth_with(p, db, budget)?;
    let rendered = text::render(&circuit);
    match out {
        Some(path) => std::fs::write(path, &rendered)?,
        None => write!(ctx.out, "{rendered}")?,
    }
    if !ctx.quiet {
        writeln!(ctx.out, "p={p} {}", circuit.cost())?;
    }
    Ok(EXIT_OK)
}

fn cmd_table(ctx: &mut Ctx<'_>, file: &Path, json: bool) -> CmdResult {
    let table = read_circuit(file)?.truth_table()?;
    if json {
        writeln!(ctx.out, "{}", table.to_json())?;
    } else {
        for row in table.rows() {
            writeln!(ctx.out, "{row}")?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(
    ctx: &mut Ctx<'_>,
    file: &Path,
    period: u64,
    spectral: bool,
    threshold: f64,
) -> CmdResult {
    let circuit = read_circuit(file)?;
    let report = classify(&circuit.truth_table()?);
    let mut pass = report.monoperiodic && report.fundamental_period == period;
    writeln!(
        ctx.out,
        "fundamental_period={} injective_within_period={} monoperiodic={}",
        report.fundamental_period, report.injective_within_period, report.monoperiodic
    )?;
    writeln!(
        ctx.out,
        "classify: {} (claimed period {period})",
        if pass { "pass" } else { "fail" }
    )?;
    if spectral {
        let v = verify_periodicity(&circuit, period, threshold)?;
        if let Some(reason) = &v.reason {
            writeln!(ctx.out, "spectral: {reason}")?;
        }
        for m in &v.masses {
            writeln!(ctx.out, "spectral: y={} mass={:.6}", m.y, m.mass)?;
        }
        writeln!(
            ctx.out,
            "spectral: {} (threshold {threshold})",
            if v.passed { "pass" } else { "fail" }
        )?;
        pass &= v.passed;
    }
    writeln!(ctx.out, "{}", if pass { "PASS" } else { "FAIL" })?;
    Ok(if pass { EXIT_OK } else { EXIT_FAIL })
}

/// Scan table text, one row per odd period.
pub fn render_scan(rows: &[crate::search::ScanRow]) -> String {
    let mut s = format!(
        "{:>4} {:>8} {:>3} {:>5} {:>6} {:>4} {:>5} {:>4}\n",
        "p", "[p]_2", "n", "class", "pred", "N_T", "N_CN", "Q"
    );
    for r in rows {
        let c = &r.class;
        let (t, cn, q) = match r.actual {
            Some(a) => (
                a.n_toffoli.to_string(),
                a.n_cnot.to_string(),
                a.quantum_cost.to_string(),
            ),
            None => ("-".into(), "-".into(), "-".into()),
        };
        s.push_str(&format!(
            "{:>4} {:>8} {:>3} {:>5} {:>6} {:>4} {:>5} {:>4}\n",
            c.p,
            format!("{:b}", c.p),
            c.n,
            c.class.to_string(),
            c.predicted_toffoli,
            t,
            cn,
            q
        ));
    }
    s
}

fn cmd_scan(
    ctx: &mut Ctx<'_>,
    db: &Database,
    max_bits: usize,
    with_search: bool,
    json: bool,
) -> CmdResult {
    let report = conjecture_scan_with(max_bits, db)?;
    let mut certificates = Vec::new();
    if with_search {
        let budget = SearchBudget::default();
        for row in report.rows.iter().filter(|r| r.class.n <= SEARCH_SCAN_BITS) {
            let Some(actual) = row.actual else { continue };
            let below = actual.n_toffoli.saturating_sub(1);
            let outcome = certify_lower_bound(row.class.p, below, &budget)?;
            certificates.push((row.class.p, below, outcome));
        }
    }

    if json {
        let reports: Vec<SearchReport> = report
            .rows
            .iter()
            .map(|r| SearchReport {
                p: r.class.p,
                class: r.class.class,
                predicted_toffoli: r.class.predicted_toffoli,
                actual_toffoli: r.actual.map(|a| a.n_toffoli),
                certificate: certificates
                    .iter()
                    .find(|(p, _, _)| *p == r.class.p)
                    .map(|(_, _, o)| o.certificate()),
            })
            .collect();
        writeln!(ctx.out, "{}", serde_json::to_string_pretty(&reports)?)?;
    } else {
        write!(ctx.out, "{}", render_scan(&report.rows))?;
        if !ctx.quiet {
            for c in &report.census {
                writeln!(
                    ctx.out,
                    "census n={}: {} odd periods, {} type B (expected {})",
                    c.n, c.odd_periods, c.type_b, c.expected_type_b
                )?;
            }
        }
        for (p, below, outcome) in &certificates {
            let detail = match outcome {
                SearchOutcome::Exhausted { stats } => format!(
                    "exhausted N_T<={below} stratum ({} states): no circuit with fewer Toffolis",
                    stats.states
                ),
                SearchOutcome::Found { circuit, .. } => {
                    format!("found a circuit with N_T={}", circuit.cost().n_toffoli)
                }
                SearchOutcome::BudgetExhausted { reason, .. } => format!("budget: {reason}"),
            };
            writeln!(ctx.out, "search p={p}: {detail}")?;
        }
    }
    let consistent = report.consistent()
        && certificates
            .iter()
            .all(|(_, _, o)| !matches!(o, SearchOutcome::Found { .. }));
    if !consistent && !ctx.quiet {
        writeln!(
            ctx.err,
            "warning: scan found rows inconsistent with the type A/B prediction"
        )?;
    }
    Ok(EXIT_OK)
}

fn cmd_export(ctx: &mut Ctx<'_>, file: &Path, format: ExportFormat) -> CmdResult {
    let circuit = read_circuit(file)?;
    let rendered = match format {
        ExportFormat::Qasm => export::to_qasm(&circuit),
        ExportFormat::Json => export::to_json(&circuit) + "\n",
        ExportFormat::Ascii => export::to_ascii(&circuit),
    };
    write!(ctx.out, "{rendered}")?;
    Ok(EXIT_OK)
}

fn cmd_spectrum(ctx: &mut Ctx<'_>, file: &Path, y: Option<u64>, json: bool) -> CmdResult {
    let circuit = read_circuit(file)?;
    let y = match y {
        Some(y) => y,
        None => circuit.evaluate(0)?,
    };
    let spectrum = dft(&postselect_input_state(&circuit, y)?);
    if json {
        writeln!(ctx.out, "{}", spectrum.to_json())?;
    } else {
        if !ctx.quiet {
            writeln!(ctx.out, "spectrum of input register given y={y}")?;
        }
        write!(ctx.out, "{}", spectrum.ascii_bars(40))?;
    }
    Ok(EXIT_OK)
}
