//! Command-line front end. `run` is the whole program; `main` only wires it
//! to the process streams so tests can drive it in memory.

use std::ffi::OsString;
use std::fmt::Display;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use betti_stab::hilbert::numerator_from_betti;
use betti_stab::io::json::{betti_json, bound_json, conjecture_json, report_json, table_csv, table_json};
use betti_stab::io::{parse_ideal, parse_rees, render_table, Layout};
use betti_stab::lab::{
    conjecture_stab_compare, random_monomial_ideal, rees_bound_check, ScanOptions,
    StabilizationReport, Verdict,
};
use betti_stab::{
    graded_betti, hilbert_numerator, lcm_lattice_betti, multigraded_betti, FieldConfig,
    HilbertOptions, Limits, MonomialIdeal,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "betti-stab", version, about = "Betti tables of monomial ideals and their powers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Graded Betti table of an ideal or one of its powers.
    Betti {
        ideal: PathBuf,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        power: u32,
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
        /// Pretty layout of the R/I table.
        #[arg(long, value_enum, default_value_t = LayoutArg::Compact)]
        layout: LayoutArg,
        /// Index columns by the ideal's homological degree instead of R/I's.
        #[arg(long)]
        module_convention: bool,
    },
    /// Tables of I, I^2, ..., I^D with the empirical stabilization index.
    Scan {
        ideal: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        max_power: u32,
        #[command(flatten)]
        field: FieldArg,
        /// Directory for one table per power and report.json.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Pretty)]
        format: ReportFormat,
    },
    /// Square-cover index against the empirical stabilization index.
    Conjecture {
        ideal: PathBuf,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(2..))]
        max_power: u32,
        /// Largest cover size searched (default: twice the number of variables).
        #[arg(long)]
        n_max: Option<u32>,
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, value_enum, default_value_t = ReportFormat::Pretty)]
        format: ReportFormat,
    },
    /// Compares the Betti numbers of I^d with the bound from Rees-algebra data.
    ReesBound {
        ideal: PathBuf,
        #[arg(long)]
        rees: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        power: u32,
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, value_enum, default_value_t = ReportFormat::Pretty)]
        format: ReportFormat,
    },
    /// Cross-checks the two Betti routes and the Hilbert numerator on random ideals.
    Selftest {
        #[arg(long, default_value_t = 50)]
        trials: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args, Debug, Clone, Copy)]
struct FieldArg {
    /// Characteristic of the coefficient field (a prime).
    #[arg(long = "char", value_name = "P", default_value = "32003", value_parser = parse_field)]
    field: FieldConfig,
}

fn parse_field(s: &str) -> Result<FieldConfig, String> {
    let p: u32 = s.parse().map_err(|_| format!("'{s}' is not an integer"))?;
    FieldConfig::new(p).map_err(|e| e.to_string())
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum ReportFormat {
    Pretty,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum LayoutArg {
    /// Columns from 1, only the occupied rows.
    Compact,
    /// Macaulay2's full display with column 0 and rows from 0.
    Full,
}

/// Everything that ends a command with exit status 1.
#[derive(Debug)]
struct Failure(String);

impl<E: Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type CmdResult = Result<i32, Failure>;

/// Runs the program on `args` (including the program name) and returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Betti {
            ideal,
            power,
            field,
            format,
            layout,
            module_convention,
        } => betti(&ideal, power, field.field, format, layout, module_convention, out, err),
        Command::Scan {
            ideal,
            max_power,
            field,
            out: dir,
            format,
        } => scan(&ideal, max_power, field.field, dir.as_deref(), format, out, err),
        Command::Conjecture {
            ideal,
            max_power,
            n_max,
            field,
            format,
        } => conjecture(&ideal, max_power, n_max, field.field, format, out, err),
        Command::ReesBound {
            ideal,
            rees,
            power,
            field,
            format,
        } => rees_bound(&ideal, &rees, power, field.field, format, out, err),
        Command::Selftest { trials, seed } => selftest(trials, seed, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_DOMAIN
        }
    }
}

fn load_ideal(path: &Path, err: &mut dyn Write) -> Result<MonomialIdeal, Failure> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let parsed = parse_ideal(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    for w in &parsed.warnings {
        writeln!(err, "warning: {}: {w}", path.display())?;
    }
    Ok(parsed.ideal)
}

fn ideal_id(path: &Path) -> String {
    path.file_stem()
        .map_or_else(|| "ideal".into(), |s| s.to_string_lossy().into_owned())
}

fn layout_of(layout: LayoutArg, module_convention: bool) -> Layout {
    match (module_convention, layout) {
        (true, _) => Layout::Module,
        (false, LayoutArg::Compact) => Layout::QuotientCompact,
        (false, LayoutArg::Full) => Layout::Quotient,
    }
}

fn json_line(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

#[allow(clippy::too_many_arguments)]
fn betti(
    path: &Path,
    power: u32,
    field: FieldConfig,
    format: Format,
    layout: LayoutArg,
    module_convention: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let ideal = load_ideal(path, err)?;
    let table = graded_betti(&ideal.power(power)?, &field)?;
    let text = match format {
        Format::Pretty => render_table(&table, layout_of(layout, module_convention))?,
        Format::Json => json_line(&betti_json(&ideal, power, &table)),
        Format::Csv => table_csv(&table),
    };
    out.write_all(text.as_bytes())?;
    Ok(EXIT_OK)
}

/// Writes `contents` to `dir/name` through a temporary file and a rename, so
/// readers never observe a half-written file.
fn write_atomic(dir: &Path, name: &str, contents: &str) -> Result<(), Failure> {
    let tmp = dir.join(format!(".{name}.tmp"));
    fs::write(&tmp, contents).map_err(|e| format!("{}: {e}", tmp.display()))?;
    fs::rename(&tmp, dir.join(name)).map_err(|e| format!("{}: {e}", dir.join(name).display()))?;
    Ok(())
}

fn persist(dir: &Path, ideal: &MonomialIdeal, report: &StabilizationReport) -> Result<(), Failure> {
    fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    for p in &report.powers {
        write_atomic(dir, &format!("power-{:02}.txt", p.d), &render_table(&p.table, Layout::QuotientCompact)?)?;
        write_atomic(dir, &format!("power-{:02}.json", p.d), &json_line(&table_json(&p.table)))?;
    }
    write_atomic(dir, "report.json", &json_line(&report_json(ideal, report)))
}

fn scan(
    path: &Path,
    max_power: u32,
    field: FieldConfig,
    dir: Option<&Path>,
    format: ReportFormat,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let ideal = load_ideal(path, err)?;
    let opts = ScanOptions {
        field,
        ideal_id: ideal_id(path),
        ..ScanOptions::new(max_power)
    };
    let report = betti_stab::lab::stabilization_scan_with(&ideal, &opts)?;
    if let Some(dir) = dir {
        persist(dir, &ideal, &report)?;
    }
    match format {
        ReportFormat::Json => out.write_all(json_line(&report_json(&ideal, &report)).as_bytes())?,
        ReportFormat::Pretty => write_scan_summary(&report, out)?,
    }
    Ok(EXIT_OK)
}

fn write_scan_summary(report: &StabilizationReport, out: &mut dyn Write) -> std::io::Result<()> {
    let changes = report.shape_changes();
    writeln!(out, "ideal {} (degree {}), char {}", report.ideal_id, report.r, report.field.characteristic())?;
    writeln!(out, "{:>4} {:>10} {:>5}  shape", "d", "generators", "reg")?;
    for p in &report.powers {
        let line = format!("{:>4} {:>10} {:>5}", p.d, p.generator_count, p.regularity);
        if changes.contains(&p.d) {
            writeln!(out, "{line}  changed")?;
        } else {
            writeln!(out, "{line}")?;
        }
    }
    if let Some(why) = &report.partial {
        writeln!(out, "partial: {why}")?;
    }
    match report.empirical_stab {
        Some(s) => writeln!(out, "empirical stab: {s} (empirical up to horizon {})", report.completed())?,
        None => writeln!(out, "empirical stab: none")?,
    }
    match report.linear_form {
        Some(l) => writeln!(out, "regularity: {}d{:+} for d >= {}", l.slope, l.intercept, l.onset)?,
        None => writeln!(out, "regularity: no linear fit")?,
    }
    let violations: Vec<_> = report.unimodality.iter().filter(|f| f.is_violation()).collect();
    if violations.is_empty() {
        writeln!(out, "unimodality: no violations")?;
    } else {
        for v in violations {
            writeln!(out, "unimodality violation at {:?}", v.position())?;
        }
    }
    Ok(())
}

fn conjecture(
    path: &Path,
    max_power: u32,
    n_max: Option<u32>,
    field: FieldConfig,
    format: ReportFormat,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let ideal = load_ideal(path, err)?;
    let opts = ScanOptions {
        field,
        ideal_id: ideal_id(path),
        ..ScanOptions::new(max_power)
    };
    let (cmp, report) = conjecture_stab_compare(&ideal, &opts, n_max)?;
    if format == ReportFormat::Json {
        out.write_all(json_line(&conjecture_json(&ideal, &cmp, &report)).as_bytes())?;
        return Ok(EXIT_OK);
    }
    match &cmp.square_cover_index {
        betti_stab::lab::CoverIndex::Found { n, witness } => {
            let names: Vec<String> = witness
                .iter()
                .map(|&g| ideal.generators()[g].display_with(ideal.var_names()).to_string())
                .collect();
            writeln!(out, "square-cover index: {n} ({})", names.join(" * "))?;
        }
        betti_stab::lab::CoverIndex::NoneUpTo { n_max } => {
            writeln!(out, "square-cover index: none up to {n_max}")?;
        }
    }
    match cmp.empirical_stab {
        Some(s) => writeln!(out, "empirical stab: {s} (horizon {}, completed {})", cmp.horizon, cmp.completed)?,
        None => writeln!(out, "empirical stab: none")?,
    }
    let verdict = match cmp.verdict {
        Verdict::ConsistentSoFar => "consistent-so-far",
        Verdict::InconsistentAtHorizon => "inconsistent-at-horizon",
        Verdict::Inconclusive => "inconclusive",
    };
    writeln!(out, "verdict: {verdict}")?;
    if cmp.predecessor_shape_equal == Some(true) {
        writeln!(
            out,
            "note: shape(n-1) = shape(n) for the square-cover index n, so n is not the least stable power"
        )?;
    }
    Ok(EXIT_OK)
}

fn rees_bound(
    path: &Path,
    rees: &Path,
    power: u32,
    field: FieldConfig,
    format: ReportFormat,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let ideal = load_ideal(path, err)?;
    let text = fs::read_to_string(rees).map_err(|e| format!("{}: {e}", rees.display()))?;
    let data = parse_rees(&text).map_err(|e| format!("{}: {e}", rees.display()))?;
    let result = rees_bound_check(&ideal, power, &data, &field)?;
    if format == ReportFormat::Json {
        out.write_all(json_line(&bound_json(&ideal, &result)).as_bytes())?;
        return Ok(EXIT_OK);
    }
    writeln!(out, "power {power}; j is the degree minus {}", data.r() * power)?;
    writeln!(out, "{:>3} {:>4} {:>10} {:>12} {:>12}", "i", "j", "actual", "bound", "slack")?;
    for e in &result.entries {
        writeln!(out, "{:>3} {:>4} {:>10} {:>12} {:>12}", e.i, e.j, e.actual, e.bound, e.slack)?;
    }
    if result.holds() {
        writeln!(out, "bound holds")?;
    } else {
        writeln!(out, "bound VIOLATED at {:?}", result.violations)?;
    }
    Ok(EXIT_OK)
}

fn selftest(trials: u32, seed: u64, out: &mut dyn Write) -> CmdResult {
    let field = FieldConfig::default();
    let hilbert = HilbertOptions {
        allow_fallback: false,
        ..HilbertOptions::default()
    };
    let (mut equiv, mut conserved) = (0u32, 0u32);
    for t in 0..trials {
        let trial_seed = seed.wrapping_mul(1_000_003).wrapping_add(u64::from(t));
        let n = 2 + (trial_seed % 6) as usize;
        let ideal = random_monomial_ideal(n, 10, 4, trial_seed)?;
        let koszul = multigraded_betti(&ideal, &field)?;
        let lattice = lcm_lattice_betti(&ideal, &field, &Limits::default())?;
        if koszul == lattice {
            equiv += 1;
        } else {
            writeln!(out, "trial {t}: Betti routes disagree on {:?}", ideal.generators())?;
        }
        let numerator = hilbert_numerator(&ideal, &hilbert)?;
        if numerator_from_betti(&koszul.to_graded()) == numerator.poly {
            conserved += 1;
        } else {
            writeln!(out, "trial {t}: Hilbert numerator mismatch on {:?}", ideal.generators())?;
        }
    }
    writeln!(out, "equivalence: {equiv}/{trials} passed")?;
    writeln!(out, "conservation: {conserved}/{trials} passed")?;
    Ok(if equiv == trials && conserved == trials { EXIT_OK } else { EXIT_DOMAIN })
}
