//! Command-line front end for the presentation analyzer.
//!
//! Exit codes: 0 success, 1 input or usage error, 2 shape failure or
//! expectation mismatch, 3 resource cap hit (rule budget or block size).
//! Reports print as text by default and as schema-stable JSON with `--json`;
//! both renderings are built from the same report value.

use std::collections::BTreeMap;

use clap::{Args, Parser, Subcommand};
use skewpbw::classify::{check_shape, classify_subclasses, homogeneous_version};
use skewpbw::deform::deformation_verdict;
use skewpbw::koszul::{ext_table, hilbert_pairing_test, koszul_verdict};
use skewpbw::presentation::{
    fixture_with_params, parse_presentation, ParamBinding, Presentation,
};
use skewpbw::rewrite::{certify_pbw_basis, compute_s, orient, DEFAULT_RULE_BUDGET};
use skewpbw::{scalar, Error};
use skewpbw_cli::report::{
    deformation_section, ext_section, flags_section, koszul_section, pairing_section,
    pbw_section, render_analysis, shape_section, AnalysisReport, HilbertSection,
};
use skewpbw_cli::table::{
    build_table, compare_expectation, parse_expectation, render_table, selector_names,
    ExpectationResult,
};

#[derive(Parser)]
#[command(
    name = "skewpbw",
    version,
    about = "Classify and certify skew PBW extension presentations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the extension shape and report the subclass flags.
    Classify(ClassifyArgs),
    /// Full report: flags, basis certificate, Koszul verdict, dimensions.
    Analyze(AnalyzeArgs),
    /// Classification table for a fixture family.
    Table(TableArgs),
    /// Flatness conditions and the deformation verdict.
    Deform(DeformArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Presentation source: a file path or fixture:NAME.
    input: String,
    /// Bind a named parameter, e.g. --param q=3/2. Repeatable.
    #[arg(long = "param", value_name = "NAME=VALUE")]
    params: Vec<String>,
    /// Emit the report as JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    input: InputArgs,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Degree bound for dimension prefixes and the pairing check.
    #[arg(long = "max-degree", value_name = "N", default_value_t = 5)]
    max_degree: usize,
    /// Also compute the cohomology table, with bounds I,J.
    #[arg(long = "ext-bounds", value_name = "I,J")]
    ext_bounds: Option<String>,
    /// Completion rule budget.
    #[arg(long, value_name = "RULES", default_value_t = DEFAULT_RULE_BUDGET)]
    budget: usize,
}

#[derive(Args)]
struct TableArgs {
    /// Fixture family: sridharan, core, or all.
    selector: String,
    /// Compare against an expectation file and fail on any mismatch.
    #[arg(long, value_name = "FILE")]
    expect: Option<std::path::PathBuf>,
    /// Emit the table as JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct DeformArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Degree bound for the filtration comparison.
    #[arg(long = "max-degree", value_name = "N", default_value_t = 5)]
    max_degree: usize,
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    match Cli::parse().command {
        Command::Classify(args) => cmd_classify(args),
        Command::Analyze(args) => cmd_analyze(args),
        Command::Table(args) => cmd_table(args),
        Command::Deform(args) => cmd_deform(args),
    }
}

// ---- Shared plumbing ----

fn fail(message: &str, code: i32) -> i32 {
    eprintln!("error: {message}");
    code
}

/// Writes to stdout, exiting quietly when the reader has closed the pipe.
fn write_stdout(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
        std::process::exit(0);
    }
}

/// Resource exhaustion exits 3; every other library failure exits 2.
fn error_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } | Error::InsufficientCompletion { .. } => 3,
        _ => 2,
    }
}

fn parse_params(specs: &[String]) -> Result<(ParamBinding, BTreeMap<String, String>), String> {
    let mut binding = ParamBinding::new();
    let mut shown = BTreeMap::new();
    for spec in specs {
        let Some((name, text)) = spec.split_once('=') else {
            return Err(format!("--param {spec}: expected NAME=VALUE"));
        };
        let name = name.trim();
        if name.is_empty() {
            return Err(format!("--param {spec}: empty parameter name"));
        }
        let Some(value) = scalar::parse(text) else {
            return Err(format!("--param {spec}: {text:?} is not a rational number"));
        };
        shown.insert(name.to_string(), scalar::format(&value));
        binding.set(name, value);
    }
    Ok((binding, shown))
}

fn load_input(input: &str, binding: &ParamBinding) -> Result<Presentation, String> {
    if let Some(name) = input.strip_prefix("fixture:") {
        fixture_with_params(name, binding).map_err(|e| e.to_string())
    } else {
        let text = std::fs::read_to_string(input).map_err(|e| format!("{input}: {e}"))?;
        parse_presentation(&text, binding).map_err(|e| format!("{input}: {e}"))
    }
}

fn emit(report: &AnalysisReport, json: bool) {
    if json {
        let text = serde_json::to_string_pretty(report).expect("report serializes");
        write_stdout(&format!("{text}\n"));
    } else {
        write_stdout(&render_analysis(report));
    }
}

// ---- classify ----

fn cmd_classify(args: ClassifyArgs) -> i32 {
    let (binding, shown) = match parse_params(&args.input.params) {
        Ok(v) => v,
        Err(msg) => return fail(&msg, 1),
    };
    let p = match load_input(&args.input.input, &binding) {
        Ok(p) => p,
        Err(msg) => return fail(&msg, 1),
    };
    let shape = check_shape(&p);
    let mut report = AnalysisReport::new("classify", &p, shown);
    report.shape = Some(shape_section(&p, &shape));
    let code = if shape.valid {
        let flags = classify_subclasses(&p).expect("valid shape classifies");
        report.flags = Some(flags_section(&flags));
        0
    } else {
        2
    };
    emit(&report, args.input.json);
    code
}

// ---- analyze ----

fn parse_ext_bounds(text: &str) -> Result<(usize, usize), String> {
    let Some((i, j)) = text.split_once(',') else {
        return Err(format!("--ext-bounds {text}: expected I,J"));
    };
    let part = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| format!("--ext-bounds {text}: {s:?} is not a nonnegative integer"))
    };
    Ok((part(i)?, part(j)?))
}

/// Dimensions of the quotient through `max_deg`, from a bounded completion
/// of the oriented relators.
fn bounded_dims(p: &Presentation, max_deg: usize, budget: usize) -> Result<HilbertSection, Error> {
    let system = orient(p)?;
    let (system, _) = system.complete_bounded(max_deg + 1, budget)?;
    let prefix = system.hilbert_prefix(max_deg)?;
    Ok(HilbertSection {
        dims: prefix.dims,
        valid_to: prefix.valid_to,
    })
}

fn cmd_analyze(args: AnalyzeArgs) -> i32 {
    let (binding, shown) = match parse_params(&args.input.params) {
        Ok(v) => v,
        Err(msg) => return fail(&msg, 1),
    };
    let explicit_ext = match args.ext_bounds.as_deref().map(parse_ext_bounds).transpose() {
        Ok(v) => v,
        Err(msg) => return fail(&msg, 1),
    };
    if args.max_degree < 1 {
        return fail("--max-degree must be at least 1", 1);
    }
    if args.budget < 1 {
        return fail("--budget must be at least 1", 1);
    }
    let p = match load_input(&args.input.input, &binding) {
        Ok(p) => p,
        Err(msg) => return fail(&msg, 1),
    };
    let shape = check_shape(&p);
    let mut report = AnalysisReport::new("analyze", &p, shown);
    report.shape = Some(shape_section(&p, &shape));
    if !shape.valid {
        emit(&report, args.input.json);
        return 2;
    }
    let mut code = 0;

    let flags = classify_subclasses(&p).expect("valid shape classifies");
    report.flags = Some(flags_section(&flags));

    match certify_pbw_basis(&p) {
        Ok(cert) => report.pbw = Some(pbw_section(&cert)),
        Err(e) => {
            report.notes.push(format!("basis certificate unavailable: {e}"));
            code = code.max(error_code(&e));
        }
    }

    if let Ok(sets) = compute_s(&p, args.max_degree) {
        report.s_counts = Some(sets.counts);
    }

    let bounds = explicit_ext.unwrap_or((4, 4));
    match koszul_verdict(&p, bounds) {
        Ok(verdict) => report.koszul = Some(koszul_section(&verdict, bounds)),
        Err(e) => {
            report.notes.push(format!("koszul verdict unavailable: {e}"));
            code = code.max(error_code(&e));
        }
    }

    match homogeneous_version(&p) {
        Ok(hv) => {
            if let Some((max_i, max_j)) = explicit_ext {
                match ext_table(&hv, max_i, max_j) {
                    Ok(table) => {
                        if !table.trusted {
                            report
                                .notes
                                .push("cohomology table truncated by the size cap".to_string());
                            code = code.max(3);
                        }
                        report.ext = Some(ext_section(&table));
                    }
                    Err(e) => {
                        report.notes.push(format!("cohomology table unavailable: {e}"));
                        code = code.max(error_code(&e));
                    }
                }
            }
            match hilbert_pairing_test(&hv, args.max_degree) {
                Ok(pairing) => report.pairing = Some(pairing_section(&pairing)),
                Err(e) => {
                    report.notes.push(format!("pairing unavailable: {e}"));
                    code = code.max(error_code(&e));
                }
            }
            match bounded_dims(&hv, args.max_degree, args.budget) {
                Ok(section) => report.homogeneous_hilbert = Some(section),
                Err(e) => {
                    report
                        .notes
                        .push(format!("homogeneous dimensions unavailable: {e}"));
                    code = code.max(error_code(&e));
                }
            }
        }
        Err(e) => report
            .notes
            .push(format!("homogeneous version unavailable: {e}")),
    }

    match bounded_dims(&p, args.max_degree, args.budget) {
        Ok(section) => report.hilbert = Some(section),
        Err(e) => {
            report.notes.push(format!("dimensions unavailable: {e}"));
            code = code.max(error_code(&e));
        }
    }

    emit(&report, args.input.json);
    code
}

// ---- table ----

fn cmd_table(args: TableArgs) -> i32 {
    let Some(names) = selector_names(&args.selector) else {
        return fail(
            &format!(
                "unknown selector {:?} (expected sridharan, core, or all)",
                args.selector
            ),
            1,
        );
    };
    let mut report = match build_table(&args.selector, &names) {
        Ok(r) => r,
        Err(msg) => return fail(&msg, 1),
    };
    let mut code = 0;
    if let Some(path) = &args.expect {
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => return fail(&format!("{}: {e}", path.display()), 1),
        };
        let expected = match parse_expectation(&text) {
            Ok(rows) => rows,
            Err(msg) => return fail(&format!("{}: {msg}", path.display()), 1),
        };
        let mismatches = compare_expectation(&report.rows, &expected);
        if !mismatches.is_empty() {
            code = 2;
        }
        report.expectation = Some(ExpectationResult {
            path: path.display().to_string(),
            matched: mismatches.is_empty(),
            mismatches,
        });
    }
    if args.json {
        let text = serde_json::to_string_pretty(&report).expect("table serializes");
        write_stdout(&format!("{text}\n"));
    } else {
        let mut text = render_table(&report);
        if let Some(exp) = &report.expectation {
            if exp.matched {
                text.push_str(&format!(
                    "expectation: matched {} rows ({})\n",
                    report.rows.len(),
                    exp.path
                ));
            } else {
                text.push_str(&format!("expectation mismatches ({}):\n", exp.path));
                for m in &exp.mismatches {
                    text.push_str(&format!("  - {m}\n"));
                }
            }
        }
        write_stdout(&text);
    }
    code
}

// ---- deform ----

fn cmd_deform(args: DeformArgs) -> i32 {
    let (binding, shown) = match parse_params(&args.input.params) {
        Ok(v) => v,
        Err(msg) => return fail(&msg, 1),
    };
    if args.max_degree < 2 {
        return fail("--max-degree must be at least 2 for deform", 1);
    }
    let p = match load_input(&args.input.input, &binding) {
        Ok(p) => p,
        Err(msg) => return fail(&msg, 1),
    };
    let mut report = AnalysisReport::new("deform", &p, shown);
    match deformation_verdict(&p, args.max_degree) {
        Ok(d) => {
            report.deformation = Some(deformation_section(&d));
            emit(&report, args.input.json);
            0
        }
        Err(e) => fail(&format!("deformation analysis failed: {e}"), error_code(&e)),
    }
}
