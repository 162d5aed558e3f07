//! Classification tables over the fixture corpus.
//!
//! A row carries the five membership marks C, B, P, QC, SC and nothing else;
//! every mark comes straight from the subclass flags. Expectation files are
//! plain text with ASCII marks so that diffs stay readable, while terminal
//! output uses the affirmation and negation symbols.

use serde::Serialize;
use skewpbw::classify::{classify_subclasses, SubclassFlags};
use skewpbw::presentation::{fixture, fixture_names};

use crate::report::{mark, ToolInfo};

pub const COLUMNS: [&str; 5] = ["C", "B", "P", "QC", "SC"];

#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub algebra: String,
    pub constant: bool,
    pub bijective: bool,
    pub pre_commutative: bool,
    pub quasi_commutative: bool,
    pub semi_commutative: bool,
}

impl TableRow {
    pub fn new(name: &str, flags: &SubclassFlags) -> TableRow {
        TableRow {
            algebra: name.to_string(),
            constant: flags.constant,
            bijective: flags.bijective,
            pre_commutative: flags.pre_commutative,
            quasi_commutative: flags.quasi_commutative,
            semi_commutative: flags.semi_commutative,
        }
    }

    pub fn marks(&self) -> [bool; 5] {
        [
            self.constant,
            self.bijective,
            self.pre_commutative,
            self.quasi_commutative,
            self.semi_commutative,
        ]
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExpectationResult {
    pub path: String,
    pub matched: bool,
    pub mismatches: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableReport {
    pub tool: ToolInfo,
    pub selector: String,
    pub columns: Vec<&'static str>,
    pub rows: Vec<TableRow>,
    /// Fixtures in the selection that fail the shape check and so have no row.
    pub skipped: Vec<String>,
    pub expectation: Option<ExpectationResult>,
}

// ---- Selection ----

/// Resolves a corpus selector to fixture names, in table order.
pub fn selector_names(selector: &str) -> Option<Vec<String>> {
    match selector {
        "sridharan" => Some((1..=10).map(|k| format!("sridharan{k}")).collect()),
        "core" => Some(
            ["poly3", "sklyanin", "qaffine3"]
                .iter()
                .map(|s| s.to_string())
                .collect(),
        ),
        "all" => Some(fixture_names().iter().map(|s| s.to_string()).collect()),
        _ => None,
    }
}

/// Builds the rows for a list of fixture names. Shape-invalid fixtures are
/// reported in `skipped`; unknown names are an error.
pub fn build_table(selector: &str, names: &[String]) -> Result<TableReport, String> {
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for name in names {
        let p = fixture(name).map_err(|e| e.to_string())?;
        match classify_subclasses(&p) {
            Ok(flags) => rows.push(TableRow::new(name, &flags)),
            Err(_) => skipped.push(name.clone()),
        }
    }
    Ok(TableReport {
        tool: ToolInfo::current(),
        selector: selector.to_string(),
        columns: COLUMNS.to_vec(),
        rows,
        skipped,
        expectation: None,
    })
}

// ---- Rendering ----

pub fn render_table(report: &TableReport) -> String {
    let name_width = report
        .rows
        .iter()
        .map(|r| r.algebra.len())
        .chain(["algebra".len()])
        .max()
        .unwrap_or(0);
    let mut out = String::new();
    out.push_str(&format!(
        "{:name_width$}  C  B  P  QC  SC\n",
        "algebra",
        name_width = name_width
    ));
    for row in &report.rows {
        let m = row.marks();
        out.push_str(&format!(
            "{:name_width$}  {}  {}  {}  {}   {}\n",
            row.algebra,
            mark(m[0]),
            mark(m[1]),
            mark(m[2]),
            mark(m[3]),
            mark(m[4]),
            name_width = name_width
        ));
    }
    for name in &report.skipped {
        out.push_str(&format!("skipped (shape invalid): {name}\n"));
    }
    out
}

// ---- Expectation files ----

fn parse_mark(token: &str) -> Result<bool, String> {
    match token {
        "Y" => Ok(true),
        "n" => Ok(false),
        other => Err(format!("expected Y or n, found {other:?}")),
    }
}

fn format_mark(b: bool) -> &'static str {
    if b {
        "Y"
    } else {
        "n"
    }
}

/// Parses an expectation file: a header line `algebra C B P QC SC` followed
/// by one row per line, marks written Y or n. Blank lines and lines starting
/// with `#` are ignored.
pub fn parse_expectation(text: &str) -> Result<Vec<(String, [bool; 5])>, String> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header: Vec<&str> = lines
        .next()
        .ok_or_else(|| "empty expectation file".to_string())?
        .split_whitespace()
        .collect();
    if header != ["algebra", "C", "B", "P", "QC", "SC"] {
        return Err(format!("bad header line: {header:?}"));
    }
    let mut rows = Vec::new();
    for line in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 6 {
            return Err(format!("expected 6 columns, found {}: {line:?}", tokens.len()));
        }
        let mut marks = [false; 5];
        for (k, token) in tokens[1..].iter().enumerate() {
            marks[k] = parse_mark(token).map_err(|e| format!("row {:?}: {e}", tokens[0]))?;
        }
        rows.push((tokens[0].to_string(), marks));
    }
    Ok(rows)
}

/// Compares computed rows against an expectation, returning one line per
/// differing cell, missing row, or extra row.
pub fn compare_expectation(rows: &[TableRow], expected: &[(String, [bool; 5])]) -> Vec<String> {
    let mut mismatches = Vec::new();
    for (k, (name, want)) in expected.iter().enumerate() {
        let Some(row) = rows.get(k) else {
            mismatches.push(format!("missing row {k}: expected {name}"));
            continue;
        };
        if &row.algebra != name {
            mismatches.push(format!(
                "row {k}: expected algebra {name}, found {}",
                row.algebra
            ));
            continue;
        }
        let got = row.marks();
        for (col, (&w, &g)) in want.iter().zip(got.iter()).enumerate() {
            if w != g {
                mismatches.push(format!(
                    "{name}: column {} expected {}, found {}",
                    COLUMNS[col],
                    format_mark(w),
                    format_mark(g)
                ));
            }
        }
    }
    for row in rows.iter().skip(expected.len()) {
        mismatches.push(format!("extra row: {}", row.algebra));
    }
    mismatches
}
