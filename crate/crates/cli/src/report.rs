//! Report structures shared by the text and JSON output paths.
//!
//! Every section mirrors one library result, so a verdict printed here is
//! always traceable to a module computation. The JSON field set is fixed:
//! sections a command does not run serialize as `null` rather than being
//! omitted, which keeps the schema stable across commands and versions.

use std::collections::BTreeMap;

use serde::Serialize;
use skewpbw::classify::{ShapeReport, SubclassFlags};
use skewpbw::deform::DeformationReport;
use skewpbw::koszul::{ExtTable, HilbertPairing, KoszulVerdict};
use skewpbw::presentation::Presentation;
use skewpbw::rewrite::PbwCertificate;
use skewpbw::scalar;

// ---- Sections ----

#[derive(Clone, Debug, Serialize)]
pub struct ToolInfo {
    pub name: &'static str,
    pub version: &'static str,
}

impl ToolInfo {
    pub fn current() -> ToolInfo {
        ToolInfo {
            name: "skewpbw",
            version: env!("CARGO_PKG_VERSION"),
        }
    }
}

/// One pair relation in resolved form: `right*left = c*left*right + lower`.
#[derive(Clone, Debug, Serialize)]
pub struct PairEntry {
    pub left: String,
    pub right: String,
    pub c: String,
    /// Coefficients of the linear part, in generator order.
    pub linear: Vec<String>,
    pub constant: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct DiagnosticEntry {
    pub kind: String,
    pub message: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ShapeSection {
    pub valid: bool,
    pub pairs: Vec<PairEntry>,
    pub diagnostics: Vec<DiagnosticEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FlagsSection {
    pub constant: bool,
    pub bijective: bool,
    pub pre_commutative: bool,
    pub quasi_commutative: bool,
    pub semi_commutative: bool,
    pub pre_koszul: bool,
    pub homogeneous_pre_koszul: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PbwSection {
    pub certified: bool,
    pub obstruction_count: usize,
    pub witness: Option<String>,
    pub rules: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RefutedAt {
    pub i: usize,
    pub j: usize,
    pub dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct KoszulSection {
    pub verdict: String,
    pub homogeneous: Option<bool>,
    pub route: Option<String>,
    pub refuted_at: Option<RefutedAt>,
    pub max_i: usize,
    pub max_j: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtSection {
    pub max_i: usize,
    pub max_j: usize,
    pub trusted: bool,
    pub dims: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairingSection {
    pub holds: bool,
    pub checked_to: usize,
    pub dims: Vec<usize>,
    pub dual_dims: Vec<usize>,
    pub first_failure: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HilbertSection {
    pub dims: Vec<usize>,
    pub valid_to: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct GrSection {
    pub matched: bool,
    pub checked_to: usize,
    pub gr_dims: Vec<usize>,
    pub b_dims: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DeformationSection {
    pub cond_i: bool,
    pub cond_j: bool,
    pub b_certified: bool,
    pub verdict: String,
    pub gr_hilbert: GrSection,
}

/// The full report. One instance backs both output formats, so the text and
/// JSON renderings of a run can never disagree on a verdict.
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub tool: ToolInfo,
    pub command: String,
    pub algebra: String,
    pub generators: Vec<String>,
    pub params: BTreeMap<String, String>,
    pub shape: Option<ShapeSection>,
    pub flags: Option<FlagsSection>,
    pub pbw: Option<PbwSection>,
    pub s_counts: Option<Vec<usize>>,
    pub koszul: Option<KoszulSection>,
    pub ext: Option<ExtSection>,
    pub pairing: Option<PairingSection>,
    pub hilbert: Option<HilbertSection>,
    pub homogeneous_hilbert: Option<HilbertSection>,
    pub deformation: Option<DeformationSection>,
    pub notes: Vec<String>,
}

impl AnalysisReport {
    pub fn new(command: &str, p: &Presentation, params: BTreeMap<String, String>) -> Self {
        AnalysisReport {
            tool: ToolInfo::current(),
            command: command.to_string(),
            algebra: p.name().to_string(),
            generators: p.gens().names().to_vec(),
            params,
            shape: None,
            flags: None,
            pbw: None,
            s_counts: None,
            koszul: None,
            ext: None,
            pairing: None,
            hilbert: None,
            homogeneous_hilbert: None,
            deformation: None,
            notes: Vec::new(),
        }
    }
}

// ---- Section builders ----

pub fn shape_section(p: &Presentation, report: &ShapeReport) -> ShapeSection {
    let gens = p.gens();
    let pairs = report
        .pairs
        .iter()
        .map(|(&(i, j), data)| PairEntry {
            left: gens.name(i).to_string(),
            right: gens.name(j).to_string(),
            c: scalar::format(&data.c),
            linear: data.linear.iter().map(scalar::format).collect(),
            constant: scalar::format(&data.constant),
        })
        .collect();
    let diagnostics = report
        .diagnostics
        .iter()
        .map(|d| DiagnosticEntry {
            kind: format!("{:?}", d.kind),
            message: d.message.clone(),
        })
        .collect();
    ShapeSection {
        valid: report.valid,
        pairs,
        diagnostics,
    }
}

pub fn flags_section(flags: &SubclassFlags) -> FlagsSection {
    FlagsSection {
        constant: flags.constant,
        bijective: flags.bijective,
        pre_commutative: flags.pre_commutative,
        quasi_commutative: flags.quasi_commutative,
        semi_commutative: flags.semi_commutative,
        pre_koszul: flags.pre_koszul,
        homogeneous_pre_koszul: flags.homogeneous_pre_koszul,
    }
}

pub fn pbw_section(cert: &PbwCertificate) -> PbwSection {
    let gens = cert.system.gens();
    PbwSection {
        certified: cert.certified,
        obstruction_count: cert.obstruction_count,
        witness: cert.witness.as_ref().map(|w| w.display(gens)),
        rules: cert.system.rules().iter().map(|r| r.display(gens)).collect(),
    }
}

pub fn koszul_section(verdict: &KoszulVerdict, bounds: (usize, usize)) -> KoszulSection {
    let (max_i, max_j) = bounds;
    let mut section = KoszulSection {
        verdict: String::new(),
        homogeneous: None,
        route: None,
        refuted_at: None,
        max_i,
        max_j,
    };
    match verdict {
        KoszulVerdict::NotPreKoszul => section.verdict = "NotPreKoszul".to_string(),
        KoszulVerdict::CertifiedKoszul { homogeneous, route } => {
            section.verdict = "CertifiedKoszul".to_string();
            section.homogeneous = Some(*homogeneous);
            section.route = Some(route.clone());
        }
        KoszulVerdict::RefutedAtDegree { i, j, dim } => {
            section.verdict = "RefutedAtDegree".to_string();
            section.refuted_at = Some(RefutedAt {
                i: *i,
                j: *j,
                dim: *dim,
            });
        }
        KoszulVerdict::InconclusiveBounded { .. } => {
            section.verdict = "InconclusiveBounded".to_string();
        }
    }
    section
}

pub fn ext_section(table: &ExtTable) -> ExtSection {
    ExtSection {
        max_i: table.max_i,
        max_j: table.max_j,
        trusted: table.trusted,
        dims: table.dims.clone(),
    }
}

pub fn pairing_section(pairing: &HilbertPairing) -> PairingSection {
    PairingSection {
        holds: pairing.holds,
        checked_to: pairing.checked_to,
        dims: pairing.dims.clone(),
        dual_dims: pairing.dual_dims.clone(),
        first_failure: pairing.first_failure,
    }
}

pub fn deformation_section(report: &DeformationReport) -> DeformationSection {
    DeformationSection {
        cond_i: report.cond_i,
        cond_j: report.cond_j,
        b_certified: report.b_certified,
        verdict: report.verdict.to_string(),
        gr_hilbert: GrSection {
            matched: report.gr_hilbert.matched,
            checked_to: report.gr_hilbert.checked_to,
            gr_dims: report.gr_hilbert.gr_dims.clone(),
            b_dims: report.gr_hilbert.b_dims.clone(),
        },
    }
}

// ---- Text rendering ----

/// Affirmation and negation marks used in terminal output.
pub fn mark(b: bool) -> char {
    if b {
        '✓'
    } else {
        '★'
    }
}

fn dims_line(dims: &[usize]) -> String {
    dims.iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// The one-line verdict summary printed at the top of `analyze` output.
pub fn summary_line(report: &AnalysisReport) -> String {
    match &report.koszul {
        None => "verdict: koszul status unavailable".to_string(),
        Some(k) => match k.verdict.as_str() {
            "CertifiedKoszul" => {
                let route = k.route.as_deref().unwrap_or("certificate");
                format!("verdict: Koszul CERTIFIED ({route})")
            }
            "NotPreKoszul" => {
                "verdict: not pre-Koszul (constant terms present in the relators)".to_string()
            }
            "RefutedAtDegree" => {
                let at = k.refuted_at.as_ref().expect("refuted verdict carries a position");
                format!(
                    "verdict: Koszul REFUTED (cohomology dimension {} at ({}, {}))",
                    at.dim, at.i, at.j
                )
            }
            _ => format!(
                "verdict: inconclusive within cohomology bounds ({}, {})",
                k.max_i, k.max_j
            ),
        },
    }
}

pub fn render_analysis(report: &AnalysisReport) -> String {
    let mut out = String::new();
    if report.command == "analyze" {
        out.push_str(&summary_line(report));
        out.push('\n');
    }
    out.push_str(&format!(
        "algebra: {} (generators: {})\n",
        report.algebra,
        report.generators.join(", ")
    ));
    if !report.params.is_empty() {
        let binds: Vec<String> = report
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        out.push_str(&format!("params: {}\n", binds.join(", ")));
    }
    if let Some(shape) = &report.shape {
        out.push_str(&format!(
            "shape: {}\n",
            if shape.valid { "VALID" } else { "INVALID" }
        ));
        for pair in &shape.pairs {
            out.push_str(&format!(
                "  pair ({}, {}): c = {}, linear = [{}], constant = {}\n",
                pair.left,
                pair.right,
                pair.c,
                pair.linear.join(", "),
                pair.constant
            ));
        }
        for d in &shape.diagnostics {
            out.push_str(&format!("  [{}] {}\n", d.kind, d.message));
        }
    }
    if let Some(flags) = &report.flags {
        out.push_str(&format!(
            "flags: C{} B{} P{} QC{} SC{}\n",
            mark(flags.constant),
            mark(flags.bijective),
            mark(flags.pre_commutative),
            mark(flags.quasi_commutative),
            mark(flags.semi_commutative)
        ));
    }
    if let Some(pbw) = &report.pbw {
        if pbw.certified {
            let noun = if pbw.obstruction_count == 1 {
                "overlap"
            } else {
                "overlaps"
            };
            out.push_str(&format!(
                "pbw basis: CERTIFIED ({} {noun} checked)\n",
                pbw.obstruction_count
            ));
        } else {
            let witness = pbw.witness.as_deref().unwrap_or("?");
            out.push_str(&format!("pbw basis: REFUTED, witness {witness}\n"));
        }
        for rule in &pbw.rules {
            out.push_str(&format!("  rule: {rule}\n"));
        }
    }
    if let Some(counts) = &report.s_counts {
        out.push_str(&format!("s-counts: {}\n", dims_line(counts)));
    }
    if let Some(k) = &report.koszul {
        out.push_str(&format!("koszul: {}\n", k.verdict));
        if let Some(route) = &k.route {
            out.push_str(&format!("  route: {route}\n"));
        }
        if let Some(h) = k.homogeneous {
            out.push_str(&format!("  input already homogeneous: {}\n", yes_no(h)));
        }
        if let Some(at) = &k.refuted_at {
            out.push_str(&format!(
                "  off-diagonal dimension {} at ({}, {})\n",
                at.dim, at.i, at.j
            ));
        }
        out.push_str(&format!("  bounds: ({}, {})\n", k.max_i, k.max_j));
    }
    if let Some(ext) = &report.ext {
        out.push_str(&format!(
            "ext table to ({}, {}){}:\n",
            ext.max_i,
            ext.max_j,
            if ext.trusted { "" } else { ", truncated by size cap" }
        ));
        for (i, row) in ext.dims.iter().enumerate() {
            out.push_str(&format!("  i={i}: {}\n", dims_line(row)));
        }
    }
    if let Some(pairing) = &report.pairing {
        if pairing.holds {
            out.push_str(&format!(
                "pairing: holds through degree {}\n",
                pairing.checked_to
            ));
        } else {
            let at = pairing.first_failure.expect("failed pairing has a degree");
            out.push_str(&format!("pairing: FAILS first at degree {at}\n"));
        }
        out.push_str(&format!("  dims: {}\n", dims_line(&pairing.dims)));
        out.push_str(&format!("  dual dims: {}\n", dims_line(&pairing.dual_dims)));
    }
    if let Some(h) = &report.hilbert {
        out.push_str(&format!("hilbert: {}\n", dims_line(&h.dims)));
    }
    if let Some(h) = &report.homogeneous_hilbert {
        out.push_str(&format!("homogeneous hilbert: {}\n", dims_line(&h.dims)));
    }
    if let Some(d) = &report.deformation {
        out.push_str("deformation:\n");
        out.push_str(&format!("  condition (I): {}\n", yes_no(d.cond_i)));
        out.push_str(&format!("  condition (J): {}\n", yes_no(d.cond_j)));
        out.push_str(&format!(
            "  quadratic version certified: {}\n",
            yes_no(d.b_certified)
        ));
        out.push_str(&format!("  verdict: {}\n", d.verdict));
        out.push_str(&format!(
            "  filtered dims:  {}\n",
            dims_line(&d.gr_hilbert.gr_dims)
        ));
        out.push_str(&format!(
            "  quadratic dims: {}\n",
            dims_line(&d.gr_hilbert.b_dims)
        ));
        out.push_str(&format!(
            "  dimensions {} through degree {}\n",
            if d.gr_hilbert.matched { "match" } else { "DIVERGE" },
            d.gr_hilbert.checked_to
        ));
    }
    if !report.notes.is_empty() {
        out.push_str("notes:\n");
        for note in &report.notes {
            out.push_str(&format!("  - {note}\n"));
        }
    }
    out
}
