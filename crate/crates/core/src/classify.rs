//! Shape checking and subclass flags.
//!
//! A presentation has valid shape when its relators correspond one-to-one to
//! the generator pairs (i, j) with i < j, each relator being
//!
//! ```text
//! x_j x_i - c_ij x_i x_j + (linear part) + (constant part),    c_ij != 0
//! ```
//!
//! after scaling to a monic leading term. Over a field this is exactly the
//! condition for the presentation to define a skew PBW extension of the
//! ground field, up to the basis question settled separately by the
//! rewriting certificate.

use std::collections::BTreeMap;

use num::traits::Zero;

use crate::error::Error;
use crate::freealg::{NcPoly, Word};
use crate::presentation::Presentation;
use crate::scalar::Scalar;

// ---- Shape ----

/// Data extracted from the relator matched to one pair (i, j), i < j:
/// the coefficient `c` with `x_j x_i = c x_i x_j + ...`, the linear
/// coefficients indexed by generator, and the constant term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairData {
    pub c: Scalar,
    pub linear: Vec<Scalar>,
    pub constant: Scalar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagnosticKind {
    MissingPair,
    DuplicatePair,
    ForeignQuadraticWord,
    ZeroC,
    NotBinomialLead,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeDiagnostic {
    pub kind: DiagnosticKind,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeReport {
    pub valid: bool,
    /// Extracted data per pair (i, j) with i < j; total exactly when valid.
    pub pairs: BTreeMap<(u32, u32), PairData>,
    pub diagnostics: Vec<ShapeDiagnostic>,
}

/// Checks every relator against the pair form above. Never fails; problems
/// are reported as diagnostics and `valid` is true only when there are none.
pub fn check_shape(p: &Presentation) -> ShapeReport {
    let gens = p.gens();
    let n = gens.len() as u32;
    let mut diagnostics = Vec::new();
    let mut occupants: BTreeMap<(u32, u32), Vec<usize>> = BTreeMap::new();

    for (k, relator) in p.relators().iter().enumerate() {
        let monic = relator.monic().expect("relators are nonzero");
        let (lead, _) = monic.leading_term().expect("relators are nonzero");
        let letters = lead.letters();
        if letters.len() < 2 {
            diagnostics.push(ShapeDiagnostic {
                kind: DiagnosticKind::NotBinomialLead,
                message: format!(
                    "relator {} leads with {}, not a two-letter word",
                    k + 1,
                    lead.display(gens)
                ),
            });
            continue;
        }
        let (a, b) = (letters[0], letters[1]);
        if a == b {
            diagnostics.push(ShapeDiagnostic {
                kind: DiagnosticKind::ForeignQuadraticWord,
                message: format!(
                    "relator {} leads with the square {}",
                    k + 1,
                    lead.display(gens)
                ),
            });
            continue;
        }
        occupants.entry((a.min(b), a.max(b))).or_default().push(k);
    }

    let mut pairs = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            let Some(ks) = occupants.get(&(i, j)) else {
                diagnostics.push(ShapeDiagnostic {
                    kind: DiagnosticKind::MissingPair,
                    message: format!(
                        "no relator for the pair ({}, {})",
                        gens.name(i),
                        gens.name(j)
                    ),
                });
                continue;
            };
            if ks.len() > 1 {
                diagnostics.push(ShapeDiagnostic {
                    kind: DiagnosticKind::DuplicatePair,
                    message: format!(
                        "{} relators share the pair ({}, {})",
                        ks.len(),
                        gens.name(i),
                        gens.name(j)
                    ),
                });
                continue;
            }
            let monic = p.relators()[ks[0]].monic().expect("relators are nonzero");
            if let Some(data) = extract_pair_data(&monic, i, j, n, ks[0], gens, &mut diagnostics) {
                pairs.insert((i, j), data);
            }
        }
    }

    ShapeReport { valid: diagnostics.is_empty(), pairs, diagnostics }
}

fn extract_pair_data(
    monic: &NcPoly,
    i: u32,
    j: u32,
    n: u32,
    relator_index: usize,
    gens: &crate::freealg::GeneratorSet,
    diagnostics: &mut Vec<ShapeDiagnostic>,
) -> Option<PairData> {
    let down = Word::from_letters(&[j, i]);
    let up = Word::from_letters(&[i, j]);
    let mut ok = true;
    for (w, _) in monic.terms() {
        if w.len() == 2 && *w != down && *w != up {
            diagnostics.push(ShapeDiagnostic {
                kind: DiagnosticKind::ForeignQuadraticWord,
                message: format!(
                    "relator {} contains the quadratic word {} outside the pair ({}, {})",
                    relator_index + 1,
                    w.display(gens),
                    gens.name(i),
                    gens.name(j)
                ),
            });
            ok = false;
        }
    }
    if !ok {
        return None;
    }
    // The descending word must carry the (monic) leading coefficient; the
    // ascending word's coefficient is -c, and c must not vanish.
    let c = -monic.coeff(&up);
    if monic.coeff(&down).is_zero() || c.is_zero() {
        diagnostics.push(ShapeDiagnostic {
            kind: DiagnosticKind::ZeroC,
            message: format!(
                "relator {} does not link {} to a nonzero multiple of {}",
                relator_index + 1,
                down.display(gens),
                up.display(gens)
            ),
        });
        return None;
    }
    let linear: Vec<Scalar> = (0..n).map(|t| monic.coeff(&Word::gen(t))).collect();
    let constant = monic.coeff(&Word::one());
    Some(PairData { c, linear, constant })
}

// ---- Subclass flags ----

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriState {
    Yes,
    No,
    Unchecked,
}

/// Membership flags for the subclasses a shape-valid presentation can fall
/// into. `basis_certified` is filled in by the rewriting certificate, not by
/// classification itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubclassFlags {
    pub constant: bool,
    pub bijective: bool,
    pub pre_commutative: bool,
    pub quasi_commutative: bool,
    pub semi_commutative: bool,
    pub pre_koszul: bool,
    pub homogeneous_pre_koszul: bool,
    pub basis_certified: TriState,
}

/// Computes the subclass flags. Over a field the coefficient endomorphisms
/// are trivially the identity and every nonzero `c_ij` is invertible, so
/// `constant` and `bijective` always hold once the shape is valid; the
/// remaining flags depend on the lower-order parts of the relators.
pub fn classify_subclasses(p: &Presentation) -> Result<SubclassFlags, Error> {
    let report = check_shape(p);
    if !report.valid {
        return Err(Error::InvalidShape);
    }
    let pre_commutative = report.pairs.values().all(|d| d.constant.is_zero());
    let quasi_commutative = pre_commutative
        && report
            .pairs
            .values()
            .all(|d| d.linear.iter().all(Scalar::is_zero));
    Ok(SubclassFlags {
        constant: true,
        bijective: true,
        pre_commutative,
        quasi_commutative,
        semi_commutative: quasi_commutative,
        pre_koszul: pre_commutative,
        homogeneous_pre_koszul: quasi_commutative,
        basis_certified: TriState::Unchecked,
    })
}

/// Pre-Koszul flags for an arbitrary presentation, with no shape assumption:
/// the first flag holds when every relator has zero constant term, the
/// second when additionally every linear term vanishes.
pub fn check_pre_koszul_free(p: &Presentation) -> (bool, bool) {
    let pre = p
        .relators()
        .iter()
        .all(|r| r.graded_component(0).is_zero());
    let homogeneous = pre
        && p.relators()
            .iter()
            .all(|r| r.graded_component(1).is_zero());
    (pre, homogeneous)
}

/// Drops the linear and constant parts of every pair relator, producing the
/// quasi-commutative presentation with the same `c_ij`. Relators come out
/// monic, ordered by pair. Requires valid shape.
pub fn homogeneous_version(p: &Presentation) -> Result<Presentation, Error> {
    let report = check_shape(p);
    if !report.valid {
        return Err(Error::InvalidShape);
    }
    let relators = report
        .pairs
        .iter()
        .map(|(&(i, j), data)| {
            let mut r = NcPoly::from_word(Word::from_letters(&[j, i]));
            r.add_term(Word::from_letters(&[i, j]), -data.c.clone());
            r
        })
        .collect();
    Ok(Presentation::new(p.name(), p.gens().clone(), relators))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{fixture, parse_presentation, ParamBinding};
    use crate::scalar::int;

    fn parse(text: &str) -> Presentation {
        parse_presentation(text, &ParamBinding::new()).unwrap()
    }

    fn kinds(report: &ShapeReport) -> Vec<DiagnosticKind> {
        report.diagnostics.iter().map(|d| d.kind).collect()
    }

    #[test]
    fn sridharan1_is_fully_commutative() {
        let p = fixture("sridharan1").unwrap();
        let report = check_shape(&p);
        assert!(report.valid);
        assert_eq!(report.pairs.len(), 3);
        for data in report.pairs.values() {
            assert_eq!(data.c, int(1));
            assert!(data.linear.iter().all(Scalar::is_zero));
            assert!(data.constant.is_zero());
        }
        let flags = classify_subclasses(&p).unwrap();
        assert!(flags.quasi_commutative && flags.semi_commutative);
        assert_eq!(flags.basis_certified, TriState::Unchecked);
    }

    #[test]
    fn sridharan4_extracts_linear_part() {
        let p = fixture("sridharan4").unwrap();
        let report = check_shape(&p);
        assert!(report.valid);
        // Monic form of the (y, z) relator: zy - yz + 2y.
        let data = &report.pairs[&(1, 2)];
        assert_eq!(data.c, int(1));
        assert_eq!(data.linear[1], int(2));
        assert!(data.constant.is_zero());
        let flags = classify_subclasses(&p).unwrap();
        assert!(flags.pre_commutative && !flags.quasi_commutative);
    }

    #[test]
    fn sridharan7_has_constant_part() {
        let p = fixture("sridharan7").unwrap();
        let report = check_shape(&p);
        assert!(report.valid);
        assert_eq!(report.pairs[&(0, 1)].constant, int(1));
        let flags = classify_subclasses(&p).unwrap();
        assert!(!flags.pre_commutative && !flags.pre_koszul);
        assert!(flags.constant && flags.bijective);
    }

    #[test]
    fn qplane_records_its_coefficient() {
        let p = fixture("qplane").unwrap();
        let report = check_shape(&p);
        assert_eq!(report.pairs[&(0, 1)].c, int(2));
    }

    #[test]
    fn sklyanin_coefficients_are_negative() {
        let p = fixture("sklyanin").unwrap();
        let report = check_shape(&p);
        assert!(report.valid);
        assert_eq!(report.pairs[&(0, 1)].c, int(-2));
        assert_eq!(report.pairs[&(0, 2)].c, crate::scalar::ratio(-1, 2));
        assert_eq!(report.pairs[&(1, 2)].c, int(-2));
        let flags = classify_subclasses(&p).unwrap();
        assert!(flags.quasi_commutative);
    }

    #[test]
    fn x2defect_reports_foreign_word() {
        let p = fixture("x2defect").unwrap();
        let report = check_shape(&p);
        assert!(!report.valid);
        assert_eq!(kinds(&report), vec![DiagnosticKind::ForeignQuadraticWord]);
        assert!(matches!(classify_subclasses(&p), Err(Error::InvalidShape)));
    }

    #[test]
    fn square_lead_is_foreign() {
        let p = parse("algebra sq\ngenerators x, y\nrelation x*x = y");
        let report = check_shape(&p);
        assert!(kinds(&report).contains(&DiagnosticKind::ForeignQuadraticWord));
        // The pair (x, y) is also unmatched.
        assert!(kinds(&report).contains(&DiagnosticKind::MissingPair));
    }

    #[test]
    fn missing_and_duplicate_pairs() {
        let p = parse("algebra m\ngenerators x, y, z\nrelation y*x = x*y");
        let report = check_shape(&p);
        assert_eq!(
            kinds(&report),
            vec![DiagnosticKind::MissingPair, DiagnosticKind::MissingPair]
        );

        let q = parse("algebra d\ngenerators x, y\nrelation y*x = x*y\nrelation y*x = 2*x*y");
        let report = check_shape(&q);
        assert_eq!(kinds(&report), vec![DiagnosticKind::DuplicatePair]);
    }

    #[test]
    fn ascending_lead_means_zero_c() {
        // x*y + x has no y*x term at all.
        let p = parse("algebra z\ngenerators x, y\nrelation x*y + x = 0");
        let report = check_shape(&p);
        assert_eq!(kinds(&report), vec![DiagnosticKind::ZeroC]);
    }

    #[test]
    fn degree_one_relator_is_not_binomial() {
        let p = parse("algebra l\ngenerators x, y\nrelation x = 1");
        let report = check_shape(&p);
        assert!(kinds(&report).contains(&DiagnosticKind::NotBinomialLead));
    }

    #[test]
    fn single_generator_shape_is_vacuously_valid() {
        let p = fixture("poly1").unwrap();
        let report = check_shape(&p);
        assert!(report.valid);
        assert!(report.pairs.is_empty());
        let flags = classify_subclasses(&p).unwrap();
        assert!(flags.semi_commutative);
    }

    #[test]
    fn pre_koszul_without_shape() {
        assert_eq!(check_pre_koszul_free(&fixture("sklyanin").unwrap()), (true, true));
        assert_eq!(check_pre_koszul_free(&fixture("sridharan9").unwrap()), (false, false));
        assert_eq!(check_pre_koszul_free(&fixture("sridharan4").unwrap()), (true, false));
        let p = parse("algebra h\ngenerators x, y\nrelation x*x = y*y");
        assert_eq!(check_pre_koszul_free(&p), (true, true));
    }

    #[test]
    fn homogeneous_version_drops_lower_terms() {
        let p = fixture("sridharan7").unwrap();
        let h = homogeneous_version(&p).unwrap();
        let expected: Vec<NcPoly> = [(1u32, 0u32), (2, 0), (2, 1)]
            .iter()
            .map(|&(j, i)| {
                NcPoly::from_terms([
                    (Word::from_letters(&[j, i]), int(1)),
                    (Word::from_letters(&[i, j]), int(-1)),
                ])
            })
            .collect();
        assert_eq!(h.relators(), &expected[..]);
        let flags = classify_subclasses(&h).unwrap();
        assert!(flags.quasi_commutative && flags.semi_commutative);
    }

    #[test]
    fn homogeneous_version_fixes_quasi_commutative_input() {
        let p = fixture("qaffine3").unwrap();
        let h = homogeneous_version(&p).unwrap();
        assert_eq!(p, h);
    }

    #[test]
    fn homogeneous_version_is_idempotent() {
        for name in ["sridharan6", "sridharan10", "weyl", "sklyanin"] {
            let p = fixture(name).unwrap();
            let h = homogeneous_version(&p).unwrap();
            let hh = homogeneous_version(&h).unwrap();
            assert_eq!(h, hh, "{name}");
        }
    }

    #[test]
    fn homogeneous_version_requires_valid_shape() {
        let p = fixture("x2defect").unwrap();
        assert!(matches!(homogeneous_version(&p), Err(Error::InvalidShape)));
    }

    #[test]
    fn flags_follow_the_ten_bracket_rows() {
        let expect = [
            ("sridharan1", true, true),
            ("sridharan2", true, false),
            ("sridharan3", true, false),
            ("sridharan4", true, false),
            ("sridharan5", true, false),
            ("sridharan6", true, false),
            ("sridharan7", false, false),
            ("sridharan8", false, false),
            ("sridharan9", false, false),
            ("sridharan10", false, false),
        ];
        for (name, pre, qc) in expect {
            let flags = classify_subclasses(&fixture(name).unwrap()).unwrap();
            assert!(flags.constant && flags.bijective, "{name}");
            assert_eq!(flags.pre_commutative, pre, "{name}");
            assert_eq!(flags.quasi_commutative, qc, "{name}");
            assert_eq!(flags.semi_commutative, qc, "{name}");
        }
    }
}
