//! Deformation analysis for filtered quadratic presentations: splitting
//! relators into a quadratic part and the lower-order maps, the two linear
//! conditions guaranteeing a flat deformation, and a bounded comparison of
//! the filtration dimensions against the quadratic version.
//!
//! The ambient spaces are the filtered slices F_2 = K + V + V^2 and
//! F_4 = K + ... + V^4 of the tensor algebra, handled as explicit
//! coordinate vectors with higher-degree words in earlier columns, so that
//! echelon pivots expose intersections with lower filtration levels.

use num::traits::Zero;

use crate::error::Error;
use crate::freealg::{GeneratorSet, NcPoly, Word};
use crate::linalg::QMatrix;
use crate::presentation::Presentation;
use crate::rewrite::{certify_pbw_basis, orient, DEFAULT_RULE_BUDGET};
use crate::scalar::Scalar;

// ---- Filtered coordinates ----

fn filtered_len(n: usize, max_deg: usize) -> usize {
    (0..=max_deg).map(|d| n.pow(d as u32)).sum()
}

/// Position of a word in the ascending block layout [1 | n | n^2 | ...]:
/// block offset by degree, base-n digits within the block.
fn word_flat(w: &Word, n: usize) -> usize {
    let d = w.len();
    let offset = if d == 0 { 0 } else { filtered_len(n, d - 1) };
    let mut digits = 0usize;
    for &a in w.letters() {
        digits = digits * n + a as usize;
    }
    offset + digits
}

/// Coordinates of a filtered element, columns in descending flat order so
/// that row echelon pivots land on the highest-degree word present.
fn filtered_row(p: &NcPoly, n: usize, max_deg: usize) -> Vec<Scalar> {
    let len = filtered_len(n, max_deg);
    let mut row = vec![Scalar::zero(); len];
    for (w, c) in p.terms() {
        assert!(w.len() <= max_deg, "word outside the filtration slice");
        row[len - 1 - word_flat(w, n)] = c.clone();
    }
    row
}

fn row_to_poly(row: &[Scalar], n: usize, max_deg: usize) -> NcPoly {
    let len = filtered_len(n, max_deg);
    let mut p = NcPoly::zero();
    for (col, c) in row.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let flat = len - 1 - col;
        let mut deg = 0;
        while filtered_len(n, deg) <= flat {
            deg += 1;
        }
        let mut digits = flat - if deg == 0 { 0 } else { filtered_len(n, deg - 1) };
        let mut letters = vec![0u32; deg];
        for k in (0..deg).rev() {
            letters[k] = (digits % n) as u32;
            digits /= n;
        }
        p.add_term(Word::from_letters(&letters), c.clone());
    }
    p
}

// ---- Splitting relators ----

/// A presentation's relation space P inside F_2, split degreewise: each
/// basis element equals `r - alpha - beta` with `r` its quadratic part.
/// When the given relators are independent in F_2 they are kept verbatim;
/// otherwise a canonical echelon basis of their span replaces them.
#[derive(Clone, Debug)]
pub struct DeformationData {
    name: String,
    gens: GeneratorSet,
    p_basis: Vec<NcPoly>,
    r_basis: Vec<NcPoly>,
    alpha: Vec<NcPoly>,
    beta: Vec<Scalar>,
}

impl DeformationData {
    /// Collects the split data without insisting that the quadratic parts
    /// are independent; the two condition checks below accept this raw form.
    pub fn from_presentation(p: &Presentation) -> DeformationData {
        let n = p.num_gens();
        let mut matrix = QMatrix::new(filtered_len(n, 2));
        for r in p.relators() {
            matrix.push_row(filtered_row(r, n, 2));
        }
        let p_basis: Vec<NcPoly> = if matrix.rank() == p.relators().len() {
            p.relators().to_vec()
        } else {
            let (echelon, _) = matrix.rref();
            echelon.rows().iter().map(|row| row_to_poly(row, n, 2)).collect()
        };
        let r_basis: Vec<NcPoly> = p_basis.iter().map(|b| b.graded_component(2)).collect();
        let alpha = p_basis.iter().map(|b| -&b.graded_component(1)).collect();
        let beta = p_basis.iter().map(|b| -b.coeff(&Word::one())).collect();
        DeformationData { name: p.name().to_string(), gens: p.gens().clone(), p_basis, r_basis, alpha, beta }
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    /// Basis of the relation space inside F_2.
    pub fn p_basis(&self) -> &[NcPoly] {
        &self.p_basis
    }

    /// Quadratic parts, aligned with `p_basis`.
    pub fn r_basis(&self) -> &[NcPoly] {
        &self.r_basis
    }

    /// Negated linear parts: `alpha[k]` is what the quadratic part
    /// `r_basis[k]` rewrites to in degree 1.
    pub fn alpha(&self) -> &[NcPoly] {
        &self.alpha
    }

    /// Negated constant parts.
    pub fn beta(&self) -> &[Scalar] {
        &self.beta
    }

    /// The quadratic version: same generators, the nonzero quadratic parts
    /// as relators.
    pub fn quadratic_presentation(&self) -> Presentation {
        let relators: Vec<NcPoly> =
            self.r_basis.iter().filter(|r| !r.is_zero()).cloned().collect();
        Presentation::new(format!("{}_quadratic", self.name), self.gens.clone(), relators)
    }
}

/// Splits the relators into quadratic parts and lower-order maps, requiring
/// the quadratic parts of a basis to stay independent so that the maps are
/// well defined on the quadratic image.
pub fn split_alpha_beta(p: &Presentation) -> Result<DeformationData, Error> {
    let data = DeformationData::from_presentation(p);
    if !check_condition_i(&data) {
        return Err(Error::DependentQuadraticParts);
    }
    Ok(data)
}

// ---- The two flatness conditions ----

/// True when no nonzero element of the relation space lies in F_1, i.e.
/// the quadratic parts of a basis are linearly independent.
pub fn check_condition_i(d: &DeformationData) -> bool {
    let n = d.num_gens();
    let mut matrix = QMatrix::new(filtered_len(n, 2));
    for r in &d.r_basis {
        matrix.push_row(filtered_row(r, n, 2));
    }
    matrix.rank() == d.p_basis.len()
}

/// True when multiplying the relation space by generators on either side
/// produces nothing new in F_2: the span of P, VP, PV and VPV inside F_4
/// meets F_2 exactly in P.
pub fn check_condition_j(d: &DeformationData) -> bool {
    let n = d.num_gens();
    let len4 = filtered_len(n, 4);
    let len2 = filtered_len(n, 2);
    let mut matrix = QMatrix::new(len4);
    for b in &d.p_basis {
        matrix.push_row(filtered_row(b, n, 4));
        for a in 0..n as u32 {
            matrix.push_row(filtered_row(&b.mul_word_left(&Word::gen(a)), n, 4));
            matrix.push_row(filtered_row(&b.mul_word_right(&Word::gen(a)), n, 4));
            for c in 0..n as u32 {
                let vbv = b.mul_word_left(&Word::gen(a)).mul_word_right(&Word::gen(c));
                matrix.push_row(filtered_row(&vbv, n, 4));
            }
        }
    }
    let (echelon, pivots) = matrix.rref();
    // A pivot inside the F_2 block means the whole row lives in F_2, since
    // everything left of a pivot vanishes and those columns are exactly the
    // higher-degree words. Such rows span the intersection with F_2.
    let mut intersection = QMatrix::new(len2);
    for (k, row) in echelon.rows().iter().enumerate() {
        let flat = len4 - 1 - pivots[k];
        if flat < len2 {
            // The low-degree block sits in the trailing columns, so the
            // F_2 coordinates are just the tail of the row.
            intersection.push_row(row[len4 - len2..].to_vec());
        }
    }
    let mut span_p = QMatrix::new(len2);
    for b in &d.p_basis {
        span_p.push_row(filtered_row(b, n, 2));
    }
    intersection.same_row_space(&span_p)
}

// ---- The verdict ----

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DeformationVerdict {
    CertifiedPBWDeformation,
    RefutedByI,
    RefutedByJ,
    InconclusiveBNotCertified,
}

impl std::fmt::Display for DeformationVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            DeformationVerdict::CertifiedPBWDeformation => "CertifiedPBWDeformation",
            DeformationVerdict::RefutedByI => "RefutedByI",
            DeformationVerdict::RefutedByJ => "RefutedByJ",
            DeformationVerdict::InconclusiveBNotCertified => "InconclusiveBNotCertified",
        };
        f.write_str(s)
    }
}

/// Filtration dimensions of the presented algebra against the dimensions
/// of its quadratic version, both from bounded completions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrComparison {
    pub matched: bool,
    pub checked_to: usize,
    pub gr_dims: Vec<usize>,
    pub b_dims: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct DeformationReport {
    pub cond_i: bool,
    pub cond_j: bool,
    /// Whether the quadratic version received a basis certificate; false
    /// in particular when it is not shape-valid.
    pub b_certified: bool,
    pub verdict: DeformationVerdict,
    pub gr_hilbert: GrComparison,
}

/// Runs both flatness conditions, certifies the quadratic version, and
/// compares filtration dimensions through degree `max_deg`. The verdict is
/// `CertifiedPBWDeformation` only when all three succeed; a failed
/// condition refutes, an uncertified quadratic version leaves the question
/// open.
pub fn deformation_verdict(p: &Presentation, max_deg: usize) -> Result<DeformationReport, Error> {
    assert!(max_deg >= 2, "comparison degree below the relator degree");
    let data = DeformationData::from_presentation(p);
    let cond_i = check_condition_i(&data);
    let cond_j = check_condition_j(&data);
    let b = data.quadratic_presentation();
    let b_certified = match certify_pbw_basis(&b) {
        Ok(cert) => cert.certified,
        Err(_) => false,
    };
    let verdict = if !cond_i {
        DeformationVerdict::RefutedByI
    } else if !cond_j {
        DeformationVerdict::RefutedByJ
    } else if !b_certified {
        DeformationVerdict::InconclusiveBNotCertified
    } else {
        DeformationVerdict::CertifiedPBWDeformation
    };
    let gr_dims = bounded_dims(p, max_deg)?;
    let b_dims = bounded_dims(&b, max_deg)?;
    let gr_hilbert = GrComparison {
        matched: gr_dims == b_dims,
        checked_to: max_deg,
        gr_dims,
        b_dims,
    };
    Ok(DeformationReport { cond_i, cond_j, b_certified, verdict, gr_hilbert })
}

fn bounded_dims(p: &Presentation, max_deg: usize) -> Result<Vec<usize>, Error> {
    let sys = orient(p)?;
    let (done, _) = sys.complete_bounded(max_deg + 1, DEFAULT_RULE_BUDGET)?;
    Ok(done.hilbert_prefix(max_deg)?.dims)
}
