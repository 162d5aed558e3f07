//! Acceptance suite: ten criteria, one test per criterion, each printing a
//! PASS line with its runtime. Criteria with a stated time budget assert it.
//! The
//! cohomology criterion recomputes its table with an independent in-test
//! oracle (closed-form monomial basis, own elimination) rather than through
//! the library's rewriting machinery.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use num::rational::BigRational;
use num::traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skewpbw::classify::{check_shape, DiagnosticKind};
use skewpbw::deform::{deformation_verdict, DeformationVerdict};
use skewpbw::koszul::{ext_table, hilbert_pairing_test, koszul_verdict, KoszulVerdict};
use skewpbw::presentation::{fixture, fixture_names};
use skewpbw::rewrite::certify_pbw_basis;
use skewpbw::{scalar, GeneratorSet, NcPoly, Presentation, Word};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewpbw"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn workspace_path(rel: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .join(rel)
        .display()
        .to_string()
}

fn pass(n: usize, what: &str, started: Instant) {
    println!(
        "PASS criterion {n:02}: {what} ({} ms)",
        started.elapsed().as_millis()
    );
}

fn within(started: Instant, budget: Duration, n: usize) {
    let elapsed = started.elapsed();
    assert!(
        elapsed <= budget,
        "criterion {n} exceeded its time budget: {elapsed:?} > {budget:?}"
    );
}

// ---- Criterion 1 ----

#[test]
fn criterion_01_sridharan_table_matches_expectation() {
    let started = Instant::now();
    let out = bin(&[
        "table",
        "sridharan",
        "--expect",
        &workspace_path("tables/sridharan.expected"),
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {:?}", out.stderr);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("expectation: matched 10 rows"));
    within(started, Duration::from_secs(1), 1);
    pass(1, "ten-row table matches the stored expectation", started);
}

// ---- Criterion 2 ----

#[test]
fn criterion_02_field_base_rows_affirm_every_mark() {
    let started = Instant::now();
    let out = bin(&[
        "table",
        "core",
        "--expect",
        &workspace_path("tables/classification27-field.expected"),
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {:?}", out.stderr);

    let poly3 = fixture("poly3").unwrap();
    assert_eq!(poly3.num_gens(), 3);
    let qaffine3 = fixture("qaffine3").unwrap();
    let report = check_shape(&qaffine3);
    let cs: Vec<String> = report.pairs.values().map(|d| scalar::format(&d.c)).collect();
    assert_eq!(cs, vec!["2", "3", "5"]);
    for name in ["poly3", "sklyanin", "qaffine3"] {
        let flags = skewpbw::classify::classify_subclasses(&fixture(name).unwrap()).unwrap();
        assert!(
            flags.constant
                && flags.bijective
                && flags.pre_commutative
                && flags.quasi_commutative
                && flags.semi_commutative,
            "{name} must affirm all five marks"
        );
    }
    pass(2, "field-base rows affirm C, B, P, QC, SC", started);
}

// ---- Criterion 3 ----

#[test]
fn criterion_03_basis_certificates_across_the_corpus() {
    let started = Instant::now();
    let mut certified: Vec<String> = (1..=10).map(|k| format!("sridharan{k}")).collect();
    for name in ["weyl", "poly2", "poly3", "qplane", "qaffine3", "sklyanin"] {
        certified.push(name.to_string());
    }
    for name in &certified {
        let cert = certify_pbw_basis(&fixture(name).unwrap()).unwrap();
        assert!(cert.certified, "{name} must certify");
        assert!(cert.witness.is_none());
    }
    let refuted = certify_pbw_basis(&fixture("nonjacobi").unwrap()).unwrap();
    assert!(!refuted.certified);
    let witness = refuted.witness.expect("refutation carries a witness");
    assert_eq!(witness.display(fixture("nonjacobi").unwrap().gens()), "z + y + x");
    let out = bin(&["analyze", "fixture:nonjacobi"]);
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("REFUTED, witness z + y + x"));
    within(started, Duration::from_secs(1), 3);
    pass(3, "16 certificates plus one refutation with witness", started);
}

// ---- Criterion 4 ----

#[test]
fn criterion_04_koszul_verdicts_split_by_constants() {
    let started = Instant::now();
    for k in 1..=10 {
        let p = fixture(&format!("sridharan{k}")).unwrap();
        let verdict = koszul_verdict(&p, (4, 4)).unwrap();
        if k <= 6 {
            assert!(
                matches!(verdict, KoszulVerdict::CertifiedKoszul { .. }),
                "sridharan{k}: {verdict:?}"
            );
        } else {
            assert_eq!(verdict, KoszulVerdict::NotPreKoszul, "sridharan{k}");
        }
    }
    for name in ["qaffine3", "sklyanin", "qplane", "poly2", "poly3"] {
        let verdict = koszul_verdict(&fixture(name).unwrap(), (4, 4)).unwrap();
        match verdict {
            KoszulVerdict::CertifiedKoszul { homogeneous, .. } => {
                assert!(homogeneous, "{name} is its own homogeneous version")
            }
            other => panic!("{name}: {other:?}"),
        }
    }
    pass(4, "certified for rows 1..6 and quadratic fixtures, else refused", started);
}

// ---- Criterion 5: independent cohomology oracle ----

type Mono = (usize, usize);
type Tuple = Vec<Mono>;

/// Basis of the degree-j block of i tensor factors, each factor a monomial
/// x^a y^b of degree at least one.
fn oracle_block(i: usize, j: usize) -> Vec<Tuple> {
    fn rec(slots: usize, deg: usize, acc: &mut Tuple, out: &mut Vec<Tuple>) {
        if slots == 0 {
            if deg == 0 {
                out.push(acc.clone());
            }
            return;
        }
        let mut d = 1;
        while d + (slots - 1) <= deg {
            for a in 0..=d {
                acc.push((a, d - a));
                rec(slots - 1, deg - d, acc, out);
                acc.pop();
            }
            d += 1;
        }
    }
    if i == 0 {
        return if j == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    rec(i, j, &mut Vec::new(), &mut out);
    out
}

fn qpow(q: &BigRational, e: usize) -> BigRational {
    let mut out = BigRational::one();
    for _ in 0..e {
        out *= q;
    }
    out
}

/// Bar differential of one tuple: merge each adjacent pair with alternating
/// signs, using (x^a y^b)(x^c y^d) = q^(bc) x^(a+c) y^(b+d).
fn oracle_diff(t: &Tuple, q: &BigRational) -> Vec<(Tuple, BigRational)> {
    let mut out = Vec::new();
    for k in 0..t.len().saturating_sub(1) {
        let (a1, b1) = t[k];
        let (a2, b2) = t[k + 1];
        let mut coeff = qpow(q, b1 * a2);
        if k % 2 == 1 {
            coeff = -coeff;
        }
        let mut merged = t.clone();
        merged[k] = (a1 + a2, b1 + b2);
        merged.remove(k + 1);
        out.push((merged, coeff));
    }
    out
}

fn oracle_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for k in 0..rows.len() {
            if k != r && !rows[k][c].is_zero() {
                let factor = &rows[k][c] / &pivot;
                for cc in c..cols {
                    let sub = &rows[r][cc] * &factor;
                    rows[k][cc] -= sub;
                }
            }
        }
        r += 1;
    }
    r
}

fn oracle_d_rank(i: usize, j: usize, q: &BigRational) -> usize {
    if i < 2 {
        return 0;
    }
    let sources = oracle_block(i, j);
    let targets = oracle_block(i - 1, j);
    let index: BTreeMap<Tuple, usize> = targets
        .into_iter()
        .enumerate()
        .map(|(k, t)| (t, k))
        .collect();
    let mut rows = Vec::new();
    for t in &sources {
        let mut row = vec![BigRational::zero(); index.len()];
        for (merged, coeff) in oracle_diff(t, q) {
            row[index[&merged]] += coeff;
        }
        rows.push(row);
    }
    oracle_rank(rows)
}

fn oracle_ext(q_int: i64, max_i: usize, max_j: usize) -> Vec<Vec<usize>> {
    let q = BigRational::from_integer(q_int.into());
    // The squared differential must vanish, otherwise the ranks mean nothing.
    for i in 2..=max_i + 1 {
        for j in 0..=max_j {
            for t in oracle_block(i, j) {
                let mut acc: BTreeMap<Tuple, BigRational> = BTreeMap::new();
                for (mid, c1) in oracle_diff(&t, &q) {
                    for (end, c2) in oracle_diff(&mid, &q) {
                        *acc.entry(end).or_insert_with(BigRational::zero) += &c1 * &c2;
                    }
                }
                assert!(acc.values().all(Zero::is_zero), "d^2 != 0 at {t:?}");
            }
        }
    }
    let mut dims = vec![vec![0usize; max_j + 1]; max_i + 1];
    for i in 0..=max_i {
        for j in 0..=max_j {
            let bdim = oracle_block(i, j).len();
            let into = oracle_d_rank(i, j, &q);
            let from = oracle_d_rank(i + 1, j, &q);
            dims[i][j] = bdim
                .checked_sub(into + from)
                .expect("rank bound exceeded block dimension");
        }
    }
    dims
}

#[test]
fn criterion_05_cohomology_diagonal_matches_the_oracle() {
    let started = Instant::now();
    for (name, q) in [("poly2", 1i64), ("qplane", 2)] {
        let table = ext_table(&fixture(name).unwrap(), 4, 4).unwrap();
        assert!(table.trusted);
        assert_eq!(table.diagonal(), vec![1, 2, 1, 0, 0], "{name} diagonal");
        for (i, row) in table.dims.iter().enumerate() {
            for (j, &dim) in row.iter().enumerate() {
                if i != j {
                    assert_eq!(dim, 0, "{name} off-diagonal ({i}, {j})");
                }
            }
        }
        assert_eq!(table.dims, oracle_ext(q, 4, 4), "{name} vs oracle");
    }
    within(started, Duration::from_secs(10), 5);
    pass(5, "tables equal an independent bar-complex computation", started);
}

// ---- Criterion 6 ----

#[test]
fn criterion_06_pairing_holds_to_degree_six() {
    let started = Instant::now();
    for name in ["poly2", "qplane", "qaffine3"] {
        let pairing = hilbert_pairing_test(&fixture(name).unwrap(), 6).unwrap();
        assert!(pairing.holds, "{name}");
        assert_eq!(pairing.checked_to, 6);
    }
    let free2 = Presentation::new(
        "free2",
        GeneratorSet::new(vec!["x".to_string(), "y".to_string()]),
        Vec::new(),
    );
    let pairing = hilbert_pairing_test(&free2, 6).unwrap();
    assert!(pairing.holds, "free algebra on two generators");
    within(started, Duration::from_secs(1), 6);
    pass(6, "alternating sums vanish through degree 6", started);
}

// ---- Criterion 7 ----

#[test]
fn criterion_07_deformation_suite() {
    let started = Instant::now();
    let expected_dims = vec![1, 3, 6, 10, 15, 21];
    for k in 1..=10 {
        let p = fixture(&format!("sridharan{k}")).unwrap();
        let report = deformation_verdict(&p, 5).unwrap();
        assert_eq!(
            report.verdict,
            DeformationVerdict::CertifiedPBWDeformation,
            "sridharan{k}"
        );
        assert!(report.gr_hilbert.matched, "sridharan{k}");
        assert_eq!(report.gr_hilbert.gr_dims, expected_dims, "sridharan{k}");
    }
    let report = deformation_verdict(&fixture("nonjacobi").unwrap(), 5).unwrap();
    assert_eq!(report.verdict, DeformationVerdict::RefutedByJ);
    assert!(!report.gr_hilbert.matched);
    within(started, Duration::from_secs(5), 7);
    pass(7, "ten certified deformations, one refusal by the overlap test", started);
}

// ---- Criterion 8: random quasi-commutative presentations ----

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc = 1usize;
    for t in 0..k {
        acc = acc * (n - t) / (t + 1);
    }
    acc
}

fn random_qc(n: usize, rng: &mut ChaCha8Rng) -> Presentation {
    let names: Vec<String> = (0..n).map(|k| format!("g{k}")).collect();
    let mut relators = Vec::new();
    for i in 0..n as u32 {
        for j in (i + 1)..n as u32 {
            let mut num: i64 = rng.random_range(1..=5);
            if rng.random_bool(0.5) {
                num = -num;
            }
            let den: i64 = rng.random_range(1..=5);
            let c = scalar::ratio(num, den);
            relators.push(NcPoly::from_terms([
                (Word::from_letters(&[j, i]), scalar::int(1)),
                (Word::from_letters(&[i, j]), -c),
            ]));
        }
    }
    Presentation::new("random_qc", GeneratorSet::new(names), relators)
}

#[test]
fn criterion_08_random_quasi_commutative_presentations_certify() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
    for trial in 0..50 {
        let n = rng.random_range(1..=3usize);
        let p = random_qc(n, &mut rng);
        assert!(check_shape(&p).valid, "trial {trial}");
        let cert = certify_pbw_basis(&p).unwrap();
        assert!(cert.certified, "trial {trial} with n = {n}");
        let prefix = cert.system.hilbert_prefix(5).unwrap();
        for d in 0..=5 {
            assert_eq!(
                prefix.dims[d],
                binomial(d + n - 1, n - 1),
                "trial {trial}, degree {d}"
            );
        }
    }
    within(started, Duration::from_secs(10), 8);
    pass(8, "50 seeded presentations certify with binomial growth", started);
}

// ---- Criterion 9 ----

#[test]
fn criterion_09_shape_rejections_name_the_defect() {
    let started = Instant::now();
    let report = check_shape(&fixture("x2defect").unwrap());
    assert!(!report.valid);
    assert!(report
        .diagnostics
        .iter()
        .any(|d| d.kind == DiagnosticKind::ForeignQuadraticWord));

    let gens = GeneratorSet::new(vec!["x".into(), "y".into(), "z".into()]);
    let commute = |i: u32, j: u32| {
        NcPoly::from_terms([
            (Word::from_letters(&[j, i]), scalar::int(1)),
            (Word::from_letters(&[i, j]), scalar::int(-1)),
        ])
    };
    let gap = Presentation::new("gap", gens, vec![commute(0, 1), commute(1, 2)]);
    let report = check_shape(&gap);
    assert!(!report.valid);
    assert!(report
        .diagnostics
        .iter()
        .any(|d| d.kind == DiagnosticKind::MissingPair));

    let out = bin(&["classify", "fixture:x2defect"]);
    assert_eq!(out.status.code(), Some(2));
    pass(9, "foreign word and missing pair both rejected", started);
}

// ---- Criterion 10 ----

#[test]
fn criterion_10_corpus_output_is_deterministic() {
    let started = Instant::now();
    for name in fixture_names() {
        let spec = format!("fixture:{name}");
        let first = bin(&["analyze", &spec, "--json"]);
        let second = bin(&["analyze", &spec, "--json"]);
        assert!(!first.stdout.is_empty(), "{name} produced no report");
        assert_eq!(first.stdout, second.stdout, "analyze {name}");
    }
    let first = bin(&["table", "all", "--json"]);
    let second = bin(&["table", "all", "--json"]);
    assert_eq!(first.stdout, second.stdout, "table all");
    pass(10, "repeated corpus runs are byte-identical", started);
}
