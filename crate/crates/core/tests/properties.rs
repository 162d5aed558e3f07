//! Randomized checks of the algebraic core: ring axioms for free-algebra
//! polynomials, compatibility of the word order with multiplication, the
//! graded projections, and reduction behavior on certified rewrite systems.

use proptest::prelude::*;

use skewpbw::freealg::{deglex_compare, GeneratorSet, NcPoly, Word};
use skewpbw::presentation::{fixture, Presentation};
use skewpbw::rewrite::{certify_pbw_basis, Strategy as ReductionStrategy};
use skewpbw::scalar::{self, Scalar};

fn arb_word(n: u32, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..n, 0..=max_len).prop_map(|letters| Word::from_letters(&letters))
}

fn arb_coeff() -> impl Strategy<Value = Scalar> {
    (-2i64..=2).prop_map(scalar::int)
}

fn arb_poly(n: u32, max_len: usize, max_terms: usize) -> impl Strategy<Value = NcPoly> {
    prop::collection::vec((arb_word(n, max_len), arb_coeff()), 0..=max_terms)
        .prop_map(NcPoly::from_terms)
}

proptest! {
    #[test]
    fn addition_commutes(a in arb_poly(3, 3, 4), b in arb_poly(3, 3, 4)) {
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn multiplication_associates(
        a in arb_poly(3, 2, 3),
        b in arb_poly(3, 2, 3),
        c in arb_poly(3, 2, 3),
    ) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn multiplication_distributes(
        a in arb_poly(3, 2, 3),
        b in arb_poly(3, 2, 3),
        c in arb_poly(3, 2, 3),
    ) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
    }

    #[test]
    fn one_is_neutral(a in arb_poly(3, 3, 4)) {
        let one = NcPoly::one();
        prop_assert_eq!(&a * &one, a.clone());
        prop_assert_eq!(&one * &a, a);
    }

    #[test]
    fn word_order_is_total_and_consistent(u in arb_word(3, 4), v in arb_word(3, 4)) {
        let cmp = deglex_compare(&u, &v);
        prop_assert_eq!(cmp, u.cmp(&v));
        prop_assert_eq!(cmp == std::cmp::Ordering::Equal, u == v);
        prop_assert_eq!(deglex_compare(&v, &u), cmp.reverse());
    }

    #[test]
    fn word_order_survives_two_sided_multiplication(
        a in arb_word(3, 3),
        u in arb_word(3, 3),
        v in arb_word(3, 3),
        b in arb_word(3, 3),
    ) {
        prop_assume!(u < v);
        prop_assert!(a.concat(&u).concat(&b) < a.concat(&v).concat(&b));
    }

    #[test]
    fn leading_terms_multiply(a in arb_poly(3, 3, 4), b in arb_poly(3, 3, 4)) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let prod = &a * &b;
        let (wa, ca) = a.leading_term().unwrap();
        let (wb, cb) = b.leading_term().unwrap();
        let (wp, cp) = prod.leading_term().unwrap();
        prop_assert_eq!(wp, &wa.concat(wb));
        prop_assert_eq!(cp, &(ca * cb));
    }

    #[test]
    fn graded_components_decompose(p in arb_poly(3, 4, 5)) {
        let top = p.degree().unwrap_or(0);
        let mut sum = NcPoly::zero();
        for d in 0..=top {
            let comp = p.graded_component(d);
            prop_assert!(comp.is_homogeneous());
            prop_assert_eq!(comp.graded_component(d), comp.clone());
            sum = &sum + &comp;
        }
        prop_assert_eq!(sum, p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_forms_are_idempotent_and_linear(
        p in arb_poly(3, 4, 4),
        q in arb_poly(3, 4, 4),
    ) {
        let sys = certify_pbw_basis(&fixture("sridharan6").unwrap()).unwrap().system;
        let np = sys.normal_form(&p);
        prop_assert_eq!(sys.normal_form(&np), np.clone());
        prop_assert_eq!(sys.normal_form(&(&p + &q)), &np + &sys.normal_form(&q));
    }

    #[test]
    fn certified_systems_ignore_the_reduction_strategy(p in arb_poly(3, 4, 4)) {
        for name in ["sridharan6", "qaffine3", "nonjacobi"] {
            let sys = certify_pbw_basis(&fixture(name).unwrap()).unwrap().system;
            let (left, _) = sys.normal_form_with(&p, ReductionStrategy::Leftmost);
            let (right, _) = sys.normal_form_with(&p, ReductionStrategy::Rightmost);
            if name == "nonjacobi" {
                // An uncertified system may disagree between strategies;
                // nothing to assert beyond termination.
                continue;
            }
            prop_assert_eq!(left, right, "{}", name);
        }
    }

    #[test]
    fn reduction_step_counts_stay_tame(p in arb_poly(3, 4, 4)) {
        let sys = certify_pbw_basis(&fixture("sridharan6").unwrap()).unwrap().system;
        let (_, steps) = sys.normal_form_with(&p, ReductionStrategy::Leftmost);
        prop_assert!(steps <= 1000 * (p.num_terms() + 1));
    }
}

// ---- Random quasi-commutative presentations ----

fn skew_presentation(n: usize, cs: &[Scalar]) -> Presentation {
    let names = ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect();
    let gens = GeneratorSet::new(names);
    let mut relators = Vec::new();
    let mut k = 0;
    for i in 0..n as u32 {
        for j in (i + 1)..n as u32 {
            let descending = Word::from_letters(&[j, i]);
            let ascending = Word::from_letters(&[i, j]);
            relators.push(NcPoly::from_terms([
                (descending, scalar::int(1)),
                (ascending, -cs[k].clone()),
            ]));
            k += 1;
        }
    }
    Presentation::new("random_qc", gens, relators)
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut out = 1usize;
    for t in 0..k {
        out = out * (n - t) / (t + 1);
    }
    out
}

fn arb_nonzero_scalar() -> impl Strategy<Value = Scalar> {
    (1i64..=5, 1i64..=3, any::<bool>()).prop_map(|(num, den, neg)| {
        let s = scalar::ratio(num, den);
        if neg {
            -s
        } else {
            s
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn quasi_commutative_presentations_always_certify(
        n in 2usize..=3,
        cs in prop::collection::vec(arb_nonzero_scalar(), 3),
    ) {
        let p = skew_presentation(n, &cs);
        let cert = certify_pbw_basis(&p).unwrap();
        prop_assert!(cert.certified);
        let dims = cert.system.hilbert_prefix(5).unwrap().dims;
        for d in 0..=5 {
            prop_assert_eq!(dims[d], binomial(d + n - 1, n - 1));
        }
    }
}
