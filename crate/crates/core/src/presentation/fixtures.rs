//! The built-in corpus of example presentations.
//!
//! Sources are embedded verbatim in the presentation text format and parsed
//! on demand, so loading a fixture exercises the same path as loading a
//! user file. `sridharan1` through `sridharan10` are the ten bracket
//! patterns on three generators with relators
//! `x_a x_b - x_b x_a - v`; the rest are classical small algebras and two
//! deliberately defective inputs.

use super::{parse_presentation, ParamBinding, Presentation, PresentationError};

const CORPUS: [(&str, &str); 19] = [
    ("sridharan1", include_str!("../../fixtures/sridharan1.alg")),
    ("sridharan2", include_str!("../../fixtures/sridharan2.alg")),
    ("sridharan3", include_str!("../../fixtures/sridharan3.alg")),
    ("sridharan4", include_str!("../../fixtures/sridharan4.alg")),
    ("sridharan5", include_str!("../../fixtures/sridharan5.alg")),
    ("sridharan6", include_str!("../../fixtures/sridharan6.alg")),
    ("sridharan7", include_str!("../../fixtures/sridharan7.alg")),
    ("sridharan8", include_str!("../../fixtures/sridharan8.alg")),
    ("sridharan9", include_str!("../../fixtures/sridharan9.alg")),
    ("sridharan10", include_str!("../../fixtures/sridharan10.alg")),
    ("weyl", include_str!("../../fixtures/weyl.alg")),
    ("poly2", include_str!("../../fixtures/poly2.alg")),
    ("poly3", include_str!("../../fixtures/poly3.alg")),
    ("qplane", include_str!("../../fixtures/qplane.alg")),
    ("qaffine3", include_str!("../../fixtures/qaffine3.alg")),
    ("sklyanin", include_str!("../../fixtures/sklyanin.alg")),
    ("nonjacobi", include_str!("../../fixtures/nonjacobi.alg")),
    ("x2defect", include_str!("../../fixtures/x2defect.alg")),
    ("poly1", "algebra poly1\ngenerators x\n"),
];

/// Names of all fixtures, in corpus order.
pub fn fixture_names() -> Vec<&'static str> {
    CORPUS.iter().map(|(n, _)| *n).collect()
}

/// Loads a fixture with its declared parameter defaults.
pub fn fixture(name: &str) -> Result<Presentation, PresentationError> {
    fixture_with_params(name, &ParamBinding::new())
}

/// Loads a fixture, overriding declared parameter defaults with `params`.
pub fn fixture_with_params(
    name: &str,
    params: &ParamBinding,
) -> Result<Presentation, PresentationError> {
    let source = CORPUS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, s)| *s)
        .ok_or_else(|| PresentationError::UnknownFixture { name: name.to_string() })?;
    parse_presentation(source, params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::Word;
    use crate::scalar::int;

    fn w(letters: &[u32]) -> Word {
        Word::from_letters(letters)
    }

    #[test]
    fn every_fixture_parses() {
        for name in fixture_names() {
            let p = fixture(name).unwrap();
            assert_eq!(p.name(), name);
        }
    }

    #[test]
    fn every_fixture_round_trips_through_serialize() {
        for name in fixture_names() {
            let p = fixture(name).unwrap();
            let again = parse_presentation(&p.serialize(), &ParamBinding::new()).unwrap();
            assert_eq!(p, again, "{name} failed to round-trip");
        }
    }

    #[test]
    fn unknown_fixture_is_reported() {
        assert!(matches!(
            fixture("nope"),
            Err(PresentationError::UnknownFixture { name }) if name == "nope"
        ));
    }

    #[test]
    fn sridharan6_relators() {
        let p = fixture("sridharan6").unwrap();
        // xy - yx - z, yz - zy + 2y, zx - xz + 2x.
        let r = p.relators();
        assert_eq!(r[0].coeff(&w(&[0, 1])), int(1));
        assert_eq!(r[0].coeff(&w(&[1, 0])), int(-1));
        assert_eq!(r[0].coeff(&w(&[2])), int(-1));
        assert_eq!(r[1].coeff(&w(&[1, 2])), int(1));
        assert_eq!(r[1].coeff(&w(&[2, 1])), int(-1));
        assert_eq!(r[1].coeff(&w(&[1])), int(2));
        assert_eq!(r[2].coeff(&w(&[2, 0])), int(1));
        assert_eq!(r[2].coeff(&w(&[0, 2])), int(-1));
        assert_eq!(r[2].coeff(&w(&[0])), int(2));
    }

    #[test]
    fn sridharan7_relators() {
        let p = fixture("sridharan7").unwrap();
        let r = p.relators();
        assert_eq!(r[0].coeff(&Word::one()), int(-1));
        assert_eq!(r[1].num_terms(), 2);
        assert_eq!(r[2].num_terms(), 2);
    }

    #[test]
    fn sridharan4_accepts_alpha_override() {
        let mut params = ParamBinding::new();
        params.set("alpha", int(7));
        let p = fixture_with_params("sridharan4", &params).unwrap();
        assert_eq!(p.relators()[1].coeff(&w(&[1])), int(-7));
        // Default alpha = 2.
        let q = fixture("sridharan4").unwrap();
        assert_eq!(q.relators()[1].coeff(&w(&[1])), int(-2));
        assert_eq!(q.relators()[2].coeff(&w(&[0])), int(1));
    }

    #[test]
    fn sklyanin_relators_are_normalized() {
        let p = fixture("sklyanin").unwrap();
        let r = p.relators();
        // yx + 2xy, zx + 1/2 xz, zy + 2yz.
        assert_eq!(r[0].coeff(&w(&[1, 0])), int(1));
        assert_eq!(r[0].coeff(&w(&[0, 1])), int(2));
        assert_eq!(r[1].coeff(&w(&[2, 0])), int(1));
        assert_eq!(r[1].coeff(&w(&[0, 2])), crate::scalar::ratio(1, 2));
        assert_eq!(r[2].coeff(&w(&[2, 1])), int(1));
        assert_eq!(r[2].coeff(&w(&[1, 2])), int(2));
    }

    #[test]
    fn x2defect_has_a_square_word() {
        let p = fixture("x2defect").unwrap();
        assert_eq!(p.relators()[0].coeff(&w(&[0, 0])), int(-1));
    }
}
