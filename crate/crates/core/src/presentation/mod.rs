//! Presentations of algebras by generators and relators of degree at most
//! two, plus the text format they are written in.
//!
//! A presentation file looks like
//!
//! ```text
//! algebra weyl
//! generators x, y
//! relation x*y = y*x + 1
//! ```
//!
//! with optional `param NAME [nonzero] = RATIONAL` lines between the header
//! and the generator list. Parameters are substituted at parse time, so a
//! parsed [`Presentation`] contains concrete rational coefficients only.

mod fixtures;
mod parse;

use std::collections::BTreeMap;
use std::error::Error as StdError;
use std::fmt;

use crate::freealg::{GeneratorSet, NcPoly};
use crate::scalar::Scalar;

pub use fixtures::{fixture, fixture_names, fixture_with_params};
pub use parse::parse_presentation;

// ---- Parameters ----

/// Values supplied for named parameters, e.g. from command-line flags.
/// These override the defaults declared in the source text.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParamBinding {
    values: BTreeMap<String, Scalar>,
}

impl ParamBinding {
    pub fn new() -> Self {
        ParamBinding::default()
    }

    pub fn set(&mut self, name: &str, value: Scalar) {
        self.values.insert(name.to_string(), value);
    }

    pub fn get(&self, name: &str) -> Option<&Scalar> {
        self.values.get(name)
    }
}

// ---- Presentations ----

/// A named algebra presentation: generators plus relators of degree at most
/// two. Relators are nonzero and live in the free algebra on the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    name: String,
    gens: GeneratorSet,
    relators: Vec<NcPoly>,
}

impl Presentation {
    pub fn new(name: impl Into<String>, gens: GeneratorSet, relators: Vec<NcPoly>) -> Self {
        let n = gens.len() as u32;
        for r in &relators {
            assert!(!r.is_zero(), "zero relator");
            assert!(r.degree().unwrap() <= 2, "relator of degree above two");
            for (w, _) in r.terms() {
                assert!(
                    w.letters().iter().all(|&l| l < n),
                    "relator uses a generator index out of range"
                );
            }
        }
        Presentation { name: name.into(), gens, relators }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn gens(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn relators(&self) -> &[NcPoly] {
        &self.relators
    }

    /// Same generators and relators under a different name.
    pub fn renamed(&self, name: impl Into<String>) -> Presentation {
        Presentation { name: name.into(), ..self.clone() }
    }

    /// Renders the presentation back into source text. The output parses to
    /// a structurally equal presentation.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str("algebra ");
        out.push_str(&self.name);
        out.push('\n');
        out.push_str("generators ");
        out.push_str(&self.gens.names().join(", "));
        out.push('\n');
        for r in &self.relators {
            out.push_str("relation ");
            out.push_str(&r.display(&self.gens));
            out.push_str(" = 0\n");
        }
        out
    }
}

// ---- Errors ----

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PresentationError {
    /// Malformed source text; `line` and `col` point at the offending token.
    Syntax { line: usize, col: usize, message: String },
    /// A word names a generator that was never declared.
    UnknownGenerator { line: usize, col: usize, name: String },
    /// A generator name appears twice, or shadows a parameter.
    DuplicateGenerator { line: usize, col: usize, name: String },
    /// A coefficient refers to a parameter with no declared or supplied value.
    UnboundParameter { line: usize, col: usize, name: String },
    /// A parameter marked `nonzero` resolved to zero.
    ZeroParameter { line: usize, col: usize, name: String },
    /// A relation's relator has degree above two.
    DegreeTooHigh { line: usize },
    /// A relation collapsed to 0 = 0.
    ZeroRelator { line: usize },
    /// No fixture with the requested name.
    UnknownFixture { name: String },
}

impl fmt::Display for PresentationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PresentationError::Syntax { line, col, message } => {
                write!(f, "syntax error at {line}:{col}: {message}")
            }
            PresentationError::UnknownGenerator { line, col, name } => {
                write!(f, "unknown generator `{name}` at {line}:{col}")
            }
            PresentationError::DuplicateGenerator { line, col, name } => {
                write!(f, "duplicate generator `{name}` at {line}:{col}")
            }
            PresentationError::UnboundParameter { line, col, name } => {
                write!(f, "parameter `{name}` at {line}:{col} has no value")
            }
            PresentationError::ZeroParameter { line, col, name } => {
                write!(f, "parameter `{name}` at {line}:{col} is marked nonzero but resolves to 0")
            }
            PresentationError::DegreeTooHigh { line } => {
                write!(f, "relation at line {line} has degree above two")
            }
            PresentationError::ZeroRelator { line } => {
                write!(f, "relation at line {line} collapses to 0 = 0")
            }
            PresentationError::UnknownFixture { name } => {
                write!(f, "no fixture named `{name}`")
            }
        }
    }
}

impl StdError for PresentationError {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::Word;
    use crate::scalar::int;

    #[test]
    fn serialize_free_algebra_has_no_relation_lines() {
        let p = Presentation::new(
            "poly1",
            GeneratorSet::new(vec!["x".into()]),
            vec![],
        );
        assert_eq!(p.serialize(), "algebra poly1\ngenerators x\n");
    }

    #[test]
    fn serialize_renders_relators_against_zero() {
        let gens = GeneratorSet::new(vec!["x".into(), "y".into()]);
        let r = NcPoly::from_terms([
            (Word::from_letters(&[0, 1]), int(1)),
            (Word::from_letters(&[1, 0]), int(-1)),
            (Word::one(), int(-1)),
        ]);
        let p = Presentation::new("weyl", gens, vec![r]);
        assert_eq!(
            p.serialize(),
            "algebra weyl\ngenerators x, y\nrelation -y*x + x*y - 1 = 0\n"
        );
    }

    #[test]
    #[should_panic(expected = "degree above two")]
    fn constructor_rejects_cubic_relators() {
        let gens = GeneratorSet::new(vec!["x".into()]);
        let r = NcPoly::from_word(Word::from_letters(&[0, 0, 0]));
        Presentation::new("bad", gens, vec![r]);
    }
}
