//! Failure conditions shared by the classification and certification passes.

use std::error::Error as StdError;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// The presentation does not pass the shape check, so the requested
    /// analysis is undefined for it.
    InvalidShape,
    /// A rule polynomial reduced to a nonzero constant: the ideal contains a
    /// unit and the quotient algebra is zero.
    UnitIdeal,
    /// Completion produced more rules than the configured budget allows.
    BudgetExceeded { added: usize, budget: usize },
    /// The rewrite system is not certified far enough to answer the query.
    InsufficientCompletion { needed: usize, have: usize },
    /// The operation requires every relator to be homogeneous of degree two.
    NotHomogeneousQuadratic,
    /// The degree-two parts of the relators are linearly dependent, so the
    /// deformation maps are not well defined.
    DependentQuadraticParts,
    /// The zero polynomial has no leading term.
    ZeroPolynomial,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidShape => write!(f, "presentation fails the shape check"),
            Error::UnitIdeal => write!(f, "ideal contains a nonzero constant; the algebra is zero"),
            Error::BudgetExceeded { added, budget } => {
                write!(f, "completion budget exceeded ({added} rules added, budget {budget})")
            }
            Error::InsufficientCompletion { needed, have } => write!(
                f,
                "rewrite system certified to degree {have}, degree {needed} required"
            ),
            Error::NotHomogeneousQuadratic => {
                write!(f, "operation requires homogeneous degree-2 relators")
            }
            Error::DependentQuadraticParts => {
                write!(f, "degree-2 parts of the relators are linearly dependent")
            }
            Error::ZeroPolynomial => write!(f, "zero polynomial has no leading term"),
        }
    }
}

impl StdError for Error {}
