//! The free associative algebra over the rationals.
//!
//! Elements are finitely supported maps from words in the generators to
//! nonzero scalars. Words compare in degree-lexicographic order: shorter
//! words first, equal lengths left to right by generator index. `Ord` on
//! [`Word`] is exactly this order, so the last entry of a polynomial's term
//! map is its leading term.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::traits::{One, Signed, Zero};

use crate::scalar::{self, Scalar};

// ---- Generators ----

/// An ordered list of generator names; the position of a name is its index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    names: Vec<String>,
}

impl GeneratorSet {
    pub fn new(names: Vec<String>) -> Self {
        assert!(!names.is_empty(), "a generator set needs at least one name");
        for (k, name) in names.iter().enumerate() {
            assert!(!name.is_empty(), "empty generator name");
            assert!(
                !names[..k].contains(name),
                "duplicate generator name {name:?}"
            );
        }
        GeneratorSet { names }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn name(&self, i: u32) -> &str {
        &self.names[i as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<u32> {
        self.names.iter().position(|n| n == name).map(|i| i as u32)
    }
}

// ---- Words ----

/// A word in the generators, stored as a sequence of generator indices.
/// The empty word is the monomial 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<u32>,
}

impl Word {
    pub fn one() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn gen(i: u32) -> Self {
        Word { letters: vec![i] }
    }

    pub fn from_letters(letters: &[u32]) -> Self {
        Word { letters: letters.to_vec() }
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word { letters: self.letters[from..to].to_vec() }
    }

    /// Leftmost position where `sub` occurs as a factor, if any.
    pub fn find(&self, sub: &Word) -> Option<usize> {
        if sub.len() > self.len() {
            return None;
        }
        (0..=self.len() - sub.len()).find(|&p| self.letters[p..p + sub.len()] == sub.letters)
    }

    pub fn ends_with(&self, suffix: &Word) -> bool {
        suffix.len() <= self.len() && self.letters[self.len() - suffix.len()..] == suffix.letters
    }

    pub fn display(&self, gens: &GeneratorSet) -> String {
        if self.is_empty() {
            return "1".to_string();
        }
        self.letters
            .iter()
            .map(|&i| gens.name(i))
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl Ord for Word {
    /// Degree-lexicographic: length first, then letters left to right.
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The order used everywhere in the crate, exposed for callers that want to
/// compare words without going through `Ord`.
pub fn deglex_compare(u: &Word, v: &Word) -> Ordering {
    u.cmp(v)
}

// ---- Polynomials ----

/// An element of the free algebra: a finitely supported map from words to
/// nonzero scalars. Entries with coefficient zero are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct NcPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl NcPoly {
    pub fn zero() -> Self {
        NcPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        NcPoly::monomial(Scalar::one(), Word::one())
    }

    pub fn constant(c: Scalar) -> Self {
        NcPoly::monomial(c, Word::one())
    }

    pub fn from_word(w: Word) -> Self {
        NcPoly::monomial(Scalar::one(), w)
    }

    pub fn monomial(c: Scalar, w: Word) -> Self {
        let mut p = NcPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Scalar)>) -> Self {
        let mut p = NcPoly::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending degree-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Maximal word length over the support; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::len).max()
    }

    /// The degree-lexicographically greatest term; `None` for zero.
    pub fn leading_term(&self) -> Option<(&Word, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Adds `c`·`w` into the polynomial, dropping the entry if it cancels.
    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
        self.check_invariant();
    }

    pub fn scale(&self, c: &Scalar) -> NcPoly {
        if c.is_zero() {
            return NcPoly::zero();
        }
        let terms = self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect();
        let p = NcPoly { terms };
        p.check_invariant();
        p
    }

    /// Divides by the leading coefficient; `None` for the zero polynomial.
    pub fn monic(&self) -> Option<NcPoly> {
        let (_, lc) = self.leading_term()?;
        Some(self.scale(&lc.recip()))
    }

    /// The sum of terms whose word has length exactly `d`.
    pub fn graded_component(&self, d: usize) -> NcPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(w, _)| w.len() == d)
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect();
        NcPoly { terms }
    }

    /// True when the support is concentrated in a single degree (or empty).
    pub fn is_homogeneous(&self) -> bool {
        let mut lens = self.terms.keys().map(Word::len);
        match lens.next() {
            None => true,
            Some(first) => lens.all(|l| l == first),
        }
    }

    /// Left-multiplies every term by the word `w`.
    pub fn mul_word_left(&self, w: &Word) -> NcPoly {
        let terms = self.terms.iter().map(|(u, c)| (w.concat(u), c.clone())).collect();
        NcPoly { terms }
    }

    /// Right-multiplies every term by the word `w`.
    pub fn mul_word_right(&self, w: &Word) -> NcPoly {
        let terms = self.terms.iter().map(|(u, c)| (u.concat(w), c.clone())).collect();
        NcPoly { terms }
    }

    pub fn display(&self, gens: &GeneratorSet) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        // Leading term first reads better for humans.
        for (k, (w, c)) in self.terms.iter().rev().enumerate() {
            let mag = scalar::abs(c);
            if k == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if w.is_empty() {
                out.push_str(&scalar::format(&mag));
            } else if mag.is_one() {
                out.push_str(&w.display(gens));
            } else {
                out.push_str(&scalar::format(&mag));
                out.push('*');
                out.push_str(&w.display(gens));
            }
        }
        out
    }

    fn check_invariant(&self) {
        debug_assert!(
            self.terms.values().all(|c| !c.is_zero()),
            "zero coefficient stored in NcPoly"
        );
    }
}

impl Add for &NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in rhs.terms.iter() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in rhs.terms.iter() {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        let terms = self.terms.iter().map(|(w, c)| (w.clone(), -c.clone())).collect();
        NcPoly { terms }
    }
}

impl Mul for &NcPoly {
    type Output = NcPoly;
    fn mul(self, rhs: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (u, a) in self.terms.iter() {
            for (v, b) in rhs.terms.iter() {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }
}

impl fmt::Display for Word {
    /// Index-based rendering for diagnostics without a generator set.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.letters.iter().map(|i| format!("g{i}")).collect();
        write!(f, "{}", parts.join("*"))
    }
}
