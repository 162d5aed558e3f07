//! Recursive-descent parser for the presentation text format.
//!
//! Grammar:
//!
//! ```text
//! file     := "algebra" IDENT param* gens relation*
//! param    := "param" IDENT ["nonzero"] "=" RATIONAL
//! gens     := "generators" IDENT ("," IDENT)*
//! relation := "relation" poly "=" poly
//! poly     := ["-"] term (("+" | "-") term)*
//! term     := RATIONAL ["*" wordpart] | wordpart
//! wordpart := IDENT ("*" IDENT)*
//! RATIONAL := ["-"] INT ["/" INT] | IDENT
//! ```
//!
//! `#` starts a comment running to the end of the line. An identifier in
//! coefficient position that is not a declared generator is read as a
//! parameter reference. The relator of a relation is `lhs - rhs`.

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::traits::Zero;

use crate::freealg::{GeneratorSet, NcPoly, Word};
use crate::scalar::Scalar;

use super::{ParamBinding, Presentation, PresentationError};

const KEYWORDS: [&str; 5] = ["algebra", "param", "nonzero", "generators", "relation"];

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    Star,
    Slash,
    Plus,
    Minus,
    Eq,
    Comma,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(s) => format!("`{s}`"),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Comma => "`,`".into(),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, PresentationError> {
    let mut toks = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line_num = lineno + 1;
        let mut chars = line.char_indices().peekable();
        while let Some(&(byte, ch)) = chars.peek() {
            let col = byte + 1;
            match ch {
                '#' => break,
                c if c.is_whitespace() => {
                    chars.next();
                }
                c if c.is_ascii_alphabetic() || c == '_' => {
                    let mut ident = String::new();
                    while let Some(&(_, c)) = chars.peek() {
                        if c.is_ascii_alphanumeric() || c == '_' {
                            ident.push(c);
                            chars.next();
                        } else {
                            break;
                        }
                    }
                    toks.push(Spanned { tok: Tok::Ident(ident), line: line_num, col });
                }
                c if c.is_ascii_digit() => {
                    let mut digits = String::new();
                    while let Some(&(_, c)) = chars.peek() {
                        if c.is_ascii_digit() {
                            digits.push(c);
                            chars.next();
                        } else {
                            break;
                        }
                    }
                    toks.push(Spanned { tok: Tok::Int(digits), line: line_num, col });
                }
                _ => {
                    let tok = match ch {
                        '*' => Tok::Star,
                        '/' => Tok::Slash,
                        '+' => Tok::Plus,
                        '-' => Tok::Minus,
                        '=' => Tok::Eq,
                        ',' => Tok::Comma,
                        other => {
                            return Err(PresentationError::Syntax {
                                line: line_num,
                                col,
                                message: format!("unexpected character `{other}`"),
                            })
                        }
                    };
                    chars.next();
                    toks.push(Spanned { tok, line: line_num, col });
                }
            }
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    external: &'a ParamBinding,
    /// Parameter name -> resolved value, after defaults and overrides.
    params: BTreeMap<String, Scalar>,
    gens: Option<GeneratorSet>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn here(&self) -> (usize, usize) {
        match self.toks.get(self.pos) {
            Some(t) => (t.line, t.col),
            None => match self.toks.last() {
                Some(t) => (t.line, t.col + 1),
                None => (1, 1),
            },
        }
    }

    fn syntax(&self, message: impl Into<String>) -> PresentationError {
        let (line, col) = self.here();
        PresentationError::Syntax { line, col, message: message.into() }
    }

    fn expect(&mut self, want: Tok) -> Result<Spanned, PresentationError> {
        match self.peek() {
            Some(t) if t.tok == want => Ok(self.next().unwrap()),
            Some(t) => Err(self.syntax(format!("expected {}, found {}", want.describe(), t.tok.describe()))),
            None => Err(self.syntax(format!("expected {}, found end of input", want.describe()))),
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<(), PresentationError> {
        match self.peek() {
            Some(Spanned { tok: Tok::Ident(s), .. }) if s == kw => {
                self.next();
                Ok(())
            }
            Some(t) => Err(self.syntax(format!("expected `{kw}`, found {}", t.tok.describe()))),
            None => Err(self.syntax(format!("expected `{kw}`, found end of input"))),
        }
    }

    fn expect_name(&mut self, what: &str) -> Result<(String, usize, usize), PresentationError> {
        match self.peek().cloned() {
            Some(Spanned { tok: Tok::Ident(s), line, col }) => {
                if KEYWORDS.contains(&s.as_str()) {
                    return Err(self.syntax(format!("keyword `{s}` cannot be used as {what}")));
                }
                self.next();
                Ok((s, line, col))
            }
            Some(t) => Err(self.syntax(format!("expected {what}, found {}", t.tok.describe()))),
            None => Err(self.syntax(format!("expected {what}, found end of input"))),
        }
    }

    fn at_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Some(Spanned { tok: Tok::Ident(s), .. }) if s == kw)
    }

    /// `["-"] INT ["/" INT]`, used only for parameter defaults.
    fn numeric_value(&mut self) -> Result<Scalar, PresentationError> {
        let negative = if matches!(self.peek(), Some(Spanned { tok: Tok::Minus, .. })) {
            self.next();
            true
        } else {
            false
        };
        match self.next() {
            Some(Spanned { tok: Tok::Int(digits), .. }) => {
                let mut value = self.fraction_from(&digits)?;
                if negative {
                    value = -value;
                }
                Ok(value)
            }
            _ => {
                self.pos = self.pos.saturating_sub(1);
                Err(self.syntax("expected a number"))
            }
        }
    }

    /// Continues a rational after its integer part: `["/" INT]`.
    fn fraction_from(&mut self, digits: &str) -> Result<Scalar, PresentationError> {
        let numer: BigInt = digits.parse().expect("lexer produced a valid integer");
        if matches!(self.peek(), Some(Spanned { tok: Tok::Slash, .. })) {
            self.next();
            match self.next() {
                Some(Spanned { tok: Tok::Int(denom_digits), line, col }) => {
                    let denom: BigInt = denom_digits.parse().expect("lexer produced a valid integer");
                    if denom.is_zero() {
                        return Err(PresentationError::Syntax {
                            line,
                            col,
                            message: "zero denominator".into(),
                        });
                    }
                    Ok(Scalar::new(numer, denom))
                }
                _ => {
                    self.pos = self.pos.saturating_sub(1);
                    Err(self.syntax("expected a denominator after `/`"))
                }
            }
        } else {
            Ok(Scalar::from_integer(numer))
        }
    }

    fn resolve_param(&self, name: &str, line: usize, col: usize) -> Result<Scalar, PresentationError> {
        if let Some(v) = self.params.get(name) {
            return Ok(v.clone());
        }
        if let Some(v) = self.external.get(name) {
            return Ok(v.clone());
        }
        Err(PresentationError::UnboundParameter { line, col, name: name.to_string() })
    }

    fn gen_index(&self, name: &str) -> Option<u32> {
        self.gens
            .as_ref()
            .expect("generators parsed before relations")
            .index_of(name)
    }

    /// `IDENT ("*" IDENT)*` continued after an initial generator.
    fn wordpart_from(&mut self, first: u32) -> Result<Word, PresentationError> {
        let mut letters = vec![first];
        while matches!(self.peek(), Some(Spanned { tok: Tok::Star, .. })) {
            self.next();
            let (name, line, col) = self.expect_name("a generator")?;
            match self.gen_index(&name) {
                Some(i) => letters.push(i),
                None => return Err(PresentationError::UnknownGenerator { line, col, name }),
            }
        }
        Ok(Word::from_letters(&letters))
    }

    /// `RATIONAL ["*" wordpart] | wordpart`, returned as (coefficient, word).
    fn term(&mut self) -> Result<(Scalar, Word), PresentationError> {
        match self.peek().cloned() {
            Some(Spanned { tok: Tok::Int(digits), .. }) => {
                self.next();
                let coeff = self.fraction_from(&digits)?;
                if matches!(self.peek(), Some(Spanned { tok: Tok::Star, .. })) {
                    self.next();
                    let (name, line, col) = self.expect_name("a generator")?;
                    match self.gen_index(&name) {
                        Some(i) => {
                            let word = self.wordpart_from(i)?;
                            Ok((coeff, word))
                        }
                        None => Err(PresentationError::UnknownGenerator { line, col, name }),
                    }
                } else {
                    Ok((coeff, Word::one()))
                }
            }
            Some(Spanned { tok: Tok::Ident(name), line, col }) => {
                if KEYWORDS.contains(&name.as_str()) {
                    return Err(self.syntax(format!("unexpected keyword `{name}` in a relation")));
                }
                self.next();
                if let Some(i) = self.gen_index(&name) {
                    let word = self.wordpart_from(i)?;
                    return Ok((Scalar::from_integer(BigInt::from(1)), word));
                }
                // Not a generator: a parameter used as a coefficient.
                let coeff = self.resolve_param(&name, line, col)?;
                if matches!(self.peek(), Some(Spanned { tok: Tok::Star, .. })) {
                    self.next();
                    let (gname, gline, gcol) = self.expect_name("a generator")?;
                    match self.gen_index(&gname) {
                        Some(i) => {
                            let word = self.wordpart_from(i)?;
                            Ok((coeff, word))
                        }
                        None => Err(PresentationError::UnknownGenerator {
                            line: gline,
                            col: gcol,
                            name: gname,
                        }),
                    }
                } else {
                    Ok((coeff, Word::one()))
                }
            }
            Some(t) => Err(self.syntax(format!("expected a term, found {}", t.tok.describe()))),
            None => Err(self.syntax("expected a term, found end of input")),
        }
    }

    fn poly(&mut self) -> Result<NcPoly, PresentationError> {
        let mut out = NcPoly::zero();
        let mut negative = if matches!(self.peek(), Some(Spanned { tok: Tok::Minus, .. })) {
            self.next();
            true
        } else {
            false
        };
        loop {
            let (coeff, word) = self.term()?;
            out.add_term(word, if negative { -coeff } else { coeff });
            match self.peek() {
                Some(Spanned { tok: Tok::Plus, .. }) => {
                    self.next();
                    negative = false;
                }
                Some(Spanned { tok: Tok::Minus, .. }) => {
                    self.next();
                    negative = true;
                }
                _ => break,
            }
        }
        Ok(out)
    }

    fn param_decl(&mut self) -> Result<(), PresentationError> {
        self.expect_keyword("param")?;
        let (name, line, col) = self.expect_name("a parameter name")?;
        if self.params.contains_key(&name) {
            return Err(PresentationError::Syntax {
                line,
                col,
                message: format!("parameter `{name}` declared twice"),
            });
        }
        let nonzero = if self.at_keyword("nonzero") {
            self.next();
            true
        } else {
            false
        };
        self.expect(Tok::Eq)?;
        let default = self.numeric_value()?;
        let value = self.external.get(&name).cloned().unwrap_or(default);
        if nonzero && value.is_zero() {
            return Err(PresentationError::ZeroParameter { line, col, name });
        }
        self.params.insert(name, value);
        Ok(())
    }

    fn generators(&mut self) -> Result<(), PresentationError> {
        self.expect_keyword("generators")?;
        let mut names: Vec<String> = Vec::new();
        loop {
            let (name, line, col) = self.expect_name("a generator name")?;
            if names.contains(&name) {
                return Err(PresentationError::DuplicateGenerator { line, col, name });
            }
            if self.params.contains_key(&name) {
                return Err(PresentationError::DuplicateGenerator { line, col, name });
            }
            names.push(name);
            if matches!(self.peek(), Some(Spanned { tok: Tok::Comma, .. })) {
                self.next();
            } else {
                break;
            }
        }
        self.gens = Some(GeneratorSet::new(names));
        Ok(())
    }

    fn file(&mut self) -> Result<Presentation, PresentationError> {
        self.expect_keyword("algebra")?;
        let (name, _, _) = self.expect_name("an algebra name")?;
        while self.at_keyword("param") {
            self.param_decl()?;
        }
        self.generators()?;
        let mut relators = Vec::new();
        while self.at_keyword("relation") {
            let rel_line = self.peek().map(|t| t.line).unwrap_or(0);
            self.next();
            let lhs = self.poly()?;
            self.expect(Tok::Eq)?;
            let rhs = self.poly()?;
            let relator = &lhs - &rhs;
            if relator.is_zero() {
                return Err(PresentationError::ZeroRelator { line: rel_line });
            }
            if relator.degree().unwrap() > 2 {
                return Err(PresentationError::DegreeTooHigh { line: rel_line });
            }
            relators.push(relator);
        }
        if let Some(t) = self.peek() {
            let d = t.tok.describe();
            return Err(self.syntax(format!("expected `relation` or end of input, found {d}")));
        }
        Ok(Presentation::new(name, self.gens.take().unwrap(), relators))
    }
}

/// Parses source text into a [`Presentation`], substituting parameters.
/// Values in `params` override the defaults declared in the text.
pub fn parse_presentation(
    text: &str,
    params: &ParamBinding,
) -> Result<Presentation, PresentationError> {
    let toks = lex(text)?;
    let mut parser = Parser {
        toks,
        pos: 0,
        external: params,
        params: BTreeMap::new(),
        gens: None,
    };
    parser.file()
}
