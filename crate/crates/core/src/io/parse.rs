//! Tokenizer and recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   = term { ("+" | "-") term } ;
//! term   = unary { "*" unary } ;
//! unary  = "-" unary | power ;
//! power  = atom [ "^" INT ] ;
//! atom   = INT [ "/" INT ] | IDENT | "(" expr ")" ;
//! ```
//!
//! Division only forms rational literals, and exponents are integer
//! literals. Juxtaposition such as `2x` is rejected.

use crate::algebra::{Polynomial, Rational};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::collections::HashMap;
use std::fmt;

/// A 1-based line and column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("expected {expected}, found {found}")]
    Unexpected { expected: String, found: String },
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
    #[error("negative exponent")]
    NegativeExponent,
    #[error("exponent {0} is too large")]
    ExponentTooLarge(String),
    #[error("zero denominator")]
    ZeroDenominator,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{pos}: {kind}")]
pub struct ParseError {
    pub pos: Pos,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub(crate) fn new(pos: Pos, kind: ParseErrorKind) -> Self {
        ParseError { pos, kind }
    }

    pub(crate) fn unexpected(tok: &Token, expected: impl Into<String>) -> Self {
        ParseError::new(
            tok.pos,
            ParseErrorKind::Unexpected {
                expected: expected.into(),
                found: tok.kind.to_string(),
            },
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum TokenKind {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Int(n) => write!(f, "`{n}`"),
            TokenKind::Ident(s) => write!(f, "`{s}`"),
            TokenKind::Sym(c) => write!(f, "`{c}`"),
            TokenKind::End => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Token {
    pub kind: TokenKind,
    pub pos: Pos,
}

/// Exponents beyond this are rejected rather than expanded.
pub const MAX_EXPONENT: u32 = 4096;

const SYMBOLS: &str = "+-*/^(),;:=";

/// Splits `text` into tokens; `#` starts a comment running to the end of the line.
pub(crate) fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, column };
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars<'_>>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        };
        if c.is_whitespace() {
            bump(&mut chars);
        } else if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                bump(&mut chars);
            }
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                bump(&mut chars);
            }
            let n = s.parse().expect("digits form an integer");
            out.push(Token {
                kind: TokenKind::Int(n),
                pos,
            });
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_alphanumeric() || **d == '_') {
                s.push(d);
                bump(&mut chars);
            }
            out.push(Token {
                kind: TokenKind::Ident(s),
                pos,
            });
        } else if SYMBOLS.contains(c) {
            bump(&mut chars);
            out.push(Token {
                kind: TokenKind::Sym(c),
                pos,
            });
        } else {
            return Err(ParseError::new(pos, ParseErrorKind::UnexpectedChar(c)));
        }
    }
    out.push(Token {
        kind: TokenKind::End,
        pos: Pos { line, column },
    });
    Ok(out)
}

/// Names an expression may refer to: the ring variables and bound polynomials.
pub struct Scope<'a> {
    vars: &'a [String],
    bindings: &'a HashMap<String, Polynomial>,
}

impl<'a> Scope<'a> {
    pub fn new(vars: &'a [String], bindings: &'a HashMap<String, Polynomial>) -> Self {
        Scope { vars, bindings }
    }

    fn lookup(&self, name: &str) -> Option<Polynomial> {
        let n = self.vars.len();
        match self.vars.iter().position(|v| v == name) {
            Some(i) => Some(Polynomial::var(n, i)),
            None => self.bindings.get(name).cloned(),
        }
    }
}

/// Cursor over a token list, shared with the case-file parser.
pub(crate) struct Cursor<'t> {
    toks: &'t [Token],
    at: usize,
}

impl<'t> Cursor<'t> {
    pub fn new(toks: &'t [Token]) -> Self {
        Cursor { toks, at: 0 }
    }

    pub fn peek(&self) -> &'t Token {
        &self.toks[self.at]
    }

    pub fn next(&mut self) -> &'t Token {
        let t = &self.toks[self.at];
        if t.kind != TokenKind::End {
            self.at += 1;
        }
        t
    }

    pub fn at_end(&self) -> bool {
        self.peek().kind == TokenKind::End
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.peek().kind == TokenKind::Sym(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> Result<&'t Token, ParseError> {
        let t = self.peek();
        if self.eat(c) {
            Ok(t)
        } else {
            Err(ParseError::unexpected(t, format!("`{c}`")))
        }
    }

    pub fn ident(&mut self, what: &str) -> Result<(&'t str, Pos), ParseError> {
        let t = self.next();
        match &t.kind {
            TokenKind::Ident(s) => Ok((s, t.pos)),
            _ => Err(ParseError::unexpected(t, what)),
        }
    }

    /// A signed rational literal `[-] INT [/ INT]`.
    pub fn rational(&mut self) -> Result<Rational, ParseError> {
        let neg = self.eat('-');
        let t = self.next();
        let TokenKind::Int(num) = &t.kind else {
            return Err(ParseError::unexpected(t, "a number"));
        };
        let value = self.finish_rational(num.clone())?;
        Ok(if neg { -value } else { value })
    }

    fn finish_rational(&mut self, num: BigInt) -> Result<Rational, ParseError> {
        if !self.eat('/') {
            return Ok(Rational::from_integer(num));
        }
        let t = self.next();
        match &t.kind {
            TokenKind::Int(d) if d.is_zero() => Err(ParseError::new(t.pos, ParseErrorKind::ZeroDenominator)),
            TokenKind::Int(d) => Ok(Rational::new(num, d.clone())),
            _ => Err(ParseError::unexpected(t, "an integer denominator")),
        }
    }

    pub fn expr(&mut self, scope: &Scope<'_>) -> Result<Polynomial, ParseError> {
        let mut acc = self.term(scope)?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term(scope)?;
            } else if self.eat('-') {
                acc = &acc - &self.term(scope)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self, scope: &Scope<'_>) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary(scope)?;
        while self.eat('*') {
            acc = &acc * &self.unary(scope)?;
        }
        Ok(acc)
    }

    fn unary(&mut self, scope: &Scope<'_>) -> Result<Polynomial, ParseError> {
        if self.eat('-') {
            return Ok(-&self.unary(scope)?);
        }
        self.power(scope)
    }

    fn power(&mut self, scope: &Scope<'_>) -> Result<Polynomial, ParseError> {
        let base = self.atom(scope)?;
        if !self.eat('^') {
            return Ok(base);
        }
        let t = self.next();
        match &t.kind {
            TokenKind::Int(k) => {
                match u32::try_from(k) {
                    Ok(k) if k <= MAX_EXPONENT => Ok(base.pow(k)),
                    _ => Err(ParseError::new(t.pos, ParseErrorKind::ExponentTooLarge(k.to_string()))),
                }
            }
            TokenKind::Sym('-') => Err(ParseError::new(t.pos, ParseErrorKind::NegativeExponent)),
            _ => Err(ParseError::unexpected(t, "an integer exponent")),
        }
    }

    fn atom(&mut self, scope: &Scope<'_>) -> Result<Polynomial, ParseError> {
        let n = scope.vars.len();
        let t = self.next();
        match &t.kind {
            TokenKind::Int(num) => Ok(Polynomial::constant(n, self.finish_rational(num.clone())?)),
            TokenKind::Ident(name) => scope
                .lookup(name)
                .ok_or_else(|| ParseError::new(t.pos, ParseErrorKind::UnknownIdentifier(name.clone()))),
            TokenKind::Sym('(') => {
                let inner = self.expr(scope)?;
                self.expect(')')?;
                Ok(inner)
            }
            _ => Err(ParseError::unexpected(t, "a number, a name or `(`")),
        }
    }
}

/// Parses a complete expression in the variables `vars`.
pub fn parse_expression(text: &str, vars: &[String]) -> Result<Polynomial, ParseError> {
    parse_expression_in(text, &Scope::new(vars, &HashMap::new()))
}

/// Parses a complete expression that may also use bound names.
pub fn parse_expression_in(text: &str, scope: &Scope<'_>) -> Result<Polynomial, ParseError> {
    let toks = tokenize(text)?;
    let mut c = Cursor::new(&toks);
    let p = c.expr(scope)?;
    if !c.at_end() {
        return Err(ParseError::unexpected(c.peek(), "an operator or end of input"));
    }
    Ok(p)
}

/// Renders a rational as a literal the parser reads back: `3`, `-3/4`.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}{}/{}", if r.is_negative() { "-" } else { "" }, r.numer().abs(), r.denom())
    }
}
