//! The case-file format.
//!
//! ```text
//! case      = ring { statement } ;
//! ring      = "ring" IDENT { "," IDENT } ";" ;
//! statement = "let" IDENT "=" expr ";"
//!           | "X" ":" expr ";"
//!           | "V" ":" expr ";"
//!           | "omega" ":" form ";"
//!           | "option" IDENT "=" value { "," value } ";" ;
//! form      = "coeffs" "(" expr { "," expr } ")"
//!           | "dplusfeta" "(" expr ";" expr { "," expr } ")"
//!           | "d" "(" expr ")" ;
//! value     = [ "-" ] INT [ "/" INT ] | IDENT ;
//! ```
//!
//! `#` starts a comment. The order of the variables in `ring` fixes the
//! order of the coefficients of `omega` and the tie-breaking of the monomial
//! order. Options: `lambda` (one or more rationals; binds the name `lambda`
//! from that point on, and every value yields its own instance), `rf_cap`,
//! `invariants` and `order`.

use super::parse::{tokenize, Cursor, ParseError, Pos, Scope, TokenKind};
use super::report::Invariant;
use crate::algebra::{OneForm, Polynomial, Rational};
use crate::invariants::{CaseInput, InvariantError};
use crate::order::MonomialOrder;
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CaseErrorKind {
    #[error("the case must start with `ring`")]
    RingFirst,
    #[error("`ring` declared twice")]
    DuplicateRing,
    #[error("variable `{0}` declared twice")]
    DuplicateVariable(String),
    #[error("`{0}` is already defined")]
    Redefined(String),
    #[error("`{0}` given twice")]
    Duplicate(&'static str),
    #[error("missing `{0}`")]
    Missing(&'static str),
    #[error("{what} needs {expected} coefficients, one per ring variable, found {found}")]
    Arity {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("unknown statement `{0}`")]
    UnknownStatement(String),
    #[error("unknown form constructor `{0}`; expected coeffs, dplusfeta or d")]
    UnknownForm(String),
    #[error("unknown option `{0}`")]
    UnknownOption(String),
    #[error("bad value for option `{name}`: {message}")]
    BadOption { name: String, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CaseError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{pos}: {kind}")]
    At { pos: Pos, kind: CaseErrorKind },
    #[error("invalid case: {0}")]
    Invalid(#[from] InvariantError),
}

fn at(pos: Pos, kind: CaseErrorKind) -> CaseError {
    CaseError::At { pos, kind }
}

/// Options read from `option` statements.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CaseOptions {
    pub lambda: Vec<Rational>,
    pub rf_cap: Option<u32>,
    pub invariants: Vec<Invariant>,
    pub order: Option<MonomialOrder>,
}

/// One instantiation of a case, for a single value of `lambda` if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseInstance {
    pub lambda: Option<Rational>,
    pub input: CaseInput,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseFile {
    pub vars: Vec<String>,
    pub options: CaseOptions,
    pub instances: Vec<CaseInstance>,
}

impl CaseFile {
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn render(&self, p: &Polynomial) -> String {
        p.to_string_with(&self.vars)
    }
}

/// Parses and validates a case. With `option lambda = a, b, ...` the
/// statements are evaluated once per value.
pub fn parse_case(text: &str) -> Result<CaseFile, CaseError> {
    let toks = tokenize(text)?;
    let lambdas = scan_lambdas(&toks)?;
    let runs: Vec<Option<Rational>> = if lambdas.is_empty() {
        vec![None]
    } else {
        lambdas.into_iter().map(Some).collect()
    };
    let mut file: Option<CaseFile> = None;
    for lambda in runs {
        let (vars, options, input) = evaluate(&toks, lambda.as_ref())?;
        let inst = CaseInstance { lambda, input };
        match &mut file {
            Some(f) => f.instances.push(inst),
            None => {
                file = Some(CaseFile {
                    vars,
                    options,
                    instances: vec![inst],
                })
            }
        }
    }
    Ok(file.expect("at least one run"))
}

/// Finds the values of `option lambda` ahead of evaluation.
fn scan_lambdas(toks: &[crate::io::parse::Token]) -> Result<Vec<Rational>, CaseError> {
    for (i, w) in toks.windows(2).enumerate() {
        let is = |k: usize, s: &str| matches!(&w[k].kind, TokenKind::Ident(t) if t == s);
        let starts_statement = i == 0 || toks[i - 1].kind == TokenKind::Sym(';');
        if starts_statement && is(0, "option") && is(1, "lambda") {
            let mut c = Cursor::new(&toks[i + 2..]);
            c.expect('=')?;
            let mut values = vec![c.rational()?];
            while c.eat(',') {
                values.push(c.rational()?);
            }
            return Ok(values);
        }
    }
    Ok(Vec::new())
}

struct State {
    vars: Vec<String>,
    bindings: HashMap<String, Polynomial>,
    x: Option<Polynomial>,
    v: Option<Polynomial>,
    omega: Option<OneForm>,
    options: CaseOptions,
    seen_options: Vec<String>,
}

impl State {
    fn scope(&self) -> Scope<'_> {
        Scope::new(&self.vars, &self.bindings)
    }

    fn expr(&self, c: &mut Cursor<'_>) -> Result<Polynomial, CaseError> {
        Ok(c.expr(&self.scope())?)
    }

    fn expr_list(&self, c: &mut Cursor<'_>) -> Result<Vec<Polynomial>, CaseError> {
        let mut out = vec![self.expr(c)?];
        while c.eat(',') {
            out.push(self.expr(c)?);
        }
        Ok(out)
    }

    fn is_defined(&self, name: &str) -> bool {
        self.vars.iter().any(|v| v == name) || self.bindings.contains_key(name)
    }
}

fn evaluate(
    toks: &[crate::io::parse::Token],
    lambda: Option<&Rational>,
) -> Result<(Vec<String>, CaseOptions, CaseInput), CaseError> {
    let mut c = Cursor::new(toks);
    let mut st = State {
        vars: Vec::new(),
        bindings: HashMap::new(),
        x: None,
        v: None,
        omega: None,
        options: CaseOptions::default(),
        seen_options: Vec::new(),
    };
    let mut have_ring = false;
    while !c.at_end() {
        let (word, pos) = c.ident("a statement")?;
        if !have_ring && word != "ring" {
            return Err(at(pos, CaseErrorKind::RingFirst));
        }
        match word {
            "ring" => {
                if have_ring {
                    return Err(at(pos, CaseErrorKind::DuplicateRing));
                }
                have_ring = true;
                loop {
                    let (name, p) = c.ident("a variable name")?;
                    if st.vars.iter().any(|v| v == name) {
                        return Err(at(p, CaseErrorKind::DuplicateVariable(name.to_string())));
                    }
                    st.vars.push(name.to_string());
                    if !c.eat(',') {
                        break;
                    }
                }
            }
            "let" => {
                let (name, p) = c.ident("a name")?;
                if st.is_defined(name) {
                    return Err(at(p, CaseErrorKind::Redefined(name.to_string())));
                }
                c.expect('=')?;
                let value = st.expr(&mut c)?;
                st.bindings.insert(name.to_string(), value);
            }
            "X" | "V" => {
                c.expect(':')?;
                let value = st.expr(&mut c)?;
                let (slot, what) = if word == "X" {
                    (&mut st.x, "X")
                } else {
                    (&mut st.v, "V")
                };
                if slot.replace(value).is_some() {
                    return Err(at(pos, CaseErrorKind::Duplicate(what)));
                }
            }
            "omega" => {
                c.expect(':')?;
                let form = parse_form(&st, &mut c)?;
                if st.omega.replace(form).is_some() {
                    return Err(at(pos, CaseErrorKind::Duplicate("omega")));
                }
            }
            "option" => parse_option(&mut st, &mut c, lambda)?,
            other => return Err(at(pos, CaseErrorKind::UnknownStatement(other.to_string()))),
        }
        c.expect(';')?;
    }
    let end = c.peek().pos;
    if !have_ring {
        return Err(at(end, CaseErrorKind::RingFirst));
    }
    let x = st.x.take().ok_or(at(end, CaseErrorKind::Missing("X")))?;
    let v = st.v.take().ok_or(at(end, CaseErrorKind::Missing("V")))?;
    let omega = st.omega.take().ok_or(at(end, CaseErrorKind::Missing("omega")))?;
    let input = CaseInput::new(omega, x, v)?;
    Ok((st.vars, st.options, input))
}

fn parse_form(st: &State, c: &mut Cursor<'_>) -> Result<OneForm, CaseError> {
    let n = st.vars.len();
    let (ctor, pos) = c.ident("coeffs, dplusfeta or d")?;
    c.expect('(')?;
    let arity = |what, found: usize| {
        if found == n {
            Ok(())
        } else {
            Err(at(pos, CaseErrorKind::Arity { what, expected: n, found }))
        }
    };
    let form = match ctor {
        "coeffs" => {
            let coeffs = st.expr_list(c)?;
            arity("coeffs", coeffs.len())?;
            OneForm::new(coeffs).expect("coefficients share the ring")
        }
        "dplusfeta" => {
            let f = st.expr(c)?;
            c.expect(';')?;
            let eta = st.expr_list(c)?;
            arity("the eta of dplusfeta", eta.len())?;
            let eta = OneForm::new(eta).expect("coefficients share the ring");
            OneForm::df_plus_f_eta(&f, &eta).expect("same ring")
        }
        "d" => OneForm::exact(&st.expr(c)?),
        other => return Err(at(pos, CaseErrorKind::UnknownForm(other.to_string()))),
    };
    c.expect(')')?;
    Ok(form)
}

fn parse_option(st: &mut State, c: &mut Cursor<'_>, lambda: Option<&Rational>) -> Result<(), CaseError> {
    let (name, pos) = c.ident("an option name")?;
    if st.seen_options.iter().any(|s| s == name) {
        return Err(at(pos, CaseErrorKind::Redefined(format!("option {name}"))));
    }
    st.seen_options.push(name.to_string());
    c.expect('=')?;
    let bad = |message: String| {
        at(
            pos,
            CaseErrorKind::BadOption {
                name: name.to_string(),
                message,
            },
        )
    };
    match name {
        "lambda" => {
            if st.is_defined("lambda") {
                return Err(at(pos, CaseErrorKind::Redefined("lambda".into())));
            }
            let mut values = vec![c.rational()?];
            while c.eat(',') {
                values.push(c.rational()?);
            }
            let current = lambda.expect("lambda values are scanned before evaluation");
            st.bindings
                .insert("lambda".into(), Polynomial::constant(st.vars.len(), current.clone()));
            st.options.lambda = values;
        }
        "rf_cap" => {
            let t = c.next();
            st.options.rf_cap = Some(match &t.kind {
                TokenKind::Int(k) => u32::try_from(k)
                    .ok()
                    .filter(|&k| k >= 1)
                    .ok_or_else(|| bad(format!("{k} is not a positive 32-bit integer")))?,
                _ => return Err(ParseError::unexpected(t, "a positive integer").into()),
            });
        }
        "invariants" => loop {
            let (word, _) = c.ident("an invariant name")?;
            st.options
                .invariants
                .push(word.parse().map_err(|e: String| bad(e))?);
            if !c.eat(',') {
                break;
            }
        },
        "order" => {
            let (word, _) = c.ident("negdegrevlex or neglex")?;
            st.options.order = Some(word.parse().map_err(|_| bad(format!("unknown order `{word}`")))?);
        }
        other => return Err(at(pos, CaseErrorKind::UnknownOption(other.to_string()))),
    }
    Ok(())
}
