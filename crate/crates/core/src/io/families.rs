//! Built-in cases, emitted as case-file text so that they go through the
//! same parser as user files.

use super::parse::format_rational;
use crate::algebra::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("unknown built-in case `{0}`; expected example-3-2, pq-family or m-family")]
    Unknown(String),
    #[error("unknown parameter `{param}` for {family}")]
    UnknownParam { family: &'static str, param: String },
    #[error("bad value `{value}` for parameter `{param}`: {message}")]
    BadValue {
        param: String,
        value: String,
        message: String,
    },
    #[error("parameters are written key=value, found `{0}`")]
    Malformed(String),
}

pub const BUILTINS: [&str; 3] = ["example-3-2", "pq-family", "m-family"];

/// `φ = x³ + yz`, `f = x² + y² + z²`, `ω = df + f(z dx + x dy + y dz)`.
pub fn example_3_2() -> String {
    "# X = {x^3 + yz = 0}, V = {x^2 + y^2 + z^2 = 0}
ring x, y, z;
let f = x^2 + y^2 + z^2;
X: x^3 + y*z;
V: f;
omega: dplusfeta(f; z, x, y);
"
    .to_string()
}

/// `φ = y^p - x^q`, `f = xy`, `ω = y dx + λ x dy`, one instance per `λ`.
pub fn pq_family(p: u32, q: u32, lambdas: &[Rational]) -> String {
    let values: Vec<String> = lambdas.iter().map(format_rational).collect();
    format!(
        "# X = {{y^{p} - x^{q} = 0}}, V = the coordinate axes
ring x, y;
option lambda = {};
X: y^{p} - x^{q};
V: x*y;
omega: coeffs(y, lambda*x);
",
        values.join(", ")
    )
}

/// `φ = xy`, `f = x^(2m+1) + x^m y^(m+1) + y^(2m)`, `ω = df + f(y dx + x dy)`.
pub fn m_family(m: u32) -> String {
    format!(
        "# X = the coordinate axes, V = {{f = 0}}
ring x, y;
let f = x^{} + x^{m}*y^{} + y^{};
X: x*y;
V: f;
omega: dplusfeta(f; y, x);
",
        2 * m + 1,
        m + 1,
        2 * m
    )
}

fn split(params: &[String]) -> Result<Vec<(&str, &str)>, FamilyError> {
    params
        .iter()
        .map(|p| p.split_once('=').ok_or_else(|| FamilyError::Malformed(p.clone())))
        .collect()
}

fn positive(param: &str, value: &str, min: u32) -> Result<u32, FamilyError> {
    value
        .parse::<u32>()
        .ok()
        .filter(|&v| v >= min)
        .ok_or_else(|| FamilyError::BadValue {
            param: param.into(),
            value: value.into(),
            message: format!("expected an integer at least {min}"),
        })
}

fn rationals(param: &str, value: &str) -> Result<Vec<Rational>, FamilyError> {
    let bad = |message: &str| FamilyError::BadValue {
        param: param.into(),
        value: value.into(),
        message: message.into(),
    };
    value
        .split(',')
        .map(|v| {
            let toks = super::parse::tokenize(v).map_err(|e| bad(&e.to_string()))?;
            let mut c = super::parse::Cursor::new(&toks);
            let r = c.rational().map_err(|e| bad(&e.to_string()))?;
            if c.at_end() {
                Ok(r)
            } else {
                Err(bad("expected a rational number"))
            }
        })
        .collect()
}

/// Case text of a built-in with `key=value` parameters. Defaults:
/// `p=2 q=3 lambda=2` and `m=1`.
pub fn builtin(name: &str, params: &[String]) -> Result<String, FamilyError> {
    let kv = split(params)?;
    match name {
        "example-3-2" => match kv.first() {
            Some((k, _)) => Err(FamilyError::UnknownParam {
                family: "example-3-2",
                param: k.to_string(),
            }),
            None => Ok(example_3_2()),
        },
        "pq-family" => {
            let (mut p, mut q) = (2, 3);
            let mut lambdas = vec![Rational::from_integer(2.into())];
            for (k, v) in kv {
                match k {
                    "p" => p = positive(k, v, 2)?,
                    "q" => q = positive(k, v, 2)?,
                    "lambda" => lambdas = rationals(k, v)?,
                    _ => {
                        return Err(FamilyError::UnknownParam {
                            family: "pq-family",
                            param: k.to_string(),
                        })
                    }
                }
            }
            Ok(pq_family(p, q, &lambdas))
        }
        "m-family" => {
            let mut m = 1;
            for (k, v) in kv {
                match k {
                    "m" => m = positive(k, v, 1)?,
                    _ => {
                        return Err(FamilyError::UnknownParam {
                            family: "m-family",
                            param: k.to_string(),
                        })
                    }
                }
            }
            Ok(m_family(m))
        }
        other => Err(FamilyError::Unknown(other.to_string())),
    }
}
