//! Cases and builders shared by the integration tests.

#![allow(dead_code)]

use saito::algebra::{rational, ExponentVector, OneForm, Polynomial, Rational};
use saito::invariants::{CaseContext, CaseInput};

pub fn vars(n: usize) -> Vec<Polynomial> {
    (0..n).map(|i| Polynomial::var(n, i)).collect()
}

pub fn form(coeffs: Vec<Polynomial>) -> OneForm {
    OneForm::new(coeffs).unwrap()
}

/// A polynomial from `(exponents, coefficient)` pairs.
pub fn poly(nvars: usize, terms: &[(Vec<u32>, i64)]) -> Polynomial {
    Polynomial::from_terms(
        nvars,
        terms.iter().map(|(e, c)| (ExponentVector::from(e.clone()), Rational::from_integer((*c).into()))),
    )
    .unwrap()
}

/// `φ = x^3 + yz`, `f = x^2 + y^2 + z^2`, `ω = df + f (z dx + x dy + y dz)`.
pub fn three_space() -> CaseInput {
    let v = vars(3);
    let (x, y, z) = (&v[0], &v[1], &v[2]);
    let f = &(&x.pow(2) + &y.pow(2)) + &z.pow(2);
    let eta = form(vec![z.clone(), x.clone(), y.clone()]);
    let omega = OneForm::df_plus_f_eta(&f, &eta).unwrap();
    CaseInput::new(omega, &x.pow(3) + &(y * z), f).unwrap()
}

/// `φ = y^p - x^q`, `f = xy`, `ω = y dx + λ x dy`.
pub fn pq(p: u32, q: u32, lambda: i64) -> CaseInput {
    let v = vars(2);
    let (x, y) = (&v[0], &v[1]);
    let omega = form(vec![y.clone(), x.scale(&rational(lambda, 1))]);
    CaseInput::new(omega, &y.pow(p) - &x.pow(q), x * y).unwrap()
}

/// `φ = xy`, `f = x^(2m+1) + x^m y^(m+1) + y^(2m)`, `ω = df + f (y dx + x dy)`.
pub fn m_family(m: u32) -> CaseInput {
    let v = vars(2);
    let (x, y) = (&v[0], &v[1]);
    let f = &(&x.pow(2 * m + 1) + &(&x.pow(m) * &y.pow(m + 1))) + &y.pow(2 * m);
    let eta = form(vec![y.clone(), x.clone()]);
    let omega = OneForm::df_plus_f_eta(&f, &eta).unwrap();
    CaseInput::new(omega, x * y, f).unwrap()
}

pub const PQ: [(u32, u32); 3] = [(2, 3), (3, 4), (2, 5)];
pub const LAMBDAS: [i64; 2] = [2, 5];

/// Every reference case with a name for messages.
pub fn golden_cases() -> Vec<(String, CaseInput)> {
    let mut cases = vec![("three-space".to_string(), three_space())];
    for (p, q) in PQ {
        for l in LAMBDAS {
            cases.push((format!("pq p={p} q={q} lambda={l}"), pq(p, q, l)));
        }
    }
    for m in 1..=4 {
        cases.push((format!("m-family m={m}"), m_family(m)));
    }
    cases
}

pub fn context(input: &CaseInput) -> CaseContext {
    CaseContext::new(input.clone())
}

pub mod random {
    //! Seeded random inputs.

    use super::*;
    use rand::seq::SliceRandom;
    use rand::Rng;

    fn coefficient<R: Rng>(rng: &mut R) -> i64 {
        *[-3, -2, -1, 1, 2, 3].choose(rng).unwrap()
    }

    /// A polynomial vanishing at the origin with `1..=max_terms` terms of
    /// total degree between 1 and `max_deg`.
    pub fn poly_at_origin<R: Rng>(rng: &mut R, nvars: usize, max_deg: u32, max_terms: usize) -> Polynomial {
        let k = rng.gen_range(1..=max_terms);
        let terms: Vec<(Vec<u32>, i64)> = (0..k)
            .map(|_| {
                let deg = rng.gen_range(1..=max_deg);
                let mut e = vec![0; nvars];
                for _ in 0..deg {
                    e[rng.gen_range(0..nvars)] += 1;
                }
                (e, coefficient(rng))
            })
            .collect();
        let p = poly(nvars, &terms);
        if p.is_zero() {
            Polynomial::var(nvars, 0)
        } else {
            p
        }
    }

    /// `(f, X)` with `f` quasihomogeneous in the plane and `X` one or both
    /// coordinate axes, and `ω = df + f η` for a random `η` of degree at most 1.
    pub fn quasihomogeneous_case<R: Rng>(rng: &mut R) -> CaseInput {
        let (a, b) = (rng.gen_range(2..=5u32), rng.gen_range(2..=5u32));
        // weights (b, a), weighted degree a*b
        let mut terms = vec![(vec![a, 0], 1), (vec![0, b], coefficient(rng))];
        for i in 1..a {
            if (a - i) * b % a == 0 && rng.gen_bool(0.5) {
                terms.push((vec![i, (a - i) * b / a], coefficient(rng)));
            }
        }
        let f = poly(2, &terms);
        let v = vars(2);
        let phi = match rng.gen_range(0..3) {
            0 => v[0].clone(),
            1 => v[1].clone(),
            _ => &v[0] * &v[1],
        };
        let mut eta = || -> Polynomial {
            let c = [rng.gen_range(-2..=2i64), rng.gen_range(-2..=2), rng.gen_range(-2..=2)];
            poly(2, &[(vec![0, 0], c[0]), (vec![1, 0], c[1]), (vec![0, 1], c[2])])
        };
        let eta = form(vec![eta(), eta()]);
        let omega = OneForm::df_plus_f_eta(&f, &eta).unwrap();
        CaseInput::new(omega, phi, f).unwrap()
    }

    /// Generators of a monomial ideal in `nvars <= 3` variables with
    /// exponents at most 6.
    pub fn monomial_ideal<R: Rng>(rng: &mut R) -> (usize, Vec<Vec<u32>>) {
        let n = rng.gen_range(1..=3);
        let mut gens = Vec::new();
        // usually cofinite, sometimes not
        for i in 0..n {
            if rng.gen_bool(0.9) {
                let mut e = vec![0; n];
                e[i] = rng.gen_range(1..=6);
                gens.push(e);
            }
        }
        for _ in 0..rng.gen_range(0..=4) {
            gens.push((0..n).map(|_| rng.gen_range(0..=6)).collect());
        }
        if gens.is_empty() {
            gens.push(vec![1; n]);
        }
        (n, gens)
    }
}
