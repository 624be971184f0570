//! Exact arithmetic: rationals, exponent vectors, sparse polynomials,
//! polynomial matrices and their minors, 1-forms.

mod form;
mod matrix;
mod monomial;
mod poly;

pub use form::OneForm;
pub use matrix::PolyMatrix;
pub use monomial::ExponentVector;
pub use poly::Polynomial;

/// Exact rational numbers, always kept in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Convenience constructor for small rationals.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("ring mismatch: {left} variables vs {right} variables")]
    RingMismatch { left: usize, right: usize },
    #[error("variable index {index} out of range for a ring in {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("minor size {k} out of range for a {rows}x{cols} matrix")]
    MinorSize { k: usize, rows: usize, cols: usize },
    #[error("a {rows}x{cols} matrix cannot hold {entries} entries")]
    Shape {
        rows: usize,
        cols: usize,
        entries: usize,
    },
    #[error("determinant of a non-square {rows}x{cols} matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("a 1-form in {nvars} variables needs {nvars} coefficients, got {coefficients}")]
    FormLength { coefficients: usize, nvars: usize },
}
