//! Exact rational arithmetic and sparse multivariate polynomial algebra.

pub mod json;
pub mod linsolve;
pub mod poly;
pub mod rational;
pub mod resultant;
pub mod symmetric;
pub mod text;
pub mod univariate;
pub mod weights;

pub use poly::{root_var, v, Monomial, MultiPoly};
pub use rational::BigRat;
pub use resultant::resultant;
pub use symmetric::{elem_sym, symmetric_reduce};
pub use text::{format_poly, parse_poly, poly};
pub use weights::{weighted_components, WeightSystem};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("no value bound for variable `{0}`")]
    MissingBinding(String),
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("polynomial is not symmetric: transposition ({0} {1}) changes it")]
    NotSymmetric(String, String),
    #[error("unexpected variable `{0}`")]
    UnexpectedVariable(String),
    #[error("operand is the zero polynomial or has degree 0 in `{0}`")]
    ZeroPolynomial(String),
    #[error("variable `{0}` has no weight")]
    UnweightedVariable(String),
    #[error("malformed polynomial JSON: {0}")]
    Json(String),
}
