//! Polynomials over GF(2), extension-field tables and 90/150 rule vectors.

mod berlekamp;
mod field;
mod poly;
mod primitive;
mod rules;

use thiserror::Error;

pub use berlekamp::{berlekamp_massey, linear_complexity};
pub use field::{min_poly_of_power, Exp, FieldTable, MAX_FIELD_DEGREE};
pub use poly::Gf2Poly;
pub use primitive::{primitive_polynomials, MAX_PRIMITIVITY_DEGREE};
pub use rules::{char_poly_of_rules, RuleVector};

#[cfg(test)]
pub(crate) use primitive::prime_factors;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("malformed polynomial {0:?} (expected comma-separated exponents such as \"0,2,5\")")]
    BadPolynomial(String),
    #[error("modulus {0} is not primitive")]
    NonPrimitiveModulus(Gf2Poly),
    #[error("field degree {degree} exceeds the supported maximum {max}")]
    FieldTooLarge { degree: usize, max: usize },
    #[error("malformed rule vector {0:?}")]
    BadRuleVector(String),
}
