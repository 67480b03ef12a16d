//! Exact computations with representation and character varieties of
//! finitely presented groups.
//!
//! The crate is organised bottom-up:
//!
//! - [`words`]: presentations, free reduction, coset tables and Schreier rewriting.
//! - [`polyring`]: multivariate polynomials, Gröbner bases, elimination, dimension.
//! - [`repvar`]: the representation variety as an ideal, word evaluation,
//!   restriction and induction of representations.
//! - [`charvar`]: trace (Fricke) coordinates and the dimension κ(Γ, n).
//! - [`chevalley`]: the type C root system, symplectic root elements,
//!   commutator constants and Weyl dimensions.
//! - [`realize`]: embedding a rational affine variety into a character
//!   variety of an elementary symplectic group and checking the round trip.
//!
//! Algorithms are generic over the scalar (see [`scalar`]); the aliases
//! below fix the exact rational instantiation used throughout.

pub mod charvar;
pub mod chevalley;
pub mod matrix;
pub mod polyring;
pub mod realize;
pub mod repvar;
pub mod scalar;
pub mod words;

pub use matrix::Matrix;
pub use num_bigint::BigInt;
pub use scalar::{Field, Ring};

/// Exact rational numbers.
pub type Rational = num_rational::BigRational;
/// Polynomials with rational coefficients.
pub type QPoly = polyring::Polynomial<Rational>;
/// Rational matrices.
pub type QMatrix = Matrix<Rational>;
/// Matrices with polynomial entries.
pub type PolyMatrix = Matrix<QPoly>;
/// Representations with rational matrices.
pub type RationalRep = repvar::Representation<Rational>;

/// Integer as a rational.
pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den` as a reduced rational. Panics on a zero denominator.
pub fn qq(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}
