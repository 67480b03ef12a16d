//! Scalar traits shared by the matrix, polynomial and Gröbner code.
//!
//! Everything is written against [`Ring`] (matrices, word evaluation) or
//! [`Field`] (division, linear algebra, Gröbner bases). `BigRational` is the
//! scalar the toolkit is built around; `f64` satisfies the same bounds, but
//! only exact fields give meaningful Gröbner bases and rank computations.

use std::fmt::Debug;
use std::ops::{Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

/// Commutative ring with identity, as far as the algorithms here need one.
pub trait Ring:
    Clone + Debug + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
    fn pow_u32(&self, exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

impl<T> Ring for T where
    T: Clone + Debug + PartialEq + Zero + One + Neg<Output = T> + Sub<Output = T>
{
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring + Div<Output = Self> + Mul<Output = Self> {
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl<T> Field for T where T: Ring + Div<Output = T> {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn pow_by_squaring() {
        assert_eq!(
            Rational::from_integer(2.into()).pow_u32(10),
            Rational::from_integer(1024.into())
        );
        assert_eq!(3.0f64.pow_u32(0), 1.0);
        assert_eq!(Field::inv(&4.0f64), 0.25);
    }
}
