//! Exact multivariate polynomials, Gröbner bases, elimination and dimension.

mod dimension;
mod groebner;
mod monomial;
mod polynomial;
mod text;

use thiserror::Error;

pub use dimension::{ideal_dimension, max_independent};
pub use groebner::{
    buchberger, divide, elimination_ideal, ideal_membership, normal_form, GroebnerBasis,
};
pub use monomial::{Monomial, MonomialOrder};
pub use polynomial::Polynomial;
pub use text::{parse_ideal, parse_polynomial, parse_rationals};

use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("cannot compute a Gröbner basis of the zero ideal")]
    ZeroIdeal,
    #[error("order {order} does not eliminate the first {k} variables")]
    OrderMismatch { order: String, k: usize },
    #[error("cannot eliminate {k} of {nvars} variables")]
    TooManyEliminated { k: usize, nvars: usize },
    #[error("polynomial uses variable index {index} outside a ring of {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("line {line}, column {col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },
}

/// An ideal given by generators in a named polynomial ring.
#[derive(Clone, Debug, PartialEq)]
pub struct Ideal<F> {
    vars: Vec<String>,
    generators: Vec<Polynomial<F>>,
}

impl<F: Field> Ideal<F> {
    pub fn new(vars: Vec<String>, generators: Vec<Polynomial<F>>) -> Result<Self, PolyError> {
        for g in &generators {
            if g.var_bound() > vars.len() {
                return Err(PolyError::VariableOutOfRange {
                    index: g.var_bound() - 1,
                    nvars: vars.len(),
                });
            }
        }
        Ok(Ideal { vars, generators })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.iter().all(|g| g.term_count() == 0)
    }

    /// Reduced Gröbner basis; the zero ideal gets the empty basis.
    pub fn groebner(&self, order: &MonomialOrder) -> GroebnerBasis<F> {
        if self.is_zero_ideal() {
            GroebnerBasis::zero_ideal(self.vars.clone(), order.clone())
        } else {
            buchberger(self, order).expect("nonzero ideal")
        }
    }

    /// Krull dimension of the quotient ring (grevlex basis).
    pub fn dimension(&self) -> i64 {
        self.groebner(&MonomialOrder::GrevLex).dimension()
    }

    /// True when every generator vanishes at `point`.
    pub fn vanishes_at(&self, point: &[F]) -> bool {
        self.generators.iter().all(|g| g.eval(point).is_zero())
    }
}

impl Ideal<crate::Rational> {
    /// Canonical text form: a `vars:` line, then one generator per line with
    /// terms sorted by `order`.
    pub fn to_text(&self, order: &MonomialOrder) -> String {
        let mut s = format!("vars: {}\n", self.vars.join(", "));
        for g in &self.generators {
            s.push_str(&g.to_text(&self.vars, order));
            s.push('\n');
        }
        s
    }
}
