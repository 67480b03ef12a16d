use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{Monomial, MonomialOrder};
use crate::scalar::{Field, Ring};

/// Sparse multivariate polynomial. Variables are indices; names live with
/// the [`Ideal`](super::Ideal) or whatever owns the ambient ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<F> {
    terms: BTreeMap<Monomial, F>,
}

impl<F> Default for Polynomial<F> {
    fn default() -> Self {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }
}

impl<F: Field> Polynomial<F> {
    pub fn constant(c: F) -> Self {
        Self::monomial(Monomial::one(), c)
    }

    pub fn var(i: usize) -> Self {
        Self::monomial(Monomial::var(i), F::one())
    }

    pub fn monomial(m: Monomial, c: F) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut p = Polynomial::default();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get().clone() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The constant term.
    pub fn constant_term(&self) -> F {
        self.coefficient(&Monomial::one())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// One past the largest variable index occurring.
    pub fn var_bound(&self) -> usize {
        self.terms
            .keys()
            .map(Monomial::var_bound)
            .max()
            .unwrap_or(0)
    }

    /// Terms sorted from largest to smallest under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, &F)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &F)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Polynomial::default();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Polynomial::default();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(t, x)| (t.mul(m), x.clone() * c.clone()))
                .collect(),
        }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, order: &MonomialOrder) -> Self {
        match self.leading_term(order) {
            Some((_, c)) => self.scale(&c.inv()),
            None => self.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        Ring::pow_u32(self, e)
    }

    /// Evaluates at a point; missing coordinates count as zero.
    pub fn eval(&self, point: &[F]) -> F {
        self.terms.iter().fold(F::zero(), |acc, (m, c)| {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    let x = point.get(i).cloned().unwrap_or_else(F::zero);
                    t = t * x.pow_u32(e);
                }
            }
            acc + t
        })
    }

    /// The ring homomorphism `x_i ↦ images[i]` (into any ring containing `F`).
    pub fn substitute<R: Ring>(&self, images: &[R], embed: impl Fn(&F) -> R) -> R {
        self.terms.iter().fold(R::zero(), |acc, (m, c)| {
            let mut t = embed(c);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = t * images[i].pow_u32(e);
                }
            }
            acc + t
        })
    }

    /// True if any of the variables `0..k` occurs.
    pub fn involves_prefix(&self, k: usize) -> bool {
        self.terms.keys().any(|m| m.involves_prefix(k))
    }

    pub fn shift_down(&self, k: usize) -> Self {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.shift_down(k), c.clone()))
                .collect(),
        }
    }

    pub fn shift_up(&self, k: usize) -> Self {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.shift_up(k), c.clone()))
                .collect(),
        }
    }
}

impl<F: Field + Signed + fmt::Display> Polynomial<F> {
    /// Infix rendering, terms from largest to smallest under `order`.
    /// Coefficients are written as-is (no monic normalisation).
    pub fn to_text(&self, names: &[String], order: &MonomialOrder) -> String {
        let terms = self.sorted_terms(order);
        if terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            let abs = c.abs();
            let mono = monomial_text(m, names);
            if m.is_one() {
                s.push_str(&abs.to_string());
            } else if abs.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{abs}*{mono}"));
            }
        }
        s
    }
}

fn monomial_text(m: &Monomial, names: &[String]) -> String {
    m.exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            let name = names.get(i).cloned().unwrap_or_else(|| format!("x{i}"));
            if e == 1 {
                name
            } else {
                format!("{name}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

impl<F: Field> Zero for Polynomial<F> {
    fn zero() -> Self {
        Polynomial::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<F: Field> One for Polynomial<F> {
    fn one() -> Self {
        Polynomial::constant(F::one())
    }
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        let mut out = Polynomial::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl<F: Field> $tr for Polynomial<F> {
            type Output = Polynomial<F>;
            fn $f(self, rhs: Polynomial<F>) -> Polynomial<F> {
                (&self).$f(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<F: Field> Neg for Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        -&self
    }
}
