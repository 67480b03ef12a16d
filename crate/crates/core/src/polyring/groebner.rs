//! Multivariate division and Buchberger's algorithm.
//!
//! Pairs are handled with the Gebauer–Möller update, which applies the
//! coprime (product) criterion and the chain criterion, and are selected by
//! the normal strategy (smallest lcm first).

use std::cmp::Ordering;

use super::{Ideal, Monomial, MonomialOrder, PolyError, Polynomial};
use crate::scalar::Field;

/// Terms in ascending order, so the leading term is `last()`.
#[derive(Clone, Debug)]
struct Sorted<F> {
    terms: Vec<(Monomial, F)>,
}

impl<F: Field> Sorted<F> {
    fn new(p: &Polynomial<F>, order: &MonomialOrder) -> Self {
        let mut terms: Vec<_> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        Sorted { terms }
    }

    fn to_poly(&self) -> Polynomial<F> {
        Polynomial::from_terms(self.terms.iter().cloned())
    }

    fn lm(&self) -> &Monomial {
        &self.terms.last().expect("nonzero polynomial").0
    }

    fn lc(&self) -> &F {
        &self.terms.last().expect("nonzero polynomial").1
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn monic(mut self) -> Self {
        if let Some((_, c)) = self.terms.last() {
            let inv = c.inv();
            for t in &mut self.terms {
                t.1 = t.1.clone() * inv.clone();
            }
        }
        self
    }

    /// `self - coef * mono * g`.
    fn sub_scaled(&self, coef: &F, mono: &Monomial, g: &Sorted<F>, order: &MonomialOrder) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g
            .terms
            .iter()
            .map(|(m, c)| (m.mul(mono), -(c.clone() * coef.clone())))
            .peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
            };
            match ord {
                Ordering::Less => out.push(a.next().unwrap().clone()),
                Ordering::Greater => out.push(b.next().unwrap()),
                Ordering::Equal => {
                    let (m, c1) = a.next().unwrap();
                    let (_, c2) = b.next().unwrap();
                    let c = c1.clone() + c2;
                    if !c.is_zero() {
                        out.push((m.clone(), c));
                    }
                }
            }
        }
        Sorted { terms: out }
    }
}

/// Fully reduces `f` modulo `basis` (all terms, not only the leading one).
fn reduce<F: Field>(f: Sorted<F>, basis: &[&Sorted<F>], order: &MonomialOrder) -> Sorted<F> {
    let mut p = f;
    let mut rem: Vec<(Monomial, F)> = Vec::new();
    while let Some((m, c)) = p.terms.last() {
        match basis.iter().find(|g| g.lm().divides(m)) {
            Some(g) => {
                let q = m.div(g.lm()).expect("divisibility checked");
                let coef = c.clone() / g.lc().clone();
                p = p.sub_scaled(&coef, &q, g, order);
            }
            None => rem.push(p.terms.pop().unwrap()),
        }
    }
    rem.reverse();
    Sorted { terms: rem }
}

fn s_polynomial<F: Field>(f: &Sorted<F>, g: &Sorted<F>, order: &MonomialOrder) -> Sorted<F> {
    let l = f.lm().lcm(g.lm());
    let uf = l.div(f.lm()).unwrap();
    let ug = l.div(g.lm()).unwrap();
    // f, g are monic
    let zero = Sorted { terms: Vec::new() };
    let a = zero.sub_scaled(&-F::one(), &uf, f, order);
    a.sub_scaled(&F::one(), &ug, g, order)
}

/// Remainder of `f` on multivariate division by `basis`.
///
/// No monomial of the result is divisible by a leading monomial of `basis`.
pub fn normal_form<F: Field>(
    f: &Polynomial<F>,
    basis: &[Polynomial<F>],
    order: &MonomialOrder,
) -> Polynomial<F> {
    let sorted: Vec<Sorted<F>> = basis
        .iter()
        .filter(|b| !b.is_zero_poly())
        .map(|b| Sorted::new(b, order))
        .collect();
    let refs: Vec<&Sorted<F>> = sorted.iter().collect();
    reduce(Sorted::new(f, order), &refs, order).to_poly()
}

/// Division with quotients: `f = Σ quotients[i]·basis[i] + remainder`.
pub fn divide<F: Field>(
    f: &Polynomial<F>,
    basis: &[Polynomial<F>],
    order: &MonomialOrder,
) -> (Vec<Polynomial<F>>, Polynomial<F>) {
    let mut quotients = vec![Polynomial::default(); basis.len()];
    let mut p = f.clone();
    let mut rem = Polynomial::default();
    while let Some((m, c)) = p.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
        let hit = basis.iter().enumerate().find_map(|(i, b)| {
            let (lm, lc) = b.leading_term(order)?;
            m.div(lm).map(|q| (i, q, c.clone() / lc.clone()))
        });
        match hit {
            Some((i, q, coef)) => {
                let step = Polynomial::monomial(q, coef);
                p = &p - &(&step * &basis[i]);
                quotients[i] = &quotients[i] + &step;
            }
            None => {
                let t = Polynomial::monomial(m, c);
                p = &p - &t;
                rem = &rem + &t;
            }
        }
    }
    (quotients, rem)
}

trait ZeroCheck {
    fn is_zero_poly(&self) -> bool;
}

impl<F: Field> ZeroCheck for Polynomial<F> {
    fn is_zero_poly(&self) -> bool {
        self.term_count() == 0
    }
}

/// A Gröbner basis together with its ambient ring and order.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis<F> {
    vars: Vec<String>,
    order: MonomialOrder,
    polys: Vec<Polynomial<F>>,
    reduced: bool,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduced Gröbner basis of the ideal generated by `ideal`'s generators.
pub fn buchberger<F: Field>(
    ideal: &Ideal<F>,
    order: &MonomialOrder,
) -> Result<GroebnerBasis<F>, PolyError> {
    let inputs: Vec<Sorted<F>> = ideal
        .generators()
        .iter()
        .filter(|g| !g.is_zero_poly())
        .map(|g| Sorted::new(g, order).monic())
        .collect();
    if inputs.is_empty() {
        return Err(PolyError::ZeroIdeal);
    }

    let mut store: Vec<Sorted<F>> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut unit = false;

    for f in inputs {
        if f.lm().is_one() {
            unit = true;
            break;
        }
        store.push(f);
        update(&store, &mut active, &mut pairs, store.len() - 1);
    }

    while !unit && !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| order.cmp(&pairs[a].lcm, &pairs[b].lcm))
            .unwrap();
        let Pair { i, j, .. } = pairs.swap_remove(best);
        let s = s_polynomial(&store[i], &store[j], order);
        let refs: Vec<&Sorted<F>> = active.iter().map(|&k| &store[k]).collect();
        let h = reduce(s, &refs, order);
        if h.is_zero() {
            continue;
        }
        let h = h.monic();
        if h.lm().is_one() {
            unit = true;
            break;
        }
        store.push(h);
        update(&store, &mut active, &mut pairs, store.len() - 1);
    }

    let polys = if unit {
        vec![Polynomial::constant(F::one())]
    } else {
        interreduce(active.iter().map(|&k| store[k].clone()).collect(), order)
    };
    Ok(GroebnerBasis {
        vars: ideal.vars().to_vec(),
        order: order.clone(),
        polys,
        reduced: true,
    })
}

/// Gebauer–Möller installation of `store[h]` into the basis.
fn update<F: Field>(store: &[Sorted<F>], active: &mut Vec<usize>, pairs: &mut Vec<Pair>, h: usize) {
    let lm_h = store[h].lm().clone();
    let mut candidates: Vec<Pair> = active
        .iter()
        .map(|&g| Pair {
            i: g,
            j: h,
            lcm: store[g].lm().lcm(&lm_h),
        })
        .collect();

    // chain criterion among the new pairs
    let mut kept: Vec<Pair> = Vec::new();
    while let Some(p) = candidates.pop() {
        let coprime = store[p.i].lm().is_coprime(&lm_h);
        let dominated = candidates
            .iter()
            .chain(kept.iter())
            .any(|q| q.lcm.divides(&p.lcm));
        if coprime || !dominated {
            kept.push(p);
        }
    }
    // product criterion
    kept.retain(|p| !store[p.i].lm().is_coprime(&lm_h));

    // chain criterion on the old pairs
    pairs.retain(|p| {
        !(lm_h.divides(&p.lcm)
            && store[p.i].lm().lcm(&lm_h) != p.lcm
            && store[p.j].lm().lcm(&lm_h) != p.lcm)
    });
    pairs.extend(kept);

    active.retain(|&g| !lm_h.divides(store[g].lm()));
    active.push(h);
}

/// Minimal basis, then tail reduction; output sorted by descending leading monomial.
fn interreduce<F: Field>(polys: Vec<Sorted<F>>, order: &MonomialOrder) -> Vec<Polynomial<F>> {
    let mut minimal: Vec<Sorted<F>> = Vec::new();
    for (k, p) in polys.iter().enumerate() {
        let redundant = polys
            .iter()
            .enumerate()
            .any(|(l, q)| l != k && q.lm().divides(p.lm()) && (q.lm() != p.lm() || l < k));
        if !redundant {
            minimal.push(p.clone());
        }
    }
    let mut out: Vec<Sorted<F>> = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<&Sorted<F>> = minimal
            .iter()
            .enumerate()
            .filter(|&(l, _)| l != k)
            .map(|(_, q)| q)
            .collect();
        let head = minimal[k].terms.last().cloned().unwrap();
        let tail = Sorted {
            terms: minimal[k].terms[..minimal[k].terms.len() - 1].to_vec(),
        };
        let mut r = reduce(tail, &others, order);
        r.terms.push(head);
        out.push(r.monic());
    }
    out.sort_by(|a, b| order.cmp(b.lm(), a.lm()));
    out.iter().map(Sorted::to_poly).collect()
}

impl<F: Field> GroebnerBasis<F> {
    /// The (empty) basis of the zero ideal.
    pub fn zero_ideal(vars: Vec<String>, order: MonomialOrder) -> Self {
        GroebnerBasis {
            vars,
            order,
            polys: Vec::new(),
            reduced: true,
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn polys(&self) -> &[Polynomial<F>] {
        &self.polys
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn is_unit(&self) -> bool {
        self.polys
            .iter()
            .any(|p| p.term_count() > 0 && p.is_constant())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys
            .iter()
            .filter_map(|p| p.leading_monomial(&self.order).cloned())
            .collect()
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Polynomial<F> {
        normal_form(f, &self.polys, &self.order)
    }

    /// Ideal membership: the normal form vanishes.
    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        self.normal_form(f).is_zero_poly()
    }

    pub fn to_ideal(&self) -> Ideal<F> {
        Ideal::new(self.vars.clone(), self.polys.clone()).expect("basis lives in its own ring")
    }

    /// Krull dimension of the quotient ring, −1 for the unit ideal.
    pub fn dimension(&self) -> i64 {
        super::dimension::ideal_dimension(self)
    }

    /// Basis members free of the first `k` variables, renumbered into the
    /// ring on the remaining variables.
    pub fn elimination_ideal(&self, k: usize) -> Result<Ideal<F>, PolyError> {
        if k > self.nvars() {
            return Err(PolyError::TooManyEliminated {
                k,
                nvars: self.nvars(),
            });
        }
        if !self.order.eliminates(k) {
            return Err(PolyError::OrderMismatch {
                order: self.order.to_string(),
                k,
            });
        }
        let gens = self
            .polys
            .iter()
            .filter(|p| !p.involves_prefix(k))
            .map(|p| p.shift_down(k))
            .collect();
        Ideal::new(self.vars[k..].to_vec(), gens)
    }

    /// Checks Buchberger's criterion directly: every S-polynomial of a pair of
    /// basis members reduces to zero.
    pub fn s_pairs_reduce_to_zero(&self) -> bool {
        let sorted: Vec<Sorted<F>> = self
            .polys
            .iter()
            .map(|p| Sorted::new(p, &self.order).monic())
            .collect();
        let refs: Vec<&Sorted<F>> = sorted.iter().collect();
        for i in 0..sorted.len() {
            for j in i + 1..sorted.len() {
                let s = s_polynomial(&sorted[i], &sorted[j], &self.order);
                if !reduce(s, &refs, &self.order).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Standalone form of [`GroebnerBasis::elimination_ideal`].
pub fn elimination_ideal<F: Field>(
    basis: &GroebnerBasis<F>,
    k: usize,
) -> Result<Ideal<F>, PolyError> {
    basis.elimination_ideal(k)
}

/// Standalone form of [`GroebnerBasis::contains`].
pub fn ideal_membership<F: Field>(f: &Polynomial<F>, basis: &GroebnerBasis<F>) -> bool {
    basis.contains(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_polynomial;
    use crate::{q, qq, QPoly};
    use num_traits::Zero;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn poly(v: &[String], s: &str) -> QPoly {
        parse_polynomial(s, v).unwrap()
    }

    fn ideal(v: &[&str], gens: &[&str]) -> Ideal<crate::Rational> {
        let v = vars(v);
        let g = gens.iter().map(|s| poly(&v, s)).collect();
        Ideal::new(v, g).unwrap()
    }

    #[test]
    fn normal_form_substitutes() {
        let v = vars(&["x", "y"]);
        let f = poly(&v, "x^2 + y^2 - 1");
        let b = vec![poly(&v, "x - y")];
        assert_eq!(
            normal_form(&f, &b, &MonomialOrder::Lex),
            poly(&v, "2*y^2 - 1")
        );
        assert!(normal_form(&QPoly::zero(), &b, &MonomialOrder::Lex).is_zero());
        assert!(normal_form(&b[0], &b, &MonomialOrder::Lex).is_zero());
    }

    #[test]
    fn division_quotients_recombine() {
        let v = vars(&["x", "y"]);
        let f = poly(&v, "x^3*y + x*y^2 - 7");
        let b = vec![poly(&v, "x*y - 1"), poly(&v, "y^2 - x")];
        let (qs, r) = divide(&f, &b, &MonomialOrder::GrevLex);
        let recombined = qs
            .iter()
            .zip(&b)
            .fold(r.clone(), |acc, (q, g)| &acc + &(q * g));
        assert_eq!(recombined, f);
        assert_eq!(r, normal_form(&f, &b, &MonomialOrder::GrevLex));
    }

    #[test]
    fn circle_and_line() {
        let i = ideal(&["x", "y"], &["x - y", "x^2 + y^2 - 1"]);
        let gb = buchberger(&i, &MonomialOrder::Lex).unwrap();
        let v = vars(&["x", "y"]);
        assert_eq!(gb.polys(), &[poly(&v, "x - y"), poly(&v, "y^2 - 1/2")]);
        assert!(gb.s_pairs_reduce_to_zero());
        let e = gb.elimination_ideal(1).unwrap();
        assert_eq!(e.vars(), &["y".to_string()]);
        assert_eq!(
            e.generators(),
            &[parse_polynomial("y^2 - 1/2", e.vars()).unwrap()]
        );
    }

    #[test]
    fn single_variable() {
        let gb = buchberger(&ideal(&["x"], &["x"]), &MonomialOrder::Lex).unwrap();
        assert_eq!(gb.polys(), &[QPoly::var(0)]);
        let gb = buchberger(&ideal(&["x"], &["3*x - 6"]), &MonomialOrder::Lex).unwrap();
        assert_eq!(gb.polys(), &[&QPoly::var(0) - &QPoly::constant(q(2))]);
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let i = ideal(&["x", "y"], &["x^2", "x*y", "y^2"]);
        let gb = buchberger(&i, &MonomialOrder::GrevLex).unwrap();
        assert_eq!(gb.polys(), i.generators());
    }

    #[test]
    fn zero_ideal_rejected() {
        let i = Ideal::new(vars(&["x"]), vec![QPoly::zero()]).unwrap();
        assert_eq!(
            buchberger(&i, &MonomialOrder::Lex),
            Err(PolyError::ZeroIdeal)
        );
    }

    #[test]
    fn unit_ideal_collapses() {
        let i = ideal(&["x", "y"], &["x*y - 1", "x", "y + 2"]);
        let gb = buchberger(&i, &MonomialOrder::GrevLex).unwrap();
        assert!(gb.is_unit());
        assert_eq!(gb.polys(), &[QPoly::constant(q(1))]);
        assert_eq!(gb.dimension(), -1);
    }

    #[test]
    fn elimination_edge_cases() {
        let i = ideal(&["x", "y"], &["x - y", "x^2 + y^2 - 1"]);
        let gb = buchberger(&i, &MonomialOrder::GrevLex).unwrap();
        assert!(matches!(
            gb.elimination_ideal(1),
            Err(PolyError::OrderMismatch { .. })
        ));
        let same = gb.elimination_ideal(0).unwrap();
        assert_eq!(same.generators(), gb.polys());
        let lex = buchberger(&ideal(&["x", "y"], &["x*y - 1"]), &MonomialOrder::Lex).unwrap();
        assert!(lex.elimination_ideal(2).unwrap().generators().is_empty());
    }

    #[test]
    fn membership() {
        let i = ideal(&["x", "y"], &["x - y"]);
        let gb = buchberger(&i, &MonomialOrder::GrevLex).unwrap();
        let v = vars(&["x", "y"]);
        assert!(ideal_membership(&poly(&v, "x^2 - y^2"), &gb));
        assert!(!ideal_membership(&QPoly::constant(q(1)), &gb));
        let g = poly(&v, "x^3 - 2/3*x*y + 5");
        assert!(gb.contains(&(&g * &i.generators()[0])));
        assert!(!gb.contains(&QPoly::constant(qq(1, 2))));
    }
}
