//! Spans of word images: Burnside's irreducibility certificate and
//! commutants.

use super::{MatrixRep, Representation};
use crate::matrix::Matrix;
use crate::scalar::Field;

/// Incrementally maintained row-echelon basis of a subspace of `F^len`.
#[derive(Clone, Debug)]
pub struct SpanBuilder<F> {
    len: usize,
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Field> SpanBuilder<F> {
    pub fn new(len: usize) -> Self {
        SpanBuilder {
            len,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.len
    }

    fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut v = v.to_vec();
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let c = v[*pivot].clone();
            for (x, r) in v.iter_mut().zip(row) {
                *x = x.clone() - c.clone() * r.clone();
            }
        }
        v
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Adds `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: &[F]) -> bool {
        assert_eq!(v.len(), self.len);
        let mut r = self.reduce(v);
        let Some(pivot) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[pivot].inv();
        for x in &mut r {
            *x = x.clone() * inv.clone();
        }
        for (_, row) in &mut self.rows {
            if row[pivot].is_zero() {
                continue;
            }
            let c = row[pivot].clone();
            for (x, y) in row.iter_mut().zip(&r) {
                *x = x.clone() - c.clone() * y.clone();
            }
        }
        self.rows.push((pivot, r));
        true
    }
}

/// A basis of `span{ρ(w) : |w| ≤ max_len}`, built level by level from
/// `span_{k+1} = span_k + Σ_x ρ(x)·span_k` over letters `x`.
pub fn word_algebra_basis<F: Field>(rep: &Representation<F>, max_len: usize) -> Vec<Matrix<F>> {
    let n = rep.dim();
    let mut span = SpanBuilder::new(n * n);
    let id = Matrix::identity(n);
    span.insert(id.entries());
    let mut basis = vec![id];
    let mut frontier = basis.clone();
    let letters: Vec<&Matrix<F>> = (0..rep.generator_count())
        .flat_map(|g| [rep.image(g), rep.inverse_image(g)])
        .collect();
    for _ in 0..max_len {
        if span.is_full() || frontier.is_empty() {
            break;
        }
        let mut next = Vec::new();
        for m in &frontier {
            for x in &letters {
                let prod = *x * m;
                if span.insert(prod.entries()) {
                    next.push(prod);
                }
            }
        }
        basis.extend(next.iter().cloned());
        frontier = next;
    }
    basis
}

/// Dimension of `{X : X ρ(w) = ρ(w) X for all |w| ≤ max_len}`.
pub fn centralizer_dim<F: Field>(rep: &Representation<F>, max_len: usize) -> usize {
    let n = rep.dim();
    let basis = word_algebra_basis(rep, max_len);
    let mut span = SpanBuilder::new(n * n);
    // unknown X_ab sits at column a*n + b
    for m in &basis {
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![F::zero(); n * n];
                for k in 0..n {
                    // (XM)_ij = Σ_k X_ik M_kj
                    let c = i * n + k;
                    row[c] = row[c].clone() + m[(k, j)].clone();
                    // (MX)_ij = Σ_k M_ik X_kj
                    let c = k * n + j;
                    row[c] = row[c].clone() - m[(i, k)].clone();
                }
                span.insert(&row);
            }
        }
    }
    n * n - span.dim()
}

/// Burnside certificate: true iff the images of words of length ≤ `max_len`
/// span all of `M_n`. `false` only means "not certified at this bound".
pub fn burnside_irreducible<F: Field>(rep: &Representation<F>, max_len: usize) -> bool {
    let n = rep.dim();
    word_algebra_basis(rep, max_len).len() == n * n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, QMatrix};

    fn qm(rows: &[&[i64]]) -> QMatrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| q(x)).collect())
                .collect(),
        )
    }

    fn names(k: usize) -> Vec<String> {
        (0..k).map(|i| format!("g{i}")).collect()
    }

    fn generic_pair() -> Representation<crate::Rational> {
        Representation::new(
            names(2),
            2,
            vec![qm(&[&[1, 1], &[0, 1]]), qm(&[&[1, 0], &[1, 1]])],
        )
        .unwrap()
    }

    #[test]
    fn centralizer_examples() {
        assert_eq!(centralizer_dim(&generic_pair(), 1), 1);
        let diag = Representation::new(names(1), 2, vec![qm(&[&[1, 0], &[0, 2]])]).unwrap();
        assert_eq!(centralizer_dim(&diag, 1), 2);
        let trivial = Representation::<crate::Rational>::trivial(names(2), 3);
        assert_eq!(centralizer_dim(&trivial, 4), 9);
    }

    #[test]
    fn burnside_examples() {
        assert!(burnside_irreducible(&generic_pair(), 2));
        assert!(!burnside_irreducible(&generic_pair(), 1));
        let one = Representation::new(names(1), 1, vec![qm(&[&[5]])]).unwrap();
        assert!(burnside_irreducible(&one, 1));
        let diag = Representation::new(
            names(2),
            2,
            vec![qm(&[&[1, 0], &[0, 2]]), qm(&[&[3, 0], &[0, 5]])],
        )
        .unwrap();
        for l in 1..6 {
            assert!(!burnside_irreducible(&diag, l));
        }
    }

    #[test]
    fn span_builder_tracks_rank() {
        let mut s = SpanBuilder::new(3);
        assert!(s.insert(&[q(1), q(2), q(3)]));
        assert!(!s.insert(&[q(2), q(4), q(6)]));
        assert!(s.insert(&[q(0), q(1), q(0)]));
        assert!(s.contains(&[q(1), q(0), q(3)]));
        assert!(!s.contains(&[q(0), q(0), q(1)]));
        assert_eq!(s.dim(), 2);
    }
}
