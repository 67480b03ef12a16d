//! Krull dimension from the leading-monomial ideal.
//!
//! `dim k[x]/I` equals the largest size of a variable set `S` such that no
//! leading monomial of a Gröbner basis of `I` has its support inside `S`.

use super::GroebnerBasis;
use crate::scalar::Field;

pub fn ideal_dimension<F: Field>(basis: &GroebnerBasis<F>) -> i64 {
    if basis.is_unit() {
        return -1;
    }
    let n = basis.nvars();
    let supports: Vec<Vec<usize>> = basis
        .leading_monomials()
        .iter()
        .map(|m| m.support().collect())
        .collect();
    max_independent(n, &supports) as i64
}

/// Largest `S ⊆ {0..n}` containing no set from `supports`.
pub fn max_independent(n: usize, supports: &[Vec<usize>]) -> usize {
    let mut chosen = vec![false; n];
    let mut best = 0;
    search(0, 0, n, supports, &mut chosen, &mut best);
    best
}

fn search(
    var: usize,
    size: usize,
    n: usize,
    supports: &[Vec<usize>],
    chosen: &mut [bool],
    best: &mut usize,
) {
    if size + (n - var) <= *best {
        return;
    }
    if var == n {
        *best = size;
        return;
    }
    chosen[var] = true;
    let ok = supports
        .iter()
        .filter(|s| s.contains(&var))
        .all(|s| s.iter().any(|&v| !chosen[v] || v > var));
    if ok {
        search(var + 1, size + 1, n, supports, chosen, best);
    }
    chosen[var] = false;
    search(var + 1, size, n, supports, chosen, best);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{buchberger, parse_ideal, MonomialOrder};

    #[test]
    fn staircase_examples() {
        assert_eq!(max_independent(3, &[]), 3);
        assert_eq!(max_independent(2, &[vec![0, 1]]), 1);
        assert_eq!(max_independent(3, &[vec![0], vec![1, 2]]), 1);
        assert_eq!(max_independent(4, &[vec![0, 1], vec![2, 3]]), 2);
    }

    #[test]
    fn zero_ideal_has_full_dimension() {
        let gb = GroebnerBasis::<crate::Rational>::zero_ideal(
            vec!["x".into(), "y".into(), "z".into()],
            MonomialOrder::GrevLex,
        );
        assert_eq!(gb.dimension(), 3);
    }

    #[test]
    fn hyperbola_pair() {
        let i = parse_ideal("vars: x, y\nx*y\n").unwrap();
        assert_eq!(buchberger(&i, &MonomialOrder::Lex).unwrap().dimension(), 1);
        let i = parse_ideal("vars: x, y\n1\n").unwrap();
        assert_eq!(buchberger(&i, &MonomialOrder::Lex).unwrap().dimension(), -1);
    }
}
