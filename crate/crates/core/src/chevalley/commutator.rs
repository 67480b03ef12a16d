use std::fmt::Write as _;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{e_alpha, root_generator, ChevalleyError, Root, RootSystemC};
use crate::polyring::{Monomial, Polynomial};
use crate::{PolyMatrix, QPoly};

/// One factor `e_γ(N·aⁱbʲ)` of a commutator, `γ = iα + jβ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommutatorTerm {
    pub root: Root,
    pub i: u32,
    pub j: u32,
    pub constant: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairReport {
    pub alpha: Root,
    pub beta: Root,
    pub terms: Vec<CommutatorTerm>,
}

fn term_poly(i: u32, j: u32, c: i64) -> QPoly {
    Polynomial::monomial(Monomial::from_exponents(vec![i, j]), crate::q(c))
}

/// Expands `[e_α(a), e_β(b)] = e_α(a)e_β(b)e_α(−a)e_β(−b)` over `ℚ[a, b]`
/// and peels off root elements `e_{iα+jβ}(N aⁱbʲ)` from the left, in order
/// of increasing `i + j` (then `i`). Succeeds only if nothing is left over.
pub fn commutator_expand(
    system: &RootSystemC,
    alpha: &Root,
    beta: &Root,
) -> Result<Vec<CommutatorTerm>, ChevalleyError> {
    if *alpha == beta.neg() {
        return Err(ChevalleyError::OppositeRoots(alpha.clone(), beta.clone()));
    }
    let a: QPoly = Polynomial::var(0);
    let b: QPoly = Polynomial::var(1);
    let mut rest: PolyMatrix = &(&e_alpha(system, alpha, &a)? * &e_alpha(system, beta, &b)?)
        * &(&e_alpha(system, alpha, &-a.clone())? * &e_alpha(system, beta, &-b.clone())?);

    let mut candidates: Vec<(u32, u32, Root)> = (1..=3)
        .flat_map(|i| (1..=3).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, alpha.combine(i64::from(i), beta, i64::from(j))))
        .filter(|(_, _, g)| system.contains(g))
        .collect();
    candidates.sort_by_key(|&(i, j, _)| (i + j, i));

    let mut terms = Vec::new();
    for (i, j, gamma) in candidates {
        let (p, q, _) = root_generator(system, &gamma)?[0];
        let coeff = rest[(p, q)].coefficient(&Monomial::from_exponents(vec![i, j]));
        if coeff.is_zero() {
            continue;
        }
        if !coeff.is_integer() {
            return Err(ChevalleyError::IdentityFailed {
                alpha: alpha.clone(),
                beta: beta.clone(),
            });
        }
        let constant = i64::try_from(coeff.to_integer()).expect("small structure constant");
        rest = &e_alpha(system, &gamma, &term_poly(i, j, -constant))? * &rest;
        terms.push(CommutatorTerm {
            root: gamma,
            i,
            j,
            constant,
        });
    }
    if !rest.is_identity() {
        return Err(ChevalleyError::IdentityFailed {
            alpha: alpha.clone(),
            beta: beta.clone(),
        });
    }
    Ok(terms)
}

/// Runs [`commutator_expand`] on every ordered pair `α ≠ ±β`.
pub fn verify_all_pairs(system: &RootSystemC) -> Result<Vec<PairReport>, ChevalleyError> {
    let mut out = Vec::new();
    for alpha in system.roots() {
        for beta in system.roots() {
            if alpha == beta || *alpha == beta.neg() {
                continue;
            }
            let terms = commutator_expand(system, alpha, beta)?;
            out.push(PairReport {
                alpha: alpha.clone(),
                beta: beta.clone(),
                terms,
            });
        }
    }
    Ok(out)
}

/// Canonical text form, one pair per line:
/// `alpha beta : i j gamma N ; …` (or `:` alone when the elements commute).
pub fn golden_text(system: &RootSystemC, reports: &[PairReport]) -> String {
    let mut s = format!("# C_{} commutator constants\n", system.rank());
    for r in reports {
        let terms: Vec<String> = r
            .terms
            .iter()
            .map(|t| format!("{} {} {} {}", t.i, t.j, t.root, t.constant))
            .collect();
        let _ = write!(s, "{} {} :", r.alpha, r.beta);
        if !terms.is_empty() {
            let _ = write!(s, " {}", terms.join(" ; "));
        }
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::roots_of_cn;

    fn rebuild(system: &RootSystemC, terms: &[CommutatorTerm], swap: bool) -> PolyMatrix {
        let mut m = PolyMatrix::identity(2 * system.rank());
        for t in terms {
            let f = if swap {
                term_poly(t.j, t.i, t.constant)
            } else {
                term_poly(t.i, t.j, t.constant)
            };
            m = &m * &e_alpha(system, &t.root, &f).unwrap();
        }
        m
    }

    #[test]
    fn short_long_pair() {
        let s = roots_of_cn(2).unwrap();
        let terms = commutator_expand(&s, &Root(vec![1, -1]), &Root(vec![0, 2])).unwrap();
        let roots: Vec<String> = terms.iter().map(|t| t.root.to_string()).collect();
        assert_eq!(roots, ["e1+e2", "2e1"]);
        assert!(terms.iter().all(|t| [1, 2].contains(&t.constant.abs())));
    }

    #[test]
    fn non_root_sums_commute() {
        let s = roots_of_cn(2).unwrap();
        assert!(commutator_expand(&s, &Root(vec![2, 0]), &Root(vec![0, 2]))
            .unwrap()
            .is_empty());
        assert!(commutator_expand(&s, &Root(vec![2, 0]), &Root(vec![-2, 0])).is_err());
    }

    #[test]
    fn antisymmetry() {
        let s = roots_of_cn(2).unwrap();
        let reports = verify_all_pairs(&s).unwrap();
        assert_eq!(reports.len(), 48);
        for r in &reports {
            let back = commutator_expand(&s, &r.beta, &r.alpha).unwrap();
            let prod = &rebuild(&s, &r.terms, false) * &rebuild(&s, &back, true);
            assert!(prod.is_identity(), "{} {}", r.alpha, r.beta);
        }
    }

    #[test]
    fn rank_three_pairs_verify() {
        let s = roots_of_cn(3).unwrap();
        assert_eq!(verify_all_pairs(&s).unwrap().len(), 18 * 16);
    }
}
