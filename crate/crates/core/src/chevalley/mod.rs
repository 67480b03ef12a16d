//! Type `C_n`: roots, symplectic root elements `e_α(t)`, Chevalley
//! commutator constants computed from the matrices, and Weyl dimensions.
//!
//! The symplectic form is block diagonal with blocks `[[0, 1], [−1, 0]]`;
//! basis vector `2i` has weight `e_{i+1}` and `2i + 1` has weight `−e_{i+1}`.

mod commutator;
mod elementary;

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::Rational;

pub use commutator::{
    commutator_expand, golden_text, verify_all_pairs, CommutatorTerm, PairReport,
};
pub use elementary::{
    e_alpha, gamma_r, gamma_r_decomposition, is_symplectic, root_generator, specialize,
    symplectic_form, word_in_elementaries,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChevalleyError {
    #[error("type C_n needs rank n >= 2, got {0}")]
    RankTooSmall(usize),
    #[error("{0} is not a root of C_{1}")]
    NotARoot(Root, usize),
    #[error("commutator of opposite roots {0} and {1} is not covered by the formula")]
    OppositeRoots(Root, Root),
    #[error("commutator identity failed for ({alpha}, {beta})")]
    IdentityFailed { alpha: Root, beta: Root },
    #[error("weight has {got} coefficients, rank is {rank}")]
    WeightLength { got: usize, rank: usize },
}

/// A vector in `ℤⁿ` written in the `e_i` basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn norm_sq(&self) -> i64 {
        self.0.iter().map(|c| c * c).sum()
    }

    pub fn is_long(&self) -> bool {
        self.norm_sq() == 4
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    /// `i·self + j·other`.
    pub fn combine(&self, i: i64, other: &Root, j: i64) -> Root {
        Root(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| i * a + j * b)
                .collect(),
        )
    }

    pub fn dot(&self, other: &[i64]) -> i64 {
        self.0.iter().zip(other).map(|(a, b)| a * b).sum()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            if mag == 1 {
                write!(f, "{sign}e{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}e{}", i + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The root system `C_n`: positive roots (simple roots first, then by
/// height) followed by their negatives in the same order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystemC {
    rank: usize,
    roots: Vec<Root>,
}

pub fn roots_of_cn(n: usize) -> Result<RootSystemC, ChevalleyError> {
    if n < 2 {
        return Err(ChevalleyError::RankTooSmall(n));
    }
    let unit = |i: usize, c: i64| {
        let mut v = vec![0; n];
        v[i] = c;
        v
    };
    let mut positive = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut minus = unit(i, 1);
            minus[j] = -1;
            let mut plus = unit(i, 1);
            plus[j] = 1;
            positive.push(Root(minus));
            positive.push(Root(plus));
        }
        positive.push(Root(unit(i, 2)));
    }
    let system = RootSystemC {
        rank: n,
        roots: Vec::new(),
    };
    positive.sort_by_key(|r| {
        let c = system.simple_coefficients(r);
        (c.iter().sum::<i64>(), std::cmp::Reverse(c))
    });
    let negative: Vec<Root> = positive.iter().map(Root::neg).collect();
    positive.extend(negative);
    Ok(RootSystemC {
        rank: n,
        roots: positive,
    })
}

impl RootSystemC {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.roots.len() / 2]
    }

    /// `α_i = e_i − e_{i+1}` for `i < n`, `α_n = 2e_n`.
    pub fn simple_roots(&self) -> &[Root] {
        &self.roots[..self.rank]
    }

    pub fn contains(&self, r: &Root) -> bool {
        r.rank() == self.rank && self.roots.contains(r)
    }

    /// Coefficients of `v` in the simple roots.
    pub fn simple_coefficients(&self, v: &Root) -> Vec<i64> {
        let n = self.rank;
        let mut out = Vec::with_capacity(n);
        let mut partial = 0;
        for k in 0..n - 1 {
            partial += v.0[k];
            out.push(partial);
        }
        out.push((partial + v.0[n - 1]) / 2);
        out
    }

    /// `ω_i = e_1 + … + e_i`.
    pub fn fundamental_weight(&self, i: usize) -> Root {
        Root((0..self.rank).map(|k| i64::from(k < i)).collect())
    }

    /// `ρ̂ = Σ ω_i = (n, n − 1, …, 1)`.
    pub fn weyl_vector(&self) -> Vec<i64> {
        (0..self.rank).map(|k| (self.rank - k) as i64).collect()
    }
}

/// `dim V(λ)` for `λ = Σ c_i ω_i` by the Weyl dimension formula.
pub fn weyl_dim(system: &RootSystemC, lambda: &[u32]) -> Result<u64, ChevalleyError> {
    if lambda.len() != system.rank {
        return Err(ChevalleyError::WeightLength {
            got: lambda.len(),
            rank: system.rank,
        });
    }
    let rho = system.weyl_vector();
    let shifted: Vec<i64> = (0..system.rank)
        .map(|k| rho[k] + lambda[k..].iter().map(|&c| i64::from(c)).sum::<i64>())
        .collect();
    let mut dim = Rational::one();
    for alpha in system.positive_roots() {
        dim *= Rational::new(alpha.dot(&shifted).into(), alpha.dot(&rho).into());
    }
    debug_assert!(dim.is_integer() && !dim.is_zero());
    Ok(u64::try_from(dim.to_integer()).expect("dimension fits in u64"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts_and_lengths() {
        for n in 2..=5 {
            let s = roots_of_cn(n).unwrap();
            assert_eq!(s.roots().len(), 2 * n * n);
            assert!(s.roots().iter().all(|r| [2, 4].contains(&r.norm_sq())));
            assert_eq!(s.roots().iter().filter(|r| r.is_long()).count(), 2 * n);
        }
        assert_eq!(roots_of_cn(1), Err(ChevalleyError::RankTooSmall(1)));
    }

    #[test]
    fn rank_two_layout() {
        let s = roots_of_cn(2).unwrap();
        let names: Vec<String> = s.positive_roots().iter().map(|r| r.to_string()).collect();
        assert_eq!(names, ["e1-e2", "2e2", "e1+e2", "2e1"]);
        assert_eq!(s.fundamental_weight(1), Root(vec![1, 0]));
        assert_eq!(s.fundamental_weight(2), Root(vec![1, 1]));
        assert_eq!(s.weyl_vector(), vec![2, 1]);
        assert_eq!(s.simple_coefficients(&Root(vec![2, 0])), vec![2, 1]);
    }

    #[test]
    fn weyl_dimensions() {
        let c2 = roots_of_cn(2).unwrap();
        assert_eq!(weyl_dim(&c2, &[1, 0]).unwrap(), 4);
        assert_eq!(weyl_dim(&c2, &[0, 1]).unwrap(), 5);
        assert_eq!(weyl_dim(&c2, &[2, 0]).unwrap(), 10);
        for n in 2..=4 {
            let s = roots_of_cn(n).unwrap();
            let mut omega1 = vec![0; n];
            omega1[0] = 1;
            assert_eq!(weyl_dim(&s, &omega1).unwrap(), 2 * n as u64);
            assert_eq!(weyl_dim(&s, &vec![0; n]).unwrap(), 1);
        }
        assert!(weyl_dim(&c2, &[1]).is_err());
    }
}
