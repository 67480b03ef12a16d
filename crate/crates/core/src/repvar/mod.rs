//! Representation varieties: the ideal of `R_n(Γ)`, word evaluation,
//! restriction to and induction from finite-index subgroups, and the
//! linear-algebra certificates (centralizer, Burnside span) used downstream.

mod file;
mod induce;
mod span;

use thiserror::Error;

pub use file::RepFile;
pub use induce::{
    induce, induced_block_matrix, restrict, Restriction, SchreierImages, SubgroupOracle,
};
pub use span::{burnside_irreducible, centralizer_dim, word_algebra_basis, SpanBuilder};

use crate::matrix::Matrix;
use crate::polyring::{Ideal, Polynomial};
use crate::scalar::{Field, Ring};
use crate::words::{Presentation, Word, WordsError};
use crate::{QPoly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("expected {expected} generator matrices, got {got}")]
    GeneratorCount { expected: usize, got: usize },
    #[error("matrix for generator {generator} is not {n}×{n}")]
    Shape { generator: usize, n: usize },
    #[error("matrix for generator {generator} is singular")]
    Singular { generator: usize },
    #[error("relator {index} (`{relator}`) does not evaluate to the identity")]
    RelatorNotIdentity { index: usize, relator: String },
    #[error("word `{0}` does not lie in the subgroup")]
    NotInSubgroup(String),
    #[error("representations have different dimensions ({0} vs {1})")]
    DimensionMismatch(usize, usize),
    #[error(transparent)]
    Words(#[from] WordsError),
    #[error("representation file: {0}")]
    File(String),
}

/// Anything that assigns square matrices to generators.
pub trait MatrixRep {
    type Scalar: Ring;

    fn dim(&self) -> usize;
    fn generator_count(&self) -> usize;
    fn image(&self, g: usize) -> &Matrix<Self::Scalar>;
    fn inverse_image(&self, g: usize) -> &Matrix<Self::Scalar>;

    /// Product of generator images in word order; runs use repeated squaring.
    fn evaluate(&self, w: &Word) -> Matrix<Self::Scalar> {
        let mut acc = Matrix::identity(self.dim());
        for &(g, e) in w.runs() {
            let base = if e > 0 {
                self.image(g)
            } else {
                self.inverse_image(g)
            };
            let factor = if e.unsigned_abs() == 1 {
                base.clone()
            } else {
                base.pow(e.unsigned_abs())
            };
            acc = &acc * &factor;
        }
        acc
    }
}

/// Free-standing form of [`MatrixRep::evaluate`].
pub fn evaluate_word<R: MatrixRep>(rep: &R, w: &Word) -> Matrix<R::Scalar> {
    rep.evaluate(w)
}

/// A representation with matrices over a field.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation<F> {
    generators: Vec<String>,
    n: usize,
    matrices: Vec<Matrix<F>>,
    inverses: Vec<Matrix<F>>,
}

impl<F: Field> Representation<F> {
    /// Images of free generators; checks shapes and invertibility only.
    pub fn new(
        generators: Vec<String>,
        n: usize,
        matrices: Vec<Matrix<F>>,
    ) -> Result<Self, RepError> {
        if matrices.len() != generators.len() {
            return Err(RepError::GeneratorCount {
                expected: generators.len(),
                got: matrices.len(),
            });
        }
        let mut inverses = Vec::with_capacity(matrices.len());
        for (g, m) in matrices.iter().enumerate() {
            if m.rows() != n || m.cols() != n {
                return Err(RepError::Shape { generator: g, n });
            }
            inverses.push(m.inverse().ok_or(RepError::Singular { generator: g })?);
        }
        Ok(Representation {
            generators,
            n,
            matrices,
            inverses,
        })
    }

    /// A representation of `p`: additionally every relator must map to the identity.
    pub fn for_presentation(p: &Presentation, matrices: Vec<Matrix<F>>) -> Result<Self, RepError> {
        let n = matrices.first().map_or(1, Matrix::rows);
        let rep = Self::new(p.generators().to_vec(), n, matrices)?;
        rep.check_relators(p)?;
        Ok(rep)
    }

    /// Like [`Representation::for_presentation`] with an explicit dimension,
    /// needed when the group has no generators.
    pub fn for_presentation_dim(
        p: &Presentation,
        n: usize,
        matrices: Vec<Matrix<F>>,
    ) -> Result<Self, RepError> {
        let rep = Self::new(p.generators().to_vec(), n, matrices)?;
        rep.check_relators(p)?;
        Ok(rep)
    }

    pub fn check_relators(&self, p: &Presentation) -> Result<(), RepError> {
        if p.generator_count() != self.matrices.len() {
            return Err(RepError::GeneratorCount {
                expected: p.generator_count(),
                got: self.matrices.len(),
            });
        }
        for (index, r) in p.relators().iter().enumerate() {
            if !self.evaluate(r).is_identity() {
                return Err(RepError::RelatorNotIdentity {
                    index,
                    relator: p.word_to_string(r),
                });
            }
        }
        Ok(())
    }

    pub fn trivial(generators: Vec<String>, n: usize) -> Self {
        let k = generators.len();
        Representation {
            generators,
            n,
            matrices: vec![Matrix::identity(n); k],
            inverses: vec![Matrix::identity(n); k],
        }
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn matrices(&self) -> &[Matrix<F>] {
        &self.matrices
    }

    pub fn trace(&self, w: &Word) -> F {
        self.evaluate(w).trace()
    }

    /// `ρ ⊕ σ`, generator by generator.
    pub fn direct_sum(&self, other: &Self) -> Result<Self, RepError> {
        if self.matrices.len() != other.matrices.len() {
            return Err(RepError::GeneratorCount {
                expected: self.matrices.len(),
                got: other.matrices.len(),
            });
        }
        Ok(Representation {
            generators: self.generators.clone(),
            n: self.n + other.n,
            matrices: self
                .matrices
                .iter()
                .zip(&other.matrices)
                .map(|(a, b)| a.direct_sum(b))
                .collect(),
            inverses: self
                .inverses
                .iter()
                .zip(&other.inverses)
                .map(|(a, b)| a.direct_sum(b))
                .collect(),
        })
    }

    /// `ρ ⊕ 1_k`.
    pub fn pad_trivial(&self, k: usize) -> Self {
        self.direct_sum(&Self::trivial(self.generators.clone(), k))
            .expect("same generator count")
    }

    /// `g ρ g⁻¹`; `None` if `g` is singular.
    pub fn conjugate(&self, g: &Matrix<F>) -> Option<Self> {
        let gi = g.inverse()?;
        let conj = |m: &Matrix<F>| &(g * m) * &gi;
        Some(Representation {
            generators: self.generators.clone(),
            n: self.n,
            matrices: self.matrices.iter().map(conj).collect(),
            inverses: self.inverses.iter().map(conj).collect(),
        })
    }
}

impl<F: Field> MatrixRep for Representation<F> {
    type Scalar = F;

    fn dim(&self) -> usize {
        self.n
    }

    fn generator_count(&self) -> usize {
        self.matrices.len()
    }

    fn image(&self, g: usize) -> &Matrix<F> {
        &self.matrices[g]
    }

    fn inverse_image(&self, g: usize) -> &Matrix<F> {
        &self.inverses[g]
    }
}

/// The generic representation: generator `k` maps to the matrix of variables
/// `x_k_i_j`, and its inverse to `d_k · adj(X_k)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymbolicRep {
    n: usize,
    matrices: Vec<Matrix<QPoly>>,
    inverses: Vec<Matrix<QPoly>>,
    det_vars: Vec<usize>,
}

impl SymbolicRep {
    /// Variables `0..g·n²` are the matrix entries (generator-major, row-major),
    /// followed by `g` inverse-determinant variables.
    pub fn new(generators: usize, n: usize) -> Self {
        let n2 = n * n;
        let mut matrices = Vec::with_capacity(generators);
        let mut inverses = Vec::with_capacity(generators);
        let mut det_vars = Vec::with_capacity(generators);
        for k in 0..generators {
            let m = Matrix::from_vec(n, n, (0..n2).map(|e| Polynomial::var(k * n2 + e)).collect());
            let d = generators * n2 + k;
            inverses.push(m.adjugate().scale(&Polynomial::var(d)));
            matrices.push(m);
            det_vars.push(d);
        }
        SymbolicRep {
            n,
            matrices,
            inverses,
            det_vars,
        }
    }

    pub fn det_var(&self, g: usize) -> usize {
        self.det_vars[g]
    }

    pub fn variable_count(&self) -> usize {
        self.matrices.len() * (self.n * self.n + 1)
    }

    /// `x_k_i_j` then `d_k`, all 1-based.
    pub fn variable_names(&self) -> Vec<String> {
        let g = self.matrices.len();
        let mut names = Vec::with_capacity(self.variable_count());
        for k in 1..=g {
            for i in 1..=self.n {
                for j in 1..=self.n {
                    names.push(format!("x_{k}_{i}_{j}"));
                }
            }
        }
        names.extend((1..=g).map(|k| format!("d_{k}")));
        names
    }

    /// `d_k · det(X_k) − 1` for each generator.
    pub fn determinant_constraints(&self) -> Vec<QPoly> {
        self.matrices
            .iter()
            .zip(&self.det_vars)
            .map(|(m, &d)| {
                &(&Polynomial::var(d) * &m.det_expand()) - &Polynomial::constant(crate::q(1))
            })
            .collect()
    }
}

impl MatrixRep for SymbolicRep {
    type Scalar = QPoly;

    fn dim(&self) -> usize {
        self.n
    }

    fn generator_count(&self) -> usize {
        self.matrices.len()
    }

    fn image(&self, g: usize) -> &Matrix<QPoly> {
        &self.matrices[g]
    }

    fn inverse_image(&self, g: usize) -> &Matrix<QPoly> {
        &self.inverses[g]
    }
}

/// `R_n(Γ)` as an explicit ideal.
#[derive(Clone, Debug)]
pub struct RepVarietyIdeal {
    pub presentation: Presentation,
    pub n: usize,
    pub symbolic: SymbolicRep,
    pub ideal: Ideal<Rational>,
}

/// The ideal of `R_n(Γ)`: entries of `ρ(r) − Id` for each relator plus the
/// determinant constraints, in `g·n² + g` variables.
pub fn build_rep_ideal(p: &Presentation, n: usize) -> RepVarietyIdeal {
    assert!(n >= 1, "representation dimension must be positive");
    let symbolic = SymbolicRep::new(p.generator_count(), n);
    let mut gens = Vec::new();
    let id = Matrix::<QPoly>::identity(n);
    for r in p.relators() {
        let diff = &symbolic.evaluate(r) - &id;
        gens.extend(
            diff.entries()
                .iter()
                .filter(|e| !num_traits::Zero::is_zero(*e))
                .cloned(),
        );
    }
    gens.extend(symbolic.determinant_constraints());
    let ideal = Ideal::new(symbolic.variable_names(), gens).expect("variables in range");
    RepVarietyIdeal {
        presentation: p.clone(),
        n,
        symbolic,
        ideal,
    }
}
