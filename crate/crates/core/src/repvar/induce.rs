//! Restriction to a finite-index subgroup Δ and induction back to Γ.
//!
//! With representatives `γ_1, …, γ_d` from the coset table, the induced
//! representation sends γ to the `d × d` block matrix whose `(i, j)` block is
//! `ρ(δ)` when `γ γ_j = γ_i δ` with δ ∈ Δ, and zero otherwise.

use super::{MatrixRep, RepError, Representation};
use crate::matrix::Matrix;
use crate::words::{CosetTable, Presentation, Word};
use crate::{QMatrix, RationalRep};

/// A representation of the subgroup Δ, queried on words of Γ that fix coset 0.
pub trait SubgroupOracle {
    fn dim(&self) -> usize;
    fn eval(&self, delta: &Word) -> Result<QMatrix, RepError>;
}

/// `Res^Γ_Δ ρ`: evaluates ρ on words stabilizing coset 0.
pub struct Restriction<'a> {
    rep: &'a RationalRep,
    table: &'a CosetTable,
}

pub fn restrict<'a>(rep: &'a RationalRep, table: &'a CosetTable) -> Restriction<'a> {
    Restriction { rep, table }
}

impl SubgroupOracle for Restriction<'_> {
    fn dim(&self) -> usize {
        self.rep.dim()
    }

    fn eval(&self, delta: &Word) -> Result<QMatrix, RepError> {
        if !self.table.stabilizes_base(delta) {
            return Err(RepError::NotInSubgroup(
                delta.display(self.rep.generators()).to_string(),
            ));
        }
        Ok(self.rep.evaluate(delta))
    }
}

/// A representation of Δ given by images of its Schreier generators; other
/// subgroup elements are evaluated through Reidemeister rewriting.
pub struct SchreierImages<'a> {
    table: &'a CosetTable,
    images: Vec<QMatrix>,
    inverses: Vec<QMatrix>,
    n: usize,
}

impl<'a> SchreierImages<'a> {
    /// `images[k]` is the image of `table.schreier_generators()[k]`. The
    /// rewritten conjugates `γ_c r γ_c⁻¹` of every relator must map to the
    /// identity, which makes the assignment a representation of Δ.
    pub fn new(
        p: &Presentation,
        table: &'a CosetTable,
        n: usize,
        images: Vec<QMatrix>,
    ) -> Result<Self, RepError> {
        let expected = table.schreier_generators().len();
        if images.len() != expected {
            return Err(RepError::GeneratorCount {
                expected,
                got: images.len(),
            });
        }
        let mut inverses = Vec::with_capacity(images.len());
        for (k, m) in images.iter().enumerate() {
            if m.rows() != n || m.cols() != n {
                return Err(RepError::Shape { generator: k, n });
            }
            inverses.push(m.inverse().ok_or(RepError::Singular { generator: k })?);
        }
        let oracle = SchreierImages {
            table,
            images,
            inverses,
            n,
        };
        for (index, r) in p.relators().iter().enumerate() {
            for c in 0..table.index() {
                let (_, delta) = table.rewrite(r, c);
                if !oracle.eval(&delta)?.is_identity() {
                    return Err(RepError::RelatorNotIdentity {
                        index,
                        relator: p.word_to_string(r),
                    });
                }
            }
        }
        Ok(oracle)
    }
}

impl SubgroupOracle for SchreierImages<'_> {
    fn dim(&self) -> usize {
        self.n
    }

    fn eval(&self, delta: &Word) -> Result<QMatrix, RepError> {
        let factors = self
            .table
            .reidemeister(delta)
            .ok_or_else(|| RepError::NotInSubgroup(format!("{delta:?}")))?;
        let mut acc = Matrix::identity(self.n);
        for (k, s) in factors {
            let m = if s > 0 {
                &self.images[k]
            } else {
                &self.inverses[k]
            };
            acc = &acc * m;
        }
        Ok(acc)
    }
}

/// Block matrix of the induced representation at an arbitrary word γ,
/// computed directly from `γ γ_j = γ_i δ`.
pub fn induced_block_matrix(
    table: &CosetTable,
    oracle: &dyn SubgroupOracle,
    gamma: &Word,
) -> Result<QMatrix, RepError> {
    let m = oracle.dim();
    let d = table.index();
    let mut out = Matrix::zeros(m * d, m * d);
    for j in 0..d {
        let (i, delta) = table.rewrite(gamma, j);
        out.set_block(i * m, j * m, &oracle.eval(&delta)?);
    }
    Ok(out)
}

/// `Ind_Δ^Γ ρ_Δ`, of dimension `m·d`, checked against the relators of `p`.
pub fn induce(
    p: &Presentation,
    table: &CosetTable,
    oracle: &dyn SubgroupOracle,
) -> Result<RationalRep, RepError> {
    let matrices = (0..p.generator_count())
        .map(|g| induced_block_matrix(table, oracle, &Word::generator(g)))
        .collect::<Result<Vec<_>, _>>()?;
    Representation::for_presentation_dim(p, oracle.dim() * table.index(), matrices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{coset_table, parse_presentation, Permutation};
    use crate::{q, Rational};

    fn z_index(d: usize) -> (Presentation, CosetTable) {
        let p = parse_presentation("<a|>").unwrap();
        let cycle = format!(
            "({})",
            (0..d).map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
        );
        let t = coset_table(&p, &[Permutation::from_cycles(d, &cycle).unwrap()]).unwrap();
        (p, t)
    }

    #[test]
    fn induce_from_even_integers() {
        let (p, t) = z_index(2);
        let lambda = q(7);
        let oracle = SchreierImages::new(
            &p,
            &t,
            1,
            vec![Matrix::from_rows(vec![vec![lambda.clone()]])],
        )
        .unwrap();
        let ind = induce(&p, &t, &oracle).unwrap();
        let expected = Matrix::from_rows(vec![vec![q(0), lambda.clone()], vec![q(1), q(0)]]);
        assert_eq!(ind.matrices()[0], expected);
        assert_eq!(ind.trace(&Word::power_of(0, 2)), q(2) * lambda);
    }

    #[test]
    fn restrict_then_induce_matches_block_form() {
        let (p, t) = z_index(2);
        let rho = Representation::for_presentation(&p, vec![Matrix::from_rows(vec![vec![q(3)]])])
            .unwrap();
        let res = restrict(&rho, &t);
        assert_eq!(
            res.eval(&Word::power_of(0, 2)).unwrap(),
            Matrix::from_rows(vec![vec![q(9)]])
        );
        assert!(res.eval(&Word::generator(0)).is_err());
        let ind = induce(&p, &t, &res).unwrap();
        let expected = Matrix::from_rows(vec![vec![q(0), q(9)], vec![q(1), q(0)]]);
        assert_eq!(ind.matrices()[0], expected);
    }

    #[test]
    fn index_one_is_identity() {
        let (p, t) = z_index(1);
        let rho = Representation::for_presentation(
            &p,
            vec![Matrix::from_rows(vec![vec![q(5), q(1)], vec![q(2), q(1)]])],
        )
        .unwrap();
        let ind = induce(&p, &t, &restrict(&rho, &t)).unwrap();
        assert_eq!(ind, rho);
    }

    #[test]
    fn trace_of_induced_counts_fixed_cosets() {
        let (p, t) = z_index(3);
        let oracle = SchreierImages::new(
            &p,
            &t,
            1,
            vec![Matrix::from_rows(vec![vec![Rational::new(
                2.into(),
                3.into(),
            )]])],
        )
        .unwrap();
        let ind = induce(&p, &t, &oracle).unwrap();
        for e in -4..=4i64 {
            let w = Word::power_of(0, e);
            let expected: Rational = (0..3)
                .filter(|&j| t.act(&w, j) == j)
                .map(|j| oracle.eval(&t.rewrite(&w, j).1).unwrap().trace())
                .sum();
            assert_eq!(ind.trace(&w), expected);
        }
    }

    #[test]
    fn schreier_images_must_respect_relators() {
        let p = parse_presentation("<a|a^4>").unwrap();
        let t = coset_table(&p, &[Permutation::from_cycles(2, "(0 1)").unwrap()]).unwrap();
        // Δ = ⟨a²⟩ ≅ Z/2, so the image of a² must square to one
        let one = |x: i64| vec![Matrix::from_rows(vec![vec![q(x)]])];
        assert!(SchreierImages::new(&p, &t, 1, one(-1)).is_ok());
        assert!(matches!(
            SchreierImages::new(&p, &t, 1, one(2)),
            Err(RepError::RelatorNotIdentity { .. })
        ));
    }
}
