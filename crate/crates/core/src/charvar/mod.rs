//! Trace (Fricke) coordinates and the dimension κ(Γ, n) of the character variety.

mod coords;
mod kappa;
mod laws;

use thiserror::Error;

pub use coords::TraceCoordinateSystem;
pub use kappa::{
    free_kappa, generic_witness, kappa_closed_form, kappa_elimination, kappa_orbit, KappaMethod,
    KappaReport, DEFAULT_ELIMINATION_CAP,
};
pub use laws::{
    induction_inequality_check, monotonicity_check, InductionVerdict, MonotonicityVerdict,
};

use crate::repvar::{MatrixRep, RepError};
use crate::words::Word;
use crate::{Rational, RationalRep};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharVarError {
    #[error("elimination needs {required} variables, above the cap of {cap}")]
    CapExceeded { required: usize, cap: usize },
    #[error("closed form only applies to free groups")]
    NotFree,
    #[error("no generic witness available for a group with relators; supply one")]
    NeedWitness,
    #[error("witness has dimension {got}, expected {expected}")]
    WitnessDimension { expected: usize, got: usize },
    #[error("singular matrix at word `{0}`")]
    Singular(String),
    #[error(transparent)]
    Rep(#[from] RepError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FrickeKind {
    /// `τ_γ(ρ) = tr ρ(γ)`
    Trace,
    /// `δ_γ(ρ) = det ρ(γ)⁻¹`
    InverseDeterminant,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FrickeFunction {
    pub word: Word,
    pub kind: FrickeKind,
}

impl FrickeFunction {
    pub fn trace(word: Word) -> Self {
        FrickeFunction {
            word,
            kind: FrickeKind::Trace,
        }
    }

    pub fn inverse_det(word: Word) -> Self {
        FrickeFunction {
            word,
            kind: FrickeKind::InverseDeterminant,
        }
    }
}

pub fn fricke_eval(rep: &RationalRep, f: &FrickeFunction) -> Result<Rational, CharVarError> {
    let m = rep.evaluate(&f.word);
    match f.kind {
        FrickeKind::Trace => Ok(m.trace()),
        FrickeKind::InverseDeterminant => {
            let det = m.det();
            if num_traits::Zero::is_zero(&det) {
                return Err(CharVarError::Singular(
                    f.word.display(rep.generators()).to_string(),
                ));
            }
            Ok(num_traits::Inv::inv(det))
        }
    }
}

/// First word of length ≤ `max_len` (in [`Word::enumerate`] order) on which
/// the traces differ, or `None` if the reps are not separated at this bound.
pub fn distinguish_reps(
    a: &RationalRep,
    b: &RationalRep,
    max_len: usize,
) -> Result<Option<Word>, CharVarError> {
    if a.dim() != b.dim() {
        return Err(RepError::DimensionMismatch(a.dim(), b.dim()).into());
    }
    if a.generator_count() != b.generator_count() {
        return Err(RepError::GeneratorCount {
            expected: a.generator_count(),
            got: b.generator_count(),
        }
        .into());
    }
    Ok(Word::enumerate(a.generator_count(), max_len)
        .into_iter()
        .find(|w| a.trace(w) != b.trace(w)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::gamma_r;
    use crate::matrix::Matrix;
    use crate::repvar::Representation;
    use crate::{q, qq, QMatrix};

    fn qm(rows: &[&[i64]]) -> QMatrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| q(x)).collect())
                .collect(),
        )
    }

    fn one_gen(m: QMatrix) -> RationalRep {
        let n = m.rows();
        Representation::new(vec!["a".into()], n, vec![m]).unwrap()
    }

    #[test]
    fn fricke_values() {
        let rho = one_gen(qm(&[&[2, 0], &[0, 3]]));
        assert_eq!(
            fricke_eval(&rho, &FrickeFunction::trace(Word::identity())).unwrap(),
            q(2)
        );
        assert_eq!(
            fricke_eval(&rho, &FrickeFunction::inverse_det(Word::generator(0))).unwrap(),
            qq(1, 6)
        );
        let gadget = one_gen(gamma_r(&q(5)));
        assert_eq!(
            fricke_eval(&gadget, &FrickeFunction::trace(Word::generator(0))).unwrap(),
            q(-3)
        );
    }

    #[test]
    fn separation() {
        let a = one_gen(gamma_r(&q(1)));
        let b = one_gen(gamma_r(&q(2)));
        assert_eq!(
            distinguish_reps(&a, &b, 1).unwrap(),
            Some(Word::generator(0))
        );

        let g = qm(&[&[2, 1, 0, 0], &[1, 1, 0, 0], &[0, 0, 1, 3], &[0, 0, 0, 1]]);
        let c = a.conjugate(&g).unwrap();
        assert_eq!(distinguish_reps(&a, &c, 4).unwrap(), None);

        let triv = RationalRep::trivial(vec!["a".into()], 2);
        let d = one_gen(qm(&[&[1, 1], &[1, 2]]));
        assert_eq!(
            distinguish_reps(&triv, &d, 2).unwrap(),
            Some(Word::generator(0))
        );
        assert!(distinguish_reps(&triv, &a, 1).is_err());
    }
}
