//! Dimension laws checked on computed values: monotonicity in n, and the
//! induction inequality `κ(Γ, md) ≥ κ(Δ, m)` for `[Γ : Δ] = d`.

use serde::{Deserialize, Serialize};

use super::CharVarError;
use crate::repvar::{induce, MatrixRep, RepFile, SchreierImages};
use crate::words::{subgroup_presentation, CosetTable, Presentation, Word};
use crate::{q, QMatrix, RationalRep};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MonotonicityVerdict {
    pub n: usize,
    pub m: usize,
    pub kappa_n: i64,
    pub kappa_m: i64,
    /// `τ_w(ρ ⊕ 1_{m−n}) = τ_w(ρ) + (m − n)` held on every tested word.
    pub padding_preserves_traces: bool,
    pub pass: bool,
}

/// For each `(n, m)` with `n < m`, checks `κ(m) ≥ κ(n)` and the trace shift of
/// the embedding `ρ ↦ ρ ⊕ 1_{m−n}` on words of length ≤ `max_len`.
/// `kappa(n)` returns the value together with a witness of dimension `n`.
pub fn monotonicity_check(
    p: &Presentation,
    pairs: &[(usize, usize)],
    max_len: usize,
    mut kappa: impl FnMut(usize) -> Result<(i64, RationalRep), CharVarError>,
) -> Result<Vec<MonotonicityVerdict>, CharVarError> {
    let words = Word::enumerate(p.generator_count(), max_len);
    pairs
        .iter()
        .map(|&(n, m)| {
            assert!(n < m, "pairs must satisfy n < m");
            let (kappa_n, rho) = kappa(n)?;
            let (kappa_m, _) = kappa(m)?;
            let padded = rho.pad_trivial(m - n);
            padded.check_relators(p)?;
            let shift = q((m - n) as i64);
            let padding_preserves_traces = words
                .iter()
                .all(|w| padded.trace(w) == rho.trace(w) + shift.clone());
            Ok(MonotonicityVerdict {
                n,
                m,
                kappa_n,
                kappa_m,
                padding_preserves_traces,
                pass: kappa_m >= kappa_n && padding_preserves_traces,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InductionVerdict {
    pub index: usize,
    pub m: usize,
    pub subgroup: String,
    pub kappa_gamma: i64,
    pub kappa_delta: i64,
    pub induced_witness: RepFile,
    pub pass: bool,
}

/// `κ(Γ, m·d) ≥ κ(Δ, m)`. Δ is presented by Reidemeister–Schreier;
/// `delta_images` are `m × m` images of its Schreier generators, from which
/// the induced witness is built. `kappa(group, n)` supplies the values.
pub fn induction_inequality_check(
    p: &Presentation,
    table: &CosetTable,
    m: usize,
    delta_images: Vec<QMatrix>,
    mut kappa: impl FnMut(&Presentation, usize) -> Result<i64, CharVarError>,
) -> Result<InductionVerdict, CharVarError> {
    let sub = subgroup_presentation(p, table);
    let oracle = SchreierImages::new(p, table, m, delta_images)?;
    let induced = induce(p, table, &oracle)?;
    debug_assert_eq!(induced.dim(), m * table.index());
    let kappa_gamma = kappa(p, m * table.index())?;
    let kappa_delta = kappa(&sub, m)?;
    Ok(InductionVerdict {
        index: table.index(),
        m,
        subgroup: sub.to_string(),
        kappa_gamma,
        kappa_delta,
        induced_witness: RepFile::from_rep(&induced),
        pass: kappa_gamma >= kappa_delta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charvar::{free_kappa, generic_witness, kappa_orbit};
    use crate::matrix::Matrix;
    use crate::words::{coset_table, parse_presentation, Permutation};

    fn orbit_kappa(p: &Presentation, n: usize) -> Result<i64, CharVarError> {
        let w = generic_witness(p, n, 11, 8)?;
        Ok(kappa_orbit(p, n, &w, 1)?.value)
    }

    fn cyclic_table(p: &Presentation, d: usize) -> CosetTable {
        let cycle = format!(
            "({})",
            (0..d).map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
        );
        coset_table(p, &[Permutation::from_cycles(d, &cycle).unwrap()]).unwrap()
    }

    #[test]
    fn induction_for_integers() {
        let z = parse_presentation("<a|>").unwrap();
        for d in [1, 2, 3] {
            let t = cyclic_table(&z, d);
            let images = vec![Matrix::from_rows(vec![vec![q(2)]]); t.schreier_generators().len()];
            let v = induction_inequality_check(&z, &t, 1, images, orbit_kappa).unwrap();
            assert!(v.pass);
            assert_eq!(v.kappa_gamma, d as i64);
            assert_eq!(v.kappa_delta, 1);
        }
    }

    #[test]
    fn monotone_free_groups() {
        for d in 0..=2 {
            let p = parse_presentation(match d {
                0 => "<|>",
                1 => "<a|>",
                _ => "<a,b|>",
            })
            .unwrap();
            let verdicts = monotonicity_check(&p, &[(1, 2), (2, 3)], 2, |n| {
                let w = generic_witness(&p, n, 3, 8)?;
                Ok((kappa_orbit(&p, n, &w, 1)?.value, w))
            })
            .unwrap();
            for v in verdicts {
                assert!(v.pass, "{v:?}");
                assert_eq!(v.kappa_n, free_kappa(d, v.n));
                assert_eq!(v.kappa_m, free_kappa(d, v.m));
            }
        }
    }
}
