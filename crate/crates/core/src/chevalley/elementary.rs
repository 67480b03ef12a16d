use super::{ChevalleyError, Root, RootSystemC};
use crate::polyring::Polynomial;
use crate::{q, Matrix, PolyMatrix, QMatrix, QPoly, Rational, Ring};

/// Block-diagonal `T` with `n` blocks `[[0, 1], [−1, 0]]`.
pub fn symplectic_form<R: Ring>(n: usize) -> Matrix<R> {
    let mut t = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        t[(2 * i, 2 * i + 1)] = R::one();
        t[(2 * i + 1, 2 * i)] = -R::one();
    }
    t
}

/// `M·T·Mᵀ = T`.
pub fn is_symplectic<R: Ring>(m: &Matrix<R>) -> bool {
    if !m.is_square() || !m.rows().is_multiple_of(2) {
        return false;
    }
    let t = symplectic_form::<R>(m.rows() / 2);
    &(m * &t) * &m.transpose() == t
}

fn weight_index(i: usize, sign: i64) -> usize {
    if sign > 0 {
        2 * i
    } else {
        2 * i + 1
    }
}

fn form_sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The nonzero entries `(row, col, ±1)` of the Chevalley generator `X_α`.
/// A long root has one entry `E_pq`; a short root pairs `E_pq` with
/// `±E_{q* p*}` (where `k*` is the partner of `k` under `T`) so that
/// `X T + T Xᵀ = 0`.
pub fn root_generator(
    system: &RootSystemC,
    alpha: &Root,
) -> Result<Vec<(usize, usize, i64)>, ChevalleyError> {
    if !system.contains(alpha) {
        return Err(ChevalleyError::NotARoot(alpha.clone(), system.rank()));
    }
    let support: Vec<(usize, i64)> = alpha
        .coords()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| (i, c))
        .collect();
    Ok(match support.as_slice() {
        [(i, c)] => vec![(
            weight_index(*i, c.signum()),
            weight_index(*i, -c.signum()),
            1,
        )],
        [(i, ci), (j, cj)] => {
            let p = weight_index(*i, *ci);
            let q = weight_index(*j, -cj);
            let coeff = form_sign(q) * form_sign(p ^ 1);
            vec![(p, q, 1), (q ^ 1, p ^ 1, coeff)]
        }
        _ => unreachable!("roots of C_n have one or two nonzero coordinates"),
    })
}

/// `e_α(t) = I + t·X_α`.
pub fn e_alpha<R: Ring>(
    system: &RootSystemC,
    alpha: &Root,
    t: &R,
) -> Result<Matrix<R>, ChevalleyError> {
    let mut m = Matrix::identity(2 * system.rank());
    for (p, q, c) in root_generator(system, alpha)? {
        m[(p, q)] = if c > 0 { t.clone() } else { -t.clone() };
    }
    Ok(m)
}

/// The ordered product `∏ e_{α_i}(f_i)` over `ℚ[vars]`.
pub fn word_in_elementaries(
    system: &RootSystemC,
    factors: &[(Root, QPoly)],
) -> Result<PolyMatrix, ChevalleyError> {
    let mut m = PolyMatrix::identity(2 * system.rank());
    for (alpha, f) in factors {
        m = &m * &e_alpha(system, alpha, f)?;
    }
    Ok(m)
}

/// Evaluates every entry at `point`.
pub fn specialize(m: &PolyMatrix, point: &[Rational]) -> QMatrix {
    m.map(|f| f.eval(point))
}

/// `γ_r`: the `2 × 2` block `[[−r, 1], [−1, 0]]` in the first plane,
/// identity elsewhere.
pub fn gamma_r(r: &Rational) -> QMatrix {
    let mut m = QMatrix::identity(4);
    m[(0, 0)] = -r.clone();
    m[(0, 1)] = q(1);
    m[(1, 0)] = q(-1);
    m[(1, 1)] = q(0);
    m
}

/// `γ_r = e_{2e1}(1) · e_{−2e1}(−1) · e_{2e1}(1) · e_{−2e1}(−r)`, with `r` the
/// polynomial argument.
pub fn gamma_r_decomposition(r: QPoly) -> Vec<(Root, QPoly)> {
    let up = Root(vec![2, 0]);
    let down = Root(vec![-2, 0]);
    vec![
        (up.clone(), Polynomial::constant(q(1))),
        (down.clone(), Polynomial::constant(q(-1))),
        (up, Polynomial::constant(q(1))),
        (down, -r),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::roots_of_cn;
    use crate::qq;

    fn var(i: usize) -> QPoly {
        Polynomial::var(i)
    }

    #[test]
    fn form_shape() {
        let t: QMatrix = symplectic_form(2);
        assert_eq!(t.transpose(), -&t);
        assert_eq!(&t * &t, -&QMatrix::identity(4));
    }

    #[test]
    fn root_elements_are_symplectic_and_additive() {
        for n in 2..=3 {
            let s = roots_of_cn(n).unwrap();
            for alpha in s.roots() {
                let m = e_alpha(&s, alpha, &var(0)).unwrap();
                assert!(is_symplectic(&m), "{alpha}");
                assert!(e_alpha(&s, alpha, &QPoly::default()).unwrap().is_identity());
                let sum = e_alpha(&s, alpha, &(var(0) + var(1))).unwrap();
                assert_eq!(&m * &e_alpha(&s, alpha, &var(1)).unwrap(), sum);
                let entries = root_generator(&s, alpha).unwrap().len();
                assert_eq!(entries, if alpha.is_long() { 1 } else { 2 });
            }
        }
        let s = roots_of_cn(2).unwrap();
        assert!(e_alpha(&s, &Root(vec![1, 0]), &q(1)).is_err());
    }

    #[test]
    fn gamma_matrices() {
        let g0 = gamma_r(&q(0));
        assert_eq!(
            g0.block(0, 0, 2, 2),
            QMatrix::from_rows(vec![vec![q(0), q(1)], vec![q(-1), q(0)]])
        );
        assert!(g0.block(2, 2, 2, 2).is_identity());
        for r in [q(3), qq(-7, 3), qq(1, 2)] {
            let g = gamma_r(&r);
            assert!(is_symplectic(&g));
            assert_eq!(g.trace(), q(2) - r);
        }
    }

    #[test]
    fn gamma_as_product_of_root_elements() {
        let s = roots_of_cn(2).unwrap();
        let m = word_in_elementaries(&s, &gamma_r_decomposition(var(0))).unwrap();
        for r in [q(0), q(5), qq(-7, 3)] {
            assert_eq!(specialize(&m, std::slice::from_ref(&r)), gamma_r(&r));
        }
        assert!(word_in_elementaries(&s, &[]).unwrap().is_identity());
    }
}
