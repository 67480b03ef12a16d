use proptest::prelude::*;

use fricke_core::repvar::{
    induce, induced_block_matrix, MatrixRep, Representation, SchreierImages,
};
use fricke_core::words::{coset_table, parse_presentation, Permutation, Word};
use fricke_core::{q, QMatrix, RationalRep};

fn word(gens: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..gens, prop_oneof![Just(1i64), Just(-1i64)]), 0..=max_len).prop_map(
        |letters| {
            let mut w = Word::identity();
            for (g, s) in letters {
                w.push(g, s);
            }
            w
        },
    )
}

fn invertible(n: usize) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec(-3i64..=3, n * n)
        .prop_map(move |v| QMatrix::from_vec(n, n, v.into_iter().map(q).collect()))
        .prop_filter("invertible", |m| m.inverse().is_some())
}

fn rep2(gens: usize) -> impl Strategy<Value = RationalRep> {
    prop::collection::vec(invertible(2), gens).prop_map(move |ms| {
        let names = (0..gens).map(|i| format!("g{i}")).collect();
        Representation::new(names, 2, ms).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn evaluation_is_a_homomorphism(rho in rep2(2), x in word(2, 5), y in word(2, 5)) {
        prop_assert_eq!(rho.evaluate(&(&x * &y)), &rho.evaluate(&x) * &rho.evaluate(&y));
        prop_assert!(rho.evaluate(&(&x * &x.inverse())).is_identity());
    }

    #[test]
    fn traces_are_conjugation_invariant(rho in rep2(2), g in invertible(2), w in word(2, 6)) {
        let conj = rho.conjugate(&g).unwrap();
        prop_assert_eq!(conj.trace(&w), rho.trace(&w));
    }

    #[test]
    fn direct_sum_traces_add(a in rep2(2), b in rep2(2), w in word(2, 6)) {
        let sum = a.direct_sum(&b).unwrap();
        prop_assert_eq!(sum.trace(&w), a.trace(&w) + b.trace(&w));
        let padded = a.pad_trivial(3);
        prop_assert_eq!(padded.trace(&w), a.trace(&w) + q(3));
    }

    #[test]
    fn induced_rep_is_a_homomorphism(
        images in prop::collection::vec(invertible(1), 2),
        x in word(2, 6),
        y in word(2, 6),
    ) {
        // index-2 subgroup of F_2: a swaps the cosets, b fixes them
        let p = parse_presentation("<a,b|>").unwrap();
        let t = coset_table(
            &p,
            &[Permutation::from_cycles(2, "(0 1)").unwrap(), Permutation::identity(2)],
        ).unwrap();
        let k = t.schreier_generators().len();
        let images: Vec<QMatrix> = images.into_iter().cycle().take(k).collect();
        let oracle = SchreierImages::new(&p, &t, 1, images).unwrap();
        let ind = induce(&p, &t, &oracle).unwrap();
        let xy = &x * &y;
        prop_assert_eq!(ind.evaluate(&xy), &ind.evaluate(&x) * &ind.evaluate(&y));
        prop_assert_eq!(ind.evaluate(&xy), induced_block_matrix(&t, &oracle, &xy).unwrap());
    }
}
