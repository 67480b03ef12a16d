use proptest::prelude::*;

use fricke_core::chevalley::{e_alpha, gamma_r, is_symplectic, roots_of_cn};
use fricke_core::{q, qq, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=7).prop_map(|(n, d)| qq(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn one_parameter_law(rank in 2usize..=3, idx in 0usize..18, s in rational(), t in rational()) {
        let system = roots_of_cn(rank).unwrap();
        let alpha = &system.roots()[idx % system.roots().len()];
        let es = e_alpha(&system, alpha, &s).unwrap();
        let et = e_alpha(&system, alpha, &t).unwrap();
        prop_assert_eq!(&es * &et, e_alpha(&system, alpha, &(s + t)).unwrap());
        prop_assert!(is_symplectic(&es));
    }

    #[test]
    fn gadget_is_symplectic(r in rational()) {
        let g = gamma_r(&r);
        prop_assert!(is_symplectic(&g));
        prop_assert_eq!(g.trace(), q(2) - r);
    }
}
