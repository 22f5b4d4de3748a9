//! Property tests over randomly generated ring values and matrices.

use proptest::prelude::*;

use lucasdet_core::{
    build_abs_diff, build_hankel, build_q_matrix, gen_prefix, DenseMatrix, Integer, MultiPoly,
    RecurrenceParams, Ring, Var,
};

fn arb_poly() -> impl Strategy<Value = MultiPoly> {
    // up to four terms in the first three variables, small exponents
    prop::collection::vec((prop::collection::vec(0u32..4, 3), -9i64..=9), 0..4).prop_map(|terms| {
        let vars = [Var::A, Var::B, Var::Q];
        let mut p = MultiPoly::zero();
        for (exps, coeff) in terms {
            let mut term = MultiPoly::from_i64(coeff);
            for (v, e) in vars.iter().zip(exps) {
                term = term.mul(&MultiPoly::var(*v).pow(e));
            }
            p = p.add(&term);
        }
        p
    })
}

fn arb_int_matrix(max_n: usize) -> impl Strategy<Value = DenseMatrix<Integer>> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(-9i64..=9, n * n).prop_map(move |vals| {
            DenseMatrix::new(n, vals.into_iter().map(Integer::from).collect(), "prop").unwrap()
        })
    })
}

proptest! {
    #[test]
    fn poly_ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.sub(&a), MultiPoly::zero());
    }

    #[test]
    fn poly_exact_div_inverts_mul(a in arb_poly(), b in arb_poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(a.mul(&b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn poly_eval_is_homomorphic(
        a in arb_poly(),
        b in arb_poly(),
        va in -5i64..=5,
        vb in -5i64..=5,
        vq in -5i64..=5,
    ) {
        let assign = |v: Var| -> Option<Integer> {
            Some(Integer::from(match v {
                Var::A => va,
                Var::B => vb,
                Var::Q => vq,
                _ => 0,
            }))
        };
        let ea: Integer = a.eval(&assign).unwrap();
        let eb: Integer = b.eval(&assign).unwrap();
        prop_assert_eq!(a.mul(&b).eval(&assign).unwrap(), ea.mul(&eb));
        prop_assert_eq!(a.add(&b).eval(&assign).unwrap(), ea.add(&eb));
    }

    #[test]
    fn det_transpose_and_oracle(m in arb_int_matrix(5)) {
        let d = m.det().unwrap();
        prop_assert_eq!(&d, &m.transpose().det().unwrap());
        prop_assert_eq!(&d, &m.det_cofactor().unwrap());
    }

    #[test]
    fn symmetric_builders_are_symmetric(
        a in -5i64..=5, b in -5i64..=5, w0 in -5i64..=5, w1 in -5i64..=5,
        q in -5i64..=5, t in -5i64..=5, n in 1usize..=6,
    ) {
        let params = RecurrenceParams::new(
            Integer::from(a), Integer::from(b), Integer::from(w0), Integer::from(w1),
        );
        let prefix = gen_prefix(&params, 2 * n).unwrap();
        prop_assert!(build_abs_diff(&prefix, n).unwrap().is_symmetric());
        prop_assert!(build_hankel(&prefix, n, 0).unwrap().is_symmetric());
        prop_assert!(build_hankel(&prefix, n, 1).unwrap().is_symmetric());
        let qm = build_q_matrix(&Integer::from(q), &Integer::from(t), n).unwrap();
        prop_assert!(qm.is_symmetric());
    }

    #[test]
    fn prefix_satisfies_recurrence(
        a in -9i64..=9, b in -9i64..=9, w0 in -9i64..=9, w1 in -9i64..=9, len in 0usize..=24,
    ) {
        let params = RecurrenceParams::new(
            Integer::from(a), Integer::from(b), Integer::from(w0), Integer::from(w1),
        );
        prop_assert!(gen_prefix(&params, len).unwrap().satisfies_recurrence());
    }
}
