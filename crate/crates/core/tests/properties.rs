//! Randomized property suites: ring axioms for the exact scalars, algebra
//! and serialization invariants for matrices, soundness of the group engine,
//! and the entanglement-measure invariances on random three-qubit states.

use num_bigint::BigInt;
use proptest::prelude::*;

use qweyl::catalogue;
use qweyl::dyadic::DyadicComplex;
use qweyl::group::{fingerprint_set, MatrixGroup};
use qweyl::io::{matrix_from_json, matrix_to_json};
use qweyl::tangle::{profile, three_tangle, PureState3, Qubit};

const TOLERANCE: f64 = 1e-8;

fn dyadic() -> impl Strategy<Value = DyadicComplex> {
    (-8i64..=8, -8i64..=8, -8i64..=8, -8i64..=8, 0u32..=3).prop_map(|(a, b, c, d, k)| {
        DyadicComplex::new(
            BigInt::from(a),
            BigInt::from(b),
            BigInt::from(c),
            BigInt::from(d),
            k,
        )
    })
}

mod scalar_ring {
    use super::*;

    proptest! {
        #[test]
        fn addition_commutes_and_associates(x in dyadic(), y in dyadic(), z in dyadic()) {
            prop_assert_eq!(x.add(&y), y.add(&x));
            prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
        }

        #[test]
        fn multiplication_commutes_and_associates(x in dyadic(), y in dyadic(), z in dyadic()) {
            prop_assert_eq!(x.mul(&y), y.mul(&x));
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        }

        #[test]
        fn multiplication_distributes_over_addition(x in dyadic(), y in dyadic(), z in dyadic()) {
            prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        }

        #[test]
        fn conjugation_is_multiplicative_and_involutive(x in dyadic(), y in dyadic()) {
            prop_assert_eq!(x.mul(&y).conj(), x.conj().mul(&y.conj()));
            prop_assert_eq!(x.conj().conj(), x);
        }

        #[test]
        fn the_squared_norm_is_a_nonnegative_real(x in dyadic()) {
            let n = x.norm_sq();
            prop_assert_eq!(n.clone(), x.mul(&x.conj()));
            prop_assert!(n.is_real());
            prop_assert!(n.real_sign() >= 0);
            prop_assert_eq!(n.is_zero(), x.is_zero());
        }

        #[test]
        fn canonical_tokens_ignore_the_incoming_representation(
            a in -8i64..=8, b in -8i64..=8, c in -8i64..=8, d in -8i64..=8, k in 0u32..=2
        ) {
            let reduced = DyadicComplex::new(
                BigInt::from(a), BigInt::from(b), BigInt::from(c), BigInt::from(d), k,
            );
            let inflated = DyadicComplex::new(
                BigInt::from(4 * a), BigInt::from(4 * b), BigInt::from(4 * c), BigInt::from(4 * d), k + 2,
            );
            prop_assert_eq!(reduced.clone(), inflated.clone());
            prop_assert_eq!(reduced.canonical_token(), inflated.canonical_token());
        }
    }
}

mod matrix_algebra {
    use super::*;

    const DIM4: [&str; 9] = ["gamma_0", "gamma_1", "gamma_2", "gamma_3", "gamma_5", "R", "S", "CZ", "CNOT"];

    fn dim4_matrix() -> impl Strategy<Value = &'static str> {
        proptest::sample::select(&DIM4[..])
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn products_associate_exactly(a in dim4_matrix(), b in dim4_matrix(), c in dim4_matrix()) {
            let a = catalogue::build(a).unwrap();
            let b = catalogue::build(b).unwrap();
            let c = catalogue::build(c).unwrap();
            let left = a.mul(&b).unwrap().mul(&c).unwrap();
            let right = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(left.entries(), right.entries());
        }

        #[test]
        fn unitarity_is_closed_under_products_and_adjoints(a in dim4_matrix(), b in dim4_matrix()) {
            let a = catalogue::build(a).unwrap();
            let b = catalogue::build(b).unwrap();
            let p = a.mul(&b).unwrap();
            prop_assert!(p.is_unitary());
            prop_assert!(p.dagger().is_unitary());
            let back = p.mul(&p.dagger()).unwrap();
            let identity = qweyl::matrix::ExactMatrix::identity(4);
            prop_assert_eq!(back.entries(), identity.entries());
        }

        #[test]
        fn json_round_trips_preserve_matrices(a in dim4_matrix(), b in dim4_matrix()) {
            let m = catalogue::build(a).unwrap().mul(&catalogue::build(b).unwrap()).unwrap();
            let back = matrix_from_json(&matrix_to_json(&m)).unwrap();
            prop_assert_eq!(back.entries(), m.entries());
            prop_assert_eq!(back.content_hash(), m.content_hash());
        }
    }
}

mod group_engine {
    use super::*;

    const P2_GENS: [&str; 5] = ["g1", "g2", "c1", "c2", "u"];

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        /// Lagrange: any subset of a generating set generates a subgroup
        /// whose order divides the full group's order.
        #[test]
        fn subset_orders_divide_the_full_order(mask in 1u8..32) {
            let names: Vec<&str> = P2_GENS
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, n)| *n)
                .collect();
            let sub = MatrixGroup::from_catalogue(&names).unwrap().order().unwrap();
            let full = MatrixGroup::from_catalogue(&P2_GENS).unwrap().order().unwrap();
            prop_assert_eq!(full % sub, num_bigint::BigUint::from(0u8));
        }

        /// Every product of generators sifts back into the group.
        #[test]
        fn generator_words_are_members(word in proptest::collection::vec(0usize..3, 1..6)) {
            let names = ["W", "Z", "c"];
            let group = MatrixGroup::from_catalogue(&names).unwrap();
            let gens: Vec<_> = names.iter().map(|n| catalogue::build(n).unwrap()).collect();
            let mut m = gens[word[0]].clone();
            for &i in &word[1..] {
                m = m.mul(&gens[i]).unwrap();
            }
            prop_assert!(group.contains(&m).unwrap());
        }

        /// Fingerprints are invariant under conjugation of the generating
        /// set by any unitary word.
        #[test]
        fn fingerprints_survive_conjugation(word in proptest::collection::vec(0usize..3, 0..5)) {
            let inner = ["i3", "j3"];
            let outer = ["i3", "j3", "K3"];
            let outer_gens: Vec<_> = outer.iter().map(|n| catalogue::build(n).unwrap()).collect();
            let mut w = qweyl::matrix::ExactMatrix::identity(8);
            for &i in &word {
                w = w.mul(&outer_gens[i]).unwrap();
            }
            let conjugated: Vec<_> = inner
                .iter()
                .map(|n| {
                    let g = catalogue::build(n).unwrap();
                    w.mul(&g).unwrap().mul(&w.dagger()).unwrap()
                })
                .collect();
            let base = MatrixGroup::from_catalogue(&inner).unwrap().enumerate(64).unwrap();
            let moved = MatrixGroup::new(8, conjugated).unwrap().enumerate(64).unwrap();
            prop_assert_eq!(
                fingerprint_set(&base).unwrap(),
                fingerprint_set(&moved).unwrap()
            );
        }
    }
}

mod tangle_measures {
    use super::*;

    fn random_state() -> impl Strategy<Value = PureState3> {
        proptest::collection::vec((-3i64..=3, -3i64..=3), 8)
            .prop_filter_map("state must be nonzero", |parts| {
                let amps: [DyadicComplex; 8] = parts
                    .iter()
                    .map(|&(re, im)| DyadicComplex::gaussian(re, im, 0))
                    .collect::<Vec<_>>()
                    .try_into()
                    .expect("eight amplitudes");
                PureState3::new(amps).ok()
            })
    }

    fn permuted(state: &PureState3, perm: [usize; 3]) -> PureState3 {
        let amps = state.amplitudes();
        let mut out = vec![DyadicComplex::zero(); 8];
        for (i, amp) in amps.iter().enumerate() {
            let bit = |q: usize| (i >> (2 - q)) & 1;
            let j = (bit(perm[0]) << 2) | (bit(perm[1]) << 1) | bit(perm[2]);
            out[j] = amp.clone();
        }
        let arr: [DyadicComplex; 8] = out.try_into().expect("eight amplitudes");
        PureState3::new(arr).expect("permutation preserves the norm")
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(96))]

        #[test]
        fn tangles_are_bounded_and_monogamous(state in random_state()) {
            let p = profile(&state).unwrap();
            let [ab, ac, bc] = p.pairwise();
            let [a, b, c] = p.one_tangles();
            for t in [p.tau3, ab, ac, bc, a, b, c] {
                prop_assert!((-TOLERANCE..=1.0 + TOLERANCE).contains(&t));
            }
            prop_assert!(ab + ac <= a + TOLERANCE);
            prop_assert!(ab + bc <= b + TOLERANCE);
            prop_assert!(ac + bc <= c + TOLERANCE);
        }

        #[test]
        fn the_residual_identity_holds_at_every_pivot(state in random_state()) {
            let p = profile(&state).unwrap();
            for pivot in Qubit::ALL {
                prop_assert!((p.residual_from(pivot) - p.tau3).abs() <= TOLERANCE);
            }
        }

        #[test]
        fn the_three_tangle_ignores_qubit_order(state in random_state()) {
            let reference = three_tangle(&state).tau3;
            for perm in [[0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
                let moved = three_tangle(&permuted(&state, perm)).tau3;
                prop_assert!((moved - reference).abs() <= TOLERANCE);
            }
        }

        #[test]
        fn the_three_tangle_ignores_scale_and_global_phase(state in random_state()) {
            let reference = three_tangle(&state).tau3;
            let factors = [
                DyadicComplex::from_int(3),
                DyadicComplex::real_parts(3, 0, 1),
                DyadicComplex::i(),
                DyadicComplex::gaussian(1, 1, 0),
            ];
            for factor in factors {
                let scaled = state.scaled(&factor).unwrap();
                prop_assert!((three_tangle(&scaled).tau3 - reference).abs() <= TOLERANCE);
            }
        }
    }
}
