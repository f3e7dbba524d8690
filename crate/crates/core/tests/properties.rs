//! Randomized invariants for the polynomial ring: commutative-ring laws,
//! the S_n action on X-variables, substitution as a ring homomorphism, and
//! canonical-string round-trips.

use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;

use hecke_trace::polyring::{rat, Expo, LaurentPoly, VarCtx};
use hecke_trace::symcomb::Permutation;

const N: usize = 3;

fn ctx() -> Arc<VarCtx> {
    VarCtx::new(N, vec!["z".to_string()])
}

fn arb_expo() -> impl Strategy<Value = Expo> {
    (
        -4i64..=4,
        prop::collection::vec(-2i64..=2, N),
        -2i64..=2,
    )
        .prop_map(|(q2, x, z)| Expo {
            q: rat(q2, 2),
            x,
            z: vec![z],
        })
}

fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((arb_expo(), -5i64..=5), 0..4).prop_map(|terms| {
        let c = ctx();
        let mut p = LaurentPoly::zero(&c);
        for (e, k) in terms {
            p = p
                .add(&LaurentPoly::monomial(&c, BigInt::from(k), e))
                .unwrap();
        }
        p
    })
}

fn arb_perm() -> impl Strategy<Value = Permutation> {
    Just([1usize, 2, 3]).prop_shuffle().prop_map(|img| {
        Permutation::parse_one_line(
            &img.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(","),
        )
        .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn addition_is_commutative_and_associative(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(
            a.add(&b).unwrap().add(&c).unwrap(),
            a.add(&b.add(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn multiplication_is_commutative_and_associative(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(
            a.mul(&b).unwrap().mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn multiplication_distributes_over_addition(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn units_and_negation(a in arb_poly()) {
        let c = ctx();
        prop_assert_eq!(a.add(&LaurentPoly::zero(&c)).unwrap(), a.clone());
        prop_assert_eq!(a.mul(&LaurentPoly::one(&c)).unwrap(), a.clone());
        prop_assert!(a.add(&a.neg()).unwrap().is_zero());
    }

    #[test]
    fn permute_vars_is_a_ring_action(a in arb_poly(), b in arb_poly(), u in arb_perm(), v in arb_perm()) {
        // Group action: (uv)·a = u·(v·a).
        let uv = u.compose(&v);
        prop_assert_eq!(
            a.permute_vars(&uv).unwrap(),
            a.permute_vars(&v).unwrap().permute_vars(&u).unwrap()
        );
        // Ring homomorphism in each variable permutation.
        prop_assert_eq!(
            a.add(&b).unwrap().permute_vars(&u).unwrap(),
            a.permute_vars(&u).unwrap().add(&b.permute_vars(&u).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.mul(&b).unwrap().permute_vars(&u).unwrap(),
            a.permute_vars(&u).unwrap().mul(&b.permute_vars(&u).unwrap()).unwrap()
        );
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(
        a in arb_poly(),
        b in arb_poly(),
        pts in prop::collection::vec((-3i64..=3, prop::bool::ANY), N),
    ) {
        let c = ctx();
        // Monomial evaluation points q^{k/2} with sign ±1.
        let points: Vec<Option<LaurentPoly>> = pts
            .iter()
            .map(|&(k, negate)| {
                let m = LaurentPoly::q_pow(&c, rat(k, 2));
                Some(if negate { m.neg() } else { m })
            })
            .collect();
        prop_assert_eq!(
            a.add(&b).unwrap().substitute(&points).unwrap(),
            a.substitute(&points)
                .unwrap()
                .add(&b.substitute(&points).unwrap())
                .unwrap()
        );
        prop_assert_eq!(
            a.mul(&b).unwrap().substitute(&points).unwrap(),
            a.substitute(&points)
                .unwrap()
                .mul(&b.substitute(&points).unwrap())
                .unwrap()
        );
    }

    #[test]
    fn canonical_string_round_trips(a in arb_poly()) {
        let c = ctx();
        let parsed = LaurentPoly::parse(&c, &a.canonical_string()).unwrap();
        prop_assert_eq!(parsed, a);
    }
}
