use indexlab_core::arith::integer::{factorize, valuation};
use indexlab_core::arith::{hnf, poly_discriminant, poly_resultant, IntMatrix, IntPoly};
use indexlab_core::ff::{factor_mod_p, is_squarefree_mod_p, ModPoly};
use indexlab_core::invariants::{i_theta, vp_ik, vp_index_k};
use indexlab_core::nf::{build_field, AlgebraicInt, NumberField};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn poly(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-bound..=bound, 1..=max_deg + 1).prop_map(|c| IntPoly::from_i64s(&c))
}

fn monic(deg: std::ops::RangeInclusive<usize>, bound: i64) -> impl Strategy<Value = IntPoly> {
    deg.prop_flat_map(move |n| prop::collection::vec(-bound..=bound, n)).prop_map(|mut c| {
        c.push(1);
        IntPoly::from_i64s(&c)
    })
}

fn vp(x: &BigInt, p: u64) -> u32 {
    valuation(x, p).unwrap().finite().unwrap()
}

fn field_of(f: &IntPoly) -> Option<NumberField> {
    build_field(f).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn repeated_factor_kills_discriminant(g in monic(0..=3, 5), h in monic(1..=2, 5)) {
        let f = &g * &(&h * &h);
        prop_assert!(poly_discriminant(&f).unwrap().is_zero());
        prop_assert!(!is_squarefree_mod_p(&f, 101).unwrap());
    }

    #[test]
    fn nonzero_discriminant_means_squarefree_mod_good_primes(f in monic(1..=6, 9)) {
        let d = poly_discriminant(&f).unwrap();
        if !d.is_zero() {
            for p in [101u64, 103, 107, 109, 113] {
                if !d.is_multiple_of(&BigInt::from(p)) {
                    prop_assert!(is_squarefree_mod_p(&f, p).unwrap());
                }
            }
        }
    }

    #[test]
    fn resultant_is_multiplicative(f in poly(3, 6), g in poly(3, 6), h in poly(3, 6)) {
        prop_assume!(f.degree().is_some_and(|d| d > 0));
        prop_assume!(g.degree().is_some() && h.degree().is_some());
        let lhs = poly_resultant(&f, &(&g * &h)).unwrap();
        let rhs = poly_resultant(&f, &g).unwrap() * poly_resultant(&f, &h).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn factorization_multiplies_back(f in monic(1..=7, 20), pi in 0usize..6) {
        let p = [2u64, 3, 5, 7, 11, 13][pi];
        let fac = factor_mod_p(&f, p).unwrap();
        let mut prod = ModPoly::one(p).scale(fac.unit);
        for (g, e) in &fac.factors {
            for _ in 0..*e {
                prod = prod.mul(g);
            }
        }
        prop_assert_eq!(prod, ModPoly::from_int_poly(&f, p));
    }

    #[test]
    fn valuation_is_additive(a in 1i64..1_000_000, b in 1i64..1_000_000, pi in 0usize..4) {
        let p = [2u64, 3, 5, 7][pi];
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        prop_assert_eq!(vp(&(&a * &b), p), vp(&a, p) + vp(&b, p));
    }

    #[test]
    fn integer_factorization_multiplies_back(n in 2u64..10_000_000_000) {
        let prod = factorize(&BigInt::from(n))
            .iter()
            .fold(BigInt::one(), |acc, (q, e)| acc * BigInt::from(q.pow(*e)));
        prop_assert_eq!(prod, BigInt::from(n));
    }

    #[test]
    fn hnf_is_unimodular_echelon(rows in prop::collection::vec(prop::collection::vec(-20i64..=20, 4), 3)) {
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let m = IntMatrix::from_i64_rows(&refs).unwrap();
        if let Ok((h, u)) = hnf(&m) {
            prop_assert_eq!(u.mul(&m), h.clone());
            prop_assert_eq!(u.det().abs(), BigInt::one());
            let mut last = None;
            for i in 0..h.rows() {
                let j = h.row(i).iter().position(|x| !x.is_zero()).unwrap();
                prop_assert!(last.map_or(true, |l| j > l));
                prop_assert!(h.row(i)[j].is_positive());
                for k in 0..i {
                    prop_assert!(!h.row(k)[j].is_negative() && h.row(k)[j] < h.row(i)[j]);
                }
                last = Some(j);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn ramification_matches_discriminant(f in monic(2..=5, 6)) {
        if let Some(k) = field_of(&f) {
            for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
                let ramified = k.split_prime(p).unwrap().is_ramified();
                prop_assert_eq!(ramified, k.disc().is_multiple_of(&BigInt::from(p)), "p = {}", p);
            }
        }
    }

    #[test]
    fn stickelberger(f in monic(2..=6, 8)) {
        if let Some(k) = field_of(&f) {
            let r = k.disc().mod_floor(&BigInt::from(4));
            prop_assert!(r.is_zero() || r.is_one());
        }
    }

    #[test]
    fn fixed_divisor_matches_direct_gcd(f in monic(2..=4, 5), c in prop::collection::vec(-6i64..=6, 4)) {
        if let Some(k) = field_of(&f) {
            let t = AlgebraicInt::from_i64s(&c[..k.degree()]);
            let cp = k.char_poly(&t);
            let direct = (-100i64..=100).fold(BigInt::zero(), |g, x| g.gcd(&cp.eval(&BigInt::from(x))));
            prop_assert_eq!(i_theta(&k, &t), direct);
        }
    }

    #[test]
    fn element_values_respect_field_invariants(f in monic(2..=4, 5), c in prop::collection::vec(-6i64..=6, 4)) {
        if let Some(k) = field_of(&f) {
            let t = AlgebraicInt::from_i64s(&c[..k.degree()]);
            prop_assume!(k.is_primitive(&t));
            let it = i_theta(&k, &t);
            let idx = k.index_of(&t).unwrap();
            for p in [2u64, 3] {
                if p as usize <= k.degree() {
                    prop_assert!(vp(&it, p) <= vp_ik(&k, p).unwrap());
                    prop_assert!(vp(&idx, p) >= vp_index_k(&k, p).unwrap());
                }
            }
        }
    }
}
