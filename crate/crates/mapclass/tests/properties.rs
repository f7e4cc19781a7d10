//! Property tests: ring axioms, specialization homomorphism, canonical
//! serialization, word invariants, and the Kronecker mixed-product law.

use proptest::collection::vec;
use proptest::prelude::*;

use mapclass::laurent::{LaurentPoly, LaurentRing};
use mapclass::matrix::Matrix;
use mapclass::ring::{ModRing, Ring};
use mapclass::words::{Context, Word};

fn poly_strategy(max_terms: usize) -> impl Strategy<Value = LaurentPoly> {
    vec((-8i64..=8, -8i64..=8, -20i64..=20), 0..max_terms).prop_map(|terms| {
        let mut p = LaurentPoly::zero();
        for (eq, et, c) in terms {
            p = &p + &LaurentPoly::monomial(eq, et, c);
        }
        p
    })
}

fn small_matrix() -> impl Strategy<Value = Matrix<LaurentRing>> {
    vec(poly_strategy(3), 4).prop_map(|entries| {
        Matrix::from_fn(LaurentRing, 2, |r, c| entries[2 * r + c].clone())
    })
}

fn word_strategy(ctx: Context, max_len: usize) -> impl Strategy<Value = Word> {
    let gens = ctx.generator_count() as i64;
    vec((1..=gens, proptest::bool::ANY), 0..max_len).prop_map(move |ls| {
        let letters: Vec<i64> = ls.iter().map(|&(g, inv)| if inv { -g } else { g }).collect();
        Word::from_signed(ctx, &letters).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly_strategy(40), b in poly_strategy(40), c in poly_strategy(40)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, LaurentPoly::zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
    }

    #[test]
    fn eval_mod_is_a_homomorphism(a in poly_strategy(25), b in poly_strategy(25)) {
        let ring = ModRing::new(998244353);
        let (q0, t0) = (8_191, 131_071);
        let ea = a.eval_mod(q0, t0, &ring).unwrap();
        let eb = b.eval_mod(q0, t0, &ring).unwrap();
        prop_assert_eq!((&a + &b).eval_mod(q0, t0, &ring).unwrap(), ring.add(&ea, &eb));
        prop_assert_eq!((&a * &b).eval_mod(q0, t0, &ring).unwrap(), ring.mul(&ea, &eb));
    }

    #[test]
    fn serialization_round_trip(a in poly_strategy(40)) {
        let js = serde_json::to_string(&a).unwrap();
        let back: LaurentPoly = serde_json::from_str(&js).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), js);
    }

    #[test]
    fn exact_division_of_products(a in poly_strategy(10), b in poly_strategy(10)) {
        prop_assume!(!b.is_zero());
        let prod = &a * &b;
        let q = prod.exact_div(&b);
        prop_assert_eq!(q, Some(a));
    }

    #[test]
    fn matrix_product_associativity(a in small_matrix(), b in small_matrix(), c in small_matrix()) {
        let lhs = a.mul(&b).unwrap().mul(&c).unwrap();
        let rhs = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn kron_mixed_product(a in small_matrix(), b in small_matrix(),
                          c in small_matrix(), d in small_matrix()) {
        let lhs = a.kron(&b).unwrap().mul(&c.kron(&d).unwrap()).unwrap();
        let rhs = a.mul(&c).unwrap().kron(&b.mul(&d).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn reduction_preserves_class_data(w in word_strategy(Context::Sphere { punctures: 5 }, 24)) {
        let r = w.reduce();
        prop_assert!(r.is_reduced());
        prop_assert_eq!(r.reduce(), r.clone());
        prop_assert_eq!(r.exponent_sum(), w.exponent_sum());
        prop_assert_eq!(r.perm().unwrap(), w.perm().unwrap());
    }

    #[test]
    fn inverse_is_an_involution(w in word_strategy(Context::Braid { strings: 4 }, 24)) {
        prop_assert_eq!(w.inverse().inverse(), w.clone());
        let cancel = w.concat(&w.inverse()).unwrap();
        prop_assert!(cancel.reduce().is_empty());
        prop_assert!(cancel.perm().unwrap().is_identity());
    }

    #[test]
    fn perm_homomorphism(u in word_strategy(Context::Sphere { punctures: 6 }, 16),
                         v in word_strategy(Context::Sphere { punctures: 6 }, 16)) {
        let uv = u.concat(&v).unwrap();
        prop_assert_eq!(uv.perm().unwrap(), u.perm().unwrap().compose(&v.perm().unwrap()));
    }
}

proptest! {
    // heavier: exact inversion round-trips over the residue field
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn mod_matrix_inversion(entries in vec(0u64..7, 9)) {
        let ring = ModRing::new(7);
        let m = Matrix::from_fn(ring, 3, |r, c| entries[3 * r + c]);
        match m.inverse() {
            Ok(inv) => {
                prop_assert!(m.mul(&inv).unwrap().is_identity());
                prop_assert!(inv.mul(&m).unwrap().is_identity());
            }
            Err(_) => {
                // singular over a field means zero determinant
                prop_assert_eq!(m.det(), 0);
            }
        }
    }
}
