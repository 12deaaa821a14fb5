//! Property tests for the Laurent-polynomial layer: ring laws, the
//! palindromic basis round trip, and the division identity.

use num_bigint::BigInt;
use proptest::prelude::*;

use bncalc::{CurveContext, LaurentPoly};

fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-8i64..=8, -50i64..=50), 0..8).prop_map(|terms| {
        LaurentPoly::from_terms(terms.into_iter().map(|(k, c)| (k, BigInt::from(c))))
    })
}

fn arb_palindromic() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((0i64..=7, -50i64..=50), 0..8).prop_map(|terms| {
        let mut p = LaurentPoly::zero();
        for (k, c) in terms {
            let c = BigInt::from(c);
            if k == 0 {
                p += &LaurentPoly::constant(c);
            } else {
                p += &LaurentPoly::from_terms([(k, c.clone()), (-k, c)]);
            }
        }
        p
    })
}

proptest! {
    #[test]
    fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn degrees_add_under_multiplication(a in arb_poly(), b in arb_poly()) {
        if !a.is_zero() && !b.is_zero() {
            let prod = &a * &b;
            prop_assert_eq!(prod.deg_plus().unwrap(), a.deg_plus().unwrap() + b.deg_plus().unwrap());
            prop_assert_eq!(prod.deg_minus().unwrap(), a.deg_minus().unwrap() + b.deg_minus().unwrap());
        }
    }

    #[test]
    fn c_basis_round_trip(p in arb_palindromic()) {
        let basis = p.to_c_basis().unwrap();
        prop_assert_eq!(LaurentPoly::from_c_basis(&basis), p);
    }

    #[test]
    fn division_reconstructs(p in arb_palindromic(), g in 2u32..=5) {
        let ctx = CurveContext::new(g, false).unwrap();
        let (q, r) = p.divide_by_h_constant(&ctx).unwrap();
        let back = &(&q * &LaurentPoly::h_constant(&ctx)) + &r;
        prop_assert_eq!(back, p);
        prop_assert!(r.deg_plus().unwrap_or(0) < g as i64);
        prop_assert!(q.is_palindromic());
        prop_assert!(r.is_palindromic());
    }

    #[test]
    fn reduction_kills_multiples_of_the_generator(p in arb_palindromic(), g in 2u32..=4) {
        let ctx = CurveContext::new(g, false).unwrap();
        let product = &p * &LaurentPoly::h_constant(&ctx);
        prop_assert!(product.reduce_mod_ideal(&ctx).is_zero());
    }

    /// The ε-substitution route and the c-basis division route must agree
    /// about the quotient image of a palindromic polynomial: the quotient
    /// part dies, so the remainder carries the whole image.
    #[test]
    fn reduction_agrees_with_division(p in arb_palindromic(), g in 2u32..=4) {
        let ctx = CurveContext::new(g, false).unwrap();
        let (_, r) = p.divide_by_h_constant(&ctx).unwrap();
        prop_assert_eq!(p.reduce_mod_ideal(&ctx), r.reduce_mod_ideal(&ctx));
        prop_assert_eq!(p.reduce_mod_ideal(&ctx).is_zero(), r.is_zero());
    }
}
