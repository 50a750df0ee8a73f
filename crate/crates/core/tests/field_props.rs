//! Property tests for the field layer, on a 16-bit prime and on the
//! 521-bit Mersenne prime.

mod common;

use ecfast::fp::{FieldElement, OpCounter, PrimeModulus};
use num_bigint::BigUint;
use proptest::prelude::*;

use std::sync::LazyLock;

static CTX_SMALL: LazyLock<ecfast::fp::FieldCtx> =
    LazyLock::new(|| PrimeModulus::new(BigUint::from(65521u32)).unwrap());

static CTX_P521: LazyLock<ecfast::fp::FieldCtx> = LazyLock::new(|| {
    PrimeModulus::new(BigUint::parse_bytes(common::P521_P.as_bytes(), 16).unwrap()).unwrap()
});

fn ctx_small() -> ecfast::fp::FieldCtx {
    CTX_SMALL.clone()
}

fn ctx_p521() -> ecfast::fp::FieldCtx {
    CTX_P521.clone()
}

proptest! {
    #[test]
    fn add_and_mul_commute_mod_65521(a in 0u64..65521, b in 0u64..65521) {
        let ctx = ctx_small();
        let mut c = OpCounter::new();
        let x = FieldElement::from_u64(a, &ctx);
        let y = FieldElement::from_u64(b, &ctx);
        prop_assert_eq!(x.add(&y, &mut c), y.add(&x, &mut c));
        prop_assert_eq!(x.mul(&y, &mut c), y.mul(&x, &mut c));
        prop_assert_eq!(x.sqr(&mut c), x.mul(&x, &mut c));
    }

    #[test]
    fn inverse_cancels_mod_65521(a in 1u64..65521) {
        let ctx = ctx_small();
        let mut c = OpCounter::new();
        let x = FieldElement::from_u64(a, &ctx);
        let inv = x.inv(&mut c).unwrap();
        prop_assert_eq!(x.mul(&inv, &mut c), FieldElement::one(&ctx));
    }

    #[test]
    fn sub_is_add_of_negation(a in 0u64..65521, b in 0u64..65521) {
        let ctx = ctx_small();
        let mut c = OpCounter::new();
        let x = FieldElement::from_u64(a, &ctx);
        let y = FieldElement::from_u64(b, &ctx);
        prop_assert_eq!(x.sub(&y, &mut c), x.add(&y.neg(&mut c), &mut c));
    }

    #[test]
    fn inverse_cancels_mod_p521(seed in any::<u64>()) {
        let ctx = ctx_p521();
        let mut rng = ecfast::rng::XorShift64Star::new(seed);
        let mut c = OpCounter::new();
        let v = rng.next_biguint_below(ctx.prime());
        prop_assume!(!v.is_zero());
        let x = FieldElement::new(v, &ctx);
        let inv = x.inv(&mut c).unwrap();
        prop_assert_eq!(x.mul(&inv, &mut c), FieldElement::one(&ctx));
    }

    #[test]
    fn hex_round_trip_mod_p521(seed in any::<u64>()) {
        let ctx = ctx_p521();
        let mut rng = ecfast::rng::XorShift64Star::new(seed);
        let x = FieldElement::new(rng.next_biguint_below(ctx.prime()), &ctx);
        prop_assert_eq!(FieldElement::from_hex(&x.to_hex(), &ctx).unwrap(), x);
    }

    #[test]
    fn sqrt_mod_agrees_with_squaring(a in 0u64..65521) {
        let ctx = ctx_small();
        let mut c = OpCounter::new();
        let x = FieldElement::from_u64(a, &ctx);
        let square = x.sqr(&mut c);
        let root = ecfast::fp::sqrt_mod(&square).expect("squares have roots");
        prop_assert_eq!(root.sqr(&mut c), square);
    }
}

use num_traits::Zero;

#[test]
fn sqrt_mod_rejects_non_residues() {
    // 65521 = 1 mod 4, exercising the Tonelli-Shanks path; count residues
    let ctx = PrimeModulus::new(BigUint::from(229u32)).unwrap();
    let mut roots = 0;
    for a in 1u64..229 {
        if ecfast::fp::sqrt_mod(&FieldElement::from_u64(a, &ctx)).is_some() {
            roots += 1;
        }
    }
    assert_eq!(roots, 114); // (p-1)/2 residues
}
