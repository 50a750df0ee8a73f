//! Oracle equivalence for the composite operations: exhaustive over every
//! finite point of the small fixtures, sampled on P-521. Each successful
//! composite evaluation must equal its primitive composition and spend
//! exactly one inversion; degenerate inputs must error, never return a
//! wrong point.

mod common;

use common::*;
use ecfast::composite::{
    double2, double3, double4, doublek_plus_2q, doublek_plus_mq, doublek_plus_point, mul_small,
    primitive_double_n, six_q_alt, ten_q_alt, triple, CompositeError, CompositeResult,
};
use ecfast::curve::{
    is_on_curve, point_add, point_double, scalar_mul_reference, AffinePoint, CurveParams,
};
use ecfast::fp::OpCounter;
use ecfast::rng::XorShift64Star;
use num_bigint::BigUint;

type CompositeFn = fn(&AffinePoint, &CurveParams, &mut OpCounter) -> Result<CompositeResult, CompositeError>;

/// The single-point composite forms with their primitive compositions.
fn single_point_ops() -> Vec<(&'static str, CompositeFn, fn(&AffinePoint, &CurveParams, &mut OpCounter) -> AffinePoint)> {
    vec![
        ("double2", double2, |p, e, c| primitive_double_n(2, p, e, c)),
        ("double3", double3, |p, e, c| primitive_double_n(3, p, e, c)),
        ("double4", double4, |p, e, c| primitive_double_n(4, p, e, c)),
        ("triple", triple, |p, e, c| {
            point_add(&point_double(p, e, c), p, e, c)
        }),
        ("six_q_alt", six_q_alt, |p, e, c| {
            scalar_mul_reference(&BigUint::from(6u32), p, e, c)
        }),
        ("ten_q_alt", ten_q_alt, |p, e, c| {
            scalar_mul_reference(&BigUint::from(10u32), p, e, c)
        }),
    ]
}

fn all_points(e: &CurveParams) -> Vec<AffinePoint> {
    let digit = |f: &ecfast::fp::FieldElement| f.value().iter_u64_digits().next().unwrap_or(0);
    let p = e.ctx().prime().iter_u64_digits().next().unwrap();
    oracle_enumerate(digit(e.a()), digit(e.b()), p)
        .into_iter()
        .map(|(x, y)| point(e, x, y))
        .collect()
}

fn check_single_point_ops(e: &CurveParams, points: &[AffinePoint]) {
    let mut ctr = OpCounter::new();
    let mut oracle_ctr = OpCounter::new();
    for p in points {
        for (name, op, oracle) in single_point_ops() {
            let expected = oracle(p, e, &mut oracle_ctr);
            let before = ctr;
            match op(p, e, &mut ctr) {
                Ok(r) => {
                    assert_eq!(r.point, expected, "{name} on {}", e.name());
                    assert!(is_on_curve(&r.point, e));
                    assert_eq!(r.inversions_used, 1, "{name}: single inversion");
                    assert_eq!(ctr.delta_since(&before).inv, 1);
                    assert_eq!(r.ops.inv, 1);
                }
                // a raised chain is acceptable only where the composition
                // actually hits a degenerate configuration
                Err(CompositeError::DegenerateChain { .. }) => {
                    assert_eq!(ctr.delta_since(&before).inv, 0, "{name}: no inversion on error");
                }
            }
        }
    }
}

#[test]
fn single_point_forms_exhaustive_on_small_curves() {
    for e in [tiny17(), order61(), torsion643()] {
        let points = all_points(&e);
        check_single_point_ops(&e, &points);
    }
}

#[test]
fn two_point_forms_exhaustive_on_order61() {
    // all ordered pairs of the order-61 group
    let e = order61();
    let points = all_points(&e);
    let mut ctr = OpCounter::new();
    let mut oracle_ctr = OpCounter::new();
    for p in &points {
        for q in &points {
            // [2^n]Q + P
            for n in 1u32..=4 {
                let expected = point_add(
                    &primitive_double_n(n, q, &e, &mut oracle_ctr),
                    p,
                    &e,
                    &mut oracle_ctr,
                );
                match doublek_plus_point(n, q, p, &e, &mut ctr) {
                    Ok(r) => {
                        assert_eq!(r.point, expected, "2^{n}Q+P");
                        assert_eq!(r.inversions_used, 1);
                    }
                    Err(_) => {}
                }
            }
            // [2^n]P + [2]Q
            for n in 2u32..=4 {
                let expected = point_add(
                    &primitive_double_n(n, p, &e, &mut oracle_ctr),
                    &primitive_double_n(1, q, &e, &mut oracle_ctr),
                    &e,
                    &mut oracle_ctr,
                );
                match doublek_plus_2q(n, p, q, &e, &mut ctr) {
                    Ok(r) => {
                        assert_eq!(r.point, expected, "2^{n}P+2Q");
                        assert_eq!(r.inversions_used, 1);
                    }
                    Err(_) => {}
                }
            }
        }
    }
}

#[test]
fn general_mq_form_on_small_curves() {
    let e = torsion643();
    let points = all_points(&e);
    let mut rng = XorShift64Star::new(0x9199);
    let mut ctr = OpCounter::new();
    let mut oracle_ctr = OpCounter::new();
    for _ in 0..600 {
        let p = &points[(rng.next_u64() % points.len() as u64) as usize];
        let q = &points[(rng.next_u64() % points.len() as u64) as usize];
        let n = 1 + (rng.next_u64() % 4) as u32;
        let m = 2 + (rng.next_u64() % 15) as u32;
        let expected = point_add(
            &primitive_double_n(n, p, &e, &mut oracle_ctr),
            &scalar_mul_reference(&BigUint::from(m), q, &e, &mut oracle_ctr),
            &e,
            &mut oracle_ctr,
        );
        match doublek_plus_mq(n, m, p, q, &e, &mut ctr) {
            Ok(r) => {
                assert_eq!(r.point, expected, "2^{n}P+{m}Q");
                assert_eq!(r.inversions_used, 1);
            }
            Err(_) => {}
        }
    }
}

#[test]
fn mul_small_exhaustive_on_small_curves() {
    for e in [tiny17(), order61(), torsion643()] {
        let points = all_points(&e);
        let mut ctr = OpCounter::new();
        let mut oracle_ctr = OpCounter::new();
        for p in &points {
            for c in 1u32..=31 {
                let expected = scalar_mul_reference(&BigUint::from(c), p, &e, &mut oracle_ctr);
                let r = mul_small(c, p, &e, &mut ctr);
                assert_eq!(r.point, expected, "mul_small({c}) on {}", e.name());
                if !r.fallback {
                    assert_eq!(
                        r.inversions_used,
                        u64::from(c > 1),
                        "mul_small({c}) inversions"
                    );
                }
            }
        }
    }
}

#[test]
fn composite_ops_on_sampled_p521_points() {
    let (e, _) = p521();
    let mut rng = XorShift64Star::new(0x521);
    let mut ctr = OpCounter::new();
    let mut oracle_ctr = OpCounter::new();
    for _ in 0..25 {
        let p = ecfast::curve::random_point(&e, &mut rng);
        for (name, op, oracle) in single_point_ops() {
            let expected = oracle(&p, &e, &mut oracle_ctr);
            let r = op(&p, &e, &mut ctr).unwrap_or_else(|_| panic!("degenerate {name} on p521"));
            assert_eq!(r.point, expected, "{name} on p521");
            assert_eq!(r.inversions_used, 1);
        }
        let q = ecfast::curve::random_point(&e, &mut rng);
        let expected = point_add(
            &primitive_double_n(3, &p, &e, &mut oracle_ctr),
            &scalar_mul_reference(&BigUint::from(3u32), &q, &e, &mut oracle_ctr),
            &e,
            &mut oracle_ctr,
        );
        let r = doublek_plus_mq(3, 3, &p, &q, &e, &mut ctr).unwrap();
        assert_eq!(r.point, expected);
        assert_eq!(r.inversions_used, 1);
    }
}

#[test]
fn eleven_q_worked_case() {
    // [2^3]P + [3]Q with P = Q collapses to [11]Q
    for e in [tiny17(), order61()] {
        let g = generator(&e);
        let mut ctr = OpCounter::new();
        let expected = scalar_mul_reference(&BigUint::from(11u32), &g, &e, &mut OpCounter::new());
        let r = doublek_plus_mq(3, 3, &g, &g, &e, &mut ctr).unwrap();
        assert_eq!(r.point, expected);
        assert_eq!(r.inversions_used, 1);
    }
}

#[test]
fn alternates_agree_everywhere() {
    let e = torsion643();
    let points = all_points(&e);
    let mut ctr = OpCounter::new();
    for p in &points {
        let six_a = six_q_alt(p, &e, &mut ctr).map(|r| r.point);
        let six_b = doublek_plus_2q(2, p, p, &e, &mut ctr).map(|r| r.point);
        let six_c = mul_small(6, p, &e, &mut ctr).point;
        if let (Ok(a), Ok(b)) = (&six_a, &six_b) {
            assert_eq!(a, b);
            assert_eq!(a, &six_c);
        }
        // whatever path was degenerate, the dispatcher still agrees with
        // the oracle
        let expected = scalar_mul_reference(&BigUint::from(6u32), p, &e, &mut OpCounter::new());
        assert_eq!(six_c, expected);
    }
}

#[test]
fn degenerate_chains_never_return_wrong_points() {
    // On the torsion curve, walk every point through every composite form
    // and demand: correct point or explicit degenerate error.
    let e = torsion643();
    let points = all_points(&e);
    let mut ctr = OpCounter::new();
    for p in &points {
        for n in 1u32..=4 {
            let expected = primitive_double_n(n, p, &e, &mut OpCounter::new());
            let got = match n {
                1 => doublek_plus_point(1, p, &AffinePoint::Infinity, &e, &mut ctr),
                2 => double2(p, &e, &mut ctr),
                3 => double3(p, &e, &mut ctr),
                _ => double4(p, &e, &mut ctr),
            };
            match got {
                Ok(r) => assert_eq!(r.point, expected),
                Err(CompositeError::DegenerateChain { stage }) => {
                    // some prefix of the doubling chain must really have died
                    let hit_torsion = (0..n).any(|i| {
                        let t = primitive_double_n(i, p, &e, &mut OpCounter::new());
                        match t {
                            AffinePoint::Infinity => true,
                            AffinePoint::Finite { y, .. } => y.is_zero(),
                        }
                    });
                    assert!(hit_torsion, "spurious degenerate ({stage}) for 2^{n}");
                }
            }
        }
    }
}
