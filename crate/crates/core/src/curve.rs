//! Affine short-Weierstrass point arithmetic.
//!
//! These are the classical chord-and-tangent formulas, one field inversion
//! per group operation. They play two roles: the baseline that the
//! single-inversion composite operations are benchmarked against, and the
//! oracle that every composite result is checked to agree with.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::fp::{FieldCtx, FieldElement, OpCounter};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CurveError {
    #[error("singular curve: 4a^3 + 27b^2 = 0")]
    Singular,
    #[error("declared order violates the Hasse bound")]
    HasseViolation,
    #[error("curve order is required but not set")]
    MissingOrder,
    #[error("scalar exceeds the curve order")]
    ScalarOutOfRange,
    #[error("point ({x}, {y}) is not on the curve")]
    OffCurve { x: String, y: String },
}

/// Parameters of `y^2 = x^3 + a x + b` over a prime field, with an optional
/// declared group order.
#[derive(Debug, Clone)]
pub struct CurveParams {
    ctx: FieldCtx,
    a: FieldElement,
    b: FieldElement,
    order: Option<BigUint>,
    name: String,
}

impl CurveParams {
    pub fn new(
        ctx: FieldCtx,
        a: FieldElement,
        b: FieldElement,
        order: Option<BigUint>,
        name: impl Into<String>,
    ) -> Result<Self, CurveError> {
        // 4a^3 + 27b^2 != 0, uncounted construction-time check
        let a3 = a.raw_mul(&a).raw_mul(&a);
        let four_a3 = a3.raw_add(&a3).raw_add(&a3.raw_add(&a3));
        let b2 = b.raw_mul(&b);
        let mut t = FieldElement::zero(&ctx);
        for _ in 0..27 {
            t = t.raw_add(&b2);
        }
        if four_a3.raw_add(&t).is_zero() {
            return Err(CurveError::Singular);
        }
        if let Some(n) = &order {
            if !hasse_bound_holds(n, ctx.prime()) {
                return Err(CurveError::HasseViolation);
            }
        }
        Ok(CurveParams {
            ctx,
            a,
            b,
            order,
            name: name.into(),
        })
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn a(&self) -> &FieldElement {
        &self.a
    }

    pub fn b(&self) -> &FieldElement {
        &self.b
    }

    pub fn order(&self) -> Option<&BigUint> {
        self.order.as_ref()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Re-checks the declared order against the Hasse bound.
    pub fn validate_hasse(&self) -> Result<bool, CurveError> {
        let n = self.order.as_ref().ok_or(CurveError::MissingOrder)?;
        Ok(hasse_bound_holds(n, self.ctx.prime()))
    }
}

/// Integer-exact Hasse check: `|#E - (p+1)| <= 2*floor(sqrt(p)) + 1`.
pub fn hasse_bound_holds(order: &BigUint, p: &BigUint) -> bool {
    let center = p + BigUint::one();
    let diff = if order >= &center {
        order - &center
    } else {
        &center - order
    };
    let bound = (p.sqrt() << 1) + BigUint::one();
    diff <= bound
}

/// A point in the affine plane, or the point at infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AffinePoint {
    Infinity,
    Finite { x: FieldElement, y: FieldElement },
}

impl AffinePoint {
    pub fn infinity() -> Self {
        AffinePoint::Infinity
    }

    /// Builds a finite point, rejecting coordinates that do not satisfy the
    /// curve equation.
    pub fn new(x: FieldElement, y: FieldElement, e: &CurveParams) -> Result<Self, CurveError> {
        let p = AffinePoint::Finite { x, y };
        if is_on_curve(&p, e) {
            Ok(p)
        } else {
            match p {
                AffinePoint::Finite { x, y } => Err(CurveError::OffCurve {
                    x: x.to_hex(),
                    y: y.to_hex(),
                }),
                AffinePoint::Infinity => unreachable!(),
            }
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, AffinePoint::Infinity)
    }

    pub fn x(&self) -> Option<&FieldElement> {
        match self {
            AffinePoint::Infinity => None,
            AffinePoint::Finite { x, .. } => Some(x),
        }
    }

    pub fn y(&self) -> Option<&FieldElement> {
        match self {
            AffinePoint::Infinity => None,
            AffinePoint::Finite { y, .. } => Some(y),
        }
    }
}

/// True for infinity and for finite points satisfying the curve equation.
/// Uncounted: membership checks are validation, not group arithmetic.
pub fn is_on_curve(p: &AffinePoint, e: &CurveParams) -> bool {
    match p {
        AffinePoint::Infinity => true,
        AffinePoint::Finite { x, y } => {
            let lhs = y.raw_mul(y);
            let rhs = x.raw_mul(x).raw_mul(x).raw_add(&e.a().raw_mul(x)).raw_add(e.b());
            lhs == rhs
        }
    }
}

/// Total group addition: handles identity, inverse pairs, and the doubling
/// case internally so ladder code never branches on them.
pub fn point_add(
    p: &AffinePoint,
    q: &AffinePoint,
    e: &CurveParams,
    ctr: &mut OpCounter,
) -> AffinePoint {
    let (x1, y1, x2, y2) = match (p, q) {
        (AffinePoint::Infinity, _) => return q.clone(),
        (_, AffinePoint::Infinity) => return p.clone(),
        (AffinePoint::Finite { x: x1, y: y1 }, AffinePoint::Finite { x: x2, y: y2 }) => {
            (x1, y1, x2, y2)
        }
    };
    if x1 == x2 {
        return if y1.add(y2, ctr).is_zero() {
            AffinePoint::Infinity
        } else {
            point_double(p, e, ctr)
        };
    }
    let lambda = y2
        .sub(y1, ctr)
        .mul(&x2.sub(x1, ctr).inv(ctr).expect("x1 != x2"), ctr);
    let x3 = lambda.sqr(ctr).sub(x1, ctr).sub(x2, ctr);
    let y3 = lambda.mul(&x1.sub(&x3, ctr), ctr).sub(y1, ctr);
    AffinePoint::Finite { x: x3, y: y3 }
}

/// Tangent-line doubling. Two-torsion points (y = 0) and infinity double to
/// infinity.
pub fn point_double(p: &AffinePoint, e: &CurveParams, ctr: &mut OpCounter) -> AffinePoint {
    let (x1, y1) = match p {
        AffinePoint::Infinity => return AffinePoint::Infinity,
        AffinePoint::Finite { x, y } => (x, y),
    };
    if y1.is_zero() {
        return AffinePoint::Infinity;
    }
    let x1_sq = x1.sqr(ctr);
    let numer = x1_sq.add(&x1_sq, ctr).add(&x1_sq, ctr).add(e.a(), ctr);
    let denom = y1.add(y1, ctr);
    let lambda = numer.mul(&denom.inv(ctr).expect("y != 0"), ctr);
    let x2 = lambda.sqr(ctr).sub(x1, ctr).sub(x1, ctr);
    let y2 = lambda.mul(&x1.sub(&x2, ctr), ctr).sub(y1, ctr);
    AffinePoint::Finite { x: x2, y: y2 }
}

pub fn point_negate(p: &AffinePoint, _e: &CurveParams, ctr: &mut OpCounter) -> AffinePoint {
    match p {
        AffinePoint::Infinity => AffinePoint::Infinity,
        AffinePoint::Finite { x, y } => AffinePoint::Finite {
            x: x.clone(),
            y: y.neg(ctr),
        },
    }
}

/// Plain left-to-right double-and-add built only from `point_add` and
/// `point_double`. This is the reference every other multiplication routine
/// in the crate is checked against.
pub fn scalar_mul_reference(
    k: &BigUint,
    p: &AffinePoint,
    e: &CurveParams,
    ctr: &mut OpCounter,
) -> AffinePoint {
    if k.is_zero() {
        return AffinePoint::Infinity;
    }
    let mut acc = AffinePoint::Infinity;
    for i in (0..k.bits()).rev() {
        acc = point_double(&acc, e, ctr);
        if k.bit(i) {
            acc = point_add(&acc, p, e, ctr);
        }
    }
    acc
}

/// Uniformly samples a finite curve point by drawing x-coordinates until
/// the curve equation has a root, then choosing the sign of y from the
/// generator. Sampling utility for verification sweeps; uncounted.
pub fn random_point(e: &CurveParams, rng: &mut crate::rng::XorShift64Star) -> AffinePoint {
    loop {
        let x = FieldElement::new(rng.next_biguint_below(e.ctx().prime()), e.ctx());
        let rhs = x.raw_mul(&x).raw_mul(&x).raw_add(&e.a().raw_mul(&x)).raw_add(e.b());
        if let Some(y) = crate::fp::sqrt_mod(&rhs) {
            let y = if rng.next_u64() & 1 == 1 {
                FieldElement::new(e.ctx().prime() - y.value(), e.ctx())
            } else {
                y
            };
            // x^3 + ax + b = 0 gives y = 0; both signs coincide there
            let p = AffinePoint::Finite { x, y };
            debug_assert!(is_on_curve(&p, e));
            return p;
        }
    }
}

/// Rewrites `[k]P` as `[#E - k](-P)` when the complement has lower binary
/// Hamming weight. Returns the scalar to use and whether the base point
/// must be negated first.
pub fn complement_scalar(k: &BigUint, e: &CurveParams) -> Result<(BigUint, bool), CurveError> {
    let order = e.order().ok_or(CurveError::MissingOrder)?;
    if k > order {
        return Err(CurveError::ScalarOutOfRange);
    }
    let complement = order - k;
    if complement.count_ones() < k.count_ones() {
        Ok((complement, true))
    } else {
        Ok((k.clone(), false))
    }
}
