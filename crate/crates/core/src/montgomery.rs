//! X-only Montgomery-curve arithmetic, the inversion-free baseline the
//! affine Weierstrass routines are compared against.
//!
//! Points on `B*y^2 = x^3 + A*x^2 + x` are carried as projective pairs
//! `(X : Z)` with `x = X/Z`; the class with `Z = 0` stands for the point
//! at infinity. Differential addition and doubling never invert anything;
//! a full ladder spends exactly one inversion, on the final normalization.

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

use crate::fp::{FieldCtx, FieldElement, OpCounter};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MontgomeryError {
    #[error("invalid Montgomery curve: {0}")]
    InvalidCurve(&'static str),
    #[error("(0 : 0) is not a valid projective class")]
    ZeroPair,
}

/// `B*y^2 = x^3 + A*x^2 + x` with `B != 0` and `A^2 != 4`. The doubling
/// constant `a24 = (A+2)/4` is fixed at construction with one uncounted
/// inversion (setup cost, excluded from per-multiplication reports).
#[derive(Debug, Clone)]
pub struct MontgomeryCurve {
    ctx: FieldCtx,
    a: FieldElement,
    b: FieldElement,
    a24: FieldElement,
}

impl MontgomeryCurve {
    pub fn new(ctx: FieldCtx, a: FieldElement, b: FieldElement) -> Result<Self, MontgomeryError> {
        if b.is_zero() {
            return Err(MontgomeryError::InvalidCurve("B must be nonzero"));
        }
        let four = FieldElement::from_u64(4, &ctx);
        if a.raw_mul(&a) == four {
            return Err(MontgomeryError::InvalidCurve("A^2 must differ from 4"));
        }
        let two = FieldElement::from_u64(2, &ctx);
        let four_inv = FieldElement::new(four.raw_inv().expect("4 invertible mod odd prime"), &ctx);
        let a24 = a.raw_add(&two).raw_mul(&four_inv);
        Ok(MontgomeryCurve { ctx, a, b, a24 })
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

    pub fn a24(&self) -> &FieldElement {
        &self.a24
    }
}

/// Projective x-line pair `(X : Z)`, never both zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XZPoint {
    x: FieldElement,
    z: FieldElement,
}

impl XZPoint {
    pub fn new(x: FieldElement, z: FieldElement) -> Result<Self, MontgomeryError> {
        if x.is_zero() && z.is_zero() {
            return Err(MontgomeryError::ZeroPair);
        }
        Ok(XZPoint { x, z })
    }

    pub fn from_affine_x(x: FieldElement) -> Self {
        let one = FieldElement::one(x.ctx());
        XZPoint { x, z: one }
    }

    /// The projective class of the point at infinity.
    pub fn infinity(ctx: &FieldCtx) -> Self {
        XZPoint {
            x: FieldElement::one(ctx),
            z: FieldElement::zero(ctx),
        }
    }

    pub fn x(&self) -> &FieldElement {
        &self.x
    }

    pub fn z(&self) -> &FieldElement {
        &self.z
    }

    pub fn is_infinity_class(&self) -> bool {
        self.z.is_zero()
    }
}

/// Differential addition: given `P`, `Q`, and `diff` representing
/// `x(P - Q)`, produces `x(P + Q)`. Inversion-free.
///
/// `diff` in the infinity class (`P = Q`) is outside the precondition;
/// callers use [`xdbl`] for that case. Infinity-class operands pass the
/// other operand through.
pub fn xadd(
    p: &XZPoint,
    q: &XZPoint,
    diff: &XZPoint,
    _c: &MontgomeryCurve,
    ctr: &mut OpCounter,
) -> XZPoint {
    if p.is_infinity_class() {
        return q.clone();
    }
    if q.is_infinity_class() {
        return p.clone();
    }
    let v1 = p.x.add(&p.z, ctr).mul(&q.x.sub(&q.z, ctr), ctr);
    let v2 = p.x.sub(&p.z, ctr).mul(&q.x.add(&q.z, ctr), ctr);
    let x3 = diff.z.mul(&v1.add(&v2, ctr).sqr(ctr), ctr);
    let z3 = diff.x.mul(&v1.sub(&v2, ctr).sqr(ctr), ctr);
    XZPoint { x: x3, z: z3 }
}

/// X-only doubling. Inversion-free; two-torsion inputs land in the
/// infinity class.
pub fn xdbl(p: &XZPoint, c: &MontgomeryCurve, ctr: &mut OpCounter) -> XZPoint {
    let sum_sq = p.x.add(&p.z, ctr).sqr(ctr);
    let diff_sq = p.x.sub(&p.z, ctr).sqr(ctr);
    let x3 = sum_sq.mul(&diff_sq, ctr);
    let four_xz = sum_sq.sub(&diff_sq, ctr);
    let z3 = four_xz.mul(&diff_sq.add(&c.a24().mul(&four_xz, ctr), ctr), ctr);
    XZPoint { x: x3, z: z3 }
}

/// Montgomery ladder computing the affine x-coordinate of `[k]P` from
/// `x(P)`. Returns `None` when `[k]P` is the point at infinity. Exactly
/// one field inversion is spent, on the final normalization; none when the
/// result is infinite.
pub fn mont_ladder(
    k: &BigUint,
    x_p: &FieldElement,
    c: &MontgomeryCurve,
    ctr: &mut OpCounter,
) -> Option<FieldElement> {
    if k.is_zero() {
        return None;
    }
    let base = XZPoint::from_affine_x(x_p.clone());
    let mut r0 = base.clone();
    let mut r1 = xdbl(&r0, c, ctr);
    for i in (0..k.bits() - 1).rev() {
        if k.bit(i) {
            r0 = xadd(&r0, &r1, &base, c, ctr);
            r1 = xdbl(&r1, c, ctr);
        } else {
            r1 = xadd(&r0, &r1, &base, c, ctr);
            r0 = xdbl(&r0, c, ctr);
        }
    }
    if r0.is_infinity_class() {
        return None;
    }
    let z_inv = r0.z.inv(ctr).expect("nonzero z");
    Some(r0.x.mul(&z_inv, ctr))
}
