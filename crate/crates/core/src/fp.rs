//! Arbitrary-precision prime-field arithmetic with explicit operation
//! counting.
//!
//! Every higher layer of the crate performs its field math through
//! [`FieldElement`], and every arithmetic method takes an [`OpCounter`]
//! handle. This is what makes the cost claims of the composite point
//! formulas checkable: a counter delta around any composed operation equals
//! the sum of the deltas of its constituents, because there is no public
//! path to uncounted arithmetic.
//!
//! Elements are canonical residues in `[0, p)` under a shared
//! [`PrimeModulus`] context. Mixing elements from different moduli is a
//! programming error and panics.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::rng::XorShift64Star;

/// Number of Miller-Rabin rounds applied when a modulus is constructed.
const MILLER_RABIN_ROUNDS: u32 = 32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FpError {
    #[error("modulus is not an odd prime greater than 3")]
    NotPrime,
    #[error("inverse of zero requested")]
    InvertZero,
    #[error("invalid hex literal: {0}")]
    BadHex(String),
}

/// A prime modulus shared by all elements of one field.
///
/// Construction runs a 32-round Miller-Rabin test so that bad curve files
/// fail fast instead of producing nonsense arithmetic later.
#[derive(Debug, PartialEq, Eq)]
pub struct PrimeModulus {
    p: BigUint,
    bit_length: u64,
}

/// Shared handle to a field context.
pub type FieldCtx = Arc<PrimeModulus>;

impl PrimeModulus {
    /// Validates and wraps an odd prime `p > 3`.
    pub fn new(p: BigUint) -> Result<FieldCtx, FpError> {
        if p <= BigUint::from(3u32) || p.is_even() || !is_probable_prime(&p) {
            return Err(FpError::NotPrime);
        }
        let bit_length = p.bits();
        Ok(Arc::new(PrimeModulus { p, bit_length }))
    }

    pub fn prime(&self) -> &BigUint {
        &self.p
    }

    pub fn bit_length(&self) -> u64 {
        self.bit_length
    }
}

/// Miller-Rabin with deterministic xorshift-derived bases. Probabilistic in
/// the usual sense; 32 rounds push the error probability below 2^-64.
fn is_probable_prime(p: &BigUint) -> bool {
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    // Quick trial division keeps the common rejection paths cheap.
    for small in [3u32, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let s = BigUint::from(small);
        if *p == s {
            return true;
        }
        if (p % &s).is_zero() {
            return false;
        }
    }
    let p_minus_1 = p - &one;
    let s = p_minus_1.trailing_zeros().unwrap_or(0);
    let d = &p_minus_1 >> s;
    // Seed depends on p so distinct moduli draw distinct (but reproducible)
    // witness sequences.
    let low = p.iter_u64_digits().next().unwrap_or(1);
    let mut rng = XorShift64Star::new(low ^ 0xeced_c0de_5eed_u64);
    let span = p - BigUint::from(4u32); // witnesses in [2, p-2]
    'witness: for _ in 0..MILLER_RABIN_ROUNDS {
        let a = rng.next_biguint_below(&span) + &two;
        let mut x = a.modpow(&d, p);
        if x == one || x == p_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, p);
            if x == p_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Tally of field operations. `sqr` is kept separate from `mul` so reports
/// can fold squarings into multiplications or not, as desired. Inversions
/// count as one regardless of the internal algorithm.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct OpCounter {
    pub mul: u64,
    pub sqr: u64,
    pub add_sub: u64,
    pub inv: u64,
    pub neg: u64,
}

impl OpCounter {
    pub fn new() -> Self {
        OpCounter::default()
    }

    /// Component-wise difference against an earlier snapshot of the same
    /// counter.
    pub fn delta_since(&self, earlier: &OpCounter) -> OpCounter {
        OpCounter {
            mul: self.mul - earlier.mul,
            sqr: self.sqr - earlier.sqr,
            add_sub: self.add_sub - earlier.add_sub,
            inv: self.inv - earlier.inv,
            neg: self.neg - earlier.neg,
        }
    }

    pub fn is_zero(&self) -> bool {
        *self == OpCounter::default()
    }
}

impl std::ops::AddAssign for OpCounter {
    fn add_assign(&mut self, rhs: OpCounter) {
        self.mul += rhs.mul;
        self.sqr += rhs.sqr;
        self.add_sub += rhs.add_sub;
        self.inv += rhs.inv;
        self.neg += rhs.neg;
    }
}

impl fmt::Display for OpCounter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "mul={} sqr={} add_sub={} inv={} neg={}",
            self.mul, self.sqr, self.add_sub, self.inv, self.neg
        )
    }
}

/// Canonical residue in `[0, p)`.
#[derive(Clone)]
pub struct FieldElement {
    value: BigUint,
    ctx: FieldCtx,
}

impl FieldElement {
    pub fn new(value: BigUint, ctx: &FieldCtx) -> Self {
        FieldElement {
            value: value % ctx.prime(),
            ctx: Arc::clone(ctx),
        }
    }

    pub fn from_u64(value: u64, ctx: &FieldCtx) -> Self {
        Self::new(BigUint::from(value), ctx)
    }

    pub fn zero(ctx: &FieldCtx) -> Self {
        Self::new(BigUint::zero(), ctx)
    }

    pub fn one(ctx: &FieldCtx) -> Self {
        Self::new(BigUint::one(), ctx)
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// Lowercase big-endian hex without prefix.
    pub fn to_hex(&self) -> String {
        format!("{:x}", self.value)
    }

    pub fn from_hex(s: &str, ctx: &FieldCtx) -> Result<Self, FpError> {
        let digits = BigUint::parse_bytes(s.as_bytes(), 16)
            .ok_or_else(|| FpError::BadHex(s.to_string()))?;
        Ok(Self::new(digits, ctx))
    }

    fn assert_same_ctx(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx.p == other.ctx.p,
            "field element modulus mismatch: {} vs {}",
            self.ctx.p,
            other.ctx.p
        );
    }

    pub fn add(&self, rhs: &Self, ctr: &mut OpCounter) -> Self {
        self.assert_same_ctx(rhs);
        ctr.add_sub += 1;
        let mut v = &self.value + &rhs.value;
        if v >= self.ctx.p {
            v -= &self.ctx.p;
        }
        FieldElement {
            value: v,
            ctx: Arc::clone(&self.ctx),
        }
    }

    pub fn sub(&self, rhs: &Self, ctr: &mut OpCounter) -> Self {
        self.assert_same_ctx(rhs);
        ctr.add_sub += 1;
        let v = if self.value >= rhs.value {
            &self.value - &rhs.value
        } else {
            &self.ctx.p - &rhs.value + &self.value
        };
        FieldElement {
            value: v,
            ctx: Arc::clone(&self.ctx),
        }
    }

    pub fn mul(&self, rhs: &Self, ctr: &mut OpCounter) -> Self {
        self.assert_same_ctx(rhs);
        ctr.mul += 1;
        FieldElement {
            value: (&self.value * &rhs.value) % &self.ctx.p,
            ctx: Arc::clone(&self.ctx),
        }
    }

    pub fn sqr(&self, ctr: &mut OpCounter) -> Self {
        ctr.sqr += 1;
        FieldElement {
            value: (&self.value * &self.value) % &self.ctx.p,
            ctx: Arc::clone(&self.ctx),
        }
    }

    pub fn neg(&self, ctr: &mut OpCounter) -> Self {
        ctr.neg += 1;
        let v = if self.value.is_zero() {
            BigUint::zero()
        } else {
            &self.ctx.p - &self.value
        };
        FieldElement {
            value: v,
            ctx: Arc::clone(&self.ctx),
        }
    }

    /// Multiplicative inverse via the extended binary Euclidean algorithm.
    /// Counts as exactly one `inv` no matter how many internal iterations
    /// run.
    pub fn inv(&self, ctr: &mut OpCounter) -> Result<Self, FpError> {
        let v = self.raw_inv().ok_or(FpError::InvertZero)?;
        ctr.inv += 1;
        Ok(FieldElement {
            value: v,
            ctx: Arc::clone(&self.ctx),
        })
    }

    // Uncounted primitives, crate-internal only. Used for construction-time
    // setup (curve validation, Montgomery a24) and for debug assertions, so
    // that measured paths never mix with bookkeeping math.

    pub(crate) fn raw_inv(&self) -> Option<BigUint> {
        if self.value.is_zero() {
            return None;
        }
        let p = &self.ctx.p;
        let one = BigUint::one();
        let mut u = self.value.clone();
        let mut v = p.clone();
        let mut x1 = BigUint::one();
        let mut x2 = BigUint::zero();
        while u != one && v != one {
            while u.is_even() {
                u >>= 1;
                if x1.is_odd() {
                    x1 += p;
                }
                x1 >>= 1;
            }
            while v.is_even() {
                v >>= 1;
                if x2.is_odd() {
                    x2 += p;
                }
                x2 >>= 1;
            }
            if u >= v {
                u -= &v;
                x1 = submod(&x1, &x2, p);
            } else {
                v -= &u;
                x2 = submod(&x2, &x1, p);
            }
        }
        Some(if u == one { x1 % p } else { x2 % p })
    }

    pub(crate) fn raw_mul(&self, rhs: &Self) -> Self {
        FieldElement {
            value: (&self.value * &rhs.value) % &self.ctx.p,
            ctx: Arc::clone(&self.ctx),
        }
    }

    pub(crate) fn raw_add(&self, rhs: &Self) -> Self {
        let mut v = &self.value + &rhs.value;
        if v >= self.ctx.p {
            v -= &self.ctx.p;
        }
        FieldElement {
            value: v,
            ctx: Arc::clone(&self.ctx),
        }
    }
}

fn submod(a: &BigUint, b: &BigUint, p: &BigUint) -> BigUint {
    if a >= b {
        a - b
    } else {
        p - b + a
    }
}

/// Square root modulo the element's prime, or `None` for non-residues.
///
/// Sampling and validation utility (uncounted): the `p = 3 (mod 4)`
/// shortcut where it applies, Tonelli-Shanks otherwise.
pub fn sqrt_mod(a: &FieldElement) -> Option<FieldElement> {
    let p = a.ctx().prime();
    let one = BigUint::one();
    if a.is_zero() {
        return Some(FieldElement::zero(a.ctx()));
    }
    let legendre = a.value().modpow(&((p - &one) >> 1), p);
    if legendre != one {
        return None;
    }
    let three = BigUint::from(3u32);
    if p % BigUint::from(4u32) == three {
        let r = a.value().modpow(&((p + &one) >> 2), p);
        return Some(FieldElement::new(r, a.ctx()));
    }
    // Tonelli-Shanks: write p - 1 = q * 2^s with q odd.
    let p_minus_1 = p - &one;
    let s = p_minus_1.trailing_zeros().unwrap_or(0);
    let q = &p_minus_1 >> s;
    // find a quadratic non-residue z
    let mut z = BigUint::from(2u32);
    while z.modpow(&((p - &one) >> 1), p) == one {
        z += &one;
    }
    let mut m = s;
    let mut c = z.modpow(&q, p);
    let mut t = a.value().modpow(&q, p);
    let mut r = a.value().modpow(&((&q + &one) >> 1), p);
    let two = BigUint::from(2u32);
    while t != one {
        let mut i = 0u64;
        let mut probe = t.clone();
        while probe != one {
            probe = probe.modpow(&two, p);
            i += 1;
            if i == m {
                return None;
            }
        }
        let mut b = c.clone();
        for _ in 0..(m - i - 1) {
            b = b.modpow(&two, p);
        }
        m = i;
        c = (&b * &b) % p;
        t = (&t * &c) % p;
        r = (&r * &b) % p;
    }
    Some(FieldElement::new(r, a.ctx()))
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && self.ctx.p == other.ctx.p
    }
}

impl Eq for FieldElement {}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fe({:x} mod <{}-bit p>)", self.value, self.ctx.bit_length)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.value)
    }
}
