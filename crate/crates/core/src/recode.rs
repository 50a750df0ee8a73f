//! Scalar recoding: binary, non-adjacent form, base-16 digits, and the
//! mixed base-16/32 signed representation consumed by the left-to-right
//! mixed ladder.
//!
//! All recoders share one output type, [`MixedBaseRepr`]: a digit string
//! `m_i` with per-position radices `B_i` reconstructing the scalar as
//!
//! ```text
//! k = sum_i  m_i * prod_{j<i} B_j
//! ```
//!
//! Digits are stored least-significant first; displays are
//! most-significant first. Several distinct digit strings can encode the
//! same scalar — the binding contract is the reconstruction identity plus
//! the estimated cost, never a particular string.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, ToPrimitive, Zero};

use crate::composite::small_multiple_inversion_cost;

/// Signed mixed-radix digit string. See the module docs for the
/// reconstruction identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedBaseRepr {
    digits: Vec<i32>,
    bases: Vec<u32>,
    source: BigUint,
}

impl MixedBaseRepr {
    fn new(digits: Vec<i32>, bases: Vec<u32>, source: BigUint) -> Self {
        debug_assert_eq!(digits.len(), bases.len());
        MixedBaseRepr {
            digits,
            bases,
            source,
        }
    }

    /// Digits, least-significant position first.
    pub fn digits(&self) -> &[i32] {
        &self.digits
    }

    /// Radix of each position, aligned with `digits()`.
    pub fn bases(&self) -> &[u32] {
        &self.bases
    }

    /// The scalar this representation was derived from.
    pub fn source(&self) -> &BigUint {
        &self.source
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Digits in display order (most-significant first).
    pub fn digits_msb(&self) -> Vec<i32> {
        self.digits.iter().rev().copied().collect()
    }

    /// Bases in display order, aligned with `digits_msb`.
    pub fn bases_msb(&self) -> Vec<u32> {
        self.bases.iter().rev().copied().collect()
    }

    pub fn nonzero_digits(&self) -> usize {
        self.digits.iter().filter(|d| **d != 0).count()
    }
}

/// Evaluates the reconstruction sum of a representation.
pub fn repr_eval(r: &MixedBaseRepr) -> BigUint {
    let mut acc = BigInt::zero();
    let mut weight = BigInt::one();
    for (digit, base) in r.digits.iter().zip(r.bases.iter()) {
        acc += &weight * BigInt::from(*digit);
        weight *= BigInt::from(*base);
    }
    match acc.sign() {
        Sign::Minus => panic!("representation evaluates negative: {acc}"),
        _ => acc.magnitude().clone(),
    }
}

/// Plain binary digits (all bases 2).
pub fn to_binary(k: &BigUint) -> MixedBaseRepr {
    let mut digits = Vec::new();
    for i in 0..k.bits() {
        digits.push(k.bit(i) as i32);
    }
    let bases = vec![2; digits.len()];
    MixedBaseRepr::new(digits, bases, k.clone())
}

/// Non-adjacent form: digits in `{-1, 0, 1}` with no two adjacent
/// nonzeros. Expected nonzero density over random scalars is one third,
/// against one half for plain binary.
pub fn to_naf(k: &BigUint) -> MixedBaseRepr {
    let mut digits = Vec::new();
    let mut n = k.clone();
    let three = BigUint::from(3u32);
    while !n.is_zero() {
        if n.is_odd_low() {
            // choose d = ±1 with n - d divisible by 4
            let rem4 = (&n & &three).to_u32().unwrap();
            let d: i32 = if rem4 == 1 { 1 } else { -1 };
            digits.push(d);
            if d == 1 {
                n -= BigUint::one();
            } else {
                n += BigUint::one();
            }
        } else {
            digits.push(0);
        }
        n >>= 1;
    }
    let bases = vec![2; digits.len()];
    MixedBaseRepr::new(digits, bases, k.clone())
}

trait OddLow {
    fn is_odd_low(&self) -> bool;
}

impl OddLow for BigUint {
    fn is_odd_low(&self) -> bool {
        self.bit(0)
    }
}

/// Base-16 digits (all bases 16). Zero encodes as a single zero digit.
pub fn to_base16(k: &BigUint) -> MixedBaseRepr {
    let fifteen = BigUint::from(15u32);
    let mut digits = Vec::new();
    let mut n = k.clone();
    loop {
        digits.push((&n & &fifteen).to_u32().unwrap() as i32);
        n >>= 4;
        if n.is_zero() {
            break;
        }
    }
    let bases = vec![16; digits.len()];
    MixedBaseRepr::new(digits, bases, k.clone())
}

/// Base-16 digit values, most-significant first, for display.
pub fn base16_digits_msb(k: &BigUint) -> Vec<u8> {
    to_base16(k)
        .digits_msb()
        .into_iter()
        .map(|d| d as u8)
        .collect()
}

/// Mixed-radix signed recoding over bases 16 and 32.
///
/// The scalar is scanned least-significant bit first in windows of five
/// bits (four when fewer remain or when the five-bit digit would not be
/// cheap). Each window value plus the incoming carry is reduced to a
/// signed digit: values above half the radix become `v - B` with a carry
/// of one. A leftover carry appends one final digit. Every emitted digit
/// magnitude is accepted by the small-multiple dispatch table.
pub fn mixed_naf_knapsack(k: &BigUint) -> MixedBaseRepr {
    let bits = k.bits();
    let mut digits = Vec::new();
    let mut bases = Vec::new();
    let mut carry: u32 = 0;
    let mut last_base = 16u32;
    let mut i = 0u64;
    while i < bits {
        let remaining = bits - i;
        let window5 = window_value(k, i, 5);
        if remaining >= 5 && optimizable(window5 + carry) {
            let v = window5 + carry;
            let (m, c) = signed_reduce(v, 32);
            digits.push(m);
            bases.push(32);
            carry = c;
            last_base = 32;
            i += 5;
        } else {
            let v = window_value(k, i, 4) + carry;
            let (m, c) = signed_reduce(v, 16);
            digits.push(m);
            bases.push(16);
            carry = c;
            last_base = 16;
            i += 4;
        }
    }
    if carry > 0 {
        digits.push(carry as i32);
        bases.push(last_base);
    }
    MixedBaseRepr::new(digits, bases, k.clone())
}

fn window_value(k: &BigUint, start: u64, width: u64) -> u32 {
    let mut v = 0u32;
    for off in 0..width {
        if k.bit(start + off) {
            v |= 1 << off;
        }
    }
    v
}

/// Reduces a window value to a signed digit and carry for the given radix:
/// digits stay within `[-B/2, B/2]`.
fn signed_reduce(v: u32, base: u32) -> (i32, u32) {
    debug_assert!(v <= base);
    if v > base / 2 {
        (v as i32 - base as i32, 1)
    } else {
        (v as i32, 0)
    }
}

/// A five-bit window is worth promoting to base 32 when its signed digit
/// is a single-inversion multiple in the dispatch table.
fn optimizable(v: u32) -> bool {
    let (m, _) = signed_reduce(v, 32);
    small_multiple_inversion_cost(m.unsigned_abs()) <= 1
}

/// Inversion costs of the building blocks available to the ladders: digit
/// multiples of the base point, and radix promotions of the accumulator.
#[derive(Debug, Clone)]
pub struct CostModel {
    digit: [u64; 32],
}

impl CostModel {
    /// Costs of the affine single-inversion dispatch table.
    pub fn affine() -> Self {
        let mut digit = [0u64; 32];
        for (c, slot) in digit.iter_mut().enumerate() {
            *slot = small_multiple_inversion_cost(c as u32);
        }
        CostModel { digit }
    }

    /// Inversions spent materializing `[|m|]P`.
    pub fn digit_cost(&self, magnitude: u32) -> u64 {
        self.digit[magnitude as usize]
    }

    /// Inversions spent promoting the accumulator by one radix step: a
    /// block of `log2(B)` doublings, fused additions included, in chunks of
    /// at most four.
    pub fn promotion_cost(&self, base: u32) -> u64 {
        let lb = base.trailing_zeros() as u64;
        debug_assert!(base.is_power_of_two() && lb >= 1);
        lb.div_ceil(4)
    }
}

/// Predicts the inversion count of evaluating `[k]P` from a representation
/// with the left-to-right block ladders.
///
/// Base-2 strings are charged per block: a run of `z` zeros ending in a
/// nonzero digit is one fused `[2^(z+1)]D ± P` block (`ceil((z+1)/4)`
/// inversions); a trailing zero run costs its bare doublings. Mixed-radix
/// strings are charged the leading digit plus one promotion per remaining
/// position (digit additions are fused into the promotion blocks).
pub fn estimate_inversions(r: &MixedBaseRepr, model: &CostModel) -> u64 {
    if r.is_empty() || r.digits.iter().all(|d| *d == 0) {
        return 0;
    }
    let msb_digits = r.digits_msb();
    let msb_bases = r.bases_msb();
    if r.bases.iter().all(|b| *b == 2) {
        // Block walk over a signed binary string.
        let first_nonzero = msb_digits.iter().position(|d| *d != 0).unwrap();
        let mut cost = model.digit_cost(msb_digits[first_nonzero].unsigned_abs());
        let mut zero_run: u64 = 0;
        for d in &msb_digits[first_nonzero + 1..] {
            if *d == 0 {
                zero_run += 1;
            } else {
                cost += (zero_run + 1).div_ceil(4);
                zero_run = 0;
            }
        }
        cost += zero_run.div_ceil(4);
        cost
    } else {
        let mut cost = model.digit_cost(msb_digits[0].unsigned_abs());
        for base in &msb_bases[1..] {
            cost += model.promotion_cost(*base);
        }
        cost
    }
}
