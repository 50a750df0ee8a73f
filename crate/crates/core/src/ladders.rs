//! Scalar-multiplication ladders built on the composite operations.
//!
//! Every routine here returns exactly the same point as
//! [`scalar_mul_reference`] (or `P + [k]Q` for the kernel forms). The
//! composite block operations are used wherever they apply; when a block
//! degenerates (possible only for tiny-order inputs) the ladder retries
//! that block with primitive operations, which changes the counters but
//! never the result.
//!
//! Ladders optionally record a [`LadderTrace`]: one entry per block with
//! the digit, radix, and inversion delta, plus whether the block's trailing
//! addition may legally overlap the next block's chain computation (the
//! addition and the chain touch disjoint state; this implementation runs
//! them sequentially and only records the fact).

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::composite::{
    double2, double3, double4, doublek_plus_mq, doublek_plus_point, mul_small, CompositeError,
    CompositeResult,
};
use crate::curve::{point_add, point_double, point_negate, scalar_mul_reference, AffinePoint, CurveParams};
use crate::fp::OpCounter;
use crate::recode::{base16_digits_msb, mixed_naf_knapsack};

/// Scalar-multiplication strategies selectable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LadderAlgorithm {
    /// Left-to-right double-and-add over primitives.
    Reference,
    /// Three-point ladder over primitives (baseline for kernel forms).
    ThreePoint,
    /// Right-to-left with composite doubling blocks capped at `2^4`.
    RightToLeft,
    /// Right-to-left with unbounded gaps split into minimal blocks.
    RightToLeftKnapsack,
    /// Left-to-right with fused double-and-add blocks.
    LeftToRightDoubleAdd,
    /// Left-to-right over the mixed base-16/32 signed recoding.
    LeftToRightNafMix,
    /// Horner evaluation of the base-16 digit string.
    Base16,
}

impl LadderAlgorithm {
    pub fn name(self) -> &'static str {
        match self {
            LadderAlgorithm::Reference => "ref",
            LadderAlgorithm::ThreePoint => "three-point",
            LadderAlgorithm::RightToLeft => "r2l",
            LadderAlgorithm::RightToLeftKnapsack => "r2l-knap",
            LadderAlgorithm::LeftToRightDoubleAdd => "l2r-da",
            LadderAlgorithm::LeftToRightNafMix => "l2r-naf",
            LadderAlgorithm::Base16 => "base16",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "ref" => LadderAlgorithm::Reference,
            "three-point" => LadderAlgorithm::ThreePoint,
            "r2l" => LadderAlgorithm::RightToLeft,
            "r2l-knap" => LadderAlgorithm::RightToLeftKnapsack,
            "l2r-da" => LadderAlgorithm::LeftToRightDoubleAdd,
            "l2r-naf" => LadderAlgorithm::LeftToRightNafMix,
            "base16" => LadderAlgorithm::Base16,
            _ => return None,
        })
    }

    /// All ladder strategies (reference included).
    pub fn all() -> &'static [LadderAlgorithm] {
        &[
            LadderAlgorithm::Reference,
            LadderAlgorithm::ThreePoint,
            LadderAlgorithm::RightToLeft,
            LadderAlgorithm::RightToLeftKnapsack,
            LadderAlgorithm::LeftToRightDoubleAdd,
            LadderAlgorithm::LeftToRightNafMix,
            LadderAlgorithm::Base16,
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepKind {
    /// Accumulator initialization with a digit multiple of the base.
    Seed,
    /// Pure doubling block.
    DoubleBlock,
    /// Doubling block fused with a digit addition.
    PromoteAdd,
    /// Standalone point addition.
    Add,
}

impl StepKind {
    fn name(self) -> &'static str {
        match self {
            StepKind::Seed => "seed",
            StepKind::DoubleBlock => "double-block",
            StepKind::PromoteAdd => "promote-add",
            StepKind::Add => "add",
        }
    }
}

/// One recorded ladder block.
#[derive(Debug, Clone)]
pub struct TraceStep {
    pub kind: StepKind,
    /// Signed digit consumed by this block (0 for pure doubling).
    pub block: i64,
    /// Radix weight the block applies (`2^l`, 16, 32, or 1 for plain adds).
    pub base: u64,
    /// Field inversions this block spent.
    pub inv: u64,
    /// Whether the block's addition may overlap the next block's chain.
    pub parallel_ok: bool,
}

/// Direction in which a trace's digits reconstruct the scalar.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceOrder {
    /// Horner order: `k = (..(m_0 * B_1 + m_1) * B_2 + ..)`.
    MsbFirst,
    /// Positional order: `k = sum m_i * prod_{j<i} B_j`.
    LsbFirst,
}

/// Machine-checkable record of one ladder run.
#[derive(Debug, Clone)]
pub struct LadderTrace {
    pub algorithm: &'static str,
    pub order: TraceOrder,
    pub steps: Vec<TraceStep>,
    pub total: OpCounter,
}

impl Default for LadderTrace {
    fn default() -> Self {
        LadderTrace::new("", TraceOrder::MsbFirst)
    }
}

impl LadderTrace {
    /// Fresh trace; ladders reset whatever is passed to them.
    pub fn new(algorithm: &'static str, order: TraceOrder) -> Self {
        LadderTrace {
            algorithm,
            order,
            steps: Vec::new(),
            total: OpCounter::new(),
        }
    }

    /// Reconstructs the scalar from the recorded blocks.
    pub fn replay_scalar(&self) -> BigUint {
        match self.order {
            TraceOrder::MsbFirst => {
                let mut acc = num_bigint::BigInt::zero();
                for step in &self.steps {
                    acc = acc * num_bigint::BigInt::from(step.base)
                        + num_bigint::BigInt::from(step.block);
                }
                acc.magnitude().clone()
            }
            TraceOrder::LsbFirst => {
                let mut acc = num_bigint::BigInt::zero();
                let mut weight = num_bigint::BigInt::from(1u32);
                for step in &self.steps {
                    acc += &weight * num_bigint::BigInt::from(step.block);
                    weight *= num_bigint::BigInt::from(step.base);
                }
                acc.magnitude().clone()
            }
        }
    }

    /// Line-oriented serialization:
    /// `step <i>: kind=<name> block=<int> base=<int> inv=<int>`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, step) in self.steps.iter().enumerate() {
            writeln!(
                out,
                "step {i}: kind={} block={} base={} inv={}",
                step.kind.name(),
                step.block,
                step.base,
                step.inv
            )
            .unwrap();
        }
        out
    }

    pub fn total_inversions(&self) -> u64 {
        self.total.inv
    }
}

/// Trace recorder that tolerates absent traces and keeps the step/total
/// invariant (step inversions sum to the recorded total).
struct Recorder<'a> {
    trace: Option<&'a mut LadderTrace>,
}

impl<'a> Recorder<'a> {
    fn new(trace: Option<&'a mut LadderTrace>, algorithm: &'static str, order: TraceOrder) -> Self {
        let mut r = Recorder { trace };
        if let Some(t) = r.trace.as_deref_mut() {
            *t = LadderTrace::new(algorithm, order);
        }
        r
    }

    fn push(&mut self, kind: StepKind, block: i64, base: u64, inv: u64, parallel_ok: bool) {
        if let Some(t) = self.trace.as_deref_mut() {
            t.steps.push(TraceStep {
                kind,
                block,
                base,
                inv,
                parallel_ok,
            });
        }
    }

    fn set_total(&mut self, total: OpCounter) {
        if let Some(t) = self.trace.as_deref_mut() {
            t.total = total;
        }
    }
}

fn unwrap_block(
    result: Result<CompositeResult, CompositeError>,
    fallback: impl FnOnce() -> AffinePoint,
) -> AffinePoint {
    match result {
        Ok(r) => r.point,
        Err(_) => fallback(),
    }
}

/// `[2^l]H` as the minimal-inversion composition of the direct doubling
/// forms: chunks of four, then the remainder (`ceil(l/4)` inversions).
/// Infinity and `l = 0` pass through untouched. A degenerate chunk falls
/// back to primitive doublings of the same length.
pub fn double_knapsack(
    h: &AffinePoint,
    l: u64,
    e: &CurveParams,
    ctr: &mut OpCounter,
) -> AffinePoint {
    if h.is_infinity() || l == 0 {
        return h.clone();
    }
    let mut acc = h.clone();
    let mut remaining = l;
    while remaining > 0 {
        let chunk = remaining.min(4);
        acc = match chunk {
            1 => point_double(&acc, e, ctr),
            2 => unwrap_block(double2(&acc, e, ctr), || primitive_doubles(&acc, 2, e, ctr)),
            3 => unwrap_block(double3(&acc, e, ctr), || primitive_doubles(&acc, 3, e, ctr)),
            _ => unwrap_block(double4(&acc, e, ctr), || primitive_doubles(&acc, 4, e, ctr)),
        };
        remaining -= chunk;
    }
    acc
}

fn primitive_doubles(p: &AffinePoint, n: u64, e: &CurveParams, ctr: &mut OpCounter) -> AffinePoint {
    let mut acc = p.clone();
    for _ in 0..n {
        acc = point_double(&acc, e, ctr);
    }
    acc
}

/// `[2^n]D + addend` for `n <= 4` with the addition fused into the chain.
fn fused_double_add(
    n: u64,
    d: &AffinePoint,
    addend: &AffinePoint,
    e: &CurveParams,
    ctr: &mut OpCounter,
) -> AffinePoint {
    debug_assert!((1..=4).contains(&n));
    if d.is_infinity() {
        return addend.clone();
    }
    unwrap_block(doublek_plus_point(n as u32, d, addend, e, ctr), || {
        let t = primitive_doubles(d, n, e, ctr);
        point_add(&t, addend, e, ctr)
    })
}

/// `[2^l]D + addend` for arbitrary `l`: leading chunks through
/// `double_knapsack`, final chunk fused with the addition.
fn promote_and_add_affine(
    l: u64,
    d: &AffinePoint,
    addend: &AffinePoint,
    e: &CurveParams,
    ctr: &mut OpCounter,
) -> AffinePoint {
    if addend.is_infinity() {
        return double_knapsack(d, l, e, ctr);
    }
    if l == 0 {
        return point_add(d, addend, e, ctr);
    }
    let last = (l - 1) % 4 + 1;
    let lead = l - last;
    let promoted = double_knapsack(d, lead, e, ctr);
    fused_double_add(last, &promoted, addend, e, ctr)
}

/// Three-point ladder baseline computing `P + [k]Q` from primitive
/// operations only.
pub fn three_point_ladder(
    k: &BigUint,
    p: &AffinePoint,
    q: &AffinePoint,
    e: &CurveParams,
    ctr: &mut OpCounter,
    trace: Option<&mut LadderTrace>,
) -> AffinePoint {
    let before = *ctr;
    let mut rec = Recorder::new(trace, "three-point", TraceOrder::MsbFirst);
    let mut acc = AffinePoint::Infinity;
    let mut seeded = false;
    for i in (0..k.bits()).rev() {
        let pre = *ctr;
        acc = point_double(&acc, e, ctr);
        let bit = k.bit(i);
        if bit {
            acc = point_add(&acc, q, e, ctr);
        }
        let kind = if seeded {
            if bit { StepKind::PromoteAdd } else { StepKind::DoubleBlock }
        } else {
            StepKind::Seed
        };
        rec.push(kind, bit as i64, if seeded { 2 } else { 1 }, ctr.delta_since(&pre).inv, false);
        seeded = true;
    }
    let pre = *ctr;
    let result = point_add(p, &acc, e, ctr);
    rec.push(StepKind::Add, 0, 1, ctr.delta_since(&pre).inv, false);
    rec.set_total(ctr.delta_since(&before));
    result
}

fn r2l_core(
    k: &BigUint,
    p: &AffinePoint,
    e: &CurveParams,
    seed: Option<&AffinePoint>,
    cap_blocks: bool,
    ctr: &mut OpCounter,
    trace: Option<&mut LadderTrace>,
    algorithm: &'static str,
) -> AffinePoint {
    let before = *ctr;
    let mut rec = Recorder::new(trace, algorithm, TraceOrder::LsbFirst);
    let mut r = seed.cloned().unwrap_or(AffinePoint::Infinity);
    if k.is_zero() {
        rec.set_total(ctr.delta_since(&before));
        return r;
    }
    let nbits = k.bits();
    let mut h = p.clone();
    let mut h_exp: u64 = 0;
    if k.bit(0) {
        let pre = *ctr;
        r = point_add(&r, &h, e, ctr);
        rec.push(StepKind::Seed, 1, 1, ctr.delta_since(&pre).inv, false);
    } else {
        rec.push(StepKind::Seed, 0, 1, 0, false);
    }
    let mut i = 1;
    while i < nbits {
        let j = match (i..nbits).find(|t| k.bit(*t)) {
            Some(j) => j,
            None => break,
        };
        let gap = j - h_exp;
        if cap_blocks {
            // one block per chunk of at most four doublings
            let mut remaining = gap;
            while remaining > 0 {
                let chunk = remaining.min(4);
                let pre = *ctr;
                h = double_knapsack(&h, chunk, e, ctr);
                rec.push(
                    StepKind::DoubleBlock,
                    0,
                    1 << chunk,
                    ctr.delta_since(&pre).inv,
                    false,
                );
                remaining -= chunk;
            }
        } else {
            // chunk the trace entries so the recorded radix fits a u64;
            // the chunk boundaries are multiples of four, so the total
            // inversion count stays at ceil(gap/4)
            let mut remaining = gap;
            while remaining > 0 {
                let chunk = remaining.min(32);
                let pre = *ctr;
                h = double_knapsack(&h, chunk, e, ctr);
                rec.push(
                    StepKind::DoubleBlock,
                    0,
                    1u64 << chunk,
                    ctr.delta_since(&pre).inv,
                    false,
                );
                remaining -= chunk;
            }
        }
        h_exp = j;
        let pre = *ctr;
        r = point_add(&r, &h, e, ctr);
        // the accumulator addition touches state disjoint from the next
        // doubling chain, so it may overlap it
        rec.push(StepKind::Add, 1, 1, ctr.delta_since(&pre).inv, true);
        i = j + 1;
    }
    rec.set_total(ctr.delta_since(&before));
    r
}

/// Right-to-left multiplication with composite doubling blocks of order at
/// most four.
pub fn r2l_multiply(
    k: &BigUint,
    p: &AffinePoint,
    e: &CurveParams,
    ctr: &mut OpCounter,
    trace: Option<&mut LadderTrace>,
) -> AffinePoint {
    r2l_core(k, p, e, None, true, ctr, trace, "r2l")
}

/// Right-to-left multiplication with unbounded zero gaps consumed by
/// `double_knapsack`.
pub fn r2l_knapsack(
    k: &BigUint,
    p: &AffinePoint,
    e: &CurveParams,
    ctr: &mut OpCounter,
    trace: Option<&mut LadderTrace>,
) -> AffinePoint {
    r2l_core(k, p, e, None, false, ctr, trace, "r2l-knap")
}

/// Left-to-right double-and-add with each zero run and its terminating
/// one-bit fused into a single `[2^n]D + P` block.
pub fn l2r_double_add(
    k: &BigUint,
    p: &AffinePoint,
    e: &CurveParams,
    ctr: &mut OpCounter,
    trace: Option<&mut LadderTrace>,
) -> AffinePoint {
    let before = *ctr;
    let mut rec = Recorder::new(trace, "l2r-da", TraceOrder::MsbFirst);
    if k.is_zero() {
        rec.set_total(ctr.delta_since(&before));
        return AffinePoint::Infinity;
    }
    let nbits = k.bits();
    let mut d = p.clone();
    rec.push(StepKind::Seed, 1, 1, 0, false);
    let mut i = nbits - 1; // index of the bit the accumulator covers
    while i > 0 {
        let mut zeros = 0u64;
        let mut t = i as i64 - 1;
        while t >= 0 && !k.bit(t as u64) {
            zeros += 1;
            t -= 1;
        }
        if t >= 0 {
            let n = zeros + 1;
            // leading chunks as bare doubling blocks, final chunk fused
            // with the base-point addition
            let last = (n - 1) % 4 + 1;
            let mut lead = n - last;
            while lead > 0 {
                let chunk = lead.min(32);
                let pre = *ctr;
                d = double_knapsack(&d, chunk, e, ctr);
                rec.push(StepKind::DoubleBlock, 0, 1 << chunk, ctr.delta_since(&pre).inv, false);
                lead -= chunk;
            }
            let pre = *ctr;
            d = fused_double_add(last, &d, p, e, ctr);
            rec.push(StepKind::PromoteAdd, 1, 1 << last, ctr.delta_since(&pre).inv, true);
            i = t as u64;
        } else {
            let mut remaining = zeros;
            while remaining > 0 {
                let chunk = remaining.min(32);
                let pre = *ctr;
                d = double_knapsack(&d, chunk, e, ctr);
                rec.push(StepKind::DoubleBlock, 0, 1 << chunk, ctr.delta_since(&pre).inv, false);
                remaining -= chunk;
            }
            break;
        }
    }
    rec.set_total(ctr.delta_since(&before));
    d
}

/// Memoized affine multiples of a fixed base point, keyed by magnitude.
/// Negative digits are served by negating on the fly (inversion-free).
#[derive(Debug, Default)]
pub struct PointMemo {
    multiples: HashMap<u32, AffinePoint>,
}

impl PointMemo {
    pub fn new() -> Self {
        PointMemo::default()
    }

    pub fn get(&self, magnitude: u32) -> Option<&AffinePoint> {
        self.multiples.get(&magnitude)
    }

    pub fn insert(&mut self, magnitude: u32, point: AffinePoint) {
        self.multiples.insert(magnitude, point);
    }

    pub fn len(&self) -> usize {
        self.multiples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.multiples.is_empty()
    }

    /// Materializes `[|m|]P` for every digit magnitude in `digits`,
    /// charging the supplied counter (callers use a scratch counter to
    /// model a precomputed table).
    pub fn precompute<I: IntoIterator<Item = u32>>(
        &mut self,
        digits: I,
        p: &AffinePoint,
        e: &CurveParams,
        ctr: &mut OpCounter,
    ) {
        for magnitude in digits {
            if magnitude == 0 || self.multiples.contains_key(&magnitude) {
                continue;
            }
            let r = mul_small(magnitude, p, e, ctr);
            self.multiples.insert(magnitude, r.point);
        }
    }

    fn lookup_signed(
        &self,
        m: i64,
        e: &CurveParams,
        ctr: &mut OpCounter,
    ) -> Option<AffinePoint> {
        let mag = m.unsigned_abs() as u32;
        let point = self.multiples.get(&mag)?;
        Some(if m < 0 {
            point_negate(point, e, ctr)
        } else {
            point.clone()
        })
    }
}

/// One digit step of the mixed ladder: `[B]D + [m]P`.
///
/// A memoized `[|m|]P` is added as an affine point through the fused
/// double-and-add block; otherwise the digit multiple is built as a second
/// chain inside the same block (`doublek_plus_mq`), costing no extra
/// inversion. The promotion spends `ceil(log2(B)/4)` inversions either
/// way.
pub fn radix_promote_and_add(
    d: &AffinePoint,
    m: i64,
    base: u32,
    p: &AffinePoint,
    memo: &mut PointMemo,
    e: &CurveParams,
    ctr: &mut OpCounter,
) -> AffinePoint {
    assert!(base.is_power_of_two() && (2..=32).contains(&base));
    let lb = base.trailing_zeros() as u64;
    if d.is_infinity() {
        // [B]O + [m]P = [m]P
        if m == 0 {
            return AffinePoint::Infinity;
        }
        if let Some(pt) = memo.lookup_signed(m, e, ctr) {
            return pt;
        }
        let r = mul_small(m.unsigned_abs() as u32, p, e, ctr);
        memo.insert(m.unsigned_abs() as u32, r.point.clone());
        return if m < 0 {
            point_negate(&r.point, e, ctr)
        } else {
            r.point
        };
    }
    if m == 0 {
        return double_knapsack(d, lb, e, ctr);
    }
    if let Some(addend) = memo.lookup_signed(m, e, ctr) {
        return promote_and_add_affine(lb, d, &addend, e, ctr);
    }
    let mag = m.unsigned_abs() as u32;
    if mag == 1 {
        let addend = if m < 0 {
            point_negate(p, e, ctr)
        } else {
            p.clone()
        };
        return promote_and_add_affine(lb, d, &addend, e, ctr);
    }
    // Fused path: promote all but the last chunk, then merge the digit
    // chain into the final block.
    let last = (lb - 1) % 4 + 1;
    let lead = lb - last;
    let promoted = double_knapsack(d, lead, e, ctr);
    if promoted.is_infinity() {
        // degenerate accumulator; fall back to the memo path
        let r = mul_small(mag, p, e, ctr);
        memo.insert(mag, r.point.clone());
        return if m < 0 {
            point_negate(&r.point, e, ctr)
        } else {
            r.point
        };
    }
    let q = if m < 0 {
        point_negate(p, e, ctr)
    } else {
        p.clone()
    };
    unwrap_block(
        doublek_plus_mq(last as u32, mag, &promoted, &q, e, ctr),
        || {
            let t = primitive_doubles(&promoted, last, e, ctr);
            let digit = scalar_mul_reference(&mag.into(), &q, e, ctr);
            point_add(&t, &digit, e, ctr)
        },
    )
}

/// Left-to-right evaluation of the mixed base-16/32 signed recoding.
pub fn l2r_naf_mix(
    k: &BigUint,
    p: &AffinePoint,
    e: &CurveParams,
    ctr: &mut OpCounter,
    trace: Option<&mut LadderTrace>,
) -> AffinePoint {
    let before = *ctr;
    let mut rec = Recorder::new(trace, "l2r-naf", TraceOrder::MsbFirst);
    let repr = mixed_naf_knapsack(k);
    if repr.is_empty() {
        rec.set_total(ctr.delta_since(&before));
        return AffinePoint::Infinity;
    }
    let digits = repr.digits_msb();
    let bases = repr.bases_msb();
    let mut memo = PointMemo::new();
    let lead = digits[0];
    debug_assert!(lead > 0, "leading mixed digit is positive by construction");
    let pre = *ctr;
    let seeded = mul_small(lead as u32, p, e, ctr);
    memo.insert(lead as u32, seeded.point.clone());
    let mut d = seeded.point;
    rec.push(StepKind::Seed, lead as i64, 1, ctr.delta_since(&pre).inv, false);
    for idx in 1..digits.len() {
        // Horner: stepping down to position i multiplies by B_i, the base
        // stored at the incoming digit's own position
        let base = bases[idx];
        let m = digits[idx] as i64;
        let pre = *ctr;
        d = radix_promote_and_add(&d, m, base, p, &mut memo, e, ctr);
        rec.push(
            StepKind::PromoteAdd,
            m,
            base as u64,
            ctr.delta_since(&pre).inv,
            true,
        );
    }
    rec.set_total(ctr.delta_since(&before));
    d
}

/// Horner evaluation over base-16 digits: the leading digit seeds the
/// accumulator (one small multiplication), every later digit is one fused
/// `[16]D + [digit]P` block. Digit multiples come from the memo when
/// present.
pub fn base16_horner(
    k: &BigUint,
    p: &AffinePoint,
    e: &CurveParams,
    memo: &mut PointMemo,
    ctr: &mut OpCounter,
    trace: Option<&mut LadderTrace>,
) -> AffinePoint {
    let before = *ctr;
    let mut rec = Recorder::new(trace, "base16", TraceOrder::MsbFirst);
    if k.is_zero() {
        rec.set_total(ctr.delta_since(&before));
        return AffinePoint::Infinity;
    }
    let digits = base16_digits_msb(k);
    let lead = digits[0] as u32;
    let pre = *ctr;
    let seeded = mul_small(lead, p, e, ctr);
    memo.insert(lead, seeded.point.clone());
    let mut d = seeded.point;
    rec.push(StepKind::Seed, lead as i64, 1, ctr.delta_since(&pre).inv, false);
    for digit in &digits[1..] {
        let pre = *ctr;
        d = radix_promote_and_add(&d, *digit as i64, 16, p, memo, e, ctr);
        rec.push(
            StepKind::PromoteAdd,
            *digit as i64,
            16,
            ctr.delta_since(&pre).inv,
            true,
        );
    }
    rec.set_total(ctr.delta_since(&before));
    d
}

/// Computes `P + [k]Q` with the chosen strategy. Right-to-left ladders
/// integrate `P` as the initial accumulator; left-to-right strategies add
/// it to the finished multiple (both orders provably agree).
pub fn kernel_compute(
    k: &BigUint,
    p: &AffinePoint,
    q: &AffinePoint,
    e: &CurveParams,
    algorithm: LadderAlgorithm,
    ctr: &mut OpCounter,
    trace: Option<&mut LadderTrace>,
) -> AffinePoint {
    match algorithm {
        LadderAlgorithm::Reference => {
            let kq = scalar_mul_reference(k, q, e, ctr);
            point_add(p, &kq, e, ctr)
        }
        LadderAlgorithm::ThreePoint => three_point_ladder(k, p, q, e, ctr, trace),
        LadderAlgorithm::RightToLeft => r2l_core(k, q, e, Some(p), true, ctr, trace, "r2l"),
        LadderAlgorithm::RightToLeftKnapsack => {
            r2l_core(k, q, e, Some(p), false, ctr, trace, "r2l-knap")
        }
        LadderAlgorithm::LeftToRightDoubleAdd => {
            let kq = l2r_double_add(k, q, e, ctr, trace);
            point_add(p, &kq, e, ctr)
        }
        LadderAlgorithm::LeftToRightNafMix => {
            let kq = l2r_naf_mix(k, q, e, ctr, trace);
            point_add(p, &kq, e, ctr)
        }
        LadderAlgorithm::Base16 => {
            let mut memo = PointMemo::new();
            let kq = base16_horner(k, q, e, &mut memo, ctr, trace);
            point_add(p, &kq, e, ctr)
        }
    }
}

/// Plain `[k]P` with the chosen strategy.
pub fn scalar_multiply(
    k: &BigUint,
    p: &AffinePoint,
    e: &CurveParams,
    algorithm: LadderAlgorithm,
    ctr: &mut OpCounter,
    trace: Option<&mut LadderTrace>,
) -> AffinePoint {
    match algorithm {
        LadderAlgorithm::Reference => scalar_mul_reference(k, p, e, ctr),
        LadderAlgorithm::ThreePoint => {
            three_point_ladder(k, &AffinePoint::Infinity, p, e, ctr, trace)
        }
        LadderAlgorithm::RightToLeft => r2l_multiply(k, p, e, ctr, trace),
        LadderAlgorithm::RightToLeftKnapsack => r2l_knapsack(k, p, e, ctr, trace),
        LadderAlgorithm::LeftToRightDoubleAdd => l2r_double_add(k, p, e, ctr, trace),
        LadderAlgorithm::LeftToRightNafMix => l2r_naf_mix(k, p, e, ctr, trace),
        LadderAlgorithm::Base16 => {
            let mut memo = PointMemo::new();
            base16_horner(k, p, e, &mut memo, ctr, trace)
        }
    }
}

/// Table of `[2^i]Q` for `i < bits`, for the fixed-base kernel phase.
pub fn precompute_doubles_table(
    q: &AffinePoint,
    bits: u64,
    e: &CurveParams,
    ctr: &mut OpCounter,
) -> Vec<AffinePoint> {
    let mut table = Vec::with_capacity(bits as usize);
    let mut acc = q.clone();
    for _ in 0..bits {
        table.push(acc.clone());
        acc = point_double(&acc, e, ctr);
    }
    table
}

/// `P + [k]Q` from a precomputed doubles table: additions only, no
/// doublings at evaluation time.
pub fn kernel_with_table(
    k: &BigUint,
    p: &AffinePoint,
    table: &[AffinePoint],
    e: &CurveParams,
    ctr: &mut OpCounter,
) -> AffinePoint {
    assert!(
        k.bits() as usize <= table.len(),
        "doubles table too short for scalar"
    );
    let mut acc = p.clone();
    for i in 0..k.bits() {
        if k.bit(i) {
            acc = point_add(&acc, &table[i as usize], e, ctr);
        }
    }
    acc
}
