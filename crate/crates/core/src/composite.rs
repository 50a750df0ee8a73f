//! Single-inversion composite point operations.
//!
//! An affine doubling or addition classically spends one field inversion on
//! its slope denominator. The operations here avoid that by carrying every
//! intermediate point as a fraction pair
//!
//! ```text
//! x = Nx / U^2,   y = Ny / U^3
//! ```
//!
//! and factoring each new slope denominator as a multiple of the previous
//! accumulated denominator (`U' = U * q`). All stages of a multi-step
//! operation then share one denominator, and a single inversion of the
//! final `U` recovers the affine result. That yields `[4]P`, `[8]P`,
//! `[16]P`, `[3]P`, and the combined forms `[2^n]Q + P`, `[2^n]P + [2]Q`,
//! `[2^n]P + [m]Q` with exactly one inversion each.
//!
//! Degenerate inputs (a two-torsion intermediate, colliding chain terms, or
//! a point at infinity fed to a raw formula) zero a denominator. They are
//! detected *before* the final inversion and reported as
//! [`CompositeError::DegenerateChain`]; callers fall back to the primitive
//! operations from [`crate::curve`]. Such inputs only exist for tiny-order
//! points, but the exhaustive small-curve suites must stay total.

use thiserror::Error;

use crate::curve::{point_double, scalar_mul_reference, AffinePoint, CurveParams};
use crate::fp::{FieldElement, OpCounter};
use crate::hooks;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CompositeError {
    #[error("degenerate chain at {stage}")]
    DegenerateChain { stage: String },
}

fn degenerate(stage: impl Into<String>) -> CompositeError {
    CompositeError::DegenerateChain {
        stage: stage.into(),
    }
}

/// Intermediate state of a denominator chain.
///
/// `nx / u^2` and `ny / u^3` are the coordinates of the multiple computed
/// so far; `w` is the numerator of the most recent slope and `q` the
/// cofactor the most recent stage contributed to `u` (`u = u_prev * q`).
#[derive(Debug, Clone)]
pub struct SlopeChain {
    w: FieldElement,
    q: FieldElement,
    u: FieldElement,
    nx: FieldElement,
    ny: FieldElement,
    stage: u32,
}

impl SlopeChain {
    /// Starts a chain at a finite point (`u = 1`).
    pub fn from_affine(p: &AffinePoint, _e: &CurveParams) -> Result<Self, CompositeError> {
        match p {
            AffinePoint::Infinity => Err(degenerate("input: point at infinity")),
            AffinePoint::Finite { x, y } => {
                let ctx = x.ctx();
                Ok(SlopeChain {
                    w: FieldElement::zero(ctx),
                    q: FieldElement::one(ctx),
                    u: FieldElement::one(ctx),
                    nx: x.clone(),
                    ny: y.clone(),
                    stage: 0,
                })
            }
        }
    }

    pub fn w(&self) -> &FieldElement {
        &self.w
    }

    pub fn q(&self) -> &FieldElement {
        &self.q
    }

    pub fn u(&self) -> &FieldElement {
        &self.u
    }

    pub fn nx(&self) -> &FieldElement {
        &self.nx
    }

    pub fn ny(&self) -> &FieldElement {
        &self.ny
    }

    /// Doubles the chain point in place.
    ///
    /// With `x = Nx/U^2`, `y = Ny/U^3`, the tangent slope becomes
    /// `(3Nx^2 + aU^4) / (2Ny * U)`, so the stage contributes `q = 2Ny`:
    ///
    /// ```text
    /// W'  = 3*Nx^2 + a*U^4
    /// Nx' = W'^2 - 8*Nx*Ny^2
    /// Ny' = W'*(4*Nx*Ny^2 - Nx') - 8*Ny^4
    /// U'  = (2*Ny)*U
    /// ```
    pub fn double_stage(&mut self, e: &CurveParams, ctr: &mut OpCounter) -> Result<(), CompositeError> {
        if self.ny.is_zero() {
            return Err(degenerate(format!(
                "double stage {}: 2y = 0 (two-torsion intermediate)",
                self.stage + 1
            )));
        }
        let u2 = self.u.sqr(ctr);
        let u4 = u2.sqr(ctr);
        let nx2 = self.nx.sqr(ctr);
        let three_nx2 = nx2.add(&nx2, ctr).add(&nx2, ctr);
        let w = three_nx2.add(&e.a().mul(&u4, ctr), ctr);
        let ny2 = self.ny.sqr(ctr);
        let t = self.nx.mul(&ny2, ctr);
        let t2 = t.add(&t, ctr);
        let t4 = t2.add(&t2, ctr);
        let t8 = t4.add(&t4, ctr);
        let w2 = w.sqr(ctr);
        let nx_next = w2.sub(&t8, ctr);
        let s = t4.sub(&nx_next, ctr);
        let ny4 = ny2.sqr(ctr);
        let ny4_2 = ny4.add(&ny4, ctr);
        let ny4_4 = ny4_2.add(&ny4_2, ctr);
        let ny4_8 = ny4_4.add(&ny4_4, ctr);
        let ny_next = w.mul(&s, ctr).sub(&ny4_8, ctr);
        let q_next = self.ny.add(&self.ny, ctr);
        let u_next = self.u.mul(&q_next, ctr);
        self.w = w;
        self.q = q_next;
        self.u = u_next;
        self.nx = nx_next;
        self.ny = ny_next;
        self.stage += 1;
        self.debug_check(e);
        Ok(())
    }

    /// Adds a fixed affine point to the chain in place.
    ///
    /// The chord slope `(Ny - ya*U^3) / (U*(Nx - xa*U^2))` contributes the
    /// cofactor `q = Nx - xa*U^2`:
    ///
    /// ```text
    /// W'  = Ny - ya*U^3
    /// U'  = U*q
    /// Nx' = W'^2 - xa*U'^2 - Nx*q^2
    /// Ny' = W'*(xa*U'^2 - Nx') - ya*U'^3
    /// ```
    pub fn add_affine_stage(
        &mut self,
        xa: &FieldElement,
        ya: &FieldElement,
        e: &CurveParams,
        ctr: &mut OpCounter,
    ) -> Result<(), CompositeError> {
        let u2 = self.u.sqr(ctr);
        let u3 = u2.mul(&self.u, ctr);
        let q = self.nx.sub(&xa.mul(&u2, ctr), ctr);
        if q.is_zero() {
            return Err(degenerate(format!(
                "add stage {}: x-coordinates collide",
                self.stage + 1
            )));
        }
        let w = self.ny.sub(&ya.mul(&u3, ctr), ctr);
        let u_next = self.u.mul(&q, ctr);
        let q2 = q.sqr(ctr);
        let up2 = u_next.sqr(ctr);
        let w2 = w.sqr(ctr);
        let xa_up2 = xa.mul(&up2, ctr);
        let nx_next = w2.sub(&xa_up2, ctr).sub(&self.nx.mul(&q2, ctr), ctr);
        let s = xa_up2.sub(&nx_next, ctr);
        let up3 = up2.mul(&u_next, ctr);
        let ny_next = w.mul(&s, ctr).sub(&ya.mul(&up3, ctr), ctr);
        self.w = w;
        self.q = q;
        self.u = u_next;
        self.nx = nx_next;
        self.ny = ny_next;
        self.stage += 1;
        self.debug_check(e);
        Ok(())
    }

    /// Merges another chain into this one by chord addition. Both
    /// accumulated denominators fold into the merged one:
    ///
    /// ```text
    /// q   = Nx_a*U_b^2 - Nx_b*U_a^2
    /// W'  = Ny_a*U_b^3 - Ny_b*U_a^3
    /// U'  = U_a*U_b*q
    /// Nx' = W'^2 - (Nx_a*U_b^2 + Nx_b*U_a^2)*q^2
    /// Ny' = W'*(Nx_a*U_b^2*q^2 - Nx') - Ny_a*U_b^3*q^3
    /// ```
    pub fn add_chain_stage(
        &mut self,
        other: &SlopeChain,
        e: &CurveParams,
        ctr: &mut OpCounter,
    ) -> Result<(), CompositeError> {
        let ua2 = self.u.sqr(ctr);
        let ub2 = other.u.sqr(ctr);
        let ua3 = ua2.mul(&self.u, ctr);
        let ub3 = ub2.mul(&other.u, ctr);
        let nxa_ub2 = self.nx.mul(&ub2, ctr);
        let nxb_ua2 = other.nx.mul(&ua2, ctr);
        let q = nxa_ub2.sub(&nxb_ua2, ctr);
        if q.is_zero() {
            return Err(degenerate(format!(
                "chain merge at stage {}: chains collide (equal x)",
                self.stage + 1
            )));
        }
        let nya_ub3 = self.ny.mul(&ub3, ctr);
        let nyb_ua3 = other.ny.mul(&ua3, ctr);
        let w = nya_ub3.sub(&nyb_ua3, ctr);
        let u_next = self.u.mul(&other.u, ctr).mul(&q, ctr);
        let q2 = q.sqr(ctr);
        let w2 = w.sqr(ctr);
        let sum = nxa_ub2.add(&nxb_ua2, ctr);
        let nx_next = w2.sub(&sum.mul(&q2, ctr), ctr);
        let t = nxa_ub2.mul(&q2, ctr).sub(&nx_next, ctr);
        let q3 = q2.mul(&q, ctr);
        let ny_next = w.mul(&t, ctr).sub(&nya_ub3.mul(&q3, ctr), ctr);
        self.w = w;
        self.q = q;
        self.u = u_next;
        self.nx = nx_next;
        self.ny = ny_next;
        self.stage = self.stage.max(other.stage) + 1;
        self.debug_check(e);
        Ok(())
    }

    /// Performs the chain's one inversion and returns the affine point.
    pub fn finalize(&self, e: &CurveParams, ctr: &mut OpCounter) -> Result<AffinePoint, CompositeError> {
        if hooks::take_forced_degenerate() {
            return Err(degenerate("forced by fault hook"));
        }
        if self.u.is_zero() {
            return Err(degenerate("finalize: zero denominator"));
        }
        let mut nx = self.nx.clone();
        if hooks::perturb_enabled() {
            nx = nx.raw_add(&FieldElement::one(nx.ctx()));
        }
        let u_inv = self.u.inv(ctr).expect("denominator checked nonzero");
        let u_inv2 = u_inv.sqr(ctr);
        let u_inv3 = u_inv2.mul(&u_inv, ctr);
        let x = nx.mul(&u_inv2, ctr);
        let y = self.ny.mul(&u_inv3, ctr);
        let point = AffinePoint::Finite { x, y };
        debug_assert!(
            hooks::perturb_enabled() || crate::curve::is_on_curve(&point, e),
            "chain finalized off-curve"
        );
        Ok(point)
    }

    /// Homogeneous curve-membership identity, checked in debug builds after
    /// every stage: `Ny^2 = Nx^3 + a*Nx*U^4 + b*U^6`. Suspended while the
    /// perturbation hook is armed (downstream chains then legitimately
    /// start from off-curve points).
    fn debug_check(&self, e: &CurveParams) {
        if cfg!(debug_assertions) && !hooks::perturb_enabled() {
            let u2 = self.u.raw_mul(&self.u);
            let u4 = u2.raw_mul(&u2);
            let u6 = u4.raw_mul(&u2);
            let lhs = self.ny.raw_mul(&self.ny);
            let rhs = self
                .nx
                .raw_mul(&self.nx)
                .raw_mul(&self.nx)
                .raw_add(&e.a().raw_mul(&self.nx).raw_mul(&u4))
                .raw_add(&e.b().raw_mul(&u6));
            debug_assert!(lhs == rhs, "chain invariant broken at stage {}", self.stage);
        }
    }
}

/// Outcome of one composite evaluation: the point, the inversion count it
/// actually spent, and the full operation delta.
#[derive(Debug, Clone)]
pub struct CompositeResult {
    pub point: AffinePoint,
    pub inversions_used: u64,
    pub ops: OpCounter,
    /// Set when a degenerate chain forced `mul_small` onto the primitive
    /// path.
    pub fallback: bool,
}

fn run_chain<F>(
    e: &CurveParams,
    ctr: &mut OpCounter,
    build: F,
) -> Result<CompositeResult, CompositeError>
where
    F: FnOnce(&mut OpCounter) -> Result<SlopeChain, CompositeError>,
{
    let before = *ctr;
    let chain = build(ctr)?;
    let point = chain.finalize(e, ctr)?;
    let ops = ctr.delta_since(&before);
    Ok(CompositeResult {
        point,
        inversions_used: ops.inv,
        ops,
        fallback: false,
    })
}

fn double_n(
    n: u32,
    p: &AffinePoint,
    e: &CurveParams,
    ctr: &mut OpCounter,
) -> Result<CompositeResult, CompositeError> {
    run_chain(e, ctr, |ctr| {
        let mut chain = SlopeChain::from_affine(p, e)?;
        for _ in 0..n {
            chain.double_stage(e, ctr)?;
        }
        Ok(chain)
    })
}

/// `[4]P` with one inversion.
pub fn double2(
    p: &AffinePoint,
    e: &CurveParams,
    ctr: &mut OpCounter,
) -> Result<CompositeResult, CompositeError> {
    double_n(2, p, e, ctr)
}

/// `[8]P` with one inversion.
pub fn double3(
    p: &AffinePoint,
    e: &CurveParams,
    ctr: &mut OpCounter,
) -> Result<CompositeResult, CompositeError> {
    double_n(3, p, e, ctr)
}

/// `[16]P` with one inversion.
pub fn double4(
    p: &AffinePoint,
    e: &CurveParams,
    ctr: &mut OpCounter,
) -> Result<CompositeResult, CompositeError> {
    double_n(4, p, e, ctr)
}

/// `[3]P` as double-then-add with one inversion.
pub fn triple(
    p: &AffinePoint,
    e: &CurveParams,
    ctr: &mut OpCounter,
) -> Result<CompositeResult, CompositeError> {
    run_chain(e, ctr, |ctr| {
        let (xa, ya) = finite_coords(p)?;
        let mut chain = SlopeChain::from_affine(p, e)?;
        chain.double_stage(e, ctr)?;
        chain.add_affine_stage(&xa, &ya, e, ctr)?;
        Ok(chain)
    })
}

/// `[2^n]Q + P` for `n` in `1..=4`, one inversion. A point-at-infinity `P`
/// degrades to the plain repeated doubling of `Q`.
pub fn doublek_plus_point(
    n: u32,
    q: &AffinePoint,
    p: &AffinePoint,
    e: &CurveParams,
    ctr: &mut OpCounter,
) -> Result<CompositeResult, CompositeError> {
    assert!((1..=4).contains(&n), "doubling order must be 1..=4");
    run_chain(e, ctr, |ctr| {
        let mut chain = SlopeChain::from_affine(q, e)?;
        for _ in 0..n {
            chain.double_stage(e, ctr)?;
        }
        if let AffinePoint::Finite { x, y } = p {
            chain.add_affine_stage(x, y, e, ctr)?;
        }
        Ok(chain)
    })
}

/// `[2^n]P + [2]Q` for `n` in `2..=4`: two chains merged by one chord
/// addition, still one inversion. Subtraction (for forms like `[16]P -
/// [2]Q`) is obtained by negating `Q` first.
pub fn doublek_plus_2q(
    n: u32,
    p: &AffinePoint,
    q: &AffinePoint,
    e: &CurveParams,
    ctr: &mut OpCounter,
) -> Result<CompositeResult, CompositeError> {
    assert!((2..=4).contains(&n), "doubling order must be 2..=4");
    run_chain(e, ctr, |ctr| {
        if q.is_infinity() {
            let mut chain = SlopeChain::from_affine(p, e)?;
            for _ in 0..n {
                chain.double_stage(e, ctr)?;
            }
            return Ok(chain);
        }
        let mut qchain = SlopeChain::from_affine(q, e)?;
        qchain.double_stage(e, ctr)?;
        if p.is_infinity() {
            return Ok(qchain);
        }
        let mut chain = SlopeChain::from_affine(p, e)?;
        for _ in 0..n {
            chain.double_stage(e, ctr)?;
        }
        chain.add_chain_stage(&qchain, e, ctr)?;
        Ok(chain)
    })
}

/// `[2^n]P + [m]Q` for `n` in `1..=4` and `m` in `2..=16`: the `[m]Q`
/// multiple is built as its own chain from the small-multiple recipe table
/// and merged, keeping the whole form at one inversion.
pub fn doublek_plus_mq(
    n: u32,
    m: u32,
    p: &AffinePoint,
    q: &AffinePoint,
    e: &CurveParams,
    ctr: &mut OpCounter,
) -> Result<CompositeResult, CompositeError> {
    assert!((1..=4).contains(&n), "doubling order must be 1..=4");
    assert!((2..=16).contains(&m), "companion multiple must be 2..=16");
    run_chain(e, ctr, |ctr| {
        if q.is_infinity() {
            let mut chain = SlopeChain::from_affine(p, e)?;
            for _ in 0..n {
                chain.double_stage(e, ctr)?;
            }
            return Ok(chain);
        }
        let qchain = mul_small_chain(m, q, e, ctr)?;
        if p.is_infinity() {
            return Ok(qchain);
        }
        let mut chain = SlopeChain::from_affine(p, e)?;
        for _ in 0..n {
            chain.double_stage(e, ctr)?;
        }
        chain.add_chain_stage(&qchain, e, ctr)?;
        Ok(chain)
    })
}

/// `[6]P` as the double of the triple, sharing one denominator chain.
pub fn six_q_alt(
    p: &AffinePoint,
    e: &CurveParams,
    ctr: &mut OpCounter,
) -> Result<CompositeResult, CompositeError> {
    run_chain(e, ctr, |ctr| {
        let (xa, ya) = finite_coords(p)?;
        let mut chain = SlopeChain::from_affine(p, e)?;
        chain.double_stage(e, ctr)?;
        chain.add_affine_stage(&xa, &ya, e, ctr)?;
        chain.double_stage(e, ctr)?;
        Ok(chain)
    })
}

/// `[10]P` as the double of `[5]P = [4]P + P`, one inversion.
pub fn ten_q_alt(
    p: &AffinePoint,
    e: &CurveParams,
    ctr: &mut OpCounter,
) -> Result<CompositeResult, CompositeError> {
    run_chain(e, ctr, |ctr| {
        let (xa, ya) = finite_coords(p)?;
        let mut chain = SlopeChain::from_affine(p, e)?;
        chain.double_stage(e, ctr)?;
        chain.double_stage(e, ctr)?;
        chain.add_affine_stage(&xa, &ya, e, ctr)?;
        chain.double_stage(e, ctr)?;
        Ok(chain)
    })
}

fn finite_coords(p: &AffinePoint) -> Result<(FieldElement, FieldElement), CompositeError> {
    match p {
        AffinePoint::Infinity => Err(degenerate("input: point at infinity")),
        AffinePoint::Finite { x, y } => Ok((x.clone(), y.clone())),
    }
}

/// One step of a small-multiple recipe.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Step {
    /// Double the accumulator.
    Dbl,
    /// Add the base point.
    Add,
    /// Subtract the base point.
    Sub,
}

use Step::{Add, Dbl, Sub};

/// Hand-audited chain recipes for `[c]P`, `c` in `2..=31`, starting from
/// the base point. Every recipe keeps doubling runs at four or shorter (the
/// reach of the direct repeated-doubling forms) and joins them through
/// chained additions or subtractions of the base point, so each one costs
/// exactly one inversion.
const RECIPES: [&[Step]; 32] = [
    &[],                                     // 0 (unused)
    &[],                                     // 1
    &[Dbl],                                  // 2
    &[Dbl, Add],                             // 3  = 2 + 1
    &[Dbl, Dbl],                             // 4
    &[Dbl, Dbl, Add],                        // 5  = 4 + 1
    &[Dbl, Add, Dbl],                        // 6  = 2 * 3
    &[Dbl, Dbl, Dbl, Sub],                   // 7  = 8 - 1
    &[Dbl, Dbl, Dbl],                        // 8
    &[Dbl, Dbl, Dbl, Add],                   // 9  = 8 + 1
    &[Dbl, Dbl, Add, Dbl],                   // 10 = 2 * 5
    &[Dbl, Dbl, Add, Dbl, Add],              // 11 = 2 * 5 + 1
    &[Dbl, Add, Dbl, Dbl],                   // 12 = 4 * 3
    &[Dbl, Add, Dbl, Dbl, Add],              // 13 = 4 * 3 + 1
    &[Dbl, Dbl, Dbl, Sub, Dbl],              // 14 = 2 * 7
    &[Dbl, Dbl, Dbl, Dbl, Sub],              // 15 = 16 - 1
    &[Dbl, Dbl, Dbl, Dbl],                   // 16
    &[Dbl, Dbl, Dbl, Dbl, Add],              // 17 = 16 + 1
    &[Dbl, Dbl, Dbl, Add, Dbl],              // 18 = 2 * 9
    &[Dbl, Dbl, Add, Dbl, Dbl, Sub],         // 19 = 4 * 5 - 1
    &[Dbl, Dbl, Add, Dbl, Dbl],              // 20 = 4 * 5
    &[Dbl, Dbl, Add, Dbl, Dbl, Add],         // 21 = 4 * 5 + 1
    &[Dbl, Dbl, Add, Dbl, Add, Dbl],         // 22 = 2 * 11
    &[Dbl, Add, Dbl, Dbl, Dbl, Sub],         // 23 = 8 * 3 - 1
    &[Dbl, Add, Dbl, Dbl, Dbl],              // 24 = 8 * 3
    &[Dbl, Add, Dbl, Dbl, Dbl, Add],         // 25 = 8 * 3 + 1
    &[Dbl, Add, Dbl, Dbl, Add, Dbl],         // 26 = 2 * 13
    &[Dbl, Dbl, Dbl, Sub, Dbl, Dbl, Sub],    // 27 = 4 * 7 - 1
    &[Dbl, Dbl, Dbl, Sub, Dbl, Dbl],         // 28 = 4 * 7
    &[Dbl, Dbl, Dbl, Sub, Dbl, Dbl, Add],    // 29 = 4 * 7 + 1
    &[Dbl, Dbl, Dbl, Dbl, Sub, Dbl],         // 30 = 2 * 15
    &[Dbl, Add, Dbl, Add, Dbl, Add, Dbl, Add], // 31 = binary 11111
];

/// Inversion cost of `mul_small(c, ..)` on the non-degenerate path. Feeds
/// the recoding cost model.
pub fn small_multiple_inversion_cost(c: u32) -> u64 {
    match c {
        0 | 1 => 0,
        2..=31 => 1,
        _ => panic!("small multiple out of range: {c}"),
    }
}

/// Builds the `[c]P` chain for `c` in `1..=31` without finalizing it, so it
/// can be merged into a larger form.
pub fn mul_small_chain(
    c: u32,
    p: &AffinePoint,
    e: &CurveParams,
    ctr: &mut OpCounter,
) -> Result<SlopeChain, CompositeError> {
    assert!((1..=31).contains(&c), "small multiple out of range: {c}");
    let (xa, ya) = finite_coords(p)?;
    let ya_neg = ya.neg(ctr);
    let mut chain = SlopeChain::from_affine(p, e)?;
    for step in RECIPES[c as usize] {
        match step {
            Dbl => chain.double_stage(e, ctr)?,
            Add => chain.add_affine_stage(&xa, &ya, e, ctr)?,
            Sub => chain.add_affine_stage(&xa, &ya_neg, e, ctr)?,
        }
    }
    Ok(chain)
}

/// Dispatcher for `[c]P`, `c` in `1..=31`.
///
/// Infinity short-circuits with zero cost; `c = 1` returns the point
/// as-is. Every other value runs its single-inversion recipe, and a
/// degenerate chain transparently falls back to primitive double-and-add
/// (flagged in the result, never a wrong point).
pub fn mul_small(
    c: u32,
    p: &AffinePoint,
    e: &CurveParams,
    ctr: &mut OpCounter,
) -> CompositeResult {
    assert!((1..=31).contains(&c), "small multiple out of range: {c}");
    if p.is_infinity() || c == 1 {
        return CompositeResult {
            point: p.clone(),
            inversions_used: 0,
            ops: OpCounter::new(),
            fallback: false,
        };
    }
    let before = *ctr;
    let chained = run_chain(e, ctr, |ctr| mul_small_chain(c, p, e, ctr));
    match chained {
        Ok(result) => result,
        Err(_) => {
            let point = scalar_mul_reference(&c.into(), p, e, ctr);
            let ops = ctr.delta_since(&before);
            CompositeResult {
                point,
                inversions_used: ops.inv,
                ops,
                fallback: true,
            }
        }
    }
}

/// Primitive-composition oracle for `[2^n]P`: n plain doublings.
pub fn primitive_double_n(
    n: u32,
    p: &AffinePoint,
    e: &CurveParams,
    ctr: &mut OpCounter,
) -> AffinePoint {
    let mut acc = p.clone();
    for _ in 0..n {
        acc = point_double(&acc, e, ctr);
    }
    acc
}
