//! Process-wide fault-injection switches for verification tooling.
//!
//! The `verify` sweeps need to prove they can actually detect a wrong
//! composite result, and the ladder tests need to prove that a degenerate
//! chain falls back to primitive operations without changing the returned
//! point. Both require making a correct implementation misbehave on
//! demand, so the chain finalizer consults these switches.
//!
//! The switches are global atomics: callers that arm them must serialize
//! against other users of the library in the same process (the test suites
//! that use them hold a mutex). They stay off unless armed explicitly or
//! via the `ECFAST_FAULT` environment variable (`perturb-composite`, or
//! `force-degenerate:<n>` to fail the n-th chain finalization from now).

use std::sync::atomic::{AtomicBool, AtomicI64, Ordering};

static FORCE_DEGENERATE_COUNTDOWN: AtomicI64 = AtomicI64::new(-1);
static PERTURB_COMPOSITE: AtomicBool = AtomicBool::new(false);

/// Arranges for the n-th upcoming chain finalization to report a
/// degenerate chain (n = 0 fails the very next one).
pub fn force_degenerate_after(n: u64) {
    FORCE_DEGENERATE_COUNTDOWN.store(n as i64, Ordering::SeqCst);
}

/// When enabled, finalized composite results are corrupted by one, so that
/// oracle comparisons must flag them.
pub fn set_perturb_composite(enabled: bool) {
    PERTURB_COMPOSITE.store(enabled, Ordering::SeqCst);
}

/// Disarms everything.
pub fn clear() {
    FORCE_DEGENERATE_COUNTDOWN.store(-1, Ordering::SeqCst);
    PERTURB_COMPOSITE.store(false, Ordering::SeqCst);
}

/// Arms switches from `ECFAST_FAULT`, if set. Returns true when a fault was
/// armed.
pub fn arm_from_env() -> bool {
    match std::env::var("ECFAST_FAULT") {
        Ok(v) if v == "perturb-composite" => {
            set_perturb_composite(true);
            true
        }
        Ok(v) => {
            if let Some(n) = v.strip_prefix("force-degenerate:") {
                if let Ok(n) = n.parse::<u64>() {
                    force_degenerate_after(n);
                    return true;
                }
            }
            false
        }
        Err(_) => false,
    }
}

pub(crate) fn take_forced_degenerate() -> bool {
    // Decrement the countdown if armed; trigger when it passes zero.
    let prev = FORCE_DEGENERATE_COUNTDOWN.fetch_update(Ordering::SeqCst, Ordering::SeqCst, |v| {
        if v >= 0 {
            Some(v - 1)
        } else {
            None
        }
    });
    matches!(prev, Ok(0))
}

pub(crate) fn perturb_enabled() -> bool {
    PERTURB_COMPOSITE.load(Ordering::SeqCst)
}
