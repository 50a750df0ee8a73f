//! `ecfast verify`: runs the oracle-equivalence and single-inversion
//! sweeps against a curve file; exits 0 only if every check passes,
//! printing a one-line reproduction for the first failures otherwise.

use std::path::PathBuf;

use clap::Args;
use num_bigint::BigUint;
use rayon::prelude::*;

use ecfast::composite::{
    double2, double3, double4, doublek_plus_2q, doublek_plus_mq, doublek_plus_point, mul_small,
    primitive_double_n, six_q_alt, ten_q_alt, triple,
};
use ecfast::curve::{
    point_add, random_point, scalar_mul_reference, AffinePoint, CurveParams,
};
use ecfast::fp::OpCounter;
use ecfast::ladders::{kernel_compute, scalar_multiply, LadderAlgorithm};
use ecfast::rng::XorShift64Star;

use crate::{load_curve, resolve_seed, CliError};

#[derive(Args)]
pub struct VerifyArgs {
    /// Curve file to load.
    #[arg(long)]
    curve: PathBuf,
    /// Check every scalar below 2^n.
    #[arg(long, default_value_t = 8)]
    exhaustive_bits: u32,
    /// Number of random scalars/points on top of the exhaustive sweep.
    #[arg(long, default_value_t = 25)]
    random_trials: u64,
    /// RNG seed (ECC_SEED overrides the default when the flag is absent).
    #[arg(long)]
    seed: Option<u64>,
}

fn describe(p: &AffinePoint) -> String {
    match p {
        AffinePoint::Infinity => "infinity".to_string(),
        AffinePoint::Finite { x, y } => format!("({}, {})", x.to_hex(), y.to_hex()),
    }
}

/// One failed check, printable as a minimal reproduction.
struct Failure {
    curve: String,
    point: String,
    k: String,
    algo: String,
}

impl Failure {
    fn print(&self) {
        println!(
            "FAIL: curve={} point={} k={} algo={}",
            self.curve, self.point, self.k, self.algo
        );
    }
}

fn check_ladders(
    e: &CurveParams,
    base: &AffinePoint,
    scalars: &[BigUint],
) -> Vec<Failure> {
    scalars
        .par_iter()
        .flat_map(|k| {
            let mut failures = Vec::new();
            let mut ctr = OpCounter::new();
            let expected = scalar_mul_reference(k, base, e, &mut ctr);
            for algo in LadderAlgorithm::all() {
                let got = scalar_multiply(k, base, e, *algo, &mut ctr, None);
                if got != expected {
                    failures.push(Failure {
                        curve: e.name().to_string(),
                        point: describe(base),
                        k: format!("{k:x}"),
                        algo: algo.name().to_string(),
                    });
                }
            }
            // kernel shape, seeded with the doubled base
            let p = ecfast::curve::point_double(base, e, &mut ctr);
            let kernel_expected = point_add(&p, &expected, e, &mut ctr);
            for algo in LadderAlgorithm::all() {
                let got = kernel_compute(k, &p, base, e, *algo, &mut ctr, None);
                if got != kernel_expected {
                    failures.push(Failure {
                        curve: e.name().to_string(),
                        point: describe(base),
                        k: format!("{k:x}"),
                        algo: format!("kernel-{}", algo.name()),
                    });
                }
            }
            failures
        })
        .collect()
}

fn check_composites(e: &CurveParams, points: &[AffinePoint]) -> Vec<Failure> {
    points
        .par_iter()
        .flat_map(|p| {
            let mut failures = Vec::new();
            let mut ctr = OpCounter::new();
            let mut oracle = OpCounter::new();
            let mut push = |what: &str, point: &AffinePoint| {
                failures.push(Failure {
                    curve: e.name().to_string(),
                    point: describe(point),
                    k: "-".to_string(),
                    algo: what.to_string(),
                });
            };
            let mut check = |what: &str,
                             got: Result<ecfast::composite::CompositeResult, _>,
                             expected: AffinePoint| {
                match got {
                    Ok(r) => {
                        if r.point != expected || r.inversions_used != 1 {
                            push(what, p);
                        }
                    }
                    // degenerate raises are legal; wrong points are not
                    Err(_) => {}
                }
            };
            let d2 = primitive_double_n(2, p, e, &mut oracle);
            check("double2", double2(p, e, &mut ctr), d2);
            let d3 = primitive_double_n(3, p, e, &mut oracle);
            check("double3", double3(p, e, &mut ctr), d3);
            let d4 = primitive_double_n(4, p, e, &mut oracle);
            check("double4", double4(p, e, &mut ctr), d4);
            let t3 = scalar_mul_reference(&3u32.into(), p, e, &mut oracle);
            check("triple", triple(p, e, &mut ctr), t3);
            let s6 = scalar_mul_reference(&6u32.into(), p, e, &mut oracle);
            check("six-q-alt", six_q_alt(p, e, &mut ctr), s6.clone());
            let t10 = scalar_mul_reference(&10u32.into(), p, e, &mut oracle);
            check("ten-q-alt", ten_q_alt(p, e, &mut ctr), t10);
            let five = scalar_mul_reference(&5u32.into(), p, e, &mut oracle);
            check("double2-plus-p", doublek_plus_point(2, p, p, e, &mut ctr), five);
            check("double2-plus-2q", doublek_plus_2q(2, p, p, e, &mut ctr), s6);
            let eleven = scalar_mul_reference(&11u32.into(), p, e, &mut oracle);
            check(
                "double3-plus-3q",
                doublek_plus_mq(3, 3, p, p, e, &mut ctr),
                eleven,
            );
            for c in 1u32..=31 {
                let expected = scalar_mul_reference(&c.into(), p, e, &mut oracle);
                let r = mul_small(c, p, e, &mut ctr);
                if r.point != expected {
                    push(&format!("mul-small-{c}"), p);
                }
            }
            failures
        })
        .collect()
}

pub fn run(args: VerifyArgs) -> Result<(), CliError> {
    // test builds can arm fault injection through the environment
    ecfast::hooks::arm_from_env();
    let file = load_curve(&args.curve)?;
    let (e, base) = file.to_curve().map_err(CliError::invalid)?;
    let seed = resolve_seed(args.seed);
    let mut rng = XorShift64Star::new(seed);

    if args.exhaustive_bits == 0 && args.random_trials == 0 {
        println!("nothing to do: 0 exhaustive bits, 0 random trials");
        return Ok(());
    }
    let base = match base {
        Some(b) => b,
        None => random_point(&e, &mut rng),
    };

    let mut scalars: Vec<BigUint> = (0..(1u64 << args.exhaustive_bits.min(20)))
        .map(BigUint::from)
        .collect();
    if args.exhaustive_bits == 0 {
        scalars.clear();
    }
    let scalar_bits = e.ctx().bit_length();
    for _ in 0..args.random_trials {
        scalars.push(rng.next_biguint_bits(scalar_bits));
    }
    let mut points: Vec<AffinePoint> = Vec::new();
    for _ in 0..args.random_trials.max(1) {
        points.push(random_point(&e, &mut rng));
    }

    let mut failures = check_ladders(&e, &base, &scalars);
    println!(
        "ladder sweep: {} scalars x {} algorithms (plus kernel forms): {}",
        scalars.len(),
        LadderAlgorithm::all().len(),
        if failures.is_empty() { "ok" } else { "FAILED" }
    );
    let composite_failures = check_composites(&e, &points);
    println!(
        "composite sweep: {} points x 40 forms: {}",
        points.len(),
        if composite_failures.is_empty() {
            "ok"
        } else {
            "FAILED"
        }
    );
    failures.extend(composite_failures);

    if failures.is_empty() {
        println!("verify: all checks passed");
        Ok(())
    } else {
        for f in failures.iter().take(10) {
            f.print();
        }
        Err(CliError {
            code: 1,
            message: format!("{} checks failed", failures.len()),
        })
    }
}
