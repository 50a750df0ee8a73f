//! `ecfast bench`: operation-count comparison of the composite forms
//! against their primitive compositions, plus full-ladder rows, written as
//! CSV.
//!
//! Counts are deterministic functions of the seed (the op sequences of all
//! routines are value-independent on torsion-free curves), so every count
//! column is byte-identical across runs with the same seed. Wall times are
//! reported for orientation only and excluded from that guarantee.

use std::path::PathBuf;
use std::time::Instant;

use clap::Args;

use ecfast::composite::{
    double2, double3, double4, doublek_plus_mq, doublek_plus_point, primitive_double_n,
    six_q_alt, ten_q_alt, triple,
};
use ecfast::curve::{point_add, point_double, random_point, scalar_mul_reference, CurveParams};
use ecfast::fp::{FieldElement, OpCounter, PrimeModulus};
use ecfast::ladders::{kernel_compute, scalar_multiply, LadderAlgorithm};
use ecfast::montgomery::{mont_ladder, MontgomeryCurve};
use ecfast::rng::XorShift64Star;

use crate::{load_curve, resolve_seed, CliError};

#[derive(Args)]
pub struct BenchArgs {
    /// Curve file to load.
    #[arg(long)]
    curve: PathBuf,
    /// Trials per routine (counts are per-trial means; they do not vary).
    #[arg(long, default_value_t = 10)]
    trials: u64,
    /// Output CSV path (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    /// RNG seed (ECC_SEED overrides the default when the flag is absent).
    #[arg(long)]
    seed: Option<u64>,
}

struct Row {
    routine: &'static str,
    ops: OpCounter,
    wall_ns: u128,
}

/// Accumulated per-routine tallies for one bench invocation. A row's
/// counts are summed over trials and rendered as per-trial means.
struct CostReport {
    curve: String,
    trials: u64,
    rows: Vec<Row>,
}

impl CostReport {
    fn new(curve: &str, trials: u64) -> Self {
        CostReport {
            curve: curve.to_string(),
            trials,
            rows: Vec::new(),
        }
    }

    fn timed(&mut self, routine: &'static str, runs: &mut dyn FnMut(&mut OpCounter)) {
        let mut ctr = OpCounter::new();
        let start = Instant::now();
        runs(&mut ctr);
        let wall_ns = start.elapsed().as_nanos();
        match self.rows.iter_mut().find(|r| r.routine == routine) {
            Some(row) => {
                row.ops += ctr;
                row.wall_ns += wall_ns;
            }
            None => self.rows.push(Row {
                routine,
                ops: ctr,
                wall_ns,
            }),
        }
    }

    fn to_csv(&self) -> String {
        let mut csv = String::from("routine,mul,sqr,add_sub,inv,wall_ns_mean\n");
        for row in &self.rows {
            csv.push_str(&format!(
                "{},{},{},{},{},{}\n",
                row.routine,
                row.ops.mul / self.trials,
                row.ops.sqr / self.trials,
                row.ops.add_sub / self.trials,
                row.ops.inv / self.trials,
                row.wall_ns / self.trials as u128
            ));
        }
        csv
    }
}

/// Montgomery baseline over the same field when the file does not carry
/// its own Montgomery form: A = 6, B = 1 (valid for any odd prime > 5;
/// op counts are what the row is for).
fn montgomery_baseline(
    file: &crate::curvefile::CurveFile,
    e: &CurveParams,
) -> Result<(MontgomeryCurve, FieldElement), CliError> {
    if let Some(pair) = file.to_montgomery().map_err(CliError::invalid)? {
        return Ok(pair);
    }
    let ctx = PrimeModulus::new(e.ctx().prime().clone()).expect("validated prime");
    let curve = MontgomeryCurve::new(
        ctx.clone(),
        FieldElement::from_u64(6, &ctx),
        FieldElement::from_u64(1, &ctx),
    )
    .expect("A=6, B=1 is nonsingular");
    let base_x = FieldElement::from_u64(2, &ctx);
    Ok((curve, base_x))
}

pub fn run(args: BenchArgs) -> Result<(), CliError> {
    let file = load_curve(&args.curve)?;
    let (e, base) = file.to_curve().map_err(CliError::invalid)?;
    let (mont, mont_x) = montgomery_baseline(&file, &e)?;
    let seed = resolve_seed(args.seed);
    let mut rng = XorShift64Star::new(seed);
    let trials = args.trials.max(1);

    // one scalar for all ladder rows, fixed by the seed
    let k = rng.next_biguint_bits(e.ctx().bit_length());
    let mut report = CostReport::new(e.name(), trials);

    for _ in 0..trials {
        let p = base.clone().unwrap_or_else(|| random_point(&e, &mut rng));
        let q = random_point(&e, &mut rng);

        // composite forms vs their primitive compositions
        report.timed("4P-composite", &mut |c| {
            let _ = double2(&p, &e, c).map(|r| r.point).unwrap_or_else(|_| primitive_double_n(2, &p, &e, c));
        });
        report.timed("4P-primitive", &mut |c| {
            let _ = primitive_double_n(2, &p, &e, c);
        });
        report.timed("8P-composite", &mut |c| {
            let _ = double3(&p, &e, c).map(|r| r.point).unwrap_or_else(|_| primitive_double_n(3, &p, &e, c));
        });
        report.timed("8P-primitive", &mut |c| {
            let _ = primitive_double_n(3, &p, &e, c);
        });
        report.timed("16P-composite", &mut |c| {
            let _ = double4(&p, &e, c).map(|r| r.point).unwrap_or_else(|_| primitive_double_n(4, &p, &e, c));
        });
        report.timed("16P-primitive", &mut |c| {
            let _ = primitive_double_n(4, &p, &e, c);
        });
        report.timed("3P-composite", &mut |c| {
            let _ = triple(&p, &e, c);
        });
        report.timed("3P-primitive", &mut |c| {
            let _ = point_add(&point_double(&p, &e, c), &p, &e, c);
        });
        report.timed("6P-alt-composite", &mut |c| {
            let _ = six_q_alt(&p, &e, c);
        });
        report.timed("10P-alt-composite", &mut |c| {
            let _ = ten_q_alt(&p, &e, c);
        });
        report.timed("5P-fused", &mut |c| {
            let _ = doublek_plus_point(2, &p, &p, &e, c);
        });
        report.timed("11P-fused", &mut |c| {
            let _ = doublek_plus_mq(3, 3, &p, &q, &e, c);
        });

        // full multiplications with the seeded scalar
        report.timed("mul-ref", &mut |c| {
            let _ = scalar_mul_reference(&k, &p, &e, c);
        });
        for algo in [
            LadderAlgorithm::RightToLeft,
            LadderAlgorithm::RightToLeftKnapsack,
            LadderAlgorithm::LeftToRightDoubleAdd,
            LadderAlgorithm::LeftToRightNafMix,
            LadderAlgorithm::Base16,
        ] {
            let routine = match algo {
                LadderAlgorithm::RightToLeft => "mul-r2l",
                LadderAlgorithm::RightToLeftKnapsack => "mul-r2l-knap",
                LadderAlgorithm::LeftToRightDoubleAdd => "mul-l2r-da",
                LadderAlgorithm::LeftToRightNafMix => "mul-l2r-naf",
                _ => "mul-base16",
            };
            report.timed(routine, &mut |c| {
                let _ = scalar_multiply(&k, &p, &e, algo, c, None);
            });
        }
        report.timed("kernel-three-point", &mut |c| {
            let _ = kernel_compute(&k, &p, &q, &e, LadderAlgorithm::ThreePoint, c, None);
        });
        report.timed("montgomery-xz", &mut |c| {
            let _ = mont_ladder(&k, &mont_x, &mont, c);
        });
    }

    let csv = report.to_csv();
    match &args.out {
        Some(path) => std::fs::write(path, &csv)
            .map_err(|err| CliError::invalid(format!("cannot write {}: {err}", path.display())))?,
        None => print!("{csv}"),
    }
    eprintln!(
        "bench: {} routines x {} trials on {} (seed {seed}, k = {:x})",
        report.rows.len(),
        report.trials,
        report.curve,
        k
    );
    Ok(())
}
