//! `ecfast mul`: scalar multiplication of the curve file's base point,
//! with kernel mode (`P + [k]Q`) when a second point is supplied.

use std::path::PathBuf;

use clap::Args;

use ecfast::curve::AffinePoint;
use ecfast::fp::{FieldElement, OpCounter};
use ecfast::ladders::{kernel_compute, scalar_multiply, LadderAlgorithm, LadderTrace};
use ecfast::montgomery::mont_ladder;

use crate::{load_curve, parse_hex_scalar, CliError};

#[derive(Args)]
pub struct MulArgs {
    /// Curve file to load.
    #[arg(long)]
    curve: PathBuf,
    /// Scalar, lowercase hex without prefix.
    #[arg(long)]
    k: String,
    /// Algorithm: ref, r2l, r2l-knap, l2r-da, l2r-naf, base16,
    /// three-point, or montgomery-xz.
    #[arg(long)]
    algo: String,
    /// x-coordinate of Q (hex); switches to kernel mode P + [k]Q.
    #[arg(long, requires = "qy")]
    qx: Option<String>,
    /// y-coordinate of Q (hex).
    #[arg(long, requires = "qx")]
    qy: Option<String>,
    /// Print the ladder trace.
    #[arg(long)]
    trace: bool,
}

pub fn run(args: MulArgs) -> Result<(), CliError> {
    let file = load_curve(&args.curve)?;
    let k = parse_hex_scalar(&args.k)?;

    if args.algo == "montgomery-xz" {
        if args.qx.is_some() {
            return Err(CliError::parse(
                "montgomery-xz computes [k]P on the x-line only; kernel mode is unsupported",
            ));
        }
        let (curve, base_x) = file
            .to_montgomery()
            .map_err(CliError::invalid)?
            .ok_or_else(|| {
                CliError::parse(
                    "curve file has no montgomery parameters (mont_a/mont_b/mont_gx)",
                )
            })?;
        let mut ctr = OpCounter::new();
        println!("algo = montgomery-xz");
        match mont_ladder(&k, &base_x, &curve, &mut ctr) {
            Some(x) => println!("x = {}", x.to_hex()),
            None => println!("infinity"),
        }
        println!("{ctr}");
        return Ok(());
    }

    let algo = LadderAlgorithm::from_name(&args.algo)
        .ok_or_else(|| CliError::parse(format!("unknown algorithm: {}", args.algo)))?;
    let (e, base) = file.to_curve().map_err(CliError::invalid)?;
    let p = base.ok_or_else(|| CliError::parse("curve file has no base point (gx/gy)"))?;

    let mut ctr = OpCounter::new();
    let mut trace = LadderTrace::default();
    let trace_arg = args.trace.then_some(&mut trace);

    let result = match (&args.qx, &args.qy) {
        (Some(qx), Some(qy)) => {
            let q = AffinePoint::new(
                FieldElement::from_hex(qx, e.ctx())
                    .map_err(|err| CliError::parse(err.to_string()))?,
                FieldElement::from_hex(qy, e.ctx())
                    .map_err(|err| CliError::parse(err.to_string()))?,
                &e,
            )
            .map_err(|err| CliError::invalid(err.to_string()))?;
            kernel_compute(&k, &p, &q, &e, algo, &mut ctr, trace_arg)
        }
        _ => scalar_multiply(&k, &p, &e, algo, &mut ctr, trace_arg),
    };

    println!("algo = {}", algo.name());
    match &result {
        AffinePoint::Infinity => println!("infinity"),
        AffinePoint::Finite { x, y } => {
            println!("x = {}", x.to_hex());
            println!("y = {}", y.to_hex());
        }
    }
    println!("{ctr}");
    if args.trace {
        print!("{}", trace.render());
    }
    Ok(())
}
