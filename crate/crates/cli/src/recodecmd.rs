//! `ecfast recode`: digit strings and estimated inversion costs.

use clap::Args;

use ecfast::recode::{
    estimate_inversions, mixed_naf_knapsack, to_base16, to_naf, CostModel, MixedBaseRepr,
};

use crate::{parse_hex_scalar, CliError};

#[derive(Args)]
pub struct RecodeArgs {
    /// Scalar, lowercase hex without prefix.
    #[arg(long)]
    k: String,
    /// Recoding: naf, base16, or mixed.
    #[arg(long)]
    mode: String,
}

pub fn run(args: RecodeArgs) -> Result<(), CliError> {
    let k = parse_hex_scalar(&args.k)?;
    let repr: MixedBaseRepr = match args.mode.as_str() {
        "naf" => to_naf(&k),
        "base16" => to_base16(&k),
        "mixed" => mixed_naf_knapsack(&k),
        other => return Err(CliError::parse(format!("unknown recode mode: {other}"))),
    };
    let digit_line = if repr.is_empty() {
        "0".to_string()
    } else {
        repr.digits_msb()
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let bases_line = if repr.is_empty() {
        "-".to_string()
    } else {
        repr.bases_msb()
            .iter()
            .map(|b| b.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    println!("{digit_line}");
    println!("bases: {bases_line}");
    println!(
        "inversions: {}",
        estimate_inversions(&repr, &CostModel::affine())
    );
    Ok(())
}
