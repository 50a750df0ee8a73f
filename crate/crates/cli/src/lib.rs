//! Implementation of the `ecfast` command-line tool: curve-file handling
//! and the mul/recode/verify/bench subcommands. The binary in `main.rs` is
//! a thin clap wrapper over this.

use std::path::PathBuf;

pub mod bench;
pub mod curvefile;
pub mod mulcmd;
pub mod recodecmd;
pub mod verify;

/// A failure with its process exit code: 1 verification mismatch, 2
/// parse/usage errors, 3 invalid curve data.
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn parse(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }

    pub fn invalid(message: impl Into<String>) -> Self {
        CliError {
            code: 3,
            message: message.into(),
        }
    }
}

/// `--seed` wins; otherwise `ECC_SEED`; otherwise a fixed default.
pub fn resolve_seed(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("ECC_SEED")
            .ok()
            .and_then(|v| v.parse::<u64>().ok())
    })
    .unwrap_or(0xec5eed)
}

pub fn parse_hex_scalar(s: &str) -> Result<num_bigint::BigUint, CliError> {
    num_bigint::BigUint::parse_bytes(s.as_bytes(), 16)
        .ok_or_else(|| CliError::parse(format!("invalid hex scalar: {s}")))
}

pub fn load_curve(path: &PathBuf) -> Result<curvefile::CurveFile, CliError> {
    curvefile::CurveFile::load(path).map_err(CliError::parse)
}
