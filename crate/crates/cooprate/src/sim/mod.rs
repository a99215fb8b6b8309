//! Monte-Carlo random-coding simulators.
//!
//! [`bc::bc_simulate`] runs the broadcast scheme (superposition coding with
//! binning and an error-free conference transmission); [`mac::mac_simulate_strict`]
//! runs the block-Markov scheme with encoder-2 cribbing and backward
//! decoding; [`mac::mac_simulate_causal`] lifts a causal parameterization
//! through Shannon strategies onto the strictly causal machinery.
//!
//! Codebooks are desk-scale: sizes are `⌈2^{nR}⌉` (rates in bits) and the
//! memory guard rejects configurations whose codebooks would not fit.

pub mod bc;
pub mod mac;
pub mod rng;
pub mod typicality;

use crate::prob::ProbError;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

pub use bc::{bc_build_codebook, bc_simulate, BcCodebook, BcRates};
pub use mac::{mac_simulate_causal, mac_simulate_strict, MacRates};

/// Per-rate blocklength guard: `n · rate ≤ 24` keeps single codebooks at or
/// below ~16M words.
pub const MAX_RATE_BITS: f64 = 24.0;
/// Cap on the total number of materialized codebook symbols.
pub const MAX_CODEBOOK_SYMBOLS: u64 = 1 << 26;

#[derive(Debug, Error)]
pub enum SimError {
    #[error("memory guard exceeded: {0}")]
    MemoryGuard(String),
    #[error("typicality slack must be positive, got {0}")]
    DegenerateTypicality(f64),
    #[error("block-Markov coding needs at least 2 blocks, got {0}")]
    TooFewBlocks(usize),
    #[error(transparent)]
    Prob(#[from] ProbError),
}

pub type Result<T> = std::result::Result<T, SimError>;

/// Random-coding experiment parameters. Rates live in the model-specific
/// structs ([`BcRates`], [`MacRates`]) passed alongside.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SimConfig {
    /// Symbols per block.
    pub n: usize,
    /// Number of blocks (block-Markov MAC schemes only; the BC scheme is
    /// single-block).
    pub blocks: usize,
    /// Weak-typicality slack.
    pub typicality_eps: f64,
    pub trials: u64,
    pub seed: u64,
    /// Whether the cooperation resource (conference link / cribbing link)
    /// is present in the simulated world.
    pub link_present: bool,
}

impl SimConfig {
    pub(crate) fn validate(&self) -> Result<()> {
        if self.typicality_eps <= 0.0 {
            return Err(SimError::DegenerateTypicality(self.typicality_eps));
        }
        if self.n == 0 {
            return Err(SimError::MemoryGuard("blocklength must be positive".into()));
        }
        Ok(())
    }
}

/// Measured error frequencies (exact ratios of integer counts).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimReport {
    pub n: usize,
    pub blocks: usize,
    pub trials: u64,
    pub link_present: bool,
    /// Frequency of the always-decoded-messages error event.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_e_hat: Option<f64>,
    /// Frequency of the full error event including the link-dependent
    /// messages (only measured when the link is present).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_e_prime_hat: Option<f64>,
    /// Frequency of encoder 2 mis-decoding encoder 1's messages off the
    /// cribbed input (MAC with link present only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub encoder2_crib_error: Option<f64>,
    /// Trials in which block `b`'s fresh messages were decoded wrongly.
    pub per_block_errors: Vec<u64>,
    /// Rates actually carried per channel use (block-Markov schemes scale
    /// by `(B−1)/B`).
    pub effective_rates: BTreeMap<String, f64>,
}

/// `⌈2^{n·rate}⌉` with the memory guard applied.
pub(crate) fn codebook_size(n: usize, rate: f64) -> Result<u64> {
    if !(rate >= 0.0 && rate.is_finite()) {
        return Err(SimError::MemoryGuard(format!("invalid rate {rate}")));
    }
    let bits = n as f64 * rate;
    if bits > MAX_RATE_BITS {
        return Err(SimError::MemoryGuard(format!(
            "n·rate = {bits:.2} exceeds {MAX_RATE_BITS} bits"
        )));
    }
    Ok((bits.exp2().ceil() as u64).max(1))
}

pub(crate) fn check_total_symbols(total: u64) -> Result<()> {
    if total > MAX_CODEBOOK_SYMBOLS {
        return Err(SimError::MemoryGuard(format!(
            "codebooks need {total} symbols, cap is {MAX_CODEBOOK_SYMBOLS}"
        )));
    }
    Ok(())
}

/// Cumulative rows of a kernel for inverse-CDF channel sampling.
pub(crate) fn cdf_rows(kernel: &crate::prob::CondKernel) -> Vec<Vec<f64>> {
    (0..kernel.input_size())
        .map(|r| {
            let mut acc = 0.0;
            kernel
                .row(r)
                .iter()
                .map(|&p| {
                    acc += p;
                    acc
                })
                .collect()
        })
        .collect()
}

pub(crate) fn sample_cdf(rng: &mut impl rand::Rng, cdf: &[f64]) -> u8 {
    let u: f64 = rng.gen();
    match cdf.iter().position(|&c| u < c) {
        Some(i) => i as u8,
        None => (cdf.len() - 1) as u8,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codebook_sizes_and_guard() {
        assert_eq!(codebook_size(8, 0.0).unwrap(), 1);
        assert_eq!(codebook_size(8, 0.5).unwrap(), 16);
        assert_eq!(codebook_size(10, 0.35).unwrap(), 12); // ceil(2^3.5)
        assert!(matches!(
            codebook_size(16, 2.0),
            Err(SimError::MemoryGuard(_))
        ));
        assert!(codebook_size(8, -0.1).is_err());
    }

    #[test]
    fn config_validation() {
        let cfg = SimConfig {
            n: 8,
            blocks: 1,
            typicality_eps: 0.0,
            trials: 1,
            seed: 0,
            link_present: false,
        };
        assert!(matches!(
            cfg.validate(),
            Err(SimError::DegenerateTypicality(_))
        ));
    }
}
