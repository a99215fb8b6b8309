//! Weak-typicality tests on empirical log-likelihoods.
//!
//! A sequence tuple is declared typical when the per-symbol empirical
//! log-likelihood under the scheme's joint law is within `eps` of the joint
//! entropy. Symbol combinations of probability zero are never typical.

use crate::prob::{JointTable, Result};

/// Precomputed `log2 P` table and entropy for one axis tuple of a joint.
#[derive(Debug, Clone)]
pub struct JointScore {
    log2p: Vec<f64>,
    sizes: Vec<usize>,
    pub entropy: f64,
}

impl JointScore {
    /// Marginalize `joint` onto `axes` (in order) and tabulate.
    pub fn new(joint: &JointTable, axes: &[&str]) -> Result<Self> {
        let m = joint.marginal(axes)?;
        let sizes = m.axes().map(|(_, s)| s).collect();
        let log2p = m
            .probs()
            .iter()
            .map(|&p| if p > 0.0 { p.log2() } else { f64::NEG_INFINITY })
            .collect();
        Ok(Self {
            log2p,
            sizes,
            entropy: m.entropy_of(&axes.to_vec())?,
        })
    }

    #[inline]
    fn flat(&self, symbols: &[u8]) -> usize {
        let mut idx = 0usize;
        for (d, &s) in symbols.iter().enumerate() {
            idx = idx * self.sizes[d] + s as usize;
        }
        idx
    }

    /// Empirical `−(1/n) Σ log2 P(tuple_i)`; infinite when any symbol tuple
    /// has probability zero.
    pub fn empirical_rate(&self, seqs: &[&[u8]], n: usize) -> f64 {
        debug_assert_eq!(seqs.len(), self.sizes.len());
        let mut sum = 0.0;
        let mut symbols = vec![0u8; seqs.len()];
        for i in 0..n {
            for (d, s) in seqs.iter().enumerate() {
                symbols[d] = s[i];
            }
            let lp = self.log2p[self.flat(&symbols)];
            if lp == f64::NEG_INFINITY {
                return f64::INFINITY;
            }
            sum -= lp;
        }
        sum / n as f64
    }

    /// Weak joint typicality with slack `eps`.
    pub fn is_typical(&self, seqs: &[&[u8]], n: usize, eps: f64) -> bool {
        let rate = self.empirical_rate(seqs, n);
        rate.is_finite() && (rate - self.entropy).abs() <= eps
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn coupled_bits() -> JointTable {
        JointTable::new(
            vec![("A", 2), ("B", 2)],
            vec![0.45, 0.05, 0.05, 0.45],
        )
        .unwrap()
    }

    #[test]
    fn matched_sequences_are_typical() {
        let score = JointScore::new(&coupled_bits(), &["A", "B"]).unwrap();
        // sequences drawn exactly at the diagonal with the right frequency
        // (9 matches of each symbol, one mismatch pair out of 20)
        let a: Vec<u8> = (0..20).map(|i| (i % 2) as u8).collect();
        let mut b = a.clone();
        b[0] ^= 1;
        b[1] ^= 1;
        let rate = score.empirical_rate(&[&a, &b], 20);
        // empirical law (0.45, 0.05) matches the model: rate ≈ H(A,B)
        assert_abs_diff_eq!(rate, score.entropy, epsilon = 1e-9);
        assert!(score.is_typical(&[&a, &b], 20, 0.01));
    }

    #[test]
    fn independent_looking_pairs_are_atypical() {
        let score = JointScore::new(&coupled_bits(), &["A", "B"]).unwrap();
        let a: Vec<u8> = (0..20).map(|i| (i % 2) as u8).collect();
        let b: Vec<u8> = a.iter().map(|&x| x ^ 1).collect(); // all mismatches
        assert!(!score.is_typical(&[&a, &b], 20, 0.5));
    }

    #[test]
    fn zero_probability_symbols_are_never_typical() {
        let t = JointTable::new(vec![("A", 2), ("B", 2)], vec![0.5, 0.0, 0.0, 0.5]).unwrap();
        let score = JointScore::new(&t, &["A", "B"]).unwrap();
        let a = [0u8, 1];
        let b = [1u8, 0];
        assert_eq!(score.empirical_rate(&[&a, &b], 2), f64::INFINITY);
        assert!(!score.is_typical(&[&a, &b], 2, 100.0));
    }
}
