//! Shannon strategies: reducing causal adaptation to strictly causal coding.
//!
//! A strategy is a function `t : X1 → X2`; running the strictly causal
//! scheme over the derived channel whose second input is the strategy index
//! realizes causal cribbing. Strategies are indexed by base-`|X2|` digits,
//! `t(x1) = (t / |X2|^x1) mod |X2|`, so index 0 is the all-zeros map.

use crate::channels::{axis, MacChannel};
use crate::prob::{CondKernel, JointTable, ProbError, ProbVector, Result};

/// Strategy spaces above this size are refused.
pub const MAX_STRATEGIES: usize = 4096;

/// Number of strategies `|X2|^{|X1|}` for the channel, or an error when the
/// space is too large to enumerate.
pub fn strategy_count(mac: &MacChannel) -> Result<usize> {
    let count = mac
        .x2_size
        .checked_pow(mac.x1_size as u32)
        .filter(|&c| c <= MAX_STRATEGIES)
        .ok_or_else(|| {
            ProbError::DimensionMismatch(format!(
                "strategy space {}^{} exceeds the {MAX_STRATEGIES} cap",
                mac.x2_size, mac.x1_size
            ))
        })?;
    Ok(count)
}

/// Evaluate strategy `t` at input symbol `x1`.
pub fn strategy_apply(t: usize, x1: usize, x2_size: usize) -> usize {
    (t / x2_size.pow(x1 as u32)) % x2_size
}

/// The derived MAC over inputs `(X1, T)`:
/// `P^Δ(y'' | x1, t) = P(y'' | x1, x2'' = t(x1))`.
pub fn shannon_strategy_lift(mac: &MacChannel) -> Result<MacChannel> {
    let t_count = strategy_count(mac)?;
    let mut rows = Vec::with_capacity(mac.x1_size * t_count);
    for x1 in 0..mac.x1_size {
        for t in 0..t_count {
            let x2 = strategy_apply(t, x1, mac.x2_size);
            rows.push(
                (0..mac.y_size())
                    .map(|y| mac.get(x1, x2, y))
                    .collect::<Vec<f64>>(),
            );
        }
    }
    MacChannel::new(CondKernel::new(rows)?, mac.x1_size, t_count)
}

/// The product distribution over strategies matching a factorized
/// `P⁰(v, x1, x2'') = P⁰(v, x1) · P⁰(x2'' | x1)`:
///
/// ```text
/// P(t) = Π_{x1} P⁰(x2'' = t(x1) | x1)
/// ```
///
/// This choice satisfies `P(v, x1) · Σ_{t : t(x1) = x2''} P(t)
/// = P⁰(v, x1, x2'')`, which is verified numerically before returning.
pub fn strategy_distribution(p0: &JointTable) -> Result<ProbVector> {
    let x1_size = p0.axis_size(axis::X1)?;
    let x2_size = p0.axis_size(axis::X2PP)?;
    let t_count = x2_size
        .checked_pow(x1_size as u32)
        .filter(|&c| c <= MAX_STRATEGIES)
        .ok_or_else(|| {
            ProbError::DimensionMismatch("strategy space too large".into())
        })?;

    let p_x1 = p0.marginal(&[axis::X1])?;
    if p_x1.probs().iter().any(|&p| p <= 0.0) {
        return Err(ProbError::Domain {
            value: 0.0,
            domain: "strictly positive X1 marginal",
        });
    }
    // conditional P⁰(x2''|x1) from the (X1, X2'') marginal
    let m = p0.marginal(&[axis::X1, axis::X2PP])?;
    let cond = |x1: usize, x2: usize| m.probs()[x1 * x2_size + x2] / p_x1.probs()[x1];

    let probs: Vec<f64> = (0..t_count)
        .map(|t| {
            (0..x1_size)
                .map(|x1| cond(x1, strategy_apply(t, x1, x2_size)))
                .product()
        })
        .collect();
    let p_t = ProbVector::new(probs)?;

    // runtime check of the defining identity against the supplied joint
    let vx1 = p0.marginal(&[axis::V, axis::X1])?;
    let cv = p0.axis_size(axis::V)?;
    for v in 0..cv {
        for x1 in 0..x1_size {
            for x2 in 0..x2_size {
                let lumped: f64 = (0..t_count)
                    .filter(|&t| strategy_apply(t, x1, x2_size) == x2)
                    .map(|t| p_t.get(t))
                    .sum();
                let lhs = vx1.probs()[v * x1_size + x1] * lumped;
                let rhs =
                    p0.probs()[(v * x1_size + x1) * x2_size + x2];
                if (lhs - rhs).abs() > 1e-9 {
                    return Err(ProbError::InvalidDistribution(format!(
                        "joint does not factorize as P(v,x1)·P(x2''|x1): \
                         mismatch {lhs} vs {rhs} at (v={v}, x1={x1}, x2''={x2})"
                    )));
                }
            }
        }
    }
    Ok(p_t)
}
