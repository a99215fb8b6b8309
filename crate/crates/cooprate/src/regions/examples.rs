//! Closed-form bound evaluators for the four worked example channels.
//!
//! Each `exampleN_bounds` function evaluates the same inequality set as the
//! generic joint-table route, but through explicit binary-entropy
//! arithmetic. The two routes are compared pointwise by the cross-validation
//! suite, which is what pins down the algebra here.

use super::constraints::{BC_LABELS, HAT_LABELS, MAC_LABELS};
use super::frontier::{pareto_filter, ConstraintSet, HullMode, RatePoint, RateRegion};
use super::sweep::{bc_aux_sweep, simplex_grid, Caps, SweepSpec};
use crate::channels::{axis, BcAux, CribLaw, ExampleParams, MacAuxCausal};
use crate::prob::{
    bconv, bmatch, binary_entropy, CondKernel, JointTable, ProbError, ProbVector, Result,
};
use rayon::prelude::*;

fn h2(a: f64) -> f64 {
    // callers keep arguments inside [0,1] up to rounding
    binary_entropy(a.clamp(0.0, 1.0)).expect("clamped into domain")
}

// ---------------------------------------------------------------------------
// Example 1: clean/BSC broadcast channel
// ---------------------------------------------------------------------------

/// The broadcast region bounds for the clean/BSC channel, in the same row
/// order as the generic builder:
///
/// ```text
/// R1  ≤ H(X|U,V)
/// R2  ≤ I(U;Y2)
/// R2' ≤ I(V;Y2|U) + C12
/// R2' ≤ I(V;X|U)
/// ```
pub fn example1_bounds(aux: &BcAux, eps: f64, c12: f64) -> Result<ConstraintSet> {
    if aux.p_x_given_uv.output_size() != 2 {
        return Err(ProbError::DimensionMismatch(
            "closed form requires a binary input alphabet".into(),
        ));
    }
    let (cu, cv) = (aux.card_u, aux.card_v);
    let puv = aux.p_uv.probs();
    let x0 = |u: usize, v: usize| aux.p_x_given_uv.get(u * cv + v, 0);

    let mut h_x_given_uv = 0.0;
    let mut h_y2_given_uv = 0.0;
    let mut h_y2_given_u = 0.0;
    let mut h_x_given_u = 0.0;
    let mut y2_total = 0.0;
    for u in 0..cu {
        let pu: f64 = (0..cv).map(|v| puv[u * cv + v]).sum();
        let mut y2_u = 0.0;
        let mut x_u = 0.0;
        for v in 0..cv {
            let p = puv[u * cv + v];
            let x = x0(u, v);
            let y2 = bconv(x, eps); // Pr{Y2 = 0 | u, v}
            h_x_given_uv += p * h2(x);
            h_y2_given_uv += p * h2(y2);
            y2_u += p * y2;
            x_u += p * x;
        }
        y2_total += y2_u;
        if pu > 0.0 {
            h_y2_given_u += pu * h2(y2_u / pu);
            h_x_given_u += pu * h2(x_u / pu);
        }
    }
    let h_y2 = h2(y2_total);

    let mut cs = ConstraintSet::new(BC_LABELS.to_vec());
    cs.push(&["R1"], h_x_given_uv);
    cs.push(&["R2"], h_y2 - h_y2_given_u);
    cs.push(&["R2p"], h_y2_given_u - h_y2_given_uv + c12);
    cs.push(&["R2p"], h_x_given_u - h_x_given_uv);
    Ok(cs)
}

/// The full broadcast region for the clean/BSC channel, swept over the same
/// auxiliary family the generic optimizer visits.
pub fn example1_region(eps: f64, c12: f64, caps: Caps, spec: &SweepSpec) -> Result<RateRegion> {
    let auxes = bc_aux_sweep(2, caps, spec);
    let vertex_lists: Vec<Vec<RatePoint>> = auxes
        .par_iter()
        .map(|aux| {
            example1_bounds(aux, eps, c12)
                .expect("swept aux is valid")
                .pareto_vertices()
        })
        .collect();
    RateRegion::from_points(
        BC_LABELS.iter().map(|s| s.to_string()).collect(),
        pareto_filter(vertex_lists.into_iter().flatten().collect()),
        HullMode::Convex,
    )
}

// ---------------------------------------------------------------------------
// Examples 2 and 3: the switched MAC
// ---------------------------------------------------------------------------

/// Bounds of the `R1' = 0` capacity region for the switched MAC with a
/// clean `Y1 = X1` component, at input laws `Pr{X1 = 0} = px1` and
/// `Pr{X2 = i} = p[i]`, with the cribbing conditional fixed at the optimal
/// uniform-over-the-clean-pair choice:
///
/// ```text
/// R1        ≤ H2(px1)
/// R2        ≤ px1·H2(p0 + (p2+p3)/2) + (1−px1)·H2(p2 + (p0+p1)/2)
///             − px1·(p2+p3) − (1−px1)·(p0+p1)
/// R1 + R2   ≤ (sum of the two; the clean Y1 makes the sum row redundant)
/// R2''      ≤ 1
/// R1 + R2'' ≤ H2(px1) + 1
/// ```
pub fn example2_bounds(px1: f64, p: &ProbVector) -> Result<ConstraintSet> {
    example3_bounds(0.0, px1, p)
}

/// Example 2 with the `Y1` component degraded to a BSC of crossover `q`.
/// The conditional-probability helpers are internal: `nu[i] = Pr{X1=0|Y1=i}`
/// and `lambda[i][j] = Pr{Y2=0 | Y1=i, X2=j}`.
pub fn example3_bounds(q: f64, px1: f64, p: &ProbVector) -> Result<ConstraintSet> {
    if !(0.0..=1.0).contains(&q) || !(0.0..=1.0).contains(&px1) {
        return Err(ProbError::Domain {
            value: q,
            domain: "[0, 1]",
        });
    }
    if p.alphabet_size() != 4 {
        return Err(ProbError::DimensionMismatch(
            "X2 law must have four symbols".into(),
        ));
    }
    let pj = p.probs();
    let bar = |a: f64| 1.0 - a;

    // P(Y1 = i) and nu_i = Pr{X1 = 0 | Y1 = i}
    let p_y1 = [bconv(px1, q), bar(bconv(px1, q))];
    let nu = |i: usize| {
        if p_y1[i] <= 0.0 {
            return 0.5; // never reached; weighted by P(Y1 = i) = 0
        }
        let num = px1 * if i == 0 { 1.0 - q } else { q };
        num / p_y1[i]
    };
    // Pr{Y2 = 0 | X1 = x1, X2 = j}
    let given_x1 = [[1.0, 0.0, 0.5, 0.5], [0.5, 0.5, 1.0, 0.0]];
    let lambda = |i: usize, j: usize| {
        let n = nu(i);
        n * given_x1[0][j] + bar(n) * given_x1[1][j]
    };

    let mut h_y2_given_x2y1 = 0.0;
    let mut h_y2_given_y1 = 0.0;
    for i in 0..2 {
        let mut mix = 0.0;
        for j in 0..4 {
            h_y2_given_x2y1 += p_y1[i] * pj[j] * h2(lambda(i, j));
            mix += pj[j] * lambda(i, j);
        }
        h_y2_given_y1 += p_y1[i] * h2(mix);
    }
    let h_y2_given_x1 =
        px1 * h2(pj[0] + 0.5 * (pj[2] + pj[3])) + bar(px1) * h2(pj[2] + 0.5 * (pj[0] + pj[1]));
    // H(Y2 | X1, X2): one full bit whenever X2 lands in the erased pair
    let erased = px1 * (pj[2] + pj[3]) + bar(px1) * (pj[0] + pj[1]);

    let i_y1 = h2(bconv(px1, q)) - h2(q);
    let r1 = i_y1 + h_y2_given_x2y1 - erased;
    let r2 = h_y2_given_x1 - erased;
    let sum = r1 + h_y2_given_y1 - h_y2_given_x2y1;

    let mut cs = ConstraintSet::new(HAT_LABELS.to_vec());
    cs.push(&["R1"], r1);
    cs.push(&["R2"], r2);
    cs.push(&["R1", "R2"], sum);
    cs.push(&["R2pp"], 1.0);
    cs.push(&["R1", "R2pp"], 1.0 + i_y1);
    Ok(cs)
}

/// Sweep the switched-MAC region: a fine grid on `px1` (quarter of the
/// nominal step) crossed with a simplex grid on the `X2` law.
pub fn example3_region(q: f64, spec: &SweepSpec) -> Result<RateRegion> {
    let m = (1.0 / spec.step).round().max(1.0) as usize;
    let px1_grid = simplex_grid(2, 4 * m);
    let p_grid = simplex_grid(4, m);
    let mut params = Vec::with_capacity(px1_grid.len() * p_grid.len());
    for a in &px1_grid {
        for p in &p_grid {
            params.push((a[0], p.clone()));
        }
    }
    let lists: Vec<Vec<RatePoint>> = params
        .par_iter()
        .map(|(px1, p)| {
            example3_bounds(q, *px1, &ProbVector::new(p.clone()).expect("grid point"))
                .expect("grid params are in range")
                .pareto_vertices()
        })
        .collect();
    RateRegion::from_points(
        HAT_LABELS.iter().map(|s| s.to_string()).collect(),
        pareto_filter(lists.into_iter().flatten().collect()),
        HullMode::Convex,
    )
}

pub fn example2_region(spec: &SweepSpec) -> Result<RateRegion> {
    example3_region(0.0, spec)
}

// ---------------------------------------------------------------------------
// Example 4: binary adder-noise MAC with an erasure-mixture auxiliary
// ---------------------------------------------------------------------------

/// The six information quantities of the adder-noise example at
/// `Pr{X1=0} = px1`, `Pr{X2=0} = px2`, crib rows `mu1, mu2`, with
/// `Pr{Z1=0} = p1` and `Pr{Z2=0 | X1=1} = p2`.
#[derive(Debug, Clone, Copy)]
pub struct Example4Quantities {
    pub i1: f64,
    pub i2: f64,
    pub i3: f64,
    pub i4: f64,
    pub i5: f64,
    pub i6: f64,
}

pub fn example4_quantities(
    p1: f64,
    p2: f64,
    px1: f64,
    px2: f64,
    mu1: f64,
    mu2: f64,
) -> Example4Quantities {
    let bar = |a: f64| 1.0 - a;
    // aggregate-noise flip probabilities given X1
    let f1 = bconv(p1, p2);
    // noise-entropy term H(Y | X1, X2), shared by every difference below
    let h_noise = px1 * h2(p1) + bar(px1) * h2(f1);

    // no-cribbing branch
    let alpha = bmatch(p1, p2) * px2 + f1 * bar(px2); // Pr{Y=1 | X1=1}
    let h_y_given_x2 = h2(px1 * p1 + bar(px1) * f1);
    let h_y = h2(px1 * bmatch(p1, px2) + bar(px1) * bar(alpha));
    let h_y_given_x1 = px1 * h2(bmatch(p1, px2)) + bar(px1) * h2(alpha);

    // cribbing branch
    let beta = bmatch(p1, p2) * mu2 + f1 * bar(mu2); // Pr{Y''=1 | X1=1}
    let h_ypp_given_x1 = px1 * h2(bmatch(p1, mu1)) + bar(px1) * h2(beta);
    let h_ypp = h2(px1 * bmatch(p1, mu1) + bar(px1) * bar(beta));

    Example4Quantities {
        i1: h_y_given_x2 - h_noise,
        i2: h_y - h_y_given_x2,
        i3: h_y_given_x1 - h_noise,
        i4: h_y - h_noise,
        i5: h_ypp_given_x1 - h_noise,
        i6: h_ypp - h_noise,
    }
}

/// The seven causal-inner bounds with the erasure-mixture auxiliary
/// (`V = X1` with probability `1 − gamma`, erased otherwise):
///
/// ```text
/// R1               ≤ (1−γ)·I1
/// R2               ≤ γ·I2 + (1−γ)·I3
/// R1 + R2          ≤ γ·I2 + (1−γ)·I4
/// R1'              ≤ γ·H2(px1)
/// R2''             ≤ I5
/// R1' + R2''       ≤ γ·I6 + (1−γ)·I5
/// R1 + R1' + R2''  ≤ I6
/// ```
#[allow(clippy::too_many_arguments)]
pub fn example4_bounds(
    p1: f64,
    p2: f64,
    px1: f64,
    px2: f64,
    mu1: f64,
    mu2: f64,
    gamma: f64,
) -> Result<ConstraintSet> {
    for x in [p1, p2, px1, px2, mu1, mu2, gamma] {
        if !(0.0..=1.0).contains(&x) {
            return Err(ProbError::Domain {
                value: x,
                domain: "[0, 1]",
            });
        }
    }
    let q = example4_quantities(p1, p2, px1, px2, mu1, mu2);
    let bar = 1.0 - gamma;
    let mut cs = ConstraintSet::new(MAC_LABELS.to_vec());
    cs.push(&["R1"], bar * q.i1);
    cs.push(&["R2"], gamma * q.i2 + bar * q.i3);
    cs.push(&["R1", "R2"], gamma * q.i2 + bar * q.i4);
    cs.push(&["R1p"], gamma * h2(px1));
    cs.push(&["R2pp"], q.i5);
    cs.push(&["R1p", "R2pp"], gamma * q.i6 + bar * q.i5);
    cs.push(&["R1", "R1p", "R2pp"], q.i6);
    Ok(cs)
}

/// The erasure-mixture auxiliary as an explicit causal parameterization:
/// `V` ranges over `{erased, 0, 1}` with `P(V = erased, x1) = γ·P(x1)` and
/// `P(V = x1, x1) = (1−γ)·P(x1)`.
pub fn example4_causal_aux(
    px1: f64,
    px2: f64,
    mu1: f64,
    mu2: f64,
    gamma: f64,
) -> Result<MacAuxCausal> {
    let p_x1 = [px1, 1.0 - px1];
    let p_vx1 = JointTable::from_fn(vec![(axis::V, 3), (axis::X1, 2)], |idx| {
        let (v, x1) = (idx[0], idx[1]);
        if v == 0 {
            gamma * p_x1[x1]
        } else if v - 1 == x1 {
            (1.0 - gamma) * p_x1[x1]
        } else {
            0.0
        }
    })?;
    Ok(MacAuxCausal {
        p_vx1,
        p_x2: ProbVector::binary(px2)?,
        crib: CribLaw::Inner(CondKernel::new(vec![
            vec![mu1, 1.0 - mu1],
            vec![mu2, 1.0 - mu2],
        ])?),
    })
}

/// Sweep the adder-noise example over `(px1, px2, mu1, mu2, gamma)` at the
/// spec's step. Five scalar parameters make fine grids expensive; 0.1 is a
/// reasonable default step here.
pub fn example4_region(p1: f64, p2: f64, spec: &SweepSpec) -> Result<RateRegion> {
    let m = (1.0 / spec.step).round().max(1.0) as usize;
    let scalar: Vec<f64> = (0..=m).map(|k| k as f64 / m as f64).collect();
    let mut params = Vec::new();
    for &px1 in &scalar {
        for &px2 in &scalar {
            for &mu1 in &scalar {
                for &mu2 in &scalar {
                    for &gamma in &scalar {
                        params.push((px1, px2, mu1, mu2, gamma));
                    }
                }
            }
        }
    }
    let lists: Vec<Vec<RatePoint>> = params
        .par_iter()
        .map(|&(px1, px2, mu1, mu2, gamma)| {
            example4_bounds(p1, p2, px1, px2, mu1, mu2, gamma)
                .expect("grid params are in range")
                .pareto_vertices()
        })
        .collect();
    RateRegion::from_points(
        MAC_LABELS.iter().map(|s| s.to_string()).collect(),
        pareto_filter(lists.into_iter().flatten().collect()),
        HullMode::Convex,
    )
}

/// Dispatch an example sweep by its parameter bundle. Example 1 uses the
/// given caps; the MAC examples ignore them.
pub fn example_region(
    params: ExampleParams,
    caps: Caps,
    spec: &SweepSpec,
) -> Result<RateRegion> {
    match params {
        ExampleParams::One { eps, c12 } => example1_region(eps, c12, caps, spec),
        ExampleParams::Two => example2_region(spec),
        ExampleParams::Three { q } => example3_region(q, spec),
        ExampleParams::Four { p1, p2 } => example4_region(p1, p2, spec),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn example2_known_values() {
        // uniform p at px1 = 0.5: R2 bound = H2(0.5) − 0.5 = 0.5
        let cs = example2_bounds(0.5, &ProbVector::uniform(4)).unwrap();
        assert_abs_diff_eq!(cs.bound_for(&["R2"]).unwrap(), 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(cs.bound_for(&["R1"]).unwrap(), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(cs.bound_for(&["R2pp"]).unwrap(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn example3_sum_rate_saturates_at_half_crossover() {
        // q = 0.5 erases Y1: R1 + R2'' bound = 1 + H2(·∗0.5) − H2(0.5) = 1
        for px1 in [0.1, 0.35, 0.8] {
            let cs = example3_bounds(0.5, px1, &ProbVector::uniform(4)).unwrap();
            assert_abs_diff_eq!(
                cs.bound_for(&["R1", "R2pp"]).unwrap(),
                1.0,
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn example4_gamma_endpoints_and_symmetric_noise() {
        // γ = 0 pins R1' to zero
        let cs = example4_bounds(0.1, 0.4, 0.3, 0.5, 0.2, 0.7, 0.0).unwrap();
        assert_abs_diff_eq!(cs.bound_for(&["R1p"]).unwrap(), 0.0, epsilon = 1e-15);
        // γ = 1 pins R1 to zero
        let cs = example4_bounds(0.1, 0.4, 0.3, 0.5, 0.2, 0.7, 1.0).unwrap();
        assert_abs_diff_eq!(cs.bound_for(&["R1"]).unwrap(), 0.0, epsilon = 1e-15);
        // p1 = 0.5 makes the channel pure noise: I1 = 0 so R1 bound = 0
        let cs = example4_bounds(0.5, 0.3, 0.4, 0.6, 0.2, 0.7, 0.25).unwrap();
        assert_abs_diff_eq!(cs.bound_for(&["R1"]).unwrap(), 0.0, epsilon = 1e-12);
        assert!(example4_bounds(1.2, 0.3, 0.4, 0.6, 0.2, 0.7, 0.25).is_err());
    }

    #[test]
    fn example4_aux_is_a_valid_causal_parameterization() {
        let aux = example4_causal_aux(0.3, 0.5, 0.2, 0.7, 0.4).unwrap();
        assert_eq!(aux.card_v(), 3);
        // erased row carries γ of the mass
        let erased: f64 = aux.p_vx1.probs()[0] + aux.p_vx1.probs()[1];
        assert_abs_diff_eq!(erased, 0.4, epsilon = 1e-12);
    }
}
