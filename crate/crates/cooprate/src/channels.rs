//! Channel models and factorized joint-distribution builders.
//!
//! The two families here are the physically degraded broadcast channel with
//! a decoder-conference link of capacity `c12`, and the two-sender multiple
//! access channel whose second encoder may crib the first encoder's input.
//! Each theorem's auxiliary parameterization gets a dedicated builder that
//! produces the fully factorized [`JointTable`]; the rate-region code then
//! reads every bound off that joint.

use crate::prob::{CondKernel, JointTable, ProbError, ProbVector, Result};
use serde::{Deserialize, Serialize};

/// Axis names shared by the joint builders and the simulator.
pub mod axis {
    pub const U: &str = "U";
    pub const V: &str = "V";
    pub const X: &str = "X";
    pub const Y1: &str = "Y1";
    pub const Y2: &str = "Y2";
    pub const X1: &str = "X1";
    pub const X2: &str = "X2";
    /// Encoder 2's input when the cribbing link is present.
    pub const X2PP: &str = "X2pp";
    pub const Y: &str = "Y";
    /// Channel output when the cribbing link is present.
    pub const YPP: &str = "Ypp";
}

/// Physically degraded broadcast channel given in cascade form:
/// the weak output is a noisy function of the strong one,
/// `P(y1, y2 | x) = P(y1 | x) · P(y2 | y1)`.
///
/// Accepting only the cascade form makes degradedness hold by construction;
/// there is no feasibility test to run.
#[derive(Debug, Clone, PartialEq)]
pub struct DegradedBC {
    pub p_y1_given_x: CondKernel,
    pub p_y2_given_y1: CondKernel,
    /// Conference-link capacity from decoder 1 to decoder 2, bits/use.
    pub conf_capacity: f64,
}

impl DegradedBC {
    pub fn x_size(&self) -> usize {
        self.p_y1_given_x.input_size()
    }
    pub fn y1_size(&self) -> usize {
        self.p_y1_given_x.output_size()
    }
    pub fn y2_size(&self) -> usize {
        self.p_y2_given_y1.output_size()
    }

    /// End-to-end kernel `P(y2 | x)` of the cascade.
    pub fn p_y2_given_x(&self) -> CondKernel {
        self.p_y1_given_x
            .compose(&self.p_y2_given_y1)
            .expect("validated at construction")
    }
}

/// Build a [`DegradedBC`], validating the cascade dimensions.
pub fn make_degraded_bc(k1: CondKernel, k2: CondKernel, c12: f64) -> Result<DegradedBC> {
    if k1.output_size() != k2.input_size() {
        return Err(ProbError::DimensionMismatch(format!(
            "cascade: Y1 alphabet {} does not feed the second stage's {} inputs",
            k1.output_size(),
            k2.input_size()
        )));
    }
    if !(c12 >= 0.0 && c12.is_finite()) {
        return Err(ProbError::Domain {
            value: c12,
            domain: "[0, ∞)",
        });
    }
    // row-stochasticity of the composition follows, but check anyway
    k1.compose(&k2)?;
    Ok(DegradedBC {
        p_y1_given_x: k1,
        p_y2_given_y1: k2,
        conf_capacity: c12,
    })
}

/// Memoryless multiple access channel `P(y | x1, x2)`. The kernel's input
/// index flattens the pair row-major: `row = x1 · |X2| + x2`.
#[derive(Debug, Clone, PartialEq)]
pub struct MacChannel {
    pub p_y_given_x1x2: CondKernel,
    pub x1_size: usize,
    pub x2_size: usize,
}

impl MacChannel {
    pub fn new(p_y_given_x1x2: CondKernel, x1_size: usize, x2_size: usize) -> Result<Self> {
        if p_y_given_x1x2.input_size() != x1_size * x2_size {
            return Err(ProbError::DimensionMismatch(format!(
                "kernel has {} rows, expected |X1|·|X2| = {}",
                p_y_given_x1x2.input_size(),
                x1_size * x2_size
            )));
        }
        Ok(Self {
            p_y_given_x1x2,
            x1_size,
            x2_size,
        })
    }

    pub fn y_size(&self) -> usize {
        self.p_y_given_x1x2.output_size()
    }

    pub fn get(&self, x1: usize, x2: usize, y: usize) -> f64 {
        self.p_y_given_x1x2.get(x1 * self.x2_size + x2, y)
    }
}

/// Auxiliary parameterization for the broadcast-channel region:
/// a joint cloud/satellite law `P(u, v)` and the input synthesis
/// `P(x | u, v)` (rows indexed `u · |V| + v`).
#[derive(Debug, Clone)]
pub struct BcAux {
    pub p_uv: JointTable,
    pub p_x_given_uv: CondKernel,
    pub card_u: usize,
    pub card_v: usize,
}

impl BcAux {
    pub fn new(p_uv: JointTable, p_x_given_uv: CondKernel) -> Result<Self> {
        let card_u = p_uv.axis_size(axis::U)?;
        let card_v = p_uv.axis_size(axis::V)?;
        if p_x_given_uv.input_size() != card_u * card_v {
            return Err(ProbError::DimensionMismatch(format!(
                "P(x|u,v) has {} rows, expected |U|·|V| = {}",
                p_x_given_uv.input_size(),
                card_u * card_v
            )));
        }
        Ok(Self {
            p_uv,
            p_x_given_uv,
            card_u,
            card_v,
        })
    }

    /// Degenerate auxiliaries (both constant); the input law is all that's left.
    pub fn constant(p_x: &ProbVector) -> Self {
        let p_uv = JointTable::new(vec![(axis::U, 1), (axis::V, 1)], vec![1.0]).unwrap();
        let p_x_given_uv = CondKernel::new(vec![p_x.probs().to_vec()]).unwrap();
        Self {
            p_uv,
            p_x_given_uv,
            card_u: 1,
            card_v: 1,
        }
    }

    /// Cardinality caps sufficient for the full region:
    /// `|U| ≤ |X| + 3` and `|V| ≤ (|X| + 2)(|X| + 3)`.
    pub fn theoretical_caps(x_size: usize) -> (usize, usize) {
        (x_size + 3, (x_size + 2) * (x_size + 3))
    }

    pub fn check_theoretical_caps(&self, x_size: usize) -> Result<()> {
        let (cu, cv) = Self::theoretical_caps(x_size);
        if self.card_u > cu || self.card_v > cv {
            return Err(ProbError::DimensionMismatch(format!(
                "aux cardinalities ({}, {}) exceed theoretical caps ({cu}, {cv})",
                self.card_u, self.card_v
            )));
        }
        Ok(())
    }
}

/// Joint law `P(u, v, x, y1, y2) = P(u,v) P(x|u,v) P(y1|x) P(y2|y1)`.
pub fn bc_joint(bc: &DegradedBC, aux: &BcAux) -> Result<JointTable> {
    if aux.p_x_given_uv.output_size() != bc.x_size() {
        return Err(ProbError::DimensionMismatch(format!(
            "aux synthesizes {} input symbols, channel expects {}",
            aux.p_x_given_uv.output_size(),
            bc.x_size()
        )));
    }
    let (cu, cv) = (aux.card_u, aux.card_v);
    JointTable::from_fn(
        vec![
            (axis::U, cu),
            (axis::V, cv),
            (axis::X, bc.x_size()),
            (axis::Y1, bc.y1_size()),
            (axis::Y2, bc.y2_size()),
        ],
        |idx| {
            let (u, v, x, y1, y2) = (idx[0], idx[1], idx[2], idx[3], idx[4]);
            aux.p_uv.probs()[u * cv + v]
                * aux.p_x_given_uv.get(u * cv + v, x)
                * bc.p_y1_given_x.get(x, y1)
                * bc.p_y2_given_y1.get(y1, y2)
        },
    )
}

/// Auxiliary parameterization for the strictly causal cribbing region:
/// independent `U`, `V`, input synthesis `P(x1 | u, v)` (rows `u · |V| + v`),
/// an independent `P(x2)` for the no-cribbing branch and `P(x2'' | u)` for
/// the cribbing branch.
#[derive(Debug, Clone)]
pub struct MacAuxStrict {
    pub p_u: ProbVector,
    pub p_v: ProbVector,
    pub p_x1_given_uv: CondKernel,
    pub p_x2: ProbVector,
    pub p_x2pp_given_u: CondKernel,
}

impl MacAuxStrict {
    pub fn card_u(&self) -> usize {
        self.p_u.alphabet_size()
    }
    pub fn card_v(&self) -> usize {
        self.p_v.alphabet_size()
    }

    /// Cardinality caps: `|U| ≤ min(|X1|·|X2| + 1, |Y| + 2)`,
    /// `|V| ≤ min(|X1|·|X2| + 4, |Y| + 5)`.
    pub fn theoretical_caps(x1: usize, x2: usize, y: usize) -> (usize, usize) {
        ((x1 * x2 + 1).min(y + 2), (x1 * x2 + 4).min(y + 5))
    }

    pub fn check_theoretical_caps(&self, mac: &MacChannel) -> Result<()> {
        let (cu, cv) = Self::theoretical_caps(mac.x1_size, mac.x2_size, mac.y_size());
        if self.card_u() > cu || self.card_v() > cv {
            return Err(ProbError::DimensionMismatch(format!(
                "aux cardinalities ({}, {}) exceed theoretical caps ({cu}, {cv})",
                self.card_u(),
                self.card_v()
            )));
        }
        Ok(())
    }

    fn validate(&self, mac: &MacChannel) -> Result<()> {
        let (cu, cv) = (self.card_u(), self.card_v());
        if self.p_x1_given_uv.input_size() != cu * cv
            || self.p_x1_given_uv.output_size() != mac.x1_size
        {
            return Err(ProbError::DimensionMismatch(
                "P(x1|u,v) shape does not match aux/channel".into(),
            ));
        }
        if self.p_x2.alphabet_size() != mac.x2_size {
            return Err(ProbError::DimensionMismatch(
                "P(x2) alphabet does not match channel".into(),
            ));
        }
        if self.p_x2pp_given_u.input_size() != cu
            || self.p_x2pp_given_u.output_size() != mac.x2_size
        {
            return Err(ProbError::DimensionMismatch(
                "P(x2''|u) shape does not match aux/channel".into(),
            ));
        }
        Ok(())
    }
}

/// Joint law for the strictly causal inner bound:
/// `P(u) P(v) P(x1|u,v) P(x2) P(y|x1,x2) P(x2''|u) P(y''|x1,x2'')`.
/// The `Y` and `Y''` axes are two uses of the same physical channel under
/// the two input couplings, so the kernel is shared and only the output
/// axis is duplicated.
pub fn mac_joint_strict(mac: &MacChannel, aux: &MacAuxStrict) -> Result<JointTable> {
    aux.validate(mac)?;
    let (cu, cv) = (aux.card_u(), aux.card_v());
    JointTable::from_fn(
        vec![
            (axis::U, cu),
            (axis::V, cv),
            (axis::X1, mac.x1_size),
            (axis::X2, mac.x2_size),
            (axis::X2PP, mac.x2_size),
            (axis::Y, mac.y_size()),
            (axis::YPP, mac.y_size()),
        ],
        |idx| {
            let (u, v, x1, x2, x2pp, y, ypp) =
                (idx[0], idx[1], idx[2], idx[3], idx[4], idx[5], idx[6]);
            aux.p_u.get(u)
                * aux.p_v.get(v)
                * aux.p_x1_given_uv.get(u * cv + v, x1)
                * aux.p_x2.get(x2)
                * aux.p_x2pp_given_u.get(u, x2pp)
                * mac.get(x1, x2, y)
                * mac.get(x1, x2pp, ypp)
        },
    )
}

/// How encoder 2's cribbing-branch input is synthesized in the causal
/// family: the inner bound draws `X2''` from `P(x2''|x1)`, the outer bound
/// relaxes this to `P(x2''|v,x1)` (rows indexed `v · |X1| + x1`).
#[derive(Debug, Clone)]
pub enum CribLaw {
    Inner(CondKernel),
    Outer(CondKernel),
}

impl CribLaw {
    pub fn is_outer(&self) -> bool {
        matches!(self, CribLaw::Outer(_))
    }
}

/// Auxiliary parameterization for the causal cribbing bounds: a joint
/// `P(v, x1)`, an independent `P(x2)`, and a [`CribLaw`].
#[derive(Debug, Clone)]
pub struct MacAuxCausal {
    pub p_vx1: JointTable,
    pub p_x2: ProbVector,
    pub crib: CribLaw,
}

impl MacAuxCausal {
    pub fn card_v(&self) -> usize {
        self.p_vx1.axis_size(axis::V).expect("V axis present")
    }

    fn validate(&self, mac: &MacChannel) -> Result<()> {
        let cv = self.p_vx1.axis_size(axis::V)?;
        let x1 = self.p_vx1.axis_size(axis::X1)?;
        if x1 != mac.x1_size {
            return Err(ProbError::DimensionMismatch(
                "P(v,x1) X1 axis does not match channel".into(),
            ));
        }
        if self.p_x2.alphabet_size() != mac.x2_size {
            return Err(ProbError::DimensionMismatch(
                "P(x2) alphabet does not match channel".into(),
            ));
        }
        let (rows, label) = match &self.crib {
            CribLaw::Inner(k) => (mac.x1_size, k),
            CribLaw::Outer(k) => (cv * mac.x1_size, k),
        };
        if label.input_size() != rows || label.output_size() != mac.x2_size {
            return Err(ProbError::DimensionMismatch(
                "crib conditional shape does not match aux/channel".into(),
            ));
        }
        Ok(())
    }
}

/// Joint law for the causal bounds over `(V, X1, X2, X2'', Y, Y'')`:
/// inner form `P(v,x1) P(x2) P(y|x1,x2) P(x2''|x1) P(y''|x1,x2'')`,
/// outer form with `P(x2''|v,x1)` instead.
pub fn mac_joint_causal(mac: &MacChannel, aux: &MacAuxCausal) -> Result<JointTable> {
    aux.validate(mac)?;
    let cv = aux.card_v();
    let x1_size = mac.x1_size;
    JointTable::from_fn(
        vec![
            (axis::V, cv),
            (axis::X1, x1_size),
            (axis::X2, mac.x2_size),
            (axis::X2PP, mac.x2_size),
            (axis::Y, mac.y_size()),
            (axis::YPP, mac.y_size()),
        ],
        |idx| {
            let (v, x1, x2, x2pp, y, ypp) = (idx[0], idx[1], idx[2], idx[3], idx[4], idx[5]);
            let crib = match &aux.crib {
                CribLaw::Inner(k) => k.get(x1, x2pp),
                CribLaw::Outer(k) => k.get(v * x1_size + x1, x2pp),
            };
            aux.p_vx1.probs()[v * x1_size + x1]
                * aux.p_x2.get(x2)
                * crib
                * mac.get(x1, x2, y)
                * mac.get(x1, x2pp, ypp)
        },
    )
}

// ---------------------------------------------------------------------------
// The four worked example channels
// ---------------------------------------------------------------------------

/// Parameters for [`example_channel`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum ExampleParams {
    /// Broadcast: clean `Y1 = X`, and `Y2` a BSC with crossover `eps`.
    /// (`eps` is the flip probability of the weak branch.)
    One { eps: f64, c12: f64 },
    /// Switched MAC with a clean `Y1 = X1` component; no parameters.
    Two,
    /// Same switched MAC but `Y1` is a BSC with crossover `q`.
    Three { q: f64 },
    /// Binary adder-noise MAC `Y = X1 ⊕ X2 ⊕ Z1 ⊕ Z2` with
    /// `Pr{Z1 = 0} = p1` and, when `X1 = 1`, `Pr{Z2 = 0} = p2`.
    Four { p1: f64, p2: f64 },
}

#[derive(Debug, Clone)]
pub enum ExampleChannel {
    Bc(DegradedBC),
    Mac(MacChannel),
}

/// Construct one of the four example channels.
pub fn example_channel(params: ExampleParams) -> Result<ExampleChannel> {
    Ok(match params {
        ExampleParams::One { eps, c12 } => ExampleChannel::Bc(example1_bc(eps, c12)?),
        ExampleParams::Two => ExampleChannel::Mac(example2_mac()),
        ExampleParams::Three { q } => ExampleChannel::Mac(example3_mac(q)?),
        ExampleParams::Four { p1, p2 } => ExampleChannel::Mac(example4_mac(p1, p2)?),
    })
}

/// Example broadcast channel: `Y1 = X` noiselessly, `Y2` through a BSC
/// with crossover `eps` (so `eps = 0` is the fully clean channel).
pub fn example1_bc(eps: f64, c12: f64) -> Result<DegradedBC> {
    make_degraded_bc(CondKernel::identity(2), CondKernel::bsc(eps)?, c12)
}

/// The switched MAC: `X1 ∈ {0,1}`, `X2 ∈ {0,1,2,3}`, output `Y = (Y1, Y2)`
/// flattened as `y = 2·y1 + y2` with `Y1 = X1`.
///
/// `Y2` responds to `X2` through one of two binary sub-channels selected by
/// `X1`: when `X1 = 0` the pair `{0,1}` maps noiselessly to `Y2` and the
/// pair `{2,3}` is erased to a uniform bit; when `X1 = 1` the roles swap.
pub fn example2_mac() -> MacChannel {
    example3_mac(0.0).expect("q = 0 is in range")
}

/// Same as [`example2_mac`] but the `Y1` component is `X1` through a BSC
/// with crossover `q`; at `q = 0` the two kernels coincide entrywise.
pub fn example3_mac(q: f64) -> Result<MacChannel> {
    if !(0.0..=1.0).contains(&q) {
        return Err(ProbError::Domain {
            value: q,
            domain: "[0, 1]",
        });
    }
    let mut rows = Vec::with_capacity(8);
    for x1 in 0..2usize {
        for x2 in 0..4usize {
            let mut row = vec![0.0; 4];
            for y1 in 0..2usize {
                let p_y1 = if y1 == x1 { 1.0 - q } else { q };
                for y2 in 0..2usize {
                    let p_y2 = example2_y2_prob(x1, x2, y2);
                    row[2 * y1 + y2] = p_y1 * p_y2;
                }
            }
            rows.push(row);
        }
    }
    MacChannel::new(CondKernel::new(rows)?, 2, 4)
}

/// `Pr{Y2 = y2 | X1 = x1, X2 = x2}` of the switched component.
fn example2_y2_prob(x1: usize, x2: usize, y2: usize) -> f64 {
    let clean_pair = if x1 == 0 { x2 < 2 } else { x2 >= 2 };
    if clean_pair {
        // within the clean pair, the low symbol maps to 0 and the high to 1
        if y2 == (x2 & 1) {
            1.0
        } else {
            0.0
        }
    } else {
        0.5
    }
}

/// The optimal cribbing conditional for the switched MAC: given `X1`,
/// encoder 2 picks uniformly inside the noiseless pair.
pub fn example2_optimal_crib() -> CondKernel {
    CondKernel::new(vec![
        vec![0.5, 0.5, 0.0, 0.0],
        vec![0.0, 0.0, 0.5, 0.5],
    ])
    .unwrap()
}

/// Binary MAC `Y = X1 ⊕ X2 ⊕ Z1 ⊕ Z2`: `Pr{Z1 = 0} = p1` always, and `Z2`
/// is 0 when `X1 = 0` and Bernoulli with `Pr{Z2 = 0} = p2` when `X1 = 1`.
/// The aggregate noise flips `Y` with probability `1 − p1` when `X1 = 0`
/// and `p1 ∗ p2` when `X1 = 1`.
pub fn example4_mac(p1: f64, p2: f64) -> Result<MacChannel> {
    for p in [p1, p2] {
        if !(0.0..=1.0).contains(&p) {
            return Err(ProbError::Domain {
                value: p,
                domain: "[0, 1]",
            });
        }
    }
    let flip = example4_flip_probs(p1, p2);
    let mut rows = Vec::with_capacity(4);
    for x1 in 0..2usize {
        for x2 in 0..2usize {
            let f = flip[x1];
            let base = x1 ^ x2;
            let mut row = vec![0.0; 2];
            row[base] = 1.0 - f;
            row[base ^ 1] = f;
            rows.push(row);
        }
    }
    MacChannel::new(CondKernel::new(rows)?, 2, 2)
}

/// `[Pr{noise flips | X1 = 0}, Pr{noise flips | X1 = 1}]`.
pub fn example4_flip_probs(p1: f64, p2: f64) -> [f64; 2] {
    [1.0 - p1, crate::prob::bconv(p1, p2)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn degraded_bc_construction_and_errors() {
        let bc = example1_bc(0.1, 0.5).unwrap();
        let end_to_end = bc.p_y2_given_x();
        assert_abs_diff_eq!(end_to_end.get(0, 1), 0.1, epsilon = 1e-15);

        // noiseless BC
        let clean = make_degraded_bc(CondKernel::identity(2), CondKernel::identity(2), 0.0)
            .unwrap();
        assert_eq!(clean.p_y2_given_x(), CondKernel::identity(2));

        // invalid kernel row is rejected before it reaches the builder
        assert!(CondKernel::new(vec![vec![0.45, 0.45], vec![0.5, 0.5]]).is_err());
        // dimension mismatch in the cascade
        let k3 = CondKernel::identity(3);
        assert!(make_degraded_bc(CondKernel::identity(2), k3, 0.0).is_err());
        // negative conference capacity
        assert!(make_degraded_bc(
            CondKernel::identity(2),
            CondKernel::identity(2),
            -0.1
        )
        .is_err());
    }

    #[test]
    fn bc_joint_marginals_and_degradedness() {
        let bc = example1_bc(0.1, 0.5).unwrap();
        let aux = BcAux::constant(&ProbVector::uniform(2));
        let joint = bc_joint(&bc, &aux).unwrap();
        // uniform X through the clean branch: P(Y1) uniform
        let y1 = joint.marginal(&[axis::Y1]).unwrap();
        assert_abs_diff_eq!(y1.probs()[0], 0.5, epsilon = 1e-12);
        // degradedness consequence
        assert!(
            joint
                .conditional_mutual_information(&[axis::U, axis::V], &[axis::Y2], &[axis::Y1])
                .unwrap()
                < 1e-10
        );
        // data processing on the cascade
        let i_xy1 = joint.mutual_information(&[axis::X], &[axis::Y1]).unwrap();
        let i_xy2 = joint.mutual_information(&[axis::X], &[axis::Y2]).unwrap();
        assert!(i_xy2 <= i_xy1 + 1e-10);
    }

    #[test]
    fn bc_joint_point_mass_input_and_mismatch() {
        let bc = example1_bc(0.2, 0.0).unwrap();
        let aux = BcAux::constant(&ProbVector::point_mass(2, 1));
        let joint = bc_joint(&bc, &aux).unwrap();
        assert_abs_diff_eq!(
            joint
                .conditional_entropy(&[axis::X], &[axis::U, axis::V])
                .unwrap(),
            0.0,
            epsilon = 1e-12
        );

        // mismatched aux cardinality
        let bad = BcAux::constant(&ProbVector::uniform(3));
        assert!(bc_joint(&bc, &bad).is_err());
    }

    #[test]
    fn strict_joint_factorization_invariants() {
        let mac = example2_mac();
        let aux = MacAuxStrict {
            p_u: ProbVector::uniform(2),
            p_v: ProbVector::uniform(2),
            p_x1_given_uv: CondKernel::new(vec![
                vec![0.7, 0.3],
                vec![0.4, 0.6],
                vec![0.2, 0.8],
                vec![0.9, 0.1],
            ])
            .unwrap(),
            p_x2: ProbVector::uniform(4),
            p_x2pp_given_u: CondKernel::new(vec![
                vec![0.25, 0.25, 0.25, 0.25],
                vec![0.1, 0.2, 0.3, 0.4],
            ])
            .unwrap(),
        };
        let joint = mac_joint_strict(&mac, &aux).unwrap();
        let tol = 1e-10;
        assert!(joint.mutual_information(&[axis::U], &[axis::V]).unwrap() < tol);
        assert!(
            joint
                .mutual_information(&[axis::X2], &[axis::U, axis::V, axis::X1])
                .unwrap()
                < tol
        );
        assert!(
            joint
                .conditional_mutual_information(
                    &[axis::X2PP],
                    &[axis::V, axis::X1],
                    &[axis::U]
                )
                .unwrap()
                < tol
        );
    }

    #[test]
    fn strict_joint_with_u_copy_of_x1_hits_unit_rate() {
        // U = X1 (copy), crib conditional = the optimal switched choice:
        // the cribbing branch carries exactly one clean bit.
        let mac = example2_mac();
        let aux = MacAuxStrict {
            p_u: ProbVector::uniform(2),
            p_v: ProbVector::uniform(1),
            p_x1_given_uv: CondKernel::identity(2),
            p_x2: ProbVector::uniform(4),
            p_x2pp_given_u: example2_optimal_crib(),
        };
        let joint = mac_joint_strict(&mac, &aux).unwrap();
        let i = joint
            .conditional_mutual_information(
                &[axis::X2PP],
                &[axis::YPP],
                &[axis::U, axis::V, axis::X1],
            )
            .unwrap();
        assert_abs_diff_eq!(i, 1.0, epsilon = 1e-9);
    }

    #[test]
    fn causal_joint_inner_and_outer() {
        let mac = example4_mac(0.1, 0.4).unwrap();
        // V = X1 copy
        let p_vx1 = JointTable::from_fn(vec![(axis::V, 2), (axis::X1, 2)], |idx| {
            if idx[0] == idx[1] {
                0.5
            } else {
                0.0
            }
        })
        .unwrap();
        let inner = MacAuxCausal {
            p_vx1: p_vx1.clone(),
            p_x2: ProbVector::binary(0.3).unwrap(),
            crib: CribLaw::Inner(CondKernel::new(vec![vec![0.8, 0.2], vec![0.3, 0.7]]).unwrap()),
        };
        let joint = mac_joint_causal(&mac, &inner).unwrap();
        assert_abs_diff_eq!(
            joint.conditional_entropy(&[axis::X1], &[axis::V]).unwrap(),
            0.0,
            epsilon = 1e-12
        );
        // inner factorization: X2'' ⟂ V given X1
        assert!(
            joint
                .conditional_mutual_information(&[axis::X2PP], &[axis::V], &[axis::X1])
                .unwrap()
                < 1e-10
        );
        // X2 independent of (V, X1)
        assert!(
            joint
                .mutual_information(&[axis::X2], &[axis::V, axis::X1])
                .unwrap()
                < 1e-10
        );

        // outer form: a V-dependent crib conditional is representable
        let outer = MacAuxCausal {
            p_vx1,
            p_x2: ProbVector::binary(0.3).unwrap(),
            crib: CribLaw::Outer(
                CondKernel::new(vec![
                    vec![0.8, 0.2],
                    vec![0.5, 0.5],
                    vec![0.5, 0.5],
                    vec![0.3, 0.7],
                ])
                .unwrap(),
            ),
        };
        assert!(mac_joint_causal(&mac, &outer).is_ok());
    }

    #[test]
    fn example2_kernel_structure() {
        let mac = example2_mac();
        assert_eq!((mac.x1_size, mac.x2_size, mac.y_size()), (2, 4, 4));
        // X1 = 0: X2 ∈ {0,1} noiseless, X2 ∈ {2,3} uniform
        assert_abs_diff_eq!(mac.get(0, 0, 0), 1.0, epsilon = 1e-15); // y=(0,0)
        assert_abs_diff_eq!(mac.get(0, 1, 1), 1.0, epsilon = 1e-15); // y=(0,1)
        assert_abs_diff_eq!(mac.get(0, 2, 0), 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(mac.get(0, 2, 1), 0.5, epsilon = 1e-15);
        // X1 = 1: roles swap, Y1 = 1
        assert_abs_diff_eq!(mac.get(1, 2, 2), 1.0, epsilon = 1e-15); // y=(1,0)
        assert_abs_diff_eq!(mac.get(1, 0, 2), 0.5, epsilon = 1e-15);
    }

    #[test]
    fn example3_reduces_to_example2_at_q_zero() {
        let e2 = example2_mac();
        let e3 = example3_mac(0.0).unwrap();
        for row in 0..8 {
            for y in 0..4 {
                assert_abs_diff_eq!(
                    e2.p_y_given_x1x2.get(row, y),
                    e3.p_y_given_x1x2.get(row, y),
                    epsilon = 1e-12
                );
            }
        }
        assert!(example3_mac(1.5).is_err());
    }

    #[test]
    fn example1_clean_at_zero_crossover() {
        // eps = 0 (the paper's Pr{Z = 0} = p = 1 case): Y2 = X noiselessly
        let bc = example1_bc(0.0, 0.5).unwrap();
        assert_eq!(bc.p_y2_given_x(), CondKernel::identity(2));
    }

    #[test]
    fn example4_flip_structure() {
        let mac = example4_mac(1.0, 1.0).unwrap(); // both noise bits stuck at 0
        assert_abs_diff_eq!(mac.get(0, 1, 1), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(mac.get(1, 1, 0), 1.0, epsilon = 1e-15);
        let [f0, f1] = example4_flip_probs(0.9, 0.8);
        assert_abs_diff_eq!(f0, 0.1, epsilon = 1e-15);
        // flips iff Z1 ⊕ Z2 = 1
        assert_abs_diff_eq!(f1, 0.9 * 0.2 + 0.1 * 0.8, epsilon = 1e-15);
        assert!(example4_mac(-0.2, 0.5).is_err());
    }
}
