//! Per-theorem constraint builders.
//!
//! Each function evaluates one achievable-rate (or outer) bound at a fixed
//! auxiliary parameterization and returns the polyhedron as a
//! [`ConstraintSet`]. All mutual informations are read off the factorized
//! joint built by the channels module, so the inequality lists here are the
//! only place the bounds are spelled out.

use super::frontier::ConstraintSet;
use crate::channels::{
    axis, bc_joint, mac_joint_causal, mac_joint_strict, BcAux, DegradedBC,
    MacAuxCausal, MacAuxStrict, MacChannel,
};
use crate::prob::{CondKernel, JointTable, ProbError, ProbVector, Result};

pub const BC_LABELS: [&str; 3] = ["R1", "R2", "R2p"];
pub const MAC_LABELS: [&str; 4] = ["R1", "R1p", "R2", "R2pp"];
pub const HAT_LABELS: [&str; 3] = ["R1", "R2", "R2pp"];

/// Broadcast-channel region at one auxiliary choice:
///
/// ```text
/// R1  ≤ I(X; Y1 | U, V)
/// R2  ≤ I(U; Y2)
/// R2' ≤ I(V; Y2 | U) + C12      (the min is stored as two rows)
/// R2' ≤ I(V; Y1 | U)
/// ```
pub fn bc_region_constraints(bc: &DegradedBC, aux: &BcAux) -> Result<ConstraintSet> {
    let joint = bc_joint(bc, aux)?;
    let mut cs = ConstraintSet::new(BC_LABELS.to_vec());
    cs.push(
        &["R1"],
        joint.conditional_mutual_information(&[axis::X], &[axis::Y1], &[axis::U, axis::V])?,
    );
    cs.push(&["R2"], joint.mutual_information(&[axis::U], &[axis::Y2])?);
    cs.push(
        &["R2p"],
        joint.conditional_mutual_information(&[axis::V], &[axis::Y2], &[axis::U])?
            + bc.conf_capacity,
    );
    cs.push(
        &["R2p"],
        joint.conditional_mutual_information(&[axis::V], &[axis::Y1], &[axis::U])?,
    );
    Ok(cs)
}

/// Which special-case reduction of the broadcast region to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BcSpecialKind {
    /// Zero-capacity conference: the region collapses onto the degraded-BC
    /// capacity region in the coordinates `(R1, R2 + R2')`.
    NoConf,
    /// `R2 = 0` (null `U`): the two-message conferencing region.
    R2Zero,
    /// Reliable link with `R2' ≤ C12`: `R1 + R2' ≤ I(X;Y1)`, `R2' ≤ C12`.
    ReliableSmallR2p,
    /// Unreliable link with `R2' ≤ C12`:
    /// `R1 + R2' ≤ I(X;Y1|U)`, `R2 ≤ I(U;Y2)`, `R2' ≤ C12`.
    UnreliableSmallR2p,
}

/// Auxiliary shapes accepted by [`bc_special_constraints`]; each kind uses
/// the part it needs.
#[derive(Debug, Clone)]
pub enum BcSpecialAux {
    /// `(P(ũ), P(x|ũ))` — for [`BcSpecialKind::NoConf`] (labels `R1`, `R2`
    /// where `R2` is the total rate to user 2) and
    /// [`BcSpecialKind::UnreliableSmallR2p`] (with `ũ` read as `U`).
    SingleAux {
        p_aux: ProbVector,
        p_x_given_aux: CondKernel,
    },
    /// A full [`BcAux`] whose `U` must be constant — for
    /// [`BcSpecialKind::R2Zero`].
    NullU(BcAux),
    /// Input law only — for [`BcSpecialKind::ReliableSmallR2p`].
    InputOnly(ProbVector),
}

/// Evaluate the reduced constraint sets of the special cases verbatim.
pub fn bc_special_constraints(
    kind: BcSpecialKind,
    bc: &DegradedBC,
    aux: &BcSpecialAux,
) -> Result<ConstraintSet> {
    match (kind, aux) {
        (BcSpecialKind::NoConf, BcSpecialAux::SingleAux { p_aux, p_x_given_aux }) => {
            let joint = single_aux_joint(bc, p_aux, p_x_given_aux)?;
            let mut cs = ConstraintSet::new(vec!["R1", "R2"]);
            cs.push(
                &["R1"],
                joint.conditional_mutual_information(&[axis::X], &[axis::Y1], &[axis::U])?,
            );
            cs.push(&["R2"], joint.mutual_information(&[axis::U], &[axis::Y2])?);
            Ok(cs)
        }
        (BcSpecialKind::R2Zero, BcSpecialAux::NullU(aux)) => {
            if aux.card_u != 1 {
                return Err(ProbError::DimensionMismatch(
                    "R2Zero reduction requires a constant U".into(),
                ));
            }
            let joint = bc_joint(bc, aux)?;
            let mut cs = ConstraintSet::new(vec!["R1", "R2p"]);
            cs.push(
                &["R1"],
                joint.conditional_mutual_information(&[axis::X], &[axis::Y1], &[axis::V])?,
            );
            cs.push(
                &["R2p"],
                joint.mutual_information(&[axis::V], &[axis::Y2])? + bc.conf_capacity,
            );
            cs.push(
                &["R2p"],
                joint.mutual_information(&[axis::V], &[axis::Y1])?,
            );
            Ok(cs)
        }
        (BcSpecialKind::ReliableSmallR2p, BcSpecialAux::InputOnly(p_x)) => {
            let joint = single_aux_joint(bc, &ProbVector::uniform(1), &to_kernel(p_x))?;
            let mut cs = ConstraintSet::new(vec!["R1", "R2p"]);
            cs.push(
                &["R1", "R2p"],
                joint.mutual_information(&[axis::X], &[axis::Y1])?,
            );
            cs.push(&["R2p"], bc.conf_capacity);
            Ok(cs)
        }
        (BcSpecialKind::UnreliableSmallR2p, BcSpecialAux::SingleAux { p_aux, p_x_given_aux }) => {
            let joint = single_aux_joint(bc, p_aux, p_x_given_aux)?;
            let mut cs = ConstraintSet::new(BC_LABELS.to_vec());
            cs.push(
                &["R1", "R2p"],
                joint.conditional_mutual_information(&[axis::X], &[axis::Y1], &[axis::U])?,
            );
            cs.push(&["R2"], joint.mutual_information(&[axis::U], &[axis::Y2])?);
            cs.push(&["R2p"], bc.conf_capacity);
            Ok(cs)
        }
        _ => Err(ProbError::DimensionMismatch(
            "auxiliary shape does not match the requested special case".into(),
        )),
    }
}

fn to_kernel(p_x: &ProbVector) -> CondKernel {
    CondKernel::new(vec![p_x.probs().to_vec()]).expect("row is a valid distribution")
}

/// Joint `P(u, x, y1, y2)` for a single auxiliary layer.
fn single_aux_joint(
    bc: &DegradedBC,
    p_aux: &ProbVector,
    p_x_given_aux: &CondKernel,
) -> Result<JointTable> {
    if p_x_given_aux.input_size() != p_aux.alphabet_size()
        || p_x_given_aux.output_size() != bc.x_size()
    {
        return Err(ProbError::DimensionMismatch(
            "P(x|ũ) shape does not match aux/channel".into(),
        ));
    }
    JointTable::from_fn(
        vec![
            (axis::U, p_aux.alphabet_size()),
            (axis::X, bc.x_size()),
            (axis::Y1, bc.y1_size()),
            (axis::Y2, bc.y2_size()),
        ],
        |idx| {
            let (u, x, y1, y2) = (idx[0], idx[1], idx[2], idx[3]);
            p_aux.get(u)
                * p_x_given_aux.get(u, x)
                * bc.p_y1_given_x.get(x, y1)
                * bc.p_y2_given_y1.get(y1, y2)
        },
    )
}

/// Which MAC bound to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MacVariant {
    /// Strictly causal inner bound (7 inequalities, aux = [`MacAuxStrict`]).
    StrictInner,
    /// Causal inner bound (7 inequalities, aux = [`MacAuxCausal`] inner form).
    CausalInner,
    /// Causal/non-causal outer bound (6 inequalities, outer form allowed).
    Outer,
    /// The `R1' = 0` capacity region with `V` eliminated (5 inequalities,
    /// aux = [`HatAux`]).
    Hat,
}

/// Auxiliary for [`MacVariant::Hat`]: a plain product input law plus the
/// cribbing conditional.
#[derive(Debug, Clone)]
pub struct HatAux {
    pub p_x1: ProbVector,
    pub p_x2: ProbVector,
    pub p_x2pp_given_x1: CondKernel,
}

impl HatAux {
    /// Joint over `(X1, X2, X2'', Y, Y'')` with
    /// `P(x1) P(x2) P(y|x1,x2) P(x2''|x1) P(y''|x1,x2'')`.
    pub fn joint(&self, mac: &MacChannel) -> Result<JointTable> {
        if self.p_x1.alphabet_size() != mac.x1_size
            || self.p_x2.alphabet_size() != mac.x2_size
            || self.p_x2pp_given_x1.input_size() != mac.x1_size
            || self.p_x2pp_given_x1.output_size() != mac.x2_size
        {
            return Err(ProbError::DimensionMismatch(
                "hat aux shape does not match channel".into(),
            ));
        }
        JointTable::from_fn(
            vec![
                (axis::X1, mac.x1_size),
                (axis::X2, mac.x2_size),
                (axis::X2PP, mac.x2_size),
                (axis::Y, mac.y_size()),
                (axis::YPP, mac.y_size()),
            ],
            |idx| {
                let (x1, x2, x2pp, y, ypp) = (idx[0], idx[1], idx[2], idx[3], idx[4]);
                self.p_x1.get(x1)
                    * self.p_x2.get(x2)
                    * self.p_x2pp_given_x1.get(x1, x2pp)
                    * mac.get(x1, x2, y)
                    * mac.get(x1, x2pp, ypp)
            },
        )
    }
}

/// Auxiliary argument for [`mac_region_constraints`].
#[derive(Debug, Clone)]
pub enum MacAux {
    Strict(MacAuxStrict),
    Causal(MacAuxCausal),
    Hat(HatAux),
}

/// Evaluate the chosen MAC bound at one parameterization. The emitted
/// inequality counts are 7 / 7 / 6 / 5 for strict / causal / outer / hat.
pub fn mac_region_constraints(
    variant: MacVariant,
    mac: &MacChannel,
    aux: &MacAux,
) -> Result<ConstraintSet> {
    match (variant, aux) {
        (MacVariant::StrictInner, MacAux::Strict(aux)) => {
            let j = mac_joint_strict(mac, aux)?;
            let mut cs = ConstraintSet::new(MAC_LABELS.to_vec());
            push_no_crib_rows(&mut cs, &j)?;
            cs.push(
                &["R1p"],
                j.conditional_entropy(&[axis::X1], &[axis::U, axis::V])?,
            );
            cs.push(
                &["R2pp"],
                j.conditional_mutual_information(
                    &[axis::X2PP],
                    &[axis::YPP],
                    &[axis::U, axis::V, axis::X1],
                )?,
            );
            cs.push(
                &["R1p", "R2pp"],
                j.conditional_mutual_information(
                    &[axis::X1, axis::X2PP],
                    &[axis::YPP],
                    &[axis::V],
                )?,
            );
            cs.push(
                &["R1", "R1p", "R2pp"],
                j.mutual_information(&[axis::X1, axis::X2PP], &[axis::YPP])?,
            );
            Ok(cs)
        }
        (MacVariant::CausalInner, MacAux::Causal(aux)) => {
            if aux.crib.is_outer() {
                return Err(ProbError::DimensionMismatch(
                    "causal inner bound requires the P(x2''|x1) crib form".into(),
                ));
            }
            let j = mac_joint_causal(mac, aux)?;
            let mut cs = ConstraintSet::new(MAC_LABELS.to_vec());
            push_no_crib_rows(&mut cs, &j)?;
            cs.push(&["R1p"], j.conditional_entropy(&[axis::X1], &[axis::V])?);
            cs.push(
                &["R2pp"],
                j.conditional_mutual_information(
                    &[axis::X2PP],
                    &[axis::YPP],
                    &[axis::V, axis::X1],
                )?,
            );
            cs.push(
                &["R1p", "R2pp"],
                j.conditional_mutual_information(
                    &[axis::X1, axis::X2PP],
                    &[axis::YPP],
                    &[axis::V],
                )?,
            );
            cs.push(
                &["R1", "R1p", "R2pp"],
                j.mutual_information(&[axis::X1, axis::X2PP], &[axis::YPP])?,
            );
            Ok(cs)
        }
        (MacVariant::Outer, MacAux::Causal(aux)) => {
            let j = mac_joint_causal(mac, aux)?;
            let mut cs = ConstraintSet::new(MAC_LABELS.to_vec());
            cs.push(
                &["R1"],
                j.conditional_mutual_information(&[axis::V], &[axis::Y], &[axis::X2])?,
            );
            cs.push(
                &["R2"],
                j.conditional_mutual_information(&[axis::X2], &[axis::Y], &[axis::X1])?,
            );
            cs.push(
                &["R1", "R2"],
                j.mutual_information(&[axis::V, axis::X2], &[axis::Y])?,
            );
            cs.push(&["R1p"], j.conditional_entropy(&[axis::X1], &[axis::V])?);
            cs.push(
                &["R2pp"],
                j.conditional_mutual_information(
                    &[axis::X2PP],
                    &[axis::YPP],
                    &[axis::V, axis::X1],
                )?,
            );
            cs.push(
                &["R1", "R1p", "R2pp"],
                j.mutual_information(&[axis::X1, axis::X2PP], &[axis::YPP])?,
            );
            Ok(cs)
        }
        (MacVariant::Hat, MacAux::Hat(aux)) => {
            let j = aux.joint(mac)?;
            let mut cs = ConstraintSet::new(HAT_LABELS.to_vec());
            cs.push(
                &["R1"],
                j.conditional_mutual_information(&[axis::X1], &[axis::Y], &[axis::X2])?,
            );
            cs.push(
                &["R2"],
                j.conditional_mutual_information(&[axis::X2], &[axis::Y], &[axis::X1])?,
            );
            cs.push(
                &["R1", "R2"],
                j.mutual_information(&[axis::X1, axis::X2], &[axis::Y])?,
            );
            cs.push(
                &["R2pp"],
                j.conditional_mutual_information(&[axis::X2PP], &[axis::YPP], &[axis::X1])?,
            );
            cs.push(
                &["R1", "R2pp"],
                j.mutual_information(&[axis::X1, axis::X2PP], &[axis::YPP])?,
            );
            Ok(cs)
        }
        _ => Err(ProbError::DimensionMismatch(
            "auxiliary shape does not match the requested variant".into(),
        )),
    }
}

/// The three inequalities shared by the inner bounds' no-cribbing branch:
/// `R1 ≤ I(V;Y|X2)`, `R2 ≤ I(X2;Y|V)`, `R1 + R2 ≤ I(V,X2;Y)`.
fn push_no_crib_rows(cs: &mut ConstraintSet, j: &JointTable) -> Result<()> {
    cs.push(
        &["R1"],
        j.conditional_mutual_information(&[axis::V], &[axis::Y], &[axis::X2])?,
    );
    cs.push(
        &["R2"],
        j.conditional_mutual_information(&[axis::X2], &[axis::Y], &[axis::V])?,
    );
    cs.push(
        &["R1", "R2"],
        j.mutual_information(&[axis::V, axis::X2], &[axis::Y])?,
    );
    Ok(())
}

/// The classic no-cribbing MAC pentagon at a product input law — the oracle
/// the robust scheme's `(R1, R2)` face is compared against.
pub fn standard_mac_constraints(
    mac: &MacChannel,
    p_x1: &ProbVector,
    p_x2: &ProbVector,
) -> Result<ConstraintSet> {
    if p_x1.alphabet_size() != mac.x1_size || p_x2.alphabet_size() != mac.x2_size {
        return Err(ProbError::DimensionMismatch(
            "input laws do not match channel alphabets".into(),
        ));
    }
    let j = JointTable::from_fn(
        vec![
            (axis::X1, mac.x1_size),
            (axis::X2, mac.x2_size),
            (axis::Y, mac.y_size()),
        ],
        |idx| p_x1.get(idx[0]) * p_x2.get(idx[1]) * mac.get(idx[0], idx[1], idx[2]),
    )?;
    let mut cs = ConstraintSet::new(vec!["R1", "R2"]);
    cs.push(
        &["R1"],
        j.conditional_mutual_information(&[axis::X1], &[axis::Y], &[axis::X2])?,
    );
    cs.push(
        &["R2"],
        j.conditional_mutual_information(&[axis::X2], &[axis::Y], &[axis::X1])?,
    );
    cs.push(
        &["R1", "R2"],
        j.mutual_information(&[axis::X1, axis::X2], &[axis::Y])?,
    );
    Ok(cs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::{example1_bc, example2_mac, example2_optimal_crib, CribLaw};
    use approx::assert_abs_diff_eq;
    use crate::prob::JointTable;

    #[test]
    fn bc_constraints_constant_aux() {
        // U, V constant, X uniform on the clean/BSC example channel
        let bc = example1_bc(0.1, 0.5).unwrap();
        let aux = BcAux::constant(&ProbVector::uniform(2));
        let cs = bc_region_constraints(&bc, &aux).unwrap();
        assert_eq!(cs.rows.len(), 4);
        assert_abs_diff_eq!(cs.bound_for(&["R1"]).unwrap(), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(cs.bound_for(&["R2"]).unwrap(), 0.0, epsilon = 1e-12);
        // both R2' rows: constants give zero MI, so 0 + C12 and 0
        let r2p_bounds: Vec<f64> = cs
            .rows
            .iter()
            .filter(|r| r.coeffs == vec![0.0, 0.0, 1.0])
            .map(|r| r.bound)
            .collect();
        assert_eq!(r2p_bounds.len(), 2);
        assert_abs_diff_eq!(r2p_bounds[0], 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(r2p_bounds[1], 0.0, epsilon = 1e-12);
    }

    #[test]
    fn bc_constraints_v_equals_x() {
        // U constant, V = X uniform, eps = 0.1, C12 = 0.5:
        // R2' ≤ min{I(V;Y2|U) + C12, I(V;Y1|U)} = min{1.031, 1.0}
        let bc = example1_bc(0.1, 0.5).unwrap();
        let p_uv = JointTable::new(vec![(axis::U, 1), (axis::V, 2)], vec![0.5, 0.5]).unwrap();
        let aux = BcAux::new(p_uv, CondKernel::identity(2)).unwrap();
        let cs = bc_region_constraints(&bc, &aux).unwrap();
        let r2p: Vec<f64> = cs
            .rows
            .iter()
            .filter(|r| r.coeffs == vec![0.0, 0.0, 1.0])
            .map(|r| r.bound)
            .collect();
        assert_abs_diff_eq!(r2p[0], 0.531004 + 0.5, epsilon = 1e-5);
        assert_abs_diff_eq!(r2p[1], 1.0, epsilon = 1e-12);
        // the polytope caps R2' at the min of the two rows
        let verts = cs.pareto_vertices();
        let max_r2p = verts.iter().map(|p| p.0[2]).fold(0.0, f64::max);
        assert_abs_diff_eq!(max_r2p, 1.0, epsilon = 1e-9);
    }

    #[test]
    fn bc_no_conf_reduction_matches_degraded_bounds() {
        // with C12 = 0 the R2' rows collapse onto I(V;Y2|U) by degradedness
        let bc = example1_bc(0.1, 0.0).unwrap();
        let p_uv =
            JointTable::new(vec![(axis::U, 1), (axis::V, 2)], vec![0.5, 0.5]).unwrap();
        let aux = BcAux::new(p_uv, CondKernel::bsc(0.2).unwrap()).unwrap();
        let cs = bc_region_constraints(&bc, &aux).unwrap();
        let r2p: Vec<f64> = cs
            .rows
            .iter()
            .filter(|r| r.coeffs == vec![0.0, 0.0, 1.0])
            .map(|r| r.bound)
            .collect();
        // I(V;Y2|U) ≤ I(V;Y1|U): the conference row is the binding one
        assert!(r2p[0] <= r2p[1] + 1e-12);
    }

    #[test]
    fn bc_special_shapes() {
        let bc = example1_bc(0.0, 0.4).unwrap();
        // reliable small-R2' on the clean channel with uniform X
        let cs = bc_special_constraints(
            BcSpecialKind::ReliableSmallR2p,
            &bc,
            &BcSpecialAux::InputOnly(ProbVector::uniform(2)),
        )
        .unwrap();
        assert_abs_diff_eq!(cs.bound_for(&["R1", "R2p"]).unwrap(), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(cs.bound_for(&["R2p"]).unwrap(), 0.4, epsilon = 1e-12);

        // r2_zero with constant V: R2' ≤ 0 via the I(V;Y1) row
        let aux = BcAux::new(
            JointTable::new(vec![(axis::U, 1), (axis::V, 1)], vec![1.0]).unwrap(),
            CondKernel::new(vec![vec![0.5, 0.5]]).unwrap(),
        )
        .unwrap();
        let cs =
            bc_special_constraints(BcSpecialKind::R2Zero, &bc, &BcSpecialAux::NullU(aux))
                .unwrap();
        let max_r2p = cs
            .pareto_vertices()
            .iter()
            .map(|p| p.0[1])
            .fold(0.0, f64::max);
        assert_abs_diff_eq!(max_r2p, 0.0, epsilon = 1e-12);

        // wrong aux shape for the kind
        let bad = bc_special_constraints(
            BcSpecialKind::NoConf,
            &bc,
            &BcSpecialAux::InputOnly(ProbVector::uniform(2)),
        );
        assert!(bad.is_err());
    }

    #[test]
    fn hat_constraints_on_switched_mac() {
        let mac = example2_mac();
        let aux = MacAux::Hat(HatAux {
            p_x1: ProbVector::uniform(2),
            p_x2: ProbVector::uniform(4),
            p_x2pp_given_x1: example2_optimal_crib(),
        });
        let cs = mac_region_constraints(MacVariant::Hat, &mac, &aux).unwrap();
        assert_eq!(cs.rows.len(), 5);
        assert_abs_diff_eq!(cs.bound_for(&["R2pp"]).unwrap(), 1.0, epsilon = 1e-9);
        assert_abs_diff_eq!(cs.bound_for(&["R1"]).unwrap(), 1.0, epsilon = 1e-9);
        // uniform p: R2 ≤ H2(0.5) − 0.5 = 0.5
        assert_abs_diff_eq!(cs.bound_for(&["R2"]).unwrap(), 0.5, epsilon = 1e-9);
    }

    #[test]
    fn causal_inner_with_v_copy_of_x1() {
        let mac = example2_mac();
        let p_vx1 = JointTable::from_fn(vec![(axis::V, 2), (axis::X1, 2)], |idx| {
            if idx[0] == idx[1] {
                0.5
            } else {
                0.0
            }
        })
        .unwrap();
        let aux = MacAux::Causal(MacAuxCausal {
            p_vx1,
            p_x2: ProbVector::uniform(4),
            crib: CribLaw::Inner(example2_optimal_crib()),
        });
        let cs = mac_region_constraints(MacVariant::CausalInner, &mac, &aux).unwrap();
        assert_eq!(cs.rows.len(), 7);
        // V = X1 pins H(X1|V) = 0
        assert_abs_diff_eq!(cs.bound_for(&["R1p"]).unwrap(), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn variant_counts_and_mismatches() {
        let mac = example2_mac();
        let strict = MacAux::Strict(MacAuxStrict {
            p_u: ProbVector::uniform(2),
            p_v: ProbVector::uniform(2),
            p_x1_given_uv: CondKernel::new(vec![
                vec![0.5, 0.5],
                vec![0.5, 0.5],
                vec![0.5, 0.5],
                vec![0.5, 0.5],
            ])
            .unwrap(),
            p_x2: ProbVector::uniform(4),
            p_x2pp_given_u: example2_optimal_crib(),
        });
        let cs = mac_region_constraints(MacVariant::StrictInner, &mac, &strict).unwrap();
        assert_eq!(cs.rows.len(), 7);

        let p_vx1 = JointTable::new(
            vec![(axis::V, 2), (axis::X1, 2)],
            vec![0.3, 0.2, 0.1, 0.4],
        )
        .unwrap();
        let causal = MacAux::Causal(MacAuxCausal {
            p_vx1,
            p_x2: ProbVector::uniform(4),
            crib: CribLaw::Inner(example2_optimal_crib()),
        });
        let cs = mac_region_constraints(MacVariant::Outer, &mac, &causal).unwrap();
        assert_eq!(cs.rows.len(), 6);

        // aux/variant mismatch
        assert!(mac_region_constraints(MacVariant::Hat, &mac, &causal).is_err());
        assert!(mac_region_constraints(MacVariant::CausalInner, &mac, &strict).is_err());
    }
}
