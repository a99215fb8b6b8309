//! Sweeps over auxiliary parameterizations and frontier optimization.
//!
//! Every region in this crate is a union, over a family of auxiliary
//! distributions, of small polyhedra. The sweep machinery enumerates
//! parameterizations (simplex grids where the family is low-dimensional,
//! flat-Dirichlet sampling otherwise), collects each polyhedron's
//! Pareto-relevant vertices, and convexifies the union — time-sharing
//! without an explicit time-sharing variable.
//!
//! The enumerators return materialized auxiliary values so that different
//! bound evaluators (the generic joint-table route and the closed-form
//! example route) can be run on identical parameter points.

use super::constraints::{
    bc_region_constraints, bc_special_constraints, mac_region_constraints,
    standard_mac_constraints, BcSpecialAux, BcSpecialKind, HatAux, MacAux, MacVariant,
};
use super::frontier::{pareto_filter, HullMode, RatePoint, RateRegion};
use crate::channels::{axis, BcAux, CribLaw, DegradedBC, MacAuxCausal, MacAuxStrict, MacChannel};
use crate::prob::{CondKernel, JointTable, ProbError, ProbVector, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;

/// Families with at most this many free simplex coordinates are gridded;
/// larger ones fall back to Dirichlet sampling.
pub const GRID_DIM_LIMIT: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    /// Full product grid over every block (only sensible for small families).
    Grid,
    /// Flat Dirichlet random sampling of every block.
    Dirichlet,
    /// Grids on every sub-family with ≤ [`GRID_DIM_LIMIT`] free coordinates,
    /// plus Dirichlet sampling where the family is higher-dimensional.
    Auto,
}

#[derive(Debug, Clone, Copy)]
pub struct SweepSpec {
    pub mode: SweepMode,
    /// Grid step on each simplex coordinate.
    pub step: f64,
    /// Dirichlet sample count.
    pub samples: usize,
    pub seed: u64,
}

impl Default for SweepSpec {
    fn default() -> Self {
        Self {
            mode: SweepMode::Auto,
            step: 0.05,
            samples: 20_000,
            seed: 0xC0_0B,
        }
    }
}

impl SweepSpec {
    fn grid_m(&self) -> usize {
        (1.0 / self.step).round().max(1.0) as usize
    }
}

/// Auxiliary cardinality caps for the sweep.
#[derive(Debug, Clone, Copy)]
pub struct Caps {
    pub card_u: usize,
    pub card_v: usize,
}

impl Caps {
    pub fn new(card_u: usize, card_v: usize) -> Self {
        Self { card_u, card_v }
    }
}

/// What to optimize.
#[derive(Debug, Clone)]
pub enum RegionModel {
    /// The three-rate broadcast region (labels `R1, R2, R2p`).
    BcFull(DegradedBC),
    /// Degraded-BC capacity oracle over a single merged auxiliary
    /// (labels `R1, R2` with `R2` the total rate to user 2).
    BcNoConfOracle(DegradedBC),
    /// One of the MAC bounds. A `fixed_crib` kernel `P(x2''|x1)` pins the
    /// cribbing conditional instead of sweeping it (tiled over `v` rows for
    /// the outer variant).
    Mac {
        mac: MacChannel,
        variant: MacVariant,
        fixed_crib: Option<CondKernel>,
    },
    /// The no-cribbing MAC pentagon oracle (labels `R1, R2`).
    MacStandard(MacChannel),
}

// ---------------------------------------------------------------------------
// Simplex enumeration / sampling
// ---------------------------------------------------------------------------

/// All points of the `dim`-simplex with coordinates that are multiples of
/// `1/m` (compositions of `m` into `dim` parts).
pub fn simplex_grid(dim: usize, m: usize) -> Vec<Vec<f64>> {
    fn rec(dim: usize, left: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if dim == 1 {
            prefix.push(left);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for take in 0..=left {
            prefix.push(take);
            rec(dim - 1, left - take, prefix, out);
            prefix.pop();
        }
    }
    let mut raw = Vec::new();
    rec(dim, m, &mut Vec::new(), &mut raw);
    raw.into_iter()
        .map(|c| c.into_iter().map(|k| k as f64 / m as f64).collect())
        .collect()
}

/// One flat-Dirichlet draw on the `dim`-simplex.
pub fn dirichlet_flat(rng: &mut impl Rng, dim: usize) -> Vec<f64> {
    let mut raw: Vec<f64> = (0..dim)
        .map(|_| -(rng.gen::<f64>().max(1e-300)).ln())
        .collect();
    for _ in 0..2 {
        let mass: f64 = raw.iter().sum();
        for p in &mut raw {
            *p /= mass;
        }
    }
    raw
}

fn free_dims(blocks: &[usize]) -> usize {
    blocks.iter().map(|b| b - 1).sum()
}

/// Product grid over a list of simplex blocks.
fn grid_blocks(blocks: &[usize], m: usize) -> Vec<Vec<Vec<f64>>> {
    let per_block: Vec<Vec<Vec<f64>>> = blocks.iter().map(|&b| simplex_grid(b, m)).collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; per_block.len()];
    loop {
        out.push(
            idx.iter()
                .enumerate()
                .map(|(d, &i)| per_block[d][i].clone())
                .collect(),
        );
        let mut d = 0;
        loop {
            if d == per_block.len() {
                return out;
            }
            idx[d] += 1;
            if idx[d] < per_block[d].len() {
                break;
            }
            idx[d] = 0;
            d += 1;
        }
    }
}

fn random_blocks(blocks: &[usize], samples: usize, seed: u64) -> Vec<Vec<Vec<f64>>> {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| blocks.iter().map(|&b| dirichlet_flat(&mut rng, b)).collect())
        .collect()
}

/// Parameter points for one block family under the sweep spec; `seed_salt`
/// decorrelates the random streams of different families.
fn block_points(blocks: &[usize], spec: &SweepSpec, seed_salt: u64) -> Vec<Vec<Vec<f64>>> {
    match spec.mode {
        SweepMode::Grid => grid_blocks(blocks, spec.grid_m()),
        SweepMode::Dirichlet => {
            random_blocks(blocks, spec.samples, spec.seed.wrapping_add(seed_salt))
        }
        SweepMode::Auto => {
            if free_dims(blocks) <= GRID_DIM_LIMIT {
                grid_blocks(blocks, spec.grid_m())
            } else {
                random_blocks(blocks, spec.samples, spec.seed.wrapping_add(seed_salt))
            }
        }
    }
}

/// All deterministic kernels with the given shape (each row a point mass).
pub fn deterministic_kernels(rows: usize, cols: usize) -> Vec<CondKernel> {
    let count = cols.pow(rows as u32);
    (0..count)
        .map(|code| {
            let rows: Vec<Vec<f64>> = (0..rows)
                .map(|r| {
                    let pick = (code / cols.pow(r as u32)) % cols;
                    let mut row = vec![0.0; cols];
                    row[pick] = 1.0;
                    row
                })
                .collect();
            CondKernel::new(rows).expect("point-mass rows are stochastic")
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Auxiliary enumerators
// ---------------------------------------------------------------------------

fn vector(block: &[f64]) -> ProbVector {
    ProbVector::new(block.to_vec()).expect("sweep blocks are valid distributions")
}

fn kernel(rows: &[Vec<f64>]) -> CondKernel {
    CondKernel::new(rows.to_vec()).expect("sweep blocks are valid rows")
}

fn bc_aux_from_blocks(cu: usize, cv: usize, params: &[Vec<f64>]) -> BcAux {
    let p_uv = JointTable::new(vec![(axis::U, cu), (axis::V, cv)], params[0].clone())
        .expect("sweep block is a joint law");
    BcAux::new(p_uv, kernel(&params[1..])).expect("shapes align by construction")
}

/// The broadcast auxiliary sweep for cardinality caps `(card_u, card_v)`.
/// In `Auto` mode this unions grids over every sub-cap family with few
/// enough free coordinates, a symmetric binary cascade grid (binary inputs
/// only), and Dirichlet samples at the full caps.
pub fn bc_aux_sweep(x_size: usize, caps: Caps, spec: &SweepSpec) -> Vec<BcAux> {
    let blocks_for = |cu: usize, cv: usize| {
        let mut blocks = vec![cu * cv];
        blocks.extend(std::iter::repeat(x_size).take(cu * cv));
        blocks
    };
    let mut out = Vec::new();
    let full = (caps.card_u, caps.card_v);
    let cap_list: Vec<(usize, usize)> = match spec.mode {
        SweepMode::Auto => (1..=caps.card_u)
            .flat_map(|u| (1..=caps.card_v).map(move |v| (u, v)))
            .filter(|&(u, v)| (u, v) == full || free_dims(&blocks_for(u, v)) <= GRID_DIM_LIMIT)
            .collect(),
        _ => vec![full],
    };
    for (salt, (cu, cv)) in cap_list.into_iter().enumerate() {
        for params in block_points(&blocks_for(cu, cv), spec, salt as u64) {
            out.push(bc_aux_from_blocks(cu, cv, &params));
        }
    }
    // symmetric cascade U → V → X: three scalars cover the symmetric optima
    if spec.mode == SweepMode::Auto && x_size == 2 && caps.card_u >= 2 && caps.card_v >= 2 {
        for params in grid_blocks(&[2, 2, 2], spec.grid_m()) {
            let (a, s, t) = (params[0][0], params[1][0], params[2][0]);
            let p_uv = JointTable::from_fn(vec![(axis::U, 2), (axis::V, 2)], |idx| {
                let pu = if idx[0] == 0 { a } else { 1.0 - a };
                pu * if idx[1] == idx[0] { 1.0 - s } else { s }
            })
            .expect("cascade law is valid");
            let rows: Vec<Vec<f64>> = (0..4)
                .map(|uv| {
                    if uv % 2 == 0 {
                        vec![1.0 - t, t]
                    } else {
                        vec![t, 1.0 - t]
                    }
                })
                .collect();
            out.push(BcAux::new(p_uv, kernel(&rows)).expect("cascade aux is valid"));
        }
    }
    out
}

/// Single-auxiliary sweep `(P(ũ), P(x|ũ))` up to cardinality `cap`.
pub fn bc_single_aux_sweep(
    x_size: usize,
    cap: usize,
    spec: &SweepSpec,
) -> Vec<(ProbVector, CondKernel)> {
    let blocks_for = |cu: usize| {
        let mut blocks = vec![cu];
        blocks.extend(std::iter::repeat(x_size).take(cu));
        blocks
    };
    let cards: Vec<usize> = match spec.mode {
        SweepMode::Auto => (1..=cap)
            .filter(|&cu| cu == cap || free_dims(&blocks_for(cu)) <= GRID_DIM_LIMIT)
            .collect(),
        _ => vec![cap],
    };
    let mut out = Vec::new();
    for (salt, cu) in cards.into_iter().enumerate() {
        for params in block_points(&blocks_for(cu), spec, 100 + salt as u64) {
            out.push((vector(&params[0]), kernel(&params[1..])));
        }
    }
    out
}

/// Strictly causal auxiliary sweep up to caps `(card_u, card_v)`.
pub fn mac_strict_aux_sweep(
    mac: &MacChannel,
    caps: Caps,
    fixed_crib: Option<&CondKernel>,
    spec: &SweepSpec,
) -> Vec<MacAuxStrict> {
    let (x1, x2) = (mac.x1_size, mac.x2_size);
    let blocks_for = |cu: usize, cv: usize| {
        let mut blocks = vec![cu, cv];
        blocks.extend(std::iter::repeat(x1).take(cu * cv));
        blocks.push(x2);
        if fixed_crib.is_none() {
            blocks.extend(std::iter::repeat(x2).take(cu));
        }
        blocks
    };
    let full = (caps.card_u, caps.card_v);
    let cap_list: Vec<(usize, usize)> = match spec.mode {
        SweepMode::Auto => (1..=caps.card_u)
            .flat_map(|u| (1..=caps.card_v).map(move |v| (u, v)))
            .filter(|&(u, v)| (u, v) == full || free_dims(&blocks_for(u, v)) <= GRID_DIM_LIMIT)
            .collect(),
        _ => vec![full],
    };
    let mut out = Vec::new();
    for (salt, (cu, cv)) in cap_list.into_iter().enumerate() {
        for params in block_points(&blocks_for(cu, cv), spec, 200 + salt as u64) {
            let p_x2pp_given_u = match fixed_crib {
                Some(k) => tile_rows(k, cu),
                None => kernel(&params[3 + cu * cv..]),
            };
            out.push(MacAuxStrict {
                p_u: vector(&params[0]),
                p_v: vector(&params[1]),
                p_x1_given_uv: kernel(&params[2..2 + cu * cv]),
                p_x2: vector(&params[2 + cu * cv]),
                p_x2pp_given_u,
            });
        }
    }
    out
}

/// Causal auxiliary sweep up to `card_v`; `outer` selects the relaxed
/// `P(x2''|v,x1)` crib form.
pub fn mac_causal_aux_sweep(
    mac: &MacChannel,
    card_v: usize,
    outer: bool,
    fixed_crib: Option<&CondKernel>,
    spec: &SweepSpec,
) -> Vec<MacAuxCausal> {
    let (x1, x2) = (mac.x1_size, mac.x2_size);
    let blocks_for = |cv: usize| {
        let crib_rows = if outer { cv * x1 } else { x1 };
        let mut blocks = vec![cv * x1, x2];
        if fixed_crib.is_none() {
            blocks.extend(std::iter::repeat(x2).take(crib_rows));
        }
        blocks
    };
    let cards: Vec<usize> = match spec.mode {
        SweepMode::Auto => (1..=card_v)
            .filter(|&cv| cv == card_v || free_dims(&blocks_for(cv)) <= GRID_DIM_LIMIT)
            .collect(),
        _ => vec![card_v],
    };
    let mut out = Vec::new();
    for (salt, cv) in cards.into_iter().enumerate() {
        for params in block_points(&blocks_for(cv), spec, 300 + salt as u64) {
            let raw = match fixed_crib {
                Some(k) => {
                    if outer {
                        tile_rows(k, cv)
                    } else {
                        k.clone()
                    }
                }
                None => kernel(&params[2..]),
            };
            let crib = if outer {
                CribLaw::Outer(raw)
            } else {
                CribLaw::Inner(raw)
            };
            out.push(MacAuxCausal {
                p_vx1: JointTable::new(vec![(axis::V, cv), (axis::X1, x1)], params[0].clone())
                    .expect("sweep block is a joint law"),
                p_x2: vector(&params[1]),
                crib,
            });
        }
    }
    out
}

/// Hat-region sweep. In `Auto` mode with a free crib, deterministic crib
/// kernels are additionally pinned one at a time so the remaining
/// `(P(x1), P(x2))` family can be gridded.
pub fn hat_aux_sweep(
    mac: &MacChannel,
    fixed_crib: Option<&CondKernel>,
    spec: &SweepSpec,
) -> Vec<HatAux> {
    let (x1, x2) = (mac.x1_size, mac.x2_size);
    let mut blocks = vec![x1, x2];
    if fixed_crib.is_none() {
        blocks.extend(std::iter::repeat(x2).take(x1));
    }
    let mut out = Vec::new();
    for params in block_points(&blocks, spec, 400) {
        let p_x2pp_given_x1 = match fixed_crib {
            Some(k) => k.clone(),
            None => kernel(&params[2..]),
        };
        out.push(HatAux {
            p_x1: vector(&params[0]),
            p_x2: vector(&params[1]),
            p_x2pp_given_x1,
        });
    }
    if spec.mode == SweepMode::Auto
        && fixed_crib.is_none()
        && free_dims(&blocks) > GRID_DIM_LIMIT
        && free_dims(&[x1, x2]) <= GRID_DIM_LIMIT
        && x2.pow(x1 as u32) <= 64
    {
        for det in deterministic_kernels(x1, x2) {
            for params in grid_blocks(&[x1, x2], spec.grid_m()) {
                out.push(HatAux {
                    p_x1: vector(&params[0]),
                    p_x2: vector(&params[1]),
                    p_x2pp_given_x1: det.clone(),
                });
            }
        }
    }
    out
}

/// Product input laws `(P(x1), P(x2))` for the no-cribbing pentagon oracle.
pub fn product_input_sweep(mac: &MacChannel, spec: &SweepSpec) -> Vec<(ProbVector, ProbVector)> {
    block_points(&[mac.x1_size, mac.x2_size], spec, 500)
        .into_iter()
        .map(|params| (vector(&params[0]), vector(&params[1])))
        .collect()
}

/// Repeat the rows of `k` `times` times (pins a `P(x2''|x1)` kernel onto the
/// outer bound's `(v, x1)`-indexed rows).
pub fn tile_rows(k: &CondKernel, times: usize) -> CondKernel {
    let rows: Vec<Vec<f64>> = (0..times * k.input_size())
        .map(|r| k.row(r % k.input_size()).to_vec())
        .collect();
    CondKernel::new(rows).expect("tiling preserves row-stochasticity")
}

// ---------------------------------------------------------------------------
// Optimization
// ---------------------------------------------------------------------------

pub fn region_labels(model: &RegionModel) -> Vec<&'static str> {
    match model {
        RegionModel::BcFull(_) => super::constraints::BC_LABELS.to_vec(),
        RegionModel::BcNoConfOracle(_) | RegionModel::MacStandard(_) => vec!["R1", "R2"],
        RegionModel::Mac { variant, .. } => match variant {
            MacVariant::Hat => super::constraints::HAT_LABELS.to_vec(),
            _ => super::constraints::MAC_LABELS.to_vec(),
        },
    }
}

fn par_vertices<A: Sync>(
    auxes: &[A],
    eval: impl Fn(&A) -> Result<super::frontier::ConstraintSet> + Sync,
) -> Result<Vec<RatePoint>> {
    if auxes.is_empty() {
        return Err(ProbError::InvalidDistribution("empty sweep".into()));
    }
    let lists: Vec<Vec<RatePoint>> = auxes
        .par_iter()
        .map(|aux| {
            eval(aux)
                .expect("sweep produced an invalid parameterization")
                .pareto_vertices()
        })
        .collect();
    Ok(pareto_filter(lists.into_iter().flatten().collect()))
}

/// Sweep the model's auxiliary family and return the Pareto vertices of the
/// union of the swept polyhedra (deterministic for a fixed spec).
pub fn sweep_pareto_vertices(
    model: &RegionModel,
    caps: Caps,
    spec: &SweepSpec,
) -> Result<(Vec<&'static str>, Vec<RatePoint>)> {
    let labels = region_labels(model);
    let vertices = match model {
        RegionModel::BcFull(bc) => {
            let auxes = bc_aux_sweep(bc.x_size(), caps, spec);
            par_vertices(&auxes, |aux| bc_region_constraints(bc, aux))?
        }
        RegionModel::BcNoConfOracle(bc) => {
            let auxes = bc_single_aux_sweep(bc.x_size(), caps.card_u, spec);
            par_vertices(&auxes, |(p_aux, k)| {
                bc_special_constraints(
                    BcSpecialKind::NoConf,
                    bc,
                    &BcSpecialAux::SingleAux {
                        p_aux: p_aux.clone(),
                        p_x_given_aux: k.clone(),
                    },
                )
            })?
        }
        RegionModel::Mac {
            mac,
            variant,
            fixed_crib,
        } => match variant {
            MacVariant::StrictInner => {
                let auxes = mac_strict_aux_sweep(mac, caps, fixed_crib.as_ref(), spec);
                par_vertices(&auxes, |aux| {
                    mac_region_constraints(*variant, mac, &MacAux::Strict(aux.clone()))
                })?
            }
            MacVariant::CausalInner | MacVariant::Outer => {
                let auxes = mac_causal_aux_sweep(
                    mac,
                    caps.card_v,
                    *variant == MacVariant::Outer,
                    fixed_crib.as_ref(),
                    spec,
                );
                par_vertices(&auxes, |aux| {
                    mac_region_constraints(*variant, mac, &MacAux::Causal(aux.clone()))
                })?
            }
            MacVariant::Hat => {
                let auxes = hat_aux_sweep(mac, fixed_crib.as_ref(), spec);
                par_vertices(&auxes, |aux| {
                    mac_region_constraints(MacVariant::Hat, mac, &MacAux::Hat(aux.clone()))
                })?
            }
        },
        RegionModel::MacStandard(mac) => {
            let auxes = product_input_sweep(mac, spec);
            par_vertices(&auxes, |(p1, p2)| standard_mac_constraints(mac, p1, p2))?
        }
    };
    Ok((labels, vertices))
}

/// Sweep and convexify into a [`RateRegion`].
pub fn grid_optimize(model: &RegionModel, caps: Caps, spec: &SweepSpec) -> Result<RateRegion> {
    let (labels, vertices) = sweep_pareto_vertices(model, caps, spec)?;
    RateRegion::from_points(
        labels.iter().map(|s| s.to_string()).collect(),
        vertices,
        HullMode::Convex,
    )
}

/// Optimize one of the broadcast special cases over its own family.
pub fn bc_special_region(
    kind: BcSpecialKind,
    bc: &DegradedBC,
    cap: usize,
    spec: &SweepSpec,
) -> Result<RateRegion> {
    let x = bc.x_size();
    let (labels, vertices): (Vec<&'static str>, Vec<RatePoint>) = match kind {
        BcSpecialKind::NoConf => {
            return grid_optimize(
                &RegionModel::BcNoConfOracle(bc.clone()),
                Caps::new(cap, 1),
                spec,
            )
        }
        BcSpecialKind::R2Zero => {
            let auxes = bc_single_aux_sweep(x, cap, spec);
            let v = par_vertices(&auxes, |(p_v, k)| {
                let p_uv = JointTable::new(
                    vec![(axis::U, 1), (axis::V, p_v.alphabet_size())],
                    p_v.probs().to_vec(),
                )?;
                let aux = BcAux::new(p_uv, k.clone())?;
                bc_special_constraints(kind, bc, &BcSpecialAux::NullU(aux))
            })?;
            (vec!["R1", "R2p"], v)
        }
        BcSpecialKind::ReliableSmallR2p => {
            let inputs: Vec<ProbVector> = match spec.mode {
                SweepMode::Dirichlet => {
                    random_blocks(&[x], spec.samples, spec.seed)
                        .into_iter()
                        .map(|b| vector(&b[0]))
                        .collect()
                }
                _ => simplex_grid(x, spec.grid_m())
                    .into_iter()
                    .map(|b| vector(&b))
                    .collect(),
            };
            let v = par_vertices(&inputs, |p_x| {
                bc_special_constraints(kind, bc, &BcSpecialAux::InputOnly(p_x.clone()))
            })?;
            (vec!["R1", "R2p"], v)
        }
        BcSpecialKind::UnreliableSmallR2p => {
            let auxes = bc_single_aux_sweep(x, cap, spec);
            let v = par_vertices(&auxes, |(p_aux, k)| {
                bc_special_constraints(
                    kind,
                    bc,
                    &BcSpecialAux::SingleAux {
                        p_aux: p_aux.clone(),
                        p_x_given_aux: k.clone(),
                    },
                )
            })?;
            (super::constraints::BC_LABELS.to_vec(), v)
        }
    };
    RateRegion::from_points(
        labels.iter().map(|s| s.to_string()).collect(),
        vertices,
        HullMode::Convex,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::{example1_bc, example2_mac, example2_optimal_crib};
    use approx::assert_abs_diff_eq;

    #[test]
    fn simplex_grid_counts() {
        assert_eq!(simplex_grid(2, 20).len(), 21);
        assert_eq!(simplex_grid(3, 4).len(), 15); // C(6,2)
        for p in simplex_grid(3, 4) {
            assert_abs_diff_eq!(p.iter().sum::<f64>(), 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn dirichlet_draws_are_valid() {
        let mut rng = ChaCha12Rng::seed_from_u64(3);
        for _ in 0..100 {
            let p = dirichlet_flat(&mut rng, 5);
            assert!(ProbVector::new(p).is_ok());
        }
    }

    #[test]
    fn deterministic_kernel_enumeration() {
        let ks = deterministic_kernels(2, 3);
        assert_eq!(ks.len(), 9);
        for k in &ks {
            for r in 0..2 {
                assert_abs_diff_eq!(
                    k.row(r).iter().map(|x| x * x).sum::<f64>(),
                    1.0,
                    epsilon = 1e-15
                );
            }
        }
    }

    #[test]
    fn degenerate_caps_collapse_aux() {
        // caps (1, 1): U and V constant, so R2 and R2' pin to zero; the
        // sweep reduces to the input law alone
        let bc = example1_bc(0.0, 0.3).unwrap();
        let spec = SweepSpec {
            step: 0.25,
            ..Default::default()
        };
        let region = grid_optimize(&RegionModel::BcFull(bc), Caps::new(1, 1), &spec).unwrap();
        for p in &region.frontier {
            assert_abs_diff_eq!(p.0[1], 0.0, epsilon = 1e-9);
            assert_abs_diff_eq!(p.0[2], 0.0, epsilon = 1e-9);
        }
        let max_r1 = region.frontier.iter().map(|p| p.0[0]).fold(0.0, f64::max);
        assert_abs_diff_eq!(max_r1, 1.0, epsilon = 1e-9); // clean binary channel
    }

    #[test]
    fn hat_sweep_with_pinned_crib_reaches_unit_rate() {
        let model = RegionModel::Mac {
            mac: example2_mac(),
            variant: MacVariant::Hat,
            fixed_crib: Some(example2_optimal_crib()),
        };
        let spec = SweepSpec {
            samples: 500,
            ..Default::default()
        };
        let region = grid_optimize(&model, Caps::new(1, 1), &spec).unwrap();
        let max_r2pp = region.frontier.iter().map(|p| p.0[2]).fold(0.0, f64::max);
        assert_abs_diff_eq!(max_r2pp, 1.0, epsilon = 1e-9);
    }

    #[test]
    fn determinism_for_fixed_seed() {
        let model = RegionModel::MacStandard(example2_mac());
        let spec = SweepSpec {
            mode: SweepMode::Dirichlet,
            samples: 200,
            seed: 17,
            ..Default::default()
        };
        let a = grid_optimize(&model, Caps::new(1, 1), &spec).unwrap();
        let b = grid_optimize(&model, Caps::new(1, 1), &spec).unwrap();
        assert_eq!(a.frontier.len(), b.frontier.len());
        for (p, q) in a.frontier.iter().zip(&b.frontier) {
            assert_eq!(p.0, q.0);
        }
    }

    #[test]
    fn special_region_reliable_small() {
        // clean channel: R1 + R2' ≤ 1 with R2' capped by the link
        let bc = example1_bc(0.0, 0.3).unwrap();
        let spec = SweepSpec {
            step: 0.1,
            ..Default::default()
        };
        let region =
            bc_special_region(BcSpecialKind::ReliableSmallR2p, &bc, 1, &spec).unwrap();
        let max_sum = region
            .frontier
            .iter()
            .map(|p| p.0[0] + p.0[1])
            .fold(0.0, f64::max);
        assert_abs_diff_eq!(max_sum, 1.0, epsilon = 1e-9);
        let max_r2p = region.frontier.iter().map(|p| p.0[1]).fold(0.0, f64::max);
        assert_abs_diff_eq!(max_r2p, 0.3, epsilon = 1e-9);
    }
}
