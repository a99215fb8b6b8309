//! Cross-validation suites tying the bound evaluators, sweeps, and
//! simulators together. Each check measures a discrepancy and compares it
//! against a fixed tolerance; the CLI `check` command and the acceptance
//! test suite both run these.

use crate::channels::{
    axis, example1_bc, example2_mac, example2_optimal_crib, example3_mac, example4_mac, CribLaw,
    MacAuxCausal, MacAuxStrict, MacChannel,
};
use crate::prob::{CondKernel, JointTable, ProbVector};
use crate::regions::sweep::{
    bc_aux_sweep, dirichlet_flat, hat_aux_sweep, mac_causal_aux_sweep, simplex_grid, tile_rows,
};
use crate::regions::{
    bc_region_constraints, example1_bounds, example2_bounds, example3_bounds, example4_bounds,
    example4_causal_aux, frontier_distance, frontier_gap, grid_optimize, mac_region_constraints,
    pareto_filter, ray_fan, standard_mac_constraints, strategy_apply,
    strategy_distribution, Caps, HatAux, MacAux, MacVariant, RatePoint, RateRegion, RegionModel,
    SweepMode, SweepSpec,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

/// Result of one cross-validation check.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: String,
    pub pass: bool,
    /// Headline measured discrepancy.
    pub measure: f64,
    pub tolerance: f64,
    pub detail: String,
}

impl CheckOutcome {
    fn from_measure(name: &str, measure: f64, tolerance: f64, detail: String) -> Self {
        Self {
            name: name.into(),
            pass: measure <= tolerance,
            measure,
            tolerance,
            detail,
        }
    }

    pub fn line(&self) -> String {
        format!(
            "{} {}: measured {:.3e} (tolerance {:.1e}) {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.measure,
            self.tolerance,
            self.detail
        )
    }
}

// ---------------------------------------------------------------------------
// Random generators for the sampled checks
// ---------------------------------------------------------------------------

fn random_vector(rng: &mut ChaCha12Rng, n: usize) -> ProbVector {
    ProbVector::new(dirichlet_flat(rng, n)).expect("dirichlet draw is valid")
}

fn random_kernel(rng: &mut ChaCha12Rng, rows: usize, cols: usize) -> CondKernel {
    CondKernel::new((0..rows).map(|_| dirichlet_flat(rng, cols)).collect())
        .expect("dirichlet rows are valid")
}

pub fn random_mac(rng: &mut ChaCha12Rng, x1: usize, x2: usize, y: usize) -> MacChannel {
    MacChannel::new(random_kernel(rng, x1 * x2, y), x1, x2).expect("shapes agree")
}

// ---------------------------------------------------------------------------
// Region-level checks
// ---------------------------------------------------------------------------

/// The `R1' = 0` region computed three ways — the causal inner bound with
/// the auxiliary swept, the outer bound with the auxiliary swept, and the
/// `V`-eliminated form — must agree on random binary-input channels.
pub fn check_lemma1(channels: usize, seed: u64) -> CheckOutcome {
    let rays = ray_fan(3, 64);
    let mut worst: f64 = 0.0;
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    for c in 0..channels {
        let mac = random_mac(&mut rng, 2, 2, 2);
        let base = seed.wrapping_add(1000 * c as u64);
        let hat_spec = SweepSpec {
            samples: 4000,
            seed: base,
            ..Default::default()
        };
        let side_spec = SweepSpec {
            samples: 2000,
            seed: base.wrapping_add(1),
            ..Default::default()
        };

        let hat_verts: Vec<RatePoint> = hat_aux_sweep(&mac, None, &hat_spec)
            .iter()
            .flat_map(|aux| {
                mac_region_constraints(MacVariant::Hat, &mac, &MacAux::Hat(aux.clone()))
                    .expect("valid aux")
                    .pareto_vertices()
            })
            .collect();
        let hat_verts = pareto_filter(hat_verts);

        // inner / outer sides at R1' = 0; the hat family is a sub-family of
        // both, so its vertices join each collection
        let mut inner_verts: Vec<RatePoint> =
            mac_causal_aux_sweep(&mac, 2, false, None, &side_spec)
                .iter()
                .flat_map(|aux| {
                    mac_region_constraints(
                        MacVariant::CausalInner,
                        &mac,
                        &MacAux::Causal(aux.clone()),
                    )
                    .expect("valid aux")
                    .fix_rate("R1p", 0.0)
                    .expect("label exists")
                    .pareto_vertices()
                })
                .collect();
        inner_verts.extend(hat_verts.iter().cloned());
        let inner_verts = pareto_filter(inner_verts);

        let mut outer_verts: Vec<RatePoint> =
            mac_causal_aux_sweep(&mac, 2, true, None, &side_spec)
                .iter()
                .flat_map(|aux| {
                    mac_region_constraints(MacVariant::Outer, &mac, &MacAux::Causal(aux.clone()))
                        .expect("valid aux")
                        .fix_rate("R1p", 0.0)
                        .expect("label exists")
                        .pareto_vertices()
                })
                .collect();
        outer_verts.extend(hat_verts.iter().cloned());
        let outer_verts = pareto_filter(outer_verts);

        for (a, b) in [
            (&hat_verts, &inner_verts),
            (&hat_verts, &outer_verts),
            (&inner_verts, &outer_verts),
        ] {
            worst = worst.max(frontier_distance(a, b, &rays));
        }
    }
    CheckOutcome::from_measure(
        "lemma1",
        worst,
        0.02,
        format!("max pairwise frontier gap over {channels} channels"),
    )
}

/// Every causal-inner polyhedron must sit inside the outer polyhedron of
/// the same (lifted) parameterization.
pub fn check_inner_outer(channels: usize, params_each: usize, seed: u64) -> CheckOutcome {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut worst: f64 = f64::NEG_INFINITY;
    for _ in 0..channels {
        let x1 = rng.gen_range(2..=3);
        let x2 = rng.gen_range(2..=3);
        let y = rng.gen_range(2..=3);
        let mac = random_mac(&mut rng, x1, x2, y);
        for _ in 0..params_each {
            let cv = 2;
            let p_vx1 = JointTable::new(
                vec![(axis::V, cv), (axis::X1, x1)],
                dirichlet_flat(&mut rng, cv * x1),
            )
            .expect("valid joint");
            let crib_kernel = random_kernel(&mut rng, x1, x2);
            let inner_aux = MacAuxCausal {
                p_vx1: p_vx1.clone(),
                p_x2: random_vector(&mut rng, x2),
                crib: CribLaw::Inner(crib_kernel.clone()),
            };
            let inner_cs = mac_region_constraints(
                MacVariant::CausalInner,
                &mac,
                &MacAux::Causal(inner_aux.clone()),
            )
            .expect("valid aux");
            // the same parameterization lifted into the outer family
            let outer_aux = MacAuxCausal {
                p_vx1,
                p_x2: inner_aux.p_x2.clone(),
                crib: CribLaw::Outer(tile_rows(&crib_kernel, cv)),
            };
            let outer_cs =
                mac_region_constraints(MacVariant::Outer, &mac, &MacAux::Causal(outer_aux))
                    .expect("valid aux");
            for vertex in inner_cs.pareto_vertices() {
                for row in &outer_cs.rows {
                    let lhs: f64 = row
                        .coeffs
                        .iter()
                        .zip(&vertex.0)
                        .map(|(c, x)| c * x)
                        .sum();
                    worst = worst.max(lhs - row.bound);
                }
            }
        }
    }
    CheckOutcome::from_measure(
        "inner-outer",
        worst.max(0.0),
        1e-9,
        format!("max outer-constraint violation by inner vertices ({channels}×{params_each})"),
    )
}

/// With a zero-capacity conference link the optimized broadcast region must
/// collapse onto the degraded-channel capacity region in `(R1, R2 + R2')`.
pub fn check_reduction_c12_zero(eps: f64, spec: &SweepSpec) -> CheckOutcome {
    let bc = example1_bc(eps, 0.0).expect("eps in range");
    let full = grid_optimize(&RegionModel::BcFull(bc.clone()), Caps::new(2, 2), spec)
        .expect("sweep succeeds");
    let merged: Vec<RatePoint> = full
        .frontier
        .iter()
        .map(|p| RatePoint::new(vec![p.0[0], p.0[1] + p.0[2]]))
        .collect();
    let merged = pareto_filter(merged);
    let oracle = grid_optimize(&RegionModel::BcNoConfOracle(bc), Caps::new(2, 1), spec)
        .expect("sweep succeeds");
    let rays = ray_fan(2, 64);
    let d = frontier_distance(&merged, &oracle.frontier, &rays);
    CheckOutcome::from_measure(
        "reduction-c12-zero",
        d,
        0.02,
        "merged (R1, R2+R2') frontier vs degraded-capacity oracle".into(),
    )
}

/// The generic joint-table sweep and the closed-form sweep must trace the
/// same region for the clean/BSC broadcast example.
pub fn check_bc_closed_form(eps: f64, c12: f64, spec: &SweepSpec) -> CheckOutcome {
    let bc = example1_bc(eps, c12).expect("params in range");
    let caps = Caps::new(2, 2);
    let grid = grid_optimize(&RegionModel::BcFull(bc), caps, spec).expect("sweep succeeds");
    let closed = crate::regions::example1_region(eps, c12, caps, spec).expect("sweep succeeds");
    let rays = ray_fan(3, 64);
    let d = frontier_distance(&grid.frontier, &closed.frontier, &rays);
    CheckOutcome::from_measure(
        "bc-closed-form",
        d,
        0.02,
        "generic sweep vs closed-form sweep on the broadcast example".into(),
    )
}

/// Conditioning on the extra cloud center can only shrink the cribbing-rate
/// bound: `I(X2'';Y''|U,V,X1) ≤ I(X2'';Y''|V,X1)`.
pub fn check_remark_19e(samples: usize, seed: u64) -> CheckOutcome {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut worst: f64 = f64::NEG_INFINITY;
    for _ in 0..samples {
        let x1 = rng.gen_range(2..=3);
        let x2 = rng.gen_range(2..=3);
        let y = rng.gen_range(2..=3);
        let mac = random_mac(&mut rng, x1, x2, y);
        let (cu, cv) = (2, 2);
        let aux = MacAuxStrict {
            p_u: random_vector(&mut rng, cu),
            p_v: random_vector(&mut rng, cv),
            p_x1_given_uv: random_kernel(&mut rng, cu * cv, x1),
            p_x2: random_vector(&mut rng, x2),
            p_x2pp_given_u: random_kernel(&mut rng, cu, x2),
        };
        let joint = crate::channels::mac_joint_strict(&mac, &aux).expect("valid aux");
        let lhs = joint
            .conditional_mutual_information(
                &[axis::X2PP],
                &[axis::YPP],
                &[axis::U, axis::V, axis::X1],
            )
            .expect("axes exist");
        let rhs = joint
            .conditional_mutual_information(&[axis::X2PP], &[axis::YPP], &[axis::V, axis::X1])
            .expect("axes exist");
        worst = worst.max(lhs - rhs);
    }
    CheckOutcome::from_measure(
        "remark-19e",
        worst.max(0.0),
        1e-10,
        format!("max I(X2'';Y''|U,V,X1) − I(X2'';Y''|V,X1) over {samples} parameterizations"),
    )
}

/// The product strategy distribution must lump back to the conditional it
/// was built from and carry unit mass.
pub fn check_strategy_identity(samples: usize, seed: u64) -> CheckOutcome {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let cv = rng.gen_range(1..=3);
        let x1 = rng.gen_range(2..=3);
        let x2 = rng.gen_range(2..=3);
        let p_vx1 = dirichlet_flat(&mut rng, cv * x1);
        let crib = random_kernel(&mut rng, x1, x2);
        let p0 = JointTable::from_fn(
            vec![(axis::V, cv), (axis::X1, x1), (axis::X2PP, x2)],
            |idx| p_vx1[idx[0] * x1 + idx[1]] * crib.get(idx[1], idx[2]),
        )
        .expect("valid joint");
        let p_t = strategy_distribution(&p0).expect("positive X1 marginal");
        let mass: f64 = p_t.probs().iter().sum();
        worst = worst.max((mass - 1.0).abs());
        // conditional rebuilt from the joint, then compared to the lumped sum
        let p_x1: Vec<f64> = (0..x1)
            .map(|a| (0..cv).map(|v| p_vx1[v * x1 + a]).sum())
            .collect();
        for a in 0..x1 {
            for b in 0..x2 {
                let lumped: f64 = (0..p_t.alphabet_size())
                    .filter(|&t| strategy_apply(t, a, x2) == b)
                    .map(|t| p_t.get(t))
                    .sum();
                let cond: f64 = (0..cv)
                    .map(|v| p_vx1[v * x1 + a] * crib.get(a, b))
                    .sum::<f64>()
                    / p_x1[a];
                worst = worst.max((lumped - cond).abs());
            }
        }
    }
    CheckOutcome::from_measure(
        "strategy-identity",
        worst,
        1e-12,
        format!("max lumping/normalization residual over {samples} joints"),
    )
}

/// The closed-form example evaluators must match the joint-table route
/// bound-by-bound at random parameter points.
pub fn check_example_oracles(points_each: usize, seed: u64) -> CheckOutcome {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    let compare = |a: &crate::regions::ConstraintSet, b: &crate::regions::ConstraintSet| {
        assert_eq!(a.rows.len(), b.rows.len(), "row counts must agree");
        let mut local: f64 = 0.0;
        for (ra, rb) in a.rows.iter().zip(&b.rows) {
            assert_eq!(ra.coeffs, rb.coeffs, "row supports must agree");
            local = local.max((ra.bound - rb.bound).abs());
        }
        local
    };

    for _ in 0..points_each {
        // Example 1: clean/BSC broadcast channel
        let eps = rng.gen::<f64>();
        let c12 = rng.gen::<f64>();
        let p_uv = JointTable::new(
            vec![(axis::U, 2), (axis::V, 2)],
            dirichlet_flat(&mut rng, 4),
        )
        .expect("valid joint");
        let aux =
            crate::channels::BcAux::new(p_uv, random_kernel(&mut rng, 4, 2)).expect("shapes");
        let bc = example1_bc(eps, c12).expect("in range");
        worst = worst.max(compare(
            &example1_bounds(&aux, eps, c12).expect("valid"),
            &bc_region_constraints(&bc, &aux).expect("valid"),
        ));
    }
    for _ in 0..points_each {
        // Examples 2 and 3: switched MAC with the optimal crib conditional
        let q = rng.gen::<f64>();
        let px1 = rng.gen::<f64>();
        let p = random_vector(&mut rng, 4);
        let hat = HatAux {
            p_x1: ProbVector::binary(px1).expect("in range"),
            p_x2: p.clone(),
            p_x2pp_given_x1: example2_optimal_crib(),
        };
        worst = worst.max(compare(
            &example2_bounds(px1, &p).expect("valid"),
            &mac_region_constraints(MacVariant::Hat, &example2_mac(), &MacAux::Hat(hat.clone()))
                .expect("valid"),
        ));
        let mac3 = example3_mac(q).expect("in range");
        worst = worst.max(compare(
            &example3_bounds(q, px1, &p).expect("valid"),
            &mac_region_constraints(MacVariant::Hat, &mac3, &MacAux::Hat(hat)).expect("valid"),
        ));
    }
    for _ in 0..points_each {
        // Example 4: adder-noise MAC with the erasure-mixture auxiliary
        let mut draw = || rng.gen::<f64>();
        let (p1, p2) = (draw(), draw());
        let (px1, px2) = (draw(), draw());
        let (mu1, mu2, gamma) = (draw(), draw(), draw());
        let mac = example4_mac(p1, p2).expect("in range");
        let aux = example4_causal_aux(px1, px2, mu1, mu2, gamma).expect("in range");
        worst = worst.max(compare(
            &example4_bounds(p1, p2, px1, px2, mu1, mu2, gamma).expect("valid"),
            &mac_region_constraints(MacVariant::CausalInner, &mac, &MacAux::Causal(aux))
                .expect("valid"),
        ));
    }
    CheckOutcome::from_measure(
        "example-oracles",
        worst,
        1e-9,
        format!("max bound discrepancy over {points_each} points per example"),
    )
}

/// With the optimal crib conditional pinned, the optimized cribbing rate of
/// the switched MAC is exactly one bit.
pub fn check_ex2_exact(seed: u64) -> CheckOutcome {
    let model = RegionModel::Mac {
        mac: example2_mac(),
        variant: MacVariant::Hat,
        fixed_crib: Some(example2_optimal_crib()),
    };
    let spec = SweepSpec {
        samples: 4000,
        seed,
        ..Default::default()
    };
    let region = grid_optimize(&model, Caps::new(1, 1), &spec).expect("sweep succeeds");
    let max_r2pp = region.frontier.iter().map(|p| p.0[2]).fold(0.0, f64::max);
    CheckOutcome::from_measure(
        "ex2-exact",
        (max_r2pp - 1.0).abs(),
        1e-9,
        format!("max cribbing rate {max_r2pp} vs 1"),
    )
}

/// Spot values on the switched-MAC frontier at `R1 = 0.7`: `R2'' = 1`
/// exactly and `R2` within ±0.05 of 0.8.
pub fn check_ex2_spot() -> CheckOutcome {
    let region = crate::regions::example2_region(&SweepSpec::default()).expect("sweep succeeds");
    let r2pp = region
        .max_coord_given("R2pp", &[("R1", 0.7)])
        .expect("feasible");
    let r2 = region
        .max_coord_given("R2", &[("R1", 0.7)])
        .expect("feasible");
    let measure = (r2pp - 1.0)
        .abs()
        .max(((r2 - 0.8).abs() - 0.05).max(0.0) * 1e9);
    CheckOutcome::from_measure(
        "ex2-spot",
        measure,
        1e-9,
        format!("at R1 = 0.7: R2'' = {r2pp:.9}, R2 = {r2:.4} (want 0.8 ± 0.05)"),
    )
}

/// The robust scheme's `(R1, R2)` face must coincide with the no-cribbing
/// pentagon region of the same channel.
pub fn check_ex2_coincide() -> CheckOutcome {
    let mac = example2_mac();
    // shared sweep: a fine grid on P(X1) crossed with the X2 simplex grid
    let px1_grid = simplex_grid(2, 80);
    let p_grid = simplex_grid(4, 20);
    let mut hat_pts: Vec<RatePoint> = Vec::new();
    let mut pent_pts: Vec<RatePoint> = Vec::new();
    for a in &px1_grid {
        for p in &p_grid {
            let p = ProbVector::new(p.clone()).expect("grid point");
            let cs = example2_bounds(a[0], &p).expect("in range");
            hat_pts.extend(
                cs.pareto_vertices()
                    .into_iter()
                    .map(|v| RatePoint::new(vec![v.0[0], v.0[1]])),
            );
            let pent = standard_mac_constraints(
                &mac,
                &ProbVector::new(a.clone()).expect("grid point"),
                &p,
            )
            .expect("valid");
            pent_pts.extend(pent.pareto_vertices());
        }
    }
    let hat_pts = pareto_filter(hat_pts);
    let pent_pts = pareto_filter(pent_pts);
    let rays = ray_fan(2, 64);
    let d = frontier_gap(&hat_pts, &pent_pts, &rays).max(frontier_gap(&pent_pts, &hat_pts, &rays));
    CheckOutcome::from_measure(
        "ex2-coincide",
        d,
        0.01,
        "one-sided gaps between the robust (R1, R2) face and the pentagon region".into(),
    )
}

/// The switched-MAC redundancy remark: the sum-rate rows equal the sums of
/// the individual rows over the whole sweep (the clean `Y1` reveals `X1`).
pub fn check_ex2_sum_redundancy(points: usize, seed: u64) -> CheckOutcome {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mac = example2_mac();
    let mut worst: f64 = 0.0;
    for _ in 0..points {
        let hat = HatAux {
            p_x1: random_vector(&mut rng, 2),
            p_x2: random_vector(&mut rng, 4),
            p_x2pp_given_x1: example2_optimal_crib(),
        };
        let cs =
            mac_region_constraints(MacVariant::Hat, &mac, &MacAux::Hat(hat)).expect("valid aux");
        let r1 = cs.bound_for(&["R1"]).unwrap();
        let r2 = cs.bound_for(&["R2"]).unwrap();
        let sum = cs.bound_for(&["R1", "R2"]).unwrap();
        let r2pp = cs.bound_for(&["R2pp"]).unwrap();
        let sum2 = cs.bound_for(&["R1", "R2pp"]).unwrap();
        worst = worst.max((sum - (r1 + r2)).abs());
        worst = worst.max((sum2 - (r1 + r2pp)).abs());
    }
    CheckOutcome::from_measure(
        "ex2-sum-redundancy",
        worst,
        1e-9,
        format!("max |sum-row − individual-row sum| over {points} points"),
    )
}

/// The broadcast region grows with the conference capacity.
pub fn check_bc_monotone_in_c12(eps: f64, spec: &SweepSpec) -> CheckOutcome {
    let caps = Caps::new(2, 2);
    let rays = ray_fan(3, 64);
    let mut worst: f64 = 0.0;
    let mut prev: Option<RateRegion> = None;
    for c12 in [0.0, 0.25, 0.5] {
        let bc = example1_bc(eps, c12).expect("in range");
        let region = grid_optimize(&RegionModel::BcFull(bc), caps, spec).expect("sweep succeeds");
        if let Some(smaller) = &prev {
            worst = worst.max(frontier_gap(&smaller.frontier, &region.frontier, &rays));
        }
        prev = Some(region);
    }
    CheckOutcome::from_measure(
        "bc-monotone-c12",
        worst,
        1e-9,
        "containment gap of the region at lower C12 inside the higher one".into(),
    )
}

/// Setting `V = X1` in the causal inner bound reproduces the no-cribbing
/// pentagon in the `(R1, R2)` coordinates exactly.
pub fn check_no_crib_reduction(points: usize, seed: u64) -> CheckOutcome {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..points {
        let x1 = rng.gen_range(2..=3);
        let x2 = rng.gen_range(2..=3);
        let y = rng.gen_range(2..=3);
        let mac = random_mac(&mut rng, x1, x2, y);
        let p_x1 = random_vector(&mut rng, x1);
        let p_x2 = random_vector(&mut rng, x2);
        let p_vx1 = JointTable::from_fn(vec![(axis::V, x1), (axis::X1, x1)], |idx| {
            if idx[0] == idx[1] {
                p_x1.get(idx[0])
            } else {
                0.0
            }
        })
        .expect("diagonal coupling is valid");
        let aux = MacAuxCausal {
            p_vx1,
            p_x2: p_x2.clone(),
            crib: CribLaw::Inner(random_kernel(&mut rng, x1, x2)),
        };
        let cs = mac_region_constraints(MacVariant::CausalInner, &mac, &MacAux::Causal(aux))
            .expect("valid aux");
        let pent = standard_mac_constraints(&mac, &p_x1, &p_x2).expect("valid");
        for who in [vec!["R1"], vec!["R2"], vec!["R1", "R2"]] {
            let got = cs.bound_for(&who).unwrap();
            let want = pent.bound_for(&who).unwrap();
            worst = worst.max((got - want).abs());
        }
    }
    CheckOutcome::from_measure(
        "no-crib-reduction",
        worst,
        1e-10,
        format!("max |causal bound at V=X1 − pentagon bound| over {points} points"),
    )
}

// ---------------------------------------------------------------------------
// Simulation operating points
// ---------------------------------------------------------------------------

/// A deterministic interior operating point for broadcast simulations: sweep
/// the auxiliary family, take the polytope vertex with the largest rate sum,
/// and scale it by `frac`. The returned rates sit strictly inside every
/// constraint of the returned auxiliary's polyhedron.
pub fn bc_operating_point(
    bc: &crate::channels::DegradedBC,
    frac: f64,
) -> (crate::channels::BcAux, crate::sim::BcRates) {
    let spec = SweepSpec {
        step: 0.05,
        mode: SweepMode::Auto,
        samples: 0, // deterministic grid families only
        ..Default::default()
    };
    // the maximum-sum vertex keeps the per-layer decoding margins wide, so
    // the scaled-down operating point sits safely inside the typical-set
    // discrimination window
    let mut best: Option<(f64, crate::channels::BcAux, RatePoint)> = None;
    for aux in bc_aux_sweep(bc.x_size(), Caps::new(2, 2), &spec) {
        let cs = bc_region_constraints(bc, &aux).expect("valid aux");
        for v in cs.pareto_vertices() {
            let sum: f64 = v.0.iter().sum();
            if best.as_ref().map_or(true, |(s, _, _)| sum > *s) {
                best = Some((sum, aux.clone(), v));
            }
        }
    }
    let (_, aux, v) = best.expect("sweep is nonempty");
    (
        aux,
        crate::sim::BcRates {
            r1: v.0[0] * frac,
            r2: v.0[1] * frac,
            r2p: v.0[2] * frac,
        },
    )
}

/// A deterministic interior operating point for the `R1' = 0` MAC
/// simulations: sweep `(P(x1), P(x2))` with the crib conditional pinned,
/// take the vertex with the largest `R1 + R2 + R2''`, scale by `frac`.
/// Returns the causal auxiliary with `V = X1`.
pub fn mac_operating_point_hat(
    mac: &MacChannel,
    crib: &CondKernel,
    frac: f64,
) -> (MacAuxCausal, crate::sim::MacRates) {
    let m = 20;
    let mut best: Option<(f64, HatAux, RatePoint)> = None;
    for a in simplex_grid(mac.x1_size, m) {
        for p in simplex_grid(mac.x2_size, m / 2) {
            let aux = HatAux {
                p_x1: ProbVector::new(a.clone()).expect("grid point"),
                p_x2: ProbVector::new(p).expect("grid point"),
                p_x2pp_given_x1: crib.clone(),
            };
            let cs = mac_region_constraints(MacVariant::Hat, mac, &MacAux::Hat(aux.clone()))
                .expect("valid aux");
            for v in cs.pareto_vertices() {
                let sum: f64 = v.0.iter().sum();
                if best.as_ref().map_or(true, |(s, _, _)| sum > *s) {
                    best = Some((sum, aux.clone(), v));
                }
            }
        }
    }
    let (_, hat, v) = best.expect("sweep is nonempty");
    let x1 = mac.x1_size;
    let p_vx1 = JointTable::from_fn(vec![(axis::V, x1), (axis::X1, x1)], |idx| {
        if idx[0] == idx[1] {
            hat.p_x1.get(idx[0])
        } else {
            0.0
        }
    })
    .expect("diagonal coupling is valid");
    let aux = MacAuxCausal {
        p_vx1,
        p_x2: hat.p_x2.clone(),
        crib: CribLaw::Inner(hat.p_x2pp_given_x1.clone()),
    };
    (
        aux,
        crate::sim::MacRates {
            r1: v.0[0] * frac,
            r1p: 0.0,
            r2: v.0[1] * frac,
            r2pp: v.0[2] * frac,
        },
    )
}

// ---------------------------------------------------------------------------
// Suite driver
// ---------------------------------------------------------------------------

pub const SUITES: [&str; 9] = [
    "lemma1",
    "inner-outer",
    "reduction-c12-zero",
    "bc-closed-form",
    "remark-19e",
    "strategy-identity",
    "example-oracles",
    "ex2",
    "region-properties",
];

/// Named suites for the command-line `check` front end. `samples` scales the
/// sampled checks; returns `None` for an unknown suite name.
pub fn run_suite(name: &str, samples: usize, seed: u64) -> Option<Vec<CheckOutcome>> {
    let spec = SweepSpec::default();
    let fast_spec = SweepSpec {
        samples: 6000,
        ..spec
    };
    Some(match name {
        "lemma1" => vec![check_lemma1(samples.clamp(1, 50), seed)],
        "inner-outer" => vec![check_inner_outer(samples.clamp(1, 200), 200, seed)],
        "reduction-c12-zero" => vec![check_reduction_c12_zero(0.1, &fast_spec)],
        "bc-closed-form" => vec![check_bc_closed_form(0.1, 0.5, &fast_spec)],
        "remark-19e" => vec![check_remark_19e(samples.max(1), seed)],
        "strategy-identity" => vec![check_strategy_identity(samples.max(1), seed)],
        "example-oracles" => vec![check_example_oracles(samples.clamp(1, 1000), seed)],
        "ex2" => vec![
            check_ex2_exact(seed),
            check_ex2_spot(),
            check_ex2_coincide(),
            check_ex2_sum_redundancy(200, seed),
        ],
        "region-properties" => vec![
            check_bc_monotone_in_c12(0.1, &fast_spec),
            check_no_crib_reduction(200, seed),
        ],
        "all" => {
            let mut all = Vec::new();
            for suite in SUITES {
                all.extend(run_suite(suite, samples, seed).expect("known suite"));
            }
            all
        }
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategy_identity_is_tight() {
        let out = check_strategy_identity(50, 5);
        assert!(out.pass, "{}", out.line());
    }

    #[test]
    fn remark_19e_holds_on_samples() {
        let out = check_remark_19e(50, 6);
        assert!(out.pass, "{}", out.line());
    }

    #[test]
    fn inner_outer_containment_small() {
        let out = check_inner_outer(3, 20, 7);
        assert!(out.pass, "{}", out.line());
    }

    #[test]
    fn example_oracles_small() {
        let out = check_example_oracles(10, 8);
        assert!(out.pass, "{}", out.line());
    }

    #[test]
    fn no_crib_reduction_small() {
        let out = check_no_crib_reduction(20, 9);
        assert!(out.pass, "{}", out.line());
    }

    #[test]
    fn unknown_suite_is_none() {
        assert!(run_suite("nope", 1, 0).is_none());
    }
}
