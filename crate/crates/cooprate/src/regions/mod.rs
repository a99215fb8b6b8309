//! Rate-region evaluation: per-parameterization constraint sets, frontier
//! extraction, auxiliary sweeps, Shannon strategies, and the closed-form
//! example evaluators.

pub mod constraints;
pub mod examples;
pub mod frontier;
pub mod lp;
pub mod strategy;
pub mod sweep;

pub use constraints::{
    bc_region_constraints, bc_special_constraints, mac_region_constraints,
    standard_mac_constraints, BcSpecialAux, BcSpecialKind, HatAux, MacAux, MacVariant,
    BC_LABELS, HAT_LABELS, MAC_LABELS,
};
pub use examples::{
    example1_bounds, example1_region, example2_bounds, example2_region, example3_bounds,
    example3_region, example4_bounds, example4_causal_aux, example4_region, example_region,
};
pub use frontier::{
    frontier_distance, frontier_gap, pareto_filter, ray_fan, ray_reach, ConstraintSet,
    HullMode, RatePoint, RateRegion,
};
pub use strategy::{shannon_strategy_lift, strategy_apply, strategy_count, strategy_distribution};
pub use sweep::{
    bc_special_region, grid_optimize, sweep_pareto_vertices, Caps, RegionModel, SweepMode,
    SweepSpec,
};
