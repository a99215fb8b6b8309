//! Rate points, constraint polyhedra, and frontier extraction.
//!
//! A [`ConstraintSet`] is the polyhedron `{r ≥ 0 : A·r ≤ b}` produced by one
//! auxiliary parameterization; every row corresponds to one inequality of
//! the theorem being evaluated. Regions are represented by the Pareto
//! vertices collected across a sweep; time-sharing convexification keeps
//! only points that are not dominated by convex combinations of the others.

use super::lp::{solve_max, LpOutcome};

/// Coordinate tolerance for vertex dedup and Pareto ties.
const TIE_TOL: f64 = 1e-9;

/// A labeled rate tuple; coordinates are clamped to zero from below
/// (anything above −1e-12 counts as zero).
#[derive(Debug, Clone, PartialEq)]
pub struct RatePoint(pub Vec<f64>);

impl RatePoint {
    pub fn new(coords: Vec<f64>) -> Self {
        Self(
            coords
                .into_iter()
                .map(|c| if c > 0.0 { c } else { 0.0 })
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Componentwise `self ≤ other + tol`.
    pub fn dominated_by(&self, other: &[f64], tol: f64) -> bool {
        self.0.iter().zip(other).all(|(a, b)| *a <= b + tol)
    }
}

/// How a frontier was reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HullMode {
    /// Coordinatewise domination only.
    Pareto,
    /// Upper-right frontier of the convex hull of the down-sets.
    Convex,
}

/// A rate region: dimension labels plus its frontier points.
#[derive(Debug, Clone)]
pub struct RateRegion {
    pub labels: Vec<String>,
    pub frontier: Vec<RatePoint>,
    pub hull_mode: HullMode,
}

impl RateRegion {
    /// Reduce `points` to a frontier. `Pareto` drops coordinatewise-dominated
    /// points; `Convex` additionally drops points inside the down-closed
    /// convex hull of the others.
    pub fn from_points(
        labels: Vec<String>,
        points: Vec<RatePoint>,
        hull_mode: HullMode,
    ) -> Result<Self, crate::prob::ProbError> {
        if points.is_empty() {
            return Err(crate::prob::ProbError::InvalidDistribution(
                "empty point set has no frontier".into(),
            ));
        }
        let dim = labels.len();
        if points.iter().any(|p| p.dim() != dim) {
            return Err(crate::prob::ProbError::DimensionMismatch(
                "mixed-dimension rate points".into(),
            ));
        }
        let mut frontier = pareto_filter(points);
        if hull_mode == HullMode::Convex {
            frontier = convex_prune(frontier);
        }
        sort_points(&mut frontier);
        Ok(Self {
            labels,
            frontier,
            hull_mode,
        })
    }

    /// Project onto a subset of the labels and re-extract the frontier.
    pub fn project(&self, keep: &[&str]) -> Result<RateRegion, crate::prob::ProbError> {
        let idx: Vec<usize> = keep
            .iter()
            .map(|k| {
                self.labels
                    .iter()
                    .position(|l| l == k)
                    .ok_or_else(|| crate::prob::ProbError::UnknownAxis((*k).into()))
            })
            .collect::<Result<_, _>>()?;
        let pts = self
            .frontier
            .iter()
            .map(|p| RatePoint::new(idx.iter().map(|&i| p.0[i]).collect()))
            .collect();
        RateRegion::from_points(
            keep.iter().map(|s| s.to_string()).collect(),
            pts,
            self.hull_mode,
        )
    }

    /// Largest `t` with `t · dir` inside the down-closed convex hull of the
    /// frontier. `dir` must have strictly positive components.
    pub fn reach(&self, dir: &[f64]) -> f64 {
        ray_reach(&self.frontier, dir)
    }

    /// Largest value of coordinate `label` achievable jointly with the given
    /// floor values on the other coordinates (e.g. "max R2 when R1 ≥ 0.7").
    pub fn max_coord_given(&self, label: &str, floors: &[(&str, f64)]) -> Option<f64> {
        let target = self.labels.iter().position(|l| l == label)?;
        let n = self.frontier.len();
        let dim = self.labels.len();
        // max Σ λ_i p_i[target]  s.t.  Σ λ_i p_i[j] ≥ floor_j, Σ λ ≤ 1, λ ≥ 0
        let mut a = Vec::new();
        let mut b = Vec::new();
        for (name, floor) in floors {
            let j = self.labels.iter().position(|l| l == name)?;
            debug_assert!(j < dim);
            a.push(self.frontier.iter().map(|p| -p.0[j]).collect::<Vec<f64>>());
            b.push(-*floor);
        }
        a.push(vec![1.0; n]);
        b.push(1.0);
        let c: Vec<f64> = self.frontier.iter().map(|p| p.0[target]).collect();
        match solve_max(&c, &a, &b) {
            LpOutcome::Optimal { objective, .. } => Some(objective),
            _ => None,
        }
    }
}

fn sort_points(points: &mut [RatePoint]) {
    points.sort_by(|a, b| {
        a.0.iter()
            .zip(&b.0)
            .find_map(|(x, y)| x.partial_cmp(y).filter(|o| o.is_ne()))
            .unwrap_or(std::cmp::Ordering::Equal)
    });
}

/// Drop points coordinatewise dominated by another point; equal points
/// (within `1e-9` per coordinate) are deduplicated.
pub fn pareto_filter(points: Vec<RatePoint>) -> Vec<RatePoint> {
    let mut sorted = points;
    // scanning in decreasing coordinate-sum order keeps the kept-list short
    sorted.sort_by(|a, b| {
        let sa: f64 = a.0.iter().sum();
        let sb: f64 = b.0.iter().sum();
        sb.partial_cmp(&sa).unwrap()
    });
    let mut kept: Vec<RatePoint> = Vec::new();
    'outer: for p in sorted {
        for q in &kept {
            if p.dominated_by(&q.0, TIE_TOL) {
                continue 'outer;
            }
        }
        kept.push(p);
    }
    kept
}

/// Remove points lying in the down-closed convex hull of the remaining ones.
pub fn convex_prune(points: Vec<RatePoint>) -> Vec<RatePoint> {
    let mut keep = vec![true; points.len()];
    for i in 0..points.len() {
        let others: Vec<&RatePoint> = points
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i && keep[*j])
            .map(|(_, p)| p)
            .collect();
        if others.is_empty() {
            continue;
        }
        if convex_dominated(&points[i], &others) {
            keep[i] = false;
        }
    }
    points
        .into_iter()
        .zip(keep)
        .filter_map(|(p, k)| k.then_some(p))
        .collect()
}

/// Is `p` ≤ some convex combination of `generators` (componentwise)?
fn convex_dominated(p: &RatePoint, generators: &[&RatePoint]) -> bool {
    let dim = p.dim();
    let n = generators.len();
    // feasibility: Σ λ_k q_k[j] ≥ p[j] − tol, Σ λ ≤ 1, λ ≥ 0
    let mut a: Vec<Vec<f64>> = (0..dim)
        .map(|j| generators.iter().map(|q| -q.0[j]).collect())
        .collect();
    let mut b: Vec<f64> = (0..dim).map(|j| -(p.0[j] - TIE_TOL)).collect();
    a.push(vec![1.0; n]);
    b.push(1.0);
    matches!(solve_max(&vec![0.0; n], &a, &b), LpOutcome::Optimal { .. })
}

/// Reach of the down-closed convex hull of `points` along `dir`.
pub fn ray_reach(points: &[RatePoint], dir: &[f64]) -> f64 {
    debug_assert!(dir.iter().all(|&d| d > 0.0));
    let n = points.len();
    // variables (t, λ): max t  s.t.  t·dir ≤ Σ λ p, Σ λ ≤ 1
    let dim = dir.len();
    let mut a: Vec<Vec<f64>> = Vec::with_capacity(dim + 1);
    for j in 0..dim {
        let mut row = Vec::with_capacity(n + 1);
        row.push(dir[j]);
        row.extend(points.iter().map(|p| -p.0[j]));
        a.push(row);
    }
    let mut sum_row = vec![0.0; n + 1];
    for v in sum_row.iter_mut().skip(1) {
        *v = 1.0;
    }
    a.push(sum_row);
    let mut b = vec![0.0; dim];
    b.push(1.0);
    let mut c = vec![0.0; n + 1];
    c[0] = 1.0;
    match solve_max(&c, &a, &b) {
        LpOutcome::Optimal { objective, .. } => objective,
        _ => 0.0,
    }
}

/// A deterministic fan of `count` strictly positive unit directions in
/// `dim` dimensions (a half-offset angular grid).
pub fn ray_fan(dim: usize, count: usize) -> Vec<Vec<f64>> {
    assert!(dim >= 1);
    if dim == 1 {
        return vec![vec![1.0]];
    }
    // per-angle resolution so the product of (dim − 1) angle grids ≈ count
    let per_axis = (count as f64).powf(1.0 / (dim - 1) as f64).round() as usize;
    let per_axis = per_axis.max(2);
    let mut fans = vec![vec![]; 0];
    let mut idx = vec![0usize; dim - 1];
    loop {
        let mut v = vec![1.0; dim];
        // spherical-coordinate style construction with half-offset angles
        for (d, &i) in idx.iter().enumerate() {
            let theta = (i as f64 + 0.5) / per_axis as f64 * std::f64::consts::FRAC_PI_2;
            for item in v.iter_mut().take(d + 1) {
                *item *= theta.sin();
            }
            v[d + 1] *= theta.cos();
        }
        let norm: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        fans.push(v.into_iter().map(|x| (x / norm).max(1e-9)).collect());
        let mut d = 0;
        loop {
            if d == dim - 1 {
                return fans;
            }
            idx[d] += 1;
            if idx[d] < per_axis {
                break;
            }
            idx[d] = 0;
            d += 1;
        }
    }
}

/// One-sided Hausdorff-style gap from `a` to `b` on a fixed ray fan:
/// `max over rays of (reach_a − reach_b)+`. Zero means `a`'s hull is
/// contained in `b`'s on every tested ray.
pub fn frontier_gap(a: &[RatePoint], b: &[RatePoint], rays: &[Vec<f64>]) -> f64 {
    rays.iter()
        .map(|ray| (ray_reach(a, ray) - ray_reach(b, ray)).max(0.0))
        .fold(0.0, f64::max)
}

/// Symmetric version: `max(gap(a→b), gap(b→a))`.
pub fn frontier_distance(a: &[RatePoint], b: &[RatePoint], rays: &[Vec<f64>]) -> f64 {
    rays.iter()
        .map(|ray| (ray_reach(a, ray) - ray_reach(b, ray)).abs())
        .fold(0.0, f64::max)
}

/// One inequality `coeffs · r ≤ bound` over the labeled rates.
#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    pub coeffs: Vec<f64>,
    pub bound: f64,
}

/// The polyhedron `{r ≥ 0 : A·r ≤ b}` from one parameterization.
#[derive(Debug, Clone)]
pub struct ConstraintSet {
    pub labels: Vec<&'static str>,
    pub rows: Vec<Constraint>,
}

impl ConstraintSet {
    pub fn new(labels: Vec<&'static str>) -> Self {
        Self {
            labels,
            rows: Vec::new(),
        }
    }

    /// Add `Σ_{l ∈ who} r_l ≤ bound`; bounds are clamped at zero (tiny
    /// negative mutual informations are numerical noise).
    pub fn push(&mut self, who: &[&str], bound: f64) {
        let coeffs = self
            .labels
            .iter()
            .map(|l| if who.contains(l) { 1.0 } else { 0.0 })
            .collect();
        self.rows.push(Constraint {
            coeffs,
            bound: bound.max(0.0),
        });
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// Bound of the single row whose support is exactly `who`.
    pub fn bound_for(&self, who: &[&str]) -> Option<f64> {
        let mask: Vec<f64> = self
            .labels
            .iter()
            .map(|l| if who.contains(l) { 1.0 } else { 0.0 })
            .collect();
        self.rows
            .iter()
            .find(|r| r.coeffs == mask)
            .map(|r| r.bound)
    }

    /// Does `point` satisfy every row (and nonnegativity) within `tol`?
    pub fn contains(&self, point: &[f64], tol: f64) -> bool {
        if point.iter().any(|&x| x < -tol) {
            return false;
        }
        self.rows.iter().all(|row| {
            let lhs: f64 = row.coeffs.iter().zip(point).map(|(c, x)| c * x).sum();
            lhs <= row.bound + tol
        })
    }

    /// Substitute a fixed value for one coordinate, returning the reduced
    /// polyhedron over the remaining labels. Infeasible rows (a row whose
    /// bound is exhausted by the fixed value) clamp to zero bounds.
    pub fn fix_rate(&self, label: &str, value: f64) -> Option<ConstraintSet> {
        let idx = self.labels.iter().position(|l| *l == label)?;
        let labels: Vec<&'static str> = self
            .labels
            .iter()
            .enumerate()
            .filter_map(|(i, l)| (i != idx).then_some(*l))
            .collect();
        let rows = self
            .rows
            .iter()
            .map(|row| Constraint {
                coeffs: row
                    .coeffs
                    .iter()
                    .enumerate()
                    .filter_map(|(i, c)| (i != idx).then_some(*c))
                    .collect(),
                bound: (row.bound - row.coeffs[idx] * value).max(0.0),
            })
            .collect();
        Some(ConstraintSet { labels, rows })
    }

    /// Enumerate the polyhedron's vertices by brute force over basis
    /// subsets, then keep the Pareto-relevant ones. The polyhedra here have
    /// at most 7 rows in 4 dimensions, so this is cheap and exact.
    pub fn pareto_vertices(&self) -> Vec<RatePoint> {
        let dim = self.dim();
        // candidate planes: every constraint row plus every axis plane r_j = 0
        let mut planes: Vec<(Vec<f64>, f64)> = self
            .rows
            .iter()
            .map(|r| (r.coeffs.clone(), r.bound))
            .collect();
        for j in 0..dim {
            let mut e = vec![0.0; dim];
            e[j] = 1.0;
            planes.push((e, 0.0));
        }
        let mut vertices: Vec<RatePoint> = Vec::new();
        let mut chosen = vec![0usize; dim];
        enumerate_subsets(planes.len(), dim, &mut chosen, 0, 0, &mut |subset| {
            if let Some(sol) = solve_square(&planes, subset, dim) {
                if self.contains(&sol, 1e-9) {
                    let p = RatePoint::new(sol);
                    if !vertices
                        .iter()
                        .any(|q| q.0.iter().zip(&p.0).all(|(a, b)| (a - b).abs() < TIE_TOL))
                    {
                        vertices.push(p);
                    }
                }
            }
        });
        if vertices.is_empty() {
            // fully degenerate polyhedron: the origin is always a member
            vertices.push(RatePoint::new(vec![0.0; dim]));
        }
        pareto_filter(vertices)
    }
}

fn enumerate_subsets(
    n: usize,
    k: usize,
    chosen: &mut Vec<usize>,
    depth: usize,
    start: usize,
    f: &mut impl FnMut(&[usize]),
) {
    if depth == k {
        f(chosen);
        return;
    }
    for i in start..n {
        chosen[depth] = i;
        enumerate_subsets(n, k, chosen, depth + 1, i + 1, f);
    }
}

/// Solve the k×k system given by the chosen planes; `None` when singular.
fn solve_square(planes: &[(Vec<f64>, f64)], subset: &[usize], dim: usize) -> Option<Vec<f64>> {
    let mut m = vec![vec![0.0; dim + 1]; dim];
    for (r, &pi) in subset.iter().enumerate() {
        m[r][..dim].copy_from_slice(&planes[pi].0);
        m[r][dim] = planes[pi].1;
    }
    // Gaussian elimination with partial pivoting
    for col in 0..dim {
        let piv = (col..dim).max_by(|&a, &b| {
            m[a][col].abs().partial_cmp(&m[b][col].abs()).unwrap()
        })?;
        if m[piv][col].abs() < 1e-12 {
            return None;
        }
        m.swap(col, piv);
        let d = m[col][col];
        for j in col..=dim {
            m[col][j] /= d;
        }
        for r in 0..dim {
            if r != col && m[r][col] != 0.0 {
                let f = m[r][col];
                for j in col..=dim {
                    m[r][j] -= f * m[col][j];
                }
            }
        }
    }
    Some(m.iter().map(|row| row[dim]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn pts(raw: &[&[f64]]) -> Vec<RatePoint> {
        raw.iter().map(|p| RatePoint::new(p.to_vec())).collect()
    }

    #[test]
    fn pareto_and_convex_frontier() {
        let points = pts(&[&[0.0, 0.0], &[1.0, 0.0], &[0.0, 1.0], &[0.4, 0.4]]);
        let region =
            RateRegion::from_points(vec!["a".into(), "b".into()], points, HullMode::Convex)
                .unwrap();
        // (0.4, 0.4) is under the (1,0)–(0,1) chord, (0,0) under everything
        assert_eq!(region.frontier.len(), 2);
        assert!(region
            .frontier
            .iter()
            .any(|p| (p.0[0] - 1.0).abs() < 1e-12 && p.0[1].abs() < 1e-12));
    }

    #[test]
    fn single_point_and_collinear() {
        let one = RateRegion::from_points(
            vec!["a".into(), "b".into()],
            pts(&[&[0.3, 0.7]]),
            HullMode::Convex,
        )
        .unwrap();
        assert_eq!(one.frontier.len(), 1);

        // collinear on x + y = 1: endpoints suffice
        let col = RateRegion::from_points(
            vec!["a".into(), "b".into()],
            pts(&[&[1.0, 0.0], &[0.5, 0.5], &[0.0, 1.0], &[0.25, 0.75]]),
            HullMode::Convex,
        )
        .unwrap();
        assert_eq!(col.frontier.len(), 2);
        // ...but Pareto mode keeps all mutually undominated points
        let par = RateRegion::from_points(
            vec!["a".into(), "b".into()],
            pts(&[&[1.0, 0.0], &[0.5, 0.5], &[0.0, 1.0]]),
            HullMode::Pareto,
        )
        .unwrap();
        assert_eq!(par.frontier.len(), 3);
    }

    #[test]
    fn empty_and_mixed_dimension_errors() {
        assert!(
            RateRegion::from_points(vec!["a".into()], vec![], HullMode::Pareto).is_err()
        );
        assert!(RateRegion::from_points(
            vec!["a".into(), "b".into()],
            pts(&[&[0.1, 0.2], &[0.1]]),
            HullMode::Pareto
        )
        .is_err());
    }

    #[test]
    fn reach_interpolates_between_vertices() {
        let points = pts(&[&[1.0, 0.0], &[0.0, 1.0]]);
        let d = std::f64::consts::FRAC_1_SQRT_2;
        // hull of the two down-sets contains (0.5, 0.5) by time sharing
        let r = ray_reach(&points, &[d, d]);
        assert_abs_diff_eq!(r, 0.5 / d, epsilon = 1e-8);
        // along the x axis-ish ray the reach is governed by (1, 0)
        let r = ray_reach(&points, &[1.0, 1e-9]);
        assert_abs_diff_eq!(r, 1.0, epsilon = 1e-6);
    }

    #[test]
    fn ray_fan_shapes() {
        for dim in [2usize, 3, 4] {
            let fan = ray_fan(dim, 64);
            assert!(fan.len() >= 49, "dim {dim}: got {}", fan.len());
            for ray in &fan {
                assert_eq!(ray.len(), dim);
                assert!(ray.iter().all(|&x| x > 0.0));
                let norm: f64 = ray.iter().map(|x| x * x).sum::<f64>();
                assert_abs_diff_eq!(norm, 1.0, epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn frontier_gap_detects_containment() {
        let small = pts(&[&[0.5, 0.5]]);
        let big = pts(&[&[1.0, 0.1], &[0.1, 1.0]]);
        let rays = ray_fan(2, 64);
        assert!(frontier_gap(&small, &big, &rays) < 1e-9);
        assert!(frontier_gap(&big, &small, &rays) > 0.3);
    }

    #[test]
    fn constraint_set_vertices_pentagon() {
        // R1 ≤ 1, R2 ≤ 0.8, R1 + R2 ≤ 1.5 — the classic pentagon
        let mut cs = ConstraintSet::new(vec!["R1", "R2"]);
        cs.push(&["R1"], 1.0);
        cs.push(&["R2"], 0.8);
        cs.push(&["R1", "R2"], 1.5);
        let v = cs.pareto_vertices();
        assert_eq!(v.len(), 2);
        let mut got: Vec<(f64, f64)> = v.iter().map(|p| (p.0[0], p.0[1])).collect();
        got.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        assert_abs_diff_eq!(got[0].0, 0.7, epsilon = 1e-9);
        assert_abs_diff_eq!(got[0].1, 0.8, epsilon = 1e-9);
        assert_abs_diff_eq!(got[1].0, 1.0, epsilon = 1e-9);
        assert_abs_diff_eq!(got[1].1, 0.5, epsilon = 1e-9);
    }

    #[test]
    fn constraint_set_degenerate_and_fix() {
        let mut cs = ConstraintSet::new(vec!["R1", "R2"]);
        cs.push(&["R1"], 0.0);
        cs.push(&["R2"], 0.0);
        let v = cs.pareto_vertices();
        assert_eq!(v.len(), 1);
        assert!(v[0].0.iter().all(|&x| x == 0.0));

        let mut cs = ConstraintSet::new(vec!["R1", "R2", "R3"]);
        cs.push(&["R1"], 1.0);
        cs.push(&["R2"], 0.5);
        cs.push(&["R2", "R3"], 0.9);
        cs.push(&["R3"], 2.0);
        let fixed = cs.fix_rate("R3", 0.4).unwrap();
        assert_eq!(fixed.labels, vec!["R1", "R2"]);
        assert_abs_diff_eq!(fixed.bound_for(&["R2"]).unwrap(), 0.5, epsilon = 1e-12);
        // the R2 + R3 row became R2 ≤ 0.5 as well
        assert!(fixed.rows.iter().any(|r| r.coeffs == vec![0.0, 1.0]
            && (r.bound - 0.5).abs() < 1e-12));
    }

    #[test]
    fn max_coord_given_floor() {
        let region = RateRegion::from_points(
            vec!["R1".into(), "R2".into()],
            pts(&[&[1.0, 0.0], &[0.0, 1.0]]),
            HullMode::Convex,
        )
        .unwrap();
        let r2 = region.max_coord_given("R2", &[("R1", 0.25)]).unwrap();
        assert_abs_diff_eq!(r2, 0.75, epsilon = 1e-8);
    }
}
