//! A small dense two-phase simplex solver.
//!
//! The frontier machinery needs two kinds of linear programs, both tiny
//! (≤ 5 structural rows, up to a few hundred columns): the reach of a
//! down-closed convex hull along a ray, and convex-domination tests.
//! Bland's pivoting rule keeps the solver cycle-free and deterministic.

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal { objective: f64, x: Vec<f64> },
    Infeasible,
    Unbounded,
}

const EPS: f64 = 1e-9;

/// Maximize `c · x` subject to `A x ≤ b`, `x ≥ 0`. Entries of `b` may be
/// negative (phase 1 finds a starting basis).
pub fn solve_max(c: &[f64], a: &[Vec<f64>], b: &[f64]) -> LpOutcome {
    let m = a.len();
    let n = c.len();
    debug_assert!(a.iter().all(|row| row.len() == n));
    debug_assert_eq!(b.len(), m);

    // Tableau columns: n structural + m slacks + 1 artificial (driven out in
    // phase 1) + rhs. Rows: m constraints + objective row.
    let cols = n + m + 2;
    let mut t = vec![vec![0.0; cols]; m + 1];
    let mut basis = vec![0usize; m];
    for i in 0..m {
        for j in 0..n {
            t[i][j] = a[i][j];
        }
        t[i][n + i] = 1.0;
        t[i][cols - 1] = b[i];
        basis[i] = n + i;
    }

    // Phase 1: if some b_i < 0, add one artificial column x0 with −1 in every
    // row and minimize x0 (standard big-pivot construction).
    let art = n + m;
    if b.iter().any(|&bi| bi < -EPS) {
        for row in t.iter_mut().take(m) {
            row[art] = -1.0;
        }
        // objective: minimize x0 == maximize −x0
        t[m] = vec![0.0; cols];
        t[m][art] = 1.0;
        // pivot x0 into the most-negative row to make the tableau feasible
        let worst = (0..m)
            .min_by(|&i, &j| t[i][cols - 1].partial_cmp(&t[j][cols - 1]).unwrap())
            .unwrap();
        pivot(&mut t, &mut basis, worst, art);
        if !run_simplex(&mut t, &mut basis) {
            return LpOutcome::Infeasible; // phase-1 LP is never unbounded
        }
        let x0_val = basis
            .iter()
            .position(|&v| v == art)
            .map(|r| t[r][cols - 1])
            .unwrap_or(0.0);
        if x0_val > EPS {
            return LpOutcome::Infeasible;
        }
        if let Some(r) = basis.iter().position(|&v| v == art) {
            // drive the artificial variable out on any usable column
            if let Some(j) = (0..n + m).find(|&j| t[r][j].abs() > EPS) {
                pivot(&mut t, &mut basis, r, j);
            }
        }
        for row in t.iter_mut().take(m) {
            row[art] = 0.0;
        }
    }

    // Phase 2: install the real objective, priced out against the basis.
    t[m] = vec![0.0; cols];
    for j in 0..n {
        t[m][j] = -c[j];
    }
    for i in 0..m {
        let bj = basis[i];
        let coeff = t[m][bj];
        if coeff.abs() > 0.0 {
            for j in 0..cols {
                t[m][j] -= coeff * t[i][j];
            }
        }
    }
    if !run_simplex(&mut t, &mut basis) {
        return LpOutcome::Unbounded;
    }

    let mut x = vec![0.0; n];
    for (i, &bj) in basis.iter().enumerate() {
        if bj < n {
            x[bj] = t[i][cols - 1];
        }
    }
    LpOutcome::Optimal {
        objective: t[m][cols - 1],
        x,
    }
}

/// Returns false when the LP is unbounded.
fn run_simplex(t: &mut [Vec<f64>], basis: &mut [usize]) -> bool {
    let m = basis.len();
    let cols = t[0].len();
    loop {
        // Bland: entering column = lowest index with negative reduced cost
        let Some(col) = (0..cols - 1).find(|&j| t[m][j] < -EPS) else {
            return true;
        };
        let mut row = None;
        let mut best = f64::INFINITY;
        for i in 0..m {
            if t[i][col] > EPS {
                let ratio = t[i][cols - 1] / t[i][col];
                // Bland tie-break on the basis variable index
                if ratio < best - EPS
                    || (ratio < best + EPS && row.is_some_and(|r: usize| basis[i] < basis[r]))
                {
                    best = ratio;
                    row = Some(i);
                }
            }
        }
        let Some(row) = row else {
            return false;
        };
        pivot(t, basis, row, col);
    }
}

fn pivot(t: &mut [Vec<f64>], basis: &mut [usize], row: usize, col: usize) {
    let cols = t[0].len();
    let piv = t[row][col];
    for j in 0..cols {
        t[row][j] /= piv;
    }
    for i in 0..t.len() {
        if i == row {
            continue;
        }
        let factor = t[i][col];
        if factor != 0.0 {
            for j in 0..cols {
                t[i][j] -= factor * t[row][j];
            }
        }
    }
    if row < basis.len() {
        basis[row] = col;
    }
}
