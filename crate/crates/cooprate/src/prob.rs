//! Exact finite-alphabet probability objects and information measures.
//!
//! Everything downstream (channel models, rate-region bounds, the joint
//! typicality tests of the simulator) is built from three value types:
//!
//! * [`ProbVector`] — a probability mass function over a finite alphabet,
//! * [`CondKernel`] — a row-stochastic matrix `P(output | input)`,
//! * [`JointTable`] — a dense joint distribution over named axes.
//!
//! All rates and entropies are in bits (`log2`). The conventions
//! `0 · log 0 = 0` and `0/0 = 0` inside mutual-information terms are applied
//! throughout.

use thiserror::Error;

/// Tolerance for "entries sum to one" checks at construction time.
pub const MASS_TOL: f64 = 1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum ProbError {
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),
    #[error("value {value} outside domain {domain}")]
    Domain { value: f64, domain: &'static str },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("unknown axis `{0}`")]
    UnknownAxis(String),
    #[error("axis groups overlap on `{0}`")]
    OverlappingGroups(String),
}

pub type Result<T> = std::result::Result<T, ProbError>;

/// A probability mass function over `{0, …, alphabet_size − 1}`.
///
/// Entries are validated once at construction; every operation afterwards
/// assumes a valid distribution.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbVector {
    probs: Vec<f64>,
}

impl ProbVector {
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(ProbError::InvalidDistribution("empty support".into()));
        }
        if let Some(p) = probs.iter().find(|p| !p.is_finite() || **p < 0.0) {
            return Err(ProbError::InvalidDistribution(format!(
                "negative or non-finite entry {p}"
            )));
        }
        let mass: f64 = probs.iter().sum();
        if (mass - 1.0).abs() > MASS_TOL {
            return Err(ProbError::InvalidDistribution(format!(
                "mass {mass} differs from 1 by more than {MASS_TOL}"
            )));
        }
        Ok(Self { probs })
    }

    /// Uniform distribution over `n` symbols.
    pub fn uniform(n: usize) -> Self {
        Self {
            probs: vec![1.0 / n as f64; n],
        }
    }

    /// Point mass on `symbol`.
    pub fn point_mass(n: usize, symbol: usize) -> Self {
        let mut probs = vec![0.0; n];
        probs[symbol] = 1.0;
        Self { probs }
    }

    /// Bernoulli-style pair `(p0, 1 − p0)`.
    pub fn binary(p0: f64) -> Result<Self> {
        check_unit_interval(p0)?;
        Ok(Self {
            probs: vec![p0, 1.0 - p0],
        })
    }

    pub fn alphabet_size(&self) -> usize {
        self.probs.len()
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn get(&self, i: usize) -> f64 {
        self.probs[i]
    }
}

/// Shannon entropy of `p` in bits: `H(p) = −Σ p_i log2 p_i`.
pub fn entropy(p: &ProbVector) -> f64 {
    entropy_of_slice(p.probs())
}

pub(crate) fn entropy_of_slice(probs: &[f64]) -> f64 {
    let h: f64 = probs
        .iter()
        .map(|&p| if p > 0.0 { -p * p.log2() } else { 0.0 })
        .sum();
    h.max(0.0)
}

/// Binary entropy `H2(a) = −a log2 a − (1−a) log2 (1−a)`.
pub fn binary_entropy(a: f64) -> Result<f64> {
    check_unit_interval(a)?;
    Ok(entropy_of_slice(&[a, 1.0 - a]))
}

/// The two binary mixing operations used throughout the examples:
/// `a ∗ b = a·(1−b) + (1−a)·b` (probability that two independent
/// Bernoulli indicators differ) and `a ⋆ b = a·b + (1−a)·(1−b)`
/// (probability that they match). Returned as `(a_conv, a_match)`.
pub fn star_ops(a: f64, b: f64) -> Result<(f64, f64)> {
    check_unit_interval(a)?;
    check_unit_interval(b)?;
    let conv = a * (1.0 - b) + (1.0 - a) * b;
    Ok((conv, 1.0 - conv))
}

/// `a ∗ b` without the tuple; callers that already validated inputs.
pub(crate) fn bconv(a: f64, b: f64) -> f64 {
    a * (1.0 - b) + (1.0 - a) * b
}

/// `a ⋆ b` without the tuple.
pub(crate) fn bmatch(a: f64, b: f64) -> f64 {
    a * b + (1.0 - a) * (1.0 - b)
}

fn check_unit_interval(a: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&a) || !a.is_finite() {
        return Err(ProbError::Domain {
            value: a,
            domain: "[0, 1]",
        });
    }
    Ok(())
}

/// A conditional distribution `P(output | input)` stored row-major:
/// `input_size` rows, each a valid [`ProbVector`] over `output_size` symbols.
#[derive(Debug, Clone, PartialEq)]
pub struct CondKernel {
    rows: Vec<f64>,
    input_size: usize,
    output_size: usize,
}

impl CondKernel {
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(ProbError::InvalidDistribution("kernel with no rows".into()));
        }
        let output_size = rows[0].len();
        let mut flat = Vec::with_capacity(rows.len() * output_size);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != output_size {
                return Err(ProbError::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {output_size}",
                    row.len()
                )));
            }
            ProbVector::new(row.clone()).map_err(|e| {
                ProbError::InvalidDistribution(format!("row {i}: {e}"))
            })?;
            flat.extend_from_slice(row);
        }
        Ok(Self {
            rows: flat,
            input_size: rows.len(),
            output_size,
        })
    }

    /// Identity kernel (noiseless channel) on `n` symbols.
    pub fn identity(n: usize) -> Self {
        let mut rows = vec![0.0; n * n];
        for i in 0..n {
            rows[i * n + i] = 1.0;
        }
        Self {
            rows,
            input_size: n,
            output_size: n,
        }
    }

    /// Binary symmetric channel with crossover probability `eps`.
    pub fn bsc(eps: f64) -> Result<Self> {
        check_unit_interval(eps)?;
        Ok(Self {
            rows: vec![1.0 - eps, eps, eps, 1.0 - eps],
            input_size: 2,
            output_size: 2,
        })
    }

    pub fn input_size(&self) -> usize {
        self.input_size
    }

    pub fn output_size(&self) -> usize {
        self.output_size
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.rows[i * self.output_size..(i + 1) * self.output_size]
    }

    pub fn get(&self, input: usize, output: usize) -> f64 {
        self.rows[input * self.output_size + output]
    }

    /// Cascade composition: `(self ∘ next)(z|x) = Σ_y self(y|x) next(z|y)`.
    pub fn compose(&self, next: &CondKernel) -> Result<CondKernel> {
        if self.output_size != next.input_size {
            return Err(ProbError::DimensionMismatch(format!(
                "cascade: {} outputs feed {} inputs",
                self.output_size, next.input_size
            )));
        }
        let mut rows = vec![0.0; self.input_size * next.output_size];
        for x in 0..self.input_size {
            for y in 0..self.output_size {
                let p = self.get(x, y);
                if p == 0.0 {
                    continue;
                }
                for z in 0..next.output_size {
                    rows[x * next.output_size + z] += p * next.get(y, z);
                }
            }
        }
        Ok(CondKernel {
            rows,
            input_size: self.input_size,
            output_size: next.output_size,
        })
    }

    /// Push `p` through the kernel: `q(y) = Σ_x p(x) P(y|x)`.
    pub fn apply(&self, p: &ProbVector) -> Result<ProbVector> {
        if p.alphabet_size() != self.input_size {
            return Err(ProbError::DimensionMismatch(format!(
                "input law over {} symbols, kernel expects {}",
                p.alphabet_size(),
                self.input_size
            )));
        }
        let mut out = vec![0.0; self.output_size];
        for x in 0..self.input_size {
            let px = p.get(x);
            if px == 0.0 {
                continue;
            }
            for y in 0..self.output_size {
                out[y] += px * self.get(x, y);
            }
        }
        ProbVector::new(out)
    }
}

/// A dense joint distribution over an ordered list of named axes.
///
/// Axis order fixes the row-major layout; `probs[idx]` with
/// `idx = Σ indices[d] · stride[d]`. Tables in this crate stay tiny (every
/// alphabet in the models has ≤ 16 symbols), so dense storage is fine.
#[derive(Debug, Clone)]
pub struct JointTable {
    axes: Vec<(String, usize)>,
    probs: Vec<f64>,
}

impl JointTable {
    pub fn new(axes: Vec<(&str, usize)>, probs: Vec<f64>) -> Result<Self> {
        let total: usize = axes.iter().map(|(_, n)| n).product();
        if probs.len() != total {
            return Err(ProbError::DimensionMismatch(format!(
                "table has {} entries, axes imply {total}",
                probs.len()
            )));
        }
        if let Some(p) = probs.iter().find(|p| !p.is_finite() || **p < 0.0) {
            return Err(ProbError::InvalidDistribution(format!(
                "negative or non-finite entry {p}"
            )));
        }
        let mass: f64 = probs.iter().sum();
        if (mass - 1.0).abs() > MASS_TOL {
            return Err(ProbError::InvalidDistribution(format!(
                "total mass {mass} differs from 1 by more than {MASS_TOL}"
            )));
        }
        let mut seen = Vec::new();
        for (name, _) in &axes {
            if seen.contains(name) {
                return Err(ProbError::OverlappingGroups((*name).into()));
            }
            seen.push(name);
        }
        Ok(Self {
            axes: axes.iter().map(|(n, s)| (n.to_string(), *s)).collect(),
            probs,
        })
    }

    /// Build a table by evaluating `f` at every index tuple. `f` must return
    /// a valid (normalized, nonnegative) assignment.
    pub fn from_fn(
        axes: Vec<(&str, usize)>,
        f: impl Fn(&[usize]) -> f64,
    ) -> Result<Self> {
        let sizes: Vec<usize> = axes.iter().map(|(_, n)| *n).collect();
        let total: usize = sizes.iter().product();
        let mut idx = vec![0usize; sizes.len()];
        let mut probs = Vec::with_capacity(total);
        for _ in 0..total {
            probs.push(f(&idx));
            // odometer increment, last axis fastest
            for d in (0..sizes.len()).rev() {
                idx[d] += 1;
                if idx[d] < sizes[d] {
                    break;
                }
                idx[d] = 0;
            }
        }
        Self::new(axes, probs)
    }

    pub fn axes(&self) -> impl Iterator<Item = (&str, usize)> {
        self.axes.iter().map(|(n, s)| (n.as_str(), *s))
    }

    pub fn axis_size(&self, name: &str) -> Result<usize> {
        self.axes
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, s)| *s)
            .ok_or_else(|| ProbError::UnknownAxis(name.into()))
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    fn axis_positions(&self, names: &[&str]) -> Result<Vec<usize>> {
        names
            .iter()
            .map(|name| {
                self.axes
                    .iter()
                    .position(|(n, _)| n == name)
                    .ok_or_else(|| ProbError::UnknownAxis((*name).into()))
            })
            .collect()
    }

    fn strides(&self) -> Vec<usize> {
        let mut strides = vec![1usize; self.axes.len()];
        for d in (0..self.axes.len().saturating_sub(1)).rev() {
            strides[d] = strides[d + 1] * self.axes[d + 1].1;
        }
        strides
    }

    /// Marginal distribution over the named axes, in the order given.
    pub fn marginal(&self, names: &[&str]) -> Result<JointTable> {
        let keep = self.axis_positions(names)?;
        {
            let mut sorted = keep.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != keep.len() {
                return Err(ProbError::OverlappingGroups(names.join(",")));
            }
        }
        let strides = self.strides();
        let out_sizes: Vec<usize> = keep.iter().map(|&d| self.axes[d].1).collect();
        let out_total: usize = out_sizes.iter().product::<usize>().max(1);
        let mut out = vec![0.0; out_total];
        let sizes: Vec<usize> = self.axes.iter().map(|(_, s)| *s).collect();
        let mut idx = vec![0usize; sizes.len()];
        for flat in 0..self.probs.len() {
            let mut o = 0usize;
            for &d in &keep {
                o = o * self.axes[d].1 + idx[d];
            }
            out[o] += self.probs[flat];
            let _ = flat;
            for d in (0..sizes.len()).rev() {
                idx[d] += 1;
                if idx[d] < sizes[d] {
                    break;
                }
                idx[d] = 0;
            }
        }
        let _ = strides;
        JointTable::new(
            names
                .iter()
                .zip(out_sizes.iter())
                .map(|(n, s)| (*n, *s))
                .collect(),
            out,
        )
    }

    /// Joint entropy of the named subset of axes (all axes if `names` empty
    /// would be ambiguous, so the full-table entropy uses all axis names).
    pub fn entropy_of(&self, names: &[&str]) -> Result<f64> {
        if names.is_empty() {
            return Ok(0.0);
        }
        let m = self.marginal(names)?;
        Ok(entropy_of_slice(&m.probs))
    }

    /// `H(A | B) = H(A, B) − H(B)`.
    pub fn conditional_entropy(&self, a: &[&str], b: &[&str]) -> Result<f64> {
        ensure_disjoint(&[a, b])?;
        let ab = concat(a, b);
        Ok((self.entropy_of(&ab)? - self.entropy_of(b)?).max(0.0))
    }

    /// Mutual information `I(A; B) = H(A) + H(B) − H(A, B)` in bits.
    /// Remaining axes are marginalized out.
    pub fn mutual_information(&self, a: &[&str], b: &[&str]) -> Result<f64> {
        self.conditional_mutual_information(a, b, &[])
    }

    /// Conditional mutual information
    /// `I(A; B | C) = H(A,C) + H(B,C) − H(A,B,C) − H(C)` in bits.
    /// With empty `C` this is plain mutual information.
    pub fn conditional_mutual_information(
        &self,
        a: &[&str],
        b: &[&str],
        c: &[&str],
    ) -> Result<f64> {
        ensure_disjoint(&[a, b, c])?;
        self.axis_positions(a)?;
        self.axis_positions(b)?;
        self.axis_positions(c)?;
        let h_ac = self.entropy_of(&concat(a, c))?;
        let h_bc = self.entropy_of(&concat(b, c))?;
        let h_abc = self.entropy_of(&concat(&concat(a, b), c))?;
        let h_c = self.entropy_of(c)?;
        Ok((h_ac + h_bc - h_abc - h_c).max(0.0))
    }
}

fn concat<'a>(a: &[&'a str], b: &[&'a str]) -> Vec<&'a str> {
    a.iter().chain(b.iter()).copied().collect()
}

fn ensure_disjoint(groups: &[&[&str]]) -> Result<()> {
    for (i, g) in groups.iter().enumerate() {
        for h in &groups[i + 1..] {
            for name in *g {
                if h.contains(name) {
                    return Err(ProbError::OverlappingGroups((*name).into()));
                }
            }
        }
    }
    Ok(())
}
