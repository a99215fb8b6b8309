//! MAC random-coding simulation: block-Markov superposition coding with an
//! unreliable cribbing link.
//!
//! Encoder 1 always uses the same layered codebook (resolution information
//! on `U`, fresh information on `V` and `X1`). When the link is absent,
//! encoder 2 sends its own codewords and the receiver decodes forward block
//! by block. When the link is present, encoder 2 decodes encoder 1's
//! messages off the cribbed input and superimposes its codewords on the
//! resolution cloud; the receiver decodes backward from the last block.
//!
//! Fresh messages ride blocks `1..B−1`; block `B` carries index 1 in every
//! fresh slot, so `B` blocks deliver `B−1` messages (effective rates scale
//! by `(B−1)/B`). A decoding step with an empty or ambiguous candidate set
//! picks an index at random; a step whose candidate space is a single index
//! returns it outright.

use super::rng::{sample_index, stream};
use super::typicality::JointScore;
use super::{cdf_rows, check_total_symbols, codebook_size, sample_cdf, SimConfig, SimError};
use super::{Result, SimReport};
use crate::channels::{axis, mac_joint_strict, CribLaw, MacAuxCausal, MacAuxStrict, MacChannel};
use crate::prob::{JointTable, ProbVector};
use crate::regions::strategy::{shannon_strategy_lift, strategy_distribution};
use rand::Rng;
use rayon::prelude::*;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MacRates {
    pub r1: f64,
    pub r1p: f64,
    pub r2: f64,
    pub r2pp: f64,
}

/// Layered codebook for the block-Markov scheme. Index convention:
/// `v(m0, m1)` and `u(m0, m0p)` carry resolution index `m0` (and `m0p`),
/// `x1(m0, m0p, m1, m1p)` is superimposed on both, and the cribbing-branch
/// words `x2pp(m2pp, m0, m0p)` ride the resolution cloud.
struct MacCodebook {
    n: usize,
    nu1: u64,
    nu1p: u64,
    nu2: u64,
    nu2pp: u64,
    v: Vec<u8>,
    u: Vec<u8>,
    x1: Vec<u8>,
    x2: Vec<u8>,
    x2pp: Vec<u8>,
}

impl MacCodebook {
    fn v_word(&self, m0: u64, m1: u64) -> &[u8] {
        let s = (m0 * self.nu1 + m1) as usize * self.n;
        &self.v[s..s + self.n]
    }
    fn u_word(&self, m0: u64, m0p: u64) -> &[u8] {
        let s = (m0 * self.nu1p + m0p) as usize * self.n;
        &self.u[s..s + self.n]
    }
    fn x1_word(&self, m0: u64, m0p: u64, m1: u64, m1p: u64) -> &[u8] {
        let s = ((((m0 * self.nu1p + m0p) * self.nu1) + m1) * self.nu1p + m1p) as usize * self.n;
        &self.x1[s..s + self.n]
    }
    fn x2_word(&self, m2: u64) -> &[u8] {
        let s = m2 as usize * self.n;
        &self.x2[s..s + self.n]
    }
    fn x2pp_word(&self, m2pp: u64, m0: u64, m0p: u64) -> &[u8] {
        let s = ((m2pp * self.nu1 + m0) * self.nu1p + m0p) as usize * self.n;
        &self.x2pp[s..s + self.n]
    }
}

fn build_codebook(
    mac: &MacChannel,
    aux: &MacAuxStrict,
    rates: &MacRates,
    cfg: &SimConfig,
) -> Result<MacCodebook> {
    let n = cfg.n as u64;
    let nu1 = codebook_size(cfg.n, rates.r1)?;
    let nu1p = codebook_size(cfg.n, rates.r1p)?;
    let nu2 = codebook_size(cfg.n, rates.r2)?;
    let nu2pp = codebook_size(cfg.n, rates.r2pp)?;
    let pairs = nu1 * nu1p;
    let total = (nu1 * nu1 + pairs + pairs * pairs + nu2 + nu2pp * pairs) * n;
    check_total_symbols(total)?;

    let (cu, cv) = (aux.card_u(), aux.card_v());
    let mut rng = stream(cfg.seed, "mac.codebook", &[]);

    let mut v = vec![0u8; (nu1 * nu1 * n) as usize];
    for sym in v.iter_mut() {
        *sym = sample_index(&mut rng, aux.p_v.probs());
    }
    let mut u = vec![0u8; (pairs * n) as usize];
    for sym in u.iter_mut() {
        *sym = sample_index(&mut rng, aux.p_u.probs());
    }
    let mut x1 = vec![0u8; (pairs * pairs * n) as usize];
    for m0 in 0..nu1 {
        for m0p in 0..nu1p {
            for m1 in 0..nu1 {
                for m1p in 0..nu1p {
                    for i in 0..cfg.n {
                        let ui = u[((m0 * nu1p + m0p) * n) as usize + i] as usize;
                        let vi = v[((m0 * nu1 + m1) * n) as usize + i] as usize;
                        let s = ((((m0 * nu1p + m0p) * nu1 + m1) * nu1p + m1p) * n) as usize + i;
                        x1[s] = sample_index(&mut rng, aux.p_x1_given_uv.row(ui * cv + vi));
                    }
                }
            }
        }
    }
    let mut x2 = vec![0u8; (nu2 * n) as usize];
    for sym in x2.iter_mut() {
        *sym = sample_index(&mut rng, aux.p_x2.probs());
    }
    let mut x2pp = vec![0u8; (nu2pp * pairs * n) as usize];
    for m2pp in 0..nu2pp {
        for m0 in 0..nu1 {
            for m0p in 0..nu1p {
                for i in 0..cfg.n {
                    let ui = u[((m0 * nu1p + m0p) * n) as usize + i] as usize;
                    let s = (((m2pp * nu1 + m0) * nu1p + m0p) * n) as usize + i;
                    x2pp[s] = sample_index(&mut rng, aux.p_x2pp_given_u.row(ui));
                }
            }
        }
    }
    let _ = (cu, mac);
    Ok(MacCodebook {
        n: cfg.n,
        nu1,
        nu1p,
        nu2,
        nu2pp,
        v,
        u,
        x1,
        x2,
        x2pp,
    })
}

/// Resolve a decoding step: a one-point candidate space returns its element,
/// a unique satisfier is returned, and otherwise an index is chosen at
/// random (uniformly among satisfiers when there are several, uniformly over
/// the whole space when there are none).
fn pick<T: Copy>(rng: &mut impl Rng, space: &[T], satisfiers: &[T]) -> T {
    if space.len() == 1 {
        return space[0];
    }
    match satisfiers.len() {
        1 => satisfiers[0],
        0 => space[rng.gen_range(0..space.len())],
        _ => satisfiers[rng.gen_range(0..satisfiers.len())],
    }
}

pub fn mac_simulate_strict(
    mac: &MacChannel,
    aux: &MacAuxStrict,
    rates: &MacRates,
    cfg: &SimConfig,
) -> Result<SimReport> {
    cfg.validate()?;
    let big_b = cfg.blocks;
    if big_b < 2 {
        return Err(SimError::TooFewBlocks(big_b));
    }
    let book = build_codebook(mac, aux, rates, cfg)?;
    let joint = mac_joint_strict(mac, aux)?;
    let n = cfg.n;
    let eps = cfg.typicality_eps;

    let score_v_x1 = JointScore::new(&joint, &[axis::V, axis::X1])?;
    let score_uv_x1 = JointScore::new(&joint, &[axis::U, axis::V, axis::X1])?;
    let score_present = JointScore::new(
        &joint,
        &[axis::U, axis::V, axis::X1, axis::X2PP, axis::YPP],
    )?;
    let score_absent = JointScore::new(&joint, &[axis::V, axis::X2, axis::Y])?;

    let y_cdf = cdf_rows(&mac.p_y_given_x1x2);
    let x2_size = mac.x2_size;

    #[derive(Default)]
    struct Counts {
        dec: u64,
        crib: u64,
        per_block: Vec<u64>,
    }

    let fresh = big_b - 1; // blocks carrying real messages
    let counts = (0..cfg.trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = stream(cfg.seed, "mac.trial", &[t]);
            let mut c = Counts {
                per_block: vec![0; fresh],
                ..Default::default()
            };

            // fresh messages; the last block's slots are pinned to index 0
            let draw = |rng: &mut rand_chacha::ChaCha12Rng, count: u64, b: usize| {
                if b < fresh {
                    rng.gen_range(0..count)
                } else {
                    0
                }
            };
            let m1: Vec<u64> = (0..big_b).map(|b| draw(&mut rng, book.nu1, b)).collect();
            let m1p: Vec<u64> = (0..big_b).map(|b| draw(&mut rng, book.nu1p, b)).collect();
            let m2: Vec<u64> = (0..big_b).map(|b| draw(&mut rng, book.nu2, b)).collect();
            let m2pp: Vec<u64> = (0..big_b).map(|b| draw(&mut rng, book.nu2pp, b)).collect();

            let res = |msgs: &[u64], b: usize| if b == 0 { 0 } else { msgs[b - 1] };

            if !cfg.link_present {
                // encoder 2 never reads the cribbed input in this world
                let mut est_m1: Vec<u64> = vec![0; big_b];
                let mut est_m2: Vec<u64> = vec![0; big_b];
                for b in 0..big_b {
                    let x1_b =
                        book.x1_word(res(&m1, b), res(&m1p, b), m1[b], m1p[b]);
                    let x2_b = book.x2_word(m2[b]);
                    let mut y = vec![0u8; n];
                    for i in 0..n {
                        let row = x1_b[i] as usize * x2_size + x2_b[i] as usize;
                        y[i] = sample_cdf(&mut rng, &y_cdf[row]);
                    }
                    // forward decode of (fresh V index, X2 index)
                    let c1: Vec<u64> = if b < fresh {
                        (0..book.nu1).collect()
                    } else {
                        vec![0]
                    };
                    let c2: Vec<u64> = if b < fresh {
                        (0..book.nu2).collect()
                    } else {
                        vec![0]
                    };
                    let space: Vec<(u64, u64)> = c1
                        .iter()
                        .flat_map(|&a| c2.iter().map(move |&b2| (a, b2)))
                        .collect();
                    let sat: Vec<(u64, u64)> = if space.len() == 1 {
                        Vec::new()
                    } else {
                        space
                            .iter()
                            .copied()
                            .filter(|&(cm1, cm2)| {
                                score_absent.is_typical(
                                    &[
                                        book.v_word(res(&est_m1, b), cm1),
                                        book.x2_word(cm2),
                                        &y,
                                    ],
                                    n,
                                    eps,
                                )
                            })
                            .collect()
                    };
                    let (d1, d2) = pick(&mut rng, &space, &sat);
                    est_m1[b] = d1;
                    est_m2[b] = d2;
                }
                let mut any = false;
                for b in 0..fresh {
                    if est_m1[b] != m1[b] || est_m2[b] != m2[b] {
                        c.per_block[b] += 1;
                        any = true;
                    }
                }
                c.dec += any as u64;
                return c;
            }

            // ---- cribbing link present ----
            let mut enc_m1: Vec<u64> = vec![0; big_b];
            let mut enc_m1p: Vec<u64> = vec![0; big_b];
            let mut ys: Vec<Vec<u8>> = Vec::with_capacity(big_b);
            for b in 0..big_b {
                let x1_b = book.x1_word(res(&m1, b), res(&m1p, b), m1[b], m1p[b]);
                // encoder 2 superimposes its word on its own (possibly wrong)
                // resolution estimates
                let x2pp_b =
                    book.x2pp_word(m2pp[b], res(&enc_m1, b), res(&enc_m1p, b));
                let mut y = vec![0u8; n];
                for i in 0..n {
                    let row = x1_b[i] as usize * x2_size + x2pp_b[i] as usize;
                    y[i] = sample_cdf(&mut rng, &y_cdf[row]);
                }
                ys.push(y);

                // end of block: encoder 2 decodes this block's fresh pair
                // from the cribbed x1
                let space1: Vec<u64> = if b < fresh {
                    (0..book.nu1).collect()
                } else {
                    vec![0]
                };
                let sat1: Vec<u64> = if space1.len() == 1 {
                    Vec::new()
                } else {
                    space1
                        .iter()
                        .copied()
                        .filter(|&cm1| {
                            score_v_x1.is_typical(
                                &[book.v_word(res(&enc_m1, b), cm1), x1_b],
                                n,
                                eps,
                            )
                        })
                        .collect()
                };
                enc_m1[b] = pick(&mut rng, &space1, &sat1);

                let space2: Vec<u64> = if b < fresh {
                    (0..book.nu1p).collect()
                } else {
                    vec![0]
                };
                let sat2: Vec<u64> = if space2.len() == 1 {
                    Vec::new()
                } else {
                    let (r0, r0p) = (res(&enc_m1, b), res(&enc_m1p, b));
                    let base_typical = score_uv_x1.is_typical(
                        &[
                            book.u_word(r0, r0p),
                            book.v_word(r0, enc_m1[b]),
                            x1_b,
                        ],
                        n,
                        eps,
                    );
                    if base_typical {
                        space2
                            .iter()
                            .copied()
                            .filter(|&cm1p| {
                                book.x1_word(r0, r0p, enc_m1[b], cm1p) == x1_b
                            })
                            .collect()
                    } else {
                        Vec::new()
                    }
                };
                enc_m1p[b] = pick(&mut rng, &space2, &sat2);
            }
            let mut crib_err = false;
            for b in 0..fresh {
                if enc_m1[b] != m1[b] || enc_m1p[b] != m1p[b] {
                    crib_err = true;
                }
            }
            c.crib += crib_err as u64;

            // backward decoding: block B−1's fresh slots are known to be 0
            let mut dec_m1: Vec<u64> = vec![0; big_b];
            let mut dec_m1p: Vec<u64> = vec![0; big_b];
            let mut dec_m2pp: Vec<u64> = vec![0; big_b];
            for b in (0..big_b).rev() {
                let res_space: Vec<(u64, u64)> = if b == 0 {
                    vec![(0, 0)]
                } else {
                    (0..book.nu1)
                        .flat_map(|a| (0..book.nu1p).map(move |p| (a, p)))
                        .collect()
                };
                let c2: Vec<u64> = if b < fresh {
                    (0..book.nu2pp).collect()
                } else {
                    vec![0]
                };
                let space: Vec<(u64, u64, u64)> = res_space
                    .iter()
                    .flat_map(|&(a, p)| c2.iter().map(move |&m| (a, p, m)))
                    .collect();
                let sat: Vec<(u64, u64, u64)> = if space.len() == 1 {
                    Vec::new()
                } else {
                    space
                        .iter()
                        .copied()
                        .filter(|&(cm0, cm0p, cm2)| {
                            score_present.is_typical(
                                &[
                                    book.u_word(cm0, cm0p),
                                    book.v_word(cm0, dec_m1[b]),
                                    book.x1_word(cm0, cm0p, dec_m1[b], dec_m1p[b]),
                                    book.x2pp_word(cm2, cm0, cm0p),
                                    &ys[b],
                                ],
                                n,
                                eps,
                            )
                        })
                        .collect()
                };
                let (d0, d0p, d2) = pick(&mut rng, &space, &sat);
                if b > 0 {
                    dec_m1[b - 1] = d0;
                    dec_m1p[b - 1] = d0p;
                }
                dec_m2pp[b] = d2;
            }
            let mut any = false;
            for b in 0..fresh {
                if dec_m1[b] != m1[b] || dec_m1p[b] != m1p[b] || dec_m2pp[b] != m2pp[b] {
                    c.per_block[b] += 1;
                    any = true;
                }
            }
            c.dec += any as u64;
            c
        })
        .reduce(
            || Counts {
                per_block: vec![0; fresh],
                ..Default::default()
            },
            |mut a, b| {
                a.dec += b.dec;
                a.crib += b.crib;
                for (x, y) in a.per_block.iter_mut().zip(&b.per_block) {
                    *x += y;
                }
                a
            },
        );

    let freq = |c: u64| c as f64 / cfg.trials as f64;
    let scale = fresh as f64 / big_b as f64;
    let mut effective_rates = BTreeMap::new();
    effective_rates.insert("R1".into(), rates.r1 * scale);
    effective_rates.insert("R1p".into(), rates.r1p * scale);
    if cfg.link_present {
        effective_rates.insert("R2pp".into(), rates.r2pp * scale);
    } else {
        effective_rates.insert("R2".into(), rates.r2 * scale);
    }
    Ok(SimReport {
        n,
        blocks: big_b,
        trials: cfg.trials,
        link_present: cfg.link_present,
        p_e_hat: (!cfg.link_present).then(|| freq(counts.dec)),
        p_e_prime_hat: cfg.link_present.then(|| freq(counts.dec)),
        encoder2_crib_error: cfg.link_present.then(|| freq(counts.crib)),
        per_block_errors: counts.per_block,
        effective_rates,
    })
}

/// Causal cribbing via Shannon strategies: lift the channel to its derived
/// MAC over `(X1, T)`, convert the causal auxiliary into a product strategy
/// distribution, and run the strictly causal machinery. Decoded strategy
/// indices stand for the `X2''` message stream.
pub fn mac_simulate_causal(
    mac: &MacChannel,
    aux: &MacAuxCausal,
    rates: &MacRates,
    cfg: &SimConfig,
) -> Result<SimReport> {
    let crib = match &aux.crib {
        CribLaw::Inner(k) => k,
        CribLaw::Outer(_) => {
            return Err(SimError::Prob(crate::prob::ProbError::DimensionMismatch(
                "the outer crib form is a bound family, not a coding scheme".into(),
            )))
        }
    };
    let cv = aux.card_v();
    let x1_size = mac.x1_size;
    // marginal P(v) and conditional P(x1|v); never-sampled v rows are filler
    let p_v_raw: Vec<f64> = (0..cv)
        .map(|v| (0..x1_size).map(|x1| aux.p_vx1.probs()[v * x1_size + x1]).sum())
        .collect();
    let p_x1_rows: Vec<Vec<f64>> = (0..cv)
        .map(|v| {
            if p_v_raw[v] > 0.0 {
                (0..x1_size)
                    .map(|x1| aux.p_vx1.probs()[v * x1_size + x1] / p_v_raw[v])
                    .collect()
            } else {
                vec![1.0 / x1_size as f64; x1_size]
            }
        })
        .collect();
    let p_v = ProbVector::new(normalize_exact(p_v_raw))?;
    let p_x1_given_uv = crate::prob::CondKernel::new(p_x1_rows)?;

    if !cfg.link_present {
        // no lifting needed: the absent world runs on the original channel
        let strict = MacAuxStrict {
            p_u: ProbVector::uniform(1),
            p_v,
            p_x1_given_uv,
            p_x2: aux.p_x2.clone(),
            p_x2pp_given_u: crate::prob::CondKernel::new(vec![vec![
                1.0 / mac.x2_size as f64;
                mac.x2_size
            ]])?,
        };
        return mac_simulate_strict(mac, &strict, rates, cfg);
    }

    let derived = shannon_strategy_lift(mac)?;
    let p0 = JointTable::from_fn(
        vec![(axis::V, cv), (axis::X1, x1_size), (axis::X2PP, mac.x2_size)],
        |idx| aux.p_vx1.probs()[idx[0] * x1_size + idx[1]] * crib.get(idx[1], idx[2]),
    )?;
    let p_t = strategy_distribution(&p0)?;
    let strict = MacAuxStrict {
        p_u: ProbVector::uniform(1),
        p_v,
        p_x1_given_uv,
        p_x2: p_t.clone(),
        p_x2pp_given_u: crate::prob::CondKernel::new(vec![p_t.probs().to_vec()])?,
    };
    mac_simulate_strict(&derived, &strict, rates, cfg)
}

/// Rescale so the mass-1 construction gate passes after float accumulation.
fn normalize_exact(mut raw: Vec<f64>) -> Vec<f64> {
    for _ in 0..2 {
        let mass: f64 = raw.iter().sum();
        for p in &mut raw {
            *p /= mass;
        }
    }
    raw
}
