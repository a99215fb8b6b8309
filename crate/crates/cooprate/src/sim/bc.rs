//! Broadcast-channel random-coding simulation: superposition codebook,
//! sequential typicality decoding at the strong user, cloud decoding plus
//! bin disambiguation at the weak user.
//!
//! Per trial the message triple is drawn fresh, pushed through the cascade,
//! and both decoders run. A decode step with a single candidate returns it
//! directly (a one-message set carries no information to test); with more
//! candidates the step requires a unique typical one and declares an error
//! otherwise.

use super::rng::{sample_index, stream, SeededPermutation};
use super::typicality::JointScore;
use super::{cdf_rows, check_total_symbols, codebook_size, sample_cdf, SimConfig};
use super::{Result, SimReport};
use crate::channels::{axis, bc_joint, BcAux, DegradedBC};
use rand::Rng;
use rayon::prelude::*;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BcRates {
    pub r1: f64,
    pub r2: f64,
    pub r2p: f64,
}

/// The materialized superposition codebook: cloud words `u(j)`, satellite
/// words `v(k|j)`, input words `x(l|j,k)`, and the per-cloud bin
/// permutations that assign each `k` to one of `⌈2^{n·C12}⌉` bins with an
/// exactly even split.
pub struct BcCodebook {
    pub n: usize,
    pub nu1: u64,
    pub nu2: u64,
    pub nu2p: u64,
    pub nu12: u64,
    u: Vec<u8>,
    v: Vec<u8>,
    x: Vec<u8>,
    bins: Vec<SeededPermutation>,
}

impl BcCodebook {
    pub fn u_word(&self, j: u64) -> &[u8] {
        let s = j as usize * self.n;
        &self.u[s..s + self.n]
    }

    pub fn v_word(&self, j: u64, k: u64) -> &[u8] {
        let s = (j * self.nu2p + k) as usize * self.n;
        &self.v[s..s + self.n]
    }

    pub fn x_word(&self, j: u64, k: u64, l: u64) -> &[u8] {
        let s = ((j * self.nu2p + k) * self.nu1 + l) as usize * self.n;
        &self.x[s..s + self.n]
    }

    /// Bin index of satellite `k` under cloud `j`, in `0..nu12`.
    pub fn bin_of(&self, j: u64, k: u64) -> u64 {
        self.bins[j as usize].forward(k) % self.nu12
    }

    /// All satellites of cloud `j` assigned to bin `b`.
    pub fn bin_members(&self, j: u64, b: u64) -> Vec<u64> {
        let perm = &self.bins[j as usize];
        let mut v = b;
        let mut members = Vec::new();
        while v < self.nu2p {
            members.push(perm.inverse(v));
            v += self.nu12;
        }
        members.sort_unstable();
        members
    }
}

/// Draw the codebook for a given auxiliary parameterization. Exposed so the
/// bin-occupancy structure can be inspected directly.
pub fn bc_build_codebook(
    bc: &DegradedBC,
    aux: &BcAux,
    rates: &BcRates,
    cfg: &SimConfig,
) -> Result<BcCodebook> {
    let n = cfg.n;
    let nu1 = codebook_size(n, rates.r1)?;
    let nu2 = codebook_size(n, rates.r2)?;
    let nu2p = codebook_size(n, rates.r2p)?;
    let nu12 = codebook_size(n, bc.conf_capacity)?;
    let total = (nu2 + nu2 * nu2p + nu2 * nu2p * nu1) * n as u64;
    check_total_symbols(total)?;

    let (cu, cv) = (aux.card_u, aux.card_v);
    // P(u), P(v|u) from the joint cloud law; rows for never-sampled u are
    // filler
    let p_u: Vec<f64> = (0..cu)
        .map(|u| (0..cv).map(|v| aux.p_uv.probs()[u * cv + v]).sum())
        .collect();
    let p_v_given_u: Vec<Vec<f64>> = (0..cu)
        .map(|u| {
            if p_u[u] > 0.0 {
                (0..cv)
                    .map(|v| aux.p_uv.probs()[u * cv + v] / p_u[u])
                    .collect()
            } else {
                vec![1.0 / cv as f64; cv]
            }
        })
        .collect();

    let mut rng = stream(cfg.seed, "bc.codebook", &[]);
    let mut u = vec![0u8; (nu2 * n as u64) as usize];
    for sym in u.iter_mut() {
        *sym = sample_index(&mut rng, &p_u);
    }
    let mut v = vec![0u8; (nu2 * nu2p * n as u64) as usize];
    for j in 0..nu2 {
        for k in 0..nu2p {
            for i in 0..n {
                let uj = u[(j * n as u64) as usize + i] as usize;
                v[((j * nu2p + k) * n as u64) as usize + i] =
                    sample_index(&mut rng, &p_v_given_u[uj]);
            }
        }
    }
    let mut x = vec![0u8; (nu2 * nu2p * nu1 * n as u64) as usize];
    for j in 0..nu2 {
        for k in 0..nu2p {
            for l in 0..nu1 {
                for i in 0..n {
                    let uj = u[(j * n as u64) as usize + i] as usize;
                    let vk = v[((j * nu2p + k) * n as u64) as usize + i] as usize;
                    let row = aux.p_x_given_uv.row(uj * cv + vk);
                    x[(((j * nu2p + k) * nu1 + l) * n as u64) as usize + i] =
                        sample_index(&mut rng, row);
                }
            }
        }
    }
    // each cloud gets its own seeded even-split permutation
    let bins = (0..nu2)
        .map(|j| SeededPermutation::new(nu2p, super::rng::derive_key(cfg.seed, "bc.bins", &[j])))
        .collect();
    Ok(BcCodebook {
        n,
        nu1,
        nu2,
        nu2p,
        nu12,
        u,
        v,
        x,
        bins,
    })
}

/// Unique-candidate typicality decode: a single candidate is returned
/// outright; otherwise exactly one candidate may pass the test.
fn decode_unique(count: u64, mut passes: impl FnMut(u64) -> bool) -> Option<u64> {
    if count == 1 {
        return Some(0);
    }
    let mut found = None;
    for cand in 0..count {
        if passes(cand) {
            if found.is_some() {
                return None;
            }
            found = Some(cand);
        }
    }
    found
}

pub fn bc_simulate(
    bc: &DegradedBC,
    aux: &BcAux,
    rates: &BcRates,
    cfg: &SimConfig,
) -> Result<SimReport> {
    cfg.validate()?;
    let book = bc_build_codebook(bc, aux, rates, cfg)?;
    let joint = bc_joint(bc, aux)?;
    let eps = cfg.typicality_eps;
    let n = cfg.n;

    let score_u_y1 = JointScore::new(&joint, &[axis::U, axis::Y1])?;
    let score_uv_y1 = JointScore::new(&joint, &[axis::U, axis::V, axis::Y1])?;
    let score_uvx_y1 = JointScore::new(&joint, &[axis::U, axis::V, axis::X, axis::Y1])?;
    let score_u_y2 = JointScore::new(&joint, &[axis::U, axis::Y2])?;
    let score_uv_y2 = JointScore::new(&joint, &[axis::U, axis::V, axis::Y2])?;

    let y1_cdf = cdf_rows(&bc.p_y1_given_x);
    let y2_cdf = cdf_rows(&bc.p_y2_given_y1);

    struct Counts {
        pe: u64,
        pe_prime: u64,
    }

    let counts = (0..cfg.trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = stream(cfg.seed, "bc.trial", &[t]);
            let j = rng.gen_range(0..book.nu2);
            let k = rng.gen_range(0..book.nu2p);
            let l = rng.gen_range(0..book.nu1);

            let x = book.x_word(j, k, l);
            let mut y1 = vec![0u8; n];
            let mut y2 = vec![0u8; n];
            for i in 0..n {
                y1[i] = sample_cdf(&mut rng, &y1_cdf[x[i] as usize]);
                y2[i] = sample_cdf(&mut rng, &y2_cdf[y1[i] as usize]);
            }

            // Decoder 1: sequential cloud → satellite → input decoding
            let jhh = decode_unique(book.nu2, |cand| {
                score_u_y1.is_typical(&[book.u_word(cand), &y1], n, eps)
            });
            let khh = jhh.and_then(|jh| {
                decode_unique(book.nu2p, |cand| {
                    score_uv_y1.is_typical(&[book.u_word(jh), book.v_word(jh, cand), &y1], n, eps)
                })
            });
            let lhh = match (jhh, khh) {
                (Some(jh), Some(kh)) => decode_unique(book.nu1, |cand| {
                    score_uvx_y1.is_typical(
                        &[
                            book.u_word(jh),
                            book.v_word(jh, kh),
                            book.x_word(jh, kh, cand),
                            &y1,
                        ],
                        n,
                        eps,
                    )
                }),
                _ => None,
            };

            // Decoder 2: cloud decoding from the degraded output
            let jh = decode_unique(book.nu2, |cand| {
                score_u_y2.is_typical(&[book.u_word(cand), &y2], n, eps)
            });

            let pe_event = lhh != Some(l) || jh != Some(j);

            let mut pe_prime_event = pe_event;
            if cfg.link_present {
                // Decoder 1 ships the bin index of its satellite estimate over
                // the error-free conference link; Decoder 2 searches the bin.
                let bin = match (jhh, khh) {
                    (Some(jh1), Some(kh1)) => book.bin_of(jh1, kh1),
                    _ => 0, // decoder 1 already errored; the trial is counted
                };
                let kh = jh.and_then(|jh2| {
                    let members = book.bin_members(jh2, bin);
                    if members.len() == 1 {
                        Some(members[0])
                    } else {
                        let mut found = None;
                        for &cand in &members {
                            if score_uv_y2.is_typical(
                                &[book.u_word(jh2), book.v_word(jh2, cand), &y2],
                                n,
                                eps,
                            ) {
                                if found.is_some() {
                                    return None;
                                }
                                found = Some(cand);
                            }
                        }
                        found
                    }
                });
                pe_prime_event = pe_event || kh != Some(k);
            }

            Counts {
                pe: pe_event as u64,
                pe_prime: pe_prime_event as u64,
            }
        })
        .reduce(
            || Counts { pe: 0, pe_prime: 0 },
            |a, b| Counts {
                pe: a.pe + b.pe,
                pe_prime: a.pe_prime + b.pe_prime,
            },
        );

    let freq = |c: u64| c as f64 / cfg.trials as f64;
    let mut effective_rates = BTreeMap::new();
    effective_rates.insert("R1".into(), rates.r1);
    effective_rates.insert("R2".into(), rates.r2);
    effective_rates.insert("R2p".into(), rates.r2p);
    Ok(SimReport {
        n,
        blocks: 1,
        trials: cfg.trials,
        link_present: cfg.link_present,
        p_e_hat: Some(freq(counts.pe)),
        p_e_prime_hat: cfg.link_present.then(|| freq(counts.pe_prime)),
        encoder2_crib_error: None,
        per_block_errors: vec![if cfg.link_present {
            counts.pe_prime
        } else {
            counts.pe
        }],
        effective_rates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::example1_bc;
    use crate::prob::ProbVector;
    use crate::sim::SimError;

    fn zero_rates() -> BcRates {
        BcRates {
            r1: 0.0,
            r2: 0.0,
            r2p: 0.0,
        }
    }

    #[test]
    fn zero_rate_runs_have_exactly_zero_errors() {
        let bc = example1_bc(0.3, 0.5).unwrap();
        let aux = BcAux::constant(&ProbVector::uniform(2));
        let cfg = SimConfig {
            n: 8,
            blocks: 1,
            typicality_eps: 0.1,
            trials: 500,
            seed: 9,
            link_present: true,
        };
        let report = bc_simulate(&bc, &aux, &zero_rates(), &cfg).unwrap();
        assert_eq!(report.p_e_hat, Some(0.0));
        assert_eq!(report.p_e_prime_hat, Some(0.0));
    }

    #[test]
    fn memory_guard_trips() {
        let bc = example1_bc(0.1, 0.0).unwrap();
        let aux = BcAux::constant(&ProbVector::uniform(2));
        let cfg = SimConfig {
            n: 16,
            blocks: 1,
            typicality_eps: 0.1,
            trials: 1,
            seed: 0,
            link_present: false,
        };
        let rates = BcRates {
            r1: 2.0,
            r2: 0.0,
            r2p: 0.0,
        };
        assert!(matches!(
            bc_simulate(&bc, &aux, &rates, &cfg),
            Err(SimError::MemoryGuard(_))
        ));
    }

    #[test]
    fn bin_occupancy_is_even() {
        // R2' = 1 bit on n = 12 gives 4096 satellites over 2^3 = 8 bins
        let bc = example1_bc(0.1, 0.25).unwrap();
        let aux = BcAux::constant(&ProbVector::uniform(2));
        let cfg = SimConfig {
            n: 12,
            blocks: 1,
            typicality_eps: 0.1,
            trials: 1,
            seed: 4,
            link_present: true,
        };
        let rates = BcRates {
            r1: 0.0,
            r2: 0.0,
            r2p: 1.0,
        };
        let book = bc_build_codebook(&bc, &aux, &rates, &cfg).unwrap();
        assert_eq!(book.nu2p, 4096);
        assert_eq!(book.nu12, 8);
        for j in 0..book.nu2 {
            let mut occupancy = vec![0u64; book.nu12 as usize];
            for k in 0..book.nu2p {
                occupancy[book.bin_of(j, k) as usize] += 1;
            }
            let lo = *occupancy.iter().min().unwrap();
            let hi = *occupancy.iter().max().unwrap();
            assert!(hi - lo <= 1);
            // enumeration agrees with assignment
            let members = book.bin_members(j, 3);
            assert_eq!(members.len() as u64, occupancy[3]);
            for &k in &members {
                assert_eq!(book.bin_of(j, k), 3);
            }
        }
    }

    #[test]
    fn overloaded_rate_fails_hard() {
        // R1 = 2 bits/use on a binary-input channel: decoding must collapse
        let bc = example1_bc(0.0, 0.0).unwrap();
        let aux = BcAux::constant(&ProbVector::uniform(2));
        let cfg = SimConfig {
            n: 8,
            blocks: 1,
            typicality_eps: 0.1,
            trials: 400,
            seed: 21,
            link_present: false,
        };
        let rates = BcRates {
            r1: 2.0,
            r2: 0.0,
            r2p: 0.0,
        };
        let report = bc_simulate(&bc, &aux, &rates, &cfg).unwrap();
        assert!(report.p_e_hat.unwrap() > 0.5);
    }

    #[test]
    fn bin_search_engages_when_satellite_rate_exceeds_link() {
        // R2' − C12 = 0.4 < I(V;Y2|U) ≈ 0.53, so the in-bin search has
        // several candidates per bin yet can still disambiguate
        let bc = example1_bc(0.1, 0.1).unwrap();
        let p_uv = JointTable::new(
            vec![(crate::channels::axis::U, 1), (crate::channels::axis::V, 2)],
            vec![0.5, 0.5],
        )
        .unwrap();
        let aux = BcAux::new(p_uv, crate::prob::CondKernel::identity(2)).unwrap();
        let cfg = SimConfig {
            n: 12,
            blocks: 1,
            typicality_eps: 0.2,
            trials: 400,
            seed: 5,
            link_present: true,
        };
        let rates = BcRates {
            r1: 0.0,
            r2: 0.0,
            r2p: 0.5,
        };
        let book = bc_build_codebook(&bc, &aux, &rates, &cfg).unwrap();
        assert!(book.nu2p / book.nu12 >= 2, "bins must hold several words");
        let report = bc_simulate(&bc, &aux, &rates, &cfg).unwrap();
        // the cloud and input layers are singletons; the only p_e failures
        // are rare satellite collisions at decoder 1
        let pe = report.p_e_hat.unwrap();
        let pep = report.p_e_prime_hat.unwrap();
        assert!(pe < 0.1, "cloud/input decode should be near-exact, got {pe}");
        assert!(pep >= pe);
        assert!(pep < 0.9, "in-bin decoding should mostly succeed, got {pep}");
    }

    use crate::prob::JointTable;

    #[test]
    fn determinism_same_seed_same_report() {
        let bc = example1_bc(0.1, 0.5).unwrap();
        let aux = BcAux::constant(&ProbVector::uniform(2));
        let cfg = SimConfig {
            n: 8,
            blocks: 1,
            typicality_eps: 0.1,
            trials: 300,
            seed: 33,
            link_present: true,
        };
        let rates = BcRates {
            r1: 0.25,
            r2: 0.0,
            r2p: 0.25,
        };
        let a = bc_simulate(&bc, &aux, &rates, &cfg).unwrap();
        let b = bc_simulate(&bc, &aux, &rates, &cfg).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }
}
