//! Minimum-distance decoding of noisy subset measurements, and a seeded
//! simulator for the ℓ1-bounded noise model.
//!
//! Decoding ranges over the nonempty subsets of size at most s, the same
//! family the code distance is taken over, so a code of scaled distance D
//! decodes correctly whenever `2‖e‖₁ < D`.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::construct::binomial;
use crate::error::{Error, Result};
use crate::measure::{l1_scaled, Lambda, Measurement, MeasurementKind};
use crate::metric::{check_arity, subset_measurements, Code};

/// A noisy measurement at the scale of the measurement kind, with the noise
/// budget (same scale) it was drawn under.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Observation {
    pub entries: Vec<i64>,
    pub scale: i64,
    pub budget: u64,
}

impl Observation {
    pub fn exact(m: &Measurement) -> Self {
        Observation {
            entries: m.entries.clone(),
            scale: m.scale,
            budget: 0,
        }
    }

    pub fn with_noise(m: &Measurement, noise: &[i64]) -> Result<Self> {
        if noise.len() != m.len() {
            return Err(Error::LengthMismatch {
                expected: m.len(),
                found: noise.len(),
            });
        }
        Ok(Observation {
            entries: m.entries.iter().zip(noise).map(|(x, e)| x + e).collect(),
            scale: m.scale,
            budget: noise.iter().map(|e| e.unsigned_abs()).sum(),
        })
    }

    fn as_measurement(&self) -> Measurement {
        Measurement::new(self.entries.clone(), self.scale)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeResult {
    /// Indices into the code, ascending.
    pub subset: Vec<usize>,
    pub residual: u64,
    /// Another subset attains the same residual.
    pub ambiguous: bool,
}

/// The subset whose measurement is ℓ1-closest to the observation; ties go to
/// the first subset in size-then-lexicographic order.
pub fn decode(
    code: &Code,
    s: usize,
    kind: MeasurementKind,
    obs: &Observation,
) -> Result<DecodeResult> {
    check_arity(s, kind)?;
    if obs.entries.len() != code.length() {
        return Err(Error::LengthMismatch {
            expected: code.length(),
            found: obs.entries.len(),
        });
    }
    if code.is_empty() {
        return Err(Error::EmptyCode);
    }
    decode_among(&subset_measurements(code, s, kind)?, &obs.as_measurement())
}

fn decode_among(
    candidates: &[(Vec<usize>, Measurement)],
    target: &Measurement,
) -> Result<DecodeResult> {
    let mut best: Option<(usize, u64)> = None;
    let mut ambiguous = false;
    for (k, (_, m)) in candidates.iter().enumerate() {
        let r = l1_scaled(m, target)?;
        match best {
            Some((_, b)) if r > b => {}
            Some((_, b)) if r == b => ambiguous = true,
            _ => {
                best = Some((k, r));
                ambiguous = false;
            }
        }
    }
    let (k, residual) = best.ok_or(Error::EmptyCode)?;
    Ok(DecodeResult {
        subset: candidates[k].0.clone(),
        residual,
        ambiguous,
    })
}

/// Every integer vector of length n with ℓ1 norm at most r, in a fixed order.
pub fn l1_ball_vectors(n: usize, r: u64) -> Vec<Vec<i64>> {
    fn extend(prefix: &mut Vec<i64>, n: usize, left: i64, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in -left..=left {
            prefix.push(v);
            extend(prefix, n, left - v.abs(), out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(n), n, r as i64, &mut out);
    out
}

/// Uniform draw from the integer vectors with `‖e‖₁ ≤ r`.
///
/// There are `C(n,i)·C(r,i)·2^i` such vectors with support size i: choose
/// the support, the magnitudes as gaps between i sorted values of `1..=r`
/// (stars and bars), and the signs. The support size is drawn with those
/// weights and the rest uniformly.
pub fn sample_l1_noise<R: Rng>(rng: &mut R, n: usize, r: u64) -> Vec<i64> {
    let r_usize = r as usize;
    let top = n.min(r_usize);
    let weights: Vec<BigUint> = (0..=top)
        .map(|i| (binomial(n, i) * binomial(r_usize, i)) << i)
        .collect();
    let total: BigUint = weights.iter().sum();
    let total_f = total.to_f64().unwrap_or(f64::MAX);
    let mut pick = rng.gen::<f64>() * total_f;
    let mut size = top;
    for (i, w) in weights.iter().enumerate() {
        let w = w.to_f64().unwrap_or(f64::MAX);
        if pick < w {
            size = i;
            break;
        }
        pick -= w;
    }
    let mut noise = vec![0i64; n];
    if size == 0 {
        return noise;
    }
    let mut support = sample(rng, n, size).into_vec();
    support.sort_unstable();
    let mut cuts: Vec<usize> = sample(rng, r_usize, size)
        .into_iter()
        .map(|c| c + 1)
        .collect();
    cuts.sort_unstable();
    let mut prev = 0;
    for (pos, cut) in support.into_iter().zip(cuts) {
        let magnitude = (cut - prev) as i64;
        prev = cut;
        noise[pos] = if rng.gen::<bool>() {
            magnitude
        } else {
            -magnitude
        };
    }
    noise
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SimStats {
    pub trials: u64,
    pub successes: u64,
    pub failures: u64,
    /// Largest residual of a decoded subset over all trials.
    pub max_residual: u64,
}

/// Runs `trials` rounds of: draw a uniform nonempty subset of size at most
/// 2, add uniform noise of ℓ1 mass at most `noise_budget` (at scale b), and
/// decode. Trial t uses stream t of a generator seeded by `seed`.
pub fn simulate(
    code: &Code,
    lam: Lambda,
    noise_budget: u64,
    trials: u64,
    seed: u64,
) -> Result<SimStats> {
    if code.is_empty() {
        return Err(Error::EmptyCode);
    }
    let kind = MeasurementKind::LambdaAdd(lam);
    let candidates = subset_measurements(code, 2, kind)?;
    let mut stats = SimStats {
        trials,
        ..SimStats::default()
    };
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        let planted = rng.gen_range(0..candidates.len());
        let noise = sample_l1_noise(&mut rng, code.length(), noise_budget);
        let obs = Observation::with_noise(&candidates[planted].1, &noise)?;
        let result = decode_among(&candidates, &obs.as_measurement())?;
        stats.max_residual = stats.max_residual.max(result.residual);
        if result.subset == candidates[planted].0 {
            stats.successes += 1;
        } else {
            stats.failures += 1;
        }
    }
    Ok(stats)
}
