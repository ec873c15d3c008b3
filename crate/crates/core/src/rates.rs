//! Asymptotic rates: binary entropy, the critical-point solver behind β_i and
//! γ_(i,j), the λ-ADD GV rate, OR/XOR rate bounds, finite-length XOR and ADD
//! size bounds, literature constants, and the comparison curves.
//!
//! Every kernel has the form `H(z,u) = 1 − z·P(u)`. Eliminating z reduces the
//! critical-point system to `g(u) = u·P′(u)/P(u) = bδ`, where g is the mean
//! exponent under weights `c_e·u^e` and hence strictly increasing in `ln u`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::construct::binomial;
use crate::counting::{edge_polynomial, EdgePolynomial, TupleKind};
use crate::error::{Error, Result};
use crate::linalg::catalog_inner_code;
use crate::measure::Lambda;

/// Target for `|g(u*) − bδ|`.
pub const SOLVER_TOLERANCE: f64 = 1e-12;

/// Grid step of the OR-rate maximization.
pub const OR_GRID_STEP: f64 = 1e-4;

/// Binary entropy in bits, with `H(0) = H(1) = 0`.
pub fn entropy(p: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::OutOfRange(format!(
            "entropy argument {p} not in [0,1]"
        )));
    }
    Ok(entropy_unchecked(p))
}

fn entropy_unchecked(p: f64) -> f64 {
    if p <= 0.0 || p >= 1.0 {
        return 0.0;
    }
    -p * p.log2() - (1.0 - p) * (1.0 - p).log2()
}

/// A positive solution of `H = 0`, `u∂_uH = bδ·z∂_zH` and the growth rate it
/// determines. At δ = 0 the point sits on the boundary `u* = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalPoint {
    pub z_star: f64,
    pub u_star: f64,
    pub rate: f64,
    /// `|H(z*,u*)|`.
    pub residual_kernel: f64,
    /// `|u∂_uH − bδ·z∂_zH|` at the returned point.
    pub residual_direction: f64,
}

fn check_delta(delta: f64) -> Result<()> {
    if !(0.0..=0.5).contains(&delta) {
        return Err(Error::OutOfRange(format!("delta {delta} not in [0, 1/2]")));
    }
    Ok(())
}

/// `(ln P(e^x), g(e^x))` computed with log-sum-exp so extreme x stay finite.
fn log_p_and_mean(terms: &[(u64, u32)], x: f64) -> (f64, f64) {
    let logs: Vec<f64> = terms
        .iter()
        .map(|&(c, e)| (c as f64).ln() + e as f64 * x)
        .collect();
    let top = logs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let weights: Vec<f64> = logs.iter().map(|l| (l - top).exp()).collect();
    let total: f64 = weights.iter().sum();
    let mean = terms
        .iter()
        .zip(&weights)
        .map(|(&(_, e), w)| e as f64 * w)
        .sum::<f64>()
        / total;
    (top + total.ln(), mean)
}

/// Solves `g(u) = target` for a polynomial with positive coefficients.
pub fn solve_critical_point(terms: &[(u64, u32)], target: f64) -> Result<CriticalPoint> {
    let min_exp = terms.iter().map(|t| t.1).min().unwrap_or(0) as f64;
    let max_exp = terms.iter().map(|t| t.1).max().unwrap_or(0) as f64;
    if terms.is_empty() || target < min_exp || target >= max_exp {
        return Err(Error::Solver(format!(
            "direction {target} outside [{min_exp}, {max_exp}) of the kernel exponents"
        )));
    }
    if target == min_exp {
        // Boundary limit u* → 0: only the lowest-exponent term survives, and
        // bδ·log u* cancels the vanishing powers exactly.
        let c0 = terms.iter().find(|t| t.1 as f64 == min_exp).unwrap().0 as f64;
        return Ok(CriticalPoint {
            z_star: 1.0 / c0,
            u_star: 0.0,
            rate: c0.log2(),
            residual_kernel: 0.0,
            residual_direction: 0.0,
        });
    }
    let g = |x: f64| log_p_and_mean(terms, x).1;
    let (mut lo, mut hi) = (-1.0f64, 1.0f64);
    while g(lo) >= target {
        lo *= 2.0;
        if lo < -1e6 {
            return Err(Error::Solver(
                "failed to bracket the critical point below".into(),
            ));
        }
    }
    while g(hi) <= target {
        hi *= 2.0;
        if hi > 1e6 {
            return Err(Error::Solver(
                "failed to bracket the critical point above".into(),
            ));
        }
    }
    let mut x = 0.5 * (lo + hi);
    for _ in 0..2000 {
        x = 0.5 * (lo + hi);
        let gx = g(x);
        if (gx - target).abs() <= SOLVER_TOLERANCE || x == lo || x == hi {
            break;
        }
        if gx < target {
            lo = x;
        } else {
            hi = x;
        }
    }
    let (log_p, mean) = log_p_and_mean(terms, x);
    let direction = (mean - target).abs();
    if direction > 1e-10 {
        return Err(Error::Solver(format!(
            "residual {direction} above tolerance"
        )));
    }
    let u_star = x.exp();
    let z_star = (-log_p).exp();
    let p = terms
        .iter()
        .map(|&(c, e)| c as f64 * u_star.powi(e as i32))
        .sum::<f64>();
    Ok(CriticalPoint {
        z_star,
        u_star,
        rate: (log_p - target * x) / std::f64::consts::LN_2,
        residual_kernel: (1.0 - z_star * p).abs(),
        residual_direction: direction,
    })
}

/// Pair kernel `P_2(u) = 2 + 2u^b`; [`beta`] solves it in closed form.
#[cfg(test)]
fn pair_terms(lam: Lambda) -> Vec<(u64, u32)> {
    vec![(2, 0), (2, lam.denom() as u32)]
}

/// β_i: the growth rate of the number of i-tuples at distance below δn.
/// β_2 is returned in the closed form `1 + H(δ)`.
pub fn beta(lam: Lambda, delta: f64, i: usize) -> Result<CriticalPoint> {
    check_delta(delta)?;
    let b = lam.denom() as f64;
    match i {
        2 => {
            let (u_star, z_star) = if delta == 0.0 {
                (0.0, 0.5)
            } else {
                ((delta / (1.0 - delta)).powf(1.0 / b), (1.0 - delta) / 2.0)
            };
            let p = 2.0 + 2.0 * u_star.powf(b);
            let mean = if p > 0.0 {
                2.0 * b * u_star.powf(b) / p
            } else {
                0.0
            };
            Ok(CriticalPoint {
                z_star,
                u_star,
                rate: 1.0 + entropy_unchecked(delta),
                residual_kernel: (1.0 - z_star * p).abs(),
                residual_direction: (mean - b * delta).abs(),
            })
        }
        3 | 4 => {
            let poly = edge_polynomial(lam, i, TupleKind::N)?;
            solve_critical_point(&poly.terms, b * delta)
        }
        _ => Err(Error::OutOfRange(format!(
            "beta index {i} not in {{2,3,4}}"
        ))),
    }
}

/// The kernel behind γ_(i,j): j = 1 forces the first two words of the tuple
/// to coincide, j = 2 the first and third.
pub fn gamma_polynomial(lam: Lambda, i: usize, j: usize) -> Result<EdgePolynomial> {
    let kind = match j {
        1 => TupleKind::B,
        2 => TupleKind::C,
        _ => return Err(Error::OutOfRange(format!("gamma index ({i},{j})"))),
    };
    if !(3..=4).contains(&i) {
        return Err(Error::OutOfRange(format!("gamma index ({i},{j})")));
    }
    edge_polynomial(lam, i, kind)
}

pub fn gamma(lam: Lambda, delta: f64, i: usize, j: usize) -> Result<CriticalPoint> {
    check_delta(delta)?;
    let poly = gamma_polynomial(lam, i, j)?;
    solve_critical_point(&poly.terms, lam.denom() as f64 * delta)
}

pub const GAMMA_INDICES: [(usize, usize); 4] = [(3, 1), (3, 2), (4, 1), (4, 2)];

#[derive(Debug, Clone, PartialEq)]
pub struct RateBoundReport {
    pub lam: Lambda,
    pub delta: f64,
    /// β_2, β_3, β_4.
    pub beta: [f64; 3],
    /// γ in the order of [`GAMMA_INDICES`].
    pub gamma: [f64; 4],
    /// Every β_i exceeds the γ_(i,j) sharing its i.
    pub valid: bool,
    /// `max(0, min_i (i − β_i)/(i − 1))`.
    pub bound: f64,
}

impl fmt::Display for RateBoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "lambda: {}", self.lam)?;
        writeln!(f, "delta: {:.6}", self.delta)?;
        for (i, b) in self.beta.iter().enumerate() {
            writeln!(f, "beta_{}: {:.6}", i + 2, b)?;
        }
        for ((i, j), g) in GAMMA_INDICES.iter().zip(&self.gamma) {
            writeln!(f, "gamma_({i},{j}): {g:.6}")?;
        }
        writeln!(f, "valid={}", self.valid)?;
        write!(f, "bound: {:.6}", self.bound)
    }
}

pub fn gv_rate_lambda(lam: Lambda, delta: f64) -> Result<RateBoundReport> {
    check_delta(delta)?;
    let mut beta_v = [0.0; 3];
    for i in 2..=4 {
        beta_v[i - 2] = beta(lam, delta, i)?.rate;
    }
    let mut gamma_v = [0.0; 4];
    for (k, &(i, j)) in GAMMA_INDICES.iter().enumerate() {
        gamma_v[k] = gamma(lam, delta, i, j)?.rate;
    }
    let valid = GAMMA_INDICES
        .iter()
        .zip(&gamma_v)
        .all(|(&(i, _), &g)| beta_v[i - 2] > g);
    let bound = (2..=4)
        .map(|i| (i as f64 - beta_v[i - 2]) / (i as f64 - 1.0))
        .fold(f64::INFINITY, f64::min)
        .max(0.0);
    Ok(RateBoundReport {
        lam,
        delta,
        beta: beta_v,
        gamma: gamma_v,
        valid,
        bound,
    })
}

fn or_objective(kappa: f64, delta: f64, s: f64) -> f64 {
    let first = entropy_unchecked(((kappa - delta) / s).clamp(0.0, 1.0));
    if kappa <= 0.0 {
        return first;
    }
    first - 2.0 * kappa * entropy_unchecked(((kappa - delta) / (kappa * s)).clamp(0.0, 1.0))
}

/// OR rate from packings: `max_{κ ∈ [δ, s+δ]} H((κ−δ)/s) − 2κ·H((κ−δ)/(κs))`,
/// found on a grid and refined by golden-section search; never negative.
pub fn or_rate(delta: f64, s: usize) -> Result<f64> {
    if delta.is_nan() || delta < 0.0 || s < 2 {
        return Err(Error::OutOfRange(format!(
            "or_rate needs delta >= 0 and s >= 2, got ({delta}, {s})"
        )));
    }
    let sf = s as f64;
    let steps = (sf / OR_GRID_STEP).round() as usize;
    let (mut best_k, mut best) = (delta, or_objective(delta, delta, sf));
    for step in 1..=steps {
        let k = delta + step as f64 * OR_GRID_STEP;
        let v = or_objective(k, delta, sf);
        if v > best {
            best = v;
            best_k = k;
        }
    }
    let (mut lo, mut hi) = (
        (best_k - OR_GRID_STEP).max(delta),
        (best_k + OR_GRID_STEP).min(delta + sf),
    );
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    for _ in 0..100 {
        let m1 = hi - ratio * (hi - lo);
        let m2 = lo + ratio * (hi - lo);
        if or_objective(m1, delta, sf) < or_objective(m2, delta, sf) {
            lo = m1;
        } else {
            hi = m2;
        }
    }
    best = best.max(or_objective(0.5 * (lo + hi), delta, sf));
    Ok(best.max(0.0))
}

/// XOR rate from the linear GV bound, `(1/s)·max(0, 1 − H(δ))`, taken as 0
/// for δ ≥ 1/2 where that bound no longer applies.
pub fn xor_rate(delta: f64, s: usize) -> Result<f64> {
    if delta.is_nan() || delta < 0.0 || s == 0 {
        return Err(Error::OutOfRange(format!(
            "xor_rate needs delta >= 0 and s >= 1, got ({delta}, {s})"
        )));
    }
    if delta >= 0.5 {
        return Ok(0.0);
    }
    Ok((1.0 - entropy_unchecked(delta)).max(0.0) / s as f64)
}

fn check_nd(n: usize, d: usize) -> Result<()> {
    if d == 0 || d > n {
        return Err(Error::OutOfRange(format!(
            "need 1 <= d <= n, got n={n}, d={d}"
        )));
    }
    Ok(())
}

fn factorial(s: usize) -> BigUint {
    (1..=s).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Finite-length XOR sandwich: `⌊(2^k)^{1/s}⌋ − 1` from the best catalog
/// `[n,k,≥d]` code, and `⌊(s!·A)^{1/s}⌋ + s − 1` with A from the Hamming
/// bound.
pub fn xor_size_bounds(n: usize, d: usize, s: usize) -> Result<(BigUint, BigUint)> {
    check_nd(n, d)?;
    if s == 0 {
        return Err(Error::OutOfRange("s must be positive".into()));
    }
    let lower = match catalog_inner_code(n, d) {
        Ok((_, code)) => (BigUint::one() << code.k).nth_root(s as u32) - 1u32,
        Err(Error::UnsupportedCatalog { .. }) => BigUint::one(),
        Err(e) => return Err(e),
    };
    let t = (d - 1) / 2;
    let volume: BigUint = (0..=t).map(|i| binomial(n, i)).sum();
    let a_upper = (BigUint::one() << n) / volume;
    let upper = (factorial(s) * a_upper).nth_root(s as u32) + BigUint::from(s - 1);
    Ok((lower, upper))
}

/// Number of points of `{0,1,2}^n` within ℓ1 distance t of the all-zero
/// word (the smallest radius-t ball), from the coefficients of `(1+x+x²)^n`.
pub fn ternary_ball_volume(n: usize, t: usize) -> BigUint {
    let mut row = vec![BigUint::zero(); t + 1];
    row[0] = BigUint::one();
    for _ in 0..n {
        let mut next = vec![BigUint::zero(); t + 1];
        for j in 0..=t {
            for shift in 0..=2.min(j) {
                next[j] += &row[j - shift];
            }
        }
        row = next;
    }
    row.into_iter().sum()
}

/// `⌊√(2·A_3)⌋` with `A_3 ≤ ⌊3^n / V⌋` by sphere packing.
pub fn add_upper(n: usize, d: usize) -> Result<BigUint> {
    check_nd(n, d)?;
    let volume = ternary_ball_volume(n, (d - 1) / 2);
    let a3 = BigUint::from(3u32).pow(n as u32) / volume;
    Ok((a3 * 2u32).sqrt())
}

/// Literature constants for s = 2..=6: `(s, L, U)` rows.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceConstants {
    pub or: [(usize, f64, f64); 5],
    pub add: [(usize, f64, f64); 5],
}

pub fn reference_constants() -> ReferenceConstants {
    ReferenceConstants {
        or: [
            (2, 0.302, 0.500),
            (3, 0.142, 0.333),
            (4, 0.082, 0.250),
            (5, 0.053, 0.200),
            (6, 0.037, 0.167),
        ],
        add: [
            (2, 0.500, 0.600),
            (3, 0.336, 0.562),
            (4, 0.267, 0.450),
            (5, 0.225, 0.419),
            (6, 0.195, 0.364),
        ],
    }
}

/// One row of the comparison curves.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveRow {
    pub delta: f64,
    pub gv_lambda: f64,
    pub gv_valid: bool,
    pub add_indirect: f64,
    /// `None` when the rescaled argument exceeds 1/2 and the column is 0.
    pub add_valid: Option<bool>,
    pub xor_indirect: f64,
    pub or_indirect: f64,
}

impl CurveRow {
    /// Both GV evaluations that fed the row satisfied their validity check.
    pub fn valid(&self) -> bool {
        self.gv_valid && self.add_valid.unwrap_or(true)
    }
}

/// Direct GV rate for λ next to bounds inherited from ADD and XOR codes at
/// the rescaled distance `δ·b/(a−b)`, and the OR rate at δ.
pub fn curves(lam: Lambda, grid: &[f64]) -> Result<Vec<CurveRow>> {
    let scale = lam.denom() as f64 / (lam.numer() - lam.denom()) as f64;
    grid.iter()
        .map(|&delta| {
            let direct = gv_rate_lambda(lam, delta)?;
            let scaled = delta * scale;
            let (add_indirect, add_valid) = if scaled <= 0.5 {
                let r = gv_rate_lambda(Lambda::TWO, scaled)?;
                (r.bound, Some(r.valid))
            } else {
                (0.0, None)
            };
            Ok(CurveRow {
                delta,
                gv_lambda: direct.bound,
                gv_valid: direct.valid,
                add_indirect,
                add_valid,
                xor_indirect: xor_rate(scaled, 2)?,
                or_indirect: or_rate(delta, 2)?,
            })
        })
        .collect()
}

pub const CURVES_HEADER: &str = "delta,gv_lambda,add_indirect,xor_indirect,or_indirect,valid";

pub fn curves_to_csv(rows: &[CurveRow]) -> String {
    let mut out = format!("{CURVES_HEADER}\n");
    for r in rows {
        out.push_str(&format!(
            "{:.6},{:.6},{:.6},{:.6},{:.6},{}\n",
            r.delta,
            r.gv_lambda,
            r.add_indirect,
            r.xor_indirect,
            r.or_indirect,
            r.valid()
        ));
    }
    out
}

/// Evenly spaced grid `start, start+step, …` up to `end` inclusive.
pub fn delta_grid(start: f64, end: f64, step: f64) -> Result<Vec<f64>> {
    if step.is_nan() || step <= 0.0 || start < 0.0 || end > 0.5 || start > end {
        return Err(Error::OutOfRange(format!(
            "grid [{start}, {end}] step {step}"
        )));
    }
    let count = ((end - start) / step + 1e-9).floor() as usize;
    Ok((0..=count).map(|k| start + k as f64 * step).collect())
}

/// `log₂(x)` of a big integer, accurate far beyond f64 range.
pub fn log2_big(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    let shift = bits.saturating_sub(64);
    let top = (x >> shift).to_f64().unwrap_or(f64::MAX);
    top.log2() + shift as f64
}
