//! The conflict hypergraph on `{0,1}^n`: a set of words is an edge when its
//! members cannot all sit in a code of λ-ADD distance at least d.
//!
//! The `Paper` family has three edge rules: pairs at distance below d, triples
//! where some `a ⊞ b` is within d of the remaining word, and quadruples where
//! some pairing `a ⊞ b`, `c ⊞ d` is within d. Those rules only compare
//! disjoint subsets. `Extended` adds the overlapping comparisons (`{a,b}`
//! against `{a}`, and `{a,c}` against `{b,c}`), which makes independence
//! equivalent to `dist ≥ d`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::measure::{l1_scaled, measure, Lambda, Measurement, MeasurementKind, Word};
use crate::metric::{check_arity, subsets_up_to, Code};

/// Largest n for which the whole cube is scanned for edges.
pub const MAX_SCAN_N: usize = 5;

/// Largest vertex count for the exact branch-and-bound search.
pub const MAX_SEARCH_VERTICES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeFamily {
    Paper,
    Extended,
}

impl FromStr for EdgeFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "paper" => Ok(EdgeFamily::Paper),
            "extended" => Ok(EdgeFamily::Extended),
            other => Err(Error::OutOfRange(format!("unknown edge family {other:?}"))),
        }
    }
}

impl fmt::Display for EdgeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeFamily::Paper => "paper",
            EdgeFamily::Extended => "extended",
        })
    }
}

/// Edge tests over a fixed vertex list, with singleton and pair
/// measurements precomputed.
struct EdgeOracle {
    d_scaled: u64,
    family: EdgeFamily,
    single: Vec<Measurement>,
    pair: Vec<Vec<Measurement>>,
}

impl EdgeOracle {
    fn new(words: &[Word], d_scaled: u64, lam: Lambda, family: EdgeFamily) -> Result<Self> {
        let kind = MeasurementKind::LambdaAdd(lam);
        let single = words
            .iter()
            .map(|w| measure([w], kind))
            .collect::<Result<Vec<_>>>()?;
        let pair = words
            .iter()
            .map(|x| {
                words
                    .iter()
                    .map(|y| measure([x, y], kind))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(EdgeOracle {
            d_scaled,
            family,
            single,
            pair,
        })
    }

    fn close(&self, x: &Measurement, y: &Measurement) -> bool {
        l1_scaled(x, y).expect("measurements share length and scale") < self.d_scaled
    }

    fn edge2(&self, a: usize, b: usize) -> bool {
        if self.close(&self.single[a], &self.single[b]) {
            return true;
        }
        self.family == EdgeFamily::Extended
            && (self.close(&self.pair[a][b], &self.single[a])
                || self.close(&self.pair[a][b], &self.single[b]))
    }

    fn edge3(&self, a: usize, b: usize, c: usize) -> bool {
        if self.close(&self.pair[a][b], &self.single[c])
            || self.close(&self.pair[a][c], &self.single[b])
            || self.close(&self.pair[b][c], &self.single[a])
        {
            return true;
        }
        self.family == EdgeFamily::Extended
            && (self.close(&self.pair[a][c], &self.pair[b][c])
                || self.close(&self.pair[a][b], &self.pair[c][b])
                || self.close(&self.pair[b][a], &self.pair[c][a]))
    }

    fn edge4(&self, a: usize, b: usize, c: usize, d: usize) -> bool {
        self.close(&self.pair[a][b], &self.pair[c][d])
            || self.close(&self.pair[a][c], &self.pair[b][d])
            || self.close(&self.pair[a][d], &self.pair[b][c])
    }

    fn is_edge(&self, set: &[usize]) -> bool {
        match *set {
            [a, b] => self.edge2(a, b),
            [a, b, c] => self.edge3(a, b, c),
            [a, b, c, d] => self.edge4(a, b, c, d),
            _ => false,
        }
    }
}

/// Every 2-, 3- and 4-subset of `0..m` (as index lists) that is an edge.
fn edges_among(oracle: &EdgeOracle, m: usize) -> impl Iterator<Item = Vec<usize>> + '_ {
    subsets_up_to(m, 4)
        .into_iter()
        .filter(move |s| s.len() >= 2 && oracle.is_edge(s))
}

/// Exact hyperedge counts of the hypergraph on `{0,1}^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCounts {
    pub n: usize,
    pub vertices: BigUint,
    pub e2: BigUint,
    pub e3: BigUint,
    pub e4: BigUint,
    pub family: EdgeFamily,
}

impl EdgeCounts {
    pub fn by_size(&self, i: usize) -> &BigUint {
        match i {
            2 => &self.e2,
            3 => &self.e3,
            4 => &self.e4,
            _ => panic!("edge size {i} not in 2..=4"),
        }
    }
}

fn cube(n: usize) -> Vec<Word> {
    (0..1u64 << n).map(|i| Word::from_index(i, n)).collect()
}

fn check_scan(n: usize) -> Result<()> {
    if n > MAX_SCAN_N {
        return Err(Error::GuardExceeded(format!(
            "n = {n} exceeds the hyperedge scan limit {MAX_SCAN_N}"
        )));
    }
    Ok(())
}

pub fn count_hyperedges(
    n: usize,
    d_scaled: u64,
    lam: Lambda,
    family: EdgeFamily,
) -> Result<EdgeCounts> {
    check_scan(n)?;
    let words = cube(n);
    let oracle = EdgeOracle::new(&words, d_scaled, lam, family)?;
    let mut counts = [0u64; 5];
    for e in edges_among(&oracle, words.len()) {
        counts[e.len()] += 1;
    }
    Ok(EdgeCounts {
        n,
        vertices: BigUint::from(words.len()),
        e2: counts[2].into(),
        e3: counts[3].into(),
        e4: counts[4].into(),
        family,
    })
}

/// True iff no 2-, 3- or 4-subset of the code is an edge.
pub fn is_independent(code: &Code, d_scaled: u64, lam: Lambda, family: EdgeFamily) -> Result<bool> {
    let oracle = EdgeOracle::new(code.words(), d_scaled, lam, family)?;
    let independent = edges_among(&oracle, code.len()).next().is_none();
    Ok(independent)
}

/// Lower bound on the independence number from hyperedge counts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GvSizeBound {
    /// `min_i (N^i / E_i)^(1/(i-1))` over nonempty edge classes; infinite if
    /// the hypergraph has no edges.
    pub tau: f64,
    pub bound: f64,
    /// `τ / 2N`, capped at 1.
    pub sampling_p: f64,
}

pub fn gv_bound_size(counts: &EdgeCounts) -> GvSizeBound {
    let n_vertices = counts.vertices.to_f64().unwrap_or(f64::INFINITY);
    let mut tau = f64::INFINITY;
    for i in 2..=4usize {
        let e = counts.by_size(i);
        if e.is_zero() {
            continue;
        }
        let e = e.to_f64().unwrap_or(f64::INFINITY);
        let term = ((i as f64 * n_vertices.ln() - e.ln()) / (i as f64 - 1.0)).exp();
        tau = tau.min(term);
    }
    if tau.is_infinite() {
        return GvSizeBound {
            tau,
            bound: n_vertices,
            sampling_p: 1.0,
        };
    }
    GvSizeBound {
        tau,
        bound: tau / 16.0,
        sampling_p: (tau / (2.0 * n_vertices)).min(1.0),
    }
}

/// Outcome of one deletion-sampling run.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleOutcome {
    pub code: Code,
    pub sampled: usize,
    pub removed: usize,
    pub sampling_p: f64,
    pub seed: u64,
}

/// Keeps each vertex with probability `τ/2N`, then removes the
/// lexicographically least vertex of every edge inside the sample.
pub fn gv_sample(
    n: usize,
    d_scaled: u64,
    lam: Lambda,
    family: EdgeFamily,
    seed: u64,
) -> Result<SampleOutcome> {
    let counts = count_hyperedges(n, d_scaled, lam, family)?;
    let p = gv_bound_size(&counts).sampling_p;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sample: Vec<Word> = cube(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    let oracle = EdgeOracle::new(&sample, d_scaled, lam, family)?;
    let mut drop = vec![false; sample.len()];
    for edge in edges_among(&oracle, sample.len()) {
        drop[edge[0]] = true;
    }
    let removed = drop.iter().filter(|&&x| x).count();
    let sampled = sample.len();
    let kept: Vec<Word> = sample
        .into_iter()
        .zip(drop)
        .filter_map(|(w, gone)| (!gone).then_some(w))
        .collect();
    let code = Code::new(n, kept)?;
    if !is_independent(&code, d_scaled, lam, family)? {
        return Err(Error::Construction("deletion left an edge behind".into()));
    }
    Ok(SampleOutcome {
        code,
        sampled,
        removed,
        sampling_p: p,
        seed,
    })
}

struct Search<'a> {
    words: &'a [Word],
    kind: MeasurementKind,
    s: usize,
    d_scaled: u64,
    chosen: Vec<usize>,
    images: Vec<Measurement>,
    best: Vec<usize>,
}

impl Search<'_> {
    /// Measurements of the subsets that contain `w` and at most `s - 1`
    /// already-chosen words.
    fn new_images(&self, w: usize) -> Result<Vec<Measurement>> {
        let mut out = vec![measure([&self.words[w]], self.kind)?];
        for sub in subsets_up_to(self.chosen.len(), self.s - 1) {
            let members = sub
                .iter()
                .map(|&i| &self.words[self.chosen[i]])
                .chain(std::iter::once(&self.words[w]));
            out.push(measure(members, self.kind)?);
        }
        Ok(out)
    }

    fn fits(&self, fresh: &[Measurement]) -> Result<bool> {
        for (i, x) in fresh.iter().enumerate() {
            for y in self.images.iter().chain(&fresh[i + 1..]) {
                if l1_scaled(x, y)? < self.d_scaled {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn run(&mut self, next: usize) -> Result<()> {
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        for w in next..self.words.len() {
            if self.chosen.len() + (self.words.len() - w) <= self.best.len() {
                return Ok(());
            }
            let fresh = self.new_images(w)?;
            if !self.fits(&fresh)? {
                continue;
            }
            let mark = self.images.len();
            self.images.extend(fresh);
            self.chosen.push(w);
            self.run(w + 1)?;
            self.chosen.pop();
            self.images.truncate(mark);
        }
        Ok(())
    }
}

/// Exact `A_f(n, d; s)` by depth-first search over words in lexicographic
/// order, pruning any branch whose newest word drops the distance below d.
pub fn max_code_exact(
    n: usize,
    d_scaled: u64,
    s: usize,
    kind: MeasurementKind,
) -> Result<(usize, Code)> {
    check_arity(s, kind)?;
    if n >= 63 || (1usize << n) > MAX_SEARCH_VERTICES {
        return Err(Error::GuardExceeded(format!(
            "2^{n} vertices exceed the search limit {MAX_SEARCH_VERTICES}"
        )));
    }
    let words = cube(n);
    let mut search = Search {
        words: &words,
        kind,
        s,
        d_scaled,
        chosen: Vec::new(),
        images: Vec::new(),
        best: Vec::new(),
    };
    search.run(0)?;
    let best = search.best.iter().map(|&i| words[i].clone()).collect();
    let code = Code::new(n, best)?;
    Ok((code.len(), code))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::code_distance;

    fn code(words: &[&str]) -> Code {
        Code::from_words(words.iter().map(|w| w.parse().unwrap()).collect()).unwrap()
    }

    fn lam(a: i64, b: i64) -> Lambda {
        Lambda::new(a, b).unwrap()
    }

    #[test]
    fn count_examples() {
        let c = count_hyperedges(1, 1, Lambda::TWO, EdgeFamily::Paper).unwrap();
        assert_eq!(
            (c.e2.clone(), c.e3.clone(), c.e4.clone()),
            (0u32.into(), 0u32.into(), 0u32.into())
        );
        let c = count_hyperedges(2, 2, Lambda::TWO, EdgeFamily::Paper).unwrap();
        assert_eq!(c.e2, BigUint::from(4u32));
        let c = count_hyperedges(2, 1, Lambda::TWO, EdgeFamily::Paper).unwrap();
        assert_eq!(c.e2, BigUint::zero());
        assert!(count_hyperedges(6, 1, Lambda::TWO, EdgeFamily::Paper).is_err());
    }

    #[test]
    fn counts_within_binomials() {
        for n in 1..=3 {
            for d in 1..=4 {
                for family in [EdgeFamily::Paper, EdgeFamily::Extended] {
                    let c = count_hyperedges(n, d, lam(4, 3), family).unwrap();
                    let v = 1usize << n;
                    for i in 2..=4 {
                        assert!(*c.by_size(i) <= crate::construct::binomial(v, i));
                    }
                }
            }
        }
    }

    #[test]
    fn extended_contains_paper() {
        for d in 1..=5 {
            let p = count_hyperedges(3, d, lam(4, 3), EdgeFamily::Paper).unwrap();
            let e = count_hyperedges(3, d, lam(4, 3), EdgeFamily::Extended).unwrap();
            assert!(p.e2 <= e.e2 && p.e3 <= e.e3 && p.e4 == e.e4);
        }
    }

    #[test]
    fn independence_examples() {
        let c = code(&["00", "11"]);
        assert!(is_independent(&c, 1, Lambda::TWO, EdgeFamily::Paper).unwrap());
        assert!(!is_independent(&c, 1, Lambda::TWO, EdgeFamily::Extended).unwrap());
        let empty = Code::new(3, vec![]).unwrap();
        assert!(is_independent(&empty, 5, lam(4, 3), EdgeFamily::Extended).unwrap());
    }

    #[test]
    fn extended_independence_matches_distance_exhaustively() {
        for n in 1..=3usize {
            let all: Vec<Word> = cube(n);
            for mask in 1u32..(1 << all.len()) {
                if mask.count_ones() > 5 {
                    continue;
                }
                let words = (0..all.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| all[i].clone())
                    .collect();
                let c = Code::new(n, words).unwrap();
                for l in [Lambda::TWO, lam(4, 3)] {
                    let dist = code_distance(&c, 2, MeasurementKind::LambdaAdd(l))
                        .unwrap()
                        .distance;
                    for d in 1..=3 {
                        assert_eq!(
                            is_independent(&c, d, l, EdgeFamily::Extended).unwrap(),
                            dist.at_least(d),
                            "n={n} mask={mask:b} λ={l} d={d}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn gv_bound_examples() {
        let counts = |e2: u32, e3: u32, e4: u32| EdgeCounts {
            n: 4,
            vertices: 16u32.into(),
            e2: e2.into(),
            e3: e3.into(),
            e4: e4.into(),
            family: EdgeFamily::Paper,
        };
        let b = gv_bound_size(&counts(4, 0, 0));
        assert!((b.tau - 64.0).abs() < 1e-9);
        assert!((b.bound - 4.0).abs() < 1e-9);
        assert!((b.sampling_p - 1.0).abs() < 1e-12);
        let b = gv_bound_size(&counts(0, 0, 0));
        assert_eq!(b.bound, 16.0);
        let b = gv_bound_size(&counts(256, 0, 0));
        assert!((b.tau - 1.0).abs() < 1e-9);
        assert!((b.bound - 1.0 / 16.0).abs() < 1e-12);
        assert!((b.sampling_p - 1.0 / 32.0).abs() < 1e-12);
        // (16^3 / 64)^(1/2) = 8 beats the pair term 16^2 / 16 = 16.
        let b = gv_bound_size(&counts(16, 64, 0));
        assert!((b.tau - 8.0).abs() < 1e-9);
    }

    #[test]
    fn samples_are_independent_and_reproducible() {
        for seed in 0..20 {
            for family in [EdgeFamily::Paper, EdgeFamily::Extended] {
                let out = gv_sample(4, 2, lam(4, 3), family, seed).unwrap();
                assert!(is_independent(&out.code, 2, lam(4, 3), family).unwrap());
                assert_eq!(out, gv_sample(4, 2, lam(4, 3), family, seed).unwrap());
                assert_eq!(out.code.len(), out.sampled - out.removed);
            }
        }
    }

    #[test]
    fn all_pairs_conflicting_gives_tiny_samples() {
        // At λ = 2, n = 3 every pair of words is within scaled distance 3·1.
        for seed in 0..30 {
            let out = gv_sample(3, 4, Lambda::TWO, EdgeFamily::Extended, seed).unwrap();
            assert!(out.code.len() <= 1);
        }
    }

    #[test]
    fn exact_search_small_cases() {
        let (a, c) = max_code_exact(2, 1, 2, MeasurementKind::Add).unwrap();
        assert_eq!(a, 2);
        assert!(code_distance(&c, 2, MeasurementKind::Add)
            .unwrap()
            .distance
            .at_least(1));
        let (a, _) = max_code_exact(2, 1, 2, MeasurementKind::Xor).unwrap();
        assert_eq!(a, 2);
        let (a, _) = max_code_exact(3, 7, 2, MeasurementKind::LambdaAdd(lam(4, 3))).unwrap();
        assert_eq!(a, 1);
        assert!(max_code_exact(7, 1, 2, MeasurementKind::Or).is_err());
    }

    #[test]
    fn exact_search_matches_subset_enumeration() {
        // Independent oracle: try every subset of the cube.
        for n in 2..=3usize {
            let all = cube(n);
            for kind in [
                MeasurementKind::Add,
                MeasurementKind::Xor,
                MeasurementKind::Or,
                MeasurementKind::LambdaAdd(lam(3, 2)),
            ] {
                for d in 1..=3u64 {
                    let mut best = 0;
                    for mask in 1u32..(1 << all.len()) {
                        let words = (0..all.len())
                            .filter(|i| mask >> i & 1 == 1)
                            .map(|i| all[i].clone())
                            .collect();
                        let c = Code::new(n, words).unwrap();
                        if c.len() > best
                            && code_distance(&c, 2, kind).unwrap().distance.at_least(d)
                        {
                            best = c.len();
                        }
                    }
                    let (a, c) = max_code_exact(n, d, 2, kind).unwrap();
                    assert_eq!(a, best, "n={n} kind={kind} d={d}");
                    assert!(code_distance(&c, 2, kind).unwrap().distance.at_least(d));
                }
            }
        }
    }

    #[test]
    fn exact_search_monotone_in_d() {
        let mut last = usize::MAX;
        for d in 0..=8 {
            let (a, _) = max_code_exact(3, d, 2, MeasurementKind::LambdaAdd(lam(4, 3))).unwrap();
            assert!(a <= last);
            last = a;
        }
    }
}
