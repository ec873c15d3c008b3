//! Exact f-norm distance of a code by exhaustive subset-pair comparison.
//!
//! This module is the ground truth the rest of the crate is checked against,
//! so it never samples. With `m` words and `s = 2` there are `m + m(m-1)/2`
//! subsets and quadratically many pairs of them; beyond a couple of hundred
//! words the enumeration becomes slow.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::measure::{l1_scaled, measure, Lambda, Measurement, MeasurementKind, Word};

/// A finite set of distinct words of common length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Code {
    length: usize,
    words: Vec<Word>,
}

impl Code {
    pub fn new(length: usize, words: Vec<Word>) -> Result<Self> {
        for w in &words {
            if w.len() != length {
                return Err(Error::LengthMismatch {
                    expected: length,
                    found: w.len(),
                });
            }
        }
        let mut sorted: Vec<(usize, &Word)> = words.iter().enumerate().collect();
        sorted.sort_by(|a, b| a.1.cmp(b.1));
        for pair in sorted.windows(2) {
            if pair[0].1 == pair[1].1 {
                return Err(Error::DuplicateWord(pair[0].0.max(pair[1].0)));
            }
        }
        Ok(Code { length, words })
    }

    /// Builds a code from its words, taking the length from the first one.
    pub fn from_words(words: Vec<Word>) -> Result<Self> {
        let length = words.first().map(Word::len).ok_or(Error::EmptyCode)?;
        Code::new(length, words)
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Applies the same coordinate permutation to every word.
    pub fn permuted(&self, perm: &[usize]) -> Code {
        Code {
            length: self.length,
            words: self.words.iter().map(|w| w.permuted(perm)).collect(),
        }
    }
}

/// A scaled distance, or the sentinel for an empty minimization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u64),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<u64> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    /// True iff the distance is at least the scaled threshold.
    pub fn at_least(self, threshold: u64) -> bool {
        match self {
            Distance::Finite(d) => d >= threshold,
            Distance::Infinite => true,
        }
    }

    /// Compares `lmul * self` against `rmul * other`, with ∞ times a positive
    /// multiplier staying ∞.
    pub fn scaled_cmp(self, lmul: u64, other: Distance, rmul: u64) -> Ordering {
        let scale = |d: Distance, m: u64| match d {
            Distance::Infinite if m > 0 => None,
            Distance::Infinite => Some(0u128),
            Distance::Finite(x) => Some(x as u128 * m as u128),
        };
        match (scale(self, lmul), scale(other, rmul)) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Greater,
            (Some(_), None) => Ordering::Less,
            (Some(x), Some(y)) => x.cmp(&y),
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

/// Result of [`code_distance`]. Witness subsets are index lists into the code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceReport {
    pub kind: MeasurementKind,
    pub s: usize,
    pub distance: Distance,
    pub witness: Option<(Vec<usize>, Vec<usize>)>,
}

impl DistanceReport {
    pub fn scale(&self) -> i64 {
        self.kind.scale()
    }
}

/// All nonempty index subsets of `0..m` with at most `s` elements, ordered by
/// size and then lexicographically.
pub fn subsets_up_to(m: usize, s: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for size in 1..=s.min(m) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            out.push(idx.clone());
            // advance to the next combination
            let mut i = size;
            while i > 0 && idx[i - 1] == m - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    out
}

pub(crate) fn check_arity(s: usize, kind: MeasurementKind) -> Result<()> {
    if s == 0 {
        return Err(Error::OutOfRange("s must be at least 1".into()));
    }
    if s > kind.max_arity() {
        return Err(Error::UnsupportedArity {
            size: s,
            max: kind.max_arity(),
        });
    }
    Ok(())
}

/// Measurements of every subset of size at most `s`, paired with the subset.
pub fn subset_measurements(
    code: &Code,
    s: usize,
    kind: MeasurementKind,
) -> Result<Vec<(Vec<usize>, Measurement)>> {
    subsets_up_to(code.len(), s)
        .into_iter()
        .map(|sub| {
            let m = measure(sub.iter().map(|&i| &code.words()[i]), kind)?;
            Ok((sub, m))
        })
        .collect()
}

/// Exact `dist_f(C; s)`: the minimum scaled ℓ1 distance between the
/// measurements of two distinct subsets of size at most `s`, overlapping
/// subsets included.
pub fn code_distance(code: &Code, s: usize, kind: MeasurementKind) -> Result<DistanceReport> {
    if code.is_empty() {
        return Err(Error::EmptyCode);
    }
    check_arity(s, kind)?;
    let table = subset_measurements(code, s, kind)?;
    let mut best: Option<(u64, usize, usize)> = None;
    'outer: for i in 0..table.len() {
        for j in i + 1..table.len() {
            let d = l1_scaled(&table[i].1, &table[j].1)?;
            if best.is_none_or(|(b, _, _)| d < b) {
                best = Some((d, i, j));
                if d == 0 {
                    break 'outer;
                }
            }
        }
    }
    Ok(match best {
        Some((d, i, j)) => DistanceReport {
            kind,
            s,
            distance: Distance::Finite(d),
            witness: Some((table[i].0.clone(), table[j].0.clone())),
        },
        None => DistanceReport {
            kind,
            s,
            distance: Distance::Infinite,
            witness: None,
        },
    })
}

/// The four `s = 2` distances of a code and whether the pointwise ordering
/// `dist_λ ≥ (λ-1)·dist_add ≥ (λ-1)·dist_xor` and `dist_λ ≥ dist_or` holds.
///
/// All distances are at their own scale: `lambda_add` at scale b, the rest at
/// scale 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    pub lambda: Lambda,
    pub lambda_add: Distance,
    pub add: Distance,
    pub xor: Distance,
    pub or: Distance,
    pub lambda_vs_add: bool,
    pub add_vs_xor: bool,
    pub lambda_vs_or: bool,
}

impl ChainReport {
    pub fn passed(&self) -> bool {
        self.lambda_vs_add && self.add_vs_xor && self.lambda_vs_or
    }
}

pub fn check_distance_chain(code: &Code, lam: Lambda) -> Result<ChainReport> {
    let dist = |kind| code_distance(code, 2, kind).map(|r| r.distance);
    let lambda_add = dist(MeasurementKind::LambdaAdd(lam))?;
    let add = dist(MeasurementKind::Add)?;
    let xor = dist(MeasurementKind::Xor)?;
    let or = dist(MeasurementKind::Or)?;
    let (a, b) = (lam.numer() as u64, lam.denom() as u64);
    Ok(ChainReport {
        lambda: lam,
        lambda_add,
        add,
        xor,
        or,
        lambda_vs_add: lambda_add.scaled_cmp(1, add, a - b) != Ordering::Less,
        add_vs_xor: add.scaled_cmp(1, xor, 1) != Ordering::Less,
        lambda_vs_or: lambda_add.scaled_cmp(1, or, b) != Ordering::Less,
    })
}
