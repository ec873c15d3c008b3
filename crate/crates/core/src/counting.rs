//! Exact counts of word tuples whose λ-ADD measurements are close.
//!
//! For triples `(a, b, c)` the quantity is `‖(a ⊞ b) - c‖` and for quadruples
//! `(a, b, c, d)` it is `‖(a ⊞ b) - (c ⊞ d)‖`, both at scale b. The `B`
//! variants restrict to tuples with `a = b` and the `C` variants to `a = c`.
//! Since the distance is a sum of per-coordinate contributions, the number
//! of tuples of length n with scaled value exactly j is the coefficient of
//! `u^j` in `P(u)^n`, where `P` is the per-coordinate edge polynomial.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::measure::{boxplus, l1_scaled, measure, Lambda, MeasurementKind, Word};

/// Largest table (rows × columns) [`count_dp`] will allocate.
pub const MAX_TABLE_CELLS: usize = 20_000_000;

/// Largest `i·n` for which [`count_bruteforce`] scans all `2^(i·n)` tuples.
pub const MAX_BRUTE_FORCE_BITS: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TupleKind {
    /// All tuples.
    N,
    /// First two entries equal.
    B,
    /// First and third entries equal.
    C,
}

impl FromStr for TupleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "N" | "n" => Ok(TupleKind::N),
            "B" | "b" => Ok(TupleKind::B),
            "C" | "c" => Ok(TupleKind::C),
            other => Err(Error::OutOfRange(format!("unknown tuple kind {other:?}"))),
        }
    }
}

impl fmt::Display for TupleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TupleKind::N => "N",
            TupleKind::B => "B",
            TupleKind::C => "C",
        })
    }
}

/// Which tuple family a polynomial or table describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TupleContext {
    pub arity: usize,
    pub kind: TupleKind,
    pub lambda: Lambda,
}

impl TupleContext {
    pub fn new(arity: usize, kind: TupleKind, lambda: Lambda) -> Result<Self> {
        if arity != 3 && arity != 4 {
            return Err(Error::OutOfRange(format!(
                "tuple arity {arity} not in {{3,4}}"
            )));
        }
        Ok(TupleContext {
            arity,
            kind,
            lambda,
        })
    }

    fn admits(&self, tuple: &[usize]) -> bool {
        match self.kind {
            TupleKind::N => true,
            TupleKind::B => tuple[0] == tuple[1],
            TupleKind::C => tuple[0] == tuple[2],
        }
    }
}

/// `P(u) = Σ coeff · u^exp`, stored by ascending exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgePolynomial {
    pub context: TupleContext,
    pub terms: Vec<(u64, u32)>,
}

impl EdgePolynomial {
    pub fn coefficient_sum(&self) -> u64 {
        self.terms.iter().map(|t| t.0).sum()
    }

    pub fn max_exponent(&self) -> u32 {
        self.terms.last().map_or(0, |t| t.1)
    }

    /// Coefficient of `u^0`.
    pub fn constant(&self) -> u64 {
        self.terms.iter().find(|t| t.1 == 0).map_or(0, |t| t.0)
    }

    pub fn coefficient(&self, exp: u32) -> u64 {
        self.terms.iter().find(|t| t.1 == exp).map_or(0, |t| t.0)
    }

    pub fn eval(&self, u: f64) -> f64 {
        self.terms
            .iter()
            .map(|&(c, e)| c as f64 * u.powi(e as i32))
            .sum()
    }

    pub fn eval_derivative(&self, u: f64) -> f64 {
        self.terms
            .iter()
            .filter(|t| t.1 > 0)
            .map(|&(c, e)| (c * e as u64) as f64 * u.powi(e as i32 - 1))
            .sum()
    }
}

impl fmt::Display for EdgePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|&(c, e)| match e {
                0 => format!("{c}"),
                1 => format!("{c}u"),
                _ => format!("{c}u^{e}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Per-coordinate scaled contribution of a bit pattern.
fn coordinate_contribution(bits: &[u8], lam: Lambda) -> u32 {
    let left = boxplus(bits[0], bits[1], lam);
    let right = match bits.len() {
        3 => lam.denom() * bits[2] as i64,
        _ => boxplus(bits[2], bits[3], lam),
    };
    left.abs_diff(right) as u32
}

/// Enumerates the bit patterns of one coordinate and tallies their scaled
/// contributions.
pub fn edge_polynomial(lam: Lambda, arity: usize, kind: TupleKind) -> Result<EdgePolynomial> {
    let context = TupleContext::new(arity, kind, lam)?;
    let mut tally: BTreeMap<u32, u64> = BTreeMap::new();
    for pattern in 0..(1usize << arity) {
        let bits: Vec<u8> = (0..arity).map(|i| ((pattern >> i) & 1) as u8).collect();
        let as_idx: Vec<usize> = bits.iter().map(|&b| b as usize).collect();
        if !context.admits(&as_idx) {
            continue;
        }
        *tally
            .entry(coordinate_contribution(&bits, lam))
            .or_default() += 1;
    }
    Ok(EdgePolynomial {
        context,
        terms: tally.into_iter().map(|(e, c)| (c, e)).collect(),
    })
}

/// `rows[n][j]` = number of length-n tuples with scaled value exactly j,
/// for `j ≤ j_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub context: TupleContext,
    pub j_max: usize,
    pub rows: Vec<Vec<BigUint>>,
}

impl CountTable {
    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, n: usize, j: usize) -> BigUint {
        self.rows
            .get(n)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_default()
    }

    /// Exact decimal dump with header `n,j,count`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,j,count\n");
        for (n, row) in self.rows.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                out.push_str(&format!("{n},{j},{c}\n"));
            }
        }
        out
    }
}

/// Fills `N(n, j) = Σ coeff · N(n-1, j-exp)` from `N(0, 0) = 1`.
pub fn count_dp(poly: &EdgePolynomial, n_max: usize, j_max: usize) -> Result<CountTable> {
    let cells = (n_max + 1).saturating_mul(j_max + 1);
    if cells > MAX_TABLE_CELLS {
        return Err(Error::GuardExceeded(format!(
            "{cells} table cells exceed {MAX_TABLE_CELLS}"
        )));
    }
    let mut rows = Vec::with_capacity(n_max + 1);
    let mut first = vec![BigUint::zero(); j_max + 1];
    first[0] = BigUint::one();
    rows.push(first);
    for n in 1..=n_max {
        let prev: &Vec<BigUint> = &rows[n - 1];
        let row: Vec<BigUint> = (0..=j_max)
            .map(|j| {
                poly.terms
                    .iter()
                    .filter(|&&(_, e)| e as usize <= j)
                    .map(|&(c, e)| &prev[j - e as usize] * c)
                    .sum()
            })
            .collect();
        rows.push(row);
    }
    Ok(CountTable {
        context: poly.context,
        j_max,
        rows,
    })
}

/// Table wide enough to hold every attainable value up to `n_max`.
pub fn count_dp_full(poly: &EdgePolynomial, n_max: usize) -> Result<CountTable> {
    count_dp(poly, n_max, n_max * poly.max_exponent() as usize)
}

/// `Σ_{j < d_scaled} table(n_max, j)`.
pub fn cumulative(table: &CountTable, d_scaled: usize) -> Result<BigUint> {
    cumulative_at(table, table.n_max(), d_scaled)
}

pub fn cumulative_at(table: &CountTable, n: usize, d_scaled: usize) -> Result<BigUint> {
    if d_scaled > table.j_max + 1 {
        return Err(Error::OutOfRange(format!(
            "threshold {d_scaled} beyond table width {}",
            table.j_max + 1
        )));
    }
    if n > table.n_max() {
        return Err(Error::OutOfRange(format!(
            "row {n} beyond {}",
            table.n_max()
        )));
    }
    Ok(table.rows[n][..d_scaled].iter().sum())
}

/// Histogram over scaled values of all admissible tuples of length-n words,
/// computed directly from word measurements. With `distinct`, only tuples
/// of pairwise distinct words are counted.
pub fn count_bruteforce_row(
    n: usize,
    lam: Lambda,
    arity: usize,
    kind: TupleKind,
    distinct: bool,
) -> Result<Vec<BigUint>> {
    let context = TupleContext::new(arity, kind, lam)?;
    if arity * n > MAX_BRUTE_FORCE_BITS {
        return Err(Error::GuardExceeded(format!(
            "2^{} tuples exceed the brute-force limit 2^{MAX_BRUTE_FORCE_BITS}",
            arity * n
        )));
    }
    let mkind = MeasurementKind::LambdaAdd(lam);
    let words: Vec<Word> = (0..1u64 << n).map(|i| Word::from_index(i, n)).collect();
    let singles = words
        .iter()
        .map(|w| measure([w], mkind))
        .collect::<Result<Vec<_>>>()?;
    let mut hist: Vec<u64> = Vec::new();
    let radix = words.len();
    let total = radix.pow(arity as u32);
    let mut tuple = vec![0usize; arity];
    for code in 0..total {
        let mut rest = code;
        for slot in tuple.iter_mut() {
            *slot = rest % radix;
            rest /= radix;
        }
        if !context.admits(&tuple) {
            continue;
        }
        if distinct {
            let mut sorted = tuple.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|p| p[0] == p[1]) {
                continue;
            }
        }
        let left = measure([&words[tuple[0]], &words[tuple[1]]], mkind)?;
        let value = if arity == 3 {
            l1_scaled(&left, &singles[tuple[2]])?
        } else {
            let right = measure([&words[tuple[2]], &words[tuple[3]]], mkind)?;
            l1_scaled(&left, &right)?
        } as usize;
        if hist.len() <= value {
            hist.resize(value + 1, 0);
        }
        hist[value] += 1;
    }
    if hist.is_empty() {
        hist.push(0);
    }
    Ok(hist.into_iter().map(BigUint::from).collect())
}

/// Number of admissible tuples with scaled value exactly `j`.
pub fn count_bruteforce(
    n: usize,
    j: usize,
    lam: Lambda,
    arity: usize,
    kind: TupleKind,
    distinct: bool,
) -> Result<BigUint> {
    let row = count_bruteforce_row(n, lam, arity, kind, distinct)?;
    Ok(row.get(j).cloned().unwrap_or_default())
}

/// Brute-force count of tuples with scaled value below `d_scaled`.
pub fn count_bruteforce_cumulative(
    n: usize,
    d_scaled: usize,
    lam: Lambda,
    arity: usize,
    kind: TupleKind,
    distinct: bool,
) -> Result<BigUint> {
    let row = count_bruteforce_row(n, lam, arity, kind, distinct)?;
    Ok(row.iter().take(d_scaled).sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(a: i64, b: i64) -> Lambda {
        Lambda::new(a, b).unwrap()
    }

    fn big(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn polynomial_examples() {
        let p = edge_polynomial(lam(4, 3), 3, TupleKind::N).unwrap();
        assert_eq!(p.terms, vec![(3, 0), (1, 1), (3, 3), (1, 4)]);
        let p = edge_polynomial(Lambda::TWO, 4, TupleKind::N).unwrap();
        assert_eq!(p.terms, vec![(6, 0), (8, 1), (2, 2)]);
        let p = edge_polynomial(lam(4, 3), 4, TupleKind::C).unwrap();
        assert_eq!(p.terms, vec![(4, 0), (2, 1), (2, 3)]);
        assert_eq!(p.to_string(), "4 + 2u + 2u^3");
    }

    #[test]
    fn polynomials_match_printed_kernels_where_they_agree() {
        // H3, G(3,1), G(3,2), H4, G(4,1) at a=4, b=3:
        // exponents 0, a=4, b=3, a-b=1.
        let l = lam(4, 3);
        let expect = [
            (3, TupleKind::N, vec![(3, 0), (1, 1), (3, 3), (1, 4)]),
            (3, TupleKind::B, vec![(1, 0), (1, 1), (1, 3), (1, 4)]),
            (3, TupleKind::C, vec![(2, 0), (1, 1), (1, 3)]),
            (4, TupleKind::N, vec![(6, 0), (4, 1), (4, 3), (2, 4)]),
            (4, TupleKind::B, vec![(2, 0), (2, 1), (2, 3), (2, 4)]),
        ];
        for (i, kind, terms) in expect {
            assert_eq!(
                edge_polynomial(l, i, kind).unwrap().terms,
                terms,
                "({i},{kind})"
            );
        }
    }

    #[test]
    fn coefficient_sums() {
        for l in [lam(2, 1), lam(3, 2), lam(4, 3), lam(7, 5)] {
            for (i, kind, sum) in [
                (3, TupleKind::N, 8),
                (3, TupleKind::B, 4),
                (3, TupleKind::C, 4),
                (4, TupleKind::N, 16),
                (4, TupleKind::B, 8),
                (4, TupleKind::C, 8),
            ] {
                let p = edge_polynomial(l, i, kind).unwrap();
                assert_eq!(p.coefficient_sum(), sum);
                let (a, b) = (l.numer() as u32, l.denom() as u32);
                assert!(p.terms.iter().all(|t| [0, b, a - b, a].contains(&t.1)));
            }
        }
        assert!(edge_polynomial(Lambda::TWO, 2, TupleKind::N).is_err());
    }

    #[test]
    fn dp_rows() {
        let p3 = edge_polynomial(Lambda::TWO, 3, TupleKind::N).unwrap();
        let t = count_dp(&p3, 1, 2).unwrap();
        assert_eq!(t.rows[1], big(&[3, 4, 1]));
        assert_eq!(t.rows[0], big(&[1, 0, 0]));
        let p4 = edge_polynomial(Lambda::TWO, 4, TupleKind::N).unwrap();
        let t = count_dp(&p4, 2, 4).unwrap();
        assert_eq!(t.rows[2], big(&[36, 96, 88, 32, 4]));
        assert_eq!(t.rows[2].iter().sum::<BigUint>(), BigUint::from(256u32));
    }

    #[test]
    fn brute_force_examples() {
        let n3 = |n, j| count_bruteforce(n, j, Lambda::TWO, 3, TupleKind::N, false).unwrap();
        assert_eq!(n3(1, 1), BigUint::from(4u32));
        assert_eq!(n3(1, 0), BigUint::from(3u32));
        assert_eq!(n3(0, 0), BigUint::from(1u32));
        assert!(count_bruteforce(5, 0, Lambda::TWO, 4, TupleKind::N, false).is_err());
    }

    #[test]
    fn cumulative_examples() {
        let p3 = edge_polynomial(Lambda::TWO, 3, TupleKind::N).unwrap();
        let t = count_dp(&p3, 1, 2).unwrap();
        assert_eq!(cumulative(&t, 2).unwrap(), BigUint::from(7u32));
        assert_eq!(cumulative(&t, 0).unwrap(), BigUint::zero());
        assert_eq!(cumulative(&t, 3).unwrap(), BigUint::from(8u32));
        assert!(cumulative(&t, 4).is_err());
    }

    #[test]
    fn fixed_n_recursion_disagrees_with_brute_force() {
        // The recursion with n held fixed in the u-shifted terms,
        // N(n,j) = 3N(n-1,j) + N(n,j-a) + 3N(n,j-b) + N(n,j-a+b), at a=2, b=1.
        fn fixed_n(n: usize, j: i64) -> u64 {
            if j < 0 {
                return 0;
            }
            if n == 0 {
                return (j == 0) as u64;
            }
            3 * fixed_n(n - 1, j) + fixed_n(n, j - 2) + 3 * fixed_n(n, j - 1) + fixed_n(n, j - 1)
        }
        let brute = count_bruteforce(1, 1, Lambda::TWO, 3, TupleKind::N, false).unwrap();
        let dp = count_dp(
            &edge_polynomial(Lambda::TWO, 3, TupleKind::N).unwrap(),
            1,
            1,
        )
        .unwrap();
        assert_eq!(dp.get(1, 1), brute);
        assert_eq!(brute, BigUint::from(4u32));
        assert_eq!(fixed_n(1, 1), 12);
    }

    #[test]
    fn csv_dump() {
        let p3 = edge_polynomial(Lambda::TWO, 3, TupleKind::N).unwrap();
        let t = count_dp(&p3, 1, 1).unwrap();
        assert_eq!(t.to_csv(), "n,j,count\n0,0,1\n0,1,0\n1,0,3\n1,1,4\n");
    }

    #[test]
    fn guard() {
        let p3 = edge_polynomial(Lambda::TWO, 3, TupleKind::N).unwrap();
        assert!(matches!(
            count_dp(&p3, 100_000, 1000),
            Err(Error::GuardExceeded(_))
        ));
    }

    proptest::proptest! {
        #[test]
        fn rows_conserve_mass(
            lam_idx in 0usize..3,
            shape in 0usize..6,
            n in 0usize..40,
        ) {
            let lam = [Lambda::TWO, Lambda::new(3, 2).unwrap(), Lambda::new(4, 3).unwrap()][lam_idx];
            let (arity, kind) = [
                (3, TupleKind::N), (3, TupleKind::B), (3, TupleKind::C),
                (4, TupleKind::N), (4, TupleKind::B), (4, TupleKind::C),
            ][shape];
            let poly = edge_polynomial(lam, arity, kind).unwrap();
            let table = count_dp_full(&poly, n).unwrap();
            let total: BigUint = (0..=table.j_max).map(|j| table.get(n, j)).sum();
            proptest::prop_assert_eq!(total, BigUint::from(poly.coefficient_sum()).pow(n as u32));
            let all = cumulative_at(&table, n, table.j_max + 1).unwrap();
            proptest::prop_assert_eq!(all, BigUint::from(poly.coefficient_sum()).pow(n as u32));
        }
    }
}
