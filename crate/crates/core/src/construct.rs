//! Explicit code constructions: XOR codes from a parity check and an inner
//! linear code, and OR codes from t-(v,k,1) packings.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::linalg::{BinMatrix, LinearCode};
use crate::measure::{MeasurementKind, Word};
use crate::metric::{code_distance, subsets_up_to, Code, Distance};

/// Exhaustive verification runs only when the number of subsets of size at
/// most `s` stays below this.
pub const MAX_VERIFY_SUBSETS: usize = 5000;

/// Largest number of k-subsets the greedy packing will scan.
pub const MAX_PACKING_CANDIDATES: u128 = 20_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerificationMode {
    /// The metric module computed the distance; `verified` is its value.
    Exhaustive {
        verified: Distance,
    },
    ClaimedOnly,
}

/// What a construction promises about its output, and whether that promise
/// was checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionCertificate {
    pub kind: MeasurementKind,
    pub s: usize,
    /// Claimed lower bound on the scaled distance.
    pub claimed: u64,
    pub mode: VerificationMode,
}

impl ConstructionCertificate {
    pub fn is_exhaustive(&self) -> bool {
        matches!(self.mode, VerificationMode::Exhaustive { .. })
    }

    /// Header lines for a code file.
    pub fn header_lines(&self) -> Vec<String> {
        let mut lines = vec![
            format!("kind: {}", self.kind),
            format!("s: {}", self.s),
            format!("claimed-distance: {}", self.claimed),
        ];
        match &self.mode {
            VerificationMode::Exhaustive { verified } => {
                lines.push("certificate: exhaustive".into());
                lines.push(format!("verified-distance: {verified}"));
            }
            VerificationMode::ClaimedOnly => lines.push("certificate: claimed-only".into()),
        }
        lines
    }
}

fn certify(
    code: &Code,
    s: usize,
    kind: MeasurementKind,
    claimed: u64,
) -> Result<ConstructionCertificate> {
    let subsets: BigUint = (1..=s).map(|i| binomial(code.len(), i)).sum();
    let feasible = subsets <= BigUint::from(MAX_VERIFY_SUBSETS);
    let mode = if feasible {
        let verified = code_distance(code, s, kind)?.distance;
        if !verified.at_least(claimed) {
            return Err(Error::Construction(format!(
                "verified distance {verified} is below the claimed {claimed}"
            )));
        }
        VerificationMode::Exhaustive { verified }
    } else {
        VerificationMode::ClaimedOnly
    };
    Ok(ConstructionCertificate {
        kind,
        s,
        claimed,
        mode,
    })
}

/// The XOR code `{Gᵀ h_i}` over the columns `h_i` of `hk`.
///
/// `hk` must define a code of distance at least `2s + 1`; this is checked by
/// brute force when the code it defines is small enough, and is otherwise
/// the caller's responsibility. The claimed XOR distance is the minimum
/// distance of the code generated by `gn`, or `declared_d` when that code is
/// too large to enumerate.
pub fn xor_construct(
    hk: &BinMatrix,
    gn: &BinMatrix,
    s: usize,
    declared_d: Option<usize>,
) -> Result<(Code, ConstructionCertificate)> {
    if s == 0 {
        return Err(Error::OutOfRange("s must be at least 1".into()));
    }
    if hk.rows() != gn.rows() {
        return Err(Error::DimensionMismatch(format!(
            "parity check has {} rows but the generator has {}",
            hk.rows(),
            gn.rows()
        )));
    }
    let inner = LinearCode::from_generator(gn.clone())?;
    let d = if inner.d_exact {
        inner.d_min
    } else {
        declared_d.ok_or_else(|| {
            Error::Construction(format!(
                "inner code dimension {} is too large to verify; declare its distance",
                inner.k
            ))
        })?
    };

    if hk.cols() > hk.rank() {
        let outer = LinearCode::from_parity_check(hk.clone(), 0)?;
        if outer.d_exact && outer.d_min < 2 * s + 1 {
            return Err(Error::Construction(format!(
                "parity check defines a code of distance {} < {}",
                outer.d_min,
                2 * s + 1
            )));
        }
    }

    let mut words = Vec::with_capacity(hk.cols());
    let mut seen = HashSet::new();
    for j in 0..hk.cols() {
        let word = Word::new(gn.left_mul_vec(&hk.column(j))?)?;
        if !seen.insert(word.clone()) {
            return Err(Error::Construction(format!(
                "column {j} maps to a repeated word; the parity check distance is below {}",
                2 * s + 1
            )));
        }
        words.push(word);
    }
    let code = Code::new(gn.cols(), words)?;
    let cert = certify(&code, s, MeasurementKind::Xor, d as u64)?;
    Ok((code, cert))
}

/// A t-(v,k,1) packing on points `0..v`. Blocks are sorted point lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Packing {
    pub v: usize,
    pub k: usize,
    pub t: usize,
    pub blocks: Vec<Vec<usize>>,
}

impl Packing {
    /// True iff every block has size k and no t-subset lies in two blocks.
    pub fn is_valid(&self) -> bool {
        let mut used = HashSet::new();
        for block in &self.blocks {
            if block.len() != self.k || block.iter().any(|&p| p >= self.v) {
                return false;
            }
            let mut sorted = block.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != self.k {
                return false;
            }
            for sub in subsets_of_size(&sorted, self.t) {
                if !used.insert(sub) {
                    return false;
                }
            }
        }
        true
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// The existential packing size ⌈C(v,t-1) / C(k,t-1)²⌉ for comparison.
    pub fn eff_reference(&self) -> BigUint {
        eff_reference_size(self.v, self.k, self.t)
    }
}

impl fmt::Display for Packing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let pts: Vec<String> = b.iter().map(|p| (p + 1).to_string()).collect();
                format!("{{{}}}", pts.join(","))
            })
            .collect();
        write!(
            f,
            "{}-({},{},1) packing: {}",
            self.t,
            self.v,
            self.k,
            blocks.join(" ")
        )
    }
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

pub fn eff_reference_size(v: usize, k: usize, t: usize) -> BigUint {
    let num = binomial(v, t - 1);
    let den = binomial(k, t - 1).pow(2);
    num.div_ceil(&den)
}

fn subsets_of_size(items: &[usize], t: usize) -> Vec<Vec<usize>> {
    subsets_up_to(items.len(), t)
        .into_iter()
        .filter(|s| s.len() == t)
        .map(|s| s.into_iter().map(|i| items[i]).collect())
        .collect()
}

/// Lexicographic greedy packing: scan k-subsets of `0..v` in order and keep
/// each block whose t-subsets are all unused.
pub fn greedy_packing(v: usize, k: usize, t: usize) -> Result<Packing> {
    if !(1 <= t && t <= k && k <= v) {
        return Err(Error::OutOfRange(format!(
            "need 1 <= t <= k <= v, got t={t} k={k} v={v}"
        )));
    }
    let candidates: u128 = binomial(v, k).try_into().unwrap_or(u128::MAX);
    if candidates > MAX_PACKING_CANDIDATES {
        return Err(Error::GuardExceeded(format!("C({v},{k}) candidate blocks")));
    }
    let mut used: HashSet<Vec<usize>> = HashSet::new();
    let mut blocks = Vec::new();
    let mut block: Vec<usize> = (0..k).collect();
    loop {
        let subs = subsets_of_size(&block, t);
        if subs.iter().all(|s| !used.contains(s)) {
            used.extend(subs);
            blocks.push(block.clone());
        }
        let mut i = k;
        while i > 0 && block[i - 1] == v - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        block[i - 1] += 1;
        for j in i..k {
            block[j] = block[j - 1] + 1;
        }
    }
    Ok(Packing { v, k, t, blocks })
}

/// Maps each block to its length-v indicator word; the resulting code has OR
/// distance at least `k - s(t-1)`.
pub fn or_from_packing(packing: &Packing, s: usize) -> Result<(Code, ConstructionCertificate)> {
    if s == 0 {
        return Err(Error::OutOfRange("s must be at least 1".into()));
    }
    let claimed = packing.k as i64 - (s * (packing.t - 1)) as i64;
    if claimed <= 0 {
        return Err(Error::Construction(format!(
            "k - s(t-1) = {} - {}·{} = {claimed} is not a positive distance",
            packing.k,
            s,
            packing.t - 1
        )));
    }
    if !packing.is_valid() {
        return Err(Error::Construction("input is not a valid packing".into()));
    }
    let words = packing
        .blocks
        .iter()
        .map(|b| {
            let mut bits = vec![0u8; packing.v];
            for &p in b {
                bits[p] = 1;
            }
            Word::new(bits)
        })
        .collect::<Result<Vec<_>>>()?;
    let code = Code::new(packing.v, words)?;
    let cert = certify(&code, s, MeasurementKind::Or, claimed as u64)?;
    Ok((code, cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{bch_parity_check, catalog_inner_code};

    #[test]
    fn bch_times_shortened_hamming() {
        let hk = bch_parity_check(4, 2, Some(15)).unwrap();
        let (_, inner) = catalog_inner_code(12, 3).unwrap();
        let (code, cert) = xor_construct(&hk, &inner.generator, 2, None).unwrap();
        assert_eq!(code.len(), 15);
        assert_eq!(code.length(), 12);
        assert_eq!(cert.claimed, 3);
        match cert.mode {
            VerificationMode::Exhaustive { verified } => assert!(verified.at_least(3)),
            VerificationMode::ClaimedOnly => panic!("expected exhaustive verification"),
        }
    }

    #[test]
    fn xor_dimension_mismatch() {
        let hk = bch_parity_check(4, 2, None).unwrap();
        let g = BinMatrix::identity(7);
        assert!(matches!(
            xor_construct(&hk, &g, 2, None),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn xor_rejects_weak_parity_check() {
        // Hamming parity check has distance 3 < 5.
        let hk = BinMatrix::parse("0001111\n0110011\n1010101").unwrap();
        let err = xor_construct(&hk, &BinMatrix::identity(3), 2, None).unwrap_err();
        assert!(matches!(err, Error::Construction(_)));
    }

    #[test]
    fn xor_word_count_equals_columns() {
        for m in [3u32, 4] {
            let hk = bch_parity_check(m, 2, None).unwrap();
            let g = BinMatrix::identity(hk.rows());
            let (code, _) = xor_construct(&hk, &g, 2, None).unwrap();
            assert_eq!(code.len(), hk.cols());
        }
    }

    #[test]
    fn greedy_6_3_2() {
        let p = greedy_packing(6, 3, 2).unwrap();
        assert_eq!(
            p.blocks,
            vec![vec![0, 1, 2], vec![0, 3, 4], vec![1, 3, 5], vec![2, 4, 5]]
        );
        assert!(p.is_valid());
        assert_eq!(
            p.to_string(),
            "2-(6,3,1) packing: {1,2,3} {1,4,5} {2,4,6} {3,5,6}"
        );
    }

    #[test]
    fn greedy_7_3_2_and_full_block() {
        let p = greedy_packing(7, 3, 2).unwrap();
        assert!(p.is_valid());
        assert!((4..=7).contains(&p.len()));
        let full = greedy_packing(5, 5, 3).unwrap();
        assert_eq!(full.blocks, vec![vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn greedy_always_valid() {
        for v in 1..=9 {
            for k in 1..=v {
                for t in 1..=k {
                    assert!(greedy_packing(v, k, t).unwrap().is_valid(), "({v},{k},{t})");
                }
            }
        }
        assert!(greedy_packing(3, 4, 2).is_err());
    }

    #[test]
    fn validator_catches_shared_pair() {
        let p = Packing {
            v: 5,
            k: 3,
            t: 2,
            blocks: vec![vec![0, 1, 2], vec![0, 1, 3]],
        };
        assert!(!p.is_valid());
    }

    #[test]
    fn eff_reference_values() {
        // C(7,1)/C(3,1)^2 = 7/9 -> 1
        assert_eq!(eff_reference_size(7, 3, 2), BigUint::from(1u32));
        assert_eq!(eff_reference_size(20, 4, 3), BigUint::from(6u32)); // 190/36
    }

    #[test]
    fn or_codes_from_packings() {
        for (v, k, t) in [(6, 3, 2), (7, 3, 2), (9, 4, 2), (8, 5, 2)] {
            let p = greedy_packing(v, k, t).unwrap();
            let (code, cert) = or_from_packing(&p, 2).unwrap();
            assert_eq!(code.len(), p.len());
            assert!(code.words().iter().all(|w| w.weight() == k));
            assert_eq!(cert.claimed, (k - 2 * (t - 1)) as u64);
            assert!(cert.is_exhaustive());
        }
        let single = greedy_packing(4, 4, 2).unwrap();
        let (code, cert) = or_from_packing(&single, 2).unwrap();
        assert_eq!(code.len(), 1);
        assert_eq!(
            cert.mode,
            VerificationMode::Exhaustive {
                verified: Distance::Infinite
            }
        );
    }

    #[test]
    fn or_rejects_nonpositive_claim() {
        let p = greedy_packing(6, 3, 3).unwrap();
        assert!(matches!(
            or_from_packing(&p, 2),
            Err(Error::Construction(_))
        ));
    }
}
