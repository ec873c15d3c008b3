//! Binary words, the rational parameter λ, and the coordinatewise
//! measurement rules (OR, XOR, ADD and λ-ADD).
//!
//! Every measurement is carried as an integer vector at a fixed scale: for
//! λ = a/b the λ-ADD values 0, 1 and λ are stored as 0, b and a, and OR, XOR
//! and ADD use scale 1. Distances computed from these vectors are therefore
//! exact integers equal to `scale` times the real ℓ1 distance.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A fixed-length binary string. Coordinate 0 is the most significant one.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    bits: Vec<u8>,
}

impl Word {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::InvalidBit(char::from(b'0' + bad.min(9))));
        }
        Ok(Word { bits })
    }

    pub fn zeros(n: usize) -> Self {
        Word { bits: vec![0; n] }
    }

    /// The word whose bits are the binary expansion of `value`, most
    /// significant coordinate first.
    pub fn from_index(value: u64, n: usize) -> Self {
        let bits = (0..n).map(|i| ((value >> (n - 1 - i)) & 1) as u8).collect();
        Word { bits }
    }

    /// Inverse of [`Word::from_index`]. Only meaningful for `len() <= 64`.
    pub fn to_index(&self) -> u64 {
        self.bits.iter().fold(0u64, |acc, &b| (acc << 1) | b as u64)
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn bit(&self, i: usize) -> u8 {
        self.bits[i]
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }

    pub fn hamming(&self, other: &Word) -> usize {
        self.bits
            .iter()
            .zip(&other.bits)
            .filter(|(a, b)| a != b)
            .count()
    }

    /// Applies a coordinate permutation: output coordinate `i` takes input
    /// coordinate `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Word {
        Word {
            bits: perm.iter().map(|&p| self.bits[p]).collect(),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::InvalidBit(other)),
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(Word { bits })
    }
}

/// λ = a/b in lowest terms with 1 < a/b ≤ 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Lambda {
    a: i64,
    b: i64,
}

impl Lambda {
    /// λ = 2, the plain ADD rule.
    pub const TWO: Lambda = Lambda { a: 2, b: 1 };

    pub fn new(a: i64, b: i64) -> Result<Self> {
        if b < 1 || a <= b || a > 2 * b {
            return Err(Error::InvalidLambda(format!(
                "{a}/{b}: need b >= 1 and 1 < a/b <= 2"
            )));
        }
        if a.gcd(&b) != 1 {
            return Err(Error::InvalidLambda(format!(
                "{a}/{b} is not in lowest terms"
            )));
        }
        Ok(Lambda { a, b })
    }

    pub fn numer(&self) -> i64 {
        self.a
    }

    pub fn denom(&self) -> i64 {
        self.b
    }

    pub fn value(&self) -> f64 {
        self.a as f64 / self.b as f64
    }
}

impl fmt::Display for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.a, self.b)
    }
}

impl FromStr for Lambda {
    type Err = Error;

    /// Accepts only `a/b` with integer parts; decimals are rejected.
    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .trim()
            .split_once('/')
            .ok_or_else(|| Error::InvalidLambda(format!("{s:?}: expected the form a/b")))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidLambda(format!("{s:?}: {t:?} is not an integer")))
        };
        Lambda::new(parse(a)?, parse(b)?)
    }
}

/// The bit-combining rule used by a measurement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MeasurementKind {
    Or,
    Xor,
    Add,
    LambdaAdd(Lambda),
}

impl MeasurementKind {
    /// Integer scale of the measurement lattice.
    pub fn scale(&self) -> i64 {
        match self {
            MeasurementKind::LambdaAdd(lam) => lam.denom(),
            _ => 1,
        }
    }

    /// Largest subset size the rule is defined for.
    pub fn max_arity(&self) -> usize {
        match self {
            MeasurementKind::LambdaAdd(_) => 2,
            _ => usize::MAX,
        }
    }

    /// Scaled value of a coordinate in which `ones` of the pooled bits are set.
    pub fn coordinate_value(&self, ones: usize) -> i64 {
        match self {
            MeasurementKind::Or => (ones > 0) as i64,
            MeasurementKind::Xor => (ones % 2) as i64,
            MeasurementKind::Add => ones as i64,
            MeasurementKind::LambdaAdd(lam) => match ones {
                0 => 0,
                1 => lam.denom(),
                _ => lam.numer(),
            },
        }
    }
}

impl fmt::Display for MeasurementKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeasurementKind::Or => f.write_str("or"),
            MeasurementKind::Xor => f.write_str("xor"),
            MeasurementKind::Add => f.write_str("add"),
            MeasurementKind::LambdaAdd(lam) => write!(f, "lambda-add({lam})"),
        }
    }
}

/// An integer vector at scale `scale`; entry `i` is `scale` times the real
/// measured value of coordinate `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Measurement {
    pub entries: Vec<i64>,
    pub scale: i64,
}

impl Measurement {
    pub fn new(entries: Vec<i64>, scale: i64) -> Self {
        Measurement { entries, scale }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// `x ⊞_λ y` at scale b: 0, b or a.
pub fn boxplus(x: u8, y: u8, lam: Lambda) -> i64 {
    MeasurementKind::LambdaAdd(lam).coordinate_value((x + y) as usize)
}

/// Measures a nonempty set of words under `kind`.
pub fn measure<'a, I>(words: I, kind: MeasurementKind) -> Result<Measurement>
where
    I: IntoIterator<Item = &'a Word>,
{
    let words: Vec<&Word> = words.into_iter().collect();
    let first = words
        .first()
        .ok_or_else(|| Error::OutOfRange("cannot measure an empty set".into()))?;
    if words.len() > kind.max_arity() {
        return Err(Error::UnsupportedArity {
            size: words.len(),
            max: kind.max_arity(),
        });
    }
    let n = first.len();
    if let Some(w) = words.iter().find(|w| w.len() != n) {
        return Err(Error::LengthMismatch {
            expected: n,
            found: w.len(),
        });
    }
    let entries = (0..n)
        .map(|i| {
            let ones = words.iter().filter(|w| w.bit(i) == 1).count();
            kind.coordinate_value(ones)
        })
        .collect();
    Ok(Measurement::new(entries, kind.scale()))
}

/// Scaled ℓ1 distance; divide by the common scale for the real value.
pub fn l1_scaled(m1: &Measurement, m2: &Measurement) -> Result<u64> {
    if m1.scale != m2.scale {
        return Err(Error::ScaleMismatch {
            left: m1.scale,
            right: m2.scale,
        });
    }
    if m1.len() != m2.len() {
        return Err(Error::LengthMismatch {
            expected: m1.len(),
            found: m2.len(),
        });
    }
    Ok(m1
        .entries
        .iter()
        .zip(&m2.entries)
        .map(|(x, y)| x.abs_diff(*y))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn lam(a: i64, b: i64) -> Lambda {
        Lambda::new(a, b).unwrap()
    }

    #[test]
    fn boxplus_table() {
        let l = lam(4, 3);
        assert_eq!(boxplus(1, 1, l), 4);
        assert_eq!(boxplus(0, 1, l), 3);
        assert_eq!(boxplus(1, 0, l), 3);
        assert_eq!(boxplus(0, 0, l), 0);
        assert_eq!(boxplus(0, 1, Lambda::TWO), 1);
    }

    #[test]
    fn measure_examples() {
        let s = [w("110"), w("011")];
        assert_eq!(
            measure(&s, MeasurementKind::Xor).unwrap().entries,
            vec![1, 0, 1]
        );
        assert_eq!(
            measure(&s, MeasurementKind::Or).unwrap().entries,
            vec![1, 1, 1]
        );
        let m = measure(&s, MeasurementKind::LambdaAdd(lam(4, 3))).unwrap();
        assert_eq!(m.entries, vec![3, 4, 3]);
        assert_eq!(m.scale, 3);
    }

    #[test]
    fn singleton_is_scaled_word() {
        let m = measure([&w("101")], MeasurementKind::LambdaAdd(lam(3, 2))).unwrap();
        assert_eq!(m.entries, vec![2, 0, 2]);
    }

    #[test]
    fn measure_errors() {
        let err = measure(&[w("10"), w("101")], MeasurementKind::Add).unwrap_err();
        assert!(matches!(err, Error::LengthMismatch { .. }));
        let err = measure(
            &[w("10"), w("01"), w("11")],
            MeasurementKind::LambdaAdd(Lambda::TWO),
        )
        .unwrap_err();
        assert!(matches!(err, Error::UnsupportedArity { size: 3, max: 2 }));
        // ADD, OR and XOR are defined for any arity.
        let m = measure(&[w("10"), w("01"), w("11")], MeasurementKind::Add).unwrap();
        assert_eq!(m.entries, vec![2, 2]);
    }

    #[test]
    fn l1_examples() {
        let a = Measurement::new(vec![3, 4, 3], 3);
        let b = Measurement::new(vec![3, 3, 0], 3);
        assert_eq!(l1_scaled(&a, &b).unwrap(), 4);
        let z = Measurement::new(vec![0, 0], 1);
        assert_eq!(l1_scaled(&z, &z).unwrap(), 0);
        assert_eq!(
            l1_scaled(&Measurement::new(vec![2], 1), &Measurement::new(vec![0], 1)).unwrap(),
            2
        );
        assert!(matches!(
            l1_scaled(&a, &Measurement::new(vec![3, 3, 0], 1)),
            Err(Error::ScaleMismatch { .. })
        ));
        assert!(matches!(
            l1_scaled(&a, &Measurement::new(vec![3, 3], 3)),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn lambda_parsing() {
        assert_eq!("4/3".parse::<Lambda>().unwrap(), lam(4, 3));
        assert_eq!("2/1".parse::<Lambda>().unwrap(), Lambda::TWO);
        assert!("1.5".parse::<Lambda>().is_err());
        assert!("6/4".parse::<Lambda>().is_err());
        assert!("1/1".parse::<Lambda>().is_err());
        assert!("5/2".parse::<Lambda>().is_err());
        assert!("3/0".parse::<Lambda>().is_err());
    }

    #[test]
    fn word_index_round_trip() {
        let x = Word::from_index(0b110, 3);
        assert_eq!(x, w("110"));
        assert_eq!(x.to_index(), 6);
        assert_eq!(x.to_string(), "110");
    }

    fn arb_bits(n: usize) -> impl Strategy<Value = Word> {
        proptest::collection::vec(0u8..=1, n).prop_map(|b| Word::new(b).unwrap())
    }

    fn arb_lambda() -> impl Strategy<Value = Lambda> {
        prop_oneof![
            Just(lam(2, 1)),
            Just(lam(3, 2)),
            Just(lam(4, 3)),
            Just(lam(5, 3))
        ]
    }

    proptest! {
        #[test]
        fn l1_symmetric_and_triangle(
            x in proptest::collection::vec(-5i64..5, 6),
            y in proptest::collection::vec(-5i64..5, 6),
            z in proptest::collection::vec(-5i64..5, 6),
        ) {
            let (x, y, z) = (Measurement::new(x, 1), Measurement::new(y, 1), Measurement::new(z, 1));
            prop_assert_eq!(l1_scaled(&x, &y).unwrap(), l1_scaled(&y, &x).unwrap());
            prop_assert!(l1_scaled(&x, &z).unwrap() <= l1_scaled(&x, &y).unwrap() + l1_scaled(&y, &z).unwrap());
        }

        #[test]
        fn lambda_two_is_integer_sum(x in arb_bits(7), y in arb_bits(7)) {
            let m = measure([&x, &y], MeasurementKind::LambdaAdd(Lambda::TWO)).unwrap();
            let sum: Vec<i64> = (0..7).map(|i| (x.bit(i) + y.bit(i)) as i64).collect();
            prop_assert_eq!(&m.entries, &sum);
            prop_assert_eq!(m, measure([&x, &y], MeasurementKind::Add).unwrap());
        }

        #[test]
        fn measure_permutation_invariant(x in arb_bits(5), y in arb_bits(5), l in arb_lambda(),
                                         perm in Just((0..5).collect::<Vec<usize>>()).prop_shuffle()) {
            for kind in [MeasurementKind::Or, MeasurementKind::Xor, MeasurementKind::Add, MeasurementKind::LambdaAdd(l)] {
                let m1 = measure([&x, &y], kind).unwrap();
                prop_assert_eq!(&m1, &measure([&y, &x], kind).unwrap());
                let mp = measure([&x.permuted(&perm), &y.permuted(&perm)], kind).unwrap();
                let expect: Vec<i64> = perm.iter().map(|&p| m1.entries[p]).collect();
                prop_assert_eq!(mp.entries, expect);
            }
        }

        #[test]
        fn boxplus_dominates_other_rules(x in 0u8..=1, y in 0u8..=1, l in arb_lambda()) {
            let (a, b) = (l.numer(), l.denom());
            let v = boxplus(x, y, l);
            prop_assert!(v - b * x.max(y) as i64 >= 0);
            prop_assert!(v >= b * (x ^ y) as i64);
            prop_assert!(v >= (a - b) * (x + y) as i64);
        }
    }
}
