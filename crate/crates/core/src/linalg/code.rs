use std::fmt;

use super::bch::bch_parity_check;
use super::matrix::BinMatrix;
use crate::error::{Error, Result};

/// Largest dimension for which codewords are enumerated exhaustively.
pub const MAX_BRUTE_FORCE_DIMENSION: usize = 24;

/// A binary linear `[n, k, d]` code with both generator and parity check.
#[derive(Debug, Clone)]
pub struct LinearCode {
    pub n: usize,
    pub k: usize,
    /// Exact minimum distance when `d_exact`, otherwise the designed value.
    pub d_min: usize,
    pub d_exact: bool,
    pub generator: BinMatrix,
    pub parity_check: BinMatrix,
}

impl LinearCode {
    /// The code `{x : H xᵀ = 0}`; `designed_d` is recorded as the declared
    /// distance and replaced by the exact one when `k` permits.
    pub fn from_parity_check(h: BinMatrix, designed_d: usize) -> Result<Self> {
        let generator = h.nullspace();
        let k = generator.rows();
        if k == 0 {
            return Err(Error::Construction(
                "parity check defines the zero code".into(),
            ));
        }
        let mut code = LinearCode {
            n: h.cols(),
            k,
            d_min: designed_d,
            d_exact: false,
            generator,
            parity_check: h,
        };
        code.verify_distance();
        Ok(code)
    }

    /// The row space of a full-rank generator.
    pub fn from_generator(g: BinMatrix) -> Result<Self> {
        let k = g.rows();
        if k == 0 {
            return Err(Error::Construction("empty generator".into()));
        }
        if g.rank() != k {
            return Err(Error::DimensionMismatch(format!(
                "generator has {k} rows but rank {}",
                g.rank()
            )));
        }
        let parity_check = g.nullspace();
        let mut code = LinearCode {
            n: g.cols(),
            k,
            d_min: 0,
            d_exact: false,
            generator: g,
            parity_check,
        };
        code.verify_distance();
        Ok(code)
    }

    fn verify_distance(&mut self) {
        if self.k <= MAX_BRUTE_FORCE_DIMENSION {
            if let Ok(d) = min_distance_bruteforce(self) {
                self.d_min = d;
                self.d_exact = true;
            }
        }
    }

    pub fn encode(&self, message: &[u8]) -> Result<Vec<u8>> {
        self.generator.left_mul_vec(message)
    }
}

impl fmt::Display for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{},{},{}{}]",
            self.n,
            self.k,
            if self.d_exact { "" } else { ">=" },
            self.d_min
        )
    }
}

/// Exact minimum nonzero codeword weight, by Gray-code enumeration of all
/// `2^k - 1` nonzero messages.
pub fn min_distance_bruteforce(code: &LinearCode) -> Result<usize> {
    let k = code.generator.rows();
    if k == 0 {
        return Err(Error::OutOfRange(
            "dimension 0 has no nonzero codewords".into(),
        ));
    }
    if k > MAX_BRUTE_FORCE_DIMENSION {
        return Err(Error::GuardExceeded(format!(
            "dimension {k} exceeds brute-force limit {MAX_BRUTE_FORCE_DIMENSION}"
        )));
    }
    let g = &code.generator;
    let mut word = vec![0u64; g.packed_row(0).len()];
    let mut best = usize::MAX;
    for i in 1u64..(1 << k) {
        let flip = i.trailing_zeros() as usize;
        for (w, x) in word.iter_mut().zip(g.packed_row(flip)) {
            *w ^= x;
        }
        let weight: usize = word.iter().map(|b| b.count_ones() as usize).sum();
        best = best.min(weight);
    }
    Ok(best)
}

/// Which catalog family a code came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogFamily {
    Identity,
    Parity,
    ShortenedHamming,
    ShortenedExtendedHamming,
    ShortenedBch { t: u32 },
    Repetition,
}

impl CatalogFamily {
    pub fn designed_distance(&self, n: usize) -> usize {
        match self {
            CatalogFamily::Identity => 1,
            CatalogFamily::Parity => 2,
            CatalogFamily::ShortenedHamming => 3,
            CatalogFamily::ShortenedExtendedHamming => 4,
            CatalogFamily::ShortenedBch { t } => 2 * *t as usize + 1,
            CatalogFamily::Repetition => n,
        }
    }
}

/// Smallest r with 2^r - 1 ≥ n.
fn hamming_redundancy(n: usize) -> usize {
    let mut r = 1;
    while (1usize << r) - 1 < n {
        r += 1;
    }
    r
}

/// Parity check whose columns are the integers 1..=n written in r bits.
fn shortened_hamming_check(n: usize) -> BinMatrix {
    let r = hamming_redundancy(n);
    let mut h = BinMatrix::zeros(r, n);
    for j in 0..n {
        let v = j + 1;
        for i in 0..r {
            h.set(i, j, ((v >> (r - 1 - i)) & 1) as u8);
        }
    }
    h
}

fn family_parity_check(family: CatalogFamily, n: usize) -> Result<BinMatrix> {
    Ok(match family {
        CatalogFamily::Identity => BinMatrix::zeros(0, n),
        CatalogFamily::Parity => BinMatrix::from_rows(&[vec![1; n]])?,
        CatalogFamily::ShortenedHamming => shortened_hamming_check(n),
        CatalogFamily::ShortenedExtendedHamming => {
            if n < 2 {
                return Err(Error::OutOfRange("extended Hamming needs n >= 2".into()));
            }
            let inner = shortened_hamming_check(n - 1);
            let mut h = BinMatrix::zeros(inner.rows() + 1, n);
            for r in 0..inner.rows() {
                for c in 0..n - 1 {
                    h.set(r, c, inner.get(r, c));
                }
            }
            for c in 0..n {
                h.set(inner.rows(), c, 1);
            }
            h
        }
        CatalogFamily::ShortenedBch { t } => {
            let mut m = 2;
            while (1usize << m) - 1 < n.max(2 * t as usize + 1) {
                m += 1;
            }
            bch_parity_check(m as u32, t, Some(n))?
        }
        CatalogFamily::Repetition => {
            let mut h = BinMatrix::zeros(n.saturating_sub(1), n);
            for i in 0..n.saturating_sub(1) {
                h.set(i, 0, 1);
                h.set(i, i + 1, 1);
            }
            h
        }
    })
}

/// Builds one catalog family at length `n`, or `None` if it degenerates to
/// the zero code there.
pub fn catalog_family_code(family: CatalogFamily, n: usize) -> Result<Option<LinearCode>> {
    let h = match family_parity_check(family, n) {
        Ok(h) => h,
        Err(Error::OutOfRange(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    if n <= h.rank() {
        return Ok(None);
    }
    LinearCode::from_parity_check(h, family.designed_distance(n)).map(Some)
}

const CATALOG: [CatalogFamily; 7] = [
    CatalogFamily::Identity,
    CatalogFamily::Parity,
    CatalogFamily::ShortenedHamming,
    CatalogFamily::ShortenedExtendedHamming,
    CatalogFamily::ShortenedBch { t: 2 },
    CatalogFamily::ShortenedBch { t: 3 },
    CatalogFamily::Repetition,
];

/// The catalog code of length `n` with minimum distance at least `d` and the
/// largest dimension. Ties keep the earlier family in catalog order.
pub fn catalog_inner_code(n: usize, d: usize) -> Result<(CatalogFamily, LinearCode)> {
    if d == 0 || d > n {
        return Err(Error::OutOfRange(format!(
            "need 1 <= d <= n, got n={n}, d={d}"
        )));
    }
    let mut best: Option<(CatalogFamily, LinearCode)> = None;
    for family in CATALOG {
        if family.designed_distance(n) < d {
            continue;
        }
        let Some(code) = catalog_family_code(family, n)? else {
            continue;
        };
        if code.d_min < d {
            continue;
        }
        if best.as_ref().is_none_or(|(_, b)| code.k > b.k) {
            best = Some((family, code));
        }
    }
    best.ok_or(Error::UnsupportedCatalog { n, d })
}
