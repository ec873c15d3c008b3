use std::fmt;

use crate::error::{Error, Result};

/// Dense matrix over GF(2), rows packed into 64-bit blocks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<u64>>,
}

fn blocks(cols: usize) -> usize {
    cols.div_ceil(64).max(1)
}

impl BinMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BinMatrix {
            rows,
            cols,
            data: vec![vec![0; blocks(cols)]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BinMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from explicit rows of 0/1 entries.
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = BinMatrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} columns, expected {cols}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v > 1 {
                    return Err(Error::InvalidBit(char::from(b'0' + v.min(9))));
                }
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r},{c}) out of bounds"
        );
        ((self.data[r][c / 64] >> (c % 64)) & 1) as u8
    }

    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r},{c}) out of bounds"
        );
        let mask = 1u64 << (c % 64);
        if v & 1 == 1 {
            self.data[r][c / 64] |= mask;
        } else {
            self.data[r][c / 64] &= !mask;
        }
    }

    pub fn row(&self, r: usize) -> Vec<u8> {
        (0..self.cols).map(|c| self.get(r, c)).collect()
    }

    pub fn column(&self, c: usize) -> Vec<u8> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub(crate) fn packed_row(&self, r: usize) -> &[u64] {
        &self.data[r]
    }

    pub fn transpose(&self) -> BinMatrix {
        let mut t = BinMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) == 1 {
                    t.set(c, r, 1);
                }
            }
        }
        t
    }

    pub fn mul(&self, other: &BinMatrix) -> Result<BinMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = BinMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                if self.get(r, k) == 1 {
                    for (o, x) in out.data[r].iter_mut().zip(&other.data[k]) {
                        *o ^= x;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix: the XOR of the rows selected by `v`.
    pub fn left_mul_vec(&self, v: &[u8]) -> Result<Vec<u8>> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} rows",
                v.len(),
                self.rows
            )));
        }
        let mut acc = vec![0u64; blocks(self.cols)];
        for (r, &bit) in v.iter().enumerate() {
            if bit == 1 {
                for (a, x) in acc.iter_mut().zip(&self.data[r]) {
                    *a ^= x;
                }
            }
        }
        Ok((0..self.cols)
            .map(|c| ((acc[c / 64] >> (c % 64)) & 1) as u8)
            .collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|row| row.iter().all(|&b| b == 0))
    }

    /// Reduced row echelon form and the pivot column of each nonzero row.
    pub fn rref(&self) -> (BinMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| m.get(i, c) == 1) else {
                continue;
            };
            m.data.swap(r, p);
            for i in 0..self.rows {
                if i != r && m.get(i, c) == 1 {
                    let (src, dst) = if i < r {
                        let (lo, hi) = m.data.split_at_mut(r);
                        (&hi[0], &mut lo[i])
                    } else {
                        let (lo, hi) = m.data.split_at_mut(i);
                        (&lo[r], &mut hi[0])
                    };
                    for (d, s) in dst.iter_mut().zip(src.iter()) {
                        *d ^= s;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : self · xᵀ = 0}`, one basis vector per row.
    pub fn nullspace(&self) -> BinMatrix {
        let (red, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = BinMatrix::zeros(free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            basis.set(k, f, 1);
            for (i, &p) in pivots.iter().enumerate() {
                if red.get(i, f) == 1 {
                    basis.set(k, p, 1);
                }
            }
        }
        basis
    }

    /// The first `n` columns.
    pub fn truncate_columns(&self, n: usize) -> BinMatrix {
        let mut out = BinMatrix::zeros(self.rows, n);
        for r in 0..self.rows {
            for c in 0..n.min(self.cols) {
                out.set(r, c, self.get(r, c));
            }
        }
        out
    }

    /// Parses the plain-text matrix format: one row of '0'/'1' per line,
    /// blank lines and lines starting with '#' ignored.
    pub fn parse(text: &str) -> Result<BinMatrix> {
        let mut rows = Vec::new();
        let mut width = None;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let row = line
                .chars()
                .map(|ch| match ch {
                    '0' => Ok(0u8),
                    '1' => Ok(1u8),
                    other => Err(Error::Parse {
                        line: lineno + 1,
                        msg: format!("unexpected character {other:?}"),
                    }),
                })
                .collect::<Result<Vec<u8>>>()?;
            match width {
                None => width = Some(row.len()),
                Some(w) if w != row.len() => {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        msg: format!("row has {} columns, expected {w}", row.len()),
                    })
                }
                _ => {}
            }
            rows.push(row);
        }
        BinMatrix::from_rows(&rows)
    }

    /// Serializes in the format read by [`BinMatrix::parse`].
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in 0..self.rows {
            for c in 0..self.cols {
                s.push(if self.get(r, c) == 1 { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }
}

impl fmt::Debug for BinMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinMatrix {}x{}", self.rows, self.cols)?;
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&str]) -> BinMatrix {
        BinMatrix::parse(&rows.join("\n")).unwrap()
    }

    #[test]
    fn rank_and_nullspace() {
        let h = m(&["1110100", "0111010", "1101001"]);
        assert_eq!(h.rank(), 3);
        let g = h.nullspace();
        assert_eq!(g.rows(), 4);
        assert!(h.mul(&g.transpose()).unwrap().is_zero());
        assert_eq!(g.rank(), 4);
    }

    #[test]
    fn dependent_rows() {
        let a = m(&["110", "011", "101"]);
        assert_eq!(a.rank(), 2);
        assert_eq!(a.nullspace().row(0), vec![1, 1, 1]);
    }

    #[test]
    fn parse_skips_comments_and_rejects_ragged() {
        let a = BinMatrix::parse("# header\n101\n\n010\n").unwrap();
        assert_eq!((a.rows(), a.cols()), (2, 3));
        assert!(matches!(
            BinMatrix::parse("10\n101"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            BinMatrix::parse("1x1"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn wide_matrices_cross_block_boundaries() {
        let mut a = BinMatrix::zeros(2, 130);
        a.set(0, 0, 1);
        a.set(0, 129, 1);
        a.set(1, 64, 1);
        assert_eq!(a.rank(), 2);
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(a.nullspace().rows(), 128);
    }

    proptest! {
        #[test]
        fn text_round_trip_and_kernel(bits in proptest::collection::vec(proptest::collection::vec(0u8..=1, 9), 1..6)) {
            let a = BinMatrix::from_rows(&bits).unwrap();
            prop_assert_eq!(BinMatrix::parse(&a.to_text()).unwrap(), a.clone());
            let ns = a.nullspace();
            prop_assert_eq!(ns.rows() + a.rank(), 9);
            if ns.rows() > 0 {
                prop_assert!(a.mul(&ns.transpose()).unwrap().is_zero());
            }
        }
    }
}
