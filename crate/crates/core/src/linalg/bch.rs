use super::field::Gf2mField;
use super::matrix::BinMatrix;
use crate::error::{Error, Result};

/// Binary parity-check matrix of the narrow-sense BCH code of length
/// 2^m - 1 and designed distance 2t + 1, over the built-in field.
///
/// Column `j` stacks the binary expansions of α^j, α^(3j), …, α^((2t-1)j),
/// giving `m·t` rows (possibly dependent). With `shorten_to = Some(M)` only
/// the first `M` columns are kept.
pub fn bch_parity_check(m: u32, t: u32, shorten_to: Option<usize>) -> Result<BinMatrix> {
    let field = Gf2mField::with_default_poly(m)?;
    bch_parity_check_in(&field, t, shorten_to)
}

pub fn bch_parity_check_in(
    field: &Gf2mField,
    t: u32,
    shorten_to: Option<usize>,
) -> Result<BinMatrix> {
    let m = field.degree() as usize;
    let full = field.order() as usize;
    if t == 0 || 2 * t as usize + 1 > full {
        return Err(Error::OutOfRange(format!(
            "designed distance {} exceeds length {full}",
            2 * t + 1
        )));
    }
    let cols = shorten_to.unwrap_or(full);
    if cols == 0 || cols > full {
        return Err(Error::OutOfRange(format!(
            "shortened length {cols} not in 1..={full}"
        )));
    }
    let mut h = BinMatrix::zeros(m * t as usize, cols);
    for block in 0..t as usize {
        let power = 2 * block as i64 + 1;
        for j in 0..cols {
            let x = field.alpha_pow(power * j as i64);
            for r in 0..m {
                h.set(block * m + r, j, ((x >> r) & 1) as u8);
            }
        }
    }
    Ok(h)
}
