use crate::error::{Error, Result};

/// Built-in primitive polynomials for m = 1..=16, bit i holding the
/// coefficient of x^i.
pub const PRIMITIVE_POLYS: [u32; 16] = [
    0x3, 0x7, 0xB, 0x13, 0x25, 0x43, 0x83, 0x11D, 0x211, 0x409, 0x805, 0x1053, 0x201B, 0x4443,
    0x8003, 0x1100B,
];

pub const MAX_DEGREE: u32 = 16;

/// GF(2^m) with exp/log tables for a primitive element α.
///
/// Elements are bit vectors of length m in the polynomial basis
/// 1, α, …, α^(m-1).
#[derive(Debug, Clone)]
pub struct Gf2mField {
    m: u32,
    poly: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

fn degree(p: u32) -> u32 {
    31 - p.leading_zeros()
}

fn poly_rem(mut a: u32, b: u32) -> u32 {
    let db = degree(b);
    while a != 0 && degree(a) >= db {
        a ^= b << (degree(a) - db);
    }
    a
}

impl Gf2mField {
    /// Field from the built-in table.
    pub fn with_default_poly(m: u32) -> Result<Self> {
        if !(1..=MAX_DEGREE).contains(&m) {
            return Err(Error::OutOfRange(format!(
                "extension degree {m} not in 1..=16"
            )));
        }
        Gf2mField::new(m, PRIMITIVE_POLYS[m as usize - 1])
    }

    /// Builds the field, rejecting reducible polynomials with a proper factor
    /// and non-primitive ones with the order of α.
    pub fn new(m: u32, poly: u32) -> Result<Self> {
        if !(1..=MAX_DEGREE).contains(&m) {
            return Err(Error::OutOfRange(format!(
                "extension degree {m} not in 1..=16"
            )));
        }
        if poly == 0 || degree(poly) != m {
            return Err(Error::OutOfRange(format!(
                "polynomial {poly:#b} does not have degree {m}"
            )));
        }
        for f in 2u32..(1 << (m / 2 + 1)) {
            if degree(f) > m / 2 {
                break;
            }
            if poly_rem(poly, f) == 0 {
                return Err(Error::ReduciblePolynomial {
                    degree: m,
                    factor: f,
                });
            }
        }
        let order = (1u32 << m) - 1;
        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![u32::MAX; 1 << m];
        let mut x = 1u32;
        for i in 0..order {
            if i > 0 && x == 1 {
                return Err(Error::NonPrimitivePolynomial {
                    order: i,
                    expected: order,
                });
            }
            exp.push(x);
            log[x as usize] = i;
            x <<= 1;
            if x >> m & 1 == 1 {
                x ^= poly;
            }
        }
        debug_assert_eq!(x, 1);
        Ok(Gf2mField { m, poly, exp, log })
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn poly(&self) -> u32 {
        self.poly
    }

    /// Number of nonzero elements, 2^m - 1.
    pub fn order(&self) -> u32 {
        self.exp.len() as u32
    }

    /// α^e for any integer exponent.
    pub fn alpha_pow(&self, e: i64) -> u32 {
        self.exp[e.rem_euclid(self.order() as i64) as usize]
    }

    pub fn log(&self, x: u32) -> Option<u32> {
        (x != 0).then(|| self.log[x as usize])
    }

    pub fn mul(&self, x: u32, y: u32) -> u32 {
        if x == 0 || y == 0 {
            return 0;
        }
        let e = (self.log[x as usize] + self.log[y as usize]) % self.order();
        self.exp[e as usize]
    }

    pub fn inv(&self, x: u32) -> Option<u32> {
        let l = self.log(x)?;
        Some(self.exp[((self.order() - l) % self.order()) as usize])
    }
}
