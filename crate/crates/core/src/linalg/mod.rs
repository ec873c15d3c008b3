//! GF(2) and GF(2^m) linear algebra, BCH parity checks and a small catalog of
//! binary linear codes.

mod bch;
mod code;
mod field;
mod matrix;

pub use bch::{bch_parity_check, bch_parity_check_in};
pub use code::{
    catalog_family_code, catalog_inner_code, min_distance_bruteforce, CatalogFamily, LinearCode,
    MAX_BRUTE_FORCE_DIMENSION,
};
pub use field::{Gf2mField, MAX_DEGREE, PRIMITIVE_POLYS};
pub use matrix::BinMatrix;
