//! Construction, verification, counting and rate bounds for λ-ADD
//! group-testing codes and their OR, XOR and ADD specializations.

pub mod construct;
pub mod counting;
pub mod decode;
pub mod error;
pub mod hypergraph;
pub mod io;
pub mod linalg;
pub mod measure;
pub mod metric;
pub mod rates;

pub use error::{Error, Result};
pub use measure::{boxplus, l1_scaled, measure, Lambda, Measurement, MeasurementKind, Word};
pub use metric::{
    check_distance_chain, code_distance, ChainReport, Code, Distance, DistanceReport,
};
