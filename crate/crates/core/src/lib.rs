//! Generalized Stieltjes constants, the Hurwitz zeta function and related
//! special functions at configurable precision.

pub mod combinatorics;
pub mod error;
pub mod fourier;
pub mod gamma;
pub mod hurwitz;
pub mod numeric;
pub mod oracle;
pub mod real;
pub mod report;
pub mod stieltjes;
pub mod suite;

pub use error::{Error, Result};
pub use numeric::{PrecisionConfig, SeriesResult};
pub use real::Real;

/// Version of this crate, recorded in report metadata.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
