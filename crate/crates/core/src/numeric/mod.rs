//! Precision policy and the summation / quadrature kernels shared by every
//! other module.
//!
//! All kernels return a [`SeriesResult`]. When a kernel exhausts its term
//! budget it returns [`Error::NonConvergence`] carrying its best estimate.
//! Error estimates are heuristics (last term or last difference times a
//! safety factor of 4), never rigorous bounds.

mod alternating;
mod euler_maclaurin;
mod jet;
mod oscillatory;
mod quadrature;
mod trig;

pub use alternating::sum_alternating_accelerated;
pub use euler_maclaurin::{em_correction, sum_smooth};
pub use jet::Jet;
pub use oscillatory::{gauss_legendre, integrate_oscillatory, Oscillator};
pub use quadrature::{integrate_adaptive, Upper};
pub use trig::{sum_trig_averaged, Harmonic, Trig};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::real::Real;

/// Safety factor applied to last-term / last-difference error heuristics.
pub const ERR_SAFETY: u32 = 4;

const LOG2_10: f64 = std::f64::consts::LOG2_10;

#[derive(Clone, Debug)]
pub struct PrecisionConfig {
    digits: u32,
    guard_bits: u32,
    max_terms: u64,
    tolerance: Real,
}

impl Default for PrecisionConfig {
    fn default() -> Self {
        PrecisionConfig::new(30).expect("default precision is valid")
    }
}

impl PrecisionConfig {
    pub const DEFAULT_GUARD_BITS: u32 = 64;
    pub const DEFAULT_MAX_TERMS: u64 = 1_000_000;

    /// Target of `digits` decimal digits with default guard bits, term cap
    /// and tolerance `10^-digits`.
    pub fn new(digits: u32) -> Result<Self> {
        if digits < 10 {
            return Err(Error::Config(format!("digits must be >= 10, got {digits}")));
        }
        let guard_bits = Self::DEFAULT_GUARD_BITS;
        let prec = working_prec(digits, guard_bits);
        let tolerance = Real::from_i64(prec, 10).powi(-(digits as i32));
        Ok(PrecisionConfig { digits, guard_bits, max_terms: Self::DEFAULT_MAX_TERMS, tolerance })
    }

    pub fn with_guard_bits(mut self, guard_bits: u32) -> Self {
        self.guard_bits = guard_bits;
        self.tolerance = self.tolerance.with_prec(self.prec());
        self
    }

    pub fn with_max_terms(mut self, max_terms: u64) -> Result<Self> {
        if max_terms == 0 {
            return Err(Error::Config("max_terms must be >= 1".into()));
        }
        self.max_terms = max_terms;
        Ok(self)
    }

    pub fn with_tolerance(mut self, tolerance: Real) -> Result<Self> {
        if !tolerance.is_positive() {
            return Err(Error::Config("tolerance must be > 0".into()));
        }
        self.tolerance = tolerance.with_prec(self.prec());
        Ok(self)
    }

    pub fn with_tolerance_f64(self, tolerance: f64) -> Result<Self> {
        let prec = self.prec();
        self.with_tolerance(Real::from_f64(prec, tolerance))
    }

    /// Same precision, tolerance loosened to at least `tol`.
    pub fn loosened(&self, tol: f64) -> Self {
        let mut out = self.clone();
        if out.tolerance < tol {
            out.tolerance = Real::from_f64(self.prec(), tol);
        }
        out
    }

    /// Extra working bits on top of the current guard.
    pub fn raised(&self, extra_bits: u32) -> Self {
        self.clone().with_guard_bits(self.guard_bits + extra_bits)
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn guard_bits(&self) -> u32 {
        self.guard_bits
    }

    pub fn max_terms(&self) -> u64 {
        self.max_terms
    }

    pub fn tolerance(&self) -> &Real {
        &self.tolerance
    }

    /// Working precision in bits: `digits * log2(10) + guard_bits`.
    pub fn prec(&self) -> u32 {
        working_prec(self.digits, self.guard_bits)
    }

    pub fn real(&self, v: f64) -> Real {
        Real::from_f64(self.prec(), v)
    }

    pub fn int(&self, v: i64) -> Real {
        Real::from_i64(self.prec(), v)
    }

    pub fn ratio(&self, num: i64, den: i64) -> Real {
        Real::from_ratio(self.prec(), num, den)
    }

    pub fn zero(&self) -> Real {
        Real::zero(self.prec())
    }

    pub fn one(&self) -> Real {
        Real::one(self.prec())
    }

    pub fn pi(&self) -> Real {
        Real::pi(self.prec())
    }

    pub fn euler_gamma(&self) -> Real {
        Real::euler_gamma(self.prec())
    }

    pub fn ln2(&self) -> Real {
        Real::ln2(self.prec())
    }
}

fn working_prec(digits: u32, guard_bits: u32) -> u32 {
    (digits as f64 * LOG2_10).ceil() as u32 + guard_bits
}

#[derive(Clone, Debug, Serialize)]
pub struct SeriesResult {
    pub value: Real,
    pub err_estimate: Real,
    pub terms_used: u64,
    pub converged: bool,
}

impl SeriesResult {
    pub fn exact(value: Real) -> SeriesResult {
        let err = Real::zero(value.prec());
        SeriesResult { value, err_estimate: err, terms_used: 0, converged: true }
    }

    /// `Ok(self)` when converged, `NonConvergence` otherwise.
    pub fn checked(self) -> Result<SeriesResult> {
        if self.converged {
            Ok(self)
        } else {
            Err(Error::NonConvergence(Box::new(self)))
        }
    }

    /// Applies `f` to the value, keeping bookkeeping intact.
    pub fn map(self, f: impl FnOnce(Real) -> Real) -> SeriesResult {
        SeriesResult { value: f(self.value), ..self }
    }

    /// Combines two results additively (errors add, terms add).
    pub fn combine(self, other: SeriesResult, f: impl FnOnce(Real, Real) -> Real) -> SeriesResult {
        SeriesResult {
            value: f(self.value, other.value),
            err_estimate: self.err_estimate + other.err_estimate,
            terms_used: self.terms_used + other.terms_used,
            converged: self.converged && other.converged,
        }
    }
}
