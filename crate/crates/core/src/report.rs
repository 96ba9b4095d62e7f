//! Machine-readable outcome of a single identity check.

use serde::Serialize;

use crate::real::Real;

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    /// Stable identifier, e.g. `"eq-2.9-shift"`.
    pub id: String,
    pub lhs: Real,
    pub rhs: Real,
    pub residual: Real,
    pub tolerance: Real,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<Real>,
    pub meta: String,
    /// Set when the right-hand side deliberately reproduces a form known to
    /// be misprinted; such a report is expected to fail and does not count
    /// against a validation run.
    pub known_discrepancy: bool,
}

/// Reports produced by the trigonometric-series checks share the same shape.
pub type FourierIdentityReport = IdentityReport;

impl IdentityReport {
    /// Builds a report with `residual = |lhs − rhs|` and
    /// `pass ⇔ residual ≤ tolerance`.
    pub fn new(id: impl Into<String>, lhs: Real, rhs: Real, tolerance: f64) -> IdentityReport {
        let prec = lhs.prec().max(rhs.prec());
        let tolerance = Real::from_f64(prec, tolerance);
        let residual = (&lhs - &rhs).abs();
        let pass = residual <= tolerance;
        IdentityReport { id: id.into(), lhs, rhs, residual, tolerance, pass, x: None, meta: String::new(), known_discrepancy: false }
    }

    pub fn at(mut self, x: &Real) -> IdentityReport {
        self.x = Some(x.clone());
        self
    }

    pub fn with_meta(mut self, meta: impl Into<String>) -> IdentityReport {
        self.meta = meta.into();
        self
    }

    /// Marks the report as reproducing a known misprint and records why.
    pub fn known_discrepancy(mut self, note: &str) -> IdentityReport {
        self.known_discrepancy = true;
        self.meta = if self.meta.is_empty() {
            format!("paper-discrepancy: {note}")
        } else {
            format!("paper-discrepancy: {note}; {}", self.meta)
        };
        self
    }

    /// `true` when the outcome is the expected one: a pass, or a failure of
    /// a report marked with [`IdentityReport::known_discrepancy`].
    pub fn as_expected(&self) -> bool {
        self.pass != self.known_discrepancy
    }

    /// Forces a failing verdict (used when a side condition of the identity,
    /// such as a sign requirement, does not hold).
    pub fn fail_with(mut self, why: &str) -> IdentityReport {
        self.pass = false;
        if self.meta.is_empty() {
            self.meta = why.to_string();
        } else {
            self.meta = format!("{}; {why}", self.meta);
        }
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_iff_residual_within_tolerance() {
        let a = Real::from_f64(128, 1.0);
        let b = Real::from_f64(128, 1.0 + 1e-9);
        assert!(IdentityReport::new("t", a.clone(), b.clone(), 1e-8).pass);
        assert!(!IdentityReport::new("t", a, b, 1e-10).pass);
    }

    #[test]
    fn serializes_values_as_strings() {
        let r = IdentityReport::new("t", Real::from_f64(128, 0.5), Real::from_f64(128, 0.5), 1e-8)
            .at(&Real::from_f64(128, 0.25))
            .with_meta("note");
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["lhs"], "0.5");
        assert_eq!(json["x"], "0.25");
        assert_eq!(json["pass"], true);
    }
}
