//! log Γ, digamma and polygamma on the positive real axis.
//!
//! `log Γ` and `ψ` come from their Weierstrass-product series, summed
//! directly up to a cut and completed with an Euler–Maclaurin tail whose
//! integral and derivatives are known in closed form.

use crate::error::{Error, Result};
use crate::hurwitz;
use crate::numeric::{em_correction, integrate_adaptive, integrate_oscillatory, Jet, Oscillator, PrecisionConfig, SeriesResult, Upper};
use crate::real::Real;
use crate::report::IdentityReport;

/// An argument together with the precision to evaluate at.
#[derive(Clone, Debug)]
pub struct GammaEvalRequest {
    pub x: Real,
    pub cfg: PrecisionConfig,
}

impl GammaEvalRequest {
    pub fn new(x: Real, cfg: PrecisionConfig) -> GammaEvalRequest {
        GammaEvalRequest { x, cfg }
    }

    pub fn log_gamma(&self) -> Result<Real> {
        log_gamma(&self.x, &self.cfg)
    }

    pub fn digamma(&self) -> Result<Real> {
        digamma(&self.x, &self.cfg)
    }

    pub fn polygamma(&self, k: u32) -> Result<Real> {
        polygamma(k, &self.x, &self.cfg)
    }
}

fn positive_arg(x: &Real, what: &str, prec: u32) -> Result<Real> {
    if !x.is_finite() || !x.is_positive() {
        return Err(Error::domain(format!("{what} needs x > 0, got {x}")));
    }
    Ok(x.with_prec(prec))
}

/// Number of Taylor coefficients handed to the Euler–Maclaurin correction.
fn em_order(prec: u32) -> usize {
    prec as usize / 2 + 21
}

/// `Σ_{n ≥ 1} term(n)` given the summand, its Taylor jet at the cut and the
/// tail integral from the cut to infinity.
fn em_sum<T, J, I>(term: T, jet_at: J, integral_from: I, cfg: &PrecisionConfig) -> Result<Real>
where
    T: Fn(u64) -> Real,
    J: Fn(&Real, usize) -> Jet,
    I: Fn(&Real) -> Real,
{
    let prec = cfg.prec();
    let order = em_order(prec);
    let mut cut = (prec as u64 * 3 / 25).max(16);
    let mut head = Real::zero(prec);
    let mut next = 1u64;
    for _ in 0..10 {
        while next < cut {
            head += term(next);
            next += 1;
        }
        let n = Real::from_u64(prec, cut);
        let corr = em_correction(&jet_at(&n, order), cfg.tolerance());
        if corr.converged {
            return Ok(head + integral_from(&n) + corr.value);
        }
        cut *= 2;
    }
    Err(Error::NonConvergence(Box::new(SeriesResult {
        value: head,
        err_estimate: Real::from_f64(prec, f64::INFINITY),
        terms_used: next,
        converged: false,
    })))
}

/// `log Γ(x)` for `x > 0` from the Weierstrass product
/// `log Γ(x) = −γx − log x + Σ_{n≥1} [x/n − log(1 + x/n)]`.
pub fn log_gamma(x: &Real, cfg: &PrecisionConfig) -> Result<Real> {
    let prec = cfg.prec();
    let x = positive_arg(x, "log_gamma", prec)?;
    if x == 1.0 || x == 2.0 {
        return Ok(Real::zero(prec));
    }
    // h(t) = log(1 + x/t) − x/t, summed and then negated.
    let h_sum = em_sum(
        |n| {
            let r = &x / n;
            r.ln_1p() - r
        },
        |t, order| {
            let tx = t + &x;
            let inv_t = t.recip();
            let inv_tx = tx.recip();
            let mut c = Vec::with_capacity(order + 1);
            let r = &x * &inv_t;
            c.push(r.ln_1p() - &r);
            // h^(k)/k! = (−1)^{k−1}/k·[(t+x)^{−k} − t^{−k}] − x(−1)^k t^{−k−1}
            let mut pt = inv_t.clone();
            let mut ptx = inv_tx.clone();
            for k in 1..=order {
                let mut v = (&ptx - &pt) / k as u64;
                if k % 2 == 0 {
                    v = -v;
                }
                let w = &x * &pt * &inv_t;
                let v = if k % 2 == 0 { v - w } else { v + w };
                c.push(v);
                pt *= &inv_t;
                ptx *= &inv_tx;
            }
            Jet::from_coeffs(c)
        },
        |n| &x - (n + &x) * (&x / n).ln_1p(),
        cfg,
    )?;
    Ok(-(Real::euler_gamma(prec) * &x) - x.ln() - h_sum)
}

/// `ψ(x) = −γ − 1/x + Σ_{n≥1} [1/n − 1/(n+x)]` for `x > 0`.
pub fn digamma(x: &Real, cfg: &PrecisionConfig) -> Result<Real> {
    let prec = cfg.prec();
    let x = positive_arg(x, "digamma", prec)?;
    let sum = em_sum(
        |n| &x / (Real::from_u64(prec, n) * (&x + n)),
        |t, order| {
            let inv_t = t.recip();
            let inv_tx = (t + &x).recip();
            let mut pt = inv_t.clone();
            let mut ptx = inv_tx.clone();
            let mut c = Vec::with_capacity(order + 1);
            // f^(k)/k! = (−1)^k [t^{−k−1} − (t+x)^{−k−1}]
            for k in 0..=order {
                let v = &pt - &ptx;
                c.push(if k % 2 == 0 { v } else { -v });
                pt *= &inv_t;
                ptx *= &inv_tx;
            }
            Jet::from_coeffs(c)
        },
        |n| (&x / n).ln_1p(),
        cfg,
    )?;
    Ok(sum - Real::euler_gamma(prec) - x.recip())
}

/// `ψ^(k)(x) = (−1)^{k+1} k! ζ(k+1, x)` for `k ≥ 1`.
pub fn polygamma(k: u32, x: &Real, cfg: &PrecisionConfig) -> Result<Real> {
    if k == 0 {
        return digamma(x, cfg);
    }
    let prec = cfg.prec();
    let x = positive_arg(x, "polygamma", prec)?;
    let z = hurwitz::hurwitz_zeta(&Real::from_u64(prec, k as u64 + 1), &x, cfg)?;
    let mut factorial = Real::one(prec);
    for i in 2..=k as u64 {
        factorial *= i;
    }
    let v = z * factorial;
    Ok(if k % 2 == 0 { -v } else { v })
}

/// Checks `ψ(x) − log x = −∫₀¹ u^{x−1} [1/log u + 1/(1−u)] du`, and that the
/// common value is negative.
///
/// The bracket is the one obtained by summing `Σ_{n≥1} 1/(n+1) ∫₀¹ u^{x−1}
/// (1−u)^n/log u du`; it tends to `−½` at `u = 1`, so the integrand is
/// bounded there.
pub fn digamma_integral_check(x: &Real, cfg: &PrecisionConfig) -> Result<IdentityReport> {
    let prec = cfg.prec();
    let x = positive_arg(x, "digamma_integral_check", prec)?;
    let xm1 = &x - 1i64;
    let lhs = integrate_adaptive(
        |u| {
            // Both terms grow like 1/(1−u) near u = 1; u itself is exact, so
            // twice the working precision absorbs the cancellation.
            let wide = u.with_prec(2 * prec + 32);
            let one_minus = Real::one(2 * prec + 32) - &wide;
            let bracket = (-(wide.ln().recip()) - one_minus.recip()).with_prec(prec);
            Ok(if xm1.is_zero() { bracket } else { u.powr(&xm1) * bracket })
        },
        &Real::zero(prec),
        &Upper::Finite(Real::one(prec)),
        cfg,
    )?
    .value;
    let rhs = digamma(&x, cfg)? - x.ln();
    let report = IdentityReport::new("digamma-log-integral", lhs, rhs, 1e-10).at(&x);
    Ok(if report.lhs.is_negative() { report } else { report.fail_with("integral is not negative") })
}

/// `log Γ(x)` from the oscillatory-integral representation
///
/// ```text
/// log Γ(x) = ½ log 2π + (x − ½) log x − x + (1/π) Σ_{n≥1} (1/n) ∫₀^∞ sin(2πnt)/(x+t) dt
/// ```
///
/// The first `n_terms` integrals are evaluated by oscillatory quadrature.
/// The remaining ones follow from repeated integration by parts,
/// `∫₀^∞ g(t) sin ωt dt ~ Σ_j (−1)^j g^(2j)(0)/ω^{2j+1}` with
/// `g^(2j)(0) = (2j)!/x^{2j+1}`, and are summed over `n` in closed form
/// through `ζ(2j+2, N+1)`. Verification grade only (about `1e-6`).
pub fn bourguet_log_gamma(x: &Real, n_terms: u64, cfg: &PrecisionConfig) -> Result<SeriesResult> {
    let prec = cfg.prec();
    let x = positive_arg(x, "bourguet_log_gamma", prec)?;
    let quad_cfg = cfg.loosened(1e-12);
    let pi = Real::pi(prec);
    let two_pi = pi.mul_2si(1);

    let mut series = Real::zero(prec);
    let mut terms = 0u64;
    for n in 1..=n_terms {
        let freq = &two_pi * n;
        let r = integrate_oscillatory(|t| Ok((t + &x).recip()), &freq, &Real::zero(prec), Oscillator::Sin, &quad_cfg)?;
        series += r.value / n;
        terms += r.terms_used;
    }

    // Σ_{n>N} (1/n) Σ_j (−1)^j (2j)!/(x^{2j+1} (2πn)^{2j+1})
    let tail = ibp_tail(
        |j| {
            let mut fact = Real::one(prec);
            for i in 2..=(2 * j) as u64 {
                fact *= i;
            }
            fact / x.powi(2 * j as i32 + 1) / two_pi.powi(2 * j as i32 + 1)
        },
        |j| 2 * j + 2,
        n_terms,
        &quad_cfg,
    )?;
    let value = two_pi.ln().mul_2si(-1) + (&x - Real::from_ratio(prec, 1, 2)) * x.ln() - &x
        + (series + tail.value) / &pi;
    Ok(SeriesResult {
        value,
        err_estimate: Real::max_of(&tail.err_estimate, &Real::from_f64(prec, 1e-10)),
        terms_used: terms,
        converged: true,
    })
}

/// Sums `Σ_j (−1)^j a_j ζ(s_j, N+1)` — the large-frequency tail of a family
/// of oscillatory integrals after integration by parts — stopping at the
/// smallest term (the expansion is asymptotic).
pub(crate) fn ibp_tail<A, S>(a: A, s: S, n: u64, cfg: &PrecisionConfig) -> Result<SeriesResult>
where
    A: Fn(usize) -> Real,
    S: Fn(usize) -> usize,
{
    let prec = cfg.prec();
    let start = Real::from_u64(prec, n + 1);
    let mut acc = Real::zero(prec);
    let mut last = Real::from_f64(prec, f64::INFINITY);
    for j in 0..60 {
        let z = hurwitz::hurwitz_zeta(&Real::from_u64(prec, s(j) as u64), &start, cfg)?;
        let term = a(j) * z;
        let mag = term.abs();
        if mag > last {
            break;
        }
        acc += if j % 2 == 0 { term } else { -term };
        last = mag;
        if last <= *cfg.tolerance() {
            break;
        }
    }
    Ok(SeriesResult { value: acc, err_estimate: last, terms_used: 0, converged: true })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> PrecisionConfig {
        PrecisionConfig::new(30).unwrap()
    }

    #[test]
    fn log_gamma_special_values() {
        let cfg = cfg();
        assert!(log_gamma(&cfg.one(), &cfg).unwrap().is_zero());
        let half = log_gamma(&cfg.ratio(1, 2), &cfg).unwrap();
        assert!((half - cfg.pi().ln().mul_2si(-1)).abs() < 1e-29);
        // log Γ(5) = log 24
        let five = log_gamma(&cfg.int(5), &cfg).unwrap();
        assert!((five - cfg.int(24).ln()).abs() < 1e-28);
        let big = log_gamma(&cfg.int(101), &cfg).unwrap();
        let expected = Real::parse(cfg.prec(), "363.73937555556349014407999336965").unwrap();
        assert!((big - expected).abs() < 1e-26);
    }

    #[test]
    fn digamma_special_values() {
        let cfg = cfg();
        let g = cfg.euler_gamma();
        assert!((digamma(&cfg.one(), &cfg).unwrap() + &g).abs() < 1e-29);
        let half = digamma(&cfg.ratio(1, 2), &cfg).unwrap();
        assert!((half + &g + cfg.ln2().mul_2si(1)).abs() < 1e-29);
        let tiny = digamma(&cfg.real(1e-3), &cfg).unwrap();
        let next = digamma(&(cfg.real(1e-3) + 1i64), &cfg).unwrap();
        assert!((next - tiny - cfg.real(1e-3).recip()).abs() < 1e-26);
    }

    #[test]
    fn rejects_nonpositive() {
        let cfg = cfg();
        assert!(matches!(log_gamma(&cfg.zero(), &cfg), Err(Error::Domain(_))));
        assert!(matches!(digamma(&cfg.int(-2), &cfg), Err(Error::Domain(_))));
    }

    #[test]
    fn digamma_integral() {
        let cfg = PrecisionConfig::new(20).unwrap();
        for x in [1.0, 2.0, std::f64::consts::E] {
            let r = digamma_integral_check(&cfg.real(x), &cfg).unwrap();
            assert!(r.pass, "{r:?}");
        }
    }
}
