use crate::error::{Error, Result};
use crate::numeric::{PrecisionConfig, SeriesResult, ERR_SAFETY};
use crate::real::Real;

/// Upper integration limit.
#[derive(Clone, Debug)]
pub enum Upper {
    Finite(Real),
    Infinity,
}

const MAX_LEVEL: u32 = 12;

/// Double-exponential (tanh-sinh) quadrature of `f` over `[a, b]` or
/// `[a, ∞)`.
///
/// Integrable endpoint singularities are fine: nodes cluster
/// doubly-exponentially at the ends and the integrand is never evaluated at
/// an endpoint itself. The infinite range is first mapped onto `[0, 1)` by
/// `t = a + v/(1−v)`, with the distance to the endpoint carried exactly so
/// that the far tail is sampled without cancellation.
///
/// The step is halved until two successive estimates agree to the relative
/// tolerance `tol·max(1, |I|)`. Failure to get there within twelve halvings
/// is a [`Error::Quadrature`].
pub fn integrate_adaptive<F>(mut f: F, a: &Real, b: &Upper, cfg: &PrecisionConfig) -> Result<SeriesResult>
where
    F: FnMut(&Real) -> Result<Real>,
{
    let prec = cfg.prec();
    let a = a.with_prec(prec);
    match b {
        Upper::Finite(b) => {
            let b = b.with_prec(prec);
            if b < a {
                return Err(Error::domain("integration interval must have a <= b"));
            }
            if b == a {
                return Ok(SeriesResult::exact(Real::zero(prec)));
            }
            let half = (&b - &a).mul_2si(-1);
            let mid = (&a + &b).mul_2si(-1);
            tanh_sinh(
                |rho, sign| {
                    // node at distance half·rho from the endpoint
                    let x = match sign {
                        Side::Center => mid.clone(),
                        Side::Upper => &b - &(&half * rho),
                        Side::Lower => &a + &(&half * rho),
                    };
                    if x <= a || x >= b {
                        return Ok(None);
                    }
                    Ok(Some(f(&x)? * &half))
                },
                cfg,
            )
        }
        Upper::Infinity => tanh_sinh(
            |rho, side| {
                // v = (1+s)/2 on [0,1); 1−v = rho/2 near the top, v = rho/2 near the bottom.
                let (num, den) = match side {
                    Side::Center => (Real::one(prec).mul_2si(-1), Real::one(prec).mul_2si(-1)),
                    Side::Upper => (Real::one(prec) - rho.mul_2si(-1), rho.mul_2si(-1)),
                    Side::Lower => (rho.mul_2si(-1), Real::one(prec) - rho.mul_2si(-1)),
                };
                if den.is_zero() || num.is_zero() {
                    return Ok(None);
                }
                let x = &a + &(&num / &den);
                if x <= a || !x.is_finite() {
                    return Ok(None);
                }
                // dt/dv = 1/(1−v)², ds → dv contributes 1/2.
                let jac = den.sqr().recip().mul_2si(-1);
                Ok(Some(f(&x)? * jac))
            },
            cfg,
        ),
    }
}

#[derive(Clone, Copy)]
enum Side {
    Center,
    Upper,
    Lower,
}

/// Core tanh-sinh rule on `[-1, 1]`. `g(rho, side)` must return the
/// integrand (including any Jacobian of an outer map) at the node whose
/// distance from the nearest endpoint is `rho`, or `None` if that node
/// rounds onto the endpoint.
fn tanh_sinh<G>(mut g: G, cfg: &PrecisionConfig) -> Result<SeriesResult>
where
    G: FnMut(&Real, Side) -> Result<Option<Real>>,
{
    let prec = cfg.prec();
    let pi_half = Real::pi(prec).mul_2si(-1);
    // Nodes are generated out to a distance of about 2^(-4·prec) from the
    // endpoints (an endpoint at zero keeps full relative resolution); the
    // sweep stops earlier once contributions are negligible or nodes round
    // onto the endpoint.
    let t_max = ((4.0 * prec as f64 + 8.0) * std::f64::consts::LN_2 / std::f64::consts::PI).asinh();
    let negligible = cfg.tolerance() * Real::from_f64(prec, 1e-8);

    let mut sum = {
        let one = Real::one(prec);
        g(&one, Side::Center)?.map(|v| v * &pi_half).unwrap_or_else(|| Real::zero(prec))
    };
    let mut evaluations = 1u64;
    let mut previous: Option<Real> = None;
    let mut h = Real::one(prec);

    for level in 0..=MAX_LEVEL {
        let step = 0.5f64.powi(level as i32);
        let stride = if level == 0 { 1 } else { 2 };
        let first = 1usize;
        let count = (t_max / step).ceil() as usize;
        let mut j = first;
        while j <= count {
            let t = Real::from_f64(prec, step * j as f64);
            let (sh, ch) = {
                let e = t.exp();
                let ei = e.recip();
                ((&e - &ei).mul_2si(-1), (&e + &ei).mul_2si(-1))
            };
            let u = &pi_half * &sh;
            let e2u = u.mul_2si(1).exp();
            // rho = 1 − tanh u = 2/(e^{2u}+1); weight = (π/2) cosh t · sech² u
            let rho = (&e2u + 1i64).recip().mul_2si(1);
            let sech2 = {
                let eu = u.exp();
                let c = (&eu + &eu.recip()).mul_2si(-1);
                c.sqr().recip()
            };
            let w = &pi_half * &ch * &sech2;
            if rho.is_zero() {
                break;
            }
            let mut live = false;
            for side in [Side::Upper, Side::Lower] {
                if let Some(v) = g(&rho, side)? {
                    let contrib = v * &w;
                    if contrib.abs() > negligible {
                        live = true;
                    }
                    sum += contrib;
                    evaluations += 1;
                }
            }
            if !live && step * j as f64 > 1.0 {
                break;
            }
            j += stride;
        }
        if level > 0 {
            h = h.mul_2si(-1);
        }
        let estimate = &sum * &h;
        if let Some(prev) = previous.as_ref() {
            let diff = (&estimate - prev).abs();
            let scale = Real::max_of(&estimate.abs(), &Real::one(prec));
            let err = diff * ERR_SAFETY;
            if level >= 3 && err <= cfg.tolerance() * &scale {
                return Ok(SeriesResult { value: estimate, err_estimate: err, terms_used: evaluations, converged: true });
            }
            if !estimate.is_finite() {
                return Err(Error::Quadrature("integrand produced a non-finite value".into()));
            }
        }
        previous = Some(estimate);
    }
    let value = previous.expect("at least one level");
    Err(Error::Quadrature(format!(
        "tanh-sinh refinement stalled after {MAX_LEVEL} halvings (estimate {})",
        value.to_decimal(12)
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> PrecisionConfig {
        PrecisionConfig::new(30).unwrap()
    }

    #[test]
    fn constant_on_unit_interval() {
        let cfg = cfg();
        let p = cfg.prec();
        let r = integrate_adaptive(|_| Ok(Real::one(p)), &cfg.zero(), &Upper::Finite(cfg.one()), &cfg).unwrap();
        assert!((&r.value - 1i64).abs() < 1e-29);
    }

    #[test]
    fn endpoint_singularity() {
        // ∫₀¹ log t dt = −1
        let cfg = cfg();
        let r = integrate_adaptive(|t| Ok(t.ln()), &cfg.zero(), &Upper::Finite(cfg.one()), &cfg).unwrap();
        assert!((&r.value + 1i64).abs() < 1e-28);
    }

    #[test]
    fn inverse_square_root_singularity() {
        // ∫₀¹ t^{-1/2} dt = 2
        let cfg = cfg();
        let r = integrate_adaptive(|t| Ok(t.sqrt().recip()), &cfg.zero(), &Upper::Finite(cfg.one()), &cfg)
            .unwrap();
        assert!((&r.value - 2i64).abs() < 1e-25);
    }

    #[test]
    fn half_line() {
        // ∫₀^∞ 1/(1+t²) dt = π/2 and ∫₁^∞ t^{-2} dt = 1
        let cfg = cfg();
        let r = integrate_adaptive(|t| Ok((t.sqr() + 1i64).recip()), &cfg.zero(), &Upper::Infinity, &cfg).unwrap();
        assert!((&r.value - &cfg.pi().mul_2si(-1)).abs() < 1e-25);
        let r = integrate_adaptive(|t| Ok(t.sqr().recip()), &cfg.one(), &Upper::Infinity, &cfg).unwrap();
        assert!((&r.value - 1i64).abs() < 1e-25);
    }

    #[test]
    fn non_integrable_fails() {
        let cfg = PrecisionConfig::new(15).unwrap();
        let r = integrate_adaptive(|t| Ok(t.recip()), &cfg.zero(), &Upper::Finite(cfg.one()), &cfg);
        assert!(matches!(r, Err(Error::Quadrature(_))));
    }
}
