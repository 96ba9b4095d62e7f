use crate::combinatorics::bernoulli;
use crate::error::{Error, Result};
use crate::numeric::{integrate_adaptive, Jet, PrecisionConfig, SeriesResult, Upper, ERR_SAFETY};
use crate::real::Real;

/// Highest Bernoulli index used in a single correction.
const MAX_ORDER: usize = 80;

/// Euler–Maclaurin correction at the cut `N` from the Taylor jet of `f` at
/// `N`:
///
/// ```text
/// Σ_{n ≥ N} f(n) − ∫_N^∞ f = f(N)/2 − Σ_{r ≥ 1} B_{2r}/(2r)! · f^(2r−1)(N)
/// ```
///
/// Terms are added while they decrease; the result is marked unconverged if
/// they start growing (asymptotic divergence) before reaching `tol`, which
/// tells the caller to move the cut further out.
pub fn em_correction(jet: &Jet, tol: &Real) -> SeriesResult {
    let prec = jet.value().prec();
    let mut value = jet.value().mul_2si(-1);
    let mut last = Real::from_f64(prec, f64::INFINITY);
    let mut used = 0u64;
    let max_r = jet.order().div_ceil(2);
    for r in 1..=max_r {
        let k = 2 * r - 1;
        if k > jet.order() {
            break;
        }
        // f^(2r−1)/(2r)! = c_{2r−1}/(2r)
        let b = Real::from_rational(prec, &bernoulli(2 * r));
        let term = b * jet.coeff(k) / (2 * r) as u64;
        let mag = term.abs();
        if mag > last {
            return SeriesResult { value, err_estimate: last * ERR_SAFETY, terms_used: used, converged: false };
        }
        value -= &term;
        used += 1;
        last = mag;
        if &last * ERR_SAFETY <= *tol {
            return SeriesResult { value, err_estimate: last * ERR_SAFETY, terms_used: used, converged: true };
        }
    }
    let converged = &last * ERR_SAFETY <= *tol;
    SeriesResult { value, err_estimate: last * ERR_SAFETY, terms_used: used, converged }
}

/// `Σ_{n ≥ first} f(n)` for a smooth, eventually monotone summand.
///
/// The head is summed directly up to a cut `N`; the tail is
/// `∫_N^∞ f` plus the Euler–Maclaurin correction from the Taylor jet of `f`
/// at `N`. The tail integral comes from `tail_integral(N)` when a closed form
/// is known, otherwise from tanh-sinh quadrature of `f`. The cut doubles
/// until the correction converges.
pub fn sum_smooth<F>(
    f: F,
    first: u64,
    tail_integral: Option<&dyn Fn(&Real) -> Result<Real>>,
    cfg: &PrecisionConfig,
) -> Result<SeriesResult>
where
    F: Fn(&Jet) -> Result<Jet>,
{
    let prec = cfg.prec();
    let order = (MAX_ORDER).min(prec as usize / 2 + 10);
    let mut cut = first + (prec as u64 / 4).max(16);
    let mut head = Real::zero(prec);
    let mut summed_to = first;
    let mut last: Option<SeriesResult> = None;

    for _ in 0..6 {
        while summed_to < cut {
            let t = Jet::constant(&Real::from_u64(prec, summed_to), 0);
            head += f(&t)?.value();
            summed_to += 1;
        }
        let n = Real::from_u64(prec, cut);
        let correction = em_correction(&f(&Jet::variable(&n, order))?, cfg.tolerance());
        if correction.converged {
            let integral = match tail_integral {
                Some(closed) => SeriesResult::exact(closed(&n)?),
                None => integrate_adaptive(
                    |t| Ok(f(&Jet::constant(t, 0))?.value().clone()),
                    &n,
                    &Upper::Infinity,
                    cfg,
                )?,
            };
            let value = &head + &integral.value + &correction.value;
            return Ok(SeriesResult {
                value,
                err_estimate: integral.err_estimate + correction.err_estimate,
                terms_used: cut - first + correction.terms_used,
                converged: true,
            });
        }
        last = Some(SeriesResult { value: head.clone(), ..correction });
        cut *= 2;
        if cut - first > cfg.max_terms() {
            break;
        }
    }
    let partial = last.unwrap_or_else(|| SeriesResult {
        value: head,
        err_estimate: Real::from_f64(prec, f64::INFINITY),
        terms_used: summed_to - first,
        converged: false,
    });
    Err(Error::NonConvergence(Box::new(partial)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basel_sum() {
        let cfg = PrecisionConfig::new(30).unwrap();
        let closed = |n: &Real| Ok(n.recip());
        let r = sum_smooth(|t| Ok(t.powi(2).recip()), 1, Some(&closed), &cfg).unwrap();
        let expected = cfg.pi().sqr() / 6i64;
        assert!((&r.value - &expected).abs() < 1e-29);
    }

    #[test]
    fn quadrature_tail() {
        // Σ 1/n³ = ζ(3), tail integral by quadrature
        let cfg = PrecisionConfig::new(25).unwrap();
        let r = sum_smooth(|t| Ok(t.powi(3).recip()), 1, None, &cfg).unwrap();
        let zeta3 = Real::parse(cfg.prec(), "1.2020569031595942853997381615114").unwrap();
        assert!((&r.value - &zeta3).abs() < 1e-24);
    }

    #[test]
    fn euler_constant_from_smooth_sum() {
        // γ = Σ_{n≥1} [1/n − log(1 + 1/n)], ∫_N^∞ = (N+1)·log(1+1/N) − 1
        let cfg = PrecisionConfig::new(30).unwrap();
        let closed = |n: &Real| Ok((n + 1i64) * n.recip().ln_1p() - 1i64);
        let r = sum_smooth(
            |t| {
                let inv = t.recip();
                Ok(&inv - &inv.ln_1p())
            },
            1,
            Some(&closed),
            &cfg,
        )
        .unwrap();
        assert!((&r.value - &cfg.euler_gamma()).abs() < 1e-29);
    }
}
