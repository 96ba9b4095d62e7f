use crate::error::{Error, Result};
use crate::numeric::{sum_alternating_accelerated, PrecisionConfig, SeriesResult};
use crate::real::Real;

/// Trigonometric factor of an oscillatory integrand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Oscillator {
    Cos,
    Sin,
}

const GL_POINTS: usize = 24;
const MAX_BISECTIONS: u32 = 8;

/// Gauss–Legendre nodes and weights on `[-1, 1]` at `prec` bits, by Newton
/// iteration on `P_n` from the classical cosine initial guesses.
pub fn gauss_legendre(n: usize, prec: u32) -> Vec<(Real, Real)> {
    assert!(n >= 1, "Gauss–Legendre rule needs at least one node");
    let mut out = Vec::with_capacity(n);
    let eps = Real::one(prec).mul_2si(-(prec as i32) + 4);
    for i in 1..=n.div_ceil(2) {
        let guess = (std::f64::consts::PI * (i as f64 - 0.25) / (n as f64 + 0.5)).cos();
        let mut x = Real::from_f64(prec, guess);
        let mut dp;
        let mut iterations = 0;
        loop {
            let (p, d) = legendre_with_derivative(n, &x);
            dp = d;
            let dx = &p / &dp;
            x -= &dx;
            iterations += 1;
            if dx.abs() <= eps || iterations > 100 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, &x);
        dp = d;
        let w = (Real::one(prec) - x.sqr()).recip() / dp.sqr() * 2i64;
        if 2 * i - 1 == n {
            out.push((Real::zero(prec), w));
        } else {
            out.push((x.clone(), w.clone()));
            out.push((-x, w));
        }
    }
    out
}

fn legendre_with_derivative(n: usize, x: &Real) -> (Real, Real) {
    let prec = x.prec();
    let mut p0 = Real::one(prec);
    let mut p1 = x.clone();
    for k in 2..=n {
        let p2 = (x * &p1 * (2 * k as i64 - 1) - &p0 * (k as i64 - 1)) / k as i64;
        p0 = p1;
        p1 = p2;
    }
    let dp = (x * &p1 - &p0) * n as i64 / (x.sqr() - 1i64);
    (p1, dp)
}

struct PanelRule {
    nodes: Vec<(Real, Real)>,
}

impl PanelRule {
    fn apply<F>(&self, f: &mut F, lo: &Real, hi: &Real) -> Result<Real>
    where
        F: FnMut(&Real) -> Result<Real>,
    {
        let half = (hi - lo).mul_2si(-1);
        let mid = (hi + lo).mul_2si(-1);
        let mut acc = Real::zero(lo.prec());
        for (x, w) in &self.nodes {
            let t = &mid + &(&half * x);
            acc += f(&t)? * w;
        }
        Ok(acc * half)
    }

    /// Bisects until the two halves agree with the whole to `tol`.
    fn adaptive<F>(&self, f: &mut F, lo: &Real, hi: &Real, whole: Real, tol: &Real, depth: u32) -> Result<Real>
    where
        F: FnMut(&Real) -> Result<Real>,
    {
        let mid = (lo + hi).mul_2si(-1);
        let left = self.apply(f, lo, &mid)?;
        let right = self.apply(f, &mid, hi)?;
        let refined = &left + &right;
        if (&refined - &whole).abs() <= *tol {
            return Ok(refined);
        }
        if depth >= MAX_BISECTIONS {
            return Err(Error::Quadrature(format!(
                "oscillatory panel [{}, {}] did not settle",
                lo.to_decimal(8),
                hi.to_decimal(8)
            )));
        }
        let half_tol = tol.mul_2si(-1);
        let l = self.adaptive(f, lo, &mid, left, &half_tol, depth + 1)?;
        let r = self.adaptive(f, &mid, hi, right, &half_tol, depth + 1)?;
        Ok(l + r)
    }

    fn integrate<F>(&self, f: &mut F, lo: &Real, hi: &Real, tol: &Real) -> Result<Real>
    where
        F: FnMut(&Real) -> Result<Real>,
    {
        let whole = self.apply(f, lo, hi)?;
        self.adaptive(f, lo, hi, whole, tol, 0)
    }
}

/// `∫_a^∞ g(t)·cos(ωt) dt` (or `sin`) for `g` smooth and decaying to zero.
///
/// The half-line is cut at the zeros of the trigonometric factor. Each panel
/// is integrated with an adaptive Gauss–Legendre rule; the panel integrals
/// alternate in sign with slowly varying magnitude, so their sum is handed to
/// the Euler transform.
///
/// Intended for verification-grade accuracy (around `1e-10` and looser);
/// the tolerance actually used is `max(cfg.tolerance, 1e-16)`.
pub fn integrate_oscillatory<F>(
    mut g: F,
    freq: &Real,
    a: &Real,
    osc: Oscillator,
    cfg: &PrecisionConfig,
) -> Result<SeriesResult>
where
    F: FnMut(&Real) -> Result<Real>,
{
    let prec = cfg.prec();
    if !freq.is_positive() {
        return Err(Error::domain("oscillatory integral needs a positive frequency"));
    }
    let cfg = cfg.loosened(1e-16);
    let freq = freq.with_prec(prec);
    let a = a.with_prec(prec);
    let pi = Real::pi(prec);
    let period_half = &pi / &freq;

    // Zeros of cos(ωt): ωt = (k + 1/2)π; of sin(ωt): ωt = kπ.
    let shift = match osc {
        Oscillator::Cos => Real::one(prec).mul_2si(-1),
        Oscillator::Sin => Real::zero(prec),
    };
    let phase = &(&freq * &a) / &pi - &shift;
    let mut k0 = phase.floor() + 1i64;
    // Avoid a zero-length head panel when a sits on a zero.
    if (&(&k0 + &shift) * &period_half - &a).abs() < period_half.mul_2si(-(prec as i32) / 2) {
        k0 += 1i64;
    }
    let zero_at = |j: u64| -> Real { &(&k0 + &shift + j) * &period_half };

    // Amplitudes may rise before they decay (log(x+t)/(x+t) peaks at x+t = e),
    // so compare two points far out on the half-line.
    let decay_probe_near = g(&zero_at(2000))?.abs();
    let decay_probe_far = g(&zero_at(8000))?.abs();
    if decay_probe_far > decay_probe_near && decay_probe_far > *cfg.tolerance() {
        return Err(Error::domain("oscillatory integrand amplitude is not decaying"));
    }

    let rule = PanelRule { nodes: gauss_legendre(GL_POINTS, prec) };
    let panel_tol = cfg.tolerance() / 64i64;
    let mut weighted = |t: &Real| -> Result<Real> {
        let arg = &freq * t;
        let trig = match osc {
            Oscillator::Cos => arg.cos(),
            Oscillator::Sin => arg.sin(),
        };
        Ok(g(t)? * trig)
    };

    let head = rule.integrate(&mut weighted, &a, &zero_at(0), &panel_tol)?;
    let tail = sum_alternating_accelerated(
        |j| rule.integrate(&mut weighted, &zero_at(j), &zero_at(j + 1), &panel_tol),
        0,
        &cfg,
    )?;
    Ok(SeriesResult {
        value: head + tail.value,
        err_estimate: tail.err_estimate + panel_tol,
        terms_used: tail.terms_used + 1,
        converged: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> PrecisionConfig {
        PrecisionConfig::new(20).unwrap()
    }

    #[test]
    fn legendre_rule_is_exact_for_polynomials() {
        let rule = gauss_legendre(10, 128);
        // ∫_{-1}^{1} x^18 dx = 2/19
        let s: Real = rule.iter().map(|(x, w)| x.powi(18) * w).sum();
        assert!((s - Real::from_ratio(128, 2, 19)).abs() < 1e-30);
        let odd = gauss_legendre(7, 128);
        assert_eq!(odd.len(), 7);
        let total: Real = odd.iter().map(|(_, w)| w.clone()).sum();
        assert!((total - 2i64).abs() < 1e-30);
    }

    #[test]
    fn zero_integrand() {
        let cfg = cfg();
        let p = cfg.prec();
        let r = integrate_oscillatory(|_| Ok(Real::zero(p)), &cfg.int(3), &cfg.zero(), Oscillator::Cos, &cfg)
            .unwrap();
        assert!(r.value.is_zero());
    }

    #[test]
    fn exponential_damping() {
        // ∫₀^∞ e^{-t} cos(2t) dt = 1/5, ∫₀^∞ e^{-t} sin(2t) dt = 2/5
        let cfg = cfg();
        let r = integrate_oscillatory(|t| Ok((-t).exp()), &cfg.int(2), &cfg.zero(), Oscillator::Cos, &cfg)
            .unwrap();
        assert!((&r.value - &cfg.ratio(1, 5)).abs() < 1e-14);
        let r = integrate_oscillatory(|t| Ok((-t).exp()), &cfg.int(2), &cfg.zero(), Oscillator::Sin, &cfg)
            .unwrap();
        assert!((&r.value - &cfg.ratio(2, 5)).abs() < 1e-14);
    }

    #[test]
    fn slow_algebraic_decay() {
        // ∫₀^∞ sin(t)/t dt = π/2, started at a = 1 and subtracting ∫₀¹ sin t/t = Si(1).
        let cfg = cfg();
        let r = integrate_oscillatory(|t| Ok(t.recip()), &cfg.one(), &cfg.one(), Oscillator::Sin, &cfg).unwrap();
        let si1 = Real::from_f64(cfg.prec(), 0.946_083_070_367_183_0);
        let expected = cfg.pi().mul_2si(-1) - si1;
        assert!((&r.value - &expected).abs() < 1e-14);
    }

    #[test]
    fn growing_amplitude_is_rejected() {
        let cfg = cfg();
        let err = integrate_oscillatory(|t| Ok(t.clone()), &cfg.one(), &cfg.zero(), Oscillator::Cos, &cfg)
            .unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
    }
}
