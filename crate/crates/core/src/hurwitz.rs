//! Hurwitz zeta function `ζ(s, x)` and its `s`-derivatives.
//!
//! Three independent evaluators are provided:
//!
//! * [`zeta`] — Euler–Maclaurin summation, the production path used by the
//!   polygamma functions and the Bell-polynomial route for `γ_m(x)`;
//! * [`zeta_hasse`] — Hasse's globally convergent double series;
//! * [`zeta_fourier`] — Hurwitz's Fourier expansion for `s < 1`;
//!
//! plus the Srivastava–Choi and Poisson-summation representations used as
//! cross-checks.

use rug::Integer;

use crate::combinatorics::binomial_row;
use crate::error::{Error, Result};
use crate::gamma::{ibp_tail, log_gamma};
use crate::numeric::{
    em_correction, integrate_oscillatory, sum_alternating_accelerated, sum_trig_averaged, Harmonic, Jet, Oscillator,
    PrecisionConfig, SeriesResult, Trig, ERR_SAFETY,
};
use crate::real::Real;
use crate::report::IdentityReport;

/// Closest approach to the pole at `s = 1` that evaluators accept.
pub const POLE_GUARD: f64 = 1e-8;

/// A point `(s, x)` and an order `j` of differentiation in `s`.
#[derive(Clone, Debug)]
pub struct ZetaPoint {
    pub s: Real,
    pub x: Real,
    pub j: u32,
}

impl ZetaPoint {
    /// Validates `x > 0` and `|s − 1| ≥ 1e-8`.
    pub fn new(s: Real, x: Real, j: u32) -> Result<ZetaPoint> {
        if !x.is_finite() || !x.is_positive() {
            return Err(Error::domain(format!("Hurwitz zeta needs x > 0, got {x}")));
        }
        if !s.is_finite() {
            return Err(Error::domain("s must be finite"));
        }
        let distance = (&s - 1i64).abs().to_f64();
        if distance < POLE_GUARD {
            return Err(Error::Pole { distance });
        }
        Ok(ZetaPoint { s, x, j })
    }
}

/// Which representation to evaluate a special value through.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Hasse,
    Fourier,
}

fn factorial(n: u32, prec: u32) -> Real {
    let mut f = Real::one(prec);
    for i in 2..=n as u64 {
        f *= i;
    }
    f
}

/// `∂^j/∂ε^j [(e^{−εL} − 1)/ε]`, the pole-free part of
/// `∂^j/∂ε^j [e^{−εL}/ε]`.
///
/// For `|εL| ≤ 2` the Taylor series in `ε` is used; beyond that the Leibniz
/// expansion of `e^{−εL}·ε^{−1}` minus the pole's derivative.
pub fn expm1_ratio_deriv(eps: &Real, l: &Real, j: u32) -> Real {
    let prec = eps.prec().max(l.prec());
    let el = (eps * l).abs();
    if el <= 2.0 {
        // Σ_{r ≥ j+1} (−L)^r ε^{r−1−j} / (r·(r−1−j)!)
        let neg_l = -l;
        let mut power = neg_l.powi(j as i32 + 1).with_prec(prec); // (−L)^r ε^{r−1−j}/(r−1−j)!
        let mut sum = &power / (j as u64 + 1);
        let eps_threshold = Real::one(prec).mul_2si(-(prec as i32) - 8);
        let mut r = j as u64 + 1;
        loop {
            r += 1;
            power = &power * &neg_l * eps / (r - 1 - j as u64);
            let term = &power / r;
            sum += &term;
            if term.abs() <= &eps_threshold * &Real::max_of(&sum.abs(), &Real::one(prec)) {
                break;
            }
            if term.is_zero() {
                break;
            }
        }
        sum
    } else {
        let e = (-(eps * l)).exp();
        let neg_l = -l;
        let row = binomial_row(j as u64);
        let mut acc = Real::zero(prec);
        // i!/ε^{i+1} with sign (−1)^i
        let mut inv = eps.recip();
        for i in 0..=j {
            if i > 0 {
                inv = -(inv * i as u64) / eps;
            }
            acc += &(neg_l.powi((j - i) as i32) * &inv) * &row[i as usize];
        }
        acc *= &e;
        acc - pole_derivative(eps, j)
    }
}

/// `∂^j/∂ε^j (1/ε) = (−1)^j j!/ε^{j+1}`.
fn pole_derivative(eps: &Real, j: u32) -> Real {
    let v = factorial(j, eps.prec()) / eps.powi(j as i32 + 1);
    if j % 2 == 0 {
        v
    } else {
        -v
    }
}

/// Evaluates `Σ_{k=0}^{d} c_k L^k`.
fn poly_eval(c: &[Real], l: &Real) -> Real {
    let mut acc = Real::zero(l.prec());
    for coef in c.iter().rev() {
        acc = acc * l + coef;
    }
    acc
}

/// `ζ^(j)(s, x)` by Euler–Maclaurin summation.
///
/// `Σ_{k<N} (−log(k+x))^j (k+x)^{−s}` is summed directly; the tail is the
/// exact integral `∂_s^j [U^{1−s}/(s−1)]` with `U = N + x` plus the
/// Euler–Maclaurin correction. Derivatives of `f(u) = (−log u)^j u^{−s}`
/// are `u^{−s−r} Q_r(log u)` with `Q_{r+1} = Q_r' − (s+r) Q_r`. The cut
/// doubles whenever the correction stops decreasing before reaching the
/// tolerance.
pub fn zeta(p: &ZetaPoint, cfg: &PrecisionConfig) -> Result<SeriesResult> {
    let prec = cfg.prec();
    let s = p.s.with_prec(prec);
    let x = p.x.with_prec(prec);
    let j = p.j;
    let eps = &s - 1i64;
    let order = prec as usize / 2 + 21;
    let base = (prec as u64 * 3 / 25).max(16);
    let mut cut = base + (s.abs().to_f64() / 2.0).ceil() as u64;

    let term = |k: u64| -> Real {
        let u = &x + k;
        let l = u.ln();
        let v = (-(&s * &l)).exp();
        if j == 0 {
            v
        } else {
            v * (-l).powi(j as i32)
        }
    };

    let mut head = Real::zero(prec);
    let mut next = 0u64;
    let mut last_err = Real::from_f64(prec, f64::INFINITY);
    for _ in 0..12 {
        while next < cut {
            head += term(next);
            next += 1;
        }
        let u = &x + cut;
        let l = u.ln();
        // q_r = Q_r / r! as polynomial coefficients in L.
        let mut q: Vec<Real> = vec![Real::zero(prec); j as usize + 1];
        q[j as usize] = if j % 2 == 0 { Real::one(prec) } else { -Real::one(prec) };
        let mut upow = (-(&s * &l)).exp();
        let inv_u = u.recip();
        let mut coeffs = Vec::with_capacity(order + 1);
        for r in 0..=order {
            coeffs.push(&upow * &poly_eval(&q, &l));
            // q_{r+1} = (q_r' − (s+r) q_r)/(r+1)
            let sr = &s + r as u64;
            let mut nq: Vec<Real> = q.iter().map(|c| -(c * &sr)).collect();
            for d in 1..q.len() {
                nq[d - 1] += &q[d] * d as u64;
            }
            for c in nq.iter_mut() {
                *c /= r as u64 + 1;
            }
            q = nq;
            upow *= &inv_u;
        }
        let corr = em_correction(&Jet::from_coeffs(coeffs), cfg.tolerance());
        if corr.converged {
            let integral = expm1_ratio_deriv(&eps, &l, j) + pole_derivative(&eps, j);
            return Ok(SeriesResult {
                value: head + integral + corr.value,
                err_estimate: corr.err_estimate,
                terms_used: cut + corr.terms_used,
                converged: true,
            });
        }
        last_err = corr.err_estimate;
        cut *= 2;
    }
    Err(Error::NonConvergence(Box::new(SeriesResult {
        value: head,
        err_estimate: last_err,
        terms_used: next,
        converged: false,
    })))
}

/// `ζ(s, x)` as a plain value.
pub fn hurwitz_zeta(s: &Real, x: &Real, cfg: &PrecisionConfig) -> Result<Real> {
    Ok(zeta(&ZetaPoint::new(s.clone(), x.clone(), 0)?, cfg)?.value)
}

/// `∂^j ζ(s, x)/∂s^j` as a plain value.
pub fn zeta_derivative(s: &Real, x: &Real, j: u32, cfg: &PrecisionConfig) -> Result<Real> {
    Ok(zeta(&ZetaPoint::new(s.clone(), x.clone(), j)?, cfg)?.value)
}

/// Upward shift applied before summing a Hasse-type series.
///
/// The unshifted series converges only algebraically near `x = 1`; after
/// `x → x + K` the forward differences decay geometrically almost from the
/// start. `K` grows with the target precision only.
pub fn hasse_shift(cfg: &PrecisionConfig) -> u64 {
    (12.0 + 0.75 * cfg.digits() as f64).ceil() as u64
}

/// Outer sum `Σ_{n≥0} 1/(n+1) Σ_{k≤n} C(n,k) (−1)^k F_k` shared by every
/// Hasse-type series.
///
/// `f(k, bits)` must return `F_k` at `bits` bits. The inner alternating sum
/// loses about `n` bits to cancellation, so values are prepared at
/// `prec + n_cap + 32` bits (plus the bit size of the largest `|F_k|`) and
/// multiplied by exact binomial rows. Summation stops after five consecutive
/// outer terms below `tol/10`; if that does not happen within `n_cap`
/// terms, `n_cap` doubles and everything is recomputed at the higher
/// precision.
pub(crate) fn hasse_outer<F>(f: F, cfg: &PrecisionConfig) -> Result<SeriesResult>
where
    F: Fn(u64, u32) -> Real,
{
    let prec = cfg.prec();
    let tol = cfg.tolerance().with_prec(prec) / 10i64;
    let limit = cfg.max_terms().min(16 * prec as u64 + 4096);
    let mut n_cap = (prec as u64).min(limit);
    let mut best: Option<SeriesResult>;

    loop {
        let mut bits = prec + n_cap as u32 + 32;
        let mut values: Vec<Real> = (0..=n_cap).map(|k| f(k, bits)).collect();
        let magnitude = values
            .iter()
            .map(|v| if v.is_zero() { 0.0 } else { v.abs().ln().to_f64() / std::f64::consts::LN_2 })
            .fold(0.0f64, f64::max);
        if magnitude > 0.0 {
            bits += magnitude.ceil() as u32 + 8;
            values = (0..=n_cap).map(|k| f(k, bits)).collect();
        }

        let mut row: Vec<Integer> = Vec::with_capacity(n_cap as usize + 1);
        let mut sum = Real::zero(bits);
        let mut recent: Vec<Real> = Vec::with_capacity(5);
        let mut run = 0u32;
        for n in 0..=n_cap {
            // Pascal update of the binomial row in place.
            row.push(Integer::from(1));
            for k in (1..n as usize).rev() {
                let prev = row[k - 1].clone();
                row[k] += prev;
            }
            let mut inner = Real::zero(bits);
            for (k, c) in row.iter().enumerate() {
                let v = &values[k] * c;
                if k % 2 == 0 {
                    inner += v;
                } else {
                    inner -= v;
                }
            }
            let t = inner / (n + 1);
            sum += &t;
            let mag = t.abs();
            if mag < tol {
                run += 1;
            } else {
                run = 0;
            }
            if recent.len() == 5 {
                recent.remove(0);
            }
            recent.push(mag);
            if run >= 5 {
                let largest = recent.iter().fold(Real::zero(prec), |a, b| Real::max_of(&a, b));
                return Ok(SeriesResult {
                    value: sum.with_prec(prec),
                    err_estimate: largest * ERR_SAFETY,
                    terms_used: n + 1,
                    converged: true,
                });
            }
        }
        let largest = recent.iter().fold(Real::zero(prec), |a, b| Real::max_of(&a, b));
        best = Some(SeriesResult {
            value: sum.with_prec(prec),
            err_estimate: largest * ERR_SAFETY,
            terms_used: n_cap + 1,
            converged: false,
        });
        if n_cap >= limit {
            break;
        }
        n_cap = (n_cap * 2).min(limit);
    }
    Err(Error::NonConvergence(Box::new(best.expect("at least one pass"))))
}

/// `ζ^(j)(s, x)` from Hasse's series
///
/// ```text
/// ζ(s, x) = 1/(s−1) Σ_{n≥0} 1/(n+1) Σ_{k≤n} C(n,k) (−1)^k (k+x)^{1−s}
/// ```
///
/// differentiated term by term. With `ε = s − 1` the `n = 0` constant
/// splits off as the pole `1/ε`, whose derivatives are taken analytically;
/// the remaining inner sums involve `∂_ε^j [(e^{−εL_k} − 1)/ε]`,
/// `L_k = log(k + X)`. The series is evaluated at `X = x + K` and shifted
/// back with `ζ(s, x) = ζ(s, X) + Σ_{i<K} (x+i)^{−s}` (differentiated).
pub fn zeta_hasse(p: &ZetaPoint, cfg: &PrecisionConfig) -> Result<SeriesResult> {
    let prec = cfg.prec();
    let s = p.s.with_prec(prec);
    let x = p.x.with_prec(prec);
    let j = p.j;
    let shift = hasse_shift(cfg);

    let eps_exact = &s - 1i64;
    let series = hasse_outer(
        |k, bits| {
            let big_x = x.with_prec(bits) + (shift + k);
            let eps = eps_exact.with_prec(bits);
            expm1_ratio_deriv(&eps, &big_x.ln(), j)
        },
        cfg,
    )?;
    let mut value = series.value + pole_derivative(&eps_exact, j);
    for i in 0..shift {
        let u = &x + i;
        let l = u.ln();
        let v = (-(&s * &l)).exp();
        value += if j == 0 { v } else { v * (-l).powi(j as i32) };
    }
    Ok(SeriesResult { value, ..series })
}

/// `ζ(s, x)` from Hurwitz's formula
///
/// ```text
/// ζ(s, x) = 2Γ(1−s) [sin(πs/2) Σ cos(2nπx)/(2πn)^{1−s} + cos(πs/2) Σ sin(2nπx)/(2πn)^{1−s}]
/// ```
///
/// valid for `s < 1`, `0 < x ≤ 1`. Both trigonometric sums are evaluated by
/// iterated averaging. At `x = 1` the sine sum vanishes and the cosine sum
/// is `(2π)^{s−1} ζ(1−s)`.
pub fn zeta_fourier(p: &ZetaPoint, cfg: &PrecisionConfig) -> Result<SeriesResult> {
    let prec = cfg.prec();
    if p.j != 0 {
        return Err(Error::domain("zeta_fourier evaluates ζ(s, x) itself (j = 0)"));
    }
    let s = p.s.with_prec(prec);
    let x = p.x.with_prec(prec);
    if s >= 1.0 {
        return Err(Error::domain(format!("Hurwitz's formula needs s < 1, got {s}")));
    }
    if x > 1.0 {
        return Err(Error::domain(format!("Hurwitz's formula needs 0 < x <= 1, got {x}")));
    }
    let pi = Real::pi(prec);
    let two_pi = pi.mul_2si(1);
    let sm1 = &s - 1i64;
    let coeff = |n: u64| ((&two_pi * n).ln() * &sm1).exp();

    let (cos_sum, sin_sum) = if x == 1.0 {
        let one_minus_s = Real::one(prec) - &s;
        let z = hurwitz_zeta(&one_minus_s, &Real::one(prec), cfg)?;
        (SeriesResult::exact((two_pi.ln() * &sm1).exp() * z), SeriesResult::exact(Real::zero(prec)))
    } else {
        (
            sum_trig_averaged(coeff, Trig::Cos, Harmonic::Even, &x, cfg)?,
            sum_trig_averaged(coeff, Trig::Sin, Harmonic::Even, &x, cfg)?,
        )
    };
    let gamma = log_gamma(&(Real::one(prec) - &s), cfg)?.exp();
    let (sin_h, cos_h) = (&pi * &s).mul_2si(-1).sin_cos();
    let scale = gamma.mul_2si(1);
    let err = (&cos_sum.err_estimate + &sin_sum.err_estimate) * &scale;
    let value = &scale * &(&sin_h * &cos_sum.value + &cos_h * &sin_sum.value);
    Ok(SeriesResult {
        value,
        err_estimate: err,
        terms_used: cos_sum.terms_used + sin_sum.terms_used,
        converged: true,
    })
}

fn unit_interval(x: &Real, closed_right: bool) -> Result<()> {
    let ok = *x > 0.0 && if closed_right { *x <= 1.0 } else { *x < 1.0 };
    if ok {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "the Fourier route needs 0 < x {} 1, got {x}",
            if closed_right { "<=" } else { "<" }
        )))
    }
}

/// `ζ'(0, x)`.
///
/// The Fourier route sums
/// `(1/π) Σ (log 2πn + γ)/n · sin 2nπx + ½ Σ cos(2nπx)/n` and needs
/// `0 < x < 1` (the cosine series diverges at `x = 1`).
pub fn zeta_prime0(x: &Real, route: Route, cfg: &PrecisionConfig) -> Result<Real> {
    let prec = cfg.prec();
    match route {
        Route::Hasse => Ok(zeta_hasse(&ZetaPoint::new(Real::zero(prec), x.clone(), 1)?, cfg)?.value),
        Route::Fourier => {
            let x = x.with_prec(prec);
            unit_interval(&x, false)?;
            let pi = Real::pi(prec);
            let two_pi = pi.mul_2si(1);
            let g = Real::euler_gamma(prec);
            let sin_sum = sum_trig_averaged(
                |n| ((&two_pi * n).ln() + &g) / n,
                Trig::Sin,
                Harmonic::Even,
                &x,
                cfg,
            )?;
            let cos_sum =
                sum_trig_averaged(|n| Real::from_ratio(prec, 1, n as i64), Trig::Cos, Harmonic::Even, &x, cfg)?;
            Ok(sin_sum.value / &pi + cos_sum.value.mul_2si(-1))
        }
    }
}

/// `ζ''(0, x)`.
///
/// The Fourier route sums the five trigonometric series obtained by setting
/// `s = 0` in the second derivative of Hurwitz's formula (grouped into one
/// sine and one cosine series with combined coefficients); it needs
/// `0 < x < 1`.
pub fn zeta_doubleprime0(x: &Real, route: Route, cfg: &PrecisionConfig) -> Result<Real> {
    let prec = cfg.prec();
    match route {
        Route::Hasse => Ok(zeta_hasse(&ZetaPoint::new(Real::zero(prec), x.clone(), 2)?, cfg)?.value),
        Route::Fourier => {
            let x = x.with_prec(prec);
            unit_interval(&x, false)?;
            let (sin_part, cos_part) = doubleprime0_fourier_parts(&x, cfg)?;
            Ok(sin_part + cos_part)
        }
    }
}

/// Sine and cosine halves of the Fourier series for `ζ''(0, x)`:
///
/// ```text
/// sine:   Σ [2 log²(2πn) + 4γ log(2πn) + 2γ² − ζ(2)] sin(2nπx) / (2πn)
/// cosine: Σ [log(2πn) + γ] cos(2nπx) / n
/// ```
pub(crate) fn doubleprime0_fourier_parts(x: &Real, cfg: &PrecisionConfig) -> Result<(Real, Real)> {
    let prec = cfg.prec();
    let pi = Real::pi(prec);
    let two_pi = pi.mul_2si(1);
    let g = Real::euler_gamma(prec);
    let zeta2 = pi.sqr() / 6i64;
    let c0 = g.sqr().mul_2si(1) - &zeta2;
    let sin_part = sum_trig_averaged(
        |n| {
            let l = (&two_pi * n).ln();
            (l.sqr().mul_2si(1) + &g * &l * 4i64 + &c0) / (&two_pi * n)
        },
        Trig::Sin,
        Harmonic::Even,
        x,
        cfg,
    )?;
    let cos_part =
        sum_trig_averaged(|n| ((&two_pi * n).ln() + &g) / n, Trig::Cos, Harmonic::Even, x, cfg)?;
    Ok((sin_part.value, cos_part.value))
}

/// `ζ(s, x)` from the Srivastava–Choi expansion
///
/// ```text
/// ζ(s, x) = x^{1−s}/(s−1) − Σ_{n≥1} (−1)^n (s)_n / ((n+1)·n!) · ζ(s+n, x)
/// ```
///
/// summed with the Euler transform. Arguments `x < 1` are first shifted up
/// with `ζ(s, x) = ζ(s, x+1) + x^{−s}`. When `s` is a non-positive integer
/// the single term whose `ζ(s+n, x)` sits on the pole is replaced by its
/// finite limit (the remaining weight times the residue 1).
pub fn zeta_srivastava_choi(s: &Real, x: &Real, cfg: &PrecisionConfig) -> Result<SeriesResult> {
    let prec = cfg.prec();
    let p = ZetaPoint::new(s.clone(), x.clone(), 0)?;
    let s = p.s.with_prec(prec);
    let mut x = p.x.with_prec(prec);
    let mut shift_sum = Real::zero(prec);
    while x < 1.0 {
        shift_sum += (-(&s * x.ln())).exp();
        x += 1i64;
    }
    let pole_index: Option<u64> = s.to_integer_exact().and_then(|i| {
        let i = i.to_i64()?;
        (i <= 0).then(|| (1 - i) as u64)
    });

    let mut weight = Real::one(prec); // (s)_n / n!
    let mut weight_index = 0u64;
    let series = sum_alternating_accelerated(
        |n| {
            while weight_index < n {
                weight_index += 1;
                let factor = &s + (weight_index - 1);
                if Some(weight_index) == pole_index && factor.is_zero() {
                    // keep the zero factor out until the pole term is consumed
                } else {
                    weight *= factor;
                }
                weight /= weight_index;
            }
            let sn = &s + n;
            let zeta_part = match pole_index {
                Some(pi) if n == pi => Real::one(prec),
                Some(pi) if n > pi => return Ok(Real::zero(prec)),
                _ => hurwitz_zeta(&sn, &x, cfg)?,
            };
            let t = &weight * &zeta_part / (n + 1);
            Ok(if n % 2 == 0 { -t } else { t })
        },
        1,
        cfg,
    )?;
    let eps = &s - 1i64;
    let lead = (-(&eps * x.ln())).exp() / &eps;
    Ok(SeriesResult { value: lead + series.value + shift_sum, ..series })
}

/// `ζ(s, x)` from the Poisson-summation representation
///
/// ```text
/// ζ(s, x) = ½ x^{−s} + x^{1−s}/(s−1) + 2 Σ_{n≥1} ∫₀^∞ cos(2πnt)/(x+t)^s dt
/// ```
///
/// for `s > 1`. The first `n_terms` integrals use oscillatory quadrature;
/// the rest follow from integration by parts,
/// `∫₀^∞ g cos ωt dt ~ Σ_{j≥1} (−1)^j g^(2j−1)(0)/ω^{2j}`, summed over `n`
/// through `ζ(2j, N+1)`.
pub fn poisson_zeta(s: &Real, x: &Real, n_terms: u64, cfg: &PrecisionConfig) -> Result<SeriesResult> {
    let prec = cfg.prec();
    let p = ZetaPoint::new(s.clone(), x.clone(), 0)?;
    let s = p.s.with_prec(prec);
    let x = p.x.with_prec(prec);
    if s <= 1.0 {
        return Err(Error::domain(format!("the Poisson representation needs s > 1, got {s}")));
    }
    let quad_cfg = cfg.loosened(1e-12);
    let two_pi = Real::pi(prec).mul_2si(1);
    let neg_s = -&s;

    let mut series = Real::zero(prec);
    let mut terms = 0u64;
    for n in 1..=n_terms {
        let r = integrate_oscillatory(
            |t| Ok(((t + &x).ln() * &neg_s).exp()),
            &(&two_pi * n),
            &Real::zero(prec),
            Oscillator::Cos,
            &quad_cfg,
        )?;
        series += r.value;
        terms += r.terms_used;
    }
    // g^(r)(0) = (−s)(−s−1)…(−s−r+1) x^{−s−r}
    let derivative = |r: usize| -> Real {
        let mut v = ((x.ln()) * &neg_s).exp();
        for i in 0..r {
            v = v * (&neg_s - i as u64) / &x;
        }
        v
    };
    let tail = ibp_tail(
        |j| derivative(2 * j + 1) / two_pi.powi(2 * j as i32 + 2),
        |j| 2 * j + 2,
        n_terms,
        &quad_cfg,
    )?;
    let lx = x.ln();
    let head = (-(&s * &lx)).exp().mul_2si(-1) + (-((&s - 1i64) * &lx)).exp() / (&s - 1i64);
    Ok(SeriesResult {
        value: head + (series - tail.value).mul_2si(1),
        err_estimate: Real::max_of(&tail.err_estimate.mul_2si(1), &Real::from_f64(prec, 1e-10)),
        terms_used: terms,
        converged: true,
    })
}

/// Checks `ζ(s, x) + ζ(s, 1−x) = 4Γ(1−s) sin(πs/2) Σ cos(2nπx)/(2πn)^{1−s}`.
pub fn zeta_symmetric_check(s: &Real, x: &Real, cfg: &PrecisionConfig) -> Result<IdentityReport> {
    let prec = cfg.prec();
    let s = s.with_prec(prec);
    let x = x.with_prec(prec);
    unit_interval(&x, false)?;
    let one_minus_x = Real::one(prec) - &x;
    let lhs = zeta_hasse(&ZetaPoint::new(s.clone(), x.clone(), 0)?, cfg)?.value
        + zeta_hasse(&ZetaPoint::new(s.clone(), one_minus_x, 0)?, cfg)?.value;
    let two_pi = Real::pi(prec).mul_2si(1);
    let sm1 = &s - 1i64;
    let cos_sum =
        sum_trig_averaged(|n| ((&two_pi * n).ln() * &sm1).exp(), Trig::Cos, Harmonic::Even, &x, cfg)?;
    let gamma = log_gamma(&(Real::one(prec) - &s), cfg)?.exp();
    let rhs = gamma.mul_2si(2) * (Real::pi(prec) * &s).mul_2si(-1).sin() * cos_sum.value;
    Ok(IdentityReport::new("eq-3.20-symmetric", lhs, rhs, 1e-6)
        .at(&x)
        .with_meta(format!("s = {}", s.to_decimal(12))))
}

/// Checks the sum and difference forms for `ζ''(0, x) ± ζ''(0, 1−x)`
/// against the Hasse-route values.
pub fn doubleprime0_pair_checks(x: &Real, cfg: &PrecisionConfig) -> Result<Vec<IdentityReport>> {
    let prec = cfg.prec();
    let x = x.with_prec(prec);
    unit_interval(&x, false)?;
    let a = zeta_doubleprime0(&x, Route::Hasse, cfg)?;
    let b = zeta_doubleprime0(&(Real::one(prec) - &x), Route::Hasse, cfg)?;
    let (sin_part, cos_part) = doubleprime0_fourier_parts(&x, cfg)?;
    Ok(vec![
        IdentityReport::new("eq-3.19-sum", &a + &b, cos_part.mul_2si(1), 1e-4).at(&x),
        IdentityReport::new("eq-3.19-difference", &a - &b, sin_part.mul_2si(1), 1e-4).at(&x),
    ])
}
