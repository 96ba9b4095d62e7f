//! Lerch's series-differentiation transform and the Fourier-series
//! identities built on it: Kummer's series for `log Γ`, Deninger's series,
//! the Fourier series for `γ_1(x)`, the `log(1 + 1/n)` family, Kölbig's
//! integral and the generalized Euler constant function `γ(z)`.
//!
//! Every conditionally convergent trigonometric series goes through
//! [`sum_trig_averaged`]; no identity here sums such a series on its own.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gamma::{digamma, log_gamma};
use crate::hurwitz::{zeta_doubleprime0, Route};
use crate::numeric::{
    integrate_adaptive, sum_alternating_accelerated, sum_smooth, sum_trig_averaged, Harmonic, PrecisionConfig,
    SeriesResult, Trig, Upper,
};
use crate::real::Real;
use crate::report::{FourierIdentityReport, IdentityReport};
use crate::stieltjes::{gamma_m, Method, Rational};

/// Default tolerance for identities whose left side is an averaged
/// trigonometric series.
pub const AVERAGED_TOL: f64 = 1e-4;

/// A coefficient sequence `n ↦ c_n`, `n ≥ 1` (with `c_0 = 0`).
#[derive(Clone)]
pub struct CoeffSeq {
    eval: Arc<dyn Fn(u64) -> Real + Send + Sync>,
    pub label: String,
}

impl CoeffSeq {
    pub fn new(label: impl Into<String>, eval: impl Fn(u64) -> Real + Send + Sync + 'static) -> CoeffSeq {
        CoeffSeq { eval: Arc::new(eval), label: label.into() }
    }

    /// `c_n`; zero at `n = 0`.
    pub fn at(&self, n: u64) -> Real {
        if n == 0 {
            Real::zero((self.eval)(1).prec())
        } else {
            (self.eval)(n)
        }
    }

    /// The constant sequence `c_n ≡ v`.
    pub fn constant(v: Real) -> CoeffSeq {
        CoeffSeq::new(format!("constant {}", v.to_decimal(6)), move |_| v.clone())
    }
}

impl fmt::Debug for CoeffSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoeffSeq").field("label", &self.label).finish()
    }
}

/// Lerch's transform of `f(x) = Σ c_n/n · sin 2πnx` (`Trig::Sin`) or
/// `g(x) = Σ c_n/n · cos 2πnx` (`Trig::Cos`):
///
/// ```text
/// f'(x)·sin πx/π = −c_1 sin πx + Σ_{n≥1} (c_n − c_{n+1}) sin (2n+1)πx
/// g'(x)·sin πx/π = −c_1 cos πx + Σ_{n≥1} (c_n − c_{n+1}) cos (2n+1)πx
/// ```
///
/// Returns the right-hand side, with the series summed by iterated
/// averaging.
pub fn lerch_transform(c: &CoeffSeq, mode: Trig, x: &Real, cfg: &PrecisionConfig) -> Result<SeriesResult> {
    let prec = cfg.prec();
    let x = x.with_prec(prec);
    let series = sum_trig_averaged(|n| c.at(n) - c.at(n + 1), mode, Harmonic::Odd, &x, cfg)?;
    let (sin, cos) = (Real::pi(prec) * &x).sin_cos();
    let lead = c.at(1) * if mode == Trig::Sin { sin } else { cos };
    Ok(series.map(|v| v - lead))
}

/// Combined transform for `f + g`: the sum of the sine transform of `c`
/// and the cosine transform of `d`.
pub fn lerch_transform_combined(c: &CoeffSeq, d: &CoeffSeq, x: &Real, cfg: &PrecisionConfig) -> Result<SeriesResult> {
    let a = lerch_transform(c, Trig::Sin, x, cfg)?;
    let b = lerch_transform(d, Trig::Cos, x, cfg)?;
    Ok(a.combine(b, |u, v| u + v))
}

fn open_unit(x: &Real, prec: u32) -> Result<Real> {
    let x = x.with_prec(prec);
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::domain(format!("the series needs 0 < x < 1, got {x}")));
    }
    Ok(x)
}

fn gamma_log_2pi(prec: u32) -> Real {
    Real::euler_gamma(prec) + Real::pi(prec).mul_2si(1).ln()
}

/// Checks Kummer's series
/// `log Γ(x) = ½ log(π/sin πx) + [γ + log 2π](½ − x) + (1/π) Σ log n/n · sin 2πnx`.
pub fn kummer_log_gamma(x: &Real, cfg: &PrecisionConfig) -> Result<FourierIdentityReport> {
    let prec = cfg.prec();
    let x = open_unit(x, prec)?;
    let pi = Real::pi(prec);
    let series = sum_trig_averaged(
        |n| Real::from_u64(prec, n).ln() / n,
        Trig::Sin,
        Harmonic::Even,
        &x,
        cfg,
    )?;
    let rhs = (&pi / (&pi * &x).sin()).ln().mul_2si(-1)
        + gamma_log_2pi(prec) * (Real::from_ratio(prec, 1, 2) - &x)
        + series.value / &pi;
    Ok(IdentityReport::new("eq-3.15-kummer", log_gamma(&x, cfg)?, rhs, 1e-5).at(&x))
}

/// `Σ log(1 + 1/n) · trig(k(n)πx)` for the odd (`(2n+1)πx`) or even
/// (`2nπx`) harmonics.
fn log_ratio_series(trig: Trig, harmonic: Harmonic, x: &Real, cfg: &PrecisionConfig) -> Result<SeriesResult> {
    let prec = cfg.prec();
    sum_trig_averaged(|n| Real::from_ratio(prec, 1, n as i64).ln_1p(), trig, harmonic, x, cfg)
}

/// `ψ(x) sin πx + (π/2) cos πx`.
fn psi_block(x: &Real, cfg: &PrecisionConfig) -> Result<Real> {
    let prec = cfg.prec();
    let (sin, cos) = (Real::pi(prec) * x).sin_cos();
    Ok(digamma(x, cfg)? * sin + (Real::pi(prec) * cos).mul_2si(-1))
}

/// Checks
/// `Σ log(1 + 1/n) sin (2n+1)πx = −[ψ(x) sin πx + (π/2) cos πx + (γ + log 2π) sin πx]`.
pub fn series_316(x: &Real, cfg: &PrecisionConfig) -> Result<FourierIdentityReport> {
    let prec = cfg.prec();
    let x = open_unit(x, prec)?;
    let lhs = log_ratio_series(Trig::Sin, Harmonic::Odd, &x, cfg)?.value;
    let sin = (Real::pi(prec) * &x).sin();
    let rhs = -(psi_block(&x, cfg)? + gamma_log_2pi(prec) * sin);
    Ok(IdentityReport::new("eq-3.16", lhs, rhs, 1e-5).at(&x))
}

/// Checks `log(π/2) = Σ (−1)^{n+1} log(1 + 1/n)` under alternating
/// acceleration.
pub fn wallis_check(cfg: &PrecisionConfig) -> Result<IdentityReport> {
    let prec = cfg.prec();
    let sum = sum_alternating_accelerated(
        |n| {
            let t = Real::from_ratio(prec, 1, n as i64).ln_1p();
            Ok(if n % 2 == 1 { t } else { -t })
        },
        1,
        cfg,
    )?;
    let rhs = Real::pi(prec).mul_2si(-1).ln();
    Ok(IdentityReport::new("eq-3.17-wallis", sum.value, rhs, 1e-10))
}

/// Closed form of `f(x) = Σ log n/n · cos 2πnx`:
/// `½[ζ''(0, x) + ζ''(0, 1−x)] + [γ + log 2π] log(2 sin πx)`, with the
/// `ζ''` values from the Hasse route.
pub fn deninger_closed(x: &Real, cfg: &PrecisionConfig) -> Result<Real> {
    let prec = cfg.prec();
    let x = open_unit(x, prec)?;
    let a = zeta_doubleprime0(&x, Route::Hasse, cfg)?;
    let b = zeta_doubleprime0(&(Real::one(prec) - &x), Route::Hasse, cfg)?;
    let log_sin = (Real::pi(prec) * &x).sin().mul_2si(1).ln();
    Ok((a + b).mul_2si(-1) + gamma_log_2pi(prec) * log_sin)
}

/// Checks Deninger's series: the averaged `Σ log n/n · cos 2πnx` against
/// [`deninger_closed`].
pub fn deninger_f(x: &Real, cfg: &PrecisionConfig) -> Result<FourierIdentityReport> {
    let prec = cfg.prec();
    let x = open_unit(x, prec)?;
    let lhs = sum_trig_averaged(|n| Real::from_u64(prec, n).ln() / n, Trig::Cos, Harmonic::Even, &x, cfg)?;
    Ok(IdentityReport::new("eq-3.22-deninger", lhs.value, deninger_closed(&x, cfg)?, AVERAGED_TOL).at(&x))
}

/// Checks `f(x + ½) = f(2x) − f(x) − log 2 · log(2 sin 2πx)` for
/// `0 < x < ½`, all three `f` values from [`deninger_closed`].
pub fn landau_f_functional(x: &Real, cfg: &PrecisionConfig) -> Result<FourierIdentityReport> {
    let prec = cfg.prec();
    let x = x.with_prec(prec);
    if !(x > 0.0 && x < 0.5) {
        return Err(Error::domain(format!("the functional equation needs 0 < x < 1/2, got {x}")));
    }
    let lhs = deninger_closed(&(&x + Real::from_ratio(prec, 1, 2)), cfg)?;
    let two_x = x.mul_2si(1);
    let log_term = Real::ln2(prec) * (Real::pi(prec) * &two_x).sin().mul_2si(1).ln();
    let rhs = deninger_closed(&two_x, cfg)? - deninger_closed(&x, cfg)? - log_term;
    Ok(IdentityReport::new("landau-f-functional", lhs, rhs, AVERAGED_TOL).at(&x))
}

/// Lerch coefficients for the `γ_1` Fourier series:
/// `c_n = [log²(2πn) + 2γ log(2πn) + ½(2γ² − ζ(2))]/π` and
/// `d_n = log(2πn) + γ`.
pub fn gamma1_fourier_coefficients(prec: u32) -> (CoeffSeq, CoeffSeq) {
    let pi = Real::pi(prec);
    let g = Real::euler_gamma(prec);
    let c0 = (g.sqr().mul_2si(1) - pi.sqr() / 6i64).mul_2si(-1);
    let (pi_c, g_c) = (pi.clone(), g.clone());
    let c = CoeffSeq::new("gamma1 sine coefficients", move |n| {
        let l = (pi_c.mul_2si(1) * n).ln();
        (l.sqr() + (&g_c * &l).mul_2si(1) + &c0) / &pi_c
    });
    let d = CoeffSeq::new("log(2 pi n) + gamma", move |n| (pi.mul_2si(1) * n).ln() + &g);
    (c, d)
}

/// `γ_1(x)` from its Fourier series
///
/// ```text
/// 2γ_1(x) sin πx/π = −c_1 sin πx + Σ (c_n − c_{n+1}) sin (2n+1)πx
///                    − d_1 cos πx + Σ (d_n − d_{n+1}) cos (2n+1)πx
/// ```
///
/// Verification grade; `x` must stay at least `1e-3` away from 0 and 1.
pub fn gamma1_fourier(x: &Real, cfg: &PrecisionConfig) -> Result<SeriesResult> {
    let prec = cfg.prec();
    let x = open_unit(x, prec)?;
    if x < 1e-3 || x > 1.0 - 1e-3 {
        return Err(Error::domain(format!("x = {x} is too close to an endpoint (division by sin πx)")));
    }
    let (c, d) = gamma1_fourier_coefficients(prec);
    let pi = Real::pi(prec);
    let scale = &pi / (&pi * &x).sin().mul_2si(1);
    Ok(lerch_transform_combined(&c, &d, &x, cfg)?.map(|v| v * &scale))
}

/// Which member of the `log(1 + 1/n)` series family to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `Σ log(1+1/n) cos (2n+1)πx = [γ_1(1−x) − γ_1(x)] sin πx/π − [γ + log 2π] cos πx`.
    Odd,
    /// The same series at `x = p/q`:
    /// `log q · cos(πp/q) − 2 sin(πp/q) Σ_{j=1}^{q−1} log Γ(j/q) sin(2πjp/q)`.
    OddRational,
    /// `Σ log(1+1/n) cos 2nπx`.
    EvenCos,
    /// `Σ log(1+1/n) sin 2nπx`.
    EvenSin,
}

impl Family {
    pub fn id(self) -> &'static str {
        match self {
            Family::Odd => "eq-3.25",
            Family::OddRational => "eq-3.27",
            Family::EvenCos => "eq-3.28",
            Family::EvenSin => "eq-3.29",
        }
    }
}

/// The argument of a family check: a real `x`, or an exact `p/q` for
/// [`Family::OddRational`].
#[derive(Clone, Debug)]
pub enum FamilyArg {
    Real(Real),
    Rational(Rational),
}

/// Checks one member of the `log(1 + 1/n)` family. The right-hand sides use
/// `Δ = γ_1(1−x) − γ_1(x)` (Hasse route), `ψ(x)` and `log Γ`:
///
/// ```text
/// Σ log(1+1/n) cos 2nπx = Δ sin πx cos πx/π − [γ + log 2π] − [ψ(x) sin πx + (π/2) cos πx] sin πx
/// Σ log(1+1/n) sin 2nπx = −Δ sin² πx/π − [ψ(x) sin πx + (π/2) cos πx] cos πx
/// ```
pub fn series_325_family(arg: &FamilyArg, which: Family, cfg: &PrecisionConfig) -> Result<FourierIdentityReport> {
    let prec = cfg.prec();
    let x = match arg {
        FamilyArg::Real(x) => open_unit(x, prec)?,
        FamilyArg::Rational(r) => r.to_real(prec),
    };
    let pi = Real::pi(prec);
    let (sin, cos) = (&pi * &x).sin_cos();
    let delta = || -> Result<Real> {
        Ok(gamma_m(1, &(Real::one(prec) - &x), Method::Hasse, cfg)?.value - gamma_m(1, &x, Method::Hasse, cfg)?.value)
    };
    let (lhs, rhs) = match which {
        Family::Odd => {
            let lhs = log_ratio_series(Trig::Cos, Harmonic::Odd, &x, cfg)?.value;
            (lhs, delta()? * &sin / &pi - gamma_log_2pi(prec) * &cos)
        }
        Family::OddRational => {
            let r = match arg {
                FamilyArg::Rational(r) => *r,
                FamilyArg::Real(_) => return Err(Error::domain("the rational form needs an exact p/q")),
            };
            let lhs = log_ratio_series(Trig::Cos, Harmonic::Odd, &x, cfg)?.value;
            let mut lg_sin = Real::zero(prec);
            for j in 1..r.q() {
                let angle = pi.mul_2si(1) * Real::from_ratio(prec, ((j * r.p()) % r.q()) as i64, r.q() as i64);
                lg_sin += log_gamma(&Real::from_ratio(prec, j as i64, r.q() as i64), cfg)? * angle.sin();
            }
            let rhs = Real::from_u64(prec, r.q()).ln() * &cos - (&sin * &lg_sin).mul_2si(1);
            (lhs, rhs)
        }
        Family::EvenCos => {
            let lhs = log_ratio_series(Trig::Cos, Harmonic::Even, &x, cfg)?.value;
            let rhs = delta()? * &sin * &cos / &pi - gamma_log_2pi(prec) - psi_block(&x, cfg)? * &sin;
            (lhs, rhs)
        }
        Family::EvenSin => {
            let lhs = log_ratio_series(Trig::Sin, Harmonic::Even, &x, cfg)?.value;
            let rhs = -(delta()? * sin.sqr() / &pi) - psi_block(&x, cfg)? * &cos;
            (lhs, rhs)
        }
    };
    let report = IdentityReport::new(which.id(), lhs, rhs, AVERAGED_TOL).at(&x);
    Ok(match arg {
        FamilyArg::Rational(r) => report.with_meta(format!("p/q = {r}")),
        FamilyArg::Real(_) => report,
    })
}

/// Three-way check around `∫₀¹ ψ(x) sin πx dx`:
///
/// * `2 Σ log n/(4n² − 1) = Σ log(1 + 1/n)/(2n+1)` (series equivalence);
/// * quadrature against `−(2/π)[γ + log 2π + 2 Σ log n/(4n² − 1)]`;
/// * quadrature against the integrated `log(1+1/n)` series,
///   `−(2/π)[Σ log(1+1/n)/(2n+1) + γ + log 2π]`.
///
/// A fourth report evaluates the integrated form with the sign of the
/// integral flipped, as it is sometimes printed; it is expected to fail and
/// is annotated as a discrepancy.
pub fn kolbig_check(cfg: &PrecisionConfig) -> Result<Vec<FourierIdentityReport>> {
    let prec = cfg.prec();
    let pi = Real::pi(prec);
    let g2 = gamma_log_2pi(prec);
    let log_series = sum_smooth(
        |t| {
            let four_t2 = (t * t).scale(&Real::from_u64(prec, 4)).add_scalar(&Real::from_i64(prec, -1));
            Ok(&t.ln() / &four_t2)
        },
        1,
        None,
        cfg,
    )?
    .value
    .mul_2si(1);
    let ratio_series = sum_smooth(
        |t| {
            let inv = t.recip();
            let odd = t.scale(&Real::from_u64(prec, 2)).add_scalar(&Real::one(prec));
            Ok(&inv.ln_1p() / &odd)
        },
        1,
        None,
        cfg,
    )?
    .value;
    let quad_cfg = cfg.loosened(1e-15);
    let integral = integrate_adaptive(
        |x| Ok(digamma(x, &quad_cfg)? * (Real::pi(prec) * x).sin()),
        &Real::zero(prec),
        &Upper::Finite(Real::one(prec)),
        &quad_cfg,
    )?
    .value;
    let two_over_pi = Real::from_u64(prec, 2) / &pi;
    let kolbig = -(&two_over_pi * (&g2 + &log_series));
    let integrated = -(&two_over_pi * (&ratio_series + &g2));
    let printed = &two_over_pi * (&ratio_series + &g2);
    Ok(vec![
        IdentityReport::new("eq-3.30-series-equivalence", log_series, ratio_series.clone(), 1e-10),
        IdentityReport::new("eq-3.30-kolbig-quadrature", integral.clone(), kolbig, 1e-8),
        IdentityReport::new("eq-3.30-integrated-series", integral.clone(), integrated, 1e-8),
        IdentityReport::new("eq-3.30-printed-sign", integral, printed, 1e-8)
            .known_discrepancy("printed sign of the integral term"),
    ])
}

/// A complex number as a `(re, im)` pair.
#[derive(Clone, Debug)]
struct Cplx {
    re: Real,
    im: Real,
}

impl Cplx {
    fn new(re: Real, im: Real) -> Cplx {
        Cplx { re, im }
    }

    fn unit(angle: &Real) -> Cplx {
        let (s, c) = angle.sin_cos();
        Cplx::new(c, s)
    }

    fn mul(&self, o: &Cplx) -> Cplx {
        Cplx::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }

    fn scale(&self, k: &Real) -> Cplx {
        Cplx::new(&self.re * k, &self.im * k)
    }

    fn add(&self, o: &Cplx) -> Cplx {
        Cplx::new(&self.re + &o.re, &self.im + &o.im)
    }

    fn div(&self, o: &Cplx) -> Cplx {
        let den = o.re.sqr() + o.im.sqr();
        Cplx::new((&self.re * &o.re + &self.im * &o.im) / &den, (&self.im * &o.re - &self.re * &o.im) / &den)
    }

    fn ln(&self) -> Cplx {
        let modulus = (self.re.sqr() + self.im.sqr()).sqrt();
        Cplx::new(modulus.ln(), self.im.atan2(&self.re))
    }
}

/// Argument of the generalized Euler constant function `γ(z)`.
#[derive(Clone, Debug)]
pub enum SondowArg {
    /// A real `z` with `|z| ≤ 1`.
    Real(Real),
    /// `ω = e^{iπp/q}` on the unit circle, `q ≥ 1`, `p` an integer.
    Angle { p: i64, q: u64 },
}

impl SondowArg {
    fn angle_turns(p: i64, q: u64, prec: u32) -> Real {
        // ω = e^{2πi·t} with t = p/(2q) reduced into [0, 1)
        let two_q = 2 * q as i64;
        Real::from_ratio(prec, p.rem_euclid(two_q), two_q)
    }
}

/// Evaluation route for `γ(z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SondowRoute {
    /// `γ(z) = Σ_{n≥1} z^{n−1} [1/n − log(1 + 1/n)]`.
    Series,
    /// `γ(z) = ∫₀¹ (1 − y + log y)/((1 − zy) log y) dy`.
    Integral,
    /// `γ(ω) = −log(1−ω)/ω + Σ_{k=1}^{2q} ω^{k−1} log[Γ((k+1)/2q)/Γ(k/2q)]`
    /// for `ω = e^{iπp/q} ≠ 1`.
    TwoQ,
}

/// Coefficient `1/n − log(1 + 1/n)`.
fn euler_coefficient(n: u64, prec: u32) -> Real {
    let inv = Real::from_ratio(prec, 1, n as i64);
    &inv - inv.ln_1p()
}

/// `γ(z)` as `(re, im)`.
pub fn sondow_gamma(arg: &SondowArg, route: SondowRoute, cfg: &PrecisionConfig) -> Result<(Real, Real)> {
    let prec = cfg.prec();
    match (route, arg) {
        (SondowRoute::Series, SondowArg::Real(z)) => {
            let z = z.with_prec(prec);
            if z.abs() > 1.0 {
                return Err(Error::domain(format!("the power series needs |z| <= 1, got {z}")));
            }
            let value = if z == 1.0 {
                let tail = |n: &Real| Ok((n + 1i64) * n.recip().ln_1p() - 1i64);
                sum_smooth(|t| Ok(&t.recip() - &t.recip().ln_1p()), 1, Some(&tail), cfg)?.value
            } else if z == -1.0 {
                sum_alternating_accelerated(
                    |n| {
                        let c = euler_coefficient(n, prec);
                        Ok(if n % 2 == 1 { c } else { -c })
                    },
                    1,
                    cfg,
                )?
                .value
            } else {
                let stop = cfg.tolerance() / 1000i64;
                let mut acc = Real::zero(prec);
                let mut power = Real::one(prec);
                for n in 1..=cfg.max_terms() {
                    let t = &power * euler_coefficient(n, prec);
                    acc += &t;
                    if t.abs() < stop && power.abs() < stop {
                        break;
                    }
                    power *= &z;
                }
                acc
            };
            Ok((value, Real::zero(prec)))
        }
        (SondowRoute::Series, SondowArg::Angle { p, q }) => {
            // γ(ω) = ω^{−1} Σ_{n≥1} ω^n a_n with ω^n = e^{2πi n t}
            let t = SondowArg::angle_turns(*p, *q, prec);
            if t.is_zero() {
                return sondow_gamma(&SondowArg::Real(Real::one(prec)), route, cfg);
            }
            let re = sum_trig_averaged(|n| euler_coefficient(n, prec), Trig::Cos, Harmonic::Even, &t, cfg)?;
            let im = sum_trig_averaged(|n| euler_coefficient(n, prec), Trig::Sin, Harmonic::Even, &t, cfg)?;
            let omega = Cplx::unit(&(Real::pi(prec).mul_2si(1) * &t));
            let v = Cplx::new(re.value, im.value).div(&omega);
            Ok((v.re, v.im))
        }
        (SondowRoute::Integral, _) => {
            let omega = match arg {
                SondowArg::Real(z) => Cplx::new(z.with_prec(prec), Real::zero(prec)),
                SondowArg::Angle { p, q } => {
                    Cplx::unit(&(Real::pi(prec).mul_2si(1) * SondowArg::angle_turns(*p, *q, prec)))
                }
            };
            let wide = 2 * prec + 32;
            let part = |imag: bool| -> Result<Real> {
                integrate_adaptive(
                    |y| {
                        // (1 − y + log y)/log y cancels near y = 1; evaluate wide.
                        let yw = y.with_prec(wide);
                        let ly = yw.ln();
                        let ratio = (Real::one(wide) - &yw + &ly) / &ly;
                        let den = Cplx::new(Real::one(wide) - &omega.re * &yw, -(&omega.im * &yw));
                        let inv = Cplx::new(Real::one(wide), Real::zero(wide)).div(&den);
                        Ok((if imag { inv.im } else { inv.re } * ratio).with_prec(prec))
                    },
                    &Real::zero(prec),
                    &Upper::Finite(Real::one(prec)),
                    cfg,
                )
                .map(|r| r.value)
            };
            let re = part(false)?;
            let im = if omega.im.is_zero() { Real::zero(prec) } else { part(true)? };
            Ok((re, im))
        }
        (SondowRoute::TwoQ, SondowArg::Angle { p, q }) => {
            let t = SondowArg::angle_turns(*p, *q, prec);
            if t.is_zero() {
                return Err(Error::domain("the 2q formula needs ω ≠ 1 (log(1 − ω) is singular)"));
            }
            let omega = Cplx::unit(&(Real::pi(prec).mul_2si(1) * &t));
            let two_q = 2 * *q as i64;
            let mut acc = Cplx::new(Real::zero(prec), Real::zero(prec));
            let mut power = Cplx::new(Real::one(prec), Real::zero(prec));
            for k in 1..=two_q {
                let ratio = log_gamma(&Real::from_ratio(prec, k + 1, two_q), cfg)?
                    - log_gamma(&Real::from_ratio(prec, k, two_q), cfg)?;
                acc = acc.add(&power.scale(&ratio));
                power = power.mul(&omega);
            }
            let one_minus = Cplx::new(Real::one(prec) - &omega.re, -omega.im.clone());
            let correction = one_minus.ln().div(&omega);
            let v = acc.add(&correction.scale(&Real::from_i64(prec, -1)));
            Ok((v.re, v.im))
        }
        (SondowRoute::TwoQ, SondowArg::Real(_)) => {
            Err(Error::domain("the 2q formula needs an angle ω = e^{iπp/q}"))
        }
    }
}
