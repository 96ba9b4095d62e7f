//! Parsing of compute requests and dispatch to the library kernels.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use clap::ValueEnum;
use serde_json::{json, Map, Value};
use stieltjes_core::fourier::{sondow_gamma, SondowArg, SondowRoute};
use stieltjes_core::gamma::{bourguet_log_gamma, digamma, log_gamma};
use stieltjes_core::hurwitz::{
    poisson_zeta, zeta, zeta_doubleprime0, zeta_fourier, zeta_hasse, zeta_prime0, zeta_srivastava_choi, Route,
    ZetaPoint,
};
use stieltjes_core::stieltjes::{digamma_hasse_series, gamma1_half_closed_form, gamma1_rational, gamma_m, Method, Rational};
use stieltjes_core::{Error, PrecisionConfig, Real, Result, SeriesResult};

/// Supported range of `--digits`.
pub const DIGITS_RANGE: std::ops::RangeInclusive<u32> = 10..=200;

/// Number of oscillatory integrals evaluated directly by the quadrature
/// routes before the asymptotic tail takes over.
const QUADRATURE_TERMS: u64 = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Quantity {
    GammaM,
    Zeta,
    ZetaPrime0,
    ZetaDoubleprime0,
    Digamma,
    LogGamma,
    SondowGamma,
}

impl Quantity {
    pub fn as_str(self) -> &'static str {
        match self {
            Quantity::GammaM => "gamma_m",
            Quantity::Zeta => "zeta",
            Quantity::ZetaPrime0 => "zeta_prime0",
            Quantity::ZetaDoubleprime0 => "zeta_doubleprime0",
            Quantity::Digamma => "digamma",
            Quantity::LogGamma => "log_gamma",
            Quantity::SondowGamma => "sondow_gamma",
        }
    }

    /// Methods accepted for this quantity; the first is the default.
    pub fn methods(self) -> &'static [&'static str] {
        match self {
            Quantity::GammaM => &["hasse", "bell", "laurent_oracle", "briggs"],
            Quantity::Zeta => &["euler_maclaurin", "hasse", "fourier", "srivastava_choi", "poisson"],
            Quantity::ZetaPrime0 | Quantity::ZetaDoubleprime0 => &["hasse", "fourier"],
            Quantity::Digamma => &["euler_maclaurin", "hasse"],
            Quantity::LogGamma => &["stirling", "bourguet"],
            Quantity::SondowGamma => &["series", "integral", "2q"],
        }
    }

    /// Resolves `--method`, defaulting to the first listed method.
    pub fn method(self, requested: Option<&str>) -> Result<&'static str> {
        let Some(name) = requested else {
            return Ok(self.methods()[0]);
        };
        let name = name.trim().to_ascii_lowercase().replace('-', "_");
        let name = match name.as_str() {
            "em" => "euler_maclaurin",
            "oracle" | "laurent" => "laurent_oracle",
            other => other,
        };
        self.methods().iter().copied().find(|m| *m == name).ok_or_else(|| {
            Error::Parse(format!(
                "method {name:?} is not available for {} (expected one of: {})",
                self.as_str(),
                self.methods().join(", ")
            ))
        })
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A numeric argument given either as a decimal or as an exact fraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Number {
    Decimal(String),
    /// Reduced `num/den` with `den > 0`.
    Fraction { num: i64, den: u64 },
}

impl Number {
    pub fn to_real(&self, prec: u32) -> Real {
        match self {
            Number::Decimal(s) => Real::parse(prec, s).expect("validated when parsed"),
            Number::Fraction { num, den } => Real::from_ratio(prec, *num, *den as i64),
        }
    }

    /// The exact rational in `(0, 1)`, when the argument is one.
    pub fn unit_fraction(&self) -> Option<Rational> {
        match self {
            Number::Fraction { num, den } if *num > 0 => Rational::new(*num as u64, *den).ok(),
            _ => None,
        }
    }
}

impl FromStr for Number {
    type Err = Error;

    fn from_str(s: &str) -> Result<Number> {
        let s = s.trim();
        if let Some((p, q)) = s.split_once('/') {
            let num: i64 = p.trim().parse().map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
            let den: u64 = q.trim().parse().map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
            if den == 0 {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            let g = gcd(num.unsigned_abs(), den).max(1);
            return Ok(Number::Fraction { num: num / g as i64, den: den / g });
        }
        let v = Real::parse(64, s)?;
        if !v.is_finite() {
            return Err(Error::Parse(format!("{s:?} is not a finite number")));
        }
        Ok(Number::Decimal(s.to_string()))
    }
}

impl fmt::Display for Number {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Number::Decimal(s) => f.write_str(s),
            Number::Fraction { num, den: 1 } => write!(f, "{num}"),
            Number::Fraction { num, den } => write!(f, "{num}/{den}"),
        }
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Raw parameters as given on the command line.
#[derive(Clone, Debug, Default)]
pub struct Params {
    pub m: u32,
    pub s: Option<String>,
    pub x: Option<String>,
    pub order: u32,
    pub angle: Option<String>,
}

/// A validated request for one value.
#[derive(Clone, Debug)]
pub struct ComputeRequest {
    pub quantity: Quantity,
    pub method: &'static str,
    pub m: u32,
    pub s: Option<Number>,
    pub x: Option<Number>,
    pub order: u32,
    /// `ω = e^{iπp/q}` for `sondow_gamma`.
    pub angle: Option<(i64, u64)>,
    pub digits: u32,
    pub max_terms: Option<u64>,
}

fn parse_opt(v: &Option<String>) -> Result<Option<Number>> {
    v.as_deref().map(str::parse).transpose()
}

impl ComputeRequest {
    pub fn new(
        quantity: Quantity,
        params: &Params,
        method: Option<&str>,
        digits: u32,
        max_terms: Option<u64>,
    ) -> Result<ComputeRequest> {
        if !DIGITS_RANGE.contains(&digits) {
            return Err(Error::Config(format!(
                "--digits must be in {}..={}, got {digits}",
                DIGITS_RANGE.start(),
                DIGITS_RANGE.end()
            )));
        }
        let angle = match &params.angle {
            None => None,
            Some(a) => match a.parse::<Number>()? {
                Number::Fraction { num, den } => Some((num, den)),
                Number::Decimal(d) => match d.parse::<i64>() {
                    Ok(n) => Some((n, 1)),
                    Err(_) => return Err(Error::Parse(format!("--angle expects p/q, got {d:?}"))),
                },
            },
        };
        let req = ComputeRequest {
            quantity,
            method: quantity.method(method)?,
            m: params.m,
            s: parse_opt(&params.s)?,
            x: parse_opt(&params.x)?,
            order: params.order,
            angle,
            digits,
            max_terms,
        };
        req.check_shape()?;
        Ok(req)
    }

    fn check_shape(&self) -> Result<()> {
        let need = |cond: bool, what: &str| {
            if cond {
                Ok(())
            } else {
                Err(Error::Parse(format!("{} needs {what}", self.quantity)))
            }
        };
        match self.quantity {
            Quantity::Zeta => {
                need(self.s.is_some(), "-s")?;
                need(self.x.is_some(), "-x")
            }
            Quantity::SondowGamma => need(self.x.is_some() != self.angle.is_some(), "exactly one of -x or --angle"),
            _ => need(self.x.is_some(), "-x"),
        }
    }

    /// The same request at another `x` (used by tables).
    pub fn with_x(&self, x: Number) -> ComputeRequest {
        ComputeRequest { x: Some(x), ..self.clone() }
    }

    pub fn config(&self) -> Result<PrecisionConfig> {
        let cfg = PrecisionConfig::new(self.digits)?;
        match self.max_terms {
            Some(n) => cfg.with_max_terms(n),
            None => Ok(cfg),
        }
    }

    /// Canonical parameter map (only the parameters the quantity uses).
    pub fn params(&self) -> BTreeMap<&'static str, String> {
        let mut p = BTreeMap::new();
        if self.quantity == Quantity::GammaM {
            p.insert("m", self.m.to_string());
        }
        if let Some(s) = &self.s {
            p.insert("s", s.to_string());
        }
        if let Some(x) = &self.x {
            p.insert("x", x.to_string());
        }
        if self.quantity == Quantity::Zeta && self.order > 0 {
            p.insert("order", self.order.to_string());
        }
        if let Some((num, den)) = self.angle {
            p.insert("angle", format!("{num}/{den}"));
        }
        p
    }

    /// Key used by the result cache.
    pub fn cache_key(&self) -> String {
        let params: Vec<String> = self.params().iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!(
            "{}|{}|{}|digits={}|max_terms={}",
            self.quantity,
            params.join(","),
            self.method,
            self.digits,
            self.max_terms.map_or("default".to_string(), |n| n.to_string())
        )
    }
}

/// Outcome of one evaluation.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub result: SeriesResult,
    /// Imaginary part, for complex-valued quantities.
    pub imag: Option<Real>,
    /// An independent closed form for the same value, with its name.
    pub closed_form: Option<(&'static str, Real)>,
}

impl From<SeriesResult> for Outcome {
    fn from(result: SeriesResult) -> Outcome {
        Outcome { result, imag: None, closed_form: None }
    }
}

fn plain(value: Real, cfg: &PrecisionConfig) -> Outcome {
    let err = cfg.tolerance().clone();
    Outcome::from(SeriesResult { value, err_estimate: err, terms_used: 0, converged: true })
}

/// Evaluates a request.
pub fn evaluate(req: &ComputeRequest) -> Result<Outcome> {
    let cfg = req.config()?;
    let prec = cfg.prec();
    let x = req.x.as_ref().map(|x| x.to_real(prec));
    let x_ref = || x.as_ref().expect("checked by check_shape");
    match req.quantity {
        Quantity::GammaM => {
            let method: Method = req.method.parse()?;
            let mut out = Outcome::from(gamma_m(req.m, x_ref(), method, &cfg)?);
            if req.m == 1 {
                if let Some(r) = req.x.as_ref().and_then(Number::unit_fraction) {
                    out.closed_form = Some(if (r.p(), r.q()) == (1, 2) {
                        ("gamma1-half-closed-form", gamma1_half_closed_form(&cfg)?)
                    } else {
                        ("gamma1-rational", gamma1_rational(&r, &cfg)?)
                    });
                }
            }
            Ok(out)
        }
        Quantity::Zeta => {
            let s = req.s.as_ref().expect("checked by check_shape").to_real(prec);
            let p = ZetaPoint::new(s.clone(), x_ref().clone(), req.order)?;
            let direct_only = || {
                if req.order == 0 {
                    Ok(())
                } else {
                    Err(Error::domain(format!("method {} evaluates ζ(s, x) itself (--order 0)", req.method)))
                }
            };
            Ok(Outcome::from(match req.method {
                "euler_maclaurin" => zeta(&p, &cfg)?,
                "hasse" => zeta_hasse(&p, &cfg)?,
                "fourier" => zeta_fourier(&p, &cfg)?,
                "srivastava_choi" => {
                    direct_only()?;
                    zeta_srivastava_choi(&s, x_ref(), &cfg)?
                }
                "poisson" => {
                    direct_only()?;
                    poisson_zeta(&s, x_ref(), QUADRATURE_TERMS, &cfg)?
                }
                other => unreachable!("method {other} validated at parse time"),
            }))
        }
        Quantity::ZetaPrime0 | Quantity::ZetaDoubleprime0 => {
            let route = if req.method == "fourier" { Route::Fourier } else { Route::Hasse };
            let v = if req.quantity == Quantity::ZetaPrime0 {
                zeta_prime0(x_ref(), route, &cfg)?
            } else {
                zeta_doubleprime0(x_ref(), route, &cfg)?
            };
            Ok(plain(v, &cfg))
        }
        Quantity::Digamma => match req.method {
            "hasse" => Ok(Outcome::from(digamma_hasse_series(x_ref(), &cfg)?)),
            _ => Ok(plain(digamma(x_ref(), &cfg)?, &cfg)),
        },
        Quantity::LogGamma => match req.method {
            "bourguet" => Ok(Outcome::from(bourguet_log_gamma(x_ref(), QUADRATURE_TERMS, &cfg)?)),
            _ => Ok(plain(log_gamma(x_ref(), &cfg)?, &cfg)),
        },
        Quantity::SondowGamma => {
            let arg = match (&x, req.angle) {
                (Some(z), _) => SondowArg::Real(z.clone()),
                (None, Some((p, q))) => SondowArg::Angle { p, q },
                (None, None) => unreachable!("checked by check_shape"),
            };
            let route = match req.method {
                "integral" => SondowRoute::Integral,
                "2q" => SondowRoute::TwoQ,
                _ => SondowRoute::Series,
            };
            let (re, im) = sondow_gamma(&arg, route, &cfg)?;
            let mut out = plain(re, &cfg);
            out.imag = Some(im);
            Ok(out)
        }
    }
}

/// Decimal rendering of an error estimate.
pub fn render_err(err: &Real) -> String {
    err.to_decimal(6)
}

/// The deterministic part of a compute document.
pub fn result_document(req: &ComputeRequest, out: &Outcome) -> Value {
    let mut doc = Map::new();
    doc.insert("quantity".into(), json!(req.quantity.as_str()));
    doc.insert("params".into(), json!(req.params()));
    doc.insert("method".into(), json!(req.method));
    doc.insert("digits".into(), json!(req.digits));
    doc.insert("value".into(), json!(out.result.value.to_decimal(req.digits as usize)));
    if let Some(im) = &out.imag {
        doc.insert("imag".into(), json!(im.to_decimal(req.digits as usize)));
    }
    doc.insert("err_estimate".into(), json!(render_err(&out.result.err_estimate)));
    doc.insert("terms_used".into(), json!(out.result.terms_used));
    doc.insert("converged".into(), json!(out.result.converged));
    if let Some((name, v)) = &out.closed_form {
        let residual = (v - &out.result.value).abs();
        doc.insert(
            "closed_form".into(),
            json!({
                "form": name,
                "value": v.to_decimal(req.digits as usize),
                "residual": render_err(&residual),
            }),
        );
    }
    Value::Object(doc)
}
