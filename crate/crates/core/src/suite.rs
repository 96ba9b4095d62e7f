//! Registry of identity checks grouped into named suites.
//!
//! Every check produces [`IdentityReport`]s with stable ids; a run over
//! several suites returns them sorted by id (ties keep registration order),
//! so two runs with the same configuration produce the same sequence.

use crate::error::{Error, Result};
use crate::fourier::{self, Family, FamilyArg, SondowArg, SondowRoute};
use crate::gamma::{bourguet_log_gamma, digamma, digamma_integral_check, log_gamma, polygamma};
use crate::hurwitz::{
    doubleprime0_pair_checks, hurwitz_zeta, poisson_zeta, zeta_fourier, zeta_hasse, zeta_prime0,
    zeta_srivastava_choi, zeta_symmetric_check, Route, ZetaPoint,
};
use crate::numeric::PrecisionConfig;
use crate::oracle::laurent_oracle;
use crate::real::Real;
use crate::report::IdentityReport;
use crate::stieltjes::{
    adamchik_reflection, coffey_difference_integral, coffey_ramanujan_sum, gamma0_digamma_residual, gamma1_fifth_closed_form,
    gamma1_fifth_printed, gamma1_half_closed_form, gamma1_prime, gamma1_prime_series, gamma1_quarter_closed_form,
    gamma1_rational, gamma_m, landau_gamma1_functional, stieltjes_shift, Method, Rational,
};

/// A named group of checks.
pub struct Suite {
    pub name: &'static str,
    pub description: &'static str,
    run: fn(&PrecisionConfig) -> Result<Vec<IdentityReport>>,
}

impl Suite {
    pub fn run(&self, cfg: &PrecisionConfig) -> Result<Vec<IdentityReport>> {
        (self.run)(cfg)
    }
}

/// All suites, in a fixed order.
pub const SUITES: &[Suite] = &[
    Suite { name: "functional", description: "recurrences and shift relations", run: functional },
    Suite { name: "stieltjes", description: "γ_m routes against the oracle; γ_1 closed forms", run: stieltjes },
    Suite { name: "adamchik", description: "reflection formula and the γ_1 functional equation", run: adamchik },
    Suite { name: "hurwitz", description: "Hurwitz zeta representations and ζ'(0,x), ζ''(0,x)", run: hurwitz },
    Suite { name: "gamma", description: "log Γ and digamma representations", run: gamma },
    Suite { name: "fourier", description: "Fourier series from Lerch's transform", run: fourier_suite },
    Suite { name: "kolbig", description: "the ψ(x) sin πx integral", run: kolbig },
    Suite { name: "sondow", description: "generalized Euler constant function γ(z)", run: sondow },
    Suite { name: "ramanujan", description: "Ramanujan's sum Σ 1/(n(e^{2πn} − 1))", run: ramanujan },
    Suite { name: "derivatives", description: "x-derivatives of ζ and γ_1", run: derivatives },
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.name).collect()
}

pub fn find_suite(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

/// Resolves a list of suite names; `"all"` expands to every suite.
/// Duplicates are dropped; an empty list or an unknown name is an error.
pub fn resolve(names: &[String]) -> Result<Vec<&'static Suite>> {
    if names.iter().all(|n| n.trim().is_empty()) {
        return Err(Error::Config("no suite selected".into()));
    }
    let mut out: Vec<&'static Suite> = Vec::new();
    for name in names.iter().map(|n| n.trim()).filter(|n| !n.is_empty()) {
        let add: Vec<&'static Suite> = if name == "all" {
            SUITES.iter().collect()
        } else {
            vec![find_suite(name).ok_or_else(|| {
                Error::Config(format!("unknown suite {name:?}; known: all, {}", suite_names().join(", ")))
            })?]
        };
        for s in add {
            if !out.iter().any(|o| o.name == s.name) {
                out.push(s);
            }
        }
    }
    Ok(out)
}

/// Sorts reports by id; the sort is stable.
pub fn sort_reports(reports: &mut [IdentityReport]) {
    reports.sort_by(|a, b| a.id.cmp(&b.id));
}

/// Runs the named suites sequentially and returns the sorted reports.
pub fn run_suites(names: &[String], cfg: &PrecisionConfig) -> Result<Vec<IdentityReport>> {
    let mut reports = Vec::new();
    for suite in resolve(names)? {
        reports.extend(suite.run(cfg)?);
    }
    sort_reports(&mut reports);
    Ok(reports)
}

fn reals(cfg: &PrecisionConfig, values: &[(i64, i64)]) -> Vec<Real> {
    values.iter().map(|&(p, q)| cfg.ratio(p, q)).collect()
}

fn hasse(m: u32, x: &Real, cfg: &PrecisionConfig) -> Result<Real> {
    Ok(gamma_m(m, x, Method::Hasse, cfg)?.value)
}

fn functional(cfg: &PrecisionConfig) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    for x in reals(cfg, &[(1, 4), (1, 2), (1, 1), (5, 2), (7, 1)]) {
        let lhs = digamma(&(&x + 1i64), cfg)?;
        let rhs = digamma(&x, cfg)? + x.recip();
        out.push(IdentityReport::new("eq-2.8-digamma-recurrence", lhs, rhs, 1e-12).at(&x));
        out.push(IdentityReport::new("gamma0-digamma", gamma0_digamma_residual(&x, cfg)?, cfg.zero(), 1e-12).at(&x));
    }
    for m in 0..3 {
        for x in reals(cfg, &[(1, 2), (1, 1), (5, 2)]) {
            out.push(stieltjes_shift(m, &x, cfg)?);
        }
    }
    Ok(out)
}

fn stieltjes(cfg: &PrecisionConfig) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    let oracle = |m: u32, x: &Real| laurent_oracle(m, x, cfg).map(|r| r.value);
    for (m, x) in [(0, (1, 1)), (1, (1, 1)), (1, (1, 2)), (2, (3, 2))] {
        let x = cfg.ratio(x.0, x.1);
        let r = IdentityReport::new("stieltjes-hasse-oracle", hasse(m, &x, cfg)?, oracle(m, &x)?, 1e-12);
        out.push(r.at(&x).with_meta(format!("m = {m}")));
    }
    for m in 0..3 {
        for x in reals(cfg, &[(1, 1), (3, 2)]) {
            let bell = gamma_m(m, &x, Method::Bell, cfg)?.value;
            let r = IdentityReport::new("stieltjes-bell-oracle", bell, oracle(m, &x)?, 1e-8);
            out.push(r.at(&x).with_meta(format!("m = {m}")));
        }
    }
    let one = cfg.one();
    let briggs = gamma_m(0, &one, Method::Briggs, cfg)?.value;
    out.push(IdentityReport::new("stieltjes-briggs-oracle", briggs, oracle(0, &one)?, 1e-4).at(&one).with_meta("m = 0"));

    let half = cfg.ratio(1, 2);
    out.push(IdentityReport::new("gamma1-half-closed-form", hasse(1, &half, cfg)?, gamma1_half_closed_form(cfg)?, 1e-10).at(&half));
    let quarter = cfg.ratio(1, 4);
    out.push(
        IdentityReport::new("gamma1-quarter-closed-form", gamma1_quarter_closed_form(cfg)?, hasse(1, &quarter, cfg)?, 1e-8)
            .at(&quarter),
    );
    let fifth = cfg.ratio(1, 5);
    let fifth_value = hasse(1, &fifth, cfg)?;
    out.push(
        IdentityReport::new("gamma1-fifth-closed-form", gamma1_fifth_closed_form(cfg)?, fifth_value.clone(), 1e-8).at(&fifth),
    );
    out.push(
        IdentityReport::new("gamma1-fifth-printed", gamma1_fifth_printed(cfg)?, fifth_value, 1e-8)
            .at(&fifth)
            .known_discrepancy("printed γ_1(1/5) omits the log Γ(r/5) terms"),
    );
    for (p, q) in [(1, 3), (1, 4), (1, 5), (2, 5), (3, 4)] {
        let r = Rational::new(p, q)?;
        let x = r.to_real(cfg.prec());
        out.push(
            IdentityReport::new("gamma1-rational", gamma1_rational(&r, cfg)?, hasse(1, &x, cfg)?, 1e-8)
                .at(&x)
                .with_meta(format!("p/q = {r}")),
        );
    }
    Ok(out)
}

fn adamchik(cfg: &PrecisionConfig) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    for (p, q) in [(1, 3), (1, 4), (2, 5)] {
        out.push(adamchik_reflection(&Rational::new(p, q)?, cfg)?);
    }
    for x in reals(cfg, &[(1, 8), (1, 6), (3, 10)]) {
        out.push(landau_gamma1_functional(&x, cfg)?);
    }
    Ok(out)
}

fn hurwitz(cfg: &PrecisionConfig) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    for (s, x) in [(-0.5, 0.3), (-1.0, 0.7), (0.5, 0.25)] {
        let p = ZetaPoint::new(cfg.real(s), cfg.real(x), 0)?;
        let r = IdentityReport::new("eq-3.10-hurwitz", zeta_fourier(&p, cfg)?.value, zeta_hasse(&p, cfg)?.value, 1e-6);
        out.push(r.at(&p.x).with_meta(format!("s = {s}")));
    }
    let half_log_2pi = cfg.pi().mul_2si(1).ln().mul_2si(-1);
    for k in 1..10 {
        let x = cfg.ratio(k, 10);
        let lhs = zeta_prime0(&x, Route::Hasse, cfg)?;
        let rhs = log_gamma(&x, cfg)? - &half_log_2pi;
        out.push(IdentityReport::new("eq-3.14-lerch", lhs, rhs, 1e-10).at(&x));
    }
    for x in reals(cfg, &[(1, 3), (1, 4)]) {
        out.extend(doubleprime0_pair_checks(&x, cfg)?);
    }
    for (s, x) in [(-0.5, 0.3), (0.5, 0.25)] {
        out.push(zeta_symmetric_check(&cfg.real(s), &cfg.real(x), cfg)?);
    }
    for (s, x) in [(2.0, 1.0), (0.5, 2.0), (-2.0, 0.5)] {
        let (s, x) = (cfg.real(s), cfg.real(x));
        let r = IdentityReport::new(
            "zeta-srivastava-choi",
            zeta_srivastava_choi(&s, &x, cfg)?.value,
            hurwitz_zeta(&s, &x, cfg)?,
            1e-12,
        );
        out.push(r.at(&x).with_meta(format!("s = {}", s.to_decimal(6))));
    }
    let poisson_cfg = cfg.loosened(1e-15);
    let one = cfg.one();
    let two = cfg.int(2);
    out.push(
        IdentityReport::new("zeta-poisson", poisson_zeta(&two, &one, 6, &poisson_cfg)?.value, hurwitz_zeta(&two, &one, cfg)?, 1e-8)
            .at(&one)
            .with_meta("s = 2"),
    );
    out.push(IdentityReport::new("zeta-basel", hurwitz_zeta(&two, &one, cfg)?, cfg.pi().sqr() / 6i64, 1e-15).at(&one));
    Ok(out)
}

fn gamma(cfg: &PrecisionConfig) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    for x in reals(cfg, &[(1, 2), (3, 2), (4, 1)]) {
        out.push(digamma_integral_check(&x, cfg)?);
    }
    for x in reals(cfg, &[(1, 2), (3, 1)]) {
        let lhs = bourguet_log_gamma(&x, 6, &cfg.loosened(1e-12))?.value;
        out.push(IdentityReport::new("log-gamma-bourguet", lhs, log_gamma(&x, cfg)?, 1e-6).at(&x));
    }
    for k in 1..4u32 {
        let x = cfg.ratio(3, 2);
        let sign = if k % 2 == 1 { 1i64 } else { -1 };
        let factorial: u64 = (1..=k as u64).product();
        let rhs = hurwitz_zeta(&cfg.int(k as i64 + 1), &x, cfg)? * (sign * factorial as i64);
        out.push(
            IdentityReport::new("polygamma-zeta", polygamma(k, &x, cfg)?, rhs, 1e-12).at(&x).with_meta(format!("k = {k}")),
        );
    }
    Ok(out)
}

fn fourier_suite(cfg: &PrecisionConfig) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    for x in reals(cfg, &[(1, 4), (1, 3), (2, 3)]) {
        out.push(fourier::kummer_log_gamma(&x, cfg)?);
    }
    for x in reals(cfg, &[(1, 4), (1, 2), (3, 4)]) {
        out.push(fourier::series_316(&x, cfg)?);
    }
    out.push(fourier::wallis_check(cfg)?);
    for x in reals(cfg, &[(1, 4), (1, 3), (1, 2)]) {
        out.push(fourier::deninger_f(&x, cfg)?);
    }
    for x in reals(cfg, &[(1, 8), (1, 6), (1, 4)]) {
        out.push(fourier::landau_f_functional(&x, cfg)?);
    }
    for x in reals(cfg, &[(1, 4), (1, 3), (1, 2)]) {
        let series = fourier::gamma1_fourier(&x, cfg)?.value;
        out.push(IdentityReport::new("eq-3.24-gamma1-fourier", series, hasse(1, &x, cfg)?, fourier::AVERAGED_TOL).at(&x));
    }
    for which in [Family::Odd, Family::EvenCos, Family::EvenSin] {
        for x in reals(cfg, &[(1, 5), (1, 3), (1, 2)]) {
            out.push(fourier::series_325_family(&FamilyArg::Real(x), which, cfg)?);
        }
    }
    for (p, q) in [(1, 3), (1, 4), (2, 5)] {
        out.push(fourier::series_325_family(&FamilyArg::Rational(Rational::new(p, q)?), Family::OddRational, cfg)?);
    }
    Ok(out)
}

fn kolbig(cfg: &PrecisionConfig) -> Result<Vec<IdentityReport>> {
    fourier::kolbig_check(cfg)
}

fn sondow(cfg: &PrecisionConfig) -> Result<Vec<IdentityReport>> {
    let real = |z: Real, route| fourier::sondow_gamma(&SondowArg::Real(z), route, cfg);
    let mut out = Vec::new();
    let one = cfg.one();
    let (g1, _) = real(one.clone(), SondowRoute::Series)?;
    out.push(IdentityReport::new("eq-3.31-sondow-at-1", g1, cfg.euler_gamma(), 1e-10).at(&one));
    let minus_one = cfg.int(-1);
    let (gm1, _) = real(minus_one.clone(), SondowRoute::Series)?;
    out.push(IdentityReport::new("eq-3.31-sondow-at-minus-1", gm1, (cfg.int(4) / cfg.pi()).ln(), 1e-10).at(&minus_one));
    for z in reals(cfg, &[(1, 2), (-1, 2)]) {
        let (a, _) = real(z.clone(), SondowRoute::Series)?;
        let (b, _) = real(z.clone(), SondowRoute::Integral)?;
        out.push(IdentityReport::new("eq-3.31-sondow-integral", a, b, 1e-8).at(&z));
    }
    for (p, q) in [(1, 2), (1, 3), (2, 3)] {
        let arg = SondowArg::Angle { p, q };
        let (sr, si) = fourier::sondow_gamma(&arg, SondowRoute::Series, cfg)?;
        let (tr, ti) = fourier::sondow_gamma(&arg, SondowRoute::TwoQ, cfg)?;
        let meta = format!("ω = exp(iπ·{p}/{q})");
        out.push(IdentityReport::new("eq-3.31-sondow-2q-re", sr, tr, 1e-6).with_meta(meta.clone()));
        out.push(IdentityReport::new("eq-3.31-sondow-2q-im", si, ti, 1e-6).with_meta(meta));
    }
    Ok(out)
}

fn ramanujan(cfg: &PrecisionConfig) -> Result<Vec<IdentityReport>> {
    coffey_ramanujan_sum(cfg)
}

fn derivatives(cfg: &PrecisionConfig) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    let h = cfg.real(1e-6);
    // ∂ζ(s, x)/∂x = −s ζ(s+1, x), by a central difference.
    for (s, x) in [(2.0, 0.5), (3.0, 1.5), (0.5, 2.0)] {
        let (s, x) = (cfg.real(s), cfg.real(x));
        let diff = (hurwitz_zeta(&s, &(&x + &h), cfg)? - hurwitz_zeta(&s, &(&x - &h), cfg)?) / h.mul_2si(1);
        let exact = -(&s * hurwitz_zeta(&(&s + 1i64), &x, cfg)?);
        out.push(IdentityReport::new("eq-2.1-x-derivative", diff, exact, 1e-8).at(&x).with_meta(format!("s = {}", s.to_decimal(6))));
    }
    for x in reals(cfg, &[(1, 1), (5, 2), (5, 1)]) {
        let diff = (hasse(1, &(&x + &h), cfg)? - hasse(1, &(&x - &h), cfg)?) / h.mul_2si(1);
        out.push(IdentityReport::new("gamma1-prime-difference", gamma1_prime(&x, cfg)?, diff, 1e-6).at(&x));
        let series = gamma1_prime_series(&x, cfg)?.value;
        out.push(IdentityReport::new("gamma1-prime-series", gamma1_prime(&x, cfg)?, series, 1e-12).at(&x));
    }
    for x in [cfg.one().exp(), cfg.int(4), cfg.int(10)] {
        let d = gamma1_prime(&x, cfg)?;
        let r = IdentityReport::new("gamma1-prime-negative", d.clone(), d.clone(), 0.0).at(&x);
        out.push(if d.is_negative() { r } else { r.fail_with("γ_1'(x) is not negative") });
    }
    for x in reals(cfg, &[(1, 2), (2, 1)]) {
        out.push(coffey_difference_integral(3, &x, cfg)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resolve_names() {
        assert!(resolve(&[]).is_err());
        assert!(resolve(&["".into()]).is_err());
        assert!(resolve(&["nope".into()]).is_err());
        assert_eq!(resolve(&["all".into()]).unwrap().len(), SUITES.len());
        let r = resolve(&["adamchik".into(), "adamchik".into(), "gamma".into()]).unwrap();
        assert_eq!(r.iter().map(|s| s.name).collect::<Vec<_>>(), ["adamchik", "gamma"]);
    }

    #[test]
    fn every_suite_meets_expectations() {
        let cfg = PrecisionConfig::new(20).unwrap();
        for suite in SUITES {
            let reports = suite.run(&cfg).unwrap();
            assert!(!reports.is_empty(), "{}", suite.name);
            for r in &reports {
                assert!(r.as_expected(), "{}: {r:?}", suite.name);
            }
        }
    }
}
