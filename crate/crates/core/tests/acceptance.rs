//! Acceptance run: every criterion is evaluated, one PASS/FAIL line is
//! printed per criterion, and the test fails if any criterion fails.
//!
//! Run with `cargo test -p stieltjes-core --test acceptance -- --nocapture`
//! to see the lines.

use std::time::{Duration, Instant};

use stieltjes_core::fourier::{self, SondowArg, SondowRoute};
use stieltjes_core::gamma::{digamma, log_gamma};
use stieltjes_core::hurwitz::{hurwitz_zeta, zeta_fourier, zeta_hasse, zeta_prime0, Route, ZetaPoint};
use stieltjes_core::oracle::laurent_oracle;
use stieltjes_core::report::IdentityReport;
use stieltjes_core::stieltjes::{
    adamchik_reflection, coffey_ramanujan_sum, gamma1_half_closed_form, gamma1_prime, gamma1_rational, ramanujan_sum,
    stieltjes_gamma, Method, Rational, StieltjesRequest,
};
use stieltjes_core::{PrecisionConfig, Real};

type Outcome = Result<String, String>;

fn cfg(digits: u32) -> PrecisionConfig {
    PrecisionConfig::new(digits).unwrap()
}

fn gamma(m: u32, x: &Real, method: Method, c: &PrecisionConfig) -> Real {
    stieltjes_gamma(&StieltjesRequest::new(m, x.clone(), method, c.clone())).unwrap().value
}

fn f(v: &Real) -> f64 {
    v.to_f64()
}

/// Fails with a message unless `|a − b| ≤ tol`; returns the residual.
fn close(what: &str, a: &Real, b: &Real, tol: f64) -> Result<f64, String> {
    let r = f(&(a - b).abs());
    if r <= tol {
        Ok(r)
    } else {
        Err(format!("{what}: residual {r:.3e} > {tol:.0e} ({a} vs {b})"))
    }
}

fn reports_pass(reports: &[IdentityReport], tol: f64) -> Result<f64, String> {
    let mut worst = 0.0f64;
    for r in reports {
        let res = f(&r.residual);
        if !r.pass || res > tol {
            return Err(format!("{} failed: residual {res:.3e} (tolerance {tol:.0e}) {}", r.id, r.meta));
        }
        worst = worst.max(res);
    }
    Ok(worst)
}

fn euler_constant_routes() -> Outcome {
    let c40 = cfg(40);
    let one = c40.one();
    let oracle = laurent_oracle(0, &one, &c40).map_err(|e| e.to_string())?.value;
    let mut detail = Vec::new();
    for (method, digits, tol) in [(Method::Hasse, 40, 1e-12), (Method::Bell, 40, 1e-12), (Method::Briggs, 20, 1e-4)] {
        let c = cfg(digits);
        let start = Instant::now();
        let v = gamma(0, &one, method, &c);
        let took = start.elapsed();
        let r = close(method.as_str(), &v, &oracle, tol)?;
        if took > Duration::from_secs(10) {
            return Err(format!("{method} took {took:?}"));
        }
        detail.push(format!("{method} {r:.1e} in {:.2}s", took.as_secs_f64()));
    }
    Ok(detail.join(", "))
}

fn gamma1_half() -> Outcome {
    let c = cfg(30);
    let v = gamma(1, &c.ratio(1, 2), Method::Hasse, &c);
    let r = close("γ_1(1/2)", &v, &gamma1_half_closed_form(&c).unwrap(), 1e-10)?;
    Ok(format!("residual {r:.1e}"))
}

fn gamma1_quarter_and_fifth() -> Outcome {
    let c = cfg(25);
    let mut worst = 0.0f64;
    for (p, q) in [(1, 4), (1, 5)] {
        let r = Rational::new(p, q).unwrap();
        let closed = gamma1_rational(&r, &c).map_err(|e| e.to_string())?;
        let direct = gamma(1, &r.to_real(c.prec()), Method::Hasse, &c);
        worst = worst.max(close(&format!("γ_1({r})"), &closed, &direct, 1e-8)?);
    }
    Ok(format!("worst residual {worst:.1e}"))
}

fn adamchik() -> Outcome {
    let c = cfg(25);
    let reports: Vec<IdentityReport> =
        [(1, 3), (1, 4), (2, 5)].iter().map(|&(p, q)| adamchik_reflection(&Rational::new(p, q).unwrap(), &c).unwrap()).collect();
    Ok(format!("p/q ∈ {{1/3, 1/4, 2/5}}, worst residual {:.1e}", reports_pass(&reports, 1e-8)?))
}

fn hurwitz_formula() -> Outcome {
    let c = cfg(20);
    let mut worst = 0.0f64;
    for (s, x) in [(-0.5, 0.3), (-1.0, 0.7), (0.5, 0.25)] {
        let p = ZetaPoint::new(c.real(s), c.real(x), 0).unwrap();
        let a = zeta_fourier(&p, &c).map_err(|e| e.to_string())?.value;
        let b = zeta_hasse(&p, &c).map_err(|e| e.to_string())?.value;
        worst = worst.max(close(&format!("ζ({s}, {x})"), &a, &b, 1e-6)?);
    }
    Ok(format!("3 points, worst residual {worst:.1e}"))
}

fn lerch_identity() -> Outcome {
    let c = cfg(25);
    let half_log_2pi = c.pi().mul_2si(1).ln().mul_2si(-1);
    let mut worst = 0.0f64;
    for k in 1..10 {
        let x = c.ratio(k, 10);
        let d = zeta_prime0(&x, Route::Hasse, &c).map_err(|e| e.to_string())?;
        let rhs = log_gamma(&x, &c).unwrap() - &half_log_2pi;
        worst = worst.max(close(&format!("x = {k}/10"), &d, &rhs, 1e-10)?);
    }
    Ok(format!("9-point grid, worst residual {worst:.1e}"))
}

fn kummer() -> Outcome {
    let c = cfg(20);
    let reports: Vec<IdentityReport> =
        [(1, 4), (1, 3), (2, 3)].iter().map(|&(p, q)| fourier::kummer_log_gamma(&c.ratio(p, q), &c).unwrap()).collect();
    Ok(format!("worst residual {:.1e}", reports_pass(&reports, 1e-5)?))
}

fn log_ratio_sine_and_wallis() -> Outcome {
    let c = cfg(20);
    let reports: Vec<IdentityReport> =
        [(1, 4), (1, 2), (3, 4)].iter().map(|&(p, q)| fourier::series_316(&c.ratio(p, q), &c).unwrap()).collect();
    let sine = reports_pass(&reports, 1e-5)?;
    let wallis = reports_pass(&[fourier::wallis_check(&c).unwrap()], 1e-10)?;
    Ok(format!("sine series {sine:.1e}, alternating sum {wallis:.1e}"))
}

fn deninger_and_landau() -> Outcome {
    let c = cfg(20);
    let mut reports = Vec::new();
    for x in [c.ratio(1, 4), c.ratio(1, 3), c.ratio(1, 2)] {
        reports.push(fourier::deninger_f(&x, &c).unwrap());
    }
    for x in [c.ratio(1, 8), c.ratio(1, 6), c.ratio(1, 4)] {
        reports.push(fourier::landau_f_functional(&x, &c).unwrap());
    }
    Ok(format!("6 residuals, worst {:.1e}", reports_pass(&reports, 1e-4)?))
}

fn gamma1_fourier_series() -> Outcome {
    let c = cfg(20);
    let mut worst = 0.0f64;
    for x in [c.ratio(1, 4), c.ratio(1, 3), c.ratio(1, 2)] {
        let series = fourier::gamma1_fourier(&x, &c).map_err(|e| e.to_string())?.value;
        worst = worst.max(close(&format!("x = {x:.6}"), &series, &gamma(1, &x, Method::Hasse, &c), 1e-4)?);
    }
    Ok(format!("worst residual {worst:.1e}"))
}

fn kolbig() -> Outcome {
    let c = cfg(20);
    let reports = fourier::kolbig_check(&c).map_err(|e| e.to_string())?;
    let by_id = |id: &str| reports.iter().find(|r| r.id.ends_with(id)).cloned().unwrap();
    let series = reports_pass(&[by_id("series-equivalence")], 1e-10)?;
    let quad = reports_pass(&[by_id("kolbig-quadrature"), by_id("integrated-series")], 1e-8)?;
    Ok(format!("series equivalence {series:.1e}, quadrature {quad:.1e}"))
}

fn ramanujan() -> Outcome {
    let c = cfg(30);
    let s = ramanujan_sum(&c);
    if (f(&s) - 0.00187).abs() > 5e-6 {
        return Err(format!("S = {s} is not ≈ 0.00187"));
    }
    let reports = coffey_ramanujan_sum(&c).map_err(|e| e.to_string())?;
    let find = |id: &str| reports.iter().find(|r| r.id == id).unwrap();
    let good = reports_pass(&[find("ramanujan-closed-form-gamma-3-4").clone()], 1e-10)?;
    let printed = find("ramanujan-closed-form-gamma-1-4");
    if printed.pass || !printed.known_discrepancy || !printed.meta.contains("paper-discrepancy") {
        return Err("the printed Γ(1/4) variant is not recorded as an annotated failure".into());
    }
    Ok(format!("S = {}, Γ(3/4) form {good:.1e}, Γ(1/4) form off by {:.3}", s.to_decimal(8), f(&printed.residual)))
}

fn sondow() -> Outcome {
    let c = cfg(25);
    let g = |arg: SondowArg, route| fourier::sondow_gamma(&arg, route, &c).map_err(|e| e.to_string());
    let (at1, _) = g(SondowArg::Real(c.one()), SondowRoute::Series)?;
    let r1 = close("γ(1)", &at1, &c.euler_gamma(), 1e-10)?;
    let (atm1, _) = g(SondowArg::Real(c.int(-1)), SondowRoute::Series)?;
    let r2 = close("γ(−1)", &atm1, &(c.int(4) / c.pi()).ln(), 1e-10)?;
    let (series, _) = g(SondowArg::Real(c.ratio(1, 2)), SondowRoute::Series)?;
    let (integral, _) = g(SondowArg::Real(c.ratio(1, 2)), SondowRoute::Integral)?;
    let r3 = close("γ(1/2)", &series, &integral, 1e-8)?;
    let (sr, si) = g(SondowArg::Angle { p: 1, q: 2 }, SondowRoute::Series)?;
    let (tr, ti) = g(SondowArg::Angle { p: 1, q: 2 }, SondowRoute::TwoQ)?;
    let r4 = close("Re γ(i)", &sr, &tr, 1e-6)?.max(close("Im γ(i)", &si, &ti, 1e-6)?);
    Ok(format!("γ(1) {r1:.1e}, γ(−1) {r2:.1e}, routes at 1/2 {r3:.1e}, 2q at i {r4:.1e}"))
}

fn bell_series() -> Outcome {
    let c = cfg(25);
    let mut worst = 0.0f64;
    for m in 0..3 {
        for x in [c.one(), c.ratio(3, 2)] {
            let oracle = laurent_oracle(m, &x, &c).map_err(|e| e.to_string())?.value;
            worst = worst.max(close(&format!("γ_{m}({x:.2})"), &gamma(m, &x, Method::Bell, &c), &oracle, 1e-8)?);
        }
    }
    Ok(format!("m ∈ {{0,1,2}}, x ∈ {{1, 1.5}}, worst residual {worst:.1e}"))
}

fn derivative_contracts() -> Outcome {
    let c = cfg(30);
    let h = c.real(1e-6);
    let mut fd = 0.0f64;
    for x in [c.one(), c.ratio(5, 2), c.int(5)] {
        let diff = (gamma(1, &(&x + &h), Method::Hasse, &c) - gamma(1, &(&x - &h), Method::Hasse, &c)) / h.mul_2si(1);
        fd = fd.max(close("γ_1'", &gamma1_prime(&x, &c).unwrap(), &diff, 1e-6)?);
    }
    // ∂ζ(s, x)/∂x = −s ζ(s+1, x): a central difference must converge like h².
    let (s, x) = (c.int(2), c.ratio(1, 2));
    let exact = -(&s * hurwitz_zeta(&(&s + 1i64), &x, &c).unwrap());
    let err = |h: f64| {
        let h = c.real(h);
        let d = (hurwitz_zeta(&s, &(&x + &h), &c).unwrap() - hurwitz_zeta(&s, &(&x - &h), &c).unwrap()) / h.mul_2si(1);
        f(&(d - &exact).abs())
    };
    let (e1, e2) = (err(1e-3), err(5e-4));
    let order = (e1 / e2).log2();
    if !(1.9..2.1).contains(&order) || e1 > 1e-3 {
        return Err(format!("central-difference error does not behave like h² (errors {e1:.2e}, {e2:.2e})"));
    }
    for x in [c.one().exp(), c.int(4), c.int(10)] {
        let d = gamma1_prime(&x, &c).unwrap();
        if !d.is_negative() {
            return Err(format!("γ_1'({x:.4}) = {d} is not negative"));
        }
    }
    Ok(format!("finite differences {fd:.1e}, x-derivative order {order:.2}, γ_1' < 0 at e, 4, 10"))
}

fn functional_equations() -> Outcome {
    let c = cfg(25);
    let mut worst = 0.0f64;
    for x in [c.ratio(1, 4), c.ratio(1, 2), c.one(), c.ratio(5, 2), c.int(7)] {
        let lhs = digamma(&(&x + 1i64), &c).unwrap();
        worst = worst.max(close("ψ(x+1) − ψ(x) − 1/x", &lhs, &(digamma(&x, &c).unwrap() + x.recip()), 1e-12)?);
        for m in 0..3 {
            let shifted = gamma(m, &(&x + 1i64), Method::Hasse, &c);
            let rhs = shifted + x.ln().powi(m as i32) / &x;
            worst = worst.max(close(&format!("γ_{m} shift"), &gamma(m, &x, Method::Hasse, &c), &rhs, 1e-12)?);
        }
    }
    Ok(format!("5-point grid, worst residual {worst:.1e}"))
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn() -> Outcome); 16] = [
        ("Euler's constant by three routes", euler_constant_routes),
        ("γ_1(1/2) closed form", gamma1_half),
        ("γ_1(1/4) and γ_1(1/5) closed forms", gamma1_quarter_and_fifth),
        ("reflection formula at 1/3, 1/4, 2/5", adamchik),
        ("Hurwitz's Fourier formula", hurwitz_formula),
        ("Lerch's identity for ζ'(0, x)", lerch_identity),
        ("Kummer's series for log Γ", kummer),
        ("log(1+1/n) sine series and alternating sum", log_ratio_sine_and_wallis),
        ("Deninger's series and Landau's equation", deninger_and_landau),
        ("Fourier series of γ_1", gamma1_fourier_series),
        ("ψ(x) sin πx integral", kolbig),
        ("Ramanujan's sum", ramanujan),
        ("generalized Euler constant γ(z)", sondow),
        ("Bell-polynomial series for γ_m", bell_series),
        ("derivative contracts", derivative_contracts),
        ("functional equations", functional_equations),
    ];
    let mut failed = Vec::new();
    for (i, (title, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {title}: {detail} [{secs:.1}s]", i + 1),
            Err(why) => {
                println!("criterion {:>2} FAIL  {title}: {why} [{secs:.1}s]", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
