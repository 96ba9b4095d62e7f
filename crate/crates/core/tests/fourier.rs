//! Trigonometric series identities at points where both sides are known.

use stieltjes_core::fourier::{
    deninger_f, gamma1_fourier, kolbig_check, kummer_log_gamma, landau_f_functional, lerch_transform, series_316,
    series_325_family, sondow_gamma, CoeffSeq, Family, FamilyArg, SondowArg, SondowRoute,
};
use stieltjes_core::gamma::log_gamma;
use stieltjes_core::numeric::Trig;
use stieltjes_core::stieltjes::{gamma1_rational, Rational};
use stieltjes_core::PrecisionConfig;

fn cfg() -> PrecisionConfig {
    PrecisionConfig::new(20).unwrap()
}

#[test]
fn lerch_transform_of_constant_coefficients() {
    let c = cfg();
    let one = CoeffSeq::constant(c.one());
    for x in [c.ratio(1, 3), c.real(0.7)] {
        let (sin, cos) = (c.pi() * &x).sin_cos();
        let s = lerch_transform(&one, Trig::Sin, &x, &c).unwrap();
        assert!((s.value + sin).abs() < 1e-10);
        let k = lerch_transform(&one, Trig::Cos, &x, &c).unwrap();
        assert!((k.value + cos).abs() < 1e-10);
    }
}

#[test]
fn kummer_at_one_half() {
    let c = cfg();
    let r = kummer_log_gamma(&c.ratio(1, 2), &c).unwrap();
    let expected = c.pi().ln().mul_2si(-1);
    assert!(r.pass && (&r.lhs - &expected).abs() < 1e-5 && (&r.rhs - &expected).abs() < 1e-5, "{r:?}");
    for x in [c.ratio(1, 4), c.ratio(1, 3)] {
        assert!(kummer_log_gamma(&x, &c).unwrap().pass);
    }
}

#[test]
fn log_ratio_series_at_one_half_is_wallis() {
    let c = cfg();
    let r = series_316(&c.ratio(1, 2), &c).unwrap();
    let expected = -(c.pi() / 2i64).ln();
    assert!(r.pass && (&r.lhs - &expected).abs() < 1e-5, "{r:?}");
    for x in [c.ratio(1, 4), c.ratio(3, 4)] {
        assert!(series_316(&x, &c).unwrap().pass);
    }
}

#[test]
fn deninger_at_one_half() {
    let c = cfg();
    let r = deninger_f(&c.ratio(1, 2), &c).unwrap();
    let l2 = c.ln2();
    let expected = c.euler_gamma() * &l2 - l2.sqr().mul_2si(-1);
    assert!(r.pass && (&r.rhs - &expected).abs() < 1e-15 && (&r.lhs - &expected).abs() < 1e-4, "{r:?}");
    for x in [c.ratio(1, 4), c.ratio(1, 3)] {
        assert!(deninger_f(&x, &c).unwrap().pass);
    }
    for x in [c.ratio(1, 4), c.ratio(1, 6), c.real(0.2)] {
        assert!(landau_f_functional(&x, &c).unwrap().pass);
    }
}

#[test]
fn gamma1_from_its_fourier_series() {
    let c = cfg();
    for (p, q) in [(1, 2), (1, 4), (1, 3)] {
        let r = Rational::new(p, q).unwrap();
        let f = gamma1_fourier(&r.to_real(c.prec()), &c).unwrap().value;
        let exact = gamma1_rational(&r, &c).unwrap();
        assert!((&f - &exact).abs() < 1e-4, "{p}/{q}: {f} vs {exact}");
    }
}

#[test]
fn log_ratio_family() {
    let c = cfg();
    let odd = series_325_family(&FamilyArg::Real(c.ratio(1, 2)), Family::Odd, &c).unwrap();
    assert!(odd.pass && odd.lhs.abs() < 1e-8 && odd.rhs.abs() < 1e-15, "{odd:?}");

    let quarter = Rational::new(1, 4).unwrap();
    let r = series_325_family(&FamilyArg::Rational(quarter), Family::OddRational, &c).unwrap();
    let root2 = c.int(2).sqrt();
    let lg = |p: i64| log_gamma(&c.ratio(p, 4), &c).unwrap();
    let explicit = c.int(4).ln() * &root2 / 2i64 - &root2 * (lg(1) - lg(3));
    assert!(r.pass && (&r.rhs - &explicit).abs() < 1e-15, "{r:?}");

    for which in [Family::EvenCos, Family::EvenSin] {
        let r = series_325_family(&FamilyArg::Real(c.ratio(1, 3)), which, &c).unwrap();
        assert!(r.pass, "{r:?}");
    }
}

#[test]
fn kolbig_quadratures_agree() {
    let c = cfg();
    let reports = kolbig_check(&c).unwrap();
    assert_eq!(reports.len(), 4);
    for r in &reports[..3] {
        assert!(r.pass && r.residual < 1e-8, "{r:?}");
    }
    assert!(reports[3].known_discrepancy && !reports[3].pass);
}

#[test]
fn generalized_euler_constant() {
    let c = cfg();
    let (re, im) = sondow_gamma(&SondowArg::Real(c.one()), SondowRoute::Series, &c).unwrap();
    assert!((re - c.euler_gamma()).abs() < 1e-18 && im.is_zero());
    let expected = (c.int(4) / c.pi()).ln();
    for route in [SondowRoute::Series, SondowRoute::Integral, SondowRoute::TwoQ] {
        let (re, im) = sondow_gamma(&SondowArg::Angle { p: 1, q: 1 }, route, &c).unwrap();
        assert!((&re - &expected).abs() < 1e-10 && im.abs() < 1e-10, "{route:?}: {re} {im}");
    }
    let i_series = sondow_gamma(&SondowArg::Angle { p: 1, q: 2 }, SondowRoute::Series, &c).unwrap();
    let i_closed = sondow_gamma(&SondowArg::Angle { p: 1, q: 2 }, SondowRoute::TwoQ, &c).unwrap();
    assert!((&i_series.0 - &i_closed.0).abs() < 1e-10 && (&i_series.1 - &i_closed.1).abs() < 1e-10);
}
