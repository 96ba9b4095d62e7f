//! Exact combinatorial helpers and the Bell-polynomial weights.

use rug::Integer;
use stieltjes_core::combinatorics::{bell_complete, bell_harmonic, binomial, binomial_row, harmonic, BellArgs, HarmonicSpec};
use stieltjes_core::gamma::{digamma, log_gamma};
use stieltjes_core::{PrecisionConfig, Real};

#[test]
fn binomials() {
    assert_eq!(binomial(5, 2), 10);
    for n in 0..30 {
        assert_eq!(binomial(n, 0), 1);
    }
    for n in 1..60u64 {
        let alternating: Integer = binomial_row(n).iter().enumerate().map(|(k, c)| if k % 2 == 0 { c.clone() } else { -c.clone() }).sum();
        assert_eq!(alternating, 0, "n = {n}");
    }
}

#[test]
fn harmonic_numbers() {
    let c = PrecisionConfig::new(25).unwrap();
    let h3 = harmonic(&HarmonicSpec::classical(3, 1, c.prec())).unwrap();
    assert!((h3 - c.ratio(11, 6)).abs() < 1e-24);
    let zero = harmonic(&HarmonicSpec { n: 0, m: 2, t: c.ratio(1, 3) }).unwrap();
    assert!(zero.is_zero());
    let h10 = harmonic(&HarmonicSpec::classical(10, 1, c.prec())).unwrap();
    let psi = digamma(&c.int(11), &c).unwrap() - digamma(&c.one(), &c).unwrap();
    assert!((h10 - psi).abs() < 1e-22);
}

#[test]
fn complete_bell_polynomials() {
    let r = |v: f64| Real::from_f64(128, v);
    assert_eq!(bell_complete(&BellArgs::new(vec![])).to_f64(), 1.0);
    assert_eq!(bell_complete(&BellArgs::new(vec![r(2.0), r(3.0)])).to_f64(), 7.0);
    assert_eq!(bell_complete(&BellArgs::new(vec![r(1.0), r(1.0), r(1.0)])).to_f64(), 5.0);
}

#[test]
fn harmonic_bell_weights_are_derivatives_of_a_gamma_ratio() {
    let c = PrecisionConfig::new(40).unwrap();
    assert_eq!(bell_harmonic(0, 5, c.prec()).to_f64(), 1.0);
    assert!((bell_harmonic(1, 2, c.prec()) - c.ratio(3, 2)).abs() < 1e-35);
    // Γ(s+3)/(Γ(s+1)·2!) = (s+1)(s+2)/2; its second derivative at s = 0 is 1.
    let f = |s: &Real| (log_gamma(&(s + 3i64), &c).unwrap() - log_gamma(&(s + 1i64), &c).unwrap()).exp() / 2i64;
    let h = c.real(1e-8);
    let second = (f(&h) - f(&c.zero()).mul_2si(1) + f(&-&h)) / (&h * &h);
    assert!((second - c.one()).abs() < 1e-12);
    assert!((bell_harmonic(2, 2, c.prec()) - c.one()).abs() < 1e-35);
}
