//! Property-based checks of invariants that must hold at every argument.

use proptest::prelude::*;
use stieltjes_core::combinatorics::{bell_complete, binomial, binomial_row, BellArgs};
use stieltjes_core::gamma::{digamma, log_gamma};
use stieltjes_core::hurwitz::{hurwitz_zeta, zeta_hasse, ZetaPoint};
use stieltjes_core::stieltjes::{gamma_m, Method};
use stieltjes_core::{PrecisionConfig, Real};

fn cfg() -> PrecisionConfig {
    PrecisionConfig::new(20).unwrap()
}

/// Complete Bell polynomial by summing over all partitions of `n`:
/// `Y_n = Σ n! / Π_j (k_j! (j!)^{k_j}) · Π_j x_j^{k_j}`.
fn bell_by_partitions(x: &[f64]) -> f64 {
    fn factorial(n: usize) -> f64 {
        (1..=n).map(|k| k as f64).product()
    }
    fn walk(remaining: usize, largest: usize, counts: &mut Vec<usize>, x: &[f64], n: usize, acc: &mut f64) {
        if remaining == 0 {
            let mut term = factorial(n);
            for (j, &k) in counts.iter().enumerate() {
                let part = j + 1;
                term *= x[j].powi(k as i32) / (factorial(k) * factorial(part).powi(k as i32));
            }
            *acc += term;
            return;
        }
        for part in (1..=largest.min(remaining)).rev() {
            counts[part - 1] += 1;
            walk(remaining - part, part, counts, x, n, acc);
            counts[part - 1] -= 1;
        }
    }
    let n = x.len();
    let mut acc = 0.0;
    walk(n, n, &mut vec![0; n], x, n, &mut acc);
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn bell_recurrence_matches_partition_sum(x in proptest::collection::vec(-2.0f64..2.0, 1..8)) {
        let args = BellArgs::new(x.iter().map(|&v| Real::from_f64(128, v)).collect());
        let fast = bell_complete(&args).to_f64();
        let slow = bell_by_partitions(&x);
        prop_assert!((fast - slow).abs() <= 1e-9 * (1.0 + slow.abs()), "{fast} vs {slow}");
    }

    #[test]
    fn binomial_rows_are_symmetric_and_sum_to_a_power_of_two(n in 0u64..200) {
        let row = binomial_row(n);
        prop_assert_eq!(row.len() as u64, n + 1);
        for (k, c) in row.iter().enumerate() {
            prop_assert_eq!(c, &row[n as usize - k]);
            prop_assert_eq!(c, &binomial(n, k as i64));
        }
        let total: rug::Integer = row.iter().sum();
        prop_assert_eq!(total, rug::Integer::from(1) << n as u32);
    }

    #[test]
    fn digamma_is_the_derivative_of_log_gamma(x in 0.05f64..20.0) {
        let c = cfg();
        let x = c.real(x);
        let h = c.real(1e-7);
        let diff = (log_gamma(&(&x + &h), &c).unwrap() - log_gamma(&(&x - &h), &c).unwrap()) / h.mul_2si(1);
        let psi = digamma(&x, &c).unwrap();
        prop_assert!((diff - &psi).abs() < 1e-9 * (1.0 + psi.abs().to_f64()));
    }

    #[test]
    fn log_gamma_recurrence(x in 0.01f64..50.0) {
        let c = cfg();
        let x = c.real(x);
        let lhs = log_gamma(&(&x + 1i64), &c).unwrap();
        let rhs = log_gamma(&x, &c).unwrap() + x.ln();
        prop_assert!((lhs - rhs).abs() < 1e-17);
    }

    #[test]
    fn zeta_shift(s in -3.0f64..6.0, x in 0.1f64..4.0) {
        prop_assume!((s - 1.0).abs() > 1e-3);
        let c = cfg();
        let (s, x) = (c.real(s), c.real(x));
        let lhs = hurwitz_zeta(&s, &x, &c).unwrap();
        let rhs = hurwitz_zeta(&s, &(&x + 1i64), &c).unwrap() + (-(&s * x.ln())).exp();
        prop_assert!((&lhs - &rhs).abs() < 1e-15 * (1.0 + lhs.abs().to_f64()));
    }

    #[test]
    fn production_and_hasse_zeta_agree(s in -2.0f64..4.0, x in 0.2f64..3.0) {
        prop_assume!((s - 1.0).abs() > 1e-2);
        let c = cfg();
        let p = ZetaPoint::new(c.real(s), c.real(x), 0).unwrap();
        let a = hurwitz_zeta(&p.s, &p.x, &c).unwrap();
        let b = zeta_hasse(&p, &c).unwrap().value;
        prop_assert!((&a - &b).abs() < 1e-15 * (1.0 + a.abs().to_f64()), "{a} vs {b}");
    }

    #[test]
    fn euler_constant_function_is_minus_digamma(x in 0.1f64..6.0) {
        let c = cfg();
        let x = c.real(x);
        let g0 = gamma_m(0, &x, Method::Hasse, &c).unwrap().value;
        prop_assert!((g0 + digamma(&x, &c).unwrap()).abs() < 1e-15);
    }

    #[test]
    fn hasse_and_bell_routes_agree(m in 0u32..3, x in 0.5f64..3.0) {
        let c = cfg();
        let x = c.real(x);
        let a = gamma_m(m, &x, Method::Hasse, &c).unwrap().value;
        let b = gamma_m(m, &x, Method::Bell, &c).unwrap().value;
        prop_assert!((&a - &b).abs() < 1e-12, "{a} vs {b}");
    }
}

#[test]
fn partition_oracle_knows_small_cases() {
    // Y_3 = x1³ + 3 x1 x2 + x3
    let (a, b, c) = (0.7, -1.3, 2.1);
    assert!((bell_by_partitions(&[a, b, c]) - (a * a * a + 3.0 * a * b + c)).abs() < 1e-12);
    // Y_n(1, …, 1) are the Bell numbers.
    assert_eq!(bell_by_partitions(&[1.0; 6]), 203.0);
}
