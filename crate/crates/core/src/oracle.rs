//! Independent reference values for `γ_m(x)`.
//!
//! The oracle evaluates the defining limit
//!
//! ```text
//! γ_m(x) = lim_{N→∞} [ Σ_{k=0}^{N} log^m(k+x)/(k+x) − log^{m+1}(N+x)/(m+1) ]
//! ```
//!
//! with an Euler–Maclaurin tail. It deliberately shares no code with the
//! production routes: it has its own Bernoulli numbers (from the classical
//! binomial recurrence, not the cached table), its own derivative recursion
//! and its own stopping logic. Only the scalar type is common.

use rug::{Integer, Rational};

use crate::error::{Error, Result};
use crate::numeric::{PrecisionConfig, SeriesResult};
use crate::real::Real;

/// `B_0 … B_n` from `Σ_{k=0}^{n} C(n+1, k) B_k = 0`.
fn bernoulli_table(n: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    b.push(Rational::from(1));
    for i in 1..=n {
        let mut acc = Rational::new();
        let mut c = Integer::from(1); // C(i+1, k)
        for (k, bk) in b.iter().enumerate() {
            acc += Rational::from(bk * &c);
            c *= (i + 1 - k) as u64;
            c /= (k + 1) as u64;
        }
        b.push(-acc / Integer::from(i + 1));
    }
    b
}

/// Integer polynomial `Σ c_i L^i`.
fn poly_at(c: &[Integer], l: &Real) -> Real {
    let mut acc = Real::zero(l.prec());
    for coef in c.iter().rev() {
        acc = acc * l + Real::from_integer(l.prec(), coef);
    }
    acc
}

/// `γ_m(x)` from the defining limit, accurate to `cfg.tolerance()`.
pub fn laurent_oracle(m: u32, x: &Real, cfg: &PrecisionConfig) -> Result<SeriesResult> {
    if !x.is_positive() {
        return Err(Error::domain(format!("γ_m(x) needs x > 0, got {x}")));
    }
    let prec = cfg.prec() + 32;
    let x = x.with_prec(prec);
    let tol = cfg.tolerance().with_prec(prec) / 1000i64;
    let mut n = 2 * cfg.digits() as u64 + 20 + 2 * m as u64;

    for _ in 0..8 {
        let max_r = (4 * cfg.digits() as usize + 40).min(n as usize);
        let bern = bernoulli_table(2 * max_r);

        let mut head = Real::zero(prec);
        for k in 0..n {
            let u = &x + k;
            head += u.ln().powi(m as i32) / &u;
        }
        let u = &x + n;
        let l = u.ln();
        let inv_u = u.recip();
        let f_u = l.powi(m as i32) * &inv_u;
        let mut value = head - l.powi(m as i32 + 1) / (m as u64 + 1) + f_u.mul_2si(-1);

        // f^(r)(u) = u^{−1−r} P_r(log u), P_{r+1} = P_r' − (1+r) P_r.
        let mut p: Vec<Integer> = vec![Integer::new(); m as usize + 1];
        p[m as usize] = Integer::from(1);
        let mut upow = inv_u.clone();
        let mut factorial = Integer::from(1);
        let mut previous: Option<Real> = None;
        let mut done = false;
        for r in 0..=(2 * max_r) {
            if r % 2 == 1 {
                // term B_{r+1}/(r+1)! · f^(r)(u)
                let mut fact = factorial.clone();
                fact *= (r + 1) as u64;
                let coef = Rational::from((bern[r + 1].numer().clone(), Integer::from(bern[r + 1].denom() * &fact)));
                let term = Real::from_rational(prec, &coef) * &upow * poly_at(&p, &l);
                let mag = term.abs();
                value -= &term;
                if mag <= tol {
                    done = true;
                    break;
                }
                if previous.as_ref().is_some_and(|prev| mag > *prev) {
                    break;
                }
                previous = Some(mag);
            }
            // advance P_r → P_{r+1}
            let mut next: Vec<Integer> = p.iter().map(|c| -Integer::from(c * (1 + r as u64))).collect();
            for d in 1..p.len() {
                next[d - 1] += Integer::from(&p[d] * d as u64);
            }
            p = next;
            upow *= &inv_u;
            factorial *= (r + 1) as u64;
        }
        if done {
            return Ok(SeriesResult {
                value: value.with_prec(cfg.prec()),
                err_estimate: tol.with_prec(cfg.prec()),
                terms_used: n,
                converged: true,
            });
        }
        n *= 2;
    }
    Err(Error::Precision("Euler–Maclaurin tail of the defining limit did not settle".into()))
}
