//! Exact binomials, generalized harmonic numbers, complete Bell polynomials
//! and Bernoulli numbers.

use std::sync::Mutex;

use rug::{Integer, Rational};

use crate::error::{Error, Result};
use crate::real::{Real, MIN_PREC};

/// `C(n, k)`, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: u64, k: i64) -> Integer {
    if k < 0 || k as u64 > n {
        return Integer::new();
    }
    Integer::from(n).binomial(k as u32)
}

/// The row `C(n, 0), …, C(n, n)`.
pub fn binomial_row(n: u64) -> Vec<Integer> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut c = Integer::from(1);
    row.push(c.clone());
    for k in 0..n {
        c *= n - k;
        c /= k + 1;
        row.push(c.clone());
    }
    row
}

/// Parameters of `H_n^(m)(t) = Σ_{k=0}^{n−1} (k+t)^{−m}`.
#[derive(Clone, Debug)]
pub struct HarmonicSpec {
    pub n: u64,
    pub m: u32,
    pub t: Real,
}

impl HarmonicSpec {
    /// The classical `H_n^(m)` (offset `t = 1`).
    pub fn classical(n: u64, m: u32, prec: u32) -> HarmonicSpec {
        HarmonicSpec { n, m, t: Real::one(prec) }
    }
}

/// Generalized harmonic number `H_n^(m)(t)`; zero for `n = 0`.
pub fn harmonic(spec: &HarmonicSpec) -> Result<Real> {
    if !spec.t.is_positive() {
        return Err(Error::domain(format!("harmonic offset must be > 0, got {}", spec.t)));
    }
    if spec.m == 0 {
        return Err(Error::domain("harmonic order must be >= 1"));
    }
    let mut acc = Real::zero(spec.t.prec());
    for k in 0..spec.n {
        acc += (&spec.t + k).powi(-(spec.m as i32));
    }
    Ok(acc)
}

/// Arguments `x_1, …, x_r` of a complete Bell polynomial.
#[derive(Clone, Debug, Default)]
pub struct BellArgs {
    pub x: Vec<Real>,
}

impl BellArgs {
    pub fn new(x: Vec<Real>) -> BellArgs {
        BellArgs { x }
    }

    pub fn order(&self) -> usize {
        self.x.len()
    }
}

/// All complete Bell polynomials `Y_0, …, Y_r` at `x_1..x_r` via
/// `Y_{i+1} = Σ_{j=0}^{i} C(i, j) Y_{i−j} x_{j+1}`.
pub fn bell_complete_all(args: &BellArgs) -> Vec<Real> {
    let prec = args.x.iter().map(Real::prec).max().unwrap_or(MIN_PREC);
    let mut y = Vec::with_capacity(args.x.len() + 1);
    y.push(Real::one(prec));
    for i in 0..args.x.len() {
        let row = binomial_row(i as u64);
        let mut acc = Real::zero(prec);
        for j in 0..=i {
            acc += &(&y[i - j] * &args.x[j]) * &row[j];
        }
        y.push(acc);
    }
    y
}

/// `Y_r(x_1, …, x_r)`; `Y_0 = 1`.
pub fn bell_complete(args: &BellArgs) -> Real {
    bell_complete_all(args).pop().expect("Y_0 always present")
}

/// Arguments `x_j = (−1)^{j−1} (j−1)! H_n^(j)`, `j = 1..k`.
pub fn bell_harmonic_args(k: usize, n: u64, prec: u32) -> BellArgs {
    let mut x = Vec::with_capacity(k);
    let mut factorial = Integer::from(1);
    for j in 1..=k {
        if j > 1 {
            factorial *= (j - 1) as u64;
        }
        let h = harmonic(&HarmonicSpec::classical(n, j as u32, prec)).expect("t = 1 is valid");
        let v = &h * &factorial;
        x.push(if j % 2 == 0 { -v } else { v });
    }
    BellArgs { x }
}

/// `Y_k(H_n, −1!·H_n^(2), 2!·H_n^(3), …)` — the normalised `k`-th
/// derivative at `s = 0` of `Γ(s+n+1) / (Γ(s+1)·n!)`.
pub fn bell_harmonic(k: usize, n: u64, prec: u32) -> Real {
    bell_complete(&bell_harmonic_args(k, n, prec))
}

static BERNOULLI: Mutex<Vec<Rational>> = Mutex::new(Vec::new());

/// Bernoulli number `B_n` (with `B_1 = −1/2`), exact.
///
/// Values are generated in batches by the Akiyama–Tanigawa algorithm and
/// memoised; the table only ever grows, so concurrent callers observe the
/// same values as an uncached computation.
pub fn bernoulli(n: usize) -> Rational {
    let mut table = BERNOULLI.lock().unwrap_or_else(|e| e.into_inner());
    if table.len() <= n {
        let target = (n + 1).max(2 * table.len()).max(32);
        *table = akiyama_tanigawa(target);
    }
    table[n].clone()
}

fn akiyama_tanigawa(count: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(count);
    let mut a: Vec<Rational> = Vec::with_capacity(count);
    for m in 0..count {
        a.push(Rational::from((1, m as u64 + 1)));
        for j in (1..=m).rev() {
            let diff = Rational::from(&a[j - 1] - &a[j]);
            a[j - 1] = diff * j as u64;
        }
        out.push(a[0].clone());
    }
    if count > 1 {
        out[1] = Rational::from((-1, 2));
    }
    out
}
