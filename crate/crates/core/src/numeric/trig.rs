use crate::error::{Error, Result};
use crate::numeric::{PrecisionConfig, SeriesResult, ERR_SAFETY};
use crate::real::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Trig {
    Sin,
    Cos,
}

/// Which multiples of `πx` the series runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Harmonic {
    /// `trig(2nπx)`
    Even,
    /// `trig((2n+1)πx)`
    Odd,
}

/// Conditionally convergent trigonometric sums cannot be pushed much below
/// this level by averaging alone; tighter requests are clamped.
const TRIG_TOL_FLOOR: f64 = 1e-18;
const MAX_LEVELS: usize = 6;
const FIRST_WINDOW: usize = 64;
/// Rotation steps between exact phase re-synchronisations.
const RESYNC: u64 = 64;

/// Evaluates `Σ_{n ≥ 1} coeff(n)·trig(θ_n)` for `0 < x < 1`, with
/// `θ_n = 2nπx` or `(2n+1)πx`.
///
/// The partial sums `S_n` oscillate around the limit with an amplitude that
/// decays like `coeff(n)`. A moving average of window `W` damps an
/// oscillation of angular step `2πx` by `|sin(πWx) / (W sin πx)|`, so `k`
/// stacked averages damp it by that factor to the `k`-th power while leaving
/// the limit untouched. Levels are stacked until two consecutive levels agree
/// (at least two levels, at most six); if they never do, the window doubles.
///
/// The error estimate is four times the last level difference. Tolerances
/// below `1e-18` are clamped to that floor.
pub fn sum_trig_averaged<F>(
    mut coeff: F,
    trig: Trig,
    harmonic: Harmonic,
    x: &Real,
    cfg: &PrecisionConfig,
) -> Result<SeriesResult>
where
    F: FnMut(u64) -> Real,
{
    if !(*x > 0.0 && *x < 1.0) {
        return Err(Error::domain(format!("trigonometric series needs 0 < x < 1, got {x}")));
    }
    let prec = cfg.prec();
    let tol = {
        let floor = Real::from_f64(prec, TRIG_TOL_FLOOR);
        Real::max_of(cfg.tolerance(), &floor)
    };
    let x = x.with_prec(prec);
    let offset = match harmonic {
        Harmonic::Even => Real::zero(prec),
        Harmonic::Odd => x.mul_2si(-1),
    };
    let two_pi = Real::pi(prec).mul_2si(1);
    let (rot_s, rot_c) = (&two_pi * &x).sin_cos();

    let mut phases = PhaseWalker { x, offset, two_pi, rot_s, rot_c, n: 0, s: Real::zero(prec), c: Real::zero(prec) };
    let mut partial: Vec<Real> = Vec::new();
    let mut running = Real::zero(prec);

    let mut window = FIRST_WINDOW;
    let mut best: Option<SeriesResult> = None;
    loop {
        let needed = window * (MAX_LEVELS + 1);
        if needed as u64 > cfg.max_terms() {
            break;
        }
        while partial.len() < needed {
            let (s, c) = phases.next();
            let n = phases.n;
            let t = match trig {
                Trig::Sin => s,
                Trig::Cos => c,
            };
            running += coeff(n) * t;
            partial.push(running.clone());
        }

        let outcome = averaged_levels(&partial[window - 1..needed], window, &tol);
        let result = SeriesResult {
            value: outcome.value,
            err_estimate: outcome.err,
            terms_used: needed as u64,
            converged: outcome.converged,
        };
        if result.converged {
            return Ok(result);
        }
        if best.as_ref().map_or(true, |b| result.err_estimate < b.err_estimate) {
            best = Some(result);
        }
        window *= 2;
    }

    let best = best.unwrap_or_else(|| SeriesResult {
        value: running.clone(),
        err_estimate: Real::from_f64(prec, f64::INFINITY),
        terms_used: partial.len() as u64,
        converged: false,
    });
    Err(Error::NonConvergence(Box::new(best)))
}

struct LevelOutcome {
    value: Real,
    err: Real,
    converged: bool,
}

/// Stacks moving averages of width `window` over `base`, returning the first
/// entry of the deepest level reached.
fn averaged_levels(base: &[Real], window: usize, tol: &Real) -> LevelOutcome {
    let mut current: Vec<Real> = base.to_vec();
    let mut previous_head = current[0].clone();
    let mut best_err: Option<Real> = None;
    let mut best_value = previous_head.clone();

    for level in 1..=MAX_LEVELS {
        if current.len() < window {
            break;
        }
        let mut next = Vec::with_capacity(current.len() - window + 1);
        let mut acc: Real = current[..window].iter().sum();
        next.push(&acc / window as u64);
        for i in window..current.len() {
            acc += &current[i];
            acc -= &current[i - window];
            next.push(&acc / window as u64);
        }
        current = next;

        let head = current[0].clone();
        let err = (&head - &previous_head).abs() * ERR_SAFETY;
        previous_head = head.clone();
        if level >= 2 {
            if best_err.as_ref().map_or(true, |b| err < *b) {
                best_err = Some(err.clone());
                best_value = head.clone();
            }
            if err <= *tol {
                return LevelOutcome { value: head, err, converged: true };
            }
        }
    }
    LevelOutcome {
        value: best_value,
        err: best_err.unwrap_or_else(|| Real::from_f64(tol.prec(), f64::INFINITY)),
        converged: false,
    }
}

/// Produces `(sin θ_n, cos θ_n)` for `n = 1, 2, …` by rotation, re-deriving
/// the phase from the exactly reduced angle `2π·frac(nx + offset)` every
/// `RESYNC` steps so rounding drift cannot accumulate.
struct PhaseWalker {
    x: Real,
    offset: Real,
    two_pi: Real,
    rot_s: Real,
    rot_c: Real,
    n: u64,
    s: Real,
    c: Real,
}

impl PhaseWalker {
    fn next(&mut self) -> (Real, Real) {
        self.n += 1;
        if self.n % RESYNC == 1 {
            let turns = (&self.x * self.n + &self.offset).frac_pos();
            let (s, c) = (&self.two_pi * &turns).sin_cos();
            self.s = s;
            self.c = c;
        } else {
            let s = &self.s * &self.rot_c + &self.c * &self.rot_s;
            let c = &self.c * &self.rot_c - &self.s * &self.rot_s;
            self.s = s;
            self.c = c;
        }
        (self.s.clone(), self.c.clone())
    }
}
