//! Truncated Taylor series ("jets") for forward-mode derivatives of any
//! order. A jet holds `c[k] = f^(k)(t0)/k!` for `k = 0..=order`.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::real::Real;

#[derive(Clone, Debug)]
pub struct Jet {
    c: Vec<Real>,
}

impl Jet {
    /// The independent variable `t0 + ε`.
    pub fn variable(t0: &Real, order: usize) -> Jet {
        let prec = t0.prec();
        let mut c = vec![Real::zero(prec); order + 1];
        c[0] = t0.clone();
        if order >= 1 {
            c[1] = Real::one(prec);
        }
        Jet { c }
    }

    pub fn constant(v: &Real, order: usize) -> Jet {
        let mut c = vec![Real::zero(v.prec()); order + 1];
        c[0] = v.clone();
        Jet { c }
    }

    /// Jet from normalised Taylor coefficients `f^(k)/k!`.
    pub fn from_coeffs(c: Vec<Real>) -> Jet {
        assert!(!c.is_empty(), "a jet needs at least its value");
        Jet { c }
    }

    pub fn order(&self) -> usize {
        self.c.len() - 1
    }

    pub fn value(&self) -> &Real {
        &self.c[0]
    }

    /// Normalised Taylor coefficient `f^(k)/k!`.
    pub fn coeff(&self, k: usize) -> &Real {
        &self.c[k]
    }

    /// `f^(k)(t0)`.
    pub fn derivative(&self, k: usize) -> Real {
        let mut v = self.c[k].clone();
        for i in 2..=k as u64 {
            v *= i;
        }
        v
    }

    fn zip(&self, other: &Jet, f: impl Fn(&Real, &Real) -> Real) -> Jet {
        assert_eq!(self.c.len(), other.c.len(), "jets must share an order");
        Jet { c: self.c.iter().zip(&other.c).map(|(a, b)| f(a, b)).collect() }
    }

    pub fn scale(&self, k: &Real) -> Jet {
        Jet { c: self.c.iter().map(|a| a * k).collect() }
    }

    pub fn add_scalar(&self, k: &Real) -> Jet {
        let mut out = self.clone();
        out.c[0] += k;
        out
    }

    pub fn recip(&self) -> Jet {
        Jet::constant(&Real::one(self.c[0].prec()), self.order()) / self
    }

    pub fn ln(&self) -> Jet {
        // g' = f'/f  ⇒  k g_k f_0 = k f_k − Σ_{j=1}^{k−1} j g_j f_{k−j}
        let n = self.c.len();
        let f = &self.c;
        let mut g = Vec::with_capacity(n);
        g.push(f[0].ln());
        for k in 1..n {
            let mut acc = &f[k] * k as u64;
            for j in 1..k {
                acc -= &g[j] * &f[k - j] * j as u64;
            }
            g.push(acc / &f[0] / k as u64);
        }
        Jet { c: g }
    }

    /// `ln(1 + self)` accurate for a small constant term.
    pub fn ln_1p(&self) -> Jet {
        let mut out = self.add_scalar(&Real::one(self.c[0].prec())).ln();
        out.c[0] = self.c[0].ln_1p();
        out
    }

    pub fn exp(&self) -> Jet {
        // g' = f' g  ⇒  k g_k = Σ_{j=1}^{k} j f_j g_{k−j}
        let n = self.c.len();
        let f = &self.c;
        let mut g = Vec::with_capacity(n);
        g.push(f[0].exp());
        for k in 1..n {
            let mut acc = Real::zero(f[0].prec());
            for j in 1..=k {
                acc += &f[j] * &g[k - j] * j as u64;
            }
            g.push(acc / k as u64);
        }
        Jet { c: g }
    }

    pub fn powi(&self, e: u32) -> Jet {
        let mut out = Jet::constant(&Real::one(self.c[0].prec()), self.order());
        for _ in 0..e {
            out = &out * self;
        }
        out
    }
}

impl Add<&Jet> for &Jet {
    type Output = Jet;
    fn add(self, rhs: &Jet) -> Jet {
        self.zip(rhs, |a, b| a + b)
    }
}

impl Sub<&Jet> for &Jet {
    type Output = Jet;
    fn sub(self, rhs: &Jet) -> Jet {
        self.zip(rhs, |a, b| a - b)
    }
}

impl Mul<&Jet> for &Jet {
    type Output = Jet;
    fn mul(self, rhs: &Jet) -> Jet {
        assert_eq!(self.c.len(), rhs.c.len(), "jets must share an order");
        let n = self.c.len();
        let c = (0..n)
            .map(|k| (0..=k).map(|j| &self.c[j] * &rhs.c[k - j]).sum())
            .collect();
        Jet { c }
    }
}

impl Div<&Jet> for &Jet {
    type Output = Jet;
    fn div(self, rhs: &Jet) -> Jet {
        assert_eq!(self.c.len(), rhs.c.len(), "jets must share an order");
        let n = self.c.len();
        let mut q: Vec<Real> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = self.c[k].clone();
            for j in 0..k {
                acc -= &q[j] * &rhs.c[k - j];
            }
            q.push(acc / &rhs.c[0]);
        }
        Jet { c: q }
    }
}

impl Neg for &Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        Jet { c: self.c.iter().map(|a| -a).collect() }
    }
}

macro_rules! owned_jet_ops {
    ($($Tr:ident $m:ident),*) => {$(
        impl $Tr<Jet> for Jet {
            type Output = Jet;
            fn $m(self, rhs: Jet) -> Jet { (&self).$m(&rhs) }
        }
        impl $Tr<&Jet> for Jet {
            type Output = Jet;
            fn $m(self, rhs: &Jet) -> Jet { (&self).$m(rhs) }
        }
        impl $Tr<Jet> for &Jet {
            type Output = Jet;
            fn $m(self, rhs: Jet) -> Jet { self.$m(&rhs) }
        }
    )*};
}
owned_jet_ops!(Add add, Sub sub, Mul mul, Div div);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivatives_of_log_and_reciprocal() {
        let t = Jet::variable(&Real::from_i64(128, 2), 5);
        let l = t.ln();
        // d^k/dt^k log t = (−1)^{k−1}(k−1)!/t^k
        assert!((l.derivative(3) - Real::from_ratio(128, 2, 8)).abs() < 1e-30);
        let r = t.recip();
        // d^4/dt^4 1/t = 24/t^5
        assert!((r.derivative(4) - Real::from_ratio(128, 24, 32)).abs() < 1e-30);
    }

    #[test]
    fn exp_log_roundtrip() {
        let t = Jet::variable(&Real::from_f64(128, 0.7), 6);
        let back = t.ln().exp();
        for k in 0..=6 {
            assert!((back.coeff(k) - t.coeff(k)).abs() < 1e-30);
        }
    }

    #[test]
    fn product_rule() {
        let t = Jet::variable(&Real::from_i64(128, 3), 4);
        let sq = &t * &t;
        assert_eq!(sq.derivative(2), Real::from_i64(128, 2));
        assert!(sq.derivative(3).is_zero());
        let cube = t.powi(3);
        assert_eq!(cube.derivative(3), Real::from_i64(128, 6));
    }

    #[test]
    fn ln_1p_small_argument() {
        let t = Jet::variable(&Real::from_f64(128, 1e-30), 3);
        let l = t.ln_1p();
        assert!((l.value() - Real::from_f64(128, 1e-30)).abs() < 1e-55);
    }
}
