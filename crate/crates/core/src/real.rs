//! Arbitrary-precision real scalar.
//!
//! `Real` wraps an MPFR float and carries its own precision. Binary
//! operations between two `Real`s are evaluated at the larger of the two
//! precisions; operations with primitive scalars keep the precision of the
//! `Real` operand.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Float, Integer};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Smallest precision (in bits) a `Real` may carry.
pub const MIN_PREC: u32 = 64;

#[derive(Clone, Debug)]
pub struct Real(Float);

fn clamp_prec(prec: u32) -> u32 {
    prec.max(MIN_PREC)
}

impl Real {
    pub fn from_f64(prec: u32, v: f64) -> Real {
        Real(Float::with_val(clamp_prec(prec), v))
    }

    pub fn from_i64(prec: u32, v: i64) -> Real {
        Real(Float::with_val(clamp_prec(prec), v))
    }

    pub fn from_u64(prec: u32, v: u64) -> Real {
        Real(Float::with_val(clamp_prec(prec), v))
    }

    pub fn from_integer(prec: u32, v: &Integer) -> Real {
        Real(Float::with_val(clamp_prec(prec), v))
    }

    /// `num/den`, correctly rounded.
    pub fn from_ratio(prec: u32, num: i64, den: i64) -> Real {
        let q = rug::Rational::from((num, den));
        Real(Float::with_val(clamp_prec(prec), &q))
    }

    pub fn from_rational(prec: u32, q: &rug::Rational) -> Real {
        Real(Float::with_val(clamp_prec(prec), q))
    }

    /// Parses a decimal literal (`"0.25"`, `"-1e-3"`).
    pub fn parse(prec: u32, s: &str) -> Result<Real> {
        let parsed = Float::parse(s.trim())
            .map_err(|e| Error::Parse(format!("invalid real `{s}`: {e}")))?;
        Ok(Real(Float::with_val(clamp_prec(prec), parsed)))
    }

    pub fn zero(prec: u32) -> Real {
        Real(Float::new(clamp_prec(prec)))
    }

    pub fn one(prec: u32) -> Real {
        Real::from_i64(prec, 1)
    }

    pub fn pi(prec: u32) -> Real {
        Real(Float::with_val(clamp_prec(prec), Constant::Pi))
    }

    /// Euler–Mascheroni constant.
    pub fn euler_gamma(prec: u32) -> Real {
        Real(Float::with_val(clamp_prec(prec), Constant::Euler))
    }

    pub fn ln2(prec: u32) -> Real {
        Real(Float::with_val(clamp_prec(prec), Constant::Log2))
    }

    pub fn from_float(v: Float) -> Real {
        if v.prec() < MIN_PREC {
            Real(Float::with_val(MIN_PREC, v))
        } else {
            Real(v)
        }
    }

    pub fn as_float(&self) -> &Float {
        &self.0
    }

    pub fn into_float(self) -> Float {
        self.0
    }

    pub fn prec(&self) -> u32 {
        self.0.prec()
    }

    /// Copy rounded (or zero-extended) to `prec` bits.
    pub fn with_prec(&self, prec: u32) -> Real {
        Real(Float::with_val(clamp_prec(prec), &self.0))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.0.is_finite()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_sign_negative() && !self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_sign_positive() && !self.0.is_zero()
    }

    pub fn signum(&self) -> i32 {
        if self.0.is_zero() {
            0
        } else if self.0.is_sign_negative() {
            -1
        } else {
            1
        }
    }

    pub fn abs(&self) -> Real {
        Real(self.0.clone().abs())
    }

    pub fn sqr(&self) -> Real {
        Real(self.0.clone().square())
    }

    pub fn sqrt(&self) -> Real {
        Real(self.0.clone().sqrt())
    }

    pub fn recip(&self) -> Real {
        Real(self.0.clone().recip())
    }

    pub fn ln(&self) -> Real {
        Real(self.0.clone().ln())
    }

    pub fn ln_1p(&self) -> Real {
        Real(self.0.clone().ln_1p())
    }

    pub fn exp(&self) -> Real {
        Real(self.0.clone().exp())
    }

    pub fn exp_m1(&self) -> Real {
        Real(self.0.clone().exp_m1())
    }

    pub fn sin(&self) -> Real {
        Real(self.0.clone().sin())
    }

    pub fn cos(&self) -> Real {
        Real(self.0.clone().cos())
    }

    pub fn sin_cos(&self) -> (Real, Real) {
        let (s, c) = self.0.clone().sin_cos(Float::new(self.0.prec()));
        (Real(s), Real(c))
    }

    pub fn tan(&self) -> Real {
        Real(self.0.clone().tan())
    }

    pub fn cot(&self) -> Real {
        Real(self.0.clone().cot())
    }

    pub fn atan2(&self, x: &Real) -> Real {
        let prec = self.prec().max(x.prec());
        Real(Float::with_val(prec, &self.0).atan2(&x.0))
    }

    pub fn powr(&self, e: &Real) -> Real {
        let prec = self.prec().max(e.prec());
        Real(Float::with_val(prec, (&self.0).pow(&e.0)))
    }

    pub fn powi(&self, e: i32) -> Real {
        Real(Float::with_val(self.prec(), (&self.0).pow(e)))
    }

    pub fn floor(&self) -> Real {
        Real(self.0.clone().floor())
    }

    /// Fractional part in `[0, 1)`.
    pub fn frac_pos(&self) -> Real {
        let f = self.0.clone();
        let fl = f.clone().floor();
        Real(f - fl)
    }

    pub fn max_of(a: &Real, b: &Real) -> Real {
        if a >= b {
            a.clone()
        } else {
            b.clone()
        }
    }

    pub fn mul_2si(&self, k: i32) -> Real {
        Real(Float::with_val(self.prec(), &self.0 << k))
    }

    /// Exact conversion to an integer when the value is integral.
    pub fn to_integer_exact(&self) -> Option<Integer> {
        if self.0.is_integer() {
            self.0.to_integer()
        } else {
            None
        }
    }

    /// Decimal rendering with `digits` significant digits.
    ///
    /// Positional notation is used for moderate exponents so that, e.g.,
    /// Euler's constant prints as `0.5772156649...`; very large or small
    /// magnitudes fall back to `d.ddd...e±N`.
    pub fn to_decimal(&self, digits: usize) -> String {
        let digits = digits.max(1);
        if self.0.is_nan() {
            return "NaN".into();
        }
        if self.0.is_infinite() {
            return if self.0.is_sign_negative() { "-inf".into() } else { "inf".into() };
        }
        if self.0.is_zero() {
            return "0".into();
        }
        let (neg, mantissa, exp) = self.0.to_sign_string_exp(10, Some(digits));
        // value = 0.mantissa * 10^exp
        let exp = exp.unwrap_or(0);
        let sign = if neg { "-" } else { "" };
        let mantissa = mantissa.trim_end_matches('0');
        let mantissa = if mantissa.is_empty() { "0" } else { mantissa };
        if (-8..=24).contains(&exp) {
            let out = if exp <= 0 {
                format!("0.{}{}", "0".repeat((-exp) as usize), mantissa)
            } else if (exp as usize) >= mantissa.len() {
                format!("{}{}", mantissa, "0".repeat(exp as usize - mantissa.len()))
            } else {
                let (int, frac) = mantissa.split_at(exp as usize);
                format!("{int}.{frac}")
            };
            format!("{sign}{out}")
        } else {
            let (first, rest) = mantissa.split_at(1);
            let e = exp - 1;
            if rest.is_empty() {
                format!("{sign}{first}e{e}")
            } else {
                format!("{sign}{first}.{rest}e{e}")
            }
        }
    }

    /// Decimal digits that the precision supports.
    pub fn decimal_digits(&self) -> usize {
        ((self.prec() as f64) * std::f64::consts::LOG10_2).floor() as usize
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or_else(|| self.decimal_digits());
        f.write_str(&self.to_decimal(digits))
    }
}

impl Serialize for Real {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_decimal(self.decimal_digits()))
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Real) -> bool {
        self.0 == other.0
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Real) -> Option<Ordering> {
        self.0.partial_cmp(&other.0)
    }
}

impl PartialEq<f64> for Real {
    fn eq(&self, other: &f64) -> bool {
        self.0 == *other
    }
}

impl PartialOrd<f64> for Real {
    fn partial_cmp(&self, other: &f64) -> Option<Ordering> {
        self.0.partial_cmp(other)
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(-self.0)
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(-self.0.clone())
    }
}

macro_rules! real_binop {
    ($Tr:ident, $method:ident, $TrA:ident, $method_a:ident, $op:tt) => {
        impl $Tr<&Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                let prec = self.0.prec().max(rhs.0.prec());
                Real(Float::with_val(prec, &self.0 $op &rhs.0))
            }
        }
        impl $Tr<Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                self $op &rhs
            }
        }
        impl $Tr<&Real> for Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                &self $op rhs
            }
        }
        impl $Tr<Real> for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                &self $op &rhs
            }
        }
        impl $TrA<&Real> for Real {
            fn $method_a(&mut self, rhs: &Real) {
                let prec = self.0.prec().max(rhs.0.prec());
                self.0 = Float::with_val(prec, &self.0 $op &rhs.0);
            }
        }
        impl $TrA<Real> for Real {
            fn $method_a(&mut self, rhs: Real) {
                *self = &*self $op &rhs;
            }
        }
        real_binop!(@scalar $Tr, $method, $TrA, $method_a, $op, f64);
        real_binop!(@scalar $Tr, $method, $TrA, $method_a, $op, i64);
        real_binop!(@scalar $Tr, $method, $TrA, $method_a, $op, u64);
        real_binop!(@scalar $Tr, $method, $TrA, $method_a, $op, i32);
        real_binop!(@scalar $Tr, $method, $TrA, $method_a, $op, u32);
    };
    (@scalar $Tr:ident, $method:ident, $TrA:ident, $method_a:ident, $op:tt, $T:ty) => {
        impl $Tr<$T> for &Real {
            type Output = Real;
            fn $method(self, rhs: $T) -> Real {
                Real(Float::with_val(self.0.prec(), &self.0 $op rhs))
            }
        }
        impl $Tr<$T> for Real {
            type Output = Real;
            fn $method(self, rhs: $T) -> Real {
                &self $op rhs
            }
        }
        impl $Tr<&Real> for $T {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                Real(Float::with_val(rhs.0.prec(), self $op &rhs.0))
            }
        }
        impl $Tr<Real> for $T {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                self $op &rhs
            }
        }
        impl $TrA<$T> for Real {
            fn $method_a(&mut self, rhs: $T) {
                *self = &*self $op rhs;
            }
        }
    };
}

real_binop!(Add, add, AddAssign, add_assign, +);
real_binop!(Sub, sub, SubAssign, sub_assign, -);
real_binop!(Mul, mul, MulAssign, mul_assign, *);
real_binop!(Div, div, DivAssign, div_assign, /);

impl Mul<&Integer> for &Real {
    type Output = Real;
    fn mul(self, rhs: &Integer) -> Real {
        Real(Float::with_val(self.0.prec(), &self.0 * rhs))
    }
}

impl<'a> Sum<&'a Real> for Real {
    /// Panics on an empty iterator (there is no precision to pick).
    fn sum<I: Iterator<Item = &'a Real>>(mut iter: I) -> Real {
        let first = iter.next().expect("sum of an empty iterator of Real").clone();
        iter.fold(first, |acc, x| acc + x)
    }
}

impl Sum<Real> for Real {
    fn sum<I: Iterator<Item = Real>>(mut iter: I) -> Real {
        let first = iter.next().expect("sum of an empty iterator of Real");
        iter.fold(first, |acc, x| acc + x)
    }
}
