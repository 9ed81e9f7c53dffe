use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use dashu_base::{BitTest, Sign};
use dashu_int::{IBig, UBig};
use dashu_float::{round::mode::HalfEven, FBig};
use num_bigint::{BigInt, Sign as NbSign};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

type FB = FBig<HalfEven, 2>;

/// Arbitrary-precision real scalar.
///
/// The stored precision is the working precision in bits; binary
/// operations round the result to the minimum of the operand
/// precisions, so precision only ever decreases along a computation.
#[derive(Clone)]
pub struct Real {
    x: FB,
    prec: u32,
}

fn ibig_from_bigint(n: &BigInt) -> UBig {
    let (_, bytes) = n.to_bytes_le();
    UBig::from_le_bytes(&bytes)
}

fn bigint_from_ubig(u: &UBig) -> BigInt {
    BigInt::from_bytes_le(NbSign::Plus, &u.to_le_bytes())
}

impl Real {
    pub fn zero(prec: u32) -> Self {
        Real { x: FB::ZERO, prec }
    }

    pub fn one(prec: u32) -> Self {
        Real::from_i64(1, prec)
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        Real {
            x: FB::from(v).with_precision(prec as usize).value(),
            prec,
        }
    }

    pub fn from_f64(v: f64, prec: u32) -> Self {
        let x = FB::try_from(v).expect("finite f64");
        Real {
            x: x.with_precision(prec as usize).value(),
            prec,
        }
    }

    pub fn from_bigint(n: &BigInt, prec: u32) -> Self {
        let mag = ibig_from_bigint(n);
        let sign = if n.is_negative() { Sign::Negative } else { Sign::Positive };
        let i = IBig::from_parts(sign, mag);
        Real {
            x: FB::from(i).with_precision(prec as usize).value(),
            prec,
        }
    }

    pub fn from_rational(q: &BigRational, prec: u32) -> Self {
        let num = Real::from_bigint(q.numer(), prec + 16);
        let den = Real::from_bigint(q.denom(), prec + 16);
        let mut r = &num / &den;
        r.set_prec(prec);
        r
    }

    /// 2^e at the given precision (exact for any e).
    pub fn exp2(e: i64, prec: u32) -> Self {
        let x = FB::from_parts(IBig::ONE, e as isize);
        Real {
            x: x.with_precision(prec as usize).value(),
            prec,
        }
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn set_prec(&mut self, prec: u32) {
        self.prec = prec;
        self.x = std::mem::take(&mut self.x).with_precision(prec as usize).value();
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        let mut r = self.clone();
        r.set_prec(prec);
        r
    }

    pub fn is_zero(&self) -> bool {
        self.x.repr().significand().is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.x.repr().sign() == Sign::Negative && !self.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.x.repr().sign() == Sign::Positive && !self.is_zero()
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Principal square root; panics on negative input.
    pub fn sqrt(&self) -> Self {
        assert!(!self.is_negative(), "sqrt of negative Real");
        Real {
            x: self.x.clone().with_precision(self.prec as usize).value().sqrt(),
            prec: self.prec,
        }
    }

    pub fn recip(&self) -> Self {
        &Real::one(self.prec) / self
    }

    pub fn powi(&self, e: u32) -> Self {
        let mut acc = Real::one(self.prec);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        self.x.to_f64().value()
    }

    /// Binary exponent of |x|, i.e. floor(log2 |x|); None for zero.
    pub fn exponent(&self) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        let repr = self.x.repr();
        let bits = repr.significand().bit_len() as i64;
        Some(repr.exponent() as i64 + bits - 1)
    }

    /// Largest integer not exceeding the value.
    pub fn floor_bigint(&self) -> BigInt {
        let fl = self.x.clone().floor();
        let (signif, exp) = fl.into_repr().into_parts();
        let (sign, mag) = signif.into_parts();
        let mut n = bigint_from_ubig(&mag);
        if sign == Sign::Negative {
            n = -n;
        }
        if exp >= 0 {
            n << (exp as usize)
        } else {
            n >> ((-exp) as usize)
        }
    }

    pub fn max(&self, other: &Real) -> Real {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn min(&self, other: &Real) -> Real {
        if self <= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Decimal string carrying the full working precision.
    pub fn to_decimal_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.x.to_decimal().value().to_string()
    }

    fn bin(op_prec: u32, x: FB) -> Real {
        Real {
            x: x.with_precision(op_prec as usize).value(),
            prec: op_prec,
        }
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}", self.to_f64())
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal_string())
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.x == other.x
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.x.partial_cmp(&other.x)
    }
}

macro_rules! real_binop {
    ($trait:ident, $fn:ident, $op:tt) => {
        impl $trait<&Real> for &Real {
            type Output = Real;
            fn $fn(self, rhs: &Real) -> Real {
                Real::bin(self.prec.min(rhs.prec), (&self.x) $op (&rhs.x))
            }
        }
        impl $trait<Real> for Real {
            type Output = Real;
            fn $fn(self, rhs: Real) -> Real {
                (&self) $op (&rhs)
            }
        }
    };
}

real_binop!(Add, add, +);
real_binop!(Sub, sub, -);
real_binop!(Mul, mul, *);

impl Div<&Real> for &Real {
    type Output = Real;
    fn div(self, rhs: &Real) -> Real {
        assert!(!rhs.is_zero(), "division by exact zero Real");
        let prec = self.prec.min(rhs.prec);
        let x = self
            .x
            .clone()
            .with_precision(prec as usize)
            .value()
            / rhs.x.clone().with_precision(prec as usize).value();
        Real::bin(prec, x)
    }
}

impl Div<Real> for Real {
    type Output = Real;
    fn div(self, rhs: Real) -> Real {
        (&self) / (&rhs)
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real {
            x: -self.x.clone(),
            prec: self.prec,
        }
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        -(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precision_propagates_min() {
        let a = Real::from_i64(2, 256).sqrt();
        let b = Real::from_i64(3, 128);
        assert_eq!((&a * &b).prec(), 128);
    }

    #[test]
    fn sqrt_two_squares_back() {
        let two = Real::from_i64(2, 256);
        let s = two.sqrt();
        let err = (&(&s * &s) - &two).abs();
        assert!(err < Real::exp2(-250, 64));
    }

    #[test]
    fn floor_of_negative() {
        let x = Real::from_f64(-1.5, 64);
        assert_eq!(x.floor_bigint(), BigInt::from(-2));
    }

    #[test]
    fn exponent_estimates() {
        assert_eq!(Real::from_i64(12, 64).exponent(), Some(3));
        assert_eq!(Real::exp2(-100, 64).exponent(), Some(-100));
        assert_eq!(Real::zero(64).exponent(), None);
    }

    #[test]
    fn rational_roundtrip() {
        let q = BigRational::new(BigInt::from(-22), BigInt::from(7));
        let r = Real::from_rational(&q, 256);
        assert!((r.to_f64() + 22.0 / 7.0).abs() < 1e-15);
    }
}
