use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;

use super::Real;

/// Arbitrary-precision complex scalar built on two [`Real`] parts.
#[derive(Clone, PartialEq)]
pub struct Cplx {
    pub re: Real,
    pub im: Real,
}

impl Cplx {
    pub fn new(re: Real, im: Real) -> Self {
        Cplx { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        Cplx::new(Real::zero(prec), Real::zero(prec))
    }

    pub fn one(prec: u32) -> Self {
        Cplx::new(Real::one(prec), Real::zero(prec))
    }

    pub fn i(prec: u32) -> Self {
        Cplx::new(Real::zero(prec), Real::one(prec))
    }

    pub fn from_real(re: Real) -> Self {
        let p = re.prec();
        Cplx::new(re, Real::zero(p))
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        Cplx::from_real(Real::from_i64(v, prec))
    }

    pub fn from_f64(re: f64, im: f64, prec: u32) -> Self {
        Cplx::new(Real::from_f64(re, prec), Real::from_f64(im, prec))
    }

    pub fn from_rational(q: &BigRational, prec: u32) -> Self {
        Cplx::from_real(Real::from_rational(q, prec))
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().min(self.im.prec())
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        Cplx::new(self.re.with_prec(prec), self.im.with_prec(prec))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Cplx::new(self.re.clone(), -&self.im)
    }

    pub fn norm_sqr(&self) -> Real {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn abs(&self) -> Real {
        self.norm_sqr().sqrt()
    }

    /// Principal branch square root (branch cut on the negative real axis).
    pub fn sqrt(&self) -> Self {
        let prec = self.prec();
        if self.is_zero() {
            return Cplx::zero(prec);
        }
        let r = self.abs();
        let two = Real::from_i64(2, prec);
        if !self.re.is_negative() {
            // a = sqrt((r+re)/2) is well away from zero here
            let a = (&(&r + &self.re) / &two).sqrt();
            let b = &self.im / &(&a * &two);
            Cplx::new(a, b)
        } else {
            let t = (&(&r - &self.re) / &two).sqrt();
            if self.im.is_negative() {
                let b = -&t;
                let a = &self.im / &(&b * &two);
                Cplx::new(a, b)
            } else if self.im.is_zero() {
                Cplx::new(Real::zero(prec), t)
            } else {
                let a = &self.im / &(&t * &two);
                Cplx::new(a, t)
            }
        }
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        assert!(!n.is_zero(), "division by exact zero Cplx");
        Cplx::new(&self.re / &n, &(-&self.im) / &n)
    }

    pub fn scale(&self, s: &Real) -> Self {
        Cplx::new(&self.re * s, &self.im * s)
    }

    pub fn powi(&self, e: u32) -> Self {
        let mut acc = Cplx::one(self.prec());
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

    /// True when the imaginary part is below `tol` in absolute value.
    pub fn is_real_within(&self, tol: &Real) -> bool {
        self.im.abs() <= *tol
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl fmt::Debug for Cplx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.to_f64_pair();
        write!(f, "({re:e}{im:+e}i)")
    }
}

impl fmt::Display for Cplx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return f.write_str(&self.re.to_decimal_string());
        }
        write!(
            f,
            "{} + {}*I",
            self.re.to_decimal_string(),
            self.im.to_decimal_string()
        )
    }
}

impl Add<&Cplx> for &Cplx {
    type Output = Cplx;
    fn add(self, rhs: &Cplx) -> Cplx {
        Cplx::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&Cplx> for &Cplx {
    type Output = Cplx;
    fn sub(self, rhs: &Cplx) -> Cplx {
        Cplx::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&Cplx> for &Cplx {
    type Output = Cplx;
    fn mul(self, rhs: &Cplx) -> Cplx {
        let re = &(&self.re * &rhs.re) - &(&self.im * &rhs.im);
        let im = &(&self.re * &rhs.im) + &(&self.im * &rhs.re);
        Cplx::new(re, im)
    }
}

impl Div<&Cplx> for &Cplx {
    type Output = Cplx;
    fn div(self, rhs: &Cplx) -> Cplx {
        self * &rhs.recip()
    }
}

impl Neg for &Cplx {
    type Output = Cplx;
    fn neg(self) -> Cplx {
        Cplx::new(-&self.re, -&self.im)
    }
}

macro_rules! cplx_owned {
    ($trait:ident, $fn:ident) => {
        impl $trait<Cplx> for Cplx {
            type Output = Cplx;
            fn $fn(self, rhs: Cplx) -> Cplx {
                $trait::$fn(&self, &rhs)
            }
        }
    };
}

cplx_owned!(Add, add);
cplx_owned!(Sub, sub);
cplx_owned!(Mul, mul);
cplx_owned!(Div, div);

impl Neg for Cplx {
    type Output = Cplx;
    fn neg(self) -> Cplx {
        -(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &Cplx, b: &Cplx, tol_exp: i64) -> bool {
        (a - b).abs() < Real::exp2(tol_exp, 64)
    }

    #[test]
    fn sqrt_principal_branch() {
        let prec = 256;
        // sqrt(-1) = i
        let m1 = Cplx::from_i64(-1, prec);
        assert!(close(&m1.sqrt(), &Cplx::i(prec), -250));
        // sqrt(2i) = 1 + i
        let z = Cplx::new(Real::zero(prec), Real::from_i64(2, prec));
        let w = Cplx::new(Real::one(prec), Real::one(prec));
        assert!(close(&z.sqrt(), &w, -250));
        // sqrt(-2i) = 1 - i (principal: Re >= 0)
        let z = Cplx::new(Real::zero(prec), Real::from_i64(-2, prec));
        let w = Cplx::new(Real::one(prec), Real::from_i64(-1, prec));
        assert!(close(&z.sqrt(), &w, -250));
    }

    #[test]
    fn division_roundtrip() {
        let prec = 256;
        let a = Cplx::from_f64(3.25, -1.5, prec);
        let b = Cplx::from_f64(-0.75, 2.0, prec);
        let q = &a / &b;
        assert!(close(&(&q * &b), &a, -240));
    }
}
