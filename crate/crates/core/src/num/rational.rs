use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Cplx, Real};

/// Continued-fraction reconstruction of a rational from a real scalar.
///
/// Returns the first convergent p/q with |q| <= `denominator_bound`
/// whose distance to `x` is below 2^(-p/2) * max(1, |x|); `None` when
/// no such convergent exists within the bound.
pub fn rationalize(x: &Real, denominator_bound: &BigInt) -> Option<BigRational> {
    let prec = x.prec();
    let eps = &Real::exp2(-(prec as i64) / 2, prec) * &Real::one(prec).max(&x.abs());
    let tiny = Real::exp2(-(prec as i64) + 8, prec);

    let mut h_prev = BigInt::one();
    let mut h = x.floor_bigint();
    let mut k_prev = BigInt::zero();
    let mut k = BigInt::one();
    let mut frac = x - &Real::from_bigint(&h, prec);

    loop {
        let cand = BigRational::new(h.clone(), k.clone());
        let err = (x - &Real::from_rational(&cand, prec)).abs();
        if err <= eps {
            return Some(cand);
        }
        if frac.abs() <= tiny {
            return None;
        }
        let inv = frac.recip();
        let a = inv.floor_bigint();
        frac = &inv - &Real::from_bigint(&a, prec);
        let h_next = &a * &h + &h_prev;
        let k_next = &a * &k + &k_prev;
        if k_next.magnitude() > denominator_bound.magnitude() {
            return None;
        }
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
}

/// Rationalize a complex scalar that is approximately real.
///
/// Precondition of the reconstruction: the imaginary part must already
/// be below the residual tolerance, otherwise `None`.
pub fn rationalize_cplx(z: &Cplx, denominator_bound: &BigInt) -> Option<BigRational> {
    let prec = z.prec();
    let eps = &Real::exp2(-(prec as i64) / 2, prec) * &Real::one(prec).max(&z.abs());
    if z.im.abs() > eps {
        return None;
    }
    rationalize(&z.re, denominator_bound)
}

/// Parse "p/q" or a plain/decimal integer literal into an exact rational.
pub fn rat_from_decimal_str(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let num: BigInt = n.trim().parse().ok()?;
        let den: BigInt = d.trim().parse().ok()?;
        if den.is_zero() {
            return None;
        }
        return Some(BigRational::new(num, den));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let neg = int_part.trim_start().starts_with('-');
        let int_part = int_part.trim();
        let ip: BigInt = if int_part == "-" || int_part.is_empty() {
            BigInt::zero()
        } else {
            int_part.parse().ok()?
        };
        let fp: BigInt = if frac_part.is_empty() {
            BigInt::zero()
        } else {
            frac_part.parse().ok()?
        };
        if fp.is_negative() {
            return None;
        }
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let mag = ip.abs() * &scale + fp;
        let signed = if neg { -mag } else { mag };
        return Some(BigRational::new(signed, scale));
    }
    let n: BigInt = s.parse().ok()?;
    Some(BigRational::from_integer(n))
}

pub fn rat_to_string(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_one_half() {
        let x = Real::from_rational(&BigRational::new(1.into(), 2.into()), 256);
        let q = rationalize(&x, &BigInt::from(1_000_000)).unwrap();
        assert_eq!(q, BigRational::new(1.into(), 2.into()));
    }

    #[test]
    fn recovers_large_denominator() {
        // the Fermat SDP optimum's first coordinate
        let q0 = BigRational::new(
            BigInt::parse_bytes(b"-867799528369", 10).unwrap(),
            BigInt::parse_bytes(b"6890409751681", 10).unwrap(),
        );
        let x = Real::from_rational(&q0, 256);
        let q = rationalize(&x, &BigInt::parse_bytes(b"100000000000000000", 10).unwrap()).unwrap();
        assert_eq!(q, q0);
    }

    #[test]
    fn rejects_sqrt2() {
        let x = Real::from_i64(2, 256).sqrt();
        assert!(rationalize(&x, &BigInt::from(1_000_000)).is_none());
    }

    #[test]
    fn parses_rationals() {
        assert_eq!(
            rat_from_decimal_str("-22/7").unwrap(),
            BigRational::new((-22).into(), 7.into())
        );
        assert_eq!(
            rat_from_decimal_str("2.5").unwrap(),
            BigRational::new(5.into(), 2.into())
        );
        assert_eq!(
            rat_from_decimal_str("34").unwrap(),
            BigRational::from_integer(34.into())
        );
        assert!(rat_from_decimal_str("1/0").is_none());
    }
}
