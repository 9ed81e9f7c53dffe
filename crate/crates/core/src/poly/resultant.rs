use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::linalg::CMat;
use crate::num::{Cplx, Real};
use crate::Result;

use super::{CPoly, Coeff, MPoly, QPoly};

/// Sylvester resultant of `a` and `b` with respect to `var`.
///
/// Vanishes at exactly the parameter values where the two polynomials
/// share a root in `var`. Dimensions up to 6 are expanded directly;
/// larger matrices are computed by evaluation and interpolation in the
/// unique remaining active variable.
pub fn resultant_univariate<C: Coeff>(a: &MPoly<C>, b: &MPoly<C>, var: usize) -> Result<MPoly<C>>
where
    MPoly<C>: SylvesterDet,
{
    let m1 = a.deg_in(var);
    let m2 = b.deg_in(var);
    if m1 <= 0 && m2 <= 0 {
        return Err(Error::NothingToEliminate);
    }
    if m1 <= 0 {
        // Res(a, b) = a^deg(b) when a is free of var
        let mut acc = a.clone();
        for _ in 1..m2 {
            acc = acc.mul(a);
        }
        return Ok(acc);
    }
    if m2 <= 0 {
        let mut acc = b.clone();
        for _ in 1..m1 {
            acc = acc.mul(b);
        }
        return Ok(acc);
    }

    let (m1, m2) = (m1 as usize, m2 as usize);
    let ca = a.coeffs_wrt(var);
    let cb = b.coeffs_wrt(var);
    let n = m1 + m2;
    // Sylvester matrix: m2 shifted copies of a's coefficients, then m1 of b's.
    let zero_poly = MPoly::new(a.nvars);
    let mut mat = vec![vec![zero_poly.clone(); n]; n];
    for r in 0..m2 {
        for (k, c) in ca.iter().enumerate() {
            mat[r][r + m1 - k] = c.clone();
        }
    }
    for r in 0..m1 {
        for (k, c) in cb.iter().enumerate() {
            mat[m2 + r][r + m2 - k] = c.clone();
        }
    }
    MPoly::sylvester_det(mat, var)
}

/// Determinant strategy for matrices of polynomials, chosen per scalar type.
pub trait SylvesterDet: Sized {
    fn sylvester_det(mat: Vec<Vec<Self>>, eliminated_var: usize) -> Result<Self>;
}

fn cofactor_det<C: Coeff>(mat: &[Vec<MPoly<C>>]) -> MPoly<C> {
    let n = mat.len();
    if n == 1 {
        return mat[0][0].clone();
    }
    let nvars = mat[0][0].nvars;
    let mut acc = MPoly::new(nvars);
    for i in 0..n {
        if mat[i][0].is_zero() {
            continue;
        }
        let minor: Vec<Vec<MPoly<C>>> = mat
            .iter()
            .enumerate()
            .filter(|(r, _)| *r != i)
            .map(|(_, row)| row[1..].to_vec())
            .collect();
        let sub = cofactor_det(&minor);
        let term = mat[i][0].mul(&sub);
        acc = if i % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Active variables (nonzero degree) of a polynomial matrix.
fn active_vars<C: Coeff>(mat: &[Vec<MPoly<C>>], skip: usize) -> Vec<usize> {
    let nvars = mat[0][0].nvars;
    (0..nvars)
        .filter(|&v| v != skip && mat.iter().flatten().any(|p| p.deg_in(v) > 0))
        .collect()
}

fn degree_bound<C: Coeff>(mat: &[Vec<MPoly<C>>], var: usize) -> usize {
    mat.iter()
        .map(|row| row.iter().map(|p| p.deg_in(var).max(0)).max().unwrap_or(0))
        .sum::<i64>() as usize
}

impl SylvesterDet for QPoly {
    fn sylvester_det(mat: Vec<Vec<QPoly>>, eliminated_var: usize) -> Result<QPoly> {
        let n = mat.len();
        if n <= 6 {
            return Ok(cofactor_det(&mat));
        }
        let active = active_vars(&mat, eliminated_var);
        match active.len() {
            0 => Ok(cofactor_det(&mat)), // constant matrix, n never large here
            1 => {
                let v = active[0];
                let bound = degree_bound(&mat, v);
                let pts: Vec<BigInt> = interpolation_nodes(bound + 1);
                let mut values = Vec::with_capacity(pts.len());
                for t in &pts {
                    let tq = BigRational::from_integer(t.clone());
                    let m: Vec<Vec<BigRational>> = mat
                        .iter()
                        .map(|row| row.iter().map(|p| eval_at(p, v, &tq)).collect())
                        .collect();
                    values.push(rational_det(m));
                }
                Ok(interpolate_q(&pts, &values, mat[0][0].nvars, v))
            }
            k => Err(Error::LinearSolve(format!(
                "resultant interpolation supports one remaining variable, found {k}"
            ))),
        }
    }
}

impl SylvesterDet for CPoly {
    fn sylvester_det(mat: Vec<Vec<CPoly>>, eliminated_var: usize) -> Result<CPoly> {
        let n = mat.len();
        if n <= 6 {
            return Ok(cofactor_det(&mat));
        }
        let active = active_vars(&mat, eliminated_var);
        match active.len() {
            0 => Ok(cofactor_det(&mat)),
            1 => {
                let v = active[0];
                let prec = mat
                    .iter()
                    .flatten()
                    .flat_map(|p| p.terms.values())
                    .map(|c| c.prec())
                    .min()
                    .unwrap_or(64);
                // guard digits against interpolation conditioning
                let wprec = prec + 64;
                let bound = degree_bound(&mat, v);
                let nvars = mat[0][0].nvars;
                let pts: Vec<Cplx> = interpolation_nodes(bound + 1)
                    .iter()
                    .map(|t| Cplx::from_real(Real::from_bigint(t, wprec)))
                    .collect();
                let mut values = Vec::with_capacity(pts.len());
                for t in &pts {
                    let mut point = vec![Cplx::zero(wprec); nvars];
                    point[v] = t.clone();
                    let m = CMat::from_fn(n, n, |i, j| {
                        eval_partial(&mat[i][j], v, t, wprec)
                    });
                    let _ = &point;
                    values.push(m.det());
                }
                Ok(interpolate_c(&pts, &values, nvars, v, prec))
            }
            k => Err(Error::LinearSolve(format!(
                "resultant interpolation supports one remaining variable, found {k}"
            ))),
        }
    }
}

fn interpolation_nodes(count: usize) -> Vec<BigInt> {
    // 0, 1, -1, 2, -2, ...
    let mut out = Vec::with_capacity(count);
    out.push(BigInt::zero());
    let mut k = BigInt::one();
    while out.len() < count {
        out.push(k.clone());
        if out.len() < count {
            out.push(-k.clone());
        }
        k += 1;
    }
    out
}

fn eval_at(p: &QPoly, var: usize, t: &BigRational) -> BigRational {
    let mut total = BigRational::zero();
    for (e, c) in &p.terms {
        debug_assert!(e.iter().enumerate().all(|(i, &k)| i == var || k == 0));
        let mut term = c.clone();
        for _ in 0..e[var] {
            term *= t;
        }
        total += term;
    }
    total
}

fn eval_partial(p: &CPoly, var: usize, t: &Cplx, prec: u32) -> Cplx {
    let mut total = Cplx::zero(prec);
    for (e, c) in &p.terms {
        debug_assert!(e.iter().enumerate().all(|(i, &k)| i == var || k == 0));
        let mut term = c.with_prec(prec);
        for _ in 0..e[var] {
            term = &term * t;
        }
        total = &total + &term;
    }
    total
}

/// Exact determinant of a rational matrix via row scaling plus
/// fraction-free Bareiss elimination on integers.
pub fn rational_det(mat: Vec<Vec<BigRational>>) -> BigRational {
    let n = mat.len();
    if n == 0 {
        return BigRational::one();
    }
    let mut scale = BigRational::one();
    let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for row in &mat {
        let mut l = BigInt::one();
        for c in row {
            l = num_integer::lcm(l, c.denom().clone());
        }
        scale *= BigRational::new(BigInt::one(), l.clone());
        m.push(
            row.iter()
                .map(|c| c.numer() * (&l / c.denom()))
                .collect(),
        );
    }
    let d = bareiss_det(m);
    BigRational::from_integer(d) * scale
}

/// Fraction-free Bareiss determinant of an integer matrix.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Newton divided-difference interpolation over the rationals.
fn interpolate_q(pts: &[BigInt], values: &[BigRational], nvars: usize, var: usize) -> QPoly {
    let n = pts.len();
    let xs: Vec<BigRational> = pts.iter().map(|t| BigRational::from_integer(t.clone())).collect();
    let mut coef = values.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = &coef[i] - &coef[i - 1];
            let den = &xs[i] - &xs[i - j];
            coef[i] = num / den;
        }
    }
    // expand Newton form to monomial coefficients
    let mut poly = QPoly::new(nvars);
    for i in (0..n).rev() {
        // poly = poly * (x - xs[i]) + coef[i]
        let x = QPoly::var(nvars, var, BigRational::one());
        let shift = x.sub(&QPoly::constant(nvars, xs[i].clone()));
        poly = poly.mul(&shift);
        poly.add_term(&vec![0u16; nvars], &coef[i]);
    }
    poly
}

fn interpolate_c(pts: &[Cplx], values: &[Cplx], nvars: usize, var: usize, out_prec: u32) -> CPoly {
    let n = pts.len();
    let mut coef = values.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = &coef[i] - &coef[i - 1];
            let den = &pts[i] - &pts[i - j];
            coef[i] = &num / &den;
        }
    }
    let one = Cplx::one(pts[0].prec());
    let mut poly = CPoly::new(nvars);
    for i in (0..n).rev() {
        let x = CPoly::var(nvars, var, one.clone());
        let shift = x.sub(&CPoly::constant(nvars, pts[i].clone()));
        poly = poly.mul(&shift);
        let mut e = vec![0u16; nvars];
        e[var] = 0;
        poly.add_term(&e, &coef[i]);
    }
    poly.map_coeffs(|c| c.with_prec(out_prec))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn shared_root_iff_t_is_one() {
        // a = x^2 - t, b = x - 1 in vars (x, t): resultant is t - 1 up to sign
        let mut a = QPoly::new(2);
        a.add_term(&[2, 0], &q(1));
        a.add_term(&[0, 1], &q(-1));
        let mut b = QPoly::new(2);
        b.add_term(&[1, 0], &q(1));
        b.add_term(&[0, 0], &q(-1));
        let r = resultant_univariate(&a, &b, 0).unwrap();
        let mut expected = QPoly::new(2);
        expected.add_term(&[0, 1], &q(1));
        expected.add_term(&[0, 0], &q(-1));
        assert!(r == expected || r == expected.neg());
    }

    #[test]
    fn linear_case() {
        // a = x - u, b = x - w: resultant u - w up to sign
        let mut a = QPoly::new(3);
        a.add_term(&[1, 0, 0], &q(1));
        a.add_term(&[0, 1, 0], &q(-1));
        let mut b = QPoly::new(3);
        b.add_term(&[1, 0, 0], &q(1));
        b.add_term(&[0, 0, 1], &q(-1));
        let r = resultant_univariate(&a, &b, 0).unwrap();
        let mut expected = QPoly::new(3);
        expected.add_term(&[0, 1, 0], &q(1));
        expected.add_term(&[0, 0, 1], &q(-1));
        assert!(r == expected || r == expected.neg());
    }

    #[test]
    fn nothing_to_eliminate() {
        let a = QPoly::constant(2, q(3));
        let b = QPoly::constant(2, q(5));
        assert!(matches!(
            resultant_univariate(&a, &b, 0),
            Err(Error::NothingToEliminate)
        ));
    }

    #[test]
    fn bareiss_matches_known_det() {
        let m = vec![
            vec![BigInt::from(2), BigInt::from(1), BigInt::from(0)],
            vec![BigInt::from(1), BigInt::from(3), BigInt::from(4)],
            vec![BigInt::from(0), BigInt::from(-1), BigInt::from(5)],
        ];
        // det = 2*(15+4) - 1*(5-0) = 33
        assert_eq!(bareiss_det(m), BigInt::from(33));
    }

    #[test]
    fn interpolation_path_agrees_with_direct() {
        // discriminant-style resultant of a quartic and its derivative,
        // forced through the 7x7 interpolation path
        // a = x^4 + t*x + 1, b = da/dx = 4x^3 + t (vars x, t)
        let mut a = QPoly::new(2);
        a.add_term(&[4, 0], &q(1));
        a.add_term(&[1, 1], &q(1));
        a.add_term(&[0, 0], &q(1));
        let b = a.partial(0);
        let r = resultant_univariate(&a, &b, 0).unwrap();
        // Res_x(x^4 + tx + 1, 4x^3 + t) = -27 t^4 + 256
        let mut expected = QPoly::new(2);
        expected.add_term(&[0, 4], &q(-27));
        expected.add_term(&[0, 0], &q(256));
        assert!(r == expected || r == expected.neg());
    }
}
