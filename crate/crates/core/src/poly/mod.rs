//! Sparse multivariate polynomials over exact rationals or
//! high-precision complex scalars, with the elimination tools
//! (Sylvester resultants, Macaulay resultants) used throughout.

pub mod macaulay;
pub mod resultant;

pub use macaulay::{macaulay_ternary, macaulay_ternary_cplx};
pub use resultant::resultant_univariate;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::num::{Cplx, Real};

/// Coefficient ring abstraction: exact rationals or complex scalars.
pub trait Coeff: Clone + PartialEq + std::fmt::Debug {
    fn c_zero(&self) -> Self;
    fn c_one(&self) -> Self;
    fn c_is_zero(&self) -> bool;
    fn c_add(&self, rhs: &Self) -> Self;
    fn c_sub(&self, rhs: &Self) -> Self;
    fn c_mul(&self, rhs: &Self) -> Self;
    fn c_neg(&self) -> Self;
}

impl Coeff for BigRational {
    fn c_zero(&self) -> Self {
        BigRational::zero()
    }
    fn c_one(&self) -> Self {
        BigRational::one()
    }
    fn c_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn c_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn c_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn c_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn c_neg(&self) -> Self {
        -self
    }
}

impl Coeff for Cplx {
    fn c_zero(&self) -> Self {
        Cplx::zero(self.prec())
    }
    fn c_one(&self) -> Self {
        Cplx::one(self.prec())
    }
    fn c_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn c_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn c_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn c_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn c_neg(&self) -> Self {
        -self
    }
}

/// Sparse multivariate polynomial; no zero coefficients are stored.
#[derive(Clone, Debug, PartialEq)]
pub struct MPoly<C: Coeff> {
    pub nvars: usize,
    pub terms: BTreeMap<Vec<u16>, C>,
}

pub type QPoly = MPoly<BigRational>;
pub type CPoly = MPoly<Cplx>;

impl<C: Coeff> MPoly<C> {
    pub fn new(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        let mut p = MPoly::new(nvars);
        if !c.c_is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    /// The monomial c * prod(var_i^exp_i).
    pub fn monomial(nvars: usize, expo: &[u16], c: C) -> Self {
        assert_eq!(expo.len(), nvars);
        let mut p = MPoly::new(nvars);
        if !c.c_is_zero() {
            p.terms.insert(expo.to_vec(), c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize, one: C) -> Self {
        let mut e = vec![0u16; nvars];
        e[i] = 1;
        MPoly::monomial(nvars, &e, one)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, expo: &[u16], c: &C) {
        assert_eq!(expo.len(), self.nvars);
        if c.c_is_zero() {
            return;
        }
        match self.terms.get_mut(expo) {
            Some(existing) => {
                let sum = existing.c_add(c);
                if sum.c_is_zero() {
                    self.terms.remove(expo);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(expo.to_vec(), c.clone());
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = MPoly::new(self.nvars);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), c.c_neg());
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = MPoly::new(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u16> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(&e, &ca.c_mul(cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = MPoly::new(self.nvars);
        if c.c_is_zero() {
            return out;
        }
        for (e, a) in &self.terms {
            let v = a.c_mul(c);
            if !v.c_is_zero() {
                out.terms.insert(e.clone(), v);
            }
        }
        out
    }

    pub fn pow(&self, e: u16) -> Self {
        let one = self
            .terms
            .values()
            .next()
            .map(|c| c.c_one())
            .unwrap_or_else(|| panic!("pow of zero polynomial needs a coefficient prototype"));
        let mut acc = MPoly::constant(self.nvars, one);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn total_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as i64).sum())
            .max()
            .unwrap_or(-1)
    }

    pub fn deg_in(&self, var: usize) -> i64 {
        self.terms
            .keys()
            .map(|e| e[var] as i64)
            .max()
            .unwrap_or(-1)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self
            .terms
            .keys()
            .map(|e| e.iter().map(|&x| x as i64).sum::<i64>());
        match degs.next() {
            None => true,
            Some(d0) => degs.all(|d| d == d0),
        }
    }

    pub fn coeff(&self, expo: &[u16]) -> Option<&C> {
        self.terms.get(expo)
    }

    /// Coefficients with respect to one variable: entry k is the
    /// coefficient polynomial of var^k (the var slot zeroed out).
    pub fn coeffs_wrt(&self, var: usize) -> Vec<MPoly<C>> {
        let d = self.deg_in(var).max(0) as usize;
        let mut out = vec![MPoly::new(self.nvars); d + 1];
        for (e, c) in &self.terms {
            let k = e[var] as usize;
            let mut e2 = e.clone();
            e2[var] = 0;
            out[k].add_term(&e2, c);
        }
        out
    }

    pub fn partial(&self, var: usize) -> Self {
        let mut out = MPoly::new(self.nvars);
        for (e, c) in &self.terms {
            let k = e[var];
            if k == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[var] = k - 1;
            let mut m = c.clone();
            let mut acc = c.c_zero();
            // k * c by repeated addition keeps the trait surface small
            for _ in 0..k {
                acc = acc.c_add(&m);
            }
            std::mem::swap(&mut m, &mut acc);
            out.add_term(&e2, &m);
        }
        out
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> MPoly<D> {
        let mut out = MPoly::new(self.nvars);
        for (e, c) in &self.terms {
            let d = f(c);
            if !d.c_is_zero() {
                out.terms.insert(e.clone(), d);
            }
        }
        out
    }

    /// Substitute variable `var` by the given polynomial (in the same
    /// variable set, not involving `var`).
    pub fn subst(&self, var: usize, repl: &MPoly<C>) -> MPoly<C> {
        assert_eq!(repl.deg_in(var), repl.deg_in(var).min(0), "replacement must not involve var");
        let d = self.deg_in(var).max(0) as u16;
        let one = match self.terms.values().next() {
            Some(c) => c.c_one(),
            None => return MPoly::new(self.nvars),
        };
        // precompute powers of the replacement
        let mut pows = Vec::with_capacity(d as usize + 1);
        pows.push(MPoly::constant(self.nvars, one));
        for k in 1..=d {
            pows.push(pows[(k - 1) as usize].mul(repl));
        }
        let mut out = MPoly::new(self.nvars);
        for (e, c) in &self.terms {
            let k = e[var] as usize;
            let mut e2 = e.clone();
            e2[var] = 0;
            let base = MPoly::monomial(self.nvars, &e2, c.clone());
            out = out.add(&base.mul(&pows[k]));
        }
        out
    }
}

impl QPoly {
    pub fn eval_q(&self, pt: &[BigRational]) -> BigRational {
        assert_eq!(pt.len(), self.nvars);
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    t *= &pt[i];
                }
            }
            total += t;
        }
        total
    }

    pub fn to_cpoly(&self, prec: u32) -> CPoly {
        self.map_coeffs(|q| Cplx::from_rational(q, prec))
    }

    /// Greatest common divisor of univariate rational polynomials in
    /// variable `var` (all other exponents must be zero). Monic output.
    ///
    /// Remainders are reduced to primitive integer form at every step;
    /// plain fraction Euclid doubles coefficient sizes per step.
    pub fn gcd_univariate(a: &QPoly, b: &QPoly, var: usize) -> QPoly {
        let mut a = a.primitive_part();
        let mut b = b.primitive_part();
        while !b.is_zero() {
            let r = QPoly::rem_univariate(&a, &b, var).primitive_part();
            a = b;
            b = r;
        }
        a.monic_univariate(var)
    }

    /// Scale to integer coefficients with content 1 and positive leading
    /// term (in the internal term order).
    pub fn primitive_part(&self) -> QPoly {
        use num_traits::Signed;
        if self.is_zero() {
            return self.clone();
        }
        let l = self.denominator_lcm();
        let mut content = BigInt::zero();
        for c in self.terms.values() {
            let n = c.numer() * (&l / c.denom());
            content = num_integer::gcd(content, n);
        }
        if content.is_zero() {
            return self.clone();
        }
        let last_sign = self
            .terms
            .values()
            .next_back()
            .map(|c| c.numer().is_negative())
            .unwrap_or(false);
        if last_sign {
            content = -content;
        }
        let s = BigRational::new(l, content);
        self.scale(&s)
    }

    /// Euclidean remainder of univariate polynomials in `var`.
    pub fn rem_univariate(a: &QPoly, b: &QPoly, var: usize) -> QPoly {
        let db = b.deg_in(var);
        assert!(db >= 0, "division by zero polynomial");
        let lb = b.lead_coeff_univariate(var);
        let mut r = a.clone();
        while r.deg_in(var) >= db {
            let dr = r.deg_in(var);
            let lr = r.lead_coeff_univariate(var);
            let q = &lr / &lb;
            let mut shift = vec![0u16; a.nvars];
            shift[var] = (dr - db) as u16;
            let t = MPoly::monomial(a.nvars, &shift, q);
            r = r.sub(&t.mul(b));
            if r.deg_in(var) == dr {
                // defensive: numerical impossibility over exact rationals
                panic!("degree did not drop in exact division");
            }
        }
        r
    }

    pub fn lead_coeff_univariate(&self, var: usize) -> BigRational {
        let d = self.deg_in(var);
        let mut e = vec![0u16; self.nvars];
        e[var] = d.max(0) as u16;
        self.coeff(&e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn monic_univariate(&self, var: usize) -> QPoly {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lead_coeff_univariate(var);
        self.scale(&l.recip())
    }

    /// Remove the content with respect to `var`: divide by the gcd (over
    /// Q[other vars], which must be univariate in one other variable) of
    /// the coefficient polynomials. Only used for bivariate polynomials.
    pub fn strip_content_bivariate(&self, var: usize, other: usize) -> QPoly {
        let coeffs = self.coeffs_wrt(var);
        let nonzero: Vec<&QPoly> = coeffs.iter().filter(|c| !c.is_zero()).collect();
        if nonzero.len() <= 1 {
            return self.clone();
        }
        let mut g = nonzero[0].clone();
        for c in &nonzero[1..] {
            g = QPoly::gcd_univariate(&g, c, other);
            if g.total_degree() == 0 {
                return self.clone();
            }
        }
        // exact division of each coefficient by g
        let mut out = MPoly::new(self.nvars);
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let q = QPoly::div_exact_univariate(c, &g, other);
            for (e, v) in &q.terms {
                let mut e2 = e.clone();
                e2[var] = k as u16;
                out.add_term(&e2, v);
            }
        }
        out
    }

    pub fn div_exact_univariate(a: &QPoly, b: &QPoly, var: usize) -> QPoly {
        let db = b.deg_in(var);
        let lb = b.lead_coeff_univariate(var);
        let mut r = a.clone();
        let mut q = MPoly::new(a.nvars);
        while !r.is_zero() {
            let dr = r.deg_in(var);
            assert!(dr >= db, "inexact division");
            let lr = r.lead_coeff_univariate(var);
            let c = &lr / &lb;
            let mut shift = vec![0u16; a.nvars];
            shift[var] = (dr - db) as u16;
            q.add_term(&shift, &c);
            let t = MPoly::monomial(a.nvars, &shift, c);
            r = r.sub(&t.mul(b));
        }
        q
    }

    /// Clear denominators: returns (integer-coefficient polynomial, multiplier)
    /// with multiplier * self having BigInt coefficients.
    pub fn denominator_lcm(&self) -> BigInt {
        let mut l = BigInt::one();
        for c in self.terms.values() {
            l = num_integer::lcm(l, c.denom().clone());
        }
        l
    }
}

impl CPoly {
    pub fn eval(&self, pt: &[Cplx]) -> Cplx {
        assert_eq!(pt.len(), self.nvars);
        let prec = pt.iter().map(|z| z.prec()).min().unwrap_or(64);
        // cache powers per variable
        let mut pows: Vec<Vec<Cplx>> = Vec::with_capacity(self.nvars);
        for (i, z) in pt.iter().enumerate() {
            let d = self.deg_in(i).max(0) as usize;
            let mut v = Vec::with_capacity(d + 1);
            v.push(Cplx::one(prec));
            for k in 1..=d {
                let w = &v[k - 1] * z;
                v.push(w);
            }
            pows.push(v);
        }
        let mut total = Cplx::zero(prec);
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = &t * &pows[i][k as usize];
                }
            }
            total = &total + &t;
        }
        total
    }

    /// Largest coefficient magnitude (sup norm).
    pub fn sup_norm(&self) -> Real {
        let prec = self.terms.values().next().map(|c| c.prec()).unwrap_or(64);
        let mut m = Real::zero(prec);
        for c in self.terms.values() {
            m = m.max(&c.abs());
        }
        m
    }

    /// Drop coefficients of magnitude below `tol` (absolute).
    pub fn prune(&self, tol: &Real) -> CPoly {
        let mut out = MPoly::new(self.nvars);
        for (e, c) in &self.terms {
            if c.abs() > *tol {
                out.terms.insert(e.clone(), c.clone());
            }
        }
        out
    }

    pub fn conj(&self) -> CPoly {
        self.map_coeffs(|c| c.conj())
    }

    pub fn scale_cplx(&self, s: &Cplx) -> CPoly {
        self.scale(s)
    }

    /// Univariate coefficient vector (ascending powers) in `var`;
    /// remaining variables must not occur.
    pub fn univariate_coeffs(&self, var: usize) -> Vec<Cplx> {
        let prec = self.terms.values().next().map(|c| c.prec()).unwrap_or(64);
        let d = self.deg_in(var).max(0) as usize;
        let mut out = vec![Cplx::zero(prec); d + 1];
        for (e, c) in &self.terms {
            debug_assert!(e
                .iter()
                .enumerate()
                .all(|(i, &k)| i == var || k == 0));
            out[e[var] as usize] = c.clone();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn arithmetic_and_degrees() {
        // p = x^2 - 2xy + y^2 = (x-y)^2 in vars (x, y)
        let x = QPoly::var(2, 0, q(1));
        let y = QPoly::var(2, 1, q(1));
        let d = x.sub(&y);
        let p = d.mul(&d);
        assert_eq!(p.total_degree(), 2);
        assert!(p.is_homogeneous());
        assert_eq!(
            p.eval_q(&[q(3), q(1)]),
            q(4)
        );
        let px = p.partial(0);
        assert_eq!(px.eval_q(&[q(3), q(1)]), q(4)); // 2(x-y)
    }

    #[test]
    fn substitution() {
        // f = x^2 + z, then z -> -x - y gives x^2 - x - y
        let mut f = QPoly::new(3);
        f.add_term(&[2, 0, 0], &q(1));
        f.add_term(&[0, 0, 1], &q(1));
        let mut repl = QPoly::new(3);
        repl.add_term(&[1, 0, 0], &q(-1));
        repl.add_term(&[0, 1, 0], &q(-1));
        let g = f.subst(2, &repl);
        assert_eq!(g.eval_q(&[q(2), q(5), q(0)]), q(4 - 2 - 5));
    }

    #[test]
    fn univariate_gcd() {
        // gcd(x^2 - 1, x^2 - 2x + 1) = x - 1
        let x = QPoly::var(1, 0, q(1));
        let a = x.mul(&x).sub(&QPoly::constant(1, q(1)));
        let b = x.mul(&x).sub(&x.scale(&q(2))).add(&QPoly::constant(1, q(1)));
        let g = QPoly::gcd_univariate(&a, &b, 0);
        let expected = x.sub(&QPoly::constant(1, q(1)));
        assert_eq!(g, expected);
    }

    #[test]
    fn content_stripping() {
        // (a^2 - 1) * (b + a) in vars (a, b); content wrt b is a^2 - 1
        let a = QPoly::var(2, 0, q(1));
        let b = QPoly::var(2, 1, q(1));
        let content = a.mul(&a).sub(&QPoly::constant(2, q(1)));
        let prim = b.add(&a);
        let p = content.mul(&prim);
        let stripped = p.strip_content_bivariate(1, 0);
        // stripped should be a scalar multiple of b + a
        assert_eq!(stripped.deg_in(1), 1);
        assert_eq!(stripped.deg_in(0), 1);
    }
}
