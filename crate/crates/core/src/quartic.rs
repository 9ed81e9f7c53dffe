//! The central input object: a ternary quartic with exact rational
//! coefficients in the fixed 15-monomial order
//! x⁴, x³y, x³z, x²y², x²yz, x²z², xy³, xy²z, xyz², xz³, y⁴, y³z, y²z², yz³, z⁴.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::Error;
use crate::num::rat_from_decimal_str;
use crate::poly::{CPoly, QPoly};
use crate::Result;

/// Exponent triples of the 15 quartic monomials, in input order.
pub const QUARTIC_MONOMIALS: [[u16; 3]; 15] = [
    [4, 0, 0],
    [3, 1, 0],
    [3, 0, 1],
    [2, 2, 0],
    [2, 1, 1],
    [2, 0, 2],
    [1, 3, 0],
    [1, 2, 1],
    [1, 1, 2],
    [1, 0, 3],
    [0, 4, 0],
    [0, 3, 1],
    [0, 2, 2],
    [0, 1, 3],
    [0, 0, 4],
];

/// Coefficient labels matching [`QUARTIC_MONOMIALS`].
pub const QUARTIC_LABELS: [&str; 15] = [
    "c400", "c310", "c301", "c220", "c211", "c202", "c130", "c121", "c112", "c103", "c040",
    "c031", "c022", "c013", "c004",
];

/// A ternary quartic form with exact rational coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct TernaryQuartic {
    coeffs: [BigRational; 15],
}

impl TernaryQuartic {
    pub fn new(coeffs: [BigRational; 15]) -> Result<Self> {
        if coeffs.iter().all(|c| c.is_zero()) {
            return Err(Error::InvalidInput("quartic is identically zero".into()));
        }
        Ok(TernaryQuartic { coeffs })
    }

    pub fn from_i64(coeffs: [i64; 15]) -> Self {
        let arr: [BigRational; 15] =
            std::array::from_fn(|i| BigRational::from_integer(coeffs[i].into()));
        TernaryQuartic { coeffs: arr }
    }

    /// Parse 15 whitespace-separated rationals in the fixed order.
    pub fn parse(text: &str) -> Result<Self> {
        let body = text
            .trim()
            .strip_prefix("quartic:")
            .unwrap_or(text)
            .trim();
        let parts: Vec<&str> = body.split_whitespace().collect();
        if parts.len() != 15 {
            return Err(Error::InvalidInput(format!(
                "expected 15 coefficients, found {}",
                parts.len()
            )));
        }
        let mut coeffs: [BigRational; 15] = std::array::from_fn(|_| BigRational::zero());
        for (i, p) in parts.iter().enumerate() {
            coeffs[i] = rat_from_decimal_str(p).ok_or_else(|| {
                Error::InvalidInput(format!("malformed rational '{p}' for {}", QUARTIC_LABELS[i]))
            })?;
        }
        TernaryQuartic::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigRational; 15] {
        &self.coeffs
    }

    pub fn coeff(&self, label_index: usize) -> &BigRational {
        &self.coeffs[label_index]
    }

    pub fn to_qpoly(&self) -> QPoly {
        let mut p = QPoly::new(3);
        for (i, m) in QUARTIC_MONOMIALS.iter().enumerate() {
            p.add_term(m, &self.coeffs[i]);
        }
        p
    }

    pub fn to_cpoly(&self, prec: u32) -> CPoly {
        self.to_qpoly().to_cpoly(prec)
    }

    pub fn eval_q(&self, x: &BigRational, y: &BigRational, z: &BigRational) -> BigRational {
        self.to_qpoly().eval_q(&[x.clone(), y.clone(), z.clone()])
    }

    /// Scale every coefficient by s.
    pub fn scale(&self, s: &BigRational) -> Self {
        let coeffs: [BigRational; 15] = std::array::from_fn(|i| &self.coeffs[i] * s);
        TernaryQuartic { coeffs }
    }

    /// Apply the rational linear substitution x_i -> sum_j u[i][j] x_j.
    pub fn transform(&self, u: &[[BigRational; 3]; 3]) -> Result<Self> {
        let vars: Vec<QPoly> = (0..3)
            .map(|i| {
                let mut s = QPoly::new(3);
                for j in 0..3 {
                    let mut e = [0u16; 3];
                    e[j] = 1;
                    s.add_term(&e, &u[i][j]);
                }
                s
            })
            .collect();
        let mut out = QPoly::new(3);
        for (i, m) in QUARTIC_MONOMIALS.iter().enumerate() {
            if self.coeffs[i].is_zero() {
                continue;
            }
            let mut term = QPoly::constant(3, self.coeffs[i].clone());
            for (v, &k) in m.iter().enumerate() {
                for _ in 0..k {
                    term = term.mul(&vars[v]);
                }
            }
            out = out.add(&term);
        }
        TernaryQuartic::from_qpoly(&out)
    }

    pub fn from_qpoly(p: &QPoly) -> Result<Self> {
        if p.nvars != 3 {
            return Err(Error::InvalidInput("expected 3 variables".into()));
        }
        let mut coeffs: [BigRational; 15] = std::array::from_fn(|_| BigRational::zero());
        for (e, c) in &p.terms {
            let deg: u16 = e.iter().sum();
            if deg != 4 {
                return Err(Error::InvalidInput(
                    "polynomial is not homogeneous of degree 4".into(),
                ));
            }
            let idx = QUARTIC_MONOMIALS
                .iter()
                .position(|m| m[0] == e[0] && m[1] == e[1] && m[2] == e[2])
                .unwrap();
            coeffs[idx] = c.clone();
        }
        TernaryQuartic::new(coeffs)
    }

    /// Serialize in the input-file format.
    pub fn to_input_line(&self) -> String {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(crate::num::rat_to_string)
            .collect();
        format!("quartic: {}", parts.join(" "))
    }

    /// Largest coefficient magnitude as f64 (for report scaling only).
    pub fn sup_norm_f64(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|c| {
                let n = c.numer().to_string().parse::<f64>().unwrap_or(f64::MAX);
                let d = c.denom().to_string().parse::<f64>().unwrap_or(1.0);
                (n / d).abs()
            })
            .fold(0.0, f64::max)
    }
}

/// Frequently used example curves.
pub mod curves {
    use super::TernaryQuartic;

    /// 25(x⁴+y⁴+z⁴) − 34(x²y²+x²z²+y²z²), four real ovals.
    pub fn edge() -> TernaryQuartic {
        TernaryQuartic::from_i64([
            25, 0, 0, -34, 0, -34, 0, 0, 0, 0, 25, 0, -34, 0, 25,
        ])
    }

    /// 2x⁴+y⁴+z⁴−3x²y²−3x²z²+y²z², two nested ovals.
    pub fn vinnikov_example() -> TernaryQuartic {
        TernaryQuartic::from_i64([2, 0, 0, -3, 0, -3, 0, 0, 0, 0, 1, 0, 1, 0, 1])
    }

    /// x⁴+y⁴+z⁴, empty real curve.
    pub fn fermat() -> TernaryQuartic {
        TernaryQuartic::from_i64([1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1])
    }

    /// x⁴+y⁴−z⁴, one oval.
    pub fn one_oval() -> TernaryQuartic {
        TernaryQuartic::from_i64([1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, -1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_roundtrip() {
        let e = curves::edge();
        let line = e.to_input_line();
        let back = TernaryQuartic::parse(&line).unwrap();
        assert_eq!(e, back);
    }

    #[test]
    fn edge_evaluates() {
        let e = curves::edge();
        let q = |n: i64| BigRational::from_integer(n.into());
        // E(1,0,0) = 25
        assert_eq!(e.eval_q(&q(1), &q(0), &q(0)), q(25));
        // E(1,1,1) = 75 - 102 = -27
        assert_eq!(e.eval_q(&q(1), &q(1), &q(1)), q(-27));
    }

    #[test]
    fn transform_preserves_degree() {
        let e = curves::edge();
        let q = |n: i64| BigRational::from_integer(n.into());
        let u = [
            [q(1), q(1), q(0)],
            [q(0), q(1), q(0)],
            [q(0), q(2), q(1)],
        ];
        let t = e.transform(&u).unwrap();
        assert!(t.to_qpoly().is_homogeneous());
        assert_eq!(t.to_qpoly().total_degree(), 4);
        // evaluation consistency: (f o U)(p) = f(U p)
        let p = [q(1), q(2), q(-1)];
        let up = [
            &p[0] + &p[1],
            p[1].clone(),
            &(&p[1] * &q(2)) + &p[2],
        ];
        assert_eq!(
            t.eval_q(&p[0], &p[1], &p[2]),
            e.eval_q(&up[0], &up[1], &up[2])
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert!(TernaryQuartic::parse("quartic: 1 2 3").is_err());
        assert!(TernaryQuartic::parse("quartic: 1 1 1 1 1 1 1 1 1 1 1 1 1 1 x").is_err());
    }
}
