use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::linalg::CMat;
use crate::num::{Cplx, Real};
use crate::Result;

use super::resultant::rational_det;
use super::{CPoly, QPoly};

/// Monomials of total degree t in three variables, lexicographic.
fn monomials_deg(t: u16) -> Vec<[u16; 3]> {
    let mut out = Vec::new();
    for a in (0..=t).rev() {
        for b in (0..=(t - a)).rev() {
            out.push([a, b, t - a - b]);
        }
    }
    out
}

struct MacaulayShape {
    t: u16,
    cols: Vec<[u16; 3]>,
    /// per row: (which form, multiplier monomial)
    rows: Vec<(usize, [u16; 3])>,
    /// indices of the non-reduced monomials (>= 2 exponents >= d)
    minor: Vec<usize>,
}

fn macaulay_shape(d: u16) -> MacaulayShape {
    let t = 3 * d - 2;
    let cols = monomials_deg(t);
    let mut rows = Vec::with_capacity(cols.len());
    let mut minor = Vec::new();
    for (idx, m) in cols.iter().enumerate() {
        let which = if m[0] >= d {
            0
        } else if m[1] >= d {
            1
        } else {
            2
        };
        let mut mult = *m;
        mult[which] -= d;
        rows.push((which, mult));
        let big = (0..3).filter(|&i| m[i] >= d).count();
        if big >= 2 {
            minor.push(idx);
        }
    }
    MacaulayShape { t, cols, rows, minor }
}

fn col_index(cols: &[[u16; 3]], m: &[u16; 3]) -> usize {
    cols.iter().position(|c| c == m).expect("monomial in range")
}

/// Macaulay resultant of three ternary forms of equal degree `d`, exact
/// over the rationals. The normalization is the classical one
/// det(M)/det(M'); when the minor degenerates the forms are put through
/// a random unimodular change of coordinates and the result corrected
/// by the known transformation law.
pub fn macaulay_ternary(f: [&QPoly; 3], d: u16) -> Result<BigRational> {
    for p in &f {
        if p.nvars != 3 {
            return Err(Error::InvalidInput("macaulay_ternary expects 3 variables".into()));
        }
        if !p.is_zero() && p.total_degree() != d as i64 {
            return Err(Error::InvalidInput(format!(
                "form degree {} does not match {}",
                p.total_degree(),
                d
            )));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d6163);
    for attempt in 0..8 {
        let (g, detu) = if attempt == 0 {
            ([f[0].clone(), f[1].clone(), f[2].clone()], BigRational::one())
        } else {
            random_transform(&f, &mut rng)
        };
        if let Some(res) = try_macaulay(&g, d) {
            // Res(F o U) = Res(F) * det(U)^(d^3)
            let corr = pow_rat(&detu, (d as u32).pow(3));
            return Ok(res / corr);
        }
    }
    Err(Error::PrecisionExhausted(
        "macaulay minor degenerate in all attempted frames".into(),
    ))
}

fn pow_rat(q: &BigRational, e: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= q;
    }
    acc
}

fn random_transform(f: &[&QPoly; 3], rng: &mut ChaCha8Rng) -> ([QPoly; 3], BigRational) {
    // small random integer unimodular-ish matrix with nonzero determinant
    loop {
        let u: Vec<Vec<BigRational>> = (0..3)
            .map(|_| {
                (0..3)
                    .map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-3i64..=3))))
                    .collect()
            })
            .collect();
        let det = rational_det(u.clone());
        if det.is_zero() {
            continue;
        }
        let transformed = |p: &QPoly| -> QPoly {
            // substitute x_i -> sum_j u[i][j] x_j
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
            for (e, c) in &p.terms {
                let mut term = QPoly::constant(3, c.clone());
                for (i, &k) in e.iter().enumerate() {
                    for _ in 0..k {
                        term = term.mul(&vars[i]);
                    }
                }
                out = out.add(&term);
            }
            out
        };
        return (
            [transformed(f[0]), transformed(f[1]), transformed(f[2])],
            det,
        );
    }
}

fn try_macaulay(f: &[QPoly; 3], d: u16) -> Option<BigRational> {
    let shape = macaulay_shape(d);
    let n = shape.cols.len();
    let mut mat = vec![vec![BigRational::zero(); n]; n];
    for (r, (which, mult)) in shape.rows.iter().enumerate() {
        for (e, c) in &f[*which].terms {
            let m = [mult[0] + e[0], mult[1] + e[1], mult[2] + e[2]];
            debug_assert_eq!((m[0] + m[1] + m[2]), shape.t);
            let j = col_index(&shape.cols, &m);
            mat[r][j] = &mat[r][j] + c;
        }
    }
    let minor_mat: Vec<Vec<BigRational>> = shape
        .minor
        .iter()
        .map(|&i| shape.minor.iter().map(|&j| mat[i][j].clone()).collect())
        .collect();
    let dm = rational_det(minor_mat);
    if dm.is_zero() {
        return None;
    }
    let dfull = rational_det(mat);
    Some(dfull / dm)
}

/// Numeric Macaulay resultant of three complex ternary forms of degree `d`.
pub fn macaulay_ternary_cplx(f: [&CPoly; 3], d: u16, prec: u32) -> Result<Cplx> {
    let shape = macaulay_shape(d);
    let n = shape.cols.len();
    let mut mat = CMat::zeros(n, n, prec);
    for (r, (which, mult)) in shape.rows.iter().enumerate() {
        for (e, c) in &f[*which].terms {
            let m = [mult[0] + e[0], mult[1] + e[1], mult[2] + e[2]];
            let j = col_index(&shape.cols, &m);
            mat[(r, j)] = &mat[(r, j)] + &c.with_prec(prec);
        }
    }
    let minor = CMat::from_fn(shape.minor.len(), shape.minor.len(), |i, j| {
        mat[(shape.minor[i], shape.minor[j])].clone()
    });
    let dm = minor.det();
    let scale = mat.sup_norm().powi(shape.minor.len() as u32);
    if dm.abs() <= &scale * &Real::exp2(-(prec as i64) / 2, prec) {
        return Err(Error::PrecisionExhausted(
            "macaulay minor numerically singular; transform the forms first".into(),
        ));
    }
    let dfull = mat.det();
    Ok(&dfull / &dm)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn mono(e: [u16; 3], c: i64) -> QPoly {
        QPoly::monomial(3, &e, q(c))
    }

    #[test]
    fn quadrics_without_common_zero() {
        // x^2, y^2, z^2: resultant nonzero
        let f1 = mono([2, 0, 0], 1);
        let f2 = mono([0, 2, 0], 1);
        let f3 = mono([0, 0, 2], 1);
        let r = macaulay_ternary([&f1, &f2, &f3], 2).unwrap();
        assert!(!r.is_zero());
    }

    #[test]
    fn quadrics_with_common_zeros() {
        // xy, xz, yz share the coordinate points
        let f1 = mono([1, 1, 0], 1);
        let f2 = mono([1, 0, 1], 1);
        let f3 = mono([0, 1, 1], 1);
        let r = macaulay_ternary([&f1, &f2, &f3], 2).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn cubics_of_fermat_partials() {
        // partials of x^4+y^4+z^4 are 4x^3, 4y^3, 4z^3: no common zero
        let f1 = mono([3, 0, 0], 4);
        let f2 = mono([0, 3, 0], 4);
        let f3 = mono([0, 0, 3], 4);
        let r = macaulay_ternary([&f1, &f2, &f3], 3).unwrap();
        assert!(!r.is_zero());
    }

    #[test]
    fn cubics_sharing_a_zero() {
        // 4x^3, 4y^3, 0*... use partials of x^4 + y^4 (singular at (0:0:1))
        let f1 = mono([3, 0, 0], 4);
        let f2 = mono([0, 3, 0], 4);
        let f3 = QPoly::new(3);
        let r = macaulay_ternary([&f1, &f2, &f3], 3).unwrap();
        assert!(r.is_zero());
    }
}
