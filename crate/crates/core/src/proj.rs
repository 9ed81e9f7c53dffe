//! Projective-point utilities shared by the geometry modules:
//! canonical normalization, reality detection, conjugation matching.

use crate::num::{Cplx, Real};

/// Canonical representative of a projective point: the coordinate of
/// largest modulus is rescaled to 1 (ties broken by lowest index).
pub fn normalize(v: &[Cplx]) -> Vec<Cplx> {
    let prec = v.iter().map(|z| z.prec()).min().unwrap_or(64);
    let mut best = 0usize;
    let mut best_abs = v[0].abs();
    for (i, z) in v.iter().enumerate().skip(1) {
        let a = z.abs();
        if a > best_abs {
            best_abs = a;
            best = i;
        }
    }
    if best_abs.is_zero() {
        return v.to_vec();
    }
    let inv = v[best].recip();
    let mut out: Vec<Cplx> = v.iter().map(|z| z * &inv).collect();
    out[best] = Cplx::one(prec);
    out
}

/// Chordal-style distance between canonical representatives.
pub fn distance(a: &[Cplx], b: &[Cplx]) -> Real {
    let prec = a.iter().chain(b).map(|z| z.prec()).min().unwrap_or(64);
    let mut acc = Real::zero(prec);
    for (x, y) in a.iter().zip(b) {
        acc = acc.max(&(x - y).abs());
    }
    acc
}

/// Distance between projective points irrespective of representatives.
pub fn proj_distance(a: &[Cplx], b: &[Cplx]) -> Real {
    distance(&normalize(a), &normalize(b))
}

pub fn is_real_within(v: &[Cplx], tol: &Real) -> bool {
    v.iter().all(|z| z.im.abs() <= *tol)
}

pub fn conj(v: &[Cplx]) -> Vec<Cplx> {
    v.iter().map(|z| z.conj()).collect()
}

/// Zero out imaginary parts (after a reality check has passed).
pub fn realify(v: &[Cplx]) -> Vec<Cplx> {
    let prec = v.iter().map(|z| z.prec()).min().unwrap_or(64);
    v.iter()
        .map(|z| Cplx::new(z.re.clone(), Real::zero(prec)))
        .collect()
}

/// Index of the entry of `set` matching `target` (projectively) within
/// `tol`, if any.
pub fn find_match(target: &[Cplx], set: &[Vec<Cplx>], tol: &Real) -> Option<usize> {
    let t = normalize(target);
    set.iter()
        .position(|s| distance(&t, &normalize(s)) <= *tol)
}

/// Deterministic sort key: lexicographic over (re, im) pairs.
pub fn lex_cmp(a: &[Cplx], b: &[Cplx]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.re.partial_cmp(&y.re).unwrap() {
            std::cmp::Ordering::Equal => {}
            o => return o,
        }
        match x.im.partial_cmp(&y.im).unwrap() {
            std::cmp::Ordering::Equal => {}
            o => return o,
        }
    }
    std::cmp::Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_is_canonical() {
        let prec = 128;
        let v = vec![
            Cplx::from_f64(2.0, 0.0, prec),
            Cplx::from_f64(4.0, 0.0, prec),
            Cplx::from_f64(0.0, 0.0, prec),
        ];
        let w = vec![
            Cplx::from_f64(-1.0, 0.0, prec),
            Cplx::from_f64(-2.0, 0.0, prec),
            Cplx::from_f64(0.0, 0.0, prec),
        ];
        assert!(distance(&normalize(&v), &normalize(&w)) < Real::exp2(-100, prec));
        // tie broken by lowest index
        let t = vec![Cplx::from_f64(3.0, 0.0, prec), Cplx::from_f64(-3.0, 0.0, prec)];
        let n = normalize(&t);
        assert!((n[0].re.to_f64() - 1.0).abs() < 1e-15);
    }
}
