//! Univariate complex root finding: Aberth–Ehrlich simultaneous
//! iteration with residual certificates and cluster merging.

use crate::error::Error;
use crate::num::{Cplx, Real, ToleranceProfile};
use crate::poly::CPoly;
use crate::Result;

/// Horner evaluation of p and p' at x; coefficients ascending.
fn horner2(coeffs: &[Cplx], x: &Cplx) -> (Cplx, Cplx) {
    let prec = x.prec();
    let mut p = Cplx::zero(prec);
    let mut dp = Cplx::zero(prec);
    for c in coeffs.iter().rev() {
        dp = &(&dp * x) + &p;
        p = &(&p * x) + c;
    }
    (p, dp)
}

/// All complex roots of the polynomial with the given ascending
/// coefficients, counted with multiplicity via cluster merging.
pub fn roots_univariate(poly: &CPoly, profile: &ToleranceProfile) -> Result<Vec<(Cplx, usize)>> {
    let var = (0..poly.nvars)
        .find(|&v| poly.deg_in(v) > 0)
        .ok_or_else(|| Error::InvalidInput("constant polynomial has no roots".into()))?;
    for v in 0..poly.nvars {
        if v != var && poly.deg_in(v) > 0 {
            return Err(Error::InvalidInput("polynomial is not univariate".into()));
        }
    }
    let coeffs = poly.univariate_coeffs(var);
    roots_from_coeffs(&coeffs, profile)
}

pub fn roots_from_coeffs(
    coeffs: &[Cplx],
    profile: &ToleranceProfile,
) -> Result<Vec<(Cplx, usize)>> {
    let prec = profile.bits();
    let norm = coeffs
        .iter()
        .fold(Real::zero(prec), |m, c| m.max(&c.abs()));
    if norm.is_zero() {
        return Err(Error::InvalidInput("zero polynomial".into()));
    }
    // trim numerically-insignificant leading coefficients
    let trim = &norm * &Real::exp2(-(prec as i64) + 24, prec);
    let mut deg = coeffs.len() - 1;
    while deg > 0 && coeffs[deg].abs() <= trim {
        deg -= 1;
    }
    if deg == 0 {
        return Err(Error::InvalidInput(
            "leading coefficient vanishes at working precision".into(),
        ));
    }
    // strip zero roots
    let mut zero_mult = 0usize;
    let mut lo = 0usize;
    while lo < deg && coeffs[lo].abs() <= trim {
        zero_mult += 1;
        lo += 1;
    }
    let work: Vec<Cplx> = coeffs[lo..=deg]
        .iter()
        .map(|c| c.with_prec(prec))
        .collect();
    let n = work.len() - 1;

    let mut found: Vec<Cplx> = Vec::new();
    if n > 0 {
        found = aberth(&work, profile)?;
    }
    let mut clustered = cluster(&found, &profile.cluster_eps());
    if zero_mult > 0 {
        clustered.push((Cplx::zero(prec), zero_mult));
    }
    Ok(clustered)
}

fn aberth(coeffs: &[Cplx], profile: &ToleranceProfile) -> Result<Vec<Cplx>> {
    let prec = profile.bits();
    let n = coeffs.len() - 1;
    let norm = coeffs
        .iter()
        .fold(Real::zero(prec), |m, c| m.max(&c.abs()));
    let mut xs = initial_guesses(coeffs, prec);

    // Iterate to step stagnation rather than stopping at the residual
    // threshold: near a multiple root the residual certifies long before
    // the iterates reach their attainable accuracy 2^(-p/m), and cluster
    // detection needs that final accuracy. Residuals are checked once at
    // the end as the acceptance certificate.
    let eps_res = profile.eps_residual();
    let step_stop = Real::exp2(-(prec as i64) + 8, prec);
    let max_sweeps = 60 + 4 * n;
    let mut done = vec![false; n];
    for _sweep in 0..max_sweeps {
        if done.iter().all(|&d| d) {
            break;
        }
        for i in 0..n {
            if done[i] {
                continue;
            }
            let (p, dp) = horner2(coeffs, &xs[i]);
            if p.is_zero() {
                done[i] = true;
                continue;
            }
            if dp.is_zero() {
                // nudge off a critical point
                xs[i] = &xs[i] + &Cplx::from_f64(1e-3, 1.3e-3, prec);
                continue;
            }
            let newton = &p / &dp;
            let mut s = Cplx::zero(prec);
            for j in 0..n {
                if j != i {
                    let d = &xs[i] - &xs[j];
                    if !d.is_zero() {
                        s = &s + &d.recip();
                    }
                }
            }
            let denom = &Cplx::one(prec) - &(&newton * &s);
            let w = if denom.is_zero() { newton } else { &newton / &denom };
            let step = w.abs();
            xs[i] = &xs[i] - &w;
            if step < &step_stop * &Real::one(prec).max(&xs[i].abs()) {
                done[i] = true;
            }
        }
    }
    // acceptance certificate per root
    for x in xs.iter() {
        let (p, _) = horner2(coeffs, x);
        let growth = Real::one(prec).max(&x.abs()).powi(n as u32);
        if p.abs() >= &(&eps_res * &norm) * &growth {
            return Err(Error::NonConvergence { candidates: xs.clone() });
        }
    }
    Ok(xs)
}

/// Starting points on annuli whose radii come from the upper convex
/// hull of (k, log2 |c_k|) — Bini's initialization. This respects the
/// actual root moduli, so wildly scaled polynomials (e.g. integer
/// resultants) converge in a bounded number of sweeps.
fn initial_guesses(coeffs: &[Cplx], prec: u32) -> Vec<Cplx> {
    let n = coeffs.len() - 1;
    let logs: Vec<Option<f64>> = coeffs
        .iter()
        .map(|c| {
            let a = c.abs();
            a.exponent().map(|e| {
                // refine the dyadic exponent with the leading bits
                let lead = a.to_f64();
                if lead.is_finite() && lead > 0.0 {
                    lead.log2()
                } else {
                    e as f64
                }
            })
        })
        .collect();
    // upper convex hull of the exponent profile
    let pts: Vec<(usize, f64)> = logs
        .iter()
        .enumerate()
        .filter_map(|(k, l)| l.map(|v| (k, v)))
        .collect();
    let mut hull: Vec<(usize, f64)> = Vec::new();
    for &(k, y) in &pts {
        while hull.len() >= 2 {
            let (k1, y1) = hull[hull.len() - 2];
            let (k2, y2) = hull[hull.len() - 1];
            // keep the hull upper-convex
            let cross = (k2 as f64 - k1 as f64) * (y - y1) - (k as f64 - k1 as f64) * (y2 - y1);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push((k, y));
    }
    let mut out = Vec::with_capacity(n);
    let mut placed = 0usize;
    for w in hull.windows(2) {
        let (k1, y1) = w[0];
        let (k2, y2) = w[1];
        let m = k2 - k1;
        let log_rho = (y1 - y2) / (m as f64);
        // clamp to keep within f64 exponent range, lift exactly in Real
        let e_int = log_rho.floor().clamp(-20000.0, 20000.0) as i64;
        let frac = (log_rho - e_int as f64).exp2();
        let rho = &Real::exp2(e_int, prec) * &Real::from_f64(frac, prec);
        for j in 0..m {
            let theta = 2.0 * std::f64::consts::PI * (j as f64) / (m as f64)
                + 0.43
                + (placed as f64) * 0.377;
            out.push(Cplx::from_f64(theta.cos(), theta.sin(), prec).scale(&rho));
            placed += 1;
        }
    }
    while out.len() < n {
        let theta = 0.91 * (out.len() as f64);
        out.push(Cplx::from_f64(theta.cos(), theta.sin(), prec));
    }
    out.truncate(n);
    out
}

/// Merge points within the clustering radius (relative to magnitude)
/// into (representative, multiplicity) pairs; the representative is the
/// cluster mean.
pub fn cluster(points: &[Cplx], radius: &Real) -> Vec<(Cplx, usize)> {
    let n = points.len();
    if n == 0 {
        return Vec::new();
    }
    let prec = points[0].prec();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    for i in 0..n {
        for j in i + 1..n {
            let scale = Real::one(prec)
                .max(&points[i].abs())
                .max(&points[j].abs());
            if (&points[i] - &points[j]).abs() <= &scale * radius {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..n {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    groups
        .values()
        .map(|idxs| {
            let mut sum = Cplx::zero(prec);
            for &i in idxs {
                sum = &sum + &points[i];
            }
            let m = idxs.len();
            let rep = sum.scale(&Real::from_i64(m as i64, prec).recip());
            (rep, m)
        })
        .collect()
}

/// Newton-polish a simple root of the polynomial to working precision.
pub fn polish_root(coeffs: &[Cplx], x0: &Cplx, prec: u32) -> Cplx {
    let mut x = x0.with_prec(prec);
    for _ in 0..prec.ilog2() + 8 {
        let (p, dp) = horner2(coeffs, &x);
        if dp.is_zero() {
            break;
        }
        let step = &p / &dp;
        x = &x - &step;
        if step.abs() < &Real::exp2(-(prec as i64) + 4, prec) * &Real::one(prec).max(&x.abs()) {
            break;
        }
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile() -> ToleranceProfile {
        ToleranceProfile::new(256)
    }

    fn c64(re: f64, im: f64) -> Cplx {
        Cplx::from_f64(re, im, 256)
    }

    #[test]
    fn quadratic_i() {
        // x^2 + 1 -> {i, -i}
        let coeffs = vec![c64(1.0, 0.0), c64(0.0, 0.0), c64(1.0, 0.0)];
        let roots = roots_from_coeffs(&coeffs, &profile()).unwrap();
        assert_eq!(roots.len(), 2);
        for (r, m) in &roots {
            assert_eq!(*m, 1);
            assert!((r.im.abs().to_f64() - 1.0).abs() < 1e-60);
            assert!(r.re.abs().to_f64() < 1e-60);
        }
    }

    #[test]
    fn triple_root() {
        // (x-2)^3 = x^3 - 6x^2 + 12x - 8
        let coeffs = vec![c64(-8.0, 0.0), c64(12.0, 0.0), c64(-6.0, 0.0), c64(1.0, 0.0)];
        let roots = roots_from_coeffs(&coeffs, &profile()).unwrap();
        assert_eq!(roots.len(), 1);
        let (r, m) = &roots[0];
        assert_eq!(*m, 3);
        assert!((r.re.to_f64() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn edge_binary_quartic() {
        // x^4 - (34/25) x^2 + 1: four simple roots closed under negation
        // and conjugation
        let coeffs = vec![
            c64(1.0, 0.0),
            c64(0.0, 0.0),
            c64(-34.0 / 25.0, 0.0),
            c64(0.0, 0.0),
            c64(1.0, 0.0),
        ];
        let roots = roots_from_coeffs(&coeffs, &profile()).unwrap();
        assert_eq!(roots.len(), 4);
        let pts: Vec<Cplx> = roots.iter().map(|(r, _)| r.clone()).collect();
        let close = |a: &Cplx, b: &Cplx| (a - b).abs() < Real::exp2(-100, 256);
        for p in &pts {
            assert!(pts.iter().any(|q| close(&(-p), q)));
            assert!(pts.iter().any(|q| close(&p.conj(), q)));
            // |root| = 1 since the polynomial is self-reciprocal
            assert!((p.abs().to_f64() - 1.0).abs() < 1e-40);
        }
    }

    #[test]
    fn zero_roots_reported() {
        // x^2 (x - 1)
        let coeffs = vec![c64(0.0, 0.0), c64(0.0, 0.0), c64(-1.0, 0.0), c64(1.0, 0.0)];
        let roots = roots_from_coeffs(&coeffs, &profile()).unwrap();
        let mut mults: Vec<usize> = roots.iter().map(|(_, m)| *m).collect();
        mults.sort();
        assert_eq!(mults, vec![1, 2]);
    }

    #[test]
    fn degree_count_invariant() {
        // random-ish degree 7 polynomial: roots counted with multiplicity = 7
        let coeffs: Vec<Cplx> = (0..8)
            .map(|k| c64(((k * 37 + 11) % 19) as f64 - 9.0, ((k * 53 + 7) % 17) as f64 - 8.0))
            .collect();
        let roots = roots_from_coeffs(&coeffs, &profile()).unwrap();
        let total: usize = roots.iter().map(|(_, m)| m).sum();
        assert_eq!(total, 7);
    }
}
