//! The 28 bitangents of a smooth quartic.
//!
//! A line ℓ is bitangent to f when the restriction of f to ℓ is the
//! square of a binary quadratic. Working chart by chart, the two
//! perfect-square conditions in the line coefficients are eliminated
//! exactly over Q by a Sylvester resultant; the candidate roots are then
//! Newton-refined on the full square system in (line, quadratic) and
//! accepted only with a perfect-square residual certificate.

use num_rational::BigRational;

use crate::error::Error;
use crate::linalg::CMat;
use crate::num::{Cplx, Real, ToleranceProfile};
use crate::poly::{resultant_univariate, CPoly, QPoly};
use crate::proj;
use crate::quartic::TernaryQuartic;
use crate::roots::roots_from_coeffs;
use crate::Result;

/// A certified bitangent line with its contact data.
#[derive(Clone, Debug)]
pub struct Bitangent {
    /// Canonically normalized line coefficients (α, β, γ).
    pub line: [Cplx; 3],
    pub is_real: bool,
    /// Contact points in P², equal for a hyperflex.
    pub contact_points: [[Cplx; 3]; 2],
    pub is_hyperflex: bool,
    /// Affine chart that solved the line (0: γ=1, 1: β=1, 2: α=1).
    pub chart: usize,
    /// Perfect-square residual, relative to the restricted form.
    pub residual: Real,
}

impl Bitangent {
    pub fn line_vec(&self) -> Vec<Cplx> {
        self.line.to_vec()
    }
}

/// Restriction of the quartic to the line through `u` and `v`:
/// the binary quartic q(s,t) = f(s·u + t·v), entry k holding the
/// coefficient of s^(4-k) t^k.
pub fn restrict_to_line(f: &CPoly, u: &[Cplx], v: &[Cplx]) -> Vec<Cplx> {
    let prec = u.iter().chain(v).map(|z| z.prec()).min().unwrap_or(64);
    let mut q = vec![Cplx::zero(prec); 5];
    for (e, c) in &f.terms {
        // expand prod_i (u_i s + v_i t)^{e_i}
        let mut poly = vec![c.with_prec(prec)];
        for i in 0..3 {
            for _ in 0..e[i] {
                let mut next = vec![Cplx::zero(prec); poly.len() + 1];
                for (k, a) in poly.iter().enumerate() {
                    next[k] = &next[k] + &(a * &u[i]);
                    next[k + 1] = &next[k + 1] + &(a * &v[i]);
                }
                poly = next;
            }
        }
        for (k, a) in poly.iter().enumerate() {
            q[k] = &q[k] + a;
        }
    }
    q
}

/// Two points spanning the projective line with the given coefficients.
pub fn line_basis(line: &[Cplx; 3]) -> ([Cplx; 3], [Cplx; 3]) {
    let prec = line.iter().map(|z| z.prec()).min().unwrap_or(64);
    let a = |i: usize| line[i].clone();
    let zero = || Cplx::zero(prec);
    let abs: Vec<Real> = line.iter().map(|z| z.abs()).collect();
    if abs[2] >= abs[0] && abs[2] >= abs[1] {
        ([a(2), zero(), -&a(0)], [zero(), a(2), -&a(1)])
    } else if abs[1] >= abs[0] {
        ([a(1), -&a(0), zero()], [zero(), -&a(2), a(1)])
    } else {
        ([-&a(1), a(0), zero()], [-&a(2), zero(), a(0)])
    }
}

/// Fit a quadratic g with q ≈ g² and return (κ, relative residual).
pub fn perfect_square_fit(q: &[Cplx]) -> ([Cplx; 3], Real) {
    let prec = q.iter().map(|z| z.prec()).min().unwrap_or(64);
    let norm = q.iter().fold(Real::zero(prec), |m, c| m.max(&c.abs()));
    if norm.is_zero() {
        return (
            [Cplx::zero(prec), Cplx::zero(prec), Cplx::zero(prec)],
            Real::zero(prec),
        );
    }
    let two = Cplx::from_i64(2, prec);
    let mut candidates: Vec<[Cplx; 3]> = Vec::new();
    if !q[0].is_zero() {
        let k0 = q[0].sqrt();
        let k1 = &(&q[1] / &k0) / &two;
        let k2 = &(&(&q[2] - &(&k1 * &k1)) / &k0) / &two;
        candidates.push([k0, k1, k2]);
    }
    if !q[4].is_zero() {
        let k2 = q[4].sqrt();
        let k1 = &(&q[3] / &k2) / &two;
        let k0 = &(&(&q[2] - &(&k1 * &k1)) / &k2) / &two;
        candidates.push([k0, k1, k2]);
    }
    if candidates.is_empty() {
        let k1 = q[2].sqrt();
        candidates.push([Cplx::zero(prec), k1, Cplx::zero(prec)]);
    }
    let mut best: Option<([Cplx; 3], Real)> = None;
    for k in candidates {
        let sq = [
            &k[0] * &k[0],
            &(&k[0] * &k[1]) * &two,
            &(&k[1] * &k[1]) + &(&(&k[0] * &k[2]) * &two),
            &(&k[1] * &k[2]) * &two,
            &k[2] * &k[2],
        ];
        let mut res = Real::zero(prec);
        for i in 0..5 {
            res = res.max(&(&q[i] - &sq[i]).abs());
        }
        let rel = &res / &norm;
        match &best {
            Some((_, b)) if *b <= rel => {}
            _ => best = Some((k, rel)),
        }
    }
    best.unwrap()
}

/// Roots of a binary form (entry k = coefficient of s^(deg-k) t^k),
/// as projective points (s : t) including roots at infinity.
pub fn binary_form_roots(
    coeffs: &[Cplx],
    profile: &ToleranceProfile,
) -> Result<Vec<(Cplx, Cplx, usize)>> {
    let prec = profile.bits();
    let deg = coeffs.len() - 1;
    let norm = coeffs.iter().fold(Real::zero(prec), |m, c| m.max(&c.abs()));
    if norm.is_zero() {
        return Err(Error::InvalidInput("zero binary form".into()));
    }
    let trim = &norm * &Real::exp2(-(prec as i64) + 24, prec);
    // chart t = 1: coefficients of s ascending
    let sc: Vec<Cplx> = coeffs.iter().rev().cloned().collect();
    let mut top = deg;
    while top > 0 && sc[top].abs() <= trim {
        top -= 1;
    }
    let inf_mult = deg - top;
    let mut out = Vec::new();
    if top > 0 {
        let finite = roots_from_coeffs(&sc[..=top], profile)?;
        for (r, m) in finite {
            out.push((r, Cplx::one(prec), m));
        }
    }
    if inf_mult > 0 {
        out.push((Cplx::one(prec), Cplx::zero(prec), inf_mult));
    }
    Ok(out)
}

/// Restriction coefficients c_i(α, β) per chart, exact over Q.
///
/// Chart 0: ℓ = αx + βy + z, points (s, t, -αs - βt).
/// Chart 1: ℓ = αx + y, points (s, -αs, t).
/// Chart 2: ℓ = x, points (0, s, t).
fn chart_coefficients(f: &TernaryQuartic, chart: usize) -> [QPoly; 5] {
    let mut c: [QPoly; 5] = std::array::from_fn(|_| QPoly::new(2));
    let fq = f.to_qpoly();
    for (e, coef) in &fq.terms {
        let (a, b, k) = (e[0] as usize, e[1] as usize, e[2] as usize);
        match chart {
            0 => {
                let mut binom = BigRational::from_integer(1.into());
                for j in 0..=k {
                    if j > 0 {
                        binom = binom * BigRational::from_integer(((k - j + 1) as i64).into())
                            / BigRational::from_integer((j as i64).into());
                    }
                    let sign: i64 = if k % 2 == 0 { 1 } else { -1 };
                    let coeff = coef * &binom * BigRational::from_integer(sign.into());
                    let t_deg = b + j;
                    c[t_deg].add_term(&[(k - j) as u16, j as u16], &coeff);
                }
            }
            1 => {
                let sign: i64 = if b % 2 == 0 { 1 } else { -1 };
                let coeff = coef * BigRational::from_integer(sign.into());
                c[k].add_term(&[b as u16, 0], &coeff);
            }
            _ => {
                if a == 0 {
                    c[k].add_term(&[0, 0], coef);
                }
            }
        }
    }
    c
}

/// The two perfect-square conditions obtained by eliminating κ.
fn square_conditions(c: &[QPoly; 5]) -> (QPoly, QPoly) {
    let cnst = |n: i64| QPoly::constant(2, BigRational::from_integer(n.into()));
    let d = cnst(4).mul(&c[0]).mul(&c[2]).sub(&c[1].mul(&c[1]));
    let p1 = c[1].mul(&d).sub(&cnst(8).mul(&c[0]).mul(&c[0]).mul(&c[3]));
    let p2 = d
        .mul(&d)
        .sub(&cnst(64).mul(&c[0]).mul(&c[0]).mul(&c[0]).mul(&c[4]));
    (p1, p2)
}

struct NewtonSetup {
    c: [CPoly; 5],
    dca: [CPoly; 5],
    dcb: [CPoly; 5],
}

impl NewtonSetup {
    fn new(c: &[QPoly; 5], prec: u32) -> Self {
        let conv: [CPoly; 5] = std::array::from_fn(|i| c[i].to_cpoly(prec));
        let dca: [CPoly; 5] = std::array::from_fn(|i| conv[i].partial(0));
        let dcb: [CPoly; 5] = std::array::from_fn(|i| conv[i].partial(1));
        NewtonSetup { c: conv, dca, dcb }
    }

    fn eval_c(&self, ab: &[Cplx; 2]) -> [Cplx; 5] {
        std::array::from_fn(|i| self.c[i].eval(&ab[..]))
    }
}

/// Full square system on chart 0: unknowns (α, β, κ0, κ1, κ2).
fn newton_chart0(
    setup: &NewtonSetup,
    seed: &[Cplx; 2],
    kappa: &[Cplx; 3],
    tol: &Real,
    prec: u32,
) -> Result<Vec<Cplx>> {
    let x0 = vec![
        seed[0].clone(),
        seed[1].clone(),
        kappa[0].clone(),
        kappa[1].clone(),
        kappa[2].clone(),
    ];
    let two = Cplx::from_i64(2, prec);
    let f = {
        let two = two.clone();
        move |x: &[Cplx]| -> Vec<Cplx> {
            let ab = [x[0].clone(), x[1].clone()];
            let c: [Cplx; 5] = std::array::from_fn(|i| setup.c[i].eval(&ab[..]));
            let (k0, k1, k2) = (&x[2], &x[3], &x[4]);
            vec![
                &c[0] - &(k0 * k0),
                &c[1] - &(&(k0 * k1) * &two),
                &(&c[2] - &(k1 * k1)) - &(&(k0 * k2) * &two),
                &c[3] - &(&(k1 * k2) * &two),
                &c[4] - &(k2 * k2),
            ]
        }
    };
    let jac = move |x: &[Cplx]| -> CMat {
        let ab = [x[0].clone(), x[1].clone()];
        let da: [Cplx; 5] = std::array::from_fn(|i| setup.dca[i].eval(&ab[..]));
        let db: [Cplx; 5] = std::array::from_fn(|i| setup.dcb[i].eval(&ab[..]));
        let (k0, k1, k2) = (x[2].clone(), x[3].clone(), x[4].clone());
        let z = Cplx::zero(prec);
        let m2 = |a: &Cplx| -> Cplx { -&(a * &two) };
        CMat::from_rows(vec![
            vec![da[0].clone(), db[0].clone(), m2(&k0), z.clone(), z.clone()],
            vec![da[1].clone(), db[1].clone(), m2(&k1), m2(&k0), z.clone()],
            vec![da[2].clone(), db[2].clone(), m2(&k2), m2(&k1), m2(&k0)],
            vec![da[3].clone(), db[3].clone(), z.clone(), m2(&k2), m2(&k1)],
            vec![da[4].clone(), db[4].clone(), z.clone(), z.clone(), m2(&k2)],
        ])
    };
    CMat::newton_solve(&x0, tol, 60, f, jac)
}

/// Chart 1 system: unknowns (α, κ0, κ1, κ2) with one equation dropped.
fn newton_chart1(
    setup: &NewtonSetup,
    seed: &Cplx,
    kappa: &[Cplx; 3],
    drop: usize,
    tol: &Real,
    prec: u32,
) -> Result<Vec<Cplx>> {
    let x0 = vec![
        seed.clone(),
        kappa[0].clone(),
        kappa[1].clone(),
        kappa[2].clone(),
    ];
    let two = Cplx::from_i64(2, prec);
    let f = {
        let two = two.clone();
        move |x: &[Cplx]| -> Vec<Cplx> {
            let ab = [x[0].clone(), Cplx::zero(prec)];
            let c: [Cplx; 5] = std::array::from_fn(|i| setup.c[i].eval(&ab[..]));
            let (k0, k1, k2) = (&x[1], &x[2], &x[3]);
            let mut r = vec![
                &c[0] - &(k0 * k0),
                &c[1] - &(&(k0 * k1) * &two),
                &(&c[2] - &(k1 * k1)) - &(&(k0 * k2) * &two),
                &c[3] - &(&(k1 * k2) * &two),
                &c[4] - &(k2 * k2),
            ];
            r.remove(drop);
            r
        }
    };
    let jac = move |x: &[Cplx]| -> CMat {
        let ab = [x[0].clone(), Cplx::zero(prec)];
        let da: [Cplx; 5] = std::array::from_fn(|i| setup.dca[i].eval(&ab[..]));
        let (k0, k1, k2) = (x[1].clone(), x[2].clone(), x[3].clone());
        let z = Cplx::zero(prec);
        let m2 = |a: &Cplx| -> Cplx { -&(a * &two) };
        let rows = vec![
            vec![da[0].clone(), m2(&k0), z.clone(), z.clone()],
            vec![da[1].clone(), m2(&k1), m2(&k0), z.clone()],
            vec![da[2].clone(), m2(&k2), m2(&k1), m2(&k0)],
            vec![da[3].clone(), z.clone(), m2(&k2), m2(&k1)],
            vec![da[4].clone(), z.clone(), z.clone(), m2(&k2)],
        ];
        CMat::from_rows(
            rows.into_iter()
                .enumerate()
                .filter(|(i, _)| *i != drop)
                .map(|(_, r)| r)
                .collect(),
        )
    };
    CMat::newton_solve(&x0, tol, 60, f, jac)
}

/// One full multi-chart sweep at a fixed precision.
fn attempt(f: &TernaryQuartic, profile: &ToleranceProfile) -> Result<Vec<Bitangent>> {
    let prec = profile.bits();
    let f_norm = f.to_cpoly(prec).sup_norm();
    let eps = profile.eps_residual();
    // accepted candidates: (normalized line, chart, residual)
    let mut found: Vec<(Vec<Cplx>, usize, Real)> = Vec::new();
    let dedup_tol = profile.cluster_eps();

    // chart 0
    {
        let t0 = std::time::Instant::now();
        let c = chart_coefficients(f, 0);
        let (p1, p2) = square_conditions(&c);
        eprintln!("[prof] conditions {:?}", t0.elapsed());
        if p1.is_zero() || p2.is_zero() {
            return Err(Error::PrecisionExhausted(
                "degenerate square conditions".into(),
            ));
        }
        let t0 = std::time::Instant::now();
        let p1 = p1.strip_content_bivariate(1, 0);
        let p2 = p2.strip_content_bivariate(1, 0);
        eprintln!("[prof] content {:?} degs p1=({},{}) p2=({},{})", t0.elapsed(), p1.deg_in(0), p1.deg_in(1), p2.deg_in(0), p2.deg_in(1));
        let t0 = std::time::Instant::now();
        let r = resultant_univariate(&p1, &p2, 1)?;
        eprintln!("[prof] resultant {:?} deg={}", t0.elapsed(), r.deg_in(0));
        if r.is_zero() {
            return Err(Error::PrecisionExhausted("vanishing resultant".into()));
        }
        let t0 = std::time::Instant::now();
        let alpha_roots = crate::roots::roots_univariate(&r.to_cpoly(prec), profile)?;
        eprintln!("[prof] roots {:?} count={}", t0.elapsed(), alpha_roots.len());
        let t0 = std::time::Instant::now();
        let setup = NewtonSetup::new(&c, prec);
        let p1_beta: Vec<CPoly> = p1.to_cpoly(prec).coeffs_wrt(1);
        let p2_beta: Vec<CPoly> = p2.to_cpoly(prec).coeffs_wrt(1);
        let tol = &eps * &f_norm;
        for (alpha, _) in &alpha_roots {
            let pt = [alpha.clone(), Cplx::zero(prec)];
            let p1_at: Vec<Cplx> = p1_beta.iter().map(|cp| cp.eval(&pt[..])).collect();
            let n1 = p1_at.iter().fold(Real::zero(prec), |m, z| m.max(&z.abs()));
            let degenerate_p1 = {
                let scale = Real::one(prec).max(&alpha.abs()).powi(12);
                n1 <= &(&f_norm.powi(3) * &Real::exp2(-(prec as i64) / 3, prec)) * &scale
            };
            let beta_candidates = if degenerate_p1 {
                let p2_at: Vec<Cplx> = p2_beta.iter().map(|cp| cp.eval(&pt[..])).collect();
                roots_from_coeffs(&p2_at, profile)
            } else {
                roots_from_coeffs(&p1_at, profile)
            };
            let Ok(beta_candidates) = beta_candidates else {
                continue;
            };
            for (beta, _) in beta_candidates {
                let ab = [alpha.clone(), beta.clone()];
                let cvals = setup.eval_c(&ab);
                let (kappa, rel0) = perfect_square_fit(&cvals);
                if rel0 > Real::from_f64(1e-3, prec) {
                    continue;
                }
                if let Ok(sol) = newton_chart0(&setup, &ab, &kappa, &tol, prec) {
                    let ab2 = [sol[0].clone(), sol[1].clone()];
                    let cv = setup.eval_c(&ab2);
                    let (_, rel) = perfect_square_fit(&cv);
                    if rel <= eps {
                        let line = proj::normalize(&[
                            sol[0].clone(),
                            sol[1].clone(),
                            Cplx::one(prec),
                        ]);
                        if found
                            .iter()
                            .all(|(l, _, _)| proj::distance(&line, l) > dedup_tol)
                        {
                            found.push((line, 0, rel));
                        }
                    }
                }
            }
        }
        eprintln!("[prof] chart0 newtons {:?} found={}", t0.elapsed(), found.len());
    }

    // chart 1: γ = 0, β = 1
    {
        let c = chart_coefficients(f, 1);
        let (p1, p2) = square_conditions(&c);
        let g = if p1.is_zero() {
            p2.clone()
        } else if p2.is_zero() {
            p1.clone()
        } else {
            QPoly::gcd_univariate(&p1, &p2, 0)
        };
        if g.deg_in(0) >= 1 {
            let setup = NewtonSetup::new(&c, prec);
            let tol = &eps * &f_norm;
            let roots = crate::roots::roots_univariate(&g.to_cpoly(prec), profile)?;
            for (alpha, _) in roots {
                let ab = [alpha.clone(), Cplx::zero(prec)];
                let cvals = setup.eval_c(&ab);
                let (kappa, rel0) = perfect_square_fit(&cvals);
                if rel0 > Real::from_f64(1e-3, prec) {
                    continue;
                }
                for drop in 0..5 {
                    if let Ok(sol) = newton_chart1(&setup, &alpha, &kappa, drop, &tol, prec) {
                        let ab2 = [sol[0].clone(), Cplx::zero(prec)];
                        let cv = setup.eval_c(&ab2);
                        let (_, rel) = perfect_square_fit(&cv);
                        if rel <= eps {
                            let line = proj::normalize(&[
                                sol[0].clone(),
                                Cplx::one(prec),
                                Cplx::zero(prec),
                            ]);
                            if found
                                .iter()
                                .all(|(l, _, _)| proj::distance(&line, l) > dedup_tol)
                            {
                                found.push((line, 1, rel));
                            }
                            break;
                        }
                    }
                }
            }
        }
    }

    // chart 2: the single line x = 0
    {
        let c = chart_coefficients(f, 2);
        let zero2 = [Cplx::zero(prec), Cplx::zero(prec)];
        let cvals: [Cplx; 5] = std::array::from_fn(|i| c[i].to_cpoly(prec).eval(&zero2[..]));
        if cvals.iter().any(|v| !v.is_zero()) {
            let (_, rel) = perfect_square_fit(&cvals);
            if rel <= eps {
                let line = vec![Cplx::one(prec), Cplx::zero(prec), Cplx::zero(prec)];
                if found
                    .iter()
                    .all(|(l, _, _)| proj::distance(&line, l) > dedup_tol)
                {
                    found.push((line, 2, rel));
                }
            }
        }
    }

    if found.len() != 28 {
        return Err(Error::BitangentCount { found: found.len() });
    }

    let fc = f.to_cpoly(prec);
    let real_tol = &eps * &Real::from_i64(4, prec);
    let mut bits: Vec<Bitangent> = Vec::with_capacity(28);
    for (line, chart, residual) in found {
        let arr: [Cplx; 3] = [line[0].clone(), line[1].clone(), line[2].clone()];
        bits.push(finish_bitangent(
            &fc, arr, chart, residual, profile, &real_tol,
        )?);
    }

    // conjugate closure as a set (f has rational coefficients)
    let lines: Vec<Vec<Cplx>> = bits.iter().map(|b| b.line_vec()).collect();
    for b in &bits {
        let cl = proj::conj(&b.line_vec());
        if proj::find_match(&cl, &lines, &dedup_tol).is_none() {
            return Err(Error::PrecisionExhausted(
                "bitangent set is not conjugation-closed".into(),
            ));
        }
    }

    bits.sort_by(|a, b| proj::lex_cmp(&a.line_vec(), &b.line_vec()));
    Ok(bits)
}

fn finish_bitangent(
    fc: &CPoly,
    line: [Cplx; 3],
    chart: usize,
    residual: Real,
    profile: &ToleranceProfile,
    real_tol: &Real,
) -> Result<Bitangent> {
    let (u, v) = line_basis(&line);
    let q = restrict_to_line(fc, &u, &v);
    let (kappa, rel) = perfect_square_fit(&q);
    let res = residual.max(&rel);
    let kap_coeffs = vec![kappa[0].clone(), kappa[1].clone(), kappa[2].clone()];
    let roots = binary_form_roots(&kap_coeffs, profile)?;
    let mut pts: Vec<[Cplx; 3]> = Vec::new();
    for (s, t, m) in &roots {
        let p: Vec<Cplx> = (0..3).map(|i| &(&u[i] * s) + &(&v[i] * t)).collect();
        let pn = proj::normalize(&p);
        for _ in 0..*m {
            pts.push([pn[0].clone(), pn[1].clone(), pn[2].clone()]);
        }
    }
    if pts.len() != 2 {
        return Err(Error::PrecisionExhausted(format!(
            "contact solve returned {} points",
            pts.len()
        )));
    }
    let is_hyperflex =
        proj::distance(&pts[0].to_vec(), &pts[1].to_vec()) <= profile.cluster_eps();
    let is_real = proj::is_real_within(&line, real_tol);
    Ok(Bitangent {
        line,
        is_real,
        contact_points: [pts[0].clone(), pts[1].clone()],
        is_hyperflex,
        chart,
        residual: res,
    })
}

/// Compute the 28 bitangents of a smooth quartic, escalating precision
/// and, as a last resort, moving to a random projective frame.
pub fn compute_bitangents(
    f: &TernaryQuartic,
    profile: &ToleranceProfile,
) -> Result<Vec<Bitangent>> {
    let mut last_err = None;
    for p in profile.ladder() {
        match attempt(f, &p) {
            Ok(b) => return Ok(b),
            Err(e) => last_err = Some(e),
        }
    }
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xb17a);
    for _ in 0..3 {
        let u: [[BigRational; 3]; 3] = std::array::from_fn(|_| {
            std::array::from_fn(|_| BigRational::from_integer(rng.gen_range(-4i64..=4).into()))
        });
        let det = crate::poly::resultant::rational_det(u.iter().map(|r| r.to_vec()).collect());
        if num_traits::Zero::is_zero(&det) {
            continue;
        }
        let Ok(ft) = f.transform(&u) else { continue };
        for p in profile.ladder() {
            if let Ok(bits) = attempt(&ft, &p) {
                return untransform(f, &bits, &u, &p);
            }
        }
    }
    Err(last_err.unwrap_or(Error::BitangentCount { found: 0 }))
}

/// Map bitangents of f∘U back to bitangents of f and re-certify.
fn untransform(
    f: &TernaryQuartic,
    bits: &[Bitangent],
    u: &[[BigRational; 3]; 3],
    profile: &ToleranceProfile,
) -> Result<Vec<Bitangent>> {
    let prec = profile.bits();
    let uc = CMat::from_fn(3, 3, |i, j| Cplx::from_rational(&u[i][j], prec));
    let rtol = Real::exp2(-(prec as i64) + 16, prec);
    let uinv = uc.inverse(&rtol)?;
    let fc = f.to_cpoly(prec);
    let eps = profile.eps_residual();
    let real_tol = &eps * &Real::from_i64(4, prec);
    let mut out: Vec<Bitangent> = Vec::with_capacity(bits.len());
    for b in bits {
        // ℓ'(x') with x' = U⁻¹x gives ℓ(x) = Σ_j (Σ_i ℓ'_i U⁻¹_{ij}) x_j
        let lp = b.line_vec();
        let coeffs: Vec<Cplx> = (0..3)
            .map(|j| {
                let mut acc = Cplx::zero(prec);
                for i in 0..3 {
                    acc = &acc + &(&lp[i] * &uinv[(i, j)]);
                }
                acc
            })
            .collect();
        let n = proj::normalize(&coeffs);
        if out
            .iter()
            .any(|bt| proj::distance(&bt.line_vec(), &n) <= profile.cluster_eps())
        {
            continue;
        }
        let line: [Cplx; 3] = [n[0].clone(), n[1].clone(), n[2].clone()];
        let bt = finish_bitangent(&fc, line, b.chart, Real::zero(prec), profile, &real_tol)?;
        if bt.residual > eps {
            return Err(Error::PrecisionExhausted(
                "transformed bitangent failed re-certification".into(),
            ));
        }
        out.push(bt);
    }
    if out.len() != 28 {
        return Err(Error::BitangentCount { found: out.len() });
    }
    out.sort_by(|a, b| proj::lex_cmp(&a.line_vec(), &b.line_vec()));
    Ok(out)
}

/// Contact points of a certified bitangent, recomputed with residual
/// checks of both the curve equation and the tangency.
pub fn contact_points(
    f: &TernaryQuartic,
    b: &Bitangent,
    profile: &ToleranceProfile,
) -> Result<[[Cplx; 3]; 2]> {
    let prec = profile.bits();
    let fc = f.to_cpoly(prec);
    let eps = profile.eps_residual();
    let real_tol = &eps * &Real::from_i64(4, prec);
    let bt = finish_bitangent(&fc, b.line.clone(), b.chart, Real::zero(prec), profile, &real_tol)?;
    let norm = fc.sup_norm();
    for p in &bt.contact_points {
        let val = fc.eval(&p[..]).abs();
        let scale = p
            .iter()
            .fold(Real::one(prec), |m, z| m.max(&z.abs()))
            .powi(4);
        if val > &(&eps * &norm) * &scale {
            return Err(Error::PrecisionExhausted(
                "contact point fails the curve residual".into(),
            ));
        }
    }
    Ok(bt.contact_points)
}

/// Do the six contact points of three distinct bitangents lie on a conic?
pub fn is_syzygetic_triple(
    b1: &Bitangent,
    b2: &Bitangent,
    b3: &Bitangent,
    profile: &ToleranceProfile,
) -> Result<bool> {
    let all = [b1, b2, b3];
    for (i, bi) in all.iter().enumerate() {
        for bj in all.iter().skip(i + 1) {
            for p in &bi.contact_points {
                for q in &bj.contact_points {
                    if proj::proj_distance(&p[..], &q[..]) <= profile.cluster_eps() {
                        return Err(Error::NonGenericContact);
                    }
                }
            }
        }
    }
    let pts: Vec<&[Cplx; 3]> = all.iter().flat_map(|b| b.contact_points.iter()).collect();
    contacts_on_conic(&pts, profile)
}

/// Rank test on the 6-column matrix of degree-2 monomials at the points.
pub fn contacts_on_conic(pts: &[&[Cplx; 3]], profile: &ToleranceProfile) -> Result<bool> {
    let prec = profile.bits();
    let rows: Vec<Vec<Cplx>> = pts.iter().map(|p| monomials_deg2(p, prec)).collect();
    let m = CMat::from_rows(rows);
    Ok(m.rank_with_tolerance(profile)? <= 5)
}

/// (x², y², z², xy, xz, yz) at a point, scaled to unit sup norm.
pub fn monomials_deg2(p: &[Cplx; 3], prec: u32) -> Vec<Cplx> {
    let v = vec![
        &p[0] * &p[0],
        &p[1] * &p[1],
        &p[2] * &p[2],
        &p[0] * &p[1],
        &p[0] * &p[2],
        &p[1] * &p[2],
    ];
    let norm = v.iter().fold(Real::zero(prec), |m, z| m.max(&z.abs()));
    if norm.is_zero() {
        return v;
    }
    let inv = norm.recip();
    v.into_iter().map(|z| z.scale(&inv)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quartic::curves;

    #[test]
    fn restriction_and_fit() {
        let prec = 256;
        let profile = ToleranceProfile::new(prec);
        let e = curves::edge().to_cpoly(prec);
        // x + 2y is a bitangent of the Edge quartic
        let line = [
            Cplx::from_i64(1, prec),
            Cplx::from_i64(2, prec),
            Cplx::zero(prec),
        ];
        let (u, v) = line_basis(&line);
        let q = restrict_to_line(&e, &u, &v);
        let (_, rel) = perfect_square_fit(&q);
        assert!(rel < profile.eps_residual());
        // a non-bitangent line is far from a perfect square
        let line = [
            Cplx::from_i64(1, prec),
            Cplx::from_i64(1, prec),
            Cplx::zero(prec),
        ];
        let (u, v) = line_basis(&line);
        let q = restrict_to_line(&e, &u, &v);
        let (_, rel) = perfect_square_fit(&q);
        assert!(rel > Real::from_f64(1e-3, prec));
    }

    #[test]
    fn binary_roots_with_infinity() {
        let prec = 256;
        let profile = ToleranceProfile::new(prec);
        // s·t has roots (0:1) and (1:0)
        let coeffs = vec![Cplx::zero(prec), Cplx::one(prec), Cplx::zero(prec)];
        let roots = binary_form_roots(&coeffs, &profile).unwrap();
        assert_eq!(roots.len(), 2);
        let total: usize = roots.iter().map(|(_, _, m)| m).sum();
        assert_eq!(total, 2);
    }

    #[test]
    fn edge_quartic_census() {
        let profile = ToleranceProfile::new(256);
        let bits = compute_bitangents(&curves::edge(), &profile).unwrap();
        assert_eq!(bits.len(), 28);
        assert!(bits.iter().all(|b| b.is_real));
        // the lines of the known representation appear in the set
        let prec = 256;
        let knowns: [[i64; 3]; 6] = [
            [1, 2, 0],
            [2, 0, 1],
            [0, 1, -2],
            [1, -2, 0],
            [0, 1, 2],
            [-2, 0, 1],
        ];
        let lines: Vec<Vec<Cplx>> = bits.iter().map(|b| b.line_vec()).collect();
        for k in knowns {
            let target: Vec<Cplx> = k.iter().map(|&v| Cplx::from_i64(v, prec)).collect();
            assert!(
                proj::find_match(&target, &lines, &Real::exp2(-100, prec)).is_some(),
                "missing known bitangent {k:?}"
            );
        }
    }

    #[test]
    fn vinnikov_reality_count() {
        let profile = ToleranceProfile::new(256);
        let bits = compute_bitangents(&curves::vinnikov_example(), &profile).unwrap();
        assert_eq!(bits.len(), 28);
        assert_eq!(bits.iter().filter(|b| b.is_real).count(), 4);
    }

    #[test]
    fn fermat_reality_count() {
        let profile = ToleranceProfile::new(256);
        let bits = compute_bitangents(&curves::fermat(), &profile).unwrap();
        assert_eq!(bits.len(), 28);
        assert_eq!(bits.iter().filter(|b| b.is_real).count(), 4);
    }
}
