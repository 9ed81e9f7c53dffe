//! Dense tolerance-aware linear algebra over [`Real`] and [`Cplx`].

use crate::error::Error;
use crate::num::{Cplx, Real, ToleranceProfile};
use crate::Result;

/// Dense complex matrix, row major.
#[derive(Clone, Debug)]
pub struct CMat {
    pub rows: usize,
    pub cols: usize,
    a: Vec<Cplx>,
}

impl CMat {
    pub fn zeros(rows: usize, cols: usize, prec: u32) -> Self {
        CMat {
            rows,
            cols,
            a: vec![Cplx::zero(prec); rows * cols],
        }
    }

    pub fn identity(n: usize, prec: u32) -> Self {
        let mut m = CMat::zeros(n, n, prec);
        for i in 0..n {
            m[(i, i)] = Cplx::one(prec);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Cplx) -> Self {
        let mut a = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                a.push(f(i, j));
            }
        }
        CMat { rows, cols, a }
    }

    pub fn from_rows(rows: Vec<Vec<Cplx>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut a = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            a.extend(row);
        }
        CMat { rows: r, cols: c, a }
    }

    pub fn row(&self, i: usize) -> &[Cplx] {
        &self.a[i * self.cols..(i + 1) * self.cols]
    }

    pub fn prec(&self) -> u32 {
        self.a.iter().map(|z| z.prec()).min().unwrap_or(64)
    }

    pub fn transpose(&self) -> CMat {
        CMat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn conj(&self) -> CMat {
        CMat::from_fn(self.rows, self.cols, |i, j| self[(i, j)].conj())
    }

    pub fn mul(&self, rhs: &CMat) -> CMat {
        assert_eq!(self.cols, rhs.rows);
        let prec = self.prec().min(rhs.prec());
        CMat::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = Cplx::zero(prec);
            for k in 0..self.cols {
                acc = &acc + &(&self[(i, k)] * &rhs[(k, j)]);
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[Cplx]) -> Vec<Cplx> {
        assert_eq!(self.cols, v.len());
        let prec = self.prec();
        (0..self.rows)
            .map(|i| {
                let mut acc = Cplx::zero(prec);
                for k in 0..self.cols {
                    acc = &acc + &(&self[(i, k)] * &v[k]);
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, rhs: &CMat) -> CMat {
        CMat::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &rhs[(i, j)])
    }

    pub fn sub(&self, rhs: &CMat) -> CMat {
        CMat::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &rhs[(i, j)])
    }

    pub fn scale(&self, s: &Cplx) -> CMat {
        CMat::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] * s)
    }

    /// Largest entry magnitude.
    pub fn sup_norm(&self) -> Real {
        let prec = self.prec();
        let mut m = Real::zero(prec);
        for z in &self.a {
            m = m.max(&z.abs());
        }
        m
    }

    pub fn is_symmetric_within(&self, tol: &Real) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in i + 1..self.cols {
                if (&self[(i, j)] - &self[(j, i)]).abs() > *tol {
                    return false;
                }
            }
        }
        true
    }

    /// Determinant via LU with partial pivoting.
    pub fn det(&self) -> Cplx {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let prec = self.prec();
        let mut m = self.clone();
        let mut det = Cplx::one(prec);
        for k in 0..n {
            let mut piv = k;
            let mut best = m[(k, k)].abs();
            for i in k + 1..n {
                let v = m[(i, k)].abs();
                if v > best {
                    best = v;
                    piv = i;
                }
            }
            if best.is_zero() {
                return Cplx::zero(prec);
            }
            if piv != k {
                m.swap_rows(piv, k);
                det = -&det;
            }
            det = &det * &m[(k, k)];
            let inv = m[(k, k)].recip();
            for i in k + 1..n {
                let factor = &m[(i, k)] * &inv;
                for j in k..n {
                    let delta = &factor * &m[(k, j)];
                    m[(i, j)] = &m[(i, j)] - &delta;
                }
            }
        }
        det
    }

    /// Solve A x = b for square A; errors when a pivot falls below
    /// `rtol` times the largest initial entry.
    pub fn solve(&self, b: &[Cplx], rtol: &Real) -> Result<Vec<Cplx>> {
        assert_eq!(self.rows, self.cols);
        assert_eq!(b.len(), self.rows);
        let n = self.rows;
        let prec = self.prec();
        let floor = &self.sup_norm().max(&Real::exp2(-(prec as i64) * 2, prec)) * rtol;
        let mut m = self.clone();
        let mut rhs = b.to_vec();
        for k in 0..n {
            let mut piv = k;
            let mut best = m[(k, k)].abs();
            for i in k + 1..n {
                let v = m[(i, k)].abs();
                if v > best {
                    best = v;
                    piv = i;
                }
            }
            if best <= floor {
                return Err(Error::LinearSolve(format!(
                    "pivot {:.3e} below tolerance at column {k}",
                    best.to_f64()
                )));
            }
            if piv != k {
                m.swap_rows(piv, k);
                rhs.swap(piv, k);
            }
            let inv = m[(k, k)].recip();
            for i in k + 1..n {
                let factor = &m[(i, k)] * &inv;
                for j in k..n {
                    let delta = &factor * &m[(k, j)];
                    m[(i, j)] = &m[(i, j)] - &delta;
                }
                let delta = &factor * &rhs[k];
                rhs[i] = &rhs[i] - &delta;
            }
        }
        let mut x = vec![Cplx::zero(prec); n];
        for k in (0..n).rev() {
            let mut acc = rhs[k].clone();
            for j in k + 1..n {
                acc = &acc - &(&m[(k, j)] * &x[j]);
            }
            x[k] = &acc / &m[(k, k)];
        }
        Ok(x)
    }

    pub fn inverse(&self, rtol: &Real) -> Result<CMat> {
        let n = self.rows;
        let prec = self.prec();
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let mut e = vec![Cplx::zero(prec); n];
            e[j] = Cplx::one(prec);
            cols.push(self.solve(&e, rtol)?);
        }
        Ok(CMat::from_fn(n, n, |i, j| cols[j][i].clone()))
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.cols {
            self.a.swap(i * self.cols + k, j * self.cols + k);
        }
    }

    /// Row echelon reduction with complete pivoting.
    ///
    /// Returns (reduced matrix, row permutation applied, column
    /// permutation applied, pivot magnitudes).
    fn complete_pivot_echelon(&self) -> (CMat, Vec<usize>, Vec<usize>, Vec<Real>) {
        let mut m = self.clone();
        let (r, c) = (m.rows, m.cols);
        let mut rowp: Vec<usize> = (0..r).collect();
        let mut colp: Vec<usize> = (0..c).collect();
        let mut pivots = Vec::new();
        let steps = r.min(c);
        for k in 0..steps {
            let mut best = Real::zero(m.prec());
            let (mut bi, mut bj) = (k, k);
            for i in k..r {
                for j in k..c {
                    let v = m[(i, j)].abs();
                    if v > best {
                        best = v;
                        bi = i;
                        bj = j;
                    }
                }
            }
            if best.is_zero() {
                break;
            }
            m.swap_rows(k, bi);
            rowp.swap(k, bi);
            if bj != k {
                for i in 0..r {
                    let x = m[(i, k)].clone();
                    m[(i, k)] = m[(i, bj)].clone();
                    m[(i, bj)] = x;
                }
                colp.swap(k, bj);
            }
            pivots.push(best);
            let inv = m[(k, k)].recip();
            for i in k + 1..r {
                let factor = &m[(i, k)] * &inv;
                for j in k..c {
                    let delta = &factor * &m[(k, j)];
                    m[(i, j)] = &m[(i, j)] - &delta;
                }
            }
        }
        (m, rowp, colp, pivots)
    }

    /// Numerical rank: pivots above eps_rank relative to the largest pivot.
    pub fn rank_with_tolerance(&self, profile: &ToleranceProfile) -> Result<usize> {
        if self.rows == 0 || self.cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        let (_, _, _, pivots) = self.complete_pivot_echelon();
        if pivots.is_empty() {
            return Ok(0);
        }
        let thresh = &pivots[0] * &profile.eps_rank();
        Ok(pivots.iter().filter(|p| **p > thresh).count())
    }

    /// Basis of the (numerical) null space at relative tolerance `rtol`.
    pub fn kernel(&self, rtol: &Real) -> Vec<Vec<Cplx>> {
        let prec = self.prec();
        let (m, _, colp, pivots) = self.complete_pivot_echelon();
        let rank = if pivots.is_empty() {
            0
        } else {
            let thresh = &pivots[0] * rtol;
            pivots.iter().filter(|p| **p > thresh).count()
        };
        let c = self.cols;
        let mut basis = Vec::new();
        for free in rank..c {
            // permuted solution vector: x[free] = 1, back-substitute pivots
            let mut xp = vec![Cplx::zero(prec); c];
            xp[free] = Cplx::one(prec);
            for k in (0..rank).rev() {
                let mut acc = Cplx::zero(prec);
                for j in k + 1..c {
                    acc = &acc + &(&m[(k, j)] * &xp[j]);
                }
                xp[k] = &(-&acc) / &m[(k, k)];
            }
            let mut x = vec![Cplx::zero(prec); c];
            for (pos, &orig) in colp.iter().enumerate() {
                x[orig] = xp[pos].clone();
            }
            basis.push(x);
        }
        basis
    }

    /// Solve a consistent (possibly overdetermined) system A x = b.
    /// Errors when the residual of the dropped equations exceeds
    /// `res_tol` (absolute).
    pub fn solve_consistent(&self, b: &[Cplx], rtol: &Real, res_tol: &Real) -> Result<Vec<Cplx>> {
        assert_eq!(self.rows, b.len());
        let prec = self.prec();
        let n = self.cols;
        // eliminate on [A | b] with complete pivoting over A's columns only
        let mut m = CMat::from_fn(self.rows, n + 1, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let mut colp: Vec<usize> = (0..n).collect();
        let mut rank = 0;
        let mut pivot0: Option<Real> = None;
        for k in 0..n.min(self.rows) {
            let mut best = Real::zero(prec);
            let (mut bi, mut bj) = (k, k);
            for i in k..self.rows {
                for j in k..n {
                    let v = m[(i, j)].abs();
                    if v > best {
                        best = v;
                        bi = i;
                        bj = j;
                    }
                }
            }
            let first = pivot0.get_or_insert_with(|| best.clone()).clone();
            if best <= &first * rtol {
                break;
            }
            m.swap_rows(k, bi);
            if bj != k {
                for i in 0..self.rows {
                    let x = m[(i, k)].clone();
                    m[(i, k)] = m[(i, bj)].clone();
                    m[(i, bj)] = x;
                }
                colp.swap(k, bj);
            }
            rank += 1;
            let inv = m[(k, k)].recip();
            for i in k + 1..self.rows {
                let factor = &m[(i, k)] * &inv;
                for j in k..=n {
                    let delta = &factor * &m[(k, j)];
                    m[(i, j)] = &m[(i, j)] - &delta;
                }
            }
        }
        // residual rows rank..self.rows must have near-zero rhs
        for i in rank..self.rows {
            if m[(i, n)].abs() > *res_tol {
                return Err(Error::LinearSolve(format!(
                    "inconsistent system: residual {:.3e}",
                    m[(i, n)].abs().to_f64()
                )));
            }
        }
        let mut xp = vec![Cplx::zero(prec); n];
        for k in (0..rank).rev() {
            let mut acc = m[(k, n)].clone();
            for j in k + 1..n {
                acc = &acc - &(&m[(k, j)] * &xp[j]);
            }
            xp[k] = &acc / &m[(k, k)];
        }
        let mut x = vec![Cplx::zero(prec); n];
        for (pos, &orig) in colp.iter().enumerate() {
            x[orig] = xp[pos].clone();
        }
        Ok(x)
    }

    /// Newton iteration for a square system. `f` evaluates the residual,
    /// `jac` the Jacobian. Converges when the residual sup norm falls
    /// below `tol`; errors after `max_iter` without convergence.
    pub fn newton_solve(
        x0: &[Cplx],
        tol: &Real,
        max_iter: usize,
        mut f: impl FnMut(&[Cplx]) -> Vec<Cplx>,
        mut jac: impl FnMut(&[Cplx]) -> CMat,
    ) -> Result<Vec<Cplx>> {
        let prec = x0.iter().map(|z| z.prec()).min().unwrap_or(64);
        let rtol = Real::exp2(-(prec as i64) + 16, prec);
        let mut x = x0.to_vec();
        for _ in 0..max_iter {
            let r = f(&x);
            let mut norm = Real::zero(prec);
            for v in &r {
                norm = norm.max(&v.abs());
            }
            if norm < *tol {
                return Ok(x);
            }
            let j = jac(&x);
            let dx = j.solve(&r, &rtol)?;
            for (xi, d) in x.iter_mut().zip(&dx) {
                *xi = &*xi - d;
            }
        }
        // final residual check
        let r = f(&x);
        let mut norm = Real::zero(prec);
        for v in &r {
            norm = norm.max(&v.abs());
        }
        if norm < *tol {
            Ok(x)
        } else {
            Err(Error::NonConvergence { candidates: x })
        }
    }
}

impl std::ops::Index<(usize, usize)> for CMat {
    type Output = Cplx;
    fn index(&self, (i, j): (usize, usize)) -> &Cplx {
        &self.a[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Cplx {
        &mut self.a[i * self.cols + j]
    }
}

/// Symmetric eigendecomposition of a real symmetric matrix by cyclic
/// Jacobi sweeps. Returns eigenvalues (descending) and the matching
/// orthonormal eigenvectors as columns.
pub fn jacobi_eigen(sym: &[Vec<Real>]) -> (Vec<Real>, Vec<Vec<Real>>) {
    let n = sym.len();
    let prec = sym
        .iter()
        .flatten()
        .map(|x| x.prec())
        .min()
        .unwrap_or(64);
    let mut a: Vec<Vec<Real>> = sym.to_vec();
    let mut v = vec![vec![Real::zero(prec); n]; n];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = Real::one(prec);
    }
    let mut norm = Real::zero(prec);
    for row in &a {
        for x in row {
            norm = norm.max(&x.abs());
        }
    }
    if norm.is_zero() {
        let evals = vec![Real::zero(prec); n];
        return (evals, v);
    }
    let stop = &norm * &Real::exp2(-(prec as i64) + 8, prec);
    let one = Real::one(prec);
    let two = Real::from_i64(2, prec);
    for _sweep in 0..64 {
        let mut off = Real::zero(prec);
        for p in 0..n {
            for q in p + 1..n {
                off = off.max(&a[p][q].abs());
            }
        }
        if off <= stop {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() <= stop {
                    continue;
                }
                let tau = &(&a[q][q] - &a[p][p]) / &(&two * &a[p][q]);
                let t = {
                    let root = (&one + &(&tau * &tau)).sqrt();
                    let denom = if tau.is_negative() { &tau - &root } else { &tau + &root };
                    &one / &denom
                };
                let c = &one / &(&one + &(&t * &t)).sqrt();
                let s = &t * &c;
                // rotate rows/cols p, q
                for k in 0..n {
                    let akp = a[k][p].clone();
                    let akq = a[k][q].clone();
                    a[k][p] = &(&c * &akp) - &(&s * &akq);
                    a[k][q] = &(&s * &akp) + &(&c * &akq);
                }
                for k in 0..n {
                    let apk = a[p][k].clone();
                    let aqk = a[q][k].clone();
                    a[p][k] = &(&c * &apk) - &(&s * &aqk);
                    a[q][k] = &(&s * &apk) + &(&c * &aqk);
                }
                for k in 0..n {
                    let vkp = v[k][p].clone();
                    let vkq = v[k][q].clone();
                    v[k][p] = &(&c * &vkp) - &(&s * &vkq);
                    v[k][q] = &(&s * &vkp) + &(&c * &vkq);
                }
            }
        }
    }
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| a[j][j].partial_cmp(&a[i][i]).unwrap());
    let evals: Vec<Real> = idx.iter().map(|&i| a[i][i].clone()).collect();
    let evecs: Vec<Vec<Real>> = (0..n)
        .map(|r| idx.iter().map(|&i| v[r][i].clone()).collect())
        .collect();
    (evals, evecs)
}

/// Cholesky factorization of a real symmetric matrix; `None` when some
/// pivot is not positive by more than `floor` (near-singular inputs
/// report `None` rather than a factor).
pub fn cholesky(sym: &[Vec<Real>], floor: &Real) -> Option<Vec<Vec<Real>>> {
    let n = sym.len();
    let prec = sym.iter().flatten().map(|x| x.prec()).min().unwrap_or(64);
    let mut l = vec![vec![Real::zero(prec); n]; n];
    for j in 0..n {
        let mut d = sym[j][j].clone();
        for k in 0..j {
            d = &d - &(&l[j][k] * &l[j][k]);
        }
        if d <= *floor {
            return None;
        }
        l[j][j] = d.sqrt();
        for i in j + 1..n {
            let mut s = sym[i][j].clone();
            for k in 0..j {
                s = &s - &(&l[i][k] * &l[j][k]);
            }
            l[i][j] = &s / &l[j][j];
        }
    }
    Some(l)
}

/// Factor a complex symmetric matrix of numerical rank `r` as G = Hᵀ·H
/// with H of shape r x n, by symmetric rank-one peeling.
pub fn symmetric_rank_factor(g: &CMat, r: usize, tol: &Real) -> Result<CMat> {
    assert_eq!(g.rows, g.cols);
    let n = g.rows;
    let prec = g.prec();
    let mut work = g.clone();
    let mut rows: Vec<Vec<Cplx>> = Vec::with_capacity(r);
    for step in 0..r {
        // best diagonal pivot
        let mut bi = 0;
        let mut best = Real::zero(prec);
        for i in 0..n {
            let v = work[(i, i)].abs();
            if v > best {
                best = v;
                bi = i;
            }
        }
        let mut off_best = Real::zero(prec);
        let (mut oi, mut oj) = (0, 1.min(n - 1));
        for i in 0..n {
            for j in i + 1..n {
                let v = work[(i, j)].abs();
                if v > off_best {
                    off_best = v;
                    oi = i;
                    oj = j;
                }
            }
        }
        let use_combined = best < &off_best * tol;
        let (pivot, col): (Cplx, Vec<Cplx>) = if !use_combined {
            let col: Vec<Cplx> = (0..n).map(|i| work[(i, bi)].clone()).collect();
            (work[(bi, bi)].clone(), col)
        } else {
            // no usable diagonal: pivot on e_i + e_j
            let d = &(&work[(oi, oi)] + &work[(oj, oj)]) + &(&work[(oi, oj)] + &work[(oi, oj)]);
            let col: Vec<Cplx> = (0..n)
                .map(|i| &work[(i, oi)] + &work[(i, oj)])
                .collect();
            (d, col)
        };
        if pivot.abs() <= *tol {
            return Err(Error::LinearSolve(format!(
                "rank deficiency during symmetric factorization at step {step}"
            )));
        }
        let s = pivot.sqrt();
        let v: Vec<Cplx> = col.iter().map(|x| x / &s).collect();
        for i in 0..n {
            for j in 0..n {
                let delta = &v[i] * &v[j];
                work[(i, j)] = &work[(i, j)] - &delta;
            }
        }
        rows.push(v);
    }
    Ok(CMat::from_rows(rows))
}

/// Convert between real matrices and complex ones.
pub fn cmat_from_real(m: &[Vec<Real>]) -> CMat {
    CMat::from_fn(m.len(), m[0].len(), |i, j| Cplx::from_real(m[i][j].clone()))
}

pub fn real_part_matrix(m: &CMat) -> Vec<Vec<Real>> {
    (0..m.rows)
        .map(|i| (0..m.cols).map(|j| m[(i, j)].re.clone()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: f64, prec: u32) -> Cplx {
        Cplx::from_f64(v, 0.0, prec)
    }

    #[test]
    fn solve_and_det() {
        let prec = 128;
        let m = CMat::from_rows(vec![
            vec![c(2.0, prec), c(1.0, prec)],
            vec![c(1.0, prec), c(3.0, prec)],
        ]);
        let d = m.det();
        assert!((d.re.to_f64() - 5.0).abs() < 1e-20);
        let x = m
            .solve(&[c(3.0, prec), c(4.0, prec)], &Real::exp2(-100, prec))
            .unwrap();
        assert!((x[0].re.to_f64() - 1.0).abs() < 1e-20);
        assert!((x[1].re.to_f64() - 1.0).abs() < 1e-20);
    }

    #[test]
    fn rank_tolerance_examples() {
        let prof = ToleranceProfile::new(128);
        let id = CMat::identity(4, 128);
        assert_eq!(id.rank_with_tolerance(&prof).unwrap(), 4);
        // outer product u u^T has rank 1
        let u = [c(1.5, 128), c(-2.0, 128), c(0.25, 128)];
        let outer = CMat::from_fn(3, 3, |i, j| &u[i] * &u[j]);
        assert_eq!(outer.rank_with_tolerance(&prof).unwrap(), 1);
        // scaling invariance
        let s = Cplx::from_f64(1e-9, 3e4, 128);
        assert_eq!(outer.scale(&s).rank_with_tolerance(&prof).unwrap(), 1);
        let empty = CMat::zeros(0, 0, 128);
        assert!(empty.rank_with_tolerance(&prof).is_err());
    }

    #[test]
    fn kernel_dimension() {
        let prec = 128;
        // rank-2 3x4 matrix
        let m = CMat::from_rows(vec![
            vec![c(1.0, prec), c(0.0, prec), c(1.0, prec), c(2.0, prec)],
            vec![c(0.0, prec), c(1.0, prec), c(1.0, prec), c(-1.0, prec)],
            vec![c(1.0, prec), c(1.0, prec), c(2.0, prec), c(1.0, prec)],
        ]);
        let ker = m.kernel(&Real::exp2(-64, prec));
        assert_eq!(ker.len(), 2);
        for v in &ker {
            let r = m.mul_vec(v);
            for x in r {
                assert!(x.abs() < Real::exp2(-100, prec));
            }
        }
    }

    #[test]
    fn jacobi_small_spectrum() {
        let prec = 192;
        let r = |v: f64| Real::from_f64(v, prec);
        // eigenvalues of [[2,1],[1,2]] are 3 and 1
        let m = vec![vec![r(2.0), r(1.0)], vec![r(1.0), r(2.0)]];
        let (ev, vecs) = jacobi_eigen(&m);
        assert!((ev[0].to_f64() - 3.0).abs() < 1e-30);
        assert!((ev[1].to_f64() - 1.0).abs() < 1e-30);
        // eigenvector residual
        for k in 0..2 {
            for i in 0..2 {
                let mut acc = Real::zero(prec);
                for j in 0..2 {
                    acc = &acc + &(&m[i][j] * &vecs[j][k]);
                }
                let lam = &ev[k] * &vecs[i][k];
                assert!((&acc - &lam).abs() < Real::exp2(-150, prec));
            }
        }
    }

    #[test]
    fn cholesky_definite_vs_not() {
        let prec = 128;
        let r = |v: f64| Real::from_f64(v, prec);
        let pd = vec![vec![r(4.0), r(1.0)], vec![r(1.0), r(3.0)]];
        assert!(cholesky(&pd, &Real::exp2(-60, prec)).is_some());
        let indef = vec![vec![r(1.0), r(5.0)], vec![r(5.0), r(1.0)]];
        assert!(cholesky(&indef, &Real::exp2(-60, prec)).is_none());
    }

    #[test]
    fn symmetric_factor_reconstructs() {
        let prec = 192;
        // G = H0^T H0 for a random-ish complex 2x4 H0 (rank 2, symmetric)
        let h0 = CMat::from_rows(vec![
            vec![
                Cplx::from_f64(1.0, 0.5, prec),
                Cplx::from_f64(-0.25, 0.0, prec),
                Cplx::from_f64(0.0, 1.5, prec),
                Cplx::from_f64(2.0, -1.0, prec),
            ],
            vec![
                Cplx::from_f64(0.5, 0.0, prec),
                Cplx::from_f64(1.0, 1.0, prec),
                Cplx::from_f64(-1.0, 0.25, prec),
                Cplx::from_f64(0.0, 0.75, prec),
            ],
        ]);
        let g = h0.transpose().mul(&h0);
        let h = symmetric_rank_factor(&g, 2, &Real::exp2(-100, prec)).unwrap();
        let back = h.transpose().mul(&h);
        assert!(g.sub(&back).sup_norm() < Real::exp2(-120, prec));
    }
}
