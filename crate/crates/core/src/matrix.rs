//! Dense matrices over an exact field, with the elimination-based
//! kernel/rank/solve routines everything downstream relies on.
//!
//! The module convention throughout the crate is that module elements
//! are *row* vectors and matrices act on the right, so subspaces are
//! row spans and `rref` output doubles as a canonical subspace basis.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;
use crate::ratfunc::RatFunc;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn new(rows: usize, cols: usize, data: Vec<F>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length mismatch");
        Matrix { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix::new(rows, cols, vec![F::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = F::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(Vec::len).unwrap_or(0);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::validation("ragged rows in matrix construction"));
        }
        Ok(Matrix::new(r, c, rows.into_iter().flatten().collect()))
    }

    pub fn from_i64(rows: usize, cols: usize, data: &[i64]) -> Self {
        Matrix::new(rows, cols, data.iter().map(|&v| F::from_i64(v)).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut F {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<F> {
        self.row(i).to_vec()
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix::new(self.rows, self.cols, self.data.iter().map(f).collect())
    }

    pub fn transpose(&self) -> Self {
        let mut out = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::new(
            self.rows,
            self.cols,
            self.data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::new(
            self.rows,
            self.cols,
            self.data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.sub(b))
                .collect(),
        )
    }

    pub fn scale(&self, c: &F) -> Self {
        self.map(|a| a.mul(c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(i, j).add(&a.mul(b));
                    *out.at_mut(i, j) = cur;
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn act_on_row(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.rows, "row action shape mismatch");
        let mut out = vec![F::zero(); self.cols];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                out[j] = out[j].add(&vi.mul(self.at(i, j)));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Field::is_zero)
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        let mut rows = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut r = self.row_vec(i);
            r.extend(other.row_vec(i));
            rows.push(r);
        }
        Matrix::from_rows(rows).unwrap()
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix::new(self.rows + other.rows, self.cols, data)
    }

    pub fn block_diag(blocks: &[&Matrix<F>]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zero(rows, cols);
        let (mut ri, mut ci) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    *out.at_mut(ri + i, ci + j) = b.at(i, j).clone();
                }
            }
            ri += b.rows;
            ci += b.cols;
        }
        out
    }

    /// Reduced row echelon form with the pivot column list.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.at(r, c).inv().unwrap();
            for j in c..m.cols {
                *m.at_mut(r, j) = m.at(r, j).mul(&inv);
            }
            for i in 0..m.rows {
                if i != r && !m.at(i, c).is_zero() {
                    let f = m.at(i, c).clone();
                    for j in c..m.cols {
                        let v = m.at(i, j).sub(&f.mul(m.at(r, j)));
                        *m.at_mut(i, j) = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of the row space: the nonzero rows of the RREF.
    pub fn row_basis(&self) -> Matrix<F> {
        let (r, pivots) = self.rref();
        let mut rows = Vec::with_capacity(pivots.len());
        for i in 0..pivots.len() {
            rows.push(r.row_vec(i));
        }
        if rows.is_empty() {
            Matrix::zero(0, self.cols)
        } else {
            Matrix::from_rows(rows).unwrap()
        }
    }

    /// Solves `self * X = rhs`; `Ok(None)` when inconsistent.
    pub fn solve(&self, rhs: &Self) -> Result<Option<Self>> {
        if self.rows != rhs.rows {
            return Err(Error::validation("solve: shape mismatch"));
        }
        let aug = self.hstack(rhs);
        let (r, pivots) = aug.rref();
        // Any pivot in the rhs block means an inconsistent system.
        if pivots.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zero(self.cols, rhs.cols);
        for (i, &c) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                *x.at_mut(c, j) = r.at(i, self.cols + j).clone();
            }
        }
        // Verify: free variables were set to zero, so check the product.
        if self.mul(&x) != *rhs {
            return Ok(None);
        }
        Ok(Some(x))
    }

    /// Basis of the right kernel `{x : self * x = 0}`, returned as columns.
    pub fn kernel_basis(&self) -> Matrix<F> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zero(self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            *out.at_mut(fc, k) = F::one();
            for (i, &pc) in pivots.iter().enumerate() {
                *out.at_mut(pc, k) = r.at(i, fc).neg();
            }
        }
        out
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        match self.solve(&Matrix::identity(self.rows)) {
            Ok(Some(inv)) => Some(inv),
            _ => None,
        }
    }

    pub fn det(&self) -> F {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let mut m = self.clone();
        let n = m.rows;
        let mut det = F::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.at(i, c).is_zero()) else {
                return F::zero();
            };
            if p != c {
                m.swap_rows(c, p);
                det = det.neg();
            }
            let pivot = m.at(c, c).clone();
            det = det.mul(&pivot);
            let inv = pivot.inv().unwrap();
            for i in c + 1..n {
                if m.at(i, c).is_zero() {
                    continue;
                }
                let f = m.at(i, c).mul(&inv);
                for j in c..n {
                    let v = m.at(i, j).sub(&f.mul(m.at(c, j)));
                    *m.at_mut(i, j) = v;
                }
            }
        }
        det
    }

    pub fn trace(&self) -> F {
        assert_eq!(self.rows, self.cols);
        let mut tr = F::zero();
        for i in 0..self.rows {
            tr = tr.add(self.at(i, i));
        }
        tr
    }

    /// Characteristic polynomial (monic, in `x`) by the trace recursion;
    /// requires characteristic zero, which both of our fields satisfy.
    pub fn charpoly(&self) -> Poly<F> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut coeffs = vec![F::zero(); n + 1];
        coeffs[n] = F::one();
        let mut m = Matrix::identity(n);
        for k in 1..=n {
            m = self.mul(&m);
            let ck = m.trace().mul(&F::from_i64(k as i64).inv().unwrap()).neg();
            coeffs[n - k] = ck.clone();
            for i in 0..n {
                let v = m.at(i, i).add(&ck);
                *m.at_mut(i, i) = v;
            }
        }
        Poly::new(coeffs)
    }

    /// The matrix `x*I - self` over the polynomial ring.
    pub fn char_matrix(&self) -> Matrix<Poly<F>> {
        assert_eq!(self.rows, self.cols);
        let mut out = Matrix::zero(self.rows, self.rows);
        for i in 0..self.rows {
            for j in 0..self.rows {
                let e = Poly::constant(self.at(i, j).neg());
                *out.at_mut(i, j) = if i == j { e.add(&Poly::var()) } else { e };
            }
        }
        out
    }
}

/// Evaluates a polynomial with rational coefficients at a square matrix
/// over K by Horner's rule.
pub fn mat_poly_eval(p: &crate::poly::UniPoly, t: &Matrix<RatFunc>) -> Matrix<RatFunc> {
    let n = t.rows();
    let mut acc = Matrix::zero(n, n);
    for c in p.coeffs().iter().rev() {
        acc = t.mul(&acc);
        let lifted = RatFunc::from_rat(c.clone());
        for i in 0..n {
            let v = acc.at(i, i).add(&lifted);
            *acc.at_mut(i, i) = v;
        }
    }
    acc
}

/// Evaluates the algebra map determined by `t -> T` at `c = p/q in K`,
/// i.e. computes `p(T) * q(T)^{-1}` with the inverse taken by a linear
/// solve. Fails only when `q(T)` is singular, which cannot happen for
/// matrices whose eigenvalues are transcendental over Q.
pub fn hom_eval(t: &Matrix<RatFunc>, c: &RatFunc) -> Result<Matrix<RatFunc>> {
    assert_eq!(t.rows(), t.cols(), "hom_eval needs a square matrix");
    let p = mat_poly_eval(c.num(), t);
    if c.is_poly() {
        let d = c.den().coeff(0);
        if d.is_one() {
            return Ok(p);
        }
        return Ok(p.scale(&RatFunc::from_rat(d.inv().unwrap())));
    }
    let q = mat_poly_eval(c.den(), t);
    match q.solve(&p)? {
        Some(x) => Ok(x),
        None => Err(Error::validation("not an embedding-induced action")),
    }
}

impl<F: Field> std::fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::UniPoly;
    use crate::rat::BigRat;
    use crate::ratfunc::Frac;

    type QMat = Matrix<BigRat>;

    fn kf(n: &[i64], d: &[i64]) -> RatFunc {
        Frac::new(UniPoly::from_i64(n), UniPoly::from_i64(d)).unwrap()
    }

    #[test]
    fn solve_identity_and_inconsistent() {
        let id = QMat::identity(3);
        let b = QMat::from_i64(3, 1, &[1, 2, 3]);
        assert_eq!(id.solve(&b).unwrap().unwrap(), b);

        // Singular & inconsistent.
        let m = QMat::from_i64(2, 2, &[1, 1, 1, 1]);
        let b = QMat::from_i64(2, 1, &[1, 2]);
        assert!(m.solve(&b).unwrap().is_none());
        // Singular but consistent.
        let b2 = QMat::from_i64(2, 1, &[3, 3]);
        let x = m.solve(&b2).unwrap().unwrap();
        assert_eq!(m.mul(&x), b2);
    }

    #[test]
    fn solve_over_k() {
        // [[t,0],[0,t]] x = [[1],[1]] -> x = [[1/t],[1/t]]
        let t = kf(&[0, 1], &[1]);
        let m = Matrix::from_rows(vec![
            vec![t.clone(), RatFunc::zero()],
            vec![RatFunc::zero(), t.clone()],
        ])
        .unwrap();
        let b = Matrix::from_rows(vec![vec![RatFunc::one()], vec![RatFunc::one()]]).unwrap();
        let x = m.solve(&b).unwrap().unwrap();
        let tinv = kf(&[1], &[0, 1]);
        assert_eq!(x.row(0)[0], tinv);
        assert_eq!(x.row(1)[0], tinv);
    }

    #[test]
    fn rank_kernel_det() {
        let m = QMat::from_i64(3, 3, &[1, 2, 3, 2, 4, 6, 1, 0, 1]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 1);
        assert!(m.mul(&k).is_zero());
        assert!(m.det().is_zero());
        assert_eq!(QMat::from_i64(2, 2, &[2, 1, 1, 1]).det(), BigRat::from_i64(1));
    }

    #[test]
    fn charpoly_companion() {
        // Companion of x^2 - x - 1.
        let m = QMat::from_i64(2, 2, &[0, 1, 1, 1]);
        assert_eq!(m.charpoly(), UniPoly::from_i64(&[-1, -1, 1]));
    }

    #[test]
    fn hom_eval_examples() {
        // T = (t^2), c = t + 1 -> (t^2 + 1)
        let t2 = Matrix::from_rows(vec![vec![kf(&[0, 0, 1], &[1])]]).unwrap();
        let r = hom_eval(&t2, &kf(&[1, 1], &[1])).unwrap();
        assert_eq!(r.at(0, 0), &kf(&[1, 0, 1], &[1]));
        // T = (t^2), c = 1/t -> (1/t^2)
        let r = hom_eval(&t2, &kf(&[1], &[0, 1])).unwrap();
        assert_eq!(r.at(0, 0), &kf(&[1], &[0, 0, 1]));
        // T = [[0,1],[m,0]], c = t^2 -> diag(m, m)
        let m = kf(&[1, 0, 1], &[2, 0, 1]);
        let t = Matrix::from_rows(vec![
            vec![RatFunc::zero(), RatFunc::one()],
            vec![m.clone(), RatFunc::zero()],
        ])
        .unwrap();
        let r = hom_eval(&t, &kf(&[0, 0, 1], &[1])).unwrap();
        assert_eq!(r.at(0, 0), &m);
        assert_eq!(r.at(1, 1), &m);
        assert!(r.at(0, 1).is_zero());
        // hom_eval(T, t) = T
        assert_eq!(hom_eval(&t, &RatFunc::var()).unwrap(), t);
    }
}
