//! Smith normal form over K[x] for K a field.
//!
//! The invariant factors of `x*I - T` classify the module presented by
//! `T` up to isomorphism, so this is the engine behind the similarity
//! and isomorphism tests.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::poly::Poly;

/// Invariant factors `d_1 | d_2 | ... | d_n` of a square polynomial
/// matrix, each normalized monic. Zero factors (degenerate inputs
/// only) sort to the end.
pub fn smith_invariant_factors<F: Field>(m: &Matrix<Poly<F>>) -> Result<Vec<Poly<F>>> {
    if m.rows() != m.cols() {
        return Err(Error::validation(
            "invariant factors require a square matrix",
        ));
    }
    let n = m.rows();
    let mut a = m.clone();
    let mut factors: Vec<Poly<F>> = Vec::new();
    let mut k = 0;
    while k < n {
        // Pivot: a nonzero entry of minimal degree in the trailing block.
        let mut pivot: Option<(usize, usize, usize)> = None;
        for i in k..n {
            for j in k..n {
                if let Some(d) = a.at(i, j).degree() {
                    if pivot.map(|(_, _, pd)| d < pd).unwrap_or(true) {
                        pivot = Some((i, j, d));
                    }
                }
            }
        }
        let Some((pi, pj, _)) = pivot else {
            // Entire trailing block is zero.
            for _ in k..n {
                factors.push(Poly::zero());
            }
            break;
        };
        swap_rows(&mut a, k, pi);
        swap_cols(&mut a, k, pj);
        // Clear row and column k; restart whenever a remainder drops the
        // pivot degree.
        loop {
            let mut dirty = false;
            for i in k + 1..n {
                if a.at(i, k).is_zero() {
                    continue;
                }
                let (q, r) = a.at(i, k).divrem(a.at(k, k))?;
                row_sub_mul(&mut a, i, k, &q);
                debug_assert_eq!(a.at(i, k), &r);
                if !r.is_zero() {
                    swap_rows(&mut a, k, i);
                    dirty = true;
                }
            }
            for j in k + 1..n {
                if a.at(k, j).is_zero() {
                    continue;
                }
                let (q, r) = a.at(k, j).divrem(a.at(k, k))?;
                col_sub_mul(&mut a, j, k, &q);
                if !r.is_zero() {
                    swap_cols(&mut a, k, j);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Row and column are clear; enforce divisibility into the
            // remaining block.
            let mut fixed = true;
            'scan: for i in k + 1..n {
                for j in k + 1..n {
                    if a.at(i, j).is_zero() {
                        continue;
                    }
                    let (_, r) = a.at(i, j).divrem(a.at(k, k))?;
                    if !r.is_zero() {
                        // Fold row i into row k so the offending entry
                        // enters the working row, then re-clear.
                        let one = Poly::one();
                        for col in k..n {
                            let v = a.at(k, col).add(&one.mul(a.at(i, col)));
                            *a.at_mut(k, col) = v;
                        }
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        factors.push(a.at(k, k).monic());
        k += 1;
    }
    Ok(factors)
}

fn swap_rows<F: Field>(a: &mut Matrix<Poly<F>>, r1: usize, r2: usize) {
    if r1 == r2 {
        return;
    }
    for j in 0..a.cols() {
        let x = a.at(r1, j).clone();
        let y = a.at(r2, j).clone();
        *a.at_mut(r1, j) = y;
        *a.at_mut(r2, j) = x;
    }
}

fn swap_cols<F: Field>(a: &mut Matrix<Poly<F>>, c1: usize, c2: usize) {
    if c1 == c2 {
        return;
    }
    for i in 0..a.rows() {
        let x = a.at(i, c1).clone();
        let y = a.at(i, c2).clone();
        *a.at_mut(i, c1) = y;
        *a.at_mut(i, c2) = x;
    }
}

/// row_i -= q * row_k
fn row_sub_mul<F: Field>(a: &mut Matrix<Poly<F>>, i: usize, k: usize, q: &Poly<F>) {
    for j in 0..a.cols() {
        let v = a.at(i, j).sub(&q.mul(a.at(k, j)));
        *a.at_mut(i, j) = v;
    }
}

/// col_j -= q * col_k
fn col_sub_mul<F: Field>(a: &mut Matrix<Poly<F>>, j: usize, k: usize, q: &Poly<F>) {
    for i in 0..a.rows() {
        let v = a.at(i, j).sub(&q.mul(a.at(i, k)));
        *a.at_mut(i, j) = v;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::UniPoly;
    use crate::ratfunc::{Frac, RatFunc};

    fn kf(n: &[i64], d: &[i64]) -> RatFunc {
        Frac::new(UniPoly::from_i64(n), UniPoly::from_i64(d)).unwrap()
    }

    fn char_matrix_of(rows: Vec<Vec<RatFunc>>) -> Matrix<Poly<RatFunc>> {
        Matrix::from_rows(rows).unwrap().char_matrix()
    }

    #[test]
    fn companion_block() {
        // xI - [[0,1],[m,0]] with m = (t^2+1)/(t^2+2) -> [1, x^2 - m]
        let m = kf(&[1, 0, 1], &[2, 0, 1]);
        let cm = char_matrix_of(vec![
            vec![RatFunc::zero(), RatFunc::one()],
            vec![m.clone(), RatFunc::zero()],
        ]);
        let f = smith_invariant_factors(&cm).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f[0], Poly::one());
        assert_eq!(f[1], Poly::new(vec![m.neg(), RatFunc::zero(), RatFunc::one()]));
    }

    #[test]
    fn scalar_matrix() {
        // xI - diag(t^2, t^2) -> [x - t^2, x - t^2]
        let t2 = kf(&[0, 0, 1], &[1]);
        let cm = char_matrix_of(vec![
            vec![t2.clone(), RatFunc::zero()],
            vec![RatFunc::zero(), t2.clone()],
        ]);
        let f = smith_invariant_factors(&cm).unwrap();
        let expect = Poly::new(vec![t2.neg(), RatFunc::one()]);
        assert_eq!(f, vec![expect.clone(), expect]);
    }

    #[test]
    fn jordan_block() {
        // xI - [[t^2,1],[0,t^2]] -> [1, (x - t^2)^2]
        let t2 = kf(&[0, 0, 1], &[1]);
        let cm = char_matrix_of(vec![
            vec![t2.clone(), RatFunc::one()],
            vec![RatFunc::zero(), t2.clone()],
        ]);
        let f = smith_invariant_factors(&cm).unwrap();
        assert_eq!(f[0], Poly::one());
        let lin = Poly::new(vec![t2.neg(), RatFunc::one()]);
        assert_eq!(f[1], lin.mul(&lin));
    }

    #[test]
    fn rejects_non_square() {
        let m: Matrix<Poly<RatFunc>> = Matrix::zero(2, 3);
        assert!(smith_invariant_factors(&m).is_err());
    }

    #[test]
    fn product_is_charpoly() {
        let rows = vec![
            vec![kf(&[1, 1], &[1]), kf(&[0, 1], &[1]), RatFunc::zero()],
            vec![RatFunc::one(), kf(&[2], &[1]), kf(&[0, 1], &[1])],
            vec![RatFunc::zero(), RatFunc::one(), kf(&[-1], &[1])],
        ];
        let t = Matrix::from_rows(rows).unwrap();
        let f = smith_invariant_factors(&t.char_matrix()).unwrap();
        let mut prod: Poly<RatFunc> = Poly::one();
        for d in &f {
            prod = prod.mul(d);
        }
        assert_eq!(prod, t.charpoly());
    }
}
