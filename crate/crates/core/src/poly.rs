//! Dense univariate polynomials over an exact field.
//!
//! Coefficients are stored lowest degree first with no trailing zeros;
//! the zero polynomial is the empty coefficient list, so degree is
//! always `len - 1` and equality is representation equality.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::rat::BigRat;

#[derive(Clone, PartialEq, Eq)]
pub struct Poly<F: Field> {
    coeffs: Vec<F>,
}

/// Polynomials over Q, the coefficient ring of relations and of K = Q(t).
pub type UniPoly = Poly<BigRat>;

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().map(Field::is_zero).unwrap_or(false) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `x`.
    pub fn var() -> Self {
        Poly::new(vec![F::zero(), F::one()])
    }

    /// The monomial `c * x^d`.
    pub fn monomial(c: F, d: usize) -> Self {
        let mut coeffs = vec![F::zero(); d];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    pub fn from_i64(cs: &[i64]) -> Self {
        Poly::new(cs.iter().map(|&c| F::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the convention deg 0 = 0; callers must handle zero.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    /// Coefficient of `x^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    /// Leading coefficient; `None` for the zero polynomial.
    pub fn lc(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).add(&other.coeff(i)));
        }
        Poly::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).sub(&other.coeff(i)));
        }
        Poly::new(out)
    }

    pub fn neg(&self) -> Self {
        Poly::new(self.coeffs.iter().map(Field::neg).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &F) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Multiplication by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![F::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly::new(coeffs)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Horner evaluation at a point of a larger field, lifting each
    /// coefficient through `lift`.
    pub fn eval_lift<G: Field>(&self, x: &G, lift: impl Fn(&F) -> G) -> G {
        let mut acc = G::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&lift(c));
        }
        acc
    }

    /// Euclidean division; errors on zero divisor.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        if divisor.is_zero() {
            return Err(Error::validation("polynomial division by zero"));
        }
        let dlc_inv = divisor.lc().unwrap().inv().unwrap();
        let ddeg = divisor.deg();
        let mut rem = self.coeffs.clone();
        if rem.len() < divisor.coeffs.len() {
            return Ok((Poly::zero(), self.clone()));
        }
        let qlen = rem.len() - ddeg;
        let mut quot = vec![F::zero(); qlen];
        for i in (0..qlen).rev() {
            let c = rem[i + ddeg].mul(&dlc_inv);
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].sub(&c.mul(d));
            }
            quot[i] = c;
        }
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Exact division; errors if the remainder is nonzero.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.divrem(divisor)?;
        if !r.is_zero() {
            return Err(Error::validation("inexact polynomial division"));
        }
        Ok(q)
    }

    pub fn monic(&self) -> Self {
        match self.lc() {
            None => Poly::zero(),
            Some(l) => self.scale(&l.inv().unwrap()),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).unwrap();
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Extended gcd: returns monic `g` and `(u, v)` with `u*a + v*b = g`.
    pub fn xgcd(&self, other: &Self) -> (Self, Self, Self) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut s0 = Poly::one();
        let mut s1 = Poly::zero();
        let mut t0 = Poly::zero();
        let mut t1 = Poly::one();
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1).unwrap();
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        match r0.lc().map(|l| l.inv().unwrap()) {
            None => (Poly::zero(), Poly::zero(), Poly::zero()),
            Some(li) => (r0.scale(&li), s0.scale(&li), t0.scale(&li)),
        }
    }

    /// Inverse of `self` modulo `m` when `gcd(self, m) = 1`.
    pub fn inv_mod(&self, m: &Self) -> Option<Self> {
        let (g, u, _) = self.xgcd(m);
        if g.degree() == Some(0) {
            Some(u.rem(m).unwrap())
        } else {
            None
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c.mul(&F::from_i64(i as i64)));
        }
        Poly::new(out)
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

/// Yun's squarefree decomposition over a characteristic-zero field.
///
/// Returns the leading coefficient and the list of monic squarefree
/// pairwise-coprime parts with multiplicities, sorted by multiplicity;
/// the input is exactly `lc * prod s_i^{m_i}`. Errors on zero input.
pub fn yun_squarefree<F: Field>(p: &Poly<F>) -> Result<(F, Vec<(Poly<F>, u32)>)> {
    if p.is_zero() {
        return Err(Error::validation(
            "squarefree decomposition of the zero polynomial",
        ));
    }
    let lc = p.lc().unwrap().clone();
    let f = p.monic();
    if f.deg() == 0 {
        return Ok((lc, Vec::new()));
    }
    let df = f.derivative();
    let mut parts: Vec<(Poly<F>, u32)> = Vec::new();
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0).unwrap();
    let mut c = df.exact_div(&a0).unwrap();
    let mut i: u32 = 1;
    while b.deg() > 0 {
        let d = c.sub(&b.derivative());
        let s = b.gcd(&d);
        if s.deg() > 0 {
            parts.push((s.clone(), i));
        }
        b = b.exact_div(&s).unwrap();
        c = d.exact_div(&s).unwrap();
        i += 1;
    }
    parts.sort_by(|(p1, m1), (p2, m2)| m1.cmp(m2).then(p1.deg().cmp(&p2.deg())));
    Ok((lc, parts))
}

/// Formats a polynomial, highest degree first, with `var` as the
/// variable name and `wrap` deciding whether a coefficient needs
/// parentheses when multiplied by a power of `var`.
pub fn format_poly<F: Field>(
    p: &Poly<F>,
    var: &str,
    show: impl Fn(&F) -> String,
    wrap: impl Fn(&F) -> bool,
) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (d, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let cs = show(c);
        let (neg, abs) = match cs.strip_prefix('-') {
            Some(rest) if !wrap(c) => (true, rest.to_string()),
            _ => (false, cs),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let pow = match d {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{d}"),
        };
        let unit = abs == "1";
        if d == 0 {
            if wrap(c) {
                out.push_str(&format!("({abs})"));
            } else {
                out.push_str(&abs);
            }
        } else if unit {
            out.push_str(&pow);
        } else if wrap(c) {
            out.push_str(&format!("({abs})*{pow}"));
        } else {
            out.push_str(&format!("{abs}*{pow}"));
        }
    }
    out
}

impl std::fmt::Display for UniPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}",
            format_poly(self, "t", |c| c.to_string(), |_| false)
        )
    }
}

impl<F: Field> std::fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;

    fn p(cs: &[i64]) -> UniPoly {
        UniPoly::from_i64(cs)
    }

    #[test]
    fn arithmetic_and_canonical_form() {
        let a = p(&[1, 2, 1]); // 1 + 2t + t^2
        let b = p(&[-1, 1]); // t - 1
        assert_eq!(a.add(&a.neg()), UniPoly::zero());
        assert_eq!(a.mul(&b).deg(), 3);
        assert_eq!(UniPoly::new(vec![rat_int(0), rat_int(0)]), UniPoly::zero());
        assert_eq!(a.degree(), Some(2));
        assert_eq!(UniPoly::zero().degree(), None);
    }

    #[test]
    fn divrem_and_gcd() {
        // (t^2 - 1, t - 1) -> t - 1
        let a = p(&[-1, 0, 1]);
        let b = p(&[-1, 1]);
        assert_eq!(a.gcd(&b), b);
        // (t^2+1, t^2+2) -> 1
        assert_eq!(p(&[1, 0, 1]).gcd(&p(&[2, 0, 1])), UniPoly::one());
        // (0, 3t) -> t, monic
        assert_eq!(UniPoly::zero().gcd(&p(&[0, 3])), p(&[0, 1]));
        // gcd(0, 0) = 0
        assert_eq!(UniPoly::zero().gcd(&UniPoly::zero()), UniPoly::zero());
        let (q, r) = a.divrem(&b).unwrap();
        assert_eq!(q.mul(&b).add(&r), a);
    }

    #[test]
    fn xgcd_bezout_identity() {
        let a = p(&[2, 0, 1, 1]);
        let b = p(&[1, 3]);
        let (g, u, v) = a.xgcd(&b);
        assert_eq!(u.mul(&a).add(&v.mul(&b)), g);
        let inv = b.inv_mod(&a).unwrap();
        assert_eq!(inv.mul(&b).rem(&a).unwrap(), UniPoly::one());
    }

    #[test]
    fn yun_examples() {
        // (t+1)^2 (t-2) -> [(t-2,1), (t+1,2)]
        let q = p(&[1, 1]).pow(2).mul(&p(&[-2, 1]));
        let (lc, parts) = yun_squarefree(&q).unwrap();
        assert_eq!(lc, rat_int(1));
        assert_eq!(parts, vec![(p(&[-2, 1]), 1), (p(&[1, 1]), 2)]);
        // t^2 + 1 squarefree
        let (_, parts) = yun_squarefree(&p(&[1, 0, 1])).unwrap();
        assert_eq!(parts, vec![(p(&[1, 0, 1]), 1)]);
        // 4t^2 -> lc 4, [(t, 2)]
        let (lc, parts) = yun_squarefree(&p(&[0, 0, 4])).unwrap();
        assert_eq!(lc, rat_int(4));
        assert_eq!(parts, vec![(p(&[0, 1]), 2)]);
        assert!(yun_squarefree(&UniPoly::zero()).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -2, 1]).to_string(), "t^2 - 2*t + 1");
        assert_eq!(p(&[0, 1]).to_string(), "t");
        assert_eq!(UniPoly::zero().to_string(), "0");
        let half = UniPoly::new(vec![crate::rat::rat(1, 2), rat_int(-1)]);
        assert_eq!(half.to_string(), "-t + 1/2");
    }
}
