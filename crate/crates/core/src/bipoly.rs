//! Sparse bivariate polynomials over Q.
//!
//! These carry the defining relations F(x, y) of embeddings: x is the
//! generator of K = Q(t) (written x in relations, t as a field
//! element) and y stands for the image of t. Terms are kept sorted by
//! (xdeg, ydeg) with no zero coefficients and no duplicates, so
//! equality is representation equality.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::poly::{Poly, UniPoly};
use crate::rat::{parse_rat, BigInt, BigRat};
use crate::ratfunc::{Frac, KPoly, RatFunc};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq)]
pub struct BiPoly {
    /// (coefficient, x degree, y degree), sorted by (xdeg, ydeg).
    terms: Vec<(BigRat, u32, u32)>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Var {
    X,
    Y,
}

impl BiPoly {
    pub fn new(terms: Vec<(BigRat, u32, u32)>) -> Self {
        let mut map: std::collections::BTreeMap<(u32, u32), BigRat> =
            std::collections::BTreeMap::new();
        for (c, i, j) in terms {
            let e = map.entry((i, j)).or_insert_with(BigRat::zero);
            *e += c;
        }
        BiPoly {
            terms: map
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|((i, j), c)| (c, i, j))
                .collect(),
        }
    }

    pub fn zero() -> Self {
        BiPoly { terms: Vec::new() }
    }

    pub fn constant(c: BigRat) -> Self {
        BiPoly::new(vec![(c, 0, 0)])
    }

    pub fn monomial(c: BigRat, xdeg: u32, ydeg: u32) -> Self {
        BiPoly::new(vec![(c, xdeg, ydeg)])
    }

    pub fn x() -> Self {
        BiPoly::monomial(BigRat::one(), 1, 0)
    }

    pub fn y() -> Self {
        BiPoly::monomial(BigRat::one(), 0, 1)
    }

    pub fn terms(&self) -> &[(BigRat, u32, u32)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn deg_x(&self) -> u32 {
        self.terms.iter().map(|&(_, i, _)| i).max().unwrap_or(0)
    }

    pub fn deg_y(&self) -> u32 {
        self.terms.iter().map(|&(_, _, j)| j).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut t = self.terms.clone();
        t.extend(other.terms.iter().cloned());
        BiPoly::new(t)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        BiPoly {
            terms: self.terms.iter().map(|(c, i, j)| (-c, *i, *j)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut t = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (c1, i1, j1) in &self.terms {
            for (c2, i2, j2) in &other.terms {
                t.push((c1 * c2, i1 + i2, j1 + j2));
            }
        }
        BiPoly::new(t)
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(a, i, j)| (a * c, *i, *j)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = BiPoly::constant(BigRat::one());
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

    /// Exchanges the two variables.
    pub fn swap_xy(&self) -> Self {
        BiPoly::new(self.terms.iter().map(|(c, i, j)| (c.clone(), *j, *i)).collect())
    }

    pub fn derivative(&self, var: Var) -> Self {
        let terms = self
            .terms
            .iter()
            .filter_map(|(c, i, j)| match var {
                Var::X if *i > 0 => Some((c * BigRat::from_integer((*i).into()), i - 1, *j)),
                Var::Y if *j > 0 => Some((c * BigRat::from_integer((*j).into()), *i, j - 1)),
                _ => None,
            })
            .collect();
        BiPoly { terms }
    }

    /// Coefficient of `y^j` as a polynomial in x.
    pub fn coeff_of_y(&self, j: u32) -> UniPoly {
        let mut coeffs: Vec<BigRat> = Vec::new();
        for (c, i, jj) in &self.terms {
            if *jj == j {
                let i = *i as usize;
                if coeffs.len() <= i {
                    coeffs.resize(i + 1, BigRat::zero());
                }
                coeffs[i] = c.clone();
            }
        }
        Poly::new(coeffs)
    }

    /// View as a polynomial in y with coefficients in K = Q(x).
    pub fn as_kpoly_in_y(&self) -> KPoly {
        let dy = self.deg_y();
        let mut coeffs = Vec::with_capacity(dy as usize + 1);
        for j in 0..=dy {
            coeffs.push(Frac::from_poly(self.coeff_of_y(j)));
        }
        Poly::new(coeffs)
    }

    /// Rebuilds from a y-polynomial over K by clearing denominators;
    /// the result is normalized to integer coprime coefficients.
    pub fn from_kpoly_in_y(p: &KPoly) -> Self {
        let mut den = UniPoly::one();
        for c in p.coeffs() {
            den = den.mul(c.den()).exact_div(&den.gcd(c.den())).unwrap();
        }
        let mut out = BiPoly::zero();
        for (j, c) in p.coeffs().iter().enumerate() {
            let lifted = c.num().mul(&den.exact_div(c.den()).unwrap());
            for (i, a) in lifted.coeffs().iter().enumerate() {
                if !a.is_zero() {
                    out = out.add(&BiPoly::monomial(a.clone(), i as u32, j as u32));
                }
            }
        }
        out.normalized()
    }

    /// Evaluates x := x0; the result is a polynomial in y.
    pub fn eval_x(&self, x0: &BigRat) -> UniPoly {
        let dy = self.deg_y() as usize;
        let mut coeffs = vec![BigRat::zero(); dy + 1];
        for (c, i, j) in &self.terms {
            let mut term = c.clone();
            for _ in 0..*i {
                term *= x0;
            }
            coeffs[*j as usize] += term;
        }
        Poly::new(coeffs)
    }

    /// Full evaluation at field points (x0, y0) of K.
    pub fn eval(&self, x0: &RatFunc, y0: &RatFunc) -> RatFunc {
        let mut acc = RatFunc::zero();
        for (c, i, j) in &self.terms {
            let mut term = RatFunc::from_rat(c.clone());
            for _ in 0..*i {
                term = term.mul(x0);
            }
            for _ in 0..*j {
                term = term.mul(y0);
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Scales to coprime integer coefficients with a positive
    /// coefficient on the leading (ydeg-major) term.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return BiPoly::zero();
        }
        let mut den_lcm = BigInt::one();
        for (c, _, _) in &self.terms {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for (c, _, _) in &self.terms {
            num_gcd = num_gcd.gcd(&(c.numer() * &den_lcm / c.denom()));
        }
        let mut scale = BigRat::new(den_lcm, num_gcd);
        let lead = self
            .terms
            .iter()
            .max_by_key(|&&(_, i, j)| (j, i))
            .unwrap();
        if (&lead.0 * &scale).is_negative() {
            scale = -scale;
        }
        self.scale(&scale)
    }

    /// Content with respect to y: the monic gcd in Q[x] of all
    /// y-coefficients. Nonconstant content means a factor free of y.
    pub fn content_y(&self) -> UniPoly {
        let mut g = UniPoly::zero();
        for j in 0..=self.deg_y() {
            g = g.gcd(&self.coeff_of_y(j));
        }
        g
    }

    /// Content with respect to x (gcd in Q[y] of the x-coefficients).
    pub fn content_x(&self) -> UniPoly {
        self.swap_xy().content_y()
    }

    /// Term list in the canonical serialized form.
    pub fn to_term_list(&self) -> Vec<(String, u32, u32)> {
        self.terms
            .iter()
            .map(|(c, i, j)| (c.to_string(), *i, *j))
            .collect()
    }

    pub fn from_term_list(terms: &[(String, u32, u32)]) -> Result<Self> {
        let mut out = Vec::with_capacity(terms.len());
        for (c, i, j) in terms {
            out.push((parse_rat(c)?, *i, *j));
        }
        Ok(BiPoly::new(out))
    }

    pub fn parse(input: &str) -> Result<Self> {
        crate::parse::parse_bipoly(input)
    }
}

/// Sylvester resultant of `f` and `g` eliminating `var`; the result is
/// a polynomial in the remaining variable. Zero iff the two share a
/// factor of positive degree in `var`. Errors on zero input.
pub fn resultant(f: &BiPoly, g: &BiPoly, var: Var) -> Result<BiPoly> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::validation("resultant of the zero polynomial"));
    }
    match var {
        Var::Y => resultant_y(f, g),
        Var::X => Ok(resultant_y(&f.swap_xy(), &g.swap_xy())?.swap_xy()),
    }
}

fn resultant_y(f: &BiPoly, g: &BiPoly) -> Result<BiPoly> {
    let fp = f.as_kpoly_in_y();
    let gp = g.as_kpoly_in_y();
    let (df, dg) = (fp.deg(), gp.deg());
    if df == 0 && dg == 0 {
        return Ok(BiPoly::constant(BigRat::one()));
    }
    if df == 0 {
        // Res(c, g) = c^{deg g}
        let c = fp.coeff(0);
        let mut acc = RatFunc::one();
        for _ in 0..dg {
            acc = acc.mul(&c);
        }
        return bipoly_from_k(&acc);
    }
    if dg == 0 {
        let c = gp.coeff(0);
        let mut acc = RatFunc::one();
        for _ in 0..df {
            acc = acc.mul(&c);
        }
        return bipoly_from_k(&acc);
    }
    let n = df + dg;
    let mut s: Matrix<RatFunc> = Matrix::zero(n, n);
    for r in 0..dg {
        for (k, c) in fp.coeffs().iter().enumerate() {
            *s.at_mut(r, r + df - k) = c.clone();
        }
    }
    for r in 0..df {
        for (k, c) in gp.coeffs().iter().enumerate() {
            *s.at_mut(dg + r, r + dg - k) = c.clone();
        }
    }
    bipoly_from_k(&s.det())
}

fn bipoly_from_k(v: &RatFunc) -> Result<BiPoly> {
    let p = v
        .as_poly()
        .ok_or_else(|| Error::validation("resultant produced a non-polynomial value"))?;
    let mut out = BiPoly::zero();
    for (i, c) in p.coeffs().iter().enumerate() {
        if !c.is_zero() {
            out = out.add(&BiPoly::monomial(c.clone(), i as u32, 0));
        }
    }
    Ok(out)
}

/// Discriminant certificate in y: `resultant(f, df/dy, y)`.
pub fn discriminant_y(f: &BiPoly) -> Result<BiPoly> {
    let d = f.derivative(Var::Y);
    if d.is_zero() {
        return Ok(BiPoly::zero());
    }
    resultant(f, &d, Var::Y)
}

impl std::fmt::Display for BiPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut sorted = self.terms.clone();
        sorted.sort_by(|a, b| (b.2, b.1).cmp(&(a.2, a.1)));
        let mut out = String::new();
        for (c, i, j) in &sorted {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || (*i == 0 && *j == 0) {
                factors.push(abs.to_string());
            }
            match i {
                0 => {}
                1 => factors.push("x".into()),
                _ => factors.push(format!("x^{i}")),
            }
            match j {
                0 => {}
                1 => factors.push("y".into()),
                _ => factors.push(format!("y^{j}")),
            }
            out.push_str(&factors.join("*"));
        }
        write!(f, "{out}")
    }
}

impl std::fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn canonical_terms() {
        let p = BiPoly::new(vec![
            (rat_int(1), 1, 0),
            (rat_int(2), 0, 1),
            (rat_int(-2), 0, 1),
        ]);
        assert_eq!(p, BiPoly::x());
        assert_eq!(p.deg_x(), 1);
        assert_eq!(p.deg_y(), 0);
    }

    #[test]
    fn display_order() {
        // y-major descending: x - y - 1 after a swap of y - x - 1... check both
        let p = BiPoly::y()
            .sub(&BiPoly::x())
            .sub(&BiPoly::constant(rat_int(1)));
        assert_eq!(p.to_string(), "y - x - 1");
        assert_eq!(p.swap_xy().to_string(), "-y + x - 1");
        let fam = BiPoly::parse("(x^2+2)*y^2 - (x^2+1)").unwrap();
        assert_eq!(fam.to_string(), "x^2*y^2 + 2*y^2 - x^2 - 1");
    }

    #[test]
    fn resultants() {
        // F = y - x, G = y - x - 1 eliminating y: -1
        let f = BiPoly::y().sub(&BiPoly::x());
        let g = BiPoly::y().sub(&BiPoly::x()).sub(&BiPoly::constant(rat_int(1)));
        assert_eq!(
            resultant(&f, &g, Var::Y).unwrap(),
            BiPoly::constant(rat_int(-1))
        );
        // F = y^2 - x against dF/dy = 2y: -4x (Sylvester sign convention)
        let f = BiPoly::y().mul(&BiPoly::y()).sub(&BiPoly::x());
        assert_eq!(
            resultant(&f, &f.derivative(Var::Y), Var::Y).unwrap(),
            BiPoly::monomial(rat_int(-4), 1, 0)
        );
        // Shared factor -> 0
        let h = BiPoly::y().sub(&BiPoly::x());
        assert!(resultant(&h, &h, Var::Y).unwrap().is_zero());
        assert!(resultant(&BiPoly::zero(), &h, Var::Y).is_err());
    }

    #[test]
    fn content_checks() {
        // x*(y - 1): content in y is x
        let p = BiPoly::x().mul(&BiPoly::y().sub(&BiPoly::constant(rat_int(1))));
        assert_eq!(p.content_y(), UniPoly::from_i64(&[0, 1]));
        let fam = BiPoly::parse("(x^2+2)*y^2 - (x^2+1)").unwrap();
        assert_eq!(fam.content_y(), UniPoly::one());
    }

    #[test]
    fn normalization() {
        let p = BiPoly::new(vec![(rat(1, 2), 0, 2), (rat(1, 3), 1, 0)]);
        let n = p.normalized();
        assert_eq!(
            n,
            BiPoly::new(vec![(rat_int(3), 0, 2), (rat_int(2), 1, 0)])
        );
        let m = p.neg().normalized();
        assert_eq!(m, n);
    }

    #[test]
    fn kpoly_round_trip() {
        let fam = BiPoly::parse("(x^2+2)*y^2 - (x^2+1)").unwrap();
        let kp = fam.as_kpoly_in_y();
        assert_eq!(kp.deg(), 2);
        assert_eq!(BiPoly::from_kpoly_in_y(&kp), fam);
        let monic = kp.monic();
        assert_eq!(BiPoly::from_kpoly_in_y(&monic), fam);
    }

    #[test]
    fn term_list_round_trip() {
        let fam = BiPoly::parse("(x^2+2)*y^2 - (x^2+1)").unwrap();
        let tl = fam.to_term_list();
        assert_eq!(BiPoly::from_term_list(&tl).unwrap(), fam);
    }
}
