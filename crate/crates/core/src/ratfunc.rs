//! Fraction fields of polynomial rings, kept in canonical form.
//!
//! `Frac<F>` is the field of fractions of `Poly<F>` with the
//! invariants gcd(num, den) = 1, den monic, den nonzero. With
//! `F = BigRat` this is K = Q(t), the field every module in this
//! library is defined over; with `F = RatFunc` it is K(x), which the
//! characteristic polynomial and resultant code uses internally.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{format_poly, Poly, UniPoly};
use crate::rat::BigRat;

#[derive(Clone, PartialEq, Eq)]
pub struct Frac<F: Field> {
    num: Poly<F>,
    den: Poly<F>,
}

/// An element of K = Q(t).
pub type RatFunc = Frac<BigRat>;

/// An element of K[x]: polynomials in a second variable over Q(t).
pub type KPoly = Poly<RatFunc>;

impl<F: Field> Frac<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::validation("rational function with zero denominator"));
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Poly<F>, den: Poly<F>) -> Self {
        if num.is_zero() {
            return Frac {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let mut n = num.exact_div(&g).unwrap();
        let mut d = den.exact_div(&g).unwrap();
        let li = d.lc().unwrap().inv().unwrap();
        if !li.is_one() {
            n = n.scale(&li);
            d = d.scale(&li);
        }
        Frac { num: n, den: d }
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        Frac {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: F) -> Self {
        Frac::from_poly(Poly::constant(c))
    }

    /// The generator of the field: `t` for K = Q(t).
    pub fn var() -> Self {
        Frac::from_poly(Poly::var())
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_poly(&self) -> bool {
        self.den.deg() == 0
    }

    /// The underlying polynomial when the denominator is 1.
    pub fn as_poly(&self) -> Option<&Poly<F>> {
        if self.den.is_one_poly() {
            Some(&self.num)
        } else {
            None
        }
    }
}

impl<F: Field> Poly<F> {
    fn is_one_poly(&self) -> bool {
        self.degree() == Some(0) && self.lc().map(Field::is_one).unwrap_or(false)
    }
}

impl<F: Field> Field for Frac<F> {
    fn zero() -> Self {
        Frac {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }
    fn one() -> Self {
        Frac {
            num: Poly::one(),
            den: Poly::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        Frac::reduced(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }
    fn sub(&self, other: &Self) -> Self {
        Frac::reduced(
            self.num.mul(&other.den).sub(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }
    fn neg(&self) -> Self {
        Frac {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        // Cross-cancel before multiplying to limit coefficient growth.
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.exact_div(&g1).unwrap();
        let d2 = other.den.exact_div(&g1).unwrap();
        let n2 = other.num.exact_div(&g2).unwrap();
        let d1 = self.den.exact_div(&g2).unwrap();
        Frac::reduced(n1.mul(&n2), d1.mul(&d2))
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Frac::reduced(self.den.clone(), self.num.clone()))
    }
    fn from_i64(v: i64) -> Self {
        Frac::constant(F::from_i64(v))
    }
}

impl RatFunc {
    /// Parses an expression over the variable `t`, e.g. `(t^2+1)/(t^2+2)`.
    pub fn parse(input: &str) -> Result<RatFunc> {
        crate::parse::parse_ratfunc(input)
    }

    pub fn from_rat(c: BigRat) -> Self {
        Frac::constant(c)
    }

    pub fn from_int(v: i64) -> Self {
        <RatFunc as Field>::from_i64(v)
    }
}

impl std::fmt::Display for RatFunc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den.is_one_poly() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl<F: Field> std::fmt::Debug for Frac<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Frac({:?}/{:?})", self.num, self.den)
    }
}

/// Display for K[x]: coefficients from K are parenthesized whenever
/// they are not a plain monomial-free constant.
impl std::fmt::Display for KPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let needs_wrap = |c: &RatFunc| {
            let s = c.to_string();
            s.contains('+') || s.contains(' ') || !c.is_poly() || c.num().deg() > 0
        };
        write!(
            f,
            "{}",
            format_poly(self, "x", |c| c.to_string(), needs_wrap)
        )
    }
}

/// True iff `m` is the square of an element of K = Q(t).
///
/// `m = h^2` exactly when num*den is a square in Q[t]: every
/// squarefree part of odd multiplicity must be constant and the
/// leading rational must be a rational square. Errors on zero.
pub fn is_square_in_k(m: &RatFunc) -> Result<bool> {
    if m.is_zero() {
        return Err(Error::validation("square test on zero"));
    }
    let prod: UniPoly = m.num().mul(m.den());
    let (lc, parts) = crate::poly::yun_squarefree(&prod)?;
    if parts.iter().any(|(_, mult)| mult % 2 == 1) {
        return Ok(false);
    }
    Ok(crate::field::rat_is_square(&lc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    fn pq(n: &[i64], d: &[i64]) -> RatFunc {
        Frac::new(UniPoly::from_i64(n), UniPoly::from_i64(d)).unwrap()
    }

    #[test]
    fn canonical_form() {
        // (t^2-1)/(2t-2) reduces to (t+1)/2 with monic denominator
        let f = pq(&[-1, 0, 1], &[-2, 2]);
        assert_eq!(f, pq(&[1, 1], &[2]));
        assert!(f.den().lc().unwrap().is_one() || f.den().deg() == 0);
        assert!(Frac::new(UniPoly::one(), UniPoly::zero()).is_err());
    }

    #[test]
    fn field_ops() {
        let a = pq(&[1, 1], &[0, 1]); // (t+1)/t
        let b = pq(&[0, 1], &[1, 1]); // t/(t+1)
        assert!(a.mul(&b).is_one());
        assert_eq!(a.mul(&a.inv().unwrap()), RatFunc::one());
        let s = a.add(&b);
        assert_eq!(s.sub(&b), a);
    }

    #[test]
    fn square_detection() {
        // (t^2+1)/(t^2+2): not a square
        assert!(!is_square_in_k(&pq(&[1, 0, 1], &[2, 0, 1])).unwrap());
        // (t^2+2t+1)/4 = ((t+1)/2)^2
        assert!(is_square_in_k(&pq(&[1, 2, 1], &[4])).unwrap());
        // t: odd degree
        assert!(!is_square_in_k(&pq(&[0, 1], &[1])).unwrap());
        // -(t+1)^2: negative leading rational
        assert!(!is_square_in_k(&pq(&[-1, -2, -1], &[1])).unwrap());
        assert!(is_square_in_k(&RatFunc::zero()).is_err());
        // 9/4 is a square constant
        assert!(is_square_in_k(&RatFunc::from_rat(rat(9, 4))).unwrap());
        assert!(!is_square_in_k(&RatFunc::from_rat(rat_int(2))).unwrap());
    }

    #[test]
    fn display_round_trip_shapes() {
        assert_eq!(pq(&[1, 0, 1], &[2, 0, 1]).to_string(), "(t^2 + 1)/(t^2 + 2)");
        assert_eq!(pq(&[1, 1], &[1]).to_string(), "t + 1");
        assert_eq!(RatFunc::zero().to_string(), "0");
    }
}
