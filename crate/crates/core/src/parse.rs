//! Expression parser for relations and rational functions.
//!
//! Grammar (whitespace-insensitive):
//!   expr   := ['-'] term (('+' | '-') term)*
//!   term   := factor (('*' | '/') factor)*
//!   factor := atom ['^' integer]
//!   atom   := '(' expr ')' | integer | variable
//!
//! Relations use the variables x and y; rational functions use t.
//! Division is evaluated exactly, so `(x^2+1)/2` is accepted in a
//! relation while `(x+1)/y` is rejected when a polynomial is required.

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::rat::{BigInt, BigRat};
use crate::ratfunc::{Frac, RatFunc};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(input: &str, vars: &[char]) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                chars.next();
            }
            '+' => {
                chars.next();
                toks.push(Tok::Plus);
            }
            '-' => {
                chars.next();
                toks.push(Tok::Minus);
            }
            '*' => {
                chars.next();
                toks.push(Tok::Star);
            }
            '/' => {
                chars.next();
                toks.push(Tok::Slash);
            }
            '^' => {
                chars.next();
                toks.push(Tok::Caret);
            }
            '(' => {
                chars.next();
                toks.push(Tok::LParen);
            }
            ')' => {
                chars.next();
                toks.push(Tok::RParen);
            }
            '0'..='9' => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        s.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                toks.push(Tok::Num(s.parse().unwrap()));
            }
            _ if vars.contains(&c) => {
                chars.next();
                toks.push(Tok::Var(c));
            }
            _ => {
                return Err(Error::validation(format!(
                    "unexpected character {c:?} in expression"
                )))
            }
        }
    }
    Ok(toks)
}

/// An unreduced bivariate fraction; division stays exact symbolically
/// and callers decide what shape they require at the end.
#[derive(Clone)]
struct BiRat {
    num: BiPoly,
    den: BiPoly,
}

impl BiRat {
    fn from_poly(p: BiPoly) -> Self {
        BiRat {
            num: p,
            den: BiPoly::constant(BigRat::from_integer(1.into())),
        }
    }
    fn add(&self, o: &Self) -> Self {
        BiRat {
            num: self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            den: self.den.mul(&o.den),
        }
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn neg(&self) -> Self {
        BiRat {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn mul(&self, o: &Self) -> Self {
        BiRat {
            num: self.num.mul(&o.num),
            den: self.den.mul(&o.den),
        }
    }
    fn div(&self, o: &Self) -> Result<Self> {
        if o.num.is_zero() {
            return Err(Error::validation("division by zero in expression"));
        }
        Ok(BiRat {
            num: self.num.mul(&o.den),
            den: self.den.mul(&o.num),
        })
    }
    fn pow(&self, e: u32) -> Self {
        BiRat {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }
    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<BiRat> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.next();
                self.term()?.neg()
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.next();
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<BiRat> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.next();
                    acc = acc.mul(&self.factor()?);
                }
                Some(Tok::Slash) => {
                    self.next();
                    let rhs = self.factor()?;
                    acc = acc.div(&rhs)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<BiRat> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.next();
            match self.next() {
                Some(Tok::Num(n)) => {
                    let e: u32 = n.try_into().map_err(|_| {
                        Error::validation("exponent out of range in expression")
                    })?;
                    Ok(base.pow(e))
                }
                _ => Err(Error::validation(
                    "expected a nonnegative integer exponent after '^'",
                )),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<BiRat> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(BiRat::from_poly(BiPoly::constant(BigRat::from_integer(n)))),
            Some(Tok::Var('y')) => Ok(BiRat::from_poly(BiPoly::y())),
            Some(Tok::Var(_)) => Ok(BiRat::from_poly(BiPoly::x())),
            Some(Tok::Minus) => Ok(self.atom()?.neg()),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(Error::validation("unbalanced parentheses in expression")),
                }
            }
            other => Err(Error::validation(format!(
                "unexpected token in expression: {other:?}"
            ))),
        }
    }
}

fn parse_birat(input: &str, vars: &[char]) -> Result<BiRat> {
    let toks = tokenize(input, vars)?;
    if toks.is_empty() {
        return Err(Error::validation("empty expression"));
    }
    let mut p = Parser { toks, pos: 0 };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::validation("trailing input after expression"));
    }
    Ok(v)
}

/// Parses a bivariate polynomial in x and y; the denominator of the
/// evaluated expression must be a nonzero constant.
pub fn parse_bipoly(input: &str) -> Result<BiPoly> {
    let v = parse_birat(input, &['x', 'y'])?;
    if v.den.deg_x() > 0 || v.den.deg_y() > 0 {
        return Err(Error::validation(
            "expression is not polynomial: nonconstant denominator",
        ));
    }
    let c = v.den.terms().first().map(|(c, _, _)| c.clone()).unwrap();
    Ok(v.num.scale(&c.recip()))
}

/// Parses an element of K = Q(t) written over the variable t.
pub fn parse_ratfunc(input: &str) -> Result<RatFunc> {
    let v = parse_birat(input, &['t'])?;
    for part in [&v.num, &v.den] {
        if part.deg_y() > 0 {
            return Err(Error::validation("unexpected variable y in a field element"));
        }
    }
    Frac::new(to_unipoly(&v.num), to_unipoly(&v.den))
}

fn to_unipoly(p: &BiPoly) -> UniPoly {
    p.coeff_of_y(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn relation_parsing() {
        let fam = parse_bipoly("(x^2+2)*y^2 - (x^2+1)").unwrap();
        assert_eq!(
            fam,
            BiPoly::new(vec![
                (rat_int(1), 2, 2),
                (rat_int(2), 0, 2),
                (rat_int(-1), 2, 0),
                (rat_int(-1), 0, 0),
            ])
        );
        assert_eq!(parse_bipoly("y - x").unwrap(), BiPoly::y().sub(&BiPoly::x()));
        assert_eq!(
            parse_bipoly("-y + x").unwrap(),
            BiPoly::y().sub(&BiPoly::x()).neg()
        );
        // Rational scalar division is fine; division by y is not.
        assert_eq!(
            parse_bipoly("y/2 - 1/2").unwrap(),
            BiPoly::new(vec![(rat(1, 2), 0, 1), (rat(-1, 2), 0, 0)])
        );
        assert!(parse_bipoly("x/y").is_err());
        assert!(parse_bipoly("x + ").is_err());
        assert!(parse_bipoly("(x").is_err());
        assert!(parse_bipoly("z + 1").is_err());
    }

    #[test]
    fn whitespace_insensitive() {
        assert_eq!(
            parse_bipoly(" ( x^2 + 2 ) *y^2-( x^2+1 ) ").unwrap(),
            parse_bipoly("(x^2+2)*y^2-(x^2+1)").unwrap()
        );
    }

    #[test]
    fn ratfunc_parsing() {
        let m = parse_ratfunc("(t^2+1)/(t^2+2)").unwrap();
        assert_eq!(m.to_string(), "(t^2 + 1)/(t^2 + 2)");
        let c = parse_ratfunc("3/4").unwrap();
        assert_eq!(c, RatFunc::from_rat(rat(3, 4)));
        assert!(parse_ratfunc("1/0").is_err());
        assert!(parse_ratfunc("y + 1").is_err());
        // Display round-trips through the parser.
        let s = m.to_string();
        assert_eq!(parse_ratfunc(&s).unwrap(), m);
    }

    #[test]
    fn power_binds_tighter_than_product() {
        // 2*x^2 = 2*(x^2), and -x^2 = -(x^2)
        assert_eq!(
            parse_bipoly("2*x^2").unwrap(),
            BiPoly::monomial(rat_int(2), 2, 0)
        );
        assert_eq!(
            parse_bipoly("0 - x^2").unwrap(),
            BiPoly::monomial(rat_int(-1), 2, 0)
        );
    }
}
