//! Canonical text form of scalars.
//!
//! A Laurent polynomial prints its terms by descending exponent, e.g.
//! `v^6 - 1/2*v^2 + (1+2i)`. A scalar with a nontrivial denominator prints
//! as `(num)/(den)`. A radical scalar `a + b·C` prints as `[a] + [b]*C`.
//! Printing and parsing round-trip exactly.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::gauss::GaussRat;
use super::laurent::Laurent;
use super::radical::{RadScalar, ScalarContext};
use super::ratfunc::Scalar;
use super::ScalarError;

fn fmt_term(exp: i32, c: &GaussRat, var: &dyn Fn(i32) -> String) -> String {
    if exp == 0 {
        return c.fmt_coeff();
    }
    let v = var(exp);
    if c.is_one() {
        v
    } else if c.is_neg_one() {
        format!("-{}", v)
    } else {
        format!("{}*{}", c.fmt_coeff(), v)
    }
}

fn join_terms(terms: Vec<String>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, t) in terms.into_iter().enumerate() {
        if k == 0 {
            out.push_str(&t);
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&t);
        }
    }
    out
}

fn fmt_laurent(p: &Laurent) -> String {
    let var = |e: i32| format!("v^{}", e);
    join_terms(p.terms().iter().rev().map(|(e, c)| fmt_term(*e, c, &var)).collect())
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator().is_one() {
            f.write_str(&fmt_laurent(self.numerator()))
        } else {
            write!(f, "({})/({})", fmt_laurent(self.numerator()), fmt_laurent(self.denominator()))
        }
    }
}

impl fmt::Display for RadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radical_part().is_zero() {
            write!(f, "{}", self.rational_part())
        } else {
            write!(f, "[{}] + [{}]*C", self.rational_part(), self.radical_part())
        }
    }
}

/// Human rendering with exponents of `q`, ascending, e.g. `q^-2 - 1 + q^2`.
pub fn pretty_q(s: &Scalar, d: u32) -> String {
    let var = |e: i32| {
        let g = (e as i64).gcd(&(d as i64));
        let (n, m) = (e as i64 / g, d as i64 / g);
        match (n, m) {
            (1, 1) => "q".to_string(),
            (_, 1) => format!("q^{}", n),
            _ => format!("q^({}/{})", n, m),
        }
    };
    let render = |p: &Laurent| join_terms(p.terms().iter().map(|(e, c)| fmt_term(*e, c, &var)).collect());
    if s.denominator().is_one() {
        render(s.numerator())
    } else {
        format!("({})/({})", render(s.numerator()), render(s.denominator()))
    }
}

struct Cursor<'a> {
    s: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn rest(&self) -> &'a str {
        &self.s[self.pos..]
    }

    fn eat(&mut self, tok: &str) -> bool {
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Option<BigInt> {
        let rest = self.rest();
        let mut len = 0;
        for (k, ch) in rest.char_indices() {
            if ch.is_ascii_digit() || (k == 0 && ch == '-') {
                len = k + 1;
            } else {
                break;
            }
        }
        if len == 0 || &rest[..len] == "-" {
            return None;
        }
        let n = rest[..len].parse().ok()?;
        self.pos += len;
        Some(n)
    }

    fn rational(&mut self) -> Option<BigRational> {
        let n = self.integer()?;
        if self.eat("/") {
            let d = self.integer()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        } else {
            Some(BigRational::from_integer(n))
        }
    }

    /// A coefficient: `r`, `ri`, `i`, `-i`, or `(r±ri)`.
    fn coeff(&mut self) -> Option<GaussRat> {
        if self.eat("(") {
            let re = self.rational()?;
            let im = if self.eat("+i") {
                BigRational::one()
            } else if self.eat("-i") {
                -BigRational::one()
            } else {
                self.eat("+");
                let r = self.rational()?;
                if !self.eat("i") {
                    return None;
                }
                r
            };
            if !self.eat(")") {
                return None;
            }
            return Some(GaussRat::new(re, im));
        }
        if self.eat("-i") {
            return Some(-GaussRat::i());
        }
        if self.eat("i") {
            return Some(GaussRat::i());
        }
        let r = self.rational()?;
        if self.eat("i") {
            Some(GaussRat::new(BigRational::zero(), r))
        } else {
            Some(GaussRat::real(r))
        }
    }

    fn term(&mut self) -> Option<(i32, GaussRat)> {
        let neg_var = self.rest().starts_with("-v^");
        if neg_var {
            self.pos += 1;
        }
        if self.eat("v^") {
            let e: i32 = self.integer()?.try_into().ok()?;
            let c = if neg_var { -GaussRat::one() } else { GaussRat::one() };
            return Some((e, c));
        }
        let c = self.coeff()?;
        if self.eat("*v^") {
            let e: i32 = self.integer()?.try_into().ok()?;
            Some((e, c))
        } else {
            Some((0, c))
        }
    }

    fn laurent(&mut self) -> Option<Laurent> {
        if self.rest().starts_with('0') && !self.rest()[1..].starts_with(|c: char| c.is_ascii_digit() || c == '/') {
            self.pos += 1;
            return Some(Laurent::zero());
        }
        let mut terms = vec![self.term()?];
        loop {
            if self.eat(" + ") {
                terms.push(self.term()?);
            } else if self.eat(" - ") {
                let (e, c) = self.term()?;
                terms.push((e, -c));
            } else {
                break;
            }
        }
        Some(Laurent::from_terms(terms))
    }
}

fn parse_laurent_exact(s: &str) -> Option<Laurent> {
    let mut cur = Cursor { s, pos: 0 };
    let p = cur.laurent()?;
    if cur.pos == s.len() {
        Some(p)
    } else {
        None
    }
}

/// Parses the canonical text form. Non-canonical inputs are rejected so
/// that `parse(print(x)) == x` and `print(parse(s)) == s`.
pub fn parse_scalar(s: &str) -> Result<Scalar, ScalarError> {
    let err = || ScalarError::Parse(s.to_string());
    let value = if let Some(split) = s.find(")/(") {
        let num_s = s.strip_prefix('(').ok_or_else(err)?;
        let num = parse_laurent_exact(&num_s[..split - 1]).ok_or_else(err)?;
        let den_s = s[split + 3..].strip_suffix(')').ok_or_else(err)?;
        let den = parse_laurent_exact(den_s).ok_or_else(err)?;
        Scalar::from_parts(num, den)?
    } else {
        Scalar::from_laurent(parse_laurent_exact(s).ok_or_else(err)?)
    };
    if value.to_string() != s {
        return Err(err());
    }
    Ok(value)
}

pub fn parse_rad_scalar(s: &str, ctx: &Arc<ScalarContext>) -> Result<RadScalar, ScalarError> {
    let err = || ScalarError::Parse(s.to_string());
    if let Some(inner) = s.strip_prefix('[') {
        let inner = inner.strip_suffix("]*C").ok_or_else(err)?;
        let split = inner.find("] + [").ok_or_else(err)?;
        let a = parse_scalar(&inner[..split])?;
        let b = parse_scalar(&inner[split + 5..])?;
        RadScalar::new(a, b, ctx.clone())
    } else {
        Ok(RadScalar::rational(parse_scalar(s)?, ctx))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prints_canonical_forms() {
        let s = &Scalar::v_pow(6) + &Scalar::v_pow(-6);
        let half = &s * &Scalar::from_ratio(1, 2);
        assert_eq!(half.to_string(), "1/2*v^6 + 1/2*v^-6");
        let f = &Scalar::one() / &(&Scalar::v_pow(2) - &Scalar::one());
        assert_eq!(f.to_string(), "(1)/(v^2 - 1)");
        let z = &Scalar::i() * &Scalar::v_pow(-1);
        assert_eq!(z.to_string(), "i*v^-1");
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!(pretty_q(&(&Scalar::v_pow(-4) - &Scalar::one()), 2), "q^-2 - 1");
        assert_eq!(pretty_q(&Scalar::v_pow(3), 2), "q^(3/2)");
    }

    #[test]
    fn parses_what_it_prints() {
        for text in ["0", "1", "-v^2 + 3/4 - i*v^-1", "(1+2i)*v^3 + (-1+1/2i)", "(v^6 - 1/2*v^2)/(v^4 + 2*v^2 + 1)", "-3i"] {
            let s = parse_scalar(text).unwrap();
            assert_eq!(s.to_string(), text);
        }
        assert!(parse_scalar("v^2 +").is_err());
        assert!(parse_scalar("(2)/(2)").is_err());
    }
}
