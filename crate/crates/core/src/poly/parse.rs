//! Expression parser for maps, points and field values.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | 'x' | 'g' | '(' expr ')'
//! ```
//!
//! Integers are reduced mod p and `g` is the stored generator of the field.

use crate::error::{Error, Result};
use crate::field::{Fe, Field};

use super::ratmap::{reduce_map, PointP1, RatMap};
use super::Poly;

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse { offset, message: message.into() }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    field: &'a Field,
}

type Frac = (Poly, Poly);

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn integer(&mut self) -> Option<u128> {
        self.skip_ws();
        let start = self.pos;
        let mut v: u128 = 0;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            v = v.saturating_mul(10).saturating_add((self.s[self.pos] - b'0') as u128);
            self.pos += 1;
        }
        (self.pos > start).then_some(v)
    }

    fn expr(&mut self) -> Result<Frac> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            let (n1, d1) = &acc;
            let (n2, d2) = &rhs;
            let a = n1 * d2;
            let b = n2 * d1;
            let n = if c == b'+' { &a + &b } else { &a - &b };
            acc = normalize(n, d1 * d2);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Frac> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            let at = self.pos;
            self.pos += 1;
            let (n2, d2) = self.unary()?;
            let (n1, d1) = &acc;
            acc = if c == b'*' {
                normalize(n1 * &n2, d1 * &d2)
            } else {
                if n2.is_zero() {
                    return Err(err(at, "division by zero"));
                }
                normalize(n1 * &d2, d1 * &n2)
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Frac> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            let (n, d) = self.unary()?;
            return Ok((-&n, d));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Frac> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            let at = self.pos;
            self.pos += 1;
            let e = self.integer().ok_or_else(|| err(at, "expected a nonnegative integer exponent after '^'"))?;
            let e = u64::try_from(e).map_err(|_| err(at, "exponent too large"))?;
            return Ok((base.0.pow(e), base.1.pow(e)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Frac> {
        let f = self.field;
        let one = Poly::one(f);
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok((Poly::x(f), one))
            }
            Some(b'g') => {
                self.pos += 1;
                Ok((Poly::constant(f, f.generator()), one))
            }
            Some(b'(') => {
                let open = self.pos;
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(err(self.pos.max(open), "expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer().expect("digit present");
                let c = f.from_u64((n % f.characteristic() as u128) as u64);
                Ok((Poly::constant(f, c), one))
            }
            Some(c) => Err(err(self.pos, format!("unexpected character '{}'", c as char))),
            None => Err(err(self.pos, "unexpected end of input")),
        }
    }
}

fn normalize(n: Poly, d: Poly) -> Frac {
    if n.is_zero() {
        let f = d.field().clone();
        return (n, Poly::one(&f));
    }
    let g = n.gcd(&d);
    if g.deg0() == 0 {
        (n, d)
    } else {
        (n.exact_div(&g), d.exact_div(&g))
    }
}

/// Parses a rational expression into an unreduced numerator/denominator pair.
pub fn parse_rational(text: &str, field: &Field) -> Result<(Poly, Poly)> {
    let mut p = Parser { s: text.as_bytes(), pos: 0, field };
    let v = p.expr()?;
    if p.peek().is_some() {
        return Err(err(p.pos, "trailing input"));
    }
    Ok(v)
}

/// Parses and reduces a map expression.
pub fn parse_map(text: &str, field: &Field) -> Result<RatMap> {
    let (n, d) = parse_rational(text, field)?;
    reduce_map(&n, &d)
}

/// Parses a constant expression such as `3`, `g^2+1` or `-1/2`.
pub fn parse_value(text: &str, field: &Field) -> Result<Fe> {
    let (n, d) = parse_rational(text, field)?;
    if n.deg0() > 0 || d.deg0() > 0 {
        return Err(err(0, "expected a constant, found an expression in x"));
    }
    field.div(n.coeff(0), d.coeff(0))
}

/// Parses a point of `P¹`: a constant expression or `inf`.
pub fn parse_point(text: &str, field: &Field) -> Result<PointP1> {
    let t = text.trim();
    if t == "inf" || t == "∞" {
        return Ok(PointP1::Infinity);
    }
    parse_value(t, field).map(PointP1::Affine)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_maps() {
        let f = Field::prime(5).unwrap();
        let m = parse_map("(x^7 - 2*x)", &f).unwrap();
        assert_eq!(m.degree(), 7);
        assert!(m.is_polynomial());
        assert_eq!(m.render(), "x^7-2*x");
        let r = parse_map("(x^5*(x^10+x^7-2*x)+1)/(x^10+x^7-2*x)", &f).unwrap();
        assert_eq!(r.degree(), 15);
    }

    #[test]
    fn error_positions() {
        let f = Field::prime(5).unwrap();
        assert_eq!(parse_map("x^^2", &f).unwrap_err(), Error::Parse { offset: 1, message: "expected a nonnegative integer exponent after '^'".into() });
        assert_eq!(parse_map("(x^2+1)/(x^2+1)", &f).unwrap_err(), Error::ConstantMap);
        assert!(matches!(parse_map("x +", &f), Err(Error::Parse { offset: 3, .. })));
        assert!(matches!(parse_map("x y", &f), Err(Error::Parse { offset: 2, .. })));
    }

    #[test]
    fn points_and_values() {
        let f = Field::new(3, 2, None).unwrap();
        assert_eq!(parse_point("inf", &f).unwrap(), PointP1::Infinity);
        let g = f.generator();
        assert_eq!(parse_point("g^2", &f).unwrap(), PointP1::Affine(f.mul(g, g)));
        assert_eq!(parse_value("1/2", &f).unwrap(), f.from_int(2));
        assert_eq!(parse_value(&f.format(f.add(g, Fe::ONE)), &f).unwrap(), f.add(g, Fe::ONE));
    }
}
