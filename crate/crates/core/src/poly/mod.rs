//! Univariate polynomials, rational maps of the projective line, local
//! series expansions and Möbius transformations.

mod factor;
mod mobius;
mod parse;
mod ratmap;
mod residue;
mod series;

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{Embedding, Fe, Field};

pub use factor::{distinct_irreducible_factors, is_irreducible};
pub use mobius::Mobius;
pub use parse::{parse_map, parse_point, parse_rational, parse_value};
pub use ratmap::{reduce_map, PointP1, RatMap, RationalFunction};
pub use residue::ResidueField;
pub use series::{local_expansion, series_div, shift_slice, LocalSeries, Place};

/// A polynomial over a [`Field`], lowest coefficient first, with trailing
/// zeros trimmed.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Fe>,
}

impl std::fmt::Debug for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poly({})", self.render())
    }
}

impl Poly {
    pub fn new(field: &Field, mut coeffs: Vec<Fe>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field, Fe::ONE)
    }

    pub fn constant(field: &Field, c: Fe) -> Poly {
        Poly::new(field, vec![c])
    }

    pub fn x(field: &Field) -> Poly {
        Poly::monomial(field, Fe::ONE, 1)
    }

    pub fn monomial(field: &Field, c: Fe, n: usize) -> Poly {
        let mut v = vec![Fe::ZERO; n + 1];
        v[n] = c;
        Poly::new(field, v)
    }

    /// Builds a polynomial from integer coefficients, lowest first.
    pub fn from_ints(field: &Field, c: &[i64]) -> Poly {
        Poly::new(field, c.iter().map(|&n| field.from_int(n)).collect())
    }

    /// `x - a`.
    pub fn linear(field: &Field, a: Fe) -> Poly {
        Poly::new(field, vec![field.neg(a), Fe::ONE])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Fe> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Fe {
        self.coeffs.get(i).copied().unwrap_or(Fe::ZERO)
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg0(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lead(&self) -> Fe {
        self.coeffs.last().copied().unwrap_or(Fe::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == Fe::ONE
    }

    pub fn scale(&self, c: Fe) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Divides by the leading coefficient. The zero polynomial is returned
    /// unchanged.
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.lead()).expect("leading coefficient is nonzero");
        self.scale(inv)
    }

    pub fn div_rem(&self, other: &Poly) -> Result<(Poly, Poly)> {
        let f = &self.field;
        let dg = other.degree().ok_or(Error::DivisionByZero)?;
        if self.coeffs.len() <= dg {
            return Ok((Poly::zero(f), self.clone()));
        }
        let li = f.inv(other.lead())?;
        let mut r = self.coeffs.clone();
        let mut q = vec![Fe::ZERO; r.len() - dg];
        for i in (dg..r.len()).rev() {
            let c = f.mul(r[i], li);
            if c.is_zero() {
                continue;
            }
            q[i - dg] = c;
            for (j, &b) in other.coeffs.iter().enumerate() {
                r[i - dg + j] = f.sub(r[i - dg + j], f.mul(c, b));
            }
        }
        r.truncate(dg);
        Ok((Poly::new(f, q), Poly::new(f, r)))
    }

    pub fn rem(&self, other: &Poly) -> Poly {
        self.div_rem(other).expect("nonzero divisor").1
    }

    /// Exact quotient; panics in debug builds when the division leaves a
    /// remainder.
    pub fn exact_div(&self, other: &Poly) -> Poly {
        let (q, r) = self.div_rem(other).expect("nonzero divisor");
        debug_assert!(r.is_zero(), "inexact division");
        q
    }

    pub fn divides(&self, other: &Poly) -> bool {
        !self.is_zero() && other.rem(self).is_zero()
    }

    /// Monic greatest common divisor (zero when both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: returns `(g, s, t)` with `s·self + t·other = g`
    /// and `g` monic.
    pub fn xgcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero");
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let li = f.inv(r0.lead()).expect("nonzero");
        (r0.scale(li), s0.scale(li), t0.scale(li))
    }

    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        Poly::new(
            f,
            self.coeffs.iter().enumerate().skip(1).map(|(i, &c)| f.mul_int(c, i as i64)).collect(),
        )
    }

    pub fn eval(&self, a: Fe) -> Fe {
        let f = &self.field;
        self.coeffs.iter().rev().fold(Fe::ZERO, |acc, &c| f.add(f.mul(acc, a), c))
    }

    pub fn pow(&self, mut n: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.field);
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self^n mod m`.
    pub fn pow_mod(&self, mut n: u64, m: &Poly) -> Poly {
        let mut base = self.rem(m);
        let mut acc = Poly::one(&self.field).rem(m);
        while n > 0 {
            if n & 1 == 1 {
                acc = (&acc * &base).rem(m);
            }
            n >>= 1;
            if n > 0 {
                base = (&base * &base).rem(m);
            }
        }
        acc
    }

    /// `self(g(x))`.
    pub fn compose(&self, g: &Poly) -> Poly {
        let f = &self.field;
        self.coeffs.iter().rev().fold(Poly::zero(f), |acc, &c| &(&acc * g) + &Poly::constant(f, c))
    }

    /// `self(x + a)`.
    pub fn shift(&self, a: Fe) -> Poly {
        Poly::new(&self.field, shift_slice(&self.field, &self.coeffs, &a))
    }

    /// `x^n · self(1/x)`; requires `n >= deg self`.
    pub fn reverse(&self, n: usize) -> Poly {
        debug_assert!(self.coeffs.len() <= n + 1);
        let mut v = vec![Fe::ZERO; n + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            v[n - i] = c;
        }
        Poly::new(&self.field, v)
    }

    /// Order of vanishing at `x = a` (`None` for the zero polynomial).
    pub fn order_at(&self, a: Fe) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let s = self.shift(a);
        s.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Maps every coefficient through a field embedding.
    pub fn rebase(&self, big: &Field, emb: &Embedding) -> Poly {
        Poly::new(big, self.coeffs.iter().map(|&c| emb.apply(c)).collect())
    }

    /// `true` when every monomial has exponent divisible by `p`.
    pub fn is_in_x_p(&self) -> bool {
        let p = self.field.characteristic() as usize;
        self.coeffs.iter().enumerate().all(|(i, c)| c.is_zero() || i % p == 0)
    }

    /// Renders in the expression grammar accepted by [`parse_map`].
    pub fn render(&self) -> String {
        self.render_var("x")
    }

    pub fn render_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let f = &self.field;
        let p = f.characteristic() as i64;
        let mut out = String::new();
        for i in (0..self.coeffs.len()).rev() {
            let c = self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            // Prime-field coefficients print as signed residues of smallest
            // absolute value, so x^7-2*x reads naturally.
            let (neg, body) = if f.degree() == 1 {
                let v = f.index(c) as i64;
                if v > p / 2 && p > 2 {
                    (true, (p - v).to_string())
                } else {
                    (false, v.to_string())
                }
            } else {
                let s = f.format(c);
                if s.contains('+') {
                    (false, format!("({s})"))
                } else {
                    (false, s)
                }
            };
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            let term = if i == 0 {
                body
            } else if body == "1" {
                mono
            } else {
                format!("{body}*{mono}")
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { "-" } else { "+" });
            }
            out.push_str(&term);
        }
        out
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let f = &self.field;
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new(f, (0..n).map(|i| f.add(self.coeff(i), o.coeff(i))).collect())
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let f = &self.field;
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new(f, (0..n).map(|i| f.sub(self.coeff(i), o.coeff(i))).collect())
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        let f = &self.field;
        if self.is_zero() || o.is_zero() {
            return Poly::zero(f);
        }
        let mut v = vec![Fe::ZERO; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                v[i + j] = f.add(v[i + j], f.mul(a, b));
            }
        }
        Poly::new(f, v)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_and_gcd() {
        let f = Field::prime(5).unwrap();
        let a = Poly::from_ints(&f, &[-1, 0, 1]);
        let b = Poly::from_ints(&f, &[-1, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q, Poly::from_ints(&f, &[1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&b), b);
        let (g, s, t) = a.xgcd(&Poly::from_ints(&f, &[2, 1]));
        assert_eq!(&(&s * &a) + &(&t * &Poly::from_ints(&f, &[2, 1])), g);
        assert_eq!(g, Poly::one(&f));
    }

    #[test]
    fn shift_matches_composition() {
        let f = Field::new(3, 2, None).unwrap();
        let p = Poly::new(&f, f.elements().take(6).collect());
        let a = f.generator();
        let lin = Poly::new(&f, vec![a, Fe::ONE]);
        assert_eq!(p.shift(a), p.compose(&lin));
    }

    #[test]
    fn render_uses_signed_residues() {
        let f = Field::prime(5).unwrap();
        assert_eq!(Poly::from_ints(&f, &[0, -2, 0, 0, 0, 0, 0, 1]).render(), "x^7-2*x");
        assert_eq!(Poly::zero(&f).render(), "0");
        assert_eq!(Poly::from_ints(&f, &[-1]).render(), "-1");
    }
}
