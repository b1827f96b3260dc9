use crate::error::{Error, Result};
use crate::field::{Embedding, Fe, Field};

use super::series::{local_expansion, LocalSeries, Place};
use super::{Mobius, Poly};

/// A point of `P¹` over the field the surrounding computation lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PointP1 {
    Affine(Fe),
    Infinity,
}

impl PointP1 {
    pub fn place(&self) -> Place<Fe> {
        match *self {
            PointP1::Affine(a) => Place::Finite(a),
            PointP1::Infinity => Place::Infinity,
        }
    }

    pub fn from_place(p: &Place<Fe>) -> PointP1 {
        match *p {
            Place::Finite(a) => PointP1::Affine(a),
            Place::Infinity => PointP1::Infinity,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, PointP1::Infinity)
    }

    pub fn rebase(&self, emb: &Embedding) -> PointP1 {
        match *self {
            PointP1::Affine(a) => PointP1::Affine(emb.apply(a)),
            PointP1::Infinity => PointP1::Infinity,
        }
    }

    /// Text form accepted by [`super::parse_point`].
    pub fn format(&self, field: &Field) -> String {
        match *self {
            PointP1::Affine(a) => field.format(a),
            PointP1::Infinity => "inf".into(),
        }
    }

    /// Sort key: affine points by index, infinity last.
    pub fn sort_key(&self, field: &Field) -> u64 {
        match *self {
            PointP1::Affine(a) => field.index(a) as u64,
            PointP1::Infinity => u64::MAX,
        }
    }
}

/// A reduced rational map `num/den` of positive degree.
///
/// Normal form: `den` is monic when it is non-constant; otherwise `num` is
/// monic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMap {
    num: Poly,
    den: Poly,
    degree: usize,
}

/// Cancels the common factor of `num` and `den` and normalizes.
pub fn reduce_map(num: &Poly, den: &Poly) -> Result<RatMap> {
    if num.field() != den.field() {
        return Err(Error::FieldMismatch);
    }
    if num.is_zero() {
        return Err(Error::ZeroMap);
    }
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let g = num.gcd(den);
    let (n, d) = if g.is_constant() { (num.clone(), den.clone()) } else { (num.exact_div(&g), den.exact_div(&g)) };
    let degree = n.deg0().max(d.deg0());
    if degree == 0 {
        return Err(Error::ConstantMap);
    }
    let f = n.field().clone();
    let s = if d.is_constant() { f.inv(n.lead())? } else { f.inv(d.lead())? };
    Ok(RatMap { num: n.scale(s), den: d.scale(s), degree })
}

impl RatMap {
    pub fn from_poly(p: &Poly) -> Result<RatMap> {
        reduce_map(p, &Poly::one(p.field()))
    }

    pub fn field(&self) -> &Field {
        self.num.field()
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn evaluate(&self, p: &PointP1) -> PointP1 {
        let f = self.field();
        match *p {
            PointP1::Affine(a) => {
                let d = self.den.eval(a);
                if d.is_zero() {
                    PointP1::Infinity
                } else {
                    PointP1::Affine(f.div(self.num.eval(a), d).expect("nonzero"))
                }
            }
            PointP1::Infinity => {
                let (dn, dd) = (self.num.deg0(), self.den.deg0());
                if dn > dd {
                    PointP1::Infinity
                } else if dn < dd {
                    PointP1::Affine(Fe::ZERO)
                } else {
                    PointP1::Affine(f.div(self.num.lead(), self.den.lead()).expect("nonzero"))
                }
            }
        }
    }

    /// Local expansion at `p` to the given order; returns `f(p)` and the
    /// series of the target coordinate in the source coordinate.
    pub fn taylor_shift(&self, p: &PointP1, order: usize) -> (PointP1, LocalSeries) {
        let (v, s) = local_expansion(self.field(), self.num.coeffs(), self.den.coeffs(), self.degree, &p.place(), order);
        (PointP1::from_place(&v), s)
    }

    /// `num'·den − num·den'`; zero exactly when the map is inseparable.
    pub fn wronskian(&self) -> Poly {
        &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative())
    }

    pub fn is_separable(&self) -> bool {
        !self.wronskian().is_zero()
    }

    pub fn derivative(&self) -> RationalFunction {
        RationalFunction::new(&self.wronskian(), &(&self.den * &self.den))
    }

    /// `tgt ∘ f ∘ src⁻¹`.
    pub fn conjugate(&self, src: &Mobius, tgt: &Mobius) -> RatMap {
        let f = self.field();
        let s = src.inverse();
        let (a, b, c, d) = s.entries();
        let l1 = Poly::new(f, vec![b, a]);
        let l2 = Poly::new(f, vec![d, c]);
        let n = self.degree;
        let mut p1 = vec![Poly::one(f)];
        let mut p2 = vec![Poly::one(f)];
        for i in 0..n {
            p1.push(&p1[i] * &l1);
            p2.push(&p2[i] * &l2);
        }
        let hom = |poly: &Poly| {
            let mut acc = Poly::zero(f);
            for (i, &ci) in poly.coeffs().iter().enumerate() {
                if !ci.is_zero() {
                    acc = &acc + &(&p1[i] * &p2[n - i]).scale(ci);
                }
            }
            acc
        };
        let (n1, d1) = (hom(&self.num), hom(&self.den));
        let (ta, tb, tc, td) = tgt.entries();
        let n2 = &n1.scale(ta) + &d1.scale(tb);
        let d2 = &n1.scale(tc) + &d1.scale(td);
        reduce_map(&n2, &d2).expect("Möbius conjugation preserves the degree")
    }

    /// Same map with coefficients pushed into an extension field.
    pub fn rebase(&self, big: &Field, emb: &Embedding) -> RatMap {
        reduce_map(&self.num.rebase(big, emb), &self.den.rebase(big, emb)).expect("embedding preserves degree")
    }

    /// Splits `num = q·den + r` with `deg r < deg den`; returns `(q, r)` with
    /// `q` the polynomial part of the map.
    pub fn polynomial_part(&self) -> (Poly, Poly) {
        self.num.div_rem(&self.den).expect("nonzero denominator")
    }

    /// `f + g` for a polynomial `g`.
    pub fn add_poly(&self, g: &Poly) -> Result<RatMap> {
        reduce_map(&(&self.num + &(g * &self.den)), &self.den)
    }

    /// `1/f`, that is postcomposition with `y ↦ 1/y`.
    pub fn invert_target(&self) -> RatMap {
        reduce_map(&self.den, &self.num).expect("inversion preserves the degree")
    }

    pub fn render(&self) -> String {
        if self.den.is_constant() {
            let inv = self.field().inv(self.den.lead()).expect("nonzero");
            self.num.scale(inv).render()
        } else {
            format!("({})/({})", self.num.render(), self.den.render())
        }
    }
}

/// A rational function kept as a reduced fraction with monic denominator.
/// The zero function is represented with denominator 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunction {
    pub num: Poly,
    pub den: Poly,
}

impl RationalFunction {
    pub fn new(num: &Poly, den: &Poly) -> RationalFunction {
        let f = num.field();
        if num.is_zero() {
            return RationalFunction { num: num.clone(), den: Poly::one(f) };
        }
        let g = num.gcd(den);
        let (n, d) = (num.exact_div(&g), den.exact_div(&g));
        let s = f.inv(d.lead()).expect("nonzero denominator");
        RationalFunction { num: n.scale(s), den: d.scale(s) }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn render(&self) -> String {
        if self.den.is_constant() {
            self.num.render()
        } else {
            format!("({})/({})", self.num.render(), self.den.render())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> Field {
        Field::prime(5).unwrap()
    }

    #[test]
    fn reduce_examples() {
        let f = f5();
        let m = reduce_map(&Poly::from_ints(&f, &[-1, 0, 1]), &Poly::from_ints(&f, &[-1, 1])).unwrap();
        assert_eq!(m.degree(), 1);
        assert_eq!(m.render(), "x+1");
        let xp = reduce_map(&Poly::monomial(&f, Fe::ONE, 5), &Poly::one(&f)).unwrap();
        assert_eq!(xp.degree(), 5);
        assert!(!xp.is_separable());
        assert_eq!(reduce_map(&Poly::zero(&f), &Poly::x(&f)).unwrap_err(), Error::ZeroMap);
        let c = Poly::from_ints(&f, &[1, 0, 1]);
        assert_eq!(reduce_map(&c, &c).unwrap_err(), Error::ConstantMap);
    }

    #[test]
    fn evaluate_examples() {
        let f = f5();
        let inv = reduce_map(&Poly::one(&f), &Poly::x(&f)).unwrap();
        assert_eq!(inv.evaluate(&PointP1::Affine(Fe::ZERO)), PointP1::Infinity);
        assert_eq!(inv.evaluate(&PointP1::Infinity), PointP1::Affine(Fe::ZERO));
        let g = reduce_map(&Poly::from_ints(&f, &[1, 0, 1]), &Poly::x(&f)).unwrap();
        assert_eq!(g.evaluate(&PointP1::Infinity), PointP1::Infinity);
    }

    #[test]
    fn taylor_examples() {
        let f = f5();
        let sq = RatMap::from_poly(&Poly::from_ints(&f, &[0, 0, 1])).unwrap();
        let (v, s) = sq.taylor_shift(&PointP1::Affine(Fe::ZERO), 3);
        assert_eq!(v, PointP1::Affine(Fe::ZERO));
        assert_eq!(s.coeffs, vec![Fe::ZERO, Fe::ZERO, Fe::ONE, Fe::ZERO]);
        let x5 = RatMap::from_poly(&Poly::monomial(&f, Fe::ONE, 5)).unwrap();
        let (v, s) = x5.taylor_shift(&PointP1::Affine(Fe::ONE), 5);
        assert_eq!(v, PointP1::Affine(Fe::ONE));
        assert_eq!(s.coeffs, vec![Fe::ZERO, Fe::ZERO, Fe::ZERO, Fe::ZERO, Fe::ZERO, Fe::ONE]);
    }

    #[test]
    fn derivative_examples() {
        let f = f5();
        let x5 = RatMap::from_poly(&Poly::monomial(&f, Fe::ONE, 5)).unwrap();
        assert!(x5.derivative().is_zero());
        let x3 = RatMap::from_poly(&Poly::monomial(&f, Fe::ONE, 3)).unwrap();
        assert_eq!(x3.derivative().render(), "-2*x^2");
        assert_eq!(x3.derivative().num, Poly::from_ints(&f, &[0, 0, 3]));
        let f3 = Field::prime(3).unwrap();
        for t in 0..3 {
            let m = RatMap::from_poly(&Poly::from_ints(&f3, &[0, 1, 0, t, 0, 1])).unwrap();
            assert_eq!(m.derivative().num, Poly::from_ints(&f3, &[1, 0, 0, 0, 2]));
        }
    }

    #[test]
    fn conjugation_by_inversion_fixes_square() {
        let f = Field::prime(7).unwrap();
        let sq = RatMap::from_poly(&Poly::from_ints(&f, &[0, 0, 1])).unwrap();
        let id = Mobius::identity(&f);
        assert_eq!(sq.conjugate(&id, &id), sq);
        let inv = Mobius::new(&f, Fe::ZERO, Fe::ONE, Fe::ONE, Fe::ZERO).unwrap();
        assert_eq!(sq.conjugate(&inv, &inv), sq);
    }
}
