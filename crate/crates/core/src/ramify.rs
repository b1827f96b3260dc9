//! Ramification indices, different exponents and full ramification
//! profiles of separable maps `P¹ → P¹`.
//!
//! Finite ramification is located through the polynomial
//! `W = num'·den − num·den'`: at every finite point, poles included, its
//! order of vanishing is the different exponent. The distinct irreducible
//! factors of `W` are therefore exactly the ramified closed points away from
//! infinity, and each is analysed by a local expansion over its residue
//! field. Infinity is always examined separately.

use crate::error::{Error, Result};
use crate::field::{Field, FieldOps};
use crate::poly::{distinct_irreducible_factors, local_expansion, LocalSeries, Mobius, Place, PointP1, Poly, RatMap, ResidueField};

/// A closed point of `P¹` over the base field: infinity, or the zero set of
/// a monic irreducible polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosedPoint {
    Finite(Poly),
    Infinity,
}

impl ClosedPoint {
    pub fn from_point(field: &Field, p: &PointP1) -> ClosedPoint {
        match *p {
            PointP1::Affine(a) => ClosedPoint::Finite(Poly::linear(field, a)),
            PointP1::Infinity => ClosedPoint::Infinity,
        }
    }

    /// Degree of the residue field over the base field.
    pub fn degree(&self) -> usize {
        match self {
            ClosedPoint::Finite(p) => p.deg0(),
            ClosedPoint::Infinity => 1,
        }
    }

    /// The rational point, when the degree is 1.
    pub fn rational(&self) -> Option<PointP1> {
        match self {
            ClosedPoint::Infinity => Some(PointP1::Infinity),
            ClosedPoint::Finite(p) if p.deg0() == 1 => Some(PointP1::Affine(p.field().neg(p.coeff(0)))),
            ClosedPoint::Finite(_) => None,
        }
    }

    /// `inf`, the value of a rational point, or the defining polynomial.
    pub fn render(&self) -> String {
        match self {
            ClosedPoint::Infinity => "inf".into(),
            ClosedPoint::Finite(p) => match self.rational() {
                Some(pt) => pt.format(p.field()),
                None => format!("{}=0", p.render()),
            },
        }
    }

    /// Image under a Möbius transformation.
    pub fn transform(&self, field: &Field, m: &Mobius) -> ClosedPoint {
        if let Some(pt) = self.rational() {
            return ClosedPoint::from_point(field, &m.apply(&pt));
        }
        let ClosedPoint::Finite(phi) = self else { unreachable!() };
        // Roots r map to (a r + b)/(c r + d); substitute the inverse.
        let (a, b, c, d) = m.inverse().entries();
        let n = phi.deg0();
        let l1 = Poly::new(field, vec![b, a]);
        let l2 = Poly::new(field, vec![d, c]);
        let mut acc = Poly::zero(field);
        for (i, &ci) in phi.coeffs().iter().enumerate() {
            acc = &acc + &(&l1.pow(i as u64) * &l2.pow((n - i) as u64)).scale(ci);
        }
        ClosedPoint::Finite(acc.monic())
    }

    fn sort_key(&self, field: &Field) -> (bool, usize, Vec<u32>) {
        match self {
            ClosedPoint::Infinity => (true, 1, Vec::new()),
            ClosedPoint::Finite(p) => (false, p.deg0(), p.coeffs().iter().map(|&c| field.index(c)).collect()),
        }
    }
}

/// Local ramification data at one closed point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamPoint {
    pub point: ClosedPoint,
    /// Degree of the closed point.
    pub degree: usize,
    pub e: usize,
    pub different: usize,
    pub wild: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamProfile {
    pub map_degree: usize,
    pub points: Vec<RamPoint>,
    /// Sum of the different exponents over geometric points, i.e. each
    /// closed point weighted by its degree.
    pub total_different: usize,
    pub rh_ok: bool,
}

impl RamProfile {
    pub fn find(&self, p: &ClosedPoint) -> Option<&RamPoint> {
        self.points.iter().find(|r| &r.point == p)
    }

    pub fn at_infinity(&self) -> Option<&RamPoint> {
        self.find(&ClosedPoint::Infinity)
    }

    /// Profile with one point removed; used to exercise the defect.
    pub fn without(&self, p: &ClosedPoint) -> RamProfile {
        let points: Vec<RamPoint> = self.points.iter().filter(|r| &r.point != p).cloned().collect();
        let total_different = points.iter().map(|r| r.degree * r.different).sum();
        RamProfile { map_degree: self.map_degree, rh_ok: total_different + 2 == 2 * self.map_degree, points, total_different }
    }
}

pub fn is_separable(f: &RatMap) -> bool {
    f.is_separable()
}

fn series_order(f: &RatMap) -> usize {
    2 * f.degree() + 1
}

fn read_series<F: FieldOps>(field: &F, s: &LocalSeries<F::Elem>) -> Result<(usize, usize)> {
    let e = s.valuation(field).ok_or(Error::TruncationExhausted(s.order))?;
    let j = s.first_unit_exponent(field).ok_or(Error::TruncationExhausted(s.order))?;
    Ok((e, j - 1))
}

/// `(e, d)` at a closed point.
pub fn local_data(f: &RatMap, p: &ClosedPoint) -> Result<(usize, usize)> {
    if !f.is_separable() {
        return Err(Error::InseparableMap);
    }
    let field = f.field();
    let order = series_order(f);
    if let Some(pt) = p.rational() {
        let (_, s) = f.taylor_shift(&pt, order);
        return read_series(field, &s);
    }
    let ClosedPoint::Finite(phi) = p else { unreachable!() };
    let r = ResidueField::new(phi);
    let num = r.embed_all(f.num().coeffs());
    let den = r.embed_all(f.den().coeffs());
    let (_, s) = local_expansion(&r, &num, &den, f.degree(), &Place::Finite(r.root()), order);
    read_series(&r, &s)
}

pub fn ramification_index(f: &RatMap, p: &PointP1) -> Result<usize> {
    Ok(local_data(f, &ClosedPoint::from_point(f.field(), p))?.0)
}

pub fn different_exponent(f: &RatMap, p: &PointP1) -> Result<usize> {
    Ok(local_data(f, &ClosedPoint::from_point(f.field(), p))?.1)
}

fn ram_point(f: &RatMap, point: ClosedPoint) -> Result<RamPoint> {
    let (e, different) = local_data(f, &point)?;
    let p = f.field().characteristic() as usize;
    Ok(RamPoint { degree: point.degree(), point, e, different, wild: e % p == 0 })
}

/// All ramified closed points of a separable map, ordered by degree and
/// then by the coefficients of the defining polynomial, infinity last.
pub fn ramification_profile(f: &RatMap) -> Result<RamProfile> {
    if !f.is_separable() {
        return Err(Error::InseparableMap);
    }
    let field = f.field().clone();
    let mut points = Vec::new();
    for phi in distinct_irreducible_factors(&f.wronskian()) {
        let rp = ram_point(f, ClosedPoint::Finite(phi))?;
        if rp.e >= 2 || rp.different >= 1 {
            points.push(rp);
        }
    }
    let inf = ram_point(f, ClosedPoint::Infinity)?;
    if inf.e >= 2 || inf.different >= 1 {
        points.push(inf);
    }
    points.sort_by_key(|r| r.point.sort_key(&field));
    let total_different = points.iter().map(|r| r.degree * r.different).sum();
    Ok(RamProfile { map_degree: f.degree(), rh_ok: total_different + 2 == 2 * f.degree(), points, total_different })
}

/// `Σ d_P − (2·degree − 2)`.
pub fn riemann_hurwitz_defect(profile: &RamProfile) -> i64 {
    profile.total_different as i64 - (2 * profile.map_degree as i64 - 2)
}

/// Ramified points of `f` over `F_{q^m}` found by scanning every point of
/// `P¹(F_{q^m})`, as `(point, e, d)` in the extension field.
pub fn scan_extension(f: &RatMap, m: u32) -> Result<(Field, Vec<(PointP1, usize, usize)>)> {
    if !f.is_separable() {
        return Err(Error::InseparableMap);
    }
    let (big, emb) = f.field().extension(m)?;
    let g = f.rebase(&big, &emb);
    let order = series_order(&g);
    let mut out = Vec::new();
    let pts = big.elements().map(PointP1::Affine).chain(std::iter::once(PointP1::Infinity));
    for pt in pts {
        let (_, s) = g.taylor_shift(&pt, order);
        let (e, d) = read_series(&big, &s)?;
        if e >= 2 || d >= 1 {
            out.push((pt, e, d));
        }
    }
    Ok((big, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fe;
    use crate::poly::parse_map;

    #[test]
    fn square_in_char_5() {
        let f = Field::prime(5).unwrap();
        let m = parse_map("x^2", &f).unwrap();
        let prof = ramification_profile(&m).unwrap();
        assert_eq!(prof.points.len(), 2);
        assert_eq!(prof.points[0].point, ClosedPoint::Finite(Poly::x(&f)));
        assert_eq!((prof.points[0].e, prof.points[0].different), (2, 1));
        assert_eq!((prof.points[1].e, prof.points[1].different), (2, 1));
        assert!(prof.rh_ok);
        assert_eq!(riemann_hurwitz_defect(&prof), 0);
        let dropped = prof.without(&ClosedPoint::Infinity);
        assert_eq!(riemann_hurwitz_defect(&dropped), -1);
    }

    #[test]
    fn indices_and_differents() {
        let f = Field::prime(5).unwrap();
        let zero = PointP1::Affine(Fe::ZERO);
        assert_eq!(ramification_index(&parse_map("x^2", &f).unwrap(), &zero).unwrap(), 2);
        assert_eq!(ramification_index(&parse_map("x^3", &f).unwrap(), &PointP1::Affine(Fe::ONE)).unwrap(), 1);
        let w = parse_map("x^5+x^6", &f).unwrap();
        assert_eq!(ramification_index(&w, &zero).unwrap(), 5);
        assert_eq!(different_exponent(&w, &zero).unwrap(), 5);
        for p in [2u64, 3, 5, 7] {
            let fp = Field::prime(p).unwrap();
            let as_ = parse_map(&format!("x^{p}-x"), &fp).unwrap();
            assert_eq!(ramification_index(&as_, &PointP1::Infinity).unwrap(), p as usize);
            assert_eq!(different_exponent(&as_, &PointP1::Infinity).unwrap(), 2 * p as usize - 2);
        }
        assert_eq!(ramification_index(&parse_map("x^5", &f).unwrap(), &zero), Err(Error::InseparableMap));
    }

    #[test]
    fn cube_in_char_7() {
        let f = Field::prime(7).unwrap();
        let prof = ramification_profile(&parse_map("x^3", &f).unwrap()).unwrap();
        assert_eq!(prof.points.iter().map(|r| (r.e, r.different)).collect::<Vec<_>>(), vec![(3, 2), (3, 2)]);
        assert_eq!(riemann_hurwitz_defect(&prof), 0);
    }

    #[test]
    fn family_member_at_infinity() {
        let f = Field::prime(5).unwrap();
        let m = parse_map("(x^10+x^6+1)/(x^5+x)", &f).unwrap();
        assert!(m.is_separable());
        assert_eq!(ramification_index(&m, &PointP1::Infinity).unwrap(), 5);
    }

    #[test]
    fn degree_15_wild_map_profile() {
        let f = Field::prime(5).unwrap();
        let m = parse_map("(x^5*(x^10+x^7-2*x)+1)/(x^10+x^7-2*x)", &f).unwrap();
        let prof = ramification_profile(&m).unwrap();
        assert_eq!(prof.total_different, 28);
        let inf = prof.at_infinity().unwrap();
        assert_eq!((inf.e, inf.different), (5, 22));
        let finite: Vec<_> = prof.points.iter().filter(|r| r.point != ClosedPoint::Infinity).collect();
        assert_eq!(finite.iter().map(|r| r.degree).sum::<usize>(), 6);
        assert!(finite.iter().all(|r| r.e == 2 && r.different == 1));
    }
}
