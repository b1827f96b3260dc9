use crate::field::{Fe, Field, FieldOps};

use super::Poly;

/// The residue field `F_q[y]/(φ)` of a closed point, with elements stored as
/// coefficient vectors of length `deg φ`.
#[derive(Clone, Debug)]
pub struct ResidueField {
    base: Field,
    modulus: Poly,
    m: usize,
}

impl ResidueField {
    /// `modulus` must be monic and irreducible of positive degree.
    pub fn new(modulus: &Poly) -> ResidueField {
        let m = modulus.degree().expect("nonzero modulus");
        assert!(m >= 1 && modulus.is_monic());
        ResidueField { base: modulus.field().clone(), modulus: modulus.clone(), m }
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    fn pad(&self, p: Poly) -> Vec<Fe> {
        let mut v = p.into_coeffs();
        v.resize(self.m, Fe::ZERO);
        v
    }

    fn to_poly(&self, a: &[Fe]) -> Poly {
        Poly::new(&self.base, a.to_vec())
    }

    /// Image of a base-field element.
    pub fn embed(&self, c: Fe) -> Vec<Fe> {
        self.pad(Poly::constant(&self.base, c))
    }

    /// The class of `y`, a root of the modulus.
    pub fn root(&self) -> Vec<Fe> {
        self.pad(Poly::x(&self.base).rem(&self.modulus))
    }

    /// Embeds a base-field coefficient vector.
    pub fn embed_all(&self, c: &[Fe]) -> Vec<Vec<Fe>> {
        c.iter().map(|&x| self.embed(x)).collect()
    }
}

impl FieldOps for ResidueField {
    type Elem = Vec<Fe>;

    fn characteristic(&self) -> u32 {
        self.base.characteristic()
    }
    fn zero(&self) -> Vec<Fe> {
        vec![Fe::ZERO; self.m]
    }
    fn one(&self) -> Vec<Fe> {
        self.embed(Fe::ONE)
    }
    fn from_int(&self, n: i64) -> Vec<Fe> {
        self.embed(self.base.from_int(n))
    }
    fn is_zero(&self, a: &Vec<Fe>) -> bool {
        a.iter().all(|c| c.is_zero())
    }
    fn add(&self, a: &Vec<Fe>, b: &Vec<Fe>) -> Vec<Fe> {
        a.iter().zip(b).map(|(&x, &y)| self.base.add(x, y)).collect()
    }
    fn sub(&self, a: &Vec<Fe>, b: &Vec<Fe>) -> Vec<Fe> {
        a.iter().zip(b).map(|(&x, &y)| self.base.sub(x, y)).collect()
    }
    fn mul(&self, a: &Vec<Fe>, b: &Vec<Fe>) -> Vec<Fe> {
        if self.m == 1 {
            return vec![self.base.mul(a[0], b[0])];
        }
        self.pad((&self.to_poly(a) * &self.to_poly(b)).rem(&self.modulus))
    }
    fn inv(&self, a: &Vec<Fe>) -> Option<Vec<Fe>> {
        if FieldOps::is_zero(self, a) {
            return None;
        }
        if self.m == 1 {
            return self.base.inv(a[0]).ok().map(|x| vec![x]);
        }
        let (g, s, _) = self.to_poly(a).xgcd(&self.modulus);
        debug_assert!(g.degree() == Some(0));
        Some(self.pad(s.rem(&self.modulus)))
    }
    fn neg(&self, a: &Vec<Fe>) -> Vec<Fe> {
        a.iter().map(|&x| self.base.neg(x)).collect()
    }
}
